use super::{FinSimplicialSet, Simplex, SimplicialError};

fn subset_name(vertices: &[usize], k: usize) -> String {
    let sep = if k < 10 { "" } else { "_" };
    let parts: Vec<String> = vertices.iter().map(|v| v.to_string()).collect();
    format!("v{}", parts.join(sep))
}

/// Nonempty subsets of `{0..=k}` as increasing vertex lists, by size then lexicographically.
fn simplices_of(k: usize, include_top: bool) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (1u64..(1 << (k + 1)))
        .map(|mask| (0..=k).filter(|v| mask >> v & 1 == 1).collect::<Vec<_>>())
        .filter(|s: &Vec<usize>| include_top || s.len() != k + 1)
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn simplicial_complex(k: usize, include_top: bool) -> Result<FinSimplicialSet, SimplicialError> {
    let all = simplices_of(k, include_top);
    let pos = |s: &[usize]| all.iter().position(|t| t == s).unwrap() as u32;
    let names = all.iter().map(|s| subset_name(s, k)).collect();
    let dims = all.iter().map(|s| s.len() - 1).collect();
    let faces = all
        .iter()
        .map(|s| {
            if s.len() == 1 {
                return Vec::new();
            }
            (0..s.len())
                .map(|i| {
                    let mut f = s.clone();
                    f.remove(i);
                    Simplex::nondegenerate(pos(&f), f.len() - 1)
                })
                .collect()
        })
        .collect();
    FinSimplicialSet::new(names, dims, faces, 0)
}

impl FinSimplicialSet {
    /// The standard `k`-simplex `Δ_k`, pointed at vertex 0.
    pub fn delta(k: usize) -> Result<Self, SimplicialError> {
        if k >= 64 {
            return Err(SimplicialError::InvalidParameter(format!("Δ_{k} is too large")));
        }
        simplicial_complex(k, true)
    }

    /// The boundary `∂Δ_k`, pointed at vertex 0.
    pub fn boundary_delta(k: usize) -> Result<Self, SimplicialError> {
        if k == 0 || k >= 64 {
            return Err(SimplicialError::InvalidParameter(format!("∂Δ_{k} needs 1 <= k < 64")));
        }
        simplicial_complex(k, false)
    }

    /// A single vertex.
    pub fn point() -> Self {
        Self::new(vec!["*".into()], vec![0], vec![vec![]], 0).expect("the point")
    }

    /// `S^n` with one vertex `*` and one `n`-simplex `σ` all of whose faces
    /// are degenerate on `*`.
    pub fn sphere_minimal(n: usize) -> Result<Self, SimplicialError> {
        if n == 0 || n >= 64 {
            return Err(SimplicialError::InvalidParameter(format!("S^{n} needs 1 <= n < 64")));
        }
        let faces = vec![vec![], vec![Simplex::constant(0, n - 1); n + 1]];
        Self::new(vec!["*".into(), "σ".into()], vec![0, n], faces, 0)
    }

    /// The minimal circle.
    pub fn circle() -> Self {
        Self::sphere_minimal(1).expect("S^1")
    }

    /// `S^1 × S^1` as the diagonal product of two minimal circles.
    pub fn torus() -> Self {
        Self::circle().product(&Self::circle())
    }
}
