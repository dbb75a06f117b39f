//! Finite pointed simplicial sets stored by their nondegenerate simplices.
//!
//! Every simplex is kept in Eilenberg–Zilber normal form: a nondegenerate
//! simplex together with a monotone surjection `[n] -> [dim]`. The
//! surjection encodes the degeneracy word; its repeated positions are the
//! indices `j1 > ... > jr` of `s_{j1} ... s_{jr}`.

mod constructions;
mod models;
mod pair;
mod text;

pub use constructions::Pushout;
pub use pair::{SimplicialPair, Zone};
pub use text::parse_simplicial_text;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SimplicialError {
    #[error("index {index} out of range at level {level}")]
    IndexOutOfRange { level: usize, index: usize },
    #[error("simplicial identity fails: d_{i} d_{j} != d_{} d_{i} on `{name}`", .j - 1)]
    IdentityFails { name: String, i: usize, j: usize },
    #[error("face {i} of `{name}` has the wrong dimension")]
    FaceDimension { name: String, i: usize },
    #[error("`{0}` is not a 0-simplex")]
    BadBasepoint(String),
    #[error("subobject is not closed under faces at `{0}`")]
    NotClosed(String),
    #[error("subobject does not contain the basepoint")]
    UnpointedSubobject,
    #[error("map is not an inclusion: {0}")]
    NotInjective(String),
    #[error("unknown simplex `{0}`")]
    UnknownSimplex(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// A simplex `x = σ ∘ surj` with `σ` nondegenerate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    pub nd: u32,
    pub surj: Vec<u8>,
}

impl Simplex {
    pub fn nondegenerate(nd: u32, dim: usize) -> Self {
        Simplex { nd, surj: (0..=dim as u8).collect() }
    }

    /// The fully degenerate simplex on a vertex at level `n`.
    pub fn constant(vertex: u32, n: usize) -> Self {
        Simplex { nd: vertex, surj: vec![0; n + 1] }
    }

    pub fn level(&self) -> usize {
        self.surj.len() - 1
    }

    pub fn nd_dim(&self) -> usize {
        *self.surj.last().unwrap() as usize
    }

    pub fn is_degenerate(&self) -> bool {
        self.level() != self.nd_dim()
    }

    /// Indices `j` with `x = s_j y` for some `y`.
    pub fn degeneracy_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.surj.windows(2).enumerate().filter(|(_, w)| w[0] == w[1]).map(|(j, _)| j)
    }

    /// Bitmask of [`Simplex::degeneracy_indices`]; levels are below 64.
    pub fn degeneracy_mask(&self) -> u64 {
        self.degeneracy_indices().fold(0, |m, j| m | (1 << j))
    }
}

/// Splits a monotone map into `mono ∘ epi`; returns `(epi, image)`.
fn factor(map: &[u8]) -> (Vec<u8>, Vec<u8>) {
    let mut image: Vec<u8> = Vec::new();
    let mut epi = Vec::with_capacity(map.len());
    for &v in map {
        if image.last() != Some(&v) {
            image.push(v);
        }
        epi.push((image.len() - 1) as u8);
    }
    (epi, image)
}

/// One level `X_n`, enumerated with its face table.
#[derive(Debug)]
pub struct Level {
    simplices: Vec<Simplex>,
    index: HashMap<Simplex, usize>,
    faces: Vec<Vec<u32>>,
}

impl Level {
    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn index_of(&self, x: &Simplex) -> Option<usize> {
        self.index.get(x).copied()
    }

    /// Index at level `n - 1` of `d_i` applied to simplex `k`; empty at level 0.
    pub fn face(&self, k: usize, i: usize) -> usize {
        self.faces[k][i] as usize
    }
}

/// Finite pointed simplicial set.
pub struct FinSimplicialSet {
    names: Vec<String>,
    dims: Vec<usize>,
    faces: Vec<Vec<Simplex>>,
    basepoint: u32,
    levels: RwLock<Vec<Arc<Level>>>,
}

impl Clone for FinSimplicialSet {
    fn clone(&self) -> Self {
        FinSimplicialSet {
            names: self.names.clone(),
            dims: self.dims.clone(),
            faces: self.faces.clone(),
            basepoint: self.basepoint,
            levels: RwLock::new(Vec::new()),
        }
    }
}

impl PartialEq for FinSimplicialSet {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.dims == other.dims && self.faces == other.faces && self.basepoint == other.basepoint
    }
}

impl Eq for FinSimplicialSet {}

impl fmt::Debug for FinSimplicialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinSimplicialSet")
            .field("nondegenerate", &self.names)
            .field("dims", &self.dims)
            .field("basepoint", &self.names[self.basepoint as usize])
            .finish()
    }
}

impl FinSimplicialSet {
    /// Builds a simplicial set from nondegenerate simplices and their faces.
    ///
    /// `faces[σ][i]` is `d_i σ` at level `dim σ - 1`. The face dimensions and
    /// the identities `d_i d_j = d_{j-1} d_i` are verified for every
    /// generator, which covers all simplices.
    pub fn new(
        names: Vec<String>,
        dims: Vec<usize>,
        faces: Vec<Vec<Simplex>>,
        basepoint: usize,
    ) -> Result<Self, SimplicialError> {
        let n = names.len();
        if dims.len() != n || faces.len() != n {
            return Err(SimplicialError::InvalidParameter("table sizes disagree".into()));
        }
        if basepoint >= n || dims[basepoint] != 0 {
            let name = names.get(basepoint).cloned().unwrap_or_default();
            return Err(SimplicialError::BadBasepoint(name));
        }
        for s in 0..n {
            if faces[s].len() != if dims[s] == 0 { 0 } else { dims[s] + 1 } {
                return Err(SimplicialError::FaceDimension { name: names[s].clone(), i: faces[s].len() });
            }
            for (i, f) in faces[s].iter().enumerate() {
                let ok = f.level() + 1 == dims[s]
                    && (f.nd as usize) < n
                    && f.nd_dim() == dims[f.nd as usize]
                    && f.surj[0] == 0
                    && f.surj.windows(2).all(|w| w[1] == w[0] || w[1] == w[0] + 1);
                if !ok {
                    return Err(SimplicialError::FaceDimension { name: names[s].clone(), i });
                }
            }
        }
        let set = FinSimplicialSet { names, dims, faces, basepoint: basepoint as u32, levels: RwLock::new(Vec::new()) };
        for s in 0..n {
            let m = set.dims[s];
            if m < 2 {
                continue;
            }
            for j in 1..=m {
                for i in 0..j {
                    let a = set.face(&set.faces[s][j], i);
                    let b = set.face(&set.faces[s][i], j - 1);
                    if a != b {
                        return Err(SimplicialError::IdentityFails { name: set.names[s].clone(), i, j });
                    }
                }
            }
        }
        Ok(set)
    }

    pub fn nondegenerate_count(&self) -> usize {
        self.names.len()
    }

    /// Nondegenerate simplices per dimension.
    pub fn nondegenerate_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.dimension() + 1];
        for &d in &self.dims {
            counts[d] += 1;
        }
        counts
    }

    pub fn dimension(&self) -> usize {
        self.dims.iter().copied().max().unwrap_or(0)
    }

    pub fn name(&self, nd: u32) -> &str {
        &self.names[nd as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nd_dim(&self, nd: u32) -> usize {
        self.dims[nd as usize]
    }

    pub fn nd_faces(&self, nd: u32) -> &[Simplex] {
        &self.faces[nd as usize]
    }

    pub fn basepoint(&self) -> u32 {
        self.basepoint
    }

    pub fn find(&self, name: &str) -> Result<u32, SimplicialError> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|p| p as u32)
            .ok_or_else(|| SimplicialError::UnknownSimplex(name.to_string()))
    }

    /// `φ^* x = x ∘ φ` for a monotone `φ: [k] -> [n]` given by its values.
    pub fn apply(&self, x: &Simplex, map: &[u8]) -> Simplex {
        let composite: Vec<u8> = map.iter().map(|&v| x.surj[v as usize]).collect();
        let (epi, image) = factor(&composite);
        let inner = self.apply_mono(x.nd, x.nd_dim(), &image);
        let surj = epi.iter().map(|&e| inner.surj[e as usize]).collect();
        Simplex { nd: inner.nd, surj }
    }

    /// `σ ∘ μ` for nondegenerate `σ` of dimension `m` and an injective `μ`.
    fn apply_mono(&self, nd: u32, m: usize, image: &[u8]) -> Simplex {
        if image.len() == m + 1 {
            return Simplex::nondegenerate(nd, m);
        }
        let v = (0..=m as u8).zip(image.iter().copied().chain(std::iter::once(u8::MAX))).find(|(a, b)| a != b).unwrap().0;
        // μ = δ_v ∘ μ'
        let reduced: Vec<u8> = image.iter().map(|&w| if w > v { w - 1 } else { w }).collect();
        let face = &self.faces[nd as usize][v as usize];
        self.apply(face, &reduced)
    }

    pub fn face(&self, x: &Simplex, i: usize) -> Simplex {
        let n = x.level();
        let map: Vec<u8> = (0..n as u8).map(|k| if (k as usize) < i { k } else { k + 1 }).collect();
        self.apply(x, &map)
    }

    pub fn degeneracy(&self, x: &Simplex, j: usize) -> Simplex {
        let n = x.level();
        let map: Vec<u8> = (0..=n as u8 + 1).map(|k| if (k as usize) <= j { k } else { k - 1 }).collect();
        self.apply(x, &map)
    }

    /// Checked face `d_i` at level `n`.
    pub fn face_checked(&self, n: usize, i: usize, x: &Simplex) -> Result<Simplex, SimplicialError> {
        if n == 0 || i > n || x.level() != n {
            return Err(SimplicialError::IndexOutOfRange { level: n, index: i });
        }
        Ok(self.face(x, i))
    }

    /// Checked degeneracy `s_j` at level `n`.
    pub fn degeneracy_checked(&self, n: usize, j: usize, x: &Simplex) -> Result<Simplex, SimplicialError> {
        if j > n || x.level() != n {
            return Err(SimplicialError::IndexOutOfRange { level: n, index: j });
        }
        Ok(self.degeneracy(x, j))
    }

    /// The level `X_n`: every nondegenerate simplex of dimension `m <= n`
    /// composed with every monotone surjection `[n] -> [m]`.
    pub fn level(&self, n: usize) -> Arc<Level> {
        if let Some(l) = self.levels.read().unwrap().get(n) {
            return l.clone();
        }
        let mut levels = self.levels.write().unwrap();
        while levels.len() <= n {
            let k = levels.len();
            let simplices = self.enumerate(k);
            let index: HashMap<Simplex, usize> = simplices.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
            let faces = if k == 0 {
                vec![Vec::new(); simplices.len()]
            } else {
                let below = &levels[k - 1];
                simplices
                    .iter()
                    .map(|x| (0..=k).map(|i| below.index[&self.face(x, i)] as u32).collect())
                    .collect()
            };
            levels.push(Arc::new(Level { simplices, index, faces }));
        }
        levels[n].clone()
    }

    /// `|X_n|` without building the level: each nondegenerate `k`-simplex
    /// has one degeneracy per surjection `[n] -> [k]`.
    pub fn level_size(&self, n: usize) -> u128 {
        self.nondegenerate_counts()
            .iter()
            .enumerate()
            .filter(|&(k, _)| k <= n)
            .map(|(k, &c)| c as u128 * num_integer::binomial(n as u128, k as u128))
            .sum()
    }

    pub fn simplices_at(&self, n: usize) -> Vec<Simplex> {
        self.level(n).simplices.clone()
    }

    fn enumerate(&self, n: usize) -> Vec<Simplex> {
        let mut out = Vec::new();
        for (nd, &m) in self.dims.iter().enumerate() {
            if m <= n {
                for surj in surjections(n, m) {
                    out.push(Simplex { nd: nd as u32, surj });
                }
            }
        }
        out
    }

    /// Normal-form notation `s_{j1} … s_{jr} name`.
    pub fn display(&self, x: &Simplex) -> String {
        let mut word: Vec<usize> = x.degeneracy_indices().collect();
        word.reverse();
        let mut s = String::new();
        for j in word {
            s.push_str(&format!("s_{j} "));
        }
        s.push_str(self.name(x.nd));
        s
    }
}

/// All monotone surjections `[n] -> [m]` in lexicographic order.
pub fn surjections(n: usize, m: usize) -> Vec<Vec<u8>> {
    fn go(n: usize, m: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        let last = *cur.last().unwrap() as usize;
        if cur.len() == n + 1 {
            if last == m {
                out.push(cur.clone());
            }
            return;
        }
        let remaining = n + 1 - cur.len();
        // stay or step, keeping the target reachable
        if m - last < remaining {
            cur.push(last as u8);
            go(n, m, cur, out);
            cur.pop();
        }
        if last < m {
            cur.push(last as u8 + 1);
            go(n, m, cur, out);
            cur.pop();
        }
    }
    if m > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(n, m, &mut vec![0], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::binomial;

    #[test]
    fn level_size_matches_enumeration() {
        for x in [FinSimplicialSet::torus(), FinSimplicialSet::sphere_minimal(3).unwrap(), FinSimplicialSet::delta(2).unwrap()] {
            for n in 0..6 {
                assert_eq!(x.level_size(n), x.level(n).len() as u128);
            }
        }
    }

    #[test]
    fn surjection_counts() {
        for n in 0..8 {
            for m in 0..=n {
                assert_eq!(surjections(n, m).len(), binomial(n, m));
            }
        }
    }

    #[test]
    fn factorization() {
        let (epi, image) = factor(&[0, 0, 2, 3, 3]);
        assert_eq!(epi, vec![0, 0, 1, 2, 2]);
        assert_eq!(image, vec![0, 2, 3]);
    }

    #[test]
    fn face_of_degeneracy() {
        let x = FinSimplicialSet::delta(2).unwrap();
        for s in x.simplices_at(2) {
            for j in 0..=2 {
                let y = x.degeneracy(&s, j);
                assert_eq!(x.face(&y, j), s);
                assert_eq!(x.face(&y, j + 1), s);
            }
        }
    }

    #[test]
    fn first_face_of_top_simplex() {
        let x = FinSimplicialSet::delta(2).unwrap();
        let top = Simplex::nondegenerate(x.find("v012").unwrap(), 2);
        assert_eq!(x.name(x.face(&top, 0).nd), "v12");
    }

    #[test]
    fn normal_form_display() {
        let x = FinSimplicialSet::sphere_minimal(2).unwrap();
        let sigma = Simplex::nondegenerate(x.find("σ").unwrap(), 2);
        let y = x.degeneracy(&x.degeneracy(&sigma, 0), 2);
        assert_eq!(x.display(&y), "s_2 s_0 σ");
    }

    #[test]
    fn checked_indices() {
        let x = FinSimplicialSet::circle();
        let s = x.simplices_at(1)[0].clone();
        assert!(x.face_checked(1, 2, &s).is_err());
        assert!(x.degeneracy_checked(1, 2, &s).is_err());
        assert!(x.face_checked(0, 0, &x.simplices_at(0)[0]).is_err());
    }

    #[test]
    fn broken_identity_rejected() {
        // a 2-simplex whose edges do not match up at the vertices
        let names = ["a", "b", "c", "e", "t"].map(String::from).to_vec();
        let v = |k| Simplex::nondegenerate(k, 0);
        let e = Simplex::nondegenerate(3, 1);
        let faces = vec![vec![], vec![], vec![], vec![v(1), v(0)], vec![e.clone(), e.clone(), Simplex::constant(2, 1)]];
        let r = FinSimplicialSet::new(names, vec![0, 0, 0, 1, 2], faces, 0);
        assert!(matches!(r, Err(SimplicialError::IdentityFails { .. })));
    }
}
