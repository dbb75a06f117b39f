use super::{FinSimplicialSet, Simplex, SimplicialError};
use std::sync::Arc;

/// Where a simplex of `X` sits relative to `* ⊂ Y ⊂ X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Zone {
    /// `X \ Y`
    Outer,
    /// `Y \ *`
    Inner,
    /// degeneracies of the basepoint
    Basepoint,
}

/// A pointed simplicial set with a pointed simplicial subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialPair {
    x: Arc<FinSimplicialSet>,
    in_y: Vec<bool>,
}

impl SimplicialPair {
    /// `Y` is given by its nondegenerate simplices; it must be closed under
    /// faces and contain the basepoint.
    pub fn new(x: Arc<FinSimplicialSet>, y: impl IntoIterator<Item = u32>) -> Result<Self, SimplicialError> {
        let mut in_y = vec![false; x.nondegenerate_count()];
        for s in y {
            *in_y
                .get_mut(s as usize)
                .ok_or(SimplicialError::IndexOutOfRange { level: 0, index: s as usize })? = true;
        }
        if !in_y[x.basepoint() as usize] {
            return Err(SimplicialError::UnpointedSubobject);
        }
        for s in 0..in_y.len() {
            if in_y[s] && x.nd_faces(s as u32).iter().any(|f| !in_y[f.nd as usize]) {
                return Err(SimplicialError::NotClosed(x.name(s as u32).to_string()));
            }
        }
        Ok(SimplicialPair { x, in_y })
    }

    pub fn by_names(x: Arc<FinSimplicialSet>, names: &[&str]) -> Result<Self, SimplicialError> {
        let ids = names.iter().map(|n| x.find(n)).collect::<Result<Vec<_>, _>>()?;
        Self::new(x, ids)
    }

    /// `(X, *)`.
    pub fn absolute(x: Arc<FinSimplicialSet>) -> Self {
        let bp = x.basepoint();
        Self::new(x, [bp]).expect("the basepoint is a subobject")
    }

    /// `(X, X)`.
    pub fn full(x: Arc<FinSimplicialSet>) -> Self {
        let n = x.nondegenerate_count() as u32;
        Self::new(x, 0..n).expect("X is a subobject of itself")
    }

    /// `(Δ_n, ∂Δ_n)`.
    pub fn delta_boundary(n: usize) -> Result<Self, SimplicialError> {
        let x = Arc::new(FinSimplicialSet::delta(n)?);
        let top = x.nondegenerate_count() as u32 - 1;
        Self::new(x, (0..top).collect::<Vec<_>>())
    }

    pub fn space(&self) -> &Arc<FinSimplicialSet> {
        &self.x
    }

    pub fn contains(&self, nd: u32) -> bool {
        self.in_y[nd as usize]
    }

    /// Nondegenerate simplices of `Y`.
    pub fn sub_simplices(&self) -> Vec<u32> {
        (0..self.in_y.len() as u32).filter(|&s| self.in_y[s as usize]).collect()
    }

    pub fn zone(&self, s: &Simplex) -> Zone {
        if s.nd == self.x.basepoint() {
            Zone::Basepoint
        } else if self.in_y[s.nd as usize] {
            Zone::Inner
        } else {
            Zone::Outer
        }
    }

    /// `Y` as a simplicial set in its own right.
    pub fn sub(&self) -> FinSimplicialSet {
        let keep = self.sub_simplices();
        let mut pos = vec![u32::MAX; self.in_y.len()];
        for (i, &s) in keep.iter().enumerate() {
            pos[s as usize] = i as u32;
        }
        let faces = keep
            .iter()
            .map(|&s| {
                self.x.nd_faces(s).iter().map(|f| Simplex { nd: pos[f.nd as usize], surj: f.surj.clone() }).collect()
            })
            .collect();
        FinSimplicialSet::new(
            keep.iter().map(|&s| self.x.name(s).to_string()).collect(),
            keep.iter().map(|&s| self.x.nd_dim(s)).collect(),
            faces,
            pos[self.x.basepoint() as usize] as usize,
        )
        .expect("a subobject is a simplicial set")
    }

    /// `X/Y`, with all of `Y` collapsed to a new basepoint `*`.
    pub fn quotient(&self) -> FinSimplicialSet {
        let keep: Vec<u32> = (0..self.in_y.len() as u32).filter(|&s| !self.in_y[s as usize]).collect();
        let mut pos = vec![0u32; self.in_y.len()];
        for (i, &s) in keep.iter().enumerate() {
            pos[s as usize] = i as u32 + 1;
        }
        let mut names = vec!["*".to_string()];
        let mut dims = vec![0];
        let mut faces = vec![Vec::new()];
        for &s in &keep {
            let mut name = self.x.name(s).to_string();
            if name == "*" {
                name.push('\'');
            }
            names.push(name);
            dims.push(self.x.nd_dim(s));
            faces.push(
                self.x
                    .nd_faces(s)
                    .iter()
                    .map(|f| {
                        if self.in_y[f.nd as usize] {
                            Simplex::constant(0, f.level())
                        } else {
                            Simplex { nd: pos[f.nd as usize], surj: f.surj.clone() }
                        }
                    })
                    .collect(),
            );
        }
        FinSimplicialSet::new(names, dims, faces, 0).expect("a quotient of a simplicial set is simplicial")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disk_mod_boundary_is_minimal_sphere() {
        for n in 1..4 {
            let q = SimplicialPair::delta_boundary(n).unwrap().quotient();
            let s = FinSimplicialSet::sphere_minimal(n).unwrap();
            assert_eq!(q.nondegenerate_counts(), s.nondegenerate_counts());
            assert_eq!(q.nd_faces(1), s.nd_faces(1));
        }
    }

    #[test]
    fn quotient_by_basepoint_is_identity() {
        let t = Arc::new(FinSimplicialSet::torus());
        let q = SimplicialPair::absolute(t.clone()).quotient();
        assert_eq!(q.nondegenerate_counts(), t.nondegenerate_counts());
        for n in 0..5 {
            assert_eq!(q.level(n).len(), t.level(n).len());
        }
    }

    #[test]
    fn subobject_must_be_closed_and_pointed() {
        let d = Arc::new(FinSimplicialSet::delta(1).unwrap());
        assert!(matches!(SimplicialPair::by_names(d.clone(), &["v0", "v01"]), Err(SimplicialError::NotClosed(_))));
        assert!(matches!(SimplicialPair::by_names(d, &["v1"]), Err(SimplicialError::UnpointedSubobject)));
    }

    #[test]
    fn zones() {
        let p = SimplicialPair::delta_boundary(1).unwrap();
        let x = p.space().clone();
        let zones: Vec<Zone> = x.simplices_at(1).iter().map(|s| p.zone(s)).collect();
        assert_eq!(zones, vec![Zone::Basepoint, Zone::Inner, Zone::Outer]);
        assert_eq!(p.sub().nondegenerate_count(), 2);
    }
}
