use super::{FinSimplicialSet, Simplex, SimplicialError};
use std::collections::{HashMap, HashSet};

/// Result of gluing, with the inclusions of both legs on nondegenerate simplices.
#[derive(Debug, Clone)]
pub struct Pushout {
    pub set: FinSimplicialSet,
    pub left: Vec<u32>,
    pub right: Vec<u32>,
}

fn compact(x: &FinSimplicialSet, s: &Simplex) -> String {
    let mut word: Vec<usize> = s.degeneracy_indices().collect();
    word.reverse();
    let mut out: String = word.iter().map(|j| format!("s_{j}")).collect();
    out.push_str(x.name(s.nd));
    out
}

impl FinSimplicialSet {
    /// Diagonal product `X × Y`. A pair `(x, y)` at level `n` is
    /// nondegenerate exactly when `x` and `y` share no degeneracy index.
    pub fn product(&self, other: &FinSimplicialSet) -> FinSimplicialSet {
        let top = self.dimension() + other.dimension();
        let mut pairs: Vec<(Simplex, Simplex)> = Vec::new();
        for n in 0..=top {
            let (lx, ly) = (self.level(n), other.level(n));
            for x in lx.simplices() {
                for y in ly.simplices() {
                    if x.degeneracy_mask() & y.degeneracy_mask() == 0 {
                        pairs.push((x.clone(), y.clone()));
                    }
                }
            }
        }
        let index: HashMap<(Simplex, Simplex), u32> =
            pairs.iter().cloned().enumerate().map(|(i, p)| (p, i as u32)).collect();
        let normalize = |x: Simplex, y: Simplex| -> Simplex {
            let common = x.degeneracy_mask() & y.degeneracy_mask();
            let n = x.level();
            let mut epi = vec![0u8];
            let mut section = vec![0u8];
            for j in 0..n {
                let last = *epi.last().unwrap();
                if common >> j & 1 == 1 {
                    epi.push(last);
                } else {
                    epi.push(last + 1);
                    section.push(j as u8 + 1);
                }
            }
            let (xr, yr) = (self.apply(&x, &section), other.apply(&y, &section));
            Simplex { nd: index[&(xr, yr)], surj: epi }
        };
        let names = pairs.iter().map(|(x, y)| format!("({},{})", compact(self, x), compact(other, y))).collect();
        let dims = pairs.iter().map(|(x, _)| x.level()).collect();
        let faces = pairs
            .iter()
            .map(|(x, y)| {
                let n = x.level();
                if n == 0 {
                    return Vec::new();
                }
                (0..=n).map(|i| normalize(self.face(x, i), other.face(y, i))).collect()
            })
            .collect();
        let bp = index[&(Simplex::nondegenerate(self.basepoint, 0), Simplex::nondegenerate(other.basepoint, 0))];
        FinSimplicialSet::new(names, dims, faces, bp as usize).expect("products of simplicial sets are simplicial")
    }

    /// Nondegenerate-simplex map of `sub` into `self`, matching by name.
    /// Fails unless it is an injective simplicial map.
    pub fn inclusion_of(&self, sub: &FinSimplicialSet) -> Result<Vec<u32>, SimplicialError> {
        let map = sub.names.iter().map(|n| self.find(n)).collect::<Result<Vec<_>, _>>()?;
        check_inclusion(sub, self, &map)?;
        Ok(map)
    }

    /// Glues `left` and `right` along `middle`, given inclusions of `middle`
    /// into each on nondegenerate simplices. Pointed at `left`'s basepoint.
    pub fn pushout(
        left: &FinSimplicialSet,
        middle: &FinSimplicialSet,
        right: &FinSimplicialSet,
        into_left: &[u32],
        into_right: &[u32],
    ) -> Result<Pushout, SimplicialError> {
        check_inclusion(middle, left, into_left)?;
        check_inclusion(middle, right, into_right)?;
        let mut right_map = vec![u32::MAX; right.nondegenerate_count()];
        for (m, &r) in into_right.iter().enumerate() {
            right_map[r as usize] = into_left[m];
        }
        let mut names = left.names.clone();
        let mut dims = left.dims.clone();
        let mut taken: HashSet<String> = names.iter().cloned().collect();
        let mut added = Vec::new();
        for r in 0..right.nondegenerate_count() {
            if right_map[r] == u32::MAX {
                right_map[r] = names.len() as u32;
                let mut name = right.names[r].clone();
                while taken.contains(&name) {
                    name.push('\'');
                }
                taken.insert(name.clone());
                names.push(name);
                dims.push(right.dims[r]);
                added.push(r);
            }
        }
        let mut faces = left.faces.clone();
        for r in added {
            faces.push(
                right.faces[r]
                    .iter()
                    .map(|f| Simplex { nd: right_map[f.nd as usize], surj: f.surj.clone() })
                    .collect(),
            );
        }
        let set = FinSimplicialSet::new(names, dims, faces, left.basepoint as usize)?;
        Ok(Pushout { set, left: (0..left.nondegenerate_count() as u32).collect(), right: right_map })
    }

    /// `X ∨ Y`, glued at the basepoints.
    pub fn wedge(&self, other: &FinSimplicialSet) -> FinSimplicialSet {
        let p = FinSimplicialSet::point();
        FinSimplicialSet::pushout(self, &p, other, &[self.basepoint], &[other.basepoint])
            .expect("basepoints are subobjects")
            .set
    }
}

fn check_inclusion(sub: &FinSimplicialSet, sup: &FinSimplicialSet, map: &[u32]) -> Result<(), SimplicialError> {
    if map.len() != sub.nondegenerate_count() {
        return Err(SimplicialError::NotInjective("wrong number of images".into()));
    }
    let mut seen = HashSet::new();
    for (s, &t) in map.iter().enumerate() {
        if t as usize >= sup.nondegenerate_count() || !seen.insert(t) {
            return Err(SimplicialError::NotInjective(format!("`{}` is not sent to a fresh simplex", sub.names[s])));
        }
        if sup.dims[t as usize] != sub.dims[s] {
            return Err(SimplicialError::NotInjective(format!("`{}` changes dimension", sub.names[s])));
        }
        for (f, g) in sub.faces[s].iter().zip(&sup.faces[t as usize]) {
            if map[f.nd as usize] != g.nd || f.surj != g.surj {
                return Err(SimplicialError::NotInjective(format!("faces of `{}` do not match", sub.names[s])));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge_of_circles() {
        let w = FinSimplicialSet::circle().wedge(&FinSimplicialSet::circle());
        for k in 0..6 {
            assert_eq!(w.level(k).len(), 2 * k + 1);
        }
        assert_eq!(w.names()[2], "σ'");
    }

    #[test]
    fn two_disks_make_a_sphere() {
        let d = FinSimplicialSet::delta(2).unwrap();
        let b = FinSimplicialSet::boundary_delta(2).unwrap();
        let inc = d.inclusion_of(&b).unwrap();
        let s = FinSimplicialSet::pushout(&d, &b, &d, &inc, &inc).unwrap().set;
        assert_eq!(s.nondegenerate_counts(), vec![3, 3, 2]);
    }

    #[test]
    fn idempotent_pushout() {
        let x = FinSimplicialSet::torus();
        let id: Vec<u32> = (0..x.nondegenerate_count() as u32).collect();
        let p = FinSimplicialSet::pushout(&x, &x, &x, &id, &id).unwrap();
        assert_eq!(p.set, x);
    }

    #[test]
    fn non_injective_leg_rejected() {
        let d = FinSimplicialSet::delta(1).unwrap();
        let b = FinSimplicialSet::boundary_delta(1).unwrap();
        assert!(FinSimplicialSet::pushout(&d, &b, &d, &[0, 0], &[0, 1]).is_err());
    }

    #[test]
    fn product_with_point() {
        let p = FinSimplicialSet::delta(2).unwrap().product(&FinSimplicialSet::point());
        assert_eq!(p.nondegenerate_counts(), vec![3, 3, 1]);
    }

    #[test]
    fn prism_counts() {
        // Δ_1 × Δ_1: 4 vertices, 5 edges, 2 triangles
        let d = FinSimplicialSet::delta(1).unwrap();
        assert_eq!(d.product(&d).nondegenerate_counts(), vec![4, 5, 2]);
    }
}
