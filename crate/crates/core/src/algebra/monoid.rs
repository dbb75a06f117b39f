use super::{AlgebraError, FinAlgebra};
use crate::exact::Coefficients;

/// Finite commutative monoid with an absorbing basepoint `0` and unit `1`.
///
/// The augmentation is stored as a flag per element: `true` means the
/// element goes to `1`, `false` that it goes to the basepoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedMonoid {
    labels: Vec<String>,
    zero: usize,
    one: usize,
    table: Vec<Vec<usize>>,
    augmentation: Vec<bool>,
    weights: Vec<u32>,
}

impl PointedMonoid {
    /// Validates and builds a pointed monoid.
    ///
    /// Without an explicit augmentation the invertible elements go to `1`
    /// and everything else to the basepoint. Without weights every element
    /// has weight 0.
    pub fn new(
        labels: Vec<String>,
        zero: usize,
        one: usize,
        table: Vec<Vec<usize>>,
        augmentation: Option<Vec<bool>>,
        weights: Option<Vec<u32>>,
    ) -> Result<Self, AlgebraError> {
        let n = labels.len();
        let bad = |m: &str| Err(AlgebraError::InvalidMonoid(m.to_string()));
        if zero >= n || one >= n {
            return bad("basepoint or unit out of range");
        }
        if zero == one {
            return bad("unit equals basepoint");
        }
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return bad("table is not square over the elements");
        }
        for a in 0..n {
            if table[a][one] != a {
                return bad(&format!("1 is not neutral for {}", labels[a]));
            }
            if table[a][zero] != zero {
                return bad(&format!("0 does not absorb {}", labels[a]));
            }
            for b in 0..n {
                if table[a][b] != table[b][a] {
                    return bad(&format!("not commutative on ({}, {})", labels[a], labels[b]));
                }
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad(&format!("not associative on ({}, {}, {})", labels[a], labels[b], labels[c]));
                    }
                }
            }
        }
        let augmentation = augmentation
            .unwrap_or_else(|| (0..n).map(|a| (0..n).any(|b| table[a][b] == one)).collect());
        if augmentation.len() != n {
            return bad("augmentation length");
        }
        if !augmentation[one] || augmentation[zero] {
            return bad("augmentation must send 1 to 1 and 0 to the basepoint");
        }
        for a in 0..n {
            for b in 0..n {
                if augmentation[table[a][b]] != (augmentation[a] && augmentation[b]) {
                    return bad(&format!("augmentation not multiplicative on ({}, {})", labels[a], labels[b]));
                }
            }
        }
        let weights = weights.unwrap_or_else(|| vec![0; n]);
        if weights.len() != n {
            return bad("weights length");
        }
        for a in 0..n {
            for b in 0..n {
                let p = table[a][b];
                if a != zero && b != zero && p != zero && weights[p] != weights[a] + weights[b] {
                    return Err(AlgebraError::WeightNotAdditive(labels[a].clone(), labels[b].clone()));
                }
            }
        }
        Ok(PointedMonoid { labels, zero, one, table, augmentation, weights })
    }

    /// `{0, 1}`.
    pub fn trivial() -> Self {
        Self::new(vec!["0".into(), "1".into()], 0, 1, vec![vec![0, 0], vec![0, 1]], None, None)
            .expect("trivial monoid")
    }

    /// `{0, 1, x, ..., x^{m-1}}` with `x^m = 0` and `weight(x^k) = k`.
    pub fn truncated_powers(m: usize) -> Result<Self, AlgebraError> {
        if m < 1 {
            return Err(AlgebraError::InvalidParameter("need m >= 1".into()));
        }
        // element 0 is the basepoint, element k + 1 is x^k
        let mut labels = vec!["0".to_string()];
        labels.extend((0..m).map(|k| match k {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        }));
        let table = (0..=m)
            .map(|a| {
                (0..=m)
                    .map(|b| if a == 0 || b == 0 || a + b - 2 >= m { 0 } else { a + b - 1 })
                    .collect()
            })
            .collect();
        let weights = (0..=m as u32).map(|k| k.saturating_sub(1)).collect();
        Self::new(labels, 0, 1, table, None, Some(weights))
    }

    /// The cyclic group `Z/q` with a disjoint basepoint; all of it augments to 1.
    pub fn cyclic_group(q: usize) -> Result<Self, AlgebraError> {
        if q < 1 {
            return Err(AlgebraError::InvalidParameter("need q >= 1".into()));
        }
        let mut labels = vec!["0".to_string()];
        labels.extend((0..q).map(|k| match k {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{k}"),
        }));
        let table = (0..=q)
            .map(|a| {
                (0..=q)
                    .map(|b| if a == 0 || b == 0 { 0 } else { (a - 1 + b - 1) % q + 1 })
                    .collect()
            })
            .collect();
        Self::new(labels, 0, 1, table, None, None)
    }

    /// Smash product: pairs of non-basepoint elements plus a new basepoint.
    pub fn smash(&self, other: &PointedMonoid) -> PointedMonoid {
        let left: Vec<usize> = (0..self.len()).filter(|&a| a != self.zero).collect();
        let right: Vec<usize> = (0..other.len()).filter(|&b| b != other.zero).collect();
        let code = |a: usize, b: usize| {
            1 + left.iter().position(|&x| x == a).unwrap() * right.len() + right.iter().position(|&y| y == b).unwrap()
        };
        let mut labels = vec!["0".to_string()];
        let mut weights = vec![0];
        let mut augmentation = vec![false];
        for &a in &left {
            for &b in &right {
                labels.push(format!("{}⊗{}", self.labels[a], other.labels[b]));
                weights.push(self.weights[a] + other.weights[b]);
                augmentation.push(self.augmentation[a] && other.augmentation[b]);
            }
        }
        let n = labels.len();
        let mut table = vec![vec![0; n]; n];
        for &a1 in &left {
            for &b1 in &right {
                for &a2 in &left {
                    for &b2 in &right {
                        let (a, b) = (self.table[a1][a2], other.table[b1][b2]);
                        if a != self.zero && b != other.zero {
                            table[code(a1, b1)][code(a2, b2)] = code(a, b);
                        }
                    }
                }
            }
        }
        let one = code(self.one, other.one);
        Self::new(labels, 0, one, table, Some(augmentation), Some(weights)).expect("smash of pointed monoids")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn basepoint(&self) -> usize {
        self.zero
    }

    pub fn unit(&self) -> usize {
        self.one
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn augmentation(&self) -> &[bool] {
        &self.augmentation
    }

    /// The pointed monoid algebra `c[Π]`: basis `Π \ {0}`.
    pub fn algebra(&self, c: Coefficients) -> FinAlgebra {
        let keep: Vec<usize> = (0..self.len()).filter(|&a| a != self.zero).collect();
        let pos = |a: usize| keep.iter().position(|&x| x == a).unwrap();
        FinAlgebra::from_table(
            c,
            keep.iter().map(|&a| self.labels[a].clone()).collect(),
            keep.iter().map(|&a| self.weights[a]).collect(),
            pos(self.one),
            |i, j| {
                let p = self.table[keep[i]][keep[j]];
                if p == self.zero { vec![] } else { vec![(pos(p), 1)] }
            },
            Some(keep.iter().map(|&a| i64::from(self.augmentation[a])).collect()),
        )
        .expect("a pointed monoid algebra satisfies the algebra axioms")
    }
}

/// The pointed monoid algebra `c[Π]`.
pub fn monoid_algebra(monoid: &PointedMonoid, c: Coefficients) -> FinAlgebra {
    monoid.algebra(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    const F2: Coefficients = Coefficients::PrimeField(2);

    #[test]
    fn truncated_powers_algebra() {
        let a = monoid_algebra(&PointedMonoid::truncated_powers(3).unwrap(), F2);
        assert_eq!(a.dim(), 3);
        assert_eq!(a.weights(), &[0, 1, 2]);
        let x = a.index_of("x").unwrap();
        assert_eq!(a.mul_basis(x, x), &[(a.index_of("x^2").unwrap(), 1)]);
        assert_eq!(a.apply_augmentation(&[(x, 1)]), Some(0));
        let direct = FinAlgebra::truncated_polynomial(F2, 3, 1).unwrap();
        assert!(a.is_isomorphic_via(&direct, &[0, 1, 2]));
    }

    #[test]
    fn trivial_monoid_gives_ground_ring() {
        let a = monoid_algebra(&PointedMonoid::trivial(), F2);
        assert_eq!(a, FinAlgebra::coefficient_ring(F2));
    }

    #[test]
    fn group_algebra_default_augmentation() {
        let a = monoid_algebra(&PointedMonoid::cyclic_group(3).unwrap(), F2);
        assert_eq!(a.dim(), 3);
        assert_eq!(a.augmentation(), Some(&[1, 1, 1][..]));
    }

    #[test]
    fn unit_equal_basepoint_rejected() {
        let r = PointedMonoid::new(vec!["0".into()], 0, 0, vec![vec![0]], None, None);
        assert!(r.is_err());
    }

    #[test]
    fn non_absorbing_basepoint_rejected() {
        let r = PointedMonoid::new(
            vec!["0".into(), "1".into()],
            0,
            1,
            vec![vec![1, 0], vec![0, 1]],
            None,
            None,
        );
        assert!(r.is_err());
    }

    #[test]
    fn smash_matches_tensor() {
        let p = PointedMonoid::truncated_powers(2).unwrap();
        let q = PointedMonoid::cyclic_group(2).unwrap();
        let s = monoid_algebra(&p.smash(&q), F2);
        let t = monoid_algebra(&p, F2).tensor(&monoid_algebra(&q, F2)).unwrap();
        let ident: Vec<usize> = (0..s.dim()).collect();
        assert!(s.is_isomorphic_via(&t, &ident));
        assert_eq!(s.augmentation(), t.augmentation());
    }
}
