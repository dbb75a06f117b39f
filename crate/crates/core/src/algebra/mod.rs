//! Commutative algebras with a finite basis and exact structure constants.
//!
//! The unit is always a basis element. Each basis element carries a
//! nonnegative weight; products are weight-homogeneous, which is what lets
//! the Loday complexes split into finite blocks.

mod io;
mod map;
mod monoid;

pub use io::{parse_algebra_json, AlgebraFile, MonoidFile};
pub use map::AlgebraMap;
pub use monoid::{monoid_algebra, PointedMonoid};

use crate::exact::{Coefficients, ExactError};
use std::collections::HashMap;
use std::fmt;

/// A linear combination of basis elements: sorted by index, no zero terms.
pub type Element = Vec<(usize, i64)>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("multiplication is not associative on ({0}, {1}, {2})")]
    NotAssociative(String, String, String),
    #[error("multiplication is not commutative on ({0}, {1})")]
    NotCommutative(String, String),
    #[error("unit law fails for `{0}`")]
    UnitLaw(String),
    #[error("weight is not additive on the product {0} * {1}")]
    WeightNotAdditive(String, String),
    #[error("augmentation is not an algebra map: {0}")]
    BadAugmentation(String),
    #[error("algebra has no augmentation")]
    NoAugmentation,
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),
    #[error("invalid pointed monoid: {0}")]
    InvalidMonoid(String),
    #[error("invalid algebra map: {0}")]
    InvalidMap(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("input error: {0}")]
    Parse(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Commutative algebra with a finite basis over `F_p` or the integers.
#[derive(Clone, PartialEq, Eq)]
pub struct FinAlgebra {
    coefficients: Coefficients,
    labels: Vec<String>,
    weights: Vec<u32>,
    unit: usize,
    mult: Vec<Vec<Element>>,
    augmentation: Option<Vec<i64>>,
    truncated_at: Option<u32>,
    index: HashMap<String, usize>,
}

impl fmt::Debug for FinAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinAlgebra")
            .field("coefficients", &self.coefficients)
            .field("basis", &self.labels)
            .field("weights", &self.weights)
            .finish_non_exhaustive()
    }
}

impl FinAlgebra {
    /// Builds and validates an algebra from its multiplication table.
    ///
    /// `product(i, j)` must return `b_i * b_j` in the basis; it is only
    /// queried for `i <= j` and the table is filled in symmetrically, then
    /// commutativity, associativity, the unit law, weight additivity and the
    /// augmentation are checked exhaustively.
    pub fn from_table<F>(
        coefficients: Coefficients,
        labels: Vec<String>,
        weights: Vec<u32>,
        unit: usize,
        mut product: F,
        augmentation: Option<Vec<i64>>,
    ) -> Result<Self, AlgebraError>
    where
        F: FnMut(usize, usize) -> Element,
    {
        let n = labels.len();
        let mut mult = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in i..n {
                let e = normalize(coefficients, product(i, j));
                mult[i][j] = e.clone();
                mult[j][i] = e;
            }
        }
        let alg = Self::unchecked(coefficients, labels, weights, unit, mult, augmentation)?;
        alg.validate()?;
        Ok(alg)
    }

    fn unchecked(
        coefficients: Coefficients,
        labels: Vec<String>,
        weights: Vec<u32>,
        unit: usize,
        mult: Vec<Vec<Element>>,
        augmentation: Option<Vec<i64>>,
    ) -> Result<Self, AlgebraError> {
        let n = labels.len();
        if weights.len() != n || unit >= n || augmentation.as_ref().is_some_and(|a| a.len() != n) {
            return Err(AlgebraError::InvalidParameter("table sizes disagree with the basis".into()));
        }
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(AlgebraError::DuplicateLabel(l.clone()));
            }
        }
        let augmentation = augmentation.map(|a| a.into_iter().map(|x| coefficients.reduce(x)).collect());
        Ok(FinAlgebra {
            coefficients,
            labels,
            weights,
            unit,
            mult,
            augmentation,
            truncated_at: None,
            index,
        })
    }

    fn validate(&self) -> Result<(), AlgebraError> {
        let n = self.dim();
        for i in 0..n {
            if self.mult[self.unit][i] != vec![(i, 1)] {
                return Err(AlgebraError::UnitLaw(self.labels[i].clone()));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if self.mult[i][j] != self.mult[j][i] {
                    return Err(AlgebraError::NotCommutative(self.labels[i].clone(), self.labels[j].clone()));
                }
                let w = self.weights[i] + self.weights[j];
                if self.mult[i][j].iter().any(|&(k, _)| self.weights[k] != w) {
                    return Err(AlgebraError::WeightNotAdditive(self.labels[i].clone(), self.labels[j].clone()));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = self.mul(&self.mult[i][j], &[(k, 1)]);
                    let right = self.mul(&[(i, 1)], &self.mult[j][k]);
                    if left != right {
                        return Err(AlgebraError::NotAssociative(
                            self.labels[i].clone(),
                            self.labels[j].clone(),
                            self.labels[k].clone(),
                        ));
                    }
                }
            }
        }
        if let Some(aug) = &self.augmentation {
            if aug[self.unit] != 1 {
                return Err(AlgebraError::BadAugmentation("unit does not map to 1".into()));
            }
            for i in 0..n {
                for j in 0..n {
                    let lhs = self.apply_augmentation(&self.mult[i][j]).unwrap();
                    let rhs = self.coefficients.mul(aug[i], aug[j]);
                    if lhs != rhs {
                        return Err(AlgebraError::BadAugmentation(format!(
                            "not multiplicative on ({}, {})",
                            self.labels[i], self.labels[j]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The coefficient ring as a one-dimensional algebra.
    pub fn coefficient_ring(c: Coefficients) -> Self {
        Self::from_table(c, vec!["1".into()], vec![0], 0, |_, _| vec![(0, 1)], Some(vec![1]))
            .expect("the ground ring is an algebra")
    }

    /// `k[x]/x^m` with basis `1, x, ..., x^{m-1}`, `weight(x^k) = k * weight_of_x`,
    /// augmented by `x -> 0`.
    pub fn truncated_polynomial(c: Coefficients, m: usize, weight_of_x: u32) -> Result<Self, AlgebraError> {
        if m < 2 {
            return Err(AlgebraError::InvalidParameter(format!("truncation order {m} < 2")));
        }
        Self::monomial_algebra(c, m, weight_of_x)
    }

    fn monomial_algebra(c: Coefficients, m: usize, weight_of_x: u32) -> Result<Self, AlgebraError> {
        let labels = (0..m).map(power_label).collect();
        let weights = (0..m as u32).map(|k| k * weight_of_x).collect();
        let mut aug = vec![0; m];
        aug[0] = 1;
        Self::from_table(
            c,
            labels,
            weights,
            0,
            |i, j| if i + j < m { vec![(i + j, 1)] } else { vec![] },
            Some(aug),
        )
    }

    /// The polynomial ring `k[x]` cut off above weight `max_weight`.
    ///
    /// This is `k[x]/x^{K+1}` with `K = max_weight / weight_of_x`, flagged as
    /// truncated: homology computed from it is exact only in weights up to
    /// `max_weight`.
    pub fn polynomial(c: Coefficients, weight_of_x: u32, max_weight: u32) -> Result<Self, AlgebraError> {
        if weight_of_x == 0 {
            return Err(AlgebraError::InvalidParameter("weight truncation needs weight(x) >= 1".into()));
        }
        let top = (max_weight / weight_of_x) as usize;
        let mut a = Self::monomial_algebra(c, top + 1, weight_of_x)?;
        a.truncated_at = Some(max_weight);
        Ok(a)
    }

    /// `Z[i]`: basis `{1, i}` with `i * i = -1`, all weights zero.
    pub fn gaussian_integers() -> Self {
        Self::from_table(
            Coefficients::Integers,
            vec!["1".into(), "i".into()],
            vec![0, 0],
            0,
            |a, b| match (a, b) {
                (0, j) | (j, 0) => vec![(j, 1)],
                _ => vec![(0, -1)],
            },
            None,
        )
        .expect("Z[i] is a commutative ring")
    }

    /// Group algebra `k[Z/q]` with the augmentation `g -> 1`.
    pub fn cyclic_group_algebra(c: Coefficients, q: usize) -> Result<Self, AlgebraError> {
        Ok(PointedMonoid::cyclic_group(q)?.algebra(c))
    }

    /// Tensor product over the common coefficient ring; weights add.
    pub fn tensor(&self, other: &FinAlgebra) -> Result<FinAlgebra, AlgebraError> {
        self.coefficients.ensure_same(other.coefficients)?;
        let c = self.coefficients;
        let (n, m) = (self.dim(), other.dim());
        let pair = |i: usize, j: usize| i * m + j;
        let mut labels = Vec::with_capacity(n * m);
        let mut weights = Vec::with_capacity(n * m);
        for i in 0..n {
            for j in 0..m {
                labels.push(format!("{}⊗{}", self.labels[i], other.labels[j]));
                weights.push(self.weights[i] + other.weights[j]);
            }
        }
        let mut mult = vec![vec![Vec::new(); n * m]; n * m];
        for i1 in 0..n {
            for j1 in 0..m {
                for i2 in 0..n {
                    for j2 in 0..m {
                        let mut e: Element = Vec::new();
                        for &(a, x) in &self.mult[i1][i2] {
                            for &(b, y) in &other.mult[j1][j2] {
                                e.push((pair(a, b), c.mul(x, y)));
                            }
                        }
                        mult[pair(i1, j1)][pair(i2, j2)] = normalize(c, e);
                    }
                }
            }
        }
        let augmentation = match (&self.augmentation, &other.augmentation) {
            (Some(a), Some(b)) => Some(
                (0..n)
                    .flat_map(|i| (0..m).map(move |j| (i, j)))
                    .map(|(i, j)| c.mul(a[i], b[j]))
                    .collect(),
            ),
            _ => None,
        };
        let mut t = Self::unchecked(c, labels, weights, pair(self.unit, other.unit), mult, augmentation)?;
        t.truncated_at = match (self.truncated_at, other.truncated_at) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        Ok(t)
    }

    /// Same algebra with basis elements reordered: new basis element `k` is
    /// old basis element `order[k]`.
    pub fn reindexed(&self, order: &[usize]) -> Result<FinAlgebra, AlgebraError> {
        let n = self.dim();
        let mut inverse = vec![usize::MAX; n];
        for (new, &old) in order.iter().enumerate() {
            if old >= n || inverse[old] != usize::MAX {
                return Err(AlgebraError::InvalidParameter("not a permutation".into()));
            }
            inverse[old] = new;
        }
        if order.len() != n {
            return Err(AlgebraError::InvalidParameter("not a permutation".into()));
        }
        let labels = order.iter().map(|&o| self.labels[o].clone()).collect();
        let weights = order.iter().map(|&o| self.weights[o]).collect();
        let aug = self.augmentation.as_ref().map(|a| order.iter().map(|&o| a[o]).collect());
        let c = self.coefficients;
        let mut alg = Self::from_table(
            c,
            labels,
            weights,
            inverse[self.unit],
            |i, j| {
                self.mult[order[i]][order[j]]
                    .iter()
                    .map(|&(k, x)| (inverse[k], x))
                    .collect()
            },
            aug,
        )?;
        alg.truncated_at = self.truncated_at;
        Ok(alg)
    }

    /// Replaces the augmentation (validated).
    pub fn with_augmentation(&self, augmentation: Option<Vec<i64>>) -> Result<FinAlgebra, AlgebraError> {
        let mut a = self.clone();
        a.augmentation = augmentation.map(|v| v.into_iter().map(|x| self.coefficients.reduce(x)).collect());
        if a.augmentation.as_ref().is_some_and(|v| v.len() != a.dim()) {
            return Err(AlgebraError::InvalidParameter("augmentation length".into()));
        }
        a.validate()?;
        Ok(a)
    }

    pub fn coefficients(&self) -> Coefficients {
        self.coefficients
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize, AlgebraError> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| AlgebraError::UnknownLabel(label.to_string()))
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn augmentation(&self) -> Option<&[i64]> {
        self.augmentation.as_deref()
    }

    /// Weight above which this algebra no longer models its untruncated
    /// original, if it was built by weight truncation.
    pub fn truncated_at(&self) -> Option<u32> {
        self.truncated_at
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, i64)] {
        &self.mult[i][j]
    }

    pub fn mul(&self, a: &[(usize, i64)], b: &[(usize, i64)]) -> Element {
        let c = self.coefficients;
        let mut out = Vec::new();
        for &(i, x) in a {
            for &(j, y) in b {
                let xy = c.mul(x, y);
                out.extend(self.mult[i][j].iter().map(|&(k, z)| (k, c.mul(xy, z))));
            }
        }
        normalize(c, out)
    }

    pub fn apply_augmentation(&self, v: &[(usize, i64)]) -> Option<i64> {
        let aug = self.augmentation.as_ref()?;
        let c = self.coefficients;
        Some(v.iter().fold(0, |s, &(i, x)| c.add(s, c.mul(x, aug[i]))))
    }

    /// Structure-constant equality with another algebra under a basis bijection.
    pub fn is_isomorphic_via(&self, other: &FinAlgebra, bijection: &[usize]) -> bool {
        let n = self.dim();
        if other.dim() != n || bijection.len() != n || bijection[self.unit] != other.unit {
            return false;
        }
        (0..n).all(|i| {
            (0..n).all(|j| {
                let mapped = normalize(
                    self.coefficients,
                    self.mult[i][j].iter().map(|&(k, x)| (bijection[k], x)).collect(),
                );
                mapped == other.mult[bijection[i]][bijection[j]]
            })
        })
    }
}

pub(crate) fn normalize(c: Coefficients, mut e: Element) -> Element {
    e.sort_unstable_by_key(|t| t.0);
    let mut out: Element = Vec::with_capacity(e.len());
    for (i, x) in e {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 = c.add(last.1, x),
            _ => out.push((i, c.reduce(x))),
        }
    }
    out.retain(|t| t.1 != 0);
    out
}

fn power_label(k: usize) -> String {
    match k {
        0 => "1".into(),
        1 => "x".into(),
        _ => format!("x^{k}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F2: Coefficients = Coefficients::PrimeField(2);

    #[test]
    fn gaussian_integers_relation() {
        let zi = FinAlgebra::gaussian_integers();
        assert_eq!(zi.dim(), 2);
        let i = zi.index_of("i").unwrap();
        assert_eq!(zi.mul_basis(i, i), &[(0, -1)]);
        assert!(zi.augmentation().is_none());
    }

    #[test]
    fn dual_numbers_and_augmentation() {
        let a = FinAlgebra::truncated_polynomial(F2, 2, 1).unwrap();
        assert_eq!(a.dim(), 2);
        let x = a.index_of("x").unwrap();
        assert!(a.mul_basis(x, x).is_empty());
        assert_eq!(a.apply_augmentation(&[(x, 1)]), Some(0));
        assert!(FinAlgebra::truncated_polynomial(F2, 1, 1).is_err());
    }

    #[test]
    fn non_associative_table_rejected() {
        // basis 1, a, b with a*a = b, a*b = 0 but b*b forced nonzero -> fails associativity
        let r = FinAlgebra::from_table(
            F2,
            vec!["1".into(), "a".into(), "b".into()],
            vec![0, 0, 0],
            0,
            |i, j| match (i, j) {
                (0, k) | (k, 0) => vec![(k, 1)],
                (1, 1) => vec![(2, 1)],
                (1, 2) => vec![],
                _ => vec![(1, 1)],
            },
            None,
        );
        assert!(matches!(r, Err(AlgebraError::NotAssociative(..))));
    }

    #[test]
    fn weight_additivity_enforced() {
        let r = FinAlgebra::from_table(
            F2,
            vec!["1".into(), "x".into()],
            vec![0, 1],
            0,
            // x·x = x is associative but puts weight 2 into weight 1
            |i, j| if i + j == 0 { vec![(0, 1)] } else { vec![(1, 1)] },
            None,
        );
        assert!(r.is_err());
    }

    #[test]
    fn tensor_dimensions_and_weights() {
        let a = FinAlgebra::truncated_polynomial(F2, 2, 1).unwrap();
        let b = FinAlgebra::truncated_polynomial(F2, 3, 1).unwrap();
        let t = a.tensor(&b).unwrap();
        assert_eq!(t.dim(), 6);
        let xy = t.index_of("x⊗x").unwrap();
        assert_eq!(t.weight(xy), 2);
        t.validate().unwrap();
        let aa = a.tensor(&a).unwrap();
        assert_eq!(aa.weight(aa.index_of("x⊗x").unwrap()), 2);
    }

    #[test]
    fn tensor_with_ground_ring_is_identity() {
        let a = FinAlgebra::truncated_polynomial(Coefficients::PrimeField(3), 3, 1).unwrap();
        let t = a.tensor(&FinAlgebra::coefficient_ring(a.coefficients())).unwrap();
        let ident: Vec<usize> = (0..a.dim()).collect();
        assert!(a.is_isomorphic_via(&t, &ident));
    }

    #[test]
    fn tensor_coefficients_must_match() {
        let a = FinAlgebra::coefficient_ring(F2);
        let b = FinAlgebra::coefficient_ring(Coefficients::PrimeField(3));
        assert!(a.tensor(&b).is_err());
    }

    #[test]
    fn truncated_polynomial_ring_flag() {
        let p = FinAlgebra::polynomial(F2, 2, 7).unwrap();
        assert_eq!(p.dim(), 4);
        assert_eq!(p.truncated_at(), Some(7));
        assert!(FinAlgebra::polynomial(F2, 0, 7).is_err());
    }

    #[test]
    fn reindexing_preserves_structure() {
        let a = FinAlgebra::truncated_polynomial(F2, 3, 1).unwrap();
        let b = a.reindexed(&[2, 0, 1]).unwrap();
        assert_eq!(b.unit(), 1);
        assert_eq!(b.label(0), "x^2");
        assert!(a.is_isomorphic_via(&b, &[1, 2, 0]));
    }
}
