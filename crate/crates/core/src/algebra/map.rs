use super::{normalize, AlgebraError, Element, FinAlgebra};
use std::sync::Arc;

/// Unital algebra homomorphism given on basis elements.
///
/// A basis element of weight `w` must map to a combination of weight
/// `weight_scale * w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraMap {
    source: Arc<FinAlgebra>,
    target: Arc<FinAlgebra>,
    images: Vec<Element>,
    weight_scale: u32,
}

impl AlgebraMap {
    /// Builds the map and checks it exhaustively on basis products.
    pub fn new(
        source: Arc<FinAlgebra>,
        target: Arc<FinAlgebra>,
        images: Vec<Element>,
        weight_scale: u32,
    ) -> Result<Self, AlgebraError> {
        let bad = |m: String| Err(AlgebraError::InvalidMap(m));
        source.coefficients().ensure_same(target.coefficients())?;
        let c = source.coefficients();
        if images.len() != source.dim() {
            return bad(format!("{} images for {} basis elements", images.len(), source.dim()));
        }
        let images: Vec<Element> = images.into_iter().map(|e| normalize(c, e)).collect();
        if images.iter().flatten().any(|&(k, _)| k >= target.dim()) {
            return bad("image index out of range".into());
        }
        let map = AlgebraMap { source, target, images, weight_scale };
        let (s, t) = (&map.source, &map.target);
        if map.images[s.unit()] != vec![(t.unit(), 1)] {
            return bad("unit is not preserved".into());
        }
        for i in 0..s.dim() {
            let w = weight_scale * s.weight(i);
            if map.images[i].iter().any(|&(k, _)| t.weight(k) != w) {
                return bad(format!("weight of `{}` is not preserved", s.label(i)));
            }
            for j in i..s.dim() {
                let lhs = map.apply(s.mul_basis(i, j));
                let rhs = t.mul(&map.images[i], &map.images[j]);
                if lhs != rhs {
                    return bad(format!("not multiplicative on ({}, {})", s.label(i), s.label(j)));
                }
            }
            if let (Some(es), Some(_)) = (s.augmentation(), t.augmentation()) {
                if t.apply_augmentation(&map.images[i]) != Some(es[i]) {
                    return bad(format!("augmentation not preserved on `{}`", s.label(i)));
                }
            }
        }
        Ok(map)
    }

    pub fn identity(a: Arc<FinAlgebra>) -> Self {
        let images = (0..a.dim()).map(|i| vec![(i, 1)]).collect();
        AlgebraMap { source: a.clone(), target: a, images, weight_scale: 1 }
    }

    /// The unit map from the coefficient ring.
    pub fn unit_map(a: Arc<FinAlgebra>) -> Self {
        let k = Arc::new(FinAlgebra::coefficient_ring(a.coefficients()));
        let images = vec![vec![(a.unit(), 1)]];
        AlgebraMap { source: k, target: a, images, weight_scale: 1 }
    }

    /// The augmentation as a map to the coefficient ring.
    pub fn augmentation(a: Arc<FinAlgebra>) -> Result<Self, AlgebraError> {
        let aug = a.augmentation().ok_or(AlgebraError::NoAugmentation)?;
        let images: Vec<Element> = aug.iter().map(|&x| if x == 0 { vec![] } else { vec![(0, x)] }).collect();
        let k = Arc::new(FinAlgebra::coefficient_ring(a.coefficients()));
        for (i, e) in images.iter().enumerate() {
            if !e.is_empty() && a.weight(i) != 0 {
                return Err(AlgebraError::InvalidMap(format!(
                    "augmentation is nonzero on `{}` of positive weight",
                    a.label(i)
                )));
            }
        }
        Ok(AlgebraMap { source: a, target: k, images, weight_scale: 1 })
    }

    /// Sends each source basis element to the target basis element with the same label.
    pub fn by_labels(source: Arc<FinAlgebra>, target: Arc<FinAlgebra>, weight_scale: u32) -> Result<Self, AlgebraError> {
        let images = source
            .labels()
            .iter()
            .map(|l| target.index_of(l).map(|k| vec![(k, 1)]).or_else(|_| Ok::<_, AlgebraError>(vec![])))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(source, target, images, weight_scale)
    }

    /// Projection `k[x]/x^m -> k[x]/x^n` (or any map killing labels absent from the target).
    pub fn projection(source: Arc<FinAlgebra>, target: Arc<FinAlgebra>) -> Result<Self, AlgebraError> {
        Self::by_labels(source, target, 1)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &AlgebraMap) -> Result<AlgebraMap, AlgebraError> {
        if *self.target != *other.source {
            return Err(AlgebraError::InvalidMap("composition of non-composable maps".into()));
        }
        let images = self.images.iter().map(|e| other.apply(e)).collect();
        Ok(AlgebraMap {
            source: self.source.clone(),
            target: other.target.clone(),
            images,
            weight_scale: self.weight_scale * other.weight_scale,
        })
    }

    pub fn source(&self) -> &Arc<FinAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinAlgebra> {
        &self.target
    }

    pub fn weight_scale(&self) -> u32 {
        self.weight_scale
    }

    pub fn image(&self, i: usize) -> &[(usize, i64)] {
        &self.images[i]
    }

    pub fn apply(&self, v: &[(usize, i64)]) -> Element {
        let c = self.source.coefficients();
        let mut out = Vec::new();
        for &(i, x) in v {
            out.extend(self.images[i].iter().map(|&(k, y)| (k, c.mul(x, y))));
        }
        normalize(c, out)
    }

    /// True when every basis element maps to a single basis element with coefficient 1.
    pub fn is_monomial(&self) -> bool {
        self.images.iter().all(|e| e.is_empty() || (e.len() == 1 && e[0].1 == 1))
    }
}
