use super::ExactError;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Kind of a single free generator, as far as its additive size is concerned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GeneratorKind {
    Exterior,
    Polynomial,
    /// `k[x]/x^m`
    Truncated(u64),
    DividedPower,
}

/// Truncated power series `c_0 + c_1 t + ... + c_N t^N` with nonnegative
/// integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PoincareSeries {
    coeffs: Vec<u64>,
}

impl PoincareSeries {
    /// The constant series `1`, truncated at `bound`.
    pub fn one(bound: usize) -> Self {
        let mut coeffs = vec![0; bound + 1];
        coeffs[0] = 1;
        PoincareSeries { coeffs }
    }

    pub fn constant(c: u64, bound: usize) -> Self {
        let mut s = Self::one(bound);
        s.coeffs[0] = c;
        s
    }

    pub fn from_coefficients(coeffs: Vec<u64>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least c_0");
        PoincareSeries { coeffs }
    }

    pub fn bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn truncate(&self, bound: usize) -> Self {
        let mut coeffs: Vec<u64> = self.coeffs.iter().copied().take(bound + 1).collect();
        coeffs.resize(bound + 1, 0);
        PoincareSeries { coeffs }
    }

    /// Product, truncated at the smaller of the two bounds.
    pub fn mul(&self, other: &PoincareSeries) -> PoincareSeries {
        let n = self.bound().min(other.bound());
        let mut coeffs = vec![0u64; n + 1];
        for (i, &a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        PoincareSeries { coeffs }
    }

    /// Index of the first coefficient where the two series differ, up to the
    /// smaller bound.
    pub fn first_difference(&self, other: &PoincareSeries) -> Option<usize> {
        let n = self.bound().min(other.bound());
        (0..=n).find(|&k| self.coeffs[k] != other.coeffs[k])
    }
}

impl fmt::Display for PoincareSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(u64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Additive series of one generator of the given kind and degree.
pub fn series_of_generator(kind: GeneratorKind, degree: usize, bound: usize) -> Result<PoincareSeries, ExactError> {
    if degree == 0 {
        return Err(ExactError::ZeroDegreeGenerator);
    }
    let mut coeffs = vec![0u64; bound + 1];
    let powers: Box<dyn Iterator<Item = usize>> = match kind {
        GeneratorKind::Exterior => Box::new(0..2),
        GeneratorKind::Polynomial | GeneratorKind::DividedPower => Box::new(0..),
        GeneratorKind::Truncated(m) => Box::new(0..m as usize),
    };
    for k in powers {
        match k.checked_mul(degree) {
            Some(d) if d <= bound => coeffs[d] += 1,
            _ => break,
        }
    }
    Ok(PoincareSeries { coeffs })
}
