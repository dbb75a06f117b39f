//! Exact linear algebra over prime fields and the integers.
//!
//! Everything here works on sparse matrices with `i64` scalars. Over a prime
//! field scalars are kept reduced into `0..p`; over the integers they are
//! plain integers and elimination runs in `i128` with overflow checks.

mod field;
mod homology;
mod matrix;
mod series;
mod smith;

pub use field::{rank, rank_and_kernel, Echelon};
pub use homology::{homology_at, merge_torsion, HomologyEntry, HomologyTable};
pub use matrix::ExactMatrix;
pub use series::{series_of_generator, GeneratorKind, PoincareSeries};
pub use smith::{smith_normal_form, SmithForm};

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("coefficient mismatch: expected {expected}, found {found}")]
    CoefficientMismatch {
        expected: Coefficients,
        found: Coefficients,
    },
    #[error("entry ({row}, {col}) out of bounds for a {rows}x{cols} matrix")]
    IndexOutOfBounds {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("composite of differentials is nonzero")]
    CompositionNonzero,
    #[error("generator of degree 0 has no degree-wise finite series")]
    ZeroDegreeGenerator,
    #[error("integer overflow during elimination")]
    Overflow,
    #[error("unknown coefficient ring `{0}`")]
    UnknownCoefficients(String),
}

/// Ground ring: a prime field `F_p` or the integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Coefficients {
    PrimeField(u32),
    Integers,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Coefficients {
    pub fn prime_field(p: u32) -> Result<Self, ExactError> {
        // keeps products of two reduced scalars inside u64
        if !is_prime(p as u64) || p >= (1 << 31) {
            return Err(ExactError::NotPrime(p as u64));
        }
        Ok(Coefficients::PrimeField(p))
    }

    pub fn is_field(&self) -> bool {
        matches!(self, Coefficients::PrimeField(_))
    }

    /// The prime `p`, or `None` over the integers.
    pub fn prime(&self) -> Option<u32> {
        match self {
            Coefficients::PrimeField(p) => Some(*p),
            Coefficients::Integers => None,
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.prime().map_or(0, |p| p as u64)
    }

    #[inline]
    pub fn reduce(&self, x: i64) -> i64 {
        match self {
            Coefficients::PrimeField(p) => x.rem_euclid(*p as i64),
            Coefficients::Integers => x,
        }
    }

    #[inline]
    pub fn add(&self, a: i64, b: i64) -> i64 {
        match self {
            Coefficients::PrimeField(p) => (a + b).rem_euclid(*p as i64),
            Coefficients::Integers => a.checked_add(b).expect("integer overflow in scalar add"),
        }
    }

    #[inline]
    pub fn mul(&self, a: i64, b: i64) -> i64 {
        match self {
            Coefficients::PrimeField(p) => ((a as i128 * b as i128).rem_euclid(*p as i128)) as i64,
            Coefficients::Integers => a.checked_mul(b).expect("integer overflow in scalar mul"),
        }
    }

    #[inline]
    pub fn neg(&self, a: i64) -> i64 {
        self.reduce(-a)
    }

    pub fn ensure_same(&self, other: Coefficients) -> Result<(), ExactError> {
        if *self == other {
            Ok(())
        } else {
            Err(ExactError::CoefficientMismatch {
                expected: *self,
                found: other,
            })
        }
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::PrimeField(p) => write!(f, "F{p}"),
            Coefficients::Integers => write!(f, "Z"),
        }
    }
}

impl FromStr for Coefficients {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "Z" || t.eq_ignore_ascii_case("integers") {
            return Ok(Coefficients::Integers);
        }
        let digits = t
            .strip_prefix('F')
            .or_else(|| t.strip_prefix('f'))
            .unwrap_or(t);
        let p: u32 = digits
            .parse()
            .map_err(|_| ExactError::UnknownCoefficients(s.to_string()))?;
        Coefficients::prime_field(p)
    }
}
