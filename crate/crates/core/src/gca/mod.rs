//! Free graded-commutative algebras, described additively by their
//! generators, and the closed-form Tor computations built on them.

mod bar;
mod collapse;
mod spectra;
mod tor;

pub use bar::tor_bruteforce;
pub use collapse::{check_collapse_by_degree, BigradedGCA, Candidate, CollapseReport};
pub use spectra::{a_e_table, bar_e2_ku, e2_page, thh_with_coefficients, action_exponent, thh_coeff, Spectrum};
pub use tor::{b_double_prime, b_prime, tor_step, tor_with_coefficients, Action};

use crate::exact::{is_prime, series_of_generator, ExactError, GeneratorKind, PoincareSeries};
use crate::loday::LodayError;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Default total-degree bound for operations that could emit infinitely
/// many generators.
pub const DEFAULT_BOUND: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GcaError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("invalid generator `{0}`: {1}")]
    InvalidGenerator(String, String),
    #[error("more than one generator of degree 0")]
    MultipleDegreeZero,
    #[error("`{0}` has degree 0 and would produce infinitely many generators in degree 1")]
    UnboundedDegreeZero(String),
    #[error("unsupported action: {0}")]
    UnsupportedAction(String),
    #[error("{p} does not divide {m}")]
    PNotDividingM { p: u32, m: u64 },
    #[error("{spectrum} lives at {expected}, not at p = {found}")]
    WrongPrime { spectrum: String, expected: String, found: u32 },
    #[error("unknown spectrum `{0}`")]
    UnknownSpectrum(String),
    #[error("generator `{0}` has no filtration degree")]
    MissingFiltration(String),
    #[error("algebra has no augmentation")]
    NoAugmentation,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("input error: {0}")]
    Parse(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Loday(#[from] LodayError),
}

/// One generator: kind, total degree and an optional filtration degree `s`
/// (the internal degree is then `degree - s`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub kind: GeneratorKind,
    pub degree: usize,
    pub filtration: Option<usize>,
}

impl Generator {
    pub fn new(name: impl Into<String>, kind: GeneratorKind, degree: usize) -> Self {
        Generator { name: name.into(), kind, degree, filtration: None }
    }

    pub fn with_filtration(mut self, s: usize) -> Self {
        self.filtration = Some(s);
        self
    }

    pub fn exterior(name: impl Into<String>, degree: usize) -> Self {
        Self::new(name, GeneratorKind::Exterior, degree)
    }

    pub fn polynomial(name: impl Into<String>, degree: usize) -> Self {
        Self::new(name, GeneratorKind::Polynomial, degree)
    }

    pub fn divided_power(name: impl Into<String>, degree: usize) -> Self {
        Self::new(name, GeneratorKind::DividedPower, degree)
    }

    pub fn truncated(name: impl Into<String>, degree: usize, m: u64) -> Self {
        Self::new(name, GeneratorKind::Truncated(m), degree)
    }

    /// `(s, t)` when a filtration is set.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        self.filtration.map(|s| (s, self.degree - s))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            GeneratorKind::Exterior => "Λ".to_string(),
            GeneratorKind::Polynomial => "P".to_string(),
            GeneratorKind::DividedPower => "Γ".to_string(),
            GeneratorKind::Truncated(m) => format!("P/{m}"),
        };
        write!(f, "{kind}({}; {}", self.name, self.degree)?;
        if let Some((s, t)) = self.bidegree() {
            write!(f, "; ({s},{t})")?;
        }
        write!(f, ")")
    }
}

/// Free graded-commutative algebra over `F_p` on a list of generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeGCA {
    p: u32,
    generators: Vec<Generator>,
}

impl FreeGCA {
    /// Validates parity (at odd `p`), truncation orders, filtrations and
    /// the single-degree-0 rule.
    pub fn new(p: u32, generators: Vec<Generator>) -> Result<Self, GcaError> {
        if !is_prime(p as u64) {
            return Err(GcaError::NotPrime(p));
        }
        let bad = |g: &Generator, why: &str| Err(GcaError::InvalidGenerator(g.name.clone(), why.to_string()));
        for g in &generators {
            if let GeneratorKind::Truncated(m) = g.kind {
                if m < 2 {
                    return bad(g, "truncation order below 2");
                }
            }
            if p != 2 {
                let odd = g.degree % 2 == 1;
                match g.kind {
                    GeneratorKind::Exterior if !odd => return bad(g, "exterior generators have odd degree at odd p"),
                    GeneratorKind::Exterior => {}
                    _ if odd => return bad(g, "even-type generators have even degree at odd p"),
                    _ => {}
                }
            }
            if g.filtration.is_some_and(|s| s > g.degree) {
                return bad(g, "filtration exceeds total degree");
            }
        }
        if generators.iter().filter(|g| g.degree == 0).count() > 1 {
            return Err(GcaError::MultipleDegreeZero);
        }
        Ok(FreeGCA { p, generators })
    }

    /// The ground field.
    pub fn unit(p: u32) -> Result<Self, GcaError> {
        Self::new(p, Vec::new())
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    /// Tensor product; the primes must agree.
    pub fn tensor(&self, other: &FreeGCA) -> Result<FreeGCA, GcaError> {
        if self.p != other.p {
            return Err(GcaError::Parse(format!("primes {} and {} differ", self.p, other.p)));
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        FreeGCA::new(self.p, gens)
    }

    /// Sorted total degrees of the generators.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.generators.iter().map(|g| g.degree).collect();
        d.sort_unstable();
        d
    }

    /// Generators as `(kind, degree)`, sorted; names and filtrations ignored.
    pub fn signature(&self) -> Vec<(GeneratorKind, usize)> {
        let mut v: Vec<(GeneratorKind, usize)> = self.generators.iter().map(|g| (g.kind, g.degree)).collect();
        v.sort_by_key(|&(k, d)| (d, format!("{k:?}")));
        v
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&GcaJson::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, GcaError> {
        let j: GcaJson = serde_json::from_str(text).map_err(|e| GcaError::Parse(e.to_string()))?;
        j.build()
    }
}

impl Serialize for FreeGCA {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GcaJson::from(self).serialize(s)
    }
}

impl fmt::Display for FreeGCA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "F{}", self.p);
        }
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(" ⊗ "))
    }
}

/// Poincaré series of `A` through degree `bound`.
pub fn poincare(a: &FreeGCA, bound: usize) -> Result<PoincareSeries, GcaError> {
    let mut s = PoincareSeries::one(bound);
    for g in &a.generators {
        s = s.mul(&series_of_generator(g.kind, g.degree, bound)?);
    }
    Ok(s)
}

/// Bigraded series: `coeffs[s][t]` counts monomials of filtration `s` and
/// internal degree `t`, for total degree at most `bound`.
pub fn bigraded_series(a: &FreeGCA, bound: usize) -> Result<Vec<Vec<u64>>, GcaError> {
    let mut acc = vec![vec![0u64; bound + 1]; bound + 1];
    acc[0][0] = 1;
    for g in &a.generators {
        let (s, t) = g.bidegree().ok_or_else(|| GcaError::MissingFiltration(g.name.clone()))?;
        if s + t == 0 {
            return Err(ExactError::ZeroDegreeGenerator.into());
        }
        let single = series_of_generator(g.kind, g.degree, bound)?;
        let mut next = vec![vec![0u64; bound + 1]; bound + 1];
        for (k, &c) in single.coefficients().iter().enumerate() {
            if c == 0 {
                continue;
            }
            // the k-th degree piece of a single generator sits at k / deg copies
            let copies = k / g.degree;
            let (ds, dt) = (copies * s, copies * t);
            for (s0, row) in acc.iter().enumerate() {
                for (t0, &x) in row.iter().enumerate() {
                    if x != 0 && s0 + ds + t0 + dt <= bound {
                        next[s0 + ds][t0 + dt] += x * c;
                    }
                }
            }
        }
        acc = next;
    }
    Ok(acc)
}

#[derive(Serialize, Deserialize)]
struct GeneratorJson {
    name: String,
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    m: Option<u64>,
    degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    filtration: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct GcaJson {
    p: u32,
    generators: Vec<GeneratorJson>,
}

impl From<&FreeGCA> for GcaJson {
    fn from(a: &FreeGCA) -> Self {
        GcaJson {
            p: a.p,
            generators: a
                .generators
                .iter()
                .map(|g| {
                    let (kind, m) = match g.kind {
                        GeneratorKind::Exterior => ("ext", None),
                        GeneratorKind::Polynomial => ("poly", None),
                        GeneratorKind::DividedPower => ("divpow", None),
                        GeneratorKind::Truncated(m) => ("trunc", Some(m)),
                    };
                    GeneratorJson { name: g.name.clone(), kind: kind.into(), m, degree: g.degree, filtration: g.filtration }
                })
                .collect(),
        }
    }
}

impl GcaJson {
    fn build(self) -> Result<FreeGCA, GcaError> {
        let gens = self
            .generators
            .into_iter()
            .map(|g| {
                let kind = match (g.kind.as_str(), g.m) {
                    ("ext", _) => GeneratorKind::Exterior,
                    ("poly", _) => GeneratorKind::Polynomial,
                    ("divpow", _) => GeneratorKind::DividedPower,
                    ("trunc", Some(m)) => GeneratorKind::Truncated(m),
                    ("trunc", None) => return Err(GcaError::Parse(format!("`{}` needs a truncation order m", g.name))),
                    (other, _) => return Err(GcaError::Parse(format!("unknown kind `{other}`"))),
                };
                Ok(Generator { name: g.name, kind, degree: g.degree, filtration: g.filtration })
            })
            .collect::<Result<Vec<_>, _>>()?;
        FreeGCA::new(self.p, gens)
    }
}
