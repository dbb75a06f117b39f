use super::tor::{tor_step, tor_with_coefficients, Action};
use super::{FreeGCA, GcaError, Generator};
use crate::exact::{is_prime, GeneratorKind};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// The connective spectra with known `THH(E; HF_p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Spectrum {
    Ko,
    Tmf,
    Ku,
    /// The Adams summand at an odd prime.
    Ell(u32),
}

impl Spectrum {
    pub fn prime(self) -> u32 {
        match self {
            Spectrum::Ell(p) => p,
            _ => 2,
        }
    }

    /// Checks that an explicitly requested prime fits the spectrum.
    pub fn at_prime(self, p: u32) -> Result<Self, GcaError> {
        let wrong = |expected: &str| GcaError::WrongPrime { spectrum: self.to_string(), expected: expected.into(), found: p };
        match self {
            Spectrum::Ell(_) if p == 2 || !is_prime(p as u64) => Err(wrong("an odd prime")),
            Spectrum::Ell(_) => Ok(Spectrum::Ell(p)),
            _ if p != 2 => Err(wrong("p = 2")),
            s => Ok(s),
        }
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Spectrum::Ko => write!(f, "ko"),
            Spectrum::Tmf => write!(f, "tmf"),
            Spectrum::Ku => write!(f, "ku"),
            Spectrum::Ell(p) => write!(f, "ell:{p}"),
        }
    }
}

/// `ko`, `tmf`, `ku`, `ell` (at p = 3) or `ell:p`.
impl FromStr for Spectrum {
    type Err = GcaError;

    fn from_str(s: &str) -> Result<Self, GcaError> {
        match s.trim() {
            "ko" => Ok(Spectrum::Ko),
            "tmf" => Ok(Spectrum::Tmf),
            "ku" => Ok(Spectrum::Ku),
            "ell" | "l" | "ℓ" => Ok(Spectrum::Ell(3)),
            other => {
                let p = other
                    .strip_prefix("ell:")
                    .or_else(|| other.strip_prefix("ℓ:"))
                    .and_then(|p| p.parse::<u32>().ok())
                    .ok_or_else(|| GcaError::UnknownSpectrum(other.to_string()))?;
                Spectrum::Ell(p).at_prime(p)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Dual {
    Xi,
    Tau,
}

/// A generator `ξ̄_i^power` or `τ̄_i` of the dual Steenrod algebra.
#[derive(Debug, Clone, Copy)]
struct Monomial {
    dual: Dual,
    index: u32,
    power: u64,
}

impl Monomial {
    fn degree(self, p: u32) -> usize {
        let pi = (p as usize).pow(self.index);
        let base = match (p, self.dual) {
            (2, _) => pi - 1,
            (_, Dual::Xi) => 2 * pi - 2,
            (_, Dual::Tau) => 2 * pi - 1,
        };
        self.power as usize * base
    }

    fn name(self) -> String {
        let sym = match self.dual {
            Dual::Xi => "ξ̄",
            Dual::Tau => "τ̄",
        };
        if self.power == 1 {
            format!("{sym}{}", self.index)
        } else {
            format!("{sym}{}^{}", self.index, self.power)
        }
    }
}

fn xi(index: u32, power: u64) -> Monomial {
    Monomial { dual: Dual::Xi, index, power }
}

/// Exterior part and polynomial generator of `A_E`, as suspended monomials.
fn a_e_monomials(e: Spectrum) -> (Vec<Monomial>, Monomial) {
    match e {
        Spectrum::Ko => (vec![xi(1, 4), xi(2, 2)], xi(3, 1)),
        Spectrum::Tmf => (vec![xi(1, 8), xi(2, 4), xi(3, 2)], xi(4, 1)),
        Spectrum::Ku => (vec![xi(1, 2), xi(2, 2)], xi(3, 1)),
        Spectrum::Ell(_) => (vec![xi(1, 1), xi(2, 1)], Monomial { dual: Dual::Tau, index: 2, power: 1 }),
    }
}

/// `A_E` with the dual-Steenrod names, `H_*(THH(E)) ≅ H_*(E) ⊗ A_E`.
pub fn a_e_table(e: Spectrum) -> Result<FreeGCA, GcaError> {
    let p = e.prime();
    let (ext, poly) = a_e_monomials(e);
    let mut gens: Vec<Generator> =
        ext.iter().map(|m| Generator::exterior(format!("σ{}", m.name()), m.degree(p) + 1)).collect();
    gens.push(Generator::polynomial(format!("σ{}", poly.name()), poly.degree(p) + 1));
    FreeGCA::new(p, gens)
}

/// `THH_*(E; HF_p)` with the short names `x_d`, `μ_d` (or `y_d` at odd p).
pub fn thh_coeff(e: Spectrum) -> Result<FreeGCA, GcaError> {
    let p = e.prime();
    let (ext, poly) = a_e_monomials(e);
    let mut gens: Vec<Generator> = ext
        .iter()
        .map(|m| {
            let d = m.degree(p) + 1;
            Generator::exterior(format!("x{d}"), d)
        })
        .collect();
    let d = poly.degree(p) + 1;
    let letter = if p == 2 { "μ" } else { "y" };
    gens.push(Generator::polynomial(format!("{letter}{d}"), d));
    FreeGCA::new(p, gens)
}

/// The power of `μ₂` hit by the polynomial generator of `THH_*(E; HF_p)`:
/// `σξ̄_k = (σξ̄_1)^{2^{k-1}}` at 2 and `στ̄_k = (στ̄_0)^{p^k}` at odd p.
pub fn action_exponent(e: Spectrum) -> u64 {
    let (_, poly) = a_e_monomials(e);
    let p = e.prime() as u64;
    match poly.dual {
        Dual::Xi => p.pow(poly.index - 1),
        Dual::Tau => p.pow(poly.index),
    }
}

/// `THH^E_*(HF_p)` additively, as `Tor^{THH_*(E; HF_p)}(F_p, F_p[μ₂])`.
pub fn thh_with_coefficients(e: Spectrum, bound: usize) -> Result<FreeGCA, GcaError> {
    let a = thh_coeff(e)?;
    let m = FreeGCA::new(e.prime(), vec![Generator::polynomial("μ2", 2)])?;
    let top = a.generators().iter().find(|g| g.kind == GeneratorKind::Polynomial).expect("one polynomial generator");
    let actions: BTreeMap<String, Action> =
        [(top.name.clone(), Action::Power { target: "μ2".into(), exponent: action_exponent(e) })].into_iter().collect();
    tor_with_coefficients(&a, &m, &actions, bound)
}

/// `H_*(E; F_p)` through degree `bound`.
fn homology_of(e: Spectrum, bound: usize) -> Result<FreeGCA, GcaError> {
    let p = e.prime();
    let (ext, poly) = a_e_monomials(e);
    let mut gens = Vec::new();
    let mut push = |m: Monomial, kind: GeneratorKind| {
        let d = m.degree(p);
        if d <= bound {
            gens.push(Generator::new(m.name(), kind, d));
        }
    };
    let tail = if p == 2 { GeneratorKind::Polynomial } else { GeneratorKind::Exterior };
    for &m in &ext {
        push(m, GeneratorKind::Polynomial);
    }
    // the remaining polynomial (resp. exterior) generators start at the one
    // whose suspension is the polynomial generator of A_E
    let mut m = poly;
    while m.degree(p) <= bound {
        push(m, tail);
        m.index += 1;
    }
    if p != 2 {
        let mut i = ext.len() as u32 + 1;
        while xi(i, 1).degree(p) <= bound {
            push(xi(i, 1), GeneratorKind::Polynomial);
            i += 1;
        }
    }
    FreeGCA::new(p, gens)
}

/// `E²` of the bar spectral sequence for `THH^{[order]}(E; HF_p)`, through
/// total degree `bound`.
///
/// Order 1 is `Tor^{H_*(E)}(F_p, F_p)`; higher orders iterate from
/// `THH_*(E; HF_p)`.
pub fn e2_page(e: Spectrum, order: usize, bound: usize) -> Result<FreeGCA, GcaError> {
    match order {
        0 => Err(GcaError::InvalidParameter("order must be at least 1".into())),
        1 => tor_step(&homology_of(e, bound)?, bound),
        n => {
            let mut a = thh_coeff(e)?;
            for _ in 1..n {
                a = tor_step(&a, bound)?;
            }
            Ok(a)
        }
    }
}

/// Bar `E²` for `THH(ku; HF₂)`.
pub fn bar_e2_ku(bound: usize) -> Result<FreeGCA, GcaError> {
    e2_page(Spectrum::Ku, 1, bound)
}
