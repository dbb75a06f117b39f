use super::tor::gamma_name;
use super::{FreeGCA, GcaError};
use crate::exact::GeneratorKind;
use serde::Serialize;

/// A free algebra whose generators all carry a bidegree `(s, t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigradedGCA {
    gca: FreeGCA,
}

impl BigradedGCA {
    pub fn new(gca: FreeGCA) -> Result<Self, GcaError> {
        if let Some(g) = gca.generators().iter().find(|g| g.filtration.is_none()) {
            return Err(GcaError::MissingFiltration(g.name.clone()));
        }
        Ok(BigradedGCA { gca })
    }

    pub fn gca(&self) -> &FreeGCA {
        &self.gca
    }

    /// Generators, plus the pieces `γ_{p^k}` (k ≥ 1) of divided-power
    /// generators with total degree at most `bound`.
    pub fn indecomposables(&self, bound: usize) -> Vec<(String, (usize, usize))> {
        let p = self.gca.prime() as usize;
        let mut out = Vec::new();
        for g in self.gca.generators() {
            let (s, t) = g.bidegree().expect("checked on construction");
            out.push((g.name.clone(), (s, t)));
            if g.kind == GeneratorKind::DividedPower && g.degree > 0 {
                let mut k = 1;
                let mut pk = p;
                while pk * g.degree <= bound {
                    out.push((gamma_name(&g.name, p as u32, k), (pk * s, pk * t)));
                    k += 1;
                    pk *= p;
                }
            }
        }
        out
    }

    pub fn primitives(&self) -> Vec<(String, (usize, usize))> {
        self.gca.generators().iter().map(|g| (g.name.clone(), g.bidegree().expect("checked on construction"))).collect()
    }
}

/// A possible differential `d^r` from an indecomposable to a primitive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub source: String,
    pub source_bidegree: (usize, usize),
    pub target: String,
    pub target_bidegree: (usize, usize),
    pub r: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollapseReport {
    pub collapses: bool,
    pub candidates: Vec<Candidate>,
    pub notes: Vec<String>,
}

/// Lists every pair (indecomposable at `(a, b)`, primitive at
/// `(a - r, b + r - 1)`) with `r ≥ 2`, up to total degree `bound`.
pub fn check_collapse_by_degree(e2: &BigradedGCA, bound: usize) -> CollapseReport {
    let prims = e2.primitives();
    let mut candidates = Vec::new();
    for (source, (a, b)) in e2.indecomposables(bound) {
        for (target, (a2, b2)) in &prims {
            if *a2 + 2 <= a && b + (a - a2) - 1 == *b2 {
                candidates.push(Candidate {
                    source: source.clone(),
                    source_bidegree: (a, b),
                    target: target.clone(),
                    target_bidegree: (*a2, *b2),
                    r: a - a2,
                });
            }
        }
    }
    let mut notes = Vec::new();
    if e2.gca.prime() != 2 && e2.gca.generators().iter().any(|g| g.kind == GeneratorKind::DividedPower) {
        notes.push(format!(
            "divided-power pieces at p = {} are placed in bidegree (p^k s, p^k t) by analogy with p = 2",
            e2.gca.prime()
        ));
    }
    CollapseReport { collapses: candidates.is_empty(), candidates, notes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gca::{e2_page, Generator, Spectrum};

    fn page(p: u32, gens: Vec<Generator>) -> BigradedGCA {
        BigradedGCA::new(FreeGCA::new(p, gens).unwrap()).unwrap()
    }

    #[test]
    fn planted_differential_is_found() {
        // γ₄x sits at (4, 20); a primitive at (1, 22) is three steps away
        let e2 = page(2, vec![
            Generator::divided_power("x", 6).with_filtration(1),
            Generator::exterior("z", 23).with_filtration(1),
        ]);
        let report = check_collapse_by_degree(&e2, 40);
        assert!(!report.collapses);
        assert_eq!(report.candidates.len(), 1);
        let c = &report.candidates[0];
        assert_eq!((c.source.as_str(), c.target.as_str(), c.r), ("γ4(x)", "z", 3));
    }

    #[test]
    fn ko_and_ell_collapse() {
        for e in [Spectrum::Ko, Spectrum::Tmf, Spectrum::Ku, Spectrum::Ell(3), Spectrum::Ell(5)] {
            let r = check_collapse_by_degree(&BigradedGCA::new(e2_page(e, 2, 200).unwrap()).unwrap(), 200);
            assert!(r.collapses, "{e}: {:?}", r.candidates);
        }
        let ell = check_collapse_by_degree(&BigradedGCA::new(e2_page(Spectrum::Ell(3), 2, 60).unwrap()).unwrap(), 60);
        assert_eq!(ell.notes.len(), 1);
    }

    #[test]
    fn first_order_odd_primes_have_candidates() {
        // γ_p(στ̄_j) and σξ̄_{j+1} are p - 1 filtrations apart
        let e1 = BigradedGCA::new(e2_page(Spectrum::Ell(3), 1, 60).unwrap()).unwrap();
        let r = check_collapse_by_degree(&e1, 60);
        assert!(r.candidates.iter().any(|c| c.r == 2 && c.source == "γ3(ρ⁰τ̄2)" && c.target == "εξ̄3"));
    }

    #[test]
    fn requires_filtrations() {
        let a = FreeGCA::new(2, vec![Generator::exterior("x", 3)]).unwrap();
        assert_eq!(BigradedGCA::new(a), Err(GcaError::MissingFiltration("x".into())));
    }
}
