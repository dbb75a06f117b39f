use super::{
    check_collapse_page, check_collapse_control, check_ground, check_juggle, check_monoid_closed_form, check_pair_coequalizer,
    check_pushout_coequalizer, check_quotient_pair, check_thh_coefficients, check_two_sided_bar, CheckReport, MonoidCase, VerifyError,
};
use crate::algebra::{AlgebraMap, FinAlgebra};
use crate::exact::Coefficients;
use crate::gca::Spectrum;
use crate::loday::LodayInput;
use crate::simplicial::{FinSimplicialSet, SimplicialPair};
use rayon::prelude::*;
use std::sync::Arc;

fn field(p: u32) -> Coefficients {
    Coefficients::prime_field(p).expect("prime")
}

fn truncated(p: u32, m: usize) -> Arc<FinAlgebra> {
    Arc::new(FinAlgebra::truncated_polynomial(field(p), m, 1).expect("m >= 2"))
}

fn ground(p: u32) -> Arc<FinAlgebra> {
    Arc::new(FinAlgebra::coefficient_ring(field(p)))
}

/// `A -> A ⊗ F_p[y]/y^2`, `a ↦ a ⊗ 1`.
fn adjoin_square_zero(a: &Arc<FinAlgebra>) -> Result<AlgebraMap, VerifyError> {
    let y = FinAlgebra::truncated_polynomial(a.coefficients(), 2, 1)?;
    let b = Arc::new(a.tensor(&y)?);
    let images = (0..a.dim()).map(|i| vec![(i * y.dim() + y.unit(), 1)]).collect();
    Ok(AlgebraMap::new(a.clone(), b, images, 1)?)
}

/// A named desk-scale instance of one of the checks.
pub struct SuiteEntry {
    pub name: &'static str,
    run: fn() -> Result<CheckReport, VerifyError>,
}

impl SuiteEntry {
    pub fn run(&self) -> Result<CheckReport, VerifyError> {
        (self.run)()
    }
}

fn coequalizer_delta2() -> Result<CheckReport, VerifyError> {
    let a = truncated(2, 2);
    let f = AlgebraMap::augmentation(a)?;
    let g = AlgebraMap::identity(f.target().clone());
    let input = LodayInput::relative(SimplicialPair::delta_boundary(2)?, f, g, 3)?.with_max_weight(3);
    check_pair_coequalizer(&input)
}

fn coequalizer_delta1() -> Result<CheckReport, VerifyError> {
    let f = adjoin_square_zero(&truncated(2, 2))?;
    let g = AlgebraMap::augmentation(f.target().clone())?;
    check_pair_coequalizer(&LodayInput::relative(SimplicialPair::delta_boundary(1)?, f, g, 4)?)
}

fn coequalizer_basepoint() -> Result<CheckReport, VerifyError> {
    let a = truncated(3, 3);
    let x = Arc::new(FinSimplicialSet::delta(1)?);
    let pair = SimplicialPair::absolute(x);
    let f = AlgebraMap::identity(a.clone());
    let g = AlgebraMap::augmentation(a)?;
    check_pair_coequalizer(&LodayInput::relative(pair, f, g, 4)?)
}

fn coequalizer_circle_pushout() -> Result<CheckReport, VerifyError> {
    let d1 = Arc::new(FinSimplicialSet::delta(1)?);
    let b1 = Arc::new(FinSimplicialSet::boundary_delta(1)?);
    let g = AlgebraMap::augmentation(truncated(2, 2))?;
    check_pushout_coequalizer(&d1, &b1, &d1, &g, 4, None)
}

fn coequalizer_sphere_pushout() -> Result<CheckReport, VerifyError> {
    let d2 = Arc::new(FinSimplicialSet::delta(2)?);
    let b2 = Arc::new(FinSimplicialSet::boundary_delta(2)?);
    let g = AlgebraMap::identity(ground(2));
    check_pushout_coequalizer(&d2, &b2, &d2, &g, 3, None)
}

fn quotient_delta1() -> Result<CheckReport, VerifyError> {
    check_quotient_pair(&SimplicialPair::delta_boundary(1)?, &truncated(2, 2), 5)
}

fn quotient_delta2() -> Result<CheckReport, VerifyError> {
    check_quotient_pair(&SimplicialPair::delta_boundary(2)?, &truncated(3, 3), 4)
}

fn quotient_full() -> Result<CheckReport, VerifyError> {
    let x = Arc::new(FinSimplicialSet::delta(1)?);
    check_quotient_pair(&SimplicialPair::full(x), &truncated(2, 2), 4)
}

fn juggle_square_zero() -> Result<CheckReport, VerifyError> {
    check_juggle(&adjoin_square_zero(&truncated(2, 2))?, 4)
}

fn juggle_identity() -> Result<CheckReport, VerifyError> {
    check_juggle(&AlgebraMap::identity(truncated(3, 3)), 4)
}

fn juggle_ground() -> Result<CheckReport, VerifyError> {
    check_juggle(&AlgebraMap::unit_map(truncated(2, 3)), 3)
}

fn two_sided_bar_square_zero() -> Result<CheckReport, VerifyError> {
    check_two_sided_bar(&adjoin_square_zero(&truncated(2, 2))?, 4)
}

fn two_sided_bar_augmentation() -> Result<CheckReport, VerifyError> {
    check_two_sided_bar(&AlgebraMap::augmentation(truncated(3, 3))?, 5)
}

fn ground_delta2() -> Result<CheckReport, VerifyError> {
    let f = adjoin_square_zero(&truncated(2, 2))?;
    let g = AlgebraMap::augmentation(f.target().clone())?;
    let input = LodayInput::relative(SimplicialPair::delta_boundary(2)?, f, g, 2)?.with_max_weight(2);
    check_ground(&input)
}

fn monoid_s1() -> Result<CheckReport, VerifyError> {
    check_monoid_closed_form(MonoidCase::Truncated { p: 2, m: 2 }, 1, 8)
}

fn monoid_s2() -> Result<CheckReport, VerifyError> {
    check_monoid_closed_form(MonoidCase::Truncated { p: 2, m: 2 }, 2, 5)
}

fn monoid_s1_cube() -> Result<CheckReport, VerifyError> {
    check_monoid_closed_form(MonoidCase::Truncated { p: 3, m: 3 }, 1, 6)
}

fn monoid_etale() -> Result<CheckReport, VerifyError> {
    check_monoid_closed_form(MonoidCase::Cyclic { p: 2, q: 3 }, 1, 4)
}

fn thh_ko() -> Result<CheckReport, VerifyError> {
    check_thh_coefficients(Spectrum::Ko, 40)
}

fn thh_tmf() -> Result<CheckReport, VerifyError> {
    check_thh_coefficients(Spectrum::Tmf, 40)
}

fn thh_ku() -> Result<CheckReport, VerifyError> {
    check_thh_coefficients(Spectrum::Ku, 40)
}

fn thh_ell() -> Result<CheckReport, VerifyError> {
    check_thh_coefficients(Spectrum::Ell(3), 40)
}

fn collapse_ko() -> Result<CheckReport, VerifyError> {
    check_collapse_page(Spectrum::Ko, 120)
}

fn collapse_tmf() -> Result<CheckReport, VerifyError> {
    check_collapse_page(Spectrum::Tmf, 120)
}

fn collapse_ku() -> Result<CheckReport, VerifyError> {
    check_collapse_page(Spectrum::Ku, 120)
}

fn collapse_ell() -> Result<CheckReport, VerifyError> {
    check_collapse_page(Spectrum::Ell(3), 120)
}

fn collapse_control() -> Result<CheckReport, VerifyError> {
    check_collapse_control(2, 5, 40)
}

const SUITE: &[SuiteEntry] = &[
    SuiteEntry { name: "coequalizer-delta2", run: coequalizer_delta2 },
    SuiteEntry { name: "coequalizer-delta1", run: coequalizer_delta1 },
    SuiteEntry { name: "coequalizer-basepoint", run: coequalizer_basepoint },
    SuiteEntry { name: "coequalizer-circle-pushout", run: coequalizer_circle_pushout },
    SuiteEntry { name: "coequalizer-sphere-pushout", run: coequalizer_sphere_pushout },
    SuiteEntry { name: "quotient-delta1", run: quotient_delta1 },
    SuiteEntry { name: "quotient-delta2", run: quotient_delta2 },
    SuiteEntry { name: "quotient-full", run: quotient_full },
    SuiteEntry { name: "juggle-square-zero", run: juggle_square_zero },
    SuiteEntry { name: "juggle-identity", run: juggle_identity },
    SuiteEntry { name: "juggle-ground", run: juggle_ground },
    SuiteEntry { name: "two-sided-bar-square-zero", run: two_sided_bar_square_zero },
    SuiteEntry { name: "two-sided-bar-augmentation", run: two_sided_bar_augmentation },
    SuiteEntry { name: "ground-ring-delta2", run: ground_delta2 },
    SuiteEntry { name: "monoid-s1", run: monoid_s1 },
    SuiteEntry { name: "monoid-s2", run: monoid_s2 },
    SuiteEntry { name: "monoid-s1-cube", run: monoid_s1_cube },
    SuiteEntry { name: "monoid-etale", run: monoid_etale },
    SuiteEntry { name: "thh-ko", run: thh_ko },
    SuiteEntry { name: "thh-tmf", run: thh_tmf },
    SuiteEntry { name: "thh-ku", run: thh_ku },
    SuiteEntry { name: "thh-ell", run: thh_ell },
    SuiteEntry { name: "collapse-ko", run: collapse_ko },
    SuiteEntry { name: "collapse-tmf", run: collapse_tmf },
    SuiteEntry { name: "collapse-ku", run: collapse_ku },
    SuiteEntry { name: "collapse-ell", run: collapse_ell },
    SuiteEntry { name: "collapse-control", run: collapse_control },
];

pub fn suite_names() -> Vec<&'static str> {
    SUITE.iter().map(|e| e.name).collect()
}

/// Runs the named entries (all of them for an empty list) concurrently and
/// returns the results in suite order. Names may be prefixes, so `thh`
/// selects all four spectra.
pub fn run_suite(names: &[&str]) -> Result<Vec<(&'static str, Result<CheckReport, VerifyError>)>, VerifyError> {
    let selected: Vec<&SuiteEntry> = if names.is_empty() {
        SUITE.iter().collect()
    } else {
        let mut out = Vec::new();
        for n in names {
            let hits: Vec<&SuiteEntry> = SUITE.iter().filter(|e| e.name == *n || e.name.starts_with(&format!("{n}-"))).collect();
            if hits.is_empty() {
                return Err(VerifyError::UnknownCheck(n.to_string()));
            }
            out.extend(hits);
        }
        out
    };
    Ok(selected.par_iter().map(|e| (e.name, e.run())).collect())
}
