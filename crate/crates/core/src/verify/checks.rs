use super::{two_sided_bar, CheckReport, VerifyError};
use crate::algebra::{monoid_algebra, AlgebraError, AlgebraMap, FinAlgebra, PointedMonoid};
use crate::exact::Coefficients;
use crate::gca::{
    b_double_prime, check_collapse_by_degree, e2_page, poincare, thh_with_coefficients, action_exponent, BigradedGCA, FreeGCA,
    Generator, Spectrum,
};
use crate::loday::{
    juggle_iterated, juggle_left, over_ground, pair_coequalizer, pushout_coequalizer, LodayInput, QuotientComplex,
};
use crate::simplicial::{FinSimplicialSet, SimplicialPair};
use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

fn loday_levels(input: &LodayInput) -> Result<Vec<BTreeMap<u32, usize>>, VerifyError> {
    (0..=input.max_degree())
        .map(|n| Ok(input.level_dims(n)?.into_iter().filter(|&(_, d)| d > 0).collect()))
        .collect()
}

fn quotient_levels(q: &QuotientComplex, top: usize) -> Vec<BTreeMap<u32, usize>> {
    (0..=top).map(|n| q.level_dims(n)).collect()
}

fn names(x: &FinSimplicialSet) -> String {
    x.names().join(" ")
}

fn weight_param(w: Option<u32>) -> String {
    w.map_or("none".into(), |w| w.to_string())
}

/// Both sides of `L_{(X,Y)}(A,B;C) ≅ L_X(A;C) ⊗_{L_Y(A;C)} L_Y(B;C)`:
/// levelwise dimensions and homology.
pub fn check_pair_coequalizer(input: &LodayInput) -> Result<CheckReport, VerifyError> {
    let t = Instant::now();
    let pair = input.pair();
    let mut r = CheckReport::new("pair-coequalizer")
        .param("X", names(pair.space()))
        .param("Y", names(&pair.sub()))
        .param("A", input.a().labels().join(" "))
        .param("B", input.b().labels().join(" "))
        .param("C", input.c().labels().join(" "))
        .param("N", input.max_degree())
        .param("W", weight_param(input.effective_max_weight()));
    let q = pair_coequalizer(input)?;
    r.compare_levels("level dim", &loday_levels(input)?, &quotient_levels(&q, input.max_degree()));
    r.compare_homology("homology", &input.hh()?, &q.complex.homology()?);
    Ok(r.finish(t))
}

/// Both sides of `L_{X₁ ∪_{X₀} X₂}(A;C) ≅ L_{X₁}(A;C) ⊗_{L_{X₀}(A;C)} L_{X₂}(A;C)`.
pub fn check_pushout_coequalizer(
    left: &Arc<FinSimplicialSet>,
    middle: &Arc<FinSimplicialSet>,
    right: &Arc<FinSimplicialSet>,
    g: &AlgebraMap,
    max_degree: usize,
    max_weight: Option<u32>,
) -> Result<CheckReport, VerifyError> {
    let t = Instant::now();
    let into_left = left.inclusion_of(middle)?;
    let into_right = right.inclusion_of(middle)?;
    let glued = FinSimplicialSet::pushout(left, middle, right, &into_left, &into_right)?;
    let mut input = LodayInput::with_coefficients(Arc::new(glued.set), g.clone(), max_degree);
    if let Some(w) = max_weight {
        input = input.with_max_weight(w);
    }
    let mut r = CheckReport::new("pushout-coequalizer")
        .param("pieces", format!("{} ∪ {} along {}", names(left), names(right), names(middle)))
        .param("A", g.source().labels().join(" "))
        .param("C", g.target().labels().join(" "))
        .param("N", max_degree)
        .param("W", weight_param(input.effective_max_weight()));
    let q = pushout_coequalizer(
        left,
        middle,
        right,
        &into_left,
        &into_right,
        g,
        max_degree,
        input.effective_max_weight(),
        input.size_guard(),
    )?;
    r.compare_levels("level dim", &loday_levels(&input)?, &quotient_levels(&q, max_degree));
    r.compare_homology("homology", &input.hh()?, &q.complex.homology()?);
    Ok(r.finish(t))
}

/// `L_{(X,Y)}(A,C;C)` against `L_{X/Y}(A;C)` for `A` augmented over the
/// ground field `C`.
pub fn check_quotient_pair(pair: &SimplicialPair, a: &Arc<FinAlgebra>, max_degree: usize) -> Result<CheckReport, VerifyError> {
    let t = Instant::now();
    let eps = match AlgebraMap::augmentation(a.clone()) {
        Ok(e) => e,
        Err(AlgebraError::NoAugmentation) => return Err(VerifyError::NoSection),
        Err(e) => return Err(e.into()),
    };
    let c = eps.target().clone();
    let relative = LodayInput::relative(pair.clone(), eps.clone(), AlgebraMap::identity(c), max_degree)?;
    let quotient = LodayInput::with_coefficients(Arc::new(pair.quotient()), eps, max_degree);
    let mut r = CheckReport::new("quotient-pair")
        .param("X", names(pair.space()))
        .param("Y", names(&pair.sub()))
        .param("A", a.labels().join(" "))
        .param("N", max_degree);
    r.compare_levels("level dim", &loday_levels(&relative)?, &loday_levels(&quotient)?);
    r.compare_homology("homology", &quotient.hh()?, &relative.hh()?);
    Ok(r.finish(t))
}

/// `A ⊗_{A^{⊗s}} B^{⊗s}` against `B ⊗_A ⋯ ⊗_A B` for `s = 1..=s_max`.
pub fn check_juggle(f: &AlgebraMap, s_max: usize) -> Result<CheckReport, VerifyError> {
    let t = Instant::now();
    let mut r = CheckReport::new("juggle")
        .param("A", f.source().labels().join(" "))
        .param("B", f.target().labels().join(" "))
        .param("s_max", s_max);
    let left: Vec<BTreeMap<u32, usize>> = (1..=s_max).map(|s| juggle_left(f, s)).collect::<Result<_, _>>()?;
    let right: Vec<BTreeMap<u32, usize>> = (1..=s_max).map(|s| juggle_iterated(f, s)).collect::<Result<_, _>>()?;
    // row `degree` k stands for s = k + 1
    r.compare_levels("dim (s = degree + 1)", &right, &left);
    Ok(r.finish(t))
}

/// `L_{(Δ₁,∂Δ₁)}(A,B;B)` against `Tor^A(B,B)` from the two-sided bar complex.
pub fn check_two_sided_bar(f: &AlgebraMap, max_degree: usize) -> Result<CheckReport, VerifyError> {
    let t = Instant::now();
    let pair = SimplicialPair::delta_boundary(1)?;
    let input = LodayInput::relative(pair, f.clone(), AlgebraMap::identity(f.target().clone()), max_degree)?;
    let mut r = CheckReport::new("two-sided-bar")
        .param("A", f.source().labels().join(" "))
        .param("B", f.target().labels().join(" "))
        .param("N", max_degree);
    r.compare_homology("homology", &two_sided_bar(f, max_degree)?, &input.hh()?);
    Ok(r.finish(t))
}

/// `L^A_{(X,Y)}(A,B;C)` against `L^A_Y(B;C)`, both as tensor products over `A`.
pub fn check_ground(input: &LodayInput) -> Result<CheckReport, VerifyError> {
    let t = Instant::now();
    let pair = input.pair();
    let y = Arc::new(pair.sub());
    let mut on_y = LodayInput::with_coefficients(y, input.g().clone(), input.max_degree()).with_size_guard(input.size_guard());
    if let Some(w) = input.effective_max_weight() {
        on_y = on_y.with_max_weight(w);
    }
    let mut r = CheckReport::new("ground-ring")
        .param("X", names(pair.space()))
        .param("Y", names(&pair.sub()))
        .param("A", input.a().labels().join(" "))
        .param("B", input.b().labels().join(" "))
        .param("C", input.c().labels().join(" "))
        .param("N", input.max_degree())
        .param("W", weight_param(input.effective_max_weight()));
    let lhs = over_ground(input, &AlgebraMap::identity(input.a().clone()))?;
    let rhs = over_ground(&on_y, input.f())?;
    let top = input.max_degree();
    r.compare_levels("level dim", &quotient_levels(&rhs, top), &quotient_levels(&lhs, top));
    r.compare_homology("homology", &rhs.complex.homology()?, &lhs.complex.homology()?);
    Ok(r.finish(t))
}

/// A monoid algebra with a known `HH^{[n]}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonoidCase {
    /// `F_p[x]/x^m` with `p | m`.
    Truncated { p: u32, m: u64 },
    /// `F_p[Z/q]` with `q` prime to `p`.
    Cyclic { p: u32, q: usize },
}

impl MonoidCase {
    fn prime(self) -> u32 {
        match self {
            MonoidCase::Truncated { p, .. } | MonoidCase::Cyclic { p, .. } => p,
        }
    }

    fn monoid(self) -> Result<PointedMonoid, VerifyError> {
        Ok(match self {
            MonoidCase::Truncated { m, .. } => PointedMonoid::truncated_powers(m as usize)?,
            MonoidCase::Cyclic { q, .. } => PointedMonoid::cyclic_group(q)?,
        })
    }
}

/// `HH^{[n]}(F_p[Π])` over the minimal `S^n` against its closed form.
pub fn check_monoid_closed_form(case: MonoidCase, n: usize, max_degree: usize) -> Result<CheckReport, VerifyError> {
    let t = Instant::now();
    let p = case.prime();
    let expected: Vec<u64> = match case {
        MonoidCase::Truncated { m, .. } => {
            let b = b_double_prime(p, n, m, max_degree)?;
            poincare(&b, max_degree)?.coefficients().iter().map(|c| c * m).collect()
        }
        MonoidCase::Cyclic { q, .. } => {
            if q as u64 % p as u64 == 0 {
                return Err(VerifyError::Unsupported(format!("F_{p}[Z/{q}] is not étale")));
            }
            let mut v = vec![0; max_degree + 1];
            v[0] = q as u64;
            v
        }
    };
    let c = Coefficients::prime_field(p).map_err(AlgebraError::from)?;
    let a = Arc::new(monoid_algebra(&case.monoid()?, c));
    let x = Arc::new(FinSimplicialSet::sphere_minimal(n)?);
    let computed = LodayInput::absolute(x, a, max_degree).hh()?;
    let label = match case {
        MonoidCase::Truncated { m, .. } => format!("x^{m} = 0"),
        MonoidCase::Cyclic { q, .. } => format!("Z/{q}"),
    };
    let mut r = CheckReport::new("monoid-closed-form")
        .param("p", p)
        .param("monoid", label)
        .param("n", n)
        .param("N", max_degree);
    for (k, (e, c)) in expected.iter().zip(computed.ranks()).enumerate() {
        r.row("dim", k, None, e.to_string(), c.to_string());
    }
    Ok(r.finish(t))
}

/// The additive answers for `THH^E(HF_p)` as stated: divided powers on
/// `ρ⁰` of the exterior generators and a truncated `μ₂`.
pub fn stated_thh_answer(e: Spectrum) -> Result<FreeGCA, VerifyError> {
    let p = e.prime() as usize;
    let (exterior, order): (Vec<usize>, u64) = match e {
        Spectrum::Ko => (vec![5, 7], 4),
        Spectrum::Tmf => (vec![9, 13, 15], 8),
        Spectrum::Ku => (vec![3, 7], 4),
        Spectrum::Ell(_) => (vec![2 * p - 1, 2 * p * p - 1], (p * p) as u64),
    };
    let mut gens: Vec<Generator> = exterior.iter().map(|&d| Generator::divided_power(format!("ρ⁰x{d}"), d + 1)).collect();
    gens.push(Generator::truncated("μ2", 2, order));
    Ok(FreeGCA::new(e.prime(), gens)?)
}

/// `Tor^{THH_*(E; HF_p)}(F_p, F_p[μ₂])` against the stated answer, by series.
pub fn check_thh_coefficients(e: Spectrum, max_degree: usize) -> Result<CheckReport, VerifyError> {
    let t = Instant::now();
    let computed = poincare(&thh_with_coefficients(e, max_degree)?, max_degree)?;
    let expected = poincare(&stated_thh_answer(e)?, max_degree)?;
    let mut r = CheckReport::new("thh-coefficients")
        .param("E", e)
        .param("p", e.prime())
        .param("action exponent", action_exponent(e))
        .param("N", max_degree);
    for k in 0..=max_degree {
        r.row("dim", k, None, expected.coefficient(k).to_string(), computed.coefficient(k).to_string());
    }
    Ok(r.finish(t))
}

fn candidate_list(report: &crate::gca::CollapseReport) -> String {
    if report.candidates.is_empty() {
        return "none".into();
    }
    let parts: Vec<String> = report
        .candidates
        .iter()
        .map(|c| format!("{} -> {} (r = {})", c.source, c.target, c.r))
        .collect();
    parts.join("; ")
}

/// The degree-based collapse argument for the `E²` page of
/// `THH^{[2]}(E; HF_p)`.
pub fn check_collapse_page(e: Spectrum, bound: usize) -> Result<CheckReport, VerifyError> {
    let t = Instant::now();
    let page = BigradedGCA::new(e2_page(e, 2, bound)?)?;
    let report = check_collapse_by_degree(&page, bound);
    let mut r = CheckReport::new("collapse-page").param("E", e).param("p", e.prime()).param("bound", bound);
    for note in &report.notes {
        r = r.param("note", note);
    }
    r.row("admissible differentials", 2, None, "none".into(), candidate_list(&report));
    Ok(r.finish(t))
}

/// Negative control: `Γ(x; (1, j)) ⊗ Λ(z; (1, 2^k(j+1) - 2))` must report
/// exactly the candidate `γ_{2^k} x -> z` with `r = 2^k - 1`.
pub fn check_collapse_control(k: u32, j: usize, bound: usize) -> Result<CheckReport, VerifyError> {
    let t = Instant::now();
    if k < 2 {
        return Err(VerifyError::Unsupported("k = 1 gives r = 1, which is not a differential past E²".into()));
    }
    let pk = 1usize << k;
    let z = pk * (j + 1) - 2;
    let page = BigradedGCA::new(FreeGCA::new(
        2,
        vec![
            Generator::divided_power("x", j + 1).with_filtration(1),
            Generator::exterior("z", z + 1).with_filtration(1),
        ],
    )?)?;
    let report = check_collapse_by_degree(&page, bound);
    let mut r = CheckReport::new("collapse-control").param("k", k).param("j", j).param("bound", bound);
    r.row("collapses", 0, None, "false".into(), report.collapses.to_string());
    r.row(
        "admissible differentials",
        2,
        None,
        format!("γ{pk}(x) -> z (r = {})", pk - 1),
        candidate_list(&report),
    );
    Ok(r.finish(t))
}

