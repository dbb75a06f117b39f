//! Independent computations of the tensor products and coequalizers that
//! the Loday construction is supposed to reproduce.

use super::quotient::{quotient_complex, QuotientComplex, Relation};
use super::slots::{SlotSystem, Source};
use super::{LodayError, LodayInput};
use crate::algebra::{AlgebraMap, FinAlgebra};
use crate::exact::HomologyTable;
use crate::simplicial::{FinSimplicialSet, Simplex};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Dimension per weight of a relative tensor product of algebras.
pub type JuggleDims = BTreeMap<u32, usize>;

fn source(set: Arc<FinSimplicialSet>, inner: usize, base: usize) -> Source {
    let bp = set.basepoint();
    let algebra_of_nd = (0..set.nondegenerate_count() as u32).map(|s| if s == bp { base } else { inner }).collect();
    Source { set, algebra_of_nd }
}

/// `L_X(A; C) ⊗_{L_Y(A; C)} L_Y(B; C)`, levelwise, as a quotient of
/// `L_X(A; C) ⊗ L_Y(B; C)`.
pub fn pair_coequalizer(input: &LodayInput) -> Result<QuotientComplex, LodayError> {
    const A: usize = 0;
    const B: usize = 1;
    const C: usize = 2;
    let x = input.pair().space().clone();
    let y = Arc::new(input.pair().sub());
    let sub_ids = input.pair().sub_simplices();
    let mut maps = BTreeMap::new();
    maps.insert((A, C), input.f().then(input.g())?);
    maps.insert((B, C), input.g().clone());
    let system = SlotSystem::new(
        vec![input.a().clone(), input.b().clone(), input.c().clone()],
        maps,
        vec![source(x.clone(), A, C), source(y.clone(), B, C)],
    );
    let f = input.f().clone();
    let a = input.a().clone();
    let c = input.c().clone();
    quotient_complex(&system, input.max_degree() + 1, input.effective_max_weight(), input.size_guard(), |n, level| {
        let (xl, yl) = (x.level(n), y.level(n));
        let off = level.offsets[1] as u32;
        Ok(yl
            .simplices()
            .iter()
            .enumerate()
            .map(|(k, s)| {
                let in_x = Simplex { nd: sub_ids[s.nd as usize], surj: s.surj.clone() };
                let p = xl.index_of(&in_x).expect("Y_n sits inside X_n") as u32;
                let q = off + k as u32;
                if s.nd == y.basepoint() {
                    Relation { ring: c.clone(), left: (p, None), right: (q, None) }
                } else {
                    Relation { ring: a.clone(), left: (p, None), right: (q, Some(f.clone())) }
                }
            })
            .collect())
    })
}

/// `L_{X₁}(A; C) ⊗_{L_{X₀}(A; C)} L_{X₂}(A; C)` for inclusions of `X₀`.
pub fn pushout_coequalizer(
    left: &Arc<FinSimplicialSet>,
    middle: &Arc<FinSimplicialSet>,
    right: &Arc<FinSimplicialSet>,
    into_left: &[u32],
    into_right: &[u32],
    g: &AlgebraMap,
    max_degree: usize,
    max_weight: Option<u32>,
    guard: usize,
) -> Result<QuotientComplex, LodayError> {
    const A: usize = 0;
    const C: usize = 1;
    let bp = middle.basepoint() as usize;
    if into_left[bp] != left.basepoint() || into_right[bp] != right.basepoint() {
        return Err(LodayError::Unsupported("inclusions must preserve basepoints".into()));
    }
    let mut maps = BTreeMap::new();
    maps.insert((A, C), g.clone());
    let system = SlotSystem::new(
        vec![g.source().clone(), g.target().clone()],
        maps,
        vec![source(left.clone(), A, C), source(right.clone(), A, C)],
    );
    let (a, c) = (g.source().clone(), g.target().clone());
    quotient_complex(&system, max_degree + 1, max_weight, guard, |n, level| {
        let (l, r) = (left.level(n), right.level(n));
        let off = level.offsets[1] as u32;
        Ok(middle
            .level(n)
            .simplices()
            .iter()
            .map(|s| {
                let p = l.index_of(&Simplex { nd: into_left[s.nd as usize], surj: s.surj.clone() }).unwrap() as u32;
                let q = r.index_of(&Simplex { nd: into_right[s.nd as usize], surj: s.surj.clone() }).unwrap() as u32;
                let ring = if s.nd as usize == bp { c.clone() } else { a.clone() };
                Relation { ring, left: (p, None), right: (off + q, None) }
            })
            .collect())
    })
}

fn points(count: usize, algebra: impl Fn(usize) -> usize) -> Vec<Source> {
    let p = Arc::new(FinSimplicialSet::point());
    (0..count).map(|k| Source { set: p.clone(), algebra_of_nd: vec![algebra(k)] }).collect()
}

fn module_dims(system: SlotSystem, relations: Vec<Relation>) -> Result<JuggleDims, LodayError> {
    let q = quotient_complex(&system, 0, None, super::default_size_guard(), |_, _| Ok(relations.clone()))?;
    Ok(q.level_dims(0).into_iter().filter(|&(_, d)| d > 0).collect())
}

/// `A ⊗_{A^{⊗s}} B^{⊗s}`, with `A^{⊗s}` acting on `A` by multiplication
/// and on `B^{⊗s}` through `f` in each factor.
pub fn juggle_left(f: &AlgebraMap, s: usize) -> Result<JuggleDims, LodayError> {
    let (a, b) = (f.source().clone(), f.target().clone());
    let mut maps = BTreeMap::new();
    maps.insert((0, 1), f.clone());
    let system = SlotSystem::new(vec![a.clone(), b], maps, points(s + 1, |k| usize::from(k > 0)));
    let relations = (0..s)
        .map(|j| Relation { ring: a.clone(), left: (0, None), right: (1 + j as u32, Some(f.clone())) })
        .collect();
    module_dims(system, relations)
}

/// `B ⊗_A B ⊗_A ... ⊗_A B` with `s` factors.
pub fn juggle_iterated(f: &AlgebraMap, s: usize) -> Result<JuggleDims, LodayError> {
    let (a, b) = (f.source().clone(), f.target().clone());
    let system = SlotSystem::new(vec![b], BTreeMap::new(), points(s, |_| 0));
    let relations = (0..s.saturating_sub(1))
        .map(|j| Relation {
            ring: a.clone(),
            left: (j as u32, Some(f.clone())),
            right: (j as u32 + 1, Some(f.clone())),
        })
        .collect();
    module_dims(system, relations)
}

/// The Loday construction taken over a ground ring `R -> A` instead of the
/// coefficients: every factor becomes an `R`-algebra and the tensor
/// products are over `R`.
pub fn over_ground(input: &LodayInput, ground: &AlgebraMap) -> Result<QuotientComplex, LodayError> {
    if **ground.target() != **input.a() {
        return Err(LodayError::IncompatibleChain("the ground ring must map to A".into()));
    }
    let system = input.system()?;
    let ring: Arc<FinAlgebra> = ground.source().clone();
    let to_b = ground.then(input.f())?;
    let to_c = to_b.then(input.g())?;
    let by_alg = [ground.clone(), to_b, to_c.clone()];
    let x = input.pair().space().clone();
    let bp = x.basepoint();
    quotient_complex(&system, input.max_degree() + 1, input.effective_max_weight(), input.size_guard(), |n, level| {
        let c_slot = x.level(n).index_of(&Simplex::constant(bp, n)).expect("the basepoint is in every level") as u32;
        Ok((0..level.len() as u32)
            .filter(|&s| s != c_slot)
            .map(|s| Relation {
                ring: ring.clone(),
                left: (s, Some(by_alg[level.algebra[s as usize]].clone())),
                right: (c_slot, Some(to_c.clone())),
            })
            .collect())
    })
}

/// Homology of the construction over a ground ring; see [`over_ground`].
pub fn hh_over_ground(input: &LodayInput, ground: &AlgebraMap) -> Result<HomologyTable, LodayError> {
    over_ground(input, ground)?.complex.homology()
}
