//! The relative Loday construction `L_{(X,Y)}(A, B; C)`.
//!
//! Level `n` is the tensor product of one algebra per simplex of `X_n`:
//! `A` on `X_n \ Y_n`, `B` on `Y_n \ *` and `C` on the basepoint. A map
//! `φ^*: X_n -> X_m` acts by relabelling each factor into the algebra of its
//! image (through `f`, `g` or `g ∘ f`), multiplying factors that share an
//! image and putting units on empty fibres.
//!
//! Homology is computed from normalized chains, split into weight blocks.

mod coequalizer;
mod complex;
mod quotient;
mod slots;

pub use coequalizer::{
    hh_over_ground, juggle_iterated, juggle_left, over_ground, pair_coequalizer, pushout_coequalizer, JuggleDims,
};
pub use complex::ChainComplex;
pub use quotient::QuotientComplex;

use crate::algebra::{AlgebraError, AlgebraMap, FinAlgebra};
use crate::exact::{ExactError, HomologyTable};
use crate::simplicial::{FinSimplicialSet, Simplex, SimplicialError, SimplicialPair, Zone};
use rayon::prelude::*;
use slots::{SlotLevel, SlotSystem, Source, Tensor};
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

/// Environment variable overriding the default block size limit.
pub const SIZE_GUARD_ENV: &str = "HOCHSCHILD_SIZE_GUARD";

/// Default limit on the number of basis tensors in one block of one level.
pub const DEFAULT_SIZE_GUARD: usize = 1 << 16;

pub fn default_size_guard() -> usize {
    std::env::var(SIZE_GUARD_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_SIZE_GUARD)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LodayError {
    #[error(
        "size guard exceeded: level {level}, weight block {weight} has more than {guard} basis tensors \
         (raise it with {SIZE_GUARD_ENV})"
    )]
    SizeGuard { level: usize, weight: u32, guard: usize },
    #[error("size guard exceeded: level {level} has {simplices} simplices, more than {guard} (raise it with {SIZE_GUARD_ENV})")]
    TooManySimplices { level: usize, simplices: u128, guard: usize },
    #[error("d∘d != 0 at degree {degree}, weight {weight}")]
    D2NonZero { degree: usize, weight: u32 },
    #[error("algebra maps do not compose: {0}")]
    IncompatibleChain(String),
    #[error("weight truncation needs weight-preserving maps")]
    WeightTruncationUnsupported,
    #[error("this construction needs coefficients in a field")]
    FieldRequired,
    #[error("face maps do not preserve the relations at level {0}")]
    RelationsNotPreserved(usize),
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A pointed pair `(X, Y)` with algebra maps `A -f-> B -g-> C`.
#[derive(Debug, Clone)]
pub struct LodayInput {
    pair: SimplicialPair,
    f: AlgebraMap,
    g: AlgebraMap,
    max_degree: usize,
    max_weight: Option<u32>,
    size_guard: usize,
}

const ALG_A: usize = 0;
const ALG_B: usize = 1;
const ALG_C: usize = 2;

impl LodayInput {
    /// `L_{(X,Y)}(A, B; C)`.
    pub fn relative(pair: SimplicialPair, f: AlgebraMap, g: AlgebraMap, max_degree: usize) -> Result<Self, LodayError> {
        if **f.target() != **g.source() {
            return Err(LodayError::IncompatibleChain("target of f differs from source of g".into()));
        }
        Ok(LodayInput { pair, f, g, max_degree, max_weight: None, size_guard: default_size_guard() })
    }

    /// `L_X(A)`: `A` on every simplex, basepoint included.
    pub fn absolute(x: Arc<FinSimplicialSet>, a: Arc<FinAlgebra>, max_degree: usize) -> Self {
        let id = AlgebraMap::identity(a);
        Self::relative(SimplicialPair::absolute(x), id.clone(), id, max_degree).expect("identities compose")
    }

    /// `L_X(A; C)` for an algebra map `A -> C`.
    pub fn with_coefficients(x: Arc<FinSimplicialSet>, g: AlgebraMap, max_degree: usize) -> Self {
        let id = AlgebraMap::identity(g.source().clone());
        Self::relative(SimplicialPair::absolute(x), id, g, max_degree).expect("identity composes")
    }

    pub fn with_max_weight(mut self, max_weight: u32) -> Self {
        self.max_weight = Some(max_weight);
        self
    }

    pub fn with_size_guard(mut self, guard: usize) -> Self {
        self.size_guard = guard;
        self
    }

    pub fn with_max_degree(mut self, max_degree: usize) -> Self {
        self.max_degree = max_degree;
        self
    }

    pub fn pair(&self) -> &SimplicialPair {
        &self.pair
    }

    pub fn f(&self) -> &AlgebraMap {
        &self.f
    }

    pub fn g(&self) -> &AlgebraMap {
        &self.g
    }

    pub fn a(&self) -> &Arc<FinAlgebra> {
        self.f.source()
    }

    pub fn b(&self) -> &Arc<FinAlgebra> {
        self.f.target()
    }

    pub fn c(&self) -> &Arc<FinAlgebra> {
        self.g.target()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn size_guard(&self) -> usize {
        self.size_guard
    }

    /// The declared weight bound, or the tightest truncation among `A, B, C`.
    pub fn effective_max_weight(&self) -> Option<u32> {
        let truncations = [self.a(), self.b(), self.c()].into_iter().filter_map(|a| a.truncated_at()).min();
        match (self.max_weight, truncations) {
            (Some(w), Some(t)) => Some(w.min(t)),
            (w, t) => w.or(t),
        }
    }

    pub(crate) fn system(&self) -> Result<SlotSystem, LodayError> {
        let gf = self.f.then(&self.g)?;
        let mut maps = BTreeMap::new();
        maps.insert((ALG_A, ALG_B), self.f.clone());
        maps.insert((ALG_B, ALG_C), self.g.clone());
        maps.insert((ALG_A, ALG_C), gf);
        let x = self.pair.space().clone();
        let algebra_of_nd = (0..x.nondegenerate_count() as u32)
            .map(|s| match self.pair.zone(&Simplex::nondegenerate(s, x.nd_dim(s))) {
                Zone::Outer => ALG_A,
                Zone::Inner => ALG_B,
                Zone::Basepoint => ALG_C,
            })
            .collect();
        let system = SlotSystem::new(
            vec![self.a().clone(), self.b().clone(), self.c().clone()],
            maps,
            vec![Source { set: x, algebra_of_nd }],
        );
        if !system.blocked && self.effective_max_weight().is_some() {
            return Err(LodayError::WeightTruncationUnsupported);
        }
        Ok(system)
    }

    /// Factors of level `n` with their zones.
    pub fn level(&self, n: usize) -> LodayLevel {
        let x = self.pair.space();
        let factors = x
            .level(n)
            .simplices()
            .iter()
            .map(|s| Factor { simplex: s.clone(), zone: self.pair.zone(s), name: x.display(s) })
            .collect();
        LodayLevel { n, factors }
    }

    /// Dimensions of the unnormalized level `n`, per weight block.
    pub fn level_dims(&self, n: usize) -> Result<BTreeMap<u32, usize>, LodayError> {
        let system = self.system()?;
        system.check_levels(n, self.size_guard)?;
        let level = system.level(n);
        let blocks = system.enumerate(&level, self.effective_max_weight(), false, self.size_guard)?;
        Ok(blocks.into_iter().map(|(w, v)| (w, v.len())).collect())
    }

    /// The structure map `φ^*: L_n -> L_m` for a monotone `φ: [m] -> [n]`.
    pub fn structure_map(&self, n: usize, phi: &[u8]) -> Result<StructureMap, LodayError> {
        let valid = !phi.is_empty() && phi.windows(2).all(|w| w[0] <= w[1]) && phi.iter().all(|&v| (v as usize) <= n);
        if !valid {
            return Err(LodayError::Unsupported(format!("{phi:?} is not a monotone map into [{n}]")));
        }
        let system = Arc::new(self.system()?);
        let slot_map = system.slot_map(n, phi);
        let source = system.level(n);
        let target = system.level(phi.len() - 1);
        Ok(StructureMap { system, source, target, slot_map })
    }

    /// Normalized chains in levels `0..=max_degree + 1`.
    pub fn chains(&self) -> Result<ChainComplex, LodayError> {
        let system = self.system()?;
        normalized_chains(&system, self.max_degree, self.effective_max_weight(), self.size_guard)
    }

    /// Homology in degrees up to `max_degree`, and weights up to the
    /// effective weight bound.
    pub fn hh(&self) -> Result<HomologyTable, LodayError> {
        self.chains()?.homology()
    }
}

/// `L_X(A; C)` homology; the free-function form of [`LodayInput::hh`].
pub fn hh(input: &LodayInput) -> Result<HomologyTable, LodayError> {
    input.hh()
}

/// Homology of a relative construction; identical to [`hh`], which already
/// places `B` on `Y`.
pub fn hh_relative(input: &LodayInput) -> Result<HomologyTable, LodayError> {
    input.hh()
}

pub fn chains(input: &LodayInput) -> Result<ChainComplex, LodayError> {
    input.chains()
}

/// One tensor factor of a Loday level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub simplex: Simplex,
    pub zone: Zone,
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LodayLevel {
    pub n: usize,
    pub factors: Vec<Factor>,
}

impl LodayLevel {
    pub fn count(&self, zone: Zone) -> usize {
        self.factors.iter().filter(|f| f.zone == zone).count()
    }
}

/// `φ^*` between two unnormalized levels.
pub struct StructureMap {
    system: Arc<SlotSystem>,
    source: SlotLevel,
    target: SlotLevel,
    slot_map: Vec<u32>,
}

impl StructureMap {
    /// Image slot of each source factor.
    pub fn slot_map(&self) -> Vec<usize> {
        self.slot_map.iter().map(|&s| s as usize).collect()
    }

    /// Source factors landing on each target factor.
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.target.len()];
        for (s, &t) in self.slot_map.iter().enumerate() {
            out[t as usize].push(s);
        }
        out
    }

    /// Source factors whose algebra changes, with the zones crossed.
    pub fn crossings(&self) -> Vec<(usize, Zone, Zone)> {
        let zone = |a: usize| match a {
            ALG_A => Zone::Outer,
            ALG_B => Zone::Inner,
            _ => Zone::Basepoint,
        };
        self.slot_map
            .iter()
            .enumerate()
            .filter_map(|(s, &t)| {
                let (from, to) = (self.source.algebra[s], self.target.algebra[t as usize]);
                (from != to).then(|| (s, zone(from), zone(to)))
            })
            .collect()
    }

    /// Applies the map to a basis tensor given by one basis index per factor.
    pub fn apply(&self, tensor: &[usize]) -> Vec<(Vec<usize>, i64)> {
        let sparse: Tensor = tensor
            .iter()
            .enumerate()
            .filter(|&(s, &b)| b != self.system.algebras[self.source.algebra[s]].unit())
            .map(|(s, &b)| (s as u32, b as u32))
            .collect();
        self.system
            .push(&self.source, &self.target, &self.slot_map, &sparse)
            .into_iter()
            .map(|(t, x)| {
                let mut dense: Vec<usize> =
                    self.target.algebra.iter().map(|&a| self.system.algebras[a].unit()).collect();
                for (s, b) in t {
                    dense[s as usize] = b as usize;
                }
                (dense, x)
            })
            .collect()
    }
}

/// Builds the normalized complex of a slot system in levels `0..=max_degree + 1`.
pub(crate) fn normalized_chains(
    system: &SlotSystem,
    max_degree: usize,
    max_weight: Option<u32>,
    guard: usize,
) -> Result<ChainComplex, LodayError> {
    let top = max_degree + 1;
    system.check_levels(top, guard)?;
    let levels: Vec<SlotLevel> = (0..=top).map(|n| system.level(n)).collect();
    let bases: Vec<BTreeMap<u32, Vec<Tensor>>> = levels
        .par_iter()
        .map(|l| system.enumerate(l, max_weight, true, guard))
        .collect::<Result<_, _>>()?;
    let indices: Vec<BTreeMap<u32, HashMap<&Tensor, usize>>> = bases
        .iter()
        .map(|b| b.iter().map(|(&w, ts)| (w, ts.iter().enumerate().map(|(i, t)| (t, i)).collect())).collect())
        .collect();
    let blocks: Vec<u32> = {
        let mut all: Vec<u32> = bases.iter().flat_map(|b| b.keys().copied()).collect();
        all.sort_unstable();
        all.dedup();
        all
    };
    let dims: BTreeMap<u32, Vec<usize>> = blocks
        .iter()
        .map(|&w| (w, bases.iter().map(|b| b.get(&w).map_or(0, Vec::len)).collect()))
        .collect();
    let faces: Vec<Vec<Vec<u32>>> =
        (0..=top).map(|n| if n == 0 { Vec::new() } else { (0..=n).map(|i| system.face_map(n, i)).collect() }).collect();
    let c = system.coefficients;
    let jobs: Vec<(u32, usize)> = blocks.iter().flat_map(|&w| (1..=top).map(move |k| (w, k))).collect();
    let matrices: Vec<((u32, usize), crate::exact::ExactMatrix)> = jobs
        .par_iter()
        .map(|&(w, k)| {
            let empty = Vec::new();
            let cols = bases[k].get(&w).unwrap_or(&empty);
            let rows = dims[&w][k - 1];
            let mut triplets = Vec::new();
            for (j, t) in cols.iter().enumerate() {
                for (i, map) in faces[k].iter().enumerate() {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    for (u, x) in system.push(&levels[k], &levels[k - 1], map, t) {
                        if system.is_degenerate(&levels[k - 1], &u) {
                            continue;
                        }
                        let block = system.block_of(&levels[k - 1], &u);
                        debug_assert_eq!(block, w, "structure maps preserve weight");
                        let row = indices[k - 1]
                            .get(&block)
                            .and_then(|m| m.get(&u))
                            .copied()
                            .expect("nondegenerate faces of enumerated tensors are enumerated");
                        triplets.push((row, j, sign * x));
                    }
                }
            }
            let m = crate::exact::ExactMatrix::from_triplets(c, rows, cols.len(), triplets)?;
            Ok(((w, k), m))
        })
        .collect::<Result<_, LodayError>>()?;
    let mut differentials: BTreeMap<u32, Vec<crate::exact::ExactMatrix>> = BTreeMap::new();
    for ((w, _), m) in matrices {
        differentials.entry(w).or_default().push(m);
    }
    Ok(ChainComplex { coefficients: c, max_degree, dims, differentials })
}

#[cfg(test)]
mod tests;
