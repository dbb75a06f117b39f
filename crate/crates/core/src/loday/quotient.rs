//! Simplicial modules of the form `(ambient tensor product) / (relations)`,
//! used to compute relative tensor products and coequalizers directly.

use super::complex::ChainComplex;
use super::slots::{SlotLevel, SlotSystem, Tensor};
use super::LodayError;
use crate::algebra::{AlgebraMap, FinAlgebra};
use crate::exact::{Echelon, ExactMatrix};
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

/// Identifies the action of an algebra `R` through two slots: for every
/// non-unit basis element `r` of `R` and every ambient basis tensor `t`,
/// `left(r)·t - right(r)·t` is a relation.
#[derive(Clone)]
pub(crate) struct Relation {
    pub ring: Arc<FinAlgebra>,
    pub left: (u32, Option<AlgebraMap>),
    pub right: (u32, Option<AlgebraMap>),
}

fn image(map: &Option<AlgebraMap>, r: usize) -> Vec<(usize, i64)> {
    match map {
        Some(m) => m.image(r).to_vec(),
        None => vec![(r, 1)],
    }
}

/// The quotient complex together with its levelwise dimensions.
#[derive(Debug, Clone)]
pub struct QuotientComplex {
    pub complex: ChainComplex,
}

impl QuotientComplex {
    /// Dimension of the quotient at level `n`, per weight block.
    pub fn level_dims(&self, n: usize) -> BTreeMap<u32, usize> {
        self.complex.level_dims(n)
    }
}

struct LevelData {
    blocks: BTreeMap<u32, Block>,
}

struct Block {
    tensors: Vec<Tensor>,
    index: HashMap<Tensor, usize>,
    relations: Echelon,
    quotient: Vec<usize>,
    position: HashMap<usize, usize>,
}

fn vector(block: &Block, terms: Vec<(Tensor, i64)>) -> Vec<(usize, i64)> {
    terms
        .into_iter()
        .map(|(t, x)| (*block.index.get(&t).expect("relation terms stay inside the enumerated block"), x))
        .collect()
}

/// Builds the quotient in levels `0..=top`, with differentials between them.
pub(crate) fn quotient_complex<F>(
    system: &SlotSystem,
    top: usize,
    max_weight: Option<u32>,
    guard: usize,
    relations: F,
) -> Result<QuotientComplex, LodayError>
where
    F: Fn(usize, &SlotLevel) -> Result<Vec<Relation>, LodayError> + Sync,
{
    let p = system.coefficients.prime().ok_or(LodayError::FieldRequired)?;
    if !system.blocked {
        return Err(LodayError::WeightTruncationUnsupported);
    }
    system.check_levels(top, guard)?;
    let levels: Vec<SlotLevel> = (0..=top).map(|n| system.level(n)).collect();
    let data: Vec<LevelData> = levels
        .par_iter()
        .map(|level| -> Result<LevelData, LodayError> {
            let bases = system.enumerate(level, max_weight, false, guard)?;
            let mut blocks: BTreeMap<u32, Block> = bases
                .into_iter()
                .map(|(w, tensors)| {
                    let index = tensors.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
                    (w, Block { tensors, index, relations: Echelon::new(p), quotient: Vec::new(), position: HashMap::new() })
                })
                .collect();
            let rels = relations(level.n, level)?;
            let keys: Vec<u32> = blocks.keys().copied().collect();
            for &w in &keys {
                for rel in &rels {
                    for r in 0..rel.ring.dim() {
                        if r == rel.ring.unit() {
                            continue;
                        }
                        let target = w + rel.ring.weight(r);
                        if !blocks.contains_key(&target) {
                            continue;
                        }
                        let (l, rr) = (image(&rel.left.1, r), image(&rel.right.1, r));
                        let n_src = blocks[&w].tensors.len();
                        for j in 0..n_src {
                            let t = blocks[&w].tensors[j].clone();
                            let mut terms = system.act(level, rel.left.0, &l, &t);
                            let neg = system.act(level, rel.right.0, &rr, &t);
                            terms.extend(neg.into_iter().map(|(u, x)| (u, -x)));
                            let block = blocks.get_mut(&target).unwrap();
                            let v = vector(block, terms);
                            block.relations.insert(&v);
                        }
                    }
                }
            }
            for block in blocks.values_mut() {
                block.quotient = (0..block.tensors.len()).filter(|&c| !block.relations.is_pivot(c)).collect();
                block.position = block.quotient.iter().enumerate().map(|(i, &c)| (c, i)).collect();
            }
            Ok(LevelData { blocks })
        })
        .collect::<Result<_, _>>()?;

    let keys: Vec<u32> = {
        let mut all: Vec<u32> = data.iter().flat_map(|d| d.blocks.keys().copied()).collect();
        all.sort_unstable();
        all.dedup();
        all
    };
    let dims: BTreeMap<u32, Vec<usize>> = keys
        .iter()
        .map(|&w| (w, data.iter().map(|d| d.blocks.get(&w).map_or(0, |b| b.quotient.len())).collect()))
        .collect();
    let c = system.coefficients;
    let jobs: Vec<(u32, usize)> = keys.iter().flat_map(|&w| (1..=top).map(move |k| (w, k))).collect();
    let matrices: Vec<((u32, usize), ExactMatrix)> = jobs
        .par_iter()
        .map(|&(w, k)| -> Result<((u32, usize), ExactMatrix), LodayError> {
            let faces: Vec<Vec<u32>> = (0..=k).map(|i| system.face_map(k, i)).collect();
            let rows = dims[&w][k - 1];
            let (Some(src), Some(dst)) = (data[k].blocks.get(&w), data[k - 1].blocks.get(&w)) else {
                let cols = dims[&w][k];
                return Ok(((w, k), ExactMatrix::zero(c, rows, cols)));
            };
            let face_vector = |i: usize, t: &Tensor| {
                vector(dst, system.push(&levels[k], &levels[k - 1], &faces[i], t))
            };
            // each face must send relations into relations
            for (_, row) in src.relations.reduced_rows() {
                for i in 0..=k {
                    let mut v = Vec::new();
                    for &(col, x) in &row {
                        v.extend(face_vector(i, &src.tensors[col]).into_iter().map(|(r, y)| (r, c.mul(x, y))));
                    }
                    if !dst.relations.normal_form(&v).is_empty() {
                        return Err(LodayError::RelationsNotPreserved(k));
                    }
                }
            }
            let mut triplets = Vec::new();
            for (j, &col) in src.quotient.iter().enumerate() {
                let mut v = Vec::new();
                for i in 0..=k {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    v.extend(face_vector(i, &src.tensors[col]).into_iter().map(|(r, y)| (r, sign * y)));
                }
                for (r, x) in dst.relations.normal_form(&v) {
                    triplets.push((dst.position[&r], j, x));
                }
            }
            Ok(((w, k), ExactMatrix::from_triplets(c, rows, src.quotient.len(), triplets)?))
        })
        .collect::<Result<_, _>>()?;
    let mut differentials: BTreeMap<u32, Vec<ExactMatrix>> = BTreeMap::new();
    for ((w, _), m) in matrices {
        differentials.entry(w).or_default().push(m);
    }
    let complex = ChainComplex { coefficients: c, max_degree: top.saturating_sub(1), dims, differentials };
    Ok(QuotientComplex { complex })
}
