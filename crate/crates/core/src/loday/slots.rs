//! Tensor products indexed by the simplices of one or more simplicial sets.
//!
//! A basis tensor lists only its non-unit factors as `(slot, basis index)`
//! pairs sorted by slot; every other slot carries the unit of its algebra.

use super::LodayError;
use crate::algebra::{AlgebraMap, Element, FinAlgebra};
use crate::exact::Coefficients;
use crate::simplicial::FinSimplicialSet;
use std::collections::BTreeMap;
use std::sync::Arc;

pub(crate) type Tensor = Vec<(u32, u32)>;

/// A simplicial set whose nondegenerate simplex `σ` (and every degeneracy
/// of it) carries algebra `algebra_of_nd[σ]`.
#[derive(Clone)]
pub(crate) struct Source {
    pub set: Arc<FinSimplicialSet>,
    pub algebra_of_nd: Vec<usize>,
}

#[derive(Clone)]
pub(crate) struct SlotSystem {
    pub coefficients: Coefficients,
    pub algebras: Vec<Arc<FinAlgebra>>,
    /// `maps[(from, to)]`; identities are implicit.
    pub maps: BTreeMap<(usize, usize), AlgebraMap>,
    pub sources: Vec<Source>,
    /// Set when every map preserves weight, so weight blocks are closed
    /// under all structure maps.
    pub blocked: bool,
}

pub(crate) struct SlotLevel {
    pub n: usize,
    pub algebra: Vec<usize>,
    pub masks: Vec<u64>,
    pub offsets: Vec<usize>,
}

impl SlotLevel {
    pub fn len(&self) -> usize {
        self.algebra.len()
    }
}

impl SlotSystem {
    pub fn new(
        algebras: Vec<Arc<FinAlgebra>>,
        maps: BTreeMap<(usize, usize), AlgebraMap>,
        sources: Vec<Source>,
    ) -> Self {
        let coefficients = algebras[0].coefficients();
        let blocked = maps.values().all(|m| m.weight_scale() == 1);
        SlotSystem { coefficients, algebras, maps, sources, blocked }
    }

    /// Refuses levels `0..=top` whose slot count alone exceeds `guard`.
    pub fn check_levels(&self, top: usize, guard: usize) -> Result<(), LodayError> {
        for n in 0..=top {
            let slots: u128 = self.sources.iter().map(|s| s.set.level_size(n)).sum();
            if slots > guard as u128 {
                return Err(LodayError::TooManySimplices { level: n, simplices: slots, guard });
            }
        }
        Ok(())
    }

    pub fn level(&self, n: usize) -> SlotLevel {
        let mut algebra = Vec::new();
        let mut masks = Vec::new();
        let mut offsets = Vec::new();
        for src in &self.sources {
            offsets.push(algebra.len());
            for s in src.set.level(n).simplices() {
                algebra.push(src.algebra_of_nd[s.nd as usize]);
                masks.push(s.degeneracy_mask());
            }
        }
        SlotLevel { n, algebra, masks, offsets }
    }

    /// Slot map of `φ^*: X_n -> X_m` for `φ: [m] -> [n]`, on all sources.
    pub fn slot_map(&self, n: usize, phi: &[u8]) -> Vec<u32> {
        let m = phi.len() - 1;
        let mut out = Vec::new();
        let mut offset = 0;
        for src in &self.sources {
            let target = src.set.level(m);
            for s in src.set.level(n).simplices() {
                let img = src.set.apply(s, phi);
                out.push((offset + target.index_of(&img).expect("images lie in the next level")) as u32);
            }
            offset += target.len();
        }
        out
    }

    /// Slot map of the face `d_i` at level `n`.
    pub fn face_map(&self, n: usize, i: usize) -> Vec<u32> {
        let mut out = Vec::new();
        let mut offset = 0;
        for src in &self.sources {
            let level = src.set.level(n);
            for k in 0..level.len() {
                out.push((offset + level.face(k, i)) as u32);
            }
            offset += src.set.level(n - 1).len();
        }
        out
    }

    pub fn weight(&self, level: &SlotLevel, t: &Tensor) -> u32 {
        t.iter().map(|&(s, b)| self.algebras[level.algebra[s as usize]].weight(b as usize)).sum()
    }

    pub fn block_of(&self, level: &SlotLevel, t: &Tensor) -> u32 {
        if self.blocked {
            self.weight(level, t)
        } else {
            0
        }
    }

    /// Whether `t` lies in the image of some degeneracy `s_j`.
    pub fn is_degenerate(&self, level: &SlotLevel, t: &Tensor) -> bool {
        if level.n == 0 {
            return false;
        }
        let full = if level.n >= 64 { u64::MAX } else { (1u64 << level.n) - 1 };
        t.iter().fold(full, |m, &(s, _)| m & level.masks[s as usize]) != 0
    }

    /// All basis tensors at a level, bucketed by block, optionally without
    /// the degenerate ones.
    pub fn enumerate(
        &self,
        level: &SlotLevel,
        max_weight: Option<u32>,
        normalized: bool,
        guard: usize,
    ) -> Result<BTreeMap<u32, Vec<Tensor>>, LodayError> {
        let mut out: BTreeMap<u32, Vec<Tensor>> = BTreeMap::new();
        let active: Vec<usize> = (0..level.len()).filter(|&s| self.algebras[level.algebra[s]].dim() > 1).collect();
        let mut cur: Tensor = Vec::new();
        let full = if level.n == 0 { 0 } else if level.n >= 64 { u64::MAX } else { (1u64 << level.n) - 1 };
        self.dfs(level, &active, 0, 0, full, max_weight, normalized, guard, &mut cur, &mut out)?;
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        &self,
        level: &SlotLevel,
        active: &[usize],
        pos: usize,
        weight: u32,
        mask: u64,
        max_weight: Option<u32>,
        normalized: bool,
        guard: usize,
        cur: &mut Tensor,
        out: &mut BTreeMap<u32, Vec<Tensor>>,
    ) -> Result<(), LodayError> {
        if pos == active.len() {
            if normalized && mask != 0 {
                return Ok(());
            }
            let block = if self.blocked { weight } else { 0 };
            let bucket = out.entry(block).or_default();
            if bucket.len() >= guard {
                return Err(LodayError::SizeGuard { level: level.n, weight: block, guard });
            }
            bucket.push(cur.clone());
            return Ok(());
        }
        let slot = active[pos];
        let alg = &self.algebras[level.algebra[slot]];
        self.dfs(level, active, pos + 1, weight, mask, max_weight, normalized, guard, cur, out)?;
        for b in 0..alg.dim() {
            if b == alg.unit() {
                continue;
            }
            let w = weight + alg.weight(b);
            if max_weight.is_some_and(|m| w > m) {
                continue;
            }
            cur.push((slot as u32, b as u32));
            self.dfs(level, active, pos + 1, w, mask & level.masks[slot], max_weight, normalized, guard, cur, out)?;
            cur.pop();
        }
        Ok(())
    }

    fn relabel(&self, from: usize, to: usize, b: usize) -> Element {
        if from == to {
            vec![(b, 1)]
        } else {
            self.maps
                .get(&(from, to))
                .unwrap_or_else(|| panic!("no structure map between algebras {from} and {to}"))
                .image(b)
                .to_vec()
        }
    }

    /// Pushes a basis tensor forward along a slot map: factors landing on
    /// the same slot are multiplied after relabelling into the target
    /// algebra, and empty fibres receive units.
    pub fn push(&self, source: &SlotLevel, target: &SlotLevel, map: &[u32], t: &Tensor) -> Vec<(Tensor, i64)> {
        let mut acc: Vec<(u32, Element)> = Vec::with_capacity(t.len());
        for &(s, b) in t {
            let y = map[s as usize];
            let to = target.algebra[y as usize];
            let e = self.relabel(source.algebra[s as usize], to, b as usize);
            match acc.iter_mut().find(|(slot, _)| *slot == y) {
                Some((_, prev)) => *prev = self.algebras[to].mul(prev, &e),
                None => acc.push((y, e)),
            }
        }
        acc.sort_unstable_by_key(|a| a.0);
        self.expand(target, &acc)
    }

    /// Multiplies slot `slot` of `t` by `e`.
    pub fn act(&self, level: &SlotLevel, slot: u32, e: &[(usize, i64)], t: &Tensor) -> Vec<(Tensor, i64)> {
        let alg = &self.algebras[level.algebra[slot as usize]];
        let mut acc: Vec<(u32, Element)> = t.iter().map(|&(s, b)| (s, vec![(b as usize, 1)])).collect();
        match acc.iter_mut().find(|(s, _)| *s == slot) {
            Some((_, prev)) => *prev = alg.mul(prev, e),
            None => {
                acc.push((slot, e.to_vec()));
                acc.sort_unstable_by_key(|a| a.0);
            }
        }
        self.expand(level, &acc)
    }

    fn expand(&self, level: &SlotLevel, acc: &[(u32, Element)]) -> Vec<(Tensor, i64)> {
        let c = self.coefficients;
        let mut terms: Vec<(Tensor, i64)> = vec![(Vec::with_capacity(acc.len()), 1)];
        for (slot, e) in acc {
            if e.is_empty() {
                return Vec::new();
            }
            let unit = self.algebras[level.algebra[*slot as usize]].unit();
            if e.len() == 1 {
                let (b, x) = e[0];
                for (t, coeff) in terms.iter_mut() {
                    if b != unit {
                        t.push((*slot, b as u32));
                    }
                    *coeff = c.mul(*coeff, x);
                }
                continue;
            }
            let mut next = Vec::with_capacity(terms.len() * e.len());
            for (t, coeff) in &terms {
                for &(b, x) in e {
                    let mut t2 = t.clone();
                    if b != unit {
                        t2.push((*slot, b as u32));
                    }
                    next.push((t2, c.mul(*coeff, x)));
                }
            }
            terms = next;
        }
        terms.retain(|t| t.1 != 0);
        terms
    }
}
