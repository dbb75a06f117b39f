use super::LodayError;
use crate::exact::{homology_at, Coefficients, ExactError, ExactMatrix, HomologyTable};
use rayon::prelude::*;
use std::collections::BTreeMap;

/// A chain complex split into weight blocks.
///
/// `differentials[w][k - 1]` is `d_k: C_k -> C_{k-1}` in block `w`, with
/// rows indexing `C_{k-1}`. Levels run from 0 to `max_degree + 1`.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    pub coefficients: Coefficients,
    pub max_degree: usize,
    pub dims: BTreeMap<u32, Vec<usize>>,
    pub differentials: BTreeMap<u32, Vec<ExactMatrix>>,
}

impl ChainComplex {
    /// Total dimension of `C_k` over all blocks.
    pub fn level_dim(&self, k: usize) -> usize {
        self.dims.values().map(|d| d.get(k).copied().unwrap_or(0)).sum()
    }

    /// Dimension of `C_k` in each nonzero block.
    pub fn level_dims(&self, k: usize) -> BTreeMap<u32, usize> {
        self.dims
            .iter()
            .map(|(&w, d)| (w, d.get(k).copied().unwrap_or(0)))
            .filter(|&(_, d)| d > 0)
            .collect()
    }

    /// Homology in degrees `0..=max_degree`; checks `d ∘ d = 0` on the way.
    pub fn homology(&self) -> Result<HomologyTable, LodayError> {
        let jobs: Vec<(u32, usize)> =
            self.dims.keys().flat_map(|&w| (0..=self.max_degree).map(move |k| (w, k))).collect();
        let results: Vec<Result<(u32, usize, crate::exact::HomologyEntry), LodayError>> = jobs
            .par_iter()
            .map(|&(w, k)| {
                let mats = self.differentials.get(&w).map_or(&[][..], Vec::as_slice);
                let dims = &self.dims[&w];
                let dim = |j: usize| dims.get(j).copied().unwrap_or(0);
                let d_in = mats.get(k).cloned().unwrap_or_else(|| ExactMatrix::zero(self.coefficients, dim(k), dim(k + 1)));
                let d_out = if k == 0 {
                    ExactMatrix::zero(self.coefficients, 0, dim(0))
                } else {
                    mats.get(k - 1).cloned().unwrap_or_else(|| ExactMatrix::zero(self.coefficients, dim(k - 1), dim(k)))
                };
                match homology_at(&d_in, &d_out) {
                    Ok(e) => Ok((w, k, e)),
                    Err(ExactError::CompositionNonzero) => Err(LodayError::D2NonZero { degree: k, weight: w }),
                    Err(e) => Err(e.into()),
                }
            })
            .collect();
        let mut table = HomologyTable::new(self.coefficients, self.max_degree);
        for r in results {
            let (w, k, e) = r?;
            table.add_cell(k, w, e);
        }
        Ok(table)
    }
}
