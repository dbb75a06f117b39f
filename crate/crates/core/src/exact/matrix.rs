use super::{Coefficients, ExactError};

/// Sparse matrix stored row-wise; each row is sorted by column and holds
/// only nonzero (reduced) entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    coefficients: Coefficients,
    data: Vec<Vec<(usize, i64)>>,
}

impl ExactMatrix {
    pub fn zero(coefficients: Coefficients, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            coefficients,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(coefficients: Coefficients, n: usize) -> Self {
        let mut m = Self::zero(coefficients, n, n);
        for (i, row) in m.data.iter_mut().enumerate() {
            row.push((i, 1));
        }
        m
    }

    /// Builds a matrix from `(row, col, value)` triplets. Repeated positions
    /// are summed, zeros are dropped.
    pub fn from_triplets<I>(
        coefficients: Coefficients,
        rows: usize,
        cols: usize,
        triplets: I,
    ) -> Result<Self, ExactError>
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        let mut data: Vec<Vec<(usize, i64)>> = vec![Vec::new(); rows];
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(ExactError::IndexOutOfBounds {
                    row: r,
                    col: c,
                    rows,
                    cols,
                });
            }
            data[r].push((c, v));
        }
        for row in data.iter_mut() {
            row.sort_unstable_by_key(|e| e.0);
            let mut merged: Vec<(usize, i64)> = Vec::with_capacity(row.len());
            for &(c, v) in row.iter() {
                match merged.last_mut() {
                    Some(last) if last.0 == c => last.1 = coefficients.add(last.1, v),
                    _ => merged.push((c, coefficients.reduce(v))),
                }
            }
            merged.retain(|e| e.1 != 0);
            *row = merged;
        }
        Ok(ExactMatrix {
            rows,
            cols,
            coefficients,
            data,
        })
    }

    pub fn from_dense(coefficients: Coefficients, dense: &[Vec<i64>]) -> Result<Self, ExactError> {
        let rows = dense.len();
        let cols = dense.first().map_or(0, |r| r.len());
        if dense.iter().any(|r| r.len() != cols) {
            return Err(ExactError::DimensionMismatch("ragged dense matrix".into()));
        }
        let trip = dense
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, &v)| (i, j, v)));
        Self::from_triplets(coefficients, rows, cols, trip)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn coefficients(&self) -> Coefficients {
        self.coefficients
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn row(&self, r: usize) -> &[(usize, i64)] {
        &self.data[r]
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r]
            .binary_search_by_key(&c, |e| e.0)
            .map_or(0, |i| self.data[r][i].1)
    }

    /// Iterates over the stored `(row, col, value)` entries.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |&(j, v)| (i, j, v)))
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.cols]; self.rows];
        for (i, j, v) in self.entries() {
            out[i][j] = v;
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<Vec<(usize, i64)>> = vec![Vec::new(); self.cols];
        for (i, j, v) in self.entries() {
            data[j].push((i, v));
        }
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            coefficients: self.coefficients,
            data,
        }
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix, ExactError> {
        self.coefficients.ensure_same(rhs.coefficients)?;
        if self.cols != rhs.rows {
            return Err(ExactError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let c = self.coefficients;
        let mut data = Vec::with_capacity(self.rows);
        let mut acc: std::collections::BTreeMap<usize, i64> = Default::default();
        for row in &self.data {
            acc.clear();
            for &(k, a) in row {
                for &(j, b) in &rhs.data[k] {
                    let e = acc.entry(j).or_insert(0);
                    *e = c.add(*e, c.mul(a, b));
                }
            }
            data.push(acc.iter().filter(|e| *e.1 != 0).map(|(&j, &v)| (j, v)).collect());
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols: rhs.cols,
            coefficients: c,
            data,
        })
    }

    /// Reinterprets the entries in another coefficient ring. Converting into a
    /// prime field reduces modulo `p`.
    pub fn change_coefficients(&self, target: Coefficients) -> ExactMatrix {
        ExactMatrix::from_triplets(target, self.rows, self.cols, self.entries())
            .expect("indices already in bounds")
    }
}
