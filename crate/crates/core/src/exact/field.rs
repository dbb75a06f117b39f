use super::{Coefficients, ExactError, ExactMatrix};
use std::collections::HashMap;

type SparseRow = Vec<(usize, u64)>;

fn inv_mod(a: u64, p: u64) -> u64 {
    // p prime, a != 0 mod p
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// `a - c * b` on sorted sparse rows.
fn sub_scaled(a: &[(usize, u64)], c: u64, b: &[(usize, u64)], p: u64) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            let v = (p - c * b[j].1 % p) % p;
            if v != 0 {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = (a[i].1 + p - c * b[j].1 % p) % p;
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental row echelon form over `F_p`.
///
/// Rows are stored with leading coefficient 1 and keyed by their leading
/// column. Inserting a vector reduces it against the stored pivots.
#[derive(Debug, Clone)]
pub struct Echelon {
    p: u64,
    pivots: HashMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new(p: u32) -> Self {
        Echelon {
            p: p as u64,
            pivots: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.contains_key(&col)
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.pivots.keys().copied().collect();
        v.sort_unstable();
        v
    }

    fn prepare(&self, v: &[(usize, i64)]) -> SparseRow {
        let p = self.p as i64;
        let mut row: SparseRow = v
            .iter()
            .map(|&(c, x)| (c, x.rem_euclid(p) as u64))
            .filter(|e| e.1 != 0)
            .collect();
        row.sort_unstable_by_key(|e| e.0);
        row
    }

    /// Reduces `v` until its leading column is not a pivot. The remainder
    /// may still contain pivot columns at later positions.
    fn reduce_leading(&self, mut row: SparseRow) -> SparseRow {
        while let Some(&(c, x)) = row.first() {
            match self.pivots.get(&c) {
                Some(piv) => row = sub_scaled(&row, x, piv, self.p),
                None => break,
            }
        }
        row
    }

    /// Inserts a vector; returns `true` if it increased the rank.
    pub fn insert(&mut self, v: &[(usize, i64)]) -> bool {
        let row = self.reduce_leading(self.prepare(v));
        match row.first() {
            None => false,
            Some(&(c, x)) => {
                let inv = inv_mod(x, self.p);
                let row: SparseRow = row.into_iter().map(|(j, y)| (j, y * inv % self.p)).collect();
                self.pivots.insert(c, row);
                true
            }
        }
    }

    /// Fully reduces `v` modulo the row space: the result has no entries in
    /// pivot columns.
    pub fn normal_form(&self, v: &[(usize, i64)]) -> Vec<(usize, i64)> {
        let mut row = self.prepare(v);
        let mut done: Vec<(usize, i64)> = Vec::new();
        loop {
            row = self.reduce_leading(row);
            if row.is_empty() {
                break;
            }
            let (c, x) = row.remove(0);
            done.push((c, x as i64));
        }
        done
    }

    /// Rows in reduced row echelon form, sorted by pivot column.
    pub fn reduced_rows(&self) -> Vec<(usize, Vec<(usize, i64)>)> {
        let cols = self.pivot_columns();
        let mut reduced: HashMap<usize, SparseRow> = HashMap::new();
        for &c in cols.iter().rev() {
            let mut row = self.pivots[&c].clone();
            // clear later pivot columns using already reduced rows
            loop {
                let hit = row
                    .iter()
                    .skip(1)
                    .find(|e| reduced.contains_key(&e.0))
                    .copied();
                match hit {
                    Some((j, x)) => row = sub_scaled(&row, x, &reduced[&j], self.p),
                    None => break,
                }
            }
            reduced.insert(c, row);
        }
        cols.into_iter()
            .map(|c| {
                let r = reduced.remove(&c).unwrap();
                (c, r.into_iter().map(|(j, x)| (j, x as i64)).collect())
            })
            .collect()
    }
}

fn field_prime(m: &ExactMatrix) -> Result<u32, ExactError> {
    m.coefficients().prime().ok_or(ExactError::CoefficientMismatch {
        expected: Coefficients::PrimeField(2),
        found: m.coefficients(),
    })
}

/// Rank of a matrix over `F_p`.
pub fn rank(m: &ExactMatrix) -> Result<usize, ExactError> {
    let p = field_prime(m)?;
    // eliminate along the shorter side, sparsest vectors first
    let t;
    let src = if m.rows() > m.cols() {
        t = m.transpose();
        &t
    } else {
        m
    };
    let mut order: Vec<usize> = (0..src.rows()).collect();
    order.sort_by_key(|&r| src.row(r).len());
    let mut ech = Echelon::new(p);
    for r in order {
        ech.insert(src.row(r));
    }
    Ok(ech.rank())
}

/// Rank and a kernel basis (dense vectors of length `cols`) over `F_p`.
pub fn rank_and_kernel(m: &ExactMatrix) -> Result<(usize, Vec<Vec<i64>>), ExactError> {
    let p = field_prime(m)?;
    let mut ech = Echelon::new(p);
    for r in 0..m.rows() {
        ech.insert(m.row(r));
    }
    let rows = ech.reduced_rows();
    let pivots: std::collections::HashSet<usize> = rows.iter().map(|r| r.0).collect();
    let pp = p as i64;
    let mut kernel = Vec::new();
    for free in (0..m.cols()).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0i64; m.cols()];
        v[free] = 1;
        for (pc, row) in &rows {
            if let Ok(i) = row.binary_search_by_key(&free, |e| e.0) {
                v[*pc] = (-row[i].1).rem_euclid(pp);
            }
        }
        kernel.push(v);
    }
    Ok((ech.rank(), kernel))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> Coefficients {
        Coefficients::PrimeField(p)
    }

    #[test]
    fn zero_matrix_has_full_kernel() {
        let m = ExactMatrix::zero(f(2), 3, 3);
        let (r, k) = rank_and_kernel(&m).unwrap();
        assert_eq!((r, k.len()), (0, 3));
    }

    #[test]
    fn equal_rows_over_f2() {
        let m = ExactMatrix::from_dense(f(2), &[vec![1, 1], vec![1, 1]]).unwrap();
        let (r, k) = rank_and_kernel(&m).unwrap();
        assert_eq!((r, k.len()), (1, 1));
        assert_eq!(k[0], vec![1, 1]);
    }

    #[test]
    fn identity_has_trivial_kernel() {
        for p in [2, 3, 7] {
            let m = ExactMatrix::identity(f(p), 5);
            let (r, k) = rank_and_kernel(&m).unwrap();
            assert_eq!((r, k.len()), (5, 0));
        }
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = ExactMatrix::from_dense(f(5), &[vec![1, 2, 3, 4], vec![2, 4, 1, 3], vec![3, 1, 4, 2]]).unwrap();
        let (r, k) = rank_and_kernel(&m).unwrap();
        assert_eq!(r + k.len(), 4);
        for v in &k {
            for row in m.to_dense() {
                let s: i64 = row.iter().zip(v).map(|(a, b)| a * b).sum();
                assert_eq!(s.rem_euclid(5), 0);
            }
        }
        assert_eq!(rank(&m).unwrap(), r);
    }

    #[test]
    fn integer_matrix_rejected() {
        let m = ExactMatrix::identity(Coefficients::Integers, 2);
        assert!(matches!(rank_and_kernel(&m), Err(ExactError::CoefficientMismatch { .. })));
    }

    #[test]
    fn normal_form_kills_row_space() {
        let mut e = Echelon::new(3);
        e.insert(&[(0, 1), (2, 1)]);
        e.insert(&[(1, 1), (2, 2)]);
        assert!(e.normal_form(&[(0, 1), (1, 1)]).is_empty());
        assert_eq!(e.normal_form(&[(2, 4)]), vec![(2, 1)]);
    }
}
