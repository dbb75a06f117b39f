use super::{Coefficients, ExactError, ExactMatrix};
use num_integer::Integer;
use std::collections::{BTreeMap, BTreeSet};

/// Invariant factors of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero diagonal entries `d_1 | d_2 | ...`, including units.
    pub invariant_factors: Vec<u64>,
    pub rank: usize,
}

impl SmithForm {
    /// Invariant factors greater than one: the torsion of the cokernel.
    pub fn torsion(&self) -> Vec<u64> {
        self.invariant_factors.iter().copied().filter(|&d| d > 1).collect()
    }
}

fn checked_sub_mul(a: i128, q: i128, b: i128) -> Result<i128, ExactError> {
    q.checked_mul(b)
        .and_then(|qb| a.checked_sub(qb))
        .ok_or(ExactError::Overflow)
}

/// Sparse phase: repeatedly pivot on entries equal to +-1. Each such pivot
/// contributes a unit invariant factor and removes one row and one column.
fn eliminate_unit_pivots(m: &ExactMatrix) -> Result<(usize, Vec<BTreeMap<usize, i128>>), ExactError> {
    let mut rows: Vec<BTreeMap<usize, i128>> = (0..m.rows())
        .map(|r| m.row(r).iter().map(|&(c, v)| (c, v as i128)).collect())
        .collect();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.cols()];
    for (r, row) in rows.iter().enumerate() {
        for &c in row.keys() {
            col_rows[c].insert(r);
        }
    }
    let mut alive: BTreeSet<usize> = (0..rows.len()).filter(|&r| !rows[r].is_empty()).collect();
    let mut units = 0usize;
    loop {
        // sparsest row carrying a unit, and within it the sparsest column
        let mut best: Option<(usize, usize, usize)> = None;
        for &r in &alive {
            for (&c, &v) in &rows[r] {
                if v.abs() == 1 {
                    let cost = (rows[r].len() - 1) * (col_rows[c].len() - 1);
                    if best.is_none_or(|b| cost < b.0) {
                        best = Some((cost, r, c));
                    }
                }
            }
            if matches!(best, Some((0, _, _))) {
                break;
            }
        }
        let Some((_, pr, pc)) = best else { break };
        let pivot_row = std::mem::take(&mut rows[pr]);
        alive.remove(&pr);
        for &c in pivot_row.keys() {
            col_rows[c].remove(&pr);
        }
        let u = pivot_row[&pc];
        let targets: Vec<usize> = col_rows[pc].iter().copied().collect();
        for i in targets {
            let factor = rows[i][&pc] * u;
            for (&c, &v) in &pivot_row {
                let cur = rows[i].get(&c).copied().unwrap_or(0);
                let nv = checked_sub_mul(cur, factor, v)?;
                if nv == 0 {
                    if rows[i].remove(&c).is_some() {
                        col_rows[c].remove(&i);
                    }
                } else {
                    if cur == 0 {
                        col_rows[c].insert(i);
                    }
                    rows[i].insert(c, nv);
                }
            }
            if rows[i].is_empty() {
                alive.remove(&i);
            }
        }
        // column pc is now zero outside the pivot row; the rest of the
        // pivot row is cleared by column operations that touch nothing else
        units += 1;
    }
    Ok((units, alive.into_iter().map(|r| std::mem::take(&mut rows[r])).collect()))
}

fn diagonalize_dense(mut a: Vec<Vec<i128>>) -> Result<Vec<i128>, ExactError> {
    let r = a.len();
    let c = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..r.min(c) {
        let mut best: Option<(i128, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &v) in row.iter().enumerate().skip(t) {
                if v != 0 && best.is_none_or(|b| v.abs() < b.0) {
                    best = Some((v.abs(), i, j));
                }
            }
        }
        let Some((_, bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..r {
                if a[i][t] != 0 {
                    let q = a[i][t] / a[t][t];
                    for j in t..c {
                        a[i][j] = checked_sub_mul(a[i][j], q, a[t][j])?;
                    }
                    clean &= a[i][t] == 0;
                }
            }
            for j in t + 1..c {
                if a[t][j] != 0 {
                    let q = a[t][j] / a[t][t];
                    for row in a.iter_mut().skip(t) {
                        row[j] = checked_sub_mul(row[j], q, row[t])?;
                    }
                    clean &= a[t][j] == 0;
                }
            }
            if clean {
                break;
            }
            // a smaller remainder exists in row t or column t: move it to the pivot
            let mut m = (a[t][t].abs(), t, t);
            for i in t + 1..r {
                if a[i][t] != 0 && a[i][t].abs() < m.0 {
                    m = (a[i][t].abs(), i, t);
                }
            }
            for j in t + 1..c {
                if a[t][j] != 0 && a[t][j].abs() < m.0 {
                    m = (a[t][j].abs(), t, j);
                }
            }
            a.swap(t, m.1);
            for row in a.iter_mut() {
                row.swap(t, m.2);
            }
        }
        diag.push(a[t][t].abs());
    }
    Ok(diag)
}

/// Turns any list of nonzero diagonal entries into divisibility-ordered
/// invariant factors, using `(a, b) -> (gcd, lcm)`.
fn normalize_diagonal(mut d: Vec<i128>) -> Result<Vec<u64>, ExactError> {
    d.sort_unstable();
    let n = d.len();
    for i in 0..n {
        for j in i + 1..n {
            let g = d[i].gcd(&d[j]);
            let l = (d[i] / g).checked_mul(d[j]).ok_or(ExactError::Overflow)?;
            d[i] = g;
            d[j] = l;
        }
    }
    d.into_iter()
        .map(|x| u64::try_from(x).map_err(|_| ExactError::Overflow))
        .collect()
}

/// Smith normal form of an integer matrix.
pub fn smith_normal_form(m: &ExactMatrix) -> Result<SmithForm, ExactError> {
    Coefficients::Integers.ensure_same(m.coefficients())?;
    let (units, rest) = eliminate_unit_pivots(m)?;
    let cols: BTreeSet<usize> = rest.iter().flat_map(|r| r.keys().copied()).collect();
    let col_pos: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let dense: Vec<Vec<i128>> = rest
        .iter()
        .map(|row| {
            let mut v = vec![0i128; cols.len()];
            for (c, &x) in row {
                v[col_pos[c]] = x;
            }
            v
        })
        .collect();
    let mut diag = vec![1i128; units];
    diag.extend(diagonalize_dense(dense)?);
    let factors = normalize_diagonal(diag)?;
    Ok(SmithForm {
        rank: factors.len(),
        invariant_factors: factors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(rows: &[Vec<i64>]) -> ExactMatrix {
        ExactMatrix::from_dense(Coefficients::Integers, rows).unwrap()
    }

    #[test]
    fn diagonal_input() {
        let s = smith_normal_form(&z(&[vec![2, 0], vec![0, 0]])).unwrap();
        assert_eq!(s.invariant_factors, vec![2]);
        assert_eq!(s.rank, 1);
    }

    #[test]
    fn two_by_two_hand_reduction() {
        // det = -8 and the gcd of the entries is 2, so the factors are 2 | 4
        let s = smith_normal_form(&z(&[vec![2, 4], vec![6, 8]])).unwrap();
        assert_eq!(s.invariant_factors, vec![2, 4]);
    }

    #[test]
    fn identity_factors() {
        let s = smith_normal_form(&ExactMatrix::identity(Coefficients::Integers, 2)).unwrap();
        assert_eq!(s.invariant_factors, vec![1, 1]);
        assert!(s.torsion().is_empty());
    }

    #[test]
    fn coprime_diagonal_merges() {
        let s = smith_normal_form(&z(&[vec![2, 0], vec![0, 3]])).unwrap();
        assert_eq!(s.invariant_factors, vec![1, 6]);
    }

    #[test]
    fn unit_phase_with_fill_in() {
        let s = smith_normal_form(&z(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]])).unwrap();
        assert_eq!(s.invariant_factors, vec![1, 3]);
    }

    #[test]
    fn field_matrix_rejected() {
        let m = ExactMatrix::identity(Coefficients::PrimeField(2), 1);
        assert!(smith_normal_form(&m).is_err());
    }
}
