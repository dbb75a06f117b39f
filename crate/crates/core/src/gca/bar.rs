use super::GcaError;
use crate::algebra::FinAlgebra;
use crate::exact::{ExactMatrix, HomologyTable};
use crate::loday::ChainComplex;
use std::collections::{BTreeMap, HashMap};

/// Words `a_1 | ... | a_s` in the augmentation ideal with total weight `w`.
fn words(weights: &[u32], s: usize, w: u32) -> Vec<Vec<usize>> {
    if s == 0 {
        return if w == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for (i, &wi) in weights.iter().enumerate() {
        if wi <= w {
            for mut rest in words(weights, s - 1, w - wi) {
                rest.insert(0, i);
                out.push(rest);
            }
        }
    }
    out
}

/// `Tor^A(k, k)` in total degrees `0..=bound` from the reduced bar complex,
/// split by weight. The weight of a basis element is its internal degree,
/// so a bar word of length `s` and weight `w` has total degree `s + w`.
///
/// For a weight-truncated algebra only weights up to the truncation are
/// reported, since the products above it are not those of the full algebra.
pub fn tor_bruteforce(a: &FinAlgebra, bound: usize) -> Result<HomologyTable, GcaError> {
    let eps = a.augmentation().ok_or(GcaError::NoAugmentation)?.to_vec();
    let c = a.coefficients();
    let unit = a.unit();
    // the ideal is spanned by b - ε(b)·1 for the non-unit basis elements b,
    // and an element of the ideal is determined by its non-unit coordinates
    let ideal: Vec<usize> = (0..a.dim()).filter(|&b| b != unit).collect();
    let slot: HashMap<usize, usize> = ideal.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    let lifted = |i: usize| -> Vec<(usize, i64)> {
        let b = ideal[i];
        let e = c.reduce(eps[b]);
        if e == 0 { vec![(b, 1)] } else { vec![(b, 1), (unit, c.neg(e))] }
    };
    let products: Vec<Vec<Vec<(usize, i64)>>> = (0..ideal.len())
        .map(|i| {
            (0..ideal.len())
                .map(|j| {
                    a.mul(&lifted(i), &lifted(j))
                        .into_iter()
                        .filter(|&(b, x)| b != unit && x != 0)
                        .map(|(b, x)| (slot[&b], x))
                        .collect()
                })
                .collect()
        })
        .collect();
    let weights: Vec<u32> = ideal.iter().map(|&b| a.weight(b)).collect();
    let top = bound + 1;
    let max_weight = a.truncated_at().map_or(top as u32, |t| t.min(top as u32));
    let mut dims = BTreeMap::new();
    let mut differentials = BTreeMap::new();
    for w in 0..=max_weight {
        let levels: Vec<Vec<Vec<usize>>> = (0..=top)
            .map(|k| if k < w as usize { Vec::new() } else { words(&weights, k - w as usize, w) })
            .collect();
        if levels.iter().all(Vec::is_empty) {
            continue;
        }
        let index: Vec<HashMap<&[usize], usize>> =
            levels.iter().map(|l| l.iter().enumerate().map(|(i, v)| (v.as_slice(), i)).collect()).collect();
        let mut mats = Vec::new();
        for k in 1..=top {
            let mut trip = Vec::new();
            for (col, word) in levels[k].iter().enumerate() {
                let mut sign_exp = 0u32;
                for i in 0..word.len().saturating_sub(1) {
                    sign_exp += weights[word[i]] + 1;
                    let sign = if sign_exp % 2 == 0 { 1 } else { -1 };
                    for &(m, x) in &products[word[i]][word[i + 1]] {
                        let mut shorter = Vec::with_capacity(word.len() - 1);
                        shorter.extend_from_slice(&word[..i]);
                        shorter.push(m);
                        shorter.extend_from_slice(&word[i + 2..]);
                        let row = index[k - 1][shorter.as_slice()];
                        trip.push((row, col, sign * x));
                    }
                }
            }
            mats.push(ExactMatrix::from_triplets(c, levels[k - 1].len(), levels[k].len(), trip)?);
        }
        dims.insert(w, levels.iter().map(Vec::len).collect());
        differentials.insert(w, mats);
    }
    let complex = ChainComplex { coefficients: c, max_degree: bound, dims, differentials };
    Ok(complex.homology()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Coefficients;

    fn f(p: u32) -> Coefficients {
        Coefficients::prime_field(p).unwrap()
    }

    #[test]
    fn ground_field() {
        let t = tor_bruteforce(&FinAlgebra::coefficient_ring(f(5)), 4).unwrap();
        assert_eq!(t.ranks(), vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn exterior_gives_divided_powers() {
        let a = FinAlgebra::truncated_polynomial(f(2), 2, 1).unwrap();
        assert_eq!(tor_bruteforce(&a, 8).unwrap().ranks(), vec![1, 0, 1, 0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn truncated_cube_at_three() {
        // Λ(3) ⊗ Γ(8)
        let a = FinAlgebra::truncated_polynomial(f(3), 3, 2).unwrap();
        let r = tor_bruteforce(&a, 12).unwrap().ranks();
        assert_eq!(r, vec![1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0]);
    }

    #[test]
    fn group_algebra_is_handled() {
        // F₂[Z/2] ≅ F₂[y]/y² with y = g + 1 in weight 0
        let a = FinAlgebra::cyclic_group_algebra(f(2), 2).unwrap();
        assert_eq!(tor_bruteforce(&a, 4).unwrap().ranks(), vec![1, 1, 1, 1, 1]);
        let b = FinAlgebra::cyclic_group_algebra(f(2), 3).unwrap();
        assert_eq!(tor_bruteforce(&b, 4).unwrap().ranks(), vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn needs_augmentation() {
        let stripped = FinAlgebra::truncated_polynomial(f(2), 2, 1).unwrap().with_augmentation(None).unwrap();
        assert_eq!(tor_bruteforce(&stripped, 2).unwrap_err(), GcaError::NoAugmentation);
    }
}
