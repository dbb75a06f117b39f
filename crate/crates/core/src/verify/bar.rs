use super::VerifyError;
use crate::algebra::AlgebraMap;
use crate::exact::{ExactMatrix, HomologyTable};
use crate::loday::ChainComplex;
use std::collections::{BTreeMap, HashMap};

/// `Tor^A(B, B)` from the normalized two-sided bar complex
/// `B ⊗ (A/k)^{⊗s} ⊗ B`, with `A` acting on both sides through `f`.
/// Split by total weight.
pub fn two_sided_bar(f: &AlgebraMap, max_degree: usize) -> Result<HomologyTable, VerifyError> {
    let (a, b) = (f.source(), f.target());
    let c = a.coefficients();
    let bar: Vec<usize> = (0..a.dim()).filter(|&i| i != a.unit()).collect();
    let pos: HashMap<usize, usize> = bar.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let top = max_degree + 1;

    // words are (b, a_1, ..., a_s, b') with a_i indexing `bar`
    let weight = |w: &[usize]| -> u32 {
        let s = w.len() - 2;
        b.weight(w[0]) + b.weight(w[s + 1]) + w[1..=s].iter().map(|&i| a.weight(bar[i])).sum::<u32>()
    };
    let mut levels: Vec<BTreeMap<u32, Vec<Vec<usize>>>> = Vec::new();
    let mut current: Vec<Vec<usize>> = Vec::new();
    for s in 0..=top {
        current = if s == 0 {
            (0..b.dim()).flat_map(|x| (0..b.dim()).map(move |y| vec![x, y])).collect()
        } else {
            current
                .iter()
                .flat_map(|w| {
                    (0..bar.len()).map(move |i| {
                        let mut v = w.clone();
                        v.insert(v.len() - 1, i);
                        v
                    })
                })
                .collect()
        };
        let mut by_weight: BTreeMap<u32, Vec<Vec<usize>>> = BTreeMap::new();
        for w in &current {
            by_weight.entry(weight(w)).or_default().push(w.clone());
        }
        levels.push(by_weight);
    }
    let weights: Vec<u32> = {
        let mut v: Vec<u32> = levels.iter().flat_map(|l| l.keys().copied()).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let empty = Vec::new();
    let mut dims = BTreeMap::new();
    let mut differentials = BTreeMap::new();
    for &wt in &weights {
        let words: Vec<&Vec<Vec<usize>>> = levels.iter().map(|l| l.get(&wt).unwrap_or(&empty)).collect();
        let index: Vec<HashMap<&[usize], usize>> =
            words.iter().map(|ws| ws.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect()).collect();
        let mut mats = Vec::new();
        for s in 1..=top {
            let mut trip = Vec::new();
            for (col, w) in words[s].iter().enumerate() {
                let mut add = |v: Vec<usize>, x: i64, sign: i64| {
                    trip.push((index[s - 1][v.as_slice()], col, sign * x));
                };
                for i in 0..=s {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    if i == 0 {
                        let left = b.mul(&[(w[0], 1)], f.image(bar[w[1]]));
                        for (m, x) in left {
                            let mut v = vec![m];
                            v.extend_from_slice(&w[2..]);
                            add(v, x, sign);
                        }
                    } else if i == s {
                        let right = b.mul(f.image(bar[w[s]]), &[(w[s + 1], 1)]);
                        for (m, x) in right {
                            let mut v = w[..s].to_vec();
                            v.push(m);
                            add(v, x, sign);
                        }
                    } else {
                        let prod = a.mul(&[(bar[w[i]], 1)], &[(bar[w[i + 1]], 1)]);
                        // modulo the unit: terms on 1 are degenerate
                        for (m, x) in prod.into_iter().filter(|&(m, _)| m != a.unit()) {
                            let mut v = w[..i].to_vec();
                            v.push(pos[&m]);
                            v.extend_from_slice(&w[i + 2..]);
                            add(v, x, sign);
                        }
                    }
                }
            }
            mats.push(ExactMatrix::from_triplets(c, words[s - 1].len(), words[s].len(), trip).map_err(crate::loday::LodayError::from)?);
        }
        dims.insert(wt, words.iter().map(|w| w.len()).collect());
        differentials.insert(wt, mats);
    }
    let complex = ChainComplex { coefficients: c, max_degree, dims, differentials };
    Ok(complex.homology()?)
}
