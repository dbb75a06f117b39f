use super::*;
use crate::exact::{rank, Coefficients, ExactMatrix, HomologyEntry};
use crate::simplicial::SimplicialPair;

const F2: Coefficients = Coefficients::PrimeField(2);

fn trunc(p: u32, m: usize) -> Arc<FinAlgebra> {
    Arc::new(FinAlgebra::truncated_polynomial(Coefficients::PrimeField(p), m, 1).unwrap())
}

fn ground(c: Coefficients) -> Arc<FinAlgebra> {
    Arc::new(FinAlgebra::coefficient_ring(c))
}

/// `F2[x]/x^3 -> F2[x]/x^2 -> F2` on `(Δ_2, ∂Δ_2)`.
fn delta2_input() -> LodayInput {
    let (a, b, c) = (trunc(2, 3), trunc(2, 2), ground(F2));
    let f = AlgebraMap::projection(a, b.clone()).unwrap();
    let g = AlgebraMap::projection(b, c).unwrap();
    LodayInput::relative(SimplicialPair::delta_boundary(2).unwrap(), f, g, 2).unwrap()
}

#[test]
fn factor_zones_on_the_two_simplex() {
    let input = delta2_input();
    let l2 = input.level(2);
    assert_eq!(l2.factors.len(), 10);
    assert_eq!(l2.count(Zone::Outer), 1);
    assert_eq!(l2.count(Zone::Basepoint), 1);
    let l1 = input.level(1);
    assert_eq!(l1.count(Zone::Outer), 0);
    assert_eq!(l1.count(Zone::Inner), 5);
}

#[test]
fn degeneracy_uses_units_only() {
    let input = delta2_input();
    let psi = input.structure_map(1, &[0, 0, 1]).unwrap();
    let fibers = psi.fibers();
    assert!(fibers.iter().all(|f| f.len() <= 1));
    assert!(psi.crossings().is_empty());
    let l2 = input.level(2);
    let top = l2.factors.iter().position(|f| f.zone == Zone::Outer).unwrap();
    assert!(fibers[top].is_empty());
    // x on every factor of level 1 except the basepoint
    let l1 = input.level(1);
    let t: Vec<usize> = l1.factors.iter().map(|f| usize::from(f.zone == Zone::Inner)).collect();
    let out = psi.apply(&t);
    assert_eq!(out.len(), 1);
    assert_eq!(out[0].0.iter().filter(|&&b| b != 0).count(), 5);
    assert_eq!(out[0].0[top], 0);
}

#[test]
fn face_multiplies_over_fibres() {
    let input = delta2_input();
    let phi = input.structure_map(2, &[0, 2]).unwrap();
    let fibers = phi.fibers();
    let mut sizes: Vec<usize> = fibers.iter().map(Vec::len).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(sizes, vec![3, 2, 2, 1, 1, 1]);
    let l2 = input.level(2);
    let top = l2.factors.iter().position(|f| f.zone == Zone::Outer).unwrap();
    let big = fibers.iter().find(|f| f.len() == 3).unwrap();
    assert!(big.contains(&top));
    let crossings = phi.crossings();
    assert_eq!(crossings, vec![(top, Zone::Outer, Zone::Inner)]);
    let bp = l2.factors.iter().position(|f| f.zone == Zone::Basepoint).unwrap();
    let l1 = input.level(1);
    let bp1 = l1.factors.iter().position(|f| f.zone == Zone::Basepoint).unwrap();
    assert_eq!(fibers[bp1], vec![bp]);
    // x on the A-factor and on one B-factor of the big fibre gives x^2 = 0 in B
    let mut t = vec![0; 10];
    t[top] = 1;
    let other = *big.iter().find(|&&s| s != top).unwrap();
    t[other] = 1;
    assert!(phi.apply(&t).is_empty());
    t[other] = 0;
    t[top] = 2;
    assert!(phi.apply(&t).is_empty(), "f kills x^2");
}

#[test]
fn identity_structure_map() {
    let input = delta2_input();
    let id = input.structure_map(2, &[0, 1, 2]).unwrap();
    let t = vec![2, 1, 0, 1, 0, 0, 1, 0, 0, 0];
    assert_eq!(id.apply(&t), vec![(t.clone(), 1)]);
    assert!(input.structure_map(2, &[1, 0]).is_err());
}

#[test]
fn face_identities_on_tensors() {
    let input = delta2_input();
    let n = 3;
    let dim = |k: usize| input.level(k).factors.len();
    let face = |k: usize, i: usize| {
        let map: Vec<u8> = (0..k as u8).map(|v| if (v as usize) < i { v } else { v + 1 }).collect();
        input.structure_map(k, &map).unwrap()
    };
    // a tensor with x in every non-basepoint factor whose algebra is not F2
    let l3 = input.level(n);
    let t: Vec<usize> = l3.factors.iter().map(|f| usize::from(f.zone != Zone::Basepoint)).collect();
    assert_eq!(t.len(), dim(n));
    for j in 1..=n {
        for i in 0..j {
            let lhs: Vec<_> = face(n, j).apply(&t).into_iter().flat_map(|(u, _)| face(n - 1, i).apply(&u)).collect();
            let rhs: Vec<_> = face(n, i).apply(&t).into_iter().flat_map(|(u, _)| face(n - 1, j - 1).apply(&u)).collect();
            assert_eq!(lhs, rhs, "d_{i} d_{j}");
        }
    }
}

#[test]
fn trivial_algebra_complex() {
    let k = ground(Coefficients::PrimeField(3));
    let input = LodayInput::absolute(Arc::new(FinSimplicialSet::torus()), k, 4);
    let ch = input.chains().unwrap();
    assert_eq!(ch.level_dim(0), 1);
    assert!((1..=5).all(|n| ch.level_dim(n) == 0));
    assert_eq!(input.hh().unwrap().ranks(), vec![1, 0, 0, 0, 0]);
}

/// Normalized dimension = total minus the rank of the span of all
/// degeneracy images, computed from the structure maps on every tensor.
fn normalized_dim_oracle(input: &LodayInput, n: usize) -> usize {
    let factors = input.level(n).factors.len();
    let dims: Vec<usize> = input.level(n).factors.iter().map(|f| match f.zone {
        Zone::Outer => input.a().dim(),
        Zone::Inner => input.b().dim(),
        Zone::Basepoint => input.c().dim(),
    }).collect();
    let total: usize = dims.iter().product();
    if n == 0 {
        return total;
    }
    let below: Vec<usize> = input.level(n - 1).factors.iter().map(|f| match f.zone {
        Zone::Outer => input.a().dim(),
        Zone::Inner => input.b().dim(),
        Zone::Basepoint => input.c().dim(),
    }).collect();
    let encode = |t: &[usize]| t.iter().zip(&dims).fold(0usize, |acc, (&b, &d)| acc * d + b);
    let mut triplets = Vec::new();
    let mut col = 0;
    for j in 0..n {
        let map: Vec<u8> = (0..=n as u8).map(|v| if (v as usize) <= j { v } else { v - 1 }).collect();
        let s = input.structure_map(n - 1, &map).unwrap();
        let count: usize = below.iter().product();
        for code in 0..count {
            let mut t = vec![0; below.len()];
            let mut c = code;
            for k in (0..below.len()).rev() {
                t[k] = c % below[k];
                c /= below[k];
            }
            for (u, x) in s.apply(&t) {
                triplets.push((encode(&u), col, x));
            }
            col += 1;
        }
    }
    assert_eq!(dims.len(), factors);
    let m = ExactMatrix::from_triplets(input.a().coefficients(), total, col, triplets).unwrap();
    total - rank(&m).unwrap()
}

#[test]
fn normalized_dimensions_match_degeneracy_quotient() {
    let circle = Arc::new(FinSimplicialSet::circle());
    let input = LodayInput::absolute(circle, trunc(2, 2), 4);
    let ch = input.chains().unwrap();
    for n in 0..=4 {
        assert_eq!(ch.level_dim(n), normalized_dim_oracle(&input, n), "level {n}");
    }
    let rel = delta2_input();
    let ch = rel.chains().unwrap();
    for n in 0..=3 {
        assert_eq!(ch.level_dim(n), normalized_dim_oracle(&rel, n), "relative level {n}");
    }
}

#[test]
fn gaussian_integer_level_ranks() {
    let zi = Arc::new(FinAlgebra::gaussian_integers());
    let input = LodayInput::absolute(Arc::new(FinSimplicialSet::circle()), zi, 3);
    for k in 0..5 {
        let total: usize = input.level_dims(k).unwrap().values().sum();
        assert_eq!(total, 1 << (k + 1));
    }
}

#[test]
fn dual_numbers_on_the_circle() {
    let input = LodayInput::absolute(Arc::new(FinSimplicialSet::circle()), trunc(2, 2), 5);
    assert_eq!(input.hh().unwrap().ranks(), vec![2; 6]);
}

#[test]
fn polynomial_ring_by_weight_truncation() {
    // HH(F2[x]) = F2[x] ⊗ Λ(dx): weights 0..=4 give 5 classes in degree 0, 4 in degree 1
    let p = Arc::new(FinAlgebra::polynomial(F2, 1, 4).unwrap());
    let input = LodayInput::absolute(Arc::new(FinSimplicialSet::circle()), p, 3);
    let table = input.hh().unwrap();
    assert_eq!(table.ranks(), vec![5, 4, 0, 0]);
    assert!(table.cells.keys().all(|&(_, w)| w <= 4));
}

#[test]
fn full_pair_reduces_to_absolute() {
    let x = Arc::new(FinSimplicialSet::sphere_minimal(2).unwrap());
    let (a, b, c) = (trunc(2, 3), trunc(2, 2), trunc(2, 2));
    let f = AlgebraMap::projection(a, b.clone()).unwrap();
    let g = AlgebraMap::identity(c);
    let rel = LodayInput::relative(SimplicialPair::full(x.clone()), f, g.clone(), 3).unwrap();
    let abs = LodayInput::with_coefficients(x, g, 3);
    assert_eq!(rel.hh().unwrap(), abs.hh().unwrap());
}

#[test]
fn size_guard_aborts() {
    let input = LodayInput::absolute(Arc::new(FinSimplicialSet::sphere_minimal(2).unwrap()), trunc(2, 2), 5)
        .with_size_guard(100);
    assert!(matches!(input.hh(), Err(LodayError::SizeGuard { .. })));
}

#[test]
fn huge_levels_are_refused_before_they_are_built() {
    let input = LodayInput::absolute(Arc::new(FinSimplicialSet::sphere_minimal(9).unwrap()), trunc(2, 2), 30);
    match input.hh() {
        Err(LodayError::TooManySimplices { level, .. }) => assert!(level > 9),
        other => panic!("expected a refusal, got {other:?}"),
    }
}

#[test]
fn weight_scaling_forces_single_block() {
    let a = trunc(2, 2);
    let b = trunc(2, 3);
    let f = AlgebraMap::new(a, b.clone(), vec![vec![(0, 1)], vec![(2, 1)]], 2).unwrap();
    let g = AlgebraMap::identity(b);
    let pair = SimplicialPair::delta_boundary(1).unwrap();
    let input = LodayInput::relative(pair, f, g, 2).unwrap();
    let table = input.hh().unwrap();
    assert!(table.cells.keys().all(|&(_, w)| w == 0));
    assert!(matches!(input.with_max_weight(3).hh(), Err(LodayError::WeightTruncationUnsupported)));
}

#[test]
fn integral_entries() {
    let zi = Arc::new(FinAlgebra::gaussian_integers());
    let input = LodayInput::absolute(Arc::new(FinSimplicialSet::circle()), zi, 3);
    let t = input.hh().unwrap();
    assert_eq!(t.degrees[0], HomologyEntry::Integral { rank: 2, torsion: vec![] });
    assert_eq!(t.degrees[1], HomologyEntry::Integral { rank: 0, torsion: vec![2, 2] });
    assert!(t.degrees[2].is_zero());
}

#[test]
fn juggling_with_identity() {
    let a = trunc(2, 3);
    let id = AlgebraMap::identity(a.clone());
    for s in 1..4 {
        let l: usize = juggle_left(&id, s).unwrap().values().sum();
        let r: usize = juggle_iterated(&id, s).unwrap().values().sum();
        assert_eq!((l, r), (3, 3));
    }
}

#[test]
fn pair_coequalizer_with_trivial_subobject() {
    // Y = * : the relative tensor product is L_X(A; C) itself
    let x = Arc::new(FinSimplicialSet::circle());
    let a = trunc(2, 2);
    let input = LodayInput::absolute(x, a, 2);
    let q = pair_coequalizer(&input).unwrap();
    for n in 0..=3 {
        assert_eq!(q.level_dims(n), input.level_dims(n).unwrap(), "level {n}");
    }
    assert_eq!(q.complex.homology().unwrap().ranks(), input.hh().unwrap().ranks());
}
