use hochschild::algebra::{monoid_algebra, AlgebraFile, AlgebraMap, FinAlgebra, PointedMonoid};
use hochschild::exact::{
    homology_at, rank_and_kernel, series_of_generator, smith_normal_form, Coefficients, ExactMatrix, GeneratorKind,
    HomologyEntry, HomologyTable, PoincareSeries,
};
use hochschild::gca::{
    b_double_prime, bigraded_series, check_collapse_by_degree, poincare, tor_bruteforce, tor_step, BigradedGCA,
    FreeGCA, Generator,
};
use hochschild::loday::LodayInput;
use hochschild::simplicial::{FinSimplicialSet, SimplicialPair};
use hochschild::verify::{check_juggle, check_quotient_pair};
use proptest::prelude::*;
use std::collections::BTreeSet;
use std::sync::Arc;

fn fp(p: u32) -> Coefficients {
    Coefficients::prime_field(p).unwrap()
}

fn prime() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![2u32, 3, 5])
}

fn models() -> Vec<FinSimplicialSet> {
    vec![
        FinSimplicialSet::circle(),
        FinSimplicialSet::sphere_minimal(2).unwrap(),
        FinSimplicialSet::torus(),
        FinSimplicialSet::delta(3).unwrap(),
        FinSimplicialSet::boundary_delta(3).unwrap(),
    ]
}

fn kind() -> impl Strategy<Value = GeneratorKind> {
    prop_oneof![
        Just(GeneratorKind::Exterior),
        Just(GeneratorKind::Polynomial),
        Just(GeneratorKind::DividedPower),
        (2u64..6).prop_map(GeneratorKind::Truncated),
    ]
}

/// A valid free algebra with up to three generators in degrees `1..=8`.
fn free_gca(p: u32) -> impl Strategy<Value = FreeGCA> {
    prop::collection::vec((kind(), 1usize..=8), 0..=3).prop_filter_map("valid at p", move |gens| {
        let gens = gens.into_iter().enumerate().map(|(i, (k, d))| Generator::new(format!("g{i}"), k, d)).collect();
        FreeGCA::new(p, gens).ok()
    })
}

/// Dense matrix product over the integers.
fn dense_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let cols = b.first().map_or(0, |r| r.len());
    a.iter().map(|row| (0..cols).map(|j| row.iter().zip(b).map(|(x, r)| x * r[j]).sum()).collect()).collect()
}

/// A unimodular integer matrix built from elementary operations.
fn unimodular(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec((0..n, 0..n, -2i64..=2, any::<bool>()), 0..8).prop_map(move |ops| {
        let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
        for (i, j, k, swap) in ops {
            if swap {
                m.swap(i, j);
            } else if i != j {
                let src = m[j].clone();
                for (x, y) in m[i].iter_mut().zip(src) {
                    *x += k * y;
                }
            }
        }
        m
    })
}

fn monotone(n: usize, m: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0..=n as u8, m + 1).prop_map(|mut v| {
        v.sort_unstable();
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_plus_nullity_is_the_column_count(
        p in prime(),
        dense in prop::collection::vec(prop::collection::vec(-4i64..=4, 5), 1..6),
    ) {
        let m = ExactMatrix::from_dense(fp(p), &dense).unwrap();
        let (rank, kernel) = rank_and_kernel(&m).unwrap();
        prop_assert_eq!(rank + kernel.len(), 5);
        for v in &kernel {
            for row in &dense {
                let dot: i64 = row.iter().zip(v).map(|(a, b)| a * b).sum();
                prop_assert_eq!(dot.rem_euclid(p as i64), 0);
            }
        }
    }

    #[test]
    fn smith_form_is_invariant_under_unimodular_changes(
        dense in prop::collection::vec(prop::collection::vec(-6i64..=6, 4), 3),
        u in unimodular(3),
        v in unimodular(4),
    ) {
        let before = smith_normal_form(&ExactMatrix::from_dense(Coefficients::Integers, &dense).unwrap()).unwrap();
        let changed = dense_mul(&dense_mul(&u, &dense), &v);
        let after = smith_normal_form(&ExactMatrix::from_dense(Coefficients::Integers, &changed).unwrap()).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn zero_differentials_give_back_the_chains(a in 0usize..6, b in 0usize..6, c in 0usize..6, p in prime()) {
        for coeffs in [fp(p), Coefficients::Integers] {
            let h = homology_at(&ExactMatrix::zero(coeffs, b, a), &ExactMatrix::zero(coeffs, c, b)).unwrap();
            prop_assert_eq!(h.rank(), b as u64);
            prop_assert!(h.torsion().is_empty());
        }
    }

    #[test]
    fn divided_powers_split_into_truncated_pieces(p in prime(), d in 1usize..6, n in 0usize..60) {
        let whole = series_of_generator(GeneratorKind::DividedPower, d, n).unwrap();
        let mut pieces = PoincareSeries::one(n);
        let mut q = 1usize;
        while q * d <= n {
            pieces = pieces.mul(&series_of_generator(GeneratorKind::Truncated(p as u64), q * d, n).unwrap());
            q *= p as usize;
        }
        prop_assert_eq!(whole, pieces);
    }

    #[test]
    fn only_associative_tables_are_accepted(table in prop::collection::vec(prop::collection::vec(0i64..2, 3), 3)) {
        // basis 1, a, b over F2; table rows give a·a, a·b, b·b
        let prod = |i: usize, j: usize| -> [i64; 3] {
            match (i.min(j), i.max(j)) {
                (0, k) => { let mut e = [0; 3]; e[k] = 1; e }
                (1, 1) => [table[0][0], table[0][1], table[0][2]],
                (1, 2) => [table[1][0], table[1][1], table[1][2]],
                _ => [table[2][0], table[2][1], table[2][2]],
            }
        };
        let times = |x: [i64; 3], y: [i64; 3]| {
            let mut out = [0i64; 3];
            for i in 0..3 {
                for j in 0..3 {
                    let e = prod(i, j);
                    for k in 0..3 {
                        out[k] = (out[k] + x[i] * y[j] * e[k]) % 2;
                    }
                }
            }
            out
        };
        let basis = |i: usize| { let mut e = [0; 3]; e[i] = 1; e };
        let associative = (0..3).all(|i| (0..3).all(|j| (0..3).all(|k| {
            times(times(basis(i), basis(j)), basis(k)) == times(basis(i), times(basis(j), basis(k)))
        })));
        let built = FinAlgebra::from_table(
            fp(2),
            vec!["1".into(), "a".into(), "b".into()],
            vec![0; 3],
            0,
            |i, j| prod(i, j).iter().enumerate().filter(|(_, &x)| x != 0).map(|(k, &x)| (k, x)).collect(),
            None,
        );
        prop_assert_eq!(built.is_ok(), associative);
    }

    #[test]
    fn smash_products_linearize_to_tensor_products(
        left in prop_oneof![(2usize..4).prop_map(|m| (true, m)), (2usize..4).prop_map(|q| (false, q))],
        right in prop_oneof![(2usize..4).prop_map(|m| (true, m)), (2usize..4).prop_map(|q| (false, q))],
        p in prime(),
    ) {
        let build = |(trunc, k): (bool, usize)| {
            if trunc { PointedMonoid::truncated_powers(k).unwrap() } else { PointedMonoid::cyclic_group(k).unwrap() }
        };
        let (m1, m2) = (build(left), build(right));
        let smash = monoid_algebra(&m1.smash(&m2), fp(p));
        let tensor = monoid_algebra(&m1, fp(p)).tensor(&monoid_algebra(&m2, fp(p))).unwrap();
        prop_assert_eq!(smash.dim(), tensor.dim());
        let bijection: Vec<usize> = smash.labels().iter().map(|l| tensor.index_of(l).unwrap()).collect();
        prop_assert!(smash.is_isomorphic_via(&tensor, &bijection));
    }

    #[test]
    fn algebra_maps_are_accepted_exactly_when_multiplicative(
        images in prop::collection::vec(prop::collection::vec(0i64..2, 3), 3),
    ) {
        // F2[x]/x^3 -> F2[y]/y^3 with all weights zero
        let alg = || Arc::new(FinAlgebra::truncated_polynomial(fp(2), 3, 0).unwrap());
        let (a, b) = (alg(), alg());
        let elems: Vec<Vec<(usize, i64)>> = images
            .iter()
            .map(|v| v.iter().enumerate().filter(|(_, &x)| x != 0).map(|(k, &x)| (k, x)).collect())
            .collect();
        let sort = |mut e: Vec<(usize, i64)>| { e.retain(|&(_, x)| x % 2 != 0); e.sort(); e };
        let square = sort(b.mul(&elems[1], &elems[1]));
        let cube = sort(b.mul(&elems[1], &elems[2]));
        let multiplicative = elems[0] == vec![(0, 1)] && sort(elems[2].clone()) == square && cube.is_empty();
        prop_assert_eq!(AlgebraMap::new(a, b, elems, 1).is_ok(), multiplicative);
    }

    #[test]
    fn level_counts_match_enumeration(which in 0usize..5, n in 0usize..=8) {
        let x = &models()[which];
        prop_assert_eq!(x.level_size(n), x.level(n).len() as u128);
    }

    #[test]
    fn simplicial_identities(which in 0usize..5, n in 2usize..=6) {
        let x = &models()[which];
        for s in x.simplices_at(n) {
            for j in 0..=n {
                for i in 0..j {
                    prop_assert_eq!(x.face(&x.face(&s, j), i), x.face(&x.face(&s, i), j - 1));
                }
                for i in 0..=j {
                    prop_assert_eq!(x.degeneracy(&x.degeneracy(&s, j), i), x.degeneracy(&x.degeneracy(&s, i), j + 1));
                }
                prop_assert_eq!(x.face(&x.degeneracy(&s, j), j), s.clone());
                prop_assert_eq!(x.face(&x.degeneracy(&s, j), j + 1), s.clone());
            }
        }
    }

    #[test]
    fn loday_structure_maps_compose(
        (n, phi, psi) in (1usize..=4, 0usize..=3, 0usize..=3)
            .prop_flat_map(|(n, m, k)| (Just(n), monotone(n, m), monotone(m, k))),
    ) {
        let a = Arc::new(FinAlgebra::truncated_polynomial(fp(2), 2, 1).unwrap());
        let pair = SimplicialPair::delta_boundary(2).unwrap();
        let input = LodayInput::relative(pair, AlgebraMap::identity(a.clone()), AlgebraMap::identity(a), 4).unwrap();
        let m = phi.len() - 1;
        let composite: Vec<u8> = psi.iter().map(|&v| phi[v as usize]).collect();
        let outer = input.structure_map(n, &phi).unwrap().slot_map();
        let inner = input.structure_map(m, &psi).unwrap().slot_map();
        let direct = input.structure_map(n, &composite).unwrap().slot_map();
        let chained: Vec<usize> = outer.iter().map(|&s| inner[s]).collect();
        prop_assert_eq!(chained, direct);
    }

    #[test]
    fn hh_ignores_basis_order(which in 0usize..3, perm in Just((0..3).collect::<Vec<usize>>()).prop_shuffle()) {
        let a = match which {
            0 => FinAlgebra::truncated_polynomial(fp(2), 3, 1).unwrap(),
            1 => FinAlgebra::cyclic_group_algebra(fp(3), 3).unwrap(),
            _ => FinAlgebra::truncated_polynomial(fp(3), 3, 1).unwrap(),
        };
        let b = a.reindexed(&perm).unwrap();
        let circle = Arc::new(FinSimplicialSet::circle());
        let before = LodayInput::absolute(circle.clone(), Arc::new(a), 4).hh().unwrap();
        let after = LodayInput::absolute(circle, Arc::new(b), 4).hh().unwrap();
        prop_assert_eq!(before.ranks(), after.ranks());
    }

    #[test]
    fn kunneth_for_tor(
        (p, a, b) in prop::sample::select(vec![2u32, 3]).prop_flat_map(|p| (Just(p), free_gca(p), free_gca(p))),
    ) {
        let renamed = b.generators().iter().map(|g| Generator { name: format!("{}'", g.name), ..g.clone() }).collect();
        let renamed = FreeGCA::new(p, renamed).unwrap();
        let joint = poincare(&tor_step(&a.tensor(&renamed).unwrap(), 30).unwrap(), 30).unwrap();
        let split = poincare(&tor_step(&a, 30).unwrap(), 30).unwrap().mul(&poincare(&tor_step(&b, 30).unwrap(), 30).unwrap());
        prop_assert_eq!(joint, split);
    }

    #[test]
    fn bar_complex_euler_characteristic(p in prop::sample::select(vec![2u32, 3]), m in 2usize..=9, d in 1u32..=2) {
        let d = if p == 2 { d } else { 2 };
        let alg = FinAlgebra::truncated_polynomial(fp(p), m, d).unwrap();
        let free = FreeGCA::new(p, vec![Generator::truncated("x", d as usize, m as u64)]).unwrap();
        let bound = 12;
        let brute = tor_bruteforce(&alg, bound).unwrap();
        let closed = bigraded_series(&tor_step(&free, bound).unwrap(), bound).unwrap();
        for w in 0..=bound {
            // words of length s in x, ..., x^(m-1) with total weight w
            let mut words = vec![vec![0i64; bound + 1]; bound + 1];
            words[0][0] = 1;
            for s in 1..=bound {
                for wt in 0..=bound {
                    words[s][wt] = (1..m).map(|e| e * d as usize).filter(|&x| x <= wt).map(|x| words[s - 1][wt - x]).sum();
                }
            }
            let chains: i64 = (0..=bound).filter(|&s| s + w <= bound).map(|s| if s % 2 == 0 { words[s][w] } else { -words[s][w] }).sum();
            let mut homology = 0i64;
            let mut tor = 0i64;
            for s in 0..=bound {
                if s + w > bound {
                    continue;
                }
                let cell = brute.cells.get(&(s + w, w as u32)).map_or(0, |e| e.rank() as i64);
                prop_assert_eq!(cell as u64, closed[s][w], "s = {}, w = {}", s, w);
                let sign = if s % 2 == 0 { 1 } else { -1 };
                homology += sign * cell;
                tor += sign * closed[s][w] as i64;
            }
            if 2 * w <= bound {
                // every bar word of weight w has length at most w, so the
                // truncation at total degree bound cuts nothing off
                prop_assert_eq!(chains, homology, "weight {}", w);
                prop_assert_eq!(chains, tor, "weight {}", w);
            }
        }
    }

    #[test]
    fn double_prime_tower_is_iterated_tor(
        p in prop::sample::select(vec![2u32, 3]),
        which in 0usize..3,
        n in 1usize..=3,
    ) {
        let m = [p as u64, (p * p) as u64, 2 * p as u64][which];
        let bound = 30;
        let here = b_double_prime(p, n, m, bound).unwrap();
        prop_assert_eq!(b_double_prime(p, n + 1, m, bound).unwrap(), tor_step(&here, bound).unwrap());
    }

    #[test]
    fn collapse_candidates_persist_when_generators_are_added(
        gens in prop::collection::vec((prop::sample::select(vec![GeneratorKind::Exterior, GeneratorKind::DividedPower]), 1usize..=3, 0usize..=12), 1..=4),
        extra in (prop::sample::select(vec![GeneratorKind::Exterior, GeneratorKind::DividedPower]), 1usize..=3, 1usize..=10),
    ) {
        let page = |gs: &[(GeneratorKind, usize, usize)]| {
            let generators = gs.iter().enumerate().map(|(i, &(k, s, t))| Generator::new(format!("g{i}"), k, s + t).with_filtration(s)).collect();
            BigradedGCA::new(FreeGCA::new(2, generators).unwrap()).unwrap()
        };
        let top = gens.iter().map(|&(_, s, t)| s + t).max().unwrap();
        let bigger: Vec<_> = gens.iter().copied().chain(std::iter::once((extra.0, extra.1, top + extra.2))).collect();
        let key = |c: &hochschild::gca::Candidate| (c.source.clone(), c.target.clone(), c.r);
        let before: BTreeSet<_> = check_collapse_by_degree(&page(&gens), 60).candidates.iter().map(key).collect();
        let after: BTreeSet<_> = check_collapse_by_degree(&page(&bigger), 60).candidates.iter().map(key).collect();
        prop_assert!(before.is_subset(&after), "{:?} not in {:?}", before, after);
    }

    #[test]
    fn free_gca_json_round_trips(a in free_gca(3)) {
        prop_assert_eq!(FreeGCA::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn homology_table_json_round_trips(
        field in prop::collection::vec(0u64..9, 1..8),
        integral in prop::collection::vec((0u64..4, prop::collection::vec(prop::sample::select(vec![2u64, 3, 4, 6]), 0..3)), 1..8),
    ) {
        let mut t = HomologyTable::new(fp(5), field.len() - 1);
        for (k, &dim) in field.iter().enumerate() {
            t.degrees[k] = HomologyEntry::Field { dim };
        }
        prop_assert_eq!(HomologyTable::from_json(&t.to_json()).unwrap().degrees, t.degrees);
        let mut z = HomologyTable::new(Coefficients::Integers, integral.len() - 1);
        for (k, (rank, tors)) in integral.iter().enumerate() {
            z.degrees[k] = HomologyEntry::Integral { rank: *rank, torsion: hochschild::exact::merge_torsion(tors) };
        }
        prop_assert_eq!(HomologyTable::from_json(&z.to_json()).unwrap().degrees, z.degrees);
    }

    #[test]
    fn algebra_json_round_trips(p in prime(), m in 2usize..6, w in 0u32..3) {
        let a = FinAlgebra::truncated_polynomial(fp(p), m, w).unwrap();
        let text = serde_json::to_string(&AlgebraFile::from_algebra(&a)).unwrap();
        prop_assert_eq!(hochschild::algebra::parse_algebra_json(&text).unwrap(), a);
    }
}

#[test]
fn reports_are_reproducible() {
    let a = Arc::new(FinAlgebra::truncated_polynomial(fp(3), 3, 1).unwrap());
    let f = AlgebraMap::identity(a.clone());
    let first = check_juggle(&f, 3).unwrap();
    assert_eq!(first, check_juggle(&f, 3).unwrap());
    let pair = SimplicialPair::delta_boundary(1).unwrap();
    let mut r1 = check_quotient_pair(&pair, &a, 4).unwrap();
    let mut r2 = check_quotient_pair(&pair, &a, 4).unwrap();
    assert_eq!(r1, r2);
    r1.runtime_ms = 0;
    r2.runtime_ms = 0;
    assert_eq!(r1.to_json(), r2.to_json());
}
