mod common;

use common::{admissible_pool, odd_unimodular, random_reflection_product};
use ellsurf_core::elliptic::{build_full_h2bar, torsion_of_complement, SurfaceSpec};
use ellsurf_core::lattice::{positive_orientation_character_with_order, reflect, spinor_norm};
use ellsurf_core::matrix::gcd_of;
use ellsurf_core::realize::{decide, stabilizer_predicates};
use ellsurf_core::roots::{negative_e8, orbit_closure, DeltaSet};
use ellsurf_core::{IntMatrix, IntVector, Lattice};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn unimodular(n: usize, steps: usize, rng: &mut StdRng) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            m.swap_rows(i, (i + 1) % n);
            continue;
        }
        let c = BigInt::from(rng.gen_range(-2i64..=2));
        for k in 0..n {
            let add = &m[(j, k)] * &c;
            m[(i, k)] += add;
        }
    }
    m
}

fn congruent(l: &Lattice, p: &IntMatrix) -> Lattice {
    let g = l.int_gram().unwrap();
    Lattice::from_int(&(&(&p.transpose() * g) * p)).unwrap()
}

fn small_diagonal(entries: &[i64]) -> Lattice {
    Lattice::diagonal(entries)
}

fn e8_roots_basis() -> Vec<IntVector> {
    (0..8).map(|i| ellsurf_core::lattice::unit_vector(8, i)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn spinor_norm_is_multiplicative(seed in any::<u64>(), a in 1usize..6, b in 1usize..6) {
        let mut rng = StdRng::seed_from_u64(seed);
        let l = odd_unimodular(2, 4);
        let pool = admissible_pool(&l);
        let (g, tg) = random_reflection_product(&l, &pool, a, &mut rng);
        let (h, th) = random_reflection_product(&l, &pool, b, &mut rng);
        let sg = spinor_norm(&l, &g).unwrap();
        let sh = spinor_norm(&l, &h).unwrap();
        prop_assert_eq!(sg, tg);
        prop_assert_eq!(sh, th);
        prop_assert_eq!(spinor_norm(&l, &g.compose(&h)).unwrap(), sg * sh);
        prop_assert_eq!(spinor_norm(&l, &g.inverse()).unwrap(), sg);
    }

    #[test]
    fn congruence_preserves_signature_and_determinant(
        seed in any::<u64>(),
        entries in prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3, Just(0i64)], 2..6),
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let l = small_diagonal(&entries);
        let p = unimodular(entries.len(), 12, &mut rng);
        let m = congruent(&l, &p);
        prop_assert_eq!(m.signature().unwrap(), l.signature().unwrap());
        prop_assert_eq!(m.determinant().unwrap(), l.determinant().unwrap());
        prop_assert_eq!(m.is_even().unwrap(), l.is_even().unwrap());
    }

    #[test]
    fn radical_quotient_is_nondegenerate(
        seed in any::<u64>(),
        entries in prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3, Just(0i64)], 1..6),
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let l = congruent(&small_diagonal(&entries), &unimodular(entries.len(), 10, &mut rng));
        let null = entries.iter().filter(|e| **e == 0).count();
        let q = l.quotient_by_radical().unwrap();
        prop_assert_eq!(q.radical.len(), null);
        prop_assert_eq!(q.lattice.rank(), entries.len() - null);
        prop_assert!(q.lattice.radical().unwrap().is_empty());
        for r in &q.radical {
            prop_assert!(l.int_gram().unwrap().mul_vec(r).iter().all(Zero::is_zero));
            prop_assert!(gcd_of(r).is_one());
        }
    }

    #[test]
    fn discriminant_order_is_absolute_determinant(
        seed in any::<u64>(),
        entries in prop::collection::vec(prop_oneof![-6i64..=-1, 1i64..=6], 1..5),
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let l = congruent(&small_diagonal(&entries), &unimodular(entries.len(), 10, &mut rng));
        prop_assert_eq!(l.discriminant_group().unwrap().order(), l.determinant().unwrap().abs());
    }

    #[test]
    fn orientation_character_ignores_diagonalization_order(seed in any::<u64>(), len in 1usize..7) {
        let mut rng = StdRng::seed_from_u64(seed);
        let l = congruent(&odd_unimodular(2, 3), &unimodular(5, 8, &mut rng));
        let pool = admissible_pool(&l);
        prop_assume!(!pool.is_empty());
        let (g, _) = random_reflection_product(&l, &pool, len, &mut rng);
        let mut order: Vec<usize> = (0..l.rank()).collect();
        let base = positive_orientation_character_with_order(&l, &g, Some(&order)).unwrap();
        order.shuffle(&mut rng);
        prop_assert_eq!(positive_orientation_character_with_order(&l, &g, Some(&order)).unwrap(), base);
    }

    #[test]
    fn reflections_are_involutions(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let l = odd_unimodular(3, 4);
        let pool = admissible_pool(&l);
        let v = &pool[rng.gen_range(0..pool.len())];
        let r = reflect(&l, v).unwrap();
        prop_assert!(r.compose(&r).is_identity());
        let minus: IntVector = v.iter().map(|x| -x).collect();
        prop_assert_eq!(r.apply(v), minus);
        prop_assert!(r.preserves(&l).unwrap());
        prop_assert_eq!(r.determinant(), BigInt::from(-1));
    }

    #[test]
    fn orbits_grow_with_seeds_and_bounds(mask in 1u8.., bound in 1i64..3) {
        let e8 = negative_e8();
        let basis = e8_roots_basis();
        let chosen: Vec<IntVector> =
            basis.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, v)| v.clone()).collect();
        let delta = DeltaSet::new(e8.clone(), chosen.clone()).unwrap();
        let full = DeltaSet::new(e8, basis.clone()).unwrap();
        let small = orbit_closure(&delta, &chosen, None).unwrap();
        let large = orbit_closure(&full, &chosen, None).unwrap();
        prop_assert!(small.iter().all(|v| large.binary_search(v).is_ok()));
        let b = BigInt::from(bound);
        let b1 = BigInt::from(bound + 1);
        let tight = orbit_closure(&full, &chosen, Some(&b)).unwrap();
        let loose = orbit_closure(&full, &chosen, Some(&b1)).unwrap();
        prop_assert!(tight.iter().all(|v| loose.binary_search(v).is_ok()));
    }

    #[test]
    fn torsion_order_times_lcm_is_product(ms in prop::collection::vec(2u32..8, 0..5)) {
        let (m, t) = torsion_of_complement(&ms);
        let product = ms.iter().fold(BigInt::one(), |acc, &x| acc * BigInt::from(x));
        prop_assert_eq!(t.order() * m, product);
    }

    #[test]
    fn full_lattice_canonical_class(d in 1i64..3, q in 0i64..2, ms in prop::collection::vec(2i64..6, 0..3)) {
        let spec = match SurfaceSpec::new(d, q, &ms) {
            Ok(s) => s,
            Err(_) => return Ok(()),
        };
        let inv = spec.invariants();
        let f = build_full_h2bar(&spec).unwrap();
        let l = &f.lattice;
        prop_assert!(l.is_unimodular().unwrap());
        let sig = l.signature().unwrap();
        prop_assert_eq!(sig.positive as i64, inv.b_plus);
        prop_assert_eq!(sig.negative as i64, inv.b_minus);
        prop_assert!(l.norm(&f.p).unwrap().is_zero());
        prop_assert!(gcd_of(&f.p).is_one());
        let kp: IntVector = f.p.iter().map(|x| x * BigInt::from(f.kappa)).collect();
        prop_assert_eq!(&f.k, &kp);
        if !l.is_even().unwrap() {
            // all coordinates of p are odd in the diagonal model
            prop_assert!(l.is_characteristic(&f.p).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn decide_is_conjugation_invariant(seed in any::<u64>(), a in 1usize..5, b in 1usize..4) {
        let mut rng = StdRng::seed_from_u64(seed);
        let spec = SurfaceSpec::new(2, 0, &[2]).unwrap();
        let f = build_full_h2bar(&spec).unwrap();
        let l = &f.lattice;
        let pool = admissible_pool(l);
        let orthogonal: Vec<IntVector> =
            pool.iter().filter(|v| l.pair_int(v, &f.k).unwrap().is_zero()).cloned().collect();
        let (g, _) = random_reflection_product(l, &pool, a, &mut rng);
        let (h, _) = random_reflection_product(l, &orthogonal, b, &mut rng);
        let conj = h.compose(&g).compose(&h.inverse());
        for w in [None, Some(1), Some(-1)] {
            let x = decide(&spec, &g, w).unwrap();
            let y = decide(&spec, &conj, w).unwrap();
            prop_assert_eq!(x.tag, y.tag);
            prop_assert_eq!(x.spinor_norm, y.spinor_norm);
            prop_assert_eq!(x.k_action, y.k_action);
        }
    }

    #[test]
    fn stabilizer_subgroup_is_closed(seed in any::<u64>(), a in 1usize..5, b in 1usize..5) {
        let mut rng = StdRng::seed_from_u64(seed);
        let spec = SurfaceSpec::new(2, 0, &[3]).unwrap();
        let f = build_full_h2bar(&spec).unwrap();
        let l = &f.lattice;
        let pool: Vec<IntVector> = admissible_pool(l)
            .into_iter()
            .filter(|v| l.pair_int(v, &f.k).unwrap().is_zero())
            .collect();
        let (g, _) = random_reflection_product(l, &pool, a, &mut rng);
        let (h, _) = random_reflection_product(l, &pool, b, &mut rng);
        let pg = stabilizer_predicates(l, &f.k, &g).unwrap();
        let ph = stabilizer_predicates(l, &f.k, &h).unwrap();
        let pgh = stabilizer_predicates(l, &f.k, &g.compose(&h)).unwrap();
        prop_assert!(pg.in_o_k && ph.in_o_k && pgh.in_o_k);
        if pg.in_oprime_k && ph.in_oprime_k {
            prop_assert!(pgh.in_oprime_k);
        }
        prop_assert_eq!(pgh.in_oprime, pg.in_oprime == ph.in_oprime);
    }
}
