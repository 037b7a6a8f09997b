mod common;

use common::*;
use cohten::coherence::partial_transpose_set;
use cohten::{
    build_aad, build_ad, from_density, hamiltonian_generator, partial_trace, product, propagate,
    purity, to_density, HamiltonianCoeffs, MultiIndex, Schedule, Segment,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn index(max_n: usize) -> impl Strategy<Value = MultiIndex> {
    (1..=max_n).prop_flat_map(|n| prop::collection::vec(0u8..4, n)).prop_map(|d| MultiIndex::new(d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generator_symmetry(m in index(4)) {
        let ad = build_ad::<f64>(&m).to_dense();
        let aad = build_aad::<f64>(&m).to_dense();
        prop_assert!((&ad + &ad.transpose()).max_abs() <= 1e-14);
        prop_assert!((&aad - &aad.transpose()).max_abs() <= 1e-14);
        // affine row and column of ad vanish
        prop_assert!(ad.row(0).iter().all(|&x| x == 0.0));
        prop_assert!((0..ad.rows()).all(|r| ad[(r, 0)] == 0.0));
    }

    #[test]
    fn density_round_trip(seed in any::<u64>(), n in 1usize..=3, pure in any::<bool>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let t = tensor_of(&random_density(&mut rng, n, pure), n);
        let back = from_density(&to_density(&t)).unwrap();
        prop_assert!(max_vec_diff(t.components(), back.components()) < 1e-12);
    }

    #[test]
    fn partial_transpose_is_an_involution(seed in any::<u64>(), q in 1usize..=3) {
        let mut rng = StdRng::seed_from_u64(seed);
        let t = tensor_of(&random_density(&mut rng, 3, false), 3);
        let twice = partial_transpose_set(&partial_transpose_set(&t, &[q]).unwrap(), &[q]).unwrap();
        prop_assert_eq!(twice.components(), t.components());
    }

    #[test]
    fn partial_trace_collapses_a_slot(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let t = tensor_of(&random_density(&mut rng, 3, false), 3);
        let r = partial_trace(&t, &[1]).unwrap();
        for m in MultiIndex::all(2) {
            let full = MultiIndex::zeros(1).concat(&m);
            prop_assert!((r.get(&m) - std::f64::consts::SQRT_2 * t.get(&full)).abs() < 1e-14);
        }
    }

    #[test]
    fn product_marginals(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let a = tensor_of(&random_density(&mut rng, 1, false), 1);
        let b = tensor_of(&random_density(&mut rng, 2, false), 2);
        let ab = product(&a, &b).unwrap();
        prop_assert!(max_vec_diff(partial_trace(&ab, &[2, 3]).unwrap().components(), a.components()) < 1e-14);
        prop_assert!(max_vec_diff(partial_trace(&ab, &[1]).unwrap().components(), b.components()) < 1e-14);
    }

    #[test]
    fn evolution_is_orthogonal(
        coeffs in prop::collection::vec(-1.5f64..1.5, 16),
        t in 0.0f64..5.0,
        seed in any::<u64>(),
    ) {
        let h = HamiltonianCoeffs::new(2, coeffs.iter().enumerate().map(|(i, &v)| (MultiIndex::from_linear(i, 2), v))).unwrap();
        let p = cohten::expm(&hamiltonian_generator(&h), t);
        prop_assert!(p.orthogonality_residual() < 1e-10);
        prop_assert_eq!(p.entries().row(0)[0], 1.0);

        let mut rng = StdRng::seed_from_u64(seed);
        let init = tensor_of(&random_density(&mut rng, 2, false), 2);
        let s = Schedule::new(2, vec![Segment { hamiltonian: h, duration: t.max(0.01) }], None).unwrap();
        let traj = propagate(&init, &s).unwrap();
        let p0 = purity(&init);
        for state in &traj.states {
            prop_assert!((purity(state) - p0).abs() < 1e-10);
            prop_assert_eq!(state.components()[0], init.components()[0]);
        }
    }

    #[test]
    fn generator_is_linear(a in -2.0f64..2.0, b in -2.0f64..2.0, x in index(2), y in index(2)) {
        prop_assume!(x.len() == y.len());
        let n = x.len();
        let h1 = HamiltonianCoeffs::new(n, [(x.clone(), 1.0)]).unwrap();
        let h2 = HamiltonianCoeffs::new(n, [(y.clone(), 1.0)]).unwrap();
        let lhs = hamiltonian_generator(&h1.combine(a, &h2, b).unwrap()).to_dense();
        let rhs = &build_ad::<f64>(&x).to_dense().scaled(a) + &build_ad::<f64>(&y).to_dense().scaled(b);
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-14);
    }
}
