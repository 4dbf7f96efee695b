// SPDX-License-Identifier: Apache-2.0

mod common;

use nri_core::{
    steady_state_direct, steady_state_evolve, DensityMatrix, DensityMatrix64, EquationVariants,
    EvolveOptions, Liouvillian, Liouvillian64, SolveMethod, SystemParams, SystemParams64,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn canonical_direct_matches_evolution() {
    let p = SystemParams64::canonical();
    let l = Liouvillian64::new(&p, EquationVariants::default());
    let direct = steady_state_direct(&l).unwrap();
    assert!(direct.residual_inf < 1e-10);
    let evolved =
        steady_state_evolve(&l, &DensityMatrix64::ground(), EvolveOptions::default()).unwrap();
    assert_eq!(evolved.method, SolveMethod::Evolved);
    assert!(evolved.residual_inf < 1e-10);
    assert!(evolved.iterations_or_steps > 0);
    let diff = direct.rho_ss.max_abs_diff(&evolved.rho_ss);
    assert!(diff < 1e-6, "direct vs evolved differ by {diff:e}");
}

#[test]
fn probe_free_system_has_no_probe_coherences() {
    let p = SystemParams64 {
        omega_p: 0.0,
        omega_b: 0.0,
        ..SystemParams64::canonical().with_delta_p(3.0)
    };
    let l = Liouvillian64::new(&p, EquationVariants::default());
    let direct = steady_state_direct(&l).unwrap();
    // brute-force oracle
    let evolved = steady_state_evolve(
        &l,
        &DensityMatrix64::maximally_mixed(),
        EvolveOptions::default(),
    )
    .unwrap();
    for rep in [&direct, &evolved] {
        assert!(rep.rho_ss.get(2, 1).norm() < 1e-9);
        assert!(rep.rho_ss.get(4, 3).norm() < 1e-9);
        assert!(rep.rho_ss.populations().iter().all(|&x| x > 0.0));
    }
    assert!(direct.rho_ss.get(2, 1).norm() < 1e-14);
    assert!(direct.rho_ss.get(4, 3).norm() < 1e-14);
    // the coupling field still drives ρ42
    assert!(direct.rho_ss.get(4, 2).norm() > 1e-3);
    assert!(direct.rho_ss.max_abs_diff(&evolved.rho_ss) < 1e-6);
}

#[test]
fn random_parameter_sets_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..10 {
        let p = common::random_params(&mut rng);
        let l = Liouvillian64::new(&p, EquationVariants::default());
        let direct = steady_state_direct(&l).unwrap();
        let evolved = steady_state_evolve(
            &l,
            &DensityMatrix64::maximally_mixed(),
            EvolveOptions::for_liouvillian(&l),
        )
        .unwrap();
        assert!(direct.residual_inf < 1e-10);
        assert!(direct.rho_ss.max_abs_diff(&evolved.rho_ss) < 1e-6);
        assert!(direct.rho_ss.hermiticity_defect() < 1e-12);
        assert!((direct.rho_ss.trace().re - 1.0).abs() < 1e-12);
        assert!(direct.rho_ss.populations().iter().all(|&x| x >= -1e-8));
    }
}

#[test]
fn literal_variant_still_solves() {
    let l = Liouvillian64::new(&SystemParams64::canonical(), EquationVariants::literal());
    let rep = steady_state_direct(&l).unwrap();
    assert!(rep.rho_ss.hermiticity_defect() < 1e-12);
    assert!((rep.rho_ss.trace().re - 1.0).abs() < 1e-12);
}

#[test]
fn single_precision_pipeline_tracks_double() {
    let l32 = Liouvillian::<f32>::new(
        &SystemParams::<f32>::canonical(),
        EquationVariants::default(),
    );
    let l64 = Liouvillian64::new(&SystemParams64::canonical(), EquationVariants::default());
    let r32 = steady_state_direct(&l32).unwrap().rho_ss;
    let r64 = steady_state_direct(&l64).unwrap().rho_ss;
    for i in 1..=4 {
        for j in 1..=4 {
            let (a, b) = (r32.get(i, j), r64.get(i, j));
            assert!((a.re as f64 - b.re).abs() < 1e-4 && (a.im as f64 - b.im).abs() < 1e-4);
        }
    }
    let _: DensityMatrix<f32> = r32;
}
