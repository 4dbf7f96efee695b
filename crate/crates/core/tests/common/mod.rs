// SPDX-License-Identifier: Apache-2.0
#![allow(dead_code)]

use nri_core::{DensityMatrix64, SystemParams64};
use num_complex::Complex;
use rand::Rng;

pub fn canonical_config_path() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs/canonical.conf")
}

/// Hermitian, positive, unit-trace: A·A† / Tr(A·A†) with Gaussian-ish entries.
pub fn random_state<R: Rng>(rng: &mut R) -> DensityMatrix64 {
    let mut a = [[Complex::new(0.0, 0.0); 4]; 4];
    for row in a.iter_mut() {
        for z in row.iter_mut() {
            *z = Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
    }
    let mut rho = [[Complex::new(0.0, 0.0); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            rho[i][j] = (0..4).map(|k| a[i][k] * a[j][k].conj()).sum();
        }
    }
    let tr: f64 = (0..4).map(|i| rho[i][i].re).sum();
    for row in rho.iter_mut() {
        for z in row.iter_mut() {
            *z /= tr;
        }
    }
    DensityMatrix64::from_rows(rho)
}

/// Rates in [0, 2], Rabi frequencies in [0, 25], detunings in [−30, 30].
pub fn random_params<R: Rng>(rng: &mut R) -> SystemParams64 {
    SystemParams64 {
        decay_21: rng.gen_range(0.0..2.0),
        decay_31: rng.gen_range(0.0..2.0),
        decay_32: rng.gen_range(0.0..2.0),
        decay_41: rng.gen_range(0.0..2.0),
        decay_42: rng.gen_range(0.0..2.0),
        decay_43: rng.gen_range(0.0..2.0),
        pump: rng.gen_range(0.0..2.0),
        omega_p: rng.gen_range(0.0..25.0),
        omega_c: rng.gen_range(0.0..25.0),
        omega_b: rng.gen_range(0.0..25.0),
        delta_p: rng.gen_range(-30.0..30.0),
        delta_c: rng.gen_range(-30.0..30.0),
        delta_small: rng.gen_range(-30.0..30.0),
        ..SystemParams64::canonical()
    }
}
