// SPDX-License-Identifier: Apache-2.0

//! Stationary density matrix, by constrained linear solve and by explicit
//! time propagation. The two routes are independent and each is used to
//! check the other.

use crate::density::{vec_index, DensityMatrix, POPULATION_SLOTS, VEC_DIM};
use crate::error::{Error, Result};
use crate::linalg::{condition_1, lu_factor};
use crate::liouvillian::{Liouvillian, Vec16};
use crate::num::{cre, Real, C};

/// Condition number above which the constrained system is treated as singular (f64).
pub const SINGULAR_CONDITION: f64 = 1e14;

/// Largest dt·‖L‖∞ accepted by the RK4 propagator. The closed left half-disc
/// of this radius lies inside the RK4 absolute-stability region.
pub const RK4_STABILITY_RADIUS: f64 = 2.5;

/// Steps between re-Hermitization and trace renormalization during propagation.
pub const RENORMALIZE_EVERY: u64 = 1000;

/// Steps between residual checks during propagation.
pub const CHECK_EVERY: u64 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    Direct,
    Evolved,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport<T> {
    pub rho_ss: DensityMatrix<T>,
    /// ‖L·vec ρ_ss‖∞ against the unmodified generator, units of `gamma_unit`.
    pub residual_inf: T,
    pub method: SolveMethod,
    /// Zero for the direct solve; RK4 steps taken for propagation.
    pub iterations_or_steps: u64,
}

fn singular_limit<T: Real>() -> f64 {
    let eps = T::epsilon().as_f64();
    if eps <= f64::EPSILON {
        SINGULAR_CONDITION
    } else {
        SINGULAR_CONDITION * f64::EPSILON / eps
    }
}

/// Solves L·vec ρ = 0 with Tr ρ = 1, replacing the ρ44 row by the trace row.
pub fn steady_state_direct<T: Real>(l: &Liouvillian<T>) -> Result<SolveReport<T>> {
    let mut a = *l.matrix();
    let constrained = vec_index(4, 4);
    a[constrained] = [C::default(); VEC_DIM];
    for &s in &POPULATION_SLOTS {
        a[constrained][s] = cre(T::one());
    }
    let mut b: Vec16<T> = [C::default(); VEC_DIM];
    b[constrained] = cre(T::one());

    let lu = lu_factor(&a);
    let condition = condition_1(&a, lu.as_ref()).as_f64();
    let lu = match lu {
        Some(lu) if condition <= singular_limit::<T>() => lu,
        _ => return Err(Error::SingularSystem { condition }),
    };
    let rho_ss = DensityMatrix::from_vec(&lu.solve(&b)).hermitize_normalized();
    Ok(SolveReport {
        residual_inf: l.residual(&rho_ss),
        rho_ss,
        method: SolveMethod::Direct,
        iterations_or_steps: 0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvolveOptions<T> {
    /// Step in units of 1/`gamma_unit`.
    pub dt: T,
    /// Residual target in units of `gamma_unit`.
    pub tol: T,
    pub max_steps: u64,
}

impl<T: Real> Default for EvolveOptions<T> {
    fn default() -> Self {
        Self {
            dt: T::lit(0.01),
            tol: T::lit(1e-10),
            max_steps: 10_000_000,
        }
    }
}

impl<T: Real> EvolveOptions<T> {
    /// Largest stable step for `l`, capped at the default 0.01/γ.
    pub fn for_liouvillian(l: &Liouvillian<T>) -> Self {
        let d = Self::default();
        let limit = T::lit(RK4_STABILITY_RADIUS * 0.8) / l.norm_inf();
        Self {
            dt: if limit < d.dt { limit } else { d.dt },
            ..d
        }
    }
}

fn axpy<T: Real>(y: &Vec16<T>, a: T, x: &Vec16<T>) -> Vec16<T> {
    let mut out = *y;
    for (o, xi) in out.iter_mut().zip(x.iter()) {
        *o += xi.scale(a);
    }
    out
}

fn rk4_step<T: Real>(l: &Liouvillian<T>, y: &Vec16<T>, dt: T) -> Vec16<T> {
    let half = dt * T::lit(0.5);
    let k1 = l.apply(y);
    let k2 = l.apply(&axpy(y, half, &k1));
    let k3 = l.apply(&axpy(y, half, &k2));
    let k4 = l.apply(&axpy(y, dt, &k3));
    let sixth = dt / T::lit(6.0);
    let mut out = *y;
    for i in 0..VEC_DIM {
        let incr = k1[i] + (k2[i] + k3[i]).scale(T::lit(2.0)) + k4[i];
        out[i] += incr.scale(sixth);
    }
    out
}

/// Classical RK4 on d(vec ρ)/dt = L·vec ρ from `rho0` until ‖L·vec ρ‖∞ < tol.
pub fn steady_state_evolve<T: Real>(
    l: &Liouvillian<T>,
    rho0: &DensityMatrix<T>,
    opts: EvolveOptions<T>,
) -> Result<SolveReport<T>> {
    let EvolveOptions { dt, tol, max_steps } = opts;
    if dt.is_nan() || tol.is_nan() || dt <= T::zero() || tol <= T::zero() {
        return Err(Error::InvalidParams(format!(
            "evolve needs dt > 0 and tol > 0, got dt = {dt}, tol = {tol}"
        )));
    }
    let limit = T::lit(RK4_STABILITY_RADIUS) / l.norm_inf();
    if dt > limit {
        return Err(Error::StepTooLarge {
            dt: dt.as_f64(),
            limit: limit.as_f64(),
        });
    }

    let mut y = rho0.to_vec();
    let mut step = 0u64;
    let mut residual = T::infinity();
    loop {
        if step.is_multiple_of(CHECK_EVERY) || step == max_steps {
            let candidate = DensityMatrix::from_vec(&y).hermitize_normalized();
            residual = l.residual(&candidate);
            if residual < tol {
                return Ok(SolveReport {
                    rho_ss: candidate,
                    residual_inf: residual,
                    method: SolveMethod::Evolved,
                    iterations_or_steps: step,
                });
            }
        }
        if step >= max_steps {
            return Err(Error::NoConvergence {
                steps: step,
                residual: residual.as_f64(),
            });
        }
        y = rk4_step(l, &y, dt);
        step += 1;
        if step.is_multiple_of(RENORMALIZE_EVERY) {
            y = DensityMatrix::from_vec(&y).hermitize_normalized().to_vec();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{EquationVariants, SystemParams};
    use num_complex::Complex;

    fn dark_params() -> SystemParams<f64> {
        SystemParams {
            omega_p: 0.0,
            omega_c: 0.0,
            omega_b: 0.0,
            pump: 0.0,
            ..SystemParams::canonical()
        }
    }

    #[test]
    fn dark_equilibrium_is_ground_state() {
        let l = Liouvillian::new(&dark_params(), EquationVariants::default());
        let rep = steady_state_direct(&l).unwrap();
        assert_eq!(rep.method, SolveMethod::Direct);
        let ground = DensityMatrix::<f64>::ground();
        assert!(rep.rho_ss.max_abs_diff(&ground) < 1e-14);
    }

    #[test]
    fn all_zero_generator_is_singular() {
        let l = Liouvillian::from_matrix([[C::<f64>::default(); VEC_DIM]; VEC_DIM]);
        assert!(matches!(
            steady_state_direct(&l),
            Err(Error::SingularSystem { .. })
        ));
    }

    #[test]
    fn fixed_point_converges_immediately() {
        let l = Liouvillian::new(
            &SystemParams::<f64>::canonical(),
            EquationVariants::default(),
        );
        let direct = steady_state_direct(&l).unwrap();
        let rep = steady_state_evolve(&l, &direct.rho_ss, EvolveOptions::default()).unwrap();
        assert_eq!(rep.iterations_or_steps, 0);
        assert_eq!(rep.method, SolveMethod::Evolved);
    }

    #[test]
    fn no_dissipation_never_converges() {
        let p = SystemParams {
            decay_21: 0.0,
            decay_31: 0.0,
            decay_32: 0.0,
            decay_41: 0.0,
            decay_42: 0.0,
            decay_43: 0.0,
            pump: 0.0,
            omega_p: 0.0,
            omega_c: 0.0,
            omega_b: 0.0,
            delta_p: 2.0,
            ..SystemParams::canonical()
        };
        let l = Liouvillian::new(&p, EquationVariants::default());
        let mut rows = *DensityMatrix::<f64>::maximally_mixed().rows();
        rows[0][1] = Complex::new(0.1, 0.0);
        rows[1][0] = Complex::new(0.1, 0.0);
        let rho0 = DensityMatrix::from_rows(rows);
        let opts = EvolveOptions {
            dt: 0.01,
            tol: 1e-3,
            max_steps: 5_000,
        };
        match steady_state_evolve(&l, &rho0, opts) {
            Err(Error::NoConvergence { steps, residual }) => {
                assert_eq!(steps, 5_000);
                // |Δ_p·ρ21| is conserved under free rotation
                assert!((residual - 0.2).abs() < 1e-9);
            }
            other => panic!("expected NoConvergence, got {other:?}"),
        }
    }

    #[test]
    fn oversized_step_is_rejected() {
        let l = Liouvillian::new(
            &SystemParams::<f64>::canonical(),
            EquationVariants::default(),
        );
        let opts = EvolveOptions {
            dt: 1.0,
            ..EvolveOptions::default()
        };
        assert!(matches!(
            steady_state_evolve(&l, &DensityMatrix::ground(), opts),
            Err(Error::StepTooLarge { .. })
        ));
        let bad_tol = EvolveOptions {
            tol: 0.0,
            ..EvolveOptions::default()
        };
        assert!(matches!(
            steady_state_evolve(&l, &DensityMatrix::ground(), bad_tol),
            Err(Error::InvalidParams(_))
        ));
    }
}
