// SPDX-License-Identifier: Apache-2.0

//! Macroscopic electromagnetic response from the stationary state.

use crate::constants::Constants;
use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::liouvillian::Liouvillian;
use crate::num::{Real, C};
use crate::params::{EquationVariants, SystemParams};
use crate::steady::{steady_state_direct, steady_state_evolve, EvolveOptions, SolveReport};

/// Closest approach of the Clausius–Mossotti denominator to zero that is still evaluated.
pub const POLE_GUARD: f64 = 1e-12;

/// Elementwise agreement required between the direct and propagated solutions.
pub const CROSS_CHECK_TOL: f64 = 1e-6;

/// Square-root branch for n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Branch {
    /// n = −√(ε_r μ_r), always the negative principal root.
    #[default]
    Paper,
    /// n = √ε_r · √μ_r.
    Physical,
}

impl std::str::FromStr for Branch {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "paper" => Ok(Branch::Paper),
            "physical" => Ok(Branch::Physical),
            other => Err(format!(
                "unknown branch `{other}` (expected paper|physical)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResponsePoint<T> {
    pub delta_p: T,
    pub omega_c: T,
    /// Electric polarizability, m³.
    pub alpha_e: C<T>,
    /// Magnetizability, m³.
    pub alpha_m: C<T>,
    pub eps_r: C<T>,
    pub mu_r: C<T>,
    pub n: C<T>,
    /// |Re n|/|Im n|, `+inf` when Im n = 0.
    pub fom: T,
    pub solve: SolveReport<T>,
}

/// α_e = |d21|²·ρ12 / (ε₀·ħ·Ω_p), Ω_p in s⁻¹.
pub fn alpha_e<T: Real>(
    rho: &DensityMatrix<T>,
    p: &SystemParams<T>,
    k: &Constants<T>,
) -> Result<C<T>> {
    if p.omega_p == T::zero() {
        return Err(Error::ZeroProbe);
    }
    let omega = p.omega_p * p.gamma_unit;
    // (d/ε₀)(d/ħ)/Ω keeps every intermediate inside f32 range.
    let scale = (p.d21 / k.eps0) * (p.d21 / k.hbar) / omega;
    Ok(rho.get(1, 2).scale(scale))
}

/// α_m = μ₀·|μ43|²·ρ34 / (ħ·Ω_B), Ω_B in s⁻¹.
pub fn alpha_m<T: Real>(
    rho: &DensityMatrix<T>,
    p: &SystemParams<T>,
    k: &Constants<T>,
) -> Result<C<T>> {
    if p.omega_b == T::zero() {
        return Err(Error::ZeroProbeB);
    }
    let omega = p.omega_b * p.gamma_unit;
    let scale = (k.mu0 * p.mu43) * (p.mu43 / k.hbar) / omega;
    Ok(rho.get(3, 4).scale(scale))
}

/// Local-field corrected response (1 + 2Nα/3)/(1 − Nα/3).
pub fn clausius_mossotti<T: Real>(alpha: C<T>, density: T) -> Result<C<T>> {
    let x = alpha.scale(density);
    let third = T::one() / T::lit(3.0);
    let den = C::new(T::one(), T::zero()) - x.scale(third);
    if den.norm().as_f64() <= POLE_GUARD {
        return Err(Error::LocalFieldPole {
            denominator: den.norm().as_f64(),
        });
    }
    let num = C::new(T::one(), T::zero()) + x.scale(T::lit(2.0) * third);
    Ok(num / den)
}

/// Inverse of [`clausius_mossotti`]: N·α = 3(r − 1)/(r + 2).
pub fn invert_clausius_mossotti<T: Real>(response: C<T>) -> C<T> {
    let one = C::new(T::one(), T::zero());
    (response - one).scale(T::lit(3.0)) / (response + one.scale(T::lit(2.0)))
}

pub fn refractive_index<T: Real>(eps_r: C<T>, mu_r: C<T>, branch: Branch) -> C<T> {
    match branch {
        Branch::Paper => -(eps_r * mu_r).sqrt(),
        Branch::Physical => eps_r.sqrt() * mu_r.sqrt(),
    }
}

pub fn figure_of_merit<T: Real>(n: C<T>) -> Result<T> {
    match (n.re == T::zero(), n.im == T::zero()) {
        (true, true) => Err(Error::UndefinedFom),
        (false, true) => Ok(T::infinity()),
        (true, false) => Ok(T::zero()),
        (false, false) => Ok(n.re.abs() / n.im.abs()),
    }
}

/// How [`evaluate_point`] obtains the stationary state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointOptions {
    pub variants: EquationVariants,
    pub branch: Branch,
    /// Also propagate from the maximally mixed state and require agreement.
    pub cross_check: bool,
}

impl Default for PointOptions {
    fn default() -> Self {
        Self {
            variants: EquationVariants::default(),
            branch: Branch::Paper,
            cross_check: false,
        }
    }
}

pub fn evaluate_point<T: Real>(
    params: &SystemParams<T>,
    k: &Constants<T>,
    opts: PointOptions,
) -> Result<ResponsePoint<T>> {
    evaluate_inner(params, k, opts).map_err(|e| Error::AtPoint {
        delta_p: params.delta_p.as_f64(),
        omega_c: params.omega_c.as_f64(),
        source: Box::new(e),
    })
}

fn evaluate_inner<T: Real>(
    params: &SystemParams<T>,
    k: &Constants<T>,
    opts: PointOptions,
) -> Result<ResponsePoint<T>> {
    params.validate()?;
    let l = Liouvillian::new(params, opts.variants);
    let solve = steady_state_direct(&l)?;
    if opts.cross_check {
        let evolved = steady_state_evolve(
            &l,
            &DensityMatrix::maximally_mixed(),
            EvolveOptions::for_liouvillian(&l),
        )?;
        let difference = solve.rho_ss.max_abs_diff(&evolved.rho_ss).as_f64();
        if difference > CROSS_CHECK_TOL {
            return Err(Error::CrossCheckMismatch { difference });
        }
    }
    let rho = &solve.rho_ss;
    let alpha_e = alpha_e(rho, params, k)?;
    let alpha_m = alpha_m(rho, params, k)?;
    let eps_r = clausius_mossotti(alpha_e, params.density)?;
    let mu_r = clausius_mossotti(alpha_m, params.density)?;
    let n = refractive_index(eps_r, mu_r, opts.branch);
    let fom = figure_of_merit(n)?;
    Ok(ResponsePoint {
        delta_p: params.delta_p,
        omega_c: params.omega_c,
        alpha_e,
        alpha_m,
        eps_r,
        mu_r,
        n,
        fom,
        solve,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex;

    fn c(re: f64, im: f64) -> C<f64> {
        Complex::new(re, im)
    }

    fn rho_with(i: usize, j: usize, z: C<f64>) -> DensityMatrix<f64> {
        let mut rows = *DensityMatrix::<f64>::ground().rows();
        rows[i - 1][j - 1] = z;
        rows[j - 1][i - 1] = z.conj();
        DensityMatrix::from_rows(rows)
    }

    #[test]
    fn clausius_mossotti_analytic_points() {
        assert_eq!(clausius_mossotti(c(0.0, 0.0), 1.0).unwrap(), c(1.0, 0.0));
        assert_eq!(clausius_mossotti(c(-1.5, 0.0), 1.0).unwrap(), c(0.0, 0.0));
        assert!(matches!(
            clausius_mossotti(c(3.0, 0.0), 1.0),
            Err(Error::LocalFieldPole { .. })
        ));
        // same pole reached through N
        assert!(clausius_mossotti(c(1.5e-25, 0.0), 2e25).is_err());
    }

    #[test]
    fn clausius_mossotti_inverts() {
        let x = c(-0.7, 0.35);
        let r = clausius_mossotti(x, 1.0).unwrap();
        assert!((invert_clausius_mossotti(r) - x).norm() < 1e-15);
    }

    #[test]
    fn index_branches() {
        let m1 = c(-1.0, 0.0);
        assert_eq!(refractive_index(m1, m1, Branch::Paper), c(-1.0, -0.0));
        let p1 = c(1.0, 0.0);
        assert_eq!(refractive_index(p1, p1, Branch::Paper), c(-1.0, -0.0));
        assert_eq!(refractive_index(p1, p1, Branch::Physical), c(1.0, 0.0));
    }

    #[test]
    fn physical_branch_in_lossy_double_negative_regime() {
        // Oracle by hand: √(−2+0.1i) via half-angle formula.
        fn sqrt_oracle(re: f64, im: f64) -> (f64, f64) {
            let r = (re * re + im * im).sqrt();
            let a = ((r + re) / 2.0).sqrt();
            let b = ((r - re) / 2.0).sqrt() * im.signum();
            (a, b)
        }
        let (a1, b1) = sqrt_oracle(-2.0, 0.1);
        let (a2, b2) = sqrt_oracle(-1.0, 0.05);
        let expect = c(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1);
        let n = refractive_index(c(-2.0, 0.1), c(-1.0, 0.05), Branch::Physical);
        assert!((n - expect).norm() < 1e-14);
        assert!(n.re < 0.0 && n.im > 0.0);
        // exactly −√2·(1 − 0.05i)
        assert!((n.re + 2f64.sqrt()).abs() < 1e-14);
        assert!((n.im - 0.05 * 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn fom_cases() {
        assert_eq!(figure_of_merit(c(-1.0, 0.0)).unwrap(), f64::INFINITY);
        assert_eq!(figure_of_merit(c(-2.0, 1.0)).unwrap(), 2.0);
        assert_eq!(figure_of_merit(c(0.0, 3.0)).unwrap(), 0.0);
        assert!(matches!(
            figure_of_merit(c(0.0, 0.0)),
            Err(Error::UndefinedFom)
        ));
    }

    #[test]
    fn alpha_e_arithmetic() {
        let k = Constants::si();
        let p = SystemParams::<f64>::canonical();
        assert_eq!(
            alpha_e(&DensityMatrix::ground(), &p, &k).unwrap(),
            c(0.0, 0.0)
        );
        // ρ21 = −i·1e-4 so ρ12 = i·1e-4
        let rho = rho_with(2, 1, c(0.0, -1e-4));
        let got = alpha_e(&rho, &p, &k).unwrap();
        let oracle = 6.25e-58 * 1e-4 / (8.854_187_812_8e-12 * 1.054_571_817e-34 * 5e5);
        assert!(got.re.abs() < 1e-40);
        assert!((got.im - oracle).abs() < 1e-14 * oracle);
        assert!((got.im - 1.338_705_730e-22).abs() < 1e-30);

        let doubled = SystemParams { omega_p: 1.0, ..p };
        let half = alpha_e(&rho, &doubled, &k).unwrap();
        assert!((half.im * 2.0 - got.im).abs() < 1e-14 * got.im);

        let zero = SystemParams { omega_p: 0.0, ..p };
        assert!(matches!(alpha_e(&rho, &zero, &k), Err(Error::ZeroProbe)));
    }

    #[test]
    fn alpha_m_arithmetic_and_phase() {
        let k = Constants::si();
        let p = SystemParams::<f64>::canonical();
        assert_eq!(
            alpha_m(&DensityMatrix::ground(), &p, &k).unwrap(),
            c(0.0, 0.0)
        );
        let rho = rho_with(3, 4, c(0.01, 0.0));
        let got = alpha_m(&rho, &p, &k).unwrap();
        let omega_b = 0.5 * 7.0e-23 / (299_792_458.0 * 2.5e-29) * 1e6;
        let oracle = 1.256_637_062_12e-6 * 4.9e-45 * 0.01 / (1.054_571_817e-34 * omega_b);
        assert!((got.re - oracle).abs() < 1e-14 * oracle);
        assert_eq!(got.im, 0.0);

        let z = c(-0.003, 0.004);
        let got = alpha_m(&rho_with(3, 4, z), &p, &k).unwrap();
        assert!((got.arg() - z.arg()).abs() < 1e-14);

        let zero = SystemParams { omega_b: 0.0, ..p };
        assert!(matches!(alpha_m(&rho, &zero, &k), Err(Error::ZeroProbeB)));
    }

    #[test]
    fn point_errors_carry_grid_location() {
        let p = SystemParams {
            omega_p: 0.0,
            ..SystemParams::<f64>::canonical().with_delta_p(2.5)
        };
        let err = evaluate_point(&p, &Constants::si(), PointOptions::default()).unwrap_err();
        match &err {
            Error::AtPoint {
                delta_p, omega_c, ..
            } => {
                assert_eq!((*delta_p, *omega_c), (2.5, 15.0));
            }
            e => panic!("unexpected {e:?}"),
        }
        assert_eq!(err.kind(), "zero_probe");
    }
}
