// SPDX-License-Identifier: Apache-2.0

//! Steady-state response of a dense four-level atomic medium driven by a
//! coherent coupling field, an incoherent pump and a weak probe whose
//! electric and magnetic components address different transitions.
//!
//! Pipeline: [`SystemParams`] → [`Liouvillian`] → stationary
//! [`DensityMatrix`] ([`steady_state_direct`], checked against
//! [`steady_state_evolve`]) → polarizability and magnetizability →
//! Clausius–Mossotti ε_r, μ_r → refractive index and figure of merit.
//!
//! The numerics are generic over the real scalar ([`Real`], `f32` or
//! `f64`); the `*64` aliases below fix `f64`, which every tolerance in the
//! test suite assumes.

// Index loops read closer to the matrix algebra than iterator chains.
#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod config;
pub mod constants;
pub mod density;
pub mod error;
pub mod linalg;
pub mod liouvillian;
pub mod num;
pub mod params;
pub mod response;
pub mod steady;
pub mod svg;
pub mod sweep;
pub mod table;

pub use constants::Constants;
pub use density::{vec_index, DensityMatrix};
pub use error::{Error, Result};
pub use liouvillian::{build_liouvillian, Liouvillian};
pub use num::Real;
pub use params::{
    derived_rates, plane_wave_omega_b, DerivedRates, Eq4Variant, Eq5Variant, EquationVariants,
    SystemParams,
};
pub use response::{
    alpha_e, alpha_m, clausius_mossotti, evaluate_point, figure_of_merit, refractive_index, Branch,
    PointOptions, ResponsePoint,
};
pub use steady::{
    steady_state_direct, steady_state_evolve, EvolveOptions, SolveMethod, SolveReport,
};
pub use svg::{write_svg, Quantity};
pub use sweep::{run_sweep, run_sweep_with, Execution, PointFailure, SweepResult, SweepSpec};
pub use table::write_csv;

pub type Complex64 = num_complex::Complex<f64>;

pub type Constants64 = Constants<f64>;
pub type SystemParams64 = SystemParams<f64>;
pub type DerivedRates64 = DerivedRates<f64>;
pub type DensityMatrix64 = DensityMatrix<f64>;
pub type Liouvillian64 = Liouvillian<f64>;
pub type SolveReport64 = SolveReport<f64>;
pub type ResponsePoint64 = ResponsePoint<f64>;
pub type SweepSpec64 = SweepSpec<f64>;
pub type SweepResult64 = SweepResult<f64>;

pub type SystemParams32 = SystemParams<f32>;
pub type Liouvillian32 = Liouvillian<f32>;
pub type DensityMatrix32 = DensityMatrix<f32>;
