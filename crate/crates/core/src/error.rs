// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("constrained steady-state system is singular (condition estimate {condition:e})")]
    SingularSystem { condition: f64 },

    #[error("time evolution did not converge after {steps} steps (residual {residual:e})")]
    NoConvergence { steps: u64, residual: f64 },

    #[error("time step {dt} exceeds the RK4 stability bound {limit} for this Liouvillian")]
    StepTooLarge { dt: f64, limit: f64 },

    #[error("probe Rabi frequency is zero; polarizability undefined")]
    ZeroProbe,

    #[error("magnetic probe Rabi frequency is zero; magnetizability undefined")]
    ZeroProbeB,

    #[error("Clausius-Mossotti pole: |1 - N*alpha/3| = {denominator:e}")]
    LocalFieldPole { denominator: f64 },

    #[error("figure of merit undefined for n = 0")]
    UndefinedFom,

    #[error("steady-state solvers disagree by {difference:e}")]
    CrossCheckMismatch { difference: f64 },

    #[error("at delta_p = {delta_p}, omega_c = {omega_c}: {source}")]
    AtPoint {
        delta_p: f64,
        omega_c: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },

    #[error("no plottable values for {0}")]
    EmptySelection(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Innermost error, unwrapping any grid-point context.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtPoint { source, .. } => source.root(),
            e => e,
        }
    }

    /// Short stable label used in CSV `error` cells.
    pub fn kind(&self) -> &'static str {
        match self.root() {
            Error::InvalidParams(_) => "invalid_params",
            Error::SingularSystem { .. } => "singular_system",
            Error::NoConvergence { .. } => "no_convergence",
            Error::StepTooLarge { .. } => "step_too_large",
            Error::ZeroProbe => "zero_probe",
            Error::ZeroProbeB => "zero_probe_b",
            Error::LocalFieldPole { .. } => "local_field_pole",
            Error::UndefinedFom => "undefined_fom",
            Error::CrossCheckMismatch { .. } => "cross_check_mismatch",
            Error::Config { .. } => "config",
            Error::EmptySelection(_) => "empty_selection",
            Error::Io { .. } => "io",
            Error::AtPoint { .. } => unreachable!(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
