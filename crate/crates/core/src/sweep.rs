// SPDX-License-Identifier: Apache-2.0

//! Batch evaluation over a probe-detuning grid for several coupling strengths.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::num::Real;
use crate::params::{EquationVariants, SystemParams};
use crate::response::{evaluate_point, Branch, PointOptions, ResponsePoint};

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec<T> {
    pub delta_p_min: T,
    pub delta_p_max: T,
    pub delta_p_steps: usize,
    pub omega_c_list: Vec<T>,
    /// Everything not swept. Its `delta_p` and `omega_c` are overwritten per point.
    pub base: SystemParams<T>,
    pub branch: Branch,
    pub cross_check: bool,
    pub variants: EquationVariants,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PointFailure<T> {
    pub delta_p: T,
    pub omega_c: T,
    pub kind: &'static str,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult<T> {
    /// Ordered by (omega_c, delta_p).
    pub points: Vec<ResponsePoint<T>>,
    pub failures: Vec<PointFailure<T>>,
}

/// A sweep grid cell, success or failure, in output order.
#[derive(Debug, Clone, Copy)]
pub enum Row<'a, T> {
    Point(&'a ResponsePoint<T>),
    Failure(&'a PointFailure<T>),
}

impl<T: Real> Row<'_, T> {
    pub fn key(&self) -> (T, T) {
        match self {
            Row::Point(p) => (p.omega_c, p.delta_p),
            Row::Failure(f) => (f.omega_c, f.delta_p),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Serial,
    #[default]
    Parallel,
}

impl<T: Real> SweepSpec<T> {
    /// Published sweep: Δ_p ∈ [−26, 26] at 0.05 spacing, Ω_c ∈ {15, 18, 21, 24}.
    pub fn canonical() -> Self {
        use crate::params::{CANONICAL_DELTA_P_RANGE, CANONICAL_DELTA_P_STEPS, CANONICAL_OMEGA_C};
        Self {
            delta_p_min: T::lit(CANONICAL_DELTA_P_RANGE.0),
            delta_p_max: T::lit(CANONICAL_DELTA_P_RANGE.1),
            delta_p_steps: CANONICAL_DELTA_P_STEPS,
            omega_c_list: CANONICAL_OMEGA_C.iter().map(|&w| T::lit(w)).collect(),
            base: SystemParams::canonical(),
            branch: Branch::Paper,
            cross_check: false,
            variants: EquationVariants::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.delta_p_min.is_nan()
            || self.delta_p_max.is_nan()
            || self.delta_p_min >= self.delta_p_max
        {
            return Err(Error::InvalidParams(format!(
                "delta_p_min ({}) must be below delta_p_max ({})",
                self.delta_p_min, self.delta_p_max
            )));
        }
        if self.delta_p_steps < 2 {
            return Err(Error::InvalidParams(
                "delta_p_steps must be at least 2".into(),
            ));
        }
        if self.omega_c_list.is_empty() {
            return Err(Error::InvalidParams("omega_c_list is empty".into()));
        }
        for &w in &self.omega_c_list {
            self.base.with_omega_c(w).validate()?;
        }
        self.base.validate()
    }

    /// Uniform detuning grid including both endpoints.
    pub fn grid(&self) -> Vec<T> {
        let last = self.delta_p_steps - 1;
        let span = self.delta_p_max - self.delta_p_min;
        (0..self.delta_p_steps)
            .map(|i| {
                if i == last {
                    self.delta_p_max
                } else {
                    self.delta_p_min + span * T::lit(i as f64) / T::lit(last as f64)
                }
            })
            .collect()
    }

    pub fn point_options(&self) -> PointOptions {
        PointOptions {
            variants: self.variants,
            branch: self.branch,
            cross_check: self.cross_check,
        }
    }

    fn sorted_omega_c(&self) -> Vec<T> {
        let mut list = self.omega_c_list.clone();
        list.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
        list
    }
}

pub fn run_sweep<T: Real>(spec: &SweepSpec<T>) -> Result<SweepResult<T>> {
    let k = Constants::si();
    let opts = spec.point_options();
    run_sweep_with(spec, Execution::Parallel, |p| evaluate_point(p, &k, opts))
}

/// Runs `eval` on every grid cell. Point errors become failures; only an
/// invalid spec is an error.
pub fn run_sweep_with<T, F>(spec: &SweepSpec<T>, exec: Execution, eval: F) -> Result<SweepResult<T>>
where
    T: Real,
    F: Fn(&SystemParams<T>) -> Result<ResponsePoint<T>> + Sync,
{
    spec.validate()?;
    let grid = spec.grid();
    let cells: Vec<SystemParams<T>> = spec
        .sorted_omega_c()
        .into_iter()
        .flat_map(|w| {
            grid.iter()
                .map(move |&d| spec.base.with_omega_c(w).with_delta_p(d))
        })
        .collect();

    let outcomes: Vec<Result<ResponsePoint<T>>> = match exec {
        Execution::Serial => cells.iter().map(&eval).collect(),
        Execution::Parallel => cells.par_iter().map(&eval).collect(),
    };

    let mut result = SweepResult {
        points: Vec::with_capacity(cells.len()),
        failures: Vec::new(),
    };
    for (cell, outcome) in cells.iter().zip(outcomes) {
        match outcome {
            Ok(p) => result.points.push(p),
            Err(e) => result.failures.push(PointFailure {
                delta_p: cell.delta_p,
                omega_c: cell.omega_c,
                kind: e.kind(),
                message: e.to_string(),
            }),
        }
    }
    Ok(result)
}

impl<T: Real> SweepResult<T> {
    pub fn len(&self) -> usize {
        self.points.len() + self.failures.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Points and failures merged in (omega_c, delta_p) order.
    pub fn rows(&self) -> Vec<Row<'_, T>> {
        let mut rows: Vec<Row<'_, T>> = self
            .points
            .iter()
            .map(Row::Point)
            .chain(self.failures.iter().map(Row::Failure))
            .collect();
        rows.sort_by(|a, b| a.key().partial_cmp(&b.key()).unwrap_or(Ordering::Equal));
        rows
    }

    /// Distinct coupling strengths in ascending order.
    pub fn omega_c_values(&self) -> Vec<T> {
        let mut out: Vec<T> = Vec::new();
        for row in self.rows() {
            let w = row.key().0;
            if out.last() != Some(&w) {
                out.push(w);
            }
        }
        out
    }

    /// Points belonging to one coupling strength, ascending in Δ_p.
    pub fn curve(&self, omega_c: T) -> Vec<&ResponsePoint<T>> {
        self.points
            .iter()
            .filter(|p| p.omega_c == omega_c)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_spec(steps: usize, omegas: &[f64]) -> SweepSpec<f64> {
        SweepSpec {
            delta_p_min: -2.0,
            delta_p_max: 2.0,
            delta_p_steps: steps,
            omega_c_list: omegas.to_vec(),
            ..SweepSpec::canonical()
        }
    }

    #[test]
    fn minimal_grid_hits_endpoints() {
        let res = run_sweep(&small_spec(2, &[15.0])).unwrap();
        assert_eq!(res.points.len(), 2);
        assert!(res.failures.is_empty());
        assert_eq!(res.points[0].delta_p, -2.0);
        assert_eq!(res.points[1].delta_p, 2.0);
    }

    #[test]
    fn grid_spacing_and_order() {
        let spec = SweepSpec::<f64>::canonical();
        let g = spec.grid();
        assert_eq!(g.len(), 1041);
        assert_eq!((g[0], g[1040]), (-26.0, 26.0));
        assert!((g[1] - g[0] - 0.05).abs() < 1e-12);
        assert_eq!(g[520], 0.0);
    }

    #[test]
    fn output_is_sorted_regardless_of_list_order() {
        let res = run_sweep(&small_spec(3, &[21.0, 15.0])).unwrap();
        let keys: Vec<_> = res.rows().iter().map(|r| r.key()).collect();
        let mut sorted = keys.clone();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(keys, sorted);
        assert_eq!(res.omega_c_values(), vec![15.0, 21.0]);
    }

    #[test]
    fn invalid_specs_are_rejected() {
        assert!(run_sweep(&small_spec(1, &[15.0])).is_err());
        assert!(run_sweep(&small_spec(3, &[])).is_err());
        let mut s = small_spec(3, &[15.0]);
        s.delta_p_max = s.delta_p_min;
        assert!(run_sweep(&s).is_err());
        assert!(run_sweep(&small_spec(3, &[-1.0])).is_err());
    }

    #[test]
    fn failures_are_collected_not_fatal() {
        let spec = small_spec(5, &[15.0]);
        let k = Constants::si();
        let res = run_sweep_with(&spec, Execution::Serial, |p| {
            if p.delta_p == 0.0 {
                Err(Error::LocalFieldPole { denominator: 0.0 })
            } else {
                evaluate_point(p, &k, PointOptions::default())
            }
        })
        .unwrap();
        assert_eq!(res.points.len(), 4);
        assert_eq!(res.failures.len(), 1);
        assert_eq!(res.failures[0].kind, "local_field_pole");
        assert_eq!(res.len(), 5);
    }
}
