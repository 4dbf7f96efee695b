// SPDX-License-Identifier: Apache-2.0

//! Superoperator form of the four-level equations of motion,
//! d(vec ρ)/dt = L·vec ρ, with `vec` as in [`crate::density`].
//!
//! The nine independent equations (ρ11, ρ21, ρ22, ρ31, ρ32, ρ33, ρ41, ρ42,
//! ρ43) are entered term by term; the six remaining coherences take the
//! complex-conjugate equation and ρ̇44 closes the trace.

use num_complex::Complex;

use crate::density::{vec_index, DensityMatrix, LEVELS, POPULATION_SLOTS, VEC_DIM};
use crate::num::{cim, cre, max_abs, Real, C};
use crate::params::{
    derived_rates, DerivedRates, Eq4Variant, Eq5Variant, EquationVariants, SystemParams,
};

pub type Matrix16<T> = [[C<T>; VEC_DIM]; VEC_DIM];
pub type Vec16<T> = [C<T>; VEC_DIM];

#[derive(Debug, Clone, PartialEq)]
pub struct Liouvillian<T> {
    m: Matrix16<T>,
}

/// One term `coef · ρ_kl` on the right-hand side of ρ̇_ij.
type Term<T> = (C<T>, (usize, usize));
/// Left-hand index `ij` with its right-hand terms.
type Equation<T> = ((usize, usize), Vec<Term<T>>);

fn equations<T: Real>(
    p: &SystemParams<T>,
    r: &DerivedRates<T>,
    variants: EquationVariants,
) -> Vec<Equation<T>> {
    let re = cre::<T>;
    let im = cim::<T>;
    let (g, op, oc, ob) = (p.pump, p.omega_p, p.omega_c, p.omega_b);
    let (dp, dc, ds) = (p.delta_p, p.delta_c, p.delta_small);
    let eq4_source = match variants.eq4 {
        Eq4Variant::Corrected => (3, 3),
        Eq4Variant::Literal => (3, 2),
    };
    let eq5_probe = match variants.eq5 {
        Eq5Variant::Corrected => (im(-op), (3, 2)),
        Eq5Variant::Literal => (im(op), (2, 3)),
    };
    vec![
        (
            (1, 1),
            vec![
                (re(-g), (1, 1)),
                (re(g), (3, 3)),
                (re(p.decay_21), (2, 2)),
                (re(p.decay_31), (3, 3)),
                (re(p.decay_41), (4, 4)),
                (im(op), (2, 1)),
                (im(-op), (1, 2)),
            ],
        ),
        (
            (2, 1),
            vec![
                (-Complex::new(r.gamma21, dp), (2, 1)),
                (im(-op), (2, 2)),
                (im(op), (1, 1)),
                (im(oc), (4, 1)),
            ],
        ),
        (
            (2, 2),
            vec![
                (re(-p.decay_21), (2, 2)),
                (re(p.decay_32), eq4_source),
                (re(p.decay_42), (4, 4)),
                (im(op), (1, 2)),
                (im(-op), (2, 1)),
                (im(oc), (4, 2)),
                (im(-oc), (2, 4)),
            ],
        ),
        (
            (3, 1),
            vec![
                (-Complex::new(r.gamma31, dc + ds), (3, 1)),
                eq5_probe,
                (im(ob), (4, 1)),
            ],
        ),
        (
            (3, 2),
            vec![
                (-Complex::new(r.gamma32, dc - dp + ds), (3, 2)),
                (im(-oc), (3, 4)),
                (im(-op), (3, 1)),
                (im(ob), (4, 2)),
            ],
        ),
        (
            (3, 3),
            vec![
                (re(-g), (3, 3)),
                (re(g), (1, 1)),
                (re(-p.decay_31), (3, 3)),
                (re(-p.decay_32), (3, 3)),
                (re(p.decay_43), (4, 4)),
                (im(ob), (4, 3)),
                (im(-ob), (3, 4)),
            ],
        ),
        (
            (4, 1),
            vec![
                (-Complex::new(r.gamma41, dp + dc), (4, 1)),
                (im(oc), (2, 1)),
                (im(-op), (4, 2)),
                (im(ob), (3, 1)),
            ],
        ),
        (
            (4, 2),
            vec![
                (-Complex::new(r.gamma42, dc), (4, 2)),
                (im(oc), (2, 2)),
                (im(-oc), (4, 4)),
                (im(-op), (4, 1)),
                (im(ob), (3, 2)),
            ],
        ),
        (
            (4, 3),
            vec![
                (-Complex::new(r.gamma43, dp - ds), (4, 3)),
                (im(oc), (2, 3)),
                (im(ob), (3, 3)),
                (im(-ob), (4, 4)),
            ],
        ),
    ]
}

pub fn build_liouvillian<T: Real>(
    params: &SystemParams<T>,
    rates: &DerivedRates<T>,
    variants: impl Into<EquationVariants>,
) -> Liouvillian<T> {
    let mut m = [[C::default(); VEC_DIM]; VEC_DIM];
    for ((i, j), terms) in equations(params, rates, variants.into()) {
        let row = vec_index(i, j);
        let mirror = vec_index(j, i);
        for (coef, (k, l)) in terms {
            m[row][vec_index(k, l)] += coef;
            if i != j {
                m[mirror][vec_index(l, k)] += coef.conj();
            }
        }
    }
    let closure = vec_index(4, 4);
    for col in 0..VEC_DIM {
        let sum = POPULATION_SLOTS[..LEVELS - 1]
            .iter()
            .fold(C::default(), |acc, &r| acc + m[r][col]);
        m[closure][col] = -sum;
    }
    Liouvillian { m }
}

impl<T: Real> Liouvillian<T> {
    /// Builds L from parameters, deriving the coherence damping rates.
    pub fn new(params: &SystemParams<T>, variants: impl Into<EquationVariants>) -> Self {
        build_liouvillian(params, &derived_rates(params), variants)
    }

    pub fn from_matrix(m: Matrix16<T>) -> Self {
        Self { m }
    }

    pub fn matrix(&self) -> &Matrix16<T> {
        &self.m
    }

    /// Coefficient of ρ_kl in ρ̇_ij.
    pub fn coefficient(&self, ij: (usize, usize), kl: (usize, usize)) -> C<T> {
        self.m[vec_index(ij.0, ij.1)][vec_index(kl.0, kl.1)]
    }

    pub fn apply(&self, v: &Vec16<T>) -> Vec16<T> {
        let mut out = [C::default(); VEC_DIM];
        for (o, row) in out.iter_mut().zip(self.m.iter()) {
            *o = row
                .iter()
                .zip(v.iter())
                .fold(C::default(), |acc, (a, x)| acc + *a * *x);
        }
        out
    }

    /// dρ/dt reshaped back into a matrix.
    pub fn derivative(&self, rho: &DensityMatrix<T>) -> DensityMatrix<T> {
        DensityMatrix::from_vec(&self.apply(&rho.to_vec()))
    }

    /// ‖L·vec ρ‖∞.
    pub fn residual(&self, rho: &DensityMatrix<T>) -> T {
        max_abs(&self.apply(&rho.to_vec()))
    }

    /// Induced ∞-norm (max absolute row sum).
    pub fn norm_inf(&self) -> T {
        self.m
            .iter()
            .map(|row| row.iter().fold(T::zero(), |acc, z| acc + z.norm()))
            .fold(T::zero(), T::max)
    }

    /// Σ over population rows, which must vanish for trace conservation.
    pub fn population_row_sum(&self) -> Vec16<T> {
        let mut out = [C::default(); VEC_DIM];
        for &r in &POPULATION_SLOTS {
            for (o, z) in out.iter_mut().zip(self.m[r].iter()) {
                *o += *z;
            }
        }
        out
    }
}
