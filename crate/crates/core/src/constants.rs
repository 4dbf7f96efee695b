// SPDX-License-Identifier: Apache-2.0

//! Physical constants (SI, CODATA 2018).

use crate::num::Real;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants<T> {
    /// Reduced Planck constant, J·s.
    pub hbar: T,
    /// Vacuum permittivity, C²·N⁻¹·m⁻².
    pub eps0: T,
    /// Vacuum permeability, T·m·A⁻¹.
    pub mu0: T,
    /// Speed of light, m·s⁻¹.
    pub c: T,
}

pub const HBAR: f64 = 1.054_571_817e-34;
pub const EPSILON_0: f64 = 8.854_187_812_8e-12;
pub const MU_0: f64 = 1.256_637_062_12e-6;
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

impl<T: Real> Constants<T> {
    pub fn si() -> Self {
        Self {
            hbar: T::lit(HBAR),
            eps0: T::lit(EPSILON_0),
            mu0: T::lit(MU_0),
            c: T::lit(SPEED_OF_LIGHT),
        }
    }

    /// Relative deviation of c²·ε₀·μ₀ from one.
    pub fn maxwell_defect(&self) -> T {
        // Grouped so that f32 does not underflow.
        let c2_eps0 = self.c * self.c * self.eps0;
        (c2_eps0 * self.mu0 - T::one()).abs()
    }

    pub fn is_consistent(&self) -> bool {
        let positive = [self.hbar, self.eps0, self.mu0, self.c]
            .iter()
            .all(|v| *v > T::zero() && v.is_finite());
        positive && self.maxwell_defect().as_f64() < 1e-12_f64.max(T::epsilon().as_f64() * 16.0)
    }
}

impl<T: Real> Default for Constants<T> {
    fn default() -> Self {
        Self::si()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn si_values_satisfy_maxwell_relation() {
        let k = Constants::<f64>::si();
        assert!(k.maxwell_defect() < 1e-12);
        assert!(k.is_consistent());
        assert!(Constants::<f32>::si().is_consistent());
    }

    #[test]
    fn negative_constant_is_rejected() {
        let mut k = Constants::<f64>::si();
        k.hbar = -k.hbar;
        assert!(!k.is_consistent());
    }
}
