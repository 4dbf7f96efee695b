// SPDX-License-Identifier: Apache-2.0

//! Model parameters for the pumped four-level scheme.
//!
//! Levels: |1⟩ ground, |2⟩ metastable, |3⟩ and |4⟩ upper. The probe's
//! electric component drives 1↔2 (Ω_p), its magnetic component 3↔4 (Ω_B),
//! the coupling field 2↔4 (Ω_c), and an incoherent pump Γ moves population
//! 1↔3. All rates, Rabi frequencies and detunings are stored in units of
//! `gamma_unit`; the dipole moments and density are SI.

use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::num::Real;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams<T> {
    /// Rate scale γ in s⁻¹.
    pub gamma_unit: T,
    /// Spontaneous decay Γ_ij from |i⟩ to |j⟩.
    pub decay_21: T,
    pub decay_31: T,
    pub decay_32: T,
    pub decay_41: T,
    pub decay_42: T,
    pub decay_43: T,
    /// Incoherent pump rate Γ between |1⟩ and |3⟩.
    pub pump: T,
    pub omega_p: T,
    pub omega_c: T,
    pub omega_b: T,
    pub delta_p: T,
    pub delta_c: T,
    /// δ = Δ_p − Δ_B. Δ_B itself is never stored.
    pub delta_small: T,
    /// Electric dipole moment d₂₁, C·m.
    pub d21: T,
    /// Magnetic dipole moment μ₄₃, A·m².
    pub mu43: T,
    /// Atom number density N, m⁻³.
    pub density: T,
}

/// Coherence damping rates, in units of `gamma_unit`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedRates<T> {
    pub gamma21: T,
    pub gamma31: T,
    pub gamma32: T,
    pub gamma41: T,
    pub gamma42: T,
    pub gamma43: T,
}

/// Source term for |2⟩ fed by decay out of |3⟩ in the ρ22 equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Eq4Variant {
    /// `+Γ32·ρ33`: population transfer 3 → 2.
    #[default]
    Corrected,
    /// `+Γ32·ρ32` as printed. Couples a coherence into a population and
    /// breaks Hermiticity of the generator; kept for auditing.
    Literal,
}

/// Sign and index of the Ω_p term in the ρ31 equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Eq5Variant {
    /// `−iΩ_p·ρ32`, the term generated by the same coupling Hamiltonian as
    /// every other equation.
    #[default]
    Corrected,
    /// `+iΩ_p·ρ23` as printed. Produces growing modes for a large part of
    /// parameter space.
    Literal,
}

/// Which form of the two suspect equations the generator uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EquationVariants {
    pub eq4: Eq4Variant,
    pub eq5: Eq5Variant,
}

impl EquationVariants {
    pub fn literal() -> Self {
        Self {
            eq4: Eq4Variant::Literal,
            eq5: Eq5Variant::Literal,
        }
    }

    pub fn with_eq4(self, eq4: Eq4Variant) -> Self {
        Self { eq4, ..self }
    }

    pub fn with_eq5(self, eq5: Eq5Variant) -> Self {
        Self { eq5, ..self }
    }
}

impl From<Eq4Variant> for EquationVariants {
    fn from(eq4: Eq4Variant) -> Self {
        Self {
            eq4,
            ..Self::default()
        }
    }
}

/// Ω_B for a probe plane wave, |B| = |E|/c: Ω_B = Ω_p·μ43/(c·d21).
pub fn plane_wave_omega_b<T: Real>(omega_p: T, d21: T, mu43: T, k: &Constants<T>) -> T {
    omega_p * (mu43 / d21) / k.c
}

/// Canonical detuning grid and coupling strengths.
pub const CANONICAL_DELTA_P_RANGE: (f64, f64) = (-26.0, 26.0);
pub const CANONICAL_DELTA_P_STEPS: usize = 1041;
pub const CANONICAL_OMEGA_C: [f64; 4] = [15.0, 18.0, 21.0, 24.0];

impl<T: Real> SystemParams<T> {
    /// Published parameter set with Ω_c = 15γ, Δ_p = 0 and the plane-wave Ω_B.
    pub fn canonical() -> Self {
        let k = Constants::si();
        let d21 = T::lit(2.5e-29);
        let mu43 = T::lit(7.0e-23);
        let omega_p = T::lit(0.5);
        Self {
            gamma_unit: T::lit(1e6),
            decay_21: T::lit(0.5),
            decay_31: T::lit(0.01),
            decay_32: T::lit(1.0),
            decay_41: T::lit(0.01),
            decay_42: T::lit(0.01),
            decay_43: T::lit(0.01),
            pump: T::lit(1.0),
            omega_p,
            omega_c: T::lit(CANONICAL_OMEGA_C[0]),
            omega_b: plane_wave_omega_b(omega_p, d21, mu43, &k),
            delta_p: T::zero(),
            delta_c: T::lit(20.0),
            delta_small: T::lit(-20.0),
            d21,
            mu43,
            density: T::lit(6.5e25),
        }
    }

    pub fn with_delta_p(mut self, delta_p: T) -> Self {
        self.delta_p = delta_p;
        self
    }

    pub fn with_omega_c(mut self, omega_c: T) -> Self {
        self.omega_c = omega_c;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let non_negative = [
            ("Gamma21", self.decay_21),
            ("Gamma31", self.decay_31),
            ("Gamma32", self.decay_32),
            ("Gamma41", self.decay_41),
            ("Gamma42", self.decay_42),
            ("Gamma43", self.decay_43),
            ("Gamma_pump", self.pump),
            ("Omega_p", self.omega_p),
            ("Omega_c", self.omega_c),
            ("Omega_B", self.omega_b),
            ("d21", self.d21),
            ("mu43", self.mu43),
            ("N_density", self.density),
        ];
        for (name, v) in non_negative {
            if !(v >= T::zero() && v.is_finite()) {
                return Err(Error::InvalidParams(format!(
                    "{name} must be finite and non-negative, got {v}"
                )));
            }
        }
        for (name, v) in [
            ("Delta_p", self.delta_p),
            ("Delta_c", self.delta_c),
            ("delta_small", self.delta_small),
        ] {
            if !v.is_finite() {
                return Err(Error::InvalidParams(format!("{name} must be finite")));
            }
        }
        if !(self.gamma_unit > T::zero() && self.gamma_unit.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "gamma_unit must be positive, got {}",
                self.gamma_unit
            )));
        }
        Ok(())
    }

    pub fn derived_rates(&self) -> DerivedRates<T> {
        derived_rates(self)
    }
}

pub fn derived_rates<T: Real>(p: &SystemParams<T>) -> DerivedRates<T> {
    let half = T::lit(0.5);
    DerivedRates {
        gamma21: p.decay_21 * half,
        gamma31: (p.decay_31 + p.decay_32) * half,
        // Γ41 does not enter γ41.
        gamma41: (p.decay_43 + p.decay_42) * half,
        gamma42: (p.decay_43 + p.decay_31 + p.decay_21) * half,
        gamma43: (p.decay_43 + p.decay_42 + p.decay_31 + p.decay_32) * half,
        gamma32: (p.decay_32 + p.decay_31 + p.decay_21) * half,
    }
}
