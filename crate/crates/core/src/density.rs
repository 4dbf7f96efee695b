// SPDX-License-Identifier: Apache-2.0

//! The 4×4 density matrix and its vectorization.
//!
//! `vec ρ` is row-major: slot `4·(i−1) + (j−1)` holds ρ_ij for levels
//! i, j ∈ 1..=4, i.e. (ρ11, ρ12, ρ13, ρ14, ρ21, …, ρ44). Every builder and
//! solver goes through [`vec_index`].

use num_complex::Complex;

use crate::num::{cre, Real, C};

pub const LEVELS: usize = 4;
pub const VEC_DIM: usize = LEVELS * LEVELS;

/// Slot of ρ_ij in `vec ρ`, with 1-based level labels.
#[inline]
pub const fn vec_index(i: usize, j: usize) -> usize {
    (i - 1) * LEVELS + (j - 1)
}

/// Slots of the four populations ρ11..ρ44.
pub const POPULATION_SLOTS: [usize; LEVELS] = [
    vec_index(1, 1),
    vec_index(2, 2),
    vec_index(3, 3),
    vec_index(4, 4),
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix<T> {
    rho: [[C<T>; LEVELS]; LEVELS],
}

impl<T: Real> DensityMatrix<T> {
    pub fn from_rows(rho: [[C<T>; LEVELS]; LEVELS]) -> Self {
        Self { rho }
    }

    pub fn from_vec(v: &[C<T>; VEC_DIM]) -> Self {
        let mut rho = [[C::default(); LEVELS]; LEVELS];
        for i in 1..=LEVELS {
            for j in 1..=LEVELS {
                rho[i - 1][j - 1] = v[vec_index(i, j)];
            }
        }
        Self { rho }
    }

    pub fn to_vec(&self) -> [C<T>; VEC_DIM] {
        let mut v = [C::default(); VEC_DIM];
        for i in 1..=LEVELS {
            for j in 1..=LEVELS {
                v[vec_index(i, j)] = self.rho[i - 1][j - 1];
            }
        }
        v
    }

    /// All population in level `level`.
    pub fn pure_level(level: usize) -> Self {
        let mut rho = [[C::default(); LEVELS]; LEVELS];
        rho[level - 1][level - 1] = cre(T::one());
        Self { rho }
    }

    pub fn ground() -> Self {
        Self::pure_level(1)
    }

    pub fn maximally_mixed() -> Self {
        let mut rho = [[C::default(); LEVELS]; LEVELS];
        for (i, row) in rho.iter_mut().enumerate() {
            row[i] = cre(T::lit(0.25));
        }
        Self { rho }
    }

    /// Element ρ_ij with 1-based level labels.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> C<T> {
        self.rho[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[[C<T>; LEVELS]; LEVELS] {
        &self.rho
    }

    pub fn trace(&self) -> C<T> {
        (0..LEVELS).fold(C::default(), |acc, i| acc + self.rho[i][i])
    }

    pub fn populations(&self) -> [T; LEVELS] {
        [0, 1, 2, 3].map(|i| self.rho[i][i].re)
    }

    /// max |ρ_ij − conj(ρ_ji)|.
    pub fn hermiticity_defect(&self) -> T {
        let mut worst = T::zero();
        for i in 0..LEVELS {
            for j in 0..LEVELS {
                worst = worst.max((self.rho[i][j] - self.rho[j][i].conj()).norm());
            }
        }
        worst
    }

    /// ρ ← (ρ + ρ†)/2, then scaled to unit trace.
    pub fn hermitize_normalized(&self) -> Self {
        let half = T::lit(0.5);
        let mut rho = self.rho;
        for i in 0..LEVELS {
            for j in 0..LEVELS {
                rho[i][j] = (self.rho[i][j] + self.rho[j][i].conj()).scale(half);
            }
        }
        let tr = (0..LEVELS).fold(T::zero(), |acc, i| acc + rho[i][i].re);
        if tr != T::zero() {
            for row in rho.iter_mut() {
                for z in row.iter_mut() {
                    *z = z.unscale(tr);
                }
            }
        }
        for (i, row) in rho.iter_mut().enumerate() {
            row[i] = Complex::new(row[i].re, T::zero());
        }
        Self { rho }
    }

    /// Largest elementwise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        let mut worst = T::zero();
        for i in 0..LEVELS {
            for j in 0..LEVELS {
                worst = worst.max((self.rho[i][j] - other.rho[i][j]).norm());
            }
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_row_major() {
        assert_eq!(vec_index(1, 1), 0);
        assert_eq!(vec_index(1, 2), 1);
        assert_eq!(vec_index(2, 1), 4);
        assert_eq!(vec_index(4, 3), 14);
        assert_eq!(POPULATION_SLOTS, [0, 5, 10, 15]);
    }

    #[test]
    fn vec_round_trip() {
        let mut v = [C::<f64>::default(); VEC_DIM];
        for (k, z) in v.iter_mut().enumerate() {
            *z = Complex::new(k as f64, -(k as f64));
        }
        let rho = DensityMatrix::from_vec(&v);
        assert_eq!(rho.get(2, 3), Complex::new(6.0, -6.0));
        assert_eq!(rho.to_vec(), v);
    }

    #[test]
    fn hermitize_gives_unit_trace_hermitian() {
        let mut rows = [[C::<f64>::default(); LEVELS]; LEVELS];
        rows[0][0] = Complex::new(0.6, 1e-13);
        rows[1][1] = Complex::new(0.5, 0.0);
        rows[0][1] = Complex::new(0.1, 0.2);
        rows[1][0] = Complex::new(0.1 + 1e-13, -0.2);
        let rho = DensityMatrix::from_rows(rows).hermitize_normalized();
        assert!(rho.hermiticity_defect() < 1e-15);
        assert!((rho.trace() - Complex::new(1.0, 0.0)).norm() < 1e-15);
        assert_eq!(rho.get(1, 1).im, 0.0);
    }
}
