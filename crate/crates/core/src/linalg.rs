// SPDX-License-Identifier: Apache-2.0

//! Dense complex LU with partial pivoting for small fixed-size systems.

use crate::num::{Real, C};

#[derive(Debug, Clone)]
pub struct Lu<T, const N: usize> {
    lu: [[C<T>; N]; N],
    perm: [usize; N],
}

/// Factorizes `a`, returning `None` when a pivot is exactly zero.
pub fn lu_factor<T: Real, const N: usize>(a: &[[C<T>; N]; N]) -> Option<Lu<T, N>> {
    let mut lu = *a;
    let mut perm = [0usize; N];
    for (i, p) in perm.iter_mut().enumerate() {
        *p = i;
    }
    for k in 0..N {
        let (piv, mag) = (k..N)
            .map(|r| (r, lu[r][k].norm()))
            .fold(
                (k, T::zero()),
                |best, cur| if cur.1 > best.1 { cur } else { best },
            );
        if mag == T::zero() || !mag.is_finite() {
            return None;
        }
        if piv != k {
            lu.swap(piv, k);
            perm.swap(piv, k);
        }
        let pivot = lu[k][k];
        for r in k + 1..N {
            let f = lu[r][k] / pivot;
            lu[r][k] = f;
            for c in k + 1..N {
                let u = lu[k][c];
                lu[r][c] -= f * u;
            }
        }
    }
    Some(Lu { lu, perm })
}

impl<T: Real, const N: usize> Lu<T, N> {
    pub fn solve(&self, b: &[C<T>; N]) -> [C<T>; N] {
        let mut x = [C::default(); N];
        for i in 0..N {
            x[i] = b[self.perm[i]];
        }
        for i in 0..N {
            for j in 0..i {
                let l = self.lu[i][j];
                let xj = x[j];
                x[i] -= l * xj;
            }
        }
        for i in (0..N).rev() {
            for j in i + 1..N {
                let u = self.lu[i][j];
                let xj = x[j];
                x[i] -= u * xj;
            }
            x[i] /= self.lu[i][i];
        }
        x
    }

    pub fn inverse(&self) -> [[C<T>; N]; N] {
        let mut inv = [[C::default(); N]; N];
        for col in 0..N {
            let mut e = [C::default(); N];
            e[col] = C::new(T::one(), T::zero());
            let x = self.solve(&e);
            for row in 0..N {
                inv[row][col] = x[row];
            }
        }
        inv
    }
}

/// Induced 1-norm (max absolute column sum).
pub fn norm_1<T: Real, const N: usize>(a: &[[C<T>; N]; N]) -> T {
    (0..N)
        .map(|c| (0..N).fold(T::zero(), |acc, r| acc + a[r][c].norm()))
        .fold(T::zero(), T::max)
}

/// κ₁(A) = ‖A‖₁‖A⁻¹‖₁ from an explicit inverse; infinite when singular.
pub fn condition_1<T: Real, const N: usize>(a: &[[C<T>; N]; N], lu: Option<&Lu<T, N>>) -> T {
    match lu {
        Some(lu) => {
            let k = norm_1(a) * norm_1(&lu.inverse());
            if k.is_finite() {
                k
            } else {
                T::infinity()
            }
        }
        None => T::infinity(),
    }
}
