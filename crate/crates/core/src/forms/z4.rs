// Copyright (c) 2026, genuslab contributors
// SPDX-License-Identifier: Apache-2.0

//! Z/4-valued quadratic refinements and the Brown–Kervaire invariant.

use super::linalg::{bit, dot, mask};
use super::z2::Z2BilinearSpace;
use super::{FormError, MAX_ENUM_DIM};

/// `q: V → Z/4` with `q(x + y) = q(x) + q(y) + 2λ(x, y)`, stored by its
/// values on the standard basis. Requires `q(e_i) ≡ λ(e_i, e_i) mod 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z4QuadraticForm {
    space: Z2BilinearSpace,
    basis_values: Vec<u8>,
}

impl Z4QuadraticForm {
    pub fn new(space: Z2BilinearSpace, values: &[i64]) -> Result<Self, FormError> {
        if values.len() != space.dim() {
            return Err(FormError::Shape {
                dim: space.dim(),
                rows: values.len(),
            });
        }
        let basis_values: Vec<u8> = values.iter().map(|v| v.rem_euclid(4) as u8).collect();
        for (i, &q) in basis_values.iter().enumerate() {
            if q % 2 != space.entry(i, i) {
                return Err(FormError::NotARefinement { index: i });
            }
        }
        Ok(Z4QuadraticForm {
            space,
            basis_values,
        })
    }

    /// `2h`, the Z/4 form induced by a Z/2 enhancement of an alternating form.
    pub fn doubled(h: &super::z2::Z2QuadraticForm) -> Self {
        let space = h.space().clone();
        let basis_values = (0..space.dim())
            .map(|i| if bit(h.basis_values(), i) { 2 } else { 0 })
            .collect();
        Z4QuadraticForm {
            space,
            basis_values,
        }
    }

    pub fn space(&self) -> &Z2BilinearSpace {
        &self.space
    }

    pub fn basis_values(&self) -> &[u8] {
        &self.basis_values
    }

    /// `q(Σ x_i e_i) = Σ x_i q(e_i) + 2 Σ_{i<j} x_i x_j λ(e_i, e_j)` in Z/4.
    pub fn eval(&self, x: u64) -> u8 {
        let dim = self.space.dim();
        let mut linear = 0u32;
        let mut cross = 0u8;
        for i in (0..dim).filter(|&i| bit(x, i)) {
            linear += self.basis_values[i] as u32;
            cross ^= dot(self.space.gram()[i], x & !mask(i + 1));
        }
        ((linear + 2 * cross as u32) % 4) as u8
    }

    pub fn orthogonal_sum(&self, other: &Self) -> Result<Self, FormError> {
        let space = self.space.orthogonal_sum(&other.space)?;
        let mut basis_values = self.basis_values.clone();
        basis_values.extend_from_slice(&other.basis_values);
        Ok(Z4QuadraticForm {
            space,
            basis_values,
        })
    }

    /// `-q`.
    pub fn negate(&self) -> Self {
        Z4QuadraticForm {
            space: self.space.clone(),
            basis_values: self.basis_values.iter().map(|&q| (4 - q) % 4).collect(),
        }
    }
}

/// Gaussian integer `re + i·im`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GaussianInt {
    pub re: i64,
    pub im: i64,
}

/// `Σ_x i^{q(x)}` over all of `V`, in Gray-code order.
pub fn gauss_sum_z4(f: &Z4QuadraticForm) -> GaussianInt {
    let dim = f.space.dim();
    let mut counts = [0i64; 4];
    let mut x = 0u64;
    let mut q = 0u8;
    counts[0] = 1;
    for step in 1u64..(1u64 << dim) {
        let i = step.trailing_zeros() as usize;
        // q(x + e_i) = q(x) + q(e_i) + 2λ(x, e_i)
        q = (q + f.basis_values[i] + 2 * dot(f.space.gram()[i], x)) % 4;
        x ^= 1 << i;
        counts[q as usize] += 1;
    }
    GaussianInt {
        re: counts[0] - counts[2],
        im: counts[1] - counts[3],
    }
}

/// Brown–Kervaire invariant in Z/8: the `k` with `G = |G| ζ₈^k` for the
/// Gauss sum `G`, matched exactly against the eight candidates.
pub fn brown_invariant(f: &Z4QuadraticForm) -> Result<u8, FormError> {
    let dim = f.space.dim();
    if dim > MAX_ENUM_DIM {
        return Err(FormError::TooLarge {
            dim,
            max: MAX_ENUM_DIM,
        });
    }
    let g = gauss_sum_z4(f);
    let norm = g.re * g.re + g.im * g.im;
    if norm != 1i64 << dim {
        return Err(FormError::GaussNorm {
            re: g.re,
            im: g.im,
            dim,
        });
    }
    // |G| = 2^{dim/2}; odd powers of ζ₈ scale (±1 ± i) by 2^{(dim-1)/2}
    let r = 1i64 << (dim / 2);
    let candidates: [(i64, i64); 8] = if dim % 2 == 0 {
        [(r, 0), (0, 0), (0, r), (0, 0), (-r, 0), (0, 0), (0, -r), (0, 0)]
    } else {
        [(0, 0), (r, r), (0, 0), (-r, r), (0, 0), (-r, -r), (0, 0), (r, -r)]
    };
    candidates
        .iter()
        .position(|&(re, im)| (re, im) == (g.re, g.im) && (re, im) != (0, 0))
        .map(|k| k as u8)
        .ok_or(FormError::GaussNorm {
            re: g.re,
            im: g.im,
            dim,
        })
}
