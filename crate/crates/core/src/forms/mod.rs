// Copyright (c) 2026, genuslab contributors
// SPDX-License-Identifier: Apache-2.0

//! Quadratic-form layer: Arf and Brown–Kervaire invariants, characteristic
//! elements, sublagrangian reduction, integral lattices, and the quadratic
//! form `(W, μ, h)` whose Arf invariant measures the mod 8 signature defect.

mod lattice;
pub mod linalg;
mod z2;
mod z4;

pub use lattice::{
    lattice_signature, lattice_to_forms, lift, morita_arf_check, IntegralLattice, MoritaReport,
};
pub use z2::{
    arf, arf_gauss_oracle, characteristic_elements, descend_enhancement, gauss_sum_z2,
    sublagrangian_reduction, symplectic_basis, Reduction, Z2BilinearSpace, Z2QuadraticForm,
};
pub use z4::{brown_invariant, gauss_sum_z4, GaussianInt, Z4QuadraticForm};

use linalg::{kernel, XorBasis};

/// Largest Z/2 dimension (vectors are packed into `u64` with one spare bit).
pub const MAX_DIM: usize = 63;
/// Largest dimension for which Gauss sums are enumerated.
pub const MAX_ENUM_DIM: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormError {
    #[error("dimension {dim} exceeds the supported maximum {max}")]
    TooLarge { dim: usize, max: usize },
    #[error("expected {dim} entries, got {rows}")]
    Shape { dim: usize, rows: usize },
    #[error("matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("vector has coordinates outside a {dim}-dimensional space")]
    VectorOutOfRange { dim: usize },
    #[error("form is singular")]
    Singular,
    #[error("form has nonzero diagonal; no symplectic basis exists")]
    NotAlternating,
    #[error("vectors do not form a basis")]
    NotABasis,
    #[error("Gauss sum vanishes; the form is not nonsingular")]
    ZeroGaussSum,
    #[error("Gauss sum {re} + {im}i does not have norm 2^{dim}")]
    GaussNorm { re: i64, im: i64, dim: usize },
    #[error("q(e_{index}) does not reduce to λ(e_{index}, e_{index}) mod 2")]
    NotARefinement { index: usize },
    #[error("subspace is not sublagrangian")]
    NotSublagrangian,
    #[error("enhancement is not constant on cosets of the sublagrangian")]
    NotCosetInvariant,
    #[error("the two descriptions of L^⊥ disagree; v is not characteristic")]
    PerpMismatch,
    #[error("P₂ difference is odd on L^⊥; cannot halve")]
    HalvingUndefined,
    #[error("lattice must have positive dimension")]
    EmptyLattice,
    #[error("lattice is not unimodular (det = {0})")]
    NotUnimodular(String),
    #[error("signature {0} is not divisible by 4")]
    SignatureNotDivisibleBy4(i64),
}

/// `(λ, 𝒫₂, v)`: a mod-2 form, a Z/4 refinement of it, and a candidate
/// characteristic element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormModel {
    lambda: Z2BilinearSpace,
    p2: Z4QuadraticForm,
    v: u64,
}

impl FormModel {
    /// `p2` must refine `lambda`. `v` is checked later, where it is used.
    pub fn new(lambda: Z2BilinearSpace, p2: Z4QuadraticForm, v: u64) -> Result<Self, FormError> {
        if p2.space() != &lambda {
            return Err(FormError::NotARefinement { index: 0 });
        }
        if v & !linalg::mask(lambda.dim()) != 0 {
            return Err(FormError::VectorOutOfRange { dim: lambda.dim() });
        }
        Ok(FormModel { lambda, p2, v })
    }

    pub fn lambda(&self) -> &Z2BilinearSpace {
        &self.lambda
    }

    pub fn p2(&self) -> &Z4QuadraticForm {
        &self.p2
    }

    pub fn characteristic(&self) -> u64 {
        self.v
    }

    /// `(λ ⊕ λ', 𝒫₂ ⊕ -𝒫₂', v ⊕ v')`; over Z/2 the sign on `λ'` is trivial.
    pub fn difference(&self, other: &Self) -> Result<Self, FormError> {
        let lambda = self.lambda.orthogonal_sum(&other.lambda)?;
        let p2 = self.p2.orthogonal_sum(&other.p2.negate())?;
        Self::new(lambda, p2, self.v | other.v << self.lambda.dim())
    }
}

/// Result of reducing a form model by `L = ⟨v⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharReduction {
    pub sublagrangian: Vec<u64>,
    /// `L^⊥` as `{x : λ(x, x) = 0}` (canonical basis).
    pub perp_by_squares: Vec<u64>,
    /// `L^⊥` as the orthogonal complement of `L` (canonical basis).
    pub perp_by_pairing: Vec<u64>,
    pub representatives: Vec<u64>,
    /// `(W, μ, h)` with `h = 𝒫₂ / 2` on `L^⊥ / L`.
    pub enhancement: Z2QuadraticForm,
}

/// Reduces `(λ, 𝒫₂)` by the characteristic element: `W = L^⊥/L`,
/// `μ` the descended form and `h([x]) = 𝒫₂(x)/2`.
pub fn characteristic_reduction(m: &FormModel) -> Result<CharReduction, FormError> {
    let lambda = &m.lambda;
    if !lambda.is_nonsingular() {
        return Err(FormError::Singular);
    }
    let dim = lambda.dim();
    let by_squares = XorBasis::from_vectors(&kernel(&[lambda.diagonal()], dim));
    let by_pairing = XorBasis::from_vectors(&lambda.perp(&[m.v]));
    if by_squares.vectors() != by_pairing.vectors() {
        return Err(FormError::PerpMismatch);
    }
    let sub: Vec<u64> = if m.v == 0 { vec![] } else { vec![m.v] };
    if !by_pairing.contains(m.v) {
        return Err(FormError::NotSublagrangian);
    }
    let representatives = z2::complement(&sub, by_pairing.vectors());
    let half = |x: u64| -> Result<u8, FormError> {
        let q = m.p2.eval(x);
        if q % 2 != 0 {
            return Err(FormError::HalvingUndefined);
        }
        Ok(q / 2)
    };
    let mut values = 0u64;
    for (i, &r) in representatives.iter().enumerate() {
        let h = half(r)?;
        if half(r ^ m.v)? != h {
            return Err(FormError::NotCosetInvariant);
        }
        values |= (h as u64) << i;
    }
    let mu = lambda.restrict(&representatives);
    Ok(CharReduction {
        sublagrangian: sub,
        perp_by_squares: by_squares.vectors().to_vec(),
        perp_by_pairing: by_pairing.vectors().to_vec(),
        representatives,
        enhancement: Z2QuadraticForm::new(mu, values),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineResult {
    pub perp_dim: usize,
    pub sublagrangian_dim: usize,
    pub w_dim: usize,
    /// `(W, μ, h)`.
    pub form: Z2QuadraticForm,
    pub arf: u8,
}

/// `(W, μ, h) = (L^⊥/L, [λ ⊕ -λ'], [𝒫₂ ⊕ -𝒫₂']/2)` with `L = ⟨(v, v')⟩`,
/// for the total space model `e` and the product model `fb`.
pub fn theorem43_pipeline(e: &FormModel, fb: &FormModel) -> Result<PipelineResult, FormError> {
    if !e.lambda.is_nonsingular() || !fb.lambda.is_nonsingular() {
        return Err(FormError::Singular);
    }
    let combined = e.difference(fb)?;
    let red = characteristic_reduction(&combined)?;
    let arf = arf(&red.enhancement)?;
    Ok(PipelineResult {
        perp_dim: red.perp_by_pairing.len(),
        sublagrangian_dim: red.sublagrangian.len(),
        w_dim: red.enhancement.space().dim(),
        form: red.enhancement,
        arf,
    })
}
