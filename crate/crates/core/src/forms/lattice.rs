// Copyright (c) 2026, genuslab contributors
// SPDX-License-Identifier: Apache-2.0

//! Integral symmetric lattices modelling middle-dimensional intersection
//! forms, and their reduction to Z/2 and Z/4 data.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::linalg::bit;
use super::z2::{characteristic_elements, Z2BilinearSpace};
use super::z4::Z4QuadraticForm;
use super::{characteristic_reduction, FormError, FormModel, MAX_DIM};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralLattice {
    gram: Vec<Vec<i64>>,
    det: BigInt,
}

impl IntegralLattice {
    pub fn new(gram: Vec<Vec<i64>>) -> Result<Self, FormError> {
        let dim = gram.len();
        if dim == 0 {
            return Err(FormError::EmptyLattice);
        }
        if dim > MAX_DIM {
            return Err(FormError::TooLarge { dim, max: MAX_DIM });
        }
        for row in &gram {
            if row.len() != dim {
                return Err(FormError::Shape { dim, rows: row.len() });
            }
        }
        for i in 0..dim {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(FormError::NotSymmetric { i, j });
                }
            }
        }
        let det = bareiss_det(&gram);
        Ok(IntegralLattice { gram, det })
    }

    pub fn diagonal(entries: &[i64]) -> Result<Self, FormError> {
        let n = entries.len();
        Self::new(
            (0..n)
                .map(|i| (0..n).map(|j| if i == j { entries[i] } else { 0 }).collect())
                .collect(),
        )
    }

    /// `[[0, 1], [1, 0]]`.
    pub fn hyperbolic() -> Self {
        Self::new(vec![vec![0, 1], vec![1, 0]]).expect("valid")
    }

    /// Cartan matrix of E₈ (positive definite, even, unimodular).
    pub fn e8() -> Self {
        let edges = [(0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)];
        let mut g = vec![vec![0i64; 8]; 8];
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b) in edges {
            g[a][b] = -1;
            g[b][a] = -1;
        }
        Self::new(g).expect("valid")
    }

    /// `3H ⊕ 2(-E₈)`, the K3 intersection form.
    pub fn k3() -> Self {
        let h = Self::hyperbolic();
        let minus_e8 = Self::e8().negate();
        h.orthogonal_sum(&h)
            .and_then(|l| l.orthogonal_sum(&h))
            .and_then(|l| l.orthogonal_sum(&minus_e8))
            .and_then(|l| l.orthogonal_sum(&minus_e8))
            .expect("22 dimensions")
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn determinant(&self) -> &BigInt {
        &self.det
    }

    pub fn is_unimodular(&self) -> bool {
        self.det.abs().is_one()
    }

    pub fn negate(&self) -> Self {
        IntegralLattice {
            gram: self
                .gram
                .iter()
                .map(|r| r.iter().map(|x| -x).collect())
                .collect(),
            det: if self.dim() % 2 == 0 {
                self.det.clone()
            } else {
                -self.det.clone()
            },
        }
    }

    pub fn orthogonal_sum(&self, other: &Self) -> Result<Self, FormError> {
        let (a, b) = (self.dim(), other.dim());
        let mut g = vec![vec![0i64; a + b]; a + b];
        for i in 0..a {
            g[i][..a].copy_from_slice(&self.gram[i]);
        }
        for i in 0..b {
            g[a + i][a..].copy_from_slice(&other.gram[i]);
        }
        Self::new(g)
    }

    /// `x·y` for integer vectors.
    pub fn pair(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut acc = 0i64;
        for (i, row) in self.gram.iter().enumerate() {
            if x[i] == 0 {
                continue;
            }
            let gy: i64 = row.iter().zip(y).map(|(g, v)| g * v).sum();
            acc += x[i] * gy;
        }
        acc
    }

    /// `Pᵀ G P` for an integer change of basis `P` (columns = new basis).
    pub fn transform(&self, p: &[Vec<i64>]) -> Result<Self, FormError> {
        let n = self.dim();
        let col = |j: usize| -> Vec<i64> { (0..n).map(|i| p[i][j]).collect() };
        let cols: Vec<Vec<i64>> = (0..n).map(col).collect();
        let g = (0..n)
            .map(|i| (0..n).map(|j| self.pair(&cols[i], &cols[j])).collect())
            .collect();
        Self::new(g)
    }
}

/// Fraction-free Gaussian elimination with row swaps.
fn bareiss_det(gram: &[Vec<i64>]) -> BigInt {
    let n = gram.len();
    let mut m: Vec<Vec<BigInt>> = gram
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Signature by symmetric elimination over the rationals: a nonzero
/// diagonal pivot contributes its sign; when the remaining diagonal is zero,
/// a 2×2 block `[[0, b], [b, 0]]` contributes one positive and one negative
/// direction.
pub fn lattice_signature(l: &IntegralLattice) -> Result<i64, FormError> {
    let mut a: Vec<Vec<BigRational>> = l
        .gram
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut sig = 0i64;
    while !a.is_empty() {
        let n = a.len();
        if let Some(i) = (0..n).find(|&i| !a[i][i].is_zero()) {
            let p = a[i][i].clone();
            sig += if p.is_positive() { 1 } else { -1 };
            let rest: Vec<usize> = (0..n).filter(|&r| r != i).collect();
            a = rest
                .iter()
                .map(|&r| {
                    rest.iter()
                        .map(|&s| &a[r][s] - &a[r][i] * &a[i][s] / &p)
                        .collect()
                })
                .collect();
            continue;
        }
        let (i, j) = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| i != j && !a[i][j].is_zero())
            .ok_or(FormError::Singular)?;
        let b = a[i][j].clone();
        let rest: Vec<usize> = (0..n).filter(|&r| r != i && r != j).collect();
        a = rest
            .iter()
            .map(|&r| {
                rest.iter()
                    .map(|&s| &a[r][s] - (&a[r][i] * &a[j][s] + &a[r][j] * &a[i][s]) / &b)
                    .collect()
            })
            .collect();
    }
    Ok(sig)
}

/// Reduction of a unimodular lattice: `λ = G mod 2`,
/// `q(x mod 2) = x·x mod 4` (well defined since `(x+2u)² ≡ x² mod 4`), and
/// the unique mod-2 characteristic element.
pub fn lattice_to_forms(l: &IntegralLattice) -> Result<FormModel, FormError> {
    if !l.is_unimodular() {
        return Err(FormError::NotUnimodular(l.det.to_string()));
    }
    let lambda = Z2BilinearSpace::from_matrix(l.gram())?;
    let q: Vec<i64> = (0..l.dim()).map(|i| l.gram[i][i]).collect();
    let p2 = Z4QuadraticForm::new(lambda.clone(), &q)?;
    let chars = characteristic_elements(&lambda);
    debug_assert_eq!(chars.len(), 1, "unimodular forms are nonsingular mod 2");
    FormModel::new(lambda, p2, chars[0])
}

/// `{0,1}` integer lift of a mod-2 vector.
pub fn lift(v: u64, dim: usize) -> Vec<i64> {
    (0..dim).map(|i| bit(v, i) as i64).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoritaReport {
    pub signature: i64,
    /// `ṽ·ṽ` for the `{0,1}` lift of the characteristic element.
    pub characteristic_square: i64,
    /// `σ ≡ ṽ·ṽ mod 8`.
    pub van_der_blij: bool,
    /// Dimension of `v^⊥ / ⟨v⟩`.
    pub quotient_dim: usize,
    pub arf: u8,
    /// `σ ≡ 4·Arf mod 8`.
    pub consistent: bool,
}

/// For `σ ≡ 0 mod 4`: reduce by the sublagrangian `⟨v⟩` spanned by the
/// characteristic element and read `σ mod 8` off the Arf invariant of
/// `h([x]) = (x·x)/2 mod 2` on `v^⊥/⟨v⟩`.
pub fn morita_arf_check(l: &IntegralLattice) -> Result<MoritaReport, FormError> {
    let signature = lattice_signature(l)?;
    if signature.rem_euclid(4) != 0 {
        return Err(FormError::SignatureNotDivisibleBy4(signature));
    }
    let model = lattice_to_forms(l)?;
    let vt = lift(model.characteristic(), l.dim());
    let characteristic_square = l.pair(&vt, &vt);
    let red = characteristic_reduction(&model)?;
    let arf = super::z2::arf(&red.enhancement)?;
    Ok(MoritaReport {
        signature,
        characteristic_square,
        van_der_blij: (signature - characteristic_square).rem_euclid(8) == 0,
        quotient_dim: red.enhancement.space().dim(),
        arf,
        consistent: (signature - 4 * arf as i64).rem_euclid(8) == 0,
    })
}
