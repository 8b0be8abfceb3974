// Copyright (c) 2026, genuslab contributors
// SPDX-License-Identifier: Apache-2.0

//! Truncated power series in one Chern root `α` with coefficients in `Q[y]`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::QPolynomial;
use super::AlgebraError;

/// `Σ_{k ≤ order} a_k α^k`, coefficients `a_k ∈ Q[y]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaSeries {
    coeffs: Vec<QPolynomial>,
}

impl AlphaSeries {
    /// Pads or truncates `coeffs` to exactly `order + 1` entries.
    pub fn new(mut coeffs: Vec<QPolynomial>, order: usize) -> Self {
        coeffs.resize(order + 1, QPolynomial::zero());
        AlphaSeries { coeffs }
    }

    /// Series with constant (y-free) rational coefficients.
    pub fn from_rationals(coeffs: Vec<BigRational>, order: usize) -> Self {
        Self::new(coeffs.into_iter().map(QPolynomial::constant).collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[QPolynomial] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> QPolynomial {
        self.coeffs.get(k).cloned().unwrap_or_else(QPolynomial::zero)
    }

    /// Constant term equal to one.
    pub fn is_normalized(&self) -> bool {
        self.coeffs[0] == QPolynomial::one()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.clone(), order)
    }

    /// Substitute a rational value for `y` in every coefficient.
    pub fn at_y(&self, y: &BigRational) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|c| QPolynomial::constant(c.eval(y)))
                .collect(),
            self.order(),
        )
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = vec![QPolynomial::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(out, order)
    }

    /// Formal logarithm of a normalized series, from `g' = f'/f`:
    /// `k g_k = k f_k - Σ_{j<k} j g_j f_{k-j}`.
    pub fn log(&self) -> Result<Self, AlgebraError> {
        if !self.is_normalized() {
            return Err(AlgebraError::NotNormalized);
        }
        let order = self.order();
        let mut g = vec![QPolynomial::zero(); order + 1];
        for k in 1..=order {
            let mut acc = self.coeffs[k].scale(&rat(k as i64, 1));
            for j in 1..k {
                let term = g[j].scale(&rat(j as i64, 1));
                acc = &acc - &(&term * &self.coeffs[k - j]);
            }
            g[k] = acc.scale(&rat(1, k as i64));
        }
        Ok(Self::new(g, order))
    }
}

pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Expansion of `x / (1 - e^{-x})` up to `x^order`.
///
/// With `(1 - e^{-x}) / x = Σ_j u_j x^j`, `u_j = (-1)^j / (j+1)!`, the
/// coefficients of `S = x / (1 - e^{-x})` satisfy `Σ_j u_j S_{m-j} = δ_{m0}`.
pub fn todd_series(order: usize) -> AlphaSeries {
    let mut u = Vec::with_capacity(order + 1);
    let mut fact = BigInt::one();
    for j in 0..=order {
        fact *= BigInt::from(j + 1);
        let sign = if j % 2 == 0 { 1 } else { -1 };
        u.push(BigRational::new(BigInt::from(sign), fact.clone()));
    }
    let mut s: Vec<BigRational> = Vec::with_capacity(order + 1);
    s.push(BigRational::one());
    for m in 1..=order {
        let mut acc = BigRational::zero();
        for j in 1..=m {
            acc += &u[j] * &s[m - j];
        }
        s.push(-acc);
    }
    AlphaSeries::from_rationals(s, order)
}

/// The normalized Hirzebruch series
/// `Q_y(α) = α(1+y) / (1 - e^{-α(1+y)}) - αy` up to `α^order`.
pub fn qy_series(order: usize) -> AlphaSeries {
    let todd = todd_series(order);
    let one_plus_y = QPolynomial::new(vec![BigRational::one(), BigRational::one()]);
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut power = QPolynomial::one();
    for k in 0..=order {
        coeffs.push(&todd.coeffs[k] * &power);
        power = &power * &one_plus_y;
    }
    if order >= 1 {
        let y = QPolynomial::monomial(BigRational::one(), 1);
        coeffs[1] = &coeffs[1] - &y;
    }
    AlphaSeries::new(coeffs, order)
}
