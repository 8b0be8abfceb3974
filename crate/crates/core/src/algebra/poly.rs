// Copyright (c) 2026, genuslab contributors
// SPDX-License-Identifier: Apache-2.0

//! Dense univariate polynomials in the genus variable `y`.
//!
//! Coefficients are stored in ascending order of powers and trailing zeros
//! are always trimmed, so structural equality is polynomial equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial in `y` with coefficients in `T`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

/// Integer polynomial in `y`; the carrier of chi_y.
pub type YPolynomial = Poly<BigInt>;

/// Rational polynomial in `y`; coefficients of the Hirzebruch series.
pub type QPolynomial = Poly<BigRational>;

impl<T: Clone + Zero> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * y^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `y^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn map<U: Clone + Zero>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T> Poly<T>
where
    T: Clone + Zero + One + Add<Output = T> + Mul<Output = T>,
{
    pub fn one() -> Self {
        Self::new(vec![T::one()])
    }

    /// Horner evaluation.
    pub fn eval(&self, y: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * y.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// `self(y)^k` via repeated multiplication.
    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl<T> Poly<T>
where
    T: Clone + Zero + One + Signed,
{
    /// Euclidean division by a divisor whose leading coefficient is a unit
    /// (`1` or `-1`), so the quotient stays in the coefficient ring.
    ///
    /// Returns `None` when the divisor is zero or its leading coefficient is
    /// not a unit.
    pub fn div_rem_unit(&self, divisor: &Self) -> Option<(Self, Self)> {
        let d = divisor.degree()?;
        let lead = divisor.coeffs[d].clone();
        if !lead.abs().is_one() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); rem.len() - d];
        for k in (d..rem.len()).rev() {
            let c = rem[k].clone() * lead.clone();
            if c.is_zero() {
                continue;
            }
            quot[k - d] = c.clone();
            for (i, di) in divisor.coeffs.iter().enumerate() {
                rem[k - d + i] = rem[k - d + i].clone() - c.clone() * di.clone();
            }
        }
        Some((Self::new(quot), Self::new(rem)))
    }

    /// True when `divisor` divides `self` exactly in the coefficient ring.
    pub fn is_divisible_by(&self, divisor: &Self) -> Option<bool> {
        self.div_rem_unit(divisor).map(|(_, r)| r.is_zero())
    }
}

impl YPolynomial {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn eval_i64(&self, y: i64) -> BigInt {
        self.eval(&BigInt::from(y))
    }

    pub fn to_rational(&self) -> QPolynomial {
        self.map(|c| BigRational::from_integer(c.clone()))
    }
}

impl QPolynomial {
    /// Integer polynomial with the same coefficients, if every coefficient
    /// is an integer.
    pub fn to_integer(&self) -> Option<YPolynomial> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(Poly::new)
    }

    /// Index of the first non-integral coefficient, if any.
    pub fn first_non_integer(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_integer())
    }
}

impl<'a, T> Add<&'a Poly<T>> for &'a Poly<T>
where
    T: Clone + Zero + Add<Output = T>,
{
    type Output = Poly<T>;

    fn add(self, rhs: &'a Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = T::zero();
        Poly::new(
            (0..n)
                .map(|k| {
                    self.coeffs.get(k).unwrap_or(&zero).clone()
                        + rhs.coeffs.get(k).unwrap_or(&zero).clone()
                })
                .collect(),
        )
    }
}

impl<'a, T> Sub<&'a Poly<T>> for &'a Poly<T>
where
    T: Clone + Zero + Sub<Output = T>,
{
    type Output = Poly<T>;

    fn sub(self, rhs: &'a Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = T::zero();
        Poly::new(
            (0..n)
                .map(|k| {
                    self.coeffs.get(k).unwrap_or(&zero).clone()
                        - rhs.coeffs.get(k).unwrap_or(&zero).clone()
                })
                .collect(),
        )
    }
}

impl<'a, T> Mul<&'a Poly<T>> for &'a Poly<T>
where
    T: Clone + Zero + Mul<Output = T>,
{
    type Output = Poly<T>;

    fn mul(self, rhs: &'a Poly<T>) -> Poly<T> {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T> Neg for &Poly<T>
where
    T: Clone + Zero + Neg<Output = T>,
{
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl<T> $tr<Poly<T>> for Poly<T>
        where
            for<'a> &'a Poly<T>: $tr<&'a Poly<T>, Output = Poly<T>>,
        {
            type Output = Poly<T>;

            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// Ascending powers with explicit signs: `2 - 20*y + 2*y^2`.
impl<T> fmt::Display for Poly<T>
where
    T: Clone + Zero + One + Signed + fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "y")?,
                1 => write!(f, "{mag}*y")?,
                _ if unit => write!(f, "y^{k}")?,
                _ => write!(f, "{mag}*y^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
