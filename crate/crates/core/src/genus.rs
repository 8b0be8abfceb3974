// Copyright (c) 2026, genuslab contributors
// SPDX-License-Identifier: Apache-2.0

//! chi_y-genera from Hodge numbers and, independently, from Chern numbers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{
    multiplicative_sequence, partitions_of, qy_series, AlgebraError, Partition, QPolynomial,
    YPolynomial,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenusError {
    #[error("chi vector for dimension {n} needs {expected} entries, got {got}")]
    ChiLength { n: usize, expected: usize, got: usize },
    #[error("Hodge diamond for dimension {n} must be {size}x{size}")]
    HodgeShape { n: usize, size: usize },
    #[error("negative Hodge number h^{{{p},{q}}}")]
    NegativeHodge { p: usize, q: usize },
    #[error("Hodge symmetry h^{{{p},{q}}} = h^{{{q},{p}}} fails")]
    HodgeSymmetry { p: usize, q: usize },
    #[error("Serre symmetry h^{{{p},{q}}} = h^{{n-{p},n-{q}}} fails")]
    SerreSymmetry { p: usize, q: usize },
    #[error("Chern number key {key} is not a partition of {n}")]
    ChernKey { key: String, n: usize },
    #[error("missing Chern number for partition {0}")]
    MissingChern(String),
    #[error("Chern data gives non-integral coefficient of y^{power}: {value}")]
    NonIntegral { power: usize, value: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `χ^0 … χ^n` of an n-dimensional compact complex manifold.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChiVector {
    n: usize,
    values: Vec<BigInt>,
}

impl ChiVector {
    pub fn new(n: usize, values: Vec<BigInt>) -> Result<Self, GenusError> {
        if values.len() != n + 1 {
            return Err(GenusError::ChiLength {
                n,
                expected: n + 1,
                got: values.len(),
            });
        }
        Ok(ChiVector { n, values })
    }

    /// Dimension is `values.len() - 1`; panics on an empty slice.
    pub fn from_i64s(values: &[i64]) -> Self {
        assert!(!values.is_empty(), "chi vector needs at least chi^0");
        ChiVector {
            n: values.len() - 1,
            values: values.iter().map(|&v| BigInt::from(v)).collect(),
        }
    }

    pub fn point() -> Self {
        Self::from_i64s(&[1])
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn get(&self, p: usize) -> &BigInt {
        &self.values[p]
    }

    pub fn chi_y(&self) -> YPolynomial {
        chi_y_polynomial(self)
    }
}

/// `h^{p,q} = dim H^q(X, Λ^p T*X)` for `0 ≤ p, q ≤ n`, row index `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeDiamond {
    n: usize,
    h: Vec<Vec<BigInt>>,
}

impl HodgeDiamond {
    pub fn new(n: usize, h: Vec<Vec<BigInt>>) -> Result<Self, GenusError> {
        if h.len() != n + 1 || h.iter().any(|row| row.len() != n + 1) {
            return Err(GenusError::HodgeShape { n, size: n + 1 });
        }
        for (p, row) in h.iter().enumerate() {
            for (q, v) in row.iter().enumerate() {
                if v.is_negative() {
                    return Err(GenusError::NegativeHodge { p, q });
                }
            }
        }
        Ok(HodgeDiamond { n, h })
    }

    pub fn from_u64s(rows: &[&[u64]]) -> Result<Self, GenusError> {
        let n = rows.len().saturating_sub(1);
        Self::new(
            n,
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, p: usize, q: usize) -> &BigInt {
        &self.h[p][q]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.h
    }

    /// Checks `h^{p,q} = h^{q,p}` and `h^{p,q} = h^{n-p,n-q}`.
    pub fn validate_symmetry(&self) -> Result<(), GenusError> {
        let n = self.n;
        for p in 0..=n {
            for q in 0..=n {
                if self.h[p][q] != self.h[q][p] {
                    return Err(GenusError::HodgeSymmetry { p, q });
                }
                if self.h[p][q] != self.h[n - p][n - q] {
                    return Err(GenusError::SerreSymmetry { p, q });
                }
            }
        }
        Ok(())
    }

    /// Künneth formula for `X × Y`.
    pub fn product(&self, other: &Self) -> Self {
        let n = self.n + other.n;
        let mut h = vec![vec![BigInt::zero(); n + 1]; n + 1];
        for (a, row_a) in self.h.iter().enumerate() {
            for (b, ha) in row_a.iter().enumerate() {
                if ha.is_zero() {
                    continue;
                }
                for (c, row_b) in other.h.iter().enumerate() {
                    for (d, hb) in row_b.iter().enumerate() {
                        h[a + c][b + d] += ha * hb;
                    }
                }
            }
        }
        HodgeDiamond { n, h }
    }
}

/// Chern numbers `c_I[X]` for every partition `I` of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernData {
    n: usize,
    numbers: BTreeMap<Partition, BigInt>,
}

impl ChernData {
    /// In dimension zero the single number `c_∅[pt] = 1` may be omitted.
    pub fn new(n: usize, mut numbers: BTreeMap<Partition, BigInt>) -> Result<Self, GenusError> {
        if n == 0 {
            numbers.entry(Partition::empty()).or_insert_with(BigInt::one);
        }
        for key in numbers.keys() {
            if key.weight() != n {
                return Err(GenusError::ChernKey {
                    key: key.to_string(),
                    n,
                });
            }
        }
        for key in partitions_of(n) {
            if !numbers.contains_key(&key) {
                return Err(GenusError::MissingChern(key.to_string()));
            }
        }
        Ok(ChernData { n, numbers })
    }

    /// Builds from `("2,1", value)` pairs.
    pub fn from_pairs(n: usize, pairs: &[(&str, i64)]) -> Result<Self, GenusError> {
        let mut numbers = BTreeMap::new();
        for (k, v) in pairs {
            numbers.insert(k.parse::<Partition>()?, BigInt::from(*v));
        }
        Self::new(n, numbers)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn numbers(&self) -> &BTreeMap<Partition, BigInt> {
        &self.numbers
    }

    pub fn get(&self, key: &Partition) -> Option<&BigInt> {
        self.numbers.get(key)
    }
}

/// `χ(X)`, `τ(X)` and `σ(X)`: the genus at `y = -1, 0, 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specializations {
    pub euler: BigInt,
    pub todd: BigInt,
    pub signature: BigInt,
}

/// `χ^p = Σ_q (-1)^q h^{p,q}`.
pub fn chi_vector_from_hodge(d: &HodgeDiamond) -> ChiVector {
    let values = d
        .h
        .iter()
        .map(|row| {
            row.iter().enumerate().fold(BigInt::zero(), |acc, (q, h)| {
                if q % 2 == 0 {
                    acc + h
                } else {
                    acc - h
                }
            })
        })
        .collect();
    ChiVector { n: d.n, values }
}

pub fn chi_y_polynomial(v: &ChiVector) -> YPolynomial {
    YPolynomial::new(v.values.clone())
}

pub fn specialize(p: &YPolynomial) -> Specializations {
    Specializations {
        euler: p.eval_i64(-1),
        todd: p.eval_i64(0),
        signature: p.eval_i64(1),
    }
}

/// `χ^p = (-1)^n χ^{n-p}` for every `p`.
pub fn check_duality(v: &ChiVector) -> bool {
    let n = v.n;
    (0..=n).all(|p| {
        let mirror = &v.values[n - p];
        if n % 2 == 0 {
            v.values[p] == *mirror
        } else {
            v.values[p] == -mirror
        }
    })
}

/// `(χ^even, χ^odd)`: sums over even and odd indices.
pub fn parity_parts(v: &ChiVector) -> (BigInt, BigInt) {
    let mut even = BigInt::zero();
    let mut odd = BigInt::zero();
    for (p, x) in v.values.iter().enumerate() {
        if p % 2 == 0 {
            even += x;
        } else {
            odd += x;
        }
    }
    (even, odd)
}

/// Checks `σ ± χ = 2 χ^{even/odd}` for any vector and, under duality, the
/// sharper identities. For complex dimension `2m`: `σ - χ = 4 Σ_{i<m, i odd} χ^i`
/// when `m` is even, `σ + χ = 4 Σ_{i<m, i even} χ^i` when `m` is odd. For odd
/// complex dimension duality forces `σ = 0`.
pub fn check_parity_identities(v: &ChiVector) -> bool {
    let s = specialize(&v.chi_y());
    let (even, odd) = parity_parts(v);
    let two = BigInt::from(2);
    let four = BigInt::from(4);
    if &s.signature + &s.euler != &two * &even || &s.signature - &s.euler != &two * &odd {
        return false;
    }
    if !check_duality(v) {
        return true;
    }
    if v.n % 2 == 1 {
        return s.signature.is_zero();
    }
    let m = v.n / 2;
    let below_middle = &v.values[..m];
    if m % 2 == 0 {
        let sum: BigInt = below_middle.iter().skip(1).step_by(2).sum();
        &s.signature - &s.euler == &four * sum
    } else {
        let sum: BigInt = below_middle.iter().step_by(2).sum();
        &s.signature + &s.euler == &four * sum
    }
}

/// gHRR: pairs the weight-n part of the Hirzebruch class `T_y` with the
/// Chern numbers. Rejects data whose pairing is not integral.
pub fn genus_from_chern(c: &ChernData) -> Result<YPolynomial, GenusError> {
    let n = c.n;
    let t_y = multiplicative_sequence(&qy_series(n), n)?;
    let mut acc = QPolynomial::zero();
    for (key, coeff) in t_y.homogeneous(n).terms() {
        let number = c
            .get(key)
            .ok_or_else(|| GenusError::MissingChern(key.to_string()))?;
        let scaled = coeff.scale(&num_rational::BigRational::from_integer(number.clone()));
        acc = &acc + &scaled;
    }
    if let Some(power) = acc.first_non_integer() {
        return Err(GenusError::NonIntegral {
            power,
            value: acc.coeff(power).to_string(),
        });
    }
    Ok(acc.to_integer().expect("integrality checked"))
}

/// Convolution `χ^p(X×Y) = Σ_{a+b=p} χ^a(X) χ^b(Y)`.
pub fn product_chi_vector(a: &ChiVector, b: &ChiVector) -> ChiVector {
    let n = a.n + b.n;
    let mut values = vec![BigInt::zero(); n + 1];
    for (i, x) in a.values.iter().enumerate() {
        for (j, z) in b.values.iter().enumerate() {
            values[i + j] += x * z;
        }
    }
    ChiVector { n, values }
}

/// `Pⁿ`: diagonal Hodge diamond and `c_I[Pⁿ] = ∏_{i∈I} C(n+1, i)`.
pub fn projective_space_fixture(n: usize) -> (HodgeDiamond, ChernData) {
    let mut h = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for (p, row) in h.iter_mut().enumerate() {
        row[p] = BigInt::one();
    }
    let numbers = partitions_of(n)
        .into_iter()
        .map(|part| {
            let value = part
                .parts()
                .iter()
                .fold(BigInt::one(), |acc, &i| acc * binomial(n as u64 + 1, i as u64));
            (part, value)
        })
        .collect();
    (
        HodgeDiamond { n, h },
        ChernData { n, numbers },
    )
}

pub(crate) fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| {
        (acc * BigInt::from(n - i)).div_floor(&BigInt::from(i + 1))
    })
}
