// Copyright (c) 2026, genuslab contributors
// SPDX-License-Identifier: Apache-2.0

//! Truncated graded series in Chern classes `c_1, c_2, …` (`deg c_i = i`),
//! and the expansion of multiplicative sequences.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::poly::QPolynomial;
use super::series::{rat, AlphaSeries};
use super::AlgebraError;

/// A Chern monomial `c_{i_1} ⋯ c_{i_r}`, stored as its index multiset in
/// descending order. The empty partition is the monomial `1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self, AlgebraError> {
        if parts.contains(&0) {
            return Err(AlgebraError::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Cohomological weight `Σ i` (complex degree).
    pub fn weight(&self) -> usize {
        self.0.iter().map(|&i| i as usize).sum()
    }

    pub fn merge(&self, other: &Self) -> Self {
        let mut parts = Vec::with_capacity(self.0.len() + other.0.len());
        parts.extend_from_slice(&self.0);
        parts.extend_from_slice(&other.0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }
}

/// Comma-joined descending parts, e.g. `2,1,1`; the empty partition is `""`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| AlgebraError::BadPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for part in (1..=rem.min(max)).rev() {
            cur.push(part as u32);
            rec(rem - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Polynomial in `c_1 … c_n` truncated above weight `n`, with `Q[y]`
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSeries {
    truncation: usize,
    terms: BTreeMap<Partition, QPolynomial>,
}

impl GradedSeries {
    pub fn zero(truncation: usize) -> Self {
        GradedSeries {
            truncation,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        s.insert(Partition::empty(), QPolynomial::one());
        s
    }

    /// The variable `c_i` (zero when `i` exceeds the truncation).
    pub fn chern(i: u32, truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        s.insert(Partition(vec![i]), QPolynomial::one());
        s
    }

    pub fn from_terms(
        truncation: usize,
        terms: impl IntoIterator<Item = (Partition, QPolynomial)>,
    ) -> Self {
        let mut s = Self::zero(truncation);
        for (k, v) in terms {
            s.add_term(k, v);
        }
        s
    }

    fn insert(&mut self, key: Partition, value: QPolynomial) {
        if key.weight() <= self.truncation && !value.is_zero() {
            self.terms.insert(key, value);
        }
    }

    fn add_term(&mut self, key: Partition, value: QPolynomial) {
        if key.weight() > self.truncation || value.is_zero() {
            return;
        }
        let sum = match self.terms.get(&key) {
            Some(old) => old + &value,
            None => value,
        };
        if sum.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn terms(&self) -> &BTreeMap<Partition, QPolynomial> {
        &self.terms
    }

    pub fn get(&self, key: &Partition) -> QPolynomial {
        self.terms.get(key).cloned().unwrap_or_else(QPolynomial::zero)
    }

    /// Weight-`j` part: the K-polynomial `K_j` for a multiplicative sequence.
    pub fn homogeneous(&self, j: usize) -> Self {
        GradedSeries {
            truncation: self.truncation,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.weight() == j)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.truncation.min(rhs.truncation));
        for (k, v) in self.terms.iter().chain(rhs.terms.iter()) {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn scale(&self, c: &QPolynomial) -> Self {
        let mut out = Self::zero(self.truncation);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.truncation.min(rhs.truncation));
        for (ka, va) in &self.terms {
            for (kb, vb) in &rhs.terms {
                if ka.weight() + kb.weight() <= out.truncation {
                    out.add_term(ka.merge(kb), va * vb);
                }
            }
        }
        out
    }

    /// Exponential of a series without constant term.
    pub fn exp(&self) -> Result<Self, AlgebraError> {
        if self.terms.contains_key(&Partition::empty()) {
            return Err(AlgebraError::ConstantTermInExp);
        }
        let n = self.truncation;
        let mut out = Self::one(n);
        let mut power = Self::one(n);
        let mut fact = BigInt::one();
        for m in 1..=n {
            power = power.mul(self);
            fact *= BigInt::from(m);
            let inv = QPolynomial::constant(BigRational::new(BigInt::one(), fact.clone()));
            out = out.add(&power.scale(&inv));
        }
        Ok(out)
    }
}

/// Power sums `p_1 … p_n` of the Chern roots written in `c_1 … c_n`, from
/// Newton's identities
/// `p_k = Σ_{i=1}^{k-1} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k`.
pub fn power_sums(n: usize) -> Vec<GradedSeries> {
    let mut p: Vec<GradedSeries> = Vec::with_capacity(n);
    for k in 1..=n {
        let sign = |i: usize| if i % 2 == 1 { 1 } else { -1 };
        let mut pk = GradedSeries::chern(k as u32, n)
            .scale(&QPolynomial::constant(rat(sign(k) * k as i64, 1)));
        for i in 1..k {
            let term = GradedSeries::chern(i as u32, n)
                .mul(&p[k - i - 1])
                .scale(&QPolynomial::constant(rat(sign(i), 1)));
            pk = pk.add(&term);
        }
        p.push(pk);
    }
    p
}

/// Expands `∏_i q(α_i)` in the elementary symmetric functions `c_j` of the
/// roots, through weight `n`.
///
/// `log ∏ q(α_i) = Σ_k g_k p_k` where `log q = Σ g_k α^k`; exponentiating the
/// graded series gives every K-polynomial `K_0 … K_n` at once.
pub fn multiplicative_sequence(q: &AlphaSeries, n: usize) -> Result<GradedSeries, AlgebraError> {
    if !q.is_normalized() {
        return Err(AlgebraError::NotNormalized);
    }
    if n > q.order() {
        return Err(AlgebraError::OrderTooSmall {
            order: q.order(),
            needed: n,
        });
    }
    let log_q = q.truncate(n).log()?;
    let sums = power_sums(n);
    let mut s = GradedSeries::zero(n);
    for (k, pk) in sums.iter().enumerate() {
        let g = log_q.coeff(k + 1);
        if !g.is_zero() {
            s = s.add(&pk.scale(&g));
        }
    }
    s.exp()
}
