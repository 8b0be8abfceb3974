// Copyright (c) 2026, genuslab contributors
// SPDX-License-Identifier: Apache-2.0

//! Reference computations written directly from the definitions, without
//! going through the library's algorithms.

#![allow(dead_code)]

use genuslab::algebra::{BigInt, BigRational};
use num_integer::Integer;
use num_traits::{One, Zero};

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `B_0..B_n` with `B_1 = -1/2`, from `Σ_{j≤m} C(m+1, j) B_j = 0`.
pub fn bernoulli(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = vec![BigRational::one()];
    for m in 1..=n {
        let s: BigRational = (0..m)
            .map(|j| BigRational::from_integer(binom(m + 1, j)) * &b[j])
            .sum();
        b.push(-s / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// Coefficients of `α coth α` up to `α^order`.
pub fn alpha_coth_alpha(order: usize) -> Vec<BigRational> {
    let b = bernoulli(order);
    (0..=order)
        .map(|k| {
            if k % 2 == 1 {
                BigRational::zero()
            } else {
                let two_k = BigRational::from_integer(BigInt::from(2).pow(k as u32));
                two_k * &b[k] / BigRational::from_integer(factorial(k))
            }
        })
        .collect()
}

/// Coefficients of `Q_y(α) = α(1+y)/(1 - e^{-α(1+y)}) - αy` at a rational
/// `y`, from `x/(1 - e^{-x}) = Σ B_k⁺ x^k / k!` with `B_1⁺ = +1/2`.
pub fn qy_at(y: &BigRational, order: usize) -> Vec<BigRational> {
    let b = bernoulli(order);
    let u = BigRational::one() + y;
    (0..=order)
        .map(|k| {
            let bk = if k == 1 { rat(1, 2) } else { b[k].clone() };
            let mut c = bk * num_traits::pow(u.clone(), k) / BigRational::from_integer(factorial(k));
            if k == 1 {
                c -= y;
            }
            c
        })
        .collect()
}

/// Elementary symmetric polynomial `e_k` of the given values.
pub fn elementary(values: &[BigRational], k: usize) -> BigRational {
    let mut e = vec![BigRational::zero(); k + 1];
    e[0] = BigRational::one();
    for v in values {
        for j in (1..=k).rev() {
            let add = &e[j - 1] * v;
            e[j] += add;
        }
    }
    e[k].clone()
}

/// `∏_i Q(t α_i)` as a truncated series in `t`.
pub fn product_series(q: &[BigRational], roots: &[BigRational], order: usize) -> Vec<BigRational> {
    let mut acc = vec![BigRational::zero(); order + 1];
    acc[0] = BigRational::one();
    for a in roots {
        let factor: Vec<BigRational> = (0..=order)
            .map(|k| &q[k] * num_traits::pow(a.clone(), k))
            .collect();
        let mut next = vec![BigRational::zero(); order + 1];
        for i in 0..=order {
            for j in 0..=order - i {
                next[i + j] += &acc[i] * &factor[j];
            }
        }
        acc = next;
    }
    acc
}

pub fn eval_int(coeffs: &[BigInt], y: i64) -> BigInt {
    let y = BigInt::from(y);
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &y + c)
}

pub fn euler(chi: &[BigInt]) -> BigInt {
    eval_int(chi, -1)
}

pub fn sigma(chi: &[BigInt]) -> BigInt {
    eval_int(chi, 1)
}

pub fn todd(chi: &[BigInt]) -> BigInt {
    chi[0].clone()
}

pub fn duality(chi: &[BigInt]) -> bool {
    let n = chi.len() - 1;
    (0..=n).all(|p| {
        let mirrored = &chi[n - p];
        if n % 2 == 0 {
            chi[p] == *mirrored
        } else {
            chi[p] == -mirrored
        }
    })
}

/// For `n = 2m`: `σ - χ = 4 Σ_{odd i < m} χ^i` when `m` is even and
/// `σ + χ = 4 Σ_{even i < m} χ^i` when `m` is odd; `σ = 0` for odd `n`.
pub fn parity_identities(chi: &[BigInt]) -> bool {
    let n = chi.len() - 1;
    if n % 2 == 1 {
        return sigma(chi).is_zero();
    }
    let m = n / 2;
    let s = sigma(chi);
    let e = euler(chi);
    if m % 2 == 0 {
        let rhs: BigInt = (0..m).filter(|i| i % 2 == 1).map(|i| &chi[i] * 4).sum();
        &s - &e == rhs
    } else {
        let rhs: BigInt = (0..m).filter(|i| i % 2 == 0).map(|i| &chi[i] * 4).sum();
        &s + &e == rhs
    }
}

/// Product of `Σ a_p y^p` and `Σ b_q y^q`.
pub fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, z) in b.iter().enumerate() {
            out[i + j] += x * z;
        }
    }
    out
}

pub fn divisible(x: &BigInt, m: i64) -> bool {
    x.mod_floor(&BigInt::from(m)).is_zero()
}

/// Z/2 vector helpers on plain `Vec<u8>` matrices.
pub fn pair(gram: &[Vec<u8>], x: u64, y: u64) -> u8 {
    let n = gram.len();
    let mut s = 0u8;
    for i in 0..n {
        for j in 0..n {
            s ^= ((x >> i) & 1) as u8 & ((y >> j) & 1) as u8 & gram[i][j];
        }
    }
    s
}

/// `h(x) = Σ x_i h_i + Σ_{i<j} x_i x_j λ_ij` mod 2.
pub fn enhancement(gram: &[Vec<u8>], h: &[u8], x: u64) -> u8 {
    let n = gram.len();
    let mut s = 0u8;
    for i in 0..n {
        if (x >> i) & 1 == 1 {
            s ^= h[i] & 1;
            for j in i + 1..n {
                if (x >> j) & 1 == 1 {
                    s ^= gram[i][j];
                }
            }
        }
    }
    s
}

/// Majority value of `h`: 1 iff `Σ (-1)^{h(x)} < 0`.
pub fn arf_by_majority(gram: &[Vec<u8>], h: &[u8]) -> u8 {
    let n = gram.len();
    let ones = (0..1u64 << n).filter(|&x| enhancement(gram, h, x) == 1).count();
    u8::from(2 * ones > 1 << n)
}

/// `q(x) = Σ x_i q_i + 2 Σ_{i<j} x_i x_j λ_ij` mod 4.
pub fn z4_value(gram: &[Vec<u8>], q: &[i64], x: u64) -> i64 {
    let n = gram.len();
    let mut s = 0i64;
    for i in 0..n {
        if (x >> i) & 1 == 1 {
            s += q[i];
            for j in i + 1..n {
                if (x >> j) & 1 == 1 {
                    s += 2 * gram[i][j] as i64;
                }
            }
        }
    }
    s.rem_euclid(4)
}

/// Brown invariant read off the argument of `Σ i^{q(x)}` in floating point.
pub fn brown_by_angle(gram: &[Vec<u8>], q: &[i64]) -> u8 {
    let n = gram.len();
    let (mut re, mut im) = (0f64, 0f64);
    for x in 0..1u64 << n {
        match z4_value(gram, q, x) {
            0 => re += 1.0,
            1 => im += 1.0,
            2 => re -= 1.0,
            _ => im -= 1.0,
        }
    }
    let k = (im.atan2(re) / std::f64::consts::FRAC_PI_4).round() as i64;
    k.rem_euclid(8) as u8
}

/// Number of positive minus negative diagonal entries.
pub fn diagonal_signature(entries: &[i64]) -> i64 {
    entries.iter().map(|e| e.signum()).sum()
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn bigs(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn rank_gf2(rows: &[Vec<u8>]) -> usize {
    let mut m: Vec<Vec<u8>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        if let Some(p) = (rank..m.len()).find(|&r| m[r][c] == 1) {
            m.swap(rank, p);
            for r in 0..m.len() {
                if r != rank && m[r][c] == 1 {
                    let pivot = m[rank].clone();
                    for (x, y) in m[r].iter_mut().zip(&pivot) {
                        *x ^= y;
                    }
                }
            }
            rank += 1;
        }
    }
    rank
}

pub fn to_i64_matrix(m: &[Vec<u8>]) -> Vec<Vec<i64>> {
    m.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect()
}
