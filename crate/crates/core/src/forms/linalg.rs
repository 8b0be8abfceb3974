// Copyright (c) 2026, genuslab contributors
// SPDX-License-Identifier: Apache-2.0

//! Linear algebra over Z/2 on bit-packed vectors (bit `i` = coordinate `i`).

/// Parity of the popcount: the Z/2 dot product of `a` and `b`.
#[inline]
pub fn dot(a: u64, b: u64) -> u8 {
    ((a & b).count_ones() & 1) as u8
}

#[inline]
pub fn bit(x: u64, i: usize) -> bool {
    (x >> i) & 1 == 1
}

/// Mask of the low `dim` bits.
#[inline]
pub fn mask(dim: usize) -> u64 {
    if dim >= 64 {
        u64::MAX
    } else {
        (1u64 << dim) - 1
    }
}

/// Incrementally built basis in reduced form, one vector per pivot bit
/// (the lowest set bit).
#[derive(Clone, Debug, Default)]
pub struct XorBasis {
    vecs: Vec<u64>,
}

impl XorBasis {
    pub fn new() -> Self {
        Self::default()
    }

    /// Reduces `v` against the basis.
    pub fn reduce(&self, mut v: u64) -> u64 {
        for &b in &self.vecs {
            if v & (b & b.wrapping_neg()) != 0 {
                v ^= b;
            }
        }
        v
    }

    /// Adds `v` if it is independent; returns whether it was added.
    pub fn insert(&mut self, v: u64) -> bool {
        let r = self.reduce(v);
        if r == 0 {
            return false;
        }
        let pivot = r & r.wrapping_neg();
        for b in &mut self.vecs {
            if *b & pivot != 0 {
                *b ^= r;
            }
        }
        self.vecs.push(r);
        self.vecs.sort_unstable_by_key(|b| b.trailing_zeros());
        true
    }

    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    pub fn rank(&self) -> usize {
        self.vecs.len()
    }

    /// Canonical (fully reduced) basis; equal spans give equal vectors.
    pub fn vectors(&self) -> &[u64] {
        &self.vecs
    }

    pub fn from_vectors(vs: &[u64]) -> Self {
        let mut b = Self::new();
        for &v in vs {
            b.insert(v);
        }
        b
    }
}

/// Basis of `{x ∈ Z/2^dim : row·x = 0 for every row}`.
pub fn kernel(rows: &[u64], dim: usize) -> Vec<u64> {
    // row-reduce, tracking pivot columns
    let mut reduced: Vec<u64> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for &r in rows {
        let mut r = r & mask(dim);
        for (b, &p) in reduced.iter().zip(&pivots) {
            if bit(r, p) {
                r ^= b;
            }
        }
        if r == 0 {
            continue;
        }
        let p = r.trailing_zeros() as usize;
        for b in reduced.iter_mut() {
            if bit(*b, p) {
                *b ^= r;
            }
        }
        reduced.push(r);
        pivots.push(p);
    }
    let mut out = Vec::new();
    for free in (0..dim).filter(|c| !pivots.contains(c)) {
        let mut v = 1u64 << free;
        for (b, &p) in reduced.iter().zip(&pivots) {
            if bit(*b, free) {
                v |= 1u64 << p;
            }
        }
        out.push(v);
    }
    out
}

/// Solutions of `M x = rhs` where `rows[i]` is row `i` of `M` and bit `i` of
/// `rhs` is the right-hand side. Returns a particular solution and a kernel
/// basis, or `None` when inconsistent.
pub fn solve(rows: &[u64], rhs: u64, dim: usize) -> Option<(u64, Vec<u64>)> {
    // augmented column at bit `dim`
    assert!(dim < 64, "augmented solve needs a spare bit");
    let aug = 1u64 << dim;
    let mut reduced: Vec<u64> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for (i, &r) in rows.iter().enumerate() {
        let mut r = (r & mask(dim)) | if bit(rhs, i) { aug } else { 0 };
        for (b, &p) in reduced.iter().zip(&pivots) {
            if bit(r, p) {
                r ^= b;
            }
        }
        if r & mask(dim) == 0 {
            if r != 0 {
                return None;
            }
            continue;
        }
        let p = r.trailing_zeros() as usize;
        for b in reduced.iter_mut() {
            if bit(*b, p) {
                *b ^= r;
            }
        }
        reduced.push(r);
        pivots.push(p);
    }
    let mut particular = 0u64;
    for (b, &p) in reduced.iter().zip(&pivots) {
        if b & aug != 0 {
            particular |= 1u64 << p;
        }
    }
    let kernel_rows: Vec<u64> = rows.to_vec();
    Some((particular, kernel(&kernel_rows, dim)))
}

/// All vectors of the affine space `base + span(kernel)`.
pub fn enumerate_coset(base: u64, kernel: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(1 << kernel.len());
    for bits in 0u64..(1u64 << kernel.len()) {
        let mut v = base;
        for (i, k) in kernel.iter().enumerate() {
            if bit(bits, i) {
                v ^= k;
            }
        }
        out.push(v);
    }
    out.sort_unstable();
    out
}
