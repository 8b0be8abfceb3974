// Copyright (c) 2026, genuslab contributors
// SPDX-License-Identifier: Apache-2.0

//! Symmetric bilinear forms over Z/2, quadratic enhancements and the Arf
//! invariant.

use super::linalg::{bit, dot, enumerate_coset, kernel, mask, solve, XorBasis};
use super::{FormError, MAX_DIM, MAX_ENUM_DIM};

/// `(V, λ)` with `V = (Z/2)^dim`; `gram[i]` is row `i` as a bit vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z2BilinearSpace {
    dim: usize,
    gram: Vec<u64>,
    nonsingular: bool,
}

impl Z2BilinearSpace {
    pub fn new(dim: usize, gram: Vec<u64>) -> Result<Self, FormError> {
        if dim > MAX_DIM {
            return Err(FormError::TooLarge { dim, max: MAX_DIM });
        }
        if gram.len() != dim {
            return Err(FormError::Shape { dim, rows: gram.len() });
        }
        let gram: Vec<u64> = gram.into_iter().map(|r| r & mask(dim)).collect();
        for i in 0..dim {
            for j in 0..i {
                if bit(gram[i], j) != bit(gram[j], i) {
                    return Err(FormError::NotSymmetric { i, j });
                }
            }
        }
        let nonsingular = XorBasis::from_vectors(&gram).rank() == dim;
        Ok(Z2BilinearSpace {
            dim,
            gram,
            nonsingular,
        })
    }

    /// From a 0/1 matrix (entries reduced mod 2).
    pub fn from_matrix(rows: &[Vec<i64>]) -> Result<Self, FormError> {
        let dim = rows.len();
        let mut gram = Vec::with_capacity(dim);
        for row in rows {
            if row.len() != dim {
                return Err(FormError::Shape { dim, rows: row.len() });
            }
            if dim > MAX_DIM {
                return Err(FormError::TooLarge { dim, max: MAX_DIM });
            }
            let mut r = 0u64;
            for (j, &x) in row.iter().enumerate() {
                if x.rem_euclid(2) == 1 {
                    r |= 1 << j;
                }
            }
            gram.push(r);
        }
        Self::new(dim, gram)
    }

    /// `k` orthogonal hyperbolic planes, basis `e_1, f_1, e_2, f_2, …`.
    pub fn hyperbolic(k: usize) -> Self {
        let mut gram = vec![0u64; 2 * k];
        for j in 0..k {
            gram[2 * j] = 1 << (2 * j + 1);
            gram[2 * j + 1] = 1 << (2 * j);
        }
        Self::new(2 * k, gram).expect("hyperbolic form is valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gram(&self) -> &[u64] {
        &self.gram
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        bit(self.gram[i], j) as u8
    }

    pub fn is_nonsingular(&self) -> bool {
        self.nonsingular
    }

    /// Zero diagonal, i.e. `λ(x, x) = 0` for all `x`.
    pub fn is_alternating(&self) -> bool {
        self.diagonal() == 0
    }

    /// Bit `i` is `λ(e_i, e_i)`; as a functional it is `x ↦ λ(x, x)`.
    pub fn diagonal(&self) -> u64 {
        (0..self.dim)
            .filter(|&i| bit(self.gram[i], i))
            .fold(0u64, |acc, i| acc | 1 << i)
    }

    /// `G x`: bit `i` is `λ(e_i, x)`.
    pub fn apply(&self, x: u64) -> u64 {
        (0..self.dim)
            .filter(|&i| dot(self.gram[i], x) == 1)
            .fold(0u64, |acc, i| acc | 1 << i)
    }

    pub fn pair(&self, x: u64, y: u64) -> u8 {
        dot(self.apply(x), y)
    }

    pub fn orthogonal_sum(&self, other: &Self) -> Result<Self, FormError> {
        let d = self.dim + other.dim;
        if d > MAX_DIM {
            return Err(FormError::TooLarge { dim: d, max: MAX_DIM });
        }
        let mut gram = self.gram.clone();
        gram.extend(other.gram.iter().map(|r| r << self.dim));
        Self::new(d, gram)
    }

    /// Gram matrix in the basis given by `rows` (need not be a basis of V).
    pub fn restrict(&self, rows: &[u64]) -> Self {
        let images: Vec<u64> = rows.iter().map(|&r| self.apply(r)).collect();
        let gram = images
            .iter()
            .map(|&gr| {
                rows.iter()
                    .enumerate()
                    .filter(|(_, &s)| dot(gr, s) == 1)
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Self::new(rows.len(), gram).expect("restriction of a symmetric form")
    }

    /// Orthogonal complement of `span(vectors)`.
    pub fn perp(&self, vectors: &[u64]) -> Vec<u64> {
        let rows: Vec<u64> = vectors.iter().map(|&v| self.apply(v)).collect();
        kernel(&rows, self.dim)
    }

    fn check_vector(&self, v: u64) -> Result<(), FormError> {
        if v & !mask(self.dim) != 0 {
            return Err(FormError::VectorOutOfRange { dim: self.dim });
        }
        Ok(())
    }
}

/// `h: V → Z/2` with `h(x+y) = h(x) + h(y) + λ(x, y)`, stored by its values
/// on the standard basis (bit `i` of `basis_values`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z2QuadraticForm {
    space: Z2BilinearSpace,
    basis_values: u64,
}

impl Z2QuadraticForm {
    pub fn new(space: Z2BilinearSpace, basis_values: u64) -> Self {
        let basis_values = basis_values & mask(space.dim);
        Z2QuadraticForm {
            space,
            basis_values,
        }
    }

    pub fn from_values(space: Z2BilinearSpace, values: &[u8]) -> Result<Self, FormError> {
        if values.len() != space.dim {
            return Err(FormError::Shape {
                dim: space.dim,
                rows: values.len(),
            });
        }
        let bits = values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v % 2 == 1)
            .fold(0u64, |acc, (i, _)| acc | 1 << i);
        Ok(Self::new(space, bits))
    }

    pub fn space(&self) -> &Z2BilinearSpace {
        &self.space
    }

    pub fn basis_values(&self) -> u64 {
        self.basis_values
    }

    /// `h(Σ x_i e_i) = Σ x_i h(e_i) + Σ_{i<j} x_i x_j λ(e_i, e_j)`.
    pub fn eval(&self, x: u64) -> u8 {
        let mut acc = dot(x, self.basis_values);
        for i in (0..self.space.dim).filter(|&i| bit(x, i)) {
            let above = x & !mask(i + 1);
            acc ^= dot(self.space.gram[i], above);
        }
        acc
    }

    pub fn orthogonal_sum(&self, other: &Self) -> Result<Self, FormError> {
        let space = self.space.orthogonal_sum(&other.space)?;
        let values = self.basis_values | other.basis_values << self.space.dim;
        Ok(Self::new(space, values))
    }

    /// The same function written in the basis `rows` (rows must form a basis).
    pub fn change_basis(&self, rows: &[u64]) -> Result<Self, FormError> {
        if XorBasis::from_vectors(rows).rank() != self.space.dim || rows.len() != self.space.dim {
            return Err(FormError::NotABasis);
        }
        let space = self.space.restrict(rows);
        let values = rows
            .iter()
            .enumerate()
            .filter(|(_, &r)| self.eval(r) == 1)
            .fold(0u64, |acc, (i, _)| acc | 1 << i);
        Ok(Self::new(space, values))
    }
}

/// Symplectic basis `(e_j, ē_j)` of a nonsingular alternating form, by
/// greedy extraction of hyperbolic pairs: pick `e`, find `f` with
/// `λ(e, f) = 1`, project the remaining vectors onto `⟨e, f⟩^⊥`, repeat.
pub fn symplectic_basis(s: &Z2BilinearSpace) -> Result<Vec<(u64, u64)>, FormError> {
    if !s.is_alternating() {
        return Err(FormError::NotAlternating);
    }
    if !s.is_nonsingular() {
        return Err(FormError::Singular);
    }
    let mut rest: Vec<u64> = (0..s.dim).map(|i| 1u64 << i).collect();
    let mut pairs = Vec::with_capacity(s.dim / 2);
    while let Some(e) = rest.pop() {
        let j = rest
            .iter()
            .position(|&f| s.pair(e, f) == 1)
            .ok_or(FormError::Singular)?;
        let f = rest.swap_remove(j);
        for x in rest.iter_mut() {
            // x - λ(x,f) e - λ(x,e) f  lies in ⟨e, f⟩^⊥
            if s.pair(*x, f) == 1 {
                *x ^= e;
            }
            if s.pair(*x, e) == 1 {
                *x ^= f;
            }
        }
        pairs.push((e, f));
    }
    Ok(pairs)
}

/// `Arf(h) = Σ_j h(e_j) h(ē_j)` over a symplectic basis.
pub fn arf(f: &Z2QuadraticForm) -> Result<u8, FormError> {
    let pairs = symplectic_basis(&f.space)?;
    Ok(pairs
        .iter()
        .fold(0u8, |acc, &(e, ebar)| acc ^ (f.eval(e) & f.eval(ebar))))
}

/// Sign of the Gauss sum `Σ_x (-1)^{h(x)}`: positive means 0, negative 1.
/// Brute force over all `2^dim` vectors.
pub fn arf_gauss_oracle(f: &Z2QuadraticForm) -> Result<u8, FormError> {
    let s = &f.space;
    if s.dim > MAX_ENUM_DIM {
        return Err(FormError::TooLarge {
            dim: s.dim,
            max: MAX_ENUM_DIM,
        });
    }
    if !s.is_alternating() {
        return Err(FormError::NotAlternating);
    }
    let sum = gauss_sum_z2(f);
    match sum.signum() {
        1 => Ok(0),
        -1 => Ok(1),
        _ => Err(FormError::ZeroGaussSum),
    }
}

/// `Σ_x (-1)^{h(x)}`, enumerated in Gray-code order so each step updates
/// `h` by `h(e_i) + λ(x, e_i)`.
pub fn gauss_sum_z2(f: &Z2QuadraticForm) -> i64 {
    let s = &f.space;
    let mut x = 0u64;
    let mut h = 0u8;
    let mut sum = 1i64;
    for step in 1u64..(1u64 << s.dim) {
        let i = step.trailing_zeros() as usize;
        h ^= (bit(f.basis_values, i) as u8) ^ dot(s.gram[i], x);
        x ^= 1 << i;
        sum += if h == 0 { 1 } else { -1 };
    }
    sum
}

/// All `v` with `λ(e_i, v) = λ(e_i, e_i)` for every `i`; exactly one for a
/// nonsingular form. Sorted ascending.
pub fn characteristic_elements(s: &Z2BilinearSpace) -> Vec<u64> {
    match solve(&s.gram, s.diagonal(), s.dim) {
        Some((p, k)) => enumerate_coset(p, &k),
        None => Vec::new(),
    }
}

/// `L^⊥ / L` for a sublagrangian `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    /// Canonical basis of `L`.
    pub sublagrangian: Vec<u64>,
    /// Basis of `L^⊥` (in the ambient space).
    pub perp: Vec<u64>,
    /// Ambient vectors whose classes form the quotient basis.
    pub representatives: Vec<u64>,
    /// The induced form `μ([x], [y]) = λ(x, y)` on the quotient.
    pub quotient: Z2BilinearSpace,
}

/// Picks representatives of `span(perp) / span(sub)`, where `sub ⊂ span(perp)`.
pub(crate) fn complement(sub: &[u64], perp: &[u64]) -> Vec<u64> {
    let mut basis = XorBasis::from_vectors(sub);
    perp.iter().copied().filter(|&p| basis.insert(p)).collect()
}

pub fn sublagrangian_reduction(
    s: &Z2BilinearSpace,
    l: &[u64],
) -> Result<Reduction, FormError> {
    for &v in l {
        s.check_vector(v)?;
    }
    for (i, &a) in l.iter().enumerate() {
        for &b in &l[i..] {
            if s.pair(a, b) != 0 {
                return Err(FormError::NotSublagrangian);
            }
        }
    }
    let sub = XorBasis::from_vectors(l).vectors().to_vec();
    let perp = s.perp(&sub);
    let representatives = complement(&sub, &perp);
    let quotient = s.restrict(&representatives);
    Ok(Reduction {
        sublagrangian: sub,
        perp,
        representatives,
        quotient,
    })
}

/// Reduces `(V, λ, h)` by `L`; `h` must vanish on `L` so that it is
/// constant on `L`-cosets in `L^⊥`.
pub fn descend_enhancement(
    f: &Z2QuadraticForm,
    l: &[u64],
) -> Result<(Reduction, Z2QuadraticForm), FormError> {
    let red = sublagrangian_reduction(&f.space, l)?;
    if red.sublagrangian.iter().any(|&v| f.eval(v) != 0) {
        return Err(FormError::NotCosetInvariant);
    }
    let values = red
        .representatives
        .iter()
        .enumerate()
        .filter(|(_, &r)| f.eval(r) == 1)
        .fold(0u64, |acc, (i, _)| acc | 1 << i);
    let q = Z2QuadraticForm::new(red.quotient.clone(), values);
    Ok((red, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hyp_form(he: u8, hf: u8) -> Z2QuadraticForm {
        Z2QuadraticForm::from_values(Z2BilinearSpace::hyperbolic(1), &[he, hf]).unwrap()
    }

    #[test]
    fn symplectic_basis_hyperbolic() {
        let s = Z2BilinearSpace::hyperbolic(1);
        let pairs = symplectic_basis(&s).unwrap();
        assert_eq!(pairs.len(), 1);
        let (e, f) = pairs[0];
        assert_eq!(s.pair(e, f), 1);
        assert_eq!(e | f, 0b11);

        let s2 = Z2BilinearSpace::hyperbolic(2);
        let pairs = symplectic_basis(&s2).unwrap();
        assert_eq!(pairs.len(), 2);
        for (a, &(e, f)) in pairs.iter().enumerate() {
            assert_eq!(s2.pair(e, f), 1);
            for &(e2, f2) in &pairs[a + 1..] {
                for (x, y) in [(e, e2), (e, f2), (f, e2), (f, f2)] {
                    assert_eq!(s2.pair(x, y), 0);
                }
            }
        }
        let flat: Vec<u64> = pairs.iter().flat_map(|&(e, f)| [e, f]).collect();
        assert_eq!(XorBasis::from_vectors(&flat).rank(), 4);
    }

    #[test]
    fn symplectic_basis_errors() {
        let id = Z2BilinearSpace::from_matrix(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(symplectic_basis(&id), Err(FormError::NotAlternating));
        let zero = Z2BilinearSpace::from_matrix(&[vec![0, 0], vec![0, 0]]).unwrap();
        assert_eq!(symplectic_basis(&zero), Err(FormError::Singular));
    }

    #[test]
    fn arf_examples() {
        assert_eq!(arf(&hyp_form(0, 0)).unwrap(), 0);
        assert_eq!(arf(&hyp_form(1, 1)).unwrap(), 1);
        assert_eq!(arf(&hyp_form(1, 0)).unwrap(), 0);
        assert_eq!(gauss_sum_z2(&hyp_form(1, 0)), 2);
    }

    #[test]
    fn gauss_oracle_examples() {
        assert_eq!(gauss_sum_z2(&hyp_form(0, 0)), 2);
        assert_eq!(arf_gauss_oracle(&hyp_form(0, 0)).unwrap(), 0);
        assert_eq!(gauss_sum_z2(&hyp_form(1, 1)), -2);
        assert_eq!(arf_gauss_oracle(&hyp_form(1, 1)).unwrap(), 1);
        let sum = hyp_form(0, 0).orthogonal_sum(&hyp_form(1, 1)).unwrap();
        assert_eq!(gauss_sum_z2(&sum), -4);
        assert_eq!(arf_gauss_oracle(&sum).unwrap(), 1);
        let degenerate = Z2QuadraticForm::from_values(
            Z2BilinearSpace::from_matrix(&[vec![0, 0], vec![0, 0]]).unwrap(),
            &[1, 0],
        )
        .unwrap();
        assert_eq!(arf_gauss_oracle(&degenerate), Err(FormError::ZeroGaussSum));
    }

    #[test]
    fn eval_matches_enhancement_law() {
        let f = hyp_form(1, 1).orthogonal_sum(&hyp_form(0, 1)).unwrap();
        for x in 0..16u64 {
            for y in 0..16u64 {
                let lhs = f.eval(x ^ y);
                let rhs = f.eval(x) ^ f.eval(y) ^ f.space().pair(x, y);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn characteristic_examples() {
        let id = Z2BilinearSpace::from_matrix(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(characteristic_elements(&id), vec![0b11]);
        assert_eq!(characteristic_elements(&Z2BilinearSpace::hyperbolic(1)), vec![0]);
        let ones = Z2BilinearSpace::from_matrix(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(characteristic_elements(&ones), vec![0b01, 0b10]);
    }

    #[test]
    fn sublagrangian_examples() {
        let id = Z2BilinearSpace::from_matrix(&[vec![1, 0], vec![0, 1]]).unwrap();
        let r = sublagrangian_reduction(&id, &[0b11]).unwrap();
        assert_eq!(r.quotient.dim(), 0);
        assert_eq!(XorBasis::from_vectors(&r.perp).vectors(), &[0b11]);

        let h2 = Z2BilinearSpace::hyperbolic(2);
        let r = sublagrangian_reduction(&h2, &[0b0001]).unwrap();
        assert_eq!(r.perp.len(), 3);
        assert_eq!(r.quotient, Z2BilinearSpace::hyperbolic(1));

        let r = sublagrangian_reduction(&h2, &[]).unwrap();
        assert_eq!(r.quotient, h2);

        assert_eq!(
            sublagrangian_reduction(&h2, &[0b0001, 0b0010]),
            Err(FormError::NotSublagrangian)
        );
    }

    #[test]
    fn enhancement_descent() {
        let f = hyp_form(0, 1).orthogonal_sum(&hyp_form(1, 1)).unwrap();
        let (_, q) = descend_enhancement(&f, &[0b0001]).unwrap();
        assert_eq!(arf(&q).unwrap(), 1);
        assert_eq!(arf(&f).unwrap(), 1);
        assert_eq!(
            descend_enhancement(&f, &[0b0100]).map(|_| ()),
            Err(FormError::NotCosetInvariant)
        );
    }

    #[test]
    fn change_basis_requires_basis() {
        let f = hyp_form(1, 0);
        assert_eq!(f.change_basis(&[0b01, 0b01]), Err(FormError::NotABasis));
        let g = f.change_basis(&[0b10, 0b01]).unwrap();
        assert_eq!(g.basis_values(), 0b10);
    }
}
