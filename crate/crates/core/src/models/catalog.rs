// Copyright (c) 2026, genuslab contributors
// SPDX-License-Identifier: Apache-2.0

//! Built-in fixtures: point, projective spaces, curves, K3 and products.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{ManifoldModel, ModelError};
use crate::algebra::partitions_of;
use crate::forms::IntegralLattice;
use crate::genus::{binomial, chi_vector_from_hodge, ChernData, HodgeDiamond};

/// A factor whose total Chern class lives in the subring generated by one
/// class `α` of degree `generator_degree` with `α^top_power = [pt]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernFactor {
    pub name: String,
    pub generator_degree: usize,
    pub top_power: usize,
    /// `c = Σ_k coeffs[k] α^k`.
    pub coeffs: Vec<BigInt>,
    pub hodge: HodgeDiamond,
}

impl ChernFactor {
    pub fn projective(n: usize) -> Self {
        let mut h = vec![vec![BigInt::zero(); n + 1]; n + 1];
        for (p, row) in h.iter_mut().enumerate() {
            row[p] = 1.into();
        }
        ChernFactor {
            name: format!("P{n}"),
            generator_degree: 1,
            top_power: n,
            coeffs: (0..=n as u64).map(|k| binomial(n as u64 + 1, k)).collect(),
            hodge: HodgeDiamond::new(n, h).expect("diagonal diamond"),
        }
    }

    /// Smooth projective curve of genus `g`; `c = 1 + (2 - 2g)[pt]`.
    pub fn curve(g: u64, name: &str) -> Self {
        ChernFactor {
            name: name.into(),
            generator_degree: 1,
            top_power: 1,
            coeffs: vec![1.into(), BigInt::from(2) - BigInt::from(2 * g)],
            hodge: HodgeDiamond::from_u64s(&[&[1, g], &[g, 1]]).expect("2x2"),
        }
    }

    /// `c₁ = 0`, `c₂ = 24 [pt]`.
    pub fn k3() -> Self {
        ChernFactor {
            name: "K3".into(),
            generator_degree: 2,
            top_power: 1,
            coeffs: vec![1.into(), 24.into()],
            hodge: HodgeDiamond::from_u64s(&[&[1, 0, 1], &[0, 20, 0], &[1, 0, 1]]).expect("3x3"),
        }
    }

    fn dim(&self) -> usize {
        self.generator_degree * self.top_power
    }
}

type Monomial = Vec<usize>;
type RingElem = BTreeMap<Monomial, BigInt>;

fn ring_mul(a: &RingElem, b: &RingElem, tops: &[usize]) -> RingElem {
    let mut out = RingElem::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: Monomial = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            if m.iter().zip(tops).any(|(e, t)| e > t) {
                continue;
            }
            *out.entry(m).or_insert_with(BigInt::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Chern numbers of `∏ factors`, using `c(X × Y) = c(X) c(Y)`.
pub(crate) fn product_chern(factors: &[ChernFactor]) -> ChernData {
    let k = factors.len();
    let tops: Vec<usize> = factors.iter().map(|f| f.top_power).collect();
    let n: usize = factors.iter().map(ChernFactor::dim).sum();
    let mut total = RingElem::new();
    total.insert(vec![0; k], BigInt::from(1));
    for (j, f) in factors.iter().enumerate() {
        let mut cf = RingElem::new();
        for (e, c) in f.coeffs.iter().enumerate() {
            if !c.is_zero() && e <= f.top_power {
                let mut m = vec![0; k];
                m[j] = e;
                cf.insert(m, c.clone());
            }
        }
        total = ring_mul(&total, &cf, &tops);
    }
    let degree = |m: &Monomial| -> usize {
        m.iter().zip(factors).map(|(e, f)| e * f.generator_degree).sum()
    };
    let chern_class = |i: usize| -> RingElem {
        total
            .iter()
            .filter(|(m, _)| degree(m) == i)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect()
    };
    let mut numbers = BTreeMap::new();
    for part in partitions_of(n) {
        let mut prod = RingElem::new();
        prod.insert(vec![0; k], BigInt::from(1));
        for &i in part.parts() {
            prod = ring_mul(&prod, &chern_class(i as usize), &tops);
        }
        let value = prod.get(&tops).cloned().unwrap_or_else(BigInt::zero);
        numbers.insert(part, value);
    }
    ChernData::new(n, numbers).expect("all partitions present")
}

fn from_factors(name: &str, factors: &[ChernFactor], lattice: Option<IntegralLattice>) -> ManifoldModel {
    let hodge = factors
        .iter()
        .skip(1)
        .fold(factors[0].hodge.clone(), |acc, f| acc.product(&f.hodge));
    ManifoldModel {
        name: name.into(),
        chi: chi_vector_from_hodge(&hodge),
        hodge: Some(hodge),
        chern: Some(product_chern(factors)),
        lattice,
        singular: false,
    }
}

fn gram(rows: &[&[i64]]) -> IntegralLattice {
    IntegralLattice::new(rows.iter().map(|r| r.to_vec()).collect()).expect("fixture lattice")
}

/// Every entry passes [`ManifoldModel::validate`], including the Hodge/Chern
/// cross-check.
pub fn builtin_catalog() -> Vec<ManifoldModel> {
    let p = ChernFactor::projective;
    let e = || ChernFactor::curve(1, "E");
    let c2 = || ChernFactor::curve(2, "C2");
    let c3 = || ChernFactor::curve(3, "C3");
    let k3 = ChernFactor::k3;
    let one = || gram(&[&[1]]);
    let h = IntegralLattice::hyperbolic;
    let hhh = || h().orthogonal_sum(&h()).and_then(|l| l.orthogonal_sum(&h())).expect("6");

    vec![
        from_factors("point", &[p(0)], Some(one())),
        from_factors("P1", &[p(1)], None),
        from_factors("P2", &[p(2)], Some(one())),
        from_factors("P3", &[p(3)], None),
        from_factors("P4", &[p(4)], Some(one())),
        from_factors("E", &[e()], None),
        from_factors("C2", &[c2()], None),
        from_factors("C3", &[c3()], None),
        from_factors("K3", &[k3()], Some(IntegralLattice::k3())),
        from_factors("P1xP1", &[p(1), p(1)], Some(h())),
        from_factors("P1xP2", &[p(1), p(2)], None),
        from_factors("P1xP3", &[p(1), p(3)], Some(h())),
        from_factors(
            "P2xP2",
            &[p(2), p(2)],
            Some(gram(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])),
        ),
        from_factors("P1xE", &[p(1), e()], Some(h())),
        from_factors("P1xC2", &[p(1), c2()], Some(h())),
        from_factors("ExE", &[e(), e()], Some(hhh())),
        from_factors("C2xC3", &[c2(), c3()], None),
        from_factors("P1xP1xP1", &[p(1), p(1), p(1)], None),
        from_factors("K3xP1", &[k3(), p(1)], None),
        from_factors("K3xE", &[k3(), e()], None),
        from_factors("K3xP2", &[k3(), p(2)], None),
        from_factors("K3xK3", &[k3(), k3()], None),
        from_factors("P2xC2", &[p(2), c2()], None),
    ]
}

pub fn catalog_entry(name: &str) -> Result<ManifoldModel, ModelError> {
    builtin_catalog()
        .into_iter()
        .find(|m| m.name == name)
        .ok_or_else(|| ModelError::UnknownCatalog(name.into()))
}
