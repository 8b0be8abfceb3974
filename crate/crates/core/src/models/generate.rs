// Copyright (c) 2026, genuslab contributors
// SPDX-License-Identifier: Apache-2.0

//! Synthetic bundle triples at the chi-vector level.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{builtin_catalog, BundleTriple, ManifoldModel, ModelError, Provenance};
use crate::genus::{product_chi_vector, ChiVector};

/// Adds `sign` at `χ^p, χ^{n-p}` and at `χ^{p'}, χ^{n-p'}` (twice at the
/// middle index). Changes σ by `4 sign` and leaves χ and duality intact.
pub fn apply_move(chi: &ChiVector, even_p: usize, odd_p: usize, sign: i64) -> ChiVector {
    let n = chi.dim();
    assert!(n % 2 == 0 && even_p % 2 == 0 && odd_p % 2 == 1 && even_p <= n && odd_p <= n);
    let mut values = chi.values().to_vec();
    for p in [even_p, n - even_p, odd_p, n - odd_p] {
        values[p] += BigInt::from(sign);
    }
    ChiVector::new(n, values).expect("length preserved")
}

fn product_model(f: &ManifoldModel, b: &ManifoldModel, chi: ChiVector) -> ManifoldModel {
    ManifoldModel::from_chi(format!("E({}, {})", f.name, b.name), chi)
}

/// `E = F × B` twisted by `|t|` moves of sign `sign(t)`; σ-defect is `4t`.
pub fn generate_triple(
    f: &ManifoldModel,
    b: &ManifoldModel,
    t: i64,
    seed: u64,
) -> Result<BundleTriple, ModelError> {
    if f.singular || b.singular {
        return Err(ModelError::invariant("F/B", "generator needs non-singular F and B"));
    }
    let base = product_chi_vector(&f.chi, &b.chi);
    let n = base.dim();
    if t != 0 && (n % 2 != 0 || n < 2) {
        return Err(ModelError::invariant(
            "t",
            format!("t = {t} needs even total dimension at least 2, got n = {n}"),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chi = base;
    for _ in 0..t.unsigned_abs() {
        let even_p = 2 * rng.gen_range(0..=n / 2);
        let odd_p = 2 * rng.gen_range(0..n / 2) + 1;
        chi = apply_move(&chi, even_p, odd_p, t.signum());
    }
    Ok(BundleTriple {
        f: f.clone(),
        e: product_model(f, b, chi),
        b: b.clone(),
        monodromy_mod4_trivial: false,
        provenance: Provenance::Generated,
    })
}

/// Triples of unconstrained chi-vectors with `χ(E) = χ(F) χ(B)`; all three
/// spaces are flagged singular.
pub fn generate_singular_triple(nf: usize, nb: usize, seed: u64) -> BundleTriple {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random_chi = |n: usize, lo: i64, hi: i64| -> Vec<BigInt> {
        (0..=n).map(|_| BigInt::from(rng.gen_range(lo..=hi))).collect()
    };
    let fv = ChiVector::new(nf, random_chi(nf, -5, 5)).expect("length");
    let bv = ChiVector::new(nb, random_chi(nb, -5, 5)).expect("length");
    let n = nf + nb;
    let mut delta = random_chi(n, -3, 3);
    let alternating: BigInt = delta
        .iter()
        .enumerate()
        .skip(1)
        .map(|(p, d)| if p % 2 == 0 { d.clone() } else { -d })
        .sum();
    delta[0] = -alternating;
    let product = product_chi_vector(&fv, &bv);
    let ev: Vec<BigInt> = product.values().iter().zip(&delta).map(|(a, d)| a + d).collect();
    let singular = |name: &str, chi: ChiVector| ManifoldModel {
        singular: true,
        ..ManifoldModel::from_chi(name, chi)
    };
    BundleTriple {
        f: singular("F", fv),
        e: singular("E", ChiVector::new(n, ev).expect("length")),
        b: singular("B", bv),
        monodromy_mod4_trivial: false,
        provenance: Provenance::Generated,
    }
}

/// `count` generated triples over random catalog pairs with `t ∈ [-5, 5]`,
/// paired with their `t`. Odd total dimension forces `t = 0`.
pub fn sample_triples(count: usize, seed: u64) -> Vec<(BundleTriple, i64)> {
    let catalog = builtin_catalog();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let f = &catalog[rng.gen_range(0..catalog.len())];
        let b = &catalog[rng.gen_range(0..catalog.len())];
        let n = f.dim() + b.dim();
        if n > 8 {
            continue;
        }
        let t = if n % 2 == 0 && n >= 2 { rng.gen_range(-5..=5) } else { 0 };
        let triple = generate_triple(f, b, t, rng.gen()).expect("preconditions checked");
        out.push((triple, t));
    }
    out
}
