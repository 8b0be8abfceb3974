// Copyright (c) 2026, genuslab contributors
// SPDX-License-Identifier: Apache-2.0

//! Runtime cross-checks over the catalog, generated triples and form fixtures.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::congruence::{
    check_triple, odd_values, proposition35_canonical, reduce_mod_1_minus_y2, CheckMode,
    DEFAULT_SWEEP,
};
use crate::forms::{
    arf, arf_gauss_oracle, brown_invariant, lattice_signature, lattice_to_forms,
    morita_arf_check, theorem43_pipeline, IntegralLattice, Z2BilinearSpace, Z2QuadraticForm,
    Z4QuadraticForm, MAX_ENUM_DIM,
};
use crate::genus::{
    check_duality, check_parity_identities, chi_vector_from_hodge, genus_from_chern, specialize,
    ChiVector,
};
use crate::models::{builtin_catalog, generate_singular_triple, sample_triples};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, failures: Vec<String>, total: usize) -> Check {
    Check {
        name,
        passed: failures.is_empty(),
        detail: match failures.first() {
            None => format!("{total} cases"),
            Some(f) => format!("{} of {total} failed, first: {f}", failures.len()),
        },
    }
}

fn chi_identities(v: &ChiVector, label: &str, out: &mut Vec<String>) {
    if !check_duality(v) {
        out.push(format!("{label}: duality"));
    }
    if !check_parity_identities(v) {
        out.push(format!("{label}: parity identities"));
    }
    let s = specialize(&v.chi_y());
    match proposition35_canonical(&s.signature, &s.euler) {
        Ok(c) if c == reduce_mod_1_minus_y2(&v.chi_y()) => {}
        _ => out.push(format!("{label}: reduction mod 1 - y^2")),
    }
}

fn catalog_routes() -> Check {
    let mut failures = Vec::new();
    let cat = builtin_catalog();
    for m in &cat {
        if let Err(e) = m.validate() {
            failures.push(format!("{}: {e}", m.name));
        }
        if let (Some(h), Some(c)) = (&m.hodge, &m.chern) {
            match genus_from_chern(c) {
                Ok(g) if g == chi_vector_from_hodge(h).chi_y() => {}
                _ => failures.push(format!("{}: Chern and Hodge routes differ", m.name)),
            }
        }
    }
    check("catalog dual-route genus", failures, cat.len())
}

fn catalog_identities() -> Check {
    let mut failures = Vec::new();
    let cat = builtin_catalog();
    for m in &cat {
        chi_identities(&m.chi, &m.name, &mut failures);
        if m.dim() % 2 == 1 && !m.signature().is_zero() {
            failures.push(format!("{}: odd dimension with nonzero signature", m.name));
        }
    }
    check("catalog duality, parity and reduction", failures, cat.len())
}

fn generated_congruences() -> Vec<Check> {
    let triples = sample_triples(200, 0x5e1f);
    let ys = odd_values(DEFAULT_SWEEP.0, DEFAULT_SWEEP.1).expect("nonempty");
    let mut identity_failures = Vec::new();
    let mut congruence_failures = Vec::new();
    for (i, (t, _)) in triples.iter().enumerate() {
        chi_identities(&t.e.chi, &format!("triple {i}"), &mut identity_failures);
        let reports = check_triple(&t.e.chi, &t.f.chi, &t.b.chi, &ys, CheckMode::smooth())
            .expect("odd y");
        if let Some(r) = reports.iter().find(|r| !r.ok()) {
            congruence_failures.push(format!("triple {i} ({}) at y = {}", t.e.name, r.y));
        }
    }
    vec![
        check("generated duality, parity and reduction", identity_failures, triples.len()),
        check("generated mod 4 / mod 8 congruences", congruence_failures, triples.len()),
    ]
}

fn singular_congruences() -> Check {
    let ys = odd_values(DEFAULT_SWEEP.0, DEFAULT_SWEEP.1).expect("nonempty");
    let mut failures = Vec::new();
    let count = 100;
    for seed in 0..count {
        let t = generate_singular_triple(1 + seed as usize % 3, seed as usize % 4, seed);
        let reports = check_triple(&t.e.chi, &t.f.chi, &t.b.chi, &ys, CheckMode::singular())
            .expect("odd y");
        if let Some(r) = reports.iter().find(|r| !r.ok()) {
            failures.push(format!("seed {seed} at y = {}", r.y));
        }
    }
    check("singular mod 2 / mod 4 congruences", failures, count as usize)
}

fn arf_agreement() -> Check {
    let mut failures = Vec::new();
    let mut total = 0;
    for k in 1..=2 {
        let space = Z2BilinearSpace::hyperbolic(k);
        for h in 0..(1u64 << (2 * k)) {
            total += 1;
            let f = Z2QuadraticForm::new(space.clone(), h);
            let a = arf(&f);
            let brown = brown_invariant(&Z4QuadraticForm::doubled(&f));
            if a.is_err() || a != arf_gauss_oracle(&f) {
                failures.push(format!("dim {} h = {h:b}: Arf vs Gauss sum", 2 * k));
            } else if brown.ok().map(|b| b as u32) != a.ok().map(|a| 4 * a as u32) {
                failures.push(format!("dim {} h = {h:b}: Brown(2h) != 4 Arf(h)", 2 * k));
            }
        }
    }
    check("Arf vs Gauss sum, Brown of 2h", failures, total)
}

fn lattice_fixtures() -> Vec<(String, IntegralLattice)> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for n in 1..=8 {
        let entries: Vec<i64> = (0..n).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
        out.push((
            format!("diag{entries:?}"),
            IntegralLattice::diagonal(&entries).expect("diagonal"),
        ));
    }
    out.push(("E8".into(), IntegralLattice::e8()));
    out.push(("K3".into(), IntegralLattice::k3()));
    out
}

fn van_der_blij_and_morita() -> Check {
    let mut failures = Vec::new();
    let fixtures = lattice_fixtures();
    for (name, l) in &fixtures {
        let sigma = lattice_signature(l).expect("unimodular");
        if l.dim() <= MAX_ENUM_DIM {
            let brown = lattice_to_forms(l)
                .ok()
                .and_then(|m| brown_invariant(m.p2()).ok());
            if brown.map(|b| (sigma - b as i64).rem_euclid(8)) != Some(0) {
                failures.push(format!("{name}: Brown != sigma mod 8"));
            }
        }
        if sigma.rem_euclid(4) == 0 {
            match morita_arf_check(l) {
                Ok(r) if r.van_der_blij && r.consistent => {}
                _ => failures.push(format!("{name}: van der Blij / 4 Arf")),
            }
        }
    }
    check("Brown, van der Blij and Morita Arf", failures, fixtures.len())
}

fn pipeline_pairs() -> Check {
    let h = IntegralLattice::hyperbolic();
    let d4 = IntegralLattice::diagonal(&[1, 1, 1, 1]).expect("diag");
    let lattices = vec![
        ("diag(1,1,1,1)", d4.clone()),
        ("H+H", h.orthogonal_sum(&h).expect("sum")),
        ("E8", IntegralLattice::e8()),
        ("diag(1x8)", IntegralLattice::diagonal(&[1; 8]).expect("diag")),
        ("diag(1,1,1,1)+H", d4.orthogonal_sum(&h).expect("sum")),
    ];
    let mut failures = Vec::new();
    let mut total = 0;
    for (na, a) in &lattices {
        for (nb, b) in &lattices {
            let sd = lattice_signature(a).expect("sig") - lattice_signature(b).expect("sig");
            if sd.rem_euclid(4) != 0 {
                continue;
            }
            total += 1;
            let r = lattice_to_forms(a)
                .and_then(|ma| theorem43_pipeline(&ma, &lattice_to_forms(b)?));
            match r {
                Ok(r) if (4 * r.arf as i64 - sd).rem_euclid(8) == 0 => {}
                Ok(r) => failures.push(format!("{na} vs {nb}: Arf {} but sigma-defect {sd}", r.arf)),
                Err(e) => failures.push(format!("{na} vs {nb}: {e}")),
            }
        }
    }
    check("characteristic reduction pipeline", failures, total)
}

/// Every check, in a fixed order.
pub fn run_all() -> Vec<Check> {
    let mut out = vec![catalog_routes(), catalog_identities()];
    out.extend(generated_congruences());
    out.push(singular_congruences());
    out.push(arf_agreement());
    out.push(van_der_blij_and_morita());
    out.push(pipeline_pairs());
    out
}
