// Copyright (c) 2026, genuslab contributors
// SPDX-License-Identifier: Apache-2.0

//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;

use common::*;
use genuslab::algebra::BigInt;
use genuslab::congruence::{
    classify_and_check, defect, reduce_mod_1_minus_y2, sigma_defect, CheckMode,
};
use genuslab::forms::{
    arf, arf_gauss_oracle, brown_invariant, characteristic_reduction, lattice_signature,
    lattice_to_forms, morita_arf_check, theorem43_pipeline, IntegralLattice, Z2BilinearSpace,
    Z2QuadraticForm, Z4QuadraticForm,
};
use genuslab::genus::{
    check_duality, check_parity_identities, chi_vector_from_hodge, genus_from_chern,
    projective_space_fixture, ChiVector,
};
use genuslab::models::{builtin_catalog, catalog_entry, generate_singular_triple, generate_triple};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn odd_ys() -> Vec<i64> {
    (-99..=99).filter(|y| y % 2 != 0).collect()
}

fn criterion_1() -> Outcome {
    for n in 0..=4 {
        let (hodge, chern) = projective_space_fixture(n);
        let expected: Vec<BigInt> = (0..=n).map(|p| big(if p % 2 == 0 { 1 } else { -1 })).collect();
        let by_hodge = chi_vector_from_hodge(&hodge).chi_y();
        let by_chern = genus_from_chern(&chern).map_err(|e| e.to_string())?;
        ensure!(by_hodge.coeffs() == &expected[..], "P{n}: Hodge route {by_hodge}");
        ensure!(by_chern == by_hodge, "P{n}: Chern route {by_chern} vs {by_hodge}");
        if n % 2 == 0 {
            ensure!(sigma(&expected) == big(1), "P{n}: signature");
        }
    }
    let p2 = catalog_entry("P2").map_err(|e| e.to_string())?;
    ensure!(p2.chi.chi_y().to_string() == "1 - y + y^2", "P2 chi_y");
    Ok("P0..P4 Chern route = Hodge route = sum (-y)^p".into())
}

fn generated_e_vectors() -> Vec<ChiVector> {
    let catalog = builtin_catalog();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut out = Vec::new();
    while out.len() < 100 {
        let f = &catalog[rng.gen_range(0..catalog.len())];
        let b = &catalog[rng.gen_range(0..catalog.len())];
        let n = f.dim() + b.dim();
        if n > 8 {
            continue;
        }
        let t = if n % 2 == 0 && n >= 2 { rng.gen_range(-5..=5) } else { 0 };
        out.push(generate_triple(f, b, t, rng.gen()).expect("valid").e.chi);
    }
    out
}

fn criterion_2() -> Outcome {
    let mut vectors: Vec<(String, ChiVector)> =
        builtin_catalog().into_iter().map(|m| (m.name, m.chi)).collect();
    vectors.extend(generated_e_vectors().into_iter().map(|v| ("generated".into(), v)));
    for (name, v) in &vectors {
        let chi = v.values();
        ensure!(duality(chi), "{name}: duality");
        ensure!(parity_identities(chi), "{name}: parity identities");
        ensure!(check_duality(v) && check_parity_identities(v), "{name}: library disagrees");
        if v.dim() % 2 == 1 {
            ensure!(sigma(chi).is_zero(), "{name}: odd dimension, sigma {}", sigma(chi));
        }
    }
    Ok(format!("{} chi-vectors, exact", vectors.len()))
}

fn criterion_3() -> Outcome {
    let mut vectors: Vec<(String, ChiVector)> =
        builtin_catalog().into_iter().map(|m| (m.name, m.chi)).collect();
    vectors.extend(generated_e_vectors().into_iter().map(|v| ("generated".into(), v)));
    for (name, v) in &vectors {
        let chi = v.values();
        let (s, e) = (sigma(chi), euler(chi));
        ensure!(divisible(&(&s - &e), 2), "{name}: sigma - chi odd");
        // remainder of chi_y - [(σ+χ)/2 + (σ-χ)/2 y] must vanish at y = ±1
        let canonical = [(&s + &e) / 2, (&s - &e) / 2];
        for y in [1i64, -1] {
            let r = eval_int(chi, y) - eval_int(&canonical, y);
            ensure!(r.is_zero(), "{name}: not divisible by 1 - y^2 (y = {y})");
        }
        let reduced = reduce_mod_1_minus_y2(&v.chi_y());
        ensure!(reduced.coeffs() == genuslab::algebra::YPolynomial::new(canonical.to_vec()).coeffs(), "{name}: library reduction {reduced}");
    }
    let k3 = catalog_entry("K3").map_err(|e| e.to_string())?;
    let r = reduce_mod_1_minus_y2(&k3.chi.chi_y());
    ensure!(r.to_string() == "4 - 20*y", "K3 reduces to {r}");
    Ok(format!("{} chi-vectors divisible; K3 -> {r}", vectors.len()))
}

struct Sweep {
    triples: usize,
    checks: usize,
    odd_t_equivalences: usize,
    even_t_equivalences: usize,
    failures_mod4: Vec<String>,
    failures_thm41: Vec<String>,
}

fn congruence_sweep() -> Sweep {
    let catalog = builtin_catalog();
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce);
    let ys = odd_ys();
    let mut s = Sweep {
        triples: 0,
        checks: 0,
        odd_t_equivalences: 0,
        even_t_equivalences: 0,
        failures_mod4: vec![],
        failures_thm41: vec![],
    };
    while s.triples < 240 {
        let f = &catalog[rng.gen_range(0..catalog.len())];
        let b = &catalog[rng.gen_range(0..catalog.len())];
        let n = f.dim() + b.dim();
        if n > 8 {
            continue;
        }
        let t: i64 = if n % 2 == 0 && n >= 2 { rng.gen_range(-5..=5) } else { 0 };
        let seed: u64 = rng.gen();
        let tr = generate_triple(f, b, t, seed).expect("valid generator input");
        s.triples += 1;
        let (ev, fv, bv) = (tr.e.chi.values(), tr.f.chi.values(), tr.b.chi.values());
        let fb = poly_mul(fv, bv);
        let sd = sigma(ev) - sigma(fv) * sigma(bv);
        if sd != big(4 * t) {
            s.failures_mod4.push(format!("{} x {} t={t}: sigma-defect {sd}", f.name, b.name));
        }
        let dpoly = defect(&tr.e.chi, &tr.f.chi, &tr.b.chi);
        let lib_sd = sigma_defect(&tr.e.chi, &tr.f.chi, &tr.b.chi);
        for &y in &ys {
            s.checks += 1;
            let d = eval_int(ev, y) - eval_int(&fb, y);
            let label = format!("{} x {} t={t} seed={seed} y={y}", f.name, b.name);
            if !divisible(&d, 4) {
                s.failures_mod4.push(format!("{label}: defect {d}"));
            }
            if y.rem_euclid(4) == 3 {
                if !divisible(&d, 8) {
                    s.failures_thm41.push(format!("{label}: defect {d} not 0 mod 8"));
                }
            } else {
                if divisible(&d, 8) != divisible(&sd, 8) {
                    s.failures_thm41.push(format!("{label}: defect {d} vs sigma-defect {sd}"));
                }
                if t % 2 != 0 {
                    s.odd_t_equivalences += 1;
                } else {
                    s.even_t_equivalences += 1;
                }
            }
            match classify_and_check(&dpoly, &lib_sd, y, CheckMode::smooth()) {
                Ok(r) if r.ok() && r.defect_value == d => {}
                _ => s.failures_thm41.push(format!("{label}: library report disagrees")),
            }
        }
    }
    s
}

fn criteria_4_and_5() -> (Outcome, Outcome) {
    let s = congruence_sweep();
    let c4 = if s.triples >= 200 && s.failures_mod4.is_empty() {
        Ok(format!("{} triples x {} odd y = {} checks, 0 failures", s.triples, odd_ys().len(), s.checks))
    } else {
        Err(format!(
            "{} failures, first: {:?}",
            s.failures_mod4.len(),
            s.failures_mod4.first()
        ))
    };
    let c5 = if !s.failures_thm41.is_empty() {
        Err(format!(
            "{} failures, first: {:?}",
            s.failures_thm41.len(),
            s.failures_thm41.first()
        ))
    } else if s.odd_t_equivalences == 0 || s.even_t_equivalences == 0 {
        Err("equivalence not exercised in both directions".into())
    } else {
        Ok(format!(
            "mod 8 at y = 3 mod 4; equivalence at y = 1 mod 4 on {} odd-t and {} even-t cases",
            s.odd_t_equivalences, s.even_t_equivalences
        ))
    };
    (c4, c5)
}

fn matrix_of(space: &Z2BilinearSpace) -> Vec<Vec<u8>> {
    (0..space.dim())
        .map(|i| (0..space.dim()).map(|j| space.entry(i, j)).collect())
        .collect()
}

fn values_of(f: &Z2QuadraticForm) -> Vec<u8> {
    (0..f.space().dim()).map(|i| f.eval(1 << i)).collect()
}

fn alternating_matrices(dim: usize) -> Vec<Vec<Vec<u8>>> {
    let slots: Vec<(usize, usize)> =
        (0..dim).flat_map(|i| (i + 1..dim).map(move |j| (i, j))).collect();
    (0..1u64 << slots.len())
        .map(|bits| {
            let mut m = vec![vec![0u8; dim]; dim];
            for (k, &(i, j)) in slots.iter().enumerate() {
                let b = ((bits >> k) & 1) as u8;
                m[i][j] = b;
                m[j][i] = b;
            }
            m
        })
        .filter(|m| rank_gf2(m) == dim)
        .collect()
}

fn random_transvections(m: &[Vec<u8>], rng: &mut ChaCha8Rng) -> Vec<u64> {
    let dim = m.len();
    let mut rows: Vec<u64> = (0..dim).map(|i| 1 << i).collect();
    for _ in 0..rng.gen_range(1..=6) {
        let v: u64 = rng.gen_range(1..1u64 << dim);
        for r in rows.iter_mut() {
            if pair(m, *r, v) == 1 {
                *r ^= v;
            }
        }
    }
    rows
}

fn check_arf_form(m: &[Vec<u8>], h: &[u8], rng: &mut ChaCha8Rng) -> Result<(), String> {
    let space = Z2BilinearSpace::from_matrix(&to_i64_matrix(m)).map_err(|e| e.to_string())?;
    let f = Z2QuadraticForm::from_values(space, h).map_err(|e| e.to_string())?;
    let expected = arf_by_majority(m, h);
    let a = arf(&f).map_err(|e| e.to_string())?;
    ensure!(a == expected, "arf {a} vs majority {expected} for {m:?} {h:?}");
    ensure!(arf_gauss_oracle(&f) == Ok(a), "library Gauss oracle disagrees");
    for _ in 0..10 {
        let rows = random_transvections(m, rng);
        let g = f.change_basis(&rows).map_err(|e| e.to_string())?;
        ensure!(matrix_of(g.space()) == m, "transvection changed the form");
        ensure!(arf(&g) == Ok(a), "arf changed under basis change {rows:?}");
        ensure!(arf_by_majority(m, &values_of(&g)) == a, "oracle changed under basis change");
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut exhaustive = 0;
    for dim in [2, 4] {
        for m in alternating_matrices(dim) {
            for bits in 0..1u64 << dim {
                let h: Vec<u8> = (0..dim).map(|i| ((bits >> i) & 1) as u8).collect();
                check_arf_form(&m, &h, &mut rng)?;
                exhaustive += 1;
            }
        }
    }
    let forms6 = alternating_matrices(6);
    let sampled = 1000;
    for _ in 0..sampled {
        let m = &forms6[rng.gen_range(0..forms6.len())];
        let h: Vec<u8> = (0..6).map(|_| rng.gen_range(0..2)).collect();
        check_arf_form(m, &h, &mut rng)?;
    }
    Ok(format!(
        "{exhaustive} exhaustive (dim 2, 4) + {sampled} sampled (dim 6), 10 basis changes each"
    ))
}

fn random_z4(rng: &mut ChaCha8Rng, dim: usize) -> (Vec<Vec<u8>>, Vec<i64>) {
    loop {
        let mut m = vec![vec![0u8; dim]; dim];
        for i in 0..dim {
            for j in i..dim {
                let b = rng.gen_range(0..2);
                m[i][j] = b;
                m[j][i] = b;
            }
        }
        if rank_gf2(&m) == dim {
            let q = (0..dim)
                .map(|i| m[i][i] as i64 + 2 * rng.gen_range(0..2i64))
                .collect();
            return (m, q);
        }
    }
}

fn z4(m: &[Vec<u8>], q: &[i64]) -> Z4QuadraticForm {
    let space = Z2BilinearSpace::from_matrix(&to_i64_matrix(m)).expect("valid");
    Z4QuadraticForm::new(space, q).expect("refinement")
}

fn block_sum(a: &[Vec<u8>], b: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let n = a.len() + b.len();
    let mut m = vec![vec![0u8; n]; n];
    for (i, r) in a.iter().enumerate() {
        m[i][..a.len()].copy_from_slice(r);
    }
    for (i, r) in b.iter().enumerate() {
        m[a.len() + i][a.len()..].copy_from_slice(r);
    }
    m
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let pairs = 500;
    for _ in 0..pairs {
        let da = rng.gen_range(1..=3);
        let db = rng.gen_range(1..=6 - da);
        let (ma, qa) = random_z4(&mut rng, da);
        let (mb, qb) = random_z4(&mut rng, db);
        let (fa, fb) = (z4(&ma, &qa), z4(&mb, &qb));
        let sum = fa.orthogonal_sum(&fb).map_err(|e| e.to_string())?;
        let (ba, bb) = (brown_invariant(&fa), brown_invariant(&fb));
        let bs = brown_invariant(&sum).map_err(|e| e.to_string())?;
        let (ba, bb) = (ba.map_err(|e| e.to_string())?, bb.map_err(|e| e.to_string())?);
        ensure!(ba == brown_by_angle(&ma, &qa), "brown {ba} vs angle oracle for {ma:?} {qa:?}");
        let qs: Vec<i64> = qa.iter().chain(&qb).copied().collect();
        ensure!(bs == brown_by_angle(&block_sum(&ma, &mb), &qs), "sum vs angle oracle");
        ensure!(bs == (ba + bb) % 8, "not additive: {ba} + {bb} vs {bs}");
    }
    let mut doubled = 0;
    for dim in [2, 4] {
        for m in alternating_matrices(dim) {
            for bits in 0..1u64 << dim {
                let space = Z2BilinearSpace::from_matrix(&to_i64_matrix(&m)).expect("valid");
                let h = Z2QuadraticForm::new(space, bits);
                let b = brown_invariant(&Z4QuadraticForm::doubled(&h)).map_err(|e| e.to_string())?;
                let a = arf_by_majority(&m, &values_of(&h));
                ensure!(b == 4 * a, "brown(2h) = {b}, arf = {a}");
                doubled += 1;
            }
        }
    }
    let mut lattices: Vec<(String, IntegralLattice, i64, i64)> = Vec::new();
    for dim in 1..=8usize {
        for signs in 0..1u32 << dim {
            let e: Vec<i64> = (0..dim).map(|i| if (signs >> i) & 1 == 1 { -1 } else { 1 }).collect();
            // characteristic vector: all ones, v.v = Σ e_i
            let vv: i64 = e.iter().sum();
            lattices.push((format!("diag{e:?}"), IntegralLattice::diagonal(&e).expect("diag"), diagonal_signature(&e), vv));
        }
    }
    lattices.push(("E8".into(), IntegralLattice::e8(), 8, 0));
    let mut morita = 0;
    for (name, l, sig, vv) in &lattices {
        ensure!(lattice_signature(l) == Ok(*sig), "{name}: signature");
        ensure!((sig - vv).rem_euclid(8) == 0, "{name}: van der Blij oracle");
        let model = lattice_to_forms(l).map_err(|e| e.to_string())?;
        if l.dim() <= 8 {
            let b = brown_invariant(model.p2()).map_err(|e| e.to_string())?;
            ensure!(b as i64 == sig.rem_euclid(8), "{name}: Brown {b} vs sigma {sig}");
        }
        if sig.rem_euclid(4) == 0 {
            let r = morita_arf_check(l).map_err(|e| format!("{name}: {e}"))?;
            ensure!(r.signature == *sig && r.characteristic_square.rem_euclid(8) == vv.rem_euclid(8), "{name}: report");
            let red = characteristic_reduction(&model).map_err(|e| e.to_string())?;
            let oracle = arf_by_majority(&matrix_of(red.enhancement.space()), &values_of(&red.enhancement));
            ensure!(r.arf == oracle, "{name}: Arf {} vs oracle {oracle}", r.arf);
            ensure!((sig - 4 * r.arf as i64).rem_euclid(8) == 0, "{name}: 4 Arf vs sigma");
            morita += 1;
        }
    }
    let d4 = morita_arf_check(&IntegralLattice::diagonal(&[1, 1, 1, 1]).expect("diag"))
        .map_err(|e| e.to_string())?;
    let e8 = morita_arf_check(&IntegralLattice::e8()).map_err(|e| e.to_string())?;
    ensure!(d4.arf == 1 && e8.arf == 0, "diag(1,1,1,1) Arf {}, E8 Arf {}", d4.arf, e8.arf);
    Ok(format!(
        "{pairs} additive pairs, {doubled} doubled forms, {} lattices ({morita} with Arf check); diag(1,1,1,1) -> 1, E8 -> 0",
        lattices.len()
    ))
}

fn criterion_8() -> Outcome {
    let h = IntegralLattice::hyperbolic();
    let d4 = IntegralLattice::diagonal(&[1, 1, 1, 1]).expect("diag");
    let set = [
        ("diag(1,1,1,1)", d4.clone(), 4i64),
        ("H+H", h.orthogonal_sum(&h).expect("sum"), 0),
        ("E8", IntegralLattice::e8(), 8),
        ("diag(1x8)", IntegralLattice::diagonal(&[1; 8]).expect("diag"), 8),
        ("diag(1,1,1,1)+H", d4.orthogonal_sum(&h).expect("sum"), 4),
    ];
    let mut count = 0;
    for (na, a, sa) in &set {
        for (nb, b, sb) in &set {
            let sd = sa - sb;
            if sd.rem_euclid(4) != 0 {
                continue;
            }
            let (ma, mb) = (lattice_to_forms(a).map_err(|e| e.to_string())?, lattice_to_forms(b).map_err(|e| e.to_string())?);
            let diff = ma.difference(&mb).map_err(|e| e.to_string())?;
            let red = characteristic_reduction(&diff).map_err(|e| format!("{na} vs {nb}: {e}"))?;
            ensure!(red.perp_by_squares == red.perp_by_pairing, "{na} vs {nb}: perp descriptions differ");
            let r = theorem43_pipeline(&ma, &mb).map_err(|e| format!("{na} vs {nb}: {e}"))?;
            let oracle = arf_by_majority(&matrix_of(r.form.space()), &values_of(&r.form));
            ensure!(r.arf == oracle, "{na} vs {nb}: Arf {} vs oracle {oracle}", r.arf);
            ensure!((4 * r.arf as i64 - sd).rem_euclid(8) == 0, "{na} vs {nb}: 4 Arf = {} vs sigma-defect {sd}", 4 * r.arf);
            count += 1;
        }
    }
    let r = theorem43_pipeline(
        &lattice_to_forms(&set[0].1).map_err(|e| e.to_string())?,
        &lattice_to_forms(&set[1].1).map_err(|e| e.to_string())?,
    )
    .map_err(|e| e.to_string())?;
    ensure!(r.arf == 1, "diag(1,1,1,1) vs H+H gives Arf {}", r.arf);
    Ok(format!("{count} pairs; diag(1,1,1,1) vs H+H -> Arf 1, W dim {}", r.w_dim))
}

fn criterion_9() -> Outcome {
    let ys = odd_ys();
    let triples = 200;
    let (mut both_zero, mut both_nonzero) = (0, 0);
    for seed in 0..triples {
        let t = generate_singular_triple(1 + seed as usize % 4, seed as usize % 3, seed);
        let (ev, fv, bv) = (t.e.chi.values(), t.f.chi.values(), t.b.chi.values());
        ensure!(euler(ev) == euler(fv) * euler(bv), "seed {seed}: Euler");
        let sd = sigma(ev) - sigma(fv) * sigma(bv);
        ensure!(divisible(&sd, 2), "seed {seed}: sigma-defect {sd} odd");
        let fb = poly_mul(fv, bv);
        let dpoly = defect(&t.e.chi, &t.f.chi, &t.b.chi);
        for &y in &ys {
            let d = eval_int(ev, y) - eval_int(&fb, y);
            ensure!(divisible(&d, 2), "seed {seed} y {y}: defect {d} odd");
            if y.rem_euclid(4) == 3 {
                ensure!(divisible(&d, 4), "seed {seed} y {y}: defect {d} not 0 mod 4");
            } else {
                ensure!(divisible(&d, 4) == divisible(&sd, 4), "seed {seed} y {y}: {d} vs {sd}");
                if divisible(&sd, 4) {
                    both_zero += 1;
                } else {
                    both_nonzero += 1;
                }
            }
            let r = classify_and_check(&dpoly, &sd, y, CheckMode::singular()).map_err(|e| e.to_string())?;
            ensure!(r.ok() && r.defect_value == d, "seed {seed} y {y}: library report");
        }
    }
    ensure!(both_zero > 0 && both_nonzero > 0, "equivalence not exercised both ways");
    Ok(format!("{triples} singular triples x {} odd y; mod 2 / mod 4 and mod-4 equivalence", ys.len()))
}

fn bin() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_genuslab"))
}

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("fixtures")
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(bin())
        .args(args)
        .current_dir(fixtures())
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn criterion_10() -> Outcome {
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden");
    let cases: [(&str, &[&str]); 3] = [
        ("genus_k3.json", &["genus", "--json", "k3.json"]),
        ("check_bundle_p1.json", &["check-bundle", "--json", "p1_twisted_p1.json", "--y-sweep", "3..5"]),
        ("pipeline_diag_hh.json", &["pipeline", "--json", "diag1111.json", "hh.json"]),
    ];
    for (file, args) in cases {
        let expected = std::fs::read(golden.join(file)).map_err(|e| format!("{file}: {e}"))?;
        let (code, first) = run_cli(args);
        let (_, second) = run_cli(args);
        ensure!(code == 0, "{file}: exit {code}");
        ensure!(first == expected, "{file}: output differs from golden file");
        ensure!(first == second, "{file}: output not deterministic");
    }
    let (code, _) = run_cli(&["check-bundle", "p1_twisted_p1_monodromy.json", "--y-sweep", "5..5"]);
    ensure!(code == 1, "congruence failure exit {code}");
    let (code, _) = run_cli(&["genus", "duality_violation.json"]);
    ensure!(code == 2, "validation error exit {code}");
    let (code, _) = run_cli(&["genus", "missing.json"]);
    ensure!(code == 2, "missing file exit {code}");
    Ok("3 golden reports byte-identical; exit codes 0 / 1 / 2".into())
}

fn guarded(f: impl FnOnce() -> Outcome) -> Outcome {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    })
}

fn main() {
    let (c4, c5) = catch_unwind(criteria_4_and_5)
        .unwrap_or_else(|_| (Err("panicked".into()), Err("panicked".into())));
    let results: Vec<(u32, &str, Outcome)> = vec![
        (1, "dual-route genus", guarded(criterion_1)),
        (2, "duality and parity identities", guarded(criterion_2)),
        (3, "reduction mod 1 - y^2", guarded(criterion_3)),
        (4, "defect = 0 mod 4", c4),
        (5, "mod 8 clauses", c5),
        (6, "Arf vs Gauss sum", guarded(criterion_6)),
        (7, "Brown, van der Blij, Morita", guarded(criterion_7)),
        (8, "characteristic reduction pipeline", guarded(criterion_8)),
        (9, "singular mode", guarded(criterion_9)),
        (10, "CLI golden files and exit codes", guarded(criterion_10)),
    ];
    let mut failed = 0;
    for (n, name, r) in &results {
        match r {
            Ok(detail) => println!("criterion {n:>2} PASS {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {n:>2} FAIL {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
