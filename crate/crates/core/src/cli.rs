// Copyright (c) 2026, genuslab contributors
// SPDX-License-Identifier: Apache-2.0

//! Command-line front end. Exit status: 0 when every verdict holds, 1 when
//! a checked congruence fails, 2 on input or validation errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::congruence::{
    check_triple, defect, odd_values, proposition35_canonical, reduce_mod_1_minus_y2,
    reduce_mod_y_minus_y3, remark42_canonical, sigma_defect, CheckMode, CongruenceReport,
    DEFAULT_SWEEP,
};
use crate::forms::{
    arf, arf_gauss_oracle, brown_invariant, gauss_sum_z2, gauss_sum_z4, lattice_signature,
    lattice_to_forms, lift, morita_arf_check, theorem43_pipeline, IntegralLattice,
    Z4QuadraticForm, MAX_ENUM_DIM,
};
use crate::genus::{check_duality, check_parity_identities, specialize};
use crate::json::{ints, JsonInt};
use crate::models::{
    builtin_catalog, catalog_entry, parse_document, BundleTriple, Document, ManifoldModel,
};

pub const REPORT_SCHEMA: &str = "genuslab/report/1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONGRUENCE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "genuslab", version, about = "chi_y genera, bundle congruences and quadratic form invariants")]
struct Cli {
    /// Machine-readable report on stdout; diagnostics go to stderr.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// chi_y polynomial with its Euler, Todd and signature specializations.
    Genus {
        /// Manifold document, or a catalog name with --catalog.
        input: String,
        #[arg(long)]
        catalog: bool,
    },
    /// Reduce chi_y modulo 1 - y^2 or y - y^3 and compare with the canonical form.
    Reduce {
        input: String,
        #[arg(long = "mod", value_enum, default_value = "1-y2")]
        modulus: Modulus,
        #[arg(long)]
        catalog: bool,
    },
    /// Check the multiplicativity congruences of a bundle triple.
    CheckBundle {
        triple: PathBuf,
        /// Inclusive range A..B; only odd y are checked.
        #[arg(long, allow_hyphen_values = true)]
        y_sweep: Option<String>,
        /// Use the weaker singular-variety moduli.
        #[arg(long)]
        singular: bool,
    },
    /// Arf invariant of a Z/2 quadratic enhancement.
    Arf { form: PathBuf },
    /// Brown invariant of a Z/4 form or of a unimodular lattice.
    Brown { form: PathBuf },
    /// Reduce (E) ⊕ -(F×B) by the characteristic element and compare 4·Arf with the signature defect.
    Pipeline { lattice_e: PathBuf, lattice_fb: PathBuf },
    /// List the built-in manifolds, or print one as a document.
    Catalog { name: Option<String> },
    /// Run the built-in property and catalog checks.
    Selftest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Modulus {
    #[value(name = "1-y2")]
    OneMinusY2,
    #[value(name = "y-y3")]
    YMinusY3,
}

struct Failure(i32, String);

impl<E: std::fmt::Display> From<E> for Failure
where
    E: std::error::Error,
{
    fn from(e: E) -> Self {
        Failure(EXIT_INPUT, e.to_string())
    }
}

fn input_error(msg: impl Into<String>) -> Failure {
    Failure(EXIT_INPUT, msg.into())
}

struct Outcome {
    human: Vec<String>,
    results: Value,
    status: i32,
}

#[derive(Default)]
struct Inputs {
    hasher: Sha256,
}

impl Inputs {
    fn add(&mut self, bytes: &[u8]) {
        self.hasher.update((bytes.len() as u64).to_le_bytes());
        self.hasher.update(bytes);
    }

    fn read(&mut self, path: &std::path::Path) -> Result<Document, Failure> {
        let bytes = std::fs::read(path)
            .map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?;
        self.add(&bytes);
        let text = std::str::from_utf8(&bytes)
            .map_err(|_| input_error(format!("{} is not UTF-8", path.display())))?;
        Ok(parse_document(text)?)
    }

    fn digest(self) -> String {
        hex::encode(self.hasher.finalize())
    }
}

#[derive(Serialize)]
struct Report<'a> {
    schema: &'static str,
    command: &'a str,
    args: &'a [String],
    inputs_digest: String,
    results: Value,
    exit_status: i32,
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let echo: Vec<String> = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let name = command_name(&cli.command);
    let mut inputs = Inputs::default();
    let outcome = dispatch(&cli.command, &mut inputs);
    match outcome {
        Ok(o) => {
            if cli.json {
                let report = Report {
                    schema: REPORT_SCHEMA,
                    command: name,
                    args: &echo,
                    inputs_digest: inputs.digest(),
                    results: o.results,
                    exit_status: o.status,
                };
                let text = serde_json::to_string_pretty(&report).expect("report serializes");
                let _ = writeln!(out, "{text}");
            } else {
                for line in &o.human {
                    let _ = writeln!(out, "{line}");
                }
            }
            o.status
        }
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Genus { .. } => "genus",
        Command::Reduce { .. } => "reduce",
        Command::CheckBundle { .. } => "check-bundle",
        Command::Arf { .. } => "arf",
        Command::Brown { .. } => "brown",
        Command::Pipeline { .. } => "pipeline",
        Command::Catalog { .. } => "catalog",
        Command::Selftest => "selftest",
    }
}

fn dispatch(c: &Command, inputs: &mut Inputs) -> Result<Outcome, Failure> {
    match c {
        Command::Genus { input, catalog } => genus(&manifold(input, *catalog, inputs)?),
        Command::Reduce {
            input,
            modulus,
            catalog,
        } => reduce(&manifold(input, *catalog, inputs)?, *modulus),
        Command::CheckBundle {
            triple,
            y_sweep,
            singular,
        } => {
            let t = match inputs.read(triple)? {
                Document::Triple(t) => t,
                other => return Err(wrong_kind(other.schema(), "triple")),
            };
            let (lo, hi) = match y_sweep {
                Some(s) => parse_sweep(s)?,
                None => DEFAULT_SWEEP,
            };
            check_bundle(&t, lo, hi, *singular)
        }
        Command::Arf { form } => match inputs.read(form)? {
            Document::Z2Form(f) => arf_command(&f),
            other => Err(wrong_kind(other.schema(), "z2form")),
        },
        Command::Brown { form } => match inputs.read(form)? {
            Document::Z4Form(f) => brown_command(&f, None),
            Document::Lattice { lattice, .. } => {
                let m = lattice_to_forms(&lattice)?;
                brown_command(m.p2(), Some(&lattice))
            }
            other => Err(wrong_kind(other.schema(), "z4form or lattice")),
        },
        Command::Pipeline {
            lattice_e,
            lattice_fb,
        } => {
            let e = lattice(inputs.read(lattice_e)?)?;
            let fb = lattice(inputs.read(lattice_fb)?)?;
            pipeline(&e, &fb)
        }
        Command::Catalog { name } => {
            if let Some(n) = name {
                inputs.add(n.as_bytes());
            }
            catalog(name.as_deref())
        }
        Command::Selftest => Ok(selftest()),
    }
}

fn wrong_kind(found: &str, wanted: &str) -> Failure {
    input_error(format!("expected a {wanted} document, found {found}"))
}

fn lattice(d: Document) -> Result<IntegralLattice, Failure> {
    match d {
        Document::Lattice { lattice, .. } => Ok(lattice),
        other => Err(wrong_kind(other.schema(), "lattice")),
    }
}

fn manifold(input: &str, catalog: bool, inputs: &mut Inputs) -> Result<ManifoldModel, Failure> {
    if catalog {
        inputs.add(input.as_bytes());
        return Ok(catalog_entry(input)?);
    }
    match inputs.read(std::path::Path::new(input))? {
        Document::Manifold(m) => Ok(m),
        other => Err(wrong_kind(other.schema(), "manifold")),
    }
}

fn parse_sweep(s: &str) -> Result<(i64, i64), Failure> {
    let bad = || input_error(format!("bad y sweep {s:?}; expected A..B"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b),
        None => (s, s),
    };
    let lo = a.trim().parse().map_err(|_| bad())?;
    let hi = b.trim().parse().map_err(|_| bad())?;
    Ok((lo, hi))
}

fn genus(m: &ManifoldModel) -> Result<Outcome, Failure> {
    let p = m.chi.chi_y();
    let s = specialize(&p);
    let duality = check_duality(&m.chi);
    let parity = check_parity_identities(&m.chi);
    let status = if !m.singular && !parity {
        EXIT_CONGRUENCE
    } else {
        EXIT_OK
    };
    Ok(Outcome {
        human: vec![format!(
            "chi_y = {p}; chi={} todd={} sigma={}",
            s.euler, s.todd, s.signature
        )],
        results: json!({
            "name": m.name,
            "n": m.dim(),
            "chi_vector": ints(m.chi.values()),
            "chi_y": p.to_string(),
            "euler": JsonInt::from(&s.euler),
            "todd": JsonInt::from(&s.todd),
            "signature": JsonInt::from(&s.signature),
            "singular": m.singular,
            "duality": duality,
            "parity_identities": parity,
        }),
        status,
    })
}

fn reduce(m: &ManifoldModel, modulus: Modulus) -> Result<Outcome, Failure> {
    let p = m.chi.chi_y();
    let s = specialize(&p);
    let (label, reduced, canonical) = match modulus {
        Modulus::OneMinusY2 => (
            "1-y2",
            reduce_mod_1_minus_y2(&p),
            proposition35_canonical(&s.signature, &s.euler)?,
        ),
        Modulus::YMinusY3 => (
            "y-y3",
            reduce_mod_y_minus_y3(&p),
            remark42_canonical(&s.todd, &s.euler, &s.signature)?,
        ),
    };
    let matches = reduced == canonical;
    Ok(Outcome {
        human: vec![format!(
            "chi_y mod {label} = {reduced}; canonical = {canonical}: {}",
            if matches { "match" } else { "MISMATCH" }
        )],
        results: json!({
            "name": m.name,
            "modulus": label,
            "chi_y": p.to_string(),
            "reduced": reduced.to_string(),
            "canonical": canonical.to_string(),
            "match": matches,
        }),
        status: if matches { EXIT_OK } else { EXIT_CONGRUENCE },
    })
}

#[derive(Serialize)]
struct Row<'a> {
    #[serde(with = "crate::json::bigint")]
    chi_y_e: BigInt,
    #[serde(with = "crate::json::bigint")]
    chi_y_fb: BigInt,
    defect_mod_4: u8,
    defect_mod_8: u8,
    ok: bool,
    #[serde(flatten)]
    report: &'a CongruenceReport,
}

fn residue(x: &BigInt, m: u32) -> u8 {
    u8::try_from(x.mod_floor(&BigInt::from(m))).expect("small residue")
}

fn check_bundle(t: &BundleTriple, lo: i64, hi: i64, singular: bool) -> Result<Outcome, Failure> {
    let ys = odd_values(lo, hi)?;
    let mode = CheckMode {
        duality: !(singular || t.is_singular()),
        monodromy_mod4_trivial: t.monodromy_mod4_trivial,
    };
    let reports = check_triple(&t.e.chi, &t.f.chi, &t.b.chi, &ys, mode)?;
    let (pe, pf, pb) = (t.e.chi.chi_y(), t.f.chi.chi_y(), t.b.chi.chi_y());
    let d = defect(&t.e.chi, &t.f.chi, &t.b.chi);
    let sd = sigma_defect(&t.e.chi, &t.f.chi, &t.b.chi);
    let mode_name = if mode.duality { "smooth" } else { "singular" };
    let mut human = vec![format!(
        "E: {pe}; F: {pf}; B: {pb}; defect = {d}; sigma-defect = {sd}; mode = {mode_name}"
    )];
    let mut rows = Vec::with_capacity(reports.len());
    for r in &reports {
        let mut line = format!(
            "y={}: defect {} mod {} = {}",
            r.y,
            r.defect_value,
            r.guaranteed_modulus,
            residue(&r.defect_value, r.guaranteed_modulus)
        );
        if r.equivalence_checked {
            let s = r.strong_modulus;
            line.push_str(&format!(
                "; mod {s} = {}, sigma-defect {} mod {s} = {}: {}",
                residue(&r.defect_value, s),
                r.sigma_defect,
                residue(&r.sigma_defect, s),
                if r.equivalence_holds { "equivalent" } else { "NOT equivalent" }
            ));
        }
        line.push_str(if r.ok() { " OK" } else { " FAIL" });
        human.push(line);
        rows.push(Row {
            chi_y_e: pe.eval_i64(r.y),
            chi_y_fb: (&pf * &pb).eval_i64(r.y),
            defect_mod_4: residue(&r.defect_value, 4),
            defect_mod_8: residue(&r.defect_value, 8),
            ok: r.ok(),
            report: r,
        });
    }
    let failures = reports.iter().filter(|r| !r.ok()).count();
    human.push(format!("{} values checked, {failures} failures", reports.len()));
    Ok(Outcome {
        human,
        results: json!({
            "mode": mode_name,
            "monodromy_mod4_trivial": mode.monodromy_mod4_trivial,
            "provenance": t.provenance,
            "chi_y_e": pe.to_string(),
            "chi_y_f": pf.to_string(),
            "chi_y_b": pb.to_string(),
            "defect": d.to_string(),
            "sigma_defect": JsonInt::from(&sd),
            "rows": rows,
            "failures": failures,
        }),
        status: if failures == 0 { EXIT_OK } else { EXIT_CONGRUENCE },
    })
}

fn arf_command(f: &crate::forms::Z2QuadraticForm) -> Result<Outcome, Failure> {
    let a = arf(f)?;
    let dim = f.space().dim();
    let (gauss, oracle) = if dim <= MAX_ENUM_DIM {
        (Some(gauss_sum_z2(f)), Some(arf_gauss_oracle(f)?))
    } else {
        (None, None)
    };
    let agrees = oracle.map_or(true, |o| o == a);
    let mut line = format!("dim = {dim}; Arf = {a}");
    if let Some(g) = gauss {
        line.push_str(&format!("; Gauss sum = {g}"));
    }
    Ok(Outcome {
        human: vec![line],
        results: json!({
            "dim": dim,
            "arf": a,
            "gauss_sum": gauss,
            "gauss_oracle_agrees": agrees,
        }),
        status: if agrees { EXIT_OK } else { EXIT_CONGRUENCE },
    })
}

fn brown_command(f: &Z4QuadraticForm, lattice: Option<&IntegralLattice>) -> Result<Outcome, Failure> {
    let b = brown_invariant(f)?;
    let g = gauss_sum_z4(f);
    let dim = f.space().dim();
    let mut human = vec![format!(
        "dim = {dim}; Brown = {b}; Gauss sum = {} + {}i",
        g.re, g.im
    )];
    let mut results = json!({
        "dim": dim,
        "brown": b,
        "gauss_sum": {"re": g.re, "im": g.im},
    });
    let mut status = EXIT_OK;
    if let Some(l) = lattice {
        let sigma = lattice_signature(l)?;
        let model = lattice_to_forms(l)?;
        let vt = lift(model.characteristic(), l.dim());
        let v2 = l.pair(&vt, &vt);
        let brown_ok = (sigma - b as i64).rem_euclid(8) == 0;
        let vdb = (sigma - v2).rem_euclid(8) == 0;
        human.push(format!(
            "sigma = {sigma}; v.v = {v2}; Brown ≡ sigma mod 8: {}; sigma ≡ v.v mod 8: {}",
            verdict(brown_ok),
            verdict(vdb)
        ));
        results["signature"] = json!(sigma);
        results["characteristic_square"] = json!(v2);
        results["brown_matches_signature"] = json!(brown_ok);
        results["van_der_blij"] = json!(vdb);
        if !(brown_ok && vdb) {
            status = EXIT_CONGRUENCE;
        }
        if sigma.rem_euclid(4) == 0 {
            let r = morita_arf_check(l)?;
            human.push(format!(
                "Arf(v-perp/v) = {}; 4*Arf ≡ sigma mod 8: {}",
                r.arf,
                verdict(r.consistent)
            ));
            results["morita_arf"] = json!(r.arf);
            results["morita_consistent"] = json!(r.consistent);
            if !r.consistent {
                status = EXIT_CONGRUENCE;
            }
        }
    }
    Ok(Outcome {
        human,
        results,
        status,
    })
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "OK"
    } else {
        "FAIL"
    }
}

fn pipeline(e: &IntegralLattice, fb: &IntegralLattice) -> Result<Outcome, Failure> {
    let se = lattice_signature(e)?;
    let sfb = lattice_signature(fb)?;
    let sd = se - sfb;
    if sd.rem_euclid(4) != 0 {
        return Err(input_error(format!(
            "sigma-defect {sd} is not divisible by 4; the reduction needs it"
        )));
    }
    let r = theorem43_pipeline(&lattice_to_forms(e)?, &lattice_to_forms(fb)?)?;
    let four_arf = 4 * r.arf as i64;
    let ok = (four_arf - sd).rem_euclid(8) == 0;
    Ok(Outcome {
        human: vec![
            format!(
                "sigma(E) = {se}; sigma(FxB) = {sfb}; W dimension = {}",
                r.w_dim
            ),
            format!(
                "Arf = {}; 4*Arf = {four_arf} ≡ sigma-defect mod 8: {}",
                r.arf,
                verdict(ok)
            ),
        ],
        results: json!({
            "sigma_e": se,
            "sigma_fb": sfb,
            "sigma_defect": sd,
            "perp_dim": r.perp_dim,
            "sublagrangian_dim": r.sublagrangian_dim,
            "w_dim": r.w_dim,
            "arf": r.arf,
            "four_arf": four_arf,
            "congruence_holds": ok,
        }),
        status: if ok { EXIT_OK } else { EXIT_CONGRUENCE },
    })
}

fn catalog(name: Option<&str>) -> Result<Outcome, Failure> {
    if let Some(n) = name {
        let m = catalog_entry(n)?;
        let doc = Document::Manifold(m);
        return Ok(Outcome {
            human: vec![doc.to_json()],
            results: doc.to_value(),
            status: EXIT_OK,
        });
    }
    let mut human = Vec::new();
    let mut entries = Vec::new();
    for m in builtin_catalog() {
        let s = specialize(&m.chi.chi_y());
        human.push(format!(
            "{:<10} n={} chi_y = {}; chi={} todd={} sigma={}",
            m.name,
            m.dim(),
            m.chi.chi_y(),
            s.euler,
            s.todd,
            s.signature
        ));
        entries.push(json!({
            "name": m.name,
            "n": m.dim(),
            "chi_y": m.chi.chi_y().to_string(),
            "euler": JsonInt::from(&s.euler),
            "todd": JsonInt::from(&s.todd),
            "signature": JsonInt::from(&s.signature),
            "hodge": m.hodge.is_some(),
            "chern": m.chern.is_some(),
            "lattice": m.lattice.is_some(),
        }));
    }
    Ok(Outcome {
        human,
        results: json!({ "entries": entries }),
        status: EXIT_OK,
    })
}

fn selftest() -> Outcome {
    let checks = crate::selftest::run_all();
    let failed = checks.iter().filter(|c| !c.passed).count();
    let mut human: Vec<String> = checks
        .iter()
        .map(|c| format!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail))
        .collect();
    human.push(format!("{} checks, {failed} failed", checks.len()));
    Outcome {
        human,
        results: json!({ "checks": checks, "failed": failed }),
        status: if failed == 0 { EXIT_OK } else { EXIT_CONGRUENCE },
    }
}
