// Copyright (c) 2026, genuslab contributors
// SPDX-License-Identifier: Apache-2.0

use std::ffi::{CStr, CString};
use std::ptr;

use genuslab_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(gl_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

fn chi(values: &[i64]) -> *mut GlChiVector {
    let mut h = ptr::null_mut();
    let st = unsafe { gl_chi_vector_new(values.as_ptr(), values.len(), &mut h) };
    assert_eq!(st, GlStatus::Ok);
    h
}

fn lattice(gram: &[i64], dim: usize) -> *mut GlLattice {
    let mut h = ptr::null_mut();
    let st = unsafe { gl_lattice_new(gram.as_ptr(), dim, &mut h) };
    assert_eq!(st, GlStatus::Ok, "{}", last_error());
    h
}

#[test]
fn version_is_crate_version() {
    let v = unsafe { CStr::from_ptr(gl_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn congruence_for_p1_bundle() {
    let (e, f, b) = (chi(&[2, 0, 2]), chi(&[1, -1]), chi(&[1, -1]));
    unsafe {
        for y in [3i64, 5, -7] {
            let mut r = GlCongruenceReport::default();
            assert_eq!(gl_check_congruence(e, f, b, y, false, false, &mut r), GlStatus::Ok);
            assert_eq!(r.defect_value, (1 + y) * (1 + y));
            assert_eq!(r.sigma_defect, 4);
            assert!(r.holds && r.ok);
        }
        let mut r = GlCongruenceReport::default();
        assert_eq!(gl_check_congruence(e, f, b, 2, false, false, &mut r), GlStatus::InvalidArgument);
        assert!(!last_error().is_empty());
        gl_chi_vector_free(e);
        gl_chi_vector_free(f);
        gl_chi_vector_free(b);
    }
}

#[test]
fn duality_and_parity() {
    let good = chi(&[2, -20, 2]);
    let bad = chi(&[2, -20, 3]);
    unsafe {
        let mut ok = false;
        assert_eq!(gl_check_duality(good, &mut ok), GlStatus::Ok);
        assert!(ok);
        assert_eq!(gl_check_parity_identities(good, &mut ok), GlStatus::Ok);
        assert!(ok);
        assert_eq!(gl_check_duality(bad, &mut ok), GlStatus::Ok);
        assert!(!ok);
        let mut d = 0usize;
        assert_eq!(gl_chi_vector_dim(good, &mut d), GlStatus::Ok);
        assert_eq!(d, 2);
        gl_chi_vector_free(good);
        gl_chi_vector_free(bad);
    }
}

#[test]
fn lattice_invariants() {
    let e8_like = lattice(&[1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1], 4);
    unsafe {
        let mut s = 0i64;
        assert_eq!(gl_lattice_signature(e8_like, &mut s), GlStatus::Ok);
        assert_eq!(s, 4);
        let mut m = GlMoritaReport::default();
        assert_eq!(gl_morita_check(e8_like, &mut m), GlStatus::Ok);
        assert!(m.van_der_blij && m.consistent);
        assert_eq!(m.arf, 1);
        gl_lattice_free(e8_like);
    }
    let mut h = ptr::null_mut();
    let st = unsafe { gl_lattice_new([1i64, 2, 3, 4].as_ptr(), 2, &mut h) };
    assert_eq!(st, GlStatus::Form);
    assert!(h.is_null());
}

#[test]
fn pipeline_matches_sigma_defect() {
    let e = lattice(&[1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1], 4);
    let fb = lattice(&[0, 1, 1, 0], 2);
    unsafe {
        let mut r = GlPipelineResult::default();
        assert_eq!(gl_pipeline(e, fb, &mut r), GlStatus::Ok);
        assert_eq!(r.sigma_defect, 4);
        assert_eq!(r.w_dim, 4);
        assert_eq!(r.arf, 1);
        assert!(r.congruence_holds);
        let odd = lattice(&[1], 1);
        assert_eq!(gl_pipeline(odd, fb, &mut r), GlStatus::InvalidArgument);
        gl_lattice_free(odd);
        gl_lattice_free(e);
        gl_lattice_free(fb);
    }
}

#[test]
fn models_from_catalog_and_json() {
    unsafe {
        let name = CString::new("K3").unwrap();
        let mut m = ptr::null_mut();
        assert_eq!(gl_model_from_catalog(name.as_ptr(), &mut m), GlStatus::Ok);
        let mut c = ptr::null_mut();
        assert_eq!(gl_model_chi_vector(m, &mut c), GlStatus::Ok);
        let mut s = GlSpecializations::default();
        assert_eq!(gl_specialize(c, &mut s), GlStatus::Ok);
        assert_eq!((s.euler, s.todd, s.signature), (24, 2, -16));
        let mut l = ptr::null_mut();
        assert_eq!(gl_model_lattice(m, &mut l), GlStatus::Ok);
        let mut sig = 0i64;
        assert_eq!(gl_lattice_signature(l, &mut sig), GlStatus::Ok);
        assert_eq!(sig, -16);
        gl_lattice_free(l);
        gl_chi_vector_free(c);
        gl_model_free(m);

        let missing = CString::new("nowhere").unwrap();
        assert_eq!(gl_model_from_catalog(missing.as_ptr(), &mut m), GlStatus::NotFound);

        let doc = CString::new(r#"{"schema":"genuslab/manifold/1","name":"bad","n":2,"chi":[1,0,2]}"#).unwrap();
        assert_eq!(gl_model_from_json(doc.as_ptr(), &mut m), GlStatus::Invariant);
        assert!(last_error().contains("chi"));

        let garbage = CString::new("{").unwrap();
        assert_eq!(gl_model_from_json(garbage.as_ptr(), &mut m), GlStatus::Parse);

        let lat = CString::new(r#"{"schema":"genuslab/lattice/1","gram":[[0,1],[1,0]]}"#).unwrap();
        let mut l = ptr::null_mut();
        assert_eq!(gl_lattice_from_json(lat.as_ptr(), &mut l), GlStatus::Ok);
        gl_lattice_free(l);
        let point = CString::new(r#"{"schema":"genuslab/manifold/1","name":"pt","n":0,"chi":[1]}"#).unwrap();
        assert_eq!(gl_lattice_from_json(point.as_ptr(), &mut l), GlStatus::Parse);
    }
}

#[test]
fn overflow_is_reported() {
    let doc = CString::new(
        r#"{"schema":"genuslab/manifold/1","name":"big","n":0,"chi":["100000000000000000000"]}"#,
    )
    .unwrap();
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(gl_model_from_json(doc.as_ptr(), &mut m), GlStatus::Ok);
        let mut c = ptr::null_mut();
        assert_eq!(gl_model_chi_vector(m, &mut c), GlStatus::Ok);
        let mut s = GlSpecializations::default();
        assert_eq!(gl_specialize(c, &mut s), GlStatus::Overflow);
        gl_chi_vector_free(c);
        gl_model_free(m);
    }
}
