// Copyright (c) 2026, genuslab contributors
// SPDX-License-Identifier: Apache-2.0

//! C ABI over `genuslab`.
//!
//! Objects are opaque heap handles created by `gl_*_new` / `gl_*_from_*`
//! and released with the matching `gl_*_free`. Every fallible call returns
//! a [`GlStatus`]; on failure a message is available from
//! [`gl_last_error_message`] on the same thread. Integers cross the
//! boundary as `int64_t`; values that do not fit yield
//! `GL_STATUS_OVERFLOW`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use genuslab::algebra::BigInt;
use genuslab::congruence::{check_triple, CheckMode};
use genuslab::forms::{
    arf, brown_invariant, lattice_signature, lattice_to_forms, morita_arf_check,
    theorem43_pipeline, IntegralLattice, Z2BilinearSpace, Z2QuadraticForm, Z4QuadraticForm,
};
use genuslab::genus::{check_duality, check_parity_identities, specialize, ChiVector};
use genuslab::models::{catalog_entry, parse_document, Document, ManifoldModel, ModelError};
use num_traits::ToPrimitive;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    Invariant = 4,
    Form = 5,
    Overflow = 6,
    BufferTooSmall = 7,
    NotFound = 8,
    Panic = 9,
}

/// `(χ^0, …, χ^n)` of a compact complex variety.
pub struct GlChiVector(ChiVector);

/// Nonsingular symmetric Z/2 form with a quadratic enhancement.
pub struct GlZ2Form(Z2QuadraticForm);

/// Z/4-valued quadratic refinement of a Z/2 form.
pub struct GlZ4Form(Z4QuadraticForm);

/// Integral symmetric bilinear lattice.
pub struct GlLattice(IntegralLattice);

/// Validated manifold model.
pub struct GlModel(ManifoldModel);

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GlSpecializations {
    pub euler: i64,
    pub todd: i64,
    pub signature: i64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GlCongruenceReport {
    pub y: i64,
    pub defect_value: i64,
    pub sigma_defect: i64,
    pub guaranteed_modulus: u32,
    pub strong_modulus: u32,
    pub holds: bool,
    pub equivalence_checked: bool,
    pub equivalence_holds: bool,
    pub ok: bool,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GlMoritaReport {
    pub signature: i64,
    pub characteristic_square: i64,
    pub van_der_blij: bool,
    pub quotient_dim: usize,
    pub arf: u8,
    pub consistent: bool,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GlPipelineResult {
    pub sigma_defect: i64,
    pub perp_dim: usize,
    pub sublagrangian_dim: usize,
    pub w_dim: usize,
    pub arf: u8,
    /// `4·Arf ≡ σ-defect mod 8`.
    pub congruence_holds: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).expect("no interior nul"));
}

struct Fail(GlStatus, String);

impl Fail {
    fn new(status: GlStatus, msg: impl ToString) -> Self {
        Fail(status, msg.to_string())
    }
}

impl From<genuslab::forms::FormError> for Fail {
    fn from(e: genuslab::forms::FormError) -> Self {
        Fail::new(GlStatus::Form, e)
    }
}

impl From<ModelError> for Fail {
    fn from(e: ModelError) -> Self {
        let status = match e {
            ModelError::Parse(_) | ModelError::Schema(_) => GlStatus::Parse,
            ModelError::UnknownCatalog(_) => GlStatus::NotFound,
            _ => GlStatus::Invariant,
        };
        Fail::new(status, e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> GlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GlStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            GlStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail::new(GlStatus::NullPointer, format!("{what} is null")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::new(GlStatus::NullPointer, "output pointer is null"));
    }
    out.write(value);
    Ok(())
}

unsafe fn slice<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(Fail::new(GlStatus::NullPointer, format!("{what} is null")));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn string<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::new(GlStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::new(GlStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

fn small(x: &BigInt, what: &str) -> Result<i64, Fail> {
    x.to_i64()
        .ok_or_else(|| Fail::new(GlStatus::Overflow, format!("{what} = {x} does not fit in int64")))
}

fn square_matrix<T: Copy>(data: &[T], dim: usize) -> Vec<Vec<T>> {
    data.chunks(dim).map(<[T]>::to_vec).collect()
}

unsafe fn boxed<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    write_out(out, Box::into_raw(Box::new(value)))
}

/// Message for the most recent failure on this thread; empty if none.
/// The pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn gl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn gl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `values` must point to `len` readable `int64_t`; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gl_chi_vector_new(
    values: *const i64,
    len: usize,
    out: *mut *mut GlChiVector,
) -> GlStatus {
    guard(|| {
        let v = slice(values, len, "values")?;
        if v.is_empty() {
            return Err(Fail::new(GlStatus::InvalidArgument, "need at least one value"));
        }
        boxed(out, GlChiVector(ChiVector::from_i64s(v)))
    })
}

/// # Safety
/// `h` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gl_chi_vector_free(h: *mut GlChiVector) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gl_chi_vector_dim(h: *const GlChiVector, out: *mut usize) -> GlStatus {
    guard(|| write_out(out, deref(h, "chi vector")?.0.dim()))
}

/// Copies the coefficients of `χ_y` (ascending powers) into `out`, which
/// holds `cap` values. `out_len` receives the number required; pass
/// `cap = 0` to query it.
///
/// # Safety
/// `out` must hold `cap` writable values; `out_len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gl_chi_y_coefficients(
    h: *const GlChiVector,
    out: *mut i64,
    cap: usize,
    out_len: *mut usize,
) -> GlStatus {
    guard(|| {
        let v = &deref(h, "chi vector")?.0;
        let values = v.values();
        write_out(out_len, values.len())?;
        if cap < values.len() {
            return Err(Fail::new(
                GlStatus::BufferTooSmall,
                format!("need {} values, buffer holds {cap}", values.len()),
            ));
        }
        let converted: Vec<i64> = values
            .iter()
            .enumerate()
            .map(|(p, x)| small(x, &format!("chi^{p}")))
            .collect::<Result<_, _>>()?;
        if out.is_null() {
            return Err(Fail::new(GlStatus::NullPointer, "output buffer is null"));
        }
        ptr::copy_nonoverlapping(converted.as_ptr(), out, converted.len());
        Ok(())
    })
}

/// `χ_y` at `y = -1, 0, 1`.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gl_specialize(
    h: *const GlChiVector,
    out: *mut GlSpecializations,
) -> GlStatus {
    guard(|| {
        let s = specialize(&deref(h, "chi vector")?.0.chi_y());
        write_out(
            out,
            GlSpecializations {
                euler: small(&s.euler, "euler")?,
                todd: small(&s.todd, "todd")?,
                signature: small(&s.signature, "signature")?,
            },
        )
    })
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gl_check_duality(h: *const GlChiVector, out: *mut bool) -> GlStatus {
    guard(|| write_out(out, check_duality(&deref(h, "chi vector")?.0)))
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gl_check_parity_identities(
    h: *const GlChiVector,
    out: *mut bool,
) -> GlStatus {
    guard(|| write_out(out, check_parity_identities(&deref(h, "chi vector")?.0)))
}

/// Checks the bundle congruences for `F → E → B` at one odd `y`.
///
/// # Safety
/// All handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gl_check_congruence(
    e: *const GlChiVector,
    f: *const GlChiVector,
    b: *const GlChiVector,
    y: i64,
    singular: bool,
    monodromy_mod4_trivial: bool,
    out: *mut GlCongruenceReport,
) -> GlStatus {
    guard(|| {
        let (e, f, b) = (deref(e, "E")?, deref(f, "F")?, deref(b, "B")?);
        let mode = CheckMode {
            duality: !singular,
            monodromy_mod4_trivial,
        };
        let reports = check_triple(&e.0, &f.0, &b.0, &[y], mode)
            .map_err(|err| Fail::new(GlStatus::InvalidArgument, err))?;
        let r = &reports[0];
        write_out(
            out,
            GlCongruenceReport {
                y,
                defect_value: small(&r.defect_value, "defect")?,
                sigma_defect: small(&r.sigma_defect, "sigma-defect")?,
                guaranteed_modulus: r.guaranteed_modulus,
                strong_modulus: r.strong_modulus,
                holds: r.holds,
                equivalence_checked: r.equivalence_checked,
                equivalence_holds: r.equivalence_holds,
                ok: r.ok(),
            },
        )
    })
}

/// `gram` is `dim × dim` row-major with entries 0/1; `h` lists the
/// enhancement on the standard basis.
///
/// # Safety
/// `gram` must hold `dim * dim` bytes, `h` `dim` bytes; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gl_z2_form_new(
    gram: *const u8,
    h: *const u8,
    dim: usize,
    out: *mut *mut GlZ2Form,
) -> GlStatus {
    guard(|| {
        let g = slice(gram, dim * dim, "gram")?;
        let h = slice(h, dim, "h")?;
        let rows: Vec<Vec<i64>> = square_matrix(g, dim)
            .into_iter()
            .map(|r| r.into_iter().map(i64::from).collect())
            .collect();
        let space = Z2BilinearSpace::from_matrix(&rows)?;
        boxed(out, GlZ2Form(Z2QuadraticForm::from_values(space, h)?))
    })
}

/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gl_z2_form_free(h: *mut GlZ2Form) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gl_arf(h: *const GlZ2Form, out: *mut u8) -> GlStatus {
    guard(|| write_out(out, arf(&deref(h, "form")?.0)?))
}

/// `q` lists Z/4 values on the standard basis; `q[i] ≡ gram[i][i] mod 2`.
///
/// # Safety
/// `gram` must hold `dim * dim` bytes, `q` `dim` values; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gl_z4_form_new(
    gram: *const u8,
    q: *const i64,
    dim: usize,
    out: *mut *mut GlZ4Form,
) -> GlStatus {
    guard(|| {
        let g = slice(gram, dim * dim, "gram")?;
        let q = slice(q, dim, "q")?;
        let rows: Vec<Vec<i64>> = square_matrix(g, dim)
            .into_iter()
            .map(|r| r.into_iter().map(i64::from).collect())
            .collect();
        let space = Z2BilinearSpace::from_matrix(&rows)?;
        boxed(out, GlZ4Form(Z4QuadraticForm::new(space, q)?))
    })
}

/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gl_z4_form_free(h: *mut GlZ4Form) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gl_brown(h: *const GlZ4Form, out: *mut u8) -> GlStatus {
    guard(|| write_out(out, brown_invariant(&deref(h, "form")?.0)?))
}

/// # Safety
/// `gram` must hold `dim * dim` values (row-major); `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gl_lattice_new(
    gram: *const i64,
    dim: usize,
    out: *mut *mut GlLattice,
) -> GlStatus {
    guard(|| {
        let g = slice(gram, dim * dim, "gram")?;
        boxed(out, GlLattice(IntegralLattice::new(square_matrix(g, dim))?))
    })
}

/// Parses a `genuslab/lattice/1` document.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gl_lattice_from_json(
    json: *const c_char,
    out: *mut *mut GlLattice,
) -> GlStatus {
    guard(|| match parse_document(string(json, "json")?)? {
        Document::Lattice { lattice, .. } => boxed(out, GlLattice(lattice)),
        other => Err(Fail::new(
            GlStatus::Parse,
            format!("expected a lattice document, found {}", other.schema()),
        )),
    })
}

/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gl_lattice_free(h: *mut GlLattice) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gl_lattice_signature(h: *const GlLattice, out: *mut i64) -> GlStatus {
    guard(|| write_out(out, lattice_signature(&deref(h, "lattice")?.0)?))
}

/// Reduction by the characteristic element for a unimodular lattice with
/// signature divisible by 4.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gl_morita_check(h: *const GlLattice, out: *mut GlMoritaReport) -> GlStatus {
    guard(|| {
        let r = morita_arf_check(&deref(h, "lattice")?.0)?;
        write_out(
            out,
            GlMoritaReport {
                signature: r.signature,
                characteristic_square: r.characteristic_square,
                van_der_blij: r.van_der_blij,
                quotient_dim: r.quotient_dim,
                arf: r.arf,
                consistent: r.consistent,
            },
        )
    })
}

/// Reduces `E ⊕ -(F×B)` by `(v, v')` and compares `4·Arf` with
/// `σ(E) - σ(F×B)` mod 8.
///
/// # Safety
/// Both handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gl_pipeline(
    e: *const GlLattice,
    fb: *const GlLattice,
    out: *mut GlPipelineResult,
) -> GlStatus {
    guard(|| {
        let (e, fb) = (&deref(e, "E")?.0, &deref(fb, "FxB")?.0);
        let sd = lattice_signature(e)? - lattice_signature(fb)?;
        if sd.rem_euclid(4) != 0 {
            return Err(Fail::new(
                GlStatus::InvalidArgument,
                format!("sigma-defect {sd} is not divisible by 4"),
            ));
        }
        let r = theorem43_pipeline(&lattice_to_forms(e)?, &lattice_to_forms(fb)?)?;
        write_out(
            out,
            GlPipelineResult {
                sigma_defect: sd,
                perp_dim: r.perp_dim,
                sublagrangian_dim: r.sublagrangian_dim,
                w_dim: r.w_dim,
                arf: r.arf,
                congruence_holds: (4 * r.arf as i64 - sd).rem_euclid(8) == 0,
            },
        )
    })
}

/// Parses and validates a `genuslab/manifold/1` document.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gl_model_from_json(json: *const c_char, out: *mut *mut GlModel) -> GlStatus {
    guard(|| match parse_document(string(json, "json")?)? {
        Document::Manifold(m) => boxed(out, GlModel(m)),
        other => Err(Fail::new(
            GlStatus::Parse,
            format!("expected a manifold document, found {}", other.schema()),
        )),
    })
}

/// # Safety
/// `name` must be a NUL-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gl_model_from_catalog(name: *const c_char, out: *mut *mut GlModel) -> GlStatus {
    guard(|| boxed(out, GlModel(catalog_entry(string(name, "name")?)?)))
}

/// New chi-vector handle owned by the caller.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gl_model_chi_vector(h: *const GlModel, out: *mut *mut GlChiVector) -> GlStatus {
    guard(|| boxed(out, GlChiVector(deref(h, "model")?.0.chi.clone())))
}

/// Intersection lattice of the model, if it carries one; otherwise
/// `GL_STATUS_NOT_FOUND`.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gl_model_lattice(h: *const GlModel, out: *mut *mut GlLattice) -> GlStatus {
    guard(|| match &deref(h, "model")?.0.lattice {
        Some(l) => boxed(out, GlLattice(l.clone())),
        None => Err(Fail::new(GlStatus::NotFound, "model has no lattice")),
    })
}

/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gl_model_free(h: *mut GlModel) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}
