//! C ABI over `toric_gec`.
//!
//! Every function returns a [`TgStatus`]; on failure a message is available
//! from [`tg_last_error`] on the same thread. Handles are opaque and must be
//! released with their `_free` function; strings returned through `char **`
//! must be released with [`tg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use toric_gec::cli::polytope_info;
use toric_gec::expr::{format_polynomial, parse};
use toric_gec::families::{family_descent, FamilySpec};
use toric_gec::gec::{decide, einstein_check, Verdict};
use toric_gec::monge_ampere::mu;
use toric_gec::polytope::newton_polytope;
use toric_gec::{Error, LatticePolytope, LaurentPolynomial, Rational};

/// Result code of every entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    NonUnimodularSupport = 4,
    InvalidArgument = 5,
    ComputationError = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TgVerdict {
    GecHolds = 0,
    GecFails = 1,
    Inconclusive = 2,
}

impl From<Verdict> for TgVerdict {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::GecHolds => TgVerdict::GecHolds,
            Verdict::GecFails => TgVerdict::GecFails,
            Verdict::Inconclusive => TgVerdict::Inconclusive,
        }
    }
}

/// A Laurent polynomial with rational coefficients.
pub struct TgPolynomial(LaurentPolynomial);

/// A lattice polytope.
pub struct TgPolytope(LatticePolytope);

struct Failure(TgStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse(_) => TgStatus::ParseError,
            Error::NonUnimodularSupport => TgStatus::NonUnimodularSupport,
            Error::FamilyParameters(_) | Error::InvalidArgument(_) | Error::ZeroPolynomial | Error::RankMismatch { .. } => {
                TgStatus::InvalidArgument
            }
            _ => TgStatus::ComputationError,
        };
        Failure(status, e.to_string())
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard<F: FnOnce() -> Result<(), Failure>>(f: F) -> TgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            TgStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            TgStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(TgStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Failure(TgStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    let c = CString::new(s).map_err(|_| Failure(TgStatus::ComputationError, "string has interior nul".into()))?;
    *out = c.into_raw();
    Ok(())
}

fn json<T: serde::Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string(v).map_err(|e| Failure(TgStatus::ComputationError, e.to_string()))
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call on this thread.
#[no_mangle]
pub extern "C" fn tg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn tg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn tg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an expression such as `1+x+y` or an alias such as `hexagon-q`.
///
/// # Safety
/// `expr` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tg_polynomial_parse(expr: *const c_char, out: *mut *mut TgPolynomial) -> TgStatus {
    guard(|| {
        let p = parse(read_str(expr, "expr")?)?;
        put(out, TgPolynomial(p))
    })
}

/// Reads `{"rank": n, "terms": [{"e": [...], "c": "p/q"}, ...]}`.
///
/// # Safety
/// `text` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tg_polynomial_from_json(text: *const c_char, out: *mut *mut TgPolynomial) -> TgStatus {
    guard(|| {
        let p: LaurentPolynomial = serde_json::from_str(read_str(text, "json")?)
            .map_err(|e| Failure(TgStatus::ParseError, e.to_string()))?;
        put(out, TgPolynomial(p))
    })
}

/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tg_polynomial_to_json(p: *const TgPolynomial, out: *mut *mut c_char) -> TgStatus {
    guard(|| put_string(out, json(&deref(p, "polynomial")?.0)?))
}

/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tg_polynomial_to_string(p: *const TgPolynomial, out: *mut *mut c_char) -> TgStatus {
    guard(|| put_string(out, format_polynomial(&deref(p, "polynomial")?.0)))
}

/// # Safety
/// `p` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tg_polynomial_free(p: *mut TgPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// μ(p) as a new handle.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tg_mu(p: *const TgPolynomial, out: *mut *mut TgPolynomial) -> TgStatus {
    guard(|| {
        let m = mu(&deref(p, "polynomial")?.0)?;
        put(out, TgPolynomial(m.mu))
    })
}

/// Decides GEC for `p`. If `report` is not null it receives the report as
/// JSON.
///
/// # Safety
/// `p` must be a live handle, `verdict` valid, `report` null or valid.
#[no_mangle]
pub unsafe extern "C" fn tg_gec(p: *const TgPolynomial, verdict: *mut TgVerdict, report: *mut *mut c_char) -> TgStatus {
    guard(|| {
        if verdict.is_null() {
            return Err(null("verdict"));
        }
        let r = decide(&deref(p, "polynomial")?.0)?;
        *verdict = r.verdict.into();
        if !report.is_null() {
            put_string(report, json(&r)?)?;
        }
        Ok(())
    })
}

/// Tests `μ(p) = c·χ^m·p^{n+1−λ}`; `lambda` is null to test `μ(p) = p^n`,
/// or a decimal integer or fraction.
///
/// # Safety
/// `p` must be a live handle, `lambda` null or a C string, `holds` valid.
#[no_mangle]
pub unsafe extern "C" fn tg_einstein(p: *const TgPolynomial, lambda: *const c_char, holds: *mut bool) -> TgStatus {
    guard(|| {
        if holds.is_null() {
            return Err(null("holds"));
        }
        let lambda = if lambda.is_null() {
            None
        } else {
            let s = read_str(lambda, "lambda")?;
            Some(s.trim().parse::<Rational>().map_err(|_| Failure(TgStatus::InvalidArgument, format!("lambda {s:?}")))?)
        };
        *holds = einstein_check(&deref(p, "polynomial")?.0, lambda.as_ref())?.holds;
        Ok(())
    })
}

/// Reads `{"rank": n, "vertices": [[...], ...]}`.
///
/// # Safety
/// `text` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tg_polytope_from_json(text: *const c_char, out: *mut *mut TgPolytope) -> TgStatus {
    guard(|| {
        let d: LatticePolytope = serde_json::from_str(read_str(text, "json")?)
            .map_err(|e| Failure(TgStatus::ParseError, e.to_string()))?;
        put(out, TgPolytope(d))
    })
}

/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tg_polytope_newton(p: *const TgPolynomial, out: *mut *mut TgPolytope) -> TgStatus {
    guard(|| put(out, TgPolytope(newton_polytope(&deref(p, "polynomial")?.0)?)))
}

/// Anticanonical polytope of a family member such as `V:k=2` or `NP1`.
///
/// # Safety
/// `spec` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tg_polytope_family(spec: *const c_char, out: *mut *mut TgPolytope) -> TgStatus {
    guard(|| {
        let spec: FamilySpec = read_str(spec, "spec")?.parse()?;
        put(out, TgPolytope(spec.anticanonical_polytope()?))
    })
}

/// Vertices, facets, reflexivity, face counts and edge ratios as JSON.
///
/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tg_polytope_info(d: *const TgPolytope, out: *mut *mut c_char) -> TgStatus {
    guard(|| put_string(out, json(&polytope_info(&deref(d, "polytope")?.0)?)?))
}

/// # Safety
/// `d` must be a live handle and `reflexive` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tg_polytope_is_reflexive(d: *const TgPolytope, reflexive: *mut bool) -> TgStatus {
    guard(|| {
        if reflexive.is_null() {
            return Err(null("reflexive"));
        }
        let d = &deref(d, "polytope")?.0;
        *reflexive = d.is_full_dimensional() && d.is_reflexive()?;
        Ok(())
    })
}

/// # Safety
/// `d` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tg_polytope_free(d: *mut TgPolytope) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Polytope-only face descent for one family member, trying its
/// obstructing face first. `report` (nullable) receives the JSON report.
///
/// # Safety
/// `spec` must be a valid C string, `verdict` valid, `report` null or valid.
#[no_mangle]
pub unsafe extern "C" fn tg_family_descent(
    spec: *const c_char,
    dmax: usize,
    verdict: *mut TgVerdict,
    report: *mut *mut c_char,
) -> TgStatus {
    guard(|| {
        if verdict.is_null() {
            return Err(null("verdict"));
        }
        let spec: FamilySpec = read_str(spec, "spec")?.parse()?;
        let r = family_descent(spec, dmax, true)?;
        *verdict = r.report.verdict.into();
        if !report.is_null() {
            put_string(report, json(&r)?)?;
        }
        Ok(())
    })
}
