//! C ABI over `toric-core`.
//!
//! Every function returns a `ToricStatus`; on failure the message is kept
//! per thread and read with `toric_last_error`. Handles are opaque and
//! released with their `_free` function; strings returned through out
//! parameters are released with `toric_string_free`.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use toric_core::classify4::{classify, ClassificationReport};
use toric_core::exponents::{parse_binomial_in, parse_ideal_file, VarNames};
use toric_core::fibergraph::{minimal_generating_set, uniqueness, Verdict};
use toric_core::grobner::{curve_ideal, membership, BinomialIdeal};
use toric_core::semigroup::NumericalSemigroup;
use toric_core::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ToricStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// The input was rejected by the computation (gcd, arity, syntax...).
    Rejected = 3,
    /// Internal consistency failure or a caught panic.
    Internal = 4,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ToricVerdict {
    Yes = 0,
    No = 1,
    Unknown = 2,
}

/// Classification of a monomial curve in 4-space.
pub struct ToricReport(ClassificationReport);

/// A binomial ideal together with its variable names.
pub struct ToricIdeal {
    ideal: BinomialIdeal,
    vars: VarNames,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(ToricStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Inconsistent(_) => ToricStatus::Internal,
            _ => ToricStatus::Rejected,
        };
        Failure(status, e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn fail(status: ToricStatus, msg: &str) -> Failure {
    Failure(status, msg.to_string())
}

fn guard(f: impl FnOnce() -> Outcome) -> ToricStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ToricStatus::Ok,
        Ok(Err(b)) => {
            set_error(&b.1);
            b.0
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            set_error(&format!("panic: {msg}"));
            ToricStatus::Internal
        }
    }
}

unsafe fn generators<'a>(a: *const u64, n: usize) -> Result<&'a [u64], Failure> {
    if a.is_null() {
        return Err(fail(ToricStatus::NullPointer, "generator array is null"));
    }
    if n == 0 {
        return Err(fail(ToricStatus::InvalidArgument, "no generators"));
    }
    Ok(std::slice::from_raw_parts(a, n))
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(fail(ToricStatus::NullPointer, "string is null"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(ToricStatus::InvalidArgument, "string is not UTF-8"))
}

unsafe fn write<T>(out: *mut T, v: T) -> Outcome {
    if out.is_null() {
        return Err(fail(ToricStatus::NullPointer, "output pointer is null"));
    }
    *out = v;
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Outcome {
    let c = CString::new(s).map_err(|_| fail(ToricStatus::Internal, "interior NUL"))?;
    write(out, c.into_raw())
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| fail(ToricStatus::NullPointer, "handle is null"))
}

/// Message of the last failed call on this thread, or null. Valid until
/// the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn toric_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

#[no_mangle]
pub extern "C" fn toric_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

#[no_mangle]
pub unsafe extern "C" fn toric_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[no_mangle]
pub unsafe extern "C" fn toric_frobenius_number(
    a: *const u64,
    n: usize,
    out: *mut i64,
) -> ToricStatus {
    guard(|| {
        let s = NumericalSemigroup::new(generators(a, n)?)?;
        write(out, s.frobenius_number())
    })
}

#[no_mangle]
pub unsafe extern "C" fn toric_is_symmetric(
    a: *const u64,
    n: usize,
    out: *mut bool,
) -> ToricStatus {
    guard(|| {
        let s = NumericalSemigroup::new(generators(a, n)?)?;
        write(out, s.is_symmetric())
    })
}

/// Classifies `(a[0], ..., a[3])`; `n` must be 4.
#[no_mangle]
pub unsafe extern "C" fn toric_classify(
    a: *const u64,
    n: usize,
    out: *mut *mut ToricReport,
) -> ToricStatus {
    guard(|| {
        if out.is_null() {
            return Err(fail(ToricStatus::NullPointer, "output pointer is null"));
        }
        let r = classify(generators(a, n)?)?;
        write(out, Box::into_raw(Box::new(ToricReport(r))))
    })
}

#[no_mangle]
pub unsafe extern "C" fn toric_report_free(r: *mut ToricReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

#[no_mangle]
pub unsafe extern "C" fn toric_report_json(
    r: *const ToricReport,
    out: *mut *mut c_char,
) -> ToricStatus {
    guard(|| write_string(out, handle(r)?.0.to_json()))
}

#[no_mangle]
pub unsafe extern "C" fn toric_report_case(
    r: *const ToricReport,
    out: *mut *mut c_char,
) -> ToricStatus {
    guard(|| write_string(out, handle(r)?.0.case.to_string()))
}

#[no_mangle]
pub unsafe extern "C" fn toric_report_unique(r: *const ToricReport, out: *mut bool) -> ToricStatus {
    guard(|| write(out, handle(r)?.0.unique))
}

#[no_mangle]
pub unsafe extern "C" fn toric_report_mu(r: *const ToricReport, out: *mut usize) -> ToricStatus {
    guard(|| write(out, handle(r)?.0.mu_ia))
}

/// Toric ideal of the curve `(t^a[0], ..., t^a[n-1])`.
#[no_mangle]
pub unsafe extern "C" fn toric_curve_ideal(
    a: *const u64,
    n: usize,
    out: *mut *mut ToricIdeal,
) -> ToricStatus {
    guard(|| {
        if out.is_null() {
            return Err(fail(ToricStatus::NullPointer, "output pointer is null"));
        }
        let a = generators(a, n)?;
        let ideal = curve_ideal(a)?;
        let h = ToricIdeal {
            ideal,
            vars: VarNames::plain(a.len()),
        };
        write(out, Box::into_raw(Box::new(h)))
    })
}

/// Ideal from the text of an ideal file (one binomial per line).
#[no_mangle]
pub unsafe extern "C" fn toric_ideal_parse(
    src: *const c_char,
    out: *mut *mut ToricIdeal,
) -> ToricStatus {
    guard(|| {
        if out.is_null() {
            return Err(fail(ToricStatus::NullPointer, "output pointer is null"));
        }
        let file = parse_ideal_file(text(src)?)?;
        let ideal = BinomialIdeal::new(file.vars.n, file.generators)?;
        let h = ToricIdeal {
            ideal,
            vars: file.vars,
        };
        write(out, Box::into_raw(Box::new(h)))
    })
}

#[no_mangle]
pub unsafe extern "C" fn toric_ideal_free(j: *mut ToricIdeal) {
    if !j.is_null() {
        drop(Box::from_raw(j));
    }
}

#[no_mangle]
pub unsafe extern "C" fn toric_ideal_contains(
    j: *const ToricIdeal,
    binomial: *const c_char,
    out: *mut bool,
) -> ToricStatus {
    guard(|| {
        let h = handle(j)?;
        let f = parse_binomial_in(text(binomial)?, &h.vars)?;
        write(out, membership(&h.ideal, &f)?)
    })
}

/// Minimal generators, one binomial per line.
#[no_mangle]
pub unsafe extern "C" fn toric_ideal_minimal_generators(
    j: *const ToricIdeal,
    out: *mut *mut c_char,
) -> ToricStatus {
    guard(|| {
        let h = handle(j)?;
        let lines: Vec<String> = minimal_generating_set(&h.ideal)?
            .generators()
            .iter()
            .map(|f| h.vars.binomial(f))
            .collect();
        write_string(out, lines.join("\n"))
    })
}

#[no_mangle]
pub unsafe extern "C" fn toric_ideal_uniqueness(
    j: *const ToricIdeal,
    out: *mut ToricVerdict,
) -> ToricStatus {
    guard(|| {
        let v = match uniqueness(&handle(j)?.ideal)? {
            Verdict::Yes => ToricVerdict::Yes,
            Verdict::No => ToricVerdict::No,
            Verdict::Unknown => ToricVerdict::Unknown,
        };
        write(out, v)
    })
}
