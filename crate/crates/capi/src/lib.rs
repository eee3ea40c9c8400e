//! C ABI for the loopn verification library.
//!
//! All functions are `extern "C"` with opaque handles and integer status
//! codes. Strings returned by the library are NUL-terminated, UTF-8, and
//! owned by the caller; release them with `loopn_string_free`. Handles are
//! released with the matching `*_free` function. Passing NULL where a handle
//! or out-pointer is expected yields `LOOPN_STATUS_INVALID_ARGUMENT`.

use loopn::grammar;
use loopn::report::Report;
use loopn::scalar::RatFunc;
use loopn::suite::{run, Suite, SuiteConfig};
use loopn::uqsl2::{GenAlgebra, PbwElement};
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LoopnStatus {
    /// The call succeeded (for suite runs: every identity passed).
    Ok = 0,
    /// The run finished but at least one identity failed.
    FailedChecks = 1,
    /// A NULL pointer, unknown name, or out-of-range argument.
    InvalidArgument = 2,
    /// The input text could not be parsed in the element grammar.
    ParseError = 3,
    /// An internal invariant was violated (a bug; never expected).
    InternalError = 4,
}

/// An opaque verification report.
pub struct LoopnReport {
    inner: Report,
}

/// An opaque one-site algebra element over the generic coefficient field.
pub struct LoopnElement {
    inner: PbwElement<RatFunc>,
}

fn to_c_string(s: String) -> *mut c_char {
    match CString::new(s) {
        Ok(c) => c.into_raw(),
        Err(_) => ptr::null_mut(),
    }
}

/// The library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn loopn_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must be a string returned by this library, not yet freed, or NULL.
#[no_mangle]
pub unsafe extern "C" fn loopn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Run a named suite. On success `*out` owns the report; release it with
/// `loopn_report_free`. Returns `Ok` when every identity passed,
/// `FailedChecks` when the report contains failures (the report is still
/// produced), and an error status otherwise (no report).
///
/// Suites: "presentation", "alekseev", "center", "frobenius", "threading",
/// "qca", "poisson", "dressing", "skein", "all".
///
/// # Safety
/// `suite` must point to a NUL-terminated string and `out` to writable
/// storage for one pointer; both must be valid for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn loopn_run_suite(
    suite: *const c_char,
    n: u32,
    l: u32,
    jobs: u32,
    override_bounds: bool,
    seed: u64,
    out: *mut *mut LoopnReport,
) -> LoopnStatus {
    if suite.is_null() || out.is_null() {
        return LoopnStatus::InvalidArgument;
    }
    let name = match CStr::from_ptr(suite).to_str() {
        Ok(s) => s,
        Err(_) => return LoopnStatus::InvalidArgument,
    };
    let suite = match Suite::parse(name) {
        Some(s) => s,
        None => return LoopnStatus::InvalidArgument,
    };
    if n == 0 {
        return LoopnStatus::InvalidArgument;
    }
    let cfg = SuiteConfig {
        n: n as usize,
        l,
        jobs: jobs as usize,
        override_bounds,
        seed,
        ..Default::default()
    };
    let result = catch_unwind(AssertUnwindSafe(|| run(suite, &cfg)));
    match result {
        Ok(report) => {
            let ok = report.all_pass();
            *out = Box::into_raw(Box::new(LoopnReport { inner: report }));
            if ok {
                LoopnStatus::Ok
            } else {
                LoopnStatus::FailedChecks
            }
        }
        Err(_) => LoopnStatus::InternalError,
    }
}

/// Number of passed identities in the report.
///
/// # Safety
/// The handle must be one returned by this library and not yet freed (or
/// NULL, which yields the empty/zero result).
#[no_mangle]
pub unsafe extern "C" fn loopn_report_pass_count(report: *const LoopnReport) -> u64 {
    report.as_ref().map_or(0, |r| r.inner.summary.pass as u64)
}

/// Number of failed identities in the report.
///
/// # Safety
/// The handle must be one returned by this library and not yet freed (or
/// NULL, which yields the empty/zero result).
#[no_mangle]
pub unsafe extern "C" fn loopn_report_fail_count(report: *const LoopnReport) -> u64 {
    report.as_ref().map_or(0, |r| r.inner.summary.fail as u64)
}

/// Number of skipped identities in the report.
///
/// # Safety
/// The handle must be one returned by this library and not yet freed (or
/// NULL, which yields the empty/zero result).
#[no_mangle]
pub unsafe extern "C" fn loopn_report_skip_count(report: *const LoopnReport) -> u64 {
    report
        .as_ref()
        .map_or(0, |r| r.inner.summary.skipped as u64)
}

/// The full report as pretty JSON; release with `loopn_string_free`.
///
/// # Safety
/// The handle must be one returned by this library and not yet freed (or
/// NULL, which yields the empty/zero result).
#[no_mangle]
pub unsafe extern "C" fn loopn_report_json(report: *const LoopnReport) -> *mut c_char {
    match report.as_ref() {
        Some(r) => to_c_string(r.inner.to_json()),
        None => ptr::null_mut(),
    }
}

/// Release a report handle.
///
/// # Safety
/// The handle must be one returned by this library, not yet freed, or NULL.
#[no_mangle]
pub unsafe extern "C" fn loopn_report_free(report: *mut LoopnReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Parse a one-site element in the grammar, e.g. "(v^2) * F K^-1 E + (1) * 1".
///
/// # Safety
/// `text` must point to a NUL-terminated string and `out` to writable
/// storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn loopn_element_parse(
    text: *const c_char,
    out: *mut *mut LoopnElement,
) -> LoopnStatus {
    if text.is_null() || out.is_null() {
        return LoopnStatus::InvalidArgument;
    }
    let s = match CStr::from_ptr(text).to_str() {
        Ok(s) => s,
        Err(_) => return LoopnStatus::InvalidArgument,
    };
    match catch_unwind(|| grammar::parse_pbw(s)) {
        Ok(Ok(e)) => {
            *out = Box::into_raw(Box::new(LoopnElement { inner: e }));
            LoopnStatus::Ok
        }
        Ok(Err(_)) => LoopnStatus::ParseError,
        Err(_) => LoopnStatus::InternalError,
    }
}

/// Print the element in the grammar (PBW normal form); release with
/// `loopn_string_free`.
///
/// # Safety
/// The handle must be one returned by this library and not yet freed (or
/// NULL, which yields the empty/zero result).
#[no_mangle]
pub unsafe extern "C" fn loopn_element_print(e: *const LoopnElement) -> *mut c_char {
    match e.as_ref() {
        Some(e) => to_c_string(e.inner.to_string()),
        None => ptr::null_mut(),
    }
}

unsafe fn binop(
    a: *const LoopnElement,
    b: *const LoopnElement,
    out: *mut *mut LoopnElement,
    f: impl Fn(&PbwElement<RatFunc>, &PbwElement<RatFunc>) -> PbwElement<RatFunc>
        + std::panic::RefUnwindSafe,
) -> LoopnStatus {
    let (a, b) = match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => (a, b),
        _ => return LoopnStatus::InvalidArgument,
    };
    if out.is_null() {
        return LoopnStatus::InvalidArgument;
    }
    match catch_unwind(|| f(&a.inner, &b.inner)) {
        Ok(e) => {
            *out = Box::into_raw(Box::new(LoopnElement { inner: e }));
            LoopnStatus::Ok
        }
        Err(_) => LoopnStatus::InternalError,
    }
}

/// out = a + b.
///
/// # Safety
/// `a` and `b` must be element handles returned by this library and not yet
/// freed; `out` must point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn loopn_element_add(
    a: *const LoopnElement,
    b: *const LoopnElement,
    out: *mut *mut LoopnElement,
) -> LoopnStatus {
    binop(a, b, out, |x, y| GenAlgebra::global().add(x, y))
}

/// out = a · b in PBW normal form.
///
/// # Safety
/// `a` and `b` must be element handles returned by this library and not yet
/// freed; `out` must point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn loopn_element_mul(
    a: *const LoopnElement,
    b: *const LoopnElement,
    out: *mut *mut LoopnElement,
) -> LoopnStatus {
    binop(a, b, out, |x, y| GenAlgebra::global().mul(x, y))
}

/// out = [a, b] = a·b - b·a.
///
/// # Safety
/// `a` and `b` must be element handles returned by this library and not yet
/// freed; `out` must point to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn loopn_element_commutator(
    a: *const LoopnElement,
    b: *const LoopnElement,
    out: *mut *mut LoopnElement,
) -> LoopnStatus {
    binop(a, b, out, |x, y| GenAlgebra::global().commutator(x, y))
}

/// True when the element is zero.
///
/// # Safety
/// The handle must be one returned by this library and not yet freed (or
/// NULL, which yields the empty/zero result).
#[no_mangle]
pub unsafe extern "C" fn loopn_element_is_zero(e: *const LoopnElement) -> bool {
    e.as_ref().map_or(false, |e| e.inner.is_zero())
}

/// Release an element handle.
///
/// # Safety
/// The handle must be one returned by this library, not yet freed, or NULL.
#[no_mangle]
pub unsafe extern "C" fn loopn_element_free(e: *mut LoopnElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}
