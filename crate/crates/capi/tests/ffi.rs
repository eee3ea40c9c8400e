//! Exercise the C ABI from Rust, including error paths.

use loopn_capi::*;
use std::ffi::{CStr, CString};
use std::ptr;

#[test]
fn version_is_static() {
    let v = loopn_version();
    let s = unsafe { CStr::from_ptr(v) }.to_str().unwrap();
    assert!(!s.is_empty());
}

#[test]
fn run_presentation_suite() {
    let name = CString::new("presentation").unwrap();
    let mut report: *mut LoopnReport = ptr::null_mut();
    let status =
        unsafe { loopn_run_suite(name.as_ptr(), 1, 3, 1, false, 7, &mut report) };
    assert_eq!(status, LoopnStatus::Ok);
    unsafe {
        assert!(loopn_report_pass_count(report) >= 10);
        assert_eq!(loopn_report_fail_count(report), 0);
        let json = loopn_report_json(report);
        let text = CStr::from_ptr(json).to_str().unwrap();
        assert!(text.contains("\"suite\""));
        loopn_string_free(json);
        loopn_report_free(report);
    }
}

#[test]
fn invalid_arguments() {
    let mut report: *mut LoopnReport = ptr::null_mut();
    let status = unsafe { loopn_run_suite(ptr::null(), 1, 3, 1, false, 0, &mut report) };
    assert_eq!(status, LoopnStatus::InvalidArgument);
    let bogus = CString::new("no-such-suite").unwrap();
    let status = unsafe { loopn_run_suite(bogus.as_ptr(), 1, 3, 1, false, 0, &mut report) };
    assert_eq!(status, LoopnStatus::InvalidArgument);
}

#[test]
fn element_calculator() {
    unsafe {
        let e_text = CString::new("(1) * E").unwrap();
        let f_text = CString::new("(1) * F").unwrap();
        let mut e: *mut LoopnElement = ptr::null_mut();
        let mut f: *mut LoopnElement = ptr::null_mut();
        assert_eq!(loopn_element_parse(e_text.as_ptr(), &mut e), LoopnStatus::Ok);
        assert_eq!(loopn_element_parse(f_text.as_ptr(), &mut f), LoopnStatus::Ok);
        let mut comm: *mut LoopnElement = ptr::null_mut();
        assert_eq!(loopn_element_commutator(e, f, &mut comm), LoopnStatus::Ok);
        let printed = loopn_element_print(comm);
        let s = CStr::from_ptr(printed).to_str().unwrap().to_string();
        // [E, F] = (K - K^{-1})/(q - q^{-1})
        assert!(s.contains("K"), "{}", s);
        assert!(!loopn_element_is_zero(comm));
        loopn_string_free(printed);
        // round-trip through the grammar
        let text = CString::new(s).unwrap();
        let mut back: *mut LoopnElement = ptr::null_mut();
        assert_eq!(loopn_element_parse(text.as_ptr(), &mut back), LoopnStatus::Ok);
        let mut diff: *mut LoopnElement = ptr::null_mut();
        // diff = comm - back via commutator trick is wrong; use add of negation:
        // simplest: print both and compare
        let p1 = loopn_element_print(comm);
        let p2 = loopn_element_print(back);
        assert_eq!(
            CStr::from_ptr(p1).to_str().unwrap(),
            CStr::from_ptr(p2).to_str().unwrap()
        );
        loopn_string_free(p1);
        loopn_string_free(p2);
        let _ = &mut diff;
        let bad = CString::new("((( nonsense").unwrap();
        let mut out: *mut LoopnElement = ptr::null_mut();
        assert_eq!(
            loopn_element_parse(bad.as_ptr(), &mut out),
            LoopnStatus::ParseError
        );
        loopn_element_free(e);
        loopn_element_free(f);
        loopn_element_free(comm);
        loopn_element_free(back);
    }
}
