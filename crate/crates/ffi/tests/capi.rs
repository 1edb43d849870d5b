use std::ffi::{CStr, CString};
use std::ptr;

use coinv_ffi::*;

fn quotient(n: usize, k: usize, r: usize, v: CoinvVariant) -> *mut CoinvQuotient {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { coinv_quotient_new(n, k, r, v, &mut h) }, CoinvStatus::Ok);
    assert!(!h.is_null());
    h
}

fn last_error() -> String {
    let p = coinv_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn hilbert_of_s3_coinvariants() {
    let h = quotient(3, 3, 1, CoinvVariant::S);
    for setting in [CoinvSetting::X, CoinvSetting::Y] {
        let mut out = ptr::null_mut();
        let mut len = 0;
        assert_eq!(unsafe { coinv_hilbert(h, setting, &mut out, &mut len) }, CoinvStatus::Ok);
        let coeffs = unsafe { std::slice::from_raw_parts(out, len) }.to_vec();
        assert_eq!(coeffs, vec![1, 2, 2, 1]);
        unsafe { coinv_hilbert_free(out, len) };
    }
    let mut size = 0;
    assert_eq!(unsafe { coinv_basis_size(h, &mut size) }, CoinvStatus::Ok);
    assert_eq!(size, 6);
    unsafe { coinv_quotient_free(h) };
}

#[test]
fn invalid_parameters_report_domain() {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { coinv_quotient_new(3, 4, 1, CoinvVariant::S, &mut h) }, CoinvStatus::Domain);
    assert!(h.is_null());
    assert!(last_error().contains("k=4"));
    assert_eq!(unsafe { coinv_quotient_new(3, 1, 1, CoinvVariant::S, ptr::null_mut()) }, CoinvStatus::NullArgument);
}

#[test]
fn rewrite_trace_and_errors() {
    let h = quotient(5, 4, 2, CoinvVariant::S);
    let m = CString::new("y{5}^3*y{2,5}^2*y{1,2,3,5}^2").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { coinv_rewrite(h, m.as_ptr(), &mut out) }, CoinvStatus::Ok);
    let text = unsafe { CStr::from_ptr(out) }.to_string_lossy().into_owned();
    unsafe { coinv_string_free(out) };
    assert!(text.contains("(2) move on y{2,5}^r"));
    assert!(text.ends_with("+ y{2,3,4,5}^2*y{4,5}^2*y{5}^3"));

    let bad = CString::new("y{1,2}*y{3}").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { coinv_rewrite(h, bad.as_ptr(), &mut out) }, CoinvStatus::NotAMultichain);
    assert!(out.is_null());
    let garbage = CString::new("y{1,").unwrap();
    assert_eq!(unsafe { coinv_rewrite(h, garbage.as_ptr(), &mut out) }, CoinvStatus::Parse);
    assert_eq!(unsafe { coinv_rewrite(h, ptr::null(), &mut out) }, CoinvStatus::NullArgument);
    unsafe { coinv_quotient_free(h) };
}

#[test]
fn caps_surface_resource_limit() {
    let h = quotient(4, 4, 2, CoinvVariant::R);
    assert_eq!(unsafe { coinv_quotient_set_caps(h, 40, 3) }, CoinvStatus::Ok);
    let mut out = ptr::null_mut();
    let mut len = 0;
    assert_eq!(unsafe { coinv_hilbert(h, CoinvSetting::X, &mut out, &mut len) }, CoinvStatus::ResourceLimit);
    assert!(last_error().contains("resource limit"));
    unsafe { coinv_quotient_free(h) };
}

#[test]
fn verify_report() {
    let h = quotient(3, 2, 1, CoinvVariant::S);
    let mut passed = false;
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { coinv_verify(h, true, 5, &mut passed, &mut json) }, CoinvStatus::Ok);
    assert!(passed);
    let s = unsafe { CStr::from_ptr(json) }.to_string_lossy().into_owned();
    unsafe { coinv_string_free(json) };
    assert!(s.contains("\"passed\":true"));
    unsafe { coinv_quotient_free(h) };
}

#[test]
fn null_handles_are_rejected() {
    let mut size = 0;
    assert_eq!(unsafe { coinv_basis_size(ptr::null(), &mut size) }, CoinvStatus::NullArgument);
    unsafe { coinv_quotient_free(ptr::null_mut()) };
    unsafe { coinv_string_free(ptr::null_mut()) };
}
