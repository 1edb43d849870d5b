//! C ABI over `coinv`. A quotient is described by an opaque
//! [`CoinvQuotient`] handle; every call returns a [`CoinvStatus`] and the
//! message of the last failure on the calling thread is available through
//! [`coinv_last_error_message`]. Strings returned to the caller are owned by
//! the caller and released with [`coinv_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use coinv::basis::enumerate_basis;
use coinv::ideal::{Setting, Variant};
use coinv::monomial::YMonomial;
use coinv::oracle::{hilbert_combinatorial, hilbert_oracle, Caps};
use coinv::rewrite::{reduce_y_traced, Strategy};
use coinv::verify::{verify, VerifyOptions};
use coinv::Error;

/// Result codes. `COINV_STATUS_OK` is zero; every other value is a failure.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoinvStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Domain = 3,
    Parse = 4,
    InvalidColor = 5,
    MalformedPartition = 6,
    InvalidFace = 7,
    UnsupportedStatistic = 8,
    NotAMultichain = 9,
    NotApplicable = 10,
    PatternMismatch = 11,
    Certification = 12,
    ResourceLimit = 13,
    Unsupported = 14,
    Decomposition = 15,
    Panic = 16,
}

impl From<&Error> for CoinvStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::InvalidColor { .. } => CoinvStatus::InvalidColor,
            Error::Domain(_) => CoinvStatus::Domain,
            Error::MalformedPartition(_) => CoinvStatus::MalformedPartition,
            Error::InvalidFace(_) => CoinvStatus::InvalidFace,
            Error::UnsupportedStatistic(_) => CoinvStatus::UnsupportedStatistic,
            Error::NotAMultichain(_) => CoinvStatus::NotAMultichain,
            Error::NotApplicable(_) => CoinvStatus::NotApplicable,
            Error::PatternMismatch(_) => CoinvStatus::PatternMismatch,
            Error::Certification(_) => CoinvStatus::Certification,
            Error::ResourceLimit(_) => CoinvStatus::ResourceLimit,
            Error::Unsupported(_) => CoinvStatus::Unsupported,
            Error::Decomposition(_) => CoinvStatus::Decomposition,
            Error::Parse(_) => CoinvStatus::Parse,
        }
    }
}

/// Which quotient a handle describes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoinvVariant {
    R = 0,
    S = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoinvSetting {
    X = 0,
    Y = 1,
}

/// Opaque quotient description.
pub struct CoinvQuotient {
    n: usize,
    k: usize,
    r: usize,
    variant: Variant,
    caps: Caps,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

/// Runs `f`, translating errors and panics into status codes.
fn guard<F: FnOnce() -> Result<(), CoinvStatus>>(f: F) -> CoinvStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CoinvStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic".into());
            CoinvStatus::Panic
        }
    }
}

fn fail(e: Error) -> CoinvStatus {
    let s = CoinvStatus::from(&e);
    set_error(e.to_string());
    s
}

fn null(what: &str) -> CoinvStatus {
    set_error(format!("{what} is null"));
    CoinvStatus::NullArgument
}

unsafe fn handle<'a>(h: *const CoinvQuotient) -> Result<&'a CoinvQuotient, CoinvStatus> {
    h.as_ref().ok_or_else(|| null("handle"))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, CoinvStatus> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error(format!("{what} is not valid UTF-8"));
        CoinvStatus::InvalidUtf8
    })
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), CoinvStatus> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    let c = CString::new(s).map_err(|_| fail(Error::Domain("output contains a NUL byte".into())))?;
    *out = c.into_raw();
    Ok(())
}

/// Creates a handle for the quotient with parameters `n`, `k`, `r`.
///
/// # Safety
/// `out` must be a valid pointer; the handle is released with
/// [`coinv_quotient_free`].
#[no_mangle]
pub unsafe extern "C" fn coinv_quotient_new(
    n: usize,
    k: usize,
    r: usize,
    variant: CoinvVariant,
    out: *mut *mut CoinvQuotient,
) -> CoinvStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        if n == 0 || n > coinv::subset::MAX_N || k > n || r == 0 {
            return Err(fail(Error::Domain(format!("invalid parameters n={n}, k={k}, r={r}"))));
        }
        let variant = match variant {
            CoinvVariant::R => Variant::R,
            CoinvVariant::S => Variant::S,
        };
        *out = Box::into_raw(Box::new(CoinvQuotient { n, k, r, variant, caps: Caps::default() }));
        Ok(())
    })
}

/// # Safety
/// `h` must come from [`coinv_quotient_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn coinv_quotient_free(h: *mut CoinvQuotient) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Sets the degree and slice caps used by the linear-algebra oracles.
///
/// # Safety
/// `h` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn coinv_quotient_set_caps(h: *mut CoinvQuotient, max_degree: usize, max_slice: usize) -> CoinvStatus {
    guard(|| {
        let q = h.as_mut().ok_or_else(|| null("handle"))?;
        q.caps = Caps { max_degree, max_slice };
        Ok(())
    })
}

/// Number of standard monomials.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn coinv_basis_size(h: *const CoinvQuotient, out: *mut usize) -> CoinvStatus {
    guard(|| {
        let q = handle(h)?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        *out = enumerate_basis(q.n, q.k, q.r, q.variant).map_err(fail)?.len();
        Ok(())
    })
}

/// Hilbert series coefficients, computed by the oracle of `setting` and
/// checked against the combinatorial count. The array is released with
/// [`coinv_hilbert_free`].
///
/// # Safety
/// `h` must be a live handle; `out` and `out_len` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn coinv_hilbert(
    h: *const CoinvQuotient,
    setting: CoinvSetting,
    out: *mut *mut u64,
    out_len: *mut usize,
) -> CoinvStatus {
    guard(|| {
        let q = handle(h)?;
        if out.is_null() || out_len.is_null() {
            return Err(null("output pointer"));
        }
        let setting = match setting {
            CoinvSetting::X => Setting::X,
            CoinvSetting::Y => Setting::Y,
        };
        let coeffs = hilbert_oracle(q.n, q.k, q.r, q.variant, setting, q.caps).map_err(fail)?.coefficients();
        let comb = hilbert_combinatorial(q.n, q.k, q.r, q.variant).map_err(fail)?;
        if coeffs != comb {
            return Err(fail(Error::Certification(format!("oracle {coeffs:?} differs from comaj count {comb:?}"))));
        }
        let boxed: Box<[u64]> = coeffs.into_iter().map(|c| c as u64).collect();
        *out_len = boxed.len();
        *out = Box::into_raw(boxed) as *mut u64;
        Ok(())
    })
}

/// # Safety
/// `ptr` and `len` must come from one call of [`coinv_hilbert`].
#[no_mangle]
pub unsafe extern "C" fn coinv_hilbert_free(ptr: *mut u64, len: usize) {
    if !ptr.is_null() {
        drop(Box::from_raw(ptr::slice_from_raw_parts_mut(ptr, len)));
    }
}

/// Straightens a y-monomial such as `y{5}^3*y{2,5}^2` and writes the
/// move-by-move trace as text.
///
/// # Safety
/// `h` must be a live handle, `monomial` a NUL-terminated string and `out`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn coinv_rewrite(h: *const CoinvQuotient, monomial: *const c_char, out: *mut *mut c_char) -> CoinvStatus {
    guard(|| {
        let q = handle(h)?;
        let s = read_str(monomial, "monomial")?;
        let y = YMonomial::parse(s).map_err(fail)?;
        let trace = reduce_y_traced(&y, q.n, q.k, q.r, q.variant, Strategy::LargestVariable).map_err(fail)?;
        write_string(out, trace.to_string())
    })
}

/// Runs the verification suite and writes its JSON report. `passed` is set
/// to 1 when every check passes.
///
/// # Safety
/// `h` must be a live handle; `passed` and `out_json` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn coinv_verify(
    h: *const CoinvQuotient,
    all: bool,
    seed: u64,
    passed: *mut bool,
    out_json: *mut *mut c_char,
) -> CoinvStatus {
    guard(|| {
        let q = handle(h)?;
        if passed.is_null() {
            return Err(null("passed"));
        }
        let opts = VerifyOptions { all, seed, caps: q.caps, ..VerifyOptions::default() };
        let rep = verify(q.n, q.k, q.r, q.variant, &opts).map_err(fail)?;
        *passed = rep.passed();
        write_string(out_json, rep.to_json().to_string())
    })
}

/// Message of the last failure on this thread, or null. The pointer stays
/// valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn coinv_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn coinv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_mapping_is_stable() {
        assert_eq!(CoinvStatus::Ok as i32, 0);
        assert_eq!(CoinvStatus::from(&Error::ResourceLimit(String::new())), CoinvStatus::ResourceLimit);
        assert_eq!(CoinvStatus::from(&Error::Parse(String::new())), CoinvStatus::Parse);
    }
}
