//! C ABI for the curvespec library.
//!
//! The entry point is an opaque analysis handle created from a pair
//! list; accessors return exact values as strings (allocated here,
//! released with `curvespec_string_free`). Every fallible call reports
//! a status code mirroring the CLI exit-code contract, and the last
//! error message is retrievable per thread.

use curvespec::puiseux::{characteristic_data, parse_pairs, CharacteristicData};
use curvespec::rational::rat_string;
use curvespec::report::{build_report, report_json};
use curvespec::resolution::{
    decorate, export_dot, log_canonical_threshold, DecoratedResolution, DotKind, Limits,
};
use curvespec::spectrum::{spectrum_enumeration, Spectrum};
use curvespec::verify::{verify_pairs, Fault};
use curvespec::Error;
use libc::c_char;
use std::cell::RefCell;
use std::ffi::{CStr, CString};

/// Status codes for every fallible call. Matches the CLI exit-code
/// contract, with FFI-specific argument failures on top.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurvespecStatus {
    Ok = 0,
    InvalidInput = 1,
    VerificationFailed = 2,
    GuardLimit = 3,
    NullArgument = 4,
    InvalidUtf8 = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> CurvespecStatus {
    match e.exit_code() {
        2 => CurvespecStatus::VerificationFailed,
        3 => CurvespecStatus::GuardLimit,
        _ => CurvespecStatus::InvalidInput,
    }
}

/// Opaque analysis result for one pair list.
pub struct CurvespecAnalysis {
    cd: CharacteristicData,
    dec: DecoratedResolution,
    spectrum: Spectrum,
}

fn to_c_string(text: String) -> *mut c_char {
    CString::new(text)
        .expect("no interior NUL in generated text")
        .into_raw()
}

/// Parse a pair list (`"k1,n1;k2,n2"`) and run the full analysis. On
/// success writes the new handle through `out`; the caller owns it and
/// must release it with `curvespec_analysis_free`.
///
/// # Safety
/// `pairs` must be a valid NUL-terminated string and `out` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn curvespec_analysis_new(
    pairs: *const c_char,
    out: *mut *mut CurvespecAnalysis,
) -> CurvespecStatus {
    if pairs.is_null() || out.is_null() {
        set_error("null argument".into());
        return CurvespecStatus::NullArgument;
    }
    let text = match CStr::from_ptr(pairs).to_str() {
        Ok(t) => t,
        Err(_) => {
            set_error("pair list is not valid UTF-8".into());
            return CurvespecStatus::InvalidUtf8;
        }
    };
    let limits = Limits::default();
    let parsed = match parse_pairs(text) {
        Ok(p) => p,
        Err(e) => {
            set_error(e.to_string());
            return status_of(&e);
        }
    };
    let dec = match decorate(&parsed, &limits) {
        Ok(d) => d,
        Err(e) => {
            set_error(e.to_string());
            return status_of(&e);
        }
    };
    let cd = characteristic_data(&parsed);
    let spectrum = spectrum_enumeration(&cd);
    *out = Box::into_raw(Box::new(CurvespecAnalysis { cd, dec, spectrum }));
    CurvespecStatus::Ok
}

/// Release an analysis handle. Accepts null.
///
/// # Safety
/// `handle` must come from `curvespec_analysis_new` and not be used
/// afterwards.
#[no_mangle]
pub unsafe extern "C" fn curvespec_analysis_free(handle: *mut CurvespecAnalysis) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Milnor number of the analyzed singularity.
///
/// # Safety
/// `handle` must be a live analysis handle.
#[no_mangle]
pub unsafe extern "C" fn curvespec_milnor_number(handle: *const CurvespecAnalysis) -> u64 {
    if handle.is_null() {
        return 0;
    }
    (*handle).spectrum.mu()
}

/// Number of distinct spectrum entries.
///
/// # Safety
/// `handle` must be a live analysis handle.
#[no_mangle]
pub unsafe extern "C" fn curvespec_spectrum_len(handle: *const CurvespecAnalysis) -> usize {
    if handle.is_null() {
        return 0;
    }
    (*handle).spectrum.entries().len()
}

/// Spectrum entry at `index` as an exact `"p/q"` string; also writes
/// the multiplicity if `mult` is non-null. Returns null when the index
/// is out of range. Release the string with `curvespec_string_free`.
///
/// # Safety
/// `handle` must be a live analysis handle; `mult` may be null.
#[no_mangle]
pub unsafe extern "C" fn curvespec_spectrum_entry(
    handle: *const CurvespecAnalysis,
    index: usize,
    mult: *mut u64,
) -> *mut c_char {
    if handle.is_null() {
        return std::ptr::null_mut();
    }
    match (*handle).spectrum.entries().get(index) {
        None => std::ptr::null_mut(),
        Some((alpha, m)) => {
            if !mult.is_null() {
                *mult = *m;
            }
            to_c_string(rat_string(alpha))
        }
    }
}

/// Log canonical threshold as an exact `"p/q"` string.
///
/// # Safety
/// `handle` must be a live analysis handle.
#[no_mangle]
pub unsafe extern "C" fn curvespec_lct(handle: *const CurvespecAnalysis) -> *mut c_char {
    if handle.is_null() {
        return std::ptr::null_mut();
    }
    to_c_string(rat_string(&log_canonical_threshold(&(*handle).dec)))
}

/// Full JSON report for the analyzed pair list.
///
/// # Safety
/// `handle` must be a live analysis handle.
#[no_mangle]
pub unsafe extern "C" fn curvespec_report_json(handle: *const CurvespecAnalysis) -> *mut c_char {
    if handle.is_null() {
        return std::ptr::null_mut();
    }
    match build_report(&(*handle).cd.pairs, &Limits::default()) {
        Ok(report) => to_c_string(report_json(&report)),
        Err(e) => {
            set_error(e.to_string());
            std::ptr::null_mut()
        }
    }
}

/// DOT text of the resolution; `dual` selects the dual graph instead
/// of the Enriques diagram.
///
/// # Safety
/// `handle` must be a live analysis handle.
#[no_mangle]
pub unsafe extern "C" fn curvespec_dot(
    handle: *const CurvespecAnalysis,
    dual: bool,
) -> *mut c_char {
    if handle.is_null() {
        return std::ptr::null_mut();
    }
    let kind = if dual { DotKind::Dual } else { DotKind::Enriques };
    to_c_string(export_dot(&(*handle).dec, kind))
}

/// Run the full verification harness on the analyzed pair list.
/// Returns `Ok` when every check passes and `VerificationFailed`
/// otherwise (with the first failing check in the error message).
///
/// # Safety
/// `handle` must be a live analysis handle.
#[no_mangle]
pub unsafe extern "C" fn curvespec_verify(handle: *const CurvespecAnalysis) -> CurvespecStatus {
    if handle.is_null() {
        set_error("null argument".into());
        return CurvespecStatus::NullArgument;
    }
    match verify_pairs(&(*handle).cd.pairs, &Limits::default(), Fault::None) {
        Ok(report) => match report.first_failure() {
            None => CurvespecStatus::Ok,
            Some(check) => {
                set_error(format!("{}: {}", check.name, check.detail));
                CurvespecStatus::VerificationFailed
            }
        },
        Err(e) => {
            set_error(e.to_string());
            status_of(&e)
        }
    }
}

/// Release a string returned by any accessor. Accepts null.
///
/// # Safety
/// `text` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn curvespec_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// Message of the most recent error on this thread, or null if none.
/// Owned by the library; do not free. Valid until the next failing
/// call on the same thread.
#[no_mangle]
pub extern "C" fn curvespec_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map(|c| c.as_ptr())
            .unwrap_or(std::ptr::null())
    })
}
