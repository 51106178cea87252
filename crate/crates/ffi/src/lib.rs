//! C interface. Cochains cross the boundary as opaque [`TfCochain`] handles;
//! every call returns a [`TfStatus`] and writes results through out-pointers.
//! Strings returned to the caller are released with [`tf_string_free`].

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use theta_forms::export::{export_form, parse_form, Format};
use theta_forms::forms::{
    build_km_explicit, build_km_nabla, build_mixed, build_psi_cup, build_psi_orth, build_psi_q, gk_differential,
    k_invariance_residual, GKCochain,
};
use theta_forms::oscillator::{Family, Signature};
use theta_forms::theta::{rep_numbers, GramMatrix};
use theta_forms::verify::{run_suite, Suite, VerifyOptions};
use theta_forms::Error;

/// Opaque cochain handle.
pub struct TfCochain(GKCochain);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidSignature = 2,
    InvalidArgument = 3,
    ShapeMismatch = 4,
    ParseError = 5,
    VerificationFailed = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TfFamily {
    Unitary = 0,
    Orthogonal = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TfForm {
    PsiQ = 0,
    PsiCup = 1,
    PsiOrth = 2,
    KmNabla = 3,
    KmExplicit = 4,
    Mixed = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TfFormat {
    Json = 0,
    Latex = 1,
}

impl From<Error> for TfStatus {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidSignature(_) => TfStatus::InvalidSignature,
            Error::IndexOutOfRange { .. } | Error::FamilyMismatch(_) => TfStatus::InvalidArgument,
            Error::ShapeMismatch(_) => TfStatus::ShapeMismatch,
            Error::Parse(_) => TfStatus::ParseError,
            Error::CalibrationFailure(_) => TfStatus::VerificationFailed,
            _ => TfStatus::Internal,
        }
    }
}

/// Runs `f`, mapping panics to [`TfStatus::Internal`].
fn guard(f: impl FnOnce() -> Result<(), TfStatus>) -> TfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TfStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => TfStatus::Internal,
    }
}

unsafe fn cochain<'a>(c: *const TfCochain) -> Result<&'a GKCochain, TfStatus> {
    c.as_ref().map(|c| &c.0).ok_or(TfStatus::NullPointer)
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, TfStatus> {
    if s.is_null() {
        return Err(TfStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| TfStatus::ParseError)
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), TfStatus> {
    if out.is_null() {
        return Err(TfStatus::NullPointer);
    }
    out.write(v);
    Ok(())
}

fn boxed(c: GKCochain) -> *mut TfCochain {
    Box::into_raw(Box::new(TfCochain(c)))
}

/// Human-readable name of a status code. The string is static.
#[no_mangle]
pub extern "C" fn tf_status_message(status: TfStatus) -> *const c_char {
    let s: &'static CStr = match status {
        TfStatus::Ok => c"ok",
        TfStatus::NullPointer => c"null pointer argument",
        TfStatus::InvalidSignature => c"invalid signature",
        TfStatus::InvalidArgument => c"invalid argument",
        TfStatus::ShapeMismatch => c"shape mismatch",
        TfStatus::ParseError => c"parse error",
        TfStatus::VerificationFailed => c"verification failed",
        TfStatus::Internal => c"internal error",
    };
    s.as_ptr()
}

/// Builds a form and stores a new handle in `*out`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn tf_build(
    form: TfForm,
    family: TfFamily,
    p: u16,
    q: u16,
    r: u16,
    s: u16,
    out: *mut *mut TfCochain,
) -> TfStatus {
    guard(|| {
        let family = match family {
            TfFamily::Unitary => Family::Unitary,
            TfFamily::Orthogonal => Family::Orthogonal,
        };
        let sig = Signature::new(p, q, r, s, family)?;
        let c = match form {
            TfForm::PsiQ => build_psi_q(sig, 1),
            TfForm::PsiCup => build_psi_cup(sig),
            TfForm::PsiOrth => build_psi_orth(sig),
            TfForm::KmNabla => build_km_nabla(sig),
            TfForm::KmExplicit => build_km_explicit(sig),
            TfForm::Mixed => build_mixed(sig),
        }?;
        put(out, boxed(c))
    })
}

/// Parses a JSON artifact into a new handle.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn tf_cochain_from_json(json: *const c_char, out: *mut *mut TfCochain) -> TfStatus {
    guard(|| {
        let c = parse_form(text(json)?)?;
        put(out, boxed(c))
    })
}

/// # Safety
/// `c` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tf_cochain_free(c: *mut TfCochain) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Renders `c` and stores a new string in `*out`.
///
/// # Safety
/// `c` must be a live handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn tf_cochain_export(c: *const TfCochain, format: TfFormat, out: *mut *mut c_char) -> TfStatus {
    guard(|| {
        let format = match format {
            TfFormat::Json => Format::Json,
            TfFormat::Latex => Format::Latex,
        };
        let s = CString::new(export_form(cochain(c)?, format)).map_err(|_| TfStatus::Internal)?;
        put(out, s.into_raw())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of nonzero wedge terms of `c`.
///
/// # Safety
/// `c` must be a live handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn tf_cochain_term_count(c: *const TfCochain, out: *mut usize) -> TfStatus {
    guard(|| put(out, cochain(c)?.form.len()))
}

/// Writes whether `d c = 0`.
///
/// # Safety
/// `c` must be a live handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn tf_cochain_is_closed(c: *const TfCochain, out: *mut bool) -> TfStatus {
    guard(|| {
        let d = gk_differential(cochain(c)?)?;
        put(out, d.is_zero())
    })
}

/// Writes whether the K-invariance residual of `c` vanishes.
///
/// # Safety
/// `c` must be a live handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn tf_cochain_is_k_invariant(c: *const TfCochain, out: *mut bool) -> TfStatus {
    guard(|| {
        let res = k_invariance_residual(cochain(c)?)?;
        put(out, res.is_zero())
    })
}

/// Runs a named suite. Returns [`TfStatus::VerificationFailed`] when any
/// check fails; `*passed` is written in both cases.
///
/// # Safety
/// `suite` must be NUL-terminated; `passed` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn tf_verify(suite: *const c_char, seed: u64, passed: *mut bool) -> TfStatus {
    guard(|| {
        let suite: Suite = text(suite)?.parse()?;
        let opts = VerifyOptions { seed, ..VerifyOptions::default() };
        let report = run_suite(suite, &opts);
        put(passed, report.passed)?;
        if report.passed {
            Ok(())
        } else {
            Err(TfStatus::VerificationFailed)
        }
    })
}

/// Writes `r(0), …, r(n_max)` for the lattice with integer Gram matrix
/// `gram` (row-major, `dim × dim`) into `out`, which must hold `n_max + 1`
/// entries. A null `gram` selects E8.
///
/// # Safety
/// `gram` must be null or hold `dim * dim` entries; `out` must hold
/// `n_max + 1` entries.
#[no_mangle]
pub unsafe extern "C" fn tf_rep_numbers(gram: *const i64, dim: usize, n_max: u64, out: *mut u64) -> TfStatus {
    guard(|| {
        if out.is_null() {
            return Err(TfStatus::NullPointer);
        }
        let g = if gram.is_null() {
            GramMatrix::e8().clone()
        } else {
            let flat = std::slice::from_raw_parts(gram, dim * dim);
            let rows: Vec<Vec<i64>> = flat.chunks(dim.max(1)).map(|r| r.to_vec()).collect();
            GramMatrix::from_integers(&rows)?
        };
        let counts = rep_numbers(&g, n_max);
        ptr::copy_nonoverlapping(counts.as_ptr(), out, counts.len());
        Ok(())
    })
}
