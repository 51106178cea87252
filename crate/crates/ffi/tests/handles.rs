use std::ffi::{CStr, CString};
use std::process::Command;
use std::ptr;

use theta_forms_ffi::*;

fn build(form: TfForm, family: TfFamily, sig: [u16; 4]) -> (TfStatus, *mut TfCochain) {
    let mut h = ptr::null_mut();
    let st = unsafe { tf_build(form, family, sig[0], sig[1], sig[2], sig[3], &mut h) };
    (st, h)
}

fn export(h: *const TfCochain, format: TfFormat) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { tf_cochain_export(h, format, &mut s) }, TfStatus::Ok);
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { tf_string_free(s) };
    out
}

#[test]
fn build_export_parse_free() {
    let (st, h) = build(TfForm::PsiCup, TfFamily::Unitary, [2, 1, 2, 0]);
    assert_eq!(st, TfStatus::Ok);
    let json = export(h, TfFormat::Json);
    assert!(json.contains("\"xibar:1:1\""), "{json}");

    let mut back = ptr::null_mut();
    let text = CString::new(json.clone()).unwrap();
    assert_eq!(unsafe { tf_cochain_from_json(text.as_ptr(), &mut back) }, TfStatus::Ok);
    assert_eq!(export(back, TfFormat::Json), json);

    let mut n = 0usize;
    assert_eq!(unsafe { tf_cochain_term_count(back, &mut n) }, TfStatus::Ok);
    assert_eq!(n, 1);
    unsafe {
        tf_cochain_free(h);
        tf_cochain_free(back);
        tf_cochain_free(ptr::null_mut());
    }
}

#[test]
fn closed_and_invariant() {
    let (st, h) = build(TfForm::KmNabla, TfFamily::Unitary, [1, 1, 1, 1]);
    assert_eq!(st, TfStatus::Ok);
    let (mut closed, mut inv) = (false, false);
    unsafe {
        assert_eq!(tf_cochain_is_closed(h, &mut closed), TfStatus::Ok);
        assert_eq!(tf_cochain_is_k_invariant(h, &mut inv), TfStatus::Ok);
        tf_cochain_free(h);
    }
    assert!(closed && inv);
}

#[test]
fn error_codes() {
    let (st, h) = build(TfForm::PsiOrth, TfFamily::Orthogonal, [2, 1, 1, 1]);
    assert_eq!(st, TfStatus::InvalidSignature);
    assert!(h.is_null());
    let (st, _) = build(TfForm::KmNabla, TfFamily::Unitary, [1, 1, 2, 1]);
    assert_eq!(st, TfStatus::ShapeMismatch);
    let (st, _) = build(TfForm::PsiCup, TfFamily::Orthogonal, [1, 1, 1, 0]);
    assert_eq!(st, TfStatus::InvalidArgument);
    let status = unsafe { tf_build(TfForm::PsiQ, TfFamily::Unitary, 1, 1, 1, 0, ptr::null_mut()) };
    assert_eq!(status, TfStatus::NullPointer);

    let bad = CString::new("{\"terms\": 3}").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { tf_cochain_from_json(bad.as_ptr(), &mut out) }, TfStatus::ParseError);

    let msg = unsafe { CStr::from_ptr(tf_status_message(TfStatus::ShapeMismatch)) };
    assert_eq!(msg.to_str().unwrap(), "shape mismatch");
}

#[test]
fn suite_through_c_interface() {
    let mut passed = false;
    let name = CString::new("oscillator-relations").unwrap();
    assert_eq!(unsafe { tf_verify(name.as_ptr(), 0, &mut passed) }, TfStatus::Ok);
    assert!(passed);
    let name = CString::new("no-such-suite").unwrap();
    assert_eq!(unsafe { tf_verify(name.as_ptr(), 0, &mut passed) }, TfStatus::ParseError);
}

#[test]
fn representation_numbers() {
    let mut out = [0u64; 3];
    assert_eq!(unsafe { tf_rep_numbers(ptr::null(), 0, 2, out.as_mut_ptr()) }, TfStatus::Ok);
    assert_eq!(out, [1, 240, 2160]);
    let a2 = [2i64, -1, -1, 2];
    assert_eq!(unsafe { tf_rep_numbers(a2.as_ptr(), 2, 2, out.as_mut_ptr()) }, TfStatus::Ok);
    assert_eq!(out, [1, 6, 0]);
}

#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/theta_forms.h");
    let Ok(status) = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c", header])
        .status()
    else {
        eprintln!("no C compiler on PATH; skipping");
        return;
    };
    assert!(status.success());
}
