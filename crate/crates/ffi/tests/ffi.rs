use std::ffi::{CStr, CString};
use std::ptr;

use brandt_omega_ffi::*;

fn family(spec: &str) -> *mut BoFamily {
    let spec = CString::new(spec).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { bo_family_new(spec.as_ptr(), &mut out) },
        BoStatus::Ok
    );
    out
}

fn e(i: u64, j: u64, k: u64) -> BoElem {
    BoElem {
        is_zero: false,
        i,
        j,
        k,
    }
}

fn br(row: u64, val: u64, col: u64) -> BoBrandt {
    BoBrandt {
        is_zero: false,
        row,
        val,
        col,
    }
}

fn last_error() -> String {
    let p = bo_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn multiply_invert_order() {
    let f = family("0,1,3");
    let mut out = BoElem::default();
    assert_eq!(
        unsafe { bo_multiply(f, e(0, 1, 3), e(3, 0, 1), &mut out) },
        BoStatus::Ok
    );
    assert_eq!(out, e(2, 0, 1));
    assert_eq!(
        unsafe { bo_multiply(f, e(0, 1, 2), e(3, 0, 1), &mut out) },
        BoStatus::InvalidElement
    );
    assert!(last_error().contains("(0,1,2)"));
    assert_eq!(unsafe { bo_invert(e(1, 4, 3), &mut out) }, BoStatus::Ok);
    assert_eq!(out, e(4, 1, 3));
    let mut leq = false;
    assert_eq!(
        unsafe { bo_nat_leq(e(3, 2, 1), e(1, 0, 3), &mut leq) },
        BoStatus::Ok
    );
    assert!(leq);
    assert!(bo_last_error().is_null());
    unsafe { bo_family_free(f) };
}

#[test]
fn embedding_round_trip() {
    let f = family("0,1,3");
    let mut image = BoBrandt::default();
    assert_eq!(unsafe { bo_embed(f, e(2, 0, 1), &mut image) }, BoStatus::Ok);
    assert_eq!(image, br(3, 1, 1));
    let mut back = BoElem::default();
    assert_eq!(
        unsafe { bo_embed_inverse(f, image, &mut back) },
        BoStatus::Ok
    );
    assert_eq!(back, e(2, 0, 1));
    assert_eq!(
        unsafe { bo_embed_inverse(f, br(3, 2, 5), &mut back) },
        BoStatus::NotRestricted
    );
    let mut product = BoBrandt::default();
    assert_eq!(
        unsafe { bo_brandt_multiply(br(2, 1, 4), br(4, 3, 5), &mut product) },
        BoStatus::Ok
    );
    assert_eq!(product, br(2, 1, 5));
    unsafe { bo_family_free(f) };
}

#[test]
fn solve() {
    let f = family("0,1,3");
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { bo_solve(f, BoSide::Left, br(2, 1, 4), br(2, 1, 5), &mut s) },
        BoStatus::Ok
    );
    assert!(!unsafe { bo_solutions_is_infinite(s) });
    assert_eq!(unsafe { bo_solutions_len(s) }, 2);
    let mut x = BoBrandt::default();
    assert_eq!(unsafe { bo_solutions_get(s, 1, &mut x) }, BoStatus::Ok);
    assert_eq!(x, br(4, 3, 5));
    assert_eq!(
        unsafe { bo_solutions_get(s, 2, &mut x) },
        BoStatus::OutOfRange
    );
    unsafe { bo_solutions_free(s) };

    let zero = BoBrandt {
        is_zero: true,
        ..Default::default()
    };
    assert_eq!(
        unsafe { bo_solve(f, BoSide::Right, br(2, 1, 4), zero, &mut s) },
        BoStatus::Ok
    );
    assert!(unsafe { bo_solutions_is_infinite(s) });
    assert_eq!(unsafe { bo_solutions_len(s) }, 0);
    unsafe { bo_solutions_free(s) };
    unsafe { bo_family_free(f) };
}

#[test]
fn verify_json() {
    let f = family("0,1,3");
    let mut json = ptr::null_mut();
    let mut passed = false;
    assert_eq!(
        unsafe { bo_verify_json(f, 3, &mut json, &mut passed) },
        BoStatus::Ok
    );
    assert!(passed);
    let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_owned();
    unsafe { bo_string_free(json) };
    let value: Vec<serde_json::Value> = serde_json::from_str(&text).unwrap();
    assert_eq!(value.len(), 5);
    assert!(value.iter().all(|r| r["passed"] == true));
    unsafe { bo_family_free(f) };
}

#[test]
fn errors() {
    let mut out = ptr::null_mut();
    let bad = CString::new("1,1").unwrap();
    assert_eq!(
        unsafe { bo_family_new(bad.as_ptr(), &mut out) },
        BoStatus::ParseError
    );
    assert!(out.is_null());
    assert_eq!(
        unsafe { bo_family_new(ptr::null(), &mut out) },
        BoStatus::NullPointer
    );
    let mut x = BoElem::default();
    assert_eq!(
        unsafe { bo_multiply(ptr::null(), e(0, 0, 0), e(0, 0, 0), &mut x) },
        BoStatus::NullPointer
    );
    assert_eq!(
        unsafe { bo_invert(e(u64::MAX, 0, 0), &mut x) },
        BoStatus::OutOfRange
    );
    assert_eq!(
        unsafe { bo_invert(e(0, 0, 0), ptr::null_mut()) },
        BoStatus::NullPointer
    );
    unsafe {
        bo_family_free(ptr::null_mut());
        bo_solutions_free(ptr::null_mut());
        bo_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/brandt_omega.h");
    for name in [
        "bo_last_error",
        "bo_family_new",
        "bo_family_free",
        "bo_multiply",
        "bo_invert",
        "bo_nat_leq",
        "bo_embed",
        "bo_embed_inverse",
        "bo_brandt_multiply",
        "bo_solve",
        "bo_solutions_is_infinite",
        "bo_solutions_len",
        "bo_solutions_get",
        "bo_solutions_free",
        "bo_verify_json",
        "bo_string_free",
        "typedef struct BoFamily BoFamily;",
        "BO_STATUS_NOT_RESTRICTED = 4",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
