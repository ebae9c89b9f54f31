//! C ABI for `brandt-omega`.
//!
//! Every fallible function returns a [`BoStatus`] and writes its result
//! through an out-pointer. On failure, [`bo_last_error`] describes the error
//! for the calling thread. Families and solution sets are opaque handles
//! released with their `_free` functions; strings returned by the library
//! are released with [`bo_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use brandt_omega::equations::{solve_left, solve_right, SolutionSet};
use brandt_omega::text::MAX_TEXT_NAT;
use brandt_omega::verify::{verification_suite, verification_suite_json};
use brandt_omega::{embed, embed_inverse, nat_leq, AtomicFamily, BElem, BrandtElem, Error};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoStatus {
    Ok = 0,
    NullPointer = 1,
    ParseError = 2,
    InvalidElement = 3,
    NotRestricted = 4,
    OutOfRange = 5,
    InvalidArgument = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoSide {
    /// `A·X = B`
    Left = 0,
    /// `X·A = B`
    Right = 1,
}

/// An element of `B_ω^𝓕`: the zero when `is_zero`, otherwise `(i, j, {k})`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BoElem {
    pub is_zero: bool,
    pub i: u64,
    pub j: u64,
    pub k: u64,
}

/// A Brandt element: `O` when `is_zero`, otherwise `(row; val; col)`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BoBrandt {
    pub is_zero: bool,
    pub row: u64,
    pub val: u64,
    pub col: u64,
}

/// Opaque atomic family.
pub struct BoFamily(AtomicFamily);

/// Opaque solution set of an equation.
pub struct BoSolutions(SolutionSet);

impl From<BElem> for BoElem {
    fn from(x: BElem) -> Self {
        match x {
            BElem::Zero => BoElem {
                is_zero: true,
                ..Default::default()
            },
            BElem::Triple { i, j, k } => BoElem {
                is_zero: false,
                i,
                j,
                k,
            },
        }
    }
}

impl From<BoElem> for BElem {
    fn from(x: BoElem) -> Self {
        if x.is_zero {
            BElem::Zero
        } else {
            BElem::triple(x.i, x.j, x.k)
        }
    }
}

impl From<BrandtElem> for BoBrandt {
    fn from(e: BrandtElem) -> Self {
        match e {
            BrandtElem::O => BoBrandt {
                is_zero: true,
                ..Default::default()
            },
            BrandtElem::Triple { row, val, col } => BoBrandt {
                is_zero: false,
                row,
                val,
                col,
            },
        }
    }
}

impl From<BoBrandt> for BrandtElem {
    fn from(e: BoBrandt) -> Self {
        if e.is_zero {
            BrandtElem::O
        } else {
            BrandtElem::triple(e.row, e.val, e.col)
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = CString::new(message.into().replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn status_of(e: &Error) -> BoStatus {
    match e {
        Error::Parse(_) => BoStatus::ParseError,
        Error::InvalidElement(_) | Error::NotInSupport(_) => BoStatus::InvalidElement,
        Error::NotRestricted(_) => BoStatus::NotRestricted,
        Error::IndexOutOfRange { .. } | Error::NeighbourhoodIndex { .. } => BoStatus::OutOfRange,
        _ => BoStatus::InvalidArgument,
    }
}

/// Runs `body`, recording errors and panics for [`bo_last_error`].
fn guard(body: impl FnOnce() -> Result<(), (BoStatus, String)>) -> BoStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => BoStatus::Ok,
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            BoStatus::Panic
        }
    }
}

/// Rejects coordinates above the parser limit so that products cannot overflow.
fn in_range(coords: [u64; 3]) -> Result<(), (BoStatus, String)> {
    match coords.into_iter().find(|&c| c > MAX_TEXT_NAT) {
        Some(c) => Err((
            BoStatus::OutOfRange,
            format!("coordinate {c} exceeds {MAX_TEXT_NAT}"),
        )),
        None => Ok(()),
    }
}

fn elem(x: BoElem) -> Result<BElem, (BoStatus, String)> {
    if !x.is_zero {
        in_range([x.i, x.j, x.k])?;
    }
    Ok(x.into())
}

fn brandt(e: BoBrandt) -> Result<BrandtElem, (BoStatus, String)> {
    if !e.is_zero {
        in_range([e.row, e.val, e.col])?;
    }
    Ok(e.into())
}

fn lib_err(e: Error) -> (BoStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(name: &str) -> (BoStatus, String) {
    (BoStatus::NullPointer, format!("{name} is null"))
}

unsafe fn family_ref<'a>(family: *const BoFamily) -> Result<&'a AtomicFamily, (BoStatus, String)> {
    // SAFETY: caller passes a handle from bo_family_new or null.
    unsafe { family.as_ref() }
        .map(|f| &f.0)
        .ok_or_else(|| null("family"))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), (BoStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    // SAFETY: non-null and, per the caller contract, valid for writes.
    unsafe { out.write(value) };
    Ok(())
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn bo_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a support such as `"0,1,3"` or `"0,2,+5"`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bo_family_new(spec: *const c_char, out: *mut *mut BoFamily) -> BoStatus {
    guard(|| {
        if spec.is_null() {
            return Err(null("spec"));
        }
        // SAFETY: non-null NUL-terminated string per the contract.
        let text = unsafe { CStr::from_ptr(spec) }
            .to_str()
            .map_err(|_| (BoStatus::ParseError, "spec is not UTF-8".to_string()))?;
        let family: AtomicFamily = text.parse().map_err(lib_err)?;
        unsafe { write(out, Box::into_raw(Box::new(BoFamily(family)))) }
    })
}

/// # Safety
/// `family` must come from [`bo_family_new`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bo_family_free(family: *mut BoFamily) {
    if !family.is_null() {
        // SAFETY: allocated by bo_family_new.
        drop(unsafe { Box::from_raw(family) });
    }
}

/// Product in `B_ω^𝓕`; both factors must be valid for the family.
///
/// # Safety
/// `family` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bo_multiply(
    family: *const BoFamily,
    a: BoElem,
    b: BoElem,
    out: *mut BoElem,
) -> BoStatus {
    guard(|| {
        let f = unsafe { family_ref(family) }?;
        let product = brandt_omega::multiply(elem(a)?, elem(b)?, f).map_err(lib_err)?;
        unsafe { write(out, product.into()) }
    })
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bo_invert(x: BoElem, out: *mut BoElem) -> BoStatus {
    guard(|| unsafe { write(out, elem(x)?.inverse().into()) })
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bo_nat_leq(x: BoElem, y: BoElem, out: *mut bool) -> BoStatus {
    guard(|| unsafe { write(out, nat_leq(elem(x)?, elem(y)?)) })
}

/// `(i, j, {k}) ↦ (i + k; k; j + k)`.
///
/// # Safety
/// `family` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bo_embed(
    family: *const BoFamily,
    x: BoElem,
    out: *mut BoBrandt,
) -> BoStatus {
    guard(|| {
        let f = unsafe { family_ref(family) }?;
        let x = elem(x)?.validate(f).map_err(lib_err)?;
        unsafe { write(out, embed(x).into()) }
    })
}

/// # Safety
/// `family` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bo_embed_inverse(
    family: *const BoFamily,
    e: BoBrandt,
    out: *mut BoElem,
) -> BoStatus {
    guard(|| {
        let f = unsafe { family_ref(family) }?;
        let x = embed_inverse(brandt(e)?, f).map_err(lib_err)?;
        unsafe { write(out, x.into()) }
    })
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bo_brandt_multiply(
    a: BoBrandt,
    b: BoBrandt,
    out: *mut BoBrandt,
) -> BoStatus {
    guard(|| unsafe { write(out, (brandt(a)? * brandt(b)?).into()) })
}

/// Solves `A·X = B` or `X·A = B` in the restricted subsemigroup.
///
/// # Safety
/// `family` must be a live handle; `out` must be valid for writes. The
/// handle written to `out` is released with [`bo_solutions_free`].
#[no_mangle]
pub unsafe extern "C" fn bo_solve(
    family: *const BoFamily,
    side: BoSide,
    a: BoBrandt,
    b: BoBrandt,
    out: *mut *mut BoSolutions,
) -> BoStatus {
    guard(|| {
        let f = unsafe { family_ref(family) }?;
        let solved = match side {
            BoSide::Left => solve_left(brandt(a)?, brandt(b)?, f),
            BoSide::Right => solve_right(brandt(a)?, brandt(b)?, f),
        }
        .map_err(lib_err)?;
        unsafe { write(out, Box::into_raw(Box::new(BoSolutions(solved)))) }
    })
}

/// True for the `B = O` case, whose solution set is infinite.
///
/// # Safety
/// `solutions` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn bo_solutions_is_infinite(solutions: *const BoSolutions) -> bool {
    // SAFETY: live handle or null per the contract.
    unsafe { solutions.as_ref() }.is_some_and(|s| s.0.finite().is_none())
}

/// Number of solutions; 0 for the infinite case.
///
/// # Safety
/// `solutions` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn bo_solutions_len(solutions: *const BoSolutions) -> usize {
    unsafe { solutions.as_ref() }.map_or(0, |s| s.0.finite().map_or(0, <[_]>::len))
}

/// # Safety
/// `solutions` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bo_solutions_get(
    solutions: *const BoSolutions,
    index: usize,
    out: *mut BoBrandt,
) -> BoStatus {
    guard(|| {
        let s = unsafe { solutions.as_ref() }.ok_or_else(|| null("solutions"))?;
        let list = s.0.finite().unwrap_or(&[]);
        let e = list.get(index).ok_or_else(|| {
            lib_err(Error::IndexOutOfRange {
                index,
                len: list.len(),
            })
        })?;
        unsafe { write(out, (*e).into()) }
    })
}

/// # Safety
/// `solutions` must come from [`bo_solve`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bo_solutions_free(solutions: *mut BoSolutions) {
    if !solutions.is_null() {
        // SAFETY: allocated by bo_solve.
        drop(unsafe { Box::from_raw(solutions) });
    }
}

/// Runs the verification suite and writes its JSON report. `*all_passed`
/// is set when every check passes.
///
/// # Safety
/// `family` must be a live handle; `out` and `all_passed` must be valid for
/// writes. The string is released with [`bo_string_free`].
#[no_mangle]
pub unsafe extern "C" fn bo_verify_json(
    family: *const BoFamily,
    bound: u64,
    out: *mut *mut c_char,
    all_passed: *mut bool,
) -> BoStatus {
    guard(|| {
        let f = unsafe { family_ref(family) }?;
        if out.is_null() || all_passed.is_null() {
            return Err(null("out"));
        }
        let suite = verification_suite(f, bound);
        let passed = suite.iter().all(|(_, r)| r.passed);
        let json = verification_suite_json(&suite).to_string();
        let text = CString::new(json).expect("JSON has no NUL");
        unsafe {
            write(all_passed, passed)?;
            write(out, text.into_raw())
        }
    })
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bo_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: produced by CString::into_raw.
        drop(unsafe { CString::from_raw(s) });
    }
}
