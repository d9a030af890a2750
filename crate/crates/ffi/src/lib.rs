//! C ABI over `noc`: opaque handles, status codes and a per-thread error
//! message.
//!
//! Every fallible function returns a [`NocStatus`] and writes its result
//! through an out-pointer. Strings returned to the caller are freed with
//! [`noc_string_free`], handles with their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use noc::enumerative::degree;
use noc::exactalg::rational::to_display;
use noc::exactalg::Poly;
use noc::invariants::{stability, Net};
use noc::orbitdata::Dataset;
use noc::report::{run_check, Status};
use noc::resolver::{class_amu, class_of, factored_display, Mu};
use noc::thom::tp_orbit;
use noc::NocError;

/// Result codes of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NocStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidInput = 4,
    UnknownOrbit = 5,
    NotUnique = 6,
    CheckFailed = 7,
    Internal = 8,
}

/// Verdict of one verification check.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NocCheckStatus {
    Pass = 0,
    Fail = 1,
    ReportedConstant = 2,
}

/// A polynomial in the Chern generators `u1..u3, v1..v3`.
pub struct NocPoly(Poly);

/// A net of conics with rational coefficients.
pub struct NocNet(Net);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("NUL bytes replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &NocError) -> NocStatus {
    match e {
        NocError::Parse(_) => NocStatus::ParseError,
        NocError::UnknownOrbit(_) => NocStatus::UnknownOrbit,
        NocError::NonUnique(_) | NocError::DegenerateBasis { .. } => NocStatus::NotUnique,
        NocError::CheckFailed(_) | NocError::NotInSpan | NocError::Inconsistent | NocError::NotPolynomial => {
            NocStatus::CheckFailed
        }
        _ => NocStatus::InvalidInput,
    }
}

/// Runs `f`, recording any error or panic as the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), (NocStatus, String)>) -> NocStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => NocStatus::Ok,
        Ok(Err((s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            NocStatus::Internal
        }
    }
}

fn lift<T>(r: noc::Result<T>) -> Result<T, (NocStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

/// # Safety
/// `s` is null or a NUL-terminated string.
unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, (NocStatus, String)> {
    if s.is_null() {
        return Err((NocStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(s).to_str().map_err(|_| (NocStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

fn check_out<T>(out: *mut T) -> Result<(), (NocStatus, String)> {
    if out.is_null() {
        Err((NocStatus::NullPointer, "null output pointer".into()))
    } else {
        Ok(())
    }
}

/// # Safety
/// `out` is non-null and writable.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (NocStatus, String)> {
    let c = CString::new(s).map_err(|_| (NocStatus::Internal, "NUL byte in output".into()))?;
    *out = c.into_raw();
    Ok(())
}

/// Message of the last failing call on this thread, or null. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn noc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` is null or came from this library and was not freed before.
#[no_mangle]
pub unsafe extern "C" fn noc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Class of an orbit closure by name (`C`, `D*`, `(1^4)`, ...); `A_mu` and
/// `A_inf` give the codimension-one classes.
///
/// # Safety
/// `name` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn noc_class_of(name: *const c_char, out: *mut *mut NocPoly) -> NocStatus {
    guard(|| {
        check_out(out)?;
        let name = read_str(name)?;
        let p = lift(match name {
            "A_mu" => class_amu(Mu::Finite),
            "A_inf" => class_amu(Mu::Infinity),
            n => class_of(n),
        })?;
        *out = Box::into_raw(Box::new(NocPoly(p)));
        Ok(())
    })
}

/// # Safety
/// `p` is null or a handle from this library not freed before.
#[no_mangle]
pub unsafe extern "C" fn noc_poly_free(p: *mut NocPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Canonical string, with the `v1 - 2*u1` factors pulled out.
///
/// # Safety
/// `p` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn noc_poly_to_string(p: *const NocPoly, out: *mut *mut c_char) -> NocStatus {
    guard(|| {
        check_out(out)?;
        let p = p.as_ref().ok_or((NocStatus::NullPointer, "null polynomial".into()))?;
        write_string(out, factored_display(&p.0))
    })
}

/// Degree of the projectivized subvariety with class `p`, as a fraction.
///
/// # Safety
/// `p` is a live handle; `num` and `den` are writable.
#[no_mangle]
pub unsafe extern "C" fn noc_poly_degree(p: *const NocPoly, num: *mut i64, den: *mut i64) -> NocStatus {
    guard(|| {
        check_out(num)?;
        check_out(den)?;
        let p = p.as_ref().ok_or((NocStatus::NullPointer, "null polynomial".into()))?;
        let d = lift(degree(&p.0))?;
        let overflow = || (NocStatus::Internal, "degree overflows i64".to_string());
        *num = i64::try_from(d.numer()).map_err(|_| overflow())?;
        *den = i64::try_from(d.denom()).map_err(|_| overflow())?;
        Ok(())
    })
}

/// Parses three quadrics such as `"y^2 + 2xz"`, `"2yz"`, `"-x^2 + z^2"`.
///
/// # Safety
/// The three strings are NUL-terminated; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn noc_net_parse(
    q1: *const c_char,
    q2: *const c_char,
    q3: *const c_char,
    out: *mut *mut NocNet,
) -> NocStatus {
    guard(|| {
        check_out(out)?;
        let q = [read_str(q1)?, read_str(q2)?, read_str(q3)?];
        let n = lift(Net::parse(&q))?;
        *out = Box::into_raw(Box::new(NocNet(n)));
        Ok(())
    })
}

/// # Safety
/// `n` is null or a handle from this library not freed before.
#[no_mangle]
pub unsafe extern "C" fn noc_net_free(n: *mut NocNet) {
    if !n.is_null() {
        drop(Box::from_raw(n));
    }
}

/// `J6`, `J12` and the stability verdict of a net, as strings.
///
/// # Safety
/// `n` is a live handle; the three out-pointers are writable.
#[no_mangle]
pub unsafe extern "C" fn noc_net_invariants(
    n: *const NocNet,
    j6: *mut *mut c_char,
    j12: *mut *mut c_char,
    verdict: *mut *mut c_char,
) -> NocStatus {
    guard(|| {
        check_out(j6)?;
        check_out(j12)?;
        check_out(verdict)?;
        let n = n.as_ref().ok_or((NocStatus::NullPointer, "null net".into()))?;
        let (a, b, s) = lift(stability(&n.0))?;
        write_string(j6, to_display(&a))?;
        write_string(j12, to_display(&b))?;
        write_string(verdict, s.to_string())
    })
}

/// Schur expansion of the Thom polynomial of a Σ⁰ orbit for `p` target
/// roots.
///
/// # Safety
/// `orbit` is NUL-terminated; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn noc_thom_schur(orbit: *const c_char, p: u32, out: *mut *mut c_char) -> NocStatus {
    guard(|| {
        check_out(out)?;
        let name = read_str(orbit)?;
        let r = lift(tp_orbit(name, p as usize))?;
        write_string(out, r.schur.to_string())
    })
}

/// Runs verification check `id` (1..=15) on the built-in dataset.
///
/// # Safety
/// `status` is writable; `detail` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn noc_verify_check(id: u32, status: *mut NocCheckStatus, detail: *mut *mut c_char) -> NocStatus {
    guard(|| {
        check_out(status)?;
        if !(1..=15).contains(&id) {
            return Err((NocStatus::InvalidInput, format!("no check {id}; checks are 1..=15")));
        }
        let row = run_check(id, Dataset::builtin());
        *status = match row.status {
            Status::Pass => NocCheckStatus::Pass,
            Status::Fail => NocCheckStatus::Fail,
            Status::ReportedConstant => NocCheckStatus::ReportedConstant,
        };
        if !detail.is_null() {
            write_string(detail, row.detail)?;
        }
        Ok(())
    })
}
