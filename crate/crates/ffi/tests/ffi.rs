use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use noc_ffi::*;

fn take(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { noc_string_free(s) };
    out
}

fn last_error() -> String {
    let p = noc_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn class_string_and_degree() {
    let name = CString::new("C").unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { noc_class_of(name.as_ptr(), &mut p) }, NocStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { noc_poly_to_string(p, &mut s) }, NocStatus::Ok);
    assert_eq!(take(s), "8*(v1 - 2*u1)^2");
    let (mut num, mut den) = (0i64, 0i64);
    assert_eq!(unsafe { noc_poly_degree(p, &mut num, &mut den) }, NocStatus::Ok);
    assert_eq!((num, den), (72, 1));
    unsafe { noc_poly_free(p) };

    let amu = CString::new("A_mu").unwrap();
    let mut q = ptr::null_mut();
    assert_eq!(unsafe { noc_class_of(amu.as_ptr(), &mut q) }, NocStatus::Ok);
    assert_eq!(unsafe { noc_poly_degree(q, &mut num, &mut den) }, NocStatus::Ok);
    assert_eq!((num, den), (12, 1));
    unsafe { noc_poly_free(q) };
}

#[test]
fn errors_set_status_and_message() {
    let name = CString::new("Z").unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { noc_class_of(name.as_ptr(), &mut p) }, NocStatus::UnknownOrbit);
    assert!(p.is_null());
    assert!(last_error().contains('Z'));
    assert_eq!(unsafe { noc_class_of(ptr::null(), &mut p) }, NocStatus::NullPointer);
    assert_eq!(unsafe { noc_class_of(name.as_ptr(), ptr::null_mut()) }, NocStatus::NullPointer);
    let q = CString::new("x^2 +").unwrap();
    let mut n = ptr::null_mut();
    assert_eq!(unsafe { noc_net_parse(q.as_ptr(), q.as_ptr(), q.as_ptr(), &mut n) }, NocStatus::ParseError);
    let mut st = NocCheckStatus::Pass;
    assert_eq!(unsafe { noc_verify_check(16, &mut st, ptr::null_mut()) }, NocStatus::InvalidInput);
    unsafe { noc_poly_free(ptr::null_mut()) };
    unsafe { noc_net_free(ptr::null_mut()) };
    unsafe { noc_string_free(ptr::null_mut()) };
}

#[test]
fn net_invariants() {
    // ν_{-9,1}: J6 = 24, k = 1
    let q: Vec<CString> = ["y^2 + 2xz", "2yz", "-x^2 + 2xz - 2y^2 - 9z^2"].iter().map(|s| CString::new(*s).unwrap()).collect();
    let mut n = ptr::null_mut();
    assert_eq!(unsafe { noc_net_parse(q[0].as_ptr(), q[1].as_ptr(), q[2].as_ptr(), &mut n) }, NocStatus::Ok);
    let (mut a, mut b, mut v) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { noc_net_invariants(n, &mut a, &mut b, &mut v) }, NocStatus::Ok);
    assert_eq!((take(a), take(b), take(v)), ("24".into(), "576".into(), "k = 1".into()));
    unsafe { noc_net_free(n) };
}

#[test]
fn thom_and_verification() {
    let a = CString::new("A").unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { noc_thom_schur(a.as_ptr(), 3, &mut s) }, NocStatus::Ok);
    assert_eq!(take(s), "4*Δ(3331) + 8*Δ(433)");
    let mut st = NocCheckStatus::Fail;
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { noc_verify_check(2, &mut st, &mut d) }, NocStatus::Ok);
    assert_eq!(st, NocCheckStatus::Pass);
    assert!(take(d).contains("4*v1 - 8*u1"));
}

#[test]
fn c_program_links_against_the_static_library() {
    let exe = std::env::current_exe().unwrap();
    let target = exe.parent().unwrap().parent().unwrap();
    let lib = target.join("libnoc_ffi.a");
    assert!(lib.exists(), "missing {}", lib.display());
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let bin = target.join("noc_ffi_smoke");
    let status = Command::new("cc")
        .arg(crate_dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .expect("cc runs");
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "8*(v1 - 2*u1)^2 72/1\n24 576 k = 1\n");
}
