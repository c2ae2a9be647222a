use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use fuzzymt_ffi::*;

fn algebra(t: FzmtTNorm, i: FzmtSide, n: FzmtSide) -> *mut FzmtAlgebra {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { fzmt_algebra_new(t, i, n, &mut out) }, FzmtStatus::Ok);
    assert!(!out.is_null());
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(fzmt_last_error_message()) }
        .to_str()
        .unwrap()
        .to_owned()
}

#[test]
fn connectives() {
    let alg = algebra(FzmtTNorm::Lukasiewicz, FzmtSide::S, FzmtSide::S);
    let mut v = 0.0;
    unsafe {
        assert_eq!(fzmt_and(alg, 0.7, 0.6, &mut v), FzmtStatus::Ok);
        assert!((v - 0.3).abs() < 1e-15);
        assert_eq!(fzmt_or(alg, 0.7, 0.6, &mut v), FzmtStatus::Ok);
        assert_eq!(v, 1.0);
        assert_eq!(fzmt_not(alg, 0.25, &mut v), FzmtStatus::Ok);
        assert_eq!(v, 0.75);
        assert_eq!(fzmt_implies(alg, 0.8, 0.5, &mut v), FzmtStatus::Ok);
        assert!((v - 0.7).abs() < 1e-15);
        fzmt_algebra_free(alg);
    }
}

#[test]
fn errors_set_status_and_message() {
    let alg = algebra(FzmtTNorm::Product, FzmtSide::S, FzmtSide::S);
    let mut v = 0.0;
    unsafe {
        assert_eq!(fzmt_and(alg, 1.5, 0.5, &mut v), FzmtStatus::OutOfRange);
        assert!(last_error().contains("1.5"), "{}", last_error());
        assert_eq!(fzmt_and(alg, f64::NAN, 0.5, &mut v), FzmtStatus::OutOfRange);
        assert_eq!(fzmt_and(alg, 0.5, 0.5, ptr::null_mut()), FzmtStatus::NullPointer);
        assert_eq!(fzmt_and(ptr::null(), 0.5, 0.5, &mut v), FzmtStatus::NullPointer);
        assert_eq!(fzmt_and(alg, 0.5, 0.5, &mut v), FzmtStatus::Ok);
        assert_eq!(last_error(), "");
        fzmt_algebra_free(alg);
        fzmt_algebra_free(ptr::null_mut());
    }
}

#[test]
fn modus_tollens_results() {
    let mut r = std::mem::MaybeUninit::<FzmtMtResult>::uninit();
    unsafe {
        let ss = algebra(FzmtTNorm::Godel, FzmtSide::S, FzmtSide::S);
        assert_eq!(fzmt_modus_tollens(ss, 0.95, 1.0, r.as_mut_ptr()), FzmtStatus::Ok);
        let res = r.assume_init();
        assert!(res.consistent);
        assert_eq!(res.nu_not_h, 0.95);
        assert_eq!(res.diagnostic, FzmtDiagnostic::None);
        fzmt_algebra_free(ss);

        let rr = algebra(FzmtTNorm::Product, FzmtSide::R, FzmtSide::R);
        assert_eq!(fzmt_modus_tollens(rr, 0.95, 1.0, r.as_mut_ptr()), FzmtStatus::Ok);
        let res = r.assume_init();
        assert!(!res.consistent);
        assert!(res.nu_not_h.is_nan());
        assert_eq!(res.diagnostic, FzmtDiagnostic::RImplicationTwoValued);
        fzmt_algebra_free(rr);

        let rs = algebra(FzmtTNorm::Product, FzmtSide::R, FzmtSide::S);
        assert_eq!(fzmt_sht(rs, 0.05, 0.01, 1.0, r.as_mut_ptr()), FzmtStatus::Ok);
        let res = r.assume_init();
        assert!((res.nu_h - 0.01 / 0.95).abs() < 1e-12);
        assert!((res.nu_not_h - (1.0 - 0.01 / 0.95)).abs() < 1e-12);
        assert_eq!(
            fzmt_sht(rs, 0.0, 0.01, 1.0, r.as_mut_ptr()),
            FzmtStatus::InvalidArgument
        );
        assert_eq!(
            fzmt_sht(rs, 0.05, 0.0, 1.0, r.as_mut_ptr()),
            FzmtStatus::InvalidArgument
        );
        fzmt_algebra_free(rs);
    }
}

#[test]
fn formulas() {
    let alg = algebra(FzmtTNorm::Product, FzmtSide::S, FzmtSide::S);
    let text = CString::new("a -> (b | !c)").unwrap();
    let mut f = ptr::null_mut();
    unsafe {
        assert_eq!(fzmt_formula_parse(text.as_ptr(), &mut f), FzmtStatus::Ok);
        let names: Vec<CString> = ["a", "b", "c"].iter().map(|n| CString::new(*n).unwrap()).collect();
        let name_ptrs: Vec<*const c_char> = names.iter().map(|n| n.as_ptr()).collect();
        let values = [0.3, 0.5, 0.5];
        let mut v = 0.0;
        assert_eq!(
            fzmt_formula_eval(f, alg, name_ptrs.as_ptr(), values.as_ptr(), 3, &mut v),
            FzmtStatus::Ok
        );
        // b | !c = 0.75; a -> 0.75 = 1 - 0.3 + 0.3 * 0.75
        assert!((v - 0.925).abs() < 1e-12);

        assert_eq!(
            fzmt_formula_eval(f, alg, name_ptrs.as_ptr(), values.as_ptr(), 2, &mut v),
            FzmtStatus::UnboundAtom
        );
        assert!(last_error().contains("`c`"));
        assert_eq!(
            fzmt_formula_eval(f, alg, ptr::null(), ptr::null(), 0, &mut v),
            FzmtStatus::UnboundAtom
        );
        fzmt_formula_free(f);

        let bad = CString::new("a & | b").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(fzmt_formula_parse(bad.as_ptr(), &mut g), FzmtStatus::Parse);
        assert!(g.is_null());
        assert!(last_error().contains("column 5"), "{}", last_error());
        assert_eq!(fzmt_formula_parse(ptr::null(), &mut g), FzmtStatus::NullPointer);
        fzmt_algebra_free(alg);
    }
}

#[test]
fn statistics() {
    let mut v = 0.0;
    unsafe {
        assert_eq!(fzmt_p_value_upper(1.6448536270, 0.0, 1.0, &mut v), FzmtStatus::Ok);
        assert!((v - 0.05).abs() < 1e-6);
        assert_eq!(fzmt_p_value_upper(1.0, 0.0, 0.0, &mut v), FzmtStatus::InvalidArgument);
        assert_eq!(fzmt_posterior(0.04, 0.5, 0.04, &mut v), FzmtStatus::Ok);
        assert_eq!(v, 0.5);
        assert_eq!(fzmt_posterior(0.04, 0.0, 0.0, &mut v), FzmtStatus::Undefined);
        assert_eq!(fzmt_posterior(0.04, 2.0, 0.0, &mut v), FzmtStatus::OutOfRange);
    }
}

#[test]
fn version_matches_package() {
    let v = unsafe { CStr::from_ptr(fzmt_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/fuzzymt.h")).unwrap();
    for symbol in [
        "typedef struct FzmtAlgebra FzmtAlgebra;",
        "typedef struct FzmtFormula FzmtFormula;",
        "FZMT_STATUS_OK = 0",
        "fzmt_algebra_new(",
        "fzmt_modus_tollens(",
        "fzmt_formula_eval(",
        "fzmt_last_error_message(void)",
    ] {
        assert!(header.contains(symbol), "header lacks {symbol}");
    }
}

/// Compiles and runs a small C program against the header and static
/// library when a C compiler is on PATH.
#[test]
fn c_program_links_and_runs() {
    let Some(cc) = ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok())
    else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    // target/<profile>/deps/<test-binary>
    let profile_dir = std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf();
    let staticlib = profile_dir.join("libfuzzymt_ffi.a");
    if !staticlib.exists() {
        eprintln!("{} not built; skipping", staticlib.display());
        return;
    }
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("fuzzymt_smoke");
    let status = Command::new(cc)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&staticlib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("ok "));
}
