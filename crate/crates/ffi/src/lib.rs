//! C ABI over `fuzzymt`.
//!
//! Every fallible function returns an [`FzmtStatus`] and writes its result
//! through an out-pointer. On failure a human-readable message is available
//! from [`fzmt_last_error_message`] on the same thread. Handles returned by
//! `*_new`/`*_parse` must be released with the matching `*_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use fuzzymt::algebra::{Algebra, Convention, Implication, Negation, TNormKind};
use fuzzymt::bayes;
use fuzzymt::formula::{self, AtomValuation, Formula};
use fuzzymt::inference::{self, DiagnosticCode, MtPremises, MtResult};
use fuzzymt::sht::{self, ShtScenario, TestStatistic};
use fuzzymt::TruthValue;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FzmtStatus {
    Ok = 0,
    NullPointer = 1,
    OutOfRange = 2,
    InvalidArgument = 3,
    Parse = 4,
    UnboundAtom = 5,
    Undefined = 6,
    Numeric = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FzmtTNorm {
    Godel = 0,
    Product = 1,
    Lukasiewicz = 2,
}

/// Selects the S (1 - x based) or R (residuum based) variant of a connective.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FzmtSide {
    S = 0,
    R = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FzmtDiagnostic {
    None = 0,
    RNegationFractionalPremise = 1,
    RImplicationTwoValued = 2,
    ZeroConsequent = 3,
    GodelRequiresP1EqualsP = 4,
    ContradictoryPremises = 5,
    CrossCheckFailed = 6,
    NotAnalyzable = 7,
}

/// Flat Modus Tollens result. Undetermined values are NaN.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct FzmtMtResult {
    pub consistent: bool,
    pub nu_not_h: f64,
    pub nu_h: f64,
    pub nu_consequent: f64,
    pub nu_contrapositive: f64,
    pub diagnostic: FzmtDiagnostic,
    pub boundary: bool,
    pub generalized: bool,
    pub underdetermined: bool,
}

/// Opaque algebra handle.
pub struct FzmtAlgebra {
    inner: Algebra,
}

/// Opaque parsed-formula handle.
pub struct FzmtFormula {
    inner: Formula,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(FzmtStatus, String);

impl Failure {
    fn new(status: FzmtStatus, msg: impl ToString) -> Self {
        Failure(status, msg.to_string())
    }
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> FzmtStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            FzmtStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_owned());
            set_last_error(&format!("internal panic: {msg}"));
            FzmtStatus::Panic
        }
    }
}

fn truth(name: &str, x: f64) -> Result<TruthValue, Failure> {
    TruthValue::new(x).map_err(|e| Failure::new(FzmtStatus::OutOfRange, format!("{name}: {e}")))
}

unsafe fn out_ref<'a, T>(ptr: *mut T) -> Result<&'a mut T, Failure> {
    ptr.as_mut()
        .ok_or_else(|| Failure::new(FzmtStatus::NullPointer, "null output pointer"))
}

unsafe fn in_ref<'a, T>(ptr: *const T, what: &str) -> Result<&'a T, Failure> {
    ptr.as_ref()
        .ok_or_else(|| Failure::new(FzmtStatus::NullPointer, format!("null {what}")))
}

unsafe fn in_str<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if ptr.is_null() {
        return Err(Failure::new(FzmtStatus::NullPointer, format!("null {what}")));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| Failure::new(FzmtStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

fn numeric(e: impl ToString) -> Failure {
    Failure::new(FzmtStatus::Numeric, e)
}

fn diagnostic(code: DiagnosticCode) -> FzmtDiagnostic {
    match code {
        DiagnosticCode::RNegationFractionalPremise => FzmtDiagnostic::RNegationFractionalPremise,
        DiagnosticCode::RImplicationTwoValued => FzmtDiagnostic::RImplicationTwoValued,
        DiagnosticCode::ZeroConsequent => FzmtDiagnostic::ZeroConsequent,
        DiagnosticCode::GodelRequiresP1EqualsP => FzmtDiagnostic::GodelRequiresP1EqualsP,
        DiagnosticCode::ContradictoryPremises => FzmtDiagnostic::ContradictoryPremises,
        DiagnosticCode::CrossCheckFailed => FzmtDiagnostic::CrossCheckFailed,
        DiagnosticCode::NotAnalyzable => FzmtDiagnostic::NotAnalyzable,
    }
}

fn flatten(r: &MtResult) -> FzmtMtResult {
    let nan = |v: Option<TruthValue>| v.map_or(f64::NAN, TruthValue::get);
    FzmtMtResult {
        consistent: r.is_consistent(),
        nu_not_h: nan(r.nu_not_h),
        nu_h: nan(r.nu_h),
        nu_consequent: nan(r.nu_consequent),
        nu_contrapositive: nan(r.nu_contrapositive),
        diagnostic: r
            .diagnostic
            .as_ref()
            .map_or(FzmtDiagnostic::None, |d| diagnostic(d.code)),
        boundary: r.boundary,
        generalized: r.generalized,
        underdetermined: r.underdetermined,
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn fzmt_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the most recent failed call on this thread, or an empty
/// string. The pointer stays valid until the next `fzmt_*` call on the thread.
#[no_mangle]
pub extern "C" fn fzmt_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Creates an algebra from a built-in t-norm and an implication/negation mix.
///
/// # Safety
/// `out` must be null or point to writable storage for a handle pointer.
#[no_mangle]
pub unsafe extern "C" fn fzmt_algebra_new(
    tnorm: FzmtTNorm,
    implication: FzmtSide,
    negation: FzmtSide,
    out: *mut *mut FzmtAlgebra,
) -> FzmtStatus {
    guard(|| {
        let out = out_ref(out)?;
        let kind = match tnorm {
            FzmtTNorm::Godel => TNormKind::Godel,
            FzmtTNorm::Product => TNormKind::Product,
            FzmtTNorm::Lukasiewicz => TNormKind::Lukasiewicz,
        };
        let implication = match implication {
            FzmtSide::S => Implication::S,
            FzmtSide::R => Implication::R,
        };
        let negation = match negation {
            FzmtSide::S => Negation::S,
            FzmtSide::R => Negation::R,
        };
        let inner = Algebra::new(kind, Convention::new(implication, negation)).map_err(numeric)?;
        *out = Box::into_raw(Box::new(FzmtAlgebra { inner }));
        Ok(())
    })
}

/// Releases an algebra handle. Null is ignored.
///
/// # Safety
/// `algebra` must be null or a handle from [`fzmt_algebra_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fzmt_algebra_free(algebra: *mut FzmtAlgebra) {
    if !algebra.is_null() {
        drop(Box::from_raw(algebra));
    }
}

/// # Safety
/// `algebra` must be a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fzmt_and(algebra: *const FzmtAlgebra, x: f64, y: f64, out: *mut f64) -> FzmtStatus {
    guard(|| {
        let alg = &in_ref(algebra, "algebra")?.inner;
        let out = out_ref(out)?;
        *out = alg.and(truth("x", x)?, truth("y", y)?).map_err(numeric)?.get();
        Ok(())
    })
}

/// # Safety
/// `algebra` must be a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fzmt_or(algebra: *const FzmtAlgebra, x: f64, y: f64, out: *mut f64) -> FzmtStatus {
    guard(|| {
        let alg = &in_ref(algebra, "algebra")?.inner;
        let out = out_ref(out)?;
        *out = alg.or(truth("x", x)?, truth("y", y)?).map_err(numeric)?.get();
        Ok(())
    })
}

/// # Safety
/// `algebra` must be a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fzmt_not(algebra: *const FzmtAlgebra, x: f64, out: *mut f64) -> FzmtStatus {
    guard(|| {
        let alg = &in_ref(algebra, "algebra")?.inner;
        let out = out_ref(out)?;
        *out = alg.not(truth("x", x)?).map_err(numeric)?.get();
        Ok(())
    })
}

/// # Safety
/// `algebra` must be a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fzmt_implies(algebra: *const FzmtAlgebra, x: f64, y: f64, out: *mut f64) -> FzmtStatus {
    guard(|| {
        let alg = &in_ref(algebra, "algebra")?.inner;
        let out = out_ref(out)?;
        *out = alg.implies(truth("x", x)?, truth("y", y)?).map_err(numeric)?.get();
        Ok(())
    })
}

/// Fuzzy Modus Tollens from `v(H -> C)` and `v(not C)`. An inconsistent
/// algebra is reported through `out->consistent`, not the status.
///
/// # Safety
/// `algebra` must be a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fzmt_modus_tollens(
    algebra: *const FzmtAlgebra,
    nu_p1: f64,
    nu_p2: f64,
    out: *mut FzmtMtResult,
) -> FzmtStatus {
    guard(|| {
        let alg = &in_ref(algebra, "algebra")?.inner;
        let out = out_ref(out)?;
        let premises = MtPremises::new(truth("nu_p1", nu_p1)?, truth("nu_p2", nu_p2)?);
        *out = flatten(&inference::modus_tollens(alg, premises).map_err(numeric)?);
        Ok(())
    })
}

/// Hypothesis-test scenario: premises `1 - alpha^n` and `1 - p_err`.
///
/// # Safety
/// `algebra` must be a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fzmt_sht(
    algebra: *const FzmtAlgebra,
    alpha: f64,
    p_err: f64,
    model_n: f64,
    out: *mut FzmtMtResult,
) -> FzmtStatus {
    guard(|| {
        let alg = &in_ref(algebra, "algebra")?.inner;
        let out = out_ref(out)?;
        let scenario = ShtScenario::new(alpha, p_err, model_n, alg.clone())
            .map_err(|e| Failure::new(FzmtStatus::InvalidArgument, e))?;
        let verdict = sht::run_sht(&scenario).map_err(numeric)?;
        let result = verdict
            .mt
            .as_ref()
            .ok_or_else(|| Failure::new(FzmtStatus::Numeric, "scenario produced no inference"))?;
        *out = flatten(result);
        Ok(())
    })
}

/// Upper-tail p-value of `observed` under a normal null.
///
/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fzmt_p_value_upper(observed: f64, null_mean: f64, null_sd: f64, out: *mut f64) -> FzmtStatus {
    guard(|| {
        let out = out_ref(out)?;
        let stat = TestStatistic::new(observed, null_mean, null_sd)
            .map_err(|e| Failure::new(FzmtStatus::InvalidArgument, e))?;
        *out = sht::p_value_upper(&stat);
        Ok(())
    })
}

/// Bayes posterior `P(H|E)`; returns `Undefined` when the evidence has
/// probability zero.
///
/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fzmt_posterior(p_e_h: f64, p_h: f64, p_e_not_h: f64, out: *mut f64) -> FzmtStatus {
    guard(|| {
        let out = out_ref(out)?;
        match bayes::posterior(p_e_h, p_h, p_e_not_h).map_err(|e| Failure::new(FzmtStatus::OutOfRange, e))? {
            Some(v) => {
                *out = v;
                Ok(())
            }
            None => Err(Failure::new(FzmtStatus::Undefined, "P(E) is zero")),
        }
    })
}

/// Parses a formula such as `"a & !b -> c"`.
///
/// # Safety
/// `text` must be null or a NUL-terminated string; `out` must be null or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn fzmt_formula_parse(text: *const c_char, out: *mut *mut FzmtFormula) -> FzmtStatus {
    guard(|| {
        let text = in_str(text, "formula text")?;
        let out = out_ref(out)?;
        let inner = formula::parse(text).map_err(|e| Failure::new(FzmtStatus::Parse, e))?;
        *out = Box::into_raw(Box::new(FzmtFormula { inner }));
        Ok(())
    })
}

/// Releases a formula handle. Null is ignored.
///
/// # Safety
/// `formula` must be null or a handle from [`fzmt_formula_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fzmt_formula_free(formula: *mut FzmtFormula) {
    if !formula.is_null() {
        drop(Box::from_raw(formula));
    }
}

/// Evaluates a formula with `len` atoms bound by the parallel arrays
/// `names` and `values`.
///
/// # Safety
/// `formula` and `algebra` must be live handles; `names` and `values` must
/// each point to `len` elements (or may be null when `len` is 0); every
/// name must be NUL-terminated; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fzmt_formula_eval(
    formula: *const FzmtFormula,
    algebra: *const FzmtAlgebra,
    names: *const *const c_char,
    values: *const f64,
    len: usize,
    out: *mut f64,
) -> FzmtStatus {
    guard(|| {
        let f = &in_ref(formula, "formula")?.inner;
        let alg = &in_ref(algebra, "algebra")?.inner;
        let out = out_ref(out)?;
        let mut valuation = AtomValuation::new();
        if len > 0 {
            if names.is_null() || values.is_null() {
                return Err(Failure::new(FzmtStatus::NullPointer, "null atom arrays"));
            }
            let names = std::slice::from_raw_parts(names, len);
            let values = std::slice::from_raw_parts(values, len);
            for (&name, &value) in names.iter().zip(values) {
                let name = in_str(name, "atom name")?;
                valuation
                    .insert(name, truth(name, value)?)
                    .map_err(|e| Failure::new(FzmtStatus::InvalidArgument, e))?;
            }
        }
        *out = match f.evaluate(&valuation, alg) {
            Ok(v) => v.get(),
            Err(formula::EvalError::UnboundAtom(a)) => {
                return Err(Failure::new(
                    FzmtStatus::UnboundAtom,
                    format!("atom `{a}` has no value"),
                ))
            }
            Err(e) => return Err(numeric(e)),
        };
        Ok(())
    })
}
