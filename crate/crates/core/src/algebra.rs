//! t-norms, their dual t-conorms, and the negation/implication connectives
//! under the S (strong negation) and R (residuum) conventions.
//!
//! The three built-in t-norms use closed forms throughout. A custom t-norm is
//! any binary function on `[0, 1]`; it is admitted into an [`Algebra`] only
//! after passing [`check_tnorm_laws`](crate::laws::check_tnorm_laws), and its
//! R-connectives fall back to [`residuum_numeric`].

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::laws::{self, LawReport};
use crate::truth::TruthValue;

/// Tolerance used when a custom t-norm needs a numeric residuum.
pub const RESIDUUM_TOL: f64 = 1e-12;

/// Samples and seed used to vet a custom t-norm before it enters an algebra.
pub const GATE_SAMPLES: usize = 1000;
pub const GATE_SEED: u64 = 0x5EED_7A0B;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("t-norm `{name}` returned {value} for inputs ({x}, {y}); expected a value in [0, 1]")]
    CustomOutOfRange { name: String, x: f64, y: f64, value: f64 },
    #[error("t-norm is not monotone in its first argument at x = {x}: bracketing failed while inverting for y = {y}")]
    NonMonotone { x: f64, y: f64 },
    #[error("residuum tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    #[error("custom t-norm `{name}` violates the t-norm axioms: {summary}")]
    LawViolation { name: String, summary: String },
}

/// A binary function on reals used as a custom t-norm.
pub type TNormFn = dyn Fn(f64, f64) -> f64 + Send + Sync;

/// A user-supplied t-norm with a display name.
#[derive(Clone)]
pub struct CustomTNorm {
    name: String,
    func: Arc<TNormFn>,
}

impl CustomTNorm {
    pub fn new(name: impl Into<String>, func: impl Fn(f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        CustomTNorm {
            name: name.into(),
            func: Arc::new(func),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Raw evaluation, without range checking.
    pub fn call(&self, x: f64, y: f64) -> f64 {
        (self.func)(x, y)
    }

    fn eval(&self, x: f64, y: f64) -> Result<f64, AlgebraError> {
        let value = self.call(x, y);
        if (0.0..=1.0).contains(&value) {
            Ok(value)
        } else {
            Err(AlgebraError::CustomOutOfRange {
                name: self.name.clone(),
                x,
                y,
                value,
            })
        }
    }
}

impl fmt::Debug for CustomTNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CustomTNorm")
            .field("name", &self.name)
            .finish_non_exhaustive()
    }
}

/// The t-norm an algebra is built on.
#[derive(Debug, Clone)]
pub enum TNormKind {
    Godel,
    Product,
    Lukasiewicz,
    Custom(CustomTNorm),
}

impl TNormKind {
    pub const BUILTINS: [TNormKind; 3] = [TNormKind::Godel, TNormKind::Product, TNormKind::Lukasiewicz];

    pub fn name(&self) -> &str {
        match self {
            TNormKind::Godel => "godel",
            TNormKind::Product => "product",
            TNormKind::Lukasiewicz => "lukasiewicz",
            TNormKind::Custom(c) => c.name(),
        }
    }

    pub fn is_builtin(&self) -> bool {
        !matches!(self, TNormKind::Custom(_))
    }

    /// Raw evaluation on reals: closed forms for the built-ins, the user
    /// function for a custom t-norm. No range check.
    pub fn apply_raw(&self, x: f64, y: f64) -> f64 {
        match self {
            TNormKind::Godel => x.min(y),
            TNormKind::Product => x * y,
            // written as x - (1 - y) so that y = 1 returns x bit-for-bit
            TNormKind::Lukasiewicz => (x - (1.0 - y)).max(0.0),
            TNormKind::Custom(c) => c.call(x, y),
        }
    }

    /// Conjunction: `min(x, y)`, `x * y`, `max(0, x + y - 1)`, or the custom rule.
    pub fn tnorm(&self, x: TruthValue, y: TruthValue) -> Result<TruthValue, AlgebraError> {
        match self {
            TNormKind::Custom(c) => c.eval(x.get(), y.get()).map(TruthValue::from_closed_form),
            builtin => Ok(TruthValue::from_closed_form(builtin.apply_raw(x.get(), y.get()))),
        }
    }

    /// The De Morgan dual `1 - T(1 - x, 1 - y)`.
    pub fn tconorm(&self, x: TruthValue, y: TruthValue) -> Result<TruthValue, AlgebraError> {
        let (a, b) = (x.get(), y.get());
        let value = match self {
            TNormKind::Godel => a.max(b),
            TNormKind::Product => a + b - a * b,
            TNormKind::Lukasiewicz => (a + b).min(1.0),
            TNormKind::Custom(c) => 1.0 - c.eval(1.0 - a, 1.0 - b)?,
        };
        Ok(TruthValue::from_closed_form(value))
    }

    /// R-negation, `x =>_R 0`.
    pub fn negate_r(&self, x: TruthValue) -> Result<TruthValue, AlgebraError> {
        match self {
            TNormKind::Godel | TNormKind::Product => Ok(TruthValue::from(x.get() == 0.0)),
            TNormKind::Lukasiewicz => Ok(x.complement()),
            TNormKind::Custom(_) => self.implies_r(x, TruthValue::FALSE),
        }
    }

    /// S-implication, `not_S x or_S y`.
    pub fn implies_s(&self, x: TruthValue, y: TruthValue) -> Result<TruthValue, AlgebraError> {
        self.tconorm(negate_s(x), y)
    }

    /// R-implication (residuum), `max { z | T(z, x) <= y }`.
    pub fn implies_r(&self, x: TruthValue, y: TruthValue) -> Result<TruthValue, AlgebraError> {
        let (a, b) = (x.get(), y.get());
        // x <= y is tested first so the product branch never divides by zero
        let value = match self {
            TNormKind::Godel => {
                if a <= b {
                    1.0
                } else {
                    b
                }
            }
            TNormKind::Product => {
                if a <= b {
                    1.0
                } else {
                    b / a
                }
            }
            TNormKind::Lukasiewicz => (1.0 - a + b).min(1.0),
            TNormKind::Custom(c) => {
                let f = |u: f64, v: f64| c.call(u, v);
                return residuum_numeric(&f, x, y, RESIDUUM_TOL);
            }
        };
        Ok(TruthValue::from_closed_form(value))
    }
}

impl PartialEq for TNormKind {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (TNormKind::Custom(a), TNormKind::Custom(b)) => Arc::ptr_eq(&a.func, &b.func),
            (a, b) => std::mem::discriminant(a) == std::mem::discriminant(b),
        }
    }
}

impl fmt::Display for TNormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for TNormKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown t-norm `{0}` (expected godel, product or lukasiewicz)")]
pub struct UnknownTNorm(pub String);

impl FromStr for TNormKind {
    type Err = UnknownTNorm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "godel" | "goedel" | "min" => Ok(TNormKind::Godel),
            "product" | "prod" => Ok(TNormKind::Product),
            "lukasiewicz" | "luk" => Ok(TNormKind::Lukasiewicz),
            _ => Err(UnknownTNorm(s.to_owned())),
        }
    }
}

/// Strong negation `1 - x`.
#[inline]
pub fn negate_s(x: TruthValue) -> TruthValue {
    x.complement()
}

/// Numeric residuum `sup { z in [0, 1] | tnorm(z, x) <= y }` by bisection.
///
/// The returned value is within `tol` of the supremum. Bisection keeps the
/// bracket `tnorm(lo, x) <= y < tnorm(hi, x)`; an initial bracket that does
/// not hold, or a midpoint value outside the values at the bracket ends,
/// means the function is not monotone and is reported as such.
pub fn residuum_numeric(
    tnorm_fn: &dyn Fn(f64, f64) -> f64,
    x: TruthValue,
    y: TruthValue,
    tol: f64,
) -> Result<TruthValue, AlgebraError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(AlgebraError::InvalidTolerance(tol));
    }
    let (x, y) = (x.get(), y.get());
    let eval = |z: f64| {
        let v = tnorm_fn(z, x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(AlgebraError::NonMonotone { x, y })
        }
    };

    let mut f_hi = eval(1.0)?;
    if f_hi <= y {
        return Ok(TruthValue::TRUE);
    }
    let mut f_lo = eval(0.0)?;
    if f_lo > y {
        return Err(AlgebraError::NonMonotone { x, y });
    }

    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = eval(mid)?;
        if f_mid < f_lo || f_mid > f_hi {
            return Err(AlgebraError::NonMonotone { x, y });
        }
        if f_mid <= y {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    Ok(TruthValue::from_closed_form(0.5 * (lo + hi)))
}

/// Which implication connective an algebra uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Implication {
    S,
    R,
}

/// Which negation connective an algebra uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Negation {
    S,
    R,
}

macro_rules! side_from_str {
    ($ty:ident) => {
        impl FromStr for $ty {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    "s" | "S" => Ok($ty::S),
                    "r" | "R" => Ok($ty::R),
                    _ => Err(format!("expected `s` or `r`, got `{s}`")),
                }
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(match self {
                    $ty::S => "S",
                    $ty::R => "R",
                })
            }
        }
    };
}

side_from_str!(Implication);
side_from_str!(Negation);

/// An implication/negation pairing. All four combinations are valid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Convention {
    pub implication: Implication,
    pub negation: Negation,
}

impl Convention {
    pub const SS: Convention = Convention::new(Implication::S, Negation::S);
    pub const RR: Convention = Convention::new(Implication::R, Negation::R);
    pub const RS: Convention = Convention::new(Implication::R, Negation::S);
    pub const SR: Convention = Convention::new(Implication::S, Negation::R);
    pub const ALL: [Convention; 4] = [Convention::SS, Convention::SR, Convention::RS, Convention::RR];

    pub const fn new(implication: Implication, negation: Negation) -> Self {
        Convention { implication, negation }
    }
}

impl Default for Convention {
    fn default() -> Self {
        Convention::SS
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.implication, self.negation)
    }
}

/// A t-norm together with a convention. Fixes the meaning of every connective.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Algebra {
    tnorm: TNormKind,
    convention: Convention,
}

impl Algebra {
    /// Builds an algebra. Custom t-norms must pass the axiom check first.
    pub fn new(tnorm: TNormKind, convention: Convention) -> Result<Self, AlgebraError> {
        if let TNormKind::Custom(custom) = &tnorm {
            let report: LawReport = laws::check_tnorm_laws(&tnorm, GATE_SAMPLES, GATE_SEED);
            if !report.all_passed() {
                return Err(AlgebraError::LawViolation {
                    name: custom.name().to_owned(),
                    summary: report.summary(),
                });
            }
        }
        Ok(Algebra { tnorm, convention })
    }

    pub fn godel(convention: Convention) -> Self {
        Algebra {
            tnorm: TNormKind::Godel,
            convention,
        }
    }

    pub fn product(convention: Convention) -> Self {
        Algebra {
            tnorm: TNormKind::Product,
            convention,
        }
    }

    pub fn lukasiewicz(convention: Convention) -> Self {
        Algebra {
            tnorm: TNormKind::Lukasiewicz,
            convention,
        }
    }

    pub fn tnorm_kind(&self) -> &TNormKind {
        &self.tnorm
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn and(&self, x: TruthValue, y: TruthValue) -> Result<TruthValue, AlgebraError> {
        self.tnorm.tnorm(x, y)
    }

    pub fn not(&self, x: TruthValue) -> Result<TruthValue, AlgebraError> {
        match self.convention.negation {
            Negation::S => Ok(negate_s(x)),
            Negation::R => self.tnorm.negate_r(x),
        }
    }

    /// Disjunction `1 - T(not x, not y)` with this algebra's negation.
    ///
    /// Under S-negation this is the t-conorm. Under R-negation with the Godel
    /// or product t-norm the result only depends on whether each argument is 0.
    pub fn or(&self, x: TruthValue, y: TruthValue) -> Result<TruthValue, AlgebraError> {
        match self.convention.negation {
            Negation::S => self.tnorm.tconorm(x, y),
            Negation::R => {
                let t = self.tnorm.tnorm(self.not(x)?, self.not(y)?)?;
                Ok(t.complement())
            }
        }
    }

    pub fn implies(&self, x: TruthValue, y: TruthValue) -> Result<TruthValue, AlgebraError> {
        match self.convention.implication {
            Implication::S => self.tnorm.implies_s(x, y),
            Implication::R => self.tnorm.implies_r(x, y),
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.tnorm, self.convention)
    }
}
