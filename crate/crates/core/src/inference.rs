//! Fuzzy Modus Tollens with Zadeh's compositional extension.
//!
//! Premises are `P1: H -> C` and `P2: not C`, where `C` stands for the
//! statement `P(E|H) >= alpha`. The conclusion is
//!
//! ```text
//! v(not H) = T( v(not C -> not H), v(P2) )
//! ```
//!
//! The value of the contrapositive has to be recovered from `v(P1)`, which
//! depends on the implication/negation convention. Each convention mix is
//! handled in closed form below; combinations where no truth value of `H`
//! is compatible with the premises come back as [`Status::Inconsistent`]
//! with a machine-readable [`DiagnosticCode`] rather than as an error.
//!
//! Branch selection compares premise values exactly (`== 0.0`, `== 1.0`);
//! callers that need quantisation should do it before calling in.

use serde::{Serialize, Serializer};

use crate::algebra::{Algebra, AlgebraError, Implication, Negation, TNormKind};
use crate::truth::TruthValue;

/// Tolerance for internal cross-checks and contrapositive symmetry.
pub const CHECK_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MtPremises {
    /// v(P1), the valuation of `H -> C`.
    pub nu_p1: TruthValue,
    /// v(P2), the valuation of `not C`.
    pub nu_p2: TruthValue,
}

impl MtPremises {
    pub fn new(nu_p1: TruthValue, nu_p2: TruthValue) -> Self {
        MtPremises { nu_p1, nu_p2 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Consistent,
    Inconsistent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagnosticCode {
    /// Godel/product R-negation cannot produce a fractional v(P2).
    RNegationFractionalPremise,
    /// Godel/product R-implication with the derived consequent is two-valued.
    RImplicationTwoValued,
    /// Product R-implication with a zero consequent cannot take a value in (0, 1).
    ZeroConsequent,
    /// Godel R-implication with S-negation requires v(P1) = p (or 1).
    GodelRequiresP1EqualsP,
    /// No valuation of H satisfies both premises.
    ContradictoryPremises,
    /// The closed-form result failed its own consistency cross-check.
    CrossCheckFailed,
    /// This convention mix has no closed-form analysis for a custom t-norm.
    NotAnalyzable,
}

impl DiagnosticCode {
    pub fn as_str(self) -> &'static str {
        match self {
            DiagnosticCode::RNegationFractionalPremise => "r_negation_fractional_premise",
            DiagnosticCode::RImplicationTwoValued => "r_implication_two_valued",
            DiagnosticCode::ZeroConsequent => "zero_consequent",
            DiagnosticCode::GodelRequiresP1EqualsP => "godel_requires_p1_equals_p",
            DiagnosticCode::ContradictoryPremises => "contradictory_premises",
            DiagnosticCode::CrossCheckFailed => "cross_check_failed",
            DiagnosticCode::NotAnalyzable => "not_analyzable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Diagnostic {
    pub code: DiagnosticCode,
    pub message: String,
    /// The offending value, when a single one is to blame.
    pub value: Option<f64>,
}

impl Diagnostic {
    fn new(code: DiagnosticCode, message: impl Into<String>, value: Option<f64>) -> Self {
        Diagnostic {
            code,
            message: message.into(),
            value,
        }
    }
}

/// Outcome of a Modus Tollens run.
///
/// `nu_not_h` is present iff the run is consistent. `nu_h` is present when a
/// unique valuation of H compatible with both premises and the conclusion
/// exists.
#[derive(Debug, Clone, PartialEq)]
pub struct MtResult {
    pub status: Status,
    pub nu_not_h: Option<TruthValue>,
    pub nu_h: Option<TruthValue>,
    /// Derived valuation of the consequent `P(E|H) >= alpha`.
    pub nu_consequent: Option<TruthValue>,
    /// Valuation of the contrapositive `not C -> not H`, when determined.
    pub nu_contrapositive: Option<TruthValue>,
    pub diagnostic: Option<Diagnostic>,
    /// The min-clamp `v(H) = min(1, p / v(P1))` was active.
    pub boundary: bool,
    /// S/S-style result with `v(P2) < 1`, i.e. `T(v(P1), v(P2))` beyond the
    /// fully certain observation.
    pub generalized: bool,
    /// Several valuations of H fit the premises and they disagree on the
    /// conclusion; `nu_not_h` is then the smallest value over all of them.
    pub underdetermined: bool,
}

impl MtResult {
    fn consistent(nu_not_h: TruthValue, consequent: TruthValue) -> Self {
        MtResult {
            status: Status::Consistent,
            nu_not_h: Some(nu_not_h),
            nu_h: None,
            nu_consequent: Some(consequent),
            nu_contrapositive: None,
            diagnostic: None,
            boundary: false,
            generalized: false,
            underdetermined: false,
        }
    }

    fn inconsistent(diagnostic: Diagnostic, consequent: Option<TruthValue>) -> Self {
        MtResult {
            status: Status::Inconsistent,
            nu_not_h: None,
            nu_h: None,
            nu_consequent: consequent,
            nu_contrapositive: None,
            diagnostic: Some(diagnostic),
            boundary: false,
            generalized: false,
            underdetermined: false,
        }
    }

    fn with_h(mut self, nu_h: TruthValue) -> Self {
        self.nu_h = Some(nu_h);
        self
    }

    fn with_contrapositive(mut self, c: TruthValue) -> Self {
        self.nu_contrapositive = Some(c);
        self
    }

    pub fn is_consistent(&self) -> bool {
        self.status == Status::Consistent
    }

    /// Flat record used for JSON output.
    pub fn to_record(&self) -> MtRecord {
        MtRecord {
            status: self.status,
            nu_not_h: self.nu_not_h.map(TruthValue::get),
            nu_h: self.nu_h.map(TruthValue::get),
            nu_consequent: self.nu_consequent.map(TruthValue::get),
            nu_contrapositive: self.nu_contrapositive.map(TruthValue::get),
            diagnostic: self.diagnostic.as_ref().map(|d| d.code.as_str()),
            diagnostic_message: self.diagnostic.as_ref().map(|d| d.message.clone()),
            boundary: self.boundary,
            generalized: self.generalized,
            underdetermined: self.underdetermined,
        }
    }
}

/// Stable flat serialisation of [`MtResult`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MtRecord {
    pub status: Status,
    pub nu_not_h: Option<f64>,
    pub nu_h: Option<f64>,
    pub nu_consequent: Option<f64>,
    pub nu_contrapositive: Option<f64>,
    pub diagnostic: Option<&'static str>,
    pub diagnostic_message: Option<String>,
    pub boundary: bool,
    pub generalized: bool,
    pub underdetermined: bool,
}

impl Serialize for MtResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_record().serialize(serializer)
    }
}

/// Valuation of the consequent `C`, given `v(not C) = v(P2)`.
///
/// Inverts the algebra's negation: `1 - v(P2)` under S-negation (and for the
/// Lukasiewicz R-negation); under the two-valued Godel/product R-negation only
/// `v(P2) in {0, 1}` can be inverted.
pub fn consequent_value(algebra: &Algebra, premises: MtPremises) -> Result<TruthValue, Diagnostic> {
    let p2 = premises.nu_p2;
    match (algebra.convention().negation, algebra.tnorm_kind()) {
        (Negation::S, _) | (Negation::R, TNormKind::Lukasiewicz) => Ok(p2.complement()),
        (Negation::R, TNormKind::Godel | TNormKind::Product) => {
            if p2.get() == 0.0 {
                Ok(TruthValue::TRUE)
            } else if p2.get() == 1.0 {
                Ok(TruthValue::FALSE)
            } else {
                Err(Diagnostic::new(
                    DiagnosticCode::RNegationFractionalPremise,
                    format!(
                        "{} R-negation only takes the values 0 and 1, so v(P2) = {} cannot be the negation of any consequent",
                        algebra.tnorm_kind(),
                        p2
                    ),
                    Some(p2.get()),
                ))
            }
        }
        (Negation::R, TNormKind::Custom(c)) => Err(not_analyzable(c.name(), "R-negation")),
    }
}

fn not_analyzable(name: &str, what: &str) -> Diagnostic {
    Diagnostic::new(
        DiagnosticCode::NotAnalyzable,
        format!("no closed-form Modus Tollens analysis for custom t-norm `{name}` under {what}"),
        None,
    )
}

/// Runs fuzzy Modus Tollens under `algebra`.
///
/// Errors are reserved for custom t-norms misbehaving at evaluation time;
/// inconsistency is reported through [`MtResult::status`].
pub fn modus_tollens(algebra: &Algebra, premises: MtPremises) -> Result<MtResult, AlgebraError> {
    let consequent = match consequent_value(algebra, premises) {
        Ok(c) => c,
        Err(d) => return Ok(MtResult::inconsistent(d, None)),
    };
    let kind = algebra.tnorm_kind();
    let convention = algebra.convention();
    match (convention.implication, convention.negation, kind) {
        (Implication::S, Negation::S, _) | (_, _, TNormKind::Lukasiewicz) => symmetric(kind, premises, consequent),
        (Implication::S, Negation::R, TNormKind::Godel | TNormKind::Product) => {
            s_implication_r_negation(kind, premises, consequent)
        }
        (Implication::R, Negation::R, TNormKind::Godel | TNormKind::Product) => {
            Ok(r_implication_r_negation(kind, premises, consequent))
        }
        (Implication::R, Negation::S, TNormKind::Product) => product_r_implication_s_negation(premises, consequent),
        (Implication::R, Negation::S, TNormKind::Godel) => Ok(godel_r_implication_s_negation(premises, consequent)),
        (_, _, TNormKind::Custom(c)) => Ok(MtResult::inconsistent(
            not_analyzable(c.name(), &format!("the {convention} convention")),
            Some(consequent),
        )),
    }
}

/// Contrapositive symmetry holds, so `v(not C -> not H) = v(P1)` and the
/// conclusion is `T(v(P1), v(P2))`. With a certain observation the false
/// consequent gives `v(P1) = 1 - v(H)`.
fn symmetric(kind: &TNormKind, premises: MtPremises, consequent: TruthValue) -> Result<MtResult, AlgebraError> {
    let MtPremises { nu_p1, nu_p2 } = premises;
    let nu_not_h = kind.tnorm(nu_p1, nu_p2)?;
    let mut out = MtResult::consistent(nu_not_h, consequent).with_contrapositive(nu_p1);
    out.generalized = nu_p2.get() < 1.0;
    if nu_p2.get() == 1.0 {
        let nu_h = nu_p1.complement();
        if (nu_not_h.get() - nu_h.complement().get()).abs() > CHECK_TOL {
            return Ok(MtResult::inconsistent(
                Diagnostic::new(
                    DiagnosticCode::CrossCheckFailed,
                    format!("v(not H) = {nu_not_h} disagrees with 1 - v(H) = {}", nu_h.complement()),
                    Some(nu_not_h.get()),
                ),
                Some(consequent),
            ));
        }
        out = out.with_h(nu_h);
    }
    Ok(out)
}

fn two_valued(kind: &TNormKind, nu_p1: TruthValue) -> Diagnostic {
    Diagnostic::new(
        DiagnosticCode::RImplicationTwoValued,
        format!(
            "the {kind} R-implication can only evaluate to 0 or 1 here, which is incompatible with v(P1) = {nu_p1}"
        ),
        Some(nu_p1.get()),
    )
}

fn contradictory(nu_p1: TruthValue) -> Diagnostic {
    Diagnostic::new(
        DiagnosticCode::ContradictoryPremises,
        format!("an implication with a true consequent is true, so v(P1) = {nu_p1} admits no valuation of H"),
        Some(nu_p1.get()),
    )
}

/// Godel/product R/R. The consequent is crisp (checked by the negation), the
/// residuum with a crisp consequent is crisp, so only crisp v(P1) survive.
fn r_implication_r_negation(kind: &TNormKind, premises: MtPremises, consequent: TruthValue) -> MtResult {
    let MtPremises { nu_p1, nu_p2 } = premises;
    if !nu_p1.is_crisp() {
        return MtResult::inconsistent(two_valued(kind, nu_p1), Some(consequent));
    }
    if consequent.get() == 0.0 {
        // H -> 0 is 1 iff v(H) = 0
        if nu_p1.get() == 1.0 {
            // not_R 0 -> not_R 0 = 1 -> 1
            MtResult::consistent(TruthValue::TRUE, consequent)
                .with_h(TruthValue::FALSE)
                .with_contrapositive(TruthValue::TRUE)
        } else {
            // any v(H) > 0; not_R H = 0 for all of them, so 1 -> 0
            MtResult::consistent(TruthValue::FALSE, consequent).with_contrapositive(TruthValue::FALSE)
        }
    } else if nu_p1.get() == 1.0 {
        // H -> 1 holds for every H; T(., v(P2) = 0) = 0
        debug_assert_eq!(nu_p2.get(), 0.0);
        MtResult::consistent(TruthValue::FALSE, consequent)
    } else {
        MtResult::inconsistent(contradictory(nu_p1), Some(consequent))
    }
}

/// Godel/product S-implication with R-negation. `H ->_S 0 = 1 - v(H)`; the
/// contrapositive `not_R C ->_S not_R H` reduces to `not_R H`.
fn s_implication_r_negation(
    kind: &TNormKind,
    premises: MtPremises,
    consequent: TruthValue,
) -> Result<MtResult, AlgebraError> {
    let MtPremises { nu_p1, nu_p2 } = premises;
    if consequent.get() == 0.0 {
        let nu_h = nu_p1.complement();
        let contrapositive = kind.implies_s(kind.negate_r(consequent)?, kind.negate_r(nu_h)?)?;
        let nu_not_h = kind.tnorm(contrapositive, nu_p2)?;
        Ok(MtResult::consistent(nu_not_h, consequent)
            .with_h(nu_h)
            .with_contrapositive(contrapositive))
    } else if nu_p1.get() == 1.0 {
        Ok(MtResult::consistent(TruthValue::FALSE, consequent))
    } else {
        Ok(MtResult::inconsistent(contradictory(nu_p1), Some(consequent)))
    }
}

/// Product R-implication with S-negation.
///
/// With consequent `p = 1 - v(P2) > 0`, `v(H -> p)` is `1` for `v(H) <= p`
/// and `p / v(H)` otherwise, so consistency forces `v(H) = min(1, p / v(P1))`
/// and the conclusion is `1 - p / v(P1)`.
fn product_r_implication_s_negation(premises: MtPremises, consequent: TruthValue) -> Result<MtResult, AlgebraError> {
    let kind = TNormKind::Product;
    let MtPremises { nu_p1, nu_p2 } = premises;
    let p = consequent.get();
    let p1 = nu_p1.get();

    if p == 0.0 {
        return Ok(if p1 == 1.0 {
            MtResult::consistent(TruthValue::TRUE, consequent)
                .with_h(TruthValue::FALSE)
                .with_contrapositive(TruthValue::TRUE)
        } else if p1 == 0.0 {
            // every v(H) > 0 fits and yields v(not H) = 1 - v(H)
            let mut out = MtResult::consistent(TruthValue::FALSE, consequent);
            out.underdetermined = true;
            out
        } else {
            MtResult::inconsistent(
                Diagnostic::new(
                    DiagnosticCode::ZeroConsequent,
                    format!(
                        "with a false consequent the product R-implication is 0 or 1; relax v(P2) below 1 to admit v(P1) = {nu_p1}"
                    ),
                    Some(p1),
                ),
                Some(consequent),
            )
        });
    }

    if p > p1 {
        // min(1, p / v(P1)) clamps at 1
        let nu_h = TruthValue::TRUE;
        let contrapositive = kind.implies_r(nu_p2, nu_h.complement())?;
        let mut out = MtResult::consistent(TruthValue::FALSE, consequent)
            .with_h(nu_h)
            .with_contrapositive(contrapositive);
        out.boundary = true;
        return Ok(out);
    }

    let ratio = p / p1;
    let nu_h = TruthValue::from_closed_form(ratio);
    let nu_not_h = TruthValue::from_closed_form(1.0 - ratio);

    let back = kind.implies_r(nu_h, consequent)?;
    let contrapositive = kind.implies_r(nu_p2, nu_h.complement())?;
    let composed = kind.tnorm(contrapositive, nu_p2)?;
    if (back.get() - p1).abs() > CHECK_TOL || (composed.get() - nu_not_h.get()).abs() > CHECK_TOL {
        return Ok(MtResult::inconsistent(
            Diagnostic::new(
                DiagnosticCode::CrossCheckFailed,
                format!(
                    "v(H) = {nu_h} gives v(P1) = {back} and T(contrapositive, v(P2)) = {composed}, expected {nu_p1} and {nu_not_h}"
                ),
                Some(nu_h.get()),
            ),
            Some(consequent),
        ));
    }
    Ok(MtResult::consistent(nu_not_h, consequent)
        .with_h(nu_h)
        .with_contrapositive(contrapositive))
}

/// Godel R-implication with S-negation: `v(H -> p)` is `1` for `v(H) <= p`
/// and `p` otherwise, so only `v(P1) = 1` or `v(P1) = p` are reachable.
fn godel_r_implication_s_negation(premises: MtPremises, consequent: TruthValue) -> MtResult {
    let MtPremises { nu_p1, nu_p2 } = premises;
    let p = consequent.get();
    if nu_p1.get() == 1.0 {
        // v(H) in [0, p]; the contrapositive is 1 for all of them
        MtResult::consistent(nu_p2, consequent)
            .with_h(consequent)
            .with_contrapositive(TruthValue::TRUE)
    } else if nu_p1.get() == p {
        // v(H) in (p, 1], v(not H) = 1 - v(H) ranges over [0, 1 - p)
        let mut out = MtResult::consistent(TruthValue::FALSE, consequent);
        out.underdetermined = true;
        out
    } else {
        MtResult::inconsistent(
            Diagnostic::new(
                DiagnosticCode::GodelRequiresP1EqualsP,
                format!(
                    "the Godel R-implication with consequent p = {consequent} is either 1 or p, so it requires v(P1) = p, not {nu_p1}"
                ),
                Some(nu_p1.get()),
            ),
            Some(consequent),
        )
    }
}

/// Forward and contrapositive values of an implication under one algebra.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ContrapositiveCheck {
    pub forward: TruthValue,
    pub contrapositive: TruthValue,
    pub symmetric: bool,
}

/// Compares `v(x -> y)` with `v(not y -> not x)`.
pub fn contrapositive_check(
    algebra: &Algebra,
    x: TruthValue,
    y: TruthValue,
) -> Result<ContrapositiveCheck, AlgebraError> {
    let forward = algebra.implies(x, y)?;
    let contrapositive = algebra.implies(algebra.not(y)?, algebra.not(x)?)?;
    Ok(ContrapositiveCheck {
        forward,
        contrapositive,
        symmetric: (forward.get() - contrapositive.get()).abs() <= CHECK_TOL,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Convention, CustomTNorm};

    fn tv(x: f64) -> TruthValue {
        TruthValue::new(x).unwrap()
    }

    fn prem(p1: f64, p2: f64) -> MtPremises {
        MtPremises::new(tv(p1), tv(p2))
    }

    fn alg(kind: TNormKind, c: Convention) -> Algebra {
        Algebra::new(kind, c).unwrap()
    }

    #[test]
    fn consequent_examples() {
        let ss = Algebra::product(Convention::SS);
        assert_eq!(consequent_value(&ss, prem(0.5, 1.0)).unwrap().get(), 0.0);
        let c = consequent_value(&ss, prem(0.5, 1.0 - 0.01)).unwrap();
        assert!((c.get() - 0.01).abs() < 1e-15);
        let err = consequent_value(&Algebra::product(Convention::RR), prem(0.5, 0.5)).unwrap_err();
        assert_eq!(err.code, DiagnosticCode::RNegationFractionalPremise);
        assert_eq!(err.value, Some(0.5));
        let l = consequent_value(&Algebra::lukasiewicz(Convention::RR), prem(0.5, 0.25)).unwrap();
        assert_eq!(l.get(), 0.75);
    }

    #[test]
    fn s_convention_recovers_one_minus_alpha() {
        for k in TNormKind::BUILTINS {
            let r = modus_tollens(&alg(k, Convention::SS), prem(0.95, 1.0)).unwrap();
            assert_eq!(r.status, Status::Consistent);
            assert_eq!(r.nu_not_h.unwrap().get(), 0.95);
            assert!((r.nu_h.unwrap().get() - 0.05).abs() < 1e-15);
            assert!(!r.generalized);
        }
    }

    #[test]
    fn godel_rr_is_inconsistent() {
        let r = modus_tollens(&Algebra::godel(Convention::RR), prem(0.95, 1.0)).unwrap();
        assert_eq!(r.status, Status::Inconsistent);
        assert_eq!(r.diagnostic.unwrap().code, DiagnosticCode::RImplicationTwoValued);
        assert_eq!(r.nu_not_h, None);
        assert_eq!(r.nu_consequent, Some(TruthValue::FALSE));
    }

    #[test]
    fn lukasiewicz_rr_matches_s() {
        let r = modus_tollens(&Algebra::lukasiewicz(Convention::RR), prem(0.95, 1.0)).unwrap();
        assert_eq!(r.nu_not_h.unwrap().get(), 0.95);
    }

    #[test]
    fn product_rs_example() {
        let r = modus_tollens(&Algebra::product(Convention::RS), prem(0.95, 0.999)).unwrap();
        assert_eq!(r.status, Status::Consistent);
        let p = 1.0 - 0.999;
        let h = r.nu_h.unwrap();
        assert!((h.get() - 0.00105263157894737).abs() < 1e-12);
        assert!((r.nu_not_h.unwrap().get() - 0.998_947_368_421_052_6).abs() < 1e-12);
        // substituting back: p / h must recover v(P1)
        let back = TNormKind::Product.implies_r(h, tv(p)).unwrap();
        assert!((back.get() - 0.95).abs() < 1e-12);
        assert!(!r.boundary);
    }

    #[test]
    fn product_rs_boundary_and_zero_consequent() {
        let r = modus_tollens(&Algebra::product(Convention::RS), prem(0.1, 0.5)).unwrap();
        assert!(r.boundary);
        assert_eq!(r.nu_h, Some(TruthValue::TRUE));
        assert_eq!(r.nu_not_h, Some(TruthValue::FALSE));

        let r = modus_tollens(&Algebra::product(Convention::RS), prem(0.95, 1.0)).unwrap();
        assert_eq!(r.diagnostic.unwrap().code, DiagnosticCode::ZeroConsequent);

        let r = modus_tollens(&Algebra::product(Convention::RS), prem(0.0, 1.0)).unwrap();
        assert!(r.is_consistent() && r.underdetermined);
    }

    #[test]
    fn godel_rs() {
        let r = modus_tollens(&Algebra::godel(Convention::RS), prem(0.95, 0.999)).unwrap();
        assert_eq!(r.diagnostic.unwrap().code, DiagnosticCode::GodelRequiresP1EqualsP);

        let r = modus_tollens(&Algebra::godel(Convention::RS), prem(0.25, 0.75)).unwrap();
        assert!(r.is_consistent());
        assert!(r.underdetermined);
        assert_eq!(r.nu_h, None);

        let r = modus_tollens(&Algebra::godel(Convention::RS), prem(1.0, 0.75)).unwrap();
        assert_eq!(r.nu_not_h, Some(tv(0.75)));
        assert_eq!(r.nu_h, Some(tv(0.25)));
    }

    #[test]
    fn s_implication_r_negation_godel() {
        let r = modus_tollens(&Algebra::godel(Convention::SR), prem(0.95, 1.0)).unwrap();
        assert!(r.is_consistent());
        // not_R of any positive v(H) is 0
        assert_eq!(r.nu_not_h, Some(TruthValue::FALSE));
        let r = modus_tollens(&Algebra::product(Convention::SR), prem(0.5, 0.0)).unwrap();
        assert_eq!(r.diagnostic.unwrap().code, DiagnosticCode::ContradictoryPremises);
    }

    #[test]
    fn crisp_rr_premises() {
        for k in [TNormKind::Godel, TNormKind::Product] {
            let a = alg(k, Convention::RR);
            let get = |p1, p2| modus_tollens(&a, prem(p1, p2)).unwrap();
            assert_eq!(get(1.0, 1.0).nu_not_h, Some(TruthValue::TRUE));
            assert_eq!(get(1.0, 1.0).nu_h, Some(TruthValue::FALSE));
            assert_eq!(get(1.0, 0.0).nu_not_h, Some(TruthValue::FALSE));
            assert_eq!(get(0.0, 1.0).nu_not_h, Some(TruthValue::FALSE));
            assert_eq!(get(0.0, 0.0).status, Status::Inconsistent);
        }
    }

    #[test]
    fn degenerate_soundness_all_mixes() {
        for k in TNormKind::BUILTINS {
            for c in Convention::ALL {
                let r = modus_tollens(&alg(k.clone(), c), prem(1.0, 1.0)).unwrap();
                assert_eq!(r.nu_not_h, Some(TruthValue::TRUE), "{k} {c}");
            }
        }
    }

    #[test]
    fn custom_tnorm_only_analyzed_under_ss() {
        let hamacher = TNormKind::Custom(CustomTNorm::new("hamacher", |a, b| {
            if a == 0.0 && b == 0.0 {
                0.0
            } else {
                a * b / (a + b - a * b)
            }
        }));
        let ss = alg(hamacher.clone(), Convention::SS);
        let r = modus_tollens(&ss, prem(0.95, 1.0)).unwrap();
        assert!((r.nu_not_h.unwrap().get() - 0.95).abs() < 1e-12);
        let rs = alg(hamacher, Convention::RS);
        let r = modus_tollens(&rs, prem(0.95, 1.0)).unwrap();
        assert_eq!(r.diagnostic.unwrap().code, DiagnosticCode::NotAnalyzable);
    }

    #[test]
    fn contrapositive_examples() {
        let c = contrapositive_check(&Algebra::product(Convention::SS), tv(0.3), tv(0.6)).unwrap();
        assert!(c.symmetric);

        let c = contrapositive_check(&Algebra::lukasiewicz(Convention::RR), tv(0.9), tv(0.2)).unwrap();
        assert!((c.forward.get() - 0.3).abs() < 1e-12);
        assert!((c.contrapositive.get() - 0.3).abs() < 1e-12);
        assert!(c.symmetric);

        // not_R 0.2 = 0 and not_R 0.9 = 0, so the contrapositive is 0 -> 0 = 1
        let c = contrapositive_check(&Algebra::godel(Convention::RR), tv(0.9), tv(0.2)).unwrap();
        assert_eq!(c.forward.get(), 0.2);
        assert_eq!(c.contrapositive.get(), 1.0);
        assert!(!c.symmetric);
    }

    #[test]
    fn record_is_flat() {
        let r = modus_tollens(&Algebra::godel(Convention::RR), prem(0.95, 1.0)).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["status"], "inconsistent");
        assert_eq!(json["diagnostic"], "r_implication_two_valued");
        assert!(json["nu_not_h"].is_null());
        assert_eq!(json["boundary"], false);
    }
}
