//! Statistical hypothesis testing read as fuzzy Modus Tollens.
//!
//! A scenario fixes the significance level `alpha`, the measurement error `p`
//! attached to the observation, and the exponent `n` of the premise valuation
//! `v(P1) = 1 - alpha^n`. The observation premise gets `v(P2) = 1 - p`.

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError, Implication, Negation, TNormKind};
use crate::inference::{modus_tollens, MtPremises, MtRecord, MtResult};
use crate::numfmt::significant;
use crate::truth::TruthValue;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ShtError {
    #[error("alpha must lie in (0, 1], got {0} (alpha = 0 makes P1 a tautology; inject premises directly)")]
    Alpha(f64),
    #[error("measurement error p must lie in [0, 1), got {0}")]
    PErr(f64),
    #[error("valuation exponent n must be positive and finite, got {0}")]
    ModelN(f64),
    #[error("the product R-implication with S-negation needs a measurement error p > 0")]
    ZeroErrorForProductRs,
    #[error("test statistic inputs must be finite, got observed={observed}, mean={mean}, sd={sd}")]
    NonFinite { observed: f64, mean: f64, sd: f64 },
    #[error("null standard deviation must be positive, got {0}")]
    NonPositiveSd(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShtScenario {
    alpha: f64,
    p_err: f64,
    model_n: f64,
    algebra: Algebra,
}

impl ShtScenario {
    pub fn new(alpha: f64, p_err: f64, model_n: f64, algebra: Algebra) -> Result<Self, ShtError> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(ShtError::Alpha(alpha));
        }
        if !(0.0..1.0).contains(&p_err) {
            return Err(ShtError::PErr(p_err));
        }
        if !(model_n > 0.0 && model_n.is_finite()) {
            return Err(ShtError::ModelN(model_n));
        }
        let convention = algebra.convention();
        if p_err == 0.0
            && matches!(algebra.tnorm_kind(), TNormKind::Product)
            && convention.implication == Implication::R
            && convention.negation == Negation::S
        {
            return Err(ShtError::ZeroErrorForProductRs);
        }
        Ok(ShtScenario {
            alpha,
            p_err,
            model_n,
            algebra,
        })
    }

    /// `n = 1`, the plain `v(P1) = 1 - alpha` model.
    pub fn with_defaults(alpha: f64, p_err: f64, algebra: Algebra) -> Result<Self, ShtError> {
        Self::new(alpha, p_err, 1.0, algebra)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn p_err(&self) -> f64 {
        self.p_err
    }

    pub fn model_n(&self) -> f64 {
        self.model_n
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }
}

/// `v(P1) = 1 - alpha^n`, `v(P2) = 1 - p`.
pub fn premise_valuations(scenario: &ShtScenario) -> MtPremises {
    let power = if scenario.model_n == 1.0 {
        scenario.alpha
    } else {
        scenario.alpha.powf(scenario.model_n)
    };
    MtPremises::new(
        TruthValue::from_closed_form(1.0 - power),
        TruthValue::from_closed_form(1.0 - scenario.p_err),
    )
}

/// Premises for `alpha = 0`, where P1 is a tautology: `v(P1) = 1`.
pub fn tautology_premises(p_err: f64) -> Result<MtPremises, ShtError> {
    if !(0.0..1.0).contains(&p_err) {
        return Err(ShtError::PErr(p_err));
    }
    Ok(MtPremises::new(
        TruthValue::TRUE,
        TruthValue::from_closed_form(1.0 - p_err),
    ))
}

/// Realisation `s` of an aggregate statistic `S`, with a normal null model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TestStatistic {
    observed: f64,
    null_mean: f64,
    null_sd: f64,
}

impl TestStatistic {
    pub fn new(observed: f64, null_mean: f64, null_sd: f64) -> Result<Self, ShtError> {
        if !(observed.is_finite() && null_mean.is_finite() && null_sd.is_finite()) {
            return Err(ShtError::NonFinite {
                observed,
                mean: null_mean,
                sd: null_sd,
            });
        }
        if null_sd <= 0.0 {
            return Err(ShtError::NonPositiveSd(null_sd));
        }
        Ok(TestStatistic {
            observed,
            null_mean,
            null_sd,
        })
    }

    pub fn z_score(&self) -> f64 {
        (self.observed - self.null_mean) / self.null_sd
    }
}

/// Upper-tail p-value `P(S >= s | H) = 1 - Phi(z)`.
///
/// Evaluated as `erfc(z / sqrt 2) / 2` with the FreeBSD msun rational
/// approximation of `erfc` (via the `libm` crate), which is accurate to about
/// one ulp and keeps full relative precision deep in the upper tail.
pub fn p_value_upper(stat: &TestStatistic) -> f64 {
    0.5 * libm::erfc(stat.z_score() / std::f64::consts::SQRT_2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    /// Consistent MT run: H rejected with truth value `nu_not_h`.
    Rejected,
    /// The algebra admits no consistent MT conclusion.
    NoSoundInference,
    /// The computed p-value is not below alpha, so P2 is not asserted.
    P2NotEstablished,
}

/// Everything a hypothesis-test run produced. Field names are stable.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShtVerdict {
    pub alpha: f64,
    pub p_err: f64,
    pub model_n: f64,
    pub tnorm: String,
    pub implication: Implication,
    pub negation: Negation,
    pub p_value: Option<f64>,
    pub nu_p1: Option<f64>,
    pub nu_p2: Option<f64>,
    pub verdict: VerdictKind,
    pub sentence: String,
    pub result: Option<MtRecord>,
    #[serde(skip)]
    pub mt: Option<MtResult>,
}

impl ShtVerdict {
    fn base(scenario: &ShtScenario, p_value: Option<f64>) -> Self {
        let convention = scenario.algebra.convention();
        ShtVerdict {
            alpha: scenario.alpha,
            p_err: scenario.p_err,
            model_n: scenario.model_n,
            tnorm: scenario.algebra.tnorm_kind().name().to_owned(),
            implication: convention.implication,
            negation: convention.negation,
            p_value,
            nu_p1: None,
            nu_p2: None,
            verdict: VerdictKind::P2NotEstablished,
            sentence: String::new(),
            result: None,
            mt: None,
        }
    }

    pub fn is_inconsistent(&self) -> bool {
        self.verdict == VerdictKind::NoSoundInference
    }
}

/// Builds the premises for `scenario`, runs Modus Tollens and phrases the outcome.
pub fn run_sht(scenario: &ShtScenario) -> Result<ShtVerdict, AlgebraError> {
    run_with_p_value(scenario, None)
}

/// Like [`run_sht`], but first checks that the statistic's p-value is below
/// alpha; otherwise P2 is not asserted and no inference runs.
pub fn run_sht_with_statistic(scenario: &ShtScenario, stat: &TestStatistic) -> Result<ShtVerdict, AlgebraError> {
    let p = p_value_upper(stat);
    if p >= scenario.alpha {
        let mut v = ShtVerdict::base(scenario, Some(p));
        v.sentence = format!(
            "P2 not established: p-value {} is not below alpha {}",
            significant(p, 12),
            significant(scenario.alpha, 12)
        );
        return Ok(v);
    }
    run_with_p_value(scenario, Some(p))
}

fn run_with_p_value(scenario: &ShtScenario, p_value: Option<f64>) -> Result<ShtVerdict, AlgebraError> {
    let premises = premise_valuations(scenario);
    let result = modus_tollens(&scenario.algebra, premises)?;
    let mut v = ShtVerdict::base(scenario, p_value);
    v.nu_p1 = Some(premises.nu_p1.get());
    v.nu_p2 = Some(premises.nu_p2.get());
    match result.nu_not_h {
        Some(t) => {
            v.verdict = VerdictKind::Rejected;
            v.sentence = format!("hypothesis rejected with truth value {}", significant(t.get(), 12));
            if result.underdetermined {
                v.sentence.push_str(" (lower bound; valuation of H is underdetermined)");
            }
        }
        None => {
            v.verdict = VerdictKind::NoSoundInference;
            let reason = result.diagnostic.as_ref().map(|d| d.message.as_str()).unwrap_or("");
            v.sentence = format!("no sound inference under this algebra: {reason}");
        }
    }
    v.result = Some(result.to_record());
    v.mt = Some(result);
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Convention;

    #[test]
    fn premise_examples() {
        let s = ShtScenario::new(0.05, 0.0, 1.0, Algebra::product(Convention::SS)).unwrap();
        let p = premise_valuations(&s);
        assert_eq!((p.nu_p1.get(), p.nu_p2.get()), (0.95, 1.0));

        let s = ShtScenario::new(0.05, 0.0, 2.0, Algebra::product(Convention::SS)).unwrap();
        assert!((premise_valuations(&s).nu_p1.get() - 0.9975).abs() < 1e-15);

        let s = ShtScenario::new(1.0, 0.0, 1.0, Algebra::product(Convention::SS)).unwrap();
        assert_eq!(premise_valuations(&s).nu_p1.get(), 0.0);
    }

    #[test]
    fn scenario_validation() {
        let a = || Algebra::godel(Convention::SS);
        assert_eq!(ShtScenario::new(0.0, 0.0, 1.0, a()), Err(ShtError::Alpha(0.0)));
        assert!(ShtScenario::new(1.5, 0.0, 1.0, a()).is_err());
        assert!(ShtScenario::new(f64::NAN, 0.0, 1.0, a()).is_err());
        assert_eq!(ShtScenario::new(0.05, 1.0, 1.0, a()), Err(ShtError::PErr(1.0)));
        assert_eq!(ShtScenario::new(0.05, 0.0, 0.0, a()), Err(ShtError::ModelN(0.0)));
        assert_eq!(
            ShtScenario::new(0.05, 0.0, 1.0, Algebra::product(Convention::RS)),
            Err(ShtError::ZeroErrorForProductRs)
        );
        let t = tautology_premises(0.0).unwrap();
        assert_eq!((t.nu_p1, t.nu_p2), (TruthValue::TRUE, TruthValue::TRUE));
    }

    #[test]
    fn run_examples() {
        for k in TNormKind::BUILTINS {
            let s = ShtScenario::new(0.05, 0.0, 1.0, Algebra::new(k, Convention::SS).unwrap()).unwrap();
            let v = run_sht(&s).unwrap();
            assert_eq!(v.verdict, VerdictKind::Rejected);
            assert_eq!(v.result.as_ref().unwrap().nu_not_h, Some(0.95));
            assert_eq!(v.sentence, "hypothesis rejected with truth value 0.95");
        }

        let s = ShtScenario::new(0.05, 0.0, 1.0, Algebra::godel(Convention::RR)).unwrap();
        let v = run_sht(&s).unwrap();
        assert_eq!(v.verdict, VerdictKind::NoSoundInference);
        assert!(v.sentence.starts_with("no sound inference"));

        let s = ShtScenario::new(0.05, 0.001, 1.0, Algebra::product(Convention::RS)).unwrap();
        let v = run_sht(&s).unwrap();
        let expected = 1.0 - (1.0 - (1.0 - 0.001)) / 0.95;
        assert!((v.result.unwrap().nu_not_h.unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn p_value_examples() {
        let p = |obs| p_value_upper(&TestStatistic::new(obs, 3.0, 2.0).unwrap());
        assert_eq!(p(3.0), 0.5);
        assert!((p(3.0 + 1.6448536270 * 2.0) - 0.05).abs() < 1e-6);
        assert!(p(3.0 - 10.0 * 2.0) >= 1.0 - 1e-7);
        assert!(TestStatistic::new(1.0, 0.0, 0.0).is_err());
        assert!(TestStatistic::new(f64::INFINITY, 0.0, 1.0).is_err());
    }

    #[test]
    fn statistic_gate() {
        let s = ShtScenario::new(0.05, 0.0, 1.0, Algebra::product(Convention::SS)).unwrap();
        let weak = TestStatistic::new(1.0, 0.0, 1.0).unwrap();
        let v = run_sht_with_statistic(&s, &weak).unwrap();
        assert_eq!(v.verdict, VerdictKind::P2NotEstablished);
        assert!(v.result.is_none());

        let strong = TestStatistic::new(3.0, 0.0, 1.0).unwrap();
        let v = run_sht_with_statistic(&s, &strong).unwrap();
        assert_eq!(v.verdict, VerdictKind::Rejected);
        assert!(v.p_value.unwrap() < 0.05);
    }
}
