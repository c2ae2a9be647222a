//! Degrees of truth on the closed unit interval.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Rejected attempt to build a [`TruthValue`] outside `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
#[error("truth value {0} is outside [0, 1]")]
pub struct OutOfRange(pub f64);

/// A degree of truth in `[0, 1]`.
///
/// Construction never clamps: anything outside the interval (including NaN)
/// is an error. `0` and `1` are exact.
#[derive(Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct TruthValue(f64);

impl TruthValue {
    pub const FALSE: TruthValue = TruthValue(0.0);
    pub const TRUE: TruthValue = TruthValue(1.0);

    pub fn new(value: f64) -> Result<Self, OutOfRange> {
        if (0.0..=1.0).contains(&value) {
            // normalise -0.0 so that printing and bit comparisons are stable
            Ok(TruthValue(value + 0.0))
        } else {
            Err(OutOfRange(value))
        }
    }

    /// Wraps the result of a closed-form connective.
    ///
    /// Closed forms are in range analytically; the clamp only absorbs a
    /// last-ulp rounding excursion and is never applied to caller input.
    pub(crate) fn from_closed_form(value: f64) -> Self {
        debug_assert!((-1e-12..=1.0 + 1e-12).contains(&value), "closed form produced {value}");
        TruthValue(value.clamp(0.0, 1.0) + 0.0)
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    /// Strong negation, `1 - x`.
    #[inline]
    pub fn complement(self) -> Self {
        TruthValue(1.0 - self.0)
    }

    pub fn is_crisp(self) -> bool {
        self.0 == 0.0 || self.0 == 1.0
    }
}

impl fmt::Debug for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthValue({})", self.0)
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl TryFrom<f64> for TruthValue {
    type Error = OutOfRange;

    fn try_from(value: f64) -> Result<Self, Self::Error> {
        TruthValue::new(value)
    }
}

impl From<TruthValue> for f64 {
    fn from(t: TruthValue) -> f64 {
        t.0
    }
}

impl From<bool> for TruthValue {
    fn from(b: bool) -> Self {
        if b {
            TruthValue::TRUE
        } else {
            TruthValue::FALSE
        }
    }
}

impl Serialize for TruthValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_f64(self.0)
    }
}

impl<'de> Deserialize<'de> for TruthValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = f64::deserialize(deserializer)?;
        TruthValue::new(v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range_without_clamping() {
        assert_eq!(TruthValue::new(1.0000001), Err(OutOfRange(1.0000001)));
        assert!(TruthValue::new(-0.1).is_err());
        assert!(TruthValue::new(f64::NAN).is_err());
        assert!(TruthValue::new(f64::INFINITY).is_err());
    }

    #[test]
    fn endpoints_are_exact() {
        assert_eq!(TruthValue::new(0.0).unwrap().get(), 0.0);
        assert_eq!(TruthValue::new(1.0).unwrap().get(), 1.0);
        assert!(TruthValue::new(-0.0).unwrap().get().is_sign_positive());
        assert!(TruthValue::TRUE.is_crisp() && TruthValue::FALSE.is_crisp());
        assert!(!TruthValue::new(0.5).unwrap().is_crisp());
    }

    #[test]
    fn serde_checks_range() {
        let t: TruthValue = serde_json::from_str("0.25").unwrap();
        assert_eq!(t.get(), 0.25);
        assert!(serde_json::from_str::<TruthValue>("1.5").is_err());
        assert_eq!(serde_json::to_string(&TruthValue::TRUE).unwrap(), "1.0");
    }
}
