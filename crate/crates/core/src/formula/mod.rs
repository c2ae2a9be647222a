//! Fuzzy propositional formulas over named atoms.
//!
//! Concrete syntax (loosest binding first):
//!
//! ```text
//! implication := disjunction ( "->" implication )?        right-associative
//! disjunction := conjunction ( ("|" | "or") conjunction )*  left-associative
//! conjunction := unary ( ("&" | "and") unary )*            left-associative
//! unary       := ("!" | "not") unary | primary
//! primary     := atom | constant | "(" implication ")"
//! ```
//!
//! Atoms match `[A-Za-z_][A-Za-z0-9_]*` (excluding the keywords `not`, `and`,
//! `or`); constants are decimal literals in `[0, 1]`. The Unicode symbols
//! `¬ ∧ ∨ →` are accepted as synonyms.

mod parser;
mod table;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::truth::TruthValue;

pub use parser::{parse, ParseError};
pub use table::{truth_table, TableError, TableRow, TruthTable, MAX_TABLE_ATOMS, MAX_TABLE_ROWS};

const KEYWORDS: [&str; 3] = ["not", "and", "or"];

/// Whether `name` is a legal atom name.
pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    let head_ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_');
    head_ok && chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && !KEYWORDS.contains(&name)
}

#[derive(Debug, Clone, PartialEq)]
pub enum Formula {
    Atom(String),
    Const(TruthValue),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("`{0}` is not a valid atom name")]
pub struct InvalidAtom(pub String);

impl Formula {
    pub fn atom(name: impl Into<String>) -> Result<Formula, InvalidAtom> {
        let name = name.into();
        if is_identifier(&name) {
            Ok(Formula::Atom(name))
        } else {
            Err(InvalidAtom(name))
        }
    }

    pub fn constant(value: TruthValue) -> Formula {
        Formula::Const(value)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    /// Atom names in lexicographic order.
    pub fn atoms(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Formula::Atom(name) => {
                out.insert(name);
            }
            Formula::Const(_) => {}
            Formula::Not(f) => f.collect_atoms(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Implies(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            Formula::Not(_) => 4,
            Formula::Atom(_) | Formula::Const(_) => 5,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        let prec = self.precedence();
        let paren = prec < min_prec;
        if paren {
            f.write_str("(")?;
        }
        match self {
            Formula::Atom(name) => f.write_str(name)?,
            Formula::Const(v) => write!(f, "{}", v.get())?,
            Formula::Not(inner) => {
                f.write_str("!")?;
                inner.write_at(f, prec)?;
            }
            Formula::And(a, b) | Formula::Or(a, b) => {
                let op = if matches!(self, Formula::And(..)) { " & " } else { " | " };
                a.write_at(f, prec)?;
                f.write_str(op)?;
                b.write_at(f, prec + 1)?;
            }
            Formula::Implies(a, b) => {
                a.write_at(f, prec + 1)?;
                f.write_str(" -> ")?;
                b.write_at(f, prec)?;
            }
        }
        if paren {
            f.write_str(")")?;
        }
        Ok(())
    }

    /// Evaluates the formula under `valuation` with the connectives of `algebra`.
    pub fn evaluate(&self, valuation: &AtomValuation, algebra: &Algebra) -> Result<TruthValue, EvalError> {
        Ok(match self {
            Formula::Atom(name) => valuation
                .get(name)
                .ok_or_else(|| EvalError::UnboundAtom(name.clone()))?,
            Formula::Const(v) => *v,
            Formula::Not(f) => algebra.not(f.evaluate(valuation, algebra)?)?,
            Formula::And(a, b) => algebra.and(a.evaluate(valuation, algebra)?, b.evaluate(valuation, algebra)?)?,
            Formula::Or(a, b) => algebra.or(a.evaluate(valuation, algebra)?, b.evaluate(valuation, algebra)?)?,
            Formula::Implies(a, b) => {
                algebra.implies(a.evaluate(valuation, algebra)?, b.evaluate(valuation, algebra)?)?
            }
        })
    }
}

/// Prints with the minimum parentheses needed to parse back to the same tree.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

/// Convenience wrapper for [`Formula::evaluate`].
pub fn evaluate(f: &Formula, valuation: &AtomValuation, algebra: &Algebra) -> Result<TruthValue, EvalError> {
    f.evaluate(valuation, algebra)
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("atom `{0}` has no assigned truth value")]
    UnboundAtom(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Truth values assigned to atoms.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct AtomValuation(BTreeMap<String, TruthValue>);

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ValuationError {
    #[error("assignment `{0}` is not of the form name=value")]
    Malformed(String),
    #[error(transparent)]
    InvalidAtom(#[from] InvalidAtom),
    #[error("value `{value}` for atom `{atom}` is not a number")]
    NotANumber { atom: String, value: String },
    #[error("value {value} for atom `{atom}` is outside [0, 1]")]
    OutOfRange { atom: String, value: f64 },
    #[error("atom `{0}` is assigned more than once")]
    Duplicate(String),
}

impl AtomValuation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, name: impl Into<String>, value: TruthValue) -> Result<(), InvalidAtom> {
        let name = name.into();
        if !is_identifier(&name) {
            return Err(InvalidAtom(name));
        }
        self.0.insert(name, value);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<TruthValue> {
        self.0.get(name).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, TruthValue)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }
}

impl FromIterator<(String, TruthValue)> for AtomValuation {
    fn from_iter<I: IntoIterator<Item = (String, TruthValue)>>(iter: I) -> Self {
        AtomValuation(iter.into_iter().collect())
    }
}

/// Parses `a=0.3,b=0.9`. An empty string is the empty valuation.
impl FromStr for AtomValuation {
    type Err = ValuationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = AtomValuation::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (name, value) = part
                .split_once('=')
                .ok_or_else(|| ValuationError::Malformed(part.to_owned()))?;
            let (name, value) = (name.trim(), value.trim());
            if !is_identifier(name) {
                return Err(InvalidAtom(name.to_owned()).into());
            }
            let v: f64 = value.parse().map_err(|_| ValuationError::NotANumber {
                atom: name.to_owned(),
                value: value.to_owned(),
            })?;
            let t = TruthValue::new(v).map_err(|_| ValuationError::OutOfRange {
                atom: name.to_owned(),
                value: v,
            })?;
            if out.0.insert(name.to_owned(), t).is_some() {
                return Err(ValuationError::Duplicate(name.to_owned()));
            }
        }
        Ok(out)
    }
}
