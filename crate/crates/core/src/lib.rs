//! t-norm based fuzzy logic (Godel, product, Lukasiewicz) and a fuzzy
//! Modus Tollens engine for reading statistical hypothesis tests as sound
//! inferences over partially true premises.
//!
//! - [`truth`]: the [`TruthValue`] type.
//! - [`algebra`]: t-norms, t-conorms, S/R negations and implications.
//! - [`laws`]: seeded checker for the t-norm axioms.
//! - [`formula`]: parser, evaluator and truth tables for propositional formulas.
//! - [`inference`]: Modus Tollens under every implication/negation mix.
//! - [`sht`]: hypothesis-testing scenarios mapped onto Modus Tollens premises.
//! - [`bayes`]: the posterior `P(H|E)` map with CSV/PGM export.
//! - [`cli`]: the `fuzzymt` command-line front end.

pub mod algebra;
pub mod bayes;
pub mod cli;
pub mod formula;
pub mod inference;
pub mod laws;
mod numfmt;
pub mod sht;
pub mod truth;

pub use algebra::{
    negate_s, residuum_numeric, Algebra, AlgebraError, Convention, CustomTNorm, Implication, Negation, TNormKind,
};
pub use formula::{evaluate, parse, truth_table, AtomValuation, Formula};
pub use inference::{consequent_value, contrapositive_check, modus_tollens, MtPremises, MtResult, Status};
pub use laws::{check_tnorm_laws, LawReport};
pub use numfmt::significant;
pub use truth::TruthValue;
