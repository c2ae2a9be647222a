use thiserror::Error;

use super::{AtomValuation, EvalError, Formula};
use crate::algebra::Algebra;
use crate::numfmt::significant;
use crate::truth::TruthValue;

pub const MAX_TABLE_ATOMS: usize = 4;
pub const MAX_TABLE_ROWS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TableError {
    #[error("step must satisfy 0 < step <= 1, got {0}")]
    InvalidStep(f64),
    #[error("formula has {count} atoms; truth tables support at most {max}")]
    TooManyAtoms { count: usize, max: usize },
    #[error("truth table would have {rows} rows; the limit is {max}")]
    TooManyRows { rows: u128, max: usize },
    #[error(transparent)]
    Eval(#[from] EvalError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub inputs: Vec<TruthValue>,
    pub value: TruthValue,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TruthTable {
    pub atoms: Vec<String>,
    pub rows: Vec<TableRow>,
}

impl TruthTable {
    /// CSV with header `<atoms...>,value`; numbers use up to 12 significant digits.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let header: Vec<&str> = self.atoms.iter().map(String::as_str).chain(["value"]).collect();
        w.write_record(&header).expect("in-memory write");
        for row in &self.rows {
            let fields = row
                .inputs
                .iter()
                .chain(std::iter::once(&row.value))
                .map(|v| significant(v.get(), 12));
            w.write_record(fields).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
    }
}

/// Grid points `0, step, 2*step, ...` ending at exactly 1.
///
/// When `1/step` is (within 1e-9 of) an integer `n`, points are computed as
/// `i/n` so that they do not accumulate rounding drift.
pub(crate) fn grid_points(step: f64) -> Result<Vec<f64>, TableError> {
    if !(step > 0.0 && step <= 1.0) {
        return Err(TableError::InvalidStep(step));
    }
    let ratio = 1.0 / step;
    let n = ratio.round();
    if (ratio - n).abs() <= 1e-9 * ratio.max(1.0) {
        let n_int = n as usize;
        return Ok((0..=n_int).map(|i| i as f64 / n).collect());
    }
    let count = ratio.floor() as usize;
    let mut pts: Vec<f64> = (0..=count).map(|i| i as f64 * step).collect();
    if *pts.last().expect("non-empty") < 1.0 {
        pts.push(1.0);
    }
    Ok(pts)
}

/// Tabulates `formula` over every atom ranging across the step grid.
///
/// Atoms are ordered lexicographically; the first atom varies slowest.
pub fn truth_table(formula: &Formula, algebra: &Algebra, step: f64) -> Result<TruthTable, TableError> {
    let atoms: Vec<String> = formula.atoms().into_iter().map(str::to_owned).collect();
    if atoms.len() > MAX_TABLE_ATOMS {
        return Err(TableError::TooManyAtoms {
            count: atoms.len(),
            max: MAX_TABLE_ATOMS,
        });
    }
    if !(step > 0.0 && step <= 1.0) {
        return Err(TableError::InvalidStep(step));
    }
    // checked before materialising the grid so tiny steps fail fast
    let per_atom = (1.0 / step).floor() as u128 + 2;
    let upper = per_atom.saturating_pow(atoms.len() as u32);
    if upper > MAX_TABLE_ROWS as u128 {
        let exact = (grid_points(step)?.len() as u128).saturating_pow(atoms.len() as u32);
        if exact > MAX_TABLE_ROWS as u128 {
            return Err(TableError::TooManyRows {
                rows: exact,
                max: MAX_TABLE_ROWS,
            });
        }
    }
    let points: Vec<TruthValue> = grid_points(step)?
        .into_iter()
        .map(TruthValue::from_closed_form)
        .collect();

    let total = points.len().pow(atoms.len() as u32);
    let mut rows = Vec::with_capacity(total);
    let mut idx = vec![0usize; atoms.len()];
    for _ in 0..total {
        let inputs: Vec<TruthValue> = idx.iter().map(|&i| points[i]).collect();
        let valuation: AtomValuation = atoms.iter().cloned().zip(inputs.iter().copied()).collect();
        let value = formula.evaluate(&valuation, algebra)?;
        rows.push(TableRow { inputs, value });
        // odometer, last atom fastest
        for slot in idx.iter_mut().rev() {
            *slot += 1;
            if *slot < points.len() {
                break;
            }
            *slot = 0;
        }
    }
    Ok(TruthTable { atoms, rows })
}
