//! Bayes posterior `P(H|E)` as a function of the prior `P(H)` and the
//! alternative likelihood `P(E|not H)`, at a fixed `P(E|H)`.

use std::io::{self, Write};

use serde::Serialize;
use thiserror::Error;

use crate::numfmt::significant;

pub const DEFAULT_P_E_GIVEN_H: f64 = 0.04;
pub const DEFAULT_RESOLUTION: usize = 1001;
pub const MAX_RESOLUTION: usize = 4001;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BayesError {
    #[error("{name} must lie in [0, 1], got {value}")]
    OutOfRange { name: &'static str, value: f64 },
    #[error("resolution must be between 2 and {max}, got {value}")]
    Resolution { value: usize, max: usize },
    #[error("grid has no defined cells")]
    NoDefinedCells,
}

fn check_unit(name: &'static str, value: f64) -> Result<f64, BayesError> {
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(BayesError::OutOfRange { name, value })
    }
}

/// `P(E|H)P(H) / (P(E|H)P(H) + P(E|not H)(1 - P(H)))`, or `None` when the
/// denominator is exactly zero.
pub fn posterior(p_e_h: f64, p_h: f64, p_e_not_h: f64) -> Result<Option<f64>, BayesError> {
    check_unit("P(E|H)", p_e_h)?;
    check_unit("P(H)", p_h)?;
    check_unit("P(E|not H)", p_e_not_h)?;
    Ok(posterior_unchecked(p_e_h, p_h, p_e_not_h))
}

fn posterior_unchecked(p_e_h: f64, p_h: f64, p_e_not_h: f64) -> Option<f64> {
    let num = p_e_h * p_h;
    let den = num + p_e_not_h * (1.0 - p_h);
    (den != 0.0).then(|| num / den)
}

/// Posterior values on the `resolution x resolution` grid with inclusive
/// endpoints, indexed by (`P(H)` index, `P(E|not H)` index).
#[derive(Debug, Clone, PartialEq)]
pub struct PosteriorGrid {
    p_e_given_h: f64,
    resolution: usize,
    // NaN marks an undefined cell
    values: Vec<f64>,
    undefined_count: usize,
}

impl PosteriorGrid {
    pub fn p_e_given_h(&self) -> f64 {
        self.p_e_given_h
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn undefined_count(&self) -> usize {
        self.undefined_count
    }

    pub fn defined_count(&self) -> usize {
        self.values.len() - self.undefined_count
    }

    /// Axis coordinate `i / (resolution - 1)`.
    pub fn coordinate(&self, i: usize) -> f64 {
        i as f64 / (self.resolution - 1) as f64
    }

    pub fn get(&self, h_index: usize, e_index: usize) -> Option<f64> {
        assert!(
            h_index < self.resolution && e_index < self.resolution,
            "grid index out of bounds"
        );
        let v = self.values[h_index * self.resolution + e_index];
        (!v.is_nan()).then_some(v)
    }

    /// `(p_h, p_e_not_h, posterior)` in row-major order, `P(H)` slowest.
    pub fn cells(&self) -> impl Iterator<Item = (f64, f64, Option<f64>)> + '_ {
        let n = self.resolution;
        self.values.iter().enumerate().map(move |(k, &v)| {
            let (i, j) = (k / n, k % n);
            (self.coordinate(i), self.coordinate(j), (!v.is_nan()).then_some(v))
        })
    }

    /// CSV with header `p_h,p_e_not_h,posterior`; `NA` marks undefined cells.
    pub fn write_csv<W: Write>(&self, out: W) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["p_h", "p_e_not_h", "posterior"])?;
        for (h, e, v) in self.cells() {
            let post = v.map_or_else(|| "NA".to_owned(), |v| significant(v, 12));
            w.write_record([significant(h, 12), significant(e, 12), post])?;
        }
        w.flush()
    }

    /// Binary 8-bit PGM (P5). Rows run over `P(E|not H)` ascending from the
    /// top, columns over `P(H)` ascending from the left; pixel value is
    /// `round(255 * posterior)` and undefined cells are 0.
    pub fn write_pgm<W: Write>(&self, mut out: W) -> io::Result<()> {
        let n = self.resolution;
        write!(
            out,
            "P5\n# p_e_given_h={} resolution={}\n{} {}\n255\n",
            significant(self.p_e_given_h, 12),
            n,
            n,
            n
        )?;
        let mut row = vec![0u8; n];
        for e in 0..n {
            for (h, px) in row.iter_mut().enumerate() {
                *px = self.get(h, e).map_or(0, |v| (255.0 * v).round() as u8);
            }
            out.write_all(&row)?;
        }
        out.flush()
    }
}

/// Fills the grid for fixed `P(E|H)`. Undefined (0/0) cells are counted,
/// never interpolated.
pub fn posterior_grid(p_e_h: f64, resolution: usize) -> Result<PosteriorGrid, BayesError> {
    check_unit("P(E|H)", p_e_h)?;
    if !(2..=MAX_RESOLUTION).contains(&resolution) {
        return Err(BayesError::Resolution {
            value: resolution,
            max: MAX_RESOLUTION,
        });
    }
    let n = resolution;
    let step = (n - 1) as f64;
    let mut values = Vec::with_capacity(n * n);
    let mut undefined_count = 0;
    for i in 0..n {
        let p_h = i as f64 / step;
        for j in 0..n {
            let p_e_not_h = j as f64 / step;
            match posterior_unchecked(p_e_h, p_h, p_e_not_h) {
                Some(v) => values.push(v),
                None => {
                    undefined_count += 1;
                    values.push(f64::NAN);
                }
            }
        }
    }
    Ok(PosteriorGrid {
        p_e_given_h: p_e_h,
        resolution,
        values,
        undefined_count,
    })
}

/// Fraction of defined cells whose posterior is strictly above `threshold`.
pub fn exceedance_fraction(grid: &PosteriorGrid, threshold: f64) -> Result<f64, BayesError> {
    check_unit("threshold", threshold)?;
    let defined = grid.defined_count();
    if defined == 0 {
        return Err(BayesError::NoDefinedCells);
    }
    let above = grid.values.iter().filter(|v| !v.is_nan() && **v > threshold).count();
    Ok(above as f64 / defined as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridSummary {
    pub p_e_given_h: f64,
    pub resolution: usize,
    pub threshold: f64,
    pub exceedance_fraction: f64,
    pub defined_cells: usize,
    pub undefined_cells: usize,
}

pub fn summarize(grid: &PosteriorGrid, threshold: f64) -> Result<GridSummary, BayesError> {
    Ok(GridSummary {
        p_e_given_h: grid.p_e_given_h,
        resolution: grid.resolution,
        threshold,
        exceedance_fraction: exceedance_fraction(grid, threshold)?,
        defined_cells: grid.defined_count(),
        undefined_cells: grid.undefined_count,
    })
}
