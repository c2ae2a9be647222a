//! Seeded sampling check of the four t-norm axioms.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::TNormKind;

/// Absolute tolerance for comparing the two sides of an axiom.
pub const LAW_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    /// `T(x, y) = T(y, x)`
    Commutativity,
    /// `T(x, y) <= T(w, z)` when `x <= w` and `y <= z`
    Monotonicity,
    /// `T(x, T(y, z)) = T(T(x, y), z)`
    Associativity,
    /// `T(x, 1) = x`
    Identity,
    /// every output lies in `[0, 1]`
    Closure,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [
        Axiom::Commutativity,
        Axiom::Monotonicity,
        Axiom::Associativity,
        Axiom::Identity,
        Axiom::Closure,
    ];
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Commutativity => "commutativity",
            Axiom::Monotonicity => "monotonicity",
            Axiom::Associativity => "associativity",
            Axiom::Identity => "identity",
            Axiom::Closure => "closure",
        })
    }
}

/// The first sampled point at which an axiom failed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    /// Sample inputs in the order named by the axiom (x, y, z, w as used).
    pub inputs: Vec<f64>,
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomResult {
    pub axiom: Axiom,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LawReport {
    pub tnorm: String,
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub axioms: Vec<AxiomResult>,
}

impl LawReport {
    pub fn all_passed(&self) -> bool {
        self.axioms.iter().all(|a| a.passed)
    }

    pub fn result(&self, axiom: Axiom) -> &AxiomResult {
        self.axioms
            .iter()
            .find(|a| a.axiom == axiom)
            .expect("every axiom is reported")
    }

    /// One line naming the failed axioms, or "all axioms hold".
    pub fn summary(&self) -> String {
        let failed: Vec<String> = self
            .axioms
            .iter()
            .filter(|a| !a.passed)
            .map(|a| match &a.counterexample {
                Some(c) => format!("{} fails at {:?} ({} vs {})", a.axiom, c.inputs, c.lhs, c.rhs),
                None => format!("{} fails", a.axiom),
            })
            .collect();
        if failed.is_empty() {
            "all axioms hold".to_owned()
        } else {
            failed.join("; ")
        }
    }

    /// Multi-line human-readable rendering.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "t-norm {} ({} samples, seed {}, tolerance {:e})\n",
            self.tnorm, self.samples, self.seed, self.tolerance
        );
        for a in &self.axioms {
            let verdict = if a.passed { "pass" } else { "FAIL" };
            out.push_str(&format!("  {:<14} {verdict}", a.axiom.to_string()));
            if let Some(c) = &a.counterexample {
                out.push_str(&format!("  at {:?}: {} vs {}", c.inputs, c.lhs, c.rhs));
            }
            out.push('\n');
        }
        out
    }
}

/// Draws a sample in `[0, 1]`, landing on an endpoint one time in ten.
fn draw(rng: &mut ChaCha8Rng) -> f64 {
    if rng.random_bool(0.1) {
        if rng.random_bool(0.5) {
            1.0
        } else {
            0.0
        }
    } else {
        rng.random::<f64>()
    }
}

struct Tracker {
    axiom: Axiom,
    counterexample: Option<Counterexample>,
}

impl Tracker {
    fn new(axiom: Axiom) -> Self {
        Tracker {
            axiom,
            counterexample: None,
        }
    }

    fn record(&mut self, ok: bool, inputs: &[f64], lhs: f64, rhs: f64) {
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                inputs: inputs.to_vec(),
                lhs,
                rhs,
            });
        }
    }

    fn finish(self) -> AxiomResult {
        AxiomResult {
            axiom: self.axiom,
            passed: self.counterexample.is_none(),
            counterexample: self.counterexample,
        }
    }
}

fn in_unit(v: f64) -> bool {
    (0.0..=1.0).contains(&v)
}

/// Samples `samples` random points from a ChaCha8 stream seeded with `seed`
/// and checks each axiom at every point. A zero sample count is treated as one.
pub fn check_tnorm_laws(kind: &TNormKind, samples: usize, seed: u64) -> LawReport {
    let samples = samples.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = |a: f64, b: f64| kind.apply_raw(a, b);

    let mut comm = Tracker::new(Axiom::Commutativity);
    let mut mono = Tracker::new(Axiom::Monotonicity);
    let mut assoc = Tracker::new(Axiom::Associativity);
    let mut ident = Tracker::new(Axiom::Identity);
    let mut closure = Tracker::new(Axiom::Closure);

    for _ in 0..samples {
        let (x, y, z, w) = (draw(&mut rng), draw(&mut rng), draw(&mut rng), draw(&mut rng));

        let xy = t(x, y);
        let yx = t(y, x);
        comm.record((xy - yx).abs() <= LAW_TOL, &[x, y], xy, yx);

        let (lo1, hi1) = if x <= w { (x, w) } else { (w, x) };
        let (lo2, hi2) = if y <= z { (y, z) } else { (z, y) };
        let low = t(lo1, lo2);
        let high = t(hi1, hi2);
        mono.record(low <= high + LAW_TOL, &[lo1, lo2, hi1, hi2], low, high);

        let yz = t(y, z);
        let left = t(x, yz);
        let right = t(xy, z);
        assoc.record((left - right).abs() <= LAW_TOL, &[x, y, z], left, right);

        let x1 = t(x, 1.0);
        ident.record((x1 - x).abs() <= LAW_TOL, &[x], x1, x);

        for (v, inputs) in [(xy, [x, y]), (yz, [y, z]), (low, [lo1, lo2]), (high, [hi1, hi2])] {
            closure.record(in_unit(v), &inputs, v, v.clamp(0.0, 1.0));
        }
    }

    LawReport {
        tnorm: kind.name().to_owned(),
        samples,
        seed,
        tolerance: LAW_TOL,
        axioms: vec![
            comm.finish(),
            mono.finish(),
            assoc.finish(),
            ident.finish(),
            closure.finish(),
        ],
    }
}
