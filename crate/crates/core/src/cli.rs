//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 valid run whose algebra
//! admits no consistent inference, 3 internal numeric or I/O failure.
//! Errors go to the error stream as one JSON object per line.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::algebra::{Algebra, AlgebraError, Convention, Implication, Negation, TNormKind};
use crate::bayes::{self, BayesError, DEFAULT_P_E_GIVEN_H, DEFAULT_RESOLUTION};
use crate::formula::{self, AtomValuation, EvalError, Formula, TableError};
use crate::inference::{modus_tollens, MtPremises};
use crate::laws::check_tnorm_laws;
use crate::numfmt::significant;
use crate::sht::{run_sht, run_sht_with_statistic, ShtScenario, TestStatistic};
use crate::truth::TruthValue;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INCONSISTENT: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "fuzzymt",
    version,
    about = "t-norm fuzzy logic and fuzzy Modus Tollens for hypothesis tests"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TNormArg {
    Godel,
    Product,
    Lukasiewicz,
}

impl From<TNormArg> for TNormKind {
    fn from(t: TNormArg) -> Self {
        match t {
            TNormArg::Godel => TNormKind::Godel,
            TNormArg::Product => TNormKind::Product,
            TNormArg::Lukasiewicz => TNormKind::Lukasiewicz,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SideArg {
    S,
    R,
}

#[derive(Debug, Args)]
struct AlgebraArgs {
    /// t-norm used for conjunction
    #[arg(long, value_enum, default_value = "product")]
    tnorm: TNormArg,
    /// implication convention
    #[arg(long = "impl", value_enum, default_value = "s")]
    implication: SideArg,
    /// negation convention
    #[arg(long = "neg", value_enum, default_value = "s")]
    negation: SideArg,
}

impl AlgebraArgs {
    fn algebra(&self) -> Algebra {
        let implication = match self.implication {
            SideArg::S => Implication::S,
            SideArg::R => Implication::R,
        };
        let negation = match self.negation {
            SideArg::S => Negation::S,
            SideArg::R => Negation::R,
        };
        Algebra::new(self.tnorm.into(), Convention::new(implication, negation))
            .expect("built-in t-norms need no law check")
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ValueFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GridFormat {
    Csv,
    Pgm,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a formula under an assignment of its atoms
    Eval {
        #[arg(long)]
        formula: String,
        /// comma-separated name=value pairs
        #[arg(long, default_value = "")]
        assign: String,
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: ValueFormat,
    },
    /// Tabulate a formula over a grid of atom values (CSV)
    Table {
        #[arg(long)]
        formula: String,
        #[arg(long, default_value_t = 0.25)]
        step: f64,
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
    /// Fuzzy Modus Tollens from premise valuations (JSON)
    Mt {
        #[arg(long = "nu-p1")]
        nu_p1: f64,
        #[arg(long = "nu-p2")]
        nu_p2: f64,
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
    /// Hypothesis-test scenario, optionally from a normal test statistic (JSON)
    Sht {
        #[arg(long)]
        alpha: f64,
        #[arg(long = "p-err", default_value_t = 0.0)]
        p_err: f64,
        /// exponent n of the valuation 1 - alpha^n
        #[arg(long = "n", default_value_t = 1.0)]
        model_n: f64,
        #[arg(long, requires_all = ["null_mean", "null_sd"])]
        observed: Option<f64>,
        #[arg(long = "null-mean", requires_all = ["observed", "null_sd"])]
        null_mean: Option<f64>,
        #[arg(long = "null-sd", requires_all = ["observed", "null_mean"])]
        null_sd: Option<f64>,
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
    /// Posterior P(H|E) over the (P(H), P(E|not H)) square
    BayesMap {
        #[arg(long = "p-e-h", default_value_t = DEFAULT_P_E_GIVEN_H)]
        p_e_h: f64,
        #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
        resolution: usize,
        #[arg(long, default_value_t = 0.2)]
        threshold: f64,
        #[arg(long, value_enum, default_value = "csv")]
        format: GridFormat,
        /// write the grid here and the summary to standard output; without
        /// it the grid goes to standard output and the summary to the error stream
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check the t-norm axioms on seeded random samples
    Check {
        #[arg(long, value_enum)]
        tnorm: TNormArg,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: ValueFormat,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Input { kind: &'static str, message: String },
    Numeric(String),
    Io(String),
}

impl CliError {
    fn input(kind: &'static str, err: impl ToString) -> Self {
        CliError::Input {
            kind,
            message: err.to_string(),
        }
    }

    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input { .. } => EXIT_USAGE,
            CliError::Numeric(_) | CliError::Io(_) => EXIT_NUMERIC,
        }
    }

    fn to_json(&self) -> serde_json::Value {
        let (kind, message) = match self {
            CliError::Usage(m) => ("usage", m.as_str()),
            CliError::Input { kind, message } => (*kind, message.as_str()),
            CliError::Numeric(m) => ("numeric", m.as_str()),
            CliError::Io(m) => ("io", m.as_str()),
        };
        json!({ "error": { "kind": kind, "message": message } })
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Numeric(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<EvalError> for CliError {
    fn from(e: EvalError) -> Self {
        match e {
            EvalError::Algebra(a) => a.into(),
            unbound => CliError::input("eval", unbound),
        }
    }
}

impl From<TableError> for CliError {
    fn from(e: TableError) -> Self {
        match e {
            TableError::Eval(inner) => inner.into(),
            other => CliError::input("table", other),
        }
    }
}

impl From<BayesError> for CliError {
    fn from(e: BayesError) -> Self {
        CliError::input("bayes", e)
    }
}

fn truth(name: &str, v: f64) -> Result<TruthValue, CliError> {
    TruthValue::new(v).map_err(|e| CliError::input("range", format!("{name}: {e}")))
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value).map_err(|e| CliError::Io(e.to_string()))?;
    out.write_all(b"\n")?;
    Ok(())
}

#[derive(Serialize)]
struct EvalOutput<'a> {
    formula: String,
    value: f64,
    tnorm: &'a str,
    implication: Implication,
    negation: Negation,
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{}", e.render());
                return EXIT_OK;
            }
            let err = CliError::Usage(e.render().to_string().trim_end().to_owned());
            let _ = writeln!(stderr, "{}", err.to_json());
            return EXIT_USAGE;
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => {
            let _ = stdout.flush();
            code
        }
        Err(err) => {
            let _ = writeln!(stderr, "{}", err.to_json());
            err.exit_code()
        }
    }
}

fn dispatch(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Eval {
            formula,
            assign,
            algebra,
            format,
        } => {
            let f: Formula = formula::parse(&formula).map_err(|e| CliError::input("parse", e))?;
            let valuation: AtomValuation = assign.parse().map_err(|e| CliError::input("assign", e))?;
            let alg = algebra.algebra();
            let value = f.evaluate(&valuation, &alg)?;
            match format {
                ValueFormat::Text => writeln!(stdout, "{}", significant(value.get(), 12))?,
                ValueFormat::Json => {
                    let convention = alg.convention();
                    write_json(
                        stdout,
                        &EvalOutput {
                            formula: f.to_string(),
                            value: value.get(),
                            tnorm: alg.tnorm_kind().name(),
                            implication: convention.implication,
                            negation: convention.negation,
                        },
                    )?
                }
            }
            Ok(EXIT_OK)
        }
        Command::Table { formula, step, algebra } => {
            let f = formula::parse(&formula).map_err(|e| CliError::input("parse", e))?;
            let table = formula::truth_table(&f, &algebra.algebra(), step)?;
            stdout.write_all(table.to_csv().as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Mt { nu_p1, nu_p2, algebra } => {
            let premises = MtPremises::new(truth("nu-p1", nu_p1)?, truth("nu-p2", nu_p2)?);
            let result = modus_tollens(&algebra.algebra(), premises)?;
            write_json(stdout, &result)?;
            Ok(if result.is_consistent() {
                EXIT_OK
            } else {
                EXIT_INCONSISTENT
            })
        }
        Command::Sht {
            alpha,
            p_err,
            model_n,
            observed,
            null_mean,
            null_sd,
            algebra,
        } => {
            let scenario = ShtScenario::new(alpha, p_err, model_n, algebra.algebra())
                .map_err(|e| CliError::input("scenario", e))?;
            let verdict = match (observed, null_mean, null_sd) {
                (Some(o), Some(m), Some(s)) => {
                    let stat = TestStatistic::new(o, m, s).map_err(|e| CliError::input("statistic", e))?;
                    run_sht_with_statistic(&scenario, &stat)?
                }
                _ => run_sht(&scenario)?,
            };
            write_json(stdout, &verdict)?;
            Ok(if verdict.is_inconsistent() {
                EXIT_INCONSISTENT
            } else {
                EXIT_OK
            })
        }
        Command::BayesMap {
            p_e_h,
            resolution,
            threshold,
            format,
            output,
        } => {
            let grid = bayes::posterior_grid(p_e_h, resolution)?;
            let summary = bayes::summarize(&grid, threshold)?;
            let write_grid = |w: &mut dyn Write| match format {
                GridFormat::Csv => grid.write_csv(w),
                GridFormat::Pgm => grid.write_pgm(w),
            };
            match output {
                Some(path) => {
                    let mut file = BufWriter::new(File::create(&path)?);
                    write_grid(&mut file)?;
                    file.flush()?;
                    write_json(stdout, &summary)?;
                }
                None => {
                    let mut buffered = BufWriter::new(&mut *stdout);
                    write_grid(&mut buffered)?;
                    buffered.flush()?;
                    drop(buffered);
                    write_json(stderr, &summary)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Check {
            tnorm,
            samples,
            seed,
            format,
        } => {
            if samples == 0 {
                return Err(CliError::Usage("--samples must be at least 1".to_owned()));
            }
            let report = check_tnorm_laws(&tnorm.into(), samples, seed);
            match format {
                ValueFormat::Json => write_json(stdout, &report)?,
                ValueFormat::Text => stdout.write_all(report.to_text().as_bytes())?,
            }
            Ok(EXIT_OK)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn invoke(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("fuzzymt").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn defaults_are_product_s_s() {
        let (code, out, _) = invoke(&["mt", "--nu-p1", "0.95", "--nu-p2", "0.5"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!((v["nu_not_h"].as_f64().unwrap() - 0.475).abs() < 1e-15);
        assert_eq!(v["generalized"], true);
    }

    #[test]
    fn usage_errors_are_json_exit_1() {
        let (code, out, err) = invoke(&["mt", "--nu-p1", "0.95"]);
        assert_eq!(code, 1);
        assert!(out.is_empty());
        assert_eq!(err.lines().count(), 1);
        let v: serde_json::Value = serde_json::from_str(&err).unwrap();
        assert_eq!(v["error"]["kind"], "usage");

        let (code, _, err) = invoke(&["mt", "--nu-p1", "1.5", "--nu-p2", "1"]);
        assert_eq!(code, 1);
        assert!(err.contains("\"range\""));

        let (code, _, _) = invoke(&["sht", "--alpha", "0.05", "--observed", "2"]);
        assert_eq!(code, 1);

        let (code, _, err) = invoke(&["eval", "--formula", "a & | b", "--assign", "a=1,b=0"]);
        assert_eq!(code, 1);
        assert!(err.contains("column 5"), "{err}");

        let (code, _, err) = invoke(&["eval", "--formula", "a & b", "--assign", "a=1"]);
        assert_eq!(code, 1);
        assert!(err.contains("`b`"), "{err}");
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = invoke(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("bayes-map"));
    }

    #[test]
    fn sht_inconsistent_exits_2() {
        let (code, out, _) = invoke(&[
            "sht", "--alpha", "0.05", "--tnorm", "godel", "--impl", "r", "--neg", "r",
        ]);
        assert_eq!(code, 2);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["verdict"], "no_sound_inference");
    }

    #[test]
    fn sht_with_statistic() {
        let (code, out, _) = invoke(&[
            "sht",
            "--alpha",
            "0.05",
            "--observed",
            "0.5",
            "--null-mean",
            "0",
            "--null-sd",
            "1",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["verdict"], "p2_not_established");
    }

    #[test]
    fn check_text_and_zero_samples() {
        let (code, out, _) = invoke(&["check", "--tnorm", "godel", "--format", "text", "--samples", "10"]);
        assert_eq!(code, 0);
        assert!(out.contains("associativity"));
        let (code, _, _) = invoke(&["check", "--tnorm", "godel", "--samples", "0"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn bayes_map_to_stdout_puts_summary_on_stderr() {
        let (code, out, err) = invoke(&["bayes-map", "--resolution", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 10);
        let v: serde_json::Value = serde_json::from_str(&err).unwrap();
        assert_eq!(v["undefined_cells"], 1);
    }
}
