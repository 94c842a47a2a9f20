//! `stability-kit` command-line driver.
//!
//! Polynomial and operator arguments are a file path, `-` for stdin, or
//! inline JSON. Exit codes: 0 ok, 1 failures, 2 usage or input error.

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use stability_kit::apolarity::{apolarity_form, symbol, transvectant, LinearOp};
use stability_kit::harness::{
    additive_convolution, multiplicative_convolution, replay_report, run_suite, suite_names, SuiteConfig, SuiteReport,
};
use stability_kit::json::{poly_from_str, poly_to_value, verdict_to_json, GaussJson, LinearOpJson};
use stability_kit::moebius::{act_poly, MoebiusMap, MoebiusTuple};
use stability_kit::polarization::{polarize, project};
use stability_kit::regions::parse_product;
use stability_kit::roots::default_precision;
use stability_kit::stability::{multivariate_stable, univariate_stable, StabilityOptions};
use stability_kit::{BiHomPoly, DegreeVec, Error, GaussRat};

#[derive(Parser)]
#[command(name = "stability-kit", version, about = "Apolarity, symbols and stability of bihomogeneous polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a randomized suite and write its report.
    Suite {
        name: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sample points per multivariate falsification.
        #[arg(long, default_value_t = 2000)]
        budget: usize,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long)]
        precision: Option<u32>,
        /// Report path; stdout when absent.
        #[arg(long)]
        out: Option<String>,
    },
    /// Symbol of a linear operator.
    Symbol { op: String },
    /// Apolarity form of two polynomials of equal degree.
    Apolar { p: String, q: String },
    /// Transvectant of order `--order r1,r2,…`.
    Transvect {
        p: String,
        q: String,
        #[arg(long, value_delimiter = ',')]
        order: Vec<u32>,
    },
    /// Additive or multiplicative convolution.
    Convolve {
        p: String,
        q: String,
        #[arg(long, value_enum, default_value_t = Kind::Additive)]
        kind: Kind,
    },
    /// Polarization into one variable pair per unit of degree.
    Polarize { p: String },
    /// Diagonal projection collapsing consecutive groups of variables.
    Project {
        p: String,
        #[arg(long, value_delimiter = ',', required = true)]
        groups: Vec<u32>,
    },
    /// Stability verdict on a region product.
    Stable {
        p: String,
        #[arg(long)]
        region: String,
        #[arg(long)]
        precision: Option<u32>,
        #[arg(long, default_value_t = 2000)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Möbius action. One `--map a,b,c,d` acts on every variable; otherwise
    /// give one per variable.
    Act {
        p: String,
        #[arg(long = "map", required = true)]
        maps: Vec<String>,
    },
    /// Rerun the failing and undecided cases of a report.
    Replay { report: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Additive,
    Multiplicative,
}

enum Failure {
    Input(String),
    Failed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read_arg(arg: &str) -> Result<String, Failure> {
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok(arg.to_string());
    }
    fs::read_to_string(arg).map_err(|e| Failure::Input(format!("{arg}: {e}")))
}

fn read_poly(arg: &str) -> Result<BiHomPoly, Failure> {
    Ok(poly_from_str(&read_arg(arg)?)?)
}

fn print(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("plain data"));
}

fn parse_map(s: &str) -> Result<MoebiusMap, Failure> {
    let parts: Vec<GaussRat> = s.split(',').map(str::parse).collect::<Result<_, _>>()?;
    let [a, b, c, d]: [GaussRat; 4] =
        parts.try_into().map_err(|_| Failure::Input(format!("map '{s}' needs four entries a,b,c,d")))?;
    Ok(MoebiusMap::new(a, b, c, d)?)
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Suite { name, seed, budget, cases, precision, out } => {
            if !suite_names().contains(&name.as_str()) {
                return Err(Failure::Input(format!("unknown suite '{name}'; known: {}", suite_names().join(", "))));
            }
            let cfg = SuiteConfig { cases, budget, precision: precision.unwrap_or_else(default_precision) };
            let report = run_suite(&name, seed, &cfg)?;
            match out {
                Some(path) => fs::write(&path, report.to_json())?,
                None => println!("{}", report.to_json()),
            }
            eprintln!(
                "{}: {} cases, {} passed ({} budgeted), {} failed, {} indeterminate, {} ms",
                report.suite,
                report.cases,
                report.passed,
                report.budgeted,
                report.failures.len(),
                report.indeterminates.len(),
                report.wall_time_ms
            );
            if report.is_clean() {
                Ok(())
            } else {
                Err(Failure::Failed)
            }
        }
        Command::Symbol { op } => {
            let j: LinearOpJson = serde_json::from_str(&read_arg(&op)?)?;
            print(&poly_to_value(&symbol(&LinearOp::try_from(&j)?)));
            Ok(())
        }
        Command::Apolar { p, q } => {
            let v = apolarity_form(&read_poly(&p)?, &read_poly(&q)?)?;
            print(&json!({ "value": GaussJson::from(&v) }));
            Ok(())
        }
        Command::Transvect { p, q, order } => {
            print(&poly_to_value(&transvectant(&read_poly(&p)?, &read_poly(&q)?, &DegreeVec::new(order))?));
            Ok(())
        }
        Command::Convolve { p, q, kind } => {
            let (p, q) = (read_poly(&p)?, read_poly(&q)?);
            let r = match kind {
                Kind::Additive => additive_convolution(&p, &q)?,
                Kind::Multiplicative => multiplicative_convolution(&p, &q)?,
            };
            print(&poly_to_value(&r));
            Ok(())
        }
        Command::Polarize { p } => {
            print(&poly_to_value(&polarize(&read_poly(&p)?)));
            Ok(())
        }
        Command::Project { p, groups } => {
            print(&poly_to_value(&project(&read_poly(&p)?, &DegreeVec::new(groups))?));
            Ok(())
        }
        Command::Stable { p, region, precision, budget, seed } => {
            let p = read_poly(&p)?;
            let regions = parse_product(&region)?;
            if regions.arity() != p.arity() {
                return Err(Error::ArityMismatch(p.arity(), regions.arity()).into());
            }
            let precision = precision.unwrap_or_else(default_precision);
            let v = if p.arity() == 1 {
                univariate_stable(&p, &regions.0[0], precision)?
            } else {
                multivariate_stable(&p, &regions, &StabilityOptions { precision, budget, seed })
            };
            print(&verdict_to_json(&v, precision));
            Ok(())
        }
        Command::Act { p, maps } => {
            let p = read_poly(&p)?;
            let maps: Vec<MoebiusMap> = maps.iter().map(|m| parse_map(m)).collect::<Result<_, _>>()?;
            let tuple = match maps.len() {
                1 => MoebiusTuple(vec![maps[0].clone(); p.arity()]),
                n if n == p.arity() => MoebiusTuple(maps),
                n => return Err(Error::ArityMismatch(p.arity(), n).into()),
            };
            print(&poly_to_value(&act_poly(&tuple, &p)?));
            Ok(())
        }
        Command::Replay { report } => {
            let report = SuiteReport::from_json(&read_arg(&report)?)?;
            let replays = replay_report(&report)?;
            print(&serde_json::to_value(&replays)?);
            if replays.iter().all(|r| r.reproduced) {
                Ok(())
            } else {
                Err(Failure::Failed)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Failed) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
