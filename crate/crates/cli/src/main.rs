//! `abelcc`: JSON front end to the `abel_cc` library.
//!
//! Exit codes: 0 holds (or success), 3 fails, 4 not periodic, 1 input error,
//! 2 internal inconsistency, 5 center assertion violated.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use abel_cc::field::check_degree;
use abel_cc::instances::{random_instance, InstanceKind};
use abel_cc::json::{
    parse_abel, parse_pair, parse_trig, LaurentJson, PairJson, RatFuncJson, VerdictJson,
};
use abel_cc::ode::{Integrator, OdeReport, Status, DEFAULT_STEPS};
use abel_cc::{decide_cc, decide_cc_abel, CCVerdict, Error, TrigPoly};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

const EXIT_HOLDS: u8 = 0;
const EXIT_INPUT: u8 = 1;
const EXIT_INTERNAL: u8 = 2;
const EXIT_FAILS: u8 = 3;
const EXIT_NOT_PERIODIC: u8 = 4;
const EXIT_CENTER_VIOLATED: u8 = 5;

#[derive(Parser)]
#[command(
    name = "abelcc",
    version,
    about = "Decide the composition condition for trigonometric Abel equations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// JSON input file; stdin when absent.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Reject inputs of higher trigonometric degree.
    #[arg(long, default_value_t = 64)]
    max_degree: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Laurent image of a trigonometric polynomial.
    Phi(Input),
    /// Rational function in x = tan(θ/2) of a trigonometric polynomial.
    Psi(Input),
    /// Decide the composition condition for `{"l": .., "m": ..}`.
    Decide(Input),
    /// Same, from Abel coefficients `{"l_hat": .., "m_hat": ..}`.
    DecideAbel(Input),
    /// Integrate the Abel equation over one period from each r0.
    VerifyOde {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_STEPS)]
        steps: usize,
        /// Initial value; repeatable. Defaults to ±0.01 and ±0.05.
        #[arg(long = "r0", allow_negative_numbers = true)]
        r0: Vec<f64>,
        /// Exit 5 if a converged sample moves by more than this.
        #[arg(long, value_name = "TOL", num_args = 0..=1, default_missing_value = "1e-7")]
        assert_center: Option<f64>,
    },
    /// Seeded random pair `{"l": .., "m": ..}`.
    RandomInstance {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Kind::Holds)]
        kind: Kind,
        /// Degree of the inner polynomial w (holds only).
        #[arg(long, default_value_t = 2)]
        deg_w: usize,
        #[arg(long, default_value_t = 2)]
        deg_l: usize,
        #[arg(long, default_value_t = 3)]
        deg_m: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Holds,
    Generic,
}

#[derive(Serialize)]
struct OdeOutput {
    steps: usize,
    samples: Vec<abel_cc::ode::Sample>,
    max_displacement: f64,
}

/// Failure of a command, already mapped to its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InternalInconsistency(_) => EXIT_INTERNAL,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

fn read_input(input: &Input) -> Result<String, Failure> {
    match &input.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| input_error(format!("{}: {e}", path.display()))),
        None => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| input_error(format!("stdin: {e}")))?;
            Ok(text)
        }
    }
}

fn emit<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn check_all(input: &Input, polys: &[&TrigPoly]) -> Result<(), Failure> {
    for p in polys {
        check_degree(p, input.max_degree)?;
    }
    Ok(())
}

fn verdict_exit(v: &CCVerdict) -> u8 {
    match v {
        CCVerdict::Holds { .. } => EXIT_HOLDS,
        CCVerdict::Fails { .. } => EXIT_FAILS,
        CCVerdict::NotPeriodic => EXIT_NOT_PERIODIC,
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Phi(input) => {
            let f = parse_trig(&read_input(&input)?)?;
            check_all(&input, &[&f])?;
            emit(&LaurentJson::from(&f.to_laurent()));
            Ok(0)
        }
        Command::Psi(input) => {
            let f = parse_trig(&read_input(&input)?)?;
            check_all(&input, &[&f])?;
            emit(&RatFuncJson::from(&f.to_half_angle()));
            Ok(0)
        }
        Command::Decide(input) => {
            let (l, m) = parse_pair(&read_input(&input)?)?;
            check_all(&input, &[&l, &m])?;
            let v = decide_cc(&l, &m)?;
            emit(&VerdictJson::from(&v));
            Ok(verdict_exit(&v))
        }
        Command::DecideAbel(input) => {
            let inst = parse_abel(&read_input(&input)?)?;
            check_all(&input, &[&inst.l_hat, &inst.m_hat])?;
            let v = decide_cc_abel(&inst.l_hat, &inst.m_hat)?;
            emit(&VerdictJson::from(&v));
            Ok(verdict_exit(&v))
        }
        Command::VerifyOde {
            input,
            steps,
            r0,
            assert_center,
        } => {
            let inst = parse_abel(&read_input(&input)?)?;
            check_all(&input, &[&inst.l_hat, &inst.m_hat])?;
            if steps == 0 {
                return Err(input_error("--steps must be positive"));
            }
            let r0s = if r0.is_empty() {
                vec![0.01, -0.01, 0.05, -0.05]
            } else {
                r0
            };
            let report: OdeReport = Integrator::with_steps(steps).report(&inst, &r0s);
            let max_displacement = report.max_displacement();
            emit(&OdeOutput {
                steps,
                samples: report.samples.clone(),
                max_displacement,
            });
            let violated = assert_center.is_some_and(|tol| {
                report.samples.iter().any(|s| {
                    s.status == Status::Converged && s.displacement.is_some_and(|d| d.abs() > tol)
                })
            });
            Ok(if violated { EXIT_CENTER_VIOLATED } else { 0 })
        }
        Command::RandomInstance {
            seed,
            kind,
            deg_w,
            deg_l,
            deg_m,
        } => {
            let kind = match kind {
                Kind::Holds => InstanceKind::Holds,
                Kind::Generic => InstanceKind::Generic,
            };
            let (l, m) = random_instance(seed, kind, deg_w, deg_l, deg_m)?;
            emit(&PairJson::new(&l, &m));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // usage errors share the input-error code; --help and --version exit 0
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(EXIT_INPUT);
        }
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("abelcc: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
