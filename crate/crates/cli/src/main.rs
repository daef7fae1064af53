//! Command-line front end: reads an algebra document, computes, prints.

mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quatcohom::algebra::validate_hypercomplex;
use quatcohom::cohomology::compute_table;
use quatcohom::io::parse_spec;
use quatcohom::metric::{hkt_existence, sg_existence, SearchBounds};
use quatcohom::report::build_report;
use quatcohom::sl::{jbar_decomposition, pairing_matrix};
use quatcohom::suite::run_property_suite;
use quatcohom::{Bindings, Error, ErrorClass, Rational, Session};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "quatcohom", version, about = "Quaternionic cohomology of nilpotent hypercomplex Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Lie algebra and the hypercomplex structure.
    Validate(Common),
    /// Cohomology tables, decomposition, verdicts and the property suite.
    Report(Common),
    /// HKT and strongly Gauduchon existence (8-dimensional algebras).
    Hkt {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = SearchBounds::default().denominator)]
        search_denominator_bound: u32,
        #[arg(long, default_value_t = SearchBounds::default().coefficient)]
        search_coeff_bound: u32,
    },
    /// Splitting of H^{2,0} by J̄ (and by ∗ when n = 2).
    Decompose(Common),
    /// Duality pairing between Bott-Chern and Aeppli cohomology.
    Pairing {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        p: usize,
    },
    /// Run every structural check; exits 3 if any fails.
    Suite(Common),
}

#[derive(Args)]
struct Common {
    /// Algebra document (JSON).
    spec: PathBuf,
    /// Parameter binding `name=p/q`; repeatable.
    #[arg(long = "param", value_name = "NAME=P/Q")]
    params: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

/// An error with its exit code already decided.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e.class() {
            ErrorClass::Validation => 1,
            ErrorClass::Parse => 2,
            ErrorClass::TheoremViolation => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

fn parse_bindings(params: &[String]) -> Result<Bindings, Failure> {
    let mut out = Bindings::new();
    for p in params {
        let bad = |why: &str| Failure { code: 2, message: format!("bad --param `{p}`: {why}") };
        let (name, value) = p.split_once('=').ok_or_else(|| bad("expected name=p/q"))?;
        let value: Rational = value.trim().parse().map_err(|_| bad("value must be a rational p/q"))?;
        if out.insert(name.trim().to_string(), value).is_some() {
            return Err(bad("bound twice"));
        }
    }
    Ok(out)
}

fn load(common: &Common) -> Result<Session, Failure> {
    let text = std::fs::read_to_string(&common.spec)
        .map_err(|e| Failure { code: 2, message: format!("cannot read {}: {e}", common.spec.display()) })?;
    let spec = parse_spec(&text)?;
    Ok(Session::new(&spec, &parse_bindings(&common.params)?)?)
}

fn emit<T: Serialize>(format: Format, value: &T, table: impl FnOnce(&T) -> String) {
    let text = match format {
        Format::Json => serde_json::to_string_pretty(value).expect("serializable") + "\n",
        Format::Table => table(value),
    };
    // a closed pipe (`| head`) is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Validate(common) => {
            let text = std::fs::read_to_string(&common.spec)
                .map_err(|e| Failure { code: 2, message: format!("cannot read {}: {e}", common.spec.display()) })?;
            let alg = parse_spec(&text)?.instantiate(&parse_bindings(&common.params)?)?;
            let report = validate_hypercomplex(&alg);
            emit(common.format, &report, render::validation);
            report.check()?;
        }
        Command::Report(common) => {
            let s = load(&common)?;
            let doc = build_report(&s, &SearchBounds::default())?;
            emit(common.format, &doc, render::report);
        }
        Command::Hkt { common, search_denominator_bound, search_coeff_bound } => {
            let s = load(&common)?;
            let bounds =
                SearchBounds { denominator: search_denominator_bound, coefficient: search_coeff_bound, ..Default::default() };
            let table = compute_table(&s.double_complex())?;
            let verdicts = [hkt_existence(&s, &table, &bounds)?, sg_existence(&s, &table, &bounds)?];
            emit(common.format, &verdicts, |v| render::existence(v));
        }
        Command::Decompose(common) => {
            let s = load(&common)?;
            emit(common.format, &jbar_decomposition(&s)?, render::decomposition);
        }
        Command::Pairing { common, p } => {
            let s = load(&common)?;
            emit(common.format, &pairing_matrix(&s, p)?, render::pairing);
        }
        Command::Suite(common) => {
            let s = load(&common)?;
            let suite = run_property_suite(&s, &SearchBounds::default());
            emit(common.format, &suite, render::suite);
            if !suite.passed() {
                return Err(Failure { code: 3, message: format!("{} check(s) failed", suite.failures().count()) });
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
