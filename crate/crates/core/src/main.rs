//! Command-line front end for the supercircle calculus.
//!
//! Results go to stdout, diagnostics to stderr. Exit codes: `0` success,
//! `1` verification failure, `2` domain error (resonant weights, weight
//! mismatches), `3` parse error. With `--json-out FILE` the primary result
//! is additionally written as an exact JSON document (all rationals as
//! strings).

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use supercircle::betasolve::{solve_betas, BetaSolution};
use supercircle::cohom::{bol_operator, bol_weights, gamma_cocycle};
use supercircle::contact::{osp_basis, ContactField, Density};
use supercircle::diffop::DiffOperator;
use supercircle::error::{CalcError, ParseError};
use supercircle::expr::{parse_density_list, parse_operator, parse_superfunction};
use supercircle::json::{
    BetaTableDoc, BolDoc, CheckDoc, DensityDoc, GammaDoc, GammaValueDoc, OperatorDoc,
    SuiteReportDoc, SuiteRunDoc, SymbolDoc,
};
use supercircle::rat::{format_rat, parse_rat, rint, Rat};
use supercircle::suites::{run_suite, SuiteReport, SUITE_NAMES};
use supercircle::symcalc::{quantization_map, symbol_map, SymbolVector};

// ---------------------------------------------------------------------------
// arguments
// ---------------------------------------------------------------------------

#[derive(Parser)]
#[command(
    name = "supercircle",
    version,
    about = "Exact calculus for differential operators on the supercircle",
    after_help = "Expressions use the atoms x, xi, D, Dbar, rationals like 3/2, \
                  and the operators + - * ^ with explicit '*' for products."
)]
struct Cli {
    /// Write the result as an exact JSON document to FILE
    #[arg(long, global = true, value_name = "FILE")]
    json_out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand an operator into its symbol, one weighted part per order
    Symbolize {
        /// Source weight (rational, e.g. 1/3)
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Target weight
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Operator expression, e.g. "x*Dbar^2 + xi"
        #[arg(long, allow_hyphen_values = true)]
        op: String,
    },
    /// Rebuild the operator with a given symbol
    Quantize {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Comma-separated densities "VALUE@WEIGHT, ...", weights descending
        /// from mu - lambda in half-integer steps
        #[arg(long, allow_hyphen_values = true)]
        symbol: String,
    },
    /// Apply an operator to a density of weight lambda
    Apply {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        op: String,
        /// The density value the operator acts on
        #[arg(long, allow_hyphen_values = true)]
        to: String,
    },
    /// Bracket of two contact Hamiltonians, or of two weighted densities
    Bracket {
        /// First Hamiltonian or density value
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        /// Second Hamiltonian or density value
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        /// Weight of f (requires --mu; omit both for the contact bracket)
        #[arg(long, requires = "mu", allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Weight of g (requires --lambda)
        #[arg(long, requires = "lambda", allow_hyphen_values = true)]
        mu: Option<String>,
    },
    /// Act on an operator by the contact field of a Hamiltonian
    Action {
        /// Contact Hamiltonian expression, e.g. "x^2" or "x*xi"
        #[arg(long, allow_hyphen_values = true)]
        hamiltonian: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        op: String,
    },
    /// Conjugate operator between the dual weights
    Conjugate {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        op: String,
    },
    /// Solve for the symbol-map coefficients and classify the weights
    SolveBetas {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Largest operator order to solve for
        #[arg(long)]
        kmax: usize,
    },
    /// Values of the order-k cochain on the conformal basis
    Cocycle {
        /// Odd order k
        #[arg(long)]
        k: usize,
        /// Evaluate on this Hamiltonian only
        #[arg(long, allow_hyphen_values = true)]
        hamiltonian: Option<String>,
    },
    /// The invariant power of Dbar at its critical weights
    Bol {
        /// Odd order k
        #[arg(long)]
        k: usize,
    },
    /// Run a named verification suite (or "all")
    Check {
        #[arg(long)]
        suite: String,
    },
}

// ---------------------------------------------------------------------------
// errors and exit codes
// ---------------------------------------------------------------------------

#[derive(Debug)]
enum AppError {
    Parse(ParseError),
    Domain(CalcError),
    Usage(String),
    Io(String),
    Verification(String),
}

impl AppError {
    fn code(&self) -> u8 {
        match self {
            AppError::Verification(_) => 1,
            AppError::Domain(_) | AppError::Usage(_) | AppError::Io(_) => 2,
            AppError::Parse(_) => 3,
        }
    }
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Parse(e) => write!(f, "{e}"),
            AppError::Domain(e) => write!(f, "{e}"),
            AppError::Usage(msg) | AppError::Io(msg) | AppError::Verification(msg) => {
                write!(f, "{msg}")
            }
        }
    }
}

impl From<ParseError> for AppError {
    fn from(e: ParseError) -> Self {
        AppError::Parse(e)
    }
}

impl From<CalcError> for AppError {
    fn from(e: CalcError) -> Self {
        AppError::Domain(e)
    }
}

fn weight(text: &str) -> Result<Rat, AppError> {
    parse_rat(text).map_err(|msg| {
        AppError::Parse(ParseError::Rational { text: text.to_string(), msg })
    })
}

// ---------------------------------------------------------------------------
// entry point
// ---------------------------------------------------------------------------

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command, cli.json_out.as_deref()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.code())
        }
    }
}

fn emit_json<T: Serialize>(path: Option<&std::path::Path>, doc: &T) -> Result<(), AppError> {
    let Some(path) = path else { return Ok(()) };
    let rendered = serde_json::to_string_pretty(doc)
        .map_err(|e| AppError::Io(format!("cannot encode JSON: {e}")))?;
    std::fs::write(path, rendered + "\n")
        .map_err(|e| AppError::Io(format!("cannot write {}: {e}", path.display())))
}

fn print_operator(op: &DiffOperator) {
    println!("{op}");
    println!(
        "weights: lambda = {}, mu = {}",
        format_rat(op.source_weight()),
        format_rat(op.target_weight())
    );
}

fn run(command: &Command, json_out: Option<&std::path::Path>) -> Result<(), AppError> {
    match command {
        Command::Symbolize { lambda, mu, op } => {
            let operator = parse_operator(op, &weight(lambda)?, &weight(mu)?)?;
            let symbol = symbol_map(&operator)?;
            for j in (0..symbol.parts().len()).rev() {
                let part = symbol.part(j);
                println!(
                    "part {j} (weight {}): {}",
                    format_rat(part.weight()),
                    part.value()
                );
            }
            if symbol.is_zero() {
                println!("0");
            }
            emit_json(json_out, &SymbolDoc::from(&symbol))
        }
        Command::Quantize { lambda, mu, symbol } => {
            let densities = parse_density_list(symbol)?;
            let symbol = SymbolVector::from_densities(&densities, weight(lambda)?, weight(mu)?)?;
            let operator = quantization_map(&symbol)?;
            print_operator(&operator);
            emit_json(json_out, &OperatorDoc::from(&operator))
        }
        Command::Apply { lambda, mu, op, to } => {
            let operator = parse_operator(op, &weight(lambda)?, &weight(mu)?)?;
            let argument = Density::new(parse_superfunction(to)?, weight(lambda)?);
            let result = operator.apply(&argument)?;
            println!("{result}");
            emit_json(json_out, &DensityDoc::from(&result))
        }
        Command::Bracket { f, g, lambda, mu } => {
            let fv = parse_superfunction(f)?;
            let gv = parse_superfunction(g)?;
            let result = match (lambda, mu) {
                (Some(lambda), Some(mu)) => Density::new(fv, weight(lambda)?)
                    .poisson_bracket(&Density::new(gv, weight(mu)?)),
                _ => {
                    // Hamiltonians are weight -1 densities; their Poisson
                    // bracket is the contact bracket
                    let value =
                        ContactField::new(fv).bracket(&ContactField::new(gv)).hamiltonian().clone();
                    Density::new(value, rint(-1))
                }
            };
            println!("{result}");
            emit_json(json_out, &DensityDoc::from(&result))
        }
        Command::Action { hamiltonian, lambda, mu, op } => {
            let operator = parse_operator(op, &weight(lambda)?, &weight(mu)?)?;
            let field = ContactField::new(parse_superfunction(hamiltonian)?);
            let moved = operator.lie_action(&field);
            print_operator(&moved);
            emit_json(json_out, &OperatorDoc::from(&moved))
        }
        Command::Conjugate { lambda, mu, op } => {
            let operator = parse_operator(op, &weight(lambda)?, &weight(mu)?)?;
            let star = operator.conjugate();
            print_operator(&star);
            emit_json(json_out, &OperatorDoc::from(&star))
        }
        Command::SolveBetas { lambda, mu, kmax } => {
            let (lambda, mu) = (weight(lambda)?, weight(mu)?);
            run_solve_betas(&lambda, &mu, *kmax, json_out)
        }
        Command::Cocycle { k, hamiltonian } => {
            if k % 2 == 0 {
                return Err(AppError::Usage(format!("--k must be odd (got {k})")));
            }
            let lambda = bol_weights(*k).0;
            let fields = match hamiltonian {
                Some(text) => vec![ContactField::new(parse_superfunction(text)?)],
                None => osp_basis(),
            };
            let mut values = Vec::new();
            for h in &fields {
                let gamma = gamma_cocycle(*k, h, &lambda);
                println!("gamma_{k}(X_{{{}}}) = {gamma}", h.hamiltonian());
                values.push(GammaValueDoc {
                    hamiltonian: h.hamiltonian().to_string(),
                    operator: OperatorDoc::from(&gamma),
                });
            }
            emit_json(json_out, &GammaDoc { k: *k, values })
        }
        Command::Bol { k } => {
            let operator = bol_operator(*k).map_err(|e| match e {
                CalcError::EvenOrder { order } => {
                    AppError::Usage(format!("--k must be odd (got {order})"))
                }
                other => AppError::Domain(other),
            })?;
            print_operator(&operator);
            let mut invariance = Vec::new();
            let mut all_invariant = true;
            for h in osp_basis() {
                let vanishes = operator.lie_action(&h).is_zero();
                all_invariant &= vanishes;
                println!(
                    "action of X_{{{}}}: {}",
                    h.hamiltonian(),
                    if vanishes { "0" } else { "nonzero" }
                );
                invariance.push(CheckDoc {
                    label: h.hamiltonian().to_string(),
                    passed: vanishes,
                });
            }
            emit_json(json_out, &BolDoc { k: *k, operator: OperatorDoc::from(&operator), invariance })?;
            if all_invariant {
                Ok(())
            } else {
                Err(AppError::Verification(
                    "the operator is not invariant under the conformal basis".into(),
                ))
            }
        }
        Command::Check { suite } => run_check(suite, json_out),
    }
}

// ---------------------------------------------------------------------------
// solve-betas and check
// ---------------------------------------------------------------------------

fn print_table(table: &[Vec<Rat>]) {
    for (k, row) in table.iter().enumerate() {
        let rendered: Vec<String> = row.iter().map(format_rat).collect();
        println!("beta[{k}] = {}", rendered.join(", "));
    }
}

fn run_solve_betas(
    lambda: &Rat,
    mu: &Rat,
    kmax: usize,
    json_out: Option<&std::path::Path>,
) -> Result<(), AppError> {
    let mut doc = BetaTableDoc {
        lambda: format_rat(lambda),
        mu: format_rat(mu),
        classification: String::new(),
        dimension: None,
        blocked_at_order: None,
        table: None,
    };
    match solve_betas(lambda, mu, kmax) {
        Ok(BetaSolution::Unique { table }) => {
            println!("Unique");
            print_table(&table);
            doc.classification = "Unique".into();
            doc.table =
                Some(table.iter().map(|row| row.iter().map(format_rat).collect()).collect());
        }
        Ok(BetaSolution::Family { dimension, canonical }) => {
            println!("Family(dim = {dimension})");
            println!("canonical member (free coefficients set to zero):");
            print_table(&canonical);
            doc.classification = "Family".into();
            doc.dimension = Some(dimension);
            doc.table = Some(
                canonical.iter().map(|row| row.iter().map(format_rat).collect()).collect(),
            );
        }
        Err(CalcError::NoSymbolMap { order }) => {
            println!("NoSymbolMap(blocked at order {order})");
            doc.classification = "NoSymbolMap".into();
            doc.blocked_at_order = Some(order);
        }
        Err(other) => return Err(AppError::Domain(other)),
    }
    emit_json(json_out, &doc)
}

fn print_report(report: &SuiteReport) {
    for check in &report.checks {
        println!("  {} {}", if check.passed { "ok " } else { "FAIL" }, check.label);
    }
    println!("suite {}: {}", report.name, if report.passed() { "PASS" } else { "FAIL" });
}

fn run_check(suite: &str, json_out: Option<&std::path::Path>) -> Result<(), AppError> {
    let reports: Vec<SuiteReport> = if suite == "all" {
        // suites are pure, so fan them out across threads
        std::thread::scope(|scope| {
            let handles: Vec<_> = SUITE_NAMES
                .iter()
                .map(|name| scope.spawn(move || run_suite(name).expect("known suite")))
                .collect();
            handles.into_iter().map(|h| h.join().expect("suite does not panic")).collect()
        })
    } else {
        match run_suite(suite) {
            Some(report) => vec![report],
            None => {
                return Err(AppError::Usage(format!(
                    "unknown suite {suite:?}; available: {}, all",
                    SUITE_NAMES.join(", ")
                )))
            }
        }
    };

    for report in &reports {
        print_report(report);
    }
    let passed = reports.iter().all(SuiteReport::passed);
    let doc = SuiteRunDoc {
        passed,
        suites: reports.iter().map(SuiteReportDoc::from).collect(),
    };
    emit_json(json_out, &doc)?;
    if passed {
        Ok(())
    } else {
        Err(AppError::Verification("one or more checks failed".into()))
    }
}
