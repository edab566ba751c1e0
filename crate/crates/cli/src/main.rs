//! `covrough`: compute covering approximations, print tables, verify
//! identities, generate random coverings.
//!
//! Exit codes: 0 success, 1 identity failure (`verify`), 2 parse or
//! validation error, 3 route/scheme mismatch.

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use covrough::verify::{verify_random, VerifyOptions};
use covrough::{
    approximate, formula_for, parse_covering, parse_set_spec, parse_sets_file, verify_identities_with, Bound,
    CharacteristicMatrices, Covering, Error, OperatorScheme, Route,
};

mod table;

const LEGACY_WARNING: &str = "WARNING: legacy route: (Π(C))^T • Π(C) ⊙ 𝒳_X computes the sixth dual lower \
approximation XL^d, not XL; the corrected formula for XL is Π(C) ⊙ 𝒳_X";

#[derive(Parser)]
#[command(name = "covrough", version, about = "Covering-based rough set approximations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Second,
    Fifth,
    Sixth,
    SixthDual,
}

impl From<SchemeArg> for OperatorScheme {
    fn from(s: SchemeArg) -> Self {
        match s {
            SchemeArg::Second => OperatorScheme::Second,
            SchemeArg::Fifth => OperatorScheme::Fifth,
            SchemeArg::Sixth => OperatorScheme::Sixth,
            SchemeArg::SixthDual => OperatorScheme::SixthDual,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundArg {
    Lower,
    Upper,
}

impl From<BoundArg> for Bound {
    fn from(b: BoundArg) -> Self {
        match b {
            BoundArg::Lower => Bound::Lower,
            BoundArg::Upper => Bound::Upper,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Oracle,
    Matrix,
    Legacy,
    /// Matrix route with the oracle result alongside (tables only)
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Approximate one set
    Compute {
        /// Covering file ('-' for standard input)
        covering: PathBuf,
        /// Comma-separated element names; empty for the empty set
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        #[arg(long, value_enum)]
        bound: BoundArg,
        #[arg(long, value_enum, default_value = "matrix")]
        route: RouteArg,
        /// Also print M_C, Γ(C) and Π(C)
        #[arg(long)]
        dump_matrices: bool,
    },
    /// Approximate every set listed in a file and print a table
    Table {
        /// Covering file ('-' for standard input)
        covering: PathBuf,
        /// One set spec per line
        sets: PathBuf,
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        #[arg(long, value_enum)]
        bound: BoundArg,
        #[arg(long, value_enum, default_value = "matrix")]
        route: RouteArg,
        #[arg(long)]
        dump_matrices: bool,
    },
    /// Check the matrix formulas and operator identities
    Verify {
        /// Covering file ('-' or omitted: standard input)
        covering: Option<PathBuf>,
        /// Verify TRIALS random coverings with N elements and M blocks instead
        #[arg(long, num_args = 3, value_names = ["N", "M", "TRIALS"], conflicts_with = "covering")]
        random: Option<Vec<usize>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Enumerate all subsets (needs at most 10 elements)
        #[arg(long)]
        exhaustive: bool,
        /// Random subsets per covering when not exhaustive
        #[arg(long, default_value_t = 256)]
        samples: usize,
    },
    /// Print a random covering
    Gen {
        n: usize,
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::RouteMismatch { .. }) {
            3
        } else {
            2
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        None => read_stdin(),
        Some(p) if p == Path::new("-") => read_stdin(),
        Some(p) => fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display()))),
    }
}

fn read_stdin() -> Result<String, Failure> {
    let mut s = String::new();
    io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| usage(format!("<stdin>: {e}")))?;
    Ok(s)
}

fn load_covering(path: Option<&Path>) -> Result<Covering, Failure> {
    let name = match path {
        Some(p) if p != Path::new("-") => p.display().to_string(),
        _ => "<stdin>".into(),
    };
    let text = read_input(path)?;
    parse_covering(&text).map_err(|e| usage(format!("{name}: {e}")))
}

fn route_of(r: RouteArg) -> Route {
    match r {
        RouteArg::Oracle => Route::Oracle,
        RouteArg::Matrix | RouteArg::Both => Route::Matrix,
        RouteArg::Legacy => Route::Legacy,
    }
}

fn dump_matrices(cm: &CharacteristicMatrices) {
    for (label, m) in [("M_C", cm.membership()), ("Γ(C)", cm.gamma()), ("Π(C)", cm.pi())] {
        println!("# {label} ({}x{})", m.rows(), m.cols());
        println!("{m}");
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Compute {
            covering,
            set,
            scheme,
            bound,
            route,
            dump_matrices: dump,
        } => {
            if route == RouteArg::Both {
                return Err(usage("--route both is only available for `table`"));
            }
            let cov = load_covering(Some(&covering))?;
            let x = parse_set_spec(cov.universe(), &set).map_err(|e| usage(format!("--set: {e}")))?;
            let route = route_of(route);
            let cm = CharacteristicMatrices::new(&cov);
            let r = approximate(&cm, &x, scheme.into(), bound.into(), route)?;
            if route == Route::Legacy {
                eprintln!("{LEGACY_WARNING}");
            }
            println!("{}", r.set);
            if let Some(v) = &r.vector {
                println!("{v}");
            }
            if dump {
                dump_matrices(&cm);
            }
            Ok(0)
        }
        Command::Table {
            covering,
            sets,
            scheme,
            bound,
            route,
            dump_matrices: dump,
        } => {
            let cov = load_covering(Some(&covering))?;
            let text = read_input(Some(&sets))?;
            let xs = parse_sets_file(cov.universe(), &text)
                .map_err(|e| usage(format!("{}: {e}", sets.display())))?;
            let (scheme, bound) = (scheme.into(), bound.into());
            formula_for(scheme, bound, route_of(route))?;
            if route == RouteArg::Legacy {
                eprintln!("{LEGACY_WARNING}");
            }
            let cm = CharacteristicMatrices::new(&cov);
            let layout = match route {
                RouteArg::Oracle => table::Layout::Oracle,
                RouteArg::Matrix => table::Layout::Matrix(Route::Matrix),
                RouteArg::Legacy => table::Layout::Matrix(Route::Legacy),
                RouteArg::Both => table::Layout::Both,
            };
            print!("{}", table::render(&cm, &xs, scheme, bound, layout)?);
            if dump {
                dump_matrices(&cm);
            }
            Ok(0)
        }
        Command::Verify {
            covering,
            random,
            seed,
            exhaustive,
            samples,
        } => {
            let opts = VerifyOptions {
                exhaustive,
                samples,
                seed,
                ..VerifyOptions::default()
            };
            let passed = if let Some(r) = random {
                let (n, m, trials) = (r[0], r[1], r[2]);
                if n == 0 || m == 0 {
                    return Err(usage("--random needs N >= 1 and M >= 1"));
                }
                let report = verify_random(n, m, trials, &opts)?;
                print!("{report}");
                report.all_passed()
            } else {
                let cov = load_covering(covering.as_deref())?;
                let report = verify_identities_with(&cov, &opts)?;
                print!("{report}");
                if !report.all_passed() {
                    eprintln!("covering:");
                    eprint!("{}", covrough::covering_to_text(&cov));
                }
                report.all_passed()
            };
            Ok(if passed { 0 } else { 1 })
        }
        Command::Gen { n, m, seed } => {
            if n == 0 || m == 0 {
                return Err(usage("gen needs N >= 1 and M >= 1"));
            }
            print!("{}", covrough::gen::covering_text(n, m, seed));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
