use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use operadkit::cobar::{cobar_differential, d_squared_check, CobarGenerator};
use operadkit::presentation::{Preset, QuadraticPresentation};
use operadkit::rewriting::{orient, MonomialOrder};
use operadkit::transfer::json::{algebra_from_json, complex_from_json, complex_to_json, structure_from_json, structure_to_json};
use operadkit::transfer::{build_retract, check_dg_as2, transfer, verify_infinity_relations, ChainComplex};
use operadkit::Error;

/// Quadratic operads with two products, their rewriting systems, the cobar
/// differential of the ∞-version, and homotopy transfer over ℚ.
#[derive(Parser)]
#[command(name = "operadkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal-form counts in arities 1..=N.
    Dims { preset: String, n: usize },
    /// Relators of the Koszul dual of a preset or a presentation file.
    Dual { presentation: String },
    /// Confluence report for the oriented relators.
    Confluence { presentation: String },
    /// The cobar differential of m[i,j].
    Differential { i: usize, j: usize },
    /// Check d² = 0 on all generators up to arity N.
    D2check { n: usize },
    /// Transfer the products of a dg algebra to its homology.
    Transfer {
        #[arg(long)]
        algebra: PathBuf,
        /// Maximum weight i+j of the transferred operations.
        #[arg(long)]
        weight: usize,
        #[arg(long)]
        out: PathBuf,
        /// Also write the homology complex.
        #[arg(long)]
        complex_out: Option<PathBuf>,
    },
    /// Check the ∞-relations of a transferred structure.
    Verify {
        #[arg(long)]
        structure: PathBuf,
        /// A complex file, or the algebra the structure was transferred from.
        #[arg(long)]
        complex: Option<PathBuf>,
        /// Maximum arity; defaults to everything the structure contains.
        #[arg(long)]
        arity: Option<usize>,
    },
}

enum Failure {
    Math(String),
    Parse(String),
    Contract(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Parse(e.to_string()),
            _ => Failure::Contract(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Contract(format!("cannot write {}: {e}", path.display())))
}

fn presentation(arg: &str) -> Result<QuadraticPresentation, Failure> {
    match Preset::parse(arg) {
        Ok(p) => Ok(QuadraticPresentation::preset(p)),
        Err(_) if Path::new(arg).is_file() => Ok(QuadraticPresentation::parse_text(&read(Path::new(arg))?)?),
        Err(e) => Err(e.into()),
    }
}

/// The complex to verify against: either given directly, or the homology
/// of an algebra's complex.
fn target_complex(path: &Path) -> Result<ChainComplex, Failure> {
    let text = read(path)?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| Failure::Parse(e.to_string()))?;
    if value.get("star").is_some() {
        let alg = algebra_from_json(&text)?;
        Ok(build_retract(alg.complex()).small().clone())
    } else {
        Ok(complex_from_json(&text)?)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Dims { preset, n } => {
            let rs = orient(&QuadraticPresentation::preset(Preset::parse(&preset)?), MonomialOrder::PathLex)?;
            let counts: Vec<String> = (1..=n).map(|k| rs.count_normal_forms(k).to_string()).collect();
            println!("{}", counts.join(" "));
        }
        Command::Dual { presentation: p } => print!("{}", presentation(&p)?.koszul_dual()),
        Command::Confluence { presentation: p } => {
            let report = orient(&presentation(&p)?, MonomialOrder::PathLex)?.confluence_report()?;
            print!("{report}");
            if !report.passed() {
                return Err(Failure::Math("not confluent".into()));
            }
        }
        Command::Differential { i, j } => println!("{}", cobar_differential(CobarGenerator::new(i, j)?)),
        Command::D2check { n } => {
            let check = d_squared_check(n)?;
            match check.witness {
                None => println!("pass: d² = 0 on {} generators up to arity {n}", check.generators_checked),
                Some(w) => return Err(Failure::Math(format!("fail: {w}"))),
            }
        }
        Command::Transfer {
            algebra,
            weight,
            out,
            complex_out,
        } => {
            let alg = algebra_from_json(&read(&algebra)?)?;
            check_dg_as2(&alg).map_err(|f| Failure::Contract(format!("{}: {f}", algebra.display())))?;
            let r = build_retract(alg.complex());
            let t = transfer(&alg, &r, weight)?;
            write(&out, &structure_to_json(&t))?;
            if let Some(path) = complex_out {
                write(&path, &complex_to_json(r.small()))?;
            }
            println!(
                "wrote {}: operations of weight at most {weight} on a complex of dimension {}",
                out.display(),
                r.small().dim()
            );
        }
        Command::Verify {
            structure,
            complex,
            arity,
        } => {
            let t = structure_from_json(&read(&structure)?)?;
            let v = match complex {
                Some(path) => target_complex(&path)?,
                None => t.complex().clone(),
            };
            let n = arity.unwrap_or(t.max_arity());
            let check = verify_infinity_relations(&t, &v, n)?;
            match check.witness {
                None => println!("pass: relations hold up to arity {n} ({} tuples)", check.tuples_checked),
                Some(w) => return Err(Failure::Math(format!("fail: {w}"))),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Math(msg)) => {
            println!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Contract(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
