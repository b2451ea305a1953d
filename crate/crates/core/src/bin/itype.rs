use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use itype::check::{check_many, CheckConfig, Violation};
use itype::enumerate::enumerate_solutions;
use itype::error::Error;
use itype::group::FiniteGroupTable;
use itype::invariants::{nilpotency_class, serialize_class};
use itype::io::{read_solution, write_solution};
use itype::report::{self, DEFAULT_BALL_RADIUS, DEFAULT_FROZEN_DEPTH};
use itype::{Execution, YbeSolution};

#[derive(Parser)]
#[command(
    name = "itype",
    version,
    about = "Garside structure of I-type monoids and their finite quotients"
)]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check the solution axioms.
    Validate {
        file: PathBuf,
        /// Exit 0 even if an axiom fails.
        #[arg(long)]
        allow_invalid: bool,
    },
    /// Full structural analysis of the monoid and its quotient group.
    Analyze {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BALL_RADIUS)]
        ball: usize,
    },
    /// List the simple elements.
    Simples { file: PathBuf },
    /// Invariants of the quotient group.
    Group { file: PathBuf },
    /// Write every solution of size n to a directory.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Keep isomorphic copies.
        #[arg(long)]
        raw: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the invariant suite on a solution file or a directory of them.
    Check {
        path: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BALL_RADIUS)]
        ball: usize,
        #[arg(long, default_value_t = DEFAULT_FROZEN_DEPTH)]
        depth: u32,
    },
}

enum Failure {
    Input(String),
    Violated(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EquivalenceViolated { .. } => Failure::Violated(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn load(path: &Path) -> Result<YbeSolution, Failure> {
    read_solution(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_valid(path: &Path) -> Result<YbeSolution, Failure> {
    let sol = load(path)?;
    let report = sol.validate();
    if !report.is_valid() {
        return Err(Failure::Input(format!(
            "{}: not a solution: {}",
            path.display(),
            report.failures().join("; ")
        )));
    }
    Ok(sol)
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce(&T) -> String) {
    match format {
        Format::Json => print!("{}", report::to_json(value)),
        Format::Text => print!("{}", text(value)),
    }
}

#[derive(Serialize)]
struct IndexEntry {
    file: String,
    sha256: String,
    property_c: bool,
    order: usize,
    #[serde(serialize_with = "serialize_class")]
    nilpotency_class: Option<usize>,
}

#[derive(Serialize)]
struct Index {
    n: usize,
    up_to_iso: bool,
    count: usize,
    solutions: Vec<IndexEntry>,
}

fn enumerate(n: usize, raw: bool, out: &Path, format: Format) -> Result<(), Failure> {
    let census = enumerate_solutions(n, !raw)?;
    fs::create_dir_all(out).map_err(|e| Failure::Input(format!("{}: {e}", out.display())))?;
    let mut entries = Vec::with_capacity(census.len());
    for (i, sol) in census.solutions.iter().enumerate() {
        let name = format!("sol-{:04}.json", i + 1);
        let text = write_solution(sol);
        fs::write(out.join(&name), &text).map_err(|e| Failure::Input(format!("{name}: {e}")))?;
        let w = FiniteGroupTable::of_solution(sol)?;
        entries.push(IndexEntry {
            file: name,
            sha256: hex::encode(Sha256::digest(text.as_bytes())),
            property_c: sol.property_c()?,
            order: w.order(),
            nilpotency_class: nilpotency_class(&w),
        });
    }
    let index = Index {
        n,
        up_to_iso: !raw,
        count: entries.len(),
        solutions: entries,
    };
    fs::write(out.join("index.json"), report::to_json(&index))
        .map_err(|e| Failure::Input(format!("index.json: {e}")))?;
    emit(format, &index, |ix| {
        format!(
            "{} solutions of size {} written to {}\n",
            ix.count,
            ix.n,
            out.display()
        )
    });
    Ok(())
}

#[derive(Serialize)]
struct FileViolation {
    file: String,
    check: &'static str,
    detail: String,
}

#[derive(Serialize)]
struct CheckReport {
    checked: usize,
    violations: Vec<FileViolation>,
}

fn solution_files(path: &Path) -> Result<Vec<PathBuf>, Failure> {
    if !path.is_dir() {
        return Ok(vec![path.to_path_buf()]);
    }
    let mut files: Vec<PathBuf> = fs::read_dir(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            p.extension().is_some_and(|x| x == "json")
                && p.file_name().is_some_and(|f| f != "index.json")
        })
        .collect();
    files.sort();
    Ok(files)
}

fn check(path: &Path, cfg: CheckConfig, format: Format) -> Result<bool, Failure> {
    let cfg = cfg.validated()?;
    let files = solution_files(path)?;
    let sols = files
        .iter()
        .map(|f| load(f))
        .collect::<Result<Vec<_>, _>>()?;
    let results = check_many(&sols, &cfg, Execution::default());
    let mut violations = Vec::new();
    for (file, vs) in files.iter().zip(results) {
        for Violation { check, detail } in vs {
            violations.push(FileViolation {
                file: file.display().to_string(),
                check,
                detail,
            });
        }
    }
    let report = CheckReport {
        checked: files.len(),
        violations,
    };
    emit(format, &report, |r| {
        let mut s = format!(
            "checked {} solution(s), {} violation(s)\n",
            r.checked,
            r.violations.len()
        );
        for v in &r.violations {
            s.push_str(&format!("  {}: {}: {}\n", v.file, v.check, v.detail));
        }
        s
    });
    Ok(report.violations.is_empty())
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Validate {
            file,
            allow_invalid,
        } => {
            let sol = load(&file)?;
            let r = sol.validate();
            emit(format, &r, report::validation_text);
            if !r.is_valid() && !allow_invalid {
                return Err(Failure::Input(format!(
                    "{}: not a solution: {}",
                    file.display(),
                    r.failures().join("; ")
                )));
            }
        }
        Command::Analyze { file, ball } => {
            let sol = load_valid(&file)?;
            let r = report::analyze(&sol, ball)?;
            emit(format, &r, report::analysis_text);
        }
        Command::Simples { file } => {
            let sol = load_valid(&file)?;
            emit(format, &report::simples_report(&sol)?, report::simples_text);
        }
        Command::Group { file } => {
            let sol = load_valid(&file)?;
            emit(format, &report::group_report(&sol)?, report::group_text);
        }
        Command::Enumerate { n, raw, out } => enumerate(n, raw, &out, format)?,
        Command::Check { path, ball, depth } => {
            let cfg = CheckConfig {
                ball_radius: ball,
                frozen_depth: depth,
                ..CheckConfig::default()
            };
            return check(&path, cfg, format);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Violated(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
