use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand};

use quotient_power::oracle::ORACLE_MAX_VARS;
use quotient_power::{
    apply_restrictions, decision_function, full_report, oracle_report, render, sweep_kofn,
    to_dump, Error, ReportFormat, SwitchingFunction, SystemFile, VotingSystem, DEFAULT_MAX_VARS,
};

const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "qpower", version, about = "Voting power indices from Boolean quotients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute every power index of a system file.
    Analyze {
        spec: PathBuf,
        /// Cross-check against brute-force enumeration.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value = "plain", value_parser = parse_format)]
        format: ReportFormat,
        /// Forbid a coalition, given as comma-separated voter names. Repeatable.
        #[arg(long, value_name = "A,B", num_args = 1..)]
        forbid: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_MAX_VARS)]
        max_n: usize,
        /// Print run metadata before the report.
        #[arg(long)]
        meta: bool,
    },
    /// Compare k-out-of-n indices with their closed forms for every k <= n <= N.
    SweepKofn {
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_VARS)]
        max_n: usize,
        #[arg(long)]
        meta: bool,
    },
    /// Print the decision function (and its restricted form) as truth-table dumps.
    DumpTable {
        spec: PathBuf,
        #[arg(long, value_name = "A,B", num_args = 1..)]
        forbid: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_MAX_VARS)]
        max_n: usize,
    },
}

fn parse_format(s: &str) -> Result<ReportFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TooManyVariables { .. } => EXIT_CAP,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn load(path: &Path, forbid: &[String]) -> Result<VotingSystem, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    })?;
    let mut file = SystemFile::parse(&text).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    })?;
    for group in forbid {
        file.forbid(group.split(',').map(|s| s.trim().to_string()).collect());
    }
    file.to_system().map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    })
}

fn meta_lines(command: &str, target: &str) -> Vec<String> {
    let secs = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0, |d| d.as_secs());
    vec![
        format!("qpower {}", env!("CARGO_PKG_VERSION")),
        format!("command: {command} {target}"),
        format!("unix_time: {secs}"),
    ]
}

fn print_meta(lines: &[String], format: ReportFormat) {
    match format {
        ReportFormat::JsonLines => println!("{}", serde_json::json!({ "meta": lines })),
        _ => lines.iter().for_each(|l| println!("# {l}")),
    }
}

fn analyze(
    spec: &Path,
    oracle: bool,
    format: ReportFormat,
    forbid: &[String],
    max_n: usize,
    meta: bool,
) -> Result<(), Failure> {
    let sys = load(spec, forbid)?;
    let report = full_report(&sys, max_n)?;
    if meta {
        print_meta(&meta_lines("analyze", &spec.display().to_string()), format);
    }
    print!("{}", render(&report, format));
    if oracle {
        if sys.n() > ORACLE_MAX_VARS {
            return Err(Error::TooManyVariables {
                n: sys.n(),
                cap: ORACLE_MAX_VARS,
            }
            .into());
        }
        let reference = oracle_report(&sys)?;
        if let Some(diff) = report.first_mismatch(&reference) {
            return Err(Failure {
                code: EXIT_MISMATCH,
                message: format!("oracle mismatch (algebraic vs enumeration): {diff}"),
            });
        }
        eprintln!("oracle: all indices agree with enumeration");
    }
    Ok(())
}

fn sweep(n_max: usize, max_n: usize, meta: bool) -> Result<(), Failure> {
    if meta {
        print_meta(&meta_lines("sweep-kofn", &format!("--n-max {n_max}")), ReportFormat::Plain);
    }
    let rows = sweep_kofn(n_max, max_n)?;
    let mut bad = 0;
    for row in &rows {
        println!("{row}");
        bad += usize::from(!row.ok());
    }
    if bad > 0 {
        return Err(Failure {
            code: EXIT_MISMATCH,
            message: format!("{bad} of {} rows disagree with the closed forms", rows.len()),
        });
    }
    Ok(())
}

fn polarity_line(f: &SwitchingFunction, sys: &VotingSystem) -> Result<String, Failure> {
    let parts = (0..f.n())
        .map(|m| Ok(format!("{}={}", sys.voters()[m], f.polarity(m)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(format!("polarity: {}", parts.join(" ")))
}

fn dump_table(spec: &Path, forbid: &[String], max_n: usize) -> Result<(), Failure> {
    let sys = load(spec, forbid)?;
    let f = decision_function(&sys, max_n)?;
    println!("# f");
    print!("{}", to_dump(&f));
    println!("{}", polarity_line(&f, &sys)?);
    if !sys.forbidden().is_empty() {
        let g = apply_restrictions(&f, sys.forbidden())?.restricted;
        println!("# g");
        print!("{}", to_dump(&g));
        println!("{}", polarity_line(&g, &sys)?);
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze {
            spec,
            oracle,
            format,
            forbid,
            max_n,
            meta,
        } => analyze(spec, *oracle, *format, forbid, *max_n, *meta),
        Command::SweepKofn { n_max, max_n, meta } => sweep(*n_max, *max_n, *meta),
        Command::DumpTable {
            spec,
            forbid,
            max_n,
        } => dump_table(spec, forbid, *max_n),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
