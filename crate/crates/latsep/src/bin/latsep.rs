use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use latsep::completions::ShapeBound;
use latsep::error::{Error, Result};
use latsep::gallery::{entry, gallery, Subject};
use latsep::matrix::verify_matrix;
use latsep::run::{load_subject, run_entry, run_subject, Format, EXIT_INPUT, EXIT_MISMATCH};

// stdout writes that ignore a closed pipe, e.g. `latsep list | head -1`
macro_rules! println {
    ($($t:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! print {
    ($($t:tt)*) => {{
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(name = "latsep", version, about = "Completions and separation axioms of distributive lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List gallery entries.
    List,
    /// Show a gallery entry and its expected verdicts.
    Describe { id: String },
    /// Run checks on a gallery entry or a JSON file.
    Run {
        /// Gallery entry id.
        #[arg(required_unless_present = "file", conflicts_with = "file")]
        id: Option<String>,
        /// Lattice or space JSON file.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Comma separated check names, or `all`.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        checks: Vec<String>,
        /// Shape bound (1 to 4). Defaults to LATSEP_BOUND, then 2.
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Compare the summary tables over all small distributive lattices.
    VerifyMatrix {
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        #[arg(long, default_value = "md")]
        format: String,
    },
}

fn bound(flag: Option<usize>) -> Result<ShapeBound> {
    match flag {
        Some(k) => ShapeBound::new(k),
        None => match std::env::var("LATSEP_BOUND") {
            Ok(v) => {
                let k = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::Precondition(format!("LATSEP_BOUND={v:?} is not a number")))?;
                ShapeBound::new(k)
            }
            Err(_) => Ok(ShapeBound::default()),
        },
    }
}

fn execute(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::List => {
            for e in gallery() {
                let kind = match e.subject {
                    Subject::Space(_) => "space",
                    Subject::Lattice(_) => "lattice",
                };
                println!("{:<12} {:<8} {}", e.id, kind, e.description);
            }
            Ok(0)
        }
        Command::Describe { id } => {
            let e = entry(&id)?;
            println!("{}: {}", e.id, e.description);
            match &e.subject {
                Subject::Space(s) => println!("{}", serde_json::to_string_pretty(&s.to_json())?),
                Subject::Lattice(l) => println!("{}", serde_json::to_string_pretty(&l.to_json())?),
            }
            for x in &e.expected {
                println!("  {:<14} {:<22} {}", x.check, x.verdict.to_string(), x.anchor);
            }
            Ok(0)
        }
        Command::Run {
            id,
            file,
            checks,
            bound: k,
            format,
        } => {
            let format: Format = format.parse()?;
            let bound = bound(k)?;
            let result = match (id, file) {
                (Some(id), _) => run_entry(&entry(&id)?, &checks, bound)?,
                (None, Some(path)) => {
                    let subject = load_subject(&path)?;
                    run_subject(&path.display().to_string(), &subject, &checks, bound)?
                }
                (None, None) => unreachable!("clap requires an id or a file"),
            };
            print!("{}", result.render(format));
            for o in result.mismatches() {
                eprintln!(
                    "expected {} for {}, got {}",
                    o.expected.expect("mismatches have expectations"),
                    o.check,
                    o.report.verdict
                );
            }
            let code = result.exit_code();
            if code == 2 {
                for o in result.outcomes.iter().filter(|o| o.expected.is_some()) {
                    if o.report.verdict == latsep::report::Verdict::Unknown {
                        eprintln!("unknown verdict on expected check {}", o.check);
                    }
                }
            }
            Ok(code)
        }
        Command::VerifyMatrix { max_size, format } => {
            let m = verify_matrix(max_size)?;
            match format.parse()? {
                Format::Json => println!("{}", serde_json::to_string_pretty(&m)?),
                _ => print!("{}", m.to_markdown()),
            }
            Ok(if m.disagreements.is_empty() { 0 } else { EXIT_MISMATCH })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { 0 });
        }
    };
    match execute(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
