//! Command-line front end. [`run`] is the whole program minus process exit.
//!
//! Exit status: 0 on success or when every check passes, 1 when a check fails
//! or a theorem violation is detected, 2 on usage or input errors.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::error::Error;
use crate::perm::Permutation;
use crate::pipedream::PipeDream;
use crate::poset::{chute_path, ChutePoset};
use crate::schubert::{schubert_from_pipedreams, schubert_oracle};
use crate::verify::{verify, Budget, Check};

/// Largest degree for which `info` enumerates `PD(w)`.
const INFO_MAX_N: usize = 8;

#[derive(Parser, Debug)]
#[command(
    name = "chutelat",
    version,
    about = "Chute move lattices of reduced pipe dreams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the reduced pipe dreams of a permutation.
    Enumerate {
        w: Permutation,
        /// Print only the number of dreams.
        #[arg(long, conflicts_with = "json")]
        count: bool,
        /// Print the dreams as a JSON array.
        #[arg(long)]
        json: bool,
        #[arg(long, hide = true)]
        seed_check: bool,
    },
    /// Write the Hasse diagram in DOT format.
    Hasse {
        w: Permutation,
        #[arg(long)]
        dot: PathBuf,
        /// Attach each dream as a JSON tooltip.
        #[arg(long)]
        tooltips: bool,
    },
    /// Run the structural checks and print a JSON report.
    Verify {
        w: Permutation,
        /// Comma-separated subset of: isomorphism, lattice, sd, polygonal, transpose, triforce.
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<Check>>,
        /// Per-check time budget in milliseconds.
        #[arg(long)]
        budget_ms: Option<u64>,
        /// Report 0 ms for every check so output is byte-stable.
        #[arg(long)]
        no_timing: bool,
    },
    /// Print the generating polynomial of the dreams.
    Schubert {
        w: Permutation,
        /// Compare with the divided-difference computation.
        #[arg(long)]
        oracle_check: bool,
    },
    /// Chute path between two dreams of the same permutation.
    Path {
        w: Permutation,
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
    },
    /// Draw a dream.
    Render {
        dream: PathBuf,
        /// ASCII picture instead of JSON.
        #[arg(long)]
        ascii: bool,
    },
    /// Basic statistics of a permutation.
    Info { w: Permutation },
}

enum Failure {
    Usage(String),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TheoremViolation(_) => Failure::Violation(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read_dream(path: &Path) -> Result<PipeDream, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Violation(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Enumerate {
            w,
            count,
            json,
            seed_check,
        } => {
            if seed_check {
                let seed = PipeDream::seed(&w);
                write!(out, "{}", seed.render_ascii())?;
                let wiring = seed.wiring();
                writeln!(
                    out,
                    "seed wiring: {wiring} ({})",
                    if wiring == w { "ok" } else { "MISMATCH" }
                )?;
                return Ok(if wiring == w { 0 } else { 1 });
            }
            let poset = ChutePoset::enumerate(&w)?;
            if count {
                writeln!(out, "{}", poset.len())?;
            } else if json {
                writeln!(out, "{}", to_json(&poset.elements()))?;
            } else {
                for (k, p) in poset.elements().iter().enumerate() {
                    writeln!(out, "{k}\t{}", p.row_strings().join(" "))?;
                }
            }
        }
        Command::Hasse { w, dot, tooltips } => {
            let poset = ChutePoset::enumerate(&w)?;
            std::fs::write(&dot, poset.to_dot(tooltips))
                .map_err(|e| Failure::Usage(format!("{}: {e}", dot.display())))?;
        }
        Command::Verify {
            w,
            checks,
            budget_ms,
            no_timing,
        } => {
            let budget = match budget_ms {
                Some(ms) => Budget::new(Duration::from_millis(ms)),
                None => Budget::from_env(),
            };
            let checks = checks.unwrap_or_else(|| Check::ALL.to_vec());
            let mut report = verify(&w, &checks, &budget)?;
            if no_timing {
                report = report.without_timing();
            }
            writeln!(out, "{}", to_json(&report))?;
            return Ok(if report.any_failed() { 1 } else { 0 });
        }
        Command::Schubert { w, oracle_check } => {
            let poly = schubert_from_pipedreams(&w)?;
            writeln!(out, "{poly}")?;
            if oracle_check {
                let oracle = schubert_oracle(&w)?;
                if oracle == poly {
                    writeln!(out, "oracle: equal")?;
                } else {
                    writeln!(out, "oracle: differs")?;
                    writeln!(out, "{oracle}")?;
                    return Ok(1);
                }
            }
        }
        Command::Path { w, from, to } => {
            let (a, b) = (read_dream(&from)?, read_dream(&to)?);
            let poset = ChutePoset::enumerate(&w)?;
            let ia = poset
                .index_of(&a)
                .map_err(|_| Failure::Usage(format!("{} is not in PD({w})", from.display())))?;
            let ib = poset
                .index_of(&b)
                .map_err(|_| Failure::Usage(format!("{} is not in PD({w})", to.display())))?;
            match chute_path(poset.theta(ia), poset.theta(ib), &w) {
                Err(Error::Incomparable) => writeln!(out, "incomparable")?,
                Err(e) => return Err(e.into()),
                Ok(steps) => {
                    let moves = poset.realize_path(ia, &steps)?;
                    let doc: Vec<_> = steps
                        .iter()
                        .zip(&moves)
                        .map(|(s, (_, m))| json!({ "step": s, "move": m }))
                        .collect();
                    writeln!(out, "{}", to_json(&doc))?;
                }
            }
        }
        Command::Render { dream, ascii } => {
            let p = read_dream(&dream)?;
            if ascii {
                write!(out, "{}", p.render_ascii())?;
            } else {
                let doc = json!({
                    "n": p.n(),
                    "rows": p.row_strings(),
                    "wiring": p.wiring(),
                    "reduced": p.is_reduced(),
                });
                writeln!(out, "{}", to_json(&doc))?;
            }
        }
        Command::Info { w } => {
            writeln!(out, "n: {}", w.n())?;
            writeln!(out, "inversions: {}", w.length())?;
            let code: Vec<String> = w.lehmer_code().iter().map(ToString::to_string).collect();
            writeln!(out, "code: {}", code.join(" "))?;
            if w.n() <= INFO_MAX_N {
                writeln!(out, "pipe dreams: {}", ChutePoset::enumerate(&w)?.len())?;
            } else {
                writeln!(out, "pipe dreams: not enumerated for n > {INFO_MAX_N}")?;
            }
        }
    }
    Ok(0)
}
