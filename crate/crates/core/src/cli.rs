//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on a
//! usage or parse error. Results go to `out`, diagnostics to `err`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::char_classes::chern_of_projectivization;
use crate::diophantine::{
    birational_elimination, solve_est, solve_est2, solve_lemma_chern, SolutionSet,
};
use crate::expr::parse;
use crate::invariants::{describe_verdict, diffeo_classify, ring_iso_exists};
use crate::presentations::SpaceSpec;
use crate::replay::{
    chern_report, emit_report, replay_main, replay_notatallmain, replay_notsomain, ReplayReport,
    ReportFormat,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "chowring",
    version,
    about = "Intersection theory on projective bundles over curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression in a ring, e.g. "(6*s+5*f)^4".
    Eval {
        /// `curve:g=..,k=..[,r=..]` or `p3:c1=..,c2=..`
        #[arg(long)]
        ring: SpaceSpec,
        /// Print the degree of the top-degree part instead of the class.
        #[arg(long)]
        integrate: bool,
        expr: String,
    },
    /// Chern and Pontrjagin classes and numbers of P(E) over a curve.
    Chern {
        #[arg(long)]
        ring: SpaceSpec,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two bundles P(E1), P(E2) are (orientedly) diffeomorphic.
    Classify {
        #[arg(long)]
        g1: u32,
        #[arg(long, allow_hyphen_values = true)]
        k1: i64,
        #[arg(long)]
        g2: u32,
        #[arg(long, allow_hyphen_values = true)]
        k2: i64,
    },
    /// Run one of the integer case analyses.
    Solve {
        system: System,
        #[arg(long, default_value_t = 2)]
        g: u32,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k: i64,
        #[arg(long)]
        json: bool,
    },
    /// Replay one of the three arguments as a step-by-step report.
    Replay {
        theorem: Theorem,
        #[arg(long, default_value_t = 2)]
        g: u32,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k: i64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "text")]
        format: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum System {
    Est,
    Chern,
    Birational,
    Est2,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Theorem {
    Main,
    Notsomain,
    Notatallmain,
}

enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn status(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Eval {
            ring,
            integrate,
            expr,
        } => {
            let ring = ring.ring().map_err(usage)?;
            let class = parse(&expr).and_then(|e| e.eval(&ring)).map_err(usage)?;
            if integrate {
                writeln!(out, "{}", class.integrate().map_err(usage)?)?;
            } else {
                writeln!(out, "{class}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Chern { ring, json } => {
            let SpaceSpec::CurveBundle { g, k, r: 4 } = ring else {
                return Err(Failure::Usage(format!(
                    "chern needs a rank-4 curve bundle, got {ring}"
                )));
            };
            let report = chern_report(g, k);
            if json {
                out.write_all(&emit_report(&report, ReportFormat::Json))?;
            } else {
                let d = chern_of_projectivization(g, k);
                for (name, class) in [
                    ("c1", &d.c1),
                    ("c2", &d.c2),
                    ("c3", &d.c3),
                    ("c4", &d.c4),
                    ("p1", &d.p1),
                    ("p2", &d.p2),
                ] {
                    writeln!(out, "{name} = {class}")?;
                }
                for (name, value) in &d.numbers {
                    writeln!(out, "∫{name} = {value}")?;
                }
                writeln!(out, "chi(O) = {}", d.chi)?;
            }
            Ok(status(report.passed()))
        }
        Command::Classify { g1, k1, g2, k2 } => {
            let verdict = diffeo_classify(g1, k1, g2, k2);
            writeln!(out, "{}", describe_verdict(g1, g2, verdict))?;
            match ring_iso_exists(g1, k1, g2, k2) {
                Some(w) => writeln!(out, "ring isomorphism: {w}")?,
                None => writeln!(out, "ring isomorphism: none")?,
            }
            Ok(EXIT_OK)
        }
        Command::Solve { system, g, k, json } => {
            let set = match system {
                System::Est => solve_est(g, k).map_err(usage)?,
                System::Chern => solve_lemma_chern(k).map_err(usage)?,
                System::Est2 => solve_est2(k),
                System::Birational => {
                    let elim = birational_elimination(k).map_err(usage)?;
                    if json {
                        serde_json::to_writer_pretty(&mut *out, &elim).map_err(usage)?;
                        writeln!(out)?;
                    } else {
                        write_set(out, "candidates", &elim.candidates)?;
                        for v in &elim.verdicts {
                            writeln!(
                                out,
                                "  {:?}: lambda^4 = {}, E = {}, {}",
                                v.tuple, v.lambda_fourth, v.exceptional, v.rejected_by
                            )?;
                        }
                        write_set(out, "admissible", &elim.admissible)?;
                    }
                    return Ok(status(
                        elim.candidates.checks_hold() && elim.admissible.checks_hold(),
                    ));
                }
            };
            if json {
                serde_json::to_writer_pretty(&mut *out, &set).map_err(usage)?;
                writeln!(out)?;
            } else {
                write_set(out, "solutions", &set)?;
            }
            Ok(status(set.checks_hold()))
        }
        Command::Replay {
            theorem,
            g,
            k,
            out: path,
            format,
        } => {
            let format: ReportFormat = format.parse().map_err(usage)?;
            let report: ReplayReport = match theorem {
                Theorem::Main => replay_main(g, k).map_err(usage)?,
                Theorem::Notsomain => replay_notsomain(k).map_err(usage)?,
                Theorem::Notatallmain => replay_notatallmain(k),
            };
            let bytes = emit_report(&report, format);
            match path {
                Some(p) => std::fs::write(p, bytes)?,
                None => out.write_all(&bytes)?,
            }
            Ok(status(report.passed()))
        }
    }
}

fn write_set(out: &mut dyn Write, label: &str, set: &SolutionSet) -> std::io::Result<()> {
    let vars = set.variables.join(",");
    let items: Vec<String> = set
        .solutions
        .iter()
        .map(|t| {
            format!(
                "({})",
                t.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
            )
        })
        .collect();
    writeln!(out, "{label} ({vars}): {{{}}}", items.join(", "))?;
    for fam in &set.families {
        write!(
            out,
            "family: a = {}, b ≡ {} mod {}",
            fam.a, fam.b_residue, fam.b_modulus
        )?;
        match &fam.flag {
            Some(flag) => writeln!(out, " [flagged: {flag}]")?,
            None => writeln!(out)?,
        }
    }
    writeln!(out, "bounds: {}", set.bounds)?;
    for f in &set.filters_applied {
        writeln!(
            out,
            "filter: {} -> {} left ({})",
            f.name, f.surviving, f.justification
        )?;
    }
    for e in &set.eliminated {
        writeln!(out, "eliminated: {:?} by {}", e.tuple, e.filter)?;
    }
    for c in &set.checks {
        writeln!(out, "check: {} = {}", c.name, c.holds)?;
    }
    Ok(())
}
