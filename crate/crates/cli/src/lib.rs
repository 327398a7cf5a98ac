//! Batch front-end for `subclone`: file formats, JSON reports and the `subclone` command.
//!
//! Exit codes: 0 decided and every certificate verified, 1 decided but some certificate failed
//! or is inconclusive (or an oracle check disagreed), 2 bad input.

pub mod construct;
pub mod format;
pub mod input;
pub mod report;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use subclone::classify::{decide, RelationClass};
use subclone::oracle::suites::Suite;

use input::{load_theta, read, tag, InputError};
use report::{
    classify_report, to_json, ClassifyReport, InputSummary, OracleReport, PartitionJson, RhoSummary, Status, SuiteJson,
    Tool,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNVERIFIED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "subclone", version, about = "Submaximal clones of Pol(theta) on finite sets")]
struct Cli {
    /// Worker threads for the parallel checks.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct Pair {
    #[arg(long, value_name = "FILE")]
    theta: PathBuf,
    #[arg(long, value_name = "FILE")]
    rho: PathBuf,
    /// equiv, perm, order, affine, central or hregular; inferred when absent.
    #[arg(long, value_parser = parse_kind)]
    kind: Option<RelationClass>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide submaximality of Pol(theta) ∩ Pol(rho) in Pol(theta).
    Classify {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        json: bool,
        /// Re-verify every witness certificate.
        #[arg(long)]
        verify: bool,
    },
    /// Build a relation by name; `--op list` prints the operations.
    Construct {
        #[arg(long)]
        op: String,
        #[arg(long, num_args = 0.., value_name = "KEY=VALUE")]
        args: Vec<String>,
    },
    /// Print the witness operations of a classification.
    Witness {
        #[command(flatten)]
        pair: Pair,
    },
    /// Replay a fixture suite against the brute-force mirrors.
    Oracle {
        /// Suite name or `all`.
        #[arg(long)]
        check: String,
        #[arg(long)]
        json: bool,
    },
}

fn parse_kind(s: &str) -> Result<RelationClass, String> {
    RelationClass::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = RelationClass::ALL.iter().map(|c| c.name()).collect();
        format!("unknown kind `{s}` (expected one of {})", names.join(", "))
    })
}

enum Failure {
    Input(String),
    Undecided(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e.0)
    }
}

/// Resource limits and inconclusive searches leave the question open; everything else is bad
/// input.
fn core_failure(e: subclone::Error) -> Failure {
    match e {
        subclone::Error::TooLarge(_) | subclone::Error::Inconclusive(_) => Failure::Undecided(e.to_string()),
        _ => Failure::Input(e.to_string()),
    }
}

fn exit_for(status: Status) -> i32 {
    if status == Status::Verified {
        EXIT_OK
    } else {
        EXIT_UNVERIFIED
    }
}

fn classify(
    theta_path: &std::path::Path,
    rho_path: &std::path::Path,
    kind: Option<RelationClass>,
    recheck: bool,
) -> Result<ClassifyReport, Failure> {
    let (theta_name, theta) = load_theta(theta_path)?;
    let rho = tag(read(rho_path)?, kind, theta.k())?;
    if rho.relation.k() != theta.k() {
        return Err(Failure::Input(format!("theta is on E_{} but rho is on E_{}", theta.k(), rho.relation.k())));
    }
    let c = decide(&theta, &rho.tagged).map_err(core_failure)?;
    let summary = InputSummary {
        k: theta.k(),
        theta: PartitionJson::new(&theta_name, &theta),
        rho: RhoSummary {
            name: rho.name,
            kind: rho.tagged.class().name(),
            arity: rho.relation.arity(),
            size: rho.relation.len(),
        },
    };
    classify_report(summary, &c, recheck).map_err(core_failure)
}

fn human(r: &ClassifyReport) -> String {
    let mut s = format!("{}\n", r.headline());
    s.push_str(&format!("criterion: {}\n", r.criterion));
    if let Some(t) = &r.central_type {
        if let (Some(order), Some(tr)) = (t.order, &t.transversal) {
            s.push_str(&format!("order {order}, transversal {tr:?}\n"));
        }
    }
    for c in &r.certificates {
        let detail = match (c.kind, &c.relation, &c.operation, &c.elements, &c.note) {
            ("relation", Some(rel), ..) => format!("arity {}, {} tuples", rel.arity, rel.size),
            ("witness", _, Some(op), ..) => format!("arity {} operation", op.arity),
            ("elements", _, _, Some(e), _) => format!("{e:?}"),
            ("note", .., Some(n)) => n.clone(),
            _ => String::new(),
        };
        s.push_str(&format!("  {} [{}] {}: {}\n", c.kind, status_name(c.status), c.label, detail));
    }
    s.push_str(&format!("verification: {} ({})\n", status_name(r.status), r.verification));
    s
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Verified => "verified",
        Status::Failed => "failed",
        Status::Inconclusive => "inconclusive",
        Status::NotApplicable => "-",
    }
}

fn oracle(check: &str, json: bool, out: &mut String) -> Result<i32, Failure> {
    let suites: Vec<Suite> = if check == "all" {
        Suite::ALL.to_vec()
    } else {
        match Suite::from_name(check) {
            Some(s) => vec![s],
            None => {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                return Err(Failure::Input(format!("unknown suite `{check}` (expected all, {})", names.join(", "))));
            }
        }
    };
    let mut reports = Vec::new();
    for s in suites {
        let results = s.run().map_err(|e| Failure::Undecided(format!("suite {}: {e}", s.name())))?;
        reports.push(SuiteJson::new(s.name(), &results));
    }
    let all_agree = reports.iter().all(|r| r.agreed == r.checks);
    let status = if all_agree { Status::Verified } else { Status::Failed };
    if json {
        let report = OracleReport { tool: Tool::current(), command: "oracle", status, suites: reports };
        write!(out, "{}", to_json(&report)).ok();
    } else {
        for r in &reports {
            writeln!(out, "{}: {}/{} agree", r.name, r.agreed, r.checks).ok();
            for c in r.results.iter().filter(|c| !c.agree) {
                writeln!(out, "  disagree: {}", c.name).ok();
            }
        }
    }
    Ok(exit_for(status))
}

fn dispatch(command: Command, out: &mut String) -> Result<i32, Failure> {
    match command {
        Command::Classify { pair, json, verify } => {
            let r = classify(&pair.theta, &pair.rho, pair.kind, verify)?;
            if json {
                write!(out, "{}", to_json(&r)).ok();
            } else {
                write!(out, "{}", human(&r)).ok();
            }
            Ok(exit_for(r.status))
        }
        Command::Construct { op, args } => {
            if op == "list" {
                write!(out, "{}", construct::usage()).ok();
                return Ok(EXIT_OK);
            }
            let text = construct::construct(&op, &args)?;
            write!(out, "{text}").ok();
            Ok(EXIT_OK)
        }
        Command::Witness { pair } => {
            let theta = load_theta(&pair.theta)?.1;
            let rho = tag(read(&pair.rho)?, pair.kind, theta.k())?;
            let c = decide(&theta, &rho.tagged).map_err(core_failure)?;
            let mut statuses = Vec::new();
            writeln!(out, "# {}", c.decision).ok();
            for (label, w) in c.witnesses() {
                let status =
                    if w.verified && w.verify().map_err(core_failure)? { Status::Verified } else { Status::Failed };
                statuses.push(status);
                writeln!(out, "# {label}: {}", status_name(status)).ok();
                write!(out, "{}", format::write_operation(&label.replace(' ', "_"), &w.operation)).ok();
            }
            if c.certificates.iter().any(|cert| matches!(cert.payload, subclone::classify::Payload::Note(_))) {
                statuses.push(Status::Inconclusive);
            }
            Ok(exit_for(report::overall(statuses.into_iter())))
        }
        Command::Oracle { check, json } => oracle(&check, json, out),
    }
}

/// Runs the command line `args` (program name first), writing the report to `out` and
/// diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                write!(err, "{text}").ok();
            } else {
                write!(out, "{text}").ok();
            }
            return code;
        }
    };
    let mut text = String::new();
    let result = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(cli.command, &mut text)),
            Err(e) => Err(Failure::Input(format!("cannot start {n} threads: {e}"))),
        },
        None => dispatch(cli.command, &mut text),
    };
    out.write_all(text.as_bytes()).ok();
    match result {
        Ok(code) => code,
        Err(Failure::Input(m)) => {
            writeln!(err, "error: {m}").ok();
            EXIT_INPUT
        }
        Err(Failure::Undecided(m)) => {
            writeln!(err, "undecided: {m}").ok();
            EXIT_UNVERIFIED
        }
    }
}
