//! Acceptance run: the eight criteria in order, one PASS/FAIL line each. Runs through the
//! command-line entry point so that criterion 8 can compare the exact JSON bytes.

mod common;

use std::time::{Duration, Instant};

use serde_json::Value;
use subclone_cli::run;

const THREADS_A: &str = "1";
const THREADS_B: &str = "4";

const LIMIT_EXAMPLES: Duration = Duration::from_secs(60);
const LIMIT_EQUIV_PAIRS: Duration = Duration::from_secs(5 * 60);
const LIMIT_NEAR_UNANIMITY: Duration = Duration::from_secs(10 * 60);
const LIMIT_INVARIANTS: Duration = Duration::from_secs(60);
const LIMIT_NEGATIVES: Duration = Duration::from_secs(60);
const LIMIT_CONSTRUCTIONS: Duration = Duration::from_secs(5 * 60);
const LIMIT_PERMUTATIONS: Duration = Duration::from_secs(60);

/// Ordered pairs of distinct nontrivial equivalence relations on E₄.
const EQUIV_PAIRS: usize = 156;

fn cli(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["subclone"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).expect("utf-8 report"), String::from_utf8(err).expect("utf-8 diagnostics"))
}

struct SuiteRun {
    json: String,
    checks: usize,
    failed: Vec<String>,
    names: Vec<String>,
    elapsed: Duration,
    error: Option<String>,
}

fn suite(name: &str, threads: &str) -> SuiteRun {
    let start = Instant::now();
    let (code, json, err) = cli(&["--threads", threads, "oracle", "--check", name, "--json"]);
    let elapsed = start.elapsed();
    let mut r = SuiteRun { json, checks: 0, failed: Vec::new(), names: Vec::new(), elapsed, error: None };
    if code == 2 || r.json.is_empty() {
        r.error = Some(format!("exit {code}: {}", err.trim()));
        return r;
    }
    let v: Value = serde_json::from_str(&r.json).expect("oracle JSON");
    for check in v["suites"][0]["results"].as_array().expect("results") {
        let n = check["name"].as_str().expect("name").to_string();
        if !check["agree"].as_bool().expect("agree") {
            r.failed.push(n.clone());
        }
        r.names.push(n);
    }
    r.checks = r.names.len();
    r
}

struct Line {
    pass: bool,
    text: String,
}

fn judge(n: usize, title: &str, r: &SuiteRun, limit: Duration, extra: Option<(bool, String)>) -> Line {
    let in_time = r.elapsed < limit;
    let agree = r.error.is_none() && r.failed.is_empty() && r.checks > 0;
    let (extra_ok, extra_text) = extra.unwrap_or((true, String::new()));
    let mut text = format!(
        "criterion {n} [{}] {title}: {}/{} checks agree in {:.1} s (limit {} s)",
        if agree && in_time && extra_ok { "PASS" } else { "FAIL" },
        r.checks - r.failed.len(),
        r.checks,
        r.elapsed.as_secs_f64(),
        limit.as_secs(),
    );
    if !extra_text.is_empty() {
        text.push_str(&format!("; {extra_text}"));
    }
    if let Some(e) = &r.error {
        text.push_str(&format!("; error {e}"));
    }
    if !r.failed.is_empty() {
        text.push_str(&format!("; disagree: {}", r.failed.join(", ")));
    }
    Line { pass: agree && in_time && extra_ok, text }
}

fn main() {
    let wall = Instant::now();
    let mut lines = Vec::new();
    let mut first_runs = Vec::new();

    let criteria: [(&str, &str, Duration); 7] = [
        ("examples", "golden example suite", LIMIT_EXAMPLES),
        ("equiv-pairs", "equivalence-pair completeness on E4", LIMIT_EQUIV_PAIRS),
        ("near-unanimity", "near-unanimity witnesses for upsilon1 and upsilon2", LIMIT_NEAR_UNANIMITY),
        ("invariants", "binary invariant collapse on the E4 product pair", LIMIT_INVARIANTS),
        ("negatives", "negative certificates for bounded orders and affine relations", LIMIT_NEGATIVES),
        ("constructions", "optimized constructions against brute mirrors", LIMIT_CONSTRUCTIONS),
        ("permutations", "prime permutations on E4 and E6", LIMIT_PERMUTATIONS),
    ];
    for (i, (name, title, limit)) in criteria.iter().enumerate() {
        let r = suite(name, THREADS_A);
        let extra = match *name {
            "equiv-pairs" => {
                let decisions = r.names.iter().filter(|n| n.ends_with(" decision")).count();
                Some((decisions == EQUIV_PAIRS, format!("{decisions} of {EQUIV_PAIRS} pairs decided")))
            }
            "permutations" => {
                let examples = r.names.iter().filter(|n| n.starts_with("example ")).count();
                Some((examples >= 3, format!("{examples} worked examples")))
            }
            _ => None,
        };
        let line = judge(i + 1, title, &r, *limit, extra);
        println!("{}", line.text);
        lines.push(line);
        first_runs.push((*name, r.json));
    }

    // criterion 8: every suite and every golden classification again on another worker count
    let mut differing = Vec::new();
    for (name, json) in &first_runs {
        if suite(name, THREADS_B).json != *json {
            differing.push(format!("oracle {name}"));
        }
    }
    for case in common::CASES {
        let (theta, rho) = (common::path(case.theta), common::path(case.rho));
        let mut args = vec!["classify", "--theta", &theta, "--rho", &rho, "--json"];
        if let Some(kind) = case.kind {
            args.extend(["--kind", kind]);
        }
        let report = |threads: &str| {
            let mut a = vec!["--threads", threads];
            a.extend_from_slice(&args);
            cli(&a).1
        };
        let a = report(THREADS_A);
        if a.is_empty() || a != report(THREADS_B) {
            differing.push(format!("classify {}", case.report));
        }
    }
    let compared = first_runs.len() + common::CASES.len();
    let pass = differing.is_empty();
    let mut text = format!(
        "criterion 8 [{}] determinism: {}/{compared} JSON reports byte-identical on {THREADS_A} and {THREADS_B} threads",
        if pass { "PASS" } else { "FAIL" },
        compared - differing.len(),
    );
    if !pass {
        text.push_str(&format!("; differ: {}", differing.join(", ")));
    }
    println!("{text}");
    lines.push(Line { pass, text });

    let passed = lines.iter().filter(|l| l.pass).count();
    println!("acceptance: {passed}/{} criteria pass in {:.1} s", lines.len(), wall.elapsed().as_secs_f64());
    if passed != lines.len() {
        std::process::exit(1);
    }
}
