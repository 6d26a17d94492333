//! Command-line front end.
//!
//! Exit codes: 0 the property holds or the command succeeded, 1 it fails
//! (violated verdict, false oracle), 2 usage or parse errors, 3 exhausted
//! budgets, oversized instances and infeasible profiles. With
//! `--format json` every command prints exactly one JSON line.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::combinatorics::{compute_g, compute_j0, compute_jstar, enumerate_profiles, CrossingProfile};
use crate::conditions::{check, Mode, TheoremId, Verdict};
use crate::degseq::{parse_sequences, parse_values, DegreeSequence};
use crate::error::{Error, Result};
use crate::extremal::{build_extremal, strongest_witness, ExtremalSpec};
use crate::hypergraph::Hypergraph;
use crate::realizations::{
    forcibly_k_edge_connected, forcibly_maximally, forcibly_super, OracleOptions, RealizationQuery,
};

/// Node-expansion budget used when neither `--budget` nor
/// `HYPERCONN_BUDGET` is given.
pub const DEFAULT_BUDGET: u64 = 200_000_000;
pub const BUDGET_ENV: &str = "HYPERCONN_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Sound,
    PaperLiteral,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Sound => Mode::Sound,
            ModeArg::PaperLiteral => Mode::PaperLiteral,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Property {
    KEdge,
    Super,
    Maximal,
}

#[derive(Debug, Parser)]
#[command(name = "hyperconn", version, about = "Degree conditions for edge-connectivity of uniform hypergraphs")]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    #[arg(long, value_enum, default_value = "sound", global = true)]
    mode: ModeArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct SeqInput {
    /// Comma- or space-separated degrees.
    #[arg(long, allow_hyphen_values = true)]
    seq: Option<String>,
    /// File with one sequence per line.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a theorem's degree conditions.
    Check {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: Option<u64>,
        #[command(flatten)]
        input: SeqInput,
    },
    /// Decide a forcible property by enumerating every realization.
    Oracle {
        #[arg(long, value_enum)]
        property: Property,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        seq: String,
        /// Where to write the counterexample, if any.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Edge connectivity of a hypergraph file.
    Lambda {
        #[arg(long)]
        file: PathBuf,
        /// Use subset enumeration instead of max-flow.
        #[arg(long)]
        bruteforce: bool,
    },
    /// Whether a hypergraph file is super edge-connected.
    Superlambda {
        #[arg(long)]
        file: PathBuf,
    },
    /// Build the extremal hypergraph for a crossing profile.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        c: usize,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Majorizing counterexample for a violated k-edge verdict.
    Witness {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: u64,
        #[arg(long, allow_hyphen_values = true)]
        seq: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the admissible crossing profiles.
    Params {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        c: usize,
    },
    /// Print g(k, r), j* and the j0(z) table.
    Thresholds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: u64,
    },
    /// List the realizations of a sequence.
    Enumerate {
        #[arg(long)]
        r: usize,
        #[arg(long, allow_hyphen_values = true)]
        seq: String,
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long)]
        budget: Option<u64>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Oracle { .. } => "oracle",
            Command::Lambda { .. } => "lambda",
            Command::Superlambda { .. } => "superlambda",
            Command::Construct { .. } => "construct",
            Command::Witness { .. } => "witness",
            Command::Params { .. } => "params",
            Command::Thresholds { .. } => "thresholds",
            Command::Enumerate { .. } => "enumerate",
        }
    }
}

/// What a command produced: exit code, JSON result and text rendering.
struct Report {
    code: i32,
    json: Value,
    text: String,
}

impl Report {
    fn new(code: i32, json: Value, text: String) -> Self {
        Report { code, json, text }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExhausted { .. } | Error::InfeasibleProfile | Error::InstanceTooLarge(_) => 3,
        _ => 2,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::BudgetExhausted { .. } => "budget_exhausted",
        Error::InfeasibleProfile => "infeasible_profile",
        Error::InstanceTooLarge(_) => "instance_too_large",
        Error::NotHypergraphic { .. } => "not_hypergraphic",
        Error::Parse { .. } => "parse",
        Error::Usage(_) => "usage",
        _ => "invalid_input",
    }
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
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let name = cli.command.name();
    match dispatch(&cli) {
        Ok(report) => {
            let _ = match cli.format {
                Format::Json => {
                    let line = json!({ "command": name, "exit_code": report.code, "result": report.json });
                    writeln!(out, "{line}")
                }
                Format::Text => write!(out, "{}", report.text),
            };
            report.code
        }
        Err(e) => {
            let code = exit_code(&e);
            if cli.format == Format::Json {
                let line = json!({
                    "command": name,
                    "exit_code": code,
                    "error": { "kind": error_kind(&e), "message": e.to_string() },
                });
                let _ = writeln!(out, "{line}");
            }
            let _ = writeln!(err, "error: {e}");
            code
        }
    }
}

fn budget_from_env(flag: Option<u64>) -> Result<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|e| Error::Usage(format!("{BUDGET_ENV}={v:?} is not a number: {e}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn parse_seq(text: &str, r: usize) -> Result<DegreeSequence> {
    let values = parse_values(text).map_err(Error::Usage)?;
    DegreeSequence::new(&values, r)
}

fn parse_list(text: &str) -> Result<Vec<u64>> {
    parse_values(text)
        .map_err(Error::Usage)?
        .into_iter()
        .map(|v| u64::try_from(v).map_err(|_| Error::Usage(format!("negative entry {v}"))))
        .collect()
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

fn dispatch(cli: &Cli) -> Result<Report> {
    let mode: Mode = cli.mode.into();
    match &cli.command {
        Command::Check { theorem, r, k, input } => cmd_check(theorem, *r, *k, input, mode),
        Command::Oracle { property, r, k, seq, out, search } => {
            cmd_oracle(*property, *r, *k, seq, out.as_deref(), search)
        }
        Command::Lambda { file, bruteforce } => {
            let h = Hypergraph::from_text(&read_file(file)?)?;
            let lambda = if *bruteforce { h.edge_connectivity_bruteforce()? } else { h.edge_connectivity()? };
            Ok(Report::new(0, json!({ "lambda": lambda }), format!("{lambda}\n")))
        }
        Command::Superlambda { file } => {
            let h = Hypergraph::from_text(&read_file(file)?)?;
            let sup = h.is_super_edge_connected()?;
            Ok(Report::new(if sup { 0 } else { 1 }, json!({ "super": sup }), format!("{sup}\n")))
        }
        Command::Construct { n, j, r, c, t, s, out } => {
            let profile = CrossingProfile { t: parse_list(t)?, s: parse_list(s)?, j: *j, n: *n, r: *r };
            if profile.t.len() != *c || profile.s.len() != *c {
                return Err(Error::Usage(format!("--t and --s need exactly c = {c} entries")));
            }
            let h = build_extremal(&ExtremalSpec { n: *n, j: *j, r: *r, profile })?;
            emit_hypergraph(&h, out.as_deref(), json!({}))
        }
        Command::Witness { r, k, seq, out } => {
            if *k == 0 {
                return Err(Error::Usage("k must be positive".into()));
            }
            let d = parse_seq(seq, *r)?;
            let verdict = check(TheoremId::T23, &d, Some(*k), mode)?;
            if verdict.is_satisfied() {
                let text = "satisfied: no witness\n".to_string();
                return Ok(Report::new(1, json!({ "verdict": to_json(&verdict) }), text));
            }
            let w = strongest_witness(&d, *k, &verdict)?;
            let extra = json!({ "dprime": w.dprime.values(), "verdict": to_json(&verdict) });
            let mut report = emit_hypergraph(&w.hypergraph, out.as_deref(), extra)?;
            report.text = format!("dprime={}\n{}", w.dprime, report.text);
            Ok(report)
        }
        Command::Params { n, j, r, c } => {
            if *r < 2 || *j < *r || j + r > *n {
                return Err(Error::Usage("params needs r >= 2 and r <= j <= n - r".into()));
            }
            let profiles = enumerate_profiles(*c, *r, *j, *n);
            let text: String = profiles.iter().map(|p| format!("t={:?} s={:?}\n", p.t, p.s)).collect();
            let list: Vec<Value> = profiles.iter().map(|p| json!({ "t": p.t, "s": p.s })).collect();
            Ok(Report::new(0, json!({ "count": profiles.len(), "profiles": list }), text))
        }
        Command::Thresholds { n, r, k } => cmd_thresholds(*n, *r, *k),
        Command::Enumerate { r, seq, limit, budget } => {
            let d = parse_seq(seq, *r)?;
            let q = RealizationQuery { d, limit: *limit, budget: Some(budget_from_env(*budget)?) };
            let mut edges = Vec::new();
            let mut text = String::new();
            for h in q.iter()? {
                let h = h?;
                text.push_str(&h.to_text());
                text.push('\n');
                edges.push(to_json(&h.edges()));
            }
            let count = edges.len();
            let text = format!("{count} realization(s)\n{text}");
            Ok(Report::new(0, json!({ "count": count, "realizations": edges }), text))
        }
    }
}

fn emit_hypergraph(h: &Hypergraph, out: Option<&Path>, mut extra: Value) -> Result<Report> {
    let text = h.to_text();
    let lambda = h.edge_connectivity()?;
    extra["lambda"] = json!(lambda);
    extra["degrees"] = json!(h.degree_sequence()?.values());
    match out {
        Some(path) => {
            write_file(path, &text)?;
            extra["file"] = json!(path.display().to_string());
            Ok(Report::new(0, extra, format!("wrote {} (lambda={lambda})\n", path.display())))
        }
        None => {
            extra["hypergraph"] = json!(text);
            Ok(Report::new(0, extra, text))
        }
    }
}

fn render_verdict(label: &str, d: &DegreeSequence, v: &Verdict) -> String {
    let Some(w) = &v.violation else {
        return format!("{label} [{d}]: satisfied\n");
    };
    let mut s = format!("{label} [{d}]: violated {}", w.condition_id);
    if let Some(j) = w.j {
        s += &format!(" at j={j}");
    }
    s.push('\n');
    if let Some(p) = &w.profile {
        s += &format!("  profile t={:?} s={:?}\n", p.t, p.s);
    }
    if let Some(p) = &w.params {
        s += &format!("  params x={} y={} z={} q={} R={}\n", p.x, p.y, p.z, p.q, p.big_r);
    }
    let clause = |pairs: &[(usize, u128)], op: &str| -> String {
        pairs.iter().map(|(i, b)| format!("d_{i}{op}{b}")).collect::<Vec<_>>().join(", ")
    };
    if !w.antecedent_indices.is_empty() {
        s += &format!("  antecedent: {}\n", clause(&w.antecedent_indices, "<="));
    }
    s += &format!("  failed: {}\n", clause(&w.failed_consequent_bounds, ">="));
    s
}

fn cmd_check(theorem: &str, r: usize, k: Option<u64>, input: &SeqInput, mode: Mode) -> Result<Report> {
    let id: TheoremId = theorem.parse()?;
    let seqs = match (&input.seq, &input.file) {
        (Some(s), None) => vec![parse_seq(s, r)?],
        (None, Some(path)) => parse_sequences(&read_file(path)?, r)?,
        _ => return Err(Error::Usage("give exactly one of --seq or --file".into())),
    };
    let mut results = Vec::with_capacity(seqs.len());
    let mut text = String::new();
    let mut any_violated = false;
    for d in &seqs {
        let v = check(id, d, k, mode)?;
        any_violated |= !v.is_satisfied();
        text += &render_verdict(&format!("theorem {id}"), d, &v);
        results.push(json!({ "sequence": d.values(), "verdict": to_json(&v) }));
    }
    let json = if results.len() == 1 && input.seq.is_some() {
        let mut one = results.pop().expect("one result");
        one["theorem"] = json!(id.label());
        one
    } else {
        json!({ "theorem": id.label(), "results": results })
    };
    Ok(Report::new(if any_violated { 1 } else { 0 }, json, text))
}

fn cmd_oracle(
    property: Property,
    r: usize,
    k: Option<u64>,
    seq: &str,
    out: Option<&Path>,
    search: &SearchArgs,
) -> Result<Report> {
    if search.workers == 0 {
        return Err(Error::Usage("--workers must be at least 1".into()));
    }
    let d = parse_seq(seq, r)?;
    let opts = OracleOptions { budget: Some(budget_from_env(search.budget)?), workers: search.workers };
    let (label, outcome) = match property {
        Property::KEdge => {
            let k = k.ok_or_else(|| Error::Usage("--property k-edge needs --k".into()))?;
            (format!("{k}-edge-connected"), forcibly_k_edge_connected(&d, k, opts)?)
        }
        Property::Super => ("super edge-connected".to_string(), forcibly_super(&d, opts)?),
        Property::Maximal => ("maximally edge-connected".to_string(), forcibly_maximally(&d, opts)?),
    };
    let mut json = json!({ "sequence": d.values(), "holds": outcome.holds, "counterexample": Value::Null });
    let mut text = format!("[{d}] forcibly {label}: {}\n", outcome.holds);
    if let Some(h) = &outcome.counterexample {
        json["counterexample"] = json!(h.to_text());
        match out {
            Some(path) => {
                write_file(path, &h.to_text())?;
                text += &format!("  counterexample written to {}\n", path.display());
            }
            None => {
                for line in h.to_text().lines() {
                    text += &format!("  {line}\n");
                }
            }
        }
    }
    Ok(Report::new(if outcome.holds { 0 } else { 1 }, json, text))
}

fn cmd_thresholds(n: usize, r: usize, k: u64) -> Result<Report> {
    if r < 2 || k < 1 {
        return Err(Error::Usage("thresholds needs r >= 2 and k >= 1".into()));
    }
    let g = (k >= 2).then(|| compute_g(k, r));
    let jstar = compute_jstar(n, r, k - 1);
    let show = |v: Option<String>| v.unwrap_or_else(|| "none".into());
    let mut text = format!(
        "g={} jstar={}\n",
        show(g.map(|g| g.to_string())),
        show(jstar.map(|j| j.to_string()))
    );
    let mut table = Vec::new();
    for z in 1..k.max(2) {
        let j0 = compute_j0(n, z, r);
        text += &format!("j0({z})={}\n", show(j0.map(|j| j.to_string())));
        table.push(json!({ "z": z, "j0": j0 }));
    }
    Ok(Report::new(0, json!({ "g": g, "jstar": jstar, "j0": table }), text))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("hyperconn").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn check_exit_codes() {
        let (code, out, _) = run_args(&["check", "--theorem", "2.3", "--r", "2", "--k", "2", "--seq", "2,2,2,2,2,2"]);
        assert_eq!(code, 1);
        assert!(out.contains("T23-4 at j=3"), "{out}");
        let (code, _, _) = run_args(&["check", "--theorem", "2.3", "--r", "2", "--k", "2", "--seq", "3,3,3,3"]);
        assert_eq!(code, 0);
        let (code, _, err) = run_args(&["check", "--theorem", "9.9", "--r", "2", "--seq", "1,1"]);
        assert_eq!(code, 2);
        assert!(err.contains("unknown theorem"));
    }

    #[test]
    fn json_is_one_line() {
        let (code, out, _) = run_args(&[
            "--format", "json", "check", "--theorem", "2.3", "--r", "2", "--k", "2", "--seq", "2,2,2,2,2,2",
        ]);
        assert_eq!(code, 1);
        assert_eq!(out.lines().count(), 1);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["verdict"]["violation"]["condition_id"], "T23-4");
        assert_eq!(v["result"]["verdict"]["violation"]["j"], 3);
        assert_eq!(v["result"]["verdict"]["violation"]["profile"]["t"], json!([1]));
    }

    #[test]
    fn thresholds_text() {
        let (code, out, _) = run_args(&["thresholds", "--n", "12", "--r", "2", "--k", "2"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("g=3 jstar=5\n"), "{out}");
    }

    #[test]
    fn oracle_codes() {
        let (code, out, _) = run_args(&["oracle", "--property", "k-edge", "--r", "2", "--k", "2", "--seq", "2,2,2,2,2,2"]);
        assert_eq!(code, 1);
        assert!(out.contains("0 1"));
        assert_eq!(run_args(&["oracle", "--property", "super", "--r", "2", "--seq", "2,2,2"]).0, 0);
        assert_eq!(run_args(&["oracle", "--property", "k-edge", "--r", "3", "--k", "2", "--seq", "1,1,1,1"]).0, 2);
        let (code, _, _) = run_args(&[
            "oracle", "--property", "k-edge", "--r", "2", "--k", "2", "--seq", "3,3,3,3,3,3", "--budget", "2",
        ]);
        assert_eq!(code, 3);
    }

    #[test]
    fn construct_infeasible_exits_3() {
        let (code, _, _) = run_args(&["construct", "--n", "8", "--j", "4", "--r", "3", "--c", "2", "--t", "1,0", "--s", "3,1"]);
        assert_eq!(code, 3);
    }
}
