//! Command-line front end. [`run`] returns the text and exit code instead
//! of touching the process, so it can be driven from tests.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::bounds::{self, HuntMode};
use crate::constructions::{self, RecipeSource};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::family::{self, Family, FamilyParams};
use crate::io;
use crate::kinds::{ParamKind, SetKind};
use crate::orient;
use crate::solver::{self, SolveConfig, SolveResult};
use crate::verify::{self, DefenseWitness};
use crate::vertex_set::VertexSet;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Orders up to which `family` double-checks closed forms with the solver.
const FAMILY_SOLVER_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Parser, Debug)]
#[command(name = "secdom", version = VERSION, about = "Secure domination parameters of digraphs")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker thread hint for the solver (0 = automatic). Never changes output.
    #[arg(long, default_value_t = 0, global = true)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimum parameter values with witnesses.
    Compute {
        file: PathBuf,
        /// A parameter name (`plus`, `minus`, `s`, `twin`, `so`, `os`, `oso`, `iso`) or `all`.
        #[arg(long, default_value = "all")]
        param: String,
        #[arg(long, default_value_t = solver::DEFAULT_SIZE_CAP)]
        cap: usize,
    },
    /// Check a vertex set against a set kind.
    Verify {
        file: PathBuf,
        /// Comma-separated 1-based vertices.
        #[arg(long)]
        set: String,
        #[arg(long)]
        kind: String,
    },
    /// All parameters plus the bound catalogue.
    Survey {
        file: PathBuf,
        #[arg(long, default_value_t = solver::DEFAULT_SIZE_CAP)]
        cap: usize,
    },
    /// Closed-form witness on a standard family.
    Family {
        #[arg(long, value_enum)]
        family: ClosedFamily,
        /// Order (leg count for `spider`).
        #[arg(long)]
        n: Option<usize>,
        /// Leg count for `spider`.
        #[arg(long = "n-k")]
        n_k: Option<usize>,
        #[arg(long)]
        param: String,
    },
    /// Parameter range over all orientations of an undirected graph.
    Orient {
        file: PathBuf,
        #[arg(long)]
        param: String,
        #[arg(long, value_enum, default_value_t = OrientMode::Spectrum)]
        mode: OrientMode,
    },
    /// Search for digraphs above the two-thirds conjecture.
    Hunt {
        #[arg(long, value_parser = ["oso", "iso"])]
        conjecture: String,
        /// Largest order searched.
        #[arg(long)]
        n: usize,
        /// Smallest order searched (defaults to `--n`).
        #[arg(long = "n-min")]
        n_min: Option<usize>,
        #[arg(long, conflicts_with_all = ["samples", "seed"])]
        exhaustive: bool,
        #[arg(long, requires = "seed")]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Generate a digraph file.
    Gen(GenArgs),
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<usize>,
    /// Leg count for `spider`.
    #[arg(long = "n-k")]
    n_k: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long = "arc-prob", default_value_t = 0.5)]
    arc_prob: f64,
    #[arg(long = "allow-symmetric")]
    allow_symmetric: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum ClosedFamily {
    Path,
    Cycle,
    Spider,
    Transtour,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum OrientMode {
    Min,
    Max,
    Spectrum,
}

/// What a command produced before it is wrapped in the envelope.
struct Outcome {
    results: Value,
    tsv: String,
    digest: Option<String>,
    seed: Option<u64>,
    code: i32,
}

impl Outcome {
    fn ok(results: Value, tsv: String) -> Self {
        Self {
            results,
            tsv,
            digest: None,
            seed: None,
            code: 0,
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Runs the CLI on `args` (program name first).
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => CliOutput {
                    stdout: text,
                    stderr: String::new(),
                    code: 0,
                },
                _ => CliOutput {
                    stdout: String::new(),
                    stderr: text,
                    code: 1,
                },
            };
        }
    };
    let config = SolveConfig {
        size_cap: solver::DEFAULT_SIZE_CAP,
        threads: cli.threads,
    };
    let outcome = match &cli.command {
        Command::Compute { file, param, cap } => cmd_compute(
            file,
            param,
            SolveConfig {
                size_cap: *cap,
                ..config
            },
        ),
        Command::Verify { file, set, kind } => cmd_verify(file, set, kind),
        Command::Survey { file, cap } => cmd_survey(
            file,
            SolveConfig {
                size_cap: *cap,
                ..config
            },
        ),
        Command::Family { family, n, n_k, param } => cmd_family(*family, *n, *n_k, param, config),
        Command::Orient { file, param, mode } => cmd_orient(file, param, *mode, config),
        Command::Hunt {
            conjecture,
            n,
            n_min,
            exhaustive,
            samples,
            seed,
        } => cmd_hunt(conjecture, *n, *n_min, *exhaustive, *samples, *seed),
        Command::Gen(g) => cmd_gen(g),
    };
    match outcome {
        Ok(o) => {
            let stdout = match cli.format {
                Format::Tsv => o.tsv.clone(),
                Format::Json => envelope(&args, &o),
            };
            CliOutput {
                stdout,
                stderr: String::new(),
                code: o.code,
            }
        }
        Err(e) => CliOutput {
            stdout: String::new(),
            stderr: format!(
                "error: {}\n",
                match e {
                    CliError::Usage(m) => m,
                    CliError::Lib(e) => e.to_string(),
                }
            ),
            code: 1,
        },
    }
}

/// The argument echo leaves out `--threads` so the hint never shows up in
/// the output.
fn command_echo(args: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    let mut it = args.iter().skip(1);
    while let Some(a) = it.next() {
        if a == "--threads" {
            it.next();
        } else if !a.starts_with("--threads=") {
            out.push(a.clone());
        }
    }
    out
}

fn envelope(args: &[String], o: &Outcome) -> String {
    let mut top = Map::new();
    top.insert("version".into(), json!(VERSION));
    top.insert("command".into(), json!(command_echo(args)));
    top.insert("input_digest".into(), json!(o.digest));
    if let Some(seed) = o.seed {
        top.insert("seed".into(), json!(seed));
    }
    top.insert("results".into(), o.results.clone());
    let mut s = serde_json::to_string_pretty(&Value::Object(top)).expect("values serialize");
    s.push('\n');
    s
}

/// `sha256:` followed by the hex digest of the canonical text.
pub fn digest(canonical: &str) -> String {
    let hash = Sha256::digest(canonical.as_bytes());
    let mut s = String::from("sha256:");
    for byte in hash {
        let _ = write!(s, "{byte:02x}");
    }
    s
}

fn read_file(path: &PathBuf) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn load_digraph(path: &PathBuf) -> CliResult<(Digraph, String)> {
    let d = io::parse_digraph(&read_file(path)?)?;
    let dg = digest(&io::serialize_digraph(&d));
    Ok((d, dg))
}

fn parse_param(s: &str) -> CliResult<ParamKind> {
    s.parse::<ParamKind>().map_err(|e| usage(e.to_string()))
}

fn one_based(s: &VertexSet) -> Value {
    json!(s.to_one_based())
}

fn joined(s: &VertexSet) -> String {
    s.to_one_based()
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn defenders_json(w: &DefenseWitness) -> Value {
    let map: Map<String, Value> = w
        .defenders
        .iter()
        .map(|&(v, u)| ((v + 1).to_string(), json!(u.map(|u| u + 1))))
        .collect();
    Value::Object(map)
}

fn result_json(r: &SolveResult) -> Value {
    let mut m = Map::new();
    m.insert("value".into(), json!(r.value));
    m.insert("witness".into(), one_based(&r.witness));
    m.insert("forced".into(), one_based(&r.forced));
    m.insert("lower_bound".into(), json!(r.lower_bound));
    m.insert("nodes_explored".into(), json!(r.nodes_explored));
    if r.kind.is_secure() {
        m.insert("defenders".into(), defenders_json(&r.defense));
    }
    Value::Object(m)
}

fn cmd_compute(file: &PathBuf, param: &str, config: SolveConfig) -> CliResult<Outcome> {
    let (d, dg) = load_digraph(file)?;
    let kinds: Vec<ParamKind> = if param.eq_ignore_ascii_case("all") {
        ParamKind::ALL.to_vec()
    } else {
        vec![parse_param(param)?]
    };
    let results: BTreeMap<ParamKind, SolveResult> = if kinds.len() == ParamKind::ALL.len() {
        solver::solve_all(&d, &config)?
    } else {
        kinds
            .iter()
            .map(|&k| solver::solve_min(&d, k, &config).map(|r| (k, r)))
            .collect::<Result<_>>()?
    };
    let mut map = Map::new();
    let mut tsv = String::from("param\tvalue\twitness\tnodes_explored\n");
    for (k, r) in &results {
        map.insert(k.name().into(), result_json(r));
        let _ = writeln!(
            tsv,
            "{}\t{}\t{}\t{}",
            k.name(),
            r.value,
            joined(&r.witness),
            r.nodes_explored
        );
    }
    let mut o = Outcome::ok(json!({ "n": d.order(), "parameters": map }), tsv);
    o.digest = Some(dg);
    Ok(o)
}

fn parse_set(text: &str, n: usize) -> CliResult<VertexSet> {
    let mut s = VertexSet::empty(n);
    for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = tok.parse().map_err(|_| usage(format!("bad vertex '{tok}' in --set")))?;
        if v == 0 || v > n {
            return Err(usage(format!("vertex {v} out of range 1..{n}")));
        }
        s.insert(v - 1);
    }
    Ok(s)
}

fn cmd_verify(file: &PathBuf, set: &str, kind: &str) -> CliResult<Outcome> {
    let (d, dg) = load_digraph(file)?;
    let kind: SetKind = kind
        .parse()
        .map_err(|e: crate::kinds::UnknownKind| usage(e.to_string()))?;
    let s = parse_set(set, d.order())?;
    let verdict = verify::verify(&d, &s, kind);
    let failure = verdict
        .failure
        .map(|f| json!({ "vertex": f.vertex + 1, "reason": f.reason }));
    let mut results = json!({
        "kind": kind,
        "set": one_based(&s),
        "valid": verdict.valid,
        "failure": failure,
    });
    if kind.is_secure() && verdict.valid {
        results["defenders"] = defenders_json(&verdict.defense);
    }
    let (fv, reason) = match verdict.failure {
        Some(f) => (
            (f.vertex + 1).to_string(),
            serde_json::to_value(f.reason)
                .unwrap()
                .as_str()
                .unwrap_or("")
                .to_string(),
        ),
        None => (String::new(), String::new()),
    };
    let tsv = format!(
        "kind\tvalid\tfailure_vertex\treason\n{kind}\t{}\t{fv}\t{reason}\n",
        verdict.valid
    );
    let mut o = Outcome::ok(results, tsv);
    o.digest = Some(dg);
    o.code = if verdict.valid { 0 } else { 2 };
    Ok(o)
}

fn cmd_survey(file: &PathBuf, config: SolveConfig) -> CliResult<Outcome> {
    let (d, dg) = load_digraph(file)?;
    let all = solver::solve_all(&d, &config)?;
    let values: BTreeMap<ParamKind, usize> = all.iter().map(|(&k, r)| (k, r.value)).collect();
    let report = bounds::bound_report(&d, &values)?;
    let violations: Vec<&str> = report.violations().map(|e| e.bound_id).collect();
    let params: Map<String, Value> = all
        .iter()
        .map(|(k, r)| (k.name().to_string(), result_json(r)))
        .collect();
    let mut tsv = String::from("bound_id\tapplicable\tlhs\trhs\tholds\tslack\n");
    let cell = |v: Option<i64>| v.map(|x| x.to_string()).unwrap_or_default();
    for e in &report.entries {
        let _ = writeln!(
            tsv,
            "{}\t{}\t{}\t{}\t{}\t{}",
            e.bound_id,
            e.applicable,
            cell(e.lhs),
            cell(e.rhs),
            e.holds.map(|h| h.to_string()).unwrap_or_default(),
            cell(e.slack)
        );
    }
    let results = json!({
        "n": d.order(),
        "parameters": params,
        "bounds": report.entries,
        "violations": violations,
        "counterexample": if violations.is_empty() { Value::Null } else { json!(io::serialize_digraph(&d)) },
    });
    let mut o = Outcome::ok(results, tsv);
    o.digest = Some(dg);
    o.code = if violations.is_empty() { 0 } else { 2 };
    Ok(o)
}

fn cmd_family(
    fam: ClosedFamily,
    n: Option<usize>,
    n_k: Option<usize>,
    param: &str,
    config: SolveConfig,
) -> CliResult<Outcome> {
    let kind = parse_param(param)?;
    let size = match fam {
        ClosedFamily::Spider => n_k.or(n),
        _ => n,
    }
    .ok_or_else(|| usage("missing --n"))?;
    let (d, closed, witness, source): (Digraph, Option<usize>, Option<VertexSet>, &str) = match fam {
        ClosedFamily::Path => {
            let r = constructions::path_witness(kind, size)?;
            (family::dipath(size)?, Some(r.claimed_size), Some(r.set), "pattern")
        }
        ClosedFamily::Cycle => {
            let r = constructions::cycle_witness(kind, size)?;
            let src = match r.source {
                RecipeSource::Pattern => "pattern",
                RecipeSource::Solver => "solver",
            };
            (family::dicycle(size)?, Some(r.claimed_size), Some(r.set), src)
        }
        ClosedFamily::Spider => {
            let d = family::spider(size)?;
            if kind == ParamKind::GammaIso {
                (
                    d,
                    Some(size + 1),
                    Some(constructions::spider_isods_witness(size)?),
                    "pattern",
                )
            } else {
                (d, None, None, "solver")
            }
        }
        ClosedFamily::Transtour => {
            let d = family::transitive_tournament(size)?;
            match kind {
                ParamKind::GammaOs | ParamKind::GammaPlus => {
                    (d, Some(1), Some(VertexSet::from_indices(size, [0])?), "pattern")
                }
                ParamKind::GammaIso if size >= 2 => {
                    let (u, v) = constructions::dominating_source_sink_pair(&d)
                        .ok_or_else(|| Error::Invariant("transitive tournament lacks a source-sink pair".into()))?;
                    (d, Some(2), Some(VertexSet::from_indices(size, [u, v])?), "pattern")
                }
                _ => (d, None, None, "solver"),
            }
        }
    };
    let solved = if d.order() <= FAMILY_SOLVER_LIMIT || witness.is_none() {
        Some(solver::solve_min(&d, kind, &config)?)
    } else {
        None
    };
    let (witness, source) = match (witness, &solved) {
        (Some(w), _) => (w, source),
        (None, Some(r)) => (r.witness.clone(), "solver"),
        (None, None) => unreachable!("solver runs whenever no pattern exists"),
    };
    let verified = verify::is_set(&d, &witness, kind.set_kind());
    let value = closed.unwrap_or(witness.len());
    let consistent = verified && witness.len() == value && solved.as_ref().is_none_or(|r| r.value == value);
    let family_name = match fam {
        ClosedFamily::Path => "path",
        ClosedFamily::Cycle => "cycle",
        ClosedFamily::Spider => "spider",
        ClosedFamily::Transtour => "transtour",
    };
    let results = json!({
        "family": family_name,
        "size": size,
        "n": d.order(),
        "param": kind,
        "closed_form": closed,
        "value": value,
        "witness": one_based(&witness),
        "witness_source": source,
        "verified": verified,
        "solver_value": solved.as_ref().map(|r| r.value),
        "consistent": consistent,
    });
    let tsv = format!(
        "family\tn\tparam\tvalue\twitness\tsolver_value\tconsistent\n{family_name}\t{}\t{kind}\t{value}\t{}\t{}\t{consistent}\n",
        d.order(),
        joined(&witness),
        solved.as_ref().map(|r| r.value.to_string()).unwrap_or_default(),
    );
    let mut o = Outcome::ok(results, tsv);
    o.code = if consistent { 0 } else { 2 };
    Ok(o)
}

fn cmd_orient(file: &PathBuf, param: &str, mode: OrientMode, config: SolveConfig) -> CliResult<Outcome> {
    let g = io::parse_graph(&read_file(file)?)?;
    let kind = parse_param(param)?;
    let range = orient::spectrum(&g, kind, &config)?;
    let mut results = serde_json::to_value(&range).expect("spectrum serializes");
    let mode_name = match mode {
        OrientMode::Min => "min",
        OrientMode::Max => "max",
        OrientMode::Spectrum => "spectrum",
    };
    results["mode"] = json!(mode_name);
    match mode {
        OrientMode::Min => results["value"] = json!(range.dom),
        OrientMode::Max => results["value"] = json!(range.dom_max),
        OrientMode::Spectrum => {}
    }
    let achieved = range
        .achieved
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",");
    let tsv = format!(
        "param\tdom\tDOM\tachieved\tis_interval\torientations\n{kind}\t{}\t{}\t{achieved}\t{}\t{}\n",
        range.dom, range.dom_max, range.is_interval, range.orientations_evaluated
    );
    let mut o = Outcome::ok(results, tsv);
    o.digest = Some(digest(&io::serialize_graph(&g)));
    Ok(o)
}

fn cmd_hunt(
    conjecture: &str,
    n: usize,
    n_min: Option<usize>,
    exhaustive: bool,
    samples: Option<usize>,
    seed: Option<u64>,
) -> CliResult<Outcome> {
    let kind = parse_param(conjecture)?;
    let mode = match (exhaustive, samples, seed) {
        (true, _, _) => HuntMode::Exhaustive,
        (false, Some(samples), Some(seed)) => HuntMode::Sampled { samples, seed },
        _ => return Err(usage("choose --exhaustive or --samples K --seed S")),
    };
    let report = bounds::conjecture_hunt(kind, mode, n_min.unwrap_or(n), n)?;
    let tsv = format!(
        "conjecture\tmode\tn_min\tn_max\tchecked\tcounterexamples\n{}\t{}\t{}\t{}\t{}\t{}\n",
        report.conjecture_id,
        if exhaustive { "exhaustive" } else { "sampled" },
        report.n_range[0],
        report.n_range[1],
        report.digraphs_checked,
        report.counterexamples.len()
    );
    let mut o = Outcome::ok(serde_json::to_value(&report).expect("report serializes"), tsv);
    o.seed = report.seed;
    Ok(o)
}

fn cmd_gen(g: &GenArgs) -> CliResult<Outcome> {
    let fam: Family = g.family.parse().map_err(usage)?;
    let size = match fam {
        Family::Spider => g.n_k.or(g.n),
        _ => g.n,
    }
    .ok_or_else(|| usage("missing --n"))?;
    if !(0.0..=1.0).contains(&g.arc_prob) {
        return Err(usage("--arc-prob must lie in [0, 1]"));
    }
    let params = FamilyParams {
        seed: g.seed,
        arc_prob: g.arc_prob,
        allow_symmetric: g.allow_symmetric,
    };
    let d = family::gen_family(fam, size, &params)?;
    let text = io::serialize_digraph(&d);
    if let Some(path) = &g.out {
        std::fs::write(path, &text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let randomized = matches!(fam, Family::RandomTournament | Family::RandomDigraph);
    let results = json!({
        "family": fam.name(),
        "size": size,
        "n": d.order(),
        "arcs": d.arc_count(),
        "digraph": text,
    });
    let mut o = Outcome::ok(results, text.clone());
    o.digest = Some(digest(&text));
    o.seed = if randomized { g.seed } else { None };
    Ok(o)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threads_are_not_echoed() {
        let args: Vec<String> = ["secdom", "--threads", "4", "compute", "x", "--threads=2"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(command_echo(&args), vec!["compute", "x"]);
    }

    #[test]
    fn digest_is_stable() {
        assert_eq!(
            digest(""),
            "sha256:e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }

    #[test]
    fn usage_errors_exit_1() {
        assert_eq!(run(["secdom", "frobnicate"]).code, 1);
        assert_eq!(run(["secdom", "gen", "--family", "dicycle", "--n", "2"]).code, 1);
        assert_eq!(
            run(["secdom", "hunt", "--conjecture", "oso", "--n", "9", "--exhaustive"]).code,
            1
        );
        assert_eq!(run(["secdom", "--help"]).code, 0);
    }
}
