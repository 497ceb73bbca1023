//! `grlab`: regularity and isolated-singularity analysis of graded algebras.
//!
//! Exit codes: 0 success, 1 internal inconsistency, 2 parse error,
//! 3 invalid input, 4 resource cap, 5 corpus mismatch.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use grlab_core::analysis::{analyze_document, load_presentation, AnalysisReport};
use grlab_core::groebner::{buchberger, certify_proper};
use grlab_core::invariants::{char_poly, hilbert_series, krull_dim};
use grlab_core::polyparse::{parse_polynomial, parse_ring_file, RingDefinitionDocument};
use grlab_core::regularity::{regular_sequence_extract, regularity_report};
use grlab_core::singularity::is_graded_isolated_singularity;
use grlab_core::{Budget, Error, FieldSpec, GradedRingPresentation, Limits, TermOrderKind};
use serde_json::{json, Value};

const CORPUS_MISMATCH: u8 = 5;

#[derive(Parser)]
#[command(name = "grlab", version, about = "Decide regularity and isolated singularities of graded algebras")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    /// Emit structured JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Override the coefficient field: `rational`, `prime:P` or `P`.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<FieldSpec>,
    /// Override the term order.
    #[arg(long, global = true, value_parser = parse_order)]
    order: Option<TermOrderKind>,
    #[arg(long, global = true, env = "GRLAB_MAX_DEGREE")]
    max_degree: Option<u64>,
    #[arg(long, global = true, env = "GRLAB_MAX_BASIS")]
    max_basis: Option<usize>,
    /// Wall-clock budget in seconds.
    #[arg(long, global = true, env = "GRLAB_TIME_BUDGET_SECS")]
    time_budget: Option<u64>,
    /// Print per-phase timings of `analyze` to stderr.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: invariants, regularity and singularity.
    Analyze { file: PathBuf },
    /// Reduced Gröbner basis of the ideal.
    Gb { file: PathBuf },
    /// Hilbert series of A.
    Hilbert { file: PathBuf },
    /// Graded Krull dimension.
    Dim { file: PathBuf },
    /// Regularity verdicts of all three criteria.
    Regular { file: PathBuf },
    /// A homogeneous regular sequence generating m, if A is regular.
    Regseq { file: PathBuf },
    /// Characteristic polynomial of an m-primary ideal.
    Charpoly {
        file: PathBuf,
        /// Comma-separated generators; defaults to the maximal graded ideal.
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Isolated-singularity verdict.
    Isolated { file: PathBuf },
    /// Analyze every `NAME.ring.json` in a directory against `NAME.expected.json`.
    Corpus { dir: PathBuf },
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("rational") || s == "QQ" {
        return Ok(FieldSpec::Rational);
    }
    let digits = s.strip_prefix("prime:").unwrap_or(s);
    let p: u64 = digits.parse().map_err(|_| format!("unrecognized field `{s}`"))?;
    FieldSpec::prime(p).map_err(|e| e.to_string())
}

fn parse_order(s: &str) -> Result<TermOrderKind, String> {
    match s {
        "grevlex" => Ok(TermOrderKind::Grevlex),
        "lex" => Ok(TermOrderKind::Lex),
        _ => Err(format!("unknown term order `{s}` (expected grevlex or lex)")),
    }
}

impl GlobalArgs {
    fn budget(&self) -> Budget {
        let mut limits = Limits::default();
        if let Some(d) = self.max_degree {
            limits.max_degree = d;
        }
        if let Some(b) = self.max_basis {
            limits.max_basis = b;
        }
        if let Some(t) = self.time_budget {
            limits.time_budget = Duration::from_secs(t);
        }
        Budget::new(limits)
    }
}

fn read_document(path: &Path) -> Result<RingDefinitionDocument, Error> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| Error::MalformedDocument(format!("cannot read {}: {e}", path.display())))?;
    parse_ring_file(&src)
}

fn load(g: &GlobalArgs, path: &Path) -> Result<(RingDefinitionDocument, GradedRingPresentation), Error> {
    let doc = read_document(path)?;
    let a = load_presentation(&doc, g.field, g.order)?;
    Ok((doc, a))
}

/// Output of one subcommand: a JSON value and its human rendering.
struct Output {
    json: Value,
    text: String,
}

fn run_analyze(g: &GlobalArgs, path: &Path) -> Result<AnalysisReport, Error> {
    let doc = read_document(path)?;
    analyze_document(&doc, g.field, g.order, &g.budget())
}

fn run(g: &GlobalArgs, command: &Command) -> Result<Output, Error> {
    let budget = g.budget();
    match command {
        Command::Analyze { file } => {
            let report = run_analyze(g, file)?;
            if g.timings {
                for (phase, ms) in &report.timings {
                    eprintln!("timing {phase}: {ms} ms");
                }
            }
            Ok(Output { json: report.to_value(), text: report.to_text() })
        }
        Command::Gb { file } => {
            let (_, a) = load(g, file)?;
            let gb = buchberger(a.ring(), a.generators(), &budget)?;
            let basis = gb.display(a.ring());
            Ok(Output {
                json: json!({"order": a.ring().order().kind().name(), "groebner_basis": basis}),
                text: basis.join("\n") + "\n",
            })
        }
        Command::Hilbert { file } => {
            let (_, a) = load(g, file)?;
            let gb = certify_proper(&a, &budget)?;
            let hs = hilbert_series(a.ring(), &gb);
            Ok(Output { json: json!({ "hilbert": hs }), text: hs.display() + "\n" })
        }
        Command::Dim { file } => {
            let (_, a) = load(g, file)?;
            certify_proper(&a, &budget)?;
            let d = krull_dim(&a, &budget)?;
            Ok(Output { json: json!({ "grKdim": d }), text: format!("{d}\n") })
        }
        Command::Regular { file } => {
            let (_, a) = load(g, file)?;
            certify_proper(&a, &budget)?;
            let r = regularity_report(&a, &budget)?;
            let seq: Option<Vec<String>> =
                r.regular_sequence.as_ref().map(|s| s.iter().map(|f| a.ring().display(f)).collect());
            let json = json!({
                "regular": r.regular(),
                "grKdim": r.grkdim,
                "emb_rank": r.emb_rank,
                "verdicts": r.verdicts,
                "regular_sequence": seq,
                "pdim_k": r.pdim_k,
                "betti": r.betti,
            });
            let text = format!(
                "regular: {}\ngrKdim: {}\nrank m/m^2: {}\ndimension count: {}\ncapped resolution: {}\nregular sequence: {}\n",
                r.regular(),
                r.grkdim,
                r.emb_rank,
                r.verdicts.dimension_count,
                r.verdicts.capped_resolution,
                r.verdicts.regular_sequence
            );
            Ok(Output { json, text })
        }
        Command::Regseq { file } => {
            let (_, a) = load(g, file)?;
            certify_proper(&a, &budget)?;
            let seq: Option<Vec<String>> =
                regular_sequence_extract(&a, &budget)?.map(|s| s.iter().map(|f| a.ring().display(f)).collect());
            let text = match &seq {
                Some(s) => format!("({})\n", s.join(", ")),
                None => "none\n".into(),
            };
            Ok(Output { json: json!({ "regular_sequence": seq }), text })
        }
        Command::Charpoly { file, ideal } => {
            let (_, a) = load(g, file)?;
            certify_proper(&a, &budget)?;
            let ring = a.ring();
            let q = match ideal {
                Some(src) => src
                    .split(',')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| parse_polynomial(s, ring))
                    .collect::<Result<Vec<_>, _>>()?,
                None => (0..ring.nvars()).map(|j| ring.var(j)).collect(),
            };
            let chi = char_poly(&a, &q, &budget)?;
            let text = format!("{}  (n >= {})\n", chi.display(), chi.threshold());
            Ok(Output { json: json!({ "char_poly": chi }), text })
        }
        Command::Isolated { file } => {
            let (doc, a) = load(g, file)?;
            if doc.options.assume_equidimensional == Some(false) {
                return Err(Error::InvalidInput(
                    "the singular-locus test needs an equidimensional ideal; set assume_equidimensional".into(),
                ));
            }
            certify_proper(&a, &budget)?;
            let r = is_graded_isolated_singularity(&a, &budget)?;
            let json = json!({
                "isolated": r.isolated,
                "regular": r.regular,
                "singular_locus_dim": r.singular_locus_dim,
                "qgr_gldim": r.qgr_gldim,
                "assumptions": r.assumptions,
                "field_caveat": r.field_caveat,
            });
            let text = format!(
                "isolated: {}\nregular: {}\nsingular locus dim: {}\n",
                r.isolated, r.regular, r.singular_locus_dim
            );
            Ok(Output { json, text })
        }
        Command::Corpus { .. } => unreachable!("handled separately"),
    }
}

/// Paths where two JSON values differ, e.g. `$.char_poly.threshold`.
fn json_diff(path: &str, expected: &Value, actual: &Value, out: &mut Vec<String>) {
    match (expected, actual) {
        (Value::Object(e), Value::Object(a)) => {
            let mut keys: Vec<&String> = e.keys().chain(a.keys()).collect();
            keys.sort();
            keys.dedup();
            for k in keys {
                let p = format!("{path}.{k}");
                match (e.get(k), a.get(k)) {
                    (Some(x), Some(y)) => json_diff(&p, x, y, out),
                    (Some(x), None) => out.push(format!("{p}: expected {x}, missing")),
                    (None, Some(y)) => out.push(format!("{p}: unexpected {y}")),
                    (None, None) => {}
                }
            }
        }
        (Value::Array(e), Value::Array(a)) if e.len() == a.len() => {
            for (i, (x, y)) in e.iter().zip(a).enumerate() {
                json_diff(&format!("{path}[{i}]"), x, y, out);
            }
        }
        _ if expected != actual => out.push(format!("{path}: expected {expected}, got {actual}")),
        _ => {}
    }
}

fn corpus_cases(dir: &Path) -> Result<Vec<(String, PathBuf)>, Error> {
    let entries = std::fs::read_dir(dir)
        .map_err(|e| Error::MalformedDocument(format!("cannot read directory {}: {e}", dir.display())))?;
    let mut cases: Vec<(String, PathBuf)> = entries
        .filter_map(|e| e.ok())
        .filter_map(|e| {
            let name = e.file_name().to_string_lossy().into_owned();
            name.strip_suffix(".ring.json").map(|stem| (stem.to_string(), e.path()))
        })
        .collect();
    cases.sort();
    Ok(cases)
}

fn run_corpus(g: &GlobalArgs, dir: &Path) -> Result<ExitCode, Error> {
    let cases = corpus_cases(dir)?;
    if cases.is_empty() {
        eprintln!("warning: 0 cases in {}", dir.display());
        if g.json {
            println!("{}", json!({"cases": 0, "failed": 0, "results": []}));
        } else {
            println!("0 cases");
        }
        return Ok(ExitCode::SUCCESS);
    }
    let mut results = Vec::new();
    let mut failed = 0;
    for (name, path) in &cases {
        let actual = match run_analyze(g, path) {
            Ok(r) => r.to_value(),
            Err(e) => json!({ "error": e.code() }),
        };
        let expected_path = dir.join(format!("{name}.expected.json"));
        let mut diffs = Vec::new();
        match std::fs::read_to_string(&expected_path).map(|s| serde_json::from_str::<Value>(&s)) {
            Ok(Ok(expected)) => json_diff("$", &expected, &actual, &mut diffs),
            Ok(Err(e)) => diffs.push(format!("{}: invalid JSON: {e}", expected_path.display())),
            Err(_) => diffs.push(format!("{}: missing expectation file", expected_path.display())),
        }
        if !diffs.is_empty() {
            failed += 1;
        }
        if !g.json {
            println!("{} {name}", if diffs.is_empty() { "PASS" } else { "FAIL" });
            for d in &diffs {
                println!("    {d}");
            }
        }
        results.push(json!({"name": name, "pass": diffs.is_empty(), "diffs": diffs}));
    }
    if g.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({"cases": cases.len(), "failed": failed, "results": results})).unwrap()
        );
    } else {
        println!("{} cases, {} passed, {} failed", cases.len(), cases.len() - failed, failed);
    }
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(CORPUS_MISMATCH) })
}

fn report_error(g: &GlobalArgs, e: &Error) -> ExitCode {
    if g.json {
        println!("{}", json!({"error": {"code": e.code(), "message": e.to_string()}}));
    }
    eprintln!("error[{}]: {e}", e.code());
    ExitCode::from(e.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    if let Command::Corpus { dir } = &cli.command {
        return run_corpus(g, dir).unwrap_or_else(|e| report_error(g, &e));
    }
    match run(g, &cli.command) {
        Ok(out) => {
            if g.json {
                println!("{}", serde_json::to_string_pretty(&out.json).unwrap());
            } else {
                print!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Err(e) => report_error(g, &e),
    }
}
