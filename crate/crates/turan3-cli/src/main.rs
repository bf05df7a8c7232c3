//! Unified command line for the small-3-graph toolkit.
//!
//! Machine-readable JSON goes to stdout; human notes and the run manifest go
//! to stderr. Exit codes: 0 success/consistent, 1 a claim verdict was
//! violated, 2 usage error, 3 input parse error.

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;
use turan3_core::{
    claims, constructions, enumerate, format as gformat, patterns, patterns::Pattern, Hypergraph3,
    Rational,
};

#[derive(Parser)]
#[command(
    name = "turan3",
    version,
    about = "Exact computation on small 3-uniform hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count forbidden-subgraph-free 3-graphs up to isomorphism.
    Enumerate(EnumerateArgs),
    /// Maximum edge count and all extremal classes.
    Extremal(EnumerateArgs),
    /// Emit the iterated balanced blow-up of an edge (n <= 16).
    Hn {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        emit: Option<String>,
    },
    /// Exact edge count of the iterated blow-up, any n.
    HnCount {
        #[arg(long)]
        n: u64,
    },
    /// Sweep the edge-count bound |count - n^3/24| <= (1/6) n log3 n + c n.
    BoundCheck {
        #[arg(long)]
        nmax: u64,
        /// Linear coefficient, as an integer or fraction like 5/2.
        #[arg(long)]
        c: String,
    },
    /// Best known construction on n <= 16 vertices.
    BestKnown {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        emit: Option<String>,
    },
    /// Non-induced containment: does HOST contain PATTERN?
    Contains {
        /// Graph file, canonical code (h3:..), or pattern name.
        host: String,
        /// Pattern name, graph file, or canonical code.
        pattern: String,
    },
    /// Induced density table of all k-vertex types in HOST.
    Density {
        host: String,
        #[arg(long)]
        k: u8,
    },
    /// Run the claim-verification suite.
    Verify {
        /// ratio | f2poly | partbounds | falsify | duplication | all
        #[arg(long, default_value = "all")]
        claim: String,
        /// Grid step for the falsification sweep, e.g. 1/200.
        #[arg(long, default_value = "1/200")]
        grid: String,
        /// Also reproduce the 8-vertex enumeration counts.
        #[arg(long)]
        deep: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Blow up a pattern or graph by per-vertex part sizes.
    Blowup {
        pattern: String,
        /// Comma-separated part sizes, one per vertex.
        #[arg(long)]
        sizes: String,
        #[arg(long)]
        emit: Option<String>,
    },
    /// Build the graph encoded by a walk string.
    FromWalk {
        /// Whitespace-separated tokens with optional ^i copy suffix.
        walk: String,
        #[arg(long)]
        emit: Option<String>,
    },
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    /// Comma-separated pattern names, e.g. C5-,K4-. Empty means none.
    #[arg(long, default_value = "")]
    forbid: String,
    #[arg(long)]
    jobs: Option<usize>,
    /// Write the extremal representatives to FILE in the text format.
    #[arg(long)]
    emit_extremal: Option<String>,
}

enum AppError {
    Usage(String),
    Parse(String),
}

impl AppError {
    fn exit_code(&self) -> i32 {
        match self {
            AppError::Usage(_) => 2,
            AppError::Parse(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            AppError::Usage(m) | AppError::Parse(m) => m,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> AppError {
    AppError::Usage(e.to_string())
}

struct Ctx {
    started: Instant,
    command_line: String,
    jobs: usize,
    input_hashes: BTreeMap<String, String>,
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

impl Ctx {
    fn new() -> Ctx {
        Ctx {
            started: Instant::now(),
            command_line: std::env::args().collect::<Vec<_>>().join(" "),
            jobs: 1,
            input_hashes: BTreeMap::new(),
        }
    }

    /// Prints the result JSON to stdout and the manifest to stderr.
    fn finish(&self, stdout_payload: String) -> i32 {
        print!("{stdout_payload}");
        std::io::stdout().flush().ok();
        let manifest = json!({
            "command": self.command_line,
            "version": env!("CARGO_PKG_VERSION"),
            "jobs": self.jobs,
            "wall_ms": self.started.elapsed().as_millis() as u64,
            "input_hashes": self.input_hashes,
            "digest": format!("sha256:{}", sha256_hex(stdout_payload.as_bytes())),
        });
        eprintln!("{manifest}");
        0
    }
}

/// TURAN3_JOBS overrides --jobs, which overrides available parallelism.
fn resolve_jobs(flag: Option<usize>) -> usize {
    if let Ok(env) = std::env::var("TURAN3_JOBS") {
        if let Ok(k) = env.parse::<usize>() {
            if k >= 1 {
                return k;
            }
        }
    }
    flag.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|p| p.get())
            .unwrap_or(1)
    })
    .max(1)
}

/// A graph argument is a file path when one exists, else a canonical code
/// when it starts with `h3:`, else a built-in pattern name.
fn load_graph(arg: &str, ctx: &mut Ctx) -> Result<Hypergraph3, AppError> {
    if std::path::Path::new(arg).is_file() {
        let text =
            std::fs::read_to_string(arg).map_err(|e| AppError::Parse(format!("{arg}: {e}")))?;
        ctx.input_hashes
            .insert(arg.to_string(), sha256_hex(text.as_bytes()));
        return gformat::parse(&text).map_err(|e| AppError::Parse(format!("{arg}: {e}")));
    }
    if arg.starts_with("h3:") {
        let code: turan3_core::CanonicalCode =
            arg.parse().map_err(|e| AppError::Parse(format!("{e}")))?;
        return Ok(code.graph());
    }
    Pattern::by_name(arg).map(|p| p.graph).map_err(usage)
}

fn parse_forbid(list: &str) -> Result<Vec<Pattern>, AppError> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|name| Pattern::by_name(name).map_err(usage))
        .collect()
}

fn parse_rational(s: &str) -> Result<Rational, AppError> {
    s.parse::<Rational>()
        .map_err(|e| AppError::Usage(format!("bad rational {s:?}: {e}")))
}

fn emit_file(path: &str, g: &Hypergraph3) -> Result<(), AppError> {
    std::fs::write(path, gformat::emit(g))
        .map_err(|e| AppError::Usage(format!("cannot write {path}: {e}")))
}

fn rational_str(r: &Rational) -> String {
    r.to_string()
}

fn graph_summary(g: &Hypergraph3) -> Value {
    json!({
        "n": g.vertex_count(),
        "edges": g.edge_count(),
        "canonical": turan3_core::canon::canonical_code(g).to_string(),
    })
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            std::process::exit(e.exit_code());
        }
    }
}

fn run(cli: Cli) -> Result<i32, AppError> {
    let mut ctx = Ctx::new();
    match cli.cmd {
        Cmd::Enumerate(args) => {
            let forbidden = parse_forbid(&args.forbid)?;
            ctx.jobs = resolve_jobs(args.jobs);
            let report = enumerate::enumerate_free(args.n, &forbidden, ctx.jobs).map_err(usage)?;
            if let Some(path) = &args.emit_extremal {
                let mut out = String::new();
                for code in &report.extremal {
                    out.push_str(&format!("# {code}\n"));
                    out.push_str(&gformat::emit(&code.graph()));
                }
                std::fs::write(path, out)
                    .map_err(|e| AppError::Usage(format!("cannot write {path}: {e}")))?;
            }
            let payload = serde_json::to_string(&report).expect("report serializes");
            Ok(ctx.finish(payload + "\n"))
        }
        Cmd::Extremal(args) => {
            let forbidden = parse_forbid(&args.forbid)?;
            ctx.jobs = resolve_jobs(args.jobs);
            let (max_edges, graphs) =
                enumerate::extremal(args.n, &forbidden, ctx.jobs).map_err(usage)?;
            if let Some(path) = &args.emit_extremal {
                let mut out = String::new();
                for g in &graphs {
                    out.push_str(&gformat::emit(g));
                }
                std::fs::write(path, out)
                    .map_err(|e| AppError::Usage(format!("cannot write {path}: {e}")))?;
            }
            let codes: Vec<String> = graphs
                .iter()
                .map(|g| turan3_core::canon::canonical_code(g).to_string())
                .collect();
            let payload = json!({
                "n": args.n,
                "forbidden": forbidden.iter().map(|p| p.name.clone()).collect::<Vec<_>>(),
                "max_edges": max_edges,
                "extremal": codes,
            });
            Ok(ctx.finish(payload.to_string() + "\n"))
        }
        Cmd::Hn { n, emit } => {
            let g = constructions::hn_graph(n).map_err(usage)?;
            if let Some(path) = &emit {
                emit_file(path, &g)?;
            }
            Ok(ctx.finish(graph_summary(&g).to_string() + "\n"))
        }
        Cmd::HnCount { n } => {
            let count = constructions::hn_edge_count(n);
            Ok(ctx.finish(format!("{count}\n")))
        }
        Cmd::BoundCheck { nmax, c } => {
            let c = parse_rational(&c)?;
            let r = constructions::bound_check(nmax, &c).map_err(usage)?;
            let payload = json!({
                "holds": r.holds,
                "n_max": r.n_max,
                "worst_n": r.worst_n,
                "worst_slack": rational_str(&r.worst_slack),
            });
            let code = ctx.finish(payload.to_string() + "\n");
            Ok(if r.holds { code } else { 1 })
        }
        Cmd::BestKnown { n, emit } => {
            let g = constructions::best_known(n).map_err(usage)?;
            if let Some(path) = &emit {
                emit_file(path, &g)?;
            }
            Ok(ctx.finish(graph_summary(&g).to_string() + "\n"))
        }
        Cmd::Contains { host, pattern } => {
            let host = load_graph(&host, &mut ctx)?;
            let pattern = load_graph(&pattern, &mut ctx)?;
            let witness = patterns::find_embedding(&host, &pattern);
            let payload = json!({
                "contains": witness.is_some(),
                "witness": witness,
            });
            Ok(ctx.finish(payload.to_string() + "\n"))
        }
        Cmd::Density { host, k } => {
            let host = load_graph(&host, &mut ctx)?;
            let table = patterns::density_table(&host, k).map_err(usage)?;
            let rows: Vec<Value> = table
                .iter()
                .map(|(code, count, density)| {
                    json!({
                        "code": code.to_string(),
                        "count": count,
                        "density": rational_str(density),
                    })
                })
                .collect();
            Ok(ctx.finish(Value::Array(rows).to_string() + "\n"))
        }
        Cmd::Verify {
            claim,
            grid,
            deep,
            jobs,
        } => {
            ctx.jobs = resolve_jobs(jobs);
            let grid = parse_rational(&grid)?;
            run_verify(&claim, &grid, deep, ctx)
        }
        Cmd::Blowup {
            pattern,
            sizes,
            emit,
        } => {
            let base = load_graph(&pattern, &mut ctx)?;
            let sizes: Vec<usize> = sizes
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<usize>()
                        .map_err(|_| AppError::Usage(format!("bad part size {s:?}")))
                })
                .collect::<Result<_, _>>()?;
            let (g, parts) = patterns::blowup_with_parts(&base, &sizes).map_err(usage)?;
            if let Some(path) = &emit {
                emit_file(path, &g)?;
            }
            let mut payload = graph_summary(&g);
            payload["parts"] = json!(parts);
            Ok(ctx.finish(payload.to_string() + "\n"))
        }
        Cmd::FromWalk { walk, emit } => {
            let parsed = patterns::WalkString::parse(&walk).map_err(usage)?;
            let g = patterns::from_walk(&parsed).map_err(usage)?;
            if let Some(path) = &emit {
                emit_file(path, &g)?;
            }
            let mut payload = graph_summary(&g);
            payload["walk"] = json!(parsed.to_string());
            Ok(ctx.finish(payload.to_string() + "\n"))
        }
    }
}

fn claim_line(name: &str, computed: Value, paper: Value, verdict: claims::Verdict) -> Value {
    json!({
        "claim": name,
        "computed": computed,
        "paper": paper,
        "verdict": if verdict.is_consistent() { "consistent" } else { "violated" },
    })
}

fn run_verify(which: &str, grid: &Rational, deep: bool, ctx: Ctx) -> Result<i32, AppError> {
    let all = which == "all";
    let mut lines: Vec<Value> = Vec::new();
    let mut matched = false;

    if all || which == "ratio" {
        matched = true;
        let scan = claims::six_vertex_scan().map_err(usage)?;
        lines.push(claim_line(
            "ratio",
            json!({
                "max_ratio": rational_str(&scan.witness.ratio),
                "numerator": scan.witness.numerator,
                "denominator": scan.witness.denominator,
                "witness": turan3_core::canon::canonical_code(&scan.witness.graph).to_string(),
                "free_count": scan.free_count,
            }),
            json!("5/4"),
            scan.verdict,
        ));
    }
    if all || which == "f2poly" {
        matched = true;
        let c = claims::f2_poly_claim().map_err(usage)?;
        let verdict = c.verdict;
        lines.push(claim_line(
            "f2poly",
            serde_json::to_value(&c).expect("claim serializes"),
            json!({"max": "0.001104", "root_below": "0.0109"}),
            verdict,
        ));
    }
    if all || which == "partbounds" {
        matched = true;
        let reports = claims::part_bounds().map_err(usage)?;
        let verdict = claims::Verdict::from_bool(reports.iter().all(|r| r.verdict.is_consistent()));
        lines.push(claim_line(
            "partbounds",
            serde_json::to_value(&reports).expect("reports serialize"),
            json!({"x3": ">= 0.306", "x1": "<= 0.361", "t": "<= 0.0109", "f2": "<= 0.001104"}),
            verdict,
        ));
    }
    if all || which == "falsify" {
        matched = true;
        let r = claims::falsify_region(grid).map_err(usage)?;
        let verdict = r.verdict;
        lines.push(claim_line(
            "falsify",
            serde_json::to_value(&r).expect("report serializes"),
            json!({"x3": ">= 0.31723", "x2x3": ">= 0.10613", "x1": "<= 0.33865", "x1x2": "<= 0.11378"}),
            verdict,
        ));
    }
    if all || which == "duplication" {
        matched = true;
        let r = claims::duplication_report().map_err(usage)?;
        let verdict = r.verdict;
        lines.push(claim_line(
            "duplication",
            serde_json::to_value(&r).expect("report serializes"),
            json!("duplicating any degree-3 vertex of K4 or K4- yields a C5-"),
            verdict,
        ));
    }
    if deep && (all || which == "enumeration") {
        matched = true;
        let c5m = Pattern::tight_cycle_minus(5).map_err(usage)?;
        let both = [c5m.clone(), Pattern::k4_minus()];
        let r1 = enumerate::enumerate_free(8, &both, ctx.jobs).map_err(usage)?;
        let r2 = enumerate::enumerate_free(8, &[c5m], ctx.jobs).map_err(usage)?;
        let verdict = claims::Verdict::from_bool(r1.total == 161_023 && r2.total == 1_528_500);
        lines.push(claim_line(
            "enumeration",
            json!({"c5m_k4m_free_n8": r1.total, "c5m_free_n8": r2.total}),
            json!({"c5m_k4m_free_n8": 161_023, "c5m_free_n8": 1_528_500}),
            verdict,
        ));
    }

    if !matched {
        return Err(AppError::Usage(format!(
            "unknown claim {which:?}; expected ratio, f2poly, partbounds, falsify, duplication, or all"
        )));
    }

    let violated = lines
        .iter()
        .any(|l| l["verdict"].as_str() == Some("violated"));
    let payload: String = lines
        .iter()
        .map(|l| l.to_string() + "\n")
        .collect::<Vec<_>>()
        .join("");
    let code = ctx.finish(payload);
    Ok(if violated { 1 } else { code })
}
