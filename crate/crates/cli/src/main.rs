//! `qsrg`: build, verify and compare switched quadric graphs.
//!
//! Exit status: 0 when every check passes, 1 on a verification mismatch,
//! 2 on usage, parameter or I/O errors.

mod report;
mod verify;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qsrg::cliques::{graph_census, DEFAULT_NODE_BUDGET};
use qsrg::formulas::{self, predict};
use qsrg::iso::{is_isomorphic_with, SearchLimits};
use qsrg::{
    classify_vertices, decode_graph6, encode_graph6, fingerprint, gm_switch, point_graph, srg_check, standard_quadric, Family,
    Graph,
};
use serde_json::{json, Value};

use report::{Check, RunReport};

const BUDGET_VAR: &str = "QSRG_NODE_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "qsrg", version, about = "Strongly regular graphs from switched quadric point-graphs over GF(2)")]
struct Cli {
    /// Append each run report as one JSON line to this file.
    #[arg(long, global = true)]
    log: Option<PathBuf>,

    /// Worker threads for clique and automorphism search.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write the switched graph (or the point-graph when --s is omitted) in graph6.
    Construct {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: Option<i32>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run every check for one quadric.
    Verify {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
    },
    /// Evaluate the closed-form counts.
    Predict {
        #[arg(long)]
        family: Family,
        #[arg(long, default_value_t = 2)]
        q: u64,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
    },
    /// Maximum-clique census of a graph6 file.
    Cliques { path: PathBuf },
    /// Decide whether two graph6 files hold isomorphic graphs.
    Compare { first: PathBuf, second: PathBuf },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Core(#[from] qsrg::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let bytes = std::fs::read(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(decode_graph6(&bytes)?)
}

fn node_budget() -> Result<u64, CliError> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{BUDGET_VAR} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_NODE_BUDGET),
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn run(cmd: &Command) -> Result<RunReport, CliError> {
    let limits = SearchLimits {
        node_budget: node_budget()?,
        ..SearchLimits::default()
    };
    Ok(match cmd {
        Command::Construct { family, n, s, out } => {
            let q = standard_quadric(*family, *n)?;
            let gamma = point_graph(&q);
            let g = match s {
                None => gamma,
                Some(s) => {
                    let part = classify_vertices(&q, &q.default_alpha(*s).map_err(|_| {
                        qsrg::Error::SwitchIndexOutOfRange { s: *s, g: q.g() }
                    })?)?;
                    gm_switch(&gamma, &part.typing)?
                }
            };
            let mut bytes = encode_graph6(&g);
            bytes.push(b'\n');
            std::fs::write(out, &bytes).map_err(|source| CliError::Io {
                path: out.clone(),
                source,
            })?;
            let want = formulas::srg_params(*family, q.r() as u32)?;
            let got = srg_check(&g);
            let check = match &got {
                Ok(p) => Check::from_bool("SRG parameters", *p == want, || format!("{p} != {want}")),
                Err(e) => Check::fail("SRG parameters", format!("{e:?}")),
            };
            RunReport::new(
                "construct",
                json!({ "family": family, "n": n, "s": s, "out": out }),
                json!({ "v": g.v(), "srg": got.ok(), "expected_srg": want }),
                &[check],
            )
        }
        Command::Verify { family, n } => {
            let q = standard_quadric(*family, *n)?;
            let res = verify::run(&q, limits);
            RunReport::new(
                "verify",
                json!({ "family": family, "n": n }),
                to_value(&res),
                &res.checks,
            )
        }
        Command::Predict { family, q, r, s } => {
            let p = predict(*family, *q, *r, *s)?;
            RunReport::new(
                "predict",
                json!({ "family": family, "q": q, "r": r, "s": s }),
                to_value(&p),
                &[],
            )
        }
        Command::Cliques { path } => {
            let g = read_graph(path)?;
            let census = graph_census(&g, path.display().to_string());
            RunReport::new("cliques", json!({ "path": path }), to_value(&census), &[])
        }
        Command::Compare { first, second } => {
            let (a, b) = (read_graph(first)?, read_graph(second)?);
            let (fa, fb) = (fingerprint(&a), fingerprint(&b));
            let verdict = is_isomorphic_with(&a, &b, limits.node_budget)?;
            let checks: Vec<Check> = verdict
                .iter()
                .map(|phi| Check::from_bool("bijection verified", a.is_isomorphism_to(&b, phi), || "edge mismatch".into()))
                .collect();
            RunReport::new(
                "compare",
                json!({ "first": first, "second": second }),
                json!({
                    "isomorphic": verdict.is_some(),
                    "bijection": verdict,
                    "fingerprints_equal": fa == fb,
                    "fingerprints": [fa, fb],
                }),
                &checks,
            )
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if j == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .expect("global pool is configured once");
    }
    let report = match run(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
    if let Some(path) = &cli.log {
        if let Err(e) = report.append_to(path) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        for f in &report.failures {
            eprintln!("FAIL {f}");
        }
        ExitCode::from(1)
    }
}
