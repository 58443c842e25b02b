//! Command-line front door: generate graphs, compute parameters, solve
//! sparing numbers, construct and verify labelings, and run the claims
//! catalog.
//!
//! Exit codes: 0 success, 2 invalid input, 3 exact cap exceeded,
//! 4 claim verdict drift.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use setlab_core::labeling::LabelError;
use setlab_core::sparing::SparingError;
use setlab_core::{claims, expr, graph::Graph, io, labeling, params, sparing, DEFAULT_EXACT_CAP};

#[derive(Parser)]
#[command(name = "setlab", version, about = "Integer-additive set-labeling laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Edgelist,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family or operation expression, e.g. `join(K1, cycle(5))`.
    Generate {
        expression: String,
        /// Output file (stdout when omitted).
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: Format,
    },
    /// Exact graph parameters.
    Params {
        /// Graph file or expression.
        input: String,
        /// Exact-computation order cap (also SETLAB_EXACT_CAP).
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Sparing number of a graph.
    Sparing {
        /// Graph file or expression.
        input: String,
        /// Greedy upper bound instead of the exact solver.
        #[arg(long)]
        heuristic: bool,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Solve, build the witness weak labeling, verify it, and write it out.
    Label {
        /// Graph file or expression.
        input: String,
        /// Cardinality for non-mono vertices (default 2).
        #[arg(short = 'k', long)]
        cardinality: Option<usize>,
        /// Output labeling file (stdout when omitted).
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Verify a labeling file against a graph file.
    Verify {
        graph: PathBuf,
        labeling: PathBuf,
    },
    /// Run every registered claim over its default grid and render the
    /// status table.
    CheckClaims {
        /// Directory for claims_status.md / claims_status.json.
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        /// Golden table to compare against; any drift exits 4.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
}

fn exact_cap(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("SETLAB_EXACT_CAP")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(DEFAULT_EXACT_CAP)
}

#[derive(Debug)]
enum CliError {
    Invalid(String),
    Cap(String),
    Drift(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Drift(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Invalid(m) | CliError::Cap(m) | CliError::Drift(m) => m,
        }
    }
}

fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(e.to_string())
}

fn load_graph(input: &str) -> Result<Graph, CliError> {
    if Path::new(input).exists() {
        let text = std::fs::read_to_string(input).map_err(invalid)?;
        let g = io::read_graph(&text).map_err(invalid)?;
        if g.has_isolated_vertices() {
            eprintln!("warning: graph has isolated vertices; they take any label");
        }
        Ok(g)
    } else {
        expr::eval_graph(input).map_err(invalid)
    }
}

fn write_out(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(invalid),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn solve(g: &Graph, cap: usize) -> Result<sparing::SparingResult, CliError> {
    sparing::sparing_exact_with_cap(g, cap).map_err(|e| match e {
        SparingError::CapExceeded { .. } => CliError::Cap(e.to_string()),
    })
}

#[derive(Serialize)]
struct SparingJson {
    value: usize,
    witness_nonmono: Vec<String>,
    witness_mono_edges: Vec<(String, String)>,
    exact: bool,
    explored: u64,
}

fn sparing_json(g: &Graph, r: &sparing::SparingResult) -> SparingJson {
    SparingJson {
        value: r.value,
        witness_nonmono: r.witness_nonmono.iter().map(|&v| g.name(v).to_string()).collect(),
        witness_mono_edges: r
            .witness_mono_edges
            .iter()
            .map(|&(u, v)| (g.name(u).to_string(), g.name(v).to_string()))
            .collect(),
        exact: r.exact,
        explored: r.explored,
    }
}

fn print_sparing(g: &Graph, r: &sparing::SparingResult, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&sparing_json(g, r)).expect("serializable")
        );
        return;
    }
    println!("sparing number{}: {}", if r.exact { "" } else { " (upper bound)" }, r.value);
    let names: Vec<&str> = r.witness_nonmono.iter().map(|&v| g.name(v)).collect();
    println!("non-mono witness: {{{}}}", names.join(","));
    let edges: Vec<String> = r
        .witness_mono_edges
        .iter()
        .map(|&(u, v)| format!("{}-{}", g.name(u), g.name(v)))
        .collect();
    println!("mono edges: [{}]", edges.join(", "));
    println!("exact: {}, nodes explored: {}", r.exact, r.explored);
}

fn print_report(report: &labeling::LabelingReport) {
    println!("iasi: {}", report.is_iasi);
    println!("wiasi: {}", report.is_wiasi);
    println!("siasi: {}", report.is_siasi);
    println!("mono vertices: {}", report.mono_vertex_count);
    println!("mono edges: {}", report.mono_edge_count);
    match report.uniformity {
        Some(k) => println!("uniform: {k}"),
        None => println!("uniform: no"),
    }
    if report.violations.is_empty() {
        println!("violations: none");
    } else {
        println!("violations:");
        for v in &report.violations {
            println!("  {}", serde_json::to_string(v).expect("serializable"));
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Generate { expression, out, format } => {
            let result = expr::eval(&expression).map_err(invalid)?;
            let text = match format {
                Format::Edgelist => io::write_edge_list(&result.graph),
                Format::Dot => io::write_dot(&result.graph, "setlab"),
                Format::Json => match &result.op {
                    Some(op) => io::write_op_json(op),
                    None => io::write_graph_json(&result.graph),
                },
            };
            write_out(&out, &text)
        }
        Command::Params { input, cap, json } => {
            let g = load_graph(&input)?;
            let p = params::parameters_with_cap(&g, exact_cap(cap));
            if json {
                println!("{}", serde_json::to_string_pretty(&p).expect("serializable"));
            } else {
                println!("order: {}", p.order);
                println!("size: {}", p.size);
                let show = |name: &str, v: Option<usize>| match v {
                    Some(x) => println!("{name}: {x}"),
                    None => println!("{name}: unsupported at this size"),
                };
                show("matching number", p.matching_number);
                show("vertex cover number", p.vertex_cover_number);
                show("independence number", p.independence_number);
                show("chromatic number", p.chromatic_number);
                match p.diameter {
                    Some(d) => println!("diameter: {d}"),
                    None => println!("diameter: undefined (disconnected)"),
                }
                println!("bipartite: {}", p.is_bipartite);
                println!("eulerian: {}", p.is_eulerian);
            }
            Ok(())
        }
        Command::Sparing { input, heuristic, cap, json } => {
            let g = load_graph(&input)?;
            let r = if heuristic {
                sparing::sparing_heuristic(&g)
            } else {
                solve(&g, exact_cap(cap))?
            };
            print_sparing(&g, &r, json);
            Ok(())
        }
        Command::Label { input, cardinality, out, cap } => {
            let g = load_graph(&input)?;
            let r = solve(&g, exact_cap(cap))?;
            let nonmono: BTreeSet<_> = r.witness_nonmono.iter().copied().collect();
            let cards: BTreeMap<_, _> = match cardinality {
                Some(k) => nonmono.iter().map(|&v| (v, k)).collect(),
                None => BTreeMap::new(),
            };
            let f = labeling::construct_weak(&g, &nonmono, &cards).map_err(invalid)?;
            let report = labeling::verify(&g, &f).map_err(invalid)?;
            if !report.is_wiasi || report.mono_edge_count != r.value {
                return Err(CliError::Invalid(format!(
                    "constructed labeling failed verification: wiasi={}, mono edges {} vs {}",
                    report.is_wiasi, report.mono_edge_count, r.value
                )));
            }
            write_out(&out, &io::write_labeling(&f))?;
            if out.is_some() {
                println!("sparing number: {}", r.value);
                print_report(&report);
            }
            Ok(())
        }
        Command::Verify { graph, labeling: labeling_path } => {
            let gtext = std::fs::read_to_string(&graph).map_err(invalid)?;
            let g = io::read_graph(&gtext).map_err(invalid)?;
            let ltext = std::fs::read_to_string(&labeling_path).map_err(invalid)?;
            let f = io::read_labeling(&ltext).map_err(invalid)?;
            let report = labeling::verify(&g, &f).map_err(|e: LabelError| invalid(e))?;
            print_report(&report);
            Ok(())
        }
        Command::CheckClaims { out_dir, golden } => {
            let table = claims::status_table();
            std::fs::create_dir_all(&out_dir).map_err(invalid)?;
            let json = table.to_json();
            std::fs::write(out_dir.join("claims_status.json"), &json).map_err(invalid)?;
            std::fs::write(out_dir.join("claims_status.md"), table.to_markdown()).map_err(invalid)?;
            for c in &table.claims {
                println!(
                    "{:28} {:>3} points  match {:>3}  mismatch {:>3}  non-integer {:>2}  unsupported {:>2}  -> {}",
                    c.id, c.points, c.matches, c.mismatches, c.non_integer, c.unsupported, c.verdict
                );
            }
            if let Some(golden_path) = golden {
                let golden_text = std::fs::read_to_string(&golden_path).map_err(invalid)?;
                if golden_text != json {
                    let golden_table: serde_json::Value =
                        serde_json::from_str(&golden_text).map_err(invalid)?;
                    let fresh: serde_json::Value = serde_json::from_str(&json).expect("own json");
                    let drift = describe_drift(&golden_table, &fresh);
                    return Err(CliError::Drift(format!("claim verdicts drifted: {drift}")));
                }
                println!("golden table: no drift");
            }
            Ok(())
        }
    }
}

fn describe_drift(golden: &serde_json::Value, fresh: &serde_json::Value) -> String {
    let verdicts = |v: &serde_json::Value| -> BTreeMap<String, String> {
        v.get("claims")
            .and_then(|c| c.as_array())
            .map(|arr| {
                arr.iter()
                    .filter_map(|c| {
                        Some((
                            c.get("id")?.as_str()?.to_string(),
                            c.get("verdict")?.as_str()?.to_string(),
                        ))
                    })
                    .collect()
            })
            .unwrap_or_default()
    };
    let old = verdicts(golden);
    let new = verdicts(fresh);
    let mut changes = Vec::new();
    for (id, v) in &new {
        match old.get(id) {
            Some(o) if o != v => changes.push(format!("{id}: {o} -> {v}")),
            None => changes.push(format!("{id}: new claim")),
            _ => {}
        }
    }
    for id in old.keys() {
        if !new.contains_key(id) {
            changes.push(format!("{id}: removed"));
        }
    }
    if changes.is_empty() {
        "point-level contents changed".to_string()
    } else {
        changes.join("; ")
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
