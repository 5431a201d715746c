//! Command-line front end for the kk3 toolkit.
//!
//! Exit codes: 0 success (including certified "infeasible"), 1 usage or
//! precondition error, 2 node budget exhausted. All JSON output records the
//! seed and is byte-identical across identical invocations.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use kk3::bitset::VertexSet;
use kk3::diagnostics;
use kk3::graph::Graph;
use kk3::graph6::{parse_graph, to_graph6};
use kk3::instances::{random_boundary_instance, rng_for_seed};
use kk3::search::{
    self, append_record, brute_force_oracle, construction_upper_bound, counterexample_check,
    disjoint_cliques, format_rational, load_record, matched_clique, min_edges_exact,
    parse_rational, CacheRecord, SearchProblem, DEFAULT_NODE_BUDGET,
};
use kk3::shadow::{binomial_inverse, lovasz_shadow_bound, KFamily};
use kk3::transform::{
    clique_count_bounds, extract_clique_family, extract_clique_family_unfiltered, peel,
    plateau_length_bound, regularize, verify_regularization, BoundsParams, CliqueFamily,
};

#[derive(Parser)]
#[command(
    name = "kk3",
    about = "Minimum-edge graphs under a triangle-degree constraint: search, shadows, rewrites, diagnostics",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for randomized generators; recorded in all JSON output.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the primary artifact here (graphs get a .json sidecar).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ProblemArgs {
    /// Vertex count.
    #[arg(long)]
    n: usize,
    /// Threshold parameter t (rational: "2", "3.2", or "16/5").
    #[arg(long)]
    t: String,
}

#[derive(Subcommand)]
enum Command {
    /// Exact minimum-edge search with witnesses and caching.
    Search {
        #[command(flatten)]
        problem: ProblemArgs,
        /// Node budget before giving up.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        /// Results cache (JSON lines); KK_CACHE overrides the default.
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Solve even when a cached record exists.
        #[arg(long)]
        force: bool,
    },
    /// Exhaustive brute-force oracle (n <= 8).
    Oracle {
        #[command(flatten)]
        problem: ProblemArgs,
    },
    /// Shadow of a family file, next to its Lovasz lower bound.
    Shadow {
        /// Family file: header "k n", one comma-separated set per line.
        #[arg(long)]
        family: PathBuf,
        /// Shadow order.
        #[arg(long)]
        ell: usize,
    },
    /// The Lovasz shadow bound for a family of size m.
    Bound {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
    },
    /// Clique regularization of a graph, with the four-property report.
    Transform {
        /// Input graph (graph6 or edge-list text).
        #[arg(long)]
        graph: PathBuf,
        /// Ordered first clique, e.g. "0,1,2,3".
        #[arg(long)]
        a1: String,
        /// Second clique (set), e.g. "0,1,2,3".
        #[arg(long)]
        a2: String,
    },
    /// Clique peeling trace of a graph.
    Peel {
        #[arg(long)]
        graph: PathBuf,
        /// Clique order parameter: members have t+1 vertices.
        #[arg(long)]
        t: usize,
        /// Explicit cliques "0,1,2;3,4,5"; otherwise extracted greedily.
        #[arg(long)]
        cliques: Option<String>,
        /// Apply the excess-degree (theta) filter during extraction.
        #[arg(long)]
        filtered: bool,
    },
    /// Feasible constructions.
    Construct {
        /// K_{m+2} minus a perfect matching, for even m.
        #[arg(long, value_name = "M")]
        matched_clique: Option<usize>,
        /// Disjoint K_{t+1} cover of n vertices (needs --n, --t).
        #[arg(long)]
        disjoint_cliques: bool,
        /// Random blocks-plus-boundary instance (needs --n, --t; uses --seed).
        #[arg(long)]
        random_instance: bool,
        /// Best block-partition upper bound (needs --n, --t).
        #[arg(long)]
        upper_bound: bool,
        /// Counterexample check for non-integer t (needs --t).
        #[arg(long)]
        counterexample: bool,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        t: Option<String>,
    },
    /// Run the diagnostic checks on a graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        t: usize,
    },
    /// Constants and decay bounds for a given t.
    Bounds {
        #[arg(long)]
        t: String,
        /// Initial maximizer degree, when known.
        #[arg(long)]
        lambda: Option<usize>,
    },
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read graph file {}", path.display()))?;
    parse_graph(&text).map_err(|e| anyhow!("cannot parse graph {}: {e}", path.display()))
}

fn parse_ordered_vertices(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| anyhow!("bad vertex label {s:?}"))
        })
        .collect()
}

fn parse_clique_list(text: &str) -> Result<Vec<VertexSet>> {
    text.split(';')
        .filter(|part| !part.trim().is_empty())
        .map(|part| VertexSet::parse(part).map_err(|e| anyhow!("bad clique list: {e}")))
        .collect()
}

/// Prints the JSON document, or writes the graph artifact plus a JSON
/// sidecar when --out was given.
fn emit(out: &Option<PathBuf>, graph_text: Option<&str>, doc: &serde_json::Value) -> Result<()> {
    let rendered = serde_json::to_string_pretty(doc).expect("json renders");
    match out {
        None => {
            if let Some(g) = graph_text {
                println!("{g}");
            }
            println!("{rendered}");
        }
        Some(path) => {
            if let Some(g) = graph_text {
                std::fs::write(path, format!("{g}\n"))
                    .with_context(|| format!("cannot write {}", path.display()))?;
                let sidecar = path.with_extension("json");
                std::fs::write(&sidecar, rendered)
                    .with_context(|| format!("cannot write {}", sidecar.display()))?;
            } else {
                std::fs::write(path, rendered)
                    .with_context(|| format!("cannot write {}", path.display()))?;
            }
        }
    }
    Ok(())
}

fn result_document(result: &search::SearchResult, seed: u64, cached: bool) -> serde_json::Value {
    let record = CacheRecord::from_result(result);
    json!({
        "seed": seed,
        "n": record.n,
        "t": record.t,
        "min_edges": record.min_edges,
        "infeasible": record.min_edges.is_none(),
        "witnesses": record.witnesses,
        "witnesses_complete": result.witnesses_complete,
        "certified": record.certified,
        "nodes": record.nodes,
        "cached": cached,
    })
}

fn cache_path(cli_path: Option<PathBuf>) -> PathBuf {
    cli_path
        .or_else(|| std::env::var_os("KK_CACHE").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("kk3-cache.jsonl"))
}

fn run(cli: Cli) -> Result<u8> {
    let seed = cli.seed;
    match cli.command {
        Command::Search {
            problem,
            budget,
            cache,
            force,
        } => {
            let t = parse_rational(&problem.t)?;
            let p = SearchProblem::new(problem.n, t)?;
            let path = cache_path(cache);
            if !force {
                if let Some(record) = load_record(&path, p.n, t) {
                    let doc = json!({
                        "seed": seed,
                        "n": record.n,
                        "t": record.t,
                        "min_edges": record.min_edges,
                        "infeasible": record.min_edges.is_none(),
                        "witnesses": record.witnesses,
                        "certified": record.certified,
                        "nodes": record.nodes,
                        "cached": true,
                    });
                    emit(&cli.out, None, &doc)?;
                    return Ok(if record.certified { 0 } else { 2 });
                }
            }
            let result = min_edges_exact(&p, budget);
            append_record(&path, &CacheRecord::from_result(&result))
                .with_context(|| format!("cannot append to cache {}", path.display()))?;
            emit(&cli.out, None, &result_document(&result, seed, false))?;
            Ok(if result.certified() { 0 } else { 2 })
        }
        Command::Oracle { problem } => {
            let t = parse_rational(&problem.t)?;
            let p = SearchProblem::new(problem.n, t)?;
            let result = brute_force_oracle(&p)?;
            emit(&cli.out, None, &result_document(&result, seed, false))?;
            Ok(0)
        }
        Command::Shadow { family, ell } => {
            let text = std::fs::read_to_string(&family)
                .with_context(|| format!("cannot read family file {}", family.display()))?;
            let fam = KFamily::from_text(&text)?;
            let shadow = fam.shadow(ell)?;
            let bound = lovasz_shadow_bound(fam.len(), fam.k(), ell)?;
            let doc = json!({
                "seed": seed,
                "k": fam.k(),
                "universe": fam.universe(),
                "size": fam.len(),
                "ell": ell,
                "shadow_size": shadow.len(),
                "lovasz_bound": bound,
                "meets_bound": (shadow.len() as f64) >= bound - 1e-9,
            });
            emit(&cli.out, None, &doc)?;
            Ok(0)
        }
        Command::Bound { m, k, ell } => {
            let bound = lovasz_shadow_bound(m, k, ell)?;
            let x = binomial_inverse(m as f64, k)?;
            let doc = json!({
                "seed": seed,
                "m": m, "k": k, "ell": ell,
                "x": x,
                "bound": bound,
            });
            emit(&cli.out, None, &doc)?;
            Ok(0)
        }
        Command::Transform { graph, a1, a2 } => {
            let g = read_graph(&graph)?;
            let a1 = parse_ordered_vertices(&a1)?;
            let a2 = VertexSet::parse(&a2).map_err(|e| anyhow!("bad --a2: {e}"))?;
            let gp = regularize(&g, &a1, a2)?;
            let report = verify_regularization(&g, &gp, &a1, a2)?;
            let doc = json!({
                "seed": seed,
                "input_edges": g.edge_count(),
                "output_edges": gp.edge_count(),
                "output": to_graph6(&gp),
                "properties": report.properties.iter().map(|p| json!({
                    "name": p.name,
                    "passed": p.passed,
                    "detail": p.detail,
                })).collect::<Vec<_>>(),
                "all_passed": report.all_passed(),
            });
            emit(&cli.out, Some(&to_graph6(&gp)), &doc)?;
            Ok(0)
        }
        Command::Peel {
            graph,
            t,
            cliques,
            filtered,
        } => {
            let g = read_graph(&graph)?;
            let family = match cliques {
                Some(spec) => CliqueFamily::new(&g, t, parse_clique_list(&spec)?)?,
                None => {
                    let extracted = if filtered {
                        extract_clique_family(&g, t)
                    } else {
                        extract_clique_family_unfiltered(&g, t)
                    };
                    extracted.ok_or_else(|| anyhow!("no peelable clique family found"))?
                }
            };
            let trace = peel(&g, &family)?;
            let doc = json!({
                "seed": seed,
                "t": t,
                "cliques": family.cliques(),
                "lambda": trace.lambda,
                "xi": trace.xi(),
                "window": trace.window,
                "report": trace.text_report(),
                "trace": serde_json::to_value(&trace).expect("trace serializes"),
            });
            emit(&cli.out, None, &doc)?;
            Ok(0)
        }
        Command::Construct {
            matched_clique: matched,
            disjoint_cliques: disjoint,
            random_instance,
            upper_bound,
            counterexample,
            n,
            t,
        } => {
            let modes = [
                matched.is_some(),
                disjoint,
                random_instance,
                upper_bound,
                counterexample,
            ]
            .iter()
            .filter(|&&b| b)
            .count();
            if modes != 1 {
                bail!("pick exactly one construction mode");
            }
            if let Some(m) = matched {
                let g = matched_clique(m)?;
                let doc = json!({
                    "seed": seed,
                    "construction": "matched-clique",
                    "m": m,
                    "graph": to_graph6(&g),
                    "edges": g.edge_count(),
                    "triangles_per_vertex": g.triangle_degree(0),
                });
                emit(&cli.out, Some(&to_graph6(&g)), &doc)?;
                return Ok(0);
            }
            if counterexample {
                let t = parse_rational(&t.ok_or_else(|| anyhow!("--counterexample needs --t"))?)?;
                let report = counterexample_check(t)?;
                let doc = json!({
                    "seed": seed,
                    "construction": "counterexample-check",
                    "report": serde_json::to_value(&report).expect("report serializes"),
                });
                emit(&cli.out, None, &doc)?;
                return Ok(0);
            }
            let n = n.ok_or_else(|| anyhow!("this construction needs --n"))?;
            let t = t.ok_or_else(|| anyhow!("this construction needs --t"))?;
            if disjoint {
                let t: usize = t
                    .parse()
                    .map_err(|_| anyhow!("--disjoint-cliques needs integer t"))?;
                let g = disjoint_cliques(n, t)?;
                let doc = json!({
                    "seed": seed,
                    "construction": "disjoint-cliques",
                    "n": n, "t": t,
                    "graph": to_graph6(&g),
                    "edges": g.edge_count(),
                });
                emit(&cli.out, Some(&to_graph6(&g)), &doc)?;
                return Ok(0);
            }
            if upper_bound {
                let t = parse_rational(&t)?;
                let (edges, g) = construction_upper_bound(n, t)
                    .ok_or_else(|| anyhow!("no feasible block partition for n={n}"))?;
                let doc = json!({
                    "seed": seed,
                    "construction": "block-partition",
                    "n": n, "t": format_rational(t),
                    "graph": to_graph6(&g),
                    "edges": edges,
                });
                emit(&cli.out, Some(&to_graph6(&g)), &doc)?;
                return Ok(0);
            }
            // Random blocks-plus-boundary instance.
            let t: usize = t
                .parse()
                .map_err(|_| anyhow!("--random-instance needs integer t"))?;
            if t < 2 {
                bail!("--random-instance needs t >= 2");
            }
            let mut rng = rng_for_seed(seed);
            let inst = random_boundary_instance(&mut rng, n, t);
            let doc = json!({
                "seed": seed,
                "construction": "random-instance",
                "n": inst.graph.vertex_count(),
                "t": inst.t,
                "graph": to_graph6(&inst.graph),
                "cliques": inst.cliques,
                "edges": inst.graph.edge_count(),
            });
            emit(&cli.out, Some(&to_graph6(&inst.graph)), &doc)?;
            Ok(0)
        }
        Command::Verify { graph, t } => {
            let g = read_graph(&graph)?;
            let report = diagnostics::run_all(&g, t);
            let mut doc = serde_json::to_value(&report).expect("report serializes");
            doc.as_object_mut()
                .unwrap()
                .insert("seed".into(), json!(seed));
            emit(&cli.out, None, &doc)?;
            Ok(0)
        }
        Command::Bounds { t, lambda } => {
            let t_rat = parse_rational(&t)?;
            let t_f = search::rational_to_f64(t_rat);
            if t_f < 2.0 {
                bail!("--t must be at least 2");
            }
            let bounds = clique_count_bounds(t_f);
            let params = BoundsParams::new(t_f, lambda.unwrap_or(0));
            let plateau: Vec<serde_json::Value> = [1usize, 2, 7, 8]
                .iter()
                .map(|&f| json!({"f": f, "bound": plateau_length_bound(f, t_f)}))
                .collect();
            let doc = json!({
                "seed": seed,
                "t": format_rational(t_rat),
                "alpha": params.alpha,
                "theta": bounds.theta,
                "c": bounds.c,
                "lambda": lambda,
                "clique_count_upper": bounds.upper,
                "clique_count_lower": bounds.lower,
                "plateau_bounds": plateau,
            });
            emit(&cli.out, None, &doc)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
