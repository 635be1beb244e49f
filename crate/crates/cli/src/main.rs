//! Command-line front end: generate graphs, build and serialize oracles,
//! run query files, verify against exhaustive references, and benchmark.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ftso::dso::build_vc_dso;
use ftso::envelope::{Envelope, OraclePayload, PreserverPayload};
use ftso::gen;
use ftso::graph::{
    bfs_levels, format_graph, parse_failure_line, parse_graph, split_vertices, EdgeId, FailureSet,
    Graph,
};
use ftso::kpath::SolverConfig;
use ftso::preserver::{
    build_detour_oracle, build_preserver, preserver_size_formula, DetourBackend,
};
use ftso::reach::build_field_oracle;
use ftso::sampling_oracle::{build_sampling_oracle_with, r_count};
use ftso::tree_oracle::{build_tree_oracle_with_mode, tree_size_bound, QueryMode};
use ftso::vc::{
    build_kernel_oracle, build_subset_oracle, build_vctree_oracle, subset_store_bound, vc_solve,
    vctree_size_bound,
};
use ftso::verify::{run_verify, VerifyConfig, VERIFY_KINDS};

#[derive(Parser)]
#[command(
    name = "ftso",
    about = "Fault-tolerant sensitivity oracles for k-path, vertex cover, distances, and reachability"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph file from a seeded family.
    Gen(GenArgs),
    /// Build an oracle from a graph file and serialize it.
    Build(BuildArgs),
    /// Answer the queries in a failure file against a serialized oracle.
    Query(QueryArgs),
    /// Sweep seeded instances and diff an oracle kind against brute force.
    Verify(VerifyArgs),
    /// Measure build time, size, and query latency over a size grid.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Gnm,
    LayeredDag,
    StarForest,
    C4Pendant,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Vertices (gnm).
    #[arg(long, default_value_t = 10)]
    n: usize,
    /// Edges (gnm).
    #[arg(long, default_value_t = 20)]
    m: usize,
    #[arg(long, default_value_t = false)]
    directed: bool,
    /// Cover budget (star-forest builds k+1 stars).
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Failure bound (star-forest leaves per star).
    #[arg(long, default_value_t = 2)]
    f: usize,
    #[arg(long, default_value_t = 3)]
    layers: usize,
    #[arg(long, default_value_t = 2)]
    width: usize,
    #[arg(long, default_value_t = 0.4)]
    extra_prob: f64,
    #[arg(long, default_value_t = 0.5)]
    skip_prob: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    KpathTree,
    KpathSample,
    VcSubset,
    VcTree,
    VcKernel,
    VcDso,
    Preserver,
    Detour,
    Reach,
}

impl Kind {
    fn as_str(self) -> &'static str {
        match self {
            Kind::KpathTree => "kpath-tree",
            Kind::KpathSample => "kpath-sample",
            Kind::VcSubset => "vc-subset",
            Kind::VcTree => "vc-tree",
            Kind::VcKernel => "vc-kernel",
            Kind::VcDso => "vc-dso",
            Kind::Preserver => "preserver",
            Kind::Detour => "detour",
            Kind::Reach => "reach",
        }
    }

    /// Kinds whose parameter doubles under the vertex-split reduction.
    fn doubles_k(self) -> bool {
        matches!(
            self,
            Kind::KpathTree | Kind::KpathSample | Kind::Preserver | Kind::Detour
        )
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeFlag {
    PathDict,
    FailureDict,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BackendFlag {
    Bfs,
    Algebraic,
}

#[derive(Args)]
struct BuildArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    graph: PathBuf,
    /// Failure budget.
    #[arg(long, default_value_t = 1)]
    f: usize,
    /// Problem parameter (path vertices / cover size / stretch bound).
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Source vertex (preserver, detour).
    #[arg(long, default_value_t = 0)]
    s: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Turn vertex failures into edge failures by splitting every vertex
    /// first; path/stretch parameters double.
    #[arg(long, default_value_t = false)]
    vertex_faults: bool,
    /// Intersection strategy override for the k-path oracles.
    #[arg(long, value_enum)]
    mode: Option<ModeFlag>,
    /// Reachability backend for the detour oracle.
    #[arg(long, value_enum, default_value = "bfs")]
    backend: BackendFlag,
    #[arg(long)]
    out: PathBuf,
    /// Also write the preserver's kept edges as a plain id list.
    #[arg(long)]
    edges_out: Option<PathBuf>,
}

#[derive(Args)]
struct QueryArgs {
    /// Serialized oracle file.
    oracle: PathBuf,
    /// One query per line (see the README for per-kind line formats).
    queries: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Oracle kind, or "all".
    #[arg(long)]
    kind: String,
    /// Mandatory so verification runs are reproducible.
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 15)]
    instances: usize,
    #[arg(long, default_value_t = 10_000)]
    trials: usize,
    #[arg(long, default_value_t = 10)]
    build_seeds: usize,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    /// Size grid "n1xm1,n2xm2,...".
    #[arg(long)]
    sizes: String,
    #[arg(long, default_value_t = 1)]
    f: usize,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Queries measured per configuration.
    #[arg(long, default_value_t = 200)]
    queries: usize,
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Build(args) => cmd_build(args),
        Command::Query(args) => cmd_query(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bench(args) => cmd_bench(args),
    };
    if let Err(err) = result {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}

fn cmd_gen(args: GenArgs) -> Result<()> {
    let g = match args.family {
        Family::Gnm => gen::gnm(args.n, args.m, args.directed, args.seed)?,
        Family::LayeredDag => gen::layered_dag(
            args.layers,
            args.width,
            args.extra_prob,
            args.skip_prob,
            args.seed,
        )?,
        Family::StarForest => gen::star_forest(args.k, args.f),
        Family::C4Pendant => gen::c4_pendant(),
    };
    let text = format_graph(&g);
    match &args.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {path:?}"))?,
        None => print!("{text}"),
    }
    eprintln!(
        "generated {} graph: n={} m={}",
        if g.is_directed() { "directed" } else { "undirected" },
        g.vertex_count(),
        g.edge_count()
    );
    Ok(())
}

fn load_graph(path: &PathBuf) -> Result<Graph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {path:?}"))?;
    Ok(parse_graph(&text)?)
}

fn cmd_build(args: BuildArgs) -> Result<()> {
    let mut g = load_graph(&args.graph)?;
    let mut k = args.k;
    let mut s = args.s;
    if args.vertex_faults {
        if !matches!(
            args.kind,
            Kind::KpathTree | Kind::KpathSample | Kind::Preserver | Kind::Detour | Kind::Reach
        ) {
            bail!(
                "--vertex-faults is supported for kpath-tree, kpath-sample, preserver, detour, and reach"
            );
        }
        let (split, map) = split_vertices(&g);
        eprintln!(
            "vertex-fault mode: {} vertices split; failing original vertex v = edge id {} + v; \
             original edge i maps to arc id{}",
            map.original_n,
            map.arc_count,
            if g.is_directed() {
                " i".to_string()
            } else {
                "s 2i and 2i+1".to_string()
            }
        );
        g = split;
        if args.kind.doubles_k() {
            k = 2 * args.k;
        }
        s = 2 * args.s + 1; // out-copy of the source
    }
    let mode = args.mode.map(|m| match m {
        ModeFlag::PathDict => QueryMode::PathDictionary,
        ModeFlag::FailureDict => QueryMode::FailureDictionary,
    });

    let payload = match args.kind {
        Kind::KpathTree => {
            let solver = SolverConfig::default().with_seed(args.seed);
            let mode = mode.unwrap_or_else(|| QueryMode::auto(args.f, k));
            let t = build_tree_oracle_with_mode(&g, args.f, k, &solver, mode)?;
            eprintln!(
                "lookup tree: {} nodes (bound {}), exact build: {}",
                t.node_count(),
                tree_size_bound(args.f, k),
                t.exact
            );
            OraclePayload::KpathTree(t)
        }
        Kind::KpathSample => {
            let solver = SolverConfig::default().with_seed(args.seed);
            let o = build_sampling_oracle_with(&g, args.f, k, args.seed, &solver)?;
            eprintln!(
                "sampling oracle: r={} samples, {} distinct paths stored",
                o.r,
                o.paths.len()
            );
            OraclePayload::KpathSample(o)
        }
        Kind::VcSubset => {
            let o = build_subset_oracle(&g, args.f, k)?;
            eprintln!(
                "subset store: {} sets (bound {})",
                o.store_size(),
                subset_store_bound(args.f, k)
            );
            OraclePayload::VcSubset(o)
        }
        Kind::VcTree => {
            let o = build_vctree_oracle(&g, args.f, k)?;
            eprintln!(
                "lookup tree: {} nodes (bound {}), depth {}",
                o.node_count(),
                vctree_size_bound(args.f, k),
                o.depth()
            );
            OraclePayload::VcTree(o)
        }
        Kind::VcKernel => {
            let o = build_kernel_oracle(&g, args.f, k)?;
            eprintln!(
                "kernel: {} edges, k'={}, forced {:?}, global_no={}",
                o.kernel.kernel.edge_count(),
                o.kernel.k_prime,
                o.kernel.forced,
                o.kernel.global_no
            );
            OraclePayload::VcKernel(o)
        }
        Kind::VcDso => {
            let cover =
                vc_solve(&g, k).ok_or_else(|| anyhow!("graph has no vertex cover of size {k}"))?;
            let o = build_vc_dso(&g, &cover, args.f)?;
            eprintln!(
                "distance oracle: cover {:?}, {} compressed vertices, {} arcs",
                cover,
                o.h_vertex_count(),
                o.h_edge_count()
            );
            OraclePayload::VcDso(o)
        }
        Kind::Preserver => {
            let p = build_preserver(&g, s, args.f, k)?;
            eprintln!(
                "preserver: kept {}/{} edges (size formula {})",
                p.kept.len(),
                g.edge_count(),
                preserver_size_formula(args.f, k, g.vertex_count())
            );
            if let Some(path) = &args.edges_out {
                let mut text = String::new();
                for e in &p.kept {
                    writeln!(text, "{e}").unwrap();
                }
                std::fs::write(path, text).with_context(|| format!("writing {path:?}"))?;
            }
            OraclePayload::Preserver(PreserverPayload {
                graph: g.clone(),
                preserver: p,
            })
        }
        Kind::Detour => {
            let backend = match args.backend {
                BackendFlag::Bfs => DetourBackend::Bfs,
                BackendFlag::Algebraic => DetourBackend::Algebraic { seed: args.seed },
            };
            let o = build_detour_oracle(&g, s, args.f, k, backend)?;
            eprintln!("detour oracle: {} signatures, source {}", o.entries.len(), s);
            OraclePayload::Detour(o)
        }
        Kind::Reach => {
            let o = build_field_oracle(&g, args.seed)?;
            eprintln!("reachability oracle: {}x{} inverse stored", o.n, o.n);
            OraclePayload::Reach(o)
        }
    };
    Envelope::new(payload).save(&args.out)?;
    eprintln!("wrote {} oracle to {:?}", args.kind.as_str(), args.out);
    Ok(())
}

fn cmd_query(args: QueryArgs) -> Result<()> {
    let env = Envelope::load(&args.oracle)?;
    let text = std::fs::read_to_string(&args.queries)
        .with_context(|| format!("reading {:?}", args.queries))?;
    for (idx, line) in text.lines().enumerate() {
        let answer =
            answer_line(&env.payload, line).with_context(|| format!("query line {}", idx + 1))?;
        println!("{answer}");
    }
    Ok(())
}

/// Splits a query line into leading vertex arguments and the failure set.
fn split_query(
    line: &str,
    vertex_args: usize,
    edge_bound: usize,
    f: usize,
) -> Result<(Vec<usize>, FailureSet)> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.len() < vertex_args {
        bail!("expected at least {vertex_args} vertex ids");
    }
    let verts = tokens[..vertex_args]
        .iter()
        .map(|t| t.parse::<usize>().map_err(|_| anyhow!("bad vertex id '{t}'")))
        .collect::<Result<Vec<_>>>()?;
    let rest = tokens[vertex_args..].join(" ");
    let fails = parse_failure_line(&rest, edge_bound, f)?;
    Ok((verts, fails))
}

fn fmt_dist(d: Option<usize>) -> String {
    match d {
        Some(d) => d.to_string(),
        None => "INF".into(),
    }
}

fn fmt_witness(p: &ftso::kpath::KPath) -> String {
    format!(
        "YES {}",
        p.vertices
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    )
}

fn yes_no(b: bool) -> String {
    if b {
        "YES".into()
    } else {
        "NO".into()
    }
}

fn answer_line(payload: &OraclePayload, line: &str) -> Result<String> {
    Ok(match payload {
        OraclePayload::KpathTree(o) => {
            let (_, fails) = split_query(line, 0, o.edge_count, o.f)?;
            o.query(&fails)?.map(fmt_witness).unwrap_or_else(|| "NO".into())
        }
        OraclePayload::KpathSample(o) => {
            let (_, fails) = split_query(line, 0, o.edge_count, o.f)?;
            o.query(&fails)?.map(fmt_witness).unwrap_or_else(|| "NO".into())
        }
        OraclePayload::VcSubset(o) => {
            let (_, fails) = split_query(line, 0, o.edge_count, o.f)?;
            yes_no(o.query(&fails)?)
        }
        OraclePayload::VcTree(o) => {
            let (_, fails) = split_query(line, 0, o.edge_count, o.f)?;
            yes_no(o.query(&fails)?)
        }
        OraclePayload::VcKernel(o) => {
            let (_, fails) = split_query(line, 0, o.edge_count, o.kernel.f)?;
            yes_no(o.query(&fails)?)
        }
        OraclePayload::VcDso(o) => {
            let (v, fails) = split_query(line, 2, o.edge_count, o.f)?;
            fmt_dist(o.query(v[0], v[1], &fails)?)
        }
        OraclePayload::Preserver(pl) => {
            let p = &pl.preserver;
            let (v, fails) = split_query(line, 1, pl.graph.edge_count(), p.f)?;
            if v[0] >= pl.graph.vertex_count() {
                bail!("vertex {} out of range", v[0]);
            }
            let kept: std::collections::HashSet<EdgeId> = p.kept.iter().copied().collect();
            let mut removed: std::collections::HashSet<EdgeId> = (0..pl.graph.edge_count())
                .map(EdgeId)
                .filter(|e| !kept.contains(e))
                .collect();
            removed.extend(fails.as_set().iter().copied());
            let levels = bfs_levels(&pl.graph.without(&removed), p.s);
            fmt_dist(levels.level[v[0]])
        }
        OraclePayload::Detour(o) => {
            // the detour oracle accepts failure sets of any size
            let (v, fails) = split_query(line, 1, o.edge_count, usize::MAX)?;
            if v[0] >= o.entries[0].aux.base_n {
                bail!("vertex {} out of range", v[0]);
            }
            yes_no(o.query(v[0], &fails)?)
        }
        OraclePayload::Reach(o) => {
            let (v, fails) = split_query(line, 2, o.edge_arcs.len(), usize::MAX)?;
            yes_no(o.query_reach(v[0], v[1], &fails)?)
        }
    })
}

fn cmd_verify(args: VerifyArgs) -> Result<()> {
    let cfg = VerifyConfig {
        instances: args.instances,
        seed: args.seed,
        trials: args.trials,
        build_seeds: args.build_seeds,
    };
    let kinds: Vec<&str> = if args.kind == "all" {
        VERIFY_KINDS.to_vec()
    } else {
        vec![args.kind.as_str()]
    };
    let mut failed = false;
    for kind in kinds {
        let start = Instant::now();
        let report = run_verify(kind, &cfg)?;
        let status = if report.mismatches == 0 { "ok" } else { "FAIL" };
        println!(
            "{kind}: {status} ({} instances, {} queries, {} mismatches, {:.1}s)",
            report.instances,
            report.queries,
            report.mismatches,
            start.elapsed().as_secs_f64()
        );
        for note in &report.notes {
            if !note.starts_with("instance ") {
                println!("  note: {note}");
            }
        }
        for sample in report.samples.iter().take(5) {
            println!("  mismatch: {sample}");
        }
        failed |= report.mismatches > 0;
    }
    if failed {
        bail!("verification found mismatches");
    }
    Ok(())
}

fn parse_sizes(spec: &str) -> Result<Vec<(usize, usize)>> {
    spec.split(',')
        .map(|tok| {
            let (n, m) = tok
                .trim()
                .split_once(['x', 'X'])
                .ok_or_else(|| anyhow!("size '{tok}' is not of the form NxM"))?;
            Ok((n.trim().parse()?, m.trim().parse()?))
        })
        .collect()
}

fn cmd_bench(args: BenchArgs) -> Result<()> {
    let sizes = parse_sizes(&args.sizes)?;
    let (f, k) = (args.f, args.k);
    println!("kind\tn\tm\tf\tk\tbuild_ms\tbytes\tstruct_size\tmean_query_us\tbound");
    for (want_n, want_m) in sizes {
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        let g = match args.kind {
            Kind::Preserver | Kind::Detour => {
                let width = (want_n / 4).max(2);
                let layers = (want_n.saturating_sub(1) / width).max(1);
                gen::layered_dag(layers, width, 0.4, 0.4, args.seed)?
            }
            Kind::VcSubset | Kind::VcTree | Kind::VcKernel | Kind::VcDso => gen::gnm(
                want_n,
                want_m.min(want_n * (want_n - 1) / 2),
                false,
                args.seed,
            )?,
            _ => gen::gnm(want_n, want_m.min(want_n * (want_n - 1)), true, args.seed)?,
        };
        let (n, m) = (g.vertex_count(), g.edge_count());
        let start = Instant::now();
        let (payload, struct_size, bound) = match args.kind {
            Kind::KpathTree => {
                let t = build_tree_oracle_with_mode(
                    &g,
                    f,
                    k,
                    &SolverConfig::default().with_seed(args.seed),
                    QueryMode::auto(f, k),
                )?;
                let size = t.node_count() as u64;
                (OraclePayload::KpathTree(t), size, tree_size_bound(f, k))
            }
            Kind::KpathSample => {
                let o = build_sampling_oracle_with(
                    &g,
                    f,
                    k,
                    args.seed,
                    &SolverConfig::default().with_seed(args.seed),
                )?;
                let size = o.paths.len() as u64;
                let bound = r_count(f, k, n)? * k as u64;
                (OraclePayload::KpathSample(o), size, bound)
            }
            Kind::VcSubset => {
                let o = build_subset_oracle(&g, f, k)?;
                let size = o.store_size() as u64;
                (OraclePayload::VcSubset(o), size, subset_store_bound(f, k))
            }
            Kind::VcTree => {
                let o = build_vctree_oracle(&g, f, k)?;
                let size = o.node_count() as u64;
                (OraclePayload::VcTree(o), size, vctree_size_bound(f, k))
            }
            Kind::VcKernel => {
                let o = build_kernel_oracle(&g, f, k)?;
                let size = o.kernel.kernel.edge_count() as u64;
                let kp = o.kernel.k_prime as u64;
                let bound = f as u64 + kp * (f as u64 + kp);
                (OraclePayload::VcKernel(o), size, bound)
            }
            Kind::VcDso => {
                // grow the budget until a cover exists so every size row runs
                let cover = (k..=n)
                    .find_map(|k| vc_solve(&g, k))
                    .expect("the whole vertex set is a cover");
                let c = cover.len() as u64;
                let o = build_vc_dso(&g, &cover, f)?;
                let size = o.h_vertex_count() as u64;
                (OraclePayload::VcDso(o), size, c + f as u64 * c * c + c * c)
            }
            Kind::Preserver => {
                let p = build_preserver(&g, 0, f, k)?;
                let size = p.kept.len() as u64;
                let bound = preserver_size_formula(f, k, n);
                (
                    OraclePayload::Preserver(PreserverPayload {
                        graph: g.clone(),
                        preserver: p,
                    }),
                    size,
                    bound,
                )
            }
            Kind::Detour => {
                let o = build_detour_oracle(&g, 0, f, k, DetourBackend::Bfs)?;
                let size: u64 = o.entries.iter().map(|e| e.aux.edges.len() as u64).sum();
                let bound = 2u64.saturating_pow(k as u32)
                    * (k.max(1) as u64).pow(2)
                    * (n as u64).pow(2);
                (OraclePayload::Detour(o), size, bound)
            }
            Kind::Reach => {
                let o = build_field_oracle(&g, args.seed)?;
                let size = (o.n * o.n) as u64;
                (OraclePayload::Reach(o), size, (n as u64).pow(2))
            }
        };
        let build_ms = start.elapsed().as_secs_f64() * 1e3;
        let bytes = Envelope::new(payload.clone()).to_json()?.len();

        // query latency over seeded random failure sets of size f
        let mut queries = Vec::with_capacity(args.queries);
        for _ in 0..args.queries {
            let mut ids = std::collections::HashSet::new();
            while ids.len() < f.min(m) {
                ids.insert(EdgeId(rng.gen_range(0..m.max(1))));
            }
            let fails = FailureSet::from_edges(ids, f.max(1)).expect("within capacity");
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            queries.push((u, v, fails));
        }
        let start = Instant::now();
        for (u, v, fails) in &queries {
            match &payload {
                OraclePayload::KpathTree(o) => {
                    o.query(fails)?;
                }
                OraclePayload::KpathSample(o) => {
                    o.query(fails)?;
                }
                OraclePayload::VcSubset(o) => {
                    o.query(fails)?;
                }
                OraclePayload::VcTree(o) => {
                    o.query(fails)?;
                }
                OraclePayload::VcKernel(o) => {
                    o.query(fails)?;
                }
                OraclePayload::VcDso(o) => {
                    o.query(*u, *v, fails)?;
                }
                OraclePayload::Preserver(pl) => {
                    let kept: std::collections::HashSet<EdgeId> =
                        pl.preserver.kept.iter().copied().collect();
                    let mut removed: std::collections::HashSet<EdgeId> =
                        (0..pl.graph.edge_count())
                            .map(EdgeId)
                            .filter(|e| !kept.contains(e))
                            .collect();
                    removed.extend(fails.as_set().iter().copied());
                    bfs_levels(&pl.graph.without(&removed), pl.preserver.s);
                }
                OraclePayload::Detour(o) => {
                    o.query(*u, fails)?;
                }
                OraclePayload::Reach(o) => {
                    o.query_reach(*u, *v, fails)?;
                }
            }
        }
        let mean_us = start.elapsed().as_secs_f64() * 1e6 / args.queries.max(1) as f64;
        println!(
            "{}\t{n}\t{m}\t{f}\t{k}\t{build_ms:.2}\t{bytes}\t{struct_size}\t{mean_us:.2}\t{bound}",
            args.kind.as_str()
        );
    }
    Ok(())
}
