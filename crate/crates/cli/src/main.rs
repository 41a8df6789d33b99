//! Batch command-line surface over the subtree toolkit: profiles, local
//! profiles, edge-addition scans, exhaustive searches, family
//! constructors, and trend tables. Machine-readable results go to stdout;
//! diagnostics go to stderr.

use std::fs;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use mso_core::engine::Engine;
use mso_core::families::{self, BroomSpec};
use mso_core::graph::graph6::{parse_graph6, to_graph6};
use mso_core::graph::{Edge, MultiGraph};
use mso_core::parallel::with_workers;
use mso_core::search;

#[derive(Parser)]
#[command(
    name = "mso",
    version,
    about = "Exact subtree polynomials, mean subtree orders, and edge-addition searches"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Subtree profile of a graph: polynomial, S(1), S'(1), mean, density,
    /// spanning count and proportion.
    Compute(ComputeArgs),
    /// Local profile of the subtrees through a vertex or an edge.
    Local(LocalArgs),
    /// Exact mean shift of every possible edge addition on one graph.
    Scan(ScanArgs),
    /// Exhaustive scans over every connected graph (or tree) of an order.
    Search(SearchArgs),
    /// Check a single graph against one of the verified statements.
    Verify(VerifyArgs),
    /// Emit a named family graph.
    Family(FamilyArgs),
    /// Asymptotic trend tables (exact rows, CSV or JSON).
    Trends(TrendsArgs),
}

#[derive(Args)]
struct InputArgs {
    /// graph6 string (simple graphs)
    #[arg(long, value_name = "G6")]
    g6: Option<String>,
    #[arg(
        long,
        value_name = "JSON",
        help = "multigraph JSON: {\"n\":N,\"edges\":[[u,v,mult],..]}"
    )]
    json: Option<String>,
    /// family spec: path:N, cycle:N, complete:N, kbip:A:B, book:N (alias
    /// hn:N), broom:N:S (alias tn:N:S), gn:N:S
    #[arg(long, value_name = "SPEC")]
    family: Option<String>,
}

impl InputArgs {
    fn graph(&self) -> Result<(MultiGraph, String)> {
        match (&self.g6, &self.json, &self.family) {
            (Some(s), None, None) => Ok((parse_graph6(s)?, s.clone())),
            (None, Some(s), None) => Ok((MultiGraph::from_json(s)?, "json".to_string())),
            (None, None, Some(spec)) => Ok((parse_family(spec)?, spec.clone())),
            _ => bail!("provide exactly one of --g6, --json, --family"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Decimal digits in rendered values.
    #[arg(long, default_value = "6")]
    digits: usize,
    /// Write the primary output to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct LocalArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Anchor vertex.
    #[arg(long, conflicts_with = "edge")]
    vertex: Option<usize>,
    /// Anchor edge "u,v" or "u,v,copy".
    #[arg(long)]
    edge: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, default_value = "6")]
    digits: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ScanArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, default_value = "6")]
    digits: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SearchMode {
    /// Count graphs where some edge addition lowers the mean.
    Conjecture1,
    /// Check that some edge addition raises the mean on non-complete graphs.
    Conjecture2,
    /// Check the deletion-lemma witness edge on every graph.
    Lemma4,
    /// Check that doubling the witness edge raises the mean.
    Proposition,
    /// Check the pendant-path edge addition on every tree.
    TreeTheorem,
}

#[derive(Args)]
struct SearchArgs {
    /// Graph order to scan.
    #[arg(long)]
    order: usize,
    #[arg(long, value_enum)]
    mode: SearchMode,
    /// Write the JSON report here (witnesses land next to it as .g6).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Cap the number of parallel workers.
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum)]
    mode: VerifyMode,
    #[arg(long, default_value = "6")]
    digits: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyMode {
    Lemma4,
    Proposition,
    TreeTheorem,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family spec, as for --family elsewhere.
    #[arg(long, value_name = "SPEC")]
    family: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

// variant names define the CLI tokens broom-gap / path-cycle-gap / hn-gap
#[allow(clippy::enum_variant_names)]
#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TrendTable {
    /// Density drop when a double broom's endpoints are joined.
    BroomGap,
    /// Density gap between the cycle and the path.
    PathCycleGap,
    /// Mean gap between K_{2,n-2} and the book graph.
    HnGap,
}

#[derive(Args)]
struct TrendsArgs {
    #[arg(long, value_enum)]
    table: TrendTable,
    /// Orders: comma-separated values and inclusive ranges, e.g.
    /// "1024,2048,4096" or "8..14".
    #[arg(long, value_name = "LIST")]
    n: String,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long, default_value = "6")]
    digits: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    workers: Option<usize>,
}

fn parse_family(spec: &str) -> Result<MultiGraph> {
    let parts: Vec<&str> = spec.split(':').collect();
    let nums: Result<Vec<usize>> = parts[1..]
        .iter()
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| anyhow!("invalid number {p:?} in family spec {spec:?}"))
        })
        .collect();
    let nums = nums?;
    let arity = |k: usize| -> Result<()> {
        if nums.len() != k {
            bail!(
                "family {:?} takes {k} parameter(s), got {}",
                parts[0],
                nums.len()
            );
        }
        Ok(())
    };
    let g = match parts[0] {
        "path" => {
            arity(1)?;
            families::make_path(nums[0])?
        }
        "cycle" => {
            arity(1)?;
            families::make_cycle(nums[0])?
        }
        "complete" => {
            arity(1)?;
            families::make_complete(nums[0])?
        }
        "kbip" => {
            arity(2)?;
            families::make_complete_bipartite(nums[0], nums[1])?
        }
        "book" | "hn" => {
            arity(1)?;
            families::make_book(nums[0])?
        }
        "broom" | "tn" => {
            arity(2)?;
            families::make_double_broom(BroomSpec::new(nums[0], nums[1])?)?
        }
        "gn" => {
            arity(2)?;
            families::make_broom_cycle(BroomSpec::new(nums[0], nums[1])?)?.0
        }
        other => bail!(
            "unknown family {other:?}; known: path, cycle, complete, kbip, book/hn, broom/tn, gn"
        ),
    };
    Ok(g)
}

fn parse_order_list(list: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for part in list.split(',') {
        let part = part.trim();
        if let Some((a, b)) = part.split_once("..") {
            let a: usize = a.parse().context("range start")?;
            let b: usize = b.parse().context("range end")?;
            if a > b {
                bail!("empty range {part:?}");
            }
            out.extend(a..=b);
        } else {
            out.push(part.parse().with_context(|| format!("order {part:?}"))?);
        }
    }
    Ok(out)
}

fn parse_edge(text: &str) -> Result<Edge> {
    let nums: Result<Vec<usize>> = text
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| anyhow!("invalid edge component {p:?}"))
        })
        .collect();
    let nums = nums?;
    match nums.as_slice() {
        [u, v] => Ok(Edge::new(*u, *v, 0)),
        [u, v, c] => Ok(Edge::new(*u, *v, *c)),
        _ => bail!("edge must be u,v or u,v,copy"),
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, content).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{content}"),
    }
    Ok(())
}

fn run_compute(args: ComputeArgs) -> Result<()> {
    let (g, label) = args.input.graph()?;
    let engine = Engine::new();
    let profile = engine.profile(&g)?;
    let d = args.digits;
    let content = match args.format {
        Format::Json => {
            let mut value = serde_json::to_value(&*profile)?;
            let obj = value.as_object_mut().expect("profile object");
            obj.insert("n".into(), json!(g.order()));
            obj.insert("input".into(), json!(label));
            obj.insert("mean_decimal".into(), json!(profile.mean.to_decimal(d)));
            obj.insert(
                "density_decimal".into(),
                json!(profile.density.to_decimal(d)),
            );
            obj.insert(
                "spanning_proportion_decimal".into(),
                json!(profile.spanning_proportion.to_decimal(d)),
            );
            serde_json::to_string_pretty(&value)? + "\n"
        }
        Format::Text => format!(
            "graph: {label} (n={}, {} edges)\n\
             S(x) = {}\n\
             S(1) = {}\n\
             S'(1) = {}\n\
             mu = {} = {}\n\
             Den = {} = {}\n\
             spanning trees = {}\n\
             P(G) = {} = {}\n",
            g.order(),
            g.edge_count(),
            profile.poly,
            profile.total,
            profile.weight,
            profile.mean,
            profile.mean.to_decimal(d),
            profile.density,
            profile.density.to_decimal(d),
            profile.spanning_count,
            profile.spanning_proportion,
            profile.spanning_proportion.to_decimal(d),
        ),
        Format::Csv => bail!("compute does not emit CSV; use text or json"),
    };
    emit(&args.out, &content)
}

fn run_local(args: LocalArgs) -> Result<()> {
    let (g, label) = args.input.graph()?;
    let engine = Engine::new();
    let (local, anchor_label) = match (args.vertex, &args.edge) {
        (Some(v), None) => (engine.local_vertex(&g, v)?, format!("vertex {v}")),
        (None, Some(e)) => {
            let edge = parse_edge(e)?;
            (engine.local_edge(&g, edge)?, format!("edge {edge}"))
        }
        _ => bail!("provide exactly one of --vertex, --edge"),
    };
    let d = args.digits;
    let content = match args.format {
        Format::Json => {
            let mut value = serde_json::to_value(&local)?;
            let obj = value.as_object_mut().expect("local profile object");
            obj.insert("n".into(), json!(g.order()));
            obj.insert("input".into(), json!(label));
            obj.insert("mean_decimal".into(), json!(local.mean.to_decimal(d)));
            obj.insert("density_decimal".into(), json!(local.density.to_decimal(d)));
            serde_json::to_string_pretty(&value)? + "\n"
        }
        Format::Text => format!(
            "graph: {label} (n={}), anchor: {anchor_label}\n\
             S(x) = {}\n\
             S(1) = {}\n\
             S'(1) = {}\n\
             mu = {} = {}\n\
             Den = {} = {}\n",
            g.order(),
            local.poly,
            local.total(),
            local.weight(),
            local.mean,
            local.mean.to_decimal(d),
            local.density,
            local.density.to_decimal(d),
        ),
        Format::Csv => bail!("local does not emit CSV; use text or json"),
    };
    emit(&args.out, &content)
}

fn run_scan(args: ScanArgs) -> Result<()> {
    let (g, label) = args.input.graph()?;
    let engine = Engine::new();
    let scan = search::scan_edge_additions(&engine, &g)?;
    let d = args.digits;
    let content = match args.format {
        Format::Json => serde_json::to_string_pretty(&scan)? + "\n",
        Format::Text => {
            let mut text = format!(
                "graph: {label} ({}), base mean {} = {}\n",
                scan.graph6,
                scan.base_mean,
                scan.base_mean.to_decimal(d)
            );
            for pair in &scan.per_pair {
                text.push_str(&format!(
                    "add {},{}: mean {} = {}, delta {} = {}\n",
                    pair.u,
                    pair.v,
                    pair.new_mean,
                    pair.new_mean.to_decimal(d),
                    pair.delta,
                    pair.delta.to_decimal(d),
                ));
            }
            text.push_str(&format!(
                "increases: {}, decreases: {}\n",
                scan.any_increase, scan.any_decrease
            ));
            text
        }
        Format::Csv => bail!("scan does not emit CSV; use text or json"),
    };
    emit(&args.out, &content)
}

fn run_search(args: SearchArgs) -> Result<()> {
    let engine = Engine::new();
    let report = with_workers(args.workers, || match args.mode {
        SearchMode::Conjecture1 => search::find_decreasing_counterexamples(&engine, args.order),
        SearchMode::Conjecture2 => search::verify_increasing_addition(&engine, args.order),
        SearchMode::Lemma4 => search::verify_edge_deletion(&engine, args.order),
        SearchMode::Proposition => search::verify_parallel_edge(&engine, args.order),
        SearchMode::TreeTheorem => search::verify_tree_construction(&engine, args.order),
    })?;
    eprintln!("search finished in {} ms", report.elapsed_ms);
    if let Some(path) = &args.out {
        search::persist_report(&report, path)?;
        eprintln!(
            "report written to {}, witnesses to {}",
            path.display(),
            search::witness_path(path).display()
        );
    }
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        _ => println!("{}", report.summary()),
    }
    Ok(())
}

fn run_verify(args: VerifyArgs) -> Result<()> {
    let (g, label) = args.input.graph()?;
    let engine = Engine::new();
    let d = args.digits;
    match args.mode {
        VerifyMode::Lemma4 => {
            let w = search::edge_deletion_witness(&engine, &g)?;
            println!(
                "{label}: edge {} has mu(G,e) = {} = {} > mu(G) = {} = {} > mu(G-e) = {} = {}",
                w.edge,
                w.edge_mean,
                w.edge_mean.to_decimal(d),
                w.mean,
                w.mean.to_decimal(d),
                w.deleted_mean,
                w.deleted_mean.to_decimal(d),
            );
        }
        VerifyMode::Proposition => {
            let w = search::parallel_edge_increase(&engine, &g)?;
            println!(
                "{label}: doubling {} raises the mean from {} = {} to {} = {}",
                w.edge,
                w.mean_before,
                w.mean_before.to_decimal(d),
                w.mean_after,
                w.mean_after.to_decimal(d),
            );
        }
        VerifyMode::TreeTheorem => {
            let c = search::tree_construction_edge(&g)?;
            let before = mso_core::engine::tree_subtree_polynomial(&g)?.mean;
            let after = engine.profile(&c.augmented)?.mean.clone();
            println!(
                "{label}: branch vertex {}, joining {} and {} raises the mean from {} = {} to {} = {}",
                c.branch_vertex,
                c.join.0,
                c.join.1,
                before,
                before.to_decimal(d),
                after,
                after.to_decimal(d),
            );
        }
    }
    Ok(())
}

fn run_family(args: FamilyArgs) -> Result<()> {
    let g = parse_family(&args.family)?;
    let content = match args.format {
        Format::Json => g.to_json() + "\n",
        Format::Text => {
            if g.is_simple() && g.order() <= 62 {
                to_graph6(&g)? + "\n"
            } else {
                g.to_json() + "\n"
            }
        }
        Format::Csv => bail!("family does not emit CSV; use text or json"),
    };
    emit(&args.out, &content)
}

fn run_trends(args: TrendsArgs) -> Result<()> {
    let orders = parse_order_list(&args.n)?;
    let engine = Engine::new();
    let rows = with_workers(args.workers, || match args.table {
        TrendTable::BroomGap => families::density_gap_table(&orders),
        TrendTable::PathCycleGap => families::path_cycle_gap_table(&orders),
        TrendTable::HnGap => families::book_gap_table(&orders, &engine),
    })?;
    let content = match args.format {
        Format::Csv | Format::Text => families::rows_to_csv(&rows, args.digits),
        Format::Json => {
            serde_json::to_string_pretty(&families::rows_to_json(&rows, args.digits))? + "\n"
        }
    };
    emit(&args.out, &content)
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute(args) => run_compute(args),
        Command::Local(args) => run_local(args),
        Command::Scan(args) => run_scan(args),
        Command::Search(args) => run_search(args),
        Command::Verify(args) => run_verify(args),
        Command::Family(args) => run_family(args),
        Command::Trends(args) => run_trends(args),
    };
    if let Err(err) = outcome {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}
