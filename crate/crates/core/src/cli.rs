//! The `critgroup` command line.
//!
//! Exit codes: 0 success, 1 usage, 2 malformed input or a failed check,
//! 3 input the operation cannot handle (e.g. a disconnected graph).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::collapsed::{
    collapsed_values, crt_family, spectral_norm_estimate, spread_witness, CollapseWitness, CollapsedReport, NormBound,
};
use crate::constructions::{reduce_to_string_with, MarkedGraph, ThickenOrder};
use crate::error::{Error, ErrorKind};
use crate::graph::{GraphDocument, Multigraph};
use crate::group::{
    chain_graph, chain_pair_order_formula, pairing_self, ChainTarget, GroupStructure, LaplacianCokernel,
};
use crate::linalg::IntMatrix;
use crate::search::{cyclic_without_orders, exponent_gaps, max_collapsed, SearchOutcome};
use crate::suites::{Suite, SuiteOptions, SuiteReport};

/// Environment variable overriding the number of worker threads.
pub const THREADS_ENV: &str = "CRITGROUP_THREADS";

#[derive(Parser, Debug)]
#[command(name = "critgroup", version, about = "Critical groups, vertex pair orders and collapsed values")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariant factors of the critical group.
    Group { graph: PathBuf },
    /// Order of the pair (i, j) and its marking. Vertices are 1-based.
    PairOrder { graph: PathBuf, i: usize, j: usize },
    /// Self-pairing of the class of e_i - e_j, in [0, 1).
    Pairing { graph: PathBuf, i: usize, j: usize },
    /// Reduce the marked pair (i, j) to a string of dipoles.
    Reduce {
        graph: PathBuf,
        i: usize,
        j: usize,
        /// Thicken edge bundles in reverse order.
        #[arg(long)]
        reverse: bool,
        /// Print the marked graph after every step.
        #[arg(long)]
        trace: bool,
    },
    /// Apply a marked-graph construction and print the resulting marked graph.
    Construct {
        #[command(subcommand)]
        op: ConstructOp,
    },
    /// Whether a matrix, or the Laplacian of a graph, is spread.
    Spread {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Sign::Negative)]
        sign: Sign,
    },
    /// Collapsed values of a matrix, or of the Laplacian of a graph.
    Collapsed {
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lo: Option<BigInt>,
        #[arg(long, allow_hyphen_values = true)]
        hi: Option<BigInt>,
        /// Laplacian sign for graph input.
        #[arg(long, value_enum, default_value_t = Sign::Positive)]
        sign: Sign,
        /// Print a witness for every collapsed value.
        #[arg(long)]
        witnesses: bool,
    },
    /// Chain graph on the given chain lengths with its closed-form orders.
    Chain {
        #[arg(required = true)]
        lengths: Vec<usize>,
    },
    /// The 2x2 CRT family for a list of distinct primes.
    Gp {
        #[arg(required = true)]
        primes: Vec<u64>,
    },
    /// Run a verification suite, or `all`.
    Verify {
        suite: String,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, default_value_t = SuiteOptions::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = SuiteOptions::default().samples)]
        samples: usize,
    },
    /// Exhaustive searches over small graphs.
    Search {
        #[command(subcommand)]
        what: SearchCmd,
    },
}

#[derive(Subcommand, Debug)]
enum ConstructOp {
    /// Attach a connected graph by identifying its vertex AT with ATTACH.
    AddGraph {
        #[command(flatten)]
        src: MarkedSource,
        other: PathBuf,
        attach: usize,
        at: usize,
    },
    /// Identify two non-adjacent vertices of equal weight.
    Glue {
        #[command(flatten)]
        src: MarkedSource,
        a: usize,
        b: usize,
    },
    /// Replace the edges v-u by a chain across their weight gap.
    Thicken {
        #[command(flatten)]
        src: MarkedSource,
        v: usize,
        u: usize,
    },
    /// Delete every edge joining two vertices of equal weight.
    RemoveEqual {
        #[command(flatten)]
        src: MarkedSource,
    },
    /// Add C parallel edges between equal-weight vertices K and L.
    AddEdges {
        #[command(flatten)]
        src: MarkedSource,
        k: usize,
        l: usize,
        c: u32,
    },
    /// Subdivide every edge into B edges.
    Subdivide {
        #[command(flatten)]
        src: MarkedSource,
        b: u32,
    },
    /// Glue the high end of the first to the low end of the second.
    Coalesce {
        #[command(flatten)]
        src: MarkedSource,
        other: PathBuf,
        /// Marked pair of the second graph if it has no `w` lines.
        #[arg(long, num_args = 2, value_names = ["I", "J"])]
        other_pair: Option<Vec<usize>>,
    },
}

#[derive(clap::Args, Debug)]
struct MarkedSource {
    /// Marked graph, or a plain graph together with --pair.
    marked: PathBuf,
    /// Compute the marking of this pair instead of reading `w` lines.
    #[arg(long, num_args = 2, value_names = ["I", "J"])]
    pair: Option<Vec<usize>>,
}

#[derive(Subcommand, Debug)]
enum SearchCmd {
    /// Graphs in which no pair attains the exponent of the group.
    Exponent {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        max_mult: u32,
        #[arg(long, default_value_t = 5)]
        limit: usize,
    },
    /// Graphs with a cyclic group of given order avoiding given pair orders.
    Cyclic {
        #[arg(long, default_value_t = BigInt::from(12))]
        order: BigInt,
        #[arg(long, value_delimiter = ',', default_values_t = [BigInt::from(2), BigInt::from(3)])]
        avoid: Vec<BigInt>,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        max_mult: u32,
        #[arg(long, default_value_t = 5)]
        limit: usize,
    },
    /// Most collapsed values among simple graphs on N vertices.
    MaxCollapsed {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        limit: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Sign {
    /// D - A, positive semidefinite.
    Positive,
    /// A - D.
    Negative,
}

/// Failure of a command, with its exit code.
#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(PathBuf, std::io::Error),
    Usage(String),
    /// A verification ran and found disagreements; the report is printed.
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Out = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn load_graph(path: &Path) -> Result<Multigraph, Failure> {
    Ok(read(path)?.parse()?)
}

enum Input {
    Graph(Multigraph),
    Matrix(IntMatrix),
}

/// A matrix file starts with `m`, a graph file with `n`.
fn load_input(path: &Path) -> Result<Input, Failure> {
    let text = read(path)?;
    let first = text.lines().map(|l| l.split('#').next().unwrap().trim()).find(|l| !l.is_empty());
    match first.and_then(|l| l.split_whitespace().next()) {
        Some("m") => Ok(Input::Matrix(text.parse()?)),
        Some("n") => Ok(Input::Graph(text.parse()?)),
        Some(_) => Err(Error::parse(1, "expected a graph (`n ...`) or matrix (`m ...`) header").into()),
        None => Err(Error::EmptyInput.into()),
    }
}

fn input_matrix(input: Input, sign: Sign) -> IntMatrix {
    match (input, sign) {
        (Input::Matrix(m), _) => m,
        (Input::Graph(g), Sign::Positive) => g.psd_laplacian(),
        (Input::Graph(g), Sign::Negative) => g.laplacian(),
    }
}

/// Converts a 1-based vertex argument.
fn vertex(v: usize, n: usize) -> Result<usize, Failure> {
    if v == 0 || v > n {
        return Err(Failure::Usage(format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

fn load_marked(src: &MarkedSource) -> Result<MarkedGraph, Failure> {
    marked_from(&src.marked, src.pair.as_deref())
}

fn marked_from(path: &Path, pair: Option<&[usize]>) -> Result<MarkedGraph, Failure> {
    let text = read(path)?;
    match pair {
        Some(p) => {
            let doc = GraphDocument::parse(&text)?;
            let n = doc.graph.vertex_count();
            Ok(MarkedGraph::from_pair(doc.graph, vertex(p[0], n)?, vertex(p[1], n)?)?)
        }
        None => Ok(MarkedGraph::parse(&text)?),
    }
}

fn num(x: &BigInt) -> Value {
    Value::Number(x.to_string().parse().expect("integers are valid JSON numbers"))
}

fn nums(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(num).collect())
}

fn joined(xs: &[BigInt]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn pretty(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// The torsion part, i.e. the critical group proper.
fn torsion(g: &GroupStructure) -> GroupStructure {
    GroupStructure { torsion_factors: g.torsion_factors.clone(), free_rank: 0 }
}

fn group_json(g: &GroupStructure) -> Value {
    json!({
        "invariant_factors": nums(&g.torsion_factors),
        "order": num(&g.order()),
        "exponent": num(&g.exponent()),
        "structure": torsion(g).to_string(),
    })
}

fn cmd_group(path: &Path, as_json: bool) -> Out {
    let g = load_graph(path)?;
    let group = LaplacianCokernel::new(&g)?.group();
    if as_json {
        return Ok(pretty(group_json(&group)));
    }
    let phi = torsion(&group);
    let mut s = String::new();
    writeln!(s, "invariant factors: {}", joined(&group.torsion_factors)).unwrap();
    writeln!(s, "Phi = {phi}").unwrap();
    writeln!(s, "order = {}", group.order()).unwrap();
    writeln!(s, "exponent = {}", group.exponent()).unwrap();
    Ok(s)
}

fn cmd_pair_order(path: &Path, i: usize, j: usize, as_json: bool) -> Out {
    let g = load_graph(path)?;
    let n = g.vertex_count();
    let (i, j) = (vertex(i, n)?, vertex(j, n)?);
    let mk = LaplacianCokernel::new(&g)?.marking(i, j)?;
    let marked = MarkedGraph::new(g, mk.clone())?;
    if as_json {
        return Ok(pretty(json!({
            "i": i + 1,
            "j": j + 1,
            "order": num(&mk.order),
            "weights": nums(&mk.weights),
            "marked_graph": marked.to_text(),
        })));
    }
    Ok(format!("h = {}\nS = {}\n", mk.order, joined(&mk.weights)))
}

fn cmd_pairing(path: &Path, i: usize, j: usize, as_json: bool) -> Out {
    let g = load_graph(path)?;
    let n = g.vertex_count();
    let value: BigRational = pairing_self(&g, vertex(i, n)?, vertex(j, n)?)?;
    if as_json {
        return Ok(pretty(json!({ "i": i, "j": j, "pairing": value.to_string() })));
    }
    Ok(format!("pairing = {value}\n"))
}

fn cmd_reduce(path: &Path, i: usize, j: usize, reverse: bool, trace: bool, as_json: bool) -> Out {
    let g = load_graph(path)?;
    let n = g.vertex_count();
    let mg = MarkedGraph::from_pair(g, vertex(i, n)?, vertex(j, n)?)?;
    let order = if reverse { ThickenOrder::Reverse } else { ThickenOrder::Lexicographic };
    let d = reduce_to_string_with(&mg, order)?;
    if as_json {
        let steps: Vec<Value> = d
            .trace
            .iter()
            .map(|t| json!({ "step": t.step, "description": t.description, "marked_graph": t.marked.to_text() }))
            .collect();
        return Ok(pretty(json!({
            "order": num(&d.order),
            "length": d.length,
            "levels": d.levels.iter().map(|v| v + 1).collect::<Vec<_>>(),
            "low": d.low + 1,
            "high": d.high + 1,
            "trace": steps,
        })));
    }
    let mut s = String::new();
    for t in &d.trace {
        writeln!(
            s,
            "step {}: {} ({} vertices, {} edges)",
            t.step,
            t.description,
            t.marked.vertex_count(),
            t.marked.graph().edge_count()
        )
        .unwrap();
        if trace {
            for line in t.marked.to_text().lines() {
                writeln!(s, "    {line}").unwrap();
            }
        }
    }
    writeln!(s, "string: {} blocks of {} parallel edges", d.length, d.order).unwrap();
    let levels: Vec<String> = d.levels.iter().map(|v| (v + 1).to_string()).collect();
    writeln!(s, "levels: {}", levels.join(" ")).unwrap();
    Ok(s)
}

fn cmd_construct(op: &ConstructOp, as_json: bool) -> Out {
    let (before, after) = match op {
        ConstructOp::AddGraph { src, other, attach, at } => {
            let m = load_marked(src)?;
            let h = load_graph(other)?;
            let r = m.add_graph(&h, vertex(*attach, m.vertex_count())?, vertex(*at, h.vertex_count())?)?;
            (m, r)
        }
        ConstructOp::Glue { src, a, b } => {
            let m = load_marked(src)?;
            let n = m.vertex_count();
            let r = m.glue(vertex(*a, n)?, vertex(*b, n)?)?;
            (m, r)
        }
        ConstructOp::Thicken { src, v, u } => {
            let m = load_marked(src)?;
            let n = m.vertex_count();
            let r = m.thicken(vertex(*v, n)?, vertex(*u, n)?)?;
            (m, r)
        }
        ConstructOp::RemoveEqual { src } => {
            let m = load_marked(src)?;
            let r = m.remove_equal_weight_edges(&m.equal_weight_edges())?;
            (m, r)
        }
        ConstructOp::AddEdges { src, k, l, c } => {
            let m = load_marked(src)?;
            let n = m.vertex_count();
            let r = m.add_edges(vertex(*k, n)?, vertex(*l, n)?, *c)?;
            (m, r)
        }
        ConstructOp::Subdivide { src, b } => {
            let m = load_marked(src)?;
            let r = m.subdivide_all(*b)?;
            (m, r)
        }
        ConstructOp::Coalesce { src, other, other_pair } => {
            let m = load_marked(src)?;
            let o = marked_from(other, other_pair.as_deref())?;
            let r = m.coalesce(&o)?;
            (m, r)
        }
    };
    if as_json {
        return Ok(pretty(json!({
            "order_before": num(before.order()),
            "order": num(after.order()),
            "low": after.low() + 1,
            "high": after.high() + 1,
            "marked_graph": after.to_text(),
        })));
    }
    let mut s = format!("# order {} -> {}\n", before.order(), after.order());
    s.push_str(&after.to_text());
    Ok(s)
}

fn witness_json(w: &CollapseWitness) -> Value {
    json!({ "mu": num(&w.mu), "i": w.i + 1, "j": w.j + 1, "vector": nums(&w.vector) })
}

fn cmd_spread(path: &Path, sign: Sign, as_json: bool) -> Out {
    let m = input_matrix(load_input(path)?, sign);
    let w = spread_witness(&m)?;
    if as_json {
        let witness = w.as_ref().map(|(i, j, v)| json!({ "i": i + 1, "j": j + 1, "vector": nums(v) }));
        return Ok(pretty(json!({ "spread": w.is_none(), "witness": witness })));
    }
    Ok(match w {
        None => "spread: yes\n".to_string(),
        Some((i, j, v)) => format!("spread: no\ne_{} - e_{} = M v with v = {}\n", i + 1, j + 1, joined(&v)),
    })
}

fn cmd_collapsed(path: &Path, lo: Option<&BigInt>, hi: Option<&BigInt>, sign: Sign, witnesses: bool, as_json: bool) -> Out {
    let m = input_matrix(load_input(path)?, sign);
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() }.into());
    }
    let nb = NormBound::of(&m);
    let lo = lo.cloned().unwrap_or_else(|| -&nb.radius);
    let hi = hi.cloned().unwrap_or_else(|| nb.radius.clone());
    let report: CollapsedReport = collapsed_values(&m, &lo, &hi)?;
    let estimate = spectral_norm_estimate(&m);
    if as_json {
        return Ok(pretty(json!({
            "lo": num(&report.lo),
            "hi": num(&report.hi),
            "collapsed": nums(&report.values()),
            "witnesses": report.witnesses.iter().map(witness_json).collect::<Vec<_>>(),
            "frobenius_bound": num(&nb.bound),
            "spectral_norm_approx": estimate,
        })));
    }
    let mut s = format!("collapsed: {}\n", joined(&report.values()));
    writeln!(s, "scanned: [{}, {}]", report.lo, report.hi).unwrap();
    writeln!(s, "norm bound: {} (certified), spectral norm ~ {estimate:.4} (approximate)", nb.bound).unwrap();
    if witnesses {
        for w in &report.witnesses {
            writeln!(s, "mu = {}: e_{} - e_{} = (M - mu Id) ({})", w.mu, w.i + 1, w.j + 1, joined(&w.vector)).unwrap();
        }
    }
    Ok(s)
}

fn cmd_chain(lengths: &[usize], as_json: bool) -> Out {
    let c = chain_graph(lengths)?;
    let lc = LaplacianCokernel::new(&c.graph)?;
    let group = lc.group();
    let w_formula = chain_pair_order_formula(lengths, ChainTarget::W)?;
    let w_engine = lc.pair_order(c.v, c.w)?;
    let pairing = pairing_self(&c.graph, c.v, c.w)?;
    let last = lengths.len() - 1;
    let mut rows = Vec::new();
    for k in 1..lengths[last] {
        let u = c.chain_vertex(last, k).expect("k is inside the last chain");
        rows.push((k, u, chain_pair_order_formula(lengths, ChainTarget::LastChain { k })?, lc.pair_order(c.v, u)?));
    }
    if as_json {
        let table: Vec<Value> = rows
            .iter()
            .map(|(k, u, f, e)| json!({ "k": k, "vertex": u + 1, "formula": num(f), "engine": num(e) }))
            .collect();
        return Ok(pretty(json!({
            "lengths": lengths,
            "graph": c.graph.to_text(),
            "group": group_json(&group),
            "v": c.v + 1,
            "w": c.w + 1,
            "order_vw": { "formula": num(&w_formula), "engine": num(&w_engine) },
            "pairing_vw": pairing.to_string(),
            "last_chain": table,
        })));
    }
    let mut s = String::new();
    writeln!(s, "vertices: {}, edges: {}", c.graph.vertex_count(), c.graph.edge_count()).unwrap();
    writeln!(s, "Phi: {}", torsion(&group)).unwrap();
    writeln!(s, "order(v, w): formula {w_formula}, engine {w_engine}").unwrap();
    writeln!(s, "pairing(v, w) = {pairing}").unwrap();
    if !rows.is_empty() {
        writeln!(s, "k  vertex  formula  engine").unwrap();
        for (k, u, f, e) in rows {
            writeln!(s, "{k:<2} {:<7} {f:<8} {e}", u + 1).unwrap();
        }
    }
    Ok(s)
}

fn cmd_gp(primes: &[u64], as_json: bool) -> Out {
    let f = crt_family(primes)?;
    if as_json {
        return Ok(pretty(json!({
            "primes": primes,
            "ell": num(&f.ell),
            "matrix": f.matrix.to_text(),
            "witnesses": f.witnesses.iter().map(witness_json).collect::<Vec<_>>(),
        })));
    }
    let mut s = format!("ell = {}\n", f.ell);
    s.push_str(&f.matrix.to_text());
    for (p, w) in primes.iter().zip(&f.witnesses) {
        writeln!(s, "p = {p}: mu = {} collapsed, S = {}", w.mu, joined(&w.vector)).unwrap();
    }
    Ok(s)
}

fn report_text(r: &SuiteReport) -> String {
    let status = if r.passed() { "PASS" } else { "FAIL" };
    let mut s = format!("[{status}] {}: {} ({} checks)\n", r.suite, r.suite.description(), r.checked);
    for f in &r.failures {
        writeln!(s, "  failure: {f}").unwrap();
    }
    for n in &r.notes {
        writeln!(s, "  note: {n}").unwrap();
    }
    s
}

fn cmd_verify(suite: &str, opts: &SuiteOptions, as_json: bool) -> (String, bool) {
    let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { Suite::from_name(suite).into_iter().collect() };
    let mut text = String::new();
    let mut values = Vec::new();
    let mut ok = true;
    for s in suites {
        match s.run(opts) {
            Ok(r) => {
                ok &= r.passed();
                text.push_str(&report_text(&r));
                values.push(json!({
                    "suite": s.name(),
                    "passed": r.passed(),
                    "checked": r.checked,
                    "failures": r.failures,
                    "notes": r.notes,
                }));
            }
            Err(e) => {
                ok = false;
                writeln!(text, "[FAIL] {s}: error: {e}").unwrap();
                values.push(json!({ "suite": s.name(), "passed": false, "error": e.to_string() }));
            }
        }
    }
    if as_json {
        (pretty(Value::Array(values)), ok)
    } else {
        (text, ok)
    }
}

fn search_text(out: &SearchOutcome, what: &str) -> String {
    let mut s = format!("examined {} graphs, {} {what}\n", out.examined, out.matches);
    for hit in &out.hits {
        let orders: Vec<BigInt> = hit.pair_orders.iter().cloned().collect();
        writeln!(s, "# Phi = {}, pair orders {}", torsion(&hit.group), joined(&orders)).unwrap();
        s.push_str(&hit.graph.to_text());
    }
    s
}

fn search_json(out: &SearchOutcome) -> Value {
    let hits: Vec<Value> = out
        .hits
        .iter()
        .map(|h| {
            let orders: Vec<BigInt> = h.pair_orders.iter().cloned().collect();
            json!({ "graph": h.graph.to_text(), "group": group_json(&h.group), "pair_orders": nums(&orders) })
        })
        .collect();
    json!({ "examined": out.examined, "matches": out.matches, "hits": hits })
}

fn cmd_search(what: &SearchCmd, as_json: bool) -> Out {
    match what {
        SearchCmd::Exponent { n_max, max_mult, limit } => {
            let out = exponent_gaps(*n_max, *max_mult, *limit)?;
            Ok(if as_json { pretty(search_json(&out)) } else { search_text(&out, "without a pair attaining the exponent") })
        }
        SearchCmd::Cyclic { order, avoid, n_max, max_mult, limit } => {
            let out = cyclic_without_orders(order, avoid, *n_max, *max_mult, *limit)?;
            Ok(if as_json { pretty(search_json(&out)) } else { search_text(&out, "matching") })
        }
        SearchCmd::MaxCollapsed { n, limit } => {
            let r = max_collapsed(*n, *limit)?;
            if as_json {
                let graphs: Vec<Value> =
                    r.graphs.iter().map(|(g, v)| json!({ "graph": g.to_text(), "collapsed": nums(v) })).collect();
                return Ok(pretty(json!({ "n": r.n, "examined": r.examined, "best": r.best, "graphs": graphs })));
            }
            let mut s = format!("n = {}: examined {} graphs, at most {} collapsed values\n", r.n, r.examined, r.best);
            for (g, v) in &r.graphs {
                writeln!(s, "# collapsed: {}", joined(v)).unwrap();
                s.push_str(&g.to_text());
            }
            Ok(s)
        }
    }
}

/// `verify` and `search` use a worker pool sized by [`THREADS_ENV`]; every
/// other verb runs on one thread.
fn configure_threads(pooled: bool) -> Result<(), Failure> {
    let requested = match std::env::var(THREADS_ENV) {
        Ok(v) => Some(
            v.trim()
                .parse::<usize>()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| Failure::Usage(format!("{THREADS_ENV} must be a positive integer, got {v:?}")))?,
        ),
        Err(_) => None,
    };
    let n = if pooled { requested.unwrap_or(0) } else { 1 };
    // Fails only if a global pool already exists, e.g. when called twice in one process.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn dispatch(cli: &Cli) -> Out {
    configure_threads(matches!(cli.command, Command::Verify { .. } | Command::Search { .. }))?;
    let j = cli.json;
    match &cli.command {
        Command::Group { graph } => cmd_group(graph, j),
        Command::PairOrder { graph, i, j: b } => cmd_pair_order(graph, *i, *b, j),
        Command::Pairing { graph, i, j: b } => cmd_pairing(graph, *i, *b, j),
        Command::Reduce { graph, i, j: b, reverse, trace } => cmd_reduce(graph, *i, *b, *reverse, *trace, j),
        Command::Construct { op } => cmd_construct(op, j),
        Command::Spread { input, sign } => cmd_spread(input, *sign, j),
        Command::Collapsed { input, lo, hi, sign, witnesses } => {
            cmd_collapsed(input, lo.as_ref(), hi.as_ref(), *sign, *witnesses, j)
        }
        Command::Chain { lengths } => cmd_chain(lengths, j),
        Command::Gp { primes } => cmd_gp(primes, j),
        Command::Verify { suite, n_max, seed, samples } => {
            if suite != "all" && Suite::from_name(suite).is_none() {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                return Err(Failure::Usage(format!("unknown suite {suite:?}; expected all or one of {}", names.join(", "))));
            }
            let opts = SuiteOptions { n_max: *n_max, seed: *seed, samples: *samples };
            let (text, ok) = cmd_verify(suite, &opts, j);
            print!("{text}");
            if ok {
                Ok(String::new())
            } else {
                Err(Failure::Check)
            }
        }
        Command::Search { what } => cmd_search(what, j),
    }
}

/// Runs the command line and returns the process exit code. Output goes to
/// stdout, errors to stderr.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match dispatch(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            let code = match &f {
                Failure::Lib(e) => {
                    eprintln!("error: {e}");
                    match e.kind() {
                        ErrorKind::Invalid => 2,
                        ErrorKind::Infeasible => 3,
                    }
                }
                Failure::Io(p, e) => {
                    eprintln!("error: cannot read {}: {e}", p.display());
                    2
                }
                Failure::Usage(m) => {
                    eprintln!("error: {m}");
                    1
                }
                Failure::Check => 2,
            };
            ExitCode::from(code)
        }
    }
}
