//! Named verification suites. Each one sweeps a family of instances, compares
//! the engine against closed forms or the oracles, and reports every
//! disagreement.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::collapsed::{
    block_family, collapsed_values, collapsed_values_full, crt_family, eigenvector_collapse_pairs, is_spread,
    laplacian_scan, many_collapse_graph, two_by_two,
};
use crate::constructions::{reduce_to_string, string_graph, thickening_factor, MarkedGraph};
use crate::error::{Error, Result};
use crate::graph::{random_connected_simple, Multigraph};
use crate::group::{
    chain_graph, chain_pair_order_formula, critical_group, pair_order, pairing_self, verify_marking, ChainTarget,
    LaplacianCokernel, Marking,
};
use crate::linalg::{smith_normal_form, IntMatrix};
use crate::oracle::{pair_order_by_potential, self_pairing_by_potential, spanning_trees_by_enumeration};
use crate::paths::{
    marking_from_path_system, order_one_pair, order_two_certificate, path_family_search, spread_check,
    verify_path_system, DEFAULT_SEARCH_BUDGET,
};
use crate::search::{connected_graphs, cyclic_without_orders};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    MatrixTree,
    CycleOrders,
    ChainFormulas,
    Thickening,
    Reduction,
    Bridges,
    OrderTwo,
    CollapsedRange,
    CompleteGraphs,
    Families,
    Crt,
    Pairing,
    CyclicTwelve,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::MatrixTree,
        Suite::CycleOrders,
        Suite::ChainFormulas,
        Suite::Thickening,
        Suite::Reduction,
        Suite::Bridges,
        Suite::OrderTwo,
        Suite::CollapsedRange,
        Suite::CompleteGraphs,
        Suite::Families,
        Suite::Crt,
        Suite::Pairing,
        Suite::CyclicTwelve,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::MatrixTree => "matrix-tree",
            Suite::CycleOrders => "cycle-orders",
            Suite::ChainFormulas => "chain-formulas",
            Suite::Thickening => "thickening",
            Suite::Reduction => "reduction",
            Suite::Bridges => "bridges",
            Suite::OrderTwo => "order-two",
            Suite::CollapsedRange => "collapsed-range",
            Suite::CompleteGraphs => "complete-graphs",
            Suite::Families => "families",
            Suite::Crt => "crt",
            Suite::Pairing => "pairing",
            Suite::CyclicTwelve => "cyclic-twelve",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::MatrixTree => "group order equals the enumerated spanning tree count",
            Suite::CycleOrders => "end pair of C_n has order n with marking 0..n-1",
            Suite::ChainFormulas => "chain graph orders: closed form, Smith form and rational potential agree",
            Suite::Thickening => "thickening multiplies the tree count by s(es)^(s-1) and keeps the marking",
            Suite::Reduction => "every marked pair reduces to a string of dipoles",
            Suite::Bridges => "order one iff joined by bridges; spread iff bridgeless",
            Suite::OrderTwo => "a system of two paths exists iff the pair has order 2",
            Suite::CollapsedRange => "collapsed values of simple graph Laplacians lie in [0, n + 1]",
            Suite::CompleteGraphs => "K_n collapsed values and shifted cokernels",
            Suite::Families => "collapsed values of paths, bipartite graphs and the matrix families",
            Suite::Crt => "CRT family for primes 3, 5",
            Suite::Pairing => "self-pairing of the chain graph (1, 2, 3)",
            Suite::CyclicTwelve => "a simple graph with cyclic group of order 12 and no pair of order 2 or 3",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    /// Vertex bound used when none is given.
    pub fn default_n_max(self) -> Option<usize> {
        match self {
            Suite::MatrixTree | Suite::Reduction | Suite::OrderTwo | Suite::CollapsedRange => Some(5),
            Suite::Bridges | Suite::CyclicTwelve => Some(6),
            _ => None,
        }
    }

    pub fn run(self, opts: &SuiteOptions) -> Result<SuiteReport> {
        let n_max = opts.n_max.or(self.default_n_max());
        let mut r = SuiteReport::new(self);
        match self {
            Suite::MatrixTree => matrix_tree(&mut r, n_max.unwrap(), opts)?,
            Suite::CycleOrders => cycle_orders(&mut r)?,
            Suite::ChainFormulas => chain_formulas(&mut r)?,
            Suite::Thickening => thickening(&mut r, opts)?,
            Suite::Reduction => reduction(&mut r, n_max.unwrap())?,
            Suite::Bridges => bridges(&mut r, n_max.unwrap())?,
            Suite::OrderTwo => order_two(&mut r, n_max.unwrap())?,
            Suite::CollapsedRange => collapsed_range(&mut r, n_max.unwrap())?,
            Suite::CompleteGraphs => complete_graphs(&mut r)?,
            Suite::Families => families(&mut r)?,
            Suite::Crt => crt(&mut r)?,
            Suite::Pairing => pairing(&mut r)?,
            Suite::CyclicTwelve => cyclic_twelve(&mut r, n_max.unwrap())?,
        }
        Ok(r)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub n_max: Option<usize>,
    pub seed: u64,
    /// Random graphs drawn by suites that sample.
    pub samples: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { n_max: None, seed: 0x5eed, samples: 500 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checked: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport { suite, checked: 0, failures: Vec::new(), notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    /// Folds in per-instance results from a parallel sweep, in order.
    fn absorb(&mut self, results: Vec<Vec<String>>) {
        self.checked += results.len();
        self.failures.extend(results.into_iter().flatten());
    }
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn show(v: &[BigInt]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn brief(g: &Multigraph) -> String {
    g.edge_bundles()
        .map(|(a, b, c)| if c == 1 { format!("{}-{}", a + 1, b + 1) } else { format!("{}-{}x{c}", a + 1, b + 1) })
        .collect::<Vec<_>>()
        .join(",")
}

fn simple_graphs(n_max: usize) -> Result<Vec<Multigraph>> {
    connected_graphs(n_max, 1)
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

fn matrix_tree(r: &mut SuiteReport, n_max: usize, opts: &SuiteOptions) -> Result<()> {
    let mut graphs = simple_graphs(n_max)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    graphs.extend((0..opts.samples).map(|_| random_connected_simple(n_max + 1, &mut rng)));
    let results = graphs
        .par_iter()
        .map(|g| {
            let group = critical_group(g)?;
            let trees = spanning_trees_by_enumeration(g)?;
            let mut bad = Vec::new();
            if group.order() != trees {
                bad.push(format!("{}: |Phi| = {} but {} spanning trees", brief(g), group.order(), trees));
            }
            if !group.satisfies_graph_bounds(g) {
                bad.push(format!("{}: structure bounds violated by {group}", brief(g)));
            }
            Ok(bad)
        })
        .collect::<Result<Vec<_>>>()?;
    r.absorb(results);
    r.notes.push(format!("exhaustive n <= {n_max} plus {} random graphs on {} vertices", opts.samples, n_max + 1));
    Ok(())
}

fn cycle_orders(r: &mut SuiteReport) -> Result<()> {
    for n in 3..=12usize {
        let g = Multigraph::cycle(n);
        let h = pair_order(&g, 0, n - 1)?;
        r.check(h == BigInt::from(n), || format!("C_{n}: order {h}"));
        let weights: Vec<i64> = (0..n as i64).collect();
        let mk = Marking::from_i64(0, n - 1, n as i64, &weights);
        r.check(verify_marking(&g, &mk), || format!("C_{n}: marking 0..{} rejected", n - 1));
        let found = crate::group::marking(&g, 0, n - 1)?;
        r.check(found == mk, || format!("C_{n}: computed marking {}", show(&found.weights)));
    }
    Ok(())
}

fn chain_formulas(r: &mut SuiteReport) -> Result<()> {
    let cases: [(&[usize], ChainTarget, i64); 5] = [
        (&[1, 2, 3], ChainTarget::W, 11),
        (&[2, 3, 4], ChainTarget::W, 13),
        (&[2, 3, 4], ChainTarget::LastChain { k: 1 }, 26),
        (&[1, 2, 3], ChainTarget::LastChain { k: 2 }, 11),
        (&[1, 2, 3, 4, 5], ChainTarget::W, 137),
    ];
    for (lengths, target, want) in cases {
        let c = chain_graph(lengths)?;
        let other = match target {
            ChainTarget::W => c.w,
            ChainTarget::LastChain { k } => c.chain_vertex(lengths.len() - 1, k).expect("k is inside the chain"),
        };
        let formula = chain_pair_order_formula(lengths, target)?;
        let engine = pair_order(&c.graph, c.v, other)?;
        let oracle = pair_order_by_potential(&c.graph, c.v, other)?;
        let want = BigInt::from(want);
        r.check(formula == want && engine == want && oracle == want, || {
            format!("{lengths:?} {target:?}: formula {formula}, engine {engine}, oracle {oracle}, expected {want}")
        });
    }
    let big = chain_graph(&[1, 2, 3, 4, 5])?;
    r.check(big.graph.vertex_count() == 12, || format!("(1,2,3,4,5) has {} vertices", big.graph.vertex_count()));
    Ok(())
}

/// A thickening instance: a marked graph and an edge bundle across a gap.
struct ThickenCase {
    marked: MarkedGraph,
    a: usize,
    b: usize,
    e: u32,
    s: u32,
}

fn thickening_cases(opts: &SuiteOptions) -> Result<Vec<ThickenCase>> {
    let mut sources: Vec<Multigraph> = (3..=6).map(Multigraph::cycle).collect();
    sources.extend([Multigraph::complete(4), Multigraph::complete(5), Multigraph::complete_bipartite(2, 3)]);
    for lengths in [&[1, 2, 3][..], &[2, 3, 4], &[1, 2, 2], &[2, 5]] {
        sources.push(chain_graph(lengths)?.graph);
    }
    let mut doubled = Multigraph::cycle(5);
    doubled.add_edges(0, 1, 1)?;
    sources.push(doubled);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x7417);
    sources.extend((0..8).map(|_| random_connected_simple(6, &mut rng)));

    let mut buckets: Vec<Vec<ThickenCase>> = (0..4).map(|_| Vec::new()).collect();
    for g in &sources {
        for (i, j) in pairs(g.vertex_count()) {
            let marked = MarkedGraph::from_pair(g.clone(), i, j)?;
            for (a, b, e) in g.edge_bundles() {
                let gap = (marked.weight(a) - marked.weight(b)).magnitude().clone();
                if let Some(s) = u32::try_from(gap).ok().filter(|s| (2..=5).contains(s)) {
                    buckets[s as usize - 2].push(ThickenCase { marked: marked.clone(), a, b, e, s });
                }
            }
        }
    }
    // Round robin over the gaps so that every s is represented.
    let mut out = Vec::new();
    let mut iters: Vec<_> = buckets.into_iter().map(|b| b.into_iter()).collect();
    while out.len() < 50 {
        let before = out.len();
        for it in iters.iter_mut() {
            if out.len() < 50 {
                out.extend(it.next());
            }
        }
        if out.len() == before {
            break;
        }
    }
    Ok(out)
}

fn thickening(r: &mut SuiteReport, opts: &SuiteOptions) -> Result<()> {
    let cases = thickening_cases(opts)?;
    r.check(cases.len() == 50, || format!("only {} thickening instances generated", cases.len()));
    for s in 2..=5 {
        r.check(cases.iter().any(|c| c.s == s), || format!("no instance with gap {s}"));
    }
    let results = cases
        .par_iter()
        .map(|c| {
            let mut bad = Vec::new();
            let name = format!("{} pair {}-{} edge {}-{} (e={}, s={})", brief(c.marked.graph()), c.marked.low() + 1, c.marked.high() + 1, c.a + 1, c.b + 1, c.e, c.s);
            let t = c.marked.thicken(c.a, c.b)?;
            let before = critical_group(c.marked.graph())?;
            let after = critical_group(t.graph())?;
            let factor = thickening_factor(c.e, c.s);
            if after.order() != &factor * before.order() {
                bad.push(format!("{name}: |Phi'| = {} but factor {factor} times {}", after.order(), before.order()));
            }
            if t.graph().edge_count() as usize <= crate::oracle::MAX_ENUMERATED_EDGES
                && spanning_trees_by_enumeration(t.graph())? != after.order()
            {
                bad.push(format!("{name}: enumeration oracle disagrees"));
            }
            let es = BigInt::from(c.e * c.s);
            let divisible = after.torsion_factors.iter().filter(|d| (*d % &es).is_zero()).count();
            if divisible + 2 < c.s as usize {
                bad.push(format!("{name}: only {divisible} invariant factors divisible by {es}"));
            }
            if !verify_marking(t.graph(), t.marking()) || &pair_order(t.graph(), t.low(), t.high())? != c.marked.order() {
                bad.push(format!("{name}: marking not transported"));
            }
            Ok(bad)
        })
        .collect::<Result<Vec<_>>>()?;
    r.absorb(results);

    for n in 3..=5usize {
        let c = MarkedGraph::from_pair(Multigraph::cycle(n), 0, n - 1)?;
        let t = c.thicken(0, n - 1)?;
        let (h, s) = (n as i64, n as i64 - 1);
        let order = pair_order(t.graph(), 0, n)?;
        r.check(order == BigInt::from(h * s * s), || format!("thickened C_{n}: pair order {order}"));
        let mk = crate::group::marking(t.graph(), 0, n)?;
        for step in 1..s {
            let w = mk.weight(n - 1 + step as usize);
            r.check(w == &BigInt::from(s * step + h * (s - step)), || format!("thickened C_{n}: w_{step} has weight {w}"));
        }
    }
    Ok(())
}

fn reduction(r: &mut SuiteReport, n_max: usize) -> Result<()> {
    let graphs = simple_graphs(n_max)?;
    let results = graphs
        .par_iter()
        .map(|g| {
            let mut bad = Vec::new();
            for i in 0..g.vertex_count() {
                for j in 0..g.vertex_count() {
                    if i == j {
                        continue;
                    }
                    let mg = MarkedGraph::from_pair(g.clone(), i, j)?;
                    let name = format!("{} pair {}-{}", brief(g), i + 1, j + 1);
                    match reduce_to_string(&mg) {
                        Err(e) => bad.push(format!("{name}: {e}")),
                        Ok(d) => {
                            if !d.trace.iter().all(|t| verify_marking(t.marked.graph(), t.marked.marking())) {
                                bad.push(format!("{name}: an intermediate marking fails"));
                            }
                            let h = u32::try_from(mg.order().clone()).unwrap_or(0);
                            if d.by_level() != string_graph(h, d.length) || BigInt::from(d.length) != mg.marking().span() {
                                bad.push(format!("{name}: result is not the expected string"));
                            }
                        }
                    }
                }
            }
            Ok(bad)
        })
        .collect::<Result<Vec<_>>>()?;
    r.absorb(results);
    Ok(())
}

fn bridges(r: &mut SuiteReport, n_max: usize) -> Result<()> {
    let mut graphs = simple_graphs(n_max)?;
    graphs.extend(connected_graphs(n_max.min(4), 3)?.into_iter().filter(|g| !g.is_simple()));
    let results = graphs
        .par_iter()
        .map(|g| {
            let mut bad = Vec::new();
            let lc = LaplacianCokernel::new(g)?;
            for (i, j) in pairs(g.vertex_count()) {
                if order_one_pair(g, i, j)? != lc.pair_order(i, j)?.is_one() {
                    bad.push(format!("{} pair {}-{}: bridge test disagrees", brief(g), i + 1, j + 1));
                }
            }
            let algebraic = is_spread(&g.laplacian())?;
            if algebraic != g.is_multiply_connected() || algebraic != spread_check(g)? {
                bad.push(format!("{}: spread {algebraic} but bridgeless {}", brief(g), g.is_multiply_connected()));
            }
            Ok(bad)
        })
        .collect::<Result<Vec<_>>>()?;
    r.absorb(results);
    r.notes.push(format!("simple n <= {n_max}, multiplicities <= 3 for n <= {}", n_max.min(4)));
    Ok(())
}

fn order_two(r: &mut SuiteReport, n_max: usize) -> Result<()> {
    let graphs = simple_graphs(n_max)?;
    let two = BigInt::from(2);
    let results = graphs
        .par_iter()
        .map(|g| {
            let mut bad = Vec::new();
            let lc = LaplacianCokernel::new(g)?;
            for (i, j) in pairs(g.vertex_count()) {
                let name = format!("{} pair {}-{}", brief(g), i + 1, j + 1);
                let h = lc.pair_order(i, j)?;
                match order_two_certificate(g, i, j, DEFAULT_SEARCH_BUDGET)? {
                    Some(ps) => {
                        let mk = marking_from_path_system(g, &ps)?;
                        if h != two || mk.order != two || !verify_path_system(g, &ps) {
                            bad.push(format!("{name}: certificate found but order is {h}"));
                        }
                    }
                    None if h == two => bad.push(format!("{name}: order 2 without a certificate")),
                    None => {}
                }
            }
            Ok(bad)
        })
        .collect::<Result<Vec<_>>>()?;
    r.absorb(results);
    for h in 3..=4usize {
        let g = Multigraph::cycle(h);
        for (i, j) in pairs(h) {
            if pair_order(&g, i, j)? != BigInt::from(h) {
                continue;
            }
            let s = path_family_search(&g, i, j, h, DEFAULT_SEARCH_BUDGET)?;
            r.check(s.found.is_none() && s.families > 0, || format!("C_{h} pair {}-{}: a system of {h} paths exists", i + 1, j + 1));
        }
    }
    Ok(())
}

fn collapsed_range(r: &mut SuiteReport, n_max: usize) -> Result<()> {
    let graphs: Vec<Multigraph> = simple_graphs(n_max)?.into_iter().filter(|g| g.vertex_count() >= 2).collect();
    let results = graphs
        .par_iter()
        .map(|g| {
            // Margin n + 4 covers [-2n - 4, 2n + 4].
            let scan = laplacian_scan(g, g.vertex_count() + 4)?;
            let mut bad = Vec::new();
            if !scan.holds() {
                bad.push(format!("{}: collapsed outside [0, n + 1]: {}", brief(g), show(&scan.violations)));
            }
            if !scan.report.verify() {
                bad.push(format!("{}: a witness fails", brief(g)));
            }
            Ok(bad)
        })
        .collect::<Result<Vec<_>>>()?;
    r.absorb(results);
    Ok(())
}

fn complete_graphs(r: &mut SuiteReport) -> Result<()> {
    for n in 3..=7usize {
        let k = Multigraph::complete(n);
        let vals = collapsed_values_full(&k.psd_laplacian())?.values();
        let want = ints(&[n as i64 - 1, n as i64 + 1]);
        r.check(vals == want, || format!("K_{n}: collapsed {}", show(&vals)));
        for mu in 1..=2i64 {
            let snf = smith_normal_form(&k.laplacian().shift_diagonal(&BigInt::from(mu))?)?;
            let m = n as i64 + mu;
            let mut want = vec![BigInt::from(m); n - 2];
            want.push(BigInt::from(m * mu));
            let got = snf.torsion_factors();
            r.check(got == want && snf.free_rank() == 0, || format!("K_{n}, mu = {mu}: cokernel factors {}", show(&got)));
        }
    }
    Ok(())
}

fn expect_values(r: &mut SuiteReport, name: &str, m: &IntMatrix, want: &[i64]) -> Result<()> {
    let report = collapsed_values_full(m)?;
    let vals = report.values();
    r.check(vals == ints(want) && report.verify(), || format!("{name}: collapsed {}, expected {want:?}", show(&vals)));
    Ok(())
}

fn families(r: &mut SuiteReport) -> Result<()> {
    for n in 4..=7 {
        expect_values(r, &format!("P_{n}"), &Multigraph::path(n).psd_laplacian(), &[0, 1, 2, 3])?;
    }
    for (p, q) in [(2usize, 2usize), (2, 3), (3, 3)] {
        let (p1, q1) = (p as i64, q as i64);
        let mut want = vec![p1 - 1, p1 + 1, q1 - 1, q1 + 1];
        want.sort();
        want.dedup();
        let m = Multigraph::complete_bipartite(p, q).psd_laplacian();
        let report = collapsed_values_full(&m)?;
        let vals = report.values();
        r.check(vals == ints(&want), || {
            let extra: Vec<String> = report
                .witnesses
                .iter()
                .filter(|w| !want.contains(&i64::try_from(w.mu.clone()).unwrap_or(i64::MAX)))
                .map(|w| format!("mu = {} via ({}) for e_{} - e_{}", w.mu, show(&w.vector), w.i + 1, w.j + 1))
                .collect();
            format!("K_{{{p},{q}}}: collapsed {}, expected {want:?}; extra: {}", show(&vals), extra.join("; "))
        });
    }

    let n = 8;
    let m = many_collapse_graph(n)?.laplacian();
    let report = collapsed_values_full(&m)?;
    let vals = report.values();
    r.check(vals == ints(&[-9, -7, -5, -3, -1]) && vals.len() == 1 + n / 2, || {
        format!("many-collapse graph n = {n}: collapsed {}", show(&vals))
    });
    r.check(!report.is_collapsed(&BigInt::zero()), || "many-collapse graph is 0-collapsed".into());
    let eig: Vec<BigInt> = eigenvector_collapse_pairs(&m)?.into_iter().map(|w| w.mu).collect();
    r.check(eig == vals, || format!("eigenvector pairs give {}", show(&eig)));

    expect_values(r, "((-1,1),(1,1))", &two_by_two(1), &[-2, -1, 0, 1, 2])?;

    let blocks = block_family(2)?;
    let report = collapsed_values(&blocks, &BigInt::from(3), &BigInt::from(12))?;
    r.check(report.witnesses.len() == 10 && report.verify(), || {
        format!("block family k = 2: collapsed in [3, 12] only {}", show(&report.values()))
    });
    Ok(())
}

fn crt(r: &mut SuiteReport) -> Result<()> {
    let f = crt_family(&[3, 5])?;
    r.check(f.ell == BigInt::from(31), || format!("ell = {}", f.ell));
    r.check(f.expected() == ints(&[28, 26]), || format!("expected values {}", show(&f.expected())));
    for w in &f.witnesses {
        r.check(w.holds(&f.matrix), || format!("witness for mu = {} fails", w.mu));
        let scan = collapsed_values(&f.matrix, &w.mu, &w.mu)?;
        r.check(scan.is_collapsed(&w.mu), || format!("mu = {} not found collapsed by the scan", w.mu));
    }
    Ok(())
}

fn pairing(r: &mut SuiteReport) -> Result<()> {
    let lengths = [1usize, 2, 3];
    let c = chain_graph(&lengths)?;
    let got = pairing_self(&c.graph, c.v, c.w)?;
    let oracle = self_pairing_by_potential(&c.graph, c.v, c.w)?;
    let sum: BigRational = lengths.iter().map(|&n| BigRational::new(BigInt::one(), BigInt::from(n))).sum();
    let closed = -sum.recip();
    let closed = &closed - BigRational::from_integer(closed.floor().to_integer());
    let want = BigRational::new(BigInt::from(5), BigInt::from(11));
    r.check(got == want && oracle == want && closed == want, || {
        format!("pairing {got}, oracle {oracle}, closed form {closed}, expected {want}")
    });
    Ok(())
}

fn cyclic_twelve(r: &mut SuiteReport, n_max: usize) -> Result<()> {
    let out = cyclic_without_orders(&BigInt::from(12), &ints(&[2, 3]), n_max, 1, 3)?;
    r.check(out.matches > 0, || format!("no simple graph on at most {n_max} vertices among {} qualifies", out.examined));
    for hit in &out.hits {
        r.notes.push(format!("witness {}", brief(&hit.graph)));
    }
    if out.matches == 0 {
        let multi = cyclic_without_orders(&BigInt::from(12), &ints(&[2, 3]), 4, 3, 1)?;
        if let Some(hit) = multi.hits.first() {
            r.notes.push(format!("with parallel edges allowed: {} ({} such on at most 4 vertices)", brief(&hit.graph), multi.matches));
        }
    }
    Ok(())
}

/// Runs a suite by name.
pub fn run_named(name: &str, opts: &SuiteOptions) -> Result<SuiteReport> {
    Suite::from_name(name)
        .ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
            Error::InvalidArgument(format!("unknown suite {name:?}; expected one of {}", names.join(", ")))
        })?
        .run(opts)
}
