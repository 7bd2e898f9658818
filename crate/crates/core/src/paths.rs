//! Combinatorial certificates for pairs of order 1 and 2.
//!
//! A system of `h` paths between `i` and `j` is a family of paths of common
//! length `l` such that, for every `k`, removing the `k`-th edge of every path
//! separates `i` from `j`. Such a system certifies order `h` when the paths
//! share no edge, and order 2 when `h = 2` even if they do.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::{EdgeRef, Multigraph};
use crate::group::{check_marking, Marking};

/// Paths given as edge sequences starting at `from`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathSystem {
    pub from: usize,
    pub to: usize,
    pub paths: Vec<Vec<EdgeRef>>,
}

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidPathSystem(msg.into()))
}

impl PathSystem {
    pub fn new(from: usize, to: usize, paths: Vec<Vec<EdgeRef>>) -> Self {
        PathSystem { from, to, paths }
    }

    /// Builds a system from vertex sequences, using copy 0 of every bundle.
    pub fn from_vertex_paths(paths: &[Vec<usize>]) -> Result<Self> {
        let first = paths.first().ok_or_else(|| Error::InvalidPathSystem("no paths".into()))?;
        let (from, to) = match (first.first(), first.last()) {
            (Some(&a), Some(&b)) if first.len() >= 2 => (a, b),
            _ => return invalid("a path needs at least two vertices"),
        };
        let edges = paths.iter().map(|p| p.windows(2).map(|w| EdgeRef::new(w[0], w[1], 0)).collect()).collect();
        Ok(PathSystem { from, to, paths: edges })
    }

    pub fn path_count(&self) -> usize {
        self.paths.len()
    }

    /// Common length, if all paths agree.
    pub fn length(&self) -> Option<usize> {
        let l = self.paths.first()?.len();
        self.paths.iter().all(|p| p.len() == l).then_some(l)
    }

    /// Vertices visited by path `p`, starting at `from`. `None` if the edges
    /// do not chain.
    pub fn vertices(&self, p: usize) -> Option<Vec<usize>> {
        let mut out = vec![self.from];
        let mut at = self.from;
        for e in &self.paths[p] {
            if e.a != at && e.b != at {
                return None;
            }
            at = e.other(at);
            out.push(at);
        }
        Some(out)
    }

    /// Edges that appear in more than one path.
    pub fn shared_edges(&self) -> BTreeSet<EdgeRef> {
        let mut seen = HashMap::new();
        for p in &self.paths {
            for e in p.iter().collect::<BTreeSet<_>>() {
                *seen.entry(*e).or_insert(0usize) += 1;
            }
        }
        seen.into_iter().filter(|&(_, c)| c > 1).map(|(e, _)| e).collect()
    }

    /// One line per path: `path <a>-<b> ...`, one-based vertices, with
    /// `:<c>` appended for the `c`-th parallel copy when `c > 1`. Preceded by
    /// `system <from> <to>`.
    pub fn to_text(&self) -> String {
        let mut s = format!("system {} {}\n", self.from + 1, self.to + 1);
        for (p, path) in self.paths.iter().enumerate() {
            let verts = self.vertices(p);
            s.push_str("path");
            for (k, e) in path.iter().enumerate() {
                let (x, y) = match &verts {
                    Some(v) => (v[k], v[k + 1]),
                    None => (e.a, e.b),
                };
                write!(s, " {}-{}", x + 1, y + 1).unwrap();
                if e.copy > 0 {
                    write!(s, ":{}", e.copy + 1).unwrap();
                }
            }
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut header = None;
        let mut paths = Vec::new();
        for (k, line) in text.lines().enumerate() {
            let ln = k + 1;
            let line = line.split('#').next().unwrap().trim();
            let mut toks = line.split_whitespace();
            match toks.next() {
                None => continue,
                Some("system") => {
                    let mut v = || -> Result<usize> {
                        let t = toks.next().ok_or_else(|| Error::parse(ln, "missing vertex"))?;
                        one_based(t, ln)
                    };
                    header = Some((v()?, v()?));
                }
                Some("path") => {
                    let mut path = Vec::new();
                    for t in toks {
                        let (edge, copy) = match t.split_once(':') {
                            Some((e, c)) => {
                                let c: u32 = c.parse().map_err(|_| Error::parse(ln, format!("bad copy `{c}`")))?;
                                if c == 0 {
                                    return Err(Error::parse(ln, "copies are numbered from 1"));
                                }
                                (e, c - 1)
                            }
                            None => (t, 0),
                        };
                        let (a, b) = edge.split_once('-').ok_or_else(|| Error::parse(ln, format!("bad edge `{t}`")))?;
                        path.push(EdgeRef::new(one_based(a, ln)?, one_based(b, ln)?, copy));
                    }
                    paths.push(path);
                }
                Some(other) => return Err(Error::parse(ln, format!("unknown directive `{other}`"))),
            }
        }
        let (from, to) = header.ok_or_else(|| Error::parse(0, "missing `system <from> <to>` line"))?;
        Ok(PathSystem { from, to, paths })
    }
}

fn one_based(t: &str, ln: usize) -> Result<usize> {
    match t.parse::<usize>() {
        Ok(v) if v >= 1 => Ok(v - 1),
        _ => Err(Error::parse(ln, format!("bad vertex `{t}`"))),
    }
}

/// For each `k`, whether deleting the `k`-th edge of every path separates
/// `from` and `to`. Assumes equal lengths and existing edges.
pub fn level_cuts_separate(g: &Multigraph, ps: &PathSystem) -> bool {
    let Some(l) = ps.length() else { return false };
    (0..l).all(|k| {
        let level: BTreeSet<EdgeRef> = ps.paths.iter().map(|p| p[k]).collect();
        let mut cut = g.clone();
        for e in level {
            if cut.remove_edges(e.a, e.b, 1).is_err() {
                return false;
            }
        }
        !cut.component_of(ps.from)[ps.to]
    })
}

/// Checks every defining property and reports the first failure.
pub fn check_path_system(g: &Multigraph, ps: &PathSystem) -> Result<()> {
    g.check_pair(ps.from, ps.to)?;
    if ps.paths.is_empty() {
        return invalid("no paths");
    }
    let Some(l) = ps.length() else { return invalid("paths have different lengths") };
    if l == 0 {
        return invalid("paths must have at least one edge");
    }

    let mut vertex_level: HashMap<usize, usize> = HashMap::new();
    let mut edge_level: HashMap<EdgeRef, usize> = HashMap::new();
    for (p, path) in ps.paths.iter().enumerate() {
        for e in path {
            g.check_pair(e.a, e.b)?;
            if e.copy >= g.multiplicity(e.a, e.b) {
                return invalid(format!("path {} uses a missing edge {}-{} copy {}", p + 1, e.a + 1, e.b + 1, e.copy + 1));
            }
        }
        let distinct: BTreeSet<&EdgeRef> = path.iter().collect();
        if distinct.len() != path.len() {
            return invalid(format!("path {} repeats an edge", p + 1));
        }
        let Some(verts) = ps.vertices(p) else {
            return invalid(format!("the edges of path {} do not form a walk from {}", p + 1, ps.from + 1));
        };
        if *verts.last().unwrap() != ps.to {
            return invalid(format!("path {} does not end at {}", p + 1, ps.to + 1));
        }
        for (r, &v) in verts.iter().enumerate() {
            if *vertex_level.entry(v).or_insert(r) != r {
                return invalid(format!("vertex {} is numbered inconsistently", v + 1));
            }
        }
        for (k, e) in path.iter().enumerate() {
            if *edge_level.entry(*e).or_insert(k) != k {
                return invalid(format!("edge {}-{} is numbered inconsistently", e.a + 1, e.b + 1));
            }
        }
    }

    let distinct: BTreeSet<&Vec<EdgeRef>> = ps.paths.iter().collect();
    if distinct.len() != ps.paths.len() {
        return invalid("two paths coincide");
    }
    if g.distances_from(ps.from)[ps.to] != Some(l) {
        return invalid(format!("length {l} is not the distance between the endpoints"));
    }
    if !level_cuts_separate(g, ps) {
        return invalid("removing some level of edges leaves the endpoints connected");
    }
    Ok(())
}

pub fn verify_path_system(g: &Multigraph, ps: &PathSystem) -> bool {
    check_path_system(g, ps).is_ok()
}

/// True iff `i` and `j` are joined by a path made of bridges, i.e. the pair
/// has order 1.
pub fn order_one_pair(g: &Multigraph, i: usize, j: usize) -> Result<bool> {
    g.check_pair(i, j)?;
    g.require_connected()?;
    let mut bridges = Multigraph::new(g.vertex_count());
    for (a, b) in g.bridges() {
        bridges.add_edges(a, b, 1)?;
    }
    Ok(bridges.component_of(i)[j])
}

/// True iff no pair has order 1, i.e. the graph has no bridge.
pub fn spread_check(g: &Multigraph) -> Result<bool> {
    g.require_connected()?;
    Ok(g.is_multiply_connected())
}

/// Default number of candidate paths and path pairs examined by
/// [`order_two_certificate`].
pub const DEFAULT_SEARCH_BUDGET: usize = 1_000_000;

/// All shortest paths from `i` to `j` as vertex sequences, or `None` when
/// there are more than `budget`.
fn shortest_paths(g: &Multigraph, i: usize, j: usize, budget: usize) -> Option<Vec<Vec<usize>>> {
    let di = g.distances_from(i);
    let dj = g.distances_from(j);
    let l = di[j]?;
    let on_geodesic = |v: usize, r: usize| di[v] == Some(r) && dj[v] == Some(l - r);
    let mut out = Vec::new();
    let mut stack = vec![vec![i]];
    while let Some(p) = stack.pop() {
        let r = p.len() - 1;
        let at = p[r];
        if r == l {
            out.push(p);
            if out.len() > budget {
                return None;
            }
            continue;
        }
        for (u, _) in g.neighbors(at) {
            if on_geodesic(u, r + 1) {
                let mut q = p.clone();
                q.push(u);
                stack.push(q);
            }
        }
    }
    out.sort();
    Some(out)
}

/// Searches for a system of two paths between `i` and `j`. Only shortest
/// paths are tried (every path of a system is shortest), and parallel copies
/// are considered up to relabeling. `Ok(None)` means no system exists;
/// exceeding `budget` candidates is an error.
pub fn order_two_certificate(g: &Multigraph, i: usize, j: usize, budget: usize) -> Result<Option<PathSystem>> {
    g.check_pair(i, j)?;
    g.require_connected()?;
    let paths = shortest_paths(g, i, j, budget).ok_or(Error::SearchBudgetExceeded(budget))?;
    let mut tried = 0usize;
    for (a, pa) in paths.iter().enumerate() {
        let first: Vec<EdgeRef> = pa.windows(2).map(|w| EdgeRef::new(w[0], w[1], 0)).collect();
        for pb in &paths[a..] {
            let base: Vec<EdgeRef> = pb.windows(2).map(|w| EdgeRef::new(w[0], w[1], 0)).collect();
            // Edges of the second path that may switch to a distinct parallel copy.
            let flexible: Vec<usize> = base
                .iter()
                .enumerate()
                .filter(|(_, e)| first.contains(e) && g.multiplicity(e.a, e.b) >= 2)
                .map(|(k, _)| k)
                .collect();
            if flexible.len() >= usize::BITS as usize {
                return Err(Error::SearchBudgetExceeded(budget));
            }
            for mask in 0..(1usize << flexible.len()) {
                tried += 1;
                if tried > budget {
                    return Err(Error::SearchBudgetExceeded(budget));
                }
                let mut second = base.clone();
                for (bit, &k) in flexible.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        second[k].copy = 1;
                    }
                }
                let ps = PathSystem::new(i, j, vec![first.clone(), second]);
                if verify_path_system(g, &ps) {
                    return Ok(Some(ps));
                }
            }
        }
    }
    Ok(None)
}

/// Outcome of [`path_family_search`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathFamilySearch {
    /// Families of `h` equal-length simple paths examined.
    pub families: usize,
    /// Families whose level cuts all separate the graph.
    pub separating: usize,
    /// The first family that is a valid path system.
    pub found: Option<PathSystem>,
}

fn simple_paths(g: &Multigraph, from: usize, to: usize, budget: usize) -> Option<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut stack = vec![vec![from]];
    while let Some(p) = stack.pop() {
        let at = *p.last().unwrap();
        if at == to {
            out.push(p);
            if out.len() > budget {
                return None;
            }
            continue;
        }
        for (u, _) in g.neighbors(at) {
            if !p.contains(&u) {
                let mut q = p.clone();
                q.push(u);
                stack.push(q);
            }
        }
    }
    out.sort();
    Some(out)
}

fn multisets(len: usize, size: usize, start: usize, acc: &mut Vec<usize>, out: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if acc.len() == size {
        return out(acc);
    }
    for k in start..len {
        acc.push(k);
        let go_on = multisets(len, size, k, acc, out);
        acc.pop();
        if !go_on {
            return false;
        }
    }
    true
}

/// Exhaustive search over every multiset of `h` simple `i`-`j` paths of a
/// common length in a simple graph, repetitions allowed. Unlike
/// [`order_two_certificate`] nothing is pruned, so this is only for small
/// graphs.
pub fn path_family_search(g: &Multigraph, i: usize, j: usize, h: usize, budget: usize) -> Result<PathFamilySearch> {
    g.check_pair(i, j)?;
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let all = simple_paths(g, i, j, budget).ok_or(Error::SearchBudgetExceeded(budget))?;
    let mut result = PathFamilySearch { families: 0, separating: 0, found: None };
    let lengths: BTreeSet<usize> = all.iter().map(|p| p.len()).collect();
    for len in lengths {
        let same: Vec<&Vec<usize>> = all.iter().filter(|p| p.len() == len).collect();
        let mut failure = None;
        let finished = multisets(same.len(), h, 0, &mut Vec::new(), &mut |pick| {
            result.families += 1;
            if result.families > budget {
                failure = Some(Error::SearchBudgetExceeded(budget));
                return false;
            }
            let paths: Vec<Vec<usize>> = pick.iter().map(|&k| same[k].clone()).collect();
            let ps = match PathSystem::from_vertex_paths(&paths) {
                Ok(ps) => ps,
                Err(e) => {
                    failure = Some(e);
                    return false;
                }
            };
            result.separating += level_cuts_separate(g, &ps) as usize;
            if verify_path_system(g, &ps) {
                result.found = Some(ps);
                return false;
            }
            true
        });
        if let Some(e) = failure {
            return Err(e);
        }
        if !finished {
            break;
        }
    }
    Ok(result)
}

/// The marking read off a path system: the vertex at position `r` of the
/// paths gets weight `r`, plus 2 for each shared edge up to that position
/// when two paths overlap. Vertices off the paths take the weight of the
/// path vertices they reach without using path edges.
pub fn marking_from_path_system(g: &Multigraph, ps: &PathSystem) -> Result<Marking> {
    check_path_system(g, ps)?;
    g.require_connected()?;
    let shared = ps.shared_edges();
    if !shared.is_empty() && ps.path_count() != 2 {
        return invalid("overlapping paths only certify an order when there are two of them");
    }

    let n = g.vertex_count();
    let mut weight: Vec<Option<BigInt>> = vec![None; n];
    let mut rest = g.clone();
    let used: BTreeSet<EdgeRef> = ps.paths.iter().flatten().copied().collect();
    for e in &used {
        rest.remove_edges(e.a, e.b, 1)?;
    }
    for (p, path) in ps.paths.iter().enumerate() {
        let verts = ps.vertices(p).expect("checked above");
        let mut w = BigInt::from(0);
        weight[verts[0]] = Some(w.clone());
        for (k, e) in path.iter().enumerate() {
            w += if shared.contains(e) { 2 } else { 1 };
            weight[verts[k + 1]] = Some(w.clone());
        }
    }
    let on_paths: Vec<usize> = (0..n).filter(|&v| weight[v].is_some()).collect();
    for &v in &on_paths {
        let w = weight[v].clone();
        for (u, inside) in rest.component_of(v).into_iter().enumerate() {
            if !inside {
                continue;
            }
            match &weight[u] {
                None => weight[u] = w.clone(),
                Some(x) if Some(x) == w.as_ref() => {}
                Some(_) => return invalid("a component off the paths touches two different weights"),
            }
        }
    }
    let weights = weight
        .into_iter()
        .map(|w| w.ok_or_else(|| Error::InvalidPathSystem("a vertex is not reached".into())))
        .collect::<Result<Vec<_>>>()?;
    let mk = Marking::new(ps.from, ps.to, BigInt::from(ps.path_count()), weights);
    check_marking(g, &mk)?;
    Ok(mk)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{chain_graph, pair_order};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn c4_arcs() -> PathSystem {
        PathSystem::from_vertex_paths(&[vec![0, 1, 2], vec![0, 3, 2]]).unwrap()
    }

    #[test]
    fn verify_examples() {
        let c4 = Multigraph::cycle(4);
        assert!(verify_path_system(&c4, &c4_arcs()));
        for (h, l) in [(2, 3), (3, 2), (4, 4)] {
            let c = chain_graph(&vec![l; h]).unwrap();
            let paths: Vec<Vec<usize>> = (0..h).map(|k| (0..=l).map(|r| c.chain_vertex(k, r).unwrap()).collect()).collect();
            assert!(verify_path_system(&c.graph, &PathSystem::from_vertex_paths(&paths).unwrap()));
        }
        let c5 = Multigraph::cycle(5);
        let uneven = PathSystem::from_vertex_paths(&[vec![0, 1, 2], vec![0, 4, 3, 2]]).unwrap();
        assert!(!verify_path_system(&c5, &uneven));
        let twice = PathSystem::from_vertex_paths(&[vec![0, 1, 2], vec![0, 1, 2]]).unwrap();
        assert!(matches!(check_path_system(&c4, &twice), Err(Error::InvalidPathSystem(m)) if m.contains("coincide")));
        let broken = PathSystem::new(0, 2, vec![vec![EdgeRef::new(0, 1, 0), EdgeRef::new(3, 2, 0)]]);
        assert!(!verify_path_system(&c4, &broken));
        let missing = PathSystem::new(0, 2, vec![vec![EdgeRef::new(0, 1, 1), EdgeRef::new(1, 2, 0)]]);
        assert!(!verify_path_system(&c4, &missing));
    }

    #[test]
    fn order_one() {
        let p5 = Multigraph::path(5);
        assert!(order_one_pair(&p5, 0, 4).unwrap());
        for j in 1..6 {
            assert!(!order_one_pair(&Multigraph::cycle(6), 0, j).unwrap());
        }
        let theta = chain_graph(&[2, 3, 3]).unwrap().graph;
        for i in 0..theta.vertex_count() {
            for j in 0..theta.vertex_count() {
                if i != j {
                    assert!(!order_one_pair(&theta, i, j).unwrap());
                }
            }
        }
        assert!(order_one_pair(&p5, 0, 0).is_err());
    }

    #[test]
    fn spread() {
        assert!(spread_check(&Multigraph::cycle(3)).unwrap());
        assert!(!spread_check(&Multigraph::path(4)).unwrap());
        let bowtie = Multigraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert!(spread_check(&bowtie).unwrap());
        assert_eq!(spread_check(&Multigraph::new(2)), Err(Error::Disconnected));
    }

    #[test]
    fn order_two_search() {
        let c4 = Multigraph::cycle(4);
        let ps = order_two_certificate(&c4, 0, 2, DEFAULT_SEARCH_BUDGET).unwrap().unwrap();
        assert_eq!(ps, c4_arcs());
        let c5 = Multigraph::cycle(5);
        for j in 1..5 {
            assert_eq!(order_two_certificate(&c5, 0, j, DEFAULT_SEARCH_BUDGET).unwrap(), None);
        }
        let g2 = Multigraph::dipole(2);
        let ps = order_two_certificate(&g2, 0, 1, DEFAULT_SEARCH_BUDGET).unwrap().unwrap();
        assert_eq!(ps.paths, vec![vec![EdgeRef::new(0, 1, 0)], vec![EdgeRef::new(0, 1, 1)]]);
        assert_eq!(order_two_certificate(&c4, 0, 2, 1), Err(Error::SearchBudgetExceeded(1)));
    }

    #[test]
    fn order_two_matches_algebra() {
        for (n, max_mult) in [(2, 3), (3, 3), (4, 2), (5, 1)] {
            for g in crate::graph::enumerate_connected(n, max_mult).unwrap() {
                for i in 0..n {
                    for j in i + 1..n {
                        let cert = order_two_certificate(&g, i, j, DEFAULT_SEARCH_BUDGET).unwrap();
                        let two = pair_order(&g, i, j).unwrap() == BigInt::from(2);
                        assert_eq!(cert.is_some(), two, "{g:?} {i} {j}");
                        if let Some(ps) = cert {
                            let mk = marking_from_path_system(&g, &ps).unwrap();
                            assert_eq!(mk.order, BigInt::from(2));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn overlapping_pair() {
        // Two paths sharing their middle edge: 0 -{a,b}- 1 - 2 -{c,d}- 3 with
        // a single edge 1-2 used by both.
        let g = Multigraph::from_edges(4, &[(0, 1), (0, 1), (1, 2), (2, 3), (2, 3)]).unwrap();
        let ps = PathSystem::new(0, 3, vec![
            vec![EdgeRef::new(0, 1, 0), EdgeRef::new(1, 2, 0), EdgeRef::new(2, 3, 0)],
            vec![EdgeRef::new(0, 1, 1), EdgeRef::new(1, 2, 0), EdgeRef::new(2, 3, 1)],
        ]);
        let mk = marking_from_path_system(&g, &ps).unwrap();
        assert_eq!(mk.weights, ints(&[0, 1, 3, 4]));
        assert_eq!(pair_order(&g, 0, 3).unwrap(), BigInt::from(2));
    }

    #[test]
    fn markings_from_systems() {
        assert_eq!(marking_from_path_system(&Multigraph::cycle(4), &c4_arcs()).unwrap().weights, ints(&[0, 1, 2, 1]));
        let g2 = Multigraph::dipole(2);
        let ps = order_two_certificate(&g2, 0, 1, DEFAULT_SEARCH_BUDGET).unwrap().unwrap();
        let mk = marking_from_path_system(&g2, &ps).unwrap();
        assert_eq!((mk.order, mk.weights), (BigInt::from(2), ints(&[0, 1])));

        let c = chain_graph(&[3, 3, 3]).unwrap();
        let paths: Vec<Vec<usize>> = (0..3).map(|k| (0..=3).map(|r| c.chain_vertex(k, r).unwrap()).collect()).collect();
        let mk = marking_from_path_system(&c.graph, &PathSystem::from_vertex_paths(&paths).unwrap()).unwrap();
        assert_eq!(mk.order, BigInt::from(3));
        for k in 0..3 {
            for r in 0..=3 {
                assert_eq!(mk.weights[c.chain_vertex(k, r).unwrap()], BigInt::from(r));
            }
        }

        // A pendant triangle off the middle of a C_4 arc inherits its weight.
        let mut g = Multigraph::cycle(4);
        let x = g.add_vertex();
        let y = g.add_vertex();
        for (a, b) in [(1, x), (x, y), (y, 1)] {
            g.add_edges(a, b, 1).unwrap();
        }
        let mk = marking_from_path_system(&g, &c4_arcs()).unwrap();
        assert_eq!(mk.weights, ints(&[0, 1, 2, 1, 1, 1]));
    }

    #[test]
    fn cycles_have_no_full_system() {
        // Every pair of order h in C_h, every family of h simple paths of a
        // common length (repetitions allowed): none separates at every level.
        for h in 3..=4usize {
            let g = Multigraph::cycle(h);
            let mut pairs_seen = 0;
            for i in 0..h {
                for j in 0..h {
                    if i == j || pair_order(&g, i, j).unwrap() != BigInt::from(h) {
                        continue;
                    }
                    pairs_seen += 1;
                    let s = path_family_search(&g, i, j, h, DEFAULT_SEARCH_BUDGET).unwrap();
                    assert!(s.families > 0);
                    assert_eq!((s.separating, s.found), (0, None));
                }
            }
            assert!(pairs_seen > 0);
        }
        let s = path_family_search(&Multigraph::cycle(4), 0, 2, 2, DEFAULT_SEARCH_BUDGET).unwrap();
        assert!(s.found.is_some());
        assert!(path_family_search(&Multigraph::dipole(2), 0, 1, 2, 10).is_err());
    }

    #[test]
    fn text_round_trip() {
        let g = Multigraph::from_edges(4, &[(0, 1), (0, 1), (1, 2), (2, 3), (2, 3)]).unwrap();
        let ps = PathSystem::new(0, 3, vec![
            vec![EdgeRef::new(0, 1, 0), EdgeRef::new(1, 2, 0), EdgeRef::new(2, 3, 0)],
            vec![EdgeRef::new(0, 1, 1), EdgeRef::new(1, 2, 0), EdgeRef::new(2, 3, 1)],
        ]);
        let text = ps.to_text();
        assert_eq!(text, "system 1 4\npath 1-2 2-3 3-4\npath 1-2:2 2-3 3-4:2\n");
        assert_eq!(PathSystem::parse(&text).unwrap(), ps);
        assert!(verify_path_system(&g, &ps));
        assert!(PathSystem::parse("path 1-2\n").is_err());
        assert!(PathSystem::parse("system 1 2\npath 1-2:0\n").is_err());
    }
}
