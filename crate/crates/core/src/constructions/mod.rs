//! Operations on marked graphs that carry a valid marking to a valid marking,
//! and the reduction of any marked graph to a string of dipoles.
//!
//! Every operation returns a new [`MarkedGraph`] whose marking has been
//! re-verified and shifted so its minimum weight is zero.

mod reduce;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

pub use reduce::{reduce_to_string, reduce_to_string_with, string_graph, StringDecomposition, ThickenOrder, TraceStep};

use crate::error::{Error, Result};
use crate::graph::{EdgeRef, GraphDocument, Multigraph};
use crate::group::{check_marking, LaplacianCokernel, Marking};

/// A graph together with a verified marking of one of its vertex pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedGraph {
    graph: Multigraph,
    mk: Marking,
}

impl MarkedGraph {
    /// Wraps an existing marking after checking it.
    pub fn new(graph: Multigraph, mk: Marking) -> Result<Self> {
        check_marking(&graph, &mk)?;
        Ok(MarkedGraph { graph, mk })
    }

    /// Computes the order and normalized marking of the pair `(i, j)`.
    pub fn from_pair(graph: Multigraph, i: usize, j: usize) -> Result<Self> {
        let mk = LaplacianCokernel::new(&graph)?.marking(i, j)?;
        Ok(MarkedGraph { graph, mk })
    }

    /// Two vertices joined by `h` edges, weights `(0, 1)`.
    pub fn dipole(h: u32) -> Result<Self> {
        if h == 0 {
            return Err(Error::InvalidArgument("a dipole needs at least one edge".into()));
        }
        Ok(MarkedGraph { graph: Multigraph::dipole(h), mk: Marking::from_i64(0, 1, h.into(), &[0, 1]) })
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn marking(&self) -> &Marking {
        &self.mk
    }

    pub fn order(&self) -> &BigInt {
        &self.mk.order
    }

    pub fn weights(&self) -> &[BigInt] {
        &self.mk.weights
    }

    pub fn weight(&self, v: usize) -> &BigInt {
        &self.mk.weights[v]
    }

    /// The marked vertex of smallest weight.
    pub fn low(&self) -> usize {
        self.mk.i
    }

    /// The marked vertex of largest weight.
    pub fn high(&self) -> usize {
        self.mk.j
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn into_parts(self) -> (Multigraph, Marking) {
        (self.graph, self.mk)
    }

    /// Graph text with one `w` line per vertex and a `p` line for the pair.
    pub fn to_text(&self) -> String {
        crate::graph::text::write_document(&self.graph, Some(&self.mk.weights), Some((self.mk.i, self.mk.j, &self.mk.order)))
    }

    /// Parses the format written by [`MarkedGraph::to_text`]. Weights and the
    /// pair line are both required.
    pub fn parse(text: &str) -> Result<Self> {
        let doc = GraphDocument::parse(text)?;
        let weights = doc.weights.ok_or_else(|| Error::parse(0, "marked graph needs `w` lines"))?;
        let (i, j, h) = doc.pair.ok_or_else(|| Error::parse(0, "marked graph needs a `p` line"))?;
        MarkedGraph::new(doc.graph, Marking::new(i, j, h, weights))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        let n = self.vertex_count();
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        Ok(())
    }

    fn require_equal_weights(&self, a: usize, b: usize) -> Result<()> {
        if self.weight(a) != self.weight(b) {
            return Err(Error::UnequalWeights { a, b, wa: self.weight(a).to_string(), wb: self.weight(b).to_string() });
        }
        Ok(())
    }

    fn finish(graph: Multigraph, mk: Marking) -> Result<Self> {
        MarkedGraph::new(graph, mk.normalized())
    }

    /// Identifies vertex `at` of the connected graph `h` with vertex `attach`;
    /// the other vertices of `h` are appended in order and take the weight of
    /// `attach`.
    pub fn add_graph(&self, h: &Multigraph, attach: usize, at: usize) -> Result<Self> {
        self.check_vertex(attach)?;
        if at >= h.vertex_count() {
            return Err(Error::VertexOutOfRange { vertex: at, n: h.vertex_count() });
        }
        h.require_connected()?;
        let n = self.vertex_count();
        let mut graph = self.graph.clone();
        let mut map = vec![attach; h.vertex_count()];
        for v in 0..h.vertex_count() {
            if v != at {
                map[v] = graph.add_vertex();
            }
        }
        for (a, b, c) in h.edge_bundles() {
            graph.add_edges(map[a], map[b], c)?;
        }
        let mut weights = self.mk.weights.clone();
        weights.resize(graph.vertex_count(), self.weight(attach).clone());
        debug_assert_eq!(weights.len(), n + h.vertex_count() - 1);
        MarkedGraph::finish(graph, Marking::new(self.mk.i, self.mk.j, self.mk.order.clone(), weights))
    }

    /// Merges two non-adjacent, unmarked vertices of equal weight into the
    /// lower-indexed one.
    pub fn glue(&self, a: usize, b: usize) -> Result<Self> {
        self.graph.check_pair(a, b)?;
        for v in [a, b] {
            if v == self.mk.i || v == self.mk.j {
                return Err(Error::MarkedVertex(v));
            }
        }
        self.require_equal_weights(a, b)?;
        let (keep, drop) = (a.min(b), a.max(b));
        let (graph, map) = self.graph.merge_vertices(keep, drop)?;
        let mut weights = self.mk.weights.clone();
        weights.remove(drop);
        MarkedGraph::finish(graph, Marking::new(map[self.mk.i], map[self.mk.j], self.mk.order.clone(), weights))
    }

    /// Replaces the `e` edges between `v` and `u` (weights differing by
    /// `g >= 2`) by a chain through `g - 1` new vertices, each link carrying
    /// `e * g` edges. The new vertices are appended in order starting from
    /// the endpoint of lower weight, and get weights one apart.
    pub fn thicken(&self, v: usize, u: usize) -> Result<Self> {
        self.graph.check_pair(v, u)?;
        let e = self.graph.multiplicity(v, u);
        if e == 0 {
            return Err(Error::NoEdge(v, u));
        }
        let (hi, lo) = if self.weight(v) >= self.weight(u) { (v, u) } else { (u, v) };
        let gap = self.weight(hi) - self.weight(lo);
        if gap < BigInt::from(2) {
            return Err(Error::NothingToThicken { a: v, b: u, gap: gap.to_string() });
        }
        let steps = gap
            .to_u32()
            .ok_or_else(|| Error::InvalidArgument(format!("weight gap {gap} is too large to thicken")))?;
        let link = e
            .checked_mul(steps)
            .ok_or_else(|| Error::InvalidArgument(format!("link multiplicity {e} * {steps} overflows")))?;

        let mut graph = self.graph.clone();
        graph.remove_edges(lo, hi, e)?;
        let mut weights = self.mk.weights.clone();
        let mut prev = lo;
        for r in 1..steps {
            let w = graph.add_vertex();
            graph.add_edges(prev, w, link)?;
            weights.push(self.weight(lo) + r);
            prev = w;
        }
        graph.add_edges(prev, hi, link)?;
        MarkedGraph::finish(graph, Marking::new(self.mk.i, self.mk.j, self.mk.order.clone(), weights))
    }

    /// Deletes the listed edge copies, each of which must join two vertices
    /// of equal weight, and keeps the component containing the marked pair.
    pub fn remove_equal_weight_edges(&self, edges: &[EdgeRef]) -> Result<Self> {
        let mut counts: BTreeMap<(usize, usize), std::collections::BTreeSet<u32>> = BTreeMap::new();
        for e in edges {
            self.graph.check_pair(e.a, e.b)?;
            let e = EdgeRef::new(e.a, e.b, e.copy);
            if e.copy >= self.graph.multiplicity(e.a, e.b) {
                return Err(Error::NoEdgeCopy { a: e.a, b: e.b, copy: e.copy });
            }
            self.require_equal_weights(e.a, e.b)?;
            counts.entry((e.a, e.b)).or_default().insert(e.copy);
        }
        let mut graph = self.graph.clone();
        for ((a, b), copies) in counts {
            graph.remove_edges(a, b, copies.len() as u32)?;
        }
        let keep = graph.component_of(self.mk.i);
        if !keep[self.mk.j] {
            return Err(Error::InvalidMarking("marked vertices ended up in different components".into()));
        }
        let (graph, map) = graph.retain_vertices(&keep);
        let weights = self.mk.weights.iter().zip(&keep).filter(|(_, k)| **k).map(|(w, _)| w.clone()).collect();
        let mk = Marking::new(map[self.mk.i].unwrap(), map[self.mk.j].unwrap(), self.mk.order.clone(), weights);
        MarkedGraph::finish(graph, mk)
    }

    /// Every edge copy joining two vertices of equal weight.
    pub fn equal_weight_edges(&self) -> Vec<EdgeRef> {
        self.graph.edge_refs().filter(|e| self.weight(e.a) == self.weight(e.b)).collect()
    }

    /// Adds `c` edges between two distinct vertices of equal weight.
    pub fn add_edges(&self, k: usize, l: usize, c: u32) -> Result<Self> {
        self.graph.check_pair(k, l)?;
        self.require_equal_weights(k, l)?;
        let mut graph = self.graph.clone();
        graph.add_edges(k, l, c)?;
        MarkedGraph::finish(graph, self.mk.clone())
    }

    /// Replaces every edge copy by a path of `b` edges. Old weights are
    /// multiplied by `b`; the `r`-th new vertex on an edge from `k` to `l`
    /// gets `b s_k + (s_l - s_k) r`. New vertices are appended edge copy by
    /// edge copy, in [`Multigraph::edge_refs`] order, each run starting next
    /// to the lower-indexed endpoint.
    pub fn subdivide_all(&self, b: u32) -> Result<Self> {
        if b == 0 {
            return Err(Error::InvalidArgument("subdivision factor must be at least 1".into()));
        }
        let bb = BigInt::from(b);
        let mut graph = Multigraph::new(self.vertex_count());
        let mut weights: Vec<BigInt> = self.mk.weights.iter().map(|s| s * &bb).collect();
        for e in self.graph.edge_refs() {
            let (sk, sl) = (self.weight(e.a), self.weight(e.b));
            let mut prev = e.a;
            for r in 1..b {
                let w = graph.add_vertex();
                graph.add_edges(prev, w, 1)?;
                weights.push(sk * &bb + (sl - sk) * r);
                prev = w;
            }
            graph.add_edges(prev, e.b, 1)?;
        }
        MarkedGraph::finish(graph, Marking::new(self.mk.i, self.mk.j, self.mk.order.clone(), weights))
    }

    /// Glues the high marked vertex of `self` to the low marked vertex of
    /// `other`. The result is marked at `(self.low, other.high)` with order
    /// `lcm(h, h')`; the vertices of `other` other than its low vertex are
    /// appended in order.
    pub fn coalesce(&self, other: &MarkedGraph) -> Result<Self> {
        let (h1, h2) = (self.order(), other.order());
        let g = h1.gcd(h2);
        let (f1, f2) = (h2 / &g, h1 / &g);
        let n = self.vertex_count();
        let glue_at = self.high();

        let mut graph = self.graph.clone();
        let top = self.weight(glue_at).clone();
        let mut weights: Vec<BigInt> = self.mk.weights.iter().map(|s| (s - &top) * &f1).collect();

        let base = other.weight(other.low()).clone();
        let mut map = vec![glue_at; other.vertex_count()];
        for v in 0..other.vertex_count() {
            if v != other.low() {
                map[v] = graph.add_vertex();
                weights.push((other.weight(v) - &base) * &f2);
            }
        }
        for (a, b, c) in other.graph.edge_bundles() {
            graph.add_edges(map[a], map[b], c)?;
        }
        debug_assert_eq!(graph.vertex_count(), n + other.vertex_count() - 1);
        let order = h1.lcm(h2);
        MarkedGraph::finish(graph, Marking::new(self.low(), map[other.high()], order, weights))
    }

    /// Vertices grouped by weight, in increasing weight; each group sorted.
    pub fn weight_classes(&self) -> Vec<(BigInt, Vec<usize>)> {
        let mut classes: BTreeMap<&BigInt, Vec<usize>> = BTreeMap::new();
        for (v, w) in self.mk.weights.iter().enumerate() {
            classes.entry(w).or_default().push(v);
        }
        classes.into_iter().map(|(w, vs)| (w.clone(), vs)).collect()
    }
}

/// `|Phi(G')| / |Phi(G)|` after thickening edges of multiplicity `e` across a
/// weight gap `s`: `s (e s)^(s-1)`.
pub fn thickening_factor(e: u32, s: u32) -> BigInt {
    let es = BigInt::from(e) * s;
    BigInt::from(s) * num_traits::pow(es, (s - 1) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{critical_group, pair_order, verify_marking};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn c4_two_arcs() -> MarkedGraph {
        // 0 - 1 - 3 - 2 - 0 with the pair (0, 3) at opposite corners.
        let g = Multigraph::from_edges(4, &[(0, 1), (1, 3), (3, 2), (2, 0)]).unwrap();
        MarkedGraph::from_pair(g, 0, 3).unwrap()
    }

    #[test]
    fn two_arc_marking() {
        let m = c4_two_arcs();
        assert_eq!(m.order(), &BigInt::from(2));
        assert_eq!(m.weights(), ints(&[0, 1, 1, 2]).as_slice());
    }

    #[test]
    fn add_graph_examples() {
        let g2 = MarkedGraph::dipole(2).unwrap();
        let tri = g2.add_graph(&Multigraph::cycle(3), 1, 0).unwrap();
        assert_eq!(tri.vertex_count(), 4);
        assert_eq!(tri.order(), &BigInt::from(2));
        assert_eq!(tri.weights(), ints(&[0, 1, 1, 1]).as_slice());
        assert_eq!(pair_order(tri.graph(), 0, 1).unwrap(), BigInt::from(2));

        let c3 = MarkedGraph::from_pair(Multigraph::cycle(3), 0, 1).unwrap();
        let leaf = c3.add_graph(&Multigraph::path(2), 1, 0).unwrap();
        assert_eq!(pair_order(leaf.graph(), 0, 1).unwrap(), BigInt::from(3));

        assert_eq!(c3.add_graph(&Multigraph::new(1), 2, 0).unwrap(), c3);
        assert_eq!(c3.add_graph(&Multigraph::new(2), 2, 0), Err(Error::Disconnected));
        assert!(c3.add_graph(&Multigraph::path(2), 3, 0).is_err());
    }

    #[test]
    fn glue_examples() {
        let m = c4_two_arcs();
        let glued = m.glue(1, 2).unwrap();
        assert_eq!(glued.graph(), &Multigraph::from_edges(3, &[(0, 1), (0, 1), (1, 2), (1, 2)]).unwrap());
        assert_eq!(glued.weights(), ints(&[0, 1, 2]).as_slice());
        assert_eq!(pair_order(glued.graph(), 0, 2).unwrap(), BigInt::from(2));

        assert!(matches!(m.glue(0, 1), Err(Error::MarkedVertex(0))));
        let c5 = MarkedGraph::from_pair(Multigraph::cycle(5), 0, 4).unwrap();
        assert!(matches!(c5.glue(1, 2), Err(Error::UnequalWeights { .. })));

        // Two leaves of equal weight hung on the same vertex.
        let c3 = MarkedGraph::from_pair(Multigraph::cycle(3), 0, 1).unwrap();
        let two = c3.add_graph(&Multigraph::path(2), 2, 0).unwrap().add_graph(&Multigraph::path(2), 2, 0).unwrap();
        let glued = two.glue(3, 4).unwrap();
        assert_eq!(glued.graph().multiplicity(2, 3), 2);
        assert_eq!(pair_order(glued.graph(), 0, 1).unwrap(), BigInt::from(3));
    }

    #[test]
    fn thicken_examples() {
        let c3 = MarkedGraph::from_pair(Multigraph::cycle(3), 0, 2).unwrap();
        assert_eq!(c3.weights(), ints(&[0, 1, 2]).as_slice());
        let t = c3.thicken(0, 2).unwrap();
        assert_eq!(t.vertex_count(), 4);
        assert_eq!(t.graph().multiplicity(0, 3), 2);
        assert_eq!(t.graph().multiplicity(3, 2), 2);
        assert_eq!(t.weights(), ints(&[0, 1, 2, 1]).as_slice());
        assert_eq!(t.graph().spanning_tree_count().unwrap(), BigInt::from(12));
        assert_eq!(thickening_factor(1, 2) * 3, BigInt::from(12));

        // Reversed argument order is accepted.
        assert_eq!(c3.thicken(2, 0).unwrap(), t);
        assert!(matches!(c3.thicken(0, 1), Err(Error::NothingToThicken { .. })));
        let p = MarkedGraph::from_pair(Multigraph::path(3), 0, 2).unwrap();
        assert!(matches!(p.thicken(0, 2), Err(Error::NoEdge(0, 2))));
    }

    #[test]
    fn thicken_double_edge() {
        // A double edge across a weight gap of 2, plus a path 0 - 2 - 1.
        let g = Multigraph::from_edges(3, &[(0, 1), (0, 1), (0, 2), (2, 1)]).unwrap();
        let m = MarkedGraph::from_pair(g, 0, 1).unwrap();
        assert_eq!(m.weights(), ints(&[0, 2, 1]).as_slice());
        let t = m.thicken(0, 1).unwrap();
        assert_eq!(t.graph().multiplicity(0, 3), 4);
        assert_eq!(t.graph().multiplicity(3, 1), 4);
        let before = m.graph().spanning_tree_count().unwrap();
        let after = t.graph().spanning_tree_count().unwrap();
        assert_eq!(after, thickening_factor(2, 2) * before);

        // The double edge of G_2 stretched over a gap of 2: 0 =4= w =4= 1.
        let mut stretched = Multigraph::new(3);
        stretched.add_edges(0, 2, 4).unwrap();
        stretched.add_edges(2, 1, 4).unwrap();
        let kappa = stretched.spanning_tree_count().unwrap();
        assert_eq!(kappa, BigInt::from(16));
        assert_eq!(kappa, thickening_factor(2, 2) * Multigraph::dipole(2).spanning_tree_count().unwrap());
    }

    #[test]
    fn remove_edges_examples() {
        let mut g = Multigraph::from_edges(4, &[(0, 1), (1, 3), (3, 2), (2, 0)]).unwrap();
        g.add_edges(1, 2, 1).unwrap();
        let m = MarkedGraph::from_pair(g, 0, 3).unwrap();
        assert_eq!(m.weights(), ints(&[0, 1, 1, 2]).as_slice());
        let r = m.remove_equal_weight_edges(&m.equal_weight_edges()).unwrap();
        assert_eq!(r, c4_two_arcs());
        assert_eq!(m.remove_equal_weight_edges(&[]).unwrap(), m);
        assert!(matches!(m.remove_equal_weight_edges(&[EdgeRef::new(0, 1, 0)]), Err(Error::UnequalWeights { .. })));
        assert!(matches!(m.remove_equal_weight_edges(&[EdgeRef::new(1, 2, 1)]), Err(Error::NoEdgeCopy { .. })));

        // A dumbbell: a triangle hung off a weight-1 vertex by an equal-weight bridge.
        let c4 = c4_two_arcs();
        let tri = c4.add_graph(&Multigraph::path(2), 1, 0).unwrap().add_graph(&Multigraph::cycle(3), 4, 0).unwrap();
        assert_eq!(tri.vertex_count(), 7);
        let cut = tri.remove_equal_weight_edges(&[EdgeRef::new(1, 4, 0)]).unwrap();
        assert_eq!(cut, c4);
    }

    #[test]
    fn add_edges_examples() {
        let m = c4_two_arcs();
        let chord = m.add_edges(1, 2, 1).unwrap();
        assert_eq!(chord.order(), &BigInt::from(2));
        assert_eq!(m.add_edges(1, 2, 0).unwrap(), m);
        assert!(matches!(m.add_edges(0, 1, 1), Err(Error::UnequalWeights { .. })));

        // Same as attaching a dipole and gluing its far end.
        let via = m.add_graph(&Multigraph::dipole(3), 1, 0).unwrap().glue(2, 4).unwrap();
        assert_eq!(via, m.add_edges(1, 2, 3).unwrap());
    }

    #[test]
    fn subdivide_examples() {
        let k2 = MarkedGraph::from_pair(Multigraph::path(2), 0, 1).unwrap();
        let p4 = k2.subdivide_all(3).unwrap();
        assert_eq!(p4.graph(), &Multigraph::from_edges(4, &[(0, 2), (2, 3), (3, 1)]).unwrap());
        assert_eq!(p4.order(), &BigInt::from(1));

        let c3 = MarkedGraph::from_pair(Multigraph::cycle(3), 0, 2).unwrap();
        let c6 = c3.subdivide_all(2).unwrap();
        assert_eq!(c6.vertex_count(), 6);
        assert_eq!(&c6.weights()[..3], ints(&[0, 2, 4]).as_slice());
        assert!(verify_marking(c6.graph(), c6.marking()));
        assert_eq!(pair_order(c6.graph(), 0, 2).unwrap(), BigInt::from(3));

        for h in 1..5u32 {
            for l in 1..5u32 {
                let s = MarkedGraph::dipole(h).unwrap().subdivide_all(l).unwrap();
                let chain = crate::group::chain_graph(&vec![l as usize; h as usize]).unwrap();
                assert_eq!(s.graph().vertex_count(), chain.graph.vertex_count());
                assert_eq!(critical_group(s.graph()).unwrap(), critical_group(&chain.graph).unwrap());
                assert_eq!(s.order(), &BigInt::from(h));
            }
        }
        assert_eq!(c3.subdivide_all(1).unwrap(), c3);
        assert!(c3.subdivide_all(0).is_err());
    }

    #[test]
    fn coalesce_examples() {
        let g2 = MarkedGraph::dipole(2).unwrap();
        let g3 = MarkedGraph::dipole(3).unwrap();
        let c = g2.coalesce(&g3).unwrap();
        assert_eq!(c.vertex_count(), 3);
        assert_eq!(c.order(), &BigInt::from(6));
        assert_eq!(c.weights(), ints(&[0, 3, 5]).as_slice());
        assert_eq!(pair_order(c.graph(), 0, 2).unwrap(), BigInt::from(6));

        let same = g3.coalesce(&g3).unwrap();
        assert_eq!(same.order(), &BigInt::from(3));
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            assert_eq!(pair_order(same.graph(), i, j).unwrap(), BigInt::from(3));
        }

        let k2 = MarkedGraph::dipole(1).unwrap();
        let c5 = MarkedGraph::from_pair(Multigraph::cycle(5), 0, 4).unwrap();
        assert_eq!(c5.coalesce(&k2).unwrap().order(), &BigInt::from(5));
        assert_eq!(k2.coalesce(&c5).unwrap().order(), &BigInt::from(5));
    }

    #[test]
    fn text_round_trip() {
        let m = c4_two_arcs().add_edges(1, 2, 2).unwrap();
        let text = m.to_text();
        assert!(text.contains("p 1 4 2"));
        assert_eq!(MarkedGraph::parse(&text).unwrap(), m);
        assert!(MarkedGraph::parse("n 2\ne 1 2\n").is_err());
        assert!(matches!(MarkedGraph::parse("n 2\ne 1 2\nw 1 0\nw 2 1\np 1 2 2\n"), Err(Error::InvalidMarking(_))));
    }
}
