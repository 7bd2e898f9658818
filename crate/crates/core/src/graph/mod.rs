//! Connected multigraphs without loops, their Laplacians and the elementary
//! combinatorics (bridges, spanning trees, distances, enumeration).
//!
//! Vertex indices in the library API are zero-based. The text format and the
//! command line use one-based indices.

mod bridges;
mod enumerate;
pub(crate) mod text;

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{One, Signed};

pub use enumerate::{enumerate_connected, random_connected_simple, ConnectedGraphs, MULTI_LIMIT, SIMPLE_LIMIT};
pub use text::GraphDocument;

use crate::error::{Error, Result};
use crate::linalg::{determinant, IntMatrix};

/// One of the parallel edges between `a < b`, numbered by `copy < c_ab`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef {
    pub a: usize,
    pub b: usize,
    pub copy: u32,
}

impl EdgeRef {
    /// Normalizes the endpoint order.
    pub fn new(x: usize, y: usize, copy: u32) -> Self {
        EdgeRef { a: x.min(y), b: x.max(y), copy }
    }

    pub fn other(&self, v: usize) -> usize {
        if v == self.a {
            self.b
        } else {
            self.a
        }
    }
}

/// A loopless multigraph on vertices `0..n`, stored as a symmetric matrix of
/// edge multiplicities.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    mult: Vec<u32>,
}

impl std::fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let edges: Vec<(usize, usize, u32)> = self.edge_bundles().collect();
        write!(f, "Multigraph {{ n: {}, edges: {:?} }}", self.n, edges)
    }
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph { n, mult: vec![0; n * n] }
    }

    /// Builds a graph from `(i, j)` pairs, each contributing one edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Multigraph::new(n);
        for &(i, j) in edges {
            g.add_edges(i, j, 1)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(Error::SameVertex(i));
        }
        Ok(())
    }

    pub fn multiplicity(&self, i: usize, j: usize) -> u32 {
        self.mult[i * self.n + j]
    }

    pub fn set_multiplicity(&mut self, i: usize, j: usize, c: u32) -> Result<()> {
        self.check_pair(i, j)?;
        self.mult[i * self.n + j] = c;
        self.mult[j * self.n + i] = c;
        Ok(())
    }

    /// Adds `c` parallel edges between `i` and `j`; loops are rejected.
    pub fn add_edges(&mut self, i: usize, j: usize, c: u32) -> Result<()> {
        self.check_pair(i, j)?;
        let total = self
            .multiplicity(i, j)
            .checked_add(c)
            .ok_or_else(|| Error::InvalidArgument("edge multiplicity overflow".into()))?;
        self.set_multiplicity(i, j, total)
    }

    /// Removes `c` of the edges between `i` and `j`.
    pub fn remove_edges(&mut self, i: usize, j: usize, c: u32) -> Result<()> {
        self.check_pair(i, j)?;
        let have = self.multiplicity(i, j);
        if have < c {
            return Err(Error::NoEdge(i, j));
        }
        self.set_multiplicity(i, j, have - c)
    }

    /// Appends an isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> usize {
        let n = self.n + 1;
        let mut mult = vec![0; n * n];
        for i in 0..self.n {
            mult[i * n..i * n + self.n].copy_from_slice(&self.mult[i * self.n..(i + 1) * self.n]);
        }
        self.n = n;
        self.mult = mult;
        n - 1
    }

    /// Neighbors of `v` with their edge multiplicities.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.mult[v * self.n..(v + 1) * self.n]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(u, &c)| (u, c))
    }

    /// `(i, j, c_ij)` for every adjacent pair with `i < j`, in lexicographic order.
    pub fn edge_bundles(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        (0..self.n).flat_map(move |i| {
            (i + 1..self.n).filter_map(move |j| {
                let c = self.multiplicity(i, j);
                (c > 0).then_some((i, j, c))
            })
        })
    }

    /// Every individual edge, bundles expanded into their copies.
    pub fn edge_refs(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        self.edge_bundles().flat_map(|(a, b, c)| (0..c).map(move |copy| EdgeRef { a, b, copy }))
    }

    pub fn edge_count(&self) -> u64 {
        self.edge_bundles().map(|(_, _, c)| u64::from(c)).sum()
    }

    pub fn degree(&self, v: usize) -> u64 {
        self.neighbors(v).map(|(_, c)| u64::from(c)).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.mult.iter().all(|&c| c <= 1)
    }

    /// Cycle rank `m - n + 1` (for connected graphs, the number of independent cycles).
    pub fn cycle_rank(&self) -> i64 {
        self.edge_count() as i64 - self.n as i64 + 1
    }

    /// Breadth-first distances from `src`; `None` for unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for (u, _) in self.neighbors(v) {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Membership mask of the connected component containing `v`.
    pub fn component_of(&self, v: usize) -> Vec<bool> {
        self.distances_from(v).iter().map(Option::is_some).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0).iter().all(|&x| x)
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Largest distance between two vertices; `None` if disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.n {
            for d in self.distances_from(v) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// `M(G)`: multiplicities off the diagonal, minus the degree on it. Rows
    /// and columns sum to zero.
    pub fn laplacian(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n, self.n);
        for i in 0..self.n {
            for (j, c) in self.neighbors(i) {
                m[(i, j)] = BigInt::from(c);
            }
            m[(i, i)] = -BigInt::from(self.degree(i));
        }
        m
    }

    /// The positive-semidefinite Laplacian `D - A`, i.e. `-M(G)`.
    pub fn psd_laplacian(&self) -> IntMatrix {
        self.laplacian().neg()
    }

    /// Number of spanning trees, as `|det|` of a reduced Laplacian.
    pub fn spanning_tree_count(&self) -> Result<BigInt> {
        self.require_connected()?;
        if self.n <= 1 {
            return Ok(BigInt::one());
        }
        let reduced = self.laplacian().minor(self.n - 1, self.n - 1);
        Ok(determinant(&reduced)?.abs())
    }

    /// Endpoints `(i, j)`, `i < j`, of every bridge.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        bridges::find_bridges(self)
    }

    /// True when no single edge removal disconnects the graph.
    pub fn is_multiply_connected(&self) -> bool {
        self.bridges().is_empty()
    }

    /// Subgraph induced on the vertices with `keep[v]`, preserving their
    /// relative order. Returns the new graph and the old-to-new index map.
    pub fn retain_vertices(&self, keep: &[bool]) -> (Multigraph, Vec<Option<usize>>) {
        let mut map = vec![None; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if keep[v] {
                map[v] = Some(next);
                next += 1;
            }
        }
        let mut g = Multigraph::new(next);
        for (i, j, c) in self.edge_bundles() {
            if let (Some(a), Some(b)) = (map[i], map[j]) {
                g.mult[a * next + b] = c;
                g.mult[b * next + a] = c;
            }
        }
        (g, map)
    }

    /// Identifies `drop` with `keep`, adding multiplicities; `drop` is removed
    /// and later vertices shift down by one. The two vertices must not be
    /// adjacent. Returns the old-to-new index map.
    pub fn merge_vertices(&self, keep: usize, drop: usize) -> Result<(Multigraph, Vec<usize>)> {
        self.check_pair(keep, drop)?;
        if self.multiplicity(keep, drop) > 0 {
            return Err(Error::Adjacent(keep, drop));
        }
        let mut merged = self.clone();
        for (u, c) in self.neighbors(drop) {
            merged.add_edges(keep, u, c)?;
        }
        let mask: Vec<bool> = (0..self.n).map(|v| v != drop).collect();
        let (g, map) = merged.retain_vertices(&mask);
        let map = (0..self.n)
            .map(|v| if v == drop { map[keep].unwrap() } else { map[v].unwrap() })
            .collect();
        Ok((g, map))
    }

    pub fn cycle(n: usize) -> Multigraph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Multigraph::new(n);
        for i in 0..n {
            g.add_edges(i, (i + 1) % n, 1).unwrap();
        }
        g
    }

    pub fn path(n: usize) -> Multigraph {
        let mut g = Multigraph::new(n);
        for i in 1..n {
            g.add_edges(i - 1, i, 1).unwrap();
        }
        g
    }

    pub fn complete(n: usize) -> Multigraph {
        let mut g = Multigraph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edges(i, j, 1).unwrap();
            }
        }
        g
    }

    /// `K_{p,q}` with the `p`-side on vertices `0..p`.
    pub fn complete_bipartite(p: usize, q: usize) -> Multigraph {
        let mut g = Multigraph::new(p + q);
        for i in 0..p {
            for j in p..p + q {
                g.add_edges(i, j, 1).unwrap();
            }
        }
        g
    }

    /// Two vertices joined by `h` parallel edges.
    pub fn dipole(h: u32) -> Multigraph {
        let mut g = Multigraph::new(2);
        g.set_multiplicity(0, 1, h).unwrap();
        g
    }

    pub fn to_text(&self) -> String {
        text::write_graph(self, None)
    }
}

impl std::str::FromStr for Multigraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(GraphDocument::parse(s)?.graph)
    }
}
