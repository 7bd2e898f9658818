//! The critical group of a connected multigraph, orders of vertex pairs and
//! the markings that certify them.
//!
//! For a connected graph `G` the cokernel `Z^n / Im M(G)` is `Z x Phi(G)`
//! with `|Phi(G)|` the number of spanning trees. The class of `e_i - e_j`
//! always lies in the finite part; its order is the order of the pair.

mod chain;
mod marking;

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

pub use chain::{chain_graph, chain_pair_order_formula, ChainGraph, ChainTarget};
pub use marking::{check_marking, pairing_self, verify_marking, Marking};

use crate::error::Result;
#[cfg(test)]
use crate::error::Error;
use crate::graph::Multigraph;
use crate::linalg::{basis_difference, ClassOrder, Cokernel};

/// Torsion invariant factors (all `> 1`, each dividing the next) plus the
/// rank of the free part.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupStructure {
    pub torsion_factors: Vec<BigInt>,
    pub free_rank: usize,
}

impl GroupStructure {
    pub fn order(&self) -> BigInt {
        self.torsion_factors.iter().product()
    }

    /// Largest invariant factor; 1 for the trivial group.
    pub fn exponent(&self) -> BigInt {
        self.torsion_factors.last().cloned().unwrap_or_else(BigInt::one)
    }

    pub fn is_cyclic(&self) -> bool {
        self.torsion_factors.len() <= 1
    }

    /// Minimal number of generators of the torsion part.
    pub fn generator_count(&self) -> usize {
        self.torsion_factors.len()
    }

    /// Checks the structural facts that hold for the critical group of a
    /// connected graph: order = spanning tree count, free rank one, and the
    /// generator count bounded by the cycle rank and by `n - 1 - diam`.
    pub fn satisfies_graph_bounds(&self, g: &Multigraph) -> bool {
        let Ok(kappa) = g.spanning_tree_count() else { return false };
        let Some(diam) = g.diameter() else { return false };
        let gens = self.generator_count() as i64;
        self.order() == kappa
            && self.free_rank == 1
            && gens <= g.cycle_rank()
            && gens <= g.vertex_count() as i64 - 1 - diam as i64
    }
}

impl fmt::Display for GroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion_factors.iter().map(|d| format!("Z/{d}")).collect();
        parts.extend(std::iter::repeat("Z".to_string()).take(self.free_rank));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" x "))
        }
    }
}

/// The cokernel of `M(G)` for a connected graph, computed once and queried
/// for many vertex pairs.
#[derive(Clone, Debug)]
pub struct LaplacianCokernel {
    graph: Multigraph,
    cokernel: Cokernel,
}

impl LaplacianCokernel {
    pub fn new(g: &Multigraph) -> Result<Self> {
        g.require_connected()?;
        Ok(LaplacianCokernel { graph: g.clone(), cokernel: Cokernel::new(&g.laplacian())? })
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn group(&self) -> GroupStructure {
        let snf = self.cokernel.smith();
        GroupStructure { torsion_factors: snf.torsion_factors(), free_rank: snf.free_rank() }
    }

    pub fn pair_order(&self, i: usize, j: usize) -> Result<BigInt> {
        self.graph.check_pair(i, j)?;
        let e = basis_difference(self.graph.vertex_count(), i, j)?;
        match self.cokernel.class_order(&e)? {
            ClassOrder::Finite(h) => Ok(h),
            // E_ij is orthogonal to the kernel vector (1,...,1) of a connected Laplacian.
            ClassOrder::Infinite => unreachable!("pair class of a connected graph has finite order"),
        }
    }

    /// The certificate `S` with `M(G) S = h E_ij`, `h` the pair order,
    /// shifted so that its smallest weight (at `i`) is zero.
    pub fn marking(&self, i: usize, j: usize) -> Result<Marking> {
        let h = self.pair_order(i, j)?;
        let n = self.graph.vertex_count();
        let target: Vec<BigInt> = basis_difference(n, i, j)?.into_iter().map(|x| x * &h).collect();
        let s = self.cokernel.solve(&target)?.expect("h * E_ij lies in the image by definition of h");
        let mk = Marking::new(i, j, h, s).normalized();
        check_marking(&self.graph, &mk)?;
        Ok(mk)
    }

    /// Orders of all pairs `i < j`, row-major.
    pub fn all_pair_orders(&self) -> Result<Vec<((usize, usize), BigInt)>> {
        let n = self.graph.vertex_count();
        let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                out.push(((i, j), self.pair_order(i, j)?));
            }
        }
        Ok(out)
    }
}

/// `Phi(G)` for a connected graph.
pub fn critical_group(g: &Multigraph) -> Result<GroupStructure> {
    Ok(LaplacianCokernel::new(g)?.group())
}

pub fn pair_order(g: &Multigraph, i: usize, j: usize) -> Result<BigInt> {
    g.check_pair(i, j)?;
    LaplacianCokernel::new(g)?.pair_order(i, j)
}

pub fn marking(g: &Multigraph, i: usize, j: usize) -> Result<Marking> {
    g.check_pair(i, j)?;
    LaplacianCokernel::new(g)?.marking(i, j)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn group_examples() {
        for n in 3..9 {
            let g = critical_group(&Multigraph::cycle(n)).unwrap();
            assert_eq!(g.torsion_factors, ints(&[n as i64]));
            assert_eq!(g.free_rank, 1);
        }
        assert_eq!(critical_group(&Multigraph::complete(4)).unwrap().torsion_factors, ints(&[4, 4]));
        let chain = chain_graph(&[1, 2, 3]).unwrap();
        assert_eq!(critical_group(&chain.graph).unwrap().torsion_factors, ints(&[11]));
        assert_eq!(critical_group(&Multigraph::path(4)).unwrap().torsion_factors, ints(&[]));
        assert_eq!(critical_group(&Multigraph::new(2)), Err(Error::Disconnected));
    }

    #[test]
    fn display() {
        let g = critical_group(&Multigraph::complete(4)).unwrap();
        assert_eq!(g.to_string(), "Z/4 x Z/4 x Z");
        assert_eq!(g.order(), BigInt::from(16));
        assert_eq!(g.exponent(), BigInt::from(4));
        let t = critical_group(&Multigraph::path(3)).unwrap();
        assert_eq!(t.to_string(), "Z");
        assert_eq!(t.exponent(), BigInt::from(1));
    }

    #[test]
    fn pair_orders() {
        assert_eq!(pair_order(&Multigraph::cycle(5), 0, 4).unwrap(), BigInt::from(5));
        assert_eq!(pair_order(&Multigraph::dipole(7), 0, 1).unwrap(), BigInt::from(7));
        let chain = chain_graph(&[2, 3, 4]).unwrap();
        assert_eq!(pair_order(&chain.graph, chain.v, chain.w).unwrap(), BigInt::from(13));
        assert_eq!(pair_order(&Multigraph::cycle(5), 2, 2), Err(Error::SameVertex(2)));
    }

    #[test]
    fn markings() {
        let mk = marking(&Multigraph::cycle(4), 0, 3).unwrap();
        assert_eq!(mk.order, BigInt::from(4));
        assert_eq!(mk.weights, ints(&[0, 1, 2, 3]));

        let mk = marking(&Multigraph::dipole(3), 0, 1).unwrap();
        assert_eq!((mk.order, mk.weights), (BigInt::from(3), ints(&[0, 1])));

        let mk = marking(&Multigraph::path(2), 0, 1).unwrap();
        assert_eq!((mk.order, mk.weights), (BigInt::from(1), ints(&[0, 1])));

        // Reversed orientation puts the minimum on the first vertex of the pair.
        let mk = marking(&Multigraph::cycle(4), 3, 0).unwrap();
        assert_eq!(mk.weights, ints(&[3, 2, 1, 0]));
    }

    #[test]
    fn pair_order_is_symmetric_and_bounds_hold() {
        for g in crate::graph::enumerate_connected(5, 1).unwrap().step_by(5) {
            let lc = LaplacianCokernel::new(&g).unwrap();
            assert!(lc.group().satisfies_graph_bounds(&g));
            for i in 0..5 {
                for j in 0..5 {
                    if i != j {
                        assert_eq!(lc.pair_order(i, j).unwrap(), lc.pair_order(j, i).unwrap());
                    }
                }
            }
        }
    }
}
