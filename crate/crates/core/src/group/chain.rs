//! Two vertices `v`, `w` joined by internally disjoint chains of prescribed
//! lengths, and closed forms for the orders of `(v, w)` and of `v` paired
//! with a vertex on the last chain.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Multigraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainGraph {
    pub graph: Multigraph,
    pub lengths: Vec<usize>,
    pub v: usize,
    pub w: usize,
    /// Internal vertices of each chain, ordered from `v` towards `w`.
    pub chains: Vec<Vec<usize>>,
}

impl ChainGraph {
    /// The vertex at distance `k` from `v` along chain `chain` (zero-based
    /// chain index); `k = 0` is `v` and `k = n_chain` is `w`.
    pub fn chain_vertex(&self, chain: usize, k: usize) -> Option<usize> {
        let len = *self.lengths.get(chain)?;
        match k {
            0 => Some(self.v),
            k if k == len => Some(self.w),
            k if k < len => Some(self.chains[chain][k - 1]),
            _ => None,
        }
    }
}

/// Builds the chain graph. Vertex 0 is `v`, vertex 1 is `w`, and the internal
/// vertices of each chain follow in chain order.
pub fn chain_graph(lengths: &[usize]) -> Result<ChainGraph> {
    if lengths.is_empty() {
        return Err(Error::InvalidArgument("at least one chain is needed".into()));
    }
    if let Some(k) = lengths.iter().position(|&l| l == 0) {
        return Err(Error::InvalidArgument(format!("chain {} has length 0", k + 1)));
    }
    let internal: usize = lengths.iter().map(|l| l - 1).sum();
    let mut graph = Multigraph::new(2 + internal);
    let mut chains = Vec::with_capacity(lengths.len());
    let mut next = 2;
    for &len in lengths {
        let ids: Vec<usize> = (next..next + len - 1).collect();
        next += len - 1;
        let mut prev = 0;
        for &x in &ids {
            graph.add_edges(prev, x, 1)?;
            prev = x;
        }
        graph.add_edges(prev, 1, 1)?;
        chains.push(ids);
    }
    Ok(ChainGraph { graph, lengths: lengths.to_vec(), v: 0, w: 1, chains })
}

/// Second vertex of the pair whose order is computed in closed form; the
/// first vertex is always `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainTarget {
    W,
    /// The vertex at distance `k` from `v` on the last chain.
    LastChain { k: usize },
}

fn lcm_all(xs: &[usize]) -> BigInt {
    xs.iter().fold(BigInt::one(), |acc, &x| acc.lcm(&BigInt::from(x)))
}

fn reciprocal_sum(xs: &[usize]) -> BigRational {
    xs.iter().fold(BigRational::zero(), |acc, &x| acc + BigRational::new(BigInt::one(), BigInt::from(x)))
}

/// Order of `(v, w)` or `(v, v_k)` on a chain graph, without any matrix
/// reduction.
///
/// For `w`: `lcm(n_i) * sum(1/n_i)`.
///
/// For the vertex `v_k` at distance `k` from `v` on the last chain: with
/// `sigma = sum_{i<d} 1/n_i`, let `P` be the least positive integer such that
/// every `P/n_i` (`i < d`) and `P (1 + (n_d - k) sigma) / k` are integers. The
/// order is `(P/k) n_d sum_i 1/n_i`.
pub fn chain_pair_order_formula(lengths: &[usize], target: ChainTarget) -> Result<BigInt> {
    if lengths.is_empty() || lengths.contains(&0) {
        return Err(Error::InvalidArgument("chain lengths must be positive".into()));
    }
    match target {
        ChainTarget::W => {
            let l = BigRational::from(lcm_all(lengths));
            Ok((l * reciprocal_sum(lengths)).to_integer())
        }
        ChainTarget::LastChain { k } => {
            let (&nd, rest) = lengths.split_last().unwrap();
            if k == 0 || k >= nd {
                return Err(Error::InvalidArgument(format!("k = {k} must lie in 1..{nd}")));
            }
            // P = t * L with L = lcm(rest); then t must make t * x / k integral.
            let l = lcm_all(rest);
            let sigma = reciprocal_sum(rest);
            let x = BigRational::from(l.clone()) * (BigRational::one() + BigRational::from(BigInt::from(nd - k)) * sigma);
            debug_assert!(x.is_integer());
            let x = x.to_integer();
            let kb = BigInt::from(k);
            let p = &l * (&kb / kb.gcd(&x));
            let order = BigRational::new(p, kb) * BigRational::from(BigInt::from(nd)) * reciprocal_sum(lengths);
            debug_assert!(order.is_integer());
            Ok(order.to_integer())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::pair_order;

    #[test]
    fn construction() {
        let c = chain_graph(&[1, 2, 3]).unwrap();
        assert_eq!((c.graph.vertex_count(), c.graph.edge_count()), (5, 6));
        assert_eq!(c.graph.multiplicity(0, 1), 1);
        assert_eq!(c.chain_vertex(2, 1), Some(c.chains[2][0]));
        assert_eq!(c.chain_vertex(2, 3), Some(c.w));
        assert_eq!(c.chain_vertex(2, 4), None);
        assert_eq!(chain_graph(&[1, 2, 3, 4, 5]).unwrap().graph.vertex_count(), 12);
        let k23 = chain_graph(&[2, 2, 2]).unwrap().graph;
        assert_eq!(k23.spanning_tree_count().unwrap(), Multigraph::complete_bipartite(2, 3).spanning_tree_count().unwrap());
        assert!(chain_graph(&[]).is_err());
        assert!(chain_graph(&[1, 0]).is_err());
    }

    #[test]
    fn formula_examples() {
        let w = |l: &[usize]| chain_pair_order_formula(l, ChainTarget::W).unwrap();
        assert_eq!(w(&[1, 2, 3]), BigInt::from(11));
        assert_eq!(w(&[2, 3, 4]), BigInt::from(13));
        assert_eq!(w(&[1, 2, 3, 4, 5]), BigInt::from(137));
        assert_eq!(w(&[3, 3, 3, 3]), BigInt::from(4));
        let k = |l: &[usize], k| chain_pair_order_formula(l, ChainTarget::LastChain { k }).unwrap();
        assert_eq!(k(&[2, 3, 4], 1), BigInt::from(26));
        assert_eq!(k(&[1, 2, 3], 2), BigInt::from(11));
        assert!(chain_pair_order_formula(&[2, 3], ChainTarget::LastChain { k: 3 }).is_err());
        assert!(chain_pair_order_formula(&[2, 3], ChainTarget::LastChain { k: 0 }).is_err());
    }

    fn tuples(budget: usize, min: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        for n in min..=budget {
            prefix.push(n);
            tuples(budget - n, n, prefix, out);
            prefix.pop();
        }
    }

    #[test]
    fn formula_matches_reduction() {
        // Nondecreasing tuples with sum <= 9, plus every rotation of the last
        // chain so that the distinguished chain is not always the longest.
        let mut all = Vec::new();
        tuples(9, 1, &mut Vec::new(), &mut all);
        for base in all {
            for r in 0..base.len() {
                let mut l = base.clone();
                l.rotate_left(r);
                let c = chain_graph(&l).unwrap();
                let order = |x: usize| pair_order(&c.graph, c.v, x).unwrap();
                assert_eq!(chain_pair_order_formula(&l, ChainTarget::W).unwrap(), order(c.w), "{l:?}");
                let last = l.len() - 1;
                for k in 1..l[last] {
                    let f = chain_pair_order_formula(&l, ChainTarget::LastChain { k }).unwrap();
                    assert_eq!(f, order(c.chain_vertex(last, k).unwrap()), "{l:?} k={k}");
                }
            }
        }
    }
}
