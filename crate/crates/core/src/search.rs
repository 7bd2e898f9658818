//! Exhaustive searches over small labeled graphs.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::collapsed::collapsed_values;
use crate::error::Result;
use crate::graph::{enumerate_connected, Multigraph};
use crate::group::{GroupStructure, LaplacianCokernel};

/// Every connected labeled graph with `2 <= n <= n_max` vertices and edge
/// multiplicities up to `max_mult`, smallest `n` first.
pub fn connected_graphs(n_max: usize, max_mult: u32) -> Result<Vec<Multigraph>> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        out.extend(enumerate_connected(n, max_mult)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchHit {
    pub graph: Multigraph,
    pub group: GroupStructure,
    /// Orders attained by pairs of distinct vertices.
    pub pair_orders: BTreeSet<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub examined: usize,
    pub matches: usize,
    /// The first `limit` matches in enumeration order.
    pub hits: Vec<SearchHit>,
}

fn profile(g: &Multigraph) -> Result<SearchHit> {
    let lc = LaplacianCokernel::new(g)?;
    let pair_orders = lc.all_pair_orders()?.into_iter().map(|(_, h)| h).collect();
    Ok(SearchHit { graph: g.clone(), group: lc.group(), pair_orders })
}

fn sweep<F>(graphs: Vec<Multigraph>, limit: usize, keep: F) -> Result<SearchOutcome>
where
    F: Fn(&Multigraph) -> Result<Option<SearchHit>> + Sync,
{
    let examined = graphs.len();
    let found: Vec<Option<SearchHit>> = graphs.par_iter().map(&keep).collect::<Result<_>>()?;
    let all: Vec<SearchHit> = found.into_iter().flatten().collect();
    let matches = all.len();
    Ok(SearchOutcome { examined, matches, hits: all.into_iter().take(limit).collect() })
}

/// Graphs in which no pair of vertices has order equal to the exponent of
/// the critical group.
pub fn exponent_gaps(n_max: usize, max_mult: u32, limit: usize) -> Result<SearchOutcome> {
    sweep(connected_graphs(n_max, max_mult)?, limit, |g| {
        let p = profile(g)?;
        Ok((!p.pair_orders.contains(&p.group.exponent())).then_some(p))
    })
}

/// Graphs whose critical group is cyclic of order `order` and in which no
/// pair has an order from `forbidden`.
pub fn cyclic_without_orders(
    order: &BigInt,
    forbidden: &[BigInt],
    n_max: usize,
    max_mult: u32,
    limit: usize,
) -> Result<SearchOutcome> {
    sweep(connected_graphs(n_max, max_mult)?, limit, |g| {
        // The determinant is much cheaper than the full profile.
        if &g.spanning_tree_count()? != order {
            return Ok(None);
        }
        let p = profile(g)?;
        let ok = p.group.is_cyclic() && forbidden.iter().all(|h| !p.pair_orders.contains(h));
        Ok(ok.then_some(p))
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapsedRecord {
    pub n: usize,
    pub examined: usize,
    /// Largest number of collapsed values found.
    pub best: usize,
    /// Up to `limit` graphs attaining `best`, with their collapsed values.
    pub graphs: Vec<(Multigraph, Vec<BigInt>)>,
}

/// Largest number of collapsed values of the positive semidefinite Laplacian
/// among connected simple graphs on exactly `n` vertices. Only `[0, n + 1]`
/// is scanned; no simple graph has collapsed values outside it.
pub fn max_collapsed(n: usize, limit: usize) -> Result<CollapsedRecord> {
    let graphs: Vec<Multigraph> = enumerate_connected(n, 1)?.collect();
    let (lo, hi) = (BigInt::from(0), BigInt::from(n as i64 + 1));
    let values: Vec<Vec<BigInt>> = graphs
        .par_iter()
        .map(|g| Ok(collapsed_values(&g.psd_laplacian(), &lo, &hi)?.values()))
        .collect::<Result<_>>()?;
    let best = values.iter().map(Vec::len).max().unwrap_or(0);
    let examined = graphs.len();
    let graphs = graphs.into_iter().zip(values).filter(|(_, v)| v.len() == best).take(limit).collect();
    Ok(CollapsedRecord { n, examined, best, graphs })
}
