//! Slow, independent reference computations used to cross-check the Smith
//! normal form engine. None of these touch `Cokernel`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::linalg::{IntMatrix, LatticeBasis};

/// Most edge copies [`spanning_trees_by_enumeration`] will look at.
pub const MAX_ENUMERATED_EDGES: usize = 24;

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Counts spanning trees by trying every set of `n - 1` edge copies.
pub fn spanning_trees_by_enumeration(g: &Multigraph) -> Result<BigInt> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let edges: Vec<(usize, usize)> = g.edge_refs().map(|e| (e.a, e.b)).collect();
    if edges.len() > MAX_ENUMERATED_EDGES {
        return Err(Error::InvalidArgument(format!(
            "{} edges is more than the {MAX_ENUMERATED_EDGES} the enumeration oracle accepts",
            edges.len()
        )));
    }
    let k = n - 1;
    if edges.len() < k {
        return Ok(BigInt::zero());
    }
    let mut count = 0u64;
    let mut pick: Vec<usize> = (0..k).collect();
    loop {
        let mut parent: Vec<usize> = (0..n).collect();
        let acyclic = pick.iter().all(|&t| {
            let (a, b) = (find(&mut parent, edges[t].0), find(&mut parent, edges[t].1));
            parent[a] = b;
            a != b
        });
        count += acyclic as u64;
        // Next k-combination in lexicographic order.
        let Some(p) = (0..k).rev().find(|&p| pick[p] < edges.len() - k + p) else { break };
        pick[p] += 1;
        for q in p + 1..k {
            pick[q] = pick[q - 1] + 1;
        }
    }
    Ok(BigInt::from(count))
}

/// Solves `A x = b` over the rationals for square nonsingular `A`.
fn rational_solve(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigRational>> {
    let n = a.rows();
    let mut rows: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut r: Vec<BigRational> = a.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect();
            r.push(BigRational::from_integer(b[i].clone()));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !rows[r][c].is_zero())?;
        rows.swap(c, p);
        let pivot = rows[c][c].clone();
        for x in rows[c].iter_mut() {
            *x /= &pivot;
        }
        for r in 0..n {
            if r != c && !rows[r][c].is_zero() {
                let f = rows[r][c].clone();
                for k in c..=n {
                    let d = &f * &rows[c][k];
                    rows[r][k] -= d;
                }
            }
        }
    }
    Some(rows.into_iter().map(|r| r[n].clone()).collect())
}

/// The rational potential `x` with `M(G) x = e_i - e_j` and `x` zero at the
/// last vertex.
fn grounded_potential(g: &Multigraph, i: usize, j: usize) -> Result<Vec<BigRational>> {
    g.check_pair(i, j)?;
    g.require_connected()?;
    let n = g.vertex_count();
    let l = g.laplacian();
    let reduced = l.minor(n - 1, n - 1);
    let mut rhs = vec![BigInt::zero(); n - 1];
    if i < n - 1 {
        rhs[i] += 1;
    }
    if j < n - 1 {
        rhs[j] -= 1;
    }
    let mut x = rational_solve(&reduced, &rhs).expect("reduced Laplacian of a connected graph is nonsingular");
    x.push(BigRational::zero());
    Ok(x)
}

/// Order of the pair as the least common denominator of the grounded
/// rational potential.
pub fn pair_order_by_potential(g: &Multigraph, i: usize, j: usize) -> Result<BigInt> {
    let x = grounded_potential(g, i, j)?;
    Ok(x.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom())))
}

/// `x_i - x_j mod 1` for the rational potential, in `[0, 1)`.
pub fn self_pairing_by_potential(g: &Multigraph, i: usize, j: usize) -> Result<BigRational> {
    let x = grounded_potential(g, i, j)?;
    let d = &x[i] - &x[j];
    Ok(&d - BigRational::from_integer(d.floor().to_integer()))
}

/// Smallest `h` in `1..=max_h` with `h w` in the column lattice of `m`,
/// tested by Hermite membership.
pub fn class_order_by_search(m: &IntMatrix, w: &[BigInt], max_h: u64) -> Result<Option<BigInt>> {
    let basis = LatticeBasis::of_columns(m);
    for h in 1..=max_h {
        let hw: Vec<BigInt> = w.iter().map(|x| x * h).collect();
        if basis.contains(&hw)? {
            return Ok(Some(BigInt::from(h)));
        }
    }
    Ok(None)
}
