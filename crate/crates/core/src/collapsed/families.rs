use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{collapsed_values, CollapseWitness, CollapsedReport};
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::linalg::IntMatrix;

/// `((-a, 1), (1, a))`.
pub fn two_by_two(a: i64) -> IntMatrix {
    IntMatrix::from_rows(&[[-a, 1], [1, a]])
}

/// Block diagonal with blocks `two_by_two(1) + 5i Id` for `i = 1..=k`.
pub fn block_family(k: usize) -> Result<IntMatrix> {
    if k == 0 {
        return Err(Error::InvalidArgument("block family needs k >= 1".into()));
    }
    let blocks: Vec<IntMatrix> =
        (1..=k).map(|i| two_by_two(1).shift_diagonal(&BigInt::from(-5 * i as i64))).collect::<Result<_>>()?;
    Ok(IntMatrix::block_diagonal(&blocks))
}

/// A graph on an even number `n >= 8` of vertices with `1 + n/2` collapsed
/// values. Vertices 0 and 1 are joined to everything, 2 and 3 to all but each
/// other and the last two, the middle vertices to 0..=3 only, and the last
/// two to 0 and 1 only.
pub fn many_collapse_graph(n: usize) -> Result<Multigraph> {
    if n < 8 || n % 2 != 0 {
        return Err(Error::InvalidArgument(format!("need an even vertex count >= 8, got {n}")));
    }
    let mut g = Multigraph::new(n);
    g.add_edges(0, 1, 1)?;
    for hub in [0, 1] {
        for v in 2..n {
            g.add_edges(hub, v, 1)?;
        }
    }
    for side in [2, 3] {
        for v in 4..n - 2 {
            g.add_edges(side, v, 1)?;
        }
    }
    Ok(g)
}

/// A 2x2 matrix with a double integer eigenvalue `ell` and a collapsed value
/// `ell - p` for each prime `p` of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrtFamily {
    pub primes: Vec<u64>,
    /// Least positive solution of `ell = p + 1 (mod p^2)` for every `p`.
    pub ell: BigInt,
    /// `((2 ell, 1), (-ell^2, 0))`.
    pub matrix: IntMatrix,
    /// One per prime, in input order.
    pub witnesses: Vec<CollapseWitness>,
}

impl CrtFamily {
    pub fn expected(&self) -> Vec<BigInt> {
        self.witnesses.iter().map(|w| w.mu.clone()).collect()
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Least nonnegative `x` with `x = r_k (mod m_k)` for pairwise coprime moduli.
fn crt(congruences: &[(BigInt, BigInt)]) -> BigInt {
    let mut x = BigInt::zero();
    let mut m = BigInt::from(1);
    for (r, mk) in congruences {
        // x + m t = r (mod mk)
        let g = m.extended_gcd(mk);
        debug_assert!(g.gcd == BigInt::from(1));
        let t = ((r - &x) * g.x).mod_floor(mk);
        x += &m * t;
        m *= mk;
        x = x.mod_floor(&m);
    }
    x
}

/// Builds the family for distinct primes and checks the closed-form
/// witness for every `mu = ell - p`.
pub fn crt_family(primes: &[u64]) -> Result<CrtFamily> {
    if primes.is_empty() {
        return Err(Error::InvalidArgument("need at least one prime".into()));
    }
    for (k, &p) in primes.iter().enumerate() {
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        if primes[..k].contains(&p) {
            return Err(Error::InvalidArgument(format!("prime {p} repeated")));
        }
    }
    let congruences: Vec<(BigInt, BigInt)> =
        primes.iter().map(|&p| (BigInt::from(p + 1), BigInt::from(p) * BigInt::from(p))).collect();
    let mut ell = crt(&congruences);
    if ell.is_zero() {
        ell = congruences.iter().map(|(_, m)| m).product();
    }
    let ell2 = &ell * &ell;
    let matrix = IntMatrix::from_vec(2, 2, vec![&ell * 2, BigInt::from(1), -&ell2, BigInt::zero()])?;
    let mut witnesses = Vec::with_capacity(primes.len());
    for &p in primes {
        let mu = &ell - BigInt::from(p);
        let d2 = (&mu - &ell) * (&mu - &ell);
        let n1: BigInt = 1 - &mu;
        let n2: BigInt = &ell2 - &ell * 2 + &mu;
        if !(n1.is_multiple_of(&d2) && n2.is_multiple_of(&d2)) {
            return Err(Error::InvalidArgument(format!("witness for mu = {mu} is not integral")));
        }
        let w = CollapseWitness { mu, i: 0, j: 1, vector: vec![n1 / &d2, n2 / &d2] };
        if !w.holds(&matrix) {
            return Err(Error::InvalidArgument(format!("witness for mu = {} does not hold", w.mu)));
        }
        witnesses.push(w);
    }
    Ok(CrtFamily { primes: primes.to_vec(), ell, matrix, witnesses })
}

/// Scan of the positive semidefinite Laplacian of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaplacianScan {
    pub report: CollapsedReport,
    /// Collapsed values outside `[0, n + 1]`.
    pub violations: Vec<BigInt>,
}

impl LaplacianScan {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Scans `[-n - margin, 2n + margin]` for a connected simple graph and
/// records collapsed values outside `[0, n + 1]`.
pub fn laplacian_scan(g: &Multigraph, margin: usize) -> Result<LaplacianScan> {
    if !g.is_simple() {
        return Err(Error::InvalidArgument("graph must be simple".into()));
    }
    g.require_connected()?;
    let n = g.vertex_count() as i64;
    let (lo, hi) = (BigInt::from(-n - margin as i64), BigInt::from(2 * n + margin as i64));
    let report = collapsed_values(&g.psd_laplacian(), &lo, &hi)?;
    let top = BigInt::from(n + 1);
    let violations = report.values().into_iter().filter(|mu| mu.is_negative() || mu > &top).collect();
    Ok(LaplacianScan { report, violations })
}

/// Collapsed values `mu <= -1` of the positive semidefinite Laplacian of a
/// connected multigraph, scanning `[-n - margin, -1]`.
pub fn negative_side_scan(g: &Multigraph, margin: usize) -> Result<Vec<BigInt>> {
    g.require_connected()?;
    let n = g.vertex_count() as i64;
    let report = collapsed_values(&g.psd_laplacian(), &BigInt::from(-n - margin as i64), &BigInt::from(-1))?;
    Ok(report.values())
}
