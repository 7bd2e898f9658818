//! Spread matrices and collapsed values.
//!
//! An integer matrix `M` is spread when no difference `e_i - e_j` lies in the
//! column lattice of `M`, and `mu` is a collapsed value of `M` when
//! `M - mu Id` is not spread.

mod families;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

pub use families::{
    block_family, crt_family, laplacian_scan, many_collapse_graph, negative_side_scan, two_by_two, CrtFamily,
    LaplacianScan,
};

use crate::error::{Error, Result};
use crate::linalg::{basis_difference, determinant, Cokernel, IntMatrix};

/// `(M - mu Id) vector = e_i - e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CollapseWitness {
    pub mu: BigInt,
    pub i: usize,
    pub j: usize,
    pub vector: Vec<BigInt>,
}

impl CollapseWitness {
    pub fn holds(&self, m: &IntMatrix) -> bool {
        let Ok(shifted) = m.shift_diagonal(&self.mu) else { return false };
        let Ok(image) = shifted.mul_vec(&self.vector) else { return false };
        matches!(basis_difference(m.rows(), self.i, self.j), Ok(e) if e == image)
    }
}

/// Every collapsed value of a matrix in `[lo, hi]`, each with a witness.
/// Values in the interval without a witness were certified spread.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapsedReport {
    pub matrix: IntMatrix,
    pub lo: BigInt,
    pub hi: BigInt,
    /// Sorted by `mu`.
    pub witnesses: Vec<CollapseWitness>,
}

impl CollapsedReport {
    pub fn values(&self) -> Vec<BigInt> {
        self.witnesses.iter().map(|w| w.mu.clone()).collect()
    }

    pub fn is_collapsed(&self, mu: &BigInt) -> bool {
        self.witnesses.iter().any(|w| &w.mu == mu)
    }

    /// Re-multiplies every witness.
    pub fn verify(&self) -> bool {
        self.witnesses.iter().all(|w| w.holds(&self.matrix))
    }
}

fn require_square(m: &IntMatrix) -> Result<()> {
    if m.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    Ok(())
}

/// The first `(i, j)` with `i < j` and `e_i - e_j` in the column lattice,
/// with a preimage. `None` means the matrix is spread.
pub fn spread_witness(m: &IntMatrix) -> Result<Option<(usize, usize, Vec<BigInt>)>> {
    require_square(m)?;
    let n = m.rows();
    let cok = Cokernel::new(m)?;
    for i in 0..n {
        for j in i + 1..n {
            if let Some(v) = cok.solve(&basis_difference(n, i, j)?)? {
                return Ok(Some((i, j, v)));
            }
        }
    }
    Ok(None)
}

pub fn is_spread(m: &IntMatrix) -> Result<bool> {
    Ok(spread_witness(m)?.is_none())
}

/// Longest interval [`collapsed_values`] accepts.
pub const MAX_SCAN_WIDTH: u64 = 1 << 20;

/// Decides every `mu` in `[lo, hi]`. Runs in parallel on the current rayon
/// pool; the report does not depend on the number of threads.
pub fn collapsed_values(m: &IntMatrix, lo: &BigInt, hi: &BigInt) -> Result<CollapsedReport> {
    require_square(m)?;
    if lo > hi {
        return Err(Error::InvalidArgument(format!("empty interval [{lo}, {hi}]")));
    }
    let width = (hi - lo).to_u64().filter(|&w| w < MAX_SCAN_WIDTH).ok_or_else(|| {
        Error::InvalidArgument(format!("interval [{lo}, {hi}] is wider than {MAX_SCAN_WIDTH}"))
    })?;
    let mus: Vec<BigInt> = (0..=width).map(|k| lo + k).collect();
    let found: Vec<Option<CollapseWitness>> = mus
        .par_iter()
        .map(|mu| {
            let shifted = m.shift_diagonal(mu)?;
            Ok(spread_witness(&shifted)?.map(|(i, j, vector)| CollapseWitness { mu: mu.clone(), i, j, vector }))
        })
        .collect::<Result<_>>()?;
    Ok(CollapsedReport { matrix: m.clone(), lo: lo.clone(), hi: hi.clone(), witnesses: found.into_iter().flatten().collect() })
}

/// Scans `[-r, r]` with `r` the radius of [`NormBound`]; no collapsed value
/// lies outside.
pub fn collapsed_values_full(m: &IntMatrix) -> Result<CollapsedReport> {
    require_square(m)?;
    let r = NormBound::of(m).radius;
    collapsed_values(m, &-&r, &r)
}

/// A certified integer upper bound on the spectral norm: the ceiling of the
/// Frobenius norm. Collapsed values satisfy `|mu| <= bound + 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormBound {
    pub frobenius_squared: BigInt,
    pub bound: BigInt,
    pub radius: BigInt,
}

impl NormBound {
    pub fn of(m: &IntMatrix) -> Self {
        let f2: BigInt = m.frobenius_squared();
        let mut b = f2.sqrt();
        if &b * &b < f2 {
            b += 1;
        }
        let radius = &b + 2;
        NormBound { frobenius_squared: f2, bound: b, radius }
    }
}

/// Approximate spectral norm by power iteration on `M^T M`. Floating point,
/// for display only.
pub fn spectral_norm_estimate(m: &IntMatrix) -> f64 {
    let (r, c) = (m.rows(), m.cols());
    if r == 0 || c == 0 {
        return 0.0;
    }
    let a: Vec<f64> = m.entries().iter().map(|x| x.to_f64().unwrap_or(f64::INFINITY)).collect();
    let mut v: Vec<f64> = (0..c).map(|k| 1.0 + k as f64 * 1e-3).collect();
    let mut sigma = 0.0;
    for _ in 0..500 {
        let mv: Vec<f64> = (0..r).map(|i| (0..c).map(|j| a[i * c + j] * v[j]).sum()).collect();
        let w: Vec<f64> = (0..c).map(|j| (0..r).map(|i| a[i * c + j] * mv[i]).sum()).collect();
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            return 0.0;
        }
        sigma = norm.sqrt();
        v = w.into_iter().map(|x| x / norm).collect();
    }
    sigma
}

/// Values `lambda +- 1` for every `e_i - e_j` (`i < j`) that is an
/// eigenvector with eigenvalue `lambda`, each with its witness `+-(e_i - e_j)`.
pub fn eigenvector_collapse_pairs(m: &IntMatrix) -> Result<Vec<CollapseWitness>> {
    require_square(m)?;
    let n = m.rows();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let e = basis_difference(n, i, j)?;
            let me = m.mul_vec(&e)?;
            let lambda = &me[i];
            if me.iter().zip(&e).any(|(x, y)| x != &(lambda * y)) {
                continue;
            }
            for (mu, sign) in [(lambda - 1i32, 1i32), (lambda + 1i32, -1)] {
                    let mu: BigInt = mu;
                if seen.insert(mu.clone()) {
                    let vector = e.iter().map(|x| x * sign).collect();
                    let w = CollapseWitness { mu, i, j, vector };
                    debug_assert!(w.holds(m));
                    out.push(w);
                }
            }
        }
    }
    out.sort_by(|a, b| a.mu.cmp(&b.mu));
    Ok(out)
}

/// Largest integer `t` with `M - t Id` positive definite, for a symmetric
/// positive definite `M` (Sylvester's criterion with exact minors). `None`
/// if `M` is not symmetric positive definite.
pub fn positive_definite_floor(m: &IntMatrix) -> Result<Option<BigInt>> {
    require_square(m)?;
    if !m.is_symmetric() || !is_positive_definite(m)? {
        return Ok(None);
    }
    // The smallest eigenvalue is at most the smallest diagonal entry.
    let mut lo = BigInt::zero();
    let mut hi = (0..m.rows()).map(|k| m[(k, k)].clone()).min().unwrap();
    while &lo + 1 < hi {
        let mid: BigInt = (&lo + &hi) / 2;
        if is_positive_definite(&m.shift_diagonal(&mid)?)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if hi > lo && is_positive_definite(&m.shift_diagonal(&hi)?)? {
        lo = hi;
    }
    Ok(Some(lo))
}

fn is_positive_definite(m: &IntMatrix) -> Result<bool> {
    let n = m.rows();
    for k in 1..=n {
        let lead: Vec<BigInt> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).map(|(i, j)| m[(i, j)].clone()).collect();
        if !determinant(&IntMatrix::from_vec(k, k, lead)?)?.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}
