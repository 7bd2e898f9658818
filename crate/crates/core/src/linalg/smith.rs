//! Smith normal form over the integers with unimodular transforms.
//!
//! For an `r x c` matrix `M` this computes `U` (`r x r`), `V` (`c x c`) and a
//! diagonal `D` with `U * M * V = D`, `|det U| = |det V| = 1`, and diagonal
//! entries `d_1 | d_2 | ... ` that are nonnegative with zeros trailing.
//!
//! The pivot at each stage is the entry of least absolute value in the
//! remaining submatrix, which keeps intermediate coefficients small on the
//! Laplacian-sized inputs this crate deals with.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    /// Left transform, `rows x rows`.
    pub u: IntMatrix,
    /// Diagonal form, same shape as the source.
    pub d: IntMatrix,
    /// Right transform, `cols x cols`.
    pub v: IntMatrix,
    /// The diagonal of `d`, `min(rows, cols)` entries.
    pub invariant_factors: Vec<BigInt>,
}

impl SmithDecomposition {
    pub fn rows(&self) -> usize {
        self.d.rows()
    }

    pub fn cols(&self) -> usize {
        self.d.cols()
    }

    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.invariant_factors.iter().take_while(|d| !d.is_zero()).count()
    }

    /// Rank of the free part of the cokernel `Z^rows / Im(M)`.
    pub fn free_rank(&self) -> usize {
        self.rows() - self.rank()
    }

    /// Invariant factors greater than one: the torsion of the cokernel.
    pub fn torsion_factors(&self) -> Vec<BigInt> {
        self.invariant_factors.iter().filter(|d| !d.is_zero() && !d.is_one()).cloned().collect()
    }

    /// Checks `U * source * V = D`, unimodularity of both transforms, and the
    /// divisibility chain.
    pub fn verify(&self, source: &IntMatrix) -> bool {
        let Ok(um) = self.u.mul(source) else { return false };
        let Ok(umv) = um.mul(&self.v) else { return false };
        if umv != self.d {
            return false;
        }
        let unimodular = |m: &IntMatrix| super::determinant(m).map(|d| d.abs().is_one()).unwrap_or(false);
        unimodular(&self.u) && unimodular(&self.v) && divisibility_chain_holds(&self.invariant_factors)
    }
}

/// `d_k >= 0`, zeros only at the end, and `d_k | d_{k+1}` among the nonzero ones.
pub fn divisibility_chain_holds(factors: &[BigInt]) -> bool {
    if factors.iter().any(|d| d.is_negative()) {
        return false;
    }
    let nonzero = factors.iter().take_while(|d| !d.is_zero()).count();
    if factors[nonzero..].iter().any(|d| !d.is_zero()) {
        return false;
    }
    factors[..nonzero].windows(2).all(|w| (&w[1] % &w[0]).is_zero())
}

struct Workspace {
    a: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
}

impl Workspace {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
    }

    fn add_row_multiple(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.a.add_row_multiple(dst, src, f);
        self.u.add_row_multiple(dst, src, f);
    }

    fn add_col_multiple(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.a.add_col_multiple(dst, src, f);
        self.v.add_col_multiple(dst, src, f);
    }

    fn min_abs_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some(b) => x.magnitude() < self.a[b].magnitude(),
                };
                if better {
                    best = Some((i, j));
                    if x.magnitude().is_one() {
                        return best;
                    }
                }
            }
        }
        best
    }

    /// Clears row `t` and column `t` outside the pivot. Returns false if some
    /// nonzero remainder was left behind.
    fn clear_cross(&mut self, t: usize) -> bool {
        let mut clean = true;
        let p = self.a[(t, t)].clone();
        for i in t + 1..self.a.rows() {
            if self.a[(i, t)].is_zero() {
                continue;
            }
            let q = self.a[(i, t)].div_floor(&p);
            self.add_row_multiple(i, t, &-q);
            clean &= self.a[(i, t)].is_zero();
        }
        for j in t + 1..self.a.cols() {
            if self.a[(t, j)].is_zero() {
                continue;
            }
            let q = self.a[(t, j)].div_floor(&p);
            self.add_col_multiple(j, t, &-q);
            clean &= self.a[(t, j)].is_zero();
        }
        clean
    }

    fn non_divisible_row(&self, t: usize) -> Option<usize> {
        let p = &self.a[(t, t)];
        (t + 1..self.a.rows())
            .find(|&i| (t + 1..self.a.cols()).any(|j| !(&self.a[(i, j)] % p).is_zero()))
    }
}

/// Smith normal form of a nonempty matrix, with transforms.
pub fn smith_normal_form(m: &IntMatrix) -> Result<SmithDecomposition> {
    if m.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Workspace { a: m.clone(), u: IntMatrix::identity(rows), v: IntMatrix::identity(cols) };
    let diag = rows.min(cols);

    for t in 0..diag {
        let Some((pi, pj)) = w.min_abs_entry(t) else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            if !w.clear_cross(t) {
                // A smaller remainder exists in row/column t; move it to the pivot.
                let (pi, pj) = w.min_abs_entry(t).expect("remainder is nonzero");
                w.swap_rows(t, pi);
                w.swap_cols(t, pj);
                continue;
            }
            match w.non_divisible_row(t) {
                Some(i) => w.add_row_multiple(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.a[(t, t)].sign() == Sign::Minus {
            w.a.negate_row(t);
            w.u.negate_row(t);
        }
    }

    let invariant_factors: Vec<BigInt> = (0..diag).map(|k| w.a[(k, k)].clone()).collect();
    assert!(
        divisibility_chain_holds(&invariant_factors),
        "Smith form lost its divisibility chain: {invariant_factors:?}"
    );
    Ok(SmithDecomposition { u: w.u, d: w.a, v: w.v, invariant_factors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(m: &IntMatrix) -> Vec<i64> {
        let s = smith_normal_form(m).unwrap();
        assert!(s.verify(m));
        s.invariant_factors.iter().map(|d| d.try_into().unwrap()).collect()
    }

    #[test]
    fn identity() {
        let s = smith_normal_form(&IntMatrix::identity(3)).unwrap();
        assert_eq!(s.d, IntMatrix::identity(3));
        assert_eq!(factors(&IntMatrix::identity(3)), vec![1, 1, 1]);
    }

    #[test]
    fn dipole_laplacian() {
        assert_eq!(factors(&IntMatrix::from_rows(&[[-2, 2], [2, -2]])), vec![2, 0]);
    }

    #[test]
    fn shifted_triangle() {
        // M(K3) - Id
        let m = IntMatrix::from_rows(&[[-3, 1, 1], [1, -3, 1], [1, 1, -3]]);
        assert_eq!(factors(&m), vec![1, 4, 4]);
    }

    #[test]
    fn rectangular_and_zero() {
        assert_eq!(factors(&IntMatrix::from_rows(&[[2, 4, 6]])), vec![2]);
        assert_eq!(factors(&IntMatrix::from_rows(&[[2], [3]])), vec![1]);
        assert_eq!(factors(&IntMatrix::zeros(2, 2)), vec![0, 0]);
        assert_eq!(factors(&IntMatrix::from_rows(&[[6, 0], [0, 4]])), vec![2, 12]);
    }

    #[test]
    fn empty_rejected() {
        assert_eq!(smith_normal_form(&IntMatrix::zeros(0, 0)), Err(Error::EmptyMatrix));
    }

    #[test]
    fn chain_checker() {
        let b = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert!(divisibility_chain_holds(&b(&[1, 2, 4, 0])));
        assert!(!divisibility_chain_holds(&b(&[2, 3])));
        assert!(!divisibility_chain_holds(&b(&[0, 2])));
        assert!(!divisibility_chain_holds(&b(&[-1])));
    }

    proptest::proptest! {
        #[test]
        fn reconstruction_and_unimodularity(
            rows in 1usize..6,
            cols in 1usize..6,
            entries in proptest::collection::vec(-9i64..=9, 36),
        ) {
            let lit: Vec<Vec<i64>> = (0..rows).map(|i| entries[i * cols..i * cols + cols].to_vec()).collect();
            let m = IntMatrix::from_rows(&lit);
            let s = smith_normal_form(&m).unwrap();
            proptest::prop_assert!(s.verify(&m));
            // Product of the nonzero factors equals the gcd-of-minors invariant for square
            // full-rank inputs: |det M|.
            if rows == cols {
                let det = super::super::determinant(&m).unwrap().abs();
                let prod: BigInt = s.invariant_factors.iter().product();
                proptest::prop_assert_eq!(det, prod);
            }
        }
    }
}
