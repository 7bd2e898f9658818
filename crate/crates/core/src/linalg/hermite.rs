use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Column Hermite normal form of the lattice spanned by the columns of a matrix.
///
/// Basis column `k` has its first nonzero entry (the pivot) in row
/// `pivot_rows[k]`; pivot rows strictly increase, pivots are positive, and the
/// entries to the left of a pivot in its row lie in `[0, pivot)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    ambient: usize,
    columns: Vec<Vec<BigInt>>,
    pivot_rows: Vec<usize>,
}

impl LatticeBasis {
    pub fn of_columns(m: &IntMatrix) -> Self {
        let rows = m.rows();
        let mut cols: Vec<Vec<BigInt>> = (0..m.cols()).map(|j| m.column(j)).collect();
        let mut pivot_rows = Vec::new();
        let mut k = 0;

        for r in 0..rows {
            if k == cols.len() {
                break;
            }
            // Euclid across columns k.. on row r until at most one is nonzero.
            loop {
                let live: Vec<usize> = (k..cols.len()).filter(|&j| !cols[j][r].is_zero()).collect();
                if live.len() <= 1 {
                    if let Some(&j) = live.first() {
                        cols.swap(k, j);
                    }
                    break;
                }
                let p = *live.iter().min_by_key(|&&j| cols[j][r].magnitude().clone()).unwrap();
                for &j in &live {
                    if j == p {
                        continue;
                    }
                    let q = cols[j][r].div_floor(&cols[p][r]);
                    let (src, dst) = (cols[p].clone(), &mut cols[j]);
                    for (d, s) in dst.iter_mut().zip(&src) {
                        *d -= &q * s;
                    }
                }
            }
            if cols[k][r].is_zero() {
                continue;
            }
            if cols[k][r].is_negative() {
                for x in cols[k].iter_mut() {
                    *x = -std::mem::take(x);
                }
            }
            let pivot_col = cols[k].clone();
            for j in 0..k {
                let q = cols[j][r].div_floor(&pivot_col[r]);
                if !q.is_zero() {
                    for (d, s) in cols[j].iter_mut().zip(&pivot_col) {
                        *d -= &q * s;
                    }
                }
            }
            pivot_rows.push(r);
            k += 1;
        }
        cols.truncate(k);
        LatticeBasis { ambient: rows, columns: cols, pivot_rows }
    }

    pub fn rank(&self) -> usize {
        self.columns.len()
    }

    pub fn pivot_rows(&self) -> &[usize] {
        &self.pivot_rows
    }

    pub fn basis_columns(&self) -> &[Vec<BigInt>] {
        &self.columns
    }

    pub fn to_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.ambient, self.rank());
        for (j, c) in self.columns.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    /// Coordinates of `w` in this basis, if `w` lies in the lattice.
    pub fn coordinates(&self, w: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        if w.len() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: w.len() });
        }
        let mut rest = w.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        let mut next = 0;
        for r in 0..self.ambient {
            if next < self.rank() && self.pivot_rows[next] == r {
                let col = &self.columns[next];
                let (q, rem) = rest[r].div_rem(&col[r]);
                if !rem.is_zero() {
                    return Ok(None);
                }
                for (x, c) in rest.iter_mut().zip(col) {
                    *x -= &q * c;
                }
                coords.push(q);
                next += 1;
            } else if !rest[r].is_zero() {
                return Ok(None);
            }
        }
        Ok(Some(coords))
    }

    pub fn contains(&self, w: &[BigInt]) -> Result<bool> {
        Ok(self.coordinates(w)?.is_some())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn echelon_shape() {
        let m = IntMatrix::from_rows(&[[4, 6], [2, 8], [0, 1]]);
        let b = LatticeBasis::of_columns(&m);
        assert_eq!(b.rank(), 2);
        assert_eq!(b.pivot_rows(), &[0, 1]);
        let h = b.to_matrix();
        assert!(h[(0, 0)] > BigInt::zero() && h[(1, 1)] > BigInt::zero());
        assert!(h[(0, 1)].is_zero());
        assert!(h[(1, 0)] >= BigInt::zero() && h[(1, 0)] < h[(1, 1)]);
    }

    #[test]
    fn membership() {
        let lap = IntMatrix::from_rows(&[[-2, 2], [2, -2]]);
        let b = LatticeBasis::of_columns(&lap);
        assert!(b.contains(&v(&[-2, 2])).unwrap());
        assert!(b.contains(&v(&[4, -4])).unwrap());
        assert!(!b.contains(&v(&[1, -1])).unwrap());
        assert!(!b.contains(&v(&[1, 1])).unwrap());
        assert!(b.contains(&v(&[1])).is_err());
    }

    proptest::proptest! {
        #[test]
        fn same_span_as_source(
            rows in 1usize..5,
            cols in 1usize..5,
            entries in proptest::collection::vec(-9i64..=9, 16),
            combo in proptest::collection::vec(-3i64..=3, 4),
        ) {
            let lit: Vec<Vec<i64>> = (0..rows).map(|i| entries[i * cols..i * cols + cols].to_vec()).collect();
            let m = IntMatrix::from_rows(&lit);
            let b = LatticeBasis::of_columns(&m);
            // Every source column, and any integer combination of them, is in the lattice.
            for j in 0..cols {
                proptest::prop_assert!(b.contains(&m.column(j)).unwrap());
            }
            let w = m.mul_vec(&v(&combo[..cols])).unwrap();
            proptest::prop_assert!(b.contains(&w).unwrap());
            let snf = super::super::smith_normal_form(&m).unwrap();
            proptest::prop_assert_eq!(b.rank(), snf.rank());
            // Each basis column is an integer combination of the source columns.
            for c in b.basis_columns() {
                proptest::prop_assert!(super::super::lattice_solve(&m, c).unwrap().is_some());
            }
        }
    }
}
