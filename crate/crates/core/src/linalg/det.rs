use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Exact determinant by Bareiss fraction-free elimination.
///
/// Every intermediate entry is a minor of the input, so the divisions are exact.
pub fn determinant(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = BigInt::one();

    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&r| !a[(r, k)].is_zero()) {
                Some(r) => {
                    a.swap_rows(k, r);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                a[(i, j)] = v / &prev;
            }
        }
        prev = a[(k, k)].clone();
    }

    let d = a[(n - 1, n - 1)].clone();
    Ok(if negate { -d } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cofactor_det(m: &IntMatrix) -> BigInt {
        // Laplace expansion along the first row; an oracle for small sizes.
        let n = m.rows();
        if n == 1 {
            return m[(0, 0)].clone();
        }
        let mut total = BigInt::zero();
        for j in 0..n {
            let term = &m[(0, j)] * cofactor_det(&m.minor(0, j));
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    #[test]
    fn identity_and_small_cases() {
        assert_eq!(determinant(&IntMatrix::identity(4)).unwrap(), BigInt::from(1));
        assert_eq!(determinant(&IntMatrix::from_rows(&[[-1, 1], [1, 1]])).unwrap(), BigInt::from(-2));
        assert_eq!(determinant(&IntMatrix::from_rows(&[[0, 1], [1, 0]])).unwrap(), BigInt::from(-1));
        assert_eq!(determinant(&IntMatrix::from_rows(&[[1, 2], [2, 4]])).unwrap(), BigInt::from(0));
    }

    #[test]
    fn reduced_k4_laplacian() {
        // K4 Laplacian with the last row and column deleted; Cayley: 4^2 = 16 trees.
        let m = IntMatrix::from_rows(&[[-3, 1, 1], [1, -3, 1], [1, 1, -3]]);
        assert_eq!(determinant(&m).unwrap(), BigInt::from(-16));
    }

    #[test]
    fn rejects_non_square() {
        assert_eq!(
            determinant(&IntMatrix::zeros(2, 3)),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        );
    }

    proptest::proptest! {
        #[test]
        fn matches_cofactor_expansion(n in 1usize..5, seed in proptest::collection::vec(-9i64..=9, 16)) {
            let rows: Vec<Vec<i64>> = (0..n).map(|i| seed[i * n..i * n + n].to_vec()).collect();
            let m = IntMatrix::from_rows(&rows);
            proptest::prop_assert_eq!(determinant(&m).unwrap(), cofactor_det(&m));
        }
    }
}
