use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{smith_normal_form, IntMatrix, SmithDecomposition};
use crate::error::{Error, Result};

/// Order of an element of a finitely generated abelian group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ClassOrder {
    Finite(BigInt),
    Infinite,
}

impl ClassOrder {
    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            ClassOrder::Finite(h) => Some(h),
            ClassOrder::Infinite => None,
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, ClassOrder::Finite(h) if h.is_one())
    }
}

impl fmt::Display for ClassOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassOrder::Finite(h) => write!(f, "{h}"),
            ClassOrder::Infinite => f.write_str("infinite"),
        }
    }
}

/// `e_i - e_j` in `Z^n`. Indices are zero-based.
pub fn basis_difference(n: usize, i: usize, j: usize) -> Result<Vec<BigInt>> {
    for v in [i, j] {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if i == j {
        return Err(Error::SameVertex(i));
    }
    let mut e = vec![BigInt::zero(); n];
    e[i] = BigInt::one();
    e[j] = -BigInt::one();
    Ok(e)
}

/// The cokernel `Z^rows / Im(M)` presented through a Smith decomposition.
///
/// Computing the decomposition once and querying many vectors is the common
/// pattern (all vertex pairs of a graph, all `E_ij` for a shifted matrix).
#[derive(Clone, Debug)]
pub struct Cokernel {
    snf: SmithDecomposition,
}

impl Cokernel {
    pub fn new(m: &IntMatrix) -> Result<Self> {
        Ok(Cokernel { snf: smith_normal_form(m)? })
    }

    pub fn smith(&self) -> &SmithDecomposition {
        &self.snf
    }

    fn factor(&self, k: usize) -> Option<&BigInt> {
        self.snf.invariant_factors.get(k)
    }

    /// Coordinates of `w` in the Smith basis, `U * w`.
    fn reduce(&self, w: &[BigInt]) -> Result<Vec<BigInt>> {
        if w.len() != self.snf.rows() {
            return Err(Error::DimensionMismatch { expected: self.snf.rows(), found: w.len() });
        }
        self.snf.u.mul_vec(w)
    }

    /// A vector `S` with `M * S = w`, or `None` if `w` is not in `Im(M)`.
    pub fn solve(&self, w: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        let uw = self.reduce(w)?;
        let mut y = vec![BigInt::zero(); self.snf.cols()];
        for (k, c) in uw.iter().enumerate() {
            match self.factor(k) {
                Some(d) if !d.is_zero() => {
                    let (q, r) = c.div_rem(d);
                    if !r.is_zero() {
                        return Ok(None);
                    }
                    y[k] = q;
                }
                _ => {
                    if !c.is_zero() {
                        return Ok(None);
                    }
                }
            }
        }
        Ok(Some(self.snf.v.mul_vec(&y)?))
    }

    /// Smallest `h >= 1` with `h * w` in `Im(M)`.
    pub fn class_order(&self, w: &[BigInt]) -> Result<ClassOrder> {
        let uw = self.reduce(w)?;
        let mut h = BigInt::one();
        for (k, c) in uw.iter().enumerate() {
            match self.factor(k) {
                Some(d) if !d.is_zero() => {
                    let part = d / d.gcd(c);
                    h = h.lcm(&part);
                }
                _ => {
                    if !c.is_zero() {
                        return Ok(ClassOrder::Infinite);
                    }
                }
            }
        }
        Ok(ClassOrder::Finite(h))
    }
}

/// Solves `M * S = w` over the integers.
pub fn lattice_solve(m: &IntMatrix, w: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    Cokernel::new(m)?.solve(w)
}

/// Order of the class of `w` in `Z^rows / Im(M)`.
pub fn cokernel_class_order(m: &IntMatrix, w: &[BigInt]) -> Result<ClassOrder> {
    Cokernel::new(m)?.class_order(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn dipole() -> IntMatrix {
        IntMatrix::from_rows(&[[-2, 2], [2, -2]])
    }

    #[test]
    fn basis_differences() {
        assert_eq!(basis_difference(3, 0, 1).unwrap(), v(&[1, -1, 0]));
        assert_eq!(basis_difference(3, 2, 0).unwrap(), v(&[-1, 0, 1]));
        assert_eq!(basis_difference(2, 0, 1).unwrap(), v(&[1, -1]));
        assert_eq!(basis_difference(3, 1, 1), Err(Error::SameVertex(1)));
        assert!(matches!(basis_difference(3, 0, 3), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn solve_examples() {
        assert_eq!(lattice_solve(&IntMatrix::identity(2), &v(&[5, 7])).unwrap(), Some(v(&[5, 7])));

        let s = lattice_solve(&dipole(), &v(&[-2, 2])).unwrap().expect("solvable");
        assert_eq!(dipole().mul_vec(&s).unwrap(), v(&[-2, 2]));

        assert_eq!(lattice_solve(&dipole(), &v(&[1, -1])).unwrap(), None);
        assert!(lattice_solve(&dipole(), &v(&[1, -1, 0])).is_err());
    }

    #[test]
    fn order_examples() {
        let e12 = v(&[1, -1]);
        assert_eq!(cokernel_class_order(&dipole(), &e12).unwrap(), ClassOrder::Finite(2.into()));

        let c3 = IntMatrix::from_rows(&[[-2, 1, 1], [1, -2, 1], [1, 1, -2]]);
        assert_eq!(cokernel_class_order(&c3, &v(&[1, 0, -1])).unwrap(), ClassOrder::Finite(3.into()));

        assert_eq!(
            cokernel_class_order(&IntMatrix::identity(3), &v(&[1, -1, 0])).unwrap(),
            ClassOrder::Finite(1.into())
        );
        // (1,1) is the free direction of the dipole cokernel.
        assert_eq!(cokernel_class_order(&dipole(), &v(&[1, 1])).unwrap(), ClassOrder::Infinite);
        assert_eq!(cokernel_class_order(&dipole(), &v(&[0, 0])).unwrap(), ClassOrder::Finite(1.into()));
    }

    #[test]
    fn rectangular_systems() {
        // Extra rows beyond the diagonal behave like zero invariant factors.
        let m = IntMatrix::from_rows(&[[2], [0]]);
        assert_eq!(cokernel_class_order(&m, &v(&[1, 0])).unwrap(), ClassOrder::Finite(2.into()));
        assert_eq!(cokernel_class_order(&m, &v(&[0, 1])).unwrap(), ClassOrder::Infinite);
        assert_eq!(lattice_solve(&m, &v(&[4, 0])).unwrap(), Some(v(&[2])));
    }

    proptest::proptest! {
        #[test]
        fn solutions_reproduce_target(
            n in 1usize..5,
            entries in proptest::collection::vec(-9i64..=9, 16),
            target in proptest::collection::vec(-5i64..=5, 4),
        ) {
            let lit: Vec<Vec<i64>> = (0..n).map(|i| entries[i * n..i * n + n].to_vec()).collect();
            let m = IntMatrix::from_rows(&lit);
            let w = v(&target[..n]);
            let co = Cokernel::new(&m).unwrap();
            match co.solve(&w).unwrap() {
                Some(s) => {
                    proptest::prop_assert_eq!(m.mul_vec(&s).unwrap(), w.clone());
                    proptest::prop_assert!(co.class_order(&w).unwrap().is_one());
                }
                None => proptest::prop_assert!(!co.class_order(&w).unwrap().is_one()),
            }
            let hermite = super::super::LatticeBasis::of_columns(&m);
            proptest::prop_assert_eq!(hermite.contains(&w).unwrap(), co.solve(&w).unwrap().is_some());
        }
    }
}
