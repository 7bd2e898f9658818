use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// A vertex pair `(i, j)`, its order `h`, and a weight vector `S` with
/// `M(G) S = h (e_i - e_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Marking {
    pub i: usize,
    pub j: usize,
    pub order: BigInt,
    pub weights: Vec<BigInt>,
}

impl Marking {
    pub fn new(i: usize, j: usize, order: BigInt, weights: Vec<BigInt>) -> Self {
        Marking { i, j, order, weights }
    }

    pub fn from_i64(i: usize, j: usize, order: i64, weights: &[i64]) -> Self {
        Marking::new(i, j, order.into(), weights.iter().map(|&w| w.into()).collect())
    }

    pub fn weight(&self, v: usize) -> &BigInt {
        &self.weights[v]
    }

    /// Shifted by a multiple of `(1, ..., 1)` so the smallest weight is zero.
    pub fn normalized(mut self) -> Self {
        if let Some(min) = self.weights.iter().min().cloned() {
            for w in &mut self.weights {
                *w -= &min;
            }
        }
        self
    }

    pub fn is_normalized(&self) -> bool {
        self.weights.iter().min().is_some_and(Zero::is_zero)
    }

    /// `s_j - s_i`: the number of weight levels the marking spans.
    pub fn span(&self) -> BigInt {
        &self.weights[self.j] - &self.weights[self.i]
    }
}

/// Checks every marking law and reports the first one that fails.
pub fn check_marking(g: &Multigraph, mk: &Marking) -> Result<()> {
    let n = g.vertex_count();
    let bad = |msg: String| Err(Error::InvalidMarking(msg));
    if mk.weights.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: mk.weights.len() });
    }
    g.check_pair(mk.i, mk.j)?;
    if !mk.order.is_positive() {
        return bad(format!("order {} is not positive", mk.order));
    }

    let image = g.laplacian().mul_vec(&mk.weights)?;
    for (v, x) in image.iter().enumerate() {
        let want = if v == mk.i {
            mk.order.clone()
        } else if v == mk.j {
            -&mk.order
        } else {
            BigInt::zero()
        };
        if *x != want {
            return bad(format!("M S at vertex {} is {x}, expected {want}", v + 1));
        }
    }

    let last = &mk.weights[n - 1];
    let g_diff = mk.weights[..n - 1].iter().fold(BigInt::zero(), |acc, w| acc.gcd(&(w - last)));
    if !g_diff.is_one() {
        return bad(format!("weight differences have gcd {g_diff}"));
    }

    let min = mk.weights.iter().min().unwrap();
    let max = mk.weights.iter().max().unwrap();
    if mk.weights[mk.i] != *min {
        return bad(format!("weight of vertex {} is not the minimum", mk.i + 1));
    }
    if mk.weights[mk.j] != *max {
        return bad(format!("weight of vertex {} is not the maximum", mk.j + 1));
    }

    let si = &mk.weights[mk.i];
    let flow: BigInt = g.neighbors(mk.i).map(|(v, c)| (&mk.weights[v] - si) * BigInt::from(c)).sum();
    if flow != mk.order {
        return bad(format!("edge flow out of vertex {} is {flow}, not {}", mk.i + 1, mk.order));
    }
    Ok(())
}

pub fn verify_marking(g: &Multigraph, mk: &Marking) -> bool {
    check_marking(g, mk).is_ok()
}

/// Self-pairing of the class of `e_i - e_j`: `(s_i - s_j) / h` reduced into `[0, 1)`.
pub fn pairing_self(g: &Multigraph, i: usize, j: usize) -> Result<BigRational> {
    let mk = super::marking(g, i, j)?;
    Ok(pairing_of(&mk))
}

pub(crate) fn pairing_of(mk: &Marking) -> BigRational {
    let r = BigRational::new(&mk.weights[mk.i] - &mk.weights[mk.j], mk.order.clone());
    &r - r.floor()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::chain_graph;

    #[test]
    fn verification_examples() {
        let c4 = Multigraph::cycle(4);
        assert!(verify_marking(&c4, &Marking::from_i64(0, 3, 4, &[0, 1, 2, 3])));
        let doubled = Marking::from_i64(0, 3, 8, &[0, 2, 4, 6]);
        assert!(matches!(check_marking(&c4, &doubled), Err(Error::InvalidMarking(m)) if m.contains("gcd")));
        assert!(verify_marking(&Multigraph::dipole(2), &Marking::from_i64(0, 1, 2, &[0, 1])));
        // Wrong orientation.
        assert!(!verify_marking(&c4, &Marking::from_i64(3, 0, 4, &[0, 1, 2, 3])));
        // Wrong order.
        assert!(!verify_marking(&c4, &Marking::from_i64(0, 3, 3, &[0, 1, 2, 3])));
        assert!(check_marking(&c4, &Marking::from_i64(0, 3, 4, &[0, 1, 2])).is_err());
    }

    #[test]
    fn shifts_are_equivalent() {
        let c4 = Multigraph::cycle(4);
        let mk = Marking::from_i64(0, 3, 4, &[5, 6, 7, 8]);
        assert!(verify_marking(&c4, &mk));
        assert!(!mk.is_normalized());
        assert_eq!(mk.normalized(), Marking::from_i64(0, 3, 4, &[0, 1, 2, 3]));
    }

    #[test]
    fn self_pairing() {
        let chain = chain_graph(&[1, 2, 3]).unwrap();
        let p = pairing_self(&chain.graph, chain.v, chain.w).unwrap();
        assert_eq!(p, BigRational::new(5.into(), 11.into()));
        for h in 1..8u32 {
            let p = pairing_self(&Multigraph::dipole(h), 0, 1).unwrap();
            assert_eq!(p, BigRational::new(BigInt::from(h - 1), BigInt::from(h)));
        }
        assert!(pairing_self(&Multigraph::path(2), 0, 1).unwrap().is_zero());
        assert_eq!(pairing_self(&Multigraph::cycle(3), 1, 1), Err(Error::SameVertex(1)));
    }
}
