use rand::Rng;

use super::Multigraph;
use crate::error::{Error, Result};

/// Largest vertex count accepted when enumerating simple graphs.
pub const SIMPLE_LIMIT: usize = 6;
/// Largest vertex count accepted when multiplicities above one are allowed.
pub const MULTI_LIMIT: usize = 4;

/// Every labeled connected multigraph on `n` vertices with multiplicities in
/// `0..=max_mult`, each exactly once.
///
/// Graphs are produced in odometer order over the multiplicity vector of the
/// pairs `(0,1), (0,2), ..., (n-2,n-1)`, last pair fastest.
pub fn enumerate_connected(n: usize, max_mult: u32) -> Result<ConnectedGraphs> {
    let limit = if max_mult <= 1 { SIMPLE_LIMIT } else { MULTI_LIMIT };
    if n == 0 {
        return Err(Error::InvalidArgument("graphs need at least one vertex".into()));
    }
    if n > limit {
        return Err(Error::EnumerationLimit { n, max_mult, limit });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Ok(ConnectedGraphs { n, max_mult, counter: Some(vec![0; pairs.len()]), pairs })
}

#[derive(Clone, Debug)]
pub struct ConnectedGraphs {
    n: usize,
    max_mult: u32,
    pairs: Vec<(usize, usize)>,
    counter: Option<Vec<u32>>,
}

impl ConnectedGraphs {
    fn advance(&mut self) {
        let Some(counter) = self.counter.as_mut() else { return };
        for digit in counter.iter_mut().rev() {
            if *digit < self.max_mult {
                *digit += 1;
                return;
            }
            *digit = 0;
        }
        self.counter = None;
    }
}

impl Iterator for ConnectedGraphs {
    type Item = Multigraph;

    fn next(&mut self) -> Option<Multigraph> {
        loop {
            let counter = self.counter.as_ref()?;
            let mut g = Multigraph::new(self.n);
            for (&(i, j), &c) in self.pairs.iter().zip(counter) {
                if c > 0 {
                    g.set_multiplicity(i, j, c).expect("pairs are distinct and in range");
                }
            }
            self.advance();
            if g.is_connected() {
                return Some(g);
            }
        }
    }
}

/// A uniformly random labeled connected simple graph on `n` vertices
/// (rejection sampling over `G(n, 1/2)`).
pub fn random_connected_simple<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Multigraph {
    loop {
        let mut g = Multigraph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(0.5) {
                    g.add_edges(i, j, 1).unwrap();
                }
            }
        }
        if g.is_connected() {
            return g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        // Labeled connected simple graphs: 1, 1, 4, 38, 728, 26704.
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_connected(n, 1).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728, 26704]);
    }

    #[test]
    fn small_cases() {
        let two: Vec<Multigraph> = enumerate_connected(2, 3).unwrap().collect();
        assert_eq!(two, vec![Multigraph::dipole(1), Multigraph::dipole(2), Multigraph::dipole(3)]);
        let one: Vec<Multigraph> = enumerate_connected(1, 1).unwrap().collect();
        assert_eq!(one, vec![Multigraph::new(1)]);
    }

    #[test]
    fn each_graph_once() {
        let all: Vec<Multigraph> = enumerate_connected(4, 2).unwrap().collect();
        let unique: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(all.len(), unique.len());
        assert!(all.iter().all(|g| g.is_connected() && (0..4).all(|i| (0..4).all(|j| g.multiplicity(i, j) <= 2))));
    }

    #[test]
    fn limits() {
        assert!(matches!(enumerate_connected(7, 1), Err(Error::EnumerationLimit { limit: 6, .. })));
        assert!(matches!(enumerate_connected(5, 2), Err(Error::EnumerationLimit { limit: 4, .. })));
        assert!(enumerate_connected(0, 1).is_err());
    }

    #[test]
    fn random_graphs_are_connected() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = random_connected_simple(6, &mut rng);
            assert!(g.is_connected() && g.is_simple());
        }
    }
}
