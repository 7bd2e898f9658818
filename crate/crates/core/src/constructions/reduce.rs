use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::MarkedGraph;
use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Order in which step 3 visits the edge bundles that need thickening.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ThickenOrder {
    #[default]
    Lexicographic,
    Reverse,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    /// 0 for the input, then 1 to 4.
    pub step: usize,
    pub description: String,
    pub marked: MarkedGraph,
}

/// Result of reducing a marked graph: a path on `length + 1` vertices whose
/// consecutive vertices are joined by `order` edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringDecomposition {
    pub order: BigInt,
    pub length: usize,
    pub result: MarkedGraph,
    /// `levels[t]` is the vertex of weight `t` in `result`.
    pub levels: Vec<usize>,
    /// Where the low and high marked vertices of the input ended up.
    pub low: usize,
    pub high: usize,
    pub trace: Vec<TraceStep>,
}

impl StringDecomposition {
    /// The result relabeled so that vertex `t` has weight `t`.
    pub fn by_level(&self) -> Multigraph {
        let mut g = Multigraph::new(self.length + 1);
        for t in 0..self.length {
            let c = self.result.graph().multiplicity(self.levels[t], self.levels[t + 1]);
            g.add_edges(t, t + 1, c).expect("consecutive levels are distinct");
        }
        g
    }
}

/// `length` copies of the `h`-edge dipole glued end to end.
pub fn string_graph(h: u32, length: usize) -> Multigraph {
    let mut g = Multigraph::new(length + 1);
    for t in 0..length {
        g.add_edges(t, t + 1, h).expect("consecutive vertices are distinct");
    }
    g
}

pub fn reduce_to_string(mg: &MarkedGraph) -> Result<StringDecomposition> {
    reduce_to_string_with(mg, ThickenOrder::Lexicographic)
}

fn at_step<T>(step: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| Error::ReductionStep { step, message: e.to_string() })
}

fn glue_equal_weights(mut mg: MarkedGraph) -> Result<MarkedGraph> {
    loop {
        let Some((_, class)) = mg.weight_classes().into_iter().find(|(_, vs)| vs.len() >= 2) else {
            return Ok(mg);
        };
        mg = mg.glue(class[0], class[1])?;
    }
}

fn thicken_all(mg: MarkedGraph, order: ThickenOrder) -> Result<MarkedGraph> {
    let two = BigInt::from(2);
    let mut todo: Vec<(usize, usize)> = mg
        .graph()
        .edge_bundles()
        .filter(|&(a, b, _)| (mg.weight(a) - mg.weight(b)).magnitude() >= two.magnitude())
        .map(|(a, b, _)| (a, b))
        .collect();
    if order == ThickenOrder::Reverse {
        todo.reverse();
    }
    // Thickening only appends vertices, so the collected indices stay valid.
    todo.into_iter().try_fold(mg, |m, (a, b)| m.thicken(a, b))
}

/// Removes equal-weight edges, glues equal weights, thickens every edge
/// spanning two or more weight levels, and glues again. The result is
/// checked to be the string of `h`-dipoles spanning the input's weight range.
pub fn reduce_to_string_with(mg: &MarkedGraph, order: ThickenOrder) -> Result<StringDecomposition> {
    let mut trace = vec![TraceStep { step: 0, description: "input".into(), marked: mg.clone() }];

    let s1 = at_step(1, mg.remove_equal_weight_edges(&mg.equal_weight_edges()))?;
    trace.push(TraceStep { step: 1, description: "remove edges inside weight classes".into(), marked: s1.clone() });

    let s2 = at_step(2, glue_equal_weights(s1))?;
    trace.push(TraceStep { step: 2, description: "glue equal weights".into(), marked: s2.clone() });

    let s3 = at_step(3, thicken_all(s2, order))?;
    trace.push(TraceStep { step: 3, description: "thicken edges across two or more levels".into(), marked: s3.clone() });

    let s4 = at_step(4, glue_equal_weights(s3))?;
    trace.push(TraceStep { step: 4, description: "glue equal weights".into(), marked: s4.clone() });

    let fail = |message: String| Error::ReductionStep { step: 4, message };
    let span = mg.marking().span();
    let length = span.to_usize().ok_or_else(|| fail(format!("weight span {span} is out of range")))?;
    if s4.vertex_count() != length + 1 {
        return Err(fail(format!("expected {} vertices, found {}", length + 1, s4.vertex_count())));
    }
    let mut levels = vec![usize::MAX; length + 1];
    for (v, w) in s4.weights().iter().enumerate() {
        let t = w.to_usize().filter(|&t| t <= length).ok_or_else(|| fail(format!("weight {w} outside 0..={length}")))?;
        if levels[t] != usize::MAX {
            return Err(fail(format!("two vertices of weight {t}")));
        }
        levels[t] = v;
    }
    let h = mg.order().to_u32().ok_or_else(|| fail(format!("order {} is out of range", mg.order())))?;
    let mut expected = Multigraph::new(length + 1);
    for t in 0..length {
        expected.add_edges(levels[t], levels[t + 1], h)?;
    }
    if &expected != s4.graph() {
        return Err(fail("result is not a string of dipoles".into()));
    }
    let (low, high) = (s4.low(), s4.high());
    if low != levels[0] || high != levels[length] {
        return Err(fail("marked vertices are not the ends of the string".into()));
    }
    Ok(StringDecomposition { order: mg.order().clone(), length, result: s4, levels, low, high, trace })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{chain_graph, verify_marking};

    fn check(mg: &MarkedGraph) -> StringDecomposition {
        let d = reduce_to_string(mg).unwrap();
        for step in &d.trace {
            assert!(verify_marking(step.marked.graph(), step.marked.marking()));
            assert_eq!(step.marked.order(), mg.order());
        }
        let h = mg.order().to_u32().unwrap();
        assert_eq!(d.length, mg.marking().span().to_usize().unwrap());
        for t in 0..d.length {
            assert_eq!(d.result.graph().multiplicity(d.levels[t], d.levels[t + 1]), h);
        }
        assert_eq!(d.by_level(), string_graph(h, d.length));
        let rev = reduce_to_string_with(mg, ThickenOrder::Reverse).unwrap();
        assert_eq!(rev.by_level(), d.by_level());
        d
    }

    #[test]
    fn cycle() {
        let mg = MarkedGraph::from_pair(Multigraph::cycle(5), 0, 4).unwrap();
        let d = check(&mg);
        assert_eq!((d.length, d.order.clone()), (4, BigInt::from(5)));
        assert_eq!(d.trace.len(), 5);
    }

    #[test]
    fn dipole_is_fixed() {
        let g = MarkedGraph::dipole(4).unwrap();
        let d = check(&g);
        assert_eq!(d.length, 1);
        assert_eq!(d.result, g);
        assert_eq!(d.result.graph(), &string_graph(4, 1));
    }

    #[test]
    fn chain() {
        let c = chain_graph(&[1, 2, 3]).unwrap();
        let mg = MarkedGraph::from_pair(c.graph.clone(), c.v, c.w).unwrap();
        let d = check(&mg);
        assert_eq!(d.order, BigInt::from(11));
        assert_eq!(BigInt::from(d.length), mg.weight(c.w).clone());
    }

    #[test]
    fn every_pair_of_small_graphs() {
        for (n, max_mult) in [(2, 3), (3, 2), (4, 1)] {
            for g in crate::graph::enumerate_connected(n, max_mult).unwrap() {
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            check(&MarkedGraph::from_pair(g.clone(), i, j).unwrap());
                        }
                    }
                }
            }
        }
    }
}
