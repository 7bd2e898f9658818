use super::Multigraph;

/// Low-link bridge detection, iterative. A bundle of two or more parallel
/// edges is never a bridge: the second copy acts as a back edge to the parent.
pub(super) fn find_bridges(g: &Multigraph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut out = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, parent, next neighbor to inspect)
        let mut stack: Vec<(usize, Option<usize>, usize)> = vec![(root, None, 0)];

        while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
            if *next < n {
                let u = *next;
                *next += 1;
                let c = g.multiplicity(v, u);
                if c == 0 {
                    continue;
                }
                if Some(u) == parent {
                    if c >= 2 {
                        low[v] = low[v].min(disc[u]);
                    }
                    continue;
                }
                if disc[u] == usize::MAX {
                    disc[u] = timer;
                    low[u] = timer;
                    timer += 1;
                    stack.push((u, Some(v), 0));
                } else {
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if let Some(p) = parent {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        out.push((p.min(v), p.max(v)));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Oracle: an edge bundle of multiplicity one is a bridge iff deleting it
    /// disconnects its endpoints.
    fn bridges_by_deletion(g: &Multigraph) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, j, c) in g.edge_bundles() {
            if c != 1 {
                continue;
            }
            let mut h = g.clone();
            h.remove_edges(i, j, 1).unwrap();
            if !h.component_of(i)[j] {
                out.push((i, j));
            }
        }
        out
    }

    #[test]
    fn examples() {
        assert_eq!(Multigraph::path(4).bridges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert!(Multigraph::cycle(4).bridges().is_empty());
        assert!(Multigraph::dipole(2).bridges().is_empty());
        assert_eq!(Multigraph::dipole(1).bridges(), vec![(0, 1)]);
    }

    #[test]
    fn agrees_with_deletion_on_small_multigraphs() {
        for n in 1..=4 {
            for g in crate::graph::enumerate_connected(n, 2).unwrap() {
                assert_eq!(g.bridges(), bridges_by_deletion(&g), "{g:?}");
            }
        }
        for g in crate::graph::enumerate_connected(6, 1).unwrap().step_by(7) {
            assert_eq!(g.bridges(), bridges_by_deletion(&g), "{g:?}");
        }
    }
}
