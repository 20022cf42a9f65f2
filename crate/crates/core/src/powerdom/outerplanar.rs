//! Small-graph outerplanarity through forbidden minors.

use crate::error::{Error, Result};
use crate::graph::{subsets, Graph, VertexSet};

/// Largest order accepted by [`is_outerplanar_small`].
pub const MAX_OUTERPLANAR_N: usize = 10;

fn connected_subsets(g: &Graph) -> Vec<VertexSet> {
    subsets(g.vertices()).filter(|&s| s.min().is_some_and(|v| g.reach_within(v, s) == s)).collect()
}

/// Whether `h` is a minor of `g`, by searching for pairwise disjoint
/// connected branch sets, adjacent wherever `h` has an edge. Twin vertices
/// of `h` get branch sets with increasing minimum vertex. Exponential in
/// `n(g)`; intended for `n(g) <= MAX_OUTERPLANAR_N`.
pub fn has_minor(g: &Graph, h: &Graph) -> bool {
    if h.n() > g.n() || h.m() > g.m() {
        return false;
    }
    let candidates = connected_subsets(g);
    // earlier twin of each vertex of h, if any
    let twin_of: Vec<Option<usize>> = (0..h.n()).map(|v| (0..v).find(|&u| h.twins_unchecked(u, v))).collect();

    struct Search<'a> {
        g: &'a Graph,
        h: &'a Graph,
        candidates: &'a [VertexSet],
        twin_of: &'a [Option<usize>],
        branch: Vec<VertexSet>,
    }

    impl Search<'_> {
        fn go(&mut self, used: VertexSet) -> bool {
            let i = self.branch.len();
            if i == self.h.n() {
                return true;
            }
            let remaining = self.h.n() - i - 1;
            let floor = self.twin_of[i].and_then(|u| self.branch[u].min());
            for &s in self.candidates {
                if s.intersects(used) || s.len() + remaining > self.g.n() - used.len() {
                    continue;
                }
                if floor.is_some_and(|f| s.min() <= Some(f)) {
                    continue;
                }
                let touch = self.g.open_nbhd_of_set(s);
                let adjacent_ok = (0..i).all(|j| !self.h.has_edge(i, j) || touch.intersects(self.branch[j]));
                if !adjacent_ok {
                    continue;
                }
                self.branch.push(s);
                if self.go(used | s) {
                    return true;
                }
                self.branch.pop();
            }
            false
        }
    }

    Search { g, h, candidates: &candidates, twin_of: &twin_of, branch: Vec::new() }.go(VertexSet::EMPTY)
}

/// Outerplanar iff neither `K_4` nor `K_{2,3}` is a minor.
pub fn is_outerplanar_small(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n > MAX_OUTERPLANAR_N {
        return Err(Error::TooLarge { n, max: MAX_OUTERPLANAR_N });
    }
    if n >= 2 && g.m() > 2 * n - 3 {
        return Ok(false);
    }
    let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?;
    let k23 = Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])?;
    Ok(!has_minor(g, &k4) && !has_minor(g, &k23))
}
