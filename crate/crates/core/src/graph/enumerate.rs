use super::{subsets, Graph, Subsets, VertexSet};
use crate::error::{Error, Result};

/// Largest `n` for full labeled enumeration (2^15 graphs at n = 6).
pub const MAX_ENUMERATION_N: usize = 6;

/// Every labeled simple graph on `n` vertices, each exactly once, ordered by
/// the graph6 edge bit vector read as a binary number.
pub fn enumerate_labeled_graphs(n: usize, connected_only: bool) -> Result<LabeledGraphs> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::TooLarge { n, max: MAX_ENUMERATION_N });
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    Ok(LabeledGraphs { n, total: 1u64 << pairs.len(), pairs, next: 0, connected_only })
}

#[derive(Clone, Debug)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    total: u64,
    next: u64,
    connected_only: bool,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.total {
            let code = self.next;
            self.next += 1;
            let mut adj = vec![VertexSet::EMPTY; self.n];
            for (i, &(u, v)) in self.pairs.iter().enumerate() {
                if code >> i & 1 == 1 {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
            }
            let g = Graph::from_adjacency_unchecked(adj);
            if !self.connected_only || g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}

/// Graphs on `n + 1` vertices obtained by adding vertex `n` joined to each
/// subset of `V(g)` in ascending mask order.
///
/// Every connected graph on `n + 1` vertices arises from some connected
/// graph on `n` vertices this way (delete a non-cut vertex), so applying this
/// to a complete list of connected `n`-vertex graphs covers every
/// isomorphism class of connected `(n+1)`-vertex graphs, with repeats.
pub fn one_vertex_extensions(g: &Graph) -> Result<impl Iterator<Item = Graph> + '_> {
    let n = g.n();
    if n + 1 > super::MAX_VERTICES {
        return Err(Error::TooLarge { n: n + 1, max: super::MAX_VERTICES });
    }
    let it: Subsets = subsets(g.vertices());
    Ok(it.map(move |nb| {
        let mut adj = g.adj.clone();
        for u in nb.iter() {
            adj[u].insert(n);
        }
        adj.push(nb);
        Graph::from_adjacency_unchecked(adj)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_labeled_graphs(0, false).unwrap().count(), 1);
        assert_eq!(enumerate_labeled_graphs(2, false).unwrap().count(), 2);
        assert_eq!(enumerate_labeled_graphs(3, false).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(4, false).unwrap().count(), 64);
        assert!(matches!(enumerate_labeled_graphs(7, false), Err(Error::TooLarge { n: 7, max: 6 })));
    }

    #[test]
    fn each_graph_once() {
        let all: Vec<_> = enumerate_labeled_graphs(4, false).unwrap().collect();
        let distinct: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), all.len());
    }

    #[test]
    fn extensions() {
        let p2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        let ext: Vec<_> = one_vertex_extensions(&p2).unwrap().collect();
        assert_eq!(ext.len(), 4);
        assert_eq!(ext.iter().map(|g| g.m()).collect::<Vec<_>>(), vec![1, 2, 2, 3]);
        assert!(ext.iter().all(|g| g.n() == 3));
    }
}
