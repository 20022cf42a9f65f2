//! Simple undirected graphs on at most 64 vertices with bitmask adjacency.

mod enumerate;
mod graph6;
mod subsets;
mod vertex_set;

pub use enumerate::{enumerate_labeled_graphs, one_vertex_extensions, LabeledGraphs, MAX_ENUMERATION_N};
pub use graph6::{emit_graph6, parse_graph6, MAX_GRAPH6_N};
pub use subsets::{subsets, subsets_of_size, Subsets, SubsetsOfSize};
pub use vertex_set::VertexSet;

use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Adjacency rows are kept symmetric and loop-free by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, rejecting asymmetric rows, loops
    /// and out-of-range neighbors.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        let all = VertexSet::full(n);
        for (v, row) in adj.iter().enumerate() {
            if !row.is_subset(all) {
                return Err(Error::NotASubset);
            }
            if row.contains(v) {
                return Err(Error::SelfLoop(v));
            }
            for u in row.iter() {
                if !adj[u].contains(v) {
                    return Err(Error::InvalidArgument(format!("adjacency is not symmetric at {{{v},{u}}}")));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Callers guarantee symmetry and irreflexivity.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<VertexSet>) -> Self {
        debug_assert!(adj.iter().enumerate().all(|(v, r)| !r.contains(v) && r.iter().all(|u| adj[u].contains(v))));
        Graph { n: adj.len(), adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn check_subset(&self, s: VertexSet) -> Result<()> {
        if s.is_subset(self.vertices()) {
            Ok(())
        } else {
            Err(Error::NotASubset)
        }
    }

    /// `N(v)`; panics if `v >= n`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// `N[v]`; panics if `v >= n`.
    #[inline]
    pub fn closed(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    pub fn open_nbhd(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v])
    }

    pub fn closed_nbhd(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.closed(v))
    }

    /// Union of open neighborhoods of the members of `s`.
    pub fn open_nbhd_of_set(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    /// Union of closed neighborhoods of the members of `s`.
    pub fn closed_nbhd_of_set(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(s, |acc, v| acc | self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// `deg_X(v) = |N(v) ∩ X|`.
    #[inline]
    pub fn degree_in(&self, v: usize, x: VertexSet) -> usize {
        (self.adj[v] & x).len()
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u` (graph6 order).
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |v| (self.adj[v] & VertexSet::full(v)).iter().map(move |u| (u, v)))
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn first_isolated_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.adj[v].is_empty())
    }

    pub fn is_isolate_free(&self) -> bool {
        self.first_isolated_vertex().is_none()
    }

    /// Vertices reachable from `v` inside `within`.
    pub fn reach_within(&self, v: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.open_nbhd_of_set(frontier) & within;
            frontier = next - seen;
            seen |= next;
        }
        seen
    }

    /// Components of `G[within]`, ordered by minimum vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let c = self.reach_within(v, rest);
            rest -= c;
            out.push(c);
        }
        out
    }

    /// Connected components ordered by minimum vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// True for the empty graph and every graph with one component.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach_within(0, self.vertices()) == self.vertices()
    }

    /// Connected, at least three vertices and no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        let all = self.vertices();
        (0..self.n).all(|v| {
            let rest = all.without(v);
            let start = rest.min().expect("n >= 3");
            self.reach_within(start, rest) == rest
        })
    }

    /// `G[s]` relabelled to `0..|s|` in ascending order; the returned map
    /// sends new labels to old ones.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_subset(s)?;
        Ok(self.induced_unchecked(s))
    }

    pub(crate) fn induced_unchecked(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let map = s.to_vec();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (new, &old) in map.iter().enumerate() {
            index[old] = new;
        }
        let adj = map.iter().map(|&old| (self.adj[old] & s).iter().map(|u| index[u]).collect()).collect();
        (Graph::from_adjacency_unchecked(adj), map)
    }

    /// `G - v`, with the relabelling map.
    pub fn remove_vertex(&self, v: usize) -> Result<(Graph, Vec<usize>)> {
        self.check_vertex(v)?;
        Ok(self.induced_unchecked(self.vertices().without(v)))
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| VertexSet::from_bits(r.bits() << self.n)));
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s.without(v)).is_subset(self.adj[v]))
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertices())
    }

    /// Whether the component `c` induces a complete graph. Singletons count.
    pub fn is_clique_component(&self, c: VertexSet) -> Result<bool> {
        self.check_subset(c)?;
        let Some(v) = c.min() else {
            return Err(Error::NotAComponent);
        };
        if self.reach_within(v, self.vertices()) != c {
            return Err(Error::NotAComponent);
        }
        Ok(self.is_clique(c))
    }

    pub fn has_clique_component(&self) -> bool {
        self.components().into_iter().any(|c| self.is_clique(c))
    }

    pub fn are_closed_twins(&self, u: usize, v: usize) -> Result<bool> {
        self.check_pair(u, v)?;
        Ok(self.closed(u) == self.closed(v))
    }

    pub fn are_open_twins(&self, u: usize, v: usize) -> Result<bool> {
        self.check_pair(u, v)?;
        Ok(self.adj[u] == self.adj[v])
    }

    /// Open or closed twins.
    pub fn are_twins(&self, u: usize, v: usize) -> Result<bool> {
        self.check_pair(u, v)?;
        Ok(self.twins_unchecked(u, v))
    }

    #[inline]
    pub(crate) fn twins_unchecked(&self, u: usize, v: usize) -> bool {
        self.adj[u] == self.adj[v] || self.closed(u) == self.closed(v)
    }

    pub fn is_twin_vertex(&self, v: usize) -> Result<bool> {
        self.check_vertex(v)?;
        Ok((0..self.n).any(|u| u != v && self.twins_unchecked(u, v)))
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(())
    }

    pub fn is_simplicial(&self, v: usize) -> bool {
        self.is_clique(self.adj[v])
    }

    /// Vertices whose open neighborhood is a clique (leaves and isolated
    /// vertices included).
    pub fn simplicial_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.is_simplicial(v)).collect()
    }

    /// Maximum cardinality search order: each step visits an unvisited
    /// vertex with the most visited neighbors, lowest index on ties.
    pub fn mcs_order(&self) -> Vec<usize> {
        let mut visited = VertexSet::EMPTY;
        let mut order = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            let v = (self.vertices() - visited)
                .iter()
                .max_by_key(|&v| (self.degree_in(v, visited), std::cmp::Reverse(v)))
                .expect("unvisited vertex remains");
            visited.insert(v);
            order.push(v);
        }
        order
    }

    /// Chordality via MCS: the reversed visit order is a perfect elimination
    /// ordering iff the graph is chordal, i.e. every vertex's earlier-visited
    /// neighbors form a clique.
    pub fn is_chordal(&self) -> bool {
        let mut visited = VertexSet::EMPTY;
        for v in self.mcs_order() {
            if !self.is_clique(self.adj[v] & visited) {
                return false;
            }
            visited.insert(v);
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
