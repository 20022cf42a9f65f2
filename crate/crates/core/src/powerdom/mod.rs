//! Power domination: a domination step observing `N[S]`, then zero forcing
//! propagation from the observed set.

mod outerplanar;
mod paths;

pub use outerplanar::{has_minor, is_outerplanar_small, MAX_OUTERPLANAR_N};
pub use paths::{
    extract_decomposition, find_decomposition_exhaustive, is_k_parallel_paths_graph, recognize, recognize_exhaustive,
    validate_decomposition, DecompositionCheck, ParallelPathsDecomposition,
};

use serde::Serialize;

use crate::deadline::Deadline;
use crate::error::Result;
use crate::forcing::{closure_set, forcing_closure, PropagationTrace};
use crate::graph::{subsets_of_size, Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerTrace {
    pub seed: VertexSet,
    /// `N[S]`.
    pub dominated: VertexSet,
    pub propagation: PropagationTrace,
    pub observed: VertexSet,
}

pub fn power_closure(g: &Graph, s: VertexSet) -> PowerTrace {
    let seed = s & g.vertices();
    let dominated = g.closed_nbhd_of_set(seed);
    let propagation = forcing_closure(g, dominated);
    let observed = propagation.final_set;
    PowerTrace { seed, dominated, propagation, observed }
}

pub fn is_power_dominating_set(g: &Graph, s: VertexSet) -> bool {
    closure_set(g, g.closed_nbhd_of_set(s & g.vertices())) == g.vertices()
}

/// `γP(G)` with the least-mask minimum power dominating set.
pub fn power_domination_number(g: &Graph) -> (usize, VertexSet) {
    power_domination_number_within(g, &Deadline::NONE).expect("no deadline")
}

pub fn power_domination_number_within(g: &Graph, deadline: &Deadline) -> Result<(usize, VertexSet)> {
    let mut tick = 0;
    for k in 0..=g.n() {
        for s in subsets_of_size(g.vertices(), k) {
            deadline.tick(&mut tick)?;
            if is_power_dominating_set(g, s) {
                return Ok((k, s));
            }
        }
    }
    unreachable!("V(G) power dominates")
}

/// The least vertex `x` of degree `δ(G) ≥ 1` such that `{x}` power
/// dominates. Its existence is equivalent to `Z(G) = δ(G)`.
///
/// The hub must have a neighbor: for `K_1` the singleton power dominates
/// with degree 0, yet `Z(K_1) = 1`.
pub fn z_equals_delta(g: &Graph) -> Option<usize> {
    let delta = g.min_degree();
    if delta == 0 {
        return None;
    }
    (0..g.n()).find(|&x| g.degree(x) == delta && is_power_dominating_set(g, VertexSet::singleton(x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forcing::zero_forcing_number;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().collect()
    }

    #[test]
    fn closure_examples() {
        assert_eq!(power_closure(&path(5), set(&[0])).observed, set(&[0, 1, 2, 3, 4]));

        let t = power_closure(&cycle(4), set(&[0]));
        assert_eq!(t.dominated, set(&[0, 1, 3]));
        assert_eq!(t.observed, set(&[0, 1, 2, 3]));
        assert_eq!(t.propagation.steps.len(), 1);

        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(power_closure(&two_k2, set(&[0])).observed, set(&[0, 1]));
    }

    #[test]
    fn numbers() {
        for n in 1..8 {
            assert_eq!(power_domination_number(&path(n)).0, 1);
        }
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(power_domination_number(&two_k2), (2, set(&[0, 2])));
    }

    #[test]
    fn z_delta_bridge() {
        assert_eq!(z_equals_delta(&path(6)), Some(0));
        assert!(z_equals_delta(&cycle(6)).is_some());
        assert_eq!(zero_forcing_number(&cycle(6)).0, 2);
        // K_{2,3}: parts {0,1} and {2,3,4}, δ = 2 on the big side
        let k23 = Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(z_equals_delta(&k23), None);
        assert_eq!(zero_forcing_number(&k23).0, 3);
        assert_eq!(z_equals_delta(&Graph::empty(1).unwrap()), None);
    }
}
