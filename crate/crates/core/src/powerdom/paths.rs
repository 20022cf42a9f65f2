//! Graphs of `k` internally parallel paths.
//!
//! A decomposition consists of a hub `x` and induced paths `Q_1..Q_k`, each
//! starting at `x`, pairwise sharing only `x` and together covering `V(G)`;
//! other edges may run between different paths. It is valid when every
//! selection of non-end vertices `x_{i_1}, .., x_{i_l}` from distinct paths
//! contains some `x'` with exactly one neighbor in the union `Y` of the
//! path tails strictly after the selected vertices.

use serde::{Deserialize, Serialize};

use super::power_closure;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParallelPathsDecomposition {
    pub hub: usize,
    /// Each path is listed from the hub outwards, hub included.
    pub paths: Vec<Vec<usize>>,
    /// Edges of the graph lying on no path, as `(u, v)` with `u < v`.
    pub extra_edges: Vec<(usize, usize)>,
}

impl ParallelPathsDecomposition {
    /// Fills in `extra_edges` from `g`.
    pub fn new(g: &Graph, hub: usize, paths: Vec<Vec<usize>>) -> Self {
        let extra_edges = g.edges().filter(|&(u, v)| !on_some_path(&paths, u, v)).collect();
        ParallelPathsDecomposition { hub, paths, extra_edges }
    }

    pub fn k(&self) -> usize {
        self.paths.len()
    }
}

fn on_some_path(paths: &[Vec<usize>], u: usize, v: usize) -> bool {
    paths.iter().any(|p| p.windows(2).any(|w| (w[0] == u && w[1] == v) || (w[0] == v && w[1] == u)))
}

/// Result of checking a structurally sound decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionCheck {
    /// A selection with no vertex of tail-degree exactly one.
    pub selection_violation: Option<Vec<usize>>,
    /// Indices of paths that have a chord in `G`.
    pub non_induced_paths: Vec<usize>,
}

impl DecompositionCheck {
    pub fn selection_holds(&self) -> bool {
        self.selection_violation.is_none()
    }

    /// Selection property and induced paths.
    pub fn is_valid(&self) -> bool {
        self.selection_holds() && self.non_induced_paths.is_empty()
    }
}

fn check_structure(g: &Graph, d: &ParallelPathsDecomposition) -> Result<()> {
    let bad = |msg: String| Err(Error::InvalidDecomposition(msg));
    g.check_vertex(d.hub)?;
    let mut covered = VertexSet::singleton(d.hub);
    for (i, p) in d.paths.iter().enumerate() {
        if p.len() < 2 || p[0] != d.hub {
            return bad(format!("path {i} must start at the hub and have another vertex"));
        }
        for w in p.windows(2) {
            g.check_vertex(w[1])?;
            if !g.has_edge(w[0], w[1]) {
                return bad(format!("path {i} uses non-edge {{{},{}}}", w[0], w[1]));
            }
        }
        for &v in &p[1..] {
            if covered.contains(v) {
                return bad(format!("vertex {v} of path {i} is already used"));
            }
            covered.insert(v);
        }
    }
    if covered != g.vertices() {
        return bad(format!("paths miss vertices {}", g.vertices() - covered));
    }
    let expected = ParallelPathsDecomposition::new(g, d.hub, d.paths.clone()).extra_edges;
    if expected != d.extra_edges {
        return bad("extra edge list does not match the graph".into());
    }
    Ok(())
}

fn non_induced_paths(g: &Graph, paths: &[Vec<usize>]) -> Vec<usize> {
    paths
        .iter()
        .enumerate()
        .filter(|(_, p)| {
            let vs: VertexSet = p.iter().collect();
            (0..p.len()).any(|j| {
                let mut allowed = VertexSet::EMPTY;
                if j > 0 {
                    allowed.insert(p[j - 1]);
                }
                if j + 1 < p.len() {
                    allowed.insert(p[j + 1]);
                }
                !(g.neighbors(p[j]) & vs).is_subset(allowed)
            })
        })
        .map(|(i, _)| i)
        .collect()
}

/// Checks every selection of at most one non-end vertex per path. The
/// number of selections is the product of `(non-end count + 1)` over the
/// paths.
fn selection_violation(g: &Graph, paths: &[Vec<usize>]) -> Option<Vec<usize>> {
    // tails[i][j] = vertices of path i strictly after position j
    let tails: Vec<Vec<VertexSet>> =
        paths.iter().map(|p| (0..p.len()).map(|j| p[j + 1..].iter().collect()).collect()).collect();
    let radix: Vec<usize> = paths.iter().map(|p| p.len().saturating_sub(2) + 1).collect();
    let mut choice = vec![0usize; paths.len()];
    loop {
        // advance the mixed-radix counter; 0 = path not selected, c = position c
        let mut i = 0;
        while i < choice.len() {
            choice[i] += 1;
            if choice[i] < radix[i] {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == choice.len() {
            return None;
        }
        let mut y = VertexSet::EMPTY;
        let mut chosen = Vec::new();
        for (pi, &c) in choice.iter().enumerate() {
            if c > 0 {
                y |= tails[pi][c];
                chosen.push(paths[pi][c]);
            }
        }
        if !chosen.iter().any(|&v| g.degree_in(v, y) == 1) {
            return Some(chosen);
        }
    }
}

pub fn validate_decomposition(g: &Graph, d: &ParallelPathsDecomposition) -> Result<DecompositionCheck> {
    check_structure(g, d)?;
    Ok(DecompositionCheck {
        selection_violation: selection_violation(g, &d.paths),
        non_induced_paths: non_induced_paths(g, &d.paths),
    })
}

/// Replays power domination from `{x}`: the neighbors of `x` start one path
/// each, and every forced vertex extends the path whose current tip forced
/// it. Any blue vertex that is not a tip already has all neighbors blue, so
/// only tips ever force. Returns `None` when `{x}` does not power dominate.
pub fn extract_decomposition(g: &Graph, x: usize) -> Result<Option<ParallelPathsDecomposition>> {
    g.check_vertex(x)?;
    let trace = power_closure(g, VertexSet::singleton(x));
    if trace.observed != g.vertices() {
        return Ok(None);
    }
    let mut paths: Vec<Vec<usize>> = g.neighbors(x).iter().map(|v| vec![x, v]).collect();
    for step in &trace.propagation.steps {
        let Some(p) = paths.iter_mut().find(|p| p.last() == Some(&step.forcer)) else {
            return Err(Error::ProofViolation(format!("forcer {} is not the tip of any path", step.forcer)));
        };
        p.push(step.forced);
    }
    Ok(Some(ParallelPathsDecomposition::new(g, x, paths)))
}

/// All `(hub, k)` pairs whose extracted decomposition is valid. An
/// extraction error counts as no decomposition; call
/// [`extract_decomposition`] directly to see it.
pub fn recognize(g: &Graph) -> Vec<(usize, usize)> {
    (0..g.n())
        .filter(|&x| {
            extract_decomposition(g, x)
                .ok()
                .flatten()
                .is_some_and(|d| validate_decomposition(g, &d).is_ok_and(|c| c.is_valid()))
        })
        .map(|x| (x, g.degree(x)))
        .collect()
}

pub fn is_k_parallel_paths_graph(g: &Graph, k: usize) -> bool {
    recognize(g).iter().any(|&(_, d)| d == k)
}

/// Searches all decompositions rooted at `x` with induced paths and returns
/// the first one satisfying the selection property. Independent of the
/// power domination process; exponential, meant for small graphs.
pub fn find_decomposition_exhaustive(g: &Graph, x: usize) -> Result<Option<ParallelPathsDecomposition>> {
    g.check_vertex(x)?;

    struct Search<'a> {
        g: &'a Graph,
        paths: Vec<Vec<usize>>,
    }

    impl Search<'_> {
        fn go(&mut self, i: usize, used: VertexSet) -> bool {
            let g = self.g;
            if i == self.paths.len() {
                return used == g.vertices() && selection_violation(g, &self.paths).is_none();
            }
            let path = &self.paths[i];
            let tip = *path.last().expect("non-empty path");
            let before_tip: VertexSet = path[..path.len() - 1].iter().collect();
            let candidates = (g.neighbors(tip) - used).iter().filter(|&w| !g.neighbors(w).intersects(before_tip));
            for w in candidates.collect::<Vec<_>>() {
                self.paths[i].push(w);
                if self.go(i, used.with(w)) {
                    return true;
                }
                self.paths[i].pop();
            }
            self.go(i + 1, used)
        }
    }

    let starts = g.neighbors(x);
    let paths: Vec<Vec<usize>> = starts.iter().map(|v| vec![x, v]).collect();
    let mut search = Search { g, paths };
    if search.go(0, starts.with(x)) {
        Ok(Some(ParallelPathsDecomposition::new(g, x, search.paths)))
    } else {
        Ok(None)
    }
}

/// Like [`recognize`] but through [`find_decomposition_exhaustive`].
pub fn recognize_exhaustive(g: &Graph) -> Vec<(usize, usize)> {
    (0..g.n())
        .filter(|&x| find_decomposition_exhaustive(g, x).expect("hub in range").is_some())
        .map(|x| (x, g.degree(x)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|v| (0..v).map(move |u| (u, v)))).unwrap()
    }

    /// Hub 0 with three rows: 0-1-2-3-4-5, 0-6-7-8-9 and 0-10-11-12-13,
    /// plus cross edges between rows.
    fn three_rows() -> Graph {
        let rows = [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (0, 6),
            (6, 7),
            (7, 8),
            (8, 9),
            (0, 10),
            (10, 11),
            (11, 12),
            (12, 13),
        ];
        let cross = [
            (9, 4),
            (13, 4),
            (1, 6),
            (1, 7),
            (10, 2),
            (10, 7),
            (11, 3),
            (11, 8),
            (12, 3),
            (3, 9),
            (3, 13),
            (9, 5),
            (13, 5),
        ];
        Graph::from_edges(14, rows.into_iter().chain(cross)).unwrap()
    }

    fn three_rows_decomposition(g: &Graph) -> ParallelPathsDecomposition {
        ParallelPathsDecomposition::new(
            g,
            0,
            vec![vec![0, 1, 2, 3, 4, 5], vec![0, 6, 7, 8, 9], vec![0, 10, 11, 12, 13]],
        )
    }

    #[test]
    fn star_is_vacuously_valid() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let d = ParallelPathsDecomposition::new(&star, 0, vec![vec![0, 1], vec![0, 2], vec![0, 3]]);
        assert!(validate_decomposition(&star, &d).unwrap().is_valid());
    }

    #[test]
    fn three_rows_example() {
        let g = three_rows();
        let d = three_rows_decomposition(&g);
        assert_eq!(d.extra_edges.len(), 13);
        let check = validate_decomposition(&g, &d).unwrap();
        assert!(check.is_valid(), "{check:?}");

        let extracted = extract_decomposition(&g, 0).unwrap().unwrap();
        assert_eq!(extracted.k(), 3);
        assert!(validate_decomposition(&g, &extracted).unwrap().is_valid());
        assert!(is_k_parallel_paths_graph(&g, 3));
        assert!(recognize(&g).contains(&(0, 3)));
    }

    #[test]
    fn c4_split_into_paths() {
        let c4 = cycle(4);
        // the edge 2-3 joins different paths, so it is an extra edge
        let d = ParallelPathsDecomposition::new(&c4, 0, vec![vec![0, 1, 2], vec![0, 3]]);
        assert_eq!(d.extra_edges, vec![(2, 3)]);
        assert!(validate_decomposition(&c4, &d).unwrap().is_valid());

        // a single path around the cycle has the chord 0-3
        let one = ParallelPathsDecomposition::new(&c4, 0, vec![vec![0, 1, 2, 3]]);
        let check = validate_decomposition(&c4, &one).unwrap();
        assert!(check.selection_holds());
        assert_eq!(check.non_induced_paths, vec![0]);

        let broken = ParallelPathsDecomposition::new(&c4, 0, vec![vec![0, 2], vec![0, 1, 3]]);
        assert!(matches!(validate_decomposition(&c4, &broken), Err(Error::InvalidDecomposition(_))));

        let e = extract_decomposition(&c4, 0).unwrap().unwrap();
        assert_eq!(e.paths, vec![vec![0, 1, 2], vec![0, 3]]);
    }

    #[test]
    fn selection_counterexample() {
        // hub 0, paths 0-1-2 and 0-3-4 with cross edges 1-4 and 3-2:
        // selecting {1, 3} gives Y = {2, 4}, both with two neighbors in Y
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 3), (3, 4), (1, 4), (3, 2)]).unwrap();
        let d = ParallelPathsDecomposition::new(&g, 0, vec![vec![0, 1, 2], vec![0, 3, 4]]);
        let check = validate_decomposition(&g, &d).unwrap();
        assert_eq!(check.selection_violation, Some(vec![1, 3]));
        assert!(extract_decomposition(&g, 0).unwrap().is_none());
        assert!(find_decomposition_exhaustive(&g, 0).unwrap().is_none());
    }

    #[test]
    fn paths_and_complete_graphs() {
        let p5 = path(5);
        let d = extract_decomposition(&p5, 0).unwrap().unwrap();
        assert_eq!(d.paths, vec![vec![0, 1, 2, 3, 4]]);
        assert!(is_k_parallel_paths_graph(&p5, 1));

        // every vertex of K_4 is a hub of three one-edge paths
        let k4 = complete(4);
        assert_eq!(recognize(&k4), vec![(0, 3), (1, 3), (2, 3), (3, 3)]);
        assert_eq!(recognize_exhaustive(&k4), recognize(&k4));
        assert!(!is_k_parallel_paths_graph(&k4, 2));
    }

    #[test]
    fn chords_are_reported() {
        let k3 = complete(3);
        let d = ParallelPathsDecomposition::new(&k3, 0, vec![vec![0, 1, 2]]);
        let check = validate_decomposition(&k3, &d).unwrap();
        assert_eq!(check.non_induced_paths, vec![0]);
        assert!(!check.is_valid());
    }
}
