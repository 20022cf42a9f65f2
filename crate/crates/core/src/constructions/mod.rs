//! Z-sequences built from total dominating sets, and the structure of
//! graphs with `Γt = 2γ_gr^Z`.
//!
//! Notation: for a TD-set `D` and a `K_2`-component `C_i = {x_i, y_i}` of
//! `G[D]`, `A_i(D)` is the set of vertices with a neighbor in `C_i` and no
//! neighbor in `D \ C_i`.

mod extremal;

pub use extremal::{check_extremal_properties, m_b, x_b_set, ExtremalReport, Property, FULL_SUBSET_SCAN_MAX};

use serde::Serialize;

use crate::domination::{enumerate_gamma_t_sets, is_minimal_td_set, is_total_dominating_set, total_domination_number};
use crate::error::{Error, Result};
use crate::forcing::{is_z_sequence, z_grundy_number, ZSequence};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct K2Component {
    /// The lower-indexed endpoint.
    pub x: usize,
    pub y: usize,
    pub a: VertexSet,
    /// `(N(x) ∩ A) \ {y} == (N(y) ∩ A) \ {x}`.
    pub symmetric: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct K2ComponentAnalysis {
    pub d: VertexSet,
    /// `K_2`-components of `G[D]` ordered by `x`.
    pub k2: Vec<K2Component>,
    /// Components of `G[D]` with at least three vertices.
    pub others: Vec<VertexSet>,
}

impl K2ComponentAnalysis {
    pub fn symmetric_count(&self) -> usize {
        self.k2.iter().filter(|c| c.symmetric).count()
    }

    /// `∪ A_i(D)`.
    pub fn a_union(&self) -> VertexSet {
        self.k2.iter().fold(VertexSet::EMPTY, |acc, c| acc | c.a)
    }
}

fn require_isolate_free(g: &Graph) -> Result<()> {
    match g.first_isolated_vertex() {
        Some(v) => Err(Error::IsolatedVertex(v)),
        None => Ok(()),
    }
}

fn require_no_clique_component(g: &Graph) -> Result<()> {
    require_isolate_free(g)?;
    if g.has_clique_component() {
        return Err(Error::CliqueComponent);
    }
    Ok(())
}

pub fn a_sets(g: &Graph, d: VertexSet) -> Result<K2ComponentAnalysis> {
    g.check_subset(d)?;
    require_isolate_free(g)?;
    if !is_total_dominating_set(g, d) {
        let undominated = (g.vertices() - g.open_nbhd_of_set(d)).min().expect("not dominated");
        return Err(Error::NotTotalDominating { undominated });
    }
    Ok(analyse(g, d))
}

fn analyse(g: &Graph, d: VertexSet) -> K2ComponentAnalysis {
    let mut k2 = Vec::new();
    let mut others = Vec::new();
    for c in g.components_within(d) {
        // a TD-set has no singleton components
        if c.len() != 2 {
            others.push(c);
            continue;
        }
        let x = c.min().expect("two vertices");
        let y = c.max().expect("two vertices");
        let rest = g.open_nbhd_of_set(d - c);
        let a = g.open_nbhd_of_set(c) - rest;
        let symmetric = ((g.neighbors(x) & a).without(y)) == ((g.neighbors(y) & a).without(x));
        k2.push(K2Component { x, y, a, symmetric });
    }
    K2ComponentAnalysis { d, k2, others }
}

/// The `γt`-set minimizing the number of `K_2`-components of `G[D]`, then
/// the number of symmetric ones; least mask among ties. Errors with
/// [`Error::ProofViolation`] if a symmetric component survives.
pub fn optimal_gamma_t_set(g: &Graph) -> Result<VertexSet> {
    Ok(optimal_gamma_t_analysis(g)?.d)
}

fn optimal_gamma_t_analysis(g: &Graph) -> Result<K2ComponentAnalysis> {
    require_no_clique_component(g)?;
    let best = enumerate_gamma_t_sets(g)?
        .into_iter()
        .map(|d| analyse(g, d))
        .min_by_key(|a| (a.k2.len(), a.symmetric_count()))
        .expect("an isolate-free graph has a TD-set");
    if best.symmetric_count() > 0 {
        return Err(Error::ProofViolation(format!(
            "optimal γt-set {} still has {} symmetric K2-components",
            best.d,
            best.symmetric_count()
        )));
    }
    Ok(best)
}

/// Vertices of a component with at least three vertices: neighbors of the
/// component's leaves first, then the rest, each group ascending.
fn component_order(g: &Graph, c: VertexSet) -> Vec<usize> {
    let leaves: VertexSet = c.iter().filter(|&v| g.degree_in(v, c) == 1).collect();
    let first = g.open_nbhd_of_set(leaves) & c;
    first.iter().chain((c - first).iter()).collect()
}

fn proof_checked(g: &Graph, seq: Vec<usize>) -> Result<ZSequence> {
    let check = is_z_sequence(g, &seq)?;
    if let Some(i) = check.first_violation {
        return Err(Error::ProofViolation(format!("constructed sequence {seq:?} fails at entry {i}")));
    }
    ZSequence::new(g, seq)
}

/// A Z-sequence whose vertex set is the optimal `γt`-set chosen by
/// [`optimal_gamma_t_set`]. Asymmetric `K_2`-components contribute `y`
/// then `x`, where `x` has a neighbor in `A` outside `N[y]`.
pub fn z_sequence_from_gamma_t(g: &Graph) -> Result<ZSequence> {
    let analysis = optimal_gamma_t_analysis(g)?;
    let mut seq = Vec::with_capacity(analysis.d.len());
    for &c in &analysis.others {
        seq.extend(component_order(g, c));
    }
    for c in &analysis.k2 {
        let reaches = |u: usize, w: usize| !((g.neighbors(u) - g.closed(w)) & c.a).is_empty();
        let (x, y) = if reaches(c.x, c.y) {
            (c.x, c.y)
        } else if reaches(c.y, c.x) {
            (c.y, c.x)
        } else {
            return Err(Error::ProofViolation(format!("no witness for K2-component {{{},{}}}", c.x, c.y)));
        };
        seq.push(y);
        seq.push(x);
    }
    proof_checked(g, seq)
}

/// A Z-sequence of length at least `⌈|d| / 2⌉` inside a minimal TD-set:
/// every vertex of the larger components and the lower endpoint of each
/// `K_2`-component.
pub fn half_z_sequence_from_minimal_td(g: &Graph, d: VertexSet) -> Result<ZSequence> {
    require_isolate_free(g)?;
    is_minimal_td_set(g, d)?;
    let analysis = analyse(g, d);
    let mut seq = Vec::new();
    for &c in &analysis.others {
        seq.extend(component_order(g, c));
    }
    seq.extend(analysis.k2.iter().map(|c| c.x));
    proof_checked(g, seq)
}

/// Both sides of the characterization of `γt = γ_gr^Z = 2` for connected
/// non-complete graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairCoverReport {
    /// `γt(G) = γ_gr^Z(G) = 2`.
    pub lhs: bool,
    /// `N[x] ∪ N[y] = V(G)` for every pair of non-twin vertices.
    pub rhs: bool,
    /// A non-twin pair whose closed neighborhoods miss a vertex.
    pub failing_pair: Option<(usize, usize)>,
}

impl PairCoverReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn check_pair_cover_characterization(g: &Graph) -> Result<PairCoverReport> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    if g.is_complete() {
        return Err(Error::Precondition("graph must not be complete".into()));
    }
    let gt = total_domination_number(g)?.0;
    let zg = z_grundy_number(g).0;
    let all = g.vertices();
    let failing_pair = (0..g.n())
        .flat_map(|y| (0..y).map(move |x| (x, y)))
        .find(|&(x, y)| !g.twins_unchecked(x, y) && (g.closed(x) | g.closed(y)) != all);
    Ok(PairCoverReport { lhs: gt == 2 && zg == 2, rhs: failing_pair.is_none(), failing_pair })
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

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().collect()
    }

    #[test]
    fn a_sets_examples() {
        let k2 = path(2);
        let a = a_sets(&k2, set(&[0, 1])).unwrap();
        assert_eq!(a.k2.len(), 1);
        assert_eq!(a.k2[0].a, set(&[0, 1]));

        let a = a_sets(&path(4), set(&[1, 2])).unwrap();
        assert_eq!(a.k2[0].a, set(&[0, 1, 2, 3]));
        assert!(!a.k2[0].symmetric);

        assert_eq!(a_sets(&path(4), set(&[1])), Err(Error::NotTotalDominating { undominated: 1 }));
    }

    #[test]
    fn optimal_set_choice() {
        let c5 = cycle(5);
        let d = optimal_gamma_t_set(&c5).unwrap();
        assert_eq!(d.len(), 3);
        assert!(analyse(&c5, d).k2.is_empty());

        let s = star(3);
        let a = analyse(&s, optimal_gamma_t_set(&s).unwrap());
        assert_eq!((a.k2.len(), a.symmetric_count()), (1, 0));

        assert_eq!(optimal_gamma_t_set(&path(2)), Err(Error::CliqueComponent));
    }

    #[test]
    fn sequences_from_gamma_t() {
        let seq = z_sequence_from_gamma_t(&cycle(5)).unwrap();
        assert_eq!(seq.len(), 3);
        assert_eq!(z_sequence_from_gamma_t(&star(3)).unwrap().len(), 2);
        // star: D = {0, 1}; 1 footprints 0, then 0 footprints another leaf
        assert_eq!(z_sequence_from_gamma_t(&star(3)).unwrap().vertices(), &[1, 0]);
    }

    #[test]
    fn half_sequences() {
        assert_eq!(half_z_sequence_from_minimal_td(&path(2), set(&[0, 1])).unwrap().len(), 1);
        assert_eq!(half_z_sequence_from_minimal_td(&cycle(5), set(&[0, 1, 2])).unwrap().len(), 3);
        assert!(matches!(half_z_sequence_from_minimal_td(&star(3), set(&[0, 1, 2])), Err(Error::NotMinimal { .. })));
    }

    #[test]
    fn pair_cover_examples() {
        let r = check_pair_cover_characterization(&cycle(4)).unwrap();
        assert!(r.lhs && r.rhs);
        let r = check_pair_cover_characterization(&cycle(5)).unwrap();
        assert!(!r.lhs && !r.rhs && r.holds());
        let r = check_pair_cover_characterization(&path(4)).unwrap();
        assert!(!r.lhs && !r.rhs);
        assert!(check_pair_cover_characterization(&cycle(3)).is_err());
    }
}
