use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{analyse, K2ComponentAnalysis};
use crate::domination::{is_minimal_td_set, upper_total_domination_number};
use crate::error::{Error, Result};
use crate::forcing::z_grundy_number;
use crate::graph::{subsets, Graph, VertexSet};

/// Largest `|V(H)|` for which property (viii) is checked on every subset.
/// Beyond it a fixed-seed sample of `SAMPLE_SIZE` subsets is used.
pub const FULL_SUBSET_SCAN_MAX: usize = 15;
const SAMPLE_SIZE: usize = 1 << 15;
const SAMPLE_SEED: u64 = 0x5eed_0049;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Property {
    pub holds: bool,
    pub counterexample: Option<Vec<usize>>,
}

impl Property {
    fn from_counterexample(c: Option<Vec<usize>>) -> Self {
        Property { holds: c.is_none(), counterexample: c }
    }
}

/// Structure of a graph with `Γt = 2γ_gr^Z = 2ℓ` around one `Γt`-set.
/// `H` is `G` minus all `A_i(D)`; `u ~ A_i` means `u` is adjacent to every
/// vertex of `A_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub d: VertexSet,
    pub h: VertexSet,
    /// (i) counterexample: a component of `G[D]` that is not `K_2`.
    pub components_are_k2: Property,
    /// (ii) `N[x_i] ∩ A_i = N[y_i] ∩ A_i`; counterexample: `[x_i, y_i]`.
    pub closed_nbhds_agree: Property,
    /// (iii) counterexample: a non-adjacent pair inside some `A_i`.
    pub a_sets_are_cliques: Property,
    /// (iv) counterexample: an edge between different `A_i`, `A_j`.
    pub no_edges_between_a_sets: Property,
    /// (v) counterexample: a pair in some `A_i` that are not closed twins.
    pub a_sets_are_closed_twins: Property,
    /// (vi) counterexample: adjacent `u, v` in `H` with no common `A_i`.
    pub adjacent_share_a_set: Property,
    /// (vii) counterexample: non-adjacent `u, v` in `H` with exactly one.
    pub non_adjacent_share_not_one: Property,
    /// (viii) `γ_gr^Z(G[B \ B']) + m_{B'}(D) <= |X_B(D)|` with `B'` the
    /// isolated vertices of `G[B]`; counterexample: `B`.
    pub subset_bound: Property,
    /// Whether (viii) was checked on every `B ⊆ V(H)`.
    pub subset_scan_exhaustive: bool,
    pub subsets_checked: usize,
}

impl ExtremalReport {
    pub fn all_hold(&self) -> bool {
        [
            &self.components_are_k2,
            &self.closed_nbhds_agree,
            &self.a_sets_are_cliques,
            &self.no_edges_between_a_sets,
            &self.a_sets_are_closed_twins,
            &self.adjacent_share_a_set,
            &self.non_adjacent_share_not_one,
            &self.subset_bound,
        ]
        .iter()
        .all(|p| p.holds)
    }
}

fn h_of(g: &Graph, analysis: &K2ComponentAnalysis) -> VertexSet {
    g.vertices() - analysis.a_union()
}

fn attached(g: &Graph, u: usize, a: VertexSet) -> bool {
    a.is_subset(g.neighbors(u))
}

fn x_b_mask(g: &Graph, analysis: &K2ComponentAnalysis, b: VertexSet) -> u64 {
    analysis
        .k2
        .iter()
        .enumerate()
        .filter(|(_, c)| b.iter().any(|u| attached(g, u, c.a)))
        .fold(0, |acc, (i, _)| acc | 1 << i)
}

fn check_b(g: &Graph, analysis: &K2ComponentAnalysis, b: VertexSet) -> Result<()> {
    g.check_subset(b)?;
    if !b.is_subset(h_of(g, analysis)) {
        return Err(Error::InvalidArgument(format!("{b} is not inside V(H)")));
    }
    Ok(())
}

/// Indices `i` (into `analysis.k2`) with `u ~ A_i` for some `u ∈ B`.
pub fn x_b_set(g: &Graph, analysis: &K2ComponentAnalysis, b: VertexSet) -> Result<Vec<usize>> {
    check_b(g, analysis, b)?;
    let mask = x_b_mask(g, analysis, b);
    Ok((0..analysis.k2.len()).filter(|i| mask >> i & 1 == 1).collect())
}

/// Largest inclusion-minimal `X ⊆ X_B` with `B ⊆ ∪_{i ∈ X} N(x_i)`; 0 when
/// no such `X` exists.
pub fn m_b(g: &Graph, analysis: &K2ComponentAnalysis, b: VertexSet) -> Result<usize> {
    check_b(g, analysis, b)?;
    Ok(m_b_unchecked(g, analysis, b))
}

fn m_b_unchecked(g: &Graph, analysis: &K2ComponentAnalysis, b: VertexSet) -> usize {
    if b.is_empty() {
        return 0;
    }
    let xb = VertexSet::from_bits(x_b_mask(g, analysis, b));
    let covers = |x: VertexSet| {
        let reach = x.iter().fold(VertexSet::EMPTY, |acc, i| acc | g.neighbors(analysis.k2[i].x));
        b.is_subset(reach)
    };
    // covering is monotone, so dropping any single index is enough to test minimality
    subsets(xb).filter(|&x| covers(x) && x.iter().all(|i| !covers(x.without(i)))).map(|x| x.len()).max().unwrap_or(0)
}

fn subset_bound_fails(g: &Graph, analysis: &K2ComponentAnalysis, b: VertexSet) -> bool {
    let isolated: VertexSet = b.iter().filter(|&u| g.degree_in(u, b) == 0).collect();
    let core = b - isolated;
    let zg = if core.is_empty() { 0 } else { z_grundy_number(&g.induced_unchecked(core).0).0 };
    let xb = x_b_mask(g, analysis, b).count_ones() as usize;
    zg + m_b_unchecked(g, analysis, isolated) > xb
}

fn pairs(s: VertexSet) -> impl Iterator<Item = (usize, usize)> {
    s.iter().flat_map(move |v| s.iter().filter(move |&u| u < v).map(move |u| (u, v)))
}

/// Evaluates all eight structural properties for a `Γt`-set `d`. Errors
/// with [`Error::Precondition`] unless `Γt(G) = 2γ_gr^Z(G)` and `d` is a
/// minimal TD-set of size `Γt(G)`.
pub fn check_extremal_properties(g: &Graph, d: VertexSet) -> Result<ExtremalReport> {
    let (upper, _) = upper_total_domination_number(g)?;
    let (zg, _) = z_grundy_number(g);
    if upper != 2 * zg {
        return Err(Error::Precondition(format!("Γt = {upper} but γ_gr^Z = {zg}")));
    }
    is_minimal_td_set(g, d)?;
    if d.len() != upper {
        return Err(Error::Precondition(format!("|D| = {} but Γt = {upper}", d.len())));
    }
    let analysis = analyse(g, d);
    let k2 = &analysis.k2;
    let h = h_of(g, &analysis);

    let components_are_k2 = Property::from_counterexample(analysis.others.first().map(|c| c.to_vec()));

    let closed_nbhds_agree = Property::from_counterexample(
        k2.iter().find(|c| g.closed(c.x) & c.a != g.closed(c.y) & c.a).map(|c| vec![c.x, c.y]),
    );

    let a_sets_are_cliques = Property::from_counterexample(
        k2.iter().find_map(|c| pairs(c.a).find(|&(u, v)| !g.has_edge(u, v))).map(|(u, v)| vec![u, v]),
    );

    let no_edges_between_a_sets = Property::from_counterexample(k2.iter().enumerate().find_map(|(i, ci)| {
        k2[i + 1..].iter().find_map(|cj| ci.a.iter().find_map(|u| (g.neighbors(u) & cj.a).min().map(|v| vec![u, v])))
    }));

    let a_sets_are_closed_twins = Property::from_counterexample(
        k2.iter().find_map(|c| pairs(c.a).find(|&(u, v)| g.closed(u) != g.closed(v))).map(|(u, v)| vec![u, v]),
    );

    let shared = |u: usize, v: usize| k2.iter().filter(|c| attached(g, u, c.a) && attached(g, v, c.a)).count();
    let adjacent_share_a_set = Property::from_counterexample(
        pairs(h).find(|&(u, v)| g.has_edge(u, v) && shared(u, v) == 0).map(|(u, v)| vec![u, v]),
    );
    let non_adjacent_share_not_one = Property::from_counterexample(
        pairs(h).find(|&(u, v)| !g.has_edge(u, v) && shared(u, v) == 1).map(|(u, v)| vec![u, v]),
    );

    let exhaustive = h.len() <= FULL_SUBSET_SCAN_MAX;
    let (failure, checked) = if exhaustive {
        let mut checked = 0;
        let failure = subsets(h).find(|&b| {
            checked += 1;
            subset_bound_fails(g, &analysis, b)
        });
        (failure, checked)
    } else {
        let members = h.to_vec();
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        let mut checked = 0;
        let failure = std::iter::repeat_with(|| members.iter().filter(|_| rng.gen_bool(0.5)).collect::<VertexSet>())
            .take(SAMPLE_SIZE)
            .find(|&b| {
                checked += 1;
                subset_bound_fails(g, &analysis, b)
            });
        (failure, checked)
    };

    Ok(ExtremalReport {
        d,
        h,
        components_are_k2,
        closed_nbhds_agree,
        a_sets_are_cliques,
        no_edges_between_a_sets,
        a_sets_are_closed_twins,
        adjacent_share_a_set,
        non_adjacent_share_not_one,
        subset_bound: Property::from_counterexample(failure.map(|b| b.to_vec())),
        subset_scan_exhaustive: exhaustive,
        subsets_checked: checked,
    })
}
