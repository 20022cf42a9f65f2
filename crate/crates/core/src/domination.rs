//! Total domination: TD-sets, private neighborhoods, `γt` and `Γt`.

use serde::Serialize;

use crate::deadline::Deadline;
use crate::error::{Error, Result};
use crate::graph::{subsets_of_size, Graph, VertexSet};

pub fn is_dominating_set(g: &Graph, d: VertexSet) -> bool {
    g.closed_nbhd_of_set(d & g.vertices()) == g.vertices()
}

/// Every vertex has a neighbor in `d`.
pub fn is_total_dominating_set(g: &Graph, d: VertexSet) -> bool {
    g.open_nbhd_of_set(d & g.vertices()) == g.vertices()
}

fn first_undominated(g: &Graph, d: VertexSet) -> Option<usize> {
    (g.vertices() - g.open_nbhd_of_set(d)).min()
}

/// `pn(v, D)` split into external and internal parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrivateNeighbors {
    pub pn: VertexSet,
    pub epn: VertexSet,
    pub ipn: VertexSet,
}

/// `pn(v, D) = {w : N(w) ∩ D = {v}}`, `epn = pn \ D`, `ipn = pn ∩ D`.
pub fn private_neighborhoods(g: &Graph, d: VertexSet, v: usize) -> Result<PrivateNeighbors> {
    g.check_subset(d)?;
    if !d.contains(v) {
        return Err(Error::NotInSet(v));
    }
    let pn = private_unchecked(g, d, v);
    Ok(PrivateNeighbors { pn, epn: pn - d, ipn: pn & d })
}

#[inline]
fn private_unchecked(g: &Graph, d: VertexSet, v: usize) -> VertexSet {
    // N(w) ∩ D = {v} means w ∈ N(v) and w ∉ N(D \ {v})
    g.neighbors(v) - g.open_nbhd_of_set(d.without(v))
}

/// A minimal TD-set with one private-neighbor witness per member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TDCertificate {
    pub set: VertexSet,
    pub witnesses: Vec<(usize, PrivateNeighbors)>,
}

/// Certifies `d` as a minimal TD-set. A TD-set is minimal iff every member
/// has a non-empty open private neighborhood.
pub fn is_minimal_td_set(g: &Graph, d: VertexSet) -> Result<TDCertificate> {
    g.check_subset(d)?;
    if let Some(w) = first_undominated(g, d) {
        return Err(Error::NotTotalDominating { undominated: w });
    }
    let mut witnesses = Vec::with_capacity(d.len());
    for v in d.iter() {
        let p = private_neighborhoods(g, d, v)?;
        if p.pn.is_empty() {
            return Err(Error::NotMinimal { vertex: v });
        }
        witnesses.push((v, p));
    }
    Ok(TDCertificate { set: d, witnesses })
}

fn require_isolate_free(g: &Graph) -> Result<()> {
    match g.first_isolated_vertex() {
        Some(v) => Err(Error::IsolatedVertex(v)),
        None => Ok(()),
    }
}

/// Picks, while some vertex is undominated, the vertex dominating the most
/// undominated vertices (lowest index on ties).
pub fn greedy_td_set(g: &Graph) -> Result<VertexSet> {
    require_isolate_free(g)?;
    let mut d = VertexSet::EMPTY;
    let mut undominated = g.vertices();
    while !undominated.is_empty() {
        let v = (0..g.n())
            .max_by_key(|&v| ((g.neighbors(v) & undominated).len(), std::cmp::Reverse(v)))
            .expect("non-empty graph");
        d.insert(v);
        undominated -= g.neighbors(v);
    }
    Ok(d)
}

/// `γt(G)` with the least-mask minimum TD-set.
pub fn total_domination_number(g: &Graph) -> Result<(usize, VertexSet)> {
    total_domination_number_within(g, &Deadline::NONE)
}

/// Ascending-size subset search capped by the greedy bound.
pub fn total_domination_number_within(g: &Graph, deadline: &Deadline) -> Result<(usize, VertexSet)> {
    let upper = greedy_td_set(g)?.len();
    let mut tick = 0;
    for k in 0..=upper {
        for s in subsets_of_size(g.vertices(), k) {
            deadline.tick(&mut tick)?;
            if is_total_dominating_set(g, s) {
                return Ok((k, s));
            }
        }
    }
    unreachable!("the greedy set has size {upper}")
}

/// `Γt(G)` with the least-mask maximum minimal TD-set.
pub fn upper_total_domination_number(g: &Graph) -> Result<(usize, VertexSet)> {
    upper_total_domination_number_within(g, &Deadline::NONE)
}

pub fn upper_total_domination_number_within(g: &Graph, deadline: &Deadline) -> Result<(usize, VertexSet)> {
    let mut best: Option<VertexSet> = None;
    visit_minimal_td_sets(g, deadline, &mut |d| {
        if best.is_none_or(|b| d.len() > b.len() || (d.len() == b.len() && d < b)) {
            best = Some(d);
        }
    })?;
    let b = best.expect("V(G) contains a minimal TD-set");
    Ok((b.len(), b))
}

/// All minimum TD-sets in ascending mask order.
pub fn enumerate_gamma_t_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    let (k, _) = total_domination_number(g)?;
    Ok(subsets_of_size(g.vertices(), k).filter(|&s| is_total_dominating_set(g, s)).collect())
}

/// All minimal TD-sets in ascending mask order.
pub fn enumerate_minimal_td_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    enumerate_minimal_td_sets_within(g, &Deadline::NONE)
}

pub fn enumerate_minimal_td_sets_within(g: &Graph, deadline: &Deadline) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    visit_minimal_td_sets(g, deadline, &mut |d| out.push(d))?;
    out.sort_unstable();
    Ok(out)
}

/// Include/exclude search over vertices in index order. Two cuts:
/// a member whose private neighborhood is already empty stays that way
/// (private neighborhoods only shrink as the set grows), and a vertex with
/// no neighbor among chosen or undecided vertices can never be dominated.
fn visit_minimal_td_sets(g: &Graph, deadline: &Deadline, visit: &mut dyn FnMut(VertexSet)) -> Result<()> {
    require_isolate_free(g)?;

    struct Walk<'a> {
        g: &'a Graph,
        deadline: &'a Deadline,
        tick: u32,
        visit: &'a mut dyn FnMut(VertexSet),
    }

    impl Walk<'_> {
        fn go(&mut self, i: usize, d: VertexSet) -> Result<()> {
            self.deadline.tick(&mut self.tick)?;
            let g = self.g;
            let undecided = g.vertices() - VertexSet::full(i);
            let reachable = g.open_nbhd_of_set(d | undecided);
            if reachable != g.vertices() {
                return Ok(());
            }
            if d.iter().any(|v| private_unchecked(g, d, v).is_empty()) {
                return Ok(());
            }
            if i == g.n() {
                (self.visit)(d);
                return Ok(());
            }
            self.go(i + 1, d.with(i))?;
            self.go(i + 1, d)
        }
    }

    Walk { g, deadline, tick: 0, visit }.go(0, VertexSet::EMPTY)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|v| (0..v).map(move |u| (u, v)))).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().collect()
    }

    #[test]
    fn domination_predicates() {
        let s = star(3);
        assert!(is_dominating_set(&s, set(&[0])));
        assert!(!is_total_dominating_set(&s, set(&[0])));
        assert!(is_total_dominating_set(&s, set(&[0, 1])));
        assert!(!is_total_dominating_set(&cycle(5), set(&[0, 1])));
    }

    #[test]
    fn private_neighbor_examples() {
        let k2 = complete(2);
        let p = private_neighborhoods(&k2, set(&[0, 1]), 0).unwrap();
        assert_eq!(p.ipn, set(&[1]));
        assert!(p.epn.is_empty());

        let s = star(3);
        let p = private_neighborhoods(&s, set(&[0, 1]), 0).unwrap();
        assert_eq!(p.epn, set(&[2, 3]));
        assert_eq!(p.ipn, set(&[1]));

        // K_4, D = {0,1}: N(1) ∩ D = {0}, N(2) ∩ D = {0,1}
        let p = private_neighborhoods(&complete(4), set(&[0, 1]), 0).unwrap();
        assert_eq!(p.pn, set(&[1]));
        assert_eq!(p.ipn, set(&[1]));

        assert_eq!(private_neighborhoods(&s, set(&[0, 1]), 2), Err(Error::NotInSet(2)));
    }

    #[test]
    fn minimality() {
        assert!(is_minimal_td_set(&complete(2), set(&[0, 1])).is_ok());
        assert!(is_minimal_td_set(&star(3), set(&[0, 1])).is_ok());
        // C_5, {0,1,2}: pn(0) = {4}, pn(1) = {0,2}, pn(2) = {3}
        let c5 = cycle(5);
        let cert = is_minimal_td_set(&c5, set(&[0, 1, 2])).unwrap();
        assert_eq!(cert.witnesses.len(), 3);
        assert_eq!(is_minimal_td_set(&star(3), set(&[0, 1, 2])), Err(Error::NotMinimal { vertex: 1 }));
        assert_eq!(is_minimal_td_set(&c5, set(&[0, 1])), Err(Error::NotTotalDominating { undominated: 3 }));
    }

    #[test]
    fn numbers() {
        assert_eq!(total_domination_number(&cycle(5)).unwrap().0, 3);
        assert_eq!(total_domination_number(&star(4)).unwrap(), (2, set(&[0, 1])));
        assert_eq!(upper_total_domination_number(&cycle(5)).unwrap().0, 3);
        assert_eq!(total_domination_number(&Graph::empty(2).unwrap()), Err(Error::IsolatedVertex(0)));
        assert_eq!(upper_total_domination_number(&Graph::empty(1).unwrap()), Err(Error::IsolatedVertex(0)));
    }

    #[test]
    fn enumerations() {
        let k2 = complete(2);
        assert_eq!(enumerate_gamma_t_sets(&k2).unwrap(), vec![set(&[0, 1])]);
        assert_eq!(enumerate_minimal_td_sets(&k2).unwrap(), vec![set(&[0, 1])]);

        let c4 = cycle(4);
        assert_eq!(enumerate_gamma_t_sets(&c4).unwrap(), vec![set(&[0, 1]), set(&[1, 2]), set(&[0, 3]), set(&[2, 3])]);
        assert_eq!(enumerate_gamma_t_sets(&star(3)).unwrap(), vec![set(&[0, 1]), set(&[0, 2]), set(&[0, 3])]);
    }
}
