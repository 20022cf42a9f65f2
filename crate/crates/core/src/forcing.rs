//! Zero forcing and Z-sequences.
//!
//! A Z-sequence `(v_1, .., v_k)` requires `N(v_i) \ (N[v_1] ∪ .. ∪ N[v_{i-1}])`
//! to be non-empty for every `i`, including `i = 1`: the first vertex must
//! have a neighbor. With that convention `Z(G) + γ_gr^Z(G) = n(G)` holds for
//! every graph, edgeless ones included.

use std::collections::HashMap;

use serde::Serialize;

use crate::deadline::Deadline;
use crate::error::{Error, Result};
use crate::graph::{subsets_of_size, Graph, VertexSet};

/// One application of the color-change rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Force {
    pub forcer: usize,
    pub forced: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropagationTrace {
    pub initial: VertexSet,
    pub steps: Vec<Force>,
    #[serde(rename = "final")]
    pub final_set: VertexSet,
}

impl PropagationTrace {
    /// Forced vertices in the order they turned blue.
    pub fn forced_order(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        self.steps.iter().map(|f| f.forced)
    }
}

/// Which eligible forcer acts next when several could.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieBreak {
    Lowest,
    Highest,
}

/// Runs the color-change rule to its fixed point from `blue`, forcing with
/// the lowest-index eligible vertex at every step. Vertices of `blue`
/// outside the graph are dropped.
pub fn forcing_closure(g: &Graph, blue: VertexSet) -> PropagationTrace {
    forcing_closure_by(g, blue, TieBreak::Lowest)
}

pub fn forcing_closure_by(g: &Graph, blue: VertexSet, tie: TieBreak) -> PropagationTrace {
    let initial = blue & g.vertices();
    let mut cur = initial;
    let mut steps = Vec::new();
    loop {
        let pick = |u: usize| (g.neighbors(u) - cur).single().map(|w| Force { forcer: u, forced: w });
        let next = match tie {
            TieBreak::Lowest => cur.iter().find_map(pick),
            TieBreak::Highest => cur.iter().rev().find_map(pick),
        };
        match next {
            Some(f) => {
                cur.insert(f.forced);
                steps.push(f);
            }
            None => break,
        }
    }
    PropagationTrace { initial, steps, final_set: cur }
}

/// Final blue set only; applies every available force per sweep.
pub fn closure_set(g: &Graph, blue: VertexSet) -> VertexSet {
    let mut cur = blue & g.vertices();
    loop {
        let before = cur;
        for u in before.iter() {
            let out = g.neighbors(u) - cur;
            if out.len() == 1 {
                cur |= out;
            }
        }
        if cur == before {
            return cur;
        }
    }
}

pub fn is_zero_forcing_set(g: &Graph, s: VertexSet) -> bool {
    closure_set(g, s) == g.vertices()
}

/// `Z(G)` with the least-mask minimum zero forcing set.
pub fn zero_forcing_number(g: &Graph) -> (usize, VertexSet) {
    zero_forcing_number_within(g, &Deadline::NONE).expect("no deadline")
}

/// Searches sizes upward from `δ(G)`. A proper subset can only start
/// propagating if one of its members has exactly one neighbor outside it,
/// which filters most candidates before the closure runs.
pub fn zero_forcing_number_within(g: &Graph, deadline: &Deadline) -> Result<(usize, VertexSet)> {
    let all = g.vertices();
    let mut tick = 0;
    for k in g.min_degree()..=g.n() {
        for s in subsets_of_size(all, k) {
            deadline.tick(&mut tick)?;
            if s != all && !s.iter().any(|u| (g.neighbors(u) - s).len() == 1) {
                continue;
            }
            if closure_set(g, s) == all {
                return Ok((k, s));
            }
        }
    }
    unreachable!("V(G) is always a zero forcing set")
}

/// A validated Z-sequence together with what each entry footprints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZSequence {
    vertices: Vec<usize>,
    footprints: Vec<VertexSet>,
}

impl ZSequence {
    /// Validates `vertices` as a Z-sequence of `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        let check = is_z_sequence(g, &vertices)?;
        match check.first_violation {
            Some(i) => {
                Err(Error::InvalidArgument(format!("entry {i} (vertex {}) footprints no neighbor", vertices[i])))
            }
            None => Ok(ZSequence { vertices, footprints: check.footprints }),
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// `footprints()[i] = N[v_i] \ ∪_{j<i} N[v_j]`.
    pub fn footprints(&self) -> &[VertexSet] {
        &self.footprints
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The underlying vertex set `Ŝ`.
    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().collect()
    }

    /// Index of the entry that footprints `v`, if any.
    pub fn footprinter_of(&self, v: usize) -> Option<usize> {
        self.footprints.iter().position(|f| f.contains(v))
    }
}

/// Outcome of checking a candidate sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZSequenceCheck {
    pub valid: bool,
    /// Footprint of every entry, computed even past a violation.
    pub footprints: Vec<VertexSet>,
    pub first_violation: Option<usize>,
}

pub fn is_z_sequence(g: &Graph, seq: &[usize]) -> Result<ZSequenceCheck> {
    check_distinct(g, seq)?;
    let mut covered = VertexSet::EMPTY;
    let mut footprints = Vec::with_capacity(seq.len());
    let mut first_violation = None;
    for (i, &v) in seq.iter().enumerate() {
        if first_violation.is_none() && g.neighbors(v).is_subset(covered) {
            first_violation = Some(i);
        }
        footprints.push(g.closed(v) - covered);
        covered |= g.closed(v);
    }
    Ok(ZSequenceCheck { valid: first_violation.is_none(), footprints, first_violation })
}

/// The total variant: `N(v_i) \ ∪_{j<i} N(v_j)` must be non-empty.
pub fn is_total_sequence(g: &Graph, seq: &[usize]) -> Result<bool> {
    check_distinct(g, seq)?;
    let mut covered = VertexSet::EMPTY;
    for &v in seq {
        if g.neighbors(v).is_subset(covered) {
            return Ok(false);
        }
        covered |= g.neighbors(v);
    }
    Ok(true)
}

fn check_distinct(g: &Graph, seq: &[usize]) -> Result<()> {
    let mut seen = VertexSet::EMPTY;
    for &v in seq {
        g.check_vertex(v)?;
        if seen.contains(v) {
            return Err(Error::DuplicateVertex(v));
        }
        seen.insert(v);
    }
    Ok(())
}

/// `γ_gr^Z(G)` with the lexicographically least longest Z-sequence.
pub fn z_grundy_number(g: &Graph) -> (usize, ZSequence) {
    z_grundy_number_within(g, &Deadline::NONE).expect("no deadline")
}

pub fn z_grundy_number_within(g: &Graph, deadline: &Deadline) -> Result<(usize, ZSequence)> {
    let (k, seq) = longest_sequence(g, |v| g.closed(v), deadline)?;
    let footprints = is_z_sequence(g, &seq)?.footprints;
    Ok((k, ZSequence { vertices: seq, footprints }))
}

/// `γ_gr^t(G)` with the lexicographically least longest total sequence.
pub fn grundy_total_number(g: &Graph) -> Result<(usize, Vec<usize>)> {
    grundy_total_number_within(g, &Deadline::NONE)
}

pub fn grundy_total_number_within(g: &Graph, deadline: &Deadline) -> Result<(usize, Vec<usize>)> {
    if let Some(v) = g.first_isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    longest_sequence(g, |v| g.neighbors(v), deadline)
}

/// Longest sequence in which every entry has a neighbor outside the union of
/// `reach(u)` over earlier entries `u`. The union is the whole search state:
/// a used vertex has `N(v) ⊆ reach(v)`, so it can never be picked twice, and
/// a vertex whose neighborhood is already covered stays dead.
fn longest_sequence<F>(g: &Graph, reach: F, deadline: &Deadline) -> Result<(usize, Vec<usize>)>
where
    F: Fn(usize) -> VertexSet,
{
    struct Search<'a, F> {
        g: &'a Graph,
        reach: F,
        memo: HashMap<VertexSet, u8>,
        deadline: &'a Deadline,
        tick: u32,
    }

    impl<F: Fn(usize) -> VertexSet> Search<'_, F> {
        fn best(&mut self, covered: VertexSet) -> Result<u8> {
            if let Some(&b) = self.memo.get(&covered) {
                return Ok(b);
            }
            self.deadline.tick(&mut self.tick)?;
            let mut best = 0;
            for v in 0..self.g.n() {
                if !self.g.neighbors(v).is_subset(covered) {
                    let r = 1 + self.best(covered | (self.reach)(v))?;
                    best = best.max(r);
                }
            }
            self.memo.insert(covered, best);
            Ok(best)
        }
    }

    let mut search = Search { g, reach, memo: HashMap::new(), deadline, tick: 0 };
    let total = search.best(VertexSet::EMPTY)?;

    let mut seq = Vec::with_capacity(total as usize);
    let mut covered = VertexSet::EMPTY;
    let mut remaining = total;
    while remaining > 0 {
        let mut chosen = None;
        for v in 0..g.n() {
            if !g.neighbors(v).is_subset(covered) {
                let next = covered | (search.reach)(v);
                if 1 + search.best(next)? == remaining {
                    chosen = Some((v, next));
                    break;
                }
            }
        }
        let (v, next) = chosen.expect("memoized optimum has a realizing move");
        seq.push(v);
        covered = next;
        remaining -= 1;
    }
    Ok((total as usize, seq))
}

/// Both sides of the Z-sequence / zero forcing complement correspondence
/// for one candidate sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub is_z_sequence: bool,
    pub complement_is_forcing: bool,
    /// When the complement forces, `Ŝ` ordered by reverse forcing time.
    pub reordered: Option<Vec<usize>>,
    pub reordered_is_z_sequence: bool,
}

impl DualityReport {
    /// A Z-sequence always has a forcing complement, and a forcing
    /// complement always yields a Z-sequence on the same vertex set by
    /// reversing the forcing chronology.
    pub fn holds(&self) -> bool {
        (!self.is_z_sequence || self.complement_is_forcing)
            && (self.complement_is_forcing == self.reordered_is_z_sequence)
    }
}

pub fn complement_duality(g: &Graph, seq: &[usize]) -> Result<DualityReport> {
    let is_z = is_z_sequence(g, seq)?.valid;
    let set: VertexSet = seq.iter().collect();
    let trace = forcing_closure(g, g.vertices() - set);
    let forcing = trace.final_set == g.vertices();
    let reordered = forcing.then(|| trace.forced_order().rev().collect::<Vec<_>>());
    let reordered_ok = match &reordered {
        Some(r) => is_z_sequence(g, r)?.valid,
        None => false,
    };
    Ok(DualityReport {
        is_z_sequence: is_z,
        complement_is_forcing: forcing,
        reordered,
        reordered_is_z_sequence: reordered_ok,
    })
}

pub fn complement_duality_check(g: &Graph, seq: &[usize]) -> Result<bool> {
    Ok(complement_duality(g, seq)?.holds())
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

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().collect()
    }

    #[test]
    fn closure_examples() {
        let t = forcing_closure(&path(4), set(&[0]));
        assert_eq!(t.final_set, set(&[0, 1, 2, 3]));
        assert_eq!(t.steps.len(), 3);
        assert_eq!(t.steps[0], Force { forcer: 0, forced: 1 });

        let t = forcing_closure(&cycle(4), set(&[0]));
        assert_eq!(t.final_set, set(&[0]));
        assert!(t.steps.is_empty());

        let t = forcing_closure(&complete(4), set(&[0, 1, 3]));
        assert_eq!(t.final_set, set(&[0, 1, 2, 3]));
        assert_eq!(t.steps.len(), 1);
    }

    #[test]
    fn forcing_sets() {
        assert!(is_zero_forcing_set(&path(7), set(&[0])));
        assert!(is_zero_forcing_set(&cycle(5), set(&[0, 1])));
        assert!(!is_zero_forcing_set(&cycle(5), set(&[0])));
    }

    #[test]
    fn zero_forcing_numbers() {
        assert_eq!(zero_forcing_number(&path(7)).0, 1);
        assert_eq!(zero_forcing_number(&cycle(5)).0, 2);
        assert_eq!(zero_forcing_number(&complete(5)).0, 4);
        assert_eq!(zero_forcing_number(&Graph::empty(3).unwrap()), (3, set(&[0, 1, 2])));
        assert_eq!(zero_forcing_number(&path(7)).1, set(&[0]));
    }

    #[test]
    fn z_sequence_examples() {
        let c5 = cycle(5);
        assert!(is_z_sequence(&c5, &[0, 1, 2]).unwrap().valid);

        let k3 = complete(3);
        let chk = is_z_sequence(&k3, &[0, 1]).unwrap();
        assert!(!chk.valid);
        assert_eq!(chk.first_violation, Some(1));

        // star centre 0, leaves 1,2,3: (a, c) with a = 1
        let s = star(3);
        let chk = is_z_sequence(&s, &[1, 0]).unwrap();
        assert!(chk.valid);
        assert_eq!(chk.footprints, vec![set(&[0, 1]), set(&[2, 3])]);

        assert_eq!(is_z_sequence(&s, &[1, 1]), Err(Error::DuplicateVertex(1)));
        assert_eq!(is_z_sequence(&s, &[9]), Err(Error::VertexOutOfRange { vertex: 9, n: 4 }));
        // isolated first vertex is rejected
        assert!(!is_z_sequence(&Graph::empty(2).unwrap(), &[0]).unwrap().valid);
    }

    #[test]
    fn z_grundy_examples() {
        for l in 2..6 {
            assert_eq!(z_grundy_number(&star(l)).0, 2);
        }
        assert_eq!(z_grundy_number(&cycle(5)).0, 3);
        assert_eq!(z_grundy_number(&Graph::empty(4).unwrap()).0, 0);
        let (k, seq) = z_grundy_number(&path(5));
        assert_eq!(k, 4);
        assert!(ZSequence::new(&path(5), seq.vertices().to_vec()).is_ok());
    }

    #[test]
    fn grundy_total_examples() {
        assert_eq!(grundy_total_number(&complete(2)).unwrap().0, 2);
        assert_eq!(grundy_total_number(&cycle(4)).unwrap().0, 2);
        assert_eq!(grundy_total_number(&path(4)).unwrap().0, 4);
        assert_eq!(grundy_total_number(&Graph::empty(2).unwrap()), Err(Error::IsolatedVertex(0)));
        let (_, seq) = grundy_total_number(&path(4)).unwrap();
        assert!(is_total_sequence(&path(4), &seq).unwrap());
    }

    #[test]
    fn duality_examples() {
        let c5 = cycle(5);
        let r = complement_duality(&c5, &[0, 1, 2]).unwrap();
        assert!(r.is_z_sequence && r.complement_is_forcing && r.holds());

        let r = complement_duality(&complete(3), &[0, 1]).unwrap();
        assert!(!r.is_z_sequence && !r.complement_is_forcing && r.holds());

        let r = complement_duality(&c5, &[]).unwrap();
        assert!(r.is_z_sequence && r.complement_is_forcing && r.holds());

        // Order matters for the sequence but not for the complement: (1, 0)
        // in P_3 is not a Z-sequence, yet {2} forces and (0, 1) is one.
        let r = complement_duality(&path(3), &[1, 0]).unwrap();
        assert!(!r.is_z_sequence && r.complement_is_forcing);
        assert_eq!(r.reordered, Some(vec![0, 1]));
        assert!(r.holds());
    }

    #[test]
    fn deadline_expires() {
        let d = Deadline::after(std::time::Duration::ZERO);
        std::thread::sleep(std::time::Duration::from_millis(1));
        assert_eq!(z_grundy_number_within(&cycle(12), &d).unwrap_err(), Error::Timeout);
        assert_eq!(zero_forcing_number_within(&Graph::empty(12).unwrap(), &d).unwrap_err(), Error::Timeout);
    }
}
