use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::constructions::{
    check_extremal_properties, check_pair_cover_characterization, half_z_sequence_from_minimal_td,
    z_sequence_from_gamma_t,
};
use crate::deadline::Deadline;
use crate::domination::{
    enumerate_minimal_td_sets_within, is_total_dominating_set, total_domination_number_within,
    upper_total_domination_number_within,
};
use crate::error::{Error, Result};
use crate::forcing::{
    complement_duality, forcing_closure, grundy_total_number_within, is_z_sequence, z_grundy_number_within,
    zero_forcing_number_within, ZSequence,
};
use crate::graph::{Graph, VertexSet};
use crate::powerdom::{
    extract_decomposition, find_decomposition_exhaustive, is_outerplanar_small, is_power_dominating_set,
    power_domination_number_within, validate_decomposition, z_equals_delta, MAX_OUTERPLANAR_N,
};

/// The relations verified per graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// `Z + γ_gr^Z = n`, and complements of Z-sequences force (and back).
    Duality,
    /// `Z >= δ`.
    ZLowerBound,
    /// `γ_gr^Z >= γt` without clique components, with a Z-sequence built
    /// on a `γt`-set.
    GammatBound,
    /// `Γt <= 2γ_gr^Z`, with a half-length Z-sequence inside every minimal
    /// TD-set.
    UpperBound,
    /// `γt <= Γt`, `γt <= γ_gr^Z <= γ_gr^t`.
    Chain,
    /// `γt = γ_gr^Z = 2` iff closed neighborhoods of non-twins cover `V`.
    PairCover,
    /// No connected graph with a simplicial vertex has `γt = γ_gr^Z = 3`.
    SimplicialThree,
    /// Deleting a simplicial vertex lowers `γ_gr^Z` and `γt` by at most one
    /// and never raises them.
    SimplicialDeletion,
    /// `Z = δ` iff some `{x}` with `deg x = δ` power dominates.
    ZDeltaHub,
    /// `{x}` power dominates iff `x` is the hub of a valid parallel-paths
    /// decomposition; `γP = 1` iff some hub exists.
    ParallelPaths,
    /// `Z = δ` iff the graph has a parallel-paths decomposition with `δ`
    /// paths.
    ZDeltaPaths,
    /// With `δ = 2`: `Z = 2` iff 2-connected and outerplanar.
    OuterplanarDelta2,
    /// `γP <= Z`.
    PowerdomLeZ,
    /// Structure of every `Γt`-set when `Γt = 2γ_gr^Z`.
    ExtremalStructure,
}

impl Check {
    pub const ALL: [Check; 14] = [
        Check::Duality,
        Check::ZLowerBound,
        Check::GammatBound,
        Check::UpperBound,
        Check::Chain,
        Check::PairCover,
        Check::SimplicialThree,
        Check::SimplicialDeletion,
        Check::ZDeltaHub,
        Check::ParallelPaths,
        Check::ZDeltaPaths,
        Check::OuterplanarDelta2,
        Check::PowerdomLeZ,
        Check::ExtremalStructure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Duality => "duality",
            Check::ZLowerBound => "z-lower-bound",
            Check::GammatBound => "gammat-bound",
            Check::UpperBound => "upper-bound",
            Check::Chain => "chain",
            Check::PairCover => "pair-cover",
            Check::SimplicialThree => "simplicial-three",
            Check::SimplicialDeletion => "simplicial-deletion",
            Check::ZDeltaHub => "z-delta-hub",
            Check::ParallelPaths => "parallel-paths",
            Check::ZDeltaPaths => "z-delta-paths",
            Check::OuterplanarDelta2 => "outerplanar-delta2",
            Check::PowerdomLeZ => "powerdom-le-z",
            Check::ExtremalStructure => "extremal-structure",
        }
    }

    /// Parses `all` or a comma-separated list of check names.
    pub fn parse_list(s: &str) -> Result<Vec<Check>> {
        if s.trim() == "all" {
            return Ok(Check::ALL.to_vec());
        }
        let mut out: Vec<Check> = s.split(',').map(|p| p.trim().parse()).collect::<Result<_>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| {
            let names: Vec<_> = Check::ALL.iter().map(|c| c.name()).collect();
            Error::InvalidArgument(format!("unknown check {s:?}; expected all or one of {}", names.join(", ")))
        })
    }
}

impl Serialize for Check {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Verdict {
    #[serde(rename = "holds")]
    Holds,
    #[serde(rename = "precondition-not-met")]
    PreconditionNotMet,
    #[serde(rename = "VIOLATION")]
    Violation,
    #[serde(rename = "timeout")]
    Timeout,
    #[serde(rename = "skipped")]
    Skipped,
}

impl Verdict {
    pub const ALL: [Verdict; 5] =
        [Verdict::Holds, Verdict::PreconditionNotMet, Verdict::Violation, Verdict::Timeout, Verdict::Skipped];

    pub fn name(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::PreconditionNotMet => "precondition-not-met",
            Verdict::Violation => "VIOLATION",
            Verdict::Timeout => "timeout",
            Verdict::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Outcome {
    fn new(verdict: Verdict, detail: Option<String>) -> Self {
        Outcome { verdict, detail }
    }

    fn precondition(why: &str) -> Self {
        Outcome::new(Verdict::PreconditionNotMet, Some(why.to_string()))
    }

    fn verify(ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Outcome::new(Verdict::Holds, None)
        } else {
            Outcome::new(Verdict::Violation, Some(detail()))
        }
    }

    pub(crate) fn from_error(e: Error) -> Self {
        match e {
            Error::Timeout => Outcome::new(Verdict::Timeout, None),
            Error::ProofViolation(msg) => Outcome::new(Verdict::Violation, Some(msg)),
            Error::TooLarge { .. } => Outcome::new(Verdict::Skipped, Some(e.to_string())),
            other => Outcome::new(Verdict::Violation, Some(format!("unexpected error: {other}"))),
        }
    }
}

/// Exact invariants of one graph; total-domination values are `None` when
/// the graph has an isolated vertex.
#[derive(Clone, Debug)]
pub struct Values {
    pub z: usize,
    pub z_set: VertexSet,
    pub zgrundy: usize,
    pub zgrundy_seq: ZSequence,
    pub grundy_total: Option<usize>,
    pub gammat: Option<usize>,
    pub gammat_upper: Option<(usize, VertexSet)>,
    pub powerdom: usize,
}

impl Values {
    pub fn compute(g: &Graph, deadline: &Deadline) -> Result<Values> {
        let (z, z_set) = zero_forcing_number_within(g, deadline)?;
        let (zgrundy, zgrundy_seq) = z_grundy_number_within(g, deadline)?;
        let isolate_free = g.is_isolate_free();
        let (grundy_total, gammat, gammat_upper) = if isolate_free {
            (
                Some(grundy_total_number_within(g, deadline)?.0),
                Some(total_domination_number_within(g, deadline)?.0),
                Some(upper_total_domination_number_within(g, deadline)?),
            )
        } else {
            (None, None, None)
        };
        let powerdom = power_domination_number_within(g, deadline)?.0;
        Ok(Values { z, z_set, zgrundy, zgrundy_seq, grundy_total, gammat, gammat_upper, powerdom })
    }
}

pub(crate) fn run_check(check: Check, g: &Graph, v: &Values, deadline: &Deadline) -> Outcome {
    let result = match check {
        Check::Duality => duality(g, v),
        Check::ZLowerBound => {
            Ok(Outcome::verify(v.z >= g.min_degree(), || format!("Z = {} < δ = {}", v.z, g.min_degree())))
        }
        Check::GammatBound => gammat_bound(g, v),
        Check::UpperBound => upper_bound(g, v, deadline),
        Check::Chain => Ok(chain(g, v)),
        Check::PairCover => pair_cover(g),
        Check::SimplicialThree => Ok(simplicial_three(g, v)),
        Check::SimplicialDeletion => simplicial_deletion(g, v, deadline),
        Check::ZDeltaHub => Ok(z_delta_hub(g, v)),
        Check::ParallelPaths => parallel_paths(g, v),
        Check::ZDeltaPaths => z_delta_paths(g, v),
        Check::OuterplanarDelta2 => outerplanar_delta2(g, v),
        Check::PowerdomLeZ => Ok(Outcome::verify(v.powerdom <= v.z, || format!("γP = {} > Z = {}", v.powerdom, v.z))),
        Check::ExtremalStructure => extremal_structure(g, v, deadline),
    };
    result.unwrap_or_else(Outcome::from_error)
}

fn duality(g: &Graph, v: &Values) -> Result<Outcome> {
    let n = g.n();
    if v.z + v.zgrundy != n {
        return Ok(Outcome::verify(false, || format!("Z + γ_gr^Z = {} + {} != {n}", v.z, v.zgrundy)));
    }
    let report = complement_duality(g, v.zgrundy_seq.vertices())?;
    if !report.holds() || !report.complement_is_forcing {
        return Ok(Outcome::verify(false, || format!("sequence {:?}: {report:?}", v.zgrundy_seq.vertices())));
    }
    // the reverse direction, from a minimum zero forcing set
    let order: Vec<usize> = forcing_closure(g, v.z_set).forced_order().rev().collect();
    let ok = order.len() == n - v.z && is_z_sequence(g, &order)?.valid;
    Ok(Outcome::verify(ok, || format!("reversed forcing order {order:?} of {} is not a Z-sequence", v.z_set)))
}

fn gammat_bound(g: &Graph, v: &Values) -> Result<Outcome> {
    if g.n() == 0 || g.has_clique_component() {
        return Ok(Outcome::precondition("clique component"));
    }
    let gt = v.gammat.expect("no clique component implies isolate-free");
    if v.zgrundy < gt {
        return Ok(Outcome::verify(false, || format!("γ_gr^Z = {} < γt = {gt}", v.zgrundy)));
    }
    let seq = z_sequence_from_gamma_t(g)?;
    let d = seq.vertex_set();
    let ok = seq.len() == gt && is_total_dominating_set(g, d);
    Ok(Outcome::verify(ok, || format!("constructed sequence {:?} does not span a γt-set", seq.vertices())))
}

fn upper_bound(g: &Graph, v: &Values, deadline: &Deadline) -> Result<Outcome> {
    let Some((upper, _)) = v.gammat_upper else {
        return Ok(Outcome::precondition("isolated vertex"));
    };
    if upper > 2 * v.zgrundy {
        return Ok(Outcome::verify(false, || format!("Γt = {upper} > 2 γ_gr^Z = {}", 2 * v.zgrundy)));
    }
    for d in enumerate_minimal_td_sets_within(g, deadline)? {
        let seq = half_z_sequence_from_minimal_td(g, d)?;
        if 2 * seq.len() < d.len() {
            return Ok(Outcome::verify(false, || format!("only {} entries from minimal TD-set {d}", seq.len())));
        }
    }
    Ok(Outcome::verify(true, String::new))
}

fn chain(g: &Graph, v: &Values) -> Outcome {
    let (Some(gt), Some((upper, _)), Some(gtot)) = (v.gammat, v.gammat_upper, v.grundy_total) else {
        return Outcome::precondition("isolated vertex");
    };
    let mut broken = Vec::new();
    if gt > upper {
        broken.push(format!("γt = {gt} > Γt = {upper}"));
    }
    if v.zgrundy > gtot {
        broken.push(format!("γ_gr^Z = {} > γ_gr^t = {gtot}", v.zgrundy));
    }
    if !g.has_clique_component() && gt > v.zgrundy {
        broken.push(format!("γt = {gt} > γ_gr^Z = {}", v.zgrundy));
    }
    Outcome::verify(broken.is_empty(), || broken.join("; "))
}

fn pair_cover(g: &Graph) -> Result<Outcome> {
    if g.n() < 2 || !g.is_connected() || g.is_complete() {
        return Ok(Outcome::precondition("needs a connected non-complete graph"));
    }
    let r = check_pair_cover_characterization(g)?;
    Ok(Outcome::verify(r.holds(), || format!("{r:?}")))
}

fn connected_with_simplicial(g: &Graph) -> bool {
    g.n() >= 2 && g.is_connected() && !g.simplicial_vertices().is_empty()
}

fn simplicial_three(g: &Graph, v: &Values) -> Outcome {
    if !connected_with_simplicial(g) {
        return Outcome::precondition("needs a connected graph with a simplicial vertex");
    }
    let gt = v.gammat.expect("connected with n >= 2");
    Outcome::verify(!(gt == 3 && v.zgrundy == 3), || "γt = γ_gr^Z = 3".into())
}

fn simplicial_deletion(g: &Graph, v: &Values, deadline: &Deadline) -> Result<Outcome> {
    let Some(gt) = v.gammat else {
        return Ok(Outcome::precondition("isolated vertex"));
    };
    let mut tested = 0;
    for u in g.simplicial_vertices().iter() {
        let (h, _) = g.remove_vertex(u)?;
        if h.n() == 0 || !h.is_isolate_free() {
            continue;
        }
        tested += 1;
        let zg = z_grundy_number_within(&h, deadline)?.0;
        let ht = total_domination_number_within(&h, deadline)?.0;
        let within = |full: usize, less: usize| less <= full && less + 1 >= full;
        if !within(v.zgrundy, zg) || !within(gt, ht) {
            return Ok(Outcome::verify(false, || {
                format!("deleting {u}: γ_gr^Z {} -> {zg}, γt {gt} -> {ht}", v.zgrundy)
            }));
        }
    }
    if tested == 0 {
        return Ok(Outcome::precondition("no simplicial vertex whose deletion leaves an isolate-free graph"));
    }
    Ok(Outcome::verify(true, String::new))
}

fn z_delta_hub(g: &Graph, v: &Values) -> Outcome {
    if g.n() < 2 {
        return Outcome::precondition("needs at least two vertices");
    }
    let delta = g.min_degree();
    let hub = z_equals_delta(g);
    Outcome::verify((v.z == delta) == hub.is_some(), || format!("Z = {}, δ = {delta}, hub = {hub:?}", v.z))
}

fn parallel_paths(g: &Graph, v: &Values) -> Result<Outcome> {
    if g.n() == 0 {
        return Ok(Outcome::precondition("empty graph"));
    }
    let mut any = false;
    for x in 0..g.n() {
        let dominates = is_power_dominating_set(g, VertexSet::singleton(x));
        let extracted = match extract_decomposition(g, x)? {
            Some(d) => validate_decomposition(g, &d)?.is_valid(),
            None => false,
        };
        let searched = find_decomposition_exhaustive(g, x)?.is_some();
        if dominates != extracted || dominates != searched {
            return Ok(Outcome::verify(false, || {
                format!("hub {x}: power dominates {dominates}, extracted {extracted}, searched {searched}")
            }));
        }
        any |= dominates;
    }
    Ok(Outcome::verify((v.powerdom == 1) == any, || format!("γP = {} but hub found = {any}", v.powerdom)))
}

fn z_delta_paths(g: &Graph, v: &Values) -> Result<Outcome> {
    if g.n() < 2 {
        return Ok(Outcome::precondition("needs at least two vertices"));
    }
    let delta = g.min_degree();
    let mut found = None;
    for x in (0..g.n()).filter(|&x| g.degree(x) == delta) {
        if find_decomposition_exhaustive(g, x)?.is_some() {
            found = Some(x);
            break;
        }
    }
    Ok(Outcome::verify((v.z == delta) == found.is_some(), || {
        format!("Z = {}, δ = {delta}, decomposition hub = {found:?}", v.z)
    }))
}

fn outerplanar_delta2(g: &Graph, v: &Values) -> Result<Outcome> {
    if g.min_degree() != 2 {
        return Ok(Outcome::precondition("δ != 2"));
    }
    if g.n() > MAX_OUTERPLANAR_N {
        return Err(Error::TooLarge { n: g.n(), max: MAX_OUTERPLANAR_N });
    }
    let rhs = g.is_two_connected() && is_outerplanar_small(g)?;
    Ok(Outcome::verify((v.z == 2) == rhs, || format!("Z = {}, 2-connected outerplanar = {rhs}", v.z)))
}

fn extremal_structure(g: &Graph, v: &Values, deadline: &Deadline) -> Result<Outcome> {
    let Some((upper, _)) = v.gammat_upper else {
        return Ok(Outcome::precondition("isolated vertex"));
    };
    if g.n() == 0 || upper != 2 * v.zgrundy {
        return Ok(Outcome::precondition("Γt != 2 γ_gr^Z"));
    }
    for d in enumerate_minimal_td_sets_within(g, deadline)?.into_iter().filter(|d| d.len() == upper) {
        deadline.check()?;
        let r = check_extremal_properties(g, d)?;
        if !r.all_hold() {
            return Ok(Outcome::verify(false, || serde_json::to_string(&r).expect("serializable report")));
        }
    }
    Ok(Outcome::verify(true, String::new))
}
