use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::z_sequence_from_gamma_t;
use crate::domination::{total_domination_number, upper_total_domination_number};
use crate::error::{Error, Result};
use crate::forcing::{z_grundy_number, zero_forcing_number};
use crate::graph::{emit_graph6, enumerate_labeled_graphs, Graph, VertexSet};
use crate::powerdom::{extract_decomposition, z_equals_delta, ParallelPathsDecomposition};

/// What to look for in a graph list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicate {
    /// `Γt = 2γ_gr^Z`.
    GammatUpperEq2Zgrundy,
    /// `γ_gr^Z = γt` without clique components.
    ZgrundyEqGammat,
    /// `Z = δ`, at least two vertices.
    ZEqDelta,
    /// Chordal with `γt = γ_gr^Z = k`.
    ChordalEq(usize),
    /// A simplicial vertex and `γt = γ_gr^Z = k`.
    SimplicialEq(usize),
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::GammatUpperEq2Zgrundy => f.write_str("gammat-upper-eq-2zgrundy"),
            Predicate::ZgrundyEqGammat => f.write_str("zgrundy-eq-gammat"),
            Predicate::ZEqDelta => f.write_str("z-eq-delta"),
            Predicate::ChordalEq(k) => write!(f, "chordal-eq:{k}"),
            Predicate::SimplicialEq(k) => write!(f, "simplicial-eq:{k}"),
        }
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let with_k = |arg: &str| {
            arg.parse::<usize>().map_err(|_| Error::InvalidArgument(format!("bad value {arg:?} in predicate {s:?}")))
        };
        match s.split_once(':') {
            None => match s {
                "gammat-upper-eq-2zgrundy" => Ok(Predicate::GammatUpperEq2Zgrundy),
                "zgrundy-eq-gammat" => Ok(Predicate::ZgrundyEqGammat),
                "z-eq-delta" => Ok(Predicate::ZEqDelta),
                _ => Err(unknown(s)),
            },
            Some(("chordal-eq", k)) => Ok(Predicate::ChordalEq(with_k(k)?)),
            Some(("simplicial-eq", k)) => Ok(Predicate::SimplicialEq(with_k(k)?)),
            Some(_) => Err(unknown(s)),
        }
    }
}

fn unknown(s: &str) -> Error {
    Error::InvalidArgument(format!(
        "unknown predicate {s:?}; expected gammat-upper-eq-2zgrundy, zgrundy-eq-gammat, z-eq-delta, chordal-eq:K or simplicial-eq:K"
    ))
}

/// A matching graph with the witnesses behind the match.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HuntHit {
    pub graph6: String,
    pub values: BTreeMap<&'static str, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_set: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sequence: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simplicial: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<ParallelPathsDecomposition>,
}

impl HuntHit {
    fn new(g: &Graph) -> Result<Self> {
        Ok(HuntHit {
            graph6: emit_graph6(g)?,
            values: BTreeMap::new(),
            witness_set: None,
            sequence: None,
            simplicial: None,
            decomposition: None,
        })
    }
}

fn gammat_eq_zgrundy(g: &Graph, k: usize, hit: &mut HuntHit) -> Result<bool> {
    if g.n() == 0 || g.has_clique_component() {
        return Ok(false);
    }
    let (gt, d) = total_domination_number(g)?;
    let (zg, _) = z_grundy_number(g);
    if gt != zg || (k != 0 && gt != k) {
        return Ok(false);
    }
    hit.values.insert("gammat", gt);
    hit.values.insert("zgrundy", zg);
    hit.witness_set = Some(d);
    hit.sequence = Some(z_sequence_from_gamma_t(g)?.vertices().to_vec());
    Ok(true)
}

fn evaluate(g: &Graph, predicate: Predicate) -> Result<Option<HuntHit>> {
    let mut hit = HuntHit::new(g)?;
    let matched = match predicate {
        Predicate::GammatUpperEq2Zgrundy => {
            if g.n() == 0 || !g.is_isolate_free() {
                return Ok(None);
            }
            let (upper, d) = upper_total_domination_number(g)?;
            let (zg, seq) = z_grundy_number(g);
            hit.values.insert("gammat_upper", upper);
            hit.values.insert("zgrundy", zg);
            hit.witness_set = Some(d);
            hit.sequence = Some(seq.vertices().to_vec());
            upper == 2 * zg
        }
        Predicate::ZgrundyEqGammat => gammat_eq_zgrundy(g, 0, &mut hit)?,
        Predicate::ZEqDelta => {
            if g.n() < 2 {
                return Ok(None);
            }
            let (z, s) = zero_forcing_number(g);
            hit.values.insert("Z", z);
            hit.values.insert("delta", g.min_degree());
            hit.witness_set = Some(s);
            match z_equals_delta(g) {
                Some(x) if z == g.min_degree() => {
                    hit.decomposition = extract_decomposition(g, x)?;
                    true
                }
                _ => false,
            }
        }
        Predicate::ChordalEq(k) => g.is_chordal() && gammat_eq_zgrundy(g, k.max(1), &mut hit)?,
        Predicate::SimplicialEq(k) => {
            hit.simplicial = g.simplicial_vertices().min();
            hit.simplicial.is_some() && gammat_eq_zgrundy(g, k.max(1), &mut hit)?
        }
    };
    Ok(matched.then_some(hit))
}

/// Filters `graphs` by `predicate`, keeping input order.
pub fn hunt_graphs(graphs: &[Graph], predicate: Predicate) -> Result<Vec<HuntHit>> {
    let found: Vec<Option<HuntHit>> = graphs.par_iter().map(|g| evaluate(g, predicate)).collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}

/// Hunts over every connected labeled graph on `n` vertices.
pub fn hunt_extremal(n: usize, predicate: Predicate) -> Result<Vec<HuntHit>> {
    let graphs: Vec<Graph> = enumerate_labeled_graphs(n, true)?.collect();
    hunt_graphs(&graphs, predicate)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predicate_names() {
        for s in ["gammat-upper-eq-2zgrundy", "zgrundy-eq-gammat", "z-eq-delta", "chordal-eq:3", "simplicial-eq:2"] {
            assert_eq!(s.parse::<Predicate>().unwrap().to_string(), s);
        }
        for s in ["", "chordal-eq", "chordal-eq:x", "nope:3", "z=delta"] {
            assert!(s.parse::<Predicate>().is_err(), "{s}");
        }
    }

    #[test]
    fn small_hunts() {
        // the 5-vertex windmill is among the graphs with Γt = 2 γ_gr^Z
        let hits = hunt_extremal(5, Predicate::GammatUpperEq2Zgrundy).unwrap();
        assert!(hits.iter().any(|h| h.graph6 == "D{c"), "{}", hits.len());
        assert!(hunt_extremal(5, Predicate::ChordalEq(3)).unwrap().is_empty());

        let hits = hunt_extremal(4, Predicate::ZEqDelta).unwrap();
        assert!(hits.iter().all(|h| h.decomposition.is_some()));
        // P_4 and its labeled copies
        assert!(hits.iter().any(|h| h.graph6 == "Ch"));
    }
}
