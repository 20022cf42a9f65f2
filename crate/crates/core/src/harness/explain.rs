use std::fmt;

use serde::Serialize;

use crate::domination::{is_minimal_td_set, total_domination_number, upper_total_domination_number};
use crate::error::Result;
use crate::forcing::{forcing_closure, grundy_total_number, z_grundy_number, zero_forcing_number, Force};
use crate::graph::Graph;
use crate::invariants::Invariant;
use crate::powerdom::{extract_decomposition, power_closure, power_domination_number};

/// An invariant value with a human-readable certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Explanation {
    pub invariant: Invariant,
    pub value: usize,
    pub lines: Vec<String>,
}

impl fmt::Display for Explanation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} = {}", self.invariant, self.value)?;
        for l in &self.lines {
            writeln!(f, "  {l}")?;
        }
        Ok(())
    }
}

fn force_lines<'a>(steps: &'a [Force]) -> impl Iterator<Item = String> + 'a {
    steps.iter().map(|f| format!("{} forces {}", f.forcer, f.forced))
}

pub fn explain(g: &Graph, invariant: Invariant) -> Result<Explanation> {
    let mut lines = Vec::new();
    let value = match invariant {
        Invariant::Z => {
            let (z, s) = zero_forcing_number(g);
            let trace = forcing_closure(g, s);
            lines.push(format!("forcing set {s}"));
            lines.extend(force_lines(&trace.steps));
            lines.push(format!("closure {}", trace.final_set));
            z
        }
        Invariant::Zgrundy => {
            let (zg, seq) = z_grundy_number(g);
            lines.push(format!("sequence {:?}", seq.vertices()));
            for (v, fp) in seq.vertices().iter().zip(seq.footprints()) {
                lines.push(format!("{v} footprints {fp}"));
            }
            zg
        }
        Invariant::GrundyTotal => {
            let (gt, seq) = grundy_total_number(g)?;
            lines.push(format!("sequence {seq:?}"));
            let mut covered = crate::graph::VertexSet::EMPTY;
            for &v in &seq {
                let fresh = g.neighbors(v) - covered;
                covered |= g.neighbors(v);
                lines.push(format!("{v} newly dominates {fresh}"));
            }
            gt
        }
        Invariant::Gammat => {
            let (gt, d) = total_domination_number(g)?;
            lines.push(format!("total dominating set {d}"));
            for w in g.vertices().iter() {
                let by = (g.neighbors(w) & d).min().expect("total domination");
                lines.push(format!("{w} dominated by {by}"));
            }
            gt
        }
        Invariant::GammatUpper => {
            let (upper, d) = upper_total_domination_number(g)?;
            let cert = is_minimal_td_set(g, d)?;
            lines.push(format!("minimal total dominating set {d}"));
            for (v, p) in &cert.witnesses {
                lines.push(format!("{v}: private {} external {} internal {}", p.pn, p.epn, p.ipn));
            }
            upper
        }
        Invariant::Powerdom => {
            let (pd, s) = power_domination_number(g);
            let trace = power_closure(g, s);
            lines.push(format!("power dominating set {s}"));
            lines.push(format!("dominated {}", trace.dominated));
            lines.extend(force_lines(&trace.propagation.steps));
            lines.push(format!("observed {}", trace.observed));
            if pd == 1 {
                let x = s.min().expect("one vertex");
                if let Some(d) = extract_decomposition(g, x)? {
                    lines.push(format!("{}-parallel-paths graph with hub {}", d.k(), d.hub));
                    for p in &d.paths {
                        lines.push(format!("path {p:?}"));
                    }
                    if !d.extra_edges.is_empty() {
                        lines.push(format!("extra edges {:?}", d.extra_edges));
                    }
                }
            }
            pd
        }
    };
    Ok(Explanation { invariant, value, lines })
}
