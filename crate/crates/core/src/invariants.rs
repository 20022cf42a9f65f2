use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::deadline::Deadline;
use crate::domination::{total_domination_number_within, upper_total_domination_number_within};
use crate::error::{Error, Result};
use crate::forcing::{grundy_total_number_within, z_grundy_number_within, zero_forcing_number_within};
use crate::graph::Graph;
use crate::powerdom::power_domination_number_within;

/// The exact invariants computed by this crate, named as on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    #[serde(rename = "Z")]
    Z,
    Zgrundy,
    GrundyTotal,
    Gammat,
    GammatUpper,
    Powerdom,
}

impl Invariant {
    pub const ALL: [Invariant; 6] = [
        Invariant::Z,
        Invariant::Zgrundy,
        Invariant::GrundyTotal,
        Invariant::Gammat,
        Invariant::GammatUpper,
        Invariant::Powerdom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::Z => "Z",
            Invariant::Zgrundy => "zgrundy",
            Invariant::GrundyTotal => "grundy_total",
            Invariant::Gammat => "gammat",
            Invariant::GammatUpper => "gammat_upper",
            Invariant::Powerdom => "powerdom",
        }
    }

    /// Total-domination invariants are undefined with isolated vertices.
    pub fn compute(self, g: &Graph, deadline: &Deadline) -> Result<usize> {
        Ok(match self {
            Invariant::Z => zero_forcing_number_within(g, deadline)?.0,
            Invariant::Zgrundy => z_grundy_number_within(g, deadline)?.0,
            Invariant::GrundyTotal => grundy_total_number_within(g, deadline)?.0,
            Invariant::Gammat => total_domination_number_within(g, deadline)?.0,
            Invariant::GammatUpper => upper_total_domination_number_within(g, deadline)?.0,
            Invariant::Powerdom => power_domination_number_within(g, deadline)?.0,
        })
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Invariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Invariant::ALL.into_iter().find(|i| i.name() == s).ok_or_else(|| {
            let names: Vec<_> = Invariant::ALL.iter().map(|i| i.name()).collect();
            Error::InvalidArgument(format!("unknown invariant {s:?}; expected one of {}", names.join(", ")))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for i in Invariant::ALL {
            assert_eq!(i.name().parse::<Invariant>().unwrap(), i);
        }
        assert!("gamma".parse::<Invariant>().is_err());
        assert_eq!(serde_json::to_string(&Invariant::GammatUpper).unwrap(), "\"gammat_upper\"");
        assert_eq!(serde_json::to_string(&Invariant::Z).unwrap(), "\"Z\"");
    }

    #[test]
    fn compute_on_c5() {
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let got: Vec<_> = Invariant::ALL.iter().map(|i| i.compute(&c5, &Deadline::NONE).unwrap()).collect();
        // Z, zgrundy, grundy_total, gammat, gammat_upper, powerdom
        assert_eq!(got, vec![2, 3, 4, 3, 3, 1]);
    }
}
