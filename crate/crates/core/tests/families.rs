mod common;

use common::Adj;
use zfdom_core::families::{Bound, Family, Source};
use zfdom_core::graph::emit_graph6;
use zfdom_core::invariants::Invariant;
use zfdom_core::{Deadline, Graph};

fn oracle(g: &Graph, inv: Invariant) -> usize {
    let a = Adj::of(g);
    match inv {
        Invariant::Z => a.zero_forcing(),
        Invariant::Zgrundy => a.z_grundy(),
        Invariant::GrundyTotal => a.grundy_total(),
        Invariant::Gammat => a.gamma_t().unwrap(),
        Invariant::GammatUpper => a.upper_gamma_t().unwrap(),
        Invariant::Powerdom => a.power_domination(),
    }
}

const DESCRIPTORS: &[&str] = &[
    "windmill:3,2",
    "windmill:3,3",
    "windmill:4,2",
    "windmill:4,3",
    "doubleclique:2",
    "doubleclique:3",
    "doubleclique:4",
    "star:2",
    "star:5",
    "path:1",
    "path:7",
    "cycle:3",
    "cycle:5",
    "cycle:8",
    "complete:1",
    "complete:6",
    "multipartite:1,1,1",
    "multipartite:2,3",
    "multipartite:1,2,3",
    "gstar:A_",
    "gstar:Dhc",
    "gstar:Bw",
    "hext:A_:2,2",
    "hext:Bw:2,2,3",
    "hext:@:2,3",
];

#[test]
fn expected_values_match_brute_force() {
    for d in DESCRIPTORS {
        let inst = d.parse::<Family>().unwrap().build().unwrap();
        assert!(inst.validate_structure().is_ok(), "{d}");
        assert!(inst.graph.n() <= 10, "{d} too large for the oracle");
        for e in &inst.expected {
            let value = oracle(&inst.graph, e.invariant);
            assert!(e.bound.admits(value), "{d}: {} = {value}, expected {:?}", e.invariant, e.bound);
            assert_eq!(e.invariant.compute(&inst.graph, &Deadline::NONE).unwrap(), value, "{d} {}", e.invariant);
        }
    }
}

#[test]
fn descriptors_round_trip() {
    for d in DESCRIPTORS {
        let f: Family = d.parse().unwrap();
        assert_eq!(f.to_string(), *d);
        let inst = f.build().unwrap();
        assert_eq!(inst.descriptor(), *d);
    }
}

#[test]
fn published_values_are_marked_claimed() {
    let inst = "windmill:3,2".parse::<Family>().unwrap().build().unwrap();
    assert!(inst.expected.iter().all(|e| e.source == Source::Claimed));
    assert_eq!(emit_graph6(&inst.graph).unwrap(), "D{c");
    let inst = "cycle:7".parse::<Family>().unwrap().build().unwrap();
    assert_eq!(inst.expected[0].source, Source::Computed);
    assert_eq!(inst.expected[0].bound, Bound::Exact(2));
}

#[test]
fn bad_descriptors_are_rejected() {
    for d in ["", "windmill", "windmill:1,2", "windmill:3", "star:x", "hext:Bw:", "gstar:!!", "nope:3", "multipartite:"]
    {
        let built = d.parse::<Family>().and_then(|f| f.build());
        assert!(built.is_err(), "{d}");
    }
}
