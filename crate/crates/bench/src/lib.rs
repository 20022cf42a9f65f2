//! Benchmark inputs shared by the criterion targets.

use zfdom_core::families::Family;
use zfdom_core::Graph;

/// Named family instances of growing size, all with at least one edge per
/// vertex so every invariant is defined.
pub fn fixtures() -> Vec<(String, Graph)> {
    [
        "cycle:12",
        "path:16",
        "windmill:3,4",
        "windmill:4,3",
        "doubleclique:5",
        "multipartite:3,3,3",
        "hext:Bw:2,2,2",
        "gstar:Dhc",
    ]
    .iter()
    .map(|d| {
        let inst = d.parse::<Family>().and_then(|f| f.build()).expect("valid descriptor");
        (d.to_string(), inst.graph)
    })
    .collect()
}
