//! Named graph families with their known invariant values.
//!
//! Labeling is fixed so that graph6 output is reproducible: hubs and
//! centers are vertex 0, cliques occupy consecutive labels, and extensions
//! keep the original graph on the lowest labels.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forcing::z_grundy_number;
use crate::graph::{emit_graph6, parse_graph6, Graph, VertexSet, MAX_VERTICES};
use crate::invariants::Invariant;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `n` copies of `K_k` sharing one vertex.
    Windmill {
        k: usize,
        n: usize,
    },
    /// Two copies of `K_k` joined by a perfect matching.
    DoubleClique {
        k: usize,
    },
    Star {
        leaves: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    Multipartite {
        parts: Vec<usize>,
    },
    /// `base` plus `a` adjacent to every base vertex and a pendant `c` on `a`.
    GStar {
        base: Graph,
    },
    /// `h` joined completely to disjoint cliques of the given sizes.
    HExtension {
        h: Graph,
        sizes: Vec<usize>,
    },
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// A published value for the family.
    Claimed,
    /// A regression value from the exact solvers.
    Computed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    Exact(usize),
    AtLeast(usize),
}

impl Bound {
    pub fn admits(self, value: usize) -> bool {
        match self {
            Bound::Exact(v) => value == v,
            Bound::AtLeast(v) => value >= v,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub invariant: Invariant,
    pub bound: Bound,
    pub source: Source,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyInstance {
    pub family: Family,
    pub graph: Graph,
    pub expected: Vec<Expected>,
}

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooLarge { n, max: MAX_VERTICES });
    }
    Ok(())
}

fn clique_edges(vs: std::ops::Range<usize>) -> impl Iterator<Item = (usize, usize)> {
    let start = vs.start;
    vs.flat_map(move |v| (start..v).map(move |u| (u, v)))
}

fn claimed(invariant: Invariant, value: usize) -> Expected {
    Expected { invariant, bound: Bound::Exact(value), source: Source::Claimed }
}

fn computed(invariant: Invariant, value: usize) -> Expected {
    Expected { invariant, bound: Bound::Exact(value), source: Source::Computed }
}

pub fn windmill(k: usize, n: usize) -> Result<FamilyInstance> {
    Family::Windmill { k, n }.build()
}

pub fn double_clique_matched(k: usize) -> Result<FamilyInstance> {
    Family::DoubleClique { k }.build()
}

pub fn star(leaves: usize) -> Result<FamilyInstance> {
    Family::Star { leaves }.build()
}

pub fn path(n: usize) -> Result<FamilyInstance> {
    Family::Path { n }.build()
}

pub fn cycle(n: usize) -> Result<FamilyInstance> {
    Family::Cycle { n }.build()
}

pub fn complete(n: usize) -> Result<FamilyInstance> {
    Family::Complete { n }.build()
}

pub fn complete_multipartite(parts: &[usize]) -> Result<FamilyInstance> {
    Family::Multipartite { parts: parts.to_vec() }.build()
}

pub fn g_star(base: &Graph) -> Result<FamilyInstance> {
    Family::GStar { base: base.clone() }.build()
}

pub fn h_extension(h: &Graph, sizes: &[usize]) -> Result<FamilyInstance> {
    Family::HExtension { h: h.clone(), sizes: sizes.to_vec() }.build()
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Windmill { .. } => "windmill",
            Family::DoubleClique { .. } => "doubleclique",
            Family::Star { .. } => "star",
            Family::Path { .. } => "path",
            Family::Cycle { .. } => "cycle",
            Family::Complete { .. } => "complete",
            Family::Multipartite { .. } => "multipartite",
            Family::GStar { .. } => "gstar",
            Family::HExtension { .. } => "hext",
        }
    }

    pub fn build(&self) -> Result<FamilyInstance> {
        use Invariant::*;
        let (graph, expected) = match self {
            &Family::Windmill { k, n } => {
                if k < 3 || n < 2 {
                    return invalid(format!("windmill needs k >= 3 and n >= 2, got k = {k}, n = {n}"));
                }
                let order = n * (k - 1) + 1;
                check_order(order)?;
                let edges = (0..n).flat_map(|b| {
                    let lo = 1 + b * (k - 1);
                    clique_edges(lo..lo + k - 1).chain((lo..lo + k - 1).map(|v| (0, v)))
                });
                (Graph::from_edges(order, edges)?, vec![claimed(Zgrundy, n), claimed(GammatUpper, 2 * n)])
            }
            &Family::DoubleClique { k } => {
                if k < 2 {
                    return invalid(format!("double clique needs k >= 2, got {k}"));
                }
                check_order(2 * k)?;
                let edges = clique_edges(0..k).chain(clique_edges(k..2 * k)).chain((0..k).map(|i| (i, k + i)));
                (Graph::from_edges(2 * k, edges)?, vec![claimed(Zgrundy, k), claimed(Gammat, 2)])
            }
            &Family::Star { leaves } => {
                if leaves < 1 {
                    return invalid("star needs at least one leaf");
                }
                check_order(leaves + 1)?;
                let g = Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))?;
                let expected = if leaves >= 2 { vec![claimed(Zgrundy, 2), claimed(Gammat, 2)] } else { vec![] };
                (g, expected)
            }
            &Family::Path { n } => {
                if n < 1 {
                    return invalid("path needs at least one vertex");
                }
                check_order(n)?;
                (Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?, vec![claimed(Z, 1)])
            }
            &Family::Cycle { n } => {
                if n < 3 {
                    return invalid(format!("cycle needs n >= 3, got {n}"));
                }
                check_order(n)?;
                let mut expected = vec![computed(Z, 2)];
                if n == 5 {
                    expected.extend([claimed(Gammat, 3), claimed(Zgrundy, 3)]);
                }
                (Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?, expected)
            }
            &Family::Complete { n } => {
                if n < 1 {
                    return invalid("complete graph needs at least one vertex");
                }
                check_order(n)?;
                (Graph::from_edges(n, clique_edges(0..n))?, vec![computed(Z, n.saturating_sub(1).max(1))])
            }
            Family::Multipartite { parts } => {
                if parts.len() < 2 || parts.contains(&0) {
                    return invalid("complete multipartite needs at least two non-empty parts");
                }
                let order: usize = parts.iter().sum();
                check_order(order)?;
                let mut part_of = Vec::with_capacity(order);
                for (i, &p) in parts.iter().enumerate() {
                    part_of.extend(std::iter::repeat_n(i, p));
                }
                let edges = clique_edges(0..order).filter(|&(u, v)| part_of[u] != part_of[v]);
                (Graph::from_edges(order, edges)?, vec![claimed(Gammat, 2), claimed(GrundyTotal, 2)])
            }
            Family::GStar { base } => {
                let n = base.n();
                if n < 1 {
                    return invalid("gstar needs a non-empty base graph");
                }
                check_order(n + 2)?;
                let (a, c) = (n, n + 1);
                let edges = base.edges().chain((0..n).map(|v| (v, a))).chain([(a, c)]);
                let zg = z_grundy_number(base).0;
                let expected = vec![
                    claimed(GammatUpper, 2),
                    Expected { invariant: Zgrundy, bound: Bound::AtLeast(zg + 1), source: Source::Claimed },
                ];
                (Graph::from_edges(n + 2, edges)?, expected)
            }
            Family::HExtension { h, sizes } => {
                if sizes.is_empty() || sizes.iter().any(|&s| s < 2) {
                    return invalid("hext needs at least one clique, each of size >= 2");
                }
                let ell = sizes.len();
                let zg = z_grundy_number(h).0;
                if ell < zg {
                    return Err(Error::Precondition(format!(
                        "hext needs at least γ_gr^Z(h) = {zg} cliques, got {ell}"
                    )));
                }
                let hn = h.n();
                let order = hn + sizes.iter().sum::<usize>();
                check_order(order)?;
                let mut edges: Vec<(usize, usize)> = h.edges().collect();
                let mut lo = hn;
                for &s in sizes {
                    edges.extend(clique_edges(lo..lo + s));
                    edges.extend((0..hn).flat_map(|u| (lo..lo + s).map(move |v| (u, v))));
                    lo += s;
                }
                (Graph::from_edges(order, edges)?, vec![claimed(GammatUpper, 2 * ell), claimed(Zgrundy, ell)])
            }
        };
        let instance = FamilyInstance { family: self.clone(), graph, expected };
        instance.validate_structure()?;
        Ok(instance)
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Family {
    /// The descriptor accepted by [`FromStr`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g6 = |g: &Graph| emit_graph6(g).unwrap_or_else(|_| "<too large>".into());
        match self {
            Family::Windmill { k, n } => write!(f, "windmill:{k},{n}"),
            Family::DoubleClique { k } => write!(f, "doubleclique:{k}"),
            Family::Star { leaves } => write!(f, "star:{leaves}"),
            Family::Path { n } => write!(f, "path:{n}"),
            Family::Cycle { n } => write!(f, "cycle:{n}"),
            Family::Complete { n } => write!(f, "complete:{n}"),
            Family::Multipartite { parts } => write!(f, "multipartite:{}", join(parts)),
            Family::GStar { base } => write!(f, "gstar:{}", g6(base)),
            Family::HExtension { h, sizes } => write!(f, "hext:{}:{}", g6(h), join(sizes)),
        }
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|x| x.trim().parse::<usize>().or_else(|_| invalid(format!("expected a number, got {x:?}"))))
        .collect()
}

fn parse_one(s: &str) -> Result<usize> {
    match parse_list(s)?.as_slice() {
        &[x] => Ok(x),
        _ => invalid(format!("expected one number, got {s:?}")),
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Accepts `windmill:K,N`, `doubleclique:K`, `star:L`, `path:N`,
    /// `cycle:N`, `complete:N`, `multipartite:A,B,..`, `gstar:<graph6>` and
    /// `hext:<graph6>:S1,S2,..`.
    fn from_str(s: &str) -> Result<Self> {
        let Some((name, args)) = s.split_once(':') else {
            return invalid(format!("family descriptor {s:?} has no ':'"));
        };
        Ok(match name {
            "windmill" => match parse_list(args)?.as_slice() {
                &[k, n] => Family::Windmill { k, n },
                _ => return invalid("windmill takes K,N"),
            },
            "doubleclique" => Family::DoubleClique { k: parse_one(args)? },
            "star" => Family::Star { leaves: parse_one(args)? },
            "path" => Family::Path { n: parse_one(args)? },
            "cycle" => Family::Cycle { n: parse_one(args)? },
            "complete" => Family::Complete { n: parse_one(args)? },
            "multipartite" => Family::Multipartite { parts: parse_list(args)? },
            "gstar" => Family::GStar { base: parse_graph6(args)? },
            "hext" => {
                // graph6 never contains ':', so the last ':' splits the sizes off
                let Some((g6, sizes)) = args.rsplit_once(':') else {
                    return invalid("hext takes <graph6>:S1,S2,..");
                };
                Family::HExtension { h: parse_graph6(g6)?, sizes: parse_list(sizes)? }
            }
            other => return invalid(format!("unknown family {other:?}")),
        })
    }
}

impl FamilyInstance {
    pub fn descriptor(&self) -> String {
        self.family.to_string()
    }

    /// Checks the defining structure of the family on `self.graph`.
    pub fn validate_structure(&self) -> Result<()> {
        let g = &self.graph;
        let fail = |what: &str| Err(Error::InvalidArgument(format!("{} is not a valid {what}", self.family)));
        let all = g.vertices();
        let ok = match &self.family {
            &Family::Windmill { k, n } => {
                let hub_degree = n * (k - 1);
                let hubs: Vec<_> = (0..g.n()).filter(|&v| g.degree(v) == hub_degree).collect();
                let comps = g.components_within(all.without(0));
                hubs == [0] && comps.len() == n && comps.iter().all(|&c| c.len() == k - 1 && g.is_clique(c))
            }
            &Family::DoubleClique { k } => {
                let left = VertexSet::full(k);
                (0..g.n()).all(|v| g.degree(v) == k)
                    && g.is_clique(left)
                    && g.is_clique(all - left)
                    && (0..k).all(|i| g.has_edge(i, k + i))
            }
            &Family::Star { leaves } => g.degree(0) == leaves && g.m() == leaves,
            &Family::Path { n } => g.m() == n - 1 && g.is_connected() && g.max_degree() <= 2,
            &Family::Cycle { n } => g.m() == n && g.is_connected() && (0..n).all(|v| g.degree(v) == 2),
            Family::Complete { .. } => g.is_complete(),
            Family::Multipartite { parts } => {
                let mut lo = 0;
                let mut ok = true;
                for &p in parts {
                    let part = VertexSet::full(lo + p) - VertexSet::full(lo);
                    ok &= part.iter().all(|v| g.neighbors(v) == all - part);
                    lo += p;
                }
                ok
            }
            Family::GStar { base } => {
                let n = base.n();
                let (a, c) = (n, n + 1);
                g.induced_unchecked(VertexSet::full(n)).0 == *base
                    && g.neighbors(a) == all.without(a)
                    && g.neighbors(c) == VertexSet::singleton(a)
            }
            Family::HExtension { h, sizes } => {
                let hn = h.n();
                let hset = VertexSet::full(hn);
                let mut lo = hn;
                let mut ok = g.induced_unchecked(hset).0 == *h;
                for &s in sizes {
                    let block = VertexSet::full(lo + s) - VertexSet::full(lo);
                    ok &= block.iter().all(|v| g.neighbors(v) == (block.without(v) | hset));
                    lo += s;
                }
                ok
            }
        };
        if ok {
            Ok(())
        } else {
            fail(self.family.name())
        }
    }
}
