//! Brute-force oracles written straight from the definitions. They share
//! nothing with the library beyond reading edges, and are only meant for
//! graphs on at most 8 or so vertices.
#![allow(dead_code)]

use zfdom_core::graph::parse_graph6;
use zfdom_core::Graph;

pub const CORPUS: &str = include_str!("../data/graphs_n1_7.g6");

pub fn corpus() -> Vec<(String, Graph)> {
    CORPUS.lines().map(|l| (l.to_string(), parse_graph6(l).expect("corpus line"))).collect()
}

pub fn connected_corpus() -> Vec<(String, Graph)> {
    corpus().into_iter().filter(|(_, g)| g.n() > 0 && g.is_connected()).collect()
}

/// Adjacency lists as plain vectors.
pub struct Adj {
    pub n: usize,
    pub nbrs: Vec<Vec<usize>>,
}

impl Adj {
    pub fn of(g: &Graph) -> Adj {
        let n = g.n();
        let nbrs = (0..n).map(|u| (0..n).filter(|&v| v != u && g.has_edge(u, v)).collect()).collect();
        Adj { n, nbrs }
    }

    fn full(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    fn open(&self, v: usize) -> u64 {
        self.nbrs[v].iter().fold(0, |m, &u| m | 1 << u)
    }

    fn closed(&self, v: usize) -> u64 {
        self.open(v) | 1 << v
    }

    /// Repeatedly applies "a blue vertex with exactly one white neighbor
    /// turns it blue", scanning vertices in index order each round.
    pub fn closure(&self, blue: u64) -> u64 {
        let mut blue = blue;
        loop {
            let mut changed = false;
            for u in 0..self.n {
                if blue >> u & 1 == 0 {
                    continue;
                }
                let white: Vec<usize> = self.nbrs[u].iter().copied().filter(|&w| blue >> w & 1 == 0).collect();
                if white.len() == 1 {
                    blue |= 1 << white[0];
                    changed = true;
                }
            }
            if !changed {
                return blue;
            }
        }
    }

    pub fn zero_forcing(&self) -> usize {
        (0..=self.full()).filter(|&s| self.closure(s) == self.full()).map(|s| s.count_ones() as usize).min().unwrap()
    }

    fn is_td(&self, d: u64) -> bool {
        (0..self.n).all(|v| self.open(v) & d != 0)
    }

    pub fn gamma_t(&self) -> Option<usize> {
        (0..=self.full()).filter(|&d| self.is_td(d)).map(|d| d.count_ones() as usize).min()
    }

    pub fn is_minimal_td(&self, d: u64) -> bool {
        self.is_td(d) && (0..self.n).all(|v| d >> v & 1 == 0 || !self.is_td(d & !(1 << v)))
    }

    pub fn upper_gamma_t(&self) -> Option<usize> {
        (0..=self.full()).filter(|&d| self.is_minimal_td(d)).map(|d| d.count_ones() as usize).max()
    }

    /// Longest sequence in which each vertex's open neighborhood leaves
    /// something outside the union of the earlier closed neighborhoods.
    pub fn z_grundy(&self) -> usize {
        self.longest(0, 0, &|a: &Adj, v| a.open(v), &|a: &Adj, v| a.closed(v))
    }

    /// Longest sequence in which each open neighborhood adds something new.
    pub fn grundy_total(&self) -> usize {
        self.longest(0, 0, &|a: &Adj, v| a.open(v), &|a: &Adj, v| a.open(v))
    }

    fn longest(
        &self,
        used: u64,
        covered: u64,
        need: &dyn Fn(&Adj, usize) -> u64,
        add: &dyn Fn(&Adj, usize) -> u64,
    ) -> usize {
        (0..self.n)
            .filter(|&v| used >> v & 1 == 0 && need(self, v) & !covered != 0)
            .map(|v| 1 + self.longest(used | 1 << v, covered | add(self, v), need, add))
            .max()
            .unwrap_or(0)
    }

    pub fn power_domination(&self) -> usize {
        (1..=self.full())
            .filter(|&s| {
                let dominated = (0..self.n).filter(|&v| s >> v & 1 == 1).fold(s, |m, v| m | self.closed(v));
                self.closure(dominated) == self.full()
            })
            .map(|s| s.count_ones() as usize)
            .min()
            .unwrap_or(0)
    }

    /// A 2-connected graph is outerplanar exactly when it has a Hamiltonian
    /// cycle whose chords pairwise do not cross. Tries every such cycle.
    pub fn has_non_crossing_hamiltonian_cycle(&self) -> bool {
        let n = self.n;
        if n < 3 {
            return false;
        }
        let mut order = vec![0];
        self.hamiltonian_search(&mut order, 1)
    }

    fn hamiltonian_search(&self, order: &mut Vec<usize>, used: u64) -> bool {
        let n = self.n;
        let last = *order.last().unwrap();
        if order.len() == n {
            return self.nbrs[last].contains(&0) && self.chords_do_not_cross(order);
        }
        for &w in &self.nbrs[last] {
            if used >> w & 1 == 0 {
                order.push(w);
                if self.hamiltonian_search(order, used | 1 << w) {
                    return true;
                }
                order.pop();
            }
        }
        false
    }

    fn chords_do_not_cross(&self, order: &[usize]) -> bool {
        let n = order.len();
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut chords = Vec::new();
        for u in 0..n {
            for &v in &self.nbrs[u] {
                let (a, b) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
                if u < v && b - a != 1 && !(a == 0 && b == n - 1) {
                    chords.push((a, b));
                }
            }
        }
        chords.iter().all(|&(a, b)| chords.iter().all(|&(c, d)| !(a < c && c < b && b < d)))
    }
}
