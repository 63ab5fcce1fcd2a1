//! Exhaustive reference computations, deliberately naive: every quantity is
//! read off a full subset enumeration.

#![allow(dead_code)]

use kegraph::{Edge, Graph};
use rand::Rng;

pub struct Oracle {
    pub alpha: usize,
    pub mu: usize,
    /// Maximum stable sets as bit masks, ascending.
    pub omega: Vec<u32>,
    pub core: u32,
    pub anticore: u32,
    pub alpha_critical: Vec<Edge>,
    pub mu_critical: Vec<Edge>,
}

fn stable(g: &Graph, mask: u32) -> bool {
    g.edges()
        .iter()
        .all(|e| mask & (1 << e.u()) == 0 || mask & (1 << e.v()) == 0)
}

pub fn alpha(g: &Graph) -> usize {
    (0u32..1 << g.n())
        .filter(|&m| stable(g, m))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Tries every way of leaving the lowest free vertex unmatched or matching it
/// to each free neighbour.
pub fn mu(g: &Graph) -> usize {
    fn go(g: &Graph, free: u32) -> usize {
        if free == 0 {
            return 0;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        let mut best = go(g, rest);
        for &w in g.neighbors(v) {
            if rest & (1 << w) != 0 {
                best = best.max(1 + go(g, rest & !(1 << w)));
            }
        }
        best
    }
    go(g, ((1u64 << g.n()) - 1) as u32)
}

pub fn oracle(g: &Graph) -> Oracle {
    let n = g.n();
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let alpha = alpha(g);
    let omega: Vec<u32> = (0u32..1 << n)
        .filter(|&m| m.count_ones() as usize == alpha && stable(g, m))
        .collect();
    let core = omega.iter().fold(full, |a, &s| a & s);
    let anticore = full & !omega.iter().fold(0, |a, &s| a | s);
    let mu = mu(g);
    let mut alpha_critical = Vec::new();
    let mut mu_critical = Vec::new();
    for &e in g.edges() {
        let h = g.delete_edge(e).unwrap();
        if self::alpha(&h) > alpha {
            alpha_critical.push(e);
        }
        if self::mu(&h) < mu {
            mu_critical.push(e);
        }
    }
    Oracle {
        alpha,
        mu,
        omega,
        core,
        anticore,
        alpha_critical,
        mu_critical,
    }
}

pub fn mask_of(set: &kegraph::VertexSet) -> u32 {
    set.iter().fold(0, |m, v| m | (1 << v))
}

/// Random graph on `n` vertices with each pair present with probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, pairs).unwrap()
}
