use serde::Serialize;

use super::Limits;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Ω(G) together with the sets derived from it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StableSetReport {
    pub alpha: usize,
    /// Every maximum stable set, in lexicographic order.
    pub omega: Vec<VertexSet>,
    /// Intersection of all maximum stable sets.
    pub core: VertexSet,
    /// Vertices belonging to no maximum stable set.
    pub anticore: VertexSet,
    pub xi: usize,
    pub sigma: usize,
}

fn masks_within(g: &Graph, cap: usize, what: &str) -> Result<Vec<u64>> {
    if g.n() > cap {
        return Err(Error::capacity(format!(
            "{what} is limited to {cap} vertices, graph has {}",
            g.n()
        )));
    }
    g.adjacency_masks()
        .ok_or_else(|| Error::capacity(format!("{what} supports at most 64 vertices")))
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Upper bound on α of the subgraph induced by `cand`: the size of a greedy
/// partition of `cand` into cliques.
fn clique_cover_bound(adj: &[u64], mut cand: u64) -> usize {
    let mut cliques = 0;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= !(1u64 << v);
        let mut common = cand & adj[v];
        while common != 0 {
            let w = common.trailing_zeros() as usize;
            cand &= !(1u64 << w);
            common &= adj[w] & !(1u64 << w);
        }
        cliques += 1;
    }
    cliques
}

struct MaxStable<'a> {
    adj: &'a [u64],
    best: usize,
    best_set: u64,
}

impl MaxStable<'_> {
    fn search(&mut self, mut cand: u64, mut chosen: u64) {
        // Vertices of degree <= 1 inside `cand` belong to some maximum stable set.
        loop {
            let low = bits(cand).find(|&v| (self.adj[v] & cand).count_ones() <= 1);
            match low {
                Some(v) => {
                    chosen |= 1u64 << v;
                    cand &= !(self.adj[v] | (1u64 << v));
                }
                None => break,
            }
        }
        let size = chosen.count_ones() as usize;
        if cand == 0 {
            if size > self.best {
                self.best = size;
                self.best_set = chosen;
            }
            return;
        }
        if size + cand.count_ones() as usize <= self.best {
            return;
        }
        if size + clique_cover_bound(self.adj, cand) <= self.best {
            return;
        }
        let v = bits(cand)
            .max_by_key(|&v| ((self.adj[v] & cand).count_ones(), std::cmp::Reverse(v)))
            .unwrap();
        self.search(cand & !(self.adj[v] | (1u64 << v)), chosen | (1u64 << v));
        self.search(cand & !(1u64 << v), chosen);
    }
}

fn greedy_stable(adj: &[u64], mut cand: u64) -> u64 {
    let mut chosen = 0u64;
    while cand != 0 {
        let v = bits(cand)
            .min_by_key(|&v| ((adj[v] & cand).count_ones(), v))
            .unwrap();
        chosen |= 1u64 << v;
        cand &= !(adj[v] | (1u64 << v));
    }
    chosen
}

/// A maximum stable set inside the vertex mask `cand`.
pub(crate) fn max_stable_in(adj: &[u64], cand: u64) -> u64 {
    let start = greedy_stable(adj, cand);
    let mut solver = MaxStable {
        adj,
        best: start.count_ones() as usize,
        best_set: start,
    };
    solver.search(cand, 0);
    solver.best_set
}

/// α(G) by branch and bound.
pub fn stability_number(g: &Graph, limits: &Limits) -> Result<usize> {
    maximum_stable_set(g, limits).map(|s| s.len())
}

/// Some maximum stable set of `g`.
pub fn maximum_stable_set(g: &Graph, limits: &Limits) -> Result<VertexSet> {
    let adj = masks_within(g, limits.alpha_max_n, "stability number")?;
    Ok(VertexSet::from_mask(max_stable_in(&adj, full_mask(g.n()))))
}

/// The lexicographically smallest maximum stable set, built greedily: a vertex
/// is kept whenever the remaining later vertices can still complete a set of
/// size α around it.
pub fn lex_smallest_maximum_stable_set(g: &Graph, limits: &Limits) -> Result<VertexSet> {
    let adj = masks_within(g, limits.alpha_max_n, "stability number")?;
    let n = g.n();
    let alpha = max_stable_in(&adj, full_mask(n)).count_ones() as usize;
    let mut allowed = full_mask(n);
    let mut chosen = 0u64;
    for v in 0..n {
        let bit = 1u64 << v;
        if allowed & bit == 0 {
            continue;
        }
        allowed &= !bit;
        let rest = allowed & !adj[v];
        let reachable =
            chosen.count_ones() as usize + 1 + max_stable_in(&adj, rest).count_ones() as usize;
        if reachable == alpha {
            chosen |= bit;
            allowed = rest;
        }
    }
    debug_assert_eq!(chosen.count_ones() as usize, alpha);
    Ok(VertexSet::from_mask(chosen))
}

struct OmegaEnum<'a> {
    adj: &'a [u64],
    alpha: usize,
    cap: usize,
    found: Vec<u64>,
    overflow: bool,
}

impl OmegaEnum<'_> {
    fn search(&mut self, cand: u64, chosen: u64) {
        if self.overflow {
            return;
        }
        let size = chosen.count_ones() as usize;
        if size == self.alpha {
            if self.found.len() == self.cap {
                self.overflow = true;
            } else {
                self.found.push(chosen);
            }
            return;
        }
        if size + (cand.count_ones() as usize) < self.alpha
            || size + clique_cover_bound(self.adj, cand) < self.alpha
        {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let bit = 1u64 << v;
        self.search(cand & !(self.adj[v] | bit), chosen | bit);
        self.search(cand & !bit, chosen);
    }
}

/// Lists Ω(G) and derives core, anticore, ξ and σ from it.
///
/// Fails with a capacity error when `n` exceeds `limits.omega_max_n` or Ω has
/// more than `limits.omega_cap` members; the derived sets are never computed
/// from a partial listing.
pub fn enumerate_maximum_stable_sets(g: &Graph, limits: &Limits) -> Result<StableSetReport> {
    let adj = masks_within(
        g,
        limits.omega_max_n.min(limits.alpha_max_n),
        "maximum stable set enumeration",
    )?;
    let n = g.n();
    let all = full_mask(n);
    let alpha = max_stable_in(&adj, all).count_ones() as usize;
    let mut walker = OmegaEnum {
        adj: &adj,
        alpha,
        cap: limits.omega_cap,
        found: Vec::new(),
        overflow: false,
    };
    walker.search(all, 0);
    if walker.overflow {
        return Err(Error::capacity(format!(
            "more than {} maximum stable sets",
            limits.omega_cap
        )));
    }
    let mut found = walker.found;
    let core_mask = found.iter().fold(all, |acc, &s| acc & s);
    let union_mask = found.iter().fold(0u64, |acc, &s| acc | s);
    let mut omega: Vec<VertexSet> = found.drain(..).map(VertexSet::from_mask).collect();
    omega.sort();
    let core = VertexSet::from_mask(core_mask);
    let anticore = VertexSet::from_mask(all & !union_mask);
    Ok(StableSetReport {
        alpha,
        xi: core.len(),
        sigma: anticore.len(),
        omega,
        core,
        anticore,
    })
}
