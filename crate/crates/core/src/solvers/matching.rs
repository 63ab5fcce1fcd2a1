use std::collections::VecDeque;

use serde::{Serialize, Serializer};

use super::Limits;
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, Graph, Matching};

const NONE: usize = usize::MAX;

/// μ(G) with one maximum matching.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaximumMatching {
    pub mu: usize,
    pub witness: Matching,
}

/// Number of perfect matchings, saturating at two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PerfectMatchingCount {
    Zero,
    One,
    /// Two or more.
    Many,
}

impl PerfectMatchingCount {
    /// 0, 1, or 2 meaning "two or more".
    pub fn as_u8(self) -> u8 {
        match self {
            PerfectMatchingCount::Zero => 0,
            PerfectMatchingCount::One => 1,
            PerfectMatchingCount::Many => 2,
        }
    }
}

impl Serialize for PerfectMatchingCount {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.as_u8())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerfectMatchingStatus {
    pub count: PerfectMatchingCount,
    /// Up to two distinct perfect matchings, in the order the search met them.
    pub witnesses: Vec<Matching>,
}

impl PerfectMatchingStatus {
    pub fn is_unique(&self) -> bool {
        self.count == PerfectMatchingCount::One
    }

    /// The perfect matching when it is unique.
    pub fn unique(&self) -> Option<&Matching> {
        if self.is_unique() {
            self.witnesses.first()
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingReport {
    pub mu: usize,
    pub witness: Matching,
    pub perfect_matching_count: PerfectMatchingCount,
    /// Edges lying in every maximum matching.
    pub forced_edges: EdgeSet,
}

/// Edmonds' blossom algorithm, O(n^3). Roots are tried in increasing order and
/// neighbours in sorted order, so the witness is a function of the input.
struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn contract(&mut self, v: usize, u: usize) {
        let b = self.lca(v, u);
        self.in_blossom.iter_mut().for_each(|x| *x = false);
        self.mark_path(v, b, u);
        self.mark_path(u, b, v);
        for i in 0..self.g.n() {
            if self.in_blossom[self.base[i]] {
                self.base[i] = b;
                if !self.used[i] {
                    self.used[i] = true;
                    self.queue.push_back(i);
                }
            }
        }
    }

    /// Searches for an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for i in 0..n {
            self.base[i] = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &u in self.g.neighbors(v) {
                if self.base[v] == self.base[u] || self.mate[v] == u {
                    continue;
                }
                if u == root || (self.mate[u] != NONE && self.parent[self.mate[u]] != NONE) {
                    self.contract(v, u);
                } else if self.parent[u] == NONE {
                    self.parent[u] = v;
                    if self.mate[u] == NONE {
                        return Some(u);
                    }
                    let w = self.mate[u];
                    self.used[w] = true;
                    self.queue.push_back(w);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn run(mut self) -> Vec<usize> {
        for root in 0..self.g.n() {
            if self.mate[root] == NONE {
                if let Some(end) = self.find_path(root) {
                    self.augment(end);
                }
            }
        }
        self.mate
    }
}

fn matching_from_mates(mate: &[usize]) -> Matching {
    let edges: EdgeSet = mate
        .iter()
        .enumerate()
        .filter(|&(v, &w)| w != NONE && v < w)
        .map(|(v, &w)| Edge::new(v, w))
        .collect();
    Matching::new(edges).expect("mate array describes a matching")
}

/// μ(G) and a maximum matching via the blossom algorithm.
pub fn maximum_matching(g: &Graph) -> MaximumMatching {
    let witness = matching_from_mates(&Blossom::new(g).run());
    MaximumMatching {
        mu: witness.len(),
        witness,
    }
}

/// μ(G) by exhaustive search over matchings; an oracle for [`maximum_matching`].
pub fn maximum_matching_bruteforce(g: &Graph, limits: &Limits) -> Result<usize> {
    if g.n() > limits.bruteforce_max_n {
        return Err(Error::capacity(format!(
            "exhaustive matching is limited to {} vertices, graph has {}",
            limits.bruteforce_max_n,
            g.n()
        )));
    }
    fn go(edges: &[Edge], i: usize, used: u64, size: usize, best: &mut usize) {
        if size + (edges.len() - i) <= *best {
            return;
        }
        if i == edges.len() {
            *best = size;
            return;
        }
        let e = edges[i];
        let mask = (1u64 << e.u()) | (1u64 << e.v());
        if used & mask == 0 {
            go(edges, i + 1, used | mask, size + 1, best);
        }
        go(edges, i + 1, used, size, best);
    }
    let mut best = 0;
    go(g.edges(), 0, 0, 0, &mut best);
    Ok(best)
}

/// Counts perfect matchings up to two by backtracking on the lowest
/// unmatched vertex. The graph on zero vertices has exactly one (empty) perfect
/// matching.
pub fn perfect_matching_status(g: &Graph) -> PerfectMatchingStatus {
    let n = g.n();
    let zero = PerfectMatchingStatus {
        count: PerfectMatchingCount::Zero,
        witnesses: Vec::new(),
    };
    if n % 2 == 1 || 2 * maximum_matching(g).mu < n {
        return zero;
    }

    struct Search<'a> {
        g: &'a Graph,
        mate: Vec<usize>,
        found: Vec<Matching>,
    }

    impl Search<'_> {
        fn dead_end(&self) -> bool {
            (0..self.g.n()).any(|v| {
                self.mate[v] == NONE && self.g.neighbors(v).iter().all(|&w| self.mate[w] != NONE)
            })
        }

        fn go(&mut self) {
            if self.found.len() >= 2 {
                return;
            }
            let Some(v) = (0..self.g.n()).find(|&v| self.mate[v] == NONE) else {
                self.found.push(matching_from_mates(&self.mate));
                return;
            };
            if self.dead_end() {
                return;
            }
            for i in 0..self.g.degree(v) {
                let w = self.g.neighbors(v)[i];
                if self.mate[w] != NONE {
                    continue;
                }
                self.mate[v] = w;
                self.mate[w] = v;
                self.go();
                self.mate[v] = NONE;
                self.mate[w] = NONE;
                if self.found.len() >= 2 {
                    return;
                }
            }
        }
    }

    let mut search = Search {
        g,
        mate: vec![NONE; n],
        found: Vec::new(),
    };
    search.go();
    let count = match search.found.len() {
        0 => PerfectMatchingCount::Zero,
        1 => PerfectMatchingCount::One,
        _ => PerfectMatchingCount::Many,
    };
    PerfectMatchingStatus {
        count,
        witnesses: search.found,
    }
}

/// Walks every maximum matching (each exactly once) and hands it to `visit`;
/// stops as soon as `visit` returns false.
fn walk_maximum_matchings(g: &Graph, mu: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    struct Walk<'a, F> {
        g: &'a Graph,
        mate: Vec<usize>,
        skipped: Vec<bool>,
        visit: F,
        stop: bool,
    }

    impl<F: FnMut(&[usize]) -> bool> Walk<'_, F> {
        fn go(&mut self, slack: usize) {
            if self.stop {
                return;
            }
            let n = self.g.n();
            let Some(v) = (0..n).find(|&v| self.mate[v] == NONE && !self.skipped[v]) else {
                if !(self.visit)(&self.mate) {
                    self.stop = true;
                }
                return;
            };
            for i in 0..self.g.degree(v) {
                let w = self.g.neighbors(v)[i];
                if self.mate[w] != NONE || self.skipped[w] {
                    continue;
                }
                self.mate[v] = w;
                self.mate[w] = v;
                self.go(slack);
                self.mate[v] = NONE;
                self.mate[w] = NONE;
                if self.stop {
                    return;
                }
            }
            if slack > 0 {
                self.skipped[v] = true;
                self.go(slack - 1);
                self.skipped[v] = false;
            }
        }
    }

    let n = g.n();
    let mut walk = Walk {
        g,
        mate: vec![NONE; n],
        skipped: vec![false; n],
        visit: &mut visit,
        stop: false,
    };
    walk.go(n - 2 * mu);
}

fn enumeration_allowed(g: &Graph, limits: &Limits) -> Result<()> {
    if g.n() > limits.matching_enum_max_n {
        return Err(Error::capacity(format!(
            "maximum matching enumeration is limited to {} vertices, graph has {}",
            limits.matching_enum_max_n,
            g.n()
        )));
    }
    Ok(())
}

/// Every maximum matching of `g`, at most `cap` of them.
pub fn all_maximum_matchings(g: &Graph, limits: &Limits, cap: usize) -> Result<Vec<Matching>> {
    enumeration_allowed(g, limits)?;
    let mu = maximum_matching(g).mu;
    let mut out = Vec::new();
    let mut overflow = false;
    walk_maximum_matchings(g, mu, |mate| {
        if out.len() == cap {
            overflow = true;
            return false;
        }
        out.push(matching_from_mates(mate));
        true
    });
    if overflow {
        return Err(Error::capacity(format!(
            "more than {cap} maximum matchings"
        )));
    }
    Ok(out)
}

/// Intersection of all maximum matchings, by enumeration with an early exit
/// once the running intersection is empty.
pub fn maximum_matchings_intersection(g: &Graph, limits: &Limits) -> Result<EdgeSet> {
    enumeration_allowed(g, limits)?;
    let mu = maximum_matching(g).mu;
    let mut common: Option<Vec<usize>> = None;
    walk_maximum_matchings(g, mu, |mate| {
        match &mut common {
            None => common = Some(mate.to_vec()),
            Some(c) => {
                for v in 0..c.len() {
                    if c[v] != mate[v] {
                        c[v] = NONE;
                    }
                }
            }
        }
        common.as_ref().unwrap().iter().any(|&w| w != NONE)
    });
    Ok(common
        .map(|c| matching_from_mates(&c).into_edges())
        .unwrap_or_default())
}

/// Edges e with μ(G−e) < μ(G). When `n` is within
/// `limits.matching_enum_max_n` the intersection of all maximum matchings is
/// computed as well and must agree.
pub fn forced_matching_edges(g: &Graph, limits: &Limits) -> Result<EdgeSet> {
    let max = maximum_matching(g);
    let by_deletion: EdgeSet = max
        .witness
        .edges()
        .iter()
        .filter(|&e| {
            let h = g
                .delete_edge(e)
                .expect("matching edge belongs to the graph");
            maximum_matching(&h).mu < max.mu
        })
        .collect();
    if g.n() <= limits.matching_enum_max_n {
        let by_intersection = maximum_matchings_intersection(g, limits)?;
        if by_intersection != by_deletion {
            return Err(Error::invariant(format!(
                "edges whose deletion lowers the matching number {by_deletion} differ from \
                 the intersection of all maximum matchings {by_intersection}"
            )));
        }
    }
    Ok(by_deletion)
}

pub fn matching_report(g: &Graph, limits: &Limits) -> Result<MatchingReport> {
    let max = maximum_matching(g);
    let status = perfect_matching_status(g);
    let forced_edges = forced_matching_edges(g, limits)?;
    if status.is_unique() && forced_edges != *status.witnesses[0].edges() {
        return Err(Error::invariant(
            "a unique perfect matching must coincide with the forced edges",
        ));
    }
    Ok(MatchingReport {
        mu: max.mu,
        witness: max.witness,
        perfect_matching_count: status.count,
        forced_edges,
    })
}
