//! Simple undirected graphs over dense vertex ids `0..n`, plus the set types
//! every analysis passes around.
//!
//! A [`Graph`] is immutable once built. Deletions return a new graph; vertex
//! deletion relabels the survivors densely and hands back the map.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// An undirected edge stored canonically with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge(usize, usize);

impl Edge {
    /// Canonical edge between two distinct vertices.
    ///
    /// Panics if `a == b`; use [`Graph::from_edge_list`] for untrusted input.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn u(self) -> usize {
        self.0
    }

    pub fn v(self) -> usize {
        self.1
    }

    pub fn endpoints(self) -> [usize; 2] {
        [self.0, self.1]
    }

    pub fn touches(self, x: usize) -> bool {
        self.0 == x || self.1 == x
    }

    pub fn shares_endpoint(self, other: Edge) -> bool {
        self.touches(other.0) || self.touches(other.1)
    }

    /// The endpoint that is not `x`. Panics if `x` is not an endpoint.
    pub fn other(self, x: usize) -> usize {
        if self.0 == x {
            self.1
        } else {
            assert_eq!(self.1, x, "{x} is not an endpoint of {self}");
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    /// Every vertex `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn from_mask(mask: u64) -> Self {
        let mut out = Vec::with_capacity(mask.count_ones() as usize);
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            out.push(v);
            rest &= rest - 1;
        }
        VertexSet(out)
    }

    /// Bitmask form; only meaningful when every member is below 64.
    pub fn to_mask(&self) -> u64 {
        self.0.iter().fold(0u64, |acc, &v| acc | (1u64 << v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    /// `{0..n} - self`.
    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet((0..n).filter(|&v| !self.contains(v)).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut members: Vec<usize> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(members: Vec<usize>) -> Self {
        members.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(members: [usize; N]) -> Self {
        members.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Sorted, duplicate-free set of canonical edges.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct EdgeSet(Vec<Edge>);

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Edge] {
        &self.0
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.iter().all(|e| other.contains(e))
    }

    pub fn intersection(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.iter().filter(|&e| other.contains(e)).collect())
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.iter().filter(|&e| !other.contains(e)).collect())
    }

    /// Every vertex touched by some member edge.
    pub fn vertices(&self) -> VertexSet {
        self.iter().flat_map(Edge::endpoints).collect()
    }

    /// True iff no two members share an endpoint.
    pub fn is_matching(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.iter()
            .flat_map(Edge::endpoints)
            .all(|v| seen.insert(v))
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        let mut members: Vec<Edge> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        EdgeSet(members)
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// A set of pairwise non-incident edges.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Matching(EdgeSet);

impl Matching {
    pub fn new(edges: EdgeSet) -> Result<Self> {
        if !edges.is_matching() {
            return Err(Error::input(format!(
                "{edges} has two edges sharing an endpoint"
            )));
        }
        Ok(Matching(edges))
    }

    pub fn empty() -> Self {
        Matching(EdgeSet::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.0
    }

    pub fn into_edges(self) -> EdgeSet {
        self.0
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.0.contains(e)
    }

    /// Partner of each vertex in `0..n`, if matched.
    pub fn mates(&self, n: usize) -> Vec<Option<usize>> {
        let mut mate = vec![None; n];
        for e in self.0.iter() {
            mate[e.u()] = Some(e.v());
            mate[e.v()] = Some(e.u());
        }
        mate
    }

    pub fn saturates(&self, v: usize) -> bool {
        self.0.iter().any(|e| e.touches(v))
    }

    pub fn is_perfect_for(&self, n: usize) -> bool {
        2 * self.len() == n
    }
}

/// Outcome of a bipartiteness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// Side (0 or 1) of every vertex.
    Colouring(Vec<u8>),
    /// Vertices of an odd cycle, in cycle order.
    OddCycle(Vec<usize>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Colouring(_))
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph from unordered vertex pairs. Duplicates collapse and
    /// pair order is irrelevant.
    pub fn from_edge_list<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut edges = Vec::new();
        for (a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::input(format!(
                    "edge ({a}, {b}) names a vertex outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::input(format!("self-loop at vertex {a}")));
            }
            edges.push(Edge::new(a, b));
        }
        Ok(Self::from_canonical(n, edges))
    }

    fn from_canonical(n: usize, mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let mut adjacency = vec![Vec::new(); n];
        for e in &edges {
            adjacency[e.u()].push(e.v());
            adjacency[e.v()].push(e.u());
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            n,
            adjacency,
            edges,
        }
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_canonical(n, Vec::new())
    }

    /// Path on `n` vertices `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_canonical(n, (1..n).map(|i| Edge::new(i - 1, i)).collect())
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::input(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut edges: Vec<Edge> = (1..n).map(|i| Edge::new(i - 1, i)).collect();
        edges.push(Edge::new(0, n - 1));
        Ok(Self::from_canonical(n, edges))
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v)))
            .collect();
        Self::from_canonical(n, edges)
    }

    /// Star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_canonical(leaves + 1, (1..=leaves).map(|v| Edge::new(0, v)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_set(&self) -> EdgeSet {
        EdgeSet(self.edges.clone())
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub(crate) fn check_vertices(&self, s: &VertexSet) -> Result<()> {
        match s.iter().find(|&v| v >= self.n) {
            Some(v) => Err(Error::input(format!("vertex {v} outside 0..{}", self.n))),
            None => Ok(()),
        }
    }

    pub(crate) fn check_edges(&self, w: &EdgeSet) -> Result<()> {
        match w.iter().find(|&e| !self.contains_edge(e)) {
            Some(e) => Err(Error::input(format!("{e} is not an edge of the graph"))),
            None => Ok(()),
        }
    }

    /// `G - e`; vertex set unchanged.
    pub fn delete_edge(&self, e: Edge) -> Result<Graph> {
        if !self.contains_edge(e) {
            return Err(Error::input(format!("{e} is not an edge of the graph")));
        }
        let edges = self.edges.iter().copied().filter(|&f| f != e).collect();
        Ok(Self::from_canonical(self.n, edges))
    }

    /// `G + e` for an edge between existing vertices.
    pub fn with_edge(&self, e: Edge) -> Result<Graph> {
        if e.v() >= self.n {
            return Err(Error::input(format!(
                "{e} names a vertex outside 0..{}",
                self.n
            )));
        }
        let mut edges = self.edges.clone();
        edges.push(e);
        Ok(Self::from_canonical(self.n, edges))
    }

    /// `G - W`: the subgraph induced by the remaining vertices, relabelled
    /// densely in increasing order. `map[new] = old`.
    pub fn delete_vertices(&self, w: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_vertices(w)?;
        let keep = w.complement(self.n);
        Ok(self.induced(&keep))
    }

    /// Subgraph induced by `keep` (assumed in range), relabelled densely.
    pub(crate) fn induced(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = keep.iter().collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &old) in map.iter().enumerate() {
            new_id[old] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| new_id[e.u()] != usize::MAX && new_id[e.v()] != usize::MAX)
            .map(|e| Edge::new(new_id[e.u()], new_id[e.v()]))
            .collect();
        (Self::from_canonical(map.len(), edges), map)
    }

    /// `N(A)` when `closed` is false, `N[A] = A ∪ N(A)` otherwise.
    pub fn neighborhood(&self, a: &VertexSet, closed: bool) -> Result<VertexSet> {
        self.check_vertices(a)?;
        let open = a.iter().flat_map(|v| self.adjacency[v].iter().copied());
        Ok(if closed {
            open.chain(a.iter()).collect()
        } else {
            open.collect()
        })
    }

    /// True iff `s` induces no edge.
    pub fn is_stable(&self, s: &VertexSet) -> Result<bool> {
        self.check_vertices(s)?;
        Ok(s.iter()
            .all(|v| self.adjacency[v].iter().all(|&w| !s.contains(w))))
    }

    /// BFS 2-colouring, or an odd cycle if none exists.
    pub fn bipartition(&self) -> Bipartition {
        let mut colour: Vec<Option<u8>> = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            if colour[root].is_some() {
                continue;
            }
            colour[root] = Some(0);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for &w in &self.adjacency[u] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(1 - cu);
                            parent[w] = u;
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => {
                            return Bipartition::OddCycle(odd_cycle(&parent, u, w))
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Bipartition::Colouring(colour.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_bipartite()
    }

    /// True iff the partial graph `(V, w)` is acyclic.
    pub fn spans_forest(&self, w: &EdgeSet) -> Result<bool> {
        self.check_edges(w)?;
        let mut dsu = DisjointSets::new(self.n);
        Ok(w.iter().all(|e| dsu.union(e.u(), e.v())))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut members = vec![root];
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            out.push(VertexSet::from(members));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected, acyclic, at least one vertex.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() + 1 == self.n && self.is_connected()
    }

    /// Adjacency as bitmasks; `None` when `n > 64`.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(
            self.adjacency
                .iter()
                .map(|list| list.iter().fold(0u64, |acc, &w| acc | (1u64 << w)))
                .collect(),
        )
    }
}

// Both u and w were reached by BFS with the same colour, so walking parents up
// to their meeting point gives two paths of equal parity plus the edge uw.
fn odd_cycle(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let ancestors = |mut x: usize| {
        let mut chain = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            chain.push(x);
        }
        chain
    };
    let pu = ancestors(u);
    let pw = ancestors(w);
    let meet = *pu.iter().find(|x| pw.contains(x)).unwrap();
    let mut cycle: Vec<usize> = pu.iter().copied().take_while(|&x| x != meet).collect();
    cycle.push(meet);
    let back: Vec<usize> = pw.iter().copied().take_while(|&x| x != meet).collect();
    cycle.extend(back.into_iter().rev());
    cycle
}

pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; false if they were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}
