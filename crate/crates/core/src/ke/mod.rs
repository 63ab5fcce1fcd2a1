//! König-Egerváry recognition and the structure built on it: the `S * H`
//! decomposition, the reduced graph `G0 = G - N[core(G)]`, the S0
//! construction on `G0`, and the consolidated parameter report.

mod report;
mod s0;

pub use report::{parameter_report, Equalities, ParameterReport};
pub use s0::{s0_procedure, S0Step, S0Trace};

use serde::Serialize;

use crate::criticality::alpha_critical_edges;
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, Matching, VertexSet};
use crate::solvers::{
    enumerate_maximum_stable_sets, lex_smallest_maximum_stable_set, maximum_matching,
    perfect_matching_status, stability_number, Limits,
};

/// α(G) + μ(G) = n(G).
pub fn is_koenig_egervary(g: &Graph, limits: &Limits) -> Result<bool> {
    Ok(stability_number(g, limits)? + maximum_matching(g).mu == g.n())
}

fn require_ke(g: &Graph, limits: &Limits) -> Result<()> {
    if is_koenig_egervary(g, limits)? {
        Ok(())
    } else {
        Err(Error::precondition("not a König-Egerváry graph"))
    }
}

/// Edges with exactly one endpoint in `s`.
pub fn cut_edges(g: &Graph, s: &VertexSet) -> EdgeSet {
    g.edges()
        .iter()
        .copied()
        .filter(|e| s.contains(e.u()) != s.contains(e.v()))
        .collect()
}

/// True iff `edges` is a matching of `g` that no edge of `g` can extend.
pub fn is_maximal_matching(g: &Graph, edges: &EdgeSet) -> bool {
    if !edges.is_matching() || !edges.iter().all(|e| g.contains_edge(e)) {
        return false;
    }
    let saturated = edges.vertices();
    g.edges()
        .iter()
        .all(|e| saturated.contains(e.u()) || saturated.contains(e.v()))
}

/// `G = S * H`: a maximum stable set `S`, the rest `H = V - S` with `|H| = μ`,
/// and a maximum matching inside the cut `(S, H)` saturating `H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KeDecomposition {
    pub s: VertexSet,
    pub h_vertices: VertexSet,
    pub cut_matching: Matching,
}

/// Splits a König-Egerváry graph around its lexicographically smallest
/// maximum stable set. The blossom matching is checked to lie inside the cut
/// rather than assumed to.
pub fn ke_decompose(g: &Graph, limits: &Limits) -> Result<KeDecomposition> {
    require_ke(g, limits)?;
    let s = lex_smallest_maximum_stable_set(g, limits)?;
    let h_vertices = s.complement(g.n());
    let matching = maximum_matching(g).witness;
    let cut = cut_edges(g, &s);
    if let Some(e) = matching.edges().iter().find(|&e| !cut.contains(e)) {
        return Err(Error::invariant(format!(
            "maximum matching edge {e} lies outside the cut of S = {s}"
        )));
    }
    if matching.len() != h_vertices.len() || !h_vertices.iter().all(|v| matching.saturates(v)) {
        return Err(Error::invariant(format!(
            "maximum matching of size {} does not saturate H = {h_vertices}",
            matching.len()
        )));
    }
    Ok(KeDecomposition {
        s,
        h_vertices,
        cut_matching: matching,
    })
}

/// `G0 = G - N[core(G)]`, relabelled densely; `map[new] = old`.
pub fn g_zero(g: &Graph, limits: &Limits) -> Result<(Graph, Vec<usize>)> {
    let core = enumerate_maximum_stable_sets(g, limits)?.core;
    g_zero_from_core(g, &core)
}

pub(crate) fn g_zero_from_core(g: &Graph, core: &VertexSet) -> Result<(Graph, Vec<usize>)> {
    let closed = g.neighborhood(core, true)?;
    g.delete_vertices(&closed)
}

/// The five clauses of the unique-perfect-matching equivalence on `G0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Th2Evaluation {
    /// G0 has exactly one perfect matching.
    pub g0_unique_perfect_matching: bool,
    /// The α-critical edges of G0 form an inclusion-maximal matching of G0.
    pub g0_critical_edges_maximal_matching: bool,
    pub xi_plus_eta_equals_alpha: bool,
    pub sigma_plus_eta_equals_mu: bool,
    pub xi_plus_two_eta_plus_sigma_equals_n: bool,
    /// All five clauses agree.
    pub consistent: bool,
}

impl Th2Evaluation {
    pub fn clauses(&self) -> [bool; 5] {
        [
            self.g0_unique_perfect_matching,
            self.g0_critical_edges_maximal_matching,
            self.xi_plus_eta_equals_alpha,
            self.sigma_plus_eta_equals_mu,
            self.xi_plus_two_eta_plus_sigma_equals_n,
        ]
    }
}

pub fn th2_evaluate(g: &Graph, limits: &Limits) -> Result<Th2Evaluation> {
    require_ke(g, limits)?;
    let omega = enumerate_maximum_stable_sets(g, limits)?;
    let mu = maximum_matching(g).mu;
    let eta = alpha_critical_edges(g, limits)?.len();
    let (g0, _) = g_zero_from_core(g, &omega.core)?;
    let g0_critical = alpha_critical_edges(&g0, limits)?;

    let (alpha, xi, sigma, n) = (omega.alpha, omega.xi, omega.sigma, g.n());
    let mut eval = Th2Evaluation {
        g0_unique_perfect_matching: perfect_matching_status(&g0).is_unique(),
        g0_critical_edges_maximal_matching: is_maximal_matching(&g0, &g0_critical),
        xi_plus_eta_equals_alpha: xi + eta == alpha,
        sigma_plus_eta_equals_mu: sigma + eta == mu,
        xi_plus_two_eta_plus_sigma_equals_n: xi + 2 * eta + sigma == n,
        consistent: false,
    };
    let clauses = eval.clauses();
    eval.consistent = clauses.iter().all(|&c| c == clauses[0]);
    Ok(eval)
}

/// A maximum stable set whose cut spans a forest, with that cut.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForestWitness {
    pub s: VertexSet,
    pub cut: EdgeSet,
}

/// First `S ∈ Ω(G)` in lexicographic order such that `(S, V - S)` is acyclic.
pub fn forest_condition(g: &Graph, limits: &Limits) -> Result<Option<ForestWitness>> {
    require_ke(g, limits)?;
    for s in enumerate_maximum_stable_sets(g, limits)?.omega {
        let cut = cut_edges(g, &s);
        if g.spans_forest(&cut)? {
            return Ok(Some(ForestWitness { s, cut }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    fn lim() -> Limits {
        Limits::default()
    }

    fn k3_plus_e() -> Graph {
        Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap()
    }

    fn w1() -> Graph {
        Graph::from_edge_list(6, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5), (3, 5)]).unwrap()
    }

    // a, b, c, d, x, y, z = 0..6
    fn forest_graph() -> Graph {
        Graph::from_edge_list(7, [(0, 4), (1, 4), (2, 4), (3, 4), (2, 5), (3, 5), (3, 6)]).unwrap()
    }

    // a, b, c, d, x, y = 0..5
    fn forest_counterexample() -> Graph {
        Graph::from_edge_list(6, [(0, 5), (1, 4), (2, 3), (4, 5), (3, 4), (1, 5), (0, 4)]).unwrap()
    }

    #[test]
    fn recognition() {
        assert!(is_koenig_egervary(&Graph::cycle(6).unwrap(), &lim()).unwrap());
        assert!(is_koenig_egervary(&Graph::star(5), &lim()).unwrap());
        assert!(is_koenig_egervary(&k3_plus_e(), &lim()).unwrap());
        assert!(!is_koenig_egervary(&Graph::cycle(5).unwrap(), &lim()).unwrap());
        assert!(!is_koenig_egervary(&w1(), &lim()).unwrap());
    }

    #[test]
    fn decompositions() {
        let d = ke_decompose(&Graph::path(2), &lim()).unwrap();
        assert_eq!(d.s, VertexSet::from([0]));
        assert_eq!(d.h_vertices, VertexSet::from([1]));
        assert_eq!(d.cut_matching.len(), 1);

        let d = ke_decompose(&k3_plus_e(), &lim()).unwrap();
        assert_eq!(d.s.len(), 2);
        assert!(d.s.contains(3));
        assert_eq!(d.h_vertices.len(), 2);
        assert_eq!(d.cut_matching.len(), 2);

        let d = ke_decompose(&Graph::cycle(6).unwrap(), &lim()).unwrap();
        assert_eq!(d.s, VertexSet::from([0, 2, 4]));
        assert_eq!(d.cut_matching.len(), 3);

        assert!(matches!(
            ke_decompose(&Graph::cycle(5).unwrap(), &lim()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn reduced_graphs() {
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(g_zero(&c6, &lim()).unwrap().0, c6);
        let (g0, map) = g_zero(&k3_plus_e(), &lim()).unwrap();
        assert_eq!(g0, Graph::path(2));
        assert_eq!(map, vec![1, 2]);
        let (g0, _) = g_zero(&Graph::star(3), &lim()).unwrap();
        assert_eq!(g0.n(), 0);
    }

    #[test]
    fn th2_on_small_graphs() {
        let c4 = th2_evaluate(&Graph::cycle(4).unwrap(), &lim()).unwrap();
        assert_eq!(c4.clauses(), [false; 5]);
        assert!(c4.consistent);
        let k = th2_evaluate(&k3_plus_e(), &lim()).unwrap();
        assert_eq!(k.clauses(), [true; 5]);
        let c6 = th2_evaluate(&Graph::cycle(6).unwrap(), &lim()).unwrap();
        assert_eq!(c6.clauses(), [false; 5]);
        let star = th2_evaluate(&Graph::star(3), &lim()).unwrap();
        assert_eq!(star.clauses(), [true; 5]);
        assert!(matches!(
            th2_evaluate(&w1(), &lim()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn forest_witnesses() {
        let tree = Graph::from_edge_list(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert!(forest_condition(&tree, &lim()).unwrap().is_some());

        let g = forest_graph();
        let w = forest_condition(&g, &lim()).unwrap().unwrap();
        assert_eq!(w.s, VertexSet::from([0, 1, 2, 6]));
        // {a, b, y, z} also works; {a, b, c, d} does not.
        assert!(g
            .spans_forest(&cut_edges(&g, &VertexSet::from([0, 1, 5, 6])))
            .unwrap());
        assert!(!g
            .spans_forest(&cut_edges(&g, &VertexSet::from([0, 1, 2, 3])))
            .unwrap());

        assert!(forest_condition(&forest_counterexample(), &lim())
            .unwrap()
            .is_none());
    }

    #[test]
    fn maximal_matching_predicate() {
        let p4 = Graph::path(4);
        let middle: EdgeSet = [Edge::new(1, 2)].into_iter().collect();
        assert!(is_maximal_matching(&p4, &middle));
        let first: EdgeSet = [Edge::new(0, 1)].into_iter().collect();
        assert!(!is_maximal_matching(&p4, &first));
        assert!(is_maximal_matching(&Graph::empty(0), &EdgeSet::new()));
        assert!(is_maximal_matching(&Graph::empty(3), &EdgeSet::new()));
    }
}
