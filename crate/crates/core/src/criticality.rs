//! α-critical edges, μ-critical edges and α-critical vertices.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, Graph, VertexSet};
use crate::solvers::{forced_matching_edges, maximum_matching, stability_number, Limits};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    pub alpha_critical_edges: EdgeSet,
    pub eta: usize,
    pub mu_critical_edges: EdgeSet,
    pub alpha_critical_vertices: VertexSet,
}

/// Edges whose deletion raises α, found by solving α(G−e) for every edge.
pub fn alpha_critical_edges(g: &Graph, limits: &Limits) -> Result<EdgeSet> {
    let alpha = stability_number(g, limits)?;
    alpha_critical_among(g, g.edges().iter().copied(), alpha, limits)
}

fn alpha_critical_among(
    g: &Graph,
    candidates: impl Iterator<Item = Edge>,
    alpha: usize,
    limits: &Limits,
) -> Result<EdgeSet> {
    let mut out = Vec::new();
    for e in candidates {
        let h = g.delete_edge(e)?;
        if stability_number(&h, limits)? > alpha {
            out.push(e);
        }
    }
    Ok(out.into_iter().collect())
}

/// α-critical edges of a König-Egerváry graph, testing only μ-critical edges.
/// Every α-critical edge of such a graph is μ-critical, so the result equals
/// [`alpha_critical_edges`]; fails with a precondition error otherwise.
pub fn alpha_critical_edges_ke(g: &Graph, limits: &Limits) -> Result<EdgeSet> {
    let alpha = stability_number(g, limits)?;
    let mu = maximum_matching(g).mu;
    if alpha + mu != g.n() {
        return Err(Error::precondition("not a König-Egerváry graph"));
    }
    let mu_critical = forced_matching_edges(g, limits)?;
    alpha_critical_among(g, mu_critical.iter(), alpha, limits)
}

/// Edges whose deletion lowers μ; equal to the intersection of all maximum matchings.
pub fn mu_critical_edges(g: &Graph, limits: &Limits) -> Result<EdgeSet> {
    forced_matching_edges(g, limits)
}

/// Vertices whose deletion lowers α.
pub fn alpha_critical_vertices(g: &Graph, limits: &Limits) -> Result<VertexSet> {
    let alpha = stability_number(g, limits)?;
    let mut out = VertexSet::new();
    for v in 0..g.n() {
        let (h, _) = g.delete_vertices(&VertexSet::singleton(v))?;
        if stability_number(&h, limits)? < alpha {
            out.insert(v);
        }
    }
    Ok(out)
}

/// Computes all three sets. For König-Egerváry inputs the μ-critical shortcut
/// for α-critical edges is run too and must agree with the per-edge solve.
pub fn criticality_report(g: &Graph, limits: &Limits) -> Result<CriticalityReport> {
    let alpha_critical_edges = alpha_critical_edges(g, limits)?;
    let mu_critical_edges = mu_critical_edges(g, limits)?;
    let alpha = stability_number(g, limits)?;
    if alpha + maximum_matching(g).mu == g.n() {
        let fast = alpha_critical_edges_ke(g, limits)?;
        if fast != alpha_critical_edges {
            return Err(Error::invariant(format!(
                "α-critical edges by full scan {alpha_critical_edges} differ from the \
                 μ-critical shortcut {fast}"
            )));
        }
    }
    Ok(CriticalityReport {
        eta: alpha_critical_edges.len(),
        alpha_critical_edges,
        mu_critical_edges,
        alpha_critical_vertices: alpha_critical_vertices(g, limits)?,
    })
}
