use serde::Serialize;

use super::g_zero_from_core;
use crate::criticality::{alpha_critical_edges, mu_critical_edges};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, VertexSet};
use crate::solvers::{
    enumerate_maximum_stable_sets, maximum_matching, perfect_matching_status, Limits,
    PerfectMatchingCount,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Equalities {
    pub xi_plus_eta_equals_alpha: bool,
    pub sigma_plus_eta_equals_mu: bool,
    pub xi_plus_two_eta_plus_sigma_equals_n: bool,
}

impl Equalities {
    pub fn all(&self) -> bool {
        self.xi_plus_eta_equals_alpha
            && self.sigma_plus_eta_equals_mu
            && self.xi_plus_two_eta_plus_sigma_equals_n
    }

    pub fn none(&self) -> bool {
        !self.xi_plus_eta_equals_alpha
            && !self.sigma_plus_eta_equals_mu
            && !self.xi_plus_two_eta_plus_sigma_equals_n
    }

    pub fn as_array(&self) -> [bool; 3] {
        [
            self.xi_plus_eta_equals_alpha,
            self.sigma_plus_eta_equals_mu,
            self.xi_plus_two_eta_plus_sigma_equals_n,
        ]
    }
}

/// Every parameter of one graph. Field order is the JSON key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParameterReport {
    pub n: usize,
    pub m: usize,
    pub alpha: usize,
    pub mu: usize,
    pub xi: usize,
    pub sigma: usize,
    pub eta: usize,
    pub is_ke: bool,
    pub is_bipartite: bool,
    pub is_tree: bool,
    pub core: VertexSet,
    pub anticore: VertexSet,
    pub alpha_critical_edges: EdgeSet,
    pub mu_critical_edges: EdgeSet,
    pub g0_size: usize,
    /// Perfect matchings of G0: 0, 1, or 2 for "two or more".
    pub g0_pm_status: PerfectMatchingCount,
    pub equalities: Equalities,
}

impl ParameterReport {
    /// ξ + η ≤ α, σ + η ≤ μ, ξ + 2η + σ ≤ n.
    pub fn inequalities(&self) -> [bool; 3] {
        [
            self.xi + self.eta <= self.alpha,
            self.sigma + self.eta <= self.mu,
            self.xi + 2 * self.eta + self.sigma <= self.n,
        ]
    }
}

/// Computes the full report. For König-Egerváry graphs it also checks
/// α + σ = μ + ξ and the three inequalities before returning.
pub fn parameter_report(g: &Graph, limits: &Limits) -> Result<ParameterReport> {
    let omega = enumerate_maximum_stable_sets(g, limits)?;
    let mu = maximum_matching(g).mu;
    let alpha_critical = alpha_critical_edges(g, limits)?;
    let mu_critical = mu_critical_edges(g, limits)?;
    let (g0, _) = g_zero_from_core(g, &omega.core)?;

    let (n, alpha, xi, sigma, eta) = (
        g.n(),
        omega.alpha,
        omega.xi,
        omega.sigma,
        alpha_critical.len(),
    );
    let report = ParameterReport {
        n,
        m: g.m(),
        alpha,
        mu,
        xi,
        sigma,
        eta,
        is_ke: alpha + mu == n,
        is_bipartite: g.is_bipartite(),
        is_tree: g.is_tree(),
        core: omega.core,
        anticore: omega.anticore,
        alpha_critical_edges: alpha_critical,
        mu_critical_edges: mu_critical,
        g0_size: g0.n(),
        g0_pm_status: perfect_matching_status(&g0).count,
        equalities: Equalities {
            xi_plus_eta_equals_alpha: xi + eta == alpha,
            sigma_plus_eta_equals_mu: sigma + eta == mu,
            xi_plus_two_eta_plus_sigma_equals_n: xi + 2 * eta + sigma == n,
        },
    };

    if report.is_ke {
        if alpha + sigma != mu + xi {
            return Err(Error::invariant(format!(
                "König-Egerváry graph with α + σ = {} but μ + ξ = {}",
                alpha + sigma,
                mu + xi
            )));
        }
        if report.inequalities().contains(&false) {
            return Err(Error::invariant(format!(
                "König-Egerváry graph violates ξ+η ≤ α, σ+η ≤ μ or ξ+2η+σ ≤ n: \
                 (α, μ, ξ, σ, η) = ({alpha}, {mu}, {xi}, {sigma}, {eta})"
            )));
        }
    }
    Ok(report)
}
