//! One executable check per known statement about α- and μ-critical edges.
//!
//! A check is `NotApplicable` when its input class (König-Egerváry, tree,
//! bipartite, connected, size cap) does not hold. Hypotheses inside the
//! statement itself are treated as implications, so an input that does not
//! meet them passes vacuously.

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::criticality::{alpha_critical_edges, mu_critical_edges};
use crate::edgelist;
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, Graph, VertexSet};
use crate::ke::{
    forest_condition, g_zero_from_core, is_maximal_matching, s0_procedure, th2_evaluate,
};
use crate::solvers::{
    enumerate_maximum_stable_sets, maximum_matching, perfect_matching_status, stability_number,
    Limits, MaximumMatching, PerfectMatchingStatus, StableSetReport,
};

macro_rules! check_ids {
    ($($variant:ident => $name:literal),* $(,)?) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum CheckId {
            $($variant),*
        }

        impl CheckId {
            /// Every check including the negative controls.
            pub const EVERY: &'static [CheckId] = &[$(CheckId::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(CheckId::$variant => $name),*
                }
            }
        }
    };
}

check_ids! {
    T1i => "T1i",
    T1ii => "T1ii",
    T1iii => "T1iii",
    CK2 => "CK2",
    BHP => "BHP",
    P3 => "P3",
    C4 => "C4",
    L1 => "L1",
    C3 => "C3",
    P5i => "P5i",
    P5ii => "P5ii",
    P5iii => "P5iii",
    NC => "NC",
    P9i => "P9i",
    P9ii => "P9ii",
    P9iii => "P9iii",
    C2 => "C2",
    L6i => "L6i",
    L6ii => "L6ii",
    L6iii => "L6iii",
    P7 => "P7",
    P10 => "P10",
    L3 => "L3",
    T2 => "T2",
    C6 => "C6",
    P4 => "P4",
    C1 => "C1",
    C5 => "C5",
    H1 => "H1",
    P7Unguarded => "P7-unguarded",
    P3Unguarded => "P3-unguarded",
}

impl CheckId {
    /// Deliberately unguarded variants that must fail on known inputs.
    pub const NEGATIVE_CONTROLS: &'static [CheckId] = &[CheckId::P7Unguarded, CheckId::P3Unguarded];

    /// The catalogue proper, without negative controls.
    pub fn catalog() -> Vec<CheckId> {
        CheckId::EVERY
            .iter()
            .copied()
            .filter(|c| !CheckId::NEGATIVE_CONTROLS.contains(c))
            .collect()
    }

    /// Parses a comma-separated list; `all` expands to [`CheckId::catalog`].
    pub fn parse_list(list: &str) -> Result<Vec<CheckId>> {
        let mut out = Vec::new();
        for token in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            if token.eq_ignore_ascii_case("all") {
                out.extend(CheckId::catalog());
            } else {
                out.push(token.parse()?);
            }
        }
        if out.is_empty() {
            return Err(Error::input("no checks given"));
        }
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::EVERY
            .iter()
            .copied()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::input(format!("unknown check id `{s}`")))
    }
}

impl Serialize for CheckId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

/// Evidence attached to a failed check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// The input in edge-list format, ready to be fed back to `verify`.
    pub graph: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckVerdict {
    pub check_id: CheckId,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl CheckVerdict {
    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

enum Outcome {
    Pass,
    Fail(String),
    Skip(String),
}

fn verdict(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(detail())
    }
}

/// Quantities shared between checks, computed on first use.
struct Facts<'a> {
    g: &'a Graph,
    limits: &'a Limits,
    alpha: OnceCell<Result<usize>>,
    matching: OnceCell<MaximumMatching>,
    omega: OnceCell<Result<StableSetReport>>,
    alpha_critical: OnceCell<Result<EdgeSet>>,
    mu_critical: OnceCell<Result<EdgeSet>>,
    pm: OnceCell<PerfectMatchingStatus>,
    g0: OnceCell<Result<(Graph, Vec<usize>)>>,
}

fn cached<T>(cell: &OnceCell<Result<T>>, init: impl FnOnce() -> Result<T>) -> Result<&T> {
    cell.get_or_init(init).as_ref().map_err(Clone::clone)
}

impl<'a> Facts<'a> {
    fn new(g: &'a Graph, limits: &'a Limits) -> Self {
        Facts {
            g,
            limits,
            alpha: OnceCell::new(),
            matching: OnceCell::new(),
            omega: OnceCell::new(),
            alpha_critical: OnceCell::new(),
            mu_critical: OnceCell::new(),
            pm: OnceCell::new(),
            g0: OnceCell::new(),
        }
    }

    fn alpha(&self) -> Result<usize> {
        cached(&self.alpha, || stability_number(self.g, self.limits)).copied()
    }

    fn mu(&self) -> usize {
        self.matching.get_or_init(|| maximum_matching(self.g)).mu
    }

    fn omega(&self) -> Result<&StableSetReport> {
        cached(&self.omega, || {
            enumerate_maximum_stable_sets(self.g, self.limits)
        })
    }

    fn alpha_critical(&self) -> Result<&EdgeSet> {
        cached(&self.alpha_critical, || {
            alpha_critical_edges(self.g, self.limits)
        })
    }

    fn mu_critical(&self) -> Result<&EdgeSet> {
        cached(&self.mu_critical, || mu_critical_edges(self.g, self.limits))
    }

    fn eta(&self) -> Result<usize> {
        Ok(self.alpha_critical()?.len())
    }

    fn pm(&self) -> &PerfectMatchingStatus {
        self.pm.get_or_init(|| perfect_matching_status(self.g))
    }

    fn has_pm(&self) -> bool {
        2 * self.mu() == self.g.n()
    }

    fn g0(&self) -> Result<&(Graph, Vec<usize>)> {
        cached(&self.g0, || {
            let core = &self.omega()?.core;
            g_zero_from_core(self.g, core)
        })
    }

    fn is_ke(&self) -> Result<bool> {
        Ok(self.alpha()? + self.mu() == self.g.n())
    }

    fn n_core(&self) -> Result<VertexSet> {
        self.g.neighborhood(&self.omega()?.core, false)
    }
}

fn skip(reason: &str) -> Result<Outcome> {
    Ok(Outcome::Skip(reason.to_string()))
}

macro_rules! require {
    ($cond:expr, $reason:literal) => {
        if !$cond {
            return skip($reason);
        }
    };
}

fn run(f: &Facts, id: CheckId) -> Result<Outcome> {
    let g = f.g;
    let n = g.n();
    match id {
        CheckId::T1i => {
            require!(f.is_ke()?, "not a König-Egerváry graph");
            for e in f.alpha_critical()?.iter() {
                let h = g.delete_edge(e)?;
                if stability_number(&h, f.limits)? + maximum_matching(&h).mu != n {
                    return Ok(Outcome::Fail(format!("G - {e} is not König-Egerváry")));
                }
            }
            Ok(Outcome::Pass)
        }
        CheckId::T1ii => {
            require!(f.is_ke()?, "not a König-Egerváry graph");
            let extra = f.alpha_critical()?.difference(f.mu_critical()?);
            Ok(verdict(extra.is_empty(), || {
                format!("α-critical edges {extra} are not μ-critical")
            }))
        }
        CheckId::T1iii => {
            require!(f.is_ke()?, "not a König-Egerváry graph");
            let crit = f.alpha_critical()?;
            Ok(verdict(crit.is_matching(), || {
                format!("α-critical edges {crit} share an endpoint")
            }))
        }
        CheckId::CK2 => {
            require!(f.is_ke()?, "not a König-Egerváry graph");
            require!(
                g.m() >= 1 && g.is_connected(),
                "not connected with at least one edge"
            );
            let all_critical = f.eta()? == g.m();
            let is_k2 = n == 2 && g.m() == 1;
            Ok(verdict(all_critical == is_k2, || {
                format!("every edge α-critical: {all_critical}, isomorphic to K2: {is_k2}")
            }))
        }
        CheckId::BHP => {
            require!(
                n <= f.limits.odd_cycle_max_n,
                "capacity: odd-cycle search is limited to the configured vertex cap"
            );
            let crit: Vec<Edge> = f.alpha_critical()?.iter().collect();
            for (i, &e) in crit.iter().enumerate() {
                for &h in &crit[i + 1..] {
                    if !e.shares_endpoint(h) {
                        continue;
                    }
                    let mid = if h.touches(e.u()) { e.u() } else { e.v() };
                    let (x, z) = (e.other(mid), h.other(mid));
                    if !odd_path_avoiding(g, x, z, mid) {
                        return Ok(Outcome::Fail(format!(
                            "incident α-critical edges {e} and {h} lie on no common odd cycle"
                        )));
                    }
                }
            }
            Ok(Outcome::Pass)
        }
        CheckId::P3 => {
            require!(g.is_bipartite(), "not bipartite");
            let (a, m) = (f.alpha_critical()?, f.mu_critical()?);
            Ok(verdict(a == m, || {
                format!("α-critical {a} differ from μ-critical {m}")
            }))
        }
        CheckId::P3Unguarded => {
            let extra = f.alpha_critical()?.difference(f.mu_critical()?);
            Ok(verdict(extra.is_empty(), || {
                format!("α-critical edges {extra} are not μ-critical")
            }))
        }
        CheckId::C4 => {
            require!(g.is_tree() && n >= 2, "not a tree with at least one edge");
            let maximal = is_maximal_matching(g, f.alpha_critical()?);
            let perfect = f.has_pm();
            Ok(verdict(maximal == perfect, || {
                format!("perfect matching: {perfect}, α-critical edges form a maximal matching: {maximal}")
            }))
        }
        CheckId::L1 => {
            let (alpha, mu, ke) = (f.alpha()?, f.mu(), f.is_ke()?);
            if f.has_pm() && ke != (alpha == mu) {
                return Ok(Outcome::Fail(format!(
                    "perfect matching present, König-Egerváry: {ke}, α = {alpha}, μ = {mu}"
                )));
            }
            Ok(verdict(!ke || mu <= alpha, || {
                format!("König-Egerváry with μ = {mu} > α = {alpha}")
            }))
        }
        CheckId::C3 => {
            require!(g.is_tree(), "not a tree");
            if !f.has_pm() {
                return Ok(Outcome::Pass);
            }
            let crit = f.alpha_critical()?;
            let pm = &f.matching.get().expect("computed by has_pm").witness;
            if let Some(e) = pm.edges().iter().find(|&e| !crit.contains(e)) {
                return Ok(Outcome::Fail(format!(
                    "perfect matching edge {e} is not α-critical"
                )));
            }
            let alpha = f.alpha()?;
            Ok(verdict(2 * alpha == n, || {
                format!("2α = {} but n = {n}", 2 * alpha)
            }))
        }
        CheckId::P5i | CheckId::P5ii => {
            require!(f.is_ke()?, "not a König-Egerváry graph");
            let edges = if id == CheckId::P5i {
                f.mu_critical()?
            } else {
                f.alpha_critical()?
            };
            for s in &f.omega()?.omega {
                if let Some(e) = edges
                    .iter()
                    .find(|e| s.contains(e.u()) == s.contains(e.v()))
                {
                    return Ok(Outcome::Fail(format!(
                        "S = {s} does not meet {e} in exactly one vertex"
                    )));
                }
            }
            Ok(Outcome::Pass)
        }
        CheckId::P5iii => {
            require!(f.is_ke()?, "not a König-Egerváry graph");
            require!(
                g.m() >= 1 && g.is_connected(),
                "not connected with at least one edge"
            );
            let crit = f.alpha_critical()?;
            if !is_maximal_matching(g, crit) {
                return Ok(Outcome::Pass);
            }
            let unique = f.pm().unique().map(|m| m.edges() == crit).unwrap_or(false);
            Ok(verdict(unique, || {
                format!("α-critical edges {crit} form a maximal matching but not the unique perfect matching")
            }))
        }
        CheckId::NC => {
            let nc = f.n_core()?;
            let anticore = &f.omega()?.anticore;
            if !nc.is_subset(anticore) {
                return Ok(Outcome::Fail(format!(
                    "N(core) = {nc} is not inside anticore = {anticore}"
                )));
            }
            let ke = f.is_ke()?;
            Ok(verdict(!ke || &nc == anticore, || {
                format!("König-Egerváry but N(core) = {nc} differs from anticore = {anticore}")
            }))
        }
        CheckId::P9i => {
            require!(f.is_ke()?, "not a König-Egerváry graph");
            let (core, nc) = (&f.omega()?.core, f.n_core()?);
            Ok(verdict(core.len() >= nc.len(), || {
                format!("|core| = {} < |N(core)| = {}", core.len(), nc.len())
            }))
        }
        CheckId::P9ii => {
            require!(f.is_ke()?, "not a König-Egerváry graph");
            let omega = f.omega()?;
            let nc = f.n_core()?;
            for s in &omega.omega {
                let left = s.difference(&omega.core).len();
                let right = s.complement(n).difference(&nc).len();
                if left != right {
                    return Ok(Outcome::Fail(format!(
                        "S = {s}: |S - core| = {left} but |V - S - N(core)| = {right}"
                    )));
                }
            }
            Ok(Outcome::Pass)
        }
        CheckId::P9iii => {
            require!(f.is_ke()?, "not a König-Egerváry graph");
            let (g0, _) = f.g0()?;
            let mu0 = maximum_matching(g0).mu;
            if 2 * mu0 != g0.n() {
                return Ok(Outcome::Fail(format!(
                    "G0 on {} vertices has μ = {mu0}",
                    g0.n()
                )));
            }
            let alpha0 = stability_number(g0, f.limits)?;
            Ok(verdict(alpha0 + mu0 == g0.n(), || {
                format!(
                    "G0 is not König-Egerváry: α = {alpha0}, μ = {mu0}, n = {}",
                    g0.n()
                )
            }))
        }
        CheckId::C2 => {
            require!(f.is_ke()?, "not a König-Egerváry graph");
            let o = f.omega()?;
            let (l, r) = (o.alpha + o.sigma, f.mu() + o.xi);
            Ok(verdict(l == r, || format!("α + σ = {l} but μ + ξ = {r}")))
        }
        CheckId::L6i => {
            let closed = g.neighborhood(&f.omega()?.core, true)?;
            let bad: EdgeSet = f
                .alpha_critical()?
                .iter()
                .filter(|e| closed.contains(e.u()) || closed.contains(e.v()))
                .collect();
            Ok(verdict(bad.is_empty(), || {
                format!("α-critical edges {bad} touch N[core] = {closed}")
            }))
        }
        CheckId::L6ii => {
            let o = f.omega()?;
            let (g0, map) = f.g0()?;
            let o0 = enumerate_maximum_stable_sets(g0, f.limits)?;
            if o.alpha != o0.alpha + o.xi {
                return Ok(Outcome::Fail(format!(
                    "α(G) = {} but α(G0) + ξ = {} + {}",
                    o.alpha, o0.alpha, o.xi
                )));
            }
            if !o0.core.is_empty() {
                return Ok(Outcome::Fail(format!(
                    "core(G0) = {} is not empty",
                    o0.core
                )));
            }
            let kept: VertexSet = map.iter().copied().collect();
            let mut restricted: Vec<VertexSet> =
                o.omega.iter().map(|s| s.intersection(&kept)).collect();
            restricted.sort();
            restricted.dedup();
            let mut lifted: Vec<VertexSet> = o0
                .omega
                .iter()
                .map(|s| s.iter().map(|v| map[v]).collect())
                .collect();
            lifted.sort();
            Ok(verdict(restricted == lifted, || {
                "Ω(G0) differs from the restrictions of Ω(G) to V(G0)".to_string()
            }))
        }
        CheckId::L6iii => {
            let (g0, map) = f.g0()?;
            let lifted: EdgeSet = alpha_critical_edges(g0, f.limits)?
                .iter()
                .map(|e| Edge::new(map[e.u()], map[e.v()]))
                .collect();
            let crit = f.alpha_critical()?;
            Ok(verdict(&lifted == crit, || {
                format!("α-critical edges of G: {crit}, of G0 (original ids): {lifted}")
            }))
        }
        CheckId::P7 | CheckId::P7Unguarded => {
            if id == CheckId::P7 {
                require!(f.is_ke()?, "not a König-Egerváry graph");
            }
            let o = f.omega()?;
            let (alpha, mu, xi, sigma, eta) = (o.alpha, f.mu(), o.xi, o.sigma, f.eta()?);
            let holds = xi + eta <= alpha && sigma + eta <= mu && xi + 2 * eta + sigma <= n;
            Ok(verdict(holds, || {
                format!("(α, μ, ξ, σ, η, n) = ({alpha}, {mu}, {xi}, {sigma}, {eta}, {n}) breaks an inequality")
            }))
        }
        CheckId::P10 => {
            require!(f.is_ke()?, "not a König-Egerváry graph");
            let o = f.omega()?;
            let (alpha, mu, xi, sigma, eta) = (o.alpha, f.mu(), o.xi, o.sigma, f.eta()?);
            let eq = [
                xi + eta == alpha,
                sigma + eta == mu,
                xi + 2 * eta + sigma == n,
            ];
            Ok(verdict(eq.iter().all(|&b| b == eq[0]), || {
                format!("equalities disagree: {eq:?}")
            }))
        }
        CheckId::L3 => {
            require!(f.is_ke()?, "not a König-Egerváry graph");
            unique_matching_criticality(f)
        }
        CheckId::T2 => {
            let ev = match th2_evaluate(g, f.limits) {
                Err(Error::Precondition(_)) => return skip("not a König-Egerváry graph"),
                other => other?,
            };
            Ok(verdict(ev.consistent, || {
                format!("clauses disagree: {:?}", ev.clauses())
            }))
        }
        CheckId::C6 => {
            require!(g.is_bipartite(), "not bipartite");
            require!(
                g.m() >= 1 && g.is_connected(),
                "not connected with at least one edge"
            );
            let eta = f.eta()?;
            let clauses = [
                f.pm().is_unique(),
                is_maximal_matching(g, f.alpha_critical()?),
                eta == f.alpha()?,
                eta == f.mu(),
                2 * eta == n,
            ];
            Ok(verdict(clauses.iter().all(|&b| b == clauses[0]), || {
                format!("clauses disagree: {clauses:?}")
            }))
        }
        CheckId::P4 => {
            let witness = match forest_condition(g, f.limits) {
                Err(Error::Precondition(_)) => return skip("not a König-Egerváry graph"),
                other => other?,
            };
            let Some(w) = witness else {
                return Ok(Outcome::Pass);
            };
            let o = f.omega()?;
            let (mu, eta) = (f.mu(), f.eta()?);
            let eq = [
                o.xi + eta == o.alpha,
                o.sigma + eta == mu,
                o.xi + 2 * eta + o.sigma == n,
            ];
            Ok(verdict(eq.iter().all(|&b| b), || {
                format!("cut of S = {} is a forest but equalities are {eq:?}", w.s)
            }))
        }
        CheckId::C1 => {
            require!(g.is_tree(), "not a tree");
            let o = f.omega()?;
            let (mu, eta) = (f.mu(), f.eta()?);
            let eq = [
                o.xi + eta == o.alpha,
                o.sigma + eta == mu,
                o.xi + 2 * eta + o.sigma == n,
            ];
            Ok(verdict(eq.iter().all(|&b| b), || {
                format!("equalities are {eq:?}")
            }))
        }
        CheckId::C5 => {
            require!(g.is_tree(), "not a tree");
            let o = f.omega()?;
            let union: VertexSet = o.omega.iter().fold(VertexSet::new(), |acc, s| acc.union(s));
            let crit_ends = f.alpha_critical()?.vertices();
            let partial = union.difference(&o.core);
            Ok(verdict(partial == crit_ends, || {
                format!("vertices in some but not all maximum stable sets: {partial}; α-critical endpoints: {crit_ends}")
            }))
        }
        CheckId::H1 => {
            let o = f.omega()?;
            let mut dense = true;
            'outer: for s in &o.omega {
                for x in 0..n {
                    if !s.contains(x)
                        && g.neighbors(x).iter().filter(|&&y| s.contains(y)).count() < 2
                    {
                        dense = false;
                        break 'outer;
                    }
                }
            }
            let eta = f.eta()?;
            Ok(verdict((eta == 0) == dense, || {
                format!("η = {eta} but every outside vertex has two neighbours in every S: {dense}")
            }))
        }
    }
}

/// α-critical and μ-critical edges of G0 coincide whenever G0 has a unique
/// perfect matching; each matching edge is also certified through the S0
/// construction.
fn unique_matching_criticality(f: &Facts) -> Result<Outcome> {
    let (g0, map) = f.g0()?;
    let status = perfect_matching_status(g0);
    let Some(pm) = status.unique() else {
        return Ok(Outcome::Pass);
    };
    let a0 = alpha_critical_edges(g0, f.limits)?;
    let m0 = mu_critical_edges(g0, f.limits)?;
    if a0 != m0 {
        return Ok(Outcome::Fail(format!(
            "in G0, α-critical {a0} differ from μ-critical {m0}"
        )));
    }
    let o = f.omega()?;
    let s = o.omega.first().expect("Ω is never empty");
    let mut position = vec![usize::MAX; f.g.n()];
    for (new, &old) in map.iter().enumerate() {
        position[old] = new;
    }
    let a_side: VertexSet = s.difference(&o.core).iter().map(|v| position[v]).collect();
    for e in pm.edges().iter() {
        let b1 = if a_side.contains(e.u()) { e.v() } else { e.u() };
        s0_procedure(g0, pm, &a_side, b1, f.limits)?;
    }
    Ok(Outcome::Pass)
}

/// Is there a simple path of odd length from `x` to `z` avoiding `avoid`?
fn odd_path_avoiding(g: &Graph, x: usize, z: usize, avoid: usize) -> bool {
    fn walk(g: &Graph, v: usize, z: usize, visited: u64, len: usize) -> bool {
        if v == z {
            return len % 2 == 1;
        }
        g.neighbors(v)
            .iter()
            .any(|&w| visited & (1u64 << w) == 0 && walk(g, w, z, visited | (1u64 << w), len + 1))
    }
    walk(g, x, z, (1u64 << avoid) | (1u64 << x), 0)
}

fn conclude(g: &Graph, id: CheckId, outcome: Result<Outcome>) -> CheckVerdict {
    let (status, witness, reason) = match outcome {
        Ok(Outcome::Pass) => (Status::Pass, None, None),
        Ok(Outcome::Skip(reason)) => (Status::NotApplicable, None, Some(reason)),
        Ok(Outcome::Fail(detail)) => (Status::Fail, Some(detail), None),
        Err(Error::Capacity(msg)) => (
            Status::NotApplicable,
            None,
            Some(format!("capacity: {msg}")),
        ),
        Err(other) => (Status::Fail, Some(format!("error: {other}")), None),
    };
    CheckVerdict {
        check_id: id,
        status,
        witness: witness.map(|detail| Witness {
            graph: edgelist::format(g, &[]),
            detail,
        }),
        reason,
    }
}

/// Evaluates one check on `g`.
pub fn check(g: &Graph, id: CheckId, limits: &Limits) -> CheckVerdict {
    check_many(g, &[id], limits)
        .pop()
        .expect("one verdict per check")
}

/// Evaluates several checks, sharing intermediate results between them.
pub fn check_many(g: &Graph, ids: &[CheckId], limits: &Limits) -> Vec<CheckVerdict> {
    let facts = Facts::new(g, limits);
    ids.iter()
        .map(|&id| conclude(g, id, run(&facts, id)))
        .collect()
}
