use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Matching, VertexSet};
use crate::solvers::{perfect_matching_status, stability_number, Limits};

/// State of the construction after initialisation and after each pass of
/// the growth loop.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct S0Step {
    pub s0: VertexSet,
    pub d: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct S0Trace {
    /// Final maximum stable set containing `b1`.
    pub s0: VertexSet,
    pub steps: Vec<S0Step>,
    /// The matching edge `a1 b1` shown to be α-critical.
    pub target_edge: Edge,
}

/// Builds a maximum stable set `S0` of `g0` that contains `b1` and avoids
/// every other neighbour of `b1`'s partner `a1`.
///
/// `pm` must be the unique perfect matching of `g0`, `a_side` a stable set
/// holding exactly one endpoint of each `pm` edge, and `b1` a vertex outside
/// `a_side`. With `M(X)` the partners of `X`, `A = a_side`, `B = V - A`:
///
/// ```text
/// S0 := {b1}; D := {b1}
/// while (N(D) ∩ A) - M(S0) is non-empty:
///     S1 := S0
///     S0 := S0 ∪ M((N(D) ∩ A) - M(S0))
///     D  := S0 - S1
/// S0 := S0 ∪ M(B - S0)
/// ```
///
/// On return `S0` is checked to be a maximum stable set of `g0` containing
/// `b1`, with `S0 ∪ {a1}` stable in `g0 - a1 b1`; a failed check is reported
/// as an invariant error carrying the trace.
pub fn s0_procedure(
    g0: &Graph,
    pm: &Matching,
    a_side: &VertexSet,
    b1: usize,
    limits: &Limits,
) -> Result<S0Trace> {
    let n = g0.n();
    g0.check_vertices(a_side)?;
    if b1 >= n {
        return Err(Error::input(format!("vertex {b1} outside 0..{n}")));
    }
    if !pm.edges().iter().all(|e| g0.contains_edge(e)) || !pm.is_perfect_for(n) {
        return Err(Error::precondition(
            "the given matching is not a perfect matching of G0",
        ));
    }
    let status = perfect_matching_status(g0);
    if status.unique() != Some(pm) {
        return Err(Error::precondition(
            "G0 does not have the given matching as its unique perfect matching",
        ));
    }
    if !g0.is_stable(a_side)? {
        return Err(Error::precondition(format!("A = {a_side} is not stable")));
    }
    if !pm
        .edges()
        .iter()
        .all(|e| a_side.contains(e.u()) != a_side.contains(e.v()))
    {
        return Err(Error::precondition(format!(
            "A = {a_side} does not pick exactly one endpoint of every matching edge"
        )));
    }
    if a_side.contains(b1) {
        return Err(Error::precondition(format!("b1 = {b1} lies in A")));
    }

    let mates = pm.mates(n);
    let mate = |v: usize| mates[v].expect("perfect matching saturates every vertex");
    let partners = |xs: &VertexSet| -> VertexSet { xs.iter().map(mate).collect() };
    let b_side = a_side.complement(n);

    let mut s0 = VertexSet::singleton(b1);
    let mut d = VertexSet::singleton(b1);
    let mut steps = vec![S0Step {
        s0: s0.clone(),
        d: d.clone(),
    }];
    loop {
        let reachable = g0.neighborhood(&d, false)?.intersection(a_side);
        let fresh = reachable.difference(&partners(&s0));
        if fresh.is_empty() {
            break;
        }
        let s1 = s0.clone();
        s0 = s0.union(&partners(&fresh));
        d = s0.difference(&s1);
        steps.push(S0Step {
            s0: s0.clone(),
            d: d.clone(),
        });
    }
    s0 = s0.union(&partners(&b_side.difference(&s0)));

    let a1 = mate(b1);
    let trace = S0Trace {
        s0,
        steps,
        target_edge: Edge::new(a1, b1),
    };
    let fail = |what: &str| {
        Error::invariant(format!(
            "S0 construction from b1 = {b1}: {what}; trace = {}",
            serde_json::to_string(&trace).unwrap_or_default()
        ))
    };
    if !g0.is_stable(&trace.s0)? {
        return Err(fail("result is not stable"));
    }
    if trace.s0.len() != stability_number(g0, limits)? {
        return Err(fail("result is not a maximum stable set"));
    }
    if !trace.s0.contains(b1) {
        return Err(fail("result misses b1"));
    }
    let without = g0.delete_edge(trace.target_edge)?;
    let mut extended = trace.s0.clone();
    extended.insert(a1);
    if !without.is_stable(&extended)? {
        return Err(fail("S0 + a1 is not stable after deleting a1 b1"));
    }
    Ok(trace)
}
