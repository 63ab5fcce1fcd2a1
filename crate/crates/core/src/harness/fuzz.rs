//! Seeded fuzzing of the check catalogue with counterexample shrinking.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::checks::{check, check_many, CheckId, Status};
use super::generate::{generate_with, GeneratorConfig, GraphKind};
use crate::edgelist;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solvers::Limits;

/// A family of generator settings; every trial draws `n` and `p` from it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzConfig {
    pub kind: GraphKind,
    pub n_min: usize,
    pub n_max: usize,
    pub n2: Option<usize>,
    pub p_values: Vec<f64>,
    pub seed: u64,
}

impl From<&GeneratorConfig> for FuzzConfig {
    fn from(cfg: &GeneratorConfig) -> Self {
        FuzzConfig {
            kind: cfg.kind,
            n_min: cfg.n,
            n_max: cfg.n,
            n2: cfg.n2,
            p_values: vec![cfg.p],
            seed: cfg.seed,
        }
    }
}

impl FuzzConfig {
    /// The graph of trial `trial`: a ChaCha8 stream selected by the trial index
    /// under the campaign seed, so trials are independent of scheduling.
    pub fn trial_graph(&self, trial: u64) -> Result<(Graph, f64)> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(trial);
        let n = rng.random_range(self.n_min..=self.n_max);
        let p = self.p_values[rng.random_range(0..self.p_values.len())];
        Ok((generate_with(self.kind, n, self.n2, p, &mut rng)?, p))
    }

    fn validate(&self) -> Result<()> {
        if self.n_min > self.n_max {
            return Err(Error::input(format!(
                "empty size range {}..={}",
                self.n_min, self.n_max
            )));
        }
        if self.p_values.is_empty() {
            return Err(Error::input("no edge probabilities given"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub na: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzWitness {
    pub trial: u64,
    pub check_id: CheckId,
    pub detail: String,
    /// Generated graph, edge-list format.
    pub original: String,
    /// Smallest failing graph found by deletion, edge-list format.
    pub shrunk: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzSummary {
    pub seed: u64,
    pub cfg: FuzzConfig,
    pub trials: u64,
    pub per_check: BTreeMap<CheckId, Tally>,
    pub witnesses: Vec<FuzzWitness>,
}

impl FuzzSummary {
    pub fn failures(&self) -> usize {
        self.per_check.values().map(|t| t.fail).sum()
    }
}

/// Runs `trials` generated graphs through `checks`. Trials run in parallel;
/// the summary depends only on the arguments.
pub fn fuzz(
    cfg: &FuzzConfig,
    trials: u64,
    checks: &[CheckId],
    limits: &Limits,
) -> Result<FuzzSummary> {
    if trials == 0 {
        return Err(Error::input("at least one trial is required"));
    }
    if checks.is_empty() {
        return Err(Error::input("no checks given"));
    }
    cfg.validate()?;

    let outcomes: Vec<(Vec<Status>, Vec<FuzzWitness>)> = (0..trials)
        .into_par_iter()
        .map(|trial| -> Result<_> {
            let (g, _) = cfg.trial_graph(trial)?;
            let verdicts = check_many(&g, checks, limits);
            let mut witnesses = Vec::new();
            for v in &verdicts {
                if let (Status::Fail, Some(w)) = (v.status, &v.witness) {
                    let shrunk = shrink(&g, v.check_id, limits);
                    witnesses.push(FuzzWitness {
                        trial,
                        check_id: v.check_id,
                        detail: w.detail.clone(),
                        original: w.graph.clone(),
                        shrunk: edgelist::format(&shrunk, &[]),
                    });
                }
            }
            Ok((verdicts.iter().map(|v| v.status).collect(), witnesses))
        })
        .collect::<Result<_>>()?;

    let mut per_check: BTreeMap<CheckId, Tally> =
        checks.iter().map(|&c| (c, Tally::default())).collect();
    let mut witnesses = Vec::new();
    for (statuses, found) in outcomes {
        for (&id, status) in checks.iter().zip(statuses) {
            let t = per_check.get_mut(&id).expect("every check is tallied");
            match status {
                Status::Pass => t.pass += 1,
                Status::Fail => t.fail += 1,
                Status::NotApplicable => t.na += 1,
            }
        }
        witnesses.extend(found);
    }
    Ok(FuzzSummary {
        seed: cfg.seed,
        cfg: cfg.clone(),
        trials,
        per_check,
        witnesses,
    })
}

/// Deletes single edges, then single vertices, as long as `id` keeps failing.
/// Inputs leaving the check's class come back `NotApplicable` and are
/// rejected, so the result stays in the class of the original.
pub fn shrink(g: &Graph, id: CheckId, limits: &Limits) -> Graph {
    let fails = |h: &Graph| check(h, id, limits).status == Status::Fail;
    let mut current = g.clone();
    'edges: loop {
        for &e in current.edges() {
            let smaller = current.delete_edge(e).expect("edge of the graph");
            if fails(&smaller) {
                current = smaller;
                continue 'edges;
            }
        }
        break;
    }
    'vertices: loop {
        for v in 0..current.n() {
            let (smaller, _) = current
                .delete_vertices(&VertexSet::singleton(v))
                .expect("vertex of the graph");
            if fails(&smaller) {
                current = smaller;
                continue 'vertices;
            }
        }
        break;
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(kind: GraphKind, n_max: usize, seed: u64) -> FuzzConfig {
        FuzzConfig {
            kind,
            n_min: 2,
            n_max,
            n2: None,
            p_values: vec![0.2, 0.5],
            seed,
        }
    }

    #[test]
    fn trees_pass_tree_checks() {
        let checks = [CheckId::C1, CheckId::C4, CheckId::C5, CheckId::P3];
        let s = fuzz(
            &cfg(GraphKind::Tree, 10, 3),
            60,
            &checks,
            &Limits::default(),
        )
        .unwrap();
        assert_eq!(s.failures(), 0);
        assert_eq!(s.per_check[&CheckId::C1].pass, 60);
    }

    #[test]
    fn summary_is_reproducible() {
        let checks = [CheckId::BHP, CheckId::H1];
        let a = fuzz(&cfg(GraphKind::Gnp, 9, 11), 40, &checks, &Limits::default()).unwrap();
        let b = fuzz(&cfg(GraphKind::Gnp, 9, 11), 40, &checks, &Limits::default()).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn negative_control_is_caught_and_shrunk() {
        let checks = [CheckId::P3Unguarded];
        let c = FuzzConfig {
            p_values: vec![0.9],
            ..cfg(GraphKind::Gnp, 7, 5)
        };
        let s = fuzz(&c, 20, &checks, &Limits::default()).unwrap();
        assert!(s.failures() > 0);
        for w in &s.witnesses {
            let shrunk = edgelist::parse(&w.shrunk).unwrap();
            assert_eq!(
                check(&shrunk, w.check_id, &Limits::default()).status,
                Status::Fail
            );
            assert!(shrunk.m() <= edgelist::parse(&w.original).unwrap().m());
        }
    }

    #[test]
    fn shrunk_graph_is_edge_minimal() {
        let lim = Limits::default();
        let h = shrink(&Graph::complete(5), CheckId::P3Unguarded, &lim);
        assert_eq!(check(&h, CheckId::P3Unguarded, &lim).status, Status::Fail);
        for &e in h.edges() {
            let smaller = h.delete_edge(e).unwrap();
            assert_ne!(
                check(&smaller, CheckId::P3Unguarded, &lim).status,
                Status::Fail
            );
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        let lim = Limits::default();
        assert!(fuzz(&cfg(GraphKind::Tree, 5, 0), 0, &[CheckId::C1], &lim).is_err());
        assert!(fuzz(&cfg(GraphKind::Tree, 5, 0), 1, &[], &lim).is_err());
        let empty_p = FuzzConfig {
            p_values: vec![],
            ..cfg(GraphKind::Gnp, 5, 0)
        };
        assert!(fuzz(&empty_p, 1, &[CheckId::C1], &lim).is_err());
    }
}
