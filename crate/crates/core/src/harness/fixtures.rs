//! Named graphs with known parameter values.
//!
//! Each expected value records whether it was read off a published figure or
//! caption, or computed by exhaustive search.

use serde::Serialize;

use crate::edgelist;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// Stated alongside the published drawing of the graph.
    Published,
    /// Obtained by exhaustive enumeration.
    Computed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Count(usize),
    Flag(bool),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Expectation {
    /// A `ParameterReport` field name.
    pub field: &'static str,
    pub value: Value,
    pub source: Source,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    #[serde(skip)]
    pub graph: Graph,
    /// Drawing label of each vertex id.
    pub labels: Vec<&'static str>,
    pub expected: Vec<Expectation>,
    pub notes: Vec<&'static str>,
}

impl Fixture {
    pub fn expected(&self, field: &str) -> Option<Value> {
        self.expected
            .iter()
            .find(|e| e.field == field)
            .map(|e| e.value)
    }

    /// Edge list with a comment block mapping labels to ids.
    pub fn to_edge_list(&self) -> String {
        let mut comments = vec![format!("{}: {}", self.name, self.description)];
        comments.extend(
            self.labels
                .iter()
                .enumerate()
                .map(|(id, label)| format!("{id} = {label}")),
        );
        comments.extend(self.notes.iter().map(|n| format!("note: {n}")));
        edgelist::format(&self.graph, &comments)
    }
}

fn count(field: &'static str, value: usize, source: Source) -> Expectation {
    Expectation {
        field,
        value: Value::Count(value),
        source,
    }
}

fn flag(field: &'static str, value: bool, source: Source) -> Expectation {
    Expectation {
        field,
        value: Value::Flag(value),
        source,
    }
}

fn graph(labels: &[&'static str], pairs: &[(&str, &str)]) -> Graph {
    let id = |name: &str| {
        labels
            .iter()
            .position(|&l| l == name)
            .unwrap_or_else(|| panic!("unknown label {name}"))
    };
    Graph::from_edge_list(labels.len(), pairs.iter().map(|&(a, b)| (id(a), id(b))))
        .expect("fixture edges are valid")
}

use Source::{Computed, Published};

fn k3_plus_e() -> Fixture {
    let labels = vec!["s", "t", "u", "e"];
    Fixture {
        name: "k3_plus_e",
        description: "triangle s-t-u with pendant edge s-e",
        graph: graph(&labels, &[("s", "t"), ("t", "u"), ("u", "s"), ("s", "e")]),
        labels,
        expected: vec![
            count("n", 4, Published),
            count("m", 4, Published),
            flag("is_ke", true, Published),
            flag("is_bipartite", false, Published),
            count("alpha", 2, Computed),
            count("mu", 2, Computed),
            count("xi", 1, Computed),
            count("sigma", 1, Computed),
            count("eta", 1, Computed),
            flag("xi_plus_eta_equals_alpha", true, Published),
            flag("sigma_plus_eta_equals_mu", true, Published),
        ],
        notes: vec!["the pendant edge s-e is mu-critical but not alpha-critical"],
    }
}

fn critical_pm() -> Fixture {
    let labels = vec!["x1", "x2", "x3", "x4", "y1", "y2"];
    Fixture {
        name: "fig2_ke",
        description:
            "non-bipartite König-Egerváry graph whose mu-critical edges are all alpha-critical",
        graph: graph(
            &labels,
            &[
                ("x1", "x2"),
                ("x2", "x3"),
                ("x3", "x4"),
                ("y1", "y2"),
                ("x3", "y2"),
                ("x2", "y2"),
            ],
        ),
        labels,
        expected: vec![
            flag("is_ke", true, Published),
            flag("is_bipartite", false, Published),
            count("alpha", 3, Computed),
            count("mu", 3, Computed),
            count("eta", 3, Computed),
            count("xi", 0, Computed),
            count("sigma", 0, Computed),
        ],
        notes: vec![],
    }
}

fn w1() -> Fixture {
    let labels = vec!["p1", "p2", "p3", "p4", "q2", "q3"];
    Fixture {
        name: "w1",
        description:
            "non-König-Egerváry graph: path p1-p2-p3-p4, pendant q2 on p2, triangle p3-p4-q3",
        graph: graph(
            &labels,
            &[
                ("p1", "p2"),
                ("p2", "p3"),
                ("p3", "p4"),
                ("p2", "q2"),
                ("p3", "q3"),
                ("p4", "q3"),
            ],
        ),
        labels,
        expected: vec![
            count("alpha", 3, Published),
            count("mu", 2, Published),
            count("eta", 3, Published),
            count("xi", 2, Published),
            count("sigma", 1, Published),
            flag("is_ke", false, Computed),
        ],
        notes: vec!["xi + eta > alpha here: the inequalities need the König-Egerváry hypothesis"],
    }
}

fn s0_example() -> Fixture {
    let labels = vec!["a1", "b1", "a2", "b2", "a3", "b3", "a4", "b4", "a5", "b5"];
    Fixture {
        name: "fig7_g0",
        description: "graph with unique perfect matching {ai-bi} and empty core, used for the S0 construction",
        graph: graph(
            &labels,
            &[
                ("a1", "b1"),
                ("a2", "b2"),
                ("a3", "b3"),
                ("a4", "b4"),
                ("a5", "b5"),
                ("a2", "b1"),
                ("a3", "b1"),
                ("a2", "b5"),
                ("a3", "b5"),
                ("a4", "b2"),
                ("a4", "b3"),
                ("b1", "b5"),
            ],
        ),
        labels,
        expected: vec![
            count("xi", 0, Published),
            count("g0_pm_status", 1, Published),
            count("alpha", 5, Computed),
            count("mu", 5, Computed),
            count("eta", 5, Computed),
            flag("is_ke", true, Computed),
        ],
        notes: vec!["starting from b1 the construction yields S0 = {b1,b2,b3,b4,a5}"],
    }
}

fn bipartite_non_tree() -> Fixture {
    let labels = vec!["b1", "b2", "b3", "b4", "t2", "t3", "t4"];
    Fixture {
        name: "fig8_bipartite",
        description: "bipartite graph: path b1-b2-b3-b4, verticals b2-t2, b3-t3, b4-t4, top edge t3-t4",
        graph: graph(
            &labels,
            &[("b1", "b2"), ("b2", "b3"), ("b3", "b4"), ("t3", "t4"), ("b2", "t2"), ("b3", "t3"), ("b4", "t4")],
        ),
        labels,
        expected: vec![
            count("n", 7, Published),
            count("xi", 2, Published),
            count("eta", 0, Published),
            count("alpha", 4, Published),
            count("sigma", 1, Published),
            count("mu", 3, Computed),
            flag("is_bipartite", true, Published),
            flag("xi_plus_eta_equals_alpha", false, Computed),
        ],
        notes: vec![
            "the published value mu = 4 conflicts with alpha + mu = n for a bipartite graph on 7 vertices with alpha = 4; the computed value is 3",
            "the tree identities xi+eta=alpha, sigma+eta=mu, xi+2eta+sigma=n all fail on this bipartite graph",
        ],
    }
}

fn forest_cut() -> Fixture {
    let labels = vec!["a", "b", "c", "d", "x", "y", "z"];
    Fixture {
        name: "fig9_forest",
        description: "König-Egerváry graph where the cut of S2 = {a,b,y,z} spans a forest but that of S1 = {a,b,c,d} does not",
        graph: graph(
            &labels,
            &[("a", "x"), ("b", "x"), ("c", "x"), ("d", "x"), ("c", "y"), ("d", "y"), ("d", "z")],
        ),
        labels,
        expected: vec![
            flag("is_ke", true, Published),
            flag("xi_plus_eta_equals_alpha", true, Published),
            count("alpha", 4, Computed),
            count("mu", 3, Computed),
            count("xi", 2, Computed),
            count("sigma", 1, Computed),
            count("eta", 2, Computed),
        ],
        notes: vec!["the first maximum stable set in lexicographic order with an acyclic cut is {a,b,c,z}"],
    }
}

fn forest_counterexample() -> Fixture {
    let labels = vec!["a", "b", "c", "d", "x", "y"];
    Fixture {
        name: "fig9_counterexample",
        description: "König-Egerváry graph meeting all three identities although no maximum stable set has an acyclic cut",
        graph: graph(
            &labels,
            &[("a", "y"), ("b", "x"), ("c", "d"), ("x", "y"), ("x", "d"), ("b", "y"), ("a", "x")],
        ),
        labels,
        expected: vec![
            flag("is_ke", true, Published),
            flag("xi_plus_eta_equals_alpha", true, Published),
            count("alpha", 3, Computed),
            count("mu", 3, Computed),
            count("xi", 2, Computed),
            count("sigma", 2, Computed),
            count("eta", 1, Computed),
        ],
        notes: vec![],
    }
}

fn family(
    name: &'static str,
    description: &'static str,
    g: Graph,
    expected: Vec<Expectation>,
) -> Fixture {
    Fixture {
        name,
        description,
        labels: vec![],
        graph: g,
        expected,
        notes: vec![],
    }
}

/// Every fixture, in a fixed order.
pub fn fixtures() -> Vec<Fixture> {
    vec![
        k3_plus_e(),
        critical_pm(),
        w1(),
        s0_example(),
        bipartite_non_tree(),
        forest_cut(),
        forest_counterexample(),
        family(
            "k2",
            "single edge",
            Graph::path(2),
            vec![count("alpha", 1, Computed), count("eta", 1, Computed)],
        ),
        family(
            "k3",
            "triangle",
            Graph::complete(3),
            vec![count("eta", 3, Computed), count("mu", 1, Computed)],
        ),
        family(
            "p4",
            "path on 4 vertices",
            Graph::path(4),
            vec![count("eta", 2, Computed)],
        ),
        family(
            "c4",
            "4-cycle",
            Graph::cycle(4).unwrap(),
            vec![count("eta", 0, Computed)],
        ),
        family(
            "c5",
            "5-cycle",
            Graph::cycle(5).unwrap(),
            vec![count("eta", 5, Computed), flag("is_ke", false, Computed)],
        ),
        family(
            "c6",
            "6-cycle",
            Graph::cycle(6).unwrap(),
            vec![count("eta", 0, Computed), flag("is_ke", true, Computed)],
        ),
    ]
}

pub fn fixture(name: &str) -> Option<Fixture> {
    fixtures().into_iter().find(|f| f.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique_and_labels_cover_vertices() {
        let all = fixtures();
        let mut names: Vec<_> = all.iter().map(|f| f.name).collect();
        names.dedup();
        assert_eq!(names.len(), all.len());
        for f in &all {
            assert!(
                f.labels.is_empty() || f.labels.len() == f.graph.n(),
                "{}",
                f.name
            );
        }
    }

    #[test]
    fn edge_list_round_trips() {
        for f in fixtures() {
            let text = f.to_edge_list();
            assert_eq!(edgelist::parse(&text).unwrap(), f.graph, "{}", f.name);
        }
        let text = fixture("w1").unwrap().to_edge_list();
        assert!(text.contains("# 4 = q2"));
    }
}
