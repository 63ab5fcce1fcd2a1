use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ke::is_koenig_egervary;
use crate::solvers::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphKind {
    /// Uniform labelled tree from a random Prüfer sequence.
    Tree,
    /// Random bipartite graph with sides `n` and `n2`.
    Bipartite,
    /// Stable set `S` joined to an arbitrary `H` with `|H| <= |S|` through a
    /// matching saturating `H`; König-Egerváry by construction.
    KeSynth,
    /// Erdős–Rényi `G(n, p)`.
    Gnp,
    Cycle,
    Path,
    Complete,
}

impl GraphKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphKind::Tree => "tree",
            GraphKind::Bipartite => "bipartite",
            GraphKind::KeSynth => "ke_synth",
            GraphKind::Gnp => "gnp",
            GraphKind::Cycle => "cycle",
            GraphKind::Path => "path",
            GraphKind::Complete => "complete",
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "tree" => GraphKind::Tree,
            "bipartite" => GraphKind::Bipartite,
            "ke" | "ke_synth" => GraphKind::KeSynth,
            "gnp" => GraphKind::Gnp,
            "cycle" => GraphKind::Cycle,
            "path" => GraphKind::Path,
            "complete" => GraphKind::Complete,
            other => return Err(Error::input(format!("unknown generator `{other}`"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeneratorConfig {
    pub kind: GraphKind,
    pub n: usize,
    /// Second side for bipartite graphs; defaults to `n`.
    pub n2: Option<usize>,
    pub p: f64,
    pub seed: u64,
}

impl GeneratorConfig {
    pub fn new(kind: GraphKind, n: usize, p: f64, seed: u64) -> Self {
        GeneratorConfig {
            kind,
            n,
            n2: None,
            p,
            seed,
        }
    }
}

/// Builds one graph, deterministically in `cfg.seed`.
pub fn generate(cfg: &GeneratorConfig) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    generate_with(cfg.kind, cfg.n, cfg.n2, cfg.p, &mut rng)
}

pub(crate) fn generate_with<R: Rng>(
    kind: GraphKind,
    n: usize,
    n2: Option<usize>,
    p: f64,
    rng: &mut R,
) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::input(format!("edge probability {p} outside [0, 1]")));
    }
    let limit = 64;
    let total = n + if kind == GraphKind::Bipartite {
        n2.unwrap_or(n)
    } else {
        0
    };
    if total > limit {
        return Err(Error::input(format!(
            "{total} vertices exceeds the generator limit of {limit}"
        )));
    }
    match kind {
        GraphKind::Tree => random_tree(n, rng),
        GraphKind::Bipartite => Ok(random_bipartite(n, n2.unwrap_or(n), p, rng)),
        GraphKind::KeSynth => {
            let g = ke_synth(n, p, rng);
            let limits = Limits::default();
            if n <= limits.alpha_max_n && !is_koenig_egervary(&g, &limits)? {
                return Err(Error::invariant("synthesised graph is not König-Egerváry"));
            }
            Ok(g)
        }
        GraphKind::Gnp => Ok(gnp(n, p, rng)),
        GraphKind::Cycle => Graph::cycle(n),
        GraphKind::Path => Ok(Graph::path(n)),
        GraphKind::Complete => Ok(Graph::complete(n)),
    }
}

fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Result<Graph> {
    match n {
        0 => Err(Error::input("a tree needs at least one vertex")),
        1 | 2 => Ok(Graph::path(n)),
        _ => {
            let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
            Graph::from_edge_list(n, prufer_decode(n, &code))
        }
    }
}

/// Edges of the labelled tree on `n` vertices whose Prüfer sequence is `code`.
pub fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    debug_assert_eq!(code.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.push(std::cmp::Reverse(c));
        }
    }
    let std::cmp::Reverse(u) = leaves.pop().unwrap();
    let std::cmp::Reverse(v) = leaves.pop().unwrap();
    edges.push((u, v));
    edges
}

fn random_bipartite<R: Rng>(left: usize, right: usize, p: f64, rng: &mut R) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..left {
        for v in 0..right {
            if rng.random_bool(p) {
                pairs.push((u, left + v));
            }
        }
    }
    Graph::from_edge_list(left + right, pairs).expect("generated pairs are valid")
}

fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, pairs).expect("generated pairs are valid")
}

fn ke_synth<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let h = rng.random_range(0..=n / 2);
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let (stable, rest) = labels.split_at(n - h);
    let mut pairs = Vec::new();
    // Arbitrary H.
    for i in 0..h {
        for j in i + 1..h {
            if rng.random_bool(p) {
                pairs.push((rest[i], rest[j]));
            }
        }
    }
    // Matching saturating H into S.
    let mut partners: Vec<usize> = stable.to_vec();
    partners.shuffle(rng);
    for (i, &x) in rest.iter().enumerate() {
        pairs.push((x, partners[i]));
    }
    // Extra cut edges; stable vertices left isolated get one neighbour in H.
    for &s in stable {
        for &x in rest {
            if rng.random_bool(p) {
                pairs.push((s, x));
            }
        }
        let touched = pairs.iter().any(|&(a, b)| a == s || b == s);
        if h > 0 && !touched {
            pairs.push((s, rest[rng.random_range(0..h)]));
        }
    }
    Graph::from_edge_list(n, pairs).expect("generated pairs are valid")
}
