//! The certification pipeline: structure first, search second, proof last.
//!
//! [`classify`] refuses graphs that cannot have a 1-factorization for
//! trivial reasons, then tries the constructive routes a known vertex
//! partition allows, then the randomized search, and finally, on small
//! graphs, the exact decider at `k` and `k + 1` colors. Anything it cannot
//! settle is reported as inconclusive; nothing is ever assumed.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;

use crate::cert::{write_certificate, Certificate, Method};
use crate::error::{Error, Result};
use crate::factor::{
    bipartite_regular_factorize, exact_chromatic_index, heuristic_factorize, hoffman_complement_factorize,
    hoffman_factorize, lemma22_clique_or_coclique, round_robin, spread_to_hoffman, verify_factorization, ExactOutcome,
    Factorization, HeuristicOutcome, SearchConfig, DEFAULT_NODE_BUDGET,
};
use crate::families::{PartitionKind, VertexPartition};
use crate::graph::Graph;
use crate::graph6::read_graph6_file;

pub const DEFAULT_EXACT_EDGE_LIMIT: usize = 40;

/// Which stages of the pipeline run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Constructive routes, then the heuristic, then the exact decider.
    #[default]
    Auto,
    Heuristic,
    Constructive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyConfig {
    pub search: SearchConfig,
    pub strategy: Strategy,
    /// The exact decider runs only on graphs with at most this many edges.
    pub exact_edge_limit: usize,
    pub node_budget: u64,
}

impl Default for ClassifyConfig {
    fn default() -> Self {
        ClassifyConfig {
            search: SearchConfig::default(),
            strategy: Strategy::Auto,
            exact_edge_limit: DEFAULT_EXACT_EDGE_LIMIT,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

/// A violated precondition for being class 1 in the sense of 1-factorizations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refusal {
    Empty,
    NotRegular,
    OddOrder(usize),
    Disconnected(usize),
}

impl fmt::Display for Refusal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Refusal::Empty => write!(f, "graph has no vertices"),
            Refusal::NotRegular => write!(f, "graph is not regular"),
            Refusal::OddOrder(n) => write!(f, "odd order {n}: a 1-factor needs an even number of vertices"),
            Refusal::Disconnected(c) => write!(f, "graph is disconnected ({c} components)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Certified(Certificate),
    Inconclusive(String),
    Refused(Refusal),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub outcome: Outcome,
    pub wall_ms: u64,
}

fn refusal(g: &Graph) -> Option<Refusal> {
    let n = g.order();
    if n == 0 {
        return Some(Refusal::Empty);
    }
    if g.regular_degree().is_none() {
        return Some(Refusal::NotRegular);
    }
    if n % 2 == 1 {
        return Some(Refusal::OddOrder(n));
    }
    let c = g.components().len();
    (c > 1).then_some(Refusal::Disconnected(c))
}

/// Two-coloring of a connected graph, if it has one.
fn bipartition(g: &Graph) -> Option<VertexPartition> {
    let n = g.order();
    let mut side = vec![usize::MAX; n];
    side[0] = 0;
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if side[w] == usize::MAX {
                side[w] = 1 - side[v];
                stack.push(w);
            } else if side[w] == side[v] {
                return None;
            }
        }
    }
    let classes = (0..2).map(|s| (0..n).filter(|&v| side[v] == s).collect()).collect();
    Some(VertexPartition {
        classes,
        kind: PartitionKind::Bipartition,
    })
}

fn constructive(g: &Graph, structure: Option<&VertexPartition>) -> Option<(Method, Factorization)> {
    let n = g.order();
    let mut attempts: Vec<(Method, Result<Factorization>)> = Vec::new();
    if g.size() == n * (n - 1) / 2 {
        attempts.push((Method::RoundRobin, round_robin(n)));
    }
    if let Some(p) = structure.filter(|p| p.order() == n) {
        let found = match p.kind {
            PartitionKind::Spread => (
                Method::HoffmanComplement,
                spread_to_hoffman(g, p).and_then(|(comp, coloring)| hoffman_complement_factorize(&comp, &coloring)),
            ),
            PartitionKind::HoffmanColoring => (Method::Hoffman, hoffman_factorize(g, p)),
            PartitionKind::Bipartition => (Method::Konig, bipartite_regular_factorize(g, p)),
            PartitionKind::Halves => (Method::Lemma22, lemma22_clique_or_coclique(g, &p.classes[0])),
        };
        attempts.push(found);
    }
    if let Some(p) = bipartition(g) {
        attempts.push((Method::Konig, bipartite_regular_factorize(g, &p)));
    }
    attempts
        .into_iter()
        .find_map(|(m, f)| f.ok().filter(|f| verify_factorization(g, f).is_ok()).map(|f| (m, f)))
}

fn exact_stage(g: &Graph, k: usize, cfg: &ClassifyConfig) -> Result<Outcome> {
    let certified = |c: Result<Certificate>| c.map(Outcome::Certified);
    match exact_chromatic_index(g, k, cfg.node_budget)? {
        ExactOutcome::Colorable { coloring, .. } => {
            let f = coloring
                .to_factorization(g)
                .expect("a k-coloring of a k-regular graph is a factorization");
            certified(Certificate::class1(g, Method::Exact, None, f))
        }
        ExactOutcome::BudgetExceeded { nodes } => Ok(Outcome::Inconclusive(format!(
            "exact search at {k} colors exceeded its budget after {nodes} nodes"
        ))),
        ExactOutcome::NotColorable { nodes } => match exact_chromatic_index(g, k + 1, cfg.node_budget)? {
            ExactOutcome::Colorable { coloring, .. } => certified(Certificate::class2(g, nodes, &coloring)),
            ExactOutcome::BudgetExceeded { nodes } => Ok(Outcome::Inconclusive(format!(
                "not {k}-edge-colorable, but the search at {} colors exceeded its budget after {nodes} nodes",
                k + 1
            ))),
            ExactOutcome::NotColorable { .. } => Err(Error::Precondition(format!(
                "exact search found no {}-edge-coloring, contradicting Vizing's theorem",
                k + 1
            ))),
        },
    }
}

/// Runs the pipeline on `g`. `structure` is an optional known partition
/// (a spread, a Hoffman coloring, a bipartition or two halves) that
/// unlocks the constructive routes.
///
/// Class 2 is only ever reported after a completed exhaustive search at
/// `k` colors.
pub fn classify(g: &Graph, structure: Option<&VertexPartition>, cfg: &ClassifyConfig) -> Result<Classification> {
    let start = Instant::now();
    let outcome = run(g, structure, cfg)?;
    Ok(Classification {
        outcome,
        wall_ms: start.elapsed().as_millis() as u64,
    })
}

fn run(g: &Graph, structure: Option<&VertexPartition>, cfg: &ClassifyConfig) -> Result<Outcome> {
    if let Some(r) = refusal(g) {
        return Ok(Outcome::Refused(r));
    }
    let k = g.regular_degree().expect("checked regular");
    if cfg.strategy != Strategy::Heuristic {
        if let Some((method, f)) = constructive(g, structure) {
            return Certificate::class1(g, method, None, f).map(Outcome::Certified);
        }
        if cfg.strategy == Strategy::Constructive {
            return Ok(Outcome::Inconclusive("no constructive route applies".into()));
        }
    }
    let stats = match heuristic_factorize(g, &cfg.search)? {
        HeuristicOutcome::Found {
            factorization, seed, ..
        } => {
            return Certificate::class1(g, Method::Heuristic, Some(seed), factorization).map(Outcome::Certified);
        }
        HeuristicOutcome::Exhausted(stats) => stats,
    };
    let exhausted = format!(
        "heuristic exhausted after {} restarts (best depth {} of {k})",
        stats.restarts, stats.best_depth
    );
    if cfg.strategy == Strategy::Auto && g.size() <= cfg.exact_edge_limit {
        return match exact_stage(g, k, cfg)? {
            Outcome::Inconclusive(why) => Ok(Outcome::Inconclusive(format!("{exhausted}; {why}"))),
            done => Ok(done),
        };
    }
    Ok(Outcome::Inconclusive(exhausted))
}

/// `path` with `suffix` appended to its file name.
pub fn sidecar(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

/// Reads a graph6 file and its optional `.partition` sidecar. The sidecar
/// applies only to single-graph files.
pub fn load_graphs(path: &Path) -> Result<(Vec<Graph>, Option<VertexPartition>)> {
    let graphs = read_graph6_file(&fs::read_to_string(path)?)?;
    let side = sidecar(path, ".partition");
    let structure = match fs::read_to_string(&side) {
        Ok(text) if graphs.len() == 1 => Some(VertexPartition::from_text(&text)?),
        _ => None,
    };
    Ok((graphs, structure))
}

/// The `.g6` files directly inside `dir`, sorted by name.
pub fn graph_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for entry in fs::read_dir(dir)? {
        let path = entry?.path();
        if path.is_file() && path.extension().is_some_and(|e| e == "g6") {
            out.push(path);
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EntryStatus {
    Class1(Method),
    Class2,
    Inconclusive(String),
    /// Includes files that could not be read or parsed.
    Refused(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatchEntry {
    pub path: PathBuf,
    /// Position within a multi-graph file.
    pub index: Option<usize>,
    pub status: EntryStatus,
    pub cert: Option<PathBuf>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BatchSummary {
    pub entries: Vec<BatchEntry>,
    pub wall_ms: u64,
}

impl BatchSummary {
    fn count(&self, pred: impl Fn(&EntryStatus) -> bool) -> usize {
        self.entries.iter().filter(|e| pred(&e.status)).count()
    }

    pub fn class1(&self) -> usize {
        self.count(|s| matches!(s, EntryStatus::Class1(_)))
    }

    pub fn class2(&self) -> usize {
        self.count(|s| matches!(s, EntryStatus::Class2))
    }

    pub fn inconclusive(&self) -> usize {
        self.count(|s| matches!(s, EntryStatus::Inconclusive(_)))
    }

    pub fn refused(&self) -> usize {
        self.count(|s| matches!(s, EntryStatus::Refused(_)))
    }

    /// True when some entry was inconclusive or refused.
    pub fn failed(&self) -> bool {
        self.inconclusive() + self.refused() > 0
    }

    /// One line per entry, then the counts and the wall time.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            let name = match e.index {
                Some(i) => format!("{}#{i}", e.path.display()),
                None => e.path.display().to_string(),
            };
            let status = match &e.status {
                EntryStatus::Class1(m) => format!("class 1 ({m})"),
                EntryStatus::Class2 => "class 2 (exact)".to_string(),
                EntryStatus::Inconclusive(why) => format!("inconclusive: {why}"),
                EntryStatus::Refused(why) => format!("refused: {why}"),
            };
            s.push_str(&format!("{name}: {status}\n"));
        }
        s.push_str(&format!(
            "class1: {}\nclass2: {}\ninconclusive: {}\nrefused: {}\nwall_ms: {}\n",
            self.class1(),
            self.class2(),
            self.inconclusive(),
            self.refused(),
            self.wall_ms
        ));
        s
    }
}

fn process_file(path: &Path, cfg: &ClassifyConfig) -> Vec<BatchEntry> {
    let entry = |index, status, cert| BatchEntry {
        path: path.to_path_buf(),
        index,
        status,
        cert,
    };
    let (graphs, structure) = match load_graphs(path) {
        Ok(x) => x,
        Err(e) => return vec![entry(None, EntryStatus::Refused(format!("unreadable: {e}")), None)],
    };
    let multi = graphs.len() > 1;
    graphs
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let index = multi.then_some(i);
            let out = match classify(g, structure.as_ref(), cfg) {
                Ok(c) => c.outcome,
                Err(e) => return entry(index, EntryStatus::Inconclusive(e.to_string()), None),
            };
            match out {
                Outcome::Certified(cert) => {
                    let target = sidecar(path, &if multi { format!(".{i}.cert") } else { ".cert".into() });
                    if let Err(e) = fs::write(&target, write_certificate(&cert)) {
                        return entry(
                            index,
                            EntryStatus::Inconclusive(format!("cannot write certificate: {e}")),
                            None,
                        );
                    }
                    let status = match cert.class() {
                        1 => EntryStatus::Class1(cert.method),
                        _ => EntryStatus::Class2,
                    };
                    entry(index, status, Some(target))
                }
                Outcome::Inconclusive(why) => entry(index, EntryStatus::Inconclusive(why), None),
                Outcome::Refused(r) => entry(index, EntryStatus::Refused(r.to_string()), None),
            }
        })
        .collect()
}

/// Classifies every graph in `paths`, writing `FILE.cert` next to each
/// single-graph input (`FILE.<i>.cert` for multi-graph files). Whole files
/// are spread over `jobs` workers; entries come back in input order.
pub fn batch_run(paths: &[PathBuf], cfg: &ClassifyConfig, jobs: usize) -> Result<BatchSummary> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    let entries = pool.install(|| {
        paths
            .par_iter()
            .map(|p| process_file(p, cfg))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    });
    Ok(BatchSummary {
        entries,
        wall_ms: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{lattice, petersen, row_spread, triangular};

    fn certified(g: &Graph, structure: Option<&VertexPartition>) -> Certificate {
        match classify(g, structure, &ClassifyConfig::default()).unwrap().outcome {
            Outcome::Certified(c) => c,
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn petersen_is_class_two() {
        let c = certified(&petersen(), None);
        assert_eq!((c.class(), c.method), (2, Method::Exact));
    }

    #[test]
    fn triangular5_is_class_one() {
        let c = certified(&triangular(5).unwrap(), None);
        assert_eq!((c.class(), c.k, c.method), (1, 6, Method::Heuristic));
    }

    #[test]
    fn lattice_uses_its_spread() {
        let c = certified(&lattice(4).unwrap(), Some(&row_spread(4)));
        assert_eq!((c.class(), c.method), (1, Method::HoffmanComplement));
    }

    #[test]
    fn auto_detected_routes() {
        assert_eq!(certified(&Graph::complete(8), None).method, Method::RoundRobin);
        assert_eq!(certified(&Graph::cycle(6), None).method, Method::Konig);
    }

    #[test]
    fn refusals() {
        let refused = |g: &Graph| match classify(g, None, &ClassifyConfig::default()).unwrap().outcome {
            Outcome::Refused(r) => r,
            other => panic!("{other:?}"),
        };
        assert_eq!(refused(&Graph::cycle(5)), Refusal::OddOrder(5));
        assert_eq!(refused(&Graph::path(4)), Refusal::NotRegular);
        let two_squares = Graph::new(8, &[(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7)]).unwrap();
        assert_eq!(refused(&two_squares), Refusal::Disconnected(2));
    }

    #[test]
    fn strategies_limit_stages() {
        let cfg = ClassifyConfig {
            strategy: Strategy::Constructive,
            ..ClassifyConfig::default()
        };
        assert!(matches!(
            classify(&petersen(), None, &cfg).unwrap().outcome,
            Outcome::Inconclusive(_)
        ));
        let cfg = ClassifyConfig {
            strategy: Strategy::Heuristic,
            search: SearchConfig {
                max_restarts: 3,
                ..SearchConfig::default()
            },
            ..ClassifyConfig::default()
        };
        assert!(matches!(
            classify(&petersen(), None, &cfg).unwrap().outcome,
            Outcome::Inconclusive(_)
        ));
    }
}
