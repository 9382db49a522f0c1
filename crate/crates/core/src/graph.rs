//! Immutable simple graphs.
//!
//! Vertices are dense indices `0..n`. Every edge is stored in normal form
//! `(a, b)` with `a < b` and the edge list is sorted lexicographically, so two
//! graphs with the same edge set compare equal and serialize identically.

use std::fmt;

use crate::error::{Error, Result};

/// An edge in normal form, `0 <= .0 < .1 < n`.
pub type Edge = (usize, usize);

/// Normalizes an unordered pair to `(min, max)`.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// An undirected simple graph.
///
/// Adjacency is held both as a packed bit matrix (constant-time queries and
/// fast common-neighbor counts) and as sorted neighbor lists plus a sorted
/// edge list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    nbrs: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

/// Parameters `(n, k, λ, μ)` of a strongly regular graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SrgParams {
    pub n: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParams {
    pub const fn new(n: u64, k: u64, lambda: u64, mu: u64) -> Self {
        SrgParams { n, k, lambda, mu }
    }

    /// `0 < k < n - 1`.
    pub fn in_range(&self) -> bool {
        self.k > 0 && self.k + 1 < self.n
    }

    /// `k(k - λ - 1) = (n - k - 1)μ`, evaluated without underflow.
    pub fn counting_identity(&self) -> bool {
        let (n, k, l, m) = (self.n as i128, self.k as i128, self.lambda as i128, self.mu as i128);
        k * (k - l - 1) == (n - k - 1) * m
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.k, self.lambda, self.mu)
    }
}

impl Graph {
    /// Builds a graph from an arbitrary edge list. Pairs are normalized and
    /// deduplicated.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph> {
        for &(a, b) in edge_list {
            if a >= n || b >= n {
                return Err(Error::InvalidEdge(a, b, n));
            }
            if a == b {
                return Err(Error::LoopRejected(a));
            }
        }
        let mut edges: Vec<Edge> = edge_list.iter().map(|&(a, b)| edge(a, b)).collect();
        edges.sort_unstable();
        edges.dedup();
        Ok(Graph::from_sorted_edges(n, edges))
    }

    /// `edges` must already be normalized, sorted and duplicate-free.
    pub(crate) fn from_sorted_edges(n: usize, edges: Vec<Edge>) -> Graph {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let words = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; n * words];
        let mut nbrs = vec![Vec::new(); n];
        for &(a, b) in &edges {
            debug_assert!(a < b && b < n);
            bits[a * words + b / 64] |= 1 << (b % 64);
            bits[b * words + a / 64] |= 1 << (a % 64);
            nbrs[a].push(b);
            nbrs[b].push(a);
        }
        for list in &mut nbrs {
            list.sort_unstable();
        }
        Graph {
            n,
            words,
            bits,
            nbrs,
            edges,
        }
    }

    /// Builds a graph from a symmetric adjacency predicate.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if adjacent(a, b) {
                    edges.push((a, b));
                }
            }
        }
        Graph::from_sorted_edges(n, edges)
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true)
    }

    /// The cycle `C_n` on `0 - 1 - ... - (n-1) - 0`, `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).expect("cycle edges are valid")
    }

    /// The path `P_n` on `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path edges are valid")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.nbrs.iter().map(Vec::len).max().unwrap_or(0)
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Number of common neighbors of `u` and `v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        e.0 < self.n && e.1 < self.n && e.0 != e.1 && self.adjacent(e.0, e.1)
    }

    /// The complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |a, b| !self.adjacent(a, b))
    }

    /// Common degree if the graph is regular. `None` for the empty vertex set.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.nbrs.first()?.len();
        self.nbrs.iter().all(|l| l.len() == first).then_some(first)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.components().len() == 1
    }

    /// Connected components, each sorted, in order of their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.nbrs[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Strongly regular parameters, found by scanning every vertex pair.
    pub fn recognize_srg(&self) -> Option<SrgParams> {
        let k = self.regular_degree()?;
        if k == 0 || k + 1 >= self.n {
            return None;
        }
        let mut lambda = None;
        let mut mu = None;
        for u in 0..self.n {
            for v in u + 1..self.n {
                let c = self.common_neighbors(u, v);
                let slot = if self.adjacent(u, v) { &mut lambda } else { &mut mu };
                match *slot {
                    None => *slot = Some(c),
                    Some(x) if x != c => return None,
                    _ => {}
                }
            }
        }
        Some(SrgParams::new(self.n as u64, k as u64, lambda? as u64, mu? as u64))
    }

    /// Induced subgraph on `vertices`, relabeled `0..len` in the given
    /// order. The returned map sends new labels back to the original ones.
    pub fn subgraph_on(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(Error::InvalidVertex(v, self.n));
            }
            if index[v] != usize::MAX {
                return Err(Error::InvalidInput(format!("vertex {v} repeated")));
            }
            index[v] = i;
        }
        let mut edges = Vec::new();
        for &(a, b) in &self.edges {
            let (ia, ib) = (index[a], index[b]);
            if ia != usize::MAX && ib != usize::MAX {
                edges.push(edge(ia, ib));
            }
        }
        edges.sort_unstable();
        Ok((Graph::from_sorted_edges(vertices.len(), edges), vertices.to_vec()))
    }

    /// Spanning subgraph keeping only edges for which `keep` holds.
    pub fn filter_edges(&self, mut keep: impl FnMut(Edge) -> bool) -> Graph {
        let edges = self.edges.iter().copied().filter(|&e| keep(e)).collect();
        Graph::from_sorted_edges(self.n, edges)
    }

    /// Spanning subgraph on an edge subset; edges must belong to `self`.
    pub fn with_edges(&self, edges: &[Edge]) -> Result<Graph> {
        let mut es = edges.to_vec();
        es.sort_unstable();
        es.dedup();
        if let Some(&e) = es.iter().find(|&&e| !self.has_edge(e)) {
            return Err(Error::InvalidInput(format!("edge {}-{} not in graph", e.0, e.1)));
        }
        Ok(Graph::from_sorted_edges(self.n, es))
    }

    /// `true` if every pair of distinct vertices in `set` is adjacent.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.adjacent(u, v)))
    }

    /// `true` if no two vertices in `set` are adjacent.
    pub fn is_coclique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.adjacent(u, v)))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}
