//! Maximum matching in general graphs (Edmonds' blossom algorithm) and
//! seeded random perfect matchings.
//!
//! Randomization shuffles the order in which vertices are processed and the
//! order of every adjacency list, then runs a greedy pass followed by the
//! blossom augmentation. Any perfect matching `M` is reachable: if each
//! vertex's `M`-partner comes first in its list, the greedy pass already
//! returns `M`.

use crate::graph::{edge, Edge, Graph};
use crate::rng::RngState;

const NONE: usize = usize::MAX;

/// A set of pairwise disjoint edges, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    /// Normalizes and sorts; `None` if two edges share a vertex or an edge
    /// is a loop.
    pub fn new(edges: impl IntoIterator<Item = (usize, usize)>) -> Option<Matching> {
        let mut edges: Vec<Edge> = edges.into_iter().map(|(a, b)| edge(a, b)).collect();
        edges.sort_unstable();
        let mut ends: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        ends.sort_unstable();
        let disjoint = ends.windows(2).all(|w| w[0] != w[1]);
        (disjoint && edges.iter().all(|&(a, b)| a != b)).then_some(Matching { edges })
    }

    fn from_mates(mate: &[usize]) -> Matching {
        let edges = (0..mate.len())
            .filter(|&v| mate[v] != NONE && v < mate[v])
            .map(|v| (v, mate[v]))
            .collect();
        Matching { edges }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Every edge is in `g` and every vertex of `g` is covered.
    pub fn is_perfect_in(&self, g: &Graph) -> bool {
        2 * self.len() == g.order() && self.edges.iter().all(|&e| g.has_edge(e))
    }

    /// Partner of each vertex of a graph on `n` vertices.
    pub fn mates(&self, n: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; n];
        for &(a, b) in &self.edges {
            out[a] = Some(b);
            out[b] = Some(a);
        }
        out
    }
}

/// Edmonds' algorithm over explicit adjacency lists; the list order is the
/// search order.
struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: Vec<usize>,
    blocked: Option<usize>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: Vec::with_capacity(n),
            blocked: None,
        }
    }

    fn greedy(&mut self, order: &[usize]) {
        for &v in order {
            if self.mate[v] != NONE {
                continue;
            }
            if let Some(&w) = self.adj[v].iter().find(|&&w| self.mate[w] == NONE) {
                self.mate[v] = w;
                self.mate[w] = v;
            }
        }
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Searches for an augmenting path from the exposed vertex `root` and
    /// returns its far end.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push(root);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if Some(to) == self.blocked || self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn run(&mut self, order: &[usize]) {
        self.greedy(order);
        for &v in order {
            if self.mate[v] == NONE {
                if let Some(end) = self.find_path(v) {
                    self.augment(end);
                }
            }
        }
    }
}

fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect()
}

fn matching_on(adj: &[Vec<usize>], order: &[usize]) -> Vec<usize> {
    let mut b = Blossom::new(adj);
    b.run(order);
    b.mate
}

/// A maximum-cardinality matching, deterministic in the vertex labels.
pub fn maximum_matching(g: &Graph) -> Matching {
    let order: Vec<usize> = (0..g.order()).collect();
    Matching::from_mates(&matching_on(&adjacency(g), &order))
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.order().is_multiple_of(2) && 2 * maximum_matching(g).len() == g.order()
}

/// A Tutte–Berge witness for a maximum matching `m` of `g`: a vertex set
/// `U` with `odd(g − U) − |U| = n − 2|m|`.
///
/// `U` is the set `A` of the Gallai–Edmonds decomposition: the neighbors of
/// the vertices missed by some maximum matching, excluding those vertices.
pub fn tutte_berge_witness(g: &Graph, m: &Matching) -> Vec<usize> {
    let n = g.order();
    let adj = adjacency(g);
    let mut mates = vec![NONE; n];
    for &(a, b) in m.edges() {
        mates[a] = b;
        mates[b] = a;
    }
    let mut missable = vec![false; n];
    for v in 0..n {
        let u = mates[v];
        if u == NONE {
            missable[v] = true;
            continue;
        }
        // Does g − v have a matching as large as m? Unmatch v and look for
        // an augmenting path from its old partner avoiding v.
        let mut b = Blossom::new(&adj);
        b.mate = mates.clone();
        b.mate[u] = NONE;
        b.mate[v] = NONE;
        b.blocked = Some(v);
        missable[v] = b.find_path(u).is_some();
    }
    let mut witness: Vec<usize> = (0..n)
        .filter(|&v| !missable[v] && g.neighbors(v).iter().any(|&w| missable[w]))
        .collect();
    witness.sort_unstable();
    witness
}

/// A perfect matching drawn from the shuffled blossom search, or `None`
/// when the graph has none.
pub fn random_perfect_matching(g: &Graph, rng: &mut RngState) -> Option<Matching> {
    let mut adj = adjacency(g);
    random_perfect_matching_adj(&mut adj, rng).map(|mate| Matching::from_mates(&mate))
}

/// Shuffles `adj` in place and searches; returns the mate array of a
/// perfect matching.
pub(crate) fn random_perfect_matching_adj(adj: &mut [Vec<usize>], rng: &mut RngState) -> Option<Vec<usize>> {
    let n = adj.len();
    if n % 2 == 1 {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut order);
    for list in adj.iter_mut() {
        rng.shuffle(list);
    }
    let mate = matching_on(adj, &order);
    mate.iter().all(|&m| m != NONE).then_some(mate)
}

/// Repeatedly draws a random perfect matching and deletes its edges until
/// the remainder has none. Returns the matchings in extraction order.
pub fn disjoint_pm_greedy(g: &Graph, rng: &mut RngState) -> Vec<Matching> {
    let mut adj = adjacency(g);
    let mut out = Vec::new();
    while let Some(mate) = random_perfect_matching_adj(&mut adj, rng) {
        remove_matching(&mut adj, &mate);
        out.push(Matching::from_mates(&mate));
    }
    out
}

pub(crate) fn remove_matching(adj: &mut [Vec<usize>], mate: &[usize]) {
    for (v, list) in adj.iter_mut().enumerate() {
        if let Some(pos) = list.iter().position(|&w| w == mate[v]) {
            list.swap_remove(pos);
        }
    }
}

pub(crate) fn mates_to_matching(mate: &[usize]) -> Matching {
    Matching::from_mates(mate)
}
