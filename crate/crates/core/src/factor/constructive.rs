//! Constructive 1-factorizations: König's theorem for regular bipartite
//! graphs, the circle method for `K_{2t}`, the two-halves compositions, and
//! the Hoffman-coloring constructions for a graph and its complement.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::families::{PartitionKind, VertexPartition};
use crate::graph::{edge, Edge, Graph};
use crate::matching::{maximum_matching, Matching};

use super::{verify_factorization, Factorization};

fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

/// Merges per-piece factors index by index into matchings of the host.
fn merge(parts: &[Factorization]) -> Factorization {
    let count = parts.first().map_or(0, Factorization::len);
    debug_assert!(parts.iter().all(|p| p.len() == count));
    Factorization {
        factors: (0..count)
            .map(|i| {
                Matching::new(parts.iter().flat_map(|p| p.factors[i].edges().iter().copied()))
                    .expect("pieces are vertex-disjoint")
            })
            .collect(),
    }
}

/// 1-factorization of a `d`-regular bipartite graph (`d ≥ 1`) whose edges
/// all cross `halves`. Each step removes one perfect matching, leaving a
/// `(d − 1)`-regular bipartite graph.
pub fn bipartite_regular_factorize(g: &Graph, halves: &VertexPartition) -> Result<Factorization> {
    if halves.classes.len() != 2 || halves.order() != g.order() {
        return Err(precondition("bipartition must have two classes covering the graph"));
    }
    let mut side = vec![false; g.order()];
    for &v in &halves.classes[0] {
        side[v] = true;
    }
    if g.edges().iter().any(|&(a, b)| side[a] == side[b]) {
        return Err(precondition("an edge lies inside one side of the bipartition"));
    }
    let d = match g.regular_degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(precondition("graph must be regular of positive degree")),
    };
    Ok(peel_bipartite(g, d))
}

fn peel_bipartite(g: &Graph, d: usize) -> Factorization {
    let mut cur = g.clone();
    let mut factors = Vec::with_capacity(d);
    for _ in 0..d {
        let m = maximum_matching(&cur);
        assert!(
            m.is_perfect_in(&cur),
            "regular bipartite graph without perfect matching"
        );
        let drop: HashSet<Edge> = m.edges().iter().copied().collect();
        cur = cur.filter_edges(|e| !drop.contains(&e));
        factors.push(m);
    }
    Factorization { factors }
}

/// Circle-method 1-factorization of `K_v`: vertex `v − 1` is fixed and in
/// round `i` it meets `i`, while `(i + j, i − j) mod (v − 1)` are paired for
/// `j = 1..v/2 − 1`.
pub fn round_robin(v: usize) -> Result<Factorization> {
    if v < 2 || v % 2 == 1 {
        return Err(precondition(format!("round robin needs an even order >= 2, got {v}")));
    }
    let r = v - 1;
    let factors = (0..r)
        .map(|i| {
            let pairs = std::iter::once((i, r)).chain((1..v / 2).map(|j| ((i + j) % r, (i + r - j) % r)));
            Matching::new(pairs).expect("circle method pairs are disjoint")
        })
        .collect();
    Ok(Factorization { factors })
}

fn check_regular_connected_even(g: &Graph) -> Result<usize> {
    let k = g.regular_degree().ok_or_else(|| precondition("graph is not regular"))?;
    if g.order() % 2 == 1 {
        return Err(precondition("graph has odd order"));
    }
    if !g.is_connected() {
        return Err(precondition("graph is not connected"));
    }
    Ok(k)
}

fn complement_set(n: usize, set: &[usize]) -> Result<Vec<usize>> {
    let mut inside = vec![false; n];
    for &v in set {
        if v >= n {
            return Err(Error::InvalidVertex(v, n));
        }
        if std::mem::replace(&mut inside[v], true) {
            return Err(precondition(format!("vertex {v} repeated")));
        }
    }
    Ok((0..n).filter(|&v| !inside[v]).collect())
}

/// Combines 1-factorizations `f1`, `f2` of the two halves of `g` with a
/// König factorization of the edges between the halves.
///
/// `f1` factorizes `g[halves.classes[0]]` and `f2` factorizes
/// `g[halves.classes[1]]`, each with vertices relabeled `0..n/2` in class
/// order.
pub fn lemma22_compose(
    g: &Graph,
    halves: &VertexPartition,
    f1: &Factorization,
    f2: &Factorization,
) -> Result<Factorization> {
    let k = check_regular_connected_even(g)?;
    let n = g.order();
    if halves.classes.len() != 2 || halves.order() != n || halves.classes[0].len() != n / 2 {
        return Err(precondition("halves must be two classes of size n/2"));
    }
    let (v1, v2) = (&halves.classes[0], &halves.classes[1]);
    let (h1, map1) = g.subgraph_on(v1)?;
    let (h2, map2) = g.subgraph_on(v2)?;
    verify_factorization(&h1, f1).map_err(|e| precondition(format!("first half: {e}")))?;
    verify_factorization(&h2, f2).map_err(|e| precondition(format!("second half: {e}")))?;
    if f1.len() != f2.len() {
        return Err(precondition("halves have different degrees"));
    }
    let inner = merge(&[f1.relabel(&map1), f2.relabel(&map2)]);
    let mut side = vec![false; n];
    for &v in v1 {
        side[v] = true;
    }
    let cross = g.filter_edges(|(a, b)| side[a] != side[b]);
    let mut factors = inner.factors;
    if k > f1.len() {
        let bip = VertexPartition {
            classes: vec![v1.clone(), v2.clone()],
            kind: PartitionKind::Bipartition,
        };
        factors.extend(bipartite_regular_factorize(&cross, &bip)?.factors);
    }
    Ok(Factorization { factors })
}

/// 1-factorization of a connected regular graph of even order whose vertex
/// set splits into two halves that are both cliques or both cocliques.
///
/// The clique case with odd half size `h` uses a perfect matching `F`
/// between the halves: the first clique gets the circle coloring with `h`
/// colors (color `c` on pairs `a + b ≡ 2c mod h`, so color `a` is missing
/// at vertex `a`), the second clique copies it through `F`, and each
/// `F`-edge takes the one color missing at both ends.
pub fn lemma22_clique_or_coclique(g: &Graph, v1: &[usize]) -> Result<Factorization> {
    let k = check_regular_connected_even(g)?;
    let n = g.order();
    if v1.len() * 2 != n {
        return Err(precondition("v1 must contain half of the vertices"));
    }
    let v2 = complement_set(n, v1)?;
    let halves = VertexPartition {
        classes: vec![v1.to_vec(), v2.clone()],
        kind: PartitionKind::Halves,
    };
    if g.is_coclique(v1) {
        if !g.is_coclique(&v2) {
            return Err(precondition("v1 is a coclique but its complement is not"));
        }
        return bipartite_regular_factorize(
            g,
            &VertexPartition {
                kind: PartitionKind::Bipartition,
                ..halves
            },
        );
    }
    if !g.is_clique(v1) {
        return Err(precondition("v1 is neither a clique nor a coclique"));
    }
    if !g.is_clique(&v2) {
        return Err(precondition("v1 is a clique but its complement is not"));
    }
    let h = n / 2;
    if h.is_multiple_of(2) {
        let inner = round_robin(h)?;
        return lemma22_compose(g, &halves, &inner, &inner);
    }
    let mut side = vec![false; n];
    for &v in v1 {
        side[v] = true;
    }
    let cross = g.filter_edges(|(a, b)| side[a] != side[b]);
    let f = maximum_matching(&cross);
    assert!(
        f.is_perfect_in(&cross),
        "regular bipartite cross graph without perfect matching"
    );
    let partner = f.mates(n);
    let img = |u: usize| partner[u].expect("perfect matching covers every vertex");
    let half_inv = h.div_ceil(2);
    let mut factors = Vec::with_capacity(k);
    for c in 0..h {
        let mut es = vec![(v1[c], img(v1[c]))];
        for a in 0..h {
            for b in a + 1..h {
                if (a + b) * half_inv % h == c {
                    es.push((v1[a], v1[b]));
                    es.push((img(v1[a]), img(v1[b])));
                }
            }
        }
        factors.push(Matching::new(es).expect("color class is a matching"));
    }
    if k > h {
        let in_f: HashSet<Edge> = f.edges().iter().copied().collect();
        let rest = cross.filter_edges(|e| !in_f.contains(&e));
        let bip = VertexPartition {
            classes: vec![v1.to_vec(), v2],
            kind: PartitionKind::Bipartition,
        };
        factors.extend(bipartite_regular_factorize(&rest, &bip)?.factors);
    }
    Ok(Factorization { factors })
}

/// Checked shape of a Hoffman coloring: equal coclique classes with every
/// vertex having `per_class` neighbors in each class other than its own.
struct HoffmanShape {
    class_size: usize,
    per_class: usize,
}

fn hoffman_shape(g: &Graph, classes: &VertexPartition) -> Result<HoffmanShape> {
    let bad = |m: String| Error::NotHoffman(m);
    let q = classes.classes.len();
    if classes.order() != g.order() || q < 2 {
        return Err(bad("need at least two classes covering the graph".into()));
    }
    let k = g.regular_degree().ok_or_else(|| bad("graph is not regular".into()))?;
    let size = classes.classes[0].len();
    if classes.classes.iter().any(|c| c.len() != size) {
        return Err(bad("classes differ in size".into()));
    }
    if let Some(i) = classes.classes.iter().position(|c| !g.is_coclique(c)) {
        return Err(bad(format!("class {i} is not a coclique")));
    }
    if k % (q - 1) != 0 {
        return Err(bad(format!("degree {k} not divisible by {}", q - 1)));
    }
    let per = k / (q - 1);
    let class_of = classes.class_of();
    let mut count = vec![0usize; q];
    for v in 0..g.order() {
        count.fill(0);
        for &w in g.neighbors(v) {
            count[class_of[w]] += 1;
        }
        if let Some(j) = (0..q).find(|&j| j != class_of[v] && count[j] != per) {
            return Err(bad(format!(
                "vertex {v} has {} neighbors in class {j}, expected {per}",
                count[j]
            )));
        }
    }
    Ok(HoffmanShape {
        class_size: size,
        per_class: per,
    })
}

/// Class pairs of each round of the circle method on `q` classes.
fn class_rounds(q: usize) -> Result<Vec<Vec<(usize, usize)>>> {
    Ok(round_robin(q)?.factors.iter().map(|m| m.edges().to_vec()).collect())
}

fn round_bipartite(g: &Graph, classes: &VertexPartition, pairs: &[(usize, usize)]) -> Result<Factorization> {
    let class_of = classes.class_of();
    let mut partner = vec![usize::MAX; classes.classes.len()];
    for &(a, b) in pairs {
        partner[a] = b;
        partner[b] = a;
    }
    let sub = g.filter_edges(|(u, v)| partner[class_of[u]] == class_of[v]);
    let mut left = Vec::new();
    let mut right = Vec::new();
    for &(a, b) in pairs {
        left.extend_from_slice(&classes.classes[a]);
        right.extend_from_slice(&classes.classes[b]);
    }
    let bip = VertexPartition {
        classes: vec![left, right],
        kind: PartitionKind::Bipartition,
    };
    bipartite_regular_factorize(&sub, &bip)
}

/// 1-factorization of a regular graph from a Hoffman coloring with an even
/// number `2t` of classes: a round-robin schedule of class pairs splits the
/// edges into `2t − 1` regular bipartite graphs, each factored by König.
pub fn hoffman_factorize(g: &Graph, classes: &VertexPartition) -> Result<Factorization> {
    hoffman_shape(g, classes)?;
    let q = classes.classes.len();
    if q % 2 == 1 {
        return Err(Error::NotHoffman(format!("{q} classes; an even number is required")));
    }
    let mut factors = Vec::new();
    for pairs in class_rounds(q)? {
        factors.extend(round_bipartite(g, classes, &pairs)?.factors);
    }
    Ok(Factorization { factors })
}

/// 1-factorization of `complement(g)` from a Hoffman coloring of `g`.
///
/// In the complement each class is a clique. The first round of class pairs
/// is merged with those cliques: each pair `S_a ∪ S_b` is two cliques joined
/// by a regular bipartite graph, factored by [`lemma22_clique_or_coclique`].
/// The remaining rounds are regular bipartite graphs.
///
/// When the complement has no edges between classes it is a disjoint union
/// of cliques: factored directly for even class size, otherwise
/// [`Error::DisjointCliques`].
pub fn hoffman_complement_factorize(g: &Graph, classes: &VertexPartition) -> Result<Factorization> {
    let shape = hoffman_shape(g, classes)?;
    let q = classes.classes.len();
    let s = shape.class_size;
    let cross = s - shape.per_class;
    let comp = g.complement();
    if cross == 0 {
        if s % 2 == 1 {
            return Err(Error::DisjointCliques { count: q, size: s });
        }
        let inner = round_robin(s)?;
        let parts: Vec<_> = classes.classes.iter().map(|c| inner.relabel(c)).collect();
        return Ok(merge(&parts));
    }
    if q % 2 == 1 {
        return Err(Error::NotHoffman(format!("{q} classes; an even number is required")));
    }
    let rounds = class_rounds(q)?;
    let mut pieces = Vec::with_capacity(q / 2);
    for &(a, b) in &rounds[0] {
        let verts: Vec<usize> = classes.classes[a].iter().chain(&classes.classes[b]).copied().collect();
        let (piece, map) = comp.subgraph_on(&verts)?;
        let local: Vec<usize> = (0..s).collect();
        pieces.push(lemma22_clique_or_coclique(&piece, &local)?.relabel(&map));
    }
    let mut factors = merge(&pieces).factors;
    for pairs in &rounds[1..] {
        factors.extend(round_bipartite(&comp, classes, pairs)?.factors);
    }
    Ok(Factorization { factors })
}

/// Reinterprets a spread of `g` (a partition into cliques) as a Hoffman
/// coloring of `complement(g)`, checking the class-regularity condition
/// there.
pub fn spread_to_hoffman(g: &Graph, spread: &VertexPartition) -> Result<(Graph, VertexPartition)> {
    if spread.order() != g.order() {
        return Err(Error::NotSpread("partition does not cover the graph".into()));
    }
    if let Some(i) = spread.classes.iter().position(|c| !g.is_clique(c)) {
        return Err(Error::NotSpread(format!("class {i} is not a clique")));
    }
    let comp = g.complement();
    let coloring = VertexPartition {
        classes: spread.classes.clone(),
        kind: PartitionKind::HoffmanColoring,
    };
    hoffman_shape(&comp, &coloring).map_err(|e| Error::NotSpread(e.to_string()))?;
    Ok((comp, coloring))
}

/// Edge set helper used by tests elsewhere in the crate.
#[allow(dead_code)]
pub(crate) fn edge_set(f: &Factorization) -> Vec<Edge> {
    let mut es: Vec<Edge> = f
        .factors
        .iter()
        .flat_map(|m| m.edges().iter().map(|&(a, b)| edge(a, b)))
        .collect();
    es.sort_unstable();
    es
}
