//! Constructors for the strongly regular families: triangular graphs,
//! lattice and Latin square graphs, block graphs of Steiner 2-designs, and
//! the imprimitive graphs `ℓK_m` and their complements.
//!
//! Vertex orderings are fixed: Latin square cells `(r, c)` map to `r·m + c`,
//! and the 2-subsets of `{0..m-1}` are listed lexicographically.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// What a vertex partition is meant to witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartitionKind {
    /// Every class is a clique.
    Spread,
    /// Every class is a coclique.
    HoffmanColoring,
    /// Two classes, all edges crossing.
    Bipartition,
    /// Two classes of equal size.
    Halves,
}

impl PartitionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            PartitionKind::Spread => "spread",
            PartitionKind::HoffmanColoring => "hoffman-coloring",
            PartitionKind::Bipartition => "bipartition",
            PartitionKind::Halves => "halves",
        }
    }
}

impl FromStr for PartitionKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "spread" => PartitionKind::Spread,
            "hoffman-coloring" => PartitionKind::HoffmanColoring,
            "bipartition" => PartitionKind::Bipartition,
            "halves" => PartitionKind::Halves,
            _ => return Err(Error::InvalidInput(format!("unknown partition kind {s:?}"))),
        })
    }
}

/// Ordered disjoint vertex classes covering `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    pub classes: Vec<Vec<usize>>,
    pub kind: PartitionKind,
}

impl VertexPartition {
    /// Checks disjointness and coverage of `0..n`; classes are kept in the
    /// given order.
    pub fn new(n: usize, classes: Vec<Vec<usize>>, kind: PartitionKind) -> Result<Self> {
        let mut seen = vec![false; n];
        for class in &classes {
            for &v in class {
                if v >= n {
                    return Err(Error::InvalidVertex(v, n));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidInput(format!("vertex {v} in two classes")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidInput(format!("vertex {v} not covered")));
        }
        Ok(VertexPartition { classes, kind })
    }

    pub fn order(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    /// Class index of every vertex.
    pub fn class_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.order()];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                out[v] = i;
            }
        }
        out
    }

    /// Checks the clique/coclique property implied by `kind` in `g`.
    pub fn check_kind(&self, g: &Graph) -> bool {
        if self.order() != g.order() {
            return false;
        }
        match self.kind {
            PartitionKind::Spread => self.classes.iter().all(|c| g.is_clique(c)),
            PartitionKind::HoffmanColoring => self.classes.iter().all(|c| g.is_coclique(c)),
            PartitionKind::Bipartition => self.classes.len() == 2 && self.classes.iter().all(|c| g.is_coclique(c)),
            PartitionKind::Halves => self.classes.len() == 2 && self.classes[0].len() == self.classes[1].len(),
        }
    }

    /// Text form: the kind on the first line, then one class per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.kind.as_str());
        for class in &self.classes {
            let items: Vec<String> = class.iter().map(usize::to_string).collect();
            s.push_str(&items.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (_, head) = lines.next().ok_or(Error::Format {
            line: 1,
            msg: "empty partition".into(),
        })?;
        let kind: PartitionKind = head.trim().parse().map_err(|_| Error::Format {
            line: 1,
            msg: format!("unknown partition kind {head:?}"),
        })?;
        let mut classes = Vec::new();
        for (i, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            classes.push(parse_ints(line, i + 1)?);
        }
        let n = classes.iter().map(Vec::len).sum();
        VertexPartition::new(n, classes, kind)
    }
}

fn parse_ints(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| {
            t.parse().map_err(|_| Error::Format {
                line: lineno,
                msg: format!("expected an integer, found {t:?}"),
            })
        })
        .collect()
}

/// `t` mutually orthogonal Latin squares of order `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatinSquareSet {
    m: usize,
    squares: Vec<Vec<Vec<usize>>>,
}

impl LatinSquareSet {
    /// Validates the Latin property of each square and pairwise
    /// orthogonality by exhaustive scan.
    pub fn new(m: usize, squares: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        if m < 2 {
            return Err(Error::ParameterRange(format!("order {m} < 2")));
        }
        for (idx, sq) in squares.iter().enumerate() {
            if !is_latin(m, sq) {
                return Err(Error::InvalidInput(format!("square {idx} is not Latin of order {m}")));
            }
        }
        for a in 0..squares.len() {
            for b in a + 1..squares.len() {
                if !orthogonal(m, &squares[a], &squares[b]) {
                    return Err(Error::InvalidInput(format!("squares {a} and {b} not orthogonal")));
                }
            }
        }
        Ok(LatinSquareSet { m, squares })
    }

    /// The empty set of squares, whose graph is the lattice graph.
    pub fn empty(m: usize) -> Result<Self> {
        LatinSquareSet::new(m, Vec::new())
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn count(&self) -> usize {
        self.squares.len()
    }

    pub fn squares(&self) -> &[Vec<Vec<usize>>] {
        &self.squares
    }

    /// First line `m t`, then the `t·m` rows.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.m, self.squares.len());
        for sq in &self.squares {
            for row in sq {
                let items: Vec<String> = row.iter().map(usize::to_string).collect();
                s.push_str(&items.join(" "));
                s.push('\n');
            }
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut rows = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| parse_ints(l, i + 1).map(|v| (i + 1, v)));
        let (line, head) = rows.next().ok_or(Error::Format {
            line: 1,
            msg: "empty input".into(),
        })??;
        let [m, t] = head[..] else {
            return Err(Error::Format {
                line,
                msg: "header must be `m t`".into(),
            });
        };
        let mut squares = Vec::with_capacity(t);
        for _ in 0..t {
            let mut sq = Vec::with_capacity(m);
            for _ in 0..m {
                let (line, row) = rows.next().ok_or(Error::Format {
                    line: usize::MAX,
                    msg: "missing rows".into(),
                })??;
                if row.len() != m {
                    return Err(Error::Format {
                        line,
                        msg: format!("row has {} entries, expected {m}", row.len()),
                    });
                }
                sq.push(row);
            }
            squares.push(sq);
        }
        if let Some(extra) = rows.next() {
            let (line, _) = extra?;
            return Err(Error::Format {
                line,
                msg: "trailing rows".into(),
            });
        }
        LatinSquareSet::new(m, squares)
    }
}

fn is_latin(m: usize, sq: &[Vec<usize>]) -> bool {
    if sq.len() != m || sq.iter().any(|r| r.len() != m) {
        return false;
    }
    fn perm(m: usize, it: impl Iterator<Item = usize>) -> bool {
        let mut seen = vec![false; m];
        it.into_iter().all(|x| x < m && !std::mem::replace(&mut seen[x], true))
    }
    (0..m).all(|i| perm(m, sq[i].iter().copied()) && perm(m, (0..m).map(|r| sq[r][i])))
}

fn orthogonal(m: usize, a: &[Vec<usize>], b: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; m * m];
    (0..m).all(|i| (0..m).all(|j| !std::mem::replace(&mut seen[a[i][j] * m + b[i][j]], true)))
}

/// The cyclic square `L[i][j] = (i + j) mod m`.
pub fn cyclic_latin_square(m: usize) -> Result<LatinSquareSet> {
    let sq = (0..m).map(|i| (0..m).map(|j| (i + j) % m).collect()).collect();
    LatinSquareSet::new(m, vec![sq])
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Squares `L_a[i][j] = (a·i + j) mod p` for `a = 1..=t`.
pub fn mols_prime(p: usize, t: usize) -> Result<LatinSquareSet> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if t == 0 || t >= p {
        return Err(Error::ParameterRange(format!("need 1 <= t <= {}, got {t}", p - 1)));
    }
    let squares = (1..=t)
        .map(|a| (0..p).map(|i| (0..p).map(|j| (a * i + j) % p).collect()).collect())
        .collect();
    LatinSquareSet::new(p, squares)
}

/// Three mutually orthogonal squares of order 4 from GF(4): `L_a[i][j] = a·i + j`.
pub fn mols4() -> LatinSquareSet {
    // GF(4) = GF(2)[x]/(x² + x + 1); elements 0, 1, x = 2, x + 1 = 3.
    fn mul(a: usize, b: usize) -> usize {
        let mut r = 0;
        for bit in 0..2 {
            if b >> bit & 1 == 1 {
                r ^= a << bit;
            }
        }
        if r & 4 != 0 {
            r ^= 0b111;
        }
        r
    }
    let squares = (1..4)
        .map(|a| (0..4).map(|i| (0..4).map(|j| mul(a, i) ^ j).collect()).collect())
        .collect();
    LatinSquareSet::new(4, squares).expect("GF(4) squares are mutually orthogonal")
}

/// Cells `r·m + c`; adjacent when in the same row, the same column, or
/// carrying the same symbol in some square.
pub fn latin_square_graph(ls: &LatinSquareSet) -> Graph {
    let m = ls.m;
    Graph::from_fn(m * m, |a, b| {
        let (ra, ca, rb, cb) = (a / m, a % m, b / m, b % m);
        ra == rb || ca == cb || ls.squares.iter().any(|sq| sq[ra][ca] == sq[rb][cb])
    })
}

/// The lattice graph `L(m)`, the Latin square graph of the empty set.
pub fn lattice(m: usize) -> Result<Graph> {
    if m < 2 {
        return Err(Error::ParameterRange(format!("lattice order {m} < 2")));
    }
    Ok(latin_square_graph(&LatinSquareSet::empty(m)?))
}

/// The `m` rows of an `m × m` Latin square graph, each a clique.
pub fn row_spread(m: usize) -> VertexPartition {
    let classes = (0..m).map(|r| (r * m..(r + 1) * m).collect()).collect();
    VertexPartition {
        classes,
        kind: PartitionKind::Spread,
    }
}

/// The lexicographic list of 2-subsets of `0..m`, the vertex labels of `T(m)`.
pub fn pairs(m: usize) -> Vec<(usize, usize)> {
    (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).collect()
}

/// The triangular graph `T(m)`, the line graph of `K_m`.
pub fn triangular(m: usize) -> Result<Graph> {
    if m < 4 {
        return Err(Error::ParameterRange(format!("triangular order {m} < 4")));
    }
    let p = pairs(m);
    Ok(Graph::from_fn(p.len(), |x, y| {
        let (a, b) = p[x];
        let (c, d) = p[y];
        a == c || a == d || b == c || b == d
    }))
}

/// The Petersen graph, the complement of `T(5)`.
pub fn petersen() -> Graph {
    triangular(5).expect("m = 5 is in range").complement()
}

/// A Steiner 2-design: every pair of points lies in exactly one block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Design {
    m: usize,
    ell: usize,
    blocks: Vec<Vec<usize>>,
}

impl Design {
    pub fn new(m: usize, ell: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if ell < 2 || ell > m {
            return Err(Error::ParameterRange(format!("block size {ell} with {m} points")));
        }
        let mut covered = vec![false; m * m];
        let mut blocks = blocks;
        for (bi, block) in blocks.iter_mut().enumerate() {
            block.sort_unstable();
            if block.len() != ell || block.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidInput(format!("block {bi} is not an {ell}-set")));
            }
            if let Some(&p) = block.iter().find(|&&p| p >= m) {
                return Err(Error::InvalidInput(format!("block {bi} has point {p} >= {m}")));
            }
            for (i, &a) in block.iter().enumerate() {
                for &b in &block[i + 1..] {
                    if std::mem::replace(&mut covered[a * m + b], true) {
                        return Err(Error::InvalidInput(format!("pair {a},{b} covered twice")));
                    }
                }
            }
        }
        for a in 0..m {
            for b in a + 1..m {
                if !covered[a * m + b] {
                    return Err(Error::InvalidInput(format!("pair {a},{b} not covered")));
                }
            }
        }
        Ok(Design { m, ell, blocks })
    }

    /// The design of all 2-subsets of `0..m`.
    pub fn all_pairs(m: usize) -> Result<Self> {
        Design::new(m, 2, pairs(m).into_iter().map(|(a, b)| vec![a, b]).collect())
    }

    pub fn points(&self) -> usize {
        self.m
    }

    pub fn block_size(&self) -> usize {
        self.ell
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// First line `m ell`, then one block per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.m, self.ell);
        for b in &self.blocks {
            let items: Vec<String> = b.iter().map(usize::to_string).collect();
            s.push_str(&items.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut rows = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| parse_ints(l, i + 1).map(|v| (i + 1, v)));
        let (line, head) = rows.next().ok_or(Error::Format {
            line: 1,
            msg: "empty input".into(),
        })??;
        let [m, ell] = head[..] else {
            return Err(Error::Format {
                line,
                msg: "header must be `m ell`".into(),
            });
        };
        let blocks = rows.map(|r| r.map(|(_, b)| b)).collect::<Result<Vec<_>>>()?;
        Design::new(m, ell, blocks)
    }
}

/// Bose's Steiner triple system on `Z_s × {0,1,2}`, `v = 3s`, `s` odd.
/// Point `(x, i)` is numbered `i·s + x`.
pub fn bose_sts(v: usize) -> Result<Design> {
    if v < 9 || v % 6 != 3 {
        return Err(Error::ParameterRange(format!(
            "Bose construction needs v ≡ 3 mod 6, v >= 9; got {v}"
        )));
    }
    let s = v / 3;
    let half = s.div_ceil(2); // inverse of 2 modulo odd s
    let pt = |x: usize, i: usize| (i % 3) * s + x;
    let mut blocks = Vec::with_capacity(v * (v - 1) / 6);
    for x in 0..s {
        blocks.push(vec![pt(x, 0), pt(x, 1), pt(x, 2)]);
    }
    for i in 0..3 {
        for x in 0..s {
            for y in x + 1..s {
                let z = (x + y) * half % s;
                blocks.push(vec![pt(x, i), pt(y, i), pt(z, i + 1)]);
            }
        }
    }
    Design::new(v, 3, blocks)
}

/// Blocks as vertices, adjacent when they share exactly one point.
pub fn block_graph(d: &Design) -> Graph {
    let sets: Vec<BTreeSet<usize>> = d.blocks.iter().map(|b| b.iter().copied().collect()).collect();
    Graph::from_fn(sets.len(), |a, b| sets[a].intersection(&sets[b]).count() == 1)
}

/// `ℓK_m`: `ℓ` disjoint cliques of order `m`, clique `i` on `i·m..(i+1)·m`.
pub fn disjoint_cliques(ell: usize, m: usize) -> Result<Graph> {
    if ell < 2 || m < 2 {
        return Err(Error::ParameterRange(format!("need l, m >= 2, got {ell}, {m}")));
    }
    Ok(Graph::from_fn(ell * m, |a, b| a / m == b / m))
}

/// The complete multipartite graph with `ℓ` parts of size `m`.
pub fn complete_multipartite(ell: usize, m: usize) -> Result<Graph> {
    Ok(disjoint_cliques(ell, m)?.complement())
}

/// The parts of [`complete_multipartite`] (equivalently the cliques of
/// [`disjoint_cliques`]) in vertex order.
pub fn multipartite_parts(ell: usize, m: usize, kind: PartitionKind) -> VertexPartition {
    VertexPartition {
        classes: (0..ell).map(|i| (i * m..(i + 1) * m).collect()).collect(),
        kind,
    }
}

/// A constructible family member, as named on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Triangular(usize),
    Lattice(usize),
    /// Order `m` with `t` squares: `t = 1` uses the cyclic square, larger `t`
    /// uses the prime or order-4 constructions.
    LatinSquare(usize, usize),
    BlockGraphSts(usize),
    Cliques(usize, usize),
    Multipartite(usize, usize),
}

impl Family {
    /// Builds the graph along with the structural partition the family
    /// carries, if any.
    pub fn build(self) -> Result<(Graph, Option<VertexPartition>)> {
        Ok(match self {
            Family::Triangular(m) => (triangular(m)?, None),
            Family::Lattice(m) => (lattice(m)?, Some(row_spread(m))),
            Family::LatinSquare(m, t) => {
                let ls = latin_square_set(m, t)?;
                (latin_square_graph(&ls), Some(row_spread(m)))
            }
            Family::BlockGraphSts(v) => (block_graph(&bose_sts(v)?), None),
            Family::Cliques(l, m) => (
                disjoint_cliques(l, m)?,
                Some(multipartite_parts(l, m, PartitionKind::Spread)),
            ),
            Family::Multipartite(l, m) => (
                complete_multipartite(l, m)?,
                Some(multipartite_parts(l, m, PartitionKind::HoffmanColoring)),
            ),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Triangular(m) => write!(f, "triangular {m}"),
            Family::Lattice(m) => write!(f, "lattice {m}"),
            Family::LatinSquare(m, t) => write!(f, "latinsq {m} {t}"),
            Family::BlockGraphSts(v) => write!(f, "blockgraph-sts {v}"),
            Family::Cliques(l, m) => write!(f, "cliques {l} {m}"),
            Family::Multipartite(l, m) => write!(f, "multipartite {l} {m}"),
        }
    }
}

/// Picks a supported construction for `t` MOLS of order `m`.
pub fn latin_square_set(m: usize, t: usize) -> Result<LatinSquareSet> {
    match t {
        0 => LatinSquareSet::empty(m),
        1 => cyclic_latin_square(m),
        _ if m == 4 && t <= 3 => {
            let mut all = mols4();
            all.squares.truncate(t);
            Ok(all)
        }
        _ if is_prime(m as u64) => mols_prime(m, t),
        _ => Err(Error::Unsupported(format!("{t} MOLS of order {m}"))),
    }
}
