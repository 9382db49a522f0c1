//! Class-1 and class-2 certificates and their text form.
//!
//! A class-1 certificate lists `k` perfect matchings partitioning the edges.
//! A class-2 certificate records that an exhaustive search at `k` colors
//! finished without a coloring, and carries a proper `(k + 1)`-edge-coloring
//! as a witness that `χ′ = k + 1`.
//!
//! The text form is ASCII with LF line endings:
//!
//! ```text
//! SRGEC 1
//! graph6: C~
//! n: 4 k: 3
//! class: 1
//! method: roundrobin
//! seed: -
//! factor 0: 0-3 1-2
//! factor 1: 0-2 1-3
//! factor 2: 0-1 2-3
//! ```
//!
//! A class-2 body is one `exact:` line followed by a `witness <k+1>` header
//! and one `color <i>:` line per color. Edges are written `a-b` with `a < b`
//! and listed in increasing order; the reader rejects any other order, so
//! every certificate has exactly one text form.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::factor::{verify_factorization, EdgeColoring, Factorization};
use crate::graph::{Edge, Graph};
use crate::graph6::to_graph6;
use crate::matching::Matching;

const MAGIC: &str = "SRGEC 1";

/// The route that produced a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Heuristic,
    Konig,
    RoundRobin,
    Lemma22,
    Hoffman,
    HoffmanComplement,
    Exact,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Heuristic => "heuristic",
            Method::Konig => "konig",
            Method::RoundRobin => "roundrobin",
            Method::Lemma22 => "lemma22",
            Method::Hoffman => "hoffman",
            Method::HoffmanComplement => "hoffman-complement",
            Method::Exact => "exact",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "heuristic" => Method::Heuristic,
            "konig" => Method::Konig,
            "roundrobin" => Method::RoundRobin,
            "lemma22" => Method::Lemma22,
            "hoffman" => Method::Hoffman,
            "hoffman-complement" => Method::HoffmanComplement,
            "exact" => Method::Exact,
            _ => return Err(Error::InvalidInput(format!("unknown method {s:?}"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Evidence {
    /// Class 1: the `k` factors in route order.
    Factors(Factorization),
    /// Class 2: search nodes spent proving `k` colors impossible, and the
    /// `k + 1` color classes of a proper coloring.
    Exact { nodes: u64, witness: Vec<Vec<Edge>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub graph6: String,
    pub n: usize,
    pub k: usize,
    pub method: Method,
    pub seed: Option<u64>,
    pub evidence: Evidence,
}

fn regular_degree(g: &Graph) -> Result<usize> {
    g.regular_degree()
        .ok_or_else(|| Error::Precondition("graph is not regular".into()))
}

impl Certificate {
    /// Packages a factorization of `g`; fails unless it verifies.
    pub fn class1(g: &Graph, method: Method, seed: Option<u64>, f: Factorization) -> Result<Certificate> {
        let k = regular_degree(g)?;
        verify_factorization(g, &f).map_err(|e| Error::InvalidCertificate(e.to_string()))?;
        Ok(Certificate {
            graph6: to_graph6(g)?,
            n: g.order(),
            k,
            method,
            seed,
            evidence: Evidence::Factors(f),
        })
    }

    /// Packages a completed `NotColorable` search at `k` colors with a
    /// proper `(k + 1)`-coloring; fails unless the coloring is proper.
    pub fn class2(g: &Graph, nodes: u64, witness: &EdgeColoring) -> Result<Certificate> {
        let k = regular_degree(g)?;
        if witness.colors != k + 1 || !witness.is_proper(g) {
            return Err(Error::InvalidCertificate(format!(
                "witness is not a proper {}-edge-coloring",
                k + 1
            )));
        }
        Ok(Certificate {
            graph6: to_graph6(g)?,
            n: g.order(),
            k,
            method: Method::Exact,
            seed: None,
            evidence: Evidence::Exact {
                nodes,
                witness: witness.classes(g),
            },
        })
    }

    pub fn class(&self) -> u8 {
        match self.evidence {
            Evidence::Factors(_) => 1,
            Evidence::Exact { .. } => 2,
        }
    }
}

/// Checks `cert` against `g`, explaining the first defect found.
///
/// Class 2 re-checks only the witness coloring; the exhaustive search it
/// records is taken as stated.
pub fn check_certificate(g: &Graph, cert: &Certificate) -> Result<()> {
    if to_graph6(g)? != cert.graph6 {
        return Err(Error::GraphMismatch);
    }
    let bad = |msg: String| Err(Error::InvalidCertificate(msg));
    if cert.n != g.order() {
        return bad(format!("n is {} but the graph has {} vertices", cert.n, g.order()));
    }
    if g.regular_degree() != Some(cert.k) {
        return bad(format!("graph is not {}-regular", cert.k));
    }
    match &cert.evidence {
        Evidence::Factors(f) => verify_factorization(g, f).or_else(|e| bad(e.to_string())),
        Evidence::Exact { witness, .. } => {
            if witness.len() != cert.k + 1 {
                return bad(format!("witness has {} colors, expected {}", witness.len(), cert.k + 1));
            }
            match EdgeColoring::from_classes(g, witness) {
                Some(c) if c.is_proper(g) => Ok(()),
                _ => bad("witness is not a proper edge coloring".into()),
            }
        }
    }
}

/// `Ok(true)` iff the certificate is valid for `g`; a certificate for a
/// different graph is [`Error::GraphMismatch`].
pub fn verify_certificate(g: &Graph, cert: &Certificate) -> Result<bool> {
    match check_certificate(g, cert) {
        Ok(()) => Ok(true),
        Err(Error::InvalidCertificate(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

fn edge_list(edges: &[Edge]) -> String {
    let mut s = String::new();
    for &(a, b) in edges {
        s.push_str(&format!(" {a}-{b}"));
    }
    s
}

pub fn write_certificate(cert: &Certificate) -> String {
    let mut s = format!(
        "{MAGIC}\ngraph6: {}\nn: {} k: {}\nclass: {}\nmethod: {}\nseed: {}\n",
        cert.graph6,
        cert.n,
        cert.k,
        cert.class(),
        cert.method,
        cert.seed.map_or_else(|| "-".to_string(), |s| s.to_string()),
    );
    match &cert.evidence {
        Evidence::Factors(f) => {
            for (i, m) in f.factors.iter().enumerate() {
                s.push_str(&format!("factor {i}:{}\n", edge_list(m.edges())));
            }
        }
        Evidence::Exact { nodes, witness } => {
            s.push_str(&format!(
                "exact: colors={} outcome=notcolorable nodes={nodes}\n",
                cert.k
            ));
            s.push_str(&format!("witness {}\n", witness.len()));
            for (i, class) in witness.iter().enumerate() {
                s.push_str(&format!("color {i}:{}\n", edge_list(class)));
            }
        }
    }
    s
}

struct Lines<'a> {
    lines: std::str::Split<'a, char>,
    at: usize,
}

impl<'a> Lines<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Format {
            line: self.at,
            msg: msg.into(),
        })
    }

    fn next(&mut self) -> Result<&'a str> {
        self.at += 1;
        match self.lines.next() {
            Some(l) if !l.is_empty() || self.at == 1 => Ok(l),
            _ => self.err("unexpected end of certificate"),
        }
    }

    /// The next line with `prefix` removed.
    fn field(&mut self, prefix: &str) -> Result<&'a str> {
        let line = self.next()?;
        match line.strip_prefix(prefix) {
            Some(rest) => Ok(rest),
            None => self.err(format!("expected {prefix:?}")),
        }
    }

    fn number<T: FromStr>(&self, text: &str) -> Result<T> {
        match text.parse() {
            Ok(v) if canonical_int(text) => Ok(v),
            _ => self.err(format!("expected a number, found {text:?}")),
        }
    }

    /// Edges after an indexed label such as `factor 3:`.
    fn edges(&self, rest: &str) -> Result<Vec<Edge>> {
        let Some(body) = rest.strip_prefix(' ').or((rest.is_empty()).then_some(rest)) else {
            return self.err("expected a space before the edge list");
        };
        let mut out: Vec<Edge> = Vec::new();
        if body.is_empty() {
            return Ok(out);
        }
        for tok in body.split(' ') {
            let Some((a, b)) = tok.split_once('-') else {
                return self.err(format!("malformed edge {tok:?}"));
            };
            let e: Edge = (self.number(a)?, self.number(b)?);
            if e.0 >= e.1 {
                return self.err(format!("edge {tok} is not written smaller endpoint first"));
            }
            if out.last().is_some_and(|&p| p >= e) {
                return self.err(format!("edge {tok} is out of order"));
            }
            out.push(e);
        }
        Ok(out)
    }

    fn indexed(&mut self, label: &str, i: usize) -> Result<Vec<Edge>> {
        let rest = self.field(&format!("{label} {i}:"))?;
        self.edges(rest)
    }
}

fn canonical_int(t: &str) -> bool {
    !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit()) && (t == "0" || !t.starts_with('0'))
}

/// Parses the text written by [`write_certificate`]. Anything other than
/// the canonical form is rejected with the offending line number.
pub fn read_certificate(text: &str) -> Result<Certificate> {
    let mut r = Lines {
        lines: text.split('\n'),
        at: 0,
    };
    if r.next()? != MAGIC {
        return r.err(format!("expected {MAGIC:?}"));
    }
    let graph6 = r.field("graph6: ")?.to_string();
    let nk = r.field("n: ")?;
    let Some((n, k)) = nk.split_once(" k: ") else {
        return r.err("expected \"n: <n> k: <k>\"");
    };
    let (n, k): (usize, usize) = (r.number(n)?, r.number(k)?);
    let class = r.field("class: ")?;
    if class != "1" && class != "2" {
        return r.err(format!("class must be 1 or 2, found {class:?}"));
    }
    let method: Method = match r.field("method: ")?.parse() {
        Ok(m) => m,
        Err(e) => return r.err(e.to_string()),
    };
    let seed = match r.field("seed: ")? {
        "-" => None,
        s => Some(r.number(s)?),
    };
    let evidence = if class == "1" {
        let mut factors = Vec::with_capacity(k);
        for i in 0..k {
            let edges = r.indexed("factor", i)?;
            match Matching::new(edges) {
                Some(m) => factors.push(m),
                None => return r.err("factor edges share a vertex"),
            }
        }
        Evidence::Factors(Factorization { factors })
    } else {
        if method != Method::Exact {
            return r.err("class 2 requires method exact");
        }
        let head = r.field("exact: colors=")?;
        let Some((colors, nodes)) = head.split_once(" outcome=notcolorable nodes=") else {
            return r.err("expected \"exact: colors=<k> outcome=notcolorable nodes=<N>\"");
        };
        if r.number::<usize>(colors)? != k {
            return r.err(format!("exact search must be at {k} colors"));
        }
        let nodes = r.number(nodes)?;
        let count: usize = {
            let w = r.field("witness ")?;
            r.number(w)?
        };
        if count != k + 1 {
            return r.err(format!("witness must use {} colors", k + 1));
        }
        let witness = (0..count).map(|i| r.indexed("color", i)).collect::<Result<_>>()?;
        Evidence::Exact { nodes, witness }
    };
    match r.lines.next() {
        None => return r.err("missing final newline"),
        Some("") => {}
        Some(_) => {
            r.at += 1;
            return r.err("trailing text after certificate");
        }
    }
    if r.lines.next().is_some() {
        r.at += 1;
        return r.err("trailing text after certificate");
    }
    Ok(Certificate {
        graph6,
        n,
        k,
        method,
        seed,
        evidence,
    })
}
