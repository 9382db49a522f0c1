//! 1-factorizations and edge colorings.
//!
//! Every route here returns a [`Factorization`] that callers can check with
//! [`verify_factorization`]; nothing downstream trusts a route without that
//! check.

mod constructive;
mod exact;
mod heuristic;

pub use constructive::{
    bipartite_regular_factorize, hoffman_complement_factorize, hoffman_factorize, lemma22_clique_or_coclique,
    lemma22_compose, round_robin, spread_to_hoffman,
};
pub use exact::{exact_chromatic_index, ExactOutcome, DEFAULT_NODE_BUDGET};
pub use heuristic::{heuristic_factorize, HeuristicOutcome, SearchConfig, SearchStats};

use std::fmt;

use crate::graph::{Edge, Graph};
use crate::matching::Matching;

/// An ordered list of perfect matchings partitioning a graph's edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Factorization {
    pub factors: Vec<Matching>,
}

/// Why a candidate factorization was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorizationFault {
    NotRegular,
    WrongCount { expected: usize, found: usize },
    NotPerfect { factor: usize },
    ForeignEdge { factor: usize, edge: Edge },
    Repeated { edge: Edge },
    Uncovered { edge: Edge },
}

impl fmt::Display for FactorizationFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotRegular => write!(f, "host graph is not regular"),
            Self::WrongCount { expected, found } => write!(f, "expected {expected} factors, found {found}"),
            Self::NotPerfect { factor } => write!(f, "factor {factor} is not a perfect matching"),
            Self::ForeignEdge { factor, edge } => write!(f, "factor {factor} uses non-edge {}-{}", edge.0, edge.1),
            Self::Repeated { edge } => write!(f, "edge {}-{} appears in two factors", edge.0, edge.1),
            Self::Uncovered { edge } => write!(f, "edge {}-{} is in no factor", edge.0, edge.1),
        }
    }
}

impl Factorization {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Relabels every factor through `map` (new label -> old label).
    pub(crate) fn relabel(&self, map: &[usize]) -> Factorization {
        Factorization {
            factors: self
                .factors
                .iter()
                .map(|m| {
                    Matching::new(m.edges().iter().map(|&(a, b)| (map[a], map[b]))).expect("relabeling is injective")
                })
                .collect(),
        }
    }
}

/// Full check: `g` is `k`-regular, there are `k` factors, each is a perfect
/// matching of `g`, and together they cover every edge exactly once.
pub fn verify_factorization(g: &Graph, f: &Factorization) -> Result<(), FactorizationFault> {
    let k = match g.regular_degree() {
        Some(k) => k,
        None if g.order() == 0 => 0,
        None => return Err(FactorizationFault::NotRegular),
    };
    if f.factors.len() != k {
        return Err(FactorizationFault::WrongCount {
            expected: k,
            found: f.factors.len(),
        });
    }
    let mut used = std::collections::HashSet::with_capacity(g.size());
    for (i, m) in f.factors.iter().enumerate() {
        if let Some(&e) = m.edges().iter().find(|&&e| !g.has_edge(e)) {
            return Err(FactorizationFault::ForeignEdge { factor: i, edge: e });
        }
        if 2 * m.len() != g.order() {
            return Err(FactorizationFault::NotPerfect { factor: i });
        }
        for &e in m.edges() {
            if !used.insert(e) {
                return Err(FactorizationFault::Repeated { edge: e });
            }
        }
    }
    if let Some(&e) = g.edges().iter().find(|e| !used.contains(e)) {
        return Err(FactorizationFault::Uncovered { edge: e });
    }
    Ok(())
}

/// A proper edge coloring: `color[i]` colors `g.edges()[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    pub colors: usize,
    pub color: Vec<usize>,
}

impl EdgeColoring {
    /// Edges grouped by color, each group sorted.
    pub fn classes(&self, g: &Graph) -> Vec<Vec<Edge>> {
        let mut out = vec![Vec::new(); self.colors];
        for (&e, &c) in g.edges().iter().zip(&self.color) {
            out[c].push(e);
        }
        out
    }

    /// Every edge colored with a color below `colors` and no two
    /// intersecting edges share a color.
    pub fn is_proper(&self, g: &Graph) -> bool {
        if self.color.len() != g.size() || self.color.iter().any(|&c| c >= self.colors) {
            return false;
        }
        let mut seen = vec![false; g.order() * self.colors];
        for (&(a, b), &c) in g.edges().iter().zip(&self.color) {
            for v in [a, b] {
                if std::mem::replace(&mut seen[v * self.colors + c], true) {
                    return false;
                }
            }
        }
        true
    }

    /// Builds a coloring from color classes; `None` if some edge of `g` is
    /// missing, repeated, or foreign.
    pub fn from_classes(g: &Graph, classes: &[Vec<Edge>]) -> Option<EdgeColoring> {
        let mut color = vec![usize::MAX; g.size()];
        for (c, class) in classes.iter().enumerate() {
            for e in class {
                let i = g.edges().binary_search(e).ok()?;
                if color[i] != usize::MAX {
                    return None;
                }
                color[i] = c;
            }
        }
        color.iter().all(|&c| c != usize::MAX).then_some(EdgeColoring {
            colors: classes.len(),
            color,
        })
    }

    /// With `k` colors on a `k`-regular graph every class is a perfect
    /// matching.
    pub fn to_factorization(&self, g: &Graph) -> Option<Factorization> {
        let f = Factorization {
            factors: self
                .classes(g)
                .into_iter()
                .map(|c| Matching::new(c).expect("color class is a matching"))
                .collect(),
        };
        verify_factorization(g, &f).ok().map(|_| f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_factorization() -> Factorization {
        Factorization {
            factors: vec![
                Matching::new([(0, 1), (2, 3)]).unwrap(),
                Matching::new([(0, 2), (1, 3)]).unwrap(),
                Matching::new([(0, 3), (1, 2)]).unwrap(),
            ],
        }
    }

    #[test]
    fn verifies_k4() {
        assert_eq!(verify_factorization(&Graph::complete(4), &k4_factorization()), Ok(()));
    }

    #[test]
    fn rejects_faults() {
        let g = Graph::complete(4);
        let mut f = k4_factorization();
        f.factors.pop();
        assert!(matches!(
            verify_factorization(&g, &f),
            Err(FactorizationFault::WrongCount { .. })
        ));

        let mut f = k4_factorization();
        f.factors[2] = f.factors[0].clone();
        assert!(matches!(
            verify_factorization(&g, &f),
            Err(FactorizationFault::Repeated { .. })
        ));

        let mut f = k4_factorization();
        f.factors[2] = Matching::new([(0, 3)]).unwrap();
        assert_eq!(
            verify_factorization(&g, &f),
            Err(FactorizationFault::NotPerfect { factor: 2 })
        );

        let c4 = Graph::cycle(4);
        let f = Factorization {
            factors: vec![
                Matching::new([(0, 2), (1, 3)]).unwrap(),
                Matching::new([(0, 1), (2, 3)]).unwrap(),
            ],
        };
        assert!(matches!(
            verify_factorization(&c4, &f),
            Err(FactorizationFault::ForeignEdge { factor: 0, .. })
        ));
        assert_eq!(
            verify_factorization(&Graph::path(3), &f),
            Err(FactorizationFault::NotRegular)
        );
    }

    #[test]
    fn coloring_round_trip() {
        let g = Graph::complete(4);
        let f = k4_factorization();
        let classes: Vec<Vec<Edge>> = f.factors.iter().map(|m| m.edges().to_vec()).collect();
        let c = EdgeColoring::from_classes(&g, &classes).unwrap();
        assert!(c.is_proper(&g));
        assert_eq!(c.to_factorization(&g), Some(f));
        let bad = EdgeColoring {
            colors: 3,
            color: vec![0; 6],
        };
        assert!(!bad.is_proper(&g));
    }
}
