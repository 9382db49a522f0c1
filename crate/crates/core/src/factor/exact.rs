//! Exact edge-colorability by backtracking.
//!
//! Edges are chosen most-constrained first (fewest colors still free at
//! both ends, ties by edge index). Colors are interchangeable, so a color
//! beyond the largest one used so far is only tried in its smallest form.
//! A completed search without a coloring is a proof that none exists.

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::EdgeColoring;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Largest color count the bitmask representation supports.
const MAX_COLORS: usize = 128;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactOutcome {
    Colorable { coloring: EdgeColoring, nodes: u64 },
    NotColorable { nodes: u64 },
    BudgetExceeded { nodes: u64 },
}

impl ExactOutcome {
    pub fn nodes(&self) -> u64 {
        match *self {
            ExactOutcome::Colorable { nodes, .. }
            | ExactOutcome::NotColorable { nodes }
            | ExactOutcome::BudgetExceeded { nodes } => nodes,
        }
    }
}

struct Search<'g> {
    g: &'g Graph,
    colors: usize,
    budget: u64,
    nodes: u64,
    used_at: Vec<u128>,
    color: Vec<usize>,
    highest: usize, // number of distinct colors introduced so far
}

enum Step {
    Done,
    Dead,
    OutOfBudget,
}

impl Search<'_> {
    fn free(&self, e: usize) -> u128 {
        let (a, b) = self.g.edges()[e];
        let limit = (self.highest + 1).min(self.colors);
        let window = if limit == 128 { u128::MAX } else { (1u128 << limit) - 1 };
        window & !(self.used_at[a] | self.used_at[b])
    }

    fn dfs(&mut self) -> Step {
        let mut best: Option<(u32, usize, u128)> = None;
        for e in 0..self.color.len() {
            if self.color[e] != usize::MAX {
                continue;
            }
            let f = self.free(e);
            let c = f.count_ones();
            if best.is_none_or(|(bc, _, _)| c < bc) {
                best = Some((c, e, f));
                if c == 0 {
                    break;
                }
            }
        }
        let Some((_, e, mut free)) = best else {
            return Step::Done;
        };
        let (a, b) = self.g.edges()[e];
        while free != 0 {
            if self.nodes >= self.budget {
                return Step::OutOfBudget;
            }
            self.nodes += 1;
            let c = free.trailing_zeros() as usize;
            free &= free - 1;
            let prev_high = self.highest;
            if c == self.highest {
                self.highest += 1;
            }
            self.color[e] = c;
            self.used_at[a] |= 1 << c;
            self.used_at[b] |= 1 << c;
            match self.dfs() {
                Step::Dead => {}
                done => return done,
            }
            self.used_at[a] &= !(1 << c);
            self.used_at[b] &= !(1 << c);
            self.color[e] = usize::MAX;
            self.highest = prev_high;
        }
        Step::Dead
    }
}

/// Decides whether `g` has a proper edge coloring with `colors` colors.
///
/// `colors` must be at least the maximum degree. At `colors = Δ`, a
/// `NotColorable` answer certifies `χ′ = Δ + 1`.
pub fn exact_chromatic_index(g: &Graph, colors: usize, node_budget: u64) -> Result<ExactOutcome> {
    let delta = g.max_degree();
    if colors < delta {
        return Err(Error::Precondition(format!(
            "{colors} colors is below the maximum degree {delta}"
        )));
    }
    if colors > MAX_COLORS {
        return Err(Error::Unsupported(format!("more than {MAX_COLORS} colors")));
    }
    let mut s = Search {
        g,
        colors,
        budget: node_budget,
        nodes: 0,
        used_at: vec![0; g.order()],
        color: vec![usize::MAX; g.size()],
        highest: 0,
    };
    Ok(match s.dfs() {
        Step::Done => ExactOutcome::Colorable {
            coloring: EdgeColoring { colors, color: s.color },
            nodes: s.nodes,
        },
        Step::Dead => ExactOutcome::NotColorable { nodes: s.nodes },
        Step::OutOfBudget => ExactOutcome::BudgetExceeded { nodes: s.nodes },
    })
}
