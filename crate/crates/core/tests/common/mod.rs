#![allow(dead_code)]

use srgec::families::*;
use srgec::Graph;

/// Every strongly regular family member the crate can build with at most
/// `max_n` vertices, together with its complement where that is connected
/// and not complete. Names are for failure messages.
pub fn family_graphs(max_n: usize) -> Vec<(String, Graph)> {
    let mut base: Vec<(String, Graph)> = Vec::new();
    for m in 4..=14 {
        base.push((format!("T({m})"), triangular(m).unwrap()));
    }
    for m in 2..=10usize {
        for t in 0..=m.saturating_sub(2) {
            if let Ok(ls) = latin_square_set(m, t) {
                base.push((format!("LS({m},{t})"), latin_square_graph(&ls)));
            }
        }
    }
    for v in [9, 15, 21] {
        base.push((format!("STS({v})"), block_graph(&bose_sts(v).unwrap())));
    }
    for l in 2..=6 {
        for m in 2..=6 {
            base.push((format!("K_{l}x{m}"), complete_multipartite(l, m).unwrap()));
        }
    }
    let mut out = Vec::new();
    for (name, g) in base {
        if g.order() > max_n {
            continue;
        }
        let c = g.complement();
        if c.size() > 0 && c.is_connected() {
            out.push((format!("co-{name}"), c));
        }
        out.push((name, g));
    }
    out
}
