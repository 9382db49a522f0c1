//! Exact spectra against floating-point eigendecompositions of the
//! constructed graphs.

mod common;

use nalgebra::{DMatrix, SymmetricEigen};
use srgec::spectra::{hoffman_coclique_bound, latin_square_params, srg_spectrum};
use srgec::surd::Surd;
use srgec::Graph;

fn eigenvalues(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let a = DMatrix::from_fn(n, n, |i, j| if g.adjacent(i, j) { 1.0 } else { 0.0 });
    let mut ev: Vec<f64> = SymmetricEigen::new(a).eigenvalues.iter().copied().collect();
    ev.sort_by(|x, y| y.partial_cmp(x).unwrap());
    ev
}

#[test]
fn predicted_spectra_match_numerics() {
    for (name, g) in common::family_graphs(100) {
        let p = g
            .recognize_srg()
            .unwrap_or_else(|| panic!("{name} is not strongly regular"));
        let s = srg_spectrum(&p).unwrap();
        let mut predicted = vec![s.k as f64];
        predicted.extend(std::iter::repeat_n(s.r.to_f64(), s.f as usize));
        predicted.extend(std::iter::repeat_n(s.s.to_f64(), s.g as usize));
        let got = eigenvalues(&g);
        assert_eq!(got.len(), predicted.len(), "{name}");
        for (a, b) in got.iter().zip(&predicted) {
            assert!((a - b).abs() < 1e-9, "{name} {p}: {a} vs {b}");
        }
    }
}

#[test]
fn adjacency_identity() {
    // A² = kI + λA + μ(J − I − A), entry by entry.
    for (name, g) in common::family_graphs(64) {
        let p = g.recognize_srg().unwrap();
        let n = g.order();
        for u in 0..n {
            for v in 0..n {
                let walks = g.neighbors(u).iter().filter(|&&w| g.adjacent(w, v)).count() as u64;
                let expect = if u == v {
                    p.k
                } else if g.adjacent(u, v) {
                    p.lambda
                } else {
                    p.mu
                };
                assert_eq!(walks, expect, "{name} at ({u},{v})");
            }
        }
    }
}

#[test]
fn latin_square_hoffman_bound_is_m() {
    for m in 2..=12u64 {
        for t in 0..=m.saturating_sub(3) {
            let p = latin_square_params(m, t).unwrap();
            assert_eq!(hoffman_coclique_bound(&p).unwrap(), Surd::int(m as i128), "m={m} t={t}");
        }
    }
}
