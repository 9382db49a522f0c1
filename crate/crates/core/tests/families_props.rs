mod common;

use proptest::prelude::*;
use srgec::families::*;
use srgec::matching::disjoint_pm_greedy;
use srgec::rng::RngState;
use srgec::spectra::*;
use srgec::SrgParams;

proptest! {
    #[test]
    fn triangular_matches_formula(m in 4usize..=16) {
        let g = triangular(m).unwrap();
        prop_assert_eq!(g.recognize_srg(), Some(triangular_params(m as u64).unwrap()));
    }

    #[test]
    fn latin_square_matches_formula(m in 2usize..=11, t in 0usize..=3) {
        prop_assume!(t + 2 <= m);
        if let Ok(ls) = latin_square_set(m, t) {
            let g = latin_square_graph(&ls);
            prop_assert_eq!(g.recognize_srg(), Some(latin_square_params(m as u64, t as u64).unwrap()));
            prop_assert!(row_spread(m).check_kind(&g));
        }
    }

}

#[test]
fn complement_params_are_an_involution() {
    let mut seen = 0;
    for n in 5..=80u64 {
        for k in 1..n - 1 {
            for l in 0..k {
                for mu in 1..=k {
                    let p = SrgParams::new(n, k, l, mu);
                    if !feasibility_check(&p).all() {
                        continue;
                    }
                    // The basic conditions do not rule out a complement
                    // with a negative parameter, e.g. (21,16,12,12).
                    let Ok(c) = complement_params(&p) else { continue };
                    seen += 1;
                    assert!(feasibility_check(&c).all(), "{p} -> {c}");
                    assert_eq!(complement_params(&c).unwrap(), p);
                    let (sp, sc) = (srg_spectrum(&p).unwrap(), srg_spectrum(&c).unwrap());
                    let minus_one = srgec::surd::Surd::int(-1);
                    assert_eq!(sc.r, minus_one - sp.s, "{p}");
                    assert_eq!(sc.s, minus_one - sp.r, "{p}");
                    assert_eq!((sc.f, sc.g), (sp.g, sp.f), "{p}");
                }
            }
        }
    }
    assert!(seen > 50);
}

#[test]
fn block_graphs_match_formula() {
    for v in [9, 15, 21, 27] {
        let g = block_graph(&bose_sts(v).unwrap());
        assert_eq!(
            g.recognize_srg(),
            Some(block_graph_params(v as u64, 3).unwrap()),
            "STS({v})"
        );
    }
}

#[test]
fn complements_match_formula() {
    for (name, g) in common::family_graphs(80) {
        let p = g.recognize_srg().unwrap();
        assert_eq!(g.complement().recognize_srg(), complement_params(&p).ok(), "{name}");
    }
}

#[test]
fn brouwer_haemers_matchings() {
    for (name, g) in common::family_graphs(100) {
        if g.order() % 2 == 1 {
            continue;
        }
        let p = g.recognize_srg().unwrap();
        let bound = bh_matching_bound(&p).unwrap();
        for seed in 0..5 {
            let found = disjoint_pm_greedy(&g, &mut RngState::new(seed)).len() as i128;
            assert!(found >= bound, "{name} {p} seed {seed}: {found} < {bound}");
        }
    }
}
