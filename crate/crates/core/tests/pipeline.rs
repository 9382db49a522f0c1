mod common;

use std::fs;

use srgec::cert::{read_certificate, verify_certificate, write_certificate, Evidence, Method};
use srgec::classify::*;
use srgec::factor::{exact_chromatic_index, ExactOutcome, DEFAULT_NODE_BUDGET};
use srgec::families::*;
use srgec::graph6::to_graph6;
use srgec::Graph;

fn classify_default(g: &Graph, structure: Option<&VertexPartition>) -> Outcome {
    classify(g, structure, &ClassifyConfig::default()).unwrap().outcome
}

#[test]
fn every_certificate_verifies_and_round_trips() {
    let mut count = 0;
    for (name, g) in common::family_graphs(64) {
        let Outcome::Certified(c) = classify_default(&g, None) else {
            continue;
        };
        count += 1;
        assert!(verify_certificate(&g, &c).unwrap(), "{name}");
        let text = write_certificate(&c);
        assert_eq!(read_certificate(&text).unwrap(), c, "{name}");
        if c.class() == 2 {
            // Audit: a class-2 claim must survive a fresh exhaustive search.
            let out = exact_chromatic_index(&g, c.k, DEFAULT_NODE_BUDGET).unwrap();
            assert!(matches!(out, ExactOutcome::NotColorable { .. }), "{name}");
        }
    }
    assert!(count > 20);
}

#[test]
fn spread_metadata_takes_the_constructive_route() {
    for m in [4, 6, 8] {
        for t in [0, 1] {
            let (g, spread) = Family::LatinSquare(m, t).build().unwrap();
            let Outcome::Certified(c) = classify_default(&g, spread.as_ref()) else {
                panic!("LS({m},{t})")
            };
            assert_eq!(c.method, Method::HoffmanComplement);
            assert!(verify_certificate(&g, &c).unwrap());
        }
    }
}

fn write_graph(dir: &std::path::Path, name: &str, g: &Graph, structure: Option<&VertexPartition>) {
    let path = dir.join(name);
    fs::write(&path, format!("{}\n", to_graph6(g).unwrap())).unwrap();
    if let Some(p) = structure {
        fs::write(sidecar(&path, ".partition"), p.to_text()).unwrap();
    }
}

fn ten_family_graphs(dir: &std::path::Path) {
    let fams = [
        Family::Triangular(4),
        Family::Triangular(5),
        Family::Triangular(8),
        Family::Lattice(4),
        Family::Lattice(6),
        Family::LatinSquare(4, 1),
        Family::LatinSquare(6, 1),
        Family::BlockGraphSts(9),
        Family::Multipartite(4, 3),
        Family::Multipartite(3, 4),
    ];
    for (i, f) in fams.iter().enumerate() {
        let (g, p) = f.build().unwrap();
        write_graph(dir, &format!("g{i:02}.g6"), &g, p.as_ref());
    }
}

#[test]
fn batch_of_family_graphs() {
    let dir = tempfile::tempdir().unwrap();
    ten_family_graphs(dir.path());
    let files = graph_files(dir.path()).unwrap();
    assert_eq!(files.len(), 10);
    let summary = batch_run(&files, &ClassifyConfig::default(), 3).unwrap();
    assert_eq!(summary.class1(), 10, "{}", summary.to_text());
    assert!(!summary.failed());
    for e in &summary.entries {
        let g = load_graphs(&e.path).unwrap().0.remove(0);
        let cert = read_certificate(&fs::read_to_string(e.cert.as_ref().unwrap()).unwrap()).unwrap();
        assert!(verify_certificate(&g, &cert).unwrap());
    }
}

#[test]
fn batch_is_reproducible_with_one_job() {
    let run = || {
        let dir = tempfile::tempdir().unwrap();
        ten_family_graphs(dir.path());
        write_graph(dir.path(), "petersen.g6", &petersen(), None);
        let files = graph_files(dir.path()).unwrap();
        let cfg = ClassifyConfig {
            search: srgec::factor::SearchConfig::with_seed(11),
            ..ClassifyConfig::default()
        };
        batch_run(&files, &cfg, 1).unwrap();
        let mut certs: Vec<(String, String)> = fs::read_dir(dir.path())
            .unwrap()
            .map(|e| e.unwrap().path())
            .filter(|p| p.extension().is_some_and(|x| x == "cert"))
            .map(|p| {
                (
                    p.file_name().unwrap().to_string_lossy().into_owned(),
                    fs::read_to_string(&p).unwrap(),
                )
            })
            .collect();
        certs.sort();
        certs
    };
    let a = run();
    assert_eq!(a.len(), 11);
    assert_eq!(a, run());
}

#[test]
fn batch_petersen_and_odd_cycle() {
    let dir = tempfile::tempdir().unwrap();
    write_graph(dir.path(), "Petersen.g6", &petersen(), None);
    let files = graph_files(dir.path()).unwrap();
    let summary = batch_run(&files, &ClassifyConfig::default(), 1).unwrap();
    assert_eq!((summary.class2(), summary.failed()), (1, false));
    let cert = read_certificate(&fs::read_to_string(dir.path().join("Petersen.g6.cert")).unwrap()).unwrap();
    assert!(matches!(cert.evidence, Evidence::Exact { .. }));

    let dir = tempfile::tempdir().unwrap();
    write_graph(dir.path(), "c5.g6", &Graph::cycle(5), None);
    fs::write(dir.path().join("junk.g6"), "not graph6 \u{1}\n").unwrap();
    let files = graph_files(dir.path()).unwrap();
    let summary = batch_run(&files, &ClassifyConfig::default(), 2).unwrap();
    assert_eq!(summary.refused(), 2, "{}", summary.to_text());
    assert!(summary.failed());
    assert!(summary.to_text().contains("c5.g6: refused: odd order 5"));
}

#[test]
fn multi_graph_files_get_indexed_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("two.g6");
    let text = format!(
        "{}\n{}\n",
        to_graph6(&Graph::complete(4)).unwrap(),
        to_graph6(&petersen()).unwrap()
    );
    fs::write(&path, text).unwrap();
    let summary = batch_run(&[path], &ClassifyConfig::default(), 1).unwrap();
    assert_eq!((summary.class1(), summary.class2()), (1, 1));
    assert!(dir.path().join("two.g6.0.cert").exists());
    assert!(dir.path().join("two.g6.1.cert").exists());
}
