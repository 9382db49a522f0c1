use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn srgec(args: &[&str], seed: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_srgec"));
    cmd.args(args).env_remove("SRGEC_SEED");
    if let Some(s) = seed {
        cmd.env("SRGEC_SEED", s);
    }
    cmd.output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(code(&srgec(&[], None)), 2);
    assert_eq!(code(&srgec(&["spectrum", "--params", "10,3,0"], None)), 2);
    assert_eq!(code(&srgec(&["gen", "lattice", "4", "5", "-o", "x.g6"], None)), 2);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.g6");
    fs::write(&bad, "C~x\n").unwrap();
    let out = srgec(&["info", s(&bad)], None);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 2"));
}

#[test]
fn refusal_and_inconclusive_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = dir.path().join("c5.g6");
    fs::write(&c5, "Dhc\n").unwrap();
    let out = srgec(&["factorize", s(&c5)], None);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("odd order 5"));

    let p = dir.path().join("petersen.g6");
    fs::write(&p, "IheA@GUAo\n").unwrap();
    let out = srgec(
        &["factorize", s(&p), "--method", "heuristic", "--max-restarts", "2"],
        None,
    );
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("inconclusive"));

    let out = srgec(&["exact", s(&p), "--colors", "3", "--node-budget", "3"], None);
    assert_eq!(code(&out), 1);
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "budget-exceeded colors=3 nodes=3\n"
    );
}

#[test]
fn generate_factorize_verify() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("t8.g6");
    let cert = dir.path().join("t8.cert");
    assert_eq!(code(&srgec(&["gen", "triangular", "8", "-o", s(&g)], None)), 0);
    assert!(!dir.path().join("t8.g6.partition").exists());
    assert_eq!(code(&srgec(&["factorize", s(&g), "-o", s(&cert)], Some("5"))), 0);
    let text = fs::read_to_string(&cert).unwrap();
    assert!(text.contains("method: heuristic\nseed: 5\n"), "{text}");

    let out = srgec(&["verify", s(&g), s(&cert)], None);
    assert_eq!(code(&out), 0);
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "valid: class 1 certificate (heuristic)\n"
    );

    // Moving one edge between factors breaks the partition.
    let lines: Vec<&str> = text.lines().collect();
    let dropped = lines[6].rsplit_once(' ').unwrap().0;
    let broken = text.replacen(lines[6], dropped, 1);
    fs::write(&cert, broken).unwrap();
    let out = srgec(&["verify", s(&g), s(&cert)], None);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("invalid"));

    // A certificate for another graph.
    let other = dir.path().join("k4.g6");
    fs::write(&other, "C~\n").unwrap();
    fs::write(&cert, text).unwrap();
    assert_eq!(code(&srgec(&["verify", s(&other), s(&cert)], None)), 1);
}

#[test]
fn parallel_certificate_replays_from_its_seed() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("t9.g6");
    srgec(&["gen", "triangular", "9", "-o", s(&g)], None);
    let par = srgec(&["factorize", s(&g), "--seed", "40", "--jobs", "4"], None);
    assert_eq!(code(&par), 0);
    let text = String::from_utf8(par.stdout).unwrap();
    let seed = text.lines().find_map(|l| l.strip_prefix("seed: ")).unwrap();
    let replay = srgec(&["factorize", s(&g), "--seed", seed, "--jobs", "1"], None);
    assert_eq!(String::from_utf8(replay.stdout).unwrap(), text);
}

#[test]
fn batch_reports_and_writes_certificates() {
    let dir = tempfile::tempdir().unwrap();
    for (name, fam) in [("a.g6", ["lattice", "6"]), ("b.g6", ["triangular", "5"])] {
        let p = dir.path().join(name);
        srgec(&["gen", fam[0], fam[1], "-o", s(&p)], None);
    }
    let out = srgec(&["batch", s(dir.path()), "--jobs", "2"], None);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("class1: 2\n") && text.contains("refused: 0\n"), "{text}");
    assert!(dir.path().join("a.g6.cert").exists() && dir.path().join("b.g6.cert").exists());
}
