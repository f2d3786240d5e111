//! End-to-end tests of the `mycdist` binary: output round trips, exit
//! codes and byte-determinism.

use std::path::Path;
use std::process::{Command, Output};

use mycdist_cli::format;
use mycdist_core::{automorphism, coloring, families, mycielski};

fn mycdist(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mycdist"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, contents: &str) {
    std::fs::write(dir.join(name), contents).unwrap();
}

fn read(dir: &Path, name: &str) -> String {
    std::fs::read_to_string(dir.join(name)).unwrap()
}

const STAR3: &str = "4 3\n0 1\n0 2\n0 3\n";

#[test]
fn build_round_trips_and_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "g.edges", STAR3);
    let out = mycdist(dir.path(), &["build", "g.edges", "--t", "2", "--p", "1", "--out", "m.edges"]);
    assert_eq!(code(&out), 0, "{out:?}");

    let expected = mycielski::generalized_mycielskian(&families::star(3), 2).unwrap();
    let parsed = format::parse_edge_list(&read(dir.path(), "m.edges")).unwrap();
    assert_eq!(parsed, *expected.graph());

    let roles = format::parse_roles(&read(dir.path(), "m.roles")).unwrap();
    assert_eq!(roles.len(), expected.graph().vertex_count());
    for (id, role) in roles {
        assert_eq!(role, expected.role(id));
    }
}

#[test]
fn index_prints_certificates_and_witness_verifies() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "g.edges", STAR3);
    let out = mycdist(dir.path(), &["index", "g.edges", "--out", "w.colors"]);
    assert_eq!(code(&out), 0, "{out:?}");
    let text = stdout(&out);
    assert!(text.contains("k=1: exhausted"), "{text}");
    assert!(text.contains("k=2: exhausted"), "{text}");
    assert!(text.contains("index 3"), "{text}");

    // The emitted witness passes verify.
    let out = mycdist(dir.path(), &["verify", "g.edges", "--coloring", "w.colors"]);
    assert_eq!(code(&out), 0, "{out:?}");
    assert!(stdout(&out).contains("distinguishing"));
}

#[test]
fn color_outputs_parse_back_and_are_distinguishing() {
    let dir = tempfile::tempdir().unwrap();
    let out = mycdist(dir.path(), &["color", "star-mut", "--m", "4", "--t", "2", "--out", "f"]);
    assert_eq!(code(&out), 0, "{out:?}");

    let (lg, c) = coloring::star_mut_coloring(4, 2).unwrap();
    let g = format::parse_edge_list(&read(dir.path(), "f.edges")).unwrap();
    assert_eq!(g, *lg.graph());
    let parsed = format::parse_coloring(&read(dir.path(), "f.colors"), &g).unwrap();
    assert_eq!(parsed, c);
    assert!(read(dir.path(), "f.dot").starts_with("graph g {"));

    let out = mycdist(dir.path(), &["verify", "f.edges", "--coloring", "f.colors"]);
    assert_eq!(code(&out), 0, "{out:?}");
}

#[test]
fn mimic_color_needs_override_on_stars() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "g.edges", STAR3);
    let witness =
        "{\"u\":0,\"v\":1,\"color\":1}\n{\"u\":0,\"v\":2,\"color\":2}\n{\"u\":0,\"v\":3,\"color\":3}\n";
    write(dir.path(), "g.colors", witness);
    let refused = mycdist(
        dir.path(),
        &["color", "mimic", "g.edges", "--coloring", "g.colors", "--t", "1", "--out", "m"],
    );
    assert_eq!(code(&refused), 2, "{refused:?}");
    let forced = mycdist(
        dir.path(),
        &[
            "color", "mimic", "g.edges", "--coloring", "g.colors", "--t", "1", "--override-star",
            "--out", "m",
        ],
    );
    assert_eq!(code(&forced), 0, "{forced:?}");
}

#[test]
fn verify_rejects_monochromatic_star_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "g.edges", STAR3);
    write(
        dir.path(),
        "mono.colors",
        "{\"u\":0,\"v\":1,\"color\":1}\n{\"u\":0,\"v\":2,\"color\":1}\n{\"u\":0,\"v\":3,\"color\":1}\n",
    );
    let out = mycdist(dir.path(), &["verify", "g.edges", "--coloring", "mono.colors"]);
    assert_eq!(code(&out), 1, "{out:?}");
    let text = stdout(&out);
    assert!(text.contains("NOT distinguishing"), "{text}");
    // The printed witness is a real color-preserving automorphism.
    let images: Vec<usize> = text
        .split("witness")
        .nth(1)
        .unwrap()
        .split_whitespace()
        .map(|s| s.parse().unwrap())
        .collect();
    let g = families::star(3);
    let p = mycdist_core::Permutation::from_images(images).unwrap();
    assert!(automorphism::is_automorphism(&g, &p).unwrap());
    assert!(!p.is_identity());
}

#[test]
fn exit_codes_for_bad_inputs() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "bad.edges", "not a header\n");
    assert_eq!(code(&mycdist(dir.path(), &["index", "bad.edges"])), 2);

    write(dir.path(), "k2.edges", "2 1\n0 1\n");
    assert_eq!(code(&mycdist(dir.path(), &["index", "k2.edges"])), 3);

    assert_eq!(code(&mycdist(dir.path(), &["index", "missing.edges"])), 2);

    // A starved budget is inconclusive, not wrong.
    write(dir.path(), "c6.edges", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n");
    assert_eq!(
        code(&mycdist(dir.path(), &["index", "c6.edges", "--budget-nodes", "2"])),
        4
    );
}

#[test]
fn deterministic_bytes() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "g.edges", STAR3);
    for args in [
        vec!["build", "g.edges", "--t", "3", "--out", "a.edges"],
        vec!["color", "star-mu", "--m", "5", "--out", "c"],
    ] {
        assert_eq!(code(&mycdist(dir.path(), &args)), 0);
    }
    let first: Vec<String> = ["a.edges", "a.roles", "c.edges", "c.colors", "c.dot"]
        .iter()
        .map(|f| read(dir.path(), f))
        .collect();
    for args in [
        vec!["build", "g.edges", "--t", "3", "--out", "a.edges"],
        vec!["color", "star-mu", "--m", "5", "--out", "c"],
    ] {
        assert_eq!(code(&mycdist(dir.path(), &args)), 0);
    }
    let second: Vec<String> = ["a.edges", "a.roles", "c.edges", "c.colors", "c.dot"]
        .iter()
        .map(|f| read(dir.path(), f))
        .collect();
    assert_eq!(first, second);
}

#[test]
fn experiment_writes_csv_and_honors_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "corpus.txt", "star 3\npath 4\n");
    let out = mycdist(
        dir.path(),
        &["experiment", "corpus.txt", "--t-range", "1..2", "--out", "r.csv"],
    );
    assert_eq!(code(&out), 0, "{out:?}");
    let csv = read(dir.path(), "r.csv");
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "name,n,edges,dist,t,mu_dist,mu_dist_exact,construction_verified,inequality_holds"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 4);
    assert!(rows[0].starts_with("star-3,4,3,3,1,"));
    for row in &rows {
        assert!(row.ends_with(",true"), "inequality must hold: {row}");
    }

    // An empty corpus yields a header-only CSV and succeeds.
    write(dir.path(), "empty.txt", "# nothing here\n");
    let out = mycdist(
        dir.path(),
        &["experiment", "empty.txt", "--t-range", "1", "--out", "e.csv"],
    );
    assert_eq!(code(&out), 0, "{out:?}");
    assert_eq!(read(dir.path(), "e.csv").lines().count(), 1);

    // A starved budget is reported per row and exits inconclusive.
    let out = mycdist(
        dir.path(),
        &[
            "experiment", "corpus.txt", "--t-range", "1", "--budget-nodes", "2", "--out", "t.csv",
        ],
    );
    assert_eq!(code(&out), 4, "{out:?}");
    assert!(read(dir.path(), "t.csv").contains("inconclusive"));
}

#[test]
fn export_dot_uses_fixed_palette() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "g.edges", STAR3);
    write(
        dir.path(),
        "g.colors",
        "{\"u\":0,\"v\":1,\"color\":1}\n{\"u\":0,\"v\":2,\"color\":2}\n{\"u\":0,\"v\":3,\"color\":3}\n",
    );
    let out = mycdist(
        dir.path(),
        &["export-dot", "g.edges", "--coloring", "g.colors", "--out", "g.dot"],
    );
    assert_eq!(code(&out), 0, "{out:?}");
    let dot = read(dir.path(), "g.dot");
    assert!(dot.contains("[color=\"red\"]"), "{dot}");
    assert!(dot.contains("[color=\"blue\"]"), "{dot}");
    assert!(dot.contains("[color=\"black\"]"), "{dot}");
}
