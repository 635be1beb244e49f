//! End-to-end tests of the command-line protocol: file formats, per-kind
//! query lines, exit codes, and the full default verification run.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::Instant;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ftso"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed:\n{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn star_forest_kernel_flow() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.txt");
    run_ok(&[
        "gen", "--family", "star-forest", "--k", "1", "--f", "2", "--out", p(&graph),
    ]);
    let text = std::fs::read_to_string(&graph).unwrap();
    assert_eq!(text.lines().next().unwrap(), "6 4 u");

    let oracle = dir.path().join("o.json");
    run_ok(&[
        "build", "--kind", "vc-kernel", "--graph", p(&graph), "--f", "2", "--k", "1", "--out",
        p(&oracle),
    ]);
    // yes exactly for the two whole-star failure sets
    let queries = write(dir.path(), "q.txt", "0 1\n2 3\n0 2\n\n1\n");
    let out = run_ok(&["query", p(&oracle), p(&queries)]);
    assert_eq!(out.lines().collect::<Vec<_>>(), vec!["YES", "YES", "NO", "NO", "NO"]);
}

#[test]
fn kpath_tree_zero_sensitivity_echoes_the_root() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "g.txt", "4 3 d\n0 1\n1 2\n2 3\n");
    let oracle = dir.path().join("o.json");
    run_ok(&[
        "build", "--kind", "kpath-tree", "--graph", p(&graph), "--f", "0", "--k", "4", "--out",
        p(&oracle),
    ]);
    let queries = write(dir.path(), "q.txt", "\n");
    let out = run_ok(&["query", p(&oracle), p(&queries)]);
    assert_eq!(out.trim(), "YES 0 1 2 3");
}

#[test]
fn every_kind_builds_and_answers() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.txt");
    run_ok(&[
        "gen", "--family", "gnm", "--n", "8", "--m", "14", "--directed", "--seed", "5", "--out",
        p(&graph),
    ]);
    let undirected = dir.path().join("u.txt");
    run_ok(&[
        "gen", "--family", "gnm", "--n", "7", "--m", "10", "--seed", "6", "--out", p(&undirected),
    ]);
    let cases: Vec<(&str, &PathBuf, &str)> = vec![
        ("kpath-tree", &graph, "0 3\n\n"),
        ("kpath-sample", &graph, "0 3\n\n"),
        ("vc-subset", &undirected, "0 1\n\n"),
        ("vc-tree", &undirected, "0 1\n\n"),
        ("vc-kernel", &undirected, "0 1\n\n"),
        ("vc-dso", &undirected, "0 3 1\n2 2\n"),
        ("preserver", &graph, "4 0\n0\n"),
        ("detour", &graph, "4 0 1\n3\n"),
        ("reach", &graph, "0 4 2\n0 0\n"),
    ];
    for (kind, g, queries) in cases {
        let oracle = dir.path().join(format!("{kind}.json"));
        let mut args = vec![
            "build", "--kind", kind, "--graph", p(g), "--f", "2", "--k", "3", "--seed", "9",
            "--out",
        ];
        let opath = oracle.clone();
        args.push(p(&opath));
        let out = run(&args);
        assert!(
            out.status.success(),
            "build {kind} failed:\n{}",
            String::from_utf8_lossy(&out.stderr)
        );
        let qfile = write(dir.path(), &format!("{kind}.q"), queries);
        let answers = run_ok(&["query", p(&oracle), p(&qfile)]);
        assert_eq!(
            answers.lines().count(),
            queries.lines().count(),
            "kind {kind} answered a different number of lines"
        );
        // answers are stable across a reload (same file, fresh process)
        let again = run_ok(&["query", p(&oracle), p(&qfile)]);
        assert_eq!(answers, again, "kind {kind} answers changed");
    }
}

#[test]
fn vertex_fault_mode_doubles_the_parameter() {
    let dir = tempfile::tempdir().unwrap();
    // a directed 4-cycle: every vertex failure kills the 3-vertex path
    // through it, but 3-paths avoiding it survive
    let graph = write(dir.path(), "g.txt", "4 4 d\n0 1\n1 2\n2 3\n3 0\n");
    let oracle = dir.path().join("o.json");
    let out = run(&[
        "build", "--kind", "kpath-tree", "--graph", p(&graph), "--f", "1", "--k", "3",
        "--vertex-faults", "--out", p(&oracle),
    ]);
    assert!(out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("edge id 4 + v"), "bridge base reported: {stderr}");
    // failing vertex 1 = bridge edge 4 + 1 = 5; a 3-path avoiding vertex 1
    // still exists (2 -> 3 -> 0), so the split oracle says yes with a
    // 6-vertex witness
    let queries = write(dir.path(), "q.txt", "5\n");
    let answers = run_ok(&["query", p(&oracle), p(&queries)]);
    assert!(answers.trim().starts_with("YES"));
    assert_eq!(answers.trim().split(' ').count(), 7); // "YES" + 2k copies

    // on a 3-vertex path graph, failing the middle vertex kills every
    // 3-path: the split graph has no 6-vertex path without that bridge
    let chain = write(dir.path(), "chain.txt", "3 2 d\n0 1\n1 2\n");
    let chain_oracle = dir.path().join("chain.json");
    run_ok(&[
        "build", "--kind", "kpath-tree", "--graph", p(&chain), "--f", "1", "--k", "3",
        "--vertex-faults", "--out", p(&chain_oracle),
    ]);
    let queries = write(dir.path(), "cq.txt", "3\n\n");
    let answers = run_ok(&["query", p(&chain_oracle), p(&queries)]);
    let lines: Vec<&str> = answers.lines().collect();
    assert_eq!(lines[0], "NO");
    assert!(lines[1].starts_with("YES"));
    // --vertex-faults is rejected where the reduction is not defined
    let out = run(&[
        "build", "--kind", "vc-subset", "--graph", p(&graph), "--vertex-faults", "--out",
        p(&oracle),
    ]);
    assert!(!out.status.success());
}

#[test]
fn malformed_inputs_exit_nonzero_with_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "bad.txt", "2 1 d\n0 5\n");
    let oracle = dir.path().join("o.json");
    let out = run(&[
        "build", "--kind", "kpath-tree", "--graph", p(&graph), "--out", p(&oracle),
    ]);
    assert!(!out.status.success());
    assert!(
        String::from_utf8_lossy(&out.stderr).contains("vertex 5 out of range at line 2"),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );

    // capacity violations in a query file also fail loudly
    let graph = write(dir.path(), "g.txt", "3 3 u\n0 1\n1 2\n0 2\n");
    run_ok(&[
        "build", "--kind", "vc-subset", "--graph", p(&graph), "--f", "1", "--k", "1", "--out",
        p(&oracle),
    ]);
    let queries = write(dir.path(), "q.txt", "0 1\n");
    let out = run(&["query", p(&oracle), p(&queries)]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("capacity"));

    // and a bogus oracle file is refused
    let fake = write(dir.path(), "fake.json", "{\"magic\":\"nope\"}");
    let out = run(&["query", p(&fake), p(&queries)]);
    assert!(!out.status.success());
}

#[test]
fn bench_emits_a_tsv_table() {
    let out = run_ok(&[
        "bench", "--kind", "kpath-tree", "--sizes", "12x20,16x30", "--f", "1", "--k", "3",
        "--queries", "50",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("kind\tn\tm"));
    assert!(lines[1].starts_with("kpath-tree\t12\t20\t1\t3\t"));
    assert_eq!(lines[1].split('\t').count(), 10);
}

#[test]
fn default_verification_run_is_green_for_every_kind() {
    // The full default-bounds verification across all kinds must succeed
    // and stay well under ten minutes end to end.
    let start = Instant::now();
    let out = run(&["verify", "--kind", "all", "--seed", "1"]);
    let elapsed = start.elapsed();
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(
        out.status.success(),
        "verification failed:\n{stdout}\n{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(elapsed.as_secs() < 600, "verification took {elapsed:?}");
    for kind in [
        "kpath-tree",
        "kpath-sample",
        "vc-subset",
        "vc-tree",
        "vc-kernel",
        "vc-dso",
        "preserver",
        "detour",
        "reach",
    ] {
        assert!(
            stdout.lines().any(|l| l.starts_with(kind) && l.contains(": ok")),
            "kind {kind} missing or failed:\n{stdout}"
        );
    }
    // a missing seed is a usage error, not a silent default
    let out = run(&["verify", "--kind", "reach"]);
    assert!(!out.status.success());
}
