mod common;

use std::io::Write;
use std::process::{Command, Output, Stdio};

use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use treedepth::cli::parse_tree_output;
use treedepth::{parse_gr, validate_decomposition};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_treedepth"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn treedepth");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

#[test]
fn k2_from_stdin() {
    let out = run(&[], "p tdp 2 1\n1 2\n");
    assert!(out.status.success());
    assert_eq!(out.stdout, b"2\n2\n0\n");
    assert!(out.stderr.is_empty());
}

#[test]
fn k1_and_isolated_pair() {
    assert_eq!(run(&[], "p tdp 1 0\n").stdout, b"1\n0\n");
    assert_eq!(run(&[], "p tdp 2 0\n").stdout, b"1\n0\n0\n");
}

#[test]
fn reads_positional_file() {
    let dir = tempdir();
    let path = dir.join("p3.gr");
    std::fs::write(&path, "c path\np tdp 3 2\n1 2\n2 3\n").unwrap();
    let out = run(&[path.to_str().unwrap(), "--validate"], "");
    assert!(out.status.success());
    assert_eq!(out.stdout, b"2\n2\n0\n2\n");
    std::fs::remove_dir_all(dir).unwrap();
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("treedepth-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn errors_exit_one() {
    let out = run(&[], "p tdp 2 1\n1 3\n");
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert_eq!(run(&[], "1 2\n").status.code(), Some(1));
    assert_eq!(
        run(&["--start-depth", "0"], "p tdp 1 0\n").status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["--presolve=heuristic"], "p tdp 1 0\n").status.code(),
        Some(1)
    );
    assert_eq!(run(&["/nonexistent/graph.gr"], "").status.code(), Some(1));
}

#[test]
fn stats_go_to_stderr_only() {
    let out = run(&["--stats"], "p tdp 4 3\n1 2\n2 3\n3 4\n");
    assert!(out.status.success());
    assert_eq!(out.stdout, b"3\n2\n0\n2\n3\n");
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("candidates=") && err.contains("queries="));
}

#[test]
fn flags_preserve_depth_and_output_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        let g = connected_gnp(9, 0.35, &mut rng);
        let input = g.to_gr();
        let base = run(&["--validate"], &input);
        assert!(base.status.success());
        let text = String::from_utf8(base.stdout.clone()).unwrap();
        let parsed = parse_tree_output(&text, g.n()).unwrap();
        assert!(validate_decomposition(&parse_gr(&input).unwrap(), &parsed));
        for flags in [
            &["--no-domination"][..],
            &["--no-trie"],
            &["--presolve=none"],
            &["--start-depth", "2"],
        ] {
            let other = run(flags, &input);
            assert!(other.status.success());
            let first = |b: &[u8]| {
                String::from_utf8(b.to_vec())
                    .unwrap()
                    .lines()
                    .next()
                    .unwrap()
                    .to_string()
            };
            assert_eq!(first(&other.stdout), first(&base.stdout), "{flags:?}");
        }
    }
}
