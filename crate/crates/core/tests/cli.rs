use std::io::Write as _;
use std::process::Command;

use cpgroups::cli::{
    run, summary, ClassifyReport, OrbitsReport, SweepReport, EXIT_INVALID, EXIT_OK, EXIT_UNDECIDED,
};
use cpgroups::dynamics::{shift_orbits, Orbits};
use cpgroups::enumerate::Strategy;
use cpgroups::taxonomy::{classify, sweep};
use cpgroups::words::Word;

const K: &str = "gens: b u\nrels:\nb^6\nu^2 b^3 u b^2\n";

fn cli(args: &[&str]) -> cpgroups::cli::Outcome {
    run(std::iter::once("cpgroups").chain(args.iter().copied()))
}

fn first_line(s: &str) -> &str {
    s.lines().next().unwrap_or("")
}

#[test]
fn rewrite() {
    for (n, f, out) in [
        ("3", "1", "x0 x1 x2"),
        ("6", "2", "x0 x2 x4"),
        ("3", "2", "x0 x2 x1"),
        ("3", "0", "x0 x0 x0"),
    ] {
        let o = cli(&["rewrite", "--n", n, "--f", f, "--word", "x x x"]);
        assert_eq!((o.stdout.trim(), o.code), (out, EXIT_OK));
    }
    let o = cli(&["rewrite", "--n", "6", "--f", "1", "--word", "x x x"]);
    assert_eq!(o.code, EXIT_INVALID);
    assert!(
        o.stderr.contains("3*1 + 0 = 3 is not divisible by 6"),
        "{}",
        o.stderr
    );
    let o = cli(&[
        "rewrite",
        "--n",
        "5",
        "--f",
        "-1",
        "--word",
        "x^2 a^3 X a^-2",
    ]);
    assert_eq!((o.stdout.trim(), o.code), ("x0 x4 X2", EXIT_OK));
    assert_eq!(
        cli(&["rewrite", "--n", "3", "--f", "1", "--word", "a^2"]).code,
        EXIT_INVALID
    );
    assert_eq!(
        cli(&["rewrite", "--n", "3", "--f", "1", "--word", "y"]).code,
        EXIT_INVALID
    );
}

#[test]
fn classify_text() {
    let o = cli(&["classify", "--n", "18", "--k", "1", "--l", "11"]);
    assert_eq!(
        first_line(&o.stdout),
        "G_18(1,11): infinite, not CA, shift not free, θ fixed-point-free, exceptional n=18"
    );
    assert!(o.stdout.contains("[exceptional-18]"));
    let o = cli(&["classify", "--n", "7", "--k", "0", "--l", "3"]);
    assert!(first_line(&o.stdout).starts_with("G_7(0,3): finite (order 129)"));
    assert!(o.stdout.contains("cyclic of order"));
    let o = cli(&["classify", "--n", "3", "--k", "1", "--l", "2"]);
    assert_eq!(
        first_line(&o.stdout),
        "G_3(1,2): infinite, CA, free shift action, θ fixed-point-free"
    );
    assert_eq!(
        cli(&["classify", "--n", "0", "--k", "1", "--l", "2"]).code,
        EXIT_INVALID
    );
}

#[test]
fn classify_matches_library_for_every_triple() {
    for n in 1..=12usize {
        for k in 0..n as i64 {
            for l in 0..n as i64 {
                let (ns, ks, ls) = (n.to_string(), k.to_string(), l.to_string());
                let o = cli(&["classify", "--n", &ns, "--k", &ks, "--l", &ls, "--json"]);
                let report: ClassifyReport = serde_json::from_str(&o.stdout).unwrap();
                assert_eq!(report.classification, classify(n, k, l));
                assert_eq!(report.command, "classify");
                // print(parse(print(x))) is stable
                assert_eq!(
                    serde_json::to_string_pretty(&report).unwrap() + "\n",
                    o.stdout
                );
                let text = cli(&["classify", "--n", &ns, "--k", &ks, "--l", &ls]);
                assert_eq!(first_line(&text.stdout), summary(&report.classification));
            }
        }
    }
}

#[test]
fn sweep_output() {
    let o = cli(&["sweep", "--nmax", "6", "--json"]);
    let report: SweepReport = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(report.rows, sweep(6));
    let o = cli(&["sweep", "--nmax", "6"]);
    let lines: Vec<&str> = o.stdout.lines().collect();
    assert_eq!(lines.len(), 1 + (1..=6).map(|n| n * n).sum::<usize>());
    assert!(lines.contains(
        &"6\t2\t4\t2\tcommon-factor\tfalse\t-\ttrue\ttrue\tfalse\t(3,1,2) b-free-rank-two"
    ));
}

#[test]
fn enumerate_files() {
    let dir = tempfile::tempdir().unwrap();
    let whole = dir.path().join("k.pres");
    let over_b = dir.path().join("k_b.pres");
    std::fs::write(&whole, K).unwrap();
    std::fs::write(&over_b, format!("{K}sub:\nb\n")).unwrap();
    for s in ["hlt", "felsch"] {
        let o = cli(&[
            "enumerate",
            "--file",
            whole.to_str().unwrap(),
            "--max-cosets",
            "1000000",
            "--strategy",
            s,
        ]);
        assert_eq!((o.stdout.as_str(), o.code), ("342 cosets\n", EXIT_OK));
        let o = cli(&[
            "enumerate",
            "--file",
            over_b.to_str().unwrap(),
            "--strategy",
            s,
        ]);
        assert_eq!(o.stdout, "57 cosets; fixed(b) = 3\n");
    }
    let o = cli(&["enumerate", "--file", over_b.to_str().unwrap(), "--table"]);
    let lines: Vec<&str> = o.stdout.lines().collect();
    assert_eq!(lines.len(), 2 + 57);
    let o = cli(&[
        "enumerate",
        "--file",
        whole.to_str().unwrap(),
        "--max-cosets",
        "30",
    ]);
    assert_eq!(o.code, EXIT_UNDECIDED);
    assert!(o.stdout.starts_with("overflow"));
    let bad = dir.path().join("bad.pres");
    std::fs::write(&bad, "gens: a\nrels:\nq\n").unwrap();
    assert_eq!(
        cli(&["enumerate", "--file", bad.to_str().unwrap()]).code,
        EXIT_INVALID
    );
    let missing = dir.path().join("missing.pres");
    assert_eq!(
        cli(&["enumerate", "--file", missing.to_str().unwrap()]).code,
        EXIT_INVALID
    );
    assert_eq!(
        cli(&[
            "enumerate",
            "--file",
            whole.to_str().unwrap(),
            "--strategy",
            "dfs"
        ])
        .code,
        EXIT_INVALID
    );
}

#[test]
fn orbits() {
    let o = cli(&["orbits", "--word", "x0 x1 X2", "--n", "5"]);
    assert_eq!(first_line(&o.stdout), "11 points: 1 + 5 + 5");
    let o = cli(&["orbits", "--n", "5", "--k", "1", "--l", "2"]);
    assert_eq!(first_line(&o.stdout), "3 points: 1 + 1 + 1");
    let o = cli(&[
        "orbits",
        "--n",
        "7",
        "--k",
        "1",
        "--l",
        "3",
        "--max-cosets",
        "500",
    ]);
    assert_eq!(o.code, EXIT_UNDECIDED);
    let o = cli(&["orbits", "--n", "6", "--k", "1", "--l", "2", "--f", "1"]);
    assert_eq!(o.code, EXIT_INVALID);
    assert_eq!(cli(&["orbits", "--n", "5"]).code, EXIT_INVALID);
    assert_eq!(
        cli(&["orbits", "--n", "5", "--k", "1", "--l", "2", "--word", "x0"]).code,
        EXIT_INVALID
    );
    assert_eq!(
        cli(&["orbits", "--n", "1", "--k", "0", "--l", "0"]).code,
        EXIT_INVALID
    );

    let o = cli(&[
        "orbits",
        "--n",
        "7",
        "--k",
        "0",
        "--l",
        "3",
        "--strategy",
        "felsch",
        "--json",
    ]);
    let report: OrbitsReport = serde_json::from_str(&o.stdout).unwrap();
    let w = Word::positive(7, &[0, 0, 3]).unwrap();
    assert_eq!(
        report.result,
        shift_orbits(7, &w, 0, 1_000_000, Strategy::Felsch).unwrap()
    );
    assert_eq!(
        serde_json::to_string_pretty(&report).unwrap() + "\n",
        o.stdout
    );
    let Orbits::Complete(r) = report.result else {
        panic!()
    };
    assert_eq!(r.total_points, 129);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_cpgroups");
    let out = Command::new(bin)
        .args(["rewrite", "--n", "3", "--f", "1", "--word", "x x x"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "x0 x1 x2\n");
    let out = Command::new(bin)
        .args(["rewrite", "--n", "6", "--f", "1", "--word", "x x x"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(K.as_bytes()).unwrap();
    let out = Command::new(bin)
        .args([
            "enumerate",
            "--file",
            f.path().to_str().unwrap(),
            "--max-cosets",
            "10",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(bin).arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
