use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_netbounds"))
        .args(args)
        .env("NETBOUNDS_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_csv_small() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["table", "--dmax", "5", "--format", "csv"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "d,k,bound\n4,1,1\n4,2,1\n5,1,4\n5,2,2\n5,3,4\n");
}

#[test]
fn table_output_is_deterministic_and_cache_backed() {
    let dir = tempfile::tempdir().unwrap();
    let a = run(
        &[
            "table", "--dmax", "7", "--format", "markdown", "--jobs", "1",
        ],
        dir.path(),
    );
    let b = run(
        &[
            "table", "--dmax", "7", "--format", "markdown", "--jobs", "2",
        ],
        dir.path(),
    );
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(String::from_utf8_lossy(&b.stderr).contains("0 computed"));
    let c = run(
        &["table", "--dmax", "7", "--format", "markdown", "--no-cache"],
        dir.path(),
    );
    assert_eq!(stdout(&a), stdout(&c));
    assert!(stdout(&a).contains("| 3 |  | 4 | 12 | 36 |"));
    let json = run(&["table", "--dmax", "4", "--format", "json"], dir.path());
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v[1]["bound"], 1);
}

#[test]
fn corrupted_cache_is_ignored() {
    let dir = tempfile::tempdir().unwrap();
    run(&["table", "--dmax", "5"], dir.path());
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        std::fs::write(entry.unwrap().path(), "garbage").unwrap();
    }
    let o = run(&["table", "--dmax", "5"], dir.path());
    assert_eq!(stdout(&o), "d,k,bound\n4,1,1\n4,2,1\n5,1,4\n5,2,2\n5,3,4\n");
    assert_eq!(
        run(&["verify", "--level", "fast"], dir.path())
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn bad_flags_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["table", "--dmax", "99"][..],
        &["table", "--dmax", "3"],
        &["bound", "-d", "5", "-k", "7"],
        &["bound", "-d", "17", "-k", "1"],
        &["trace", "-d", "4", "-k", "9", "--net", "(())()"],
        &["trace", "-d", "5", "-k", "1", "--net", "(())()"],
        &["render", "--net", "(()", "--out", "x.svg"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args, dir.path()).status.code(), Some(1), "{args:?}");
    }
    assert_eq!(run(&["--help"], dir.path()).status.code(), Some(0));
    assert_eq!(run(&["--version"], dir.path()).status.code(), Some(0));
}

#[test]
fn bound_values() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        stdout(&run(&["bound", "-d", "6", "-k", "3"], dir.path())),
        "12\n"
    );
    assert_eq!(
        stdout(&run(&["bound", "-d", "8", "-k", "5"], dir.path())),
        "115\n"
    );
    let o = run(&["bound", "-d", "4", "-k", "4", "--mirror"], dir.path());
    assert_eq!(stdout(&o), "k=4: 1\nk=1: 1\nagree\n");
}

#[test]
fn trace_reports_v() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(
        &["trace", "-d", "4", "-k", "1", "--net", "(())()"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["v"], 2);
    assert_eq!(v["c"], 0);
    assert_eq!(v["half_intervals"].as_array().unwrap().len(), 12);
    assert_eq!(v["half_intervals"][5]["label"], "W2");
    assert_eq!(v["half_intervals"][5]["extremum"], "Min");

    let o = run(
        &[
            "trace", "-d", "4", "-k", "1", "--net", "()()()", "--format", "text",
        ],
        dir.path(),
    );
    assert!(stdout(&o).ends_with("V=0\n"));
    let o = run(
        &[
            "trace",
            "-d",
            "4",
            "-k",
            "1",
            "--net",
            "1-4,2-3,5-6",
            "--format",
            "text",
        ],
        dir.path(),
    );
    assert!(stdout(&o).ends_with("V=2\n"));
}

#[test]
fn render_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("net.svg");
    let o = run(
        &[
            "render",
            "--net",
            "(())()",
            "--out",
            out.to_str().unwrap(),
            "-k",
            "2",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains(r#"data-ends="1-4""#));
    let missing = dir.path().join("no/such/dir/net.svg");
    let o = run(
        &[
            "render",
            "--net",
            "(())()",
            "--out",
            missing.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_fast_passes() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["verify"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
}
