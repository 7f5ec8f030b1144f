use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

/// Set to rewrite the golden files from the current output.
const BLESS_ENV: &str = "LICCI_BLESS";

fn licci(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_licci"))
        .args(args)
        .env_remove("LICCI_VAR_CAP")
        .output()
        .expect("binary runs")
}

fn licci_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_licci"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn golden(name: &str, actual: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    if std::env::var_os(BLESS_ENV).is_some() {
        fs::write(&path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden {}", path.display()));
    assert_eq!(actual, expected, "output differs from {name}");
}

fn ok(args: &[&str]) -> String {
    let o = licci(args);
    assert!(o.status.success(), "{args:?} failed: {}", stderr(&o));
    stdout(&o)
}

const EXAMPLE: &str = "x1^2, x2^2, x3^2, x1*x2, x2*x3";

#[test]
fn licci_worked_example() {
    let out = ok(&["licci", EXAMPLE]);
    golden("licci_example.json", &out);
    assert!(out.contains("\"status\": \"Licci\""));
    let artinian = ok(&["licci", "--artinian-only", EXAMPLE]);
    assert_eq!(artinian, out);
}

#[test]
fn construct_builders() {
    let out = ok(&["construct", "complementary", "edges:4:1-2,1-3,2-3,1-4", "--text"]);
    assert_eq!(out.trim(), "(x1*x4, x2*x3, x2*x4, x3*x4)");
    golden(
        "construct_complementary.json",
        &ok(&["construct", "complementary", "edges:4:1-2,1-3,2-3,1-4"]),
    );
    golden(
        "construct_depolarize_k3.txt",
        &ok(&["construct", "depolarize", "complete:3", "-t", "3", "--text"]),
    );
    golden(
        "construct_suspension_k3.txt",
        &ok(&["construct", "suspension", "complete:3", "-t", "3", "--text"]),
    );
    assert_eq!(ok(&["construct", "edge", "path:3", "--text"]).trim(), "(x1*x2, x2*x3)");
    assert_eq!(
        ok(&["construct", "path", "cycle:5", "-t", "3", "--text"])
            .matches('*')
            .count(),
        10
    );
}

#[test]
fn construct_reads_graph_documents() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    fs::write(&path, "{\"n\": 3, \"edges\": [[1, 2], [2, 3]]}").unwrap();
    let out = ok(&["construct", "edge", path.to_str().unwrap(), "--text"]);
    assert_eq!(out.trim(), "(x1*x2, x2*x3)");
    let o = licci_stdin(&["construct", "edge", "-", "--text"], "{\"n\": 2, \"edges\": [[1, 2]]}");
    assert_eq!(stdout(&o).trim(), "(x1*x2)");
}

#[test]
fn betti_matches_oracle_on_path_ideal_of_c4() {
    let ideal = ok(&["construct", "path", "cycle:4", "-t", "2"]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c4.json");
    fs::write(&path, &ideal).unwrap();
    let p = path.to_str().unwrap();
    let hochster = ok(&["betti", p]);
    let oracle = ok(&["betti", p, "--oracle"]);
    assert_eq!(hochster, oracle);
    golden("betti_c4.json", &hochster);
    golden("betti_c4_table.txt", &ok(&["betti", p, "--table"]));
    assert_eq!(
        ok(&["betti", p, "--field", "fp:2"]),
        hochster.replace("\"q\"", "\"fp:2\"")
    );
}

#[test]
fn dual_and_link() {
    golden("dual.json", &ok(&["dual", "x1*x2, x2*x3, x3*x4"]));
    let out = ok(&["link", "x1^2, x1*x2, x2^2", "x1, x2", "--regseq", "x1^2, x2^2"]);
    assert!(out.contains("\"pass\": true") && !out.contains("\"pass\": false"));
    let o = licci(&["link", "x1^2, x2", "x1, x2", "--regseq", "x1^2, x2"]);
    assert_eq!(o.status.code(), Some(1));
    golden("link_failing.json", &stdout(&o));
}

#[test]
fn verify_paper_list_and_selection() {
    golden("verify_list.txt", &ok(&["verify-paper", "--list"]));
    let out = ok(&["verify-paper", "T1", "claim-cycles"]);
    assert!(out.starts_with("seed 1729\n"));
    assert!(out.ends_with("2/2 tasks passed\n"));
    let o = licci(&["verify-paper", "T42"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown task `T42`"));
}

#[test]
fn verify_paper_full_run_is_reproducible() {
    let out = ok(&["verify-paper"]);
    golden("verify_all.txt", &out);
    assert!(out.ends_with("18/18 tasks passed\n"));
    let json = ok(&["verify-paper", "--json", "T11", "--seed", "7"]);
    assert!(json.contains("\"seed\": 7"));
    assert_eq!(json, ok(&["verify-paper", "--json", "T11", "--seed", "7"]));
}

#[test]
fn errors_exit_nonzero_with_diagnostics() {
    let o = licci(&["betti", "{\"vars\": [\"x\"], \"gens\": [[1, 2]]}"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("exponent vector of length 2"));

    let o = licci(&["licci", "x^2 + y"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error:"));

    let o = licci(&["licci", "--artinian-only", "x1*x2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not Artinian"));

    let o = licci(&["construct", "path", "cycle:4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("needs --t"));

    let o = Command::new(env!("CARGO_BIN_EXE_licci"))
        .args(["betti", "x1*x2*x3*x4*x5"])
        .env("LICCI_VAR_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("ambient of 5 variables exceeds the cap of 4"));
}
