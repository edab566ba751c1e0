use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_covrough");

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const SIXTH_UPPER_TABLE: &str = "\
X\t𝒳_X\t(Π(C))^T • Π(C) • 𝒳_X\tXH(X)
{a}\t[1 0 0 0 0 0]^T\t[1 1 1 1 0 0]^T\t{a, b, c, d}
{a, b}\t[1 1 0 0 0 0]^T\t[1 1 1 1 0 0]^T\t{a, b, c, d}
{a, b, c}\t[1 1 1 0 0 0]^T\t[1 1 1 1 0 0]^T\t{a, b, c, d}
{d, e, f}\t[0 0 0 1 1 1]^T\t[1 0 1 1 1 1]^T\t{a, c, d, e, f}
{a, d, e, f}\t[1 0 0 1 1 1]^T\t[1 1 1 1 1 1]^T\t{a, b, c, d, e, f}
";

const SIXTH_LOWER_TABLE: &str = "\
X\t𝒳_X\tΠ(C) ⊙ 𝒳_X\tXL(X)
{a}\t[1 0 0 0 0 0]^T\t[1 0 0 0 0 0]^T\t{a}
{a, b}\t[1 1 0 0 0 0]^T\t[1 1 0 0 0 0]^T\t{a, b}
{a, b, c}\t[1 1 1 0 0 0]^T\t[1 1 0 0 0 0]^T\t{a, b}
{a, b, c, d}\t[1 1 1 1 0 0]^T\t[1 1 1 1 0 0]^T\t{a, b, c, d}
{a, b, d, e, f}\t[1 1 0 1 1 1]^T\t[1 1 0 1 1 1]^T\t{a, b, d, e, f}
{a, b, c, d, e, f}\t[1 1 1 1 1 1]^T\t[1 1 1 1 1 1]^T\t{a, b, c, d, e, f}
";

const LEGACY_ROWS: &str = "\
{a}\t[1 0 0 0 0 0]^T\t[0 0 0 0 0 0]^T\t{}
{a, b}\t[1 1 0 0 0 0]^T\t[0 1 0 0 0 0]^T\t{b}
{a, b, c}\t[1 1 1 0 0 0]^T\t[0 1 0 0 0 0]^T\t{b}
{a, b, c, d}\t[1 1 1 1 0 0]^T\t[1 1 1 0 0 0]^T\t{a, b, c}
{a, b, d, e, f}\t[1 1 0 1 1 1]^T\t[0 1 0 0 1 1]^T\t{b, e, f}
{a, b, c, d, e, f}\t[1 1 1 1 1 1]^T\t[1 1 1 1 1 1]^T\t{a, b, c, d, e, f}
";

const ORACLE_LOWER_TABLE: &str = "\
X\tXL(X)
{a}\t{a}
{a, b}\t{a, b}
{a, b, c}\t{a, b}
{a, b, c, d}\t{a, b, c, d}
{a, b, d, e, f}\t{a, b, d, e, f}
{a, b, c, d, e, f}\t{a, b, c, d, e, f}
";

fn table(sets: &str, scheme: &str, bound: &str, route: &str) -> Output {
    run(&[
        "table",
        &fixture("example.cov"),
        &fixture(sets),
        "--scheme",
        scheme,
        "--bound",
        bound,
        "--route",
        route,
    ])
}

#[test]
fn sixth_upper_table() {
    let o = table("upper_sets.txt", "sixth", "upper", "matrix");
    assert!(o.status.success());
    assert_eq!(stdout(&o), SIXTH_UPPER_TABLE);
}

#[test]
fn sixth_dual_upper_table_matches_sixth_upper() {
    let o = table("upper_sets.txt", "sixth-dual", "upper", "matrix");
    assert_eq!(stdout(&o), SIXTH_UPPER_TABLE.replace("XH(X)", "XH^d(X)"));
}

#[test]
fn corrected_lower_table() {
    let o = table("lower_sets.txt", "sixth", "lower", "matrix");
    assert_eq!(stdout(&o), SIXTH_LOWER_TABLE);
}

#[test]
fn legacy_lower_table_warns() {
    let o = table("lower_sets.txt", "sixth", "lower", "legacy");
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        format!("X\t𝒳_X\t(Π(C))^T • Π(C) ⊙ 𝒳_X\tXL(X)\n{LEGACY_ROWS}")
    );
    assert!(stderr(&o).starts_with("WARNING"));
}

#[test]
fn sixth_dual_lower_table() {
    let o = table("lower_sets.txt", "sixth-dual", "lower", "matrix");
    assert_eq!(
        stdout(&o),
        format!("X\t𝒳_X\t(Π(C))^T • Π(C) ⊙ 𝒳_X\tXL^d(X)\n{LEGACY_ROWS}")
    );
    assert!(stderr(&o).is_empty());
}

#[test]
fn oracle_tables() {
    let o = table("lower_sets.txt", "sixth", "lower", "oracle");
    assert_eq!(stdout(&o), ORACLE_LOWER_TABLE);
    let o = table("upper_sets.txt", "sixth", "upper", "oracle");
    let expect = "X\tXH(X)\n{a}\t{a, b, c, d}\n{a, b}\t{a, b, c, d}\n{a, b, c}\t{a, b, c, d}\n\
                  {d, e, f}\t{a, c, d, e, f}\n{a, d, e, f}\t{a, b, c, d, e, f}\n";
    assert_eq!(stdout(&o), expect);
}

#[test]
fn both_route_adds_diff_column() {
    let o = table("lower_sets.txt", "sixth", "lower", "both");
    let out = stdout(&o);
    assert!(out.lines().next().unwrap().ends_with("\tDIFF"));
    assert!(out.lines().skip(1).all(|l| l.ends_with("\t=")));
}

#[test]
fn empty_sets_file_prints_header_only() {
    let dir = tempfile::tempdir().unwrap();
    let sets = dir.path().join("none.txt");
    std::fs::write(&sets, "# nothing here\n").unwrap();
    let o = run(&[
        "table",
        &fixture("example.cov"),
        sets.to_str().unwrap(),
        "--scheme",
        "fifth",
        "--bound",
        "upper",
    ]);
    assert_eq!(stdout(&o), "X\t𝒳_X\tΠ(C) • 𝒳_X\tIH(X)\n");
}

#[test]
fn compute_examples() {
    let cov = fixture("example.cov");
    let o = run(&[
        "compute", &cov, "--set", "a,b,c", "--scheme", "sixth", "--bound", "lower", "--route", "matrix",
    ]);
    assert_eq!(stdout(&o), "{a, b}\n[1 1 0 0 0 0]^T\n");
    let o = run(&[
        "compute", &cov, "--set", "a,b,c", "--scheme", "sixth", "--bound", "lower", "--route", "legacy",
    ]);
    assert_eq!(stdout(&o), "{b}\n[0 1 0 0 0 0]^T\n");
    assert!(stderr(&o).contains("WARNING"));
    let o = run(&[
        "compute", &cov, "--set", "", "--scheme", "second", "--bound", "upper", "--route", "oracle",
    ]);
    assert_eq!(stdout(&o), "{}\n");
    assert!(o.status.success());
}

#[test]
fn compute_dump_matrices() {
    let o = run(&[
        "compute",
        &fixture("example.cov"),
        "--set",
        "a",
        "--scheme",
        "fifth",
        "--bound",
        "upper",
        "--dump-matrices",
    ]);
    let expect = "\
{a, b, c}
[1 1 1 0 0 0]^T
# M_C (6x4)
1 1 1 0
1 0 1 0
0 1 1 0
0 1 1 1
0 0 0 1
0 0 0 1
# Γ(C) (6x6)
1 1 1 1 0 0
1 1 1 1 0 0
1 1 1 1 0 0
1 1 1 1 1 1
0 0 0 1 1 1
0 0 0 1 1 1
# Π(C) (6x6)
1 0 0 0 0 0
1 1 0 0 0 0
1 0 1 1 0 0
0 0 0 1 0 0
0 0 0 1 1 1
0 0 0 1 1 1
";
    assert_eq!(stdout(&o), expect);
}

#[test]
fn exit_codes() {
    let cov = fixture("example.cov");
    let o = run(&[
        "compute", &cov, "--set", "a", "--scheme", "sixth", "--bound", "upper", "--route", "legacy",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&[
        "compute", &cov, "--set", "a,q", "--scheme", "sixth", "--bound", "upper",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown element 'q'"));
    let o = run_stdin(
        &[
            "compute", "-", "--set", "a", "--scheme", "sixth", "--bound", "upper",
        ],
        "a b\na\nb zz\n",
    );
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stderr(&o), "error: <stdin>: line 3: unknown element 'zz'\n");
    let o = run(&[
        "compute",
        "/nonexistent.cov",
        "--set",
        "a",
        "--scheme",
        "sixth",
        "--bound",
        "upper",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_example_exhaustive() {
    let o = run(&["verify", &fixture("example.cov"), "--exhaustive"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("checked 64 subsets"));
    assert!(!out.contains("FAIL"));
    assert!(out.contains("witness X = {a, b, c}: corrected {a, b}, legacy {b}"));
}

#[test]
fn verify_too_large_for_exhaustive() {
    let gen = stdout(&run(&["gen", "12", "3"]));
    let o = run_stdin(&["verify", "--exhaustive"], &gen);
    assert_eq!(o.status.code(), Some(2));
    let o = run_stdin(&["verify"], &gen);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_random_batch() {
    let o = run(&[
        "verify",
        "--random",
        "6",
        "4",
        "100",
        "--seed",
        "42",
        "--exhaustive",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("checked 100 random coverings, 6400 subsets"));
}

#[test]
fn gen_is_deterministic_and_verifiable() {
    let a = run(&["gen", "8", "3", "--seed", "1"]);
    let b = run(&["gen", "8", "3", "--seed", "1"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&run(&["gen", "1", "1", "--seed", "0"])), "a\na\n");
    let text = stdout(&run(&["gen", "6", "4", "--seed", "7"]));
    assert_eq!(text.lines().count(), 5);
    let o = run_stdin(&["verify", "--exhaustive"], &text);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(run(&["gen", "0", "3"]).status.code(), Some(2));
}
