use std::io::Write;
use std::process::{Command, Output, Stdio};

fn motzkin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_motzkin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_motzkin"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn convert_both_directions() {
    let o = motzkin(&["convert", "--direction", "tree-to-path", "(2(1()))"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "BR\n");
    let o = motzkin(&["convert", "--direction", "path-to-tree", "BB"]);
    assert_eq!(stdout(&o), "(3())\n");
}

#[test]
fn convert_reads_stdin() {
    let o = with_stdin(
        &["convert", "--direction", "tree-to-path", "-"],
        " ( 1 ( 1 ( ) 1 ( ) ) )\n",
    );
    assert!(o.status.success());
    assert_eq!(stdout(&o), "RR\n");
}

#[test]
fn convert_output_round_trips() {
    for tree in ["(1(1(1())))", "(5(2()1(3()))2())", "(1())"] {
        let path = stdout(&motzkin(&["convert", "--direction", "tree-to-path", tree]));
        let back = motzkin(&["convert", "--direction", "path-to-tree", path.trim()]);
        assert_eq!(stdout(&back).trim(), tree);
    }
}

#[test]
fn domain_errors_exit_one() {
    let o = motzkin(&["convert", "--direction", "tree-to-path", "()"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("N >= 1"));
    let o = motzkin(&["convert", "--direction", "tree-to-path", "(0())"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte 1"));
    let o = motzkin(&["render", "UDD"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(motzkin(&["convert", "BB"]).status.code(), Some(2));
    assert_eq!(
        motzkin(&["enumerate", "--family", "cats", "--size", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        motzkin(&["verify", "--max-size", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(motzkin(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn enumerate_and_count() {
    assert_eq!(
        stdout(&motzkin(&[
            "enumerate",
            "--family",
            "trees",
            "--size",
            "3",
            "--count"
        ])),
        "10\n"
    );
    let listing = stdout(&motzkin(&[
        "enumerate",
        "--family",
        "motzkin3",
        "--size",
        "2",
    ]));
    assert_eq!(listing.lines().count(), 10);
    assert_eq!(
        stdout(&motzkin(&["enumerate", "--family", "dyck", "--size", "0"])),
        "\n"
    );
    assert_eq!(
        stdout(&motzkin(&["count", "--family", "dyck", "--size", "0"])),
        "1\n"
    );
    assert_eq!(
        stdout(&motzkin(&["count", "--family", "trees", "--size", "10"])),
        "171369\n"
    );
    assert_eq!(
        stdout(&motzkin(&["count", "--family", "motzkin2", "--size", "2"])),
        "5\n"
    );
}

#[test]
fn verify_reports() {
    let o = motzkin(&["verify", "--max-size", "3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("N=3: 10 trees <-> 10 paths"));
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 8);
    assert!(!text.contains("FAIL"));
    let o = motzkin(&["verify", "--max-size", "1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("N=1: 1 trees <-> 1 paths"));
}

#[test]
fn verify_against_bfile() {
    let mut good = tempfile::NamedTempFile::new().unwrap();
    writeln!(good, "# A002212\n0 1\n1 1\n2 3\n3 10\n4 36\n5 137\n6 543").unwrap();
    let path = good.path().to_str().unwrap();
    let o = motzkin(&["verify", "--max-size", "2", "--bfile", path]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("on 7 entries"));

    let o = motzkin(&[
        "verify",
        "--max-size",
        "2",
        "--bfile",
        path,
        "--sequence",
        "A091965",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL b-file agreement"));

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "0 1\nx y").unwrap();
    let o = motzkin(&[
        "verify",
        "--max-size",
        "1",
        "--bfile",
        bad.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn render_objects() {
    assert_eq!(stdout(&motzkin(&["render", "UD"])), "0 | /\\\n");
    assert_eq!(stdout(&motzkin(&["render", "BR"])), "0 | BR\n");
    assert_eq!(stdout(&motzkin(&["render", "(3())"])), "o\n`-- 3 o\n");
    let o = with_stdin(&["render", "-"], "(1(2()))\n");
    assert_eq!(stdout(&o), "o\n`-- 1 o\n    `-- 2 o\n");
}

#[test]
fn table_subcommand() {
    let o = motzkin(&["table"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("(1(1(1())))\tUUUDDD\tUD\tUD\n"));
    assert!(text.contains("(1(2()))\tUUDD\tR\tRB\n"));
    assert!(text.contains("(1(1())1())\tUUDDUD\tRG\tRG\n"));
}
