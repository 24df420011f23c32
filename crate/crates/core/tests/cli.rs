use std::process::{Command, Output};

fn sccores(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sccores")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = sccores(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    sccores(args).status.code().unwrap()
}

#[test]
fn count_examples() {
    assert_eq!(stdout(&["count", "--sc-cores", "8"]), "35\n");
    assert_eq!(stdout(&["count", "--motzkin", "4", "--symmetric"]), "5\n");
    assert_eq!(stdout(&["count", "--motzkin", "4"]), "9\n");
    assert_eq!(stdout(&["count", "--ideals", "--generators", "8,9,10"]), "323\n");
    assert_eq!(stdout(&["count", "--cores", "3", "--k", "1"]), "5\n");
    assert_eq!(stdout(&["count", "--gen-dyck", "4", "--k", "2", "--symmetric"]), "5\n");
    assert_eq!(
        stdout(&["count", "--gen-dyck", "4", "--k", "2", "--format", "csv"]),
        "count\n9\n"
    );
}

#[test]
fn infinite_gap_set_is_an_input_error() {
    let out = sccores(&["count", "--ideals", "--generators", "6,9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("infinite gap set"));
    assert_eq!(exit_code(&["poset", "--generators", "2,4"]), 2);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(exit_code(&["count"]), 2);
    assert_eq!(exit_code(&["count", "--sc-cores", "3", "--motzkin", "3"]), 2);
    assert_eq!(exit_code(&["count", "--cores", "3"]), 2);
    assert_eq!(exit_code(&["enumerate", "--motzkin", "3", "--emit", "ideals"]), 2);
    assert_eq!(exit_code(&["sequence", "--name", "fibonacci", "--max-n", "3"]), 2);
    assert_eq!(exit_code(&["verify", "--claim", "anderson", "--max-s", "0"]), 2);
    assert_eq!(exit_code(&["verify", "--claim", "nonsense"]), 2);
    assert_eq!(exit_code(&["poset", "--generators", "8,9,10", "--format", "bfile"]), 2);
    assert_eq!(exit_code(&["frobnicate"]), 2);
}

#[test]
fn enumerate_streams() {
    let md = stdout(&["enumerate", "--sc-cores", "8", "--emit", "md-sets"]);
    let lines: Vec<&str> = md.lines().collect();
    assert_eq!(lines.len(), 35);
    assert!(lines.contains(&r#"{"md":[11,3,1]}"#));

    assert_eq!(
        stdout(&["enumerate", "--motzkin", "2", "--emit", "paths"]),
        "\"FF\"\n\"UD\"\n"
    );
    assert_eq!(
        stdout(&["enumerate", "--sc-cores", "1", "--emit", "partitions"]),
        "[]\n"
    );
    assert_eq!(
        stdout(&["enumerate", "--ideals", "--generators", "2,3", "--emit", "ideals"]),
        "[1]\n[]\n"
    );
    assert_eq!(
        stdout(&["enumerate", "--cores", "2", "--k", "1", "--emit", "partitions"])
            .lines()
            .count(),
        2
    );
    let witnesses = stdout(&["enumerate", "--sc-cores", "8", "--emit", "witnesses"]);
    assert!(witnesses.contains(r#"{"s":8,"md":[11,3,1],"partition":[6,3,3,1,1,1]}"#));
    assert_eq!(
        stdout(&["enumerate", "--gen-dyck", "2", "--k", "2", "--emit", "paths"])
            .lines()
            .count(),
        2
    );
}

#[test]
fn tilde_poset_dot() {
    let dot = stdout(&["poset", "--tilde", "8", "--format", "dot"]);
    let nodes = dot.lines().filter(|l| l.contains("[label=")).count();
    let forbidden = dot.lines().filter(|l| l.contains("forbidden=true")).count();
    assert_eq!((nodes, forbidden), (10, 8));
}

#[test]
fn sequences() {
    assert_eq!(
        stdout(&[
            "sequence",
            "--name",
            "even-symmetric-motzkin",
            "--max-n",
            "4",
            "--format",
            "plain"
        ]),
        "1,2,5,13,35\n"
    );
    assert_eq!(
        stdout(&[
            "sequence",
            "--name",
            "sc-core-count",
            "--max-n",
            "6",
            "--format",
            "plain"
        ]),
        "1,1,2,2,5,5,13\n"
    );
    assert_eq!(
        stdout(&["sequence", "--name", "motzkin", "--max-n", "2", "--format", "csv"]),
        "n,a(n)\n0,1\n1,1\n2,2\n"
    );
}

#[test]
fn verify_reports() {
    let out = stdout(&["verify", "--claim", "main", "--max-s", "10", "--no-timing"]);
    assert!(out.lines().take(10).all(|l| l.starts_with("PASS main")));

    let out = stdout(&[
        "verify",
        "--claim",
        "phi",
        "--max-s",
        "12",
        "--format",
        "json",
        "--no-timing",
    ]);
    assert_eq!(out.lines().count(), 5);
    assert!(out.contains(r#""left_value":[13,13,13]"#));
    assert!(!out.contains("elapsed_ms"));

    // deterministic across runs
    let args = ["verify", "--all", "--format", "json", "--no-timing"];
    assert_eq!(stdout(&args), stdout(&args));

    let csv = stdout(&[
        "verify",
        "--claim",
        "even-odd",
        "--max-s",
        "2",
        "--format",
        "csv",
        "--no-timing",
    ]);
    assert_eq!(
        csv,
        "claim_id,parameters,left,right,passed,elapsed_ms\neven-odd,s=1,2,2,true,\neven-odd,s=2,5,5,true,\n"
    );
}

#[test]
fn asserted_failure_exits_1() {
    // a weight cap below the largest core makes the brute-force leg come up short
    let out = sccores(&["verify", "--claim", "fms", "--max-s", "7", "--cap", "2", "--no-timing"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL fms"));
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("sccores-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("seq.txt");
    let p = path.to_str().unwrap();
    assert_eq!(
        stdout(&["sequence", "--name", "motzkin", "--max-n", "3", "--output", p]),
        ""
    );
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "0 1\n1 1\n2 2\n3 4\n");
    std::fs::remove_dir_all(&dir).unwrap();
}
