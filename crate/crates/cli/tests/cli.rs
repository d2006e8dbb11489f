use std::process::{Command, Output};

fn topograph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_topograph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = topograph(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> Option<i32> {
    topograph(args).status.code()
}

#[test]
fn build_edges_n3() {
    let text = stdout(&["build", "--n", "3", "--format", "edges"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "# topograph n=3 order=6 size=6");
    assert_eq!(&lines[1..], ["1 2", "1 4", "1 6", "2 4", "2 5", "3 4"]);
}

#[test]
fn build_dot_n2() {
    let text = stdout(&["build", "--n", "2", "--format", "dot"]);
    assert!(text.starts_with("graph "));
    assert_eq!(text.matches("label=").count(), 2);
    assert!(text.contains("label=\"{1}\""));
    assert_eq!(text.matches(" -- ").count(), 1);
}

#[test]
fn invariants_json_n5() {
    let text = stdout(&["invariants", "--n", "5", "--format", "json"]);
    for field in [
        "\"order\": 30",
        "\"min_degree\": 1",
        "\"max_degree\": 15",
        "\"clique_number\": 5",
        "\"independence_number\": 15",
        "\"domination_number\": 5",
        "\"radius\": 2",
        "\"diameter\": 3",
    ] {
        assert!(text.contains(field), "missing {field}");
    }
}

#[test]
fn invariants_text_small() {
    let text = stdout(&["invariants", "--n", "2"]);
    for line in [
        "order: 2",
        "radius: 1",
        "diameter: 1",
        "domination number: 1",
    ] {
        assert!(text.lines().any(|l| l == line), "missing {line}");
    }
    let text = stdout(&["invariants", "--n", "4"]);
    for line in ["size: 25", "independence number: 7", "domination number: 4"] {
        assert!(text.lines().any(|l| l == line), "missing {line}");
    }
}

#[test]
fn verify_rows() {
    let csv = stdout(&["verify", "--n-min", "2", "--n-max", "4", "--format", "csv"]);
    assert!(csv.starts_with("claim,params,predicted,computed,verdict\n"));
    assert!(csv.lines().any(|l| l == "BETA-STATED,4,10,7,REFUTED"));
    let text = stdout(&["verify", "--n-min", "5", "--n-max", "5"]);
    assert!(text.contains("BETA-EXAMPLE"));
    let row = text
        .lines()
        .find(|l| l.starts_with("BETA-EXAMPLE"))
        .unwrap();
    assert_eq!(
        row.split_whitespace().collect::<Vec<_>>(),
        ["BETA-EXAMPLE", "5", "15", "15", "CONFIRMED"]
    );
    assert!(text
        .lines()
        .last()
        .unwrap()
        .starts_with("summary: CONFIRMED="));
    let csv = stdout(&["verify", "--n-min", "3", "--n-max", "3", "--format", "csv"]);
    assert!(csv
        .lines()
        .any(|l| l == "BETA-EQ-GAMMA,3,equal,equal,CONFIRMED"));
}

#[test]
fn verify_json_has_schema_fields() {
    let json = stdout(&["verify", "--n-min", "3", "--n-max", "3", "--format", "json"]);
    assert!(json.trim_start().starts_with('['));
    for key in [
        "\"claim\"",
        "\"params\"",
        "\"predicted\"",
        "\"computed\"",
        "\"verdict\"",
        "\"evidence\"",
    ] {
        assert!(json.contains(key), "missing {key}");
    }
}

#[test]
fn compose_domination() {
    let run = |op: &str, l: &str, r: &str| {
        stdout(&[
            "compose",
            "--op",
            op,
            "--left",
            l,
            "--right",
            r,
            "--invariant",
            "domination",
        ])
    };
    assert_eq!(run("corona", "topo:3", "topo:2"), "6\n");
    assert_eq!(run("join", "topo:2", "topo:3"), "1\n");
    assert_eq!(run("join", "topo:3", "topo:3"), "2\n");
}

#[test]
fn compose_graph_output() {
    let text = stdout(&[
        "compose", "--op", "join", "--left", "topo:2", "--right", "topo:2",
    ]);
    assert_eq!(
        text.lines().next(),
        Some("# graph join(topo:2,topo:2) order=4 size=6")
    );
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("topograph-cli-{}.dot", std::process::id()));
    let p = path.to_str().unwrap();
    assert_eq!(
        stdout(&["build", "--n", "3", "--format", "dot", "--output", p]),
        ""
    );
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written, stdout(&["build", "--n", "3", "--format", "dot"]));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["build", "--n", "20"]), Some(3));
    assert_eq!(code(&["build", "--n", "1"]), Some(3));
    assert_eq!(code(&["verify", "--n-min", "2", "--n-max", "40"]), Some(3));
    assert_eq!(
        code(&["compose", "--op", "corona", "--left", "topo:16", "--right", "topo:16"]),
        Some(3)
    );
    assert_eq!(code(&["build", "--n", "3", "--format", "csv"]), Some(2));
    assert_eq!(code(&["build"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(code(&["verify", "--n-min", "5", "--n-max", "3"]), Some(2));
    assert_eq!(
        code(&["compose", "--op", "join", "--left", "k:3", "--right", "topo:3"]),
        Some(2)
    );
    assert_eq!(
        code(&["invariants", "--n", "3", "--budget-seconds", "0"]),
        Some(2)
    );
    assert_eq!(
        code(&[
            "compose", "--op", "join", "--left", "topo:2", "--right", "topo:2", "--format", "csv"
        ]),
        Some(2)
    );
}

#[test]
fn timeout_exit_code() {
    let out = topograph(&[
        "compose",
        "--op",
        "corona",
        "--left",
        "topo:7",
        "--right",
        "topo:3",
        "--invariant",
        "domination",
        "--budget-seconds",
        "0.001",
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(!out.stdout.is_empty());
}
