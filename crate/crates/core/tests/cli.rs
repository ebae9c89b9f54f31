use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brandt-omega"))
        .args(args)
        .env_remove("BRANDT_OMEGA_BOUND")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn documented_examples() {
    let cases: &[(&[&str], &str)] = &[
        (
            &["mul", "--family", "0,1,3", "(0,1,3)", "(3,0,1)"],
            "(2,0,1)\n",
        ),
        (&["mul", "--family", "0,1,3", "0", "(1,1,0)"], "0\n"),
        (
            &["mul", "--family", "0,1,3", "--brandt", "(2;1;4)", "(4;3;5)"],
            "(2;1;5)\n",
        ),
        (
            &["solve", "--family", "0,1,3", "--left", "(2;1;4)", "(2;1;5)"],
            "(4;1;5)\n(4;3;5)\n",
        ),
        (
            &[
                "solve", "--family", "0,1,3", "--right", "(4;1;2)", "(5;1;2)",
            ],
            "(5;1;4)\n(5;3;4)\n",
        ),
        (
            &["chain", "--family", "0,1,3", "(0,0,3)"],
            "(0,0,3) (2,2,1) (3,3,0) 0\n",
        ),
        (&["iso", "--family", "0,1,3", "--other", "2,3,5"], "n=-2\n"),
        (
            &["order", "--family", "0,1,3", "(3,2,1)", "(1,0,3)"],
            "true\n",
        ),
        (
            &[
                "topo",
                "witness",
                "--family",
                "0,1,3",
                "--a",
                "(2;1;4)",
                "--d",
                "(5;0;6),(4;1;7)",
            ],
            "(5;0;6)\n",
        ),
    ];
    for (args, expected) in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&out), *expected, "{args:?}");
    }
}

#[test]
fn zero_equation_is_marked_infinite() {
    let out = run(&["solve", "--family", "0,1,3", "--left", "(2;1;4)", "O"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("infinite: all X with row ≠ 4"));
}

#[test]
fn topology_checks() {
    let out = run(&[
        "topo", "ac-check", "--family", "0,1,3", "--nbhd", "ac:(2,5)", "--elem", "(3;1;4)",
        "--bound", "20",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("pass"));
    let out = run(&[
        "topo", "t1-check", "--family", "0,1,3", "--n", "3", "--bound", "20",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&[
        "topo", "prop49", "--nbhd", "t1:1", "--m", "(5;0;5)", "--bound", "20", "--output", "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["passed"], false);
    assert!(report["counterexample"].is_array());
}

#[test]
fn verify_suite() {
    for args in [
        &["verify", "--family", "0,1,3", "--bound", "4"][..],
        &["verify", "--family", "0", "--bound", "5"],
        &["verify", "--family", "0,1,3", "--bound", "0"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let text = stdout(&out);
        assert_eq!(
            text.lines().filter(|l| l.contains(": pass")).count(),
            5,
            "{text}"
        );
    }
}

#[test]
fn bound_from_environment() {
    let with_env = Command::new(env!("CARGO_BIN_EXE_brandt-omega"))
        .args(["census", "--family", "0"])
        .env("BRANDT_OMEGA_BOUND", "2")
        .output()
        .unwrap();
    assert_eq!(stdout(&with_env), "2 3\n");
    let flag_wins = Command::new(env!("CARGO_BIN_EXE_brandt-omega"))
        .args(["census", "--family", "0", "--bound", "1"])
        .env("BRANDT_OMEGA_BOUND", "2")
        .output()
        .unwrap();
    assert_eq!(stdout(&flag_wins), "2 2\n");
    assert_eq!(stdout(&run(&["census", "--family", "0"])), "2 7\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["mul", "(1,2", "0"]).status.code(), Some(2));
    assert_eq!(
        run(&["mul", "--family", "0,1,3", "(1,2,2)", "0"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["topo", "ac-check", "--nbhd", "bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    let out = run(&["mul", "(1,2,2)", "0"]);
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    assert!(out.stdout.is_empty());
}

#[test]
fn dot_output() {
    let out = run(&[
        "census", "--family", "0,1,3", "--bound", "3", "--output", "dot",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph idempotents {"));
    assert!(dot.contains("\"(0,0,3)\" -> \"(2,2,1)\";"));
}

#[test]
fn json_outputs_round_trip() {
    let out = run(&["solve", "--left", "(2;1;4)", "(2;1;5)", "--output", "json"]);
    let xs: Vec<brandt_omega::BrandtElem> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(xs.len(), 2);
    let out = run(&["embed", "(2,0,1)", "--output", "json"]);
    let e: brandt_omega::BrandtElem = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(e.to_string(), "(3;1;1)");
}
