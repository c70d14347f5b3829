use std::process::{Command, Output};

fn idforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idforge"))
        .args(args)
        .env_remove("IDFORGE_TERM_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn list_has_one_line_per_identity() {
    let o = idforge(&["list"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 29);
    let gould = text.lines().find(|l| l.starts_with("gould_variation ")).unwrap();
    assert!(gould.contains("known_discrepant"));
    assert_eq!(text, stdout(&idforge(&["list"])));
}

#[test]
fn eval_examples() {
    let cases: &[(&[&str], &str)] = &[
        (&["eval", "--identity", "jensen", "--side", "lhs", "--param", "n=1"], "x + y + z\n"),
        (&["eval", "--identity", "jensen", "--side", "rhs", "--param", "n=0"], "1\n"),
        (&["eval", "--identity", "simons", "--side", "rhs", "--param", "n=2", "--param", "x=1"], "13\n"),
        (
            &["eval", "--identity", "cv_multi", "--side", "rhs", "--param", "nvec=(1,1)", "--param", "x=1/2", "--param", "y=3"],
            "35/4\n",
        ),
    ];
    for (args, expected) in cases {
        let o = idforge(args);
        assert_eq!(code(&o), 0, "{args:?}");
        assert_eq!(stdout(&o), *expected, "{args:?}");
    }
}

#[test]
fn eval_sides_print_identically_when_verified() {
    for (id, param) in [("jensen", "n=3"), ("hou_zeng_q", "m=2"), ("chu89", "nvec=(1,1)")] {
        let mut base = vec!["eval", "--identity", id, "--param", param];
        match id {
            "hou_zeng_q" => base.extend(["--param", "n=1", "--param", "a=1"]),
            "chu89" => base.extend(["--param", "s=2"]),
            _ => {}
        }
        let side = |s: &'static str| {
            let mut a = base.clone();
            a.extend(["--side", s]);
            stdout(&idforge(&a))
        };
        assert_eq!(side("lhs"), side("rhs"), "{id}");
    }
}

#[test]
fn usage_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["verify", "--identity", "nope"],
        &["verify", "--identity", "jensen", "--param", "n=3..1"],
        &["verify", "--identity", "jensen", "--param", "n=-1"],
        &["verify", "--identity", "jensen", "--param", "zz=1"],
        &["verify", "--identity", "jensen", "--param", "n=1/2"],
        &["verify", "--identity", "jensen", "--mode", "fuzzy"],
        &["verify"],
        &["verify", "--identity", "jensen", "--output", "/nonexistent/dir/report.json"],
        &["eval", "--identity", "jensen", "--side", "lhs", "--param", "n=1", "--param", "x=1"],
        &["eval", "--identity", "jensen", "--side", "lhs"],
        &["eval", "--identity", "jensen", "--side", "lhs", "--param", "n=1", "--param", "w=1"],
        &["eval", "--identity", "jensen", "--side", "middle", "--param", "n=1"],
        &["verify", "--identity", "jensen", "--param", "n=0", "--mutate", "drop_last_term"],
        &["frobnicate"],
    ];
    for args in cases {
        let o = idforge(args);
        assert_eq!(code(&o), 2, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn golden_report() {
    let o = idforge(&["verify", "--identity", "jensen", "--identity", "gould_variation", "--param", "n=0..2", "--no-timing"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), include_str!("golden/jensen_gould.json"));
}

#[test]
fn gould_variation_is_confirmed_not_verified() {
    let o = idforge(&["verify", "--identity", "gould_variation", "--param", "n=1", "--format", "tsv", "--no-timing"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("gould_variation\tn=1\tsymbolic\tknown_discrepant_confirmed\t3\t1\t-"));
}

#[test]
fn mutation_hook_fails() {
    let o = idforge(&["verify", "--identity", "jensen", "--param", "n=0..3", "--mutate", "drop_last_term"]);
    assert_eq!(code(&o), 1);
    let o = idforge(&["verify", "--identity", "jensen", "--param", "n=2", "--mutate", "shift_upper", "--mode", "numeric"]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let w = &v["cells"][0]["witness"];
    assert!(w["x"].is_string() && w["y"].is_string() && w["z"].is_string());
}

#[test]
fn term_budget_from_environment() {
    let run = |budget: &str| {
        Command::new(env!("CARGO_BIN_EXE_idforge"))
            .args(["verify", "--identity", "jensen", "--param", "n=4", "--format", "tsv", "--no-timing"])
            .env("IDFORGE_TERM_BUDGET", budget)
            .output()
            .unwrap()
    };
    let o = run("5");
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("\taborted\t"));
    assert_eq!(code(&run("1000")), 0);
    assert_eq!(code(&run("lots")), 2);
}

#[test]
fn output_file_and_formats() {
    let dir = std::env::temp_dir().join(format!("idforge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r.tsv");
    let o = idforge(&["verify", "--identity", "sun", "--max-n", "1", "--format", "tsv", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let tsv = std::fs::read_to_string(&path).unwrap();
    assert_eq!(tsv.lines().next().unwrap(), "identity\tparams\tmode\tstatus\tlhs_monomials\trhs_monomials\telapsed_ms");
    assert_eq!(tsv.lines().count(), 1 + 2 * 2 * 2);
    std::fs::remove_dir_all(&dir).unwrap();

    let text = stdout(&idforge(&["verify", "--identity", "abel", "--param", "n=2", "--format", "text"]));
    assert!(text.starts_with("pass"));
    assert!(text.trim_end().ends_with("-> PASS"));
}

#[test]
fn jobs_do_not_change_the_report() {
    let args = |jobs: &'static str| {
        ["verify", "--identity", "multi_munarini", "--identity", "rothe", "--max-n", "2", "--mode", "numeric", "--seed", "11", "--no-timing", "--jobs", jobs]
    };
    let one = idforge(&args("1"));
    let four = idforge(&args("4"));
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
}
