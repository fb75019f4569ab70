use std::process::{Command, Output};

fn stablesq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stablesq")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_diff_reproduces_published_values() {
    let o = stablesq(&["table", "--n", "3..6", "--d", "2..9", "--k", "1..9", "--diff-paper"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("288 of 288 published cells match, 0 mismatches, 0 gaps"));
}

#[test]
fn table_csv_layout() {
    let o = stablesq(&["table", "--n", "3", "--d", "2", "--k", "5..6", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n,d,k,value,witness_count\n3,2,5,14,1\n3,2,6,,0\n");
}

#[test]
fn m_with_witnesses_json() {
    let o = stablesq(&["m", "--n", "4", "--d", "5", "--k", "6", "--witnesses", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["value"], 31);
    assert_eq!(v[0]["lower_bound"], false);
    assert!(!v[0]["witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn square_accepts_json_and_text() {
    let dir = std::env::temp_dir().join(format!("stablesq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let json = dir.join("u.json");
    std::fs::write(&json, r#"{"n":3,"d":2,"complement":[[2,0,0]]}"#).unwrap();
    let text = dir.join("u.txt");
    std::fs::write(&text, "3 2 1\n2 0 0\n").unwrap();
    for path in [&json, &text] {
        let o = stablesq(&["square", "--input", path.to_str().unwrap(), "--format", "json"]);
        assert_eq!(o.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["codim_square"], 3);
    }
    // span(x1^2 + x2^2)^perp in A(3)_2 over the basis x3^2, x2x3, x2^2, x1x3, x1x2, x1^2
    let perp = dir.join("perp.json");
    std::fs::write(
        &perp,
        r#"{"n":3,"d":2,"order":"lex","rows":[
            ["1","0","0","0","0","0"],
            ["0","1","0","0","0","0"],
            ["0","0","0","1","0","0"],
            ["0","0","0","0","1","0"],
            ["0","0","1","0","0","-1"]]}"#,
    )
    .unwrap();
    let o = stablesq(&["square", "--input", perp.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["codim_square"], 2);
    assert_eq!(v["initial_codim_square"], 3);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn check_prints_seed_and_is_deterministic() {
    let a = stablesq(&["check", "--suite", "random", "--trials", "4", "--seed", "3"]);
    let b = stablesq(&["check", "--suite", "random", "--trials", "4", "--seed", "3", "--threads", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("seed 3"));
}

#[test]
fn output_does_not_depend_on_threads() {
    let args = ["m", "--n", "5", "--d", "3..4", "--k", "7", "--witnesses", "--format", "json"];
    let one = stablesq(&[&args[..], &["--threads", "1"]].concat());
    let four = stablesq(&[&args[..], &["--threads", "4"]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn errors_exit_2() {
    assert_eq!(stablesq(&["m", "--n", "3"]).status.code(), Some(2));
    assert_eq!(stablesq(&["square", "--input", "/nonexistent/u.json"]).status.code(), Some(2));
    assert_eq!(stablesq(&["square", "--input", "x.json", "--order", "bogus"]).status.code(), Some(2));
    let o = stablesq(&["m0", "--n", "6", "--d", "5", "--k", "9", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn budget_env_is_honoured() {
    let o = Command::new(env!("CARGO_BIN_EXE_stablesq"))
        .args(["m0", "--n", "6", "--d", "5", "--k", "9"])
        .env("STABLESQ_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
