use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gl3ortho"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn gram_csv_symmetric() {
    let out = run(&[
        "gram", "--alpha", "5", "--nu", "0,0,0", "--plus", "--maxdeg", "3", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains('\r'), "LF line endings only");
    let lines: Vec<&str> = text.trim_end().lines().collect();
    assert_eq!(lines.len(), 5); // header + 4 rows
    let rows: Vec<Vec<&str>> = lines[1..].iter().map(|l| l.split(',').collect()).collect();
    for i in 0..4 {
        assert_eq!(rows[i].len(), 4);
        for j in 0..4 {
            assert_eq!(rows[i][j], rows[j][i], "symmetry at ({i}, {j})");
        }
    }
}

#[test]
fn gram_json_matches_csv() {
    let args = ["gram", "--alpha", "4", "--nu", "1,-1,0", "--plus", "--maxdeg", "2"];
    let j = json_of(&run(&args));
    let mut csv_args = args.to_vec();
    csv_args.extend(["--format", "csv"]);
    let csv = String::from_utf8(run(&csv_args).stdout).unwrap();
    let gram = j["tables"]["gram"].as_array().unwrap();
    for (row, line) in gram.iter().zip(csv.trim_end().lines().skip(1)) {
        let cells: Vec<&str> = line.split(',').collect();
        for (v, c) in row.as_array().unwrap().iter().zip(cells) {
            assert_eq!(v.as_str().unwrap(), c);
        }
    }
}

#[test]
fn gram_family_diagonal() {
    let j = json_of(&run(&[
        "gram", "--alpha", "5", "--nu", "0,0,0", "--plus", "--family", "--maxdeg", "3",
    ]));
    let gram = j["tables"]["gram"].as_array().unwrap();
    for (i, row) in gram.iter().enumerate() {
        for (k, v) in row.as_array().unwrap().iter().enumerate() {
            if i != k {
                assert_eq!(v.as_str().unwrap(), "0", "off-diagonal ({i}, {k})");
            }
        }
    }
    assert!(j["checks"].as_array().unwrap().iter().all(|c| c["pass"].as_bool().unwrap()));
}

#[test]
fn invalid_nu_exits_2() {
    let out = run(&["gram", "--alpha", "5", "--nu", "1,0,0", "--plus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn degenerate_form_exits_3() {
    // at nu = 2e1 - e2 - e3 and alpha = 5 the form has only four nodes,
    // so orthogonalizing degree 4 degenerates
    let out = run(&[
        "gram", "--alpha", "5", "--nu", "2,-1,-1", "--plus", "--family", "--maxdeg", "4",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn insufficient_support_exits_4() {
    let out = run(&["ortho", "--alpha", "5", "--nu", "2,-1,-1", "--k", "4"]);
    assert_eq!(out.status.code(), Some(4));
    let msg = String::from_utf8(out.stderr).unwrap();
    assert!(msg.contains("--alpha"), "guidance mentions alpha: {msg}");
}

#[test]
fn ortho_examples() {
    let j = json_of(&run(&["ortho", "--alpha", "5", "--nu", "0,0,0", "--k", "0"]));
    assert_eq!(j["tables"]["coefficients"], serde_json::json!(["1"]));
    assert_eq!(j["tables"]["eigenvalue"], "0");

    let j = json_of(&run(&["ortho", "--alpha", "5", "--nu", "0,0,0", "--k", "1"]));
    assert_eq!(j["tables"]["coefficients"].as_array().unwrap().len(), 2);
    assert_eq!(j["tables"]["eigenvalue"], "3");

    let j = json_of(&run(&[
        "ortho", "--alpha", "6", "--nu", "0,0,0", "--k", "1", "--l", "1",
    ]));
    assert_eq!(j["tables"]["leading_exponent"], serde_json::json!([1, 1]));
}

#[test]
fn verify_suites() {
    for (suite, alpha) in [("commutators", "3"), ("tgw", "4"), ("decompose", "2")] {
        let out = run(&["verify", suite, "--alpha", alpha]);
        assert!(out.status.success(), "verify {suite}");
        let j = json_of(&out);
        assert_eq!(j["command"], "verify");
        assert!(j["checks"].as_array().unwrap().iter().all(|c| c["pass"].as_bool().unwrap()));
    }
    let j = json_of(&run(&["verify", "decompose", "--alpha", "2"]));
    assert_eq!(j["checks"][0]["witness"], serde_json::json!([1, 1, 1]));
}

#[test]
fn trace_examples() {
    let j = json_of(&run(&["trace", "E11", "--alpha", "3"]));
    assert_eq!(j["tables"]["trace"], "1");
    let j = json_of(&run(&["trace", "E12*E21", "--alpha", "1"]));
    assert_eq!(j["tables"]["trace"], "1/3");
    let j = json_of(&run(&["trace", "E12", "--alpha", "4"]));
    assert_eq!(j["tables"]["trace"], "0");
    // sums and coefficients: trace(2*E11 + 3*E33) = 2 a/3 + 3 a/3
    let j = json_of(&run(&["trace", "2*E11 + 3*E33", "--alpha", "3"]));
    assert_eq!(j["tables"]["trace"], "5");
    // generic alpha agrees with the integer evaluation
    let j = json_of(&run(&["trace", "E12*E21", "--alpha", "1", "--generic"]));
    assert_eq!(j["tables"]["trace"], "1/3");
    let out = run(&["trace", "E14", "--alpha", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["trace", "--alpha", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn trace_builtins() {
    // z-elements shift weights, so their normalized trace vanishes
    for z in ["z21", "z12", "z13", "z32", "z31", "z23"] {
        let j = json_of(&run(&["trace", "--z", z, "--alpha", "4"]));
        assert_eq!(j["tables"]["trace"], "0", "trace of {z}");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("gl3ortho-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&[
        "trace", "E11", "--alpha", "3", "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let j: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(j["tables"]["trace"], "1");
    std::fs::remove_dir_all(&dir).unwrap();
}
