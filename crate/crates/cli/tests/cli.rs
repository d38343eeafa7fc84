//! End-to-end tests of the `wronsky` binary: JSON contracts, exit codes,
//! and byte-determinism of the verification reports.

use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::{Command, Output};
use std::time::Instant;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_wronsky"))
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("wronsky-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn wronskian_of_identity() {
    let f = write_temp(
        "id3.json",
        r#"{"n":3,"m":3,"rows":[["1","0","0"],["0","1","0"],["0","0","1"]]}"#,
    );
    let out = run(&["wronskian", f.to_str().unwrap()]);
    let v = stdout_json(&out);
    assert_eq!(
        v,
        json!({
            "n": 3, "m": 3,
            "ys": [
                {"index": 1, "degree": 0, "monomial": ["1"]},
                {"index": 2, "degree": 0, "monomial": ["1"]},
            ]
        })
    );
}

#[test]
fn wronskian_of_a_gl3_sample_matches_hand_expanded_minors() {
    // rows (1,2,3), (4,5,6), (7,8,10): Δ12 = -3, Δ13 = -6, Δ23 = -3
    let f = write_temp(
        "g3.json",
        r#"{"n":3,"m":3,"rows":[["1","2","3"],["4","5","6"],["7","8","10"]]}"#,
    );
    let out = run(&["wronskian", f.to_str().unwrap(), "--basis", "factorial"]);
    let v = stdout_json(&out);
    assert_eq!(v["ys"][0]["factorial"], json!(["1", "2", "3"]));
    assert_eq!(v["ys"][1]["factorial"], json!(["-3", "-6", "-3"]));
    let out = run(&["wronskian", f.to_str().unwrap()]);
    let v = stdout_json(&out);
    assert_eq!(v["ys"][1]["monomial"], json!(["-3", "-6", "-3/2"]));
    assert_eq!(v["ys"][1]["degree"], json!(2));
}

#[test]
fn wronskian_of_a_3x4_sample_groups_coefficients_like_the_contraction() {
    // y_2 factorial coefficients are
    // [Δ12, Δ13, Δ14 + Δ23, 2 Δ24, 2 Δ34] over the top two rows
    let f = write_temp(
        "g34.json",
        r#"{"n":3,"m":4,"rows":[["1","2","3","4"],["5","6","7","8"],["1","0","1","0"]]}"#,
    );
    let out = run(&["wronskian", f.to_str().unwrap(), "--basis", "factorial"]);
    let v = stdout_json(&out);
    // minors of [[1,2,3,4],[5,6,7,8]]: Δ12=-4 Δ13=-8 Δ14=-12 Δ23=-4 Δ24=-8 Δ34=-4
    assert_eq!(
        v["ys"][1]["factorial"],
        json!(["-4", "-8", "-16", "-16", "-8"])
    );
}

#[test]
fn wronskian_pretty_uses_the_factorial_display() {
    let f = write_temp(
        "g24.json",
        r#"{"n":2,"m":4,"rows":[["1","2","3","4"],["5","6","7","8"]]}"#,
    );
    let out = run(&["wronskian", f.to_str().unwrap(), "--pretty"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "y_1 = 1 + 2 x + 3 x^2/2! + 4 x^3/3!\n");
}

#[test]
fn wronskian_rejects_bad_inputs() {
    let tall = write_temp(
        "tall.json",
        r#"{"n":3,"m":2,"rows":[["1","0"],["0","1"],["1","1"]]}"#,
    );
    assert_eq!(code(&run(&["wronskian", tall.to_str().unwrap()])), 2);
    let garbled = write_temp("garbled.json", "{not json");
    assert_eq!(code(&run(&["wronskian", garbled.to_str().unwrap()])), 2);
    let badrat = write_temp(
        "badrat.json",
        r#"{"n":1,"m":2,"rows":[["1","1/-2"]]}"#,
    );
    assert_eq!(code(&run(&["wronskian", badrat.to_str().unwrap()])), 2);
    let float = write_temp("float.json", r#"{"n":1,"m":1,"rows":[["0.5"]]}"#);
    assert_eq!(code(&run(&["wronskian", float.to_str().unwrap()])), 2);
    let ragged = write_temp(
        "ragged.json",
        r#"{"n":2,"m":2,"rows":[["1","2"],["3"]]}"#,
    );
    assert_eq!(code(&run(&["wronskian", ragged.to_str().unwrap()])), 2);
}

#[test]
fn classify_reference_matrices() {
    let lower = write_temp(
        "lower.json",
        r#"{"n":3,"m":3,"rows":[["2","0","0"],["1","-3","0"],["4","5","1"]]}"#,
    );
    let v = stdout_json(&run(&["classify", lower.to_str().unwrap()]));
    assert_eq!(v, json!({"degrees": [0, 0], "w": [1, 2, 3]}));

    let anti = write_temp(
        "anti.json",
        r#"{"n":3,"m":3,"rows":[["0","0","1"],["0","1","0"],["1","0","0"]]}"#,
    );
    let v = stdout_json(&run(&["classify", anti.to_str().unwrap()]));
    assert_eq!(v, json!({"degrees": [2, 2], "w": [3, 2, 1]}));

    let perm = write_temp(
        "perm.json",
        r#"{"n":3,"m":3,"rows":[["0","0","1"],["1","0","0"],["0","1","0"]]}"#,
    );
    let v = stdout_json(&run(&["classify", perm.to_str().unwrap()]));
    assert_eq!(v, json!({"degrees": [2, 1], "w": [3, 1, 2]}));
}

#[test]
fn classify_rejects_singular_matrices_with_exit_3() {
    let f = write_temp(
        "sing.json",
        r#"{"n":2,"m":2,"rows":[["1","2"],["2","4"]]}"#,
    );
    let out = run(&["classify", f.to_str().unwrap()]);
    assert_eq!(code(&out), 3);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("singular"), "stderr: {err}");
}

#[test]
fn tau_of_gl2_at_depth_one() {
    let f = write_temp(
        "gl2.json",
        r#"{"n":2,"m":2,"rows":[["2","5"],["1","3"]]}"#,
    );
    let v = stdout_json(&run(&["tau", f.to_str().unwrap(), "--rows", "1"]));
    assert_eq!(
        v,
        json!({
            "rows": 1, "vars": 1,
            "terms": [
                {"coef": "5", "exp": [0]},
                {"coef": "2", "exp": [1]},
            ]
        })
    );
}

#[test]
fn tau_on_gl4_matches_the_library() {
    let f = write_temp(
        "gl4.json",
        r#"{"n":4,"m":4,"rows":[["1","2","0","1"],["0","1","3","1"],["2","0","1","0"],["1","1","1","2"]]}"#,
    );
    let entries: Vec<wronsky::Rat> = [1, 2, 0, 1, 0, 1, 3, 1, 2, 0, 1, 0, 1, 1, 1, 2]
        .iter()
        .map(|&k| wronsky::scalar::int(k))
        .collect();
    let g = wronsky::MatQ::new(4, 4, entries).unwrap();

    let v = stdout_json(&run(&["tau", f.to_str().unwrap(), "--rows", "2"]));
    let t = wronsky::tau::tau(&g, 2, 3).unwrap();
    let expect: Vec<Value> = t
        .value()
        .terms_graded_lex()
        .into_iter()
        .map(|(exp, coef)| json!({"exp": exp, "coef": coef.to_string()}))
        .collect();
    assert_eq!(v["terms"], json!(expect));

    let v = stdout_json(&run(&[
        "tau",
        f.to_str().unwrap(),
        "--rows",
        "2",
        "--initial",
    ]));
    let t0 = wronsky::tau::tau_initial(&g, 2).unwrap();
    let coeffs: Vec<String> = t0.monomial_coeffs().iter().map(|c| c.to_string()).collect();
    assert_eq!(v["initial"]["monomial"], json!(coeffs));
    assert_eq!(v["initial"]["degree"], json!(4));
}

#[test]
fn tau_truncation_flags() {
    let f = write_temp(
        "gl4b.json",
        r#"{"n":4,"m":4,"rows":[["1","2","0","1"],["0","1","3","1"],["2","0","1","0"],["1","1","1","2"]]}"#,
    );
    // strict rejects a truncation below the exact default
    let out = run(&[
        "tau",
        f.to_str().unwrap(),
        "--rows",
        "2",
        "--times",
        "1",
        "--strict",
    ]);
    assert_eq!(code(&out), 2);
    // without --strict the order is raised to the default
    let low = run(&["tau", f.to_str().unwrap(), "--rows", "2", "--times", "1"]);
    let default = run(&["tau", f.to_str().unwrap(), "--rows", "2"]);
    assert_eq!(low.stdout, default.stdout);
}

#[test]
fn reconstruct_round_trips_through_the_cli() {
    let coords = write_temp("c2.json", r#"["7"]"#);
    let v = stdout_json(&run(&["reconstruct", coords.to_str().unwrap(), "--n", "2"]));
    assert_eq!(v, json!({"n": 2, "m": 2, "rows": [["1", "7"], ["0", "1"]]}));

    let zeros = write_temp("c4.json", r#"["0","0","0","0","0","0"]"#);
    let v = stdout_json(&run(&["reconstruct", zeros.to_str().unwrap(), "--n", "4"]));
    assert_eq!(
        v["rows"],
        json!([
            ["1", "0", "0", "0"],
            ["0", "1", "0", "0"],
            ["0", "0", "1", "0"],
            ["0", "0", "0", "1"]
        ])
    );

    // coordinates read off `wronskian --basis factorial` of a unitriangular
    // matrix reproduce it
    let g = write_temp(
        "uni4.json",
        r#"{"n":4,"m":4,"rows":[["1","3","-2","5"],["0","1","4","-1"],["0","0","1","2"],["0","0","0","1"]]}"#,
    );
    let img = stdout_json(&run(&["wronskian", g.to_str().unwrap(), "--basis", "factorial"]));
    let mut coords: Vec<String> = Vec::new();
    for (i, y) in img["ys"].as_array().unwrap().iter().enumerate() {
        let arr = y["factorial"].as_array().unwrap();
        for q in 1..=(4 - (i + 1)) {
            coords.push(
                arr.get(q)
                    .map_or("0".to_string(), |v| v.as_str().unwrap().to_string()),
            );
        }
    }
    let cfile = write_temp("roundtrip.json", &serde_json::to_string(&coords).unwrap());
    let v = stdout_json(&run(&["reconstruct", cfile.to_str().unwrap(), "--n", "4"]));
    assert_eq!(
        v["rows"],
        json!([
            ["1", "3", "-2", "5"],
            ["0", "1", "4", "-1"],
            ["0", "0", "1", "2"],
            ["0", "0", "0", "1"]
        ])
    );
}

#[test]
fn reconstruct_rejects_wrong_coordinate_counts() {
    let coords = write_temp("cbad.json", r#"["1","2"]"#);
    assert_eq!(
        code(&run(&["reconstruct", coords.to_str().unwrap(), "--n", "2"])),
        2
    );
}

#[test]
fn verify_exit_codes_and_seeding() {
    assert_eq!(code(&run(&["verify", "--suite", "no-such-suite"])), 2);
    let out = run(&["verify", "--suite", "hook-lemma", "--nmax", "6"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("pass"));

    // WRONSKY_SEED supplies the default seed; --seed overrides it
    let via_env = bin()
        .args(["verify", "--suite", "kdv", "--trials", "5"])
        .env("WRONSKY_SEED", "9")
        .output()
        .unwrap();
    let via_flag = run(&["verify", "--suite", "kdv", "--trials", "5", "--seed", "9"]);
    assert_eq!(via_env.stdout, via_flag.stdout);
    let flag_wins = bin()
        .args(["verify", "--suite", "kdv", "--trials", "5", "--seed", "3"])
        .env("WRONSKY_SEED", "9")
        .output()
        .unwrap();
    let flag_only = run(&["verify", "--suite", "kdv", "--trials", "5", "--seed", "3"]);
    assert_eq!(flag_wins.stdout, flag_only.stdout);
    let bad_env = bin()
        .args(["verify", "--suite", "kdv"])
        .env("WRONSKY_SEED", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(bad_env.status.code(), Some(2));
}

#[test]
fn criterion_13_verify_all_is_byte_deterministic() {
    let start = Instant::now();
    let first = run(&["verify", "--suite", "all", "--seed", "42"]);
    let first_elapsed = start.elapsed();
    let start = Instant::now();
    let second = run(&["verify", "--suite", "all", "--seed", "42"]);
    let second_elapsed = start.elapsed();
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout, "reports must be byte-identical");
    assert!(!first.stdout.is_empty());
    for elapsed in [first_elapsed, second_elapsed] {
        assert!(
            elapsed.as_millis() < 60_000,
            "full suite took {} ms, over the 60 s budget",
            elapsed.as_millis()
        );
    }
    println!(
        "criterion 13 cli-determinism: pass in {} + {} ms (budget 60000 ms per run)",
        first_elapsed.as_millis(),
        second_elapsed.as_millis()
    );
}
