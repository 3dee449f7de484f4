use std::path::PathBuf;
use std::process::{Command, Output};

fn tnnflag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tnnflag")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn affine_a1_has_nine_short_elements() {
    let o = tnnflag(&["weyl", "enum", "--cartan", "affine_a1", "--maxlen", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 9);
}

#[test]
fn parabolic_enum_stays_in_the_subgroup() {
    let o = tnnflag(&["weyl", "enum", "--cartan", "a3", "--maxlen", "10", "--j", "1,2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 6);
    assert!(!stdout(&o).contains('3'));
}

#[test]
fn comparisons_print_booleans() {
    let o = tnnflag(&["weyl", "leq", "--v", "1", "--w", "1.2.1"]);
    assert_eq!(stdout(&o).trim(), "true");
    // the twisted order with J = I reverses Bruhat order
    let o = tnnflag(&["orders", "tleq", "--j", "1,2", "--v", "1", "--w", "1.2.1"]);
    assert_eq!(stdout(&o).trim(), "false");
    let o = tnnflag(&["orders", "tleq", "--j", "1,2", "--v", "1.2.1", "--w", "1"]);
    assert_eq!(stdout(&o).trim(), "true");
}

#[test]
fn three_chain_is_not_a_ball() {
    let o = tnnflag(&["topo", "check", "--chain", "3", "--ball"]);
    assert_eq!(o.status.code(), Some(1));

    let path = tmp("chain3.json");
    std::fs::write(
        &path,
        r#"{"elements":[{"id":"a","rank":0},{"id":"b","rank":1},{"id":"c","rank":2}],"covers":[["a","b"],["b","c"]]}"#,
    )
    .unwrap();
    let o = tnnflag(&["topo", "check", "--poset", path.to_str().unwrap(), "--ball"]);
    assert_eq!(o.status.code(), Some(1), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn closure_poset_round_trips_through_topo_check() {
    let path = tmp("a2_closure.json");
    let o = tnnflag(&["orders", "poset", "--j", "1", "--v", "e", "--w", "1.2.1"]);
    assert!(o.status.success());
    std::fs::write(&path, stdout(&o)).unwrap();
    let o = tnnflag(&["topo", "check", "--poset", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
    let dot = tnnflag(&["orders", "poset", "--k", "1", "--v", "e", "--w", "1.2", "--format", "dot"]);
    assert!(stdout(&dot).starts_with("digraph"));
}

#[test]
fn identities_suite_passes() {
    let o = tnnflag(&["tp", "suite", "--which", "identities", "--samples", "100", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn suites_accept_family_and_cell_arguments() {
    for args in [
        &["tp", "suite", "--which", "chart", "--samples", "5"][..],
        &["tp", "suite", "--which", "chart", "--j", "1", "--samples", "5"],
        &["tp", "suite", "--which", "chart", "--family", "negative", "--v", "2", "--samples", "5"],
        &["tp", "suite", "--which", "product", "--u", "1", "--samples", "5"],
        &["tp", "suite", "--which", "closure", "--j", "2"],
        &["tp", "suite", "--which", "closure", "--k", "1"],
        &["tp", "suite", "--which", "gkl", "--w1", "1.2", "--samples", "5"],
        &["tp", "suite", "--which", "glue", "--k", "2", "--samples", "5"],
        &["cartan", "validate", "--cartan", "hyperbolic_2_3"],
    ] {
        let o = tnnflag(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}{}", stdout(&o), String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn bad_input_exits_2() {
    for args in [
        &["weyl", "leq", "--v", "1", "--w", "7"][..],
        &["weyl", "enum"],
        &["tp", "suite", "--which", "identities", "--n", "1"],
        &["tp", "suite", "--which", "product"],
        &["tp", "suite", "--which", "chart", "--family", "positive", "--j", "1"],
        &["cartan", "validate", "--cartan", "no_such_diagram"],
        &["sl", "cell", "--matrix", "[[1,0],[0,1]]"],
    ] {
        let o = tnnflag(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn invalid_cartan_matrix_fails_validation() {
    let path = tmp("bad_cartan.json");
    std::fs::write(&path, "[[2,-1],[0,2]]").unwrap();
    let o = tnnflag(&["cartan", "validate", "--cartan", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn reports_are_byte_identical() {
    let (a, b) = (tmp("r1.json"), tmp("r2.json"));
    for p in [&a, &b] {
        let o = tnnflag(&["tp", "suite", "--which", "chart", "--samples", "10", "--out", p.to_str().unwrap()]);
        assert!(o.status.success());
    }
    let (ra, rb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ra, rb);
    let text = String::from_utf8(ra).unwrap();
    assert!(text.contains("\"schema\": 1"));
    assert!(text.contains("\"input_hash\": \"sha256:"));
}

#[test]
fn equivalent_spellings_hash_alike() {
    let hash = |w: &str| {
        let o = tnnflag(&["tp", "suite", "--which", "chart", "--w", w, "--samples", "2", "--out", "-"]);
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        v["input_hash"].as_str().unwrap().to_string()
    };
    assert_eq!(hash("1.2.1"), hash("2.1.2"));
    assert_ne!(hash("1.2.1"), hash("1.2"));
}

#[test]
fn flipped_iota_fails_with_a_matrix_witness() {
    let o = tnnflag(&["tp", "suite", "--which", "identities", "--mutation", "flip-iota", "--out", "-"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let witness = v["suites"][0]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|c| c["witnesses"].as_array().unwrap())
        .next()
        .expect("a witness");
    assert!(witness["matrix"].is_array());
}

#[test]
fn sl_cell_and_chart() {
    let o = tnnflag(&["sl", "cell", "--matrix", r#"[["1","0","0"],["0","1","0"],["0","0","1"]]"#]);
    assert_eq!(stdout(&o), "v = e\nw = e\n");
    let o = tnnflag(&["sl", "chart", "--u", "e", "--matrix", "[[1,0,0],[2,1,0],[3,4,1]]"]);
    assert_eq!(stdout(&o).trim(), "true");
}

#[test]
fn verify_quick_passes_single_threaded() {
    let o = Command::new(env!("CARGO_BIN_EXE_tnnflag"))
        .args(["verify", "quick"])
        .env("TNNFLAG_THREADS", "1")
        .output()
        .unwrap();
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).lines().last().unwrap().starts_with("PASS verify quick"));
}

#[test]
fn bad_thread_count_exits_2() {
    let o = Command::new(env!("CARGO_BIN_EXE_tnnflag"))
        .args(["weyl", "leq", "--v", "e", "--w", "1"])
        .env("TNNFLAG_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
