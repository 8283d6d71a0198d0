use spinvol::cli::run;

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn spinvol(args: &[&str]) -> spinvol::cli::Outcome {
    let mut argv = vec!["spinvol"];
    argv.extend_from_slice(args);
    run(argv)
}

#[test]
fn classify_sqrt2_example() {
    let out = spinvol(&["classify", &data("type2_q_sqrt2.mat")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("type=2 alpha=2 n=2"));
    assert!(out.stdout.ends_with("verified=true\n"));
}

#[test]
fn json_keys_in_fixed_order() {
    let out = spinvol(&["--json", "classify", &data("type1_q.mat")]);
    assert_eq!(out.code, 0);
    let keys = [
        "\"type\"",
        "\"n\"",
        "\"gamma\"",
        "\"alpha_class\"",
        "\"dim_pair\"",
        "\"transition\"",
        "\"verified\"",
    ];
    let pos: Vec<usize> = keys.iter().map(|k| out.stdout.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]));
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["type"], 1);
    assert_eq!(v["dim_pair"], serde_json::json!([2, 2]));
    assert_eq!(v["verified"], true);
    assert_eq!(v.as_object().unwrap().len(), 7);
}

#[test]
fn isomorphic_j_and_conjugate() {
    let out = spinvol(&["isomorphic", &data("j_q.mat"), &data("j_conj_q.mat")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("isomorphic=true\n"));
    assert!(out.stdout.contains("conjugator"));
    assert!(out.stdout.contains("verified=true"));
}

#[test]
fn different_types_are_not_isomorphic() {
    let out = spinvol(&["isomorphic", &data("j_q.mat"), &data("type1_q.mat")]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "isomorphic=false\n");
}

#[test]
fn canonical_prints_form() {
    let out = spinvol(&["canonical", &data("type4_f5.mat")]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("case=RootNotInK"));
    assert!(out.stdout.contains("canonical U^-1 A U:"));
}

#[test]
fn verify_counts_table() {
    let out = spinvol(&["verify-counts", "--n", "1", "--p", "3"]);
    assert_eq!(out.code, 0);
    let rows: Vec<&str> = out.stdout.lines().filter(|l| l.starts_with('C')).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r.contains("CONFIRMED")));
    assert!(!out.stdout.contains("VIOLATED"));
}

#[test]
fn representative_round_trips_through_classify() {
    let out = spinvol(&[
        "representative",
        "--type",
        "4",
        "--n",
        "2",
        "--alpha",
        "2",
        "--field",
        "fp 5",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let doc = spinvol::cli::format::parse_document(&out.stdout).unwrap();
    let r = spinvol::involution::classify(&doc.matrix).unwrap();
    assert_eq!(r.inv_type.number(), 4);
}

#[test]
fn square_class_reports() {
    let out = spinvol(&["square-class", "--field", "rationals", "-12"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "class=-3 square=false classes=infinite\n");
    let out = spinvol(&["square-class", "--field", "fp 7", "2"]);
    assert_eq!(out.stdout, "class=1 square=true classes=2\n");
}

#[test]
fn exit_codes() {
    assert_eq!(spinvol(&["classify", "/does/not/exist"]).code, 2);
    assert_eq!(spinvol(&["frobnicate"]).code, 2);
    assert_eq!(spinvol(&["square-class", "--field", "fp 4", "1"]).code, 2);
    assert_eq!(
        spinvol(&["representative", "--type", "2", "--n", "3", "--alpha", "2"]).code,
        1
    );
    assert_eq!(spinvol(&["enumerate", "--n", "3", "--p", "3"]).code, 1);
    assert_eq!(
        spinvol(&["enumerate", "--n", "1", "--p", "5", "--alpha", "4"]).code,
        1
    );
    assert_eq!(spinvol(&["--help"]).code, 0);
}

#[test]
fn non_involution_is_a_domain_error() {
    let dir = std::env::temp_dir().join(format!("spinvol-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.mat");
    std::fs::write(&path, "field: rationals\n1 1\n0 1\n").unwrap();
    let out = spinvol(&["classify", path.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("neither I nor -I"));
    std::fs::write(&path, "field: rationals\n1 x\n0 1\n").unwrap();
    let out = spinvol(&["classify", path.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line 2"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn output_is_deterministic() {
    let a = spinvol(&["enumerate", "--n", "1", "--p", "5"]);
    let b = spinvol(&["enumerate", "--n", "1", "--p", "5"]);
    assert_eq!(a, b);
    let a = spinvol(&["--json", "canonical", &data("type2_q_i.mat")]);
    let b = spinvol(&["--json", "canonical", &data("type2_q_i.mat")]);
    assert_eq!(a, b);
}
