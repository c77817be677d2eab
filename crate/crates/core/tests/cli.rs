use grothmon::cli::run;
use grothmon::monoid::CanonicalMonoid;
use grothmon::quiver::TorsionfreeClass;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("grothmon").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn torf_list_counts() {
    let (code, out, _) = call(&["torf", "list", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("14 torsionfree classes"));
    assert_eq!(out.lines().count(), 15);
    let (_, out, _) = call(&["torf", "list", "--n", "1"]);
    assert!(out.starts_with("2 torsionfree classes"));
}

#[test]
fn torf_list_json_roundtrips() {
    let (code, out, _) = call(&["torf", "list", "--n", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let classes: Vec<TorsionfreeClass> = serde_json::from_str(&out).unwrap();
    assert_eq!(classes.len(), 5);
    assert_eq!(serde_json::to_string_pretty(&classes).unwrap() + "\n", out);
}

#[test]
fn inter_monoid_reports() {
    let (code, out, _) = call(&["inter", "monoid", "--n", "3", "--torf", "[1,1];[1,2]"]);
    assert_eq!(code, 0);
    assert!(out.contains("monoid: ℤ^2 ⊕ ℕ"));
    assert!(out.contains("2 Serre subcategories"));
    let (_, out, _) = call(&["inter", "monoid", "--n", "3", "--torf", ""]);
    assert!(out.contains("monoid: ℕ^3"));
    let (_, out, _) = call(&["inter", "monoid", "--n", "3", "--torf", "all"]);
    assert!(out.contains("monoid: ℤ^3"));
}

#[test]
fn inter_monoid_json_schema() {
    let (_, out, _) = call(&[
        "inter",
        "monoid",
        "--n",
        "3",
        "--torf",
        "[1,1];[1,2]",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let m: CanonicalMonoid = serde_json::from_value(v["monoid"].clone()).unwrap();
    assert_eq!(m, CanonicalMonoid::make(3, &[0, 1], &[]).unwrap());
    assert_eq!(v["serre"], serde_json::json!([[1, 2], [1, 2, 3]]));
}

#[test]
fn exit_codes() {
    let (code, _, err) = call(&["inter", "monoid", "--n", "3", "--torf", "[1,2]"]);
    assert_eq!(code, 1);
    assert!(err.contains("[1,1]"), "{err}");
    assert_eq!(call(&["torf", "list", "--n", "9"]).0, 2);
    assert_eq!(call(&["torf", "list"]).0, 2);
    assert_eq!(
        call(&["inter", "monoid", "--n", "3", "--torf", "[1,2"]).0,
        2
    );
    assert_eq!(call(&["torf", "check", "--n", "2", "--torf", "[1,2]"]).0, 1);
    assert_eq!(
        call(&["inter", "localize", "--n", "3", "--torf", "[1,1]", "--serre", "2"]).0,
        1
    );
}

#[test]
fn deterministic_output() {
    for args in [
        &["torf", "list", "--n", "4", "--format", "json"][..],
        &["serre", "list", "--n", "3"],
        &["dense", "enumerate"],
        &["verify", "--suite", "quiver", "--n", "3"],
    ] {
        assert_eq!(call(args).1, call(args).1);
    }
}

#[test]
fn verify_suites_pass() {
    let (code, out, _) = call(&["verify", "--suite", "quiver", "--n", "3"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS quiver/interval-rules"));
    let (code, out, _) = call(&["verify", "--suite", "intermediate"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn monoid_commands() {
    let dir = std::env::temp_dir().join(format!("grothmon-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.json");
    let (code, json, _) = call(&["monoid", "make", "--rank", "2", "--format", "json"]);
    assert_eq!(code, 0);
    std::fs::write(&path, &json).unwrap();
    let p = path.to_str().unwrap();
    let (_, out, _) = call(&["monoid", "faces", "--monoid", p]);
    assert!(out.starts_with("4 faces"));
    let (_, out, _) = call(&[
        "monoid", "quotient", "--monoid", p, "--gens", "2,0", "--format", "json",
    ]);
    let q: CanonicalMonoid = serde_json::from_str(&out).unwrap();
    assert_eq!(
        q,
        CanonicalMonoid::make(2, &[0], &[vec![2.into(), 0.into()]]).unwrap()
    );
    let (_, out, _) = call(&["monoid", "localize", "--monoid", p, "--elems", "1,1"]);
    assert!(out.contains("monoid: ℤ^2"));
    let (_, out, _) = call(&["monoid", "gp", "--monoid", p]);
    assert!(out.contains("group completion: ℤ^2"));
    assert_eq!(
        call(&["monoid", "quotient", "--monoid", p, "--gens", "-1,0"]).0,
        1
    );
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn inter_class_and_dot() {
    let (code, out, _) = call(&[
        "inter",
        "class",
        "--n",
        "3",
        "--torf",
        "[1,1];[1,2]",
        "--object",
        r#"{"neg":[[1,1]],"zero":[[1,2]]}"#,
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("unit: true"));
    let (_, dot, _) = call(&[
        "inter",
        "monoid",
        "--n",
        "3",
        "--torf",
        "[1,1];[1,2]",
        "--format",
        "dot",
    ]);
    assert_eq!(dot.matches("fillcolor=gray80").count(), 8);
}
