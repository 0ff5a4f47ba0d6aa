use levi_weyl::cli::execute;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let o = execute(std::iter::once("levi-weyl").chain(args.iter().copied()));
    (o.code, o.stdout, o.stderr)
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (code, out, err) = run(&full);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn weyl_dimension() {
    let (code, out, _) = run(&["weyl-dim", "--g", "B3", "--weight", "0,1,0"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "22");
}

#[test]
fn admissibility_verdict() {
    let v = json(&[
        "admissible",
        "--g",
        "B3",
        "--levi",
        "e1-e2,e2",
        "--weight",
        "0,1,0",
    ]);
    assert_eq!(v["globally"], false);
    assert_eq!(v["locally"], false);
}

#[test]
fn levi_classification() {
    let (code, out, _) = run(&["levi", "classify", "--g", "A3", "--roots", "e1-e2,e2-e4"]);
    assert_eq!(code, 0);
    assert!(out.contains("A2"), "{out}");
    let v = json(&["levi", "classify", "--g", "A3", "--roots", "e1-e2,e2-e4"]);
    assert_eq!(v["type"], "A2");
}

#[test]
fn decomposition_lines() {
    let (code, out, _) = run(&["branch", "--g", "A2", "--levi", "e1-e2", "--weight", "1,0"]);
    assert_eq!(code, 0);
    let mut lines: Vec<&str> = out.lines().collect();
    lines.sort();
    assert_eq!(lines, vec!["V(0) x 1", "V(1) x 1"]);
    let (_, out, _) = run(&["weyl-char", "--g", "B3", "--weight", "0,1,0"]);
    assert!(
        out.contains("V(0,1,0) x 1") && out.contains("V(0,0,0) x 1"),
        "{out}"
    );
}

#[test]
fn printed_levis_reparse() {
    let v = json(&["levi", "enumerate", "--g", "B3"]);
    let items = v["levis"].as_array().unwrap();
    assert!(!items.is_empty());
    for item in items {
        let roots = item["simple_roots"].as_str().unwrap();
        let again = json(&["levi", "classify", "--g", "B3", "--roots", roots]);
        assert_eq!(again["simple_roots"], item["simple_roots"]);
        assert_eq!(again["type"], item["type"]);
    }
    for (i, item) in items.iter().enumerate() {
        let again = json(&[
            "levi",
            "classify",
            "--g",
            "B3",
            "--roots",
            item["simple_roots"].as_str().unwrap(),
        ]);
        let by_index = json(&[
            "project",
            "--g",
            "B3",
            "--levi",
            &(i + 1).to_string(),
            "--weight",
            "1,1,1",
        ]);
        let by_roots = json(&[
            "project",
            "--g",
            "B3",
            "--levi",
            again["simple_roots"].as_str().unwrap(),
            "--weight",
            "1,1,1",
        ]);
        assert_eq!(by_index, by_roots);
    }
}

#[test]
fn printed_weights_reparse() {
    let v = json(&["weyl-char", "--g", "C3", "--weight", "1,0,1"]);
    for part in v["decomposition"].as_array().unwrap() {
        let w = part["weight"].as_str().unwrap();
        let (code, out, _) = run(&["weyl-dim", "--g", "C3", "--weight", w]);
        assert_eq!(code, 0);
        assert!(out.trim().parse::<u64>().is_ok());
    }
}

#[test]
fn verify_output_matches_schema_and_is_deterministic() {
    let schema: Value = serde_json::from_str(include_str!("../schema/report.schema.json")).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).unwrap();
    let args = [
        "--format",
        "json",
        "verify",
        "all",
        "--g",
        "B2,A2",
        "--max-weight-sum",
        "2",
    ];
    let (code, first, _) = run(&args);
    assert_eq!(code, 0);
    let (_, second, _) = run(&args);
    assert_eq!(first, second);
    let doc: Value = serde_json::from_str(&first).unwrap();
    assert!(compiled.is_valid(&doc));
    assert!(doc["reports"].as_array().unwrap().len() > 10);
    assert_eq!(doc["summary"]["fail"], 0);

    let single = [
        "--format", "json", "verify", "thm2i", "--g", "B3", "--levi", "e2-e3,e3", "--weight",
        "0,1,0",
    ];
    let (code, out, _) = run(&single);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert!(compiled.is_valid(&doc));
    assert_eq!(doc["reports"][0]["computed"], 5);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["weyl-dim", "--g", "B1", "--weight", "1"]).0, 2);
    assert_eq!(run(&["weyl-dim", "--g", "B3", "--weight", "1,x,0"]).0, 2);
    assert_eq!(
        run(&["levi", "classify", "--g", "B3", "--roots", "e1+e2+e3"]).0,
        2
    );
    assert_eq!(run(&["no-such-command"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
    let (code, _, err) = run(&[
        "verify", "thm2i", "--g", "B3", "--levi", "e1-e2,e2", "--weight", "0,1,0",
    ]);
    assert_ne!(code, 0, "{err}");
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("levi-weyl-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("dim.txt");
    let code = levi_weyl::cli::run([
        "levi-weyl",
        "--output",
        path.to_str().unwrap(),
        "weyl-dim",
        "--g",
        "D4",
        "--weight",
        "0,1,0,0",
    ]);
    assert_eq!(code, 0);
    assert_eq!(std::fs::read_to_string(&path).unwrap().trim(), "29");
    std::fs::remove_dir_all(&dir).unwrap();
}
