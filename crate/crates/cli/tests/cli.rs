use std::path::PathBuf;
use std::process::{Command, Output};

fn charvar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charvar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.extend(["--format", "structured"]);
    let o = charvar(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("charvar-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn has_float(v: &serde_json::Value) -> bool {
    match v {
        serde_json::Value::Number(n) => n.is_f64(),
        serde_json::Value::Array(xs) => xs.iter().any(has_float),
        serde_json::Value::Object(m) => m.values().any(has_float),
        _ => false,
    }
}

#[test]
fn analyze_sp4_all_components() {
    let v = json(&["analyze", "--group", "C2", "--genus", "2", "--all-components"]);
    assert_eq!(v["dim_ch"], 20);
    assert_eq!(v["supporting"]["reducible_locus"][0]["min_lower_bound"], 2);
    assert_eq!(v["supporting"]["endoscopy"][0]["min_endoscopic_codim"], 8);
    let verdicts = v["verdicts"].as_array().unwrap();
    assert_eq!(verdicts.len(), 2);
    assert!(verdicts.iter().all(|x| x["terminal"]["value"] == true));
    assert_eq!(verdicts[1]["q_factorial"]["value"], "unknown");
}

#[test]
fn structured_output_is_stable() {
    let args = ["analyze", "--group", "A1:ad,B3,T1", "--genus", "2", "--all-components", "--format", "structured"];
    let a = stdout(&charvar(&args));
    let mut seq = args.to_vec();
    seq.push("--sequential");
    assert_eq!(a, stdout(&charvar(&seq)));
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert!(!has_float(&v));
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn analyze_from_json_file_with_twist() {
    let path = temp_file(
        "pgl2.json",
        r#"{"factors":[{"family":"A","rank":1,"isogeny":"adjoint"}],"twist":[[1]]}"#,
    );
    let v = json(&["analyze", "--group", path.to_str().unwrap(), "--genus", "2"]);
    assert_eq!(v["verdicts"][0]["terminal"]["value"], true);
    let sl2 = json(&["analyze", "--group", r#"{"factors":[{"family":"A","rank":1}]}"#, "--genus", "2"]);
    assert_eq!(sl2["verdicts"][0]["terminal"]["value"], false);
    assert_eq!(sl2["verdicts"][0]["q_factorial"]["value"], "true");
}

#[test]
fn analyze_torus() {
    let v = json(&["analyze", "--group", "T3", "--genus", "4", "--all-components"]);
    assert_eq!(v["dim_ch"], 24);
    assert_eq!(v["dim_rep"], 24);
}

#[test]
fn validation_errors_exit_with_two() {
    assert_eq!(charvar(&["analyze", "--group", "A1", "--genus", "1"]).status.code(), Some(2));
    assert_eq!(charvar(&["roots", "--type", "D", "--rank", "3"]).status.code(), Some(2));
    let bad_field = charvar(&["analyze", "--group", r#"{"factors":[{"family":"A","rank":0}]}"#, "--genus", "2"]);
    assert_eq!(bad_field.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad_field.stderr).contains("factors[0].rank"));
    let half_spin = r#"{"factors":[{"family":"A","rank":3,"isogeny":{"subgroup":[[2]]}}]}"#;
    assert_eq!(
        charvar(&["analyze", "--group", half_spin, "--genus", "2", "--twist", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        charvar(&["analyze", "--group", half_spin, "--genus", "2", "--twist", "2"]).status.code(),
        Some(0)
    );
}

#[test]
fn roots_and_parabolics() {
    let v = json(&["roots", "--type", "B", "--rank", "3"]);
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 9);
    let v = json(&["parabolics", "--type", "D", "--rank", "4", "--genus", "2"]);
    let counts: Vec<i64> = v["maximal_parabolics"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l["levi_positive_root_count"].as_i64().unwrap())
        .collect();
    assert_eq!(counts, vec![6, 3, 6, 6]);
    assert_eq!(v["reducible_locus"]["tag"], "ge4");
}

#[test]
fn endoscopy_reports() {
    let v = json(&["endoscopy", "--type", "A", "--rank", "1", "--genus", "2"]);
    assert_eq!(v["min_endoscopic_codim"], "no_strata");
    let v = json(&["endoscopy", "--type", "C", "--rank", "2", "--genus", "2"]);
    assert_eq!(v["min_endoscopic_codim"], 8);
}

#[test]
fn tangent_check_line() {
    let o = charvar(&["tangent-check", "--genus", "2", "--twisted"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        "g=2 twist=-1 rank=3 tangent_dim=9 formula_value=9 match: yes"
    );
}

#[test]
fn torus_check_files() {
    let ok = temp_file("rot.json", "[[[0,-1],[1,-1]]]");
    let o = charvar(&["torus-check", "--file", ok.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("fixed_rank=0 commutator_rank=2"));
    let full = temp_file("swap.json", r#"{"rank": 2, "generators": [[[0,1],[1,0]]]}"#);
    let v = json(&["torus-check", "--file", full.to_str().unwrap()]);
    assert_eq!((v["fixed_rank"].as_i64(), v["commutator_rank"].as_i64()), (Some(1), Some(1)));
    let shear = temp_file("shear.json", "[[[1,1],[0,1]]]");
    assert_eq!(charvar(&["torus-check", "--file", shear.to_str().unwrap()]).status.code(), Some(2));
}
