use serde_json::Value;
use std::process::{Command, Output};

fn exlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_exlab"))
        .args(args)
        .env_remove("EXLAB_SEED")
        .output()
        .expect("exlab runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = exlab(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn tmp(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("exlab-cli-{}-{name}", std::process::id()))
}

#[test]
fn invariants_pentagon() {
    let v = json(&["invariants", "--catalog", "C5"]);
    assert_eq!(v["schema"], "1");
    assert_eq!(v["alpha"]["value"], "2");
    assert_eq!(v["alpha_star"]["value"], "5/2");
    assert!((v["theta"]["value"].as_f64().unwrap() - 2.2360680).abs() < 1e-7);
    assert_eq!(v["sandwich"]["verdict"], "sandwich OK");

    let table = stdout(&exlab(&["invariants", "--catalog", "C5"]));
    assert!(table.contains("2.23606798"));
    assert!(table.contains("sandwich OK"));
}

#[test]
fn invariants_complete_graphs() {
    for args in [["--catalog", "K4"], ["--graph6", "D~{"]] {
        let mut full = vec!["invariants"];
        full.extend(args);
        let v = json(&full);
        assert_eq!(v["alpha"]["value"], "1");
        assert_eq!(v["alpha_star"]["value"], "1");
        assert!((v["theta"]["value"].as_f64().unwrap() - 1.0).abs() < 1e-7);
    }
}

#[test]
fn weights_and_edge_list_file() {
    let path = tmp("c5.txt");
    std::fs::write(&path, "# pentagon\n5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let v = json(&["invariants", "--edge-list", path.to_str().unwrap(), "--weights", "2,2,2,2,2"]);
    assert_eq!(v["alpha"]["value"], "4");
    assert_eq!(v["alpha_star"]["value"], "5");
    assert!((v["theta"]["value"].as_f64().unwrap() - 2.0 * 5f64.sqrt()).abs() < 1e-6);
    std::fs::remove_file(path).ok();
}

#[test]
fn duality_examples() {
    let v = json(&["duality", "--catalog", "C5"]);
    let verdicts: Vec<&str> = v["verdicts"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(verdicts, ["abl E1(Gc)=NC(G): PASS", "abl NC(Gc)=E1(G): PASS"]);
    assert_eq!(v["sets_coincide"], false);

    let v = json(&["duality", "--catalog", "K3"]);
    assert_eq!(v["sets_coincide"], true);

    let v = json(&["duality", "--catalog", "C5", "--quantum-sampled", "20"]);
    assert!(v["quantum_sampled"]["max_cross_ep"].as_f64().unwrap() <= 1.0 + 1e-6);
    assert_eq!(v["quantum_sampled"]["records"].as_array().unwrap().len(), 20);
}

#[test]
fn seed_comes_from_environment() {
    let run = |env: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_exlab"));
        c.args(["duality", "--catalog", "C5", "--quantum-sampled", "2", "--format", "json"]);
        match env {
            Some(s) => c.env("EXLAB_SEED", s),
            None => c.env_remove("EXLAB_SEED"),
        };
        serde_json::from_slice::<Value>(&c.output().unwrap().stdout).unwrap()
    };
    assert_eq!(run(None)["seed"], 42);
    let seeded = run(Some("5"));
    assert_eq!(seeded["seed"], 5);
    assert_ne!(seeded["quantum_sampled"]["records"], run(None)["quantum_sampled"]["records"]);
}

#[test]
fn witness_examples_and_exit_codes() {
    let v = json(&["witness", "--catalog", "C5", "--behavior", "0.5,0.5,0.5,0.5,0.5"]);
    assert!((v["inner_product"].as_f64().unwrap() - 1.118034).abs() < 1e-5);

    let out = exlab(&["witness", "--catalog", "C5", "--behavior", "0.4,0.4,0.4,0.4,0.4"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("target is quantum-realizable"));

    let out = exlab(&["witness", "--catalog", "C5", "--behavior", "uniform:0.7"]);
    assert_eq!(out.status.code(), Some(4));

    let out = exlab(&["witness", "--catalog", "C5", "--behavior", "0.5,0.5"]);
    assert_eq!(out.status.code(), Some(2));

    let path = tmp("behavior.json");
    std::fs::write(&path, "[\"1/2\", 0.5, 0.5, 0.5, 0.5, 0.5, 0.5]").unwrap();
    let v = json(&["witness", "--catalog", "C7", "--behavior", path.to_str().unwrap()]);
    assert!(v["inner_product"].as_f64().unwrap() > 1.0);
    std::fs::remove_file(path).ok();
}

#[test]
fn yan_examples() {
    let v = json(&["yan", "--catalog", "C5"]);
    assert_eq!(v["product"]["vertices"], 25);
    assert_eq!(v["diagonal"], serde_json::json!([0, 6, 12, 18, 24]));
    assert_eq!(v["diagonal_is_clique"], true);
    assert!(v["product"]["graph6"].as_str().unwrap().starts_with('X'));

    let v = json(&["yan", "--catalog", "K1"]);
    assert_eq!(v["product"]["vertices"], 1);

    let path = tmp("yan.json");
    let out = exlab(&["yan", "--catalog", "C7", "--json", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["product"]["vertices"], 49);
    std::fs::remove_file(path).ok();

    assert_eq!(exlab(&["yan", "--catalog", "K65"]).status.code(), Some(5));
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(exlab(&["invariants", "--graph6", "!!"]).status.code(), Some(2));
    assert_eq!(exlab(&["invariants", "--catalog", "nope"]).status.code(), Some(2));
    assert_eq!(exlab(&["invariants", "--catalog", "C5", "--graph6", "Dhc"]).status.code(), Some(2));
    assert_eq!(exlab(&["invariants"]).status.code(), Some(2));
    assert_eq!(exlab(&["invariants", "--catalog", "C5", "--weights", "1,-1,1,1,1"]).status.code(), Some(2));
    assert_eq!(exlab(&["invariants", "--catalog", "C5", "--gap-tol", "0"]).status.code(), Some(2));
}

#[test]
fn batch_mode_keeps_input_order() {
    let path = tmp("batch.g6");
    std::fs::write(&path, "Dhc\n# comment\nBw\n!!\n").unwrap();
    let out = exlab(&["invariants", "--each", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 3);
    assert_eq!(results[0]["report"]["alpha"]["value"], "2");
    assert_eq!(results[1]["report"]["alpha"]["value"], "1");
    assert_eq!(results[2]["error"]["exit_code"], 2);
    std::fs::remove_file(path).ok();
}

#[test]
fn table_matches_json() {
    let v = json(&["witness", "--catalog", "C5", "--behavior", "uniform:0.5"]);
    let table = stdout(&exlab(&["witness", "--catalog", "C5", "--behavior", "uniform:0.5"]));
    for key in ["theta_value", "inner_product"] {
        assert!(table.contains(&v[key].to_string()), "{key}");
    }
}
