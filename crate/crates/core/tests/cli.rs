use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn serre(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_serre"));
    cmd.args(args).env_remove("SERRE_CACHE");
    if let Some(c) = cache {
        cmd.env("SERRE_CACHE", c);
    }
    cmd.output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn classify_examples() {
    let out = serre(&["classify", "--n", "6", "--gens", "1,3"], None);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["s2"], false);
    assert_eq!(v["witnesses"][0], serde_json::json!({"kind": "DisconnectedLinkFace", "face": []}));

    let v = json(&serre(&["classify", "--family", "cubic", "--two-n", "10", "--a", "2"], None));
    assert_eq!(v["s2"], true);
    assert!(v["buchsbaum"].as_object().unwrap().values().all(|b| b == true));
    assert!(v["cohen_macaulay"]["by_char"].as_object().unwrap().values().all(|b| b == false));

    let v = json(&serre(&["classify", "--n", "4", "--gens", "1,2"], None));
    assert_eq!(v["cohen_macaulay"]["all_fields"], true);
}

#[test]
fn invalid_input_is_rejected() {
    assert_eq!(serre(&["classify", "--n", "0"], None).status.code(), Some(2));
    assert_eq!(serre(&["classify", "--n", "70", "--gens", "1"], None).status.code(), Some(2));
    assert_eq!(serre(&["verify", "--theorem", "fermat"], None).status.code(), Some(2));
    assert_eq!(serre(&["classify", "--family", "omit-one", "--n", "9"], None).status.code(), Some(2));
    assert_eq!(serre(&["bogus"], None).status.code(), Some(2));
}

#[test]
fn witnesses_recheck() {
    let dir = tempfile::tempdir().unwrap();
    let complex = dir.path().join("intervals.txt");
    std::fs::write(&complex, "8\n0 1 2 3\n1 2 3 4\n2 3 4 5\n3 4 5 6\n4 5 6 7\n").unwrap();
    let cases: [(&[&str], &str); 3] = [
        (&["--n", "6", "--gens", "1,3"], "DisconnectedLinkFace"),
        (&["--complex", complex.to_str().unwrap()], "ShellingOrder"),
        (&["--n", "9", "--gens", "1,2"], "ImpureFacetPair"),
    ];
    for (k, (graph, kind)) in cases.iter().enumerate() {
        let out_dir = dir.path().join(format!("w{k}"));
        let mut args = vec!["witness", "--out-dir", out_dir.to_str().unwrap()];
        args.extend_from_slice(graph);
        assert!(serre(&args, None).status.success());
        let files: Vec<String> = std::fs::read_dir(&out_dir)
            .unwrap()
            .map(|e| e.unwrap().path().to_str().unwrap().to_string())
            .collect();
        let kinds: Vec<Value> = files
            .iter()
            .map(|f| serde_json::from_str::<Value>(&std::fs::read_to_string(f).unwrap()).unwrap()["witness"]["kind"].clone())
            .collect();
        assert!(kinds.iter().any(|x| x == kind), "{kinds:?}");
        let mut args = vec!["recheck"];
        args.extend(files.iter().map(String::as_str));
        let out = serre(&args, None);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn tampered_witness_fails_recheck() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("w.json");
    let bogus = r#"{"artifact":"witness","subject":{"n":5,"gens":[1]},"witness":{"kind":"DisconnectedLinkFace","face":[]}}"#;
    std::fs::write(&file, bogus).unwrap();
    let out = serre(&["recheck", file.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("FAILED"));
}

#[test]
fn davis_domke_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let certs = dir.path().join("certs");
    let out = serre(
        &["verify", "--theorem", "davis-domke", "--max-n", "24", "--certify", "--out-dir", certs.to_str().unwrap()],
        None,
    );
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["mismatches"].as_array().unwrap().len(), 0);
    assert!(v["certificates_verified"].as_u64().unwrap() > 0);
    let files: Vec<String> =
        std::fs::read_dir(&certs).unwrap().map(|e| e.unwrap().path().to_str().unwrap().to_string()).collect();
    assert_eq!(files.len(), 66);
    let mut args = vec!["recheck"];
    args.extend(files.iter().map(String::as_str));
    assert!(serre(&args, None).status.success());
}

#[test]
fn cache_serves_swept_instances() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("reports.jsonl");
    assert!(serre(&["verify", "--theorem", "s2-cubic", "--max-n", "16"], Some(&cache)).status.success());
    let lines = std::fs::read_to_string(&cache).unwrap().lines().count();
    assert!(lines > 0);
    let out = serre(&["classify", "--family", "cubic", "--two-n", "16", "--a", "2", "--stats"], Some(&cache));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("\"hits\":1"), "{stderr}");
    assert_eq!(std::fs::read_to_string(&cache).unwrap().lines().count(), lines);

    let fresh = serre(&["classify", "--family", "cubic", "--two-n", "16", "--a", "2"], None);
    assert_eq!(out.stdout, fresh.stdout);

    let mut text = std::fs::read_to_string(&cache).unwrap();
    text.insert_str(0, "garbage\n");
    std::fs::write(&cache, text).unwrap();
    let out = serre(&["classify", "--n", "5", "--gens", "1", "--stats"], Some(&cache));
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("\"corrupt_lines\":1"));
}

#[test]
fn verify_reports_instance_counts() {
    let v = json(&serre(&["verify", "--theorem", "s2-power-of-cycle"], None));
    assert_eq!(v["instances_checked"], 169);
    assert_eq!(v["mismatches"].as_array().unwrap().len(), 0);
    let out = serre(&["verify", "--theorem", "s2-cycles", "--format", "csv"], None);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().nth(1), Some("s2-cycles,10,0,0,0,0,true"));
}

#[test]
fn homology_command() {
    let dir = tempfile::tempdir().unwrap();
    let rp2 = dir.path().join("rp2.txt");
    let text = serre::theorems::projective_plane().to_text();
    std::fs::write(&rp2, text).unwrap();
    let v = json(&serre(&["homology", "--complex", rp2.to_str().unwrap()], None));
    assert_eq!(v["betti"]["2"], serde_json::json!([0, 0, 1, 1]));
    assert_eq!(v["betti"]["0"], serde_json::json!([0, 0, 0, 0]));
    assert_eq!(v["homology"][2]["torsion"], serde_json::json!([2]));
}
