use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn kimmerse(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kimmerse"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const K5: &str = "5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
const C5: &str = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";

#[test]
fn colour_k5_within_max_degree() {
    let dir = tempfile::tempdir().unwrap();
    let k5 = write(dir.path(), "k5.txt", K5);
    let out = kimmerse(&["colour", "--r", "2", &k5], None);
    assert!(out.status.success());
    let v = json(&out);
    assert!(v["palette"].as_u64().unwrap() <= 4);
    assert_eq!(v["report"]["valid"], true);
    assert_eq!(v["colouring"].as_object().unwrap().len(), 10);
}

#[test]
fn immerse_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.txt", C5);
    let out = kimmerse(&["immerse", &c5], None);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["chi"], 3);
    assert_eq!(v["certificate"]["accepted"], true);
    let cert = write(dir.path(), "imm.json", std::str::from_utf8(&out.stdout).unwrap());
    let out = kimmerse(&["verify", &c5, "--immersion", &cert], None);
    assert!(out.status.success());
    assert_eq!(json(&out)["accepted"], true);
}

#[test]
fn verify_reports_the_first_violated_clause() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.txt", C5);
    let bogus = r#"{"corners":[0,1,2],"paths":[{"ends":[0,1],"edges":[0]},{"ends":[1,2],"edges":[1]},{"ends":[0,2],"edges":[1,0]}]}"#;
    let out = kimmerse(&["verify", &c5], Some(bogus));
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["accepted"], false);
    assert!(v["violation"]["clause"].is_string());
}

#[test]
fn gen_is_reproducible() {
    let a = kimmerse(&["gen", "alpha2", "--n", "12", "--density", "0.6", "--seed", "9"], None);
    let b = kimmerse(&["gen", "alpha2", "--n", "12", "--density", "0.6", "--seed", "9"], None);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8_lossy(&a.stderr).contains("seed = 9"));
    let dot = kimmerse(&["gen", "star", "--n", "4", "--format", "dot"], None);
    assert!(String::from_utf8_lossy(&dot.stdout).starts_with("graph G {"));
}

#[test]
fn generated_instances_pipe_into_immerse() {
    let g = kimmerse(&["gen", "cocktail", "--n", "4"], None);
    let out = kimmerse(&["immerse"], Some(std::str::from_utf8(&g.stdout).unwrap()));
    assert!(out.status.success());
    assert_eq!(json(&out)["immersion"]["corners"].as_array().unwrap().len(), 4);
}

#[test]
fn oracle_values() {
    assert_eq!(json(&kimmerse(&["oracle", "chi"], Some(C5)))["chi"], 3);
    assert_eq!(json(&kimmerse(&["oracle", "alpha"], Some(C5)))["alpha"], 2);
    let v = json(&kimmerse(&["oracle", "immersion", "--t", "4"], Some(C5)));
    assert_eq!(v["exists"], false);
}

#[test]
fn errors_are_json_with_nonzero_exit() {
    let out = kimmerse(&["colour"], Some("3 1\n0 0\n"));
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["kind"], "parse");
    assert!(v["error"].as_str().unwrap().contains("loop"));

    let out = kimmerse(&["immerse"], Some("3 0\n"));
    assert_eq!(json(&out)["kind"], "alpha");

    let out = kimmerse(&["gen", "wheel", "--n", "5"], None);
    assert_eq!(json(&out)["kind"], "family");

    let out = kimmerse(&["oracle", "chi"], Some("13 0\n"));
    assert_eq!(json(&out)["kind"], "size-guard");
}

#[test]
fn stress_campaign_summary() {
    let dir = tempfile::tempdir().unwrap();
    let dump = dir.path().join("dumps");
    let out = kimmerse(
        &[
            "stress",
            "--n",
            "16",
            "--count",
            "40",
            "--seed",
            "5",
            "--dump",
            dump.to_str().unwrap(),
        ],
        None,
    );
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["summary"], "40/40 verified");
    assert_eq!(v["report"]["seed"], 5);
    assert_eq!(std::fs::read_dir(&dump).unwrap().count(), 0);
}
