use std::path::PathBuf;
use std::process::Command;

use serde_json::{json, Value};

fn gcm_file(name: &str, rows: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fm-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!("{name}.json"));
    std::fs::write(&path, format!(r#"{{"matrix": {rows}}}"#)).unwrap();
    path
}

fn hyp() -> PathBuf {
    gcm_file("hyp", "[[2,-2,-1],[-2,2,0],[-1,0,2]]")
}

fn fm(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_fm")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap().trim().to_string(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn fm_json(args: &[&str]) -> Value {
    let (code, out, err) = fm(args);
    assert_eq!(code, 0, "{args:?}: {out} {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn classify_and_special() {
    let aff = gcm_file("aff", "[[2,-2],[-2,2]]");
    assert_eq!(
        fm_json(&["classify", "--gcm", aff.to_str().unwrap()]),
        json!({"components": [{"indices": [1, 2], "type": "Affine"}]})
    );
    let h = hyp();
    assert_eq!(fm_json(&["special", "--gcm", h.to_str().unwrap()]), json!({"special": [[], [1, 2], [1, 2, 3]]}));
    assert_eq!(
        fm_json(&["classify", "--gcm", h.to_str().unwrap(), "--subset", "[1,3]"]),
        json!({"components": [{"indices": [1, 3], "type": "Finite"}]})
    );
}

#[test]
fn act_on_cosets_and_points() {
    let h = hyp();
    let g = h.to_str().unwrap();
    let coset = r#"{"rep":[3],"jtype":[]}"#;
    assert_eq!(
        fm_json(&["act", "--gcm", g, "--kind", "good2", "--element", "e[1,2]", "--coset", coset]),
        json!({"rep": [], "jtype": [1, 2]})
    );
    assert_eq!(
        fm_json(&["act", "--gcm", g, "--kind", "good1", "--element", "e[1,2]", "--coset", coset]),
        json!({"rep": [], "jtype": [1, 2, 3]})
    );
    assert_eq!(
        fm_json(&["act", "--gcm", g, "--element", "s1", "--point", r#"["-1","2","1"]"#]),
        json!(["1", "0", "0"])
    );
    assert_eq!(fm_json(&["act", "--gcm", g, "--element", "e[1,2]", "--point", r#"["1","1","1"]"#]), json!("apex"));
}

#[test]
fn outputs_read_back() {
    let h = hyp();
    let g = h.to_str().unwrap();
    let x = fm_json(&["monoid", "mul", "--gcm", g, "s3.e[1,2]", "s2.s3"]);
    let again = fm_json(&["monoid", "mul", "--gcm", g, &x.to_string(), "1"]);
    assert_eq!(x, again);
    let inv = fm_json(&["monoid", "inv", "--gcm", g, &x.to_string()]);
    assert_eq!(fm_json(&["monoid", "inv", "--gcm", g, &inv.to_string()]), x);
    let nf = fm_json(&["monoid", "nf", "--gcm", g, "--variant", "ii", &x.to_string()]);
    assert_eq!(fm_json(&["monoid", "mul", "--gcm", g, &nf.to_string(), "1"]), x);

    let a = r#"{"theta":[1,2],"rep":[3]}"#;
    let b = r#"{"theta":[1,2],"rep":[]}"#;
    let meet = fm_json(&["face", "meet", "--gcm", g, a, b]);
    assert_eq!(meet, json!({"theta": [1, 2, 3], "rep": []}));
    assert_eq!(fm_json(&["face", "meet", "--gcm", g, &meet.to_string(), a]), meet);
    let join = fm_json(&["face", "join", "--gcm", g, a, b]);
    assert_eq!(fm_json(&["face", "join", "--gcm", g, &join.to_string(), a]), join);
    let facet = fm_json(&["face", "facet", "--gcm", g, b, r#"{"rep":[3],"jtype":[]}"#]);
    assert_eq!(facet, json!({"rep": [], "jtype": [1, 2, 3]}));

    assert_eq!(fm_json(&["word", "--gcm", g, "s1.s1.s3"]), json!({"word": [3], "length": 1}));
    assert_eq!(fm_json(&["word", "--gcm", g, "[3,1,3]"])["length"], json!(3));
}

#[test]
fn enumerate_counts() {
    let fin = gcm_file("fin", "[[2,-1],[-1,2]]");
    let out = fm_json(&["enumerate", "--gcm", fin.to_str().unwrap(), "--max-len", "6"]);
    assert_eq!(out["count"], json!(6));
}

#[test]
fn verify_reports() {
    let h = hyp();
    let g = h.to_str().unwrap();
    let args = ["verify", "--gcm", g, "--suite", "order", "--samples", "300", "--seed", "5"];
    let r = fm_json(&args);
    assert_eq!(r["suite"], json!("order"));
    assert_eq!(r["failures"], json!([]));
    assert!(r["expected_violations"].as_u64().unwrap() >= 1);
    assert_eq!(fm_json(&args), r);

    let all = fm_json(&["verify", "--suite", "all", "--samples", "20", "--max-len", "4"]);
    assert_eq!(all["suite"], json!("all"));
    assert_eq!(all["failures"], json!([]));
    let (code, text, _) = fm(&["verify", "--gcm", g, "--suite", "lattice", "--samples", "10", "--pretty"]);
    assert_eq!(code, 0);
    assert!(text.ends_with("PASS"), "{text}");
}

#[test]
fn errors_are_json_with_distinct_codes() {
    let h = hyp();
    let g = h.to_str().unwrap();
    let (code, out, _) = fm(&["monoid", "inv", "--gcm", g, "e[1]"]);
    assert_eq!(code, 4);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["error"], json!("NotSpecial"));
    let (code, out, _) = fm(&["monoid", "inv", "--gcm", g, "s1.t2"]);
    assert_eq!(code, 3);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["error"], json!("ParseError"));
    let (code, out, _) = fm(&["act", "--gcm", g, "--element", "s1", "--point", r#"["1","-2","0"]"#]);
    assert_eq!((code, serde_json::from_str::<Value>(&out).unwrap()["error"].clone()), (4, json!("NotInCone")));
    let bad = gcm_file("bad", "[[2,0],[-1,2]]");
    let (code, out, _) = fm(&["special", "--gcm", bad.to_str().unwrap()]);
    assert_eq!(code, 3);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["error"], json!("AsymmetricZero"));
    let (code, _, err) = fm(&["special"]);
    assert_eq!(code, 2);
    assert!(err.contains("--gcm"));
    let (code, _, _) = fm(&["frobnicate"]);
    assert_eq!(code, 2);
}
