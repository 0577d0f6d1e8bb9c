use std::process::Command;

use weaving::text::{format_braid, parse_braid};
use weaving::run_captured;
use weaving_core::BraidWord;

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_weaving")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn captured(args: &[&str]) -> (i32, String) {
    run_captured(std::iter::once("weaving").chain(args.iter().copied()))
}

#[test]
fn gen_round_trips() {
    for p in 1..=9 {
        for q in 0..=9 {
            let (code, text) = captured(&["gen", &p.to_string(), &q.to_string()]);
            assert_eq!(code, 0);
            let b = BraidWord::weaving(p, q).unwrap();
            assert_eq!(parse_braid(&text).unwrap(), b, "p={p} q={q}");
            assert_eq!(text, format_braid(&b));
        }
    }
}

#[test]
fn gen_example() {
    assert_eq!(bin(&["gen", "3", "2"]).1, "strands: 3\nword: 1 -2 1 -2\n");
}

#[test]
fn warping_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.txt");
    std::fs::write(&path, format_braid(&BraidWord::weaving(7, 7).unwrap())).unwrap();
    let file = path.to_str().unwrap();
    let (code, out, _) = bin(&["wd", "--file", file, "--seq", "1,3,5,7,2,4,6"]);
    assert_eq!((code, out.as_str()), (0, "12\n"));
    let (_, json) = captured(&["wd", "--file", file, "--seq", "1,3,5,7,2,4,6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["count"], 12);
    assert_eq!(v["sequence"], serde_json::json!([1, 3, 5, 7, 2, 4, 6]));
    assert_eq!(v["warping_ordinals"].as_array().unwrap().len(), 12);
}

#[test]
fn exit_codes() {
    assert_eq!(bin(&["gen", "3"]).0, 1);
    assert_eq!(bin(&["frobnicate"]).0, 1);
    assert_eq!(bin(&["wd", "3", "2", "--file", "x.txt"]).0, 1);
    assert_eq!(bin(&["wd", "3", "2", "--seq", "1,x,3"]).0, 1);
    assert_eq!(bin(&["wd", "3", "2", "--budget", "0"]).0, 1);
    assert_eq!(bin(&["--help"]).0, 0);
    assert_eq!(bin(&["--version"]).0, 0);

    assert_eq!(bin(&["wd", "3", "2", "--seq", "1,1,2"]).0, 2);
    assert_eq!(bin(&["wd", "--file", "/nonexistent/braid.txt"]).0, 2);
    assert_eq!(bin(&["rcc", "3", "2", "--regions", "r9_9"]).0, 2);
    assert_eq!(bin(&["regions", "3", "0"]).0, 2);
    assert_eq!(bin(&["verify", "2", "2"]).0, 2);

    let (code, _, err) = bin(&["ur", "5", "7"]);
    assert_eq!(code, 3);
    assert!(err.contains("exceeds the cap"));
    assert_eq!(bin(&["wd", "5", "3", "--max-strands", "4"]).0, 3);
    assert_eq!(bin(&["certify", "3", "2", "--max-strands", "2", "--budget", "5"]).0, 0);
}

#[test]
fn deterministic_output() {
    for args in [
        vec!["bounds", "5", "7", "--format", "csv"],
        vec!["regions", "4", "5", "--format", "json"],
        vec!["verify", "5", "5", "--format", "json"],
        vec!["verify-grid", "5", "6", "--format", "csv"],
        vec!["certify", "5", "1", "--format", "json"],
        vec!["isolate", "4", "4", "--format", "json"],
    ] {
        let first = bin(&args);
        assert_eq!(first.0, 0, "{args:?}");
        assert_eq!(first, bin(&args), "{args:?}");
    }
}

#[test]
fn bounds_csv_example() {
    let (code, csv) = captured(&["bounds", "3", "4", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(csv.starts_with("p,q,formula_id,value,applicable,witness_size,verdict\n"));
    assert!(csv.contains("\n3,4,u-np1-odd,2,true,2,trivial\n"), "{csv}");
    assert!(csv.contains("\n3,4,uR-crossing,9/2,true,,\n"));
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lk.json");
    let (code, out, _) = bin(&["lk", "3", "3", "--format", "json", "--output", path.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, ""));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["proper"], true);
    assert_eq!(v["lk"], serde_json::json!([[0, 0, 0], [0, 0, 0], [0, 0, 0]]));
}

#[test]
fn region_export_fields() {
    let (_, json) = captured(&["regions", "3", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    for key in ["crossings", "faces", "components", "lk"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["crossings"].as_array().unwrap().len(), 4);
    assert_eq!(v["faces"].as_array().unwrap().len(), 6);
    assert_eq!(v["components"].as_array().unwrap().len(), 1);
}

#[test]
fn rcc_then_certify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("after.txt");
    let (code, _, _) = bin(&["rcc", "5", "2", "--regions", "r1_2,r1_3", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, out, _) = bin(&["certify", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("trivial\n"), "{out}");
}
