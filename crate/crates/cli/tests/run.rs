use pointfree_cli::{render, run};
use pointfree_core::derived::ModulePresentation;
use pointfree_core::ring::RingDescriptor;
use serde_json::Value;

fn pf(args: &[&str]) -> (i32, String) {
    let out = run(std::iter::once("pointfree").chain(args.iter().copied()));
    (out.code, out.stdout)
}

fn json(args: &[&str]) -> Value {
    let (code, out) = pf(args);
    assert_eq!(code, 0, "{}", out);
    serde_json::from_str(&out).unwrap()
}

#[test]
fn spec_examples() {
    assert_eq!(pf(&["zar", "leq", "--ring", r#"{"type":"int"}"#, "--lhs", "[4]", "--rhs", "[2]"]).1, "{\"result\":true}\n");
    let pts = json(&["lattice", "points", "--json", r#"{"generators":["a","b"]}"#]);
    assert_eq!(pts["count"], "4");
    let k6 = r#"{"ring":{"type":"int"},"lo":0,"hi":1,"differentials":{"1":[["6"]]}}"#;
    let h = json(&["complex", "homology", "--json", k6]);
    assert_eq!(h["0"]["divisors"][0], "6");
    assert_eq!(h["0"]["rank"], "0");
}

#[test]
fn homology_report_round_trips() {
    let c = json(&["complex", "koszul", "--gens", "[4,6,10]"]);
    let out = pf(&["complex", "homology", "--json", &c.to_string()]).1;
    let v: Value = serde_json::from_str(&out).unwrap();
    let z = RingDescriptor::Integers;
    let mut back = serde_json::Map::new();
    for (n, m) in v.as_object().unwrap() {
        back.insert(n.clone(), ModulePresentation::from_json(&z, m).unwrap().to_json());
    }
    assert_eq!(format!("{}\n", render(&Value::Object(back))), out);
}

#[test]
fn dot_and_json_agree_on_node_count() {
    for l in [
        r#"{"generators":["a"]}"#,
        r#"{"generators":["a","b","c"]}"#,
        r#"{"generators":["a","b","c"],"relations":[["a&b","c"]]}"#,
    ] {
        let n: usize = json(&["lattice", "birkhoff", "--json", l])["elements"].as_str().unwrap().parse().unwrap();
        let (code, dot) = pf(&["lattice", "dot", "--json", l]);
        assert_eq!(code, 0);
        assert_eq!(dot.lines().filter(|s| s.contains("[label=")).count(), n);
    }
}

#[test]
fn exit_codes() {
    let (code, out) = pf(&["ring", "eval", "--expr", "1/"]);
    assert_eq!(code, 2);
    assert!(json_error(&out) == "parse", "{}", out);
    let (code, out) = pf(&["complex", "cech", "--gens", "[2,3,5,7,11,13,17]"]);
    assert_eq!(code, 3);
    assert_eq!(json_error(&out), "capacity");
    let (code, out) = pf(&["lattice"]);
    assert_eq!(code, 0, "help is printed for a bare group: {}", out);
    let (code, _) = pf(&["--version"]);
    assert_eq!(code, 0);
    let (code, out) = pf(&["complex", "cech", "--ring", r#"{"type":"rat"}"#, "--gens", "[2]"]);
    assert_eq!((code, json_error(&out).as_str()), (2, "unsupported"));
}

fn json_error(out: &str) -> String {
    let v: Value = serde_json::from_str(out).unwrap();
    v["error"]["kind"].as_str().unwrap().to_string()
}

#[test]
fn inputs_from_files_and_inline_agree() {
    let file = pf(&["ttc", "points", "--file", "tests/data/uvw.json"]);
    let inline = pf(&["ttc", "points", "--json", "@tests/data/uvw.json"]);
    assert_eq!(file, inline);
    assert_eq!(file.0, 0);
}
