//! Golden-file tests for every verb. Set `UPDATE_GOLDEN=1` to rewrite the
//! expected outputs after an intended change.

mod common;

use common::{golden_path, read_golden, run_suite, CASES};

#[test]
fn golden_outputs() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut failures = Vec::new();
    for (name, got) in run_suite() {
        if update {
            std::fs::write(golden_path(name), &got).unwrap();
            continue;
        }
        match read_golden(name) {
            Some(want) if want == got => {}
            Some(want) => failures.push(format!("{}:\n  want {}\n  got  {}", name, want.trim(), got.trim())),
            None => failures.push(format!("{}: no golden file", name)),
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn every_verb_has_a_case() {
    let verbs: &[(&str, &[&str])] = &[
        ("ring", &["eval", "radical-member", "groebner", "snf"]),
        ("lattice", &["entails", "meet", "join", "points", "dual", "birkhoff", "dot"]),
        ("zar", &["support", "leq", "meet", "join", "universal", "induced", "point"]),
        (
            "complex",
            &["koszul", "homology", "tensor", "torsion", "invertible", "supph", "invariant", "equiv", "hom", "cech", "localcoh"],
        ),
        ("ttc", &["lattice", "points", "supp-leq", "nilpotent", "compare"]),
        ("scheme", &["glue", "sections", "sheaf-check", "reconstruct", "domain"]),
    ];
    for (group, names) in verbs {
        for v in *names {
            assert!(
                CASES.iter().any(|c| c.args[0] == *group && c.args[1] == *v && !c.name.starts_with("error")),
                "no golden case for {} {}",
                group,
                v
            );
        }
    }
}

#[test]
fn every_golden_file_has_a_case() {
    for entry in std::fs::read_dir(common::crate_dir().join(common::golden_dir())).unwrap() {
        let name = entry.unwrap().file_name().into_string().unwrap();
        let stem = name.trim_end_matches(".out");
        assert!(CASES.iter().any(|c| c.name == stem), "stale golden file {}", name);
    }
}
