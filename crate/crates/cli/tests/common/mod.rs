#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub env: Option<(&'static str, &'static str)>,
}

const fn case(name: &'static str, args: &'static [&'static str]) -> Case {
    Case { name, args, env: None }
}

const QX: &str = r#"{"type":"poly","base":"Q","vars":["x"]}"#;
const QXY: &str = r#"{"type":"poly","base":"Q","vars":["x","y"]}"#;

pub const CASES: &[Case] = &[
    case("ring_eval", &["ring", "eval", "--ring", QX, "--expr", "(x+1)^3 - x^3"]),
    case("ring_eval_local", &["ring", "eval", "--ring", r#"{"type":"localization","base":{"type":"int"},"f":"6"}"#, "--expr", "1/2 + 1/3"]),
    case("ring_radical_member", &["ring", "radical-member", "--f", "12", "--gens", "[18]"]),
    case("ring_radical_member_no", &["ring", "radical-member", "--f", "15", "--gens", "[4]"]),
    case("ring_groebner", &["ring", "groebner", "--ring", QXY, "--gens", r#"["x^2 - y", "x*y - 1"]"#, "--order", "lex"]),
    case("ring_snf", &["ring", "snf", "--matrix", "[[2,4,4],[-6,6,12],[10,-4,-16]]"]),
    case("lattice_entails", &["lattice", "entails", "--file", "tests/data/abc.json", "--lhs", "a&b", "--rhs", "c"]),
    case("lattice_entails_no", &["lattice", "entails", "--file", "tests/data/free2.json", "--lhs", "a", "--rhs", "b"]),
    case("lattice_meet", &["lattice", "meet", "--file", "tests/data/chain.json", "--lhs", "a", "--rhs", "b"]),
    case("lattice_join", &["lattice", "join", "--file", "tests/data/abc.json", "--lhs", "a", "--rhs", "c"]),
    case("lattice_points", &["lattice", "points", "--file", "tests/data/free2.json"]),
    case("lattice_dual", &["lattice", "dual", "--file", "tests/data/abc.json", "--check"]),
    case("lattice_birkhoff", &["lattice", "birkhoff", "--file", "tests/data/abc.json"]),
    case("lattice_dot", &["lattice", "dot", "--file", "tests/data/one.json"]),
    case("lattice_dot_chain", &["lattice", "dot", "--file", "tests/data/chain.json"]),
    case("lattice_dot_free", &["lattice", "dot", "--file", "tests/data/free2.json"]),
    case("lattice_dot_points", &["lattice", "dot", "--file", "tests/data/abc.json", "--points"]),
    case("zar_support", &["zar", "support", "--f", "-12"]),
    case("zar_leq", &["zar", "leq", "--ring", r#"{"type":"int"}"#, "--lhs", "[4]", "--rhs", "[2]"]),
    case("zar_leq_qx", &["zar", "leq", "--ring", QX, "--lhs", r#"["x^2-1"]"#, "--rhs", r#"["x-1"]"#]),
    case("zar_meet", &["zar", "meet", "--lhs", "[6,10]", "--rhs", "[15]"]),
    case("zar_join", &["zar", "join", "--lhs", "[4]", "--rhs", "[9]"]),
    case("zar_universal", &["zar", "universal", "--primes", "[2,3,5]", "--gens", "[6,10]"]),
    case("zar_induced", &["zar", "induced", "--source", QX, "--target", QXY, "--phi", r#"{"x":"x*y"}"#, "--gens", r#"["x"]"#]),
    case("zar_point", &["zar", "point", "--gens", "[6]", "--p", "5"]),
    case("zar_point_list", &["zar", "point", "--gens", "[30]", "--bound", "20", "--hochster"]),
    case("complex_koszul", &["complex", "koszul", "--gens", "[4,6]"]),
    case("complex_homology", &["complex", "homology", "--file", "tests/data/k6.json"]),
    case("complex_tensor", &["complex", "tensor", "--file", "tests/data/k6.json", "--other", "@tests/data/k4.json"]),
    case("complex_sum", &["complex", "tensor", "--file", "tests/data/k6.json", "--other", "@tests/data/k4.json", "--sum"]),
    case("complex_torsion", &["complex", "torsion", "--file", "tests/data/k6.json", "--gens", "[3]"]),
    case("complex_invertible", &["complex", "invertible", "--file", "tests/data/z6.json", "--f", "2"]),
    case("complex_supph", &["complex", "supph", "--file", "tests/data/k6.json"]),
    case("complex_invariant", &["complex", "invariant", "--file", "tests/data/k6.json"]),
    case("complex_equiv", &["complex", "equiv", "--file", "tests/data/k4.json", "--other", r#"{"differentials":{"1":[["2"]]},"hi":"1","lo":"0","ring":{"type":"int"}}"#]),
    case("complex_hom", &["complex", "hom", "--file", "tests/data/k6.json", "--other", "@tests/data/z6.json"]),
    case("complex_cech", &["complex", "cech", "--gens", "[6,10]"]),
    case("complex_cech_gamma", &["complex", "cech", "--gens", "[2,3]", "--augmented"]),
    case("complex_localcoh", &["complex", "localcoh", "--gens", "[4]"]),
    case("complex_localcoh_torsion", &["complex", "localcoh", "--gens", "[2]", "--module", r#"{"rank":"1","divisors":["12"]}"#]),
    case("ttc_lattice", &["ttc", "lattice", "--file", "tests/data/uvw.json"]),
    case("ttc_points", &["ttc", "points", "--file", "tests/data/uvw.json"]),
    case("ttc_supp_leq", &["ttc", "supp-leq", "--file", "tests/data/uvw.json", "--lhs", "u", "--rhs", "w"]),
    case("ttc_nilpotent", &["ttc", "nilpotent", "--file", "tests/data/uvw.json", "--factors", r#"["u","v"]"#]),
    case("ttc_compare", &["ttc", "compare", "--file", "tests/data/uvw.json", "--dict", r#"{"u":["2"],"v":["3"],"w":["6"]}"#]),
    case("ttc_compare_divisors", &["ttc", "compare", "--divisors", "30"]),
    case("scheme_glue", &["scheme", "glue", "--file", "tests/data/p1.json"]),
    case("scheme_sections", &["scheme", "sections", "--file", "tests/data/p1.json", "--bound", "3"]),
    case("scheme_sections_z", &["scheme", "sections", "--file", "tests/data/specz.json"]),
    case("scheme_sheaf_check", &["scheme", "sheaf-check", "--file", "tests/data/specz.json", "--g", "1", "--cover", "[2,3]"]),
    case("scheme_reconstruct", &["scheme", "reconstruct", "--file", "tests/data/p1.json"]),
    case("scheme_reconstruct_bad", &["scheme", "reconstruct", "--file", "tests/data/p1_bad.json"]),
    case("scheme_domain", &["scheme", "domain", "--gens", "[12,18]"]),
    case("scheme_domain_restrict", &["scheme", "domain", "--gens", "[12]", "--to", "[2]"]),
    case("error_parse", &["zar", "leq", "--lhs", "[x]", "--rhs", "[2]"]),
    case("error_precondition", &["scheme", "sheaf-check", "--file", "tests/data/specz.json", "--g", "6", "--cover", "[2]"]),
    case("error_unknown_flag", &["zar", "leq", "--lhs", "[4]", "--rhs", "[2]", "--bogus", "1"]),
    case("error_glue", &["scheme", "glue", "--file", "tests/data/p1_bad.json"]),
    Case {
        name: "error_capacity",
        args: &["lattice", "points", "--file", "tests/data/abc.json"],
        env: Some(("POINTFREE_CAP", "2")),
    },
];

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    crate_dir().join("tests/golden").join(format!("{}.out", name))
}

/// Exit code line followed by standard output, as stored in golden files.
pub fn run_case(c: &Case) -> String {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_pointfree"));
    cmd.args(c.args).current_dir(crate_dir()).env_remove("POINTFREE_CAP");
    if let Some((k, v)) = c.env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("failed to start pointfree");
    format!("exit {}\n{}", out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout))
}

pub fn run_suite() -> Vec<(&'static str, String)> {
    CASES.iter().map(|c| (c.name, run_case(c))).collect()
}

pub fn read_golden(name: &str) -> Option<String> {
    std::fs::read_to_string(golden_path(name)).ok()
}

pub fn golden_dir() -> &'static Path {
    Path::new("tests/golden")
}
