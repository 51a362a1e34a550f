//! Command-line front end. `run` is the whole program minus process exit,
//! so tests drive it in-process.

use std::collections::BTreeMap;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use pointfree_core::derived::{
    cech_complex, cellular_equiv, derived_hom_groups, homology, is_f_invertible, is_i_torsion,
    koszul, loc_invariant, local_cohomology, stable_koszul, supph, ChainComplex, ModulePresentation,
};
use pointfree_core::hochster::{double_dual_check, dual_points, DualLattice};
use pointfree_core::lattice::{birkhoff_roundtrip, DLatticePresentation, FiniteLattice, LatticeTerm, PointPoset};
use pointfree_core::ring::{
    groebner_basis, radical_member, smith_normal_form, Matrix, MonomialOrder, RingDescriptor,
    RingElement, RingHom,
};
use pointfree_core::scheme::{
    domain_presheaf_value, domain_restriction, global_sections, glue, reconstruction_check,
    sheaf_condition_check, SchemeSpec,
};
use pointfree_core::ttc::{
    build_lattice, compare_with_ring, koszul_divisor_presentation, morphism_support,
    spectrum_points, supp_leq, TTPresentation,
};
use pointfree_core::zariski::{
    induced_map, integer_points, point_contains, universal_support_map, verify_support_axioms,
    zar_join, zar_leq, zar_meet, zar_support, Open, RadicalIdeal, SupportMap,
};
use pointfree_core::{Error, Result};

/// Environment variable overriding the generator cap of lattice enumeration.
pub const CAP_VAR: &str = "POINTFREE_CAP";

#[derive(Parser)]
#[command(name = "pointfree", version, about = "Point-free spectra, supports and reconstruction")]
struct Cli {
    #[command(subcommand)]
    group: Group,
}

#[derive(Subcommand)]
enum Group {
    /// Ring arithmetic
    Ring {
        #[command(subcommand)]
        cmd: RingCmd,
    },
    /// Finitely presented distributive lattices
    Lattice {
        #[command(subcommand)]
        cmd: LatticeCmd,
    },
    /// Zariski lattice of a ring
    Zar {
        #[command(subcommand)]
        cmd: ZarCmd,
    },
    /// Chain complexes over a PID
    Complex {
        #[command(subcommand)]
        cmd: ComplexCmd,
    },
    /// Tensor-triangulated presentations
    Ttc {
        #[command(subcommand)]
        cmd: TtcCmd,
    },
    /// Glued affine schemes
    Scheme {
        #[command(subcommand)]
        cmd: SchemeCmd,
    },
}

/// The main JSON input, from a file or inline.
#[derive(Args)]
struct Input {
    #[arg(long, conflicts_with = "json")]
    file: Option<String>,
    #[arg(long)]
    json: Option<String>,
}

#[derive(Args)]
struct RingArg {
    /// Ring descriptor JSON, e.g. '{"type":"int"}'
    #[arg(long, default_value = r#"{"type":"int"}"#)]
    ring: String,
}

#[derive(Subcommand)]
enum RingCmd {
    Eval {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
    RadicalMember {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long)]
        gens: String,
    },
    Groebner {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        gens: String,
        #[arg(long, value_enum, default_value = "grevlex")]
        order: Order,
    },
    Snf {
        #[command(flatten)]
        ring: RingArg,
        /// Rows as a JSON array of arrays
        #[arg(long)]
        matrix: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Lex,
    Grevlex,
}

#[derive(Subcommand)]
enum LatticeCmd {
    Entails {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    Meet {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    Join {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    Points {
        #[command(flatten)]
        input: Input,
    },
    Dual {
        #[command(flatten)]
        input: Input,
        /// Also run the double-dual and point-count checks
        #[arg(long)]
        check: bool,
    },
    Birkhoff {
        #[command(flatten)]
        input: Input,
    },
    Dot {
        #[command(flatten)]
        input: Input,
        /// Draw the point poset instead of the lattice
        #[arg(long)]
        points: bool,
    },
}

#[derive(Subcommand)]
enum ZarCmd {
    Support {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
    Leq {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    Meet {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    Join {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Image of an ideal of Z under the prime-indicator support
    Universal {
        /// Primes spanning the Boolean target, e.g. '[2,3,5]'
        #[arg(long)]
        primes: String,
        #[arg(long)]
        gens: String,
    },
    Induced {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        /// Variable images, e.g. '{"x":"y^2"}'
        #[arg(long)]
        phi: String,
        #[arg(long)]
        gens: String,
    },
    Point {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        gens: String,
        /// Test a single prime (0 is the generic point)
        #[arg(long, required_unless_present = "bound", allow_hyphen_values = true)]
        p: Option<String>,
        /// List the points of Spec Z up to this bound
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long)]
        hochster: bool,
    },
}

#[derive(Subcommand)]
enum ComplexCmd {
    Koszul {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        gens: String,
    },
    Homology {
        #[command(flatten)]
        input: Input,
    },
    Tensor {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        other: String,
        /// Direct sum instead of tensor product
        #[arg(long)]
        sum: bool,
    },
    Torsion {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        gens: String,
    },
    Invertible {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
    Supph {
        #[command(flatten)]
        input: Input,
    },
    Invariant {
        #[command(flatten)]
        input: Input,
    },
    Equiv {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        other: String,
    },
    Hom {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        other: String,
    },
    Cech {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        gens: String,
        /// Include the degree-0 column (the model of the torsion part)
        #[arg(long)]
        augmented: bool,
    },
    Localcoh {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        gens: String,
        /// Coefficient module '{"rank":"1","divisors":[]}'; defaults to the ring
        #[arg(long)]
        module: Option<String>,
    },
}

#[derive(Args)]
struct TtcInput {
    #[command(flatten)]
    input: Input,
    /// Use the Koszul presentation on the divisors of n instead of an input
    #[arg(long, conflicts_with_all = ["file", "json"])]
    divisors: Option<u64>,
}

#[derive(Subcommand)]
enum TtcCmd {
    Lattice {
        #[command(flatten)]
        input: TtcInput,
    },
    Points {
        #[command(flatten)]
        input: TtcInput,
    },
    SuppLeq {
        #[command(flatten)]
        input: TtcInput,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    Nilpotent {
        #[command(flatten)]
        input: TtcInput,
        #[arg(long)]
        factors: String,
    },
    Compare {
        #[command(flatten)]
        input: TtcInput,
        #[command(flatten)]
        ring: RingArg,
        /// Object name to generator list, e.g. '{"K2":["2"]}'
        #[arg(long, required_unless_present = "divisors")]
        dict: Option<String>,
    },
}

#[derive(Subcommand)]
enum SchemeCmd {
    Glue {
        #[command(flatten)]
        input: Input,
    },
    Sections {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 4)]
        bound: u32,
    },
    SheafCheck {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 0)]
        piece: usize,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long)]
        cover: String,
        #[arg(long, default_value_t = 4)]
        bound: u32,
    },
    Reconstruct {
        #[command(flatten)]
        input: Input,
    },
    /// Value of R/(I) on D-opens of Z or Z/n
    Domain {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        gens: String,
        /// Restrict to a larger radical
        #[arg(long)]
        to: Option<String>,
    },
}

/// Exit code and standard output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind::*;
            if matches!(e.kind(), DisplayHelp | DisplayVersion | DisplayHelpOnMissingArgumentOrSubcommand) {
                return Outcome { code: 0, stdout: e.to_string() };
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ");
            return failure(2, "usage", first);
        }
    };
    let cap = match std::env::var(CAP_VAR) {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(c) => Some(c),
            Err(_) => return failure(2, "usage", &format!("{} must be a number, got '{}'", CAP_VAR, s)),
        },
        Err(_) => None,
    };
    let ctx = Ctx { cap };
    match ctx.dispatch(cli.group) {
        Ok(Report::Json(v)) => Outcome { code: 0, stdout: format!("{}\n", render(&v)) },
        Ok(Report::Text(s)) => Outcome { code: 0, stdout: s },
        Err(e) => {
            let code = if e.is_capacity() { 3 } else { 2 };
            failure(code, kind(&e), &e.to_string())
        }
    }
}

fn kind(e: &Error) -> &'static str {
    match e {
        Error::Presentation(_) => "presentation",
        Error::Capacity { .. } => "capacity",
        Error::Unsupported(_) => "unsupported",
        Error::RingMismatch(_) => "ring-mismatch",
        Error::Invalid(_) => "invalid",
        Error::Parse(_) => "parse",
        Error::Oracle(_) => "oracle",
        Error::Precondition(_) => "precondition",
    }
}

fn failure(code: i32, kind: &str, message: &str) -> Outcome {
    let v = json!({ "error": { "kind": kind, "message": message } });
    Outcome { code, stdout: format!("{}\n", render(&v)) }
}

/// Canonical JSON text: keys sorted, every number written as a string.
pub fn render(v: &Value) -> String {
    canonical(v).to_string()
}

fn canonical(v: &Value) -> Value {
    match v {
        Value::Number(n) => Value::String(n.to_string()),
        Value::Array(xs) => Value::Array(xs.iter().map(canonical).collect()),
        Value::Object(m) => {
            let mut keys: Vec<&String> = m.keys().collect();
            keys.sort();
            let mut out = Map::new();
            for k in keys {
                out.insert(k.clone(), canonical(&m[k]));
            }
            Value::Object(out)
        }
        other => other.clone(),
    }
}

enum Report {
    Json(Value),
    Text(String),
}

fn result(b: bool) -> Result<Report> {
    Ok(Report::Json(json!({ "result": b })))
}

// ---- argument decoding -----------------------------------------------------

/// Inline JSON, or `@path` to read it from a file.
fn json_arg(s: &str) -> Result<Value> {
    let text = match s.strip_prefix('@') {
        Some(path) => read(path)?,
        None => s.to_string(),
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("bad JSON: {}", e)))
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {}", path, e)))
}

impl Input {
    fn load(&self) -> Result<Value> {
        match (&self.file, &self.json) {
            (Some(p), _) => json_arg(&format!("@{}", p)),
            (None, Some(j)) => json_arg(j),
            (None, None) => Err(Error::Parse("an input is required (--file or --json)".into())),
        }
    }
}

impl RingArg {
    fn get(&self) -> Result<RingDescriptor> {
        RingDescriptor::from_json(&json_arg(&self.ring)?)
    }
}

fn element(r: &RingDescriptor, v: &Value) -> Result<RingElement> {
    match v {
        Value::String(s) => r.parse(s),
        Value::Number(n) => r.parse(&n.to_string()),
        _ => Err(Error::Parse(format!("expected a ring element, got {}", v))),
    }
}

/// An element written plainly (`x^2-1`) or as a JSON string or number.
fn element_arg(r: &RingDescriptor, s: &str) -> Result<RingElement> {
    match serde_json::from_str::<Value>(s) {
        Ok(v @ (Value::String(_) | Value::Number(_))) => element(r, &v),
        _ => r.parse(s),
    }
}

fn elements(r: &RingDescriptor, s: &str) -> Result<Vec<RingElement>> {
    match json_arg(s)? {
        Value::Array(xs) => xs.iter().map(|x| element(r, x)).collect(),
        v => Err(Error::Parse(format!("expected a JSON list of elements, got {}", v))),
    }
}

fn strings(s: &str) -> Result<Vec<String>> {
    match json_arg(s)? {
        Value::Array(xs) => xs
            .iter()
            .map(|x| match x {
                Value::String(s) => Ok(s.clone()),
                Value::Number(n) => Ok(n.to_string()),
                _ => Err(Error::Parse(format!("expected a string, got {}", x))),
            })
            .collect(),
        v => Err(Error::Parse(format!("expected a JSON list, got {}", v))),
    }
}

fn ideal(r: &RingDescriptor, s: &str) -> Result<RadicalIdeal> {
    RadicalIdeal::new(r.clone(), elements(r, s)?)
}

fn term_arg(s: &str) -> Result<LatticeTerm> {
    match serde_json::from_str::<Value>(s) {
        Ok(v @ (Value::String(_) | Value::Object(_))) => LatticeTerm::from_json(&v),
        _ => s.parse(),
    }
}

fn complex_arg(s: &str) -> Result<ChainComplex> {
    ChainComplex::from_json(&json_arg(s)?)
}

fn term_json(t: &LatticeTerm) -> Value {
    json!({ "term": t.to_json(), "text": t.to_string() })
}

fn modules_json(ms: &BTreeMap<i64, ModulePresentation>) -> Value {
    let m: Map<String, Value> = ms.iter().map(|(n, m)| (n.to_string(), m.to_json())).collect();
    Value::Object(m)
}

// ---- dispatch ----------------------------------------------------------------

struct Ctx {
    cap: Option<usize>,
}

impl Ctx {
    fn lattice(&self, input: &Input) -> Result<DLatticePresentation> {
        let l = DualLattice::from_json(&input.load()?)?.presentation()?;
        Ok(match self.cap {
            Some(c) => l.with_cap(c),
            None => l,
        })
    }

    fn dispatch(&self, g: Group) -> Result<Report> {
        match g {
            Group::Ring { cmd } => ring_cmd(cmd),
            Group::Lattice { cmd } => self.lattice_cmd(cmd),
            Group::Zar { cmd } => zar_cmd(cmd),
            Group::Complex { cmd } => complex_cmd(cmd),
            Group::Ttc { cmd } => ttc_cmd(cmd),
            Group::Scheme { cmd } => scheme_cmd(cmd),
        }
    }

    fn lattice_cmd(&self, cmd: LatticeCmd) -> Result<Report> {
        match cmd {
            LatticeCmd::Entails { input, lhs, rhs } => {
                result(self.lattice(&input)?.entails(&term_arg(&lhs)?, &term_arg(&rhs)?)?)
            }
            LatticeCmd::Meet { input, lhs, rhs } => {
                let t = self.lattice(&input)?.meet(&term_arg(&lhs)?, &term_arg(&rhs)?)?;
                Ok(Report::Json(json!({ "result": term_json(&t) })))
            }
            LatticeCmd::Join { input, lhs, rhs } => {
                let t = self.lattice(&input)?.join(&term_arg(&lhs)?, &term_arg(&rhs)?)?;
                Ok(Report::Json(json!({ "result": term_json(&t) })))
            }
            LatticeCmd::Points { input } => {
                let pts = self.lattice(&input)?.points()?;
                let list: Vec<Vec<&str>> = pts.iter().map(|p| p.true_set().into_iter().collect()).collect();
                Ok(Report::Json(json!({ "count": pts.len(), "points": list })))
            }
            LatticeCmd::Dual { input, check } => {
                let v = input.load()?;
                let d = DualLattice::from_json(&v)?.dual();
                let mut out = d.to_json()?;
                if check {
                    let l = self.lattice(&input)?;
                    let pairs = dual_points(&l)?;
                    out["checks"] = json!({
                        "double_dual": double_dual_check(&l)?,
                        "points": pairs.len(),
                    });
                }
                Ok(Report::Json(out))
            }
            LatticeCmd::Birkhoff { input } => {
                let l = self.lattice(&input)?;
                let ok = birkhoff_roundtrip(&l)?;
                let elements = FiniteLattice::enumerate(&l)?.len();
                let points = PointPoset::new(&l)?.len();
                Ok(Report::Json(json!({ "result": ok, "elements": elements, "points": points })))
            }
            LatticeCmd::Dot { input, points } => {
                let l = self.lattice(&input)?;
                let dot = if points {
                    PointPoset::new(&l)?.to_dot()
                } else {
                    FiniteLattice::enumerate(&l)?.to_dot()
                };
                Ok(Report::Text(dot))
            }
        }
    }
}

fn ring_cmd(cmd: RingCmd) -> Result<Report> {
    match cmd {
        RingCmd::Eval { ring, expr } => {
            let r = ring.get()?;
            let e = r.parse(&expr)?;
            Ok(Report::Json(json!({ "ring": r.to_json(), "value": r.format(&e) })))
        }
        RingCmd::RadicalMember { ring, f, gens } => {
            let r = ring.get()?;
            result(radical_member(&r, &element_arg(&r, &f)?, &elements(&r, &gens)?)?)
        }
        RingCmd::Groebner { ring, gens, order } => {
            let r = ring.get()?;
            let field = r
                .poly_field()
                .ok_or_else(|| Error::Unsupported(format!("Gröbner bases need a polynomial ring, not {}", r)))?
                .clone();
            let polys = elements(&r, &gens)?
                .into_iter()
                .map(|e| match e {
                    RingElement::Poly(p) => Ok(p),
                    _ => Err(Error::RingMismatch("expected a polynomial".into())),
                })
                .collect::<Result<Vec<_>>>()?;
            let (order, name) = match order {
                Order::Lex => (MonomialOrder::Lex, "lex"),
                Order::Grevlex => (MonomialOrder::Grevlex, "grevlex"),
            };
            let basis: Vec<String> = groebner_basis(&polys, order, &field)
                .into_iter()
                .map(|p| r.format(&RingElement::Poly(p)))
                .collect();
            Ok(Report::Json(json!({ "order": name, "basis": basis })))
        }
        RingCmd::Snf { ring, matrix } => {
            let r = ring.get()?;
            let rows = match json_arg(&matrix)? {
                Value::Array(rows) => rows
                    .iter()
                    .map(|row| match row {
                        Value::Array(xs) => xs.iter().map(|x| element(&r, x)).collect::<Result<Vec<_>>>(),
                        _ => Err(Error::Parse("matrix rows must be arrays".into())),
                    })
                    .collect::<Result<Vec<_>>>()?,
                _ => return Err(Error::Parse("matrix must be an array of rows".into())),
            };
            let cols = rows.first().map_or(0, Vec::len);
            let m = Matrix::from_rows(rows.len(), cols, rows)?;
            let s = smith_normal_form(&r, &m)?;
            let show = |m: &Matrix| -> Vec<Vec<String>> {
                m.to_rows().iter().map(|row| row.iter().map(|e| r.format(e)).collect()).collect()
            };
            let factors: Vec<String> = s.invariant_factors().iter().map(|e| r.format(e)).collect();
            Ok(Report::Json(json!({
                "rank": s.rank,
                "invariant_factors": factors,
                "u": show(&s.u),
                "d": show(&s.d),
                "v": show(&s.v),
            })))
        }
    }
}

fn zar_cmd(cmd: ZarCmd) -> Result<Report> {
    match cmd {
        ZarCmd::Support { ring, f } => {
            let r = ring.get()?;
            Ok(Report::Json(json!({ "result": zar_support(&r, &element_arg(&r, &f)?)?.to_json() })))
        }
        ZarCmd::Leq { ring, lhs, rhs } => {
            let r = ring.get()?;
            result(zar_leq(&ideal(&r, &lhs)?, &ideal(&r, &rhs)?)?)
        }
        ZarCmd::Meet { ring, lhs, rhs } => {
            let r = ring.get()?;
            let i = zar_meet(&ideal(&r, &lhs)?, &ideal(&r, &rhs)?)?;
            Ok(Report::Json(json!({ "result": i.to_json() })))
        }
        ZarCmd::Join { ring, lhs, rhs } => {
            let r = ring.get()?;
            let i = zar_join(&ideal(&r, &lhs)?, &ideal(&r, &rhs)?)?;
            Ok(Report::Json(json!({ "result": i.to_json() })))
        }
        ZarCmd::Universal { primes, gens } => {
            let ps = strings(&primes)?
                .iter()
                .map(|p| p.parse::<i64>().map_err(|_| Error::Parse(format!("bad prime '{}'", p))))
                .collect::<Result<Vec<_>>>()?;
            let d = SupportMap::prime_indicator(&ps)?;
            let z = RingDescriptor::Integers;
            let i = ideal(&z, &gens)?;
            let t = d.target.normalize(&universal_support_map(&d, &i)?)?;
            let sample: Vec<RingElement> = (-6..=30).map(|n| z.from_int(n)).collect();
            let axioms = verify_support_axioms(&d, &sample)?;
            Ok(Report::Json(json!({
                "result": term_json(&t),
                "axioms": { "pass": axioms.pass, "checked": axioms.checked },
            })))
        }
        ZarCmd::Induced { source, target, phi, gens } => {
            let src = RingDescriptor::from_json(&json_arg(&source)?)?;
            let tgt = RingDescriptor::from_json(&json_arg(&target)?)?;
            let images: BTreeMap<String, String> = match json_arg(&phi)? {
                Value::Object(m) => m
                    .into_iter()
                    .map(|(k, v)| match v {
                        Value::String(s) => Ok((k, s)),
                        Value::Number(n) => Ok((k, n.to_string())),
                        other => Err(Error::Parse(format!("bad image {}", other))),
                    })
                    .collect::<Result<_>>()?,
                _ => return Err(Error::Parse("--phi must be a JSON object".into())),
            };
            let hom = RingHom::from_strings(src.clone(), tgt, &images)?;
            let i = induced_map(&hom, &ideal(&src, &gens)?)?;
            Ok(Report::Json(json!({ "result": i.to_json() })))
        }
        ZarCmd::Point { ring, gens, p, bound, hochster } => {
            let r = ring.get()?;
            let i = ideal(&r, &gens)?;
            let u = if hochster { Open::Hochster(i) } else { Open::Zariski(i) };
            match (p, bound) {
                (Some(p), _) => result(point_contains(&element_arg(&r, &p)?, &u)?),
                (None, Some(b)) => {
                    let pts: Vec<String> = integer_points(&u, b)?.iter().map(|p| p.to_string()).collect();
                    Ok(Report::Json(json!({ "kind": u.kind(), "points": pts })))
                }
                (None, None) => Err(Error::Parse("--p or --bound is required".into())),
            }
        }
    }
}

fn complex_cmd(cmd: ComplexCmd) -> Result<Report> {
    let load = |input: &Input| ChainComplex::from_json(&input.load()?);
    match cmd {
        ComplexCmd::Koszul { ring, gens } => {
            let r = ring.get()?;
            Ok(Report::Json(koszul(&r, &elements(&r, &gens)?)?.to_json()))
        }
        ComplexCmd::Homology { input } => Ok(Report::Json(modules_json(&homology(&load(&input)?)?))),
        ComplexCmd::Tensor { input, other, sum } => {
            let (c, d) = (load(&input)?, complex_arg(&other)?);
            let out = if sum { c.direct_sum(&d)? } else { c.tensor(&d)? };
            Ok(Report::Json(out.to_json()))
        }
        ComplexCmd::Torsion { input, gens } => {
            let c = load(&input)?;
            let i = ideal(c.ring(), &gens)?;
            result(is_i_torsion(&c, &i)?)
        }
        ComplexCmd::Invertible { input, f } => {
            let c = load(&input)?;
            let f = element_arg(c.ring(), &f)?;
            result(is_f_invertible(&c, &f)?)
        }
        ComplexCmd::Supph { input } => {
            Ok(Report::Json(json!({ "result": supph(&load(&input)?)?.to_json() })))
        }
        ComplexCmd::Invariant { input } => {
            let u = loc_invariant(&load(&input)?)?;
            Ok(Report::Json(json!({ "kind": u.kind(), "ideal": u.ideal().to_json() })))
        }
        ComplexCmd::Equiv { input, other } => result(cellular_equiv(&load(&input)?, &complex_arg(&other)?)?),
        ComplexCmd::Hom { input, other } => {
            let groups = derived_hom_groups(&load(&input)?, &complex_arg(&other)?)?;
            let vanishes = groups.values().all(ModulePresentation::is_zero);
            Ok(Report::Json(json!({ "groups": modules_json(&groups), "vanishes": vanishes })))
        }
        ComplexCmd::Cech { ring, gens, augmented } => {
            let r = ring.get()?;
            let fs = elements(&r, &gens)?;
            let model = if augmented { stable_koszul(&r, &fs)? } else { cech_complex(&r, &fs)? };
            model.check_dd()?;
            let h = model.cohomology()?;
            let mut out = model.to_json()?;
            out["cohomology"] = h.to_json();
            out["text"] = Value::from(h.to_string());
            out["columns_invertible"] = Value::from(model.columns_invertible()?);
            if augmented {
                out["power_torsion"] = fs
                    .iter()
                    .map(|f| h.is_power_torsion(f))
                    .collect::<Result<Vec<_>>>()?
                    .into_iter()
                    .all(|b| b)
                    .into();
            }
            Ok(Report::Json(out))
        }
        ComplexCmd::Localcoh { ring, gens, module } => {
            let r = ring.get()?;
            let i = ideal(&r, &gens)?;
            let m = match module {
                Some(m) => ModulePresentation::from_json(&r, &json_arg(&m)?)?,
                None => ModulePresentation::free(&r, 1),
            };
            let h = local_cohomology(&i, &m)?;
            Ok(Report::Json(json!({ "cohomology": h.to_json(), "text": h.to_string() })))
        }
    }
}

impl TtcInput {
    fn load(&self) -> Result<(TTPresentation, Option<BTreeMap<String, RadicalIdeal>>)> {
        match self.divisors {
            Some(n) => {
                let (p, d) = koszul_divisor_presentation(n)?;
                Ok((p, Some(d)))
            }
            None => Ok((TTPresentation::from_json(&self.input.load()?)?, None)),
        }
    }
}

fn ttc_cmd(cmd: TtcCmd) -> Result<Report> {
    match cmd {
        TtcCmd::Lattice { input } => {
            let (p, _) = input.load()?;
            Ok(Report::Json(build_lattice(&p)?.to_json()?))
        }
        TtcCmd::Points { input } => {
            let (p, _) = input.load()?;
            let pts: Vec<Value> = spectrum_points(&p)?.iter().map(|s| s.to_json()).collect();
            Ok(Report::Json(json!({ "count": pts.len(), "points": pts })))
        }
        TtcCmd::SuppLeq { input, lhs, rhs } => {
            let (p, _) = input.load()?;
            result(supp_leq(&p, &lhs, &rhs)?)
        }
        TtcCmd::Nilpotent { input, factors } => {
            let (p, _) = input.load()?;
            let fs = strings(&factors)?;
            let refs: Vec<&str> = fs.iter().map(String::as_str).collect();
            Ok(Report::Json(morphism_support(&p, &refs)?.to_json()))
        }
        TtcCmd::Compare { input, ring, dict } => {
            let (p, built) = input.load()?;
            let (r, d) = match (built, dict) {
                (Some(d), _) => (RingDescriptor::Integers, d),
                (None, Some(s)) => {
                    let r = ring.get()?;
                    let d = match json_arg(&s)? {
                        Value::Object(m) => m
                            .iter()
                            .map(|(k, v)| Ok((k.clone(), ideal(&r, &v.to_string())?)))
                            .collect::<Result<_>>()?,
                        _ => return Err(Error::Parse("--dict must be a JSON object".into())),
                    };
                    (r, d)
                }
                (None, None) => return Err(Error::Parse("--dict is required".into())),
            };
            Ok(Report::Json(compare_with_ring(&p, &r, &d)?.to_json()))
        }
    }
}

fn scheme_cmd(cmd: SchemeCmd) -> Result<Report> {
    let load = |input: &Input| SchemeSpec::from_json(&input.load()?);
    match cmd {
        SchemeCmd::Glue { input } => {
            let x = glue(&load(&input)?)?;
            let overlaps: Vec<Value> = x
                .gluings()
                .iter()
                .map(|g| {
                    json!({ "i": g.i, "j": g.j,
                            "overlap_i": g.overlap_i().to_string(),
                            "overlap_j": g.overlap_j().to_string() })
                })
                .collect();
            let pieces: Vec<String> = x.pieces().iter().map(|r| r.to_string()).collect();
            Ok(Report::Json(json!({ "valid": true, "pieces": pieces, "overlaps": overlaps })))
        }
        SchemeCmd::Sections { input, bound } => {
            Ok(Report::Json(global_sections(&glue(&load(&input)?)?, bound)?.to_json()))
        }
        SchemeCmd::SheafCheck { input, piece, g, cover, bound } => {
            let x = glue(&load(&input)?)?;
            let r = x
                .pieces()
                .get(piece)
                .ok_or_else(|| Error::Precondition(format!("no piece {}", piece)))?
                .clone();
            let g = element_arg(&r, &g)?;
            let cover = elements(&r, &cover)?;
            let c = sheaf_condition_check(&x, piece, &g, &cover, bound)?;
            Ok(Report::Json(json!({ "pass": c.pass, "tested": c.tested })))
        }
        SchemeCmd::Reconstruct { input } => Ok(Report::Json(reconstruction_check(&load(&input)?)?.to_json())),
        SchemeCmd::Domain { ring, gens, to } => {
            let r = ring.get()?;
            let i = ideal(&r, &gens)?;
            match to {
                None => {
                    let v = domain_presheaf_value(&i)?;
                    Ok(Report::Json(json!({ "value": v.describe(), "modulus": v.modulus.to_string() })))
                }
                Some(j) => {
                    let (src, tgt) = domain_restriction(&i, &ideal(&r, &j)?)?;
                    Ok(Report::Json(json!({
                        "source": src.describe(),
                        "target": tgt.describe(),
                        "surjective": src.maps_onto(&tgt),
                    })))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_sorts_keys_and_quotes_numbers() {
        let v = json!({"b": 1, "a": [2, {"d": -3, "c": true}], "e": null});
        assert_eq!(render(&v), r#"{"a":["2",{"c":true,"d":"-3"}],"b":"1","e":null}"#);
    }

    #[test]
    fn element_arguments() {
        let z = RingDescriptor::Integers;
        assert_eq!(element_arg(&z, "-12").unwrap(), z.from_int(-12));
        assert_eq!(element_arg(&z, "\"7\"").unwrap(), z.from_int(7));
        assert_eq!(elements(&z, "[4, \"6\"]").unwrap(), vec![z.from_int(4), z.from_int(6)]);
        assert!(elements(&z, "4").is_err());
    }

    #[test]
    fn term_arguments() {
        let t = term_arg("a&b | c").unwrap();
        assert_eq!(term_arg(&t.to_json().to_string()).unwrap(), t);
        assert_eq!(term_arg("\"a&b | c\"").unwrap(), t);
    }
}
