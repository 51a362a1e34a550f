//! Lattices of supports of tensor-triangulated presentations.
//!
//! Objects are symbols; triangles, tensor and sum identifications and
//! retracts are declared, never inferred. Each object `a` contributes a
//! generator `supp(a)` and each declaration an inequality between supports,
//! so points of the resulting lattice are the prime thick tensor ideals
//! `{a : supp(a) = 0}`.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use crate::derived::{koszul, supph, ChainComplex};
use crate::error::{Error, Result};
use crate::lattice::{DLatticePresentation, LatticePoint, LatticeTerm};
use crate::ring::RingDescriptor;
use crate::zariski::{zar_leq, RadicalIdeal};

pub const UNIT: &str = "one";
pub const ZERO: &str = "zero";

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TTPresentation {
    pub objects: Vec<String>,
    /// `(a, b, c)`: a triangle `a → b → c → Σa`.
    pub triangles: Vec<[String; 3]>,
    /// `(a, b, c)`: `a ⊗ b ≐ c`.
    pub tensor: Vec<[String; 3]>,
    /// `(a, b, c)`: `a ⊕ b ≐ c`.
    pub sum: Vec<[String; 3]>,
    /// `(a, b)`: `a` is a summand of `b`.
    pub retracts: Vec<[String; 2]>,
}

pub fn supp_name(a: &str) -> String {
    format!("supp({})", a)
}

fn supp(a: &str) -> LatticeTerm {
    LatticeTerm::gen(&supp_name(a))
}

impl TTPresentation {
    /// A presentation on the given objects; the unit and zero are added if absent.
    pub fn new<S: AsRef<str>>(objects: &[S]) -> Self {
        let mut p = TTPresentation::default();
        for name in [UNIT, ZERO].into_iter().chain(objects.iter().map(AsRef::as_ref)) {
            if !p.objects.iter().any(|o| o == name) {
                p.objects.push(name.to_string());
            }
        }
        p
    }

    fn owned<const N: usize>(xs: [&str; N]) -> [String; N] {
        xs.map(str::to_string)
    }

    pub fn triangle(mut self, a: &str, b: &str, c: &str) -> Self {
        self.triangles.push(Self::owned([a, b, c]));
        self
    }

    pub fn tensor(mut self, a: &str, b: &str, c: &str) -> Self {
        self.tensor.push(Self::owned([a, b, c]));
        self
    }

    pub fn sum(mut self, a: &str, b: &str, c: &str) -> Self {
        self.sum.push(Self::owned([a, b, c]));
        self
    }

    pub fn retract(mut self, a: &str, b: &str) -> Self {
        self.retracts.push(Self::owned([a, b]));
        self
    }

    pub fn check(&self) -> Result<()> {
        let known: BTreeSet<&str> = self.objects.iter().map(String::as_str).collect();
        if known.len() != self.objects.len() {
            return Err(Error::Presentation("duplicate object symbol".into()));
        }
        for s in [UNIT, ZERO] {
            if !known.contains(s) {
                return Err(Error::Presentation(format!("missing object {}", s)));
            }
        }
        let used = self
            .triangles
            .iter()
            .chain(&self.tensor)
            .chain(&self.sum)
            .flat_map(|t| t.iter())
            .chain(self.retracts.iter().flat_map(|t| t.iter()));
        for s in used {
            if !known.contains(s.as_str()) {
                return Err(Error::Presentation(format!("undeclared object {}", s)));
            }
        }
        Ok(())
    }

    fn require(&self, a: &str) -> Result<()> {
        if self.objects.iter().any(|o| o == a) {
            Ok(())
        } else {
            Err(Error::Presentation(format!("undeclared object {}", a)))
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "objects": self.objects,
            "triangles": self.triangles,
            "tensor": self.tensor,
            "sum": self.sum,
            "retracts": self.retracts,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let strings = |x: &Value| -> Result<Vec<String>> {
            x.as_array()
                .ok_or_else(|| Error::Parse("expected an array of strings".into()))?
                .iter()
                .map(|s| {
                    s.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| Error::Parse("expected a string".into()))
                })
                .collect()
        };
        fn tuples<const N: usize>(
            v: &Value,
            key: &str,
            strings: &dyn Fn(&Value) -> Result<Vec<String>>,
        ) -> Result<Vec<[String; N]>> {
            let Some(xs) = v.get(key) else { return Ok(vec![]) };
            xs.as_array()
                .ok_or_else(|| Error::Parse(format!("{} must be an array", key)))?
                .iter()
                .map(|t| {
                    strings(t)?
                        .try_into()
                        .map_err(|_| Error::Parse(format!("{} entries have {} symbols", key, N)))
                })
                .collect()
        }
        let objects = strings(
            v.get("objects").ok_or_else(|| Error::Parse("missing objects".into()))?,
        )?;
        let mut p = TTPresentation::new(&objects);
        p.triangles = tuples(v, "triangles", &strings)?;
        p.tensor = tuples(v, "tensor", &strings)?;
        p.sum = tuples(v, "sum", &strings)?;
        p.retracts = tuples(v, "retracts", &strings)?;
        p.check()?;
        Ok(p)
    }
}

/// The lattice on generators `supp(a)` cut out by the declared relations.
pub fn build_lattice(p: &TTPresentation) -> Result<DLatticePresentation> {
    p.check()?;
    let mut rels = vec![
        (supp(ZERO), LatticeTerm::bottom()),
        (LatticeTerm::top(), supp(UNIT)),
    ];
    let mut equal = |x: LatticeTerm, y: LatticeTerm| {
        rels.push((x.clone(), y.clone()));
        rels.push((y, x));
    };
    for [a, b, c] in &p.sum {
        equal(supp(c), supp(a).or(&supp(b)));
    }
    for [a, b, c] in &p.tensor {
        equal(supp(c), supp(a).and(&supp(b)));
    }
    for [a, b] in &p.retracts {
        rels.push((supp(a), supp(b)));
    }
    // a triangle and its rotations bound each vertex by the other two
    for [a, b, c] in &p.triangles {
        for (m, x, y) in [(b, a, c), (c, b, a), (a, c, b)] {
            rels.push((supp(m), supp(x).or(&supp(y))));
        }
    }
    let gens = p.objects.iter().map(|o| supp_name(o)).collect();
    DLatticePresentation::new(gens, rels)
}

pub fn supp_leq(p: &TTPresentation, a: &str, b: &str) -> Result<bool> {
    p.require(a)?;
    p.require(b)?;
    build_lattice(p)?.entails(&supp(a), &supp(b))
}

/// A point of the support lattice, read as a prime thick tensor ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumPoint {
    pub point: LatticePoint,
    /// Objects whose support misses the point; also the `U(a)` containing it.
    pub prime: Vec<String>,
}

impl SpectrumPoint {
    pub fn in_open(&self, a: &str) -> bool {
        self.prime.iter().any(|o| o == a)
    }

    pub fn to_json(&self) -> Value {
        let val: BTreeMap<&str, &str> = self
            .point
            .valuation
            .iter()
            .map(|(k, &v)| (k.as_str(), if v { "1" } else { "0" }))
            .collect();
        json!({"valuation": val, "prime": self.prime})
    }
}

pub fn spectrum_points(p: &TTPresentation) -> Result<Vec<SpectrumPoint>> {
    let l = build_lattice(p)?;
    Ok(l.points()?
        .into_iter()
        .map(|point| {
            let prime = p
                .objects
                .iter()
                .filter(|o| !point.valuation[&supp_name(o)])
                .cloned()
                .collect();
            SpectrumPoint { point, prime }
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismSupport {
    pub support: LatticeTerm,
    pub nilpotent: bool,
    /// A minimal sublist of factors whose supports already meet to bottom.
    pub witness: Vec<String>,
}

impl MorphismSupport {
    pub fn to_json(&self) -> Value {
        json!({
            "support": self.support.to_string(),
            "verdict": if self.nilpotent { "tensor-nilpotent" } else { "not-nilpotent" },
            "witness": self.witness,
        })
    }
}

/// Support of a morphism known to factor through each listed object: the
/// meet of their supports, an upper bound for the true support.
pub fn morphism_support(p: &TTPresentation, factors: &[&str]) -> Result<MorphismSupport> {
    for f in factors {
        p.require(f)?;
    }
    let l = build_lattice(p)?;
    let meet = |xs: &[&str]| LatticeTerm::and_all(xs.iter().map(|f| supp(f)).collect::<Vec<_>>().iter());
    let mut support = l.normalize(&meet(factors))?;
    let nilpotent = l.entails(&support, &LatticeTerm::bottom())?;
    if nilpotent {
        support = LatticeTerm::bottom();
    }
    let mut witness: Vec<&str> = Vec::new();
    if nilpotent {
        witness = factors.to_vec();
        let mut i = 0;
        while i < witness.len() {
            let mut fewer = witness.clone();
            fewer.remove(i);
            if l.entails(&meet(&fewer), &LatticeTerm::bottom())? {
                witness = fewer;
            } else {
                i += 1;
            }
        }
    }
    Ok(MorphismSupport {
        support,
        nilpotent,
        witness: witness.into_iter().map(str::to_string).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub lhs: String,
    pub rhs: String,
    pub lattice: bool,
    pub ring: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompareReport {
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl CompareReport {
    pub fn consistent(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let ms: Vec<Value> = self
            .mismatches
            .iter()
            .map(|m| json!({"lhs": m.lhs, "rhs": m.rhs, "lattice": m.lattice, "ring": m.ring}))
            .collect();
        json!({"consistent": self.consistent(), "checked": self.checked.to_string(), "mismatches": ms})
    }
}

/// Checks `supp(a) ≤ supp(b)` against `√J_b ⊆ √J_a` for every pair of
/// objects in the dictionary.
pub fn compare_with_ring(
    p: &TTPresentation,
    ring: &RingDescriptor,
    dictionary: &BTreeMap<String, RadicalIdeal>,
) -> Result<CompareReport> {
    let l = build_lattice(p)?;
    for (a, i) in dictionary {
        p.require(a)?;
        if i.ring != *ring {
            return Err(Error::RingMismatch(format!("{} is over {}, not {}", a, i.ring, ring)));
        }
    }
    let mut report = CompareReport { checked: 0, mismatches: vec![] };
    for (a, ia) in dictionary {
        for (b, ib) in dictionary {
            let lattice = l.entails(&supp(a), &supp(b))?;
            let ring = zar_leq(ib, ia)?;
            report.checked += 1;
            if lattice != ring {
                report.mismatches.push(Mismatch { lhs: a.clone(), rhs: b.clone(), lattice, ring });
            }
        }
    }
    Ok(report)
}

/// Koszul objects `K(d)` for the divisors `d > 1` of `n` over `ℤ`, with the
/// sum and tensor identifications read off from the supports of the actual
/// complexes `K(d) ⊕ K(e)` and `K(d) ⊗ K(e)`. The dictionary sends each
/// object to its homological support.
pub fn koszul_divisor_presentation(
    n: u64,
) -> Result<(TTPresentation, BTreeMap<String, RadicalIdeal>)> {
    if n == 0 || n > 10_000 {
        return Err(Error::Invalid(format!("divisor presentation needs 1 ≤ n ≤ 10000, got {}", n)));
    }
    let z = RingDescriptor::Integers;
    let mut complexes: Vec<(String, ChainComplex)> = vec![
        (UNIT.to_string(), ChainComplex::unit(&z)),
        (ZERO.to_string(), ChainComplex::zero(&z)),
    ];
    for d in (2..=n).filter(|d| n.is_multiple_of(*d)) {
        complexes.push((format!("K({})", d), koszul(&z, &[z.from_int(d as i64)])?));
    }
    let names: Vec<&str> = complexes.iter().map(|(s, _)| s.as_str()).collect();
    let mut p = TTPresentation::new(&names);
    let mut dictionary = BTreeMap::new();
    for (s, c) in &complexes {
        dictionary.insert(s.clone(), supph(c)?);
    }
    let find = |i: &RadicalIdeal| -> Result<Option<String>> {
        for (s, _) in &complexes {
            if dictionary[s].equiv(i)? {
                return Ok(Some(s.clone()));
            }
        }
        Ok(None)
    };
    for (i, (a, ca)) in complexes.iter().enumerate() {
        for (b, cb) in &complexes[i..] {
            if let Some(c) = find(&supph(&ca.direct_sum(cb)?)?)? {
                p = p.sum(a, b, &c);
            }
            if let Some(c) = find(&supph(&ca.tensor(cb)?)?)? {
                p = p.tensor(a, b, &c);
            }
        }
    }
    Ok((p, dictionary))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hochster::dual_points;
    use crate::lattice::FiniteLattice;

    fn uvw() -> TTPresentation {
        TTPresentation::new(&["u", "v", "w"]).sum("u", "v", "w").tensor("u", "v", ZERO)
    }

    #[test]
    fn sum_and_tensor_relations() {
        let p = uvw();
        let l = build_lattice(&p).unwrap();
        assert!(l.equivalent(&supp("w"), &supp("u").or(&supp("v"))).unwrap());
        assert!(l.entails(&supp("u").and(&supp("v")), &LatticeTerm::bottom()).unwrap());
        assert!(supp_leq(&p, ZERO, "u").unwrap());
        assert!(supp_leq(&p, "u", "w").unwrap());
        assert!(!supp_leq(&p, "u", "v").unwrap());
        assert!(supp_leq(&p, "u", "x").is_err());
    }

    #[test]
    fn triangle_rotations() {
        let p = TTPresentation::new(&["a", "b", "c"]).triangle("a", "b", "c");
        let l = build_lattice(&p).unwrap();
        for (m, x, y) in [("b", "a", "c"), ("a", "b", "c"), ("c", "a", "b")] {
            assert!(l.entails(&supp(m), &supp(x).or(&supp(y))).unwrap());
        }
        assert!(!l.entails(&supp("a"), &supp("b")).unwrap());
    }

    #[test]
    fn trivial_presentation() {
        let p = TTPresentation::new::<&str>(&[]);
        let l = build_lattice(&p).unwrap();
        assert_eq!(FiniteLattice::enumerate(&l).unwrap().len(), 2);
        assert_eq!(spectrum_points(&p).unwrap().len(), 1);
        let report = compare_with_ring(&p, &RingDescriptor::Integers, &BTreeMap::new()).unwrap();
        assert!(report.consistent());
    }

    #[test]
    fn points_are_primes() {
        let pts = spectrum_points(&uvw()).unwrap();
        assert_eq!(pts.len(), 3);
        let uv: Vec<(bool, bool)> = pts
            .iter()
            .map(|s| (!s.in_open("u"), !s.in_open("v")))
            .collect();
        assert_eq!(uv, vec![(false, false), (false, true), (true, false)]);
        for s in &pts {
            assert!(s.in_open(ZERO) && !s.in_open(UNIT));
        }
        assert_eq!(dual_points(&build_lattice(&uvw()).unwrap()).unwrap().len(), 3);
    }

    #[test]
    fn forced_top() {
        let p = TTPresentation::new(&["a"]).retract(UNIT, "a");
        assert!(spectrum_points(&p).unwrap().iter().all(|s| !s.in_open("a")));
    }

    #[test]
    fn nilpotence() {
        let p = uvw();
        let m = morphism_support(&p, &["u", "v"]).unwrap();
        assert!(m.nilpotent && m.support.is_bottom());
        assert_eq!(m.to_json()["verdict"], "tensor-nilpotent");
        let m = morphism_support(&p, &["w", "u", "v"]).unwrap();
        assert_eq!(m.witness, vec!["u", "v"]);
        let m = morphism_support(&p, &[]).unwrap();
        assert!(!m.nilpotent && m.support.is_top());
        assert!(!morphism_support(&p, &["u"]).unwrap().nilpotent);
        assert!(morphism_support(&p, &[ZERO]).unwrap().nilpotent);
    }

    #[test]
    fn ring_dictionary() {
        let z = RingDescriptor::Integers;
        let rad = |s: &str| RadicalIdeal::parse(&z, &[s]).unwrap();
        let dict = |u: &str, v: &str, w: &str| {
            BTreeMap::from([("u".into(), rad(u)), ("v".into(), rad(v)), ("w".into(), rad(w))])
        };
        let good = compare_with_ring(&uvw(), &z, &dict("2", "3", "6")).unwrap();
        assert_eq!(good.checked, 9);
        assert!(good.consistent());
        let bad = compare_with_ring(&uvw(), &z, &dict("2", "2", "2")).unwrap();
        assert!(bad.mismatches.iter().any(|m| m.lhs == "u" && m.rhs == "v" && !m.lattice && m.ring));
        let q = RingDescriptor::qx("x");
        assert!(compare_with_ring(&uvw(), &q, &dict("2", "3", "6")).is_err());
    }

    #[test]
    fn divisors_of_thirty() {
        let (p, dict) = koszul_divisor_presentation(30).unwrap();
        assert_eq!(p.objects.len(), 9);
        assert!(p.tensor.iter().any(|t| t == &TTPresentation::owned(["K(2)", "K(3)", ZERO])));
        assert!(p.sum.iter().any(|t| t == &TTPresentation::owned(["K(2)", "K(3)", "K(6)"])));
        let report = compare_with_ring(&p, &RingDescriptor::Integers, &dict).unwrap();
        assert_eq!(report.checked, 81);
        assert!(report.consistent(), "{:?}", report.mismatches);
        assert_eq!(spectrum_points(&p).unwrap().len(), 4);
    }

    #[test]
    fn json_roundtrip() {
        let p = uvw().triangle("u", "w", "v").retract("u", "w");
        assert_eq!(TTPresentation::from_json(&p.to_json()).unwrap(), p);
        let bad = json!({"objects": ["a"], "sum": [["a", "b", "a"]]});
        assert!(matches!(TTPresentation::from_json(&bad), Err(Error::Presentation(_))));
    }
}
