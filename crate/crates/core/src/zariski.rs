//! The Zariski lattice of a ring: radicals of finitely generated ideals,
//! read either as Zariski opens `D(I)` or, in the opposite order, as the
//! Hochster opens `Z(I)`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lattice::{DLatticePresentation, EntailmentOracle, LatticeTerm};
use crate::ring::{is_probable_prime, radical_member, RingDescriptor, RingElement, RingHom};

/// `√(g₁,…,gₙ)`, kept as the raw generator list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalIdeal {
    pub ring: RingDescriptor,
    pub gens: Vec<RingElement>,
}

impl RadicalIdeal {
    pub fn new(ring: RingDescriptor, gens: Vec<RingElement>) -> Result<Self> {
        for g in &gens {
            ring.check(g)?;
        }
        Ok(RadicalIdeal { ring, gens })
    }

    pub fn parse<S: AsRef<str>>(ring: &RingDescriptor, gens: &[S]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|g| ring.parse(g.as_ref()))
            .collect::<Result<_>>()?;
        Ok(RadicalIdeal { ring: ring.clone(), gens })
    }

    /// `√(0)`, the bottom.
    pub fn zero(ring: &RingDescriptor) -> Self {
        RadicalIdeal { ring: ring.clone(), gens: vec![ring.zero()] }
    }

    /// `√(1)`, the top.
    pub fn unit(ring: &RingDescriptor) -> Self {
        RadicalIdeal { ring: ring.clone(), gens: vec![ring.one()] }
    }

    pub fn contains(&self, f: &RingElement) -> Result<bool> {
        radical_member(&self.ring, f, &self.gens)
    }

    pub fn leq(&self, other: &RadicalIdeal) -> Result<bool> {
        zar_leq(self, other)
    }

    pub fn equiv(&self, other: &RadicalIdeal) -> Result<bool> {
        Ok(zar_leq(self, other)? && zar_leq(other, self)?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        self.contains(&self.ring.one())
    }

    pub fn is_nil(&self) -> Result<bool> {
        zar_leq(self, &RadicalIdeal::zero(&self.ring))
    }

    pub fn gen_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| self.ring.format(g)).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({ "ring": self.ring.to_json(), "gens": self.gen_strings() })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let ring = RingDescriptor::from_json(
            v.get("ring")
                .ok_or_else(|| Error::Parse("radical ideal needs a \"ring\"".into()))?,
        )?;
        let gens = v
            .get("gens")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("radical ideal needs a \"gens\" array".into()))?
            .iter()
            .map(|g| match g {
                Value::String(s) => ring.parse(s),
                Value::Number(n) => ring.parse(&n.to_string()),
                _ => Err(Error::Parse(format!("bad generator {}", g))),
            })
            .collect::<Result<_>>()?;
        Ok(RadicalIdeal { ring, gens })
    }
}

impl fmt::Display for RadicalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "√({})", self.gen_strings().join(", "))
    }
}

fn same_ring(i: &RadicalIdeal, j: &RadicalIdeal) -> Result<()> {
    if i.ring != j.ring {
        return Err(Error::RingMismatch(format!("{} vs {}", i.ring, j.ring)));
    }
    Ok(())
}

pub fn zar_support(ring: &RingDescriptor, f: &RingElement) -> Result<RadicalIdeal> {
    RadicalIdeal::new(ring.clone(), vec![f.clone()])
}

/// `√I ⊆ √J`.
pub fn zar_leq(i: &RadicalIdeal, j: &RadicalIdeal) -> Result<bool> {
    same_ring(i, j)?;
    for g in &i.gens {
        if !radical_member(&i.ring, g, &j.gens)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `√(I + J)`.
pub fn zar_join(i: &RadicalIdeal, j: &RadicalIdeal) -> Result<RadicalIdeal> {
    same_ring(i, j)?;
    let mut gens = i.gens.clone();
    gens.extend(j.gens.iter().cloned());
    Ok(RadicalIdeal { ring: i.ring.clone(), gens })
}

/// `√(I·J) = √I ∩ √J`.
pub fn zar_meet(i: &RadicalIdeal, j: &RadicalIdeal) -> Result<RadicalIdeal> {
    same_ring(i, j)?;
    let mut gens = Vec::with_capacity(i.gens.len() * j.gens.len());
    for a in &i.gens {
        for b in &j.gens {
            gens.push(i.ring.mul(a, b));
        }
    }
    Ok(RadicalIdeal { ring: i.ring.clone(), gens })
}

/// An open of the spectrum named by a radical ideal: `D(I)` ordered by
/// inclusion of radicals, or `Z(I)` (a Hochster open) ordered oppositely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Open {
    Zariski(RadicalIdeal),
    Hochster(RadicalIdeal),
}

impl Open {
    pub fn ideal(&self) -> &RadicalIdeal {
        match self {
            Open::Zariski(i) | Open::Hochster(i) => i,
        }
    }

    pub fn leq(&self, other: &Open) -> Result<bool> {
        match (self, other) {
            (Open::Zariski(i), Open::Zariski(j)) => zar_leq(i, j),
            (Open::Hochster(i), Open::Hochster(j)) => zar_leq(j, i),
            _ => Err(Error::Precondition(
                "cannot compare a Zariski open with a Hochster open".into(),
            )),
        }
    }

    pub fn equiv(&self, other: &Open) -> Result<bool> {
        Ok(self.leq(other)? && other.leq(self)?)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Open::Zariski(_) => "zariski",
            Open::Hochster(_) => "hochster",
        }
    }
}

/// Whether the prime `(p)` lies in the open: for `Z(I)`, all generators are
/// in `(p)`; for `D(I)`, some generator is not. `p = 0` is the generic point.
pub fn point_contains(p: &RingElement, u: &Open) -> Result<bool> {
    let ring = &u.ideal().ring;
    check_prime(ring, p)?;
    let inside = |g: &RingElement| -> bool {
        if ring.is_zero(p) {
            ring.is_zero(g)
        } else {
            ring.divides(p, g)
        }
    };
    Ok(match u {
        Open::Hochster(i) => i.gens.iter().all(inside),
        Open::Zariski(i) => !i.gens.iter().all(inside),
    })
}

fn check_prime(ring: &RingDescriptor, p: &RingElement) -> Result<()> {
    ring.check(p)?;
    if ring.is_zero(p) {
        return match ring {
            RingDescriptor::IntegersMod(n) if !is_probable_prime(n) => Err(Error::Precondition(
                format!("(0) is not prime in {}", ring),
            )),
            _ => Ok(()),
        };
    }
    if ring.is_unit(p) {
        return Err(Error::Precondition(format!(
            "{} is a unit of {}, not a prime",
            ring.format(p),
            ring
        )));
    }
    // cheap sanity check on integers; elsewhere primality is trusted
    let int = match (ring, p) {
        (RingDescriptor::Integers, RingElement::Int(n)) => Some(n.abs()),
        (RingDescriptor::IntegersMod(_), RingElement::Int(n)) => Some(n.clone()),
        (RingDescriptor::Localization { base, .. }, _) if **base == RingDescriptor::Integers => {
            match ring.as_fraction(p).0 {
                RingElement::Int(n) => Some(n.abs()),
                _ => None,
            }
        }
        _ => None,
    };
    if let Some(n) = int {
        if n <= BigInt::from(1_000_000) && !is_probable_prime(&n) {
            return Err(Error::Precondition(format!("{} is not prime", n)));
        }
    }
    Ok(())
}

/// Primes up to `bound`, by a sieve.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    let n = bound as usize;
    if n < 2 {
        return vec![];
    }
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Points of `Spec ℤ` (the generic point 0 and primes up to `bound`) lying
/// in the open.
pub fn integer_points(u: &Open, bound: u64) -> Result<Vec<BigInt>> {
    let ring = &u.ideal().ring;
    if *ring != RingDescriptor::Integers {
        return Err(Error::Unsupported(format!(
            "point enumeration is only offered over Z, not {}",
            ring
        )));
    }
    let mut out = Vec::new();
    for p in std::iter::once(0).chain(primes_up_to(bound)) {
        let e = ring.from_int(p as i64);
        if point_contains(&e, u)? {
            out.push(BigInt::from(p));
        }
    }
    Ok(out)
}

/// Image of `√(g₁,…,gₙ)` under `φ`: `√(φ(g₁),…,φ(gₙ))`.
pub fn induced_map(phi: &RingHom, i: &RadicalIdeal) -> Result<RadicalIdeal> {
    if *phi.source() != i.ring {
        return Err(Error::RingMismatch(format!(
            "homomorphism from {} applied to an ideal of {}",
            phi.source(),
            i.ring
        )));
    }
    let gens = i.gens.iter().map(|g| phi.apply(g)).collect::<Result<_>>()?;
    Ok(RadicalIdeal { ring: phi.target().clone(), gens })
}

// ---- the lattice D(g) ------------------------------------------------------

/// Lattice generator naming `D(g)`.
pub fn d_name(ring: &RingDescriptor, g: &RingElement) -> String {
    format!("D({})", ring.format(g))
}

fn parse_d_name(ring: &RingDescriptor, name: &str) -> Result<RingElement> {
    let inner = name
        .strip_prefix("D(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::Presentation(format!("'{}' is not of the form D(f)", name)))?;
    ring.parse(inner)
}

#[derive(Debug)]
struct RadicalOracle {
    ring: RingDescriptor,
}

impl RadicalOracle {
    /// A term as the generator list of a radical ideal: one product per
    /// conjunction.
    fn ideal(&self, t: &LatticeTerm) -> Result<Vec<RingElement>> {
        t.clauses()
            .iter()
            .map(|c| {
                let factors = c
                    .iter()
                    .map(|g| parse_d_name(&self.ring, g))
                    .collect::<Result<Vec<_>>>()?;
                Ok(self.ring.product(&factors))
            })
            .collect()
    }
}

impl EntailmentOracle for RadicalOracle {
    fn entails(&self, lhs: &LatticeTerm, rhs: &LatticeTerm) -> Result<bool> {
        let rhs = self.ideal(rhs)?;
        for f in self.ideal(lhs)? {
            if !radical_member(&self.ring, &f, &rhs)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn accepts_generator(&self, name: &str) -> bool {
        parse_d_name(&self.ring, name).is_ok()
    }
}

/// The Zariski lattice on generators `D(g)` (any `D(f)` with `f` in the ring
/// is also accepted), entailment decided by radical membership.
pub fn as_lattice(ring: &RingDescriptor, gens: &[RingElement]) -> Result<DLatticePresentation> {
    for g in gens {
        ring.check(g)?;
    }
    let names = gens.iter().map(|g| d_name(ring, g)).collect();
    DLatticePresentation::with_oracle(names, Arc::new(RadicalOracle { ring: ring.clone() }))
}

/// The radical ideal named by a term of [`as_lattice`].
pub fn term_ideal(ring: &RingDescriptor, t: &LatticeTerm) -> Result<RadicalIdeal> {
    let gens = RadicalOracle { ring: ring.clone() }.ideal(t)?;
    Ok(RadicalIdeal { ring: ring.clone(), gens })
}

/// A lattice term naming `√I`: the join of its `D(gᵢ)`.
pub fn ideal_term(i: &RadicalIdeal) -> LatticeTerm {
    let gens: Vec<LatticeTerm> = i
        .gens
        .iter()
        .map(|g| LatticeTerm::gen(&d_name(&i.ring, g)))
        .collect();
    LatticeTerm::or_all(&gens)
}

// ---- supports ---------------------------------------------------------------

type Assignment = dyn Fn(&RingElement) -> Result<LatticeTerm> + Send + Sync;

/// A map `d` from ring elements to a distributive lattice.
#[derive(Clone)]
pub struct SupportMap {
    pub ring: RingDescriptor,
    pub target: DLatticePresentation,
    assign: Arc<Assignment>,
}

impl fmt::Debug for SupportMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SupportMap")
            .field("ring", &self.ring)
            .field("target", &self.target)
            .finish_non_exhaustive()
    }
}

impl SupportMap {
    pub fn new(
        ring: RingDescriptor,
        target: DLatticePresentation,
        assign: impl Fn(&RingElement) -> Result<LatticeTerm> + Send + Sync + 'static,
    ) -> Self {
        SupportMap { ring, target, assign: Arc::new(assign) }
    }

    pub fn apply(&self, f: &RingElement) -> Result<LatticeTerm> {
        self.ring.check(f)?;
        self.target.normalize(&(self.assign)(f)?)
    }

    /// `f ↦ D(f)` into the Zariski lattice of the ring.
    pub fn zariski(ring: &RingDescriptor) -> Result<Self> {
        let target = as_lattice(ring, &[])?;
        let r = ring.clone();
        Ok(SupportMap::new(ring.clone(), target, move |f| {
            Ok(LatticeTerm::gen(&d_name(&r, f)))
        }))
    }

    /// `f ↦ {p : p ∤ f}` into the Boolean algebra on the given primes of ℤ,
    /// presented by atoms `e<p>` that are pairwise disjoint and cover TOP.
    pub fn prime_indicator(primes: &[i64]) -> Result<Self> {
        let names: Vec<String> = primes.iter().map(|p| format!("e{}", p)).collect();
        let mut rels = Vec::new();
        for (i, a) in names.iter().enumerate() {
            for b in &names[i + 1..] {
                rels.push((LatticeTerm::conj([a.as_str(), b.as_str()]), LatticeTerm::bottom()));
            }
        }
        let atoms: Vec<LatticeTerm> = names.iter().map(|n| LatticeTerm::gen(n)).collect();
        rels.push((LatticeTerm::top(), LatticeTerm::or_all(&atoms)));
        let target = DLatticePresentation::new(names, rels)?;
        let primes: Vec<BigInt> = primes.iter().map(|&p| BigInt::from(p)).collect();
        Ok(SupportMap::new(RingDescriptor::Integers, target, move |f| {
            let n = match f {
                RingElement::Int(n) => n.clone(),
                _ => return Err(Error::RingMismatch("expected an integer".into())),
            };
            let terms: Vec<LatticeTerm> = primes
                .iter()
                .filter(|p| !(&n % *p).is_zero())
                .map(|p| LatticeTerm::gen(&format!("e{}", p)))
                .collect();
            Ok(LatticeTerm::or_all(&terms))
        }))
    }
}

/// Outcome of checking the support axioms on a sample.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SupportReport {
    pub pass: bool,
    pub checked: usize,
    pub counterexamples: Vec<String>,
}

/// Checks `d(1) = TOP`, `d(0) = BOTTOM`, `d(fg) = d(f) ∧ d(g)` and
/// `d(f+g) ≤ d(f) ∨ d(g)` over all pairs from the sample.
pub fn verify_support_axioms(d: &SupportMap, sample: &[RingElement]) -> Result<SupportReport> {
    let r = &d.ring;
    let l = &d.target;
    let mut rep = SupportReport::default();
    let fmt = |e: &RingElement| r.format(e);

    rep.checked += 2;
    if !l.equivalent(&d.apply(&r.one())?, &LatticeTerm::top())? {
        rep.counterexamples.push(format!("d(1) = {} is not TOP", d.apply(&r.one())?));
    }
    if !l.equivalent(&d.apply(&r.zero())?, &LatticeTerm::bottom())? {
        rep.counterexamples.push(format!("d(0) = {} is not BOTTOM", d.apply(&r.zero())?));
    }
    let images = sample.iter().map(|f| d.apply(f)).collect::<Result<Vec<_>>>()?;
    for (i, f) in sample.iter().enumerate() {
        for (j, g) in sample.iter().enumerate() {
            rep.checked += 2;
            let prod = d.apply(&r.mul(f, g))?;
            if !l.equivalent(&prod, &images[i].and(&images[j]))? {
                rep.counterexamples.push(format!(
                    "d({}·{}) = {} differs from d({}) ∧ d({})",
                    fmt(f),
                    fmt(g),
                    prod,
                    fmt(f),
                    fmt(g)
                ));
            }
            let sum = d.apply(&r.add(f, g))?;
            if !l.entails(&sum, &images[i].or(&images[j]))? {
                rep.counterexamples.push(format!(
                    "d({} + {}) = {} is not below d({}) ∨ d({})",
                    fmt(f),
                    fmt(g),
                    sum,
                    fmt(f),
                    fmt(g)
                ));
            }
        }
    }
    rep.pass = rep.counterexamples.is_empty();
    Ok(rep)
}

/// The lattice map out of the Zariski lattice induced by `d`:
/// `√(g₁,…,gₙ) ↦ d(g₁) ∨ … ∨ d(gₙ)`.
pub fn universal_support_map(d: &SupportMap, i: &RadicalIdeal) -> Result<LatticeTerm> {
    if i.ring != d.ring {
        return Err(Error::RingMismatch(format!("{} vs {}", i.ring, d.ring)));
    }
    let images = i.gens.iter().map(|g| d.apply(g)).collect::<Result<Vec<_>>>()?;
    Ok(LatticeTerm::or_all(&images))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Field;

    fn z() -> RingDescriptor {
        RingDescriptor::Integers
    }

    fn rad(r: &RingDescriptor, gens: &[&str]) -> RadicalIdeal {
        RadicalIdeal::parse(r, gens).unwrap()
    }

    #[test]
    fn supports_and_order() {
        let r = z();
        assert!(rad(&r, &["12"]).equiv(&rad(&r, &["6"])).unwrap());
        assert!(rad(&r, &["4"]).equiv(&rad(&r, &["2"])).unwrap());
        assert!(!zar_leq(&rad(&r, &["2"]), &rad(&r, &["6"])).unwrap());
        assert!(zar_leq(&rad(&r, &["6"]), &rad(&r, &["2"])).unwrap());
        let i = rad(&r, &["35"]);
        assert!(zar_leq(&RadicalIdeal::zero(&r), &i).unwrap());
        assert!(zar_leq(&i, &RadicalIdeal::unit(&r)).unwrap());
        let q = RingDescriptor::polynomial(Field::Rationals, &["x", "y"]);
        assert!(rad(&q, &["x^2*y"]).equiv(&rad(&q, &["x*y"])).unwrap());
    }

    #[test]
    fn meet_and_join() {
        let r = z();
        assert!(zar_join(&rad(&r, &["4"]), &rad(&r, &["9"])).unwrap().is_unit().unwrap());
        let m = zar_meet(&rad(&r, &["2"]), &rad(&r, &["3"])).unwrap();
        assert_eq!(m.gen_strings(), vec!["6"]);
        let q = RingDescriptor::polynomial(Field::Rationals, &["x", "y"]);
        let m = zar_meet(&rad(&q, &["x"]), &rad(&q, &["y"])).unwrap();
        assert!(m.equiv(&rad(&q, &["x*y"])).unwrap());
        let j = zar_join(&rad(&q, &["x"]), &rad(&q, &["y"])).unwrap();
        assert!(j.equiv(&rad(&q, &["x", "y"])).unwrap());
        assert!(!j.is_unit().unwrap());
        assert!(zar_leq(&rad(&q, &["x"]), &rad(&r, &["2"])).is_err());
    }

    #[test]
    fn support_axioms() {
        let r = z();
        let sample: Vec<_> = [0, 1, 2, 3, 6, 5].iter().map(|&n| r.from_int(n)).collect();
        let rep = verify_support_axioms(&SupportMap::zariski(&r).unwrap(), &sample).unwrap();
        assert!(rep.pass, "{:?}", rep.counterexamples);

        let target = as_lattice(&r, &[]).unwrap();
        let rr = r.clone();
        let shifted = SupportMap::new(r.clone(), target, move |f| {
            Ok(LatticeTerm::gen(&d_name(&rr, &rr.add(f, &rr.one()))))
        });
        let rep = verify_support_axioms(&shifted, &sample).unwrap();
        assert!(!rep.pass);
        assert!(rep.counterexamples.iter().any(|c| c.starts_with("d(0)")));

        let ind = SupportMap::prime_indicator(&[2, 3, 5]).unwrap();
        assert!(verify_support_axioms(&ind, &sample).unwrap().pass);
    }

    #[test]
    fn universal_map() {
        let r = z();
        let d = SupportMap::prime_indicator(&[2, 3, 5]).unwrap();
        let a = universal_support_map(&d, &rad(&r, &["12"])).unwrap();
        let b = universal_support_map(&d, &rad(&r, &["18"])).unwrap();
        assert!(d.target.equivalent(&a, &"e5".parse().unwrap()).unwrap());
        assert!(d.target.equivalent(&b, &"e5".parse().unwrap()).unwrap());
        let bot = universal_support_map(&d, &RadicalIdeal::zero(&r)).unwrap();
        assert!(bot.is_bottom());
        let top = universal_support_map(&d, &RadicalIdeal::unit(&r)).unwrap();
        assert!(d.target.equivalent(&top, &LatticeTerm::top()).unwrap());
    }

    #[test]
    fn functoriality() {
        let r = z();
        let id = RingHom::identity(&r).unwrap();
        assert!(induced_map(&id, &rad(&r, &["6"])).unwrap().equiv(&rad(&r, &["6"])).unwrap());
        let qx = RingDescriptor::qx("x");
        let q = RingDescriptor::Rationals;
        let ev = RingHom::from_strings(qx.clone(), q.clone(), &[("x".to_string(), "0".to_string())].into())
            .unwrap();
        assert!(induced_map(&ev, &rad(&qx, &["x"])).unwrap().is_nil().unwrap());
        let z2 = r.localize(&r.from_int(2)).unwrap().ring;
        let inc = RingHom::new(r.clone(), z2.clone(), Default::default()).unwrap();
        assert!(induced_map(&inc, &rad(&r, &["2"])).unwrap().is_unit().unwrap());
    }

    #[test]
    fn points() {
        let r = z();
        let two = r.from_int(2);
        let three = r.from_int(3);
        assert!(point_contains(&two, &Open::Hochster(rad(&r, &["6"]))).unwrap());
        assert!(!point_contains(&two, &Open::Zariski(rad(&r, &["10"]))).unwrap());
        assert!(point_contains(&three, &Open::Zariski(rad(&r, &["10"]))).unwrap());
        assert!(point_contains(&r.zero(), &Open::Zariski(rad(&r, &["7"]))).unwrap());
        assert!(point_contains(&r.from_int(4), &Open::Zariski(rad(&r, &["7"]))).is_err());
        let pts = integer_points(&Open::Hochster(rad(&r, &["12"])), 20).unwrap();
        assert_eq!(pts, vec![BigInt::from(2), BigInt::from(3)]);
        let z6 = RingDescriptor::intmod(6).unwrap();
        assert!(point_contains(&z6.from_int(2), &Open::Hochster(rad(&z6, &["4"]))).unwrap());
    }

    #[test]
    fn zariski_lattice() {
        let r = z();
        let gens: Vec<_> = [2, 3, 5].iter().map(|&n| r.from_int(n)).collect();
        let l = as_lattice(&r, &gens).unwrap();
        let t = |s: &str| -> LatticeTerm { s.parse().unwrap() };
        assert!(l.equivalent(&t("D(2) & D(3)"), &t("D(6)")).unwrap());
        assert!(!l.entails(&t("D(2)"), &t("D(3)")).unwrap());
        assert!(l.entails(&t("BOTTOM"), &t("D(2)")).unwrap());
        assert!(l.entails(&t("TOP"), &t("D(2) | D(3)")).unwrap());
        assert!(l.entails(&t("D(x)"), &t("D(2)")).is_err());
    }
}
