//! Coherent schemes presented by finitely many glued affine pieces.
//!
//! Pieces are `ℤ`, polynomial rings over a field, or localizations of `ℤ`
//! and `k[x]`; all are domains, so sections over different opens are
//! compared as fractions. A gluing identifies `(R_i)_{f_ij}` with
//! `(R_j)_{f_ji}` by a ring map given on generators together with its inverse.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::derived::{coprime_base, koszul, loc_invariant, supph};
use crate::error::{Error, Result};
use crate::ring::{radical_member, Field, Monomial, Poly, RingDescriptor, RingElement, RingHom};
use crate::zariski::{induced_map, zar_join, zar_leq, zar_meet, Open, RadicalIdeal};

pub const MAX_PIECES: usize = 3;

/// A gluing as written by the user, before validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingSpec {
    pub i: usize,
    pub j: usize,
    pub f_ij: String,
    pub f_ji: String,
    pub phi: BTreeMap<String, String>,
    pub phi_inv: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeSpec {
    pub pieces: Vec<RingDescriptor>,
    pub gluings: Vec<GluingSpec>,
}

fn str_map(v: Option<&Value>, what: &str) -> Result<BTreeMap<String, String>> {
    let Some(v) = v else { return Ok(BTreeMap::new()) };
    v.as_object()
        .ok_or_else(|| Error::Parse(format!("{} must be an object", what)))?
        .iter()
        .map(|(k, x)| {
            let s = match x {
                Value::String(s) => s.clone(),
                Value::Number(n) => n.to_string(),
                _ => return Err(Error::Parse(format!("{}: image of {} must be a string", what, k))),
            };
            Ok((k.clone(), s))
        })
        .collect()
}

fn elem_string(v: Option<&Value>, what: &str) -> Result<String> {
    match v {
        Some(Value::String(s)) => Ok(s.clone()),
        Some(Value::Number(n)) => Ok(n.to_string()),
        None => Ok("1".into()),
        _ => Err(Error::Parse(format!("{} must be a string", what))),
    }
}

impl SchemeSpec {
    pub fn affine(ring: RingDescriptor) -> Self {
        SchemeSpec { pieces: vec![ring], gluings: vec![] }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let pieces = v
            .get("pieces")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("scheme JSON needs a 'pieces' array".into()))?
            .iter()
            .map(RingDescriptor::from_json)
            .collect::<Result<Vec<_>>>()?;
        let mut gluings = Vec::new();
        for g in v.get("gluings").and_then(Value::as_array).into_iter().flatten() {
            let index = |k: &str| -> Result<usize> {
                g.get(k)
                    .and_then(|x| x.as_u64().or_else(|| x.as_str().and_then(|s| s.parse().ok())))
                    .map(|x| x as usize)
                    .ok_or_else(|| Error::Parse(format!("gluing needs an index '{}'", k)))
            };
            gluings.push(GluingSpec {
                i: index("i")?,
                j: index("j")?,
                f_ij: elem_string(g.get("f_ij"), "f_ij")?,
                f_ji: elem_string(g.get("f_ji"), "f_ji")?,
                phi: str_map(g.get("phi"), "phi")?,
                phi_inv: str_map(g.get("phi_inv"), "phi_inv")?,
            });
        }
        Ok(SchemeSpec { pieces, gluings })
    }

    pub fn to_json(&self) -> Value {
        let gluings: Vec<Value> = self
            .gluings
            .iter()
            .map(|g| {
                json!({"i": g.i.to_string(), "j": g.j.to_string(), "f_ij": g.f_ij, "f_ji": g.f_ji,
                       "phi": g.phi, "phi_inv": g.phi_inv})
            })
            .collect();
        let pieces: Vec<Value> = self.pieces.iter().map(RingDescriptor::to_json).collect();
        json!({"pieces": pieces, "gluings": gluings})
    }
}

/// A validated gluing `φ: (R_i)_{f_ij} → (R_j)_{f_ji}`.
#[derive(Debug, Clone)]
pub struct Gluing {
    pub i: usize,
    pub j: usize,
    pub f_ij: RingElement,
    pub f_ji: RingElement,
    pub phi: RingHom,
    pub phi_inv: RingHom,
}

impl Gluing {
    pub fn overlap_i(&self) -> &RingDescriptor {
        self.phi.source()
    }

    pub fn overlap_j(&self) -> &RingDescriptor {
        self.phi.target()
    }
}

#[derive(Debug, Clone)]
pub struct SchemeDatum {
    spec: SchemeSpec,
    gluings: Vec<Gluing>,
}

fn check_piece(r: &RingDescriptor) -> Result<()> {
    let ok = match r {
        RingDescriptor::Integers | RingDescriptor::Polynomial { .. } => true,
        RingDescriptor::Localization { base, .. } => {
            matches!(**base, RingDescriptor::Integers | RingDescriptor::Polynomial { .. })
        }
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "scheme pieces are Z, k[x..] or their localizations, not {}",
            r
        )))
    }
}

fn build_gluing(pieces: &[RingDescriptor], g: &GluingSpec) -> Result<Gluing> {
    if g.i >= pieces.len() || g.j >= pieces.len() || g.i == g.j {
        return Err(Error::Invalid(format!("bad gluing indices ({}, {})", g.i, g.j)));
    }
    let (ri, rj) = (&pieces[g.i], &pieces[g.j]);
    let f_ij = ri.parse(&g.f_ij)?;
    let f_ji = rj.parse(&g.f_ji)?;
    let oi = ri.localize(&f_ij)?.ring;
    let oj = rj.localize(&f_ji)?.ring;
    let phi = RingHom::from_strings(oi.clone(), oj.clone(), &g.phi)?;
    let phi_inv = RingHom::from_strings(oj.clone(), oi.clone(), &g.phi_inv)?;
    for (r, there, back) in [(&oi, &phi, &phi_inv), (&oj, &phi_inv, &phi)] {
        for v in r.vars() {
            let x = r.var(v)?;
            if back.apply(&there.apply(&x)?)? != x {
                return Err(Error::Invalid(format!(
                    "gluing ({}, {}): the maps do not compose to the identity on {}",
                    g.i, g.j, v
                )));
            }
        }
    }
    Ok(Gluing { i: g.i, j: g.j, f_ij, f_ji, phi, phi_inv })
}

/// Numerator and denominator in the un-localized base.
fn to_frac(r: &RingDescriptor, e: &RingElement) -> (RingElement, RingElement) {
    let (num, exp) = r.as_fraction(e);
    let b = r.base_ring();
    let den = match r.inverted() {
        Some(f) => b.pow(f, exp),
        None => b.one(),
    };
    (num, den)
}

/// Validates a datum: ring support, piece count, inverse maps and cocycles.
pub fn glue(spec: &SchemeSpec) -> Result<SchemeDatum> {
    if spec.pieces.is_empty() {
        return Err(Error::Invalid("a scheme needs at least one piece".into()));
    }
    if spec.pieces.len() > MAX_PIECES {
        return Err(Error::Capacity { what: "scheme pieces", limit: MAX_PIECES, got: spec.pieces.len() });
    }
    for r in &spec.pieces {
        check_piece(r)?;
    }
    let mut seen = std::collections::BTreeSet::new();
    for g in &spec.gluings {
        if !seen.insert((g.i.min(g.j), g.i.max(g.j))) {
            return Err(Error::Invalid(format!("pieces {} and {} are glued twice", g.i, g.j)));
        }
    }
    let gluings = spec
        .gluings
        .iter()
        .map(|g| build_gluing(&spec.pieces, g))
        .collect::<Result<Vec<_>>>()?;
    let x = SchemeDatum { spec: spec.clone(), gluings };
    x.check_cocycles()?;
    Ok(x)
}

impl SchemeDatum {
    pub fn spec(&self) -> &SchemeSpec {
        &self.spec
    }

    pub fn pieces(&self) -> &[RingDescriptor] {
        &self.spec.pieces
    }

    pub fn gluings(&self) -> &[Gluing] {
        &self.gluings
    }

    fn piece(&self, i: usize) -> Result<&RingDescriptor> {
        self.spec
            .pieces
            .get(i)
            .ok_or_else(|| Error::Invalid(format!("no piece {}", i)))
    }

    /// The transition map from piece `a` to piece `b`, if they are glued.
    fn transition(&self, a: usize, b: usize) -> Option<&RingHom> {
        self.gluings.iter().find_map(|g| match (g.i, g.j) {
            (i, j) if (i, j) == (a, b) => Some(&g.phi),
            (i, j) if (i, j) == (b, a) => Some(&g.phi_inv),
            _ => None,
        })
    }

    /// Applies a transition to an element of the un-localized base of its
    /// source, as a fraction in the base of its target.
    fn transport(
        &self,
        phi: &RingHom,
        x: &RingElement,
    ) -> Result<(RingElement, RingElement)> {
        let src = phi.source();
        let y = phi.apply(&src.embed(x.clone()))?;
        Ok(to_frac(phi.target(), &y))
    }

    /// `φ_jk ∘ φ_ij = φ_ik` on the generators of `R_i`, compared in the
    /// fraction field of `R_k`.
    fn check_cocycles(&self) -> Result<()> {
        let n = self.spec.pieces.len();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    let (Some(ij), Some(jk), Some(ik)) =
                        (self.transition(i, j), self.transition(j, k), self.transition(i, k))
                    else {
                        continue;
                    };
                    let bi = ij.source().base_ring();
                    let bk = ik.target().base_ring();
                    for v in bi.vars() {
                        let x = bi.var(v)?;
                        let (n1, d1) = self.transport(ij, &x)?;
                        let (a1, b1) = self.transport(jk, &n1)?;
                        let (a2, b2) = self.transport(jk, &d1)?;
                        let (a3, b3) = self.transport(ik, &x)?;
                        // (a1/b1) / (a2/b2) = a3/b3
                        let lhs = bk.product([&a1, &b2, &b3]);
                        let rhs = bk.product([&a3, &b1, &a2]);
                        if lhs != rhs {
                            return Err(Error::Invalid(format!(
                                "cocycle condition fails on pieces ({}, {}, {}) at {}",
                                i, j, k, v
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn extend(&self, r: &RingDescriptor, i: &RadicalIdeal) -> Result<RadicalIdeal> {
        let gens = i
            .gens
            .iter()
            .map(|g| i.ring.map_into(r, g))
            .collect::<Result<_>>()?;
        Ok(RadicalIdeal { ring: r.clone(), gens })
    }

    pub fn check_open(&self, u: &GlobalOpen) -> Result<()> {
        if u.ideals.len() != self.spec.pieces.len() {
            return Err(Error::Invalid(format!(
                "{} ideals for {} pieces",
                u.ideals.len(),
                self.spec.pieces.len()
            )));
        }
        for (k, i) in u.ideals.iter().enumerate() {
            if i.ring != self.spec.pieces[k] {
                return Err(Error::RingMismatch(format!("ideal {} lives over {}", k, i.ring)));
            }
        }
        for g in &self.gluings {
            let there = induced_map(&g.phi, &self.extend(g.overlap_i(), &u.ideals[g.i])?)?;
            let here = self.extend(g.overlap_j(), &u.ideals[g.j])?;
            if !there.equiv(&here)? {
                return Err(Error::Precondition(format!(
                    "open is incompatible on the overlap of pieces {} and {}",
                    g.i, g.j
                )));
            }
        }
        Ok(())
    }
}

/// An open of the glued scheme: one radical ideal per piece, agreeing on overlaps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalOpen {
    pub ideals: Vec<RadicalIdeal>,
}

impl GlobalOpen {
    pub fn parse<S: AsRef<str>>(x: &SchemeDatum, gens: &[&[S]]) -> Result<Self> {
        let ideals = gens
            .iter()
            .enumerate()
            .map(|(k, g)| RadicalIdeal::parse(x.piece(k)?, g))
            .collect::<Result<Vec<_>>>()?;
        let u = GlobalOpen { ideals };
        x.check_open(&u)?;
        Ok(u)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.ideals.iter().map(RadicalIdeal::to_json).collect())
    }
}

pub fn global_entails(x: &SchemeDatum, u: &GlobalOpen, v: &GlobalOpen) -> Result<bool> {
    x.check_open(u)?;
    x.check_open(v)?;
    for (a, b) in u.ideals.iter().zip(&v.ideals) {
        if !zar_leq(a, b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn componentwise(
    x: &SchemeDatum,
    u: &GlobalOpen,
    v: &GlobalOpen,
    op: fn(&RadicalIdeal, &RadicalIdeal) -> Result<RadicalIdeal>,
) -> Result<GlobalOpen> {
    x.check_open(u)?;
    x.check_open(v)?;
    let ideals = u.ideals.iter().zip(&v.ideals).map(|(a, b)| op(a, b)).collect::<Result<_>>()?;
    let w = GlobalOpen { ideals };
    x.check_open(&w)?;
    Ok(w)
}

pub fn global_meet(x: &SchemeDatum, u: &GlobalOpen, v: &GlobalOpen) -> Result<GlobalOpen> {
    componentwise(x, u, v, zar_meet)
}

pub fn global_join(x: &SchemeDatum, u: &GlobalOpen, v: &GlobalOpen) -> Result<GlobalOpen> {
    componentwise(x, u, v, zar_join)
}

/// `O(D(g)) = (R_i)_g` on the basic open `D(g)` of piece `i`.
pub fn structure_sheaf_value(x: &SchemeDatum, i: usize, g: &RingElement) -> Result<RingDescriptor> {
    Ok(x.piece(i)?.localize(g)?.ring)
}

/// The localization map `O(D(g)) → O(D(h))` for `D(h) ⊆ D(g)`.
pub fn restriction(x: &SchemeDatum, i: usize, g: &RingElement, h: &RingElement) -> Result<RingHom> {
    let r = x.piece(i)?;
    if !radical_member(r, h, std::slice::from_ref(g))? {
        return Err(Error::Precondition(format!(
            "D({}) is not contained in D({})",
            r.format(h),
            r.format(g)
        )));
    }
    let src = structure_sheaf_value(x, i, g)?;
    let tgt = structure_sheaf_value(x, i, h)?;
    let images = src.vars().iter().map(|v| Ok((v.clone(), tgt.var(v)?))).collect::<Result<_>>()?;
    RingHom::new(src, tgt, images)
}

/// Global sections, either exactly (arithmetic pieces) or as the section
/// space up to a degree bound (polynomial pieces over a field).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sections {
    /// One subring of `ℚ` per connected component.
    Arithmetic { components: Vec<RingDescriptor> },
    Bounded {
        bound: u32,
        /// Dimensions at bounds `b−1, b, b+1` (the first is 0 when `b = 0`).
        dims: [usize; 3],
        /// Basis of the sections of degree `≤ b`, one polynomial per piece.
        basis: Vec<Vec<String>>,
        stable: bool,
    },
}

impl Sections {
    pub fn to_json(&self) -> Value {
        match self {
            Sections::Arithmetic { components } => json!({
                "kind": "arithmetic",
                "components": components.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            }),
            Sections::Bounded { bound, dims, basis, stable } => json!({
                "kind": "bounded",
                "bound": bound.to_string(),
                "dimension": dims[1].to_string(),
                "dims": dims.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
                "basis": basis,
                "stable": stable,
            }),
        }
    }
}

fn components(n: usize, gluings: &[Gluing]) -> Vec<Vec<usize>> {
    let mut label: Vec<usize> = (0..n).collect();
    for _ in 0..n {
        for g in gluings {
            let m = label[g.i].min(label[g.j]);
            label[g.i] = m;
            label[g.j] = m;
        }
    }
    let mut out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (k, l) in label.into_iter().enumerate() {
        out.entry(l).or_default().push(k);
    }
    out.into_values().collect()
}

pub fn global_sections(x: &SchemeDatum, bound: u32) -> Result<Sections> {
    let pieces = x.pieces();
    if pieces.iter().all(|r| *r.base_ring() == RingDescriptor::Integers) {
        // inside ℚ, ℤ[1/h₁] ∩ ⋯ ∩ ℤ[1/h_k] = ℤ[1/gcd(h₁,…,h_k)] (prime sets intersect)
        let z = RingDescriptor::Integers;
        let mut comps = Vec::new();
        for comp in components(pieces.len(), x.gluings()) {
            let g = comp.iter().fold(z.zero(), |acc, &k| {
                let h = pieces[k].inverted().cloned().unwrap_or_else(|| z.one());
                z.gcd(&acc, &h)
            });
            comps.push(z.localize(&g)?.ring);
        }
        return Ok(Sections::Arithmetic { components: comps });
    }
    let field = match pieces[0].poly_field() {
        Some(f) if pieces.iter().all(|r| matches!(r, RingDescriptor::Polynomial { base, .. } if base == f)) => {
            f.clone()
        }
        _ => {
            return Err(Error::Unsupported(
                "global sections need all pieces arithmetic or all polynomial over one field".into(),
            ))
        }
    };
    let (d0, _) = sections_up_to(x, &field, bound)?;
    let lower = if bound == 0 { 0 } else { sections_up_to(x, &field, bound - 1)?.0.len() };
    let (d2, _) = sections_up_to(x, &field, bound + 1)?;
    let dims = [lower, d0.len(), d2.len()];
    let stable = if bound == 0 { dims[2] == dims[1] } else { dims[2] - dims[1] == dims[1] - dims[0] };
    let basis = d0;
    Ok(Sections::Bounded { bound, dims, basis, stable })
}

fn monomials(nvars: usize, bound: u32) -> Vec<Monomial> {
    fn go(prefix: &mut Monomial, left: usize, budget: u32, out: &mut Vec<Monomial>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        for e in 0..=budget {
            prefix.push(e);
            go(prefix, left - 1, budget - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), nvars, bound, &mut out);
    out.sort_by_key(|m| (m.iter().sum::<u32>(), m.clone()));
    out
}

/// Basis of compatible tuples of polynomials of total degree `≤ bound`.
fn sections_up_to(x: &SchemeDatum, field: &Field, bound: u32) -> Result<(Vec<Vec<String>>, usize)> {
    let pieces = x.pieces();
    let monos: Vec<Vec<Monomial>> = pieces.iter().map(|r| monomials(r.vars().len(), bound)).collect();
    let offsets: Vec<usize> = monos
        .iter()
        .scan(0, |acc, m| {
            let o = *acc;
            *acc += m.len();
            Some(o)
        })
        .collect();
    let unknowns = monos.iter().map(Vec::len).sum();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for g in x.gluings() {
        let bj = pieces[g.j].clone();
        let elem = |m: &Monomial| RingElement::Poly(Poly::monomial(m.clone(), BigRational::one()));
        let mut images = Vec::new();
        for m in &monos[g.i] {
            let (num, den) = x.transport(&g.phi, &elem(m))?;
            images.push((num, den));
        }
        // clear denominators
        let mut common = bj.one();
        for (_, d) in &images {
            let gcd = bj.gcd(&common, d);
            common = bj.div_exact(&bj.mul(&common, d), &gcd).expect("lcm");
        }
        let mut eqs: BTreeMap<Monomial, Vec<BigRational>> = BTreeMap::new();
        let mut add = |p: &RingElement, col: usize, sign: bool| {
            if let RingElement::Poly(p) = p {
                for (mono, c) in p.terms() {
                    let row = eqs.entry(mono.clone()).or_insert_with(|| vec![BigRational::zero(); unknowns]);
                    let c = if sign { c.clone() } else { field.neg(c) };
                    row[col] = field.add(&row[col], &c);
                }
            }
        };
        for (k, (num, den)) in images.iter().enumerate() {
            let scale = bj.div_exact(&common, den).expect("denominator divides the lcm");
            add(&bj.mul(num, &scale), offsets[g.i] + k, true);
        }
        for (k, m) in monos[g.j].iter().enumerate() {
            add(&bj.mul(&elem(m), &common), offsets[g.j] + k, false);
        }
        rows.extend(eqs.into_values());
    }
    let kernel = nullspace(field, rows, unknowns);
    let basis = kernel
        .iter()
        .map(|v| {
            pieces
                .iter()
                .enumerate()
                .map(|(p, r)| {
                    let mut poly = Poly::zero(r.vars().len());
                    for (k, m) in monos[p].iter().enumerate() {
                        let c = &v[offsets[p] + k];
                        if !c.is_zero() {
                            poly = poly.add(&Poly::monomial(m.clone(), c.clone()), field);
                        }
                    }
                    r.format(&RingElement::Poly(poly))
                })
                .collect()
        })
        .collect();
    Ok((basis, kernel.len()))
}

/// Reduced basis of `{v : Mv = 0}`, one vector per free column with a 1 there.
fn nullspace(field: &Field, mut rows: Vec<Vec<BigRational>>, n: usize) -> Vec<Vec<BigRational>> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][col]).expect("nonzero pivot");
        for x in rows[r].iter_mut().take(n) {
            *x = field.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let k = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row).take(n) {
                    *x = field.sub(x, &field.mul(&k, y));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); n];
            v[free] = BigRational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = field.neg(&rows[i][free]);
            }
            v
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SheafCheck {
    pub pass: bool,
    /// Fractions `1/qᵉ` tested, `q` from a coprime base of the data.
    pub tested: usize,
}

/// Checks `(R_i)_g = ⋂_j (R_i)_{g·g_j}` on the fractions `1/qᵉ`, `e ≤ bound`,
/// for `q` in a coprime base of the cover; in a domain this intersection is
/// the equalizer of the Čech diagram.
pub fn sheaf_condition_check(
    x: &SchemeDatum,
    i: usize,
    g: &RingElement,
    cover: &[RingElement],
    bound: u32,
) -> Result<SheafCheck> {
    let r = x.piece(i)?;
    r.require_pid()?;
    for c in std::iter::once(g).chain(cover) {
        r.check(c)?;
    }
    let covers = cover.iter().all(|c| radical_member(r, c, std::slice::from_ref(g)).unwrap_or(false))
        && radical_member(r, g, cover)?;
    if !covers {
        return Err(Error::Precondition(format!(
            "D({}) is not covered by the given opens",
            r.format(g)
        )));
    }
    let b = r.base_ring();
    let h = r.inverted().cloned().unwrap_or_else(|| b.one());
    let num = |e: &RingElement| r.as_fraction(e).0;
    let hg = b.mul(&h, &num(g));
    let locals: Vec<RingElement> = cover
        .iter()
        .map(num)
        .filter(|c| !b.is_zero(c))
        .map(|c| b.mul(&hg, &c))
        .collect();
    let mut all = vec![hg.clone()];
    all.extend(locals.iter().cloned());
    let mut tested = 0;
    for q in coprime_base(b, &all) {
        for e in 1..=bound.max(1) {
            let qe = b.pow(&q, e);
            let in_all = locals
                .iter()
                .map(|l| radical_member(b, &qe, std::slice::from_ref(l)))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .all(|x| x);
            let in_rg = radical_member(b, &qe, std::slice::from_ref(&hg))?;
            tested += 1;
            if in_all && !in_rg {
                return Ok(SheafCheck { pass: false, tested });
            }
        }
    }
    Ok(SheafCheck { pass: true, tested })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieceReport {
    pub index: usize,
    pub ring: String,
    /// "complex" when supports were computed from Koszul complexes.
    pub level: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapReport {
    pub i: usize,
    pub j: usize,
    pub checked: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconstructionReport {
    pub pieces: Vec<PieceReport>,
    pub overlaps: Vec<OverlapReport>,
    pub cocycle: Option<String>,
}

impl ReconstructionReport {
    pub fn pass(&self) -> bool {
        self.pieces.iter().all(|p| p.failures.is_empty())
            && self.overlaps.iter().all(|o| o.failures.is_empty())
            && self.cocycle.is_none()
    }

    pub fn to_json(&self) -> Value {
        let pieces: Vec<Value> = self
            .pieces
            .iter()
            .map(|p| {
                json!({"piece": p.index.to_string(), "ring": p.ring, "level": p.level,
                       "checked": p.checked.to_string(), "pass": p.failures.is_empty(),
                       "failures": p.failures})
            })
            .collect();
        let overlaps: Vec<Value> = self
            .overlaps
            .iter()
            .map(|o| {
                json!({"i": o.i.to_string(), "j": o.j.to_string(), "checked": o.checked.to_string(),
                       "pass": o.failures.is_empty(), "failures": o.failures})
            })
            .collect();
        let mut m = Map::new();
        m.insert("pass".into(), self.pass().into());
        m.insert("pieces".into(), pieces.into());
        m.insert("overlaps".into(), overlaps.into());
        m.insert("cocycle".into(), self.cocycle.clone().map_or(Value::Null, Value::from));
        Value::Object(m)
    }
}

/// The standard sample of finitely generated ideals for a piece.
pub fn default_sample(r: &RingDescriptor) -> Result<Vec<RadicalIdeal>> {
    let b = r.base_ring();
    let lift = |e: RingElement| r.embed(e);
    let mut atoms: Vec<RingElement> = Vec::new();
    let mut pairs: Vec<(RingElement, RingElement)> = Vec::new();
    match b {
        RingDescriptor::Integers => {
            atoms = [2, 3, 5, 7].iter().map(|&p| b.from_int(p)).collect();
            pairs = [(6, 10), (4, 6), (15, 35)]
                .iter()
                .map(|&(x, y)| (b.from_int(x), b.from_int(y)))
                .collect();
        }
        RingDescriptor::Polynomial { vars, .. } if vars.len() == 1 => {
            let x = b.var(&vars[0])?;
            atoms = vec![x.clone(), b.sub(&x, &b.one()), b.add(&x, &b.one())];
            pairs = vec![(x.clone(), b.sub(&x, &b.one()))];
        }
        RingDescriptor::Polynomial { vars, .. } => {
            let x = b.var(&vars[0])?;
            let y = b.var(&vars[1])?;
            atoms = vec![x.clone(), y.clone(), b.add(&x, &y)];
            pairs = vec![(x, y)];
        }
        _ => {}
    }
    let mut out = vec![RadicalIdeal::zero(r)];
    for mask in 0..1usize << atoms.len() {
        let p = b.product(atoms.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, a)| a));
        out.push(RadicalIdeal { ring: r.clone(), gens: vec![lift(p)] });
    }
    for (x, y) in pairs {
        out.push(RadicalIdeal { ring: r.clone(), gens: vec![lift(x), lift(y)] });
    }
    Ok(out)
}

fn complex_level(r: &RingDescriptor) -> bool {
    r.is_pid() && !r.is_field()
}

fn check_piece_sample(index: usize, r: &RingDescriptor, sample: &[RadicalIdeal]) -> Result<PieceReport> {
    let complexes = complex_level(r);
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut opens = Vec::new();
    for i in sample {
        let open = if complexes {
            let o = loc_invariant(&koszul(r, &i.gens)?)?;
            checked += 1;
            if !o.ideal().equiv(i)? {
                failures.push(format!("Loc(K({})) names {}", i, o.ideal()));
            }
            o
        } else {
            Open::Hochster(i.clone())
        };
        opens.push(open);
    }
    for (a, oa) in sample.iter().zip(&opens) {
        for (b, ob) in sample.iter().zip(&opens) {
            checked += 1;
            if oa.leq(ob)? != zar_leq(b, a)? {
                failures.push(format!("order between {} and {} is not reversed", a, b));
            }
        }
    }
    Ok(PieceReport {
        index,
        ring: r.to_string(),
        level: if complexes { "complex" } else { "lattice" },
        checked,
        failures,
    })
}

fn check_overlap(
    pieces: &[RingDescriptor],
    spec: &GluingSpec,
    sample: &[RadicalIdeal],
) -> OverlapReport {
    let mut report = OverlapReport { i: spec.i, j: spec.j, checked: 0, failures: vec![] };
    let g = match build_gluing(pieces, spec) {
        Ok(g) => g,
        Err(e) => {
            report.failures.push(e.to_string());
            return report;
        }
    };
    let run = |report: &mut OverlapReport| -> Result<()> {
        let oi = g.overlap_i();
        let ext = |i: &RadicalIdeal| -> Result<RadicalIdeal> {
            let gens = i.gens.iter().map(|x| i.ring.map_into(oi, x)).collect::<Result<_>>()?;
            Ok(RadicalIdeal { ring: oi.clone(), gens })
        };
        let exts = sample.iter().map(ext).collect::<Result<Vec<_>>>()?;
        let moved = exts.iter().map(|e| induced_map(&g.phi, e)).collect::<Result<Vec<_>>>()?;
        for ((i, e), m) in sample.iter().zip(&exts).zip(&moved) {
            report.checked += 1;
            if !induced_map(&g.phi_inv, m)?.equiv(e)? {
                report.failures.push(format!("{} does not return along the inverse", i));
            }
            if complex_level(oi) {
                report.checked += 1;
                let here = supph(&koszul(&i.ring, &i.gens)?.base_change(oi)?)?;
                if !here.equiv(e)? {
                    report.failures.push(format!("support of K({}) does not restrict", i));
                }
            }
        }
        for (a, ma) in exts.iter().zip(&moved) {
            for (b, mb) in exts.iter().zip(&moved) {
                report.checked += 1;
                if zar_leq(a, b)? != zar_leq(ma, mb)? {
                    report.failures.push(format!("{} ≤ {} is not preserved", a, b));
                }
            }
        }
        Ok(())
    };
    if let Err(e) = run(&mut report) {
        report.failures.push(e.to_string());
    }
    report
}

/// Per piece, checks that `I ↦ Loc(K(I))` is an order-reversing bijection
/// onto the radicals of the sample; per overlap, that the gluing is a valid
/// isomorphism commuting with the induced maps on radicals.
pub fn reconstruction_check(spec: &SchemeSpec) -> Result<ReconstructionReport> {
    let samples = spec.pieces.iter().map(default_sample).collect::<Result<Vec<_>>>()?;
    reconstruction_check_with(spec, &samples)
}

pub fn reconstruction_check_with(
    spec: &SchemeSpec,
    samples: &[Vec<RadicalIdeal>],
) -> Result<ReconstructionReport> {
    if spec.pieces.len() > MAX_PIECES {
        return Err(Error::Capacity { what: "scheme pieces", limit: MAX_PIECES, got: spec.pieces.len() });
    }
    if samples.len() != spec.pieces.len() {
        return Err(Error::Invalid("one sample per piece is required".into()));
    }
    for r in &spec.pieces {
        check_piece(r)?;
    }
    let pieces = spec
        .pieces
        .iter()
        .zip(samples)
        .enumerate()
        .map(|(k, (r, s))| check_piece_sample(k, r, s))
        .collect::<Result<Vec<_>>>()?;
    let overlaps: Vec<OverlapReport> = spec
        .gluings
        .iter()
        .map(|g| check_overlap(&spec.pieces, g, samples.get(g.i).map_or(&[], Vec::as_slice)))
        .collect();
    let cocycle = if overlaps.iter().all(|o| o.failures.is_empty()) {
        glue(spec).err().map(|e| e.to_string())
    } else {
        None
    };
    Ok(ReconstructionReport { pieces, overlaps, cocycle })
}

/// `R/(I)` for `R = ℤ` or `ℤ/n`, recorded by its modulus (0 for `ℤ`, 1 for the zero ring).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainValue {
    pub modulus: BigInt,
}

impl DomainValue {
    pub fn ring(&self) -> Option<RingDescriptor> {
        if self.modulus.is_zero() {
            Some(RingDescriptor::Integers)
        } else if self.modulus.is_one() {
            None
        } else {
            Some(RingDescriptor::IntegersMod(self.modulus.clone()))
        }
    }

    pub fn describe(&self) -> String {
        self.ring().map_or("0".to_string(), |r| r.to_string())
    }

    /// The restriction map to `other` exists (and is the canonical surjection)
    /// when `other`'s modulus divides this one.
    pub fn maps_onto(&self, other: &DomainValue) -> bool {
        other.modulus.is_zero() && self.modulus.is_zero()
            || !other.modulus.is_zero() && self.modulus.is_multiple_of(&other.modulus)
    }
}

pub fn domain_presheaf_value(i: &RadicalIdeal) -> Result<DomainValue> {
    let start = match &i.ring {
        RingDescriptor::Integers => BigInt::zero(),
        RingDescriptor::IntegersMod(n) => n.clone(),
        other => {
            return Err(Error::Unsupported(format!("the domain presheaf is offered over Z and Z/n, not {}", other)))
        }
    };
    let modulus = i.gens.iter().fold(start, |acc, g| match g {
        RingElement::Int(x) => acc.gcd(x),
        _ => acc,
    });
    Ok(DomainValue { modulus })
}

/// Restriction `R/(I) → R/(I + J)` along `√I ⊆ √J`.
pub fn domain_restriction(i: &RadicalIdeal, j: &RadicalIdeal) -> Result<(DomainValue, DomainValue)> {
    if !zar_leq(i, j)? {
        return Err(Error::Precondition(format!("{} is not contained in {}", i, j)));
    }
    let src = domain_presheaf_value(i)?;
    let tgt = domain_presheaf_value(&zar_join(i, j)?)?;
    Ok((src, tgt))
}
