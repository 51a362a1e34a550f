//! Čech and stable Koszul complexes over `ℤ` or `k[x]`, and local cohomology.
//!
//! Columns are localizations `R_{f_S}`, which are not finitely generated, so
//! homology is computed structurally. Refine the nonzero generators to a
//! pairwise coprime base `q₁,…,q_m` (gcds only). Then `R_{f_S} = R[1/q_j : j ∈ T(S)]`
//! with `T(S) = {j : q_j shares a factor with some fᵢ, i ∈ S}`, and by partial
//! fractions `R[1/Q]/R = ⊕_{j∈Q} R[1/q_j]/R`. Modding out the constant
//! subcomplex leaves `⊕_j (R[1/q_j]/R) ⊗ B_j` for integer complexes `B_j`
//! of ±1 matrices, whose homology is computed by SNF over `ℤ`.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Map, Value};

use super::homology::subquotient_homology;
use super::{homology, ChainComplex, ModulePresentation};
use crate::error::{Error, Result};
use crate::ring::{radical_member, Matrix, RingDescriptor, RingElement};
use crate::zariski::RadicalIdeal;

pub const MAX_CECH_GENERATORS: usize = 6;

/// A summand of a homology module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Piece {
    Finite(ModulePresentation),
    /// `R_h^rank` (`h = 1` gives `R^rank`).
    Localized { h: RingElement, rank: usize },
    /// `(R_h/R)^rank`.
    Quotient { h: RingElement, rank: usize },
}

impl Piece {
    pub fn describe(&self, r: &RingDescriptor) -> String {
        let pow = |s: String, k: usize| if k == 1 { s } else { format!("({})^{}", s, k) };
        match self {
            Piece::Finite(m) => m.to_string(),
            Piece::Localized { h, rank } => {
                if r.is_one(h) {
                    pow(r.to_string(), *rank)
                } else {
                    pow(format!("{}[1/({})]", r, r.format(h)), *rank)
                }
            }
            Piece::Quotient { h, rank } => pow(format!("{}[1/({})]/{}", r, r.format(h), r), *rank),
        }
    }

    /// Every element is killed by a power of `f`.
    pub fn is_power_torsion(&self, r: &RingDescriptor, f: &RingElement) -> Result<bool> {
        match self {
            Piece::Finite(m) => super::module_is_power_torsion(m, f),
            Piece::Localized { h, .. } => Ok(r.is_zero(h) || radical_member(r, f, &[r.zero()])?),
            // a/hᵏ is killed by a power of f iff h divides a power of f
            Piece::Quotient { h, .. } => radical_member(r, f, std::slice::from_ref(h)),
        }
    }

    /// Multiplication by `f` is bijective.
    pub fn is_invertible(&self, r: &RingDescriptor, f: &RingElement) -> Result<bool> {
        match self {
            Piece::Finite(m) => super::module_is_invertible(m, f),
            // f is a unit of R_h iff f | hᵏ
            Piece::Localized { h, .. } => radical_member(r, h, std::slice::from_ref(f)),
            Piece::Quotient { h, .. } => Ok(r.is_unit(&r.gcd(f, h))),
        }
    }

    pub fn to_json(&self, r: &RingDescriptor) -> Value {
        let mut v = match self {
            Piece::Finite(m) => {
                let mut v = m.to_json();
                v["kind"] = "finite".into();
                v
            }
            Piece::Localized { h, rank } => {
                json!({"kind": "localized", "h": r.format(h), "rank": rank.to_string()})
            }
            Piece::Quotient { h, rank } => {
                json!({"kind": "quotient", "h": r.format(h), "rank": rank.to_string()})
            }
        };
        v["module"] = self.describe(r).into();
        v
    }
}

/// Homology of a Čech-type complex, cohomologically graded, as a direct
/// sum of pieces in each degree (zero degrees omitted).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CechHomology {
    pub ring: RingDescriptor,
    pub degrees: BTreeMap<usize, Vec<Piece>>,
}

impl CechHomology {
    pub fn is_zero(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn pieces(&self, p: usize) -> &[Piece] {
        self.degrees.get(&p).map_or(&[], Vec::as_slice)
    }

    /// Canonical form: finite parts summed, and for localized/quotient
    /// pieces the coprime factors of equal multiplicity multiplied together.
    fn canonical(ring: &RingDescriptor, raw: BTreeMap<usize, Vec<Piece>>) -> Result<Self> {
        let mut degrees = BTreeMap::new();
        for (p, pieces) in raw {
            let mut finite = ModulePresentation::zero(ring);
            let mut loc: BTreeMap<usize, RingElement> = BTreeMap::new();
            let mut quo: BTreeMap<usize, RingElement> = BTreeMap::new();
            for piece in pieces {
                match piece {
                    Piece::Finite(m) => finite = finite.sum(&m)?,
                    Piece::Localized { h, rank } if rank > 0 => {
                        let e = loc.entry(rank).or_insert_with(|| ring.one());
                        *e = ring.normalize(&ring.mul(e, &h)).0;
                    }
                    Piece::Quotient { h, rank } if rank > 0 && !ring.is_unit(&h) => {
                        let e = quo.entry(rank).or_insert_with(|| ring.one());
                        *e = ring.normalize(&ring.mul(e, &h)).0;
                    }
                    _ => {}
                }
            }
            let mut out = Vec::new();
            if !finite.is_zero() {
                out.push(Piece::Finite(finite));
            }
            out.extend(loc.into_iter().map(|(rank, h)| Piece::Localized { h, rank }));
            out.extend(quo.into_iter().map(|(rank, h)| Piece::Quotient { h, rank }));
            if !out.is_empty() {
                degrees.insert(p, out);
            }
        }
        Ok(CechHomology { ring: ring.clone(), degrees })
    }

    /// Isomorphism of the described modules: `R_h ≅ R_{h'}` and
    /// `R_h/R ≅ R_{h'}/R` exactly when `√h = √h'`.
    pub fn isomorphic(&self, other: &CechHomology) -> Result<bool> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!("{} vs {}", self.ring, other.ring)));
        }
        if self.degrees.keys().ne(other.degrees.keys()) {
            return Ok(false);
        }
        let r = &self.ring;
        let same_rad = |a: &RingElement, b: &RingElement| -> Result<bool> {
            Ok(radical_member(r, a, std::slice::from_ref(b))?
                && radical_member(r, b, std::slice::from_ref(a))?)
        };
        for (p, xs) in &self.degrees {
            let ys = &other.degrees[p];
            if xs.len() != ys.len() {
                return Ok(false);
            }
            for (x, y) in xs.iter().zip(ys) {
                let ok = match (x, y) {
                    (Piece::Finite(a), Piece::Finite(b)) => a == b,
                    (Piece::Localized { h: a, rank: m }, Piece::Localized { h: b, rank: n })
                    | (Piece::Quotient { h: a, rank: m }, Piece::Quotient { h: b, rank: n }) => {
                        m == n && same_rad(a, b)?
                    }
                    _ => false,
                };
                if !ok {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_power_torsion(&self, f: &RingElement) -> Result<bool> {
        for ps in self.degrees.values() {
            for p in ps {
                if !p.is_power_torsion(&self.ring, f)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_invertible(&self, f: &RingElement) -> Result<bool> {
        for ps in self.degrees.values() {
            for p in ps {
                if !p.is_invertible(&self.ring, f)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> Value {
        let m: Map<String, Value> = self
            .degrees
            .iter()
            .map(|(p, ps)| {
                (p.to_string(), Value::Array(ps.iter().map(|x| x.to_json(&self.ring)).collect()))
            })
            .collect();
        Value::Object(m)
    }
}

impl fmt::Display for CechHomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .degrees
            .iter()
            .map(|(p, ps)| {
                let mods: Vec<String> = ps.iter().map(|x| x.describe(&self.ring)).collect();
                format!("H^{} = {}", p, mods.join(" ⊕ "))
            })
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// The complex `⊕_{|S|=p} R_{f_S}` in degrees `p`: from `p = 0` (the stable
/// Koszul model of `Γ(R)`) or from `p = 1` (the Čech model of `L(R)`).
#[derive(Debug, Clone)]
pub struct CechModel {
    ring: RingDescriptor,
    gens: Vec<RingElement>,
    // indices of the nonzero generators; columns through a zero one vanish
    active: Vec<usize>,
    augmented: bool,
}

fn require_cech_ring(ring: &RingDescriptor) -> Result<()> {
    let ok = match ring {
        RingDescriptor::Integers => true,
        RingDescriptor::Polynomial { vars, .. } => vars.len() == 1,
        _ => false,
    };
    if !ok {
        return Err(Error::Unsupported(format!(
            "Čech models are offered over Z and k[x], not {}",
            ring
        )));
    }
    Ok(())
}

/// Stable Koszul complex `R → ⊕R_{fᵢ} → ⋯ → R_{f₁⋯fₙ}`, a model of `Γ(R)`.
pub fn stable_koszul(ring: &RingDescriptor, fs: &[RingElement]) -> Result<CechModel> {
    CechModel::new(ring, fs, true)
}

/// Čech complex `⊕R_{fᵢ} → ⋯ → R_{f₁⋯fₙ}` (degrees `1..n`), a model of `L(R)`
/// up to shift.
pub fn cech_complex(ring: &RingDescriptor, fs: &[RingElement]) -> Result<CechModel> {
    CechModel::new(ring, fs, false)
}

fn popcount(s: u64) -> usize {
    s.count_ones() as usize
}

impl CechModel {
    fn new(ring: &RingDescriptor, fs: &[RingElement], augmented: bool) -> Result<Self> {
        require_cech_ring(ring)?;
        if fs.len() > MAX_CECH_GENERATORS {
            return Err(Error::Capacity {
                what: "generators for a Čech complex",
                limit: MAX_CECH_GENERATORS,
                got: fs.len(),
            });
        }
        for f in fs {
            ring.check(f)?;
        }
        let active = (0..fs.len()).filter(|&i| !ring.is_zero(&fs[i])).collect();
        Ok(CechModel { ring: ring.clone(), gens: fs.to_vec(), active, augmented })
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn is_augmented(&self) -> bool {
        self.augmented
    }

    fn m(&self) -> usize {
        self.active.len()
    }

    fn min_degree(&self) -> usize {
        if self.augmented {
            0
        } else {
            1
        }
    }

    /// Subsets of the active generators of size `p`, as bit masks in
    /// increasing order.
    fn column_masks(&self, p: usize) -> Vec<u64> {
        (0..1u64 << self.m()).filter(|&s| popcount(s) == p).collect()
    }

    fn product(&self, s: u64) -> RingElement {
        let fs: Vec<&RingElement> = (0..self.m())
            .filter(|&k| s & (1 << k) != 0)
            .map(|k| &self.gens[self.active[k]])
            .collect();
        self.ring.product(fs)
    }

    /// Generator indices (into the original list) of each column in degree `p`.
    pub fn columns(&self, p: usize) -> Vec<Vec<usize>> {
        if p < self.min_degree() {
            return vec![];
        }
        self.column_masks(p)
            .into_iter()
            .map(|s| (0..self.m()).filter(|&k| s & (1 << k) != 0).map(|k| self.active[k]).collect())
            .collect()
    }

    /// `R_{f_S}` for a set of generator indices.
    pub fn column_ring(&self, s: &[usize]) -> Result<RingDescriptor> {
        let f = self.ring.product(s.iter().map(|&i| &self.gens[i]));
        Ok(self.ring.localize(&f)?.ring)
    }

    /// The differential out of degree `p`, with entries ±1 for the canonical
    /// maps `R_{f_S} → R_{f_{S∪i}}`.
    pub fn differential(&self, p: usize) -> Matrix {
        let rows = if p + 1 >= self.min_degree() { self.column_masks(p + 1) } else { vec![] };
        let cols = if p >= self.min_degree() { self.column_masks(p) } else { vec![] };
        signed_coboundary(&self.ring, &cols, &rows)
    }

    /// Checks `d∘d = 0` over the top localization `R_{f₁⋯fₙ}`.
    pub fn check_dd(&self) -> Result<()> {
        let top = self.column_ring(&self.active)?;
        for p in 0..self.m() {
            let a = self.differential(p).map(|e| self.ring.map_into(&top, e))?;
            let b = self.differential(p + 1).map(|e| self.ring.map_into(&top, e))?;
            if !b.mul(&a, &top)?.is_zero(&top) {
                return Err(Error::Invalid(format!("d∘d ≠ 0 at degree {}", p)));
            }
        }
        Ok(())
    }

    /// Pairwise coprime base of the active generators, and for each base
    /// element the set of generators it divides (as a mask).
    fn base(&self) -> Vec<(RingElement, u64)> {
        let gens: Vec<RingElement> = self.active.iter().map(|&i| self.gens[i].clone()).collect();
        coprime_base(&self.ring, &gens)
            .into_iter()
            .map(|q| {
                let mask = (0..self.m())
                    .filter(|&k| !self.ring.is_unit(&self.ring.gcd(&q, &gens[k])))
                    .fold(0u64, |acc, k| acc | (1 << k));
                (q, mask)
            })
            .collect()
    }

    /// Cohomology of the model of `R`.
    pub fn cohomology(&self) -> Result<CechHomology> {
        let r = &self.ring;
        let m = self.m();
        let full = (1u64 << m) - 1;
        let mut raw: BTreeMap<usize, Vec<Piece>> = BTreeMap::new();
        if m == 0 {
            if self.augmented {
                raw.insert(0, vec![Piece::Localized { h: r.one(), rank: 1 }]);
            }
            return CechHomology::canonical(r, raw);
        }
        let base = self.base();
        let meets = |v: u64| move |s: u64| s & v != 0;
        if self.augmented {
            // constant part: the augmented simplex, which must be acyclic
            let constant = integer_betti(m, |_| true, 0)?;
            if constant.iter().any(|&b| b > 0) {
                return Err(Error::Invalid("augmented simplex is not acyclic".into()));
            }
            for (q, v) in &base {
                for (p, b) in integer_betti(m, meets(*v), 0)?.into_iter().enumerate() {
                    if b > 0 {
                        raw.entry(p).or_default().push(Piece::Quotient { h: q.clone(), rank: b });
                    }
                }
            }
        } else {
            // R_g sits in every column, g = product of base elements dividing all generators
            let g = r.product(base.iter().filter(|(_, v)| *v == full).map(|(q, _)| q));
            for (p, b) in integer_betti(m, |s| s != 0, 1)?.into_iter().enumerate() {
                if b > 0 {
                    raw.entry(p).or_default().push(Piece::Localized { h: g.clone(), rank: b });
                }
            }
            for (_, v) in base.iter().filter(|(_, v)| *v != full) {
                if integer_betti(m, meets(*v), 1)?.iter().any(|&b| b > 0) {
                    return Err(Error::Unsupported(
                        "Čech model with a non-split extension".into(),
                    ));
                }
            }
        }
        CechHomology::canonical(r, raw)
    }

    /// Cohomology of the model tensored with `R/(d)`, computed on the
    /// finite modules `R_{f_S}/(d) = R/(d_S)`, `d_S` the part of `d` prime to `f_S`.
    fn cohomology_mod(&self, d: &RingElement) -> Result<BTreeMap<usize, ModulePresentation>> {
        let r = &self.ring;
        let lo = self.min_degree();
        let rel = |p: usize| -> Vec<RingElement> {
            if p < lo || p > self.m() {
                return vec![];
            }
            self.column_masks(p)
                .into_iter()
                .map(|s| match r.split_coprime(d, &self.product(s)) {
                    Some((_, rest)) => rest,
                    None => r.zero(),
                })
                .collect()
        };
        let mut out = BTreeMap::new();
        for p in lo..=self.m() {
            let psi = if p > 0 { self.differential(p - 1) } else { Matrix::zeros(r, rel(p).len(), 0) };
            let h = subquotient_homology(r, &psi, &self.differential(p), &rel(p), &rel(p + 1))?;
            if !h.is_zero() {
                out.insert(p, h);
            }
        }
        Ok(out)
    }

    /// Cohomology of the model tensored with a finitely generated module.
    pub fn cohomology_with(&self, module: &ModulePresentation) -> Result<CechHomology> {
        let r = &self.ring;
        if module.ring != *r {
            return Err(Error::RingMismatch(format!("{} vs {}", module.ring, r)));
        }
        let mut raw: BTreeMap<usize, Vec<Piece>> = BTreeMap::new();
        if module.rank > 0 {
            for (p, ps) in self.cohomology()?.degrees {
                for piece in ps {
                    let scaled = match piece {
                        Piece::Localized { h, rank } => Piece::Localized { h, rank: rank * module.rank },
                        Piece::Quotient { h, rank } => Piece::Quotient { h, rank: rank * module.rank },
                        Piece::Finite(_) => unreachable!("free coefficients give no finite pieces"),
                    };
                    raw.entry(p).or_default().push(scaled);
                }
            }
        }
        for d in &module.divisors {
            for (p, h) in self.cohomology_mod(d)? {
                raw.entry(p).or_default().push(Piece::Finite(h));
            }
        }
        CechHomology::canonical(r, raw)
    }

    /// For the Čech model: every column `R_{f_S}` is an `R_{fᵢ}`-module for
    /// each `i ∈ S`, so the complex lies in `Loc(R_{fᵢ} | i)`.
    pub fn columns_invertible(&self) -> Result<bool> {
        for p in self.min_degree().max(1)..=self.m() {
            for s in self.columns(p) {
                let rs = self.column_ring(&s)?;
                for &i in &s {
                    let fi = self.ring.map_into(&rs, &self.gens[i])?;
                    if !rs.is_unit(&fi) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> Result<Value> {
        let mut cols = Map::new();
        for p in self.min_degree()..=self.m() {
            let rings = self
                .columns(p)
                .iter()
                .map(|s| Ok(Value::from(self.column_ring(s)?.to_string())))
                .collect::<Result<Vec<_>>>()?;
            cols.insert(p.to_string(), Value::Array(rings));
        }
        let gens: Vec<String> = self.gens.iter().map(|g| self.ring.format(g)).collect();
        Ok(json!({
            "ring": self.ring.to_json(),
            "gens": gens,
            "model": if self.augmented { "stable_koszul" } else { "cech" },
            "columns": cols,
        }))
    }
}

/// `d(e_S) = Σ_{i∉S} (−1)^{#{k∈S : k<i}} e_{S∪i}` from the listed source
/// subsets to the listed target subsets.
fn signed_coboundary(r: &RingDescriptor, cols: &[u64], rows: &[u64]) -> Matrix {
    let mut m = Matrix::zeros(r, rows.len(), cols.len());
    for (j, &s) in cols.iter().enumerate() {
        for (i, &t) in rows.iter().enumerate() {
            let extra = t & !s;
            if s & !t == 0 && extra.count_ones() == 1 {
                let below = popcount(s & (extra - 1));
                m.set(i, j, r.from_int(if below.is_multiple_of(2) { 1 } else { -1 }));
            }
        }
    }
    m
}

/// Betti numbers (by degree `p = |S|`, from 0) of the integer cochain
/// complex on the subsets of `{0..m}` selected by `keep` with `|S| ≥ min`.
/// Errors on torsion, which the coefficient modules here cannot absorb.
fn integer_betti(m: usize, keep: impl Fn(u64) -> bool, min: usize) -> Result<Vec<usize>> {
    let z = RingDescriptor::Integers;
    let cols = |p: usize| -> Vec<u64> {
        if p < min {
            return vec![];
        }
        (0..1u64 << m).filter(|&s| popcount(s) == p && keep(s)).collect()
    };
    // cohomological degree p ↦ homological degree −p
    let ranks: Vec<usize> = (0..=m).rev().map(|p| cols(p).len()).collect();
    let diffs = (0..m)
        .rev()
        .map(|p| signed_coboundary(&z, &cols(p), &cols(p + 1)))
        .collect();
    let c = ChainComplex::new(z, -(m as i64), ranks, diffs)?;
    let mut out = vec![0; m + 1];
    for (n, h) in homology(&c)? {
        if !h.divisors.is_empty() {
            return Err(Error::Unsupported("torsion in a combinatorial Čech complex".into()));
        }
        out[(-n) as usize] = h.rank;
    }
    Ok(out)
}

/// Refines nonzero elements to pairwise coprime non-units whose products
/// (up to units) recover every input: replace non-coprime `a, b` by
/// `g, a/g, b/g` with `g = gcd(a, b)` until none are left.
pub fn coprime_base(r: &RingDescriptor, xs: &[RingElement]) -> Vec<RingElement> {
    let mut base: Vec<RingElement> = Vec::new();
    let push = |base: &mut Vec<RingElement>, x: RingElement| {
        let (c, _) = r.normalize(&x);
        if !r.is_zero(&c) && !r.is_unit(&c) && !base.contains(&c) {
            base.push(c);
        }
    };
    for x in xs {
        push(&mut base, x.clone());
    }
    'outer: loop {
        for i in 0..base.len() {
            for j in i + 1..base.len() {
                let g = r.gcd(&base[i], &base[j]);
                if !r.is_unit(&g) {
                    let b = base.remove(j);
                    let a = base.remove(i);
                    let a1 = r.div_exact(&a, &g).expect("gcd divides");
                    let b1 = r.div_exact(&b, &g).expect("gcd divides");
                    push(&mut base, g);
                    push(&mut base, a1);
                    push(&mut base, b1);
                    continue 'outer;
                }
            }
        }
        break;
    }
    base.sort();
    base
}

/// `H^*_I(M)`, computed as the cohomology of the stable Koszul complex on
/// the generators of `I`, tensored with `M`.
pub fn local_cohomology(i: &RadicalIdeal, module: &ModulePresentation) -> Result<CechHomology> {
    stable_koszul(&i.ring, &i.gens)?.cohomology_with(module)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Field;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn z() -> RingDescriptor {
        RingDescriptor::Integers
    }

    fn ints(xs: &[i64]) -> Vec<RingElement> {
        xs.iter().map(|&x| z().from_int(x)).collect()
    }

    fn single(p: usize, piece: Piece) -> CechHomology {
        CechHomology { ring: z(), degrees: BTreeMap::from([(p, vec![piece])]) }
    }

    fn quotient(h: i64) -> Piece {
        Piece::Quotient { h: z().from_int(h), rank: 1 }
    }

    fn localized(h: i64) -> Piece {
        Piece::Localized { h: z().from_int(h), rank: 1 }
    }

    #[test]
    fn prime_gives_quotient_and_localization() {
        let g = stable_koszul(&z(), &ints(&[2])).unwrap().cohomology().unwrap();
        assert!(g.isomorphic(&single(1, quotient(2))).unwrap());
        assert_eq!(g.to_string(), "H^1 = Z[1/(2)]/Z");
        let l = cech_complex(&z(), &ints(&[2])).unwrap().cohomology().unwrap();
        assert!(l.isomorphic(&single(1, localized(2))).unwrap());
    }

    #[test]
    fn unit_ideal() {
        let g = stable_koszul(&z(), &ints(&[1])).unwrap().cohomology().unwrap();
        assert!(g.is_zero());
        let l = cech_complex(&z(), &ints(&[1])).unwrap().cohomology().unwrap();
        assert_eq!(l.to_string(), "H^1 = Z");
    }

    #[test]
    fn zero_generators() {
        let g = stable_koszul(&z(), &ints(&[0, 0])).unwrap().cohomology().unwrap();
        assert_eq!(g.to_string(), "H^0 = Z");
        assert!(cech_complex(&z(), &ints(&[0])).unwrap().cohomology().unwrap().is_zero());
    }

    #[test]
    fn polynomial_variable() {
        let r = RingDescriptor::qx("x");
        let x = r.parse("x").unwrap();
        let g = stable_koszul(&r, std::slice::from_ref(&x)).unwrap().cohomology().unwrap();
        assert_eq!(g.pieces(1), &[Piece::Quotient { h: x.clone(), rank: 1 }]);
        assert!(g.is_power_torsion(&x).unwrap());
        assert!(!g.is_invertible(&x).unwrap());
    }

    #[test]
    fn radical_invariance() {
        let lc = |xs: &[i64]| {
            local_cohomology(
                &RadicalIdeal { ring: z(), gens: ints(xs) },
                &ModulePresentation::free(&z(), 1),
            )
            .unwrap()
        };
        assert!(lc(&[2]).isomorphic(&lc(&[4])).unwrap());
        assert!(lc(&[6]).isomorphic(&lc(&[36])).unwrap());
        assert!(!lc(&[6]).isomorphic(&lc(&[2, 3])).unwrap());
        assert!(!lc(&[2]).isomorphic(&lc(&[3])).unwrap());
        assert!(!lc(&[2]).isomorphic(&lc(&[6])).unwrap());
    }

    #[test]
    fn two_generators_with_common_factor() {
        let fs = ints(&[6, 10]);
        assert_eq!(coprime_base(&z(), &fs), ints(&[2, 3, 5]));
        let g = stable_koszul(&z(), &fs).unwrap().cohomology().unwrap();
        assert!(g.isomorphic(&single(1, quotient(2))).unwrap());
        // Z[1/2]/Z is killed by powers of 6 and of 10, but not of 3
        assert!(g.is_power_torsion(&z().from_int(6)).unwrap());
        assert!(g.is_power_torsion(&z().from_int(10)).unwrap());
        assert!(!g.is_power_torsion(&z().from_int(3)).unwrap());
        let l = cech_complex(&z(), &fs).unwrap();
        assert!(l.cohomology().unwrap().isomorphic(&single(1, localized(2))).unwrap());
        assert!(l.columns_invertible().unwrap());
    }

    #[test]
    fn coprime_generators() {
        let fs = ints(&[2, 3]);
        assert!(stable_koszul(&z(), &fs).unwrap().cohomology().unwrap().is_zero());
        let l = cech_complex(&z(), &fs).unwrap().cohomology().unwrap();
        assert_eq!(l.to_string(), "H^1 = Z");
        // Z is neither 2- nor 3-invertible, though every column is
        assert!(!l.is_invertible(&z().from_int(2)).unwrap());
    }

    #[test]
    fn torsion_coefficients() {
        let i = RadicalIdeal { ring: z(), gens: ints(&[2]) };
        let m = ModulePresentation::new(&z(), 1, &ints(&[12])).unwrap();
        let h = local_cohomology(&i, &m).unwrap();
        assert_eq!(h.pieces(0), &[Piece::Finite(ModulePresentation::cyclic(&z(), &z().from_int(4)).unwrap())]);
        assert_eq!(h.pieces(1), &[quotient(2)]);
        let odd = ModulePresentation::cyclic(&z(), &z().from_int(9)).unwrap();
        assert!(local_cohomology(&i, &odd).unwrap().is_zero());
    }

    #[test]
    fn explicit_columns() {
        let c = stable_koszul(&z(), &ints(&[2, 3, 5])).unwrap();
        c.check_dd().unwrap();
        assert_eq!(c.columns(1), vec![vec![0], vec![1], vec![2]]);
        let j = c.to_json().unwrap();
        assert_eq!(j["columns"]["0"], json!(["Z"]));
        assert_eq!(j["columns"]["3"].as_array().unwrap().len(), 1);
        assert_eq!(c.differential(0).rows(), 3);
    }

    #[test]
    fn limits() {
        assert!(stable_koszul(&z(), &ints(&[2; 7])).unwrap_err().is_capacity());
        let q = RingDescriptor::polynomial(Field::Rationals, &["x", "y"]);
        assert!(matches!(stable_koszul(&q, &[]), Err(Error::Unsupported(_))));
    }

    fn gcd_all(xs: &[i64]) -> i64 {
        xs.iter().fold(0i64, |a, &b| a.gcd(&b))
    }

    // H^*_I(Z) and L depend only on g = gcd(I)
    fn oracle(xs: &[i64], augmented: bool) -> CechHomology {
        let g = gcd_all(xs);
        let degrees = match (g, augmented) {
            (0, true) => BTreeMap::from([(0, vec![localized(1)])]),
            (0, false) => BTreeMap::new(),
            (1, true) => BTreeMap::new(),
            (g, true) => BTreeMap::from([(1, vec![quotient(g)])]),
            (g, false) => BTreeMap::from([(1, vec![localized(g)])]),
        };
        CechHomology { ring: z(), degrees }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn matches_principal_oracle(xs in prop::collection::vec(-40i64..=40, 1..=4)) {
            for aug in [true, false] {
                let c = CechModel::new(&z(), &ints(&xs), aug).unwrap();
                c.check_dd().unwrap();
                let h = c.cohomology().unwrap();
                prop_assert!(h.isomorphic(&oracle(&xs, aug)).unwrap(), "{:?} {}: {}", xs, aug, h);
            }
        }

        #[test]
        fn torsion_part_is_primary(xs in prop::collection::vec(1i64..=30, 1..=3), d in 2i64..=60) {
            let i = RadicalIdeal { ring: z(), gens: ints(&xs) };
            let m = ModulePresentation::cyclic(&z(), &z().from_int(d)).unwrap();
            let h = local_cohomology(&i, &m).unwrap();
            let g = gcd_all(&xs);
            let mut e = 1;
            let mut rest = d;
            loop {
                let c = rest.gcd(&g);
                if c == 1 { break; }
                e *= c;
                rest /= c;
            }
            let expect = ModulePresentation::cyclic(&z(), &z().from_int(e)).unwrap();
            if e == 1 {
                prop_assert!(h.is_zero());
            } else {
                prop_assert_eq!(h.pieces(0), &[Piece::Finite(expect)]);
                prop_assert_eq!(h.degrees.len(), 1);
            }
        }
    }
}
