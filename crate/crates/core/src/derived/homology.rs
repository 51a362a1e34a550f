//! Homology over a PID by Smith normal form.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use super::complex::{element_from_json, json_int, ChainComplex};
use crate::error::{Error, Result};
use crate::ring::{smith_normal_form, Matrix, RingDescriptor, RingElement};

/// `R^rank ⊕ R/(d₁) ⊕ ⋯`, with `dᵢ` nonzero non-units and `d₁ | d₂ | ⋯`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModulePresentation {
    pub ring: RingDescriptor,
    pub rank: usize,
    pub divisors: Vec<RingElement>,
}

impl ModulePresentation {
    /// Canonical form of `R^rank ⊕ ⊕ R/(dᵢ)` for arbitrary `dᵢ` (zeros add
    /// to the rank, units vanish, the rest is put in divisibility order).
    pub fn new(ring: &RingDescriptor, rank: usize, divisors: &[RingElement]) -> Result<Self> {
        let n = divisors.len();
        let mut m = Matrix::zeros(ring, n, n);
        for (i, d) in divisors.iter().enumerate() {
            ring.check(d)?;
            m.set(i, i, d.clone());
        }
        let snf = smith_normal_form(ring, &m)?;
        let mut rank = rank + (n - snf.rank);
        let mut ds = Vec::new();
        for d in snf.invariant_factors() {
            if ring.is_zero(&d) {
                rank += 1;
            } else if !ring.is_unit(&d) {
                ds.push(d);
            }
        }
        Ok(ModulePresentation { ring: ring.clone(), rank, divisors: ds })
    }

    pub fn zero(ring: &RingDescriptor) -> Self {
        ModulePresentation { ring: ring.clone(), rank: 0, divisors: vec![] }
    }

    pub fn free(ring: &RingDescriptor, rank: usize) -> Self {
        ModulePresentation { ring: ring.clone(), rank, divisors: vec![] }
    }

    pub fn cyclic(ring: &RingDescriptor, d: &RingElement) -> Result<Self> {
        ModulePresentation::new(ring, 0, std::slice::from_ref(d))
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.divisors.is_empty()
    }

    pub fn is_torsion(&self) -> bool {
        self.rank == 0
    }

    /// Direct sum, re-canonicalized.
    pub fn sum(&self, other: &ModulePresentation) -> Result<Self> {
        let mut ds = self.divisors.clone();
        ds.extend(other.divisors.iter().cloned());
        ModulePresentation::new(&self.ring, self.rank + other.rank, &ds)
    }

    pub fn to_json(&self) -> Value {
        let ds: Vec<String> = self.divisors.iter().map(|d| self.ring.format(d)).collect();
        json!({ "rank": self.rank.to_string(), "divisors": ds })
    }

    pub fn from_json(ring: &RingDescriptor, v: &Value) -> Result<Self> {
        let rank = json_int(v.get("rank"), "rank")?;
        if rank < 0 {
            return Err(Error::Parse("rank must be nonnegative".into()));
        }
        let ds = match v.get("divisors") {
            None => vec![],
            Some(d) => d
                .as_array()
                .ok_or_else(|| Error::Parse("\"divisors\" must be a list".into()))?
                .iter()
                .map(|e| element_from_json(ring, e))
                .collect::<Result<Vec<_>>>()?,
        };
        ModulePresentation::new(ring, rank as usize, &ds)
    }
}

impl fmt::Display for ModulePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self
            .divisors
            .iter()
            .map(|d| format!("{}/({})", self.ring, self.ring.format(d)))
            .collect();
        match self.rank {
            0 => {}
            1 => parts.push(self.ring.to_string()),
            r => parts.push(format!("{}^{}", self.ring, r)),
        }
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// `Hₙ = ker ∂ₙ / im ∂ₙ₊₁ ≅ R^{mₙ − rₙ − rₙ₊₁} ⊕ ⊕ R/(dᵢ)` with `dᵢ` the
/// non-unit invariant factors of `∂ₙ₊₁` (the kernel of `∂ₙ` is a summand).
pub fn homology(c: &ChainComplex) -> Result<BTreeMap<i64, ModulePresentation>> {
    let r = c.ring();
    r.require_pid()?;
    let mut snfs = BTreeMap::new();
    for n in c.lo()..=c.hi() + 1 {
        snfs.insert(n, smith_normal_form(r, &c.diff(n))?);
    }
    let mut out = BTreeMap::new();
    for n in c.degrees() {
        let rn = snfs[&n].rank;
        let next = &snfs[&(n + 1)];
        let free = c.rank(n) - rn - next.rank;
        let ds: Vec<RingElement> = next
            .invariant_factors()
            .into_iter()
            .filter(|d| !r.is_unit(d))
            .collect();
        out.insert(n, ModulePresentation { ring: r.clone(), rank: free, divisors: ds });
    }
    Ok(out)
}

/// Columns forming a basis of `ker m`.
pub(crate) fn kernel_basis(r: &RingDescriptor, m: &Matrix) -> Result<Matrix> {
    let snf = smith_normal_form(r, m)?;
    let k = m.cols() - snf.rank;
    let mut out = Matrix::zeros(r, m.cols(), k);
    for j in 0..k {
        for i in 0..m.cols() {
            out.set(i, j, snf.v.get(i, snf.rank + j).clone());
        }
    }
    Ok(out)
}

/// Some `x` with `g x = b` (column by column); errors if none exists.
pub(crate) fn solve(r: &RingDescriptor, g: &Matrix, b: &Matrix) -> Result<Matrix> {
    let snf = smith_normal_form(r, g)?;
    let ub = snf.u.mul(b, r)?;
    let mut y = Matrix::zeros(r, g.cols(), b.cols());
    for j in 0..b.cols() {
        for i in 0..ub.rows() {
            let e = ub.get(i, j);
            if i < snf.rank {
                let q = r
                    .div_exact(e, snf.d.get(i, i))
                    .ok_or_else(|| Error::Invalid("linear system has no solution".into()))?;
                y.set(i, j, q);
            } else if !r.is_zero(e) {
                return Err(Error::Invalid("linear system has no solution".into()));
            }
        }
    }
    snf.v.mul(&y, r)
}

fn hcat(r: &RingDescriptor, a: &Matrix, b: &Matrix) -> Matrix {
    let mut m = Matrix::zeros(r, a.rows(), a.cols() + b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            m.set(i, j, a.get(i, j).clone());
        }
        for j in 0..b.cols() {
            m.set(i, a.cols() + j, b.get(i, j).clone());
        }
    }
    m
}

fn diag(r: &RingDescriptor, ds: &[RingElement]) -> Matrix {
    let mut m = Matrix::zeros(r, ds.len(), ds.len());
    for (i, d) in ds.iter().enumerate() {
        m.set(i, i, d.clone());
    }
    m
}

/// Homology at the middle of `M' → M → M''` where each module is
/// `Rᵏ/(diagonal relations)` and the maps are matrices on the free covers
/// that respect the relations:
/// `{x : φx ∈ N''} / (N + im ψ)`.
pub(crate) fn subquotient_homology(
    r: &RingDescriptor,
    psi: &Matrix,
    phi: &Matrix,
    rel: &[RingElement],
    next_rel: &[RingElement],
) -> Result<ModulePresentation> {
    let k = rel.len();
    // Z = projection of ker [φ | −D''] to the first k coordinates
    let neg_next: Vec<RingElement> = next_rel.iter().map(|d| r.neg(d)).collect();
    let big = hcat(r, phi, &diag(r, &neg_next));
    let kb = kernel_basis(r, &big)?;
    let mut g = Matrix::zeros(r, k, kb.cols());
    for i in 0..k {
        for j in 0..kb.cols() {
            g.set(i, j, kb.get(i, j).clone());
        }
    }
    // B = N + im ψ, pulled back along g : R^m ↠ Z
    let b = hcat(r, &diag(r, rel), psi);
    let x = solve(r, &g, &b)?;
    let rels = hcat(r, &kernel_basis(r, &g)?, &x);
    let snf = smith_normal_form(r, &rels)?;
    let free = g.cols() - snf.rank;
    ModulePresentation::new(r, free, &snf.invariant_factors())
}
