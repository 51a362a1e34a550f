//! Bounded complexes of finite free modules, homologically graded:
//! `∂ₙ : Cₙ → Cₙ₋₁`, matrices acting on column vectors.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::ring::{Matrix, RingDescriptor, RingElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    ring: RingDescriptor,
    lo: i64,
    ranks: Vec<usize>,
    // diffs[k] = ∂_{lo+1+k}
    diffs: Vec<Matrix>,
}

/// A degree-preserving map `fₙ : Cₙ → Dₙ`; missing degrees are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainMap {
    pub maps: BTreeMap<i64, Matrix>,
}

impl ChainComplex {
    /// `ranks[k]` is the rank in degree `lo + k`; `diffs[k]` is `∂_{lo+1+k}`.
    pub fn new(ring: RingDescriptor, lo: i64, ranks: Vec<usize>, diffs: Vec<Matrix>) -> Result<Self> {
        if ranks.is_empty() {
            return Err(Error::Invalid("a complex needs at least one degree".into()));
        }
        if diffs.len() + 1 != ranks.len() {
            return Err(Error::Invalid(format!(
                "{} degrees need {} differentials, got {}",
                ranks.len(),
                ranks.len() - 1,
                diffs.len()
            )));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.rows() != ranks[k] || d.cols() != ranks[k + 1] {
                return Err(Error::Invalid(format!(
                    "∂_{} is {}x{} but maps rank {} to rank {}",
                    lo + 1 + k as i64,
                    d.rows(),
                    d.cols(),
                    ranks[k + 1],
                    ranks[k]
                )));
            }
            for i in 0..d.rows() {
                for e in d.row(i) {
                    ring.check(e)?;
                }
            }
        }
        for k in 1..diffs.len() {
            let dd = diffs[k - 1].mul(&diffs[k], &ring)?;
            if !dd.is_zero(&ring) {
                return Err(Error::Invalid(format!(
                    "∂_{}∘∂_{} is not zero",
                    lo + k as i64,
                    lo + 1 + k as i64
                )));
            }
        }
        Ok(ChainComplex { ring, lo, ranks, diffs })
    }

    /// From differentials keyed by degree; `ranks` fills in degrees whose
    /// rank no matrix pins down.
    pub fn from_maps(
        ring: RingDescriptor,
        lo: i64,
        hi: i64,
        maps: &BTreeMap<i64, Matrix>,
        ranks: &BTreeMap<i64, usize>,
    ) -> Result<Self> {
        if hi < lo {
            return Err(Error::Invalid(format!("empty degree range [{}, {}]", lo, hi)));
        }
        for &n in maps.keys() {
            if n <= lo || n > hi {
                return Err(Error::Invalid(format!("∂_{} lies outside ({}, {}]", n, lo, hi)));
            }
        }
        let mut rk = Vec::new();
        for n in lo..=hi {
            let from_src = maps.get(&n).map(|m| m.cols());
            let from_tgt = maps.get(&(n + 1)).map(|m| m.rows());
            let given = ranks.get(&n).copied();
            let all: Vec<usize> = [from_src, from_tgt, given].into_iter().flatten().collect();
            if all.windows(2).any(|w| w[0] != w[1]) {
                return Err(Error::Invalid(format!("inconsistent ranks in degree {}", n)));
            }
            rk.push(all.first().copied().unwrap_or(0));
        }
        let diffs = (lo + 1..=hi)
            .map(|n| {
                let k = (n - lo) as usize;
                maps.get(&n)
                    .cloned()
                    .unwrap_or_else(|| Matrix::zeros(&ring, rk[k - 1], rk[k]))
            })
            .collect();
        ChainComplex::new(ring, lo, rk, diffs)
    }

    pub fn zero(ring: &RingDescriptor) -> Self {
        ChainComplex { ring: ring.clone(), lo: 0, ranks: vec![0], diffs: vec![] }
    }

    /// `R^rank` concentrated in `degree`.
    pub fn free(ring: &RingDescriptor, rank: usize, degree: i64) -> Self {
        ChainComplex { ring: ring.clone(), lo: degree, ranks: vec![rank], diffs: vec![] }
    }

    /// `R` in degree 0.
    pub fn unit(ring: &RingDescriptor) -> Self {
        ChainComplex::free(ring, 1, 0)
    }

    /// `R --f--> R` in degrees 1 → 0.
    pub fn koszul_single(ring: &RingDescriptor, f: &RingElement) -> Result<Self> {
        let m = Matrix::from_rows(1, 1, vec![vec![f.clone()]])?;
        ChainComplex::new(ring.clone(), 0, vec![1, 1], vec![m])
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.ranks.len() as i64 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi()
    }

    pub fn rank(&self, n: i64) -> usize {
        if n < self.lo || n > self.hi() {
            0
        } else {
            self.ranks[(n - self.lo) as usize]
        }
    }

    /// `∂ₙ`, a zero matrix outside the stored range.
    pub fn diff(&self, n: i64) -> Matrix {
        if n > self.lo && n <= self.hi() {
            self.diffs[(n - self.lo - 1) as usize].clone()
        } else {
            Matrix::zeros(&self.ring, self.rank(n - 1), self.rank(n))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }

    fn check_ring(&self, other: &ChainComplex) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!("{} vs {}", self.ring, other.ring)));
        }
        Ok(())
    }

    /// `Σᵏ C`: `(ΣᵏC)ₙ = Cₙ₋ₖ`, differential times `(−1)ᵏ`.
    pub fn shift(&self, k: i64) -> ChainComplex {
        let sign = if k.rem_euclid(2) == 1 { self.ring.from_int(-1) } else { self.ring.one() };
        ChainComplex {
            ring: self.ring.clone(),
            lo: self.lo + k,
            ranks: self.ranks.clone(),
            diffs: self.diffs.iter().map(|d| d.scale(&sign, &self.ring)).collect(),
        }
    }

    pub fn direct_sum(&self, other: &ChainComplex) -> Result<ChainComplex> {
        self.check_ring(other)?;
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        let ranks = (lo..=hi).map(|n| self.rank(n) + other.rank(n)).collect();
        let diffs = (lo + 1..=hi)
            .map(|n| block_diag(&self.ring, &self.diff(n), &other.diff(n)))
            .collect();
        ChainComplex::new(self.ring.clone(), lo, ranks, diffs)
    }

    /// Total complex with `∂(x⊗y) = ∂x⊗y + (−1)^|x| x⊗∂y`. In degree `n`
    /// the basis is ordered by the degree `p` of the left factor, then by
    /// left index, then right index.
    pub fn tensor(&self, other: &ChainComplex) -> Result<ChainComplex> {
        self.check_ring(other)?;
        let r = &self.ring;
        let lo = self.lo + other.lo;
        let hi = self.hi() + other.hi();
        // offsets[n][p] = position of the (p, n−p) block inside degree n
        let layout = |n: i64| -> (BTreeMap<i64, usize>, usize) {
            let mut off = BTreeMap::new();
            let mut total = 0;
            for p in self.degrees() {
                off.insert(p, total);
                total += self.rank(p) * other.rank(n - p);
            }
            (off, total)
        };
        let ranks: Vec<usize> = (lo..=hi).map(|n| layout(n).1).collect();
        let mut diffs = Vec::new();
        for n in lo + 1..=hi {
            let (src, ns) = layout(n);
            let (tgt, nt) = layout(n - 1);
            let mut m = Matrix::zeros(r, nt, ns);
            for p in self.degrees() {
                let q = n - p;
                let (rp, rq) = (self.rank(p), other.rank(q));
                if rp == 0 || rq == 0 {
                    continue;
                }
                let dc = self.diff(p);
                let dd = other.diff(q);
                let sign = if p.rem_euclid(2) == 1 { r.from_int(-1) } else { r.one() };
                for i in 0..rp {
                    for j in 0..rq {
                        let col = src[&p] + i * rq + j;
                        // ∂x ⊗ y lands in block (p−1, q)
                        if let Some(&base) = tgt.get(&(p - 1)) {
                            for k in 0..self.rank(p - 1) {
                                let e = dc.get(k, i);
                                if !r.is_zero(e) {
                                    let row = base + k * rq + j;
                                    m.set(row, col, r.add(m.get(row, col), e));
                                }
                            }
                        }
                        // ±x ⊗ ∂y lands in block (p, q−1)
                        let rq1 = other.rank(q - 1);
                        for l in 0..rq1 {
                            let e = dd.get(l, j);
                            if !r.is_zero(e) {
                                let row = tgt[&p] + i * rq1 + l;
                                m.set(row, col, r.add(m.get(row, col), &r.mul(&sign, e)));
                            }
                        }
                    }
                }
            }
            diffs.push(m);
        }
        ChainComplex::new(r.clone(), lo, ranks, diffs)
    }

    /// Extension of scalars along the canonical map into `target`
    /// (a localization of this complex's ring).
    pub fn base_change(&self, target: &RingDescriptor) -> Result<ChainComplex> {
        if *target == self.ring {
            return Ok(self.clone());
        }
        let diffs = self
            .diffs
            .iter()
            .map(|d| d.map(|e| self.ring.map_into(target, e)))
            .collect::<Result<_>>()?;
        ChainComplex::new(target.clone(), self.lo, self.ranks.clone(), diffs)
    }

    /// Mapping cone: `Cone(f)ₙ = Cₙ₋₁ ⊕ Dₙ`, `∂(c, d) = (−∂c, f(c) + ∂d)`.
    pub fn cone(f: &ChainMap, source: &ChainComplex, target: &ChainComplex) -> Result<ChainComplex> {
        source.check_ring(target)?;
        f.check(source, target)?;
        let r = &source.ring;
        let lo = (source.lo + 1).min(target.lo);
        let hi = (source.hi() + 1).max(target.hi());
        let ranks = (lo..=hi).map(|n| source.rank(n - 1) + target.rank(n)).collect();
        let mut diffs = Vec::new();
        for n in lo + 1..=hi {
            let (c1, d0) = (source.rank(n - 1), target.rank(n));
            let (c2, d1) = (source.rank(n - 2), target.rank(n - 1));
            let mut m = Matrix::zeros(r, c2 + d1, c1 + d0);
            let dc = source.diff(n - 1);
            let dd = target.diff(n);
            let fm = f.get(r, n - 1, source, target);
            for i in 0..c2 {
                for j in 0..c1 {
                    m.set(i, j, r.neg(dc.get(i, j)));
                }
            }
            for i in 0..d1 {
                for j in 0..c1 {
                    m.set(c2 + i, j, fm.get(i, j).clone());
                }
                for j in 0..d0 {
                    m.set(c2 + i, c1 + j, dd.get(i, j).clone());
                }
            }
            diffs.push(m);
        }
        ChainComplex::new(r.clone(), lo, ranks, diffs)
    }

    pub fn to_json(&self) -> Value {
        let mut diffs = Map::new();
        for n in self.lo + 1..=self.hi() {
            let d = self.diff(n);
            let rows: Vec<Vec<String>> = (0..d.rows())
                .map(|i| d.row(i).iter().map(|e| self.ring.format(e)).collect())
                .collect();
            diffs.insert(n.to_string(), json!(rows));
        }
        let ranks: Map<String, Value> = self
            .degrees()
            .map(|n| (n.to_string(), Value::from(self.rank(n).to_string())))
            .collect();
        json!({
            "ring": self.ring.to_json(),
            "lo": self.lo.to_string(),
            "hi": self.hi().to_string(),
            "differentials": diffs,
            "ranks": ranks,
        })
    }

    /// `{"ring":…,"lo":0,"hi":2,"differentials":{"1":[[…]]},"ranks":{"0":1}}`;
    /// `"ranks"` is optional and only needed where no matrix fixes a rank.
    pub fn from_json(v: &Value) -> Result<ChainComplex> {
        let ring = RingDescriptor::from_json(
            v.get("ring").ok_or_else(|| Error::Parse("complex needs a \"ring\"".into()))?,
        )?;
        let lo = json_int(v.get("lo"), "lo")?;
        let hi = json_int(v.get("hi"), "hi")?;
        let mut maps = BTreeMap::new();
        if let Some(d) = v.get("differentials") {
            let d = d
                .as_object()
                .ok_or_else(|| Error::Parse("\"differentials\" must be an object".into()))?;
            for (k, m) in d {
                let n: i64 = k.parse().map_err(|_| Error::Parse(format!("bad degree '{}'", k)))?;
                maps.insert(n, matrix_from_json(&ring, m)?);
            }
        }
        let mut ranks = BTreeMap::new();
        if let Some(r) = v.get("ranks") {
            let r = r
                .as_object()
                .ok_or_else(|| Error::Parse("\"ranks\" must be an object".into()))?;
            for (k, x) in r {
                let n: i64 = k.parse().map_err(|_| Error::Parse(format!("bad degree '{}'", k)))?;
                ranks.insert(n, json_int(Some(x), "rank")? as usize);
            }
        }
        ChainComplex::from_maps(ring, lo, hi, &maps, &ranks)
    }
}

impl ChainMap {
    pub fn new(maps: BTreeMap<i64, Matrix>) -> Self {
        ChainMap { maps }
    }

    fn get(&self, r: &RingDescriptor, n: i64, source: &ChainComplex, target: &ChainComplex) -> Matrix {
        self.maps
            .get(&n)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(r, target.rank(n), source.rank(n)))
    }

    /// Shapes match and `∂ f = f ∂` in every degree.
    pub fn check(&self, source: &ChainComplex, target: &ChainComplex) -> Result<()> {
        let r = &source.ring;
        for (&n, m) in &self.maps {
            if m.rows() != target.rank(n) || m.cols() != source.rank(n) {
                return Err(Error::Invalid(format!("chain map has the wrong shape in degree {}", n)));
            }
        }
        let lo = source.lo.min(target.lo);
        let hi = source.hi().max(target.hi());
        for n in lo..=hi + 1 {
            let a = target.diff(n).mul(&self.get(r, n, source, target), r)?;
            let b = self.get(r, n - 1, source, target).mul(&source.diff(n), r)?;
            if a != b {
                return Err(Error::Invalid(format!("not a chain map in degree {}", n)));
            }
        }
        Ok(())
    }
}

pub(crate) fn block_diag(r: &RingDescriptor, a: &Matrix, b: &Matrix) -> Matrix {
    let mut m = Matrix::zeros(r, a.rows() + b.rows(), a.cols() + b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            m.set(i, j, a.get(i, j).clone());
        }
    }
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            m.set(a.rows() + i, a.cols() + j, b.get(i, j).clone());
        }
    }
    m
}

pub(crate) fn json_int(v: Option<&Value>, what: &str) -> Result<i64> {
    let bad = || Error::Parse(format!("\"{}\" must be an integer", what));
    match v {
        Some(Value::Number(n)) => n.as_i64().ok_or_else(bad),
        Some(Value::String(s)) => s.trim().parse().map_err(|_| bad()),
        _ => Err(bad()),
    }
}

pub(crate) fn element_from_json(ring: &RingDescriptor, v: &Value) -> Result<RingElement> {
    match v {
        Value::String(s) => ring.parse(s),
        Value::Number(n) => ring.parse(&n.to_string()),
        _ => Err(Error::Parse(format!("bad ring element {}", v))),
    }
}

pub(crate) fn matrix_from_json(ring: &RingDescriptor, v: &Value) -> Result<Matrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("matrix must be a list of rows: {}", v)))?;
    let entries = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Parse(format!("matrix row must be a list: {}", row)))?
                .iter()
                .map(|e| element_from_json(ring, e))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let cols = entries.first().map_or(0, Vec::len);
    Matrix::from_rows(entries.len(), cols, entries)
}

/// `K(f₁,…,fₙ) = K(f₁) ⊗ ⋯ ⊗ K(fₙ)`, with `R` in degree 0 for `n = 0`.
pub fn koszul(ring: &RingDescriptor, fs: &[RingElement]) -> Result<ChainComplex> {
    let mut c = ChainComplex::unit(ring);
    for f in fs {
        ring.check(f)?;
        c = c.tensor(&ChainComplex::koszul_single(ring, f)?)?;
    }
    Ok(c)
}
