//! Finitely presented distributive lattices.
//!
//! A presentation either lists inequalities between terms (entailment is
//! then decided by enumerating two-valued models, which is complete because
//! finitely presented distributive lattices have enough points) or delegates
//! entailment to an external oracle.

mod finite;
mod json;
mod term;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

pub use finite::{birkhoff_roundtrip, FiniteLattice, PointPoset};
pub use term::LatticeTerm;

/// Default cap on generators for model enumeration.
pub const DEFAULT_CAP: usize = 24;

/// Entailment decided outside the lattice (e.g. by radical membership).
pub trait EntailmentOracle: Send + Sync + fmt::Debug {
    fn entails(&self, lhs: &LatticeTerm, rhs: &LatticeTerm) -> Result<bool>;

    /// Whether a generator outside the declared list is meaningful.
    fn accepts_generator(&self, _name: &str) -> bool {
        false
    }
}

#[derive(Debug, Clone)]
enum Mode {
    Relations(Vec<(LatticeTerm, LatticeTerm)>),
    Oracle(Arc<dyn EntailmentOracle>),
}

#[derive(Debug, Clone)]
pub struct DLatticePresentation {
    generators: Vec<String>,
    mode: Mode,
    cap: usize,
    models: OnceLock<Vec<u64>>,
}

/// A two-valued model of a presentation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub valuation: BTreeMap<String, bool>,
}

impl LatticePoint {
    pub fn eval(&self, t: &LatticeTerm) -> bool {
        t.clauses()
            .iter()
            .any(|c| c.iter().all(|g| self.valuation.get(g).copied().unwrap_or(false)))
    }

    /// Generators sent to 1.
    pub fn true_set(&self) -> BTreeSet<&str> {
        self.valuation
            .iter()
            .filter(|(_, &v)| v)
            .map(|(k, _)| k.as_str())
            .collect()
    }
}

/// A finitely generated lattice ideal, standing for the join of its terms
/// in the ideal completion.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FrameElement {
    pub terms: Vec<LatticeTerm>,
}

impl FrameElement {
    pub fn new(terms: Vec<LatticeTerm>) -> Self {
        FrameElement { terms }
    }

    pub fn join_term(&self) -> LatticeTerm {
        LatticeTerm::or_all(&self.terms)
    }
}

/// Compiled term: one bit mask per conjunction.
#[derive(Debug, Clone)]
pub(crate) struct Masks(pub(crate) Vec<u64>);

impl Masks {
    pub(crate) fn eval(&self, v: u64) -> bool {
        self.0.iter().any(|&c| c & !v == 0)
    }

    /// Antichain form: sorted, no clause containing another.
    fn reduced(mut cs: Vec<u64>) -> Masks {
        cs.sort_by_key(|c| (c.count_ones(), *c));
        cs.dedup();
        let mut out: Vec<u64> = Vec::with_capacity(cs.len());
        for c in cs {
            if !out.iter().any(|&d| d & !c == 0) {
                out.push(c);
            }
        }
        out.sort_unstable();
        Masks(out)
    }

    pub(crate) fn and(&self, o: &Masks) -> Masks {
        Masks::reduced(self.0.iter().flat_map(|a| o.0.iter().map(move |b| a | b)).collect())
    }

    pub(crate) fn or(&self, o: &Masks) -> Masks {
        Masks::reduced(self.0.iter().chain(&o.0).copied().collect())
    }
}

impl DLatticePresentation {
    pub fn new(generators: Vec<String>, relations: Vec<(LatticeTerm, LatticeTerm)>) -> Result<Self> {
        let p = DLatticePresentation {
            generators,
            mode: Mode::Relations(Vec::new()),
            cap: DEFAULT_CAP,
            models: OnceLock::new(),
        };
        p.check_distinct()?;
        let rels = relations
            .into_iter()
            .map(|(a, b)| Ok((p.normalize(&a)?, p.normalize(&b)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(DLatticePresentation {
            mode: Mode::Relations(rels),
            ..p
        })
    }

    /// The free distributive lattice on the given names.
    pub fn free<S: AsRef<str>>(generators: &[S]) -> Result<Self> {
        DLatticePresentation::new(
            generators.iter().map(|g| g.as_ref().to_string()).collect(),
            Vec::new(),
        )
    }

    pub fn with_oracle(generators: Vec<String>, oracle: Arc<dyn EntailmentOracle>) -> Result<Self> {
        let p = DLatticePresentation {
            generators,
            mode: Mode::Oracle(oracle),
            cap: DEFAULT_CAP,
            models: OnceLock::new(),
        };
        p.check_distinct()?;
        Ok(p)
    }

    /// Override the enumeration cap.
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap.min(63);
        self.models = OnceLock::new();
        self
    }

    fn check_distinct(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for g in &self.generators {
            if !seen.insert(g) {
                return Err(Error::Presentation(format!("duplicate generator '{}'", g)));
            }
        }
        Ok(())
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Relations, or `None` in oracle mode.
    pub fn relations(&self) -> Option<&[(LatticeTerm, LatticeTerm)]> {
        match &self.mode {
            Mode::Relations(r) => Some(r),
            Mode::Oracle(_) => None,
        }
    }

    pub fn oracle(&self) -> Option<&Arc<dyn EntailmentOracle>> {
        match &self.mode {
            Mode::Oracle(o) => Some(o),
            Mode::Relations(_) => None,
        }
    }

    pub fn is_oracle(&self) -> bool {
        matches!(self.mode, Mode::Oracle(_))
    }

    fn knows(&self, g: &str) -> bool {
        self.generators.iter().any(|x| x == g)
            || self.oracle().is_some_and(|o| o.accepts_generator(g))
    }

    /// Antichain normal form; rejects unknown generators.
    pub fn normalize(&self, t: &LatticeTerm) -> Result<LatticeTerm> {
        for g in t.generators() {
            if !self.knows(g) {
                return Err(Error::Presentation(format!("unknown generator '{}'", g)));
            }
        }
        Ok(t.normalize())
    }

    pub fn meet(&self, a: &LatticeTerm, b: &LatticeTerm) -> Result<LatticeTerm> {
        Ok(self.normalize(a)?.and(&self.normalize(b)?))
    }

    pub fn join(&self, a: &LatticeTerm, b: &LatticeTerm) -> Result<LatticeTerm> {
        Ok(self.normalize(a)?.or(&self.normalize(b)?))
    }

    fn bit(&self, i: usize) -> u64 {
        // first generator is the most significant, so counting order is lexicographic
        1u64 << (self.generators.len() - 1 - i)
    }

    pub(crate) fn compile(&self, t: &LatticeTerm) -> Result<Masks> {
        let mut out = Vec::with_capacity(t.clauses().len());
        for c in t.clauses() {
            let mut m = 0u64;
            for g in c {
                let i = self
                    .generators
                    .iter()
                    .position(|x| x == g)
                    .ok_or_else(|| Error::Presentation(format!("unknown generator '{}'", g)))?;
                m |= self.bit(i);
            }
            out.push(m);
        }
        Ok(Masks(out))
    }

    fn check_cap(&self) -> Result<()> {
        if self.generators.len() > self.cap {
            return Err(Error::Capacity {
                what: "generators for model enumeration",
                limit: self.cap,
                got: self.generators.len(),
            });
        }
        Ok(())
    }

    /// All satisfying valuations as bit masks, in lexicographic order.
    pub(crate) fn model_masks(&self) -> Result<&[u64]> {
        let rels = match &self.mode {
            Mode::Relations(r) => r,
            Mode::Oracle(_) => {
                return Err(Error::Unsupported(
                    "points of an oracle-backed lattice are not enumerable".into(),
                ))
            }
        };
        if let Some(m) = self.models.get() {
            return Ok(m);
        }
        self.check_cap()?;
        let compiled = rels
            .iter()
            .map(|(a, b)| Ok((self.compile(a)?, self.compile(b)?)))
            .collect::<Result<Vec<_>>>()?;
        let n = self.generators.len();
        let models: Vec<u64> = (0..(1u64 << n))
            .filter(|&v| compiled.iter().all(|(a, b)| !a.eval(v) || b.eval(v)))
            .collect();
        Ok(self.models.get_or_init(|| models))
    }

    pub(crate) fn decompile(&self, m: &Masks) -> LatticeTerm {
        LatticeTerm::from_clauses(m.0.iter().map(|&c| {
            self.generators
                .iter()
                .enumerate()
                .filter(|(i, _)| c & self.bit(*i) != 0)
                .map(|(_, g)| g.clone())
                .collect()
        }))
    }

    pub(crate) fn mask_to_point(&self, v: u64) -> LatticePoint {
        LatticePoint {
            valuation: self
                .generators
                .iter()
                .enumerate()
                .map(|(i, g)| (g.clone(), v & self.bit(i) != 0))
                .collect(),
        }
    }

    /// `lhs ≤ rhs` in the presented lattice.
    pub fn entails(&self, lhs: &LatticeTerm, rhs: &LatticeTerm) -> Result<bool> {
        match &self.mode {
            Mode::Oracle(o) => o.entails(&self.normalize(lhs)?, &self.normalize(rhs)?),
            Mode::Relations(_) => {
                let a = self.compile(lhs)?;
                let b = self.compile(rhs)?;
                Ok(self.model_masks()?.iter().all(|&v| !a.eval(v) || b.eval(v)))
            }
        }
    }

    /// The models where `t` holds, packed 64 to a word in model order.
    pub(crate) fn extension(&self, t: &LatticeTerm) -> Result<Vec<u64>> {
        let c = self.compile(t)?;
        let models = self.model_masks()?;
        let mut out = vec![0u64; models.len().div_ceil(64)];
        for (i, &v) in models.iter().enumerate() {
            if c.eval(v) {
                out[i / 64] |= 1 << (i % 64);
            }
        }
        Ok(out)
    }

    pub fn equivalent(&self, a: &LatticeTerm, b: &LatticeTerm) -> Result<bool> {
        Ok(self.entails(a, b)? && self.entails(b, a)?)
    }

    /// Points (two-valued models), lexicographic in the generator order.
    pub fn points(&self) -> Result<Vec<LatticePoint>> {
        Ok(self
            .model_masks()?
            .iter()
            .map(|&v| self.mask_to_point(v))
            .collect())
    }

    /// Comparison of finitely generated ideals.
    pub fn frame_leq(&self, a: &FrameElement, b: &FrameElement) -> Result<bool> {
        let join = b.join_term();
        for t in &a.terms {
            if !self.entails(t, &join)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The lattice is trivial (TOP ≤ BOTTOM).
    pub fn is_inconsistent(&self) -> Result<bool> {
        self.entails(&LatticeTerm::top(), &LatticeTerm::bottom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> LatticeTerm {
        s.parse().unwrap()
    }

    fn pres(gens: &[&str], rels: &[(&str, &str)]) -> DLatticePresentation {
        DLatticePresentation::new(
            gens.iter().map(|g| g.to_string()).collect(),
            rels.iter().map(|(a, b)| (t(a), t(b))).collect(),
        )
        .unwrap()
    }

    #[test]
    fn entailment_examples() {
        let free = pres(&["a", "b"], &[]);
        assert!(free.entails(&t("a&b"), &t("a")).unwrap());
        assert!(!free.entails(&t("a"), &t("b")).unwrap());
        let disjoint = pres(&["a", "b"], &[("a&b", "BOTTOM")]);
        assert!(disjoint.entails(&t("a&b"), &LatticeTerm::bottom()).unwrap());
    }

    #[test]
    fn unknown_generator_is_rejected() {
        let free = pres(&["a"], &[]);
        assert!(matches!(free.normalize(&t("z")), Err(Error::Presentation(_))));
        assert!(DLatticePresentation::free(&["a", "a"]).is_err());
    }

    #[test]
    fn point_counts() {
        assert_eq!(pres(&["a", "b"], &[]).points().unwrap().len(), 4);
        assert_eq!(pres(&["a", "b"], &[("TOP", "BOTTOM")]).points().unwrap().len(), 0);
        let le = pres(&["a", "b"], &[("a", "b")]);
        let pts = le.points().unwrap();
        assert_eq!(pts.len(), 3);
        assert!(pts.iter().all(|p| !(p.valuation["a"] && !p.valuation["b"])));
        // lexicographic: 00, 01, 11
        assert_eq!(pts[1].true_set(), ["b"].into_iter().collect());
    }

    #[test]
    fn frame_comparisons() {
        let free = pres(&["a", "b"], &[]);
        let fe = |xs: &[&str]| FrameElement::new(xs.iter().map(|s| t(s)).collect());
        assert!(free.frame_leq(&fe(&["a"]), &fe(&["a", "b"])).unwrap());
        assert!(!free.frame_leq(&fe(&["a | b"]), &fe(&["a"])).unwrap());
        assert!(free.frame_leq(&fe(&["a", "b"]), &fe(&["a | b"])).unwrap());
    }

    #[test]
    fn capacity_is_enforced() {
        let names: Vec<String> = (0..5).map(|i| format!("g{}", i)).collect();
        let p = DLatticePresentation::new(names, vec![]).unwrap().with_cap(4);
        assert!(p.points().unwrap_err().is_capacity());
    }
}
