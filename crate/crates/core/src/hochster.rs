//! Opposite lattices and the point bijection between a lattice and its opposite.
//!
//! For a spectral space with lattice of quasi-compact opens `L`, the
//! opposite lattice `L^op` presents the Hochster dual space. Points of `L`
//! and `L^op` correspond by complementing valuations.

use std::collections::HashSet;
use std::sync::Arc;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::lattice::{DLatticePresentation, EntailmentOracle, FiniteLattice, LatticePoint, LatticeTerm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Original,
    Opposite,
}

impl Orientation {
    pub fn flipped(self) -> Orientation {
        match self {
            Orientation::Original => Orientation::Opposite,
            Orientation::Opposite => Orientation::Original,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Orientation::Original => "original",
            Orientation::Opposite => "opposite",
        }
    }
}

/// A lattice read in either orientation. Entailment in the opposite is
/// `t1 ≤ t2 ⇔ flip(t2) ≤ flip(t1)` in the original.
#[derive(Debug, Clone)]
pub struct DualLattice {
    base: DLatticePresentation,
    orientation: Orientation,
}

#[derive(Debug)]
struct FlippedOracle(Arc<dyn EntailmentOracle>);

impl EntailmentOracle for FlippedOracle {
    fn entails(&self, lhs: &LatticeTerm, rhs: &LatticeTerm) -> Result<bool> {
        self.0.entails(&rhs.flip(), &lhs.flip())
    }

    fn accepts_generator(&self, name: &str) -> bool {
        self.0.accepts_generator(name)
    }
}

/// The opposite of `l`.
pub fn dual_lattice(l: &DLatticePresentation) -> DualLattice {
    DualLattice {
        base: l.clone(),
        orientation: Orientation::Opposite,
    }
}

/// The opposite presentation as a presentation in its own right. With
/// relations the flipped inequalities `flip(b) ≤ flip(a)` present it;
/// with an oracle, queries are flipped and forwarded.
pub fn opposite_presentation(l: &DLatticePresentation) -> Result<DLatticePresentation> {
    let p = match (l.relations(), l.oracle()) {
        (Some(rels), _) => DLatticePresentation::new(
            l.generators().to_vec(),
            rels.iter().map(|(a, b)| (b.flip(), a.flip())).collect(),
        )?,
        (None, Some(o)) => DLatticePresentation::with_oracle(
            l.generators().to_vec(),
            Arc::new(FlippedOracle(o.clone())),
        )?,
        (None, None) => unreachable!("a presentation has relations or an oracle"),
    };
    Ok(p.with_cap(l.cap()))
}

impl DualLattice {
    pub fn original(l: &DLatticePresentation) -> DualLattice {
        DualLattice {
            base: l.clone(),
            orientation: Orientation::Original,
        }
    }

    pub fn base(&self) -> &DLatticePresentation {
        &self.base
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn dual(&self) -> DualLattice {
        DualLattice {
            base: self.base.clone(),
            orientation: self.orientation.flipped(),
        }
    }

    pub fn entails(&self, lhs: &LatticeTerm, rhs: &LatticeTerm) -> Result<bool> {
        match self.orientation {
            Orientation::Original => self.base.entails(lhs, rhs),
            Orientation::Opposite => self.base.entails(&rhs.flip(), &lhs.flip()),
        }
    }

    /// The lattice in its current orientation as a presentation.
    pub fn presentation(&self) -> Result<DLatticePresentation> {
        match self.orientation {
            Orientation::Original => Ok(self.base.clone()),
            Orientation::Opposite => opposite_presentation(&self.base),
        }
    }

    /// `{"generators":…,"relations":…,"orientation":…}` where the relations
    /// present the lattice in its current orientation.
    pub fn to_json(&self) -> Result<Value> {
        let mut v = self.presentation()?.to_json()?;
        v["orientation"] = Value::from(self.orientation.as_str());
        Ok(v)
    }

    pub fn from_json(v: &Value) -> Result<DualLattice> {
        let p = DLatticePresentation::from_json(v)?;
        match v.get("orientation").map(|o| o.as_str()) {
            None | Some(Some("original")) => Ok(DualLattice::original(&p)),
            Some(Some("opposite")) => Ok(DualLattice {
                base: opposite_presentation(&p)?,
                orientation: Orientation::Opposite,
            }),
            Some(_) => Err(Error::Parse(format!(
                "orientation must be \"original\" or \"opposite\": {}",
                v["orientation"]
            ))),
        }
    }
}

/// Checks that the opposite of the opposite has the same entailment as `l`
/// on every pair from the normal-form universe: all terms on the generators
/// when there are at most four, the elements of `l` otherwise.
pub fn double_dual_check(l: &DLatticePresentation) -> Result<bool> {
    if l.relations().is_none() {
        return Err(Error::Unsupported(
            "double dual check needs a relations-mode lattice".into(),
        ));
    }
    let dd = opposite_presentation(&opposite_presentation(l)?)?;
    let universe = if l.generators().len() <= 4 {
        FiniteLattice::enumerate(&DLatticePresentation::free(l.generators())?)?
    } else {
        FiniteLattice::enumerate(l)?
    };
    let terms = universe.elements();
    let ours = terms.iter().map(|t| l.extension(t)).collect::<Result<Vec<_>>>()?;
    let theirs = terms.iter().map(|t| dd.extension(t)).collect::<Result<Vec<_>>>()?;
    let leq = |x: &[u64], y: &[u64]| x.iter().zip(y).all(|(a, b)| a & !b == 0);
    for i in 0..terms.len() {
        for j in 0..terms.len() {
            if leq(&ours[i], &ours[j]) != leq(&theirs[i], &theirs[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Pairs each point `v` of `l` with the complementary valuation, which is a
/// point of the opposite lattice.
pub fn dual_points(l: &DLatticePresentation) -> Result<Vec<(LatticePoint, LatticePoint)>> {
    let op = opposite_presentation(l)?;
    let ours = l.points()?;
    let theirs: HashSet<LatticePoint> = op.points()?.into_iter().collect();
    let mut out = Vec::with_capacity(ours.len());
    for v in ours {
        let w = LatticePoint {
            valuation: v.valuation.iter().map(|(g, &b)| (g.clone(), !b)).collect(),
        };
        if !theirs.contains(&w) {
            return Err(Error::Invalid(format!(
                "complement of a point is not a point of the opposite: {:?}",
                w.true_set()
            )));
        }
        out.push((v, w));
    }
    if out.len() != theirs.len() {
        return Err(Error::Invalid(format!(
            "{} points against {} points of the opposite",
            out.len(),
            theirs.len()
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> LatticeTerm {
        s.parse().unwrap()
    }

    fn pres(gens: &[&str], rels: &[(&str, &str)]) -> DLatticePresentation {
        DLatticePresentation::new(
            gens.iter().map(|s| s.to_string()).collect(),
            rels.iter().map(|(a, b)| (t(a), t(b))).collect(),
        )
        .unwrap()
    }

    #[test]
    fn order_reverses() {
        let l = pres(&["a", "b"], &[("a", "b")]);
        let d = dual_lattice(&l);
        assert!(d.entails(&t("b"), &t("a")).unwrap());
        assert!(!d.entails(&t("a"), &t("b")).unwrap());
        assert!(d.entails(&t("TOP"), &t("a")).unwrap() == l.entails(&t("a"), &t("BOTTOM")).unwrap());
        let m = d.presentation().unwrap();
        assert!(m.entails(&t("b"), &t("a")).unwrap());
        assert!(d.dual().entails(&t("a"), &t("b")).unwrap());
    }

    #[test]
    fn free_dual_is_free() {
        let l = DLatticePresentation::free(&["a", "b"]).unwrap();
        let d = opposite_presentation(&l).unwrap();
        assert_eq!(FiniteLattice::enumerate(&d).unwrap().len(), 6);
        assert_eq!(d.points().unwrap().len(), 4);
    }

    #[test]
    fn double_dual() {
        assert!(double_dual_check(&pres(&["a"], &[])).unwrap());
        assert!(double_dual_check(&pres(&["a", "b"], &[("a&b", "BOTTOM")])).unwrap());
        assert!(double_dual_check(&pres(&["a", "b", "c"], &[("a", "b"), ("b", "c")])).unwrap());
    }

    #[test]
    fn point_pairs() {
        let chain = pres(&["a"], &[]);
        assert_eq!(dual_points(&chain).unwrap().len(), 2);
        let free2 = pres(&["a", "b"], &[]);
        assert_eq!(dual_points(&free2).unwrap().len(), 4);
        let trivial = pres(&["a"], &[("TOP", "BOTTOM")]);
        assert!(dual_points(&trivial).unwrap().is_empty());
        let rel = pres(&["a", "b"], &[("a", "b")]);
        for (v, w) in dual_points(&rel).unwrap() {
            assert_eq!(v.valuation.len(), w.valuation.len());
        }
    }

    #[test]
    fn json_orientation() {
        let l = pres(&["a", "b"], &[("a", "b")]);
        let v = dual_lattice(&l).to_json().unwrap();
        assert_eq!(v["orientation"], "opposite");
        let back = DualLattice::from_json(&v).unwrap();
        assert!(back.entails(&t("b"), &t("a")).unwrap());
        assert!(back.dual().entails(&t("a"), &t("b")).unwrap());
    }
}
