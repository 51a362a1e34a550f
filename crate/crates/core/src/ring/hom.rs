//! Ring homomorphisms given by the images of the canonical generators.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::{RingDescriptor, RingElement};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingHom {
    source: RingDescriptor,
    target: RingDescriptor,
    images: BTreeMap<String, RingElement>,
}

impl RingHom {
    /// Build a homomorphism from variable images, checking that the
    /// source's defining relations are respected.
    pub fn new(
        source: RingDescriptor,
        target: RingDescriptor,
        images: BTreeMap<String, RingElement>,
    ) -> Result<Self> {
        for v in source.vars() {
            let img = images
                .get(v)
                .ok_or_else(|| Error::Invalid(format!("no image given for variable '{}'", v)))?;
            target.check(img)?;
        }
        for k in images.keys() {
            if !source.vars().contains(k) {
                return Err(Error::Invalid(format!("'{}' is not a variable of {}", k, source)));
            }
        }
        let hom = RingHom { source, target, images };
        hom.check_relations()?;
        Ok(hom)
    }

    pub fn identity(ring: &RingDescriptor) -> Result<Self> {
        let images = ring
            .vars()
            .iter()
            .map(|v| Ok((v.clone(), ring.var(v)?)))
            .collect::<Result<_>>()?;
        RingHom::new(ring.clone(), ring.clone(), images)
    }

    /// Parse variable images written in the element grammar of the target.
    pub fn from_strings(
        source: RingDescriptor,
        target: RingDescriptor,
        images: &BTreeMap<String, String>,
    ) -> Result<Self> {
        let parsed = images
            .iter()
            .map(|(k, v)| Ok((k.clone(), target.parse(v)?)))
            .collect::<Result<_>>()?;
        RingHom::new(source, target, parsed)
    }

    pub fn source(&self) -> &RingDescriptor {
        &self.source
    }

    pub fn target(&self) -> &RingDescriptor {
        &self.target
    }

    pub fn images(&self) -> &BTreeMap<String, RingElement> {
        &self.images
    }

    fn check_relations(&self) -> Result<()> {
        let t = &self.target;
        let char_src = self.source.characteristic();
        if !char_src.is_zero() && !t.is_zero(&t.from_bigint(&char_src)) {
            return Err(Error::Invalid(format!(
                "ill-defined homomorphism: {} does not map to zero in {}",
                char_src, t
            )));
        }
        if let RingDescriptor::Localization { base, f } = &self.source {
            let base_hom = RingHom {
                source: (**base).clone(),
                target: t.clone(),
                images: self.images.clone(),
            };
            let img = base_hom.apply(f)?;
            if !t.is_unit(&img) {
                return Err(Error::Invalid(format!(
                    "ill-defined homomorphism: {} maps to the non-unit {}",
                    base.format(f),
                    t.format(&img)
                )));
            }
        }
        Ok(())
    }

    pub fn apply(&self, e: &RingElement) -> Result<RingElement> {
        self.source.check(e)?;
        let t = &self.target;
        match (&self.source, e) {
            (RingDescriptor::Integers, RingElement::Int(n))
            | (RingDescriptor::IntegersMod(_), RingElement::Int(n))
            | (RingDescriptor::PrimeField(_), RingElement::Int(n)) => Ok(t.from_bigint(n)),
            (RingDescriptor::Rationals, RingElement::Rat(q)) => t.from_rational(q),
            (RingDescriptor::Polynomial { vars, .. }, RingElement::Poly(p)) => p.eval_with(
                t.zero(),
                |c| t.from_rational(c),
                |i, k| Ok(t.pow(&self.images[&vars[i]], k)),
                |a, b| t.add(a, b),
                |a, b| t.mul(a, b),
            ),
            (RingDescriptor::Localization { base, f }, RingElement::Frac { num, exp }) => {
                let base_hom = RingHom {
                    source: (**base).clone(),
                    target: t.clone(),
                    images: self.images.clone(),
                };
                let n = base_hom.apply(num)?;
                let fi = base_hom.apply(f)?;
                let inv = t
                    .inverse(&fi)
                    .ok_or_else(|| Error::Invalid("denominator does not map to a unit".into()))?;
                Ok(t.mul(&n, &t.pow(&inv, *exp)))
            }
            _ => Err(Error::RingMismatch(format!("cannot apply a map out of {}", self.source))),
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &RingHom) -> Result<RingHom> {
        if self.target != next.source {
            return Err(Error::RingMismatch("composition of incompatible maps".into()));
        }
        let images = self
            .images
            .iter()
            .map(|(k, v)| Ok((k.clone(), next.apply(v)?)))
            .collect::<Result<_>>()?;
        RingHom::new(self.source.clone(), next.target.clone(), images)
    }
}
