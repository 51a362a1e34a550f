//! Euclidean structure of the supported principal ideal domains:
//! `Z`, fields, `k[x]`, and localizations of `Z` or `k[x]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{uxgcd, MonomialOrder, Poly};
use super::{RingDescriptor, RingElement};
use crate::error::{Error, Result};

/// `s*a + t*b = gcd`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bezout {
    pub gcd: RingElement,
    pub s: RingElement,
    pub t: RingElement,
}

impl RingDescriptor {
    pub fn is_pid(&self) -> bool {
        match self {
            RingDescriptor::Integers | RingDescriptor::Rationals | RingDescriptor::PrimeField(_) => true,
            RingDescriptor::Polynomial { vars, .. } => vars.len() == 1,
            RingDescriptor::Localization { base, .. } => base.is_pid(),
            RingDescriptor::IntegersMod(_) => false,
        }
    }

    pub fn require_pid(&self) -> Result<()> {
        if self.is_pid() {
            Ok(())
        } else {
            Err(Error::Unsupported(format!("{} is not a supported PID", self)))
        }
    }

    /// `a = unit * canonical`; canonical is positive over `Z`, monic over
    /// `k[x]`, one over a field, and the normalized part prime to `f` in `R[1/f]`.
    pub fn normalize(&self, a: &RingElement) -> (RingElement, RingElement) {
        if self.is_zero(a) {
            return (self.zero(), self.one());
        }
        match (self, a) {
            (RingDescriptor::Integers, RingElement::Int(n)) => {
                (RingElement::Int(n.abs()), RingElement::Int(n.signum()))
            }
            (RingDescriptor::Rationals, _) | (RingDescriptor::PrimeField(_), _) => (self.one(), a.clone()),
            (RingDescriptor::Polynomial { base, vars }, RingElement::Poly(p)) if vars.len() == 1 => {
                let lc = p.ulead();
                let monic = p.monic(MonomialOrder::Lex, base);
                (RingElement::Poly(monic), RingElement::Poly(Poly::constant(1, lc)))
            }
            (RingDescriptor::Localization { .. }, _) => {
                let (unit, core) = self.unit_split(a);
                (core, unit)
            }
            _ => (a.clone(), self.one()),
        }
    }

    /// For a localization element: `a = unit * core` with `core` integral,
    /// normalized and prime to the inverted element.
    pub(crate) fn unit_split(&self, a: &RingElement) -> (RingElement, RingElement) {
        match self {
            RingDescriptor::Localization { base, f } => {
                if self.is_zero(a) {
                    return (self.one(), self.zero());
                }
                let (num, exp) = self.as_fraction(a);
                let (s, rest) = base.split_coprime(&num, f).expect("nonzero numerator");
                let (core, u) = base.normalize(&rest);
                let unit = self.fraction(base.mul(&s, &u), exp);
                (unit, self.embed(core))
            }
            _ => {
                let (c, u) = self.normalize(a);
                (u, c)
            }
        }
    }

    /// `a = s * rest` where `s` divides a power of `f` and `rest` is prime to `f`.
    /// Iterated gcd, no factorization.
    pub(crate) fn split_coprime(&self, a: &RingElement, f: &RingElement) -> Option<(RingElement, RingElement)> {
        if self.is_zero(a) {
            return None;
        }
        let mut rest = a.clone();
        let mut s = self.one();
        loop {
            let g = self.gcd(&rest, f);
            if self.is_unit(&g) {
                break;
            }
            rest = self.div_exact(&rest, &g)?;
            s = self.mul(&s, &g);
        }
        Some((s, rest))
    }

    /// Smallest `m` with `s | f^m`, if any (bounded search).
    pub(crate) fn power_dividing(&self, s: &RingElement, f: &RingElement) -> Option<u32> {
        let mut acc = self.one();
        for m in 0..4096u32 {
            if self.divides(s, &acc) {
                return Some(m);
            }
            acc = self.mul(&acc, f);
        }
        None
    }

    pub fn gcd(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.xgcd(a, b).gcd
    }

    pub fn xgcd(&self, a: &RingElement, b: &RingElement) -> Bezout {
        match (self, a, b) {
            (RingDescriptor::Integers, RingElement::Int(x), RingElement::Int(y)) => {
                let e = x.extended_gcd(y);
                let sign = if e.gcd.is_negative() { -BigInt::one() } else { BigInt::one() };
                Bezout {
                    gcd: RingElement::Int(e.gcd * &sign),
                    s: RingElement::Int(e.x * &sign),
                    t: RingElement::Int(e.y * &sign),
                }
            }
            (RingDescriptor::Rationals, _, _) | (RingDescriptor::PrimeField(_), _, _) => {
                if !self.is_zero(a) {
                    Bezout { gcd: self.one(), s: self.inverse(a).unwrap(), t: self.zero() }
                } else if !self.is_zero(b) {
                    Bezout { gcd: self.one(), s: self.zero(), t: self.inverse(b).unwrap() }
                } else {
                    Bezout { gcd: self.zero(), s: self.one(), t: self.zero() }
                }
            }
            (RingDescriptor::Polynomial { base, vars }, RingElement::Poly(x), RingElement::Poly(y))
                if vars.len() == 1 =>
            {
                let (g, s, t) = uxgcd(x, y, base);
                if g.is_zero() {
                    return Bezout { gcd: self.zero(), s: self.one(), t: self.zero() };
                }
                Bezout {
                    gcd: RingElement::Poly(g),
                    s: RingElement::Poly(s),
                    t: RingElement::Poly(t),
                }
            }
            (RingDescriptor::Localization { base, .. }, _, _) => {
                let (ua, ca) = self.unit_split(a);
                let (ub, cb) = self.unit_split(b);
                let ca = self.numerator_if_integral(&ca).unwrap();
                let cb = self.numerator_if_integral(&cb).unwrap();
                let e = base.xgcd(&ca, &cb);
                let ua_inv = self.inverse(&ua).unwrap();
                let ub_inv = self.inverse(&ub).unwrap();
                Bezout {
                    gcd: self.embed(e.gcd),
                    s: self.mul(&self.embed(e.s), &ua_inv),
                    t: self.mul(&self.embed(e.t), &ub_inv),
                }
            }
            _ => panic!("xgcd unsupported in {}", self),
        }
    }

    /// Size used for pivot selection: `|n|` over `Z`, degree over `k[x]`,
    /// zero for nonzero field elements; computed on the part prime to `f`
    /// in a localization.
    pub fn euclid_size(&self, a: &RingElement) -> BigInt {
        match (self, a) {
            (RingDescriptor::Integers, RingElement::Int(n)) => n.abs(),
            (RingDescriptor::Polynomial { .. }, RingElement::Poly(p)) => {
                BigInt::from(p.total_degree().unwrap_or(0))
            }
            (RingDescriptor::Localization { base, .. }, _) => {
                let (_, core) = self.unit_split(a);
                base.euclid_size(&self.numerator_if_integral(&core).unwrap())
            }
            _ => BigInt::zero(),
        }
    }

    /// Euclidean remainder of `a` modulo `b` for base PIDs; used to
    /// present residues canonically.
    pub fn rem(&self, a: &RingElement, b: &RingElement) -> RingElement {
        match (self, a, b) {
            (RingDescriptor::Integers, RingElement::Int(x), RingElement::Int(y)) if !y.is_zero() => {
                RingElement::Int(x.mod_floor(&y.abs()))
            }
            (RingDescriptor::Polynomial { base, vars }, RingElement::Poly(x), RingElement::Poly(y))
                if vars.len() == 1 && !y.is_zero() =>
            {
                RingElement::Poly(x.udiv_rem(y, base).1)
            }
            _ => {
                if self.is_unit(b) {
                    self.zero()
                } else {
                    a.clone()
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_bezout() {
        let z = RingDescriptor::Integers;
        let e = z.xgcd(&z.from_int(-4), &z.from_int(6));
        assert_eq!(e.gcd, z.from_int(2));
        let lhs = z.add(&z.mul(&e.s, &z.from_int(-4)), &z.mul(&e.t, &z.from_int(6)));
        assert_eq!(lhs, e.gcd);
    }

    #[test]
    fn localized_bezout() {
        let z = RingDescriptor::Integers;
        let r = z.localize(&z.from_int(2)).unwrap().ring;
        let a = r.parse("12").unwrap();
        let b = r.parse("9/2").unwrap();
        let e = r.xgcd(&a, &b);
        assert_eq!(e.gcd, r.from_int(3));
        let lhs = r.add(&r.mul(&e.s, &a), &r.mul(&e.t, &b));
        assert_eq!(lhs, e.gcd);
        let (core, unit) = r.normalize(&r.from_int(-12));
        assert_eq!(core, r.from_int(3));
        assert_eq!(r.mul(&core, &unit), r.from_int(-12));
    }

    #[test]
    fn split_without_factoring() {
        let z = RingDescriptor::Integers;
        let (s, rest) = z.split_coprime(&z.from_int(360), &z.from_int(6)).unwrap();
        assert_eq!(s, z.from_int(72));
        assert_eq!(rest, z.from_int(5));
    }
}
