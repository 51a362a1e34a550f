//! Radical membership `f ∈ √(g₁,…,gₙ)` for every supported ring.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::groebner::groebner_basis;
use super::poly::{MonomialOrder, Poly};
use super::{RingDescriptor, RingElement};
use crate::error::Result;

/// Integer case, by iterated gcd: with `g = gcd(gens)`, strip from `g`
/// every factor it shares with `f`; `f ∈ √(g)` iff nothing is left.
pub fn radical_member_int(f: &BigInt, gens: &[BigInt]) -> bool {
    let g = gens.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return f.is_zero();
    }
    let mut r = g;
    loop {
        let d = r.gcd(f);
        if d.is_one() {
            break;
        }
        r /= d;
    }
    r.is_one()
}

fn int_of(e: &RingElement) -> BigInt {
    match e {
        RingElement::Int(n) => n.clone(),
        other => panic!("expected integer representative, got {:?}", other),
    }
}

fn poly_of(e: &RingElement) -> &Poly {
    match e {
        RingElement::Poly(p) => p,
        other => panic!("expected polynomial, got {:?}", other),
    }
}

/// Decide `f ∈ √(gens)` in `ring`.
pub fn radical_member(ring: &RingDescriptor, f: &RingElement, gens: &[RingElement]) -> Result<bool> {
    ring.check(f)?;
    for g in gens {
        ring.check(g)?;
    }
    Ok(match ring {
        RingDescriptor::Integers => {
            let gs: Vec<BigInt> = gens.iter().map(int_of).collect();
            radical_member_int(&int_of(f), &gs)
        }
        RingDescriptor::IntegersMod(n) => {
            let mut gs: Vec<BigInt> = gens.iter().map(int_of).collect();
            gs.push(n.clone());
            radical_member_int(&int_of(f), &gs)
        }
        RingDescriptor::Rationals | RingDescriptor::PrimeField(_) => {
            ring.is_zero(f) || gens.iter().any(|g| !ring.is_zero(g))
        }
        RingDescriptor::Polynomial { base, vars } => {
            if ring.is_zero(f) {
                return Ok(true);
            }
            // Rabinowitsch: f ∈ √I  iff  1 ∈ (I, 1 - y f) in one more variable
            let n = vars.len();
            let mut ideal: Vec<Poly> = gens.iter().map(|g| poly_of(g).extend_vars(1)).collect();
            let y = Poly::var(n + 1, n);
            let yf = y.mul(&poly_of(f).extend_vars(1), base);
            ideal.push(Poly::one(n + 1).sub(&yf, base));
            let gb = groebner_basis(&ideal, MonomialOrder::Grevlex, base);
            gb.len() == 1 && gb[0].constant_value() == Some(BigRational::one())
        }
        RingDescriptor::Localization { base, f: h } => {
            // x ∈ √(I R_h)  iff  x·h ∈ √I
            let (a, _) = ring.as_fraction(f);
            let nums: Vec<RingElement> = gens.iter().map(|g| ring.as_fraction(g).0).collect();
            radical_member(base, &base.mul(&a, h), &nums)?
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Field;

    fn z(n: i64) -> RingElement {
        RingDescriptor::Integers.from_int(n)
    }

    #[test]
    fn integer_examples() {
        let r = RingDescriptor::Integers;
        assert!(radical_member(&r, &z(6), &[z(4), z(9)]).unwrap());
        assert!(radical_member(&r, &z(2), &[z(4)]).unwrap());
        assert!(!radical_member(&r, &z(3), &[z(2)]).unwrap());
        assert!(radical_member(&r, &z(0), &[]).unwrap());
        assert!(!radical_member(&r, &z(5), &[]).unwrap());
        assert!(radical_member(&r, &z(6), &[z(12)]).unwrap());
    }

    #[test]
    fn polynomial_examples() {
        let r = RingDescriptor::polynomial(Field::Rationals, &["x", "y"]);
        let p = |s: &str| r.parse(s).unwrap();
        assert!(radical_member(&r, &p("x+y"), &[p("x^2"), p("y^2")]).unwrap());
        assert!(!radical_member(&r, &p("x"), &[p("y")]).unwrap());
        assert!(radical_member(&r, &p("x*y"), &[p("x^2*y")]).unwrap());
        let q = RingDescriptor::qx("x");
        assert!(radical_member(&q, &q.parse("x").unwrap(), &[q.parse("x^2").unwrap()]).unwrap());
    }

    #[test]
    fn residue_and_field_rings() {
        let r = RingDescriptor::intmod(12).unwrap();
        // √(0) in Z/12 is (6)
        assert!(radical_member(&r, &r.from_int(6), &[]).unwrap());
        assert!(!radical_member(&r, &r.from_int(2), &[]).unwrap());
        let q = RingDescriptor::Rationals;
        assert!(radical_member(&q, &q.from_int(5), &[q.from_int(2)]).unwrap());
        assert!(!radical_member(&q, &q.from_int(5), &[q.zero()]).unwrap());
    }

    #[test]
    fn localized_membership() {
        let zz = RingDescriptor::Integers;
        let r = zz.localize(&zz.from_int(2)).unwrap().ring;
        // 2 is a unit, so √(2) is the whole ring
        assert!(radical_member(&r, &r.one(), &[r.from_int(2)]).unwrap());
        assert!(!radical_member(&r, &r.from_int(5), &[r.from_int(6)]).unwrap());
        assert!(radical_member(&r, &r.from_int(3), &[r.from_int(18)]).unwrap());
    }
}
