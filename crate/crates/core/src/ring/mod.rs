//! Computable commutative rings with exact arithmetic.
//!
//! A [`RingDescriptor`] is the context every [`RingElement`] is interpreted in;
//! elements carry no back-pointer to their ring, so operations go through the
//! descriptor. Elements are always kept in canonical form, which makes
//! structural equality coincide with ring equality.

mod field;
mod groebner;
mod hom;
mod json;
mod parse;
mod pid;
mod poly;
mod radical;
mod snf;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use field::{is_probable_prime, mod_inverse, Field};
pub use groebner::{groebner_basis, ideal_member, reduce, s_polynomial};
pub use hom::RingHom;
pub use parse::Expr;
pub use pid::Bezout;
pub use poly::{fmt_rational, ugcd, uxgcd, Monomial, MonomialOrder, Poly};
pub use radical::{radical_member, radical_member_int};
pub use snf::{smith_normal_form, Matrix, Snf};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingDescriptor {
    Integers,
    IntegersMod(BigInt),
    PrimeField(BigInt),
    Rationals,
    Polynomial { base: Field, vars: Vec<String> },
    /// `base[1/f]`; the base is never itself a localization (towers are flattened).
    Localization { base: Box<RingDescriptor>, f: RingElement },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingElement {
    /// Integers, residues mod n, prime-field residues.
    Int(BigInt),
    Rat(BigRational),
    Poly(Poly),
    /// `num / f^exp` with `exp` minimal.
    Frac { num: Box<RingElement>, exp: u32 },
}

/// Result of [`RingDescriptor::localize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Localized {
    pub ring: RingDescriptor,
    /// `f` was already a unit, so `ring` is the base itself.
    pub unit: bool,
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Integers => write!(out, "Z"),
            RingDescriptor::IntegersMod(n) => write!(out, "Z/{}", n),
            RingDescriptor::PrimeField(p) => write!(out, "F{}", p),
            RingDescriptor::Rationals => write!(out, "Q"),
            RingDescriptor::Polynomial { base, vars } => {
                write!(out, "{}[{}]", base.name(), vars.join(","))
            }
            RingDescriptor::Localization { base, f } => {
                write!(out, "{}[1/({})]", base, base.format(f))
            }
        }
    }
}

impl RingDescriptor {
    pub fn intmod(n: impl Into<BigInt>) -> Result<Self> {
        let n = n.into();
        if n < BigInt::from(2) {
            return Err(Error::Precondition(format!("modulus {} must be >= 2", n)));
        }
        Ok(RingDescriptor::IntegersMod(n))
    }

    pub fn prime_field(p: impl Into<BigInt>) -> Result<Self> {
        let p = p.into();
        if !is_probable_prime(&p) {
            return Err(Error::Precondition(format!("{} is not prime", p)));
        }
        Ok(RingDescriptor::PrimeField(p))
    }

    pub fn polynomial(base: Field, vars: &[&str]) -> Self {
        RingDescriptor::Polynomial {
            base,
            vars: vars.iter().map(|v| v.to_string()).collect(),
        }
    }

    /// `Q[x]` style shorthand.
    pub fn qx(var: &str) -> Self {
        RingDescriptor::polynomial(Field::Rationals, &[var])
    }

    pub fn is_field(&self) -> bool {
        matches!(self, RingDescriptor::Rationals | RingDescriptor::PrimeField(_))
    }

    /// The coefficient field of a polynomial ring (or of a localized one).
    pub fn poly_field(&self) -> Option<&Field> {
        match self {
            RingDescriptor::Polynomial { base, .. } => Some(base),
            RingDescriptor::Localization { base, .. } => base.poly_field(),
            _ => None,
        }
    }

    pub fn vars(&self) -> &[String] {
        match self {
            RingDescriptor::Polynomial { vars, .. } => vars,
            RingDescriptor::Localization { base, .. } => base.vars(),
            _ => &[],
        }
    }

    /// The un-localized ring underneath.
    pub fn base_ring(&self) -> &RingDescriptor {
        match self {
            RingDescriptor::Localization { base, .. } => base,
            other => other,
        }
    }

    /// The inverted element of a localization.
    pub fn inverted(&self) -> Option<&RingElement> {
        match self {
            RingDescriptor::Localization { f, .. } => Some(f),
            _ => None,
        }
    }

    pub fn characteristic(&self) -> BigInt {
        match self {
            RingDescriptor::Integers | RingDescriptor::Rationals => BigInt::zero(),
            RingDescriptor::IntegersMod(n) | RingDescriptor::PrimeField(n) => n.clone(),
            RingDescriptor::Polynomial { base, .. } => base.characteristic(),
            RingDescriptor::Localization { base, .. } => base.characteristic(),
        }
    }

    // ---- constructors -------------------------------------------------

    pub fn zero(&self) -> RingElement {
        self.from_bigint(&BigInt::zero())
    }

    pub fn one(&self) -> RingElement {
        self.from_bigint(&BigInt::one())
    }

    pub fn from_int(&self, n: i64) -> RingElement {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> RingElement {
        match self {
            RingDescriptor::Integers => RingElement::Int(n.clone()),
            RingDescriptor::IntegersMod(m) | RingDescriptor::PrimeField(m) => {
                RingElement::Int(n.mod_floor(m))
            }
            RingDescriptor::Rationals => RingElement::Rat(BigRational::from_integer(n.clone())),
            RingDescriptor::Polynomial { base, vars } => {
                RingElement::Poly(Poly::constant(vars.len(), base.from_int(n)))
            }
            RingDescriptor::Localization { base, .. } => RingElement::Frac {
                num: Box::new(base.from_bigint(n)),
                exp: 0,
            },
        }
    }

    /// Image of a rational number; fails when the denominator is not a unit.
    pub fn from_rational(&self, q: &BigRational) -> Result<RingElement> {
        let num = self.from_bigint(q.numer());
        if q.denom().is_one() {
            return Ok(num);
        }
        let den = self.from_bigint(q.denom());
        let inv = self.inverse(&den).ok_or_else(|| {
            Error::Unsupported(format!("{} is not invertible in {}", q.denom(), self))
        })?;
        Ok(self.mul(&num, &inv))
    }

    pub fn var(&self, name: &str) -> Result<RingElement> {
        match self {
            RingDescriptor::Polynomial { vars, .. } => {
                let i = vars
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable '{}' in {}", name, self)))?;
                Ok(RingElement::Poly(Poly::var(vars.len(), i)))
            }
            RingDescriptor::Localization { base, .. } => Ok(self.embed(base.var(name)?)),
            _ => Err(Error::Parse(format!("unknown variable '{}' in {}", name, self))),
        }
    }

    /// Canonical map from the base into a localization.
    pub fn embed(&self, e: RingElement) -> RingElement {
        match self {
            RingDescriptor::Localization { .. } => self.canon_frac(e, 0),
            _ => e,
        }
    }

    /// `Some(x)` with `x` in the base when `e` has no denominator.
    pub fn numerator_if_integral(&self, e: &RingElement) -> Option<RingElement> {
        match (self, e) {
            (RingDescriptor::Localization { .. }, RingElement::Frac { num, exp }) => {
                if *exp == 0 {
                    Some((**num).clone())
                } else {
                    None
                }
            }
            _ => Some(e.clone()),
        }
    }

    /// Numerator and exponent of a localization element (`e = num / f^exp`).
    pub fn as_fraction(&self, e: &RingElement) -> (RingElement, u32) {
        match e {
            RingElement::Frac { num, exp } => ((**num).clone(), *exp),
            other => (other.clone(), 0),
        }
    }

    pub fn fraction(&self, num: RingElement, exp: u32) -> RingElement {
        self.canon_frac(num, exp)
    }

    fn canon_frac(&self, mut num: RingElement, mut exp: u32) -> RingElement {
        if let RingDescriptor::Localization { base, f } = self {
            if base.is_zero(&num) {
                exp = 0;
            }
            while exp > 0 {
                match base.div_exact(&num, f) {
                    Some(q) => {
                        num = q;
                        exp -= 1;
                    }
                    None => break,
                }
            }
            RingElement::Frac {
                num: Box::new(num),
                exp,
            }
        } else {
            num
        }
    }

    /// Does `e` have the representation this ring expects?
    pub fn contains(&self, e: &RingElement) -> bool {
        match (self, e) {
            (RingDescriptor::Integers, RingElement::Int(_)) => true,
            (RingDescriptor::IntegersMod(n), RingElement::Int(r))
            | (RingDescriptor::PrimeField(n), RingElement::Int(r)) => {
                !r.is_negative() && r < n
            }
            (RingDescriptor::Rationals, RingElement::Rat(_)) => true,
            (RingDescriptor::Polynomial { vars, .. }, RingElement::Poly(p)) => {
                p.nvars() == vars.len()
            }
            (RingDescriptor::Localization { base, .. }, RingElement::Frac { num, .. }) => {
                base.contains(num)
            }
            _ => false,
        }
    }

    pub fn check(&self, e: &RingElement) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{:?} is not an element of {}", e, self)))
        }
    }

    // ---- arithmetic ---------------------------------------------------

    pub fn is_zero(&self, e: &RingElement) -> bool {
        match e {
            RingElement::Int(n) => n.is_zero(),
            RingElement::Rat(q) => q.is_zero(),
            RingElement::Poly(p) => p.is_zero(),
            RingElement::Frac { num, .. } => self.base_ring().is_zero(num),
        }
    }

    pub fn is_one(&self, e: &RingElement) -> bool {
        *e == self.one()
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        use RingElement::*;
        match (self, a, b) {
            (RingDescriptor::Integers, Int(x), Int(y)) => Int(x + y),
            (RingDescriptor::IntegersMod(n), Int(x), Int(y))
            | (RingDescriptor::PrimeField(n), Int(x), Int(y)) => Int((x + y).mod_floor(n)),
            (RingDescriptor::Rationals, Rat(x), Rat(y)) => Rat(x + y),
            (RingDescriptor::Polynomial { base, .. }, Poly(x), Poly(y)) => Poly(x.add(y, base)),
            (RingDescriptor::Localization { base, f }, Frac { num: x, exp: i }, Frac { num: y, exp: j }) => {
                let k = (*i).max(*j);
                let xs = base.mul(x, &base.pow(f, k - i));
                let ys = base.mul(y, &base.pow(f, k - j));
                self.canon_frac(base.add(&xs, &ys), k)
            }
            _ => panic!("ring mismatch in add: {:?} + {:?} in {}", a, b, self),
        }
    }

    pub fn neg(&self, a: &RingElement) -> RingElement {
        use RingElement::*;
        match (self, a) {
            (RingDescriptor::Integers, Int(x)) => Int(-x),
            (RingDescriptor::IntegersMod(n), Int(x)) | (RingDescriptor::PrimeField(n), Int(x)) => {
                Int((-x).mod_floor(n))
            }
            (RingDescriptor::Rationals, Rat(x)) => Rat(-x),
            (RingDescriptor::Polynomial { base, .. }, Poly(x)) => Poly(x.neg(base)),
            (RingDescriptor::Localization { base, .. }, Frac { num, exp }) => Frac {
                num: Box::new(base.neg(num)),
                exp: *exp,
            },
            _ => panic!("ring mismatch in neg: {:?} in {}", a, self),
        }
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        use RingElement::*;
        match (self, a, b) {
            (RingDescriptor::Integers, Int(x), Int(y)) => Int(x * y),
            (RingDescriptor::IntegersMod(n), Int(x), Int(y))
            | (RingDescriptor::PrimeField(n), Int(x), Int(y)) => Int((x * y).mod_floor(n)),
            (RingDescriptor::Rationals, Rat(x), Rat(y)) => Rat(x * y),
            (RingDescriptor::Polynomial { base, .. }, Poly(x), Poly(y)) => Poly(x.mul(y, base)),
            (RingDescriptor::Localization { base, .. }, Frac { num: x, exp: i }, Frac { num: y, exp: j }) => {
                self.canon_frac(base.mul(x, y), i + j)
            }
            _ => panic!("ring mismatch in mul: {:?} * {:?} in {}", a, b, self),
        }
    }

    pub fn pow(&self, a: &RingElement, mut e: u32) -> RingElement {
        let mut base = a.clone();
        let mut out = self.one();
        while e > 0 {
            if e & 1 == 1 {
                out = self.mul(&out, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        out
    }

    pub fn product<'a>(&self, items: impl IntoIterator<Item = &'a RingElement>) -> RingElement {
        items.into_iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    pub fn is_unit(&self, a: &RingElement) -> bool {
        self.inverse(a).is_some()
    }

    pub fn inverse(&self, a: &RingElement) -> Option<RingElement> {
        use RingElement::*;
        match (self, a) {
            (RingDescriptor::Integers, Int(x)) => {
                if x.abs().is_one() {
                    Some(Int(x.clone()))
                } else {
                    None
                }
            }
            (RingDescriptor::IntegersMod(n), Int(x)) | (RingDescriptor::PrimeField(n), Int(x)) => {
                mod_inverse(x, n).map(Int)
            }
            (RingDescriptor::Rationals, Rat(x)) => {
                if x.is_zero() {
                    None
                } else {
                    Some(Rat(x.recip()))
                }
            }
            (RingDescriptor::Polynomial { base, vars }, Poly(p)) => {
                let c = p.constant_value()?;
                base.inv(&c).map(|i| Poly(poly::Poly::constant(vars.len(), i)))
            }
            (RingDescriptor::Localization { base, f }, Frac { num, exp }) => {
                if base.is_zero(num) {
                    return None;
                }
                // num = s * a' with s | f^m and a' coprime to f; need a' a unit
                let (s, rest) = base.split_coprime(num, f)?;
                let rest_inv = base.inverse(&rest)?;
                let m = base.power_dividing(&s, f)?;
                let t = base.div_exact(&base.pow(f, m), &s)?;
                let numer = base.mul(&base.mul(&rest_inv, &t), &base.pow(f, *exp));
                Some(self.canon_frac(numer, m))
            }
            _ => None,
        }
    }

    /// Exact quotient `a / b` when `b` divides `a`.
    pub fn div_exact(&self, a: &RingElement, b: &RingElement) -> Option<RingElement> {
        use RingElement::*;
        if self.is_zero(b) {
            return if self.is_zero(a) { Some(self.zero()) } else { None };
        }
        match (self, a, b) {
            (RingDescriptor::Integers, Int(x), Int(y)) => {
                let (q, r) = x.div_rem(y);
                if r.is_zero() {
                    Some(Int(q))
                } else {
                    None
                }
            }
            (RingDescriptor::IntegersMod(n), Int(x), Int(y)) => {
                // y·q ≡ x (mod n) is solvable iff gcd(y, n) | x
                let g = y.gcd(n);
                if !(x % &g).is_zero() {
                    return None;
                }
                let m = n / &g;
                let inv = field::mod_inverse(&(y / &g), &m)?;
                Some(self.from_bigint(&((x / &g) * inv)))
            }
            (RingDescriptor::Polynomial { base, vars }, Poly(x), Poly(y)) => {
                if vars.len() == 1 {
                    let (q, r) = x.udiv_rem(y, base);
                    if r.is_zero() {
                        Some(Poly(q))
                    } else {
                        None
                    }
                } else {
                    // multivariate: division by a Gröbner basis of one element
                    let order = MonomialOrder::Grevlex;
                    let gb = vec![y.monic(order, base)];
                    if !groebner::reduce(x, &gb, order, base).is_zero() {
                        return None;
                    }
                    Some(Poly(multivariate_quotient(x, y, order, base)))
                }
            }
            (RingDescriptor::Localization { base, .. }, Frac { .. }, Frac { .. }) => {
                let (unit, core) = self.unit_split(b);
                let unit_inv = self.inverse(&unit)?;
                let a2 = self.mul(a, &unit_inv);
                let (num, exp) = self.as_fraction(&a2);
                let core_base = self.numerator_if_integral(&core)?;
                let q = base.div_exact(&num, &core_base)?;
                Some(self.canon_frac(q, exp))
            }
            _ => self.inverse(b).map(|inv| self.mul(a, &inv)),
        }
    }

    pub fn divides(&self, d: &RingElement, a: &RingElement) -> bool {
        self.div_exact(a, d).is_some()
    }

    // ---- printing -----------------------------------------------------

    pub fn format(&self, e: &RingElement) -> String {
        match (self, e) {
            (_, RingElement::Int(n)) => n.to_string(),
            (_, RingElement::Rat(q)) => fmt_rational(q),
            (RingDescriptor::Polynomial { vars, .. }, RingElement::Poly(p)) => p.format(vars),
            (RingDescriptor::Localization { base, f }, RingElement::Frac { num, exp }) => {
                let n = base.format(num);
                if *exp == 0 {
                    return n;
                }
                let fs = base.format(f);
                let den = if *exp == 1 {
                    wrap(&fs)
                } else {
                    format!("{}^{}", wrap(&fs), exp)
                };
                format!("{}/{}", wrap(&n), den)
            }
            (_, other) => format!("{:?}", other),
        }
    }

    pub fn parse(&self, s: &str) -> Result<RingElement> {
        parse::parse_expr(s)?.eval(self)
    }

    // ---- localization -------------------------------------------------

    /// `R[1/f]`, flattened so that the base is never a localization.
    pub fn localize(&self, f: &RingElement) -> Result<Localized> {
        self.check(f)?;
        if self.is_zero(f) {
            return Err(Error::Precondition("cannot localize at zero".into()));
        }
        if self.is_unit(f) {
            return Ok(Localized {
                ring: self.clone(),
                unit: true,
            });
        }
        match self {
            RingDescriptor::Integers => {}
            RingDescriptor::Polynomial { vars, .. } if vars.len() == 1 => {}
            RingDescriptor::Localization { base, f: g } => {
                let (num, _) = self.as_fraction(f);
                let h = base.mul(g, &num);
                let h = base.normalize(&h).0;
                return Ok(Localized {
                    ring: RingDescriptor::Localization {
                        base: base.clone(),
                        f: h,
                    },
                    unit: false,
                });
            }
            other => {
                return Err(Error::Unsupported(format!(
                    "localization is only supported over computable PIDs, not {}",
                    other
                )))
            }
        }
        let f = self.normalize(f).0;
        Ok(Localized {
            ring: RingDescriptor::Localization {
                base: Box::new(self.clone()),
                f,
            },
            unit: false,
        })
    }

    /// Map an element of `self` (a base or coarser localization) into the
    /// finer localization `target` sharing the same base.
    pub fn map_into(&self, target: &RingDescriptor, e: &RingElement) -> Result<RingElement> {
        if self == target {
            return Ok(e.clone());
        }
        if self.base_ring() != target.base_ring() {
            return Err(Error::RingMismatch(format!("{} is not a localization of {}", target, self)));
        }
        let (num, exp) = self.as_fraction(e);
        let num_t = target.embed(num);
        if exp == 0 {
            return Ok(num_t);
        }
        let f = self.inverted().unwrap();
        let f_t = target.embed(f.clone());
        let inv = target
            .inverse(&f_t)
            .ok_or_else(|| Error::RingMismatch(format!("{} does not invert {}", target, self.base_ring().format(f))))?;
        Ok(target.mul(&num_t, &target.pow(&inv, exp)))
    }
}

fn wrap(s: &str) -> String {
    let body = s.strip_prefix('-').unwrap_or(s);
    if body.chars().any(|c| " +-*/^".contains(c)) {
        format!("({})", s)
    } else {
        s.to_string()
    }
}

fn multivariate_quotient(x: &Poly, y: &Poly, order: MonomialOrder, field: &Field) -> Poly {
    let (ly, cy) = y.leading(order).map(|(m, c)| (m.clone(), c.clone())).unwrap();
    let inv = field.inv(&cy).unwrap();
    let mut q = Poly::zero(x.nvars());
    let mut r = x.clone();
    while let Some((m, c)) = r.leading(order).map(|(m, c)| (m.clone(), c.clone())) {
        let diff: Monomial = m.iter().zip(&ly).map(|(a, b)| a - b).collect();
        let coef = field.mul(&c, &inv);
        q = q.add(&Poly::monomial(diff.clone(), coef.clone()), field);
        r = r.sub(&y.mul_term(&diff, &coef, field), field);
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn localization_of_integers() {
        let z = RingDescriptor::Integers;
        let z2 = z.localize(&z.from_int(2)).unwrap();
        assert!(!z2.unit);
        let r = z2.ring;
        let two = r.from_int(2);
        let half = r.inverse(&two).unwrap();
        assert_eq!(r.mul(&two, &half), r.one());
        assert_eq!(r.format(&half), "1/2");
        assert_eq!(r.format(&r.parse("3/4").unwrap()), "3/2^2");
        assert!(!r.is_unit(&r.from_int(3)));
        assert!(r.is_unit(&r.from_int(-8)));
    }

    #[test]
    fn divisibility_mod_n() {
        let r = RingDescriptor::intmod(6).unwrap();
        let (two, four, three) = (r.from_int(2), r.from_int(4), r.from_int(3));
        assert!(r.divides(&two, &four));
        let q = r.div_exact(&four, &two).unwrap();
        assert_eq!(r.mul(&q, &two), four);
        assert!(!r.divides(&two, &three));
        assert!(r.divides(&three, &r.zero()));
    }

    #[test]
    fn localizing_at_unit_is_flagged() {
        let z = RingDescriptor::Integers;
        let l = z.localize(&z.one()).unwrap();
        assert!(l.unit);
        assert_eq!(l.ring, z);
        assert!(z.localize(&z.zero()).is_err());
    }

    #[test]
    fn localization_of_qx_inverts_x() {
        let r = RingDescriptor::qx("x");
        let l = r.localize(&r.var("x").unwrap()).unwrap().ring;
        let x = l.var("x").unwrap();
        let inv = l.inverse(&x).unwrap();
        assert_eq!(l.mul(&x, &inv), l.one());
        assert_eq!(l.format(&inv), "1/x");
    }

    #[test]
    fn towers_flatten() {
        let z = RingDescriptor::Integers;
        let z2 = z.localize(&z.from_int(2)).unwrap().ring;
        let z6 = z2.localize(&z2.from_int(3)).unwrap().ring;
        assert_eq!(
            z6,
            RingDescriptor::Localization {
                base: Box::new(z.clone()),
                f: z.from_int(6)
            }
        );
        let x = z2.parse("5/2").unwrap();
        let y = z2.map_into(&z6, &x).unwrap();
        assert_eq!(z6.mul(&y, &z6.from_int(2)), z6.from_int(5));
    }

    #[test]
    fn fractions_are_canonical() {
        let z = RingDescriptor::Integers;
        let z2 = z.localize(&z.from_int(2)).unwrap().ring;
        let a = z2.parse("4/2^3").unwrap();
        let b = z2.parse("1/2").unwrap();
        assert_eq!(a, b);
        assert_eq!(z2.div_exact(&z2.from_int(6), &z2.from_int(12)), Some(b));
    }

    #[test]
    fn residues() {
        let r = RingDescriptor::intmod(6).unwrap();
        assert_eq!(r.add(&r.from_int(4), &r.from_int(5)), r.from_int(3));
        assert!(r.is_unit(&r.from_int(5)));
        assert!(!r.is_unit(&r.from_int(3)));
        assert!(RingDescriptor::prime_field(9).is_err());
    }
}
