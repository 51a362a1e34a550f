//! Sparse multivariate polynomials with exact coefficients.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt::Write;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::Field;

pub type Monomial = Vec<u32>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    Grevlex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grevlex => {
                let da: u64 = a.iter().map(|&e| e as u64).sum();
                let db: u64 = b.iter().map(|&e| e as u64).sum();
                da.cmp(&db).then_with(|| {
                    for (x, y) in a.iter().zip(b).rev() {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                })
            }
        }
    }
}

/// Polynomial in `nvars` variables. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, BigRational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = vec![0; nvars];
        m[i] = 1;
        Poly::monomial(m, BigRational::one())
    }

    pub fn monomial(m: Monomial, c: BigRational) -> Self {
        let nvars = m.len();
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.iter().all(|&e| e == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms
            .keys()
            .map(|m| m.iter().map(|&e| e as u64).sum())
            .max()
    }

    pub fn leading(&self, order: MonomialOrder) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    fn add_term(&mut self, field: &Field, m: Monomial, c: BigRational) {
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                let c = field.reduce(c);
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let sum = field.add(o.get(), &c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly, field: &Field) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(field, m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self, field: &Field) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Poly, field: &Field) -> Poly {
        self.add(&other.neg(field), field)
    }

    pub fn scale(&self, c: &BigRational, field: &Field) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), field.mul(a, c)))
                .collect(),
        }
    }

    /// Multiply by `c * x^m`.
    pub fn mul_term(&self, m: &[u32], c: &BigRational, field: &Field) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, a)| {
                    let prod: Monomial = k.iter().zip(m).map(|(x, y)| x + y).collect();
                    (prod, field.mul(a, c))
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly, field: &Field) -> Poly {
        let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(x, y)| x + y).collect();
                let e = acc.entry(m).or_insert_with(BigRational::zero);
                *e = field.add(e, &field.mul(c1, c2));
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Poly {
            nvars: self.nvars,
            terms: acc,
        }
    }

    pub fn pow(&self, mut e: u32, field: &Field) -> Poly {
        let mut base = self.clone();
        let mut out = Poly::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base, field);
            }
            base = base.mul(&base, field);
            e >>= 1;
        }
        out
    }

    /// Scale so the leading coefficient (under `order`) is one.
    pub fn monic(&self, order: MonomialOrder, field: &Field) -> Poly {
        match self.leading(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = field.inv(c).expect("nonzero leading coefficient");
                self.scale(&inv, field)
            }
        }
    }

    /// Embed into a ring with `extra` additional trailing variables.
    pub fn extend_vars(&self, extra: usize) -> Poly {
        Poly {
            nvars: self.nvars + extra,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.extend(std::iter::repeat_n(0, extra));
                    (m, c.clone())
                })
                .collect(),
        }
    }

    /// Degree in the single variable of a univariate polynomial; `None` for zero.
    pub fn udeg(&self) -> Option<u32> {
        debug_assert_eq!(self.nvars, 1);
        self.terms.keys().next_back().map(|m| m[0])
    }

    pub fn ulead(&self) -> BigRational {
        self.terms
            .iter()
            .next_back()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    /// Univariate Euclidean division.
    pub fn udiv_rem(&self, d: &Poly, field: &Field) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.udeg().unwrap();
        let inv = field.inv(&d.ulead()).unwrap();
        let mut q = Poly::zero(1);
        let mut r = self.clone();
        while let Some(rd) = r.udeg() {
            if rd < dd {
                break;
            }
            let c = field.mul(&r.ulead(), &inv);
            let m = vec![rd - dd];
            q.add_term(field, m.clone(), c.clone());
            r = r.sub(&d.mul_term(&m, &c, field), field);
        }
        (q, r)
    }

    /// Horner-free evaluation through a caller supplied ring interpretation.
    pub fn eval_with<T, E>(
        &self,
        zero: T,
        coeff: impl Fn(&BigRational) -> std::result::Result<T, E>,
        var_pow: impl Fn(usize, u32) -> std::result::Result<T, E>,
        add: impl Fn(&T, &T) -> T,
        mul: impl Fn(&T, &T) -> T,
    ) -> std::result::Result<T, E> {
        let mut acc = zero;
        for (m, c) in &self.terms {
            let mut t = coeff(c)?;
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = mul(&t, &var_pow(i, e)?);
                }
            }
            acc = add(&acc, &t);
        }
        Ok(acc)
    }

    /// Human readable form, terms in descending graded order.
    pub fn format(&self, vars: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut ms: Vec<(&Monomial, &BigRational)> = self.terms.iter().collect();
        ms.sort_by(|a, b| MonomialOrder::Grevlex.cmp(b.0, a.0));
        let mut out = String::new();
        for (i, (m, c)) in ms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let is_const = m.iter().all(|&e| e == 0);
            let mut factors: Vec<String> = Vec::new();
            if is_const || !abs.is_one() {
                factors.push(fmt_rational(&abs));
            }
            for (v, &e) in vars.iter().zip(m.iter()) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{}^{}", v, e)),
                }
            }
            let _ = write!(out, "{}", factors.join("*"));
        }
        out
    }
}

pub fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Univariate gcd, normalized monic (zero stays zero).
pub fn ugcd(a: &Poly, b: &Poly, field: &Field) -> Poly {
    let (g, _, _) = uxgcd(a, b, field);
    g
}

/// Extended Euclid over `k[x]`: returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
pub fn uxgcd(a: &Poly, b: &Poly, field: &Field) -> (Poly, Poly, Poly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Poly::one(1), Poly::zero(1));
    let (mut t0, mut t1) = (Poly::zero(1), Poly::one(1));
    while !r1.is_zero() {
        let (q, r) = r0.udiv_rem(&r1, field);
        let s2 = s0.sub(&q.mul(&s1, field), field);
        let t2 = t0.sub(&q.mul(&t1, field), field);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0.is_zero() {
        return (r0, s0, t0);
    }
    let inv = field.inv(&r0.ulead()).unwrap();
    (
        r0.scale(&inv, field),
        s0.scale(&inv, field),
        t0.scale(&inv, field),
    )
}

#[cfg(test)]
pub fn int_rational(n: i64) -> BigRational {
    BigRational::from_integer(num_bigint::BigInt::from(n))
}
