//! Buchberger's algorithm over a field.

use num_rational::BigRational;

use super::field::Field;
use super::poly::{Monomial, MonomialOrder, Poly};

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn quotient(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Full multivariate division remainder of `p` by `basis`.
pub fn reduce(p: &Poly, basis: &[Poly], order: MonomialOrder, field: &Field) -> Poly {
    let mut rem = Poly::zero(p.nvars());
    let mut work = p.clone();
    let leads: Vec<(Monomial, BigRational)> = basis
        .iter()
        .filter_map(|g| g.leading(order).map(|(m, c)| (m.clone(), field.inv(c).unwrap())))
        .collect();
    let nonzero: Vec<&Poly> = basis.iter().filter(|g| !g.is_zero()).collect();
    while let Some((m, c)) = work.leading(order).map(|(m, c)| (m.clone(), c.clone())) {
        let hit = leads.iter().position(|(lm, _)| divides(lm, &m));
        match hit {
            Some(i) => {
                let (lm, inv) = &leads[i];
                let q = quotient(&m, lm);
                let coef = field.mul(&c, inv);
                work = work.sub(&nonzero[i].mul_term(&q, &coef, field), field);
            }
            None => {
                let lt = Poly::monomial(m, c);
                rem = rem.add(&lt, field);
                work = work.sub(&lt, field);
            }
        }
    }
    rem
}

pub fn s_polynomial(f: &Poly, g: &Poly, order: MonomialOrder, field: &Field) -> Poly {
    let (mf, cf) = f.leading(order).unwrap();
    let (mg, cg) = g.leading(order).unwrap();
    let l = lcm(mf, mg);
    let a = f.mul_term(&quotient(&l, mf), &field.inv(cf).unwrap(), field);
    let b = g.mul_term(&quotient(&l, mg), &field.inv(cg).unwrap(), field);
    a.sub(&b, field)
}

/// Reduced Gröbner basis, sorted by descending leading monomial.
pub fn groebner_basis(gens: &[Poly], order: MonomialOrder, field: &Field) -> Vec<Poly> {
    let mut basis: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if basis.is_empty() {
        return Vec::new();
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let (mi, _) = basis[i].leading(order).unwrap();
        let (mj, _) = basis[j].leading(order).unwrap();
        // coprime leading monomials: the S-polynomial reduces to zero
        if mi.iter().zip(mj).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order, field);
        let r = reduce(&s, &basis, order, field);
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r);
            for t in 0..k {
                pairs.insert(0, (t, k));
            }
        }
    }
    reduce_basis(basis, order, field)
}

fn reduce_basis(basis: Vec<Poly>, order: MonomialOrder, field: &Field) -> Vec<Poly> {
    let mut minimal: Vec<Poly> = Vec::new();
    let leads: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading(order).unwrap().0.clone())
        .collect();
    for (i, g) in basis.iter().enumerate() {
        let redundant = leads.iter().enumerate().any(|(j, lj)| {
            j != i && divides(lj, &leads[i]) && (lj != &leads[i] || j < i)
        });
        if !redundant {
            minimal.push(g.monic(order, field));
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let r = reduce(&minimal[i], &others, order, field);
        reduced.push(r.monic(order, field));
    }
    reduced.sort_by(|a, b| order.cmp(b.leading(order).unwrap().0, a.leading(order).unwrap().0));
    reduced
}

/// Ideal membership through the remainder against a Gröbner basis.
pub fn ideal_member(h: &Poly, gens: &[Poly], order: MonomialOrder, field: &Field) -> bool {
    let gb = groebner_basis(gens, order, field);
    reduce(h, &gb, order, field).is_zero()
}
