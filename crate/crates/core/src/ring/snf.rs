//! Dense matrices over a ring and Smith normal form over supported PIDs.

use super::{RingDescriptor, RingElement};
use crate::error::{Error, Result};

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<RingElement>,
}

impl Matrix {
    pub fn zeros(ring: &RingDescriptor, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity(ring: &RingDescriptor, n: usize) -> Self {
        let mut m = Matrix::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, entries: Vec<Vec<RingElement>>) -> Result<Self> {
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::Invalid(format!("expected a {}x{} matrix", rows, cols)));
        }
        Ok(Matrix {
            rows,
            cols,
            data: entries.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RingElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[RingElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<RingElement>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self, ring: &RingDescriptor) -> bool {
        self.data.iter().all(|x| ring.is_zero(x))
    }

    pub fn mul(&self, other: &Matrix, ring: &RingDescriptor) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Invalid(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if ring.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = ring.mul(a, other.get(k, j));
                    let cur = ring.add(out.get(i, j), &prod);
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn scale(&self, c: &RingElement, ring: &RingDescriptor) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| ring.mul(x, c)).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(&RingElement) -> Result<RingElement>) -> Result<Matrix> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// rows (a, b) <- (p*a + q*b, r*a + s*b)
    fn combine_rows(&mut self, ring: &RingDescriptor, a: usize, b: usize, c: [&RingElement; 4]) {
        for j in 0..self.cols {
            let x = self.get(a, j).clone();
            let y = self.get(b, j).clone();
            self.set(a, j, ring.add(&ring.mul(c[0], &x), &ring.mul(c[1], &y)));
            self.set(b, j, ring.add(&ring.mul(c[2], &x), &ring.mul(c[3], &y)));
        }
    }

    fn combine_cols(&mut self, ring: &RingDescriptor, a: usize, b: usize, c: [&RingElement; 4]) {
        for i in 0..self.rows {
            let x = self.get(i, a).clone();
            let y = self.get(i, b).clone();
            self.set(i, a, ring.add(&ring.mul(c[0], &x), &ring.mul(c[1], &y)));
            self.set(i, b, ring.add(&ring.mul(c[2], &x), &ring.mul(c[3], &y)));
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self, ring: &RingDescriptor) -> Result<RingElement> {
        if self.rows != self.cols {
            return Err(Error::Invalid("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(ring.one());
        }
        let mut m = self.clone();
        let mut sign = false;
        let mut prev = ring.one();
        for k in 0..n {
            if ring.is_zero(m.get(k, k)) {
                match (k + 1..n).find(|&i| !ring.is_zero(m.get(i, k))) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = !sign;
                    }
                    None => return Ok(ring.zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = ring.sub(
                        &ring.mul(m.get(i, j), m.get(k, k)),
                        &ring.mul(m.get(i, k), m.get(k, j)),
                    );
                    let v = ring
                        .div_exact(&v, &prev)
                        .ok_or_else(|| Error::Unsupported("inexact Bareiss step".into()))?;
                    m.set(i, j, v);
                }
            }
            prev = m.get(k, k).clone();
        }
        let d = m.get(n - 1, n - 1).clone();
        Ok(if sign { ring.neg(&d) } else { d })
    }
}

/// `u * m * v = d`, `d` diagonal with `d₁ | d₂ | …` in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snf {
    pub u: Matrix,
    pub d: Matrix,
    pub v: Matrix,
    pub rank: usize,
}

impl Snf {
    /// Nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<RingElement> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }
}

/// Smith normal form with the fixed pivot rule: smallest nonzero entry by
/// Euclidean size, ties broken by row-major position.
pub fn smith_normal_form(ring: &RingDescriptor, m: &Matrix) -> Result<Snf> {
    ring.require_pid()?;
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = Matrix::identity(ring, rows);
    let mut v = Matrix::identity(ring, cols);
    let mut t = 0;
    while t < rows.min(cols) {
        let mut best: Option<(usize, usize, num_bigint::BigInt)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = a.get(i, j);
                if ring.is_zero(x) {
                    continue;
                }
                let size = ring.euclid_size(x);
                if best.as_ref().is_none_or(|b| size < b.2) {
                    best = Some((i, j, size));
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if ring.is_zero(a.get(i, t)) {
                    continue;
                }
                let p = a.get(t, t).clone();
                let q = a.get(i, t).clone();
                if let Some(c) = ring.div_exact(&q, &p) {
                    let one = ring.one();
                    let zero = ring.zero();
                    let negc = ring.neg(&c);
                    a.combine_rows(ring, t, i, [&one, &zero, &negc, &one]);
                    u.combine_rows(ring, t, i, [&one, &zero, &negc, &one]);
                } else {
                    let e = ring.xgcd(&p, &q);
                    let alpha = ring.div_exact(&p, &e.gcd).unwrap();
                    let beta = ring.neg(&ring.div_exact(&q, &e.gcd).unwrap());
                    a.combine_rows(ring, t, i, [&e.s, &e.t, &beta, &alpha]);
                    u.combine_rows(ring, t, i, [&e.s, &e.t, &beta, &alpha]);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if ring.is_zero(a.get(t, j)) {
                    continue;
                }
                let p = a.get(t, t).clone();
                let q = a.get(t, j).clone();
                if let Some(c) = ring.div_exact(&q, &p) {
                    let one = ring.one();
                    let zero = ring.zero();
                    let negc = ring.neg(&c);
                    a.combine_cols(ring, t, j, [&one, &zero, &negc, &one]);
                    v.combine_cols(ring, t, j, [&one, &zero, &negc, &one]);
                } else {
                    let e = ring.xgcd(&p, &q);
                    let alpha = ring.div_exact(&p, &e.gcd).unwrap();
                    let beta = ring.neg(&ring.div_exact(&q, &e.gcd).unwrap());
                    a.combine_cols(ring, t, j, [&e.s, &e.t, &beta, &alpha]);
                    v.combine_cols(ring, t, j, [&e.s, &e.t, &beta, &alpha]);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // pivot must divide the remaining block
            let p = a.get(t, t).clone();
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !ring.divides(&p, a.get(i, j)));
            match offender {
                Some((i, _)) => {
                    let one = ring.one();
                    let zero = ring.zero();
                    a.combine_rows(ring, t, i, [&one, &one, &zero, &one]);
                    u.combine_rows(ring, t, i, [&one, &one, &zero, &one]);
                }
                None => break,
            }
        }
        t += 1;
    }
    let rank = (0..rows.min(cols))
        .take_while(|&i| !ring.is_zero(a.get(i, i)))
        .count();
    for i in 0..rank {
        let (canon, unit) = ring.normalize(a.get(i, i));
        let inv = ring.inverse(&unit).expect("normalizing factor is a unit");
        for j in 0..cols {
            let x = ring.mul(a.get(i, j), &inv);
            a.set(i, j, x);
        }
        for j in 0..rows {
            let x = ring.mul(u.get(i, j), &inv);
            u.set(i, j, x);
        }
        debug_assert_eq!(a.get(i, i), &canon);
    }
    Ok(Snf { u, d: a, v, rank })
}
