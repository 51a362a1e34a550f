use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficient field of a polynomial ring.
///
/// Prime-field values are stored as integral rationals in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(BigInt),
}

impl Field {
    pub fn reduce(&self, c: BigRational) -> BigRational {
        match self {
            Field::Rationals => c,
            Field::Prime(p) => {
                let num = c.numer().mod_floor(p);
                let den = c.denom().mod_floor(p);
                let inv = mod_inverse(&den, p).expect("denominator not invertible mod p");
                BigRational::from_integer((num * inv).mod_floor(p))
            }
        }
    }

    pub fn from_int(&self, n: &BigInt) -> BigRational {
        self.reduce(BigRational::from_integer(n.clone()))
    }

    pub fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.reduce(a + b)
    }

    pub fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.reduce(a - b)
    }

    pub fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.reduce(a * b)
    }

    pub fn neg(&self, a: &BigRational) -> BigRational {
        self.reduce(-a)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            return None;
        }
        match self {
            Field::Rationals => Some(a.recip()),
            Field::Prime(p) => mod_inverse(a.numer(), p).map(BigRational::from_integer),
        }
    }

    pub fn characteristic(&self) -> BigInt {
        match self {
            Field::Rationals => BigInt::zero(),
            Field::Prime(p) => p.clone(),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Field::Rationals => "Q".to_string(),
            Field::Prime(p) => format!("F{}", p),
        }
    }
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.abs().is_one() {
        Some((e.x * e.gcd.signum()).mod_floor(m))
    } else {
        None
    }
}

/// Trial-division primality test, adequate for the desk-scale moduli used here.
pub fn is_probable_prime(n: &BigInt) -> bool {
    if *n < BigInt::from(2) {
        return false;
    }
    let mut d = BigInt::from(2);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            return false;
        }
        d += 1;
        if d > BigInt::from(1_000_000) {
            // large moduli are taken on trust
            return true;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = Field::Prime(BigInt::from(7));
        let three = f.from_int(&BigInt::from(3));
        let inv = f.inv(&three).unwrap();
        assert_eq!(f.mul(&three, &inv), BigRational::one());
        assert_eq!(f.from_int(&BigInt::from(-1)), BigRational::from_integer(BigInt::from(6)));
    }

    #[test]
    fn primality() {
        assert!(is_probable_prime(&BigInt::from(97)));
        assert!(!is_probable_prime(&BigInt::from(91)));
        assert!(!is_probable_prime(&BigInt::from(1)));
    }
}
