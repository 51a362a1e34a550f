//! Membership in `Loc(R/I)` and `Loc(R_f)`, homological support and the
//! lattice invariant of a complex.
//!
//! Over a PID a homology class `x` is `I`-power torsion iff it is
//! `fᵢ`-power torsion for each generator `fᵢ`: if `fᵢ^{kᵢ} x = 0` then
//! `I^{k₁+⋯+kₙ} x = 0`, since every product of that many generators
//! contains some `fᵢ^{kᵢ}`. On `R/(d)` that means `fᵢ ∈ √(d)`.

use super::{homology, ChainComplex, ModulePresentation};
use crate::error::{Error, Result};
use crate::ring::{radical_member, RingDescriptor, RingElement};
use crate::zariski::{Open, RadicalIdeal};

fn same_ring(a: &RingDescriptor, b: &RingDescriptor) -> Result<()> {
    if a != b {
        return Err(Error::RingMismatch(format!("{} vs {}", a, b)));
    }
    Ok(())
}

/// Every element of the module is killed by a power of `f`.
pub fn module_is_power_torsion(m: &ModulePresentation, f: &RingElement) -> Result<bool> {
    let r = &m.ring;
    if radical_member(r, f, &[r.zero()])? {
        return Ok(true);
    }
    if m.rank > 0 {
        return Ok(false);
    }
    for d in &m.divisors {
        if !radical_member(r, f, std::slice::from_ref(d))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Multiplication by `f` is bijective on the module.
pub fn module_is_invertible(m: &ModulePresentation, f: &RingElement) -> Result<bool> {
    let r = &m.ring;
    if r.is_unit(f) || m.is_zero() {
        return Ok(true);
    }
    if m.rank > 0 {
        return Ok(false);
    }
    Ok(m.divisors.iter().all(|d| r.is_unit(&r.gcd(f, d))))
}

/// All homology is `I`-power torsion, i.e. `C ∈ Loc(R/I)`.
pub fn is_i_torsion(c: &ChainComplex, i: &RadicalIdeal) -> Result<bool> {
    same_ring(c.ring(), &i.ring)?;
    for h in homology(c)?.values() {
        for f in &i.gens {
            if !module_is_power_torsion(h, f)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All homology modules are `R_f`-modules, i.e. `C ∈ Loc(R_f)`.
pub fn is_f_invertible(c: &ChainComplex, f: &RingElement) -> Result<bool> {
    c.ring().check(f)?;
    for h in homology(c)?.values() {
        if !module_is_invertible(h, f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The ideal `I` with `supph(C) = Z(I)`.
pub fn supph(c: &ChainComplex) -> Result<RadicalIdeal> {
    let r = c.ring();
    let hs = homology(c)?;
    if hs.values().any(|h| h.rank > 0) {
        return Ok(RadicalIdeal::zero(r));
    }
    let ds: Vec<&RingElement> = hs.values().flat_map(|h| h.divisors.iter()).collect();
    Ok(RadicalIdeal { ring: r.clone(), gens: vec![r.product(ds)] })
}

/// The Hochster open naming `Loc(C)`.
pub fn loc_invariant(c: &ChainComplex) -> Result<Open> {
    Ok(Open::Hochster(supph(c)?))
}

/// `Loc(C) = Loc(D)`.
pub fn cellular_equiv(c: &ChainComplex, d: &ChainComplex) -> Result<bool> {
    same_ring(c.ring(), d.ring())?;
    loc_invariant(c)?.equiv(&loc_invariant(d)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derived::koszul;

    fn k(xs: &[i64]) -> ChainComplex {
        let r = RingDescriptor::Integers;
        koszul(&r, &xs.iter().map(|&x| r.from_int(x)).collect::<Vec<_>>()).unwrap()
    }

    fn rad(xs: &[&str]) -> RadicalIdeal {
        RadicalIdeal::parse(&RingDescriptor::Integers, xs).unwrap()
    }

    #[test]
    fn torsion() {
        assert!(is_i_torsion(&k(&[2]), &rad(&["2"])).unwrap());
        assert!(is_i_torsion(&k(&[4]), &rad(&["2"])).unwrap());
        assert!(!is_i_torsion(&k(&[3]), &rad(&["2"])).unwrap());
        assert!(!is_i_torsion(&k(&[]), &rad(&["2"])).unwrap());
        assert!(is_i_torsion(&k(&[2, 3]), &rad(&["1"])).unwrap());
        assert!(!is_i_torsion(&k(&[2]), &rad(&["1"])).unwrap());
        assert!(is_i_torsion(&k(&[]), &rad(&["0"])).unwrap());
    }

    #[test]
    fn invertibility() {
        let r = RingDescriptor::Integers;
        assert!(is_f_invertible(&k(&[3]), &r.from_int(2)).unwrap());
        assert!(!is_f_invertible(&k(&[3]), &r.from_int(3)).unwrap());
        assert!(is_f_invertible(&k(&[2, 3]), &r.from_int(7)).unwrap());
        assert!(!is_f_invertible(&k(&[]), &r.from_int(7)).unwrap());
    }

    #[test]
    fn supports() {
        assert!(supph(&k(&[6])).unwrap().equiv(&rad(&["6"])).unwrap());
        assert!(supph(&k(&[2, 3])).unwrap().is_unit().unwrap());
        assert!(supph(&k(&[])).unwrap().is_nil().unwrap());
        let a = loc_invariant(&k(&[12])).unwrap();
        assert!(a.equiv(&Open::Hochster(rad(&["6"]))).unwrap());
        assert!(cellular_equiv(&k(&[4]), &k(&[2])).unwrap());
        assert!(!cellular_equiv(&k(&[2]), &k(&[3])).unwrap());
        let r = RingDescriptor::Integers;
        let k2k3 = k(&[2]).tensor(&k(&[3])).unwrap();
        assert!(cellular_equiv(&k2k3, &ChainComplex::zero(&r)).unwrap());
    }
}
