//! The total Hom complex and its homology.

use std::collections::BTreeMap;

use super::{homology, ChainComplex, ModulePresentation};
use crate::error::Result;
use crate::ring::Matrix;

/// `Hom(C, D)ₙ = ∏ₚ Hom(Cₚ, Dₚ₊ₙ)` with `(∂f)ₚ = ∂ᴰ fₚ − (−1)ⁿ fₚ₋₁ ∂ᶜ`.
/// If `D` lives over a localization of `C`'s ring, `C` is base-changed
/// first. Its homology in degree `n` is `Hom(C, ΣⁿD)` in the derived
/// category, as `C` is a bounded complex of free modules.
pub fn hom_complex(c: &ChainComplex, d: &ChainComplex) -> Result<ChainComplex> {
    let c = c.base_change(d.ring())?;
    let r = d.ring();
    let lo = d.lo() - c.hi();
    let hi = d.hi() - c.lo();
    // block layout of Homₙ: one rank(D_{p+n}) × rank(C_p) block per p
    let layout = |n: i64| -> (BTreeMap<i64, usize>, usize) {
        let mut off = BTreeMap::new();
        let mut total = 0;
        for p in c.degrees() {
            off.insert(p, total);
            total += d.rank(p + n) * c.rank(p);
        }
        (off, total)
    };
    let ranks: Vec<usize> = (lo..=hi).map(|n| layout(n).1).collect();
    let mut diffs = Vec::new();
    for n in lo + 1..=hi {
        let (src, ns) = layout(n);
        let (tgt, nt) = layout(n - 1);
        let mut m = Matrix::zeros(r, nt, ns);
        let sign = if n.rem_euclid(2) == 1 { r.one() } else { r.from_int(-1) };
        for p in c.degrees() {
            let (cp, dq) = (c.rank(p), d.rank(p + n));
            let dd = d.diff(p + n);
            // fₚ[k][b] feeds (∂ᴰ fₚ)[a][b] in block p of degree n−1
            for k in 0..dq {
                for b in 0..cp {
                    let col = src[&p] + k * cp + b;
                    for a in 0..d.rank(p + n - 1) {
                        let e = dd.get(a, k);
                        if !r.is_zero(e) {
                            let row = tgt[&p] + a * cp + b;
                            m.set(row, col, r.add(m.get(row, col), e));
                        }
                    }
                }
            }
            // fₚ[a][k] feeds −(−1)ⁿ (fₚ ∂ᶜₚ₊₁)[a][b] in block p+1 of degree n−1
            if let Some(&base) = tgt.get(&(p + 1)) {
                let dc = c.diff(p + 1);
                let cp1 = c.rank(p + 1);
                for a in 0..dq {
                    for kk in 0..cp {
                        let col = src[&p] + a * cp + kk;
                        for b in 0..cp1 {
                            let e = dc.get(kk, b);
                            if !r.is_zero(e) {
                                let row = base + a * cp1 + b;
                                m.set(row, col, r.add(m.get(row, col), &r.mul(&sign, e)));
                            }
                        }
                    }
                }
            }
        }
        diffs.push(m);
    }
    ChainComplex::new(r.clone(), lo, ranks, diffs)
}

pub fn derived_hom_groups(c: &ChainComplex, d: &ChainComplex) -> Result<BTreeMap<i64, ModulePresentation>> {
    homology(&hom_complex(c, d)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derived::koszul;
    use crate::ring::RingDescriptor;

    #[test]
    fn endomorphisms_of_the_unit() {
        let r = RingDescriptor::Integers;
        let u = ChainComplex::unit(&r);
        let h = derived_hom_groups(&u, &u).unwrap();
        assert_eq!(h.len(), 1);
        assert_eq!(h[&0], ModulePresentation::free(&r, 1));
    }

    #[test]
    fn koszul_is_orthogonal_to_its_localization() {
        let r = RingDescriptor::Integers;
        for f in [2, 3, 6, 30] {
            let rf = r.localize(&r.from_int(f)).unwrap().ring;
            let k = koszul(&r, &[r.from_int(f)]).unwrap();
            let h = derived_hom_groups(&k, &ChainComplex::unit(&rf)).unwrap();
            assert!(h.values().all(ModulePresentation::is_zero), "f = {}", f);
        }
    }

    #[test]
    fn self_hom_of_koszul() {
        let r = RingDescriptor::Integers;
        let k = koszul(&r, &[r.from_int(2)]).unwrap();
        let h = derived_hom_groups(&k, &k).unwrap();
        let z2 = ModulePresentation::cyclic(&r, &r.from_int(2)).unwrap();
        assert_eq!(h[&-1], z2);
        assert_eq!(h[&0], z2);
        assert!(h[&1].is_zero());
    }
}
