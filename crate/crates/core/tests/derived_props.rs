use pointfree_core::derived::{
    cellular_equiv, homology, is_f_invertible, is_i_torsion, koszul, local_cohomology, supph,
    ChainComplex, ModulePresentation,
};
use pointfree_core::ring::{Field, RingDescriptor, RingElement};
use pointfree_core::zariski::{zar_join, zar_meet, RadicalIdeal};
use proptest::prelude::*;

fn z() -> RingDescriptor {
    RingDescriptor::Integers
}

fn qx() -> RingDescriptor {
    RingDescriptor::polynomial(Field::Rationals, &["x"])
}

fn ints(xs: &[i64]) -> Vec<RingElement> {
    xs.iter().map(|&x| z().from_int(x)).collect()
}

// products of x, x−1, x+1, x²+1 with exponents from the mask digits
fn qx_elem(code: u32) -> RingElement {
    let r = qx();
    let factors = ["x", "x - 1", "x + 1", "x^2 + 1"];
    let mut e = r.one();
    let mut c = code;
    for f in factors {
        let k = c % 3;
        c /= 3;
        e = r.mul(&e, &r.pow(&r.parse(f).unwrap(), k));
    }
    e
}

fn euler(c: &ChainComplex) -> i64 {
    c.degrees().map(|n| if n % 2 == 0 { c.rank(n) as i64 } else { -(c.rank(n) as i64) }).sum()
}

fn check_identities(r: &RingDescriptor, i: &[RingElement], j: &[RingElement]) {
    let (ki, kj) = (koszul(r, i).unwrap(), koszul(r, j).unwrap());
    let (ri, rj) = (
        RadicalIdeal { ring: r.clone(), gens: i.to_vec() },
        RadicalIdeal { ring: r.clone(), gens: j.to_vec() },
    );
    let sum = supph(&ki.direct_sum(&kj).unwrap()).unwrap();
    assert!(sum.equiv(&zar_meet(&ri, &rj).unwrap()).unwrap(), "{} ⊕ {}", ri, rj);
    let tensor = supph(&ki.tensor(&kj).unwrap()).unwrap();
    assert!(tensor.equiv(&zar_join(&ri, &rj).unwrap()).unwrap(), "{} ⊗ {}", ri, rj);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn lattice_identities_over_integers(
        i in prop::collection::vec(-30i64..=30, 1..=2),
        j in prop::collection::vec(-30i64..=30, 1..=2),
    ) {
        check_identities(&z(), &ints(&i), &ints(&j));
    }

    #[test]
    fn lattice_identities_over_qx(a in 0u32..81, b in 0u32..81) {
        check_identities(&qx(), &[qx_elem(a)], &[qx_elem(b)]);
    }

    #[test]
    fn tensor_is_symmetric_and_euler_multiplicative(
        i in prop::collection::vec(-12i64..=12, 1..=2),
        j in prop::collection::vec(-12i64..=12, 1..=2),
    ) {
        let (a, b) = (koszul(&z(), &ints(&i)).unwrap(), koszul(&z(), &ints(&j)).unwrap());
        let ab = a.tensor(&b).unwrap();
        let ba = b.tensor(&a).unwrap();
        prop_assert_eq!(homology(&ab).unwrap(), homology(&ba).unwrap());
        prop_assert_eq!(euler(&ab), euler(&a) * euler(&b));
        // Euler characteristic of homology equals that of the chains (free parts)
        let h: i64 = homology(&ab).unwrap().iter()
            .map(|(n, m)| if n % 2 == 0 { m.rank as i64 } else { -(m.rank as i64) }).sum();
        prop_assert_eq!(h, euler(&ab));
    }

    #[test]
    fn koszul_torsion_and_invertibility(f in 1i64..=60, g in 1i64..=60) {
        let k = koszul(&z(), &ints(&[f])).unwrap();
        let i = RadicalIdeal { ring: z(), gens: ints(&[f]) };
        prop_assert!(is_i_torsion(&k, &i).unwrap());
        // K(f) is g-invertible iff f and g are coprime
        let coprime = num_integer::gcd(f, g) == 1;
        prop_assert_eq!(is_f_invertible(&k, &z().from_int(g)).unwrap(), coprime);
        // K(f) and K(f²) generate the same localizing subcategory
        let k2 = koszul(&z(), &ints(&[f * f])).unwrap();
        prop_assert!(cellular_equiv(&k, &k2).unwrap());
    }
}

#[test]
fn local_cohomology_of_torsion_free_and_torsion() {
    let i = RadicalIdeal::parse(&z(), &["2", "6"]).unwrap();
    let m = ModulePresentation::new(&z(), 2, &ints(&[8, 3])).unwrap();
    let h = local_cohomology(&i, &m).unwrap();
    assert_eq!(h.to_string(), "H^0 = Z/(8), H^1 = (Z[1/(2)]/Z)^2");
    assert!(h.is_power_torsion(&z().from_int(2)).unwrap());
}

#[test]
fn complex_json_roundtrip() {
    let k = koszul(&z(), &ints(&[4, 6])).unwrap();
    let back = ChainComplex::from_json(&k.to_json()).unwrap();
    assert_eq!(homology(&back).unwrap(), homology(&k).unwrap());
}
