use pointfree_core::hochster::opposite_presentation;
use pointfree_core::ring::RingDescriptor;
use pointfree_core::scheme::{
    domain_presheaf_value, glue, restriction, sheaf_condition_check, structure_sheaf_value, SchemeSpec,
};
use pointfree_core::ttc::{compare_with_ring, koszul_divisor_presentation, supp_leq};
use pointfree_core::zariski::{as_lattice, integer_points, primes_up_to, term_ideal, ideal_term, Open, RadicalIdeal};
use pointfree_core::Error;
use proptest::prelude::*;

fn z() -> RingDescriptor {
    RingDescriptor::Integers
}

fn rad(xs: &[i64]) -> RadicalIdeal {
    RadicalIdeal { ring: z(), gens: xs.iter().map(|&x| z().from_int(x)).collect() }
}

fn prime_set(n: i64) -> Vec<i64> {
    primes_up_to(n.unsigned_abs()).into_iter().map(|p| p as i64).filter(|p| n % p == 0).collect()
}

#[test]
fn zariski_lattice_of_integers_on_three_generators() {
    let gens: Vec<_> = [2, 3, 6].iter().map(|&n| z().from_int(n)).collect();
    let l = as_lattice(&z(), &gens).unwrap();
    let d = |n: i64| ideal_term(&rad(&[n]));
    // D(6) = D(2) ∧ D(3) is forced by the ring, not by the presentation
    assert!(l.equivalent(&d(6), &l.meet(&d(2), &d(3)).unwrap()).unwrap());
    assert!(term_ideal(&z(), &d(2).or(&d(3))).unwrap().equiv(&rad(&[2, 3])).unwrap());
    // the oracle-backed lattice has no point enumeration; its opposite flips entailment
    assert!(l.points().is_err());
    let op = opposite_presentation(&l).unwrap();
    assert!(op.entails(&d(2).flip(), &d(6).flip()).unwrap());
    assert!(!op.entails(&d(6).flip(), &d(2).flip()).unwrap());
}

#[test]
fn divisor_presentation_with_repeated_supports() {
    let (p, dict) = koszul_divisor_presentation(12).unwrap();
    assert!(compare_with_ring(&p, &z(), &dict).unwrap().consistent());
    // K(2) and K(4) have the same support, as do K(6) and K(12)
    assert!(supp_leq(&p, "K(4)", "K(2)").unwrap() && supp_leq(&p, "K(2)", "K(4)").unwrap());
    assert!(supp_leq(&p, "K(12)", "K(6)").unwrap());
    assert!(supp_leq(&p, "K(2)", "K(6)").unwrap() && !supp_leq(&p, "K(6)", "K(2)").unwrap());
    assert!(!supp_leq(&p, "K(2)", "K(3)").unwrap());
}

#[test]
fn structure_sheaf_on_spec_z() {
    let x = glue(&SchemeSpec::affine(z())).unwrap();
    let v = structure_sheaf_value(&x, 0, &z().from_int(6)).unwrap();
    assert_eq!(v, z().localize(&z().from_int(6)).unwrap().ring);
    let r = restriction(&x, 0, &z().from_int(2), &z().from_int(6)).unwrap();
    let half = r.source().parse("1/2").unwrap();
    assert_eq!(r.apply(&half).unwrap(), r.target().parse("1/2").unwrap());
    assert!(matches!(restriction(&x, 0, &z().from_int(6), &z().from_int(2)), Err(Error::Precondition(_))));
    assert_eq!(domain_presheaf_value(&rad(&[12, 18])).unwrap().describe(), "Z/6");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn hochster_and_zariski_points_partition_spec_z(n in 1i64..=300) {
        let bound = 50;
        let d = integer_points(&Open::Zariski(rad(&[n])), bound).unwrap();
        let v = integer_points(&Open::Hochster(rad(&[n])), bound).unwrap();
        let expect_v: Vec<i64> = prime_set(n).into_iter().filter(|&p| p <= bound as i64).collect();
        prop_assert_eq!(v.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                        expect_v.iter().map(|p| p.to_string()).collect::<Vec<_>>());
        // the generic point and every prime not dividing n lie in D(n)
        prop_assert_eq!(d.len() + v.len(), 1 + primes_up_to(bound).len());
    }

    #[test]
    fn sheaf_condition_on_coprime_refinements(g in 1i64..=30, a in 1i64..=12, b in 1i64..=12) {
        prop_assume!(num_integer::gcd(a, b) == 1);
        let x = glue(&SchemeSpec::affine(z())).unwrap();
        let cover = [z().from_int(g * a), z().from_int(g * b)];
        let c = sheaf_condition_check(&x, 0, &z().from_int(g), &cover, 3).unwrap();
        prop_assert!(c.pass);
    }
}
