use std::collections::HashMap;

use pointfree_core::hochster::{double_dual_check, dual_points, opposite_presentation};
use pointfree_core::lattice::{
    birkhoff_roundtrip, DLatticePresentation, FiniteLattice, LatticePoint, LatticeTerm,
};
use proptest::prelude::*;

const NAMES: [&str; 4] = ["a", "b", "c", "d"];

fn term(n: usize) -> impl Strategy<Value = LatticeTerm> {
    let clause = prop::collection::btree_set(0..n, 0..=2);
    prop_oneof![
        1 => Just(LatticeTerm::top()),
        1 => Just(LatticeTerm::bottom()),
        6 => prop::collection::vec(clause, 1..=2).prop_map(|cs| {
            LatticeTerm::from_clauses(
                cs.into_iter().map(|c| c.into_iter().map(|i| NAMES[i].to_string()).collect()),
            )
        }),
    ]
}

fn presentation(max_gens: usize) -> impl Strategy<Value = DLatticePresentation> {
    (1..=max_gens).prop_flat_map(|n| {
        prop::collection::vec((term(n), term(n)), 0..=4).prop_map(move |rels| {
            let gens = NAMES[..n].iter().map(|s| s.to_string()).collect();
            DLatticePresentation::new(gens, rels).unwrap()
        })
    })
}

/// Truth table of a term: bit `v` is set when the valuation `v` satisfies it.
fn table(t: &LatticeTerm, n: usize) -> u64 {
    (0..1u64 << n)
        .filter(|v| {
            let point = LatticePoint {
                valuation: (0..n).map(|i| (NAMES[i].to_string(), v >> i & 1 == 1)).collect(),
            };
            point.eval(t)
        })
        .fold(0, |acc, v| acc | 1 << v)
}

/// Entailment by derivation: the smallest preorder on the free lattice that
/// contains the free order and the relations and is compatible with ∧ and ∨.
fn derived_order(l: &DLatticePresentation) -> (Vec<LatticeTerm>, Vec<Vec<bool>>) {
    let n = l.generators().len();
    let free = FiniteLattice::enumerate(&DLatticePresentation::free(&NAMES[..n]).unwrap()).unwrap();
    let elems = free.elements().to_vec();
    let tabs: Vec<u64> = elems.iter().map(|t| table(t, n)).collect();
    let index: HashMap<u64, usize> = tabs.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let k = elems.len();
    let mut r = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            r[i][j] = tabs[i] & !tabs[j] == 0;
        }
    }
    for (a, b) in l.relations().unwrap() {
        r[index[&table(a, n)]][index[&table(b, n)]] = true;
    }
    loop {
        let mut changed = false;
        for i in 0..k {
            for j in 0..k {
                if !r[i][j] {
                    continue;
                }
                for c in 0..k {
                    let m = (index[&(tabs[i] & tabs[c])], index[&(tabs[j] & tabs[c])]);
                    let s = (index[&(tabs[i] | tabs[c])], index[&(tabs[j] | tabs[c])]);
                    for (x, y) in [m, s] {
                        if !r[x][y] {
                            r[x][y] = true;
                            changed = true;
                        }
                    }
                    if r[j][c] && !r[i][c] {
                        r[i][c] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return (elems, r);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn entailment_matches_derivation(l in presentation(3)) {
        let (elems, r) = derived_order(&l);
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                prop_assert_eq!(l.entails(a, b).unwrap(), r[i][j], "{} ≤ {}", a, b);
            }
        }
    }

    #[test]
    fn duality_and_birkhoff(l in presentation(4)) {
        prop_assert!(birkhoff_roundtrip(&l).unwrap());
        prop_assert!(double_dual_check(&l).unwrap());
        let op = opposite_presentation(&l).unwrap();
        prop_assert_eq!(dual_points(&l).unwrap().len(), op.points().unwrap().len());
    }

    #[test]
    fn meet_and_join_laws(l in presentation(3), t in term(3), u in term(3), v in term(3)) {
        let n = l.generators().len();
        let restrict = |x: &LatticeTerm| LatticeTerm::from_clauses(
            x.clauses().iter().filter(|c| c.iter().all(|g| NAMES[..n].contains(&g.as_str()))).cloned(),
        );
        let (t, u, v) = (restrict(&t), restrict(&u), restrict(&v));
        let lhs = l.meet(&t, &l.join(&u, &v).unwrap()).unwrap();
        let rhs = l.join(&l.meet(&t, &u).unwrap(), &l.meet(&t, &v).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert!(l.entails(&l.meet(&t, &u).unwrap(), &t).unwrap());
        prop_assert!(l.entails(&t, &l.join(&t, &u).unwrap()).unwrap());
        prop_assert_eq!(l.meet(&t, &u).unwrap(), l.meet(&u, &t).unwrap());
        prop_assert_eq!(l.normalize(&lhs).unwrap(), lhs.clone());
        if l.entails(&u, &v).unwrap() {
            prop_assert!(l.entails(&l.meet(&t, &u).unwrap(), &l.meet(&t, &v).unwrap()).unwrap());
            prop_assert!(l.entails(&l.join(&t, &u).unwrap(), &l.join(&t, &v).unwrap()).unwrap());
        }
    }
}

#[test]
fn truth_table_equivalence_of_normal_form() {
    let g = LatticeTerm::gen;
    let t = g("a").or(&g("b")).and(&g("a").or(&g("c")));
    let expected: LatticeTerm = "a | b&c".parse().unwrap();
    assert_eq!(t.normalize(), expected);
    assert_eq!(table(&t, 3), table(&expected, 3));
}

#[test]
fn lattice_json_roundtrip() {
    let l = DLatticePresentation::new(
        vec!["a".into(), "b".into()],
        vec![("a".parse().unwrap(), "b".parse().unwrap())],
    )
    .unwrap();
    let back = DLatticePresentation::from_json(&l.to_json().unwrap()).unwrap();
    assert_eq!(back.points().unwrap(), l.points().unwrap());
}
