use std::collections::HashSet;

use galrat_core::cyclo::euler_phi;
use galrat_core::lab::brauer_check;
use galrat_core::rationality::{classify, GaloisModel};
use galrat_core::{CharacterTable, ClassData, Cyclo, PermGroup, Permutation};
use proptest::prelude::*;

fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn arb_group() -> impl Strategy<Value = PermGroup> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec(arb_perm(n), 0..=3)
            .prop_map(move |gens| PermGroup::from_generators("G", n, gens).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn group_and_class_invariants(g in arb_group()) {
        let n = g.order();
        prop_assert!(g.element(0).is_identity());
        let set: HashSet<&Permutation> = g.elements().iter().collect();
        for a in g.elements() {
            prop_assert!(set.contains(&a.inverse()));
            for b in g.generators() {
                prop_assert!(set.contains(&a.compose(b)));
            }
        }

        let cd = ClassData::compute(&g);
        prop_assert_eq!(cd.sizes().iter().sum::<u64>(), n as u64);
        prop_assert!(cd.sizes().iter().all(|&s| n as u64 % s == 0));
        prop_assert_eq!(n as u64 % cd.exponent(), 0);
        prop_assert_eq!(cd.exponent(), g.exponent());
        for i in 0..cd.len() {
            let o = cd.element_order(i);
            prop_assert_eq!(cd.exponent() % o, 0);
            for k in 1..=o {
                if num_integer::gcd(k, o) == 1 {
                    let j = cd.power_map(i, k as i64);
                    prop_assert_eq!(cd.size(j), cd.size(i));
                    prop_assert_eq!(cd.element_order(j), o);
                }
            }
            let rep = cd.representative(i).unwrap();
            prop_assert_eq!(cd.centralizer_order(i), g.centralizer_order_direct(rep) as u64);
        }
        prop_assert_eq!(ClassData::compute(&g), cd);
    }

    #[test]
    fn table_and_galois_invariants(g in arb_group()) {
        let t = CharacterTable::compute(&g).unwrap();
        prop_assert!(t.validate().is_ok());
        let k = t.len();
        // Rows are ordered by degree and then serialized text, so the
        // trivial row need not come first; it must occur exactly once.
        prop_assert_eq!(t.rows().iter().filter(|r| r.iter().all(|z| *z == Cyclo::one())).count(), 1);
        let col: Vec<Cyclo> = t.rows().iter().map(|r| r[0].clone()).collect();
        let degrees: Vec<Cyclo> = t.degrees().into_iter().map(|d| Cyclo::from_integer(d as i64)).collect();
        prop_assert_eq!(col, degrees);
        prop_assert_eq!(t.degrees().iter().map(|d| d * d).sum::<u64>(), g.order() as u64);

        let m = GaloisModel::build(&t).unwrap();
        prop_assert!(!brauer_check("G", &m).is_fail());
        let report = classify(&t, &m);
        let units = m.elements().len();
        for chi in 0..k {
            // [Q(chi):Q] = orbit size = units / stabilizer, and the
            // stabilizer is exactly the set fixing every value.
            let stab: Vec<usize> = (0..units).filter(|&s| m.char_perm(s)[chi] as usize == chi).collect();
            prop_assert_eq!(report.character_field_degrees[chi] * stab.len(), units);
            for (s, sigma) in m.elements().iter().enumerate() {
                let fixes = t.row(chi).iter().all(|z| sigma.apply(z).unwrap() == *z);
                prop_assert_eq!(fixes, stab.contains(&s));
            }
        }
        for i in 0..k {
            let o = t.class_data().element_order(i);
            prop_assert_eq!(euler_phi(o) % report.class_field_degrees[i] as u64, 0);
        }
        let again = classify(&t, &GaloisModel::build(&t).unwrap());
        prop_assert_eq!(serde_json::to_string(&again).unwrap(), serde_json::to_string(&report).unwrap());
    }
}
