use std::collections::BTreeMap;

use proptest::prelude::*;

use tnnflag::algebra::rat;
use tnnflag::membership::{decide_tnn, decide_trop, psi, trop_psi};
use tnnflag::oracle::flag_matroid_check;
use tnnflag::perms::{bruhat_leq, bruhat_pairs};
use tnnflag::plucker::{generate_relations, phi, trop_check_relation, trop_phi};
use tnnflag::subset::gale_leq;
use tnnflag::{Cell, Permutation, Rational, Subset, TropValue};

fn cell_strategy() -> impl Strategy<Value = (Permutation, Permutation)> {
    let pairs: Vec<(Permutation, Permutation)> = (2..=4).flat_map(bruhat_pairs).collect();
    proptest::sample::select(pairs)
}

fn weights(cell: &Cell, raw: &[(i64, i64)]) -> BTreeMap<usize, Rational> {
    cell.weight_ids()
        .into_iter()
        .zip(raw)
        .map(|(j, &(p, q))| (j, rat(p, q)))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn phi_is_nonnegative_and_inverts((v, w) in cell_strategy(), raw in prop::collection::vec((1i64..200, 1i64..20), 6)) {
        let cell = Cell::new(&v, &w).unwrap();
        let a = weights(&cell, &raw);
        let p = phi(&v, &w, &a).unwrap();
        prop_assert!(p.iter().all(|(_, x)| *x >= rat(0, 1)));
        prop_assert!(flag_matroid_check(&p.support()));
        prop_assert_eq!(psi(&v, &w, &p).unwrap(), a);
        let cert = decide_tnn(&p).unwrap();
        prop_assert!(cert.is_member());
        prop_assert_eq!(cert.cell, Some((v, w)));
    }

    #[test]
    fn trop_phi_is_positive_and_inverts((v, w) in cell_strategy(), raw in prop::collection::vec(-50i64..50, 6)) {
        let cell = Cell::new(&v, &w).unwrap();
        let x: BTreeMap<usize, TropValue> =
            cell.weight_ids().into_iter().zip(raw).map(|(j, t)| (j, TropValue::int(t))).collect();
        let t = trop_phi(&v, &w, &x).unwrap();
        for rel in generate_relations(v.n(), true) {
            prop_assert!(trop_check_relation(&rel, &t, true));
        }
        prop_assert_eq!(trop_psi(&v, &w, &t).unwrap(), x);
        prop_assert!(decide_trop(&t).unwrap().is_member());
    }

    #[test]
    fn scaling_a_block_keeps_membership((v, w) in cell_strategy(), raw in prop::collection::vec((1i64..50, 1i64..9), 6), c in (1i64..30, 1i64..30), k in 1usize..4) {
        let cell = Cell::new(&v, &w).unwrap();
        let mut p = phi(&v, &w, &weights(&cell, &raw)).unwrap();
        let k = k.min(v.n() - 1);
        for s in p.indices().into_iter().filter(|s| s.len() == k) {
            let x = p.get(s) * rat(c.0, c.1);
            p.set(s, x);
        }
        prop_assert!(decide_tnn(&p).unwrap().is_member());
    }

    #[test]
    fn bruhat_is_a_partial_order(a in 0usize..24, b in 0usize..24) {
        let all = tnnflag::perms::all_permutations(4);
        let (u, v) = (&all[a], &all[b]);
        let uv = bruhat_leq(u, v).unwrap();
        let vu = bruhat_leq(v, u).unwrap();
        prop_assert!(!(uv && vu) || u == v);
        prop_assert!(!uv || u.length() <= v.length());
    }

    #[test]
    fn gale_order_is_antisymmetric(x in 1u32..63, y in 1u32..63) {
        let (i, j) = (Subset::from_mask(x), Subset::from_mask(y));
        prop_assume!(i.len() == j.len());
        let ij = gale_leq(i, j).unwrap();
        let ji = gale_leq(j, i).unwrap();
        prop_assert!(!(ij && ji) || i == j);
    }
}
