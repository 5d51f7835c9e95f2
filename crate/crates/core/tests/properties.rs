//! Randomized invariants over small codes and evaluation sets.

use std::sync::Arc;

use hermhull::ag::residues;
use hermhull::quantum::{propagate, singleton_check, QuantumParams};
use hermhull::{Elem, Field, LinearCode};
use proptest::prelude::*;

fn field(q: u32) -> Arc<Field> {
    Field::quadratic(q).unwrap()
}

/// (q, n, rows) with entries given as indices into the field's elements.
fn code_input() -> impl Strategy<Value = (u32, usize, Vec<Vec<usize>>)> {
    (prop::sample::select(vec![2u32, 3, 4, 5]), 1usize..=10).prop_flat_map(|(q, n)| {
        let order = (q * q) as usize;
        let k_max = n.min(5);
        (Just(q), Just(n), prop::collection::vec(prop::collection::vec(0..order, n), 0..=k_max))
    })
}

fn build(q: u32, n: usize, rows: &[Vec<usize>]) -> LinearCode {
    let f = field(q);
    let els = f.elements();
    let g: Vec<Vec<Elem>> = rows.iter().map(|r| r.iter().map(|&i| els[i]).collect()).collect();
    LinearCode::from_rows(&f, n, &g).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn dual_and_hull_identities((q, n, rows) in code_input()) {
        let c = build(q, n, &rows);
        prop_assert!(c.k() <= rows.len());
        let dh = c.hermitian_dual().unwrap();
        let de = c.euclidean_dual();
        prop_assert_eq!(c.k() + dh.k(), n);
        prop_assert_eq!(c.k() + de.k(), n);
        prop_assert_eq!(&dh.hermitian_dual().unwrap(), &c);
        prop_assert_eq!(&de.euclidean_dual(), &c);
        let hull = c.hermitian_hull().unwrap();
        prop_assert_eq!(hull.k(), c.hull_dim_via_gram().unwrap());
        prop_assert_eq!(&hull, &dh.hermitian_hull().unwrap());
        prop_assert!(hull.is_subcode_of(&c) && hull.is_subcode_of(&dh));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn residues_sum_to_zero(
        q in prop::sample::select(vec![3u32, 4, 5, 7]),
        picks in prop::collection::btree_set(0usize..49, 2..20),
    ) {
        let f = field(q);
        let els = f.elements();
        let pts: Vec<Elem> = picks.into_iter().filter(|&i| i < els.len()).map(|i| els[i]).collect();
        prop_assume!(pts.len() >= 2);
        prop_assert!(residues(&f, &pts).unwrap().residue_sum(&f).is_zero());
    }

    #[test]
    fn propagation_keeps_bound_slack(
        (n, k, hull, i) in (2usize..60)
            .prop_flat_map(|n| (Just(n), 1..=n / 2))
            .prop_flat_map(|(n, k)| (Just(n), Just(k), 0..=k))
            .prop_flat_map(|(n, k, h)| (Just(n), Just(k), Just(h), 0..=h)),
    ) {
        let c = k - hull;
        let p = QuantumParams::new(n, n + c - 2 * k, k + 1, c, 7);
        let r = propagate(&p, i, hull).unwrap();
        prop_assert_eq!(r.kappa - p.kappa, i);
        prop_assert_eq!(r.c - p.c, i);
        prop_assert_eq!(singleton_check(&r).slack_small, singleton_check(&p).slack_small);
    }
}
