//! Entanglement-assisted parameters, propagation, Singleton-like bounds and
//! the regenerated tables.

use hermhull::quantum::tables::{emit_tables, render, RowStatus, TableFormat};
use hermhull::quantum::*;
use hermhull::Error;

fn ing(n: usize, k: usize, hull_dim: usize) -> ClassicalIngredient {
    ClassicalIngredient { q: 7, n, k, hull_dim }
}

#[test]
fn eaqecc_arithmetic() {
    // [49, 7] code with a 5-dimensional hull
    let p = eaqecc_from_code(&ing(49, 7, 5)).unwrap();
    assert_eq!(p.tuple(), (49, 37, 8, 2));
    assert!(singleton_check(&p).mds);
    assert_eq!(p.to_string(), "[[49,37,8;2]]_7");
    // self-orthogonal [50, 7] code gives a stabilizer code
    let s = eaqecc_from_code(&ing(50, 7, 7)).unwrap();
    assert_eq!(s.tuple(), (50, 36, 8, 0));
    assert!(singleton_check(&s).mds);
    assert!(eaqecc_from_code(&ing(10, 6, 6)).is_err());
    assert!(eaqecc_from_code(&ing(10, 11, 0)).is_err());
}

#[test]
fn bound_violation_is_reported() {
    let p = QuantumParams::new(49, 40, 8, 2, 7);
    let s = singleton_check(&p);
    assert!(s.slack_small < 0);
    assert!(!s.mds);
    // non-tight but valid
    let p = QuantumParams::new(49, 30, 8, 2, 7);
    assert!(!singleton_check(&p).mds);
    assert!(singleton_check(&p).slack_small > 0);
}

#[test]
fn large_distance_bound() {
    // 2 * 23 < 49 keeps this one in the small-distance regime
    let p = QuantumParams::new(49, 12, 24, 9, 7);
    assert!(singleton_check(&p).mds);
    assert!(singleton_check(&p).slack_large.is_none());
    let p = QuantumParams::new(10, 1, 6, 1, 7);
    let s = singleton_check(&p);
    let (num, den) = s.slack_large.unwrap();
    assert!(den > 0);
    assert_eq!(s.mds, num == 0);
}

#[test]
fn propagation() {
    let p = eaqecc_from_code(&ing(49, 7, 5)).unwrap();
    let r = propagate(&p, 3, 5).unwrap();
    assert_eq!(r.tuple(), (49, 40, 8, 5));
    assert!(matches!(propagate(&p, 6, 5), Err(Error::Parameter(_))));
    let mut impure = p;
    impure.pure = false;
    assert!(matches!(propagate(&impure, 1, 5), Err(Error::Hypothesis(_))));
    let binary = QuantumParams::new(8, 2, 3, 0, 2);
    assert!(propagate(&binary, 1, 2).is_err());
    // propagation keeps the slack of the small-distance bound
    let before = singleton_check(&p).slack_small;
    assert_eq!(singleton_check(&r).slack_small, before);
}

#[test]
fn tables_at_seven() {
    let t = emit_tables(7).unwrap();
    let tuples: Vec<_> = t.rows().filter_map(|r| r.code.map(|c| c.tuple())).collect();
    for want in [(49, 25, 15, 4), (41, 29, 8, 2), (49, 37, 8, 2), (25, 11, 9, 2)] {
        assert!(tuples.contains(&want), "{want:?}");
    }
    assert!(t.table2_round_trip());
    assert_eq!(t.table1_mismatches(), 0);
    for r in t.table3.iter().filter(|r| r.status == RowStatus::New) {
        assert!(r.mds, "{:?}", r.code);
    }
    assert!(t.table3.iter().all(|r| r.status != RowStatus::Dominated));
    // the one listed entry no in-range construction produces
    assert_eq!(t.missing_new, vec![(33, 10, 16, 8)]);
    assert!(!t.all_ok());
}

#[test]
fn table1_row_from_a_larger_code() {
    let t = emit_tables(5).unwrap();
    let r = t
        .table1
        .iter()
        .find(|r| r.column == "Q3'" && r.code.map(|c| c.tuple()) == Some((24, 20, 5, 4)))
        .expect("Q3' row for CON2 at q = 5");
    assert_eq!(r.status, RowStatus::Regenerated);
    assert!(r.mds);
}

#[test]
fn rendering_is_stable() {
    let t = emit_tables(5).unwrap();
    for fmt in [TableFormat::Json, TableFormat::Csv, TableFormat::Markdown] {
        let a = render(&t, fmt).unwrap();
        assert_eq!(a, render(&emit_tables(5).unwrap(), fmt).unwrap());
    }
    let csv = render(&t, TableFormat::Csv).unwrap();
    assert!(csv.starts_with("table,row,column,source,n,kappa,delta,c,expected,mds,status,note"));
    assert!("yaml".parse::<TableFormat>().is_err());
    assert!(emit_tables(2).is_err());
}

#[test]
fn reference_rows_are_consistent() {
    for r in reference_rows(7) {
        let p = QuantumParams::new(r.n, r.kappa, r.delta, r.c, 7);
        assert!(singleton_check(&p).slack_small >= 0, "{r:?}");
    }
    assert_eq!(TABLE3_NEW.len(), 20);
}
