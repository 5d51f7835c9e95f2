//! GRS families with prescribed Hermitian hulls.

use hermhull::grs::*;
use hermhull::report::Verdict;
use hermhull::{Elem, Field, DEFAULT_BUDGET};

#[test]
fn full_length_hull_is_grs_q_minus_one() {
    for q in [3u32, 4] {
        let f = Field::quadratic(q).unwrap();
        let (code, spec, claim) = construct_family(&f, Family::Con1, FamilyParams::new(q, q as usize), RangePolicy::Strict).unwrap();
        let q = q as usize;
        assert_eq!((code.n(), code.k()), (q * q, q));
        assert!(spec.a().iter().all(|&a| a == Elem::ONE));
        let hull = code.hermitian_hull().unwrap();
        assert_eq!(hull, spec.with_k(q - 1).unwrap().code());
        assert_eq!(hull.k(), q - 1);
        assert_eq!(hull.min_distance(DEFAULT_BUDGET).unwrap(), q * q - q + 2);
        assert!(claim.equality);
    }
}

#[test]
fn grs_is_mds() {
    let f = Field::quadratic(3).unwrap();
    let b: Vec<Elem> = (0..6).map(|i| f.alpha_pow(i)).collect();
    let a: Vec<Elem> = (0..6).map(|i| f.alpha_pow(3 * i)).collect();
    for k in 1..=5 {
        let c = GrsSpec::new(&f, b.clone(), a.clone(), k).unwrap().code();
        assert_eq!(c.k(), k);
        assert!(c.is_mds(DEFAULT_BUDGET).unwrap());
    }
    assert!(GrsSpec::new(&f, vec![Elem::ONE, Elem::ONE], vec![Elem::ONE; 2], 1).is_err());
}

#[test]
fn small_sweeps_pass() {
    for q in [3u32, 4, 5] {
        let f = Field::quadratic(q).unwrap();
        for r in sweep(&f, RangePolicy::Strict, DEFAULT_BUDGET).unwrap() {
            assert_eq!(r.verdict, Verdict::Pass, "{:?}", r.construction);
        }
    }
}

#[test]
fn hull_dims_match_claims_for_unenlarged_families() {
    for q in [4u32, 5, 7] {
        let f = Field::quadratic(q).unwrap();
        for fam in [Family::Con2, Family::Con3, Family::Con4] {
            for p in enumerate_params(fam, q, RangePolicy::Strict) {
                let (code, spec, claim) = construct_family(&f, fam, p, RangePolicy::Strict).unwrap();
                assert_eq!(code.hull_dim_via_gram().unwrap(), p.k - 1, "{fam} {p:?}");
                assert_eq!(code.hermitian_hull().unwrap(), spec.with_k(p.k - 1).unwrap().code());
                assert_eq!(claim.hull_dim, p.k - 1);
            }
        }
    }
}

#[test]
fn range_checks() {
    assert!(range_ok(Family::Con1, FamilyParams::new(5, 5), RangePolicy::Strict));
    assert!(!range_ok(Family::Con1, FamilyParams::new(5, 4), RangePolicy::Strict));
    assert!(!range_ok(Family::Con2, FamilyParams::new(5, 1), RangePolicy::Strict));
    assert!(!range_ok(Family::Con1E, FamilyParams::new(5, 5), RangePolicy::Strict));
    let strict = enumerate_params(Family::Con1E, 7, RangePolicy::Strict).len();
    let extended = enumerate_params(Family::Con1E, 7, RangePolicy::Extended).len();
    assert!(extended > strict);
    assert_eq!("con3e".parse::<Family>().unwrap(), Family::Con3E);
}

#[test]
fn wrong_field_is_rejected() {
    let f = Field::quadratic(5).unwrap();
    assert!(construct_family(&f, Family::Con2, FamilyParams::new(7, 3), RangePolicy::Strict).is_err());
}
