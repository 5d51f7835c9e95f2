//! Cyclotomic cosets, the defining sets D_{k,l}, the Hartmann-Tzeng bound
//! and Rains' code of a pair of full-length GRS codes.

use hermhull::cyclic::*;
use hermhull::grs::GrsSpec;
use hermhull::{Elem, Error, Field, LinearCode, DEFAULT_BUDGET};

fn full_grs(f: &std::sync::Arc<Field>, k: usize) -> LinearCode {
    let n = f.order() as usize;
    if k == 0 {
        return LinearCode::zero(f, n);
    }
    let mut b: Vec<Elem> = (0..n as i64 - 1).map(|i| f.alpha_pow(i)).collect();
    b.push(Elem::ZERO);
    GrsSpec::new(f, b, vec![Elem::ONE; n], k).unwrap().code()
}

#[test]
fn cosets_partition() {
    for (n, q) in [(8usize, 3usize), (24, 5), (15, 4), (48, 7)] {
        let cs = cyclotomic_cosets(n, q).unwrap();
        let mut all: Vec<usize> = cs.concat();
        all.sort();
        assert_eq!(all, (0..n).collect::<Vec<_>>());
    }
    assert_eq!(cyclotomic_coset(15, 2, 1).unwrap(), vec![1, 2, 4, 8]);
}

#[test]
fn rains_code_is_extended_cyclic_code() {
    for q in [3usize, 4] {
        let f = Field::quadratic(q as u32).unwrap();
        for k in 1..=q.min(3) {
            for l in 1..=k {
                let d = defining_set_dkl(q, k, l).unwrap();
                let ext = CyclicCode::with_field(&f, q * q - 1, &d).unwrap().extended();
                let p = rains_p_pair(&full_grs(&f, l), &full_grs(&f, k), DEFAULT_BUDGET).unwrap();
                assert_eq!(p, ext, "q={q} k={k} l={l}");
                assert_eq!(p.k(), q * q + l * l - 2 * l * k);
            }
        }
    }
}

#[test]
fn l_zero_gives_the_full_space() {
    // GRS_0 is the zero code, so P(GRS_{k,0}) has no constraints at all,
    // while the sum-zero extension of the full cyclic code has codimension 1.
    let f = Field::quadratic(3).unwrap();
    let p = rains_p_pair(&full_grs(&f, 0), &full_grs(&f, 2), DEFAULT_BUDGET).unwrap();
    assert_eq!(p.k(), 9);
    let ext = CyclicCode::with_field(&f, 8, &defining_set_dkl(3, 2, 0).unwrap()).unwrap().extended();
    assert_eq!(ext.k(), 8);
}

#[test]
fn ht_bound_matches_bch_on_consecutive_sets() {
    // consecutive run {1, ..., 4} gives the BCH bound 5
    let d: Vec<usize> = cyclotomic_cosets(15, 2).unwrap().into_iter().filter(|c| c.contains(&1) || c.contains(&3)).flatten().collect();
    assert!(ht_bound(15, &d) >= 5);
    assert_eq!(ht_bound(8, &[]), 1);
}

#[test]
fn extended_dkl_distance_bound() {
    // E(D_{k,l}) has d >= k + l - 1
    let q = 3;
    let f = Field::quadratic(q as u32).unwrap();
    for (k, l) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
        let d = defining_set_dkl(q, k, l).unwrap();
        let c = CyclicCode::with_field(&f, q * q - 1, &d).unwrap();
        assert!(ht_bound(q * q - 1, &d) >= k + l - 1);
        let ext = c.extended();
        if ext.k() > 0 {
            assert!(ext.min_distance(DEFAULT_BUDGET).unwrap() >= k + l - 1);
        }
    }
}

#[test]
fn generator_polynomial_roots() {
    let q = 5;
    let c = CyclicCode::new(q, 24, &[1, 5]).unwrap();
    assert_eq!(c.dim(), 22);
    assert_eq!(c.generator_poly().len(), 3);
    let ext = c.extension();
    let g: Vec<Vec<Elem>> = c.code().generator().row_vecs().into_iter().map(|r| r.into_iter().map(|x| ext.embed(x)).collect()).collect();
    let g = hermhull::Matrix::from_rows(ext, 24, &g).unwrap();
    assert!(g.mul(&c.parity_matrix().transpose()).unwrap().is_zero());
}

#[test]
fn rejects_invalid_sets() {
    assert_eq!(CyclicCode::new(3, 8, &[1]).unwrap_err(), Error::NotCosetClosed);
    assert!(CyclicCode::new(3, 9, &[]).is_err());
    assert!(defining_set_dkl(3, 4, 1).is_err());
}

#[test]
fn trace_representation_spans_the_code() {
    let c = CyclicCode::new(3, 8, &[1, 3]).unwrap();
    assert_eq!(c.trace_representation().unwrap(), *c.code());
}
