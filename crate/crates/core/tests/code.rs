//! Linear codes: canonical form, duals, hulls and minimum distance.

use std::sync::Arc;

use hermhull::{Elem, Error, Field, LinearCode, Matrix, DEFAULT_BUDGET};

fn rows(f: &Arc<Field>, r: &[&[i64]]) -> Vec<Vec<Elem>> {
    r.iter().map(|row| row.iter().map(|&x| f.from_int(x)).collect()).collect()
}

/// The [7, 4, 3] binary Hamming code.
fn hamming(f: &Arc<Field>) -> LinearCode {
    let g = rows(f, &[&[1, 0, 0, 0, 1, 1, 0], &[0, 1, 0, 0, 1, 0, 1], &[0, 0, 1, 0, 0, 1, 1], &[0, 0, 0, 1, 1, 1, 1]]);
    LinearCode::from_rows(f, 7, &g).unwrap()
}

#[test]
fn hamming_parameters() {
    let f = Field::new(2, 1).unwrap();
    let c = hamming(&f);
    assert_eq!((c.n(), c.k()), (7, 4));
    assert_eq!(c.min_distance(DEFAULT_BUDGET).unwrap(), 3);
    let d = c.euclidean_dual();
    assert_eq!(d.k(), 3);
    // the [7, 3, 4] simplex code
    assert_eq!(d.min_distance(DEFAULT_BUDGET).unwrap(), 4);
    assert!(d.is_subcode_of(&c));
}

#[test]
fn rref_is_canonical() {
    let f = Field::new(2, 1).unwrap();
    let c = hamming(&f);
    let mut g = c.generator().row_vecs();
    g.reverse();
    let extra: Vec<Elem> = g[0].iter().zip(&g[1]).map(|(&a, &b)| f.add(a, b)).collect();
    g.push(extra);
    assert_eq!(LinearCode::from_rows(&f, 7, &g).unwrap(), c);
}

#[test]
fn hexacode_is_hermitian_self_dual() {
    // generator (1 0 0 1 w w), (0 1 0 w 1 w), (0 0 1 w w 1) over GF(4)
    let f = Field::quadratic(2).unwrap();
    let w = f.alpha();
    let (o, z) = (Elem::ONE, Elem::ZERO);
    let g = vec![vec![o, z, z, o, w, w], vec![z, o, z, w, o, w], vec![z, z, o, w, w, o]];
    let c = LinearCode::from_rows(&f, 6, &g).unwrap();
    assert_eq!(c.min_distance(DEFAULT_BUDGET).unwrap(), 4);
    assert_eq!(c.hermitian_dual().unwrap(), c);
    assert_eq!(c.hull_dim_via_gram().unwrap(), 3);
    assert_eq!(c.hermitian_hull().unwrap(), c);
}

#[test]
fn double_dual_and_rank_nullity() {
    let f = Field::quadratic(3).unwrap();
    let g: Vec<Vec<Elem>> =
        (0..3).map(|i| (0..7).map(|j| f.alpha_pow((i * j + i + j) as i64 % 8)).collect()).collect();
    let c = LinearCode::from_rows(&f, 7, &g).unwrap();
    let dh = c.hermitian_dual().unwrap();
    assert_eq!(c.k() + dh.k(), 7);
    assert_eq!(dh.hermitian_dual().unwrap(), c);
    assert_eq!(c.euclidean_dual().euclidean_dual(), c);
    assert_eq!(c.hermitian_hull().unwrap().k(), c.hull_dim_via_gram().unwrap());
}

#[test]
fn puncture_extend_and_scale() {
    let f = Field::new(2, 1).unwrap();
    let c = hamming(&f);
    let ext = c.extend_sum_zero();
    assert_eq!((ext.n(), ext.k()), (8, 4));
    // extended Hamming code: [8, 4, 4]
    assert_eq!(ext.min_distance(DEFAULT_BUDGET).unwrap(), 4);
    let p = ext.puncture(&[7]).unwrap();
    assert_eq!(p, c);
    assert!(matches!(c.puncture(&[9]), Err(Error::IndexOutOfRange { .. })));
    assert_eq!(c.monomial_scale(&[Elem::ONE; 7]).unwrap(), c);
    assert_eq!(c.monomial_scale(&[Elem::ZERO; 7]).unwrap_err(), Error::ZeroElement);
}

#[test]
fn budget_is_enforced() {
    let f = Field::quadratic(5).unwrap();
    let c = LinearCode::full(&f, 8);
    assert!(matches!(c.min_distance(1000), Err(Error::BudgetExceeded { .. })));
    assert_eq!(LinearCode::zero(&f, 4).k(), 0);
}

#[test]
fn matrix_rank_and_kernel() {
    let f = Field::new(3, 1).unwrap();
    let m = Matrix::from_rows(&f, 3, &rows(&f, &[&[1, 2, 0], &[2, 1, 0], &[0, 0, 1]])).unwrap();
    assert_eq!(m.rank(), 2);
    let k = m.kernel();
    assert_eq!(k.rows(), 1);
    assert!(m.mul(&k.transpose()).unwrap().is_zero());
}

#[test]
fn mismatched_fields_are_rejected() {
    let a = LinearCode::full(&Field::quadratic(2).unwrap(), 3);
    let b = LinearCode::full(&Field::quadratic(3).unwrap(), 3);
    assert_eq!(a.intersection(&b).unwrap_err(), Error::FieldMismatch);
}
