//! The 20-point two-point code over GF(25) with G = 3O + P, as printed:
//! points, residues of dx/h and a 5 x 20 generator matrix.
//!
//! Entries are written `tE` for theta^E and as plain integers for prime
//! field elements.

use std::sync::Arc;

use serde::Serialize;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linalg::Matrix;

pub const Q: u32 = 5;
pub const K: usize = 3;

pub const POINTS: [&str; 20] = [
    "0", "t1", "t2", "t3", "t4", "t5", "2", "t7", "t8", "t9", "t11", "t13", "t14", "t15", "t16", "3", "t19", "t22",
    "t23", "1",
];

pub const EXTRA_POINT: &str = "t10";

pub const RESIDUES: [&str; 20] = [
    "t22", "t22", "t21", "t21", "1", "1", "t22", "t23", "1", "t23", "t22", "1", "1", "t21", "t23", "t21", "t22", "t23",
    "t23", "t21",
];

pub const GENERATOR: [[&str; 20]; 5] = [
    [
        "t22", "t22", "t21", "t21", "1", "1", "t22", "t23", "1", "t23", "t22", "1", "1", "t21", "t23", "t21", "t22",
        "t23", "t23", "t21",
    ],
    [
        "0", "t11", "t11", "4", "t16", "3", "t17", "t21", "t23", "t23", "t23", "t2", "t3", "t1", "t4", "t3", "t5", "t7",
        "t8", "t8",
    ],
    [
        "0", "1", "t1", "t3", "t8", "4", "4", "t19", "t22", "t23", "1", "t4", "2", "t5", "t9", "t9", "4", "t15", "t17",
        "t19",
    ],
    [
        "0", "t13", "t15", "3", "1", "2", "t7", "t17", "t21", "t23", "t1", "2", "t9", "t9", "t14", "t15", "t19", "t23",
        "t2", "2",
    ],
    [
        "1", "t22", "t3", "t22", "t14", "t7", "t17", "t19", "t4", "t8", "t14", "t3", "4", "t5", "t17", "t19", "t13", "4",
        "t9", "3",
    ],
];

/// Parses `0`..`p-1` or `tE` into a field element.
pub fn parse_entry(field: &Field, s: &str) -> Result<Elem> {
    if let Some(e) = s.strip_prefix('t') {
        let e: i64 = e.parse().map_err(|_| Error::Parameter(format!("bad exponent in {s}")))?;
        return Ok(field.alpha_pow(e));
    }
    let v: i64 = s.parse().map_err(|_| Error::Parameter(format!("bad entry {s}")))?;
    if v < 0 || v >= field.characteristic() as i64 {
        return Err(Error::Parameter(format!("{s} is not a prime-field element")));
    }
    Ok(field.from_int(v))
}

pub fn parse_all(field: &Field, xs: &[&str]) -> Result<Vec<Elem>> {
    xs.iter().map(|s| parse_entry(field, s)).collect()
}

pub fn points(field: &Field) -> Result<Vec<Elem>> {
    parse_all(field, &POINTS)
}

pub fn extra_point(field: &Field) -> Result<Elem> {
    parse_entry(field, EXTRA_POINT)
}

pub fn printed_residues(field: &Field) -> Result<Vec<Elem>> {
    parse_all(field, &RESIDUES)
}

pub fn printed_generator(field: &Arc<Field>) -> Result<Matrix> {
    let rows = GENERATOR.iter().map(|r| parse_all(field, r)).collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, 20, &rows)
}

/// Comparison of the printed data with the construction over the Conway field.
#[derive(Clone, Debug, Serialize)]
pub struct ExampleAnalysis {
    /// Residues of dx/h on the listed points, as log exponents.
    pub computed_residues: Vec<i64>,
    pub printed_residues: Vec<i64>,
    pub residues_match: bool,
    /// Evaluation point of each printed column, read off as row 2 / row 1.
    pub column_points: Vec<i64>,
    pub same_point_set: bool,
    /// c with printed_i^(q+1) = c Res(column point i) for every column, if constant.
    pub printed_norm_ratio: Option<i64>,
    /// The printed matrix equals s * C_L(D, 3O + P) as a row space, with s
    /// its first row and the columns at the points above.
    pub printed_is_construction: bool,
    pub printed_hull_dim: usize,
    pub printed_hull_distance: Option<usize>,
    pub printed_distance: Option<usize>,
    pub constructed_hull_dim: usize,
    pub constructed_hull_distance: Option<usize>,
    pub constructed_distance: Option<usize>,
}

pub fn analyze(budget: u64) -> Result<ExampleAnalysis> {
    let field = Field::quadratic(Q)?;
    let f = &field;
    let pts = points(f)?;
    let p = extra_point(f)?;
    let printed_res = printed_residues(f)?;
    let data = super::residues(f, &pts)?;
    let g = printed_generator(&field)?;
    let cols: Vec<Elem> = (0..g.cols())
        .map(|j| if g.get(0, j).is_zero() { Elem::ZERO } else { f.div(g.get(1, j), g.get(0, j)) })
        .collect();
    let mut sorted_cols = cols.clone();
    sorted_cols.sort();
    let mut sorted_pts = pts.clone();
    sorted_pts.sort();
    let same_point_set = sorted_cols == sorted_pts;
    let col_data = super::residues(f, &cols).ok();
    let printed_norm_ratio = col_data.as_ref().and_then(|d| {
        let ratios: Vec<Elem> =
            g.row(0).iter().zip(&d.residues).map(|(&s, &r)| f.div(f.pow(s, (Q + 1) as i64), r)).collect();
        ratios.iter().all(|&c| c == ratios[0]).then(|| f.to_log_form(ratios[0]))
    });
    let printed_code = LinearCode::from_generator(&g);
    let printed_is_construction = same_point_set && !cols.contains(&p) && {
        let div = super::Divisor::infinity(K as i64) + super::Divisor::point(super::Place::Finite(p), 1);
        super::evaluation_code(&field, &cols, &div, g.row(0)).is_ok_and(|c| c == printed_code)
    };
    let hull_stats = |c: &LinearCode| -> Result<(usize, Option<usize>, Option<usize>)> {
        let h = c.hermitian_hull()?;
        let hd = if h.k() > 0 && h.enumeration_size() <= budget as u128 { Some(h.min_distance(budget)?) } else { None };
        let d = if c.enumeration_size() <= budget as u128 { Some(c.min_distance(budget)?) } else { None };
        Ok((h.k(), hd, d))
    };
    let (printed_hull_dim, printed_hull_distance, printed_distance) = hull_stats(&printed_code)?;
    let tp = super::two_point_code(&field, &pts, K, Some(p))?;
    let (constructed_hull_dim, constructed_hull_distance, constructed_distance) = hull_stats(&tp.code)?;
    Ok(ExampleAnalysis {
        computed_residues: crate::report::log_vector(f, &data.residues),
        printed_residues: crate::report::log_vector(f, &printed_res),
        residues_match: data.residues == printed_res,
        column_points: crate::report::log_vector(f, &cols),
        same_point_set,
        printed_norm_ratio,
        printed_is_construction,
        printed_hull_dim,
        printed_hull_distance,
        printed_distance,
        constructed_hull_dim,
        constructed_hull_distance,
        constructed_distance,
    })
}
