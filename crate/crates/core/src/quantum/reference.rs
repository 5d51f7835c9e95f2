//! Previously published MDS entanglement-assisted codes over GF(7) with
//! minimum distance above 7, used only for dominance comparison.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReferenceRow {
    pub n: usize,
    pub kappa: usize,
    pub delta: usize,
    pub c: usize,
    pub source: &'static str,
}

const fn r(n: usize, kappa: usize, delta: usize, c: usize, source: &'static str) -> ReferenceRow {
    ReferenceRow { n, kappa, delta, c, source }
}

const REFERENCE: &[ReferenceRow] = &[
    r(50, 36, 8, 0, "Guardia2011"),
    r(50, 42, 9, 8, "Sari2021"),
    r(50, 41, 10, 9, "Sari2021"),
    r(50, 40, 11, 10, "Sari2021"),
    r(50, 39, 12, 11, "Sari2021"),
    r(50, 38, 13, 12, "Sari2021"),
    r(50, 37, 14, 13, "Sari2021"),
    r(50, 36, 15, 14, "Sari2021"),
    r(50, 35, 16, 15, "Sari2021"),
    r(50, 34, 17, 16, "Sari2021"),
    r(50, 33, 18, 17, "Sari2021"),
    r(50, 32, 19, 18, "Sari2021"),
    r(50, 31, 20, 19, "Sari2021"),
    r(50, 30, 21, 20, "Sari2021"),
    r(50, 29, 22, 21, "Sari2021"),
    r(50, 28, 23, 22, "Sari2021"),
    r(50, 27, 24, 23, "Sari2021"),
    r(50, 26, 25, 24, "Sari2021"),
    r(49, 36, 8, 1, "Fan2016"),
    r(49, 34, 9, 1, "Fan2016"),
    r(49, 32, 10, 1, "Fan2016"),
    r(49, 30, 11, 1, "Fan2016"),
    r(49, 28, 12, 1, "Fan2016"),
    r(49, 26, 13, 1, "Fan2016"),
    r(25, 18, 8, 7, "Fan2016"),
    r(25, 17, 9, 8, "Fan2016"),
    r(25, 16, 10, 9, "Fan2016"),
    r(25, 15, 11, 10, "Fan2016"),
    r(25, 14, 12, 11, "Fan2016"),
    r(25, 13, 13, 12, "Fan2016"),
    r(25, 13, 9, 4, "Wang2020"),
    r(25, 9, 11, 4, "Wang2020"),
    r(25, 5, 13, 4, "Wang2020"),
    r(24, 12, 8, 2, "Fan2016"),
    r(24, 10, 9, 2, "Fan2016"),
    r(24, 8, 10, 2, "Fan2016"),
    r(24, 6, 12, 4, "Chen2017"),
    r(24, 4, 13, 4, "Chen2017"),
];

/// The q = 7 entries marked as new in the published comparison table,
/// as (n, kappa, delta, c).
pub const TABLE3_NEW: &[(usize, usize, usize, usize)] = &[
    (49, 25, 15, 4),
    (49, 23, 16, 4),
    (49, 21, 17, 4),
    (49, 19, 18, 4),
    (49, 16, 22, 9),
    (49, 14, 23, 9),
    (49, 12, 24, 9),
    (41, 29, 8, 2),
    (41, 27, 9, 2),
    (41, 25, 10, 2),
    (41, 23, 11, 2),
    (41, 19, 15, 6),
    (41, 17, 16, 6),
    (41, 15, 17, 6),
    (33, 21, 8, 2),
    (33, 19, 9, 2),
    (33, 17, 10, 2),
    (33, 10, 16, 8),
    (25, 13, 8, 2),
    (25, 11, 9, 2),
];

/// Prior-work rows for the given q (only q = 7 is tabulated).
pub fn reference_rows(q: u32) -> &'static [ReferenceRow] {
    if q == 7 {
        REFERENCE
    } else {
        &[]
    }
}
