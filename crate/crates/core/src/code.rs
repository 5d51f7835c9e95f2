//! Linear codes with a canonical (RREF) generator: duals, Hermitian hulls,
//! puncturing, scaling, extension and exact minimum distance.

use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linalg::Matrix;
use crate::parallel;

/// Default cap on the number of codewords enumerated by [`LinearCode::min_distance`].
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// A linear [n, k] code stored by its reduced row echelon generator.
#[derive(Clone, Debug)]
pub struct LinearCode {
    n: usize,
    generator: Matrix,
    pivots: Vec<usize>,
    distance: OnceLock<usize>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.generator == other.generator
    }
}

impl Eq for LinearCode {}

impl LinearCode {
    /// The row space of `m`.
    pub fn from_generator(m: &Matrix) -> Self {
        let r = m.rref();
        LinearCode { n: m.cols(), generator: r.matrix, pivots: r.pivots, distance: OnceLock::new() }
    }

    pub fn from_rows(field: &Arc<Field>, n: usize, rows: &[Vec<Elem>]) -> Result<Self> {
        Ok(Self::from_generator(&Matrix::from_rows(field, n, rows)?))
    }

    pub fn zero(field: &Arc<Field>, n: usize) -> Self {
        Self::from_generator(&Matrix::zeros(field, 0, n))
    }

    pub fn full(field: &Arc<Field>, n: usize) -> Self {
        Self::from_generator(&Matrix::identity(field, n))
    }

    pub fn field(&self) -> &Arc<Field> {
        self.generator.field()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    /// Canonical generator in reduced row echelon form.
    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// A parity-check matrix: a basis of the Euclidean dual, as rows.
    pub fn parity_check(&self) -> Matrix {
        self.generator.kernel()
    }

    pub fn euclidean_dual(&self) -> LinearCode {
        Self::from_generator(&self.parity_check())
    }

    /// {y : sum_i g_i y_i^q = 0 for every codeword g}, the kernel of the
    /// entrywise-conjugated generator.
    pub fn hermitian_dual(&self) -> Result<LinearCode> {
        Ok(Self::from_generator(&self.generator.conjugate()?.kernel()))
    }

    /// C intersected with its Hermitian dual, solved as one stacked system.
    pub fn hermitian_hull(&self) -> Result<LinearCode> {
        let system = self.parity_check().vstack(&self.generator.conjugate()?)?;
        Ok(Self::from_generator(&system.kernel()))
    }

    /// Hermitian Gram matrix of the canonical generator.
    pub fn gram_matrix(&self) -> Result<Matrix> {
        self.generator.hermitian_gram()
    }

    /// k - rank(G G^dagger).
    pub fn hull_dim_via_gram(&self) -> Result<usize> {
        Ok(self.k() - self.gram_matrix()?.rank())
    }

    /// Whether `v` is a codeword.
    pub fn contains(&self, v: &[Elem]) -> bool {
        if v.len() != self.n {
            return false;
        }
        let f = self.field();
        let mut r = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = r[pc];
            if c.is_zero() {
                continue;
            }
            for (x, &g) in r.iter_mut().zip(self.generator.row(i)) {
                *x = f.sub(*x, f.mul(c, g));
            }
        }
        r.iter().all(|x| x.is_zero())
    }

    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.n == other.n && (0..self.k()).all(|i| other.contains(self.generator.row(i)))
    }

    pub fn intersection(&self, other: &LinearCode) -> Result<LinearCode> {
        let system = self.parity_check().vstack(&other.parity_check())?;
        Ok(Self::from_generator(&system.kernel()))
    }

    /// Deletes the coordinates in `s` (0-based).
    pub fn puncture(&self, s: &[usize]) -> Result<LinearCode> {
        if let Some(&bad) = s.iter().find(|&&i| i >= self.n) {
            return Err(Error::IndexOutOfRange { index: bad, len: self.n });
        }
        let keep: Vec<usize> = (0..self.n).filter(|i| !s.contains(i)).collect();
        Ok(Self::from_generator(&self.generator.select_columns(&keep)))
    }

    /// Coordinatewise scaling by nonzero scalars.
    pub fn monomial_scale(&self, a: &[Elem]) -> Result<LinearCode> {
        if a.iter().any(|x| x.is_zero()) {
            return Err(Error::ZeroElement);
        }
        Ok(Self::from_generator(&self.generator.scale_columns(a)?))
    }

    /// Appends a coordinate making every codeword sum to zero.
    pub fn extend_sum_zero(&self) -> LinearCode {
        let f = self.field();
        let rows: Vec<Vec<Elem>> = (0..self.k())
            .map(|i| {
                let mut r = self.generator.row(i).to_vec();
                let s = f.sum(r.iter().copied());
                r.push(f.neg(s));
                r
            })
            .collect();
        let m = Matrix::from_rows(f, self.n + 1, &rows).expect("rows have length n+1");
        Self::from_generator(&m)
    }

    /// The cached minimum distance, if already computed.
    pub fn cached_distance(&self) -> Option<usize> {
        self.distance.get().copied()
    }

    /// Number of codewords a full enumeration touches.
    pub fn enumeration_size(&self) -> u128 {
        crate::arith::checked_pow(self.field().order() as u128, self.k() as u32)
    }

    /// Exact minimum distance by enumerating one message per projective
    /// point, with incremental codeword updates. Fails when the message
    /// space exceeds `budget`.
    pub fn min_distance(&self, budget: u64) -> Result<usize> {
        if let Some(d) = self.cached_distance() {
            return Ok(d);
        }
        if self.k() == 0 {
            return Err(Error::Parameter("the zero code has no minimum distance".into()));
        }
        let needed = self.enumeration_size();
        if needed > budget as u128 {
            return Err(Error::BudgetExceeded { needed, budget: budget as u128 });
        }
        let d = parallel::install(|| scan_min_weight(self));
        let _ = self.distance.set(d);
        Ok(d)
    }

    pub fn is_mds(&self, budget: u64) -> Result<bool> {
        Ok(self.min_distance(budget)? + self.k() == self.n + 1)
    }
}

fn weight(v: &[Elem]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

fn scan_min_weight(code: &LinearCode) -> usize {
    let f = code.field();
    let (k, n, q) = (code.k(), code.n(), f.order() as usize);
    let g = code.generator();
    // multiples[j][c] = (element c) * row j
    let multiples: Vec<Vec<Vec<Elem>>> = (0..k)
        .map(|j| {
            (0..q)
                .map(|c| g.row(j).iter().map(|&x| f.mul(Elem(c as u16), x)).collect())
                .collect()
        })
        .collect();
    let mut tasks: Vec<(usize, Option<usize>)> = Vec::new();
    for lead in 0..k {
        if lead + 1 < k {
            tasks.extend((0..q).map(|c| (lead, Some(c))));
        } else {
            tasks.push((lead, None));
        }
    }
    tasks
        .par_iter()
        .map(|&(lead, split)| {
            let mut cur = g.row(lead).to_vec();
            let first_free = match split {
                Some(c) => {
                    add_into(f, &mut cur, &multiples[lead + 1][c]);
                    lead + 2
                }
                None => lead + 1,
            };
            let free: Vec<usize> = (first_free..k).collect();
            let mut digits = vec![0usize; free.len()];
            let mut best = weight(&cur);
            'outer: loop {
                if best == 1 {
                    break;
                }
                let mut pos = 0;
                loop {
                    if pos == free.len() {
                        break 'outer;
                    }
                    let old = digits[pos];
                    let new = (old + 1) % q;
                    digits[pos] = new;
                    let delta = f.sub(Elem(new as u16), Elem(old as u16));
                    add_into(f, &mut cur, &multiples[free[pos]][delta.0 as usize]);
                    if new != 0 {
                        break;
                    }
                    pos += 1;
                }
                best = best.min(weight(&cur));
            }
            best
        })
        .min()
        .unwrap_or(n + 1)
}

fn add_into(f: &Field, acc: &mut [Elem], v: &[Elem]) {
    for (a, &b) in acc.iter_mut().zip(v) {
        *a = f.add(*a, b);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn repetition_code_distance() {
        let f = Field::quadratic(2).unwrap();
        let c = LinearCode::from_rows(&f, 5, &[vec![Elem::ONE; 5]]).unwrap();
        assert_eq!(c.min_distance(DEFAULT_BUDGET).unwrap(), 5);
        assert_eq!(c.euclidean_dual().k(), 4);
    }

    #[test]
    fn full_and_zero_codes() {
        let f = Field::quadratic(3).unwrap();
        let full = LinearCode::full(&f, 4);
        assert_eq!(full.euclidean_dual(), LinearCode::zero(&f, 4));
        assert_eq!(LinearCode::zero(&f, 4).hermitian_dual().unwrap(), full);
        assert_eq!(full.min_distance(DEFAULT_BUDGET).unwrap(), 1);
    }

    #[test]
    fn budget_is_enforced() {
        let f = Field::quadratic(3).unwrap();
        let c = LinearCode::full(&f, 6);
        assert!(matches!(c.min_distance(1000), Err(Error::BudgetExceeded { .. })));
    }
}
