//! Dense matrices over a finite field: reduced row echelon form, rank,
//! kernels and the Hermitian Gram matrix.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

#[derive(Clone, Debug)]
pub struct Matrix {
    field: Arc<Field>,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.field.same_as(&other.field)
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}

impl Eq for Matrix {}

impl Matrix {
    pub fn zeros(field: &Arc<Field>, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn identity(field: &Arc<Field>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    /// Builds a matrix from rows of equal length `cols`.
    pub fn from_rows(field: &Arc<Field>, cols: usize, rows: &[Vec<Elem>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Dimension(format!("row of length {} in a {}-column matrix", r.len(), cols)));
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { field: field.clone(), rows: rows.len(), cols, data })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field.same_as(&other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Entrywise q-th power. Requires a quadratic extension.
    pub fn conjugate(&self) -> Result<Matrix> {
        self.field.require_q()?;
        let f = &self.field;
        Ok(Matrix { data: self.data.iter().map(|&x| f.conj(x)).collect(), ..self.clone() })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(l, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// The Hermitian Gram matrix M M^dagger with entries sum_l m_il m_jl^q.
    pub fn hermitian_gram(&self) -> Result<Matrix> {
        self.field.require_q()?;
        let f = &self.field;
        let mut g = Matrix::zeros(f, self.rows, self.rows);
        for i in 0..self.rows {
            for j in 0..self.rows {
                g.set(i, j, f.herm_dot(self.row(i), self.row(j)));
            }
        }
        Ok(g)
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(Error::Dimension(format!("stacking {} and {} columns", self.cols, other.cols)));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Matrix { field: self.field.clone(), rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.rows, idx.len());
        for i in 0..self.rows {
            for (c, &j) in idx.iter().enumerate() {
                out.set(i, c, self.get(i, j));
            }
        }
        out
    }

    /// Multiplies column j by `scale[j]`.
    pub fn scale_columns(&self, scale: &[Elem]) -> Result<Matrix> {
        if scale.len() != self.cols {
            return Err(Error::Dimension(format!("{} scalars for {} columns", scale.len(), self.cols)));
        }
        let f = &self.field;
        let mut out = self.clone();
        for i in 0..self.rows {
            for (j, &s) in scale.iter().enumerate() {
                out.set(i, j, f.mul(self.get(i, j), s));
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form with leftmost pivots; zero rows are dropped.
    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c));
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            let pivot_row: Vec<Elem> = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for (j, &pj) in pivot_row.iter().enumerate().skip(c) {
                    let v = f.sub(m.get(i, j), f.mul(factor, pj));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.data.truncate(r * m.cols);
        m.rows = r;
        Rref { matrix: m, rank: r, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// A basis (as rows) of the right kernel {x : M x^T = 0}, in RREF.
    pub fn kernel(&self) -> Matrix {
        let Rref { matrix: r, rank, pivots } = self.rref();
        let f = &self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(f, free.len(), self.cols);
        for (b, &fc) in free.iter().enumerate() {
            basis.set(b, fc, Elem::ONE);
            for (i, &pc) in pivots.iter().enumerate().take(rank) {
                basis.set(b, pc, f.neg(r.get(i, fc)));
            }
        }
        basis.rref().matrix
    }

    /// Solves for coefficients c with c * M = v, when v is in the row space.
    pub fn row_combination(&self, v: &[Elem]) -> Option<Vec<Elem>> {
        // kernel of [M ; v]^T with last coordinate normalized to -1
        let mut aug = self.transpose();
        aug.cols += 1;
        let mut data = Vec::with_capacity(aug.rows * aug.cols);
        for (j, &vj) in v.iter().enumerate().take(self.cols) {
            for i in 0..self.rows {
                data.push(self.get(i, j));
            }
            data.push(vj);
        }
        aug.data = data;
        let ker = aug.kernel();
        let f = &self.field;
        (0..ker.rows).find_map(|i| {
            let last = ker.get(i, self.rows);
            (!last.is_zero()).then(|| {
                let s = f.neg(f.inv(last));
                ker.row(i)[..self.rows].iter().map(|&x| f.mul(x, s)).collect()
            })
        })
    }
}

/// Solutions over GF(q) of a linear system with coefficients in GF(q^2).
/// Each equation sum h_i x_i = 0 with x_i in GF(q) splits into
/// Tr(h) . x = 0 and Tr(alpha h) . x = 0, which together force the
/// original equation since {1, alpha} spans GF(q^2) over GF(q).
pub fn subfield_kernel(m: &Matrix) -> Result<Matrix> {
    let f = m.field();
    f.require_q()?;
    let base = f.subfield().expect("quadratic field has a subfield");
    let a = f.alpha();
    let mut rows = Vec::with_capacity(2 * m.rows());
    for i in 0..m.rows() {
        for scale in [Elem::ONE, a] {
            let r: Result<Vec<Elem>> =
                m.row(i).iter().map(|&h| f.restrict(f.trace(f.mul(scale, h)))).collect();
            rows.push(r?);
        }
    }
    Ok(Matrix::from_rows(base, m.cols(), &rows)?.kernel())
}
