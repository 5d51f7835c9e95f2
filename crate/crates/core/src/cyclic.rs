//! Cyclic codes over GF(q) whose length divides q^2 - 1, so that every
//! root of x^n - 1 lives in GF(q^2) and beta = alpha^((q^2-1)/n).

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::arith::gcd;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linalg::{subfield_kernel, Matrix};
use crate::poly;

/// {i q^t mod n : t >= 0}, sorted.
pub fn cyclotomic_coset(n: usize, q: usize, i: usize) -> Result<Vec<usize>> {
    if gcd(n, q) != 1 {
        return Err(Error::NotCoprime);
    }
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, len: n });
    }
    let mut set = BTreeSet::new();
    let mut x = i;
    while set.insert(x) {
        x = x * q % n;
    }
    Ok(set.into_iter().collect())
}

/// All q-cyclotomic cosets modulo n, each sorted, ordered by least element.
pub fn cyclotomic_cosets(n: usize, q: usize) -> Result<Vec<Vec<usize>>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for i in 0..n {
        if !seen[i] {
            let c = cyclotomic_coset(n, q, i)?;
            for &x in &c {
                seen[x] = true;
            }
            out.push(c);
        }
    }
    Ok(out)
}

pub fn is_coset_closed(n: usize, q: usize, d: &[usize]) -> bool {
    let set: BTreeSet<usize> = d.iter().copied().collect();
    set.iter().all(|&x| x < n && set.contains(&(x * q % n)))
}

/// The defining set D_{k,l} modulo q^2 - 1:
/// {i+qj : i<l<=j<k} u {i+qj : j<l<=i<k} u ({i+qj : i,j<l} \ {0}).
pub fn defining_set_dkl(q: usize, k: usize, l: usize) -> Result<Vec<usize>> {
    if l > k || k > q {
        return Err(Error::Parameter(format!("need l <= k <= q, got q={q} k={k} l={l}")));
    }
    let n = q * q - 1;
    let mut d = BTreeSet::new();
    for i in 0..k {
        for j in 0..k {
            if (i < l || j < l) && (i, j) != (0, 0) {
                d.insert((i + q * j) % n);
            }
        }
    }
    Ok(d.into_iter().collect())
}

/// A cyclic code with its defining set, generator polynomial and
/// generator matrix of cyclic shifts.
#[derive(Clone, Debug)]
pub struct CyclicCode {
    q: usize,
    n: usize,
    ext: Arc<Field>,
    beta: Elem,
    defining_set: Vec<usize>,
    generator_poly: Vec<Elem>,
    code: LinearCode,
}

impl CyclicCode {
    /// Builds the cyclic code of length `n` over GF(q) with defining set `d`
    /// relative to beta = alpha^((q^2-1)/n) in GF(q^2).
    pub fn new(q: usize, n: usize, d: &[usize]) -> Result<Self> {
        let ext = Field::quadratic(q as u32)?;
        Self::with_field(&ext, n, d)
    }

    pub fn with_field(ext: &Arc<Field>, n: usize, d: &[usize]) -> Result<Self> {
        let q = ext.require_q()? as usize;
        if gcd(n, q) != 1 {
            return Err(Error::NotCoprime);
        }
        if n == 0 || !(q * q - 1).is_multiple_of(n) {
            return Err(Error::Parameter(format!("length {n} must divide q^2 - 1 = {}", q * q - 1)));
        }
        let defining_set: Vec<usize> = d.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        if !is_coset_closed(n, q, &defining_set) {
            return Err(Error::NotCosetClosed);
        }
        let beta = ext.alpha_pow(((q * q - 1) / n) as i64);
        let roots: Vec<Elem> = defining_set.iter().map(|&i| ext.pow(beta, i as i64)).collect();
        let g_ext = poly::from_roots(ext, &roots);
        let generator_poly = g_ext.iter().map(|&c| ext.restrict(c)).collect::<Result<Vec<_>>>()?;
        let base = ext.subfield().expect("quadratic field");
        let dim = n - defining_set.len();
        let rows: Vec<Vec<Elem>> = (0..dim)
            .map(|s| {
                let mut r = vec![Elem::ZERO; n];
                r[s..s + generator_poly.len()].copy_from_slice(&generator_poly);
                r
            })
            .collect();
        let code = LinearCode::from_rows(base, n, &rows)?;
        Ok(CyclicCode { q, n, ext: ext.clone(), beta, defining_set, generator_poly, code })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.code.k()
    }

    pub fn defining_set(&self) -> &[usize] {
        &self.defining_set
    }

    /// Coefficients over GF(q), low to high.
    pub fn generator_poly(&self) -> &[Elem] {
        &self.generator_poly
    }

    pub fn beta(&self) -> Elem {
        self.beta
    }

    /// GF(q^2), where the roots live.
    pub fn extension(&self) -> &Arc<Field> {
        &self.ext
    }

    /// The code as a linear code over GF(q).
    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    fn coset_leaders(&self) -> Vec<usize> {
        let mut leaders = Vec::new();
        let mut covered = BTreeSet::new();
        for &i in &self.defining_set {
            if covered.insert(i) {
                leaders.push(i);
                let mut x = i * self.q % self.n;
                while covered.insert(x) {
                    x = x * self.q % self.n;
                }
            }
        }
        leaders
    }

    /// Rows (1, beta^i, ..., beta^(i(n-1))) over GF(q^2), one per coset of D.
    pub fn parity_matrix(&self) -> Matrix {
        let rows: Vec<Vec<Elem>> = self
            .coset_leaders()
            .into_iter()
            .map(|i| (0..self.n).map(|u| self.ext.pow(self.beta, (i * u) as i64)).collect())
            .collect();
        Matrix::from_rows(&self.ext, self.n, &rows).expect("consistent row lengths")
    }

    /// Parity matrix of the extended code: each row of [`Self::parity_matrix`]
    /// gets a trailing 0, followed by the all-ones row.
    pub fn extended_parity_matrix(&self) -> Matrix {
        let h = self.parity_matrix();
        let mut rows: Vec<Vec<Elem>> = h
            .row_vecs()
            .into_iter()
            .map(|mut r| {
                r.push(Elem::ZERO);
                r
            })
            .collect();
        rows.push(vec![Elem::ONE; self.n + 1]);
        Matrix::from_rows(&self.ext, self.n + 1, &rows).expect("consistent row lengths")
    }

    /// The extended code E(C), whose codewords sum to zero.
    pub fn extended(&self) -> LinearCode {
        self.code.extend_sum_zero()
    }

    /// The code spanned by the trace family over the generating set.
    pub fn trace_representation(&self) -> Result<LinearCode> {
        let f = &self.ext;
        let d: BTreeSet<usize> = self.defining_set.iter().copied().collect();
        let mut rows = Vec::new();
        for coset in cyclotomic_cosets(self.n, self.q)? {
            if d.contains(&coset[0]) {
                continue;
            }
            let i = coset[0];
            let thetas: Vec<Elem> = if coset.len() == 1 { vec![Elem::ONE] } else { vec![Elem::ONE, f.alpha()] };
            for theta in thetas {
                let row = (0..self.n)
                    .map(|u| {
                        let x = f.mul(theta, f.pow(self.beta, -((u * i) as i64)));
                        f.restrict(if coset.len() == 1 { x } else { f.trace(x) })
                    })
                    .collect::<Result<Vec<_>>>()?;
                rows.push(row);
            }
        }
        LinearCode::from_rows(self.code.field(), self.n, &rows)
    }
}

/// Run length of a, a+b, a+2b, ... inside D (mod n), capped at n.
fn run_length(member: &[bool], n: usize, a: usize, b: usize) -> usize {
    let mut len = 0;
    let mut x = a;
    while len < n && member[x] {
        len += 1;
        x = (x + b) % n;
    }
    len
}

/// Best Hartmann-Tzeng bound x + y over all a and all b, c coprime to n
/// with {a + b i1 + c i2 : 0 <= i1 <= x-2, 0 <= i2 <= y} inside D.
pub fn ht_bound(n: usize, d: &[usize]) -> usize {
    let mut member = vec![false; n];
    for &x in d {
        member[x % n] = true;
    }
    if !member.iter().any(|&m| m) {
        return 1;
    }
    let units: Vec<usize> = (1..n.max(2)).filter(|&b| gcd(b, n) == 1).collect();
    let mut best = 1;
    for &b in &units {
        let runs: Vec<usize> = (0..n).map(|a| run_length(&member, n, a, b)).collect();
        for &c in &units {
            for a in 0..n {
                let mut shortest = usize::MAX;
                for i2 in 0..n {
                    shortest = shortest.min(runs[(a + c * i2) % n]);
                    if shortest == 0 {
                        break;
                    }
                    best = best.max(shortest + 1 + i2);
                }
            }
        }
    }
    best.min(n)
}

/// The coefficients of the trace-form codeword family in E(D_{k,k-1}).
#[derive(Clone, Debug)]
pub struct EqtrParams {
    k: usize,
    q: usize,
    diag: Vec<Elem>,
    off: BTreeMap<(usize, usize), Elem>,
}

impl EqtrParams {
    /// theta_{k-1,k-1} = 1 and every other coefficient zero.
    pub fn new(field: &Field, k: usize) -> Result<Self> {
        let q = field.require_q()? as usize;
        if !(1 < k && k < q) {
            return Err(Error::Parameter(format!("need 1 < k < q, got k={k}, q={q}")));
        }
        let mut diag = vec![Elem::ZERO; q - k + 1];
        diag[0] = Elem::ONE;
        let off = Self::index_set(q, k).into_iter().map(|ij| (ij, Elem::ZERO)).collect();
        Ok(EqtrParams { k, q, diag, off })
    }

    /// T = union over i in [k, q-1] of {(i, j) : j in [0, k-1] u [i+1, q-1]}.
    pub fn index_set(q: usize, k: usize) -> Vec<(usize, usize)> {
        (k..q)
            .flat_map(|i| (0..k).chain(i + 1..q).map(move |j| (i, j)))
            .collect()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Sets theta_{t,t} for t in [k-1, q-1]; the value must lie in GF(q).
    pub fn set_diag(&mut self, field: &Field, t: usize, v: Elem) -> Result<()> {
        if t + 1 < self.k || t >= self.q {
            return Err(Error::IndexOutOfRange { index: t, len: self.q });
        }
        if !field.in_subfield(v) {
            return Err(Error::NotInSubfield);
        }
        self.diag[t + 1 - self.k] = v;
        Ok(())
    }

    pub fn diag(&self, t: usize) -> Elem {
        self.diag[t + 1 - self.k]
    }

    pub fn set_off(&mut self, i: usize, j: usize, v: Elem) -> Result<()> {
        match self.off.get_mut(&(i, j)) {
            Some(slot) => {
                *slot = v;
                Ok(())
            }
            None => Err(Error::Parameter(format!("({i}, {j}) is not in the index set"))),
        }
    }
}

/// The length-q^2 codeword with
/// c_r = sum_t theta_tt alpha^(-r t (q+1)) + sum_T Tr(theta_ij alpha^(-r(i+qj)))
/// for r < q^2 - 1, completed by
/// the coordinate that makes the whole word sum to zero. Entries lie in
/// GF(q) and are returned in the encoding of `field` = GF(q^2).
pub fn eqtr_codeword(field: &Field, params: &EqtrParams) -> Result<Vec<Elem>> {
    let q = field.require_q()? as usize;
    if params.q != q {
        return Err(Error::FieldMismatch);
    }
    if params.diag(params.k - 1).is_zero() {
        return Err(Error::ZeroElement);
    }
    let n = q * q - 1;
    let mut c: Vec<Elem> = (0..n)
        .map(|r| {
            let r = r as i64;
            let diag = (params.k - 1..q).map(|t| {
                field.mul(params.diag(t), field.alpha_pow(-r * (t * (q + 1)) as i64))
            });
            let off = params.off.iter().map(|(&(i, j), &th)| {
                field.trace(field.mul(th, field.alpha_pow(-r * (i + q * j) as i64)))
            });
            field.sum(diag.chain(off))
        })
        .collect();
    let s = field.sum(c.iter().copied());
    c.push(field.neg(s));
    Ok(c)
}

/// Rains' code P(C) = {a in GF(q)^n : sum_i a_i u_i v_i^q = 0 for all u, v in C}.
/// By bilinearity it suffices to impose the constraint on pairs of basis
/// rows. `budget` caps the k^2 n constraint entries.
pub fn rains_p(c: &LinearCode, budget: u64) -> Result<LinearCode> {
    rains_p_pair(c, c, budget)
}

/// {a in GF(q)^n : sum_i a_i u_i v_i^q = 0 for all u in `u`, v in `v`}.
pub fn rains_p_pair(u: &LinearCode, v: &LinearCode, budget: u64) -> Result<LinearCode> {
    let f = u.field();
    if !f.same_as(v.field()) {
        return Err(Error::FieldMismatch);
    }
    if u.n() != v.n() {
        return Err(Error::Dimension(format!("lengths {} and {}", u.n(), v.n())));
    }
    let n = u.n();
    let needed = (u.k() * v.k() * n) as u128;
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget: budget as u128 });
    }
    let gu = u.generator();
    let gv = v.generator();
    let mut rows = Vec::with_capacity(u.k() * v.k());
    for i in 0..gu.rows() {
        for j in 0..gv.rows() {
            rows.push(gu.row(i).iter().zip(gv.row(j)).map(|(&x, &y)| f.mul(x, f.conj(y))).collect());
        }
    }
    let w = Matrix::from_rows(f, n, &rows)?;
    let base = f.subfield().ok_or(Error::NoQuadraticStructure)?;
    if rows.is_empty() {
        return Ok(LinearCode::full(base, n));
    }
    Ok(LinearCode::from_generator(&subfield_kernel(&w)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coset_examples() {
        assert_eq!(cyclotomic_coset(8, 3, 0).unwrap(), vec![0]);
        assert_eq!(cyclotomic_coset(8, 3, 1).unwrap(), vec![1, 3]);
        assert!(cyclotomic_coset(9, 3, 1).is_err());
    }

    #[test]
    fn dkl_sizes() {
        for q in [3usize, 4, 5] {
            for k in 0..=q {
                for l in 0..=k {
                    let d = defining_set_dkl(q, k, l).unwrap();
                    let expect = if l == 0 { 0 } else { 2 * l * k - l * l - 1 };
                    assert_eq!(d.len(), expect, "q={q} k={k} l={l}");
                    assert!(is_coset_closed(q * q - 1, q, &d));
                }
            }
        }
    }

    #[test]
    fn ht_examples() {
        assert_eq!(ht_bound(8, &[]), 1);
        assert_eq!(ht_bound(8, &[1, 2, 3]), 4);
        assert_eq!(ht_bound(8, &(1..8).collect::<Vec<_>>()), 8);
    }
}
