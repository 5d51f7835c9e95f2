//! Polynomials over a [`Field`], coefficients low to high, no trailing zeros.

use crate::gf::{Elem, Field};

pub type Poly = Vec<Elem>;

pub fn trim(mut f: Poly) -> Poly {
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
    f
}

/// Degree, with `None` for the zero polynomial.
pub fn degree(f: &[Elem]) -> Option<usize> {
    f.iter().rposition(|c| !c.is_zero())
}

pub fn eval(field: &Field, f: &[Elem], x: Elem) -> Elem {
    f.iter().rev().fold(Elem::ZERO, |acc, &c| field.add(field.mul(acc, x), c))
}

pub fn mul(field: &Field, f: &[Elem], g: &[Elem]) -> Poly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Elem::ZERO; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = field.add(out[i + j], field.mul(a, b));
        }
    }
    trim(out)
}

/// Product of (x - r) over the given roots.
pub fn from_roots(field: &Field, roots: &[Elem]) -> Poly {
    let mut f = vec![Elem::ONE];
    for &r in roots {
        f = mul(field, &f, &[field.neg(r), Elem::ONE]);
    }
    f
}

/// Formal derivative.
pub fn derivative(field: &Field, f: &[Elem]) -> Poly {
    let out = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| field.mul(field.from_int(i as i64), c))
        .collect();
    trim(out)
}

/// Quotient and remainder of `f` by a nonzero `g`.
pub fn divmod(field: &Field, f: &[Elem], g: &[Elem]) -> (Poly, Poly) {
    let g = trim(g.to_vec());
    let dg = g.len() - 1;
    let lead_inv = field.inv(g[dg]);
    let mut r = trim(f.to_vec());
    if r.len() <= dg {
        return (Vec::new(), r);
    }
    let mut quo = vec![Elem::ZERO; r.len() - dg];
    while r.len() > dg {
        let shift = r.len() - 1 - dg;
        let c = field.mul(*r.last().unwrap(), lead_inv);
        quo[shift] = c;
        for (i, &b) in g.iter().enumerate() {
            r[shift + i] = field.sub(r[shift + i], field.mul(c, b));
        }
        r = trim(r);
    }
    (trim(quo), r)
}

pub fn gcd(field: &Field, f: &[Elem], g: &[Elem]) -> Poly {
    let (mut a, mut b) = (trim(f.to_vec()), trim(g.to_vec()));
    while !b.is_empty() {
        let (_, r) = divmod(field, &a, &b);
        a = b;
        b = r;
    }
    monic(field, a)
}

pub fn monic(field: &Field, f: Poly) -> Poly {
    match f.last() {
        None => f,
        Some(&lead) => {
            let li = field.inv(lead);
            f.into_iter().map(|c| field.mul(c, li)).collect()
        }
    }
}

/// Multiplicity of `r` as a root of a nonzero `f`.
pub fn root_multiplicity(field: &Field, f: &[Elem], r: Elem) -> usize {
    let lin = [field.neg(r), Elem::ONE];
    let mut g = trim(f.to_vec());
    let mut k = 0;
    loop {
        let (quo, rem) = divmod(field, &g, &lin);
        if !rem.is_empty() || g.is_empty() {
            return k;
        }
        g = quo;
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_derivative_and_division() {
        let f = Field::quadratic(3).unwrap();
        let roots: Vec<Elem> = (0..4).map(|i| f.alpha_pow(i)).collect();
        let h = from_roots(&f, &roots);
        assert_eq!(degree(&h), Some(4));
        for &r in &roots {
            assert!(eval(&f, &h, r).is_zero());
            assert_eq!(root_multiplicity(&f, &h, r), 1);
        }
        let dh = derivative(&f, &h);
        let (quo, rem) = divmod(&f, &h, &from_roots(&f, &roots[..2]));
        assert!(rem.is_empty());
        assert_eq!(mul(&f, &quo, &from_roots(&f, &roots[..2])), h);
        assert_eq!(degree(&dh), Some(3));
        assert_eq!(gcd(&f, &h, &from_roots(&f, &roots[1..3])), from_roots(&f, &roots[1..3]));
    }
}
