//! Finite fields GF(p^m) with log/antilog tables and, for even m, the
//! index-2 subfield GF(q) with q = p^(m/2).

mod prime_poly;

use std::fmt;
use std::sync::Arc;

use crate::arith::{is_prime, prime_power};
use crate::error::{Error, Result};

pub use prime_poly::conway;

/// A field element in integer encoding: the coefficient vector
/// (c_0, ..., c_{m-1}) over GF(p) is stored as sum c_i p^i.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// The index-2 subfield of a quadratic extension together with its embedding.
#[derive(Debug)]
pub struct Subfield {
    field: Arc<Field>,
    q: u32,
    embed: Vec<Elem>,
    restrict: Vec<Option<Elem>>,
}

/// A finite field GF(p^m). Immutable once built; share it through `Arc`.
#[derive(Debug)]
pub struct Field {
    p: u32,
    m: u32,
    order: u32,
    modulus: Vec<u32>,
    exp: Vec<Elem>,
    log: Vec<u32>,
    add_table: Option<Vec<Elem>>,
    neg: Vec<Elem>,
    conj: Option<Vec<Elem>>,
    sub: Option<Subfield>,
}

const MAX_ORDER: u64 = 1 << 16;
const ADD_TABLE_LIMIT: u32 = 256;

impl Field {
    /// GF(p^m) defined by the Conway polynomial C(p, m).
    pub fn new(p: u32, m: u32) -> Result<Arc<Field>> {
        Self::check_size(p, m)?;
        Self::with_modulus(p, m, &conway(p, m))
    }

    /// GF(p^m) defined by a user-supplied monic modulus (low to high).
    pub fn with_modulus(p: u32, m: u32, modulus: &[u32]) -> Result<Arc<Field>> {
        Self::check_size(p, m)?;
        if modulus.len() != m as usize + 1
            || modulus[m as usize] != 1
            || modulus.iter().any(|&c| c >= p)
        {
            return Err(Error::BadModulus { p, m });
        }
        if !prime_poly::is_irreducible(modulus, p) {
            return Err(Error::ReducibleModulus { p });
        }
        if !prime_poly::root_is_primitive(modulus, p) {
            return Err(Error::NonPrimitiveModulus);
        }
        Ok(Arc::new(Self::build(p, m, modulus.to_vec())?))
    }

    /// GF(q^2) for a prime power q, with the Conway modulus.
    pub fn quadratic(q: u32) -> Result<Arc<Field>> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, 2 * e)
    }

    /// GF(q^2) for a prime power q with an explicit modulus of degree 2e.
    pub fn quadratic_with_modulus(q: u32, modulus: &[u32]) -> Result<Arc<Field>> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::with_modulus(p, 2 * e, modulus)
    }

    fn check_size(p: u32, m: u32) -> Result<()> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::BadModulus { p, m });
        }
        match (p as u64).checked_pow(m) {
            Some(o) if o <= MAX_ORDER => Ok(()),
            _ => Err(Error::FieldTooLarge { p, m }),
        }
    }

    fn build(p: u32, m: u32, modulus: Vec<u32>) -> Result<Field> {
        let order = p.pow(m);
        let mm = m as usize;
        let encode = |d: &[u32]| Elem(d.iter().rev().fold(0u32, |acc, &c| acc * p + c) as u16);
        let n = (order - 1) as usize;
        let mut exp = Vec::with_capacity(2 * n);
        let mut log = vec![u32::MAX; order as usize];
        let mut digits = vec![0u32; mm];
        digits[0] = 1;
        for i in 0..n {
            let e = encode(&digits);
            exp.push(e);
            log[e.0 as usize] = i as u32;
            // multiply by x and reduce by the monic modulus
            let lead = digits[mm - 1];
            for j in (1..mm).rev() {
                digits[j] = digits[j - 1];
            }
            digits[0] = 0;
            for (j, d) in digits.iter_mut().enumerate() {
                *d = (*d + (p - modulus[j]) * lead) % p;
            }
        }
        let doubled: Vec<Elem> = exp.clone();
        exp.extend(doubled);

        let digits_of = |x: u32| -> Vec<u32> {
            let mut v = vec![0u32; mm];
            let mut t = x;
            for d in v.iter_mut() {
                *d = t % p;
                t /= p;
            }
            v
        };
        let neg: Vec<Elem> = (0..order)
            .map(|x| encode(&digits_of(x).iter().map(|&c| (p - c) % p).collect::<Vec<_>>()))
            .collect();
        let add_table = (order <= ADD_TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity((order * order) as usize);
            for a in 0..order {
                let da = digits_of(a);
                for b in 0..order {
                    let db = digits_of(b);
                    let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                    t.push(encode(&s));
                }
            }
            t
        });
        let mut field = Field {
            p,
            m,
            order,
            modulus,
            exp,
            log,
            add_table,
            neg,
            conj: None,
            sub: None,
        };
        if m.is_multiple_of(2) {
            let q = p.pow(m / 2);
            field.conj = Some((0..order).map(|x| field.pow(Elem(x as u16), q as i64)).collect());
            field.sub = Some(field.build_subfield(q)?);
        }
        Ok(field)
    }

    /// The subfield GF(q) is defined by the minimal polynomial of alpha^(q+1),
    /// so its primitive element maps to alpha^(q+1).
    fn build_subfield(&self, q: u32) -> Result<Subfield> {
        let e = self.m / 2;
        let beta = self.alpha_pow((q + 1) as i64);
        let mut poly = vec![Elem::ONE];
        let mut conj = beta;
        for _ in 0..e {
            let mut next = vec![Elem::ZERO; poly.len() + 1];
            for (i, &c) in poly.iter().enumerate() {
                next[i + 1] = self.add(next[i + 1], c);
                next[i] = self.sub(next[i], self.mul(c, conj));
            }
            poly = next;
            conj = self.pow(conj, self.p as i64);
        }
        let minpoly: Vec<u32> = poly.iter().map(|c| c.0 as u32).collect();
        let field = Field::with_modulus(self.p, e, &minpoly)?;
        let mut embed = vec![Elem::ZERO; q as usize];
        let mut restrict = vec![None; self.order as usize];
        restrict[0] = Some(Elem::ZERO);
        for j in 0..(q - 1) {
            let s = field.alpha_pow(j as i64);
            let b = self.alpha_pow(((q + 1) * j) as i64);
            embed[s.0 as usize] = b;
            restrict[b.0 as usize] = Some(s);
        }
        Ok(Subfield { field, q, embed, restrict })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Monic modulus, coefficients low to high.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Fields are equal when they have the same defining data.
    pub fn same_as(&self, other: &Field) -> bool {
        std::ptr::eq(self, other) || (self.p == other.p && self.m == other.m && self.modulus == other.modulus)
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    pub fn alpha(&self) -> Elem {
        self.alpha_pow(1)
    }

    /// alpha^e for any integer e.
    pub fn alpha_pow(&self, e: i64) -> Elem {
        let n = (self.order - 1) as i64;
        self.exp[e.rem_euclid(n) as usize]
    }

    /// Discrete logarithm to base alpha, `None` for zero.
    pub fn log(&self, a: Elem) -> Option<u32> {
        let l = self.log[a.0 as usize];
        (l != u32::MAX).then_some(l)
    }

    /// The image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.p as i64) as u16)
    }

    /// Elements in canonical order: 0, alpha^0, alpha^1, ..., alpha^(order-2).
    pub fn elements(&self) -> Vec<Elem> {
        std::iter::once(Elem::ZERO)
            .chain(self.exp[..(self.order - 1) as usize].iter().copied())
            .collect()
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if let Some(t) = &self.add_table {
            return t[a.0 as usize * self.order as usize + b.0 as usize];
        }
        let (mut x, mut y, p) = (a.0 as u32, b.0 as u32, self.p);
        let (mut out, mut place) = (0u32, 1u32);
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        Elem(out as u16)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a.0 as usize]
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize]
    }

    /// Multiplicative inverse.
    ///
    /// # Panics
    /// Panics on zero; use [`Field::try_inv`] for a fallible variant.
    pub fn inv(&self, a: Elem) -> Elem {
        self.try_inv(a).expect("inverse of zero")
    }

    pub fn try_inv(&self, a: Elem) -> Result<Elem> {
        let l = self.log(a).ok_or(Error::ZeroElement)?;
        Ok(self.alpha_pow(-(l as i64)))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Elem {
        self.mul(a, self.inv(b))
    }

    /// a^e; negative exponents invert (and panic on zero).
    pub fn pow(&self, a: Elem, e: i64) -> Elem {
        match self.log(a) {
            None if e == 0 => Elem::ONE,
            None if e > 0 => Elem::ZERO,
            None => panic!("negative power of zero"),
            Some(l) => self.alpha_pow(l as i64 * e),
        }
    }

    pub fn sum<I: IntoIterator<Item = Elem>>(&self, it: I) -> Elem {
        it.into_iter().fold(Elem::ZERO, |acc, x| self.add(acc, x))
    }

    /// Inner product sum a_i b_i.
    pub fn dot(&self, a: &[Elem], b: &[Elem]) -> Elem {
        a.iter().zip(b).fold(Elem::ZERO, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    // ---- quadratic-extension structure ----

    /// q when this field is GF(q^2).
    pub fn q(&self) -> Option<u32> {
        self.sub.as_ref().map(|s| s.q)
    }

    pub fn require_q(&self) -> Result<u32> {
        self.q().ok_or(Error::NoQuadraticStructure)
    }

    pub fn subfield(&self) -> Option<&Arc<Field>> {
        self.sub.as_ref().map(|s| &s.field)
    }

    /// x^q. Panics when the field has no index-2 subfield.
    pub fn conj(&self, a: Elem) -> Elem {
        self.conj.as_ref().expect("field has no index-2 subfield")[a.0 as usize]
    }

    pub fn frobenius_q(&self, a: Elem) -> Result<Elem> {
        self.require_q()?;
        Ok(self.conj(a))
    }

    /// Hermitian inner product sum u_i v_i^q.
    pub fn herm_dot(&self, u: &[Elem], v: &[Elem]) -> Elem {
        u.iter()
            .zip(v)
            .fold(Elem::ZERO, |acc, (&x, &y)| self.add(acc, self.mul(x, self.conj(y))))
    }

    /// (x + x^q, x^(q+1)), both in GF(q) (as elements of this field).
    pub fn trace_norm(&self, x: Elem) -> Result<(Elem, Elem)> {
        let xq = self.frobenius_q(x)?;
        Ok((self.add(x, xq), self.mul(x, xq)))
    }

    pub fn trace(&self, x: Elem) -> Elem {
        self.add(x, self.conj(x))
    }

    pub fn norm(&self, x: Elem) -> Elem {
        self.mul(x, self.conj(x))
    }

    pub fn in_subfield(&self, x: Elem) -> bool {
        self.conj(x) == x
    }

    /// Whether x lies in the image of the norm map on nonzero elements,
    /// which is exactly GF(q)^*.
    pub fn is_norm(&self, x: Elem) -> bool {
        self.conj.is_some() && !x.is_zero() && self.conj(x) == x
    }

    /// The smallest-exponent solution a = alpha^j of a^(q+1) = x.
    pub fn solve_norm(&self, x: Elem) -> Result<Elem> {
        let q = self.require_q()?;
        let l = self.log(x).ok_or(Error::ZeroElement)?;
        if self.conj(x) != x {
            return Err(Error::NotInSubfield);
        }
        Ok(self.alpha_pow((l / (q + 1)) as i64))
    }

    /// Maps an element of the subfield context into this field.
    pub fn embed(&self, s: Elem) -> Elem {
        self.sub.as_ref().expect("field has no index-2 subfield").embed[s.0 as usize]
    }

    /// Maps an element of GF(q) inside this field to the subfield context.
    pub fn restrict(&self, x: Elem) -> Result<Elem> {
        let sub = self.sub.as_ref().ok_or(Error::NoQuadraticStructure)?;
        sub.restrict[x.0 as usize].ok_or(Error::NotInSubfield)
    }

    /// Log-form encoding used in reports: exponent, or -1 for zero.
    pub fn to_log_form(&self, a: Elem) -> i64 {
        self.log(a).map_or(-1, |l| l as i64)
    }

    pub fn from_log_form(&self, l: i64) -> Elem {
        if l < 0 {
            Elem::ZERO
        } else {
            self.alpha_pow(l)
        }
    }

    /// Human-readable form: `0`, `1`, or `a^k`.
    pub fn show(&self, a: Elem) -> String {
        match self.log(a) {
            None => "0".into(),
            Some(0) => "1".into(),
            Some(1) => "a".into(),
            Some(l) => format!("a^{l}"),
        }
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Field {}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_tables_round_trip() {
        for (p, m) in [(2, 4), (3, 2), (5, 2), (7, 2), (2, 8), (3, 4)] {
            let f = Field::new(p, m).unwrap();
            for x in f.elements().into_iter().skip(1) {
                assert_eq!(f.alpha_pow(f.log(x).unwrap() as i64), x);
            }
        }
    }

    #[test]
    fn digitwise_addition_matches_table() {
        let f = Field::new(3, 6).unwrap();
        let g = Field::new(3, 2).unwrap();
        assert!(f.add_table.is_none());
        let a = f.alpha_pow(17);
        assert_eq!(f.sub(f.add(a, a), a), a);
        for x in g.elements() {
            for y in g.elements() {
                let (mut u, mut v, mut s, mut pl) = (x.0 as u32, y.0 as u32, 0u32, 1u32);
                while u > 0 || v > 0 {
                    s += ((u % 3 + v % 3) % 3) * pl;
                    u /= 3;
                    v /= 3;
                    pl *= 3;
                }
                assert_eq!(g.add(x, y).0 as u32, s);
            }
        }
    }

    #[test]
    fn subfield_primitive_maps_to_alpha_q_plus_one() {
        let f = Field::quadratic(5).unwrap();
        let s = f.subfield().unwrap();
        assert_eq!(f.embed(s.alpha()), f.alpha_pow(6));
        assert_eq!(s.modulus(), conway(5, 1).as_slice());
    }
}
