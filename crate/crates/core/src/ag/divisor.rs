//! Rational places, divisors, rational functions and Riemann-Roch spaces
//! of the rational function field GF(q^2)(x).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::poly::{self, Poly};

/// A degree-one place: the zero of x - beta, or the pole O of x.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Finite(Elem),
    Infinite,
}

impl Place {
    pub fn show(&self, field: &Field) -> String {
        match self {
            Place::Finite(b) => format!("P({})", field.show(*b)),
            Place::Infinite => "O".into(),
        }
    }
}

/// A formal sum of rational places with integer multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Divisor(BTreeMap<Place, i64>);

impl Divisor {
    pub fn zero() -> Self {
        Divisor::default()
    }

    pub fn point(place: Place, m: i64) -> Self {
        let mut d = Divisor::zero();
        d.set(place, m);
        d
    }

    /// m O.
    pub fn infinity(m: i64) -> Self {
        Self::point(Place::Infinite, m)
    }

    /// Sum of the finite places at the given points, each with multiplicity one.
    pub fn reduced(points: &[Elem]) -> Self {
        points.iter().fold(Divisor::zero(), |d, &p| d + Divisor::point(Place::Finite(p), 1))
    }

    pub fn multiplicity(&self, place: Place) -> i64 {
        self.0.get(&place).copied().unwrap_or(0)
    }

    fn set(&mut self, place: Place, m: i64) {
        if m == 0 {
            self.0.remove(&place);
        } else {
            self.0.insert(place, m);
        }
    }

    pub fn degree(&self) -> i64 {
        self.0.values().sum()
    }

    pub fn support(&self) -> impl Iterator<Item = Place> + '_ {
        self.0.keys().copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (Place, i64)> + '_ {
        self.0.iter().map(|(&p, &m)| (p, m))
    }

    fn combine(&self, other: &Divisor, op: impl Fn(i64, i64) -> i64) -> Divisor {
        let mut out = Divisor::zero();
        for p in self.support().chain(other.support()) {
            out.set(p, op(self.multiplicity(p), other.multiplicity(p)));
        }
        out
    }

    /// Pointwise minimum.
    pub fn wedge(&self, other: &Divisor) -> Divisor {
        self.combine(other, i64::min)
    }

    /// Pointwise maximum.
    pub fn vee(&self, other: &Divisor) -> Divisor {
        self.combine(other, i64::max)
    }

    /// Partial order: every multiplicity of `self` is at least that of `other`.
    pub fn geq(&self, other: &Divisor) -> bool {
        self.support().chain(other.support()).all(|p| self.multiplicity(p) >= other.multiplicity(p))
    }

    pub fn is_effective(&self) -> bool {
        self.0.values().all(|&m| m >= 0)
    }
}

impl Add for Divisor {
    type Output = Divisor;
    fn add(self, rhs: Divisor) -> Divisor {
        self.combine(&rhs, |a, b| a + b)
    }
}

impl Sub for Divisor {
    type Output = Divisor;
    fn sub(self, rhs: Divisor) -> Divisor {
        self.combine(&rhs, |a, b| a - b)
    }
}

impl Neg for Divisor {
    type Output = Divisor;
    fn neg(self) -> Divisor {
        Divisor::zero() - self
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(p, m)| {
                let name = match p {
                    Place::Infinite => "O".to_string(),
                    Place::Finite(e) => format!("P[{}]", e.0),
                };
                format!("{m}{name}")
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Dimension of L(G) on the projective line: deg G + 1, or 0 when deg G < 0.
pub fn rr_dim(g: &Divisor) -> usize {
    let d = g.degree();
    if d < 0 {
        0
    } else {
        d as usize + 1
    }
}

/// A quotient of coprime polynomials with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(field: &Field, num: Poly, den: Poly) -> Result<Self> {
        let den = poly::trim(den);
        if den.is_empty() {
            return Err(Error::Parameter("zero denominator".into()));
        }
        let num = poly::trim(num);
        if num.is_empty() {
            return Ok(RationalFunction { num, den: vec![Elem::ONE] });
        }
        let g = poly::gcd(field, &num, &den);
        let (mut num, _) = poly::divmod(field, &num, &g);
        let (den, _) = poly::divmod(field, &den, &g);
        let lead = field.inv(*den.last().expect("nonzero denominator"));
        num.iter_mut().for_each(|c| *c = field.mul(*c, lead));
        let den = poly::monic(field, den);
        Ok(RationalFunction { num, den })
    }

    pub fn polynomial(f: Poly) -> Self {
        RationalFunction { num: poly::trim(f), den: vec![Elem::ONE] }
    }

    /// x^i.
    pub fn monomial(i: usize) -> Self {
        let mut f = vec![Elem::ZERO; i + 1];
        f[i] = Elem::ONE;
        Self::polynomial(f)
    }

    /// (x - p)^(-j).
    pub fn pole_at(field: &Field, p: Elem, j: usize) -> Self {
        let den = (0..j).fold(vec![Elem::ONE], |acc, _| poly::mul(field, &acc, &[field.neg(p), Elem::ONE]));
        RationalFunction { num: vec![Elem::ONE], den }
    }

    pub fn numerator(&self) -> &[Elem] {
        &self.num
    }

    pub fn denominator(&self) -> &[Elem] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// Valuation at a rational place; `None` for the zero function.
    pub fn valuation(&self, field: &Field, place: Place) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(match place {
            Place::Finite(p) => {
                poly::root_multiplicity(field, &self.num, p) as i64 - poly::root_multiplicity(field, &self.den, p) as i64
            }
            Place::Infinite => poly::degree(&self.den).unwrap() as i64 - poly::degree(&self.num).unwrap() as i64,
        })
    }

    /// The part of the principal divisor supported on rational places.
    pub fn divisor(&self, field: &Field) -> Divisor {
        let mut d = Divisor::zero();
        if self.is_zero() {
            return d;
        }
        for p in field.elements() {
            let v = self.valuation(field, Place::Finite(p)).unwrap();
            d.set(Place::Finite(p), v);
        }
        d.set(Place::Infinite, self.valuation(field, Place::Infinite).unwrap());
        d
    }

    /// (f) + G >= 0, checked place by place.
    pub fn in_space(&self, field: &Field, g: &Divisor) -> bool {
        if self.is_zero() {
            return true;
        }
        let fd = self.divisor(field);
        (fd + g.clone()).is_effective()
    }

    /// Value at x, or `None` at a pole.
    pub fn eval(&self, field: &Field, x: Elem) -> Option<Elem> {
        let d = poly::eval(field, &self.den, x);
        (!d.is_zero()).then(|| field.div(poly::eval(field, &self.num, x), d))
    }
}

/// A basis of L(G), each element checked against (f) + G >= 0.
///
/// With G = a O + sum b_P P and every b_P >= 0, a >= 0 the basis is
/// 1, x, ..., x^a together with (x - p)^(-j), 1 <= j <= b_P. Otherwise it is
/// N(x) x^i / M(x), 0 <= i <= deg G, where N vanishes to the required order
/// at the negative places and M collects the allowed poles.
pub fn lbasis(field: &Field, g: &Divisor) -> Result<Vec<RationalFunction>> {
    if g.degree() < 0 {
        return Ok(Vec::new());
    }
    let a = g.multiplicity(Place::Infinite);
    let finite: Vec<(Elem, i64)> = g
        .entries()
        .filter_map(|(p, m)| match p {
            Place::Finite(e) => Some((e, m)),
            Place::Infinite => None,
        })
        .collect();
    let basis: Vec<RationalFunction> = if a >= 0 && finite.iter().all(|&(_, m)| m >= 0) {
        let mut b: Vec<RationalFunction> = (0..=a as usize).map(RationalFunction::monomial).collect();
        for &(p, m) in &finite {
            b.extend((1..=m as usize).map(|j| RationalFunction::pole_at(field, p, j)));
        }
        b
    } else {
        let mut zeros = vec![Elem::ONE];
        let mut poles = vec![Elem::ONE];
        for &(p, m) in &finite {
            let lin = [field.neg(p), Elem::ONE];
            for _ in 0..m.unsigned_abs() {
                if m < 0 {
                    zeros = poly::mul(field, &zeros, &lin);
                } else {
                    poles = poly::mul(field, &poles, &lin);
                }
            }
        }
        (0..=g.degree() as usize)
            .map(|i| {
                let mut xi = vec![Elem::ZERO; i + 1];
                xi[i] = Elem::ONE;
                RationalFunction::new(field, poly::mul(field, &zeros, &xi), poles.clone())
            })
            .collect::<Result<_>>()?
    };
    if let Some(bad) = basis.iter().position(|f| !f.in_space(field, g)) {
        return Err(Error::Hypothesis(format!("basis element {bad} violates (f) + G >= 0")));
    }
    debug_assert_eq!(basis.len(), rr_dim(g));
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_bookkeeping() {
        let f = Field::quadratic(5).unwrap();
        let (n, k) = (20i64, 3i64);
        let p = Place::Finite(f.alpha_pow(10));
        let g1 = Divisor::infinity(k) + Divisor::point(p, 1);
        let h1 = Divisor::infinity(n - k - 2) - Divisor::point(p, 1);
        assert_eq!(g1.wedge(&h1), Divisor::infinity(k) - Divisor::point(p, 1));
        assert_eq!(g1.vee(&h1).degree(), n - k - 1);
    }

    #[test]
    fn lbasis_negative_part() {
        let f = Field::quadratic(3).unwrap();
        let g = Divisor::infinity(3) - Divisor::point(Place::Finite(f.alpha()), 2);
        let b = lbasis(&f, &g).unwrap();
        assert_eq!(b.len(), 2);
    }
}
