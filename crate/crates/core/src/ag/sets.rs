//! Evaluation sets whose residues of dx/h are all norms: roots of unity plus
//! zero (COR1), unions of additive cosets of GF(q) (COR2), unions of
//! multiplicative cosets plus zero (COR3), and recursive growth by pairs.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::residue::{derivative_norm_condition, residues};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "UPPERCASE")]
pub enum EvalFamily {
    /// The (s-1)-th roots of unity together with 0.
    Cor1 { s: usize },
    /// { u_i alpha + u_j : i < t, u_j in GF(q) }.
    Cor2 { t: usize },
    /// U_{n0} and t further cosets of it, together with 0.
    Cor3 { n0: usize, t: usize },
}

impl EvalFamily {
    pub fn name(&self) -> &'static str {
        match self {
            EvalFamily::Cor1 { .. } => "COR1",
            EvalFamily::Cor2 { .. } => "COR2",
            EvalFamily::Cor3 { .. } => "COR3",
        }
    }

    pub fn len(&self, q: usize) -> usize {
        match *self {
            EvalFamily::Cor1 { s } => s,
            EvalFamily::Cor2 { t } => t * q,
            EvalFamily::Cor3 { n0, t } => (t + 1) * n0 + 1,
        }
    }

    pub fn params(&self) -> BTreeMap<String, i64> {
        match *self {
            EvalFamily::Cor1 { s } => BTreeMap::from([("s".into(), s as i64)]),
            EvalFamily::Cor2 { t } => BTreeMap::from([("t".into(), t as i64)]),
            EvalFamily::Cor3 { n0, t } => BTreeMap::from([("n0".into(), n0 as i64), ("t".into(), t as i64)]),
        }
    }

    /// Largest k with k <= (n - 2) / (q + 1).
    pub fn max_k(&self, q: usize) -> usize {
        (self.len(q).saturating_sub(2)) / (q + 1)
    }

    pub fn in_range(&self, q: usize) -> bool {
        let qq = q * q - 1;
        match *self {
            EvalFamily::Cor1 { s } => s >= 2 && s != q * q && qq.is_multiple_of(s - 1),
            EvalFamily::Cor2 { t } => (1..q).contains(&t),
            EvalFamily::Cor3 { n0, t } => {
                if n0 == 0 || !qq.is_multiple_of(n0) {
                    return false;
                }
                let n2 = n0 / n0.gcd(&(q + 1));
                // t <= (q - 1) / n2 - 2
                t >= 1 && (t + 2) * n2 < q
            }
        }
    }
}

impl fmt::Display for EvalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            EvalFamily::Cor1 { s } => write!(f, "COR1(s={s})"),
            EvalFamily::Cor2 { t } => write!(f, "COR2(t={t})"),
            EvalFamily::Cor3 { n0, t } => write!(f, "COR3(n0={n0}, t={t})"),
        }
    }
}

/// Family tag without parameters, as used on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalFamilyTag {
    Cor1,
    Cor2,
    Cor3,
}

impl FromStr for EvalFamilyTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "COR1" => Ok(EvalFamilyTag::Cor1),
            "COR2" => Ok(EvalFamilyTag::Cor2),
            "COR3" => Ok(EvalFamilyTag::Cor3),
            _ => Err(Error::Parameter(format!("unknown evaluation-set family {s}"))),
        }
    }
}

/// Every in-range evaluation-set family for this q.
pub fn enumerate_sets(q: usize) -> Vec<EvalFamily> {
    let qq = q * q - 1;
    let mut out: Vec<EvalFamily> = (1..qq).filter(|d| qq.is_multiple_of(*d)).map(|d| EvalFamily::Cor1 { s: d + 1 }).collect();
    out.extend((1..q).map(|t| EvalFamily::Cor2 { t }));
    for n0 in (1..=qq).filter(|d| qq.is_multiple_of(*d)) {
        for t in 1..q {
            let fam = EvalFamily::Cor3 { n0, t };
            if fam.in_range(q) {
                out.push(fam);
            }
        }
    }
    out
}

/// Elements of GF(q) inside GF(q^2): 0 first, then powers of alpha^(q+1).
pub fn subfield_elements(field: &Field) -> Result<Vec<Elem>> {
    let q = field.require_q()? as i64;
    Ok(std::iter::once(Elem::ZERO).chain((0..q - 1).map(|j| field.alpha_pow(j * (q + 1)))).collect())
}

/// Order used for every deterministic scan: 0, then alpha^0, alpha^1, ...
pub fn log_order(field: &Field) -> Vec<Elem> {
    std::iter::once(Elem::ZERO).chain((0..field.order() as i64 - 1).map(|j| field.alpha_pow(j))).collect()
}

/// The evaluation set of a family, with every residue of dx/h verified to
/// lie in GF(q)^*, or in a single coset of it.
pub fn evaluation_set(field: &Field, fam: EvalFamily) -> Result<Vec<Elem>> {
    let q = field.require_q()? as usize;
    let qq = q * q - 1;
    if !fam.in_range(q) {
        return Err(Error::Parameter(format!("{fam} out of range for q = {q}")));
    }
    let set = match fam {
        EvalFamily::Cor1 { s } => {
            let step = (qq / (s - 1)) as i64;
            let mut u: Vec<Elem> = (0..(s - 1) as i64).map(|j| field.alpha_pow(j * step)).collect();
            u.push(Elem::ZERO);
            u
        }
        EvalFamily::Cor2 { t } => {
            let fq = subfield_elements(field)?;
            let a = field.alpha();
            let mut u = Vec::with_capacity(t * q);
            for &ui in &fq[..t] {
                for &uj in &fq {
                    u.push(field.add(field.mul(ui, a), uj));
                }
            }
            u
        }
        EvalFamily::Cor3 { n0, t } => cor3_set(field, n0, t)?,
    };
    let data = residues(field, &set)?;
    if !data.norms_up_to_constant() {
        return Err(Error::Hypothesis(format!("{fam}: residues of dx/h are not norms up to a common constant")));
    }
    Ok(set)
}

/// Coset representatives alpha^c, 1 <= c < (q^2-1)/n0, are tried as
/// t-subsets in lexicographic order; the first whose residues are norms up
/// to a common constant wins.
fn cor3_set(field: &Field, n0: usize, t: usize) -> Result<Vec<Elem>> {
    let qq = field.order() as usize - 1;
    let cosets = qq / n0;
    let step = cosets as i64;
    let coset = |c: usize| -> Vec<Elem> { (0..n0 as i64).map(|j| field.alpha_pow(c as i64 + j * step)).collect() };
    let build = |reps: &[usize]| -> Vec<Elem> {
        let mut u = coset(0);
        for &c in reps {
            u.extend(coset(c));
        }
        u.push(Elem::ZERO);
        u
    };
    let mut reps: Vec<usize> = (1..=t).collect();
    if t >= cosets {
        return Err(Error::Parameter(format!("only {} cosets of the {n0}-th roots of unity", cosets - 1)));
    }
    loop {
        let u = build(&reps);
        if residues(field, &u)?.norms_up_to_constant() {
            return Ok(u);
        }
        // next t-subset of [1, cosets - 1]
        let mut i = t;
        loop {
            if i == 0 {
                return Err(Error::Parameter(format!("COR3(n0={n0}, t={t}): coset representatives exhausted")));
            }
            i -= 1;
            if reps[i] < cosets - t + i {
                reps[i] += 1;
                for j in i + 1..t {
                    reps[j] = reps[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GrowthStatus {
    Complete,
    /// No admissible pair at this step.
    Exhausted { step: usize },
}

#[derive(Clone, Debug)]
pub struct Growth {
    /// The starting set followed by every grown set.
    pub sets: Vec<Vec<Elem>>,
    pub pairs: Vec<(Elem, Elem)>,
    pub status: GrowthStatus,
}

fn pair_ok(field: &Field, u: &[Elem], f: &[Elem], b1: Elem, b2: Elem) -> bool {
    if b1 == b2 {
        return false;
    }
    let c1 = field.mul(poly::eval(field, f, b1), field.sub(b1, b2));
    let c2 = field.mul(poly::eval(field, f, b2), field.sub(b2, b1));
    field.is_norm(c1)
        && field.is_norm(c2)
        && u.iter().all(|&a| field.is_norm(field.mul(field.sub(a, b1), field.sub(a, b2))))
}

/// Adds admissible pairs (b1, b2) one step at a time. Conjugate pairs
/// (b, b^q) are tried first in scan order, then all pairs b1 < b2.
pub fn extend_evaluation_set(field: &Field, start: &[Elem], max_steps: usize) -> Result<Growth> {
    field.require_q()?;
    super::residue::check_distinct(start)?;
    if !derivative_norm_condition(field, start) {
        return Err(Error::Hypothesis("starting set violates the derivative-norm condition".into()));
    }
    let order = log_order(field);
    let mut sets = vec![start.to_vec()];
    let mut pairs = Vec::new();
    for step in 1..=max_steps {
        let u = sets.last().unwrap().clone();
        let inside: HashSet<Elem> = u.iter().copied().collect();
        let outside: Vec<Elem> = order.iter().copied().filter(|b| !inside.contains(b)).collect();
        let f = poly::from_roots(field, &u);
        let conjugate = outside.par_iter().find_map_first(|&b| {
            let c = field.conj(b);
            (c != b && !inside.contains(&c) && pair_ok(field, &u, &f, b, c)).then_some((b, c))
        });
        let found = conjugate.or_else(|| {
            outside.par_iter().enumerate().find_map_first(|(i, &b1)| {
                outside[i + 1..].iter().find(|&&b2| pair_ok(field, &u, &f, b1, b2)).map(|&b2| (b1, b2))
            })
        });
        let Some((b1, b2)) = found else {
            return Ok(Growth { sets, pairs, status: GrowthStatus::Exhausted { step } });
        };
        let mut v = u;
        v.extend([b1, b2]);
        if !derivative_norm_condition(field, &v) {
            return Err(Error::Hypothesis(format!("grown set at step {step} fails the derivative-norm condition")));
        }
        sets.push(v);
        pairs.push((b1, b2));
    }
    Ok(Growth { sets, pairs, status: GrowthStatus::Complete })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cor3_example_size() {
        let f = Field::quadratic(5).unwrap();
        let u = evaluation_set(&f, EvalFamily::Cor3 { n0: 6, t: 1 }).unwrap();
        assert_eq!(u.len(), 13);
    }
}
