//! Residues of the differential dx/h(x), h(x) = prod (x - u), at the zeros of h.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::poly::{self, Poly};

#[derive(Clone, Debug)]
pub struct DifferentialData {
    pub points: Vec<Elem>,
    pub h: Poly,
    /// r_i = 1 / h'(u_i).
    pub residues: Vec<Elem>,
    /// Constant c for the differential c dx/h: 1 when every residue lies in
    /// GF(q)^*, otherwise 1/r_1 when all residues share one coset of GF(q)^*.
    pub lambda: Option<Elem>,
    /// a_i with a_i^(q+1) = lambda r_i.
    pub witnesses: Option<Vec<Elem>>,
}

impl DifferentialData {
    pub fn residue_sum(&self, field: &Field) -> Elem {
        field.sum(self.residues.iter().copied())
    }

    /// Every residue lies in GF(q)^*.
    pub fn all_norms(&self) -> bool {
        self.lambda == Some(Elem::ONE)
    }

    /// Every residue lies in one coset of GF(q)^*.
    pub fn norms_up_to_constant(&self) -> bool {
        self.lambda.is_some()
    }
}

pub fn check_distinct(points: &[Elem]) -> Result<()> {
    let mut seen = HashSet::with_capacity(points.len());
    if points.iter().all(|p| seen.insert(*p)) {
        Ok(())
    } else {
        Err(Error::DuplicatePoint)
    }
}

pub fn residues(field: &Field, points: &[Elem]) -> Result<DifferentialData> {
    if points.len() < 2 {
        return Err(Error::Parameter("an evaluation set needs at least two points".into()));
    }
    check_distinct(points)?;
    let h = poly::from_roots(field, points);
    let dh = poly::derivative(field, &h);
    let residues = points
        .iter()
        .map(|&u| field.try_inv(poly::eval(field, &dh, u)).map_err(|_| Error::DuplicatePoint))
        .collect::<Result<Vec<_>>>()?;
    let lambda = if field.q().is_none() {
        None
    } else if residues.iter().all(|&r| field.is_norm(r)) {
        Some(Elem::ONE)
    } else {
        let c = field.inv(residues[0]);
        residues.iter().all(|&r| field.is_norm(field.mul(c, r))).then_some(c)
    };
    let witnesses = match lambda {
        Some(c) => Some(residues.iter().map(|&r| field.solve_norm(field.mul(c, r))).collect::<Result<Vec<_>>>()?),
        None => None,
    };
    Ok(DifferentialData { points: points.to_vec(), h, residues, lambda, witnesses })
}

/// True when every value of the derivative of prod (x - u) on the set is a
/// norm, i.e. lies in GF(q)^*.
pub fn derivative_norm_condition(field: &Field, points: &[Elem]) -> bool {
    let h = poly::from_roots(field, points);
    let dh = poly::derivative(field, &h);
    points.iter().all(|&u| field.is_norm(poly::eval(field, &dh, u)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subfield_residues_are_minus_one() {
        let f = Field::quadratic(5).unwrap();
        let pts: Vec<Elem> = (0..5).map(|i| f.from_int(i)).collect();
        let d = residues(&f, &pts).unwrap();
        assert!(d.residues.iter().all(|&r| r == f.neg(Elem::ONE)));
        assert!(d.residue_sum(&f).is_zero());
        assert!(d.all_norms());
    }
}
