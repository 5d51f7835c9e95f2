//! Genus-zero algebraic geometry codes: two-point codes a * C_L(D, kO + P)
//! whose Hermitian hulls are MDS, their extended variants, hull-dimension
//! control by coordinate scaling, and evaluation-set growth.

mod divisor;
pub mod example;
mod residue;
mod sets;

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use divisor::{lbasis, rr_dim, Divisor, Place, RationalFunction};
pub use residue::{derivative_norm_condition, residues, DifferentialData};
pub use sets::{
    enumerate_sets, evaluation_set, extend_evaluation_set, log_order, subfield_elements, EvalFamily, EvalFamilyTag,
    Growth, GrowthStatus,
};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::grs::hull_distance;
use crate::linalg::Matrix;
use crate::quantum::{eaqecc_from_code, ClassicalIngredient};
use crate::report::{
    log_vector, Checks, CodeSummary, Construction, ConstructionReport, FieldDescriptor, HullSummary, Status, Vectors,
    Verdict,
};

/// Evaluation matrix of rational functions at the points, columns scaled by `scale`.
pub fn evaluation_matrix(
    field: &Arc<Field>,
    basis: &[RationalFunction],
    points: &[Elem],
    scale: &[Elem],
) -> Result<Matrix> {
    let rows = basis
        .iter()
        .map(|f| {
            points
                .iter()
                .zip(scale)
                .map(|(&u, &a)| {
                    f.eval(field, u)
                        .map(|v| field.mul(a, v))
                        .ok_or_else(|| Error::Parameter("evaluation point is a pole".into()))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, points.len(), &rows)
}

/// The code scale * C_L(D, G) with D the sum of the evaluation points.
pub fn evaluation_code(field: &Arc<Field>, points: &[Elem], g: &Divisor, scale: &[Elem]) -> Result<LinearCode> {
    if points.iter().any(|&u| g.multiplicity(Place::Finite(u)) != 0) {
        return Err(Error::Parameter("G meets the support of D".into()));
    }
    let basis = lbasis(field, g)?;
    Ok(LinearCode::from_generator(&evaluation_matrix(field, &basis, points, scale)?))
}

/// Which case of the two-point construction applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// a * C_L(D, P) lies in the Hermitian dual: the code is self-orthogonal.
    SelfOrthogonal,
    /// Otherwise: the hull is claimed to be a k-dimensional MDS code.
    MdsHull,
}

/// a * C_L(D, kO + P) together with its self-orthogonal one-point subcode.
#[derive(Clone, Debug)]
pub struct TwoPointCode {
    pub points: Vec<Elem>,
    pub k: usize,
    pub p: Elem,
    pub data: DifferentialData,
    /// a_i with a_i^(q+1) = lambda Res_{P_i}(dx/h).
    pub scale: Vec<Elem>,
    /// Generator rows a * x^i (0 <= i <= k) followed by a * 1/(x - p).
    pub generator: Matrix,
    pub code: LinearCode,
    pub base: LinearCode,
    pub branch: Branch,
}

/// Smallest element outside the set in scan order (0, 1, alpha, alpha^2, ...).
pub fn default_extra_point(field: &Field, points: &[Elem]) -> Result<Elem> {
    log_order(field)
        .into_iter()
        .find(|e| !points.contains(e))
        .ok_or_else(|| Error::Parameter("no rational place left for P".into()))
}

pub fn two_point_code(field: &Arc<Field>, points: &[Elem], k: usize, p: Option<Elem>) -> Result<TwoPointCode> {
    let q = field.require_q()? as usize;
    let n = points.len();
    if n < 2 || k > (n - 2) / (q + 1) {
        return Err(Error::Parameter(format!("k = {k} outside [0, (n-2)/(q+1)] for n = {n}")));
    }
    let data = residues(field, points)?;
    let scale = data
        .witnesses
        .clone()
        .ok_or_else(|| Error::Hypothesis("residues of dx/h are not norms up to a common constant".into()))?;
    let p = match p {
        Some(p) => p,
        None => default_extra_point(field, points)?,
    };
    if points.contains(&p) {
        return Err(Error::Parameter("the extra place lies in the support of D".into()));
    }
    let g = Divisor::infinity(k as i64) + Divisor::point(Place::Finite(p), 1);
    let basis = lbasis(field, &g)?;
    let generator = evaluation_matrix(field, &basis, points, &scale)?;
    let code = LinearCode::from_generator(&generator);
    let base = LinearCode::from_generator(&generator.select_rows(&(0..=k).collect::<Vec<_>>()));
    // a * C_L(D, P) is spanned by the rows a * 1 and a * 1/(x - p).
    let small = [generator.row(0), generator.row(k + 1)];
    let inside = small.iter().all(|x| (0..generator.rows()).all(|i| field.herm_dot(x, generator.row(i)).is_zero()));
    let branch = if inside { Branch::SelfOrthogonal } else { Branch::MdsHull };
    Ok(TwoPointCode { points: points.to_vec(), k, p, data, scale, generator, code, base, branch })
}

pub fn build_family(field: &Arc<Field>, fam: EvalFamily, k: usize, p: Option<Elem>) -> Result<TwoPointCode> {
    let q = field.require_q()? as usize;
    if k > fam.max_k(q) {
        return Err(Error::Parameter(format!("{fam}: k = {k} out of range [0, {}]", fam.max_k(q))));
    }
    two_point_code(field, &evaluation_set(field, fam)?, k, p)
}

fn param_map(field: &Field, q: usize, k: usize, p: Elem, extra: BTreeMap<String, i64>) -> BTreeMap<String, i64> {
    let mut m = extra;
    m.insert("q".into(), q as i64);
    m.insert("k".into(), k as i64);
    m.insert("p".into(), field.to_log_form(p));
    m
}

/// Distance check for an MDS code of the given dimension: enumerated within
/// budget, otherwise the bound d >= n - deg G, which already meets Singleton.
fn code_distance(code: &LinearCode, budget: u64, checks: &mut Checks) -> Result<Option<usize>> {
    let (n, k) = (code.n(), code.k());
    if code.enumeration_size() <= budget as u128 {
        let d = code.min_distance(budget)?;
        checks.expect_eq("code_distance", d, n - k + 1);
        Ok(Some(d))
    } else {
        checks.push("code_distance", Status::Structural, format!("d >= {} from the degree bound", n - k + 1));
        Ok(None)
    }
}

/// Verifies a two-point code: self-orthogonal base, parameters
/// [n, k+2, n-k-1], the branch test against the measured hull, and the
/// hull's minimum distance within budget.
pub fn verify_two_point(tp: &TwoPointCode, family: &str, extra: BTreeMap<String, i64>, budget: u64) -> Result<ConstructionReport> {
    let field = tp.code.field();
    let q = field.require_q()? as usize;
    let (n, k) = (tp.code.n(), tp.k);
    let mut checks = Checks::default();
    let mut notes = Vec::new();
    checks.push(
        "residue_sum",
        Status::from_bool(tp.data.residue_sum(field).is_zero()),
        "sum of residues of dx/h",
    );
    checks.expect_eq("base_self_orthogonal", tp.base.hull_dim_via_gram()?, k + 1);
    checks.expect_eq("dimension", tp.code.k(), k + 2);
    let d = code_distance(&tp.code, budget, &mut checks)?;
    let gram_dim = tp.code.hull_dim_via_gram()?;
    let hull = tp.code.hermitian_hull()?;
    checks.expect_eq("hull_dim_intersection", hull.k(), gram_dim);
    let claimed = match tp.branch {
        Branch::SelfOrthogonal => k + 2,
        Branch::MdsHull => k,
    };
    checks.push(
        "hull_dim_branch",
        Status::from_bool(gram_dim == claimed),
        format!("{:?} branch: measured {gram_dim}, expected {claimed}", tp.branch),
    );
    if tp.branch == Branch::MdsHull {
        let which = if gram_dim == k {
            "k"
        } else if gram_dim + 1 == k {
            "k - 1"
        } else {
            "neither k nor k - 1"
        };
        notes.push(format!("measured hull dimension {gram_dim} matches {which}"));
    }
    let (hull_d, mds) = hull_distance(&hull, budget, false, &mut checks)?;
    let ingredient = ClassicalIngredient { q: q as u32, n, k: tp.code.k(), hull_dim: gram_dim };
    let mut report = ConstructionReport {
        construction: Construction { family: family.into(), params: param_map(field, q, k, tp.p, extra) },
        field: FieldDescriptor::of(field),
        code: CodeSummary { n, k: tp.code.k(), d, d_bound: n - k - 1 },
        hull: HullSummary {
            claimed_dim: Some(claimed),
            gram_dim,
            intersection_dim: Some(hull.k()),
            d: hull_d,
            mds: Some(mds),
        },
        vectors: Some(Vectors { b: log_vector(field, &tp.points), a: log_vector(field, &tp.scale) }),
        quantum: eaqecc_from_code(&ingredient).into_iter().collect(),
        checks: checks.into_vec(),
        notes,
        verdict: Verdict::Pass,
        first_failure: None,
    };
    report.finalize();
    Ok(report)
}

pub fn family_report(field: &Arc<Field>, fam: EvalFamily, k: usize, p: Option<Elem>, budget: u64) -> Result<ConstructionReport> {
    let tp = build_family(field, fam, k, p)?;
    verify_two_point(&tp, fam.name(), fam.params(), budget)
}

/// Every in-range (family, k) point for this q.
pub fn sweep(field: &Arc<Field>, budget: u64) -> Result<Vec<ConstructionReport>> {
    let q = field.require_q()? as usize;
    let points: Vec<(EvalFamily, usize)> =
        enumerate_sets(q).into_iter().flat_map(|fam| (0..=fam.max_k(q)).map(move |k| (fam, k))).collect();
    crate::parallel::install(|| points.par_iter().map(|&(fam, k)| family_report(field, fam, k, None, budget)).collect())
}

/// Default scalar for [`scale_for_hull`]: the first element of GF(q)^* in
/// scan order with alpha^(q+1) different from 1 and -1, else the first
/// element of GF(q^2)^* with alpha^(q+1) != 1.
pub fn default_hull_scalar(field: &Field) -> Result<Elem> {
    let one = Elem::ONE;
    let minus = field.neg(one);
    let norm = |a: Elem| field.norm(a);
    subfield_elements(field)?
        .into_iter()
        .skip(1)
        .find(|&a| norm(a) != one && norm(a) != minus)
        .or_else(|| log_order(field).into_iter().skip(1).find(|&a| norm(a) != one))
        .ok_or_else(|| Error::Parameter("every scalar has norm 1".into()))
}

/// Scales the last `l` pivot columns of the self-orthogonal base code by
/// `alpha`. The extra row is reduced to vanish there first, so this is a
/// monomial transform of the whole code and keeps its parameters.
pub fn scale_for_hull(tp: &TwoPointCode, l: usize, alpha: Option<Elem>) -> Result<LinearCode> {
    let field = tp.code.field();
    let k = tp.k;
    if l > k {
        return Err(Error::Parameter(format!("l = {l} exceeds k = {k}")));
    }
    let alpha = match alpha {
        Some(a) => a,
        None => default_hull_scalar(field)?,
    };
    if alpha.is_zero() || field.norm(alpha) == Elem::ONE {
        return Err(Error::Parameter("the scalar must satisfy alpha^(q+1) != 1".into()));
    }
    let pivots = tp.base.pivots();
    let mut scale = vec![Elem::ONE; tp.code.n()];
    for &c in &pivots[pivots.len() - l..] {
        scale[c] = alpha;
    }
    tp.code.monomial_scale(&scale)
}

/// Measured hull dimension of the scaled code for l = 0..=k.
pub fn hull_sweep(tp: &TwoPointCode, alpha: Option<Elem>) -> Result<Vec<usize>> {
    (0..=tp.k).map(|l| scale_for_hull(tp, l, alpha)?.hull_dim_via_gram()).collect()
}

/// Extension of a one-point code by an extra coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionScale {
    /// Scaling vector (a_1, ..., a_n, 0).
    TrailingZero,
    /// Scaling vector (a_1, ..., a_n, 1).
    TrailingOne,
}

#[derive(Clone, Debug)]
pub struct ExtendedTwoPoint {
    pub inner: TwoPointCode,
    pub last: ExtensionScale,
    pub base: LinearCode,
    pub code: LinearCode,
    pub branch: Branch,
}

/// Extends C_L(D, kO) and C_L(D, kO + P) by a parity coordinate, scales by
/// (a, last), and requires the extended base to be Hermitian self-orthogonal.
pub fn extended_two_point(
    field: &Arc<Field>,
    points: &[Elem],
    k: usize,
    p: Option<Elem>,
    last: ExtensionScale,
) -> Result<ExtendedTwoPoint> {
    let tp = two_point_code(field, points, k, p)?;
    let n = points.len();
    let ones = vec![Elem::ONE; n];
    let g = Divisor::infinity(k as i64) + Divisor::point(Place::Finite(tp.p), 1);
    let plain = evaluation_matrix(field, &lbasis(field, &g)?, points, &ones)?;
    let mut scale = tp.scale.clone();
    scale.push(match last {
        ExtensionScale::TrailingZero => Elem::ZERO,
        ExtensionScale::TrailingOne => Elem::ONE,
    });
    let extend = |rows: &[usize]| -> Result<Matrix> {
        let ext: Vec<Vec<Elem>> = rows
            .iter()
            .map(|&i| {
                let mut r = plain.row(i).to_vec();
                r.push(field.neg(field.sum(r.iter().copied())));
                r.iter().zip(&scale).map(|(&x, &a)| field.mul(x, a)).collect()
            })
            .collect();
        Matrix::from_rows(field, n + 1, &ext)
    };
    let all: Vec<usize> = (0..k + 2).collect();
    let gen = extend(&all)?;
    let base = LinearCode::from_generator(&extend(&all[..k + 1])?);
    if base.hull_dim_via_gram()? != base.k() {
        return Err(Error::Hypothesis("the extended one-point code is not Hermitian self-orthogonal".into()));
    }
    let small = [gen.row(0), gen.row(k + 1)];
    let inside = small.iter().all(|x| (0..gen.rows()).all(|i| field.herm_dot(x, gen.row(i)).is_zero()));
    let branch = if inside { Branch::SelfOrthogonal } else { Branch::MdsHull };
    Ok(ExtendedTwoPoint { inner: tp, last, base, code: LinearCode::from_generator(&gen), branch })
}

/// Checks the extended construction against its claims: an
/// [n+1, k+1, n-k+1] self-orthogonal base and an [n+1, k+2, n-k] code whose
/// hull is a k-dimensional MDS code (or the whole code on the first branch).
pub fn verify_extended(ext: &ExtendedTwoPoint, family: &str, extra: BTreeMap<String, i64>, budget: u64) -> Result<ConstructionReport> {
    let field = ext.code.field();
    let q = field.require_q()? as usize;
    let (n, k) = (ext.inner.points.len(), ext.inner.k);
    let mut checks = Checks::default();
    checks.push("base_self_orthogonal", Status::Pass, "required before construction");
    let measured = |c: &LinearCode, checks: &mut Checks, name: &str, expected: usize| -> Result<Option<usize>> {
        if c.enumeration_size() <= budget as u128 {
            let d = c.min_distance(budget)?;
            checks.expect_eq(name, d, expected);
            Ok(Some(d))
        } else {
            checks.push(name, Status::Skipped, "enumeration over budget");
            Ok(None)
        }
    };
    measured(&ext.base, &mut checks, "base_distance", n - k + 1)?;
    checks.expect_eq("dimension", ext.code.k(), k + 2);
    let d = measured(&ext.code, &mut checks, "code_distance", n - k)?;
    let gram_dim = ext.code.hull_dim_via_gram()?;
    let hull = ext.code.hermitian_hull()?;
    checks.expect_eq("hull_dim_intersection", hull.k(), gram_dim);
    let claimed = match ext.branch {
        Branch::SelfOrthogonal => k + 2,
        Branch::MdsHull => k,
    };
    checks.push(
        "hull_dim_branch",
        Status::from_bool(gram_dim == claimed),
        format!("{:?} branch: measured {gram_dim}, expected {claimed}", ext.branch),
    );
    let (hull_d, mds) = hull_distance(&hull, budget, false, &mut checks)?;
    let mut params = param_map(field, q, k, ext.inner.p, extra);
    params.insert("last".into(), matches!(ext.last, ExtensionScale::TrailingOne) as i64);
    let mut scale = log_vector(field, &ext.inner.scale);
    scale.push(matches!(ext.last, ExtensionScale::TrailingOne) as i64 - 1);
    let ingredient = ClassicalIngredient { q: q as u32, n: n + 1, k: ext.code.k(), hull_dim: gram_dim };
    let mut report = ConstructionReport {
        construction: Construction { family: format!("{family}-EXT"), params },
        field: FieldDescriptor::of(field),
        code: CodeSummary { n: n + 1, k: ext.code.k(), d, d_bound: n - k - 1 },
        hull: HullSummary { claimed_dim: Some(claimed), gram_dim, intersection_dim: Some(hull.k()), d: hull_d, mds: Some(mds) },
        vectors: Some(Vectors { b: log_vector(field, &ext.inner.points), a: scale }),
        quantum: eaqecc_from_code(&ingredient).into_iter().collect(),
        checks: checks.into_vec(),
        notes: Vec::new(),
        verdict: Verdict::Pass,
        first_failure: None,
    };
    report.finalize();
    Ok(report)
}
