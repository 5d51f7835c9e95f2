//! Parameters of quantum codes obtained from classical codes over GF(q^2):
//! the entanglement-assisted construction, the propagation rule and the
//! Singleton-like bounds.

mod reference;
pub mod tables;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use reference::{reference_rows, ReferenceRow, TABLE3_NEW};

/// How the minimum distance of a quantum code was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DeltaSource {
    /// k + 1 from an MDS classical code; not enumerated.
    Structural,
    Enumerated,
}

/// An [[n, kappa, delta; c]]_q code. c = 0 is a plain stabilizer code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantumParams {
    pub n: usize,
    pub kappa: usize,
    pub delta: usize,
    pub c: usize,
    pub q: u32,
    pub pure: bool,
    pub delta_source: DeltaSource,
}

impl QuantumParams {
    pub fn new(n: usize, kappa: usize, delta: usize, c: usize, q: u32) -> Self {
        QuantumParams { n, kappa, delta, c, q, pure: true, delta_source: DeltaSource::Structural }
    }

    pub fn tuple(&self) -> (usize, usize, usize, usize) {
        (self.n, self.kappa, self.delta, self.c)
    }
}

impl fmt::Display for QuantumParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{};{}]]_{}", self.n, self.kappa, self.delta, self.c, self.q)
    }
}

/// What the entanglement-assisted construction needs from a classical
/// [n, k]_{q^2} code: its hull dimension and, optionally, the minimum
/// weight of C^{perp_H} outside the hull. Without it the code is assumed
/// MDS and the weight taken as k + 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalIngredient {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub hull_dim: usize,
}

/// c = k - hull_dim, kappa = n - 2k + c, delta = k + 1.
pub fn eaqecc_from_code(ing: &ClassicalIngredient) -> Result<QuantumParams> {
    eaqecc_with_delta(ing, ing.k + 1, DeltaSource::Structural, true)
}

/// As [`eaqecc_from_code`] with an explicitly known delta.
pub fn eaqecc_with_delta(
    ing: &ClassicalIngredient,
    delta: usize,
    source: DeltaSource,
    pure: bool,
) -> Result<QuantumParams> {
    if ing.hull_dim > ing.k || ing.hull_dim > ing.n.saturating_sub(ing.k) || ing.k > ing.n {
        return Err(Error::Parameter(format!(
            "hull dimension {} impossible for an [{}, {}] code",
            ing.hull_dim, ing.n, ing.k
        )));
    }
    let c = ing.k - ing.hull_dim;
    let kappa = (ing.n + c)
        .checked_sub(2 * ing.k)
        .ok_or_else(|| Error::Parameter("negative logical dimension".into()))?;
    Ok(QuantumParams { n: ing.n, kappa, delta, c, q: ing.q, pure, delta_source: source })
}

/// [[n, kappa + i, delta; c + i]] for a pure code whose classical code has
/// a hull of dimension `hull_dim` >= i.
pub fn propagate(p: &QuantumParams, i: usize, hull_dim: usize) -> Result<QuantumParams> {
    if p.q <= 2 {
        return Err(Error::Parameter("propagation needs q > 2".into()));
    }
    if i > hull_dim {
        return Err(Error::Parameter(format!("i = {i} exceeds hull dimension {hull_dim}")));
    }
    if !p.pure {
        return Err(Error::Hypothesis("propagation needs a pure code".into()));
    }
    if p.c + i > p.n || p.kappa + i > p.n {
        return Err(Error::Parameter("propagated code exceeds its length".into()));
    }
    Ok(QuantumParams { kappa: p.kappa + i, c: p.c + i, ..*p })
}

/// Slack of each Singleton-like bound (right side minus kappa).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingletonCheck {
    /// kappa <= c + max(0, n - 2 delta + 2).
    pub slack_small: i64,
    /// kappa <= n - delta + 1.
    pub slack_trivial: i64,
    /// kappa <= (n-delta+1)(c+2delta-2-n)/(3delta-3-n), valid when
    /// delta - 1 >= n/2; stored as numerator over positive denominator.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub slack_large: Option<(i64, i64)>,
    pub mds: bool,
}

pub fn singleton_check(p: &QuantumParams) -> SingletonCheck {
    let (n, kappa, delta, c) = (p.n as i64, p.kappa as i64, p.delta as i64, p.c as i64);
    let slack_small = c + (n - 2 * delta + 2).max(0) - kappa;
    let slack_trivial = n - delta + 1 - kappa;
    let slack_large = (2 * (delta - 1) >= n).then(|| {
        let den = 3 * delta - 3 - n;
        ((n - delta + 1) * (c + 2 * delta - 2 - n) - kappa * den, den)
    });
    let mds = if 2 * delta <= n {
        slack_small == 0
    } else {
        slack_large.is_some_and(|(num, _)| num == 0)
    };
    SingletonCheck { slack_small, slack_trivial, slack_large, mds }
}
