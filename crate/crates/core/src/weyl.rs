//! The action of the Levi Weyl group `W_l`.
//!
//! `W_l` is never enumerated. A weight is pushed into the dominant chamber
//! one simple reflection at a time; each reflection through a simple root
//! with negative pairing removes exactly one positive root from the
//! inversion set, so the number of steps is the length of the normalizing
//! element and its parity is the sign `(-1)^{l(w)}`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ratvec::{Rational, Weight};
use crate::rootdata::ParabolicRootDatum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(steps: usize) -> Self {
        if steps.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i64 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChamberStatus {
    Singular,
    Regular,
}

/// Result of normalizing a weight under `W_l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChamberForm {
    /// Orthogonal to some root of `Phi_l`; the alternating sum vanishes.
    Singular { steps: usize },
    /// `rep = w mu` is strictly dominant on `Delta_l`, with `l(w) = steps`.
    Regular {
        rep: Weight,
        parity: Parity,
        steps: usize,
    },
}

impl ChamberForm {
    pub fn status(&self) -> ChamberStatus {
        match self {
            ChamberForm::Singular { .. } => ChamberStatus::Singular,
            ChamberForm::Regular { .. } => ChamberStatus::Regular,
        }
    }

    pub fn is_regular(&self) -> bool {
        matches!(self, ChamberForm::Regular { .. })
    }

    pub fn rep(&self) -> Option<&Weight> {
        match self {
            ChamberForm::Regular { rep, .. } => Some(rep),
            ChamberForm::Singular { .. } => None,
        }
    }

    pub fn parity(&self) -> Option<Parity> {
        match self {
            ChamberForm::Regular { parity, .. } => Some(*parity),
            ChamberForm::Singular { .. } => None,
        }
    }

    pub fn steps(&self) -> usize {
        match self {
            ChamberForm::Regular { steps, .. } | ChamberForm::Singular { steps } => *steps,
        }
    }
}

fn check_dim(datum: &ParabolicRootDatum, mu: &Weight) -> Result<()> {
    if mu.dim() != datum.ambient_dim() {
        return Err(Error::Dimension {
            left: mu.dim(),
            right: datum.ambient_dim(),
        });
    }
    Ok(())
}

/// True when `mu` is orthogonal to some root of `Phi_l`.
pub fn is_levi_singular(datum: &ParabolicRootDatum, mu: &Weight) -> Result<bool> {
    check_dim(datum, mu)?;
    Ok(datum.levi_positive().iter().any(|a| mu.dot(a).is_zero()))
}

/// Normalizes `mu` into the dominant `W_l`-chamber, tracking the length
/// parity. Singular weights are caught by an eager scan of `Phi_l^+` before
/// any reflection is applied.
pub fn normalize(datum: &ParabolicRootDatum, mu: &Weight) -> Result<ChamberForm> {
    if is_levi_singular(datum, mu)? {
        return Ok(ChamberForm::Singular { steps: 0 });
    }
    let form = normalize_lazy(datum, mu)?;
    if !form.is_regular() {
        return Err(Error::Invariant(format!(
            "{mu} passed the Phi_l scan but hit a wall while normalizing"
        )));
    }
    Ok(form)
}

/// Normalization without the eager scan: singularity is only detected when a
/// zero pairing with a simple Levi root turns up on the way to the dominant
/// chamber. Always agrees with [`normalize`] on the status.
pub fn normalize_lazy(datum: &ParabolicRootDatum, mu: &Weight) -> Result<ChamberForm> {
    check_dim(datum, mu)?;
    let coroots = datum.levi_simple_coroots();
    let simples = datum.levi_simples();
    let bound = datum.levi_positive().len();
    let mut cur = mu.clone();
    let mut steps = 0usize;
    loop {
        let mut pick: Option<(usize, Rational)> = None;
        for (i, cor) in coroots.iter().enumerate() {
            let p = cur.dot(cor);
            if p.is_zero() {
                return Ok(ChamberForm::Singular { steps });
            }
            if pick.is_none() && p.is_negative() {
                pick = Some((i, p));
            }
        }
        match pick {
            None => {
                return Ok(ChamberForm::Regular {
                    rep: cur,
                    parity: Parity::of(steps),
                    steps,
                })
            }
            Some((i, p)) => {
                cur = cur.sub_scaled(&p, &simples[i]);
                steps += 1;
                if steps > bound {
                    return Err(Error::Invariant(format!(
                        "normalizing {mu} took more than |Phi_l^+| = {bound} steps"
                    )));
                }
            }
        }
    }
}

/// True iff `<mu, alpha>` is a nonzero integer for every `alpha` in `Phi_l^+`.
pub fn is_levi_regular_integral(datum: &ParabolicRootDatum, mu: &Weight) -> Result<bool> {
    check_dim(datum, mu)?;
    Ok(datum.levi_positive_coroots().iter().all(|cor| {
        let p = mu.dot(cor);
        p.is_integer() && !p.is_zero()
    }))
}

/// True iff `<mu, alpha>` is an integer for every `alpha` in `Phi_l^+`.
pub fn is_levi_integral(datum: &ParabolicRootDatum, mu: &Weight) -> Result<bool> {
    check_dim(datum, mu)?;
    Ok(datum
        .levi_positive_coroots()
        .iter()
        .all(|cor| mu.dot(cor).is_integer()))
}

/// `(mu, theta_u)`; constant on `W_l`-orbits.
pub fn theta_pairing(datum: &ParabolicRootDatum, mu: &Weight) -> Result<Rational> {
    check_dim(datum, mu)?;
    Ok(mu.dot(datum.theta_u()))
}

/// Applies the word `s_{word[0]} s_{word[1]} ...` (indices into `Delta_l`) to
/// `mu`, rightmost letter first.
pub fn apply_word(datum: &ParabolicRootDatum, mu: &Weight, word: &[usize]) -> Result<Weight> {
    check_dim(datum, mu)?;
    let simples = datum.levi_simples();
    let mut cur = mu.clone();
    for &i in word.iter().rev() {
        let alpha = simples.get(i).ok_or_else(|| {
            Error::Parameter(format!("letter {i} out of range for |Delta_l| = {}", simples.len()))
        })?;
        cur = cur.reflect(alpha)?;
    }
    Ok(cur)
}
