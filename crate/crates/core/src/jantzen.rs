//! Jantzen's simplicity criterion for scalar generalized Verma modules.
//!
//! The module with parameter `lambda` is simple iff
//! `sum_{beta in S_lambda} Y(s_beta(lambda + rho)) = 0`. Each summand is
//! evaluated in the signed chamber calculus: a `Phi_l`-singular weight
//! contributes nothing, and a regular one contributes `(-1)^{l(w)}` times the
//! symbol of its dominant representative. Symbols of distinct dominant
//! regular weights are linearly independent, so the sum vanishes iff every
//! representative collects a net sign of zero.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ratvec::{Rational, Weight};
use crate::rootdata::{scalar_parameter_weight, ParabolicRootDatum};
use crate::weyl::{self, ChamberForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    Simple,
    Reducible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Route {
    /// `S_lambda` is empty.
    #[serde(rename = "EmptySλ")]
    EmptySLambda,
    /// Every representative class cancels.
    SumCancels,
    /// Some representative class has a nonzero net sign.
    SumSurvives,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::EmptySLambda => "EmptySλ",
            Route::SumCancels => "SumCancels",
            Route::SumSurvives => "SumSurvives",
        }
    }
}

/// One summand `Y(s_beta(lambda + rho))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JantzenTerm {
    pub beta: Weight,
    /// `<lambda + rho, beta>`, a positive integer.
    pub pairing: Rational,
    /// `s_beta(lambda + rho)`.
    pub image: Weight,
    pub chamber: ChamberForm,
}

/// Regular summands sharing a dominant representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepClass {
    pub rep: Weight,
    pub net_sign: i64,
    /// Indices into [`SimplicityVerdict::terms`].
    pub members: Vec<usize>,
    /// Common value of `(image, theta_u)` over the class.
    pub theta: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicityVerdict {
    pub verdict: Verdict,
    pub route: Route,
    /// All of `S_lambda`, in datum order, with their chamber forms.
    pub terms: Vec<JantzenTerm>,
    /// Classes of regular terms, in order of first appearance.
    pub classes: Vec<RepClass>,
    /// First root whose class survives, when reducible.
    pub witness: Option<Weight>,
}

impl SimplicityVerdict {
    pub fn is_reducible(&self) -> bool {
        self.verdict == Verdict::Reducible
    }

    pub fn surviving_classes(&self) -> impl Iterator<Item = &RepClass> {
        self.classes.iter().filter(|c| c.net_sign != 0)
    }

    pub fn s_lambda(&self) -> impl Iterator<Item = &Weight> {
        self.terms.iter().map(|t| &t.beta)
    }

    /// True if `beta` is a regular term whose class has nonzero net sign.
    pub fn survives(&self, beta: &Weight) -> bool {
        self.surviving_classes()
            .any(|c| c.members.iter().any(|&i| &self.terms[i].beta == beta))
    }
}

/// Checks that `lambda` is orthogonal to every Levi root.
pub fn ensure_scalar(datum: &ParabolicRootDatum, lambda: &Weight) -> Result<()> {
    if lambda.dim() != datum.ambient_dim() {
        return Err(Error::Dimension {
            left: lambda.dim(),
            right: datum.ambient_dim(),
        });
    }
    for a in datum.levi_simples() {
        let v = lambda.inner(a)?;
        if !v.is_zero() {
            return Err(Error::NotScalar {
                root: a.to_string(),
                value: v.to_string(),
            });
        }
    }
    Ok(())
}

fn s_lambda_pairs(datum: &ParabolicRootDatum, lambda: &Weight) -> Result<Vec<(Weight, Rational)>> {
    let lr = lambda + datum.rho();
    let mut out = Vec::new();
    for beta in datum.nilradical_roots() {
        let p = lr.pairing(beta)?;
        if p.is_positive_integer() {
            out.push((beta.clone(), p));
        }
    }
    Ok(out)
}

/// `S_lambda = { beta in Phi_u^+ : <lambda + rho, beta> in Z_{>0} }`, in datum
/// order.
pub fn s_lambda(datum: &ParabolicRootDatum, lambda: &Weight) -> Result<Vec<Weight>> {
    Ok(s_lambda_pairs(datum, lambda)?.into_iter().map(|(b, _)| b).collect())
}

/// The sufficient condition for simplicity: `S_lambda` is empty.
pub fn quick_simple(datum: &ParabolicRootDatum, lambda: &Weight) -> Result<bool> {
    let lr = lambda + datum.rho();
    for beta in datum.nilradical_roots() {
        if lr.pairing(beta)?.is_positive_integer() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Evaluates the Jantzen sum for the scalar parameter `lambda`.
pub fn oracle(datum: &ParabolicRootDatum, lambda: &Weight) -> Result<SimplicityVerdict> {
    ensure_scalar(datum, lambda)?;
    let lr = lambda + datum.rho();
    let mut terms = Vec::new();
    for (beta, p) in s_lambda_pairs(datum, lambda)? {
        let image = lr.sub_scaled(&p, &beta);
        if !weyl::is_levi_integral(datum, &image)? {
            return Err(Error::Invariant(format!(
                "s_beta(lambda + rho) = {image} is not Phi_l-integral for beta = {beta}"
            )));
        }
        let chamber = weyl::normalize(datum, &image)?;
        terms.push(JantzenTerm {
            beta,
            pairing: p,
            image,
            chamber,
        });
    }

    let mut classes: Vec<RepClass> = Vec::new();
    for (idx, term) in terms.iter().enumerate() {
        let ChamberForm::Regular { rep, parity, .. } = &term.chamber else {
            continue;
        };
        let theta = weyl::theta_pairing(datum, &term.image)?;
        match classes.iter_mut().find(|c| &c.rep == rep) {
            Some(class) => {
                if class.theta != theta {
                    return Err(Error::Invariant(format!(
                        "terms with representative {rep} have different theta pairings"
                    )));
                }
                class.net_sign += parity.sign();
                class.members.push(idx);
            }
            None => classes.push(RepClass {
                rep: rep.clone(),
                net_sign: parity.sign(),
                members: vec![idx],
                theta,
            }),
        }
    }

    let witness = classes
        .iter()
        .find(|c| c.net_sign != 0)
        .map(|c| terms[c.members[0]].beta.clone());
    let (verdict, route) = if terms.is_empty() {
        (Verdict::Simple, Route::EmptySLambda)
    } else if witness.is_some() {
        (Verdict::Reducible, Route::SumSurvives)
    } else {
        (Verdict::Simple, Route::SumCancels)
    };
    Ok(SimplicityVerdict {
        verdict,
        route,
        terms,
        classes,
        witness,
    })
}

/// Verdict for the scalar parameter `lambda = c zeta`.
pub fn classify_scalar(datum: &ParabolicRootDatum, c: &Rational) -> Result<SimplicityVerdict> {
    let lambda = scalar_parameter_weight(datum, c);
    let quick = quick_simple(datum, &lambda)?;
    let verdict = oracle(datum, &lambda)?;
    if quick && (verdict.verdict != Verdict::Simple || verdict.route != Route::EmptySLambda) {
        return Err(Error::Invariant(format!(
            "S_lambda is empty at c = {c} but the Jantzen sum does not vanish"
        )));
    }
    Ok(verdict)
}
