//! Special-line coordinates, the Enright-Howe-Wallach constants and the
//! closed-form reducibility sets.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::jantzen::Verdict;
use crate::ratvec::{Rational, Weight};
use crate::rootdata::{HermitianCase, ParabolicRootDatum};

/// `lambda = lambda0 + z zeta` with `(lambda0 + rho, gamma) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialLine {
    pub lambda0: Weight,
    pub z: Rational,
}

impl SpecialLine {
    pub fn reconstruct(&self, datum: &ParabolicRootDatum) -> Weight {
        &self.lambda0 + &datum.zeta().scale(&self.z)
    }
}

pub fn special_line(datum: &ParabolicRootDatum, lambda: &Weight) -> Result<SpecialLine> {
    let z = (lambda + datum.rho()).pairing(datum.highest_root())?;
    let lambda0 = lambda - &datum.zeta().scale(&z);
    Ok(SpecialLine { lambda0, z })
}

/// `z` for the scalar parameter `c zeta`. Since `<zeta, gamma> = 1` this is
/// `c + <rho, gamma>`.
pub fn z_of_c(datum: &ParabolicRootDatum, c: &Rational) -> Rational {
    c + &rho_gamma(datum)
}

pub fn c_of_z(datum: &ParabolicRootDatum, z: &Rational) -> Rational {
    z - &rho_gamma(datum)
}

fn rho_gamma(datum: &ParabolicRootDatum) -> Rational {
    datum
        .rho()
        .pairing(datum.highest_root())
        .expect("gamma is a nonzero root of the datum")
}

/// The per-case coordinate `a` in which the scalar parameter is usually
/// written, as a function of `z`.
pub fn a_of_z(case: HermitianCase, z: &Rational) -> Rational {
    let r = |n: usize| Rational::from_int(n as i64);
    match case {
        HermitianCase::AIII { p, q } => z - &r(p + q) + Rational::one(),
        HermitianCase::CI { n } => z - &r(n),
        HermitianCase::BI { n } => z - &r(2 * n) + Rational::from_int(2),
        HermitianCase::DI { n } => z - &r(2 * n) + Rational::from_int(3),
        HermitianCase::DIII { n } => (z - &r(2 * n) + Rational::from_int(3)) / Rational::from_int(2),
        HermitianCase::EIII => (Rational::from_int(2) * z - Rational::from_int(22)) / Rational::from_int(3),
        HermitianCase::EVII => z - &Rational::from_int(17),
    }
}

/// `a / c` for each case: `lambda = c zeta` is written as `a` times a fixed
/// integral vector.
pub fn a_per_c(case: HermitianCase) -> Rational {
    match case {
        HermitianCase::DIII { .. } => Rational::new(1, 2),
        HermitianCase::EIII => Rational::new(2, 3),
        _ => Rational::one(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ABCConstants {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl ABCConstants {
    /// Number of lattice steps `(B - A) / C`. `None` when `C = 0`.
    pub fn steps(&self) -> Option<Rational> {
        (&self.b - &self.a).checked_div(&self.c)
    }

    /// The points `A + iC` with `0 <= i <= (B - A) / C`.
    pub fn lattice_points(&self) -> Vec<Rational> {
        match self.steps() {
            None => vec![self.a.clone()],
            Some(k) => {
                let k = k.to_i64().unwrap_or(0).max(0);
                (0..=k).map(|i| &self.a + &(Rational::from_int(i) * &self.c)).collect()
            }
        }
    }

    /// `C > 0`, `A <= B`, `(B - A) / C` a nonnegative integer. The degenerate
    /// line with `C = 0` is accepted only when `A = B`.
    pub fn check(&self) -> Result<()> {
        if self.a > self.b {
            return Err(Error::Invariant(format!("A = {} exceeds B = {}", self.a, self.b)));
        }
        if self.c.is_zero() {
            return if self.a == self.b {
                Ok(())
            } else {
                Err(Error::Invariant("C = 0 with A != B".into()))
            };
        }
        if self.c.is_negative() {
            return Err(Error::Invariant(format!("C = {} is negative", self.c)));
        }
        match self.steps() {
            Some(k) if k.is_nonnegative_integer() => Ok(()),
            _ => Err(Error::Invariant(format!(
                "(B - A) / C = ({} - {}) / {} is not a nonnegative integer",
                self.b, self.a, self.c
            ))),
        }
    }
}

pub fn abc_constants(case: HermitianCase) -> Result<ABCConstants> {
    case.validate()?;
    let r = |n: i64| Rational::from_int(n);
    let h = Rational::new(1, 2);
    let (a, b, c) = match case {
        HermitianCase::AIII { p, q } => (r(p.max(q) as i64), r((p + q) as i64 - 1), r(1)),
        HermitianCase::CI { n } => {
            let n = n as i64;
            (Rational::new(n + 1, 2), r(n), h)
        }
        HermitianCase::BI { n } => {
            let n = n as i64;
            (r(n) - &h, r(2 * n - 2), r(n - 1) - &h)
        }
        HermitianCase::DI { n } => {
            let n = n as i64;
            (r(n - 1), r(2 * n - 3), r(n - 2))
        }
        HermitianCase::DIII { n } => {
            let n = n as i64;
            let a = if n % 2 == 0 { n - 1 } else { n };
            (r(a), r(2 * n - 3), r(2))
        }
        HermitianCase::EIII => (r(8), r(11), r(3)),
        HermitianCase::EVII => (r(9), r(17), r(4)),
    };
    Ok(ABCConstants { a, b, c })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Thm26 {
    KnownSimple,
    KnownReducible,
    Indeterminate,
}

impl Thm26 {
    pub fn name(self) -> &'static str {
        match self {
            Thm26::KnownSimple => "KnownSimple",
            Thm26::KnownReducible => "KnownReducible",
            Thm26::Indeterminate => "Indeterminate",
        }
    }

    /// False if the prediction is contradicted by `verdict`.
    pub fn consistent_with(self, verdict: Verdict) -> bool {
        !matches!(
            (self, verdict),
            (Thm26::KnownSimple, Verdict::Reducible) | (Thm26::KnownReducible, Verdict::Simple)
        )
    }
}

pub fn thm26_predicate(constants: &ABCConstants, z: &Rational) -> Thm26 {
    if z < &constants.a {
        return Thm26::KnownSimple;
    }
    if constants.c.is_zero() {
        return if z == &constants.a && z == &constants.b {
            Thm26::KnownReducible
        } else {
            Thm26::Indeterminate
        };
    }
    let i = (z - &constants.a) / &constants.c;
    match constants.steps() {
        Some(k) if i.is_nonnegative_integer() && i <= k => Thm26::KnownReducible,
        _ => Thm26::Indeterminate,
    }
}

/// `start + step * Z_{>=0}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Progression {
    pub start: Rational,
    pub step: Rational,
}

impl Progression {
    pub fn new(start: Rational, step: Rational) -> Self {
        assert!(step.is_positive(), "progression step must be positive");
        Progression { start, step }
    }

    pub fn contains(&self, c: &Rational) -> bool {
        ((c - &self.start) / &self.step).is_nonnegative_integer()
    }
}

/// A finite union of progressions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducibilitySet {
    pub parts: Vec<Progression>,
}

impl ReducibilitySet {
    pub fn contains(&self, c: &Rational) -> bool {
        self.parts.iter().any(|p| p.contains(c))
    }
}

/// The set of `c` for which the scalar module with parameter `c zeta` is
/// reducible.
pub fn theorem1_set(case: HermitianCase) -> Result<ReducibilitySet> {
    case.validate()?;
    let r = |n: i64| Rational::from_int(n);
    let one = Rational::one();
    let parts = match case {
        HermitianCase::AIII { p, q } => vec![Progression::new(r(1 - p.min(q) as i64), one)],
        HermitianCase::CI { n } => vec![Progression::new(Rational::new(1 - n as i64, 2), Rational::new(1, 2))],
        HermitianCase::BI { n } => vec![
            Progression::new(r(0), one.clone()),
            Progression::new(Rational::new(3 - 2 * n as i64, 2), one),
        ],
        HermitianCase::DI { n } => vec![Progression::new(r(2 - n as i64), one)],
        HermitianCase::DIII { n } => {
            let floor = Rational::new(3 - n as i64, 2).floor();
            vec![Progression::new(r(2) * floor, one)]
        }
        HermitianCase::EIII => vec![Progression::new(r(-3), one)],
        HermitianCase::EVII => vec![Progression::new(r(-8), one)],
    };
    Ok(ReducibilitySet { parts })
}

pub fn theorem1_member(case: HermitianCase, c: &Rational) -> Result<bool> {
    Ok(theorem1_set(case)?.contains(c))
}

/// The DIII set written in `a = c / 2`, split by the parity of `n`.
pub fn diii_parity_split_member(n: usize, c: &Rational) -> bool {
    let a = c / &Rational::from_int(2);
    let n = n as i64;
    let start = if n % 2 == 0 {
        Rational::from_int(1) - Rational::new(n, 2)
    } else {
        Rational::new(3 - n, 2)
    };
    Progression::new(start, Rational::new(1, 2)).contains(&a)
}

/// Reducible parameters found in a window, split into a finite exceptional
/// set and an arithmetic tail running to the top of the window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProgressionSummary {
    pub finite_part: Vec<Rational>,
    pub tail_start: Rational,
    pub tail_step: Rational,
    pub window_max: Rational,
}

impl ProgressionSummary {
    pub fn contains(&self, c: &Rational) -> bool {
        self.finite_part.contains(c)
            || (c <= &self.window_max && Progression::new(self.tail_start.clone(), self.tail_step.clone()).contains(c))
    }
}

/// Summarises a scan `(c, verdict)` whose window extends past `B` in
/// `z`-coordinates.
pub fn progression_summary(
    datum: &ParabolicRootDatum,
    scan: &[(Rational, Verdict)],
) -> Result<ProgressionSummary> {
    let abc = abc_constants(datum.case())?;
    let window_max = scan
        .iter()
        .map(|(c, _)| c)
        .max()
        .cloned()
        .ok_or_else(|| Error::InsufficientWindow("empty scan".into()))?;
    if z_of_c(datum, &window_max) <= abc.b {
        return Err(Error::InsufficientWindow(format!(
            "window ends at z = {}, which does not pass B = {}",
            z_of_c(datum, &window_max),
            abc.b
        )));
    }
    let mut reducible: Vec<Rational> = scan
        .iter()
        .filter(|(_, v)| *v == Verdict::Reducible)
        .map(|(c, _)| c.clone())
        .collect();
    reducible.sort();
    reducible.dedup();
    if reducible.len() < 3 {
        return Err(Error::InsufficientWindow(format!(
            "only {} reducible points in the window",
            reducible.len()
        )));
    }
    let last = reducible.len() - 1;
    let step = &reducible[last] - &reducible[last - 1];
    let mut t = last;
    while t > 0 && &reducible[t] - &reducible[t - 1] == step {
        t -= 1;
    }
    let tail_start = reducible[t].clone();
    // The tail must have no holes among the scanned points.
    let tail = Progression::new(tail_start.clone(), step.clone());
    for (c, v) in scan {
        if c >= &tail_start && tail.contains(c) && *v != Verdict::Reducible {
            return Err(Error::InsufficientWindow(format!(
                "reducible set has a hole at c = {c} inside its tail"
            )));
        }
    }
    Ok(ProgressionSummary {
        finite_part: reducible[..t].to_vec(),
        tail_start,
        tail_step: step,
        window_max,
    })
}
