//! Sweeps of the scalar line `c zeta` comparing the Jantzen oracle with the
//! closed-form set and the EHW predicate.

use rayon::prelude::*;
use serde::Serialize;

use crate::ehw::{self, Thm26};
use crate::error::{Error, Result};
use crate::jantzen::{classify_scalar, Route, Verdict};
use crate::ratvec::Rational;
use crate::rootdata::ParabolicRootDatum;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub c: Rational,
    pub z: Rational,
    pub verdict: Verdict,
    pub route: Route,
    pub thm26: Thm26,
    pub thm11_member: bool,
    /// Oracle and closed-form set agree.
    pub agree: bool,
}

impl ScanRow {
    pub fn thm26_consistent(&self) -> bool {
        self.thm26.consistent_with(self.verdict)
    }
}

/// Window in `c` whose `z`-range is `[A - 5, B + 10]`, with both ends rounded
/// outwards to the `1/6` lattice.
pub fn default_window(datum: &ParabolicRootDatum) -> Result<(Rational, Rational)> {
    let abc = ehw::abc_constants(datum.case())?;
    let lo = ehw::c_of_z(datum, &(&abc.a - &Rational::from_int(5)));
    let hi = ehw::c_of_z(datum, &(&abc.b + &Rational::from_int(10)));
    let six = Rational::from_int(6);
    let lo = (&lo * &six).floor() / &six;
    let hi = -((-(&hi * &six)).floor()) / &six;
    Ok((lo, hi))
}

pub fn default_step() -> Rational {
    Rational::new(1, 6)
}

/// `lo, lo + step, ...` up to and including `hi` when it is on the lattice.
pub fn lattice(lo: &Rational, hi: &Rational, step: &Rational) -> Result<Vec<Rational>> {
    if !step.is_positive() {
        return Err(Error::Parameter(format!("scan step must be positive, got {step}")));
    }
    if lo > hi {
        return Err(Error::Parameter(format!("empty window {lo}..{hi}")));
    }
    let mut out = Vec::new();
    let mut c = lo.clone();
    while &c <= hi {
        out.push(c.clone());
        c += step;
    }
    Ok(out)
}

pub fn scan_point(datum: &ParabolicRootDatum, c: &Rational) -> Result<ScanRow> {
    let case = datum.case();
    let abc = ehw::abc_constants(case)?;
    let v = classify_scalar(datum, c)?;
    let z = ehw::z_of_c(datum, c);
    let thm11_member = ehw::theorem1_member(case, c)?;
    Ok(ScanRow {
        thm26: ehw::thm26_predicate(&abc, &z),
        agree: v.is_reducible() == thm11_member,
        c: c.clone(),
        z,
        verdict: v.verdict,
        route: v.route,
        thm11_member,
    })
}

/// Classifies every point of `points`. With `threads > 1` the work is spread
/// over a dedicated pool; rows are returned sorted by `c` either way.
pub fn scan(datum: &ParabolicRootDatum, points: &[Rational], threads: usize) -> Result<Vec<ScanRow>> {
    let mut rows = if threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::Parameter(format!("cannot start thread pool: {e}")))?;
        pool.install(|| {
            points
                .par_iter()
                .map(|c| scan_point(datum, c))
                .collect::<Result<Vec<_>>>()
        })?
    } else {
        points.iter().map(|c| scan_point(datum, c)).collect::<Result<Vec<_>>>()?
    };
    rows.sort_by(|a, b| a.c.cmp(&b.c));
    Ok(rows)
}
