//! Regeneration of the E6/E7 reflection tables.
//!
//! Tables 1 and 2 list the `e1..e5` coefficients of `s_beta(lambda + rho)` for
//! the EIII roots in `S_lambda` at `z = 9` and `z = 10`. Table 3 lists the
//! `e6, e7, e8` coefficients and the `theta_7` pairing for the sixteen EVII
//! roots `alpha_+(v)`, and Table 4 their `e1..e5` coefficients.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ratvec::{Rational, Weight};
use crate::rootdata::{build_datum, scalar_parameter_weight, sign_pattern_root, HermitianCase, SignPattern};
use crate::weyl;

/// Row order of Tables 1 and 2; `+----` is never in `S_lambda` at those
/// parameters and is listed last.
pub const EIII_ROWS: [&str; 16] = [
    "+++++", "--+++", "-+-++", "-++-+", "-+++-", "+--++", "+-+-+", "+-++-", "++--+", "++-+-", "+++--",
    "----+", "---+-", "--+--", "-+---", "+----",
];

/// Row order of Table 3. Table 4 uses the same order without `-----`.
pub const EVII_ROWS: [&str; 16] = [
    "-++++", "+-+++", "++-++", "+++-+", "++++-", "---++", "--+-+", "--++-", "-+--+", "-+-+-", "-++--",
    "+---+", "+--+-", "+-+--", "++---", "-----",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub label: String,
    pub beta: Weight,
    pub values: Vec<Rational>,
    pub in_s_lambda: bool,
    /// `s_beta(lambda + rho)` is regular for the whole Levi root system.
    pub levi_regular: bool,
    /// No root `e_j +- e_i` with `1 <= i < j <= 5` is orthogonal to the image.
    pub d5_regular: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub id: u8,
    pub case: HermitianCase,
    pub c: Rational,
    pub z: Rational,
    pub columns: Vec<&'static str>,
    pub rows: Vec<TableRow>,
}

impl Table {
    pub fn row(&self, label: &str) -> Option<&TableRow> {
        self.rows.iter().find(|r| r.label == label)
    }
}

/// Default `a` for Tables 3 and 4.
pub fn default_a(id: u8) -> Option<Rational> {
    match id {
        3 => Some(Rational::from_int(-5)),
        4 => Some(Rational::from_int(-7)),
        _ => None,
    }
}

fn d5_regular(image: &Weight) -> bool {
    let x = &image.coords()[..5];
    (0..5).all(|i| (i + 1..5).all(|j| x[i].abs() != x[j].abs()))
}

/// Builds table `id` (1 to 4). Tables 3 and 4 are evaluated at `a`, or at
/// [`default_a`] when `a` is `None`; Tables 1 and 2 have a fixed parameter.
pub fn table(id: u8, a: Option<Rational>) -> Result<Table> {
    let (case, c, labels, sixth_positive, columns): (_, _, &[&str], _, Vec<&'static str>) = match id {
        1 | 2 => {
            if a.is_some() {
                return Err(Error::Parameter(format!("table {id} has a fixed parameter")));
            }
            let c = Rational::from_int(if id == 1 { -2 } else { -1 });
            (HermitianCase::EIII, c, &EIII_ROWS[..], false, vec!["e1", "e2", "e3", "e4", "e5"])
        }
        3 => (
            HermitianCase::EVII,
            a.or_else(|| default_a(3)).unwrap(),
            &EVII_ROWS[..],
            true,
            vec!["e6", "e7", "e8", "theta7"],
        ),
        4 => (
            HermitianCase::EVII,
            a.or_else(|| default_a(4)).unwrap(),
            &EVII_ROWS[..15],
            true,
            vec!["e1", "e2", "e3", "e4", "e5"],
        ),
        _ => return Err(Error::Parameter(format!("no table {id}; expected 1, 2, 3 or 4"))),
    };
    let datum = build_datum(case)?;
    let lambda = scalar_parameter_weight(&datum, &c);
    let lr = &lambda + datum.rho();
    let z = crate::ehw::z_of_c(&datum, &c);

    let mut rows = Vec::new();
    for label in labels {
        let pattern: SignPattern = label.parse()?;
        let beta = sign_pattern_root(pattern, sixth_positive);
        let pairing = lr.pairing(&beta)?;
        let in_s_lambda = pairing.is_positive_integer();
        if id <= 2 && !in_s_lambda {
            continue;
        }
        let image = lr.sub_scaled(&pairing, &beta);
        let mut values: Vec<Rational> = match id {
            3 => image.coords()[5..8].to_vec(),
            _ => image.coords()[..5].to_vec(),
        };
        if id == 3 {
            values.push(weyl::theta_pairing(&datum, &image)?);
        }
        rows.push(TableRow {
            label: label.to_string(),
            levi_regular: !weyl::is_levi_singular(&datum, &image)?,
            d5_regular: d5_regular(&image),
            beta,
            values,
            in_s_lambda,
        });
    }
    Ok(Table {
        id,
        case,
        c,
        z,
        columns,
        rows,
    })
}
