//! Root combinatorics of the seven Hermitian symmetric cases.
//!
//! Coordinates are hard-coded per case in the standard orthonormal
//! realizations (`R^{p+q}` for type A, `R^n` for types B/C/D, and the
//! subspaces `V6`, `V7` of `R^8` for the exceptional cases) and then checked
//! by [`ParabolicRootDatum::verify`].

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ratvec::{Rational, Weight};

/// The family of a Hermitian symmetric pair, without size parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseFamily {
    AIII,
    CI,
    BI,
    DI,
    DIII,
    EIII,
    EVII,
}

impl CaseFamily {
    pub const ALL: [CaseFamily; 7] = [
        CaseFamily::AIII,
        CaseFamily::CI,
        CaseFamily::BI,
        CaseFamily::DI,
        CaseFamily::DIII,
        CaseFamily::EIII,
        CaseFamily::EVII,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseFamily::AIII => "AIII",
            CaseFamily::CI => "CI",
            CaseFamily::BI => "BI",
            CaseFamily::DI => "DI",
            CaseFamily::DIII => "DIII",
            CaseFamily::EIII => "EIII",
            CaseFamily::EVII => "EVII",
        }
    }
}

impl fmt::Display for CaseFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CaseFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CaseFamily::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parameter(format!("unknown case {s:?}")))
    }
}

/// One of the seven pairs `(g, p)` with `p` a parabolic of abelian type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HermitianCase {
    /// `(SU(p+q), S(U(p) x U(q)))`
    AIII { p: usize, q: usize },
    /// `(Sp(n), U(n))`
    CI { n: usize },
    /// `(SO(2n+1), SO(2) x SO(2n-1))`
    BI { n: usize },
    /// `(SO(2n), SO(2) x SO(2n-2))`
    DI { n: usize },
    /// `(SO(2n), U(n))`
    DIII { n: usize },
    /// `(E6, SO(2) x SO(10))`
    EIII,
    /// `(E7, SO(2) x E6)`
    EVII,
}

impl HermitianCase {
    pub fn family(&self) -> CaseFamily {
        match self {
            HermitianCase::AIII { .. } => CaseFamily::AIII,
            HermitianCase::CI { .. } => CaseFamily::CI,
            HermitianCase::BI { .. } => CaseFamily::BI,
            HermitianCase::DI { .. } => CaseFamily::DI,
            HermitianCase::DIII { .. } => CaseFamily::DIII,
            HermitianCase::EIII => CaseFamily::EIII,
            HermitianCase::EVII => CaseFamily::EVII,
        }
    }

    /// Builds a case from a family tag and whichever size parameters it uses.
    pub fn from_family(
        family: CaseFamily,
        p: Option<usize>,
        q: Option<usize>,
        n: Option<usize>,
    ) -> Result<Self> {
        let need = |v: Option<usize>, name: &str| {
            v.ok_or_else(|| Error::Parameter(format!("{family} requires --{name}")))
        };
        let case = match family {
            CaseFamily::AIII => HermitianCase::AIII {
                p: need(p, "p")?,
                q: need(q, "q")?,
            },
            CaseFamily::CI => HermitianCase::CI { n: need(n, "n")? },
            CaseFamily::BI => HermitianCase::BI { n: need(n, "n")? },
            CaseFamily::DI => HermitianCase::DI { n: need(n, "n")? },
            CaseFamily::DIII => HermitianCase::DIII { n: need(n, "n")? },
            CaseFamily::EIII => HermitianCase::EIII,
            CaseFamily::EVII => HermitianCase::EVII,
        };
        case.validate()?;
        Ok(case)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            HermitianCase::AIII { p, q } if p < 1 || q < 1 => Err(Error::Parameter(format!(
                "AIII needs p >= 1 and q >= 1, got p={p}, q={q}"
            ))),
            HermitianCase::CI { n }
            | HermitianCase::BI { n }
            | HermitianCase::DI { n }
            | HermitianCase::DIII { n }
                if n < 2 =>
            {
                Err(Error::Parameter(format!("{} needs n >= 2, got n={n}", self.family())))
            }
            _ => Ok(()),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        match *self {
            HermitianCase::AIII { p, q } => p + q,
            HermitianCase::CI { n }
            | HermitianCase::BI { n }
            | HermitianCase::DI { n }
            | HermitianCase::DIII { n } => n,
            HermitianCase::EIII | HermitianCase::EVII => 8,
        }
    }
}

impl fmt::Display for HermitianCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            HermitianCase::AIII { p, q } => write!(f, "AIII({p},{q})"),
            HermitianCase::CI { n } => write!(f, "CI({n})"),
            HermitianCase::BI { n } => write!(f, "BI({n})"),
            HermitianCase::DI { n } => write!(f, "DI({n})"),
            HermitianCase::DIII { n } => write!(f, "DIII({n})"),
            HermitianCase::EIII => f.write_str("EIII"),
            HermitianCase::EVII => f.write_str("EVII"),
        }
    }
}

impl Serialize for HermitianCase {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parities `v(1..=5)` of a root `alpha_±(v)`, written as in the tables:
/// `+` for even, `-` for odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignPattern(pub [bool; 5]);

impl SignPattern {
    /// All 32 patterns, `+++++` first.
    pub fn all() -> impl Iterator<Item = SignPattern> {
        (0u8..32).map(|bits| {
            let mut signs = [true; 5];
            for (i, s) in signs.iter_mut().enumerate() {
                *s = bits & (1 << (4 - i)) == 0;
            }
            SignPattern(signs)
        })
    }

    /// Number of odd `v(i)`, i.e. of minus signs.
    pub fn minus_count(&self) -> usize {
        self.0.iter().filter(|s| !**s).count()
    }

    pub fn sign(&self, i: usize) -> i64 {
        if self.0[i] {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            f.write_str(if s { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl FromStr for SignPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.trim().chars().collect();
        if chars.len() != 5 {
            return Err(Error::Parameter(format!("sign pattern {s:?} must have 5 symbols")));
        }
        let mut signs = [true; 5];
        for (slot, c) in signs.iter_mut().zip(chars) {
            *slot = match c {
                '+' => true,
                '-' | '−' => false,
                _ => return Err(Error::Parameter(format!("bad symbol {c:?} in sign pattern {s:?}"))),
            };
        }
        Ok(SignPattern(signs))
    }
}

/// `alpha_±(v) = 1/2 (sum_{i<=5} (-1)^{v(i)} e_i ± e6 - e7 + e8)` in `R^8`.
pub fn sign_pattern_root(pattern: SignPattern, sixth_positive: bool) -> Weight {
    let mut halves = [0i64; 8];
    for (i, slot) in halves.iter_mut().take(5).enumerate() {
        *slot = pattern.sign(i);
    }
    halves[5] = if sixth_positive { 1 } else { -1 };
    halves[6] = -1;
    halves[7] = 1;
    Weight::from_halves(&halves)
}

/// Reads back the pattern of a root `alpha_±(v)`; `None` for any other weight.
pub fn sign_pattern_of(root: &Weight) -> Option<(SignPattern, bool)> {
    if root.dim() != 8 {
        return None;
    }
    let half = Rational::new(1, 2);
    let neg_half = Rational::new(-1, 2);
    let c = root.coords();
    if c[6] != neg_half || c[7] != half {
        return None;
    }
    let mut signs = [true; 5];
    for (i, s) in signs.iter_mut().enumerate() {
        *s = if c[i] == half {
            true
        } else if c[i] == neg_half {
            false
        } else {
            return None;
        };
    }
    let sixth = if c[5] == half {
        true
    } else if c[5] == neg_half {
        false
    } else {
        return None;
    };
    Some((SignPattern(signs), sixth))
}

/// Full root data of one case. Built once by [`build_datum`], immutable after.
#[derive(Debug, Clone)]
pub struct ParabolicRootDatum {
    case: HermitianCase,
    simple_roots: Vec<Weight>,
    levi_simples: Vec<Weight>,
    noncompact_simple: Weight,
    positive_roots: Vec<Weight>,
    levi_positive: Vec<Weight>,
    nilradical_roots: Vec<Weight>,
    rho: Weight,
    highest_root: Weight,
    zeta: Weight,
    theta_u: Weight,
    notes: Vec<&'static str>,
    levi_simple_coroots: Vec<Weight>,
    levi_positive_coroots: Vec<Weight>,
}

impl ParabolicRootDatum {
    pub fn case(&self) -> HermitianCase {
        self.case
    }

    pub fn ambient_dim(&self) -> usize {
        self.rho.dim()
    }

    /// `Delta`, in the order the simple roots are usually numbered.
    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    /// `Delta_l`.
    pub fn levi_simples(&self) -> &[Weight] {
        &self.levi_simples
    }

    /// `alpha_u`, the simple root outside the Levi factor.
    pub fn noncompact_simple(&self) -> &Weight {
        &self.noncompact_simple
    }

    /// `Phi^+`.
    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// `Phi_l^+`.
    pub fn levi_positive(&self) -> &[Weight] {
        &self.levi_positive
    }

    /// `Phi_u^+`.
    pub fn nilradical_roots(&self) -> &[Weight] {
        &self.nilradical_roots
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// The maximal root `gamma`.
    pub fn highest_root(&self) -> &Weight {
        &self.highest_root
    }

    /// The weight orthogonal to `Phi_l` with `<zeta, gamma> = 1`.
    pub fn zeta(&self) -> &Weight {
        &self.zeta
    }

    /// Fundamental weight of `alpha_u`.
    pub fn theta_u(&self) -> &Weight {
        &self.theta_u
    }

    /// Caveats for degenerate parameters (e.g. `so(4)` is not simple).
    pub fn notes(&self) -> &[&'static str] {
        &self.notes
    }

    pub fn is_degenerate(&self) -> bool {
        !self.notes.is_empty()
    }

    pub(crate) fn levi_simple_coroots(&self) -> &[Weight] {
        &self.levi_simple_coroots
    }

    pub(crate) fn levi_positive_coroots(&self) -> &[Weight] {
        &self.levi_positive_coroots
    }

    /// Checks every structural invariant of the datum, returning the first
    /// violation.
    pub fn verify(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Invariant(format!("{}: {msg}", self.case)));
        let dim = self.ambient_dim();
        let all_weights = self
            .positive_roots
            .iter()
            .chain(&self.simple_roots)
            .chain([&self.rho, &self.highest_root, &self.zeta, &self.theta_u]);
        if let Some(w) = all_weights.clone().find(|w| w.dim() != dim) {
            return fail(format!("weight {w} has dimension {} != {dim}", w.dim()));
        }

        // The exceptional cases live in V6 = (e6-e7, e7+e8)^perp and V7 = (e7+e8)^perp.
        let mut constraints = Vec::new();
        match self.case {
            HermitianCase::EIII => {
                constraints.push(Weight::from_ints(&[0, 0, 0, 0, 0, 1, -1, 0]));
                constraints.push(Weight::from_ints(&[0, 0, 0, 0, 0, 0, 1, 1]));
            }
            HermitianCase::EVII => constraints.push(Weight::from_ints(&[0, 0, 0, 0, 0, 0, 1, 1])),
            _ => {}
        }
        for w in all_weights {
            if constraints.iter().any(|v| !w.dot(v).is_zero()) {
                return fail(format!("weight {w} leaves the ambient subspace"));
            }
        }

        // Phi^+ = Phi_l^+ disjoint-union Phi_u^+.
        if self.levi_positive.len() + self.nilradical_roots.len() != self.positive_roots.len() {
            return fail("|Phi_l^+| + |Phi_u^+| != |Phi^+|".into());
        }
        for b in &self.positive_roots {
            let in_l = self.levi_positive.contains(b);
            let in_u = self.nilradical_roots.contains(b);
            if in_l == in_u {
                return fail(format!("root {b} is not in exactly one of Phi_l^+, Phi_u^+"));
            }
        }

        // Closed under simple reflections.
        let negatives: Vec<Weight> = self.positive_roots.iter().map(|b| -b).collect();
        let is_root = |w: &Weight| self.positive_roots.contains(w) || negatives.contains(w);
        for a in &self.simple_roots {
            if !self.positive_roots.contains(a) {
                return fail(format!("simple root {a} is not positive"));
            }
            for b in &self.positive_roots {
                if !is_root(&b.reflect(a)?) {
                    return fail(format!("s_{a}({b}) is not a root"));
                }
            }
        }

        // Cartan integers.
        for a in &self.positive_roots {
            for b in &self.positive_roots {
                let p = a.pairing(b)?;
                if !p.is_integer() || p.abs() > Rational::from_int(3) {
                    return fail(format!("<{a}, {b}> = {p} is not a Cartan integer"));
                }
            }
        }

        // Every positive root descends to a simple root by subtracting simple roots.
        for b in &self.positive_roots {
            let mut cur = b.clone();
            while !self.simple_roots.contains(&cur) {
                let next = self
                    .simple_roots
                    .iter()
                    .map(|a| &cur - a)
                    .find(|w| self.positive_roots.contains(w));
                match next {
                    Some(w) => cur = w,
                    None => return fail(format!("{b} is not a nonnegative combination of Delta")),
                }
            }
        }

        let two_rho = self
            .positive_roots
            .iter()
            .fold(Weight::zero(dim), |acc, b| &acc + b);
        if two_rho != self.rho.scale(&Rational::from_int(2)) {
            return fail(format!("sum of Phi^+ is {two_rho}, not 2 rho"));
        }

        if !self.nilradical_roots.contains(&self.highest_root) {
            return fail("gamma is not in Phi_u^+".into());
        }
        if !self.is_degenerate() {
            // gamma - beta is a nonnegative combination of Delta: climb from beta to gamma.
            for b in &self.positive_roots {
                let mut cur = b.clone();
                while cur != self.highest_root {
                    let next = self
                        .simple_roots
                        .iter()
                        .map(|a| &cur + a)
                        .find(|w| self.positive_roots.contains(w));
                    match next {
                        Some(w) => cur = w,
                        None => return fail(format!("gamma - {b} is not in the positive cone")),
                    }
                }
            }
            if self.levi_simples.len() + 1 != self.simple_roots.len() {
                return fail("more than one noncompact simple root".into());
            }
        }
        if self.levi_simples.contains(&self.noncompact_simple) {
            return fail("alpha_u lies in Delta_l".into());
        }
        for a in &self.levi_simples {
            if !self.simple_roots.contains(a) || !self.levi_positive.contains(a) {
                return fail(format!("{a} in Delta_l is not a simple Levi root"));
            }
        }

        // zeta.
        for a in &self.levi_positive {
            if !self.zeta.dot(a).is_zero() {
                return fail(format!("zeta is not orthogonal to {a}"));
            }
        }
        if self.zeta.pairing(&self.highest_root)? != Rational::one() {
            return fail("<zeta, gamma> != 1".into());
        }
        for b in &self.nilradical_roots {
            if !self.zeta.pairing(b)?.is_positive() {
                return fail(format!("<zeta, {b}> is not positive"));
            }
        }

        // Abelian nilradical.
        for (i, a) in self.nilradical_roots.iter().enumerate() {
            for b in &self.nilradical_roots[i..] {
                if self.positive_roots.contains(&(a + b)) {
                    return fail(format!("{a} + {b} is a root; radical is not abelian"));
                }
            }
        }

        // theta_u.
        if self.theta_u.pairing(&self.noncompact_simple)? != Rational::one() {
            return fail("<theta_u, alpha_u> != 1".into());
        }
        for a in &self.levi_simples {
            if !self.theta_u.dot(a).is_zero() {
                return fail(format!("theta_u is not orthogonal to {a}"));
            }
        }
        Ok(())
    }
}

fn unit(dim: usize, i: usize) -> Weight {
    Weight::unit(dim, i - 1)
}

/// `e_i + sign e_j` (1-based indices).
fn pm(dim: usize, i: usize, sign: i64, j: usize) -> Weight {
    let mut c = vec![0i64; dim];
    c[i - 1] += 1;
    c[j - 1] += sign;
    Weight::from_ints(&c)
}

fn sum_range(dim: usize, range: std::ops::RangeInclusive<usize>, coeff: &Rational) -> Weight {
    let mut c = vec![Rational::zero(); dim];
    for i in range {
        c[i - 1] = coeff.clone();
    }
    Weight::new(c)
}

fn sorted_desc(mut roots: Vec<Weight>) -> Vec<Weight> {
    roots.sort_by(|a, b| b.cmp(a));
    roots
}

/// `{e_i - e_j, e_i + e_j : i < j}`.
fn d_type_roots(dim: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    for i in 1..=dim {
        for j in i + 1..=dim {
            out.push(pm(dim, i, -1, j));
            out.push(pm(dim, i, 1, j));
        }
    }
    out
}

/// Positive roots of `e6` in `R^8`: `e_j ± e_i` (`i < j <= 5`) and
/// `alpha_-(v)` with an even number of minus signs.
fn e6_positive_roots() -> Vec<Weight> {
    let mut out = Vec::new();
    for j in 1..=5 {
        for i in 1..j {
            out.push(pm(8, j, 1, i));
            out.push(pm(8, j, -1, i));
        }
    }
    out.extend(
        SignPattern::all()
            .filter(|p| p.minus_count() % 2 == 0)
            .map(|p| sign_pattern_root(p, false)),
    );
    out
}

fn e6_simple_roots() -> Vec<Weight> {
    let mut simple = vec![
        Weight::from_halves(&[1, -1, -1, -1, -1, -1, -1, 1]),
        pm(8, 1, 1, 2),
    ];
    for i in 3..=6 {
        simple.push(pm(8, i - 1, -1, i - 2));
    }
    simple
}

/// Builds the root datum of `case`.
pub fn build_datum(case: HermitianCase) -> Result<ParabolicRootDatum> {
    case.validate()?;
    let half = Rational::new(1, 2);
    let mut notes = Vec::new();

    let (simple_roots, noncompact_simple, positive_roots, nilradical_roots, rho, highest_root, zeta);
    match case {
        HermitianCase::AIII { p, q } => {
            let n = p + q;
            simple_roots = (1..n).map(|i| pm(n, i, -1, i + 1)).collect::<Vec<_>>();
            noncompact_simple = pm(n, p, -1, p + 1);
            positive_roots = (1..=n)
                .flat_map(|i| (i + 1..=n).map(move |j| pm(n, i, -1, j)))
                .collect::<Vec<_>>();
            nilradical_roots = (1..=p)
                .flat_map(|i| (p + 1..=n).map(move |j| pm(n, i, -1, j)))
                .collect::<Vec<_>>();
            let top = Rational::new(n as i64 + 1, 2);
            rho = Weight::new(
                (1..=n)
                    .map(|i| &top - &Rational::from_int(i as i64))
                    .collect(),
            );
            highest_root = pm(n, 1, -1, n);
            zeta = &sum_range(n, 1..=p, &Rational::new(q as i64, n as i64))
                - &sum_range(n, p + 1..=n, &Rational::new(p as i64, n as i64));
        }
        HermitianCase::CI { n } => {
            let mut simple: Vec<Weight> = (1..n).map(|i| pm(n, i, -1, i + 1)).collect();
            noncompact_simple = unit(n, n).scale(&Rational::from_int(2));
            simple.push(noncompact_simple.clone());
            simple_roots = simple;
            let mut nil: Vec<Weight> = (1..=n)
                .flat_map(|i| (i + 1..=n).map(move |j| pm(n, i, 1, j)))
                .collect();
            nil.extend((1..=n).map(|k| unit(n, k).scale(&Rational::from_int(2))));
            let mut pos: Vec<Weight> = (1..=n)
                .flat_map(|i| (i + 1..=n).map(move |j| pm(n, i, -1, j)))
                .collect();
            pos.extend(nil.iter().cloned());
            positive_roots = pos;
            nilradical_roots = nil;
            rho = Weight::from_ints(&(1..=n).map(|i| (n - i + 1) as i64).collect::<Vec<_>>());
            highest_root = unit(n, 1).scale(&Rational::from_int(2));
            zeta = sum_range(n, 1..=n, &Rational::one());
        }
        HermitianCase::BI { n } => {
            let mut simple: Vec<Weight> = (1..n).map(|i| pm(n, i, -1, i + 1)).collect();
            simple.push(unit(n, n));
            simple_roots = simple;
            noncompact_simple = pm(n, 1, -1, 2);
            let mut pos = d_type_roots(n);
            pos.extend((1..=n).map(|i| unit(n, i)));
            positive_roots = pos;
            let mut nil: Vec<Weight> = (2..=n).flat_map(|j| [pm(n, 1, 1, j), pm(n, 1, -1, j)]).collect();
            nil.push(unit(n, 1));
            nilradical_roots = nil;
            rho = Weight::new(
                (1..=n)
                    .map(|i| Rational::from_int((n - i) as i64) + &half)
                    .collect(),
            );
            highest_root = pm(n, 1, 1, 2);
            zeta = unit(n, 1);
        }
        HermitianCase::DI { n } | HermitianCase::DIII { n } => {
            let mut simple: Vec<Weight> = (1..n).map(|i| pm(n, i, -1, i + 1)).collect();
            simple.push(pm(n, n - 1, 1, n));
            simple_roots = simple;
            positive_roots = d_type_roots(n);
            rho = Weight::from_ints(&(1..=n).map(|i| (n - i) as i64).collect::<Vec<_>>());
            highest_root = pm(n, 1, 1, 2);
            if let HermitianCase::DI { .. } = case {
                noncompact_simple = pm(n, 1, -1, 2);
                nilradical_roots = (2..=n).flat_map(|j| [pm(n, 1, 1, j), pm(n, 1, -1, j)]).collect();
                zeta = unit(n, 1);
                if n == 2 {
                    notes.push(
                        "so(4,C) is not simple: the Levi factor has no roots and e1+e2 is a \
                         second noncompact simple root",
                    );
                }
            } else {
                noncompact_simple = pm(n, n - 1, 1, n);
                nilradical_roots = (1..=n)
                    .flat_map(|i| (i + 1..=n).map(move |j| pm(n, i, 1, j)))
                    .collect();
                zeta = sum_range(n, 1..=n, &half);
                if n == 2 {
                    notes.push("so(4,C) is not simple; the pair is sl(2) x sl(2) with one factor in the Levi");
                }
            }
        }
        HermitianCase::EIII => {
            simple_roots = e6_simple_roots();
            noncompact_simple = simple_roots[0].clone();
            positive_roots = e6_positive_roots();
            nilradical_roots = SignPattern::all()
                .filter(|p| p.minus_count() % 2 == 0)
                .map(|p| sign_pattern_root(p, false))
                .collect();
            rho = Weight::from_ints(&[0, 1, 2, 3, 4, -4, -4, 4]);
            highest_root = sign_pattern_root(SignPattern([true; 5]), false);
            zeta = Weight::from_ints(&[0, 0, 0, 0, 0, -1, -1, 1]).scale(&Rational::new(2, 3));
        }
        HermitianCase::EVII => {
            let mut simple = e6_simple_roots();
            noncompact_simple = pm(8, 6, -1, 5);
            simple.push(noncompact_simple.clone());
            simple_roots = simple;
            let mut nil: Vec<Weight> = (1..=5).flat_map(|i| [pm(8, 6, 1, i), pm(8, 6, -1, i)]).collect();
            nil.push(pm(8, 8, -1, 7));
            nil.extend(
                SignPattern::all()
                    .filter(|p| p.minus_count() % 2 == 1)
                    .map(|p| sign_pattern_root(p, true)),
            );
            let mut pos = e6_positive_roots();
            pos.extend(nil.iter().cloned());
            positive_roots = pos;
            nilradical_roots = nil;
            rho = Weight::new(vec![
                Rational::zero(),
                Rational::from_int(1),
                Rational::from_int(2),
                Rational::from_int(3),
                Rational::from_int(4),
                Rational::from_int(5),
                Rational::new(-17, 2),
                Rational::new(17, 2),
            ]);
            highest_root = pm(8, 8, -1, 7);
            zeta = Weight::new(vec![
                Rational::zero(),
                Rational::zero(),
                Rational::zero(),
                Rational::zero(),
                Rational::zero(),
                Rational::one(),
                -&half,
                half.clone(),
            ]);
        }
    }

    let levi_positive: Vec<Weight> = positive_roots
        .iter()
        .filter(|b| !nilradical_roots.contains(b))
        .cloned()
        .collect();
    let levi_simples: Vec<Weight> = simple_roots
        .iter()
        .filter(|a| **a != noncompact_simple && levi_positive.contains(a))
        .cloned()
        .collect();

    // theta_u is proportional to zeta (both span Phi_l^perp inside the root
    // span); the coefficient of alpha_u in gamma is 1 for an abelian radical.
    let theta_u = zeta.scale(&(noncompact_simple.dot(&noncompact_simple) / highest_root.dot(&highest_root)));

    let levi_simple_coroots = levi_simples.iter().map(Weight::coroot).collect::<Result<Vec<_>>>()?;
    let levi_positive = sorted_desc(levi_positive);
    let levi_positive_coroots = levi_positive.iter().map(Weight::coroot).collect::<Result<Vec<_>>>()?;

    Ok(ParabolicRootDatum {
        case,
        simple_roots,
        levi_simples,
        noncompact_simple,
        positive_roots: sorted_desc(positive_roots),
        levi_positive,
        nilradical_roots: sorted_desc(nilradical_roots),
        rho,
        highest_root,
        zeta,
        theta_u,
        notes,
        levi_simple_coroots,
        levi_positive_coroots,
    })
}

/// `lambda = c zeta`, the parameter of the scalar module with constant `c`.
pub fn scalar_parameter_weight(datum: &ParabolicRootDatum, c: &Rational) -> Weight {
    datum.zeta().scale(c)
}
