//! Exact rational scalars and coordinate vectors.
//!
//! Every weight in this crate lives in one of the orthonormal coordinate
//! realizations `R^{p+q}`, `R^n` or `R^8`, so the Killing-form inner product
//! is (up to a global scale that cancels in every pairing) the plain dot
//! product.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    /// `numer / denom`. Panics if `denom == 0`.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// True for `1, 2, 3, ...`.
    pub fn is_positive_integer(&self) -> bool {
        self.is_integer() && self.is_positive()
    }

    /// True for `0, 1, 2, ...`.
    pub fn is_nonnegative_integer(&self) -> bool {
        self.is_integer() && !self.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn floor(&self) -> Self {
        Rational(self.0.floor())
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn checked_div(&self, rhs: &Rational) -> Option<Rational> {
        if rhs.is_zero() {
            None
        } else {
            Some(Rational(&self.0 / &rhs.0))
        }
    }

    /// Least common multiple of the denominators of `values`.
    pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
        values
            .into_iter()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_int(n.into())
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `p`, `p/q`, with an optional leading `-`, `+` or `−` (U+2212).
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRational(s.to_string());
        let t = s.trim();
        let (negative, body) = if let Some(rest) = t.strip_prefix('−') {
            (true, rest)
        } else if let Some(rest) = t.strip_prefix('-') {
            (true, rest)
        } else if let Some(rest) = t.strip_prefix('+') {
            (false, rest)
        } else {
            (false, t)
        };
        if body.is_empty() || body.starts_with(['-', '+']) {
            return Err(bad());
        }
        let (num, den) = match body.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (body, "1"),
        };
        if !num.chars().all(|c| c.is_ascii_digit()) || !den.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        let value = BigRational::new(num, den);
        Ok(Rational(if negative { -value } else { value }))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(&self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

/// A point of the ambient coordinate space of a case. Immutable; every
/// operation returns a fresh value.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Vec<Rational>);

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Weight(vec![Rational::zero(); dim])
    }

    /// The basis vector `e_{index+1}` (indices are 0-based).
    pub fn unit(dim: usize, index: usize) -> Self {
        let mut coords = vec![Rational::zero(); dim];
        coords[index] = Rational::one();
        Weight(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| Rational::from_int(c)).collect())
    }

    /// Coordinates given as numerators over 2.
    pub fn from_halves(numerators: &[i64]) -> Self {
        Weight(numerators.iter().map(|&c| Rational::new(c, 2)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn coord(&self, index: usize) -> &Rational {
        &self.0[index]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, factor: &Rational) -> Weight {
        Weight(self.0.iter().map(|c| c * factor).collect())
    }

    pub fn inner(&self, other: &Weight) -> Result<Rational> {
        check_dims(self, other)?;
        Ok(self.dot(other))
    }

    pub fn pairing(&self, other: &Weight) -> Result<Rational> {
        pairing(self, other)
    }

    pub fn reflect(&self, alpha: &Weight) -> Result<Weight> {
        reflect(self, alpha)
    }

    /// Dot product without the dimension check; callers guarantee equal
    /// lengths.
    pub(crate) fn dot(&self, other: &Weight) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        let mut acc = Rational::zero();
        for (a, b) in self.0.iter().zip(&other.0) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
        acc
    }

    /// `self - factor * other`, unchecked dimensions.
    pub(crate) fn sub_scaled(&self, factor: &Rational, other: &Weight) -> Weight {
        debug_assert_eq!(self.dim(), other.dim());
        Weight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| if b.is_zero() { a.clone() } else { a - &(factor * b) })
                .collect(),
        )
    }

    /// The coroot `2 alpha / (alpha, alpha)`; pairing against a root is the dot
    /// product with its coroot.
    pub(crate) fn coroot(&self) -> Result<Weight> {
        let norm = self.dot(self);
        if norm.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(self.scale(&(Rational::from_int(2) / norm)))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(&self.0)
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

fn check_dims(mu: &Weight, nu: &Weight) -> Result<()> {
    if mu.dim() != nu.dim() {
        return Err(Error::Dimension {
            left: mu.dim(),
            right: nu.dim(),
        });
    }
    Ok(())
}

/// `(mu, nu) = sum_i mu_i nu_i`.
pub fn inner(mu: &Weight, nu: &Weight) -> Result<Rational> {
    mu.inner(nu)
}

/// `<mu, nu> = 2 (mu, nu) / (nu, nu)`.
pub fn pairing(mu: &Weight, nu: &Weight) -> Result<Rational> {
    check_dims(mu, nu)?;
    let norm = nu.dot(nu);
    if norm.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    Ok(Rational::from_int(2) * mu.dot(nu) / norm)
}

/// `s_alpha(mu) = mu - <mu, alpha> alpha`.
pub fn reflect(mu: &Weight, alpha: &Weight) -> Result<Weight> {
    let p = pairing(mu, alpha)?;
    Ok(mu.sub_scaled(&p, alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(q("3/6").to_string(), "1/2");
        assert_eq!(q("-4/2").to_string(), "-2");
        assert_eq!(q("−3/4"), Rational::new(-3, 4));
        assert_eq!(q("+7"), Rational::from_int(7));
        assert_eq!(q("0/5").to_string(), "0");
        for bad in ["", "1/0", "a", "1/2/3", "--1", "1.5", "/3", "-"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn lowest_terms_with_positive_denominator() {
        let r = Rational::new(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn basic_inner_products() {
        let e1 = Weight::unit(3, 0);
        let e2 = Weight::unit(3, 1);
        let e3 = Weight::unit(3, 2);
        assert_eq!(inner(&e1, &e1).unwrap(), Rational::one());
        assert_eq!(inner(&(&e1 - &e2), &(&e2 - &e3)).unwrap(), Rational::from_int(-1));
        // zeta of EIII: (2/3)(-e6 - e7 + e8)
        let zeta = Weight::from_ints(&[0, 0, 0, 0, 0, -1, -1, 1]).scale(&Rational::new(2, 3));
        assert_eq!(inner(&zeta, &zeta).unwrap(), Rational::new(4, 3));
    }

    #[test]
    fn dimension_and_zero_errors() {
        let a = Weight::unit(2, 0);
        let b = Weight::unit(3, 0);
        assert_eq!(inner(&a, &b), Err(Error::Dimension { left: 2, right: 3 }));
        assert_eq!(pairing(&a, &Weight::zero(2)), Err(Error::ZeroDivisor));
        assert_eq!(reflect(&a, &Weight::zero(2)), Err(Error::ZeroDivisor));
    }

    #[test]
    fn reflection_fixes_the_hyperplane() {
        let mu = Weight::from_ints(&[1, 1, 5]);
        let alpha = Weight::from_ints(&[1, -1, 0]);
        assert_eq!(reflect(&mu, &alpha).unwrap(), mu);
        assert_eq!(pairing(&alpha, &alpha).unwrap(), Rational::from_int(2));
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(n, d))
    }

    fn weight(dim: usize) -> impl Strategy<Value = Weight> {
        prop::collection::vec(small_rational(), dim).prop_map(Weight::new)
    }

    proptest! {
        #[test]
        fn reflection_is_an_isometric_involution(
            (mu, nu, alpha) in (1usize..=8).prop_flat_map(|d| (weight(d), weight(d), weight(d)))
        ) {
            prop_assume!(!alpha.is_zero());
            let rmu = reflect(&mu, &alpha).unwrap();
            prop_assert_eq!(reflect(&rmu, &alpha).unwrap(), mu.clone());
            let rnu = reflect(&nu, &alpha).unwrap();
            prop_assert_eq!(inner(&rmu, &rnu).unwrap(), inner(&mu, &nu).unwrap());
        }

        #[test]
        fn display_parse_roundtrip(r in small_rational()) {
            prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
        }
    }
}
