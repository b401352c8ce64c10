//! Exact arbitrary-precision rational numbers.
//!
//! Every certified claim in this crate bottoms out in arithmetic on
//! [`Rational`]. The type is a thin wrapper over `num_rational::BigRational`
//! that fixes the textual form used by all file formats: a rational
//! serializes as `"num/den"` in lowest terms with a positive denominator,
//! or as a bare integer when the denominator is 1. Parsing additionally
//! accepts terminating decimals (`"1.084"`) and scientific notation
//! (`"1e-12"`), both read as *exact* rationals, never as floats.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::{Error, Result};

/// An exact rational number, always in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// `num/den` from machine integers. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn new(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rational(BigRational::new(num, den))
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

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Sign as -1, 0, or +1.
    pub fn signum(&self) -> i8 {
        match self.0.cmp(&BigRational::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Reciprocal. Panics on zero; callers guard.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    /// Integer power, negative exponents allowed (panics on 0^negative).
    pub fn pow(&self, exp: i32) -> Self {
        if exp < 0 {
            assert!(!self.is_zero(), "zero to a negative power");
        }
        Rational(self.0.pow(exp))
    }

    /// Largest integer ≤ self.
    pub fn floor_int(&self) -> BigInt {
        self.0.floor().numer().clone()
    }

    /// Smallest integer ≥ self.
    pub fn ceil_int(&self) -> BigInt {
        self.0.ceil().numer().clone()
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Nearest `f64`, for display and non-rigorous diagnostics only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Exact rational from a decimal literal such as `"1.084"` or `"-3e2"`.
    /// Convenience alias for the `FromStr` implementation.
    pub fn parse(s: &str) -> Result<Self> {
        s.parse()
    }

    /// 10^exp as an exact rational, `exp` may be negative.
    pub fn pow10(exp: i32) -> Self {
        Rational::from(10).pow(exp)
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
        write!(f, "{self}")
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<u32> for Rational {
    fn from(n: u32) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty rational literal".into()));
        }
        if let Some((num, den)) = s.split_once('/') {
            let n: BigInt = num
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
            let d: BigInt = den
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            return Ok(Rational(BigRational::new(n, d)));
        }
        parse_decimal(s)
    }
}

/// `[sign] digits [ "." digits ] [ ("e"|"E") [sign] digits ]` — exact.
fn parse_decimal(s: &str) -> Result<Rational> {
    let err = || Error::Parse(format!("bad rational literal {s:?}"));
    let (mantissa, exp10) = match s.split_once(['e', 'E']) {
        Some((m, e)) => {
            let exp: i32 = e.parse().map_err(|_| err())?;
            (m, exp)
        }
        None => (s, 0),
    };
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    let valid = |p: &str| p.chars().all(|c| c.is_ascii_digit());
    if !valid(int_part) || !valid(frac_part) {
        return Err(err());
    }
    let combined = format!("{int_part}{frac_part}");
    let n: BigInt = if combined.is_empty() {
        BigInt::zero()
    } else {
        combined.parse().map_err(|_| err())?
    };
    let scale = frac_part.len() as i32;
    let value = Rational::from_bigint(n) * Rational::pow10(exp10 - scale);
    Ok(if sign < 0 { -value } else { value })
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

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

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl DivAssign<&Rational> for Rational {
    fn div_assign(&mut self, rhs: &Rational) {
        self.0 /= &rhs.0;
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

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_exact() {
        let a = Rational::ratio(1, 3);
        let b = Rational::ratio(1, 6);
        assert_eq!(&a + &b, Rational::ratio(1, 2));
        assert_eq!(&a - &b, Rational::ratio(1, 6));
        assert_eq!(&a * &b, Rational::ratio(1, 18));
        assert_eq!(&a / &b, Rational::from(2));
    }

    #[test]
    fn stored_in_lowest_terms() {
        let r = Rational::ratio(-6, -4);
        assert_eq!(r.numer(), &BigInt::from(3));
        assert_eq!(r.denom(), &BigInt::from(2));
        let r = Rational::ratio(2, -4);
        assert!(r.is_negative());
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn parses_fraction_integer_decimal_scientific() {
        assert_eq!("22/3".parse::<Rational>().unwrap(), Rational::ratio(22, 3));
        assert_eq!("-216/1".parse::<Rational>().unwrap(), Rational::from(-216));
        assert_eq!("20812".parse::<Rational>().unwrap(), Rational::from(20812));
        assert_eq!("1.084".parse::<Rational>().unwrap(), Rational::ratio(271, 250));
        assert_eq!("-0.243".parse::<Rational>().unwrap(), Rational::ratio(-243, 1000));
        assert_eq!("1e-12".parse::<Rational>().unwrap(), Rational::pow10(-12));
        assert_eq!("2.5e2".parse::<Rational>().unwrap(), Rational::from(250));
        assert!("".parse::<Rational>().is_err());
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
        assert!("1.2.3".parse::<Rational>().is_err());
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(Rational::ratio(-216, 1).to_string(), "-216");
        assert_eq!(Rational::ratio(271, 250).to_string(), "271/250");
        assert_eq!(Rational::ratio(4, 8).to_string(), "1/2");
    }

    #[test]
    fn floor_ceil() {
        assert_eq!(Rational::ratio(7, 2).floor_int(), BigInt::from(3));
        assert_eq!(Rational::ratio(7, 2).ceil_int(), BigInt::from(4));
        assert_eq!(Rational::ratio(-7, 2).floor_int(), BigInt::from(-4));
        assert_eq!(Rational::ratio(-7, 2).ceil_int(), BigInt::from(-3));
        assert_eq!(Rational::from(5).floor_int(), BigInt::from(5));
    }

    #[test]
    fn serde_round_trip() {
        let r = Rational::ratio(-2781, 7);
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, "\"-2781/7\"");
        let back: Rational = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }
}
