//! Arbitrary-precision rationals with an `i64` fast path.
//!
//! Almost every structure constant in this crate is `0`, `±1` or a small
//! fraction, so values are kept as a reduced `i64` pair whenever they fit and
//! only promoted to `BigRational` on overflow. The representation is
//! canonical: a value that fits the small form is always stored in it, so
//! derived equality and hashing agree with mathematical equality.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Repr {
    /// Reduced, denominator > 0, numerator != i64::MIN.
    Small(i64, i64),
    Big(BigRational),
}

fn fits(v: i128) -> bool {
    v > i64::MIN as i128 && v <= i64::MAX as i128
}

impl Rational {
    pub fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_i128(v as i128, 1).expect("nonzero denominator")
    }

    /// `num / den`, or `None` when `den == 0`.
    pub fn new(num: i64, den: i64) -> Option<Self> {
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Option<Self> {
        if den == 0 {
            return None;
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        if fits(n) && fits(d) {
            Some(Rational(Repr::Small(n as i64, d as i64)))
        } else {
            Some(Self::from_big(BigRational::new(BigInt::from(n), BigInt::from(d))))
        }
    }

    fn from_big(v: BigRational) -> Self {
        // BigRational::new already reduces and normalises the sign.
        if let (Some(n), Some(d)) = (v.numer().to_i128(), v.denom().to_i128()) {
            if fits(n) && fits(d) {
                return Rational(Repr::Small(n as i64, d as i64));
            }
        }
        Rational(Repr::Big(v))
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    return Self::from_i128(a + c, b).unwrap();
                }
                Self::from_i128(a * d + c * b, b * d).unwrap()
            }
            _ => Self::from_big(self.to_big() + other.to_big()),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                Self::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128).unwrap()
            }
            _ => Self::from_big(self.to_big() * other.to_big()),
        }
    }

    pub fn neg(&self) -> Self {
        match &self.0 {
            Repr::Small(a, b) => Rational(Repr::Small(-a, *b)),
            Repr::Big(v) => Self::from_big(-v),
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        match &self.0 {
            Repr::Small(a, b) => Self::from_i128(*b as i128, *a as i128),
            Repr::Big(v) => Some(Self::from_big(v.recip())),
        }
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(a, _) => a.signum() as i32,
            Repr::Big(v) => {
                if v.is_positive() {
                    1
                } else if v.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(v) if v.denom().is_one() => write!(f, "{}", v.numer()),
            Repr::Big(v) => write!(f, "{}/{}", v.numer(), v.denom()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError(pub String);

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse_int = |t: &str| {
            BigInt::from_str(t.trim()).map_err(|_| ParseRationalError(format!("not an integer: {t:?}")))
        };
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (parse_int(n)?, parse_int(d)?),
            None => (parse_int(s)?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(ParseRationalError(format!("zero denominator in {s:?}")));
        }
        Ok(Self::from_big(BigRational::new(num, den)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_arithmetic_stays_reduced() {
        let a = Rational::new(2, 4).unwrap();
        assert_eq!(a.to_string(), "1/2");
        let b = Rational::new(-3, -6).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.add(&b), Rational::one());
        assert_eq!(Rational::new(1, -3).unwrap().to_string(), "-1/3");
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Rational::from_int(i64::MAX);
        let sq = big.mul(&big);
        assert!(matches!(sq.0, Repr::Big(_)));
        let back = sq.mul(&big.inv().unwrap());
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small(..)));
    }

    #[test]
    fn parse_rejects_zero_denominator() {
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
        assert_eq!("-5/7".parse::<Rational>().unwrap().to_string(), "-5/7");
        assert_eq!("10/5".parse::<Rational>().unwrap().to_string(), "2");
    }

    #[test]
    fn min_value_is_not_small() {
        let m = Rational::from_i128(i64::MIN as i128, 1).unwrap();
        assert_eq!(m.neg().neg(), m);
        assert_eq!(m.to_string(), i64::MIN.to_string());
    }
}
