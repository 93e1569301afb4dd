use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use super::rational::Rational;
use crate::error::{Error, Result};

/// The base field: the rationals or a prime field `F_p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    /// `F_p`, rejecting composite moduli.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(Rational::zero()),
            FieldSpec::Prime(p) => Scalar::Mod { value: 0, modulus: p },
        }
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(Rational::from_int(v)),
            FieldSpec::Prime(p) => Scalar::Mod { value: v.rem_euclid(p as i64) as u64, modulus: p },
        }
    }

    /// `num / den` in this field; `None` when `den` vanishes in the field.
    pub fn ratio(self, num: i64, den: i64) -> Option<Scalar> {
        match self {
            FieldSpec::Rational => Rational::new(num, den).map(Scalar::Rational),
            FieldSpec::Prime(_) => self.int(den).inv().map(|d| self.int(num) * d),
        }
    }

    pub fn zeros(self, n: usize) -> Vec<Scalar> {
        vec![self.zero(); n]
    }

    /// The `i`-th standard basis vector of length `n`.
    pub fn unit_vector(self, n: usize, i: usize) -> Vec<Scalar> {
        let mut v = self.zeros(n);
        v[i] = self.one();
        v
    }

    /// Parse a scalar literal: `"3"`, `"-5/7"`; over `F_p` fractions are
    /// reduced modulo `p`.
    pub fn parse(self, s: &str) -> std::result::Result<Scalar, String> {
        let q: Rational = s.parse().map_err(|e: super::rational::ParseRationalError| e.0)?;
        match self {
            FieldSpec::Rational => Ok(Scalar::Rational(q)),
            FieldSpec::Prime(p) => {
                let reduce = |b: num_bigint::BigInt| {
                    let m = num_bigint::BigInt::from(p);
                    let r = ((b % &m) + &m) % &m;
                    Scalar::Mod { value: num_traits::ToPrimitive::to_u64(&r).unwrap(), modulus: p }
                };
                let num = reduce(q.numer());
                let den = reduce(q.denom());
                let inv = den.inv().ok_or_else(|| format!("denominator of {s:?} vanishes mod {p}"))?;
                Ok(num * inv)
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => f.write_str("Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" || s.eq_ignore_ascii_case("rational") {
            return Ok(FieldSpec::Rational);
        }
        let digits = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| s.strip_prefix('F'))
            .ok_or_else(|| Error::InvalidInput(format!("unknown field {s:?}")))?;
        let p: u64 = digits.parse().map_err(|_| Error::InvalidInput(format!("unknown field {s:?}")))?;
        FieldSpec::prime(p)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Rational(Rational),
    Mod { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Mod { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(q) => q.inv().map(Scalar::Rational),
            Scalar::Mod { value, modulus } => {
                if *value == 0 {
                    None
                } else {
                    Some(Scalar::Mod { value: pow_mod(*value, modulus - 2, *modulus), modulus: *modulus })
                }
            }
        }
    }

    fn binop(
        &self,
        other: &Scalar,
        q: impl FnOnce(&Rational, &Rational) -> Rational,
        m: impl FnOnce(u128, u128, u128) -> u128,
    ) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(q(a, b)),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: p2 }) if p == p2 => {
                Scalar::Mod { value: m(*a as u128, *b as u128, *p as u128) as u64, modulus: *p }
            }
            _ => panic!("field mismatch: {} vs {}", self.field(), other.field()),
        }
    }
}

fn pow_mod(b: u64, mut e: u64, p: u64) -> u64 {
    let p = p as u128;
    let mut r: u128 = 1;
    let mut base = b as u128 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    r as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => q.fmt(f),
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.binop(rhs, |a, b| a.add(b), |a, b, p| (a + b) % p)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.binop(rhs, |a, b| a.sub(b), |a, b, p| (a + p - b) % p)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.binop(rhs, |a, b| a.mul(b), |a, b, p| a * b % p)
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(q.neg()),
            Scalar::Mod { value, modulus } => Scalar::Mod { value: (modulus - value) % modulus, modulus: *modulus },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_inverse() {
        let f = FieldSpec::prime(7).unwrap();
        assert_eq!(f.int(3).inv().unwrap(), f.int(5));
        assert_eq!(f.int(-1), f.int(6));
        assert_eq!(f.parse("1/2").unwrap(), f.int(4));
        assert!(f.parse("1/7").is_err());
    }

    #[test]
    fn field_parsing() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rational);
        assert_eq!("F5".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(5));
        assert_eq!("GF(2)".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(2));
        assert!("F6".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::Prime(5).to_string(), "F5");
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixing_fields_panics() {
        let _ = FieldSpec::Rational.one() + FieldSpec::Prime(3).one();
    }
}
