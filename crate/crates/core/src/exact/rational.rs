//! Exact rationals.
//!
//! Thin wrapper over `num_rational::BigRational` that fixes the
//! serialization ("num/den" strings) and decimal rendering used across
//! reports. Comparisons are exact; no decision anywhere in the crate is
//! made through floating point.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Reduced rational with positive denominator. Panics on a zero
    /// denominator.
    pub fn new(num: BigInt, den: BigInt) -> Self {
        Rational(BigRational::new(num, den))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn from_ints(num: i64, den: i64) -> Self {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Exact three-way comparison; this is the only comparison path used
    /// by the conjecture scans.
    pub fn cmp_exact(&self, other: &Rational) -> Ordering {
        self.0.cmp(&other.0)
    }

    /// Always-explicit "num/den" form, e.g. `5/3` or `2/1`.
    pub fn ratio_string(&self) -> String {
        format!("{}/{}", self.0.numer(), self.0.denom())
    }

    /// Parses `a/b` (or a bare integer `a`).
    pub fn parse_ratio(s: &str) -> Option<Self> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (
                n.trim().parse::<BigInt>().ok()?,
                d.trim().parse::<BigInt>().ok()?,
            ),
            None => (s.trim().parse::<BigInt>().ok()?, BigInt::one()),
        };
        if den.is_zero() {
            return None;
        }
        Some(Rational::new(num, den))
    }

    /// Correctly rounded (half-even) decimal rendering with `digits`
    /// fractional digits. A value that rounds to zero loses its sign.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = BigInt::from(10u32).pow(digits as u32);
        let num = self.0.numer().abs() * &scale;
        let den = self.0.denom().clone();
        let (mut q, r) = num.div_rem(&den);
        let twice: BigInt = &r * 2;
        match twice.cmp(&den) {
            Ordering::Greater => q += 1,
            Ordering::Equal => {
                if q.is_odd() {
                    q += 1;
                }
            }
            Ordering::Less => {}
        }
        let sign = if self.0.is_negative() && !q.is_zero() {
            "-"
        } else {
            ""
        };
        let int_part = &q / &scale;
        let frac_part = &q % &scale;
        let mut frac = frac_part.to_string();
        while frac.len() < digits {
            frac.insert(0, '0');
        }
        if digits == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac}")
        }
    }
}

/// Free-function form of [`Rational::to_decimal`].
pub fn to_decimal(value: &Rational, digits: usize) -> String {
    value.to_decimal(digits)
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
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

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.ratio_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Rational::parse_ratio(&s)
            .ok_or_else(|| serde::de::Error::custom(format!("invalid rational: {s:?}")))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}
