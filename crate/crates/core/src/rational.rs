//! Exact rational scalar.
//!
//! [`Rat`] wraps a reduced `i128` fraction. Arithmetic is checked: the
//! `checked_*` methods report [`Error::Overflow`], and the operator impls
//! panic on overflow instead of wrapping.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rat(Ratio<i128>);

impl Rat {
    pub const ZERO: Rat = Rat(Ratio::new_raw(0, 1));
    pub const ONE: Rat = Rat(Ratio::new_raw(1, 1));

    /// Reduced fraction `numer / denom`. Fails on a zero denominator.
    pub fn new(numer: i128, denom: i128) -> Result<Rat> {
        if denom == 0 {
            return Err(Error::Overflow);
        }
        if denom == i128::MIN || numer == i128::MIN {
            return Err(Error::Overflow);
        }
        Ok(Rat(Ratio::new(numer, denom)))
    }

    /// Shorthand for small literals; panics on a zero denominator.
    pub fn frac(numer: i64, denom: i64) -> Rat {
        Rat::new(numer as i128, denom as i128).expect("nonzero denominator")
    }

    pub fn int(v: i64) -> Rat {
        Rat(Ratio::from_integer(v as i128))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
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

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i8 {
        match self.0.numer().cmp(&0) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn recip(&self) -> Result<Rat> {
        if self.is_zero() {
            return Err(Error::Overflow);
        }
        Ok(Rat(self.0.recip()))
    }

    pub fn checked_add(&self, rhs: &Rat) -> Result<Rat> {
        self.0.checked_add(&rhs.0).map(Rat).ok_or(Error::Overflow)
    }

    pub fn checked_sub(&self, rhs: &Rat) -> Result<Rat> {
        self.0.checked_sub(&rhs.0).map(Rat).ok_or(Error::Overflow)
    }

    pub fn checked_mul(&self, rhs: &Rat) -> Result<Rat> {
        self.0.checked_mul(&rhs.0).map(Rat).ok_or(Error::Overflow)
    }

    pub fn checked_div(&self, rhs: &Rat) -> Result<Rat> {
        if rhs.is_zero() {
            return Err(Error::Overflow);
        }
        self.0.checked_div(&rhs.0).map(Rat).ok_or(Error::Overflow)
    }

    /// The value as an exact integer, if it is one.
    pub fn to_integer(&self) -> Option<i128> {
        self.is_integer().then(|| self.numer())
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }
}

impl From<i64> for Rat {
    fn from(v: i64) -> Self {
        Rat::int(v)
    }
}

impl From<usize> for Rat {
    fn from(v: usize) -> Self {
        Rat(Ratio::from_integer(v as i128))
    }
}

macro_rules! panicking_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                self.$checked(&rhs)
                    .expect(concat!("rational ", stringify!($method), " overflow"))
            }
        }
        impl<'a> $tr<&'a Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                self.$checked(rhs)
                    .expect(concat!("rational ", stringify!($method), " overflow"))
            }
        }
    };
}

panicking_op!(Add, add, checked_add);
panicking_op!(Sub, sub, checked_sub);
panicking_op!(Mul, mul, checked_mul);
panicking_op!(Div, div, checked_div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::ZERO, |a, b| a + b)
    }
}

impl<'a> Sum<&'a Rat> for Rat {
    fn sum<I: Iterator<Item = &'a Rat>>(iter: I) -> Rat {
        iter.fold(Rat::ZERO, |a, b| a + *b)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error returned when a string is not a rational literal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRatError(pub String);

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal {:?}", self.0)
    }
}

impl std::error::Error for ParseRatError {}

impl FromStr for Rat {
    type Err = ParseRatError;

    /// Accepts `p`, `p/q` and finite decimals such as `-0.125`, all exactly.
    fn from_str(s: &str) -> std::result::Result<Rat, ParseRatError> {
        let err = || ParseRatError(s.to_string());
        let t = s.trim();
        if let Some((p, q)) = t.split_once('/') {
            let p: i128 = p.trim().parse().map_err(|_| err())?;
            let q: i128 = q.trim().parse().map_err(|_| err())?;
            return Rat::new(p, q).map_err(|_| err());
        }
        if let Some((int_part, frac_part)) = t.split_once('.') {
            let negative = int_part.starts_with('-');
            let digits = int_part.trim_start_matches(['-', '+']);
            if frac_part.is_empty() && digits.is_empty() {
                return Err(err());
            }
            if !frac_part.bytes().all(|b| b.is_ascii_digit())
                || !digits.bytes().all(|b| b.is_ascii_digit())
            {
                return Err(err());
            }
            let whole: i128 = if digits.is_empty() {
                0
            } else {
                digits.parse().map_err(|_| err())?
            };
            let scale = 10i128.checked_pow(frac_part.len() as u32).ok_or_else(err)?;
            let frac: i128 = if frac_part.is_empty() {
                0
            } else {
                frac_part.parse().map_err(|_| err())?
            };
            let numer = whole
                .checked_mul(scale)
                .and_then(|w| w.checked_add(frac))
                .ok_or_else(err)?;
            let numer = if negative { -numer } else { numer };
            return Rat::new(numer, scale).map_err(|_| err());
        }
        let p: i128 = t.parse().map_err(|_| err())?;
        Rat::new(p, 1).map_err(|_| err())
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Rat, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
