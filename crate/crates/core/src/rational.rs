//! Exact ratios of integers, always kept in lowest terms.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Error};

/// `num / den` with `den > 0` and `gcd(|num|, den) = 1`.
///
/// Arithmetic goes through `i128` and panics if a reduced result no longer
/// fits `i64`; every quantity in this crate stays far below that.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    /// Reduces `num / den`. Panics on a zero denominator.
    pub fn new(num: i64, den: i64) -> Rational {
        Rational::try_from_i128(num as i128, den as i128).expect("rational out of range")
    }

    pub fn integer(v: i64) -> Rational {
        Rational { num: v, den: 1 }
    }

    /// Reduces a wide fraction; `None` on a zero denominator or if the reduced
    /// value does not fit `i64`.
    pub fn try_from_i128(num: i128, den: i128) -> Option<Rational> {
        if den == 0 {
            return None;
        }
        let sign = if (num < 0) != (den < 0) && num != 0 { -1 } else { 1 };
        let (a, b) = (num.unsigned_abs(), den.unsigned_abs());
        let g = gcd(a, b).max(1);
        let num = i64::try_from(a / g).ok()?;
        let den = i64::try_from(b / g).ok()?;
        Some(Rational {
            num: sign * num,
            den,
        })
    }

    #[inline]
    pub fn num(&self) -> i64 {
        self.num
    }

    #[inline]
    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    fn wide(num: i128, den: i128) -> Rational {
        Rational::try_from_i128(num, den).expect("rational arithmetic overflow")
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Both denominators are positive, so cross-multiplication preserves order.
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, o: Rational) -> Rational {
        Rational::wide(
            self.num as i128 * o.den as i128 + o.num as i128 * self.den as i128,
            self.den as i128 * o.den as i128,
        )
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, o: Rational) -> Rational {
        self + (-o)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, o: Rational) -> Rational {
        Rational::wide(
            self.num as i128 * o.num as i128,
            self.den as i128 * o.den as i128,
        )
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, o: Rational) -> Rational {
        assert!(o.num != 0, "division by zero rational");
        Rational::wide(
            self.num as i128 * o.den as i128,
            self.den as i128 * o.num as i128,
        )
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::integer(v)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `"a/b"` or a bare integer.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || invalid(format!("not a rational: {s:?}"));
        match s.split_once('/') {
            Some((a, b)) => {
                let a: i64 = a.trim().parse().map_err(|_| bad())?;
                let b: i64 = b.trim().parse().map_err(|_| bad())?;
                Rational::try_from_i128(a as i128, b as i128).ok_or_else(bad)
            }
            None => Ok(Rational::integer(s.trim().parse().map_err(|_| bad())?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduces_and_normalizes_sign() {
        assert_eq!(Rational::new(6, 4), Rational::new(3, 2));
        assert_eq!(Rational::new(3, -6).to_string(), "-1/2");
        assert_eq!(Rational::new(0, -5), Rational::ZERO);
        assert_eq!(Rational::new(-4, -8).to_string(), "1/2");
        assert!(Rational::try_from_i128(1, 0).is_none());
    }

    #[test]
    fn arithmetic_and_parse() {
        let r = Rational::ONE + Rational::new(12, 84);
        assert_eq!(r, Rational::new(8, 7));
        assert_eq!(r - Rational::ONE, Rational::new(1, 7));
        assert_eq!(Rational::new(2, 3) * Rational::new(9, 4), Rational::new(3, 2));
        assert_eq!(Rational::new(2, 3) / Rational::new(4, 9), Rational::new(3, 2));
        assert_eq!("25/12".parse::<Rational>().unwrap(), Rational::new(25, 12));
        assert_eq!("7".parse::<Rational>().unwrap(), Rational::integer(7));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn ordering_near_i64_limits() {
        let a = Rational::new(i64::MAX - 1, i64::MAX);
        let b = Rational::new(i64::MAX - 2, i64::MAX - 1);
        assert!(a > b);
        assert!(Rational::new(-1, 3) < Rational::ZERO);
    }

    proptest! {
        #[test]
        fn ordering_matches_wide_cross_multiplication(
            a in -1_000_000i64..1_000_000, b in 1i64..1_000_000,
            c in -1_000_000i64..1_000_000, d in 1i64..1_000_000,
        ) {
            let x = Rational::new(a, b);
            let y = Rational::new(c, d);
            prop_assert_eq!(x.cmp(&y), (a as i128 * d as i128).cmp(&(c as i128 * b as i128)));
            let s = x + y;
            prop_assert_eq!(s - y, x);
            let back: Rational = x.to_string().parse().unwrap();
            prop_assert_eq!(back, x);
        }
    }
}
