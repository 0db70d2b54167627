//! Exact rationals for reporting squared distances.
//!
//! The verifier's inner loops work on [`Frac`], an unreduced non-negative
//! fraction of `u128`s compared without overflow. Reported values are
//! converted to [`Rational`], which is arbitrary precision and always in
//! lowest terms.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Panics if `den` is zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_integer(v: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(v.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    /// `rho^2` for disks of diameter one.
    pub fn quarter() -> Self {
        Rational::new(1, 4)
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Multiply by an integer.
    pub fn scaled(&self, k: i64) -> Self {
        Rational(&self.0 * BigRational::from_integer(BigInt::from(k)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError(pub String);

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational `{}`", self.0)
    }
}

impl std::error::Error for ParseRationalError {}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `num/den` or a bare integer.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: BigInt = num.parse().map_err(|_| err())?;
        let den: BigInt = den.parse().map_err(|_| err())?;
        if den.is_zero() {
            return Err(err());
        }
        Ok(Rational::new(num, den))
    }
}

/// Non-negative fraction `num / den` with `den > 0`, not necessarily reduced.
#[derive(Clone, Copy, Debug)]
pub struct Frac {
    pub num: u128,
    pub den: u128,
}

impl Frac {
    pub const fn new(num: u128, den: u128) -> Self {
        Frac { num, den }
    }

    pub fn to_rational(self) -> Rational {
        Rational::new(BigInt::from(self.num), BigInt::from(self.den))
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

/// Compares `a/b` with `c/d` by expanding both as continued fractions, so no
/// product ever overflows.
fn cmp_frac(mut a: u128, mut b: u128, mut c: u128, mut d: u128) -> Ordering {
    let mut flipped = false;
    loop {
        let (q1, r1) = (a / b, a % b);
        let (q2, r2) = (c / d, c % d);
        let ord = match q1.cmp(&q2) {
            Ordering::Equal => match (r1 == 0, r2 == 0) {
                (true, true) => Ordering::Equal,
                (true, false) => Ordering::Less,
                (false, true) => Ordering::Greater,
                (false, false) => {
                    // a/b = q + r1/b, compare b/r1 against d/r2 with order reversed
                    (a, b, c, d) = (b, r1, d, r2);
                    flipped = !flipped;
                    continue;
                }
            },
            o => o,
        };
        return if flipped { ord.reverse() } else { ord };
    }
}

impl PartialEq for Frac {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Frac {}

impl PartialOrd for Frac {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Frac {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_frac(self.num, self.den, other.num, other.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn display_lowest_terms() {
        assert_eq!(Rational::new(2, 4).to_string(), "1/2");
        assert_eq!(Rational::from_integer(9).to_string(), "9/1");
        assert_eq!(Frac::new(1024, 1).to_rational().to_string(), "1024/1");
        assert_eq!(Rational::new(6, -8).to_string(), "-3/4");
    }

    #[test]
    fn parse() {
        assert_eq!("1/2".parse::<Rational>().unwrap(), Rational::new(1, 2));
        assert_eq!("9".parse::<Rational>().unwrap(), Rational::from_integer(9));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x/2".parse::<Rational>().is_err());
    }

    #[test]
    fn frac_compare_edge_cases() {
        assert_eq!(Frac::new(1, 2), Frac::new(2, 4));
        assert!(Frac::new(1, 4) < Frac::new(1, 2));
        assert!(Frac::new(0, 5) < Frac::new(1, u128::MAX));
        // products of these would overflow u128
        let big = 1u128 << 126;
        assert!(Frac::new(big, (1 << 63) + 1) < Frac::new(big, 1 << 63));
        assert_eq!(Frac::new(big, 1 << 63), Frac::new(big >> 1, 1 << 62));
    }

    proptest! {
        #[test]
        fn frac_order_matches_bigint(a in 0u128..1<<100, b in 1u128..1<<100,
                                     c in 0u128..1<<100, d in 1u128..1<<100) {
            let lhs = BigInt::from(a) * BigInt::from(d);
            let rhs = BigInt::from(c) * BigInt::from(b);
            prop_assert_eq!(Frac::new(a, b).cmp(&Frac::new(c, d)), lhs.cmp(&rhs));
        }
    }
}
