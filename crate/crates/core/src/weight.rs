//! Degrees of trust.
//!
//! A [`Weight`] is an exact rational in `[0, 1]`. Judgements, trust edges and
//! hypotheses all carry one; the rules only ever multiply weights or take
//! their minimum, both of which stay inside the unit interval.

use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact weight in the closed unit interval.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(BigRational);

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum WeightError {
    #[error("malformed weight literal `{0}`")]
    Malformed(String),
    #[error("weight {0} lies outside [0, 1]")]
    OutOfRange(String),
}

impl Weight {
    pub fn one() -> Self {
        Weight(BigRational::one())
    }

    pub fn zero() -> Self {
        Weight(BigRational::zero())
    }

    /// Wraps a rational, rejecting values outside `[0, 1]`.
    pub fn new(value: BigRational) -> Option<Self> {
        if value.is_negative() || value > BigRational::one() {
            None
        } else {
            Some(Weight(value))
        }
    }

    /// `numer / denom`, or `None` when the fraction is not a weight.
    pub fn from_ratio(numer: u64, denom: u64) -> Option<Self> {
        if denom == 0 {
            return None;
        }
        Self::new(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    /// Weight of `tenths / 10`; convenient for the `{0.1, ..., 1.0}` grid.
    pub fn tenths(tenths: u8) -> Self {
        Self::from_ratio(u64::from(tenths.min(10)), 10).expect("tenths are clamped to [0, 10]")
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Product of two weights; always a weight again.
    pub fn mul(&self, other: &Weight) -> Weight {
        Weight(&self.0 * &other.0)
    }

    /// `self / other`, if the quotient is still a weight.
    pub fn checked_div(&self, other: &Weight) -> Option<Weight> {
        if other.is_zero() {
            return None;
        }
        Self::new(&self.0 / &other.0)
    }

    /// The exact decimal expansion, if the reduced denominator only has
    /// factors 2 and 5.
    pub fn to_exact_decimal(&self) -> Option<String> {
        let numer = self.0.numer().clone();
        let denom = self.0.denom().clone();
        let two = BigInt::from(2u8);
        let five = BigInt::from(5u8);
        let (mut rest, mut twos, mut fives) = (denom.clone(), 0u32, 0u32);
        while rest.is_even() {
            rest /= &two;
            twos += 1;
        }
        while (&rest % &five).is_zero() {
            rest /= &five;
            fives += 1;
        }
        if !rest.is_one() {
            return None;
        }
        let digits = twos.max(fives);
        let scaled = numer * num_traits::pow(BigInt::from(10u8), digits as usize) / denom;
        let text = scaled.to_str_radix(10);
        if digits == 0 {
            return Some(alloc::format!("{text}.0"));
        }
        let digits = digits as usize;
        let padded = if text.len() <= digits {
            let mut s = String::new();
            for _ in 0..=(digits - text.len()) {
                s.push('0');
            }
            s.push_str(&text);
            s
        } else {
            text
        };
        let (int, frac) = padded.split_at(padded.len() - digits);
        Some(alloc::format!("{int}.{frac}"))
    }
}

impl Default for Weight {
    fn default() -> Self {
        Weight::one()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_exact_decimal() {
            Some(text) => f.write_str(&text),
            None => write!(f, "{}/{}", self.0.numer(), self.0.denom()),
        }
    }
}

/// Accepts decimals with a leading digit (`1`, `0.5`) and fractions `n/d`.
/// Conversion is exact.
impl FromStr for Weight {
    type Err = WeightError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let malformed = || WeightError::Malformed(String::from(text));
        let digits_only = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
        let value = if let Some((n, d)) = text.split_once('/') {
            if !digits_only(n) || !digits_only(d) {
                return Err(malformed());
            }
            let n: BigInt = n.parse().map_err(|_| malformed())?;
            let d: BigInt = d.parse().map_err(|_| malformed())?;
            if d.is_zero() {
                return Err(malformed());
            }
            BigRational::new(n, d)
        } else {
            let (int, frac) = text.split_once('.').unwrap_or((text, ""));
            if !digits_only(int) || (text.contains('.') && !digits_only(frac)) {
                return Err(malformed());
            }
            let all: BigInt = alloc::format!("{int}{frac}").parse().map_err(|_| malformed())?;
            BigRational::new(all, num_traits::pow(BigInt::from(10u8), frac.len()))
        };
        Weight::new(value).ok_or_else(|| WeightError::OutOfRange(String::from(text)))
    }
}

/// Weight transformer carried by a λ-witness: how the weight of the
/// argument determines the weight of the result.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WeightExpr {
    Const(Weight),
    /// The argument weight itself.
    Arg,
    Mul(Box<WeightExpr>, Box<WeightExpr>),
    Min(Box<WeightExpr>, Box<WeightExpr>),
}

impl WeightExpr {
    pub fn mul(a: WeightExpr, b: WeightExpr) -> Self {
        WeightExpr::Mul(Box::new(a), Box::new(b))
    }

    pub fn min(a: WeightExpr, b: WeightExpr) -> Self {
        WeightExpr::Min(Box::new(a), Box::new(b))
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, WeightExpr::Arg)
    }

    pub fn eval(&self, arg: &Weight) -> Weight {
        match self {
            WeightExpr::Const(w) => w.clone(),
            WeightExpr::Arg => arg.clone(),
            WeightExpr::Mul(a, b) => a.eval(arg).mul(&b.eval(arg)),
            WeightExpr::Min(a, b) => a.eval(arg).min(b.eval(arg)),
        }
    }
}

impl Default for WeightExpr {
    fn default() -> Self {
        WeightExpr::Arg
    }
}

/// Applies a transformer to a weight. Total on `[0, 1]`.
pub fn eval_weight_expr(f: &WeightExpr, z: &Weight) -> Weight {
    f.eval(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn decimal_literals_are_exact() {
        assert_eq!(w("0.5"), Weight::from_ratio(1, 2).unwrap());
        assert_eq!(w("0.5").mul(&w("0.4")), w("0.2"));
        assert_eq!(w("1"), Weight::one());
        assert_eq!(w("1/3").to_string(), "1/3");
        assert_eq!(w("0.4096").to_string(), "0.4096");
        assert_eq!(w("0.05").to_string(), "0.05");
        assert_eq!(Weight::one().to_string(), "1.0");
        assert_eq!(Weight::zero().to_string(), "0.0");
    }

    #[test]
    fn rejects_out_of_range_and_garbage() {
        assert!(matches!("1.5".parse::<Weight>(), Err(WeightError::OutOfRange(_))));
        assert!(matches!("3/2".parse::<Weight>(), Err(WeightError::OutOfRange(_))));
        for bad in ["", ".", ".5", "1.", "a", "1/0", "0.5.5", "-0.1", "1/"] {
            assert!(bad.parse::<Weight>().is_err(), "{bad}");
        }
    }

    #[test]
    fn transformer_examples() {
        assert_eq!(eval_weight_expr(&WeightExpr::Arg, &w("0.4")), w("0.4"));
        let half = WeightExpr::mul(WeightExpr::Const(w("0.5")), WeightExpr::Arg);
        assert_eq!(eval_weight_expr(&half, &w("0.4")), w("0.2"));
        let capped = WeightExpr::min(WeightExpr::Const(w("0.3")), WeightExpr::Arg);
        assert_eq!(eval_weight_expr(&capped, &w("0.7")), w("0.3"));
    }
}
