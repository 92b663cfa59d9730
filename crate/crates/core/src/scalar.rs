//! Scalar backends.
//!
//! Two field implementations are provided: [`Rational`] (exact, arbitrary
//! precision) and [`Approx`] (an `f64` compared against a session tolerance).
//! Every algebraic type in this crate is generic over [`Scalar`], so a single
//! computation always runs on one backend.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar.
pub type Rational = BigRational;

/// Default comparison tolerance of the float backend.
pub const DEFAULT_FLOAT_TOLERANCE: f64 = 1e-9;

static FLOAT_TOLERANCE_BITS: AtomicU64 = AtomicU64::new(DEFAULT_FLOAT_TOLERANCE.to_bits());

/// Sets the tolerance used by [`Approx`] for zero tests and comparisons.
///
/// This is a process-wide session constant; set it once before computing.
pub fn set_float_tolerance(tol: f64) {
    assert!(tol.is_finite() && tol >= 0.0, "tolerance must be finite and non-negative");
    FLOAT_TOLERANCE_BITS.store(tol.to_bits(), Ordering::Relaxed);
}

pub fn float_tolerance() -> f64 {
    f64::from_bits(FLOAT_TOLERANCE_BITS.load(Ordering::Relaxed))
}

/// A field element usable by every algorithm in the crate.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// `true` for the exact backend.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }
    /// Exact conversion for [`Rational`]; nearest float for [`Approx`].
    fn from_rational(q: &Rational) -> Self;
    /// `None` for non-finite input.
    fn from_f64(x: f64) -> Option<Self>;
    fn to_f64(&self) -> f64;

    /// Zero test; tolerance-aware in the float backend.
    fn is_zero(&self) -> bool;
    /// Strictly positive beyond the tolerance.
    fn is_positive(&self) -> bool;
    /// Square root, if it exists in the backend (exact: perfect squares only).
    fn sqrt(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        (self.clone() - Self::one()).is_zero()
    }
    fn approx_eq(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).is_zero()
    }
    fn magnitude(&self) -> f64 {
        self.to_f64().abs()
    }
    fn recip(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x)
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn sqrt(&self) -> Option<Self> {
        if Signed::is_negative(self) {
            return None;
        }
        let (n, d) = (self.numer(), self.denom());
        let (rn, rd) = (n.sqrt(), d.sqrt());
        (&rn * &rn == *n && &rd * &rd == *d).then(|| BigRational::new(rn, rd))
    }
}

/// Floating-point scalar compared with the session tolerance.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Default)]
pub struct Approx(pub f64);

macro_rules! approx_binop {
    ($tr:ident, $f:ident, $op:tt) => {
        impl $tr for Approx {
            type Output = Approx;
            fn $f(self, rhs: Approx) -> Approx {
                Approx(self.0 $op rhs.0)
            }
        }
    };
}
approx_binop!(Add, add, +);
approx_binop!(Sub, sub, -);
approx_binop!(Mul, mul, *);
approx_binop!(Div, div, /);

impl Neg for Approx {
    type Output = Approx;
    fn neg(self) -> Approx {
        Approx(-self.0)
    }
}

impl Display for Approx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(&self.0, f)
    }
}

impl Scalar for Approx {
    const EXACT: bool = false;

    fn zero() -> Self {
        Approx(0.0)
    }
    fn one() -> Self {
        Approx(1.0)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Approx(num as f64 / den as f64)
    }
    fn from_rational(q: &Rational) -> Self {
        Approx(ToPrimitive::to_f64(q).unwrap_or(f64::NAN))
    }
    fn from_f64(x: f64) -> Option<Self> {
        x.is_finite().then_some(Approx(x))
    }
    fn to_f64(&self) -> f64 {
        self.0
    }
    fn is_zero(&self) -> bool {
        self.0.abs() <= float_tolerance()
    }
    fn is_positive(&self) -> bool {
        self.0 > float_tolerance()
    }
    fn sqrt(&self) -> Option<Self> {
        (self.0 >= -float_tolerance()).then(|| Approx(self.0.max(0.0).sqrt()))
    }
}

/// Error from [`parse_scalar`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse `{0}` as a scalar (expected an integer, a fraction like 1/2, or a decimal)")]
pub struct ParseScalarError(pub String);

/// Parses `"3"`, `"-1/2"` or a decimal like `"0.25"`/`"1e-3"` into an exact rational.
///
/// Decimals are converted exactly from their written digits, not via `f64`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseScalarError> {
    let err = || ParseScalarError(text.to_string());
    let t = text.trim();
    if t.is_empty() {
        return Err(err());
    }
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| err())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
        if Zero::is_zero(&d) {
            return Err(err());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Ok(n) = BigInt::from_str(t) {
        return Ok(BigRational::from_integer(n));
    }
    // decimal with optional exponent
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(pos) => (&t[..pos], t[pos + 1..].parse::<i32>().map_err(|_| err())?),
        None => (t, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty()
        || !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(err());
    }
    let digits = format!("{int_part}{frac_part}");
    let mut value = BigRational::from_integer(BigInt::from_str(&digits).map_err(|_| err())?);
    let scale = exponent - frac_part.len() as i32;
    let ten = BigRational::from_integer(BigInt::from(10));
    let factor = num_traits::pow(ten, scale.unsigned_abs() as usize);
    if scale >= 0 {
        value *= factor;
    } else {
        value /= factor;
    }
    Ok(if neg { -value } else { value })
}

/// Parses a scalar written as a fraction or decimal into the chosen backend.
pub fn parse_scalar<S: Scalar>(text: &str) -> Result<S, ParseScalarError> {
    if S::EXACT {
        parse_rational(text).map(|q| S::from_rational(&q))
    } else {
        // fractions are still accepted in float mode
        match text.trim().parse::<f64>().ok().and_then(S::from_f64) {
            Some(x) => Ok(x),
            None => parse_rational(text).map(|q| S::from_rational(&q)),
        }
    }
}
