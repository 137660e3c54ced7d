//! Number fields the polynomial machinery runs over.
//!
//! Every algorithm in this crate is generic over [`Field`]. Two fields are
//! provided: exact big rationals ([`Rational`], the default) and
//! arbitrary-precision binary floats ([`Real`]) for irrational parameters
//! such as `beta = e`. A job picks one field up front; the two are never mixed
//! inside a computation.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::atomic::{AtomicU32, Ordering as AtomicOrdering};
use std::sync::OnceLock;

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

use crate::cache::FieldCaches;
use crate::error::{Error, Result};

pub use rug::{Integer, Rational};

/// Default mantissa size of [`Real`] values.
pub const DEFAULT_PRECISION_BITS: u32 = 256;

/// Environment variable that overrides [`DEFAULT_PRECISION_BITS`].
pub const PRECISION_ENV: &str = "HARDEDGE_PRECISION_BITS";

static PRECISION_BITS: AtomicU32 = AtomicU32::new(DEFAULT_PRECISION_BITS);

/// Mantissa bits used when new [`Real`] values are created.
pub fn precision_bits() -> u32 {
    PRECISION_BITS.load(AtomicOrdering::Relaxed)
}

/// Sets the mantissa size for [`Real`] values created from now on.
pub fn set_precision_bits(bits: u32) {
    PRECISION_BITS.store(bits.max(64), AtomicOrdering::Relaxed);
}

/// Applies `HARDEDGE_PRECISION_BITS` if it is set. Returns the active precision.
pub fn init_precision_from_env() -> Result<u32> {
    if let Ok(raw) = std::env::var(PRECISION_ENV) {
        let bits: u32 = raw
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{PRECISION_ENV}={raw} is not a bit count")))?;
        set_precision_bits(bits);
    }
    Ok(precision_bits())
}

/// Converts any field element to a high-precision real.
pub fn to_real<F: Field>(v: &F) -> Real {
    if let Some(q) = v.to_rational() {
        return Real::from_rational(&q);
    }
    if let Some(r) = (v as &dyn std::any::Any).downcast_ref::<Real>() {
        return r.clone();
    }
    Real::parse_decimal(&v.to_decimal(precision_bits() as usize / 3 + 10)).unwrap_or_else(|_| Real::from_f64(v.to_f64()))
}

/// The operations the symbolic-numeric code needs from its coefficient field.
pub trait Field:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + for<'a> DivAssign<&'a Self>
{
    /// True when arithmetic is exact and equality tests are decisive.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_rational(q: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn to_f64(&self) -> f64;

    /// The value as a machine integer, if it is exactly one.
    fn to_integer(&self) -> Option<i64>;

    fn gamma(&self) -> Result<Self>;
    fn exp(&self) -> Result<Self>;
    fn ln(&self) -> Result<Self>;
    fn pi() -> Result<Self>;

    /// `self^e` for `self > 0` (or integer `e`).
    fn powf(&self, e: &Self) -> Result<Self>;

    /// A key that identifies the value for memoization.
    fn cache_key(&self) -> String;

    /// Per-field memoization tables.
    fn caches() -> &'static FieldCaches<Self>;

    /// The exact rational value, when the field is exact.
    fn to_rational(&self) -> Option<Rational>;

    /// Decimal rendering with `digits` significant digits.
    fn to_decimal(&self, digits: usize) -> String;

    /// Parses a decimal literal into the field (exactly, for rationals).
    fn parse_decimal(s: &str) -> Result<Self>;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(&Rational::from((num, den)))
    }

    fn from_integer(n: &Integer) -> Self {
        Self::from_rational(&Rational::from(n))
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r *= other;
        r
    }

    fn add_ref(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r += other;
        r
    }

    fn sub_ref(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r -= other;
        r
    }

    fn div_ref(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r /= other;
        r
    }

    fn recip(&self) -> Self {
        Self::one() / self.clone()
    }

    fn abs(&self) -> Self {
        if self.sign() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn sign(&self) -> Ordering {
        self.partial_cmp(&Self::zero()).unwrap_or(Ordering::Equal)
    }

    fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    /// Integer power by repeated squaring; negative exponents invert.
    fn powi(&self, k: i64) -> Self {
        let mut base = if k < 0 { self.recip() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            e >>= 1;
            if e > 0 {
                let b = base.clone();
                base *= &b;
            }
        }
        acc
    }

    /// True if the value is an integer `<= 0` (a pole of Gamma).
    fn is_nonpositive_integer(&self) -> bool {
        matches!(self.to_integer(), Some(v) if v <= 0)
    }
}

fn factorial_integer(n: u64) -> Integer {
    Integer::from(Integer::factorial(n as u32))
}

impl Field for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Rational::new()
    }

    fn one() -> Self {
        Rational::from(1)
    }

    fn from_i64(v: i64) -> Self {
        Rational::from(v)
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn is_zero(&self) -> bool {
        self.cmp0() == Ordering::Equal
    }

    fn to_f64(&self) -> f64 {
        Rational::to_f64(self)
    }

    fn to_integer(&self) -> Option<i64> {
        if *self.denom() == 1 {
            self.numer().to_i64()
        } else {
            None
        }
    }

    fn gamma(&self) -> Result<Self> {
        match self.to_integer() {
            Some(v) if v >= 1 => Ok(Rational::from(factorial_integer((v - 1) as u64))),
            Some(v) => Err(Error::Domain(format!("Gamma has a pole at {v}"))),
            None => Err(Error::NotExact(format!("Gamma({self})"))),
        }
    }

    fn exp(&self) -> Result<Self> {
        if Field::is_zero(self) {
            Ok(Self::one())
        } else {
            Err(Error::NotExact(format!("exp({self})")))
        }
    }

    fn ln(&self) -> Result<Self> {
        if *self == 1 {
            Ok(Self::zero())
        } else {
            Err(Error::NotExact(format!("ln({self})")))
        }
    }

    fn pi() -> Result<Self> {
        Err(Error::NotExact("pi".into()))
    }

    fn powf(&self, e: &Self) -> Result<Self> {
        if let Some(k) = e.to_integer() {
            if Field::is_zero(self) && k < 0 {
                return Err(Error::Domain("0 raised to a negative power".into()));
            }
            let k32 = i32::try_from(k).map_err(|_| Error::Domain(format!("exponent {k} too large")))?;
            return Ok(self.clone().pow(k32));
        }
        if *self == 1 {
            return Ok(Self::one());
        }
        if Field::is_zero(self) && e.is_positive() {
            return Ok(Self::zero());
        }
        Err(Error::NotExact(format!("({self})^({e})")))
    }

    fn cache_key(&self) -> String {
        self.to_string()
    }

    fn caches() -> &'static FieldCaches<Self> {
        static CACHES: OnceLock<FieldCaches<Rational>> = OnceLock::new();
        CACHES.get_or_init(FieldCaches::default)
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn to_decimal(&self, digits: usize) -> String {
        Real::from_rational(self).to_decimal(digits)
    }

    fn parse_decimal(s: &str) -> Result<Self> {
        match s.parse::<Scalar>()? {
            Scalar::Exact(q) => Ok(q),
            Scalar::Real(_) => Err(Error::NotExact(s.to_string())),
        }
    }
}

/// Arbitrary-precision binary float (MPFR). New values use [`precision_bits`].
#[derive(Clone, Debug, PartialEq, PartialOrd)]
pub struct Real(Float);

impl Real {
    pub fn new(value: Float) -> Self {
        Real(value)
    }

    pub fn from_f64(v: f64) -> Self {
        Real(Float::with_val(precision_bits(), v))
    }

    /// Euler's number at the current precision.
    pub fn e() -> Self {
        Real(Float::with_val(precision_bits(), 1).exp())
    }

    pub fn as_float(&self) -> &Float {
        &self.0
    }

    pub fn into_float(self) -> Float {
        self.0
    }

    pub fn precision(&self) -> u32 {
        self.0.prec()
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        self.0.to_string_radix(10, Some(digits))
    }

    /// Parses a decimal literal at the current precision.
    pub fn parse_decimal(s: &str) -> Result<Self> {
        let parsed = Float::parse(s.trim()).map_err(|e| Error::Parse(format!("{s}: {e}")))?;
        Ok(Real(Float::with_val(precision_bits(), parsed)))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(40))
    }
}

macro_rules! real_binop {
    ($tr:ident, $method:ident, $atr:ident, $amethod:ident) => {
        impl $tr for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                Real($tr::$method(self.0, rhs.0))
            }
        }
        impl<'a> $atr<&'a Real> for Real {
            fn $amethod(&mut self, rhs: &'a Real) {
                $atr::$amethod(&mut self.0, &rhs.0);
            }
        }
    };
}

real_binop!(Add, add, AddAssign, add_assign);
real_binop!(Sub, sub, SubAssign, sub_assign);
real_binop!(Mul, mul, MulAssign, mul_assign);
real_binop!(Div, div, DivAssign, div_assign);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-self.0)
    }
}

impl Field for Real {
    const EXACT: bool = false;

    fn zero() -> Self {
        Real(Float::new(precision_bits()))
    }

    fn one() -> Self {
        Real(Float::with_val(precision_bits(), 1))
    }

    fn from_i64(v: i64) -> Self {
        Real(Float::with_val(precision_bits(), v))
    }

    fn from_rational(q: &Rational) -> Self {
        Real(Float::with_val(precision_bits(), q))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    fn to_integer(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.to_integer().and_then(|i| i.to_i64())
        } else {
            None
        }
    }

    fn gamma(&self) -> Result<Self> {
        if self.is_nonpositive_integer() {
            return Err(Error::Domain(format!("Gamma has a pole at {}", self.to_decimal(20))));
        }
        Ok(Real(self.0.clone().gamma()))
    }

    fn exp(&self) -> Result<Self> {
        Ok(Real(self.0.clone().exp()))
    }

    fn ln(&self) -> Result<Self> {
        if !self.is_positive() {
            return Err(Error::Domain(format!("ln of non-positive {}", self.to_decimal(20))));
        }
        Ok(Real(self.0.clone().ln()))
    }

    fn pi() -> Result<Self> {
        Ok(Real(Float::with_val(precision_bits(), Constant::Pi)))
    }

    fn powf(&self, e: &Self) -> Result<Self> {
        if let Some(k) = e.to_integer() {
            if Field::is_zero(self) && k < 0 {
                return Err(Error::Domain("0 raised to a negative power".into()));
            }
            return Ok(self.powi(k));
        }
        if self.sign() == Ordering::Less {
            return Err(Error::Domain("negative base with non-integer exponent".into()));
        }
        Ok(Real(self.0.clone().pow(&e.0)))
    }

    fn cache_key(&self) -> String {
        self.0.to_string_radix(16, None)
    }

    fn caches() -> &'static FieldCaches<Self> {
        static CACHES: OnceLock<FieldCaches<Real>> = OnceLock::new();
        CACHES.get_or_init(FieldCaches::default)
    }

    fn to_rational(&self) -> Option<Rational> {
        None
    }

    fn to_decimal(&self, digits: usize) -> String {
        Real::to_decimal(self, digits)
    }

    fn parse_decimal(s: &str) -> Result<Self> {
        Real::parse_decimal(s)
    }
}

/// A user-facing parameter value: exact rational or high-precision real.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(Rational),
    Real(Real),
}

impl Scalar {
    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::Exact(Rational::from((num, den)))
    }

    pub fn int(v: i64) -> Self {
        Scalar::Exact(Rational::from(v))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Exact(q) => Some(q),
            Scalar::Real(_) => None,
        }
    }

    /// Converts into field `F`. Fails when a real is requested as a rational.
    pub fn to_field<F: Field>(&self) -> Result<F> {
        match self {
            Scalar::Exact(q) => Ok(F::from_rational(q)),
            Scalar::Real(r) => {
                if F::EXACT {
                    Err(Error::NotExact(format!("{} is not rational", r.to_decimal(20))))
                } else {
                    // Re-round through the float's exact rational value.
                    let q = r.0.to_rational().ok_or_else(|| Error::Domain("non-finite real".into()))?;
                    Ok(F::from_rational(&q))
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(q) => q.to_f64(),
            Scalar::Real(r) => r.0.to_f64(),
        }
    }

    /// The value as a machine integer, if it is exactly one.
    pub fn to_integer(&self) -> Option<i64> {
        match self {
            Scalar::Exact(q) => Field::to_integer(q),
            Scalar::Real(r) => Field::to_integer(r),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(q) => write!(f, "{q}"),
            Scalar::Real(r) if *r == Real::e() => write!(f, "e"),
            Scalar::Real(r) => write!(f, "{r}"),
        }
    }
}

/// Accepts `p/q`, integers, finite decimals (kept exact) and the literal `e`.
impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "e" {
            return Ok(Scalar::Real(Real::e()));
        }
        if let Some((num, den)) = t.split_once('/') {
            let num: Integer = num.trim().parse().map_err(|_| Error::Parse(format!("bad numerator in {t:?}")))?;
            let den: Integer = den.trim().parse().map_err(|_| Error::Parse(format!("bad denominator in {t:?}")))?;
            if den == 0 {
                return Err(Error::Parse(format!("zero denominator in {t:?}")));
            }
            return Ok(Scalar::Exact(Rational::from((num, den))));
        }
        if let Ok(i) = t.parse::<Integer>() {
            return Ok(Scalar::Exact(Rational::from(i)));
        }
        parse_decimal_exact(t)
            .map(Scalar::Exact)
            .ok_or_else(|| Error::Parse(format!("cannot parse {t:?} as a number")))
    }
}

fn parse_decimal_exact(t: &str) -> Option<Rational> {
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(pos) => (&t[..pos], t[pos + 1..].parse::<i32>().ok()?),
        None => (t, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: Integer = format!("{int_part}{frac_part}0").parse().ok()?;
    let scale = exponent - frac_part.len() as i32 - 1;
    let ten = Rational::from(10);
    let mut q = Rational::from(all) * ten.pow(scale);
    if neg {
        q = -q;
    }
    Some(q)
}
