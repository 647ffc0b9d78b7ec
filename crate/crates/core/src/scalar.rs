//! Exact arithmetic in the golden-ratio field `Q(φ)`, `φ = (1 + √5) / 2`.
//!
//! Rationals are the elements with vanishing `φ` part, so a single type
//! covers both crystallographic coordinates and the `H₃`/`H₄` coordinates.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// An element `a + b·φ` with `a`, `b` rational.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactScalar {
    a: BigRational,
    b: BigRational,
}

impl ExactScalar {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Self { a, b }
    }

    pub fn rational(a: BigRational) -> Self {
        Self { a, b: BigRational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        Self::rational(BigRational::new(p.into(), q.into()))
    }

    /// `a + b·φ` with integer parts.
    pub fn golden(a: i64, b: i64) -> Self {
        Self {
            a: BigRational::from_integer(a.into()),
            b: BigRational::from_integer(b.into()),
        }
    }

    pub fn phi() -> Self {
        Self::golden(0, 1)
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn phi_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.a.is_integer()
    }

    /// Integer parts `(a, b)` when both are integers, i.e. the element lies in `Z[φ]`.
    pub fn to_golden_integers(&self) -> Option<(i64, i64)> {
        if self.a.is_integer() && self.b.is_integer() {
            Some((self.a.to_integer().to_i64()?, self.b.to_integer().to_i64()?))
        } else {
            None
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.a.to_integer())
    }

    /// Sign of `a + bφ`, decided exactly.
    ///
    /// Writing the value as `x + y√5` with `x = a + b/2`, `y = b/2`, the sign
    /// is read off directly unless `x` and `y` have opposite signs, in which
    /// case `x²` is compared with `5y²`.
    pub fn signum(&self) -> i8 {
        let half = BigRational::new(1.into(), 2.into());
        let y = &self.b * &half;
        let x = &self.a + &y;
        let sx = sign_of(&x);
        let sy = sign_of(&y);
        if sy == 0 {
            return sx;
        }
        if sx == 0 || sx == sy {
            return sy;
        }
        let five = BigRational::from_integer(5.into());
        match (&x * &x).cmp(&(five * &y * &y)) {
            Ordering::Greater => sx,
            Ordering::Less => sy,
            Ordering::Equal => 0,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    /// Field inverse; `None` for zero.
    ///
    /// `(a + bφ)(a + b - bφ) = a² + ab - b²`, the field norm.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.a * &self.a + &self.a * &self.b - &self.b * &self.b;
        let conj_a = &self.a + &self.b;
        let conj_b = -self.b.clone();
        Some(Self { a: conj_a / &norm, b: conj_b / &norm })
    }

    pub fn approx(&self) -> f64 {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * phi
    }
}

fn sign_of(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl PartialOrd for ExactScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl Add for &ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub for &ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Mul for &ExactScalar {
    type Output = ExactScalar;
    // φ² = φ + 1
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        let bb = &self.b * &rhs.b;
        ExactScalar {
            a: &self.a * &rhs.a + &bb,
            b: &self.a * &rhs.b + &self.b * &rhs.a + bb,
        }
    }
}

impl Div for &ExactScalar {
    type Output = ExactScalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &ExactScalar) -> ExactScalar {
        self * &rhs.inverse().expect("division by zero in ExactScalar")
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar { a: -self.a.clone(), b: -self.b.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, rhs: ExactScalar) -> ExactScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, rhs: &ExactScalar) -> ExactScalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}φ", self.b)
        } else {
            write!(f, "{}+{}φ", self.a, self.b)
        }
    }
}

/// Serialized form: `"p/q"` for rationals, `{"a": "p/q", "b": "p/q"}` otherwise.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ScalarRepr {
    Rational(String),
    Golden { a: String, b: String },
}

impl Serialize for ExactScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let repr = if self.b.is_zero() {
            ScalarRepr::Rational(ratio_string(&self.a))
        } else {
            ScalarRepr::Golden { a: ratio_string(&self.a), b: ratio_string(&self.b) }
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        match ScalarRepr::deserialize(d)? {
            ScalarRepr::Rational(s) => parse_ratio(&s).map(Self::rational).map_err(D::Error::custom),
            ScalarRepr::Golden { a, b } => {
                let a = parse_ratio(&a).map_err(D::Error::custom)?;
                let b = parse_ratio(&b).map_err(D::Error::custom)?;
                Ok(Self::new(a, b))
            }
        }
    }
}

fn ratio_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn parse_ratio(s: &str) -> Result<BigRational, Error> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p = BigInt::from_str(p).map_err(|_| bad())?;
    let q = BigInt::from_str(q).map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

impl FromStr for ExactScalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        parse_ratio(s).map(Self::rational)
    }
}
