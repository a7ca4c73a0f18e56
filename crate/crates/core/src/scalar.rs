//! Exact rational scalars.
//!
//! Values whose numerator and denominator fit in an `i64` are stored inline;
//! anything larger spills into a boxed [`BigRational`]. The representation is
//! canonical (lowest terms, positive denominator, inline whenever it fits), so
//! structural equality and hashing coincide with numeric equality.

use alloc::boxed::Box;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64, i64),
    Big(Box<BigRational>),
}

/// An exact rational number in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

/// Error returned when parsing a rational literal such as `"-3/4"`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal `{literal}`: {reason}")]
pub struct ParseScalarError {
    pub literal: String,
    pub reason: &'static str,
}

const SMALL_MAX: i128 = i64::MAX as i128;

impl Scalar {
    pub const ZERO: Scalar = Scalar(Repr::Small(0, 1));
    pub const ONE: Scalar = Scalar(Repr::Small(1, 1));

    #[inline]
    pub fn zero() -> Self {
        Self::ZERO
    }

    #[inline]
    pub fn one() -> Self {
        Self::ONE
    }

    #[inline]
    pub fn from_int(n: i64) -> Self {
        Self::from_i128(n as i128, 1)
    }

    /// `num / den`, reduced. Returns `None` when `den == 0`.
    pub fn new(num: i64, den: i64) -> Option<Self> {
        if den == 0 {
            None
        } else {
            Some(Self::from_i128(num as i128, den as i128))
        }
    }

    pub fn from_big(value: BigRational) -> Self {
        let (n, d) = (value.numer(), value.denom());
        if let (Some(n), Some(d)) = (n.to_i64(), d.to_i64()) {
            if n != i64::MIN && d > 0 {
                return Scalar(Repr::Small(n, d));
            }
        }
        Scalar(Repr::Big(Box::new(value)))
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
        if num == 0 {
            return Self::ZERO;
        }
        if den != 1 {
            let g = num.unsigned_abs().gcd(&den.unsigned_abs()) as i128;
            if g > 1 {
                num /= g;
                den /= g;
            }
        }
        Self::from_reduced_i128(num, den)
    }

    #[inline]
    fn from_reduced_i128(num: i128, den: i128) -> Self {
        if num.abs() <= SMALL_MAX && den <= SMALL_MAX {
            Scalar(Repr::Small(num as i64, den as i64))
        } else {
            Scalar(Repr::Big(Box::new(BigRational::new_raw(
                BigInt::from(num),
                BigInt::from(den),
            ))))
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }

    /// The value as an `i64` if it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small(n, 1) => Some(*n),
            _ => None,
        }
    }

    /// `(numerator, denominator)` when both fit in an `i64`.
    #[inline]
    pub fn as_small(&self) -> Option<(i64, i64)> {
        match &self.0 {
            Repr::Small(n, d) => Some((*n, *d)),
            Repr::Big(_) => None,
        }
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

    pub fn recip(&self) -> Option<Self> {
        match &self.0 {
            Repr::Small(0, _) => None,
            Repr::Small(n, d) => Some(Self::from_i128(*d as i128, *n as i128)),
            Repr::Big(b) => Some(Self::from_big(b.recip())),
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    fn add_ref(&self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(s) = a.checked_add(*c) {
                        if s != i64::MIN {
                            return Scalar(Repr::Small(s, 1));
                        }
                    }
                    return Self::from_reduced_i128(*a as i128 + *c as i128, 1);
                }
                if b == d {
                    return Self::from_i128(*a as i128 + *c as i128, *b as i128);
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Self::from_i128(a * d + c * b, b * d)
            }
            _ => Self::from_big(self.to_big() + other.to_big()),
        }
    }

    fn mul_ref(&self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Small(0, _), _) | (_, Repr::Small(0, _)) => Self::ZERO,
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(p) = a.checked_mul(*c) {
                        if p != i64::MIN {
                            return Scalar(Repr::Small(p, 1));
                        }
                    }
                    return Self::from_reduced_i128(*a as i128 * *c as i128, 1);
                }
                // cross-cancel so the product is already reduced
                let g1 = a.unsigned_abs().gcd(&d.unsigned_abs()) as i128;
                let g2 = c.unsigned_abs().gcd(&b.unsigned_abs()) as i128;
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Self::from_reduced_i128((a / g1) * (c / g2), (b / g2) * (d / g1))
            }
            _ => Self::from_big(self.to_big() * other.to_big()),
        }
    }

    fn neg_ref(&self) -> Scalar {
        match &self.0 {
            Repr::Small(n, d) => Scalar(Repr::Small(-*n, *d)),
            Repr::Big(b) => Self::from_big(-(**b).clone()),
        }
    }

    /// `self += a * b` without an intermediate allocation in the inline case.
    #[inline]
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let p = a.mul_ref(b);
        *self = self.add_ref(&p);
    }

    /// `self -= a * b`.
    #[inline]
    pub fn sub_mul(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let p = a.mul_ref(b);
        *self = self.add_ref(&p.neg_ref());
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<i32> for Scalar {
    fn from(n: i32) -> Self {
        Self::from_int(n as i64)
    }
}

impl From<BigRational> for Scalar {
    fn from(value: BigRational) -> Self {
        Self::from_big(value)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason| ParseScalarError {
            literal: String::from(s),
            reason,
        };
        let t = s.trim();
        if t.is_empty() {
            return Err(err("empty"));
        }
        let (num, den) = match t.split_once('/') {
            Some((p, q)) => (p.trim(), Some(q.trim())),
            None => (t, None),
        };
        let valid = |x: &str| {
            let digits = x.strip_prefix(['-', '+']).unwrap_or(x);
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        if !valid(num) || den.is_some_and(|d| !valid(d)) {
            return Err(err("expected an integer or p/q with integer p, q"));
        }
        let num = num.strip_prefix('+').unwrap_or(num);
        let p = BigInt::parse_bytes(num.as_bytes(), 10).ok_or_else(|| err("bad numerator"))?;
        let q = match den {
            Some(d) => {
                let d = d.strip_prefix('+').unwrap_or(d);
                BigInt::parse_bytes(d.as_bytes(), 10).ok_or_else(|| err("bad denominator"))?
            }
            None => BigInt::one(),
        };
        if q.is_zero() {
            return Err(err("zero denominator"));
        }
        Ok(Self::from_big(BigRational::new(p, q)))
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            #[inline]
            fn $method(self, rhs: &Scalar) -> Scalar {
                let f: fn(&Scalar, &Scalar) -> Scalar = $body;
                f(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            #[inline]
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            #[inline]
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            #[inline]
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_ref(b));
forward_binop!(Sub, sub, |a, b| a.add_ref(&b.neg_ref()));
forward_binop!(Mul, mul, |a, b| a.mul_ref(b));
forward_binop!(Div, div, |a, b| a.mul_ref(
    &b.recip().expect("division by zero rational")
));

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.add_ref(rhs);
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = self.add_ref(&rhs);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = self.add_ref(&rhs.neg_ref());
    }
}

impl SubAssign<Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = self.add_ref(&rhs.neg_ref());
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = self.mul_ref(rhs);
    }
}

impl core::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::ZERO, |acc, x| acc + x)
    }
}

impl<'a> core::iter::Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::ZERO, |acc, x| acc + x)
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = <String as serde::Deserialize>::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand for `Scalar::new(p, q).unwrap()` in tests and tables.
pub fn q(p: i64, d: i64) -> Scalar {
    Scalar::new(p, d).expect("zero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    #[test]
    fn canonical_forms() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(3, -6), q(-1, 2));
        assert_eq!(q(0, -5), Scalar::ZERO);
        assert_eq!(q(0, 7).to_string(), "0");
        assert_eq!(q(-6, 4).to_string(), "-3/2");
        assert_eq!(Scalar::new(1, 0), None);
    }

    #[test]
    fn parse_literals() {
        assert_eq!("1/3".parse::<Scalar>().unwrap(), q(1, 3));
        assert_eq!("-4/6".parse::<Scalar>().unwrap(), q(-2, 3));
        assert_eq!("7".parse::<Scalar>().unwrap(), Scalar::from_int(7));
        assert!("0.5".parse::<Scalar>().is_err());
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("".parse::<Scalar>().is_err());
        assert!("1/".parse::<Scalar>().is_err());
    }

    #[test]
    fn overflow_spills_to_big_and_back() {
        let big = Scalar::from_int(i64::MAX) * Scalar::from_int(i64::MAX);
        assert!(matches!(big.0, Repr::Big(_)));
        let back = &big / &Scalar::from_int(i64::MAX);
        assert_eq!(back, Scalar::from_int(i64::MAX));
        assert!(matches!(back.0, Repr::Small(..)));
        let x = q(1, i64::MAX) + q(1, i64::MAX - 1);
        let y = x.clone() - q(1, i64::MAX - 1);
        assert_eq!(y, q(1, i64::MAX));
        let m = Scalar::from_int(i64::MIN + 1) - Scalar::ONE;
        assert_eq!(m.to_string(), "-9223372036854775808");
        assert_eq!(m + Scalar::ONE, Scalar::from_int(i64::MIN + 1));
    }

    fn small() -> impl Strategy<Value = Scalar> {
        (-1000i64..1000, 1i64..50).prop_map(|(a, b)| q(a, b))
    }

    fn wide() -> impl Strategy<Value = Scalar> {
        (any::<i64>(), 1i64..i64::MAX).prop_map(|(a, b)| {
            Scalar::from_big(BigRational::new(BigInt::from(a), BigInt::from(b)))
        })
    }

    proptest! {
        #[test]
        fn field_laws_match_bigrational(a in wide(), b in wide(), c in small()) {
            let (ba, bb, bc) = (a.to_big(), b.to_big(), c.to_big());
            prop_assert_eq!((&a + &b).to_big(), &ba + &bb);
            prop_assert_eq!((&a - &b).to_big(), &ba - &bb);
            prop_assert_eq!((&a * &b).to_big(), &ba * &bb);
            prop_assert_eq!(((&a + &b) * &c).to_big(), (&ba + &bb) * &bc);
            if !b.is_zero() {
                prop_assert_eq!((&a / &b).to_big(), &ba / &bb);
            }
            prop_assert_eq!(a.cmp(&b), ba.cmp(&bb));
        }

        #[test]
        fn display_parse_roundtrip(a in wide()) {
            let s = a.to_string();
            prop_assert_eq!(s.parse::<Scalar>().unwrap(), a);
        }
    }
}
