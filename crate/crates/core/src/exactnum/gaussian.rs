//! Exact scalars of the Gaussian rational field ℚ(i).

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{ExactError, Field, Ring};

/// An element `(re_num + im_num·i) / den` of ℚ(i).
///
/// The representation is canonical: `den > 0` and
/// `gcd(re_num, im_num, den) = 1`, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re_num: BigInt,
    im_num: BigInt,
    den: BigInt,
}

impl GaussianRational {
    pub fn new(re_num: impl Into<BigInt>, im_num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        let den = den.into();
        assert!(!den.is_zero(), "zero denominator");
        Self::normalized(re_num.into(), im_num.into(), den)
    }

    fn normalized(mut re: BigInt, mut im: BigInt, mut den: BigInt) -> Self {
        if re.is_zero() && im.is_zero() {
            return Self::zero();
        }
        if den.is_negative() {
            re = -re;
            im = -im;
            den = -den;
        }
        let g = re.gcd(&im).gcd(&den);
        if !g.is_one() {
            re /= &g;
            im /= &g;
            den /= &g;
        }
        GaussianRational { re_num: re, im_num: im, den }
    }

    pub fn zero() -> Self {
        GaussianRational { re_num: BigInt::zero(), im_num: BigInt::zero(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational { re_num: BigInt::zero(), im_num: BigInt::one(), den: BigInt::one() }
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational { re_num: BigInt::from(n), im_num: BigInt::zero(), den: BigInt::one() }
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::new(num, 0, den)
    }

    /// `re + im·i` with integer parts.
    pub fn gaussian_int(re: i64, im: i64) -> Self {
        Self::new(re, im, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re_num.is_zero() && self.im_num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re_num.is_one() && self.im_num.is_zero() && self.den.is_one()
    }

    pub fn is_real(&self) -> bool {
        self.im_num.is_zero()
    }

    pub fn re_num(&self) -> &BigInt {
        &self.re_num
    }

    pub fn im_num(&self) -> &BigInt {
        &self.im_num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn re(&self) -> Self {
        Self::normalized(self.re_num.clone(), BigInt::zero(), self.den.clone())
    }

    pub fn im(&self) -> Self {
        Self::normalized(self.im_num.clone(), BigInt::zero(), self.den.clone())
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re_num: self.re_num.clone(), im_num: -&self.im_num, den: self.den.clone() }
    }

    /// `|z|²` as a rational number (imaginary part zero).
    pub fn abs_squared(&self) -> Self {
        let num = &self.re_num * &self.re_num + &self.im_num * &self.im_num;
        Self::normalized(num, BigInt::zero(), &self.den * &self.den)
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        // 1/((a+bi)/d) = d(a-bi)/(a²+b²)
        let norm = &self.re_num * &self.re_num + &self.im_num * &self.im_num;
        Ok(Self::normalized(&self.den * &self.re_num, -(&self.den * &self.im_num), norm))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ExactError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, exp: i32) -> Result<Self, ExactError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..exp.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// The value as a small integer, if it is one.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_real() && self.den.is_one() {
            self.re_num.to_i64()
        } else {
            None
        }
    }

}

impl Default for GaussianRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<i32> for GaussianRational {
    fn from(n: i32) -> Self {
        Self::from_int(n as i64)
    }
}

impl From<BigInt> for GaussianRational {
    fn from(n: BigInt) -> Self {
        GaussianRational { re_num: n, im_num: BigInt::zero(), den: BigInt::one() }
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        if self.den == rhs.den {
            return GaussianRational::normalized(
                &self.re_num + &rhs.re_num,
                &self.im_num + &rhs.im_num,
                self.den.clone(),
            );
        }
        GaussianRational::normalized(
            &self.re_num * &rhs.den + &rhs.re_num * &self.den,
            &self.im_num * &rhs.den + &rhs.im_num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.is_zero() || rhs.is_zero() {
            return GaussianRational::zero();
        }
        GaussianRational::normalized(
            &self.re_num * &rhs.re_num - &self.im_num * &rhs.im_num,
            &self.re_num * &rhs.im_num + &self.im_num * &rhs.re_num,
            &self.den * &rhs.den,
        )
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re_num: -&self.re_num, im_num: -&self.im_num, den: self.den.clone() }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re_num: -self.re_num, im_num: -self.im_num, den: self.den }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

/// Panics on a zero divisor; use [`GaussianRational::checked_div`] for the
/// fallible form.
impl Div for GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: GaussianRational) -> GaussianRational {
        self.checked_div(&rhs).expect("division by zero")
    }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for GaussianRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| &acc + &x)
    }
}

impl Ring for GaussianRational {
    fn zero() -> Self {
        GaussianRational::zero()
    }
    fn one() -> Self {
        GaussianRational::one()
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Field for GaussianRational {
    fn inv(&self) -> Option<Self> {
        GaussianRational::inv(self).ok()
    }
}

fn fmt_rational(num: &BigInt, den: &BigInt) -> String {
    let g = num.gcd(den);
    let (n, d) = (num / &g, den / &g);
    if d.is_one() {
        n.to_string()
    } else {
        format!("{n}/{d}")
    }
}

/// Canonical text form: `a/c+b/c*i` with each part in lowest terms, e.g.
/// `1/2+1/2*i`, `-3`, `i`, `-1/2*i`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        if !self.re_num.is_zero() {
            out.push_str(&fmt_rational(&self.re_num, &self.den));
        }
        if !self.im_num.is_zero() {
            let mag = fmt_rational(&self.im_num.abs(), &self.den);
            let neg = self.im_num.is_negative();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if mag == "1" {
                out.push('i');
            } else {
                out.push_str(&mag);
                out.push_str("*i");
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str) -> Result<(BigInt, BigInt), ExactError> {
    let bad = || ExactError::Parse(s.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok((n, d))
}

fn parse_term(term: &str) -> Result<GaussianRational, ExactError> {
    let bad = || ExactError::Parse(term.to_string());
    let (sign, body) = match term.as_bytes().first() {
        Some(b'-') => (-1, &term[1..]),
        Some(b'+') => (1, &term[1..]),
        _ => (1, term),
    };
    if body.is_empty() {
        return Err(bad());
    }
    let value = if let Some(coef) = body.strip_suffix('i') {
        let coef = coef.strip_suffix('*').unwrap_or(coef);
        let (n, d) = if coef.is_empty() { (BigInt::one(), BigInt::one()) } else { parse_rational(coef)? };
        GaussianRational::normalized(BigInt::zero(), n, d)
    } else {
        let (n, d) = parse_rational(body)?;
        GaussianRational::normalized(n, BigInt::zero(), d)
    };
    Ok(if sign < 0 { -value } else { value })
}

impl FromStr for GaussianRational {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(ExactError::Parse(s));
        }
        // split at a sign that is not the leading character
        let split = s.char_indices().skip(1).find(|&(_, c)| c == '+' || c == '-').map(|(k, _)| k);
        match split {
            Some(k) => Ok(parse_term(&s[..k])? + parse_term(&s[k..])?),
            None => parse_term(&s),
        }
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn spec_examples() {
        let a = GaussianRational::new(1, 1, 2);
        let b = GaussianRational::new(1, -1, 2);
        assert_eq!(&a * &b, GaussianRational::ratio(1, 2));
        assert_eq!(GaussianRational::i().inv().unwrap(), -GaussianRational::i());
        assert_eq!(GaussianRational::ratio(1, 3) + GaussianRational::ratio(1, 6), GaussianRational::ratio(1, 2));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(GaussianRational::zero().inv(), Err(ExactError::DivisionByZero));
        assert!(GaussianRational::one().checked_div(&GaussianRational::zero()).is_err());
    }

    #[test]
    fn canonical_form() {
        let z = GaussianRational::new(2, 4, -4);
        assert_eq!(z.re_num(), &BigInt::from(-1));
        assert_eq!(z.im_num(), &BigInt::from(-2));
        assert_eq!(z.den(), &BigInt::from(2));
        assert_eq!(GaussianRational::new(0, 0, -7), GaussianRational::zero());
        assert_eq!(GaussianRational::zero().den(), &BigInt::one());
    }

    #[test]
    fn text_form() {
        assert_eq!(GaussianRational::new(1, 1, 2).to_string(), "1/2+1/2*i");
        assert_eq!(GaussianRational::new(1, 2, 4).to_string(), "1/4+1/2*i");
        assert_eq!(GaussianRational::i().to_string(), "i");
        assert_eq!((-GaussianRational::i()).to_string(), "-i");
        assert_eq!(GaussianRational::new(0, -1, 2).to_string(), "-1/2*i");
        assert_eq!(GaussianRational::from_int(-3).to_string(), "-3");
        for s in ["0", "1", "-1/2", "i", "-i", "3/4-5/6*i", "-2+i", "7/3*i"] {
            assert_eq!(q(s).to_string(), s);
        }
        assert!("1/0".parse::<GaussianRational>().is_err());
        assert!("x".parse::<GaussianRational>().is_err());
    }

    #[test]
    fn conjugate_and_parts() {
        let z = q("3/2-5*i");
        assert_eq!(z.conj(), q("3/2+5*i"));
        assert_eq!(z.re(), q("3/2"));
        assert_eq!(z.im(), q("-5"));
        assert_eq!(z.abs_squared(), q("109/4"));
    }
}
