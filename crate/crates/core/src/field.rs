//! Exact Gaussian rationals, the coefficient field of every computation in
//! this crate.
//!
//! A [`FieldElem`] is `re + im·i` with `re, im ∈ ℚ`. Elements with `im = 0`
//! are the ordinary rationals. Both parts are kept as reduced
//! [`BigRational`]s so equality is structural.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ParseError;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FieldElem {
    re: BigRational,
    im: BigRational,
}

impl FieldElem {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        FieldElem { re, im }
    }

    pub fn from_rational(re: BigRational) -> Self {
        FieldElem {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        FieldElem {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn conj(&self) -> Self {
        FieldElem {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `re² + im²`, the field norm down to ℚ.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(FieldElem {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = FieldElem::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Least common multiple of the denominators of both parts.
    pub fn denom_lcm(&self) -> BigInt {
        self.re.denom().lcm(self.im.denom())
    }

    /// Sign used for canonical scaling: the sign of the first nonzero part.
    pub fn leading_sign(&self) -> Ordering {
        if !self.re.is_zero() {
            self.re.cmp(&BigRational::zero())
        } else {
            self.im.cmp(&BigRational::zero())
        }
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> Self {
        FieldElem::from_int(n)
    }
}

impl From<BigRational> for FieldElem {
    fn from(r: BigRational) -> Self {
        FieldElem::from_rational(r)
    }
}

impl Ord for FieldElem {
    /// Lexicographic on `(re, im)`. Not a field ordering; only used to sort
    /// places deterministically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }
}

impl PartialOrd for FieldElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &'a FieldElem) -> FieldElem {
                (&self).$method(rhs)
            }
        }
    };
}

impl<'a> Add<&'a FieldElem> for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &'a FieldElem) -> FieldElem {
        FieldElem {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a FieldElem> for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &'a FieldElem) -> FieldElem {
        FieldElem {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a FieldElem> for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &'a FieldElem) -> FieldElem {
        if self.im.is_zero() && rhs.im.is_zero() {
            return FieldElem::from_rational(&self.re * &rhs.re);
        }
        FieldElem {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl<'a> Div<&'a FieldElem> for &FieldElem {
    type Output = FieldElem;
    /// Panics on division by zero, like the integer types.
    fn div(self, rhs: &'a FieldElem) -> FieldElem {
        if rhs.im.is_zero() {
            return FieldElem {
                re: &self.re / &rhs.re,
                im: &self.im / &rhs.re,
            };
        }
        self * &rhs.inv().expect("division by zero FieldElem")
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, rhs: &FieldElem) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&FieldElem> for FieldElem {
    fn sub_assign(&mut self, rhs: &FieldElem) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&FieldElem> for FieldElem {
    fn mul_assign(&mut self, rhs: &FieldElem) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Serializes as `a/b` for rationals and `a/b+c/d*i` otherwise. Integral
/// parts drop the `/1`.
impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rational(&self.re, f)?;
        if !self.im.is_zero() {
            f.write_str(if self.im.is_negative() { "-" } else { "+" })?;
            fmt_rational(&self.im.abs(), f)?;
            f.write_str("*i")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Parses an imaginary term such as `3/4*i`, `i` or `2i` (sign excluded).
fn parse_imag(s: &str) -> Option<BigRational> {
    let body = s.trim().strip_suffix('i')?.trim_end();
    let body = body.strip_suffix('*').unwrap_or(body).trim_end();
    if body.is_empty() {
        Some(BigRational::one())
    } else {
        parse_rational(body)
    }
}

impl FromStr for FieldElem {
    type Err = ParseError;

    /// Accepts `a`, `a/b`, `a/b+c/d*i`, `a/b-c/d*i`, `c/d*i` and `i`.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let bad = || ParseError::BadNumber(s.to_string());
        let t = s.trim();
        if !t.ends_with('i') {
            return parse_rational(t).map(FieldElem::from_rational).ok_or_else(bad);
        }
        // split at the last sign that is not the leading one
        let split = t
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        let (re_part, sign, im_part) = match split {
            Some(k) => (&t[..k], &t[k..k + 1], &t[k + 1..]),
            None => match t.strip_prefix('-') {
                Some(rest) => ("0", "-", rest),
                None => ("0", "+", t.strip_prefix('+').unwrap_or(t)),
            },
        };
        let re = parse_rational(re_part).ok_or_else(bad)?;
        let mut im = parse_imag(im_part).ok_or_else(bad)?;
        if sign == "-" {
            im = -im;
        }
        Ok(FieldElem { re, im })
    }
}
