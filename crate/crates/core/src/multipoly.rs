//! Sparse multivariate polynomials over ℚ in named variables.
//!
//! Used for the symbolic parameters of the classification arguments
//! (`a`, `b`, `p`, `q`, and the curve parameter `z` while building coefficient
//! matrices). Monomials are ordered lexicographically with variables sorted
//! by name, so `a` is the most significant variable.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ParseError;
use crate::field::FieldElem;
use crate::poly::UniPoly;

/// Power product; sorted by variable name, no zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(String, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(name: &str) -> Self {
        Monomial(vec![(name.to_string(), 1)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, var: &str) -> u32 {
        self.0
            .iter()
            .find(|(v, _)| v == var)
            .map_or(0, |&(_, e)| e)
    }

    pub fn vars(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(|(v, _)| v.as_str())
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out: BTreeMap<&str, u32> = BTreeMap::new();
        for (v, e) in self.0.iter().chain(other.0.iter()) {
            *out.entry(v.as_str()).or_insert(0) += e;
        }
        Monomial(out.into_iter().map(|(v, e)| (v.to_string(), e)).collect())
    }

    /// `self / other` if it is a monomial.
    fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out: BTreeMap<&str, i64> = self.0.iter().map(|(v, e)| (v.as_str(), *e as i64)).collect();
        for (v, e) in &other.0 {
            *out.entry(v.as_str()).or_insert(0) -= *e as i64;
        }
        if out.values().any(|&e| e < 0) {
            return None;
        }
        Some(Monomial(
            out.into_iter()
                .filter(|&(_, e)| e > 0)
                .map(|(v, e)| (v.to_string(), e as u32))
                .collect(),
        ))
    }

    fn without(&self, var: &str) -> Monomial {
        Monomial(self.0.iter().filter(|(v, _)| v != var).cloned().collect())
    }
}

impl Ord for Monomial {
    /// Lexicographic: the first variable (by name) whose exponents differ
    /// decides, larger exponent being larger.
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(v, e)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(name: &str) -> Self {
        Self::term(BigRational::one(), Monomial::var(name))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The value if this is a constant (zero included).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// `(c, m)` if this is the single term `c·m`.
    pub fn as_single_term(&self) -> Option<(&BigRational, &Monomial)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (c, m))
        } else {
            None
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn variables(&self) -> Vec<String> {
        let mut v: Vec<String> = self
            .terms
            .keys()
            .flat_map(|m| m.vars().map(str::to_string))
            .collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        self.terms.keys().map(|m| m.exponent(var)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn derivative(&self, var: &str) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            let reduced = m.div(&Monomial::var(var)).unwrap();
            out.add_term(reduced, c * BigRational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Coefficient of `var^k`, as a polynomial in the other variables.
    pub fn coefficient_of(&self, var: &str, k: u32) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if m.exponent(var) == k {
                out.add_term(m.without(var), c.clone());
            }
        }
        out
    }

    /// Replaces `var` by a polynomial.
    pub fn substitute(&self, var: &str, value: &MultiPoly) -> Self {
        let deg = self.degree_in(var);
        let powers: Vec<MultiPoly> = (0..=deg).map(|e| value.pow(e)).collect();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let rest = MultiPoly::term(c.clone(), m.without(var));
            out = &out + &(&rest * &powers[m.exponent(var) as usize]);
        }
        out
    }

    /// Replaces `var` by `num/den` and clears the denominator:
    /// returns `den^d · self(var = num/den)` with `d = deg_var(self)`.
    pub fn substitute_fraction(&self, var: &str, num: &MultiPoly, den: &MultiPoly) -> (Self, u32) {
        let d = self.degree_in(var);
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            let rest = MultiPoly::term(c.clone(), m.without(var));
            out = &out + &(&(&rest * &num.pow(e)) * &den.pow(d - e));
        }
        (out, d)
    }

    /// Exact quotient if `d` divides `self` in ℚ[vars].
    pub fn exact_div(&self, d: &MultiPoly) -> Option<MultiPoly> {
        let (lm, lc) = d.leading_term()?;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(lm)?;
            let qc = c / lc;
            let t = MultiPoly::term(qc, qm);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Converts a polynomial in at most the single variable `var` to a
    /// [`UniPoly`].
    pub fn to_unipoly(&self, var: &str) -> Option<UniPoly> {
        let deg = self.degree_in(var) as usize;
        let mut coeffs = vec![FieldElem::zero(); deg + 1];
        for (m, c) in &self.terms {
            if m.vars().any(|v| v != var) {
                return None;
            }
            coeffs[m.exponent(var) as usize] = FieldElem::from_rational(c.clone());
        }
        Some(UniPoly::new(coeffs))
    }
}

impl<'a> Add<&'a MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-BigRational::one())
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl From<i64> for MultiPoly {
    fn from(n: i64) -> Self {
        MultiPoly::int(n)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let coef = if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format!("{}/{}", mag.numer(), mag.denom())
            };
            if m.is_one() {
                f.write_str(&coef)?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{coef}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Recursive-descent parser for expressions such as
/// `-48*((3*p+q)*b + 4*p + 2*q)^3`. Supports `+ - * ^`, parentheses,
/// integer literals, identifiers, and division by nonzero constants.
struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ParseError {
        ParseError::BadExpression {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if c == b'*' {
                &acc * &rhs
            } else {
                match rhs.as_constant() {
                    Some(k) if !k.is_zero() => acc.scale(&k.recip()),
                    _ => return Err(self.err("division by a non-constant or zero")),
                }
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let e: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| self.err("expected exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = std::str::from_utf8(&self.src[start..self.pos])
                    .unwrap()
                    .parse()
                    .unwrap();
                Ok(MultiPoly::constant(BigRational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Ok(MultiPoly::var(std::str::from_utf8(&self.src[start..self.pos]).unwrap()))
            }
            _ => Err(self.err("expected a number, variable or `(`")),
        }
    }
}

impl FromStr for MultiPoly {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let e = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(e)
    }
}
