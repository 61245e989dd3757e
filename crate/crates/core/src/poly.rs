//! Dense univariate polynomials and rational functions over ℚ(i) in the
//! affine coordinate `z` of the Riemann sphere.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::field::FieldElem;

/// Polynomial with ascending coefficients and no trailing zeros.
///
/// The zero polynomial has no coefficients and [`UniPoly::degree`] returns
/// `None` for it, never a number.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<FieldElem>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().is_some_and(FieldElem::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// Convenience constructor from small integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| FieldElem::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(FieldElem::one())
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::new(vec![c])
    }

    /// `c·z^k`.
    pub fn monomial(c: FieldElem, k: usize) -> Self {
        let mut coeffs = vec![FieldElem::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The coordinate function `z`.
    pub fn z() -> Self {
        Self::monomial(FieldElem::one(), 1)
    }

    /// `z - c`.
    pub fn linear_root(c: &FieldElem) -> Self {
        UniPoly {
            coeffs: vec![-c, FieldElem::one()],
        }
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> FieldElem {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for nonzero constants.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn leading_coeff(&self) -> Option<&FieldElem> {
        self.coeffs.last()
    }

    /// All coefficients lie in ℚ.
    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(FieldElem::is_rational)
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Scaled to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().unwrap()),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &FieldElem::from_int(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &FieldElem) -> FieldElem {
        let mut acc = FieldElem::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficient-wise complex conjugate.
    pub fn conj(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(FieldElem::conj).collect(),
        }
    }

    /// `z^d · p(1/z)`; requires `d ≥ deg p`.
    pub fn reversed(&self, d: usize) -> Self {
        let mut coeffs = vec![FieldElem::zero(); d + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[d - k] = c.clone();
        }
        Self::new(coeffs)
    }

    /// Order of vanishing at `z = 0`; `None` for zero.
    pub fn trailing_zeros(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// `p(z + c)`.
    pub fn shift(&self, c: &FieldElem) -> Self {
        let lin = UniPoly::new(vec![c.clone(), FieldElem::one()]);
        let mut acc = Self::zero();
        for coef in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(coef.clone());
        }
        acc
    }

    /// Euclidean division. Panics if `d` is zero.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let lc_inv = d.leading_coeff().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![FieldElem::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = dc * &c;
                rem[k + j] -= &t;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Quotient if `d` divides `self` exactly.
    pub fn exact_div(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &UniPoly) -> bool {
        other.div_rem(self).1.is_zero()
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.monic(), other.monic());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        if !a.is_zero() && !b.is_zero() {
            if let Some(g) = crate::modular::modular_gcd(&a.coeffs, &b.coeffs) {
                return Self::new(g);
            }
        }
        while !b.is_zero() {
            if b.is_unit() {
                return Self::one();
            }
            let r = a.div_rem(&b).1.monic();
            a = b;
            b = r;
        }
        a
    }

    /// Monic gcd of a family, stopping early once it reaches 1.
    pub fn gcd_all<'a>(polys: impl IntoIterator<Item = &'a UniPoly>) -> UniPoly {
        let mut g = Self::zero();
        for p in polys {
            g = g.gcd(p);
            if g.is_unit() {
                break;
            }
        }
        g
    }

    /// Monic squarefree part (radical).
    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).unwrap().monic()
    }

    /// Yun's squarefree decomposition: monic pairwise coprime squarefree
    /// `P_m` with `self = lc · Π P_m^m`. Constant factors are omitted.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0).unwrap();
        let mut c = df.exact_div(&a0).unwrap();
        let mut d = &c - &b.derivative();
        let mut m = 1;
        while !b.is_unit() {
            let a = b.gcd(&d);
            if !a.is_unit() {
                out.push((a.clone(), m));
            }
            b = b.exact_div(&a).unwrap();
            c = d.exact_div(&a).unwrap();
            d = &c - &b.derivative();
            m += 1;
        }
        out
    }

    /// Distinct roots in ℚ, ascending. Only meaningful for polynomials with
    /// rational coefficients; the non-real part of other inputs is ignored by
    /// first passing to `gcd(p, conj p)`.
    pub fn rational_roots(&self) -> Vec<BigRational> {
        if self.is_zero() {
            return Vec::new();
        }
        let real = if self.is_real() {
            self.squarefree_part()
        } else {
            self.gcd(&self.conj()).squarefree_part()
        };
        if real.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let coeffs: Vec<BigRational> = real.coeffs.iter().map(|c| c.re().clone()).collect();
        integer_scaled_roots(&coeffs)
    }
}

/// Rational roots of a squarefree `p ∈ ℚ[z]`. The modular search handles
/// all practical inputs; the Sturm search below is the fallback.
///
/// After clearing denominators so `p ∈ ℤ[z]` with leading coefficient `l`,
/// every rational root `x` has `l·x ∈ ℤ`, so the roots of the monic integer
/// polynomial `l^{n-1} p(y/l)` that are integers give all of them. Those are
/// isolated with a Sturm sequence over integer intervals.
fn integer_scaled_roots(coeffs: &[BigRational]) -> Vec<BigRational> {
    let n = coeffs.len() - 1;
    let den = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
        .collect();
    if let Some(roots) = crate::modular::modular_rational_roots(&ints) {
        return roots;
    }
    let lead = ints[n].clone();
    // monic integer polynomial q(y) = l^{n-1} p(y / l)
    let q: Vec<BigInt> = (0..=n)
        .map(|k| {
            if k == n {
                BigInt::one()
            } else {
                &ints[k] * num_traits::pow(lead.clone(), n - 1 - k)
            }
        })
        .collect();
    let bound = q.iter().map(|c| c.abs()).max().unwrap() + BigInt::one();
    let qpoly: Vec<BigRational> = q.iter().cloned().map(BigRational::from_integer).collect();
    let sturm = sturm_sequence(&qpoly);
    let count = |a: &BigInt| sign_changes(&sturm, &BigRational::from_integer(a.clone()));

    let mut roots = Vec::new();
    // intervals (lo, hi] holding at least one root
    let mut stack = vec![(-bound.clone(), bound.clone())];
    while let Some((lo, hi)) = stack.pop() {
        let inside = count(&lo) - count(&hi);
        if inside == 0 {
            continue;
        }
        if &hi - &lo == BigInt::one() {
            if eval_int(&q, &hi).is_zero() {
                roots.push(BigRational::new(hi, lead.clone()));
            }
            continue;
        }
        let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    roots.sort();
    roots
}

fn eval_int(q: &[BigInt], y: &BigInt) -> BigInt {
    q.iter().rev().fold(BigInt::zero(), |acc, c| acc * y + c)
}

fn sturm_sequence(p: &[BigRational]) -> Vec<Vec<BigRational>> {
    fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        v
    }
    fn rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut r = a.to_vec();
        let db = b.len() - 1;
        while r.len() > db {
            let c = r.last().unwrap() / b.last().unwrap();
            let shift = r.len() - 1 - db;
            for (j, bc) in b.iter().enumerate() {
                r[shift + j] -= &c * bc;
            }
            r.pop();
            r = trim(r);
        }
        r
    }
    let dp: Vec<BigRational> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
        .collect();
    let mut seq = vec![p.to_vec(), trim(dp)];
    loop {
        let n = seq.len();
        if seq[n - 1].is_empty() {
            seq.pop();
            break;
        }
        let r: Vec<BigRational> = rem(&seq[n - 2], &seq[n - 1]).into_iter().map(|c| -c).collect();
        if r.is_empty() {
            break;
        }
        seq.push(r);
    }
    seq
}

fn sign_changes(seq: &[Vec<BigRational>], x: &BigRational) -> i64 {
    let mut last = 0i8;
    let mut changes = 0;
    for p in seq {
        let v = p
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

impl Ord for UniPoly {
    /// Degree first, then coefficients from the top down.
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for UniPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &'a UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new(
            (0..n)
                .map(|k| match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl<'a> Sub<&'a UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &'a UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &'a UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        // convolve over Z[i] after clearing denominators, then divide once
        let (a, da, a_real) = gaussian_integers(&self.coeffs);
        let (b, db, b_real) = gaussian_integers(&rhs.coeffs);
        let real = a_real && b_real;
        let n = a.len() + b.len() - 1;
        let mut re = vec![BigInt::zero(); n];
        let mut im = vec![BigInt::zero(); n];
        for (i, (ar, ai)) in a.iter().enumerate() {
            if ar.is_zero() && ai.is_zero() {
                continue;
            }
            for (j, (br, bi)) in b.iter().enumerate() {
                re[i + j] += ar * br;
                if !real {
                    re[i + j] -= ai * bi;
                    im[i + j] += ar * bi + ai * br;
                }
            }
        }
        let d = da * db;
        let out = re
            .into_iter()
            .zip(im)
            .map(|(r, i)| FieldElem::new(BigRational::new(r, d.clone()), BigRational::new(i, d.clone())))
            .collect();
        UniPoly::new(out)
    }
}

/// `(numerators, common denominator, all real)`.
fn gaussian_integers(cs: &[FieldElem]) -> (Vec<(BigInt, BigInt)>, BigInt, bool) {
    let d = cs.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denom_lcm()));
    let real = cs.iter().all(|c| c.im().is_zero());
    let scale = |x: &BigRational| x.numer() * (&d / x.denom());
    let v = cs.iter().map(|c| (scale(c.re()), scale(c.im()))).collect();
    (v, d, real)
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

/// Human-readable form in `z`, highest power first, e.g. `z^2 - 2*z + 1`.
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_rational() && c.re().is_negative();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let coef = if mag.is_rational() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            match k {
                0 => f.write_str(&coef)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{coef}*")?;
                    }
                    if k == 1 {
                        f.write_str("z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Reduced quotient `num / den` with monic `den`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunction {
    /// Panics if `den` is zero.
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunction {
                num,
                den: UniPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g).unwrap();
        let den = den.exact_div(&g).unwrap();
        let lc = den.leading_coeff().unwrap().clone();
        let inv = lc.inv().unwrap();
        RatFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RatFunction::new(n, &self.den * &self.den)
    }
}

impl From<UniPoly> for RatFunction {
    fn from(p: UniPoly) -> Self {
        RatFunction {
            num: p,
            den: UniPoly::one(),
        }
    }
}

impl<'a> Add<&'a RatFunction> for &RatFunction {
    type Output = RatFunction;
    fn add(self, rhs: &'a RatFunction) -> RatFunction {
        RatFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Mul<&'a RatFunction> for &RatFunction {
    type Output = RatFunction;
    fn mul(self, rhs: &'a RatFunction) -> RatFunction {
        RatFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}
