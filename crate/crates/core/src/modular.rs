//! Modular shortcuts for exact polynomial arithmetic.
//!
//! Rational roots: roots modulo a small prime are lifted `ℓ`-adically,
//! reconstructed as fractions and checked exactly. Gcds over `ℚ(i)`: monic
//! gcds modulo primes `ℓ ≡ 1 (mod 4)`, under both square roots of `-1`, are
//! combined by the Chinese remainder theorem and confirmed by trial
//! division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::field::FieldElem;

/// Rational roots of a squarefree `p ∈ ℤ[z]` (coefficients low to high), or
/// `None` when no usable prime below the search limit exists.
pub(crate) fn modular_rational_roots(p: &[BigInt]) -> Option<Vec<BigRational>> {
    let mut p = p.to_vec();
    let mut roots = Vec::new();
    while p.len() > 1 && p[0].is_zero() {
        p.remove(0);
        roots.push(BigRational::zero());
    }
    if p.len() <= 1 {
        return Some(roots);
    }
    let lead = p.last().unwrap().abs();
    let tail = p[0].abs();
    // |a| ≤ |p_0| and |b| ≤ |lead| for a root a/b in lowest terms
    let bound = tail.clone().max(lead.clone()) * 2;
    let need = &bound * &bound;
    let ell = good_prime(&p)?;
    let big_ell = BigInt::from(ell);
    let dp: Vec<BigInt> = p.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect();
    for r0 in roots_mod(&p, ell) {
        let mut r = BigInt::from(r0);
        let mut m = big_ell.clone();
        while m <= need {
            let m2 = &m * &m;
            let fr = eval_mod(&p, &r, &m2);
            let dfr = eval_mod(&dp, &r, &m2);
            let inv = mod_inverse(&dfr, &m2)?;
            r = (&r - fr * inv).mod_floor(&m2);
            m = m2;
        }
        if let Some((a, b)) = reconstruct(&r, &m, &tail, &lead) {
            if homogeneous_eval(&p, &a, &b).is_zero() {
                roots.push(BigRational::new(a, b));
            }
        }
    }
    roots.sort();
    roots.dedup();
    Some(roots)
}

fn reduce(p: &[BigInt], ell: u64) -> Vec<u64> {
    let l = BigInt::from(ell);
    let mut v: Vec<u64> = p
        .iter()
        .map(|c| {
            let r = c.mod_floor(&l);
            r.to_u64_digits().1.first().copied().unwrap_or(0)
        })
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Smallest odd prime not dividing the leading coefficient and keeping `p`
/// squarefree modulo it.
fn good_prime(p: &[BigInt]) -> Option<u64> {
    let n = p.len() - 1;
    (3u64..50_000).filter(|&q| is_prime(q)).find(|&ell| {
        let pm = reduce(p, ell);
        if pm.len() != n + 1 {
            return false;
        }
        let dpm: Vec<u64> = pm.iter().enumerate().skip(1).map(|(k, &c)| c * (k as u64 % ell) % ell).collect();
        gcd_mod(pm, dpm, ell).len() == 1
    })
}

fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, ell: u64) -> Vec<u64> {
    a = trim(a);
    b = trim(b);
    while !b.is_empty() {
        let inv = pow_mod(*b.last().unwrap(), ell - 2, ell);
        while a.len() >= b.len() {
            let c = a.last().unwrap() * inv % ell;
            let shift = a.len() - b.len();
            for (j, &bc) in b.iter().enumerate() {
                a[shift + j] = (a[shift + j] + ell - c * bc % ell) % ell;
            }
            a = trim(a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

fn roots_mod(p: &[BigInt], ell: u64) -> Vec<u64> {
    let pm = reduce(p, ell);
    (0..ell)
        .filter(|&x| pm.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % ell) == 0)
        .collect()
}

fn eval_mod(p: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// `a/b ≡ r (mod m)` with `|a| ≤ na`, `0 < b ≤ nb`.
fn reconstruct(r: &BigInt, m: &BigInt, na: &BigInt, nb: &BigInt) -> Option<(BigInt, BigInt)> {
    let (mut r0, mut r1) = (m.clone(), r.clone());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > na {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || &t1.abs() > nb {
        return None;
    }
    let (a, b) = if t1.is_negative() { (-r1, -t1) } else { (r1, t1) };
    a.gcd(&b).is_one().then_some((a, b))
}

/// `Σ c_k a^k b^(n-k)`, zero exactly when `a/b` is a root.
fn homogeneous_eval(p: &[BigInt], a: &BigInt, b: &BigInt) -> BigInt {
    let n = p.len() - 1;
    let mut acc = BigInt::zero();
    let mut apow = BigInt::one();
    for (k, c) in p.iter().enumerate() {
        acc += c * &apow * num_traits::pow(b.clone(), n - k);
        apow *= a;
    }
    acc
}

/// Primes `ℓ ≡ 1 (mod 4)` below `2^31`, descending, with a square root of
/// `-1` modulo each.
fn split_primes() -> &'static [(u64, u64)] {
    static CACHE: std::sync::OnceLock<Vec<(u64, u64)>> = std::sync::OnceLock::new();
    CACHE.get_or_init(|| {
        (0..(1u64 << 31))
            .rev()
            .filter(|&q| q % 4 == 1 && is_prime(q))
            .take(400)
            .map(|q| (q, sqrt_minus_one(q)))
            .collect()
    })
}

fn sqrt_minus_one(ell: u64) -> u64 {
    (2..)
        .map(|g| pow_mod(g, (ell - 1) / 4, ell))
        .find(|&x| x * x % ell == ell - 1)
        .unwrap()
}

fn residue(x: &BigRational, ell: u64) -> Option<u64> {
    let l = BigInt::from(ell);
    let den = x.denom().mod_floor(&l).to_u64()?;
    if den == 0 {
        return None;
    }
    let num = x.numer().mod_floor(&l).to_u64()?;
    Some(num * pow_mod(den, ell - 2, ell) % ell)
}

fn reduce_field(cs: &[FieldElem], ell: u64, s: u64) -> Option<Vec<u64>> {
    cs.iter()
        .map(|c| Some((residue(c.re(), ell)? + s * residue(c.im(), ell)?) % ell))
        .collect()
}

fn monic_mod(mut v: Vec<u64>, ell: u64) -> Vec<u64> {
    if let Some(&lc) = v.last() {
        let inv = pow_mod(lc, ell - 2, ell);
        for c in &mut v {
            *c = *c * inv % ell;
        }
    }
    v
}

/// Monic gcd over `ℚ(i)` from images modulo split primes, or `None` if
/// no candidate was confirmed. Every returned gcd divides both inputs and
/// has the least degree seen modulo any prime, so it is the true gcd.
pub(crate) fn modular_gcd(a: &[FieldElem], b: &[FieldElem]) -> Option<Vec<FieldElem>> {
    let mut best_deg = usize::MAX;
    let mut modulus = BigInt::one();
    let mut acc: Vec<(BigInt, BigInt)> = Vec::new();
    let mut previous: Option<Vec<FieldElem>> = None;
    let mut primes_used = 0;
    for &(ell, s) in split_primes() {
        let images: Option<Vec<Vec<u64>>> = [s, ell - s]
            .iter()
            .map(|&root| {
                let ra = reduce_field(a, ell, root)?;
                let rb = reduce_field(b, ell, root)?;
                if ra.last() == Some(&0) || rb.last() == Some(&0) {
                    return None;
                }
                Some(monic_mod(gcd_mod(ra, rb, ell), ell))
            })
            .collect();
        let Some(images) = images else { continue };
        let (g1, g2) = (&images[0], &images[1]);
        if g1.len() != g2.len() {
            continue;
        }
        let deg = g1.len() - 1;
        if deg == 0 {
            return Some(vec![FieldElem::one()]);
        }
        if deg > best_deg {
            continue;
        }
        if deg < best_deg {
            best_deg = deg;
            modulus = BigInt::one();
            acc = vec![(BigInt::zero(), BigInt::zero()); deg + 1];
            previous = None;
        }
        let inv2 = pow_mod(2, ell - 2, ell);
        let inv2s = pow_mod(2 * s % ell, ell - 2, ell);
        let big_ell = BigInt::from(ell);
        let m_inv = BigInt::from(pow_mod(modulus.mod_floor(&big_ell).to_u64().unwrap(), ell - 2, ell));
        for (k, (x, y)) in g1.iter().zip(g2).enumerate() {
            let re = (x + y) % ell * inv2 % ell;
            let im = (x + ell - y) % ell * inv2s % ell;
            let (acc_re, acc_im) = &mut acc[k];
            for (slot, r) in [(acc_re, re), (acc_im, im)] {
                let delta = ((BigInt::from(r) - &*slot) * &m_inv).mod_floor(&big_ell);
                *slot += &modulus * delta;
            }
        }
        modulus *= &big_ell;
        primes_used += 1;
        let Some(candidate) = reconstruct_all(&acc, &modulus) else { continue };
        if previous.as_ref() == Some(&candidate) {
            let g = crate::poly::UniPoly::new(candidate.clone());
            let pa = crate::poly::UniPoly::new(a.to_vec());
            let pb = crate::poly::UniPoly::new(b.to_vec());
            if g.divides(&pa) && g.divides(&pb) {
                return Some(candidate);
            }
        }
        previous = Some(candidate);
        if primes_used > 300 {
            return None;
        }
    }
    None
}

fn reconstruct_all(acc: &[(BigInt, BigInt)], m: &BigInt) -> Option<Vec<FieldElem>> {
    let bound = (m / BigInt::from(2)).sqrt();
    let rat = |u: &BigInt| -> Option<BigRational> {
        let u = u.mod_floor(m);
        let (a, b) = reconstruct(&u, m, &bound, &bound)?;
        Some(BigRational::new(a, b))
    };
    acc.iter()
        .map(|(re, im)| Some(FieldElem::new(rat(re)?, rat(im)?)))
        .collect()
}
