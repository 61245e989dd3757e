//! Seeded corpora shared by the integration tests.
#![allow(dead_code)]

use projcurve::linalg::Matrix;
use projcurve::{FieldElem, ProjectiveCurve, UniPoly};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small(rng: &mut ChaCha8Rng, gaussian: bool) -> FieldElem {
    let re = rng.gen_range(-4..=4);
    let im = if gaussian { rng.gen_range(-2..=2) } else { 0 };
    &FieldElem::from_int(re) + &(&FieldElem::i() * &FieldElem::from_int(im))
}

pub fn random_poly(rng: &mut ChaCha8Rng, deg: usize, gaussian: bool) -> UniPoly {
    UniPoly::new((0..=deg).map(|_| small(rng, gaussian)).collect())
}

/// Invertible matrix with small entries.
pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize, gaussian: bool) -> Matrix {
    loop {
        let rows: Vec<Vec<FieldElem>> = (0..n).map(|_| (0..n).map(|_| small(rng, gaussian)).collect()).collect();
        let m = Matrix::from_rows(rows, n);
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// `Σ c_k (αz+β)^k (γz+δ)^(d−k)`: the degree-`d` homogenization of a
/// Möbius substitution.
pub fn mobius(h: &UniPoly, d: usize, m: [i64; 4]) -> UniPoly {
    let num = UniPoly::from_ints(&[m[1], m[0]]);
    let den = UniPoly::from_ints(&[m[3], m[2]]);
    h.coeffs().iter().enumerate().fold(UniPoly::zero(), |acc, (k, c)| {
        &acc + &(&num.pow(k as u32) * &den.pow((d - k) as u32)).scale(c)
    })
}

/// Nondegenerate curve in `P^n` of degree at most `max_deg`, drawn from
/// three shapes: dense, a monomial curve under a linear change of
/// coordinates, and the same after a Möbius reparametrization.
pub fn random_curve(rng: &mut ChaCha8Rng, n: usize, max_deg: usize) -> ProjectiveCurve {
    loop {
        let gaussian = rng.gen_bool(0.25);
        let d = rng.gen_range(n..=max_deg);
        let shape = rng.gen_range(0..3);
        let raw: Vec<UniPoly> = if shape == 0 {
            (0..=n).map(|_| random_poly(rng, d, gaussian)).collect()
        } else {
            let mut exps: Vec<usize> = (1..d).collect();
            exps.shuffle(rng);
            let mut e: Vec<usize> = exps[..n - 1].to_vec();
            e.push(0);
            e.push(d);
            e.sort();
            let a = random_invertible(rng, n + 1, gaussian);
            let mono: Vec<UniPoly> = if shape == 1 {
                e.iter().map(|&k| UniPoly::monomial(FieldElem::one(), k)).collect()
            } else {
                let m = loop {
                    let m: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-3..=3));
                    if m[0] * m[3] != m[1] * m[2] {
                        break m;
                    }
                };
                e.iter()
                    .map(|&k| mobius(&UniPoly::monomial(FieldElem::one(), k), d, m))
                    .collect()
            };
            (0..=n)
                .map(|r| {
                    mono.iter()
                        .enumerate()
                        .fold(UniPoly::zero(), |acc, (j, h)| &acc + &h.scale(&a[(r, j)]))
                })
                .collect()
        };
        let Ok(f) = ProjectiveCurve::normalize(raw) else { continue };
        if f.is_nondegenerate() && f.degree() <= max_deg && f.ambient_dim() == n {
            return f;
        }
    }
}

/// `N` curves in `P^3` and `P^4`, alternating.
pub fn random_corpus(seed: u64, count: usize) -> Vec<ProjectiveCurve> {
    let mut r = rng(seed);
    (0..count).map(|k| random_curve(&mut r, 3 + k % 2, 8)).collect()
}

pub fn mono(e: &[usize]) -> ProjectiveCurve {
    ProjectiveCurve::monomial(e).unwrap()
}

/// Monomial family members, the degree-4 and degree-6 goldens, the branched
/// degree-7 example and a few linear images of family members.
pub fn contact_corpus() -> Vec<ProjectiveCurve> {
    let mut out = Vec::new();
    for q in 2..=9u32 {
        for p in 1..q {
            if let Ok(m) = projcurve::contact_family(p, q) {
                out.push(m.curve);
            }
        }
    }
    out.push(mono(&[0, 2, 3, 5]));
    out.push(
        ProjectiveCurve::from_ints(&[&[1, 0, -5], &[0, 1, -3], &[0, 0, 0, -3, 1], &[0, 0, 0, -5, 0, 1]]).unwrap(),
    );
    let mut r = rng(7);
    for (p, q) in [(1, 2), (1, 3), (2, 3), (2, 5)] {
        let f = projcurve::contact_family(p, q).unwrap().curve;
        let a = random_invertible(&mut r, 4, true);
        out.push(f.transform(&a).unwrap());
    }
    out
}
