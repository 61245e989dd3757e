//! Acceptance suite: ten criteria, one PASS/FAIL line each.
//! Run with `cargo test -p projcurve --test acceptance`.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_rational::BigRational;
use projcurve::classification::{
    verify_by_name, verify_deg6_classification, verify_deg7_unbranched_nonexistence, deg7_printed_matrix, VERIFIERS,
};
use projcurve::klein::{null_identities, pole_divisor, standard_quadric_gram};
use projcurve::linalg::{fraction_free_det, Matrix};
use projcurve::place::valuation;
use projcurve::wronskian::wronskian;
use projcurve::{
    complete_null, contact_family, contact_ramification_report, is_contact, klein_forward, klein_inverse,
    model_change, recover_beta, Divisor, Error, FieldElem, MultiPoly, NullCurve, NullModel, Place, ProjectiveCurve,
    RatFunction, SymplecticForm, UniPoly,
};
use rand::Rng;

use common::{contact_corpus, mono, random_corpus, rng};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ends(m: i64) -> Divisor {
    Divisor::from_terms([(Place::FinitePoint(FieldElem::zero()), m), (Place::Infinity, m)])
}

fn mp(s: &str) -> MultiPoly {
    s.parse().unwrap()
}

fn err<E: std::fmt::Display>(ctx: &str) -> impl Fn(E) -> String + '_ {
    move |e| format!("{ctx}: {e}")
}

fn beta_recovery_goldens() -> Outcome {
    let cases = [([0, 1, 2, 3], -3), ([0, 1, 3, 4], -2), ([0, 2, 3, 5], -5)];
    for (e, c) in cases {
        let expected = SymplecticForm::from_ints([0, 0, 1, c, 0, 0]).unwrap();
        let got = recover_beta(&mono(&e)).map_err(err("recoverBeta"))?;
        ensure!(got == expected, "recoverBeta({e:?}) = {got}, expected {expected}");
    }
    let q = recover_beta(&mono(&[0, 1, 2, 4]));
    ensure!(q == Err(Error::NotContact), "[1,z,z^2,z^4] gave {q:?}");
    Ok("3 goldens + NotContact".into())
}

fn contact_family_sweep() -> Outcome {
    let mut n = 0;
    for q in 2..=9i64 {
        for p in 1..q {
            if num_integer::gcd(p, q) != 1 {
                continue;
            }
            let m = contact_family(p as u32, q as u32).map_err(err("family"))?;
            let beta = SymplecticForm::from_ints([0, 0, p - q, p + q, 0, 0]).unwrap();
            // oracle: W(z^a, z^b) = (b - a) z^(a+b-1), so β(F, F') is a
            // multiple of z^(p+q-1) with coefficient c03·(p+q) + c12·(q-p)
            ensure!((p - q) * (p + q) + (p + q) * (q - p) == 0, "oracle");
            ensure!(m.beta == beta, "({p},{q}): family beta {}", m.beta);
            ensure!(is_contact(&m.curve, &beta).map_err(err("isContact"))?, "({p},{q}) not contact");
            ensure!(recover_beta(&m.curve).map_err(err("recoverBeta"))? == beta, "({p},{q}) recovered beta");
            let r1 = m.curve.ramification_divisor(1).map_err(err("R_1"))?;
            let r2 = m.curve.ramification_divisor(2).map_err(err("R_2"))?;
            ensure!(r1 == ends(p - 1), "({p},{q}) R_1 = {r1}");
            ensure!(r2 == ends(q - p - 1), "({p},{q}) R_2 = {r2}");
            let g = klein_forward(&m.curve, &beta).map_err(err("kleinForward"))?;
            let dg = g.curve().degree() as i64;
            ensure!(dg == p + q + 1 + (q - p - 1), "({p},{q}) deg f_2 = {dg}");
            ensure!(dg == 4 + r1.degree() + r2.degree(), "({p},{q}) deg g vs 4 + r1 + r2");
            n += 1;
        }
    }
    ensure!(n == 27, "expected 27 coprime pairs, saw {n}");
    Ok(format!("{n} pairs"))
}

fn plucker_identities() -> Outcome {
    let corpus = random_corpus(2024, 120);
    let mut ramified = 0;
    for (k, f) in corpus.iter().enumerate() {
        let n = f.ambient_dim() as i64;
        let d = f.degree() as i64;
        let r = f.ramification_divisors().map_err(err("ramification"))?;
        let rhs: i64 = r.iter().enumerate().map(|(i, ri)| (n - i as i64) * ri.degree()).sum();
        ensure!((n + 1) * d - n * (n + 1) == rhs, "curve {k} {f}: Plücker fails");
        let rep = f.plucker_report().map_err(err("plucker"))?;
        ensure!(rep.lhs == rep.rhs && rep.lhs == rhs, "curve {k}: report {} vs {}", rep.lhs, rep.rhs);
        ensure!(rep.associated_degrees == rep.predicted_degrees, "curve {k}: associated degrees");
        if rhs > 0 {
            ramified += 1;
        }
    }
    let contacts = contact_corpus();
    for f in &contacts {
        let rep = contact_ramification_report(f).map_err(err("contact report"))?;
        let (d, dg) = (f.degree() as i64, rep.null_degree as i64);
        let (r1, r2) = (rep.r1(), rep.r2());
        ensure!(4 * d - 12 == 4 * r1 + 2 * r2, "{f}: first contact formula");
        ensure!(5 * dg - 20 == 5 * r1 + 5 * r2, "{f}: second contact formula");
        ensure!(r2 % 2 == 0, "{f}: r2 = {r2} odd");
    }
    Ok(format!("{} random ({ramified} ramified), {} contact", corpus.len(), contacts.len()))
}

fn ramification_transfer() -> Outcome {
    let corpus = contact_corpus();
    for f in &corpus {
        let beta = recover_beta(f).map_err(err("recoverBeta"))?;
        let r = f.ramification_divisors().map_err(err("R(f)"))?;
        let g = klein_forward(f, &beta).map_err(err("kleinForward"))?;
        let rg = g.curve().ramification_divisors().map_err(err("R(g)"))?;
        ensure!(r[0] == r[2], "{f}: R_1 != R_3");
        ensure!(rg[0] == r[1] && rg[3] == r[1], "{f}: R_1(f_2), R_4(f_2) vs R_2(f)");
        ensure!(rg[1] == r[0] && rg[2] == r[0], "{f}: R_2(f_2), R_3(f_2) vs R_1(f)");
        // f_2 in P^5 spans only a hyperplane; its branch divisor is intrinsic
        let f2 = f.associated_curve(2).map_err(err("f_2"))?;
        ensure!(f2.branch_divisor().map_err(err("branch"))? == r[1], "{f}: branch divisor of f_2 in P^5");
    }
    Ok(format!("{} contact curves", corpus.len()))
}

fn klein_roundtrip() -> Outcome {
    let corpus = contact_corpus();
    for f in &corpus {
        let beta = recover_beta(f).map_err(err("recoverBeta"))?;
        let g = klein_forward(f, &beta).map_err(err("kleinForward"))?;
        ensure!(null_identities(g.curve(), &g.model().gram()).all_zero(), "{f}: null identities");
        let back = klein_inverse(&g).map_err(err("kleinInverse"))?;
        ensure!(&back == f, "{f}: roundtrip gave {back}");
        let std = model_change(&g).map_err(err("modelChange"))?;
        ensure!(null_identities(std.curve(), &standard_quadric_gram()).all_zero(), "{f}: standard model");
        let back2 = klein_inverse(&std).map_err(err("kleinInverse std"))?;
        ensure!(recover_beta(&back2).is_ok(), "{f}: standard-model inverse is not contact");
        ensure!(back2.degree() == f.degree(), "{f}: standard-model inverse degree");
    }
    Ok(format!("{} contact curves", corpus.len()))
}

fn eval_at(m: &MultiPoly, p: i64, q: i64, a: &BigRational, b: &BigRational) -> BigRational {
    m.substitute("p", &MultiPoly::int(p))
        .substitute("q", &MultiPoly::int(q))
        .substitute("a", &MultiPoly::constant(a.clone()))
        .substitute("b", &MultiPoly::constant(b.clone()))
        .as_constant()
        .unwrap()
}

fn classification_verifiers() -> Outcome {
    for name in VERIFIERS {
        verify_by_name(name).unwrap().map_err(err(name))?;
    }
    let r = verify_deg7_unbranched_nonexistence().map_err(err("deg7"))?;
    ensure!(r.first_minor == mp("-48*((3*p+q)*b+4*p+2*q)^3"), "first minor {}", r.first_minor);
    ensure!(r.last_minor == mp("-48*((p+3*q)*a+2*p+4*q)^3"), "last minor {}", r.last_minor);
    ensure!(r.middle_minor_cleared == mp("8640*p*q*(p+q)^3"), "middle minor {}", r.middle_minor_cleared);
    ensure!(r.f_at_one.iter().all(MultiPoly::is_zero), "F(1) != 0");
    // oracle: the printed matrix evaluated at rational points
    let m = deg7_printed_matrix();
    let rows = [0, 1, 3, 4, 6, 7].map(|i| m[i].clone());
    let middle = fraction_free_det(&rows);
    for (p, q) in [(1i64, 2i64), (2, 1), (3, 1), (5, 7), (-2, 3)] {
        let a = BigRational::new((-(2 * p + 4 * q)).into(), (p + 3 * q).into());
        let b = BigRational::new((-(4 * p + 2 * q)).into(), (3 * p + q).into());
        let expected = BigRational::new(
            (8640 * p * q * (p + q).pow(3)).into(),
            ((p + 3 * q) * (3 * p + q)).into(),
        );
        ensure!(eval_at(&middle, p, q, &a, &b) == expected, "middle minor at p={p}, q={q}");
    }
    Ok("5 verifiers, 3 minors".into())
}

fn degree_six_orbits() -> Outcome {
    let r = verify_deg6_classification().map_err(err("deg6"))?;
    ensure!(r.representatives.len() == 2, "{} representatives", r.representatives.len());
    let mut branches: Vec<Divisor> = r.representatives.iter().map(|x| x.branch_divisor.clone()).collect();
    branches.sort_by_key(Divisor::degree);
    ensure!(branches[0] == Divisor::new() && branches[1] == ends(1), "branch divisors {branches:?}");
    ensure!(r.representatives.iter().all(|x| x.null_degree == 6), "degrees");
    Ok("two representatives".into())
}

/// `Σ a_k (z - c)^k` with `a_0 != 0`.
fn unit_at(r: &mut rand_chacha::ChaCha8Rng, c: &FieldElem, deg: usize) -> UniPoly {
    let lin = UniPoly::new(vec![-c, FieldElem::one()]);
    let mut a0 = common::small(r, true);
    if a0.is_zero() {
        a0 = FieldElem::one();
    }
    (1..=deg).fold(UniPoly::constant(a0), |acc, k| &acc + &lin.pow(k as u32).scale(&common::small(r, true)))
}

/// Direct determinant of the Wronskian matrix evaluated at `z0`.
fn wronskian_at(hs: &[UniPoly], z0: &FieldElem) -> FieldElem {
    let k = hs.len();
    let rows: Vec<Vec<FieldElem>> = (0..k)
        .map(|r| {
            hs.iter()
                .map(|h| (0..r).fold(h.clone(), |d, _| d.derivative()).eval(z0))
                .collect()
        })
        .collect();
    Matrix::from_rows(rows, k).det()
}

fn wronskian_law() -> Outcome {
    let mut r = rng(88);
    let mut count = 0;
    for _ in 0..220 {
        let k = r.gen_range(1..=5usize);
        let gaussian = r.gen_bool(0.5);
        let c = common::small(&mut r, gaussian);
        let lin = UniPoly::new(vec![-&c, FieldElem::one()]);
        let mut v = 0usize;
        let mut vals = Vec::new();
        let hs: Vec<UniPoly> = (0..k)
            .map(|_| {
                v += r.gen_range(if vals.is_empty() { 0..=2 } else { 1..=3 });
                vals.push(v);
                let deg = r.gen_range(0..=3);
                &lin.pow(v as u32) * &unit_at(&mut r, &c, deg)
            })
            .collect();
        let (w, weight) = wronskian(&hs).map_err(err("wronskian"))?;
        ensure!(weight == k * (k - 1) / 2, "weight");
        let expected = vals.iter().sum::<usize>() as i64 - (k * (k - 1) / 2) as i64;
        let got = valuation(&w, &Place::FinitePoint(c.clone())).map_err(err("valuation"))?;
        ensure!(got == expected, "ν(W) = {got}, expected {expected} for valuations {vals:?}");
        let z0 = common::small(&mut r, true);
        ensure!(w.eval(&z0) == wronskian_at(&hs, &z0), "W disagrees with the direct determinant");
        count += 1;
    }
    let mut dependent = 0;
    for _ in 0..60 {
        let k = r.gen_range(2..=5usize);
        let mut hs: Vec<UniPoly> = (0..k - 1).map(|_| common::random_poly(&mut r, 6, true)).collect();
        let combo = hs.iter().fold(UniPoly::zero(), |acc, h| &acc + &h.scale(&common::small(&mut r, true)));
        hs.insert(r.gen_range(0..k), combo);
        ensure!(wronskian(&hs).map_err(err("wronskian"))?.0.is_zero(), "dependent tuple has W != 0");
        dependent += 1;
    }
    Ok(format!("{count} fuzzed tuples, {dependent} dependent"))
}

fn dual_symmetry() -> Outcome {
    let corpus = random_corpus(4048, 100);
    for (k, f) in corpus.iter().enumerate() {
        let n = f.ambient_dim();
        let dual = f.dual_curve().map_err(err("dual"))?;
        let rf = f.ramification_divisors().map_err(err("R(f)"))?;
        let rd = dual.ramification_divisors().map_err(err("R(dual)"))?;
        for i in 1..=n {
            ensure!(rd[i - 1] == rf[n - i], "curve {k}: R_{i}(dual) != R_{}(f)", n + 1 - i);
        }
        let back = dual.dual_curve().map_err(err("dual dual"))?;
        ensure!(&back == f, "curve {k}: dual of dual is {back}, expected {f}");
    }
    Ok(format!("{} curves", corpus.len()))
}

/// Reflection of the standard quadric in a non-isotropic integer vector.
fn reflection(v: &[i64]) -> Option<Matrix> {
    let s = standard_quadric_gram();
    let v: Vec<FieldElem> = v.iter().map(|&x| FieldElem::from_int(x)).collect();
    let sv: Vec<FieldElem> = (0..5)
        .map(|r| (0..5).fold(FieldElem::zero(), |acc, c| &acc + &(&s[(r, c)] * &v[c])))
        .collect();
    let qv = v.iter().zip(&sv).fold(FieldElem::zero(), |acc, (a, b)| &acc + &(a * b));
    let k = &FieldElem::from_int(2) * &qv.inv()?;
    let mut m = Matrix::identity(5);
    for r in 0..5 {
        for c in 0..5 {
            m[(r, c)] = &m[(r, c)] - &(&k * &(&v[r] * &sv[c]));
        }
    }
    Some(m)
}

fn affine(g: &ProjectiveCurve) -> [RatFunction; 3] {
    let x = g.coords();
    std::array::from_fn(|k| RatFunction::new(x[k + 1].clone(), x[0].clone()))
}

fn null_completion() -> Outcome {
    let iz = UniPoly::new(vec![FieldElem::zero(), FieldElem::i()]);
    let mut checked = 0;
    // (s, i s, 0) with s = Σ 1/(z - a_j): d simple poles
    for d in 1..=5i64 {
        let s = (0..d).fold(RatFunction::from(UniPoly::zero()), |acc, a| {
            let den = UniPoly::from_ints(&[-a, 1]);
            RatFunction::new(&(acc.num() * &den) + acc.den(), acc.den() * &den)
        });
        let is = RatFunction::new(s.num().scale(&FieldElem::i()), s.den().clone());
        let gamma = [s, is, RatFunction::from(UniPoly::zero())];
        let poles = pole_divisor(&gamma).map_err(err("poles"))?;
        ensure!(poles.terms().all(|(_, m)| m == 1) && poles.degree() == d, "pole divisor {poles}");
        let g = complete_null(&gamma).map_err(err("completeNull"))?;
        ensure!(g.curve().degree() as i64 == d, "degree {} with {d} simple poles", g.curve().degree());
        checked += 1;
    }
    // generic hyperplane sections of null curves: reflect, then read off γ
    let mut r = rng(5);
    let sources = [mono(&[0, 2, 3, 5]), mono(&[0, 1, 3, 4]), contact_family(2, 5).unwrap().curve];
    let mut generic = 0;
    for f in &sources {
        let g = model_change(&klein_forward(f, &recover_beta(f).unwrap()).unwrap()).unwrap();
        let unbranched = g.curve().branch_divisor().unwrap().is_zero();
        for _ in 0..4 {
            let v: Vec<i64> = (0..5).map(|_| r.gen_range(-2..=2)).collect();
            let Some(m) = reflection(&v) else { continue };
            let moved = g.curve().transform(&m).map_err(err("transform"))?;
            ensure!(
                NullCurve::new(moved.clone(), NullModel::StandardQuadric).is_ok(),
                "reflection broke the null condition"
            );
            let gamma = affine(&moved);
            let poles = pole_divisor(&gamma).map_err(err("poles"))?;
            let done = complete_null(&gamma).map_err(err("completeNull"))?;
            ensure!(done.curve() == &moved, "completion of {moved} gave {}", done.curve());
            if poles.terms().all(|(_, m)| m == 1) {
                ensure!(done.curve().degree() as i64 == poles.degree(), "degree vs simple-pole count");
                if unbranched {
                    ensure!(done.curve().branch_divisor().unwrap().is_zero(), "completion is branched");
                }
                generic += 1;
            }
        }
    }
    ensure!(generic >= 3, "only {generic} generic sections");
    // Enneper-type data over Q(i)
    let third = FieldElem::from_ratio(1, 3);
    let z = UniPoly::z();
    let z3 = UniPoly::monomial(third.clone(), 3);
    let enneper = [
        RatFunction::from(&z - &z3),
        RatFunction::from((&z + &z3).scale(&FieldElem::i())),
        RatFunction::from(UniPoly::monomial(FieldElem::one(), 2)),
    ];
    let e = complete_null(&enneper).map_err(err("Enneper"))?;
    ensure!(null_identities(e.curve(), &standard_quadric_gram()).all_zero(), "Enneper identities");
    let bad = [RatFunction::from(UniPoly::z()), RatFunction::from(UniPoly::monomial(FieldElem::one(), 2)), RatFunction::from(iz)];
    ensure!(matches!(complete_null(&bad), Err(Error::NotNull(_))), "non-null γ accepted");
    Ok(format!("{checked} pole-count examples, {generic} generic sections, Enneper, rejection"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("beta recovery goldens", beta_recovery_goldens),
        ("contact family sweep", contact_family_sweep),
        ("Plücker identities", plucker_identities),
        ("ramification transfer", ramification_transfer),
        ("Klein roundtrip", klein_roundtrip),
        ("classification verifiers", classification_verifiers),
        ("degree-6 orbit count", degree_six_orbits),
        ("Wronskian law", wronskian_law),
        ("dual symmetry", dual_symmetry),
        ("null completion", null_completion),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        if !only.is_empty() && !only.contains(&(k + 1)) {
            continue;
        }
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panic: {msg}"))
        });
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({ms} ms)", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({ms} ms)", k + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
