//! Mechanical verification of the classification of rational null curves of
//! degree at most 7.
//!
//! Each verifier rebuilds the relevant curves, computes the invariants the
//! argument relies on and compares them with the expected closed forms.
//! Universally quantified rank claims ("rank 6 for every value of the
//! parameters") are certified symbolically, never by sampling:
//!
//! * one parameter: the gcd of all 6×6 minors is a nonzero constant;
//! * several parameters: a case split that forces monomial minors to vanish
//!   one variable at a time until either a nonzero constant minor appears
//!   (full rank on that branch) or every minor vanishes (a surviving locus).

use std::fmt;

use crate::contact::{is_contact, pair_wronskians, recover_beta, SymplecticForm, PAIRS};
use crate::curve::{coefficient_matrix, ProjectiveCurve};
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::klein::{klein_forward, NullCurve};
use crate::linalg::fraction_free_det;
use crate::multipoly::MultiPoly;
use crate::place::{Divisor, Place};
use crate::poly::UniPoly;
use crate::wronskian::combinations;

/// A ramification profile `(r1, r2)` with the implied degree of `f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Profile {
    pub r1: i64,
    pub r2: i64,
    pub deg_f: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileConstraint {
    pub deg_g: i64,
    pub solutions: Vec<Profile>,
}

/// All `(r1, r2)` with `r2` even and `deg g = 4 + r1 + r2`, each with
/// `deg f = 3 + r1 + r2/2`.
pub fn enumerate_profiles(deg_g: i64) -> ProfileConstraint {
    let total = deg_g - 4;
    let mut solutions: Vec<Profile> = (0..=total)
        .filter(|r2| r2 % 2 == 0)
        .map(|r2| Profile {
            r1: total - r2,
            r2,
            deg_f: 3 + (total - r2) + r2 / 2,
        })
        .collect();
    solutions.sort_by_key(|p| p.r1);
    ProfileConstraint { deg_g, solutions }
}

/// One named quantity of a verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub name: &'static str,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    fn new(name: &'static str) -> Self {
        VerificationReport {
            name,
            checks: Vec::new(),
        }
    }

    fn note(&mut self, name: &str, value: impl fmt::Display) {
        self.checks.push(Check {
            name: name.to_string(),
            value: value.to_string(),
        });
    }

    /// Records `actual` and fails unless it equals `expected`.
    fn expect<T: PartialEq + fmt::Display>(&mut self, name: &str, actual: T, expected: T) -> Result<()> {
        if actual != expected {
            return Err(Error::VerificationFailed(format!(
                "{}: {name} = {actual}, expected {expected}",
                self.name
            )));
        }
        self.note(name, actual);
        Ok(())
    }

    fn require(&mut self, name: &str, ok: bool) -> Result<()> {
        self.expect(name, ok, true)
    }

    fn absorb(&mut self, other: &VerificationReport) {
        for c in &other.checks {
            self.checks.push(Check {
                name: format!("{}/{}", other.name, c.name),
                value: c.value.clone(),
            });
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}:", self.name)?;
        for c in &self.checks {
            writeln!(f, "  {}: {}", c.name, c.value)?;
        }
        Ok(())
    }
}

fn fail(ctx: &str, e: Error) -> Error {
    match e {
        Error::VerificationFailed(_) => e,
        other => Error::VerificationFailed(format!("{ctx}: {other}")),
    }
}

fn mp(s: &str) -> MultiPoly {
    s.parse().expect("built-in expression parses")
}

/// Coefficient matrix of `f_2` for a curve whose coordinates are
/// polynomials in `z` with symbolic coefficients: row `k` holds the
/// coefficients of `z^k` of the six pair Wronskians.
pub fn symbolic_f2_matrix(f: &[MultiPoly; 4]) -> Vec<Vec<MultiPoly>> {
    let df: Vec<MultiPoly> = f.iter().map(|h| h.derivative("z")).collect();
    let g: Vec<MultiPoly> = PAIRS
        .iter()
        .map(|&(i, j)| &(&f[i] * &df[j]) - &(&f[j] * &df[i]))
        .collect();
    coefficient_rows(&g)
}

fn coefficient_rows(g: &[MultiPoly]) -> Vec<Vec<MultiPoly>> {
    let deg = g.iter().map(|x| x.degree_in("z")).max().unwrap_or(0);
    (0..=deg)
        .map(|k| g.iter().map(|x| x.coefficient_of("z", k)).collect())
        .collect()
}

/// All maximal minors of a tall matrix, keyed by the selected rows.
pub fn maximal_minors(m: &[Vec<MultiPoly>]) -> Vec<(Vec<usize>, MultiPoly)> {
    let cols = m.first().map_or(0, Vec::len);
    combinations(m.len(), cols)
        .map(|rows| {
            let sub: Vec<Vec<MultiPoly>> = rows.iter().map(|&r| m[r].clone()).collect();
            (rows, fraction_free_det(&sub))
        })
        .collect()
}

fn select_rows(m: &[Vec<MultiPoly>], rows: &[usize]) -> Vec<Vec<MultiPoly>> {
    rows.iter().map(|&r| m[r].clone()).collect()
}

/// One branch of a rank case split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankBranch {
    /// Variables assumed zero on this branch, in the order they were forced.
    pub zeros: Vec<String>,
    /// Rows of a minor that is a nonzero constant on this branch, if any.
    pub witness: Option<(Vec<usize>, MultiPoly)>,
}

impl RankBranch {
    /// True when every maximal minor vanishes on the branch.
    pub fn is_surviving(&self) -> bool {
        self.witness.is_none()
    }
}

impl fmt::Display for RankBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let locus = if self.zeros.is_empty() {
            "all parameters".to_string()
        } else {
            self.zeros.iter().map(|v| format!("{v} = 0")).collect::<Vec<_>>().join(", ")
        };
        match &self.witness {
            Some((rows, c)) => write!(f, "{{{locus}}}: full rank, minor rows {rows:?} = {c}"),
            None => write!(f, "{{{locus}}}: all maximal minors vanish"),
        }
    }
}

/// Case split on the maximal minors; see the module documentation.
pub fn certify_full_rank(minors: &[(Vec<usize>, MultiPoly)]) -> Result<Vec<RankBranch>> {
    let mut out = Vec::new();
    explore(minors.to_vec(), Vec::new(), &mut out)?;
    Ok(out)
}

fn explore(
    minors: Vec<(Vec<usize>, MultiPoly)>,
    zeros: Vec<String>,
    out: &mut Vec<RankBranch>,
) -> Result<()> {
    let live: Vec<(Vec<usize>, MultiPoly)> = minors.into_iter().filter(|(_, m)| !m.is_zero()).collect();
    if let Some((rows, c)) = live.iter().find(|(_, m)| m.as_constant().is_some()) {
        out.push(RankBranch {
            zeros,
            witness: Some((rows.clone(), c.clone())),
        });
        return Ok(());
    }
    if live.is_empty() {
        out.push(RankBranch { zeros, witness: None });
        return Ok(());
    }
    let (_, forcing) = live
        .iter()
        .find(|(_, m)| m.as_single_term().is_some())
        .ok_or(Error::Inconclusive { remaining: live.len() })?;
    let (_, monomial) = forcing.as_single_term().unwrap();
    for v in monomial.vars() {
        let reduced = live
            .iter()
            .map(|(r, m)| (r.clone(), m.substitute(v, &MultiPoly::zero())))
            .collect();
        let mut z = zeros.clone();
        z.push(v.to_string());
        explore(reduced, z, out)?;
    }
    Ok(())
}

fn klein_forward_with_recovery(f: &ProjectiveCurve) -> Result<(SymplecticForm, NullCurve)> {
    let beta = recover_beta(f)?;
    let g = klein_forward(f, &beta)?;
    Ok((beta, g))
}

fn positional(f: &ProjectiveCurve) -> String {
    f.to_string()
}

fn ends(m: i64) -> Divisor {
    Divisor::from_terms([
        (Place::FinitePoint(FieldElem::zero()), m),
        (Place::Infinity, m),
    ])
}

fn polys(cs: &[&[i64]]) -> Vec<UniPoly> {
    cs.iter().map(|c| UniPoly::from_ints(c)).collect()
}

/// `[1, z, z², z⁴]` is not contact; a double point of `R_2` is impossible;
/// `[1, z, z³, z⁴]` is the contact curve of degree 4.
pub fn verify_deg4_uniqueness() -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("deg4-uniqueness");
    let ctx = |e| fail("deg4-uniqueness", e);

    // (a) branch (r1, r2) = (1, 0)
    let fa = ProjectiveCurve::monomial(&[0, 1, 2, 4]).map_err(ctx)?;
    let wa = pair_wronskians(&fa);
    rep.expect(
        "(a) f_2 of [1, z, z^2, z^4]",
        polys_str(&wa),
        polys_str(&polys(&[&[1], &[0, 2], &[0, 0, 0, 4], &[0, 0, 1], &[0, 0, 0, 0, 3], &[0, 0, 0, 0, 0, 2]])),
    )?;
    rep.expect("(a) rank of f_2", coefficient_matrix(&wa).rank(), 6)?;
    rep.expect(
        "(a) recoverBeta",
        format!("{:?}", recover_beta(&fa).err()),
        format!("{:?}", Some(Error::NotContact)),
    )?;

    // (b) R_2 = 2p with v0 = e0, v1 = e1, v2 = x, v3 = y, v4 = w
    let v = |name: &str| -> Vec<MultiPoly> { (0..4).map(|k| MultiPoly::var(&format!("{name}{k}"))).collect() };
    let unit = |k: usize| -> Vec<MultiPoly> { (0..4).map(|j| MultiPoly::int((j == k) as i64)).collect() };
    let (v0, v1, x, y, w) = (unit(0), unit(1), v("x"), v("y"), v("w"));
    let wedge = |a: &[MultiPoly], b: &[MultiPoly]| -> Vec<MultiPoly> {
        PAIRS.iter().map(|&(i, j)| &(&a[i] * &b[j]) - &(&a[j] * &b[i])).collect()
    };
    let b0 = wedge(&v0, &v1);
    let b1 = wedge(&v0, &x);
    let b2: Vec<MultiPoly> = wedge(&v0, &y)
        .iter()
        .zip(wedge(&v1, &x))
        .map(|(p, q)| &p.scale(&num_rational::BigRational::from_integer(3.into())) + &q)
        .collect();
    let mut forced: Vec<String> = Vec::new();
    for other in [&b1, &b2] {
        for (i, j) in (0..6).flat_map(|i| (i + 1..6).map(move |j| (i, j))) {
            let minor = &(&b0[i] * &other[j]) - &(&b0[j] * &other[i]);
            if minor.is_zero() {
                continue;
            }
            let Some((_, m)) = minor.as_single_term() else {
                return Err(Error::VerificationFailed(format!(
                    "deg4-uniqueness: (b) proportionality minor {minor} is not a monomial"
                )));
            };
            let vars: Vec<&str> = m.vars().collect();
            if vars.len() != 1 || m.total_degree() != 1 {
                return Err(Error::VerificationFailed(format!(
                    "deg4-uniqueness: (b) minor {minor} does not force a single coordinate"
                )));
            }
            forced.push(vars[0].to_string());
        }
    }
    forced.sort();
    forced.dedup();
    rep.expect("(b) forced zero coordinates", forced.join(", "), "x2, x3, y2, y3".to_string())?;
    let sub = |vec: &[MultiPoly]| -> Vec<MultiPoly> {
        vec.iter()
            .map(|e| forced.iter().fold(e.clone(), |acc, var| acc.substitute(var, &MultiPoly::zero())))
            .collect()
    };
    let (x, y) = (sub(&x), sub(&y));
    let cols = [&v0, &v1, &x, &y, &w];
    let minors: Vec<MultiPoly> = combinations(5, 4)
        .map(|sel| {
            let m: Vec<Vec<MultiPoly>> = (0..4).map(|r| sel.iter().map(|&c| cols[c][r].clone()).collect()).collect();
            fraction_free_det(&m)
        })
        .collect();
    rep.require("(b) v0..v4 cannot span (all 4x4 minors vanish)", minors.iter().all(MultiPoly::is_zero))?;

    // (c) branch (0, 2) with R_2 = p + q
    let fc = ProjectiveCurve::monomial(&[0, 1, 3, 4]).map_err(ctx)?;
    rep.expect(
        "(c) f_2 of [1, z, z^3, z^4]",
        polys_str(&pair_wronskians(&fc)),
        polys_str(&polys(&[&[1], &[0, 0, 3], &[0, 0, 0, 4], &[0, 0, 0, 2], &[0, 0, 0, 0, 3], &[0, 0, 0, 0, 0, 0, 1]])),
    )?;
    let beta = recover_beta(&fc).map_err(ctx)?;
    rep.expect("(c) beta", beta.clone(), SymplecticForm::from_ints([0, 0, 1, -2, 0, 0]).unwrap())?;
    rep.expect("(c) R_1", fc.ramification_divisor(1).map_err(ctx)?, Divisor::new())?;
    rep.expect("(c) R_2", fc.ramification_divisor(2).map_err(ctx)?, ends(1))?;
    Ok(rep)
}

fn polys_str(ps: &[UniPoly]) -> String {
    let parts: Vec<String> = ps.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// No null curve of degree 5: the forced profile `(1, 0)` contradicts the
/// unique degree-4 contact profile `(0, 2)`.
pub fn verify_deg5_nonexistence() -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("deg5-nonexistence");
    let prof = enumerate_profiles(5);
    let sols: Vec<(i64, i64, i64)> = prof.solutions.iter().map(|p| (p.r1, p.r2, p.deg_f)).collect();
    rep.expect("profiles of degree 5 (r1, r2, deg f)", format!("{sols:?}"), "[(1, 0, 4)]".to_string())?;
    let deg4 = verify_deg4_uniqueness()?;
    rep.absorb(&deg4);
    let f = ProjectiveCurve::monomial(&[0, 1, 3, 4]).map_err(|e| fail("deg5-nonexistence", e))?;
    let prof4 = f.ramification_profile().map_err(|e| fail("deg5-nonexistence", e))?;
    let pair = (prof4.totals[0], prof4.totals[1]);
    rep.expect("degree-4 contact profile (r1, r2)", format!("{pair:?}"), "(0, 2)".to_string())?;
    rep.require("nonexistence (required profile differs)", sols.iter().all(|&(r1, r2, _)| (r1, r2) != pair))?;
    Ok(rep)
}

/// A surviving degree-6 null curve and its contact curve.
#[derive(Clone, Debug)]
pub struct Deg6Representative {
    pub contact_curve: ProjectiveCurve,
    pub beta: SymplecticForm,
    pub null_degree: usize,
    pub branch_divisor: Divisor,
}

#[derive(Clone, Debug)]
pub struct Deg6Report {
    pub report: VerificationReport,
    pub representatives: Vec<Deg6Representative>,
}

fn representative(f: &ProjectiveCurve) -> Result<Deg6Representative> {
    let (beta, g) = klein_forward_with_recovery(f)?;
    Ok(Deg6Representative {
        contact_curve: f.clone(),
        beta,
        null_degree: g.curve().degree(),
        branch_divisor: g.curve().branch_divisor()?,
    })
}

/// Exactly two degree-6 null curves: one from `[1, z, z³, z⁴]`, branched
/// at two points, and one from `[1, z², z³, z⁵]`, unbranched.
pub fn verify_deg6_classification() -> Result<Deg6Report> {
    let name = "deg6-classification";
    let ctx = |e| fail(name, e);
    let mut rep = VerificationReport::new(name);
    let sols: Vec<(i64, i64)> = enumerate_profiles(6).solutions.iter().map(|p| (p.r1, p.r2)).collect();
    rep.expect("profiles (r1, r2)", format!("{sols:?}"), "[(0, 2), (2, 0)]".to_string())?;
    let mut reps = Vec::new();

    // (a) profile (0, 2)
    let deg4 = verify_deg4_uniqueness()?;
    rep.absorb(&deg4);
    let fa = ProjectiveCurve::monomial(&[0, 1, 3, 4]).map_err(ctx)?;
    let ra = representative(&fa).map_err(ctx)?;
    rep.expect("(a) deg g", ra.null_degree, 6)?;
    rep.expect("(a) branch divisor of g", ra.branch_divisor.clone(), ends(1))?;
    reps.push(ra);

    // (b) profile (2, 0), R_1 = 2p: rank 6 for every a
    let fb = [mp("1"), mp("z"), mp("z^2"), mp("a*z^3 + z^5")];
    let mb = symbolic_f2_matrix(&fb);
    rep.expect("(b) rows of the f_2 coefficient matrix", mb.len(), 7)?;
    let minors_b = maximal_minors(&mb);
    let unis: Vec<UniPoly> = minors_b
        .iter()
        .map(|(_, m)| m.to_unipoly("a").expect("minors only involve a"))
        .collect();
    let g = UniPoly::gcd_all(unis.iter().filter(|u| !u.is_zero()));
    rep.note(
        "(b) 6x6 minors",
        minors_b.iter().map(|(_, m)| m.to_string()).collect::<Vec<_>>().join(", "),
    );
    rep.expect("(b) gcd of minors in Q[a]", g.to_string(), "1".to_string())?;

    // (c) profile (2, 0), R_1 = p + q: degeneracy forces a = b = 0
    let fc = [mp("1 + a*z"), mp("z^2"), mp("z^3"), mp("b*z^4 + z^5")];
    let branches = certify_full_rank(&maximal_minors(&symbolic_f2_matrix(&fc))).map_err(ctx)?;
    for (k, br) in branches.iter().enumerate() {
        rep.note(&format!("(c) case {}", k + 1), br);
    }
    let surviving: Vec<&RankBranch> = branches.iter().filter(|b| b.is_surviving()).collect();
    let loci: Vec<String> = surviving
        .iter()
        .map(|b| {
            let mut z = b.zeros.clone();
            z.sort();
            z.join(", ")
        })
        .collect();
    rep.expect("(c) degeneracy locus", format!("{loci:?}"), "[\"a, b\"]".to_string())?;

    // (d) the surviving curve a = b = 0
    let fd = ProjectiveCurve::monomial(&[0, 2, 3, 5]).map_err(ctx)?;
    let rd = representative(&fd).map_err(ctx)?;
    rep.expect("(d) beta", rd.beta.clone(), SymplecticForm::from_ints([0, 0, 1, -5, 0, 0]).unwrap())?;
    rep.expect("(d) deg g", rd.null_degree, 6)?;
    rep.expect("(d) branch divisor of g", rd.branch_divisor.clone(), Divisor::new())?;
    reps.push(rd);

    rep.expect("surviving representatives", reps.len(), 2)?;
    rep.require(
        "branch data distinguishes the two",
        reps[0].branch_divisor.degree() != reps[1].branch_divisor.degree(),
    )?;
    for r in &reps {
        rep.note("representative", positional(&r.contact_curve));
    }
    Ok(Deg6Report {
        report: rep,
        representatives: reps,
    })
}

#[derive(Clone, Debug)]
pub struct Deg7Report {
    pub report: VerificationReport,
    /// Determinant of rows 1–6 of `M`.
    pub first_minor: MultiPoly,
    /// Determinant of rows 3–8 of `M`.
    pub last_minor: MultiPoly,
    /// Minor without rows 3 and 6 after substituting `a`, `b`, with the
    /// denominators `(p+3q)(3p+q)` cleared.
    pub middle_minor_cleared: MultiPoly,
    /// `F(1)` at `p = 1, q = -1, a = b = -1`.
    pub f_at_one: Vec<MultiPoly>,
}

/// `F(z)` in the basis `v0, v2, v3, v6` after the change of basis.
pub fn deg7_family_f() -> [MultiPoly; 4] {
    [
        mp("1 + a*z - (2*a+3)*z^2 + (a+2)*z^3"),
        mp("p*z^2 + q*z^4"),
        mp("-z^2 + 2*z^3 - z^4"),
        mp("(b+2)*z^3 - (2*b+3)*z^4 + b*z^5 + z^6"),
    ]
}

/// The 8×6 matrix `M` as printed, rows `G_0..G_7`, columns
/// `v0∧v2, v0∧v3, v0∧v6, v2∧v3, v2∧v6, v3∧v6`.
pub fn deg7_printed_matrix() -> Vec<Vec<MultiPoly>> {
    const ROWS: [[&str; 6]; 8] = [
        ["-2*p", "2", "0", "0", "0", "0"],
        ["-p*(a+2)", "a-4", "-3*(b+2)", "0", "0", "0"],
        ["-(a*p+2*p+4*q)", "-3*a", "-2*a*b-4*a+5*b+6", "0", "0", "0"],
        ["-q*(3*a+4)", "3*a+4", "6*a*b+9*a+3*b+12", "-2*p", "-p*(b+2)", "b+2"],
        ["q*(a+2)", "-(a+2)", "-6*a*b-3*a-9*b-12", "-2*q", "p*(3*b+4)", "-(3*b+4)"],
        ["0", "0", "2*a*b-5*a+4*b-6", "0", "b*q+4*p+2*q", "3*b"],
        ["0", "0", "3*(a+2)", "0", "q*(b+2)", "4-b"],
        ["0", "0", "0", "0", "2*q", "-2"],
    ];
    ROWS.iter().map(|r| r.iter().map(|s| mp(s)).collect()).collect()
}

/// Builds `M` from `F`: the coefficients of `F∧F' / (z² − z)`.
pub fn deg7_matrix_from_f() -> Result<Vec<Vec<MultiPoly>>> {
    let f = deg7_family_f();
    let df: Vec<MultiPoly> = f.iter().map(|h| h.derivative("z")).collect();
    let den = mp("z^2 - z");
    let g = PAIRS
        .iter()
        .map(|&(i, j)| {
            let w = &(&f[i] * &df[j]) - &(&f[j] * &df[i]);
            w.exact_div(&den)
                .ok_or_else(|| Error::VerificationFailed("F∧F' is not divisible by z(z-1)".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(coefficient_rows(&g))
}

/// No unbranched null curve of degree 7, in three cases for `R_1(f)`.
pub fn verify_deg7_unbranched_nonexistence() -> Result<Deg7Report> {
    let name = "deg7-unbranched";
    let ctx = |e| fail(name, e);
    let mut rep = VerificationReport::new(name);
    let sols: Vec<(i64, i64)> = enumerate_profiles(7).solutions.iter().map(|p| (p.r1, p.r2)).collect();
    rep.expect("profiles (r1, r2)", format!("{sols:?}"), "[(1, 2), (3, 0)]".to_string())?;

    // R_1 = 3p
    let f1 = [mp("1"), mp("z"), mp("z^2"), mp("a*z^3 + b*z^4 + z^6")];
    let br1 = certify_full_rank(&maximal_minors(&symbolic_f2_matrix(&f1))).map_err(ctx)?;
    rep.note("R_1 = 3p: certificate", br1.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "));
    rep.require("R_1 = 3p: rank 6 for all (a, b)", br1.iter().all(|b| !b.is_surviving()))?;

    // R_1 = 2p + q
    let f2 = [mp("1 + a*z"), mp("z^2"), mp("z^3"), mp("b*z^4 + c*z^5 + z^6")];
    let br2 = certify_full_rank(&maximal_minors(&symbolic_f2_matrix(&f2))).map_err(ctx)?;
    rep.note("R_1 = 2p+q: certificate", br2.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "));
    rep.require("R_1 = 2p+q: rank 6 for all (a, b, c)", br2.iter().all(|b| !b.is_surviving()))?;

    // R_1 = p + q + s
    let built = deg7_matrix_from_f().map_err(ctx)?;
    let printed = deg7_printed_matrix();
    for (r, (row_b, row_p)) in built.iter().zip(&printed).enumerate() {
        for (c, (x, y)) in row_b.iter().zip(row_p).enumerate() {
            if x != y {
                return Err(Error::VerificationFailed(format!(
                    "{name}: M[{}][{}] built as {x}, printed {y}",
                    r + 1,
                    c + 1
                )));
            }
        }
    }
    rep.expect("M shape", format!("{}x{}", built.len(), built[0].len()), "8x6".to_string())?;
    rep.note("M built from F matches the printed matrix", "48 entries equal");

    let first = fraction_free_det(&select_rows(&built, &[0, 1, 2, 3, 4, 5]));
    rep.expect("det rows 1-6", first.clone(), mp("-48*((3*p+q)*b + 4*p + 2*q)^3"))?;
    let last = fraction_free_det(&select_rows(&built, &[2, 3, 4, 5, 6, 7]));
    rep.expect("det rows 3-8", last.clone(), mp("-48*((p+3*q)*a + 2*p + 4*q)^3"))?;

    // nonvanishing of the denominators
    let e1 = mp("(3*p+q)*b + 4*p + 2*q");
    rep.expect("first factor at 3p+q = 0", e1.substitute("q", &mp("-3*p")), mp("-2*p"))?;
    let e2 = mp("(p+3*q)*a + 2*p + 4*q");
    rep.expect("second factor at p+3q = 0", e2.substitute("p", &mp("-3*q")), mp("-2*q"))?;
    let (a_num, a_den) = (mp("-(2*p+4*q)"), mp("p+3*q"));
    let (b_num, b_den) = (mp("-(4*p+2*q)"), mp("3*p+q"));
    rep.expect("numerator of a+2", &a_num + &(&MultiPoly::int(2) * &a_den), mp("2*q"))?;
    rep.expect("numerator of b+2", &b_num + &(&MultiPoly::int(2) * &b_den), mp("2*p"))?;

    let middle = fraction_free_det(&select_rows(&built, &[0, 1, 3, 4, 6, 7]));
    let (sa, da) = middle.substitute_fraction("a", &a_num, &a_den);
    let (sab, db) = sa.substitute_fraction("b", &b_num, &b_den);
    rep.expect("denominator powers cleared (a, b)", format!("({da}, {db})"), "(1, 1)".to_string())?;
    rep.expect(
        "minor without rows 3, 6 times (p+3q)(3p+q)",
        sab.clone(),
        mp("8640*p*q*(p+q)^3"),
    )?;
    rep.note("minor without rows 3, 6", "8640*p*q*(p+q)^3/((p+3*q)*(3*p+q))");

    // p + q = 0, scaled to p = 1, q = -1
    let sub_pq = |m: &MultiPoly| m.substitute("p", &MultiPoly::int(1)).substitute("q", &MultiPoly::int(-1));
    let a_val = sub_pq(&a_num).as_constant().unwrap() / sub_pq(&a_den).as_constant().unwrap();
    let b_val = sub_pq(&b_num).as_constant().unwrap() / sub_pq(&b_den).as_constant().unwrap();
    rep.expect("a at p = 1, q = -1", a_val.to_string(), "-1".to_string())?;
    rep.expect("b at p = 1, q = -1", b_val.to_string(), "-1".to_string())?;
    let f_final: Vec<MultiPoly> = deg7_family_f()
        .iter()
        .map(|h| {
            sub_pq(h)
                .substitute("a", &MultiPoly::int(-1))
                .substitute("b", &MultiPoly::int(-1))
        })
        .collect();
    let printed_final = [
        mp("1 - z - z^2 + z^3"),
        mp("z^2 - z^4"),
        mp("-z^2 + 2*z^3 - z^4"),
        mp("z^3 - z^4 - z^5 + z^6"),
    ];
    rep.expect(
        "final F",
        format!("{f_final:?}"),
        format!("{:?}", printed_final.to_vec()),
    )?;
    let f_at_one: Vec<MultiPoly> = f_final.iter().map(|h| h.substitute("z", &MultiPoly::one())).collect();
    rep.require("F(1) = 0", f_at_one.iter().all(MultiPoly::is_zero))?;
    Ok(Deg7Report {
        report: rep,
        first_minor: first,
        last_minor: last,
        middle_minor_cleared: sab,
        f_at_one,
    })
}

/// The branched degree-7 example `[1−5z², z−3z², z⁴−3z³, z⁵−5z³]`.
pub fn verify_deg7_branched_example() -> Result<VerificationReport> {
    let name = "deg7-branched";
    let ctx = |e| fail(name, e);
    let mut rep = VerificationReport::new(name);
    let f = ProjectiveCurve::from_ints(&[&[1, 0, -5], &[0, 1, -3], &[0, 0, 0, -3, 1], &[0, 0, 0, -5, 0, 1]])
        .map_err(ctx)?;
    let beta = recover_beta(&f).map_err(ctx)?;
    rep.note("beta", &beta);
    rep.require("contact", is_contact(&f, &beta).map_err(ctx)?)?;
    let one = Place::FinitePoint(FieldElem::one());
    rep.expect("R_1(f)", f.ramification_divisor(1).map_err(ctx)?, Divisor::from_terms([(one, 1)]))?;
    rep.expect("R_2(f)", f.ramification_divisor(2).map_err(ctx)?, ends(1))?;
    let (_, g) = klein_forward_with_recovery(&f).map_err(ctx)?;
    rep.expect("deg g", g.curve().degree(), 7)?;
    rep.expect("branch divisor of g", g.curve().branch_divisor().map_err(ctx)?, ends(1))?;
    let p = f.ramification_profile().map_err(ctx)?;
    rep.expect("profile (r1, r2)", format!("{:?}", (p.totals[0], p.totals[1])), "(1, 2)".to_string())?;
    let allowed: Vec<(i64, i64)> = enumerate_profiles(7)
        .solutions
        .iter()
        .map(|s| (s.r1, s.r2))
        .filter(|&(_, r2)| r2 > 0)
        .collect();
    rep.expect("branched profiles of degree 7", format!("{allowed:?}"), "[(1, 2)]".to_string())?;
    Ok(rep)
}

/// Names accepted by [`verify_by_name`].
pub const VERIFIERS: [&str; 5] = [
    "deg4-uniqueness",
    "deg5-nonexistence",
    "deg6-classification",
    "deg7-unbranched",
    "deg7-branched",
];

pub fn verify_by_name(name: &str) -> Option<Result<VerificationReport>> {
    Some(match name {
        "deg4-uniqueness" => verify_deg4_uniqueness(),
        "deg5-nonexistence" => verify_deg5_nonexistence(),
        "deg6-classification" => verify_deg6_classification().map(|r| r.report),
        "deg7-unbranched" => verify_deg7_unbranched_nonexistence().map(|r| r.report),
        "deg7-branched" => verify_deg7_branched_example(),
        _ => return None,
    })
}
