//! The Klein correspondence between contact curves in P³ and null curves in
//! the quadric Q³ ⊂ P⁴.
//!
//! For a symplectic form `β`, the bivectors annihilated by `β` form a
//! 5-space `W`. With `Ω = ½β∧β = Pf(β)·ξ0∧ξ1∧ξ2∧ξ3`, the inner product on `W`
//! is `⟨w₁, w₂⟩ = Ω(w₁∧w₂) = Pf(β)·B(w₁, w₂)`, where `B` reads off the
//! `v0∧v1∧v2∧v3` coefficient of `w₁∧w₂`:
//!
//! ```text
//! B(x, y) = x01 y23 − x02 y13 + x03 y12 + x12 y03 − x13 y02 + x23 y01
//! ```
//!
//! A contact curve `F` maps to `G = F∧F'`, which lies in `W`. The null
//! condition `⟨G, G⟩ = ⟨G, G'⟩ = ⟨G', G'⟩ = 0` holds for every such image.
//!
//! Null curves can also be presented in the standard quadric model
//! `X0X4 − X1² − X2² − X3² = 0`. [`model_change`] moves between the two.

use crate::contact::{is_contact, pair_wronskians, SymplecticForm, PAIRS};
use crate::curve::ProjectiveCurve;
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::linalg::{primitive_vector, Matrix};
use crate::place::{Divisor, Place};
use crate::poly::{RatFunction, UniPoly};
use crate::wronskian::linear_combination;

/// Coefficient of `v0∧v1∧v2∧v3` in `x∧y` for bivectors in lex pair order.
pub fn wedge4<T>(x: &[T], y: &[T]) -> T
where
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
    T: std::ops::Add<Output = T> + std::ops::Sub<Output = T>,
{
    &x[0] * &y[5] - &x[1] * &y[4] + &x[2] * &y[3] + &x[3] * &y[2] - &x[4] * &y[1] + &x[5] * &y[0]
}

/// `W = β^⊥` with an integral basis and its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WModel {
    beta: SymplecticForm,
    basis: Vec<Vec<FieldElem>>,
    gram: Matrix,
}

impl WModel {
    pub fn beta(&self) -> &SymplecticForm {
        &self.beta
    }

    /// Five bivectors in lex pair coordinates.
    pub fn basis(&self) -> &[Vec<FieldElem>] {
        &self.basis
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    fn basis_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(6, 5);
        for (a, w) in self.basis.iter().enumerate() {
            for (k, x) in w.iter().enumerate() {
                m[(k, a)] = x.clone();
            }
        }
        m
    }

    /// Polynomial bivector `Σ c_a w_a`.
    pub fn to_bivector(&self, c: &[UniPoly]) -> Vec<UniPoly> {
        let m = self.basis_matrix();
        (0..6).map(|k| linear_combination(m.row(k), c)).collect()
    }

    /// Coordinates of a polynomial bivector in the basis, if it lies in `W`.
    pub fn from_bivector(&self, g: &[UniPoly]) -> Option<Vec<UniPoly>> {
        let left = self.basis_matrix().left_inverse().expect("basis is independent");
        let c: Vec<UniPoly> = (0..5).map(|a| linear_combination(left.row(a), g)).collect();
        (self.to_bivector(&c) == g).then_some(c)
    }
}

/// Builds `W = β^⊥`. Basis vectors come from the kernel of the pairing with
/// `β`, one per free coordinate, each scaled to a primitive integral vector.
pub fn build_w_model(beta: &SymplecticForm) -> Result<WModel> {
    let pf = beta.pfaffian();
    if pf.is_zero() {
        return Err(Error::DegenerateForm);
    }
    let row = Matrix::from_rows(vec![beta.coeffs().to_vec()], 6);
    let basis: Vec<Vec<FieldElem>> = row.kernel_basis().iter().map(|v| primitive_vector(v)).collect();
    let mut gram = Matrix::zeros(5, 5);
    for i in 0..5 {
        for j in 0..5 {
            gram[(i, j)] = &pf * &wedge4(&basis[i], &basis[j]);
        }
    }
    Ok(WModel {
        beta: beta.clone(),
        basis,
        gram,
    })
}

/// Gram matrix of `X0X4 − X1² − X2² − X3²`.
pub fn standard_quadric_gram() -> Matrix {
    let mut s = Matrix::zeros(5, 5);
    s[(0, 4)] = FieldElem::from_ratio(1, 2);
    s[(4, 0)] = FieldElem::from_ratio(1, 2);
    for k in 1..4 {
        s[(k, k)] = FieldElem::from_int(-1);
    }
    s
}

/// Where a null curve lives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NullModel {
    W(WModel),
    StandardQuadric,
}

impl NullModel {
    pub fn gram(&self) -> Matrix {
        match self {
            NullModel::W(w) => w.gram().clone(),
            NullModel::StandardQuadric => standard_quadric_gram(),
        }
    }
}

/// A curve in P⁴ together with the quadric it is null for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NullCurve {
    curve: ProjectiveCurve,
    model: NullModel,
}

impl NullCurve {
    /// Checks the null identities before accepting the pair.
    pub fn new(curve: ProjectiveCurve, model: NullModel) -> Result<Self> {
        if curve.ambient_dim() != 4 {
            return Err(Error::WrongDimension {
                expected: 4,
                actual: curve.ambient_dim(),
            });
        }
        let ids = null_identities(&curve, &model.gram());
        if let Some(which) = ids.first_failure() {
            return Err(Error::NotNull(which));
        }
        Ok(NullCurve { curve, model })
    }

    pub fn curve(&self) -> &ProjectiveCurve {
        &self.curve
    }

    pub fn model(&self) -> &NullModel {
        &self.model
    }
}

/// `⟨G,G⟩`, `⟨G,G'⟩`, `⟨G',G'⟩` as polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NullIdentities {
    pub gg: UniPoly,
    pub gdg: UniPoly,
    pub dgdg: UniPoly,
}

impl NullIdentities {
    pub fn all_zero(&self) -> bool {
        self.first_failure().is_none()
    }

    fn first_failure(&self) -> Option<&'static str> {
        if !self.gg.is_zero() {
            Some("<G,G> != 0")
        } else if !self.dgdg.is_zero() {
            Some("<G',G'> != 0")
        } else if !self.gdg.is_zero() {
            Some("<G,G'> != 0")
        } else {
            None
        }
    }
}

fn quadratic(gram: &Matrix, x: &[UniPoly], y: &[UniPoly]) -> UniPoly {
    let mut acc = UniPoly::zero();
    for i in 0..gram.rows() {
        for j in 0..gram.cols() {
            if gram[(i, j)].is_zero() || x[i].is_zero() || y[j].is_zero() {
                continue;
            }
            acc = &acc + &(&x[i] * &y[j]).scale(&gram[(i, j)]);
        }
    }
    acc
}

pub fn null_identities(g: &ProjectiveCurve, gram: &Matrix) -> NullIdentities {
    let x = g.coords();
    let dx = g.derivative_coords();
    NullIdentities {
        gg: quadratic(gram, x, x),
        gdg: quadratic(gram, x, &dx),
        dgdg: quadratic(gram, &dx, &dx),
    }
}

pub fn is_null_curve(g: &ProjectiveCurve, gram: &Matrix) -> bool {
    g.coords().len() == gram.rows() && null_identities(g, gram).all_zero()
}

/// `g = f_2` read in the basis of `W = β^⊥`.
pub fn klein_forward(f: &ProjectiveCurve, beta: &SymplecticForm) -> Result<NullCurve> {
    if f.ambient_dim() != 3 {
        return Err(Error::WrongDimension {
            expected: 3,
            actual: f.ambient_dim(),
        });
    }
    match f.rank() {
        0..=2 => return Err(Error::LinearCurve),
        3 => return Err(Error::NotContact),
        _ => {}
    }
    if !is_contact(f, beta)? {
        return Err(Error::NotContact);
    }
    let w = build_w_model(beta)?;
    let coords = w.from_bivector(&pair_wronskians(f)).ok_or(Error::NotContact)?;
    let curve = ProjectiveCurve::normalize(coords)?;
    let ids = null_identities(&curve, w.gram());
    if let Some(which) = ids.first_failure() {
        return Err(Error::IdentityViolated(format!("forward image: {which}")));
    }
    if !curve.is_nondegenerate() {
        return Err(Error::IdentityViolated("forward image is degenerate in P^4".into()));
    }
    Ok(NullCurve {
        curve,
        model: NullModel::W(w),
    })
}

fn antisym_column(g: &[UniPoly], j: usize) -> Vec<UniPoly> {
    (0..4)
        .map(|i| match i.cmp(&j) {
            std::cmp::Ordering::Equal => UniPoly::zero(),
            std::cmp::Ordering::Less => g[crate::contact::pair_index(i, j)].clone(),
            std::cmp::Ordering::Greater => -g[crate::contact::pair_index(i, j)].clone(),
        })
        .collect()
}

fn wedge2(a: &[UniPoly], b: &[UniPoly]) -> Vec<UniPoly> {
    PAIRS
        .iter()
        .map(|&(i, j)| &(&a[i] * &b[j]) - &(&a[j] * &b[i]))
        .collect()
}

/// `x∧G` for a vector and a bivector; components `012, 013, 023, 123`.
fn wedge_trivector(x: &[UniPoly], g: &[UniPoly]) -> Vec<UniPoly> {
    let gij = |i, j| &g[crate::contact::pair_index(i, j)];
    [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
        .iter()
        .map(|&(i, j, k)| &(&(&x[i] * gij(j, k)) - &(&x[j] * gij(i, k))) + &(&x[k] * gij(i, j)))
        .collect()
}

/// Recovers the contact curve `F` with `F∧F' ∝ G`.
///
/// The columns of the antisymmetric matrix of `G` span the plane of `G`,
/// and the same holds for `G'`. For `G = F∧F'` those planes meet in the
/// line through `F`, found as the combination `x = αa + βb` of two
/// independent columns with `x∧G' = 0`.
pub fn klein_inverse(g: &NullCurve) -> Result<ProjectiveCurve> {
    let ids = null_identities(&g.curve, &g.model.gram());
    if let Some(which) = ids.first_failure() {
        return Err(Error::NotNull(which));
    }
    let (w, coords) = match &g.model {
        NullModel::W(w) => (w.clone(), g.curve.coords().to_vec()),
        NullModel::StandardQuadric => {
            let moved = model_change(g)?;
            let NullModel::W(w) = moved.model else { unreachable!() };
            (w, moved.curve.coords().to_vec())
        }
    };
    let big_g = w.to_bivector(&coords);
    let decomposable = &(&(&big_g[0] * &big_g[5]) - &(&big_g[1] * &big_g[4])) + &(&big_g[2] * &big_g[3]);
    if !decomposable.is_zero() {
        return Err(Error::NotDecomposable);
    }
    let dg: Vec<UniPoly> = big_g.iter().map(UniPoly::derivative).collect();
    let cols: Vec<Vec<UniPoly>> = (0..4).map(|j| antisym_column(&big_g, j)).collect();
    let (a, b) = (0..4)
        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
        .find(|&(i, j)| wedge2(&cols[i], &cols[j]).iter().any(|x| !x.is_zero()))
        .map(|(i, j)| (&cols[i], &cols[j]))
        .ok_or(Error::LinearCurve)?;
    let ta = wedge_trivector(a, &dg);
    let tb = wedge_trivector(b, &dg);
    let t = (0..4)
        .find(|&t| !ta[t].is_zero() || !tb[t].is_zero())
        .ok_or(Error::LinearCurve)?;
    let raw: Vec<UniPoly> = (0..4).map(|k| &(&tb[t] * &a[k]) - &(&ta[t] * &b[k])).collect();
    if raw.iter().all(UniPoly::is_zero) {
        return Err(Error::LinearCurve);
    }
    let f = ProjectiveCurve::normalize(raw)?;
    match f.rank() {
        0..=2 => return Err(Error::LinearCurve),
        3 => return Err(Error::IdentityViolated("recovered curve is planar".into())),
        _ => {}
    }
    let expect = ProjectiveCurve::normalize(big_g)?;
    if ProjectiveCurve::normalize(pair_wronskians(&f))? != expect {
        return Err(Error::IdentityViolated("f_2 of recovered curve differs from G".into()));
    }
    if !is_contact(&f, w.beta())? {
        return Err(Error::IdentityViolated("recovered curve is not contact".into()));
    }
    Ok(f)
}

fn lcm(a: &UniPoly, b: &UniPoly) -> UniPoly {
    (a * b).exact_div(&a.gcd(b)).unwrap().monic()
}

/// Lifts an affine null curve `γ` to `[B², A₁B, A₂B, A₃B, ΣAᵢ²]` in the
/// standard quadric model, where `B` is the common denominator and
/// `Aᵢ = γᵢB`.
pub fn complete_null(gamma: &[RatFunction; 3]) -> Result<NullCurve> {
    if gamma.iter().all(|g| g.derivative().is_zero()) {
        return Err(Error::ConstantInput);
    }
    let b = gamma.iter().fold(UniPoly::one(), |acc, g| lcm(&acc, g.den()));
    let a: Vec<UniPoly> = gamma
        .iter()
        .map(|g| g.num() * &b.exact_div(g.den()).unwrap())
        .collect();
    let db = b.derivative();
    let null = a.iter().fold(UniPoly::zero(), |acc, ai| {
        let t = &(&ai.derivative() * &b) - &(ai * &db);
        &acc + &(&t * &t)
    });
    if !null.is_zero() {
        return Err(Error::NotNull("dγ·dγ != 0"));
    }
    let last = a.iter().fold(UniPoly::zero(), |acc, ai| &acc + &(ai * ai));
    let raw = vec![&b * &b, &a[0] * &b, &a[1] * &b, &a[2] * &b, last];
    let curve = ProjectiveCurve::normalize(raw)?;
    let ids = null_identities(&curve, &standard_quadric_gram());
    if let Some(which) = ids.first_failure() {
        return Err(Error::IdentityViolated(format!("completion: {which}")));
    }
    Ok(NullCurve {
        curve,
        model: NullModel::StandardQuadric,
    })
}

/// Poles of `γ` with their maximal orders, infinity included.
pub fn pole_divisor(gamma: &[RatFunction; 3]) -> Result<Divisor> {
    let b = gamma.iter().fold(UniPoly::one(), |acc, g| lcm(&acc, g.den()));
    let mut d = if b.is_unit() { Divisor::new() } else { Divisor::of_zeros(&b)? };
    let at_inf = gamma
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.num().degree().unwrap() as i64 - g.den().degree().unwrap() as i64)
        .max()
        .unwrap_or(0);
    if at_inf > 0 {
        d.add_term(Place::Infinity, at_inf);
    }
    Ok(d)
}

/// Basis `p0, p1, p2, p3` (matrix columns) with `β(p0, p3) = β(p1, p2) = 1`
/// and all other pairings zero, so `β(Pa, Pb) = β_std(a, b)`.
pub fn darboux_basis(beta: &SymplecticForm) -> Matrix {
    let e = |k: usize| {
        let mut v = vec![FieldElem::zero(); 4];
        v[k] = FieldElem::one();
        v
    };
    let (k, m) = PAIRS
        .iter()
        .copied()
        .find(|&(i, j)| !beta.eval(&e(i), &e(j)).is_zero())
        .expect("nondegenerate form");
    let p0 = e(k);
    let s = beta.eval(&p0, &e(m));
    let p3: Vec<FieldElem> = e(m).iter().map(|x| x / &s).collect();
    let project = |u: Vec<FieldElem>| -> Vec<FieldElem> {
        let a = beta.eval(&u, &p3);
        let b = beta.eval(&u, &p0);
        (0..4).map(|t| &(&u[t] - &(&a * &p0[t])) + &(&b * &p3[t])).collect()
    };
    let rest: Vec<Vec<FieldElem>> = (0..4).filter(|&t| t != k && t != m).map(|t| project(e(t))).collect();
    let p1 = rest[0].clone();
    let s = beta.eval(&p1, &rest[1]);
    let p2: Vec<FieldElem> = rest[1].iter().map(|x| x / &s).collect();
    let mut p = Matrix::zeros(4, 4);
    for (col, v) in [p0, p1, p2, p3].iter().enumerate() {
        for r in 0..4 {
            p[(r, col)] = v[r].clone();
        }
    }
    p
}

/// `Λ²M` applied to a polynomial bivector.
fn wedge_square_apply(m: &Matrix, g: &[UniPoly]) -> Vec<UniPoly> {
    PAIRS
        .iter()
        .map(|&(k, l)| {
            let coeffs: Vec<FieldElem> = PAIRS
                .iter()
                .map(|&(i, j)| &(&m[(k, i)] * &m[(l, j)]) - &(&m[(l, i)] * &m[(k, j)]))
                .collect();
            linear_combination(&coeffs, g)
        })
        .collect()
}

/// `X = T y` from coordinates in the basis of `W` for `ξ0∧ξ3 + ξ1∧ξ2`.
/// Satisfies `q_W = 2·(q_X ∘ T)`.
pub fn model_change_matrix() -> Matrix {
    let half = FieldElem::from_ratio(1, 2);
    let ihalf = &FieldElem::i() * &half;
    let mut t = Matrix::zeros(5, 5);
    t[(0, 0)] = FieldElem::one();
    t[(1, 1)] = half.clone();
    t[(1, 3)] = half;
    t[(2, 1)] = -&ihalf;
    t[(2, 3)] = ihalf;
    t[(3, 2)] = FieldElem::one();
    t[(4, 4)] = FieldElem::one();
    t
}

/// Moves a W-model null curve to the standard quadric model, and a
/// standard-model curve to the W-model of `ξ0∧ξ3 + ξ1∧ξ2`.
pub fn model_change(g: &NullCurve) -> Result<NullCurve> {
    match &g.model {
        NullModel::W(w) => {
            let big_g = w.to_bivector(g.curve.coords());
            let q = darboux_basis(w.beta()).inverse().expect("Darboux basis is invertible");
            let std = wedge_square_apply(&q, &big_g);
            let y = [&std[0], &std[1], &std[2], &std[4], &std[5]].map(Clone::clone);
            let t = model_change_matrix();
            let x = (0..5).map(|r| linear_combination(t.row(r), &y)).collect();
            NullCurve::new(ProjectiveCurve::normalize(x)?, NullModel::StandardQuadric)
                .map_err(|e| Error::IdentityViolated(format!("model change: {e}")))
        }
        NullModel::StandardQuadric => {
            let tinv = model_change_matrix().inverse().unwrap();
            let y = (0..5).map(|r| linear_combination(tinv.row(r), g.curve.coords())).collect();
            let w = build_w_model(&SymplecticForm::standard())?;
            NullCurve::new(ProjectiveCurve::normalize(y)?, NullModel::W(w))
                .map_err(|e| Error::IdentityViolated(format!("model change: {e}")))
        }
    }
}
