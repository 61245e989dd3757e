//! Rational curves `P¹ → Pⁿ` and their projective invariants.
//!
//! A curve is stored as `n + 1` jointly coprime polynomials in the affine
//! coordinate `z`, scaled so that the first nonzero coordinate is monic.
//! With that normalization two curves are equal as maps iff they are equal
//! as values.
//!
//! Local invariants come from subset Wronskians. Writing `G_k` for the gcd
//! of all `k`-subset Wronskians of the coordinates, the quantity
//! `s_k(p) = ν_p(G_k)` is the minimal order of vanishing of a `k`-subset
//! Wronskian at `p`, which is unchanged by constant changes of basis. In an
//! adapted basis it equals `Σ_{j<k} a_j(p) - k(k-1)/2`, hence
//!
//! ```text
//! a_{k-1}(p) = s_k(p) - s_{k-1}(p) + (k - 1)
//! r_i(p)     = s_{i+1}(p) - 2 s_i(p) + s_{i-1}(p)
//! ```
//!
//! The point at infinity is handled by reversing the chart,
//! `h(z) ↦ z^d h(1/z)`, and working at `z = 0`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::linalg::Matrix;
use crate::place::{factor_refinement, split_rational_points, valuation, Divisor, Place};
use crate::poly::UniPoly;
use crate::wronskian::SubsetWronskians;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjectiveCurve {
    coords: Vec<UniPoly>,
}

impl ProjectiveCurve {
    /// Divides out the common factor and applies the canonical scale.
    pub fn normalize(raw: Vec<UniPoly>) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        if raw.iter().all(UniPoly::is_zero) {
            return Err(Error::AllZero);
        }
        let g = UniPoly::gcd_all(raw.iter());
        let mut coords: Vec<UniPoly> = raw.iter().map(|h| h.exact_div(&g).unwrap()).collect();
        let lead = coords
            .iter()
            .find(|h| !h.is_zero())
            .and_then(|h| h.leading_coeff())
            .unwrap()
            .inv()
            .unwrap();
        for h in &mut coords {
            *h = h.scale(&lead);
        }
        Ok(ProjectiveCurve { coords })
    }

    /// Convenience constructor from integer coefficient lists.
    pub fn from_ints(coords: &[&[i64]]) -> Result<Self> {
        Self::normalize(coords.iter().map(|c| UniPoly::from_ints(c)).collect())
    }

    /// The monomial curve `[z^e_0, ..., z^e_n]`.
    pub fn monomial(exponents: &[usize]) -> Result<Self> {
        Self::normalize(
            exponents
                .iter()
                .map(|&e| UniPoly::monomial(FieldElem::one(), e))
                .collect(),
        )
    }

    pub fn coords(&self) -> &[UniPoly] {
        &self.coords
    }

    pub fn ambient_dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn degree(&self) -> usize {
        self.coords
            .iter()
            .filter_map(UniPoly::degree)
            .max()
            .unwrap_or(0)
    }

    /// Dimension of the linear span of the coordinates.
    pub fn rank(&self) -> usize {
        coefficient_matrix(&self.coords).rank()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.rank() == self.coords.len()
    }

    /// The curve in the chart at infinity, `w = 1/z`.
    pub fn reversed(&self) -> ProjectiveCurve {
        let d = self.degree();
        ProjectiveCurve::normalize(self.coords.iter().map(|h| h.reversed(d)).collect())
            .expect("reversal of a nonzero curve is nonzero")
    }

    /// Derivative of the coordinate tuple.
    pub fn derivative_coords(&self) -> Vec<UniPoly> {
        self.coords.iter().map(UniPoly::derivative).collect()
    }

    /// Applies a constant linear change of coordinates `x ↦ A x`.
    pub fn transform(&self, a: &Matrix) -> Result<ProjectiveCurve> {
        if a.cols() != self.coords.len() {
            return Err(Error::WrongDimension {
                expected: self.ambient_dim(),
                actual: a.cols().saturating_sub(1),
            });
        }
        let raw = (0..a.rows())
            .map(|i| crate::wronskian::linear_combination(a.row(i), &self.coords))
            .collect();
        ProjectiveCurve::normalize(raw)
    }

    fn require_nondegenerate(&self) -> Result<()> {
        if self.is_nondegenerate() {
            Ok(())
        } else {
            Err(Error::DegenerateCurve)
        }
    }

    /// `a_0 < a_1 < ... < a_n` at `p`.
    pub fn vanishing_sequence(&self, p: &Place) -> Result<Vec<i64>> {
        self.require_nondegenerate()?;
        if *p == Place::Infinity {
            return self
                .reversed()
                .vanishing_sequence(&Place::FinitePoint(FieldElem::zero()));
        }
        let n1 = self.coords.len();
        let gs = wronskian_gcds(&self.coords, n1);
        let s: Vec<i64> = gs.iter().map(|g| valuation(g, p)).collect::<Result<_>>()?;
        Ok((1..=n1).map(|k| s[k] - s[k - 1] + (k as i64 - 1)).collect())
    }

    /// `R_i(f)` for `1 ≤ i ≤ n`.
    pub fn ramification_divisor(&self, i: usize) -> Result<Divisor> {
        let n = self.ambient_dim();
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        self.require_nondegenerate()?;
        Ok(ramification_divisors_upto(self, i).pop().unwrap())
    }

    /// `[R_1(f), ..., R_n(f)]`.
    pub fn ramification_divisors(&self) -> Result<Vec<Divisor>> {
        self.require_nondegenerate()?;
        Ok(ramification_divisors_upto(self, self.ambient_dim()))
    }

    /// First ramification divisor `R_1`, the branch divisor. Defined for any
    /// nonconstant curve, degenerate or not, since `r_1` only involves the
    /// first two terms of the vanishing sequence within the linear span.
    pub fn branch_divisor(&self) -> Result<Divisor> {
        if self.rank() < 2 {
            return Err(Error::DegenerateCurve);
        }
        Ok(ramification_divisors_upto(self, 1).pop().unwrap())
    }

    /// `(deg R_1, ..., deg R_n)` at genus 0.
    pub fn ramification_profile(&self) -> Result<RamificationProfile> {
        let totals = self
            .ramification_divisors()?
            .iter()
            .map(Divisor::degree)
            .collect();
        Ok(RamificationProfile { totals, genus: 0 })
    }

    /// `f_k`, coordinates the `k`-subset Wronskians in lexicographic order.
    pub fn associated_curve(&self, k: usize) -> Result<ProjectiveCurve> {
        let n = self.ambient_dim();
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { index: k, max: n });
        }
        self.require_nondegenerate()?;
        if k == 1 {
            return Ok(self.clone());
        }
        ProjectiveCurve::normalize(SubsetWronskians::new(&self.coords, k).of_size(k))
    }

    /// `f_n` read in `V*`: coordinate `j` is `(-1)^(n-j) W(h_i : i ≠ j)`.
    pub fn dual_curve(&self) -> Result<ProjectiveCurve> {
        self.require_nondegenerate()?;
        let n = self.ambient_dim();
        let table = SubsetWronskians::new(&self.coords, n);
        let raw = (0..=n)
            .map(|j| {
                let rest: Vec<usize> = (0..=n).filter(|&i| i != j).collect();
                let w = table.get(&rest).clone();
                if (n - j) % 2 == 0 {
                    w
                } else {
                    -w
                }
            })
            .collect();
        ProjectiveCurve::normalize(raw)
    }

    /// Degree, ramification and associated-curve identities at genus 0.
    pub fn plucker_report(&self) -> Result<PluckerReport> {
        self.require_nondegenerate()?;
        let n = self.ambient_dim() as i64;
        let d = self.degree() as i64;
        let divisors = self.ramification_divisors()?;
        let r: Vec<i64> = divisors.iter().map(Divisor::degree).collect();
        let lhs = (n + 1) * d - n * (n + 1);
        let rhs: i64 = r
            .iter()
            .enumerate()
            .map(|(k, ri)| (n - k as i64) * ri)
            .sum();
        if lhs != rhs {
            return Err(Error::IdentityViolated(format!(
                "Plücker: (n+1)deg f - n(n+1) = {lhs} but Σ(n+1-i)r_i = {rhs}"
            )));
        }
        let mut predicted = Vec::new();
        let mut actual = Vec::new();
        let mut sum_d = 0;
        for i in 1..=n as usize {
            let dj = d - 2 * (i as i64 - 1) - r[..i - 1].iter().sum::<i64>();
            sum_d += dj;
            let fi = self.associated_curve(i)?;
            predicted.push(sum_d);
            actual.push(fi.degree() as i64);
            if fi.degree() as i64 != sum_d {
                return Err(Error::IdentityViolated(format!(
                    "deg f_{i} = {} but Σ deg D_j = {sum_d}",
                    fi.degree()
                )));
            }
            let branch = fi.branch_divisor()?;
            if branch != divisors[i - 1] {
                return Err(Error::IdentityViolated(format!(
                    "R_1(f_{i}) = {branch} but R_{i}(f) = {}",
                    divisors[i - 1]
                )));
            }
        }
        Ok(PluckerReport {
            ambient_dim: n as usize,
            degree: d as usize,
            ramification: divisors,
            totals: r,
            lhs,
            rhs,
            associated_degrees: actual,
            predicted_degrees: predicted,
        })
    }
}

impl fmt::Display for ProjectiveCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl fmt::Debug for ProjectiveCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Degrees `r_i = deg R_i(f)`; `genus` is always 0 for computed curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationProfile {
    pub totals: Vec<i64>,
    pub genus: i64,
}

/// Both sides of the Plücker identity and the associated-curve checks.
#[derive(Clone, Debug)]
pub struct PluckerReport {
    pub ambient_dim: usize,
    pub degree: usize,
    pub ramification: Vec<Divisor>,
    pub totals: Vec<i64>,
    /// `(n+1)·deg f − n(n+1)`.
    pub lhs: i64,
    /// `Σ (n+1−i)·r_i`.
    pub rhs: i64,
    /// `deg f_i` as computed.
    pub associated_degrees: Vec<i64>,
    /// `Σ_{j≤i} deg D_j`.
    pub predicted_degrees: Vec<i64>,
}

/// Rows are powers of `z`, columns are coordinates.
pub(crate) fn coefficient_matrix(polys: &[UniPoly]) -> Matrix {
    let rows = polys.iter().filter_map(UniPoly::degree).max().map_or(0, |d| d + 1);
    let mut m = Matrix::zeros(rows, polys.len());
    for (j, h) in polys.iter().enumerate() {
        for (k, c) in h.coeffs().iter().enumerate() {
            m[(k, j)] = c.clone();
        }
    }
    m
}

/// `[G_0 = 1, G_1, ..., G_kmax]` with `G_k` the gcd of the nonzero
/// `k`-subset Wronskians.
fn wronskian_gcds(coords: &[UniPoly], kmax: usize) -> Vec<UniPoly> {
    let table = SubsetWronskians::new(coords, kmax);
    let mut out = vec![UniPoly::one()];
    for k in 1..=kmax {
        let ws = table.of_size(k);
        let g = UniPoly::gcd_all(ws.iter().filter(|w| !w.is_zero()));
        assert!(!g.is_zero(), "curve has rank below {k}");
        out.push(g);
    }
    out
}

/// `R_1..R_imax` for a curve of rank at least `imax + 1`.
fn ramification_divisors_upto(f: &ProjectiveCurve, imax: usize) -> Vec<Divisor> {
    let gs = wronskian_gcds(&f.coords, imax + 1);
    let zero = Place::FinitePoint(FieldElem::zero());
    let gs_inf = wronskian_gcds(&f.reversed().coords, imax + 1);
    let s_inf: Vec<i64> = gs_inf
        .iter()
        .map(|g| valuation(g, &zero).unwrap())
        .collect();
    let basis = factor_refinement(&gs[1..=imax + 1]).expect("Wronskian gcds are nonzero");
    let mut out = Vec::with_capacity(imax);
    for i in 1..=imax {
        let mut d = Divisor::new();
        for q in &basis {
            let locus = Place::AlgebraicLocus(q.clone());
            let s = |k: usize| valuation(&gs[k], &locus).expect("basis is refined");
            let m = s(i + 1) - 2 * s(i) + s(i - 1);
            for p in split_rational_points(q) {
                d.add_term(p, m);
            }
        }
        d.add_term(Place::Infinity, s_inf[i + 1] - 2 * s_inf[i] + s_inf[i - 1]);
        out.push(d);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[usize]) -> ProjectiveCurve {
        ProjectiveCurve::monomial(e).unwrap()
    }

    fn zero() -> Place {
        Place::FinitePoint(FieldElem::zero())
    }

    #[test]
    fn normalization() {
        let f = ProjectiveCurve::from_ints(&[&[0, 1], &[0, 0, 1], &[0, 0, 0, 1], &[0, 0, 0, 0, 1]]).unwrap();
        assert_eq!(f, mono(&[0, 1, 2, 3]));
        let g = ProjectiveCurve::from_ints(&[&[2], &[0, 2]]).unwrap();
        assert_eq!(g, mono(&[0, 1]));
        assert_eq!(ProjectiveCurve::from_ints(&[&[], &[]]), Err(Error::AllZero));
    }

    #[test]
    fn degrees_and_rank() {
        assert_eq!(mono(&[0, 1, 2, 3]).degree(), 3);
        assert_eq!(mono(&[0, 2, 3, 5]).degree(), 5);
        assert_eq!(mono(&[0]).degree(), 0);
        assert!(mono(&[0, 1, 2, 4]).is_nondegenerate());
        let dep = ProjectiveCurve::from_ints(&[&[1], &[0, 1], &[0, 2], &[0, 0, 1]]).unwrap();
        assert!(!dep.is_nondegenerate());
        assert_eq!(dep.vanishing_sequence(&zero()), Err(Error::DegenerateCurve));
    }

    #[test]
    fn vanishing_sequences() {
        let f = mono(&[0, 2, 3, 5]);
        assert_eq!(f.vanishing_sequence(&zero()).unwrap(), vec![0, 2, 3, 5]);
        assert_eq!(f.vanishing_sequence(&Place::Infinity).unwrap(), vec![0, 2, 3, 5]);
        let one = Place::FinitePoint(FieldElem::one());
        assert_eq!(f.vanishing_sequence(&one).unwrap(), vec![0, 1, 2, 3]);
        let c = mono(&[0, 1, 2, 3]);
        assert_eq!(c.vanishing_sequence(&one).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn ramification_of_monomial_curves() {
        let f = mono(&[0, 2, 3, 5]);
        let both = Divisor::from_terms([(zero(), 1), (Place::Infinity, 1)]);
        assert_eq!(f.ramification_divisor(1).unwrap(), both);
        assert!(f.ramification_divisor(2).unwrap().is_zero());
        assert_eq!(f.ramification_divisor(3).unwrap(), both);
        assert_eq!(
            f.ramification_divisor(4),
            Err(Error::IndexOutOfRange { index: 4, max: 3 })
        );
        for i in 1..=3 {
            assert!(mono(&[0, 1, 2, 3]).ramification_divisor(i).unwrap().is_zero());
        }
    }

    #[test]
    fn associated_and_dual() {
        let c = mono(&[0, 1, 2, 3]);
        let f2 = c.associated_curve(2).unwrap();
        let expect = ProjectiveCurve::from_ints(&[
            &[1],
            &[0, 2],
            &[0, 0, 3],
            &[0, 0, 1],
            &[0, 0, 0, 2],
            &[0, 0, 0, 0, 1],
        ])
        .unwrap();
        assert_eq!(f2, expect);
        assert_eq!(c.associated_curve(1).unwrap(), c);
        assert_eq!(c.associated_curve(3).unwrap().degree(), 3);
        let dual = c.dual_curve().unwrap();
        assert_eq!(dual.degree(), 3);
        assert!(dual.ramification_divisors().unwrap().iter().all(Divisor::is_zero));
        let g = mono(&[0, 1, 3, 4]);
        assert_eq!(g.dual_curve().unwrap().dual_curve().unwrap(), g);
    }

    #[test]
    fn plucker_examples() {
        let r = mono(&[0, 1, 2, 3]).plucker_report().unwrap();
        assert_eq!((r.lhs, r.rhs), (0, 0));
        let r = mono(&[0, 2, 3, 5]).plucker_report().unwrap();
        assert_eq!((r.lhs, r.totals.clone()), (8, vec![2, 0, 2]));
        let r = mono(&[0, 1, 3, 4]).plucker_report().unwrap();
        assert_eq!((r.lhs, r.totals), (4, vec![0, 2, 0]));
    }

    #[test]
    fn algebraic_locus_ramification() {
        // W(12, 12z, z^4 + 6z^2) is a multiple of z^2 + 1
        let f = ProjectiveCurve::from_ints(&[&[12], &[0, 12], &[0, 0, 6, 0, 1]]).unwrap();
        let locus = Place::AlgebraicLocus(UniPoly::from_ints(&[1, 0, 1]));
        assert_eq!(f.ramification_divisor(1).unwrap(), Divisor::from_terms([(Place::Infinity, 2)]));
        assert_eq!(f.ramification_divisor(2).unwrap(), Divisor::from_terms([(locus, 1)]));
        let r = f.plucker_report().unwrap();
        assert_eq!((r.lhs, r.rhs), (6, 6));
    }
}
