//! Symplectic forms on a 4-space and contact curves in P³.
//!
//! A 2-form `β = Σ_{i<j} c_ij ξ_i∧ξ_j` is stored by its six coefficients in
//! lexicographic pair order `01, 02, 03, 12, 13, 23`. It pairs with a
//! bivector `G = Σ G_ij v_i∧v_j` as `⟨G, β⟩ = Σ c_ij G_ij`. A curve `F` is
//! contact for `β` when `β(F, F') = ⟨F∧F', β⟩` vanishes identically, i.e.
//! when `Σ c_ij W(h_i, h_j) = 0`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::curve::{coefficient_matrix, ProjectiveCurve};
use crate::error::{Error, ParseError, Result};
use crate::field::FieldElem;
use crate::klein::{klein_forward, NullCurve};
use crate::place::{Divisor, Place};
use crate::poly::UniPoly;
use crate::wronskian::SubsetWronskians;

/// Index pairs `(i, j)`, `i < j`, in lexicographic order.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Position of `(i, j)` in [`PAIRS`].
pub fn pair_index(i: usize, j: usize) -> usize {
    PAIRS
        .iter()
        .position(|&p| p == (i.min(j), i.max(j)))
        .expect("indices below 4 and distinct")
}

/// Nondegenerate antisymmetric 2-form, canonically scaled so that the first
/// nonzero coefficient is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymplecticForm {
    c: [FieldElem; 6],
}

impl SymplecticForm {
    pub fn new(c: [FieldElem; 6]) -> Result<Self> {
        if pfaffian(&c).is_zero() {
            return Err(Error::DegenerateForm);
        }
        let lead = c.iter().find(|x| !x.is_zero()).unwrap().inv().unwrap();
        Ok(SymplecticForm {
            c: c.map(|x| &x * &lead),
        })
    }

    pub fn from_ints(c: [i64; 6]) -> Result<Self> {
        Self::new(c.map(FieldElem::from_int))
    }

    /// `ξ0∧ξ3 + ξ1∧ξ2`.
    pub fn standard() -> Self {
        Self::from_ints([0, 0, 1, 1, 0, 0]).unwrap()
    }

    pub fn coeffs(&self) -> &[FieldElem; 6] {
        &self.c
    }

    /// Coefficient of `ξ_i∧ξ_j`, antisymmetric in `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> FieldElem {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => FieldElem::zero(),
            std::cmp::Ordering::Less => self.c[pair_index(i, j)].clone(),
            std::cmp::Ordering::Greater => -&self.c[pair_index(i, j)],
        }
    }

    pub fn pfaffian(&self) -> FieldElem {
        pfaffian(&self.c)
    }

    /// `β(x, y) = Σ_{i<j} c_ij (x_i y_j − x_j y_i)`.
    pub fn eval(&self, x: &[FieldElem], y: &[FieldElem]) -> FieldElem {
        PAIRS
            .iter()
            .zip(&self.c)
            .fold(FieldElem::zero(), |acc, (&(i, j), c)| {
                acc + c * &(&x[i] * &y[j] - &x[j] * &y[i])
            })
    }

    /// `⟨G, β⟩` for a bivector in lex pair coordinates.
    pub fn pair(&self, g: &[FieldElem]) -> FieldElem {
        self.c.iter().zip(g).fold(FieldElem::zero(), |acc, (c, x)| acc + c * x)
    }

    /// `⟨G, β⟩` for a polynomial bivector.
    pub fn pair_poly(&self, g: &[UniPoly]) -> UniPoly {
        crate::wronskian::linear_combination(&self.c, g)
    }
}

fn pfaffian(c: &[FieldElem; 6]) -> FieldElem {
    &c[0] * &c[5] - &c[1] * &c[4] + &c[2] * &c[3]
}

/// `(1)·xi0^xi3 + (-3)·xi1^xi2`.
impl fmt::Display for SymplecticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&(i, j), c) in PAIRS.iter().zip(&self.c) {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})·xi{i}^xi{j}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymplecticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SymplecticForm {
    type Err = ParseError;

    /// Six comma- or space-separated coefficients `c01 c02 c03 c12 c13 c23`.
    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let parts: Vec<&str> = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .collect();
        if parts.len() != 6 {
            return Err(ParseError::BadExpression {
                pos: 0,
                msg: format!("expected 6 coefficients, got {}", parts.len()),
            });
        }
        let mut c: [FieldElem; 6] = Default::default();
        for (slot, p) in c.iter_mut().zip(&parts) {
            *slot = p.parse()?;
        }
        SymplecticForm::new(c).map_err(|_| ParseError::BadExpression {
            pos: 0,
            msg: "2-form has zero Pfaffian".to_string(),
        })
    }
}

fn require_p3(f: &ProjectiveCurve) -> Result<()> {
    if f.ambient_dim() != 3 {
        return Err(Error::WrongDimension {
            expected: 3,
            actual: f.ambient_dim(),
        });
    }
    Ok(())
}

/// The six pair Wronskians `W(h_i, h_j)` in lex order.
pub fn pair_wronskians(f: &ProjectiveCurve) -> Vec<UniPoly> {
    SubsetWronskians::new(f.coords(), 2).of_size(2)
}

pub fn is_contact(f: &ProjectiveCurve, beta: &SymplecticForm) -> Result<bool> {
    require_p3(f)?;
    if !f.is_nondegenerate() {
        return Err(Error::DegenerateCurve);
    }
    Ok(beta.pair_poly(&pair_wronskians(f)).is_zero())
}

/// The unique `β` (up to scale) for which `f` is contact.
pub fn recover_beta(f: &ProjectiveCurve) -> Result<SymplecticForm> {
    require_p3(f)?;
    if !f.is_nondegenerate() {
        return Err(Error::DegenerateCurve);
    }
    let kernel = coefficient_matrix(&pair_wronskians(f)).kernel_basis();
    match kernel.len() {
        0 => Err(Error::NotContact),
        1 => {
            let c: [FieldElem; 6] = kernel[0].clone().try_into().unwrap();
            if pfaffian(&c).is_zero() {
                return Err(Error::DegenerateFormBug);
            }
            SymplecticForm::new(c)
        }
        _ => Err(Error::DegenerateInput),
    }
}

/// A member of the monomial contact family.
#[derive(Clone, Debug)]
pub struct ContactFamilyMember {
    pub p: u32,
    pub q: u32,
    pub curve: ProjectiveCurve,
    pub beta: SymplecticForm,
    pub expected_r1: Divisor,
    pub expected_r2: Divisor,
}

/// `f = [1, z^p, z^q, z^(p+q)]` with `β = (p−q)ξ0∧ξ3 + (p+q)ξ1∧ξ2`,
/// `R_1 = (p−1)((0)+(∞))`, `R_2 = (q−p−1)((0)+(∞))`.
pub fn contact_family(p: u32, q: u32) -> Result<ContactFamilyMember> {
    if p == 0 || p >= q || p.gcd(&q) != 1 {
        return Err(Error::BadParameters(format!(
            "need coprime 0 < p < q, got p = {p}, q = {q}"
        )));
    }
    let (pu, qu) = (p as usize, q as usize);
    let curve = ProjectiveCurve::monomial(&[0, pu, qu, pu + qu])?;
    let (pi, qi) = (p as i64, q as i64);
    let beta = SymplecticForm::from_ints([0, 0, pi - qi, pi + qi, 0, 0])?;
    let ends = |m: i64| {
        Divisor::from_terms([
            (Place::FinitePoint(FieldElem::zero()), m),
            (Place::Infinity, m),
        ])
    };
    Ok(ContactFamilyMember {
        p,
        q,
        curve,
        beta,
        expected_r1: ends(pi - 1),
        expected_r2: ends(qi - pi - 1),
    })
}

/// Ramification data of a contact curve and of its Klein image.
#[derive(Clone, Debug)]
pub struct ContactReport {
    pub beta: SymplecticForm,
    pub degree: usize,
    /// `R_1(f), R_2(f), R_3(f)`.
    pub ramification: Vec<Divisor>,
    pub null_curve: NullCurve,
    pub null_degree: usize,
    /// `R_1..R_4` of the Klein image in `P(W)`.
    pub null_ramification: Vec<Divisor>,
}

impl ContactReport {
    pub fn r1(&self) -> i64 {
        self.ramification[0].degree()
    }

    pub fn r2(&self) -> i64 {
        self.ramification[1].degree()
    }
}

/// Checks the ramification transfer laws and both contact Plücker formulas.
pub fn contact_ramification_report(f: &ProjectiveCurve) -> Result<ContactReport> {
    let beta = recover_beta(f)?;
    let r = f.ramification_divisors()?;
    let g = klein_forward(f, &beta)?;
    let rg = g.curve().ramification_divisors()?;
    let check = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(Error::IdentityViolated(what.to_string()))
        }
    };
    check(r[0] == r[2], "R_1(f) = R_3(f)")?;
    check(rg[0] == r[1] && rg[3] == r[1], "R_1(f_2) = R_4(f_2) = R_2(f)")?;
    check(rg[1] == r[0] && rg[2] == r[0], "R_2(f_2) = R_3(f_2) = R_1(f)")?;
    let d = f.degree() as i64;
    let dg = g.curve().degree() as i64;
    let (r1, r2) = (r[0].degree(), r[1].degree());
    check(4 * d - 12 == 4 * r1 + 2 * r2, "4 deg f - 12 = 4 r_1 + 2 r_2")?;
    check(5 * dg - 20 == 5 * r1 + 5 * r2, "5 deg f_2 - 20 = 5 r_1 + 5 r_2")?;
    check(r2 % 2 == 0, "r_2 even")?;
    Ok(ContactReport {
        beta,
        degree: d as usize,
        ramification: r,
        null_degree: dg as usize,
        null_curve: g,
        null_ramification: rg,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[usize]) -> ProjectiveCurve {
        ProjectiveCurve::monomial(e).unwrap()
    }

    #[test]
    fn canonical_scale_and_parse() {
        let b = SymplecticForm::from_ints([0, 0, -1, 5, 0, 0]).unwrap();
        assert_eq!(b, SymplecticForm::from_ints([0, 0, 1, -5, 0, 0]).unwrap());
        assert_eq!(b.pfaffian(), FieldElem::from_int(-5));
        assert_eq!("0 0 2 2 0 0".parse::<SymplecticForm>().unwrap(), SymplecticForm::standard());
        assert!("1 0 0 0 0 0".parse::<SymplecticForm>().is_err());
        assert_eq!(SymplecticForm::from_ints([1, 0, 0, 0, 0, 0]), Err(Error::DegenerateForm));
        assert_eq!(b.entry(3, 0), FieldElem::from_int(-1));
    }

    #[test]
    fn contact_conditions() {
        let beta = SymplecticForm::from_ints([0, 0, -1, 5, 0, 0]).unwrap();
        assert!(is_contact(&mono(&[0, 2, 3, 5]), &beta).unwrap());
        let cubic = mono(&[0, 1, 2, 3]);
        let b3 = SymplecticForm::from_ints([0, 0, 1, -3, 0, 0]).unwrap();
        assert!(is_contact(&cubic, &b3).unwrap());
        assert!(!is_contact(&cubic, &SymplecticForm::standard()).unwrap());
    }

    #[test]
    fn beta_recovery() {
        let cases = [([0, 1, 2, 3], -3), ([0, 1, 3, 4], -2), ([0, 2, 3, 5], -5)];
        for (e, c) in cases {
            let expect = SymplecticForm::from_ints([0, 0, 1, c, 0, 0]).unwrap();
            assert_eq!(recover_beta(&mono(&e)).unwrap(), expect);
        }
        assert_eq!(recover_beta(&mono(&[0, 1, 2, 4])), Err(Error::NotContact));
    }

    #[test]
    fn family_parameters() {
        assert!(contact_family(2, 4).is_err());
        assert!(contact_family(3, 2).is_err());
        assert!(contact_family(0, 1).is_err());
        let m = contact_family(2, 5).unwrap();
        assert_eq!(m.expected_r2.degree(), 4);
        assert_eq!(m.curve.ramification_divisor(2).unwrap(), m.expected_r2);
    }

    #[test]
    fn transfer_laws() {
        let rep = contact_ramification_report(&contact_family(2, 3).unwrap().curve).unwrap();
        assert_eq!((rep.r1(), rep.r2(), rep.null_degree), (2, 0, 6));
        let rep = contact_ramification_report(&mono(&[0, 1, 3, 4])).unwrap();
        assert_eq!((rep.r1(), rep.r2(), rep.null_degree), (0, 2, 6));
        let rep = contact_ramification_report(&mono(&[0, 1, 2, 3])).unwrap();
        assert_eq!((rep.r1(), rep.r2(), rep.null_degree), (0, 0, 4));
    }
}
