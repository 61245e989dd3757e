//! Places and divisors on the projective line.
//!
//! Points of P¹ are grouped into Galois-stable loci so that no irreducible
//! factorization is ever needed: a place is `∞`, a point `z = c` with
//! `c ∈ ℚ(i)`, or the root set of a monic squarefree polynomial. Valuations
//! at a locus only make sense when every root of the locus sees the same
//! order of vanishing; [`coprime_squarefree_basis`] and [`factor_refinement`]
//! produce loci with that property for a given family of polynomials.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::poly::{RatFunction, UniPoly};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Place {
    Infinity,
    FinitePoint(FieldElem),
    /// Root set of a monic squarefree polynomial of degree ≥ 2.
    AlgebraicLocus(UniPoly),
}

impl Place {
    /// Place for the zero set of a squarefree polynomial; linear loci become
    /// finite points.
    pub fn from_locus(q: &UniPoly) -> Place {
        let q = q.monic();
        match q.degree() {
            Some(1) => Place::FinitePoint(-q.coeff(0)),
            Some(d) if d >= 2 => Place::AlgebraicLocus(q),
            _ => panic!("locus polynomial must have positive degree"),
        }
    }

    /// Number of geometric points in the place.
    pub fn degree(&self) -> usize {
        match self {
            Place::Infinity | Place::FinitePoint(_) => 1,
            Place::AlgebraicLocus(q) => q.degree().unwrap(),
        }
    }

    /// The defining polynomial of a finite place.
    pub fn locus_poly(&self) -> Option<UniPoly> {
        match self {
            Place::Infinity => None,
            Place::FinitePoint(c) => Some(UniPoly::linear_root(c)),
            Place::AlgebraicLocus(q) => Some(q.clone()),
        }
    }

    fn rank(&self) -> u8 {
        match self {
            Place::FinitePoint(_) => 0,
            Place::AlgebraicLocus(_) => 1,
            Place::Infinity => 2,
        }
    }
}

impl Ord for Place {
    /// Finite points by value, then loci by degree and coefficients, with
    /// infinity last.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Place::FinitePoint(a), Place::FinitePoint(b)) => a.cmp(b),
            (Place::AlgebraicLocus(a), Place::AlgebraicLocus(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinity => f.write_str("inf"),
            Place::FinitePoint(c) => write!(f, "z={c}"),
            Place::AlgebraicLocus(q) => write!(f, "{{{q} = 0}}"),
        }
    }
}

impl fmt::Debug for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Order of vanishing of a polynomial at a place. Poles count negatively.
pub fn valuation(h: &UniPoly, p: &Place) -> Result<i64> {
    if h.is_zero() {
        return Err(Error::ZeroInput);
    }
    match p {
        Place::Infinity => Ok(-(h.degree().unwrap() as i64)),
        Place::FinitePoint(c) => {
            if c.is_zero() {
                return Ok(h.trailing_zeros().unwrap() as i64);
            }
            let lin = UniPoly::linear_root(c);
            let mut h = h.clone();
            let mut m = 0;
            while let Some(q) = h.exact_div(&lin) {
                h = q;
                m += 1;
            }
            Ok(m)
        }
        Place::AlgebraicLocus(q) => {
            let mut h = h.clone();
            let mut m = 0;
            loop {
                let g = h.gcd(q);
                if g.is_unit() {
                    return Ok(m);
                }
                if g.degree() != q.degree() {
                    return Err(Error::NonUniformLocus {
                        locus: q.to_string(),
                    });
                }
                h = h.exact_div(q).unwrap();
                m += 1;
            }
        }
    }
}

/// Valuation of a rational function: numerator minus denominator.
pub fn valuation_rat(h: &RatFunction, p: &Place) -> Result<i64> {
    Ok(valuation(h.num(), p)? - valuation(h.den(), p)?)
}

/// Pairwise-coprime monic squarefree polynomials such that the squarefree
/// part of every input is a product of basis elements. Output is sorted by
/// degree, then coefficients.
pub fn coprime_squarefree_basis(polys: &[UniPoly]) -> Result<Vec<UniPoly>> {
    if polys.iter().any(UniPoly::is_zero) {
        return Err(Error::ZeroInput);
    }
    let mut basis: Vec<UniPoly> = Vec::new();
    for p in polys {
        insert_coprime(&mut basis, p.squarefree_part());
    }
    basis.sort();
    Ok(basis)
}

/// Like [`coprime_squarefree_basis`] but refined against every squarefree
/// layer of every input, so each input is `unit · Π bⱼ^eⱼ` over the basis.
/// Valuations of the inputs are then uniform on each basis locus.
pub fn factor_refinement(polys: &[UniPoly]) -> Result<Vec<UniPoly>> {
    if polys.iter().any(UniPoly::is_zero) {
        return Err(Error::ZeroInput);
    }
    let mut basis: Vec<UniPoly> = Vec::new();
    for p in polys {
        for (layer, _) in p.squarefree_decomposition() {
            insert_coprime(&mut basis, layer);
        }
    }
    basis.sort();
    Ok(basis)
}

/// Inserts a squarefree polynomial into a pairwise-coprime list of
/// squarefree polynomials, splitting along gcds.
fn insert_coprime(basis: &mut Vec<UniPoly>, x: UniPoly) {
    let mut x = x.monic();
    let mut out = Vec::with_capacity(basis.len() + 1);
    for b in basis.drain(..) {
        if x.degree().unwrap_or(0) == 0 {
            out.push(b);
            continue;
        }
        let g = x.gcd(&b);
        if g.is_unit() {
            out.push(b);
            continue;
        }
        let rest = b.exact_div(&g).unwrap();
        if !rest.is_unit() {
            out.push(rest.monic());
        }
        x = x.exact_div(&g).unwrap().monic();
        out.push(g);
    }
    if x.degree().unwrap_or(0) > 0 {
        out.push(x);
    }
    *basis = out;
}

/// Splits a squarefree locus into its ℚ-rational points and the remaining
/// locus (if any).
pub fn split_rational_points(q: &UniPoly) -> Vec<Place> {
    let mut rest = q.monic();
    let mut places = Vec::new();
    if rest.degree() == Some(1) {
        return vec![Place::from_locus(&rest)];
    }
    for r in q.rational_roots() {
        let c = FieldElem::from_rational(r);
        rest = rest.exact_div(&UniPoly::linear_root(&c)).unwrap();
        places.push(Place::FinitePoint(c));
    }
    if rest.degree().unwrap_or(0) > 0 {
        places.push(Place::from_locus(&rest));
    }
    places
}

/// Finite formal sum of places with nonzero integer multiplicities.
///
/// Two divisors compare equal when they agree after refining both against
/// a common coprime basis, so `1·{z²-1 = 0}` equals `1·(z=1) + 1·(z=-1)`.
#[derive(Clone, Default)]
pub struct Divisor {
    terms: BTreeMap<Place, i64>,
}

impl Divisor {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Place, i64)>) -> Self {
        let mut d = Divisor::new();
        for (p, m) in terms {
            d.add_term(p, m);
        }
        d
    }

    pub fn point(p: Place) -> Self {
        Self::from_terms([(p, 1)])
    }

    pub fn add_term(&mut self, p: Place, m: i64) {
        if m == 0 {
            return;
        }
        let e = self.terms.entry(p.clone()).or_insert(0);
        *e += m;
        if *e == 0 {
            self.terms.remove(&p);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Place, i64)> {
        self.terms.iter().map(|(p, &m)| (p, m))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Σ multiplicity × place degree.
    pub fn degree(&self) -> i64 {
        self.terms
            .iter()
            .map(|(p, m)| m * p.degree() as i64)
            .sum()
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&m| m > 0)
    }

    pub fn scaled(&self, k: i64) -> Divisor {
        Divisor::from_terms(self.terms.iter().map(|(p, &m)| (p.clone(), m * k)))
    }

    pub fn multiplicity(&self, p: &Place) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    /// Zero divisor of a nonzero polynomial on the affine line, with
    /// rational points split out.
    pub fn of_zeros(h: &UniPoly) -> Result<Divisor> {
        if h.is_zero() {
            return Err(Error::ZeroInput);
        }
        let mut d = Divisor::new();
        for (layer, m) in h.squarefree_decomposition() {
            for p in split_rational_points(&layer) {
                d.add_term(p, m as i64);
            }
        }
        Ok(d)
    }

    /// Multiplicities over a common coprime basis of finite loci.
    fn refined(&self, basis: &[UniPoly]) -> (BTreeMap<UniPoly, i64>, i64) {
        let mut out = BTreeMap::new();
        let mut at_inf = 0;
        for (p, &m) in &self.terms {
            match p.locus_poly() {
                None => at_inf += m,
                Some(q) => {
                    for b in basis.iter().filter(|b| b.divides(&q)) {
                        *out.entry(b.clone()).or_insert(0) += m;
                    }
                }
            }
        }
        out.retain(|_, m| *m != 0);
        (out, at_inf)
    }
}

impl PartialEq for Divisor {
    fn eq(&self, other: &Self) -> bool {
        if self.terms == other.terms {
            return true;
        }
        if self.degree() != other.degree() {
            return false;
        }
        let loci: Vec<UniPoly> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .filter_map(Place::locus_poly)
            .collect();
        let basis = coprime_squarefree_basis(&loci).expect("locus polynomials are nonzero");
        self.refined(&basis) == other.refined(&basis)
    }
}

impl Eq for Divisor {}

impl std::ops::Add<&Divisor> for &Divisor {
    type Output = Divisor;
    fn add(self, rhs: &Divisor) -> Divisor {
        let mut d = self.clone();
        for (p, &m) in &rhs.terms {
            d.add_term(p.clone(), m);
        }
        d
    }
}

impl std::ops::Sub<&Divisor> for &Divisor {
    type Output = Divisor;
    fn sub(self, rhs: &Divisor) -> Divisor {
        self + &rhs.scaled(-1)
    }
}

/// `2·(z=0) + 1·(inf)`, or `0` for the empty divisor.
impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(p, m)| format!("{m}·({p})")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    fn pt(n: i64) -> Place {
        Place::FinitePoint(FieldElem::from_int(n))
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(&p(&[0, 0, 0, 1, 0, 1]), &pt(0)), Ok(3));
        assert_eq!(valuation(&p(&[1, 0, 1]), &Place::Infinity), Ok(-2));
        let locus = p(&[1, 0, 1]);
        let h = &locus.pow(2) * &p(&[0, 1]);
        assert_eq!(valuation(&h, &Place::AlgebraicLocus(locus)), Ok(2));
        assert_eq!(valuation(&UniPoly::zero(), &pt(0)), Err(Error::ZeroInput));
    }

    #[test]
    fn non_uniform_locus_is_rejected() {
        // z^2 - 1 against (z - 1)^2 (z + 1): orders 2 and 1 on the two roots
        let h = &p(&[-1, 1]).pow(2) * &p(&[1, 1]);
        let r = valuation(&h, &Place::AlgebraicLocus(p(&[-1, 0, 1])));
        assert!(matches!(r, Err(Error::NonUniformLocus { .. })));
    }

    #[test]
    fn basis_examples() {
        assert_eq!(
            coprime_squarefree_basis(&[p(&[-1, 0, 1]), p(&[-1, 1])]).unwrap(),
            vec![p(&[-1, 1]), p(&[1, 1])]
        );
        assert_eq!(coprime_squarefree_basis(&[p(&[1, 0, 1])]).unwrap(), vec![p(&[1, 0, 1])]);
        assert_eq!(coprime_squarefree_basis(&[p(&[0, 0, 0, 1])]).unwrap(), vec![p(&[0, 1])]);
        assert_eq!(coprime_squarefree_basis(&[UniPoly::zero()]), Err(Error::ZeroInput));
    }

    #[test]
    fn refinement_makes_valuations_uniform() {
        let h = &p(&[-1, 1]).pow(2) * &p(&[1, 1]);
        let basis = factor_refinement(&[h.clone(), p(&[-1, 0, 1])]).unwrap();
        for b in &basis {
            assert!(valuation(&h, &Place::from_locus(b)).is_ok());
        }
    }

    #[test]
    fn divisor_equality_refines() {
        let a = Divisor::point(Place::AlgebraicLocus(p(&[-1, 0, 1])));
        let b = Divisor::from_terms([(pt(1), 1), (pt(-1), 1)]);
        assert_eq!(a, b);
        assert_ne!(a, Divisor::point(pt(1)));
        assert_eq!(a.degree(), 2);
        let d = Divisor::of_zeros(&(&p(&[0, 1]).pow(2) * &p(&[1, 0, 1]))).unwrap();
        assert_eq!(d.multiplicity(&pt(0)), 2);
        assert_eq!(d.degree(), 4);
    }

    #[test]
    fn place_order_puts_infinity_last() {
        let mut v = vec![Place::Infinity, Place::AlgebraicLocus(p(&[1, 0, 1])), pt(3), pt(-1)];
        v.sort();
        assert_eq!(v, vec![pt(-1), pt(3), Place::AlgebraicLocus(p(&[1, 0, 1])), Place::Infinity]);
    }

    proptest::proptest! {
        #[test]
        fn valuation_is_additive(
            a in proptest::collection::vec(-4i64..5, 1..6),
            b in proptest::collection::vec(-4i64..5, 1..6),
            ka in 0usize..3,
            kb in 0usize..3,
            c in -3i64..4,
        ) {
            let lin = UniPoly::linear_root(&FieldElem::from_int(c));
            let g = &p(&a) * &lin.pow(ka as u32);
            let h = &p(&b) * &lin.pow(kb as u32);
            proptest::prop_assume!(!g.is_zero() && !h.is_zero());
            let gh = &g * &h;
            for place in [pt(c), Place::Infinity] {
                proptest::prop_assert_eq!(
                    valuation(&gh, &place).unwrap(),
                    valuation(&g, &place).unwrap() + valuation(&h, &place).unwrap()
                );
            }
            let locus = p(&[1, 0, 1]);
            let gq = &g * &locus;
            let hq = &h * &locus.pow(2);
            let place = Place::AlgebraicLocus(locus);
            if let (Ok(x), Ok(y)) = (valuation(&gq, &place), valuation(&hq, &place)) {
                proptest::prop_assert_eq!(valuation(&(&gq * &hq), &place).unwrap(), x + y);
            }
        }

        #[test]
        fn zero_divisor_degree_matches(coeffs in proptest::collection::vec(-5i64..6, 2..8)) {
            let h = p(&coeffs);
            proptest::prop_assume!(h.degree().unwrap_or(0) > 0);
            let d = Divisor::of_zeros(&h).unwrap();
            proptest::prop_assert_eq!(d.degree(), h.degree().unwrap() as i64);
            proptest::prop_assert!(d.is_effective());
        }
    }
}
