//! Wronskian determinants of polynomial tuples.
//!
//! All subset Wronskians of a tuple are produced together by expanding each
//! determinant along its last derivative row, so `W(S)` reuses the minors
//! `W(S \ {j})` already computed for the smaller subsets.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::poly::UniPoly;

/// `W(h_1, ..., h_k) = det(h_j^(r))` for rows `r = 0..k` together with its
/// differential weight `k(k-1)/2`.
pub fn wronskian(hs: &[UniPoly]) -> Result<(UniPoly, usize)> {
    if hs.is_empty() {
        return Err(Error::EmptyInput);
    }
    let k = hs.len();
    let table = SubsetWronskians::new(hs, k);
    let full: Vec<usize> = (0..k).collect();
    Ok((table.get(&full).clone(), k * (k - 1) / 2))
}

/// Every Wronskian `W(h_S)` for subsets `S` of size at most `kmax`,
/// indices taken in increasing order.
pub struct SubsetWronskians {
    n: usize,
    by_mask: HashMap<u64, UniPoly>,
}

impl SubsetWronskians {
    pub fn new(hs: &[UniPoly], kmax: usize) -> Self {
        let n = hs.len();
        assert!(n < 64, "too many coordinates");
        let kmax = kmax.min(n);
        // derivs[j][r] = h_j^(r)
        let derivs: Vec<Vec<UniPoly>> = hs
            .iter()
            .map(|h| {
                let mut v = Vec::with_capacity(kmax);
                let mut d = h.clone();
                for _ in 0..kmax {
                    let next = d.derivative();
                    v.push(d);
                    d = next;
                }
                v
            })
            .collect();
        let mut by_mask: HashMap<u64, UniPoly> = HashMap::new();
        by_mask.insert(0, UniPoly::one());
        let mut layer: Vec<u64> = vec![0];
        for size in 1..=kmax {
            let mut next = Vec::new();
            for subset in combinations(n, size) {
                let mask = subset.iter().fold(0u64, |m, &j| m | 1 << j);
                let row = size - 1;
                let mut acc = UniPoly::zero();
                for (idx, &j) in subset.iter().enumerate() {
                    let minor = &by_mask[&(mask & !(1 << j))];
                    if minor.is_zero() || derivs[j][row].is_zero() {
                        continue;
                    }
                    let term = &derivs[j][row] * minor;
                    acc = if (row + idx) % 2 == 0 { &acc + &term } else { &acc - &term };
                }
                by_mask.insert(mask, acc);
                next.push(mask);
            }
            layer = next;
        }
        let _ = layer;
        SubsetWronskians { n, by_mask }
    }

    /// Wronskian of the given strictly increasing index list.
    pub fn get(&self, subset: &[usize]) -> &UniPoly {
        let mask = subset.iter().fold(0u64, |m, &j| m | 1 << j);
        &self.by_mask[&mask]
    }

    /// All `k`-subset Wronskians in lexicographic subset order.
    pub fn of_size(&self, k: usize) -> Vec<UniPoly> {
        combinations(self.n, k)
            .map(|s| self.get(&s).clone())
            .collect()
    }
}

/// `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut c = out.clone();
        let mut i = k;
        let mut advanced = false;
        while i > 0 {
            i -= 1;
            if c[i] < n - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        cur = if advanced { Some(c) } else { None };
        Some(out)
    })
}

/// Evaluates `Σ c_j h_j`.
pub fn linear_combination(cs: &[FieldElem], hs: &[UniPoly]) -> UniPoly {
    cs.iter()
        .zip(hs)
        .fold(UniPoly::zero(), |acc, (c, h)| &acc + &h.scale(c))
}
