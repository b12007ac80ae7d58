//! Automorphism groups of one-vertex maps.
//!
//! `Aut(M)` is the centralizer of `<x, y>` in the symmetric group on darts. For a
//! one-vertex map it is a subgroup `<x^p>` of the cyclic group `<x>`, with `p` a
//! divisor of `2k`; `p` is called the period here. The maps `x^-s y x^s`,
//! `0 <= s < p`, are pairwise distinct and form the equivalence class of `y`.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::arith::divisors;
use crate::maps::{DartMap, OneVertexMap};
use crate::perm::Permutation;

/// Default degree cap for [`brute_centralizer`]: a full scan of `S_8`.
pub const DEFAULT_CENTRALIZER_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutError {
    #[error("maps have different edge counts ({0} vs {1})")]
    EdgeMismatch(usize, usize),
    #[error("degree {degree} exceeds the symmetric-group scan cap {cap}")]
    CapExceeded { degree: usize, cap: usize },
}

/// `x^p` commutes with `y`, checked directly on the standard cycle:
/// `y(i + p) = y(i) + p (mod 2k)`.
fn shift_commutes(y: &Permutation, p: usize) -> bool {
    let n = y.degree();
    (0..n).all(|i| y.apply((i + p) % n) == (y.apply(i) + p) % n)
}

/// Smallest divisor `p` of `2k` with `x^p y = y x^p`; `Aut(M) = <x^p>` has order `2k/p`.
pub fn aut_period(m: &OneVertexMap) -> usize {
    let two_k = 2 * m.k();
    let candidates = divisors(two_k as u64);
    let p = candidates
        .iter()
        .map(|&d| d as usize)
        .find(|&d| shift_commutes(m.y(), d))
        .expect("x^(2k) is the identity");
    // Commuting powers are closed under gcd, so the first hit divides every other hit.
    debug_assert!(candidates
        .iter()
        .map(|&d| d as usize)
        .filter(|&d| shift_commutes(m.y(), d))
        .all(|d| d % p == 0));
    p
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AutData {
    /// `p`, with `Aut(M) = <x^p>`.
    pub period: usize,
    /// `|Aut(M)| = 2k / p`.
    pub order: usize,
    /// `x^-s y x^s` for `s = 0, ..., p-1`.
    pub orbit: Vec<Permutation>,
    /// Lexicographically least image array in `orbit`.
    pub canonical_y: Permutation,
}

pub fn aut_data(m: &OneVertexMap) -> AutData {
    let period = aut_period(m);
    let x = m.x();
    let mut orbit = Vec::with_capacity(period);
    let mut ys = m.y().clone();
    for _ in 0..period {
        orbit.push(ys.clone());
        ys = ys.conjugate(&x).expect("same degree");
    }
    debug_assert_eq!(orbit.iter().collect::<BTreeSet<_>>().len(), period);
    let canonical_y = orbit.iter().min().expect("period >= 1").clone();
    AutData {
        period,
        order: 2 * m.k() / period,
        orbit,
        canonical_y,
    }
}

/// The class representative whose `y` is lexicographically least.
pub fn canonical_form(m: &OneVertexMap) -> OneVertexMap {
    OneVertexMap::new(m.k(), aut_data(m).canonical_y).expect("conjugates of free involutions are free")
}

/// Equivalence under simultaneous conjugation fixing `x`.
pub fn are_equivalent(a: &OneVertexMap, b: &OneVertexMap) -> Result<bool, AutError> {
    if a.k() != b.k() {
        return Err(AutError::EdgeMismatch(a.k(), b.k()));
    }
    Ok(aut_data(a).orbit.contains(b.y()))
}

pub fn is_regular(m: &OneVertexMap) -> bool {
    aut_period(m) == 1
}

/// Edge-transitive but not regular.
pub fn is_strictly_edge_transitive(m: &OneVertexMap) -> bool {
    aut_period(m) == 2
}

/// Every permutation of the darts commuting with both `x` and `y`, by a full
/// scan of the symmetric group. Oracle for small degrees only.
pub fn brute_centralizer(m: &DartMap, cap: usize) -> Result<BTreeSet<Permutation>, AutError> {
    let n = m.degree();
    if n > cap {
        return Err(AutError::CapExceeded { degree: n, cap });
    }
    let x = m.x();
    let y = m.y();
    let found: Vec<Permutation> = (0..n)
        .into_par_iter()
        .flat_map_iter(|first| {
            let rest: Vec<usize> = (0..n).filter(|&i| i != first).collect();
            LexPermutations::new(rest)
                .map(move |tail| {
                    let mut images = Vec::with_capacity(n);
                    images.push(first);
                    images.extend(tail);
                    images
                })
                .filter_map(|images| {
                    let s = Permutation::from_images(images).expect("bijection by construction");
                    let ok = s.commutes_with(x).expect("same degree")
                        && s.commutes_with(y).expect("same degree");
                    ok.then_some(s)
                })
        })
        .collect();
    Ok(found.into_iter().collect())
}

/// Lexicographic enumeration of the arrangements of a sorted vector.
struct LexPermutations {
    current: Option<Vec<usize>>,
}

impl LexPermutations {
    fn new(sorted: Vec<usize>) -> LexPermutations {
        LexPermutations {
            current: Some(sorted),
        }
    }
}

impl Iterator for LexPermutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let v = self.current.as_mut().expect("checked above");
        // next_permutation
        let n = v.len();
        let mut i = n;
        while i > 1 && v[i - 2] >= v[i - 1] {
            i -= 1;
        }
        if i <= 1 {
            self.current = None;
        } else {
            let pivot = i - 2;
            let mut j = n - 1;
            while v[j] <= v[pivot] {
                j -= 1;
            }
            v.swap(pivot, j);
            v[pivot + 1..].reverse();
        }
        Some(out)
    }
}
