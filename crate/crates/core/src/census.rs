//! Counting and enumerating one-vertex maps by automorphism group.
//!
//! With `x = (0 1 ... 2k-1)` and `p | 2k`, the power `x^p` splits into `p` cycles
//! `C_j = (j, j+p, ..., j+2k-p)` of length `d = 2k/p`. A free involution `y`
//! commuting with `x^p` permutes these cycles in blocks, so it is fixed by:
//!
//! * the cycles it maps to themselves (then `a -> a + k`, only possible when `d` is even);
//! * a perfect matching of the remaining cycles;
//! * a shift `t` in `0..d` for each matched pair `(C_i, C_j)`: `i + ap -> j + (a+t)p`.
//!
//! [`CommuterSpec`] holds that data, [`nu_bar`] counts it in closed form and
//! [`nu`] removes the maps whose automorphism group is strictly larger than `<x^p>`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Pow, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::arith::{divisors, factorial, mobius, prime_divisors};
use crate::autgroup::{aut_period, canonical_form};
use crate::maps::OneVertexMap;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("p = {p} does not divide 2k = {}", 2 * .k)]
    NotDivisor { k: usize, p: usize },
    #[error("invalid commuter spec: {0}")]
    InvalidSpec(String),
    #[error("k = {k} exceeds the cap {cap} (raise it with --{flag})")]
    CapExceeded { k: usize, cap: usize, flag: &'static str },
    #[error("nu_p = {nu} is not divisible by p = {p} (k = {k})")]
    Divisibility { k: usize, p: usize, nu: BigUint },
}

/// Caps on the exhaustive paths. The formulas themselves accept any `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CensusConfig {
    /// Largest `k` for [`brute_census`]; `(2k-1)!!` involutions are scanned.
    pub brute_cap: usize,
    /// Largest `k` for constructive enumeration ([`class_representatives`]).
    pub gen_cap: usize,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            brute_cap: 7,
            gen_cap: 10,
        }
    }
}

fn check_divisor(k: usize, p: usize) -> Result<usize, CensusError> {
    if k == 0 || p == 0 || (2 * k) % p != 0 {
        return Err(CensusError::NotDivisor { k, p });
    }
    Ok(2 * k / p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CyclePair {
    pub i: usize,
    pub j: usize,
    pub shift: usize,
}

/// Data determining a free involution that commutes with `x^p`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CommuterSpec {
    pub k: usize,
    pub p: usize,
    pub fixed_cycles: Vec<usize>,
    pub pairs: Vec<CyclePair>,
}

impl CommuterSpec {
    pub fn cycle_length(&self) -> usize {
        2 * self.k / self.p
    }

    pub fn validate(&self) -> Result<(), CensusError> {
        let d = check_divisor(self.k, self.p)?;
        let bad = |msg: String| Err(CensusError::InvalidSpec(msg));
        if d % 2 == 1 && !self.fixed_cycles.is_empty() {
            return bad(format!("cycle length d = {d} is odd, so no cycle can be fixed"));
        }
        let mut seen = vec![false; self.p];
        let mut mark = |c: usize| -> Result<(), CensusError> {
            if c >= self.p {
                return Err(CensusError::InvalidSpec(format!("cycle index {c} >= p = {}", self.p)));
            }
            if seen[c] {
                return Err(CensusError::InvalidSpec(format!("cycle {c} used twice")));
            }
            seen[c] = true;
            Ok(())
        };
        for &c in &self.fixed_cycles {
            mark(c)?;
        }
        for pair in &self.pairs {
            if pair.i >= pair.j {
                return bad(format!("pair ({}, {}) must have i < j", pair.i, pair.j));
            }
            if pair.shift >= d {
                return bad(format!("shift {} must be below d = {d}", pair.shift));
            }
            mark(pair.i)?;
            mark(pair.j)?;
        }
        if let Some(c) = seen.iter().position(|&s| !s) {
            return bad(format!("cycle {c} is neither fixed nor paired"));
        }
        Ok(())
    }

    /// The free involution described by this spec.
    pub fn realize(&self) -> Result<Permutation, CensusError> {
        self.validate()?;
        let (p, d) = (self.p, self.cycle_length());
        let n = 2 * self.k;
        let mut images = vec![usize::MAX; n];
        for &j in &self.fixed_cycles {
            for a in 0..d {
                images[j + a * p] = j + ((a + d / 2) % d) * p;
            }
        }
        for pair in &self.pairs {
            for a in 0..d {
                let b = (a + pair.shift) % d;
                images[pair.i + a * p] = pair.j + b * p;
                images[pair.j + b * p] = pair.i + a * p;
            }
        }
        Ok(Permutation::from_images(images).expect("spec partitions the darts"))
    }
}

/// Mixed-radix counter; the last digit moves fastest.
#[derive(Debug, Clone)]
struct Odometer {
    radices: Vec<usize>,
    digits: Vec<usize>,
}

impl Odometer {
    fn new(radices: Vec<usize>) -> Odometer {
        let digits = vec![0; radices.len()];
        Odometer { radices, digits }
    }

    /// Advances; returns `false` after wrapping past the last state.
    fn step(&mut self) -> bool {
        for i in (0..self.digits.len()).rev() {
            self.digits[i] += 1;
            if self.digits[i] < self.radices[i] {
                return true;
            }
            self.digits[i] = 0;
        }
        false
    }
}

/// Specs for `(k, p)` in a fixed order: fixed-cycle mask ascending, then
/// matchings (the least unmatched cycle picks its partner, ascending), then
/// shift vectors odometer-style.
#[derive(Debug, Clone)]
pub struct CommuterSpecs {
    k: usize,
    p: usize,
    d: usize,
    mask: u64,
    free: Vec<usize>,
    counter: Option<Odometer>,
}

impl CommuterSpecs {
    pub fn new(k: usize, p: usize) -> Result<CommuterSpecs, CensusError> {
        let d = check_divisor(k, p)?;
        assert!(p < 64, "fixed-cycle masks need p < 64");
        let mut it = CommuterSpecs {
            k,
            p,
            d,
            mask: 0,
            free: Vec::new(),
            counter: None,
        };
        it.seek_mask();
        Ok(it)
    }

    fn mask_valid(&self, mask: u64) -> bool {
        let fixed = mask.count_ones() as usize;
        if self.d % 2 == 1 {
            mask == 0
        } else {
            (self.p - fixed) % 2 == 0
        }
    }

    /// Moves to the first valid mask at or after `self.mask`.
    fn seek_mask(&mut self) {
        let end = if self.d % 2 == 1 { 1 } else { 1u64 << self.p };
        while self.mask < end && !self.mask_valid(self.mask) {
            self.mask += 1;
        }
        if self.mask >= end {
            self.counter = None;
            return;
        }
        self.free = (0..self.p).filter(|c| self.mask >> c & 1 == 0).collect();
        let m = self.free.len();
        let mut radices: Vec<usize> = (0..m / 2).map(|s| m - 1 - 2 * s).collect();
        radices.extend(std::iter::repeat(self.d).take(m / 2));
        self.counter = Some(Odometer::new(radices));
    }

    fn current(&self, counter: &Odometer) -> CommuterSpec {
        let half = self.free.len() / 2;
        let mut rest = self.free.clone();
        let mut pairs = Vec::with_capacity(half);
        for s in 0..half {
            let i = rest.remove(0);
            let j = rest.remove(counter.digits[s]);
            pairs.push(CyclePair {
                i,
                j,
                shift: counter.digits[half + s],
            });
        }
        CommuterSpec {
            k: self.k,
            p: self.p,
            fixed_cycles: (0..self.p).filter(|c| self.mask >> c & 1 == 1).collect(),
            pairs,
        }
    }
}

impl Iterator for CommuterSpecs {
    type Item = CommuterSpec;

    fn next(&mut self) -> Option<CommuterSpec> {
        let mut counter = self.counter.take()?;
        let spec = self.current(&counter);
        if counter.step() {
            self.counter = Some(counter);
        } else {
            self.mask += 1;
            self.seek_mask();
        }
        Some(spec)
    }
}

/// Every free involution commuting with `x^p`, each exactly once.
pub fn generate_commuting(k: usize, p: usize) -> Result<impl Iterator<Item = Permutation>, CensusError> {
    Ok(CommuterSpecs::new(k, p)?.map(|s| s.realize().expect("enumerated specs are valid")))
}

/// Number of free involutions commuting with `x^p`.
pub fn nu_bar(k: usize, p: usize) -> Result<BigUint, CensusError> {
    let d = check_divisor(k, p)?;
    let q = p / 2;
    let p_fact = factorial(p as u64);
    if d % 2 == 0 {
        let half = BigUint::from(d / 2);
        let mut total = BigUint::zero();
        for m in 0..=q {
            let denom = factorial(m as u64) * factorial((p - 2 * m) as u64);
            total += Pow::pow(&half, m as u32) * &p_fact / denom;
        }
        Ok(total)
    } else {
        // d odd forces p even; (d/2)^q p!/q! is written as d^q p!/(q! 2^q) to stay integral.
        assert!(p % 2 == 0, "2k/p odd implies p even");
        let denom = factorial(q as u64) * Pow::pow(&BigUint::from(2u32), q as u32);
        Ok(Pow::pow(&BigUint::from(d), q as u32) * p_fact / denom)
    }
}

/// Inclusion-exclusion over squarefree products of the prime divisors of `p`:
/// `nu_p = nu_bar_p - sigma_1 + sigma_2 - ...`, with the counting function supplied.
pub fn nu_inclusion_exclusion<F>(k: usize, p: usize, nu_bar_fn: F) -> BigInt
where
    F: Fn(usize, usize) -> BigUint,
{
    let primes = prime_divisors(p as u64);
    let mut total = BigInt::zero();
    for subset in 0u32..(1 << primes.len()) {
        let product: u64 = primes
            .iter()
            .enumerate()
            .filter(|(i, _)| subset >> i & 1 == 1)
            .map(|(_, &q)| q)
            .product();
        let term = BigInt::from_biguint(Sign::Plus, nu_bar_fn(k, p / product as usize));
        if subset.count_ones() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn to_nonnegative(v: BigInt) -> BigUint {
    v.to_biguint().expect("map counts are nonnegative")
}

/// Number of maps (not classes) with `Aut(M) = <x^p>` exactly.
pub fn nu(k: usize, p: usize) -> Result<BigUint, CensusError> {
    check_divisor(k, p)?;
    Ok(to_nonnegative(nu_inclusion_exclusion(k, p, |k, p| {
        nu_bar(k, p).expect("divisor of a divisor")
    })))
}

/// Same count via Möbius inversion over the divisors of `p`.
pub fn nu_mobius(k: usize, p: usize) -> Result<BigUint, CensusError> {
    check_divisor(k, p)?;
    let mut total = BigInt::zero();
    for e in divisors(p as u64) {
        let mu = mobius(e);
        if mu == 0 {
            continue;
        }
        let term = BigInt::from_biguint(Sign::Plus, nu_bar(k, p / e as usize)?);
        total += term * BigInt::from(mu);
    }
    Ok(to_nonnegative(total))
}

/// Number of equivalence classes with `Aut(M) = <x^p>`: `nu_p / p`.
pub fn class_count(k: usize, p: usize) -> Result<BigUint, CensusError> {
    let n = nu(k, p)?;
    let pb = BigUint::from(p);
    if !(&n % &pb).is_zero() {
        return Err(CensusError::Divisibility { k, p, nu: n });
    }
    Ok(n / pb)
}

fn serialize_decimal<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// One line of the census table; counts serialize as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub k: usize,
    pub p: usize,
    #[serde(serialize_with = "serialize_decimal")]
    pub nu_bar: BigUint,
    #[serde(serialize_with = "serialize_decimal")]
    pub nu: BigUint,
    #[serde(serialize_with = "serialize_decimal")]
    pub classes: BigUint,
}

pub fn census_row(k: usize, p: usize) -> Result<CensusRow, CensusError> {
    Ok(CensusRow {
        k,
        p,
        nu_bar: nu_bar(k, p)?,
        nu: nu(k, p)?,
        classes: class_count(k, p)?,
    })
}

/// Rows for every divisor `p` of `2k`, ascending.
pub fn census_table(k: usize) -> Result<Vec<CensusRow>, CensusError> {
    if k == 0 {
        return Err(CensusError::NotDivisor { k, p: 0 });
    }
    divisors(2 * k as u64)
        .into_iter()
        .map(|p| census_row(k, p as usize))
        .collect()
}

/// All free involutions on `n` points by direct recursion: `lowest` pairs with
/// every other remaining point in turn.
fn collect_involutions(remaining: &mut Vec<usize>, images: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if remaining.is_empty() {
        out.push(images.clone());
        return;
    }
    let a = remaining.remove(0);
    for idx in 0..remaining.len() {
        let b = remaining.remove(idx);
        images[a] = b;
        images[b] = a;
        collect_involutions(remaining, images, out);
        remaining.insert(idx, b);
    }
    remaining.insert(0, a);
}

/// Exhaustive tally of `aut_period` over all `(2k-1)!!` one-vertex maps with
/// `k` edges. Every divisor of `2k` appears as a key, with zero counts kept.
pub fn brute_census(k: usize, cap: usize) -> Result<BTreeMap<usize, u64>, CensusError> {
    if k == 0 {
        return Err(CensusError::NotDivisor { k, p: 0 });
    }
    if k > cap {
        return Err(CensusError::CapExceeded {
            k,
            cap,
            flag: "brute-cap",
        });
    }
    let n = 2 * k;
    let tally = (1..n)
        .into_par_iter()
        .map(|partner| {
            let mut images = vec![0; n];
            images[0] = partner;
            images[partner] = 0;
            let mut rest: Vec<usize> = (1..n).filter(|&i| i != partner).collect();
            let mut all = Vec::new();
            collect_involutions(&mut rest, &mut images, &mut all);
            let mut local: BTreeMap<usize, u64> = BTreeMap::new();
            for imgs in all {
                let y = Permutation::from_images(imgs).expect("involution images");
                let m = OneVertexMap::new(k, y).expect("free involution");
                *local.entry(aut_period(&m)).or_default() += 1;
            }
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (p, c) in b {
                *a.entry(p).or_default() += c;
            }
            a
        });
    let mut out: BTreeMap<usize, u64> = divisors(n as u64).into_iter().map(|p| (p as usize, 0)).collect();
    for (p, c) in tally {
        *out.get_mut(&p).expect("periods divide 2k") += c;
    }
    Ok(out)
}

/// One canonical representative per class with `Aut(M) = <x^p>`, sorted by `y`.
pub fn class_representatives(k: usize, p: usize, gen_cap: usize) -> Result<Vec<OneVertexMap>, CensusError> {
    check_divisor(k, p)?;
    if k > gen_cap {
        return Err(CensusError::CapExceeded {
            k,
            cap: gen_cap,
            flag: "gen-cap",
        });
    }
    let reps: BTreeSet<OneVertexMap> = generate_commuting(k, p)?
        .map(|y| OneVertexMap::new(k, y).expect("free involution"))
        .filter(|m| aut_period(m) == p)
        .map(|m| canonical_form(&m))
        .collect();
    Ok(reps.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::odd_double_factorial;
    use crate::perm::parse_cycles;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn realize_examples() {
        let spec = CommuterSpec {
            k: 3,
            p: 2,
            fixed_cycles: vec![],
            pairs: vec![CyclePair { i: 0, j: 1, shift: 0 }],
        };
        assert_eq!(spec.realize().unwrap(), parse_cycles("(0 1)(2 3)(4 5)", 6).unwrap());
        let spec = CommuterSpec {
            pairs: vec![CyclePair { i: 0, j: 1, shift: 1 }],
            ..spec
        };
        let x = Permutation::standard_cycle(6).unwrap();
        assert_eq!(spec.realize().unwrap(), x.power(3));
        assert_eq!(spec.realize().unwrap().to_string(), "(0 3)(1 4)(2 5)");

        let spec = CommuterSpec {
            k: 2,
            p: 2,
            fixed_cycles: vec![0, 1],
            pairs: vec![],
        };
        assert_eq!(spec.realize().unwrap(), Permutation::standard_cycle(4).unwrap().power(2));
    }

    #[test]
    fn invalid_specs() {
        let odd_fixed = CommuterSpec {
            k: 3,
            p: 2,
            fixed_cycles: vec![0, 1],
            pairs: vec![],
        };
        assert!(odd_fixed.realize().is_err());
        let uncovered = CommuterSpec {
            k: 4,
            p: 4,
            fixed_cycles: vec![],
            pairs: vec![CyclePair { i: 0, j: 1, shift: 0 }],
        };
        assert!(uncovered.realize().is_err());
        let big_shift = CommuterSpec {
            k: 3,
            p: 2,
            fixed_cycles: vec![],
            pairs: vec![CyclePair { i: 0, j: 1, shift: 3 }],
        };
        assert!(big_shift.realize().is_err());
        let not_divisor = CommuterSpec {
            k: 3,
            p: 4,
            fixed_cycles: vec![],
            pairs: vec![],
        };
        assert!(matches!(not_divisor.realize(), Err(CensusError::NotDivisor { .. })));
    }

    #[test]
    fn generation_examples() {
        assert_eq!(generate_commuting(3, 2).unwrap().count(), 3);
        for k in 1..=6 {
            let all: Vec<_> = generate_commuting(k, 1).unwrap().collect();
            let x = Permutation::standard_cycle(2 * k).unwrap();
            assert_eq!(all, vec![x.power(k as i64)]);
        }
        assert_eq!(generate_commuting(2, 4).unwrap().count(), 3);
    }

    #[test]
    fn generation_order_is_mask_then_matching_then_shift() {
        let specs: Vec<_> = CommuterSpecs::new(2, 2).unwrap().collect();
        assert_eq!(specs.len(), 3);
        assert!(specs[0].fixed_cycles.is_empty());
        assert_eq!(specs[0].pairs[0].shift, 0);
        assert_eq!(specs[1].pairs[0].shift, 1);
        assert_eq!(specs[2].fixed_cycles, vec![0, 1]);
    }

    #[test]
    fn nu_bar_examples() {
        for k in 1..=8 {
            assert_eq!(nu_bar(k, 2 * k).unwrap(), odd_double_factorial(k as u64));
            assert_eq!(nu_bar(k, 1).unwrap(), big(1));
        }
        assert_eq!(nu_bar(3, 2).unwrap(), big(3));
        assert_eq!(nu_bar(2, 2).unwrap(), big(3));
        assert_eq!(nu_bar(3, 3).unwrap(), big(7));
        assert!(nu_bar(3, 4).is_err());
    }

    #[test]
    fn nu_and_classes() {
        assert_eq!(nu(3, 2).unwrap(), big(2));
        for k in 1..=10 {
            assert_eq!(nu(k, 1).unwrap(), big(1));
            assert_eq!(class_count(k, 1).unwrap(), big(1));
        }
        assert_eq!(class_count(3, 2).unwrap(), big(1));
        assert_eq!(class_count(6, 2).unwrap(), big(3));
    }

    // Frozen from the exhaustive scan (independent recursion in `brute_census`).
    #[test]
    fn brute_census_small() {
        let c1 = brute_census(1, 7).unwrap();
        assert_eq!(c1, BTreeMap::from([(1, 1), (2, 0)]));
        let c2 = brute_census(2, 7).unwrap();
        assert_eq!(c2, BTreeMap::from([(1, 1), (2, 2), (4, 0)]));
        let c3 = brute_census(3, 7).unwrap();
        assert_eq!(c3, BTreeMap::from([(1, 1), (2, 2), (3, 6), (6, 6)]));
        assert_eq!(c3.values().sum::<u64>(), 15);
        assert!(matches!(brute_census(8, 7), Err(CensusError::CapExceeded { .. })));
    }

    #[test]
    fn representatives() {
        let r = class_representatives(3, 2, 10).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].y().to_string(), "(0 1)(2 3)(4 5)");
        let r = class_representatives(3, 1, 10).unwrap();
        assert_eq!(r[0].y().to_string(), "(0 3)(1 4)(2 5)");
        assert_eq!(class_representatives(3, 6, 10).unwrap().len(), 1);
        assert_eq!(class_representatives(3, 3, 10).unwrap().len(), 2);
        assert!(class_representatives(11, 2, 10).is_err());
    }

    #[test]
    fn table_rows() {
        let rows = census_table(3).unwrap();
        let ps: Vec<_> = rows.iter().map(|r| r.p).collect();
        assert_eq!(ps, vec![1, 2, 3, 6]);
        assert_eq!(rows[1].nu_bar, big(3));
        assert_eq!(rows[1].nu, big(2));
        assert_eq!(rows[1].classes, big(1));
    }

    #[test]
    fn rows_serialize_counts_as_decimal_strings() {
        let row = census_row(20, 40).unwrap();
        let v = serde_json::to_value(&row).unwrap();
        assert_eq!(v["nu_bar"], "319830986772877770815625");
        assert_eq!(v["p"], 40);
    }
}
