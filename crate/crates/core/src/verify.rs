//! End-to-end self-checks: each suite recomputes a family of identities and
//! reports the first counterexample it meets.
//!
//! The census suites take the commuting-involution count as a parameter, so a
//! deliberately wrong formula can be fed in and caught.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{divisors, odd_double_factorial};
use crate::census::{brute_census, generate_commuting, nu_bar, nu_inclusion_exclusion, CensusConfig};
use crate::classify::{classify_edge_transitive, classify_regular, edge_transitive_datum, Verdict};
use crate::perm::Permutation;
use crate::riemann::{
    classical_cyclic_action, rh_genus, vector_signature, CaseName, ClassicalCurve, ExtensionCase,
};

/// Largest `k` swept by the fixed-range suites.
pub const SWEEP_K_MAX: u64 = 50;
/// Genus range for the classical-curve table.
pub const TABLE_GENUS_MAX: u64 = 10;

pub type NuBarFn<'a> = &'a (dyn Fn(usize, usize) -> BigUint + Sync);

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub k: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.p {
            Some(p) => write!(f, "(k = {}, p = {}): {}", self.k, p, self.detail),
            None => write!(f, "(k = {}): {}", self.k, self.detail),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: bool,
    /// Number of individual checks performed.
    pub checks: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

struct Tally {
    name: &'static str,
    checks: u64,
}

impl Tally {
    fn new(name: &'static str) -> Tally {
        Tally { name, checks: 0 }
    }

    fn check(&mut self, ok: bool, k: u64, p: Option<u64>, detail: impl FnOnce() -> String) -> Result<(), SuiteReport> {
        self.checks += 1;
        if ok {
            return Ok(());
        }
        Err(SuiteReport {
            name: self.name,
            passed: false,
            checks: self.checks,
            counterexample: Some(Counterexample { k, p, detail: detail() }),
        })
    }

    fn pass(self) -> SuiteReport {
        SuiteReport {
            name: self.name,
            passed: true,
            checks: self.checks,
            counterexample: None,
        }
    }
}

fn settle(r: Result<SuiteReport, SuiteReport>) -> SuiteReport {
    r.unwrap_or_else(|fail| fail)
}

pub fn default_nu_bar(k: usize, p: usize) -> BigUint {
    nu_bar(k, p).expect("p divides 2k")
}

/// `sum_p nu_p = (2k-1)!!`, `p | nu_p`, `nu_bar_2k = (2k-1)!!`, `nu_bar_1 = nu_1 = 1`.
pub fn partition_identity(kmax: usize, nb: NuBarFn) -> SuiteReport {
    let mut t = Tally::new("partition identity");
    settle((|| {
        for k in 1..=kmax {
            let ku = k as u64;
            let total = odd_double_factorial(ku);
            let full = nb(k, 2 * k);
            t.check(full == total, ku, Some(2 * ku), || {
                format!("nu_bar = {full}, expected (2k-1)!! = {total}")
            })?;
            let one = nb(k, 1);
            t.check(one.is_one(), ku, Some(1), || format!("nu_bar_1 = {one}, expected 1"))?;
            let mut sum = BigInt::zero();
            for p in divisors(2 * ku) {
                let n = nu_inclusion_exclusion(k, p as usize, nb);
                t.check(n >= BigInt::zero(), ku, Some(p), || format!("nu_p = {n} is negative"))?;
                t.check((&n % BigInt::from(p)).is_zero(), ku, Some(p), || {
                    format!("p does not divide nu_p = {n}")
                })?;
                if p == 1 {
                    t.check(n.is_one(), ku, Some(1), || format!("nu_1 = {n}, expected 1"))?;
                }
                sum += n;
            }
            let expected = BigInt::from(total);
            t.check(sum == expected, ku, None, || format!("sum of nu_p = {sum}, expected {expected}"))?;
        }
        Ok(t.pass())
    })())
}

/// Exhaustive tally of automorphism periods against the counting formula.
pub fn oracle_equality(kmax: usize, brute_cap: usize, nb: NuBarFn) -> SuiteReport {
    let mut t = Tally::new("oracle equality");
    settle((|| {
        for k in 1..=kmax.min(brute_cap) {
            let brute = brute_census(k, brute_cap).expect("k within cap");
            for (&p, &count) in &brute {
                let formula = nu_inclusion_exclusion(k, p, nb);
                t.check(formula == BigInt::from(count), k as u64, Some(p as u64), || {
                    format!("formula gives {formula}, exhaustive count {count}")
                })?;
            }
        }
        Ok(t.pass())
    })())
}

/// The commuting-involution generator emits exactly `nu_bar_p` distinct free
/// involutions, each commuting with `x^p`.
pub fn generator_completeness(kmax: usize, gen_cap: usize, nb: NuBarFn) -> SuiteReport {
    let mut t = Tally::new("generator completeness");
    settle((|| {
        for k in 1..=kmax.min(gen_cap) {
            let x = Permutation::standard_cycle(2 * k).expect("k >= 1");
            for p in divisors(2 * k as u64) {
                let xp = x.power(p as i64);
                let mut seen = BTreeSet::new();
                for y in generate_commuting(k, p as usize).expect("p divides 2k") {
                    let ok = y.is_free_involution() && y.commutes_with(&xp).expect("same degree");
                    t.check(ok, k as u64, Some(p), || format!("{y} is not a commuting free involution"))?;
                    let fresh = seen.insert(y.clone());
                    t.check(fresh, k as u64, Some(p), || format!("{y} emitted twice"))?;
                }
                let expected = nb(k, p as usize);
                let got = BigUint::from(seen.len());
                t.check(got == expected, k as u64, Some(p), || {
                    format!("generator emitted {got}, count formula gives {expected}")
                })?;
            }
        }
        Ok(t.pass())
    })())
}

/// `mu(sigma) / mu(sigma')` equals the tabulated index for every row, over
/// `k` from the row minimum to [`SWEEP_K_MAX`] and every `u | k` for N8.
pub fn extension_indices() -> SuiteReport {
    let mut t = Tally::new("extension indices");
    settle((|| {
        for case in CaseName::ALL {
            for k in case.min_k()..=SWEEP_K_MAX {
                let us: Vec<Option<u64>> = if case == CaseName::N8 {
                    divisors(k).into_iter().filter(|&u| u >= 2).map(Some).collect()
                } else {
                    vec![None]
                };
                for u in us {
                    let row = ExtensionCase::instantiate(case, k, u).expect("within row range");
                    let ok = row.index_relation_holds()
                        && row.mu_ratio().map_or(true, |r| r == BigInt::from(row.index).into());
                    t.check(ok, k, u, || {
                        format!("{case}: mu ratio {:?}, index {}", row.mu_ratio(), row.index)
                    })?;
                }
            }
        }
        Ok(t.pass())
    })())
}

/// The maximal cyclic actions on the classical curves: vectors, signatures,
/// genus, and agreement with the classifier.
pub fn cyclic_action_reproduction() -> SuiteReport {
    let mut t = Tally::new("classical cyclic actions");
    settle((|| {
        for g in 2..=TABLE_GENUS_MAX {
            for curve in ClassicalCurve::ALL {
                let Some(row) = classical_cyclic_action(curve, g) else { continue };
                let n = row.group_order;
                let vs = vector_signature(&row.vector);
                t.check(vs.signature == row.signature && !vs.degenerate, n, None, || {
                    format!("{} g = {g}: vector gives {}", curve.name(), vs.signature)
                })?;
                let rh = rh_genus(n, &row.signature);
                t.check(rh == Ok(g), n, None, || format!("{} g = {g}: genus {rh:?}", curve.name()))?;
                let c = match curve {
                    ClassicalCurve::WimanI => classify_regular(2 * g + 1),
                    ClassicalCurve::WimanII => classify_regular(2 * g),
                    _ => classify_edge_transitive(n, row.vector.b),
                }
                .expect("valid parameters");
                let vector_ok = if c.regular {
                    c.vector == row.vector
                } else {
                    c.k == n && c.t == Some(row.vector.b) && c.vector == row.vector
                };
                t.check(vector_ok && c.signature == row.signature && c.genus == g, n, None, || {
                    format!("{} g = {g}: classifier reports {} with {}", curve.name(), c.verdict, c.vector)
                })?;
                t.check(curve_matches(curve, &c.verdict), n, None, || {
                    format!("{} g = {g}: classifier verdict {}", curve.name(), c.verdict)
                })?;
            }
        }
        Ok(t.pass())
    })())
}

fn curve_matches(curve: ClassicalCurve, v: &Verdict) -> bool {
    matches!(
        (curve, v),
        (ClassicalCurve::WimanI, Verdict::WimanI)
            | (ClassicalCurve::WimanII, Verdict::WimanII)
            | (ClassicalCurve::AccolaMaclachlan, Verdict::AccolaMaclachlan)
            | (ClassicalCurve::Kulkarni, Verdict::Kulkarni)
            | (ClassicalCurve::WimanIII, Verdict::WimanIII)
            | (ClassicalCurve::Klein, Verdict::KleinQuartic)
    )
}

/// Face census and Euler genus of every shifted two-cycle map against the
/// signature prediction, for `k <=` [`SWEEP_K_MAX`] and every admissible `t`.
pub fn genus_double_check() -> SuiteReport {
    let mut t = Tally::new("genus double-check");
    settle((|| {
        for k in 1..=SWEEP_K_MAX {
            for s in 0..k {
                if k % 2 == 1 && 2 * s == k - 1 {
                    continue;
                }
                let r = edge_transitive_datum(k, s);
                t.check(r.is_ok(), k, None, || format!("t = {s}: {}", r.as_ref().unwrap_err()))?;
            }
        }
        Ok(t.pass())
    })())
}

/// All suites, census suites over `k <= kmax` with the given count function.
pub fn run_suites(kmax: usize, config: &CensusConfig, nb: NuBarFn) -> Vec<SuiteReport> {
    vec![
        partition_identity(kmax, nb),
        oracle_equality(kmax, config.brute_cap, nb),
        generator_completeness(kmax, config.gen_cap, nb),
        extension_indices(),
        cyclic_action_reproduction(),
        genus_double_check(),
    ]
}

pub fn run_all(kmax: usize, config: &CensusConfig) -> Vec<SuiteReport> {
    run_suites(kmax, config, &default_nu_bar)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_small() {
        for r in run_all(4, &CensusConfig::default()) {
            assert!(r.passed, "{}: {:?}", r.name, r.counterexample);
            assert!(r.checks > 0);
        }
    }

    #[test]
    fn tampered_formula_is_caught() {
        let tampered = |k: usize, p: usize| {
            let v = default_nu_bar(k, p);
            if (k, p) == (3, 3) {
                v + 1u32
            } else {
                v
            }
        };
        let r = partition_identity(6, &tampered);
        assert!(!r.passed);
        let ce = r.counterexample.unwrap();
        assert_eq!((ce.k, ce.p), (3, Some(3)));

        let r = oracle_equality(6, 7, &tampered);
        assert_eq!(r.counterexample.map(|c| (c.k, c.p)), Some((3, Some(3))));

        let r = generator_completeness(6, 10, &tampered);
        assert_eq!(r.counterexample.map(|c| (c.k, c.p)), Some((3, Some(3))));
    }

    #[test]
    fn tampered_top_count_is_caught_first() {
        let off = |k: usize, p: usize| {
            let v = default_nu_bar(k, p);
            if p == 2 * k && k == 2 {
                v * 2u32
            } else {
                v
            }
        };
        let ce = partition_identity(5, &off).counterexample.unwrap();
        assert_eq!((ce.k, ce.p), (2, Some(4)));
        assert!(ce.to_string().starts_with("(k = 2, p = 4)"));
    }
}
