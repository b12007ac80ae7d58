//! Signature arithmetic for finite group actions on compact Riemann surfaces.
//!
//! A signature `(h; r_1, ..., r_s)` has measure `mu = 2h - 2 + sum(1 - 1/r_i)`;
//! a group `G` acting with that signature in genus `g` satisfies the
//! Riemann-Hurwitz relation `2g - 2 = |G| mu`. Cyclic actions with a triangular
//! signature `(0; n, m, r)` are described by generating vectors `<1, b, c>` in
//! `Z_n` with `1 + b + c = 0`. All arithmetic is exact.

use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::arith::{gcd, has_cyclic_unit_group, lcm, mod_pow};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RiemannError {
    #[error("branching period {0} is below 2")]
    BadPeriod(u64),
    #[error("no surface-kernel action: |G| * mu = {value} is not an even integer >= -2")]
    NoSurface { value: String },
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
}

/// `(h; r_1, ..., r_s)`. Equality and hashing ignore the order of the periods.
#[derive(Debug, Clone)]
pub struct Signature {
    orbit_genus: u64,
    periods: Vec<u64>,
}

impl Signature {
    pub fn new(orbit_genus: u64, periods: Vec<u64>) -> Result<Signature, RiemannError> {
        if let Some(&r) = periods.iter().find(|&&r| r < 2) {
            return Err(RiemannError::BadPeriod(r));
        }
        Ok(Signature {
            orbit_genus,
            periods,
        })
    }

    /// Like [`Signature::new`] but drops unbranched points (order 1).
    pub fn from_branch_orders(orbit_genus: u64, orders: &[u64]) -> Signature {
        Signature {
            orbit_genus,
            periods: orders.iter().copied().filter(|&r| r > 1).collect(),
        }
    }

    pub fn triangle(a: u64, b: u64, c: u64) -> Signature {
        Signature::new(0, vec![a, b, c]).expect("triangle periods >= 2")
    }

    pub fn orbit_genus(&self) -> u64 {
        self.orbit_genus
    }

    pub fn periods(&self) -> &[u64] {
        &self.periods
    }

    pub fn sorted_periods(&self) -> Vec<u64> {
        let mut v = self.periods.clone();
        v.sort_unstable();
        v
    }

    pub fn is_triangular(&self) -> bool {
        self.orbit_genus == 0 && self.periods.len() == 3
    }
}

impl PartialEq for Signature {
    fn eq(&self, other: &Self) -> bool {
        self.orbit_genus == other.orbit_genus && self.sorted_periods() == other.sorted_periods()
    }
}

impl Eq for Signature {}

impl Hash for Signature {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.orbit_genus.hash(state);
        self.sorted_periods().hash(state);
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.periods.is_empty() {
            return write!(f, "({}; -)", self.orbit_genus);
        }
        let ps: Vec<String> = self.periods.iter().map(u64::to_string).collect();
        write!(f, "({}; {})", self.orbit_genus, ps.join(", "))
    }
}

impl Serialize for Signature {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `2h - 2 + sum(1 - 1/r_i)`, exactly.
pub fn mu(sigma: &Signature) -> BigRational {
    let mut total = BigRational::from_integer(BigInt::from(2 * sigma.orbit_genus as i64 - 2));
    for &r in &sigma.periods {
        total += BigRational::one() - rat(1, r as i64);
    }
    total
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Geometry {
    Sphere,
    Plane,
    Hyperbolic,
}

pub fn geometry(sigma: &Signature) -> Geometry {
    let m = mu(sigma);
    if m.is_negative() {
        Geometry::Sphere
    } else if m.is_zero() {
        Geometry::Plane
    } else {
        Geometry::Hyperbolic
    }
}

/// Genus `g` with `2g - 2 = |G| mu(sigma)`.
pub fn rh_genus(group_order: u64, sigma: &Signature) -> Result<u64, RiemannError> {
    let value = mu(sigma) * BigRational::from_integer(BigInt::from(group_order));
    let fail = || RiemannError::NoSurface {
        value: value.to_string(),
    };
    if !value.is_integer() {
        return Err(fail());
    }
    let v = value.to_integer().to_i64().ok_or_else(fail)?;
    if v < -2 || v % 2 != 0 {
        return Err(fail());
    }
    Ok(((v + 2) / 2) as u64)
}

/// Maclachlan's criterion: `Z_n` has a `(0; n, m, r)`-generating vector iff `lcm(m, r) = n`.
pub fn lcm_condition(n: u64, m: u64, r: u64) -> bool {
    lcm(m, r) == n
}

/// `<1, b, c>` in `Z_n` with `1 + b + c = 0 (mod n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenVector {
    pub n: u64,
    pub b: u64,
    pub c: u64,
}

impl GenVector {
    pub fn entries(&self) -> [u64; 3] {
        [1 % self.n, self.b, self.c]
    }
}

impl fmt::Display for GenVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<1, {}, {}> mod {}", self.b, self.c, self.n)
    }
}

impl Serialize for GenVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn normal_form_vector(n: u64, b: u64) -> Result<GenVector, RiemannError> {
    if n < 2 {
        return Err(RiemannError::BadModulus(n));
    }
    let b = b % n;
    let c = (n - (1 + b) % n) % n;
    Ok(GenVector { n, b, c })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VectorSignature {
    pub signature: Signature,
    /// `b` or `c` is zero, so a branch point disappears (a sphere action `(0; n, n)`).
    pub degenerate: bool,
}

/// `(0; n, n/(b,n), n/(c,n))`.
pub fn vector_signature(v: &GenVector) -> VectorSignature {
    let orders = [v.n, v.n / gcd(v.b, v.n), v.n / gcd(v.c, v.n)];
    VectorSignature {
        signature: Signature::from_branch_orders(0, &orders),
        degenerate: orders.contains(&1),
    }
}

/// Residues `b` mod `k` with `b != 1`, `b^3 = 1` and `1 + b + b^2 = 0`: the
/// values `beta(1)` of order-three automorphisms allowing an index-3 normal
/// extension of a `(0; k, k, k)` action. Both `beta(1)` and `beta(1)^2` appear.
pub fn n6_admissible(k: u64) -> Vec<u64> {
    if k < 2 {
        return Vec::new();
    }
    (0..k)
        .filter(|&b| b != 1 % k)
        .filter(|&b| mod_pow(b, 3, k) == 1 % k)
        .filter(|&b| (1 + b + (b as u128 * b as u128 % k as u128) as u64) % k == 0)
        .collect()
}

/// Ways a `(0; k, k, u)` action with vector `<1, t, k-1-t>` extends with index 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum N8Case {
    /// `k` odd, extension `Z_2k`, `u = k`.
    AbelianZ2k,
    /// `k` even, extension `Z_2 + Z_k`, `u = k/2`.
    AbelianZ2xZk,
    /// `Z_2 semidirect Z_k` through `alpha(1) = alpha`.
    NonAbelian { alpha: u64 },
    None,
}

pub fn n8_admissible(k: u64, t: u64) -> N8Case {
    if k < 3 || t == 0 || t >= k {
        return N8Case::None;
    }
    if t == 1 {
        return if k % 2 == 1 {
            N8Case::AbelianZ2k
        } else {
            N8Case::AbelianZ2xZk
        };
    }
    if t == k - 1 {
        // c = 0 and u = 1.
        return N8Case::None;
    }
    if (t as u128 * t as u128 % k as u128) as u64 == 1 && !has_cyclic_unit_group(k) {
        N8Case::NonAbelian { alpha: t }
    } else {
        N8Case::None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaseName {
    N6,
    N8,
    T1,
    T4,
    T8,
    T9,
    T10,
}

impl CaseName {
    pub const ALL: [CaseName; 7] = [
        CaseName::N6,
        CaseName::N8,
        CaseName::T1,
        CaseName::T4,
        CaseName::T8,
        CaseName::T9,
        CaseName::T10,
    ];

    /// Index `[Lambda(sigma') : Lambda(sigma)]` as tabulated.
    pub fn index(self) -> u64 {
        match self {
            CaseName::N6 => 3,
            CaseName::N8 => 2,
            CaseName::T1 => 24,
            CaseName::T4 => 12,
            CaseName::T8 => 6,
            CaseName::T9 => 4,
            CaseName::T10 => 4,
        }
    }

    pub fn conditions(self) -> &'static str {
        match self {
            CaseName::N6 => "k >= 4",
            CaseName::N8 => "u | k, k >= 3",
            CaseName::T1 | CaseName::T4 => "-",
            CaseName::T8 => "k >= 2",
            CaseName::T9 | CaseName::T10 => "k >= 3",
        }
    }

    /// Smallest admissible value of the row variable `k`.
    pub fn min_k(self) -> u64 {
        match self {
            CaseName::N6 => 4,
            CaseName::N8 => 3,
            CaseName::T1 => 7,
            CaseName::T4 => 8,
            CaseName::T8 => 2,
            CaseName::T9 | CaseName::T10 => 3,
        }
    }
}

impl fmt::Display for CaseName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A signature pair `sigma < sigma'` from the catalogue of extensions of
/// cyclic-admissible triangular signatures.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionCase {
    pub case_name: CaseName,
    /// Row variable `k` (absent for the rigid rows T1, T4).
    pub k: Option<u64>,
    /// Row variable `u` (N8 only).
    pub u: Option<u64>,
    pub sigma: Signature,
    pub sigma_prime: Signature,
    pub index: u64,
    pub conditions_note: String,
}

impl ExtensionCase {
    /// Instantiates a row, or `None` if the row's conditions fail.
    /// `k` is ignored for T1 and T4; `u` is used by N8 only.
    pub fn instantiate(case: CaseName, k: u64, u: Option<u64>) -> Option<ExtensionCase> {
        let (sigma, sigma_prime, k_param, u_param) = match case {
            CaseName::N6 => {
                if k < 4 {
                    return None;
                }
                (Signature::triangle(k, k, k), Signature::triangle(3, 3, k), Some(k), None)
            }
            CaseName::N8 => {
                let u = u?;
                if k < 3 || u < 2 || k % u != 0 {
                    return None;
                }
                (Signature::triangle(k, k, u), Signature::triangle(2, k, 2 * u), Some(k), Some(u))
            }
            CaseName::T1 => (Signature::triangle(7, 7, 7), Signature::triangle(2, 3, 7), None, None),
            CaseName::T4 => (Signature::triangle(8, 8, 4), Signature::triangle(2, 3, 8), None, None),
            CaseName::T8 => {
                if k < 2 {
                    return None;
                }
                (
                    Signature::triangle(4 * k, 4 * k, k),
                    Signature::triangle(2, 3, 4 * k),
                    Some(k),
                    None,
                )
            }
            CaseName::T9 => {
                if k < 3 {
                    return None;
                }
                (
                    Signature::triangle(2 * k, 2 * k, k),
                    Signature::triangle(2, 4, 2 * k),
                    Some(k),
                    None,
                )
            }
            CaseName::T10 => {
                if k < 3 {
                    return None;
                }
                (
                    Signature::triangle(3 * k, k, 3),
                    Signature::triangle(2, 3, 3 * k),
                    Some(k),
                    None,
                )
            }
        };
        Some(ExtensionCase {
            case_name: case,
            k: k_param,
            u: u_param,
            sigma,
            sigma_prime,
            index: case.index(),
            conditions_note: case.conditions().to_string(),
        })
    }

    /// `mu(sigma) / mu(sigma')`, which must equal `index`; `None` for the
    /// Euclidean instances where both measures vanish.
    pub fn mu_ratio(&self) -> Option<BigRational> {
        let denom = mu(&self.sigma_prime);
        (!denom.is_zero()).then(|| mu(&self.sigma) / denom)
    }

    /// `mu(sigma) = index * mu(sigma')`, valid in every geometry.
    pub fn index_relation_holds(&self) -> bool {
        mu(&self.sigma) == mu(&self.sigma_prime) * BigRational::from_integer(BigInt::from(self.index))
    }
}

/// Every catalogue row whose `sigma` equals the given triangular signature
/// (up to order of periods), with its variables instantiated.
pub fn extension_matches(sigma: &Signature) -> Vec<ExtensionCase> {
    if !sigma.is_triangular() {
        return Vec::new();
    }
    let periods = sigma.sorted_periods();
    let mut out = Vec::new();
    for case in CaseName::ALL {
        let mut candidates: Vec<(u64, Option<u64>)> = Vec::new();
        match case {
            CaseName::N8 => {
                for &k in &periods {
                    if periods.iter().filter(|&&r| r == k).count() >= 2 {
                        let mut rest = periods.clone();
                        for _ in 0..2 {
                            let pos = rest.iter().position(|&r| r == k).expect("present twice");
                            rest.remove(pos);
                        }
                        candidates.push((k, Some(rest[0])));
                    }
                }
            }
            _ => {
                for &r in &periods {
                    for factor in 1..=4 {
                        if r % factor == 0 {
                            candidates.push((r / factor, None));
                        }
                    }
                }
            }
        }
        candidates.sort_unstable();
        candidates.dedup();
        for (k, u) in candidates {
            if let Some(ext) = ExtensionCase::instantiate(case, k, u) {
                let already = out
                    .iter()
                    .any(|e: &ExtensionCase| e.case_name == ext.case_name && e.k == ext.k && e.u == ext.u);
                if ext.sigma == *sigma && !already {
                    out.push(ext);
                }
            }
        }
    }
    out
}

/// The curves with large cyclic automorphism groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ClassicalCurve {
    WimanI,
    WimanII,
    AccolaMaclachlan,
    Kulkarni,
    WimanIII,
    Klein,
}

impl ClassicalCurve {
    pub const ALL: [ClassicalCurve; 6] = [
        ClassicalCurve::WimanI,
        ClassicalCurve::WimanII,
        ClassicalCurve::AccolaMaclachlan,
        ClassicalCurve::Kulkarni,
        ClassicalCurve::WimanIII,
        ClassicalCurve::Klein,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassicalCurve::WimanI => "Wiman type I",
            ClassicalCurve::WimanII => "Wiman type II",
            ClassicalCurve::AccolaMaclachlan => "Accola-Maclachlan",
            ClassicalCurve::Kulkarni => "Kulkarni",
            ClassicalCurve::WimanIII => "Wiman type III",
            ClassicalCurve::Klein => "Klein quartic",
        }
    }
}

/// The maximal cyclic action on a classical curve of genus `g`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicAction {
    pub curve: ClassicalCurve,
    pub genus: u64,
    pub group_order: u64,
    pub signature: Signature,
    pub vector: GenVector,
}

/// `None` where the curve does not exist in genus `g` (Kulkarni needs
/// `g = 3 mod 4`; Wiman III and Klein live in genus 3 only).
pub fn classical_cyclic_action(curve: ClassicalCurve, g: u64) -> Option<CyclicAction> {
    if g < 2 {
        return None;
    }
    let (n, sig, b) = match curve {
        ClassicalCurve::WimanI => (4 * g + 2, Signature::triangle(4 * g + 2, 2 * g + 1, 2), 2 * g),
        ClassicalCurve::WimanII => (4 * g, Signature::triangle(4 * g, 4 * g, 2), 2 * g - 1),
        ClassicalCurve::AccolaMaclachlan => (2 * g + 2, Signature::triangle(2 * g + 2, 2 * g + 2, g + 1), 1),
        ClassicalCurve::Kulkarni => {
            if g % 4 != 3 {
                return None;
            }
            (2 * g + 2, Signature::triangle(2 * g + 2, 2 * g + 2, g + 1), g + 2)
        }
        ClassicalCurve::WimanIII => {
            if g != 3 {
                return None;
            }
            (12, Signature::triangle(12, 4, 3), 3)
        }
        ClassicalCurve::Klein => {
            if g != 3 {
                return None;
            }
            (7, Signature::triangle(7, 7, 7), 2)
        }
    };
    Some(CyclicAction {
        curve,
        genus: g,
        group_order: n,
        signature: sig,
        vector: normal_form_vector(n, b).expect("n >= 2"),
    })
}
