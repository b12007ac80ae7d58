//! Small integer helpers shared by the census and signature code.

use num_bigint::BigUint;
use num_traits::One;

pub use num_integer::{gcd, lcm};

/// All positive divisors of `n`, ascending. Empty for `n == 0`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// The Möbius function.
pub fn mobius(n: u64) -> i8 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `(2k-1)!! = 1 * 3 * ... * (2k-1)`, the number of free involutions on `2k` points.
pub fn odd_double_factorial(k: u64) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * (2 * i - 1))
}

/// `n` is one of `2, 4, p^s, 2p^s` (p an odd prime, s >= 1): exactly the moduli
/// `n > 1` whose unit group is cyclic, so `-1` is the only unit of order two.
pub fn has_cyclic_unit_group(n: u64) -> bool {
    if n == 2 || n == 4 {
        return true;
    }
    let odd = if n % 2 == 0 { n / 2 } else { n };
    if odd % 2 == 0 {
        return false;
    }
    let f = factorize(odd);
    f.len() == 1
}

pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}
