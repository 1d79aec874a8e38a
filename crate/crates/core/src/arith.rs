//! Arbitrary-precision arithmetic kernel.
//!
//! Everything here is a pure function of its arguments. Fermat numbers
//! `F_n = 2^(2^n) + 1` are never materialized for residue work: `2^(2^n) mod m`
//! is computed by `n` successive squarings, so the tower exponent only ever
//! exists as the machine-sized index `n`.

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;
use thiserror::Error;

/// Non-negative integer of unbounded magnitude.
pub type Natural = BigUint;

/// Largest `n` for which `F_n` may be materialized in full by default.
/// `F_20` is about 128 KiB; anything much larger is a sign the caller
/// should be working with residues instead.
pub const DEFAULT_MATERIALIZATION_BOUND: u32 = 20;

/// Default number of random Miller-Rabin witnesses above the deterministic
/// range (one-sided error at most `4^-40`).
pub const DEFAULT_WITNESS_COUNT: usize = 40;

/// Default RNG seed for randomized witnesses; fixed so results are
/// reproducible run to run.
pub const DEFAULT_PRIMALITY_SEED: u64 = 0x9e37_79b9_7f4a_7c15;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(BigUint),
    #[error("F_{index} exceeds the materialization bound (n <= {bound}); work with residues instead")]
    MaterializationBound { index: u32, bound: u32 },
}

/// Configuration of the randomized primality fallback.
///
/// Below [`is_prime`]'s deterministic threshold the configuration is unused;
/// above it, `witness_count` random bases are drawn from a ChaCha stream
/// seeded with `seed`, giving a one-sided composite-detection error of at
/// most `4^-witness_count` and bit-for-bit reproducible verdicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimalityConfig {
    pub witness_count: usize,
    pub seed: u64,
}

impl Default for PrimalityConfig {
    fn default() -> Self {
        Self {
            witness_count: DEFAULT_WITNESS_COUNT,
            seed: DEFAULT_PRIMALITY_SEED,
        }
    }
}

/// `base^exp mod modulus` by square-and-multiply; `O(bits(exp))` multiplications.
pub fn pow_mod(base: &Natural, exp: &Natural, modulus: &Natural) -> Result<Natural, ArithError> {
    check_modulus(modulus)?;
    Ok((base % modulus).modpow(exp, modulus))
}

/// Same as [`pow_mod`] but for a signed base, reduced into `[0, modulus)` first.
pub fn pow_mod_int(base: &BigInt, exp: &Natural, modulus: &Natural) -> Result<Natural, ArithError> {
    check_modulus(modulus)?;
    let m = BigInt::from(modulus.clone());
    let reduced = base
        .mod_floor(&m)
        .to_biguint()
        .expect("mod_floor of a positive modulus is non-negative");
    Ok(reduced.modpow(exp, modulus))
}

/// `(2^(2^n) + 1) mod m`, via `n` successive squarings of `2 mod m`.
pub fn fermat_mod(n: u32, m: &Natural) -> Result<Natural, ArithError> {
    check_modulus(m)?;
    let mut x = Natural::from(2u32) % m;
    for _ in 0..n {
        x = &x * &x % m;
    }
    Ok((x + 1u32) % m)
}

/// `(prod_{k=0}^{n} F_k) mod m`, computed as `(2^(2^(n+1)) - 1) mod m`
/// rather than by multiplying the factors.
pub fn fermat_product_mod(n: u32, m: &Natural) -> Result<Natural, ArithError> {
    check_modulus(m)?;
    let mut x = Natural::from(2u32) % m;
    for _ in 0..n + 1 {
        x = &x * &x % m;
    }
    Ok((x + (m - 1u32)) % m)
}

/// Materializes `F_n` in full. Fails loudly above the bound.
pub fn fermat_number(n: u32) -> Result<Natural, ArithError> {
    fermat_number_bounded(n, DEFAULT_MATERIALIZATION_BOUND)
}

/// Materializes `F_n` if `n <= bound` (and `bound` itself is sane).
pub fn fermat_number_bounded(n: u32, bound: u32) -> Result<Natural, ArithError> {
    if n > bound || n >= 40 {
        return Err(ArithError::MaterializationBound {
            index: n,
            bound: bound.min(39),
        });
    }
    Ok((Natural::one() << (1u64 << n)) + 1u32)
}

/// `(sum_{k=0}^{count-1} x^k) mod m`, exact for every `x` and `m >= 1`.
///
/// Uses the doubling recursion `S(2t) = S(t) * (1 + x^t)`,
/// `S(2t+1) = S(2t) + x^(2t)`, so it never divides by `x - 1` and is correct
/// even when `x ≡ 1 (mod m)` or `gcd(x - 1, m) > 1`.
pub fn geom_sum_mod(x: &Natural, count: &Natural, m: &Natural) -> Natural {
    assert!(!m.is_zero(), "geom_sum_mod: modulus must be positive");
    if m.is_one() {
        return Natural::zero();
    }
    let x = x % m;
    let mut sum = Natural::zero();
    let mut power = Natural::one() % m; // x^t for the prefix of count consumed so far
    let bits = count.bits();
    for i in (0..bits).rev() {
        sum = &sum * ((&power + 1u32) % m) % m;
        power = &power * &power % m;
        if count.bit(i) {
            sum = (&sum + &power) % m;
            power = &power * &x % m;
        }
    }
    sum
}

/// Modular inverse of `a` mod `m` when `gcd(a, m) = 1`.
pub fn mod_inverse(a: &Natural, m: &Natural) -> Option<Natural> {
    let a = BigInt::from(a % m);
    let m_int = BigInt::from(m.clone());
    let ext = a.extended_gcd(&m_int);
    if !ext.gcd.is_one() {
        return None;
    }
    ext.x.mod_floor(&m_int).to_biguint()
}

/// If `v` is a power of two, returns its exponent.
pub fn power_of_two_exponent(v: &Natural) -> Option<u64> {
    if v.is_zero() || v.count_ones() != 1 {
        return None;
    }
    Some(v.trailing_zeros().expect("nonzero"))
}

/// Primality test with the default randomized configuration.
///
/// Exact (deterministic Miller-Rabin witness set) for
/// `p < 3_317_044_064_679_887_385_961_981` (~3.3e24); above that, randomized
/// with [`DEFAULT_WITNESS_COUNT`] seeded witnesses.
pub fn is_prime(p: &Natural) -> bool {
    is_prime_with(p, &PrimalityConfig::default())
}

/// Primality test with explicit randomized-fallback configuration.
pub fn is_prime_with(p: &Natural, config: &PrimalityConfig) -> bool {
    if let Some(small) = p.to_u64() {
        return is_prime_u64(small);
    }
    for &q in small_primes() {
        if (p % q).is_zero() {
            return false; // p > u64, so p != q
        }
    }
    let deterministic = p < deterministic_limit();
    for &base in DETERMINISTIC_BASES {
        if !miller_rabin_round(p, &Natural::from(base)) {
            return false;
        }
    }
    if deterministic {
        return true;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let low = Natural::from(2u32);
    let high = p - 2u32;
    for _ in 0..config.witness_count {
        let base = rng.gen_biguint_range(&low, &high);
        if !miller_rabin_round(p, &base) {
            return false;
        }
    }
    true
}

/// Witness set that decides primality for every integer below ~3.3e24
/// (in particular for all of `u64`).
const DETERMINISTIC_BASES: &[u64] = &[2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn deterministic_limit() -> &'static Natural {
    static LIMIT: OnceLock<Natural> = OnceLock::new();
    LIMIT.get_or_init(|| "3317044064679887385961981".parse().expect("literal"))
}

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut sieve = vec![true; 1000];
        let mut primes = Vec::new();
        for p in 2..sieve.len() {
            if sieve[p] {
                primes.push(p as u64);
                for q in (p * p..sieve.len()).step_by(p) {
                    sieve[q] = false;
                }
            }
        }
        primes
    })
}

/// Exact primality for machine-sized inputs via the deterministic witness set.
fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    for &q in small_primes() {
        if p == q {
            return true;
        }
        if p % q == 0 {
            return false;
        }
    }
    if p < 1_000_000 {
        return true; // no prime factor below sqrt(p)
    }
    let d = (p - 1) >> (p - 1).trailing_zeros();
    let s = (p - 1).trailing_zeros();
    'bases: for &base in DETERMINISTIC_BASES {
        let base = base % p;
        if base == 0 {
            continue;
        }
        let mut x = pow_mod_u64(base, d, p);
        if x == 1 || x == p - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, p);
            if x == p - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// One Miller-Rabin round; returns false iff `base` witnesses compositeness.
fn miller_rabin_round(p: &Natural, base: &Natural) -> bool {
    // p is odd and > 3 at every call site.
    let one = Natural::one();
    let p_minus_1 = p - &one;
    let s = p_minus_1.trailing_zeros().expect("p - 1 > 0");
    let d = &p_minus_1 >> s;
    let base = base % p;
    if base.is_zero() {
        return true;
    }
    let mut x = base.modpow(&d, p);
    if x.is_one() || x == p_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = &x * &x % p;
        if x == p_minus_1 {
            return true;
        }
    }
    false
}

fn check_modulus(m: &Natural) -> Result<(), ArithError> {
    if m < &Natural::from(2u32) {
        Err(ArithError::ModulusTooSmall(m.clone()))
    } else {
        Ok(())
    }
}
