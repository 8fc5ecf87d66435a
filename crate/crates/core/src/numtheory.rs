//! Exact elementary number theory on `u64`.
//!
//! Everything here is a pure function. Products go through `u128` or checked
//! arithmetic so nothing wraps silently.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("{op}: argument must be positive")]
    Zero { op: &'static str },
    #[error("multiplicative order of {r} mod {m} is undefined: gcd({r}, {m}) = {gcd}")]
    NotCoprime { r: u64, m: u64, gcd: u64 },
    #[error("{op}: result overflows u64")]
    Overflow { op: &'static str },
}

const SMALL_PRIMES: [u64; 54] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
    197, 199, 211, 223, 227, 229, 233, 239, 241, 251,
];

/// Prime decomposition, primes strictly ascending.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// The full prime-power parts `p^e` exactly dividing the factored value.
    pub fn prime_powers(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.factors.iter().map(|&(p, e)| (p, p.pow(e)))
    }

    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }

    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Least common multiple of two positive integers.
pub fn lcm(a: u64, b: u64) -> Result<u64, NumError> {
    if a == 0 || b == 0 {
        return Err(NumError::Zero { op: "lcm" });
    }
    (a / gcd(a, b))
        .checked_mul(b)
        .ok_or(NumError::Overflow { op: "lcm" })
}

/// Trial division: the small-prime table first, then a 6k±1 wheel.
pub fn factorize(n: u64) -> Result<Factorization, NumError> {
    if n == 0 {
        return Err(NumError::Zero { op: "factorize" });
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut take = |p: u64, rest: &mut u64| {
        let mut e = 0;
        while (*rest).is_multiple_of(p) {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    for &p in &SMALL_PRIMES {
        if p * p > rest {
            break;
        }
        take(p, &mut rest);
    }
    let mut k = 258u64; // 6 * 43, first wheel pair above the table is 257/259
    while rest > 1 {
        let (lo, hi) = (k - 1, k + 1);
        if lo.checked_mul(lo).is_none_or(|sq| sq > rest) {
            break;
        }
        take(lo, &mut rest);
        take(hi, &mut rest);
        k += 6;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { factors })
}

pub fn euler_totient(d: u64) -> Result<u64, NumError> {
    let f = factorize(d)?;
    Ok(f.factors
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product())
}

/// All divisors of `n`, ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>, NumError> {
    let f = factorize(n)?;
    let mut out = vec![1u64];
    for &(p, e) in f.factors() {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

fn mul_mod(a: u64, b: u64, modulus: u64) -> u64 {
    ((a as u128 * b as u128) % modulus as u128) as u64
}

/// `base^exp mod modulus`; every residue mod 1 is 0.
pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> Result<u64, NumError> {
    if modulus == 0 {
        return Err(NumError::Zero { op: "mod_pow" });
    }
    let mut acc = 1 % modulus;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, b, modulus);
        }
        b = mul_mod(b, b, modulus);
        exp >>= 1;
    }
    Ok(acc)
}

/// `Σ_{k=0}^{terms-1} r^(k·step) mod modulus`.
///
/// This is the reduced value of `(r^(step·terms) - 1) / (r^step - 1)` without
/// ever forming the numerator, and it stays defined when `r^step = 1`.
pub fn geometric_sum_mod(r: u64, step: u64, terms: u64, modulus: u64) -> Result<u64, NumError> {
    let q = mod_pow(r, step, modulus)?;
    Ok(geometric_series(q, terms, modulus).0)
}

// Returns (Σ_{k<terms} q^k, q^terms), both mod `modulus`.
fn geometric_series(q: u64, terms: u64, modulus: u64) -> (u64, u64) {
    if terms == 0 {
        return (0, 1 % modulus);
    }
    let (half_sum, half_pow) = geometric_series(q, terms / 2, modulus);
    // S(2t) = S(t) * (1 + q^t), q^(2t) = (q^t)^2
    let sum = mul_mod(half_sum, (1 + half_pow) % modulus, modulus);
    let pow = mul_mod(half_pow, half_pow, modulus);
    if terms.is_multiple_of(2) {
        (sum, pow)
    } else {
        // S(2t+1) = 1 + q * S(2t)
        ((1 + mul_mod(q, sum, modulus)) % modulus, mul_mod(pow, q, modulus))
    }
}

/// Least `t >= 1` with `r^t ≡ 1 (mod m)`.
pub fn multiplicative_order(r: u64, m: u64) -> Result<u64, NumError> {
    if m == 0 {
        return Err(NumError::Zero {
            op: "multiplicative_order",
        });
    }
    if m == 1 {
        return Ok(1);
    }
    let g = gcd(r, m);
    if g != 1 {
        return Err(NumError::NotCoprime { r, m, gcd: g });
    }
    for t in divisors(euler_totient(m)?)? {
        if mod_pow(r, t, m)? == 1 {
            return Ok(t);
        }
    }
    unreachable!("Euler's theorem guarantees r^phi(m) = 1 mod m")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn totient_by_count(d: u64) -> u64 {
        (1..=d).filter(|&k| gcd(k, d) == 1).count() as u64
    }

    #[test]
    fn totient_values() {
        assert_eq!(euler_totient(1), Ok(1));
        assert_eq!(euler_totient(12), Ok(4));
        assert_eq!(euler_totient(9), Ok(6));
        assert_eq!(euler_totient(0), Err(NumError::Zero { op: "factorize" }));
        for d in 1..=500 {
            assert_eq!(euler_totient(d).unwrap(), totient_by_count(d), "d = {d}");
        }
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(7).unwrap(), vec![1, 7]);
        assert!(divisors(0).is_err());
        for n in 1..=300u64 {
            let brute: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            assert_eq!(divisors(n).unwrap(), brute);
        }
    }

    #[test]
    fn factorizations() {
        assert_eq!(factorize(1).unwrap().factors(), &[]);
        assert_eq!(factorize(12).unwrap().factors(), &[(2, 2), (3, 1)]);
        assert_eq!(factorize(97).unwrap().factors(), &[(97, 1)]);
        assert!(factorize(0).is_err());
        // beyond the small-prime table
        assert_eq!(factorize(257 * 263).unwrap().factors(), &[(257, 1), (263, 1)]);
        assert_eq!(factorize(65_537 * 3).unwrap().factors(), &[(3, 1), (65_537, 1)]);
        assert_eq!(factorize(999_983).unwrap().factors(), &[(999_983, 1)]);
        assert_eq!(factorize(1 << 40).unwrap().factors(), &[(2, 40)]);
        assert_eq!(factorize(72).unwrap().to_string(), "2^3 * 3^2");
    }

    #[test]
    fn mod_pow_values() {
        assert_eq!(mod_pow(2, 2, 3), Ok(1));
        assert_eq!(mod_pow(5, 0, 7), Ok(1));
        assert_eq!(mod_pow(3, 4, 1), Ok(0));
        assert_eq!(mod_pow(0, 0, 1), Ok(0));
        assert!(mod_pow(2, 3, 0).is_err());
        assert_eq!(mod_pow(u64::MAX, 2, u64::MAX - 1), Ok(1));
    }

    #[test]
    fn geometric_sum_values() {
        assert_eq!(geometric_sum_mod(2, 1, 2, 3), Ok(0));
        assert_eq!(geometric_sum_mod(2, 2, 1, 3), Ok(1));
        assert_eq!(geometric_sum_mod(1, 1, 5, 7), Ok(5));
        assert_eq!(geometric_sum_mod(3, 2, 0, 7), Ok(0));
        assert_eq!(geometric_sum_mod(3, 2, 4, 1), Ok(0));
        assert!(geometric_sum_mod(3, 2, 4, 0).is_err());
    }

    #[test]
    fn multiplicative_orders() {
        assert_eq!(multiplicative_order(2, 7), Ok(3));
        assert_eq!(multiplicative_order(1, 5), Ok(1));
        assert_eq!(multiplicative_order(2, 5), Ok(4));
        assert_eq!(multiplicative_order(0, 1), Ok(1));
        assert_eq!(
            multiplicative_order(4, 6),
            Err(NumError::NotCoprime { r: 4, m: 6, gcd: 2 })
        );
    }

    #[test]
    fn gcd_lcm() {
        assert_eq!(gcd(0, 0), 0);
        assert_eq!(gcd(0, 9), 9);
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(lcm(4, 6), Ok(12));
        assert!(lcm(0, 3).is_err());
        assert!(lcm(u64::MAX, u64::MAX - 1).is_err());
    }

    #[test]
    fn gauss_divisor_sum() {
        for n in 1..=10_000u64 {
            let sum: u64 = divisors(n)
                .unwrap()
                .into_iter()
                .map(|d| euler_totient(d).unwrap())
                .sum();
            assert_eq!(sum, n, "n = {n}");
        }
    }

    #[test]
    fn totient_multiplicative() {
        for a in 1..=100u64 {
            for b in 1..=10_000 / a {
                if gcd(a, b) == 1 {
                    let ab = euler_totient(a * b).unwrap();
                    assert_eq!(ab, euler_totient(a).unwrap() * euler_totient(b).unwrap());
                }
            }
        }
    }

    fn mod_inverse(a: u64, m: u64) -> Option<u64> {
        (0..m).find(|&x| (a as u128 * x as u128) % m as u128 == 1 % m as u128)
    }

    proptest! {
        #[test]
        fn geometric_sum_matches_direct_summation(r in 0u64..50, step in 0u64..6, terms in 0u64..12, m in 1u64..60) {
            let direct = (0..terms).fold(0u64, |acc, k| (acc + mod_pow(r, k * step, m).unwrap()) % m);
            prop_assert_eq!(geometric_sum_mod(r, step, terms, m).unwrap(), direct);
        }

        #[test]
        fn geometric_sum_quotient_form(r in 2u64..30, step in 1u64..5, terms in 1u64..8, m in 1u64..60) {
            // (r^(step*terms) - 1) * (r^step - 1)^-1, when the inverse exists
            let denom = (mod_pow(r, step, m).unwrap() + m - 1) % m;
            if let Some(inv) = mod_inverse(denom, m) {
                let num = (mod_pow(r, step * terms, m).unwrap() + m - 1) % m;
                prop_assert_eq!(geometric_sum_mod(r, step, terms, m).unwrap(), num * inv % m);
            }
        }

        #[test]
        fn order_divides_totient(r in 1u64..500, m in 1u64..500) {
            if gcd(r, m) == 1 {
                let t = multiplicative_order(r, m).unwrap();
                prop_assert_eq!(euler_totient(m).unwrap() % t, 0);
                prop_assert_eq!(mod_pow(r, t, m).unwrap(), 1 % m);
                for s in 1..t {
                    prop_assert_ne!(mod_pow(r, s, m).unwrap(), 1 % m);
                }
            }
        }

        #[test]
        fn factorization_is_valid(n in 1u64..2_000_000) {
            let f = factorize(n).unwrap();
            prop_assert_eq!(f.value(), n);
            for w in f.factors().windows(2) {
                prop_assert!(w[0].0 < w[1].0);
            }
            for p in f.primes() {
                prop_assert!((2..p).take_while(|d| d * d <= p).all(|d| p % d != 0));
            }
        }
    }
}
