//! Checked 64-bit number theory: factorization, divisor enumeration, exact
//! rationals. Trial division handles small factors, Brent's rho the rest.

use crate::{Budget, Error, Result};
use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

pub const NATURAL_MAX: u64 = (1 << 63) - 1;

/// Positive integer in `1..=2^63-1`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Natural(u64);

impl Natural {
    pub const ONE: Natural = Natural(1);
    pub const MAX: Natural = Natural(NATURAL_MAX);

    pub fn new(value: u64) -> Result<Natural> {
        if value == 0 || value > NATURAL_MAX {
            return Err(Error::Domain(format!("{value} is outside 1..=2^63-1")));
        }
        Ok(Natural(value))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

/// Constructor for values already known to be in range.
pub(crate) fn nat(value: u64) -> Natural {
    debug_assert!((1..=NATURAL_MAX).contains(&value));
    Natural(value)
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<Natural> for u64 {
    fn from(n: Natural) -> u64 {
        n.0
    }
}

impl TryFrom<u64> for Natural {
    type Error = Error;
    fn try_from(value: u64) -> Result<Natural> {
        Natural::new(value)
    }
}

/// Prime factorization with strictly increasing primes; empty for n = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: Natural,
    factors: Vec<(Natural, u32)>,
}

impl Factorization {
    pub fn n(&self) -> Natural {
        self.n
    }

    pub fn factors(&self) -> &[(Natural, u32)] {
        &self.factors
    }

    pub fn num_primes(&self) -> usize {
        self.factors.len()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q.get() == p)
            .map_or(0, |&(_, e)| e)
    }

    /// Exponent of 2.
    pub fn two_adic(&self) -> u32 {
        self.exponent_of(2)
    }

    pub fn odd_part(&self) -> Natural {
        nat(self.n.get() >> self.two_adic())
    }

    /// Product of the stored prime powers; equals n unless internals broke.
    pub fn reconstruct(&self) -> Option<u64> {
        let mut acc: u64 = 1;
        for &(p, e) in &self.factors {
            for _ in 0..e {
                acc = acc.checked_mul(p.get())?;
            }
        }
        Some(acc)
    }
}

/// Ascending divisors, starting at 1 and ending at n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorList {
    n: Natural,
    divisors: Vec<u64>,
    sigma: u64,
}

impl DivisorList {
    pub fn n(&self) -> Natural {
        self.n
    }

    pub fn values(&self) -> &[u64] {
        &self.divisors
    }

    pub fn len(&self) -> usize {
        self.divisors.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sigma(&self) -> u64 {
        self.sigma
    }

    /// Divisors other than n itself.
    pub fn proper(&self) -> &[u64] {
        &self.divisors[..self.divisors.len() - 1]
    }

    pub fn contains(&self, v: u64) -> bool {
        self.divisors.binary_search(&v).is_ok()
    }
}

/// Exponents r_1 < ... < r_l with subject = 1 + sum of 2^{r_i}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryExpansion {
    subject: Natural,
    exponents: Vec<u32>,
}

impl BinaryExpansion {
    pub fn subject(&self) -> Natural {
        self.subject
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Largest exponent r_l.
    pub fn top(&self) -> u32 {
        *self.exponents.last().unwrap()
    }

    pub fn reconstruct(&self) -> u64 {
        1 + self.exponents.iter().map(|&r| 1u64 << r).sum::<u64>()
    }
}

/// Reduced fraction of unsigned 64-bit terms, denominator positive.
#[derive(Copy, Clone, PartialEq, Eq, Serialize)]
pub struct Rational {
    num: u64,
    den: u64,
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    pub fn new(num: u128, den: u128) -> Result<Rational> {
        if den == 0 {
            return Err(Error::Domain("zero denominator".into()));
        }
        let g = gcd_u128(num.max(1), den);
        let (num, den) = if num == 0 { (0, 1) } else { (num / g, den / g) };
        if num > u64::MAX as u128 || den > u64::MAX as u128 {
            return Err(Error::Overflow("reduced rational exceeds 64 bits"));
        }
        Ok(Rational {
            num: num as u64,
            den: den as u64,
        })
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn integer_value(&self) -> Option<u64> {
        self.is_integer().then_some(self.num)
    }

    /// Exact comparison against num/den, no rounding anywhere.
    pub fn cmp_ratio(&self, num: u64, den: u64) -> Ordering {
        debug_assert!(den > 0);
        (self.num as u128 * den as u128).cmp(&(num as u128 * self.den as u128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Rational) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Rational) -> Ordering {
        self.cmp_ratio(other.num, other.den)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();

/// Primes below 1_000_000, ascending.
pub fn small_primes() -> &'static [u32] {
    PRIMES.get_or_init(|| {
        let limit = 1_000_000usize;
        let mut composite = vec![false; limit];
        let mut out = Vec::with_capacity(78_498);
        for p in 2..limit {
            if !composite[p] {
                out.push(p as u32);
                let mut q = p * p;
                while q < limit {
                    composite[q] = true;
                    q += p;
                }
            }
        }
        out
    })
}

/// The i-th prime, 1-based: nth_prime(1) = 2.
pub fn nth_prime(i: u32) -> Option<u64> {
    small_primes()
        .get(i.checked_sub(1)? as usize)
        .map(|&p| p as u64)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

// deterministic for all u64
const MR_BASES: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'bases: for &a in &MR_BASES {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Brent's cycle variant; n must be odd, composite, and > 1.
fn pollard_rho(n: u64) -> u64 {
    debug_assert!(n > 1 && n % 2 == 1 && !is_prime(n));
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        let mut q = 1u64;
        let mut count = 0u32;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            if x == y {
                break;
            }
            q = mul_mod(q, x.abs_diff(y), n);
            count += 1;
            if count.is_multiple_of(64) {
                d = gcd_u64(q, n);
            }
        }
        if d == 1 && x != y {
            d = gcd_u64(q, n);
        }
        if d == 1 || d == n {
            // batching overshot or the walk cycled; retry element-wise
            let (mut x, mut y) = (2u64, 2u64);
            d = 1;
            while d == 1 {
                x = f(x);
                y = f(f(y));
                if x == y {
                    d = n;
                    break;
                }
                d = gcd_u64(x.abs_diff(y), n);
            }
        }
        if d != n && d != 1 {
            return d;
        }
        c += 1;
    }
}

pub fn factorize(n: Natural) -> Factorization {
    let mut rem = n.get();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for &p in small_primes() {
        let p = p as u64;
        if p * p > rem {
            break;
        }
        if rem.is_multiple_of(p) {
            let mut e = 0u32;
            while rem.is_multiple_of(p) {
                rem /= p;
                e += 1;
            }
            factors.push((p, e));
        }
    }
    if rem > 1 {
        if rem < 1_000_000_000_000 || is_prime(rem) {
            factors.push((rem, 1));
        } else {
            let mut stack = vec![rem];
            let mut hard: Vec<u64> = Vec::new();
            while let Some(m) = stack.pop() {
                if is_prime(m) {
                    hard.push(m);
                } else {
                    let d = pollard_rho(m);
                    stack.push(d);
                    stack.push(m / d);
                }
            }
            hard.sort_unstable();
            for p in hard {
                match factors.last_mut() {
                    Some(last) if last.0 == p => last.1 += 1,
                    _ => factors.push((p, 1)),
                }
            }
        }
    }
    Factorization {
        n,
        factors: factors.into_iter().map(|(p, e)| (nat(p), e)).collect(),
    }
}

/// (sigma, tau): divisor sum and divisor count.
pub fn divisor_stats(f: &Factorization) -> Result<(Natural, Natural)> {
    let mut sigma: u128 = 1;
    let mut tau: u64 = 1;
    for &(p, e) in f.factors() {
        let mut geo: u128 = 1;
        let mut term: u128 = 1;
        for _ in 0..e {
            term = term
                .checked_mul(p.get() as u128)
                .ok_or(Error::Overflow("sigma term"))?;
            geo += term;
        }
        sigma = sigma.checked_mul(geo).ok_or(Error::Overflow("sigma"))?;
        tau = tau
            .checked_mul(e as u64 + 1)
            .ok_or(Error::Overflow("tau"))?;
    }
    if sigma > NATURAL_MAX as u128 {
        return Err(Error::Overflow("sigma exceeds 2^63-1"));
    }
    Ok((nat(sigma as u64), nat(tau)))
}

pub fn divisors(f: &Factorization, budget: &Budget) -> Result<DivisorList> {
    let (sigma, tau) = divisor_stats(f)?;
    if tau.get() > budget.tau_cap as u64 {
        return Err(Error::InstanceTooLarge {
            what: "divisor count",
            actual: tau.get(),
            limit: budget.tau_cap as u64,
        });
    }
    let mut divisors: Vec<u64> = vec![1];
    for &(p, e) in f.factors() {
        let base = divisors.clone();
        let mut power = 1u64;
        for _ in 0..e {
            power *= p.get();
            divisors.extend(base.iter().map(|d| d * power));
        }
    }
    divisors.sort_unstable();
    debug_assert_eq!(divisors.len() as u64, tau.get());
    Ok(DivisorList {
        n: f.n(),
        divisors,
        sigma: sigma.get(),
    })
}

/// Exponents of p - 1 in binary; requires odd p >= 3.
pub fn binary_expansion(p: Natural) -> Result<BinaryExpansion> {
    let v = p.get();
    if v < 3 || v.is_multiple_of(2) {
        return Err(Error::Domain(format!("{v} is not an odd number >= 3")));
    }
    let mut rest = v - 1;
    let mut exponents = Vec::new();
    while rest > 0 {
        let r = rest.trailing_zeros();
        exponents.push(r);
        rest &= rest - 1;
    }
    Ok(BinaryExpansion {
        subject: p,
        exponents,
    })
}

/// H(n) = n * tau / sigma, exact.
pub fn harmonic_mean(n: Natural) -> Result<Rational> {
    let f = factorize(n);
    let (sigma, tau) = divisor_stats(&f)?;
    Rational::new(n.get() as u128 * tau.get() as u128, sigma.get() as u128)
}

/// (perfect, harmonic): sigma = 2n, and sigma | n * tau.
pub fn basic_flags(n: Natural) -> Result<(bool, bool)> {
    let f = factorize(n);
    let (sigma, tau) = divisor_stats(&f)?;
    let perfect = sigma.get() as u128 == 2 * n.get() as u128;
    let harmonic = (n.get() as u128 * tau.get() as u128).is_multiple_of(sigma.get() as u128);
    Ok((perfect, harmonic))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> Natural {
        Natural::new(v).unwrap()
    }

    #[test]
    fn natural_rejects_zero_and_high_bit() {
        assert!(Natural::new(0).is_err());
        assert!(Natural::new(1 << 63).is_err());
        assert_eq!(Natural::new(NATURAL_MAX).unwrap().get(), NATURAL_MAX);
    }

    #[test]
    fn factorize_examples() {
        let f = factorize(n(945));
        let got: Vec<(u64, u32)> = f.factors().iter().map(|&(p, e)| (p.get(), e)).collect();
        assert_eq!(got, vec![(3, 3), (5, 1), (7, 1)]);
        assert!(factorize(n(1)).factors().is_empty());
        let f = factorize(n(1 << 62));
        assert_eq!(f.factors().len(), 1);
        assert_eq!(f.factors()[0], (n(2), 62));
        assert_eq!(f.reconstruct(), Some(1 << 62));
    }

    #[test]
    fn factorize_large_semiprime() {
        let p = 1_000_000_007u64;
        let q = 998_244_353u64;
        let f = factorize(n(p * q));
        let got: Vec<(u64, u32)> = f.factors().iter().map(|&(p, e)| (p.get(), e)).collect();
        assert_eq!(got, vec![(q, 1), (p, 1)]);
    }

    #[test]
    fn stats_spot_values() {
        for (v, sigma, tau) in [
            (1u64, 1u64, 1u64),
            (6, 12, 4),
            (20, 42, 6),
            (28, 56, 6),
            (120, 360, 16),
            (140, 336, 12),
            (945, 1920, 16),
            (2688, 8160, 32),
            (98280, 403200, 128),
        ] {
            let (s, t) = divisor_stats(&factorize(n(v))).unwrap();
            assert_eq!((s.get(), t.get()), (sigma, tau), "n = {v}");
        }
    }

    #[test]
    fn stats_overflow_is_reported() {
        assert!(matches!(
            divisor_stats(&factorize(Natural::MAX)),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn divisors_of_20() {
        let d = divisors(&factorize(n(20)), &Budget::default()).unwrap();
        assert_eq!(d.values(), &[1, 2, 4, 5, 10, 20]);
        assert_eq!(d.proper(), &[1, 2, 4, 5, 10]);
        assert_eq!(d.sigma(), 42);
    }

    #[test]
    fn divisors_respect_tau_cap() {
        let tight = Budget {
            tau_cap: 8,
            ..Budget::default()
        };
        assert!(matches!(
            divisors(&factorize(n(120)), &tight),
            Err(Error::InstanceTooLarge {
                what: "divisor count",
                actual: 16,
                limit: 8
            })
        ));
    }

    #[test]
    fn expansion_of_23() {
        let b = binary_expansion(n(23)).unwrap();
        assert_eq!(b.exponents(), &[1, 2, 4]);
        assert_eq!(b.top(), 4);
        assert_eq!(b.reconstruct(), 23);
        assert!(binary_expansion(n(22)).is_err());
        assert!(binary_expansion(n(1)).is_err());
    }

    #[test]
    fn harmonic_means() {
        assert_eq!(harmonic_mean(n(140)).unwrap().integer_value(), Some(5));
        assert_eq!(harmonic_mean(n(496)).unwrap().integer_value(), Some(5));
        let h6 = harmonic_mean(n(6)).unwrap();
        assert_eq!((h6.num(), h6.den()), (2, 1));
        let h120 = harmonic_mean(n(120)).unwrap();
        assert_eq!((h120.num(), h120.den()), (16, 3));
        assert_eq!(harmonic_mean(n(1)).unwrap().integer_value(), Some(1));
    }

    #[test]
    fn flags() {
        assert_eq!(basic_flags(n(6)).unwrap(), (true, true));
        assert_eq!(basic_flags(n(28)).unwrap(), (true, true));
        assert_eq!(basic_flags(n(140)).unwrap(), (false, true));
        assert_eq!(basic_flags(n(12)).unwrap(), (false, false));
    }

    #[test]
    fn rational_ordering_is_exact() {
        let a = Rational::new(16, 3).unwrap();
        let b = Rational::new(21, 4).unwrap();
        assert!(a > b);
        assert_eq!(a.cmp_ratio(16, 3), Ordering::Equal);
        assert_eq!(a.cmp_ratio(6, 1), Ordering::Less);
        assert_eq!(Rational::new(0, 5).unwrap().to_string(), "0");
        assert_eq!(a.to_string(), "16/3");
    }

    #[test]
    fn primality_spot_checks() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(!is_prime(1));
        assert!(is_prime(2_147_483_647));
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(18_446_744_073_709_551_555));
        assert_eq!(nth_prime(1), Some(2));
        assert_eq!(nth_prime(25), Some(97));
        assert_eq!(nth_prime(0), None);
    }
}
