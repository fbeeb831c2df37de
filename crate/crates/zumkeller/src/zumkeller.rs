//! Zumkeller classification rules: shape-based rejections, closed forms for
//! 2^a*p and 2^a*p^b with explicit partitions, closure under coprime factors
//! and doubling, and the search fallback.

use crate::arith::{self, gcd_u64, nat, Factorization, Natural};
use crate::oracle::{self, DivisorPartition};
use crate::{Budget, Error, Result};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZumkellerRule {
    TwoOddPrimesImpossible,
    OddSigma,
    SigmaTooSmall,
    PowerOfTwoTimesPrime,
    PowerOfTwoTimesPrimePower,
    CoprimeClosure,
    Doubling,
    OracleFallback,
}

impl ZumkellerRule {
    pub fn as_str(self) -> &'static str {
        match self {
            ZumkellerRule::TwoOddPrimesImpossible => "two-odd-primes-impossible",
            ZumkellerRule::OddSigma => "odd-sigma",
            ZumkellerRule::SigmaTooSmall => "sigma-too-small",
            ZumkellerRule::PowerOfTwoTimesPrime => "power-of-two-times-prime",
            ZumkellerRule::PowerOfTwoTimesPrimePower => "power-of-two-times-prime-power",
            ZumkellerRule::CoprimeClosure => "coprime-closure",
            ZumkellerRule::Doubling => "doubling",
            ZumkellerRule::OracleFallback => "oracle-fallback",
        }
    }
}

impl fmt::Display for ZumkellerRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ZumkellerVerdict {
    pub n: Natural,
    pub is_zumkeller: bool,
    pub rule: ZumkellerRule,
    pub certificate: Option<DivisorPartition>,
}

fn verdict(
    n: Natural,
    is_zumkeller: bool,
    rule: ZumkellerRule,
    certificate: Option<DivisorPartition>,
) -> ZumkellerVerdict {
    debug_assert_eq!(is_zumkeller, certificate.is_some());
    ZumkellerVerdict {
        n,
        is_zumkeller,
        rule,
        certificate,
    }
}

fn pow2(alpha: u32) -> Result<u64> {
    if alpha >= 63 {
        return Err(Error::Overflow("power of two exceeds 2^62"));
    }
    Ok(1u64 << alpha)
}

fn check_odd_prime(p: Natural) -> Result<()> {
    if p.get().is_multiple_of(2) || !arith::is_prime(p.get()) {
        return Err(Error::Domain(format!("{p} is not an odd prime")));
    }
    Ok(())
}

/// Whether 2^alpha * p splits, for odd prime p: alpha must reach the top
/// binary exponent of p - 1.
pub fn zumkeller_2a_p(alpha: u32, p: Natural) -> Result<bool> {
    if alpha == 0 {
        return Err(Error::Domain("alpha must be at least 1".into()));
    }
    check_odd_prime(p)?;
    pow2(alpha)?
        .checked_mul(p.get())
        .filter(|&v| v <= arith::NATURAL_MAX)
        .ok_or(Error::Overflow("2^alpha * p"))?;
    Ok(arith::binary_expansion(p)?.top() <= alpha)
}

/// Equal-sum split of the divisors of 2^alpha * p.
pub fn construct_partition_2a_p(
    alpha: u32,
    p: Natural,
    budget: &Budget,
) -> Result<DivisorPartition> {
    if !zumkeller_2a_p(alpha, p)? {
        return Err(Error::Domain(format!(
            "2^{alpha} * {p} has no equal-sum divisor split"
        )));
    }
    let n = (1u64 << alpha) * p.get();
    let mut with_p: Vec<u64> = (0..alpha).map(|j| (1u64 << j) * p.get()).collect();
    with_p.push(1 << alpha);
    let kept: Vec<u64> = arith::binary_expansion(p)?
        .exponents()
        .iter()
        .map(|&r| 1u64 << (r - 1))
        .collect();
    let mut rest: Vec<u64> = (0..=alpha)
        .map(|j| 1u64 << j)
        .filter(|v| !with_p.contains(v) && !kept.contains(v))
        .collect();
    rest.push(n);
    with_p.extend(kept);
    DivisorPartition::from_parts(nat(n), vec![with_p, rest], budget)
}

/// Whether 2^alpha * p^beta splits: beta odd and p <= 2^(alpha+1) - 1.
pub fn zumkeller_2a_p_beta(alpha: u32, p: Natural, beta: u32) -> Result<bool> {
    if alpha == 0 || beta == 0 {
        return Err(Error::Domain("alpha and beta must be at least 1".into()));
    }
    check_odd_prime(p)?;
    let mut n = pow2(alpha)?;
    for _ in 0..beta {
        n = n
            .checked_mul(p.get())
            .filter(|&v| v <= arith::NATURAL_MAX)
            .ok_or(Error::Overflow("2^alpha * p^beta"))?;
    }
    if beta.is_multiple_of(2) {
        return Ok(false);
    }
    Ok(p.get() < (1u64 << (alpha + 1)))
}

/// Split for 2^alpha * p^beta, lifted from the beta = 1 split by scaling
/// with even powers of p.
pub fn construct_partition_2a_p_beta(
    alpha: u32,
    p: Natural,
    beta: u32,
    budget: &Budget,
) -> Result<DivisorPartition> {
    if !zumkeller_2a_p_beta(alpha, p, beta)? {
        return Err(Error::Domain(format!(
            "2^{alpha} * {p}^{beta} has no equal-sum divisor split"
        )));
    }
    let base = construct_partition_2a_p(alpha, p, budget)?;
    let mut first = base.parts()[0].clone();
    let mut second = base.parts()[1].clone();
    let mut n = base.n().get();
    let mut scale = 1u64;
    for _ in 0..beta / 2 {
        scale *= p.get() * p.get();
        n *= p.get() * p.get();
        first.extend(base.parts()[0].iter().map(|v| v * scale));
        second.extend(base.parts()[1].iter().map(|v| v * scale));
    }
    DivisorPartition::from_parts(nat(n), vec![first, second], budget)
}

/// Multiplies a certified split by a coprime factor m: every part is
/// replaced by its products with the divisors of m.
pub fn extend_coprime(
    base: &ZumkellerVerdict,
    m: Natural,
    budget: &Budget,
) -> Result<DivisorPartition> {
    let cert = match (&base.certificate, base.is_zumkeller) {
        (Some(c), true) => c,
        _ => return Err(Error::Domain("base verdict carries no split".into())),
    };
    if gcd_u64(base.n.get(), m.get()) != 1 {
        return Err(Error::Domain(format!("{} and {m} share a factor", base.n)));
    }
    let product = base
        .n
        .get()
        .checked_mul(m.get())
        .filter(|&v| v <= arith::NATURAL_MAX)
        .ok_or(Error::Overflow("coprime product"))?;
    let md = arith::divisors(&arith::factorize(m), budget)?;
    let parts: Vec<Vec<u64>> = cert
        .parts()
        .iter()
        .map(|part| {
            part.iter()
                .flat_map(|&v| md.values().iter().map(move |&d| v * d))
                .collect()
        })
        .collect();
    DivisorPartition::from_parts(nat(product), parts, budget)
}

/// Turns a two-part split of n into one of 2n. For even n the members with
/// maximal 2-adic valuation swap sides as they double.
pub fn double_partition(base: &DivisorPartition, budget: &Budget) -> Result<DivisorPartition> {
    if base.k() != 2 {
        return Err(Error::Domain("doubling needs a two-part split".into()));
    }
    let n = base.n().get();
    let doubled = n
        .checked_mul(2)
        .filter(|&v| v <= arith::NATURAL_MAX)
        .ok_or(Error::Overflow("doubled n"))?;
    let (a, b) = (&base.parts()[0], &base.parts()[1]);
    let parts = if n % 2 == 1 {
        vec![
            a.iter().flat_map(|&v| [v, 2 * v]).collect(),
            b.iter().flat_map(|&v| [v, 2 * v]).collect(),
        ]
    } else {
        let alpha = n.trailing_zeros();
        let top = |v: u64| v.trailing_zeros() == alpha;
        let swap = |own: &[u64], other: &[u64]| -> Vec<u64> {
            own.iter()
                .map(|&v| if top(v) { 2 * v } else { v })
                .chain(other.iter().copied().filter(|&v| top(v)))
                .collect()
        };
        vec![swap(a, b), swap(b, a)]
    };
    DivisorPartition::from_parts(nat(doubled), parts, budget)
}

/// Classifies n, preferring structural rules over search.
pub fn is_zumkeller(n: Natural, budget: &Budget) -> Result<ZumkellerVerdict> {
    let f = arith::factorize(n);
    let fac = f.factors();
    if fac.len() == 2 && fac[0].0.get() % 2 == 1 {
        return Ok(verdict(
            n,
            false,
            ZumkellerRule::TwoOddPrimesImpossible,
            None,
        ));
    }
    let (sigma, _) = arith::divisor_stats(&f)?;
    if sigma.get() % 2 == 1 {
        return Ok(verdict(n, false, ZumkellerRule::OddSigma, None));
    }
    if (sigma.get() as u128) < 2 * n.get() as u128 {
        return Ok(verdict(n, false, ZumkellerRule::SigmaTooSmall, None));
    }
    let alpha = f.two_adic();
    if alpha >= 1 && fac.len() == 2 {
        let (p, beta) = fac[1];
        if beta == 1 {
            let holds = zumkeller_2a_p(alpha, p)?;
            let cert = holds
                .then(|| construct_partition_2a_p(alpha, p, budget))
                .transpose()?;
            return Ok(verdict(n, holds, ZumkellerRule::PowerOfTwoTimesPrime, cert));
        }
        let holds = zumkeller_2a_p_beta(alpha, p, beta)?;
        let cert = holds
            .then(|| construct_partition_2a_p_beta(alpha, p, beta, budget))
            .transpose()?;
        return Ok(verdict(
            n,
            holds,
            ZumkellerRule::PowerOfTwoTimesPrimePower,
            cert,
        ));
    }
    if alpha >= 1 && fac.len() >= 3 {
        let bound = (1u64 << (alpha + 1)) - 1;
        for &(p, beta) in &fac[1..] {
            if beta % 2 == 1 && p.get() <= bound {
                let unit_cert = if beta == 1 {
                    construct_partition_2a_p(alpha, p, budget)?
                } else {
                    construct_partition_2a_p_beta(alpha, p, beta, budget)?
                };
                let unit = verdict(
                    unit_cert.n(),
                    true,
                    ZumkellerRule::PowerOfTwoTimesPrimePower,
                    Some(unit_cert),
                );
                let rest = nat(n.get() / unit.n.get());
                let cert = extend_coprime(&unit, rest, budget)?;
                return Ok(verdict(n, true, ZumkellerRule::CoprimeClosure, Some(cert)));
            }
        }
        let odd = f.odd_part();
        let odd_verdict = is_zumkeller(odd, budget)?;
        if odd_verdict.is_zumkeller {
            let mut cert = odd_verdict
                .certificate
                .expect("positive verdict carries a split");
            for _ in 0..alpha {
                cert = double_partition(&cert, budget)?;
            }
            return Ok(verdict(n, true, ZumkellerRule::Doubling, Some(cert)));
        }
    }
    let (holds, cert) = oracle::is_zumkeller_oracle(n, budget)?;
    Ok(verdict(n, holds, ZumkellerRule::OracleFallback, cert))
}

/// First Zumkeller number in the twelve-wide window starting at `start`:
/// the first multiple of 6 that is not a multiple of 9.
pub fn window_witness(start: Natural) -> Result<Natural> {
    let s = start.get();
    if s > arith::NATURAL_MAX - 11 {
        return Err(Error::Overflow("window end"));
    }
    let mut m = s.div_ceil(6) * 6;
    if m.is_multiple_of(9) {
        m += 6;
    }
    debug_assert!(m >= s && m <= s + 11);
    Ok(nat(m))
}

/// Rows (i, p_i, 2^i * p_i) for 2 <= i <= limit, checking p_i < 2^i.
pub fn two_i_pi_table(limit: u32) -> Result<Vec<(u32, Natural, Natural)>> {
    let mut rows = Vec::new();
    for i in 2..=limit {
        let p = arith::nth_prime(i)
            .ok_or_else(|| Error::Domain(format!("prime index {i} beyond table")))?;
        if i < 63 && p >= (1u64 << i) {
            return Err(Error::Internal(format!("p_{i} = {p} is not below 2^{i}")));
        }
        if i >= 63 {
            return Err(Error::Overflow("2^i * p_i"));
        }
        let value = (1u64 << i)
            .checked_mul(p)
            .filter(|&v| v <= arith::NATURAL_MAX)
            .ok_or(Error::Overflow("2^i * p_i"))?;
        rows.push((i, nat(p), nat(value)));
    }
    Ok(rows)
}

/// Bounds every odd number with four or more prime factors must meet to
/// stand any chance of splitting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundClause {
    FourPrimesLeast,
    FourPrimesSecondSeven,
    FivePrimesLeast,
    FivePrimesSecondEleven,
    SixPrimesLeast,
    SixPrimesSecondEleven,
    UpToFifteenSecond,
    UpToEightThird,
}

impl BoundClause {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundClause::FourPrimesLeast => "four-primes-least-is-3",
            BoundClause::FourPrimesSecondSeven => "four-primes-second-at-most-7",
            BoundClause::FivePrimesLeast => "five-primes-least-is-3",
            BoundClause::FivePrimesSecondEleven => "five-primes-second-at-most-11",
            BoundClause::SixPrimesLeast => "six-primes-least-is-3",
            BoundClause::SixPrimesSecondEleven => "six-primes-second-at-most-11",
            BoundClause::UpToFifteenSecond => "second-at-most-23-through-15-primes",
            BoundClause::UpToEightThird => "third-at-most-79-through-8-primes",
        }
    }
}

/// Violated clauses for an odd factorization; empty means compliant.
pub fn prime_bound_audit(f: &Factorization) -> Result<Vec<BoundClause>> {
    if f.two_adic() > 0 {
        return Err(Error::Domain("audit applies to odd numbers only".into()));
    }
    let qs: Vec<u64> = f.factors().iter().map(|&(p, _)| p.get()).collect();
    let m = qs.len();
    let mut violated = Vec::new();
    if m == 4 {
        if qs[0] != 3 {
            violated.push(BoundClause::FourPrimesLeast);
        }
        if qs[1] > 7 {
            violated.push(BoundClause::FourPrimesSecondSeven);
        }
    }
    if m == 5 {
        if qs[0] != 3 {
            violated.push(BoundClause::FivePrimesLeast);
        }
        if qs[1] > 11 {
            violated.push(BoundClause::FivePrimesSecondEleven);
        }
    }
    if m == 6 {
        if qs[0] != 3 {
            violated.push(BoundClause::SixPrimesLeast);
        }
        if qs[1] > 11 {
            violated.push(BoundClause::SixPrimesSecondEleven);
        }
    }
    if (4..=15).contains(&m) && qs[1] > 23 {
        violated.push(BoundClause::UpToFifteenSecond);
    }
    if (4..=8).contains(&m) && qs[2] > 79 {
        violated.push(BoundClause::UpToEightThird);
    }
    Ok(violated)
}
