//! k-layered classification: family constructions for three equal-sum parts,
//! coprime and practical-composition closures, and shape rejections.

use crate::arith::{self, gcd_u64, nat, Factorization, Natural};
use crate::oracle::{self, DivisorPartition};
use crate::{Budget, Error, Result};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LayeredRule {
    PrimePowerNever,
    TwoPrimeNever,
    ThreeFactorClassification,
    SquarefreeOddBound,
    DivisibilityFail,
    SumTooSmall,
    CoprimeClosure,
    PracticalComposition,
    OracleFallback,
}

impl LayeredRule {
    pub fn as_str(self) -> &'static str {
        match self {
            LayeredRule::PrimePowerNever => "prime-power-never",
            LayeredRule::TwoPrimeNever => "two-prime-never",
            LayeredRule::ThreeFactorClassification => "three-factor-classification",
            LayeredRule::SquarefreeOddBound => "squarefree-odd-bound",
            LayeredRule::DivisibilityFail => "divisibility-fail",
            LayeredRule::SumTooSmall => "sum-too-small",
            LayeredRule::CoprimeClosure => "coprime-closure",
            LayeredRule::PracticalComposition => "practical-composition",
            LayeredRule::OracleFallback => "oracle-fallback",
        }
    }
}

impl fmt::Display for LayeredRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which three-layer family a 2^a*p*q shape falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Fifteen,
    TwentyOne,
    None,
}

#[derive(Debug, Clone, Serialize)]
pub struct LayeredVerdict {
    pub n: Natural,
    pub k: u32,
    pub holds: bool,
    pub rule: LayeredRule,
    pub certificate: Option<DivisorPartition>,
}

fn verdict(
    n: Natural,
    k: u32,
    holds: bool,
    rule: LayeredRule,
    certificate: Option<DivisorPartition>,
) -> LayeredVerdict {
    debug_assert_eq!(holds, certificate.is_some());
    LayeredVerdict {
        n,
        k,
        holds,
        rule,
        certificate,
    }
}

/// Layer cap and family for n = 2^alpha * p * q with odd primes p < q.
/// Cap 3 comes with a family; cap 2 means no three-part split exists.
pub fn classify_2a_pq(alpha: u32, p: Natural, q: Natural) -> Result<(u32, Family)> {
    if alpha == 0 {
        return Err(Error::Domain("alpha must be at least 1".into()));
    }
    for v in [p, q] {
        if v.get() % 2 == 0 || !arith::is_prime(v.get()) {
            return Err(Error::Domain(format!("{v} is not an odd prime")));
        }
    }
    if p >= q {
        return Err(Error::Domain("primes must be given as p < q".into()));
    }
    if (p.get(), q.get()) == (3, 5) && alpha >= 3 {
        return Ok((3, Family::Fifteen));
    }
    if (p.get(), q.get()) == (3, 7) && alpha >= 5 && alpha % 2 == 1 {
        return Ok((3, Family::TwentyOne));
    }
    Ok((2, Family::None))
}

/// Three equal-sum parts for 15 * 2^alpha, alpha >= 3.
pub fn construct_3partition_fifteen(alpha: u32, budget: &Budget) -> Result<DivisorPartition> {
    if alpha < 3 {
        return Err(Error::Domain("the family starts at alpha = 3".into()));
    }
    if alpha > 59 {
        return Err(Error::Overflow("15 * 2^alpha"));
    }
    let n = 15u64 << alpha;
    if alpha == 3 {
        return DivisorPartition::from_parts(
            nat(n),
            vec![
                vec![1, 2, 4, 8, 15, 30, 60],
                vec![3, 5, 6, 10, 12, 20, 24, 40],
                vec![120],
            ],
            budget,
        );
    }
    let mut first = vec![n];
    for j in 0..=alpha - 4 {
        first.push(3 << j);
        first.push(5 << j);
    }
    let mut second = vec![1, 2, 4, 1 << alpha];
    for j in 0..alpha {
        second.push(15 << j);
    }
    let third = complement(nat(n), &[&first, &second], budget)?;
    DivisorPartition::from_parts(nat(n), vec![first, second, third], budget)
}

/// Three equal-sum parts for 21 * 2^alpha, odd alpha >= 5.
pub fn construct_3partition_twentyone(alpha: u32, budget: &Budget) -> Result<DivisorPartition> {
    if alpha < 5 || alpha.is_multiple_of(2) {
        return Err(Error::Domain("the family needs odd alpha >= 5".into()));
    }
    if alpha > 58 {
        return Err(Error::Overflow("21 * 2^alpha"));
    }
    let n = 21u64 << alpha;
    let mut first = vec![n];
    let mut j = 5;
    while j + 2 <= alpha {
        first.push(1 << j);
        j += 2;
    }
    let mut second = Vec::new();
    for j in (0..alpha).step_by(2) {
        for c in [1u64, 3, 7, 21] {
            second.push(c << j);
        }
    }
    let third = complement(nat(n), &[&first, &second], budget)?;
    DivisorPartition::from_parts(nat(n), vec![first, second, third], budget)
}

fn complement(n: Natural, used: &[&Vec<u64>], budget: &Budget) -> Result<Vec<u64>> {
    let d = arith::divisors(&arith::factorize(n), budget)?;
    Ok(d.values()
        .iter()
        .copied()
        .filter(|v| !used.iter().any(|part| part.contains(v)))
        .collect())
}

/// Multiplies a k-part split by a coprime factor w.
pub fn extend_layered_coprime(
    base: &DivisorPartition,
    w: Natural,
    budget: &Budget,
) -> Result<DivisorPartition> {
    if gcd_u64(base.n().get(), w.get()) != 1 {
        return Err(Error::Domain(format!(
            "{} and {w} share a factor",
            base.n()
        )));
    }
    let product = base
        .n()
        .get()
        .checked_mul(w.get())
        .filter(|&v| v <= arith::NATURAL_MAX)
        .ok_or(Error::Overflow("coprime product"))?;
    let wd = arith::divisors(&arith::factorize(w), budget)?;
    let parts: Vec<Vec<u64>> = base
        .parts()
        .iter()
        .map(|part| {
            part.iter()
                .flat_map(|&v| wd.values().iter().map(move |&d| v * d))
                .collect()
        })
        .collect();
    DivisorPartition::from_parts(nat(product), parts, budget)
}

/// For odd squarefree numbers with at most fifteen prime factors the divisor
/// sum stays under 3n, so three layers are impossible. True when the bound
/// applies.
pub fn squarefree_odd_bound(f: &Factorization) -> Result<bool> {
    if f.two_adic() > 0 || !f.is_squarefree() || f.num_primes() == 0 {
        return Err(Error::Domain(
            "the bound is about odd squarefree numbers".into(),
        ));
    }
    if f.num_primes() > 15 {
        return Ok(false);
    }
    let mut above: u128 = 1;
    let mut below: u128 = 1;
    for &(p, _) in f.factors() {
        above *= p.get() as u128 + 1;
        below *= p.get() as u128;
    }
    if above >= 3 * below {
        return Err(Error::Internal(
            "divisor-sum ratio reached 3 on an odd squarefree number".into(),
        ));
    }
    Ok(true)
}

/// nx is k-layered when n is practical, k | sigma(n), and coprime x splits
/// into k-1 equal-sum parts: one part takes a sigma(n)/k slice of n's
/// divisors times everything, the rest pair the leftover with x's parts.
pub fn practical_times_layered(
    n: Natural,
    x_cert: &DivisorPartition,
    k: u32,
    budget: &Budget,
) -> Result<DivisorPartition> {
    if k < 2 || x_cert.k() != k - 1 {
        return Err(Error::Domain(format!(
            "need a split into {} parts for {k} layers, got {}",
            k.max(2) - 1,
            x_cert.k()
        )));
    }
    let x = x_cert.n();
    if gcd_u64(n.get(), x.get()) != 1 {
        return Err(Error::Domain(format!("{n} and {x} share a factor")));
    }
    let f = arith::factorize(n);
    if !oracle::is_practical_fast(&f) {
        return Err(Error::Domain(format!("{n} is not practical")));
    }
    let (sigma, _) = arith::divisor_stats(&f)?;
    if sigma.get() % k as u64 != 0 {
        return Err(Error::Domain(format!(
            "{k} does not divide the divisor sum {sigma} of {n}"
        )));
    }
    let product = n
        .get()
        .checked_mul(x.get())
        .filter(|&v| v <= arith::NATURAL_MAX)
        .ok_or(Error::Overflow("practical product"))?;
    let nd = arith::divisors(&f, budget)?;
    let slice =
        oracle::subset_sum(nd.values(), sigma.get() / k as u64, budget)?.ok_or_else(|| {
            Error::Internal(format!("practical {n} missing a sigma/{k} divisor subset"))
        })?;
    let in_slice: Vec<u64> = slice.values().to_vec();
    let rest: Vec<u64> = nd
        .values()
        .iter()
        .enumerate()
        .filter(|(i, _)| !slice.indices().contains(i))
        .map(|(_, &v)| v)
        .collect();
    let xd = arith::divisors(&arith::factorize(x), budget)?;
    let mut parts = Vec::with_capacity(k as usize);
    parts.push(
        in_slice
            .iter()
            .flat_map(|&a| xd.values().iter().map(move |&d| a * d))
            .collect::<Vec<u64>>(),
    );
    for xpart in x_cert.parts() {
        parts.push(
            rest.iter()
                .flat_map(|&a| xpart.iter().map(move |&d| a * d))
                .collect(),
        );
    }
    DivisorPartition::from_parts(nat(product), parts, budget)
}

/// Three-layer case of the practical composition.
pub fn practical_times_zumkeller(
    n: Natural,
    x_cert: &DivisorPartition,
    budget: &Budget,
) -> Result<DivisorPartition> {
    practical_times_layered(n, x_cert, 3, budget)
}

fn prefix_composition(
    n: Natural,
    k: u32,
    f: &Factorization,
    budget: &Budget,
) -> Result<Option<DivisorPartition>> {
    let fac = f.factors();
    if fac.is_empty() || fac[0].0.get() != 2 {
        return Ok(None);
    }
    for j in (1..fac.len()).rev() {
        let mut m = 1u64;
        for &(p, e) in &fac[..j] {
            for _ in 0..e {
                m *= p.get();
            }
        }
        let mf = arith::factorize(nat(m));
        if !oracle::is_practical_fast(&mf) {
            continue;
        }
        let (msigma, _) = arith::divisor_stats(&mf)?;
        if msigma.get() % k as u64 != 0 {
            continue;
        }
        let x = nat(n.get() / m);
        let x_cert = if k == 2 {
            oracle::k_partition(x, 1, budget)?
        } else {
            is_k_layered(x, k - 1, budget)?.certificate
        };
        if let Some(cert) = x_cert {
            return Ok(Some(practical_times_layered(nat(m), &cert, k, budget)?));
        }
    }
    Ok(None)
}

/// Classifies (n, k), preferring structural rules over search; k >= 2.
pub fn is_k_layered(n: Natural, k: u32, budget: &Budget) -> Result<LayeredVerdict> {
    if k < 2 {
        return Err(Error::Domain("layering asks for k >= 2".into()));
    }
    let f = arith::factorize(n);
    let fac = f.factors();
    let r = fac.len();
    let alpha = f.two_adic();
    if k >= 3 {
        if r == 1 {
            return Ok(verdict(n, k, false, LayeredRule::PrimePowerNever, None));
        }
        if r == 2 {
            return Ok(verdict(n, k, false, LayeredRule::TwoPrimeNever, None));
        }
        if r == 3 && alpha >= 1 && fac[1].1 == 1 && fac[2].1 == 1 {
            if k > 3 {
                return Ok(verdict(
                    n,
                    k,
                    false,
                    LayeredRule::ThreeFactorClassification,
                    None,
                ));
            }
            let (_, family) = classify_2a_pq(alpha, fac[1].0, fac[2].0)?;
            let cert = match family {
                Family::Fifteen => Some(construct_3partition_fifteen(alpha, budget)?),
                Family::TwentyOne => Some(construct_3partition_twentyone(alpha, budget)?),
                Family::None => None,
            };
            return Ok(verdict(
                n,
                k,
                cert.is_some(),
                LayeredRule::ThreeFactorClassification,
                cert,
            ));
        }
        if alpha == 0 && r >= 1 && f.is_squarefree() && r <= 15 {
            let applies = squarefree_odd_bound(&f)?;
            debug_assert!(applies);
            return Ok(verdict(n, k, false, LayeredRule::SquarefreeOddBound, None));
        }
    } else if r == 2 && fac[0].0.get() % 2 == 1 {
        return Ok(verdict(n, k, false, LayeredRule::TwoPrimeNever, None));
    }
    let (sigma, _) = arith::divisor_stats(&f)?;
    if sigma.get() % k as u64 != 0 {
        return Ok(verdict(n, k, false, LayeredRule::DivisibilityFail, None));
    }
    if (sigma.get() as u128) < k as u128 * n.get() as u128 {
        return Ok(verdict(n, k, false, LayeredRule::SumTooSmall, None));
    }
    if k == 3 && r >= 4 {
        if alpha >= 3 && f.exponent_of(3) == 1 && f.exponent_of(5) == 1 {
            let base = construct_3partition_fifteen(alpha, budget)?;
            let w = nat(n.get() / base.n().get());
            let cert = extend_layered_coprime(&base, w, budget)?;
            return Ok(verdict(n, k, true, LayeredRule::CoprimeClosure, Some(cert)));
        }
        if alpha >= 5 && alpha % 2 == 1 && f.exponent_of(3) == 1 && f.exponent_of(7) == 1 {
            let base = construct_3partition_twentyone(alpha, budget)?;
            let w = nat(n.get() / base.n().get());
            let cert = extend_layered_coprime(&base, w, budget)?;
            return Ok(verdict(n, k, true, LayeredRule::CoprimeClosure, Some(cert)));
        }
    }
    if k == 2 && alpha >= 1 && r >= 2 {
        let bound = (1u64 << (alpha + 1)) - 1;
        for &(p, beta) in &fac[1..] {
            if beta % 2 == 1 && p.get() <= bound {
                let unit = if beta == 1 {
                    crate::zumkeller::construct_partition_2a_p(alpha, p, budget)?
                } else {
                    crate::zumkeller::construct_partition_2a_p_beta(alpha, p, beta, budget)?
                };
                let w = nat(n.get() / unit.n().get());
                let cert = extend_layered_coprime(&unit, w, budget)?;
                return Ok(verdict(n, k, true, LayeredRule::CoprimeClosure, Some(cert)));
            }
        }
    }
    if let Some(cert) = prefix_composition(n, k, &f, budget)? {
        return Ok(verdict(
            n,
            k,
            true,
            LayeredRule::PracticalComposition,
            Some(cert),
        ));
    }
    let (holds, cert) = oracle::is_k_layered_oracle(n, k, budget)?;
    Ok(verdict(n, k, holds, LayeredRule::OracleFallback, cert))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> Natural {
        Natural::new(v).unwrap()
    }

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn shape_classification() {
        assert_eq!(classify_2a_pq(3, n(3), n(5)).unwrap(), (3, Family::Fifteen));
        assert_eq!(
            classify_2a_pq(5, n(3), n(7)).unwrap(),
            (3, Family::TwentyOne)
        );
        assert_eq!(classify_2a_pq(4, n(3), n(7)).unwrap(), (2, Family::None));
        assert_eq!(classify_2a_pq(2, n(3), n(5)).unwrap(), (2, Family::None));
        assert_eq!(classify_2a_pq(6, n(5), n(7)).unwrap(), (2, Family::None));
        assert!(classify_2a_pq(3, n(5), n(3)).is_err());
        assert!(classify_2a_pq(0, n(3), n(5)).is_err());
        assert!(classify_2a_pq(3, n(3), n(9)).is_err());
    }

    #[test]
    fn fifteen_family_partitions() {
        let p = construct_3partition_fifteen(3, &b()).unwrap();
        assert_eq!(
            p.parts(),
            &[
                vec![120],
                vec![1, 2, 4, 8, 15, 30, 60],
                vec![3, 5, 6, 10, 12, 20, 24, 40],
            ]
        );
        assert_eq!(p.part_sum(), 120);
        for alpha in 4..=12 {
            let p = construct_3partition_fifteen(alpha, &b()).unwrap();
            assert_eq!(p.n().get(), 15 << alpha);
            p.validate(&b()).unwrap();
        }
        assert!(construct_3partition_fifteen(2, &b()).is_err());
    }

    #[test]
    fn twentyone_family_partitions() {
        let p = construct_3partition_twentyone(5, &b()).unwrap();
        assert_eq!(p.n().get(), 672);
        assert_eq!(p.part_sum(), 672);
        assert!(p.parts().iter().any(|part| part == &vec![672]));
        let p = construct_3partition_twentyone(7, &b()).unwrap();
        assert_eq!(p.n().get(), 2688);
        assert_eq!(p.part_sum(), 2720);
        assert!(p.parts().iter().any(|part| part == &vec![32, 2688]));
        for alpha in [9u32, 11, 13] {
            construct_3partition_twentyone(alpha, &b())
                .unwrap()
                .validate(&b())
                .unwrap();
        }
        assert!(construct_3partition_twentyone(6, &b()).is_err());
        assert!(construct_3partition_twentyone(3, &b()).is_err());
    }

    #[test]
    fn coprime_extension_for_layers() {
        let base = construct_3partition_fifteen(3, &b()).unwrap();
        let ext = extend_layered_coprime(&base, n(7), &b()).unwrap();
        assert_eq!(ext.n().get(), 840);
        assert_eq!(ext.k(), 3);
        ext.validate(&b()).unwrap();
        assert!(extend_layered_coprime(&base, n(10), &b()).is_err());
    }

    #[test]
    fn squarefree_bound() {
        assert!(squarefree_odd_bound(&arith::factorize(n(105))).unwrap());
        assert!(squarefree_odd_bound(&arith::factorize(n(3 * 5 * 7 * 11 * 13))).unwrap());
        assert!(squarefree_odd_bound(&arith::factorize(n(45))).is_err());
        assert!(squarefree_odd_bound(&arith::factorize(n(30))).is_err());
        assert!(squarefree_odd_bound(&arith::factorize(n(1))).is_err());
    }

    #[test]
    fn practical_composition_products() {
        let x945 = crate::zumkeller::is_zumkeller(n(945), &b())
            .unwrap()
            .certificate
            .unwrap();
        for (m, product) in [
            (2u64, 1890u64),
            (8, 7560),
            (32, 30240),
            (88, 83160),
            (104, 98280),
        ] {
            let part = practical_times_zumkeller(n(m), &x945, &b()).unwrap();
            assert_eq!(part.n().get(), product, "m = {m}");
            assert_eq!(part.k(), 3);
            part.validate(&b()).unwrap();
        }
        assert!(practical_times_zumkeller(n(10), &x945, &b()).is_err());
        assert!(practical_times_zumkeller(n(4), &x945, &b()).is_err());
        assert!(practical_times_zumkeller(n(3), &x945, &b()).is_err());
    }

    #[test]
    fn practical_composition_k4_has_no_small_instances() {
        let x120 = is_k_layered(n(120), 3, &b()).unwrap().certificate.unwrap();
        assert!(practical_times_layered(n(12), &x120, 4, &b()).is_err());
        assert!(practical_times_layered(n(2), &x120, 4, &b()).is_err());
    }

    #[test]
    fn dispatcher_rules() {
        let cases: &[(u64, u32, bool, LayeredRule)] = &[
            (120, 3, true, LayeredRule::ThreeFactorClassification),
            (672, 3, true, LayeredRule::ThreeFactorClassification),
            (30, 3, false, LayeredRule::ThreeFactorClassification),
            (120, 4, false, LayeredRule::ThreeFactorClassification),
            (25, 3, false, LayeredRule::PrimePowerNever),
            (15, 3, false, LayeredRule::TwoPrimeNever),
            (15, 2, false, LayeredRule::TwoPrimeNever),
            (105, 3, false, LayeredRule::SquarefreeOddBound),
            (945, 3, false, LayeredRule::SumTooSmall),
            (210, 3, false, LayeredRule::SumTooSmall),
            (48, 3, false, LayeredRule::TwoPrimeNever),
            (1320, 3, true, LayeredRule::CoprimeClosure),
            (7392, 3, true, LayeredRule::CoprimeClosure),
            (1890, 3, true, LayeredRule::PracticalComposition),
            (27720, 4, true, LayeredRule::OracleFallback),
            (6, 2, true, LayeredRule::CoprimeClosure),
            (630, 2, true, LayeredRule::PracticalComposition),
            (945, 2, true, LayeredRule::OracleFallback),
            (1, 3, false, LayeredRule::DivisibilityFail),
        ];
        for &(value, k, holds, rule) in cases {
            let v = is_k_layered(n(value), k, &b()).unwrap();
            assert_eq!(v.holds, holds, "n = {value}, k = {k}");
            assert_eq!(v.rule, rule, "n = {value}, k = {k}");
            if let Some(cert) = v.certificate {
                assert_eq!(cert.k(), k);
                assert_eq!(cert.n().get(), value);
                cert.validate(&b()).unwrap();
            } else {
                assert!(!v.holds);
            }
        }
        assert!(is_k_layered(n(6), 1, &b()).is_err());
    }
}
