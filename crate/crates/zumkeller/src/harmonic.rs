//! Harmonic-mean views of the divisor structure.

use crate::arith::{self, Natural, Rational};
use crate::{Budget, Error, Result};
use serde::Serialize;
use std::cmp::Ordering;

/// H(n) against the layer bounds tau/k.
#[derive(Debug, Clone, Serialize)]
pub struct HarmonicReport {
    pub n: Natural,
    pub h: Rational,
    pub tau: u64,
    pub bound_half_tau: bool,
    pub layer_bounds: Vec<(u32, bool)>,
}

pub fn harmonic_report(n: Natural, k_max: u32) -> Result<HarmonicReport> {
    let f = arith::factorize(n);
    let (_, tau) = arith::divisor_stats(&f)?;
    let h = arith::harmonic_mean(n)?;
    let within = |k: u32| h.cmp_ratio(tau.get(), k as u64) != Ordering::Greater;
    Ok(HarmonicReport {
        n,
        h,
        tau: tau.get(),
        bound_half_tau: within(2),
        layer_bounds: (2..=k_max).map(|k| (k, within(k))).collect(),
    })
}

/// The harmonic form of the 2^alpha * p criterion: H(n) <= tau(n)/2.
pub fn zumkeller_iff_harmonic_2a_p(alpha: u32, p: Natural) -> Result<bool> {
    if alpha == 0 {
        return Err(Error::Domain("alpha must be at least 1".into()));
    }
    if p.get().is_multiple_of(2) || !arith::is_prime(p.get()) {
        return Err(Error::Domain(format!("{p} is not an odd prime")));
    }
    let n = (1u64 << alpha.min(62))
        .checked_mul(p.get())
        .filter(|&v| v <= arith::NATURAL_MAX && alpha < 63)
        .ok_or(Error::Overflow("2^alpha * p"))?;
    let report = harmonic_report(Natural::new(n)?, 2)?;
    Ok(report.bound_half_tau)
}

/// H of a Mersenne prime 2^h - 1: exactly (2^h - 1) / 2^(h-1), just under 2.
pub fn mersenne_harmonic(h: u32) -> Result<Rational> {
    if !(2..=63).contains(&h) {
        return Err(Error::Domain("need 2 <= h <= 63".into()));
    }
    let m = (1u64 << h) - 1;
    if !arith::is_prime(m) {
        return Err(Error::Domain(format!("2^{h} - 1 = {m} is not prime")));
    }
    let value = Rational::new(m as u128, 1u128 << (h - 1))?;
    debug_assert_eq!(value, arith::harmonic_mean(arith::nat(m))?);
    debug_assert_eq!(value.cmp_ratio(2, 1), Ordering::Less);
    Ok(value)
}

/// Even n with integral H are perfect exactly when n = 2^(H-1) * (2^H - 1).
pub fn laborde_check(n: Natural) -> Result<bool> {
    if n.get() % 2 == 1 {
        return Ok(false);
    }
    let h = match arith::harmonic_mean(n)?.integer_value() {
        Some(h) => h,
        None => return Ok(false),
    };
    if h == 0 || h > 63 {
        return Ok(false);
    }
    let expected = (1u128 << (h - 1)) * ((1u128 << h) - 1);
    Ok(n.get() as u128 == expected)
}

/// For n = 2^alpha * (2^(alpha+1) - 1), demands n splits and compares
/// H(n) against 2^(2*alpha+1).
pub fn zumkeller_mersenne_bound(alpha: u32, budget: &Budget) -> Result<bool> {
    if alpha == 0 {
        return Err(Error::Domain("alpha must be at least 1".into()));
    }
    if alpha > 31 {
        return Err(Error::Overflow("2^alpha * (2^(alpha+1) - 1)"));
    }
    let n = Natural::new((1u64 << alpha) * ((1u64 << (alpha + 1)) - 1))?;
    let v = crate::zumkeller::is_zumkeller(n, budget)?;
    if !v.is_zumkeller {
        return Err(Error::Domain(format!("{n} does not split into two halves")));
    }
    let h = arith::harmonic_mean(n)?;
    Ok(h.cmp_ratio(1u64 << (2 * alpha + 1), 1) == Ordering::Less)
}
