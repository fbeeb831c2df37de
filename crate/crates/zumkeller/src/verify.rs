//! Sweep harness: per-number classification records, a registry of named
//! structural checks with counterexample reporting, sequence enumeration,
//! and comparison against reference term files.

use crate::arith::{
    self, binary_expansion, divisor_stats, divisors, factorize, nat, Natural, Rational,
};
use crate::layered::{self, construct_3partition_fifteen, construct_3partition_twentyone};
use crate::oracle::{self, is_k_layered_oracle, is_zumkeller_oracle, k_partition};
use crate::zumkeller::{self, ZumkellerRule};
use crate::{Budget, Error, Result};
use serde::Serialize;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

/// Largest k for which the divisors split, or a marker that the search
/// outgrew its budget cap before settling the question.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "k", rename_all = "kebab-case")]
pub enum LayerCount {
    Exact(u32),
    BudgetExceeded,
}

impl fmt::Display for LayerCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LayerCount::Exact(k) => write!(f, "{k}"),
            LayerCount::BudgetExceeded => write!(f, "?"),
        }
    }
}

/// Everything the scan reports about one number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationRecord {
    pub n: u64,
    pub factors: Vec<(u64, u32)>,
    pub sigma: u64,
    pub tau: u64,
    pub harmonic_mean: Rational,
    pub is_zumkeller: bool,
    pub rule_used: &'static str,
    pub is_half_zumkeller: bool,
    pub is_practical: bool,
    pub is_perfect: bool,
    pub is_harmonic: bool,
    pub max_layers: LayerCount,
}

impl ClassificationRecord {
    pub fn tsv_header() -> &'static str {
        "n\tfactors\tsigma\ttau\th\tzumkeller\trule\thalf_zumkeller\tpractical\tperfect\tharmonic\tmax_layers"
    }

    pub fn tsv_row(&self) -> String {
        let factors = self
            .factors
            .iter()
            .map(|&(p, a)| {
                if a == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{a}")
                }
            })
            .collect::<Vec<_>>()
            .join("*");
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.n,
            factors,
            self.sigma,
            self.tau,
            self.harmonic_mean,
            self.is_zumkeller,
            self.rule_used,
            self.is_half_zumkeller,
            self.is_practical,
            self.is_perfect,
            self.is_harmonic,
            self.max_layers,
        )
    }
}

/// Full classification of a single number.
///
/// `max_layers` degrades to [`LayerCount::BudgetExceeded`] when the layer
/// search outgrows the budget; the boolean fields never degrade, so numbers
/// whose half-split test alone exceeds the budget fail with
/// [`Error::InstanceTooLarge`].
pub fn classify(n: Natural, budget: &Budget) -> Result<ClassificationRecord> {
    let f = factorize(n);
    let (sigma, tau) = divisor_stats(&f)?;
    let h = Rational::new(n.get() as u128 * tau.get() as u128, sigma.get() as u128)?;
    let perfect = sigma.get() as u128 == 2 * n.get() as u128;
    let harmonic = (n.get() as u128 * tau.get() as u128).is_multiple_of(sigma.get() as u128);
    let zk = zumkeller::is_zumkeller(n, budget)?;
    let half = oracle::is_half_zumkeller(n, budget)?;
    let practical = oracle::is_practical_fast(&f);
    let max_layers = match oracle::max_layers(n, budget) {
        Ok(k) => LayerCount::Exact(k),
        Err(Error::InstanceTooLarge { .. }) => LayerCount::BudgetExceeded,
        Err(e) => return Err(e),
    };
    Ok(ClassificationRecord {
        n: n.get(),
        factors: f.factors().iter().map(|&(p, a)| (p.get(), a)).collect(),
        sigma: sigma.get(),
        tau: tau.get(),
        harmonic_mean: h,
        is_zumkeller: zk.is_zumkeller,
        rule_used: zk.rule.as_str(),
        is_half_zumkeller: half,
        is_practical: practical,
        is_perfect: perfect,
        is_harmonic: harmonic,
        max_layers,
    })
}

/// Classify every n in lo..=hi, fanning the range out over worker threads.
///
/// Records come back in ascending order of n and are byte-identical no
/// matter how many workers ran.
pub fn scan(
    lo: Natural,
    hi: Natural,
    workers: usize,
    budget: &Budget,
) -> Result<Vec<ClassificationRecord>> {
    if lo > hi {
        return Err(Error::Domain(format!("empty range {lo}..={hi}")));
    }
    if workers == 0 {
        return Err(Error::Domain("worker count must be positive".into()));
    }
    let span = hi.get() - lo.get() + 1;
    let w = workers.min(span.min(usize::MAX as u64) as usize);
    let chunk = span.div_ceil(w as u64);
    let mut partials: Vec<Result<Vec<ClassificationRecord>>> = Vec::with_capacity(w);
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..w as u64)
            .map(|i| {
                let start = lo.get() + i * chunk;
                let end = start.saturating_add(chunk - 1).min(hi.get());
                s.spawn(move || {
                    if start > end {
                        return Ok(Vec::new());
                    }
                    (start..=end).map(|v| classify(nat(v), budget)).collect()
                })
            })
            .collect();
        for h in handles {
            partials.push(h.join().expect("scan worker panicked"));
        }
    });
    let mut out = Vec::with_capacity(span as usize);
    for part in partials {
        out.extend(part?);
    }
    Ok(out)
}

/// Which integer sequence to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceId {
    Zumkeller,
    Practical,
    HalfZumkeller,
    Layered(u32),
}

impl FromStr for SequenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<SequenceId> {
        match s {
            "zumkeller" => Ok(SequenceId::Zumkeller),
            "practical" => Ok(SequenceId::Practical),
            "half-zumkeller" => Ok(SequenceId::HalfZumkeller),
            _ => s
                .strip_prefix("layered-")
                .and_then(|k| k.parse::<u32>().ok())
                .filter(|&k| k >= 2)
                .map(SequenceId::Layered)
                .ok_or_else(|| Error::UnknownId(s.to_string())),
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceId::Zumkeller => write!(f, "zumkeller"),
            SequenceId::Practical => write!(f, "practical"),
            SequenceId::HalfZumkeller => write!(f, "half-zumkeller"),
            SequenceId::Layered(k) => write!(f, "layered-{k}"),
        }
    }
}

/// Enumerated terms, possibly cut short by the budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceResult {
    pub id: String,
    pub terms: Vec<u64>,
    /// First candidate whose membership test exceeded the budget, if the
    /// enumeration stopped early because of it.
    pub truncated_at: Option<u64>,
}

fn sequence_member(id: SequenceId, v: Natural, budget: &Budget) -> Result<bool> {
    match id {
        SequenceId::Zumkeller => Ok(zumkeller::is_zumkeller(v, budget)?.is_zumkeller),
        SequenceId::Practical => oracle::is_practical(v, budget),
        SequenceId::HalfZumkeller => oracle::is_half_zumkeller(v, budget),
        SequenceId::Layered(k) => Ok(layered::is_k_layered(v, k, budget)?.holds),
    }
}

/// First `count` members of the sequence, in order, starting from 1.
pub fn sequence(id: SequenceId, count: usize, budget: &Budget) -> Result<SequenceResult> {
    let mut terms = Vec::with_capacity(count);
    let mut v = 1u64;
    while terms.len() < count {
        if v > arith::NATURAL_MAX {
            return Err(Error::Overflow("sequence candidate exceeds 2^63-1"));
        }
        match sequence_member(id, nat(v), budget) {
            Ok(true) => terms.push(v),
            Ok(false) => {}
            Err(Error::InstanceTooLarge { .. }) => {
                return Ok(SequenceResult {
                    id: id.to_string(),
                    terms,
                    truncated_at: Some(v),
                })
            }
            Err(e) => return Err(e),
        }
        v += 1;
    }
    Ok(SequenceResult {
        id: id.to_string(),
        terms,
        truncated_at: None,
    })
}

/// First mismatch between a reference term file and our enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BfileDivergence {
    /// Index as printed in the file, not our 1-based position.
    pub index: u64,
    pub file_value: u64,
    pub computed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BfileComparison {
    pub id: String,
    pub lines_compared: u64,
    pub divergence: Option<BfileDivergence>,
}

/// Parse an "index value" term file ('#' comments and blank lines allowed)
/// and compare it against our enumeration of the same sequence.
///
/// Stops at the first mismatch. If our enumeration hits its budget before
/// the file runs out, only the computed prefix is compared.
pub fn compare_bfile(id: SequenceId, path: &Path, budget: &Budget) -> Result<BfileComparison> {
    let content = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("{}: {e}", path.display()),
    })?;
    let mut entries: Vec<(u64, u64)> = Vec::new();
    for (i, raw) in content.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let (Some(a), Some(b)) = (it.next(), it.next()) else {
            return Err(Error::Parse {
                line: i + 1,
                msg: "expected an index and a value".to_string(),
            });
        };
        if it.next().is_some() {
            return Err(Error::Parse {
                line: i + 1,
                msg: "trailing tokens after the value".to_string(),
            });
        }
        let index: u64 = a.parse().map_err(|e| Error::Parse {
            line: i + 1,
            msg: format!("bad index {a:?}: {e}"),
        })?;
        let value: u64 = b.parse().map_err(|e| Error::Parse {
            line: i + 1,
            msg: format!("bad value {b:?}: {e}"),
        })?;
        entries.push((index, value));
    }
    let ours = sequence(id, entries.len(), budget)?;
    for (pos, (&(index, file_value), &computed)) in entries.iter().zip(&ours.terms).enumerate() {
        if file_value != computed {
            return Ok(BfileComparison {
                id: id.to_string(),
                lines_compared: pos as u64,
                divergence: Some(BfileDivergence {
                    index,
                    file_value,
                    computed,
                }),
            });
        }
    }
    Ok(BfileComparison {
        id: id.to_string(),
        lines_compared: ours.terms.len() as u64,
        divergence: None,
    })
}

/// Sweep ranges for one registered check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VerifyParams {
    pub lo: u64,
    pub hi: u64,
    pub alpha_max: u32,
    pub p_max: u64,
    pub beta_max: u32,
}

/// Caller-supplied replacements for a check's default ranges.
#[derive(Debug, Clone, Copy, Default)]
pub struct ParamOverrides {
    pub lo: Option<u64>,
    pub hi: Option<u64>,
    pub alpha_max: Option<u32>,
    pub p_max: Option<u64>,
    pub beta_max: Option<u32>,
}

impl ParamOverrides {
    fn apply(&self, d: VerifyParams) -> VerifyParams {
        VerifyParams {
            lo: self.lo.unwrap_or(d.lo),
            hi: self.hi.unwrap_or(d.hi),
            alpha_max: self.alpha_max.unwrap_or(d.alpha_max),
            p_max: self.p_max.unwrap_or(d.p_max),
            beta_max: self.beta_max.unwrap_or(d.beta_max),
        }
    }
}

type Runner = fn(&VerifyParams, &Budget) -> Result<(u64, Vec<String>)>;

/// One registered structural check.
pub struct TheoremCheck {
    pub id: &'static str,
    pub alias: Option<&'static str>,
    pub summary: &'static str,
    pub defaults: VerifyParams,
    runner: Runner,
}

/// Outcome of running one check over its ranges.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub id: &'static str,
    pub alias: Option<&'static str>,
    pub summary: &'static str,
    pub params: VerifyParams,
    pub instances: u64,
    pub counterexamples: Vec<String>,
    pub passed: bool,
    pub millis: u64,
}

impl TheoremReport {
    pub fn tsv_header() -> &'static str {
        "id\tpassed\tinstances\tcounterexamples\tmillis"
    }

    pub fn tsv_row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.id,
            self.passed,
            self.instances,
            self.counterexamples.len(),
            self.millis
        )
    }
}

const COUNTEREXAMPLE_CAP: usize = 8;

fn note(list: &mut Vec<String>, msg: String) {
    if list.len() < COUNTEREXAMPLE_CAP {
        list.push(msg);
    }
}

pub fn checks() -> &'static [TheoremCheck] {
    &CHECKS
}

pub fn theorem_ids() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.id).collect()
}

pub fn find_check(id: &str) -> Option<&'static TheoremCheck> {
    CHECKS.iter().find(|c| c.id == id || c.alias == Some(id))
}

/// Run a registered check by id or alias.
pub fn run_theorem(id: &str, overrides: &ParamOverrides, budget: &Budget) -> Result<TheoremReport> {
    let check = find_check(id).ok_or_else(|| Error::UnknownId(id.to_string()))?;
    let params = overrides.apply(check.defaults);
    let started = Instant::now();
    let (instances, counterexamples) = (check.runner)(&params, budget)?;
    let millis = started.elapsed().as_millis().min(u64::MAX as u128) as u64;
    Ok(TheoremReport {
        id: check.id,
        alias: check.alias,
        summary: check.summary,
        params,
        instances,
        passed: counterexamples.is_empty(),
        counterexamples,
        millis,
    })
}

const fn p(lo: u64, hi: u64, alpha_max: u32, p_max: u64, beta_max: u32) -> VerifyParams {
    VerifyParams {
        lo,
        hi,
        alpha_max,
        p_max,
        beta_max,
    }
}

static CHECKS: [TheoremCheck; 33] = [
    TheoremCheck {
        id: "divisor-identities",
        alias: None,
        summary: "enumerated divisors agree with the multiplicative sigma and tau, and h(n) > 1 for n >= 2",
        defaults: p(1, 20_000, 0, 0, 0),
        runner: run_divisor_identities,
    },
    TheoremCheck {
        id: "binary-expansion",
        alias: None,
        summary: "the power-of-two expansion of an odd v >= 3 reconstructs v with ascending positive exponents",
        defaults: p(3, 1_000_000, 0, 0, 0),
        runner: run_binary_expansion,
    },
    TheoremCheck {
        id: "two-way-criterion",
        alias: None,
        summary: "the equal-half witness oracle and the complete 2-part search agree",
        defaults: p(1, 3_000, 0, 0, 0),
        runner: run_two_way_criterion,
    },
    TheoremCheck {
        id: "odd-two-primes",
        alias: None,
        summary: "no odd number with exactly two prime factors splits into equal halves",
        defaults: p(3, 100_000, 0, 0, 0),
        runner: run_odd_two_primes,
    },
    TheoremCheck {
        id: "two-power-prime",
        alias: Some("thm-2.2"),
        summary: "2^a*p splits iff a >= the top exponent in the expansion of p, matching the oracle",
        defaults: p(1, 0, 12, 10_000, 0),
        runner: run_two_power_prime,
    },
    TheoremCheck {
        id: "two-power-prime-sigma",
        alias: Some("thm-2.3"),
        summary: "for 2^a*p the expansion rule coincides with sigma(n) >= 2n",
        defaults: p(1, 0, 19, 1 << 20, 0),
        runner: run_two_power_prime_sigma,
    },
    TheoremCheck {
        id: "adjacent-power-prime",
        alias: None,
        summary: "2^a*p always splits when 2^a < p < 2^(a+1)",
        defaults: p(1, 0, 16, 0, 0),
        runner: run_adjacent_power_prime,
    },
    TheoremCheck {
        id: "two-power-prime-power",
        alias: Some("thm-2.7"),
        summary: "2^a*p^b splits iff b is odd and p <= 2^(a+1)-1, matching the oracle",
        defaults: p(1, 0, 8, 200, 7),
        runner: run_two_power_prime_power,
    },
    TheoremCheck {
        id: "odd-power-lift",
        alias: None,
        summary: "for odd b, 2^a*p^b splits exactly when 2^a*p does",
        defaults: p(1, 0, 8, 200, 9),
        runner: run_odd_power_lift,
    },
    TheoremCheck {
        id: "euclid-euler-split",
        alias: None,
        summary: "even perfect numbers have integer h equal to the top exponent and split as {n} vs proper divisors",
        defaults: p(1, 0, 13, 0, 0),
        runner: run_euclid_euler,
    },
    TheoremCheck {
        id: "coprime-closure",
        alias: None,
        summary: "a splitting number times a coprime factor still splits, by multiplying parts through",
        defaults: p(1, 2_000, 0, 50, 0),
        runner: run_coprime_closure,
    },
    TheoremCheck {
        id: "prime-index-bound",
        alias: None,
        summary: "the i-th prime stays below 2^i",
        defaults: p(2, 3_000, 0, 0, 0),
        runner: run_prime_index_bound,
    },
    TheoremCheck {
        id: "indexed-two-power-prime",
        alias: None,
        summary: "2^i * p_i splits for every prime index i >= 2",
        defaults: p(2, 0, 50, 0, 0),
        runner: run_indexed_two_power,
    },
    TheoremCheck {
        id: "three-factor-families",
        alias: Some("thm-3.3"),
        summary: "2^a*p*q reaches three layers exactly on the 15*2^a (a>=3) and 21*2^a (odd a>=5) families, and never four",
        defaults: p(1, 1_000_000, 0, 0, 0),
        runner: run_three_factor_families,
    },
    TheoremCheck {
        id: "smallest-three-layered",
        alias: None,
        summary: "120 is the first number whose divisors split into three equal parts",
        defaults: p(1, 120, 0, 0, 0),
        runner: run_smallest_three_layered,
    },
    TheoremCheck {
        id: "layered-coprime-closure",
        alias: None,
        summary: "three-layer splits of both families survive multiplication by a coprime factor",
        defaults: p(1, 0, 0, 50, 0),
        runner: run_layered_coprime_closure,
    },
    TheoremCheck {
        id: "squarefree-odd-never-three",
        alias: Some("thm-3.6"),
        summary: "odd squarefree numbers with at most 15 prime factors never reach three layers",
        defaults: p(3, 100_000, 0, 0, 0),
        runner: run_squarefree_odd_never_three,
    },
    TheoremCheck {
        id: "practical-deficiency",
        alias: None,
        summary: "practical numbers satisfy sigma(n) >= 2n-1",
        defaults: p(1, 10_000, 0, 0, 0),
        runner: run_practical_deficiency,
    },
    TheoremCheck {
        id: "practical-subset-range",
        alias: None,
        summary: "divisor subset sums of a practical number cover every target up to sigma(n)",
        defaults: p(1, 2_000, 0, 0, 0),
        runner: run_practical_subset_range,
    },
    TheoremCheck {
        id: "even-layered-implies-zumkeller",
        alias: None,
        summary: "reaching an even layer count k >= 4 implies an equal-half split",
        defaults: p(1, 30_000, 0, 0, 0),
        runner: run_even_layered,
    },
    TheoremCheck {
        id: "practical-zumkeller-product",
        alias: Some("thm-3.9"),
        summary: "a practical number with 3 | sigma times a coprime splitting number is three-layered",
        defaults: p(1, 120, 0, 0, 0),
        runner: run_practical_zumkeller_product,
    },
    TheoremCheck {
        id: "practical-layered-product",
        alias: None,
        summary: "the k-layer product construction matches its k=3 special case and rejects bad inputs",
        defaults: p(1, 0, 0, 0, 0),
        runner: run_practical_layered_product,
    },
    TheoremCheck {
        id: "harmonic-layer-bounds",
        alias: None,
        summary: "k-layered numbers have harmonic mean at most tau/k",
        defaults: p(1, 20_000, 0, 0, 0),
        runner: run_harmonic_layer_bounds,
    },
    TheoremCheck {
        id: "harmonic-two-power-prime",
        alias: Some("cor-4.4"),
        summary: "for 2^a*p the harmonic bound h <= tau/2 is equivalent to the expansion rule",
        defaults: p(1, 1_000_000, 0, 0, 0),
        runner: run_harmonic_two_power_prime,
    },
    TheoremCheck {
        id: "semiprime-zumkeller-only-six",
        alias: None,
        summary: "6 is the only squarefree semiprime that splits",
        defaults: p(1, 10_000, 0, 0, 0),
        runner: run_semiprime,
    },
    TheoremCheck {
        id: "harmonic-mean-monotone",
        alias: None,
        summary: "with 2^a fixed, h(2^a*p) grows strictly with the odd prime p",
        defaults: p(1, 0, 6, 1_000, 0),
        runner: run_harmonic_monotone,
    },
    TheoremCheck {
        id: "mersenne-harmonic-under-two",
        alias: None,
        summary: "Mersenne primes have harmonic mean M/2^(h-1), always below 2",
        defaults: p(1, 0, 31, 0, 0),
        runner: run_mersenne_harmonic,
    },
    TheoremCheck {
        id: "integral-harmonic-perfect-form",
        alias: None,
        summary: "an even number with integer harmonic mean h equal to 2^(h-1)*(2^h-1) is exactly a perfect number",
        defaults: p(2, 100_000, 0, 0, 0),
        runner: run_integral_harmonic_perfect,
    },
    TheoremCheck {
        id: "prime-bound-audit",
        alias: Some("thm-4.8"),
        summary: "odd splitting numbers with >= 4 prime factors obey the small-prime bound table",
        defaults: p(3, 100_000, 0, 0, 0),
        runner: run_prime_bound_audit,
    },
    TheoremCheck {
        id: "window-contains-zumkeller",
        alias: None,
        summary: "every run of 12 consecutive numbers contains a splitting one, found at the predicted witness",
        defaults: p(1, 100_000, 0, 0, 0),
        runner: run_window,
    },
    TheoremCheck {
        id: "dense-run-boundary",
        alias: None,
        summary: "282 splits, 283..=293 do not, 294 splits again",
        defaults: p(282, 294, 0, 0, 0),
        runner: run_dense_run,
    },
    TheoremCheck {
        id: "doubling-preserves-split",
        alias: None,
        summary: "doubling a splitting number keeps it splitting, with the transformed partition as witness",
        defaults: p(1, 5_000, 0, 0, 0),
        runner: run_doubling,
    },
    TheoremCheck {
        id: "two-layer-equals-zumkeller",
        alias: None,
        summary: "being 2-layered and splitting into equal halves are the same property",
        defaults: p(1, 20_000, 0, 0, 0),
        runner: run_two_layer_equals,
    },
];

fn run_divisor_identities(p: &VerifyParams, budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    for v in p.lo.max(1)..=p.hi {
        let f = factorize(nat(v));
        let (sigma, tau) = divisor_stats(&f)?;
        let d = divisors(&f, budget)?;
        let sum: u128 = d.values().iter().map(|&x| x as u128).sum();
        if d.len() as u64 != tau.get() || sum != sigma.get() as u128 {
            note(
                &mut bad,
                format!("n = {v}: enumeration disagrees with sigma/tau"),
            );
        }
        if v >= 2 {
            let h = arith::harmonic_mean(nat(v))?;
            if h.cmp_ratio(1, 1) != std::cmp::Ordering::Greater {
                note(&mut bad, format!("n = {v}: h = {h} is not above 1"));
            }
        }
        instances += 1;
    }
    Ok((instances, bad))
}

fn run_binary_expansion(p: &VerifyParams, _budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    let mut v = p.lo.max(3);
    if v.is_multiple_of(2) {
        v += 1;
    }
    while v <= p.hi {
        let b = binary_expansion(nat(v))?;
        let exps = b.exponents();
        let ascending = exps.windows(2).all(|w| w[0] < w[1]);
        if b.reconstruct() != v || !ascending || exps.first().is_some_and(|&r| r == 0) {
            note(&mut bad, format!("v = {v}: expansion malformed"));
        }
        instances += 1;
        v += 2;
    }
    Ok((instances, bad))
}

fn run_two_way_criterion(p: &VerifyParams, budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    for v in p.lo.max(1)..=p.hi {
        let (witnessed, _) = is_zumkeller_oracle(nat(v), budget)?;
        let searched = k_partition(nat(v), 2, budget)?.is_some();
        if witnessed != searched {
            note(
                &mut bad,
                format!("n = {v}: witness oracle {witnessed}, 2-part search {searched}"),
            );
        }
        instances += 1;
    }
    Ok((instances, bad))
}

fn run_odd_two_primes(p: &VerifyParams, budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    let mut v = p.lo.max(3);
    if v.is_multiple_of(2) {
        v += 1;
    }
    while v <= p.hi {
        let f = factorize(nat(v));
        if f.num_primes() == 2 {
            let (zk, _) = is_zumkeller_oracle(nat(v), budget)?;
            let verdict = zumkeller::is_zumkeller(nat(v), budget)?;
            if zk || verdict.rule != ZumkellerRule::TwoOddPrimesImpossible {
                note(
                    &mut bad,
                    format!("n = {v}: odd two-prime number misclassified"),
                );
            }
            instances += 1;
        }
        v += 2;
    }
    Ok((instances, bad))
}

fn odd_primes_up_to(limit: u64) -> Vec<u64> {
    arith::small_primes()
        .iter()
        .map(|&q| q as u64)
        .skip(1)
        .take_while(|&q| q <= limit)
        .collect()
}

fn run_two_power_prime(p: &VerifyParams, budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    for alpha in 1..=p.alpha_max {
        for &q in &odd_primes_up_to(p.p_max) {
            let rule = zumkeller::zumkeller_2a_p(alpha, nat(q))?;
            let n = (1u64 << alpha) * q;
            let (got, _) = is_zumkeller_oracle(nat(n), budget)?;
            if rule != got {
                note(
                    &mut bad,
                    format!("2^{alpha}*{q}: rule {rule}, oracle {got}"),
                );
            }
            if rule {
                let part = zumkeller::construct_partition_2a_p(alpha, nat(q), budget)?;
                if let Err(e) = part.validate(budget) {
                    note(
                        &mut bad,
                        format!("2^{alpha}*{q}: construction invalid: {e}"),
                    );
                }
            }
            instances += 1;
        }
    }
    Ok((instances, bad))
}

fn run_two_power_prime_sigma(p: &VerifyParams, _budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    for alpha in 1..=p.alpha_max {
        for &q in &odd_primes_up_to(p.p_max) {
            let rule = zumkeller::zumkeller_2a_p(alpha, nat(q))?;
            let sigma = ((1u128 << (alpha + 1)) - 1) * (q as u128 + 1);
            let two_n = (1u128 << (alpha + 1)) * q as u128;
            if rule != (sigma >= two_n) {
                note(
                    &mut bad,
                    format!("2^{alpha}*{q}: expansion rule and sigma bound disagree"),
                );
            }
            instances += 1;
        }
    }
    Ok((instances, bad))
}

fn run_adjacent_power_prime(p: &VerifyParams, budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    for alpha in 1..=p.alpha_max {
        let lo = 1u64 << alpha;
        let hi = 1u64 << (alpha + 1);
        for q in (lo + 1..hi).step_by(2) {
            if !arith::is_prime(q) {
                continue;
            }
            if !zumkeller::zumkeller_2a_p(alpha, nat(q))? {
                note(&mut bad, format!("2^{alpha}*{q}: adjacent prime rejected"));
            }
            let part = zumkeller::construct_partition_2a_p(alpha, nat(q), budget)?;
            if let Err(e) = part.validate(budget) {
                note(
                    &mut bad,
                    format!("2^{alpha}*{q}: construction invalid: {e}"),
                );
            }
            if alpha <= 10 && !is_zumkeller_oracle(nat(lo * q), budget)?.0 {
                note(&mut bad, format!("2^{alpha}*{q}: oracle disagrees"));
            }
            instances += 1;
        }
    }
    Ok((instances, bad))
}

fn run_two_power_prime_power(p: &VerifyParams, budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    for alpha in 1..=p.alpha_max {
        for &q in &odd_primes_up_to(p.p_max) {
            for beta in 1..=p.beta_max {
                let Some(n) = (q as u128)
                    .checked_pow(beta)
                    .map(|pk| pk << alpha)
                    .filter(|&n| n <= arith::NATURAL_MAX as u128)
                else {
                    continue;
                };
                let rule = zumkeller::zumkeller_2a_p_beta(alpha, nat(q), beta)?;
                // shapes the search cannot afford are out of scope here
                let got = match is_zumkeller_oracle(nat(n as u64), budget) {
                    Ok((got, _)) => got,
                    Err(Error::InstanceTooLarge { .. }) => continue,
                    Err(e) => return Err(e),
                };
                if rule != got {
                    note(
                        &mut bad,
                        format!("2^{alpha}*{q}^{beta}: rule {rule}, oracle {got}"),
                    );
                }
                if rule {
                    let part =
                        zumkeller::construct_partition_2a_p_beta(alpha, nat(q), beta, budget)?;
                    if let Err(e) = part.validate(budget) {
                        note(
                            &mut bad,
                            format!("2^{alpha}*{q}^{beta}: construction invalid: {e}"),
                        );
                    }
                }
                instances += 1;
            }
        }
    }
    Ok((instances, bad))
}

fn run_odd_power_lift(p: &VerifyParams, _budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    for alpha in 1..=p.alpha_max {
        for &q in &odd_primes_up_to(p.p_max) {
            let base = zumkeller::zumkeller_2a_p(alpha, nat(q))?;
            for beta in (1..=p.beta_max).step_by(2) {
                // the lifted value must stay representable
                let lifted = match zumkeller::zumkeller_2a_p_beta(alpha, nat(q), beta) {
                    Ok(v) => v,
                    Err(Error::Overflow(_)) => continue,
                    Err(e) => return Err(e),
                };
                if lifted != base {
                    note(
                        &mut bad,
                        format!("2^{alpha}*{q}^{beta}: odd power changed the verdict"),
                    );
                }
                instances += 1;
            }
        }
    }
    Ok((instances, bad))
}

fn run_euclid_euler(p: &VerifyParams, budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    for h in 2..=p.alpha_max {
        let m = (1u64 << h) - 1;
        if !arith::is_prime(m) {
            continue;
        }
        let n = (1u64 << (h - 1)) * m;
        let (perfect, harmonic) = arith::basic_flags(nat(n))?;
        let hm = arith::harmonic_mean(nat(n))?;
        if !perfect || !harmonic || hm.cmp_ratio(h as u64, 1) != std::cmp::Ordering::Equal {
            note(
                &mut bad,
                format!("n = {n}: perfect-number identities failed"),
            );
        }
        let verdict = zumkeller::is_zumkeller(nat(n), budget)?;
        let (zk, part) = is_zumkeller_oracle(nat(n), budget)?;
        let canonical = part.is_some_and(|pt| pt.parts()[0] == [n]);
        if !verdict.is_zumkeller || !zk || !canonical {
            note(
                &mut bad,
                format!("n = {n}: perfect number did not split as {{n}} vs proper divisors"),
            );
        }
        instances += 1;
    }
    Ok((instances, bad))
}

fn run_coprime_closure(p: &VerifyParams, budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    for v in p.lo.max(2)..=p.hi {
        let verdict = zumkeller::is_zumkeller(nat(v), budget)?;
        if !verdict.is_zumkeller {
            continue;
        }
        for m in 2..=p.p_max {
            if arith::gcd_u64(v, m) != 1
                || v.checked_mul(m).is_none_or(|nm| nm > arith::NATURAL_MAX)
            {
                continue;
            }
            let extended = zumkeller::extend_coprime(&verdict, nat(m), budget)?;
            if let Err(e) = extended.validate(budget) {
                note(
                    &mut bad,
                    format!("{v}*{m}: extended partition invalid: {e}"),
                );
            }
            if v * m <= 3_000 && !is_zumkeller_oracle(nat(v * m), budget)?.0 {
                note(&mut bad, format!("{v}*{m}: oracle rejects the product"));
            }
            instances += 1;
        }
    }
    Ok((instances, bad))
}

fn run_prime_index_bound(p: &VerifyParams, _budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    for i in p.lo.max(2)..=p.hi.min(u32::MAX as u64) {
        let Some(q) = arith::nth_prime(i as u32) else {
            note(&mut bad, format!("prime index {i} beyond the sieve"));
            break;
        };
        if i < 64 && q >= (1u64 << i) {
            note(&mut bad, format!("p_{i} = {q} is not below 2^{i}"));
        }
        instances += 1;
    }
    Ok((instances, bad))
}

fn run_indexed_two_power(p: &VerifyParams, budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    let rows = zumkeller::two_i_pi_table(p.alpha_max)?;
    for (i, q, n) in rows {
        let verdict = zumkeller::is_zumkeller(n, budget)?;
        let ok = verdict.is_zumkeller
            && verdict
                .certificate
                .as_ref()
                .is_some_and(|c| c.validate(budget).is_ok());
        if !ok {
            note(&mut bad, format!("i = {i}: 2^{i}*{q} failed to split"));
        }
        instances += 1;
    }
    Ok((instances, bad))
}

fn run_three_factor_families(p: &VerifyParams, budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    let primes = odd_primes_up_to(p.hi);
    for alpha in 1..=p.hi.max(2).ilog2() {
        let pw = 1u64 << alpha;
        if pw.saturating_mul(15) > p.hi {
            break;
        }
        for (i, &q1) in primes.iter().enumerate() {
            if pw.saturating_mul(q1 * (q1 + 2)) > p.hi {
                break;
            }
            for &q2 in &primes[i + 1..] {
                let Some(n) = pw.checked_mul(q1).and_then(|x| x.checked_mul(q2)) else {
                    break;
                };
                if n > p.hi {
                    break;
                }
                let (_, family) = layered::classify_2a_pq(alpha, nat(q1), nat(q2))?;
                let expected = family != layered::Family::None;
                let (three, _) = is_k_layered_oracle(nat(n), 3, budget)?;
                if three != expected {
                    note(
                        &mut bad,
                        format!("n = {n}: 3-layer search {three}, family rule {expected}"),
                    );
                }
                let (four, _) = is_k_layered_oracle(nat(n), 4, budget)?;
                if four {
                    note(&mut bad, format!("n = {n}: unexpectedly 4-layered"));
                }
                instances += 1;
            }
        }
    }
    Ok((instances, bad))
}

fn run_smallest_three_layered(p: &VerifyParams, budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    for v in p.lo.max(1)..=p.hi {
        let found = k_partition(nat(v), 3, budget)?.is_some();
        if found != (v == 120) {
            note(&mut bad, format!("n = {v}: 3-part split {found}"));
        }
        instances += 1;
    }
    Ok((instances, bad))
}

fn run_layered_coprime_closure(p: &VerifyParams, budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    let mut bases = Vec::new();
    for alpha in 3..=6 {
        bases.push(construct_3partition_fifteen(alpha, budget)?);
    }
    for alpha in [5, 7] {
        bases.push(construct_3partition_twentyone(alpha, budget)?);
    }
    for base in &bases {
        for w in 2..=p.p_max {
            if arith::gcd_u64(base.n().get(), w) != 1 {
                continue;
            }
            let extended = layered::extend_layered_coprime(base, nat(w), budget)?;
            if let Err(e) = extended.validate(budget) {
                note(
                    &mut bad,
                    format!("{}*{w}: extended 3-layer split invalid: {e}", base.n()),
                );
            }
            let nm = base.n().get() * w;
            if nm <= 20_000 && !is_k_layered_oracle(nat(nm), 3, budget)?.0 {
                note(
                    &mut bad,
                    format!("{}*{w}: search rejects the product", base.n()),
                );
            }
            instances += 1;
        }
    }
    Ok((instances, bad))
}

fn run_squarefree_odd_never_three(p: &VerifyParams, budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    let mut v = p.lo.max(3);
    if v.is_multiple_of(2) {
        v += 1;
    }
    while v <= p.hi {
        let f = factorize(nat(v));
        if f.is_squarefree() {
            if !layered::squarefree_odd_bound(&f)? {
                note(&mut bad, format!("n = {v}: bound rule did not apply"));
            }
            if is_k_layered_oracle(nat(v), 3, budget)?.0 {
                note(
                    &mut bad,
                    format!("n = {v}: odd squarefree number reached three layers"),
                );
            }
            instances += 1;
        }
        v += 2;
    }
    Ok((instances, bad))
}

fn run_practical_deficiency(p: &VerifyParams, _budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    for v in p.lo.max(1)..=p.hi {
        let f = factorize(nat(v));
        if !oracle::is_practical_fast(&f) {
            continue;
        }
        let (sigma, _) = divisor_stats(&f)?;
        if (sigma.get() as u128) < 2 * v as u128 - 1 {
            note(
                &mut bad,
                format!("n = {v}: practical number with sigma below 2n-1"),
            );
        }
        instances += 1;
    }
    Ok((instances, bad))
}

fn run_practical_subset_range(p: &VerifyParams, budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    for v in p.lo.max(1)..=p.hi {
        let f = factorize(nat(v));
        if !oracle::is_practical_fast(&f) {
            continue;
        }
        let d = divisors(&f, budget)?;
        if !oracle::covers_range(d.values(), d.sigma()) {
            note(
                &mut bad,
                format!("n = {v}: subset sums miss a target below sigma"),
            );
        }
        instances += 1;
    }
    Ok((instances, bad))
}

fn run_even_layered(p: &VerifyParams, budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    for v in p.lo.max(1)..=p.hi {
        let f = factorize(nat(v));
        let (sigma, _) = divisor_stats(&f)?;
        let kmax = sigma.get() / v;
        let mut k = 4u64;
        while k <= kmax {
            if is_k_layered_oracle(nat(v), k as u32, budget)?.0 {
                if !zumkeller::is_zumkeller(nat(v), budget)?.is_zumkeller {
                    note(
                        &mut bad,
                        format!("n = {v}: {k}-layered but no equal-half split"),
                    );
                }
                instances += 1;
            }
            k += 2;
        }
    }
    Ok((instances, bad))
}

fn run_practical_zumkeller_product(
    p: &VerifyParams,
    budget: &Budget,
) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    let base = zumkeller::is_zumkeller(nat(945), budget)?
        .certificate
        .ok_or_else(|| Error::Internal("945 lost its equal-half split".into()))?;
    let mut products = Vec::new();
    for m in p.lo.max(1)..=p.hi {
        let f = factorize(nat(m));
        if !oracle::is_practical_fast(&f) || arith::gcd_u64(m, 945) != 1 {
            continue;
        }
        let (sigma, _) = divisor_stats(&f)?;
        if sigma.get() % 3 != 0 {
            continue;
        }
        let part = layered::practical_times_zumkeller(nat(m), &base, budget)?;
        if let Err(e) = part.validate(budget) {
            note(
                &mut bad,
                format!("{m}*945: 3-layer construction invalid: {e}"),
            );
        }
        if part.k() != 3 {
            note(
                &mut bad,
                format!("{m}*945: expected 3 parts, got {}", part.k()),
            );
        }
        if m * 945 <= 30_000 && !is_k_layered_oracle(nat(m * 945), 3, budget)?.0 {
            note(&mut bad, format!("{m}*945: search rejects the product"));
        }
        products.push(m * 945);
        instances += 1;
    }
    for want in [1_890, 7_560, 30_240, 83_160, 98_280] {
        if p.hi >= want / 945 && !products.contains(&want) {
            note(&mut bad, format!("expected product {want} missing"));
        }
    }
    Ok((instances, bad))
}

fn run_practical_layered_product(_p: &VerifyParams, budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let x120 = layered::is_k_layered(nat(120), 3, budget)?
        .certificate
        .ok_or_else(|| Error::Internal("120 lost its three-part split".into()))?;
    if !matches!(
        layered::practical_times_layered(nat(12), &x120, 4, budget),
        Err(Error::Domain(_))
    ) {
        note(
            &mut bad,
            "shared factor with 120 was not rejected".to_string(),
        );
    }
    if !matches!(
        layered::practical_times_layered(nat(1), &x120, 4, budget),
        Err(Error::Domain(_))
    ) {
        note(
            &mut bad,
            "4 does not divide sigma(1), yet it was accepted".to_string(),
        );
    }
    let x945 = zumkeller::is_zumkeller(nat(945), budget)?
        .certificate
        .ok_or_else(|| Error::Internal("945 lost its equal-half split".into()))?;
    let via_k = layered::practical_times_layered(nat(2), &x945, 3, budget)?;
    let direct = layered::practical_times_zumkeller(nat(2), &x945, budget)?;
    if via_k.parts() != direct.parts() {
        note(
            &mut bad,
            "k = 3 product disagrees with the direct construction".to_string(),
        );
    }
    Ok((3, bad))
}

fn run_harmonic_layer_bounds(p: &VerifyParams, budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    for v in p.lo.max(1)..=p.hi {
        let report = crate::harmonic::harmonic_report(nat(v), 4)?;
        if zumkeller::is_zumkeller(nat(v), budget)?.is_zumkeller && !report.bound_half_tau {
            note(&mut bad, format!("n = {v}: splits but h > tau/2"));
        }
        for k in 3..=4u32 {
            if is_k_layered_oracle(nat(v), k, budget)?.0
                && report.h.cmp_ratio(report.tau, k as u64) == std::cmp::Ordering::Greater
            {
                note(&mut bad, format!("n = {v}: {k}-layered but h > tau/{k}"));
            }
        }
        instances += 1;
    }
    Ok((instances, bad))
}

fn run_harmonic_two_power_prime(p: &VerifyParams, budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    let mut alpha = 1u32;
    while (1u64 << alpha) * 3 <= p.hi {
        for &q in &odd_primes_up_to(p.hi >> alpha) {
            let n = (1u64 << alpha) * q;
            let via_h = crate::harmonic::zumkeller_iff_harmonic_2a_p(alpha, nat(q))?;
            let via_rule = zumkeller::zumkeller_2a_p(alpha, nat(q))?;
            if via_h != via_rule {
                note(
                    &mut bad,
                    format!("2^{alpha}*{q}: harmonic bound and expansion rule disagree"),
                );
            }
            if n <= 10_000 && is_zumkeller_oracle(nat(n), budget)?.0 != via_rule {
                note(&mut bad, format!("2^{alpha}*{q}: oracle disagrees"));
            }
            instances += 1;
        }
        alpha += 1;
    }
    Ok((instances, bad))
}

fn run_semiprime(p: &VerifyParams, budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    let hi = p.hi.max(6);
    let primes: Vec<u64> = arith::small_primes()
        .iter()
        .map(|&q| q as u64)
        .take_while(|&q| q <= hi / 2)
        .collect();
    for (i, &q1) in primes.iter().enumerate() {
        if q1 * q1 > hi {
            break;
        }
        for &q2 in &primes[i + 1..] {
            let n = q1 * q2;
            if n > hi {
                break;
            }
            let splits = zumkeller::is_zumkeller(nat(n), budget)?.is_zumkeller;
            if splits != (n == 6) {
                note(&mut bad, format!("n = {q1}*{q2}: split verdict {splits}"));
            }
            instances += 1;
        }
    }
    Ok((instances, bad))
}

fn run_harmonic_monotone(p: &VerifyParams, _budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    let primes = odd_primes_up_to(p.p_max);
    for alpha in 1..=p.alpha_max {
        for w in primes.windows(2) {
            let ha = arith::harmonic_mean(nat((1 << alpha) * w[0]))?;
            let hb = arith::harmonic_mean(nat((1 << alpha) * w[1]))?;
            if ha >= hb {
                note(
                    &mut bad,
                    format!(
                        "alpha = {alpha}: h is not strictly increasing at p = {}",
                        w[1]
                    ),
                );
            }
            instances += 1;
        }
    }
    Ok((instances, bad))
}

fn run_mersenne_harmonic(p: &VerifyParams, _budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    for h in 2..=p.alpha_max {
        let m = (1u64 << h) - 1;
        if !arith::is_prime(m) {
            if crate::harmonic::mersenne_harmonic(h).is_ok() {
                note(&mut bad, format!("h = {h}: composite 2^h-1 accepted"));
            }
            continue;
        }
        let hm = crate::harmonic::mersenne_harmonic(h)?;
        let direct = arith::harmonic_mean(nat(m))?;
        if hm != direct || hm.cmp_ratio(2, 1) != std::cmp::Ordering::Less {
            note(&mut bad, format!("h = {h}: Mersenne harmonic mean is off"));
        }
        instances += 1;
    }
    Ok((instances, bad))
}

fn run_integral_harmonic_perfect(p: &VerifyParams, _budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    let mut v = p.lo.max(2);
    if v % 2 == 1 {
        v += 1;
    }
    while v <= p.hi {
        let f = factorize(nat(v));
        let (sigma, _) = divisor_stats(&f)?;
        let form = crate::harmonic::laborde_check(nat(v))?;
        if form != (sigma.get() == 2 * v) {
            note(
                &mut bad,
                format!(
                    "n = {v}: form test {form}, perfect {}",
                    sigma.get() == 2 * v
                ),
            );
        }
        instances += 1;
        v += 2;
    }
    Ok((instances, bad))
}

fn run_prime_bound_audit(p: &VerifyParams, budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    let mut v = p.lo.max(3);
    if v.is_multiple_of(2) {
        v += 1;
    }
    while v <= p.hi {
        let f = factorize(nat(v));
        if f.num_primes() >= 4 && zumkeller::is_zumkeller(nat(v), budget)?.is_zumkeller {
            let violations = zumkeller::prime_bound_audit(&f)?;
            if !violations.is_empty() {
                note(
                    &mut bad,
                    format!("n = {v}: bound clauses violated: {violations:?}"),
                );
            }
            instances += 1;
        }
        v += 2;
    }
    Ok((instances, bad))
}

fn run_window(p: &VerifyParams, budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    let lo = p.lo.max(1);
    let mut flags = vec![false; (p.hi - lo + 12) as usize];
    for (i, flag) in flags.iter_mut().enumerate() {
        *flag = zumkeller::is_zumkeller(nat(lo + i as u64), budget)?.is_zumkeller;
    }
    for s in lo..=p.hi {
        let base = (s - lo) as usize;
        if !flags[base..base + 12].iter().any(|&f| f) {
            note(
                &mut bad,
                format!("window [{s}, {}] has no splitting number", s + 11),
            );
        }
        let w = zumkeller::window_witness(nat(s))?;
        if !flags[(w.get() - lo) as usize] {
            note(
                &mut bad,
                format!("witness {w} for window at {s} does not split"),
            );
        }
        instances += 1;
    }
    Ok((instances, bad))
}

fn run_dense_run(p: &VerifyParams, budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    for v in p.lo.max(1)..=p.hi {
        let splits = zumkeller::is_zumkeller(nat(v), budget)?.is_zumkeller;
        let expected = v == 282 || v == 294;
        if (282..=294).contains(&v) && splits != expected {
            note(&mut bad, format!("n = {v}: split verdict {splits}"));
        }
        instances += 1;
    }
    Ok((instances, bad))
}

fn run_doubling(p: &VerifyParams, budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    for v in p.lo.max(1)..=p.hi {
        let Some(part) = k_partition(nat(v), 2, budget)? else {
            continue;
        };
        let doubled = zumkeller::double_partition(&part, budget)?;
        if let Err(e) = doubled.validate(budget) {
            note(&mut bad, format!("n = {v}: doubled partition invalid: {e}"));
        }
        if doubled.n().get() != 2 * v {
            note(
                &mut bad,
                format!("n = {v}: doubled partition is not about 2n"),
            );
        }
        if !zumkeller::is_zumkeller(nat(2 * v), budget)?.is_zumkeller {
            note(&mut bad, format!("n = {v}: 2n does not split"));
        }
        instances += 1;
    }
    Ok((instances, bad))
}

fn run_two_layer_equals(p: &VerifyParams, budget: &Budget) -> Result<(u64, Vec<String>)> {
    let mut bad = Vec::new();
    let mut instances = 0;
    for v in p.lo.max(1)..=p.hi {
        let two = layered::is_k_layered(nat(v), 2, budget)?.holds;
        let zk = zumkeller::is_zumkeller(nat(v), budget)?.is_zumkeller;
        if two != zk {
            note(
                &mut bad,
                format!("n = {v}: 2-layered {two}, equal-half split {zk}"),
            );
        }
        if v <= 3_000 && is_zumkeller_oracle(nat(v), budget)?.0 != zk {
            note(
                &mut bad,
                format!("n = {v}: oracle disagrees with the dispatcher"),
            );
        }
        instances += 1;
    }
    Ok((instances, bad))
}
