//! Definition-level deciders: dense subset-sum bit tables, a complete k-way
//! partition search, and the divisor-set predicates built on them. Nothing
//! here trusts a structural rule; the rule modules are checked against this
//! one.

use crate::arith::{self, Natural};
use crate::{Budget, Error, Result};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

const SNAPSHOT_BYTES_MAX: u64 = 64 << 20;
const SUFFIX_BYTES_MAX: u64 = 64 << 20;
const MITM_MAX_VALUES: usize = 40;

struct BitVec {
    words: Vec<u64>,
    max_bit: u64,
}

impl BitVec {
    fn new(max_bit: u64) -> BitVec {
        BitVec {
            words: vec![0; (max_bit / 64 + 1) as usize],
            max_bit,
        }
    }

    fn set(&mut self, i: u64) {
        self.words[(i / 64) as usize] |= 1 << (i % 64);
    }

    fn get(&self, i: u64) -> bool {
        if i > self.max_bit {
            return false;
        }
        self.words[(i / 64) as usize] >> (i % 64) & 1 == 1
    }

    /// self |= self << d, truncated at capacity.
    fn shl_or(&mut self, d: u64) {
        let nw = self.words.len();
        let ws = (d / 64) as usize;
        let bs = (d % 64) as u32;
        if ws >= nw {
            return;
        }
        if bs == 0 {
            for i in (ws..nw).rev() {
                self.words[i] |= self.words[i - ws];
            }
        } else {
            for i in (ws..nw).rev() {
                let mut v = self.words[i - ws] << bs;
                if i > ws {
                    v |= self.words[i - ws - 1] >> (64 - bs);
                }
                self.words[i] |= v;
            }
        }
    }

    /// All of bits 0..=hi set.
    fn all_set_through(&self, hi: u64) -> bool {
        debug_assert!(hi <= self.max_bit);
        let full = (hi / 64) as usize;
        if self.words[..full].iter().any(|&w| w != u64::MAX) {
            return false;
        }
        let rem = hi % 64 + 1;
        let mask = if rem == 64 { u64::MAX } else { (1 << rem) - 1 };
        self.words[full] & mask == mask
    }

    fn byte_len(max_bit: u64) -> u64 {
        (max_bit / 64 + 1) * 8
    }
}

/// Indices into the queried value list whose values sum to the target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetWitness {
    target: u64,
    indices: Vec<usize>,
    values: Vec<u64>,
}

impl SubsetWitness {
    pub fn target(&self) -> u64 {
        self.target
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Checks this witness against the list it was derived from.
    pub fn verify(&self, pool: &[u64]) -> bool {
        if self.indices.len() != self.values.len() {
            return false;
        }
        if self.indices.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
        let mut sum: u128 = 0;
        for (&ix, &v) in self.indices.iter().zip(&self.values) {
            if pool.get(ix) != Some(&v) {
                return false;
            }
            sum += v as u128;
        }
        sum == self.target as u128
    }
}

fn snapshot_witness(values: &[u64], target: u64) -> Option<SubsetWitness> {
    let mut snaps: Vec<BitVec> = Vec::with_capacity(values.len() + 1);
    let mut cur = BitVec::new(target);
    cur.set(0);
    let mut hit = None;
    for (i, &v) in values.iter().enumerate() {
        snaps.push(BitVec {
            words: cur.words.clone(),
            max_bit: target,
        });
        cur.shl_or(v);
        if cur.get(target) {
            hit = Some(i);
            break;
        }
    }
    let last = hit?;
    let mut indices = Vec::new();
    let mut s = target;
    for i in (0..=last).rev() {
        if !snaps[i].get(s) {
            indices.push(i);
            s -= values[i];
        }
    }
    debug_assert_eq!(s, 0);
    indices.reverse();
    let chosen = indices.iter().map(|&i| values[i]).collect();
    Some(SubsetWitness {
        target,
        indices,
        values: chosen,
    })
}

fn mitm_witness(values: &[u64], target: u64) -> Option<SubsetWitness> {
    debug_assert!(values.len() <= MITM_MAX_VALUES);
    let nl = values.len() / 2;
    let (left, right) = values.split_at(nl);
    let enum_sums = |vs: &[u64]| -> Vec<u128> {
        let mut sums = vec![0u128; 1 << vs.len()];
        for m in 1..sums.len() {
            let low = m.trailing_zeros() as usize;
            sums[m] = sums[m & (m - 1)] + vs[low] as u128;
        }
        sums
    };
    let left_sums = enum_sums(left);
    let right_sums = enum_sums(right);
    let mut right_sorted: Vec<(u128, u32)> = right_sums
        .iter()
        .enumerate()
        .map(|(m, &s)| (s, m as u32))
        .collect();
    right_sorted.sort_unstable();
    for (lm, &ls) in left_sums.iter().enumerate() {
        if ls > target as u128 {
            continue;
        }
        let need = target as u128 - ls;
        let Ok(mut pos) = right_sorted.binary_search_by(|&(s, _)| s.cmp(&need)) else {
            continue;
        };
        while pos > 0 && right_sorted[pos - 1].0 == need {
            pos -= 1;
        }
        let rm = right_sorted[pos].1 as usize;
        let mut indices: Vec<usize> = (0..left.len()).filter(|&i| lm >> i & 1 == 1).collect();
        indices.extend(
            (0..right.len())
                .filter(|&i| rm >> i & 1 == 1)
                .map(|i| i + nl),
        );
        let chosen = indices.iter().map(|&i| values[i]).collect();
        return Some(SubsetWitness {
            target,
            indices,
            values: chosen,
        });
    }
    None
}

fn reachable_dense(values: &[u64], target: u64) -> bool {
    let mut bv = BitVec::new(target);
    bv.set(0);
    for &v in values {
        if v <= target {
            bv.shl_or(v);
            if bv.get(target) {
                return true;
            }
        }
    }
    false
}

/// Finds a sub-list of `values` summing exactly to `target`. Zero targets
/// take the empty witness. Values must be positive.
pub fn subset_sum(values: &[u64], target: u64, budget: &Budget) -> Result<Option<SubsetWitness>> {
    if values.contains(&0) {
        return Err(Error::Domain("subset-sum values must be positive".into()));
    }
    if target == 0 {
        return Ok(Some(SubsetWitness {
            target: 0,
            indices: vec![],
            values: vec![],
        }));
    }
    let total: u128 = values.iter().map(|&v| v as u128).sum();
    if (target as u128) > total {
        return Ok(None);
    }
    if target <= budget.dp_sum_cap {
        let snap_bytes = BitVec::byte_len(target).saturating_mul(values.len() as u64 + 1);
        if snap_bytes <= SNAPSHOT_BYTES_MAX {
            return Ok(snapshot_witness(values, target));
        }
        if !reachable_dense(values, target) {
            return Ok(None);
        }
        if values.len() <= MITM_MAX_VALUES {
            return Ok(mitm_witness(values, target));
        }
        Err(Error::InstanceTooLarge {
            what: "subset-sum witness table bytes",
            actual: snap_bytes,
            limit: SNAPSHOT_BYTES_MAX,
        })
    } else if values.len() <= MITM_MAX_VALUES {
        Ok(mitm_witness(values, target))
    } else {
        Err(Error::InstanceTooLarge {
            what: "subset-sum target",
            actual: target,
            limit: budget.dp_sum_cap,
        })
    }
}

/// Feasibility-only subset-sum query.
pub(crate) fn sum_reachable(values: &[u64], target: u64, budget: &Budget) -> Result<bool> {
    if target == 0 {
        return Ok(true);
    }
    let total: u128 = values.iter().map(|&v| v as u128).sum();
    if (target as u128) > total {
        return Ok(false);
    }
    if target <= budget.dp_sum_cap {
        Ok(reachable_dense(values, target))
    } else if values.len() <= MITM_MAX_VALUES {
        Ok(mitm_witness(values, target).is_some())
    } else {
        Err(Error::InstanceTooLarge {
            what: "subset-sum target",
            actual: target,
            limit: budget.dp_sum_cap,
        })
    }
}

/// All targets 0..=limit reachable as subset sums of `values`.
pub(crate) fn covers_range(values: &[u64], limit: u64) -> bool {
    let mut bv = BitVec::new(limit);
    bv.set(0);
    for &v in values {
        if v <= limit {
            bv.shl_or(v);
        }
    }
    bv.all_set_through(limit)
}

/// Divisors of n split into equal-sum parts. Parts are held in canonical
/// order: descending by largest member, ascending inside each part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorPartition {
    n: Natural,
    part_sum: u64,
    parts: Vec<Vec<u64>>,
}

fn check_parts(n: Natural, parts: &[Vec<u64>], budget: &Budget) -> Result<u64> {
    if parts.is_empty() {
        return Err(Error::Domain(
            "a divisor partition needs at least one part".into(),
        ));
    }
    if parts.iter().any(|p| p.is_empty()) {
        return Err(Error::Domain(
            "divisor partition parts must be nonempty".into(),
        ));
    }
    let d = arith::divisors(&arith::factorize(n), budget)?;
    let mut flat: Vec<u64> = parts.iter().flatten().copied().collect();
    flat.sort_unstable();
    if flat != d.values() {
        return Err(Error::Domain(format!(
            "parts do not cover the divisors of {n} exactly"
        )));
    }
    let sums: Vec<u128> = parts
        .iter()
        .map(|p| p.iter().map(|&v| v as u128).sum())
        .collect();
    if sums.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::Domain("part sums differ".into()));
    }
    Ok(sums[0] as u64)
}

impl DivisorPartition {
    pub fn from_parts(n: Natural, mut parts: Vec<Vec<u64>>, budget: &Budget) -> Result<Self> {
        let part_sum = check_parts(n, &parts, budget)?;
        for p in &mut parts {
            p.sort_unstable();
        }
        parts.sort_by(|a, b| b.last().cmp(&a.last()));
        Ok(DivisorPartition { n, part_sum, parts })
    }

    pub fn n(&self) -> Natural {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.parts.len() as u32
    }

    pub fn part_sum(&self) -> u64 {
        self.part_sum
    }

    pub fn parts(&self) -> &[Vec<u64>] {
        &self.parts
    }

    /// Re-runs the construction checks.
    pub fn validate(&self, budget: &Budget) -> Result<()> {
        let sum = check_parts(self.n, &self.parts, budget)?;
        if sum != self.part_sum {
            return Err(Error::Internal("stored part sum is stale".into()));
        }
        Ok(())
    }
}

impl Serialize for DivisorPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("DivisorPartition", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("k", &self.k())?;
        st.serialize_field("part_sum", &self.part_sum)?;
        st.serialize_field("parts", &self.parts)?;
        st.end()
    }
}

/// Two equal-sum halves of the divisors of n, by direct search.
pub fn is_zumkeller_oracle(
    n: Natural,
    budget: &Budget,
) -> Result<(bool, Option<DivisorPartition>)> {
    let f = arith::factorize(n);
    let (sigma, _) = arith::divisor_stats(&f)?;
    let sigma = sigma.get();
    if sigma % 2 == 1 || (sigma as u128) < 2 * n.get() as u128 {
        return Ok((false, None));
    }
    let want = (sigma - 2 * n.get()) / 2;
    let d = arith::divisors(&f, budget)?;
    match subset_sum(d.proper(), want, budget)? {
        None => Ok((false, None)),
        Some(wit) => {
            let mut with_n: Vec<u64> = wit.values().to_vec();
            with_n.push(n.get());
            let mut rest: Vec<u64> = Vec::with_capacity(d.len() - 1 - wit.indices().len());
            let mut next = wit.indices().iter().copied().peekable();
            for (i, &v) in d.proper().iter().enumerate() {
                if next.peek() == Some(&i) {
                    next.next();
                } else {
                    rest.push(v);
                }
            }
            let part = DivisorPartition::from_parts(n, vec![with_n, rest], budget)?;
            Ok((true, Some(part)))
        }
    }
}

struct PartitionSearch<'a> {
    items: &'a [u64],
    k: usize,
    suffix_reach: Option<Vec<BitVec>>,
}

impl PartitionSearch<'_> {
    fn run(&self, remaining: &mut [u64], members: &mut [Vec<u64>], depth: usize) -> bool {
        if depth == self.items.len() {
            return remaining.iter().all(|&r| r == 0);
        }
        let v = self.items[depth];
        for j in 0..self.k {
            if remaining[j] < v || remaining[..j].contains(&remaining[j]) {
                continue;
            }
            remaining[j] -= v;
            members[j].push(v);
            let viable = match &self.suffix_reach {
                Some(masks) => remaining.iter().all(|&r| masks[depth + 1].get(r)),
                None => true,
            };
            if viable && self.run(remaining, members, depth + 1) {
                return true;
            }
            members[j].pop();
            remaining[j] += v;
        }
        false
    }
}

/// Splits the divisors of n into k equal-sum parts, or proves none exists.
pub fn k_partition(n: Natural, k: u32, budget: &Budget) -> Result<Option<DivisorPartition>> {
    if k == 0 {
        return Err(Error::Domain("k must be at least 1".into()));
    }
    let f = arith::factorize(n);
    let (sigma, _) = arith::divisor_stats(&f)?;
    let sigma = sigma.get();
    if k == 1 {
        let d = arith::divisors(&f, budget)?;
        return Ok(Some(DivisorPartition::from_parts(
            n,
            vec![d.values().to_vec()],
            budget,
        )?));
    }
    if sigma % k as u64 != 0 {
        return Ok(None);
    }
    let target = sigma / k as u64;
    if n.get() > target {
        return Ok(None);
    }
    if target > budget.dp_sum_cap {
        return Err(Error::InstanceTooLarge {
            what: "partition target",
            actual: target,
            limit: budget.dp_sum_cap,
        });
    }
    let d = arith::divisors(&f, budget)?;
    let mut items: Vec<u64> = d.values().to_vec();
    items.reverse();
    let suffix_bytes = BitVec::byte_len(target).saturating_mul(items.len() as u64 + 1);
    let suffix_reach = (suffix_bytes <= SUFFIX_BYTES_MAX).then(|| {
        let mut masks = Vec::with_capacity(items.len() + 1);
        let mut cur = BitVec::new(target);
        cur.set(0);
        masks.push(BitVec {
            words: cur.words.clone(),
            max_bit: target,
        });
        for &v in items.iter().rev() {
            cur.shl_or(v);
            masks.push(BitVec {
                words: cur.words.clone(),
                max_bit: target,
            });
        }
        masks.reverse();
        masks
    });
    let search = PartitionSearch {
        items: &items,
        k: k as usize,
        suffix_reach,
    };
    let mut remaining = vec![target; k as usize];
    let mut members: Vec<Vec<u64>> = vec![Vec::new(); k as usize];
    if !search.run(&mut remaining, &mut members, 0) {
        return Ok(None);
    }
    Ok(Some(DivisorPartition::from_parts(n, members, budget)?))
}

/// Direct k-layered test; k >= 2.
pub fn is_k_layered_oracle(
    n: Natural,
    k: u32,
    budget: &Budget,
) -> Result<(bool, Option<DivisorPartition>)> {
    if k < 2 {
        return Err(Error::Domain("layering asks for k >= 2".into()));
    }
    match k_partition(n, k, budget)? {
        Some(p) => Ok((true, Some(p))),
        None => Ok((false, None)),
    }
}

/// Largest k such that the divisors of n split into k equal-sum parts.
pub fn max_layers(n: Natural, budget: &Budget) -> Result<u32> {
    let f = arith::factorize(n);
    let (sigma, _) = arith::divisor_stats(&f)?;
    let kmax = (sigma.get() / n.get()) as u32;
    for k in (2..=kmax).rev() {
        if sigma.get() % k as u64 == 0 && k_partition(n, k, budget)?.is_some() {
            return Ok(k);
        }
    }
    Ok(1)
}

/// Proper divisors split into two equal-sum nonempty parts.
pub fn is_half_zumkeller(n: Natural, budget: &Budget) -> Result<bool> {
    let f = arith::factorize(n);
    let (sigma, _) = arith::divisor_stats(&f)?;
    let s = sigma.get() - n.get();
    if s == 0 || s % 2 == 1 {
        return Ok(false);
    }
    let d = arith::divisors(&f, budget)?;
    sum_reachable(d.proper(), s / 2, budget)
}

/// Every m in 1..n is a sum of distinct divisors of n.
pub fn is_practical(n: Natural, budget: &Budget) -> Result<bool> {
    let v = n.get();
    if v == 1 {
        return Ok(true);
    }
    if v % 2 == 1 {
        return Ok(false);
    }
    if v - 1 > budget.dp_sum_cap {
        return Err(Error::InstanceTooLarge {
            what: "practicality range",
            actual: v - 1,
            limit: budget.dp_sum_cap,
        });
    }
    let d = arith::divisors(&arith::factorize(n), budget)?;
    let mut bv = BitVec::new(v - 1);
    bv.set(0);
    for &dv in d.proper() {
        bv.shl_or(dv);
    }
    Ok(bv.all_set_through(v - 1))
}

/// Practicality by the prime-growth criterion: each prime is at most one
/// more than the divisor sum of the part built so far.
pub fn is_practical_fast(f: &crate::arith::Factorization) -> bool {
    if f.n().get() == 1 {
        return true;
    }
    let factors = f.factors();
    if factors[0].0.get() != 2 {
        return false;
    }
    let mut reach: u128 = 1;
    for &(p, e) in factors {
        if p.get() as u128 > reach + 1 {
            return false;
        }
        let mut geo: u128 = 1;
        let mut term: u128 = 1;
        for _ in 0..e {
            term *= p.get() as u128;
            geo += term;
        }
        reach *= geo;
    }
    true
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
    fn subset_sum_basics() {
        let w = subset_sum(&[1, 2, 4, 5, 10], 1, &b()).unwrap().unwrap();
        assert_eq!(w.values(), &[1]);
        assert!(w.verify(&[1, 2, 4, 5, 10]));
        let empty = subset_sum(&[3, 5], 0, &b()).unwrap().unwrap();
        assert!(empty.indices().is_empty());
        assert!(subset_sum(&[], 1, &b()).unwrap().is_none());
        assert!(subset_sum(&[3, 5], 4, &b()).unwrap().is_none());
        assert!(subset_sum(&[3, 0], 3, &b()).is_err());
    }

    #[test]
    fn subset_sum_witnesses_verify() {
        let pool: Vec<u64> = (1..=30).collect();
        for target in [1u64, 7, 100, 465] {
            let w = subset_sum(&pool, target, &b()).unwrap().unwrap();
            assert!(w.verify(&pool), "target {target}");
        }
        assert!(subset_sum(&pool, 466, &b()).unwrap().is_none());
    }

    #[test]
    fn subset_sum_mitm_path() {
        let tiny = Budget {
            dp_sum_cap: 4,
            ..b()
        };
        let pool: Vec<u64> = (0..30).map(|i| 1u64 << i).collect();
        let w = subset_sum(&pool, 0x2345_6789, &tiny).unwrap().unwrap();
        assert!(w.verify(&pool));
        assert!(subset_sum(&pool, 1 << 30, &tiny).unwrap().is_none());
        let big: Vec<u64> = vec![1 << 26; 45];
        assert!(matches!(
            subset_sum(&big, (1 << 26) + 1, &tiny),
            Err(Error::InstanceTooLarge { .. })
        ));
    }

    #[test]
    fn zumkeller_oracle_examples() {
        let (yes, part) = is_zumkeller_oracle(n(20), &b()).unwrap();
        assert!(yes);
        let part = part.unwrap();
        assert_eq!(part.parts(), &[vec![1, 20], vec![2, 4, 5, 10]]);
        assert_eq!(part.part_sum(), 21);
        part.validate(&b()).unwrap();

        let (yes, part) = is_zumkeller_oracle(n(6), &b()).unwrap();
        assert!(yes);
        assert_eq!(part.unwrap().parts(), &[vec![6], vec![1, 2, 3]]);

        assert!(is_zumkeller_oracle(n(945), &b()).unwrap().0);
        assert!(!is_zumkeller_oracle(n(283), &b()).unwrap().0);
        assert!(!is_zumkeller_oracle(n(1), &b()).unwrap().0);
        assert!(!is_zumkeller_oracle(n(97), &b()).unwrap().0);
    }

    #[test]
    fn zumkeller_first_terms() {
        let got: Vec<u64> = (1..=60)
            .filter(|&v| is_zumkeller_oracle(n(v), &b()).unwrap().0)
            .collect();
        assert_eq!(got, vec![6, 12, 20, 24, 28, 30, 40, 42, 48, 54, 56, 60]);
    }

    #[test]
    fn k_partition_examples() {
        let p = k_partition(n(120), 3, &b()).unwrap().unwrap();
        assert_eq!(p.k(), 3);
        assert_eq!(p.part_sum(), 120);
        p.validate(&b()).unwrap();
        assert!(k_partition(n(48), 3, &b()).unwrap().is_none());
        assert!(k_partition(n(6), 3, &b()).unwrap().is_none());
        let p = k_partition(n(27720), 4, &b()).unwrap().unwrap();
        assert_eq!(p.part_sum(), 112320 / 4);
        let whole = k_partition(n(10), 1, &b()).unwrap().unwrap();
        assert_eq!(whole.parts(), &[vec![1, 2, 5, 10]]);
    }

    #[test]
    fn layered_oracle_examples() {
        assert!(is_k_layered_oracle(n(945), 2, &b()).unwrap().0);
        assert!(is_k_layered_oracle(n(120), 3, &b()).unwrap().0);
        assert!(!is_k_layered_oracle(n(30), 3, &b()).unwrap().0);
        assert!(!is_k_layered_oracle(n(120), 4, &b()).unwrap().0);
        assert!(is_k_layered_oracle(n(1), 2, &b()).is_ok());
        assert!(!is_k_layered_oracle(n(1), 2, &b()).unwrap().0);
        assert!(is_k_layered_oracle(n(6), 1, &b()).is_err());
    }

    #[test]
    fn three_layered_first_terms() {
        let got: Vec<u64> = (1..=720)
            .filter(|&v| is_k_layered_oracle(n(v), 3, &b()).unwrap().0)
            .collect();
        assert_eq!(
            got,
            vec![120, 180, 240, 360, 420, 480, 504, 540, 600, 660, 672, 720]
        );
    }

    #[test]
    fn max_layers_spot_values() {
        for (v, k) in [
            (1u64, 1u32),
            (6, 2),
            (7, 1),
            (120, 3),
            (180, 3),
            (945, 2),
            (27720, 4),
        ] {
            assert_eq!(max_layers(n(v), &b()).unwrap(), k, "n = {v}");
        }
    }

    #[test]
    fn half_zumkeller_prefix() {
        let got: Vec<u64> = (1..=42)
            .filter(|&v| is_half_zumkeller(n(v), &b()).unwrap())
            .collect();
        assert_eq!(got, vec![6, 12, 20, 24, 28, 30, 40, 42]);
        assert!(is_half_zumkeller(n(225), &b()).unwrap());
        assert!(!is_zumkeller_oracle(n(225), &b()).unwrap().0);
        assert!(!is_half_zumkeller(n(1), &b()).unwrap());
    }

    #[test]
    fn practical_prefix() {
        let got: Vec<u64> = (1..=20)
            .filter(|&v| is_practical(n(v), &b()).unwrap())
            .collect();
        assert_eq!(got, vec![1, 2, 4, 6, 8, 12, 16, 18, 20]);
        assert!(!is_practical(n(10), &b()).unwrap());
        assert!(!is_practical(n(945), &b()).unwrap());
    }

    #[test]
    fn practical_fast_matches_dense() {
        for v in 1..=2000u64 {
            let f = arith::factorize(n(v));
            assert_eq!(
                is_practical_fast(&f),
                is_practical(n(v), &b()).unwrap(),
                "n = {v}"
            );
        }
    }

    #[test]
    fn partition_construction_rejects_bad_input() {
        assert!(
            DivisorPartition::from_parts(n(20), vec![vec![1, 20], vec![2, 4, 5]], &b()).is_err()
        );
        assert!(
            DivisorPartition::from_parts(n(20), vec![vec![1, 2, 20], vec![4, 5, 10]], &b())
                .is_err()
        );
        assert!(DivisorPartition::from_parts(
            n(20),
            vec![vec![1, 20], vec![], vec![2, 4, 5, 10]],
            &b()
        )
        .is_err());
        let canon = DivisorPartition::from_parts(n(20), vec![vec![10, 5, 4, 2], vec![20, 1]], &b())
            .unwrap();
        assert_eq!(canon.parts(), &[vec![1, 20], vec![2, 4, 5, 10]]);
    }
}
