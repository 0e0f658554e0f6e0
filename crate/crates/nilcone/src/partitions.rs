//! Integer partitions, Frobenius coordinates, weights and bounded enumeration.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default upper bound on the number of items a single enumeration call may return.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("legs and arms must be strictly decreasing and of equal length, got legs {legs:?}, arms {arms:?}")]
    InvalidFrobenius { legs: Vec<usize>, arms: Vec<usize> },
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
    #[error("enumeration would exceed the cap of {0} items")]
    CapExceeded(usize),
}

/// A weakly decreasing sequence of positive integers. Zeros are stripped on construction.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1] && w[1] > 0) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts into decreasing order and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `i`-th part, 0-indexed, with zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        let cols = (1..=width)
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition(cols)
    }

    /// Number of rows `i` (1-based) with `λ_i ≥ i`.
    pub fn diagonal_length(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p > *i)
            .count()
    }

    pub fn frobenius(&self) -> FrobeniusPartition {
        let k = self.diagonal_length();
        let t = self.transpose();
        FrobeniusPartition {
            legs: (0..k).map(|i| t.part(i) - i - 1).collect(),
            arms: (0..k).map(|i| self.part(i) - i - 1).collect(),
        }
    }

    /// The ℓ-weight: boxes of content divisible by `ell` in the first hook.
    pub fn weight(&self, ell: usize) -> usize {
        assert!(ell >= 1, "ell must be positive");
        if self.is_empty() {
            return 0;
        }
        let lo = 1 - self.len() as i64;
        let hi = self.part(0) as i64 - 1;
        multiples_in(lo, hi, ell as i64)
    }

    /// Contents `j - i` of every box, row by row.
    pub fn contents(&self) -> impl Iterator<Item = i64> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| j as i64 - i as i64))
    }
}

/// Number of multiples of `m` in the closed interval `[lo, hi]`.
pub(crate) fn multiples_in(lo: i64, hi: i64, m: i64) -> usize {
    if hi < lo {
        return 0;
    }
    (hi.div_euclid(m) - (lo - 1).div_euclid(m)) as usize
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;
    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts `[7,5,3]`, `(7,5,3)`, `7,5,3`, or `[]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')'])
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

/// Shorthand used throughout tests and examples. Panics on invalid input.
#[macro_export]
macro_rules! part {
    () => { $crate::partitions::Partition::empty() };
    ($($x:expr),+ $(,)?) => {
        $crate::partitions::Partition::new(vec![$($x),+]).expect("valid partition literal")
    };
}

/// Frobenius coordinates: legs `a` and arms `b`, both strictly decreasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FrobeniusPartition {
    legs: Vec<usize>,
    arms: Vec<usize>,
}

impl FrobeniusPartition {
    pub fn new(legs: Vec<usize>, arms: Vec<usize>) -> Result<Self, PartitionError> {
        let strict = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);
        if legs.len() != arms.len() || !strict(&legs) || !strict(&arms) {
            return Err(PartitionError::InvalidFrobenius { legs, arms });
        }
        Ok(FrobeniusPartition { legs, arms })
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    pub fn arms(&self) -> &[usize] {
        &self.arms
    }

    /// Number of hooks, equal to the diagonal length.
    pub fn rank(&self) -> usize {
        self.legs.len()
    }

    pub fn size(&self) -> usize {
        self.hook_sizes().size()
    }

    pub fn hook_sizes(&self) -> Partition {
        Partition(
            self.legs
                .iter()
                .zip(&self.arms)
                .map(|(a, b)| a + b + 1)
                .collect(),
        )
    }

    pub fn to_partition(&self) -> Partition {
        let k = self.rank();
        let mut rows: Vec<usize> = (0..k).map(|i| self.arms[i] + i + 1).collect();
        // rows below the diagonal square only meet the first k columns
        let col_len: Vec<usize> = (0..k).map(|j| self.legs[j] + j + 1).collect();
        let mut i = k + 1;
        loop {
            let len = col_len.iter().filter(|&&c| c >= i).count();
            if len == 0 {
                break;
            }
            rows.push(len);
            i += 1;
        }
        Partition(rows)
    }
}

impl fmt::Display for FrobeniusPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "(({}),({}))", join(&self.legs), join(&self.arms))
    }
}

/// A pair of partitions `(μ; ν)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{})", self.first, self.second)
    }
}

/// An ℓ-tuple of partitions indexed by `0..ℓ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multipartition(Vec<Partition>);

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(
            !components.is_empty(),
            "a multipartition needs at least one component"
        );
        Multipartition(components)
    }

    pub fn empty(ell: usize) -> Self {
        Multipartition::new(vec![Partition::empty(); ell])
    }

    pub fn ell(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.0[i]
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(Partition::is_empty)
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Partitions of `n` with every part at most `max_part`, lexicographically decreasing.
pub fn partitions_bounded(n: usize, max_part: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `n` in lexicographically decreasing order.
pub fn partitions(n: usize) -> Vec<Partition> {
    partitions_bounded(n, n)
}

pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>, PartitionError> {
    enumerate_partitions_capped(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_partitions_capped(n: usize, cap: usize) -> Result<Vec<Partition>, PartitionError> {
    // p(n) is monotone, so checking the count before materializing is cheap
    if partition_count(n) > cap as u128 {
        return Err(PartitionError::CapExceeded(cap));
    }
    Ok(partitions(n))
}

/// The partition function p(n) by Euler's recurrence.
pub fn partition_count(n: usize) -> u128 {
    let mut p = vec![0u128; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total: i128 = 0;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[m - g1] as i128;
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                total += sign * p[m - g2] as i128;
            }
        }
        p[m] = total as u128;
    }
    p[n]
}

/// Bipartitions of `n`, ordered by decreasing size of the first component.
pub fn enumerate_bipartitions(n: usize) -> Result<Vec<Bipartition>, PartitionError> {
    enumerate_bipartitions_capped(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_bipartitions_capped(
    n: usize,
    cap: usize,
) -> Result<Vec<Bipartition>, PartitionError> {
    let total: u128 = (0..=n)
        .map(|a| partition_count(a) * partition_count(n - a))
        .sum();
    if total > cap as u128 {
        return Err(PartitionError::CapExceeded(cap));
    }
    let mut out = Vec::with_capacity(total as usize);
    for a in (0..=n).rev() {
        let firsts = partitions(a);
        let seconds = partitions(n - a);
        for mu in &firsts {
            for nu in &seconds {
                out.push(Bipartition::new(mu.clone(), nu.clone()));
            }
        }
    }
    Ok(out)
}

/// ℓ-multipartitions of total size `n`. Sizes are distributed so that earlier
/// components are filled first.
pub fn enumerate_multipartitions(
    n: usize,
    ell: usize,
) -> Result<Vec<Multipartition>, PartitionError> {
    enumerate_multipartitions_capped(n, ell, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_multipartitions_capped(
    n: usize,
    ell: usize,
    cap: usize,
) -> Result<Vec<Multipartition>, PartitionError> {
    assert!(ell >= 1, "ell must be positive");
    let mut out = Vec::new();
    let mut comps = Vec::with_capacity(ell);
    multi_rec(n, ell, &mut comps, &mut out, cap)?;
    Ok(out)
}

fn multi_rec(
    remaining: usize,
    ell: usize,
    comps: &mut Vec<Partition>,
    out: &mut Vec<Multipartition>,
    cap: usize,
) -> Result<(), PartitionError> {
    if comps.len() + 1 == ell {
        for p in partitions(remaining) {
            if out.len() >= cap {
                return Err(PartitionError::CapExceeded(cap));
            }
            comps.push(p);
            out.push(Multipartition(comps.clone()));
            comps.pop();
        }
        return Ok(());
    }
    for a in (0..=remaining).rev() {
        for p in partitions(a) {
            comps.push(p);
            multi_rec(remaining - a, ell, comps, out, cap)?;
            comps.pop();
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transpose_examples() {
        assert_eq!(part![3, 1].transpose(), part![2, 1, 1]);
        assert_eq!(part![].transpose(), part![]);
        assert_eq!(part![7, 5, 3, 2, 1].transpose(), part![5, 4, 3, 2, 2, 1, 1]);
    }

    #[test]
    fn diagonal_length_examples() {
        assert_eq!(part![].diagonal_length(), 0);
        assert_eq!(part![7, 5, 3, 2, 1].diagonal_length(), 3);
        assert_eq!(part![1, 1, 1].diagonal_length(), 1);
    }

    #[test]
    fn frobenius_examples() {
        let f = part![7, 5, 3, 2, 1].frobenius();
        assert_eq!(f.legs(), &[4, 2, 0]);
        assert_eq!(f.arms(), &[6, 3, 0]);
        assert_eq!(f.hook_sizes(), part![11, 6, 1]);
        assert_eq!(part![].frobenius().rank(), 0);
        let f = part![3, 2, 1, 1].frobenius();
        assert_eq!((f.legs(), f.arms()), (&[3, 0][..], &[2, 0][..]));
        assert_eq!(f.hook_sizes(), part![6, 1]);
    }

    #[test]
    fn partition_of_examples() {
        let f = FrobeniusPartition::new(vec![4, 2, 0], vec![6, 3, 0]).unwrap();
        assert_eq!(f.to_partition(), part![7, 5, 3, 2, 1]);
        assert_eq!(FrobeniusPartition::default().to_partition(), part![]);
        let f = FrobeniusPartition::new(vec![1], vec![0]).unwrap();
        assert_eq!(f.to_partition(), part![1, 1]);
    }

    #[test]
    fn rejects_bad_frobenius() {
        assert!(FrobeniusPartition::new(vec![1, 1], vec![2, 0]).is_err());
        assert!(FrobeniusPartition::new(vec![1], vec![]).is_err());
    }

    #[test]
    fn weight_examples() {
        assert_eq!(part![3, 1].weight(1), 4);
        assert_eq!(part![3, 1].weight(2), 2);
        for ell in 1..6 {
            assert_eq!(part![1].weight(ell), 1);
        }
        assert_eq!(part![].weight(3), 0);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(partitions(3), vec![part![3], part![2, 1], part![1, 1, 1]]);
        assert_eq!(enumerate_bipartitions(3).unwrap().len(), 10);
        let m = enumerate_multipartitions(1, 2).unwrap();
        assert_eq!(
            m,
            vec![
                Multipartition::new(vec![part![1], part![]]),
                Multipartition::new(vec![part![], part![1]])
            ]
        );
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(partitions(n).len(), c);
            assert_eq!(partition_count(n), c as u128);
        }
        assert_eq!(partition_count(20), 627);
        assert_eq!(partitions(20).len(), 627);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            enumerate_partitions_capped(10, 5),
            Err(PartitionError::CapExceeded(5))
        );
        assert!(enumerate_multipartitions_capped(4, 3, 10).is_err());
    }

    #[test]
    fn text_form() {
        assert_eq!(part![7, 5, 3, 2, 1].to_string(), "[7,5,3,2,1]");
        assert_eq!(part![].to_string(), "[]");
        assert_eq!(
            "[7,5,3,2,1]".parse::<Partition>().unwrap(),
            part![7, 5, 3, 2, 1]
        );
        assert_eq!("[]".parse::<Partition>().unwrap(), part![]);
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
    }

    #[test]
    fn new_strips_zeros_and_rejects_increase() {
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), part![2, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let p = part![4, 4, 1];
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, "[4,4,1]");
        assert_eq!(serde_json::from_str::<Partition>(&s).unwrap(), p);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
