//! Integer partitions and small-symmetric-group permutations.
//!
//! Partitions index everything downstream: they are the memo keys of the
//! generating-function tables (one series per conjugacy class) and the
//! weights `1/z_λ` of the class-averaged sums. Permutations only appear in
//! property tests for the orientation-transport map, which justifies working
//! at the partition level in the first place.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("part {part} does not occur in partition {partition}")]
    PartAbsent { part: u32, partition: String },
    #[error("cannot parse partition from {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// An integer partition: a multiset of positive parts, stored descending.
///
/// The derived ordering compares part sequences lexicographically, so for a
/// fixed weight it is the reverse-lexicographic order used by
/// [`partitions_of`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
    weight: u32,
}

impl Partition {
    /// Normalizes `parts` into canonical (descending) form.
    ///
    /// Panics if any part is zero; partitions have positive parts only.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p >= 1), "partition parts must be >= 1");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let weight = parts.iter().sum();
        Partition { parts, weight }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new(), weight: 0 }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part sizes with their multiplicities, ascending by part.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut mult = BTreeMap::new();
        for &p in &self.parts {
            *mult.entry(p).or_insert(0) += 1;
        }
        mult
    }

    /// Centralizer order z_λ = ∏ i^{m_i}·m_i!, the order of the centralizer
    /// of a permutation of cycle type λ. Equivalently |S_n| divided by the
    /// size of the conjugacy class λ.
    pub fn centralizer_order(&self) -> BigInt {
        let mut z = BigInt::one();
        for (part, mult) in self.multiplicities() {
            z *= BigInt::from(part).pow(mult);
            for j in 1..=mult {
                z *= BigInt::from(j);
            }
        }
        z
    }

    /// Cycle type of σ^i for σ any permutation of cycle type self: each part
    /// p contributes gcd(p, i) parts of size p / gcd(p, i).
    pub fn power(&self, i: u32) -> Partition {
        assert!(i >= 1, "partition power exponent must be >= 1");
        let mut parts = Vec::with_capacity(self.parts.len());
        for &p in &self.parts {
            let g = p.gcd(&i);
            for _ in 0..g {
                parts.push(p / g);
            }
        }
        Partition::new(parts)
    }

    /// Removes one occurrence of `part`.
    pub fn remove_part(&self, part: u32) -> Result<Partition, PartitionError> {
        match self.parts.iter().position(|&p| p == part) {
            Some(idx) => {
                let mut parts = self.parts.clone();
                parts.remove(idx);
                Ok(Partition { parts, weight: self.weight - part })
            }
            None => Err(PartitionError::PartAbsent { part, partition: self.to_string() }),
        }
    }

    /// Adds one occurrence of `part`.
    pub fn with_part(&self, part: u32) -> Partition {
        assert!(part >= 1, "partition parts must be >= 1");
        let mut parts = self.parts.clone();
        let pos = parts.iter().position(|&p| p < part).unwrap_or(parts.len());
        parts.insert(pos, part);
        Partition { parts, weight: self.weight + part }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let joined: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", joined.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Parses comma-separated positive integers in any order, e.g. "1,3,1".
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let piece = piece.trim();
            let value: u32 = piece.parse().map_err(|_| PartitionError::Parse {
                input: s.to_string(),
                reason: format!("invalid part {piece:?}"),
            })?;
            if value == 0 {
                return Err(PartitionError::Parse {
                    input: s.to_string(),
                    reason: "parts must be positive".to_string(),
                });
            }
            parts.push(value);
        }
        Ok(Partition::new(parts))
    }
}

/// All partitions of `n`, in reverse-lexicographic order on the descending
/// part sequences: partitions_of(4) = [{4}, {3,1}, {2,2}, {2,1,1}, {1,1,1,1}].
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, &mut current, &mut out);
    out
}

fn fill_partitions(n: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition { parts: current.clone(), weight: current.iter().sum() });
        return;
    }
    let mut p = n.min(max_part);
    while p >= 1 {
        current.push(p);
        fill_partitions(n - p, p, current, out);
        current.pop();
        p -= 1;
    }
}

/// A permutation of {1..m}, 1-indexed: `images[a-1]` is the image of `a`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation { images: (1..=m).collect() }
    }

    /// Builds a permutation from its image sequence; `None` if not a
    /// bijection on {1..m}.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &v in &images {
            if v < 1 || v > m || seen[v - 1] {
                return None;
            }
            seen[v - 1] = true;
        }
        Some(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, a: usize) -> usize {
        self.images[a - 1]
    }

    /// Composition self ∘ other: `other` is applied first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in composition");
        let images = (1..=self.degree()).map(|a| self.apply(other.apply(a))).collect();
        Permutation { images }
    }

    /// Cycles in orbit order, each starting from its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut cycles = Vec::new();
        for start in 1..=m {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut a = start;
            while !seen[a - 1] {
                seen[a - 1] = true;
                cycle.push(a);
                a = self.apply(a);
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(|c| c.len() as u32).collect())
    }

    /// The permutation induced at a child attached in position `anchor` when
    /// this permutation reorients the parent: a ↦ σ(anchor+a) − σ(anchor),
    /// with sums and differences reduced into {1..m}.
    pub fn transport(&self, anchor: usize) -> Permutation {
        let m = self.degree();
        assert!((1..=m).contains(&anchor), "anchor out of range");
        let reduce = |v: usize| (v - 1) % m + 1;
        let images = (1..=m)
            .map(|a| reduce(self.apply(reduce(anchor + a)) + m - self.apply(anchor)))
            .collect();
        Permutation { images }
    }

    /// All m! permutations of {1..m}, lexicographic by image sequence.
    pub fn all(m: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut images: Vec<usize> = (1..=m).collect();
        permute_into(&mut images, 0, &mut out);
        out.sort_by(|a, b| a.images.cmp(&b.images));
        out
    }
}

fn permute_into(images: &mut Vec<usize>, at: usize, out: &mut Vec<Permutation>) {
    if at == images.len() {
        out.push(Permutation { images: images.clone() });
        return;
    }
    for i in at..images.len() {
        images.swap(at, i);
        permute_into(images, at + 1, out);
        images.swap(at, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    /// Independent p(n) oracle: pentagonal-number recurrence.
    fn partition_count(n: usize) -> u64 {
        let mut table = vec![0u64; n + 1];
        table[0] = 1;
        for i in 1..=n {
            let mut sum: i64 = 0;
            let mut k: i64 = 1;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                sum += sign * table[i - g1] as i64;
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= i {
                    sum += sign * table[i - g2] as i64;
                }
                k += 1;
            }
            table[i] = sum as u64;
        }
        table[n]
    }

    #[test]
    fn partitions_of_zero_is_single_empty() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
    }

    #[test]
    fn partitions_of_two() {
        assert_eq!(partitions_of(2), vec![p(&[2]), p(&[1, 1])]);
    }

    #[test]
    fn partitions_of_five_has_seven_entries() {
        assert_eq!(partitions_of(5).len(), 7);
    }

    #[test]
    fn partition_counts_match_pentagonal_recurrence() {
        for n in 0..=12 {
            assert_eq!(partitions_of(n).len() as u64, partition_count(n as usize), "n={n}");
        }
    }

    #[test]
    fn reverse_lexicographic_order() {
        let all = partitions_of(4);
        assert_eq!(all, vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);
        for w in all.windows(2) {
            assert!(w[0] > w[1]);
        }
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(p(&[1, 1]).centralizer_order(), BigInt::from(2));
        assert_eq!(p(&[2]).centralizer_order(), BigInt::from(2));
        assert_eq!(p(&[3]).centralizer_order(), BigInt::from(3));
    }

    #[test]
    fn class_sizes_partition_the_symmetric_group() {
        for n in 0..=8u32 {
            let mut factorial = BigInt::one();
            for j in 1..=n {
                factorial *= BigInt::from(j);
            }
            let mut total = BigInt::zero();
            for lam in partitions_of(n) {
                let z = lam.centralizer_order();
                assert!((&factorial % &z).is_zero());
                total += &factorial / z;
            }
            assert_eq!(total, factorial, "n={n}");
        }
    }

    #[test]
    fn partition_powers() {
        assert_eq!(p(&[2]).power(2), p(&[1, 1]));
        assert_eq!(p(&[3]).power(2), p(&[3]));
        assert_eq!(p(&[4]).power(2), p(&[2, 2]));
    }

    #[test]
    fn partition_power_composes() {
        for n in 0..=6 {
            for lam in partitions_of(n) {
                for a in 1..=6 {
                    for b in 1..=6 {
                        assert_eq!(lam.power(a).power(b), lam.power(a * b), "{lam:?}^{a}^{b}");
                    }
                }
            }
        }
    }

    #[test]
    fn remove_and_add_parts() {
        assert_eq!(p(&[1, 1]).remove_part(1).unwrap(), p(&[1]));
        assert_eq!(p(&[2, 1]).remove_part(2).unwrap(), p(&[1]));
        assert_eq!(p(&[3, 3, 1]).remove_part(3).unwrap(), p(&[3, 1]));
        assert!(matches!(
            p(&[2]).remove_part(1),
            Err(PartitionError::PartAbsent { part: 1, .. })
        ));
        assert_eq!(p(&[1]).with_part(1), p(&[1, 1]));
        assert_eq!(p(&[2]).with_part(1), p(&[2, 1]));
        assert_eq!(Partition::empty().with_part(3), p(&[3]));
    }

    #[test]
    fn parse_normalizes_order() {
        let lam: Partition = "1,3,1".parse().unwrap();
        assert_eq!(lam, p(&[3, 1, 1]));
        assert!("1,0".parse::<Partition>().is_err());
        assert!("1,x".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
    }

    #[test]
    fn permutation_basics() {
        let id = Permutation::identity(4);
        assert_eq!(id.cycle_type(), p(&[1, 1, 1, 1]));
        let four_cycle = Permutation::from_images(vec![2, 3, 4, 1]).unwrap();
        assert_eq!(four_cycle.cycle_type(), p(&[4]));
        let double_transposition = Permutation::from_images(vec![2, 1, 4, 3, 5]).unwrap();
        assert_eq!(double_transposition.cycle_type(), p(&[2, 2, 1]));
        assert!(Permutation::from_images(vec![1, 1, 3]).is_none());
    }

    #[test]
    fn transport_of_identity_is_identity() {
        let id = Permutation::identity(3);
        for anchor in 1..=3 {
            assert_eq!(id.transport(anchor), id);
        }
    }

    #[test]
    fn transport_is_always_a_bijection() {
        for sigma in Permutation::all(3) {
            for anchor in 1..=3 {
                let t = sigma.transport(anchor);
                assert!(Permutation::from_images(t.images.clone()).is_some());
            }
        }
    }

    #[test]
    fn transport_at_fixed_point_preserves_cycle_type() {
        // Exhaustive over S_4 here; the acceptance suite pushes this to S_6.
        for sigma in Permutation::all(4) {
            for anchor in 1..=4 {
                if sigma.apply(anchor) == anchor {
                    assert_eq!(sigma.transport(anchor).cycle_type(), sigma.cycle_type());
                }
            }
        }
    }

    #[test]
    fn cyclewise_transport_product_matches_partition_power() {
        for sigma in Permutation::all(4) {
            let lam = sigma.cycle_type();
            for cycle in sigma.cycles() {
                let len = cycle.len();
                for rotation in 0..len {
                    let mut product = Permutation::identity(4);
                    for idx in 0..len {
                        let anchor = cycle[(rotation + idx) % len];
                        product = sigma.transport(anchor).compose(&product);
                    }
                    assert_eq!(product.cycle_type(), lam.power(len as u32));
                }
            }
        }
    }
}
