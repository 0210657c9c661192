//! Integer partitions: the index set of the Schur basis.
//!
//! A [`Partition`] is stored without trailing zeros, so the empty partition
//! is the unique partition of weight 0 and structural equality is equality
//! of partitions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// `Ord` is lexicographic on the parts. Reports list partitions in the
/// reverse of this order (descending lexicographic).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; an increase or a zero followed by a positive part is rejected.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::ParsePartition {
                input: format!("{parts:?}"),
                reason: format!("part {} is followed by larger part {}", w[0], w[1]),
            });
        }
        Ok(Self::from_sorted(parts))
    }

    /// Builds a partition from parts already known to be weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    /// A single row `(n)`; the empty partition when `n == 0`.
    pub fn row(n: u32) -> Self {
        Self::from_sorted(vec![n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    /// Componentwise sum, zero-padding the shorter operand.
    pub fn componentwise_sum(&self, other: &Partition) -> Partition {
        let (long, short) = if self.length() >= other.length() {
            (self, other)
        } else {
            (other, self)
        };
        let mut parts = long.0.clone();
        for (p, q) in parts.iter_mut().zip(&short.0) {
            *p += q;
        }
        Partition(parts)
    }

    /// `(n, λ_1, …, λ_l)`.
    pub fn prepend_row(&self, n: u32) -> Result<Partition> {
        if n < self.first() {
            return Err(Error::RowTooShort {
                row: n,
                first: self.first(),
            });
        }
        let mut parts = Vec::with_capacity(self.length() + 1);
        parts.push(n);
        parts.extend_from_slice(&self.0);
        Ok(Self::from_sorted(parts))
    }

    /// `inner ⊆ self` and `self / inner` has at most one cell per column,
    /// i.e. the two partitions interlace.
    pub fn is_horizontal_strip_over(&self, inner: &Partition) -> bool {
        is_horizontal_strip(inner, self)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// All partitions of `weight`, in descending lexicographic order.
    pub fn all_of_weight(weight: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill_partitions(weight, weight, &mut current, &mut out);
        out
    }

    /// All partitions of weight at most `max_weight`, grouped by weight.
    pub fn all_up_to_weight(max_weight: u32) -> Vec<Partition> {
        (0..=max_weight).flat_map(Self::all_of_weight).collect()
    }
}

fn fill_partitions(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for p in (1..=remaining.min(max_part)).rev() {
        current.push(p);
        fill_partitions(remaining - p, p, current, out);
        current.pop();
    }
}

/// True iff `outer / inner` is a horizontal strip:
/// `outer_1 ≥ inner_1 ≥ outer_2 ≥ inner_2 ≥ …`.
pub fn is_horizontal_strip(inner: &Partition, outer: &Partition) -> bool {
    if outer.length() > inner.length() + 1 {
        return false;
    }
    (0..outer.length().max(inner.length())).all(|i| {
        let (o, n) = (outer.part(i), inner.part(i));
        o >= n && (i == 0 || inner.part(i - 1) >= o)
    })
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"4,2,1"`, `"(4,2,1)"` or `"-"` for the empty partition.
    /// Zeros and increasing sequences are rejected.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::ParsePartition {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed)
            .trim();
        if inner == "-" || inner.is_empty() && trimmed.starts_with('(') {
            return Ok(Partition::empty());
        }
        if inner.is_empty() {
            return Err(bad("empty input; use \"-\" for the empty partition"));
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|e| bad(&e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(bad("parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(bad("parts must be weakly decreasing"));
        }
        Ok(Partition(parts))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand used heavily in tests: `partition![3, 2]`.
#[macro_export]
macro_rules! partition {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::Partition::new(vec![$($p),+]).expect("literal partition")
    };
}

// `Hash`/`Eq` are derived from the inner vector, so they agree with the
// slice impls and hashed maps keyed by `Partition` can be probed by `&[u32]`.
impl std::borrow::Borrow<[u32]> for Partition {
    fn borrow(&self) -> &[u32] {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn componentwise_sum_examples() {
        assert_eq!(p(&[2, 1]).componentwise_sum(&p(&[1, 1])), p(&[3, 2]));
        assert_eq!(p(&[3]).componentwise_sum(&p(&[1, 1])), p(&[4, 1]));
        assert_eq!(Partition::empty().componentwise_sum(&p(&[5, 2])), p(&[5, 2]));
    }

    #[test]
    fn prepend_row_examples() {
        assert_eq!(p(&[2, 1]).prepend_row(4).unwrap(), p(&[4, 2, 1]));
        assert_eq!(p(&[3]).prepend_row(2), Err(Error::RowTooShort { row: 2, first: 3 }));
        assert_eq!(Partition::empty().prepend_row(3).unwrap(), p(&[3]));
        assert_eq!(Partition::empty().prepend_row(0).unwrap(), Partition::empty());
    }

    #[test]
    fn horizontal_strip_examples() {
        assert!(is_horizontal_strip(&p(&[2, 1]), &p(&[4, 2])));
        // 3 ≥ 2 ≥ 2 ≥ 0: the two new cells sit in different columns.
        assert!(is_horizontal_strip(&p(&[2]), &p(&[3, 2])));
        assert!(is_horizontal_strip(&p(&[1, 1]), &p(&[1, 1])));
        assert!(!is_horizontal_strip(&p(&[1]), &p(&[1, 1, 1])));
        assert!(!is_horizontal_strip(&p(&[2, 2]), &p(&[3, 1])));
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap(), p(&[3, 1]));
        assert_eq!(Partition::new(vec![0]).unwrap(), Partition::empty());
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn text_round_trip() {
        assert_eq!("4,2,1".parse::<Partition>().unwrap(), p(&[4, 2, 1]));
        assert_eq!("(1,1)".parse::<Partition>().unwrap(), p(&[1, 1]));
        assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[4, 2, 1]).to_string(), "4,2,1");
        assert_eq!(Partition::empty().to_string(), "-");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|w| Partition::all_of_weight(w).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        let five = Partition::all_of_weight(5);
        assert!(five.windows(2).all(|w| w[0] > w[1]));
    }

    /// Cell-by-cell oracle: every column of outer \ inner holds at most one cell.
    fn strip_by_columns(inner: &Partition, outer: &Partition) -> bool {
        if !outer.contains(inner) {
            return false;
        }
        let width = outer.first();
        (1..=width).all(|col| {
            let cells = (0..outer.length())
                .filter(|&r| outer.part(r) >= col && inner.part(r) < col)
                .count();
            cells <= 1
        })
    }

    #[test]
    fn horizontal_strip_matches_column_oracle() {
        let all = Partition::all_up_to_weight(12);
        for outer in &all {
            for inner in all.iter().filter(|q| q.weight() <= outer.weight()) {
                assert_eq!(
                    is_horizontal_strip(inner, outer),
                    strip_by_columns(inner, outer),
                    "{inner:?} ⊆ {outer:?}"
                );
            }
        }
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(1u32..2000, 0..8).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn sum_is_commutative_associative_with_identity(
            a in arb_partition(), b in arb_partition(), c in arb_partition()
        ) {
            prop_assert_eq!(a.componentwise_sum(&b), b.componentwise_sum(&a));
            prop_assert_eq!(
                a.componentwise_sum(&b).componentwise_sum(&c),
                a.componentwise_sum(&b.componentwise_sum(&c))
            );
            prop_assert_eq!(a.componentwise_sum(&Partition::empty()), a.clone());
            prop_assert_eq!(a.componentwise_sum(&b).weight(), a.weight() + b.weight());
        }

        #[test]
        fn prepend_row_weight_and_length(a in arb_partition(), extra in 0u32..50) {
            let n = a.first() + extra;
            let q = a.prepend_row(n).unwrap();
            prop_assert_eq!(q.weight(), n + a.weight());
            if n >= 1 {
                prop_assert_eq!(q.length(), a.length() + 1);
            }
        }

        #[test]
        fn display_parse_round_trip(a in arb_partition()) {
            prop_assert_eq!(a.to_string().parse::<Partition>().unwrap(), a);
        }
    }
}
