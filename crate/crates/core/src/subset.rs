//! Exact subset-sum queries over rationals.
//!
//! Values are scaled to a common denominator and searched as integers (`i128` when
//! they fit, `BigInt` otherwise). Equal values are grouped so a multiset of `k`
//! identical items costs `k + 1` branches instead of `2^k`.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Num, One, ToPrimitive};

use crate::rational::Rational;

pub(crate) trait Int: Num + Clone + Ord + Debug + Into<BigInt> {}
impl<T: Num + Clone + Ord + Debug + Into<BigInt>> Int for T {}

/// Distinct values in non-increasing order with multiplicities.
#[derive(Debug, Clone)]
pub(crate) struct Groups<T> {
    values: Vec<T>,
    counts: Vec<usize>,
    /// `suffix[i]` = total of groups `i..`.
    suffix: Vec<T>,
}

impl<T: Int> Groups<T> {
    pub fn new(items: impl IntoIterator<Item = T>) -> Self {
        let mut items: Vec<T> = items.into_iter().collect();
        items.sort_by(|a, b| b.cmp(a));
        let mut values: Vec<T> = Vec::new();
        let mut counts: Vec<usize> = Vec::new();
        for v in items {
            match values.last() {
                Some(last) if *last == v => *counts.last_mut().unwrap() += 1,
                _ => {
                    values.push(v);
                    counts.push(1);
                }
            }
        }
        let mut suffix = vec![T::zero(); values.len() + 1];
        for i in (0..values.len()).rev() {
            suffix[i] = suffix[i + 1].clone() + times(&values[i], counts[i]);
        }
        Groups {
            values,
            counts,
            suffix,
        }
    }

    pub fn total(&self) -> T {
        self.suffix[0].clone()
    }

    /// log2 of the number of distinct sub-multisets, rounded up.
    pub fn search_bits(&self) -> usize {
        let mut bits = 0f64;
        for &c in &self.counts {
            bits += ((c + 1) as f64).log2();
        }
        bits.ceil() as usize
    }

    /// Largest achievable sum that does not exceed `cap` (`None` if `cap < 0`).
    pub fn max_at_most(&self, cap: &T) -> Option<T> {
        if *cap < T::zero() {
            return None;
        }
        let mut best = T::zero();
        self.max_dfs(0, T::zero(), cap, &mut best);
        Some(best)
    }

    fn max_dfs(&self, i: usize, acc: T, cap: &T, best: &mut T) {
        if acc > *best {
            *best = acc.clone();
        }
        if i == self.values.len() || *best == *cap {
            return;
        }
        if acc.clone() + self.suffix[i].clone() <= *best {
            return;
        }
        let v = &self.values[i];
        let room = cap.clone() - acc.clone();
        let fit = (room / v.clone()).to_usize_lossy().min(self.counts[i]);
        for c in (0..=fit).rev() {
            self.max_dfs(i + 1, acc.clone() + times(v, c), cap, best);
            if *best == *cap {
                return;
            }
        }
    }

    /// Smallest achievable sum that is at least `floor` (`None` if even the total is short).
    pub fn min_at_least(&self, floor: &T) -> Option<T> {
        if self.total() < *floor {
            return None;
        }
        let mut best = self.total();
        self.min_dfs(0, T::zero(), floor, &mut best);
        Some(best)
    }

    fn min_dfs(&self, i: usize, acc: T, floor: &T, best: &mut T) {
        if acc >= *best {
            return;
        }
        if acc >= *floor {
            *best = acc;
            return;
        }
        if i == self.values.len() || acc.clone() + self.suffix[i].clone() < *floor {
            return;
        }
        let v = &self.values[i];
        for c in (0..=self.counts[i]).rev() {
            self.min_dfs(i + 1, acc.clone() + times(v, c), floor, best);
            if *best == *floor {
                return;
            }
        }
    }

    /// Whether some sub-multiset sums to exactly `target`.
    pub fn hits(&self, target: &T) -> bool {
        *target >= T::zero() && self.max_at_most(target).as_ref() == Some(target)
    }
}

fn times<T: Int>(v: &T, c: usize) -> T {
    let mut acc = T::zero();
    for _ in 0..c {
        acc = acc + v.clone();
    }
    acc
}

trait LossyUsize {
    fn to_usize_lossy(&self) -> usize;
}

impl<T: Into<BigInt> + Clone> LossyUsize for T {
    fn to_usize_lossy(&self) -> usize {
        let b: BigInt = self.clone().into();
        b.to_usize().unwrap_or(usize::MAX)
    }
}

/// Rationals over a common denominator.
pub(crate) enum Scaled {
    Small(Vec<i128>, BigInt),
    Big(Vec<BigInt>, BigInt),
}

impl Scaled {
    pub fn new(values: &[&Rational]) -> Scaled {
        let denom = values
            .iter()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let ints: Vec<BigInt> = values
            .iter()
            .map(|v| v.numer() * (&denom / v.denom()))
            .collect();
        if ints.iter().all(|v| v.to_i64().is_some()) {
            Scaled::Small(ints.iter().map(|v| v.to_i128().unwrap()).collect(), denom)
        } else {
            Scaled::Big(ints, denom)
        }
    }
}

pub(crate) fn unscale<T: Int>(v: T, denom: &BigInt) -> Rational {
    Rational::new(v.into(), denom.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute(items: &[i128]) -> Vec<i128> {
        (0u32..1 << items.len())
            .map(|mask| {
                items
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, v)| *v)
                    .sum()
            })
            .collect()
    }

    #[test]
    fn grouped_identical_items() {
        let g = Groups::new(vec![3i128; 200]);
        assert_eq!(g.search_bits(), 8);
        assert_eq!(g.max_at_most(&100), Some(99));
        assert_eq!(g.min_at_least(&100), Some(102));
        assert!(g.hits(&300));
        assert!(!g.hits(&301));
    }

    #[test]
    fn empty() {
        let g = Groups::<i128>::new(vec![]);
        assert_eq!(g.max_at_most(&5), Some(0));
        assert_eq!(g.min_at_least(&0), Some(0));
        assert_eq!(g.min_at_least(&1), None);
        assert_eq!(g.max_at_most(&-1), None);
    }

    proptest! {
        #[test]
        fn matches_enumeration(items in prop::collection::vec(1i128..40, 0..12), t in 0i128..200) {
            let sums = brute(&items);
            let g = Groups::new(items.clone());
            prop_assert_eq!(g.max_at_most(&t), sums.iter().copied().filter(|&s| s <= t).max());
            prop_assert_eq!(g.min_at_least(&t), sums.iter().copied().filter(|&s| s >= t).min());
            prop_assert_eq!(g.hits(&t), sums.contains(&t));
            let big = Groups::new(items.iter().map(|&v| BigInt::from(v)));
            prop_assert_eq!(big.max_at_most(&BigInt::from(t)), g.max_at_most(&t).map(BigInt::from));
        }
    }
}
