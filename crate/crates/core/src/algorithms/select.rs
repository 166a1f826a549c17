//! Choosing the set `W` of jobs to move or keep on machine 2.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::subset::{Groups, Int, Scaled};

/// Default `|candidates|` cap for [`select_max_subset`].
pub const DEFAULT_SUBSET_LIMIT: usize = 24;

/// A chosen subset. `chosen` holds positions in the candidate list until an algorithm
/// rewrites them to job indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WSelection {
    pub chosen: Vec<usize>,
    #[serde(with = "crate::rational::serde_str")]
    pub total: Rational,
    /// Minimum size that has to leave machine 2, where the step defines one.
    #[serde(with = "crate::rational::serde_opt_str")]
    pub target_deficit: Option<Rational>,
}

impl WSelection {
    fn from_positions(candidates: &[Rational], chosen: Vec<usize>) -> Self {
        let total = chosen
            .iter()
            .fold(Rational::zero(), |acc, &i| acc + &candidates[i]);
        WSelection {
            chosen,
            total,
            target_deficit: None,
        }
    }
}

pub fn select_max_subset(candidates: &[Rational], cap: &Rational) -> Result<WSelection> {
    select_max_subset_with_limit(candidates, cap, DEFAULT_SUBSET_LIMIT)
}

/// Subset of maximum total not exceeding `cap`. Among equal totals returns the
/// lexicographically smallest sorted position list.
pub fn select_max_subset_with_limit(
    candidates: &[Rational],
    cap: &Rational,
    limit: usize,
) -> Result<WSelection> {
    if candidates.len() > limit {
        return Err(Error::SizeLimit {
            size: candidates.len(),
            limit,
        });
    }
    let mut all: Vec<&Rational> = vec![cap];
    all.extend(candidates.iter());
    let chosen = match Scaled::new(&all) {
        Scaled::Small(v, _) => lex_max_subset::<i128>(v),
        Scaled::Big(v, _) => lex_max_subset::<BigInt>(v),
    };
    Ok(WSelection::from_positions(candidates, chosen))
}

fn lex_max_subset<T: Int>(mut v: Vec<T>) -> Vec<usize> {
    let cap = v.remove(0);
    let Some(mut rem) = Groups::new(v.iter().cloned()).max_at_most(&cap) else {
        return Vec::new();
    };
    // Take each position in order as long as the rest can still hit the optimum exactly.
    let mut chosen = Vec::new();
    for i in 0..v.len() {
        if rem.is_zero() {
            break;
        }
        if v[i] > rem {
            continue;
        }
        let after = rem.clone() - v[i].clone();
        if Groups::new(v[i + 1..].iter().cloned()).hits(&after) {
            chosen.push(i);
            rem = after;
        }
    }
    chosen
}

/// Shortest prefix with total at least `floor`; the whole list if none reaches it.
pub fn select_prefix_min(sorted: &[Rational], floor: &Rational) -> WSelection {
    let mut total = Rational::zero();
    for (i, s) in sorted.iter().enumerate() {
        if total >= *floor {
            return WSelection::from_positions(sorted, (0..i).collect());
        }
        total += s;
    }
    WSelection::from_positions(sorted, (0..sorted.len()).collect())
}

/// Longest prefix with total at most `cap` (possibly empty).
pub fn select_prefix_max(sorted: &[Rational], cap: &Rational) -> WSelection {
    let mut total = Rational::zero();
    let mut len = 0;
    for s in sorted {
        if &total + s > *cap {
            break;
        }
        total += s;
        len += 1;
    }
    WSelection::from_positions(sorted, (0..len).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, q};
    use proptest::prelude::*;

    /// All subsets, best total first, then lexicographically smallest position list.
    fn brute_max(c: &[Rational], cap: &Rational) -> (Rational, Vec<usize>) {
        let mut best: Option<(Rational, Vec<usize>)> = None;
        for mask in 0u32..1 << c.len() {
            let set: Vec<usize> = (0..c.len()).filter(|i| mask >> i & 1 == 1).collect();
            let t: Rational = set.iter().map(|&i| &c[i]).sum();
            if t > *cap {
                continue;
            }
            let better = match &best {
                None => true,
                Some((bt, bs)) => t > *bt || (t == *bt && set < *bs),
            };
            if better {
                best = Some((t, set));
            }
        }
        best.unwrap()
    }

    #[test]
    fn max_subset_examples() {
        let w = select_max_subset(&[q(13, 20), q(7, 10)], &int(1)).unwrap();
        assert_eq!((w.chosen, w.total), (vec![1], q(7, 10)));
        let w = select_max_subset(&[], &int(1)).unwrap();
        assert_eq!((w.chosen, w.total), (vec![], int(0)));
        let w = select_max_subset(&[q(1, 2), q(1, 2), q(1, 2)], &int(1)).unwrap();
        assert_eq!((w.chosen, w.total), (vec![0, 1], int(1)));
    }

    #[test]
    fn max_subset_limit() {
        let c = vec![q(1, 100); 25];
        assert_eq!(
            select_max_subset(&c, &int(1)).unwrap_err(),
            Error::SizeLimit {
                size: 25,
                limit: 24
            }
        );
        assert!(select_max_subset_with_limit(&c, &int(1), 30).is_ok());
    }

    #[test]
    fn prefix_examples() {
        let w = select_prefix_min(&[q(7, 20), q(17, 50)], &q(7, 30));
        assert_eq!((w.chosen, w.total), (vec![0], q(7, 20)));
        let w = select_prefix_max(&[q(13, 20)], &q(49, 100));
        assert!(w.chosen.is_empty());
        let w = select_prefix_min(&[q(1, 10), q(1, 10)], &q(1, 2));
        assert_eq!((w.chosen, w.total), (vec![0, 1], q(1, 5)));
        // A zero floor is met by the empty prefix.
        assert!(select_prefix_min(&[q(1, 10)], &int(0)).chosen.is_empty());
    }

    proptest! {
        #[test]
        fn max_subset_matches_brute_force(
            c in prop::collection::vec((1i64..25, 1i64..8), 0..11),
            cap in (0i64..40, 1i64..8),
        ) {
            let c: Vec<Rational> = c.into_iter().map(|(n, d)| q(n, d)).collect();
            let cap = q(cap.0, cap.1);
            let w = select_max_subset(&c, &cap).unwrap();
            let (bt, bs) = brute_max(&c, &cap);
            prop_assert_eq!(w.total, bt);
            prop_assert_eq!(w.chosen, bs);
        }

        #[test]
        fn prefixes_are_extremal(c in prop::collection::vec((1i64..25, 1i64..8), 0..10), t in (0i64..30, 1i64..8)) {
            let mut c: Vec<Rational> = c.into_iter().map(|(n, d)| q(n, d)).collect();
            c.sort_by(|a, b| b.cmp(a));
            let t = q(t.0, t.1);
            let prefix = |k: usize| -> Rational { c[..k].iter().sum() };
            let lo = select_prefix_min(&c, &t);
            let k = lo.chosen.len();
            prop_assert_eq!(&lo.total, &prefix(k));
            if k < c.len() || prefix(c.len()) >= t {
                prop_assert!(lo.total >= t);
                prop_assert!(k == 0 || prefix(k - 1) < t);
            }
            let hi = select_prefix_max(&c, &t);
            let k = hi.chosen.len();
            prop_assert!(hi.total <= t);
            prop_assert!(k == c.len() || prefix(k + 1) > t);
        }
    }
}
