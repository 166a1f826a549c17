//! Brute-force offline optimum used as ground truth.
//!
//! GoS-1 jobs are pinned to machine 1, so an assignment is a choice of which GoS-2
//! jobs go to machine 2. The search is exhaustive over those choices (identical sizes
//! collapsed into multiplicities) with branch-and-bound pruning.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::job::{Gos, Job, MachineId};
use crate::rational::Rational;
use crate::subset::{unscale, Groups, Int, Scaled};

/// Default cap on the exhaustive search, as log2 of the number of candidate assignments.
pub const DEFAULT_LIMIT: usize = 24;

pub fn brute_opt(jobs: &[Job]) -> Result<Rational> {
    brute_opt_with_limit(jobs, DEFAULT_LIMIT)
}

pub fn brute_opt_with_limit(jobs: &[Job], limit: usize) -> Result<Rational> {
    let split = Split::new(jobs);
    match split.scaled() {
        Scaled::Small(v, d) => split.opt::<i128>(v, &d, limit),
        Scaled::Big(v, d) => split.opt::<BigInt>(v, &d, limit),
    }
}

/// Machine loads, restricted to each prefix, of one fixed optimal assignment of the
/// full job list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptimalPrefixLoads {
    #[serde(with = "crate::rational::serde_str")]
    pub opt: Rational,
    pub assignment: Vec<MachineId>,
    /// `loads[j-1] = (o_j1, o_j2)` after the first `j` jobs.
    #[serde(with = "crate::rational::serde_pairs")]
    pub loads: Vec<(Rational, Rational)>,
}

impl OptimalPrefixLoads {
    /// Machine-2 load after the first `j` jobs (0 for `j = 0`).
    pub fn o2(&self, j: usize) -> Rational {
        if j == 0 {
            Rational::zero()
        } else {
            self.loads[j - 1].1.clone()
        }
    }
}

/// Among optimal assignments picks the one with the smallest final machine-2 load,
/// then the lexicographically smallest in arrival order with `M1 < M2`.
pub fn opt_prefix_loads(jobs: &[Job]) -> Result<OptimalPrefixLoads> {
    let split = Split::new(jobs);
    let on_m2 = match split.scaled() {
        Scaled::Small(v, d) => split.tie_broken::<i128>(v, &d)?,
        Scaled::Big(v, d) => split.tie_broken::<BigInt>(v, &d)?,
    };
    let (opt, chosen) = on_m2;
    let mut assignment = Vec::with_capacity(jobs.len());
    let mut loads = Vec::with_capacity(jobs.len());
    let (mut o1, mut o2) = (Rational::zero(), Rational::zero());
    let mut k = 0;
    for j in jobs {
        let machine = match j.gos {
            Gos::One => MachineId::M1,
            Gos::Two => {
                let m = if chosen[k] {
                    MachineId::M2
                } else {
                    MachineId::M1
                };
                k += 1;
                m
            }
        };
        match machine {
            MachineId::M1 => o1 += &j.size,
            MachineId::M2 => o2 += &j.size,
        }
        assignment.push(machine);
        loads.push((o1.clone(), o2.clone()));
    }
    Ok(OptimalPrefixLoads {
        opt,
        assignment,
        loads,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonotoneReport {
    pub prefix_opts: Vec<String>,
    pub monotone: bool,
    pub bounded_by_full: bool,
}

impl MonotoneReport {
    pub fn ok(&self) -> bool {
        self.monotone && self.bounded_by_full
    }
}

/// Optimum of every prefix: non-decreasing and never above the full optimum.
pub fn prefix_opt_monotone_check(jobs: &[Job]) -> Result<MonotoneReport> {
    let opts = (1..=jobs.len())
        .map(|j| brute_opt(&jobs[..j]))
        .collect::<Result<Vec<_>>>()?;
    let full = opts.last().cloned().unwrap_or_else(Rational::zero);
    Ok(MonotoneReport {
        monotone: opts.windows(2).all(|w| w[0] <= w[1]),
        bounded_by_full: opts.iter().all(|o| *o <= full),
        prefix_opts: opts.iter().map(crate::rational::format_rational).collect(),
    })
}

struct Split<'a> {
    gos1_total: Rational,
    gos2: Vec<&'a Rational>,
}

impl<'a> Split<'a> {
    fn new(jobs: &'a [Job]) -> Self {
        let mut gos1_total = Rational::zero();
        let mut gos2 = Vec::new();
        for j in jobs {
            match j.gos {
                Gos::One => gos1_total += &j.size,
                Gos::Two => gos2.push(&j.size),
            }
        }
        Split { gos1_total, gos2 }
    }

    /// `[gos1_total, gos2...]` over a common denominator.
    fn scaled(&self) -> Scaled {
        let mut all = vec![&self.gos1_total];
        all.extend(self.gos2.iter().copied());
        Scaled::new(&all)
    }

    fn check_limit<T: Int>(&self, groups: &Groups<T>, limit: usize) -> Result<()> {
        if groups.search_bits() > limit {
            return Err(Error::SizeLimit {
                size: self.gos2.len(),
                limit,
            });
        }
        Ok(())
    }

    fn opt_scaled<T: Int>(x: &T, groups: &Groups<T>) -> T {
        let total = x.clone() + groups.total();
        let two = T::one() + T::one();
        // Best machine-2 load at or below half the total, and at or above it.
        let below = groups
            .max_at_most(&(total.clone() / two.clone()))
            .map(|s| total.clone() - s);
        let above = groups.min_at_least(&((total.clone() + T::one()) / two));
        let cand = match (below, above) {
            (Some(a), Some(b)) => std::cmp::min(a, b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => total,
        };
        // Machine 1 always carries the GoS-1 jobs.
        std::cmp::max(cand, x.clone())
    }

    fn opt<T: Int>(&self, v: Vec<T>, denom: &BigInt, limit: usize) -> Result<Rational> {
        let mut it = v.into_iter();
        let x = it.next().expect("gos1 slot");
        let groups = Groups::new(it);
        self.check_limit(&groups, limit)?;
        Ok(unscale(Self::opt_scaled(&x, &groups), denom))
    }

    /// Optimum plus, for each GoS-2 job in order, whether it sits on machine 2.
    fn tie_broken<T: Int>(&self, v: Vec<T>, denom: &BigInt) -> Result<(Rational, Vec<bool>)> {
        let x = v[0].clone();
        let sizes: Vec<T> = v[1..].to_vec();
        let groups = Groups::new(sizes.iter().cloned());
        self.check_limit(&groups, DEFAULT_LIMIT)?;
        let opt = Self::opt_scaled(&x, &groups);
        let total = x.clone() + groups.total();
        let lower = total - opt.clone();
        let mut rem = groups
            .min_at_least(&lower)
            .expect("an optimal machine-2 load exists");
        let mut chosen = Vec::with_capacity(sizes.len());
        for k in 0..sizes.len() {
            let rest = Groups::new(sizes[k + 1..].iter().cloned());
            if rest.hits(&rem) {
                chosen.push(false);
            } else {
                rem = rem - sizes[k].clone();
                chosen.push(true);
            }
        }
        debug_assert!(rem.is_zero());
        Ok((unscale(opt, denom), chosen))
    }
}
