use crate::bound::Regime;
use crate::error::Result;
use crate::job::{Gos, Job, MachineId};
use crate::rational::{q, Rational};
use crate::state::ScheduleState;

use super::{
    keep_on_m1, migrate_to_m1, require_regime, select_prefix_max, select_prefix_min, AlgorithmId,
    Placement, Scheduler, SortedY, Step, WSelection,
};

/// Scheduler for `3/4 <= m < 5/2`. Keeps every load at most 5/4 while migrating at
/// most `3/4` of each arriving size, so it never uses more than factor 3/4.
#[derive(Debug, Clone)]
pub struct AlgB;

impl AlgB {
    pub fn new(m: &Rational) -> Result<Self> {
        require_regime(AlgorithmId::B, m, Regime::Mid)?;
        Ok(AlgB)
    }
}

impl Scheduler for AlgB {
    fn id(&self) -> AlgorithmId {
        AlgorithmId::B
    }

    fn on_arrival(&self, state: &ScheduleState, job: &Job) -> Result<Placement> {
        let (three_q, five_q, quarter) = (q(3, 4), q(5, 4), q(1, 4));
        let y = state.y();
        let p = &job.size;
        if job.gos == Gos::One || *y >= three_q {
            return Ok(Placement::simple(MachineId::M1, Step::Two));
        }
        if y + p <= five_q {
            return Ok(Placement::simple(MachineId::M2, Step::Three));
        }

        let ys = SortedY::of(state);
        let gamma = y + p - &five_q;
        let budget = &three_q * p;

        if *p >= three_q {
            let w = ys.to_jobs(select_prefix_max(&ys.sizes, &budget), gamma);
            return Ok(if y - &w.total + p > five_q {
                keep_on_m1(w, Step::Four)
            } else {
                migrate_to_m1(w, Step::Four)
            });
        }

        // Step 5.
        let max_y = state.max_y();
        if p + &max_y > five_q {
            return Ok(Placement::simple(MachineId::M1, Step::Five));
        }
        let half_y = y / Rational::from_integer(2.into());
        let top = WSelection {
            chosen: vec![ys.jobs[0].index],
            total: max_y.clone(),
            target_deficit: Some(gamma.clone()),
        };
        let w = if max_y >= half_y {
            ys.complement(&top)
        } else if max_y >= quarter {
            top
        } else {
            let w = ys.to_jobs(select_prefix_min(&ys.sizes, &quarter), gamma);
            if w.total > budget {
                ys.complement(&w)
            } else {
                w
            }
        };
        Ok(migrate_to_m1(w, Step::Five))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::testutil::{machines, run};
    use crate::rational::int;
    use MachineId::*;

    #[test]
    fn step_five_large_pair_goes_to_m1() {
        let (s, _, p) = run(&AlgB, int(1), &[(7, 10, 2), (3, 5, 2)]);
        assert_eq!(p[1].step, Step::Five);
        assert_eq!(machines(&s), vec![M2, M1]);
        assert_eq!((s.load1(), s.load2()), (q(3, 5), q(7, 10)));
    }

    #[test]
    fn saturated_m2_sends_to_m1() {
        let (s, _, p) = run(&AlgB, int(1), &[(2, 5, 2), (2, 5, 2), (3, 5, 2)]);
        assert_eq!(machines(&s), vec![M2, M2, M1]);
        assert_eq!(p[2].step, Step::Two);
    }

    #[test]
    fn step_five_complement_of_max() {
        let (s, ledger, p) = run(&AlgB, int(1), &[(7, 20, 2), (7, 20, 2), (3, 5, 2)]);
        let w = p[2].selection.as_ref().unwrap();
        assert_eq!(p[2].step, Step::Five);
        assert_eq!(w.chosen, vec![2]);
        assert_eq!(w.total, q(7, 20));
        assert_eq!(w.target_deficit, Some(q(1, 20)));
        assert_eq!(machines(&s), vec![M2, M1, M2]);
        assert_eq!(s.load2(), q(19, 20));
        assert!(ledger.records[2].migrated <= q(3, 4) * q(3, 5));
    }

    #[test]
    fn step_five_single_max_job() {
        // y = 13/20, max 3/10 lies in [1/4, y/2).
        let (s, _, p) = run(
            &AlgB,
            int(1),
            &[(3, 10, 2), (1, 5, 2), (3, 20, 2), (7, 10, 2)],
        );
        assert_eq!(p[3].step, Step::Five);
        assert_eq!(p[3].selection.as_ref().unwrap().chosen, vec![1]);
        assert_eq!(s.load2(), q(1, 5) + q(3, 20) + q(7, 10));
    }

    #[test]
    fn step_five_sand_prefix() {
        // Seven jobs of 1/10 then 3/5: prefix of 3 reaches 1/4, w = 3/10 <= 9/20.
        let mut jobs = vec![(1, 10, 2); 7];
        jobs.push((3, 5, 2));
        let (s, _, p) = run(&AlgB, int(1), &jobs);
        let w = p[7].selection.as_ref().unwrap();
        assert_eq!(w.chosen, vec![1, 2, 3]);
        assert_eq!(s.load2(), q(2, 5) + q(3, 5));
    }

    #[test]
    fn step_four_migrates_prefix() {
        // y = 3/5 from [2/5, 1/5]; p = 9/10: budget 27/40 admits both, y - w + p = 9/10.
        let (s, _, p) = run(&AlgB, int(1), &[(2, 5, 2), (1, 5, 2), (9, 10, 2)]);
        assert_eq!(p[2].step, Step::Four);
        assert_eq!(machines(&s), vec![M1, M1, M2]);
    }

    #[test]
    fn step_four_keeps_job_on_m1() {
        // y = 7/10 (one job), p = 4/5: budget 3/5 < 7/10 so W = {}, 3/2 > 5/4.
        let (s, _, p) = run(&AlgB, int(1), &[(7, 10, 2), (4, 5, 2)]);
        assert_eq!(p[1].step, Step::Four);
        assert!(p[1].decision.migrations.is_empty());
        assert_eq!(machines(&s), vec![M2, M1]);
    }
}
