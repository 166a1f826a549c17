use std::collections::BTreeSet;

use crate::bound::{mu, Regime};
use crate::error::Result;
use crate::job::{Gos, Job, MachineId};
use crate::rational::{int, Rational};
use crate::state::{AssignmentDecision, Migration, ScheduleState};

use super::{require_regime, select_max_subset, AlgorithmId, Placement, Scheduler, Step};

/// Scheduler for `m >= 5/2`: keeps machine 2 within `[1 - mu, 1 + mu]` and, when a
/// job cannot be appended, repacks machine 2 with a maximum subset of all GoS-2
/// jobs not exceeding 1.
#[derive(Debug, Clone)]
pub struct AlgA {
    mu: Rational,
    low: Rational,
    high: Rational,
}

impl AlgA {
    pub fn new(m: &Rational) -> Result<Self> {
        require_regime(AlgorithmId::A, m, Regime::High)?;
        let mu = mu(m);
        Ok(AlgA {
            low: int(1) - &mu,
            high: int(1) + &mu,
            mu,
        })
    }

    pub fn mu(&self) -> &Rational {
        &self.mu
    }
}

impl Scheduler for AlgA {
    fn id(&self) -> AlgorithmId {
        AlgorithmId::A
    }

    fn on_arrival(&self, state: &ScheduleState, job: &Job) -> Result<Placement> {
        let y = state.y();
        if job.gos == Gos::One || *y >= self.low {
            return Ok(Placement::simple(MachineId::M1, Step::Two));
        }
        if y + &job.size <= self.high {
            return Ok(Placement::simple(MachineId::M2, Step::Three));
        }

        // Step 4: W over Z ∪ Y ∪ {j}, candidates in arrival order.
        let mut pool: Vec<(&Job, Option<MachineId>)> = state
            .assignment()
            .filter(|(j, _)| j.gos == Gos::Two)
            .map(|(j, m)| (j, Some(m)))
            .collect();
        pool.push((job, None));
        let sizes: Vec<Rational> = pool.iter().map(|(j, _)| j.size.clone()).collect();
        let mut w = select_max_subset(&sizes, &int(1))?;
        w.chosen = w.chosen.iter().map(|&i| pool[i].0.index).collect();
        let on_m2: BTreeSet<usize> = w.chosen.iter().copied().collect();

        let migrations = pool
            .iter()
            .filter_map(|(j, current)| {
                let current = (*current)?;
                let wanted = if on_m2.contains(&j.index) {
                    MachineId::M2
                } else {
                    MachineId::M1
                };
                (wanted != current).then_some(Migration {
                    job: j.index,
                    to: wanted,
                })
            })
            .collect();
        let target = if on_m2.contains(&job.index) {
            MachineId::M2
        } else {
            MachineId::M1
        };
        Ok(Placement {
            decision: AssignmentDecision { target, migrations },
            step: Step::Four,
            selection: Some(w),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::testutil::{machines, run};
    use crate::error::Error;
    use crate::rational::q;
    use MachineId::*;

    #[test]
    fn steps_two_and_three() {
        let m = q(5, 2);
        let a = AlgA::new(&m).unwrap();
        assert_eq!(a.mu(), &q(1, 4));
        let (s, _, p) = run(&a, m, &[(4, 5, 2), (3, 5, 2)]);
        assert_eq!(machines(&s), vec![M2, M1]);
        assert_eq!((p[0].step, p[1].step), (Step::Three, Step::Two));
        assert_eq!((s.load1(), s.load2()), (q(3, 5), q(4, 5)));
    }

    #[test]
    fn step_four_repacks() {
        let m = q(5, 2);
        let (s, ledger, p) = run(&AlgA::new(&m).unwrap(), m, &[(13, 20, 2), (7, 10, 2)]);
        assert_eq!(p[1].step, Step::Four);
        assert_eq!(p[1].selection.as_ref().unwrap().chosen, vec![2]);
        assert_eq!(
            p[1].decision,
            AssignmentDecision {
                target: M2,
                migrations: vec![Migration { job: 1, to: M1 }]
            }
        );
        assert_eq!(machines(&s), vec![M1, M2]);
        assert_eq!(ledger.records[1].migrated, q(13, 20));
        assert!(ledger.records[1].migrated <= ledger.records[1].budget);
    }

    #[test]
    fn gos1_goes_to_m1() {
        let m = q(5, 2);
        let (s, ledger, p) = run(&AlgA::new(&m).unwrap(), m, &[(4, 5, 2), (1, 10, 1)]);
        assert_eq!(machines(&s), vec![M2, M1]);
        assert_eq!(p[1].step, Step::Two);
        assert_eq!(ledger.records[1].migrated, int(0));
    }

    #[test]
    fn regime_checked() {
        assert!(matches!(
            AlgA::new(&q(12, 5)),
            Err(Error::RegimeMismatch { .. })
        ));
    }
}
