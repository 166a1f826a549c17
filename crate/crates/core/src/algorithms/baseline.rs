use crate::error::Result;
use crate::job::{Gos, Job, MachineId};
use crate::rational::half;
use crate::state::ScheduleState;

use super::{AlgorithmId, Placement, Scheduler, Step};

/// Migration-free threshold rule: GoS-2 jobs fill machine 2 while its load is below
/// 1/2, then everything goes to machine 1. Makespan at most 3/2 when the optimum is 1:
/// if machine 2 never reaches 1/2, machine 1 holds only GoS-1 jobs; otherwise machine 1
/// holds at most `2 - 1/2`.
#[derive(Debug, Clone, Copy)]
pub struct Baseline;

impl Scheduler for Baseline {
    fn id(&self) -> AlgorithmId {
        AlgorithmId::Baseline
    }

    fn on_arrival(&self, state: &ScheduleState, job: &Job) -> Result<Placement> {
        let target = if job.gos == Gos::Two && *state.y() < half() {
            MachineId::M2
        } else {
            MachineId::M1
        };
        Ok(Placement::simple(target, Step::Rule))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::testutil::{machines, run};
    use crate::rational::{int, q};
    use MachineId::*;

    #[test]
    fn lower_bound_instance() {
        let (s, _, _) = run(&Baseline, q(1, 4), &[(1, 2, 2), (1, 1, 2), (1, 2, 1)]);
        assert_eq!(machines(&s), vec![M2, M1, M1]);
        assert_eq!((s.load1(), s.load2()), (q(3, 2), q(1, 2)));
    }

    #[test]
    fn single_unit_job() {
        let (s, _, _) = run(&Baseline, int(0), &[(1, 1, 2)]);
        assert_eq!(machines(&s), vec![M2]);
        assert_eq!(s.makespan(), int(1));
    }

    #[test]
    fn sand_then_gos1() {
        let mut jobs = vec![(1, 10, 2); 10];
        jobs.push((1, 1, 1));
        let (s, ledger, _) = run(&Baseline, int(0), &jobs);
        assert_eq!((s.load1(), s.load2()), (q(3, 2), q(1, 2)));
        assert_eq!(ledger.max_ratio, int(0));
    }
}
