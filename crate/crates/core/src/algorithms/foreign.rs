//! Naive migration-free schedulers used as opponents for the adversaries.

use crate::error::Result;
use crate::job::{Gos, Job, MachineId};
use crate::state::ScheduleState;

use super::{AlgorithmId, Placement, Scheduler, Step};

/// Every GoS-2 job to machine 2.
#[derive(Debug, Clone, Copy)]
pub struct GreedyToM2;

/// Each job to the machine with the smaller current load (machine 1 on ties).
#[derive(Debug, Clone, Copy)]
pub struct LeastLoaded;

/// Everything on machine 1.
#[derive(Debug, Clone, Copy)]
pub struct AllToM1;

fn gos_gate(job: &Job, wanted: MachineId) -> Placement {
    let target = if job.gos == Gos::One {
        MachineId::M1
    } else {
        wanted
    };
    Placement::simple(target, Step::Rule)
}

impl Scheduler for GreedyToM2 {
    fn id(&self) -> AlgorithmId {
        AlgorithmId::GreedyToM2
    }

    fn on_arrival(&self, _state: &ScheduleState, job: &Job) -> Result<Placement> {
        Ok(gos_gate(job, MachineId::M2))
    }
}

impl Scheduler for LeastLoaded {
    fn id(&self) -> AlgorithmId {
        AlgorithmId::LeastLoaded
    }

    fn on_arrival(&self, state: &ScheduleState, job: &Job) -> Result<Placement> {
        let wanted = if state.load2() < state.load1() {
            MachineId::M2
        } else {
            MachineId::M1
        };
        Ok(gos_gate(job, wanted))
    }
}

impl Scheduler for AllToM1 {
    fn id(&self) -> AlgorithmId {
        AlgorithmId::AllToM1
    }

    fn on_arrival(&self, _state: &ScheduleState, _job: &Job) -> Result<Placement> {
        Ok(Placement::simple(MachineId::M1, Step::Rule))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::testutil::{machines, run};
    use crate::rational::int;
    use MachineId::*;

    #[test]
    fn placements() {
        let jobs = [(1, 2, 2), (1, 3, 2), (1, 4, 1), (1, 5, 2)];
        let (s, ..) = run(&GreedyToM2, int(0), &jobs);
        assert_eq!(machines(&s), vec![M2, M2, M1, M2]);
        let (s, ..) = run(&LeastLoaded, int(0), &jobs);
        assert_eq!(machines(&s), vec![M1, M2, M1, M2]);
        let (s, ..) = run(&AllToM1, int(0), &jobs);
        assert_eq!(machines(&s), vec![M1; 4]);
    }
}
