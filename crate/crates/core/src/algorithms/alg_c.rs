use crate::bound::Regime;
use crate::error::Result;
use crate::job::{Gos, Job, MachineId};
use crate::rational::{int, Rational};
use crate::state::ScheduleState;

use super::{
    migrate_to_m1, require_regime, select_prefix_min, AlgorithmId, Placement, Scheduler, SortedY,
    Step,
};

/// Scheduler for `1/2 <= m < 2/3` with makespan at most `2 - m`.
#[derive(Debug, Clone)]
pub struct AlgC {
    m: Rational,
    cap: Rational,
}

impl AlgC {
    pub fn new(m: &Rational) -> Result<Self> {
        require_regime(AlgorithmId::C, m, Regime::LowC)?;
        Ok(AlgC {
            m: m.clone(),
            cap: int(2) - m,
        })
    }
}

impl Scheduler for AlgC {
    fn id(&self) -> AlgorithmId {
        AlgorithmId::C
    }

    fn on_arrival(&self, state: &ScheduleState, job: &Job) -> Result<Placement> {
        let y = state.y();
        let p = &job.size;
        if job.gos == Gos::One || *y >= self.m {
            return Ok(Placement::simple(MachineId::M1, Step::Two));
        }
        if y + p <= self.cap {
            return Ok(Placement::simple(MachineId::M2, Step::Three));
        }
        if state.max_y() > &self.m * p {
            return Ok(Placement::simple(MachineId::M1, Step::Four));
        }
        // Step 5: the shortest sorted prefix covering the overflow, all of Y otherwise.
        let gamma = p + y - &self.cap;
        let ys = SortedY::of(state);
        let w = ys.to_jobs(select_prefix_min(&ys.sizes, &gamma), gamma);
        Ok(migrate_to_m1(w, Step::Five))
    }
}
