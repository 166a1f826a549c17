use crate::bound::Regime;
use crate::error::Result;
use crate::job::{Gos, Job, MachineId};
use crate::rational::{int, min, Rational};
use crate::state::ScheduleState;

use super::{
    keep_on_m1, migrate_to_m1, require_regime, select_prefix_max, select_prefix_min, AlgorithmId,
    Placement, Scheduler, SortedY, Step,
};

/// Scheduler for `2/3 <= m < 3/4` with makespan at most `2 - m`. Aims to bring
/// machine 2 into `[m, 2 - m]` with a single repacking.
#[derive(Debug, Clone)]
pub struct AlgD {
    m: Rational,
    cap: Rational,
}

impl AlgD {
    pub fn new(m: &Rational) -> Result<Self> {
        require_regime(AlgorithmId::D, m, Regime::LowD)?;
        Ok(AlgD {
            m: m.clone(),
            cap: int(2) - m,
        })
    }
}

impl Scheduler for AlgD {
    fn id(&self) -> AlgorithmId {
        AlgorithmId::D
    }

    fn on_arrival(&self, state: &ScheduleState, job: &Job) -> Result<Placement> {
        let y = state.y();
        let p = &job.size;
        let m = &self.m;
        if job.gos == Gos::One || y >= m {
            return Ok(Placement::simple(MachineId::M1, Step::Two));
        }
        if y + p <= self.cap {
            return Ok(Placement::simple(MachineId::M2, Step::Three));
        }

        let ys = SortedY::of(state);
        let gamma = y + p - &self.cap;
        let budget = m * p;
        let (w, step) = if p >= m {
            (
                ys.to_jobs(select_prefix_max(&ys.sizes, &budget), gamma),
                Step::Four,
            )
        } else {
            let third = m / int(3);
            let mut w = ys.to_jobs(select_prefix_min(&ys.sizes, &third), gamma);
            if w.total > min(&(int(2) * &third), &budget) {
                w = ys.complement(&w);
            }
            (w, Step::Five)
        };
        Ok(if y - &w.total + p > self.cap {
            keep_on_m1(w, step)
        } else {
            migrate_to_m1(w, step)
        })
    }
}
