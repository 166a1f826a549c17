//! Online schedulers.
//!
//! Every scheduler is a deterministic function of the visible schedule and the
//! arriving job. The caller applies the returned decision through
//! [`ScheduleState::apply`], which enforces the hierarchy and the migration budget.

mod alg_a;
mod alg_b;
mod alg_c;
mod alg_d;
mod baseline;
pub mod foreign;
pub mod select;

use serde::{Deserialize, Serialize};

pub use alg_a::AlgA;
pub use alg_b::AlgB;
pub use alg_c::AlgC;
pub use alg_d::AlgD;
pub use baseline::Baseline;
pub use foreign::{AllToM1, GreedyToM2, LeastLoaded};
pub use select::{
    select_max_subset, select_max_subset_with_limit, select_prefix_max, select_prefix_min,
    WSelection,
};

use crate::bound::Regime;
use crate::error::{Error, Result};
use crate::job::{Job, MachineId};
use crate::rational::{format_rational, Rational};
use crate::state::{AssignmentDecision, ScheduleState};

/// Which branch of a scheduler handled an arrival.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    /// Sent to machine 1 without migration (GoS 1 or machine 2 saturated).
    Two,
    /// Appended to machine 2 without migration.
    Three,
    Four,
    Five,
    /// Schedulers without numbered steps.
    Rule,
}

impl Step {
    pub fn is_repacking(self) -> bool {
        matches!(self, Step::Four | Step::Five)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Placement {
    pub decision: AssignmentDecision,
    pub step: Step,
    /// The `W` computed at this arrival, as job indices, when the step computes one.
    pub selection: Option<WSelection>,
}

impl Placement {
    pub(crate) fn simple(target: MachineId, step: Step) -> Self {
        Placement {
            decision: AssignmentDecision::place(target),
            step,
            selection: None,
        }
    }
}

pub trait Scheduler: Send + Sync {
    fn id(&self) -> AlgorithmId;

    fn on_arrival(&self, state: &ScheduleState, job: &Job) -> Result<Placement>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AlgorithmId {
    A,
    B,
    C,
    D,
    Baseline,
    GreedyToM2,
    LeastLoaded,
    AllToM1,
}

impl AlgorithmId {
    pub const GUARANTEED: [AlgorithmId; 5] = [
        AlgorithmId::A,
        AlgorithmId::B,
        AlgorithmId::C,
        AlgorithmId::D,
        AlgorithmId::Baseline,
    ];
    pub const FOREIGN: [AlgorithmId; 3] = [
        AlgorithmId::GreedyToM2,
        AlgorithmId::LeastLoaded,
        AlgorithmId::AllToM1,
    ];

    /// The scheduler that attains the tight bound for `m`.
    pub fn for_regime(regime: Regime) -> AlgorithmId {
        match regime {
            Regime::High => AlgorithmId::A,
            Regime::Mid => AlgorithmId::B,
            Regime::LowD => AlgorithmId::D,
            Regime::LowC => AlgorithmId::C,
            Regime::NoMig => AlgorithmId::Baseline,
        }
    }

    pub fn auto(m: &Rational) -> Result<AlgorithmId> {
        Ok(Self::for_regime(Regime::of(m)?))
    }

    pub fn name(self) -> &'static str {
        match self {
            AlgorithmId::A => "A",
            AlgorithmId::B => "B",
            AlgorithmId::C => "C",
            AlgorithmId::D => "D",
            AlgorithmId::Baseline => "baseline",
            AlgorithmId::GreedyToM2 => "greedy-m2",
            AlgorithmId::LeastLoaded => "least-loaded",
            AlgorithmId::AllToM1 => "all-m1",
        }
    }

    pub fn parse(s: &str) -> Result<AlgorithmId> {
        let all = AlgorithmId::GUARANTEED
            .iter()
            .chain(AlgorithmId::FOREIGN.iter());
        all.copied()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown algorithm {s:?}")))
    }

    /// Instantiates the scheduler for migration factor `m`.
    pub fn build(self, m: &Rational) -> Result<Box<dyn Scheduler>> {
        Ok(match self {
            AlgorithmId::A => Box::new(AlgA::new(m)?),
            AlgorithmId::B => Box::new(AlgB::new(m)?),
            AlgorithmId::C => Box::new(AlgC::new(m)?),
            AlgorithmId::D => Box::new(AlgD::new(m)?),
            AlgorithmId::Baseline => Box::new(Baseline),
            AlgorithmId::GreedyToM2 => Box::new(GreedyToM2),
            AlgorithmId::LeastLoaded => Box::new(LeastLoaded),
            AlgorithmId::AllToM1 => Box::new(AllToM1),
        })
    }
}

impl std::fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

pub(crate) fn require_regime(algorithm: AlgorithmId, m: &Rational, regime: Regime) -> Result<()> {
    if Regime::of(m)? != regime {
        return Err(Error::RegimeMismatch {
            algorithm: algorithm.name().into(),
            m: format_rational(m),
        });
    }
    Ok(())
}

/// Machine-2 jobs in non-increasing size order, with their sizes split out.
pub(crate) struct SortedY<'a> {
    pub jobs: Vec<&'a Job>,
    pub sizes: Vec<Rational>,
}

impl<'a> SortedY<'a> {
    pub fn of(state: &'a ScheduleState) -> Self {
        let jobs = state.y_sorted();
        let sizes = jobs.iter().map(|j| j.size.clone()).collect();
        SortedY { jobs, sizes }
    }

    /// Rewrites a position-based selection into job indices.
    pub fn to_jobs(&self, mut w: WSelection, deficit: Rational) -> WSelection {
        w.chosen = w.chosen.iter().map(|&i| self.jobs[i].index).collect();
        w.target_deficit = Some(deficit);
        w
    }

    /// Selection of every machine-2 job not in `w` (job indices in, job indices out).
    pub fn complement(&self, w: &WSelection) -> WSelection {
        let chosen: Vec<usize> = self
            .jobs
            .iter()
            .map(|j| j.index)
            .filter(|i| !w.chosen.contains(i))
            .collect();
        let total = self
            .jobs
            .iter()
            .filter(|j| chosen.contains(&j.index))
            .fold(Rational::default(), |acc, j| acc + &j.size);
        WSelection {
            chosen,
            total,
            target_deficit: w.target_deficit.clone(),
        }
    }
}

/// Moves `w` from machine 2 to machine 1 and puts the arriving job on machine 2.
pub(crate) fn migrate_to_m1(w: WSelection, step: Step) -> Placement {
    Placement {
        decision: AssignmentDecision::migrate(
            MachineId::M2,
            w.chosen.iter().copied(),
            MachineId::M1,
        ),
        step,
        selection: Some(w),
    }
}

/// Sends the arriving job to machine 1, keeping `w` only as a record.
pub(crate) fn keep_on_m1(w: WSelection, step: Step) -> Placement {
    Placement {
        decision: AssignmentDecision::place(MachineId::M1),
        step,
        selection: Some(w),
    }
}

#[cfg(test)]
pub(crate) mod testutil {
    use crate::job::{Gos, Job, MachineId};
    use crate::rational::{q, Rational};
    use crate::state::{MigrationLedger, ScheduleState};

    use super::{Placement, Scheduler};

    /// Feeds `(num, den, gos)` triples through `s`, applying each decision.
    pub fn run(
        s: &dyn Scheduler,
        m: Rational,
        jobs: &[(i64, i64, u8)],
    ) -> (ScheduleState, MigrationLedger, Vec<Placement>) {
        let mut state = ScheduleState::new();
        let mut ledger = MigrationLedger::new(m);
        let mut placements = Vec::new();
        for &(n, d, g) in jobs {
            let job = Job::new(state.len() + 1, q(n, d), Gos::try_from(g).unwrap()).unwrap();
            let p = s.on_arrival(&state, &job).unwrap();
            state.apply(&job, &p.decision, &mut ledger).unwrap();
            placements.push(p);
        }
        (state, ledger, placements)
    }

    pub fn machines(state: &ScheduleState) -> Vec<MachineId> {
        state.assignment().map(|(_, m)| m).collect()
    }
}
