//! Schedule bookkeeping and enforcement of the hierarchy and migration-budget rules.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::job::{Gos, Job, MachineId};
use crate::rational::{format_rational, Rational};

/// Where the arriving job goes plus the earlier jobs that change machine at this arrival.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssignmentDecision {
    pub target: MachineId,
    pub migrations: Vec<Migration>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Migration {
    pub job: usize,
    pub to: MachineId,
}

impl AssignmentDecision {
    pub fn place(target: MachineId) -> Self {
        AssignmentDecision {
            target,
            migrations: Vec::new(),
        }
    }

    /// Moves every listed job to `to` and places the arriving job on `target`.
    pub fn migrate(
        target: MachineId,
        jobs: impl IntoIterator<Item = usize>,
        to: MachineId,
    ) -> Self {
        AssignmentDecision {
            target,
            migrations: jobs.into_iter().map(|job| Migration { job, to }).collect(),
        }
    }
}

/// One row per arrival.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerRecord {
    pub job: usize,
    #[serde(with = "crate::rational::serde_str")]
    pub size: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub migrated: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub budget: Rational,
}

/// Per-arrival migration accounting against the factor `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MigrationLedger {
    #[serde(with = "crate::rational::serde_str")]
    pub m: Rational,
    pub records: Vec<LedgerRecord>,
    /// Largest observed `migrated / size`.
    #[serde(with = "crate::rational::serde_str")]
    pub max_ratio: Rational,
}

impl MigrationLedger {
    pub fn new(m: Rational) -> Self {
        MigrationLedger {
            m,
            records: Vec::new(),
            max_ratio: Rational::zero(),
        }
    }

    fn push(&mut self, record: LedgerRecord) {
        let ratio = &record.migrated / &record.size;
        if ratio > self.max_ratio {
            self.max_ratio = ratio;
        }
        self.records.push(record);
    }
}

/// Assignment of every arrived job, with the derived loads kept incrementally.
///
/// `x` is the GoS-1 total (always on machine 1), `y` the GoS-2 total on machine 2
/// and `z` the GoS-2 total on machine 1.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ScheduleState {
    jobs: Vec<Job>,
    machines: Vec<MachineId>,
    x: Rational,
    y: Rational,
    z: Rational,
}

impl ScheduleState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.jobs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.jobs.is_empty()
    }

    pub fn jobs(&self) -> &[Job] {
        &self.jobs
    }

    pub fn job(&self, index: usize) -> Option<&Job> {
        index.checked_sub(1).and_then(|i| self.jobs.get(i))
    }

    pub fn machine_of(&self, index: usize) -> Option<MachineId> {
        index
            .checked_sub(1)
            .and_then(|i| self.machines.get(i))
            .copied()
    }

    pub fn assignment(&self) -> impl Iterator<Item = (&Job, MachineId)> {
        self.jobs.iter().zip(self.machines.iter().copied())
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn y(&self) -> &Rational {
        &self.y
    }

    pub fn z(&self) -> &Rational {
        &self.z
    }

    /// Running GoS-1 total. Equal to `x` since GoS-1 jobs never leave machine 1.
    pub fn lambda(&self) -> &Rational {
        &self.x
    }

    pub fn load1(&self) -> Rational {
        &self.x + &self.z
    }

    pub fn load2(&self) -> Rational {
        self.y.clone()
    }

    pub fn load(&self, machine: MachineId) -> Rational {
        match machine {
            MachineId::M1 => self.load1(),
            MachineId::M2 => self.load2(),
        }
    }

    pub fn makespan(&self) -> Rational {
        std::cmp::max(self.load1(), self.load2())
    }

    pub fn total(&self) -> Rational {
        &self.x + &self.y + &self.z
    }

    /// Jobs on machine 2 by non-increasing size, ties by smaller arrival index.
    pub fn y_sorted(&self) -> Vec<&Job> {
        let mut ys: Vec<&Job> = self
            .assignment()
            .filter(|(_, m)| *m == MachineId::M2)
            .map(|(j, _)| j)
            .collect();
        ys.sort_by(|a, b| b.size.cmp(&a.size).then(a.index.cmp(&b.index)));
        ys
    }

    /// GoS-2 jobs currently on machine 1.
    pub fn z_jobs(&self) -> Vec<&Job> {
        self.assignment()
            .filter(|(j, m)| *m == MachineId::M1 && j.gos == Gos::Two)
            .map(|(j, _)| j)
            .collect()
    }

    /// Largest size on machine 2, zero when machine 2 is empty.
    pub fn max_y(&self) -> Rational {
        self.y_sorted()
            .first()
            .map(|j| j.size.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Second largest size on machine 2, zero when it holds at most one job.
    pub fn second_max_y(&self) -> Rational {
        self.y_sorted()
            .get(1)
            .map(|j| j.size.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Index of the largest job on machine 2.
    pub fn max_y_job(&self) -> Option<usize> {
        self.y_sorted().first().map(|j| j.index)
    }

    /// Rescans the assignment for GoS-1 jobs on machine 2.
    pub fn hierarchy_violations(&self) -> Vec<usize> {
        self.assignment()
            .filter(|(j, m)| !m.admits(j.gos))
            .map(|(j, _)| j.index)
            .collect()
    }

    /// Checks `decision` for the arriving `job` and, if it is legal, applies it and
    /// extends `ledger`. The state is left untouched on error.
    pub fn apply(
        &mut self,
        job: &Job,
        decision: &AssignmentDecision,
        ledger: &mut MigrationLedger,
    ) -> Result<()> {
        let expected = self.jobs.len() + 1;
        if job.index < expected {
            return Err(Error::DuplicateJob { job: job.index });
        }
        if job.index > expected {
            return Err(Error::OutOfOrder {
                expected,
                got: job.index,
            });
        }
        if job.size <= Rational::zero() {
            return Err(Error::NonPositiveSize {
                job: job.index,
                size: format_rational(&job.size),
            });
        }
        if !decision.target.admits(job.gos) {
            return Err(Error::HierarchyViolation { job: job.index });
        }

        let mut seen = BTreeSet::new();
        let mut migrated = Rational::zero();
        for mv in &decision.migrations {
            let (moved, from) = match (self.job(mv.job), self.machine_of(mv.job)) {
                (Some(j), Some(m)) => (j, m),
                _ => return Err(Error::UnknownJob { job: mv.job }),
            };
            if from == mv.to || !seen.insert(mv.job) {
                return Err(Error::InvalidMigration { job: mv.job });
            }
            if !mv.to.admits(moved.gos) {
                return Err(Error::HierarchyViolation { job: mv.job });
            }
            migrated += &moved.size;
        }
        let budget = &ledger.m * &job.size;
        if migrated > budget {
            return Err(Error::BudgetExceeded {
                job: job.index,
                migrated: format_rational(&migrated),
                budget: format_rational(&budget),
            });
        }

        for mv in &decision.migrations {
            let i = mv.job - 1;
            let size = self.jobs[i].size.clone();
            match mv.to {
                MachineId::M1 => {
                    self.y -= &size;
                    self.z += &size;
                }
                MachineId::M2 => {
                    self.z -= &size;
                    self.y += &size;
                }
            }
            self.machines[i] = mv.to;
        }
        match (job.gos, decision.target) {
            (Gos::One, _) => self.x += &job.size,
            (Gos::Two, MachineId::M1) => self.z += &job.size,
            (Gos::Two, MachineId::M2) => self.y += &job.size,
        }
        self.jobs.push(job.clone());
        self.machines.push(decision.target);
        ledger.push(LedgerRecord {
            job: job.index,
            size: job.size.clone(),
            migrated,
            budget,
        });
        Ok(())
    }
}

/// Free-function form of [`ScheduleState::apply`] returning the successor state.
pub fn apply_decision(
    state: &ScheduleState,
    job: &Job,
    decision: &AssignmentDecision,
    ledger: &mut MigrationLedger,
) -> Result<ScheduleState> {
    let mut next = state.clone();
    next.apply(job, decision, ledger)?;
    Ok(next)
}
