//! Adaptive lower-bound adversaries and the duel runner that plays them against a
//! scheduler.
//!
//! An adversary looks at the schedule after every arrival has settled (migrations
//! included) and either issues the next job or stops and certifies the optimum of
//! what it issued.

mod high;
mod low;
mod mid;
mod totalsize;

use serde::{Deserialize, Serialize};

pub use high::AdvHigh;
pub use low::AdvLow;
pub use mid::AdvMid;
pub use totalsize::{default_theta, newton_step, AdvTotalSize};

use crate::algorithms::{AlgorithmId, Scheduler, Step};
use crate::error::{Error, Result};
use crate::job::{Gos, Job};
use crate::oracle::brute_opt;
use crate::rational::{format_rational, sum, Rational};
use crate::state::{AssignmentDecision, LedgerRecord, MigrationLedger, ScheduleState};

/// Hard stop for runaway adversaries.
const MAX_ARRIVALS: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AdversaryMove {
    /// Next job. `protected` lists groups of issued job indices that the arriving
    /// job's budget must not be able to move as a whole.
    Issue {
        size: Rational,
        gos: Gos,
        protected: Vec<Vec<usize>>,
    },
    Stop {
        certified_opt: Rational,
        claimed_min_ratio: Rational,
    },
}

impl AdversaryMove {
    fn issue(size: Rational, gos: Gos, protected: Vec<Vec<usize>>) -> Self {
        AdversaryMove::Issue {
            size,
            gos,
            protected,
        }
    }
}

pub trait Adversary: Send + Sync {
    fn kind(&self) -> AdversaryKind;

    fn m(&self) -> &Rational;

    /// Lower bound on makespan / optimum that this adversary forces on any scheduler.
    fn claimed_min_ratio(&self) -> Rational;

    /// `issued` holds every job emitted so far; `state` reflects all of them.
    fn next(&self, state: &ScheduleState, issued: &[Job]) -> AdversaryMove;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AdversaryKind {
    High,
    Mid,
    Low,
    TotalSize,
}

impl AdversaryKind {
    pub const ALL: [AdversaryKind; 4] = [
        AdversaryKind::High,
        AdversaryKind::Mid,
        AdversaryKind::Low,
        AdversaryKind::TotalSize,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AdversaryKind::High => "high",
            AdversaryKind::Mid => "mid",
            AdversaryKind::Low => "low",
            AdversaryKind::TotalSize => "totalsize",
        }
    }

    pub fn parse(s: &str) -> Result<AdversaryKind> {
        AdversaryKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown adversary {s:?}")))
    }

    /// Builds the adversary. `param` is gamma, eps or theta; `None` picks a default
    /// close to the supremum the adversary allows.
    pub fn build(self, m: &Rational, param: Option<&Rational>) -> Result<Box<dyn Adversary>> {
        Ok(match self {
            AdversaryKind::High => {
                let gamma = match param {
                    Some(g) => g.clone(),
                    None => high::default_gamma(m)?,
                };
                Box::new(AdvHigh::new(m, &gamma)?)
            }
            AdversaryKind::Mid => {
                let eps = param
                    .cloned()
                    .unwrap_or_else(|| crate::rational::q(1, 1000));
                Box::new(AdvMid::new(m, &eps)?)
            }
            AdversaryKind::Low => Box::new(AdvLow::new(m)?),
            AdversaryKind::TotalSize => {
                let theta = param.cloned().unwrap_or_else(default_theta);
                Box::new(AdvTotalSize::new(m, &theta)?)
            }
        })
    }
}

impl std::fmt::Display for AdversaryKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DuelRound {
    pub job: Job,
    pub decision: AssignmentDecision,
    pub step: Step,
    pub ledger: LedgerRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DuelOutcome {
    Completed,
    /// The scheduler returned an error or an illegal decision. Counts as a loss for
    /// the scheduler.
    SchedulerFault {
        job: usize,
        error: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DuelTranscript {
    pub adversary: AdversaryKind,
    pub algorithm: AlgorithmId,
    #[serde(with = "crate::rational::serde_str")]
    pub m: Rational,
    pub jobs: Vec<Job>,
    pub rounds: Vec<DuelRound>,
    #[serde(with = "crate::rational::serde_str")]
    pub load1: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub load2: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub makespan: Rational,
    #[serde(with = "crate::rational::serde_opt_str")]
    pub certified_opt: Option<Rational>,
    #[serde(with = "crate::rational::serde_opt_str")]
    pub oracle_opt: Option<Rational>,
    #[serde(with = "crate::rational::serde_str")]
    pub claimed_min_ratio: Rational,
    #[serde(with = "crate::rational::serde_opt_str")]
    pub ratio: Option<Rational>,
    pub outcome: DuelOutcome,
    /// Arrivals whose budget could have moved a protected group.
    pub proofing_violations: Vec<String>,
}

impl DuelTranscript {
    /// The oracle agrees with the adversary's certificate.
    pub fn certified(&self) -> bool {
        match (&self.certified_opt, &self.oracle_opt) {
            (Some(c), Some(o)) => c == o,
            _ => false,
        }
    }

    /// The forced ratio reaches the claim, or the scheduler faulted.
    pub fn meets_claim(&self) -> bool {
        match self.outcome {
            DuelOutcome::SchedulerFault { .. } => true,
            DuelOutcome::Completed => self
                .ratio
                .as_ref()
                .is_some_and(|r| *r >= self.claimed_min_ratio),
        }
    }

    /// Certified, migration-proof and at least the claimed ratio.
    pub fn sound(&self) -> bool {
        let fault = matches!(self.outcome, DuelOutcome::SchedulerFault { .. });
        self.proofing_violations.is_empty() && (fault || self.certified()) && self.meets_claim()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("transcript serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Plays `adversary` against `scheduler` until the adversary stops or the scheduler
/// faults. The scheduler must have been built for the adversary's `m`. Fails only if
/// the oracle cannot check the certificate.
pub fn run_duel(adversary: &dyn Adversary, scheduler: &dyn Scheduler) -> Result<DuelTranscript> {
    let m = adversary.m().clone();
    let mut state = ScheduleState::new();
    let mut ledger = MigrationLedger::new(m.clone());
    let mut jobs: Vec<Job> = Vec::new();
    let mut rounds = Vec::new();
    let mut proofing_violations = Vec::new();
    let mut outcome = DuelOutcome::Completed;
    let mut stop = None;

    while jobs.len() < MAX_ARRIVALS {
        let (size, gos, protected) = match adversary.next(&state, &jobs) {
            AdversaryMove::Stop {
                certified_opt,
                claimed_min_ratio,
            } => {
                stop = Some((certified_opt, claimed_min_ratio));
                break;
            }
            AdversaryMove::Issue {
                size,
                gos,
                protected,
            } => (size, gos, protected),
        };
        let job = Job::new(jobs.len() + 1, size, gos)?;
        let budget = &m * &job.size;
        for group in &protected {
            let total = sum(group.iter().map(|&i| &jobs[i - 1].size));
            if total <= budget {
                proofing_violations.push(format!(
                    "job {}: budget {} can move {:?} of total {}",
                    job.index,
                    format_rational(&budget),
                    group,
                    format_rational(&total)
                ));
            }
        }
        jobs.push(job.clone());
        let applied = scheduler.on_arrival(&state, &job).and_then(|p| {
            state.apply(&job, &p.decision, &mut ledger)?;
            Ok(p)
        });
        match applied {
            Ok(p) => rounds.push(DuelRound {
                job,
                decision: p.decision,
                step: p.step,
                ledger: ledger.records.last().cloned().expect("record pushed"),
            }),
            Err(e) => {
                outcome = DuelOutcome::SchedulerFault {
                    job: job.index,
                    error: e.to_string(),
                };
                break;
            }
        }
    }

    let makespan = state.makespan();
    let (certified_opt, claimed_min_ratio, oracle_opt, ratio) = match stop {
        Some((opt, claim)) => {
            let oracle = brute_opt(&jobs)?;
            let ratio = &makespan / &opt;
            (Some(opt), claim, Some(oracle), Some(ratio))
        }
        None => (None, adversary.claimed_min_ratio(), None, None),
    };
    Ok(DuelTranscript {
        adversary: adversary.kind(),
        algorithm: scheduler.id(),
        m,
        jobs,
        rounds,
        load1: state.load1(),
        load2: state.load2(),
        makespan,
        certified_opt,
        oracle_opt,
        claimed_min_ratio,
        ratio,
        outcome,
        proofing_violations,
    })
}
