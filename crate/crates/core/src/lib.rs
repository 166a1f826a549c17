//! Semi-online scheduling on two hierarchical machines with a known optimal makespan
//! and a per-arrival migration budget.
//!
//! Sizes, loads and bounds are exact rationals. The crate provides the schedulers for
//! every migration-factor regime, adaptive adversaries realizing the matching lower
//! bounds, a brute-force optimum, seeded instance generators and the suites that check
//! all of them against each other.

pub mod adversary;
pub mod algorithms;
pub mod bound;
pub mod error;
pub mod generators;
pub mod harness;
pub mod instance;
pub mod job;
pub mod oracle;
pub mod rational;
pub mod state;
mod subset;

pub use algorithms::{AlgorithmId, Placement, Scheduler, Step};
pub use bound::{ratio_bound, Regime, RegimeBound};
pub use error::{Error, Result};
pub use instance::{validate_instance, Instance, ValidationReport};
pub use job::{Gos, Job, MachineId};
pub use rational::Rational;
pub use state::{apply_decision, AssignmentDecision, MigrationLedger, ScheduleState};
