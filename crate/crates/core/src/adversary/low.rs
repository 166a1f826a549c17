use crate::error::{Error, Result};
use crate::job::{Gos, Job, MachineId};
use crate::rational::{format_rational, int, q, Rational};
use crate::state::ScheduleState;

use super::{Adversary, AdversaryKind, AdversaryMove};

/// Forces `3/2` for `m < 1/2`, where no job can pay for moving another.
#[derive(Debug, Clone)]
pub struct AdvLow {
    m: Rational,
}

impl AdvLow {
    pub fn new(m: &Rational) -> Result<Self> {
        if *m < int(0) {
            return Err(Error::NegativeM(format_rational(m)));
        }
        if *m >= q(1, 2) {
            return Err(Error::RegimeMismatch {
                algorithm: "adversary low".into(),
                m: format_rational(m),
            });
        }
        Ok(AdvLow { m: m.clone() })
    }
}

impl Adversary for AdvLow {
    fn kind(&self) -> AdversaryKind {
        AdversaryKind::Low
    }

    fn m(&self) -> &Rational {
        &self.m
    }

    fn claimed_min_ratio(&self) -> Rational {
        q(3, 2)
    }

    fn next(&self, state: &ScheduleState, issued: &[Job]) -> AdversaryMove {
        match issued.len() {
            0 => AdversaryMove::issue(q(1, 2), Gos::Two, vec![]),
            1 => {
                let gos = match state.machine_of(1) {
                    Some(MachineId::M1) => Gos::One,
                    _ => Gos::Two,
                };
                AdversaryMove::issue(int(1), gos, vec![vec![1]])
            }
            2 if issued[1].gos == Gos::Two => {
                AdversaryMove::issue(q(1, 2), Gos::One, vec![vec![1], vec![2]])
            }
            _ => AdversaryMove::Stop {
                certified_opt: int(1),
                claimed_min_ratio: q(3, 2),
            },
        }
    }
}
