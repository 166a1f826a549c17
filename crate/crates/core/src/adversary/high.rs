use crate::bound::{mu, Regime};
use crate::error::{Error, Result};
use crate::job::{Gos, Job, MachineId};
use crate::rational::{format_rational, int, q, Rational};
use crate::state::ScheduleState;

use super::{Adversary, AdversaryKind, AdversaryMove};

/// Forces `1 + gamma` for `m >= 5/2` with two large GoS-2 jobs `1 - gamma` and
/// `1 - 2 gamma` that cannot be migrated together.
#[derive(Debug, Clone)]
pub struct AdvHigh {
    m: Rational,
    gamma: Rational,
}

/// `mu * (1 - 1/1000)`.
pub(super) fn default_gamma(m: &Rational) -> Result<Rational> {
    if Regime::of(m)? != Regime::High {
        return Err(mismatch(m));
    }
    Ok(mu(m) * q(999, 1000))
}

fn mismatch(m: &Rational) -> Error {
    Error::RegimeMismatch {
        algorithm: "adversary high".into(),
        m: format_rational(m),
    }
}

impl AdvHigh {
    pub fn new(m: &Rational, gamma: &Rational) -> Result<Self> {
        if Regime::of(m)? != Regime::High {
            return Err(mismatch(m));
        }
        let mu = mu(m);
        if *gamma <= int(0) || *gamma >= mu {
            return Err(Error::BadGamma {
                gamma: format_rational(gamma),
                mu: format_rational(&mu),
            });
        }
        // The split-then-migrate branch needs 2 - 3 gamma >= 1 + gamma.
        assert!(*gamma <= (int(1) - &mu) / int(3));
        Ok(AdvHigh {
            m: m.clone(),
            gamma: gamma.clone(),
        })
    }

    pub fn gamma(&self) -> &Rational {
        &self.gamma
    }
}

impl Adversary for AdvHigh {
    fn kind(&self) -> AdversaryKind {
        AdversaryKind::High
    }

    fn m(&self) -> &Rational {
        &self.m
    }

    fn claimed_min_ratio(&self) -> Rational {
        int(1) + &self.gamma
    }

    fn next(&self, state: &ScheduleState, issued: &[Job]) -> AdversaryMove {
        let g = &self.gamma;
        let stop = AdversaryMove::Stop {
            certified_opt: int(1),
            claimed_min_ratio: self.claimed_min_ratio(),
        };
        match issued.len() {
            0 => return AdversaryMove::issue(int(1) - g, Gos::Two, vec![]),
            1 => return AdversaryMove::issue(int(1) - int(2) * g, Gos::Two, vec![]),
            _ => {}
        }
        let both = vec![vec![1, 2]];
        let singles = vec![vec![1], vec![2]];
        if issued.len() == 2 {
            let first = state.machine_of(1).expect("issued");
            let second = state.machine_of(2).expect("issued");
            return match (first, second) {
                _ if first == second => AdversaryMove::issue(g / int(2), Gos::Two, singles),
                (MachineId::M1, _) => AdversaryMove::issue(int(2) * g, Gos::One, both),
                _ => AdversaryMove::issue(int(2) * g, Gos::Two, both),
            };
        }
        let third = &issued[2];
        if third.size < int(2) * g {
            // Sand branch: six pieces of gamma / 2.
            return if issued.len() < 8 {
                AdversaryMove::issue(g / int(2), Gos::Two, singles)
            } else {
                stop
            };
        }
        match (third.gos, issued.len()) {
            (Gos::Two, 3) => AdversaryMove::issue(g.clone(), Gos::One, both),
            _ => stop,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adversary::{run_duel, DuelOutcome};
    use crate::algorithms::{AlgorithmId, GreedyToM2};

    #[test]
    fn against_alg_a_at_five_halves() {
        let m = q(5, 2);
        let adv = AdvHigh::new(&m, &q(1, 5)).unwrap();
        let t = run_duel(&adv, AlgorithmId::A.build(&m).unwrap().as_ref()).unwrap();
        assert_eq!(t.outcome, DuelOutcome::Completed);
        let sizes: Vec<_> = t.jobs.iter().map(|j| (j.size.clone(), j.gos)).collect();
        assert_eq!(
            sizes,
            vec![
                (q(4, 5), Gos::Two),
                (q(3, 5), Gos::Two),
                (q(2, 5), Gos::Two),
                (q(1, 5), Gos::One)
            ]
        );
        assert_eq!((t.load1.clone(), t.load2.clone()), (q(6, 5), q(4, 5)));
        assert_eq!(t.ratio, Some(q(6, 5)));
        assert!(t.certified() && t.sound());
    }

    #[test]
    fn same_machine_sand_branch() {
        let m = q(5, 2);
        let adv = AdvHigh::new(&m, &q(1, 5)).unwrap();
        let t = run_duel(&adv, &GreedyToM2).unwrap();
        assert_eq!(t.jobs.len(), 8);
        assert!(t.jobs[2..].iter().all(|j| j.size == q(1, 10)));
        assert!(t.makespan >= q(7, 5));
        assert_eq!(t.oracle_opt, Some(int(1)));
        assert!(t.sound());
    }

    #[test]
    fn gamma_bounds() {
        assert!(matches!(
            AdvHigh::new(&int(3), &q(2, 9)),
            Err(Error::BadGamma { .. })
        ));
        assert!(matches!(
            AdvHigh::new(&int(3), &int(0)),
            Err(Error::BadGamma { .. })
        ));
        assert!(matches!(
            AdvHigh::new(&int(2), &q(1, 10)),
            Err(Error::RegimeMismatch { .. })
        ));
        assert!(AdvHigh::new(&int(3), &q(2, 10)).is_ok());
    }
}
