use num_traits::One;

use crate::error::{Error, Result};
use crate::job::{Gos, Job, MachineId};
use crate::rational::{format_rational, int, q, Rational};
use crate::state::ScheduleState;

use super::{Adversary, AdversaryKind, AdversaryMove};

/// Forces `2 - m - eps` for `1/2 <= m < 3/4` with a first job just too large to be
/// moved by a unit job.
#[derive(Debug, Clone)]
pub struct AdvMid {
    m: Rational,
    eps: Rational,
}

impl AdvMid {
    pub fn new(m: &Rational, eps: &Rational) -> Result<Self> {
        if *m < q(1, 2) || *m >= q(3, 4) {
            return Err(Error::RegimeMismatch {
                algorithm: "adversary mid".into(),
                m: format_rational(m),
            });
        }
        let integral_inverse = *eps > int(0) && eps.recip().denom().is_one();
        if !integral_inverse || *eps >= q(1, 10) || m + eps >= int(1) {
            return Err(Error::BadEps(format_rational(eps)));
        }
        Ok(AdvMid {
            m: m.clone(),
            eps: eps.clone(),
        })
    }
}

impl Adversary for AdvMid {
    fn kind(&self) -> AdversaryKind {
        AdversaryKind::Mid
    }

    fn m(&self) -> &Rational {
        &self.m
    }

    fn claimed_min_ratio(&self) -> Rational {
        int(2) - &self.m - &self.eps
    }

    fn next(&self, state: &ScheduleState, issued: &[Job]) -> AdversaryMove {
        let first = &self.m + &self.eps;
        let stop = AdversaryMove::Stop {
            certified_opt: int(1),
            claimed_min_ratio: self.claimed_min_ratio(),
        };
        match issued.len() {
            0 => AdversaryMove::issue(first, Gos::Two, vec![]),
            1 => {
                let gos = match state.machine_of(1) {
                    Some(MachineId::M1) => Gos::One,
                    _ => Gos::Two,
                };
                AdversaryMove::issue(int(1), gos, vec![vec![1]])
            }
            2 if issued[1].gos == Gos::Two && state.machine_of(2) == Some(MachineId::M1) => {
                AdversaryMove::issue(int(1) - first, Gos::One, vec![vec![1], vec![2]])
            }
            _ => stop,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adversary::run_duel;
    use crate::algorithms::{AlgorithmId, AllToM1};

    #[test]
    fn against_alg_c() {
        let m = q(3, 5);
        let adv = AdvMid::new(&m, &q(1, 100)).unwrap();
        let t = run_duel(&adv, AlgorithmId::C.build(&m).unwrap().as_ref()).unwrap();
        let r = t.ratio.clone().unwrap();
        assert!(r >= q(139, 100) && r <= q(7, 5));
        assert!(t.sound());
    }

    #[test]
    fn against_baseline() {
        let m = q(1, 2);
        let adv = AdvMid::new(&m, &q(1, 100)).unwrap();
        let t = run_duel(&adv, AlgorithmId::Baseline.build(&m).unwrap().as_ref()).unwrap();
        assert_eq!(t.jobs.len(), 3);
        assert_eq!(t.makespan, q(149, 100));
        assert!(t.sound());
    }

    #[test]
    fn first_job_on_m1() {
        let m = q(7, 10);
        let adv = AdvMid::new(&m, &q(1, 20)).unwrap();
        let t = run_duel(&adv, &AllToM1).unwrap();
        assert_eq!(t.jobs[1].gos, Gos::One);
        assert_eq!(t.makespan, q(7, 4));
        assert!(t.sound());
    }

    #[test]
    fn eps_checks() {
        let m = q(3, 5);
        for e in [q(1, 5), q(1, 10), q(3, 100), int(0)] {
            assert!(matches!(AdvMid::new(&m, &e), Err(Error::BadEps(_))), "{e}");
        }
        assert!(matches!(
            AdvMid::new(&q(3, 4), &q(1, 100)),
            Err(Error::RegimeMismatch { .. })
        ));
    }
}
