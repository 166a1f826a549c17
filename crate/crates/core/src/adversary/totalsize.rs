use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::job::{Gos, Job, MachineId};
use crate::rational::{format_rational, int, min, q, to_f64, Rational};
use crate::state::ScheduleState;

use super::{Adversary, AdversaryKind, AdversaryMove};

/// Known-total-size game: the scheduler knows the total is 2 but not the optimum.
/// Two jobs of size `theta` are followed by sand whose grade depends on where they
/// went. `theta` approximates the root of `4t^2 + t - 2`.
#[derive(Debug, Clone)]
pub struct AdvTotalSize {
    m: Rational,
    theta: Rational,
    sand: Rational,
    pieces: usize,
}

/// One Newton step on `4t^2 + t - 2`.
pub fn newton_step(t: &Rational) -> Rational {
    t - poly(t) / (int(8) * t + int(1))
}

fn poly(t: &Rational) -> Rational {
    int(4) * t * t + t - int(2)
}

/// `59307/100000` refined once.
pub fn default_theta() -> Rational {
    newton_step(&q(59307, 100000))
}

impl AdvTotalSize {
    pub fn new(m: &Rational, theta: &Rational) -> Result<Self> {
        if *m <= int(0) {
            return Err(Error::NegativeM(format_rational(m)));
        }
        let residual = to_f64(&poly(theta)).abs();
        if *theta <= q(1, 2) || *theta >= q(2, 3) || residual.is_nan() || residual >= 1e-8 {
            return Err(Error::BadTheta(format!(
                "{} (residual {residual:e})",
                format_rational(theta)
            )));
        }
        // Sand small enough that no single arrival can pay for a large job.
        let half_rest = int(1) - theta;
        let coarse = min(&(theta / (int(2) * m)), &(int(2) * &half_rest / int(10)));
        let per_half = (&half_rest / coarse).ceil();
        let sand = &half_rest / &per_half;
        let pieces = per_half.to_integer().to_usize().expect("sand count fits") * 2;
        Ok(AdvTotalSize {
            m: m.clone(),
            theta: theta.clone(),
            sand,
            pieces,
        })
    }

    pub fn theta(&self) -> &Rational {
        &self.theta
    }

    pub fn sand_size(&self) -> &Rational {
        &self.sand
    }
}

impl Adversary for AdvTotalSize {
    fn kind(&self) -> AdversaryKind {
        AdversaryKind::TotalSize
    }

    fn m(&self) -> &Rational {
        &self.m
    }

    fn claimed_min_ratio(&self) -> Rational {
        let t = &self.theta;
        min(&(int(2) * t), &((int(2) - t) / (int(2) * t)))
    }

    fn next(&self, state: &ScheduleState, issued: &[Job]) -> AdversaryMove {
        if issued.len() < 2 {
            return AdversaryMove::issue(self.theta.clone(), Gos::Two, vec![]);
        }
        if issued.len() == 2 + self.pieces {
            let both_on_m2 = issued[2].gos == Gos::Two;
            return AdversaryMove::Stop {
                certified_opt: if both_on_m2 {
                    int(1)
                } else {
                    int(2) * &self.theta
                },
                claimed_min_ratio: self.claimed_min_ratio(),
            };
        }
        let gos = if issued.len() > 2 {
            issued[2].gos
        } else if state.machine_of(1) == Some(MachineId::M2)
            && state.machine_of(2) == Some(MachineId::M2)
        {
            Gos::Two
        } else {
            Gos::One
        };
        AdversaryMove::issue(self.sand.clone(), gos, vec![vec![1], vec![2]])
    }
}
