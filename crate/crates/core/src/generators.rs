//! Seeded random instances with a planted optimal makespan of exactly 1.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::job::Gos;
use crate::rational::{int, q, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FillMode {
    /// Both machines of the hidden packing have load exactly 1.
    ExactFill,
    /// One machine has load exactly 1 and fixes the optimum, the other has slack.
    SlackFill,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenConfig {
    pub seed: u64,
    pub n_gos2: usize,
    pub n_gos1: usize,
    pub denominator_bound: u32,
    pub fill_mode: FillMode,
}

impl GenConfig {
    pub fn new(seed: u64, n_gos2: usize, n_gos1: usize, fill_mode: FillMode) -> Self {
        GenConfig {
            seed,
            n_gos2,
            n_gos1,
            denominator_bound: 1000,
            fill_mode,
        }
    }
}

/// Builds a hidden packing with optimum 1 and shuffles it into an arrival order.
///
/// ExactFill: machine 1 gets every GoS-1 job plus some GoS-2 jobs, machine 2 the
/// remaining GoS-2 jobs, each machine summing to exactly 1.
///
/// SlackFill: with GoS-1 jobs present they alone fill machine 1 to exactly 1 and the
/// GoS-2 jobs share a random total in `(0, 1]`; without them, one GoS-2 job has size 1
/// and the rest share a random total in `(0, 1]`. Either way the optimum is pinned at 1.
pub fn generate(config: &GenConfig) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let n2 = config.n_gos2;
    let n1 = config.n_gos1;
    let bound = config.denominator_bound as i64;
    let infeasible = |why: &str| Err(Error::InfeasibleConfig(why.into()));

    if n1 + n2 == 0 {
        return infeasible("no jobs requested");
    }
    let mut jobs: Vec<(Rational, Gos)> = Vec::with_capacity(n1 + n2);
    match config.fill_mode {
        FillMode::ExactFill => {
            if n2 == 0 {
                return infeasible("exact fill needs a GoS-2 job for machine 2");
            }
            // GoS-2 jobs on machine 2; machine 1 needs at least one job too.
            let min_on_m2 = 1;
            let max_on_m2 = if n1 == 0 { n2 - 1 } else { n2 };
            if max_on_m2 < min_on_m2 {
                return infeasible("exact fill without GoS-1 jobs needs two GoS-2 jobs");
            }
            let on_m2 = rng.random_range(min_on_m2..=max_on_m2);
            let on_m1_gos2 = n2 - on_m2;
            let pieces_m1 = n1 + on_m1_gos2;
            if (pieces_m1.max(on_m2) as i64) > bound {
                return infeasible("denominator bound smaller than the number of pieces");
            }
            let m1 = split(&mut rng, &int(1), pieces_m1, bound);
            let m2 = split(&mut rng, &int(1), on_m2, bound);
            for (k, size) in m1.into_iter().enumerate() {
                jobs.push((size, if k < n1 { Gos::One } else { Gos::Two }));
            }
            jobs.extend(m2.into_iter().map(|s| (s, Gos::Two)));
        }
        FillMode::SlackFill => {
            if (n1.max(n2) as i64) > bound {
                return infeasible("denominator bound smaller than the number of pieces");
            }
            let (fixed, rest) = if n1 > 0 { (n1, n2) } else { (1, n2 - 1) };
            let gos = if n1 > 0 { Gos::One } else { Gos::Two };
            jobs.extend(
                split(&mut rng, &int(1), fixed, bound)
                    .into_iter()
                    .map(|s| (s, gos)),
            );
            if rest > 0 {
                let den = rng.random_range(rest as i64..=bound);
                let units = rng.random_range(rest as i64..=den);
                jobs.extend(
                    split_units(&mut rng, units, den, rest)
                        .into_iter()
                        .map(|s| (s, Gos::Two)),
                );
            }
        }
    }
    jobs.shuffle(&mut rng);
    Instance::new(jobs, int(1))
}

/// Stick-breaking of `total` into `pieces` positive multiples of `total / den` for a
/// random `den <= bound`.
fn split(rng: &mut ChaCha8Rng, total: &Rational, pieces: usize, bound: i64) -> Vec<Rational> {
    if pieces == 0 {
        return Vec::new();
    }
    let den = rng.random_range(pieces as i64..=bound);
    split_units(rng, den, den, pieces)
        .into_iter()
        .map(|s| s * total)
        .collect()
}

/// `units / den` cut into `pieces` positive multiples of `1 / den`.
fn split_units(rng: &mut ChaCha8Rng, units: i64, den: i64, pieces: usize) -> Vec<Rational> {
    let mut cuts = BTreeSet::new();
    while cuts.len() < pieces - 1 {
        cuts.insert(rng.random_range(1..units));
    }
    let mut prev = 0;
    let mut out = Vec::with_capacity(pieces);
    for c in cuts.into_iter().chain(std::iter::once(units)) {
        out.push(q(c - prev, den));
        prev = c;
    }
    out
}
