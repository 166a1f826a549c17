//! Runs schedulers over instances under invariant monitors, sweeps the bound curve
//! and drives the seeded suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::adversary::{run_duel, AdversaryKind, DuelTranscript};
use crate::algorithms::{AlgorithmId, Placement, Step};
use crate::bound::{mu, ratio_bound, RegimeBound};
use crate::error::{Error, Result};
use crate::generators::{generate, FillMode, GenConfig};
use crate::instance::Instance;
use crate::job::{Gos, Job, MachineId};
use crate::oracle::{brute_opt, opt_prefix_loads, prefix_opt_monotone_check};
use crate::rational::{format_rational, int, min, q, to_f64, Rational};
use crate::state::{LedgerRecord, MigrationLedger, ScheduleState};

pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    Makespan,
    Migration,
    Hierarchy,
    OnceOnly,
    Window,
    M2Floor,
    Scheduler,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub job: usize,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub instance_id: String,
    pub algorithm: AlgorithmId,
    #[serde(with = "crate::rational::serde_str")]
    pub m: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub declared_opt: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub load1: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub load2: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub makespan: Rational,
    #[serde(with = "crate::rational::serde_opt_str")]
    pub oracle_opt: Option<Rational>,
    /// Makespan over the oracle optimum, or over the declared one without oracle.
    #[serde(with = "crate::rational::serde_str")]
    pub ratio: Rational,
    /// Guaranteed ratio for this algorithm at `m`, if it has one.
    #[serde(with = "crate::rational::serde_opt_str")]
    pub bound: Option<Rational>,
    #[serde(with = "crate::rational::serde_str")]
    pub max_migration_ratio: Rational,
    /// Arrivals handled by a repacking step.
    pub repack_count: usize,
    pub violations: Vec<Violation>,
}

impl RunReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, kind: ViolationKind) -> usize {
        self.violations.iter().filter(|v| v.kind == kind).count()
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    /// Compute the optimum with the oracle and report the true ratio.
    pub oracle: bool,
    /// For Algorithm A, check machine 2 against a fixed optimum after every arrival.
    pub m2_floor: bool,
}

fn guaranteed_bound(algorithm: AlgorithmId, m: &Rational) -> Result<Option<Rational>> {
    Ok(match algorithm {
        AlgorithmId::A | AlgorithmId::B | AlgorithmId::C | AlgorithmId::D => {
            Some(ratio_bound(m)?.bound)
        }
        AlgorithmId::Baseline => Some(q(3, 2)),
        _ => None,
    })
}

/// Per-run checks fed after every applied arrival, in the normalized scale (optimum 1).
struct Monitor {
    algorithm: AlgorithmId,
    m: Rational,
    bound: Option<Rational>,
    migration_cap: Rational,
    /// Machine-2 loads of a fixed optimum, by prefix length.
    opt_m2: Option<Vec<Rational>>,
    repacks: usize,
    violations: Vec<Violation>,
}

impl Monitor {
    fn flag(&mut self, kind: ViolationKind, job: usize, detail: String) {
        self.violations.push(Violation { kind, job, detail });
    }

    fn after(
        &mut self,
        before: &ScheduleState,
        state: &ScheduleState,
        job: &Job,
        placement: &Placement,
        record: &LedgerRecord,
    ) {
        let j = job.index;
        let p = &job.size;
        if let Some(bound) = &self.bound {
            let ms = state.makespan();
            if ms > *bound {
                self.flag(
                    ViolationKind::Makespan,
                    j,
                    format!(
                        "makespan {} > {}",
                        format_rational(&ms),
                        format_rational(bound)
                    ),
                );
            }
        }
        if record.migrated > &self.migration_cap * p {
            self.flag(
                ViolationKind::Migration,
                j,
                format!(
                    "moved {} > {} * {}",
                    format_rational(&record.migrated),
                    format_rational(&self.migration_cap),
                    format_rational(p)
                ),
            );
        }
        for h in state.hierarchy_violations() {
            self.flag(ViolationKind::Hierarchy, j, format!("GoS-1 job {h} on M2"));
        }
        for mv in &placement.decision.migrations {
            if before
                .job(mv.job)
                .is_some_and(|moved| moved.gos == Gos::One)
            {
                self.flag(
                    ViolationKind::Hierarchy,
                    j,
                    format!("migrated GoS-1 job {}", mv.job),
                );
            }
        }

        let repacking = placement.step.is_repacking();
        if repacking {
            self.repacks += 1;
        }
        let once_only = matches!(
            self.algorithm,
            AlgorithmId::B | AlgorithmId::C | AlgorithmId::D
        );
        if once_only && repacking && self.repacks == 2 {
            self.flag(
                ViolationKind::OnceOnly,
                j,
                "second arrival in step 4/5".into(),
            );
        }
        if placement.step == Step::Five {
            self.window(before, state, job, placement, record);
        }

        if let Some(opt_m2) = &self.opt_m2 {
            let target = min(&(int(1) - mu(&self.m)), &opt_m2[j - 1]);
            if *state.y() < target {
                self.flag(
                    ViolationKind::M2Floor,
                    j,
                    format!(
                        "y = {} < {}",
                        format_rational(state.y()),
                        format_rational(&target)
                    ),
                );
            }
        }
    }

    fn window(
        &mut self,
        before: &ScheduleState,
        state: &ScheduleState,
        job: &Job,
        placement: &Placement,
        record: &LedgerRecord,
    ) {
        let j = job.index;
        let p = &job.size;
        let to_m2 = placement.decision.target == MachineId::M2;
        let w = &record.migrated;
        let gamma = placement
            .selection
            .as_ref()
            .and_then(|s| s.target_deficit.clone());
        let fmt = |r: &Rational| format_rational(r);
        match self.algorithm {
            AlgorithmId::C => {
                let gamma = gamma.unwrap_or_else(|| int(0));
                if *w < gamma || *w > &self.m * p {
                    self.flag(
                        ViolationKind::Window,
                        j,
                        format!("w = {} outside [{}, M p]", fmt(w), fmt(&gamma)),
                    );
                }
            }
            AlgorithmId::B if to_m2 => {
                let gamma = gamma.unwrap_or_else(|| int(0));
                if p + before.max_y() <= q(5, 4)
                    && (*w < gamma || *w > q(3, 4) * p || *w >= q(1, 2))
                {
                    self.flag(
                        ViolationKind::Window,
                        j,
                        format!("w = {} outside [{}, 3p/4] or >= 1/2", fmt(w), fmt(&gamma)),
                    );
                }
            }
            AlgorithmId::D if to_m2 => {
                let y = state.y();
                if *y < self.m || *y > int(2) - &self.m {
                    self.flag(
                        ViolationKind::Window,
                        j,
                        format!("y = {} outside [M, 2 - M]", fmt(y)),
                    );
                }
            }
            _ => {}
        }
    }
}

/// Streams `inst` through `algorithm` at migration factor `m`. Sizes are divided by
/// the declared optimum first, and loads are reported back in the original scale.
pub fn run_instance(
    id: &str,
    inst: &Instance,
    algorithm: AlgorithmId,
    m: &Rational,
    options: RunOptions,
) -> Result<RunReport> {
    if inst.declared_opt <= int(0) {
        return Err(Error::Parse("declared optimum must be positive".into()));
    }
    let scheduler = algorithm.build(m)?;
    let norm = inst.normalized();
    let bound = guaranteed_bound(algorithm, m)?;
    let oracle_opt = if options.oracle {
        Some(brute_opt(&inst.jobs)?)
    } else {
        None
    };
    let opt_m2 = if options.m2_floor && algorithm == AlgorithmId::A {
        let fixed = opt_prefix_loads(&norm.jobs)?;
        Some((1..=norm.jobs.len()).map(|j| fixed.o2(j)).collect())
    } else {
        None
    };
    let mut monitor = Monitor {
        algorithm,
        m: m.clone(),
        bound: bound.clone(),
        migration_cap: if algorithm == AlgorithmId::B {
            q(3, 4)
        } else {
            m.clone()
        },
        opt_m2,
        repacks: 0,
        violations: Vec::new(),
    };

    let mut state = ScheduleState::new();
    let mut ledger = MigrationLedger::new(m.clone());
    for job in &norm.jobs {
        let placement = match scheduler.on_arrival(&state, job) {
            Ok(p) => p,
            Err(e) => {
                monitor.flag(ViolationKind::Scheduler, job.index, e.to_string());
                break;
            }
        };
        let before = state.clone();
        if let Err(e) = state.apply(job, &placement.decision, &mut ledger) {
            monitor.flag(ViolationKind::Scheduler, job.index, e.to_string());
            break;
        }
        let record = ledger.records.last().expect("record pushed").clone();
        monitor.after(&before, &state, job, &placement, &record);
    }

    let scale = &inst.declared_opt;
    let makespan = state.makespan() * scale;
    let ratio = &makespan / oracle_opt.as_ref().unwrap_or(scale);
    Ok(RunReport {
        instance_id: id.to_string(),
        algorithm,
        m: m.clone(),
        declared_opt: scale.clone(),
        load1: state.load1() * scale,
        load2: state.load2() * scale,
        makespan,
        oracle_opt,
        ratio,
        bound,
        max_migration_ratio: ledger.max_ratio.clone(),
        repack_count: monitor.repacks,
        violations: monitor.violations,
    })
}

/// Bound for every `m` of the grid, in grid order.
pub fn curve(grid: &[Rational]) -> Result<Vec<RegimeBound>> {
    grid.iter().map(ratio_bound).collect()
}

pub fn curve_csv(rows: &[RegimeBound]) -> String {
    let mut out = String::from("m,regime,bound_num,bound_den,bound_decimal\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{:.6}\n",
            format_rational(&r.m),
            r.regime.name(),
            r.bound.numer(),
            r.bound.denom(),
            to_f64(&r.bound)
        ));
    }
    out
}

/// The migration factors of the guarantee suite, one or more per regime.
pub fn guarantee_grid() -> Vec<Rational> {
    vec![
        q(1, 2),
        q(11, 20),
        q(3, 5),
        q(13, 20),
        q(2, 3),
        q(7, 10),
        q(73, 100),
        q(3, 4),
        int(1),
        q(5, 2),
        int(3),
        int(5),
    ]
}

/// Generator configuration of instance `i` in a suite seeded with `seed`: up to 10
/// GoS-2 and 4 GoS-1 jobs, denominators at most 1000, fill mode drawn at random.
pub fn suite_config(seed: u64, i: usize) -> GenConfig {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let n_gos2 = rng.random_range(1..=10);
    let n_gos1 = rng.random_range(0..=4);
    let exact = rng.random_bool(0.5) && (n_gos2 >= 2 || n_gos1 >= 1);
    GenConfig {
        seed: rng.random(),
        n_gos2,
        n_gos1,
        denominator_bound: 1000,
        fill_mode: if exact {
            FillMode::ExactFill
        } else {
            FillMode::SlackFill
        },
    }
}

/// Same as [`suite_config`] but always ExactFill.
pub fn exact_config(seed: u64, i: usize) -> GenConfig {
    let mut c = suite_config(seed, i);
    c.fill_mode = FillMode::ExactFill;
    if c.n_gos2 + c.n_gos1 < 2 || c.n_gos2 == 1 && c.n_gos1 == 0 {
        c.n_gos2 = 2;
    }
    c
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GuaranteeRow {
    #[serde(with = "crate::rational::serde_str")]
    pub m: Rational,
    pub algorithm: AlgorithmId,
    pub runs: usize,
    #[serde(with = "crate::rational::serde_str")]
    pub bound: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub worst_makespan: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub max_migration_ratio: Rational,
    pub max_repacks: usize,
    pub violations: usize,
    pub once_only_violations: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GuaranteeSummary {
    pub seed: u64,
    pub instances: usize,
    pub rows: Vec<GuaranteeRow>,
    /// Up to the first ten failing runs.
    pub failures: Vec<RunReport>,
}

impl GuaranteeSummary {
    pub fn violations(&self) -> usize {
        self.rows.iter().map(|r| r.violations).sum()
    }

    pub fn once_only_violations(&self) -> usize {
        self.rows.iter().map(|r| r.once_only_violations).sum()
    }

    pub fn passed(&self) -> bool {
        self.violations() == 0
    }
}

/// Every grid value's regime algorithm on `count` generated instances.
pub fn guarantee_suite(seed: u64, count: usize) -> Result<GuaranteeSummary> {
    let instances: Vec<Instance> = (0..count)
        .into_par_iter()
        .map(|i| generate(&suite_config(seed, i)))
        .collect::<Result<_>>()?;
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for m in guarantee_grid() {
        let algorithm = AlgorithmId::auto(&m)?;
        let reports: Vec<RunReport> = instances
            .par_iter()
            .enumerate()
            .map(|(i, inst)| {
                run_instance(
                    &format!("{seed}-{i}"),
                    inst,
                    algorithm,
                    &m,
                    RunOptions::default(),
                )
            })
            .collect::<Result<_>>()?;
        let bound = ratio_bound(&m)?.bound;
        let mut row = GuaranteeRow {
            m: m.clone(),
            algorithm,
            runs: reports.len(),
            bound,
            worst_makespan: int(0),
            max_migration_ratio: int(0),
            max_repacks: 0,
            violations: 0,
            once_only_violations: 0,
        };
        for r in reports {
            if r.makespan > row.worst_makespan {
                row.worst_makespan = r.makespan.clone();
            }
            if r.max_migration_ratio > row.max_migration_ratio {
                row.max_migration_ratio = r.max_migration_ratio.clone();
            }
            row.max_repacks = row.max_repacks.max(r.repack_count);
            row.violations += r.violations.len();
            row.once_only_violations += r.count(ViolationKind::OnceOnly);
            if !r.ok() && failures.len() < 10 {
                failures.push(r);
            }
        }
        rows.push(row);
    }
    Ok(GuaranteeSummary {
        seed,
        instances: count,
        rows,
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FloorSummary {
    pub seed: u64,
    pub runs: usize,
    pub violations: usize,
    pub failures: Vec<RunReport>,
}

/// Algorithm A at `m` with the fixed-optimum check on machine 2 after every arrival.
pub fn m2_floor_suite(seed: u64, count: usize, m: &Rational) -> Result<FloorSummary> {
    let reports: Vec<RunReport> = (0..count)
        .into_par_iter()
        .map(|i| {
            let inst = generate(&suite_config(seed, i))?;
            let options = RunOptions {
                oracle: false,
                m2_floor: true,
            };
            run_instance(&format!("{seed}-{i}"), &inst, AlgorithmId::A, m, options)
        })
        .collect::<Result<_>>()?;
    Ok(FloorSummary {
        seed,
        runs: reports.len(),
        violations: reports.iter().map(|r| r.violations.len()).sum(),
        failures: reports.into_iter().filter(|r| !r.ok()).take(10).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCase {
    pub id: String,
    pub jobs: usize,
    #[serde(with = "crate::rational::serde_str")]
    pub opt: Rational,
    pub monotone: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub seed: u64,
    pub generated: usize,
    pub generated_ok: usize,
    pub explicit: Vec<OracleCase>,
    /// Up to the first ten generated instances whose optimum is not 1 or whose prefix
    /// optima are not monotone.
    pub failures: Vec<OracleCase>,
}

impl OracleSummary {
    pub fn passed(&self) -> bool {
        self.generated_ok == self.generated
            && self.explicit.iter().all(|c| c.opt == int(1) && c.monotone)
    }
}

/// The lower-bound instances of the three adversaries, each with optimum 1.
pub fn explicit_instances() -> Vec<(&'static str, Vec<Job>)> {
    let build = |sizes: &[(Rational, Gos)]| {
        Instance::new(sizes.iter().cloned(), int(1))
            .expect("positive sizes")
            .jobs
    };
    vec![
        (
            "high",
            build(&[
                (q(4, 5), Gos::Two),
                (q(3, 5), Gos::Two),
                (q(2, 5), Gos::Two),
                (q(1, 5), Gos::One),
            ]),
        ),
        (
            "mid",
            build(&[
                (q(61, 100), Gos::Two),
                (int(1), Gos::Two),
                (q(39, 100), Gos::One),
            ]),
        ),
        (
            "low",
            build(&[(q(1, 2), Gos::Two), (int(1), Gos::Two), (q(1, 2), Gos::One)]),
        ),
    ]
}

fn oracle_case(id: String, jobs: &[Job]) -> Result<OracleCase> {
    let report = prefix_opt_monotone_check(jobs)?;
    Ok(OracleCase {
        id,
        jobs: jobs.len(),
        opt: brute_opt(jobs)?,
        monotone: report.ok(),
    })
}

/// Planted optimum on `count` ExactFill instances plus the explicit instances.
pub fn oracle_suite(seed: u64, count: usize) -> Result<OracleSummary> {
    let cases: Vec<OracleCase> = (0..count)
        .into_par_iter()
        .map(|i| {
            let inst = generate(&exact_config(seed, i))?;
            oracle_case(format!("{seed}-{i}"), &inst.jobs)
        })
        .collect::<Result<_>>()?;
    let explicit = explicit_instances()
        .into_iter()
        .map(|(id, jobs)| oracle_case(id.into(), &jobs))
        .collect::<Result<_>>()?;
    let bad: Vec<OracleCase> = cases
        .into_iter()
        .filter(|c| c.opt != int(1) || !c.monotone)
        .collect();
    Ok(OracleSummary {
        seed,
        generated: count,
        generated_ok: count - bad.len(),
        explicit,
        failures: bad.into_iter().take(10).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DuelSpec {
    pub adversary: AdversaryKind,
    pub algorithm: AlgorithmId,
    #[serde(with = "crate::rational::serde_str")]
    pub m: Rational,
    #[serde(with = "crate::rational::serde_opt_str")]
    pub param: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DuelRow {
    pub spec: DuelSpec,
    #[serde(with = "crate::rational::serde_opt_str")]
    pub ratio: Option<Rational>,
    #[serde(with = "crate::rational::serde_str")]
    pub claimed_min_ratio: Rational,
    #[serde(with = "crate::rational::serde_opt_str")]
    pub bound: Option<Rational>,
    pub certified: bool,
    pub sound: bool,
    /// For the regime's own algorithm: the ratio is within `[bound - 2/1000, bound]`.
    pub tight: Option<bool>,
}

/// Plays one duel and checks certification.
pub fn duel(spec: &DuelSpec) -> Result<DuelTranscript> {
    let adversary = spec.adversary.build(&spec.m, spec.param.as_ref())?;
    let scheduler = spec.algorithm.build(&spec.m)?;
    run_duel(adversary.as_ref(), scheduler.as_ref())
}

fn tightness_specs() -> Vec<DuelSpec> {
    let spec = |adversary, algorithm, m: Rational, param: Option<Rational>| DuelSpec {
        adversary,
        algorithm,
        m,
        param,
    };
    let eps = Some(q(1, 1000));
    let mut out = Vec::new();
    for m in [q(5, 2), int(3), int(5)] {
        let gamma = mu(&m) * q(999, 1000);
        out.push(spec(AdversaryKind::High, AlgorithmId::A, m, Some(gamma)));
    }
    for m in [q(1, 2), q(3, 5)] {
        out.push(spec(AdversaryKind::Mid, AlgorithmId::C, m, eps.clone()));
    }
    for m in [q(2, 3), q(7, 10)] {
        out.push(spec(AdversaryKind::Mid, AlgorithmId::D, m, eps.clone()));
    }
    for m in [int(0), q(1, 4), q(49, 100)] {
        out.push(spec(AdversaryKind::Low, AlgorithmId::Baseline, m, None));
    }
    out
}

/// Every adversary setting of the tightness set against the regime's algorithm, the
/// baseline and the foreign schedulers, plus the total-size adversary at `m` in
/// {1, 10, 100} against every scheduler that accepts that `m`.
pub fn adversary_specs() -> Vec<DuelSpec> {
    let mut out = Vec::new();
    for base in tightness_specs() {
        out.push(base.clone());
        let others = [AlgorithmId::Baseline]
            .into_iter()
            .chain(AlgorithmId::FOREIGN)
            .filter(|a| *a != base.algorithm);
        for algorithm in others {
            out.push(DuelSpec {
                algorithm,
                ..base.clone()
            });
        }
    }
    for m in [int(1), int(10), int(100)] {
        let own = AlgorithmId::auto(&m).expect("non-negative");
        for algorithm in [own, AlgorithmId::Baseline]
            .into_iter()
            .chain(AlgorithmId::FOREIGN)
        {
            out.push(DuelSpec {
                adversary: AdversaryKind::TotalSize,
                algorithm,
                m: m.clone(),
                param: None,
            });
        }
    }
    out
}

pub fn duel_row(spec: &DuelSpec, t: &DuelTranscript) -> Result<DuelRow> {
    let bound = guaranteed_bound(spec.algorithm, &spec.m)?;
    let own = match spec.adversary {
        AdversaryKind::TotalSize => false,
        AdversaryKind::Low => spec.algorithm == AlgorithmId::Baseline,
        _ => AlgorithmId::auto(&spec.m)? == spec.algorithm,
    };
    let tight = own.then(|| match (&t.ratio, &bound) {
        (Some(r), Some(b)) => *r <= *b && *r >= b - q(2, 1000),
        _ => false,
    });
    Ok(DuelRow {
        spec: spec.clone(),
        ratio: t.ratio.clone(),
        claimed_min_ratio: t.claimed_min_ratio.clone(),
        bound,
        certified: t.certified(),
        sound: t.sound(),
        tight,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdversarySummary {
    pub duels: Vec<DuelRow>,
}

impl AdversarySummary {
    pub fn passed(&self) -> bool {
        self.duels.iter().all(|d| d.sound && d.tight != Some(false))
    }
}

pub fn adversary_suite() -> Result<AdversarySummary> {
    let duels = adversary_specs()
        .par_iter()
        .map(|spec| duel_row(spec, &duel(spec)?))
        .collect::<Result<_>>()?;
    Ok(AdversarySummary { duels })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(sizes: &[(i64, i64, u8)], opt: Rational) -> Instance {
        Instance::new(
            sizes
                .iter()
                .map(|&(n, d, g)| (q(n, d), Gos::try_from(g).unwrap())),
            opt,
        )
        .unwrap()
    }

    #[test]
    fn baseline_on_lower_bound_instance() {
        let i = inst(&[(1, 2, 2), (1, 1, 2), (1, 2, 1)], int(1));
        let options = RunOptions {
            oracle: true,
            m2_floor: false,
        };
        let r = run_instance("low", &i, AlgorithmId::Baseline, &q(1, 4), options).unwrap();
        assert_eq!(r.ratio, q(3, 2));
        assert_eq!(r.oracle_opt, Some(int(1)));
        assert!(r.ok());
    }

    #[test]
    fn rescales_declared_opt() {
        let unit = inst(&[(1, 2, 2), (1, 1, 2), (1, 2, 1)], int(1));
        let doubled = inst(&[(1, 1, 2), (2, 1, 2), (1, 1, 1)], int(2));
        let a = run_instance(
            "a",
            &unit,
            AlgorithmId::Baseline,
            &int(0),
            RunOptions::default(),
        )
        .unwrap();
        let b = run_instance(
            "b",
            &doubled,
            AlgorithmId::Baseline,
            &int(0),
            RunOptions::default(),
        )
        .unwrap();
        assert_eq!(b.makespan, a.makespan * int(2));
        assert_eq!(a.ratio, b.ratio);
    }

    #[test]
    fn regime_mismatch_propagates() {
        let i = inst(&[(1, 2, 2)], int(1));
        let err = run_instance("x", &i, AlgorithmId::B, &q(3, 5), RunOptions::default());
        assert!(matches!(err, Err(Error::RegimeMismatch { .. })));
    }

    #[test]
    fn curve_csv_rows() {
        let rows = curve(&[int(0), int(3)]).unwrap();
        let csv = curve_csv(&rows);
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], "m,regime,bound_num,bound_den,bound_decimal");
        assert_eq!(lines[1], "0/1,no-mig,3,2,1.500000");
        assert_eq!(lines[2], "3/1,high,11,9,1.222222");
        assert!(matches!(curve(&[q(-1, 2)]), Err(Error::NegativeM(_))));
    }

    #[test]
    fn suite_configs_are_deterministic_and_feasible() {
        for i in 0..500 {
            let c = suite_config(7, i);
            assert_eq!(c, suite_config(7, i));
            assert!(generate(&c).is_ok(), "{c:?}");
            assert!(generate(&exact_config(7, i)).is_ok());
        }
    }

    #[test]
    fn small_guarantee_suite() {
        let s = guarantee_suite(1, 100).unwrap();
        assert!(s.passed(), "{:?}", s.failures);
        assert_eq!(s.rows.len(), 12);
    }

    #[test]
    fn explicit_instances_have_unit_optimum() {
        for (id, jobs) in explicit_instances() {
            assert_eq!(brute_opt(&jobs).unwrap(), int(1), "{id}");
        }
    }

    #[test]
    fn adversary_specs_cover_every_pairing() {
        let specs = adversary_specs();
        assert_eq!(specs.len(), 7 * 5 + 3 * 4 + 3 * 5);
    }
}
