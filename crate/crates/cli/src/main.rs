use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hierstretch::adversary::{AdversaryKind, DuelOutcome};
use hierstretch::generators::{generate, FillMode, GenConfig};
use hierstretch::harness::{
    adversary_suite, curve, curve_csv, duel, duel_row, guarantee_suite, oracle_suite, run_instance,
    DuelSpec, RunOptions, DEFAULT_SEED,
};
use hierstretch::oracle::DEFAULT_LIMIT;
use hierstretch::rational::{format_rational, parse_rational, to_f64};
use hierstretch::{validate_instance, AlgorithmId, Instance, Rational};

#[derive(Parser)]
#[command(
    name = "hierstretch",
    version,
    about = "Semi-online bin stretching with migration on two hierarchical machines"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scheduler over an instance file.
    Run {
        instance: PathBuf,
        #[arg(short, long, default_value = "auto")]
        algorithm: String,
        /// Migration factor, as `a/b`, an integer or an exact decimal.
        #[arg(short, long, value_parser = rational)]
        m: Rational,
        /// Also compute the optimum by exhaustive search.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Play an adversary against a scheduler.
    Duel {
        adversary: String,
        #[arg(short, long, default_value = "auto")]
        algorithm: String,
        #[arg(short, long, value_parser = rational)]
        m: Rational,
        /// gamma for high, eps for mid, theta for totalsize.
        #[arg(short, long, value_parser = rational)]
        param: Option<Rational>,
        #[arg(long)]
        json: bool,
    },
    /// Tight competitive ratio over a grid of migration factors.
    Curve {
        #[arg(value_parser = rational, num_args = 0.., default_values_t = default_grid())]
        grid: Vec<Rational>,
        #[arg(long)]
        csv: bool,
    },
    /// Generate an instance with optimum 1.
    Gen {
        #[arg(long, env = "HIERSTRETCH_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        n_gos2: usize,
        #[arg(long, default_value_t = 2)]
        n_gos1: usize,
        #[arg(long, default_value_t = 1000)]
        denominator_bound: u32,
        #[arg(long, value_enum, default_value_t = Fill::Exact)]
        fill: Fill,
        /// Write to this file instead of stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check an instance file, including its declared optimum.
    Verify {
        instance: PathBuf,
        /// Skip the exhaustive optimum check.
        #[arg(long)]
        no_oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run one of the seeded suites.
    Suite {
        #[arg(value_enum)]
        suite: SuiteName,
        #[arg(long, env = "HIERSTRETCH_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Fill {
    Exact,
    Slack,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    Guarantees,
    Adversaries,
    Oracle,
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn default_grid() -> Vec<Rational> {
    [
        "0", "1/4", "1/2", "3/5", "2/3", "7/10", "3/4", "1", "5/2", "3", "10",
    ]
    .iter()
    .map(|s| parse_rational(s).expect("static grid"))
    .collect()
}

fn algorithm_for(name: &str, m: &Rational) -> Result<AlgorithmId> {
    Ok(if name.eq_ignore_ascii_case("auto") {
        AlgorithmId::auto(m)?
    } else {
        AlgorithmId::parse(name)?
    })
}

fn read_instance(path: &Path) -> Result<Instance> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(Instance::from_json(&text)?)
}

fn show(r: &Rational) -> String {
    format_rational(r)
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Run {
            instance,
            algorithm,
            m,
            oracle,
            json,
        } => {
            let inst = read_instance(&instance)?;
            let algorithm = algorithm_for(&algorithm, &m)?;
            let id = instance
                .file_stem()
                .map_or_else(String::new, |s| s.to_string_lossy().into_owned());
            let options = RunOptions {
                oracle,
                m2_floor: oracle,
            };
            let r = run_instance(&id, &inst, algorithm, &m, options)?;
            if json {
                print_json(&r)?;
            } else {
                println!(
                    "instance {}  algorithm {}  m {}",
                    r.instance_id,
                    r.algorithm,
                    show(&r.m)
                );
                println!(
                    "loads {} / {}  makespan {}",
                    show(&r.load1),
                    show(&r.load2),
                    show(&r.makespan)
                );
                if let Some(opt) = &r.oracle_opt {
                    println!("oracle opt {}", show(opt));
                }
                let bound = r.bound.as_ref().map_or("-".into(), show);
                println!(
                    "ratio {} ({:.6})  bound {bound}",
                    show(&r.ratio),
                    to_f64(&r.ratio)
                );
                println!(
                    "max migration ratio {}  repacks {}",
                    show(&r.max_migration_ratio),
                    r.repack_count
                );
                for v in &r.violations {
                    println!("violation {:?} at job {}: {}", v.kind, v.job, v.detail);
                }
            }
            Ok(status(r.ok()))
        }
        Command::Duel {
            adversary,
            algorithm,
            m,
            param,
            json,
        } => {
            let kind = AdversaryKind::parse(&adversary)?;
            let spec = DuelSpec {
                adversary: kind,
                algorithm: algorithm_for(&algorithm, &m)?,
                m,
                param,
            };
            let t = duel(&spec)?;
            let row = duel_row(&spec, &t)?;
            if json {
                print_json(&t)?;
            } else {
                println!("duel {} vs {} at m {}", kind, spec.algorithm, show(&spec.m));
                for round in &t.rounds {
                    let moved: Vec<usize> =
                        round.decision.migrations.iter().map(|mv| mv.job).collect();
                    println!(
                        "  job {} ({}, {}) -> {}  moved {:?}",
                        round.job.index,
                        show(&round.job.size),
                        u8::from(round.job.gos),
                        round.decision.target,
                        moved
                    );
                }
                if let DuelOutcome::SchedulerFault { job, error } = &t.outcome {
                    println!("scheduler fault at job {job}: {error}");
                }
                println!("loads {} / {}", show(&t.load1), show(&t.load2));
                let opt = t.certified_opt.as_ref().map_or("-".into(), show);
                println!("certified opt {opt}  oracle agrees {}", t.certified());
                let ratio = t.ratio.as_ref().map_or("-".into(), show);
                let bound = row.bound.as_ref().map_or("-".into(), show);
                println!(
                    "ratio {ratio}  claimed {}  bound {bound}",
                    show(&t.claimed_min_ratio)
                );
                for v in &t.proofing_violations {
                    println!("proofing violation: {v}");
                }
            }
            Ok(status(t.sound()))
        }
        Command::Curve { grid, csv } => {
            let rows = curve(&grid)?;
            if csv {
                print!("{}", curve_csv(&rows));
            } else {
                for r in &rows {
                    println!(
                        "{:>8}  {:<7} {:>9}  {:.6}",
                        show(&r.m),
                        r.regime.name(),
                        show(&r.bound),
                        to_f64(&r.bound)
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen {
            seed,
            n_gos2,
            n_gos1,
            denominator_bound,
            fill,
            out,
        } => {
            let config = GenConfig {
                seed,
                n_gos2,
                n_gos1,
                denominator_bound,
                fill_mode: match fill {
                    Fill::Exact => FillMode::ExactFill,
                    Fill::Slack => FillMode::SlackFill,
                },
            };
            let text = generate(&config)?.to_json();
            match out {
                Some(path) => std::fs::write(&path, text + "\n")
                    .with_context(|| format!("writing {}", path.display()))?,
                None => println!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            instance,
            no_oracle,
            json,
        } => {
            let inst = read_instance(&instance)?;
            let report = validate_instance(&inst, !no_oracle);
            if json {
                print_json(&report)?;
            } else {
                println!(
                    "{} jobs, declared opt {}",
                    inst.jobs.len(),
                    show(&inst.declared_opt)
                );
                if let Some(opt) = &report.oracle_opt {
                    println!("oracle opt {} (search cap 2^{DEFAULT_LIMIT})", show(opt));
                }
                for f in &report.failures {
                    println!("invalid: {f:?}");
                }
                println!(
                    "{}",
                    if report.is_valid() {
                        "valid"
                    } else {
                        "invalid"
                    }
                );
            }
            Ok(status(report.is_valid()))
        }
        Command::Suite {
            suite,
            seed,
            count,
            json,
        } => match suite {
            SuiteName::Guarantees => {
                let s = guarantee_suite(seed, count.unwrap_or(10_000))?;
                if json {
                    print_json(&s)?;
                } else {
                    println!("seed {}  instances {}", s.seed, s.instances);
                    for r in &s.rows {
                        println!(
                            "m {:>7} {:<8} worst {:>11} bound {:>6}  migration {:>5}  repacks<= {}  violations {}",
                            show(&r.m),
                            r.algorithm.to_string(),
                            show(&r.worst_makespan),
                            show(&r.bound),
                            show(&r.max_migration_ratio),
                            r.max_repacks,
                            r.violations
                        );
                    }
                }
                Ok(status(s.passed()))
            }
            SuiteName::Adversaries => {
                let s = adversary_suite()?;
                if json {
                    print_json(&s)?;
                } else {
                    for d in &s.duels {
                        let ratio = d.ratio.as_ref().map_or("fault".into(), show);
                        let tight = d
                            .tight
                            .map_or("", |t| if t { " tight" } else { " NOT TIGHT" });
                        println!(
                            "{:<9} vs {:<12} m {:>6}  ratio {:>14}  claimed {:>14}  {}{tight}",
                            d.spec.adversary.name(),
                            d.spec.algorithm.name(),
                            show(&d.spec.m),
                            ratio,
                            show(&d.claimed_min_ratio),
                            if d.sound { "sound" } else { "UNSOUND" }
                        );
                    }
                }
                Ok(status(s.passed()))
            }
            SuiteName::Oracle => {
                let s = oracle_suite(seed, count.unwrap_or(500))?;
                if json {
                    print_json(&s)?;
                } else {
                    println!(
                        "{}/{} generated instances have optimum 1 and monotone prefixes",
                        s.generated_ok, s.generated
                    );
                    for c in &s.explicit {
                        println!("{}: opt {} monotone {}", c.id, show(&c.opt), c.monotone);
                    }
                }
                Ok(status(s.passed()))
            }
        },
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
