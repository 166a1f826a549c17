//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hierstretch::adversary::{default_theta, AdversaryKind};
use hierstretch::harness::{
    adversary_specs, curve, duel, duel_row, guarantee_suite, m2_floor_suite, oracle_suite,
    GuaranteeSummary, DEFAULT_SEED,
};
use hierstretch::rational::{format_rational, int, q, to_f64};
use hierstretch::{ratio_bound, AlgorithmId, Rational};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn seed() -> u64 {
    std::env::var("HIERSTRETCH_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn bound_table() -> Outcome {
    let grid = [
        int(0),
        q(1, 4),
        q(1, 2),
        q(3, 5),
        q(2, 3),
        q(7, 10),
        q(3, 4),
        int(1),
        q(5, 2),
        int(3),
        int(10),
    ];
    let expected = [
        q(3, 2),
        q(3, 2),
        q(3, 2),
        q(7, 5),
        q(4, 3),
        q(13, 10),
        q(5, 4),
        q(5, 4),
        q(5, 4),
        q(11, 9),
        q(25, 23),
    ];
    let (rows, took) = timed(|| curve(&grid).unwrap());
    let got: Vec<Rational> = rows.into_iter().map(|r| r.bound).collect();
    let mismatches = got.iter().zip(&expected).filter(|(a, b)| a != b).count();
    outcome(
        mismatches == 0 && took < Duration::from_secs(1),
        format!("{mismatches} mismatches in {took:.2?}"),
    )
}

fn guarantees(summary: &GuaranteeSummary, took: Duration) -> Outcome {
    let worst = summary
        .rows
        .iter()
        .map(|r| {
            format!(
                "{}:{}<={}",
                format_rational(&r.m),
                format_rational(&r.worst_makespan),
                format_rational(&r.bound)
            )
        })
        .collect::<Vec<_>>()
        .join(" ");
    for f in &summary.failures {
        eprintln!(
            "  failure: {} {} {:?}",
            f.instance_id, f.algorithm, f.violations
        );
    }
    outcome(
        summary.passed() && took < Duration::from_secs(300),
        format!(
            "{} instances x {} m, {} violations in {took:.1?}; worst {worst}",
            summary.instances,
            summary.rows.len(),
            summary.violations()
        ),
    )
}

fn once_only(summary: &GuaranteeSummary) -> Outcome {
    let repacks = summary
        .rows
        .iter()
        .filter(|r| {
            matches!(
                r.algorithm,
                AlgorithmId::B | AlgorithmId::C | AlgorithmId::D
            )
        })
        .map(|r| r.max_repacks)
        .max()
        .unwrap_or(0);
    outcome(
        summary.once_only_violations() == 0,
        format!(
            "{} runs with a second repack; max repacks per run {repacks}",
            summary.once_only_violations()
        ),
    )
}

fn tightness() -> Outcome {
    let (rows, took) = timed(|| {
        adversary_specs()
            .iter()
            .map(|s| duel_row(s, &duel(s).unwrap()).unwrap())
            .filter(|r| r.tight.is_some())
            .collect::<Vec<_>>()
    });
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| r.tight != Some(true) || !r.certified)
        .map(|r| {
            format!(
                "{} vs {} at {}",
                r.spec.adversary,
                r.spec.algorithm,
                format_rational(&r.spec.m)
            )
        })
        .collect();
    let widest_gap = rows
        .iter()
        .filter_map(|r| Some(to_f64(r.bound.as_ref()?) - to_f64(r.ratio.as_ref()?)))
        .fold(0.0f64, f64::max);
    outcome(
        rows.len() == 10 && bad.is_empty() && took < Duration::from_secs(10),
        format!(
            "{} duels, largest gap to bound {widest_gap:.5}, failing {bad:?}, {took:.2?}",
            rows.len()
        ),
    )
}

fn foreign_soundness() -> Outcome {
    let rows: Vec<_> = adversary_specs()
        .into_iter()
        .filter(|s| AlgorithmId::FOREIGN.contains(&s.algorithm))
        .map(|s| duel_row(&s, &duel(&s).unwrap()).unwrap())
        .collect();
    let covered: Vec<AdversaryKind> = AdversaryKind::ALL
        .into_iter()
        .filter(|k| rows.iter().any(|r| r.spec.adversary == *k))
        .collect();
    let bad = rows.iter().filter(|r| !r.sound).count();
    outcome(
        bad == 0 && covered.len() == 4,
        format!(
            "{} duels over {} adversaries, {bad} below claim",
            rows.len(),
            covered.len()
        ),
    )
}

fn total_size() -> Outcome {
    let theta = default_theta();
    let residual = {
        let t = to_f64(&theta);
        (4.0 * t * t + t - 2.0).abs()
    };
    let floor = q(118604, 100000);
    let rows: Vec<_> = adversary_specs()
        .into_iter()
        .filter(|s| s.adversary == AdversaryKind::TotalSize)
        .map(|s| duel_row(&s, &duel(&s).unwrap()).unwrap())
        .collect();
    let worst = rows
        .iter()
        .filter_map(|r| r.ratio.clone())
        .min()
        .unwrap_or_else(|| int(0));
    let all_forced = rows
        .iter()
        .all(|r| r.sound && r.ratio.as_ref().is_some_and(|x| *x >= floor));
    let far = ratio_bound(&int(100)).unwrap().bound;
    outcome(
        all_forced && rows.len() == 15 && far < q(101, 100) && residual < 1e-8,
        format!(
            "{} duels, weakest ratio {:.6}, known-opt bound at 100 is {:.6}",
            rows.len(),
            to_f64(&worst),
            to_f64(&far)
        ),
    )
}

fn m2_floor(seed: u64) -> Outcome {
    let s = m2_floor_suite(seed, 1000, &int(3)).unwrap();
    for f in &s.failures {
        eprintln!("  failure: {} {:?}", f.instance_id, f.violations);
    }
    outcome(
        s.runs == 1000 && s.violations == 0,
        format!("{} runs, {} violations", s.runs, s.violations),
    )
}

fn oracle(seed: u64) -> Outcome {
    let s = oracle_suite(seed, 500).unwrap();
    let explicit: Vec<String> = s
        .explicit
        .iter()
        .map(|c| format!("{}={}", c.id, format_rational(&c.opt)))
        .collect();
    outcome(
        s.passed() && s.explicit.len() == 3,
        format!(
            "{}/{} planted optima confirmed; {}",
            s.generated_ok,
            s.generated,
            explicit.join(" ")
        ),
    )
}

fn main() -> ExitCode {
    let seed = seed();
    println!("acceptance run, seed {seed}");
    let (summary, took) = timed(|| guarantee_suite(seed, 10_000).unwrap());
    let results = [
        ("1 bound table", bound_table()),
        ("2 guarantee suite", guarantees(&summary, took)),
        ("3 once-only", once_only(&summary)),
        ("4 adversary tightness", tightness()),
        ("5 foreign soundness", foreign_soundness()),
        ("6 total-size separation", total_size()),
        ("7 machine-2 floor", m2_floor(seed)),
        ("8 oracle sanity", oracle(seed)),
    ];
    let mut failed = 0;
    for (name, o) in &results {
        println!(
            "{} {name}: {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        );
        failed += usize::from(!o.passed);
    }
    println!(
        "{} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
