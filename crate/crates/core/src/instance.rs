//! Bin-stretching instances and their JSON file format.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::job::{Gos, Job};
use crate::oracle;
use crate::rational::{format_rational, int, Rational};

/// Ordered job list with the optimal makespan announced to the scheduler.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub jobs: Vec<Job>,
    pub declared_opt: Rational,
}

#[derive(Serialize, Deserialize)]
struct WireJob {
    #[serde(with = "crate::rational::serde_str")]
    p: Rational,
    g: Gos,
}

#[derive(Serialize, Deserialize)]
struct WireInstance {
    #[serde(with = "crate::rational::serde_str")]
    declared_opt: Rational,
    jobs: Vec<WireJob>,
}

impl Instance {
    /// Indexes `(size, gos)` pairs in arrival order.
    pub fn new(
        sizes: impl IntoIterator<Item = (Rational, Gos)>,
        declared_opt: Rational,
    ) -> Result<Self> {
        let jobs = sizes
            .into_iter()
            .enumerate()
            .map(|(i, (p, g))| Job::new(i + 1, p, g))
            .collect::<Result<Vec<_>>>()?;
        Ok(Instance { jobs, declared_opt })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: WireInstance =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if !wire.declared_opt.is_positive() {
            return Err(Error::Parse(format!(
                "declared_opt must be positive, got {}",
                format_rational(&wire.declared_opt)
            )));
        }
        Instance::new(wire.jobs.into_iter().map(|j| (j.p, j.g)), wire.declared_opt)
    }

    pub fn to_json(&self) -> String {
        let wire = WireInstance {
            declared_opt: self.declared_opt.clone(),
            jobs: self
                .jobs
                .iter()
                .map(|j| WireJob {
                    p: j.size.clone(),
                    g: j.gos,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&wire).expect("instance serializes")
    }

    pub fn total(&self) -> Rational {
        self.jobs
            .iter()
            .fold(Rational::zero(), |acc, j| acc + &j.size)
    }

    pub fn gos1_total(&self) -> Rational {
        self.jobs
            .iter()
            .filter(|j| j.gos == Gos::One)
            .fold(Rational::zero(), |acc, j| acc + &j.size)
    }

    /// Divides every size by `declared_opt` so the announced optimum becomes 1.
    pub fn normalized(&self) -> Instance {
        if self.declared_opt.is_one() {
            return self.clone();
        }
        Instance {
            jobs: self
                .jobs
                .iter()
                .map(|j| Job {
                    index: j.index,
                    size: &j.size / &self.declared_opt,
                    gos: j.gos,
                })
                .collect(),
            declared_opt: Rational::one(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ValidationFailure {
    NonPositiveSize { job: usize },
    NonPositiveOpt,
    TotalExceedsTwiceOpt { total: String },
    Gos1ExceedsOpt { total: String },
    OracleMismatch { oracle: String },
    OracleUnavailable { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub failures: Vec<ValidationFailure>,
    #[serde(with = "crate::rational::serde_opt_str")]
    pub oracle_opt: Option<Rational>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the structural bin-stretching conditions and, with `check_opt`, that the
/// brute-force optimum equals the declared one.
pub fn validate_instance(inst: &Instance, check_opt: bool) -> ValidationReport {
    let mut failures = Vec::new();
    for j in &inst.jobs {
        if !j.size.is_positive() {
            failures.push(ValidationFailure::NonPositiveSize { job: j.index });
        }
    }
    if !inst.declared_opt.is_positive() {
        failures.push(ValidationFailure::NonPositiveOpt);
    }
    let total = inst.total();
    if total > int(2) * &inst.declared_opt {
        failures.push(ValidationFailure::TotalExceedsTwiceOpt {
            total: format_rational(&total),
        });
    }
    let gos1 = inst.gos1_total();
    if gos1 > inst.declared_opt {
        failures.push(ValidationFailure::Gos1ExceedsOpt {
            total: format_rational(&gos1),
        });
    }
    let mut oracle_opt = None;
    if check_opt {
        match oracle::brute_opt(&inst.jobs) {
            Ok(opt) => {
                if opt != inst.declared_opt {
                    failures.push(ValidationFailure::OracleMismatch {
                        oracle: format_rational(&opt),
                    });
                }
                oracle_opt = Some(opt);
            }
            Err(e) => failures.push(ValidationFailure::OracleUnavailable {
                reason: e.to_string(),
            }),
        }
    }
    ValidationReport {
        failures,
        oracle_opt,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn inst(jobs: &[((i64, i64), u8)]) -> Instance {
        Instance::new(
            jobs.iter()
                .map(|&((n, d), g)| (q(n, d), Gos::try_from(g).unwrap())),
            int(1),
        )
        .unwrap()
    }

    #[test]
    fn high_lower_bound_sand_instance_is_valid() {
        let mut jobs = vec![((4, 5), 2), ((3, 5), 2)];
        jobs.extend(std::iter::repeat_n(((1, 10), 2), 6));
        let r = validate_instance(&inst(&jobs), true);
        assert!(r.is_valid(), "{r:?}");
        assert_eq!(r.oracle_opt, Some(int(1)));
    }

    #[test]
    fn gos1_overflow_is_invalid() {
        let r = validate_instance(&inst(&[((3, 2), 1)]), false);
        assert_eq!(
            r.failures,
            vec![ValidationFailure::Gos1ExceedsOpt {
                total: "3/2".into()
            }]
        );
    }

    #[test]
    fn empty_instance_flags_oracle_only_when_requested() {
        let empty = inst(&[]);
        assert!(validate_instance(&empty, false).is_valid());
        let r = validate_instance(&empty, true);
        assert_eq!(r.oracle_opt, Some(int(0)));
        assert_eq!(
            r.failures,
            vec![ValidationFailure::OracleMismatch {
                oracle: "0/1".into()
            }]
        );
    }

    #[test]
    fn total_over_two() {
        let r = validate_instance(&inst(&[((1, 1), 2), ((1, 1), 2), ((1, 10), 2)]), false);
        assert!(matches!(
            r.failures[..],
            [ValidationFailure::TotalExceedsTwiceOpt { .. }]
        ));
    }

    #[test]
    fn json_round_trip_and_canonical_form() {
        let text = r#"{"declared_opt": "2/2", "jobs": [{"p": "2/4", "g": 2}, {"p": "1", "g": 1}]}"#;
        let i = Instance::from_json(text).unwrap();
        assert_eq!(i.declared_opt, int(1));
        assert_eq!(i.jobs[0].size, q(1, 2));
        assert_eq!(i.jobs[1].index, 2);
        let out = i.to_json();
        assert!(out.contains("\"1/2\"") && out.contains("\"1/1\""), "{out}");
        assert_eq!(Instance::from_json(&out).unwrap(), i);
    }

    #[test]
    fn json_rejects_bad_input() {
        for text in [
            r#"{"declared_opt": "1", "jobs": [{"p": "0", "g": 2}]}"#,
            r#"{"declared_opt": "1", "jobs": [{"p": "1/2", "g": 3}]}"#,
            r#"{"declared_opt": "0", "jobs": []}"#,
            r#"{"declared_opt": "1", "jobs": [{"p": 0.5, "g": 2}]}"#,
        ] {
            assert!(Instance::from_json(text).is_err(), "{text}");
        }
    }

    #[test]
    fn normalization_rescales() {
        let i = Instance::new([(q(3, 2), Gos::Two), (int(1), Gos::One)], q(3, 2)).unwrap();
        let n = i.normalized();
        assert_eq!(n.declared_opt, int(1));
        assert_eq!(n.jobs[0].size, int(1));
        assert_eq!(n.jobs[1].size, q(2, 3));
    }
}
