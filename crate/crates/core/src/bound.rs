//! Tight competitive ratio as a function of the migration factor.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, q, Rational};

/// Migration-factor interval with its own tight bound and algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    /// `m >= 5/2`
    High,
    /// `3/4 <= m < 5/2`
    Mid,
    /// `2/3 <= m < 3/4`
    LowD,
    /// `1/2 <= m < 2/3`
    LowC,
    /// `0 <= m < 1/2`
    NoMig,
}

impl Regime {
    pub fn of(m: &Rational) -> Result<Regime> {
        if m.is_negative() {
            return Err(Error::NegativeM(format_rational(m)));
        }
        Ok(if *m >= q(5, 2) {
            Regime::High
        } else if *m >= q(3, 4) {
            Regime::Mid
        } else if *m >= q(2, 3) {
            Regime::LowD
        } else if *m >= q(1, 2) {
            Regime::LowC
        } else {
            Regime::NoMig
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Regime::High => "high",
            Regime::Mid => "mid",
            Regime::LowD => "low-d",
            Regime::LowC => "low-c",
            Regime::NoMig => "no-mig",
        }
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegimeBound {
    #[serde(with = "crate::rational::serde_str")]
    pub m: Rational,
    pub regime: Regime,
    #[serde(with = "crate::rational::serde_str")]
    pub bound: Rational,
    /// `2 / (2m + 3)`, only in the high regime.
    #[serde(with = "crate::rational::serde_opt_str")]
    pub mu: Option<Rational>,
}

/// `2 / (2m + 3)`.
pub fn mu(m: &Rational) -> Rational {
    int(2) / (int(2) * m + int(3))
}

pub fn ratio_bound(m: &Rational) -> Result<RegimeBound> {
    let regime = Regime::of(m)?;
    let (bound, mu) = match regime {
        Regime::High => {
            let mu = mu(m);
            (int(1) + &mu, Some(mu))
        }
        Regime::Mid => (q(5, 4), None),
        Regime::LowC | Regime::LowD => (int(2) - m, None),
        Regime::NoMig => (q(3, 2), None),
    };
    Ok(RegimeBound {
        m: m.clone(),
        regime,
        bound,
        mu,
    })
}
