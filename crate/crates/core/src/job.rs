use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};
use num_traits::Signed;

/// Grade of service. GoS-1 jobs may only run on machine 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Gos {
    One,
    Two,
}

impl TryFrom<u8> for Gos {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            1 => Ok(Gos::One),
            2 => Ok(Gos::Two),
            _ => Err(Error::Parse(format!(
                "grade of service must be 1 or 2, got {v}"
            ))),
        }
    }
}

impl From<Gos> for u8 {
    fn from(g: Gos) -> u8 {
        match g {
            Gos::One => 1,
            Gos::Two => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MachineId {
    M1,
    M2,
}

impl MachineId {
    pub fn other(self) -> Self {
        match self {
            MachineId::M1 => MachineId::M2,
            MachineId::M2 => MachineId::M1,
        }
    }

    /// Whether a job of grade `gos` may run here.
    pub fn admits(self, gos: Gos) -> bool {
        !(self == MachineId::M2 && gos == Gos::One)
    }
}

impl std::fmt::Display for MachineId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MachineId::M1 => "M1",
            MachineId::M2 => "M2",
        })
    }
}

/// An arriving job: 1-based arrival ordinal, positive size and grade of service.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Job {
    pub index: usize,
    #[serde(with = "crate::rational::serde_str")]
    pub size: Rational,
    pub gos: Gos,
}

impl Job {
    pub fn new(index: usize, size: Rational, gos: Gos) -> Result<Self> {
        if !size.is_positive() {
            return Err(Error::NonPositiveSize {
                job: index,
                size: format_rational(&size),
            });
        }
        Ok(Job { index, size, gos })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, q};

    #[test]
    fn zero_and_negative_sizes_rejected() {
        assert!(matches!(
            Job::new(1, int(0), Gos::Two),
            Err(Error::NonPositiveSize { job: 1, .. })
        ));
        assert!(Job::new(1, q(-1, 2), Gos::One).is_err());
        assert!(Job::new(1, q(1, 2), Gos::One).is_ok());
    }

    #[test]
    fn machine_admission() {
        assert!(MachineId::M1.admits(Gos::One));
        assert!(MachineId::M1.admits(Gos::Two));
        assert!(!MachineId::M2.admits(Gos::One));
        assert!(MachineId::M2.admits(Gos::Two));
    }

    #[test]
    fn gos_from_wire() {
        assert_eq!(Gos::try_from(2).unwrap(), Gos::Two);
        assert!(Gos::try_from(3).is_err());
    }
}
