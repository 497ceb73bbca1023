//! Resource caps shared by every top-level computation.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Configurable maxima; exceeding any of them is a hard error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of elements a Gröbner basis may hold while being built.
    pub max_basis: usize,
    /// Maximum standard (unweighted) total degree of any basis element.
    pub max_degree: u64,
    pub time_budget: Duration,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_basis: 20_000, max_degree: 64, time_budget: Duration::from_secs(60) }
    }
}

/// Limits plus the wall-clock deadline of the running top-level operation.
#[derive(Clone, Debug)]
pub struct Budget {
    limits: Limits,
    deadline: Option<Instant>,
}

impl Budget {
    pub fn new(limits: Limits) -> Self {
        Budget { limits, deadline: Instant::now().checked_add(limits.time_budget) }
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn check_time(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::ResourceCap(format!(
                "time budget of {} s exhausted",
                self.limits.time_budget.as_secs_f64()
            ))),
            _ => Ok(()),
        }
    }

    pub fn check_basis_size(&self, n: usize) -> Result<()> {
        if n > self.limits.max_basis {
            return Err(Error::ResourceCap(format!("basis size exceeds {}", self.limits.max_basis)));
        }
        Ok(())
    }

    pub fn check_degree(&self, d: u64) -> Result<()> {
        if d > self.limits.max_degree {
            return Err(Error::ResourceCap(format!("element degree {d} exceeds {}", self.limits.max_degree)));
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Limits::default())
    }
}
