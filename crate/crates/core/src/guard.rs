use crate::error::{Error, Result};

/// Caps on the exponential-time enumerations. Exceeding one is a recoverable
/// [`Error::GuardExceeded`]; nothing is ever silently truncated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    /// Largest admissible vertex count `|V(Y)|^|V(X)|` of an exponential.
    pub max_exp_vertices: u64,
    /// Largest number of partial assignments visited by one backtracking search.
    pub max_visits: u64,
    /// Largest poset whose full order matrix is materialized.
    pub max_poset_elements: u64,
    /// Largest number of simplices materialized by one complex construction.
    pub max_cells: u64,
    /// Largest number of simplices visited by one streamed (unmaterialized) pass.
    pub max_streamed: u64,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_exp_vertices: 1_000_000,
            max_visits: 10_000_000,
            max_poset_elements: 20_000,
            max_cells: 2_000_000,
            max_streamed: 100_000_000,
        }
    }
}

/// Counts search steps against a cap.
#[derive(Debug)]
pub(crate) struct Budget {
    guard: &'static str,
    limit: u64,
    used: u64,
}

impl Budget {
    pub(crate) fn new(guard: &'static str, limit: u64) -> Self {
        Budget { guard, limit, used: 0 }
    }

    pub(crate) fn visits(guards: &Guards) -> Self {
        Budget::new("max_visits", guards.max_visits)
    }

    pub(crate) fn cells(guards: &Guards) -> Self {
        Budget::new("max_cells", guards.max_cells)
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::GuardExceeded {
                guard: self.guard,
                limit: self.limit,
            });
        }
        Ok(())
    }
}

pub(crate) fn check(guard: &'static str, needed: u64, limit: u64) -> Result<()> {
    if needed > limit {
        Err(Error::GuardExceeded { guard, limit })
    } else {
        Ok(())
    }
}

/// `base^exp`, saturating at `u64::MAX`.
pub(crate) fn saturating_pow(base: usize, exp: usize) -> u64 {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u64);
    }
    acc
}
