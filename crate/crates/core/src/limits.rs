//! Resource guards shared by every construction whose output can grow
//! exponentially in its input.

use crate::error::{ChainmailError, Result};

/// No configuration may raise the element cap past this.
pub const HARD_MAX_ELEMENTS: usize = 4096;

/// Environment variable that overrides [`Limits::max_elements`].
pub const MAX_N_ENV: &str = "CHM_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest poset accepted from input or produced by a construction.
    pub max_elements: usize,
    /// Largest vertex set for powerset-based connectivity pairs.
    pub max_vertices: usize,
    /// Largest family of totally mail-disconnected sets (and similar
    /// exponential families such as down-sets or sinks).
    pub max_family: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: 64,
            max_vertices: 5,
            max_family: 1 << 20,
        }
    }
}

impl Limits {
    /// Limits large enough for every built-in fixture (the largest is a
    /// powerset of seven points).
    pub fn generous() -> Self {
        Limits {
            max_elements: 256,
            max_vertices: 8,
            max_family: 1 << 20,
        }
    }

    /// Default limits with `CHM_MAX_N` applied when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var(MAX_N_ENV) {
            let n: usize = raw
                .trim()
                .parse()
                .map_err(|_| ChainmailError::Input(format!("{MAX_N_ENV}={raw:?} is not an integer")))?;
            limits = limits.with_max_elements(n)?;
        }
        Ok(limits)
    }

    pub fn with_max_elements(mut self, n: usize) -> Result<Self> {
        check(n, HARD_MAX_ELEMENTS, "element cap")?;
        self.max_elements = n;
        Ok(self)
    }

    pub fn with_max_vertices(mut self, v: usize) -> Result<Self> {
        // the powerset on v vertices must itself fit under the hard cap
        check(v, 12, "vertex cap")?;
        self.max_vertices = v;
        Ok(self)
    }

    pub fn check_elements(&self, n: usize) -> Result<()> {
        check(n, self.max_elements, "poset size")
    }

    pub fn check_vertices(&self, v: usize) -> Result<()> {
        check(v, self.max_vertices, "vertex count")
    }

    pub fn check_family(&self, size: usize) -> Result<()> {
        check(size, self.max_family, "set family size")
    }
}

pub(crate) fn check(actual: usize, limit: usize, what: &'static str) -> Result<()> {
    if actual > limit {
        Err(ChainmailError::LimitExceeded { what, limit, actual })
    } else {
        Ok(())
    }
}
