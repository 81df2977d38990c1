//! Candidate-count ceilings for enumerative searches.
//!
//! Every operation that enumerates a combinatorial search space (function
//! complex levels, map enumeration, horn filling, functor enumeration, ...)
//! charges the candidates it inspects against a [`Budget`]. When the budget
//! runs out the operation aborts with [`Error::GuardExceeded`] instead of
//! running unbounded.

use crate::error::{Error, Result};

pub const DEFAULT_GUARD: u64 = 10_000_000;

#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    spent: u64,
    context: String,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            spent: 0,
            context: String::new(),
        }
    }

    pub fn with_context(limit: u64, context: impl Into<String>) -> Self {
        Budget {
            limit,
            spent: 0,
            context: context.into(),
        }
    }

    /// Charge `n` candidates; errors once the total exceeds the ceiling.
    pub fn spend(&mut self, n: u64) -> Result<()> {
        self.spent = self.spent.saturating_add(n);
        if self.spent > self.limit {
            Err(Error::GuardExceeded {
                context: if self.context.is_empty() {
                    "enumeration".to_string()
                } else {
                    self.context.clone()
                },
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }

    pub fn set_context(&mut self, context: impl Into<String>) {
        self.context = context.into();
    }

    pub fn spent(&self) -> u64 {
        self.spent
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_GUARD)
    }
}
