use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Optional wall-clock limit threaded through the exponential searches.
#[derive(Clone, Copy, Debug, Default)]
pub struct Deadline(Option<Instant>);

impl Deadline {
    pub const NONE: Deadline = Deadline(None);

    pub fn after(budget: Duration) -> Self {
        Deadline(Some(Instant::now() + budget))
    }

    pub fn is_none(&self) -> bool {
        self.0.is_none()
    }

    pub fn expired(&self) -> bool {
        self.0.is_some_and(|t| Instant::now() >= t)
    }

    pub fn check(&self) -> Result<()> {
        if self.expired() {
            Err(Error::Timeout)
        } else {
            Ok(())
        }
    }

    /// Checks the clock only every 256th call, keyed on a loop counter.
    #[inline]
    pub(crate) fn tick(&self, counter: &mut u32) -> Result<()> {
        *counter = counter.wrapping_add(1);
        if self.0.is_some() && *counter & 0xff == 0 {
            self.check()
        } else {
            Ok(())
        }
    }
}
