//! Seeded random stream shared by both engines.
//!
//! Draws come from ChaCha8 keyed by `seed_from_u64`. A unit draw takes the top
//! 53 bits of one `next_u64` and scales by 2^-53, so the sequence is identical
//! on every platform and easy to reproduce in other languages.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

const UNIT_SCALE: f64 = 1.0 / (1u64 << 53) as f64;

#[derive(Clone, Debug)]
pub struct RngStream {
    seed: u64,
    inner: ChaCha8Rng,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform draw in `[0, 1)`.
    #[inline]
    pub fn unit(&mut self) -> f64 {
        (self.inner.next_u64() >> 11) as f64 * UNIT_SCALE
    }

    /// Uniform draw in `[a, b)`.
    pub fn uniform(&mut self, a: f64, b: f64) -> Result<f64> {
        if !(a < b) || !a.is_finite() || !b.is_finite() {
            return Err(Error::argument(format!(
                "uniform requires finite a < b, got a={a}, b={b}"
            )));
        }
        Ok(self.uniform_unchecked(a, b))
    }

    #[inline]
    pub(crate) fn uniform_unchecked(&mut self, a: f64, b: f64) -> f64 {
        let x = a + (b - a) * self.unit();
        // a + (b - a) * u can round up to b for u close to 1
        if x >= b {
            b.next_down()
        } else {
            x
        }
    }
}
