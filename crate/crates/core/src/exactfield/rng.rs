use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::FieldCtx;

/// Independent sample streams derived from one seed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(u8)]
pub enum StreamTag {
    Trial = 0,
    CrossCheck = 1,
    Projection = 2,
    Validation = 3,
}

/// Seed for counter-based sampling.
///
/// A stream is addressed by `(seed, tag, trial, attempt)` and each draw by its
/// position inside the stream, so samples do not depend on execution order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rng {
    seed: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Self { seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream(&self, tag: StreamTag, trial: u64, attempt: u32) -> SampleStream {
        assert!(trial < 1 << 40, "trial index too large");
        let mut inner = ChaCha8Rng::seed_from_u64(self.seed);
        inner.set_stream(((tag as u64) << 56) | (trial << 16) | (attempt as u64 & 0xffff));
        SampleStream { inner }
    }
}

pub struct SampleStream {
    inner: ChaCha8Rng,
}

impl SampleStream {
    /// Uniform residue in [0, p).
    pub fn residue(&mut self, ctx: &FieldCtx) -> u64 {
        self.inner.gen_range(0..ctx.modulus())
    }

    /// Uniform integer in [-bound, bound].
    pub fn small_int(&mut self, bound: i64) -> i64 {
        self.inner.gen_range(-bound..=bound)
    }
}

pub fn sample_vector(ctx: &FieldCtx, stream: &mut SampleStream, len: usize) -> Vec<u64> {
    (0..len).map(|_| stream.residue(ctx)).collect()
}
