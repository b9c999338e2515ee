use serde::Serialize;

use super::Variety;
use crate::error::Result;
use crate::exactfield::StreamTag;
use crate::secdim::trial;
use crate::secdim::{run_trials, ComputeCfg};

/// Standing hypotheses: the parametrization is generically immersive (so
/// `X` has dimension `n`) and `X` spans `P^r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub immersive_rank: usize,
    pub expected_immersive_rank: usize,
    pub span_dim: usize,
    pub expected_span_dim: usize,
    pub is_cone: bool,
}

impl ValidationReport {
    pub fn immersive(&self) -> bool {
        self.immersive_rank == self.expected_immersive_rank
    }

    pub fn nondegenerate(&self) -> bool {
        self.span_dim == self.expected_span_dim
    }

    pub fn is_valid(&self) -> bool {
        self.immersive() && self.nondegenerate()
    }
}

/// Failures are reported as entries of the result, not as errors; `Err`
/// means the computation itself could not run (bad prime, zero trials).
pub fn validate(x: &Variety, cfg: &ComputeCfg) -> Result<ValidationReport> {
    let imm = run_trials(cfg, StreamTag::Validation, "immersion", |s| {
        trial::immersion_rank(x, s)
    })?;
    let span = run_trials(cfg, StreamTag::Validation, "span", |s| {
        trial::span_rank(x, s)
    })?;
    Ok(ValidationReport {
        immersive_rank: imm.dim,
        expected_immersive_rank: x.n() + 1,
        span_dim: span.dim.saturating_sub(1),
        expected_span_dim: x.r(),
        is_cone: x.is_cone(),
    })
}
