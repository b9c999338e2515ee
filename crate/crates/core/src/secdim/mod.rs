//! Dimension engine for secant varieties and their Grassmannians.
//!
//! * `dim S_k` from the rank of stacked tangent spaces at `k + 1` general
//!   points (Terracini).
//! * `dim G_k` as the generic Jacobian rank of the span map
//!   `X^{k+1} -> G(k, r)` read in an affine chart.
//! * `dim G_{h,k}` as the generic Jacobian rank of
//!   `(t, L) -> rowspace(L * M(t))` read in an affine chart of `G(h, r)`.
//!
//! All ranks are exact over F_p at random points. A reported dimension is
//! the maximum over independent trials; ranks can only drop at special
//! points.

mod checks;
pub(crate) mod trial;

pub use checks::{check_inequalities, check_table, CheckResult, Rule};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfield::{FieldCtx, Rng, StreamTag, DEFAULT_PRIME};
use crate::exec::{self, ExecMode};
use crate::varieties::Variety;
use trial::{IntSampler, ModSampler};

/// Settings shared by every randomized computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComputeCfg {
    pub prime: u64,
    pub seed: u64,
    pub trials: usize,
    pub retry_cap: usize,
    /// Re-verify every dimension once with exact rational arithmetic.
    pub cross_check: bool,
    pub max_directions: usize,
    pub exec: ExecMode,
}

impl Default for ComputeCfg {
    fn default() -> Self {
        Self {
            prime: DEFAULT_PRIME,
            seed: 1,
            trials: 3,
            retry_cap: 8,
            cross_check: false,
            max_directions: 64,
            exec: ExecMode::default(),
        }
    }
}

impl ComputeCfg {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn field(&self) -> Result<FieldCtx> {
        if self.trials == 0 {
            return Err(Error::InvalidArgument("trials must be at least 1".into()));
        }
        FieldCtx::new(self.prime)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Kind {
    #[serde(rename = "span")]
    Span,
    #[serde(rename = "S")]
    Secant,
    #[serde(rename = "G")]
    Grass,
    #[serde(rename = "GHK")]
    GrassSecant,
}

impl Kind {
    pub fn label(&self, h: Option<usize>, k: Option<usize>) -> String {
        match (self, h, k) {
            (Kind::Span, _, _) => "span".into(),
            (Kind::Secant, _, Some(k)) => format!("S_{k}"),
            (Kind::Grass, _, Some(k)) => format!("G_{k}"),
            (Kind::GrassSecant, Some(h), Some(k)) => format!("G_{{{h},{k}}}"),
            _ => format!("{self:?}"),
        }
    }
}

/// A computed dimension with its expected value and sampling provenance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionEstimate {
    pub kind: Kind,
    pub h: Option<usize>,
    pub k: Option<usize>,
    pub dim: usize,
    pub expdim: usize,
    pub defect: i64,
    pub trials_used: usize,
    /// Rank observed in each trial, in trial order.
    pub trial_dims: Vec<usize>,
    pub prime: u64,
    pub seed: u64,
    /// Dimension recomputed over Q, when cross-checking is on.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_dim: Option<usize>,
}

impl DimensionEstimate {
    pub fn label(&self) -> String {
        self.kind.label(self.h, self.k)
    }
}

/// `min{n(k+1), (r-k)(k+1)}`, the dimension of a non-degenerate `G_k(X)`.
pub fn expdim_gk(n: usize, k: usize, r: usize) -> usize {
    assert!(k <= r, "k = {k} exceeds r = {r}");
    (n * (k + 1)).min((r - k) * (k + 1))
}

/// `min{(k-h)(h+1) + n(k+1), (r-h)(h+1)}`.
pub fn expdim_ghk(n: usize, h: usize, k: usize, r: usize) -> usize {
    assert!(h < k && k <= r, "need h < k <= r, got h={h}, k={k}, r={r}");
    ((k - h) * (h + 1) + n * (k + 1)).min((r - h) * (h + 1))
}

/// `min{n(k+1) + k, r}`.
pub fn expdim_sk(n: usize, k: usize, r: usize) -> usize {
    assert!(k <= r, "k = {k} exceeds r = {r}");
    (n * (k + 1) + k).min(r)
}

fn check_index(k: usize, r: usize) -> Result<()> {
    if k > r {
        return Err(Error::IndexOutOfRange {
            what: "k",
            index: k,
            limit: r + 1,
        });
    }
    Ok(())
}

fn check_directions(needed: usize, cfg: &ComputeCfg) -> Result<()> {
    if needed > cfg.max_directions {
        return Err(Error::TooManyDirections {
            needed,
            limit: cfg.max_directions,
        });
    }
    Ok(())
}

fn is_resample(e: &Error) -> bool {
    matches!(
        e,
        Error::SingularPivotBlock | Error::DegenerateSample(_) | Error::RankDeficient { .. }
    )
}

pub(crate) struct Trials {
    pub dim: usize,
    pub per_trial: Vec<usize>,
}

/// Runs `cfg.trials` independent samples and aggregates by maximum. Each
/// trial retries on measure-zero failures with derived sub-streams. When
/// fewer than two trials reach the maximum, extra trials are drawn (up to
/// three times the requested count).
pub(crate) fn run_trials<T>(
    cfg: &ComputeCfg,
    tag: StreamTag,
    what: &str,
    sample: T,
) -> Result<Trials>
where
    T: Fn(&mut ModSampler<'_>) -> Result<usize> + Sync + Send,
{
    let field = cfg.field()?;
    let rng = Rng::new(cfg.seed);
    let attempts = cfg.retry_cap.max(1);
    let one = |t: &usize| -> Result<usize> {
        for attempt in 0..attempts {
            let mut stream = rng.stream(tag, *t as u64, attempt as u32);
            let mut s = ModSampler {
                field,
                stream: &mut stream,
            };
            match sample(&mut s) {
                Err(e) if is_resample(&e) => continue,
                other => return other,
            }
        }
        Err(Error::SampleFailure {
            what: what.to_string(),
            attempts,
        })
    };
    let idx: Vec<usize> = (0..cfg.trials).collect();
    let mut per_trial = exec::map(cfg.exec, &idx, one)
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let at_max = |v: &[usize]| {
        let m = v.iter().max().copied().unwrap_or(0);
        v.iter().filter(|&&d| d == m).count()
    };
    let mut next = cfg.trials;
    while cfg.trials >= 2 && at_max(&per_trial) < 2 && next < 3 * cfg.trials {
        per_trial.push(one(&next)?);
        next += 1;
    }
    Ok(Trials {
        dim: per_trial.iter().max().copied().unwrap_or(0),
        per_trial,
    })
}

const CROSS_CHECK_BOUND: i64 = 50;

/// Recomputes one trial over Q at small integer points. Retries until the
/// rational rank reaches the modular one; a larger rational rank, or never
/// reaching it, is a mismatch.
fn cross_check<T>(cfg: &ComputeCfg, what: &str, modular: usize, sample: T) -> Result<usize>
where
    T: Fn(&mut IntSampler<'_>) -> Result<usize>,
{
    let rng = Rng::new(cfg.seed);
    let mut best = None;
    for attempt in 0..cfg.retry_cap.max(1) {
        let mut stream = rng.stream(StreamTag::CrossCheck, 0, attempt as u32);
        let mut s = IntSampler {
            stream: &mut stream,
            bound: CROSS_CHECK_BOUND,
        };
        match sample(&mut s) {
            Ok(d) => {
                best = best.max(Some(d));
                if d >= modular {
                    break;
                }
            }
            Err(e) if is_resample(&e) => continue,
            Err(e) => return Err(e),
        }
    }
    match best {
        Some(d) if d == modular => Ok(d),
        Some(exact) => Err(Error::CrossCheckMismatch {
            what: what.to_string(),
            modular,
            exact,
        }),
        None => Err(Error::SampleFailure {
            what: format!("{what} (exact cross-check)"),
            attempts: cfg.retry_cap.max(1),
        }),
    }
}

#[allow(clippy::too_many_arguments)]
fn finish(
    x: &Variety,
    cfg: &ComputeCfg,
    kind: Kind,
    h: Option<usize>,
    k: Option<usize>,
    trials: Trials,
    expdim: usize,
    exact_dim: Option<usize>,
) -> Result<DimensionEstimate> {
    let est = DimensionEstimate {
        kind,
        h,
        k,
        dim: trials.dim,
        expdim,
        defect: expdim as i64 - trials.dim as i64,
        trials_used: trials.per_trial.len(),
        trial_dims: trials.per_trial,
        prime: cfg.prime,
        seed: cfg.seed,
        exact_dim,
    };
    if kind != Kind::Span && est.dim > est.expdim {
        return Err(Error::BoundExceeded {
            what: format!("{} of {}", est.label(), x.name()),
            dim: est.dim,
            expdim: est.expdim,
        });
    }
    Ok(est)
}

/// Projective dimension of the linear span of `X`.
pub fn span_dim(x: &Variety, cfg: &ComputeCfg) -> Result<DimensionEstimate> {
    let what = format!("span of {}", x.name());
    let to_dim = |rank: usize| rank.saturating_sub(1);
    let t = run_trials(cfg, StreamTag::Trial, &what, |s| {
        trial::span_rank(x, s).map(to_dim)
    })?;
    let exact = if cfg.cross_check {
        Some(cross_check(cfg, &what, t.dim, |s| {
            trial::span_rank(x, s).map(to_dim)
        })?)
    } else {
        None
    };
    finish(x, cfg, Kind::Span, None, None, t, x.r(), exact)
}

/// `dim S_k(X)` by Terracini's lemma.
pub fn secant_dim(x: &Variety, k: usize, cfg: &ComputeCfg) -> Result<DimensionEstimate> {
    check_index(k, x.r())?;
    let what = format!("S_{k} of {}", x.name());
    let to_dim = |rank: usize| rank.saturating_sub(1);
    let t = run_trials(cfg, StreamTag::Trial, &what, |s| {
        trial::terracini_rank(x, k, s).map(to_dim)
    })?;
    let exact = if cfg.cross_check {
        Some(cross_check(cfg, &what, t.dim, |s| {
            trial::terracini_rank(x, k, s).map(to_dim)
        })?)
    } else {
        None
    };
    let expdim = expdim_sk(x.n(), k, x.r());
    finish(x, cfg, Kind::Secant, None, Some(k), t, expdim, exact)
}

/// `dim G_k(X)`, the closure of the image of the span map.
pub fn grass_dim(x: &Variety, k: usize, cfg: &ComputeCfg) -> Result<DimensionEstimate> {
    check_index(k, x.r())?;
    check_directions(trial::direction_count(x, None, k), cfg)?;
    let what = format!("G_{k} of {}", x.name());
    let t = run_trials(cfg, StreamTag::Trial, &what, |s| {
        trial::span_map_rank(x, k, s)
    })?;
    let exact = if cfg.cross_check {
        Some(cross_check(cfg, &what, t.dim, |s| {
            trial::span_map_rank(x, k, s)
        })?)
    } else {
        None
    };
    let expdim = expdim_gk(x.n(), k, x.r());
    finish(x, cfg, Kind::Grass, None, Some(k), t, expdim, exact)
}

/// `dim G_{h,k}(X)`: h-planes contained in (k+1)-secant k-planes.
pub fn grass_secant_dim(
    x: &Variety,
    h: usize,
    k: usize,
    cfg: &ComputeCfg,
) -> Result<DimensionEstimate> {
    check_index(k, x.r())?;
    if h >= k {
        return Err(Error::IndexOutOfRange {
            what: "h",
            index: h,
            limit: k,
        });
    }
    check_directions(trial::direction_count(x, Some(h), k), cfg)?;
    let what = format!("G_{{{h},{k}}} of {}", x.name());
    let t = run_trials(cfg, StreamTag::Trial, &what, |s| {
        trial::incidence_rank(x, h, k, s)
    })?;
    let exact = if cfg.cross_check {
        Some(cross_check(cfg, &what, t.dim, |s| {
            trial::incidence_rank(x, h, k, s)
        })?)
    } else {
        None
    };
    let expdim = expdim_ghk(x.n(), h, k, x.r());
    finish(
        x,
        cfg,
        Kind::GrassSecant,
        Some(h),
        Some(k),
        t,
        expdim,
        exact,
    )
}

/// `dim G_k + (h+1)(k-h) - dim G_{h,k}` from already computed dimensions.
pub fn fiber_dim_from(gk: usize, ghk: usize, h: usize, k: usize) -> Result<usize> {
    let x = gk as i64 + ((h + 1) * (k - h)) as i64 - ghk as i64;
    usize::try_from(x).map_err(|_| Error::BoundExceeded {
        what: format!("G_{{{h},{k}}} against G_{k} plus fiber"),
        dim: ghk,
        expdim: gk + (h + 1) * (k - h),
    })
}

/// Dimension of the family of (k+1)-secant k-planes through a general
/// h-plane of `G_{h,k}(X)`.
pub fn fiber_dim(x: &Variety, h: usize, k: usize, cfg: &ComputeCfg) -> Result<usize> {
    let gk = grass_dim(x, k, cfg)?;
    let ghk = grass_secant_dim(x, h, k, cfg)?;
    fiber_dim_from(gk.dim, ghk.dim, h, k)
}

/// Every dimension of one variety up to `max_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimTable {
    pub max_k: usize,
    pub span: DimensionEstimate,
    pub secant: Vec<DimensionEstimate>,
    pub grass: Vec<DimensionEstimate>,
    pub grass_secant: BTreeMap<(usize, usize), DimensionEstimate>,
}

impl DimTable {
    pub fn s(&self, k: usize) -> usize {
        self.secant[k].dim
    }
    pub fn g(&self, k: usize) -> usize {
        self.grass[k].dim
    }
    pub fn ghk(&self, h: usize, k: usize) -> usize {
        self.grass_secant[&(h, k)].dim
    }

    /// Rows in report order: span, all S_k, all G_k, then G_{h,k} by (k, h).
    pub fn rows(&self) -> Vec<DimensionEstimate> {
        let mut out = vec![self.span.clone()];
        out.extend(self.secant.iter().cloned());
        out.extend(self.grass.iter().cloned());
        let mut ghk: Vec<_> = self.grass_secant.iter().collect();
        ghk.sort_by_key(|((h, k), _)| (*k, *h));
        out.extend(ghk.into_iter().map(|(_, e)| e.clone()));
        out
    }
}

#[derive(Clone, Copy)]
enum Job {
    Span,
    Secant(usize),
    Grass(usize),
    GrassSecant(usize, usize),
}

/// Computes span, `S_k`, `G_k` for `k <= max_k` and `G_{h,k}` for all
/// `h < k <= max_k`, where `max_k` is clamped to `r`.
pub fn dimension_table(x: &Variety, max_k: usize, cfg: &ComputeCfg) -> Result<DimTable> {
    let max_k = max_k.min(x.r());
    if max_k > 0 {
        check_directions(trial::direction_count(x, Some(max_k - 1), max_k), cfg)?;
    }
    check_directions(trial::direction_count(x, None, max_k), cfg)?;
    let mut jobs = vec![Job::Span];
    jobs.extend((0..=max_k).map(Job::Secant));
    jobs.extend((0..=max_k).map(Job::Grass));
    for k in 1..=max_k {
        jobs.extend((0..k).map(|h| Job::GrassSecant(h, k)));
    }
    let results = exec::map(cfg.exec, &jobs, |job| match *job {
        Job::Span => span_dim(x, cfg),
        Job::Secant(k) => secant_dim(x, k, cfg),
        Job::Grass(k) => grass_dim(x, k, cfg),
        Job::GrassSecant(h, k) => grass_secant_dim(x, h, k, cfg),
    });
    let mut results = results.into_iter().collect::<Result<Vec<_>>>()?.into_iter();
    let span = results.next().expect("span job");
    let secant: Vec<_> = results.by_ref().take(max_k + 1).collect();
    let grass: Vec<_> = results.by_ref().take(max_k + 1).collect();
    let grass_secant = results
        .map(|e| ((e.h.expect("h"), e.k.expect("k")), e))
        .collect();
    Ok(DimTable {
        max_k,
        span,
        secant,
        grass,
        grass_secant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::varieties::{cone_rnc4, scroll, veronese};

    #[test]
    fn expdim_examples() {
        assert_eq!(expdim_gk(2, 2, 5), 6);
        assert_eq!(expdim_gk(2, 4, 5), 5);
        assert_eq!(expdim_gk(1, 0, 3), 1);
        assert_eq!(expdim_ghk(2, 1, 2, 5), 8);
        assert_eq!(expdim_ghk(1, 1, 2, 3), 4);
        assert_eq!(expdim_sk(2, 1, 5), 5);
        assert_eq!(expdim_sk(2, 1, 4), 4);
        for n in 1..4 {
            for r in 1..10 {
                assert_eq!(expdim_sk(n, 0, r), n.min(r));
                for k in 1..=r {
                    assert_eq!(expdim_ghk(n, 0, k, r), expdim_sk(n, k, r));
                }
            }
        }
    }

    #[test]
    fn span_examples() {
        let cfg = ComputeCfg::default();
        assert_eq!(span_dim(&veronese(2, 2).unwrap(), &cfg).unwrap().dim, 5);
        assert_eq!(span_dim(&scroll(3, 1).unwrap(), &cfg).unwrap().dim, 5);
    }

    #[test]
    fn secant_examples() {
        let cfg = ComputeCfg::default();
        let s1 = secant_dim(&veronese(2, 2).unwrap(), 1, &cfg).unwrap();
        assert_eq!((s1.dim, s1.expdim, s1.defect), (4, 5, 1));
        assert_eq!(
            secant_dim(&veronese(1, 2).unwrap(), 1, &cfg).unwrap().dim,
            2
        );
        assert!(matches!(
            secant_dim(&veronese(1, 2).unwrap(), 3, &cfg),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn grass_examples() {
        let cfg = ComputeCfg::default();
        assert_eq!(grass_dim(&veronese(2, 2).unwrap(), 2, &cfg).unwrap().dim, 6);
        assert_eq!(grass_dim(&scroll(2, 2).unwrap(), 2, &cfg).unwrap().dim, 6);
        assert_eq!(grass_dim(&veronese(1, 3).unwrap(), 2, &cfg).unwrap().dim, 3);
    }

    #[test]
    fn incidence_examples() {
        let cfg = ComputeCfg::default();
        let v = grass_secant_dim(&veronese(2, 2).unwrap(), 1, 2, &cfg).unwrap();
        assert_eq!((v.dim, v.expdim), (8, 8));
        assert_eq!(
            grass_secant_dim(&scroll(2, 2).unwrap(), 1, 2, &cfg)
                .unwrap()
                .dim,
            7
        );
        assert_eq!(
            grass_secant_dim(&veronese(1, 3).unwrap(), 1, 2, &cfg)
                .unwrap()
                .dim,
            4
        );
        assert_eq!(grass_secant_dim(&cone_rnc4(), 1, 2, &cfg).unwrap().dim, 7);
        assert!(grass_secant_dim(&veronese(2, 2).unwrap(), 2, 2, &cfg).is_err());
    }

    #[test]
    fn fiber_examples() {
        let cfg = ComputeCfg::default();
        assert_eq!(fiber_dim(&veronese(2, 2).unwrap(), 1, 2, &cfg).unwrap(), 0);
        assert_eq!(fiber_dim(&scroll(2, 2).unwrap(), 1, 2, &cfg).unwrap(), 1);
        assert_eq!(fiber_dim(&veronese(1, 3).unwrap(), 1, 2, &cfg).unwrap(), 1);
    }

    #[test]
    fn direction_guard() {
        let cfg = ComputeCfg {
            max_directions: 10,
            ..ComputeCfg::default()
        };
        assert_eq!(
            grass_secant_dim(&veronese(2, 2).unwrap(), 1, 2, &cfg),
            Err(Error::TooManyDirections {
                needed: 12,
                limit: 10
            })
        );
    }

    #[test]
    fn zero_trials_rejected() {
        let cfg = ComputeCfg {
            trials: 0,
            ..ComputeCfg::default()
        };
        assert!(matches!(
            span_dim(&veronese(2, 2).unwrap(), &cfg),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn report_is_max_over_trials() {
        let cfg = ComputeCfg {
            trials: 5,
            ..ComputeCfg::default()
        };
        let e = grass_secant_dim(&scroll(2, 2).unwrap(), 1, 2, &cfg).unwrap();
        assert_eq!(e.trials_used, e.trial_dims.len());
        assert_eq!(e.dim, *e.trial_dims.iter().max().unwrap());
    }

    #[test]
    fn cross_check_over_rationals() {
        let cfg = ComputeCfg {
            cross_check: true,
            ..ComputeCfg::default()
        };
        let e = grass_secant_dim(&scroll(2, 2).unwrap(), 1, 2, &cfg).unwrap();
        assert_eq!(e.exact_dim, Some(7));
        let s = secant_dim(&veronese(2, 2).unwrap(), 1, &cfg).unwrap();
        assert_eq!(s.exact_dim, Some(4));
    }

    #[test]
    fn table_row_count() {
        let t = dimension_table(&scroll(2, 2).unwrap(), 2, &ComputeCfg::default()).unwrap();
        assert_eq!(t.rows().len(), 1 + 3 + 3 + 3);
        assert_eq!((t.s(1), t.s(2), t.ghk(1, 2)), (5, 5, 7));
    }
}
