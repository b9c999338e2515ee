//! Single-sample rank computations, generic over the scalar field.
//!
//! Each function draws fresh parameters from a [`Sampler`] and returns the
//! rank observed at that sample. The drivers in the parent module repeat
//! these over independent trials and take the maximum.

use crate::error::{Error, Result};
use crate::exactfield::{Field, FieldCtx, Jet, JetRing, Rationals, Ring, SampleStream};
use crate::linalg::{self, Mat};
use crate::varieties::Variety;

pub(crate) trait Sampler<F: Field> {
    fn field(&self) -> &F;
    fn draw(&mut self) -> F::Elem;

    fn draw_vec(&mut self, len: usize) -> Vec<F::Elem> {
        (0..len).map(|_| self.draw()).collect()
    }
}

/// Uniform residues mod p.
pub(crate) struct ModSampler<'a> {
    pub field: FieldCtx,
    pub stream: &'a mut SampleStream,
}

impl Sampler<FieldCtx> for ModSampler<'_> {
    fn field(&self) -> &FieldCtx {
        &self.field
    }
    fn draw(&mut self) -> u64 {
        self.stream.residue(&self.field)
    }
}

/// Small integers in [-bound, bound], as rationals.
pub(crate) struct IntSampler<'a> {
    pub stream: &'a mut SampleStream,
    pub bound: i64,
}

impl Sampler<Rationals> for IntSampler<'_> {
    fn field(&self) -> &Rationals {
        &Rationals
    }
    fn draw(&mut self) -> <Rationals as Ring>::Elem {
        Rationals.from_i64(self.stream.small_int(self.bound))
    }
}

/// Rank of `r + 2` stacked sample points.
pub(crate) fn span_rank<F: Field, S: Sampler<F>>(x: &Variety, s: &mut S) -> Result<usize> {
    let field = s.field().clone();
    let rows = (0..x.r() + 2)
        .map(|_| {
            let t = s.draw_vec(x.n());
            x.map().eval(&field, &t)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(linalg::rank(&field, &Mat::from_rows(x.r() + 1, rows)?))
}

/// Value row and partial rows of the parametrization at `k + 1` points,
/// stacked: the Terracini matrix. Its rank is `dim S_k + 1`.
pub(crate) fn terracini_rank<F: Field, S: Sampler<F>>(
    x: &Variety,
    k: usize,
    s: &mut S,
) -> Result<usize> {
    let field = s.field().clone();
    let jr = JetRing::new(field.clone(), x.n());
    let mut rows = Vec::with_capacity((k + 1) * (x.n() + 1));
    for _ in 0..=k {
        let t = s.draw_vec(x.n());
        let phi = x.map().eval(&jr, &jr.seed_block(&t, 0))?;
        rows.push(phi.iter().map(|j| j.val.clone()).collect());
        for dir in 0..x.n() {
            rows.push(phi.iter().map(|j| j.partials[dir].clone()).collect());
        }
    }
    Ok(linalg::rank(&field, &Mat::from_rows(x.r() + 1, rows)?))
}

/// Jet matrix of phi at `k + 1` fresh points; point `i` is seeded along
/// directions `i*n .. (i+1)*n`.
fn point_matrix<F: Field, S: Sampler<F>>(
    jr: &JetRing<F>,
    x: &Variety,
    k: usize,
    s: &mut S,
) -> Result<Mat<Jet<F::Elem>>> {
    let rows = (0..=k)
        .map(|i| {
            let t = s.draw_vec(x.n());
            x.map().eval(jr, &jr.seed_block(&t, i * x.n()))
        })
        .collect::<Result<Vec<_>>>()?;
    Mat::from_rows(x.r() + 1, rows)
}

fn values<F: Field>(m: &Mat<Jet<F::Elem>>) -> Mat<F::Elem> {
    m.map(|j| j.val.clone())
}

/// Jacobian rank of the chart image of the row space of `n`.
fn chart_rank<F: Field>(jr: &JetRing<F>, n: &Mat<Jet<F::Elem>>) -> Result<usize> {
    let pivots = linalg::choose_pivot_columns(jr.base(), &values::<F>(n), n.rows())
        .map_err(|_| Error::SingularPivotBlock)?;
    let chart = linalg::chart_normalize(jr, n, &pivots)?;
    Ok(linalg::jacobian_rank(jr, &chart))
}

/// Number of active directions for `G_k` (`h = None`) or `G_{h,k}`.
pub(crate) fn direction_count(x: &Variety, h: Option<usize>, k: usize) -> usize {
    x.n() * (k + 1) + h.map_or(0, |h| (h + 1) * (k + 1))
}

/// `dim G_k` at one sample: the span map into an affine chart of G(k, r).
pub(crate) fn span_map_rank<F: Field, S: Sampler<F>>(
    x: &Variety,
    k: usize,
    s: &mut S,
) -> Result<usize> {
    let jr = JetRing::new(s.field().clone(), direction_count(x, None, k));
    let m = point_matrix(&jr, x, k, s)?;
    if linalg::rank(jr.base(), &values::<F>(&m)) < k + 1 {
        return Err(Error::DegenerateSample(k));
    }
    chart_rank(&jr, &m)
}

/// `dim G_{h,k}` at one sample: `(t, L) -> rowspace(L * M(t))` into an affine
/// chart of G(h, r), with `L` a full `(h+1) x (k+1)` coefficient matrix.
pub(crate) fn incidence_rank<F: Field, S: Sampler<F>>(
    x: &Variety,
    h: usize,
    k: usize,
    s: &mut S,
) -> Result<usize> {
    let jr = JetRing::new(s.field().clone(), direction_count(x, Some(h), k));
    let m = point_matrix(&jr, x, k, s)?;
    if linalg::rank(jr.base(), &values::<F>(&m)) < k + 1 {
        return Err(Error::DegenerateSample(k));
    }
    let offset = x.n() * (k + 1);
    let coeffs = s.draw_vec((h + 1) * (k + 1));
    let lambda = Mat::from_vec(
        h + 1,
        k + 1,
        coeffs
            .into_iter()
            .enumerate()
            .map(|(i, v)| jr.variable(v, offset + i))
            .collect(),
    )?;
    let n = linalg::matmul(&jr, &lambda, &m)?;
    chart_rank(&jr, &n)
}

/// Rank of `[phi; d phi / d t_1; ..; d phi / d t_n]` at one point.
pub(crate) fn immersion_rank<F: Field, S: Sampler<F>>(x: &Variety, s: &mut S) -> Result<usize> {
    terracini_rank(x, 0, s)
}
