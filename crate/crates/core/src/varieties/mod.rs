//! Parametrized projective varieties.
//!
//! A variety is given by a polynomial map on an affine parameter space whose
//! image is dense in `X ⊂ P^r`. "General points" are random parameter values.

mod format;
mod validate;

pub use format::{load_variety, save_variety};
pub use validate::{validate, ValidationReport};

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfield::{Rng, StreamTag};
use crate::polymap::{graded_cmp, Poly, PolyMap, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variety {
    name: String,
    n: usize,
    r: usize,
    map: PolyMap,
    is_cone: bool,
    degree: Option<u64>,
}

/// Summary row used by catalog listings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VarietyInfo {
    pub name: String,
    pub n: usize,
    pub r: usize,
    pub degree: Option<u64>,
    pub is_cone: bool,
}

impl Variety {
    /// `map` must have arity `n` and `r + 1` coordinates.
    pub fn new(
        name: impl Into<String>,
        map: PolyMap,
        is_cone: bool,
        degree: Option<u64>,
    ) -> Result<Self> {
        let name = name.into();
        if map.is_empty() {
            return Err(Error::InvariantViolation(format!(
                "{name}: parametrization has no coordinates"
            )));
        }
        Ok(Self {
            n: map.arity(),
            r: map.len() - 1,
            map: map.with_name(name.clone()),
            name,
            is_cone,
            degree,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn r(&self) -> usize {
        self.r
    }
    pub fn map(&self) -> &PolyMap {
        &self.map
    }
    pub fn is_cone(&self) -> bool {
        self.is_cone
    }
    pub fn degree(&self) -> Option<u64> {
        self.degree
    }

    pub fn with_cone_flag(mut self, is_cone: bool) -> Self {
        self.is_cone = is_cone;
        self
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self.map = self.map.with_name(self.name.clone());
        self
    }

    pub fn info(&self) -> VarietyInfo {
        VarietyInfo {
            name: self.name.clone(),
            n: self.n,
            r: self.r,
            degree: self.degree,
            is_cone: self.is_cone,
        }
    }
}

fn exponent_vectors(n: usize, max_total: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_total, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| graded_cmp(a, b));
    out
}

fn monomial_map(arity: usize, exps: Vec<Vec<u32>>) -> PolyMap {
    let coords = exps
        .into_iter()
        .map(|e| Poly::monomial(arity, 1, e))
        .collect();
    PolyMap::new("", arity, coords).expect("exponent vectors have the right arity")
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Affine chart of the d-uple embedding of P^n: all monomials of degree at
/// most `d`.
pub fn veronese(n: usize, d: u32) -> Result<Variety> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidArgument(format!(
            "veronese needs n >= 1 and d >= 1, got n={n}, d={d}"
        )));
    }
    let map = monomial_map(n, exponent_vectors(n, d));
    Variety::new(
        format!("veronese:{n},{d}"),
        map,
        false,
        Some((d as u64).pow(n as u32)),
    )
}

/// Rational normal scroll S(a, b) in P^{a+b+1}: `(1, s, .., s^a, u, us, .., us^b)`.
///
/// Arguments are reordered so that `a >= b`; `b = 0` is a cone.
pub fn scroll(a: u32, b: u32) -> Result<Variety> {
    let (a, b) = if a >= b { (a, b) } else { (b, a) };
    if a + b == 0 {
        return Err(Error::InvalidArgument("scroll needs a + b >= 1".into()));
    }
    let mut exps: Vec<Vec<u32>> = (0..=a).map(|i| vec![i, 0]).collect();
    exps.extend((0..=b).map(|i| vec![i, 1]));
    Variety::new(
        format!("scroll:{a},{b}"),
        monomial_map(2, exps),
        b == 0,
        Some((a + b) as u64),
    )
}

/// Affine chart of the Segre embedding of P^n x P^m.
pub fn segre(n: usize, m: usize) -> Result<Variety> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidArgument(format!(
            "segre needs n, m >= 1, got {n}, {m}"
        )));
    }
    let arity = n + m;
    let mut exps = Vec::new();
    for i in 0..=n {
        for j in 0..=m {
            let mut e = vec![0; arity];
            if i > 0 {
                e[i - 1] = 1;
            }
            if j > 0 {
                e[n + j - 1] = 1;
            }
            exps.push(e);
        }
    }
    Variety::new(
        format!("segre:{n},{m}"),
        monomial_map(arity, exps),
        false,
        Some(binomial((n + m) as u64, n as u64)),
    )
}

/// Cone with `vertex_count` new coordinate points as vertex:
/// `(t, u) -> (phi(t), u_1, .., u_v)` in P^{r+v}.
pub fn cone_over(x: &Variety, vertex_count: usize) -> Result<Variety> {
    let n = x.n + vertex_count;
    let widen = |p: &Poly| {
        let terms = p
            .terms()
            .iter()
            .map(|t| {
                let mut exps = t.exps.clone();
                exps.resize(n, 0);
                Term {
                    coeff: t.coeff.clone(),
                    exps,
                }
            })
            .collect();
        Poly::from_terms(n, terms).expect("widened arity")
    };
    let mut coords: Vec<Poly> = x.map.coords().iter().map(widen).collect();
    coords.extend((0..vertex_count).map(|j| Poly::var(n, x.n + j)));
    let name = if vertex_count == 0 {
        x.name.clone()
    } else {
        format!("cone({},{vertex_count})", x.name)
    };
    Variety::new(name, PolyMap::new("", n, coords)?, true, x.degree)
}

/// Cone over the rational normal quartic with one vertex, a surface in P^5.
pub fn cone_rnc4() -> Variety {
    let base = veronese(1, 4).expect("valid");
    cone_over(&base, 1).expect("valid").renamed("cone-rnc4")
}

/// Generic linear projection to P^target_r with integer matrix entries in
/// [-99, 99] drawn from `rng`.
pub fn project(x: &Variety, target_r: usize, rng: &Rng) -> Result<Variety> {
    if target_r >= x.r {
        return Err(Error::TargetNotSmaller {
            target: target_r,
            r: x.r,
        });
    }
    if target_r < x.n {
        return Err(Error::TargetTooSmall {
            target: target_r,
            n: x.n,
        });
    }
    let mut stream = rng.stream(StreamTag::Projection, 0, 0);
    let a: Vec<Vec<BigInt>> = (0..=target_r)
        .map(|_| {
            (0..=x.r)
                .map(|_| BigInt::from(stream.small_int(99)))
                .collect()
        })
        .collect();
    let map = x.map.compose_linear(&a)?;
    let degree = if target_r > x.n { x.degree } else { None };
    Variety::new(
        format!("proj({}->P{target_r},seed={})", x.name, rng.seed()),
        map,
        x.is_cone,
        degree,
    )
}

/// Seed of the fixed projection used by the `proj-veronese` catalog entries.
pub const CATALOG_PROJECTION_SEED: u64 = 1729;

/// Resolves a builtin selector such as `scroll:3,1`, `veronese:2,2`,
/// `segre:1,2`, `cone-rnc4`, `cone:veronese:1,4` or `proj-veronese:2,3`.
pub fn parse_selector(sel: &str) -> Result<Variety> {
    let unknown = || Error::UnknownVariety(sel.to_string());
    let sel = sel.trim();
    if sel == "cone-rnc4" {
        return Ok(cone_rnc4());
    }
    if let Some(inner) = sel.strip_prefix("cone:") {
        let base = parse_selector(inner)?;
        return cone_over(&base, 1);
    }
    let (head, args) = sel.split_once(':').ok_or_else(unknown)?;
    let nums: Vec<u32> = args
        .split(',')
        .map(|a| a.trim().parse::<u32>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| unknown())?;
    let [a, b] = nums[..] else {
        return Err(unknown());
    };
    match head {
        "veronese" => veronese(a as usize, b),
        "scroll" => scroll(a, b),
        "segre" => segre(a as usize, b as usize),
        "proj-veronese" => {
            let v = veronese(a as usize, b)?;
            let target = 2 * v.n + 1;
            project(&v, target, &Rng::new(CATALOG_PROJECTION_SEED))
                .map(|p| p.renamed(format!("proj-veronese:{a},{b}")))
        }
        _ => Err(unknown()),
    }
}

/// Selectors of the builtin catalog, in listing order.
pub const CATALOG: [&str; 12] = [
    "veronese:1,3",
    "veronese:1,4",
    "veronese:2,2",
    "veronese:2,3",
    "proj-veronese:2,3",
    "scroll:2,2",
    "scroll:3,1",
    "scroll:4,0",
    "cone-rnc4",
    "segre:1,1",
    "segre:1,2",
    "segre:2,2",
];

pub fn catalog() -> Vec<Variety> {
    CATALOG
        .iter()
        .map(|s| parse_selector(s).expect("catalog selectors are valid"))
        .collect()
}
