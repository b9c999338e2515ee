//! Sparse multivariate polynomial maps with integer coefficients.
//!
//! Terms are kept in graded order: total degree ascending, ties broken by
//! exponent vector in descending lexicographic order. With variables
//! `(s, t)` that lists `1, s, t, s^2, st, t^2, ...`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactfield::Ring;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: BigInt,
    pub exps: Vec<u32>,
}

impl Term {
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }
}

/// Graded monomial order used for canonical form.
pub fn graded_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| b.cmp(a))
}

/// A polynomial in canonical form: no zero coefficients, no repeated
/// monomials, terms in graded order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    arity: usize,
    terms: Vec<Term>,
}

impl Poly {
    pub fn zero(arity: usize) -> Self {
        Self {
            arity,
            terms: Vec::new(),
        }
    }

    pub fn constant(arity: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(arity, c, vec![0; arity])
    }

    pub fn monomial(arity: usize, c: impl Into<BigInt>, exps: Vec<u32>) -> Self {
        Self::from_terms(
            arity,
            vec![Term {
                coeff: c.into(),
                exps,
            }],
        )
        .expect("monomial exponent length matches arity")
    }

    /// The coordinate function `x_i`.
    pub fn var(arity: usize, i: usize) -> Self {
        let mut e = vec![0; arity];
        e[i] = 1;
        Self::monomial(arity, 1, e)
    }

    /// Canonicalizes an arbitrary term list.
    pub fn from_terms(arity: usize, terms: Vec<Term>) -> Result<Self> {
        let mut acc: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for t in terms {
            if t.exps.len() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    got: t.exps.len(),
                });
            }
            *acc.entry(t.exps).or_insert_with(BigInt::zero) += t.coeff;
        }
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(exps, coeff)| Term { coeff, exps })
            .collect();
        terms.sort_by(|a, b| graded_cmp(&a.exps, &b.exps));
        Ok(Self { arity, terms })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(Term::degree).max()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.arity, other.arity);
        let terms = self.terms.iter().chain(&other.terms).cloned().collect();
        Self::from_terms(self.arity, terms).expect("arity checked")
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: &t.coeff * c,
                exps: t.exps.clone(),
            })
            .collect();
        Self::from_terms(self.arity, terms).expect("arity unchanged")
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.arity, other.arity);
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(Term {
                    coeff: &a.coeff * &b.coeff,
                    exps: a.exps.iter().zip(&b.exps).map(|(x, y)| x + y).collect(),
                });
            }
        }
        Self::from_terms(self.arity, terms).expect("arity checked")
    }

    /// Formal derivative with respect to input `i`.
    pub fn partial(&self, i: usize) -> Result<Poly> {
        if i >= self.arity {
            return Err(Error::IndexOutOfRange {
                what: "input",
                index: i,
                limit: self.arity,
            });
        }
        let terms = self
            .terms
            .iter()
            .filter(|t| t.exps[i] > 0)
            .map(|t| {
                let mut exps = t.exps.clone();
                exps[i] -= 1;
                Term {
                    coeff: &t.coeff * BigInt::from(t.exps[i]),
                    exps,
                }
            })
            .collect();
        Self::from_terms(self.arity, terms)
    }

    pub fn eval<R: Ring>(&self, ring: &R, point: &[R::Elem]) -> Result<R::Elem> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: point.len(),
            });
        }
        let powers = PowerTable::new(ring, point, self.max_exponents());
        Ok(self.eval_with(ring, &powers))
    }

    fn max_exponents(&self) -> Vec<u32> {
        let mut m = vec![0; self.arity];
        for t in &self.terms {
            for (a, &e) in m.iter_mut().zip(&t.exps) {
                *a = (*a).max(e);
            }
        }
        m
    }

    fn eval_with<R: Ring>(&self, ring: &R, powers: &PowerTable<R::Elem>) -> R::Elem {
        let mut acc = ring.zero();
        for t in &self.terms {
            let mut m = ring.from_bigint(&t.coeff);
            for (i, &e) in t.exps.iter().enumerate() {
                if e > 0 {
                    m = ring.mul(&m, &powers.0[i][e as usize]);
                }
            }
            acc = ring.add(&acc, &m);
        }
        acc
    }
}

struct PowerTable<E>(Vec<Vec<E>>);

impl<E: Clone> PowerTable<E> {
    fn new<R: Ring<Elem = E>>(ring: &R, point: &[E], max_exps: Vec<u32>) -> Self {
        let table = point
            .iter()
            .zip(max_exps)
            .map(|(x, top)| {
                let mut row = Vec::with_capacity(top as usize + 1);
                row.push(ring.one());
                for e in 1..=top as usize {
                    let next = ring.mul(&row[e - 1], x);
                    row.push(next);
                }
                row
            })
            .collect();
        Self(table)
    }
}

/// A polynomial map `Z^arity -> Z^N`, given coordinatewise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMap {
    name: String,
    arity: usize,
    coords: Vec<Poly>,
}

impl PolyMap {
    pub fn new(name: impl Into<String>, arity: usize, coords: Vec<Poly>) -> Result<Self> {
        for c in &coords {
            if c.arity != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    got: c.arity,
                });
            }
        }
        Ok(Self {
            name: name.into(),
            arity,
            coords,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[Poly] {
        &self.coords
    }

    pub fn degree(&self) -> Option<u32> {
        self.coords.iter().filter_map(Poly::degree).max()
    }

    /// Coordinatewise evaluation over any ring.
    pub fn eval<R: Ring>(&self, ring: &R, point: &[R::Elem]) -> Result<Vec<R::Elem>> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: point.len(),
            });
        }
        let mut top = vec![0u32; self.arity];
        for c in &self.coords {
            for (a, e) in top.iter_mut().zip(c.max_exponents()) {
                *a = (*a).max(e);
            }
        }
        let powers = PowerTable::new(ring, point, top);
        Ok(self
            .coords
            .iter()
            .map(|c| c.eval_with(ring, &powers))
            .collect())
    }

    /// Formal derivative of every coordinate with respect to input `i`.
    pub fn partial(&self, i: usize) -> Result<PolyMap> {
        let coords = self
            .coords
            .iter()
            .map(|c| c.partial(i))
            .collect::<Result<_>>()?;
        Ok(Self {
            name: format!("d{}/dx{}", self.name, i),
            arity: self.arity,
            coords,
        })
    }

    /// Coordinates of the result are `A * coords`; `a` is given row-major.
    pub fn compose_linear(&self, a: &[Vec<BigInt>]) -> Result<PolyMap> {
        let coords = a
            .iter()
            .map(|row| {
                if row.len() != self.coords.len() {
                    return Err(Error::ShapeMismatch(format!(
                        "matrix row has {} entries, map has {} coordinates",
                        row.len(),
                        self.coords.len()
                    )));
                }
                let terms = row
                    .iter()
                    .zip(&self.coords)
                    .filter(|(c, _)| !c.is_zero())
                    .flat_map(|(c, p)| {
                        p.terms.iter().map(move |t| Term {
                            coeff: c * &t.coeff,
                            exps: t.exps.clone(),
                        })
                    })
                    .collect();
                Poly::from_terms(self.arity, terms)
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            name: self.name.clone(),
            arity: self.arity,
            coords,
        })
    }
}

/// Identity matrix with big-integer entries.
pub fn identity_matrix(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}
