use num_bigint::BigInt;

use super::{Field, Ring};
use crate::error::{Error, Result};

/// First-order Taylor expansion: a value and its partials along `d`
/// active directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jet<E> {
    pub val: E,
    pub partials: Vec<E>,
}

/// Jets over a base field with a fixed number of directions.
#[derive(Clone, Debug)]
pub struct JetRing<F> {
    base: F,
    dirs: usize,
}

impl<F: Field> JetRing<F> {
    pub fn new(base: F, dirs: usize) -> Self {
        Self { base, dirs }
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    pub fn dirs(&self) -> usize {
        self.dirs
    }

    pub fn constant(&self, val: F::Elem) -> Jet<F::Elem> {
        Jet {
            val,
            partials: vec![self.base.zero(); self.dirs],
        }
    }

    /// The coordinate function along direction `dir`, evaluated at `val`.
    pub fn variable(&self, val: F::Elem, dir: usize) -> Jet<F::Elem> {
        let mut j = self.constant(val);
        j.partials[dir] = self.base.one();
        j
    }

    /// Lifts `point` with coordinate `i` seeded along direction `offset + i`.
    pub fn seed_block(&self, point: &[F::Elem], offset: usize) -> Vec<Jet<F::Elem>> {
        assert!(
            offset + point.len() <= self.dirs,
            "direction block overflows"
        );
        point
            .iter()
            .enumerate()
            .map(|(i, v)| self.variable(v.clone(), offset + i))
            .collect()
    }

    fn map2(
        &self,
        a: &Jet<F::Elem>,
        b: &Jet<F::Elem>,
        val: F::Elem,
        f: impl Fn(&F::Elem, &F::Elem) -> F::Elem,
    ) -> Jet<F::Elem> {
        Jet {
            val,
            partials: a
                .partials
                .iter()
                .zip(&b.partials)
                .map(|(x, y)| f(x, y))
                .collect(),
        }
    }
}

/// Lifts a point to jets, seeding every coordinate listed in `active` along
/// the direction with the same index. Other coordinates become constants.
pub fn lift_to_jets<F: Field>(
    ring: &JetRing<F>,
    point: &[F::Elem],
    active: &[usize],
) -> Result<Vec<Jet<F::Elem>>> {
    let mut seen = vec![false; point.len()];
    for &i in active {
        if i >= point.len() || i >= ring.dirs {
            return Err(Error::IndexOutOfRange {
                what: "direction",
                index: i,
                limit: point.len().min(ring.dirs),
            });
        }
        if std::mem::replace(&mut seen[i], true) {
            return Err(Error::DuplicateDirection(i));
        }
    }
    Ok(point
        .iter()
        .enumerate()
        .map(|(i, v)| {
            if seen[i] {
                ring.variable(v.clone(), i)
            } else {
                ring.constant(v.clone())
            }
        })
        .collect())
}

impl<F: Field> Ring for JetRing<F> {
    type Elem = Jet<F::Elem>;

    fn zero(&self) -> Self::Elem {
        self.constant(self.base.zero())
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let b0 = &self.base;
        self.map2(a, b, b0.add(&a.val, &b.val), |x, y| b0.add(x, y))
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let b0 = &self.base;
        self.map2(a, b, b0.sub(&a.val, &b.val), |x, y| b0.sub(x, y))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Jet {
            val: self.base.neg(&a.val),
            partials: a.partials.iter().map(|x| self.base.neg(x)).collect(),
        }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let b0 = &self.base;
        // Leibniz: d(ab) = a db + b da
        self.map2(a, b, b0.mul(&a.val, &b.val), |da, db| {
            b0.add(&b0.mul(&a.val, db), &b0.mul(&b.val, da))
        })
    }
    fn from_bigint(&self, c: &BigInt) -> Self::Elem {
        self.constant(self.base.from_bigint(c))
    }
    fn from_i64(&self, c: i64) -> Self::Elem {
        self.constant(self.base.from_i64(c))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.base.is_zero(&a.val) && a.partials.iter().all(|x| self.base.is_zero(x))
    }
    fn try_inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        let inv = self.base.try_inv(&a.val)?;
        let scale = self.base.neg(&self.base.mul(&inv, &inv));
        Some(Jet {
            val: inv,
            partials: a
                .partials
                .iter()
                .map(|x| self.base.mul(x, &scale))
                .collect(),
        })
    }
    fn is_unit(&self, a: &Self::Elem) -> bool {
        !self.base.is_zero(&a.val)
    }
}
