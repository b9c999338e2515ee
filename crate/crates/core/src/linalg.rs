//! Dense exact linear algebra over a field or its jet extension.
//!
//! Pivoting always takes the first usable entry in scan order so that
//! elimination transcripts are reproducible.

use crate::error::{Error, Result};
use crate::exactfield::{Field, Jet, JetRing, Ring};

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Mat<E> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<E>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::ShapeMismatch(format!(
                    "row of length {} in a matrix with {cols} columns",
                    r.len()
                )));
            }
            data.extend(r);
        }
        Ok(Self {
            rows: n,
            cols,
            data,
        })
    }

    pub fn filled(rows: usize, cols: usize, v: E) -> Self {
        Self {
            rows,
            cols,
            data: vec![v; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Submatrix on the given columns, all rows.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            data.extend(cols.iter().map(|&j| self.get(i, j).clone()));
        }
        Self {
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    pub fn map<T: Clone>(&self, f: impl Fn(&E) -> T) -> Mat<T> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }
}

pub fn identity<R: Ring>(ring: &R, n: usize) -> Mat<R::Elem> {
    let mut m = Mat::filled(n, n, ring.zero());
    for i in 0..n {
        m.set(i, i, ring.one());
    }
    m
}

pub fn matmul<R: Ring>(ring: &R, a: &Mat<R::Elem>, b: &Mat<R::Elem>) -> Result<Mat<R::Elem>> {
    if a.cols != b.rows {
        return Err(Error::ShapeMismatch(format!(
            "{}x{} times {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut out = Mat::filled(a.rows, b.cols, ring.zero());
    for i in 0..a.rows {
        for k in 0..a.cols {
            let aik = a.get(i, k);
            if ring.is_zero(aik) {
                continue;
            }
            for j in 0..b.cols {
                let v = ring.add(out.get(i, j), &ring.mul(aik, b.get(k, j)));
                out.set(i, j, v);
            }
        }
    }
    Ok(out)
}

/// Brings `m` to row echelon form in place; returns the pivot columns.
fn echelon<R: Ring>(ring: &R, m: &mut Mat<R::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&i| ring.is_unit(m.get(i, col))) else {
            continue;
        };
        m.swap_rows(row, p);
        let inv = ring.try_inv(m.get(row, col)).expect("pivot is a unit");
        for i in row + 1..m.rows {
            if ring.is_zero(m.get(i, col)) {
                continue;
            }
            let factor = ring.mul(m.get(i, col), &inv);
            for j in col..m.cols {
                let v = ring.sub(m.get(i, j), &ring.mul(&factor, m.get(row, j)));
                m.set(i, j, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank<F: Field>(field: &F, m: &Mat<F::Elem>) -> usize {
    let mut work = m.clone();
    echelon(field, &mut work).len()
}

pub fn determinant<F: Field>(field: &F, m: &Mat<F::Elem>) -> Result<F::Elem> {
    if m.rows != m.cols {
        return Err(Error::ShapeMismatch(
            "determinant of a non-square matrix".into(),
        ));
    }
    let mut work = m.clone();
    let mut det = field.one();
    for col in 0..work.cols {
        let Some(p) = (col..work.rows).find(|&i| !field.is_zero(work.get(i, col))) else {
            return Ok(field.zero());
        };
        if p != col {
            work.swap_rows(p, col);
            det = field.neg(&det);
        }
        det = field.mul(&det, work.get(col, col));
        let inv = field.try_inv(work.get(col, col)).expect("nonzero");
        for i in col + 1..work.rows {
            let factor = field.mul(work.get(i, col), &inv);
            for j in col..work.cols {
                let v = field.sub(work.get(i, j), &field.mul(&factor, work.get(col, j)));
                work.set(i, j, v);
            }
        }
    }
    Ok(det)
}

/// Columns `J` with `|J| = count` such that the submatrix on the first
/// `count` independent rows and `J` is invertible.
pub fn choose_pivot_columns<F: Field>(
    field: &F,
    m: &Mat<F::Elem>,
    count: usize,
) -> Result<Vec<usize>> {
    let mut work = m.clone();
    let mut pivots = echelon(field, &mut work);
    if pivots.len() < count {
        return Err(Error::RankDeficient {
            rank: pivots.len(),
            needed: count,
        });
    }
    pivots.truncate(count);
    Ok(pivots)
}

/// Affine Grassmannian chart: returns `N_J^{-1} N_{J^c}` where `J` are the
/// pivot columns and `J^c` the remaining columns in increasing order.
pub fn chart_normalize<R: Ring>(
    ring: &R,
    n: &Mat<R::Elem>,
    pivots: &[usize],
) -> Result<Mat<R::Elem>> {
    let rows = n.rows;
    if pivots.len() != rows {
        return Err(Error::ShapeMismatch(format!(
            "{} pivot columns for {rows} rows",
            pivots.len()
        )));
    }
    let mut is_pivot = vec![false; n.cols];
    for &j in pivots {
        if j >= n.cols {
            return Err(Error::IndexOutOfRange {
                what: "pivot column",
                index: j,
                limit: n.cols,
            });
        }
        if std::mem::replace(&mut is_pivot[j], true) {
            return Err(Error::ShapeMismatch(format!("pivot column {j} repeated")));
        }
    }
    let rest: Vec<usize> = (0..n.cols).filter(|&j| !is_pivot[j]).collect();
    // Gauss-Jordan on [N_J | N_Jc]
    let mut aug = n.select_columns(&[pivots, &rest[..]].concat());
    for col in 0..rows {
        let p = (col..rows)
            .find(|&i| ring.is_unit(aug.get(i, col)))
            .ok_or(Error::SingularPivotBlock)?;
        aug.swap_rows(col, p);
        let inv = ring.try_inv(aug.get(col, col)).expect("unit pivot");
        for j in 0..aug.cols {
            let v = ring.mul(aug.get(col, j), &inv);
            aug.set(col, j, v);
        }
        for i in 0..rows {
            if i == col || ring.is_zero(aug.get(i, col)) {
                continue;
            }
            let factor = aug.get(i, col).clone();
            for j in 0..aug.cols {
                let v = ring.sub(aug.get(i, j), &ring.mul(&factor, aug.get(col, j)));
                aug.set(i, j, v);
            }
        }
    }
    let tail: Vec<usize> = (rows..aug.cols).collect();
    Ok(aug.select_columns(&tail))
}

/// Rank of the matrix whose rows are the partial vectors of every entry.
pub fn jacobian_rank<F: Field>(ring: &JetRing<F>, chart: &Mat<Jet<F::Elem>>) -> usize {
    let d = ring.dirs();
    let rows: Vec<Vec<F::Elem>> = chart
        .entries()
        .iter()
        .map(|j| {
            assert_eq!(j.partials.len(), d, "jets of mixed width");
            j.partials.clone()
        })
        .collect();
    if rows.is_empty() || d == 0 {
        return 0;
    }
    let m = Mat::from_rows(d, rows).expect("uniform width");
    // the transpose is smaller to eliminate when the chart has many entries
    if m.rows > m.cols {
        rank(ring.base(), &m.transpose())
    } else {
        rank(ring.base(), &m)
    }
}
