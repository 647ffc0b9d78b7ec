//! Small exact linear algebra: dense matrices over [`ExactScalar`] and an
//! incremental rational span over integer vectors.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::scalar::ExactScalar;

/// Dense square or rectangular matrix with exact entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<ExactScalar>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![ExactScalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ExactScalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<ExactScalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<ExactScalar>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[ExactScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<ExactScalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, got: rhs.rows });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * &rhs[(k, j)];
                    out[(i, j)] = &out[(i, j)] + &prod;
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[ExactScalar]) -> Result<Vec<ExactScalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(ExactScalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn trace(&self) -> ExactScalar {
        (0..self.rows.min(self.cols)).fold(ExactScalar::zero(), |acc, i| acc + &self[(i, i)])
    }

    /// Row echelon form by Gaussian elimination; returns the rank and the
    /// sign/scale bookkeeping needed for the determinant.
    fn eliminate(&mut self) -> (usize, ExactScalar) {
        let mut det = ExactScalar::one();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                det = ExactScalar::zero();
                continue;
            };
            if p != rank {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, rank * self.cols + j);
                }
                det = -det;
            }
            let pivot = self[(rank, col)].clone();
            det = &det * &pivot;
            let inv = pivot.inverse().expect("nonzero pivot");
            for r in rank + 1..self.rows {
                if self[(r, col)].is_zero() {
                    continue;
                }
                let factor = &self[(r, col)] * &inv;
                for j in col..self.cols {
                    let delta = &factor * &self[(rank, j)];
                    self[(r, j)] = &self[(r, j)] - &delta;
                }
            }
            rank += 1;
        }
        (rank, det)
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate().0
    }

    pub fn determinant(&self) -> Result<ExactScalar> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, got: self.cols });
        }
        let (rank, det) = self.clone().eliminate();
        Ok(if rank < self.rows { ExactScalar::zero() } else { det })
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let p = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if p != col {
                for j in 0..n {
                    a.data.swap(p * n + j, col * n + j);
                    inv.data.swap(p * n + j, col * n + j);
                }
            }
            let pinv = a[(col, col)].inverse()?;
            for j in 0..n {
                a[(col, j)] = &a[(col, j)] * &pinv;
                inv[(col, j)] = &inv[(col, j)] * &pinv;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    let da = &f * &a[(col, j)];
                    let di = &f * &inv[(col, j)];
                    a[(r, j)] = &a[(r, j)] - &da;
                    inv[(r, j)] = &inv[(r, j)] - &di;
                }
            }
        }
        Some(inv)
    }
}

impl std::ops::Index<(usize, usize)> for ExactMatrix {
    type Output = ExactScalar;
    fn index(&self, (i, j): (usize, usize)) -> &ExactScalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut ExactScalar {
        &mut self.data[i * self.cols + j]
    }
}

pub fn dot(u: &[ExactScalar], v: &[ExactScalar]) -> ExactScalar {
    u.iter().zip(v).fold(ExactScalar::zero(), |acc, (a, b)| acc + a * b)
}

/// Incrementally built `Q`-span of integer vectors, kept in echelon form.
///
/// Each stored row has a pivot column at which every later row vanishes, so
/// reducing a vector against the rows in insertion order clears all pivots.
#[derive(Clone, Debug, Default)]
pub struct QSpan {
    dim: usize,
    rows: Vec<(usize, Vec<i128>)>,
}

impl QSpan {
    pub fn new(dim: usize) -> Self {
        Self { dim, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[i64]) -> Vec<i128> {
        debug_assert_eq!(v.len(), self.dim);
        let mut v: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for (p, row) in &self.rows {
            let c = v[*p];
            if c == 0 {
                continue;
            }
            let r = row[*p];
            let g = c.gcd(&r);
            let (mv, mr) = (r / g, c / g);
            for (x, y) in v.iter_mut().zip(row) {
                *x = *x * mv - y * mr;
            }
            normalize(&mut v);
        }
        v
    }

    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, v: &[i64]) -> bool {
        let red = self.reduce(v);
        match red.iter().position(|&x| x != 0) {
            Some(p) => {
                self.rows.push((p, red));
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }
}

fn normalize(v: &mut [i128]) {
    let g = v.iter().fold(0i128, |g, &x| g.gcd(&x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
}

/// Rank over `Q` of a list of integer vectors of length `dim`.
pub fn q_rank<'a>(dim: usize, vectors: impl IntoIterator<Item = &'a [i64]>) -> usize {
    let mut span = QSpan::new(dim);
    for v in vectors {
        span.insert(v);
    }
    span.dim()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| ExactScalar::from_int(x)).collect()).collect())
    }

    #[test]
    fn determinant_and_inverse() {
        let a = m(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(a.determinant().unwrap(), ExactScalar::from_int(4));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), ExactMatrix::identity(3));
        let s = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.rank(), 1);
        assert!(s.inverse().is_none());
        assert_eq!(s.determinant().unwrap(), ExactScalar::zero());
    }

    #[test]
    fn qspan_membership() {
        let mut s = QSpan::new(3);
        assert!(s.insert(&[2, 4, 0]));
        assert!(!s.insert(&[1, 2, 0]));
        assert!(s.insert(&[0, 3, 3]));
        assert!(s.contains(&[1, 5, 3]));
        assert!(!s.contains(&[0, 0, 1]));
        assert_eq!(q_rank(2, [&[1i64, 1][..], &[2, 2], &[0, 1]]), 2);
    }
}
