use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RationalMatrix = Matrix<Rational>;
pub type IntegerMatrix = Matrix<BigInt>;

impl<T> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[T]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows<R: AsRef<[T]>>(cols: usize, rows: &[R]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend_from_slice(r);
        }
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// First `k` rows.
    pub fn top_rows(&self, k: usize) -> Self {
        Matrix { rows: k, cols: self.cols, data: self.data[..k * self.cols].to_vec() }
    }
}

impl<T: Zero + One + Clone> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn mul(&self, rhs: &Matrix<T>) -> Matrix<T>
    where
        T: for<'a> std::ops::Mul<&'a T, Output = T>,
    {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a.clone() * &rhs[(k, j)];
                    let cell = &mut out[(i, j)];
                    *cell = std::mem::replace(cell, T::zero()) + prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T>
    where
        T: for<'a> std::ops::Mul<&'a T, Output = T>,
    {
        assert_eq!(self.cols, v.len());
        self.iter_rows().map(|r| dot(r, v)).collect()
    }
}

pub(crate) fn dot<T>(a: &[T], b: &[T]) -> T
where
    T: Zero + Clone + for<'x> std::ops::Mul<&'x T, Output = T>,
{
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| acc + x.clone() * y)
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl IntegerMatrix {
    pub fn to_rational(&self) -> RationalMatrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().cloned().map(Rational::from_integer).collect(),
        }
    }

    /// Bareiss fraction-free determinant.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
            }
            prev = m[(k, k)].clone();
        }
        sign * &m[(n - 1, n - 1)]
    }
}

/// Reduced row-echelon form together with rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub rank: usize,
    pub reduced: RationalMatrix,
    pub pivots: Vec<usize>,
}

pub fn rref(m: &RationalMatrix) -> Rref {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = a[(r, c)].recip();
        for j in c..a.cols {
            a[(r, j)] = &a[(r, j)] * &inv;
        }
        for i in 0..a.rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..a.cols {
                let v = &a[(r, j)] * &f;
                a[(i, j)] -= v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref { rank: r, reduced: a, pivots }
}

/// Solution set of `a·x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineSolution {
    Infeasible,
    /// `point + span(nullspace)`; the basis has `cols − rank` vectors.
    Feasible { point: Vec<Rational>, nullspace: Vec<Vec<Rational>> },
}

impl AffineSolution {
    pub fn is_feasible(&self) -> bool {
        matches!(self, AffineSolution::Feasible { .. })
    }
}

pub fn solve_affine(a: &RationalMatrix, b: &[Rational]) -> AffineSolution {
    assert_eq!(a.rows(), b.len(), "right-hand side length must match row count");
    let n = a.cols();
    let mut aug = RationalMatrix::zeros(a.rows(), n + 1);
    for i in 0..a.rows() {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, n)] = b[i].clone();
    }
    let Rref { rank, reduced, pivots } = rref(&aug);
    if pivots.last() == Some(&n) {
        return AffineSolution::Infeasible;
    }
    let mut point = vec![Rational::zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        point[p] = reduced[(i, n)].clone();
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let nullspace = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -reduced[(i, f)].clone();
            }
            v
        })
        .collect::<Vec<_>>();
    debug_assert_eq!(nullspace.len(), n - rank);
    AffineSolution::Feasible { point, nullspace }
}
