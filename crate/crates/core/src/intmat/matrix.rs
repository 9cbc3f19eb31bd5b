use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A square matrix of exact integers, stored row-major.
///
/// The derived ordering compares the dimension first and then the entries in
/// row-major order, so matrices of one dimension sort lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(n: usize, data: Vec<T>) -> Result<Self> {
        if n == 0 {
            return Err(Error::UnsupportedDimension(0));
        }
        if data.len() != n * n {
            return Err(Error::BadShape { n, expected: n * n, got: data.len() });
        }
        Ok(Matrix { n, data })
    }

    pub fn from_rows<R: AsRef<[T]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::BadShape { n, expected: n, got: row.len() });
            }
            data.extend_from_slice(row);
        }
        Matrix::new(n, data)
    }

    pub fn zero(n: usize) -> Self {
        Matrix { n, data: vec![T::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn diagonal(diag: &[T]) -> Self {
        let n = diag.len();
        let mut m = Self::zero(n);
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * n + i] = d;
        }
        m
    }

    /// Permutation matrix sending basis vector `j` to basis vector `perm[j]`.
    pub fn permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        let mut m = Self::zero(n);
        for (j, &i) in perm.iter().enumerate() {
            if i >= n || seen[i] {
                return Err(Error::BadShape { n, expected: n, got: i });
            }
            seen[i] = true;
            m.data[i * n + j] = T::one();
        }
        Ok(m)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.data.chunks(self.n).map(<[T]>::to_vec).collect()
    }

    /// Entries in column-major order.
    pub fn column_major(&self) -> Vec<T> {
        let n = self.n;
        (0..n).flat_map(|j| (0..n).map(move |i| (i, j))).map(|(i, j)| self.get(i, j)).collect()
    }

    pub fn is_identity(&self) -> bool {
        let n = self.n;
        self.data.iter().enumerate().all(|(idx, &v)| {
            if idx / n == idx % n {
                v.is_one()
            } else {
                v.is_zero()
            }
        })
    }

    pub fn mul(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        let n = self.n;
        if rhs.n != n {
            return Err(Error::DimensionMismatch(n, rhs.n));
        }
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for l in 0..n {
                let a = self.data[i * n + l];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.data[l * n + j];
                    if b.is_zero() {
                        continue;
                    }
                    let cell: &mut T = &mut out.data[i * n + j];
                    *cell = cell.add_c(a.mul_c(b)?)?;
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Matrix<T> {
        let n = self.n;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j];
            }
        }
        out
    }

    pub fn neg(&self) -> Result<Matrix<T>> {
        let data = self.data.iter().map(|&v| v.neg_c()).collect::<Result<_>>()?;
        Ok(Matrix { n: self.n, data })
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<T> {
        let n = self.n;
        let mut a = self.data.clone();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n.saturating_sub(1) {
            if a[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                    return Ok(T::zero());
                };
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                negate = !negate;
            }
            let pivot = a[k * n + k];
            for i in k + 1..n {
                let aik = a[i * n + k];
                for j in k + 1..n {
                    let num = a[i * n + j].mul_c(pivot)?.sub_c(aik.mul_c(a[k * n + j])?)?;
                    // exact by Sylvester's identity
                    a[i * n + j] = num / prev;
                }
                a[i * n + k] = T::zero();
            }
            prev = pivot;
        }
        let d = a[n * n - 1];
        if negate {
            d.neg_c()
        } else {
            Ok(d)
        }
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> Matrix<T> {
        let n = self.n;
        let data = (0..n)
            .filter(|&i| i != skip_row)
            .flat_map(|i| (0..n).filter(move |&j| j != skip_col).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .collect();
        Matrix { n: n - 1, data }
    }

    /// Exact inverse of a matrix with determinant ±1, via the adjugate.
    pub fn unimodular_inverse(&self) -> Result<Matrix<T>> {
        let n = self.n;
        let d = self.det()?;
        if !d.abs().is_one() {
            return Err(Error::NotUnimodular(d.to_string()));
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut c = self.minor(i, j).det()?;
                if (i + j) % 2 == 1 {
                    c = c.neg_c()?;
                }
                // adjugate is the transposed cofactor matrix; d is ±1
                out.set(j, i, c * d);
            }
        }
        Ok(out)
    }

    pub fn is_unimodular(&self) -> Result<bool> {
        Ok(self.det()?.abs().is_one())
    }

    pub fn cast<U: Scalar>(&self) -> Result<Matrix<U>> {
        let data = self.data.iter().map(|&v| U::from_i128(v.to_i128().ok_or(Error::Overflow)?).ok_or(Error::Overflow)).collect::<Result<_>>()?;
        Ok(Matrix { n: self.n, data })
    }

    pub(crate) fn data_mut(&mut self) -> &mut [T] {
        &mut self.data
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<T: fmt::Debug> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.data.chunks(self.n).enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v:?}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
