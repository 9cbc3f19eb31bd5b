//! Hermite normal forms under one-sided unimodular multiplication.
//!
//! Convention for the right action (`m -> m * U`): lower triangular, positive
//! diagonal, and every entry left of the diagonal reduced into `[0, diag)` of
//! its row. The left-action form is the transpose of that convention and is
//! computed by its own row-operation routine.

use crate::error::{Error, Result};
use crate::intmat::Matrix;
use crate::scalar::Scalar;

/// A matrix in column-style Hermite normal form; the unique basis of its
/// sublattice under the chosen convention.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hnf<T> {
    matrix: Matrix<T>,
}

impl<T: Scalar> Hnf<T> {
    /// Wraps `m` after checking the canonical-form predicate.
    pub fn from_matrix(m: Matrix<T>) -> Option<Self> {
        is_hnf(&m).then_some(Hnf { matrix: m })
    }

    pub(crate) fn from_matrix_unchecked(m: Matrix<T>) -> Self {
        debug_assert!(is_hnf(&m), "not in HNF: {m}");
        Hnf { matrix: m }
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix<T> {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Index of the generated sublattice: the product of the diagonal.
    pub fn index(&self) -> Result<T> {
        (0..self.dim()).try_fold(T::one(), |acc, i| acc.mul_c(self.matrix.get(i, i)))
    }
}

impl<T: std::fmt::Debug> std::fmt::Debug for Hnf<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Hnf{}", self.matrix)
    }
}

impl<T: std::fmt::Debug> std::fmt::Display for Hnf<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(&self.matrix, f)
    }
}

/// Whether `m` satisfies the right-action canonical form predicate.
pub fn is_hnf<T: Scalar>(m: &Matrix<T>) -> bool {
    let n = m.dim();
    (0..n).all(|i| {
        let d = m.get(i, i);
        d >= T::one()
            && (i + 1..n).all(|j| m.get(i, j).is_zero())
            && (0..i).all(|j| {
                let v = m.get(i, j);
                v >= T::zero() && v < d
            })
    })
}

fn col_axpy<T: Scalar>(a: &mut [T], n: usize, rows: std::ops::Range<usize>, dst: usize, q: T, src: usize) -> Result<()> {
    for r in rows {
        a[r * n + dst] = a[r * n + dst].sub_mul_c(q, a[r * n + src])?;
    }
    Ok(())
}

/// Canonical representative of the orbit `{ m * U : U in GL_n(Z) }`.
pub fn hnf_right<T: Scalar>(m: &Matrix<T>) -> Result<Hnf<T>> {
    let n = m.dim();
    let mut out = m.clone();
    let a = out.data_mut();

    for i in 0..n {
        // Euclid on row i across columns i..n; columns >= i vanish above row i.
        loop {
            let mut pivot = None;
            for j in i..n {
                let v = a[i * n + j];
                if !v.is_zero() && pivot.is_none_or(|(_, p): (usize, T)| v.abs() < p.abs()) {
                    pivot = Some((j, v));
                }
            }
            let Some((pj, pv)) = pivot else {
                return Err(Error::Singular);
            };
            if pj != i {
                for r in i..n {
                    a.swap(r * n + i, r * n + pj);
                }
            }
            let mut done = true;
            for j in i + 1..n {
                let v = a[i * n + j];
                if v.is_zero() {
                    continue;
                }
                let q = v / pv;
                col_axpy(a, n, i..n, j, q, i)?;
                if !a[i * n + j].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[i * n + i] < T::zero() {
            for r in i..n {
                a[r * n + i] = a[r * n + i].neg_c()?;
            }
        }
    }

    for i in 1..n {
        let d = a[i * n + i];
        for j in 0..i {
            let q = a[i * n + j].div_floor(&d);
            if !q.is_zero() {
                col_axpy(a, n, i..n, j, q, i)?;
            }
        }
    }
    Ok(Hnf::from_matrix_unchecked(out))
}

fn row_axpy<T: Scalar>(a: &mut [T], n: usize, cols: std::ops::Range<usize>, dst: usize, q: T, src: usize) -> Result<()> {
    for c in cols {
        a[dst * n + c] = a[dst * n + c].sub_mul_c(q, a[src * n + c])?;
    }
    Ok(())
}

/// Canonical representative of the orbit `{ U * m : U in GL_n(Z) }`.
///
/// Upper triangular with positive diagonal; entries above the diagonal are
/// reduced into `[0, diag)` of their column. Always equal to
/// `hnf_right(m^T)^T`, but computed with row operations directly.
pub fn hnf_left<T: Scalar>(m: &Matrix<T>) -> Result<Matrix<T>> {
    let n = m.dim();
    let mut out = m.clone();
    let a = out.data_mut();

    for c in 0..n {
        loop {
            let mut pivot = None;
            for r in c..n {
                let v = a[r * n + c];
                if !v.is_zero() && pivot.is_none_or(|(_, p): (usize, T)| v.abs() < p.abs()) {
                    pivot = Some((r, v));
                }
            }
            let Some((pr, pv)) = pivot else {
                return Err(Error::Singular);
            };
            if pr != c {
                for k in c..n {
                    a.swap(c * n + k, pr * n + k);
                }
            }
            let mut done = true;
            for r in c + 1..n {
                let v = a[r * n + c];
                if v.is_zero() {
                    continue;
                }
                row_axpy(a, n, c..n, r, v / pv, c)?;
                if !a[r * n + c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[c * n + c] < T::zero() {
            for k in c..n {
                a[c * n + k] = a[c * n + k].neg_c()?;
            }
        }
    }

    for c in 1..n {
        let d = a[c * n + c];
        for r in 0..c {
            let q = a[r * n + c].div_floor(&d);
            if !q.is_zero() {
                row_axpy(a, n, c..n, r, q, c)?;
            }
        }
    }
    Ok(out)
}

/// Whether `r` maps the sublattice spanned by `h` onto itself, i.e. whether
/// `h^-1 * r * h` is an integer matrix.
///
/// Solves `h * X = r * h` by forward substitution against the lower
/// triangular `h`, failing fast on the first non-divisible entry.
pub fn is_integral_conjugate<T: Scalar>(h: &Hnf<T>, r: &Matrix<T>) -> Result<bool> {
    let h = h.matrix();
    let n = h.dim();
    if r.dim() != n {
        return Err(Error::DimensionMismatch(n, r.dim()));
    }
    let rh = r.mul(h)?;
    let mut x = vec![T::zero(); n * n];
    for i in 0..n {
        let d = h.get(i, i);
        for j in 0..n {
            let mut s = rh.get(i, j);
            for l in 0..i {
                let hl = h.get(i, l);
                if !hl.is_zero() {
                    s = s.sub_mul_c(hl, x[l * n + j])?;
                }
            }
            let (q, rem) = s.div_rem(&d);
            if !rem.is_zero() {
                return Ok(false);
            }
            x[i * n + j] = q;
        }
    }
    Ok(true)
}
