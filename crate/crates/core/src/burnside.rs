//! Class counting by Burnside's lemma: the number of orbits equals the
//! average number of sublattices fixed by a group element. Needs no storage
//! proportional to the number of classes.

use rayon::prelude::*;

use crate::autgroup::MatrixGroup;
use crate::enumerate::enumerate_hnf;
use crate::error::{Error, Result};
use crate::intmat::{is_integral_conjugate, Hnf, Matrix};
use crate::scalar::Scalar;

fn bases<T: Scalar>(n: usize, k: u64) -> Result<Vec<Hnf<T>>> {
    Ok(enumerate_hnf(n, k)?.collect())
}

fn count_fixed<T: Scalar>(bases: &[Hnf<T>], r: &Matrix<T>) -> Result<u64> {
    bases.par_iter().map(|h| Ok(u64::from(is_integral_conjugate(h, r)?))).try_reduce(|| 0, |a, b| Ok(a + b))
}

/// Number of index-`k` sublattices of `Z^n` mapped onto themselves by `r`.
pub fn fixed_count<T: Scalar>(r: &Matrix<T>, n: usize, k: u64) -> Result<u64> {
    if r.dim() != n {
        return Err(Error::DimensionMismatch(n, r.dim()));
    }
    count_fixed(&bases(n, k)?, r)
}

/// `fixed_count` for every element of `g`, in element order.
pub fn fixed_counts<T: Scalar>(g: &MatrixGroup<T>, n: usize, k: u64) -> Result<Vec<u64>> {
    if g.dim() != n {
        return Err(Error::DimensionMismatch(n, g.dim()));
    }
    let bases = bases(n, k)?;
    g.elements().iter().map(|r| count_fixed(&bases, r)).collect()
}

fn exact_average(sum: u128, order: usize) -> Result<u64> {
    let ord = order as u128;
    if ord == 0 || !sum.is_multiple_of(ord) {
        return Err(Error::NonIntegerAverage { sum, order });
    }
    u64::try_from(sum / ord).map_err(|_| Error::Overflow)
}

/// Burnside average of a full list of per-element fixed counts.
pub fn burnside_from_fixed_counts(fixed: &[u64]) -> Result<u64> {
    exact_average(fixed.iter().map(|&c| u128::from(c)).sum(), fixed.len())
}

/// Orbit count `(1/|g|) sum_{r in g} fixed_count(r)`, summed over every
/// element. A non-integer average is reported as an error.
pub fn burnside_count<T: Scalar>(g: &MatrixGroup<T>, n: usize, k: u64) -> Result<u64> {
    if g.dim() != n {
        return Err(Error::DimensionMismatch(n, g.dim()));
    }
    let bases = bases(n, k)?;
    // sum_r |Fix(r)| = sum_H |Stab(H)|; iterate bases on the outside
    let sum: u128 = bases
        .par_iter()
        .map(|h| {
            g.elements().iter().try_fold(0u128, |acc, r| Ok(acc + u128::from(is_integral_conjugate(h, r)?)))
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    exact_average(sum, g.order())
}

/// Same count with one fixed-point evaluation per conjugacy class, weighted
/// by class size.
pub fn burnside_count_by_classes<T: Scalar>(g: &MatrixGroup<T>, n: usize, k: u64) -> Result<u64> {
    if g.dim() != n {
        return Err(Error::DimensionMismatch(n, g.dim()));
    }
    let classes = g.conjugacy_classes()?;
    let bases = bases(n, k)?;
    let mut sum = 0u128;
    for c in &classes {
        sum += u128::from(count_fixed(&bases, &c.representative)?) * c.size as u128;
    }
    exact_average(sum, g.order())
}

/// Burnside count for simplices under a right-acting group: `T` is fixed by
/// `R` when `T R T^-1` is integral, which for `T = H^T` is the sublattice
/// condition for `R^T`.
pub fn burnside_count_simplex<T: Scalar>(right_group: &MatrixGroup<T>, n: usize, k: u64) -> Result<u64> {
    burnside_count_by_classes(&right_group.transpose_group(), n, k)
}
