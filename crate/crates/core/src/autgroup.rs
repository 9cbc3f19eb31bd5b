//! Matrix representation of the automorphism group of the coweight lattice
//! `A*_n` in the basis of `n` of its `n + 1` minimal vectors `e_1..e_n`
//! (with `e_0 = -(e_1 + ... + e_n)`).
//!
//! The `n x n` permutation matrices together with the matrices `P_{n,i}`
//! (the identity with column `i` replaced by all `-1`s, i.e. the swap of
//! `e_i` with `e_0`) generate the symmetric group on the `n + 1` minimal
//! vectors, of order `(n + 1)!`. The central inversion `-I` is not in that
//! group; adding it as a generator gives the full automorphism group of
//! order `2 (n + 1)!`. `-I` fixes every sublattice, so the isometry classes
//! do not change, but the orientation-preserving subgroup does in odd
//! dimension.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::intmat::Matrix;
use crate::scalar::Scalar;

/// A finite group of unimodular matrices, elements sorted lexicographically.
#[derive(Clone, Debug)]
pub struct MatrixGroup<T> {
    n: usize,
    elements: Vec<Matrix<T>>,
    lookup: HashMap<Matrix<T>, usize>,
}

/// One conjugacy class: a representative and the class size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass<T> {
    pub representative: Matrix<T>,
    pub size: usize,
}

impl<T: Scalar> PartialEq for MatrixGroup<T> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.elements == other.elements
    }
}

impl<T: Scalar> Eq for MatrixGroup<T> {}

fn factorial(n: usize) -> usize {
    (1..=n).fold(1usize, |a, b| a.saturating_mul(b))
}

/// Expected order `2 (n + 1)!` of the automorphism group of `A*_n`, `n >= 2`.
pub fn expected_order(n: usize) -> usize {
    factorial(n + 1).saturating_mul(2)
}

/// `P_{n,i}` for `1 <= i <= n`: the identity with column `i` set to `-1`.
pub fn p_generator<T: Scalar>(n: usize, i: usize) -> Result<Matrix<T>> {
    if n == 0 {
        return Err(Error::UnsupportedDimension(n));
    }
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let mut m = Matrix::identity(n);
    for row in 0..n {
        m.set(row, i - 1, -T::one());
    }
    Ok(m)
}

/// Generators of the `n x n` permutation matrices: the swap of the first two
/// coordinates and the cyclic shift (just the swap when `n = 2`).
pub fn permutation_generators<T: Scalar>(n: usize) -> Result<Vec<Matrix<T>>> {
    if n < 2 {
        return Err(Error::UnsupportedDimension(n));
    }
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    let mut gens = vec![Matrix::permutation(&swap)?];
    if n > 2 {
        let cycle: Vec<usize> = (0..n).map(|j| (j + 1) % n).collect();
        gens.push(Matrix::permutation(&cycle)?);
    }
    Ok(gens)
}

/// Permutation generators followed by `P_{n,1}..P_{n,n}`; these generate
/// the permutations of the `n + 1` minimal vectors.
pub fn vertex_permutation_generators<T: Scalar>(n: usize) -> Result<Vec<Matrix<T>>> {
    let mut gens = permutation_generators(n)?;
    for i in 1..=n {
        gens.push(p_generator(n, i)?);
    }
    Ok(gens)
}

/// Full generator list for the automorphism group: the vertex permutation
/// generators followed by `-I`.
pub fn coweight_generators<T: Scalar>(n: usize) -> Result<Vec<Matrix<T>>> {
    let mut gens = vertex_permutation_generators(n)?;
    gens.push(Matrix::identity(n).neg()?);
    Ok(gens)
}

/// The automorphism group of `A*_n` (and of `A_n`) for `n >= 2`.
pub fn coweight_group<T: Scalar>(n: usize) -> Result<MatrixGroup<T>> {
    generate_group(&coweight_generators(n)?)
}

/// Closure of `generators` under multiplication, with the default safety cap
/// of `10 * 2 (n + 1)!` elements.
pub fn generate_group<T: Scalar>(generators: &[Matrix<T>]) -> Result<MatrixGroup<T>> {
    let n = generators.first().ok_or(Error::NoGenerators)?.dim();
    generate_group_with_cap(generators, expected_order(n).saturating_mul(10))
}

pub fn generate_group_with_cap<T: Scalar>(generators: &[Matrix<T>], cap: usize) -> Result<MatrixGroup<T>> {
    let n = generators.first().ok_or(Error::NoGenerators)?.dim();
    for g in generators {
        if g.dim() != n {
            return Err(Error::DimensionMismatch(n, g.dim()));
        }
        let d = g.det()?;
        if !d.abs().is_one() {
            return Err(Error::NotUnimodular(d.to_string()));
        }
    }
    let id = Matrix::identity(n);
    let mut seen: HashSet<Matrix<T>> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = x.mul(g)?;
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::ClosureCap(cap));
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(MatrixGroup::from_elements(n, seen.into_iter().collect()))
}

impl<T: Scalar> MatrixGroup<T> {
    fn from_elements(n: usize, mut elements: Vec<Matrix<T>>) -> Self {
        elements.sort();
        elements.dedup();
        let lookup = elements.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        MatrixGroup { n, elements, lookup }
    }

    pub fn trivial(n: usize) -> Self {
        Self::from_elements(n, vec![Matrix::identity(n)])
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Matrix<T>] {
        &self.elements
    }

    pub fn contains(&self, m: &Matrix<T>) -> bool {
        self.lookup.contains_key(m)
    }

    /// Whether the element set is closed under multiplication.
    pub fn is_closed(&self) -> Result<bool> {
        for a in &self.elements {
            for b in &self.elements {
                if !self.contains(&a.mul(b)?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Sorted determinants of all elements.
    pub fn determinants(&self) -> Result<Vec<T>> {
        let mut d = self.elements.iter().map(Matrix::det).collect::<Result<Vec<_>>>()?;
        d.sort();
        Ok(d)
    }

    /// The orientation-preserving subgroup (determinant `+1`).
    pub fn proper_subgroup(&self) -> Result<Self> {
        let mut kept = Vec::with_capacity(self.order() / 2 + 1);
        for m in &self.elements {
            if m.det()?.is_one() {
                kept.push(m.clone());
            }
        }
        Ok(Self::from_elements(self.n, kept))
    }

    /// Elementwise transpose.
    pub fn transpose_group(&self) -> Self {
        Self::from_elements(self.n, self.elements.iter().map(Matrix::transpose).collect())
    }

    /// Elementwise inverse transpose: the same abstract group acting on the
    /// dual basis.
    pub fn contragredient_group(&self) -> Result<Self> {
        let elements = self
            .elements
            .iter()
            .map(|m| Ok(m.unimodular_inverse()?.transpose()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_elements(self.n, elements))
    }

    /// Conjugacy classes in element order of their first member.
    pub fn conjugacy_classes(&self) -> Result<Vec<ConjugacyClass<T>>> {
        let inverses = self.elements.iter().map(Matrix::unimodular_inverse).collect::<Result<Vec<_>>>()?;
        let mut assigned = vec![false; self.order()];
        let mut classes = Vec::new();
        for (idx, x) in self.elements.iter().enumerate() {
            if assigned[idx] {
                continue;
            }
            let mut size = 0;
            for (s, s_inv) in self.elements.iter().zip(&inverses) {
                let y = s.mul(x)?.mul(s_inv)?;
                let j = *self.lookup.get(&y).ok_or(Error::ClosureCap(self.order()))?;
                if !assigned[j] {
                    assigned[j] = true;
                    size += 1;
                }
            }
            classes.push(ConjugacyClass { representative: x.clone(), size });
        }
        Ok(classes)
    }
}
