//! Lattice simplices up to unimodular equivalence.
//!
//! An ordered simplex with one vertex at the origin is stored as the matrix
//! `T` whose columns are the other `n` vertices. Unimodular maps act on the
//! left (`T -> L T`), vertex reorderings act on the right by the transposed
//! automorphism group (`T -> T R`). Classification here runs entirely on that
//! right action with left Hermite forms, independent of the sublattice code
//! path, so the two can be compared.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::autgroup::{coweight_generators, coweight_group, generate_group, MatrixGroup};
use crate::enumerate::{enumerate_hnf, orbit_partition, partition_sublattices, OrbitKey, Partition};
use crate::error::{Error, Result};
use crate::intmat::{hnf_left, Hnf, Matrix};
use crate::scalar::Scalar;

/// An ordered, non-degenerate lattice simplex with vertex 0 at the origin.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedSimplex<T> {
    vertices: Matrix<T>,
}

impl<T: Scalar> OrderedSimplex<T> {
    pub fn new(vertices: Matrix<T>) -> Result<Self> {
        if vertices.det()?.is_zero() {
            return Err(Error::Singular);
        }
        Ok(OrderedSimplex { vertices })
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.vertices
    }

    /// Normalized volume `|det T|`.
    pub fn normalized_volume(&self) -> Result<T> {
        Ok(self.vertices.det()?.abs())
    }
}

/// The `n + 1` vertices of a simplex as explicit points; slot 0 is the origin.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexTuple<T> {
    points: Vec<Vec<T>>,
}

impl<T: Scalar> VertexTuple<T> {
    /// Builds a tuple from arbitrary points, translating so that the first
    /// one sits at the origin.
    pub fn from_points(points: Vec<Vec<T>>) -> Result<Self> {
        let n = points.len().checked_sub(1).filter(|&n| n >= 1).ok_or(Error::UnsupportedDimension(0))?;
        if let Some(p) = points.iter().find(|p| p.len() != n) {
            return Err(Error::BadShape { n, expected: n, got: p.len() });
        }
        let base = points[0].clone();
        let points = points
            .into_iter()
            .map(|p| p.iter().zip(&base).map(|(&a, &b)| a.sub_c(b)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let tuple = VertexTuple { points };
        if tuple.to_matrix()?.det()?.is_zero() {
            return Err(Error::Singular);
        }
        Ok(tuple)
    }

    pub fn from_matrix(t: &Matrix<T>) -> Self {
        let n = t.dim();
        let mut points = vec![vec![T::zero(); n]];
        points.extend((0..n).map(|j| (0..n).map(|i| t.get(i, j)).collect()));
        VertexTuple { points }
    }

    pub fn dim(&self) -> usize {
        self.points.len() - 1
    }

    pub fn points(&self) -> &[Vec<T>] {
        &self.points
    }

    pub fn to_matrix(&self) -> Result<Matrix<T>> {
        let n = self.dim();
        let mut m = Matrix::zero(n);
        for (j, p) in self.points[1..].iter().enumerate() {
            for (i, &v) in p.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    /// Translates vertex `i` (1-based) to the origin; the old origin lands in
    /// slot `i` as `-t_i`.
    pub fn reorder_vertex_to_origin(&self, i: usize) -> Result<Self> {
        let n = self.dim();
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let shift = self.points[i].clone();
        let mut points = self
            .points
            .iter()
            .map(|p| p.iter().zip(&shift).map(|(&a, &b)| a.sub_c(b)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        points.swap(0, i);
        Ok(VertexTuple { points })
    }

    /// Reorders the non-origin vertices: new vertex `j + 1` is old vertex
    /// `perm[j] + 1`.
    pub fn permute_vertices(&self, perm: &[usize]) -> Result<Self> {
        let n = self.dim();
        if perm.len() != n {
            return Err(Error::DimensionMismatch(n, perm.len()));
        }
        let mut seen = vec![false; n];
        let mut points = vec![self.points[0].clone()];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::IndexOutOfRange { index: p + 1, n });
            }
            seen[p] = true;
            points.push(self.points[p + 1].clone());
        }
        Ok(VertexTuple { points })
    }
}

/// Canonical label of a simplex class: a left Hermite form (upper
/// triangular), ordered by its column-major entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplexKey<T> {
    canonical: Matrix<T>,
    order: Vec<T>,
}

impl<T: Scalar> SimplexKey<T> {
    fn new(canonical: Matrix<T>) -> Self {
        let order = canonical.column_major();
        SimplexKey { canonical, order }
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.canonical
    }

    /// The sublattice-side key this label corresponds to under transposition.
    pub fn transposed(&self) -> Option<OrbitKey<T>> {
        Hnf::from_matrix(self.canonical.transpose()).map(|canonical| OrbitKey { canonical })
    }
}

impl<T: Scalar> PartialOrd for SimplexKey<T> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Scalar> Ord for SimplexKey<T> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order.cmp(&other.order)
    }
}

impl<T: Scalar> fmt::Debug for SimplexKey<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplexKey{}", self.canonical)
    }
}

/// `min_{R in right_group} hnf_left(t * R)`.
pub fn simplex_canonical<T: Scalar>(t: &Matrix<T>, right_group: &MatrixGroup<T>) -> Result<SimplexKey<T>> {
    if right_group.dim() != t.dim() {
        return Err(Error::DimensionMismatch(t.dim(), right_group.dim()));
    }
    let mut best: Option<SimplexKey<T>> = None;
    for r in right_group.elements() {
        let cand = SimplexKey::new(hnf_left(&t.mul(r)?)?);
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    best.ok_or(Error::NoGenerators)
}

/// Right-acting groups for simplices of dimension `n`.
#[derive(Clone, Debug)]
pub struct SimplexGroups<T> {
    /// Vertex reorderings: generated by permutations and the `P_{n,i}^T`.
    pub unoriented: MatrixGroup<T>,
    /// Even reorderings: the transposed proper automorphism subgroup.
    pub oriented: MatrixGroup<T>,
}

pub fn simplex_groups<T: Scalar>(n: usize) -> Result<SimplexGroups<T>> {
    let transposed: Vec<Matrix<T>> = coweight_generators(n)?.iter().map(Matrix::transpose).collect();
    let unoriented = generate_group(&transposed)?;
    let oriented = coweight_group(n)?.proper_subgroup()?.transpose_group();
    Ok(SimplexGroups { unoriented, oriented })
}

/// Simplex classes under a right-acting group. Transposed column HNFs are a
/// transversal of the left `GL_n(Z)` action, so each class is recorded on
/// the enumeration ranks of those transposes.
pub fn partition_simplices<T: Scalar>(n: usize, k: u64, g: &MatrixGroup<T>) -> Result<Partition<SimplexKey<T>>> {
    if g.dim() != n {
        return Err(Error::DimensionMismatch(n, g.dim()));
    }
    orbit_partition(n, k, |h: &Hnf<T>, index| {
        let t = h.matrix().transpose();
        let mut images = g.elements().par_iter().map(|r| hnf_left(&t.mul(r)?)).collect::<Result<Vec<_>>>()?;
        images.sort_unstable();
        images.dedup();
        let ranks = images.iter().map(|m| index.rank_transposed(m).expect("left form lies in the transversal")).collect();
        let key = images.into_iter().map(SimplexKey::new).min().ok_or(Error::NoGenerators)?;
        Ok((key, ranks))
    })
}

/// Simplex class count under an arbitrary right-acting group.
pub fn tau_with_group<T: Scalar>(n: usize, k: u64, g: &MatrixGroup<T>) -> Result<u64> {
    Ok(partition_simplices(n, k, g)?.keys.len() as u64)
}

/// Number of classes of `n`-simplices of normalized volume `k`, unordered
/// and unoriented or (with `oriented`) up to even reorderings.
pub fn tau<T: Scalar>(n: usize, k: u64, oriented: bool) -> Result<u64> {
    let groups = simplex_groups::<T>(n)?;
    tau_with_group(n, k, if oriented { &groups.oriented } else { &groups.unoriented })
}

/// Sorted simplex class representatives.
pub fn list_simplex_classes<T: Scalar>(n: usize, k: u64, oriented: bool) -> Result<Vec<SimplexKey<T>>> {
    let groups = simplex_groups::<T>(n)?;
    list_simplex_classes_with_group(n, k, if oriented { &groups.oriented } else { &groups.unoriented })
}

pub fn list_simplex_classes_with_group<T: Scalar>(n: usize, k: u64, g: &MatrixGroup<T>) -> Result<Vec<SimplexKey<T>>> {
    let mut keys = partition_simplices(n, k, g)?.keys;
    keys.sort();
    Ok(keys)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub n: usize,
    pub k: u64,
    pub beta: u64,
    pub beta_plus: u64,
    pub tau: u64,
    pub tau_plus: u64,
    /// Every transposed HNF basis is already a left Hermite form.
    pub transversal_ok: bool,
    /// The class partitions induced on the bases agree for both relations.
    pub partitions_agree: bool,
    /// Offending matrices, rendered as nested row arrays.
    pub counterexamples: Vec<(String, String)>,
    pub pass: bool,
}

/// Checks that `class_a[r] <-> class_b[r]` is a well-defined bijection of
/// class labels; returns the first rank where it breaks.
fn matching_breaks(class_a: &[u32], class_b: &[u32]) -> Option<usize> {
    let mut a_to_b = HashMap::new();
    let mut b_to_a = HashMap::new();
    class_a.iter().zip(class_b).position(|(&a, &b)| *a_to_b.entry(a).or_insert(b) != b || *b_to_a.entry(b).or_insert(a) != a)
}

/// Checks the transposition bijection between sublattice bases of `A*_n`
/// and ordered simplices on the full index-`k` enumeration.
pub fn verify_bijection<T: Scalar>(n: usize, k: u64) -> Result<BijectionReport> {
    let g = coweight_group::<T>(n)?;
    let g_plus = g.proper_subgroup()?;
    let sg = simplex_groups::<T>(n)?;

    let mut counterexamples = Vec::new();
    let mut transversal_ok = true;
    for h in enumerate_hnf::<T>(n, k)? {
        let t = h.matrix().transpose();
        if hnf_left(&t)? != t {
            transversal_ok = false;
            counterexamples.push((h.to_string(), t.to_string()));
        }
    }

    let mut partitions_agree = true;
    let mut counts = [(0u64, 0u64); 2];
    for (slot, (left, right)) in [(&g, &sg.unoriented), (&g_plus, &sg.oriented)].into_iter().enumerate() {
        let subs = partition_sublattices(n, k, left)?;
        let simps = partition_simplices(n, k, right)?;
        counts[slot] = (subs.keys.len() as u64, simps.keys.len() as u64);
        if let Some(r) = matching_breaks(&subs.class_of, &simps.class_of) {
            partitions_agree = false;
            let bk = &subs.keys[subs.class_of[r] as usize];
            let tk = &simps.keys[simps.class_of[r] as usize];
            counterexamples.push((bk.canonical.to_string(), tk.matrix().to_string()));
        }
    }

    let [(beta, tau), (beta_plus, tau_plus)] = counts;
    let pass = transversal_ok && partitions_agree && beta == tau && beta_plus == tau_plus;
    Ok(BijectionReport { n, k, beta, beta_plus, tau, tau_plus, transversal_ok, partitions_agree, counterexamples, pass })
}
