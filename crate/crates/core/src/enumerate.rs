//! Enumeration of index-`k` sublattices as HNF bases and their reduction to
//! classes under a matrix group acting from the left.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::autgroup::MatrixGroup;
use crate::error::{Error, Result};
use crate::intmat::{hnf_right, Hnf, Matrix};
use crate::scalar::Scalar;

/// Canonical label of a class: the lexicographically smallest (row-major)
/// HNF over the group orbit.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct OrbitKey<T> {
    pub canonical: Hnf<T>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    /// Full automorphism group (`~`).
    Isometry,
    /// Orientation-preserving automorphisms (`~+`).
    ProperIsometry,
    /// Trivial group: every sublattice (or ordered simplex class) on its own.
    UnimodularOnly,
}

impl Relation {
    pub fn name(self) -> &'static str {
        match self {
            Relation::Isometry => "isometry",
            Relation::ProperIsometry => "proper-isometry",
            Relation::UnimodularOnly => "unimodular-only",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ObjectKind {
    Sublattice,
    Simplex,
}

impl fmt::Display for ObjectKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ObjectKind::Sublattice => "sublattice",
            ObjectKind::Simplex => "simplex",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Orbit,
    Burnside,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Orbit => "orbit",
            Method::Burnside => "burnside",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CountRow {
    pub n: usize,
    pub k: u64,
    pub relation: Relation,
    pub object: ObjectKind,
    pub method: Method,
    pub count: u64,
}

/// Class counts keyed by `(n, k, relation, object, method)`; rows stay sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub rows: Vec<CountRow>,
}

impl CountTable {
    pub fn insert(&mut self, row: CountRow) {
        let key = |r: &CountRow| (r.n, r.k, r.relation, r.object, r.method);
        match self.rows.binary_search_by(|r| key(r).cmp(&key(&row))) {
            Ok(i) => self.rows[i] = row,
            Err(i) => self.rows.insert(i, row),
        }
    }

    pub fn get(&self, n: usize, k: u64, relation: Relation, object: ObjectKind, method: Method) -> Option<u64> {
        self.rows
            .iter()
            .find(|r| r.n == n && r.k == k && r.relation == relation && r.object == object && r.method == method)
            .map(|r| r.count)
    }
}

/// Number of index-`k` sublattices of `Z^n`, from the divisor recurrence
/// `f_1(k) = 1`, `f_n(k) = sum_{d | k} f_{n-1}(d) (k/d)^(n-1)`.
pub fn sublattice_count(n: usize, k: u64) -> u128 {
    if n <= 1 {
        return 1;
    }
    (1..=k)
        .filter(|d| k.is_multiple_of(*d))
        .map(|d| sublattice_count(n - 1, d) * u128::from(k / d).pow(n as u32 - 1))
        .sum()
}

/// Ordered factorizations of `k` into `n` positive factors, lexicographic.
pub fn diagonal_tuples(n: usize, k: u64) -> Vec<Vec<u64>> {
    fn rec(n: usize, k: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if n == 1 {
            prefix.push(k);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for d in (1..=k).filter(|d| k.is_multiple_of(*d)) {
            prefix.push(d);
            rec(n - 1, k / d, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 1 && k >= 1 {
        rec(n, k, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// Streams every index-`k` HNF basis of dimension `n` exactly once: diagonal
/// tuples in lexicographic order, off-diagonal entries as an odometer over
/// row-major positions.
pub struct HnfEnumerator<T> {
    n: usize,
    diagonals: std::vec::IntoIter<Vec<u64>>,
    current: Option<(Vec<T>, Matrix<T>)>,
}

impl<T: Scalar> HnfEnumerator<T> {
    fn start(&mut self) -> Option<()> {
        let diag = self.diagonals.next()?;
        let diag: Vec<T> = diag.into_iter().map(|d| T::from_u64(d).expect("diagonal fits scalar")).collect();
        let m = Matrix::diagonal(&diag);
        self.current = Some((diag, m));
        Some(())
    }

    fn advance(&mut self) {
        let n = self.n;
        let Some((diag, m)) = self.current.as_mut() else { return };
        for i in (1..n).rev() {
            for j in (0..i).rev() {
                let v = m.get(i, j) + T::one();
                if v < diag[i] {
                    m.set(i, j, v);
                    return;
                }
                m.set(i, j, T::zero());
            }
        }
        self.current = None;
    }
}

impl<T: Scalar> Iterator for HnfEnumerator<T> {
    type Item = Hnf<T>;

    fn next(&mut self) -> Option<Hnf<T>> {
        if self.current.is_none() {
            self.start()?;
        }
        let out = Hnf::from_matrix_unchecked(self.current.as_ref()?.1.clone());
        self.advance();
        Some(out)
    }
}

pub fn enumerate_hnf<T: Scalar>(n: usize, k: u64) -> Result<HnfEnumerator<T>> {
    if n == 0 {
        return Err(Error::UnsupportedDimension(n));
    }
    if k == 0 {
        return Err(Error::ZeroIndex);
    }
    T::from_u64_c(k)?;
    Ok(HnfEnumerator { n, diagonals: diagonal_tuples(n, k).into_iter(), current: None })
}

fn check_group<T: Scalar>(n: usize, g: &MatrixGroup<T>) -> Result<()> {
    if g.dim() != n {
        return Err(Error::DimensionMismatch(n, g.dim()));
    }
    Ok(())
}

/// `min_{R in g} hnf_right(R * b)`; invariant under `b -> R' b L`.
pub fn canonical_form<T: Scalar>(b: &Matrix<T>, g: &MatrixGroup<T>) -> Result<OrbitKey<T>> {
    check_group(b.dim(), g)?;
    let h = hnf_right(b)?;
    let mut best: Option<Hnf<T>> = None;
    for r in g.elements() {
        let cand = hnf_right(&r.mul(h.matrix())?)?;
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    Ok(OrbitKey { canonical: best.expect("group contains the identity") })
}

/// The distinct bases `hnf_right(R * h)`, `R in g`, sorted.
fn sublattice_orbit<T: Scalar>(h: &Hnf<T>, g: &MatrixGroup<T>) -> Result<Vec<Hnf<T>>> {
    let mut images = g.elements().par_iter().map(|r| hnf_right(&r.mul(h.matrix())?)).collect::<Result<Vec<_>>>()?;
    images.sort_unstable();
    images.dedup();
    Ok(images)
}

/// Orbit size of the sublattice spanned by `h`.
pub fn orbit_size<T: Scalar>(h: &Hnf<T>, g: &MatrixGroup<T>) -> Result<usize> {
    check_group(h.dim(), g)?;
    Ok(sublattice_orbit(h, g)?.len())
}

/// Position of each index-`k` HNF basis in enumeration order.
#[derive(Clone, Debug)]
pub struct HnfIndex {
    n: usize,
    offsets: HashMap<Vec<u64>, usize>,
    len: usize,
}

impl HnfIndex {
    pub fn new(n: usize, k: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::UnsupportedDimension(n));
        }
        if k == 0 {
            return Err(Error::ZeroIndex);
        }
        let mut offsets = HashMap::new();
        let mut len = 0usize;
        for d in diagonal_tuples(n, k) {
            let mut block = 1usize;
            for (i, &di) in d.iter().enumerate() {
                let di = usize::try_from(di).map_err(|_| Error::Overflow)?;
                block = block.checked_mul(di.checked_pow(i as u32).ok_or(Error::Overflow)?).ok_or(Error::Overflow)?;
            }
            offsets.insert(d, len);
            len = len.checked_add(block).ok_or(Error::Overflow)?;
        }
        Ok(HnfIndex { n, offsets, len })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Rank of a lower triangular HNF; `None` if it is not one of the
    /// enumerated bases. Entries above the diagonal are not inspected.
    pub fn rank<T: Scalar>(&self, h: &Matrix<T>) -> Option<usize> {
        self.rank_by(h, |i, j| h.get(i, j))
    }

    /// Rank of the transpose of an upper triangular left Hermite form.
    pub fn rank_transposed<T: Scalar>(&self, t: &Matrix<T>) -> Option<usize> {
        self.rank_by(t, |i, j| t.get(j, i))
    }

    fn rank_by<T: Scalar>(&self, m: &Matrix<T>, at: impl Fn(usize, usize) -> T) -> Option<usize> {
        let n = self.n;
        if m.dim() != n {
            return None;
        }
        let diag: Vec<u64> = (0..n).map(|i| at(i, i).to_u64()).collect::<Option<_>>()?;
        let mut rank = 0usize;
        for (i, &d) in diag.iter().enumerate().skip(1) {
            for j in 0..i {
                let v = at(i, j).to_u64().filter(|&v| v < d)?;
                rank = rank * d as usize + v as usize;
            }
        }
        Some(self.offsets.get(&diag)? + rank)
    }
}

/// Classes of the index-`k` bases, found by walking whole orbits.
#[derive(Clone, Debug)]
pub struct Partition<K> {
    /// One key per class, in order of discovery.
    pub keys: Vec<K>,
    /// Class of every basis, indexed by enumeration rank.
    pub class_of: Vec<u32>,
    pub orbit_sizes: Vec<usize>,
}

const UNSEEN: u32 = u32::MAX;

/// Runs through the enumeration; each basis not yet covered opens a new
/// class, and `orbit` returns its key together with the ranks of the whole
/// orbit.
pub(crate) fn orbit_partition<T, K, F>(n: usize, k: u64, orbit: F) -> Result<Partition<K>>
where
    T: Scalar,
    F: Fn(&Hnf<T>, &HnfIndex) -> Result<(K, Vec<usize>)>,
{
    let index = HnfIndex::new(n, k)?;
    let mut class_of = vec![UNSEEN; index.len()];
    let mut keys = Vec::new();
    let mut orbit_sizes = Vec::new();
    for (rank, h) in enumerate_hnf::<T>(n, k)?.enumerate() {
        if class_of[rank] != UNSEEN {
            continue;
        }
        let id = u32::try_from(keys.len()).map_err(|_| Error::Overflow)?;
        let (key, members) = orbit(&h, &index)?;
        for &r in &members {
            assert_eq!(class_of[r], UNSEEN, "orbits overlap at rank {r}");
            class_of[r] = id;
        }
        assert_eq!(class_of[rank], id, "orbit of {h} misses its own basis");
        keys.push(key);
        orbit_sizes.push(members.len());
    }
    Ok(Partition { keys, class_of, orbit_sizes })
}

/// Sublattice classes under `g`, keyed by canonical form.
pub fn partition_sublattices<T: Scalar>(n: usize, k: u64, g: &MatrixGroup<T>) -> Result<Partition<OrbitKey<T>>> {
    check_group(n, g)?;
    orbit_partition(n, k, |h: &Hnf<T>, index| {
        let images = sublattice_orbit(h, g)?;
        let ranks = images.iter().map(|m| index.rank(m.matrix()).expect("image is an enumerated basis")).collect();
        Ok((OrbitKey { canonical: images[0].clone() }, ranks))
    })
}

pub fn count_classes<T: Scalar>(n: usize, k: u64, g: &MatrixGroup<T>) -> Result<u64> {
    Ok(partition_sublattices(n, k, g)?.keys.len() as u64)
}

/// Sorted canonical representatives, one per class.
pub fn list_classes<T: Scalar>(n: usize, k: u64, g: &MatrixGroup<T>) -> Result<Vec<OrbitKey<T>>> {
    let mut keys = partition_sublattices(n, k, g)?.keys;
    keys.sort();
    Ok(keys)
}
