//! Lattice/dual-lattice comparison. The automorphism group of `A*_n` acts on
//! the dual lattice `A_n` through the contragredient representation
//! `R -> R^-T`; class counts must agree on both sides.

use serde::Serialize;

use crate::autgroup::{coweight_group, MatrixGroup};
use crate::burnside::{burnside_from_fixed_counts, fixed_counts};
use crate::enumerate::{count_classes, Relation};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualReport {
    pub n: usize,
    pub k: u64,
    pub relation: Relation,
    /// Orbit counts under the group and under its contragredient.
    pub count: u64,
    pub dual_count: u64,
    /// Burnside averages of the per-element fixed counts.
    pub burnside: u64,
    pub dual_burnside: u64,
    /// Sorted per-element fixed-point counts coincide.
    pub fixed_multisets_agree: bool,
    pub pass: bool,
}

/// The group realising `relation` on sublattices of `A*_n`.
pub fn relation_group<T: Scalar>(n: usize, relation: Relation) -> Result<MatrixGroup<T>> {
    match relation {
        Relation::Isometry => coweight_group(n),
        Relation::ProperIsometry => coweight_group(n)?.proper_subgroup(),
        Relation::UnimodularOnly => {
            if n < 2 {
                return Err(Error::UnsupportedDimension(n));
            }
            Ok(MatrixGroup::trivial(n))
        }
    }
}

pub fn verify_dual_counts<T: Scalar>(n: usize, k: u64, relation: Relation) -> Result<DualReport> {
    let g = relation_group::<T>(n, relation)?;
    let dual = g.contragredient_group()?;

    let count = count_classes(n, k, &g)?;
    let dual_count = count_classes(n, k, &dual)?;
    let mut fixed = fixed_counts(&g, n, k)?;
    let mut dual_fixed = fixed_counts(&dual, n, k)?;
    let burnside = burnside_from_fixed_counts(&fixed)?;
    let dual_burnside = burnside_from_fixed_counts(&dual_fixed)?;
    fixed.sort_unstable();
    dual_fixed.sort_unstable();
    let fixed_multisets_agree = fixed == dual_fixed;

    let pass = count == dual_count && burnside == dual_burnside && count == burnside && fixed_multisets_agree;
    Ok(DualReport { n, k, relation, count, dual_count, burnside, dual_burnside, fixed_multisets_agree, pass })
}
