//! The integer scalar abstraction shared by every matrix routine.
//!
//! All arithmetic in this crate is exact. Implementations are generic over a
//! fixed-width signed integer and go through the checked operations below, so
//! overflow of the chosen width surfaces as [`Error::Overflow`] instead of
//! wrapping.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedNeg, CheckedSub, FromPrimitive, PrimInt, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// A fixed-width signed integer usable as a matrix entry.
///
/// Implemented for `i32`, `i64` and `i128`.
pub trait Scalar:
    PrimInt
    + Signed
    + Integer
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + CheckedNeg
    + FromPrimitive
    + ToPrimitive
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    #[inline]
    fn add_c(self, rhs: Self) -> Result<Self> {
        self.checked_add(&rhs).ok_or(Error::Overflow)
    }

    #[inline]
    fn sub_c(self, rhs: Self) -> Result<Self> {
        self.checked_sub(&rhs).ok_or(Error::Overflow)
    }

    #[inline]
    fn mul_c(self, rhs: Self) -> Result<Self> {
        self.checked_mul(&rhs).ok_or(Error::Overflow)
    }

    #[inline]
    fn neg_c(self) -> Result<Self> {
        self.checked_neg().ok_or(Error::Overflow)
    }

    /// `self - q * rhs`, checked.
    #[inline]
    fn sub_mul_c(self, q: Self, rhs: Self) -> Result<Self> {
        self.sub_c(q.mul_c(rhs)?)
    }

    fn from_u64_c(v: u64) -> Result<Self> {
        Self::from_u64(v).ok_or(Error::Overflow)
    }

    fn to_u64_c(self) -> Result<u64> {
        self.to_u64().ok_or(Error::Overflow)
    }
}

impl<T> Scalar for T where
    T: PrimInt
        + Signed
        + Integer
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + CheckedNeg
        + FromPrimitive
        + ToPrimitive
        + Hash
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}
