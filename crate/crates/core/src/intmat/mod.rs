//! Exact integer matrices and Hermite normal forms.

mod hnf;
mod matrix;

pub use hnf::{hnf_left, hnf_right, is_hnf, is_integral_conjugate, Hnf};
pub use matrix::Matrix;
