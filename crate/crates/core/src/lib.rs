//! Auslander-Reiten theory in extended hearts of proper connective dg path
//! algebras, by exact finite-dimensional linear algebra.
//!
//! The pipeline: parse a graded quiver with differential into a dg path
//! algebra, model finite-dimensional dg modules over it, resolve heart
//! objects by (d+1)-term perfect complexes, push them through the derived
//! Nakayama functor to compute the AR translation, and knit the AR quiver
//! from almost-split conflations.

pub mod algebra;
pub mod linalg;

pub use algebra::{AlgElt, Arrow, DgAlgebra, GradedQuiver};
pub use linalg::{FieldCtx, Fp, Mat, Rat, Scalar};
