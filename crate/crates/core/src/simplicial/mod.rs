//! Simplicial complexes, Stanley–Reisner ideals and reduced homology.

mod complex;
mod homology;

pub use complex::{Face, SimplicialComplex};
pub use homology::{
    a_invariant_negative, hilbert_series, hochster_degree_zero, is_acyclic, is_cohen_macaulay, reduced_homology,
    HomologyProfile,
};
