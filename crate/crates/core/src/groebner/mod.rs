//! S-polynomials, division, Buchberger's algorithm, reduced and 0-reduced
//! bases, initial ideals, elimination and order-preserving linear substitution.

mod basis;
mod elimination;
mod ideal;
mod monomial_ideal;
pub(crate) mod terms;

pub use basis::{buchberger, extend_basis, reduce, s_polynomial, GbConfig, GroebnerBasis, Reduction};
pub use elimination::{
    eliminate, elimination_basis, free_vertex_extraction, ideals_equal, substitute_linear, zero_is_free,
};
pub use ideal::Ideal;
pub use monomial_ideal::MonomialIdeal;
