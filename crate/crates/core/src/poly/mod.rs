//! Exact scalars, monomials, monomial orders and multivariate polynomials.

mod field;
mod monomial;
mod parse;
mod polynomial;

pub use field::{Field, Scalar};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_polynomial, parse_polynomial_at_line};
pub(crate) use parse::max_variable_index;
pub use polynomial::Polynomial;
