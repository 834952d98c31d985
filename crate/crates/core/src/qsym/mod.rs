//! Compositions, exact polynomials in `q`, and expansions in the monomial
//! quasisymmetric basis.

mod composition;
mod expansion;
mod poly;

pub use composition::{compositions_of, Composition};
pub use expansion::{Palindromicity, QSymExpansion, Symmetry};
pub use poly::QPolynomial;

