//! Graded polynomial rings over the integers.

pub mod matrix;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod series;
pub mod symmetric;
pub mod vars;

pub use matrix::poly_determinant;
pub use monomial::{monomials_of_degree, Monomial};
pub use parse::ParseError;
pub use poly::{Degree, IntPolynomial};
pub use series::{chern_series_quotient, series_inverse, series_product};
pub use symmetric::{expand_elementary, symmetrize_to_elementary, SymmetricFamilies, SymmetricFamily};
pub use vars::{VarSet, VariableSpec};
