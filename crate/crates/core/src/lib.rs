//! Exact algebraic Monge-Ampère operator on Laurent polynomials, lattice
//! polytope machinery, and obstructions to the generalized Einstein
//! condition on toric Fano manifolds.

pub mod cli;
pub mod error;
pub mod expr;
pub mod gec;
pub mod families;
pub mod lattice;
pub mod laurent;
pub mod monge_ampere;
pub mod polytope;

pub use error::{Error, Result};
pub use lattice::{ExponentVector, IntegerMatrix, LatticeChart};
pub use laurent::{LaurentPolynomial, Rational};
pub use polytope::{Face, Facet, LatticePolytope, NormalCone};
