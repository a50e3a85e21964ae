//! Exact q-series: Laurent polynomials, taxicab generating functions over cube
//! sets, and the sum-of-cubes q-identities.

pub mod identities;
pub mod poly;
pub mod qnum;
pub mod weight;

pub use identities::{sides, verify_identity, verify_matrix_split, IdentityId};
pub use poly::LaurentPoly;
pub use qnum::{q_binomial, q_factorial, q_int};
pub use weight::{gf, Orientation, WeightSpec};
