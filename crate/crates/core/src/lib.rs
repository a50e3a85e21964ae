//! Exact lattice-cube constructions in four dimensions for the sum of cubes
//! `1^3 + ... + n^3`, with the q-analogue identities they prove.
//!
//! Everything here is exact: labels are integers, polynomials carry big-integer
//! coefficients, and every verifier reports the precise sets or terms that
//! disagree.

pub mod constructions;
pub mod error;
pub mod isometry;
pub mod lattice;
pub mod powersums;
pub mod qseries;
pub mod report;
pub mod tiling;

pub use error::{Error, Result};
pub use isometry::{named_map, Isometry, MapId, Parity, Sign};
pub use lattice::{region_r3, set_relate, Axis, CubeSet, LocationLabel, Region, SetRelation};
pub use qseries::{IdentityId, LaurentPoly, WeightSpec};
pub use report::Report;
