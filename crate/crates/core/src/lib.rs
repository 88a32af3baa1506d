//! Normalizers of Atkin-Lehner extensions of `Gamma_0(N)` for levels not
//! divisible by 4 or 9, with exact arithmetic throughout.
//!
//! The modules build on each other:
//!
//! * [`exact`]: projective 2x2 integer matrices, the representation of every group element
//! * [`congruence`]: `Gamma_0(N)`, Atkin-Lehner cosets, the divisor group `B(N)`
//! * [`bigpicture`]: lattice classes, snakes, orbits and fixed-class searches
//! * [`normalizer`]: classification, the order-3 element and the quotient group
//! * [`checks`]: the self-verification suite behind `modnorm paper-checks`
//! * [`cli`]: argument parsing and output for the `modnorm` binary

pub mod arith;
pub mod bigpicture;
pub mod checks;
pub mod cli;
pub mod congruence;
pub mod error;
pub mod exact;
pub mod normalizer;

pub use bigpicture::LatticeClass;
pub use congruence::{DivisorSubgroup, GeneratorSet, GroupSpec};
pub use error::{Error, Result};
pub use exact::{canonicalize, ProjectiveMatrix, RationalMatrix};
