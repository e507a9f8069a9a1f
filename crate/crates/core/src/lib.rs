//! Linear codes over the rings `R(k,m) = F2[u,v] / <u^k, v^m, uv - vu>`.
//!
//! The crate covers exact ring arithmetic, the Gray map to binary words and the
//! Lee weight, codes over `R(k,m)` with brute-force duals, the complete, Hamming
//! and Lee MacWilliams identities, double, bordered double and four circulant
//! constructions, and the projection/lift search for self-dual codes whose
//! Gray images are good binary self-dual codes.

pub mod binary;
pub mod bits;
pub mod codes;
pub mod constructions;
pub mod error;
pub mod fixtures;
pub mod gray;
pub mod lift;
pub mod macwilliams;
pub mod matrix;
pub mod ring;

pub use binary::{BinaryCode, DistanceAlgorithm, SelfDualProfile, SelfDualType, WeightEnumerator};
pub use bits::BinaryWord;
pub use codes::{RingCode, RingVector};
pub use constructions::ConstructionSpec;
pub use error::{Error, Result};
pub use matrix::RingMatrix;
pub use ring::{RingElement, RingParams};
