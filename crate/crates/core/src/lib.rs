//! Z2Z4-additive codes: the rank and kernel dimension of their binary Gray
//! images, constructions reaching every feasible value, and brute-force
//! oracles to check both.
//!
//! ```
//! use z2z4_core::{construct_pair, kernel, rank, FreeBlocks, TypeParams};
//!
//! let t = TypeParams::new(1, 9, 2, 5, 1);
//! let code = construct_pair(&t, 14, 8, FreeBlocks::Zero).unwrap();
//! assert_eq!(rank(&code).rank, 14);
//! assert_eq!(kernel(&code).ker_dim, 8);
//! ```

pub mod bits;
pub mod code;
pub mod construct;
pub mod error;
pub mod oracle;
pub mod params;
pub mod random;
pub mod rank_kernel;
pub mod vector;

pub use bits::{BinaryMatrix, BinaryVector};
pub use code::format::{Expectation, MatrixFile};
pub use code::{AdditiveCode, Codewords, GeneratorMatrix, StandardForm};
pub use construct::{construct_kernel, construct_pair, construct_rank, feasible, FeasibleSet, FreeBlocks};
pub use error::{Bound, Error, Result};
pub use oracle::SizeGuard;
pub use params::TypeParams;
pub use rank_kernel::{
    bounds_check, kernel, kernel_coset_cover, kernel_via_chi, rank, span_generators, CoverCertificate, KernelReport,
    RankReport,
};
pub use vector::MixedVector;
