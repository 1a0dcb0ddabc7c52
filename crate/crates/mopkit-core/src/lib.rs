//! Exact determinantal calculus for multiple orthogonal polynomial
//! ensembles of mixed type: moment matrices, the reduced transfer
//! matrix, matrix Christoffel-Darboux kernels, average
//! characteristic-polynomial formulas and their weight-modification
//! counterparts, all verifiable against independent brute-force oracles
//! in exact rational arithmetic.
//!
//! ```
//! use mopkit_core::averages::avg_char;
//! use mopkit_core::oracles::oracle_enumerate_default_cap;
//! use mopkit_core::{DiscreteMeasure, EnsembleSpec, MultiIndexPair, Rat, Scalar, Weights};
//!
//! // One random point on {0, 1} with equal masses and unit weights.
//! let measure = DiscreteMeasure::new(
//!     vec![Rat::from_int(0), Rat::from_int(1)],
//!     vec![Rat::from_fraction(1, 2), Rat::from_fraction(1, 2)],
//! )?;
//! let pair = MultiIndexPair::new(vec![1], vec![1])?;
//! let spec = EnsembleSpec::new(Weights::units(1, 1), measure, pair)?;
//!
//! // The determinant formula and the brute-force average agree exactly.
//! let y = Rat::from_int(0);
//! assert_eq!(avg_char(&spec, &y)?, Rat::from_fraction(-1, 2));
//! assert_eq!(oracle_enumerate_default_cap(&spec, &[y], &[])?, Rat::from_fraction(-1, 2));
//! # Ok::<(), mopkit_core::Error>(())
//! ```

pub mod averages;
pub mod ensemble;
pub mod error;
pub mod kernel;
pub mod linalg;
pub mod measure;
pub mod multi_index;
pub mod oracles;
pub mod poly;
pub mod rh;
pub mod scalar;
pub mod transforms;
pub mod vector_op;
pub mod weights;

pub use ensemble::EnsembleSpec;
pub use error::{Error, Result};
pub use linalg::Mat;
pub use measure::{quadrature_preset, DiscreteMeasure, QuadratureFamily};
pub use multi_index::{chain_indices, ChainPolicy, MultiIndexPair};
pub use poly::Polynomial;
pub use rh::RhBlocks;
pub use scalar::{Cf64, Rat, Scalar};
pub use vector_op::PolyVector;
pub use weights::{modified_weight, moment, WeightExpr, Weights};

/// Default cap on the number of enumeration terms.
pub const DEFAULT_ENUM_CAP: u64 = 10_000_000;

/// Default tolerance for float-field comparisons.
pub const DEFAULT_EPS_TOL: f64 = 1e-10;
