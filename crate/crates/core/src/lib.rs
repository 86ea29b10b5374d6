//! Constacyclic error-correcting codes over residue rings of the Gaussian
//! integers, with Mannheim-weight-1 syndrome decoding.
//!
//! ```
//! use gaussian_codes::{build_half_code, GaussianInt, SyndromeTable};
//!
//! let g = GaussianInt::new;
//! let code = build_half_code(5, 2, Some((g(2, 0), g(1, -1)))).unwrap();
//! let table = SyndromeTable::build(&code).unwrap();
//!
//! let mut received = code.generator_matrix()[0].clone();
//! received[3] = g(0, 1);
//! let out = table.decode(&received).unwrap();
//! assert_eq!(out.codeword, code.generator_matrix()[0]);
//! ```

pub mod code;
pub mod descriptor;
pub mod error;
pub mod gaussian;
pub mod group;
pub mod oracle;
pub mod poly;
pub mod ring;
pub mod syndrome;

pub use code::{build_half_code, build_multiprime_code, build_quarter_code, ConstacyclicCode, Matrix, Sign};
pub use error::{Error, Result};
pub use gaussian::{units, GaussianInt, UNITS};
pub use group::FourthRootPair;
pub use poly::Poly;
pub use ring::{GaussianPrimeSpec, ResidueRing};
pub use syndrome::{syndrome, CosetLeader, Decoded, SyndromeTable};
