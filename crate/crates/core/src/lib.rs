//! Exact McKay quivers of finite matrix groups over cyclotomic fields.
//!
//! A group is given by generator matrices with entries in `ℚ(ζ_N)`. It is
//! enumerated exactly, its character table is computed by Dixon's modular
//! method and lifted to cyclotomic values, and the McKay quiver is read off
//! from tensor-product multiplicities. On top of that sit the Nakayama
//! permutation (twist by the determinant), the `det⁻¹` embedding into one
//! dimension higher, and coverings of quivers induced by normal subgroups.

pub mod chartab;
pub mod covers;
pub mod cyclotomic;
pub mod error;
pub mod groupfile;
pub mod matgroup;
pub mod modp;
pub mod pipeline;
pub mod presets;
pub mod quiver;
pub mod suite;

pub use chartab::{CharacterTable, ClassFunction};
pub use covers::{CoveringMap, CoveringReport};
pub use cyclotomic::{parse_cyc, CycElem, Rational};
pub use error::{Error, Result};
pub use groupfile::GroupFile;
pub use matgroup::{CycMatrix, FiniteMatrixGroup, NormalEmbedding, DEFAULT_MAX_ORDER};
pub use modp::ModPScalar;
pub use pipeline::Analysis;
pub use presets::Preset;
pub use quiver::{Permutation, Quiver};
