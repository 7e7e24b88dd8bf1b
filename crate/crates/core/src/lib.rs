//! Exact-arithmetic engine for walled Brauer algebras, their affine tower and
//! level-two quotients, and the matrix realization on gl(m|n) tensor modules.
//!
//! Everything here computes over arbitrary-precision rationals; there is no
//! floating point anywhere in the crate.

pub mod cellular;
pub mod diagram;
mod error;
pub mod gl;
pub mod linalg;
pub mod perm;
pub mod rational;
pub mod report;
pub mod suites;
pub mod tableau;
pub mod tensor;
pub mod tower;
pub mod word;

pub use diagram::{DiagramAlgebra, WalledDiagram};
pub use error::Error;
pub use linalg::{rank_of, solve_in_span, LinComb, SparseMatrix};
pub use perm::{BiPerm, Convention, CosetRep, Perm};
pub use rational::{parse_rat, rat, ratio, Rat};
pub use report::{Record, Report, Status};
pub use tensor::TensorSpace;
pub use word::{Gen, Word, WordElem};

pub type Result<T> = std::result::Result<T, Error>;
