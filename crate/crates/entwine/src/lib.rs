//! Exact-arithmetic engine for entwining structures.
//!
//! The crate represents a finite multi-object coalgebra C entwined with a
//! finite-dimensional algebra A through a family of maps
//! ψ_{XY}: C(X,Y)⊗A → A⊗C(X,Y), together with entwined comodules and
//! contramodules over the triple (C, A, ψ). On top of that data model it
//! decides separability of the four canonical functors (free/forgetful on
//! both the comodule and contramodule sides), existence of Frobenius pairs,
//! and existence of normalized cointegrals, returning exact, re-verifiable
//! certificates over Q or F_p.
//!
//! Layering, bottom-up:
//! - [`field`], [`matrix`], [`linalg`]: exact scalars, dense matrices,
//!   Gaussian elimination, nullspaces, affine feasibility.
//! - [`tensor`]: Kronecker products, factor permutations, dual encodings.
//! - [`structures`]: algebras, multi-object coalgebras, entwinings, axiom
//!   checkers, (de)serialization of structure bundles.
//! - [`representations`]: entwined comodules/contramodules, functors
//!   F, G, S, T, hom-spaces, adjunction transposes, subcomodules.
//! - [`criteria`]: V1/W1 spaces, separability and Frobenius decisions,
//!   cointegrals, Maschke averaging and splitting.
//! - [`catalog`]: named, bit-reproducible example bundles.
//! - [`cli`]: the thin command-line front end.
//!
//! Runnable walkthroughs for each capability live in `examples/`.

pub mod catalog;
pub mod cli;
pub mod criteria;
pub mod error;
pub mod field;
pub mod linalg;
pub mod matrix;
pub mod representations;
pub mod solve;
pub mod structures;
pub mod tensor;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use matrix::{mat_mul, Matrix};
pub use tensor::{ShapedMap, TensorShape};
