//! An exact computer-algebra kernel for the rotation algebra so(3).
//!
//! Everything is computed over arbitrary-precision rationals, with no
//! complex numbers and no floating point anywhere in the symbolic path:
//!
//! - [`poly`] / [`projector`]: decomposition of a real operator into
//!   orthogonal idempotents built from the Bézout cofactors of its factored
//!   minimal polynomial, with no eigenvalues required.
//! - [`uea`]: the universal enveloping algebra U(so(3)) in PBW normal form,
//!   its left/right/adjoint actions, and the Casimir operators E, E_k.
//! - [`multipole`]: step operators between the E_k-annihilated sectors and
//!   the recursive non-commutative multipole tensors T_k.
//! - [`spinalg`]: the finite spin algebras S_s obtained by quotienting out
//!   the multipoles above level 2s, with exact structure-constant tables.
//! - [`oracle`]: an independent floating-point cross-check against the
//!   standard complex spin matrices.
//! - [`render`] / [`cli`]: table generation (text, JSON, LaTeX, CSV) and the
//!   `sospin` command-line interface.
//!
//! Each major capability has a runnable demo under `examples/`.

pub mod cli;
pub mod error;
pub mod expr;
pub mod matrix;
pub mod multipole;
pub mod oracle;
pub mod poly;
pub mod projector;
pub mod rational;
pub mod render;
pub mod spinalg;
pub mod uea;
pub mod verify;

pub use error::{Error, Result};
pub use rational::Rational;
