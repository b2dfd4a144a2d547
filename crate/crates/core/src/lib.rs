//! Restricted Lie algebras over prime fields and their restricted enveloping
//! algebras.
//!
//! The crate is organised bottom-up:
//!
//! * [`field`] and [`linalg`]: arithmetic in F_p and exact subspace computations.
//! * [`lie`]: the structure-constant description of a restricted Lie algebra
//!   and its structural invariants.
//! * [`env`]: u(L) with PBW straightening, the principal involution, the
//!   symmetric and skew subspaces, and Lie metabelian / solvable checks.
//! * [`classify`]: the structural criteria deciding when u(L)^-, u(L)^+ and
//!   u(L) are Lie metabelian, and a harness comparing them with direct
//!   computation in u(L).
//! * [`format`], [`corpus`], [`report`], [`repro`]: the algebra file format,
//!   the built-in algebras, report rendering and the witness regression suite
//!   behind the `rla` command-line tool.
//!
//! ```
//! use rla_core::{env::EnvAlgebra, format::parse};
//!
//! let spec = parse("p = 3\nbasis = x y z\n[x,y] = z\n").unwrap();
//! let u = EnvAlgebra::build(spec, 1 << 16).unwrap();
//! assert_eq!(u.dim(), 27);
//! let yx = u.parse("y*x").unwrap();
//! assert_eq!(u.format(&yx), "2*z + x*y");
//! ```

pub mod classify;
pub mod corpus;
pub mod env;
pub mod error;
pub mod field;
pub mod format;
pub mod lie;
pub mod linalg;
pub mod report;
pub mod repro;

pub use error::Error;

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/algebra-files.md")]
    mod algebra_files {}
    #[doc = include_str!("../../../book/src/enveloping-algebra.md")]
    mod enveloping_algebra {}
    #[doc = include_str!("../../../book/src/involution.md")]
    mod involution {}
    #[doc = include_str!("../../../book/src/metabelian.md")]
    mod metabelian {}
    #[doc = include_str!("../../../book/src/classification.md")]
    mod classification {}
    #[doc = include_str!("../../../book/src/corpus.md")]
    mod corpus {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
