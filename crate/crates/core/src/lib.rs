//! Exact computation in the Hopf monoids of ordered generalized
//! permutahedra and ordered simplicial complexes.
//!
//! Atoms of a ground set are indices `0..n` packed into a [`Subset`]
//! bitmask; [`GroundSet`] attaches labels for parsing and display. Every
//! object carries its own ground as a `Subset`, so products and coproducts
//! never reindex.
//!
//! Antipodes are available two ways: the alternating Takeuchi sum over set
//! compositions, which works for any Hopf monoid implementing
//! [`HopfMonoid`], and the cancellation-free formula for `w ⊗ p` in `OGP`,
//! which uses the normal fan of `p` and the reduced Euler characteristic of
//! a scrope complex.
//!
//! ```
//! use ordered_hopf::hopf::{ogp_antipode_formula, takeuchi_antipode, OgpBasis};
//! use ordered_hopf::{Gp, GroundSet, OgpMonoid};
//!
//! let g = GroundSet::lettered(3);
//! let p = Gp::regular_permutahedron(g.full());
//! let w = g.word("bca")?;
//!
//! let formula = ogp_antipode_formula(&w, &p, 7)?;
//! let oracle = takeuchi_antipode(&OgpMonoid::new(), &OgpBasis::new(w, p)?, 7)?;
//! assert_eq!(formula.sum, oracle);
//! # Ok::<(), ordered_hopf::Error>(())
//! ```

// Polytopes cache their vertex list in a `OnceLock`; ordering and hashing
// only look at the support function.
#![allow(clippy::mutable_key_type)]

pub mod complexes;
pub mod error;
pub mod gp;
pub mod ground;
pub mod hopf;
pub mod json;
pub mod scalar;
pub mod scrope;
pub mod subset;
pub mod verify;

pub use complexes::{Matroid, OrderedComplex, SimplicialComplex};
pub use error::{Error, Result};
pub use gp::{GenPermutahedron, SetFn};
pub use ground::{Album, GroundSet, LinearOrder, Preposet, SetComposition};
pub use hopf::{FormalSum, HopfMonoid};
pub use scalar::Scalar;
pub use scrope::ScropeComplex;
pub use subset::Subset;

/// Exact rational scalars used throughout the command-line tool.
pub type Rational = num_rational::Rational64;

/// Generalized permutahedra with rational support values.
pub type Gp = GenPermutahedron<Rational>;

/// Basis elements `w ⊗ p` of `OGP` over the rationals.
pub type OgpElement = hopf::OgpBasis<Rational>;

pub type OgpMonoid = hopf::OgpMonoid<Rational>;

pub type GpMonoid = hopf::GpMonoid<Rational>;
