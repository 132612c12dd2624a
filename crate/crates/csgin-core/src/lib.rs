//! Exact computational algebra over multigraded polynomial rings.
//!
//! The ambient object is a polynomial ring `S = K[x_{i,j}]` whose variables
//! are partitioned into `n` blocks, the `i`-th block carrying the multidegree
//! `e_i` of the standard basis of `Z^n`.  On top of that this crate provides:
//!
//! * exact coefficient fields (arbitrary-precision rationals and `GF(p)`),
//! * Buchberger's algorithm with reduced bases, elimination, colon ideals and
//!   saturation,
//! * monomial-ideal combinatorics (Alexander duality, minimal primes,
//!   Borel-fixedness),
//! * multigraded Hilbert numerators, multidegrees, and mixed multiplicities,
//! * Monte-Carlo certified multigraded generic initial ideals,
//! * Stanley-Reisner homology, Betti tables, and local cohomology Hilbert
//!   functions of squarefree ideals,
//! * the binomial edge ideal, multigraded linear closure, and multiview
//!   families built from those parts.
//!
//! Everything is deterministic: randomised constructions are driven by
//! explicit seeds through a splittable counter-based generator, and all
//! containers iterate in a canonical order.  The crate is `no_std` (it only
//! needs `alloc`); IO, file formats, and the command-line driver live in the
//! companion `csgin` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod closure;
pub mod edge;
pub mod field;
pub mod gin;
pub mod groebner;
pub mod hilbert;
pub mod homology;
pub mod ideal;
pub mod matrix;
pub mod monideal;
pub mod monomial;
pub mod multiview;
pub mod order;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod rng;
