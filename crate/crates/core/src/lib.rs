//! Exact subgroup-lattice computations for `GL(n,q)` and `PGL(n,q)`.
//!
//! The crate enumerates small general linear and projective general linear
//! groups as explicit matrix groups, computes their subgroup lattices, and
//! studies the closure operator that sends a subgroup `H` to the joint
//! stabilizer of all `H`-invariant subspaces of `V = F_q^n`.  On top of that
//! sit Mobius-function identities on finite posets, censuses of closed
//! subgroups classified by the shape of their invariant-subspace lattices,
//! and the q-binomial combinatorics that predicts those censuses.
//!
//! Everything is exact: field elements are indices into `GF(q)` for
//! `q <= 64`, matrices and subspaces are canonical forms over those fields,
//! and all counts, Mobius values and proportions are integers or exact
//! rationals.  No floating point is used anywhere.
//!
//! Module map:
//!
//! * [`gf`] — arithmetic in `GF(q)` with a fixed, embedded modulus table;
//! * [`linalg`] — matrices, polynomials and canonical (RREF) subspaces;
//! * [`poset`] — finite posets and lattices: Mobius functions, order
//!   ideals, join-irreducibles, isomorphism testing and classification;
//! * [`group`] — `GL(n,q)` / `PGL(n,q)` as explicit finite groups with full
//!   subgroup enumeration at desk scale;
//! * [`closure`] — the closure operator, its ideal posets and the identity
//!   checks built from them;
//! * [`counting`] — q-binomials, flags, direct-sum decompositions, censuses
//!   of closed subgroups and cyclic-matrix statistics.

pub mod closure;
pub mod counting;
pub mod gf;
pub mod group;
pub mod linalg;
pub mod poset;

mod error;

pub use error::{Error, Result};
