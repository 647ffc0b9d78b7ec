//! Reflection factorizations in finite Coxeter groups.
//!
//! The crate builds finite root systems with exact coordinates, realizes the
//! Coxeter group as permutations of its roots, runs the Hurwitz action of the
//! braid group on reduced reflection factorizations, and decides whether an
//! element is (parabolic) quasi-Coxeter both group-theoretically and through
//! root lattices. The [`verify`] module ties these together into batch checks.

pub mod error;
pub mod classify;
pub mod group;
pub mod hurwitz;
pub mod lattice;
pub mod linalg;
pub mod par;
pub mod rootsys;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use group::{CoxeterGroup, GroupElement, SignedPermutation};
pub use rootsys::{build_dihedral, build_root_system, CoxeterType, DihedralModel, RootSystem};
pub use scalar::ExactScalar;
