//! Computational companion for character varieties of closed surface groups.
//!
//! The crate turns root-system data for a connected reductive group `G` into
//! the numbers that control the geometry of `Ch(Π, G)`, the character variety
//! of the fundamental group of a genus `g` surface:
//!
//! * [`rootdata`]: irreducible root systems, Cartan matrices and extended
//!   (affine) Dynkin diagrams in simple-root coordinates.
//! * [`groupdatum`]: reductive groups as almost-simple factors with isogeny
//!   labels plus a central torus; centers and fundamental groups.
//! * [`parabolics`]: standard parabolics, Levi data and the weights of a
//!   one-dimensional Levi center on the unipotent radical.
//! * [`dimensions`]: dimensions of representation and character varieties and
//!   lower bounds on the codimension of reducible loci.
//! * [`endoscopy`]: pseudo-Levi subgroups from iterated extended-diagram node
//!   deletion and the codimension of elliptic endoscopic strata.
//! * [`lattices`]: fixed and commutator ranks for finite abelian actions on
//!   cocharacter lattices.
//! * [`tangent`]: an exact-arithmetic check of the tangent-space dimension of
//!   `SL₂` representation varieties.
//! * [`classify`]: per-component singularity verdicts and full reports.
//!
//! All arithmetic is exact. Batch work runs on rayon when the `parallel`
//! feature is enabled (the default) and sequentially otherwise; see
//! [`Execution`].

pub mod classify;
pub mod dimensions;
pub mod endoscopy;
mod error;
mod exec;
pub mod groupdatum;
pub mod lattices;
pub mod linalg;
pub mod parabolics;
pub mod rootdata;
pub mod tangent;

pub use error::{Error, Result};
pub use exec::Execution;
