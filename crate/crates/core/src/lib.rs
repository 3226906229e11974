//! The 1+1 dimensional Poincaré group, its one-dimensional central
//! extension, and the coadjoint orbits of the extension's dual that realize
//! space-time as a symplectic manifold.
//!
//! Every operation takes an explicit [`KinematicParams`], which is either a
//! finite speed of light or the Galilean regime (`c = ∞`). The Galilean
//! regime is a first-class value, so the contraction `c → ∞` can be checked
//! against independent closed forms in [`contraction`].
//!
//! Module map:
//!
//! - [`group`]: composition and inversion in `G` and the extended group `H`.
//! - [`algebra`]: the extended Lie algebra on the ordered basis `(K, P, E, F)`.
//! - [`coadjoint`]: the coadjoint action on `ℋ*`, Kirillov form, Casimirs and
//!   the Lie–Poisson bracket.
//! - [`realization`]: Darboux and space-time charts on an orbit, the induced
//!   symplectic actions and the invariant interval.
//! - [`contraction`]: Galilean closed forms and the `1/c²` contraction rate.
//! - [`verify`]: the seeded property suite driven by the CLI.

pub mod algebra;
pub mod cli;
pub mod coadjoint;
pub mod contraction;
mod error;
pub mod fd;
pub mod group;
mod params;
pub mod realization;
pub mod sampling;
pub mod verify;

pub use error::{Error, Result};
pub use params::{
    abs_deviation, rel_deviation, scalar_rel, KinematicParams, NaturalUnits, Tolerances,
};
