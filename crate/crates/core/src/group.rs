//! The group `G` of 1+1 Poincaré transformations `(v, τ, x)` and its central
//! extension `H` with the extra parameter `ζ`.
//!
//! An element `g = (v, τ, x)` acts on space-time as the affine map
//! `(t, q) ↦ Λ_v (t, q) + (τ, x)` with the boost
//! `Λ_v = [[γ, γ v/c²], [γ v, γ]]`, and composition is composition of these
//! maps.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::params::{KinematicParams, NaturalUnits};

/// Lorentz factor `1/√(1 − v²/c²)`; exactly 1 when Galilean.
pub fn gamma(v: f64, params: KinematicParams) -> Result<f64> {
    params.check_velocity(v)?;
    if params.is_galilean() {
        return Ok(1.0);
    }
    Ok(1.0 / (1.0 - v * v * params.inv_c2()).sqrt())
}

/// Relativistic velocity addition `(v1 + v2)/(1 + v1 v2/c²)`.
pub fn velocity_add(v1: f64, v2: f64, params: KinematicParams) -> Result<f64> {
    params.check_velocity(v1)?;
    params.check_velocity(v2)?;
    Ok((v1 + v2) / (1.0 + v1 * v2 * params.inv_c2()))
}

/// An element `(v, τ, x)` of `G`: boost velocity, time translation, space
/// translation.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupElement {
    pub v: f64,
    pub tau: f64,
    pub x: f64,
}

impl GroupElement {
    pub const IDENTITY: Self = Self {
        v: 0.0,
        tau: 0.0,
        x: 0.0,
    };

    pub fn new(v: f64, tau: f64, x: f64) -> Self {
        Self { v, tau, x }
    }

    pub fn boost(v: f64) -> Self {
        Self {
            v,
            ..Self::IDENTITY
        }
    }

    pub fn translation(tau: f64, x: f64) -> Self {
        Self { v: 0.0, tau, x }
    }

    pub fn check(&self, params: KinematicParams) -> Result<()> {
        params.check_velocity(self.v)
    }

    /// Appends a zero central parameter.
    pub fn extend(self, zeta: f64) -> ExtendedGroupElement {
        ExtendedGroupElement {
            v: self.v,
            tau: self.tau,
            x: self.x,
            zeta,
        }
    }
}

impl NaturalUnits<3> for GroupElement {
    fn natural(&self, params: KinematicParams) -> [f64; 3] {
        let s = params.length_scale();
        [self.v / s, self.tau, self.x / s]
    }
}

/// Group law of `G`.
pub fn compose(
    g1: GroupElement,
    g2: GroupElement,
    params: KinematicParams,
) -> Result<GroupElement> {
    g2.check(params)?;
    let gamma = gamma(g1.v, params)?;
    let inv_c2 = params.inv_c2();
    Ok(GroupElement {
        v: velocity_add(g1.v, g2.v, params)?,
        tau: gamma * g2.tau + gamma * g1.v * g2.x * inv_c2 + g1.tau,
        x: gamma * g1.v * g2.tau + gamma * g2.x + g1.x,
    })
}

/// Closed-form inverse `(−v, −γ(τ − v x/c²), −γ(x − v τ))`.
pub fn inverse(g: GroupElement, params: KinematicParams) -> Result<GroupElement> {
    let gamma = gamma(g.v, params)?;
    Ok(GroupElement {
        v: -g.v,
        tau: -gamma * (g.tau - g.v * g.x * params.inv_c2()),
        x: -gamma * (g.x - g.v * g.tau),
    })
}

/// An element `(v, τ, x, ζ)` of the centrally extended group `H`, written
/// `exp(ζF) exp(xP + τE) exp(vK)`. `ζ` carries units of length·time.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtendedGroupElement {
    pub v: f64,
    pub tau: f64,
    pub x: f64,
    pub zeta: f64,
}

impl ExtendedGroupElement {
    pub const IDENTITY: Self = Self {
        v: 0.0,
        tau: 0.0,
        x: 0.0,
        zeta: 0.0,
    };

    pub fn new(v: f64, tau: f64, x: f64, zeta: f64) -> Self {
        Self { v, tau, x, zeta }
    }

    /// Drops the central parameter.
    pub fn project(&self) -> GroupElement {
        GroupElement {
            v: self.v,
            tau: self.tau,
            x: self.x,
        }
    }
}

impl NaturalUnits<4> for ExtendedGroupElement {
    fn natural(&self, params: KinematicParams) -> [f64; 4] {
        let s = params.length_scale();
        [self.v / s, self.tau, self.x / s, self.zeta / s]
    }
}

/// The central 2-cocycle of the extended group law,
/// `½γ(x − vτ)τ′ − ½γ(τ − v x/c²)x′`.
pub fn cocycle(g1: GroupElement, g2: GroupElement, params: KinematicParams) -> Result<f64> {
    let gamma = gamma(g1.v, params)?;
    Ok(0.5 * gamma * (g1.x - g1.v * g1.tau) * g2.tau
        - 0.5 * gamma * (g1.tau - g1.v * g1.x * params.inv_c2()) * g2.x)
}

/// Group law of `H`. The first three slots are exactly [`compose`].
pub fn extended_compose(
    h1: ExtendedGroupElement,
    h2: ExtendedGroupElement,
    params: KinematicParams,
) -> Result<ExtendedGroupElement> {
    let (g1, g2) = (h1.project(), h2.project());
    let g = compose(g1, g2, params)?;
    Ok(g.extend(h1.zeta + h2.zeta + cocycle(g1, g2, params)?))
}
