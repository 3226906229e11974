//! Charts on a coadjoint orbit `𝒪_(f,𝒦)` and the actions of `G` they carry.
//!
//! In Darboux coordinates `(p, q)` the symplectic form is `dp ∧ dq` and the
//! action depends on `f`. In space-time coordinates `(t, q)` with `t = p/f`
//! the action is the usual Poincaré transformation and the form becomes
//! `f dt ∧ dq`.

use serde::{Deserialize, Serialize};

use crate::coadjoint::{self, orbit_point, DualVector, OrbitInvariants};
use crate::error::{Error, Result};
use crate::group::{gamma, GroupElement};
use crate::params::{KinematicParams, NaturalUnits};

/// Darboux coordinates: momentum `p` and position `q`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhasePoint {
    pub p: f64,
    pub q: f64,
}

impl PhasePoint {
    pub fn new(p: f64, q: f64) -> Self {
        Self { p, q }
    }
}

impl NaturalUnits<2> for PhasePoint {
    fn natural(&self, params: KinematicParams) -> [f64; 2] {
        [self.p, self.q / params.length_scale()]
    }
}

/// Space-time coordinates: time `t` and position `q`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpacetimePoint {
    pub t: f64,
    pub q: f64,
}

impl SpacetimePoint {
    pub fn new(t: f64, q: f64) -> Self {
        Self { t, q }
    }
}

impl NaturalUnits<2> for SpacetimePoint {
    fn natural(&self, params: KinematicParams) -> [f64; 2] {
        [self.t, self.q / params.length_scale()]
    }
}

/// Both charts at one point of an orbit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DarbouxCoords {
    pub t: f64,
    pub q: f64,
    pub p: f64,
}

impl DarbouxCoords {
    pub fn phase(&self) -> PhasePoint {
        PhasePoint {
            p: self.p,
            q: self.q,
        }
    }

    pub fn spacetime(&self) -> SpacetimePoint {
        SpacetimePoint {
            t: self.t,
            q: self.q,
        }
    }
}

/// Which chart an [`ActionJacobian`] refers to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Chart {
    /// Darboux `(p, q)` on the orbit with central moment `f`.
    Phase { f: f64 },
    /// Space-time `(t, q)`; independent of `f`.
    Spacetime,
}

/// Linear part of an affine action on a chart, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ActionJacobian(pub [[f64; 2]; 2]);

impl ActionJacobian {
    pub fn det(&self) -> f64 {
        let [[a, b], [c, d]] = self.0;
        a * d - b * c
    }
}

/// `(t, q, p) = (p/f, −e/f, p)`.
pub fn darboux_from_dual(mu: DualVector) -> Result<DarbouxCoords> {
    let (t, q) = coadjoint::chart(&mu)?;
    Ok(DarbouxCoords { t, q, p: mu.p })
}

pub fn dual_from_darboux(
    inv: OrbitInvariants,
    pt: PhasePoint,
    params: KinematicParams,
) -> Result<DualVector> {
    orbit_point(inv, pt.p, pt.q, params)
}

/// `L_g(p, q) = (γp + γ f v q/c² + fτ, γ(v/f)p + γq + x)`.
pub fn phase_action(
    g: GroupElement,
    pt: PhasePoint,
    f: f64,
    params: KinematicParams,
) -> Result<PhasePoint> {
    let gamma = gamma(g.v, params)?;
    if f == 0.0 {
        return Err(Error::DegenerateOrbit);
    }
    Ok(PhasePoint {
        p: gamma * pt.p + gamma * f * g.v * pt.q * params.inv_c2() + f * g.tau,
        q: gamma * (g.v / f) * pt.p + gamma * pt.q + g.x,
    })
}

/// `L_g(t, q) = (γt + γ v q/c² + τ, γ v t + γq + x)`.
pub fn spacetime_action(
    g: GroupElement,
    pt: SpacetimePoint,
    params: KinematicParams,
) -> Result<SpacetimePoint> {
    let gamma = gamma(g.v, params)?;
    Ok(SpacetimePoint {
        t: gamma * pt.t + gamma * g.v * pt.q * params.inv_c2() + g.tau,
        q: gamma * g.v * pt.t + gamma * pt.q + g.x,
    })
}

/// `ds² = −(Δq)² + c²(Δt)²` between two events.
pub fn interval(a: SpacetimePoint, b: SpacetimePoint, params: KinematicParams) -> Result<f64> {
    let c = params.c().ok_or(Error::GalileanRegime)?;
    let (dt, dq) = (a.t - b.t, a.q - b.q);
    Ok(-dq * dq + c * c * dt * dt)
}

pub fn action_jacobian(
    g: GroupElement,
    chart: Chart,
    params: KinematicParams,
) -> Result<ActionJacobian> {
    let gamma = gamma(g.v, params)?;
    let inv_c2 = params.inv_c2();
    let v = g.v;
    match chart {
        Chart::Phase { f } => {
            if f == 0.0 {
                return Err(Error::DegenerateOrbit);
            }
            Ok(ActionJacobian([
                [gamma, gamma * f * v * inv_c2],
                [gamma * v / f, gamma],
            ]))
        }
        Chart::Spacetime => Ok(ActionJacobian([
            [gamma, gamma * v * inv_c2],
            [gamma * v, gamma],
        ])),
    }
}
