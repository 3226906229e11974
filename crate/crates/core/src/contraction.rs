//! The Galilei group as the `c → ∞` limit.
//!
//! The `galilei_*` functions are written out independently of the generic
//! code, so comparing them with the generic operations at
//! [`KinematicParams::GALILEAN`] checks two separate code paths.
//! [`contraction_rate`] measures how fast the finite-`c` operations approach
//! these closed forms; every correction term carries `1/c²`, so the expected
//! log-log slope is −2.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{compose, GroupElement};
use crate::params::KinematicParams;
use crate::realization::{phase_action, spacetime_action, PhasePoint, SpacetimePoint};

/// `(v + v′, τ + τ′, vτ′ + x′ + x)`.
pub fn galilei_compose(g1: GroupElement, g2: GroupElement) -> GroupElement {
    GroupElement {
        v: g1.v + g2.v,
        tau: g1.tau + g2.tau,
        x: g1.v * g2.tau + g2.x + g1.x,
    }
}

/// `(−v, −τ, vτ − x)`.
pub fn galilei_inverse(g: GroupElement) -> GroupElement {
    GroupElement {
        v: -g.v,
        tau: -g.tau,
        x: g.v * g.tau - g.x,
    }
}

/// `(t + τ, v t + q + x)`.
pub fn galilei_spacetime_action(g: GroupElement, pt: SpacetimePoint) -> SpacetimePoint {
    SpacetimePoint {
        t: pt.t + g.tau,
        q: g.v * pt.t + pt.q + g.x,
    }
}

/// `(p + fτ, (v/f)p + q + x)`.
pub fn galilei_phase_action(g: GroupElement, pt: PhasePoint, f: f64) -> Result<PhasePoint> {
    if f == 0.0 {
        return Err(Error::DegenerateOrbit);
    }
    Ok(PhasePoint {
        p: pt.p + f * g.tau,
        q: (g.v / f) * pt.p + pt.q + g.x,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OpKind {
    Compose,
    Spacetime,
    Phase,
}

/// Fixed inputs on which finite-`c` and Galilean operations are compared.
#[derive(Debug, Clone, PartialEq)]
pub enum ContractionSample {
    Compose(Vec<(GroupElement, GroupElement)>),
    Spacetime(Vec<(GroupElement, SpacetimePoint)>),
    /// `(g, point, f)` with `f ≠ 0`.
    Phase(Vec<(GroupElement, PhasePoint, f64)>),
}

impl ContractionSample {
    pub fn kind(&self) -> OpKind {
        match self {
            Self::Compose(_) => OpKind::Compose,
            Self::Spacetime(_) => OpKind::Spacetime,
            Self::Phase(_) => OpKind::Phase,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Self::Compose(s) => s.len(),
            Self::Spacetime(s) => s.len(),
            Self::Phase(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn max_speed(&self) -> f64 {
        let speeds: Vec<f64> = match self {
            Self::Compose(s) => s.iter().flat_map(|(a, b)| [a.v, b.v]).collect(),
            Self::Spacetime(s) => s.iter().map(|(g, _)| g.v).collect(),
            Self::Phase(s) => s.iter().map(|(g, _, _)| g.v).collect(),
        };
        speeds.into_iter().map(f64::abs).fold(0.0, f64::max)
    }

    /// Sup-norm distance between the operation at `params` and its Galilean closed form.
    fn deviation(&self, params: KinematicParams) -> Result<f64> {
        let mut worst: f64 = 0.0;
        match self {
            Self::Compose(s) => {
                for (a, b) in s {
                    let r = compose(*a, *b, params)?;
                    let g = galilei_compose(*a, *b);
                    worst = worst.max(sup(&[r.v - g.v, r.tau - g.tau, r.x - g.x]));
                }
            }
            Self::Spacetime(s) => {
                for (g, pt) in s {
                    let r = spacetime_action(*g, *pt, params)?;
                    let l = galilei_spacetime_action(*g, *pt);
                    worst = worst.max(sup(&[r.t - l.t, r.q - l.q]));
                }
            }
            Self::Phase(s) => {
                for (g, pt, f) in s {
                    let r = phase_action(*g, *pt, *f, params)?;
                    let l = galilei_phase_action(*g, *pt, *f)?;
                    worst = worst.max(sup(&[r.p - l.p, r.q - l.q]));
                }
            }
        }
        Ok(worst)
    }
}

fn sup(xs: &[f64]) -> f64 {
    xs.iter().map(|x| x.abs()).fold(0.0, f64::max)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContractionReport {
    pub op_kind: OpKind,
    pub c_grid: Vec<f64>,
    pub deviations: Vec<f64>,
    /// Least-squares slope of `ln(deviation)` against `ln(c)`; `None` when
    /// some deviation is zero.
    pub fitted_slope: Option<f64>,
    /// Every deviation is zero (no boosts in the sample).
    pub degenerate: bool,
    pub strictly_decreasing: bool,
}

/// Compares the finite-`c` operation against its Galilean closed form for each
/// `c` in `c_grid` and fits the decay rate on a log-log scale.
pub fn contraction_rate(sample: &ContractionSample, c_grid: &[f64]) -> Result<ContractionReport> {
    if c_grid.len() < 2 {
        return Err(Error::InvalidGrid("need at least two values of c".into()));
    }
    if let Some(bad) = c_grid.iter().find(|c| !(c.is_finite() && **c > 0.0)) {
        return Err(Error::InvalidGrid(format!(
            "{bad} is not a finite positive c"
        )));
    }
    if c_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidGrid(
            "c values must be strictly increasing".into(),
        ));
    }
    let vmax = sample.max_speed();
    if c_grid[0] <= vmax {
        return Err(Error::InvalidGrid(format!(
            "c = {} does not exceed the largest sampled speed {vmax}",
            c_grid[0]
        )));
    }

    let deviations = c_grid
        .iter()
        .map(|&c| sample.deviation(KinematicParams::finite(c)?))
        .collect::<Result<Vec<_>>>()?;

    let degenerate = deviations.iter().all(|d| *d == 0.0);
    let fitted_slope = if deviations.iter().all(|d| *d > 0.0) {
        let xs: Vec<f64> = c_grid.iter().map(|c| c.ln()).collect();
        let ys: Vec<f64> = deviations.iter().map(|d| d.ln()).collect();
        Some(least_squares_slope(&xs, &ys))
    } else {
        None
    };
    let strictly_decreasing = deviations.windows(2).all(|w| w[1] < w[0]);

    Ok(ContractionReport {
        op_kind: sample.kind(),
        c_grid: c_grid.to_vec(),
        deviations,
        fitted_slope,
        degenerate,
        strictly_decreasing,
    })
}

fn least_squares_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}
