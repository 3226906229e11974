//! The dual space `ℋ*` with coordinates `(k, e, p, f)` dual to `(K, E, P, F)`,
//! the coadjoint action of `G`, the Kirillov form, orbit invariants and the
//! Lie–Poisson bracket.
//!
//! The coordinate order `(k, e, p, f)` differs from the algebra basis order
//! `(K, P, E, F)`; pairing is always by label.
//!
//! Through the chart `t = p/f, q = −e/f`, the coadjoint action moves `(t, q)`
//! by the ordinary space-time action of `G`, which makes it a left action:
//! `Ad*_{g1 g2} = Ad*_{g1} ∘ Ad*_{g2}`.

use serde::{Deserialize, Serialize};

use crate::algebra::{bracket, AlgebraElement, Generator};
use crate::error::{Error, Result};
use crate::group::{gamma, GroupElement};
use crate::params::{KinematicParams, NaturalUnits};

/// A moment `μ = (k, e, p, f)` in `ℋ*`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DualVector {
    /// Dual to the boost generator `K`.
    pub k: f64,
    /// Dual to `E` (energy-like).
    pub e: f64,
    /// Dual to `P` (momentum-like).
    pub p: f64,
    /// Dual to the central `F` (a force).
    pub f: f64,
}

impl DualVector {
    pub fn new(k: f64, e: f64, p: f64, f: f64) -> Self {
        Self { k, e, p, f }
    }

    /// `⟨μ, A⟩`, pairing `k↔K`, `e↔E`, `p↔P`, `f↔F`.
    pub fn pair(&self, a: &AlgebraElement) -> f64 {
        self.k * a[Generator::K]
            + self.e * a[Generator::E]
            + self.p * a[Generator::P]
            + self.f * a[Generator::F]
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.k, self.e, self.p, self.f]
    }

    pub fn from_array([k, e, p, f]: [f64; 4]) -> Self {
        Self { k, e, p, f }
    }
}

impl NaturalUnits<4> for DualVector {
    fn natural(&self, params: KinematicParams) -> [f64; 4] {
        // e = −f q carries one power of length
        [self.k, self.e / params.length_scale(), self.p, self.f]
    }
}

/// The invariants `(f, 𝒦)` labelling an orbit `𝒪_(f,𝒦)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrbitInvariants {
    pub f: f64,
    pub casimir: f64,
}

impl OrbitInvariants {
    pub fn new(f: f64, casimir: f64) -> Self {
        Self { f, casimir }
    }
}

/// `Ad*_g μ`.
pub fn coadjoint_action(
    g: GroupElement,
    mu: DualVector,
    params: KinematicParams,
) -> Result<DualVector> {
    let gamma = gamma(g.v, params)?;
    let inv_c2 = params.inv_c2();
    let GroupElement { v, tau, x } = g;
    let DualVector { k, e, p, f } = mu;
    Ok(DualVector {
        k: k + gamma * (x - v * tau) * e * inv_c2
            + gamma * (tau - v * x * inv_c2) * p
            + 0.5 * (tau * tau - x * x * inv_c2) * f,
        e: gamma * e - gamma * p * v - f * x,
        p: -gamma * v * e * inv_c2 + gamma * p + f * tau,
        f,
    })
}

/// The Kirillov form at `μ` restricted to the non-central directions.
///
/// Rows and columns are ordered **(K, E, P)**, not the algebra basis order.
/// Entry `(i, j)` is `−⟨μ, [X_i, X_j]⟩`:
///
/// ```text
/// ⎡  0      −p   −e/c² ⎤
/// ⎢  p       0     f   ⎥
/// ⎣  e/c²   −f     0   ⎦
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KirillovMatrix(pub [[f64; 3]; 3]);

impl KirillovMatrix {
    pub fn entries(&self) -> [[f64; 3]; 3] {
        self.0
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| self.0[i][j] == -self.0[j][i]))
    }

    /// A vector spanning the kernel, in `(K, E, P)` order: `(f, e/c², −p)`.
    /// It is parallel to the `(k, e, p)` gradient of `𝒦`.
    pub fn kernel_vector(&self) -> [f64; 3] {
        let m = &self.0;
        [m[1][2], -m[0][2], m[0][1]]
    }

    pub fn apply(&self, w: [f64; 3]) -> [f64; 3] {
        self.0
            .map(|row| row.iter().zip(&w).map(|(a, b)| a * b).sum())
    }

    /// 0 for the zero matrix, 2 otherwise (a 3×3 antisymmetric matrix has even rank).
    pub fn rank(&self) -> usize {
        if self.0.iter().flatten().all(|a| *a == 0.0) {
            0
        } else {
            2
        }
    }
}

pub fn kirillov_matrix(mu: DualVector, params: KinematicParams) -> KirillovMatrix {
    let DualVector { e, p, f, .. } = mu;
    let e_c = e * params.inv_c2();
    KirillovMatrix([[0.0, -p, -e_c], [p, 0.0, f], [e_c, -f, 0.0]])
}

/// Darboux coordinates `(t, q) = (p/f, −e/f)`.
pub(crate) fn chart(mu: &DualVector) -> Result<(f64, f64)> {
    if mu.f == 0.0 {
        return Err(Error::DegenerateOrbit);
    }
    Ok((mu.p / mu.f, -mu.e / mu.f))
}

/// Orbit invariants `(f, 𝒦)` with `𝒦 = k + f q²/(2c²) − f t²/2`.
pub fn casimir(mu: DualVector, params: KinematicParams) -> Result<OrbitInvariants> {
    let (t, q) = chart(&mu)?;
    let f = mu.f;
    Ok(OrbitInvariants {
        f,
        casimir: mu.k + 0.5 * f * q * q * params.inv_c2() - 0.5 * f * t * t,
    })
}

/// `{F, G}(μ) = ⟨μ, [dF, dG]⟩` for differentials given as algebra elements.
pub fn lie_poisson_bracket(
    grad_f: &AlgebraElement,
    grad_g: &AlgebraElement,
    mu: DualVector,
    params: KinematicParams,
) -> f64 {
    mu.pair(&bracket(grad_f, grad_g, params))
}

/// The point of `𝒪_(f,𝒦)` with Darboux coordinates `(p, q)`.
pub fn orbit_point(
    inv: OrbitInvariants,
    p: f64,
    q: f64,
    params: KinematicParams,
) -> Result<DualVector> {
    let f = inv.f;
    if f == 0.0 {
        return Err(Error::DegenerateOrbit);
    }
    Ok(DualVector {
        k: inv.casimir - 0.5 * f * q * q * params.inv_c2() + p * p / (2.0 * f),
        e: -f * q,
        p,
        f,
    })
}
