//! Command implementations behind the `poincare-orbit` binary.
//!
//! Each command returns the text it would print on standard output, or a
//! [`CliError`] that maps onto the exit-code contract: 0 success, 1
//! verification failure, 2 usage or input error.

use std::fmt;

use serde::Serialize;
use serde_json::Value;

use crate::coadjoint::{casimir, coadjoint_action, orbit_point, DualVector, OrbitInvariants};
use crate::contraction::{contraction_rate, OpKind};
use crate::error::Error;
use crate::group::{compose, extended_compose, ExtendedGroupElement, GroupElement};
use crate::params::{KinematicParams, Tolerances};
use crate::realization::{phase_action, spacetime_action, PhasePoint, SpacetimePoint};
use crate::verify::{
    random_contraction_sample, run_suite, PropertyResult, SuiteConfig, CONTRACTION_GRID,
    CONTRACTION_SAMPLE_SIZE,
};

pub const ORBIT_HEADER: &str = "k,e,p,f,t,q";

/// Default grid for `contract`: five decades.
pub const DEFAULT_C_GRID: [f64; 5] = CONTRACTION_GRID;

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    /// Exit code 2.
    Usage(String),
    /// Exit code 1.
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) => 2,
            Self::Verification(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Usage(m) => write!(f, "error: {m}"),
            Self::Verification(m) => write!(f, "verification failed: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        Self::Usage(e.to_string())
    }
}

/// Global options shared by every subcommand.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub seed: u64,
    pub cases: usize,
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub c: KinematicParams,
}

impl Default for RunConfig {
    fn default() -> Self {
        let tol = Tolerances::default();
        Self {
            seed: 42,
            cases: 1000,
            rel_tol: tol.rel,
            abs_tol: tol.abs,
            c: KinematicParams::NATURAL,
        }
    }
}

impl RunConfig {
    pub fn tolerances(&self) -> Tolerances {
        Tolerances {
            rel: self.rel_tol,
            abs: self.abs_tol,
            ..Tolerances::default()
        }
    }

    pub fn suite(&self) -> SuiteConfig {
        SuiteConfig {
            seed: self.seed,
            cases: self.cases,
            params: self.c,
            tol: self.tolerances(),
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        self.suite().validate().map_err(CliError::from)
    }
}

/// Maps `-0.0` to `0.0` for printing.
fn tidy(x: f64) -> f64 {
    x + 0.0
}

/// Shortest representation that parses back to the same `f64`.
pub fn format_number(x: f64) -> String {
    let x = tidy(x);
    if x.fract() == 0.0 && x.abs() < 1e16 {
        format!("{x}")
    } else {
        format!("{x:?}")
    }
}

pub fn format_csv_row(row: &[f64; 6]) -> String {
    row.iter()
        .map(|x| format_number(*x))
        .collect::<Vec<_>>()
        .join(",")
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain structs serialize")
}

// ---------------------------------------------------------------------------
// verify

pub struct VerifyOutcome {
    pub results: Vec<PropertyResult>,
}

impl VerifyOutcome {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    /// One JSON object per line, ordered by property name.
    pub fn report(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            out.push_str(&r.to_json_line());
            out.push('\n');
        }
        out
    }
}

pub fn cmd_verify(config: &RunConfig) -> Result<VerifyOutcome, CliError> {
    config.validate()?;
    let results = run_suite(&config.suite())?;
    Ok(VerifyOutcome { results })
}

// ---------------------------------------------------------------------------
// transform

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformKind {
    Group,
    Coadjoint,
    Phase,
    Spacetime,
}

impl std::str::FromStr for TransformKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "group" => Ok(Self::Group),
            "coadjoint" => Ok(Self::Coadjoint),
            "phase" => Ok(Self::Phase),
            "spacetime" => Ok(Self::Spacetime),
            other => Err(format!(
                "unknown kind {other:?} (expected group, coadjoint, phase or spacetime)"
            )),
        }
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(what: &str, text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Usage(format!("invalid {what}: {e}")))
}

fn has_zeta(what: &str, text: &str) -> Result<bool, CliError> {
    let value: Value = parse_json(what, text)?;
    Ok(value.get("zeta").is_some())
}

/// Applies `element` to `point` and returns the image as JSON.
///
/// For `group`, `point` is a second group element and the result is the
/// product; when both carry `zeta` the extended group law is used.
pub fn cmd_transform(
    kind: TransformKind,
    element: &str,
    point: &str,
    params: KinematicParams,
    f: Option<f64>,
) -> Result<String, CliError> {
    match kind {
        TransformKind::Group => match (has_zeta("element", element)?, has_zeta("point", point)?) {
            (true, true) => {
                let h1: ExtendedGroupElement = parse_json("element", element)?;
                let h2: ExtendedGroupElement = parse_json("point", point)?;
                let h = extended_compose(h1, h2, params)?;
                Ok(to_json(&ExtendedGroupElement::new(
                    tidy(h.v),
                    tidy(h.tau),
                    tidy(h.x),
                    tidy(h.zeta),
                )))
            }
            (false, false) => {
                let g1: GroupElement = parse_json("element", element)?;
                let g2: GroupElement = parse_json("point", point)?;
                let g = compose(g1, g2, params)?;
                Ok(to_json(&GroupElement::new(
                    tidy(g.v),
                    tidy(g.tau),
                    tidy(g.x),
                )))
            }
            _ => Err(CliError::Usage(
                "element and point must both be plain or both be extended (with zeta)".into(),
            )),
        },
        TransformKind::Coadjoint => {
            let g: GroupElement = parse_json("element", element)?;
            let mu: DualVector = parse_json("point", point)?;
            let r = coadjoint_action(g, mu, params)?;
            Ok(to_json(&DualVector::from_array(r.as_array().map(tidy))))
        }
        TransformKind::Phase => {
            let f = f.ok_or_else(|| CliError::Usage("--f is required for kind=phase".into()))?;
            let g: GroupElement = parse_json("element", element)?;
            let pt: PhasePoint = parse_json("point", point)?;
            let r = phase_action(g, pt, f, params)?;
            Ok(to_json(&PhasePoint::new(tidy(r.p), tidy(r.q))))
        }
        TransformKind::Spacetime => {
            let g: GroupElement = parse_json("element", element)?;
            let pt: SpacetimePoint = parse_json("point", point)?;
            let r = spacetime_action(g, pt, params)?;
            Ok(to_json(&SpacetimePoint::new(tidy(r.t), tidy(r.q))))
        }
    }
}

// ---------------------------------------------------------------------------
// orbit

/// Parses a grid: a single value `a`, or `start:stop:n` for `n` evenly spaced
/// nodes including both ends.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let bad = || {
        CliError::Usage(format!(
            "malformed grid {spec:?} (expected a or start:stop:n)"
        ))
    };
    let num = |s: &str| -> Result<f64, CliError> {
        let x: f64 = s.trim().parse().map_err(|_| bad())?;
        if x.is_finite() {
            Ok(x)
        } else {
            Err(bad())
        }
    };
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        [a] => Ok(vec![num(a)?]),
        [a, b, n] => {
            let (a, b) = (num(a)?, num(b)?);
            let n: usize = n.trim().parse().map_err(|_| bad())?;
            match n {
                0 => Err(bad()),
                1 if a == b => Ok(vec![a]),
                1 => Err(bad()),
                _ => {
                    let step = (b - a) / (n - 1) as f64;
                    Ok((0..n)
                        .map(|i| if i == n - 1 { b } else { a + step * i as f64 })
                        .collect())
                }
            }
        }
        _ => Err(bad()),
    }
}

/// Rows `(k, e, p, f, t, q)` of `𝒪_(f,𝒦)` over the grid, `p` outermost.
pub fn orbit_rows(
    inv: OrbitInvariants,
    ps: &[f64],
    qs: &[f64],
    params: KinematicParams,
) -> crate::Result<Vec<[f64; 6]>> {
    let mut rows = Vec::with_capacity(ps.len() * qs.len());
    for &p in ps {
        for &q in qs {
            let mu = orbit_point(inv, p, q, params)?;
            rows.push([mu.k, mu.e, mu.p, mu.f, p / inv.f, q]);
        }
    }
    Ok(rows)
}

/// CSV for the orbit; every row is re-checked against `(f, 𝒦)` within `abs_tol`.
pub fn cmd_orbit(
    inv: OrbitInvariants,
    p_grid: &str,
    q_grid: &str,
    params: KinematicParams,
    abs_tol: f64,
) -> Result<String, CliError> {
    if inv.f == 0.0 {
        return Err(Error::DegenerateOrbit.into());
    }
    if !(inv.f.is_finite() && inv.casimir.is_finite()) {
        return Err(CliError::Usage("f and casimir must be finite".into()));
    }
    let (ps, qs) = (parse_grid(p_grid)?, parse_grid(q_grid)?);
    let rows = orbit_rows(inv, &ps, &qs, params)?;

    let mut out = String::from(ORBIT_HEADER);
    out.push('\n');
    for row in &rows {
        let got = casimir(DualVector::new(row[0], row[1], row[2], row[3]), params)?;
        let dev = (got.casimir - inv.casimir).abs().max((got.f - inv.f).abs());
        if dev.is_nan() || dev > abs_tol {
            return Err(CliError::Verification(format!(
                "row at p={}, q={} misses the orbit by {dev:e} (abs_tol {abs_tol:e})",
                row[2], row[5]
            )));
        }
        out.push_str(&format_csv_row(row));
        out.push('\n');
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// contract

pub fn parse_c_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    spec.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Usage(format!("malformed c grid entry {s:?}")))
        })
        .collect()
}

/// Contraction report as JSON; `fitted_slope` is `null` when undefined.
pub fn cmd_contract(
    kind: OpKind,
    c_grid: &[f64],
    seed: u64,
    zero_boosts: bool,
) -> Result<String, CliError> {
    let sample = random_contraction_sample(kind, seed, CONTRACTION_SAMPLE_SIZE, zero_boosts);
    let report = contraction_rate(&sample, c_grid)?;
    Ok(to_json(&report))
}
