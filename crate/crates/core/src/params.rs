use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Regime selector: a finite speed of light, or the Galilean limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KinematicParams {
    c: Option<f64>,
}

impl KinematicParams {
    /// The Galilean regime, `c = ∞`.
    pub const GALILEAN: Self = Self { c: None };

    /// Natural units, `c = 1`.
    pub const NATURAL: Self = Self { c: Some(1.0) };

    /// A finite speed of light. `c` must be finite and strictly positive;
    /// pass [`KinematicParams::GALILEAN`] for the infinite regime.
    pub fn finite(c: f64) -> Result<Self> {
        if c.is_finite() && c > 0.0 {
            Ok(Self { c: Some(c) })
        } else {
            Err(Error::InvalidParams(format!(
                "speed of light must be a finite positive real, got {c}"
            )))
        }
    }

    /// `None` in the Galilean regime.
    pub fn c(&self) -> Option<f64> {
        self.c
    }

    pub fn is_galilean(&self) -> bool {
        self.c.is_none()
    }

    /// `1/c²`, exactly zero in the Galilean regime.
    pub fn inv_c2(&self) -> f64 {
        match self.c {
            Some(c) => 1.0 / (c * c),
            None => 0.0,
        }
    }

    /// Checks `|v| < c` (strict). Every finite velocity is admissible at `c = ∞`.
    pub fn check_velocity(&self, v: f64) -> Result<()> {
        let ok = match self.c {
            Some(c) => v.abs() < c,
            None => v.is_finite(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::VelocityOutOfRange {
                v,
                c: self.c.unwrap_or(f64::INFINITY),
            })
        }
    }

    /// Divisor that converts a length into a time (`c`, or 1 when Galilean).
    pub(crate) fn length_scale(&self) -> f64 {
        self.c.unwrap_or(1.0)
    }
}

impl Default for KinematicParams {
    fn default() -> Self {
        Self::NATURAL
    }
}

impl FromStr for KinematicParams {
    type Err = Error;

    /// Accepts a positive real or the literal `inf`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") {
            return Ok(Self::GALILEAN);
        }
        let c: f64 = s
            .parse()
            .map_err(|_| Error::InvalidParams(format!("cannot parse c from {s:?}")))?;
        if c == f64::INFINITY {
            Ok(Self::GALILEAN)
        } else {
            Self::finite(c)
        }
    }
}

impl fmt::Display for KinematicParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.c {
            Some(c) => write!(f, "{c}"),
            None => f.write_str("inf"),
        }
    }
}

/// Tolerances shared by the property suite and the CLI.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative tolerance for composed laws (associativity, action laws, invariance).
    pub rel: f64,
    /// Absolute tolerance for identity-type laws and unit determinants.
    pub abs: f64,
    /// Tolerance for comparisons against finite-difference derivatives.
    pub fd: f64,
    /// Agreement between Galilean closed forms and generic code at `c = ∞`.
    pub agreement: f64,
    /// Allowed distance of a fitted contraction slope from −2.
    pub slope: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            rel: 1e-9,
            abs: 1e-12,
            fd: 1e-6,
            agreement: 1e-14,
            slope: 0.1,
        }
    }
}

/// Components expressed in natural units, where every length is divided by
/// `c` (so lengths become times and velocities become fractions of `c`).
///
/// Deviations between two values of the same type are measured on these
/// components, which keeps a single absolute tolerance meaningful when `c`
/// is large. In the Galilean regime the scale is 1.
pub trait NaturalUnits<const N: usize> {
    fn natural(&self, params: KinematicParams) -> [f64; N];
}

/// Largest componentwise `|a - b|` in natural units.
pub fn abs_deviation<T: NaturalUnits<N>, const N: usize>(
    a: &T,
    b: &T,
    params: KinematicParams,
) -> f64 {
    let (a, b) = (a.natural(params), b.natural(params));
    a.iter()
        .zip(&b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Largest componentwise `|a - b| / max(1, |a|, |b|)` in natural units.
pub fn rel_deviation<T: NaturalUnits<N>, const N: usize>(
    a: &T,
    b: &T,
    params: KinematicParams,
) -> f64 {
    let (a, b) = (a.natural(params), b.natural(params));
    a.iter()
        .zip(&b)
        .map(|(x, y)| scalar_rel(*x, *y))
        .fold(0.0, f64::max)
}

/// `|a - b| / max(1, |a|, |b|)`.
pub fn scalar_rel(a: f64, b: f64) -> f64 {
    let d = (a - b).abs();
    if d == 0.0 {
        0.0
    } else {
        d / a.abs().max(b.abs()).max(1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inv_c2_is_zero_only_when_galilean() {
        assert_eq!(KinematicParams::GALILEAN.inv_c2(), 0.0);
        assert_eq!(KinematicParams::finite(2.0).unwrap().inv_c2(), 0.25);
        assert!(KinematicParams::finite(3e8).unwrap().inv_c2() > 0.0);
    }

    #[test]
    fn rejects_non_positive_c() {
        for bad in [0.0, -1.0, f64::NAN, f64::NEG_INFINITY] {
            assert!(KinematicParams::finite(bad).is_err());
        }
        assert!("0".parse::<KinematicParams>().is_err());
        assert!("-3".parse::<KinematicParams>().is_err());
        assert!("nan".parse::<KinematicParams>().is_err());
        assert!("light".parse::<KinematicParams>().is_err());
    }

    #[test]
    fn parses_inf_literal() {
        assert_eq!(
            "inf".parse::<KinematicParams>().unwrap(),
            KinematicParams::GALILEAN
        );
        assert_eq!("2.5".parse::<KinematicParams>().unwrap().c(), Some(2.5));
        assert_eq!(KinematicParams::GALILEAN.to_string(), "inf");
    }

    #[test]
    fn velocity_bound_is_strict() {
        let p = KinematicParams::NATURAL;
        assert!(p.check_velocity(0.999).is_ok());
        assert!(matches!(
            p.check_velocity(1.0),
            Err(Error::VelocityOutOfRange { .. })
        ));
        assert!(p.check_velocity(-1.0).is_err());
        assert!(KinematicParams::GALILEAN.check_velocity(1e6).is_ok());
        assert!(KinematicParams::GALILEAN.check_velocity(f64::NAN).is_err());
    }
}
