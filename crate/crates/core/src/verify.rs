//! The seeded property suite behind `poincare-orbit verify`.
//!
//! Each property draws its own inputs from a [`Sampler`] seeded by the run
//! seed and the property name, so results do not depend on which other
//! properties ran. Deviations are reduced by `max`; an operation that errors
//! counts as an infinite deviation.

use serde::Serialize;

use crate::algebra::{bracket, AlgebraElement, Generator, StructureConstants};
use crate::cli::{format_csv_row, orbit_rows};
use crate::coadjoint::{
    casimir, coadjoint_action, kirillov_matrix, lie_poisson_bracket, orbit_point, DualVector,
    OrbitInvariants,
};
use crate::contraction::{
    contraction_rate, galilei_compose, galilei_inverse, galilei_phase_action,
    galilei_spacetime_action, ContractionSample,
};
use crate::error::{Error, Result};
use crate::fd;
use crate::group::{
    compose, extended_compose, inverse, velocity_add, ExtendedGroupElement, GroupElement,
};
use crate::params::{
    abs_deviation, rel_deviation, scalar_rel, KinematicParams, NaturalUnits, Tolerances,
};
use crate::realization::{
    action_jacobian, darboux_from_dual, dual_from_darboux, interval, phase_action,
    spacetime_action, Chart, PhasePoint, SpacetimePoint,
};
use crate::sampling::Sampler;

/// Decades used for the contraction-rate properties.
pub const CONTRACTION_GRID: [f64; 5] = [1e2, 1e3, 1e4, 1e5, 1e6];

/// Inputs per contraction-rate sample.
pub const CONTRACTION_SAMPLE_SIZE: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub cases: usize,
    pub params: KinematicParams,
    pub tol: Tolerances,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            cases: 1000,
            params: KinematicParams::NATURAL,
            tol: Tolerances::default(),
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.cases == 0 {
            return Err(Error::InvalidParams("cases must be at least 1".into()));
        }
        let t = &self.tol;
        for (name, value) in [("rel_tol", t.rel), ("abs_tol", t.abs)] {
            if !(value > 0.0 && value.is_finite()) {
                return Err(Error::InvalidParams(format!(
                    "{name} must be a finite positive real, got {value}"
                )));
            }
        }
        Ok(())
    }
}

/// One line of the verification report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyResult {
    pub name: String,
    pub cases: usize,
    /// `None` when a case produced NaN or an error.
    pub max_deviation: Option<f64>,
    pub tolerance: f64,
    pub pass: bool,
}

impl PropertyResult {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report lines always serialize")
    }
}

fn name_seed(seed: u64, name: &str) -> u64 {
    // FNV-1a
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    seed ^ h
}

struct Runner<'a> {
    cfg: &'a SuiteConfig,
    results: Vec<PropertyResult>,
}

impl Runner<'_> {
    fn sampler(&self, name: &str, params: KinematicParams) -> Sampler {
        Sampler::new(name_seed(self.cfg.seed, name), params)
    }

    /// Runs `check` `cases` times under `params`, keeping the largest deviation.
    fn property_with(
        &mut self,
        name: &str,
        params: KinematicParams,
        cases: usize,
        tolerance: f64,
        mut check: impl FnMut(&mut Sampler) -> Result<f64>,
    ) {
        let mut rng = self.sampler(name, params);
        let mut worst = Some(0.0_f64);
        for _ in 0..cases {
            let dev = match check(&mut rng) {
                Ok(d) if !d.is_nan() => Some(d),
                _ => None,
            };
            worst = match (worst, dev) {
                (Some(w), Some(d)) => Some(w.max(d)),
                _ => None,
            };
        }
        let pass = matches!(worst, Some(w) if w <= tolerance);
        self.results.push(PropertyResult {
            name: name.to_string(),
            cases,
            max_deviation: worst,
            tolerance,
            pass,
        });
    }

    fn property(
        &mut self,
        name: &str,
        tolerance: f64,
        check: impl FnMut(&mut Sampler) -> Result<f64>,
    ) {
        let (params, cases) = (self.cfg.params, self.cfg.cases);
        self.property_with(name, params, cases, tolerance, check)
    }
}

/// Runs every property and returns the report ordered by property name.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<PropertyResult>> {
    cfg.validate()?;
    let mut r = Runner {
        cfg,
        results: Vec::new(),
    };
    algebra_properties(&mut r);
    group_properties(&mut r);
    coadjoint_properties(&mut r);
    realization_properties(&mut r);
    contraction_properties(&mut r);
    io_properties(&mut r);
    let mut results = r.results;
    results.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(results)
}

fn random_algebra(s: &mut Sampler) -> AlgebraElement {
    AlgebraElement::new(
        s.coordinate(),
        s.coordinate(),
        s.coordinate(),
        s.coordinate(),
    )
}

fn algebra_rel(a: &AlgebraElement, b: &AlgebraElement) -> f64 {
    a.0.iter()
        .zip(&b.0)
        .map(|(x, y)| scalar_rel(*x, *y))
        .fold(0.0, f64::max)
}

fn algebra_properties(r: &mut Runner) {
    let params = r.cfg.params;
    let rel = r.cfg.tol.rel;

    r.property_with("algebra.jacobi_identity", params, 1, 0.0, |_| {
        Ok(StructureConstants::new(params).jacobi_residual())
    });
    r.property_with(
        "algebra.structure_constants_antisymmetry",
        params,
        1,
        0.0,
        |_| Ok(StructureConstants::new(params).antisymmetry_residual()),
    );
    r.property("algebra.bracket_antisymmetry", rel, |s| {
        let (a, b) = (random_algebra(s), random_algebra(s));
        Ok(algebra_rel(
            &bracket(&a, &b, params),
            &(-1.0 * bracket(&b, &a, params)),
        ))
    });
    r.property("algebra.bracket_bilinearity", rel, |s| {
        let (a, b, c) = (random_algebra(s), random_algebra(s), random_algebra(s));
        let (x, y) = (s.coordinate(), s.coordinate());
        let lhs = bracket(&(x * a + y * b), &c, params);
        let rhs = x * bracket(&a, &c, params) + y * bracket(&b, &c, params);
        let lhs2 = bracket(&c, &(x * a + y * b), params);
        let rhs2 = x * bracket(&c, &a, params) + y * bracket(&c, &b, params);
        Ok(algebra_rel(&lhs, &rhs).max(algebra_rel(&lhs2, &rhs2)))
    });
    r.property("algebra.f_central", 0.0, |s| {
        let a = random_algebra(s);
        let f = AlgebraElement::basis(Generator::F);
        let z = bracket(&f, &a, params);
        Ok(z.0.iter().map(|c| c.abs()).fold(0.0, f64::max))
    });
}

fn group_properties(r: &mut Runner) {
    let params = r.cfg.params;
    let Tolerances { rel, abs, .. } = r.cfg.tol;

    r.property("group.associativity", rel, |s| {
        let (a, b, c) = (s.group_element(), s.group_element(), s.group_element());
        let left = compose(compose(a, b, params)?, c, params)?;
        let right = compose(a, compose(b, c, params)?, params)?;
        Ok(rel_deviation(&left, &right, params))
    });
    r.property("group.identity_law", 0.0, |s| {
        let g = s.group_element();
        let e = GroupElement::IDENTITY;
        let exact_at_identity = abs_deviation(&compose(e, e, params)?, &e, params)
            + abs_deviation(&inverse(e, params)?, &e, params);
        Ok(abs_deviation(&compose(e, g, params)?, &g, params)
            .max(abs_deviation(&compose(g, e, params)?, &g, params))
            .max(exact_at_identity))
    });
    r.property("group.inverse_law", abs, |s| {
        let g = s.group_element();
        let gi = inverse(g, params)?;
        let e = GroupElement::IDENTITY;
        Ok(
            abs_deviation(&compose(g, gi, params)?, &e, params).max(abs_deviation(
                &compose(gi, g, params)?,
                &e,
                params,
            )),
        )
    });
    r.property("group.velocity_bound", 0.0, |s| {
        let (a, b) = (s.velocity(), s.velocity());
        let w = velocity_add(a, b, params)?;
        Ok(if params.check_velocity(w).is_ok() {
            0.0
        } else {
            f64::INFINITY
        })
    });
    r.property("group.extended_associativity", rel, |s| {
        let (a, b, c) = (
            s.extended_group_element(),
            s.extended_group_element(),
            s.extended_group_element(),
        );
        let left = extended_compose(extended_compose(a, b, params)?, c, params)?;
        let right = extended_compose(a, extended_compose(b, c, params)?, params)?;
        Ok(rel_deviation(&left, &right, params))
    });
    r.property("group.extended_identity_law", 0.0, |s| {
        let h = s.extended_group_element();
        let e = ExtendedGroupElement::IDENTITY;
        Ok(
            abs_deviation(&extended_compose(e, h, params)?, &h, params).max(abs_deviation(
                &extended_compose(h, e, params)?,
                &h,
                params,
            )),
        )
    });
    r.property("group.projection_homomorphism", 0.0, |s| {
        let (a, b) = (s.extended_group_element(), s.extended_group_element());
        let h = extended_compose(a, b, params)?;
        let g = compose(a.project(), b.project(), params)?;
        Ok(abs_deviation(&h.project(), &g, params))
    });
}

fn dual_rel(a: &DualVector, b: &DualVector, params: KinematicParams) -> f64 {
    rel_deviation(a, b, params)
}

/// Central-difference gradient of `𝒦` as an algebra element (slots matched by label).
fn casimir_gradient(mu: DualVector, params: KinematicParams) -> AlgebraElement {
    let g = fd::gradient(
        |x| {
            casimir(DualVector::from_array(x), params)
                .map(|inv| inv.casimir)
                .unwrap_or(f64::NAN)
        },
        mu.as_array(),
    );
    // (k, e, p, f) ↦ (K, P, E, F)
    AlgebraElement::new(g[0], g[2], g[1], g[3])
}

fn coadjoint_properties(r: &mut Runner) {
    let params = r.cfg.params;
    let Tolerances {
        rel, fd: fd_tol, ..
    } = r.cfg.tol;

    r.property("coadjoint.left_action", rel, |s| {
        let (g1, g2, mu) = (s.group_element(), s.group_element(), s.dual_vector());
        let left = coadjoint_action(compose(g1, g2, params)?, mu, params)?;
        let right = coadjoint_action(g1, coadjoint_action(g2, mu, params)?, params)?;
        Ok(dual_rel(&left, &right, params))
    });
    r.property("coadjoint.identity_action", 0.0, |s| {
        let mu = s.dual_vector();
        Ok(abs_deviation(
            &coadjoint_action(GroupElement::IDENTITY, mu, params)?,
            &mu,
            params,
        ))
    });
    r.property("coadjoint.force_preserved", 0.0, |s| {
        let (g, mu) = (s.group_element(), s.dual_vector());
        Ok((coadjoint_action(g, mu, params)?.f - mu.f).abs())
    });
    r.property("coadjoint.casimir_invariance", rel, |s| {
        let (g, mu) = (s.group_element(), s.dual_vector());
        let before = casimir(mu, params)?;
        let after = casimir(coadjoint_action(g, mu, params)?, params)?;
        Ok(scalar_rel(before.casimir, after.casimir).max((before.f - after.f).abs()))
    });
    r.property("coadjoint.kirillov_antisymmetry", 0.0, |s| {
        let m = kirillov_matrix(s.dual_vector(), params);
        Ok(if m.is_antisymmetric() {
            0.0
        } else {
            f64::INFINITY
        })
    });
    r.property("coadjoint.kirillov_rank", 0.0, |s| {
        let m = kirillov_matrix(s.dual_vector(), params);
        Ok(if m.rank() == 2 { 0.0 } else { f64::INFINITY })
    });
    r.property("coadjoint.kirillov_kernel_casimir_gradient", fd_tol, |s| {
        let mu = s.dual_vector();
        let m = kirillov_matrix(mu, params);
        let grad = casimir_gradient(mu, params);
        let kep = [grad[Generator::K], grad[Generator::E], grad[Generator::P]];
        let image = m.apply(kep);
        // the closed-form kernel vector is parallel to the gradient
        let ker = m.kernel_vector();
        let cross = [
            ker[1] * kep[2] - ker[2] * kep[1],
            ker[2] * kep[0] - ker[0] * kep[2],
            ker[0] * kep[1] - ker[1] * kep[0],
        ];
        let norm = |v: [f64; 3]| v.iter().map(|x| x * x).sum::<f64>().sqrt();
        let parallel = norm(cross) / (norm(ker) * norm(kep));
        Ok(image.iter().map(|x| x.abs()).fold(parallel, f64::max))
    });
    r.property("coadjoint.lie_poisson_antisymmetry", rel, |s| {
        let (a, b, mu) = (random_algebra(s), random_algebra(s), s.dual_vector());
        Ok(scalar_rel(
            lie_poisson_bracket(&a, &b, mu, params),
            -lie_poisson_bracket(&b, &a, mu, params),
        ))
    });
    r.property("coadjoint.lie_poisson_linearity", rel, |s| {
        let (a, b) = (random_algebra(s), random_algebra(s));
        let (m1, m2) = (s.dual_vector(), s.dual_vector());
        let (x, y) = (s.coordinate(), s.coordinate());
        let mix = DualVector::from_array(std::array::from_fn(|i| {
            x * m1.as_array()[i] + y * m2.as_array()[i]
        }));
        Ok(scalar_rel(
            lie_poisson_bracket(&a, &b, mix, params),
            x * lie_poisson_bracket(&a, &b, m1, params)
                + y * lie_poisson_bracket(&a, &b, m2, params),
        ))
    });
    r.property("coadjoint.lie_poisson_casimir", fd_tol, |s| {
        let mu = s.dual_vector();
        let grad = casimir_gradient(mu, params);
        Ok(Generator::ALL
            .iter()
            .map(|g| lie_poisson_bracket(&grad, &AlgebraElement::basis(*g), mu, params).abs())
            .fold(0.0, f64::max))
    });
    r.property("coadjoint.orbit_point_round_trip", rel, |s| {
        let mu = s.dual_vector();
        let d = darboux_from_dual(mu)?;
        let back = orbit_point(casimir(mu, params)?, d.p, d.q, params)?;
        Ok(dual_rel(&back, &mu, params))
    });
    r.property("coadjoint.orbit_point_invariants", rel, |s| {
        let inv = OrbitInvariants::new(s.force(), s.coordinate());
        let (p, q) = (s.coordinate(), s.coordinate());
        let got = casimir(orbit_point(inv, p, q, params)?, params)?;
        Ok(scalar_rel(got.casimir, inv.casimir).max((got.f - inv.f).abs()))
    });
}

fn realization_properties(r: &mut Runner) {
    let params = r.cfg.params;
    let Tolerances {
        rel,
        abs,
        fd: fd_tol,
        ..
    } = r.cfg.tol;

    r.property("realization.phase_left_action", rel, |s| {
        let (g1, g2, pt, f) = (
            s.group_element(),
            s.group_element(),
            s.phase_point(),
            s.force(),
        );
        let left = phase_action(compose(g1, g2, params)?, pt, f, params)?;
        let right = phase_action(g1, phase_action(g2, pt, f, params)?, f, params)?;
        Ok(rel_deviation(&left, &right, params))
    });
    r.property("realization.spacetime_left_action", rel, |s| {
        let (g1, g2, pt) = (s.group_element(), s.group_element(), s.spacetime_point());
        let left = spacetime_action(compose(g1, g2, params)?, pt, params)?;
        let right = spacetime_action(g1, spacetime_action(g2, pt, params)?, params)?;
        Ok(rel_deviation(&left, &right, params))
    });
    r.property("realization.phase_symplectic_det", abs, |s| {
        let j = action_jacobian(s.group_element(), Chart::Phase { f: s.force() }, params)?;
        Ok((j.det() - 1.0).abs())
    });
    r.property("realization.phase_jacobian_fd", fd_tol, |s| {
        let (g, pt, f) = (s.group_element(), s.phase_point(), s.force());
        // differentiate in natural units (p, q/c) so the step matches the scale of q
        let scale = params.length_scale();
        let [[a, b], [c, d]] = action_jacobian(g, Chart::Phase { f }, params)?.0;
        let closed = [[a, b * scale], [c / scale, d]];
        let numeric = fd::jacobian(
            |[p, u]| {
                phase_action(g, PhasePoint::new(p, u * scale), f, params)
                    .map(|r| r.natural(params))
                    .unwrap_or([f64::NAN; 2])
            },
            pt.natural(params),
        );
        Ok(closed
            .iter()
            .flatten()
            .zip(numeric.iter().flatten())
            .map(|(a, b)| scalar_rel(*a, *b))
            .fold(0.0, f64::max))
    });
    r.property("realization.spacetime_area_det", abs, |s| {
        let (g, mu) = (s.group_element(), s.dual_vector());
        let j = action_jacobian(g, Chart::Spacetime, params)?;
        // f dt∧dq is preserved: unit determinant with f unchanged along the orbit
        let df = (coadjoint_action(g, mu, params)?.f - mu.f).abs();
        Ok((j.det() - 1.0).abs().max(df))
    });
    if params.is_galilean() {
        r.property("realization.interval_galilean_limit", rel, |s| {
            let (g, a, b) = (s.group_element(), s.spacetime_point(), s.spacetime_point());
            // ds² has no finite form; the surviving invariant is the time difference
            let undefined = matches!(interval(a, b, params), Err(Error::GalileanRegime));
            let ga = spacetime_action(g, a, params)?;
            let gb = spacetime_action(g, b, params)?;
            let dt = scalar_rel(ga.t - gb.t, a.t - b.t);
            Ok(if undefined { dt } else { f64::INFINITY })
        });
    } else {
        r.property("realization.interval_invariance", rel, |s| {
            let (g, a, b) = (s.group_element(), s.spacetime_point(), s.spacetime_point());
            let before = interval(a, b, params)?;
            let after = interval(
                spacetime_action(g, a, params)?,
                spacetime_action(g, b, params)?,
                params,
            )?;
            Ok(scalar_rel(before, after))
        });
    }
    r.property("realization.chart_equivariance_spacetime", rel, |s| {
        let (g, mu) = (s.group_element(), s.dual_vector());
        let moved = darboux_from_dual(coadjoint_action(g, mu, params)?)?.spacetime();
        let acted = spacetime_action(g, darboux_from_dual(mu)?.spacetime(), params)?;
        Ok(rel_deviation(&moved, &acted, params))
    });
    r.property("realization.chart_equivariance_phase", rel, |s| {
        let (g, mu) = (s.group_element(), s.dual_vector());
        let moved = darboux_from_dual(coadjoint_action(g, mu, params)?)?.phase();
        let acted = phase_action(g, darboux_from_dual(mu)?.phase(), mu.f, params)?;
        Ok(rel_deviation(&moved, &acted, params))
    });
    r.property("realization.chart_consistency", rel, |s| {
        let (g, pt, f) = (s.group_element(), s.phase_point(), s.force());
        let via_phase = phase_action(g, pt, f, params)?;
        let via_spacetime = spacetime_action(g, SpacetimePoint::new(pt.p / f, pt.q), params)?;
        Ok(scalar_rel(via_phase.p / f, via_spacetime.t)
            .max(scalar_rel(via_phase.q, via_spacetime.q)))
    });
    r.property("realization.darboux_round_trip", rel, |s| {
        let inv = OrbitInvariants::new(s.force(), s.coordinate());
        let pt = s.phase_point();
        let d = darboux_from_dual(dual_from_darboux(inv, pt, params)?)?;
        Ok(rel_deviation(&d.phase(), &pt, params))
    });
}

fn contraction_properties(r: &mut Runner) {
    let gal = KinematicParams::GALILEAN;
    let cases = r.cfg.cases;
    let Tolerances {
        rel,
        abs,
        agreement,
        slope,
        ..
    } = r.cfg.tol;

    r.property_with(
        "contraction.agreement_compose",
        gal,
        cases,
        agreement,
        |s| {
            let (a, b) = (s.group_element(), s.group_element());
            Ok(
                rel_deviation(&galilei_compose(a, b), &compose(a, b, gal)?, gal)
                    .max(rel_deviation(&galilei_inverse(a), &inverse(a, gal)?, gal)),
            )
        },
    );
    r.property_with(
        "contraction.agreement_spacetime",
        gal,
        cases,
        agreement,
        |s| {
            let (g, pt) = (s.group_element(), s.spacetime_point());
            Ok(rel_deviation(
                &galilei_spacetime_action(g, pt),
                &spacetime_action(g, pt, gal)?,
                gal,
            ))
        },
    );
    r.property_with("contraction.agreement_phase", gal, cases, agreement, |s| {
        let (g, pt, f) = (s.group_element(), s.phase_point(), s.force());
        Ok(rel_deviation(
            &galilei_phase_action(g, pt, f)?,
            &phase_action(g, pt, f, gal)?,
            gal,
        ))
    });
    r.property_with("contraction.galilei_group_laws", gal, cases, abs, |s| {
        let (a, b, c) = (s.group_element(), s.group_element(), s.group_element());
        let e = GroupElement::IDENTITY;
        let assoc = rel_deviation(
            &galilei_compose(galilei_compose(a, b), c),
            &galilei_compose(a, galilei_compose(b, c)),
            gal,
        );
        let ident = abs_deviation(&galilei_compose(e, a), &a, gal).max(abs_deviation(
            &galilei_compose(a, e),
            &a,
            gal,
        ));
        let inv = rel_deviation(&galilei_compose(a, galilei_inverse(a)), &e, gal).max(
            rel_deviation(&galilei_compose(galilei_inverse(a), a), &e, gal),
        );
        Ok(assoc.max(ident).max(inv))
    });
    r.property_with("contraction.galilei_left_action", gal, cases, abs, |s| {
        let (g1, g2) = (s.group_element(), s.group_element());
        let (st, ph, f) = (s.spacetime_point(), s.phase_point(), s.force());
        let g12 = galilei_compose(g1, g2);
        let st_dev = rel_deviation(
            &galilei_spacetime_action(g12, st),
            &galilei_spacetime_action(g1, galilei_spacetime_action(g2, st)),
            gal,
        );
        let ph_dev = rel_deviation(
            &galilei_phase_action(g12, ph, f)?,
            &galilei_phase_action(g1, galilei_phase_action(g2, ph, f)?, f)?,
            gal,
        );
        Ok(st_dev.max(ph_dev))
    });
    r.property_with(
        "contraction.galilei_chart_consistency",
        gal,
        cases,
        rel,
        |s| {
            let (g, pt, f) = (s.group_element(), s.phase_point(), s.force());
            let ph = galilei_phase_action(g, pt, f)?;
            let st = galilei_spacetime_action(g, SpacetimePoint::new(pt.p / f, pt.q));
            Ok(scalar_rel(ph.p / f, st.t).max(scalar_rel(ph.q, st.q)))
        },
    );
    r.property_with(
        "contraction.extended_galilean_associativity",
        gal,
        cases,
        rel,
        |s| {
            let (a, b, c) = (
                s.extended_group_element(),
                s.extended_group_element(),
                s.extended_group_element(),
            );
            let left = extended_compose(extended_compose(a, b, gal)?, c, gal)?;
            let right = extended_compose(a, extended_compose(b, c, gal)?, gal)?;
            Ok(rel_deviation(&left, &right, gal))
        },
    );

    let seed = r.cfg.seed;
    for (name, kind) in [
        (
            "contraction.rate_compose",
            crate::contraction::OpKind::Compose,
        ),
        ("contraction.rate_phase", crate::contraction::OpKind::Phase),
        (
            "contraction.rate_spacetime",
            crate::contraction::OpKind::Spacetime,
        ),
    ] {
        r.property_with(name, gal, CONTRACTION_SAMPLE_SIZE, slope, |_| {
            let sample = random_contraction_sample(
                kind,
                name_seed(seed, name),
                CONTRACTION_SAMPLE_SIZE,
                false,
            );
            let report = contraction_rate(&sample, &CONTRACTION_GRID)?;
            match report.fitted_slope {
                Some(m) if report.strictly_decreasing => Ok((m + 2.0).abs()),
                _ => Ok(f64::INFINITY),
            }
        });
    }
}

/// A seeded sample for [`contraction_rate`], drawn with Galilean ranges.
/// `zero_boosts` forces every `v` to zero, which gives a degenerate report.
pub fn random_contraction_sample(
    kind: crate::contraction::OpKind,
    seed: u64,
    size: usize,
    zero_boosts: bool,
) -> ContractionSample {
    use crate::contraction::OpKind;
    let mut s = Sampler::new(seed, KinematicParams::GALILEAN);
    let element = |s: &mut Sampler| {
        let mut g = s.group_element();
        if zero_boosts {
            g.v = 0.0;
        }
        g
    };
    match kind {
        OpKind::Compose => ContractionSample::Compose(
            (0..size)
                .map(|_| (element(&mut s), element(&mut s)))
                .collect(),
        ),
        OpKind::Spacetime => ContractionSample::Spacetime(
            (0..size)
                .map(|_| (element(&mut s), s.spacetime_point()))
                .collect(),
        ),
        OpKind::Phase => ContractionSample::Phase(
            (0..size)
                .map(|_| (element(&mut s), s.phase_point(), s.force()))
                .collect(),
        ),
    }
}

fn round_trips<T>(value: &T) -> bool
where
    T: Serialize + serde::de::DeserializeOwned + PartialEq,
{
    serde_json::to_string(value)
        .ok()
        .and_then(|s| serde_json::from_str::<T>(&s).ok())
        .is_some_and(|back| back == *value)
}

fn io_properties(r: &mut Runner) {
    let params = r.cfg.params;
    let abs = r.cfg.tol.abs;

    r.property("cli.json_round_trip", 0.0, |s| {
        let ok = round_trips(&s.group_element())
            && round_trips(&s.extended_group_element())
            && round_trips(&s.dual_vector())
            && round_trips(&s.phase_point())
            && round_trips(&s.spacetime_point());
        Ok(if ok { 0.0 } else { f64::INFINITY })
    });
    r.property("cli.orbit_self_validation", abs, |s| {
        let inv = OrbitInvariants::new(s.force(), s.coordinate());
        let (p, q) = (s.coordinate(), s.coordinate());
        let rows = orbit_rows(inv, &[p], &[q], params)?;
        let mut worst: f64 = 0.0;
        for row in rows {
            // re-read the printed row, as a consumer of the CSV would
            let fields: Vec<f64> = format_csv_row(&row)
                .split(',')
                .map(|x| x.parse().unwrap_or(f64::NAN))
                .collect();
            let mu = DualVector::new(fields[0], fields[1], fields[2], fields[3]);
            let got = casimir(mu, params)?;
            worst = worst
                .max((got.casimir - inv.casimir).abs())
                .max((got.f - inv.f).abs());
        }
        Ok(worst)
    });
    let seed = r.cfg.seed;
    r.property_with("cli.determinism", params, 1, 0.0, |_| {
        let small = SuiteConfig {
            seed,
            cases: 16,
            params,
            tol: Tolerances::default(),
        };
        let once = deterministic_probe(&small)?;
        let twice = deterministic_probe(&small)?;
        Ok(if once == twice { 0.0 } else { f64::INFINITY })
    });
}

fn deterministic_probe(cfg: &SuiteConfig) -> Result<Vec<PropertyResult>> {
    let mut r = Runner {
        cfg,
        results: Vec::new(),
    };
    group_properties(&mut r);
    coadjoint_properties(&mut r);
    Ok(r.results)
}
