//! Acceptance criteria. Each test prints one `[PASS]`/`[FAIL]` line; run with
//! `cargo test --test acceptance -- --nocapture --test-threads=1` to see them
//! in order.
//!
//! Finite-difference derivatives here are computed locally, independent of
//! the crate's own `fd` helpers.

use std::process::Command;

use poincare_orbit::algebra::{AlgebraElement, Generator, StructureConstants};
use poincare_orbit::coadjoint::{
    casimir, coadjoint_action, kirillov_matrix, lie_poisson_bracket, DualVector,
};
use poincare_orbit::contraction::{
    contraction_rate, galilei_compose, galilei_phase_action, galilei_spacetime_action,
    ContractionSample,
};
use poincare_orbit::group::{compose, extended_compose, inverse, GroupElement};
use poincare_orbit::realization::{
    action_jacobian, darboux_from_dual, interval, phase_action, spacetime_action, Chart, PhasePoint,
};
use poincare_orbit::sampling::Sampler;
use poincare_orbit::{abs_deviation, rel_deviation, scalar_rel, KinematicParams};

const SEED: u64 = 42;
const CASES: usize = 1000;
const REL_TOL: f64 = 1e-9;
const ABS_TOL: f64 = 1e-12;
const FD_TOL: f64 = 1e-6;
const AGREEMENT_TOL: f64 = 1e-14;
const SLOPE_TOL: f64 = 0.1;
const C_GRID: [f64; 5] = [1e2, 1e3, 1e4, 1e5, 1e6];

const C1: KinematicParams = KinematicParams::NATURAL;

fn check(id: u32, what: &str, dev: f64, tol: f64) {
    let pass = dev <= tol;
    println!(
        "[{}] criterion {id:>2}: {what} (max deviation {dev:.3e}, tolerance {tol:.1e})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {id}: {what}: {dev:e} > {tol:e}");
}

fn regimes() -> [(&'static str, KinematicParams); 3] {
    [
        ("c=1", C1),
        ("c=3e8", KinematicParams::finite(3e8).unwrap()),
        ("c=inf", KinematicParams::GALILEAN),
    ]
}

fn fd_gradient(f: impl Fn([f64; 4]) -> f64, x: [f64; 4]) -> [f64; 4] {
    std::array::from_fn(|i| {
        let h = 1e-6 * x[i].abs().max(1.0);
        let (mut a, mut b) = (x, x);
        a[i] += h;
        b[i] -= h;
        (f(a) - f(b)) / (a[i] - b[i])
    })
}

/// FD gradient of `𝒦` as an algebra element on `(K, P, E, F)`.
fn casimir_gradient(mu: DualVector, params: KinematicParams) -> AlgebraElement {
    let g = fd_gradient(
        |[k, e, p, f]| {
            casimir(DualVector::new(k, e, p, f), params)
                .unwrap()
                .casimir
        },
        [mu.k, mu.e, mu.p, mu.f],
    );
    AlgebraElement::new(g[0], g[2], g[1], g[3])
}

#[test]
fn criterion_01_group_laws() {
    for (label, params) in regimes() {
        let mut s = Sampler::new(SEED, params);
        let (mut assoc, mut inv) = (0.0_f64, 0.0_f64);
        for _ in 0..CASES {
            let (a, b, c) = (s.group_element(), s.group_element(), s.group_element());
            let l = compose(compose(a, b, params).unwrap(), c, params).unwrap();
            let r = compose(a, compose(b, c, params).unwrap(), params).unwrap();
            assoc = assoc.max(rel_deviation(&l, &r, params));
            let ai = inverse(a, params).unwrap();
            let e = GroupElement::IDENTITY;
            inv = inv
                .max(abs_deviation(&compose(a, ai, params).unwrap(), &e, params))
                .max(abs_deviation(&compose(ai, a, params).unwrap(), &e, params));
        }
        check(1, &format!("associativity, {label}"), assoc, REL_TOL);
        check(1, &format!("inverse law, {label}"), inv, ABS_TOL);
    }
}

#[test]
fn criterion_02_cocycle() {
    let mut s = Sampler::new(SEED, C1);
    let (mut assoc, mut proj) = (0.0_f64, 0.0_f64);
    for _ in 0..CASES {
        let (a, b, c) = (
            s.extended_group_element(),
            s.extended_group_element(),
            s.extended_group_element(),
        );
        let l = extended_compose(extended_compose(a, b, C1).unwrap(), c, C1).unwrap();
        let r = extended_compose(a, extended_compose(b, c, C1).unwrap(), C1).unwrap();
        assoc = assoc.max(rel_deviation(&l, &r, C1));
        let h = extended_compose(a, b, C1).unwrap();
        let g = compose(a.project(), b.project(), C1).unwrap();
        proj = proj.max(abs_deviation(&h.project(), &g, C1));
    }
    check(2, "extended associativity including zeta", assoc, REL_TOL);
    check(
        2,
        "projection to G commutes with composition (exact)",
        proj,
        0.0,
    );
}

#[test]
fn criterion_03_jacobi() {
    for (label, params) in regimes() {
        let sc = StructureConstants::new(params);
        check(
            3,
            &format!("Jacobi identity, {label} (exact)"),
            sc.jacobi_residual(),
            0.0,
        );
        check(
            3,
            &format!("antisymmetry, {label} (exact)"),
            sc.antisymmetry_residual(),
            0.0,
        );
    }
}

#[test]
fn criterion_04_coadjoint_left_action() {
    let mut s = Sampler::new(SEED, C1);
    let mut dev = 0.0_f64;
    for _ in 0..CASES {
        let (g1, g2, mu) = (s.group_element(), s.group_element(), s.dual_vector());
        let l = coadjoint_action(compose(g1, g2, C1).unwrap(), mu, C1).unwrap();
        let r = coadjoint_action(g1, coadjoint_action(g2, mu, C1).unwrap(), C1).unwrap();
        dev = dev.max(rel_deviation(&l, &r, C1));
    }
    check(4, "Ad*_{g1 g2} = Ad*_{g1} Ad*_{g2}", dev, REL_TOL);
}

#[test]
fn criterion_05_casimir_invariance() {
    let mut s = Sampler::new(SEED, C1);
    let (mut df, mut dk) = (0.0_f64, 0.0_f64);
    for _ in 0..CASES {
        let (g, mu) = (s.group_element(), s.dual_vector());
        assert!(mu.f.abs() >= 0.1);
        let moved = coadjoint_action(g, mu, C1).unwrap();
        df = df.max((moved.f - mu.f).abs());
        let (a, b) = (casimir(mu, C1).unwrap(), casimir(moved, C1).unwrap());
        dk = dk.max(scalar_rel(a.casimir, b.casimir));
    }
    check(5, "f preserved exactly", df, 0.0);
    check(5, "Casimir preserved", dk, REL_TOL);
}

#[test]
fn criterion_06_lie_poisson_casimir() {
    let mut s = Sampler::new(SEED, C1);
    let mut dev = 0.0_f64;
    for _ in 0..100 {
        let mu = s.dual_vector();
        let grad = casimir_gradient(mu, C1);
        for g in Generator::ALL {
            let b = lie_poisson_bracket(&grad, &AlgebraElement::basis(g), mu, C1);
            dev = dev.max(b.abs());
        }
    }
    check(
        6,
        "|{K, coordinate}| for k, e, p, f at 100 points",
        dev,
        FD_TOL,
    );
}

#[test]
fn criterion_07_symplecticity() {
    let mut s = Sampler::new(SEED, C1);
    let (mut det_phase, mut det_st, mut fd) = (0.0_f64, 0.0_f64, 0.0_f64);
    for _ in 0..CASES {
        let (g, f, pt) = (s.group_element(), s.force(), s.phase_point());
        let j = action_jacobian(g, Chart::Phase { f }, C1).unwrap();
        det_phase = det_phase.max((j.det() - 1.0).abs());
        det_st = det_st.max((action_jacobian(g, Chart::Spacetime, C1).unwrap().det() - 1.0).abs());
        for col in 0..2 {
            let h = 1e-6 * [pt.p, pt.q][col].abs().max(1.0);
            let shift = |sign: f64| {
                let mut x = [pt.p, pt.q];
                x[col] += sign * h;
                let r = phase_action(g, PhasePoint::new(x[0], x[1]), f, C1).unwrap();
                [r.p, r.q]
            };
            let (hi, lo) = (shift(1.0), shift(-1.0));
            for row in 0..2 {
                let numeric = (hi[row] - lo[row]) / (2.0 * h);
                fd = fd.max(scalar_rel(numeric, j.0[row][col]));
            }
        }
    }
    check(7, "det of phase-chart linear part = 1", det_phase, ABS_TOL);
    check(
        7,
        "finite-difference Jacobian matches closed form",
        fd,
        FD_TOL,
    );
    check(
        7,
        "det of space-time linear part = 1 (f dt^dq)",
        det_st,
        ABS_TOL,
    );
}

#[test]
fn criterion_08_interval_invariance() {
    let mut s = Sampler::new(SEED, C1);
    let mut dev = 0.0_f64;
    for _ in 0..CASES {
        let (g, a, b) = (s.group_element(), s.spacetime_point(), s.spacetime_point());
        let before = interval(a, b, C1).unwrap();
        let after = interval(
            spacetime_action(g, a, C1).unwrap(),
            spacetime_action(g, b, C1).unwrap(),
            C1,
        )
        .unwrap();
        dev = dev.max(scalar_rel(before, after));
    }
    check(
        8,
        "ds^2 invariant under the space-time action, c=1",
        dev,
        REL_TOL,
    );
}

#[test]
fn criterion_09_chart_equivariance() {
    let mut s = Sampler::new(SEED, C1);
    let (mut st, mut ph) = (0.0_f64, 0.0_f64);
    for _ in 0..CASES {
        let (g, mu) = (s.group_element(), s.dual_vector());
        assert!(mu.f.abs() >= 0.1);
        let before = darboux_from_dual(mu).unwrap();
        let after = darboux_from_dual(coadjoint_action(g, mu, C1).unwrap()).unwrap();
        let st_img = spacetime_action(g, before.spacetime(), C1).unwrap();
        let ph_img = phase_action(g, before.phase(), mu.f, C1).unwrap();
        st = st.max(rel_deviation(&after.spacetime(), &st_img, C1));
        ph = ph.max(rel_deviation(&after.phase(), &ph_img, C1));
    }
    check(
        9,
        "chart of Ad* equals space-time action of chart",
        st,
        REL_TOL,
    );
    check(9, "chart of Ad* equals phase action of chart", ph, REL_TOL);
}

#[test]
fn criterion_10_contraction() {
    let gal = KinematicParams::GALILEAN;
    let mut s = Sampler::new(SEED, gal);
    let n = 64;
    let samples = [
        ContractionSample::Compose(
            (0..n)
                .map(|_| (s.group_element(), s.group_element()))
                .collect(),
        ),
        ContractionSample::Spacetime(
            (0..n)
                .map(|_| (s.group_element(), s.spacetime_point()))
                .collect(),
        ),
        ContractionSample::Phase(
            (0..n)
                .map(|_| (s.group_element(), s.phase_point(), s.force()))
                .collect(),
        ),
    ];
    for sample in &samples {
        let report = contraction_rate(sample, &C_GRID).unwrap();
        assert!(report.strictly_decreasing, "{report:?}");
        let slope = report.fitted_slope.expect("nondegenerate sample");
        check(
            10,
            &format!("{:?} slope {slope:.4} vs -2", sample.kind()),
            (slope + 2.0).abs(),
            SLOPE_TOL,
        );
    }

    let mut agree = 0.0_f64;
    for _ in 0..CASES {
        let (g, h) = (s.group_element(), s.group_element());
        let (st, ph, f) = (s.spacetime_point(), s.phase_point(), s.force());
        agree = agree
            .max(rel_deviation(
                &galilei_compose(g, h),
                &compose(g, h, gal).unwrap(),
                gal,
            ))
            .max(rel_deviation(
                &galilei_spacetime_action(g, st),
                &spacetime_action(g, st, gal).unwrap(),
                gal,
            ))
            .max(rel_deviation(
                &galilei_phase_action(g, ph, f).unwrap(),
                &phase_action(g, ph, f, gal).unwrap(),
                gal,
            ));
    }
    check(
        10,
        "Galilean closed forms vs generic code at c=inf",
        agree,
        AGREEMENT_TOL,
    );
}

#[test]
fn criterion_11_kirillov() {
    let m = kirillov_matrix(DualVector::new(0.0, 1.0, 2.0, 3.0), C1);
    let want = [[0.0, -2.0, -1.0], [2.0, 0.0, 3.0], [1.0, -3.0, 0.0]];
    let display =
        m.0.iter()
            .flatten()
            .zip(want.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
    check(
        11,
        "matches the displayed matrix at (e,p,f)=(1,2,3), c=1",
        display,
        0.0,
    );

    let mut s = Sampler::new(SEED, C1);
    let (mut asym, mut kernel) = (0.0_f64, 0.0_f64);
    for _ in 0..CASES {
        let mu = s.dual_vector();
        let m = kirillov_matrix(mu, C1);
        for i in 0..3 {
            for j in 0..3 {
                asym = asym.max((m.0[i][j] + m.0[j][i]).abs());
            }
        }
        let grad = casimir_gradient(mu, C1);
        let image = m.apply([grad[Generator::K], grad[Generator::E], grad[Generator::P]]);
        kernel = image.iter().map(|x| x.abs()).fold(kernel, f64::max);
    }
    check(11, "antisymmetry (exact)", asym, 0.0);
    check(11, "Casimir gradient lies in the kernel", kernel, FD_TOL);
}

fn cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_poincare-orbit"))
        .args(args)
        .output()
        .unwrap()
}

#[test]
fn criterion_12_cli() {
    let first = cli(&["verify", "--seed", "42", "--cases", "1000", "--c", "1"]);
    let code = first.status.code().unwrap_or(-1);
    check(
        12,
        "verify exits 0 on the full suite",
        f64::from(code.abs()),
        0.0,
    );

    let second = cli(&["verify", "--seed", "42", "--cases", "1000", "--c", "1"]);
    let same = first.stdout == second.stdout && !first.stdout.is_empty();
    check(
        12,
        "verify report byte-identical across runs",
        if same { 0.0 } else { 1.0 },
        0.0,
    );

    let args = [
        "orbit",
        "--f",
        "-0.75",
        "--casimir",
        "2.5",
        "--p",
        "-3:3:13",
        "--q",
        "-2:2:9",
    ];
    let orbit = cli(&args);
    assert_eq!(orbit.status.code(), Some(0));
    let csv = String::from_utf8(orbit.stdout.clone()).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("k,e,p,f,t,q"));
    let mut dev = 0.0_f64;
    let mut rows = 0;
    for line in lines {
        let x: Vec<f64> = line.split(',').map(|v| v.parse().unwrap()).collect();
        let inv = casimir(DualVector::new(x[0], x[1], x[2], x[3]), C1).unwrap();
        dev = dev.max((inv.casimir - 2.5).abs()).max((inv.f + 0.75).abs());
        rows += 1;
    }
    assert_eq!(rows, 13 * 9);
    check(
        12,
        "orbit rows self-validate against the Casimir",
        dev,
        1e-12,
    );
    let again = cli(&args);
    let same = again.stdout == orbit.stdout;
    check(
        12,
        "orbit output byte-identical across runs",
        if same { 0.0 } else { 1.0 },
        0.0,
    );

    let a = cli(&["contract", "--op", "phase", "--seed", "42"]);
    let b = cli(&["contract", "--op", "phase", "--seed", "42"]);
    let same = a.stdout == b.stdout && a.status.success();
    check(
        12,
        "contract output byte-identical across runs",
        if same { 0.0 } else { 1.0 },
        0.0,
    );
}
