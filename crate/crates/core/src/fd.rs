//! Central finite differences, used as an independent check on closed-form
//! derivatives.

/// Step `1e-6 · max(1, |x|)`.
pub fn step(x: f64) -> f64 {
    1e-6 * x.abs().max(1.0)
}

/// Gradient of `f` at `x` by central differences.
pub fn gradient<const N: usize>(f: impl Fn([f64; N]) -> f64, x: [f64; N]) -> [f64; N] {
    std::array::from_fn(|i| {
        let h = step(x[i]);
        let (mut hi, mut lo) = (x, x);
        hi[i] += h;
        lo[i] -= h;
        (f(hi) - f(lo)) / (hi[i] - lo[i])
    })
}

/// Jacobian `J[i][j] = ∂f_i/∂x_j` by central differences.
pub fn jacobian<const N: usize, const M: usize>(
    f: impl Fn([f64; N]) -> [f64; M],
    x: [f64; N],
) -> [[f64; N]; M] {
    let mut jac = [[0.0; N]; M];
    for j in 0..N {
        let h = step(x[j]);
        let (mut hi, mut lo) = (x, x);
        hi[j] += h;
        lo[j] -= h;
        let (fh, fl) = (f(hi), f(lo));
        for i in 0..M {
            jac[i][j] = (fh[i] - fl[i]) / (hi[j] - lo[j]);
        }
    }
    jac
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_gradient() {
        let g = gradient(|[x, y]| x * x + 3.0 * x * y, [2.0, -1.0]);
        assert!((g[0] - 1.0).abs() < 1e-8);
        assert!((g[1] - 6.0).abs() < 1e-8);
    }

    #[test]
    fn linear_jacobian() {
        let j = jacobian(|[x, y]| [2.0 * x + y, -x + 4.0 * y], [0.5, 3.0]);
        let want = [[2.0, 1.0], [-1.0, 4.0]];
        for (row, w) in j.iter().zip(want) {
            for (a, b) in row.iter().zip(w) {
                assert!((a - b).abs() < 1e-8);
            }
        }
    }
}
