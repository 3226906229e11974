//! The centrally extended Lie algebra `ℋ` with nontrivial brackets
//! `[K,E] = P`, `[K,P] = E/c²`, `[P,E] = F`, and `F` central.
//!
//! Coefficient vectors and structure-constant indices always use the basis
//! order `(K, P, E, F)`.

use std::ops::{Add, Index, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::params::KinematicParams;

/// Basis generators in their fixed order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    /// Boosts.
    K,
    /// Paired with space translations `x` in `exp(xP + τE)`.
    P,
    /// Paired with time translations `τ` in `exp(xP + τE)`.
    E,
    /// Central generator.
    F,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::K, Generator::P, Generator::E, Generator::F];

    pub fn index(self) -> usize {
        self as usize
    }
}

/// `a_K K + a_P P + a_E E + a_F F`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct AlgebraElement(pub [f64; 4]);

impl AlgebraElement {
    pub const ZERO: Self = Self([0.0; 4]);

    pub fn new(a_k: f64, a_p: f64, a_e: f64, a_f: f64) -> Self {
        Self([a_k, a_p, a_e, a_f])
    }

    pub fn basis(g: Generator) -> Self {
        let mut a = [0.0; 4];
        a[g.index()] = 1.0;
        Self(a)
    }

    pub fn coeff(&self, g: Generator) -> f64 {
        self.0[g.index()]
    }

    pub fn coeffs(&self) -> [f64; 4] {
        self.0
    }
}

impl Index<Generator> for AlgebraElement {
    type Output = f64;

    fn index(&self, g: Generator) -> &f64 {
        &self.0[g.index()]
    }
}

impl Add for AlgebraElement {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for AlgebraElement {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl Mul<AlgebraElement> for f64 {
    type Output = AlgebraElement;

    fn mul(self, rhs: AlgebraElement) -> AlgebraElement {
        AlgebraElement(rhs.0.map(|a| self * a))
    }
}

/// `c^k_ij` with `[X_i, X_j] = Σ_k c^k_ij X_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureConstants {
    table: [[[f64; 4]; 4]; 4],
}

impl StructureConstants {
    pub fn new(params: KinematicParams) -> Self {
        use Generator::*;
        let mut table = [[[0.0; 4]; 4]; 4];
        let mut set = |i: Generator, j: Generator, k: Generator, value: f64| {
            table[i.index()][j.index()][k.index()] = value;
            table[j.index()][i.index()][k.index()] = -value;
        };
        set(K, E, P, 1.0);
        set(K, P, E, params.inv_c2());
        set(P, E, F, 1.0);
        Self { table }
    }

    /// `c^k_ij`, indexed `(i, j, k)`.
    pub fn get(&self, i: Generator, j: Generator, k: Generator) -> f64 {
        self.table[i.index()][j.index()][k.index()]
    }

    /// Largest `|c^k_ij + c^k_ji|`.
    pub fn antisymmetry_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    worst = worst.max((self.table[i][j][k] + self.table[j][i][k]).abs());
                }
            }
        }
        worst
    }

    /// Largest `|Σ_m c^m_ij c^n_mk + c^m_jk c^n_mi + c^m_ki c^n_mj|` over `i, j, k, n`.
    pub fn jacobi_residual(&self) -> f64 {
        let t = &self.table;
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    for n in 0..4 {
                        let s: f64 = (0..4)
                            .map(|m| {
                                t[i][j][m] * t[m][k][n]
                                    + t[j][k][m] * t[m][i][n]
                                    + t[k][i][m] * t[m][j][n]
                            })
                            .sum();
                        worst = worst.max(s.abs());
                    }
                }
            }
        }
        worst
    }

    pub fn bracket(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let mut out = [0.0; 4];
        for (i, ai) in a.0.iter().enumerate() {
            if *ai == 0.0 {
                continue;
            }
            for (j, bj) in b.0.iter().enumerate() {
                if *bj == 0.0 {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o += ai * bj * self.table[i][j][k];
                }
            }
        }
        AlgebraElement(out)
    }
}

/// Lie bracket on `ℋ`.
pub fn bracket(a: &AlgebraElement, b: &AlgebraElement, params: KinematicParams) -> AlgebraElement {
    StructureConstants::new(params).bracket(a, b)
}

#[cfg(test)]
mod tests {
    use super::Generator::*;
    use super::*;

    fn basis(g: Generator) -> AlgebraElement {
        AlgebraElement::basis(g)
    }

    #[test]
    fn defining_brackets() {
        let c1 = KinematicParams::NATURAL;
        assert_eq!(bracket(&basis(K), &basis(E), c1), basis(P));
        assert_eq!(bracket(&basis(E), &basis(K), c1), -1.0 * basis(P));
        assert_eq!(bracket(&basis(P), &basis(E), c1), basis(F));
        assert_eq!(bracket(&basis(K), &basis(P), c1), basis(E));
        let c2 = KinematicParams::finite(2.0).unwrap();
        assert_eq!(bracket(&basis(K), &basis(P), c2), 0.25 * basis(E));
        assert_eq!(
            bracket(&basis(K), &basis(P), KinematicParams::GALILEAN),
            AlgebraElement::ZERO
        );
    }

    #[test]
    fn f_is_central() {
        for params in [KinematicParams::NATURAL, KinematicParams::GALILEAN] {
            for g in Generator::ALL {
                assert_eq!(bracket(&basis(F), &basis(g), params), AlgebraElement::ZERO);
                assert_eq!(bracket(&basis(g), &basis(F), params), AlgebraElement::ZERO);
            }
        }
    }

    #[test]
    fn structure_constants_are_a_lie_algebra() {
        for params in [
            KinematicParams::NATURAL,
            KinematicParams::finite(3.0).unwrap(),
            KinematicParams::finite(3e8).unwrap(),
            KinematicParams::GALILEAN,
        ] {
            let sc = StructureConstants::new(params);
            assert_eq!(sc.antisymmetry_residual(), 0.0);
            assert_eq!(sc.jacobi_residual(), 0.0);
        }
    }

    #[test]
    fn table_entries() {
        let sc = StructureConstants::new(KinematicParams::finite(2.0).unwrap());
        assert_eq!(sc.get(K, E, P), 1.0);
        assert_eq!(sc.get(E, K, P), -1.0);
        assert_eq!(sc.get(K, P, E), 0.25);
        assert_eq!(sc.get(P, E, F), 1.0);
        assert_eq!(sc.get(K, K, K), 0.0);
    }
}
