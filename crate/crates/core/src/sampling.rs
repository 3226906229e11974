//! Seeded random inputs for the property suite.
//!
//! Velocities are uniform in `(−0.99c, 0.99c)` for finite `c` and in
//! `(−10, 10)` when Galilean. Translations and moments are uniform in
//! `(−10, 10)`; forces avoid `(−0.1, 0.1)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coadjoint::DualVector;
use crate::group::{ExtendedGroupElement, GroupElement};
use crate::params::KinematicParams;
use crate::realization::{PhasePoint, SpacetimePoint};

pub const RANGE: f64 = 10.0;
pub const MAX_BETA: f64 = 0.99;
pub const MIN_FORCE: f64 = 0.1;

#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
    params: KinematicParams,
}

impl Sampler {
    pub fn new(seed: u64, params: KinematicParams) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            params,
        }
    }

    pub fn params(&self) -> KinematicParams {
        self.params
    }

    /// Uniform in the open interval `(−r, r)`.
    pub fn symmetric(&mut self, r: f64) -> f64 {
        loop {
            let u = self.rng.gen_range(-r..r);
            if u != -r {
                return u;
            }
        }
    }

    pub fn velocity(&mut self) -> f64 {
        match self.params.c() {
            Some(c) => self.symmetric(MAX_BETA * c),
            None => self.symmetric(RANGE),
        }
    }

    pub fn coordinate(&mut self) -> f64 {
        self.symmetric(RANGE)
    }

    /// Uniform on `(−10, −0.1] ∪ [0.1, 10)`.
    pub fn force(&mut self) -> f64 {
        let magnitude = self.rng.gen_range(MIN_FORCE..RANGE);
        if self.rng.gen::<bool>() {
            magnitude
        } else {
            -magnitude
        }
    }

    pub fn group_element(&mut self) -> GroupElement {
        GroupElement {
            v: self.velocity(),
            tau: self.coordinate(),
            x: self.coordinate(),
        }
    }

    pub fn extended_group_element(&mut self) -> ExtendedGroupElement {
        let g = self.group_element();
        g.extend(self.coordinate())
    }

    /// A moment with `|f| ≥ 0.1`.
    pub fn dual_vector(&mut self) -> DualVector {
        DualVector {
            k: self.coordinate(),
            e: self.coordinate(),
            p: self.coordinate(),
            f: self.force(),
        }
    }

    pub fn phase_point(&mut self) -> PhasePoint {
        PhasePoint {
            p: self.coordinate(),
            q: self.coordinate(),
        }
    }

    pub fn spacetime_point(&mut self) -> SpacetimePoint {
        SpacetimePoint {
            t: self.coordinate(),
            q: self.coordinate(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_a_seed() {
        let mut a = Sampler::new(42, KinematicParams::NATURAL);
        let mut b = Sampler::new(42, KinematicParams::NATURAL);
        for _ in 0..100 {
            assert_eq!(a.group_element(), b.group_element());
            assert_eq!(a.dual_vector(), b.dual_vector());
        }
    }

    #[test]
    fn respects_ranges() {
        for params in [
            KinematicParams::NATURAL,
            KinematicParams::finite(3e8).unwrap(),
            KinematicParams::GALILEAN,
        ] {
            let mut s = Sampler::new(7, params);
            for _ in 0..2000 {
                let g = s.group_element();
                assert!(g.check(params).is_ok());
                if let Some(c) = params.c() {
                    assert!(g.v.abs() < MAX_BETA * c);
                } else {
                    assert!(g.v.abs() < RANGE);
                }
                let mu = s.dual_vector();
                assert!(mu.f.abs() >= MIN_FORCE && mu.f.abs() < RANGE);
                assert!(mu.k.abs() < RANGE && mu.e.abs() < RANGE && mu.p.abs() < RANGE);
            }
        }
    }
}
