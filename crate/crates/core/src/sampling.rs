//! Seeded random inputs for sweeps and property checks.
//!
//! Weight entries are `p/q` with `p` in `[-10, 10]` and `q` in `[1, 10]`;
//! entries of `r` are `p/q` with `p, q` in `[1, 10]`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::quiver::{Arrow, TypeAQuiver};
use crate::rational::Rational;
use crate::rep::IntervalModule;
use crate::stability::CentralCharge;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn weight_entry(&mut self) -> Rational {
        Rational::new(self.rng.random_range(-10..=10), self.rng.random_range(1..=10))
    }

    pub fn positive_entry(&mut self) -> Rational {
        Rational::new(self.rng.random_range(1..=10), self.rng.random_range(1..=10))
    }

    pub fn weight(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.weight_entry()).collect()
    }

    pub fn positive_vector(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.positive_entry()).collect()
    }

    pub fn charge(&mut self, n: usize) -> CentralCharge {
        let w = self.weight(n);
        let r = self.positive_vector(n);
        CentralCharge::new(w, r).expect("sampled r is positive")
    }

    /// A uniformly random orientation of `A_n`.
    pub fn quiver(&mut self, n: usize) -> TypeAQuiver {
        let arrows = (1..n).map(|_| if self.rng.random_bool(0.5) { Arrow::Right } else { Arrow::Left }).collect();
        TypeAQuiver::new(arrows)
    }

    /// A uniformly random vertex count in `lo..=hi`.
    pub fn size(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.random_range(lo..=hi)
    }

    /// A uniformly random indecomposable of `q`.
    pub fn interval(&mut self, q: &TypeAQuiver) -> IntervalModule {
        let n = q.n();
        let total = n * (n + 1) / 2;
        let mut pick = self.rng.random_range(0..total);
        for lo in 1..=n {
            let span = n - lo + 1;
            if pick < span {
                return IntervalModule::new(q, lo, lo + pick).expect("in range");
            }
            pick -= span;
        }
        unreachable!("pick < total")
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.random_range(0..bound)
    }
}
