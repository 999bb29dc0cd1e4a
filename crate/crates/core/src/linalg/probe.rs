use alloc::vec::Vec;

use num_rational::BigRational;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::SparseMat;
use crate::scalars::RatFunc;

/// Deterministic stream of random rational sample points.
pub struct PointSampler {
    rng: ChaCha8Rng,
}

impl PointSampler {
    pub fn new(seed: u64) -> Self {
        PointSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn next_point(&mut self) -> BigRational {
        let num = (self.rng.next_u64() % 20_001) as i64 - 10_000;
        let den = (self.rng.next_u64() % 997) as i64 + 1;
        BigRational::new(num.into(), den.into())
    }
}

/// One-sided randomized equality test: `false` is always correct; `true`
/// means `a - b` vanished at `trials` random points avoiding every pole, and
/// should be confirmed with exact comparison when it matters.
pub fn probably_equal(a: &SparseMat<RatFunc>, b: &SparseMat<RatFunc>, trials: usize, seed: u64) -> bool {
    if a.shape() != b.shape() {
        return false;
    }
    let diff = match a.sub(b) {
        Ok(d) => d,
        Err(_) => return false,
    };
    if diff.is_zero() {
        return true;
    }
    let entries: Vec<&RatFunc> = diff.entries().map(|(_, _, v)| v).collect();
    let mut sampler = PointSampler::new(seed);
    let mut done = 0;
    while done < trials {
        let p = sampler.next_point();
        let values: Option<Vec<BigRational>> = entries.iter().map(|v| v.eval(&p).ok()).collect();
        let Some(values) = values else {
            continue;
        };
        if values.iter().any(|v| *v != BigRational::from_integer(0.into())) {
            return false;
        }
        done += 1;
    }
    true
}
