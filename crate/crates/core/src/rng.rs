//! Deterministic element sampling for randomized spot checks.
//!
//! Reports must be reproducible bit-exactly, so the sampler is a fixed
//! 64-bit linear congruential generator (Knuth's MMIX multiplier
//! 6364136223846793005 and increment 1442695040888963407) rather than a
//! seedable external RNG. Coordinates are drawn uniformly from {-3..3}.

use crate::scalar::{Field, Scalar};

pub const DEFAULT_SEED: u64 = 0xA17E;

#[derive(Debug, Clone)]
pub struct Sampler {
    state: u64,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.state
    }

    /// A coordinate in {-3, ..., 3}.
    pub fn coord(&mut self, field: Field) -> Scalar {
        let r = (self.next_u64() >> 33) % 7;
        field.int(r as i64 - 3)
    }

    pub fn element(&mut self, field: Field, dim: usize) -> Vec<Scalar> {
        (0..dim).map(|_| self.coord(field)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let k = Field::rationals();
        let a: Vec<_> = Sampler::new(DEFAULT_SEED).element(k, 8);
        let b: Vec<_> = Sampler::new(DEFAULT_SEED).element(k, 8);
        assert_eq!(a, b);
    }

    #[test]
    fn coords_in_range() {
        let k = Field::rationals();
        let mut s = Sampler::new(1);
        for _ in 0..100 {
            let c = s.coord(k);
            let val: i64 = (-3..=3).find(|&n| c == k.int(n)).expect("in range");
            assert!((-3..=3).contains(&val));
        }
    }
}
