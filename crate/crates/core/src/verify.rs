use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Size thresholds and sample counts for the identity checkers.
#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// Groups up to this order get fully exhaustive six-variable checks.
    pub exhaustive_order: usize,
    /// Upper bound for exhaustive O(n⁴) style checks; above it they sample.
    pub max_exhaustive: usize,
    /// Random tuples drawn by sampled identity checks.
    pub samples: usize,
    /// Random triples drawn by sampled associativity checks.
    pub triple_samples: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            exhaustive_order: 8,
            max_exhaustive: 24,
            samples: 10_000,
            triple_samples: 100_000,
            seed: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Coverage {
    Exhaustive,
    Sampled(usize),
}

impl VerifyConfig {
    pub fn with_seed(seed: u64) -> Self {
        VerifyConfig { seed, ..Default::default() }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    /// Coverage of the six-variable identity checks for a group of order `n`.
    pub fn identity_coverage(&self, n: usize) -> Coverage {
        if n <= self.exhaustive_order {
            Coverage::Exhaustive
        } else {
            Coverage::Sampled(self.samples)
        }
    }

    /// Coverage of associativity over basis triples for a group of order `n`.
    pub fn triple_coverage(&self, n: usize) -> Coverage {
        if n <= self.exhaustive_order {
            Coverage::Exhaustive
        } else {
            Coverage::Sampled(self.triple_samples)
        }
    }
}
