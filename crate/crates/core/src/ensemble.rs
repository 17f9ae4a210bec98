//! Seeded generation of symmetric Toeplitz ensemble samples.
//!
//! A sample is determined by the first-row values `b_0, b_1, ..., b_{n-1}`;
//! the matrix entry at `(i, j)` is `b_{|i-j|}`. Entries along distinct
//! diagonals are independent draws from a standardized distribution
//! (mean 0, variance 1). The main diagonal defaults to zero, which only
//! shifts the spectrum.
//!
//! Randomness is counter-based: trial `t` of a configuration with master
//! seed `s` reads ChaCha8 stream `t` under seed `s`, so trials are
//! independent and reproducible regardless of execution order.

use num_rational::Ratio;
use rand::distr::uniform::SampleUniform;
use rand::distr::{Distribution, Uniform};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::Scalar;

/// Highest moment order with a tabulated closed form.
pub const MAX_TABULATED_MOMENT: u32 = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnsembleError {
    #[error("moment order {0} exceeds the tabulated range (max {MAX_TABULATED_MOMENT})")]
    UnsupportedMoment(u32),
    #[error("matrix dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
}

/// Standardized entry distribution: mean 0, variance 1, finite higher moments.
///
/// The three kinds span fourth moments 3, 1 and 9/5, which separates the
/// order-1/n terms of the finite-size fourth-moment formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistributionSpec {
    /// Standard normal.
    Gaussian,
    /// ±1 with equal probability.
    Rademacher,
    /// Uniform on [-√3, √3].
    UniformSym,
}

impl DistributionSpec {
    /// Exact `a`-th moment as a rational, for `a <= 8`.
    pub fn moment_rational(self, a: u32) -> Result<Ratio<i64>, EnsembleError> {
        if a > MAX_TABULATED_MOMENT {
            return Err(EnsembleError::UnsupportedMoment(a));
        }
        if a % 2 == 1 {
            // all three kinds are symmetric about 0
            return Ok(Ratio::from_integer(0));
        }
        let half = a / 2;
        Ok(match self {
            // (a-1)!! for even a
            DistributionSpec::Gaussian => {
                Ratio::from_integer([1, 1, 3, 15, 105][half as usize])
            }
            DistributionSpec::Rademacher => Ratio::from_integer(1),
            // ∫ x^a / (2√3) dx over [-√3, √3] = 3^(a/2) / (a + 1)
            DistributionSpec::UniformSym => {
                Ratio::new(3i64.pow(half), i64::from(a) + 1)
            }
        })
    }

    /// Exact `a`-th moment of the standardized distribution, for `a <= 8`.
    pub fn moment<F: Scalar>(self, a: u32) -> Result<F, EnsembleError> {
        let r = self.moment_rational(a)?;
        Ok(F::from_i64(*r.numer()).unwrap() / F::from_i64(*r.denom()).unwrap())
    }

    /// Fourth moment, used by the finite-size moment formulas.
    pub fn fourth_moment_rational(self) -> Ratio<i64> {
        self.moment_rational(4).expect("4 is tabulated")
    }

    fn draw<F>(self, rng: &mut ChaCha8Rng) -> F
    where
        F: Scalar + SampleUniform,
        StandardNormal: Distribution<F>,
    {
        match self {
            DistributionSpec::Gaussian => rng.sample(StandardNormal),
            DistributionSpec::Rademacher => {
                if rng.random::<bool>() {
                    F::one()
                } else {
                    -F::one()
                }
            }
            DistributionSpec::UniformSym => {
                let s = F::from_f64(3.0).unwrap().sqrt();
                Uniform::new_inclusive(-s, s)
                    .expect("valid range")
                    .sample(rng)
            }
        }
    }
}

/// Configuration of one ensemble: dimension, entry distribution, master seed.
///
/// Identical configuration and trial index reproduce identical samples
/// bit-for-bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnsembleConfig {
    pub n: usize,
    pub dist: DistributionSpec,
    pub master_seed: u64,
    pub zero_diagonal: bool,
}

impl EnsembleConfig {
    /// New configuration with a vanishing main diagonal (the default model).
    pub fn new(n: usize, dist: DistributionSpec, master_seed: u64) -> Result<Self, EnsembleError> {
        if n < 2 {
            return Err(EnsembleError::DimensionTooSmall(n));
        }
        Ok(Self {
            n,
            dist,
            master_seed,
            zero_diagonal: true,
        })
    }

    /// Same configuration with the main diagonal drawn from the entry
    /// distribution instead of fixed at zero.
    pub fn with_random_diagonal(mut self) -> Self {
        self.zero_diagonal = false;
        self
    }

    /// Draw trial `trial` of this ensemble.
    ///
    /// A pure function of `(self, trial)`: the diagonal value (when random)
    /// is drawn first, then `b_1 .. b_{n-1}`, all from ChaCha8 stream
    /// `trial` under the master seed.
    pub fn sample<F>(&self, trial: u64) -> ToeplitzSample<F>
    where
        F: Scalar + SampleUniform,
        StandardNormal: Distribution<F>,
    {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master_seed);
        rng.set_stream(trial);
        let b0 = if self.zero_diagonal {
            F::zero()
        } else {
            self.dist.draw(&mut rng)
        };
        let b = (1..self.n).map(|_| self.dist.draw(&mut rng)).collect();
        ToeplitzSample { n: self.n, b0, b }
    }
}

/// One draw of the ensemble: first-row values of a symmetric Toeplitz matrix.
///
/// `b[d - 1]` holds the value shared by the two diagonals at offset `d`.
#[derive(Debug, Clone, PartialEq)]
pub struct ToeplitzSample<F> {
    n: usize,
    b0: F,
    b: Vec<F>,
}

impl<F: Scalar> ToeplitzSample<F> {
    /// Build a sample directly from first-row values `b_1 .. b_{n-1}`.
    pub fn from_first_row(b0: F, b: Vec<F>) -> Self {
        Self { n: b.len() + 1, b0, b }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Main-diagonal value.
    pub fn b0(&self) -> F {
        self.b0
    }

    /// Off-diagonal values `b_1 .. b_{n-1}`.
    pub fn offdiagonal(&self) -> &[F] {
        &self.b
    }

    /// Matrix entry at `(i, j)`, zero-indexed.
    pub fn entry(&self, i: usize, j: usize) -> F {
        let d = i.abs_diff(j);
        if d == 0 {
            self.b0
        } else {
            self.b[d - 1]
        }
    }

    /// Dense row-major realization of the matrix.
    pub fn to_dense(&self) -> Vec<F> {
        let n = self.n;
        let mut a = vec![F::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                a[i * n + j] = self.entry(i, j);
            }
        }
        a
    }

    /// True when every stored value is finite.
    pub fn is_finite(&self) -> bool {
        self.b0.is_finite() && self.b.iter().all(|x| x.is_finite())
    }
}
