//! Monte Carlo estimation of empirical moments, convergence-rate
//! diagnostics, and adjacent-spacing statistics.
//!
//! The k-th empirical moment of one sample is the eigenvalue power sum
//! scaled by n^(k/2+1). Trials are embarrassingly parallel; per-trial values
//! are collected in trial order and reduced sequentially, so reports are
//! bit-reproducible no matter how the work was scheduled.

use rand::distr::uniform::SampleUniform;
use rand::distr::Distribution;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ensemble::EnsembleConfig;
use crate::linalg::{self, LinalgError};
use crate::Scalar;

/// Largest moment order accepted by [`empirical_moment`].
pub const MAX_EMPIRICAL_K: u32 = 12;

/// Fewest trials accepted by [`central_moment`].
pub const MIN_CENTRAL_TRIALS: usize = 100;

/// Histogram range and bin width used by [`fit_report`]: the spacing
/// density is effectively supported on [0, 5] at these sample sizes.
pub const HISTOGRAM_MAX: f64 = 5.0;
pub const HISTOGRAM_BIN_WIDTH: f64 = 0.1;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StatisticsError {
    #[error("need at least {needed} trials, got {got}")]
    TooFewTrials { needed: usize, got: usize },
    #[error("moment order {0} outside supported range 0..={MAX_EMPIRICAL_K}")]
    OrderOutOfRange(u32),
    #[error("central moment order must be 2 or 4, got {0}")]
    BadCentralOrder(u32),
    #[error("window {window} invalid for dimension {n}")]
    BadWindow { window: usize, n: usize },
    #[error("need at least one matrix")]
    NoMatrices,
    #[error("spacing sample is empty or degenerate")]
    DegenerateSample,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Sample mean and standard error of M_k(A, n) over seeded trials.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MomentEstimate<F> {
    pub k: u32,
    pub n: usize,
    pub trials: usize,
    pub mean: F,
    /// sample standard deviation / √trials
    pub stderr: F,
}

/// Plug-in estimate of a central moment of M_k(A, n).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CentralMomentEstimate<F> {
    pub k: u32,
    /// central power: 2 or 4
    pub order: u32,
    pub n: usize,
    pub trials: usize,
    pub value: F,
}

/// Normalized adjacent-eigenvalue gaps pooled from a central spectral
/// window; mean gap is 1 by construction.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpacingSample<F> {
    pub gaps: Vec<F>,
    pub window: usize,
    pub matrices: usize,
}

/// Reference spacing laws for the Kolmogorov–Smirnov comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpacingModel {
    /// Uncorrelated spectra: gap density e^(−s), CDF 1 − e^(−s).
    Poisson,
    /// Wigner surmise (π/2) s e^(−πs²/4) in its unit-mean normalization,
    /// CDF 1 − e^(−πs²/4).
    Goe,
}

impl SpacingModel {
    pub fn cdf<F: Scalar>(self, s: F) -> F {
        let zero = F::zero();
        if s <= zero {
            return zero;
        }
        match self {
            SpacingModel::Poisson => F::one() - (-s).exp(),
            SpacingModel::Goe => {
                let quarter_pi = F::from_f64(std::f64::consts::FRAC_PI_4).unwrap();
                F::one() - (-quarter_pi * s * s).exp()
            }
        }
    }
}

/// Histogram of a spacing sample on fixed-width bins over [0, max];
/// gaps beyond the range are counted in `overflow`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Histogram<F> {
    pub bin_width: F,
    pub edges: Vec<F>,
    pub counts: Vec<u64>,
    pub overflow: u64,
    /// total number of gaps, the density denominator
    pub total: u64,
}

/// KS distances of a spacing sample against the two reference laws.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FitReport<F> {
    pub ks_poisson: F,
    pub ks_goe: F,
    pub histogram: Histogram<F>,
}

fn moment_normalization<F: Scalar>(n: usize, k: u32) -> F {
    // n^(k/2 + 1) as √n^k · n
    let nf = F::from_usize(n).unwrap();
    nf.sqrt().powi(k as i32) * nf
}

/// One trial's M_k(A, n). Never inlined: work-stealing may run a trial on
/// the caller or on a worker, and keeping a single machine-code copy keeps
/// the arithmetic bit-identical no matter where it lands.
#[inline(never)]
fn trial_moment<F>(config: &EnsembleConfig, k: u32, norm: F, trial: u64) -> Result<F, StatisticsError>
where
    F: Scalar + SampleUniform,
    StandardNormal: Distribution<F>,
{
    let sample = config.sample::<F>(trial);
    let spectrum = linalg::eigenvalues(&sample)?;
    Ok(spectrum.power_sum(k) / norm)
}

/// Per-trial empirical moments M_k(A, n), in trial order.
pub fn moment_values<F>(
    config: &EnsembleConfig,
    k: u32,
    trials: usize,
) -> Result<Vec<F>, StatisticsError>
where
    F: Scalar + SampleUniform,
    StandardNormal: Distribution<F>,
{
    if k > MAX_EMPIRICAL_K {
        return Err(StatisticsError::OrderOutOfRange(k));
    }
    let norm = moment_normalization::<F>(config.n, k);
    (0..trials as u64)
        .into_par_iter()
        .map(|trial| trial_moment(config, k, norm, trial))
        .collect()
}

/// Mean and standard error of M_k(A, n) over `trials` seeded samples.
pub fn empirical_moment<F>(
    config: &EnsembleConfig,
    k: u32,
    trials: usize,
) -> Result<MomentEstimate<F>, StatisticsError>
where
    F: Scalar + SampleUniform,
    StandardNormal: Distribution<F>,
{
    if trials < 2 {
        return Err(StatisticsError::TooFewTrials {
            needed: 2,
            got: trials,
        });
    }
    let values = moment_values::<F>(config, k, trials)?;
    let tf = F::from_usize(trials).unwrap();
    let mean = values.iter().copied().sum::<F>() / tf;
    let ss = values.iter().map(|&x| (x - mean) * (x - mean)).sum::<F>();
    let sample_var = ss / (tf - F::one());
    let stderr = (sample_var / tf).sqrt();
    Ok(MomentEstimate {
        k,
        n: config.n,
        trials,
        mean,
        stderr,
    })
}

/// Plug-in central moment E[(M_k − mean)^order] with order 2 or 4.
pub fn central_moment<F>(
    config: &EnsembleConfig,
    k: u32,
    order: u32,
    trials: usize,
) -> Result<CentralMomentEstimate<F>, StatisticsError>
where
    F: Scalar + SampleUniform,
    StandardNormal: Distribution<F>,
{
    if order != 2 && order != 4 {
        return Err(StatisticsError::BadCentralOrder(order));
    }
    if trials < MIN_CENTRAL_TRIALS {
        return Err(StatisticsError::TooFewTrials {
            needed: MIN_CENTRAL_TRIALS,
            got: trials,
        });
    }
    let values = moment_values::<F>(config, k, trials)?;
    let tf = F::from_usize(trials).unwrap();
    let mean = values.iter().copied().sum::<F>() / tf;
    let value = values
        .iter()
        .map(|&x| (x - mean).powi(order as i32))
        .sum::<F>()
        / tf;
    Ok(CentralMomentEstimate {
        k,
        order,
        n: config.n,
        trials,
        value,
    })
}

/// One matrix's central-window gaps; single copy for the same reason as
/// [`trial_moment`].
#[inline(never)]
fn trial_gaps<F>(
    config: &EnsembleConfig,
    window: usize,
    trial: u64,
) -> Result<Vec<F>, StatisticsError>
where
    F: Scalar + SampleUniform,
    StandardNormal: Distribution<F>,
{
    let sample = config.sample::<F>(trial);
    let spectrum = linalg::eigenvalues(&sample)?;
    let lo = (config.n - window) / 2;
    let mid = &spectrum.normalized()[lo..lo + window];
    Ok(mid.windows(2).map(|w| w[1] - w[0]).collect())
}

fn validate_window(window: usize, n: usize) -> Result<(), StatisticsError> {
    let bad = window < 2 || window > n || (n >= 30 && window * 10 > n);
    if bad {
        return Err(StatisticsError::BadWindow { window, n });
    }
    Ok(())
}

/// Pool normalized adjacent gaps from the `window` eigenvalues centered at
/// the median of each of `matrices` spectra, then rescale the pool to mean
/// gap 1.
///
/// The central window keeps the local eigenvalue density nearly constant,
/// so rescaling by the pooled mean suffices; no density-based unfolding.
/// For n below 30 the window may extend to the whole spectrum, which admits
/// degenerate exercises like n = 2 with a single gap.
pub fn spacing_sample<F>(
    config: &EnsembleConfig,
    matrices: usize,
    window: usize,
) -> Result<SpacingSample<F>, StatisticsError>
where
    F: Scalar + SampleUniform,
    StandardNormal: Distribution<F>,
{
    if matrices == 0 {
        return Err(StatisticsError::NoMatrices);
    }
    validate_window(window, config.n)?;
    let per_matrix: Vec<Vec<F>> = (0..matrices as u64)
        .into_par_iter()
        .map(|trial| trial_gaps(config, window, trial))
        .collect::<Result<_, StatisticsError>>()?;
    let mut gaps: Vec<F> = per_matrix.into_iter().flatten().collect();
    let total = F::from_usize(gaps.len()).unwrap();
    let mean = gaps.iter().copied().sum::<F>() / total;
    if !(mean > F::zero()) {
        return Err(StatisticsError::DegenerateSample);
    }
    for g in &mut gaps {
        *g = *g / mean;
    }
    Ok(SpacingSample {
        gaps,
        window,
        matrices,
    })
}

/// Kolmogorov–Smirnov sup-distance between the empirical CDF of the gaps
/// and a continuous model CDF.
pub fn ks_statistic_cdf<F: Scalar>(sample: &SpacingSample<F>, cdf: impl Fn(F) -> F) -> F {
    let mut sorted = sample.gaps.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite gaps"));
    let n = F::from_usize(sorted.len()).unwrap();
    let mut d = F::zero();
    for (i, &x) in sorted.iter().enumerate() {
        let fx = cdf(x);
        let lo = F::from_usize(i).unwrap() / n;
        let hi = F::from_usize(i + 1).unwrap() / n;
        d = d.max((fx - lo).abs()).max((hi - fx).abs());
    }
    d
}

/// KS distance against one of the reference spacing laws.
pub fn ks_statistic<F: Scalar>(sample: &SpacingSample<F>, model: SpacingModel) -> F {
    ks_statistic_cdf(sample, |s| model.cdf(s))
}

/// Histogram of the gaps with the given bin width on [0, max].
pub fn histogram<F: Scalar>(sample: &SpacingSample<F>, bin_width: F, max: F) -> Histogram<F> {
    let bins = (max / bin_width).round().to_usize().unwrap_or(0).max(1);
    let mut counts = vec![0u64; bins];
    let mut overflow = 0;
    for &g in &sample.gaps {
        let idx = (g / bin_width).floor().to_usize();
        match idx {
            Some(i) if i < bins => counts[i] += 1,
            _ => overflow += 1,
        }
    }
    let edges = (0..=bins)
        .map(|i| bin_width * F::from_usize(i).unwrap())
        .collect();
    Histogram {
        bin_width,
        edges,
        counts,
        overflow,
        total: sample.gaps.len() as u64,
    }
}

/// KS comparison of a spacing sample against both reference laws, with the
/// standard histogram (bins of width 0.1 on [0, 5]).
pub fn fit_report<F: Scalar>(sample: &SpacingSample<F>) -> Result<FitReport<F>, StatisticsError> {
    if sample.gaps.is_empty() {
        return Err(StatisticsError::DegenerateSample);
    }
    Ok(FitReport {
        ks_poisson: ks_statistic(sample, SpacingModel::Poisson),
        ks_goe: ks_statistic(sample, SpacingModel::Goe),
        histogram: histogram(
            sample,
            F::from_f64(HISTOGRAM_BIN_WIDTH).unwrap(),
            F::from_f64(HISTOGRAM_MAX).unwrap(),
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensemble::DistributionSpec;
    use approx::assert_relative_eq;

    fn cfg(n: usize, dist: DistributionSpec, seed: u64) -> EnsembleConfig {
        EnsembleConfig::new(n, dist, seed).unwrap()
    }

    #[test]
    fn zeroth_moment_is_exactly_one() {
        let est: MomentEstimate<f64> =
            empirical_moment(&cfg(16, DistributionSpec::Gaussian, 1), 0, 8).unwrap();
        assert_eq!(est.mean, 1.0);
        assert_eq!(est.stderr, 0.0);
    }

    #[test]
    fn second_moment_tracks_finite_size_value() {
        let est: MomentEstimate<f64> =
            empirical_moment(&cfg(100, DistributionSpec::Gaussian, 2), 2, 400).unwrap();
        assert!((est.mean - 0.99).abs() <= 5.0 * est.stderr);
    }

    #[test]
    fn trial_guards() {
        let c = cfg(8, DistributionSpec::Gaussian, 0);
        assert!(matches!(
            empirical_moment::<f64>(&c, 2, 1),
            Err(StatisticsError::TooFewTrials { .. })
        ));
        assert!(matches!(
            empirical_moment::<f64>(&c, 13, 4),
            Err(StatisticsError::OrderOutOfRange(13))
        ));
        assert!(matches!(
            central_moment::<f64>(&c, 2, 3, 200),
            Err(StatisticsError::BadCentralOrder(3))
        ));
        assert!(matches!(
            central_moment::<f64>(&c, 2, 2, 50),
            Err(StatisticsError::TooFewTrials { .. })
        ));
    }

    #[test]
    fn constant_moment_has_zero_central_moment() {
        // M₀ ≡ 1
        let est: CentralMomentEstimate<f64> =
            central_moment(&cfg(2, DistributionSpec::Rademacher, 3), 0, 2, 128).unwrap();
        assert_eq!(est.value, 0.0);
    }

    #[test]
    fn spacing_window_validation() {
        let c = cfg(400, DistributionSpec::Gaussian, 1);
        assert!(matches!(
            spacing_sample::<f64>(&c, 1, 55),
            Err(StatisticsError::BadWindow { .. })
        ));
        assert!(matches!(
            spacing_sample::<f64>(&c, 0, 11),
            Err(StatisticsError::NoMatrices)
        ));
        assert!(spacing_sample::<f64>(&c, 1, 11).is_ok());
    }

    #[test]
    fn spacing_normalization_and_sizes() {
        let c = cfg(64, DistributionSpec::Gaussian, 5);
        let s: SpacingSample<f64> = spacing_sample(&c, 7, 5).unwrap();
        assert_eq!(s.gaps.len(), 7 * 4);
        assert!(s.gaps.iter().all(|&g| g >= 0.0));
        let mean: f64 = s.gaps.iter().sum::<f64>() / s.gaps.len() as f64;
        assert_relative_eq!(mean, 1.0, epsilon = 1e-12);
        // window = 3 on one matrix: 2 gaps
        let s3: SpacingSample<f64> = spacing_sample(&c, 1, 3).unwrap();
        assert_eq!(s3.gaps.len(), 2);
    }

    #[test]
    fn degenerate_two_by_two_gives_unit_gap() {
        let c = cfg(2, DistributionSpec::Rademacher, 9);
        let s: SpacingSample<f64> = spacing_sample(&c, 1, 2).unwrap();
        assert_eq!(s.gaps.len(), 1);
        assert_relative_eq!(s.gaps[0], 1.0, epsilon = 1e-15);
    }

    #[test]
    fn ks_statistics_sane() {
        // exponential quantile sample matches its own law far better than
        // the surmise
        let gaps: Vec<f64> = (0..4000)
            .map(|i| {
                let u = (i as f64 + 0.5) / 4000.0;
                -(1.0 - u).ln()
            })
            .collect();
        let s = SpacingSample {
            gaps,
            window: 0,
            matrices: 0,
        };
        let kp = ks_statistic(&s, SpacingModel::Poisson);
        let kg = ks_statistic(&s, SpacingModel::Goe);
        assert!(kp < 0.01, "kp = {kp}");
        assert!(kg > kp);
        assert!((0.0..=1.0).contains(&kp) && (0.0..=1.0).contains(&kg));
    }

    #[test]
    fn ks_is_permutation_invariant() {
        let mut gaps: Vec<f64> = (0..500).map(|i| ((i * 7919) % 251) as f64 / 50.0).collect();
        let s1 = SpacingSample {
            gaps: gaps.clone(),
            window: 0,
            matrices: 0,
        };
        gaps.reverse();
        gaps.rotate_left(101);
        let s2 = SpacingSample {
            gaps,
            window: 0,
            matrices: 0,
        };
        assert_eq!(
            ks_statistic(&s1, SpacingModel::Poisson),
            ks_statistic(&s2, SpacingModel::Poisson)
        );
    }

    #[test]
    fn histogram_partitions_the_sample() {
        let gaps: Vec<f64> = vec![0.05, 0.15, 0.15, 2.0, 7.5];
        let s = SpacingSample {
            gaps,
            window: 0,
            matrices: 0,
        };
        let h = histogram(&s, 0.1, 5.0);
        assert_eq!(h.counts.len(), 50);
        assert_eq!(h.counts[0], 1);
        assert_eq!(h.counts[1], 2);
        assert_eq!(h.counts[20], 1);
        assert_eq!(h.overflow, 1);
        assert_eq!(h.counts.iter().sum::<u64>() + h.overflow, h.total);
    }
}
