use std::time::Instant;
use toeplitz_core::ensemble::{DistributionSpec, EnsembleConfig};
use toeplitz_core::linalg::eigenvalues;

fn main() {
    for n in [200usize, 400, 1000] {
        let cfg = EnsembleConfig::new(n, DistributionSpec::Gaussian, 1).unwrap();
        let s: toeplitz_core::Sample = cfg.sample(0);
        let t = Instant::now();
        let sp = eigenvalues(&s).unwrap();
        println!("n={n}: {:?} (λmax = {:.3})", t.elapsed(), sp.values()[n - 1]);
    }
}
