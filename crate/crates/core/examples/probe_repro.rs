use toeplitz_core::ensemble::{DistributionSpec, EnsembleConfig};
use toeplitz_core::linalg::eigenvalues;
use toeplitz_core::statistics::moment_values;

fn main() {
    let cfg = EnsembleConfig::new(24, DistributionSpec::UniformSym, 8).unwrap();
    // sample determinism
    let s1: toeplitz_core::Sample = cfg.sample(0);
    let s2: toeplitz_core::Sample = cfg.sample(0);
    println!("samples identical: {}", s1 == s2);
    // eigensolver determinism on identical input
    let e1 = eigenvalues(&s1).unwrap();
    let e2 = eigenvalues(&s2).unwrap();
    println!("spectra identical: {}", e1.values() == e2.values());
    // serial (single-thread pool) moment values
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let (a, b) = pool.install(|| {
        let a: Vec<f64> = moment_values(&cfg, 4, 64).unwrap();
        let b: Vec<f64> = moment_values(&cfg, 4, 64).unwrap();
        (a, b)
    });
    println!("serial moment_values identical: {}", a == b);
    // parallel in default pool
    let c: Vec<f64> = moment_values(&cfg, 4, 64).unwrap();
    let d: Vec<f64> = moment_values(&cfg, 4, 64).unwrap();
    println!("parallel moment_values identical: {}", c == d);
    println!("serial == parallel: {}", a == c);
    for i in 0..4 {
        println!("  a[{i}] = {:.17e}  c[{i}] = {:.17e}", a[i], c[i]);
    }
}
