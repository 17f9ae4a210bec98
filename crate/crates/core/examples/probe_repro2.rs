use toeplitz_core::ensemble::{DistributionSpec, EnsembleConfig};
use toeplitz_core::linalg::eigenvalues;
use toeplitz_core::statistics::moment_values;

fn direct(cfg: &EnsembleConfig, trial: u64) -> f64 {
    let s: toeplitz_core::Sample = cfg.sample(trial);
    let sp = eigenvalues(&s).unwrap();
    let n = 24f64;
    sp.power_sum(4) / (n.sqrt().powi(4) * n)
}

fn main() {
    let cfg = EnsembleConfig::new(24, DistributionSpec::UniformSym, 8).unwrap();
    let handle = std::thread::spawn(move || {
        let a: Vec<f64> = moment_values(&cfg, 4, 64).unwrap();
        let b: Vec<f64> = moment_values(&cfg, 4, 64).unwrap();
        let mut ndiff = 0;
        for i in 0..64 {
            if a[i] != b[i] {
                ndiff += 1;
                if ndiff <= 3 {
                    let d = direct(&cfg, i as u64);
                    println!(
                        "i={i}: a={:016x} b={:016x} direct={:016x}",
                        a[i].to_bits(),
                        b[i].to_bits(),
                        d.to_bits()
                    );
                }
            }
        }
        println!("diffs in spawned thread: {ndiff}");
        // again within the same thread, after the pool is warm
        let c: Vec<f64> = moment_values(&cfg, 4, 64).unwrap();
        println!("b == c: {}", b == c);
    });
    handle.join().unwrap();
}
