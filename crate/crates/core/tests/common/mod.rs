//! Shared oracles for the integration tests.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;

/// Classical cyclic Jacobi eigensolver: slow and simple, used as an
/// independent reference for the production tridiagonalization + QL path.
pub fn jacobi_eigenvalues(mut a: Vec<f64>, n: usize) -> Vec<f64> {
    assert_eq!(a.len(), n * n);
    for _sweep in 0..100 {
        let mut off = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off += a[p * n + q] * a[p * n + q];
            }
        }
        if off.sqrt() < 1e-14 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut vals: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    vals.sort_by(|x, y| x.partial_cmp(y).unwrap());
    vals
}

/// Exact E[Trace(A^power)] over the Rademacher ensemble with zero diagonal,
/// by enumerating all 2^(n-1) sign vectors with integer arithmetic.
/// Returns the expectation as a rational.
pub fn rademacher_expected_trace_power(n: usize, power: u32) -> BigRational {
    assert!(n >= 2 && n <= 20, "enumeration oracle sized for small n");
    assert!(power % 2 == 0 && power >= 2 && power <= 8);
    let vectors: u64 = 1 << (n - 1);
    let mut total = BigInt::from(0);
    for bits in 0..vectors {
        let mut a = vec![0i128; n * n];
        for i in 0..n {
            for j in 0..n {
                let d = i.abs_diff(j);
                a[i * n + j] = if d == 0 {
                    0
                } else if bits >> (d - 1) & 1 == 1 {
                    1
                } else {
                    -1
                };
            }
        }
        total += trace_power_int(&a, n, power);
    }
    BigRational::new(total, BigInt::from(vectors))
}

/// Exact E[Trace(A^power)] for the three-point distribution taking ±2 with
/// probability 1/8 each and 0 with probability 3/4 (mean 0, variance 1,
/// fourth moment 4), by weighted enumeration of all 3^(n-1) vectors.
pub fn three_point_expected_trace_power(n: usize, power: u32) -> BigRational {
    assert!(n >= 2 && n <= 10);
    let count = 3u64.pow(n as u32 - 1);
    let mut numer = BigInt::from(0);
    // weights: value 0 has 6, values ±2 have 1 each, denominator 8 per entry
    for code in 0..count {
        let mut weight = BigInt::from(1);
        let mut a = vec![0i128; n * n];
        let mut c = code;
        let mut values = Vec::with_capacity(n - 1);
        for _ in 1..n {
            let digit = c % 3;
            c /= 3;
            let (v, w) = match digit {
                0 => (0i128, 6u32),
                1 => (2, 1),
                _ => (-2, 1),
            };
            values.push(v);
            weight *= w;
        }
        for i in 0..n {
            for j in 0..n {
                let d = i.abs_diff(j);
                if d > 0 {
                    a[i * n + j] = values[d - 1];
                }
            }
        }
        numer += weight * trace_power_int(&a, n, power);
    }
    let denom = BigInt::from(8u64).pow(n as u32 - 1);
    BigRational::new(numer, denom)
}

fn trace_power_int(a: &[i128], n: usize, power: u32) -> i128 {
    let mut acc = a.to_vec();
    for _ in 2..=power {
        acc = matmul_int(&acc, a, n);
    }
    (0..n).map(|i| acc[i * n + i]).sum()
}

fn matmul_int(a: &[i128], b: &[i128], n: usize) -> Vec<i128> {
    let mut c = vec![0i128; n * n];
    for i in 0..n {
        for l in 0..n {
            let ail = a[i * n + l];
            if ail == 0 {
                continue;
            }
            for j in 0..n {
                c[i * n + j] += ail * b[l * n + j];
            }
        }
    }
    c
}
