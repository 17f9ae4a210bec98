// Exact E[M_k(n)] for Rademacher entries by enumerating all 2^(n-1) sign
// vectors; Trace(A^8) = ||A^4||_F^2 with A^4 = (A^2)^2 in i128.
use rayon::prelude::*;

fn matmul(a: &[i128], b: &[i128], n: usize) -> Vec<i128> {
    let mut c = vec![0i128; n * n];
    for i in 0..n {
        for l in 0..n {
            let ail = a[i * n + l];
            if ail == 0 { continue; }
            for j in 0..n {
                c[i * n + j] += ail * b[l * n + j];
            }
        }
    }
    c
}

fn main() {
    for &n in &[12usize, 14, 16, 18, 20] {
        let vecs: u64 = 1 << (n - 1);
        let (sum6, sum8): (i128, i128) = (0..vecs)
            .into_par_iter()
            .map(|bits| {
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
                let a2 = matmul(&a, &a, n);
                let a4 = matmul(&a2, &a2, n);
                let a3 = matmul(&a2, &a, n);
                // trace(A^6) = <A^3, A^3>, trace(A^8) = <A^4, A^4> (symmetric)
                let t6: i128 = a3.iter().map(|x| x * x).sum();
                let t8: i128 = a4.iter().map(|x| x * x).sum();
                (t6, t8)
            })
            .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));
        // M_k = Trace(A^k) / n^(k/2+1); expectation = sum / 2^(n-1)
        let nf = n as f64;
        let m6 = sum6 as f64 / vecs as f64 / nf.powi(4);
        let m8 = sum8 as f64 / vecs as f64 / nf.powi(5);
        println!("n={n}: E[M6] = {m6:.10}  E[M8] = {m8:.10}");
    }
}
