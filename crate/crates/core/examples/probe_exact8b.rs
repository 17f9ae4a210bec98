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
    let ns: Vec<usize> = std::env::args().skip(1).map(|s| s.parse().unwrap()).collect();
    for &n in &ns {
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
                let a3 = matmul(&a2, &a, n);
                let a4 = matmul(&a2, &a2, n);
                let t6: i128 = a3.iter().map(|x| x * x).sum();
                let t8: i128 = a4.iter().map(|x| x * x).sum();
                (t6, t8)
            })
            .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));
        println!("n={n} denom=2^{} sum_tr6={sum6} sum_tr8={sum8}", n - 1);
    }
}
