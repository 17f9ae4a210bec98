//! Exact rational fitting of lattice-count polynomials.
//!
//! For a pairing of 2k positions the box count is a polynomial in L of
//! degree k+1 (the constraint system has an interval structure, so its
//! vertices stay integral as the box dilates). The leading coefficient is
//! the pairing's contribution to the limiting moment. Fitting is exact:
//! integer counts, rational Vandermonde solve, and a held-out count that
//! must be reproduced exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::lattice::lattice_count;
use super::pairing::Pairing;
use super::MomentError;

/// Lattice-count polynomial of one pairing. `coeffs[i]` multiplies Lⁱ;
/// the leading coefficient is the pairing's limiting contribution.
#[derive(Debug, Clone)]
pub struct ContributionPolynomial {
    pub degree: usize,
    pub coeffs: Vec<BigRational>,
    pub contribution: BigRational,
    /// True when the even/odd quasi-polynomial fallback was needed.
    pub parity_split: bool,
}

impl ContributionPolynomial {
    /// Evaluate the fitted polynomial at box size `l`.
    pub fn evaluate(&self, l: i64) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(l));
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }
}

/// Fit the count polynomial of `pairing` and extract its leading
/// coefficient.
///
/// Counts are taken at k+3 consecutive box sizes starting at 2k+2 (past the
/// degenerate small boxes): k+2 determine the degree-(k+1) polynomial, the
/// last is held out and must be reproduced exactly. If validation fails the
/// fit is redone separately on even and odd box sizes and the two leading
/// coefficients must agree.
pub fn fit_contribution(pairing: &Pairing) -> Result<ContributionPolynomial, MomentError> {
    let k = pairing.k();
    let degree = k + 1;
    let l_min = 2 * k as i64 + 2;

    let ls: Vec<i64> = (l_min..l_min + k as i64 + 3).collect();
    let counts: Vec<u64> = ls.iter().map(|&l| lattice_count(pairing, l)).collect();
    let (fit_pts, holdout) = ls.split_at(degree + 1);
    let (fit_counts, holdout_count) = counts.split_at(degree + 1);

    if let Some(coeffs) = solve_polynomial(fit_pts, fit_counts, degree) {
        let poly = finish(pairing, degree, coeffs, false)?;
        if poly.evaluate(holdout[0]) == BigRational::from_integer(BigInt::from(holdout_count[0])) {
            return Ok(poly);
        }
    }

    parity_fallback(pairing, degree, l_min)
}

fn parity_fallback(
    pairing: &Pairing,
    degree: usize,
    l_min: i64,
) -> Result<ContributionPolynomial, MomentError> {
    let mut fitted = Vec::with_capacity(2);
    for parity in 0..2i64 {
        let start = l_min + parity;
        let ls: Vec<i64> = (0..degree as i64 + 2).map(|i| start + 2 * i).collect();
        let counts: Vec<u64> = ls.iter().map(|&l| lattice_count(pairing, l)).collect();
        let (fit_pts, holdout) = ls.split_at(degree + 1);
        let (fit_counts, holdout_count) = counts.split_at(degree + 1);
        let coeffs = solve_polynomial(fit_pts, fit_counts, degree)
            .ok_or(MomentError::NonPolynomialCount)?;
        let poly = finish(pairing, degree, coeffs, true)?;
        if poly.evaluate(holdout[0]) != BigRational::from_integer(BigInt::from(holdout_count[0])) {
            return Err(MomentError::NonPolynomialCount);
        }
        fitted.push(poly);
    }
    if fitted[0].contribution != fitted[1].contribution {
        return Err(MomentError::NonPolynomialCount);
    }
    Ok(fitted.swap_remove(0))
}

fn finish(
    pairing: &Pairing,
    degree: usize,
    coeffs: Vec<BigRational>,
    parity_split: bool,
) -> Result<ContributionPolynomial, MomentError> {
    let contribution = coeffs[degree].clone();
    // each pairing admits at most one tuple per free anchor-and-difference
    // choice, so the leading coefficient sits in (0, 1]
    if !contribution.is_positive() || contribution > BigRational::one() {
        return Err(MomentError::NonPolynomialCount);
    }
    let _ = pairing;
    Ok(ContributionPolynomial {
        degree,
        coeffs,
        contribution,
        parity_split,
    })
}

/// Exact interpolation: solve the Vandermonde system for `degree`+1
/// coefficients through the given points. Returns None only if the system
/// is singular, which distinct abscissas exclude.
fn solve_polynomial(xs: &[i64], ys: &[u64], degree: usize) -> Option<Vec<BigRational>> {
    let m = degree + 1;
    assert_eq!(xs.len(), m);
    assert_eq!(ys.len(), m);
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for (&x, &y) in xs.iter().zip(ys.iter()) {
        let mut row = Vec::with_capacity(m + 1);
        let xr = BigRational::from_integer(BigInt::from(x));
        let mut p = BigRational::one();
        for _ in 0..m {
            row.push(p.clone());
            p *= &xr;
        }
        row.push(BigRational::from_integer(BigInt::from(y)));
        rows.push(row);
    }
    gaussian_elimination(&mut rows, m)
}

fn gaussian_elimination(rows: &mut [Vec<BigRational>], m: usize) -> Option<Vec<BigRational>> {
    for col in 0..m {
        let pivot_row = (col..m).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, pivot_row);
        let pivot = rows[col][col].clone();
        for c in col..=m {
            rows[col][c] /= &pivot;
        }
        for r in 0..m {
            if r != col && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..=m {
                    let sub = &rows[col][c] * &factor;
                    rows[r][c] -= sub;
                }
            }
        }
    }
    Some(rows.iter().map(|row| row[m].clone()).collect())
}
