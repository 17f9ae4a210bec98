//! Diophantine lattice counting for the trace-expansion index walks.
//!
//! Fix a pairing of the 2k edge positions and a box size L. A tuple is an
//! anchor index i₁ ∈ {1..L} together with one nonzero difference d_j per
//! pair; the walk visits i_{m+1} = i_m − x̃_m where x̃ is d_j at the pair's
//! first position and −d_j at its second (all signs negative). The count is
//! the number of tuples whose walk stays inside {1..L}. The traversal prunes
//! as soon as a running sum leaves the box.

use super::pairing::Pairing;
use super::MomentError;

/// Cost bound on the box size accepted by the counting routines.
pub const MAX_LATTICE_L: i64 = 64;

/// Bounds accepted by [`sign_audit`].
pub const MAX_AUDIT_K: usize = 3;
pub const MAX_AUDIT_L: i64 = 30;

#[derive(Debug, Clone, Copy)]
enum Step {
    /// First position of pair j: the difference d_j is chosen here.
    Open(usize),
    /// Second position of pair j: the difference is forced.
    Close(usize),
}

fn walk_plan(pairing: &Pairing) -> Vec<Step> {
    let mut pair_index = vec![usize::MAX; pairing.len()];
    for (j, (a, b)) in pairing.pairs().into_iter().enumerate() {
        pair_index[a] = j;
        pair_index[b] = j;
    }
    pairing
        .partner()
        .iter()
        .enumerate()
        .map(|(m, &p)| {
            if p > m {
                Step::Open(pair_index[m])
            } else {
                Step::Close(pair_index[m])
            }
        })
        .collect()
}

/// Exact number of valid tuples for `pairing` in the box `{1..l}` under the
/// all-negative sign convention. Zero differences are excluded; coincident
/// |d_j| values are included (they only touch sub-leading coefficients of
/// the count polynomial).
pub fn lattice_count(pairing: &Pairing, l: i64) -> u64 {
    assert!(
        (1..=MAX_LATTICE_L).contains(&l),
        "box size {l} outside 1..={MAX_LATTICE_L}"
    );
    let plan = walk_plan(pairing);
    let mut d = vec![0i64; pairing.k()];
    let mut total = 0;
    for anchor in 1..=l {
        total += count_from(&plan, 0, anchor, l, &mut d);
    }
    total
}

fn count_from(plan: &[Step], pos: usize, cur: i64, l: i64, d: &mut [i64]) -> u64 {
    if pos == plan.len() {
        return 1;
    }
    match plan[pos] {
        Step::Open(j) => {
            let mut acc = 0;
            for next in 1..=l {
                if next != cur {
                    d[j] = cur - next;
                    acc += count_from(plan, pos + 1, next, l, d);
                }
            }
            acc
        }
        Step::Close(j) => {
            let next = cur + d[j];
            if next >= 1 && next <= l {
                count_from(plan, pos + 1, next, l, d)
            } else {
                0
            }
        }
    }
}

/// Number of triples (x, y, z) in {1..n}³ with 1 ≤ x + y − z ≤ n, computed
/// by the O(n) two-range square summation. Equals (2n³ + n)/3.
pub fn count_obstruction_triples(n: u64) -> u128 {
    // Writing S = x + y: S−1 pairs for S ≤ n+1 and 2n−S+1 above, and the
    // same count of admissible z values on each side of S = n+1, so the
    // total is Σ_{j=1}^{n−1} j² + Σ_{j=1}^{n} j².
    let mut total: u128 = 0;
    for j in 1..n {
        total += (j as u128) * (j as u128);
    }
    for j in 1..=n {
        total += (j as u128) * (j as u128);
    }
    total
}

/// One row of the sign-elimination audit: exhaustive counts for a pairing
/// and a sign assignment ε ∈ {±1}ᵏ, tuples with pairwise-distinct |d_j|
/// tabulated separately from coincident ones.
#[derive(Debug, Clone)]
pub struct AuditRow {
    pub pairing: Pairing,
    /// ε_j per pair: the second occurrence carries ε_j · d_j.
    pub signs: Vec<i8>,
    pub l: i64,
    /// Valid tuples whose |d_j| are pairwise distinct.
    pub count_distinct: u64,
    /// Valid tuples where some |d_i| = |d_j|.
    pub count_coincident: u64,
    /// count_distinct / L^{k+1}: vanishes in the limit unless all ε_j = −1.
    pub distinct_ratio: f64,
    /// (count_distinct + count_coincident) / (L·(L−1)ᵏ), the count per free
    /// anchor-and-difference choice; approaches the pairing's limiting
    /// contribution when all ε_j = −1.
    pub ratio_vs_free: f64,
}

/// Exhaustive sign audit over every pairing of 2k positions and every sign
/// vector, at box size `l`.
pub fn sign_audit(k: usize, l: i64) -> Result<Vec<AuditRow>, MomentError> {
    assert!(k >= 1 && k <= MAX_AUDIT_K, "audit order {k} outside 1..={MAX_AUDIT_K}");
    assert!(
        (1..=MAX_AUDIT_L).contains(&l),
        "audit box size {l} outside 1..={MAX_AUDIT_L}"
    );
    let pairings = super::pairing::enumerate_pairings(k)?;
    let mut rows = Vec::new();
    for pairing in pairings {
        let plan = walk_plan(&pairing);
        for bits in 0..(1u32 << k) {
            let signs: Vec<i8> = (0..k)
                .map(|j| if bits & (1 << j) != 0 { 1 } else { -1 })
                .collect();
            let mut d = vec![0i64; k];
            let mut tally = (0u64, 0u64);
            for anchor in 1..=l {
                audit_from(&plan, &signs, 0, anchor, anchor, l, &mut d, 0, false, &mut tally);
            }
            let (count_distinct, count_coincident) = tally;
            let free = (l as f64) * ((l - 1) as f64).powi(k as i32);
            rows.push(AuditRow {
                pairing: pairing.clone(),
                signs,
                l,
                count_distinct,
                count_coincident,
                distinct_ratio: count_distinct as f64 / (l as f64).powi(k as i32 + 1),
                ratio_vs_free: (count_distinct + count_coincident) as f64 / free,
            });
        }
    }
    Ok(rows)
}

#[allow(clippy::too_many_arguments)]
fn audit_from(
    plan: &[Step],
    signs: &[i8],
    pos: usize,
    cur: i64,
    anchor: i64,
    l: i64,
    d: &mut [i64],
    used_abs: u64,
    coincident: bool,
    tally: &mut (u64, u64),
) {
    if pos == plan.len() {
        // the walk must close the cycle
        if cur == anchor {
            if coincident {
                tally.1 += 1;
            } else {
                tally.0 += 1;
            }
        }
        return;
    }
    match plan[pos] {
        Step::Open(j) => {
            for next in 1..=l {
                if next == cur {
                    continue;
                }
                let dj = cur - next;
                d[j] = dj;
                let bit = 1u64 << dj.unsigned_abs();
                let clash = used_abs & bit != 0;
                audit_from(
                    plan,
                    signs,
                    pos + 1,
                    next,
                    anchor,
                    l,
                    d,
                    used_abs | bit,
                    coincident || clash,
                    tally,
                );
            }
        }
        Step::Close(j) => {
            let next = cur - i64::from(signs[j]) * d[j];
            if next >= 1 && next <= l {
                audit_from(
                    plan, signs, pos + 1, next, anchor, l, d, used_abs, coincident, tally,
                );
            }
        }
    }
}
