//! Perfect matchings of the 2k edge positions in the trace expansion.

use serde::{Deserialize, Serialize};

use super::MomentError;

/// Largest k accepted by [`enumerate_pairings`]; (2·6−1)!! = 10395 pairings
/// with O(L⁷) counting apiece is past what the counting engine is meant for.
pub const MAX_PAIRING_K: usize = 5;

/// A perfect matching of `2k` positions: `partner[m] = n` iff positions `m`
/// and `n` are matched. An involution without fixed points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Pairing {
    partner: Vec<usize>,
}

impl Pairing {
    /// Build from a partner array, checking the involution invariants.
    pub fn new(partner: Vec<usize>) -> Result<Self, MomentError> {
        let len = partner.len();
        if len == 0 || len % 2 != 0 {
            return Err(MomentError::InvalidPairing);
        }
        for (m, &p) in partner.iter().enumerate() {
            if p >= len || p == m || partner[p] != m {
                return Err(MomentError::InvalidPairing);
            }
        }
        Ok(Self { partner })
    }

    /// Build from a list of k disjoint position pairs covering `0..2k`.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self, MomentError> {
        let len = 2 * pairs.len();
        let mut partner = vec![usize::MAX; len];
        for &(a, b) in pairs {
            if a >= len || b >= len || a == b || partner[a] != usize::MAX || partner[b] != usize::MAX
            {
                return Err(MomentError::InvalidPairing);
            }
            partner[a] = b;
            partner[b] = a;
        }
        Self::new(partner)
    }

    /// Number of pairs k.
    pub fn k(&self) -> usize {
        self.partner.len() / 2
    }

    /// Number of positions 2k.
    pub fn len(&self) -> usize {
        self.partner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }

    pub fn partner(&self) -> &[usize] {
        &self.partner
    }

    /// The k pairs as `(first, second)` with `first < second`, ordered by
    /// first occurrence.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.k());
        for (m, &p) in self.partner.iter().enumerate() {
            if p > m {
                out.push((m, p));
            }
        }
        out
    }

    /// Number of crossing pairs on the circle: pairs `(a, b)` and `(c, d)`
    /// cross iff their endpoints interleave in cyclic order.
    pub fn crossing_number(&self) -> usize {
        let pairs = self.pairs();
        let mut crossings = 0;
        for (idx, &(a, b)) in pairs.iter().enumerate() {
            for &(c, d) in &pairs[idx + 1..] {
                // pairs() orders by first occurrence, so a < c always
                debug_assert!(a < c);
                if c < b && b < d {
                    crossings += 1;
                }
            }
        }
        crossings
    }

    /// The pairing with every position shifted by `r` modulo 2k.
    pub fn rotated(&self, r: usize) -> Pairing {
        let len = self.partner.len();
        let mut partner = vec![0; len];
        for (m, &p) in self.partner.iter().enumerate() {
            partner[(m + r) % len] = (p + r) % len;
        }
        Pairing { partner }
    }

    /// Lexicographically smallest partner array over all rotations; pairings
    /// share a key exactly when they are the same shape on the circle.
    pub fn rotation_class_key(&self) -> Vec<usize> {
        (0..self.partner.len())
            .map(|r| self.rotated(r).partner)
            .min()
            .expect("nonempty pairing")
    }
}

/// All pairings of `2k` positions in deterministic (lexicographic) order.
/// There are exactly (2k−1)!! of them.
pub fn enumerate_pairings(k: usize) -> Result<Vec<Pairing>, MomentError> {
    if k == 0 || k > MAX_PAIRING_K {
        return Err(MomentError::PairingOrderOutOfRange(k));
    }
    let mut out = Vec::with_capacity(double_factorial(2 * k as u64 - 1) as usize);
    let mut partner = vec![usize::MAX; 2 * k];
    fill(&mut partner, &mut out);
    Ok(out)
}

fn fill(partner: &mut Vec<usize>, out: &mut Vec<Pairing>) {
    let m = match partner.iter().position(|&p| p == usize::MAX) {
        None => {
            out.push(Pairing {
                partner: partner.clone(),
            });
            return;
        }
        Some(m) => m,
    };
    for n in m + 1..partner.len() {
        if partner[n] == usize::MAX {
            partner[m] = n;
            partner[n] = m;
            fill(partner, out);
            partner[m] = usize::MAX;
            partner[n] = usize::MAX;
        }
    }
}

/// Double factorial m!! for odd m (and 0!! = 1).
pub fn double_factorial(m: u64) -> u64 {
    let mut acc = 1;
    let mut i = m;
    while i > 1 {
        acc *= i;
        i -= 2;
    }
    acc
}
