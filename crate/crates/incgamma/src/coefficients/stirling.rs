use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Stirling numbers of the second kind `S(m, k)` for `k ≤ m ≤ m_max`,
/// indexed `[m][k]`.
pub fn stirling2_table(m_max: usize) -> Vec<Vec<BigInt>> {
    let mut t: Vec<Vec<BigInt>> = Vec::with_capacity(m_max + 1);
    t.push(vec![BigInt::one()]);
    for m in 1..=m_max {
        let prev = &t[m - 1];
        let mut row = vec![BigInt::zero(); m + 1];
        for k in 1..=m {
            let mut v = prev.get(k - 1).cloned().unwrap_or_default();
            if k < m {
                v += &prev[k] * k;
            }
            row[k] = v;
        }
        t.push(row);
    }
    t
}

/// Associated Stirling numbers `S₂(m, k)`: partitions of an `m`-set into `k`
/// blocks of size at least two, for `m ≤ m_max`, `k ≤ min(m/2, k_max)`.
pub fn associated_stirling2_table(m_max: usize, k_max: usize) -> Vec<Vec<BigInt>> {
    let mut t: Vec<Vec<BigInt>> = Vec::with_capacity(m_max + 1);
    for m in 0..=m_max {
        let kk = (m / 2).min(k_max);
        let mut row = vec![BigInt::zero(); kk + 1];
        if m == 0 {
            row[0] = BigInt::one();
        } else {
            for (k, slot) in row.iter_mut().enumerate().skip(1) {
                let mut v = t[m - 1].get(k).map(|x| x * k).unwrap_or_default();
                if m >= 2 {
                    if let Some(x) = t[m - 2].get(k - 1) {
                        v += x * (m - 1);
                    }
                }
                *slot = v;
            }
        }
        t.push(row);
    }
    t
}
