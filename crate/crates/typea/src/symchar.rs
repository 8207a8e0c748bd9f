//! Irreducible characters of symmetric groups, labelled by partitions.
//!
//! `chi_(n)` is the trivial character and `chi_(1^n)` the sign.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymcharError {
    #[error("partition parts must be positive and weakly decreasing, got {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("sizes differ: |lambda| = {0}, |mu| = {1}")]
    SizeMismatch(usize, usize),
}

/// A partition, stored as its weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, SymcharError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymcharError::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The conjugate partition `lambda*`.
    pub fn dual(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((1..=width).map(|j| self.0.iter().filter(|&&x| x >= j).count()).collect())
    }

    /// `b_lambda = sum_j (j - 1) lambda_j`.
    pub fn b_invariant(&self) -> usize {
        self.0.iter().enumerate().map(|(j, &x)| j * x).sum()
    }

    /// Sign of a permutation with this cycle type.
    pub fn sign(&self) -> i64 {
        if (self.size() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Order of the centralizer of an element of this cycle type.
    pub fn centralizer_order(&self) -> u128 {
        let mut counts: HashMap<usize, u32> = HashMap::new();
        for &x in &self.0 {
            *counts.entry(x).or_default() += 1;
        }
        counts.iter().map(|(&k, &m)| (k as u128).pow(m) * factorial(m as usize)).product()
    }

    /// Number of permutations with this cycle type.
    pub fn class_size(&self) -> u128 {
        factorial(self.size()) / self.centralizer_order()
    }

    /// All partitions of `n`, in decreasing lexicographic order (`(n)` first).
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for k in (1..=n.min(max)).rev() {
                prefix.push(k);
                rec(n - k, k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Cycle type of a permutation given as an image list.
    pub fn cycle_type(perm: &[usize]) -> Partition {
        let mut seen = vec![false; perm.len()];
        let mut parts = Vec::new();
        for i in 0..perm.len() {
            if seen[i] {
                continue;
            }
            let mut len = 0;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = perm[j];
                len += 1;
            }
            parts.push(len);
        }
        Partition::from_unsorted(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

type Memo = Mutex<HashMap<(Vec<usize>, Vec<usize>), i64>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `chi_lambda` at an element of cycle type `mu`, by Murnaghan-Nakayama.
pub fn char_value(lambda: &Partition, mu: &Partition) -> Result<i64, SymcharError> {
    if lambda.size() != mu.size() {
        return Err(SymcharError::SizeMismatch(lambda.size(), mu.size()));
    }
    Ok(mn(&lambda.0, &mu.0))
}

/// Rim hooks are removed for the parts of `mu` from the largest down.
fn mn(lambda: &[usize], mu: &[usize]) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo().lock().expect("memo lock").get(&key) {
        return v;
    }
    let k = mu[0];
    let rest = &mu[1..];
    // beta-set: beads at lambda_i + (len - 1 - i)
    let len = lambda.len();
    let beads: Vec<usize> = lambda.iter().enumerate().map(|(i, &x)| x + len - 1 - i).collect();
    let mut total = 0;
    for (idx, &b) in beads.iter().enumerate() {
        if b < k || beads.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let crossed = beads.iter().filter(|&&c| c > target && c < b).count();
        let mut moved = beads.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let m = moved.len();
        let shape: Vec<usize> = moved.iter().enumerate().map(|(i, &c)| c + i + 1 - m).filter(|&x| x > 0).collect();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&shape, rest);
    }
    memo().lock().expect("memo lock").insert(key, total);
    total
}

/// Degree `chi_lambda(1)`.
pub fn degree(lambda: &Partition) -> i64 {
    mn(&lambda.0, &vec![1; lambda.size()])
}

/// Full character table: rows and columns both indexed by [`Partition::all`].
pub fn character_table(n: usize) -> Vec<Vec<i64>> {
    let ps = Partition::all(n);
    ps.iter().map(|l| ps.iter().map(|m| mn(&l.0, &m.0)).collect()).collect()
}

/// Value at cycle type `nu` of the permutation character on `S_n / S_lambda`:
/// the number of ways to put the cycles of `nu` into rows of lengths `lambda`.
pub fn young_permutation_value(lambda: &Partition, nu: &Partition) -> u128 {
    fn rec(cycles: &[usize], room: &mut Vec<usize>) -> u128 {
        let Some((&c, rest)) = cycles.split_first() else {
            return room.iter().all(|&r| r == 0) as u128;
        };
        let mut total = 0;
        for i in 0..room.len() {
            if room[i] >= c {
                room[i] -= c;
                total += rec(rest, room);
                room[i] += c;
            }
        }
        total
    }
    rec(&nu.0, &mut lambda.0.clone())
}

/// Decomposition of `Ind_{S_lambda}^{S_n}(1)` into irreducibles, as `(mu, multiplicity)`
/// with multiplicity positive, `lambda` first and the rest in [`Partition::all`] order.
pub fn young_induction(lambda: &Partition) -> Vec<(Partition, i64)> {
    let n = lambda.size();
    let classes = Partition::all(n);
    let order = factorial(n) as i128;
    let perm: Vec<i128> = classes.iter().map(|nu| young_permutation_value(lambda, nu) as i128).collect();
    let mut out = Vec::new();
    for mu in &classes {
        let s: i128 = classes
            .iter()
            .zip(&perm)
            .map(|(nu, &pv)| nu.class_size() as i128 * pv * mn(&mu.0, &nu.0) as i128)
            .sum();
        debug_assert_eq!(s % order, 0);
        let m = (s / order) as i64;
        if m != 0 {
            out.push((mu.clone(), m));
        }
    }
    out.sort_by_key(|(mu, _)| mu != lambda);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn values() {
        for mu in Partition::all(5) {
            assert_eq!(char_value(&p(&[5]), &mu).unwrap(), 1);
            assert_eq!(char_value(&p(&[1, 1, 1, 1, 1]), &mu).unwrap(), mu.sign());
        }
        assert_eq!(char_value(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(degree(&p(&[3, 2])), 5);
        assert_eq!(degree(&p(&[3, 2, 1])), 16);
        assert!(char_value(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn invariants() {
        assert_eq!(p(&[4]).b_invariant(), 0);
        assert_eq!(p(&[2, 1]).b_invariant(), 1);
        assert_eq!(p(&[1, 1, 1]).b_invariant(), 3);
        assert_eq!(p(&[1, 1, 1]).dual(), p(&[3]));
        assert_eq!(p(&[4, 2, 1]).dual().dual(), p(&[4, 2, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::all(6).len(), 11);
    }

    #[test]
    fn induction_examples() {
        assert_eq!(young_induction(&p(&[3])), vec![(p(&[3]), 1)]);
        assert_eq!(young_induction(&p(&[1, 1])), vec![(p(&[1, 1]), 1), (p(&[2]), 1)]);
        assert_eq!(young_induction(&p(&[2, 1])), vec![(p(&[2, 1]), 1), (p(&[3]), 1)]);
    }

    #[test]
    fn cycle_types() {
        assert_eq!(Partition::cycle_type(&[1, 2, 0, 4, 3]), p(&[3, 2]));
        assert_eq!(p(&[2, 2, 1]).class_size(), 15);
    }
}
