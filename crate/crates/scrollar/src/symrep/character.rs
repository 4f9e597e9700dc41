use std::collections::HashMap;

use super::partition::{partitions_of, Partition};
use super::Result;

/// Beta-set (first-column hook lengths) of a partition with `n` beads.
fn beta_set(parts: &[u32], n: usize) -> Vec<u32> {
    (0..n).map(|i| parts.get(i).copied().unwrap_or(0) + (n - 1 - i) as u32).collect()
}

fn from_beta(mut beta: Vec<u32>) -> Vec<u32> {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let n = beta.len();
    let mut parts: Vec<u32> = beta.iter().enumerate().map(|(i, &b)| b - (n - 1 - i) as u32).collect();
    parts.retain(|&x| x > 0);
    parts
}

type Memo = HashMap<(Vec<u32>, Vec<u32>), i64>;

/// Murnaghan–Nakayama: remove border strips of length `mu[k]` from `lam`.
fn mn(lam: &[u32], mu: &[u32], k: usize, memo: &mut Memo) -> i64 {
    if k == mu.len() {
        return if lam.is_empty() { 1 } else { 0 };
    }
    let key = (lam.to_vec(), mu[k..].to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = mu[k];
    let beta = beta_set(lam, lam.len());
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let nb = b - r;
        let between = beta.iter().filter(|&&x| x > nb && x < b).count();
        let mut next = beta.clone();
        next[idx] = nb;
        let sub = from_beta(next);
        let v = mn(&sub, mu, k + 1, memo);
        total += if between % 2 == 0 { v } else { -v };
    }
    memo.insert(key, total);
    total
}

/// χ_λ on the class of cycle type μ.
pub fn character(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(lambda.d(), mu.d(), "partitions of different sizes");
    let mut memo = Memo::new();
    mn(lambda.parts(), mu.parts(), 0, &mut memo)
}

/// Full character table of S_d, rows and columns in `partitions_of` order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    d: u32,
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(d: u32) -> Result<Self> {
        let parts = partitions_of(d)?;
        let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut values = Vec::with_capacity(parts.len());
        let mut memo = Memo::new();
        for lam in &parts {
            values.push(parts.iter().map(|mu| mn(lam.parts(), mu.parts(), 0, &mut memo)).collect());
        }
        Ok(CharacterTable { d, parts, index, values })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.values[self.index[lambda]][self.index[mu]]
    }

    pub fn position(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    /// Size of the conjugacy class with cycle type μ.
    pub fn class_size(mu: &Partition) -> u64 {
        let d = mu.d() as u64;
        let mut denom: u128 = 1;
        let mut counts = std::collections::BTreeMap::new();
        for &m in mu.parts() {
            *counts.entry(m).or_insert(0u64) += 1;
            denom *= m as u128;
        }
        for (_, c) in counts {
            for k in 1..=c {
                denom *= k as u128;
            }
        }
        let mut num: u128 = 1;
        for k in 1..=d {
            num *= k as u128;
        }
        (num / denom) as u64
    }
}

impl Partition {
    /// p(λ) = (dim − χ_λ(transposition)) / 2.
    pub fn p_value(&self) -> u64 {
        let d = self.d();
        if d < 2 {
            return 0;
        }
        let mut t = vec![2];
        t.extend(std::iter::repeat(1).take(d as usize - 2));
        let tr = Partition::new(t).expect("transposition class");
        let v = self.specht_dim() as i64 - character(self, &tr);
        debug_assert!(v >= 0 && v % 2 == 0);
        (v / 2) as u64
    }
}
