use std::fmt;

use super::{Result, SymError};

/// A partition of `d`, parts non-increasing and positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(SymError::InvalidPartition("empty".into()));
        }
        if parts.iter().any(|&x| x == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymError::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros; used for cycle types.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn d(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `(d)`.
    pub fn row(d: u32) -> Self {
        Partition { parts: vec![d] }
    }

    /// `(1^d)`.
    pub fn column(d: u32) -> Self {
        Partition { parts: vec![1; d as usize] }
    }

    /// `(d-i-1, 2, 1^{i-1})`, the shape attached to the i-th syzygy step.
    pub fn syzygy_shape(d: u32, i: u32) -> Result<Self> {
        if i == 0 || i + 3 > d {
            return Err(SymError::InvalidPartition(format!("syzygy shape d={d} i={i}")));
        }
        let mut parts = vec![d - i - 1, 2];
        parts.extend(std::iter::repeat(1).take(i as usize - 1));
        Partition::new(parts)
    }

    /// `(d-i, 1^i)`.
    pub fn hook(d: u32, i: u32) -> Result<Self> {
        if i >= d {
            return Err(SymError::InvalidPartition(format!("hook d={d} i={i}")));
        }
        let mut parts = vec![d - i];
        parts.extend(std::iter::repeat(1).take(i as usize));
        Partition::new(parts)
    }

    pub fn is_hook(&self) -> bool {
        self.parts[1..].iter().all(|&x| x == 1)
    }

    pub fn dual(&self) -> Partition {
        let cols = self.parts[0];
        let parts = (0..cols).map(|j| self.parts.iter().filter(|&&r| r > j).count() as u32).collect();
        Partition { parts }
    }

    pub fn hook_length(&self, i: usize, j: usize) -> u32 {
        let col_len = self.parts.iter().filter(|&&r| r as usize > j).count();
        (self.parts[i] as usize - j + col_len - i - 1) as u32
    }

    /// Hook length formula.
    pub fn specht_dim(&self) -> u64 {
        let d = self.d() as u64;
        let mut hooks: Vec<u64> = Vec::new();
        for (i, &r) in self.parts.iter().enumerate() {
            for j in 0..r as usize {
                hooks.push(self.hook_length(i, j) as u64);
            }
        }
        // divide as we go to stay in range
        let mut num: u128 = 1;
        for k in 1..=d {
            num *= k as u128;
        }
        for h in hooks {
            num /= h as u128;
        }
        num as u64
    }

    /// First part subtracted from d.
    pub fn depth(&self) -> u32 {
        self.d() - self.parts[0]
    }

    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .or_else(|| t.strip_prefix('(').and_then(|x| x.strip_suffix(')')))
            .unwrap_or(t);
        let parts: std::result::Result<Vec<u32>, _> =
            inner.split(',').map(|x| x.trim().parse::<u32>()).collect();
        Partition::new(parts.map_err(|_| SymError::InvalidPartition(s.to_string()))?)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `d` in reverse lexicographic order, `(d)` first.
pub fn partitions_of(d: u32) -> Result<Vec<Partition>> {
    if !(1..=12).contains(&d) {
        return Err(SymError::DegreeOutOfRange(d));
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for k in (1..=rem.min(max)).rev() {
            cur.push(k);
            rec(rem - k, k, cur, out);
            cur.pop();
        }
    }
    rec(d, d, &mut cur, &mut out);
    Ok(out)
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r as i64
}
