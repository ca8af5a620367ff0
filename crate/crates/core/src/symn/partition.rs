use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest `n` for which partition tables are cached.
pub const MAX_N: usize = 20;

/// A partition of `n`, parts weakly decreasing and positive. Read as the
/// cycle type of a permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// `(1^n)`, the cycle type of the identity.
    pub fn ones(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, i.e. the number of cycles `c(w)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn has_even_part(&self) -> bool {
        self.parts.iter().any(|p| p % 2 == 0)
    }

    pub fn has_odd_part(&self) -> bool {
        self.parts.iter().any(|p| p % 2 == 1)
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Centralizer order `z = prod_i i^{m_i} m_i!`.
    pub fn z(&self) -> i64 {
        self.multiplicities()
            .iter()
            .map(|&(i, m)| (i as i64).pow(m as u32) * (1..=m as i64).product::<i64>())
            .product()
    }

    /// `(-1)^(n - c)`.
    pub fn sign(&self) -> i64 {
        if (self.size() - self.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// A permutation of `0..n` with this cycle type, cycles on consecutive points.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm = Vec::with_capacity(self.size());
        let mut start = 0;
        for &p in &self.parts {
            for k in 0..p {
                perm.push(start + (k + 1) % p);
            }
            start += p;
        }
        perm
    }

    /// The partition obtained by deleting one copy of `part`.
    pub fn without_part(&self, part: usize) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == part)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join("+"))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "0" {
            return Ok(Partition::empty());
        }
        s.split('+')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidArgument(format!("bad partition '{s}'"))))
            .collect::<Result<Vec<_>>>()
            .map(Partition::new)
    }
}

/// Cycle type of a permutation of `0..n`.
pub fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        parts.push(len);
    }
    Partition::new(parts)
}

/// All partitions of `n` in reverse lexicographic order: `(n)` first, `(1^n)` last.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            rec(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug)]
pub struct PartitionTable {
    pub partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
}

impl PartitionTable {
    pub fn index_of(&self, p: &Partition) -> usize {
        self.index[p]
    }
}

static TABLES: [OnceLock<PartitionTable>; MAX_N + 1] = [const { OnceLock::new() }; MAX_N + 1];

pub fn table(n: usize) -> &'static PartitionTable {
    assert!(n <= MAX_N, "partition tables are cached only up to n = {MAX_N}");
    TABLES[n].get_or_init(|| {
        let partitions = partitions(n);
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        PartitionTable { partitions, index }
    })
}
