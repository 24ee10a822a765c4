//! Compositions and partitions: the index sets of everything else.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of positive integers. The empty composition is written `()`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidComposition(format!(
                "parts must be positive, got {parts:?}"
            )));
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The partition obtained by sorting the parts in weakly decreasing order.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The composition with the parts listed in reverse order.
    pub fn reversed(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }

    /// The proper partial sums `{a1, a1+a2, ...}` excluding the total; a subset of `[n-1]`.
    pub fn set(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut acc = 0;
        for &p in self.parts.iter().take(self.parts.len().saturating_sub(1)) {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// Inverse of [`Composition::set`]: the composition of `n` with the given proper partial sums.
    pub fn from_set(set: &[usize], n: usize) -> Result<Self> {
        let mut sums: Vec<usize> = set.to_vec();
        sums.sort_unstable();
        sums.dedup();
        if sums.iter().any(|&s| s == 0 || s >= n) && n > 0 {
            return Err(Error::InvalidComposition(format!(
                "subset {sums:?} not inside [{}]",
                n - 1
            )));
        }
        if n == 0 {
            if sums.is_empty() {
                return Ok(Composition::empty());
            }
            return Err(Error::InvalidComposition("nonempty subset for n=0".into()));
        }
        sums.push(n);
        let mut parts = Vec::with_capacity(sums.len());
        let mut prev = 0;
        for s in sums {
            parts.push(s - prev);
            prev = s;
        }
        Composition::new(parts)
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        Composition { parts }
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{:?}", self.parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Parses comma-separated positive integers; the empty string parses to the
    /// empty composition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Composition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let p: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("invalid part {tok:?} in {s:?}")))?;
            parts.push(p);
        }
        Composition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// A composition whose parts weakly decrease.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!(
                "parts must be positive, got {parts:?}"
            )));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must weakly decrease, got {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The i-th part (1-indexed), 0 beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 || i > self.parts.len() {
            0
        } else {
            self.parts[i - 1]
        }
    }

    /// Componentwise containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.parts.len() <= self.parts.len()
            && other
                .parts
                .iter()
                .zip(self.parts.iter())
                .all(|(o, s)| o <= s)
    }

    /// The transpose (conjugate) partition.
    pub fn transpose(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Column heights as a vector indexed by column (1-indexed via `heights[c-1]`).
    pub fn column_heights(&self) -> Vec<usize> {
        self.transpose().parts
    }

    pub fn reversed(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }

    pub fn as_composition(&self) -> Composition {
        Composition {
            parts: self.parts.clone(),
        }
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Composition {
        Composition { parts: p.parts }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let c: Composition = s.parse()?;
        Partition::new(c.parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// All compositions of `n` in lexicographic order.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    fn go(rem: usize, acc: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rem == 0 {
            out.push(Composition { parts: acc.clone() });
            return;
        }
        for p in 1..=rem {
            acc.push(p);
            go(rem - p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `n`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rem: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: acc.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            acc.push(p);
            go(rem - p, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions contained in `lambda` (including the empty one and `lambda` itself).
pub fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    fn build(lambda: &[usize], row: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition { parts: acc.clone() });
        if row == lambda.len() {
            return;
        }
        for p in 1..=lambda[row].min(max) {
            acc.push(p);
            build(lambda, row + 1, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    build(lambda.parts(), 0, usize::MAX, &mut Vec::new(), &mut out);
    out
}

/// All distinct rearrangements of the parts of `p`, as compositions.
pub fn rearrangements(p: &Partition) -> Vec<Composition> {
    fn go(pool: &mut Vec<usize>, acc: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if pool.is_empty() {
            out.push(Composition { parts: acc.clone() });
            return;
        }
        let mut seen = Vec::new();
        for i in 0..pool.len() {
            let v = pool[i];
            if seen.contains(&v) {
                continue;
            }
            seen.push(v);
            pool.remove(i);
            acc.push(v);
            go(pool, acc, out);
            acc.pop();
            pool.insert(i, v);
        }
    }
    let mut pool = p.parts().to_vec();
    let mut out = Vec::new();
    go(&mut pool, &mut Vec::new(), &mut out);
    out
}
