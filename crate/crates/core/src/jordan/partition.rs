use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Integer partition with parts stored in non-increasing order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// From `(part, multiplicity)` pairs in any order.
    pub fn from_multiplicities(pairs: &[(usize, usize)]) -> Self {
        Partition::new(
            pairs
                .iter()
                .flat_map(|&(p, m)| std::iter::repeat_n(p, m))
                .collect(),
        )
    }

    /// The Hilbert vector read as a partition (its nonzero entries).
    pub fn from_hilbert(h: &[usize]) -> Self {
        Partition::new(h.to_vec())
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `(part, multiplicity)` pairs, parts descending.
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

    pub fn multiplicity(&self, part: usize) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    /// Conjugate partition (transpose of the Ferrers diagram).
    pub fn dual(&self) -> Partition {
        let largest = self.parts.first().copied().unwrap_or(0);
        Partition::new(
            (1..=largest)
                .map(|m| self.parts.iter().filter(|&&p| p >= m).count())
                .collect(),
        )
    }

    /// `self ⪯ other`: equal, or more parts, or as many parts and smaller at
    /// the first difference.
    pub fn leq(&self, other: &Partition) -> Result<bool> {
        if self.total() != other.total() {
            return Err(Error::InvalidArgument(format!(
                "cannot compare partitions of {} and {}",
                self.total(),
                other.total()
            )));
        }
        if self.parts.len() != other.parts.len() {
            return Ok(self.parts.len() > other.parts.len());
        }
        Ok(self
            .parts
            .iter()
            .zip(&other.parts)
            .find(|(a, b)| a != b)
            .is_none_or(|(a, b)| a < b))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let pieces: Vec<String> = self
            .multiplicities()
            .into_iter()
            .map(|(p, m)| format!("{p}^{m}"))
            .collect();
        write!(f, "{}", pieces.join(" + "))
    }
}

/// Accepts `"4^1 + 2^3 + 1^2"`, bare parts (`"4 + 2^3"`) and `⊕` separators.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |piece: &str| Error::InvalidArgument(format!("bad partition piece `{piece}`"));
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(Partition::default());
        }
        let mut pairs = Vec::new();
        for piece in s.split(['+', '⊕']) {
            let piece = piece.trim();
            let (p, m) = match piece.split_once('^') {
                Some((p, m)) => (p.trim(), m.trim()),
                None => (piece, "1"),
            };
            let p: usize = p.parse().map_err(|_| bad(piece))?;
            let m: usize = m.parse().map_err(|_| bad(piece))?;
            if p == 0 {
                return Err(bad(piece));
            }
            pairs.push((p, m));
        }
        Ok(Partition::from_multiplicities(&pairs))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[usize; 2]> = self
            .multiplicities()
            .into_iter()
            .map(|(p, m)| [p, m])
            .collect();
        pairs.serialize(s)
    }
}
