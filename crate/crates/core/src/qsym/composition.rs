use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered list of positive integers. Ordering is lexicographic by parts,
/// which is the canonical order used everywhere compositions are listed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!(
                "zero part in {parts:?}"
            )));
        }
        Ok(Composition(parts))
    }

    /// `(n)`, the one-part composition.
    pub fn single(n: usize) -> Result<Self> {
        Composition::new(vec![n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn reverse(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// Parts sorted decreasingly: the partition every rearrangement of this
    /// composition shares.
    pub fn partition_key(&self) -> Vec<usize> {
        let mut key = self.0.clone();
        key.sort_unstable_by(|a, b| b.cmp(a));
        key
    }

    /// `(head, 1, 1, ..., 1, tail)` summing to `n`, or `(head, tail)` when
    /// `head + tail == n`.
    pub fn with_ends(head: usize, tail: usize, n: usize) -> Result<Self> {
        if head + tail > n {
            return Err(Error::InvalidComposition(format!(
                "ends {head} and {tail} exceed {n}"
            )));
        }
        let mut parts = vec![head];
        parts.extend(std::iter::repeat_n(1, n - head - tail));
        parts.push(tail);
        Composition::new(parts)
    }

    /// `(1^before, k, 1^after)`.
    pub fn with_block(before: usize, k: usize, after: usize) -> Result<Self> {
        let mut parts = vec![1; before];
        parts.push(k);
        parts.extend(std::iter::repeat_n(1, after));
        Composition::new(parts)
    }
}

/// All `2^(n-1)` compositions of `n` in lexicographic order.
pub fn compositions_of(n: usize) -> Result<Vec<Composition>> {
    if n == 0 {
        return Err(Error::InvalidComposition(
            "compositions are only enumerated for n >= 1".into(),
        ));
    }
    let mut out = Vec::with_capacity(1 << (n - 1).min(30));
    let mut current = Vec::new();
    extend_compositions(n, &mut current, &mut out);
    Ok(out)
}

fn extend_compositions(left: usize, current: &mut Vec<usize>, out: &mut Vec<Composition>) {
    if left == 0 {
        out.push(Composition(current.clone()));
        return;
    }
    for part in 1..=left {
        current.push(part);
        extend_compositions(left - part, current, out);
        current.pop();
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Accepts `2,2,1`, `(2,2,1)` or `2 2 1`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidComposition(format!("bad part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Vec<usize> {
        c.0
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}
