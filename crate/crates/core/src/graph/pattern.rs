use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::validate_permutation;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// Consecutive labels increase.
    A,
    /// Consecutive labels decrease.
    D,
}

impl Letter {
    pub fn swap(self) -> Letter {
        match self {
            Letter::A => Letter::D,
            Letter::D => Letter::A,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::D => 'd',
        }
    }
}

/// Ascent/descent word of a labeled path: one letter per pair of consecutive
/// positions.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct ADPattern(Vec<Letter>);

impl ADPattern {
    pub fn new(letters: Vec<Letter>) -> Self {
        ADPattern(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of vertices of a path with this pattern.
    pub fn vertex_count(&self) -> usize {
        self.0.len() + 1
    }

    /// Exchanges every `a` with `d`.
    pub fn swapped(&self) -> ADPattern {
        ADPattern(self.0.iter().map(|l| l.swap()).collect())
    }

    /// Pattern of the same path read from the other end.
    pub fn reversal_partner(&self) -> ADPattern {
        ADPattern(self.0.iter().rev().map(|l| l.swap()).collect())
    }

    /// All `2^len` patterns of the given length, `a` before `d` at every
    /// position (so `aa..a` comes first and `dd..d` last).
    pub fn all(len: usize) -> Vec<ADPattern> {
        (0..1u64 << len)
            .map(|bits| {
                ADPattern(
                    (0..len)
                        .map(|i| {
                            if bits >> (len - 1 - i) & 1 == 1 {
                                Letter::D
                            } else {
                                Letter::A
                            }
                        })
                        .collect(),
                )
            })
            .collect()
    }

    /// A permutation of `1..=len+1` whose ad-pattern is `self`: the identity
    /// with every maximal run of descents reversed.
    pub fn canonical_labeling(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut labels: Vec<usize> = (1..=n).collect();
        let mut i = 0;
        while i < self.0.len() {
            if self.0[i] == Letter::D {
                let start = i;
                while i < self.0.len() && self.0[i] == Letter::D {
                    i += 1;
                }
                labels[start..=i].reverse();
            } else {
                i += 1;
            }
        }
        labels
    }
}

/// Ad-pattern of the path labeled `labeling` (positions in order).
pub fn ad_pattern(labeling: &[usize]) -> Result<ADPattern> {
    validate_permutation(labeling)?;
    Ok(ADPattern(
        labeling
            .windows(2)
            .map(|w| if w[0] < w[1] { Letter::A } else { Letter::D })
            .collect(),
    ))
}

impl fmt::Display for ADPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for ADPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                'a' | 'A' => Ok(Letter::A),
                'd' | 'D' => Ok(Letter::D),
                other => Err(Error::InvalidPattern(format!(
                    "unexpected character {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(ADPattern)
    }
}

impl From<ADPattern> for String {
    fn from(p: ADPattern) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for ADPattern {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}
