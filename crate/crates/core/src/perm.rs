//! Permutations in one-line notation.
//!
//! Positions and values are 1-based throughout. The degree is always explicit:
//! `213` and `2134` are different permutations.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line word `w(1) .. w(n)`.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::InvalidPermutation("empty word".into()));
        }
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} outside 1..={n}"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "degree must be positive");
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// The longest element `n (n-1) .. 1`.
    pub fn longest(n: usize) -> Self {
        assert!(n >= 1, "degree must be positive");
        Permutation {
            word: (1..=n).rev().collect(),
        }
    }

    /// All permutations of degree `n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n).permutations(n).map(|word| Permutation { word })
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (k, &v) in self.word.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Permutation { word: inv }
    }

    /// Composition `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "degree mismatch");
        Permutation {
            word: other.word.iter().map(|&v| self.at(v)).collect(),
        }
    }

    /// Whether the values `i < j` form an inversion, i.e. `i` appears to the right of `j`.
    pub fn is_inversion(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < j && j <= self.n());
        let inv = self.inverse();
        inv.at(i) > inv.at(j)
    }

    /// The inversions `(i, j)`, `i < j`, with `w⁻¹(i) > w⁻¹(j)`, in lexicographic order.
    /// This is the box set of the inversions diagram.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let inv = self.inverse();
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if inv.at(i) > inv.at(j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn length(&self) -> usize {
        self.lehmer_code().iter().sum()
    }

    /// `c(i) = #{ j > i : w(i) > w(j) }`.
    pub fn lehmer_code(&self) -> Vec<usize> {
        let w = &self.word;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count())
            .collect()
    }

    /// Deletes the value `n` from the word.
    pub fn hat(&self) -> Result<Permutation> {
        if self.n() < 2 {
            return Err(Error::InvalidPermutation(
                "cannot delete from degree 1".into(),
            ));
        }
        Ok(self.restrict_values(self.n() - 1))
    }

    /// Deletes every value greater than `m`, keeping the relative order of the rest.
    pub fn restrict_values(&self, m: usize) -> Permutation {
        assert!(m >= 1 && m <= self.n(), "restriction bound out of range");
        Permutation {
            word: self.word.iter().copied().filter(|&v| v <= m).collect(),
        }
    }

    /// The doubled permutation in `S_{2n}`: fixes `1..=n`, and sends
    /// `i > n` to `2n + 1 - w(2n + 1 - i)`.
    pub fn triforce(&self) -> Permutation {
        let n = self.n();
        let mut word: Vec<usize> = (1..=n).collect();
        for i in n + 1..=2 * n {
            word.push(2 * n + 1 - self.at(2 * n + 1 - i));
        }
        Permutation { word }
    }

    /// Swaps the entries in positions `r` and `r + 1`.
    pub fn swap_positions(&self, r: usize) -> Permutation {
        let mut word = self.word.clone();
        word.swap(r - 1, r);
        Permutation { word }
    }
}

impl fmt::Display for Permutation {
    /// Digits concatenated when `n <= 9`, comma separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.word.iter().join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// A comma anywhere switches to comma-separated parsing; otherwise every
    /// character is a single digit.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word = if s.contains(',') {
            s.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidPermutation(format!("bad entry {part:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidPermutation(format!("bad digit {c:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(word)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
