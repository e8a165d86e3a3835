//! Permutations in one-line notation, indexing Schubert classes on the flag manifold.

use crate::error::ParseError;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A permutation of `{1..n}` in one-line notation `π(1) π(2) … π(n)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line images, checking bijectivity.
    pub fn new(images: Vec<usize>) -> Result<Self, ParseError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(ParseError::NotAPermutation(n));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// The identity permutation of `S_n`.
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// The long word `w₀ = n … 2 1` of `S_n`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            images: (1..=n).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of `i` (1-based).
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Coxeter length: the number of inversions `{(i,j) : i<j, π(i)>π(j)}`.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 1..=n {
            for j in (i + 1)..=n {
                if self.image(i) > self.image(j) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Left multiplication by the long word: `(w₀π)(i) = n+1−π(i)`.
    pub fn w0_times(&self) -> Self {
        let n = self.n();
        Permutation {
            images: self.images.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut images = vec![0; n];
        for i in 1..=n {
            images[self.image(i) - 1] = i;
        }
        Permutation { images }
    }

    /// Swaps the images at positions `i` and `i+1` (right multiplication by `s_i`).
    pub fn times_adjacent(&self, i: usize) -> Self {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// Swaps the images at positions `a < b` (right multiplication by `t_{ab}`).
    pub fn times_transposition(&self, a: usize, b: usize) -> Self {
        let mut images = self.images.clone();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    /// The Lehmer code: `c_i = #{j > i : π(j) < π(i)}`.
    pub fn lehmer_code(&self) -> Vec<usize> {
        let n = self.n();
        (1..=n)
            .map(|i| ((i + 1)..=n).filter(|&j| self.image(j) < self.image(i)).count())
            .collect()
    }

    /// Reconstructs a permutation from a Lehmer code (trailing zeros trimmed
    /// to the smallest symmetric group containing it).
    pub fn from_lehmer_code(code: &[usize]) -> Self {
        let mut size = code.len();
        for (i, &c) in code.iter().enumerate() {
            size = size.max(i + 1 + c);
        }
        let mut pool: Vec<usize> = (1..=size).collect();
        let mut images = Vec::with_capacity(size);
        for i in 0..size {
            let c = code.get(i).copied().unwrap_or(0);
            images.push(pool.remove(c));
        }
        Permutation { images }
    }

    /// Views this permutation inside a larger `S_m`, fixing the new points.
    pub fn pad_to(&self, m: usize) -> Self {
        assert!(m >= self.n());
        let mut images = self.images.clone();
        images.extend(self.n() + 1..=m);
        Permutation { images }
    }

    /// Drops fixed trailing points `k ↦ k`, keeping at least `min` entries.
    pub fn trim_to(&self, min: usize) -> Self {
        let mut images = self.images.clone();
        while images.len() > min && *images.last().unwrap() == images.len() {
            images.pop();
        }
        Permutation { images }
    }

    /// Positions `i` with `π(i) > π(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.image(i) > self.image(i + 1))
            .collect()
    }

    /// Parses either digit notation (`"3426175"`) or comma-separated
    /// notation (`"10,9,8,7,6,5,4,3,2,1"`), the latter required once n ≥ 10.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let text = text.trim();
        let entries: Vec<usize> = if text.contains(',') {
            text.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| ParseError::BadPermutationEntry(t.to_string()))
                })
                .collect::<Result<_, _>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| ParseError::BadPermutationEntry(c.to_string()))
                })
                .collect::<Result<_, _>>()?
        };
        Permutation::new(entries)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() < 10 {
            for v in &self.images {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn length_counts_inversions() {
        assert_eq!(Permutation::identity(5).length(), 0);
        assert_eq!(Permutation::longest(4).length(), 6);
        assert_eq!(Permutation::parse("3426175").unwrap().length(), 9);
    }

    #[test]
    fn lehmer_code_round_trip() {
        let w = Permutation::parse("3426175").unwrap();
        assert_eq!(Permutation::from_lehmer_code(&w.lehmer_code()), w);
        assert_eq!(Permutation::from_lehmer_code(&[2, 0]), Permutation::parse("312").unwrap());
    }

    #[test]
    fn w0_multiplication() {
        let w = Permutation::parse("213").unwrap();
        assert_eq!(w.w0_times(), Permutation::parse("231").unwrap());
    }

    #[test]
    fn parse_comma_notation() {
        let w = Permutation::parse("2,4,6,1,3,5,7,8,9,10").unwrap();
        assert_eq!(w.n(), 10);
        assert_eq!(w.image(1), 2);
        assert_eq!(w.to_string(), "2,4,6,1,3,5,7,8,9,10");
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::parse("122").is_err());
        assert!(Permutation::parse("140").is_err());
    }
}
