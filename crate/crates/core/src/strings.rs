//! 01-strings indexing Schubert classes on the Grassmannian, and their
//! associated Young diagrams.

use crate::error::ParseError;
use crate::shapes::Partition;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A word over {0,1}; a `0^{n−l}1^l`-string has length `n` and exactly `l`
/// ones.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ZeroOneString {
    word: Vec<bool>,
}

impl ZeroOneString {
    pub fn new(word: Vec<bool>) -> Result<Self, ParseError> {
        if word.is_empty() {
            return Err(ParseError::BadZeroOneString(String::new()));
        }
        Ok(ZeroOneString { word })
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(ParseError::BadZeroOneString(text.to_string()));
        }
        let word = text
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(ParseError::BadZeroOneString(text.to_string())),
            })
            .collect::<Result<_, _>>()?;
        Ok(ZeroOneString { word })
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// Number of ones.
    pub fn l(&self) -> usize {
        self.word.iter().filter(|&&b| b).count()
    }

    /// 1-based digit access.
    pub fn digit(&self, i: usize) -> bool {
        self.word[i - 1]
    }

    /// Positions of the zeros, increasing.
    pub fn zero_positions(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| !self.digit(i)).collect()
    }

    /// Positions of the ones, increasing.
    pub fn one_positions(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.digit(i)).collect()
    }

    /// The reversed string, indexing the opposite Schubert class.
    pub fn reversed(&self) -> ZeroOneString {
        ZeroOneString { word: self.word.iter().rev().copied().collect() }
    }

    /// The identity-class string `0…01…1` with the same `n` and `l`.
    pub fn identity_class(n: usize, l: usize) -> ZeroOneString {
        assert!(l <= n);
        let mut word = vec![false; n - l];
        word.extend(std::iter::repeat(true).take(l));
        ZeroOneString { word }
    }

    /// All `0^{n−l}1^l`-strings, in lexicographic order.
    pub fn all(n: usize, l: usize) -> Vec<ZeroOneString> {
        let mut out = Vec::new();
        let mut word = vec![false; n];
        fn recurse(word: &mut Vec<bool>, idx: usize, ones_left: usize, out: &mut Vec<ZeroOneString>) {
            if idx == word.len() {
                if ones_left == 0 {
                    out.push(ZeroOneString { word: word.clone() });
                }
                return;
            }
            if word.len() - idx < ones_left {
                return;
            }
            word[idx] = false;
            recurse(word, idx + 1, ones_left, out);
            if ones_left > 0 {
                word[idx] = true;
                recurse(word, idx + 1, ones_left - 1, out);
                word[idx] = false;
            }
        }
        recurse(&mut word, 0, l, &mut out);
        out
    }
}

/// The Young diagram `λ(σ)`: row `i` is the number of ones before the `i`-th
/// zero, on `n−l` rows.
pub fn shape_of_string(sigma: &ZeroOneString) -> Partition {
    let mut rows = Vec::new();
    let mut ones = 0;
    for i in 1..=sigma.n() {
        if sigma.digit(i) {
            ones += 1;
        } else {
            rows.push(ones);
        }
    }
    Partition::new(rows).expect("counts are weakly increasing")
}

/// Adds `amount` boxes to each row, including zero-length rows.
pub fn shift_shape(shape: &Partition, amount: usize) -> Partition {
    shape.shifted(amount)
}

impl fmt::Display for ZeroOneString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.word {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for ZeroOneString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl TryFrom<String> for ZeroOneString {
    type Error = ParseError;
    fn try_from(s: String) -> Result<Self, ParseError> {
        ZeroOneString::parse(&s)
    }
}

impl From<ZeroOneString> for String {
    fn from(s: ZeroOneString) -> String {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_of_strings() {
        let s = ZeroOneString::parse("0001111").unwrap();
        assert_eq!(shape_of_string(&s), Partition::new(vec![0, 0, 0]).unwrap());
        let s = ZeroOneString::parse("1110000").unwrap();
        assert_eq!(shape_of_string(&s), Partition::new(vec![3, 3, 3, 3]).unwrap());
        let s = ZeroOneString::parse("1010101").unwrap();
        assert_eq!(shape_of_string(&s), Partition::new(vec![1, 2, 3]).unwrap());
    }

    #[test]
    fn shift_examples() {
        let z = Partition::new(vec![0, 0, 0]).unwrap();
        assert_eq!(shift_shape(&z, 3), Partition::new(vec![3, 3, 3]).unwrap());
        let mu = shape_of_string(&ZeroOneString::parse("1001011").unwrap());
        assert_eq!(mu, Partition::new(vec![1, 1, 2]).unwrap());
        assert_eq!(shift_shape(&mu, 3), Partition::new(vec![4, 4, 5]).unwrap());
        assert_eq!(shift_shape(&mu, 0), mu);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(ZeroOneString::all(5, 2).len(), 10);
        assert_eq!(ZeroOneString::all(4, 0).len(), 1);
    }

    #[test]
    fn reversal_is_involutive() {
        let s = ZeroOneString::parse("0100111").unwrap();
        assert_eq!(s.reversed().reversed(), s);
        assert_eq!(s.reversed().to_string(), "1110010");
    }
}
