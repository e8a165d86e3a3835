//! Young diagrams in the French convention: rows are left justified and
//! weakly increase in length moving down. Row 1 is the top (shortest) row,
//! and partitions are stored as that weakly increasing sequence, explicit
//! zero rows allowed.

use crate::error::ParseError;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A partition with a fixed number of rows, weakly increasing downward.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    pub fn new(rows: Vec<usize>) -> Result<Self, ParseError> {
        if rows.windows(2).any(|w| w[0] > w[1]) {
            return Err(ParseError::NotWeaklyIncreasing(format!("{rows:?}")));
        }
        Ok(Partition { rows })
    }

    pub fn empty(num_rows: usize) -> Self {
        Partition { rows: vec![0; num_rows] }
    }

    /// Row lengths, top row first.
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Length of 1-based row `r` (0 when beyond the stored rows, counting
    /// missing top rows as empty).
    pub fn row(&self, r: usize) -> usize {
        if r == 0 || r > self.rows.len() {
            0
        } else {
            self.rows[r - 1]
        }
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Drops zero rows from the top, giving the canonical shape.
    pub fn trimmed(&self) -> Partition {
        let first = self.rows.iter().position(|&r| r > 0).unwrap_or(self.rows.len());
        Partition { rows: self.rows[first..].to_vec() }
    }

    /// Prepends zero rows so the partition has `num_rows` rows.
    pub fn padded_to(&self, num_rows: usize) -> Partition {
        assert!(num_rows >= self.trimmed().num_rows());
        let trimmed = self.trimmed();
        let mut rows = vec![0; num_rows - trimmed.num_rows()];
        rows.extend_from_slice(trimmed.rows());
        Partition { rows }
    }

    /// Containment as shapes, aligning both at the bottom row.
    pub fn contains(&self, other: &Partition) -> bool {
        let a = self.trimmed();
        let b = other.trimmed();
        if b.num_rows() > a.num_rows() {
            return false;
        }
        let offset = a.num_rows() - b.num_rows();
        b.rows.iter().enumerate().all(|(k, &len)| len <= a.rows[offset + k])
    }

    /// Adds `amount` boxes to every row, including rows of length zero.
    pub fn shifted(&self, amount: usize) -> Partition {
        Partition { rows: self.rows.iter().map(|r| r + amount).collect() }
    }

    /// The complement inside a `rows × cols` rectangle viewed upside down:
    /// row `i` of the result is `cols − row(rows+1−i)` of this shape.
    pub fn complement_in(&self, num_rows: usize, cols: usize) -> Partition {
        assert!(self.num_rows() <= num_rows);
        let padded = self.padded_to(num_rows);
        let rows: Vec<usize> = (0..num_rows)
            .map(|i| {
                let mirrored = padded.rows[num_rows - 1 - i];
                assert!(mirrored <= cols, "shape exceeds rectangle");
                cols - mirrored
            })
            .collect();
        Partition { rows }
    }

    /// Whether the shape fits inside a `rows × cols` rectangle.
    pub fn fits_in(&self, num_rows: usize, cols: usize) -> bool {
        let t = self.trimmed();
        t.num_rows() <= num_rows && t.rows.iter().all(|&r| r <= cols)
    }

    /// Boxes in row-major order (top row first, left to right), as
    /// 1-based (row, col) pairs.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (r, &len) in self.rows.iter().enumerate() {
            for c in 1..=len {
                out.push((r + 1, c));
            }
        }
        out
    }

    /// Multiplicity of each value in fillings of content `self`: value `v`
    /// occurs `row_from_bottom(v)` times (the English reading of the shape).
    pub fn content_counts(&self) -> Vec<usize> {
        let t = self.trimmed();
        t.rows.iter().rev().copied().collect()
    }

    /// Parses comma-separated row lengths, e.g. `"1,2,3"`.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let text = text.trim();
        if text.is_empty() {
            return Partition::new(Vec::new());
        }
        let rows: Vec<usize> = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| ParseError::BadInteger(t.to_string()))
            })
            .collect::<Result<_, _>>()?;
        Partition::new(rows)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A skew shape `outer/inner` with the inner shape contained in the outer,
/// rows aligned at the bottom.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, ParseError> {
        if !outer.contains(&inner) {
            return Err(ParseError::NotWeaklyIncreasing(format!(
                "inner {inner} not contained in outer {outer}"
            )));
        }
        let rows = outer.num_rows().max(inner.trimmed().num_rows());
        Ok(SkewShape {
            outer: outer.padded_to(rows),
            inner: inner.padded_to(rows),
        })
    }

    /// A straight shape viewed as skew over the empty inner shape.
    pub fn from_straight(outer: Partition) -> Self {
        let rows = outer.num_rows();
        SkewShape { outer, inner: Partition::empty(rows) }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn num_rows(&self) -> usize {
        self.outer.num_rows()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Skew boxes in row-major order as 1-based (row, col) pairs; row `r`
    /// contributes columns `inner_r+1 ..= outer_r`.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for r in 1..=self.num_rows() {
            for c in (self.inner.row(r) + 1)..=self.outer.row(r) {
                out.push((r, c));
            }
        }
        out
    }

    pub fn contains_box(&self, r: usize, c: usize) -> bool {
        r >= 1 && r <= self.num_rows() && c > self.inner.row(r) && c <= self.outer.row(r)
    }
}

/// Enumerates all partitions of `size` boxes fitting in a `rows × cols`
/// rectangle, trimmed, in lexicographic order of the row vector.
pub fn partitions_in_box(size: usize, rows: usize, cols: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut acc: Vec<usize> = Vec::new();
    fn recurse(
        remaining: usize,
        rows_left: usize,
        min_len: usize,
        cols: usize,
        acc: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition { rows: acc.clone() });
            return;
        }
        if rows_left == 0 || remaining > rows_left * cols {
            return;
        }
        // Next row length, at least the previous (rows grow downward) and
        // at least ceil(remaining/rows_left) is not required since later rows
        // can be longer; bound by cols and remaining.
        let lo = min_len.max(1).max(remaining.saturating_sub((rows_left - 1) * cols));
        for len in lo..=cols.min(remaining) {
            acc.push(len);
            recurse(remaining - len, rows_left - 1, len, cols, acc, out);
            acc.pop();
        }
    }
    if size == 0 {
        out.push(Partition { rows: Vec::new() });
        return out;
    }
    recurse(size, rows, 0, cols, &mut acc, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trim_and_pad() {
        let p = Partition::new(vec![0, 0, 1, 2]).unwrap();
        assert_eq!(p.trimmed(), Partition::new(vec![1, 2]).unwrap());
        assert_eq!(p.trimmed().padded_to(4), p);
        assert_eq!(p.size(), 3);
    }

    #[test]
    fn containment_aligns_at_bottom() {
        let big = Partition::new(vec![1, 3]).unwrap();
        let small = Partition::new(vec![1]).unwrap();
        assert!(big.contains(&small));
        // (1) sits in the bottom row; (2) does not fit in (1,3)'s top row
        // but does fit the bottom row.
        let two = Partition::new(vec![2]).unwrap();
        assert!(big.contains(&two));
        let twotwo = Partition::new(vec![2, 2]).unwrap();
        assert!(!twotwo.contains(&Partition::new(vec![1, 1, 1]).unwrap()));
    }

    #[test]
    fn complement_matches_example() {
        // Complement of (0,1,1) in a 3×7 rectangle, upside down, is (6,6,7).
        let nu_shape = Partition::new(vec![0, 1, 1]).unwrap();
        assert_eq!(
            nu_shape.complement_in(3, 7),
            Partition::new(vec![6, 6, 7]).unwrap()
        );
    }

    #[test]
    fn skew_boxes() {
        let outer = Partition::new(vec![6, 6, 7]).unwrap();
        let inner = Partition::new(vec![4, 4, 5]).unwrap();
        let skew = SkewShape::new(outer, inner).unwrap();
        assert_eq!(skew.size(), 6);
        assert_eq!(
            skew.boxes(),
            vec![(1, 5), (1, 6), (2, 5), (2, 6), (3, 6), (3, 7)]
        );
    }

    #[test]
    fn box_enumeration() {
        assert_eq!(partitions_in_box(0, 4, 4).len(), 1);
        // Partitions of 4 in a 4×4 box: (4), (1,3), (2,2), (1,1,2), (1,1,1,1).
        assert_eq!(partitions_in_box(4, 4, 4).len(), 5);
        assert!(partitions_in_box(5, 1, 4).is_empty());
    }

    #[test]
    fn content_counts_reverse_rows() {
        let p = Partition::new(vec![1, 2, 3]).unwrap();
        assert_eq!(p.content_counts(), vec![3, 2, 1]);
    }
}
