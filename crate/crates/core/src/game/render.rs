//! ASCII rendering of game positions.

use super::{board_squares, labels_of_mask, GamePosition, Square};
use std::collections::BTreeMap;

/// Renders the triangular board with row index `i` running down and column
/// index `j` running across. Each square shows its token labels; the letter
/// after the labels names the region the square belongs to, which marks the
/// region boundaries.
pub fn render_ascii(pos: &GamePosition) -> String {
    let n = pos.n();
    let mut region_letter: BTreeMap<Square, char> = BTreeMap::new();
    for (idx, region) in pos.regions().iter().enumerate() {
        let letter = region_char(idx);
        for sq in region {
            region_letter.insert(*sq, letter);
        }
    }

    let cell_text = |sq: Square| -> String {
        let labels = labels_of_mask(pos.mask_at(sq));
        let body = if labels.is_empty() {
            "·".to_string()
        } else if pos.m() <= 9 {
            labels.iter().map(|l| l.to_string()).collect::<String>()
        } else {
            labels
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        format!("{}{}", body, region_letter[&sq])
    };

    let width = board_squares(n)
        .map(|sq| cell_text(sq).chars().count())
        .max()
        .unwrap_or(1)
        .max(2)
        + 1;

    let mut out = String::new();
    out.push_str("    ");
    for j in 2..=n {
        out.push_str(&format!("{:>width$}", format!("j={j}"), width = width));
    }
    out.push('\n');
    for i in 1..n {
        out.push_str(&format!("i={i:<2}"));
        for j in 2..=n {
            if j > i {
                out.push_str(&format!("{:>width$}", cell_text(Square::new(i, j)), width = width));
            } else {
                out.push_str(&" ".repeat(width));
            }
        }
        out.push('\n');
    }
    out
}

fn region_char(idx: usize) -> char {
    const LETTERS: &[u8] = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    LETTERS[idx % LETTERS.len()] as char
}
