//! Pictures between skew diagrams: bijections between boxes such that
//! whenever box A is weakly above and weakly right of box B in one diagram,
//! the corresponding boxes are in lexicographic order in the other diagram,
//! in both directions. The number of pictures between a straight shape λ and
//! a skew shape ν/μ equals the Littlewood–Richardson coefficient, which the
//! test suite exercises as a cross-check between the two enumerators.

use crate::shapes::{Partition, SkewShape};
use serde::{Deserialize, Serialize};

/// A box position: 1-based (row, col), rows running down.
pub type Box = (usize, usize);

/// A bijection from the boxes of `domain` to the boxes of `codomain`
/// satisfying the two-sided lexicographic condition.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Picture {
    domain: SkewShape,
    codomain: SkewShape,
    /// Image of each domain box, indexed in row-major order of the domain.
    images: Vec<Box>,
}

fn lex_before(a: Box, b: Box) -> bool {
    a.0 < b.0 || (a.0 == b.0 && a.1 < b.1)
}

/// Whether `a` is weakly above and weakly right of `b` (and distinct).
fn weakly_above_right(a: Box, b: Box) -> bool {
    a != b && a.0 <= b.0 && a.1 >= b.1
}

/// The picture condition for one directed pair of box assignments.
fn pair_ok(x: Box, fx: Box, y: Box, fy: Box) -> bool {
    // Condition on the forward map.
    if weakly_above_right(x, y) && !lex_before(fx, fy) {
        return false;
    }
    if weakly_above_right(y, x) && !lex_before(fy, fx) {
        return false;
    }
    // Condition on the inverse map.
    if weakly_above_right(fx, fy) && !lex_before(x, y) {
        return false;
    }
    if weakly_above_right(fy, fx) && !lex_before(y, x) {
        return false;
    }
    true
}

impl Picture {
    /// Validates a candidate bijection. `images[k]` is the image of the
    /// k-th domain box in row-major order.
    pub fn new(domain: SkewShape, codomain: SkewShape, images: Vec<Box>) -> Option<Picture> {
        let boxes = domain.boxes();
        if boxes.len() != images.len() || domain.size() != codomain.size() {
            return None;
        }
        let mut seen = std::collections::BTreeSet::new();
        for img in &images {
            if !codomain.contains_box(img.0, img.1) || !seen.insert(*img) {
                return None;
            }
        }
        for a in 0..boxes.len() {
            for b in (a + 1)..boxes.len() {
                if !pair_ok(boxes[a], images[a], boxes[b], images[b]) {
                    return None;
                }
            }
        }
        Some(Picture { domain, codomain, images })
    }

    pub fn domain(&self) -> &SkewShape {
        &self.domain
    }

    pub fn codomain(&self) -> &SkewShape {
        &self.codomain
    }

    /// Image of a domain box.
    pub fn image_of(&self, b: Box) -> Option<Box> {
        self.domain
            .boxes()
            .iter()
            .position(|&x| x == b)
            .map(|k| self.images[k])
    }

    /// The (domain box, image box) pairs in row-major domain order.
    pub fn pairs(&self) -> Vec<(Box, Box)> {
        self.domain.boxes().into_iter().zip(self.images.iter().copied()).collect()
    }
}

fn enumerate_inner(
    lambda: &Partition,
    skew: &SkewShape,
    first_only: bool,
) -> Vec<Picture> {
    let domain = SkewShape::from_straight(lambda.trimmed());
    let dom_boxes = domain.boxes();
    let cod_boxes = skew.boxes();
    let mut out = Vec::new();
    if dom_boxes.len() != cod_boxes.len() {
        return out;
    }
    let k = dom_boxes.len();
    let mut images: Vec<Box> = Vec::with_capacity(k);
    let mut used = vec![false; k];

    fn recurse(
        idx: usize,
        dom_boxes: &[Box],
        cod_boxes: &[Box],
        used: &mut Vec<bool>,
        images: &mut Vec<Box>,
        out: &mut Vec<Picture>,
        domain: &SkewShape,
        skew: &SkewShape,
        first_only: bool,
    ) -> bool {
        if idx == dom_boxes.len() {
            out.push(Picture {
                domain: domain.clone(),
                codomain: skew.clone(),
                images: images.clone(),
            });
            return !first_only;
        }
        let x = dom_boxes[idx];
        for (c, &cand) in cod_boxes.iter().enumerate() {
            if used[c] {
                continue;
            }
            if (0..idx).all(|a| pair_ok(dom_boxes[a], images[a], x, cand)) {
                used[c] = true;
                images.push(cand);
                let keep = recurse(idx + 1, dom_boxes, cod_boxes, used, images, out, domain, skew, first_only);
                images.pop();
                used[c] = false;
                if !keep {
                    return false;
                }
            }
        }
        true
    }

    recurse(
        0, &dom_boxes, &cod_boxes, &mut used, &mut images, &mut out, &domain, skew, first_only,
    );
    out
}

/// All pictures from the straight shape `λ` to the skew shape, in
/// deterministic order (sorted by the image sequence of λ's boxes in
/// row-major order). Empty when the box counts differ.
pub fn enumerate_pictures(lambda: &Partition, skew: &SkewShape) -> Vec<Picture> {
    enumerate_inner(lambda, skew, false)
}

/// The first picture in the enumeration order, if any.
pub fn first_picture(lambda: &Partition, skew: &SkewShape) -> Option<Picture> {
    enumerate_inner(lambda, skew, true).into_iter().next()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lr::lr_coefficient;

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn empty_picture() {
        let skew = SkewShape::new(p(&[1]), p(&[1])).unwrap();
        let pics = enumerate_pictures(&p(&[]), &skew);
        assert_eq!(pics.len(), 1);
    }

    #[test]
    fn size_mismatch_gives_none() {
        let skew = SkewShape::new(p(&[2]), p(&[])).unwrap();
        assert!(enumerate_pictures(&p(&[1]), &skew).is_empty());
    }

    #[test]
    fn row_shape_picture_reverses() {
        // The unique picture between two rows of length 2 reverses the row.
        let skew = SkewShape::from_straight(p(&[2]));
        let pics = enumerate_pictures(&p(&[2]), &skew);
        assert_eq!(pics.len(), 1);
        assert_eq!(pics[0].image_of((1, 1)), Some((1, 2)));
        assert_eq!(pics[0].image_of((1, 2)), Some((1, 1)));
    }

    #[test]
    fn column_shape_picture_is_identity() {
        let skew = SkewShape::from_straight(p(&[1, 1]));
        let pics = enumerate_pictures(&p(&[1, 1]), &skew);
        assert_eq!(pics.len(), 1);
        assert_eq!(pics[0].image_of((1, 1)), Some((1, 1)));
    }

    #[test]
    fn counts_match_lr_small() {
        let cases = [
            (p(&[1]), p(&[1]), p(&[2])),
            (p(&[1]), p(&[1]), p(&[1, 1])),
            (p(&[1, 2]), p(&[1, 2]), p(&[1, 2, 3])),
            (p(&[1, 2]), p(&[1, 1]), p(&[1, 1, 3])),
            (p(&[2, 2]), p(&[1, 2]), p(&[1, 2, 4])),
        ];
        for (lambda, mu, nu) in cases {
            let skew = SkewShape::new(nu.clone(), mu.clone()).unwrap();
            let pics = enumerate_pictures(&lambda, &skew);
            let c = lr_coefficient(&lambda, &mu, &nu);
            assert_eq!(pics.len() as u64, c, "mismatch for {lambda} {mu} {nu}");
        }
    }

    #[test]
    fn enumeration_is_sorted() {
        let skew = SkewShape::new(p(&[6, 6, 7]), p(&[4, 4, 5])).unwrap();
        let pics = enumerate_pictures(&p(&[1, 2, 3]), &skew);
        assert!(!pics.is_empty());
        let keys: Vec<Vec<Box>> = pics.iter().map(|p| p.images.clone()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }
}
