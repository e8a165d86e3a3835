//! The root game: board squares, token configurations, region partitions,
//! ideal-subset splitting, moves, and winning predicates.
//!
//! All operations are pure: they take a position by reference and return a
//! new position. Token sets per square are stored as bitmasks over labels,
//! which caps the number of labels at 64 (documented limit; far beyond any
//! realistic input).

mod render;

pub use render::render_ascii;

use crate::error::GameError;
use crate::perm::Permutation;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A board square `S_ij` with `1 ≤ i < j ≤ n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Square {
    pub i: usize,
    pub j: usize,
}

impl Square {
    pub fn new(i: usize, j: usize) -> Self {
        debug_assert!(i < j, "square requires i < j");
        Square { i, j }
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl fmt::Debug for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Iterates all squares of the board for a given `n`, in lexicographic order.
pub fn board_squares(n: usize) -> impl Iterator<Item = Square> {
    (1..n).flat_map(move |i| ((i + 1)..=n).map(move |j| Square::new(i, j)))
}

/// Number of squares on the board for `n`.
pub fn board_size(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Token configuration: for each square, the set of labels present, encoded
/// as a bitmask (label `k` ↦ bit `k−1`). Squares without tokens are absent.
pub type TokenConfig = BTreeMap<Square, u64>;

/// Identifier of a region: the lexicographically least square it contains.
pub type RegionId = Square;

/// Winning condition variants.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum WinMode {
    /// Exactly one token in each square.
    Exact,
    /// At most one token in each square.
    AtMostOne,
}

/// A move: within `region`, shift `label`-tokens horizontally from column `i`
/// to column `j` and vertically from row `j` to row `i`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Move {
    pub region: RegionId,
    pub label: usize,
    pub i: usize,
    pub j: usize,
}

/// A full game state: board size, number of labels, token configuration and
/// region partition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GamePosition {
    n: usize,
    m: usize,
    tokens: TokenConfig,
    /// Disjoint nonempty square sets covering the whole board, sorted by
    /// their least square.
    regions: Vec<BTreeSet<Square>>,
}

fn mask_for(label: usize) -> u64 {
    1u64 << (label - 1)
}

/// Decodes a label bitmask into sorted labels.
pub fn labels_of_mask(mask: u64) -> Vec<usize> {
    (1..=64).filter(|&k| mask & mask_for(k) != 0).collect()
}

impl GamePosition {
    /// Builds a position from parts, validating the region partition.
    pub fn from_parts(
        n: usize,
        m: usize,
        tokens: TokenConfig,
        regions: Vec<BTreeSet<Square>>,
    ) -> Result<Self, GameError> {
        if m > 64 {
            return Err(GameError::TooManyLabels(m));
        }
        let all: BTreeSet<Square> = board_squares(n).collect();
        let mut seen: BTreeSet<Square> = BTreeSet::new();
        for region in &regions {
            if region.is_empty() {
                return Err(GameError::DegenerateSplit);
            }
            for sq in region {
                if !all.contains(sq) || !seen.insert(*sq) {
                    return Err(GameError::BadPair { i: sq.i, j: sq.j, n });
                }
            }
        }
        if seen != all {
            return Err(GameError::DegenerateSplit);
        }
        for (sq, &mask) in &tokens {
            if !all.contains(sq) {
                return Err(GameError::BadPair { i: sq.i, j: sq.j, n });
            }
            if mask == 0 || (m < 64 && mask >> m != 0) {
                return Err(GameError::LabelOutOfRange {
                    label: 64,
                    max: m,
                });
            }
        }
        let mut pos = GamePosition { n, m, tokens, regions };
        pos.normalize();
        Ok(pos)
    }

    fn normalize(&mut self) {
        self.tokens.retain(|_, mask| *mask != 0);
        self.regions.sort_by_key(|r| *r.iter().next().unwrap());
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn tokens(&self) -> &TokenConfig {
        &self.tokens
    }

    /// Labels present on a square, as a bitmask.
    pub fn mask_at(&self, sq: Square) -> u64 {
        self.tokens.get(&sq).copied().unwrap_or(0)
    }

    pub fn has_token(&self, label: usize, sq: Square) -> bool {
        self.mask_at(sq) & mask_for(label) != 0
    }

    /// Squares holding a token of the given label, in order.
    pub fn squares_with(&self, label: usize) -> Vec<Square> {
        self.tokens
            .iter()
            .filter(|(_, &mask)| mask & mask_for(label) != 0)
            .map(|(sq, _)| *sq)
            .collect()
    }

    pub fn regions(&self) -> &[BTreeSet<Square>] {
        &self.regions
    }

    /// Identifier of each region, in order.
    pub fn region_ids(&self) -> Vec<RegionId> {
        self.regions.iter().map(|r| *r.iter().next().unwrap()).collect()
    }

    pub fn region(&self, id: RegionId) -> Result<&BTreeSet<Square>, GameError> {
        self.regions
            .iter()
            .find(|r| *r.iter().next().unwrap() == id)
            .ok_or(GameError::UnknownRegion(id))
    }

    /// The region containing a square.
    pub fn region_of(&self, sq: Square) -> RegionId {
        for r in &self.regions {
            if r.contains(&sq) {
                return *r.iter().next().unwrap();
            }
        }
        unreachable!("partition covers the board");
    }

    /// Total number of tokens (with multiplicity across labels).
    pub fn token_count(&self) -> usize {
        self.tokens.values().map(|m| m.count_ones() as usize).sum()
    }

    /// Number of tokens with the given label.
    pub fn label_count(&self, label: usize) -> usize {
        self.tokens
            .values()
            .filter(|&&m| m & mask_for(label) != 0)
            .count()
    }

    /// Potential `Φ = Σ over tokens of (col − row)`; strictly increases under
    /// every token-displacing move, which bounds the length of any play.
    pub fn phi(&self) -> u64 {
        self.tokens
            .iter()
            .map(|(sq, mask)| (sq.j - sq.i) as u64 * mask.count_ones() as u64)
            .sum()
    }

    /// Upper bound for `Φ` over all positions with this board and label count.
    pub fn phi_bound(&self) -> u64 {
        (self.m * board_size(self.n) * (self.n - 1)) as u64
    }

    /// Relabels all `from`-tokens to `to`. Legal only when every `from`-token
    /// sits alone in a one-square region, so the change cannot affect any
    /// subsequent move.
    pub fn relabel(&self, from: usize, to: usize) -> Result<GamePosition, GameError> {
        if from == to || from == 0 || to == 0 || from > self.m || to > self.m {
            return Err(GameError::BadRelabel { from, to });
        }
        let mut next = self.clone();
        for sq in self.squares_with(from) {
            let region = self.region(self.region_of(sq)).unwrap();
            if region.len() != 1 {
                return Err(GameError::RelabelNotIsolated { from, square: sq });
            }
            if self.has_token(to, sq) {
                return Err(GameError::RelabelCollision { to, square: sq });
            }
            let mask = next.tokens.get_mut(&sq).unwrap();
            *mask &= !mask_for(from);
            *mask |= mask_for(to);
        }
        Ok(next)
    }
}

/// Initial position: one region covering the board, and a `k`-token in
/// `S_ij` exactly when `π_k(i) > π_k(j)`.
pub fn initial_position(perms: &[Permutation], n: usize) -> Result<GamePosition, GameError> {
    if perms.is_empty() {
        return Err(GameError::EmptyPermutationList);
    }
    if perms.len() > 64 {
        return Err(GameError::TooManyLabels(perms.len()));
    }
    for p in perms {
        if p.n() != n {
            return Err(GameError::SizeMismatch { expected: n, found: p.n() });
        }
    }
    let mut tokens = TokenConfig::new();
    for sq in board_squares(n) {
        let mut mask = 0u64;
        for (idx, p) in perms.iter().enumerate() {
            if p.image(sq.i) > p.image(sq.j) {
                mask |= mask_for(idx + 1);
            }
        }
        if mask != 0 {
            tokens.insert(sq, mask);
        }
    }
    let regions = vec![board_squares(n).collect::<BTreeSet<Square>>()];
    GamePosition::from_parts(n, perms.len(), tokens, regions)
}

/// Whether `set` is an ideal subset of the board: closed under increasing
/// either index while staying on the board.
pub fn is_ideal(set: &BTreeSet<Square>, n: usize) -> bool {
    for sq in set {
        if sq.j + 1 <= n && !set.contains(&Square::new(sq.i, sq.j + 1)) {
            return false;
        }
        if sq.i + 1 < sq.j && !set.contains(&Square::new(sq.i + 1, sq.j)) {
            return false;
        }
    }
    true
}

/// Whether `subset` is the trace on `region` of some ideal set, i.e. closed
/// upward within `region` under the componentwise order.
pub fn is_ideal_trace(subset: &BTreeSet<Square>, region: &BTreeSet<Square>) -> bool {
    subset.iter().all(|a| {
        region
            .iter()
            .filter(|b| b.i >= a.i && b.j >= a.j)
            .all(|b| subset.contains(b))
    })
}

/// Enumerates all upward-closed subsets of `region` (traces of ideal sets),
/// including the empty set and the full region, invoking `visit` on each.
/// Enumeration walks the rows of the region top-down choosing a suffix of
/// each row compatible with the rows above. Returns false if `visit` aborted.
pub fn for_each_ideal_trace<F>(region: &BTreeSet<Square>, mut visit: F) -> bool
where
    F: FnMut(&BTreeSet<Square>) -> bool,
{
    let mut rows: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for sq in region {
        rows.entry(sq.i).or_default().push(sq.j);
    }
    let row_list: Vec<(usize, Vec<usize>)> = rows.into_iter().collect();
    let mut chosen: BTreeSet<Square> = BTreeSet::new();

    fn recurse<F>(
        row_list: &[(usize, Vec<usize>)],
        idx: usize,
        min_col: usize,
        chosen: &mut BTreeSet<Square>,
        visit: &mut F,
    ) -> bool
    where
        F: FnMut(&BTreeSet<Square>) -> bool,
    {
        if idx == row_list.len() {
            return visit(chosen);
        }
        let (row, cols) = &row_list[idx];
        // Columns ≥ min_col are forced into the subset by rows above. The
        // row's contribution must be a suffix of its columns covering them.
        let forced_from = cols.partition_point(|&c| c < min_col);
        for start in (0..=forced_from).rev() {
            if start == cols.len() {
                // Empty suffix, allowed only when no column is forced.
                if !recurse(row_list, idx + 1, min_col, chosen, visit) {
                    return false;
                }
                continue;
            }
            let added: Vec<Square> = cols[start..]
                .iter()
                .map(|&c| Square::new(*row, c))
                .collect();
            for sq in &added {
                chosen.insert(*sq);
            }
            let next_min = min_col.min(cols[start]);
            if !recurse(row_list, idx + 1, next_min, chosen, visit) {
                return false;
            }
            for sq in &added {
                chosen.remove(sq);
            }
        }
        true
    }

    recurse(&row_list, 0, usize::MAX, &mut chosen, &mut visit)
}

/// All nonempty proper ideal traces `A ⊊ region` whose total token count
/// equals `|A|` — the subsets along which splitting is advantageous under the
/// exact winning condition.
pub fn splittable_subsets(
    pos: &GamePosition,
    region_id: RegionId,
) -> Result<Vec<BTreeSet<Square>>, GameError> {
    let region = pos.region(region_id)?;
    let mut out = Vec::new();
    for_each_ideal_trace(region, |subset| {
        if !subset.is_empty() && subset.len() != region.len() {
            let tokens: usize = subset
                .iter()
                .map(|sq| pos.mask_at(*sq).count_ones() as usize)
                .sum();
            if tokens == subset.len() {
                out.push(subset.clone());
            }
        }
        true
    });
    Ok(out)
}

/// Splits `region` along the ideal trace `subset`, producing the refined
/// partition `{region ∩ subset, region ∖ subset}`. Tokens are unchanged.
pub fn split(
    pos: &GamePosition,
    region_id: RegionId,
    subset: &BTreeSet<Square>,
) -> Result<GamePosition, GameError> {
    let region = pos.region(region_id)?.clone();
    if subset.is_empty() || subset.len() == region.len() {
        return Err(GameError::DegenerateSplit);
    }
    if !subset.is_subset(&region) || !is_ideal_trace(subset, &region) {
        return Err(GameError::NotIdealTrace { region: region_id });
    }
    let rest: BTreeSet<Square> = region.difference(subset).copied().collect();
    let mut regions: Vec<BTreeSet<Square>> = pos
        .regions
        .iter()
        .filter(|r| *r.iter().next().unwrap() != region_id)
        .cloned()
        .collect();
    regions.push(subset.clone());
    regions.push(rest);
    let mut next = GamePosition {
        n: pos.n,
        m: pos.m,
        tokens: pos.tokens.clone(),
        regions,
    };
    next.normalize();
    Ok(next)
}

/// One advantageous split of some region, if any exists: the first
/// qualifying `(region, subset)` in deterministic order.
pub fn find_qualifying_split(pos: &GamePosition) -> Option<(RegionId, BTreeSet<Square>)> {
    for region in &pos.regions {
        if region.len() < 2 {
            continue;
        }
        let id = *region.iter().next().unwrap();
        let mut found: Option<BTreeSet<Square>> = None;
        for_each_ideal_trace(region, |subset| {
            if !subset.is_empty() && subset.len() != region.len() {
                let tokens: usize = subset
                    .iter()
                    .map(|sq| pos.mask_at(*sq).count_ones() as usize)
                    .sum();
                if tokens == subset.len() {
                    found = Some(subset.clone());
                    return false;
                }
            }
            true
        });
        if let Some(subset) = found {
            return Some((id, subset));
        }
    }
    None
}

/// Splits every region along every qualifying subset until no region admits
/// one, recording the splits performed. The fixed point does not depend on
/// the processing order (verified empirically for small boards).
pub fn split_maximally_trace(pos: &GamePosition) -> (GamePosition, Vec<(RegionId, BTreeSet<Square>)>) {
    let mut current = pos.clone();
    let mut actions = Vec::new();
    while let Some((id, subset)) = find_qualifying_split(&current) {
        current = split(&current, id, &subset).expect("qualifying split is legal");
        actions.push((id, subset));
    }
    (current, actions)
}

/// [`split_maximally_trace`] without the action log.
pub fn split_maximally(pos: &GamePosition) -> GamePosition {
    split_maximally_trace(pos).0
}

/// Applies a move. Within the move's region, for each column `h > j` the
/// `k`-token in `S_jh` shifts to `S_ih` when `S_ih` has no `k`-token, and for
/// each row `h < i` the `k`-token in `S_hi` shifts to `S_hj` likewise. The
/// move is legal even when nothing shifts.
pub fn apply_move(pos: &GamePosition, mv: &Move) -> Result<GamePosition, GameError> {
    if mv.label == 0 || mv.label > pos.m {
        return Err(GameError::LabelOutOfRange { label: mv.label, max: pos.m });
    }
    if mv.i == 0 || mv.i >= mv.j || mv.j > pos.n {
        return Err(GameError::BadPair { i: mv.i, j: mv.j, n: pos.n });
    }
    let region = pos.region(mv.region)?;
    let bit = mask_for(mv.label);
    let mut moves: Vec<(Square, Square)> = Vec::new();
    for h in (mv.j + 1)..=pos.n {
        let src = Square::new(mv.j, h);
        let dst = Square::new(mv.i, h);
        if region.contains(&src)
            && region.contains(&dst)
            && pos.mask_at(src) & bit != 0
            && pos.mask_at(dst) & bit == 0
        {
            moves.push((src, dst));
        }
    }
    for h in 1..mv.i {
        let src = Square::new(h, mv.i);
        let dst = Square::new(h, mv.j);
        if region.contains(&src)
            && region.contains(&dst)
            && pos.mask_at(src) & bit != 0
            && pos.mask_at(dst) & bit == 0
        {
            moves.push((src, dst));
        }
    }
    let mut next = pos.clone();
    for (src, dst) in moves {
        let sm = next.tokens.get_mut(&src).unwrap();
        *sm &= !bit;
        *next.tokens.entry(dst).or_insert(0) |= bit;
    }
    next.normalize();
    Ok(next)
}

/// Whether the position is won under the given mode.
pub fn is_won(pos: &GamePosition, mode: WinMode) -> bool {
    match mode {
        WinMode::Exact => {
            pos.token_count() == board_size(pos.n)
                && pos.tokens.values().all(|m| m.count_ones() == 1)
        }
        WinMode::AtMostOne => pos.tokens.values().all(|m| m.count_ones() <= 1),
    }
}

/// All moves that displace at least one token, in deterministic order
/// (region id, label, i, j ascending). Moves that displace nothing are legal
/// per the rules but are excluded here so search terminates.
pub fn legal_moves(pos: &GamePosition) -> Vec<Move> {
    let mut out = Vec::new();
    for region in &pos.regions {
        if region.len() < 2 {
            continue;
        }
        let id = *region.iter().next().unwrap();
        for label in 1..=pos.m {
            let bit = mask_for(label);
            for i in 1..pos.n {
                for j in (i + 1)..=pos.n {
                    let displaces = ((j + 1)..=pos.n).any(|h| {
                        let src = Square::new(j, h);
                        let dst = Square::new(i, h);
                        region.contains(&src)
                            && region.contains(&dst)
                            && pos.mask_at(src) & bit != 0
                            && pos.mask_at(dst) & bit == 0
                    }) || (1..i).any(|h| {
                        let src = Square::new(h, i);
                        let dst = Square::new(h, j);
                        region.contains(&src)
                            && region.contains(&dst)
                            && pos.mask_at(src) & bit != 0
                            && pos.mask_at(dst) & bit == 0
                    });
                    if displaces {
                        out.push(Move { region: id, label, i, j });
                    }
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// JSON form

#[derive(Serialize, Deserialize)]
struct TokensEntry {
    i: usize,
    j: usize,
    labels: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PositionDto {
    n: usize,
    m: usize,
    tokens: Vec<TokensEntry>,
    regions: Vec<Vec<[usize; 2]>>,
}

impl Serialize for GamePosition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let dto = PositionDto {
            n: self.n,
            m: self.m,
            tokens: self
                .tokens
                .iter()
                .map(|(sq, &mask)| TokensEntry {
                    i: sq.i,
                    j: sq.j,
                    labels: labels_of_mask(mask),
                })
                .collect(),
            regions: self
                .regions
                .iter()
                .map(|r| r.iter().map(|sq| [sq.i, sq.j]).collect())
                .collect(),
        };
        dto.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GamePosition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let dto = PositionDto::deserialize(deserializer)?;
        let mut tokens = TokenConfig::new();
        for entry in dto.tokens {
            let mut mask = 0u64;
            for label in entry.labels {
                if label == 0 || label > 64 {
                    return Err(serde::de::Error::custom("label out of range"));
                }
                mask |= mask_for(label);
            }
            tokens.insert(Square::new(entry.i, entry.j), mask);
        }
        let regions = dto
            .regions
            .into_iter()
            .map(|r| r.into_iter().map(|[i, j]| Square::new(i, j)).collect())
            .collect();
        GamePosition::from_parts(dto.n, dto.m, tokens, regions)
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perms(texts: &[&str]) -> Vec<Permutation> {
        texts.iter().map(|t| Permutation::parse(t).unwrap()).collect()
    }

    #[test]
    fn initial_identity_has_no_tokens() {
        let pos = initial_position(&perms(&["123"]), 3).unwrap();
        assert!(pos.tokens().is_empty());
        assert_eq!(pos.regions().len(), 1);
    }

    #[test]
    fn initial_longest_fills_board() {
        let pos = initial_position(&perms(&["321"]), 3).unwrap();
        for sq in board_squares(3) {
            assert!(pos.has_token(1, sq), "missing token at {sq}");
        }
    }

    #[test]
    fn initial_rejects_bad_input() {
        assert!(matches!(
            initial_position(&[], 3),
            Err(GameError::EmptyPermutationList)
        ));
        assert!(matches!(
            initial_position(&perms(&["21"]), 3),
            Err(GameError::SizeMismatch { .. })
        ));
    }

    #[test]
    fn ideal_checks() {
        let empty = BTreeSet::new();
        assert!(is_ideal(&empty, 3));
        let all: BTreeSet<Square> = board_squares(3).collect();
        assert!(is_ideal(&all, 3));
        let single: BTreeSet<Square> = [Square::new(1, 2)].into_iter().collect();
        assert!(!is_ideal(&single, 3));
        let corner: BTreeSet<Square> = [Square::new(1, 3), Square::new(2, 3)].into_iter().collect();
        assert!(is_ideal(&corner, 3));
    }

    #[test]
    fn ideal_intersection_union_closed() {
        // is_ideal(A) ∧ is_ideal(B) ⇒ ideal intersection and union.
        let n = 5;
        let mut ideals: Vec<BTreeSet<Square>> = Vec::new();
        let all: BTreeSet<Square> = board_squares(n).collect();
        for_each_ideal_trace(&all, |s| {
            ideals.push(s.clone());
            true
        });
        for a in ideals.iter().take(20) {
            for b in ideals.iter().rev().take(20) {
                let inter: BTreeSet<Square> = a.intersection(b).copied().collect();
                let union: BTreeSet<Square> = a.union(b).copied().collect();
                assert!(is_ideal(&inter, n));
                assert!(is_ideal(&union, n));
            }
        }
    }

    #[test]
    fn trace_enumeration_matches_filter_on_full_board() {
        // On the full board, ideal traces are exactly ideal sets.
        let n = 4;
        let all: BTreeSet<Square> = board_squares(n).collect();
        let mut count = 0usize;
        for_each_ideal_trace(&all, |s| {
            assert!(is_ideal(s, n), "enumerated non-ideal {s:?}");
            count += 1;
            true
        });
        // Cross-check by brute force over all subsets of the 6 squares.
        let squares: Vec<Square> = board_squares(n).collect();
        let mut brute = 0usize;
        for mask in 0u32..(1 << squares.len()) {
            let set: BTreeSet<Square> = squares
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 != 0)
                .map(|(_, s)| *s)
                .collect();
            if is_ideal(&set, n) {
                brute += 1;
            }
        }
        assert_eq!(count, brute);
    }

    #[test]
    fn split_requires_ideal_trace() {
        let pos = initial_position(&perms(&["321"]), 3).unwrap();
        let id = pos.region_ids()[0];
        let bad: BTreeSet<Square> = [Square::new(1, 2)].into_iter().collect();
        assert!(matches!(
            split(&pos, id, &bad),
            Err(GameError::NotIdealTrace { .. })
        ));
        let good: BTreeSet<Square> = [Square::new(1, 3), Square::new(2, 3)].into_iter().collect();
        let next = split(&pos, id, &good).unwrap();
        assert_eq!(next.regions().len(), 2);
        assert_eq!(next.tokens(), pos.tokens());
    }

    #[test]
    fn splittable_subsets_empty_region_tokenless() {
        let pos = initial_position(&perms(&["123"]), 3).unwrap();
        let id = pos.region_ids()[0];
        assert!(splittable_subsets(&pos, id).unwrap().is_empty());
    }

    #[test]
    fn solved_position_splits_to_singletons() {
        let pos = initial_position(&perms(&["321"]), 4).unwrap();
        let (fixed, _) = split_maximally_trace(&pos);
        assert!(fixed.regions().iter().all(|r| r.len() == 1));
    }

    #[test]
    fn move_basics() {
        // n=2 with both classes reversed: square (1,2) holds two tokens.
        let pos = initial_position(&perms(&["21", "21"]), 2).unwrap();
        assert!(!is_won(&pos, WinMode::Exact));
        assert!(!is_won(&pos, WinMode::AtMostOne));
        assert!(legal_moves(&pos).is_empty());

        let pos = initial_position(&perms(&["21", "12"]), 2).unwrap();
        assert!(is_won(&pos, WinMode::Exact));

        let empty = initial_position(&perms(&["123"]), 3).unwrap();
        assert!(is_won(&empty, WinMode::AtMostOne));
        assert!(!is_won(&empty, WinMode::Exact));
        assert!(legal_moves(&empty).is_empty());
    }

    #[test]
    fn move_conserves_tokens_and_increases_phi() {
        let pos = initial_position(&perms(&["3426175", "5162347", "1326754"]), 7).unwrap();
        let before: Vec<usize> = (1..=3).map(|k| pos.label_count(k)).collect();
        for mv in legal_moves(&pos) {
            let next = apply_move(&pos, &mv).unwrap();
            let after: Vec<usize> = (1..=3).map(|k| next.label_count(k)).collect();
            assert_eq!(before, after);
            assert!(next.phi() > pos.phi());
            assert!(next.phi() <= pos.phi_bound());
        }
    }

    #[test]
    fn noop_move_is_legal_but_unlisted() {
        let pos = initial_position(&perms(&["123"]), 3).unwrap();
        let id = pos.region_ids()[0];
        let mv = Move { region: id, label: 1, i: 1, j: 2 };
        let next = apply_move(&pos, &mv).unwrap();
        assert_eq!(next, pos);
    }

    #[test]
    fn json_round_trip() {
        let pos = initial_position(&perms(&["3426175", "5162347", "1326754"]), 7).unwrap();
        let (pos, _) = split_maximally_trace(&pos);
        let text = serde_json::to_string(&pos).unwrap();
        let back: GamePosition = serde_json::from_str(&text).unwrap();
        assert_eq!(pos, back);
    }
}
