//! Grassmannian problems: permutation encodings of 01-strings, the derived
//! shapes, and construction of the associated game position.

mod grga;
mod win;

pub use grga::{grga, grga_for_problem, GrgaRun, GrgaSnapshot, ReadinessState};
pub use win::{win_grassmannian, win_grassmannian_with, FailReason, WinOutcome};

use crate::error::ProblemError;
use crate::game::{initial_position, board_squares, GamePosition, Square};
use crate::perm::Permutation;
use crate::shapes::Partition;
use crate::strings::{shape_of_string, ZeroOneString};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// `π(σ,N) = i₁…i_{n−l} j₁…j_l (n+1)…(n+N)`, zeros at `i₁<…`, ones at `j₁<…`.
pub fn encode_pi(sigma: &ZeroOneString, shift: usize) -> Permutation {
    let n = sigma.n();
    let mut images = sigma.zero_positions();
    images.extend(sigma.one_positions());
    images.extend((n + 1)..=(n + shift));
    Permutation::new(images).expect("blocks partition 1..=n+N")
}

/// `π′(σ,N) = (i₁+N)…(i_{n−l}+N) 1…N (j₁+N)…(j_l+N)`.
pub fn encode_pi_prime(sigma: &ZeroOneString, shift: usize) -> Permutation {
    let mut images: Vec<usize> = sigma.zero_positions().iter().map(|i| i + shift).collect();
    images.extend(1..=shift);
    images.extend(sigma.one_positions().iter().map(|j| j + shift));
    Permutation::new(images).expect("blocks partition 1..=n+N")
}

/// `π″(σ,N) = i_{n−l}…i₁ (n+N)…(n+1) j_l…j₁`.
pub fn encode_pi_doubleprime(sigma: &ZeroOneString, shift: usize) -> Permutation {
    let n = sigma.n();
    let mut images: Vec<usize> = sigma.zero_positions().into_iter().rev().collect();
    images.extend(((n + 1)..=(n + shift)).rev());
    images.extend(sigma.one_positions().into_iter().rev());
    Permutation::new(images).expect("blocks partition 1..=n+N")
}

/// Recovers the 01-string from the first `n` entries of `π(σ,N)`: the first
/// `n−l` entries are the zero positions.
pub fn decode_pi(perm: &Permutation, n: usize, l: usize) -> ZeroOneString {
    let mut word = vec![true; n];
    for k in 0..(n - l) {
        word[perm.image(k + 1) - 1] = false;
    }
    ZeroOneString::new(word).expect("nonempty")
}

/// A product of `s+2` Grassmannian Schubert classes, with the column shift
/// `N` used to pose it on a flag manifold.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GrassmannProblem {
    pub sigmas: Vec<ZeroOneString>,
    pub mu: ZeroOneString,
    pub nu: ZeroOneString,
    #[serde(rename = "N")]
    pub shift: usize,
}

impl GrassmannProblem {
    pub fn new(
        sigmas: Vec<ZeroOneString>,
        mu: ZeroOneString,
        nu: ZeroOneString,
        shift: usize,
    ) -> Result<Self, ProblemError> {
        if sigmas.is_empty() {
            return Err(ProblemError::NoSigmas);
        }
        let n = mu.n();
        let l = mu.l();
        for s in sigmas.iter().chain([&nu]) {
            if s.n() != n {
                return Err(ProblemError::LengthMismatch(n, s.n()));
            }
            if s.l() != l {
                return Err(ProblemError::OnesMismatch(l, s.l()));
            }
        }
        Ok(GrassmannProblem { sigmas, mu, nu, shift })
    }

    pub fn s(&self) -> usize {
        self.sigmas.len()
    }

    pub fn n(&self) -> usize {
        self.mu.n()
    }

    pub fn l(&self) -> usize {
        self.mu.l()
    }

    /// Board size of the associated game.
    pub fn board_n(&self) -> usize {
        self.n() + self.shift
    }

    /// Number of token labels in the associated game.
    pub fn labels(&self) -> usize {
        self.s() + 2
    }

    /// The permutation list `π(σ₁,N), …, π(σ_s,N), π′(μ,N), π″(ν,N)`.
    pub fn encoded_permutations(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = self
            .sigmas
            .iter()
            .map(|s| encode_pi(s, self.shift))
            .collect();
        out.push(encode_pi_prime(&self.mu, self.shift));
        out.push(encode_pi_doubleprime(&self.nu, self.shift));
        out
    }
}

/// The derived shapes of a problem: one per sigma, the shifted mu shape, and
/// the rectangle complement of the nu shape (all on `n−l` rows).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProblemShapes {
    /// `λ(σ_k)` for each k.
    pub sigma_shapes: Vec<Partition>,
    /// `N+λ(μ)`, the shape of the second-to-last class's tokens.
    pub mu_shape: Partition,
    /// Shape of the squares inside the rectangle without a last-class token.
    pub free_shape: Partition,
}

/// Computes the shapes of [`ProblemShapes`].
pub fn shapes(prob: &GrassmannProblem) -> ProblemShapes {
    let rows = prob.n() - prob.l();
    let cols = prob.l() + prob.shift;
    ProblemShapes {
        sigma_shapes: prob.sigmas.iter().map(shape_of_string).collect(),
        mu_shape: shape_of_string(&prob.mu).shifted(prob.shift),
        free_shape: shape_of_string(&prob.nu).complement_in(rows, cols),
    }
}

/// True exactly when `N+λ(μ) ⊄ free_shape`, which forces the product of the
/// last two classes (hence the whole product) to vanish.
pub fn quick_zero(prob: &GrassmannProblem) -> bool {
    let sh = shapes(prob);
    !sh.free_shape.contains(&sh.mu_shape)
}

/// Builds the game for the problem: the initial position for the encoded
/// permutations, with every square holding a last-class token set off in a
/// one-square region and the remaining squares (the `free_shape`, lower-left
/// corner at `S_{n−l,n−l+1}`) forming the big region.
pub fn build_game(prob: &GrassmannProblem) -> GamePosition {
    let board_n = prob.board_n();
    let perms = prob.encoded_permutations();
    let initial = initial_position(&perms, board_n).expect("encoded permutations share a size");
    let last = prob.labels();
    let mut big: BTreeSet<Square> = BTreeSet::new();
    let mut regions: Vec<BTreeSet<Square>> = Vec::new();
    for sq in board_squares(board_n) {
        if initial.has_token(last, sq) {
            regions.push([sq].into_iter().collect());
        } else {
            big.insert(sq);
        }
    }
    if !big.is_empty() {
        regions.push(big);
    }
    GamePosition::from_parts(board_n, initial.m(), initial.tokens().clone(), regions)
        .expect("regions partition the board")
}

/// Row/column frame of the rectangle the shapes live in: rows `1..=n−l`,
/// columns `n−l+1..=n+N`, with partition column `c` at board column `c+n−l`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Frame {
    pub rows: usize,
    pub cols: usize,
}

impl Frame {
    pub fn of(prob: &GrassmannProblem) -> Frame {
        Frame { rows: prob.n() - prob.l(), cols: prob.l() + prob.shift }
    }

    /// Board square of a 1-based (row, col) box of a shape in this frame.
    pub fn square(&self, row: usize, col: usize) -> Square {
        Square::new(row, col + self.rows)
    }

    /// Inverse of [`Frame::square`]; None outside the rectangle.
    pub fn unsquare(&self, sq: Square) -> Option<(usize, usize)> {
        if sq.i <= self.rows && sq.j > self.rows && sq.j <= self.rows + self.cols {
            Some((sq.i, sq.j - self.rows))
        } else {
            None
        }
    }
}
