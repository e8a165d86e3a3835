//! Schubert polynomials and flag-manifold intersection numbers.
//!
//! Two independent routes compute every intersection number: expanding the
//! product of all but the last class in the Schubert basis and reading one
//! coefficient, and applying the full divided-difference functional to the
//! product of all classes. The test suites insist the routes agree; oracle
//! trustworthiness is this module's entire purpose.

use crate::perm::Permutation;
use std::collections::{BTreeMap, HashMap, HashSet};
use thiserror::Error;

/// A polynomial in x₁..x_v with integer coefficients, stored sparsely by
/// exponent vector. No zero coefficients are kept.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SparsePolynomial {
    terms: BTreeMap<Vec<u16>, i64>,
}

impl SparsePolynomial {
    pub fn zero() -> Self {
        SparsePolynomial::default()
    }

    pub fn constant(c: i64) -> Self {
        let mut p = SparsePolynomial::default();
        if c != 0 {
            p.terms.insert(Vec::new(), c);
        }
        p
    }

    pub fn monomial(exponents: Vec<u16>, coeff: i64) -> Self {
        let mut p = SparsePolynomial::default();
        p.add_term(exponents, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u16>, i64> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, mut exponents: Vec<u16>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        let entry = self.terms.entry(exponents.clone()).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exponents);
        }
    }

    pub fn add(&self, other: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn scale(&self, factor: i64) -> SparsePolynomial {
        let mut out = SparsePolynomial::default();
        for (e, &c) in &self.terms {
            out.add_term(e.clone(), c * factor);
        }
        out
    }

    pub fn mul(&self, other: &SparsePolynomial) -> SparsePolynomial {
        let mut out = SparsePolynomial::default();
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let len = ea.len().max(eb.len());
                let mut e = vec![0u16; len];
                for (k, item) in e.iter_mut().enumerate() {
                    *item = ea.get(k).copied().unwrap_or(0) + eb.get(k).copied().unwrap_or(0);
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Multiplies by the single variable x_i (1-based).
    pub fn mul_var(&self, i: usize) -> SparsePolynomial {
        let mut out = SparsePolynomial::default();
        for (e, &c) in &self.terms {
            let mut e = e.clone();
            if e.len() < i {
                e.resize(i, 0);
            }
            e[i - 1] += 1;
            out.add_term(e, c);
        }
        out
    }

    /// The lexicographically greatest exponent vector and its coefficient.
    pub fn leading(&self) -> Option<(&Vec<u16>, i64)> {
        self.terms.iter().next_back().map(|(e, &c)| (e, c))
    }

    /// Divided difference ∂_i f = (f − s_i f)/(x_i − x_{i+1}), computed
    /// monomial by monomial with exact arithmetic.
    pub fn divided_difference(&self, i: usize) -> SparsePolynomial {
        let mut out = SparsePolynomial::default();
        for (e, &c) in &self.terms {
            let a = e.get(i - 1).copied().unwrap_or(0);
            let b = e.get(i).copied().unwrap_or(0);
            if a == b {
                continue;
            }
            let len = e.len().max(i + 1);
            let mut base = vec![0u16; len];
            base[..e.len()].copy_from_slice(e);
            // (x^a y^b − x^b y^a)/(x−y) = sign · Σ_t x^(hi−1−t) y^(lo+t)
            let (lo, hi, sign) = if a > b { (b, a, 1) } else { (a, b, -1) };
            for t in 0..(hi - lo) {
                let mut m = base.clone();
                m[i - 1] = hi - 1 - t;
                m[i] = lo + t;
                out.add_term(m, sign * c);
            }
        }
        out
    }

    /// Total degree of every monomial when homogeneous.
    pub fn degree(&self) -> Option<usize> {
        let mut deg = None;
        for e in self.terms.keys() {
            let d: usize = e.iter().map(|&x| x as usize).sum();
            match deg {
                None => deg = Some(d),
                Some(existing) if existing != d => return None,
                _ => {}
            }
        }
        deg
    }
}

/// Expansion of a polynomial in the Schubert basis, keyed by permutations
/// (trimmed to their smallest symmetric group).
pub type SchubertBasisExpansion = BTreeMap<Permutation, i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpansionError {
    #[error("remainder is outside the cone spanned by Schubert polynomials (leading coefficient {coeff} at {code:?})")]
    OutsideSchubertCone { code: Vec<usize>, coeff: i64 },
}

/// Shared table of Schubert polynomials, computed by the transition
/// recursion and memoized. Works for arbitrary permutations, not just a
/// fixed symmetric group.
#[derive(Default)]
pub struct SchubertTable {
    memo: HashMap<Permutation, SparsePolynomial>,
}

impl SchubertTable {
    pub fn new() -> Self {
        SchubertTable::default()
    }

    /// The Schubert polynomial of `w`, of degree ℓ(w).
    pub fn polynomial(&mut self, w: &Permutation) -> SparsePolynomial {
        let key = w.trim_to(1);
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let mut in_progress = HashSet::new();
        let p = self.compute(&key, &mut in_progress);
        p
    }

    fn compute(&mut self, w: &Permutation, in_progress: &mut HashSet<Permutation>) -> SparsePolynomial {
        if let Some(p) = self.memo.get(w) {
            return p.clone();
        }
        assert!(
            in_progress.insert(w.clone()),
            "transition recursion revisited {w}; formula misapplied"
        );
        let descents = w.descents();
        let result = if descents.is_empty() {
            SparsePolynomial::constant(1)
        } else {
            let r = *descents.last().unwrap();
            let s = (r + 1..=w.n())
                .filter(|&s| w.image(s) < w.image(r))
                .max()
                .expect("descent guarantees a smaller later image");
            let v = w.times_transposition(r, s);
            debug_assert_eq!(v.length() + 1, w.length());
            let mut acc = self.compute(&v.trim_to(1), in_progress).mul_var(r);
            for q in 1..r {
                let cand = v.times_transposition(q, r);
                if cand.length() == w.length() {
                    let p = self.compute(&cand.trim_to(1), in_progress);
                    acc = acc.add(&p);
                }
            }
            acc
        };
        in_progress.remove(w);
        self.memo.insert(w.clone(), result.clone());
        result
    }

    /// Expands `p` in the Schubert basis by repeatedly subtracting the
    /// Schubert polynomial read off the lexicographically leading monomial's
    /// Lehmer code. A nonzero remainder that cannot continue (negative
    /// leading coefficient) is reported, not silently dropped.
    pub fn expand(&mut self, p: &SparsePolynomial) -> Result<SchubertBasisExpansion, ExpansionError> {
        let mut rest = p.clone();
        let mut out = SchubertBasisExpansion::new();
        while let Some((exps, coeff)) = rest.leading() {
            let code: Vec<usize> = exps.iter().map(|&e| e as usize).collect();
            if coeff < 0 {
                return Err(ExpansionError::OutsideSchubertCone { code, coeff });
            }
            let w = Permutation::from_lehmer_code(&code);
            let sw = self.polynomial(&w);
            rest = rest.sub(&sw.scale(coeff));
            *out.entry(w.trim_to(1)).or_insert(0) += coeff;
        }
        Ok(out)
    }
}

/// The Schubert polynomial of `π ∈ S_ambient` by the divided-difference
/// recursion from the staircase monomial of the long word.
pub fn schubert_polynomial(perm: &Permutation, ambient: usize) -> SparsePolynomial {
    assert!(perm.n() <= ambient);
    let w = perm.pad_to(ambient);
    // Descend from w by right multiplication at the first ascent; the
    // recursion bottoms out at the long word's staircase monomial.
    fn go(w: &Permutation, ambient: usize, memo: &mut HashMap<Permutation, SparsePolynomial>) -> SparsePolynomial {
        if let Some(p) = memo.get(w) {
            return p.clone();
        }
        let ascent = (1..ambient).find(|&i| w.image(i) < w.image(i + 1));
        let result = match ascent {
            None => {
                let exps: Vec<u16> = (0..ambient - 1).map(|k| (ambient - 1 - k) as u16).collect();
                SparsePolynomial::monomial(exps, 1)
            }
            Some(i) => {
                let longer = w.times_adjacent(i);
                go(&longer, ambient, memo).divided_difference(i)
            }
        };
        memo.insert(w.clone(), result.clone());
        result
    }
    let mut memo = HashMap::new();
    go(&w, ambient, &mut memo)
}

/// Monk's rule: the expansion of `S_{s_r} · S_w` is the sum of `S_{w t_{ij}}`
/// over `i ≤ r < j` with `ℓ(w t_{ij}) = ℓ(w) + 1`.
pub fn monk_products(r: usize, w: &Permutation, ambient: usize) -> Vec<Permutation> {
    let w = w.pad_to(ambient);
    let mut out = Vec::new();
    for i in 1..=r {
        for j in (r + 1)..=ambient {
            let cand = w.times_transposition(i, j);
            if cand.length() == w.length() + 1 {
                out.push(cand.trim_to(1));
            }
        }
    }
    out.sort();
    out
}

/// Applies the full divided-difference functional for `S_n`: the composition
/// along a reduced word of the long word. On a homogeneous polynomial of
/// degree n(n−1)/2 this extracts the coefficient of the long word's Schubert
/// polynomial.
pub fn full_divided_difference(p: &SparsePolynomial, n: usize) -> i64 {
    let mut acc = p.clone();
    for k in 1..n {
        for i in (1..=k).rev() {
            acc = acc.divided_difference(i);
            if acc.is_zero() {
                return 0;
            }
        }
    }
    debug_assert!(acc.terms().keys().all(|e| e.is_empty()));
    acc.terms().get(&Vec::new()).copied().unwrap_or(0)
}

/// The Schubert intersection number on Fl(n) of the given classes: zero
/// unless the lengths sum to n(n−1)/2, else the coefficient of the class
/// opposite to the last one in the basis expansion of the others' product.
pub fn flag_intersection(perms: &[Permutation], n: usize) -> u64 {
    let mut table = SchubertTable::new();
    flag_intersection_with(&mut table, perms, n)
}

/// [`flag_intersection`] sharing a memo table across calls.
pub fn flag_intersection_with(table: &mut SchubertTable, perms: &[Permutation], n: usize) -> u64 {
    assert!(!perms.is_empty());
    assert!(perms.iter().all(|p| p.n() == n));
    let total: usize = perms.iter().map(|p| p.length()).sum();
    if total != n * (n - 1) / 2 {
        return 0;
    }
    let mut product = SparsePolynomial::constant(1);
    for p in &perms[..perms.len() - 1] {
        product = product.mul(&table.polynomial(p));
    }
    let expansion = table
        .expand(&product)
        .expect("products of Schubert polynomials stay in the Schubert cone");
    let target = perms.last().unwrap().w0_times().trim_to(1);
    expansion.get(&target).copied().unwrap_or(0).max(0) as u64
}

/// Independent recomputation of the same number: the divided-difference
/// functional applied to the product of all the classes.
pub fn flag_intersection_functional(perms: &[Permutation], n: usize) -> u64 {
    let mut table = SchubertTable::new();
    flag_intersection_functional_with(&mut table, perms, n)
}

/// [`flag_intersection_functional`] sharing a memo table across calls.
pub fn flag_intersection_functional_with(
    table: &mut SchubertTable,
    perms: &[Permutation],
    n: usize,
) -> u64 {
    assert!(!perms.is_empty());
    assert!(perms.iter().all(|p| p.n() == n));
    let total: usize = perms.iter().map(|p| p.length()).sum();
    if total != n * (n - 1) / 2 {
        return 0;
    }
    let mut product = SparsePolynomial::constant(1);
    for p in perms {
        product = product.mul(&table.polynomial(p));
    }
    let value = full_divided_difference(&product, n);
    debug_assert!(value >= 0);
    value.max(0) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(text: &str) -> Permutation {
        Permutation::parse(text).unwrap()
    }

    #[test]
    fn simple_schubert_polynomials() {
        assert_eq!(schubert_polynomial(&perm("123"), 3), SparsePolynomial::constant(1));
        assert_eq!(
            schubert_polynomial(&perm("321"), 3),
            SparsePolynomial::monomial(vec![2, 1], 1)
        );
        assert_eq!(
            schubert_polynomial(&perm("213"), 3),
            SparsePolynomial::monomial(vec![1], 1)
        );
        // S_132 = x1 + x2.
        let s132 = schubert_polynomial(&perm("132"), 3);
        assert_eq!(s132.num_terms(), 2);
        assert_eq!(s132.terms().get(&vec![1]).copied(), Some(1));
        assert_eq!(s132.terms().get(&vec![0, 1]).copied(), Some(1));
    }

    #[test]
    fn transition_matches_divided_difference() {
        let mut table = SchubertTable::new();
        for n in 2..=5usize {
            for images in permutations_of(n) {
                let w = Permutation::new(images).unwrap();
                assert_eq!(
                    table.polynomial(&w),
                    schubert_polynomial(&w, n),
                    "mismatch at {w}"
                );
            }
        }
    }

    fn permutations_of(n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            let mut next = Vec::new();
            for partial in out {
                for v in 1..=n {
                    if !partial.contains(&v) {
                        let mut p = partial.clone();
                        p.push(v);
                        next.push(p);
                    }
                }
            }
            out = next;
        }
        out
    }

    #[test]
    fn expansion_of_x1_squared() {
        let mut table = SchubertTable::new();
        let p = SparsePolynomial::monomial(vec![2], 1);
        let e = table.expand(&p).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.get(&perm("312")).copied(), Some(1));
    }

    #[test]
    fn expansion_identity_and_positivity() {
        let mut table = SchubertTable::new();
        let s = table.polynomial(&perm("2413"));
        let e = table.expand(&s).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.get(&perm("2413")).copied(), Some(1));

        let prod = table.polynomial(&perm("213")).mul(&table.polynomial(&perm("213")));
        let e = table.expand(&prod).unwrap();
        assert!(e.values().all(|&c| c > 0));
    }

    #[test]
    fn expansion_rejects_outside_cone() {
        let mut table = SchubertTable::new();
        // −x₁ is not a nonnegative combination.
        let p = SparsePolynomial::monomial(vec![1], -1);
        assert!(table.expand(&p).is_err());
    }

    #[test]
    fn monk_rule_agrees_with_expansion() {
        let mut table = SchubertTable::new();
        for w in [perm("1234"), perm("2134"), perm("2314"), perm("3142"), perm("1432")] {
            for r in 1..=3usize {
                let sr = Permutation::identity(r + 1).times_adjacent(r);
                let prod = table.polynomial(&sr).mul(&table.polynomial(&w));
                let e = table.expand(&prod).unwrap();
                let mut expect = monk_products(r, &w, 6);
                expect.sort();
                let mut got: Vec<Permutation> = e.keys().cloned().collect();
                got.sort();
                assert_eq!(got, expect, "Monk mismatch for r={r}, w={w}");
                assert!(e.values().all(|&c| c == 1));
            }
        }
    }

    #[test]
    fn point_class_integrates_to_one() {
        for n in 2..=4 {
            assert_eq!(flag_intersection(&[Permutation::longest(n)], n), 1);
        }
    }

    #[test]
    fn duality_pairs() {
        // ∫ [X_213][X_231] = 1 on Fl(3).
        assert_eq!(flag_intersection(&[perm("213"), perm("231")], 3), 1);
        // Both oracle routes agree on a degree-compatible triple.
        let triple = [perm("213"), perm("213"), perm("132")];
        let a = flag_intersection(&triple, 3);
        let b = flag_intersection_functional(&triple, 3);
        assert_eq!(a, b);
        assert_eq!(a, 1);
    }

    #[test]
    fn degree_filter() {
        assert_eq!(flag_intersection(&[perm("213"), perm("213")], 3), 0);
        assert_eq!(flag_intersection(&[perm("21"), perm("21")], 2), 0);
    }

    #[test]
    fn argument_order_invariance() {
        let perms = [perm("2143"), perm("2413"), perm("1342")];
        let base = flag_intersection(&perms, 4);
        let swapped = [perms[2].clone(), perms[0].clone(), perms[1].clone()];
        assert_eq!(flag_intersection(&swapped, 4), base);
    }

    #[test]
    fn full_divided_difference_of_staircase() {
        for n in 2..=5 {
            let exps: Vec<u16> = (0..n - 1).map(|k| (n - 1 - k) as u16).collect();
            let p = SparsePolynomial::monomial(exps, 1);
            assert_eq!(full_divided_difference(&p, n), 1);
        }
    }
}
