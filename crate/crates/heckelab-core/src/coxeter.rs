//! The finite symmetric group `S_r` and the affine symmetric group on `r`
//! strands, both in window notation, with Coxeter length, reduced words, and
//! bounded enumeration.
//!
//! Conventions:
//! - composition is `(a . b)(i) = a(b(i))`;
//! - finite generators are `s_1 .. s_(r-1)` (value/position `i <-> i+1`),
//!   the affine group adds `s_0`;
//! - a word `[i1, i2, ..., ik]` composes left to right: `s_i1 . s_i2 ...`;
//! - length is computed operationally by descent peeling (no inversion-count
//!   formula), and `reduced_word` always peels the smallest left descent, so
//!   its output is deterministic.
//!
//! The affine type also admits the length-zero rotations `pi^k`
//! (`pi(i) = i + 1`), so lattice translations with nonzero coordinate sum are
//! representable. Elements of the affine Coxeter group proper have rotation
//! part `pi^0`; enumeration and presentation checks stay inside that
//! subgroup.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use crate::error::CoreError;

/// Which Weyl group a computation lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Finite,
    Affine,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Finite => write!(f, "finite"),
            GroupKind::Affine => write!(f, "affine"),
        }
    }
}

/// A word in the simple generators; letter `i` stands for `s_i`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Word {
    pub letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.letters.iter().map(|i| format!("s{i}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for Word {
    type Err = CoreError;

    /// Parses `"s1 s2 s1"`; `"e"` or the empty string is the empty word.
    fn from_str(s: &str) -> Result<Self, CoreError> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(Word::default());
        }
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let idx = tok
                .strip_prefix('s')
                .ok_or_else(|| CoreError::Parse(format!("bad generator token '{tok}'")))?;
            let i: usize = idx
                .parse()
                .map_err(|_| CoreError::Parse(format!("bad generator index '{idx}'")))?;
            letters.push(i);
        }
        Ok(Word { letters })
    }
}

/// Shared interface of the finite and affine window groups.
pub trait Permutation:
    Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + Sized + 'static
{
    const KIND: GroupKind;

    fn identity(rank: usize) -> Self;
    fn rank(&self) -> usize;
    /// Valid generator indices for this kind and rank.
    fn generator_indices(rank: usize) -> Vec<usize>;
    fn generator(rank: usize, i: usize) -> Result<Self, CoreError>;
    /// `(self . other)(i) = self(other(i))`.
    fn compose(&self, other: &Self) -> Result<Self, CoreError>;
    fn inverse(&self) -> Self;
    /// `s_i . self`.
    fn left_mul_gen(&self, i: usize) -> Self;
    /// `self . s_i`.
    fn right_mul_gen(&self, i: usize) -> Self;
    /// `len(s_i . self) < len(self)`.
    fn left_descent(&self, i: usize) -> bool;
    /// `len(self . s_i) < len(self)`.
    fn right_descent(&self, i: usize) -> bool;
    /// True for the identity and, in the affine case, the rotations `pi^k`.
    fn is_length_zero(&self) -> bool;
    /// Order of `s_i s_j` (2 or 3 in type A); `None` encodes infinity.
    fn braid_order(rank: usize, i: usize, j: usize) -> Option<u32>;
    /// Rotation class of a length-zero element (always 0 in the finite
    /// group).
    fn rotation_class(&self) -> i64;
    /// The length-zero element of rotation class `k`; errors for `k != 0` in
    /// the finite group.
    fn rotation_element(rank: usize, k: i64) -> Result<Self, CoreError>;

    fn smallest_left_descent(&self) -> Option<usize> {
        Self::generator_indices(self.rank())
            .into_iter()
            .find(|&i| self.left_descent(i))
    }

    fn smallest_right_descent(&self) -> Option<usize> {
        Self::generator_indices(self.rank())
            .into_iter()
            .find(|&i| self.right_descent(i))
    }

    /// Coxeter length, by peeling right descents down to a length-zero
    /// element.
    fn length(&self) -> usize {
        let mut w = self.clone();
        let mut steps = 0usize;
        while let Some(i) = w.smallest_right_descent() {
            w = w.right_mul_gen(i);
            steps += 1;
        }
        debug_assert!(w.is_length_zero());
        steps
    }

    /// Reduced word peeling the smallest left descent first, together with
    /// the length-zero remainder: `self = word . remainder`.
    fn coxeter_decomposition(&self) -> (Word, Self) {
        let mut w = self.clone();
        let mut letters = Vec::new();
        while let Some(i) = w.smallest_left_descent() {
            letters.push(i);
            w = w.left_mul_gen(i);
        }
        debug_assert!(w.is_length_zero());
        (Word { letters }, w)
    }

    /// Deterministic reduced word (smallest left descent first).
    fn reduced_word(&self) -> Word {
        self.coxeter_decomposition().0
    }

    /// Composes a word into a group element.
    fn from_word(rank: usize, word: &Word) -> Result<Self, CoreError> {
        let valid = Self::generator_indices(rank);
        let mut out = Self::identity(rank);
        for &i in word.letters.iter().rev() {
            if !valid.contains(&i) {
                return Err(CoreError::IndexOutOfRange { index: i, bound: rank });
            }
            out = out.left_mul_gen(i);
        }
        Ok(out)
    }

    /// True when the word's length equals the length of its composition.
    fn is_reduced(rank: usize, word: &Word) -> Result<bool, CoreError> {
        let w = Self::from_word(rank, word)?;
        Ok(w.length() == word.len())
    }
}

/// A permutation of `1..=r` in window notation (the value tuple).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinitePermutation {
    window: Vec<usize>,
}

impl FinitePermutation {
    pub fn new(window: Vec<usize>) -> Result<Self, CoreError> {
        let r = window.len();
        if r == 0 {
            return Err(CoreError::Domain("empty window".into()));
        }
        let mut seen = vec![false; r + 1];
        for &x in &window {
            if x < 1 || x > r || seen[x] {
                return Err(CoreError::Domain(format!(
                    "window {window:?} is not a permutation of 1..={r}"
                )));
            }
            seen[x] = true;
        }
        Ok(FinitePermutation { window })
    }

    pub fn window(&self) -> &[usize] {
        &self.window
    }

    /// Value at position `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.window[i - 1]
    }
}

impl fmt::Display for FinitePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for FinitePermutation {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, CoreError> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| CoreError::Parse(format!("expected [..] window, got '{s}'")))?;
        let window = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CoreError::Parse(format!("bad window '{s}'")))?;
        FinitePermutation::new(window)
    }
}

impl Permutation for FinitePermutation {
    const KIND: GroupKind = GroupKind::Finite;

    fn identity(rank: usize) -> Self {
        FinitePermutation { window: (1..=rank).collect() }
    }

    fn rank(&self) -> usize {
        self.window.len()
    }

    fn generator_indices(rank: usize) -> Vec<usize> {
        (1..rank).collect()
    }

    fn generator(rank: usize, i: usize) -> Result<Self, CoreError> {
        if i < 1 || i >= rank {
            return Err(CoreError::IndexOutOfRange { index: i, bound: rank });
        }
        let mut w = Self::identity(rank);
        w.window.swap(i - 1, i);
        Ok(w)
    }

    fn compose(&self, other: &Self) -> Result<Self, CoreError> {
        if self.rank() != other.rank() {
            return Err(CoreError::RankMismatch { left: self.rank(), right: other.rank() });
        }
        let window = other.window.iter().map(|&x| self.window[x - 1]).collect();
        Ok(FinitePermutation { window })
    }

    fn inverse(&self) -> Self {
        let r = self.rank();
        let mut window = vec![0usize; r];
        for (pos, &val) in self.window.iter().enumerate() {
            window[val - 1] = pos + 1;
        }
        FinitePermutation { window }
    }

    fn left_mul_gen(&self, i: usize) -> Self {
        // Relabel values i <-> i+1.
        let window = self
            .window
            .iter()
            .map(|&x| {
                if x == i {
                    i + 1
                } else if x == i + 1 {
                    i
                } else {
                    x
                }
            })
            .collect();
        FinitePermutation { window }
    }

    fn right_mul_gen(&self, i: usize) -> Self {
        let mut w = self.clone();
        w.window.swap(i - 1, i);
        w
    }

    fn left_descent(&self, i: usize) -> bool {
        // Position of i comes after position of i+1.
        let inv = self.inverse();
        inv.window[i - 1] > inv.window[i]
    }

    fn right_descent(&self, i: usize) -> bool {
        self.window[i - 1] > self.window[i]
    }

    fn is_length_zero(&self) -> bool {
        self.window.iter().enumerate().all(|(p, &v)| v == p + 1)
    }

    fn braid_order(_rank: usize, i: usize, j: usize) -> Option<u32> {
        if i == j {
            return Some(1);
        }
        Some(if i.abs_diff(j) == 1 { 3 } else { 2 })
    }

    fn rotation_class(&self) -> i64 {
        0
    }

    fn rotation_element(rank: usize, k: i64) -> Result<Self, CoreError> {
        if k != 0 {
            return Err(CoreError::Domain(
                "the finite group has no nontrivial length-zero elements".into(),
            ));
        }
        Ok(Self::identity(rank))
    }
}

/// An affine permutation of the integer line: a bijection `w` of `Z` with
/// `w(i + r) = w(i) + r`, recorded by its window `(w(1), ..., w(r))`.
///
/// Window entries are pairwise distinct mod `r`. The coordinate sum is
/// `r(r+1)/2 + r*k` where `k` is the rotation class; `k = 0` cuts out the
/// affine Coxeter group itself.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffinePermutation {
    window: Vec<i64>,
}

impl AffinePermutation {
    pub fn new(window: Vec<i64>) -> Result<Self, CoreError> {
        let r = window.len();
        if r < 2 {
            return Err(CoreError::Domain("affine rank must be at least 2".into()));
        }
        let mut seen = vec![false; r];
        for &x in &window {
            let residue = x.rem_euclid(r as i64) as usize;
            if seen[residue] {
                return Err(CoreError::Domain(format!(
                    "window {window:?} entries are not distinct mod {r}"
                )));
            }
            seen[residue] = true;
        }
        Ok(AffinePermutation { window })
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// Value at any integer, via periodicity.
    pub fn apply(&self, i: i64) -> i64 {
        let r = self.rank() as i64;
        let j = (i - 1).rem_euclid(r); // 0-based window slot
        self.window[j as usize] + (i - 1 - j)
    }

    fn triangular(r: usize) -> i64 {
        (r as i64) * (r as i64 + 1) / 2
    }

    /// The length-zero rotation `pi^k`, `pi(i) = i + 1`.
    pub fn rotation(rank: usize, k: i64) -> Self {
        AffinePermutation { window: (1..=rank as i64).map(|i| i + k).collect() }
    }

    /// The lattice translation `i -> i + r * lambda_i`.
    pub fn translation(lambda: &[i64]) -> Result<Self, CoreError> {
        let r = lambda.len();
        if r < 2 {
            return Err(CoreError::Domain("translation needs rank >= 2".into()));
        }
        let window = lambda
            .iter()
            .enumerate()
            .map(|(idx, &l)| (idx as i64 + 1) + (r as i64) * l)
            .collect();
        AffinePermutation::new(window)
    }

    /// True when the rotation class is zero, i.e. the element lies in the
    /// affine Coxeter group proper.
    pub fn in_coxeter_subgroup(&self) -> bool {
        self.rotation_class() == 0
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for AffinePermutation {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, CoreError> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| CoreError::Parse(format!("expected [..] window, got '{s}'")))?;
        let window = inner
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CoreError::Parse(format!("bad window '{s}'")))?;
        AffinePermutation::new(window)
    }
}

impl Permutation for AffinePermutation {
    const KIND: GroupKind = GroupKind::Affine;

    fn identity(rank: usize) -> Self {
        AffinePermutation { window: (1..=rank as i64).collect() }
    }

    fn rank(&self) -> usize {
        self.window.len()
    }

    fn generator_indices(rank: usize) -> Vec<usize> {
        (0..rank).collect()
    }

    fn generator(rank: usize, i: usize) -> Result<Self, CoreError> {
        if rank < 2 || i >= rank {
            return Err(CoreError::IndexOutOfRange { index: i, bound: rank });
        }
        Ok(Self::identity(rank).right_mul_gen(i))
    }

    fn compose(&self, other: &Self) -> Result<Self, CoreError> {
        if self.rank() != other.rank() {
            return Err(CoreError::RankMismatch { left: self.rank(), right: other.rank() });
        }
        let window = (1..=self.rank() as i64).map(|i| self.apply(other.apply(i))).collect();
        Ok(AffinePermutation { window })
    }

    fn inverse(&self) -> Self {
        let r = self.rank();
        let mut window = vec![0i64; r];
        for v in 1..=r as i64 {
            // Find the window slot whose value is congruent to v mod r.
            let residue = v.rem_euclid(r as i64);
            let (pos, &val) = self
                .window
                .iter()
                .enumerate()
                .find(|(_, &x)| x.rem_euclid(r as i64) == residue)
                .expect("window residues cover all classes");
            window[(v - 1) as usize] = (pos as i64 + 1) + (v - val);
        }
        AffinePermutation { window }
    }

    fn left_mul_gen(&self, i: usize) -> Self {
        // s_i relabels values: x ≡ i (mod r) goes up, x ≡ i+1 goes down.
        let r = self.rank() as i64;
        let up = (i as i64).rem_euclid(r);
        let down = (i as i64 + 1).rem_euclid(r);
        let window = self
            .window
            .iter()
            .map(|&x| {
                let residue = x.rem_euclid(r);
                if residue == up {
                    x + 1
                } else if residue == down {
                    x - 1
                } else {
                    x
                }
            })
            .collect();
        AffinePermutation { window }
    }

    fn right_mul_gen(&self, i: usize) -> Self {
        let r = self.rank();
        let mut window = self.window.clone();
        if i == 0 {
            let first = window[0];
            window[0] = window[r - 1] - r as i64;
            window[r - 1] = first + r as i64;
        } else {
            window.swap(i - 1, i);
        }
        AffinePermutation { window }
    }

    fn left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        if i == 0 {
            let r = self.rank();
            inv.window[r - 1] - r as i64 > inv.window[0]
        } else {
            inv.window[i - 1] > inv.window[i]
        }
    }

    fn right_descent(&self, i: usize) -> bool {
        if i == 0 {
            let r = self.rank();
            self.window[r - 1] - r as i64 > self.window[0]
        } else {
            self.window[i - 1] > self.window[i]
        }
    }

    fn is_length_zero(&self) -> bool {
        let k = self.window[0] - 1;
        self.window.iter().enumerate().all(|(p, &v)| v == p as i64 + 1 + k)
    }

    fn braid_order(rank: usize, i: usize, j: usize) -> Option<u32> {
        if i == j {
            return Some(1);
        }
        if rank == 2 {
            // Infinite dihedral group: no braid relation between s_0, s_1.
            return None;
        }
        let d = i.abs_diff(j);
        Some(if d == 1 || d == rank - 1 { 3 } else { 2 })
    }

    /// The rotation class `k` with `sum(window) = r(r+1)/2 + r*k`.
    fn rotation_class(&self) -> i64 {
        let r = self.rank() as i64;
        let sum: i64 = self.window.iter().sum();
        (sum - Self::triangular(self.rank())) / r
    }

    fn rotation_element(rank: usize, k: i64) -> Result<Self, CoreError> {
        if rank < 2 {
            return Err(CoreError::Domain("affine rank must be at least 2".into()));
        }
        Ok(Self::rotation(rank, k))
    }
}

/// All elements of length at most `max_length`, each exactly once, by
/// breadth-first search over right multiplication by the generators.
/// The result is sorted by (length, window) and, in the affine case, stays
/// inside the Coxeter subgroup.
pub fn enumerate_up_to_length<P: Permutation>(rank: usize, max_length: usize) -> Vec<P> {
    use std::collections::{HashMap, VecDeque};
    let mut dist: HashMap<P, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    let e = P::identity(rank);
    dist.insert(e.clone(), 0);
    queue.push_back(e);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        if d == max_length {
            continue;
        }
        for i in P::generator_indices(rank) {
            let next = w.right_mul_gen(i);
            if !dist.contains_key(&next) {
                dist.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<(usize, P)> = dist.into_iter().map(|(w, d)| (d, w)).collect();
    out.sort();
    out.into_iter().map(|(_, w)| w).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, VecDeque};

    /// Independent length oracle: breadth-first distance from the identity in
    /// the Cayley graph.
    fn bfs_length<P: Permutation>(w: &P) -> Option<usize> {
        let rank = w.rank();
        let mut dist: HashMap<P, usize> = HashMap::new();
        let mut queue = VecDeque::new();
        let e = P::identity(rank);
        dist.insert(e.clone(), 0);
        queue.push_back(e);
        while let Some(x) = queue.pop_front() {
            let d = dist[&x];
            if &x == w {
                return Some(d);
            }
            if d > 24 {
                return None;
            }
            for i in P::generator_indices(rank) {
                let next = x.right_mul_gen(i);
                dist.entry(next.clone()).or_insert_with(|| {
                    queue.push_back(next.clone());
                    d + 1
                });
            }
        }
        None
    }

    fn fperm(window: &[usize]) -> FinitePermutation {
        FinitePermutation::new(window.to_vec()).unwrap()
    }

    #[test]
    fn compose_identity_and_involution() {
        let e = FinitePermutation::identity(3);
        let w = fperm(&[2, 3, 1]);
        assert_eq!(e.compose(&w).unwrap(), w);
        let s1 = FinitePermutation::generator(2, 1).unwrap();
        assert_eq!(s1.compose(&s1).unwrap(), FinitePermutation::identity(2));
    }

    #[test]
    fn braid_identity_in_s3() {
        let s1 = FinitePermutation::generator(3, 1).unwrap();
        let s2 = FinitePermutation::generator(3, 2).unwrap();
        let lhs = s1.compose(&s2).unwrap().compose(&s1).unwrap();
        let rhs = s2.compose(&s1).unwrap().compose(&s2).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        let a = FinitePermutation::identity(2);
        let b = FinitePermutation::identity(3);
        assert!(matches!(a.compose(&b), Err(CoreError::RankMismatch { .. })));
    }

    #[test]
    fn length_examples() {
        assert_eq!(FinitePermutation::identity(4).length(), 0);
        assert_eq!(FinitePermutation::generator(4, 2).unwrap().length(), 1);
        let longest = fperm(&[3, 2, 1]);
        assert_eq!(longest.length(), 3);
        assert_eq!(bfs_length(&longest), Some(3));
    }

    #[test]
    fn reduced_word_examples() {
        assert!(FinitePermutation::identity(3).reduced_word().is_empty());

        // s_2 . s_1 has window [3,1,2]; smallest-descent peeling gives [2,1].
        let s1 = FinitePermutation::generator(3, 1).unwrap();
        let s2 = FinitePermutation::generator(3, 2).unwrap();
        let w = s2.compose(&s1).unwrap();
        assert_eq!(w.window(), &[3, 1, 2]);
        let word = w.reduced_word();
        assert_eq!(word.letters, vec![2, 1]);
        assert_eq!(FinitePermutation::from_word(3, &word).unwrap(), w);
        assert_eq!(word.len(), w.length());
    }

    #[test]
    fn affine_reduced_word_of_s0s1_squared() {
        let s0 = AffinePermutation::generator(2, 0).unwrap();
        let s1 = AffinePermutation::generator(2, 1).unwrap();
        let mut w = AffinePermutation::identity(2);
        for g in [&s0, &s1, &s0, &s1] {
            w = w.compose(g).unwrap();
        }
        assert_eq!(w.length(), 4);
        assert_eq!(bfs_length(&w), Some(4));
        let word = w.reduced_word();
        assert_eq!(word.len(), 4);
        assert_eq!(AffinePermutation::from_word(2, &word).unwrap(), w);
    }

    #[test]
    fn enumerate_counts() {
        let s2: Vec<FinitePermutation> = enumerate_up_to_length(2, 5);
        assert_eq!(s2.len(), 2);

        // The infinite dihedral group has exactly two elements of each
        // positive length: 1 + 2 + 2 + 2 = 7.
        let aff: Vec<AffinePermutation> = enumerate_up_to_length(2, 3);
        assert_eq!(aff.len(), 7);

        let s3: Vec<FinitePermutation> = enumerate_up_to_length(3, 10);
        assert_eq!(s3.len(), 6);
    }

    #[test]
    fn length_changes_by_one_under_generators() {
        for w in enumerate_up_to_length::<FinitePermutation>(4, 6) {
            let l = w.length();
            for i in FinitePermutation::generator_indices(4) {
                let lw = w.left_mul_gen(i).length();
                assert!(lw == l + 1 || l == lw + 1);
                assert_eq!(lw < l, w.left_descent(i));
                let rw = w.right_mul_gen(i).length();
                assert!(rw == l + 1 || l == rw + 1);
                assert_eq!(rw < l, w.right_descent(i));
            }
        }
        for w in enumerate_up_to_length::<AffinePermutation>(3, 4) {
            let l = w.length();
            for i in AffinePermutation::generator_indices(3) {
                let lw = w.left_mul_gen(i).length();
                assert!(lw == l + 1 || l == lw + 1);
                assert_eq!(lw < l, w.left_descent(i));
            }
        }
    }

    #[test]
    fn reduced_words_compose_back() {
        for w in enumerate_up_to_length::<FinitePermutation>(3, 6) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(FinitePermutation::from_word(3, &word).unwrap(), w);
        }
        for w in enumerate_up_to_length::<AffinePermutation>(2, 6) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(AffinePermutation::from_word(2, &word).unwrap(), w);
            assert_eq!(bfs_length(&w), Some(w.length()));
        }
        for w in enumerate_up_to_length::<AffinePermutation>(3, 4) {
            assert_eq!(bfs_length(&w), Some(w.length()));
        }
    }

    #[test]
    fn affine_inverse_and_rotations() {
        let t = AffinePermutation::translation(&[1, 0]).unwrap();
        assert_eq!(t.window(), &[3, 2]);
        assert_eq!(t.rotation_class(), 1);
        assert_eq!(t.length(), 1);
        let ti = t.inverse();
        assert_eq!(t.compose(&ti).unwrap(), AffinePermutation::identity(2));
        assert_eq!(ti.rotation_class(), -1);

        let pi = AffinePermutation::rotation(3, 1);
        assert_eq!(pi.length(), 0);
        assert!(pi.is_length_zero());
        // pi s_i pi^{-1} = s_{i+1 mod r}
        let s1 = AffinePermutation::generator(3, 1).unwrap();
        let conj = pi.compose(&s1).unwrap().compose(&pi.inverse()).unwrap();
        assert_eq!(conj, AffinePermutation::generator(3, 2).unwrap());
    }

    #[test]
    fn translations_form_a_lattice() {
        let a = AffinePermutation::translation(&[1, -1, 0]).unwrap();
        let b = AffinePermutation::translation(&[0, 2, 1]).unwrap();
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab, AffinePermutation::translation(&[1, 1, 1]).unwrap());
        assert_eq!(ab, b.compose(&a).unwrap());
    }

    #[test]
    fn window_text_roundtrip() {
        let w: FinitePermutation = "[3,1,2]".parse().unwrap();
        assert_eq!(w.to_string(), "[3,1,2]");
        let a: AffinePermutation = "[-1, 4]".parse().unwrap();
        assert_eq!(a.window(), &[-1, 4]);
        assert!("[1,1]".parse::<FinitePermutation>().is_err());
        assert!("[0,2]".parse::<AffinePermutation>().is_err());
    }

    #[test]
    fn decomposition_splits_rotation_part() {
        let t = AffinePermutation::translation(&[1, 0]).unwrap();
        let (word, rem) = t.coxeter_decomposition();
        assert_eq!(rem, AffinePermutation::rotation(2, 1));
        let rebuilt = AffinePermutation::from_word(2, &word)
            .unwrap()
            .compose(&rem)
            .unwrap();
        assert_eq!(rebuilt, t);
    }
}
