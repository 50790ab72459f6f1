//! The Iwahori-Hecke algebra `H(v, W)` over exact Laurent polynomials, in the
//! Coxeter presentation, for `W` a finite or affine symmetric group.
//!
//! The defining relations are the braid relations together with the quadratic
//! relation `(T_s + 1)(T_s - v^-2) = 0`, i.e. the `T_s`-eigenvalues are
//! `{-1, v^-2}`, and `T_a T_b = T_ab` whenever lengths add. Writing
//! `q = v^-2`, left multiplication by a generator on a basis element is
//!
//! ```text
//! T_si . T_w = T_(si w)                         if len(si w) > len(w)
//! T_si . T_w = (q - 1) T_w + q T_(si w)         otherwise
//! ```
//!
//! Products of general elements expand a reduced word of the left factor one
//! generator at a time, so the relations hold by construction and the
//! presentation checks below are genuine consistency tests of the group
//! machinery.

use std::collections::BTreeMap;
use std::fmt;

use crate::coxeter::{enumerate_up_to_length, Permutation, Word};
use crate::error::CoreError;
use crate::laurent::LaurentPoly;

/// `q = v^-2`, the positive eigenvalue of the quadratic relation.
pub fn q_poly() -> LaurentPoly {
    LaurentPoly::v_pow(-2)
}

/// `q - 1 = v^-2 - 1`.
pub fn q_minus_one() -> LaurentPoly {
    &q_poly() - &LaurentPoly::one()
}

/// A finite sparse sum `sum c_w T_w` with Laurent-polynomial coefficients.
///
/// Invariants: no stored coefficient is zero; all keys share the element's
/// rank (and group kind, which is the type parameter).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement<P: Permutation> {
    rank: usize,
    terms: BTreeMap<P, LaurentPoly>,
}

impl<P: Permutation> HeckeElement<P> {
    pub fn zero(rank: usize) -> Self {
        HeckeElement { rank, terms: BTreeMap::new() }
    }

    /// The identity `T_e`.
    pub fn one(rank: usize) -> Self {
        Self::basis(P::identity(rank))
    }

    /// The basis element `T_w`.
    pub fn basis(w: P) -> Self {
        let rank = w.rank();
        let mut terms = BTreeMap::new();
        terms.insert(w, LaurentPoly::one());
        HeckeElement { rank, terms }
    }

    /// `T_si`.
    pub fn generator(rank: usize, i: usize) -> Result<Self, CoreError> {
        Ok(Self::basis(P::generator(rank, i)?))
    }

    pub fn from_terms<I: IntoIterator<Item = (P, LaurentPoly)>>(
        rank: usize,
        iter: I,
    ) -> Result<Self, CoreError> {
        let mut out = Self::zero(rank);
        for (w, c) in iter {
            if w.rank() != rank {
                return Err(CoreError::RankMismatch { left: rank, right: w.rank() });
            }
            out.add_term(w, c);
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&P, &LaurentPoly)> {
        self.terms.iter()
    }

    /// Coefficient of `T_w` (zero if absent).
    pub fn coeff(&self, w: &P) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    fn add_term(&mut self, w: P, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, CoreError> {
        if self.rank != other.rank {
            return Err(CoreError::RankMismatch { left: self.rank, right: other.rank });
        }
        let mut out = self.clone();
        for (w, c) in other.terms.iter() {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CoreError> {
        self.add(&other.scale(&-&LaurentPoly::one()))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        HeckeElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    /// Left multiplication by the basis element of a length-zero group
    /// element (`T_rho x` just relabels the basis).
    fn relabel_left(&self, rho: &P) -> Self {
        debug_assert!(rho.is_length_zero());
        HeckeElement {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (rho.compose(w).expect("equal ranks"), c.clone()))
                .collect(),
        }
    }

    /// Left multiplication by `T_si`, with an optional length cutoff on the
    /// support of the result.
    pub fn mul_gen(&self, i: usize, cutoff: Option<usize>) -> Result<Self, CoreError> {
        let q = q_poly();
        let qm1 = q_minus_one();
        let mut out = Self::zero(self.rank);
        for (w, c) in self.terms.iter() {
            let sw = w.left_mul_gen(i);
            if !w.left_descent(i) {
                if let Some(cut) = cutoff {
                    let len = sw.length();
                    if len > cut {
                        return Err(CoreError::CutoffExceeded { length: len, cutoff: cut });
                    }
                }
                out.add_term(sw, c.clone());
            } else {
                out.add_term(w.clone(), &qm1 * c);
                out.add_term(sw, &q * c);
            }
        }
        Ok(out)
    }

    /// Full product, expanding a reduced word of each left-factor basis
    /// element one generator at a time.
    pub fn mul_with_cutoff(&self, rhs: &Self, cutoff: Option<usize>) -> Result<Self, CoreError> {
        if self.rank != rhs.rank {
            return Err(CoreError::RankMismatch { left: self.rank, right: rhs.rank });
        }
        let mut out = Self::zero(self.rank);
        for (wa, ca) in self.terms.iter() {
            let (word, rho) = wa.coxeter_decomposition();
            let mut acc = if rho.is_length_zero() && rho == P::identity(self.rank) {
                rhs.clone()
            } else {
                rhs.relabel_left(&rho)
            };
            for &i in word.letters.iter().rev() {
                acc = acc.mul_gen(i, cutoff)?;
            }
            out = out.add(&acc.scale(ca))?;
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, CoreError> {
        self.mul_with_cutoff(rhs, None)
    }

    /// Inverse of the basis element `T_w`, as a product of generator
    /// inverses along a reduced word.
    pub fn invert_basis(w: &P) -> Result<Self, CoreError> {
        let rank = w.rank();
        let (word, rho) = w.coxeter_decomposition();
        // T_w = T_word T_rho, so T_w^-1 = T_(rho^-1) T_sik^-1 ... T_si1^-1.
        let mut acc = Self::one(rank);
        for &i in word.letters.iter().rev() {
            acc = acc.mul(&invert_generator(rank, i)?)?;
        }
        Ok(acc.relabel_left(&rho.inverse()))
    }

    /// Specializes every coefficient at a complex point `v = z`.
    pub fn eval_coeffs(&self, z: num_complex::Complex64) -> Result<Vec<(P, num_complex::Complex64)>, CoreError> {
        self.terms
            .iter()
            .map(|(w, c)| Ok((w.clone(), c.eval(z)?)))
            .collect()
    }

    /// Support sorted by (length, window); used for deterministic printing.
    fn sorted_support(&self) -> Vec<(&P, &LaurentPoly)> {
        let mut items: Vec<(&P, &LaurentPoly)> = self.terms.iter().collect();
        items.sort_by_key(|(w, _)| (w.length(), (*w).clone()));
        items
    }
}

/// `T_si . T_w` expanded by the defining relations.
pub fn mul_gen_basis<P: Permutation>(i: usize, w: &P) -> Result<HeckeElement<P>, CoreError> {
    HeckeElement::basis(w.clone()).mul_gen(i, None)
}

/// Product of two elements (no cutoff).
pub fn mul<P: Permutation>(
    a: &HeckeElement<P>,
    b: &HeckeElement<P>,
) -> Result<HeckeElement<P>, CoreError> {
    a.mul(b)
}

/// `T_si^-1 = v^2 T_si + (v^2 - 1) T_e`, from the quadratic relation.
pub fn invert_generator<P: Permutation>(rank: usize, i: usize) -> Result<HeckeElement<P>, CoreError> {
    let s = P::generator(rank, i)?;
    let v2 = LaurentPoly::v_pow(2);
    let v2m1 = &v2 - &LaurentPoly::one();
    HeckeElement::from_terms(rank, [(s, v2), (P::identity(rank), v2m1)])
}

/// One verified relation instance.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub id: String,
    pub description: String,
    pub pass: bool,
    /// First counterexample, if any.
    pub witness: Option<String>,
}

/// Result of `verify_presentation`.
#[derive(Clone, Debug)]
pub struct PresentationReport {
    pub kind: crate::coxeter::GroupKind,
    pub rank: usize,
    pub max_length: usize,
    pub elements_checked: usize,
    pub checks: Vec<RelationCheck>,
}

impl PresentationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Exact check of the quadratic, braid, and length-additivity relations over
/// all basis elements of length at most `max_length`.
pub fn verify_presentation<P: Permutation>(rank: usize, max_length: usize) -> Result<PresentationReport, CoreError> {
    let elements: Vec<P> = enumerate_up_to_length(rank, max_length);
    let gens = P::generator_indices(rank);
    let mut checks = Vec::new();

    // Quadratic relation applied to every basis element:
    // T_i (T_i x) = (q-1) (T_i x) + q x.
    for &i in &gens {
        let mut pass = true;
        let mut witness = None;
        for w in &elements {
            let tw = HeckeElement::basis(w.clone());
            let tiw = tw.mul_gen(i, None)?;
            let lhs = tiw.mul_gen(i, None)?;
            let rhs = tiw.scale(&q_minus_one()).add(&tw.scale(&q_poly()))?;
            if lhs != rhs {
                pass = false;
                witness = Some(format!("w = {w}"));
                break;
            }
        }
        checks.push(RelationCheck {
            id: format!("quadratic-s{i}"),
            description: format!("(T_s{i} + 1)(T_s{i} - v^-2) = 0"),
            pass,
            witness,
        });
    }

    // Braid relations (order 3) and commutations (order 2).
    for (ai, &i) in gens.iter().enumerate() {
        for &j in gens.iter().skip(ai + 1) {
            let order = match P::braid_order(rank, i, j) {
                Some(m) => m,
                None => continue, // infinite order: nothing to check
            };
            let mut pass = true;
            let mut witness = None;
            for w in &elements {
                let x = HeckeElement::basis(w.clone());
                let (lhs, rhs) = if order == 3 {
                    (
                        x.mul_gen(i, None)?.mul_gen(j, None)?.mul_gen(i, None)?,
                        x.mul_gen(j, None)?.mul_gen(i, None)?.mul_gen(j, None)?,
                    )
                } else {
                    (
                        x.mul_gen(j, None)?.mul_gen(i, None)?,
                        x.mul_gen(i, None)?.mul_gen(j, None)?,
                    )
                };
                if lhs != rhs {
                    pass = false;
                    witness = Some(format!("w = {w}"));
                    break;
                }
            }
            let description = if order == 3 {
                format!("T_s{i} T_s{j} T_s{i} = T_s{j} T_s{i} T_s{j}")
            } else {
                format!("T_s{i} T_s{j} = T_s{j} T_s{i}")
            };
            checks.push(RelationCheck { id: format!("braid-s{i}-s{j}"), description, pass, witness });
        }
    }

    // Length additivity: T_a T_b = T_ab whenever len(ab) = len(a) + len(b).
    {
        let mut pass = true;
        let mut witness = None;
        'outer: for a in &elements {
            let la = a.length();
            for b in &elements {
                let ab = a.compose(b)?;
                if ab.length() != la + b.length() {
                    continue;
                }
                let prod = HeckeElement::basis(a.clone()).mul(&HeckeElement::basis(b.clone()))?;
                if prod != HeckeElement::basis(ab) {
                    pass = false;
                    witness = Some(format!("a = {a}, b = {b}"));
                    break 'outer;
                }
            }
        }
        checks.push(RelationCheck {
            id: "length-additivity".into(),
            description: "T_a T_b = T_ab when len(ab) = len(a) + len(b)".into(),
            pass,
            witness,
        });
    }

    Ok(PresentationReport {
        kind: P::KIND,
        rank,
        max_length,
        elements_checked: elements.len(),
        checks,
    })
}

/// Deterministic pseudo-random sparse element, for stress tests and
/// benchmarks. Support is drawn from elements of length `<= max_length`,
/// coefficients are small integer multiples of powers of `v`.
pub fn sample_element<P: Permutation>(
    rank: usize,
    max_length: usize,
    num_terms: usize,
    seed: u64,
) -> HeckeElement<P> {
    let pool: Vec<P> = enumerate_up_to_length(rank, max_length);
    let mut state = seed.wrapping_add(0x9e3779b97f4a7c15);
    let mut next = move || {
        // splitmix64
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    let mut out = HeckeElement::zero(rank);
    for _ in 0..num_terms {
        let w = pool[(next() % pool.len() as u64) as usize].clone();
        let c = (next() % 9) as i64 - 4;
        let e = (next() % 7) as i64 - 3;
        out.add_term(w, LaurentPoly::int_monomial(e, c));
    }
    out
}

fn format_term<P: Permutation>(w: &P, c: &LaurentPoly) -> String {
    let (word, rho) = w.coxeter_decomposition();
    let mut label = word
        .letters
        .iter()
        .map(|i| format!("s{i}"))
        .collect::<Vec<_>>()
        .join(" ");
    let k = rho.rotation_class();
    if k != 0 {
        if !label.is_empty() {
            label.push(' ');
        }
        label.push_str(&format!("pi^{k}"));
    }
    let coeff = if c.is_one() {
        String::new()
    } else if c.num_terms() == 1 && !c.to_string().starts_with('-') {
        format!("{c}*")
    } else {
        format!("({c})*")
    };
    format!("{coeff}T[{label}]")
}

impl<P: Permutation> fmt::Display for HeckeElement<P> {
    /// `"(v^-2 - 1)*T[s1] + v^-2*T[]"`; terms sorted by (length, window).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .sorted_support()
            .into_iter()
            .map(|(w, c)| format_term(w, c))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<P: Permutation> HeckeElement<P> {
    /// Parses the display grammar at an explicit rank (generator letters
    /// must fit the rank).
    pub fn parse_with_rank(s: &str, rank: usize) -> Result<Self, CoreError> {
        let elt: Self = s.parse()?;
        if elt.rank == rank {
            return Ok(elt);
        }
        if elt.rank > rank {
            return Err(CoreError::Parse(format!(
                "element uses generators beyond rank {rank}"
            )));
        }
        // Re-parse against the requested rank by rebuilding each term.
        let mut out = Self::zero(rank);
        for (w, c) in elt.terms {
            let (word, rho) = w.coxeter_decomposition();
            let base = P::from_word(rank, &word)?;
            let lifted = if rho.rotation_class() == 0 {
                base
            } else {
                base.compose(&P::rotation_element(rank, rho.rotation_class())?)?
            };
            out.add_term(lifted, c);
        }
        Ok(out)
    }
}

impl<P: Permutation> std::str::FromStr for HeckeElement<P> {
    type Err = CoreError;

    /// Parses the display grammar `coeff*T[word]` joined by `+`. Coefficients
    /// may be parenthesized Laurent polynomials; the word may end with a
    /// `pi^k` rotation token (affine only). The rank is inferred from the
    /// largest generator index; see [`HeckeElement::parse_with_rank`] to fix
    /// it explicitly.
    fn from_str(s: &str) -> Result<Self, CoreError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(CoreError::Parse("empty element".into()));
        }
        if s == "0" {
            return Err(CoreError::Parse("zero element needs an explicit rank".into()));
        }
        // Split on '+' at paren depth 0.
        let mut parts = Vec::new();
        let mut depth = 0i32;
        let mut start = 0usize;
        for (i, ch) in s.char_indices() {
            match ch {
                '(' | '[' => depth += 1,
                ')' | ']' => depth -= 1,
                '+' if depth == 0 => {
                    parts.push(&s[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        parts.push(&s[start..]);

        let mut parsed: Vec<(i64, Word, LaurentPoly)> = Vec::new();
        let mut max_letter = 0usize;
        for part in parts {
            let part = part.trim();
            let t_pos = part
                .find("T[")
                .ok_or_else(|| CoreError::Parse(format!("missing T[..] in '{part}'")))?;
            let coeff_str = part[..t_pos].trim().trim_end_matches('*').trim();
            let coeff = if coeff_str.is_empty() {
                LaurentPoly::one()
            } else {
                let inner = coeff_str
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .unwrap_or(coeff_str);
                inner.parse::<LaurentPoly>()?
            };
            let word_str = part[t_pos + 2..]
                .strip_suffix(']')
                .ok_or_else(|| CoreError::Parse(format!("unterminated T[ in '{part}'")))?;
            let mut rotation = 0i64;
            let mut letters = Vec::new();
            for tok in word_str.split_whitespace() {
                if let Some(k) = tok.strip_prefix("pi^") {
                    rotation = k
                        .parse()
                        .map_err(|_| CoreError::Parse(format!("bad rotation '{tok}'")))?;
                } else if let Some(ix) = tok.strip_prefix('s') {
                    let i: usize = ix
                        .parse()
                        .map_err(|_| CoreError::Parse(format!("bad generator '{tok}'")))?;
                    max_letter = max_letter.max(i);
                    letters.push(i);
                } else {
                    return Err(CoreError::Parse(format!("bad token '{tok}'")));
                }
            }
            parsed.push((rotation, Word::new(letters), coeff));
        }
        // Infer the rank: smallest rank covering all letters.
        let rank = (max_letter + 1).max(2);
        let mut out = HeckeElement::zero(rank);
        for (rotation, word, coeff) in parsed {
            let base = P::from_word(rank, &word)?;
            let w = if rotation == 0 {
                base
            } else {
                let rho = P::rotation_element(rank, rotation)
                    .map_err(|e| CoreError::Parse(e.to_string()))?;
                base.compose(&rho)?
            };
            out.add_term(w, coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{AffinePermutation, FinitePermutation};

    type FHecke = HeckeElement<FinitePermutation>;

    fn gen_elt(rank: usize, i: usize) -> FHecke {
        FHecke::generator(rank, i).unwrap()
    }

    #[test]
    fn mul_gen_basis_examples() {
        // Lengths add: T_s1 . T_e = T_s1.
        let e = FinitePermutation::identity(2);
        let out = mul_gen_basis(1, &e).unwrap();
        assert_eq!(out, gen_elt(2, 1));

        // Quadratic case: T_s1 . T_s1 = (v^-2 - 1) T_s1 + v^-2 T_e.
        let s1 = FinitePermutation::generator(2, 1).unwrap();
        let out = mul_gen_basis(1, &s1).unwrap();
        let expected = FHecke::from_terms(
            2,
            [
                (s1.clone(), q_minus_one()),
                (FinitePermutation::identity(2), q_poly()),
            ],
        )
        .unwrap();
        assert_eq!(out, expected);

        // Lengths add across distinct generators in S_3.
        let s2 = FinitePermutation::generator(3, 2).unwrap();
        let out = mul_gen_basis(1, &s2).unwrap();
        let s1s2 = FinitePermutation::generator(3, 1).unwrap().compose(&s2).unwrap();
        assert_eq!(out, FHecke::basis(s1s2));
    }

    #[test]
    fn identity_acts_trivially() {
        let x = sample_element::<FinitePermutation>(3, 3, 4, 7);
        assert_eq!(FHecke::one(3).mul(&x).unwrap(), x);
        assert_eq!(x.mul(&FHecke::one(3)).unwrap(), x);
    }

    #[test]
    fn braid_relation_as_elements() {
        let t1 = gen_elt(3, 1);
        let t2 = gen_elt(3, 2);
        let lhs = t1.mul(&t2).unwrap().mul(&t1).unwrap();
        let rhs = t2.mul(&t1).unwrap().mul(&t2).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn quadratic_relation_vanishes() {
        // (T_s1 + 1)(T_s1 - v^-2) = 0.
        let t = gen_elt(2, 1);
        let one = FHecke::one(2);
        let left = t.add(&one).unwrap();
        let right = t.sub(&one.scale(&q_poly())).unwrap();
        assert!(left.mul(&right).unwrap().is_zero());
    }

    #[test]
    fn generator_inverse() {
        let inv = invert_generator::<FinitePermutation>(2, 1).unwrap();
        // Coefficients: v^2 on T_s1 and v^2 - 1 on T_e.
        let s1 = FinitePermutation::generator(2, 1).unwrap();
        assert_eq!(inv.coeff(&s1), LaurentPoly::v_pow(2));
        assert_eq!(
            inv.coeff(&FinitePermutation::identity(2)),
            &LaurentPoly::v_pow(2) - &LaurentPoly::one()
        );
        let t = gen_elt(2, 1);
        assert_eq!(inv.mul(&t).unwrap(), FHecke::one(2));
        assert_eq!(t.mul(&inv).unwrap(), FHecke::one(2));

        // At v = 1 the inverse degenerates to T_s itself.
        let z = num_complex::Complex64::new(1.0, 0.0);
        let vals = inv.eval_coeffs(z).unwrap();
        for (w, c) in vals {
            if w == s1 {
                assert!((c - 1.0).norm() < 1e-14);
            } else {
                assert!(c.norm() < 1e-14);
            }
        }
    }

    #[test]
    fn basis_inverse_roundtrip() {
        for w in enumerate_up_to_length::<FinitePermutation>(3, 3) {
            let inv = FHecke::invert_basis(&w).unwrap();
            assert_eq!(inv.mul(&FHecke::basis(w.clone())).unwrap(), FHecke::one(3));
            assert_eq!(FHecke::basis(w).mul(&inv).unwrap(), FHecke::one(3));
        }
        // Affine, including a rotation part.
        let t = AffinePermutation::translation(&[1, 0]).unwrap();
        let inv = HeckeElement::invert_basis(&t).unwrap();
        let prod = inv.mul(&HeckeElement::basis(t)).unwrap();
        assert_eq!(prod, HeckeElement::<AffinePermutation>::one(2));
    }

    #[test]
    fn presentation_suites_pass() {
        let fin = verify_presentation::<FinitePermutation>(3, 3).unwrap();
        assert!(fin.all_pass(), "{:?}", fin.checks);
        let aff = verify_presentation::<AffinePermutation>(2, 4).unwrap();
        assert!(aff.all_pass(), "{:?}", aff.checks);
    }

    #[test]
    fn specialization_at_v_one_is_the_group_algebra() {
        // Structure constants become 0/1 following the group law.
        let one = num_complex::Complex64::new(1.0, 0.0);
        let elements = enumerate_up_to_length::<FinitePermutation>(3, 3);
        for a in &elements {
            for b in &elements {
                let ab = a.compose(b).unwrap();
                let prod = FHecke::basis(a.clone()).mul(&FHecke::basis(b.clone())).unwrap();
                for (w, c) in prod.eval_coeffs(one).unwrap() {
                    let expected = if w == ab { 1.0 } else { 0.0 };
                    assert!((c - expected).norm() < 1e-12, "a = {a}, b = {b}, w = {w}");
                }
            }
        }
    }

    #[test]
    fn associativity_on_sampled_elements() {
        for seed in 0..4u64 {
            let a = sample_element::<FinitePermutation>(3, 3, 3, seed);
            let b = sample_element::<FinitePermutation>(3, 3, 3, seed + 100);
            let c = sample_element::<FinitePermutation>(3, 3, 3, seed + 200);
            let lhs = a.mul(&b).unwrap().mul(&c).unwrap();
            let rhs = a.mul(&b.mul(&c).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    /// Small symbolic regular-representation oracle for S_3: left
    /// multiplication matrices built only from `mul_gen_basis`, multiplied as
    /// matrices, must reproduce `mul` on all basis pairs.
    #[test]
    fn regular_representation_oracle_s3() {
        let elements: Vec<FinitePermutation> = enumerate_up_to_length(3, 10);
        let n = elements.len();
        let index: std::collections::HashMap<_, _> =
            elements.iter().cloned().zip(0..).collect();

        // Generator matrices: column w holds T_si . T_w.
        let gen_matrix = |i: usize| -> Vec<Vec<LaurentPoly>> {
            let mut m = vec![vec![LaurentPoly::zero(); n]; n];
            for (col, w) in elements.iter().enumerate() {
                for (u, c) in mul_gen_basis(i, w).unwrap().terms() {
                    m[index[u]][col] = c.clone();
                }
            }
            m
        };
        let mats: Vec<_> = vec![gen_matrix(1), gen_matrix(2)];

        let matmul = |a: &Vec<Vec<LaurentPoly>>, b: &Vec<Vec<LaurentPoly>>| {
            let mut out = vec![vec![LaurentPoly::zero(); n]; n];
            for i in 0..n {
                for k in 0..n {
                    if a[i][k].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        if b[k][j].is_zero() {
                            continue;
                        }
                        out[i][j] = &out[i][j] + &(&a[i][k] * &b[k][j]);
                    }
                }
            }
            out
        };

        for a in &elements {
            // Matrix of left multiplication by T_a.
            let mut m = vec![vec![LaurentPoly::zero(); n]; n];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = LaurentPoly::one();
            }
            for &i in a.reduced_word().letters.iter().rev() {
                m = matmul(&mats[i - 1], &m);
            }
            for (col, b) in elements.iter().enumerate() {
                let direct = FHecke::basis(a.clone()).mul(&FHecke::basis(b.clone())).unwrap();
                for (row, u) in elements.iter().enumerate() {
                    assert_eq!(m[row][col], direct.coeff(u), "a = {a}, b = {b}, u = {u}");
                }
            }
        }
    }

    #[test]
    fn display_and_parse() {
        let s1 = FinitePermutation::generator(2, 1).unwrap();
        let x = mul_gen_basis(1, &s1).unwrap();
        assert_eq!(x.to_string(), "v^-2*T[] + (v^-2 - 1)*T[s1]");
        let back: FHecke = x.to_string().parse().unwrap();
        assert_eq!(back, x);

        let t = AffinePermutation::translation(&[1, 0]).unwrap();
        let elt = HeckeElement::basis(t);
        let shown = elt.to_string();
        assert_eq!(shown, "T[s0 pi^1]");
        let back: HeckeElement<AffinePermutation> = shown.parse().unwrap();
        assert_eq!(back, elt);
    }

    #[test]
    fn cutoff_guard_fires() {
        let x = HeckeElement::<AffinePermutation>::one(2);
        let s0 = HeckeElement::<AffinePermutation>::generator(2, 0).unwrap();
        let s1 = HeckeElement::<AffinePermutation>::generator(2, 1).unwrap();
        // Build an element of length 3 under cutoff 2.
        let prod = s0.mul(&s1).unwrap();
        let res = prod.mul_with_cutoff(&s0.mul(&x).unwrap(), Some(2));
        assert!(matches!(res, Err(CoreError::CutoffExceeded { .. })));
    }
}
