//! Dipper-James module theory for the finite Hecke algebra `H(q, S_n)`:
//! Young subgroups, symmetrizers, Specht modules, the Gram form, and the
//! `D^lambda` quotients with the l-regularity dichotomy.
//!
//! The symbolic side (symmetrizers) lives over Laurent polynomials with
//! `q = v^-2`; module dimensions are computed numerically in the regular
//! representation at a chosen complex `q`, with ranks decided by singular
//! values under a relative threshold.
//!
//! The bilinear form on the permutation module `M^lambda = H m_lambda`
//! (where `m_lambda` is the Young-subgroup symmetrizer) takes the basis
//! `{T_d m_lambda}` over minimal-length coset representatives `d` of
//! `S_n / Y_lambda` to be orthogonal with weights `q^len(d)`. Restricted to
//! `M^lambda` this equals `1/P_lambda(q)` times the trace form that makes
//! the whole `T`-basis orthogonal with weights `q^len(w)` (with `P_lambda`
//! the Poincare polynomial of `Y_lambda`), so it is H-invariant for every
//! `q`, stays finite at roots of unity where `P_lambda` vanishes, and
//! degenerates at `q = 1` to the classical orthonormal-tabloid form.

use std::collections::HashMap;

use num_complex::Complex64;

use crate::coxeter::{enumerate_up_to_length, FinitePermutation, Permutation};
use crate::error::CoreError;
use crate::hecke::HeckeElement;
use crate::laurent::LaurentPoly;
use crate::linalg::{self, CMat};

/// Elements of the finite Hecke algebra.
pub type FiniteHecke = HeckeElement<FinitePermutation>;

/// A partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, CoreError> {
        if parts.is_empty() {
            return Err(CoreError::Domain("empty partition is rejected".into()));
        }
        if parts.contains(&0) {
            return Err(CoreError::Domain("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CoreError::Domain(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The size `n = sum of parts`.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Conjugate partition (rows and columns interchanged).
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// True when no part value repeats `l` or more times.
    pub fn is_l_regular(&self, l: usize) -> Result<bool, CoreError> {
        if l < 2 {
            return Err(CoreError::Domain("l-regularity needs l >= 2".into()));
        }
        let mut run = 1usize;
        for w in self.parts.windows(2) {
            if w[0] == w[1] {
                run += 1;
                if run >= l {
                    return Ok(false);
                }
            } else {
                run = 1;
            }
        }
        Ok(true)
    }

    /// Generator indices of the Young subgroup `Y_lambda` (adjacent
    /// transpositions inside each consecutive block).
    pub fn block_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut start = 1usize;
        for &p in &self.parts {
            for i in start..start + p - 1 {
                gens.push(i);
            }
            start += p;
        }
        gens
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = CoreError;

    /// Parses `"3,1"` or `"(3,1)"`.
    fn from_str(s: &str) -> Result<Self, CoreError> {
        let inner = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CoreError::Parse(format!("bad partition '{s}'")))?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, in lexicographically decreasing order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// All elements of the Young subgroup `Y_lambda` inside `S_n`, sorted by
/// (length, window).
pub fn young_subgroup(lambda: &Partition) -> Vec<FinitePermutation> {
    let n = lambda.n();
    let gens = lambda.block_generators();
    let mut seen = std::collections::BTreeSet::new();
    let mut queue = std::collections::VecDeque::new();
    let e = FinitePermutation::identity(n);
    seen.insert(e.clone());
    queue.push_back(e);
    while let Some(w) = queue.pop_front() {
        for &i in &gens {
            let next = w.right_mul_gen(i);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<(usize, FinitePermutation)> =
        seen.into_iter().map(|w| (w.length(), w)).collect();
    out.sort();
    out.into_iter().map(|(_, w)| w).collect()
}

/// `Sym_lambda = sum of T_w over Y_lambda`.
pub fn symmetrizer(lambda: &Partition) -> FiniteHecke {
    let n = lambda.n();
    FiniteHecke::from_terms(
        n,
        young_subgroup(lambda).into_iter().map(|w| (w, LaurentPoly::one())),
    )
    .expect("uniform rank")
}

/// `A_lambda = sum over Y_lambda of (-q)^(n(n-1)/2 - len(w)) T_w`, with
/// `q = v^-2` kept symbolic.
pub fn antisymmetrizer(lambda: &Partition) -> FiniteHecke {
    let n = lambda.n();
    let big_n = n * (n - 1) / 2;
    FiniteHecke::from_terms(
        n,
        young_subgroup(lambda).into_iter().map(|w| {
            let k = (big_n - w.length()) as i64;
            // (-q)^k = (-1)^k v^(-2k)
            let sign = if k % 2 == 0 { 1 } else { -1 };
            (w, LaurentPoly::int_monomial(-2 * k, sign))
        }),
    )
    .expect("uniform rank")
}

/// The regular representation of `H(q, S_n)` at a numeric point, with
/// incremental left-multiplication machinery.
pub struct RegularRep {
    pub n: usize,
    pub q: Complex64,
    pub elements: Vec<FinitePermutation>,
    pub index: HashMap<FinitePermutation, usize>,
    /// Per generator `i` (1-based, slot `i-1`): target `index(s_i w)` and
    /// whether length increases.
    gen_target: Vec<Vec<usize>>,
    gen_ascent: Vec<Vec<bool>>,
    /// Peeling tree: `w = s_letter . parent` with `len(parent) = len(w) - 1`.
    peel_letter: Vec<usize>,
    peel_parent: Vec<usize>,
}

impl RegularRep {
    pub fn new(n: usize, q: Complex64) -> Self {
        let max_len = n * (n - 1) / 2;
        let elements: Vec<FinitePermutation> = enumerate_up_to_length(n, max_len);
        let index: HashMap<FinitePermutation, usize> =
            elements.iter().cloned().zip(0..).collect();
        let mut gen_target = Vec::new();
        let mut gen_ascent = Vec::new();
        for i in 1..n {
            let mut targets = Vec::with_capacity(elements.len());
            let mut ascents = Vec::with_capacity(elements.len());
            for w in &elements {
                let sw = w.left_mul_gen(i);
                targets.push(index[&sw]);
                ascents.push(!w.left_descent(i));
            }
            gen_target.push(targets);
            gen_ascent.push(ascents);
        }
        let mut peel_letter = vec![0usize; elements.len()];
        let mut peel_parent = vec![0usize; elements.len()];
        for (j, w) in elements.iter().enumerate() {
            if let Some(i) = w.smallest_left_descent() {
                peel_letter[j] = i;
                peel_parent[j] = index[&w.left_mul_gen(i)];
            }
        }
        RegularRep { n, q, elements, index, gen_target, gen_ascent, peel_letter, peel_parent }
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    /// `T_si . x`.
    pub fn apply_gen(&self, i: usize, x: &[Complex64]) -> Vec<Complex64> {
        let targets = &self.gen_target[i - 1];
        let ascents = &self.gen_ascent[i - 1];
        let mut out = vec![Complex64::new(0.0, 0.0); x.len()];
        let qm1 = self.q - 1.0;
        for (j, &v) in x.iter().enumerate() {
            if v.norm_sqr() == 0.0 {
                continue;
            }
            if ascents[j] {
                out[targets[j]] += v;
            } else {
                out[j] += qm1 * v;
                out[targets[j]] += self.q * v;
            }
        }
        out
    }

    /// `T_w . x` along the deterministic reduced word of `w`.
    pub fn apply_basis(&self, w: &FinitePermutation, x: &[Complex64]) -> Vec<Complex64> {
        let mut acc = x.to_vec();
        for &i in w.reduced_word().letters.iter().rev() {
            acc = self.apply_gen(i, &acc);
        }
        acc
    }

    /// The indicator vector of a subset of the group.
    pub fn indicator(&self, set: &[FinitePermutation]) -> Vec<Complex64> {
        let mut v = vec![Complex64::new(0.0, 0.0); self.dim()];
        for w in set {
            v[self.index[w]] = Complex64::new(1.0, 0.0);
        }
        v
    }

    /// `T_w . x` for every `w` in basis order, computed incrementally along
    /// the peeling tree (one generator application per element).
    pub fn orbit_vectors(&self, x: &[Complex64]) -> Vec<Vec<Complex64>> {
        let mut out: Vec<Vec<Complex64>> = Vec::with_capacity(self.dim());
        for j in 0..self.dim() {
            if j == 0 {
                out.push(x.to_vec());
            } else {
                let v = self.apply_gen(self.peel_letter[j], &out[self.peel_parent[j]]);
                out.push(v);
            }
        }
        out
    }

    /// Applies a group-algebra element `sum c_y T_y` with `y` ranging over a
    /// subgroup given by its sorted element list (identity first), using the
    /// same incremental scheme.
    pub fn apply_group_sum(
        &self,
        subgroup: &[FinitePermutation],
        coeff: impl Fn(&FinitePermutation) -> Complex64,
        x: &[Complex64],
    ) -> Vec<Complex64> {
        let sub_index: HashMap<&FinitePermutation, usize> = subgroup.iter().zip(0..).collect();
        let mut vecs: Vec<Vec<Complex64>> = Vec::with_capacity(subgroup.len());
        let mut acc = vec![Complex64::new(0.0, 0.0); x.len()];
        for (j, y) in subgroup.iter().enumerate() {
            let v = if j == 0 {
                x.to_vec()
            } else {
                let i = y.smallest_left_descent().expect("non-identity");
                let parent = y.left_mul_gen(i);
                let pj = sub_index[&parent];
                self.apply_gen(i, &vecs[pj])
            };
            let c = coeff(y);
            for (a, b) in acc.iter_mut().zip(&v) {
                *a += c * b;
            }
            vecs.push(v);
        }
        acc
    }
}

/// A numerically reduced basis of a submodule of the regular module at a
/// fixed evaluation point: orthonormal vectors in the `T`-basis coordinates.
pub struct ModuleBasis {
    pub q: Complex64,
    pub dimension: usize,
    /// Orthonormal spanning vectors (linearly independent at `q`).
    pub vectors: Vec<Vec<Complex64>>,
    /// Basis order of the ambient regular module.
    pub element_order: Vec<FinitePermutation>,
}

/// The Specht module `S^lambda = span of T_u A_(lambda') T_w Sym_lambda`
/// inside the regular module at `q`, as an orthonormalized basis.
pub fn specht_module(lambda: &Partition, q: Complex64) -> Result<ModuleBasis, CoreError> {
    if q.norm() == 0.0 {
        return Err(CoreError::Domain("q must be nonzero".into()));
    }
    let n = lambda.n();
    let rep = RegularRep::new(n, q);
    let sym_support = young_subgroup(lambda);
    let v_sym = rep.indicator(&sym_support);

    let conj = lambda.conjugate();
    let anti_support = young_subgroup(&conj);
    let big_n = (n * (n - 1) / 2) as i32;
    let minus_q = -q;
    let anti_coeff = |y: &FinitePermutation| minus_q.powi(big_n - y.length() as i32);

    // Generators of the span: A_(lambda') T_w Sym_lambda for all w.
    let w_vectors = rep.orbit_vectors(&v_sym);
    let dim_reg = rep.dim();
    let mut mat = CMat::zeros(dim_reg, w_vectors.len());
    for (j, wv) in w_vectors.iter().enumerate() {
        let col = rep.apply_group_sum(&anti_support, anti_coeff, wv);
        for i in 0..dim_reg {
            mat[(i, j)] = col[i];
        }
    }
    let mut basis = linalg::column_space_basis(&mat, linalg::RANK_REL_TOL);

    // Close under the left action of the generators.
    loop {
        let before = basis.cols;
        if before == 0 {
            break;
        }
        let mut expanded = CMat::zeros(dim_reg, before * n);
        for j in 0..before {
            let col = basis.column(j);
            for i in 0..dim_reg {
                expanded[(i, j)] = col[i];
            }
            for g in 1..n {
                let gen_col = rep.apply_gen(g, &col);
                for i in 0..dim_reg {
                    expanded[(i, before * g + j)] = gen_col[i];
                }
            }
        }
        basis = linalg::column_space_basis(&expanded, linalg::RANK_REL_TOL);
        if basis.cols == before {
            break;
        }
    }

    let vectors: Vec<Vec<Complex64>> = (0..basis.cols).map(|j| basis.column(j)).collect();
    Ok(ModuleBasis {
        q,
        dimension: vectors.len(),
        vectors,
        element_order: rep.elements.clone(),
    })
}

/// Dimension of `S^lambda` at the evaluation point `q`.
pub fn specht_dimension(lambda: &Partition, q: Complex64) -> Result<usize, CoreError> {
    Ok(specht_module(lambda, q)?.dimension)
}

/// Minimal-length representatives `d` of the cosets `S_n / Y_lambda`
/// (windows increasing inside every block), as (basis index, length) pairs.
fn minimal_coset_reps(lambda: &Partition, elements: &[FinitePermutation]) -> Vec<(usize, usize)> {
    let internal: Vec<usize> = lambda.block_generators();
    let mut out = Vec::new();
    for (idx, w) in elements.iter().enumerate() {
        let minimal = internal.iter().all(|&i| w.apply(i) < w.apply(i + 1));
        if minimal {
            out.push((idx, w.length()));
        }
    }
    out
}

/// The invariant bilinear form of `M^lambda` on ambient coordinate vectors:
/// reads the coefficients at minimal coset representatives and weights them
/// by `q^len(d)`. Bilinear (no conjugation); only meaningful on vectors that
/// lie in `M^lambda = H m_lambda`.
pub fn permutation_module_form(
    lambda: &Partition,
    elements: &[FinitePermutation],
    q: Complex64,
    x: &[Complex64],
    y: &[Complex64],
) -> Complex64 {
    minimal_coset_reps(lambda, elements)
        .into_iter()
        .map(|(idx, len)| x[idx] * y[idx] * q.powi(len as i32))
        .sum()
}

/// Gram matrix of the invariant form on a module basis.
pub fn gram_matrix(lambda: &Partition, basis: &ModuleBasis) -> CMat {
    let reps = minimal_coset_reps(lambda, &basis.element_order);
    let dim = basis.dimension;
    let mut g = CMat::zeros(dim, dim);
    for a in 0..dim {
        for b in 0..dim {
            let mut acc = Complex64::new(0.0, 0.0);
            for &(idx, len) in &reps {
                acc += basis.vectors[a][idx] * basis.vectors[b][idx] * basis.q.powi(len as i32);
            }
            g[(a, b)] = acc;
        }
    }
    g
}

/// `dim D^lambda` at `q` a primitive `l`-th root of unity: the rank of the
/// Gram matrix of the invariant form on `S^lambda`.
///
/// The Gram matrix is built on orthonormal vectors with unit-modulus
/// weights, so its entries live on an O(1) scale; singular values below
/// `1e-9` relative to the largest, or below `1e-9 * sqrt(dim)` absolutely,
/// count as zero.
pub fn d_dimension(lambda: &Partition, l: usize) -> Result<usize, CoreError> {
    if l < 2 {
        return Err(CoreError::Domain("root-of-unity order must be >= 2".into()));
    }
    let q = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / l as f64);
    let basis = specht_module(lambda, q)?;
    let g = gram_matrix(lambda, &basis);
    let floor = linalg::RANK_REL_TOL * (g.rows.max(1) as f64).sqrt();
    Ok(linalg::rank_with_floor(&g, linalg::RANK_REL_TOL, floor))
}

/// `is_l_regular` as a free function (mirrors the CLI surface).
pub fn is_l_regular(lambda: &Partition, l: usize) -> Result<bool, CoreError> {
    lambda.is_l_regular(l)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn cq(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    /// Independent oracle: count standard Young tableaux by backtracking.
    fn syt_count(lambda: &Partition) -> usize {
        fn rec(shape: &[usize], fill: &mut Vec<usize>, placed: usize, n: usize) -> usize {
            if placed == n {
                return 1;
            }
            let mut total = 0;
            for row in 0..shape.len() {
                let col = fill[row];
                if col >= shape[row] {
                    continue;
                }
                if row > 0 && fill[row - 1] <= col {
                    continue; // the cell above must already be filled
                }
                fill[row] += 1;
                total += rec(shape, fill, placed + 1, n);
                fill[row] -= 1;
            }
            total
        }
        let n = lambda.n();
        rec(lambda.parts(), &mut vec![0; lambda.parts().len()], 0, n)
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
        assert_eq!(part(&[2, 2, 1]).conjugate(), part(&[3, 2]));
    }

    #[test]
    fn l_regularity_examples() {
        assert!(part(&[2]).is_l_regular(2).unwrap());
        assert!(!part(&[1, 1]).is_l_regular(2).unwrap());
        assert!(part(&[2, 2, 1]).is_l_regular(3).unwrap());
        assert!(!part(&[2, 2, 1]).is_l_regular(2).unwrap());
        assert!(part(&[2]).is_l_regular(1).is_err());
    }

    #[test]
    fn young_subgroup_sizes() {
        assert_eq!(young_subgroup(&part(&[1, 1])).len(), 1);
        assert_eq!(young_subgroup(&part(&[2])).len(), 2);
        assert_eq!(young_subgroup(&part(&[2, 1])).len(), 2);
        assert_eq!(young_subgroup(&part(&[3, 2])).len(), 12);
    }

    #[test]
    fn symmetrizer_examples() {
        assert_eq!(symmetrizer(&part(&[1, 1])), FiniteHecke::one(2));
        let m = symmetrizer(&part(&[2]));
        let s1 = FinitePermutation::generator(2, 1).unwrap();
        assert_eq!(m.coeff(&FinitePermutation::identity(2)), LaurentPoly::one());
        assert_eq!(m.coeff(&s1), LaurentPoly::one());

        // Eigenvector property: T_s1 Sym = v^-2 Sym.
        let prod = FiniteHecke::generator(2, 1).unwrap().mul(&m).unwrap();
        assert_eq!(prod, m.scale(&crate::hecke::q_poly()));
    }

    #[test]
    fn antisymmetrizer_examples() {
        // (1,...,1): single term (-q)^(n(n-1)/2) T_e.
        let a = antisymmetrizer(&part(&[1, 1]));
        assert_eq!(a.num_terms(), 1);
        assert_eq!(
            a.coeff(&FinitePermutation::identity(2)),
            LaurentPoly::int_monomial(-2, -1)
        );

        // (2): (-q) T_e + T_s1, and T_s1 A = -A.
        let a = antisymmetrizer(&part(&[2]));
        let s1 = FinitePermutation::generator(2, 1).unwrap();
        assert_eq!(
            a.coeff(&FinitePermutation::identity(2)),
            LaurentPoly::int_monomial(-2, -1)
        );
        assert_eq!(a.coeff(&s1), LaurentPoly::one());
        let prod = FiniteHecke::generator(2, 1).unwrap().mul(&a).unwrap();
        assert_eq!(prod, a.scale(&-&LaurentPoly::one()));
    }

    #[test]
    fn specht_dimensions_match_tableaux_counts() {
        let q = cq(3.0);
        assert_eq!(specht_dimension(&part(&[2]), q).unwrap(), 1);
        assert_eq!(specht_dimension(&part(&[1, 1]), q).unwrap(), 1);
        assert_eq!(specht_dimension(&part(&[2, 1]), q).unwrap(), 2);
        assert_eq!(syt_count(&part(&[2, 1])), 2);

        for n in 2..=4 {
            let mut sum_sq = 0usize;
            for lambda in partitions_of(n) {
                let d = specht_dimension(&lambda, q).unwrap();
                assert_eq!(d, syt_count(&lambda), "lambda = {lambda}");
                sum_sq += d * d;
            }
            let fact: usize = (1..=n).product();
            assert_eq!(sum_sq, fact, "n = {n}");
        }
    }

    #[test]
    fn form_is_invariant_and_symmetric() {
        // <T_i x, y> = <x, T_i y> on M^lambda, at a generic and a root point.
        for q in [cq(3.0), Complex64::from_polar(1.0, std::f64::consts::PI)] {
            let lambda = part(&[2, 1]);
            let rep = RegularRep::new(3, q);
            let v_sym = rep.indicator(&young_subgroup(&lambda));
            let vecs = rep.orbit_vectors(&v_sym);
            let x = &vecs[2];
            let y = &vecs[4];
            for i in 1..3 {
                let tix = rep.apply_gen(i, x);
                let tiy = rep.apply_gen(i, y);
                let lhs = permutation_module_form(&lambda, &rep.elements, q, &tix, y);
                let rhs = permutation_module_form(&lambda, &rep.elements, q, x, &tiy);
                assert!((lhs - rhs).norm() < 1e-10, "i = {i}, q = {q}");
                let sym_ab = permutation_module_form(&lambda, &rep.elements, q, x, y);
                let sym_ba = permutation_module_form(&lambda, &rep.elements, q, y, x);
                assert!((sym_ab - sym_ba).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn gram_matrix_is_symmetric() {
        let lambda = part(&[2, 1]);
        let basis = specht_module(&lambda, cq(3.0)).unwrap();
        let g = gram_matrix(&lambda, &basis);
        for a in 0..g.rows {
            for b in 0..g.cols {
                assert!((g[(a, b)] - g[(b, a)]).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn d_dimension_examples() {
        // (1,1) is not 2-regular: the sign module dies at q = -1.
        assert_eq!(d_dimension(&part(&[1, 1]), 2).unwrap(), 0);
        // (2) is 2-regular: survives.
        assert!(d_dimension(&part(&[2]), 2).unwrap() >= 1);
        // The one-row module always survives with dimension 1.
        assert_eq!(d_dimension(&part(&[3]), 2).unwrap(), 1);
        assert_eq!(d_dimension(&part(&[3]), 3).unwrap(), 1);
    }

    #[test]
    fn d_dichotomy_small() {
        for n in 2..=4 {
            for lambda in partitions_of(n) {
                for l in [2usize, 3] {
                    let d = d_dimension(&lambda, l).unwrap();
                    let regular = lambda.is_l_regular(l).unwrap();
                    assert_eq!(d > 0, regular, "lambda = {lambda}, l = {l}, d = {d}");
                }
            }
        }
    }

    #[test]
    fn partition_text_roundtrip() {
        let p: Partition = "3,1".parse().unwrap();
        assert_eq!(p, part(&[3, 1]));
        assert_eq!(p.to_string(), "(3,1)");
        let p: Partition = "(2,2,1)".parse().unwrap();
        assert_eq!(p, part(&[2, 2, 1]));
    }
}
