//! Dense complex matrices and the small amount of numerical linear algebra
//! the checks need: Householder QR, one-sided Jacobi SVD, rank and nullspace
//! with explicit relative singular-value thresholds.
//!
//! Everything here is deterministic: no pivot randomization, fixed sweep
//! order, so identical inputs give bit-identical outputs.

use num_complex::Complex64;

/// Default relative singular-value threshold: sigma < tol * sigma_max counts
/// as zero.
pub const RANK_REL_TOL: f64 = 1e-9;

/// Row-major dense complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct CMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Complex64>,
}

impl CMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMat { rows, cols, data: vec![Complex64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = CMat::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn diagonal(entries: &[Complex64]) -> Self {
        let mut m = CMat::zeros(entries.len(), entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn scale(&self, c: Complex64) -> CMat {
        CMat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &CMat) -> CMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        CMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &CMat) -> CMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        CMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn matmul(&self, other: &CMat) -> CMat {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = CMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn matvec(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, x.len());
        let mut out = vec![Complex64::new(0.0, 0.0); self.rows];
        for i in 0..self.rows {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..self.cols {
                acc += self[(i, j)] * x[j];
            }
            out[i] = acc;
        }
        out
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> CMat {
        CMat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    /// Kronecker product `self (x) other`.
    pub fn kron(&self, other: &CMat) -> CMat {
        let mut out = CMat::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        out[(i * other.rows + p, j * other.cols + q)] = a * other[(p, q)];
                    }
                }
            }
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Operator 2-norm, i.e. the largest singular value.
    pub fn operator_norm(&self) -> f64 {
        if self.rows == 0 || self.cols == 0 {
            return 0.0;
        }
        singular_values(self).first().copied().unwrap_or(0.0)
    }

    /// Keeps only the selected columns.
    pub fn select_columns(&self, keep: &[usize]) -> CMat {
        let mut out = CMat::zeros(self.rows, keep.len());
        for (jo, &j) in keep.iter().enumerate() {
            for i in 0..self.rows {
                out[(i, jo)] = self[(i, j)];
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }
}

impl std::ops::Index<(usize, usize)> for CMat {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Householder QR; returns only the square upper factor `R` (cols x cols).
/// Used to shrink tall systems before the Jacobi sweep; the singular values
/// of `R` equal those of the input.
fn qr_r_factor(a: &CMat) -> CMat {
    let m = a.rows;
    let n = a.cols;
    let mut w = a.clone();
    for k in 0..n.min(m.saturating_sub(1)) {
        // Householder vector for column k below the diagonal.
        let mut norm2 = 0.0;
        for i in k..m {
            norm2 += w[(i, k)].norm_sqr();
        }
        let norm = norm2.sqrt();
        if norm == 0.0 {
            continue;
        }
        let akk = w[(k, k)];
        let phase = if akk.norm() > 0.0 { akk / akk.norm() } else { Complex64::new(1.0, 0.0) };
        let alpha = -phase * norm;
        let mut v: Vec<Complex64> = (k..m).map(|i| w[(i, k)]).collect();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|x| x.norm_sqr()).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        // Apply H = I - 2 v v^H / |v|^2 to the remaining columns.
        for j in k..n {
            let mut dot = Complex64::new(0.0, 0.0);
            for (idx, i) in (k..m).enumerate() {
                dot += v[idx].conj() * w[(i, j)];
            }
            let factor = dot * (2.0 / vnorm2);
            for (idx, i) in (k..m).enumerate() {
                let delta = factor * v[idx];
                w[(i, j)] -= delta;
            }
        }
    }
    CMat::from_fn(n, n, |i, j| if i <= j && i < m { w[(i, j)] } else { Complex64::new(0.0, 0.0) })
}

/// One-sided Jacobi sweep machinery. Returns the worked matrix (columns are
/// `u_i sigma_i`) and, when requested, the accumulated right unitary `V`.
fn jacobi_orthogonalize(a: &CMat, accumulate_v: bool) -> (CMat, Option<CMat>) {
    let mut w = a.clone();
    let n = w.cols;
    let m = w.rows;
    let mut v = if accumulate_v { Some(CMat::identity(n)) } else { None };
    let tol = 1e-14;
    let max_sweeps = 64;
    for _ in 0..max_sweeps {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let mut app = 0.0;
                let mut aqq = 0.0;
                let mut apq = Complex64::new(0.0, 0.0);
                for i in 0..m {
                    let cp = w[(i, p)];
                    let cq = w[(i, q)];
                    app += cp.norm_sqr();
                    aqq += cq.norm_sqr();
                    apq += cp.conj() * cq;
                }
                let off = apq.norm();
                if off <= tol * (app * aqq).sqrt() || off == 0.0 {
                    continue;
                }
                rotated = true;
                // Phase-align column p, then apply a real Jacobi rotation.
                let phase = apq / off;
                let zeta = (aqq - app) / (2.0 * off);
                let t = if zeta >= 0.0 {
                    1.0 / (zeta + (1.0 + zeta * zeta).sqrt())
                } else {
                    -1.0 / (-zeta + (1.0 + zeta * zeta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for i in 0..m {
                    let cp = w[(i, p)] * phase;
                    let cq = w[(i, q)];
                    w[(i, p)] = cp * c - cq * s;
                    w[(i, q)] = cp * s + cq * c;
                }
                if let Some(vm) = v.as_mut() {
                    for i in 0..n {
                        let vp = vm[(i, p)] * phase;
                        let vq = vm[(i, q)];
                        vm[(i, p)] = vp * c - vq * s;
                        vm[(i, q)] = vp * s + vq * c;
                    }
                }
            }
        }
        if !rotated {
            break;
        }
    }
    (w, v)
}

/// Singular values in descending order.
pub fn singular_values(a: &CMat) -> Vec<f64> {
    if a.rows == 0 || a.cols == 0 {
        return vec![];
    }
    // Work on the thinner orientation; QR-reduce tall matrices first.
    let work = if a.rows < a.cols { a.dagger() } else { a.clone() };
    let reduced = if work.rows > 2 * work.cols { qr_r_factor(&work) } else { work };
    let (w, _) = jacobi_orthogonalize(&reduced, false);
    let mut sv: Vec<f64> = (0..w.cols)
        .map(|j| (0..w.rows).map(|i| w[(i, j)].norm_sqr()).sum::<f64>().sqrt())
        .collect();
    sv.sort_by(|x, y| y.partial_cmp(x).unwrap());
    sv
}

/// Numerical rank: singular values below `rel_tol * sigma_max` count as zero.
pub fn rank(a: &CMat, rel_tol: f64) -> usize {
    let sv = singular_values(a);
    let smax = sv.first().copied().unwrap_or(0.0);
    if smax <= f64::EPSILON {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_tol * smax).count()
}

/// Rank with an additional absolute floor, for matrices whose natural scale
/// is known to the caller (e.g. Gram matrices of unit vectors with
/// unit-modulus weights): singular values below
/// `max(rel_tol * sigma_max, abs_floor)` count as zero.
pub fn rank_with_floor(a: &CMat, rel_tol: f64, abs_floor: f64) -> usize {
    let sv = singular_values(a);
    let smax = sv.first().copied().unwrap_or(0.0);
    let cut = (rel_tol * smax).max(abs_floor);
    sv.iter().filter(|&&s| s > cut).count()
}

/// Orthonormal basis of the right nullspace of `a`, using the relative
/// threshold `rel_tol` on singular values.
pub fn nullspace(a: &CMat, rel_tol: f64) -> Vec<Vec<Complex64>> {
    let n = a.cols;
    if n == 0 {
        return vec![];
    }
    if a.rows == 0 {
        return (0..n)
            .map(|j| {
                let mut e = vec![Complex64::new(0.0, 0.0); n];
                e[j] = Complex64::new(1.0, 0.0);
                e
            })
            .collect();
    }
    let reduced = if a.rows > 2 * a.cols { qr_r_factor(a) } else { a.clone() };
    let (w, v) = jacobi_orthogonalize(&reduced, true);
    let v = v.expect("V accumulated");
    let norms: Vec<f64> = (0..w.cols)
        .map(|j| (0..w.rows).map(|i| w[(i, j)].norm_sqr()).sum::<f64>().sqrt())
        .collect();
    let smax = norms.iter().cloned().fold(0.0, f64::max);
    let mut basis = Vec::new();
    for (j, &norm) in norms.iter().enumerate() {
        if smax <= f64::EPSILON || norm <= rel_tol * smax {
            basis.push(v.column(j));
        }
    }
    basis
}

/// Dimension of the right nullspace.
pub fn nullity(a: &CMat, rel_tol: f64) -> usize {
    a.cols - rank(a, rel_tol)
}

/// Orthonormal basis of the column space (as matrix columns), using the
/// relative threshold `rel_tol` on singular values.
pub fn column_space_basis(a: &CMat, rel_tol: f64) -> CMat {
    if a.rows == 0 || a.cols == 0 {
        return CMat::zeros(a.rows, 0);
    }
    let (w, _) = jacobi_orthogonalize(a, false);
    let norms: Vec<f64> = (0..w.cols)
        .map(|j| (0..w.rows).map(|i| w[(i, j)].norm_sqr()).sum::<f64>().sqrt())
        .collect();
    let smax = norms.iter().cloned().fold(0.0, f64::max);
    let keep: Vec<usize> = (0..w.cols)
        .filter(|&j| smax > f64::EPSILON && norms[j] > rel_tol * smax)
        .collect();
    let mut out = CMat::zeros(a.rows, keep.len());
    for (jo, &j) in keep.iter().enumerate() {
        for i in 0..a.rows {
            out[(i, jo)] = w[(i, j)] / norms[j];
        }
    }
    out
}

/// Orthonormal basis of `{X : X a_i = b_i X for all i}` as matrices, where
/// the `a_i` act on a `d1`-dimensional space and the `b_i` on `d2`.
/// With `a = b` this is the commutant of the family.
pub fn intertwiner_basis(a: &[CMat], b: &[CMat], rel_tol: f64) -> Vec<CMat> {
    assert_eq!(a.len(), b.len());
    if a.is_empty() {
        return vec![];
    }
    let d1 = a[0].rows;
    let d2 = b[0].rows;
    // Unknown X is d2 x d1, vectorized row-major. Row index of the constraint
    // block for generator g and entry (i, j): X a - b X = 0.
    let rows = a.len() * d2 * d1;
    let cols = d2 * d1;
    let mut m = CMat::zeros(rows, cols);
    for (g, (ag, bg)) in a.iter().zip(b.iter()).enumerate() {
        assert!(ag.is_square() && ag.rows == d1);
        assert!(bg.is_square() && bg.rows == d2);
        let base = g * d2 * d1;
        for i in 0..d2 {
            for j in 0..d1 {
                let row = base + i * d1 + j;
                // (X a)_{ij} = sum_k X_{ik} a_{kj}
                for k in 0..d1 {
                    m[(row, i * d1 + k)] += ag[(k, j)];
                }
                // -(b X)_{ij} = -sum_k b_{ik} X_{kj}
                for k in 0..d2 {
                    m[(row, k * d1 + j)] -= bg[(i, k)];
                }
            }
        }
    }
    nullspace(&m, rel_tol)
        .into_iter()
        .map(|vecx| CMat::from_fn(d2, d1, |i, j| vecx[i * d1 + j]))
        .collect()
}

/// Dimension of the commutant `{X : X m_i = m_i X}` of a matrix family.
pub fn commutant_dimension(mats: &[CMat], rel_tol: f64) -> usize {
    intertwiner_basis(mats, mats, rel_tol).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn singular_values_of_diagonal() {
        let m = CMat::diagonal(&[c(3.0, 0.0), c(0.0, -4.0), c(1e-14, 0.0)]);
        let sv = singular_values(&m);
        assert!((sv[0] - 4.0).abs() < 1e-12);
        assert!((sv[1] - 3.0).abs() < 1e-12);
        assert!(sv[2] < 1e-12);
        assert_eq!(rank(&m, RANK_REL_TOL), 2);
    }

    #[test]
    fn singular_values_of_rotationlike() {
        // [[0, 2],[1, 0]] has singular values 2 and 1.
        let mut m = CMat::zeros(2, 2);
        m[(0, 1)] = c(2.0, 0.0);
        m[(1, 0)] = c(1.0, 0.0);
        let sv = singular_values(&m);
        assert!((sv[0] - 2.0).abs() < 1e-12);
        assert!((sv[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn tall_matrix_qr_path() {
        // 8x2 matrix with known rank 1.
        let m = CMat::from_fn(8, 2, |i, _| c((i + 1) as f64, 0.0));
        assert_eq!(rank(&m, RANK_REL_TOL), 1);
        let ns = nullspace(&m, RANK_REL_TOL);
        assert_eq!(ns.len(), 1);
        // Null vector must actually annihilate.
        let img = m.matvec(&ns[0]);
        assert!(img.iter().map(|x| x.norm()).fold(0.0, f64::max) < 1e-10);
    }

    #[test]
    fn nullspace_vectors_are_orthonormal() {
        let mut m = CMat::zeros(2, 4);
        m[(0, 0)] = c(1.0, 0.0);
        m[(1, 1)] = c(0.0, 1.0);
        let ns = nullspace(&m, RANK_REL_TOL);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let n: f64 = v.iter().map(|x| x.norm_sqr()).sum();
            assert!((n - 1.0).abs() < 1e-10);
            let img = m.matvec(v);
            assert!(img.iter().map(|x| x.norm()).fold(0.0, f64::max) < 1e-10);
        }
    }

    #[test]
    fn commutant_of_irreducible_pair_is_scalars() {
        // The 2x2 Pauli-like pair generates an irreducible family.
        let mut x = CMat::zeros(2, 2);
        x[(0, 1)] = c(1.0, 0.0);
        x[(1, 0)] = c(1.0, 0.0);
        let mut z = CMat::zeros(2, 2);
        z[(0, 0)] = c(1.0, 0.0);
        z[(1, 1)] = c(-1.0, 0.0);
        assert_eq!(commutant_dimension(&[x.clone(), z.clone()], RANK_REL_TOL), 1);
        // A single diagonal matrix with distinct eigenvalues commutes exactly
        // with the diagonals.
        assert_eq!(commutant_dimension(&[z], RANK_REL_TOL), 2);
    }

    #[test]
    fn kron_dimensions_and_values() {
        let a = CMat::from_fn(2, 2, |i, j| c((2 * i + j) as f64, 0.0));
        let b = CMat::identity(3);
        let k = a.kron(&b);
        assert_eq!((k.rows, k.cols), (6, 6));
        assert_eq!(k[(0, 3)], a[(0, 1)]);
        assert_eq!(k[(4, 4)], a[(1, 1)]);
    }

    #[test]
    fn operator_norm_bounds_frobenius() {
        let m = CMat::from_fn(3, 3, |i, j| c((i * 3 + j) as f64 * 0.1, 0.05));
        let op = m.operator_norm();
        let fr = m.frobenius_norm();
        assert!(op <= fr + 1e-12);
        assert!(op >= fr / 3.0_f64.sqrt() - 1e-12);
    }
}
