//! Bernstein-presentation elements realized inside the Coxeter presentation
//! of the affine Hecke algebra.
//!
//! For a dominant (weakly decreasing) integer vector `lambda` the lattice
//! element is `X^lambda := (v^len(t) T_t)^-1` where `t` is the translation
//! `i -> i + r lambda_i`; a general `lambda` is split as `mu - nu` with both
//! parts dominant. On top of the `X^lambda` monomials this module verifies
//! the Bernstein relations as exact identities of Hecke elements:
//! commutativity of the `X`'s, the cross relation
//! `T_i X_i T_i = v^-2 X_{i+1}`, and `X_j T_i = T_i X_j` for `j` outside
//! `{i, i+1}`.
//!
//! Translations with nonzero coordinate sum lie outside the affine Coxeter
//! group proper; they are handled through the rotation elements `pi^k` (see
//! [`crate::coxeter::AffinePermutation`]).

use crate::coxeter::{AffinePermutation, Permutation};
use crate::error::CoreError;
use crate::hecke::HeckeElement;
use crate::laurent::LaurentPoly;

/// Elements of the affine Hecke algebra used throughout this module.
pub type AffineHecke = HeckeElement<AffinePermutation>;

/// An integer weight vector, the exponent of an `X` monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Coordinatewise sum.
    pub fn add(&self, other: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> WeightVector {
        WeightVector(self.0.iter().map(|a| -a).collect())
    }

    /// Splits `lambda = mu - nu` with both parts dominant and `nu` pointwise
    /// minimal: `nu_i = nu_(i+1) + max(0, lambda_(i+1) - lambda_i)` from the
    /// right.
    pub fn dominant_split(&self) -> (WeightVector, WeightVector) {
        let r = self.rank();
        let mut nu = vec![0i64; r];
        for i in (0..r.saturating_sub(1)).rev() {
            nu[i] = nu[i + 1] + (self.0[i + 1] - self.0[i]).max(0);
        }
        let mu = WeightVector(self.0.iter().zip(&nu).map(|(l, n)| l + n).collect());
        (mu, WeightVector(nu))
    }
}

/// `v^len(w) T_w`.
pub fn t_tilde(w: &AffinePermutation) -> AffineHecke {
    AffineHecke::basis(w.clone()).scale(&LaurentPoly::v_pow(w.length() as i64))
}

/// The translation permutation of a weight vector.
pub fn translation(lambda: &WeightVector) -> Result<AffinePermutation, CoreError> {
    AffinePermutation::translation(&lambda.0)
}

fn x_dominant(lambda: &WeightVector, cutoff: Option<usize>) -> Result<AffineHecke, CoreError> {
    debug_assert!(lambda.is_dominant());
    let t = translation(lambda)?;
    if let Some(cut) = cutoff {
        let len = t.length();
        if len > cut {
            return Err(CoreError::CutoffExceeded { length: len, cutoff: cut });
        }
    }
    // X^lambda = (v^len T_t)^-1 = v^-len T_t^-1.
    let inv = AffineHecke::invert_basis(&t)?;
    Ok(inv.scale(&LaurentPoly::v_pow(-(t.length() as i64))))
}

/// The monomial `X^lambda` inside the Coxeter realization.
pub fn x_monomial(lambda: &WeightVector, cutoff: Option<usize>) -> Result<AffineHecke, CoreError> {
    let r = lambda.rank();
    if r < 2 {
        return Err(CoreError::Domain("weight vector needs rank >= 2".into()));
    }
    if lambda.is_dominant() {
        return x_dominant(lambda, cutoff);
    }
    let (mu, nu) = lambda.dominant_split();
    // X^lambda = X^mu (X^nu)^-1, and (X^nu)^-1 = v^len(t_nu) T_t_nu.
    let x_mu = x_dominant(&mu, cutoff)?;
    let t_nu = translation(&nu)?;
    if let Some(cut) = cutoff {
        let len = t_nu.length();
        if len > cut {
            return Err(CoreError::CutoffExceeded { length: len, cutoff: cut });
        }
    }
    let x_nu_inv = t_tilde(&t_nu);
    x_mu.mul_with_cutoff(&x_nu_inv, cutoff)
}

/// `X_i = X^(e_i)`.
pub fn x_generator(i: usize, rank: usize, cutoff: Option<usize>) -> Result<AffineHecke, CoreError> {
    if i < 1 || i > rank {
        return Err(CoreError::IndexOutOfRange { index: i, bound: rank });
    }
    let mut e = vec![0i64; rank];
    e[i - 1] = 1;
    x_monomial(&WeightVector(e), cutoff)
}

/// One verified Bernstein relation: the two sides as exact Hecke elements.
#[derive(Clone, Debug)]
pub struct BernsteinReport {
    pub id: String,
    pub description: String,
    pub lhs: AffineHecke,
    pub rhs: AffineHecke,
    pub equal: bool,
}

fn report(id: String, description: String, lhs: AffineHecke, rhs: AffineHecke) -> BernsteinReport {
    let equal = lhs == rhs;
    BernsteinReport { id, description, lhs, rhs, equal }
}

/// Verifies the Bernstein relation table as exact identities inside the
/// Coxeter realization: generator inverses, the quadratic relation, braid
/// and commutation relations among the `T_i` (the braid relation in its
/// standard form `T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}`), `X`-commutativity
/// and invertibility, the cross relation `T_i X_i T_i = v^-2 X_{i+1}`, and
/// `X_j T_i = T_i X_j` for `j` outside `{i, i+1}`.
pub fn check_bernstein_relations(
    rank: usize,
    cutoff: usize,
) -> Result<Vec<BernsteinReport>, CoreError> {
    if rank < 2 {
        return Err(CoreError::Domain("Bernstein check needs rank >= 2".into()));
    }
    let cut = Some(cutoff);
    let one = AffineHecke::one(rank);
    let q = crate::hecke::q_poly();
    let mut reports = Vec::new();

    let t: Vec<AffineHecke> = (1..rank)
        .map(|i| AffineHecke::generator(rank, i))
        .collect::<Result<_, _>>()?;
    let x: Vec<AffineHecke> =
        (1..=rank).map(|i| x_generator(i, rank, cut)).collect::<Result<_, _>>()?;

    for i in 1..rank {
        let ti = &t[i - 1];
        let ti_inv = crate::hecke::invert_generator::<AffinePermutation>(rank, i)?;
        reports.push(report(
            format!("inverse-T{i}"),
            format!("T_{i} T_{i}^-1 = T_{i}^-1 T_{i}"),
            ti.mul_with_cutoff(&ti_inv, cut)?,
            ti_inv.mul_with_cutoff(ti, cut)?,
        ));
        reports.push(report(
            format!("inverse-T{i}-unit"),
            format!("T_{i} T_{i}^-1 = 1"),
            ti.mul_with_cutoff(&ti_inv, cut)?,
            one.clone(),
        ));

        let quad = ti.add(&one)?.mul_with_cutoff(&ti.sub(&one.scale(&q))?, cut)?;
        reports.push(report(
            format!("quadratic-T{i}"),
            format!("(T_{i} + 1)(T_{i} - v^-2) = 0"),
            quad,
            AffineHecke::zero(rank),
        ));
    }

    for i in 1..rank.saturating_sub(1) {
        let (a, b) = (&t[i - 1], &t[i]);
        let lhs = a.mul_with_cutoff(b, cut)?.mul_with_cutoff(a, cut)?;
        let rhs = b.mul_with_cutoff(a, cut)?.mul_with_cutoff(b, cut)?;
        reports.push(report(
            format!("braid-T{i}-T{}", i + 1),
            format!(
                "T_{i} T_{} T_{i} = T_{} T_{i} T_{} (standard braid form)",
                i + 1,
                i + 1,
                i + 1
            ),
            lhs,
            rhs,
        ));
    }
    for i in 1..rank {
        for j in (i + 2)..rank {
            let lhs = t[i - 1].mul_with_cutoff(&t[j - 1], cut)?;
            let rhs = t[j - 1].mul_with_cutoff(&t[i - 1], cut)?;
            reports.push(report(
                format!("commute-T{i}-T{j}"),
                format!("T_{i} T_{j} = T_{j} T_{i} (|i-j| > 1)"),
                lhs,
                rhs,
            ));
        }
    }

    for i in 1..=rank {
        let mut e = vec![0i64; rank];
        e[i - 1] = -1;
        let x_inv = x_monomial(&WeightVector(e), cut)?;
        reports.push(report(
            format!("inverse-X{i}"),
            format!("X_{i} X_{i}^-1 = 1"),
            x[i - 1].mul_with_cutoff(&x_inv, cut)?,
            one.clone(),
        ));
    }

    for i in 1..=rank {
        for j in (i + 1)..=rank {
            let lhs = x[i - 1].mul_with_cutoff(&x[j - 1], cut)?;
            let rhs = x[j - 1].mul_with_cutoff(&x[i - 1], cut)?;
            reports.push(report(
                format!("commute-X{i}-X{j}"),
                format!("X_{i} X_{j} = X_{j} X_{i}"),
                lhs,
                rhs,
            ));
        }
    }

    for i in 1..rank {
        let lhs = t[i - 1]
            .mul_with_cutoff(&x[i - 1], cut)?
            .mul_with_cutoff(&t[i - 1], cut)?;
        let rhs = x[i].scale(&q);
        reports.push(report(
            format!("cross-T{i}X{i}T{i}"),
            format!("T_{i} X_{i} T_{i} = v^-2 X_{}", i + 1),
            lhs,
            rhs,
        ));
        for j in 1..=rank {
            if j == i || j == i + 1 {
                continue;
            }
            let lhs = x[j - 1].mul_with_cutoff(&t[i - 1], cut)?;
            let rhs = t[i - 1].mul_with_cutoff(&x[j - 1], cut)?;
            reports.push(report(
                format!("commute-X{j}-T{i}"),
                format!("X_{j} T_{i} = T_{i} X_{j} (j outside {{i, i+1}})"),
                lhs,
                rhs,
            ));
        }
    }

    Ok(reports)
}

/// Result of the lattice-homomorphism check `X^a X^b = X^(a+b)`.
#[derive(Clone, Debug)]
pub struct LatticeReport {
    pub rank: usize,
    pub radius: i64,
    pub cutoff: usize,
    pub pairs_checked: usize,
    pub failures: Vec<(Vec<i64>, Vec<i64>)>,
}

impl LatticeReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

fn box_points(rank: usize, radius: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        let mut next = Vec::new();
        for p in &out {
            for c in -radius..=radius {
                let mut q = p.clone();
                q.push(c);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Exact check of `X^a X^b = X^(a+b)` over all pairs in the coordinate box
/// `[-radius, radius]^rank`.
pub fn check_x_lattice(rank: usize, radius: i64, cutoff: usize) -> Result<LatticeReport, CoreError> {
    let points = box_points(rank, radius);
    let cut = Some(cutoff);
    let mut cache: std::collections::BTreeMap<Vec<i64>, AffineHecke> = Default::default();
    let monomial = |p: &Vec<i64>,
                        cache: &mut std::collections::BTreeMap<Vec<i64>, AffineHecke>|
     -> Result<AffineHecke, CoreError> {
        if let Some(m) = cache.get(p) {
            return Ok(m.clone());
        }
        let m = x_monomial(&WeightVector(p.clone()), cut)?;
        cache.insert(p.clone(), m.clone());
        Ok(m)
    };
    let mut failures = Vec::new();
    let mut pairs = 0usize;
    for a in &points {
        for b in &points {
            let xa = monomial(a, &mut cache)?;
            let xb = monomial(b, &mut cache)?;
            let sum: Vec<i64> = a.iter().zip(b).map(|(p, q)| p + q).collect();
            let xab = monomial(&sum, &mut cache)?;
            let prod = xa.mul_with_cutoff(&xb, cut)?;
            pairs += 1;
            if prod != xab {
                failures.push((a.clone(), b.clone()));
            }
        }
    }
    Ok(LatticeReport { rank, radius, cutoff, pairs_checked: pairs, failures })
}
