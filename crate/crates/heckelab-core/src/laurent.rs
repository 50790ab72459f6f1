//! Exact sparse Laurent polynomials in one variable `v` with rational
//! coefficients: the scalar ring of every algebra in this crate.
//!
//! Invariants:
//! - no stored coefficient is zero
//! - terms are keyed by exponent in a sorted map, so equality is structural
//!   and printing is deterministic

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::CoreError;

/// Exact rational coefficient.
pub type Coeff = BigRational;

/// A Laurent polynomial `sum c_k v^k` with `c_k` rational, stored sparsely.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Coeff>,
}

fn coeff_int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        LaurentPoly::monomial(0, coeff_int(1))
    }

    /// The variable `v`.
    pub fn var() -> Self {
        LaurentPoly::monomial(1, coeff_int(1))
    }

    /// `c * v^k`, dropping the term when `c = 0`.
    pub fn monomial(exponent: i64, coefficient: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(exponent, coefficient);
        }
        LaurentPoly { terms }
    }

    /// `n * v^k` with an integer coefficient.
    pub fn int_monomial(exponent: i64, n: i64) -> Self {
        LaurentPoly::monomial(exponent, coeff_int(n))
    }

    /// The constant polynomial `n`.
    pub fn constant(n: i64) -> Self {
        LaurentPoly::int_monomial(0, n)
    }

    /// `v^k`.
    pub fn v_pow(exponent: i64) -> Self {
        LaurentPoly::int_monomial(exponent, 1)
    }

    /// Builds from (exponent, coefficient) pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (i64, Coeff)>>(iter: I) -> Self {
        let mut out = LaurentPoly::zero();
        for (e, c) in iter {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, exponent: i64, coefficient: Coeff) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert_with(Coeff::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&0)
                .map(|c| *c == coeff_int(1))
                .unwrap_or(false)
    }

    /// Coefficient of `v^k` (zero if absent).
    pub fn coeff(&self, exponent: i64) -> Coeff {
        self.terms.get(&exponent).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Coeff)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Smallest and largest exponent, if nonzero.
    pub fn exponent_range(&self) -> Option<(i64, i64)> {
        let min = self.terms.keys().next()?;
        let max = self.terms.keys().next_back()?;
        Some((*min, *max))
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, k)| (e, k * c)).collect(),
        }
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = LaurentPoly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Evaluates at a nonzero complex point in double precision.
    pub fn eval(&self, z: Complex64) -> Result<Complex64, CoreError> {
        if z.norm() == 0.0 {
            return Err(CoreError::Domain("evaluation point must be nonzero".into()));
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in self.terms.iter() {
            let cf = c.to_f64().ok_or_else(|| {
                CoreError::Domain("coefficient does not fit in f64".into())
            })?;
            acc += z.powi(*e as i32) * cf;
        }
        Ok(acc)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in rhs.terms.iter() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in rhs.terms.iter() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in self.terms.iter() {
            for (&e2, c2) in rhs.terms.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

fn fmt_coeff_abs(c: &Coeff) -> String {
    let a = c.abs();
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

impl fmt::Display for LaurentPoly {
    /// Signed monomials `c*v^k` joined by `" + "` / `" - "`, exponent 0
    /// omitted, unit coefficients omitted: `v^-2 - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let one = coeff_int(1);
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = fmt_coeff_abs(c);
            let unit = c.abs() == one;
            match (*e, unit) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "v")?,
                (1, false) => write!(f, "{abs}*v")?,
                (k, true) => write!(f, "v^{k}")?,
                (k, false) => write!(f, "{abs}*v^{k}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = CoreError;

    /// Parses the display grammar: signed monomials `c`, `v^k`, `c*v^k`,
    /// with rational `c` as `a` or `a/b`.
    fn from_str(s: &str) -> Result<Self, CoreError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(CoreError::Parse("empty polynomial".into()));
        }
        let mut out = LaurentPoly::zero();
        for (sign, token) in split_signed_terms(s)? {
            let (exp, coeff) = parse_monomial(token)?;
            out.add_term(exp, if sign { -coeff } else { coeff });
        }
        Ok(out)
    }
}

/// Splits on top-level `+`/`-`, returning (is_negative, term) pairs.
/// A `-` directly after `^`, `*`, or `/` belongs to the token.
fn split_signed_terms(s: &str) -> Result<Vec<(bool, &str)>, CoreError> {
    let bytes = s.as_bytes();
    let mut parts = Vec::new();
    let mut start = 0usize;
    let mut sign = false;
    let mut i = 0usize;
    let mut seen_content = false;
    while i < bytes.len() {
        let ch = bytes[i] as char;
        if (ch == '+' || ch == '-') && !seen_content {
            if ch == '-' {
                sign = !sign;
            }
            start = i + 1;
        } else if ch == '+' || ch == '-' {
            let prev = bytes[..i]
                .iter()
                .rev()
                .map(|&b| b as char)
                .find(|c| !c.is_whitespace());
            let binds = matches!(prev, Some('^') | Some('*') | Some('/'));
            if !binds {
                parts.push((sign, s[start..i].trim()));
                sign = ch == '-';
                start = i + 1;
                seen_content = false;
                i += 1;
                continue;
            }
        } else if !ch.is_whitespace() {
            seen_content = true;
        }
        i += 1;
    }
    if start <= s.len() {
        let last = s[start..].trim();
        if last.is_empty() {
            return Err(CoreError::Parse(format!("dangling sign in '{s}'")));
        }
        parts.push((sign, last));
    }
    Ok(parts)
}

fn parse_rational(s: &str) -> Result<Coeff, CoreError> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n
            .trim()
            .parse()
            .map_err(|_| CoreError::Parse(format!("bad numerator '{n}'")))?;
        let d: BigInt = d
            .trim()
            .parse()
            .map_err(|_| CoreError::Parse(format!("bad denominator '{d}'")))?;
        if d.is_zero() {
            return Err(CoreError::Parse("zero denominator".into()));
        }
        Ok(BigRational::new(n, d))
    } else {
        let n: BigInt = s
            .parse()
            .map_err(|_| CoreError::Parse(format!("bad integer '{s}'")))?;
        Ok(BigRational::from_integer(n))
    }
}

fn parse_monomial(s: &str) -> Result<(i64, Coeff), CoreError> {
    let s = s.trim();
    // forms: "c", "v", "v^k", "c*v", "c*v^k"
    let (coeff_part, var_part) = match s.split_once('*') {
        Some((c, v)) => (Some(c.trim()), v.trim()),
        None => {
            if s.starts_with('v') {
                (None, s)
            } else {
                return Ok((0, parse_rational(s)?));
            }
        }
    };
    if !var_part.starts_with('v') {
        return Err(CoreError::Parse(format!("expected variable in '{s}'")));
    }
    let exp_part = &var_part[1..];
    let exponent: i64 = if exp_part.is_empty() {
        1
    } else if let Some(k) = exp_part.strip_prefix('^') {
        k.trim()
            .parse()
            .map_err(|_| CoreError::Parse(format!("bad exponent '{k}'")))?
    } else {
        return Err(CoreError::Parse(format!("bad monomial '{s}'")));
    };
    let coefficient = match coeff_part {
        Some(c) => parse_rational(c)?,
        None => coeff_int(1),
    };
    Ok((exponent, coefficient))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs.iter().map(|&(e, c)| (e, coeff_int(c))))
    }

    #[test]
    fn add_cancels() {
        // (v^-2 - 1) + 1 = v^-2
        let a = lp(&[(-2, 1), (0, -1)]);
        let b = lp(&[(0, 1)]);
        assert_eq!(&a + &b, lp(&[(-2, 1)]));
    }

    #[test]
    fn add_identity() {
        let p = lp(&[(3, 2), (-1, 5)]);
        assert_eq!(&p + &LaurentPoly::zero(), p);
    }

    #[test]
    fn add_symmetric_parts() {
        // (v + v^-1) + (v - v^-1) = 2v
        let a = lp(&[(1, 1), (-1, 1)]);
        let b = lp(&[(1, 1), (-1, -1)]);
        assert_eq!(&a + &b, lp(&[(1, 2)]));
    }

    #[test]
    fn mul_difference_of_squares() {
        // (v + v^-1)(v - v^-1) = v^2 - v^-2
        let a = lp(&[(1, 1), (-1, 1)]);
        let b = lp(&[(1, 1), (-1, -1)]);
        assert_eq!(&a * &b, lp(&[(2, 1), (-2, -1)]));
    }

    #[test]
    fn mul_identity() {
        let p = lp(&[(4, 7), (0, -3), (-5, 1)]);
        assert_eq!(&LaurentPoly::one() * &p, p);
    }

    #[test]
    fn square_expansion() {
        // (v^-2 - 1)^2 = v^-4 - 2 v^-2 + 1
        let p = lp(&[(-2, 1), (0, -1)]);
        assert_eq!(p.pow(2), lp(&[(-4, 1), (-2, -2), (0, 1)]));
    }

    #[test]
    fn eval_points() {
        let p = lp(&[(-2, 1), (0, -1)]);
        let at_1 = p.eval(Complex64::new(1.0, 0.0)).unwrap();
        assert!(at_1.norm() < 1e-14);

        let v = LaurentPoly::var();
        let at_half = v.eval(Complex64::new(0.5, 0.0)).unwrap();
        assert!((at_half - Complex64::new(0.5, 0.0)).norm() < 1e-14);

        // v^2 - v^-2 at z = i: i^2 = i^-2, so the value is 0
        let q = lp(&[(2, 1), (-2, -1)]);
        let at_i = q.eval(Complex64::new(0.0, 1.0)).unwrap();
        assert!(at_i.norm() < 1e-14);
    }

    #[test]
    fn eval_rejects_zero() {
        let p = LaurentPoly::var();
        assert!(matches!(
            p.eval(Complex64::new(0.0, 0.0)),
            Err(CoreError::Domain(_))
        ));
    }

    #[test]
    fn display_matches_grammar() {
        assert_eq!(lp(&[(-2, 1), (0, -1)]).to_string(), "v^-2 - 1");
        assert_eq!(lp(&[(1, 2)]).to_string(), "2*v");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(lp(&[(0, -1), (2, 1)]).to_string(), "-1 + v^2");
        let half = LaurentPoly::monomial(3, BigRational::new(1.into(), 2.into()));
        assert_eq!(half.to_string(), "1/2*v^3");
    }

    #[test]
    fn parse_display_examples() {
        let p: LaurentPoly = "v^-2 - 1".parse().unwrap();
        assert_eq!(p, lp(&[(-2, 1), (0, -1)]));
        let q: LaurentPoly = "-3/2*v^4 + v - 7".parse().unwrap();
        assert_eq!(
            q,
            LaurentPoly::from_terms([
                (4, BigRational::new((-3).into(), 2.into())),
                (1, coeff_int(1)),
                (0, coeff_int(-7)),
            ])
        );
        let r: LaurentPoly = "v^-1".parse().unwrap();
        assert_eq!(r, lp(&[(-1, 1)]));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec(((-8i64..=8), (-9i64..=9)), 0..6)
            .prop_map(|pairs| lp(&pairs.iter().map(|&(e, c)| (e, c)).collect::<Vec<_>>()))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn eval_is_ring_hom(a in arb_poly(), b in arb_poly(), re in -2.0f64..2.0, im in -2.0f64..2.0) {
            let z = Complex64::new(re, im);
            prop_assume!(z.norm() > 0.3);
            let lhs = (&a * &b).eval(z).unwrap();
            let rhs = a.eval(z).unwrap() * b.eval(z).unwrap();
            let scale = lhs.norm().max(rhs.norm()).max(1.0);
            prop_assert!((lhs - rhs).norm() <= 1e-12 * scale);
        }

        #[test]
        fn display_parse_roundtrip(a in arb_poly()) {
            let s = a.to_string();
            let back: LaurentPoly = s.parse().unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
