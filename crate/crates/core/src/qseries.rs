//! Truncated power series in q with Laurent-polynomial coefficients in z
//! and an auxiliary integer grading t, for refined character computations.
//!
//! A series is a finite sum of terms c(z) · q^a t^b with 0 <= a <= trunc;
//! multiplication drops q-powers beyond the truncation order. The grading
//! variable t is bookkeeping only: terms multiply by adding t-exponents,
//! and no truncation applies in t.

use crate::exact::Int;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Errors from series arithmetic.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("cannot combine series truncated at {left} and {right}")]
    TruncationMismatch { left: u32, right: u32 },
}

/// An integer-coefficient Laurent polynomial in one variable z.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    /// exponent -> coefficient; zero coefficients are never stored.
    coeffs: BTreeMap<i64, Int>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, Int::one())
    }

    /// c · z^e.
    pub fn monomial(exponent: i64, coeff: Int) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exponent, coeff);
        }
        LaurentPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exponent: i64) -> Int {
        self.coeffs
            .get(&exponent)
            .cloned()
            .unwrap_or_else(Int::zero)
    }

    /// Iterate over (exponent, coefficient) pairs in exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Int)> {
        self.coeffs.iter()
    }

    pub fn add_assign(&mut self, other: &LaurentPoly) {
        for (e, c) in &other.coeffs {
            let entry = self.coeffs.entry(*e).or_insert_with(Int::zero);
            *entry += c;
            if entry.is_zero() {
                self.coeffs.remove(e);
            }
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                let entry = out.coeffs.entry(e1 + e2).or_insert_with(Int::zero);
                *entry += c1 * c2;
                if entry.is_zero() {
                    out.coeffs.remove(&(e1 + e2));
                }
            }
        }
        out
    }

    /// Value at z = 1: the coefficient sum.
    pub fn eval_at_one(&self) -> Int {
        self.coeffs.values().sum()
    }

    /// True when invariant under z -> 1/z.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().all(|(e, c)| self.coeff(-e) == *c)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}·z")?,
                _ => write!(f, "{c}·z^{e}")?,
            }
        }
        Ok(())
    }
}

/// A power series in q truncated at order `trunc`, graded by an auxiliary
/// integer exponent t, with Laurent-polynomial coefficients in z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    trunc: u32,
    /// (q-exponent, t-exponent) -> coefficient; zero coefficients are never
    /// stored.
    terms: BTreeMap<(u32, u32), LaurentPoly>,
}

impl TruncatedSeries {
    pub fn zero(trunc: u32) -> Self {
        TruncatedSeries {
            trunc,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(trunc: u32) -> Self {
        let mut s = TruncatedSeries::zero(trunc);
        s.terms.insert((0, 0), LaurentPoly::one());
        s
    }

    /// c(z) · q^a t^b, dropped if a exceeds the truncation.
    pub fn term(trunc: u32, q_exp: u32, t_exp: u32, coeff: LaurentPoly) -> Self {
        let mut s = TruncatedSeries::zero(trunc);
        if q_exp <= trunc && !coeff.is_zero() {
            s.terms.insert((q_exp, t_exp), coeff);
        }
        s
    }

    pub fn truncation(&self) -> u32 {
        self.trunc
    }

    pub fn coeff(&self, q_exp: u32, t_exp: u32) -> LaurentPoly {
        self.terms
            .get(&(q_exp, t_exp))
            .cloned()
            .unwrap_or_else(LaurentPoly::zero)
    }

    /// Number of stored (q, t) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            let entry = out.terms.entry(*k).or_insert_with(LaurentPoly::zero);
            entry.add_assign(c);
            if entry.is_zero() {
                out.terms.remove(k);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        self.check(other)?;
        let mut out = TruncatedSeries::zero(self.trunc);
        for ((q1, t1), c1) in &self.terms {
            for ((q2, t2), c2) in &other.terms {
                if q1 + q2 > self.trunc {
                    continue;
                }
                let key = (q1 + q2, t1 + t2);
                let entry = out.terms.entry(key).or_insert_with(LaurentPoly::zero);
                entry.add_assign(&c1.mul(c2));
                if entry.is_zero() {
                    out.terms.remove(&key);
                }
            }
        }
        Ok(out)
    }

    fn check(&self, other: &TruncatedSeries) -> Result<(), SeriesError> {
        if self.trunc != other.trunc {
            return Err(SeriesError::TruncationMismatch {
                left: self.trunc,
                right: other.trunc,
            });
        }
        Ok(())
    }

    /// Keep only the terms whose (q-exponent, t-exponent) satisfies the
    /// predicate.
    pub fn extract(&self, mut pred: impl FnMut(u32, u32) -> bool) -> TruncatedSeries {
        TruncatedSeries {
            trunc: self.trunc,
            terms: self
                .terms
                .iter()
                .filter(|((q, t), _)| pred(*q, *t))
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// Set z = 1, summing each coefficient polynomial.
    pub fn specialize_z_to_one(&self) -> BTreeMap<(u32, u32), Int> {
        self.terms
            .iter()
            .map(|(k, c)| (*k, c.eval_at_one()))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// Sum over t of the q^a coefficients at z = 1, as a dense vector
    /// indexed by a.
    pub fn q_profile(&self) -> Vec<Int> {
        let mut out = vec![Int::zero(); self.trunc as usize + 1];
        for ((q, _), c) in &self.terms {
            out[*q as usize] += c.eval_at_one();
        }
        out
    }
}

/// 1 / prod_{j=1}^{n} (1 - q^j), truncated: the generating function of
/// partitions into parts of size at most n.
pub fn inv_pochhammer(n: u32, trunc: u32) -> TruncatedSeries {
    let size = trunc as usize + 1;
    let mut counts = vec![Int::zero(); size];
    counts[0] = Int::one();
    for j in 1..=n.min(trunc) as usize {
        for idx in j..size {
            let (lo, hi) = counts.split_at_mut(idx);
            hi[0] += &lo[idx - j];
        }
    }
    let mut s = TruncatedSeries::zero(trunc);
    for (a, c) in counts.into_iter().enumerate() {
        if !c.is_zero() {
            s.terms.insert((a as u32, 0), LaurentPoly::monomial(0, c));
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|x| Int::from(*x)).collect()
    }

    #[test]
    fn partitions_into_bounded_parts() {
        // Parts of size 1 only: exactly one partition of each n.
        assert_eq!(inv_pochhammer(1, 3).q_profile(), ints(&[1, 1, 1, 1]));
        // Parts of size at most 2: 1, 1, 2, 2, 3, 3, ...
        assert_eq!(inv_pochhammer(2, 5).q_profile(), ints(&[1, 1, 2, 2, 3, 3]));
        // Parts of size at most 3.
        assert_eq!(
            inv_pochhammer(3, 6).q_profile(),
            ints(&[1, 1, 2, 3, 4, 5, 7])
        );
    }

    #[test]
    fn pochhammer_inverse_identity() {
        // (1 - q)(1 - q^2) · inv_pochhammer(2) = 1 up to truncation.
        let trunc = 8;
        let one = TruncatedSeries::one(trunc);
        let q = |e| TruncatedSeries::term(trunc, e, 0, LaurentPoly::one());
        let minus_q =
            |e: u32| TruncatedSeries::term(trunc, e, 0, LaurentPoly::monomial(0, Int::from(-1)));
        let factor1 = one.add(&minus_q(1)).unwrap();
        let factor2 = one.add(&minus_q(2)).unwrap();
        let product = factor1
            .mul(&factor2)
            .unwrap()
            .mul(&inv_pochhammer(2, trunc))
            .unwrap();
        assert_eq!(product, TruncatedSeries::one(trunc));
        // Sanity for the helper itself.
        assert_eq!(q(1).coeff(1, 0), LaurentPoly::one());
    }

    #[test]
    fn truncation_mismatch_is_an_error() {
        let a = TruncatedSeries::one(4);
        let b = TruncatedSeries::one(5);
        assert_eq!(
            a.mul(&b).unwrap_err(),
            SeriesError::TruncationMismatch { left: 4, right: 5 }
        );
        assert_eq!(
            a.add(&b).unwrap_err(),
            SeriesError::TruncationMismatch { left: 4, right: 5 }
        );
    }

    #[test]
    fn laurent_square_of_z_plus_zinv() {
        // (z + 1/z)^2 = z^2 + 2 + z^-2.
        let mut zp = LaurentPoly::monomial(1, Int::one());
        zp.add_assign(&LaurentPoly::monomial(-1, Int::one()));
        let sq = zp.mul(&zp);
        assert_eq!(sq.coeff(2), Int::from(1));
        assert_eq!(sq.coeff(0), Int::from(2));
        assert_eq!(sq.coeff(-2), Int::from(1));
        assert_eq!(sq.eval_at_one(), Int::from(4));
        assert!(sq.is_palindromic());
        assert!(!LaurentPoly::monomial(1, Int::one()).is_palindromic());
    }

    #[test]
    fn extraction_and_specialization() {
        let trunc = 6;
        let mut s = TruncatedSeries::zero(trunc);
        s = s
            .add(&TruncatedSeries::term(
                trunc,
                2,
                2,
                LaurentPoly::monomial(1, Int::from(3)),
            ))
            .unwrap();
        s = s
            .add(&TruncatedSeries::term(
                trunc,
                3,
                1,
                LaurentPoly::monomial(0, Int::from(5)),
            ))
            .unwrap();
        let diagonal = s.extract(|q, t| q == t);
        assert_eq!(diagonal.term_count(), 1);
        assert_eq!(diagonal.coeff(2, 2), LaurentPoly::monomial(1, Int::from(3)));
        let grid = s.specialize_z_to_one();
        assert_eq!(grid.get(&(2, 2)), Some(&Int::from(3)));
        assert_eq!(grid.get(&(3, 1)), Some(&Int::from(5)));
        // Terms past the truncation are silently dropped on construction.
        let dropped = TruncatedSeries::term(trunc, 7, 0, LaurentPoly::one());
        assert_eq!(dropped, TruncatedSeries::zero(trunc));
    }
}
