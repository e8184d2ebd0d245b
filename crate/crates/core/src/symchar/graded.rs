use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A finitely supported polynomial in `q` with nonnegative coefficients.
///
/// Zero coefficients are never stored. JSON form is an object from decimal
/// degree strings to coefficients, e.g. `{"0":1,"2":1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GradedDim(BTreeMap<i64, u64>);

impl GradedDim {
    pub fn zero() -> Self {
        GradedDim(BTreeMap::new())
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn constant(c: u64) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(deg: i64, c: u64) -> Self {
        let mut m = BTreeMap::new();
        if c != 0 {
            m.insert(deg, c);
        }
        GradedDim(m)
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, u64)>) -> Self {
        let mut g = Self::zero();
        for (d, c) in pairs {
            g.add_term(d, c);
        }
        g
    }

    /// Coefficient list for degrees `0, 1, ..., top`.
    pub fn from_coeffs(coeffs: &[u64]) -> Self {
        Self::from_pairs(coeffs.iter().enumerate().map(|(k, &c)| (k as i64, c)))
    }

    pub fn add_term(&mut self, deg: i64, c: u64) {
        if c != 0 {
            *self.0.entry(deg).or_insert(0) += c;
        }
    }

    pub fn coeff(&self, deg: i64) -> u64 {
        self.0.get(&deg).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.0.iter().map(|(&d, &c)| (d, c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Ungraded dimension (value at `q = 1`).
    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.0.keys().next().copied()
    }

    pub fn top_degree(&self) -> Option<i64> {
        self.0.keys().next_back().copied()
    }

    pub fn add(&self, other: &GradedDim) -> GradedDim {
        let mut out = self.clone();
        for (d, c) in other.terms() {
            out.add_term(d, c);
        }
        out
    }

    pub fn mul(&self, other: &GradedDim) -> GradedDim {
        let mut out = GradedDim::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                out.add_term(a + b, x * y);
            }
        }
        out
    }

    pub fn scale(&self, c: u64) -> GradedDim {
        GradedDim::from_pairs(self.terms().map(|(d, x)| (d, x * c)))
    }

    pub fn shift(&self, by: i64) -> GradedDim {
        GradedDim(self.0.iter().map(|(&d, &c)| (d + by, c)).collect())
    }

    /// Quotient `self / other` when it exists with nonnegative coefficients.
    pub fn div_exact(&self, other: &GradedDim) -> Option<GradedDim> {
        let (lo, lead) = other.terms().next()?;
        let mut rem: BTreeMap<i64, i128> =
            self.0.iter().map(|(&d, &c)| (d, c as i128)).collect();
        let mut q = GradedDim::zero();
        while let Some((&d, &c)) = rem.iter().find(|(_, &c)| c != 0) {
            if c < 0 || c % lead as i128 != 0 {
                return None;
            }
            let k = c / lead as i128;
            let deg = d - lo;
            q.add_term(deg, k as u64);
            for (b, y) in other.terms() {
                *rem.entry(deg + b).or_insert(0) -= k * y as i128;
            }
            rem.retain(|_, c| *c != 0);
        }
        Some(q)
    }

    /// `coeff(s) == coeff(center - s)` for all `s`.
    pub fn is_palindromic_about(&self, center: i64) -> bool {
        self.terms().all(|(d, c)| self.coeff(center - d) == c)
    }

    /// Dense coefficients for degrees `0..=top` (requires nonnegative support).
    pub fn dense(&self) -> Vec<u64> {
        let top = self.top_degree().unwrap_or(-1).max(-1);
        (0..=top).map(|d| self.coeff(d)).collect()
    }
}

impl fmt::Display for GradedDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (d, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            match (d, c) {
                (0, c) => write!(f, "{c}")?,
                (d, 1) => write!(f, "q^{d}")?,
                (d, c) => write!(f, "{c}q^{d}")?,
            }
        }
        Ok(())
    }
}

/// Degrees of a homogeneous basis of a graded vector space.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedAlphabet {
    degrees: Vec<i64>,
}

impl GradedAlphabet {
    pub fn new(mut degrees: Vec<i64>) -> Self {
        degrees.sort_unstable();
        GradedAlphabet { degrees }
    }

    /// `n` letters of degree zero (the ungraded space `k^n`).
    pub fn trivial(n: usize) -> Self {
        GradedAlphabet {
            degrees: vec![0; n],
        }
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Alphabet of `k^n ⊗ self`.
    pub fn copies(&self, n: usize) -> Self {
        let mut d = Vec::with_capacity(self.len() * n);
        for _ in 0..n {
            d.extend_from_slice(&self.degrees);
        }
        Self::new(d)
    }

    /// Graded dual shifted by `by`: every degree `e` becomes `by - e`.
    pub fn dual_shifted(&self, by: i64) -> Self {
        Self::new(self.degrees.iter().map(|e| by - e).collect())
    }

    pub fn graded_dim(&self) -> GradedDim {
        GradedDim::from_pairs(self.degrees.iter().map(|&e| (e, 1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = GradedDim::from_coeffs(&[1, 0, 1]);
        assert_eq!(a.mul(&a), GradedDim::from_coeffs(&[1, 0, 2, 0, 1]));
        assert_eq!(a.add(&a), a.scale(2));
        assert_eq!(a.shift(2).coeff(4), 1);
        assert_eq!(a.mul(&a).div_exact(&a), Some(a.clone()));
        assert_eq!(GradedDim::from_coeffs(&[1, 1]).div_exact(&a), None);
        assert!(a.is_palindromic_about(2));
        assert!(!GradedDim::from_coeffs(&[1, 2]).is_palindromic_about(1));
    }

    #[test]
    fn json_shape() {
        let a = GradedDim::from_pairs([(2, 1), (0, 1), (10, 3)]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"0":1,"2":1,"10":3}"#);
        let back: GradedDim = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn display() {
        assert_eq!(GradedDim::from_coeffs(&[1, 0, 2]).to_string(), "1 + 2q^2");
        assert_eq!(GradedDim::zero().to_string(), "0");
    }
}
