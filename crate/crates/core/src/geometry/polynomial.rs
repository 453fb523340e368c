use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Polynomial in `q` with integer coefficients, lowest degree first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPolynomial(Vec<i64>);

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial(coeffs)
    }

    pub fn zero() -> Self {
        IntPolynomial(Vec::new())
    }

    pub fn one() -> Self {
        IntPolynomial(vec![1])
    }

    pub fn monomial(c: i64, d: usize) -> Self {
        let mut v = vec![0; d + 1];
        v[d] = c;
        IntPolynomial::new(v)
    }

    /// `1 + c·q^d`.
    pub fn binomial(c: i64, d: usize) -> Self {
        &IntPolynomial::one() + &IntPolynomial::monomial(c, d)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, d: usize) -> i64 {
        self.0.get(d).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, q: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, &c| acc * q + c)
    }

    pub fn is_palindromic(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// Exact division; the divisor's leading coefficient must be `±1` or
    /// divide every intermediate leading term.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Result<IntPolynomial> {
        let dd = divisor.degree().ok_or(Error::NonExactDivision)?;
        let lead = divisor.0[dd];
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return if self.is_zero() { Ok(IntPolynomial::zero()) } else { Err(Error::NonExactDivision) };
        }
        let mut quot = vec![0; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd];
            if c % lead != 0 {
                return Err(Error::NonExactDivision);
            }
            let f = c / lead;
            quot[k] = f;
            for (j, &dc) in divisor.0.iter().enumerate() {
                rem[k + j] -= f * dc;
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(Error::NonExactDivision);
        }
        Ok(IntPolynomial::new(quot))
    }

    pub fn product(factors: impl IntoIterator<Item = IntPolynomial>) -> IntPolynomial {
        factors.into_iter().fold(IntPolynomial::one(), |acc, f| &acc * &f)
    }

    /// Gaussian binomial `[n choose k]` in the variable `q^step`.
    pub fn gaussian_binomial(n: usize, k: usize, step: usize) -> IntPolynomial {
        if k > n {
            return IntPolynomial::zero();
        }
        let num = IntPolynomial::product((n - k + 1..=n).map(|i| IntPolynomial::binomial(-1, i * step)));
        let den = IntPolynomial::product((1..=k).map(|i| IntPolynomial::binomial(-1, i * step)));
        num.div_exact(&den).expect("gaussian binomials are polynomials")
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.0.len().max(rhs.0.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.0.len().max(rhs.0.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut v = vec![0; self.0.len() + rhs.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPolynomial::new(v)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            if !first {
                f.write_str(" ")?;
            }
            let sep = if first { "" } else { " " };
            let a = c.abs();
            let body = match (d, a) {
                (0, _) => a.to_string(),
                (1, 1) => "q".into(),
                (1, _) => format!("{a}q"),
                (_, 1) => format!("q^{d}"),
                _ => format!("{a}q^{d}"),
            };
            if sign.is_empty() {
                write!(f, "{body}")?;
            } else {
                write!(f, "{sign}{sep}{body}")?;
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let p = IntPolynomial::new(vec![1, 0, 1]);
        assert_eq!(p.to_string(), "1 + q^2");
        assert_eq!((&p * &p).coeffs(), &[1, 0, 2, 0, 1]);
        assert_eq!(IntPolynomial::new(vec![0, -2, 0, 0]).to_string(), "-2q");
        let q = (&p * &IntPolynomial::binomial(-1, 3)).div_exact(&p).unwrap();
        assert_eq!(q, IntPolynomial::binomial(-1, 3));
        assert!(p.div_exact(&IntPolynomial::binomial(-1, 1)).is_err());
    }

    #[test]
    fn gaussian() {
        let g = IntPolynomial::gaussian_binomial(4, 2, 1);
        assert_eq!(g.coeffs(), &[1, 1, 2, 1, 1]);
        assert_eq!(IntPolynomial::gaussian_binomial(6, 3, 1).eval(1), 20);
    }
}
