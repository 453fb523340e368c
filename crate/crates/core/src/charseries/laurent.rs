use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// A Laurent polynomial in `t` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LaurentPoly(BTreeMap<i64, i64>);

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly(BTreeMap::new())
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c·t^d`.
    pub fn monomial(c: i64, d: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(c, d);
        p
    }

    /// `t^lo + t^(lo+step) + … + t^hi`.
    pub fn progression(lo: i64, hi: i64, step: i64) -> Self {
        let mut p = Self::zero();
        let mut d = lo;
        while d <= hi {
            p.add_term(1, d);
            d += step;
        }
        p
    }

    pub fn add_term(&mut self, c: i64, d: i64) {
        if c == 0 {
            return;
        }
        let e = self.0.entry(d).or_insert(0);
        *e += c;
        if *e == 0 {
            self.0.remove(&d);
        }
    }

    pub fn coeff(&self, d: i64) -> i64 {
        self.0.get(&d).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.0.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.0.keys().next_back().copied()
    }

    /// Nonzero `(degree, coefficient)` pairs in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.0.iter().map(|(&d, &c)| (d, c))
    }

    /// Multiplies by `t^s`.
    pub fn shift(&self, s: i64) -> Self {
        LaurentPoly(self.0.iter().map(|(d, c)| (d + s, *c)).collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        LaurentPoly(self.0.iter().map(|(d, c)| (*d, c * k)).collect())
    }

    /// Substitutes `t ↦ t⁻¹`.
    pub fn invert(&self) -> Self {
        LaurentPoly(self.0.iter().map(|(d, c)| (-d, *c)).collect())
    }

    /// Reduces exponents modulo `period` into `0..period`.
    pub fn fold(&self, period: i64) -> Self {
        let mut p = Self::zero();
        for (d, c) in self.terms() {
            p.add_term(c, d.rem_euclid(period));
        }
        p
    }

    pub fn all_nonnegative(&self) -> bool {
        self.0.values().all(|&c| c >= 0)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (d, c) in rhs.terms() {
            self.add_term(c, d);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &-rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, x) in self.terms() {
            for (b, y) in rhs.terms() {
                out.add_term(x * y, a + b);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else if i > 0 { "+" } else { "" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else {
                write!(f, "{sign}")?;
            }
            let a = c.abs();
            match (a, d) {
                (_, 0) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "t^{d}")?,
                (_, 1) => write!(f, "{a}t")?,
                _ => write!(f, "{a}t^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = LaurentPoly::progression(-2, 2, 2);
        let b = LaurentPoly::progression(-1, 1, 2);
        let p = &a * &b;
        assert_eq!(p.coeff(-3), 1);
        assert_eq!(p.coeff(1), 2);
        assert_eq!(p.coeff(0), 0);
        assert!((&p - &p).is_zero());
        assert_eq!(p.shift(-7).min_degree(), Some(-10));
        assert_eq!(p.invert(), p);
        assert_eq!(LaurentPoly::monomial(3, -5).fold(4).coeff(3), 3);
        assert_eq!(format!("{}", &LaurentPoly::monomial(-1, -7) + &LaurentPoly::monomial(2, 1)), "-t^-7 + 2t");
    }
}
