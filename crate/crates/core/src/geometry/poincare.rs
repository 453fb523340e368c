use num_bigint::BigUint;
use serde::Serialize;

use super::polynomial::IntPolynomial;
use crate::error::{Error, Result};
use crate::subexc::case_data;

/// `Π (1 − q^{2d})` over fundamental degrees `d`.
fn degree_product(degrees: impl IntoIterator<Item = u32>) -> IntPolynomial {
    IntPolynomial::product(degrees.into_iter().map(|d| IntPolynomial::binomial(-1, 2 * d as usize)))
}

/// Poincaré polynomial of `G/P` for case `m`, as the exact quotient
/// `Π_G (1 − q^{2d}) / (Π_L (1 − q^{2d}) · (1 − q²))`.
pub fn poincare_gp(m: u32) -> Result<IntPolynomial> {
    let case = case_data(m)?;
    let parabolic = case.parabolic();
    let num = degree_product(case.diagram.component_types().into_iter().flat_map(|t| t.fundamental_degrees()));
    let levi = parabolic.levi().component_types();
    let den = &degree_product(levi.into_iter().flat_map(|t| t.fundamental_degrees())) * &IntPolynomial::binomial(-1, 2);
    num.div_exact(&den)
}

/// `(1 + q^a)(1 + q^b)(1 − q^c)/(1 − q²)`.
fn closed_form(a: usize, b: Option<usize>, c: usize) -> IntPolynomial {
    let mut p = &IntPolynomial::binomial(1, a) * &IntPolynomial::binomial(-1, c);
    if let Some(b) = b {
        p = &p * &IntPolynomial::binomial(1, b);
    }
    p.div_exact(&IntPolynomial::binomial(-1, 2)).expect("c is even")
}

/// The printed uniform formula: `(1+q⁶)(1−q⁸)/(1−q²)` for `m = 1` and
/// `(1+q^{m+2})(1+q^{22−32/m})(1−q^{3m+4})/(1−q²)` otherwise.
pub fn printed_poincare(m: u32) -> Result<IntPolynomial> {
    let m = case_data(m)?.m as usize;
    Ok(if m == 1 {
        closed_form(6, None, 8)
    } else {
        closed_form(m + 2, Some(22 - 32 / m), 3 * m + 4)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoincareReport {
    pub m: u32,
    pub polynomial: IntPolynomial,
    pub display: String,
    pub top_degree: usize,
    /// `|W_G| / |W_L|`, the number of Schubert cells.
    pub cells: String,
    pub printed: IntPolynomial,
    pub printed_matches: bool,
    /// Middle exponent `e` with `P = (1+q^{m+2})(1+q^e)(1−q^{3m+4})/(1−q²)`.
    pub middle_exponent: Option<usize>,
    pub printed_exponent: Option<usize>,
    pub erratum: Option<String>,
}

pub fn poincare_report(m: u32) -> Result<PoincareReport> {
    let case = case_data(m)?;
    let p = poincare_gp(m)?;
    let top = p.degree().ok_or(Error::NonExactDivision)?;
    let levi = case.parabolic().levi().weyl_group_order();
    let cells: BigUint = case.diagram.weyl_group_order() / levi;
    if cells != BigUint::from(p.eval(1) as u64) || !p.is_palindromic() || top != 2 * case.dim_gp() as usize {
        return Err(Error::NotPalindromic(top));
    }
    let printed = printed_poincare(m)?;
    let mu = m as usize;
    let (middle_exponent, printed_exponent) = if m == 1 {
        (None, None)
    } else {
        let e = (0..=top).find(|&e| closed_form(mu + 2, Some(e), 3 * mu + 4) == p);
        (e, Some(22 - 32 / mu))
    };
    let printed_matches = printed == p;
    let erratum = (!printed_matches).then(|| {
        format!(
            "printed middle exponent 22-32/m = {} gives top degree {}; the degree quotient needs {} (top degree {top})",
            printed_exponent.unwrap_or(0),
            printed.degree().unwrap_or(0),
            middle_exponent.map_or("none".to_string(), |e| e.to_string()),
        )
    });
    Ok(PoincareReport {
        m,
        display: p.to_string(),
        polynomial: p,
        top_degree: top,
        cells: cells.to_string(),
        printed,
        printed_matches,
        middle_exponent,
        printed_exponent,
        erratum,
    })
}

/// Primitive Betti numbers `PH^i = h^i − h^{i−2}` for `0 ≤ i ≤ n` of a
/// projective variety of dimension `n` with Poincaré polynomial `p`.
pub fn primitive_betti(p: &IntPolynomial, n: usize) -> Result<Vec<i64>> {
    if p.degree() != Some(2 * n) || !p.is_palindromic() {
        return Err(Error::NotPalindromic(2 * n));
    }
    (0..=n)
        .map(|i| {
            let v = p.coeff(i) - if i >= 2 { p.coeff(i - 2) } else { 0 };
            if v < 0 {
                Err(Error::NegativePrimitive(i))
            } else {
                Ok(v)
            }
        })
        .collect()
}

/// Rebuilds `P` from its primitive parts: `Σ PH^i (q^i + q^{i+2} + … + q^{2n−i})`.
pub fn lefschetz_sum(primitive: &[i64], n: usize) -> IntPolynomial {
    let mut v = vec![0; 2 * n + 1];
    for (i, &c) in primitive.iter().enumerate().take(n + 1) {
        for d in (i..=2 * n - i).step_by(2) {
            v[d] += c;
        }
    }
    IntPolynomial::new(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c3_quotient() {
        let p = poincare_gp(1).unwrap();
        assert_eq!(p.coeffs(), &[1, 0, 1, 0, 1, 0, 2, 0, 1, 0, 1, 0, 1]);
        assert_eq!(p, printed_poincare(1).unwrap());
    }

    #[test]
    fn grassmannian() {
        let p = poincare_gp(2).unwrap();
        assert_eq!(p, IntPolynomial::gaussian_binomial(6, 3, 2));
        assert_eq!(p.coeff(6), 3);
    }

    #[test]
    fn reports() {
        let r8 = poincare_report(8).unwrap();
        assert!(r8.printed_matches);
        assert_eq!(r8.middle_exponent, Some(18));
        let r4 = poincare_report(4).unwrap();
        assert!(!r4.printed_matches);
        assert_eq!((r4.middle_exponent, r4.printed_exponent, r4.top_degree), (Some(10), Some(14), 30));
        assert!(r4.erratum.is_some());
        assert_eq!(r4.cells, "32");
    }

    #[test]
    fn primitive() {
        let p1 = poincare_gp(1).unwrap();
        let ph = primitive_betti(&p1, 6).unwrap();
        assert_eq!(ph, vec![1, 0, 0, 0, 0, 0, 1]);
        assert_eq!(lefschetz_sum(&ph, 6), p1);
        assert_eq!(primitive_betti(&IntPolynomial::one(), 0).unwrap(), vec![1]);
        let ph2 = primitive_betti(&poincare_gp(2).unwrap(), 9).unwrap();
        let nz: Vec<usize> = (0..ph2.len()).filter(|&i| ph2[i] != 0).collect();
        assert_eq!(nz, vec![0, 4, 6]);
        assert!(primitive_betti(&IntPolynomial::new(vec![2, 0, 1, 0, 2]), 2).is_err());
    }
}
