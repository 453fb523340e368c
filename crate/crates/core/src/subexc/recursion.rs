use std::collections::HashMap;

use serde::Serialize;

use super::case::CaseData;
use super::catalog::char_l2_c3;
use super::decomp::for_each_greta;
use crate::bott::chase_shifted;
use crate::charseries::LaurentPoly;
use crate::error::{Error, Result};
use crate::liealg::Weight;

/// `λ = (2p+1)ω₁ + 2qω₂ + rω₃`.
pub fn l2_weight(p: i64, q: i64, r: i64) -> Weight {
    Weight::new(vec![2 * p + 1, 2 * q, r])
}

/// `c(t) = t⁻⁷ (t^{2p} + t^{2p−4} + … + t^{−2p}) (t^r + t^{r−2} + … + t^{−r})`.
pub fn l2_closed_form(p: i64, r: i64) -> LaurentPoly {
    let a = LaurentPoly::progression(-2 * p, 2 * p, 4);
    let b = LaurentPoly::progression(-r, r, 2);
    (&a * &b).shift(-7)
}

/// Value of `m^{d−4}(L₂) − m^d(L₂)` predicted for `d + r` odd.
pub fn recursion_branch(p: i64, r: i64, d: i64) -> i64 {
    let top = 2 * p + r - 3;
    let u = 2 * p - r - 5;
    let v = -2 * p + r - 7;
    let (hi, lo) = (u.max(v), u.min(v));
    let bottom = -2 * p - r - 9;
    if d > top {
        0
    } else if d > hi {
        1
    } else if d > lo {
        0
    } else if d > bottom {
        -1
    } else {
        0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecursionMismatch {
    pub degree: i64,
    pub expected: i64,
    pub actual: i64,
    pub kind: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecursionReport {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub dmin: i64,
    pub dmax: i64,
    pub slice_matches_closed_form: bool,
    pub mismatches: Vec<RecursionMismatch>,
}

impl RecursionReport {
    pub fn passed(&self) -> bool {
        self.slice_matches_closed_form && self.mismatches.is_empty()
    }
}

/// Checks the catalogued `[L₂]` against the initial condition
/// (`m^d = 0` for `d > 2p + r − 7`), the five-branch recursion when `d + r`
/// is odd, vanishing when `d + r` is even, and the closed form `c(t)`.
pub fn recursion_check(case: &CaseData, p: i64, q: i64, r: i64, dmin: i64, dmax: i64) -> Result<RecursionReport> {
    let l2 = char_l2_c3(case)?;
    let lambda = l2_weight(p, q, r);
    let slice = l2.weight_slice(&lambda)?;
    let coeffs = slice.coefficients(dmin - 4, dmax);
    let at = |d: i64| coeffs[(d - dmin + 4) as usize];
    let mut mismatches = Vec::new();
    for d in dmin..=dmax {
        if d > 2 * p + r - 7 && at(d) != 0 {
            mismatches.push(RecursionMismatch {
                degree: d,
                expected: 0,
                actual: at(d),
                kind: "initial condition",
            });
        }
        let diff = at(d - 4) - at(d);
        let expected = if (d + r).rem_euclid(2) == 1 {
            recursion_branch(p, r, d)
        } else {
            0
        };
        if diff != expected {
            mismatches.push(RecursionMismatch {
                degree: d,
                expected,
                actual: diff,
                kind: "recursion",
            });
        }
    }
    Ok(RecursionReport {
        p,
        q,
        r,
        dmin,
        dmax,
        slice_matches_closed_form: slice.is_finite() && slice.numerator == l2_closed_form(p, r),
        mismatches,
    })
}

/// Multiplicity of `λ = (2p+1)ω₁ + 2qω₂ + rω₃` in `N_i` in `C*`-degree `d`:
/// the number of satisfied inequalities, when `d + r` is odd.
pub fn ni_multiplicity(p: i64, _q: i64, r: i64, d: i64, i: u32) -> Result<i64> {
    if (d + r).rem_euclid(2) == 0 {
        if !(2..=4).contains(&i) {
            return Err(Error::InvalidIndex(i));
        }
        return Ok(0);
    }
    let n = match i {
        2 => (d <= 2 * p + r - 3) as i64,
        3 => (d <= 2 * p - r - 5) as i64 + (d <= -2 * p + r - 7) as i64,
        4 => (d <= -2 * p - r - 9) as i64,
        _ => return Err(Error::InvalidIndex(i)),
    };
    Ok(n)
}

/// Counts summands of `Λ^{−k} ⊗ Sym(gr η)` in `C*`-degree `d` whose Bott
/// cohomology is `V_λ` in degree `i`, caching one pass per degree.
pub struct NiOracle<'a> {
    case: &'a CaseData,
    k: u32,
    cache: HashMap<i64, HashMap<(usize, Weight), i64>>,
}

impl<'a> NiOracle<'a> {
    pub fn new(case: &'a CaseData, k: u32) -> Self {
        NiOracle {
            case,
            k,
            cache: HashMap::new(),
        }
    }

    pub fn count(&mut self, lambda: &Weight, d: i64, i: usize) -> Result<i64> {
        if !self.cache.contains_key(&d) {
            let table = self.tabulate(d)?;
            self.cache.insert(d, table);
        }
        Ok(self.cache[&d].get(&(i, lambda.clone())).copied().unwrap_or(0))
    }

    fn tabulate(&self, target: i64) -> Result<HashMap<(usize, Weight), i64>> {
        let mut table = HashMap::new();
        let mut err = None;
        let diagram = &self.case.diagram;
        for_each_greta(self.case, target, self.k, |w| {
            if err.is_some() {
                return;
            }
            let mut mu: Vec<i64> = w.coords().iter().map(|x| x + 1).collect();
            match chase_shifted(diagram, &mut mu) {
                Ok(Some(len)) => {
                    let res = Weight::new(mu.iter().map(|x| x - 1).collect());
                    *table.entry((len, res)).or_insert(0) += 1;
                }
                Ok(None) => {}
                Err(e) => err = Some(e),
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(table),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subexc::case_data;

    #[test]
    fn branch_values() {
        assert_eq!(recursion_branch(0, 0, -3), 1);
        assert_eq!(recursion_branch(0, 0, 1), 0);
        assert_eq!(ni_multiplicity(0, 0, 1, -4, 2).unwrap(), 1);
        assert_eq!(ni_multiplicity(0, 0, 0, 0, 3).unwrap(), 0);
        assert!(ni_multiplicity(0, 0, 0, 1, 5).is_err());
    }

    #[test]
    fn closed_form_example() {
        let c = l2_closed_form(1, 1);
        let expect = &(&LaurentPoly::monomial(1, 2) + &LaurentPoly::monomial(1, -2))
            * &(&LaurentPoly::monomial(1, 1) + &LaurentPoly::monomial(1, -1));
        assert_eq!(c, expect.shift(-7));
    }

    #[test]
    fn recursion_holds_on_a_sample() {
        let c = case_data(1).unwrap();
        let r = recursion_check(&c, 1, 1, 2, -20, 5).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(recursion_check(&case_data(2).unwrap(), 0, 0, 0, -1, 1).is_err());
    }
}
