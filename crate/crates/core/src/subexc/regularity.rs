use serde::Serialize;

use super::case::{case_data, CaseData};
use super::catalog::{simple_character, ModuleName};
use crate::charseries::Character;
use crate::error::{Error, Result};
use crate::liealg::Weight;
use crate::rational::Rational;

/// Regularity of an orbit closure ideal, with its provenance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Regularity {
    pub m: u32,
    pub orbit: u32,
    pub value: i64,
    /// `(r, c)` when the value comes from a b-function root and a codimension.
    pub root: Option<Rational>,
    pub codim: Option<u32>,
    /// `false` for a value quoted from the literature.
    pub derived: bool,
}

/// `reg(I) = −r·deg f − c`; errors unless the result is an integer.
pub fn regularity_from(r: Rational, deg_f: i64, c: i64) -> Result<i64> {
    let v = -r.0 * deg_f - c;
    if !v.is_integer() {
        return Err(Error::Parse(format!("regularity {v} is not an integer")));
    }
    Ok(v.to_integer())
}

fn orbit_data(case: &CaseData, p: u32) -> Option<(Rational, u32)> {
    let c = case.codim(p).ok()?;
    match (p, case.is_case_a()) {
        (2, true) => Some((case.r1(), c)),
        (1, _) => Some((case.r2(), c)),
        (0, _) => Some((case.r3(), c)),
        _ => None,
    }
}

/// Reference table: `m+3, m+2, 0` on `O_2, O_1, O_0`, except `m+2` on `O_2`
/// when `m = 1`.
fn stored(m: u32, p: u32) -> Option<i64> {
    let m = m as i64;
    match (p, m) {
        (2, 1) => Some(m + 2),
        (2, _) => Some(m + 3),
        (1, _) => Some(m + 2),
        (0, _) => Some(0),
        _ => None,
    }
}

pub fn regularity(m: u32, p: u32) -> Result<Regularity> {
    let case = case_data(m)?;
    if p > 4 {
        return Err(Error::InvalidOrbit(p));
    }
    let table = stored(m, p).ok_or(Error::NoOrbitData { m, p })?;
    let Some((r, c)) = orbit_data(&case, p) else {
        return Ok(Regularity {
            m,
            orbit: p,
            value: table,
            root: None,
            codim: None,
            derived: false,
        });
    };
    let value = regularity_from(r, case.deg_f as i64, c as i64)?;
    if value != table {
        return Err(Error::MalformedExpr(format!(
            "regularity of O_{p} at m = {m}: derived {value}, table {table}"
        )));
    }
    Ok(Regularity {
        m,
        orbit: p,
        value,
        root: Some(r),
        codim: Some(c),
        derived: true,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemiinvariantReport {
    pub m: u32,
    pub orbit: u32,
    /// Simple constituents of the local cohomology module searched.
    pub module: Vec<ModuleName>,
    /// `−reg − c`, absent when no regularity is derived.
    pub expected_degree: Option<i64>,
    /// Degrees `D` with an invariant in degree `D` and none in `D + 4`.
    pub annihilated_degrees: Vec<i64>,
    /// Invariant multiplicity at the expected degree.
    pub multiplicity: i64,
    pub passed: bool,
}

fn socle_module(case: &CaseData, p: u32) -> Result<Vec<ModuleName>> {
    use ModuleName::*;
    Ok(match (p, case.is_case_a()) {
        (2, true) => vec![L1, L2],
        (1, true) => vec![L1],
        (2, false) => vec![L2],
        (1, false) => vec![L1, E],
        (0, _) => vec![E],
        _ => return Err(Error::NoOrbitData { m: case.m, p }),
    })
}

/// Looks for the semi-invariant section cutting out `Ō_p`: in the local
/// cohomology module supported on `Ō_p`, the highest degree whose
/// `G'`-invariants are killed by `f` should be `−reg − c`, with a
/// one-dimensional space there.
pub fn semiinvariant_degree_check(m: u32, p: u32) -> Result<SemiinvariantReport> {
    let case = case_data(m)?;
    let module = socle_module(&case, p)?;
    let ch = module.iter().try_fold(Character::zero(&case.diagram), |acc, &n| {
        acc.add(&simple_character(&case, n)?)
    })?;
    let reg = regularity(m, p)?;
    let expected_degree = reg
        .derived
        .then(|| -reg.value - reg.codim.expect("derived values carry c") as i64);
    let lo = -(case.dim_x as i64) - 8;
    let hi = 8;
    let coeffs = ch.coefficients(&Weight::zero(case.rank()), lo, hi + 4)?;
    let at = |d: i64| coeffs[(d - lo) as usize];
    let annihilated_degrees: Vec<i64> = (lo..=hi).filter(|&d| at(d) >= 1 && at(d + 4) == 0).collect();
    let top = annihilated_degrees.last().copied();
    let multiplicity = expected_degree.map_or(0, at);
    let passed = match expected_degree {
        Some(e) => top == Some(e) && multiplicity == 1,
        None => annihilated_degrees.is_empty(),
    };
    Ok(SemiinvariantReport {
        m,
        orbit: p,
        module,
        expected_degree,
        annihilated_degrees,
        multiplicity,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin9_preset() {
        assert_eq!(regularity_from(Rational::integer(-1), 2, 1).unwrap(), 1);
        assert_eq!(regularity_from(Rational::integer(-8), 2, 16).unwrap(), 0);
        assert!(regularity_from(Rational::new(-1, 3), 4, 0).is_err());
    }

    #[test]
    fn reference_values() {
        assert_eq!(regularity(2, 2).unwrap().value, 5);
        assert_eq!(regularity(1, 1).unwrap().value, 3);
        let o2 = regularity(1, 2).unwrap();
        assert_eq!((o2.value, o2.derived), (3, false));
        assert!(matches!(regularity(4, 3), Err(Error::NoOrbitData { .. })));
    }
}
