use std::collections::BTreeSet;

use serde::Serialize;

use super::case::CaseData;
use super::catalog::{simple_character, ModuleName};
use crate::charseries::{map_weights, BoxSpec, Character, DEFAULT_CELL_CAP};
use crate::error::{Error, Result};
use crate::liealg::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub weight: Weight,
    pub degree: i64,
    pub lhs: i64,
    pub rhs: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy)]
enum Relation {
    Equal,
    AtMost,
}

fn compare(
    name: &str,
    lhs: &Character,
    rhs: &Character,
    rel: Relation,
    bx: BoxSpec,
) -> Result<IdentityReport> {
    let weights: Vec<Weight> = lhs
        .candidate_weights(bx.letter_bound)
        .into_iter()
        .chain(rhs.candidate_weights(bx.letter_bound))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let cells = weights.len().saturating_mul(bx.degrees());
    if cells > DEFAULT_CELL_CAP {
        return Err(Error::BoxTooLarge {
            cells,
            cap: DEFAULT_CELL_CAP,
        });
    }
    let rows = map_weights(&weights, |w| {
        let a = lhs.coefficients(w, bx.dmin, bx.dmax)?;
        let b = rhs.coefficients(w, bx.dmin, bx.dmax)?;
        Ok(a.into_iter()
            .zip(b)
            .enumerate()
            .find(|(_, (x, y))| match rel {
                Relation::Equal => x != y,
                Relation::AtMost => x > y,
            })
            .map(|(k, (x, y))| Counterexample {
                weight: w.clone(),
                degree: bx.dmin + k as i64,
                lhs: x,
                rhs: y,
            }))
    })?;
    let counterexample = rows.into_iter().flatten().next();
    Ok(IdentityReport {
        identity: name.to_string(),
        status: if counterexample.is_some() {
            Status::Fail
        } else {
            Status::Pass
        },
        counterexample,
    })
}

/// Coefficientwise equality of two characters on a box.
pub fn compare_characters(name: &str, lhs: &Character, rhs: &Character, bx: BoxSpec) -> Result<IdentityReport> {
    compare(name, lhs, rhs, Relation::Equal, bx)
}

fn sum(c: &CaseData, names: &[ModuleName]) -> Result<Character> {
    names.iter().try_fold(Character::zero(&c.diagram), |acc, &n| {
        acc.add(&simple_character(c, n)?)
    })
}

/// Checks the filtration identities, the inclusion of `D f^{r1+1}` in its
/// ambient localization, `dual∘dual = id` and nonnegativity, cell by cell.
pub fn verify_identities(c: &CaseData, bx: BoxSpec) -> Result<Vec<IdentityReport>> {
    use ModuleName::*;
    let mut out = Vec::new();
    let sf = simple_character(c, Sf)?;
    let zero = Character::zero(&c.diagram);

    let (name, parts) = if c.is_case_a() {
        ("(i) Sf = S + L3 + E", [S, L3, E])
    } else {
        ("(i) Sf = S + L3 + L2p", [S, L3, L2p])
    };
    out.push(compare(name, &sf, &sum(c, &parts)?, Relation::Equal, bx)?);

    let (name, parts) = if c.is_case_a() {
        ("(ii) Sf*t^2 = L4p + L1 + L2", [L4p, L1, L2])
    } else {
        ("(ii) Sf*t^2 = L4p + L1 + E", [L4p, L1, E])
    };
    out.push(compare(name, &sf.shift(2), &sum(c, &parts)?, Relation::Equal, bx)?);

    let df = simple_character(c, DfR1p1)?;
    let (name, ambient) = if c.is_case_a() {
        ("(iii) Df^(r1+1) <= Sf*t^2", sf.shift(2))
    } else {
        ("(iii) Df^(r1+1) <= Sf", sf.clone())
    };
    out.push(compare(name, &df, &ambient, Relation::AtMost, bx)?);

    let mut catalog: Vec<ModuleName> = ModuleName::ALL.to_vec();
    if c.is_case_a() {
        catalog.retain(|&n| n != L2p);
    }
    for &n in &catalog {
        let ch = simple_character(c, n)?;
        let name = format!("(iv) dual(dual({n})) = {n}");
        out.push(compare(&name, &ch.dual().dual(), &ch, Relation::Equal, bx)?);
    }
    for n in ModuleName::simples(c.m) {
        let ch = simple_character(c, n)?;
        let name = format!("(v) {n} >= 0");
        out.push(compare(&name, &zero, &ch, Relation::AtMost, bx)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subexc::case_data;

    #[test]
    fn degenerate_box_passes() {
        let c = case_data(2).unwrap();
        let r = verify_identities(&c, BoxSpec::new(0, 0, 1)).unwrap();
        assert!(r.iter().all(|x| x.passed()), "{r:?}");
    }

    #[test]
    fn a_false_identity_is_caught() {
        let c = case_data(1).unwrap();
        let s = simple_character(&c, ModuleName::S).unwrap();
        let r = compare("S = S*t", &s, &s.shift(1), Relation::Equal, BoxSpec::new(0, 4, 2)).unwrap();
        let cx = r.counterexample.unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!((cx.degree, cx.lhs, cx.rhs), (0, 1, 0));
    }
}
