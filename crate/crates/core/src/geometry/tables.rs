use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::poincare::{poincare_gp, primitive_betti};
use crate::charseries::{BoxSpec, Character};
use crate::error::{Error, Result};
use crate::quiver::fourier_permutation;
use crate::subexc::{case_data, simple_character, CaseData, IdentityReport, ModuleName};

/// Indices `i` with `H^i_{0}(L) ≅ E`, for the simples where it is known.
pub fn origin_support(m: u32, module: ModuleName) -> Result<Option<Vec<u32>>> {
    use ModuleName::*;
    let case = case_data(m)?;
    let a = case.is_case_a();
    let v = match (module, a) {
        (E, _) => vec![0],
        (L1, true) => vec![m + 2, 2 * m + 2, 3 * m + 4],
        (L1, false) => vec![1, 3 * m + 4],
        (L2, true) => vec![m + 3, 2 * m + 3, 3 * m + 3, 3 * m + 5, 4 * m + 5, 5 * m + 5],
        (L2, false) => vec![m + 3, 5 * m + 5],
        (L3, true) => vec![1, 6 * m + 7],
        (L3, false) => vec![3 * m + 4, 6 * m + 7],
        _ => return Ok(None),
    };
    Ok(Some(v))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Shape {
    Simple,
    /// Non-split `0 → sub → H → quotient → 0`.
    Extension { sub: ModuleName, quotient: ModuleName },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalCohomologyEntry {
    pub index: u32,
    pub factors: Vec<ModuleName>,
    pub shape: Shape,
    /// `i` with `H^i_{0}` of this module isomorphic to `E`.
    pub origin_support: Vec<u32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalCohomologyTable {
    pub m: u32,
    pub orbit: u32,
    pub entries: Vec<LocalCohomologyEntry>,
    /// Factor characters against an independent description of the module.
    pub checks: Vec<IdentityReport>,
}

impl LocalCohomologyTable {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityReport::passed)
    }
}

fn simple(m: u32, index: u32, n: ModuleName) -> Result<LocalCohomologyEntry> {
    Ok(LocalCohomologyEntry {
        index,
        factors: vec![n],
        shape: Shape::Simple,
        origin_support: origin_support(m, n)?.expect("E, L1, L2, L3 have known support"),
    })
}

fn extension(index: u32, sub: ModuleName, quotient: ModuleName, origin: Vec<u32>) -> LocalCohomologyEntry {
    LocalCohomologyEntry {
        index,
        factors: vec![sub, quotient],
        shape: Shape::Extension { sub, quotient },
        origin_support: origin,
    }
}

/// The nonzero `H^j_{Ō_p}(S)`.
pub fn local_cohomology_entries(m: u32, p: u32) -> Result<Vec<LocalCohomologyEntry>> {
    use ModuleName::*;
    let case = case_data(m)?;
    let a = case.is_case_a();
    let top = 6 * m + 8;
    Ok(match (p, a) {
        (0, _) => vec![simple(m, top, E)?],
        (1, true) => vec![
            simple(m, 3 * m + 4, L1)?,
            simple(m, 4 * m + 5, E)?,
            simple(m, 5 * m + 5, E)?,
        ],
        (1, false) => vec![extension(3 * m + 4, L1, E, vec![3 * m + 4])],
        (2, true) => vec![
            extension(m + 3, L2, L1, vec![3 * m + 3, 4 * m + 5, 5 * m + 5]),
            simple(m, 2 * m + 3, L1)?,
            simple(m, 3 * m + 4, E)?,
        ],
        (2, false) => vec![simple(m, m + 3, L2)?, simple(m, 3 * m + 4, E)?],
        (3, true) => vec![extension(1, L3, E, vec![top - 1])],
        (3, false) => vec![extension(1, L3, L2p, vec![top - 1])],
        _ => return Err(Error::InvalidOrbit(p)),
    })
}

/// Character of a non-simple entry from its description as a quotient:
/// `H¹_{Ō_3} = S_f/S` and `S_f·√f / L4p` for the other extension.
fn described(case: &CaseData, e: &LocalCohomologyEntry) -> Result<Option<Character>> {
    use ModuleName::*;
    let ch = |n| simple_character(case, n);
    Ok(match e.shape {
        Shape::Simple => None,
        Shape::Extension { sub: L3, .. } => Some(ch(Sf)?.sub(&ch(S)?)?),
        Shape::Extension { .. } => Some(ch(Sf)?.shift(2).sub(&ch(L4p)?)?),
    })
}

pub fn local_cohomology_table(m: u32, p: u32, bx: Option<BoxSpec>) -> Result<LocalCohomologyTable> {
    let case = case_data(m)?;
    let entries = local_cohomology_entries(m, p)?;
    let bx = bx.unwrap_or_else(|| BoxSpec::default_for(m));
    let mut checks = Vec::new();
    for e in &entries {
        if let Some(total) = described(&case, e)? {
            let sum = e.factors.iter().try_fold(Character::zero(&case.diagram), |acc, &n| {
                acc.add(&simple_character(&case, n)?)
            })?;
            let names: Vec<String> = e.factors.iter().map(|n| n.to_string()).collect();
            let label = format!("H^{} = {}", e.index, names.join(" + "));
            checks.push(crate::subexc::compare_characters(&label, &sum, &total, bx)?);
        }
    }
    Ok(LocalCohomologyTable {
        m,
        orbit: p,
        entries,
        checks,
    })
}

/// Lyubeznik pair sets as stated.
fn stored_lyubeznik(m: u32, p: u32) -> Result<BTreeSet<(u32, u32)>> {
    let case = case_data(m)?;
    let v: Vec<(u32, u32)> = match (p, case.is_case_a()) {
        (1, true) => vec![
            (0, m + 3),
            (0, 2 * m + 3),
            (m + 2, 3 * m + 4),
            (2 * m + 2, 3 * m + 4),
            (3 * m + 4, 3 * m + 4),
        ],
        (2, true) => vec![
            (0, 3 * m + 4),
            (m + 2, 4 * m + 5),
            (2 * m + 2, 4 * m + 5),
            (3 * m + 4, 4 * m + 5),
            (3 * m + 3, 5 * m + 5),
            (4 * m + 5, 5 * m + 5),
            (5 * m + 5, 5 * m + 5),
        ],
        (1, false) => vec![(3 * m + 4, 3 * m + 4)],
        (2, false) => vec![(0, 3 * m + 4), (2 * m + 2, 5 * m + 5), (5 * m + 5, 5 * m + 5)],
        (3, _) => vec![(6 * m + 7, 6 * m + 7)],
        _ => return Err(Error::InvalidOrbit(p)),
    };
    Ok(v.into_iter().collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LyubeznikReport {
    pub m: u32,
    pub orbit: u32,
    pub dim: u32,
    /// Pairs `(i, j)` with `λ_{i,j} = 1`.
    pub pairs: BTreeSet<(u32, u32)>,
    /// Pairs read off the local cohomology ledger.
    pub from_ledger: BTreeSet<(u32, u32)>,
    pub top_is_one: bool,
    pub ledger_consistent: bool,
}

impl LyubeznikReport {
    pub fn passed(&self) -> bool {
        self.top_is_one && self.ledger_consistent
    }
}

/// `λ_{i,j}` is the multiplicity of `E` in `H^i_{0}(H^{dim X − j}_{Ō_p}(S))`.
pub fn lyubeznik(m: u32, p: u32) -> Result<LyubeznikReport> {
    if !(1..=3).contains(&p) {
        return Err(Error::InvalidOrbit(p));
    }
    let case = case_data(m)?;
    let pairs = stored_lyubeznik(m, p)?;
    let from_ledger: BTreeSet<(u32, u32)> = local_cohomology_entries(m, p)?
        .iter()
        .flat_map(|e| e.origin_support.iter().map(move |&i| (i, case.dim_x - e.index)))
        .collect();
    let dim = case.orbit_dim(p)?;
    Ok(LyubeznikReport {
        m,
        orbit: p,
        dim,
        top_is_one: pairs.contains(&(dim, dim)),
        ledger_consistent: pairs == from_ledger,
        pairs,
        from_ledger,
    })
}

fn stored_ih(m: u32, p: u32) -> Result<Vec<u32>> {
    let case = case_data(m)?;
    Ok(match (p, case.is_case_a()) {
        (1, true) => vec![0, m + 2, 2 * m + 2],
        (2, true) => vec![0, m, 2 * m, 2 * m + 2, 3 * m + 2, 4 * m + 2],
        (3, true) => vec![0, 6 * m + 6],
        (1..=3, false) => vec![0, 4 * m + 2],
        _ => return Err(Error::InvalidOrbit(p)),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IhReport {
    pub m: u32,
    pub orbit: u32,
    /// `i → dim IH^i`.
    pub groups: BTreeMap<u32, i64>,
    /// From primitive cohomology of `G/P`, where the orbit closure is that cone.
    pub from_cone: Option<BTreeMap<u32, i64>>,
    /// From `H^{i+c}_{0}(F(L_p))`, where that support is known.
    pub from_fourier: Option<BTreeMap<u32, i64>>,
    pub consistent: bool,
}

fn simple_of_orbit(p: u32) -> ModuleName {
    match p {
        1 => ModuleName::L1,
        2 => ModuleName::L2,
        _ => ModuleName::L3,
    }
}

/// Intersection cohomology of `Ō_p`, `p ∈ {1, 2, 3}`.
pub fn ih_orbit(m: u32, p: u32) -> Result<IhReport> {
    if !(1..=3).contains(&p) {
        return Err(Error::InvalidOrbit(p));
    }
    let case = case_data(m)?;
    let groups: BTreeMap<u32, i64> = stored_ih(m, p)?.into_iter().map(|i| (i, 1)).collect();
    let from_cone = if p == 1 || !case.is_case_a() {
        let ph = primitive_betti(&poincare_gp(m)?, case.dim_gp() as usize)?;
        Some(
            ph.iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(i, &v)| (i as u32, v))
                .collect(),
        )
    } else {
        None
    };
    let image = fourier_permutation(m)?[&simple_of_orbit(p)];
    let c = case.codim(p)?;
    let from_fourier = origin_support(m, image)?.map(|support| {
        support
            .into_iter()
            .filter(|&i| i >= c)
            .map(|i| (i - c, 1))
            .collect::<BTreeMap<u32, i64>>()
    });
    let consistent = [&from_cone, &from_fourier].iter().all(|d| d.as_ref().is_none_or(|d| *d == groups))
        && (from_cone.is_some() || from_fourier.is_some());
    Ok(IhReport {
        m,
        orbit: p,
        groups,
        from_cone,
        from_fourier,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ih_examples() {
        assert_eq!(ih_orbit(1, 2).unwrap().groups, BTreeMap::from([(0, 1), (6, 1)]));
        assert_eq!(ih_orbit(4, 3).unwrap().groups, BTreeMap::from([(0, 1), (30, 1)]));
        for m in [1, 2, 4, 8] {
            for p in 1..=3 {
                assert!(ih_orbit(m, p).unwrap().consistent, "m={m} p={p}");
            }
        }
    }

    #[test]
    fn lyubeznik_examples() {
        let r = lyubeznik(1, 2).unwrap();
        assert_eq!(r.pairs, BTreeSet::from([(0, 7), (4, 10), (10, 10)]));
        assert_eq!(lyubeznik(1, 3).unwrap().pairs, BTreeSet::from([(13, 13)]));
        assert!(lyubeznik(2, 1).unwrap().pairs.contains(&(0, 5)));
        for m in [1, 2, 4, 8] {
            for p in 1..=3 {
                assert!(lyubeznik(m, p).unwrap().passed(), "m={m} p={p}");
            }
        }
    }

    #[test]
    fn local_cohomology_examples() {
        let t = local_cohomology_entries(4, 1).unwrap();
        assert_eq!(t.iter().map(|e| e.index).collect::<Vec<_>>(), vec![16, 21, 25]);
        let b3 = local_cohomology_entries(1, 3).unwrap();
        assert_eq!(b3[0].factors, vec![ModuleName::L3, ModuleName::L2p]);
        assert_eq!(local_cohomology_entries(1, 0).unwrap()[0].index, 14);
        let small = BoxSpec::new(-16, 4, 3);
        assert!(local_cohomology_table(1, 1, Some(small)).unwrap().passed());
    }
}
