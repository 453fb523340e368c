use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::Result;
use crate::subexc::{case_data, ModuleName};

/// A characteristic cycle: orbit index → multiplicity of `[T*_{O_i} X]`.
pub type Cycle = BTreeMap<u32, u32>;

/// Convention used for the two end modules.
pub const CONVENTION: &str = "charC(S) = [T*_{O_4} X] (zero section), charC(E) = [T*_{O_0} X] (fiber over 0); \
the opposite naming in the text is read as a misprint";

pub const TENSION_NAMING: &str = "naming of charC(S) and charC(E)";
pub const TENSION_SQRT_F: &str = "charC(S_f*sqrt f) in case (b): composition series {L4p, L1, E} misses [T*_{O_2} X]";

fn cycle(orbits: &[u32]) -> Cycle {
    orbits.iter().map(|&o| (o, 1)).collect()
}

/// Stored characteristic cycles of the simples.
pub fn charc_table(m: u32) -> Result<BTreeMap<ModuleName, Cycle>> {
    use ModuleName::*;
    let case = case_data(m)?;
    let all = [4, 3, 2, 1, 0];
    let mut t = BTreeMap::from([
        (S, cycle(&[4])),
        (E, cycle(&[0])),
        (L2, cycle(&[2])),
        (L4p, cycle(&[4, 3])),
        (L41, cycle(&all)),
        (L43, cycle(&all)),
    ]);
    if case.is_case_a() {
        t.insert(L1, cycle(&[1, 0]));
        t.insert(L3, cycle(&[3, 2, 1]));
    } else {
        t.insert(L1, cycle(&[1]));
        t.insert(L3, cycle(&[3]));
        t.insert(L2p, cycle(&[2, 1, 0]));
    }
    Ok(t)
}

/// Components of a cycle form an interval of the chain `O_4 – … – O_0`.
pub fn holonomy_connected(c: &Cycle) -> bool {
    let support: Vec<u32> = c.iter().filter(|(_, &n)| n > 0).map(|(&o, _)| o).collect();
    support.windows(2).all(|w| w[1] == w[0] + 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleCheck {
    pub module: String,
    pub factors: Vec<ModuleName>,
    pub summed: Cycle,
    pub stated: Cycle,
    pub matches: bool,
    pub tension: Option<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharcReport {
    pub m: u32,
    pub convention: &'static str,
    pub connected: BTreeMap<ModuleName, bool>,
    pub multiplicity_free: BTreeMap<ModuleName, bool>,
    pub checks: Vec<CycleCheck>,
    pub tensions: BTreeSet<&'static str>,
}

impl CharcReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &CycleCheck> {
        self.checks.iter().filter(|c| !c.matches)
    }
}

fn sum(table: &BTreeMap<ModuleName, Cycle>, factors: &[ModuleName]) -> Cycle {
    let mut out = Cycle::new();
    for f in factors {
        for (&o, &n) in &table[f] {
            *out.entry(o).or_insert(0) += n;
        }
    }
    out
}

fn minus(a: &Cycle, b: &Cycle) -> Cycle {
    let mut out = a.clone();
    for (o, n) in b {
        let e = out.entry(*o).or_insert(0);
        *e = e.saturating_sub(*n);
    }
    out.retain(|_, n| *n > 0);
    out
}

/// Compares summed factor cycles against stated totals for the filtrations
/// of `S_f·f^{i/4}` and the local cohomology modules with a stated quotient
/// description. Mismatches are reported, never raised.
pub fn charc_report(m: u32) -> Result<CharcReport> {
    use ModuleName::*;
    let case = case_data(m)?;
    let table = charc_table(m)?;
    let full = cycle(&[4, 3, 2, 1, 0]);
    let mut checks = Vec::new();
    let mut push = |module: &str, factors: Vec<ModuleName>, stated: Cycle, tension| {
        let summed = sum(&table, &factors);
        let matches = summed == stated;
        checks.push(CycleCheck {
            module: module.to_string(),
            factors,
            summed,
            stated,
            matches,
            tension: if matches { None } else { Some(tension) },
        });
    };
    if case.is_case_a() {
        push("S_f", vec![S, L3, E], full.clone(), TENSION_NAMING);
        push("S_f*sqrt f", vec![L4p, L2, L1], full.clone(), TENSION_SQRT_F);
        push("H^1_{O3}(S) = S_f/S", vec![L3, E], minus(&full, &table[&S]), TENSION_NAMING);
        push("H^{m+3}_{O2}(S) = S_f*sqrt f/L4p", vec![L2, L1], minus(&full, &table[&L4p]), TENSION_SQRT_F);
    } else {
        push("S_f", vec![S, L3, L2p], full.clone(), TENSION_NAMING);
        push("S_f*sqrt f", vec![L4p, L1, E], full.clone(), TENSION_SQRT_F);
        push("H^1_{O3}(S) = S_f/S", vec![L3, L2p], minus(&full, &table[&S]), TENSION_NAMING);
        push("H^{3m+4}_{O1}(S) = S_f*sqrt f/L4p", vec![L1, E], minus(&full, &table[&L4p]), TENSION_SQRT_F);
    }
    for n in [L41, L43] {
        push(&format!("S_f*f^{}/4", if n == L41 { 1 } else { 3 }), vec![n], full.clone(), TENSION_SQRT_F);
    }
    let mut tensions: BTreeSet<&'static str> = checks.iter().filter_map(|c| c.tension).collect();
    tensions.insert(TENSION_NAMING);
    Ok(CharcReport {
        m,
        convention: CONVENTION,
        connected: table.iter().map(|(&n, c)| (n, holonomy_connected(c))).collect(),
        multiplicity_free: table.iter().map(|(&n, c)| (n, c.values().all(|&k| k <= 1))).collect(),
        checks,
        tensions,
    })
}
