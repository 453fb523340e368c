use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use serde::Serialize;

use super::case::CaseData;
use crate::bott::chase_shifted;
use crate::error::Result;
use crate::liealg::Weight;

/// A summand `V(a·g' + b·X₄ + s·X)` of a bundle decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub weight: Weight,
}

fn weight_of(case: &CaseData, a: i64, b: i64, s: i64) -> Weight {
    let coords = (0..case.rank())
        .map(|i| a * case.gprime.coords()[i] + b * case.x4.coords()[i] + s * case.x.coords()[i])
        .collect();
    Weight::new(coords)
}

/// Calls `f(a, b, c)` for `a, b ≥ 0`, `c ≥ a + b` and `3c − 2b − a` in
/// `lo..=hi`.
fn for_triples(lo: i64, hi: i64, mut f: impl FnMut(i64, i64, i64)) {
    // c ≥ a+b and 3c ≤ hi + 2b + a force 2a + b ≤ hi.
    for a in 0..=hi.max(-1) / 2 {
        for b in 0..=(hi - 2 * a) {
            let cmin = (a + b).max(div_ceil(lo + 2 * b + a, 3));
            let cmax = (hi + 2 * b + a).div_euclid(3);
            for c in cmin..=cmax {
                f(a, b, c);
            }
        }
    }
}

fn div_ceil(x: i64, d: i64) -> i64 {
    -((-x).div_euclid(d))
}

/// `Sym_d Ω_{G/P} = ⊕ V(a·g' + b·X₄ − 2c·X)` over `3c − 2b − a = d`.
pub fn sym_cotangent_decomp(case: &CaseData, d: u32) -> Vec<Summand> {
    let d = d as i64;
    let mut out = Vec::new();
    for_triples(d, d, |a, b, c| {
        out.push(Summand {
            a,
            b,
            c,
            weight: weight_of(case, a, b, -2 * c),
        })
    });
    out
}

/// `Σ` of Levi dimensions over [`sym_cotangent_decomp`].
pub fn sym_cotangent_rank(case: &CaseData, d: u32) -> Result<BigUint> {
    let p = case.parabolic();
    sym_cotangent_decomp(case, d)
        .iter()
        .try_fold(BigUint::from(0u32), |acc, s| Ok(acc + p.levi_dimension(&s.weight)?))
}

/// Summands of `Λ^{−k} ⊗ Sym_d(gr η)`:
/// `V(a·g' + b·X₄ + (d − 2c − k)·X)` over `3c − 2b − a ≤ d`, all sitting in
/// `C*`-degree `d − 3k`.
pub fn greta_summands(case: &CaseData, d: u32, k: u32) -> Vec<Summand> {
    let (d, k) = (d as i64, k as i64);
    let mut out = Vec::new();
    for_triples(i64::MIN / 4, d, |a, b, c| {
        out.push(Summand {
            a,
            b,
            c,
            weight: weight_of(case, a, b, d - 2 * c - k),
        })
    });
    out
}

/// Bundles whose cohomology is the trivial `G'`-representation, by
/// cohomological degree, for one `C*`-degree target.
pub type TrivialHits = BTreeMap<usize, Vec<Weight>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub m: u32,
    pub k: u32,
    pub targets: Vec<i64>,
    /// target degree → cohomological degree → contributing bundle weights
    pub hits: BTreeMap<i64, TrivialHits>,
    /// union over targets: cohomological degree → bundle weights
    pub bundles: BTreeMap<usize, BTreeSet<Weight>>,
    pub degrees: BTreeSet<usize>,
    /// Whether rerunning with `2k` reproduced `hits` exactly.
    pub stable: bool,
}

impl ScanReport {
    /// Dimension of the invariant space at `(target, i)`.
    pub fn dimension(&self, target: i64, i: usize) -> usize {
        self.hits
            .get(&target)
            .and_then(|h| h.get(&i))
            .map_or(0, Vec::len)
    }
}

/// The targets scanned by default: `−6, −10, −12` for `m = 1`, and
/// `−4m−2, −6m−4, −6m−6` otherwise.
pub fn default_targets(m: u32) -> Vec<i64> {
    let m = m as i64;
    if m == 1 {
        vec![-6, -10, -12]
    } else {
        vec![-4 * m - 2, -6 * m - 4, -6 * m - 6]
    }
}

pub fn default_k(targets: &[i64]) -> u32 {
    2 * targets.iter().map(|t| t.unsigned_abs() as u32).max().unwrap_or(0) + 20
}

/// Quadratic form `(v + ρ, v + ρ)` on `v = a·g' + b·X₄ + s·X`, scaled to
/// integers, to discard summands that cannot reach `ρ`.
struct NormFilter {
    /// Gram matrix of `(g', X₄, X, ρ)`.
    g: [[i64; 4]; 4],
    target: i64,
}

impl NormFilter {
    fn new(case: &CaseData) -> Self {
        let (gram, _) = case.diagram.weight_gram();
        let vecs = [
            case.gprime.coords().to_vec(),
            case.x4.coords().to_vec(),
            case.x.coords().to_vec(),
            vec![1; case.rank()],
        ];
        let pair = |u: &[i64], v: &[i64]| -> i64 {
            let mut s = 0;
            for i in 0..u.len() {
                for j in 0..v.len() {
                    s += u[i] * gram[i][j] * v[j];
                }
            }
            s
        };
        let mut g = [[0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                g[i][j] = pair(&vecs[i], &vecs[j]);
            }
        }
        NormFilter { g, target: g[3][3] }
    }

    fn admits(&self, a: i64, b: i64, s: i64) -> bool {
        let v = [a, b, s, 1];
        let mut n = 0;
        for i in 0..4 {
            for j in 0..4 {
                n += v[i] * self.g[i][j] * v[j];
            }
        }
        n == self.target
    }
}

/// Visits the weight of every summand of `Λ^{−k} ⊗ Sym(gr η)` lying in
/// `C*`-degree `target`.
pub(crate) fn for_each_greta(case: &CaseData, target: i64, k: u32, mut f: impl FnMut(Weight)) {
    let k = k as i64;
    let d = target + 3 * k;
    if d < 0 {
        return;
    }
    for_triples(i64::MIN / 4, d, |a, b, c| f(weight_of(case, a, b, d - 2 * c - k)));
}

fn scan_target(case: &CaseData, k: u32, target: i64) -> Result<TrivialHits> {
    let filter = NormFilter::new(case);
    let k = k as i64;
    let d = target + 3 * k;
    let mut hits: TrivialHits = BTreeMap::new();
    if d < 0 {
        return Ok(hits);
    }
    let mut err = None;
    for_triples(i64::MIN / 4, d, |a, b, c| {
        let s = d - 2 * c - k;
        if err.is_some() || !filter.admits(a, b, s) {
            return;
        }
        let w = weight_of(case, a, b, s);
        let mut mu: Vec<i64> = w.coords().iter().map(|x| x + 1).collect();
        match chase_shifted(&case.diagram, &mut mu) {
            Ok(Some(len)) if mu.iter().all(|&x| x == 1) => hits.entry(len).or_default().push(w),
            Ok(_) => {}
            Err(e) => err = Some(e),
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    for v in hits.values_mut() {
        v.sort();
    }
    Ok(hits)
}

/// Runs Bott's theorem over every summand of [`greta_summands`] in each
/// target `C*`-degree and keeps those with trivial cohomology.
pub fn trivial_scan(case: &CaseData, k: Option<u32>, targets: Option<Vec<i64>>) -> Result<ScanReport> {
    trivial_scan_with(case, k, targets, 2)
}

/// [`trivial_scan`] with the stability re-check run at `factor·k`.
pub fn trivial_scan_with(case: &CaseData, k: Option<u32>, targets: Option<Vec<i64>>, factor: u32) -> Result<ScanReport> {
    let targets = targets.unwrap_or_else(|| default_targets(case.m));
    let k = k.unwrap_or_else(|| default_k(&targets));
    let mut hits = BTreeMap::new();
    let mut stable = true;
    for &t in &targets {
        let h = scan_target(case, k, t)?;
        let again = scan_target(case, factor.max(2) * k, t)?;
        stable &= h == again;
        hits.insert(t, h);
    }
    let mut bundles: BTreeMap<usize, BTreeSet<Weight>> = BTreeMap::new();
    for h in hits.values() {
        for (&i, ws) in h {
            bundles.entry(i).or_default().extend(ws.iter().cloned());
        }
    }
    let degrees = bundles.keys().copied().collect();
    Ok(ScanReport {
        m: case.m,
        k,
        targets,
        hits,
        bundles,
        degrees,
        stable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subexc::case_data;

    #[test]
    fn small_decompositions() {
        let c = case_data(1).unwrap();
        let d0 = sym_cotangent_decomp(&c, 0);
        assert_eq!(d0.len(), 1);
        assert!(d0[0].weight.is_zero());
        let d1 = sym_cotangent_decomp(&c, 1);
        assert_eq!(d1.iter().map(|s| (s.a, s.b, s.c)).collect::<Vec<_>>(), vec![(0, 1, 1)]);
        assert_eq!(d1[0].weight, c.cotangent_weight());
        let d3 = sym_cotangent_decomp(&c, 3);
        assert!(d3.iter().any(|s| (s.a, s.b, s.c) == (0, 0, 1) && s.weight == Weight::from(&[0i64, 0, -2][..])));
    }

    #[test]
    fn greta_trivial_triple() {
        let c = case_data(1).unwrap();
        let g = greta_summands(&c, 9, 4);
        let s = g.iter().find(|s| (s.a, s.b, s.c) == (0, 0, 0)).unwrap();
        assert_eq!(s.weight, Weight::from(&[0i64, 0, 5][..]));
        let w: BTreeSet<_> = g.iter().map(|s| s.weight.clone()).collect();
        assert_eq!(w.len(), g.len());
    }
}
