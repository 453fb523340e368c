use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::expr::Character;
use crate::error::{Error, Result};
use crate::liealg::Weight;

/// Default cap on enumerated `(weight, degree)` cells.
pub const DEFAULT_CELL_CAP: usize = 5_000_000;

/// A finite window: degrees `dmin..=dmax` and letter exponents `≤ letter_bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxSpec {
    pub dmin: i64,
    pub dmax: i64,
    pub letter_bound: u32,
}

impl BoxSpec {
    pub fn new(dmin: i64, dmax: i64, letter_bound: u32) -> Self {
        BoxSpec {
            dmin,
            dmax,
            letter_bound,
        }
    }

    /// Degrees `[-(6m+12), 12]`, letter exponents up to 6.
    pub fn default_for(m: u32) -> Self {
        BoxSpec::new(-(6 * m as i64 + 12), 12, 6)
    }

    pub fn degrees(&self) -> usize {
        (self.dmax - self.dmin + 1).max(0) as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRow {
    pub weight: Weight,
    pub degree: i64,
    pub mult: i64,
}

/// Nonzero coefficients of a character inside a box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharSeries {
    diagram: String,
    bx: BoxSpec,
    coeffs: BTreeMap<(Weight, i64), i64>,
}

impl CharSeries {
    pub fn empty(diagram: &str, bx: BoxSpec) -> Self {
        CharSeries {
            diagram: diagram.to_string(),
            bx,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn diagram(&self) -> &str {
        &self.diagram
    }

    pub fn box_spec(&self) -> BoxSpec {
        self.bx
    }

    pub fn get(&self, w: &Weight, d: i64) -> i64 {
        self.coeffs.get(&(w.clone(), d)).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64, i64)> {
        self.coeffs.iter().map(|((w, d), c)| (w, *d, *c))
    }

    /// Rows sorted by degree, then weight.
    pub fn rows(&self) -> Vec<SeriesRow> {
        let mut rows: Vec<SeriesRow> = self
            .iter()
            .map(|(w, d, c)| SeriesRow {
                weight: w.clone(),
                degree: d,
                mult: c,
            })
            .collect();
        rows.sort_by(|a, b| a.degree.cmp(&b.degree).then_with(|| a.weight.cmp(&b.weight)));
        rows
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    fn insert(&mut self, w: Weight, d: i64, c: i64) {
        if c == 0 {
            self.coeffs.remove(&(w, d));
        } else {
            self.coeffs.insert((w, d), c);
        }
    }

    fn check(&self, other: &CharSeries) -> Result<()> {
        if self.diagram != other.diagram {
            return Err(Error::IncompatibleDiagrams(
                self.diagram.clone(),
                other.diagram.clone(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &CharSeries) -> Result<CharSeries> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, d, c) in other.iter() {
            let v = out.get(w, d) + c;
            out.insert(w.clone(), d, v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &CharSeries) -> Result<CharSeries> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> CharSeries {
        let mut out = CharSeries::empty(&self.diagram, self.bx);
        for (w, d, c) in self.iter() {
            out.insert(w.clone(), d, c * k);
        }
        out
    }

    /// Multiplies by `t^s`; the window moves with the entries.
    pub fn shift(&self, s: i64) -> CharSeries {
        let bx = BoxSpec::new(self.bx.dmin + s, self.bx.dmax + s, self.bx.letter_bound);
        let mut out = CharSeries::empty(&self.diagram, bx);
        for (w, d, c) in self.iter() {
            out.insert(w.clone(), d + s, c);
        }
        out
    }

    /// `(λ, d) ↦ (dual(λ), −d)` using a duality permutation (zero based).
    pub fn dual(&self, perm: &[usize]) -> CharSeries {
        let bx = BoxSpec::new(-self.bx.dmax, -self.bx.dmin, self.bx.letter_bound);
        let mut out = CharSeries::empty(&self.diagram, bx);
        for (w, d, c) in self.iter() {
            let mut v = vec![0; w.rank()];
            for (i, &x) in w.coords().iter().enumerate() {
                v[perm[i]] = x;
            }
            out.insert(Weight::new(v), -d, c);
        }
        out
    }
}

/// Materializes every coefficient of `ch` inside `bx`.
pub fn expand_box(ch: &Character, bx: BoxSpec, cap: usize) -> Result<CharSeries> {
    let weights: Vec<Weight> = ch.candidate_weights(bx.letter_bound).into_iter().collect();
    let cells = weights.len().saturating_mul(bx.degrees());
    if cells > cap {
        return Err(Error::BoxTooLarge { cells, cap });
    }
    let rows = map_weights(&weights, |w| ch.coefficients(w, bx.dmin, bx.dmax))?;
    let mut out = CharSeries::empty(ch.diagram().name(), bx);
    for (w, row) in weights.into_iter().zip(rows) {
        for (k, c) in row.into_iter().enumerate() {
            if c != 0 {
                out.coeffs.insert((w.clone(), bx.dmin + k as i64), c);
            }
        }
    }
    Ok(out)
}

#[cfg(feature = "parallel")]
pub(crate) fn map_weights<T: Send>(
    weights: &[Weight],
    f: impl Fn(&Weight) -> Result<T> + Sync + Send,
) -> Result<Vec<T>> {
    use rayon::prelude::*;
    weights.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_weights<T>(weights: &[Weight], f: impl Fn(&Weight) -> Result<T>) -> Result<Vec<T>> {
    weights.iter().map(f).collect()
}

/// `Σ_λ coeff(λ, d) · dim V_λ`. Needs finite degree slices unless a letter
/// bound is given, in which case the sum runs over the bounded weights only.
pub fn hilbert(ch: &Character, d: i64, letter_bound: Option<u32>) -> Result<BigInt> {
    let bound = match letter_bound {
        Some(b) => b,
        None => ch.auto_bound(d).ok_or(Error::InfiniteSlice)?,
    };
    let diagram = ch.diagram();
    let mut total = BigInt::from(0);
    for w in ch.candidate_weights(bound) {
        let c = ch.coeff(&w, d)?;
        if c != 0 {
            if !w.is_dominant() {
                return Err(Error::NotDominant(w.coords().to_vec()));
            }
            total += BigInt::from(c) * BigInt::from(diagram.weyl_dimension(&w)?);
        }
    }
    Ok(total)
}
