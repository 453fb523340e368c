use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};
use crate::liealg::{DynkinDiagram, Weight};

/// A signed numerator monomial `±t^degree_shift · V_weight_shift`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub sign: i64,
    pub degree_shift: i64,
    pub weight_shift: Weight,
}

/// The geometric factor `1/(1 − t^degree · V_letter)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub degree: i64,
    pub letter: Weight,
}

/// Coefficients of one weight across all degrees.
///
/// The coefficient of `t^d` is the coefficient of `t^d` in
/// `numerator · Π_k 1/(1 − t^k)` over `free_degrees`. With a period `p` the
/// numerator is folded into `0..p` and every degree congruent to a folded
/// exponent receives its coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Slice {
    pub numerator: LaurentPoly,
    pub free_degrees: Vec<i64>,
    pub period: Option<i64>,
}

impl Slice {
    pub fn is_finite(&self) -> bool {
        self.numerator.is_zero() || (self.free_degrees.is_empty() && self.period.is_none())
    }

    pub fn coefficient(&self, d: i64) -> i64 {
        self.coefficients(d, d)[0]
    }

    /// Coefficients for degrees `lo..=hi`.
    pub fn coefficients(&self, lo: i64, hi: i64) -> Vec<i64> {
        let len = (hi - lo + 1).max(0) as usize;
        if let Some(p) = self.period {
            return (lo..=hi).map(|d| self.numerator.coeff(d.rem_euclid(p))).collect();
        }
        if self.free_degrees.is_empty() {
            return (lo..=hi).map(|d| self.numerator.coeff(d)).collect();
        }
        let mut out = vec![0; len];
        let (Some(nmin), Some(nmax)) = (self.numerator.min_degree(), self.numerator.max_degree())
        else {
            return out;
        };
        let positive = self.free_degrees[0] > 0;
        // Largest distance any target can be from a numerator exponent.
        let reach = if positive { hi - nmin } else { nmax - lo };
        if reach < 0 {
            return out;
        }
        let ways = partition_counts(&self.free_degrees, reach as usize);
        for (e, c) in self.numerator.terms() {
            for (slot, d) in (lo..=hi).enumerate() {
                let x = if positive { d - e } else { e - d };
                if x >= 0 && (x as usize) < ways.len() {
                    out[slot] += c * ways[x as usize];
                }
            }
        }
        out
    }
}

/// `ways[x]` = number of nonnegative solutions of `Σ |k_i| e_i = x`.
fn partition_counts(degrees: &[i64], max: usize) -> Vec<i64> {
    let mut ways = vec![0i64; max + 1];
    ways[0] = 1;
    for k in degrees {
        let k = k.unsigned_abs() as usize;
        for x in k..=max {
            ways[x] += ways[x - k];
        }
    }
    ways
}

/// Exponent distribution of `Π_i 1/(1 − t^{k_i} V_L)` on `V_{nL}`:
/// `Σ_{e_1+…+e_s = n} t^{Σ k_i e_i}`.
fn composition_poly(degrees: &[i64], n: usize) -> LaurentPoly {
    // table[j] = distribution for total exponent j using the factors so far
    let mut table: Vec<LaurentPoly> = (0..=n)
        .map(|j| {
            if j == 0 {
                LaurentPoly::one()
            } else {
                LaurentPoly::zero()
            }
        })
        .collect();
    for (idx, &k) in degrees.iter().enumerate() {
        if idx == 0 {
            table = (0..=n)
                .map(|j| LaurentPoly::monomial(1, k * j as i64))
                .collect();
            continue;
        }
        let mut next = vec![LaurentPoly::zero(); n + 1];
        for (j, slot) in next.iter_mut().enumerate() {
            for e in 0..=j {
                *slot += &table[j - e].shift(k * e as i64);
            }
        }
        table = next;
    }
    table.swap_remove(n)
}

#[derive(Clone, Debug)]
struct LetterGroup {
    letter: Weight,
    degrees: Vec<i64>,
}

/// Solves `Σ n_j L_j = μ` for linearly independent letters `L_j`.
#[derive(Clone, Debug)]
struct Decomposer {
    letters: Vec<Vec<i64>>,
    pivots: Vec<usize>,
    /// `n = adj · μ[pivots] / den`
    adj: Vec<Vec<i64>>,
    den: i64,
}

impl Decomposer {
    fn new(letters: Vec<Vec<i64>>, rank: usize) -> Result<Self> {
        let r = letters.len();
        // Row-reduce the rank × r matrix whose columns are the letters.
        let mut m: Vec<Vec<Ratio<i64>>> = (0..rank)
            .map(|i| (0..r).map(|j| Ratio::from_integer(letters[j][i])).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        let mut used = vec![false; rank];
        for col in 0..r {
            let Some(p) = (0..rank).find(|&i| !used[i] && !m[i][col].is_zero()) else {
                return Err(Error::MalformedExpr("letters are linearly dependent".into()));
            };
            used[p] = true;
            pivots.push(p);
            let pv = m[p][col];
            for i in 0..rank {
                if i != p && !m[i][col].is_zero() {
                    let f = m[i][col] / pv;
                    for j in 0..r {
                        let v = m[p][j];
                        m[i][j] -= f * v;
                    }
                }
            }
            row += 1;
        }
        debug_assert_eq!(row, r);
        // Invert the r × r submatrix on the pivot rows.
        let sub: Vec<Vec<Ratio<i64>>> = pivots
            .iter()
            .map(|&p| (0..r).map(|j| Ratio::from_integer(letters[j][p])).collect())
            .collect();
        let inv = invert(sub).ok_or_else(|| Error::MalformedExpr("singular letter matrix".into()))?;
        let den = inv
            .iter()
            .flatten()
            .fold(1i64, |acc, x| lcm(acc, *x.denom()));
        let adj = inv
            .iter()
            .map(|row| row.iter().map(|x| (x * den).to_integer()).collect())
            .collect();
        Ok(Decomposer {
            letters,
            pivots,
            adj,
            den,
        })
    }

    fn solve(&self, mu: &[i64]) -> Option<Vec<usize>> {
        let r = self.letters.len();
        let mut n = Vec::with_capacity(r);
        for j in 0..r {
            let num: i64 = (0..r).map(|k| self.adj[j][k] * mu[self.pivots[k]]).sum();
            if num % self.den != 0 || num < 0 {
                return None;
            }
            n.push(num / self.den);
        }
        for (i, &target) in mu.iter().enumerate() {
            let got: i64 = (0..r).map(|j| n[j] * self.letters[j][i]).sum();
            if got != target {
                return None;
            }
        }
        Some(n.into_iter().map(|x| x as usize).collect())
    }
}

fn invert(mut m: Vec<Vec<Ratio<i64>>>) -> Option<Vec<Vec<Ratio<i64>>>> {
    let n = m.len();
    let mut inv: Vec<Vec<Ratio<i64>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Ratio::one() } else { Ratio::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, p);
        inv.swap(col, p);
        let pv = m[col][col];
        for k in 0..n {
            m[col][k] /= pv;
            inv[col][k] /= pv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for k in 0..n {
                    let (a, b) = (m[col][k], inv[col][k]);
                    m[r][k] -= f * a;
                    inv[r][k] -= f * b;
                }
            }
        }
    }
    Some(inv)
}

fn lcm(a: i64, b: i64) -> i64 {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// `Σ_terms ±t^a V_μ · Π 1/(1 − t^k V_L)` with Cartan-product semantics,
/// optionally times the periodic factor `Σ_{j∈Z} t^{period·j}`.
#[derive(Clone, Debug)]
pub struct CartanExpr {
    diagram: DynkinDiagram,
    terms: Vec<Term>,
    factors: Vec<Factor>,
    period: Option<i64>,
    groups: Vec<LetterGroup>,
    free_degrees: Vec<i64>,
    decomposer: Decomposer,
}

impl CartanExpr {
    pub fn new(
        diagram: &DynkinDiagram,
        terms: Vec<Term>,
        factors: Vec<Factor>,
        period: Option<i64>,
    ) -> Result<Self> {
        let bad = |s: &str| Err(Error::MalformedExpr(s.to_string()));
        for t in &terms {
            diagram.check_weight(&t.weight_shift)?;
            if t.sign != 1 && t.sign != -1 {
                return bad("term sign must be ±1");
            }
        }
        let mut groups: Vec<LetterGroup> = Vec::new();
        let mut free_degrees = Vec::new();
        for f in &factors {
            diagram.check_weight(&f.letter)?;
            if f.letter.is_zero() {
                if f.degree == 0 {
                    return bad("factor 1/(1 - 1) diverges");
                }
                free_degrees.push(f.degree);
            } else if let Some(g) = groups.iter_mut().find(|g| g.letter == f.letter) {
                g.degrees.push(f.degree);
            } else {
                groups.push(LetterGroup {
                    letter: f.letter.clone(),
                    degrees: vec![f.degree],
                });
            }
        }
        if free_degrees.windows(2).any(|w| (w[0] > 0) != (w[1] > 0)) {
            return bad("pure t-factors must all have degrees of the same sign");
        }
        if let Some(p) = period {
            if p <= 0 {
                return bad("period must be positive");
            }
            if !free_degrees.is_empty() {
                return bad("a periodic expression cannot carry pure t-factors");
            }
        }
        let decomposer = Decomposer::new(
            groups.iter().map(|g| g.letter.coords().to_vec()).collect(),
            diagram.rank(),
        )?;
        Ok(CartanExpr {
            diagram: diagram.clone(),
            terms,
            factors,
            period,
            groups,
            free_degrees,
            decomposer,
        })
    }

    /// `t^degree V_weight` over the given factors.
    pub fn monomial_over(
        diagram: &DynkinDiagram,
        degree: i64,
        weight: Weight,
        factors: Vec<Factor>,
        period: Option<i64>,
    ) -> Result<Self> {
        let term = Term {
            sign: 1,
            degree_shift: degree,
            weight_shift: weight,
        };
        Self::new(diagram, vec![term], factors, period)
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn period(&self) -> Option<i64> {
        self.period
    }

    /// Distinct nonzero letters.
    pub fn letters(&self) -> Vec<Weight> {
        self.groups.iter().map(|g| g.letter.clone()).collect()
    }

    fn rebuild(&self, terms: Vec<Term>, factors: Vec<Factor>) -> Self {
        Self::new(&self.diagram, terms, factors, self.period)
            .expect("transformations preserve well-formedness")
    }

    pub fn negate(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                sign: -t.sign,
                ..t.clone()
            })
            .collect();
        self.rebuild(terms, self.factors.clone())
    }

    /// Multiplies by `t^s`.
    pub fn shift(&self, s: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                degree_shift: t.degree_shift + s,
                ..t.clone()
            })
            .collect();
        self.rebuild(terms, self.factors.clone())
    }

    /// `(λ, d) ↦ (λ*, −d)`: negates every degree and dualizes every weight.
    pub fn dual(&self) -> Self {
        let d = &self.diagram;
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                sign: t.sign,
                degree_shift: -t.degree_shift,
                weight_shift: d.dualize(&t.weight_shift).expect("rank checked"),
            })
            .collect();
        let factors = self
            .factors
            .iter()
            .map(|f| Factor {
                degree: -f.degree,
                letter: d.dualize(&f.letter).expect("rank checked"),
            })
            .collect();
        self.rebuild(terms, factors)
    }

    /// Drops factors equal to `f` (one occurrence each), used to pass from a
    /// ring to a localization.
    pub fn without_factor(&self, f: &Factor) -> Self {
        let mut factors = self.factors.clone();
        if let Some(i) = factors.iter().position(|g| g == f) {
            factors.remove(i);
        }
        self.rebuild(self.terms.clone(), factors)
    }

    pub fn with_period(&self, period: Option<i64>) -> Result<Self> {
        Self::new(&self.diagram, self.terms.clone(), self.factors.clone(), period)
    }

    /// Merges numerators when both sides share factors and period.
    pub fn try_add(&self, other: &CartanExpr) -> Option<Self> {
        if self.diagram.name() != other.diagram.name()
            || self.period != other.period
            || !same_multiset(&self.factors, &other.factors)
        {
            return None;
        }
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Some(self.rebuild(terms, self.factors.clone()))
    }

    /// All degrees in which `V_λ` occurs, with multiplicities.
    pub fn weight_slice(&self, lambda: &Weight) -> Result<Slice> {
        self.diagram.check_weight(lambda)?;
        let mut numerator = LaurentPoly::zero();
        for t in &self.terms {
            let mu: Vec<i64> = lambda
                .coords()
                .iter()
                .zip(t.weight_shift.coords())
                .map(|(a, b)| a - b)
                .collect();
            let Some(n) = self.decomposer.solve(&mu) else {
                continue;
            };
            let mut poly = LaurentPoly::monomial(t.sign, t.degree_shift);
            for (g, &nj) in self.groups.iter().zip(&n) {
                poly = &poly * &composition_poly(&g.degrees, nj);
            }
            numerator += &poly;
        }
        if let Some(p) = self.period {
            numerator = numerator.fold(p);
        }
        Ok(Slice {
            numerator,
            free_degrees: self.free_degrees.clone(),
            period: self.period,
        })
    }

    pub fn coeff(&self, lambda: &Weight, d: i64) -> Result<i64> {
        Ok(self.weight_slice(lambda)?.coefficient(d))
    }

    /// Weights `shift + Σ n_j L_j` with every `n_j ≤ bound`, over all terms.
    pub fn candidate_weights(&self, bound: u32) -> BTreeSet<Weight> {
        let letters = self.letters();
        let mut out = BTreeSet::new();
        for t in &self.terms {
            let mut n = vec![0u32; letters.len()];
            loop {
                let mut w = t.weight_shift.clone();
                for (l, &k) in letters.iter().zip(&n) {
                    w = &w + &l.scale(k as i64);
                }
                out.insert(w);
                let mut i = 0;
                while i < n.len() {
                    n[i] += 1;
                    if n[i] <= bound {
                        break;
                    }
                    n[i] = 0;
                    i += 1;
                }
                if i == n.len() {
                    break;
                }
            }
        }
        out
    }

    /// Whether every degree slice involves finitely many weights.
    pub fn has_finite_degree_slices(&self) -> bool {
        if self.period.is_some() {
            return false;
        }
        let signs: BTreeSet<bool> = self.factors.iter().map(|f| f.degree > 0).collect();
        self.factors.iter().all(|f| f.degree != 0) && signs.len() <= 1
    }

    /// Letter bound large enough to reach every weight in degree `d` when
    /// slices are finite.
    pub(crate) fn auto_bound(&self, d: i64) -> Option<u32> {
        if !self.has_finite_degree_slices() {
            return None;
        }
        let kmin = self
            .factors
            .iter()
            .map(|f| f.degree.abs())
            .min()
            .unwrap_or(1);
        let reach = self
            .terms
            .iter()
            .map(|t| (d - t.degree_shift).abs())
            .max()
            .unwrap_or(0);
        Some((reach / kmin) as u32)
    }
}

fn same_multiset(a: &[Factor], b: &[Factor]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let key = |f: &Factor| (f.degree, f.letter.clone());
    let mut x: Vec<_> = a.iter().map(key).collect();
    let mut y: Vec<_> = b.iter().map(key).collect();
    x.sort();
    y.sort();
    x == y
}

impl fmt::Display for CartanExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, t) in self.terms.iter().enumerate() {
            let s = if t.sign < 0 { "-" } else if i > 0 { "+" } else { "" };
            write!(f, "{s}t^{}V{}", t.degree_shift, t.weight_shift)?;
        }
        write!(f, ")")?;
        for fac in &self.factors {
            write!(f, "/(1-t^{}V{})", fac.degree, fac.letter)?;
        }
        if let Some(p) = self.period {
            write!(f, "·Σt^{{{p}Z}}")?;
        }
        Ok(())
    }
}

/// A finite signed sum of [`CartanExpr`] parts.
#[derive(Clone, Debug)]
pub struct Character {
    diagram: DynkinDiagram,
    parts: Vec<CartanExpr>,
}

impl Character {
    pub fn new(diagram: &DynkinDiagram, parts: Vec<CartanExpr>) -> Result<Self> {
        for p in &parts {
            if p.diagram.name() != diagram.name() {
                return Err(Error::IncompatibleDiagrams(
                    diagram.name().into(),
                    p.diagram.name().into(),
                ));
            }
        }
        let mut c = Character {
            diagram: diagram.clone(),
            parts: Vec::new(),
        };
        for p in parts {
            c.push(p);
        }
        Ok(c)
    }

    pub fn zero(diagram: &DynkinDiagram) -> Self {
        Character {
            diagram: diagram.clone(),
            parts: Vec::new(),
        }
    }

    fn push(&mut self, p: CartanExpr) {
        for q in &mut self.parts {
            if let Some(merged) = q.try_add(&p) {
                *q = merged;
                return;
            }
        }
        self.parts.push(p);
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn parts(&self) -> &[CartanExpr] {
        &self.parts
    }

    fn check(&self, other: &Character) -> Result<()> {
        if self.diagram.name() != other.diagram.name() {
            return Err(Error::IncompatibleDiagrams(
                self.diagram.name().into(),
                other.diagram.name().into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Character) -> Result<Character> {
        self.check(other)?;
        let mut out = self.clone();
        for p in &other.parts {
            out.push(p.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Character) -> Result<Character> {
        self.add(&other.negate())
    }

    pub fn negate(&self) -> Character {
        self.map(CartanExpr::negate)
    }

    pub fn shift(&self, s: i64) -> Character {
        self.map(|p| p.shift(s))
    }

    pub fn dual(&self) -> Character {
        self.map(CartanExpr::dual)
    }

    fn map(&self, f: impl Fn(&CartanExpr) -> CartanExpr) -> Character {
        Character {
            diagram: self.diagram.clone(),
            parts: self.parts.iter().map(f).collect(),
        }
    }

    pub fn weight_slices(&self, lambda: &Weight) -> Result<Vec<Slice>> {
        self.parts.iter().map(|p| p.weight_slice(lambda)).collect()
    }

    /// The combined slice when it is finite; `None` when some part leaves
    /// infinitely many degrees (free t-factors or a period).
    pub fn finite_slice(&self, lambda: &Weight) -> Result<Option<LaurentPoly>> {
        let mut total = LaurentPoly::zero();
        for s in self.weight_slices(lambda)? {
            if !s.is_finite() {
                return Ok(None);
            }
            total += &s.numerator;
        }
        Ok(Some(total))
    }

    pub fn coeff(&self, lambda: &Weight, d: i64) -> Result<i64> {
        Ok(self.coefficients(lambda, d, d)?[0])
    }

    pub fn coefficients(&self, lambda: &Weight, lo: i64, hi: i64) -> Result<Vec<i64>> {
        let mut out = vec![0; (hi - lo + 1).max(0) as usize];
        for s in self.weight_slices(lambda)? {
            for (o, c) in out.iter_mut().zip(s.coefficients(lo, hi)) {
                *o += c;
            }
        }
        Ok(out)
    }

    pub fn candidate_weights(&self, bound: u32) -> BTreeSet<Weight> {
        self.parts
            .iter()
            .flat_map(|p| p.candidate_weights(bound))
            .collect()
    }

    pub(crate) fn auto_bound(&self, d: i64) -> Option<u32> {
        self.parts
            .iter()
            .map(|p| p.auto_bound(d))
            .try_fold(0, |acc, b| b.map(|b| acc.max(b)))
    }
}

impl From<CartanExpr> for Character {
    fn from(e: CartanExpr) -> Self {
        Character {
            diagram: e.diagram.clone(),
            parts: vec![e],
        }
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> DynkinDiagram {
        DynkinDiagram::c(3)
    }

    fn fac(degree: i64, letter: &[i64]) -> Factor {
        Factor {
            degree,
            letter: Weight::from(letter),
        }
    }

    #[test]
    fn compositions() {
        let p = composition_poly(&[-2, 2], 2);
        assert_eq!(p, &(&LaurentPoly::monomial(1, -4) + &LaurentPoly::monomial(1, 0)) + &LaurentPoly::monomial(1, 4));
        assert_eq!(composition_poly(&[0], 5), LaurentPoly::one());
        assert_eq!(composition_poly(&[1, 3], 1).coeff(3), 1);
        assert_eq!(partition_counts(&[1, 2], 4), vec![1, 1, 2, 2, 3]);
    }

    #[test]
    fn dependent_letters_are_rejected() {
        let d = c3();
        let e = CartanExpr::monomial_over(&d, 0, Weight::zero(3), vec![fac(1, &[1, 0, 0]), fac(2, &[2, 0, 0])], None);
        assert!(matches!(e, Err(Error::MalformedExpr(_))));
        let e = CartanExpr::monomial_over(&d, 0, Weight::zero(3), vec![fac(1, &[0, 0, 0]), fac(-2, &[0, 0, 0])], None);
        assert!(e.is_err());
        let e = CartanExpr::monomial_over(&d, 0, Weight::zero(3), vec![fac(4, &[0, 0, 0])], Some(4));
        assert!(e.is_err());
    }

    #[test]
    fn counting_matches_brute_force() {
        let d = c3();
        let e = CartanExpr::monomial_over(
            &d,
            0,
            Weight::zero(3),
            vec![fac(1, &[0, 0, 1]), fac(3, &[0, 0, 1]), fac(2, &[2, 0, 0]), fac(4, &[0, 0, 0])],
            None,
        )
        .unwrap();
        for a in 0..4i64 {
            for b in 0..3i64 {
                let lam = Weight::new(vec![2 * b, 0, a]);
                for deg in 0..14 {
                    let mut brute = 0;
                    for x in 0..=a {
                        for z in 0..=deg {
                            if x + 3 * (a - x) + 2 * b + 4 * z == deg {
                                brute += 1;
                            }
                        }
                    }
                    assert_eq!(e.coeff(&lam, deg).unwrap(), brute, "{lam} {deg}");
                }
            }
        }
        assert_eq!(e.coeff(&Weight::new(vec![1, 0, 0]), 1).unwrap(), 0);
    }

    #[test]
    fn periodic_slices_fold() {
        let d = c3();
        let e = CartanExpr::monomial_over(&d, 1, Weight::zero(3), vec![fac(1, &[0, 0, 1])], Some(4)).unwrap();
        let s = e.weight_slice(&Weight::zero(3)).unwrap();
        assert_eq!(s.numerator, LaurentPoly::monomial(1, 1));
        assert_eq!(s.coefficients(-7, 1), vec![1, 0, 0, 0, 1, 0, 0, 0, 1]);
        assert!(!s.is_finite());
    }

    #[test]
    fn negative_free_degrees() {
        let d = c3();
        let e = CartanExpr::monomial_over(&d, -2, Weight::zero(3), vec![fac(-4, &[0, 0, 0])], None).unwrap();
        assert_eq!(e.weight_slice(&Weight::zero(3)).unwrap().coefficients(-10, 0), vec![1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0]);
    }

    #[test]
    fn dual_and_shift() {
        let d = DynkinDiagram::a(5);
        let e = CartanExpr::monomial_over(&d, 3, Weight::fundamental(5, 1), vec![fac(2, &[0, 0, 1, 0, 0])], None).unwrap();
        let du = e.dual();
        assert_eq!(du.coeff(&Weight::fundamental(5, 5), -3).unwrap(), 1);
        assert_eq!(du.coeff(&Weight::new(vec![0, 0, 1, 0, 1]), -5).unwrap(), 1);
        assert_eq!(e.shift(2).coeff(&Weight::fundamental(5, 1), 5).unwrap(), 1);
        let ch = Character::from(e.clone()).sub(&Character::from(e)).unwrap();
        assert_eq!(ch.parts().len(), 1);
        assert_eq!(ch.coeff(&Weight::fundamental(5, 1), 3).unwrap(), 0);
    }
}
