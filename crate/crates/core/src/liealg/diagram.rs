use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Zero};

use super::types::SimpleType;
use super::weight::{Root, Weight};
use crate::error::{Error, Result};

/// A (possibly disconnected) Dynkin diagram.
///
/// Nodes are numbered from 1 in every public method, following the node
/// order the diagram was built with. The named diagrams `C3`, `A5`, `D6` and
/// `E7` use the numbering of the subexceptional series: `C3` has its long
/// simple root at node 3, `D6` attaches nodes 5 and 6 to node 4, and `E7` is
/// the chain 1–…–6 with node 7 attached to node 3. Other names use Bourbaki
/// numbering.
///
/// The graph is stored as directed multiplicities `m(i→j)`: reflecting at
/// node `i` adds `m(i→j)` times the coefficient of `i` to neighbour `j`.
#[derive(Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    name: String,
    /// Labels of the nodes in the diagram this one was cut from.
    labels: Vec<usize>,
    lengths: Vec<i64>,
    mult: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
    duality: Vec<usize>,
}

impl fmt::Debug for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DynkinDiagram")
            .field("name", &self.name)
            .field("labels", &self.labels)
            .field("lengths", &self.lengths)
            .finish()
    }
}

impl DynkinDiagram {
    /// Builds a diagram from root-length symmetrizers `d_i` and undirected
    /// bonds `(i, j, k)` (zero based, `k` edges between `i` and `j`).
    pub fn from_bonds(
        name: impl Into<String>,
        lengths: Vec<i64>,
        bonds: &[(usize, usize, i64)],
    ) -> Result<Self> {
        let name = name.into();
        let n = lengths.len();
        let malformed = |msg: String| Error::MalformedExpr(format!("diagram {name}: {msg}"));
        if lengths.iter().any(|&d| !(1..=3).contains(&d)) {
            return Err(malformed("root lengths must lie in 1..=3".into()));
        }
        let mut mult = vec![vec![0i64; n]; n];
        for &(i, j, k) in bonds {
            if i >= n || j >= n || i == j {
                return Err(malformed(format!("bad bond ({i}, {j})")));
            }
            if !(1..=3).contains(&k) {
                return Err(malformed(format!("bond multiplicity {k}")));
            }
            let (di, dj) = (lengths[i], lengths[j]);
            let (lo, hi) = (di.min(dj), di.max(dj));
            if hi != k * lo {
                return Err(malformed(format!(
                    "bond ({i}, {j}) of multiplicity {k} joins lengths {di} and {dj}"
                )));
            }
            // (α_i, α_j) = -k·min(d_i, d_j) and m(i→j) = -(α_i, α_j) / d_j.
            mult[i][j] = k * lo / dj;
            mult[j][i] = k * lo / di;
        }
        let mut diagram = DynkinDiagram {
            name,
            labels: (1..=n).collect(),
            lengths,
            mult,
            positive_roots: Vec::new(),
            duality: Vec::new(),
        };
        diagram.positive_roots = diagram.generate_positive_roots();
        diagram.duality = diagram.compute_duality();
        Ok(diagram)
    }

    pub fn a(n: usize) -> Self {
        let bonds: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1, 1)).collect();
        Self::from_bonds(format!("A{n}"), vec![1; n], &bonds).expect("valid A_n")
    }

    /// `B_n` with the short simple root at node `n`.
    pub fn b(n: usize) -> Self {
        let mut lengths = vec![2; n];
        lengths[n - 1] = 1;
        let mut bonds: Vec<_> = (0..n - 1).map(|i| (i, i + 1, 1)).collect();
        bonds[n - 2].2 = 2;
        Self::from_bonds(format!("B{n}"), lengths, &bonds).expect("valid B_n")
    }

    /// `C_n` with the long simple root at node `n`.
    pub fn c(n: usize) -> Self {
        let mut lengths = vec![1; n];
        lengths[n - 1] = 2;
        let mut bonds: Vec<_> = (0..n - 1).map(|i| (i, i + 1, 1)).collect();
        bonds[n - 2].2 = 2;
        Self::from_bonds(format!("C{n}"), lengths, &bonds).expect("valid C_n")
    }

    /// `D_n`: chain `1–…–(n-2)` with nodes `n-1` and `n` attached to `n-2`.
    pub fn d(n: usize) -> Self {
        let mut bonds: Vec<_> = (0..n - 2).map(|i| (i, i + 1, 1)).collect();
        bonds.pop();
        bonds.push((n - 3, n - 2, 1));
        bonds.push((n - 3, n - 1, 1));
        Self::from_bonds(format!("D{n}"), vec![1; n], &bonds).expect("valid D_n")
    }

    /// `E6` in Bourbaki numbering.
    pub fn e6() -> Self {
        let bonds = [(0, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (1, 3, 1)];
        Self::from_bonds("E6", vec![1; 6], &bonds).expect("valid E6")
    }

    /// `E7`: chain `1–2–3–4–5–6` with node 7 attached to node 3.
    pub fn e7() -> Self {
        let bonds = [
            (0, 1, 1),
            (1, 2, 1),
            (2, 3, 1),
            (3, 4, 1),
            (4, 5, 1),
            (6, 2, 1),
        ];
        Self::from_bonds("E7", vec![1; 7], &bonds).expect("valid E7")
    }

    /// `E8` in Bourbaki numbering.
    pub fn e8() -> Self {
        let bonds = [
            (0, 2, 1),
            (2, 3, 1),
            (3, 4, 1),
            (4, 5, 1),
            (5, 6, 1),
            (6, 7, 1),
            (1, 3, 1),
        ];
        Self::from_bonds("E8", vec![1; 8], &bonds).expect("valid E8")
    }

    pub fn f4() -> Self {
        let bonds = [(0, 1, 1), (1, 2, 2), (2, 3, 1)];
        Self::from_bonds("F4", vec![2, 2, 1, 1], &bonds).expect("valid F4")
    }

    /// `G2` with the short root at node 1.
    pub fn g2() -> Self {
        Self::from_bonds("G2", vec![1, 3], &[(0, 1, 3)]).expect("valid G2")
    }

    /// Looks a diagram up by name: `A5`, `C3`, `D6`, `E7`, `B4`, `F4`, ...
    pub fn named(name: &str) -> Result<Self> {
        let unknown = || Error::UnknownDiagram(name.to_string());
        let ty: SimpleType = name.parse().map_err(|_| unknown())?;
        Ok(match ty {
            SimpleType::A(n) => Self::a(n),
            SimpleType::B(n) => Self::b(n),
            SimpleType::C(n) => Self::c(n),
            SimpleType::D(n) => Self::d(n),
            SimpleType::E(6) => Self::e6(),
            SimpleType::E(7) => Self::e7(),
            SimpleType::E(8) => Self::e8(),
            SimpleType::E(_) => return Err(unknown()),
            SimpleType::F4 => Self::f4(),
            SimpleType::G2 => Self::g2(),
        })
    }

    /// The full subdiagram on `nodes` (one based), keeping induced edges.
    /// Labels of the result refer back to this diagram's labels.
    pub fn subdiagram(&self, nodes: &[usize]) -> Result<Self> {
        for &v in nodes {
            self.check_node(v)?;
        }
        let idx: Vec<usize> = nodes.iter().map(|v| v - 1).collect();
        let mult: Vec<Vec<i64>> = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| self.mult[i][j]).collect())
            .collect();
        let mut sub = DynkinDiagram {
            name: String::new(),
            labels: idx.iter().map(|&i| self.labels[i]).collect(),
            lengths: idx.iter().map(|&i| self.lengths[i]).collect(),
            mult,
            positive_roots: Vec::new(),
            duality: Vec::new(),
        };
        sub.positive_roots = sub.generate_positive_roots();
        sub.duality = sub.compute_duality();
        sub.name = sub.type_name();
        Ok(sub)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.lengths.len()
    }

    /// Node labels relative to the diagram this one was cut from.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn lengths(&self) -> &[i64] {
        &self.lengths
    }

    /// `m(i→j)` for one-based nodes.
    pub fn multiplicity(&self, i: usize, j: usize) -> i64 {
        self.mult[i - 1][j - 1]
    }

    /// Cartan matrix `A[i][j] = <α_i, α_j^∨>`; row `i` is `α_i` in
    /// fundamental-weight coordinates.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { 2 } else { -self.mult[i][j] })
                    .collect()
            })
            .collect()
    }

    pub fn neighbors(&self, node: usize) -> Vec<usize> {
        (1..=self.rank())
            .filter(|&j| j != node && self.mult[node - 1][j - 1] != 0)
            .collect()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// `ρ`, the all-ones weight.
    pub fn rho(&self) -> Weight {
        Weight::new(vec![1; self.rank()])
    }

    pub fn check_node(&self, node: usize) -> Result<()> {
        if node == 0 || node > self.rank() {
            return Err(Error::NodeOutOfRange {
                diagram: self.name.clone(),
                node,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                diagram: self.name.clone(),
                rank: self.rank(),
                got: w.rank(),
            });
        }
        Ok(())
    }

    /// Simple reflection at a one-based node: the node's coefficient `c` is
    /// added to each neighbour `j` with multiplicity `m(i→j)`, then negated.
    pub fn simple_reflection(&self, node: usize, w: &Weight) -> Result<Weight> {
        self.check_node(node)?;
        self.check_weight(w)?;
        let mut out = w.clone();
        self.reflect_coords(node - 1, out.coords_mut());
        Ok(out)
    }

    /// In-place reflection at a zero-based index.
    pub(crate) fn reflect_coords(&self, i: usize, coords: &mut [i64]) {
        let c = coords[i];
        if c == 0 {
            return;
        }
        for (j, m) in self.mult[i].iter().enumerate() {
            if *m != 0 {
                coords[j] += m * c;
            }
        }
        coords[i] = -c;
    }

    fn generate_positive_roots(&self) -> Vec<Root> {
        let n = self.rank();
        let cartan = self.cartan_matrix();
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let r = Root::simple(n, i).simple_coords().to_vec();
            seen.insert(r.clone());
            queue.push_back(r);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                // <β, α_i^∨> = Σ_j c_j A[j][i]
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                if pairing == 0 {
                    continue;
                }
                let mut image = beta.clone();
                image[i] -= pairing;
                if image.iter().all(|&c| c >= 0) && image.iter().any(|&c| c > 0) && seen.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
        }
        let mut roots: Vec<Root> = seen.into_iter().map(Root::new).collect();
        roots.sort_by(|a, b| {
            a.height()
                .cmp(&b.height())
                .then_with(|| a.simple_coords().cmp(b.simple_coords()))
        });
        roots
    }

    /// Moves `coords` into the dominant chamber by linear simple reflections.
    pub(crate) fn dominant_representative(&self, coords: &mut [i64]) {
        while let Some(i) = coords.iter().position(|&c| c < 0) {
            self.reflect_coords(i, coords);
        }
    }

    fn compute_duality(&self) -> Vec<usize> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = -1;
                self.dominant_representative(&mut v);
                v.iter()
                    .position(|&c| c == 1)
                    .expect("-w0 permutes fundamental weights")
            })
            .collect()
    }

    /// The permutation `i ↦ σ(i)` (zero based) with `-w0·ω_i = ω_σ(i)`.
    pub fn duality_permutation(&self) -> &[usize] {
        &self.duality
    }

    /// `-w0·λ`, the highest weight of the dual representation.
    pub fn dualize(&self, w: &Weight) -> Result<Weight> {
        self.check_weight(w)?;
        let mut out = vec![0; self.rank()];
        for (i, &c) in w.coords().iter().enumerate() {
            out[self.duality[i]] = c;
        }
        Ok(Weight::new(out))
    }

    /// `(μ, α) = Σ_j c_j d_j μ_j` for `α = Σ_j c_j α_j`.
    pub fn pair_with_root(&self, w: &[i64], root: &Root) -> i64 {
        root.simple_coords()
            .iter()
            .zip(&self.lengths)
            .zip(w)
            .map(|((c, d), m)| c * d * m)
            .sum()
    }

    /// Weyl's dimension formula for a dominant weight.
    pub fn weyl_dimension(&self, w: &Weight) -> Result<BigUint> {
        self.check_weight(w)?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.coords().to_vec()));
        }
        let shifted: Vec<i64> = w.coords().iter().map(|c| c + 1).collect();
        let rho = vec![1; self.rank()];
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for root in &self.positive_roots {
            num *= self.pair_with_root(&shifted, root) as u64;
            den *= self.pair_with_root(&rho, root) as u64;
        }
        debug_assert!((&num % &den).is_zero());
        Ok(num / den)
    }

    /// Connected components as sorted lists of one-based nodes.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            let mut nodes = Vec::new();
            comp[start] = id;
            while let Some(v) = stack.pop() {
                nodes.push(v + 1);
                for u in 0..n {
                    if self.mult[v][u] != 0 && comp[u] == usize::MAX {
                        comp[u] = id;
                        stack.push(u);
                    }
                }
            }
            nodes.sort_unstable();
            out.push(nodes);
        }
        out
    }

    /// Cartan–Killing types of the connected components.
    pub fn component_types(&self) -> Vec<SimpleType> {
        self.components().iter().map(|c| self.classify(c)).collect()
    }

    /// E.g. `"A2xA2"`; `"A0"` for the empty diagram.
    pub fn type_name(&self) -> String {
        let types = self.component_types();
        if types.is_empty() {
            return "A0".into();
        }
        types
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn weyl_group_order(&self) -> BigUint {
        self.component_types()
            .into_iter()
            .fold(BigUint::one(), |acc, t| acc * t.weyl_group_order())
    }

    fn bond(&self, i: usize, j: usize) -> i64 {
        self.mult[i][j].max(self.mult[j][i])
    }

    fn degree(&self, i: usize, nodes: &[usize]) -> usize {
        nodes.iter().filter(|&&v| v - 1 != i && self.mult[i][v - 1] != 0).count()
    }

    fn classify(&self, nodes: &[usize]) -> SimpleType {
        let n = nodes.len();
        if n == 1 {
            return SimpleType::A(1);
        }
        let idx: Vec<usize> = nodes.iter().map(|v| v - 1).collect();
        let mut max_bond = 0;
        let mut multiple_edge = None;
        for &i in &idx {
            for &j in &idx {
                let b = self.bond(i, j);
                if i < j && b > max_bond {
                    max_bond = b;
                }
                if i < j && b > 1 {
                    multiple_edge = Some((i, j));
                }
            }
        }
        match max_bond {
            3 => SimpleType::G2,
            2 => {
                let (i, j) = multiple_edge.expect("double edge present");
                if n == 2 {
                    return SimpleType::B(2);
                }
                let (di, dj) = (self.degree(i, nodes), self.degree(j, nodes));
                if n == 4 && di == 2 && dj == 2 {
                    return SimpleType::F4;
                }
                let leaf = if di == 1 { i } else { j };
                let other = if leaf == i { j } else { i };
                if self.lengths[leaf] < self.lengths[other] {
                    SimpleType::B(n)
                } else {
                    SimpleType::C(n)
                }
            }
            _ => {
                let branch = idx.iter().copied().find(|&i| self.degree(i, nodes) == 3);
                let Some(b) = branch else {
                    return SimpleType::A(n);
                };
                let mut arms: Vec<usize> = idx
                    .iter()
                    .copied()
                    .filter(|&u| self.mult[b][u] != 0)
                    .map(|start| {
                        let (mut prev, mut cur, mut len) = (b, start, 1);
                        loop {
                            let next = idx
                                .iter()
                                .copied()
                                .find(|&w| w != prev && w != cur && self.mult[cur][w] != 0);
                            match next {
                                Some(w) => {
                                    prev = cur;
                                    cur = w;
                                    len += 1;
                                }
                                None => break len,
                            }
                        }
                    })
                    .collect();
                arms.sort_unstable();
                match (arms[0], arms[1], arms[2]) {
                    (1, 1, k) => SimpleType::D(k + 3),
                    (1, 2, 2) => SimpleType::E(6),
                    (1, 2, 3) => SimpleType::E(7),
                    (1, 2, 4) => SimpleType::E(8),
                    other => unreachable!("not a finite-type diagram: arms {other:?}"),
                }
            }
        }
    }

    /// Gram matrix of the fundamental weights, scaled to integers:
    /// `(ω_i, ω_j) = gram[i][j] / denom`, normalized so `(α_i, α_i) = 2 d_i`.
    pub fn weight_gram(&self) -> (Vec<Vec<i64>>, i64) {
        let n = self.rank();
        // G = diag(d) · (Aᵀ)⁻¹
        let cartan = self.cartan_matrix();
        let mut m: Vec<Vec<Ratio<i64>>> = (0..n)
            .map(|i| (0..n).map(|j| Ratio::from_integer(cartan[j][i])).collect())
            .collect();
        let mut inv: Vec<Vec<Ratio<i64>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Ratio::one() } else { Ratio::zero() })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !m[r][col].is_zero())
                .expect("Cartan matrix is invertible");
            m.swap(col, pivot);
            inv.swap(col, pivot);
            let p = m[col][col];
            for k in 0..n {
                m[col][k] /= p;
                inv[col][k] /= p;
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
        let gram: Vec<Vec<Ratio<i64>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| inv[i][j] * Ratio::from_integer(self.lengths[i]))
                    .collect()
            })
            .collect();
        let denom = gram
            .iter()
            .flatten()
            .fold(1i64, |acc, r| num_integer_lcm(acc, *r.denom()));
        let scaled = gram
            .iter()
            .map(|row| {
                row.iter()
                    .map(|r| (r * Ratio::from_integer(denom)).to_integer())
                    .collect()
            })
            .collect();
        (scaled, denom)
    }
}

fn num_integer_lcm(a: i64, b: i64) -> i64 {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight::from(v)
    }

    #[test]
    fn root_counts() {
        for (name, n) in [("C3", 9), ("A5", 15), ("D6", 30), ("E7", 63), ("E6", 36), ("A2", 3), ("E8", 120), ("F4", 24), ("G2", 6), ("B4", 16)] {
            assert_eq!(DynkinDiagram::named(name).unwrap().positive_roots().len(), n, "{name}");
        }
    }

    #[test]
    fn reflections_follow_edge_multiplicities() {
        let c3 = DynkinDiagram::c(3);
        assert_eq!(c3.simple_reflection(3, &w(&[4, 1, -2])).unwrap(), w(&[4, -3, 2]));
        assert_eq!(c3.multiplicity(3, 2), 2);
        assert_eq!(c3.multiplicity(2, 3), 1);
        let a3 = DynkinDiagram::a(3);
        assert_eq!(a3.simple_reflection(2, &w(&[1, 2, 3])).unwrap(), w(&[3, -2, 5]));
        // double edge directed toward the right node
        let b3 = DynkinDiagram::b(3);
        assert_eq!(b3.simple_reflection(2, &w(&[1, 2, 3])).unwrap(), w(&[3, -2, 7]));
        assert!(c3.simple_reflection(4, &w(&[0, 0, 0])).is_err());
        assert!(c3.simple_reflection(1, &w(&[0, 0])).is_err());
    }

    #[test]
    fn cartan_rows_are_simple_roots() {
        let c3 = DynkinDiagram::c(3);
        assert_eq!(c3.cartan_matrix(), vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]);
    }

    #[test]
    fn dimensions() {
        let cases = [("C3", vec![0, 0, 1], 14u32), ("A5", vec![0, 0, 1, 0, 0], 20), ("D6", vec![0, 0, 0, 0, 1, 0], 32), ("E7", vec![0, 0, 0, 0, 0, 1, 0], 56), ("E7", vec![1, 0, 0, 0, 0, 0, 0], 133), ("C3", vec![2, 0, 0], 21), ("D6", vec![0, 1, 0, 0, 0, 0], 66), ("A5", vec![1, 0, 0, 0, 1], 35), ("E6", vec![1, 0, 0, 0, 0, 0], 27), ("E8", vec![0, 0, 0, 0, 0, 0, 0, 1], 248), ("G2", vec![1, 0], 7), ("F4", vec![0, 0, 0, 1], 26)];
        for (name, wt, dim) in cases {
            let d = DynkinDiagram::named(name).unwrap();
            assert_eq!(d.weyl_dimension(&Weight::new(wt.clone())).unwrap(), BigUint::from(dim), "{name} {wt:?}");
        }
        let e7 = DynkinDiagram::e7();
        assert_eq!(e7.weyl_dimension(&Weight::zero(7)).unwrap(), BigUint::one());
        assert!(e7.weyl_dimension(&w(&[0, 0, 0, 0, 0, -1, 0])).is_err());
    }

    #[test]
    fn duality() {
        let a5 = DynkinDiagram::a(5);
        assert_eq!(a5.dualize(&Weight::fundamental(5, 1)).unwrap(), Weight::fundamental(5, 5));
        assert_eq!(a5.dualize(&Weight::fundamental(5, 3)).unwrap(), Weight::fundamental(5, 3));
        for name in ["C3", "D6", "E7"] {
            let d = DynkinDiagram::named(name).unwrap();
            let id: Vec<usize> = (0..d.rank()).collect();
            assert_eq!(d.duality_permutation(), id.as_slice(), "{name}");
        }
        let e6 = DynkinDiagram::e6();
        assert_eq!(e6.duality_permutation(), &[5, 1, 4, 3, 2, 0]);
    }

    #[test]
    fn classification_and_levis() {
        let e7 = DynkinDiagram::e7();
        let levi = e7.subdiagram(&[1, 2, 3, 4, 5, 7]).unwrap();
        assert_eq!(levi.name(), "E6");
        assert_eq!(levi.labels(), &[1, 2, 3, 4, 5, 7]);
        assert_eq!(DynkinDiagram::a(5).subdiagram(&[1, 2, 4, 5]).unwrap().name(), "A2xA2");
        assert_eq!(DynkinDiagram::c(3).subdiagram(&[1, 2]).unwrap().name(), "A2");
        assert_eq!(DynkinDiagram::d(6).subdiagram(&[1, 2, 3, 4, 6]).unwrap().name(), "A5");
        assert_eq!(DynkinDiagram::d(6).subdiagram(&[2, 3, 4, 5, 6]).unwrap().name(), "D5");
        assert_eq!(e7.type_name(), "E7");
        assert_eq!(DynkinDiagram::c(3).type_name(), "C3");
        assert_eq!(DynkinDiagram::b(3).type_name(), "B3");
        assert_eq!(DynkinDiagram::f4().type_name(), "F4");
        assert_eq!(DynkinDiagram::e8().type_name(), "E8");
        assert_eq!(e7.weyl_group_order(), BigUint::from(2_903_040u32));
    }

    #[test]
    fn gram_matrix_pairs_roots() {
        for name in ["C3", "A5", "D6", "E7", "G2"] {
            let d = DynkinDiagram::named(name).unwrap();
            let (g, den) = d.weight_gram();
            let a = d.cartan_matrix();
            let n = d.rank();
            // (α_i, α_i) = 2 d_i with α_i = row i of A.
            for i in 0..n {
                let mut s = 0;
                for j in 0..n {
                    for k in 0..n {
                        s += a[i][j] * g[j][k] * a[i][k];
                    }
                }
                assert_eq!(s, 2 * d.lengths()[i] * den, "{name}");
            }
        }
    }
}
