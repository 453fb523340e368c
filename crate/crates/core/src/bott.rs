//! The Borel–Weil–Bott dominance chase and maximal parabolics.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liealg::{DynkinDiagram, Weight};

/// Cohomology of an irreducible homogeneous bundle.
///
/// `Cohomology { length, weight }` means the only nonzero group is
/// `H^length`, the dual of the irreducible with highest weight `weight`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "lowercase")]
pub enum BottResult {
    Singular,
    Cohomology {
        #[serde(rename = "degree")]
        length: usize,
        weight: Weight,
    },
}

impl BottResult {
    pub fn is_singular(&self) -> bool {
        matches!(self, BottResult::Singular)
    }
}

/// One reflection of a chase: the node used and `μ = w(λ+ρ)` afterwards.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChaseStep {
    pub node: usize,
    pub shifted: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChaseTrace {
    pub start: Weight,
    pub steps: Vec<ChaseStep>,
    pub result: BottResult,
}

fn cap(diagram: &DynkinDiagram) -> usize {
    10 * diagram.positive_roots().len().max(1)
}

/// Runs the chase in place on `μ = λ + ρ`. Returns `Some(length)` with `μ`
/// left strictly dominant, or `None` when a zero coordinate shows up.
pub(crate) fn chase_shifted(diagram: &DynkinDiagram, mu: &mut [i64]) -> Result<Option<usize>> {
    let limit = cap(diagram);
    let mut count = 0;
    loop {
        if mu.contains(&0) {
            return Ok(None);
        }
        let Some(i) = mu.iter().position(|&c| c < 0) else {
            return Ok(Some(count));
        };
        if count >= limit {
            return Err(Error::IterationCap(limit));
        }
        diagram.reflect_coords(i, mu);
        count += 1;
    }
}

/// Reflects `λ + ρ` at the smallest negative node until it is strictly
/// dominant (cohomology in degree = number of steps) or has a zero
/// coordinate (all cohomology vanishes).
pub fn bott_chase(diagram: &DynkinDiagram, lambda: &Weight) -> Result<BottResult> {
    diagram.check_weight(lambda)?;
    let mut mu: Vec<i64> = lambda.coords().iter().map(|c| c + 1).collect();
    Ok(match chase_shifted(diagram, &mut mu)? {
        None => BottResult::Singular,
        Some(length) => BottResult::Cohomology {
            length,
            weight: Weight::new(mu.iter().map(|c| c - 1).collect()),
        },
    })
}

/// Same as [`bott_chase`], recording every intermediate `w(λ+ρ)`.
pub fn bott_trace(diagram: &DynkinDiagram, lambda: &Weight) -> Result<ChaseTrace> {
    diagram.check_weight(lambda)?;
    let limit = cap(diagram);
    let mut mu: Vec<i64> = lambda.coords().iter().map(|c| c + 1).collect();
    let start = Weight::new(mu.clone());
    let mut steps = Vec::new();
    let result = loop {
        if mu.contains(&0) {
            break BottResult::Singular;
        }
        let Some(i) = mu.iter().position(|&c| c < 0) else {
            break BottResult::Cohomology {
                length: steps.len(),
                weight: Weight::new(mu.iter().map(|c| c - 1).collect()),
            };
        };
        if steps.len() >= limit {
            return Err(Error::IterationCap(limit));
        }
        diagram.reflect_coords(i, &mut mu);
        steps.push(ChaseStep {
            node: i + 1,
            shifted: Weight::new(mu.clone()),
        });
    };
    Ok(ChaseTrace { start, steps, result })
}

/// A maximal parabolic: the diagram with one distinguished node.
#[derive(Clone, Debug)]
pub struct Parabolic {
    diagram: DynkinDiagram,
    node: usize,
    levi: DynkinDiagram,
    levi_nodes: Vec<usize>,
}

impl Parabolic {
    pub fn new(diagram: DynkinDiagram, node: usize) -> Result<Self> {
        diagram.check_node(node)?;
        let levi_nodes: Vec<usize> = (1..=diagram.rank()).filter(|&v| v != node).collect();
        let levi = diagram.subdiagram(&levi_nodes)?;
        Ok(Parabolic {
            diagram,
            node,
            levi,
            levi_nodes,
        })
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn distinguished(&self) -> usize {
        self.node
    }

    /// The Levi diagram; its node `k` is node `levi_nodes()[k-1]` of the parent.
    pub fn levi(&self) -> &DynkinDiagram {
        &self.levi
    }

    pub fn levi_nodes(&self) -> &[usize] {
        &self.levi_nodes
    }

    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        lambda
            .coords()
            .iter()
            .enumerate()
            .all(|(i, &c)| i + 1 == self.node || c >= 0)
    }

    fn check_dominant(&self, lambda: &Weight) -> Result<()> {
        self.diagram.check_weight(lambda)?;
        if !self.is_dominant(lambda) {
            return Err(Error::NotParabolicDominant {
                weight: lambda.coords().to_vec(),
                node: self.node,
            });
        }
        Ok(())
    }

    /// Cohomology of the irreducible bundle on `G/P` with P-dominant weight `λ`.
    pub fn bundle_cohomology(&self, lambda: &Weight) -> Result<BottResult> {
        self.check_dominant(lambda)?;
        bott_chase(&self.diagram, lambda)
    }

    /// Rank of the irreducible bundle: the Levi dimension of `λ`.
    pub fn levi_dimension(&self, lambda: &Weight) -> Result<BigUint> {
        self.check_dominant(lambda)?;
        let restricted: Vec<i64> = self
            .levi_nodes
            .iter()
            .map(|&v| lambda.coords()[v - 1])
            .collect();
        self.levi.weyl_dimension(&Weight::new(restricted))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight::from(v)
    }

    #[test]
    fn c3_third_cohomology_is_trivial() {
        let c3 = DynkinDiagram::c(3);
        let r = bott_chase(&c3, &w(&[3, 0, -3])).unwrap();
        assert_eq!(r, BottResult::Cohomology { length: 3, weight: w(&[0, 0, 0]) });
    }

    #[test]
    fn d6_chain_is_singular() {
        let d6 = DynkinDiagram::d(6);
        let t = bott_trace(&d6, &w(&[-9, 0, 0, 0, 0, 0])).unwrap();
        assert_eq!(t.start, w(&[-8, 1, 1, 1, 1, 1]));
        let expected: [&[i64]; 8] = [
            &[8, -7, 1, 1, 1, 1],
            &[1, 7, -6, 1, 1, 1],
            &[1, 1, 6, -5, 1, 1],
            &[1, 1, 1, 5, -4, -4],
            &[1, 1, 1, 1, 4, -4],
            &[1, 1, 1, -3, 4, 4],
            &[1, 1, -2, 3, 1, 1],
            &[1, -1, 2, 1, 1, 1],
        ];
        let got: Vec<Weight> = t.steps.iter().map(|s| s.shifted.clone()).collect();
        assert_eq!(&got[..expected.len()], expected.map(w).as_slice());
        assert_eq!(got.last().unwrap(), &w(&[0, 1, 1, 1, 1, 1]));
        assert!(t.result.is_singular());
    }

    #[test]
    fn e7_line_bundles_have_top_cohomology() {
        let p = Parabolic::new(DynkinDiagram::e7(), 6).unwrap();
        for a in 1..18 {
            assert!(p.bundle_cohomology(&w(&[0, 0, 0, 0, 0, -a, 0])).unwrap().is_singular());
        }
        for a in 18..=24 {
            let r = p.bundle_cohomology(&w(&[0, 0, 0, 0, 0, -a, 0])).unwrap();
            assert_eq!(r, BottResult::Cohomology { length: 27, weight: w(&[0, 0, 0, 0, 0, a - 18, 0]) });
        }
    }

    #[test]
    fn trivial_cases() {
        let d = DynkinDiagram::a(4);
        assert!(bott_chase(&d, &w(&[-1, -1, -1, -1])).unwrap().is_singular());
        let r = bott_chase(&d, &w(&[2, 0, 1, 0])).unwrap();
        assert_eq!(r, BottResult::Cohomology { length: 0, weight: w(&[2, 0, 1, 0]) });
    }

    #[test]
    fn parabolic_dominance_is_enforced() {
        let p = Parabolic::new(DynkinDiagram::c(3), 3).unwrap();
        assert!(p.bundle_cohomology(&w(&[-1, 0, 0])).is_err());
        assert!(p.bundle_cohomology(&w(&[0, 0, -7])).is_ok());
        assert!(Parabolic::new(DynkinDiagram::c(3), 0).is_err());
    }

    #[test]
    fn levis_and_ranks() {
        let p = Parabolic::new(DynkinDiagram::c(3), 3).unwrap();
        assert_eq!(p.levi().name(), "A2");
        assert_eq!(p.levi_dimension(&w(&[0, 2, -2])).unwrap(), BigUint::from(6u32));
        assert_eq!(p.levi_dimension(&w(&[0, 0, 5])).unwrap(), BigUint::from(1u32));
        let e7 = Parabolic::new(DynkinDiagram::e7(), 6).unwrap();
        assert_eq!(e7.levi().name(), "E6");
        assert_eq!(e7.levi_nodes(), &[1, 2, 3, 4, 5, 7]);
        assert_eq!(e7.levi_dimension(&w(&[0, 0, 0, 0, 1, -2, 0])).unwrap(), BigUint::from(27u32));
        let a5 = Parabolic::new(DynkinDiagram::a(5), 3).unwrap();
        assert_eq!(a5.levi().name(), "A2xA2");
    }

    #[test]
    fn json_shape() {
        let r = BottResult::Cohomology { length: 3, weight: w(&[0, 0, 0]) };
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"result":"cohomology","degree":3,"weight":[0,0,0]}"#);
        assert_eq!(serde_json::to_string(&BottResult::Singular).unwrap(), r#"{"result":"singular"}"#);
    }
}
