use serde::Serialize;

use crate::bott::Parabolic;
use crate::error::{Error, Result};
use crate::liealg::{DynkinDiagram, Weight};
use crate::rational::Rational;

/// The four members of the series, indexed by `m`.
pub const CASES: [u32; 4] = [1, 2, 4, 8];

/// A holonomy edge between consecutive orbits, labelled by `s − root`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HolonomyEdge {
    pub upper: u32,
    pub lower: u32,
    pub root: Rational,
    pub label: String,
}

/// Constants of one case `(G', X)`.
#[derive(Clone, Debug, Serialize)]
pub struct CaseData {
    pub m: u32,
    #[serde(serialize_with = "ser_name")]
    pub diagram: DynkinDiagram,
    /// Node of the maximal parabolic `P` with `G/P` the closed orbit in `P(X)`.
    pub node: usize,
    pub x: Weight,
    pub gprime: Weight,
    pub x4: Weight,
    pub dim_x: u32,
    /// `codims[p]` is the codimension of the closure of `O_p`, `p = 0..=4`.
    pub codims: [u32; 5],
    pub deg_f: u32,
    /// Roots of the b-function: `-1, r1, r2, r3`.
    pub broots: [Rational; 4],
    pub holonomy: Vec<HolonomyEdge>,
    /// Roots of the local b-function at a point of `O_2`.
    pub local_b_o2: [Rational; 2],
}

fn ser_name<S: serde::Serializer>(d: &DynkinDiagram, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(d.name())
}

fn s_minus(r: Rational) -> String {
    let neg = Rational(-r.0);
    if neg.0 >= num_rational::Ratio::from_integer(0) {
        format!("s+{neg}")
    } else {
        format!("s-{}", r)
    }
}

impl CaseData {
    /// Case `(a)` is `m ∈ {2, 4, 8}`; case `(b)` is `m = 1`.
    pub fn is_case_a(&self) -> bool {
        self.m != 1
    }

    pub fn r1(&self) -> Rational {
        self.broots[1]
    }

    pub fn r2(&self) -> Rational {
        self.broots[2]
    }

    pub fn r3(&self) -> Rational {
        self.broots[3]
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    pub fn parabolic(&self) -> Parabolic {
        Parabolic::new(self.diagram.clone(), self.node).expect("case node is valid")
    }

    /// `dim G/P = 3m + 3`.
    pub fn dim_gp(&self) -> u32 {
        3 * self.m + 3
    }

    pub fn codim(&self, p: u32) -> Result<u32> {
        self.codims
            .get(p as usize)
            .copied()
            .ok_or(Error::InvalidOrbit(p))
    }

    /// Dimension of the closure of `O_p`.
    pub fn orbit_dim(&self, p: u32) -> Result<u32> {
        Ok(self.dim_x - self.codim(p)?)
    }

    /// Projective duality of orbits: `O_i ↔ O_{4−i}`.
    pub fn pyasetskii(&self, p: u32) -> Result<u32> {
        if p > 4 {
            return Err(Error::InvalidOrbit(p));
        }
        Ok(4 - p)
    }

    /// The cotangent bundle of `G/P`: `V(X4 − 2X)`.
    pub fn cotangent_weight(&self) -> Weight {
        &self.x4 - &self.x.scale(2)
    }

    fn validate(&self) -> Result<()> {
        let d = &self.diagram;
        let fail = |what: &str| Err(Error::MalformedExpr(format!("case m = {}: {what}", self.m)));
        let dim = |w: &Weight| d.weyl_dimension(w).map(|n| n.to_string());
        if dim(&self.x)? != self.dim_x.to_string() {
            return fail("dim X");
        }
        let adjoint = 2 * d.positive_roots().len() + d.rank();
        if dim(&self.gprime)? != adjoint.to_string() {
            return fail("adjoint dimension");
        }
        let mut roots = self.broots.to_vec();
        roots.sort();
        roots.dedup();
        if roots.len() != 4 || roots.iter().any(|r| r.0 > num_rational::Ratio::from_integer(-1)) {
            return fail("b-function roots");
        }
        if self.dim_gp() as usize != d.positive_roots().len() - self.parabolic().levi().positive_roots().len() {
            return fail("dim G/P");
        }
        Ok(())
    }
}

/// The constants of case `m`, validated on construction.
pub fn case_data(m: u32) -> Result<CaseData> {
    let (diagram, node, x, g, x4): (DynkinDiagram, usize, &[i64], &[i64], &[i64]) = match m {
        1 => (DynkinDiagram::c(3), 3, &[0, 0, 1], &[2, 0, 0], &[0, 2, 0]),
        2 => (DynkinDiagram::a(5), 3, &[0, 0, 1, 0, 0], &[1, 0, 0, 0, 1], &[0, 1, 0, 1, 0]),
        4 => (
            DynkinDiagram::d(6),
            5,
            &[0, 0, 0, 0, 1, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0],
        ),
        8 => (
            DynkinDiagram::e7(),
            6,
            &[0, 0, 0, 0, 0, 1, 0],
            &[1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0],
        ),
        _ => return Err(Error::UnsupportedCase(m)),
    };
    let mi = m as i64;
    let r1 = Rational::new(-(mi + 3), 2);
    let r2 = Rational::new(-(2 * mi + 3), 2);
    let r3 = Rational::new(-(3 * mi + 4), 2);
    let minus_one = Rational::integer(-1);
    let edge = |upper, lower, root: Rational| HolonomyEdge {
        upper,
        lower,
        root,
        label: s_minus(root),
    };
    let data = CaseData {
        m,
        diagram,
        node,
        x: Weight::from(x),
        gprime: Weight::from(g),
        x4: Weight::from(x4),
        dim_x: 6 * m + 8,
        codims: [6 * m + 8, 3 * m + 4, m + 3, 1, 0],
        deg_f: 4,
        broots: [minus_one, r1, r2, r3],
        holonomy: vec![
            edge(4, 3, minus_one),
            edge(3, 2, r1),
            edge(2, 1, r2),
            edge(1, 0, r3),
        ],
        local_b_o2: [minus_one, r1],
    };
    data.validate()?;
    Ok(data)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants() {
        let c = case_data(1).unwrap();
        assert_eq!(c.broots.map(|r| r.to_string()), ["-1", "-2", "-5/2", "-7/2"].map(String::from));
        assert_eq!(c.holonomy[1].label, "s+2");
        assert_eq!(c.holonomy[2].label, "s+5/2");
        assert_eq!(case_data(8).unwrap().dim_x, 56);
        assert_eq!(case_data(4).unwrap().codim(2).unwrap(), 7);
        assert_eq!(case_data(4).unwrap().orbit_dim(1).unwrap(), 16);
        assert!(case_data(3).is_err());
        for m in CASES {
            let c = case_data(m).unwrap();
            assert_eq!(c.pyasetskii(1).unwrap(), 3);
            assert_eq!(c.parabolic().levi_dimension(&c.cotangent_weight()).unwrap().to_string(), c.dim_gp().to_string());
        }
    }
}
