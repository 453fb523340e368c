use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::subexc::{case_data, ModuleName};

/// The quiver of `mod_G(D_X)`; the relations are all 2-cycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Quiver {
    pub m: u32,
    pub vertices: Vec<ModuleName>,
    pub arrows: Vec<(ModuleName, ModuleName)>,
}

fn chain(a: ModuleName, b: ModuleName, c: ModuleName) -> [(ModuleName, ModuleName); 4] {
    [(a, b), (b, a), (b, c), (c, b)]
}

pub fn build_quiver(m: u32) -> Result<Quiver> {
    use ModuleName::*;
    let case = case_data(m)?;
    let (vertices, chains) = if case.is_case_a() {
        (vec![S, L3, E, L4p, L2, L1, L41, L43], [chain(S, L3, E), chain(L4p, L2, L1)])
    } else {
        (vec![S, L3, L2p, L4p, L1, E, L2, L41, L43], [chain(S, L3, L2p), chain(L4p, L1, E)])
    };
    Ok(Quiver {
        m,
        vertices,
        arrows: chains.into_iter().flatten().collect(),
    })
}

impl Quiver {
    pub fn has_vertex(&self, v: ModuleName) -> bool {
        self.vertices.contains(&v)
    }

    fn check(&self, v: ModuleName) -> Result<()> {
        if self.has_vertex(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v.to_string()))
        }
    }

    pub fn successors(&self, v: ModuleName) -> impl Iterator<Item = ModuleName> + '_ {
        self.arrows.iter().filter(move |a| a.0 == v).map(|a| a.1)
    }

    pub fn isolated(&self) -> Vec<ModuleName> {
        self.vertices
            .iter()
            .copied()
            .filter(|&v| !self.arrows.iter().any(|a| a.0 == v || a.1 == v))
            .collect()
    }

    /// Paths from `x` to `y` that contain no 2-cycle `a → b → a`.
    pub fn path_count(&self, x: ModuleName, y: ModuleName) -> Result<u64> {
        self.check(x)?;
        self.check(y)?;
        let cap = 2 * self.vertices.len();
        let mut count = 0;
        let mut stack = vec![(vec![x], 0usize)];
        while let Some((path, len)) = stack.pop() {
            let last = *path.last().expect("paths are nonempty");
            if last == y {
                count += 1;
            }
            if len == cap {
                continue;
            }
            for next in self.successors(last) {
                if path.len() >= 2 && path[path.len() - 2] == next {
                    continue;
                }
                let mut p = path.clone();
                p.push(next);
                stack.push((p, len + 1));
            }
        }
        Ok(count)
    }

    /// DOT rendering.
    pub fn to_dot(&self) -> String {
        let mut s = format!("digraph quiver_m{} {{\n", self.m);
        for v in &self.vertices {
            s.push_str(&format!("  \"{v}\";\n"));
        }
        for (a, b) in &self.arrows {
            s.push_str(&format!("  \"{a}\" -> \"{b}\";\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// The Fourier transform on simples.
pub fn fourier_permutation(m: u32) -> Result<BTreeMap<ModuleName, ModuleName>> {
    use ModuleName::*;
    let case = case_data(m)?;
    let swaps: &[(ModuleName, ModuleName)] = if case.is_case_a() {
        &[(S, E), (L4p, L1)]
    } else {
        &[(S, E), (L3, L1), (L2p, L4p)]
    };
    let quiver = build_quiver(m)?;
    let mut map: BTreeMap<ModuleName, ModuleName> = quiver.vertices.iter().map(|&v| (v, v)).collect();
    for &(a, b) in swaps {
        map.insert(a, b);
        map.insert(b, a);
    }
    Ok(map)
}

/// Whether `perm` is an involution carrying the arrow set onto itself.
pub fn is_arrow_preserving_involution(q: &Quiver, perm: &BTreeMap<ModuleName, ModuleName>) -> bool {
    let involution = q.vertices.iter().all(|v| perm.get(&perm[v]) == Some(v));
    let arrows: BTreeSet<_> = q.arrows.iter().copied().collect();
    let image: BTreeSet<_> = q.arrows.iter().map(|(a, b)| (perm[a], perm[b])).collect();
    involution && arrows == image
}

#[cfg(test)]
mod tests {
    use super::*;
    use ModuleName::*;

    #[test]
    fn shapes() {
        let a = build_quiver(2).unwrap();
        assert_eq!((a.vertices.len(), a.arrows.len()), (8, 8));
        assert_eq!(a.isolated(), vec![L41, L43]);
        let b = build_quiver(1).unwrap();
        assert_eq!((b.vertices.len(), b.arrows.len()), (9, 8));
        assert_eq!(b.isolated(), vec![L2, L41, L43]);
        assert!(b.arrows.contains(&(L1, E)) && b.arrows.contains(&(E, L1)));
    }

    #[test]
    fn paths() {
        let a = build_quiver(4).unwrap();
        assert_eq!(a.path_count(S, E).unwrap(), 1);
        assert_eq!(a.path_count(S, L2).unwrap(), 0);
        assert_eq!(a.path_count(L3, L3).unwrap(), 1);
        assert!(a.path_count(S, L2p).is_err());
    }

    #[test]
    fn fourier() {
        for m in [1, 2, 4, 8] {
            let q = build_quiver(m).unwrap();
            let f = fourier_permutation(m).unwrap();
            assert!(is_arrow_preserving_involution(&q, &f));
            assert_eq!(f[&L41], L41);
        }
        assert_eq!(fourier_permutation(1).unwrap()[&L2p], L4p);
        assert_eq!(fourier_permutation(2).unwrap()[&L1], L4p);
    }
}
