use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Cartan–Killing type of a connected Dynkin diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl SimpleType {
    pub fn rank(self) -> usize {
        match self {
            SimpleType::A(n)
            | SimpleType::B(n)
            | SimpleType::C(n)
            | SimpleType::D(n)
            | SimpleType::E(n) => n,
            SimpleType::F4 => 4,
            SimpleType::G2 => 2,
        }
    }

    /// Degrees of the basic invariants of the Weyl group.
    pub fn fundamental_degrees(self) -> Vec<u32> {
        match self {
            SimpleType::A(n) => (2..=n as u32 + 1).collect(),
            SimpleType::B(n) | SimpleType::C(n) => (1..=n as u32).map(|i| 2 * i).collect(),
            SimpleType::D(n) => {
                let mut d: Vec<u32> = (1..n as u32).map(|i| 2 * i).collect();
                d.push(n as u32);
                d.sort_unstable();
                d
            }
            SimpleType::E(6) => vec![2, 5, 6, 8, 9, 12],
            SimpleType::E(7) => vec![2, 6, 8, 10, 12, 14, 18],
            SimpleType::E(8) => vec![2, 8, 12, 14, 18, 20, 24, 30],
            SimpleType::E(n) => unreachable!("E{n} is not a finite type"),
            SimpleType::F4 => vec![2, 6, 8, 12],
            SimpleType::G2 => vec![2, 6],
        }
    }

    /// Order of the Weyl group, the product of the fundamental degrees.
    pub fn weyl_group_order(self) -> BigUint {
        self.fundamental_degrees()
            .into_iter()
            .fold(BigUint::from(1u32), |acc, d| acc * d)
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleType::A(n) => write!(f, "A{n}"),
            SimpleType::B(n) => write!(f, "B{n}"),
            SimpleType::C(n) => write!(f, "C{n}"),
            SimpleType::D(n) => write!(f, "D{n}"),
            SimpleType::E(n) => write!(f, "E{n}"),
            SimpleType::F4 => write!(f, "F4"),
            SimpleType::G2 => write!(f, "G2"),
        }
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownType(s.to_string());
        let s = s.trim();
        let (letter, rest) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let n: usize = rest.parse().map_err(|_| bad())?;
        let ty = match letter {
            "A" | "a" if n >= 1 => SimpleType::A(n),
            "B" | "b" if n >= 2 => SimpleType::B(n),
            "C" | "c" if n >= 2 => SimpleType::C(n),
            "D" | "d" if n >= 3 => SimpleType::D(n),
            "E" | "e" if (6..=8).contains(&n) => SimpleType::E(n),
            "F" | "f" if n == 4 => SimpleType::F4,
            "G" | "g" if n == 2 => SimpleType::G2,
            _ => return Err(bad()),
        };
        Ok(ty)
    }
}

/// Fundamental degrees for a simple type given by name (`"C3"`, `"E7"`, ...).
pub fn fundamental_degrees(ty: &str) -> Result<Vec<u32>> {
    Ok(ty.parse::<SimpleType>()?.fundamental_degrees())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_of_small_types() {
        assert_eq!(fundamental_degrees("C3").unwrap(), vec![2, 4, 6]);
        assert_eq!(fundamental_degrees("A2").unwrap(), vec![2, 3]);
        assert_eq!(fundamental_degrees("D6").unwrap(), vec![2, 4, 6, 6, 8, 10]);
        assert_eq!(
            fundamental_degrees("E7").unwrap(),
            vec![2, 6, 8, 10, 12, 14, 18]
        );
    }

    #[test]
    fn unknown_types_are_rejected() {
        for s in ["E9", "Q3", "B1", "D2", "F5", "", "A"] {
            assert!(fundamental_degrees(s).is_err(), "{s}");
        }
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(SimpleType::E(7).weyl_group_order(), BigUint::from(2_903_040u32));
        assert_eq!(SimpleType::C(3).weyl_group_order(), BigUint::from(48u32));
        assert_eq!(SimpleType::A(5).weyl_group_order(), BigUint::from(720u32));
    }
}
