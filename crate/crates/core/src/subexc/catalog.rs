use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::case::CaseData;
use crate::charseries::{CartanExpr, Character, Factor};
use crate::error::{Error, Result};
use crate::liealg::Weight;

/// Modules with catalogued characters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ModuleName {
    S,
    E,
    Sf,
    #[serde(rename = "Df_r1p1")]
    DfR1p1,
    L1,
    L2,
    L2p,
    L3,
    L4p,
    L41,
    L43,
}

impl ModuleName {
    pub const ALL: [ModuleName; 11] = [
        ModuleName::S,
        ModuleName::E,
        ModuleName::Sf,
        ModuleName::DfR1p1,
        ModuleName::L1,
        ModuleName::L2,
        ModuleName::L2p,
        ModuleName::L3,
        ModuleName::L4p,
        ModuleName::L41,
        ModuleName::L43,
    ];

    /// The simple equivariant D-modules of case `m`.
    pub fn simples(m: u32) -> Vec<ModuleName> {
        use ModuleName::*;
        let mut v = vec![S, L3, L2, L1, E, L4p, L41, L43];
        if m == 1 {
            v.push(L2p);
        }
        v
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ModuleName::S => "S",
            ModuleName::E => "E",
            ModuleName::Sf => "Sf",
            ModuleName::DfR1p1 => "Df_r1p1",
            ModuleName::L1 => "L1",
            ModuleName::L2 => "L2",
            ModuleName::L2p => "L2p",
            ModuleName::L3 => "L3",
            ModuleName::L4p => "L4p",
            ModuleName::L41 => "L41",
            ModuleName::L43 => "L43",
        }
    }
}

impl fmt::Display for ModuleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ModuleName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ModuleName::ALL
            .into_iter()
            .find(|n| n.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownModule(s.to_string()))
    }
}

fn fac(degree: i64, letter: &Weight) -> Factor {
    Factor {
        degree,
        letter: letter.clone(),
    }
}

fn constant_factor(c: &CaseData, degree: i64) -> Factor {
    fac(degree, &Weight::zero(c.rank()))
}

/// `[S] = 1/((1−tX)(1−t²g')(1−t³X)(1−t⁴)(1−t⁴X₄))`.
pub fn char_s(c: &CaseData) -> CartanExpr {
    let factors = vec![
        fac(1, &c.x),
        fac(2, &c.gprime),
        fac(3, &c.x),
        constant_factor(c, 4),
        fac(4, &c.x4),
    ];
    CartanExpr::monomial_over(&c.diagram, 0, Weight::zero(c.rank()), factors, None)
        .expect("letters are independent")
}

/// `[E] = [S]* · t^{−(6m+8)}`.
pub fn char_e(c: &CaseData) -> CartanExpr {
    char_s(c).dual().shift(-(c.dim_x as i64))
}

/// `[S_f]`: `[S]` without `(1−t⁴)`, times `Σ_j t^{4j}`.
pub fn char_sf(c: &CaseData) -> CartanExpr {
    char_s(c)
        .without_factor(&constant_factor(c, 4))
        .with_period(Some(4))
        .expect("no pure t-factors remain")
}

/// `[D f^{r1+1}] = t^{4(r1+1)}/((1−t⁻¹X)(1−X₄)(1−tX)(1−t²g')(1−t⁴))`.
pub fn char_df(c: &CaseData) -> CartanExpr {
    let shift = (c.r1().0 + 1) * 4;
    debug_assert!(shift.is_integer());
    let factors = vec![
        fac(-1, &c.x),
        fac(0, &c.x4),
        fac(1, &c.x),
        fac(2, &c.gprime),
        constant_factor(c, 4),
    ];
    CartanExpr::monomial_over(&c.diagram, shift.to_integer(), Weight::zero(c.rank()), factors, None)
        .expect("letters are independent")
}

/// The explicit `[L2]` of the `m = 1` case:
/// `t⁻⁷ω₁/((1−t⁻²g')(1−t⁻¹X)(1−X₄)(1−tX)(1−t²g'))`.
pub fn char_l2_c3(c: &CaseData) -> Result<CartanExpr> {
    if c.m != 1 {
        return Err(Error::ModuleCaseMismatch {
            name: "L2 (explicit)".into(),
            m: c.m,
        });
    }
    let factors = vec![
        fac(-2, &c.gprime),
        fac(-1, &c.x),
        fac(0, &c.x4),
        fac(1, &c.x),
        fac(2, &c.gprime),
    ];
    CartanExpr::monomial_over(&c.diagram, -7, Weight::fundamental(c.rank(), 1), factors, None)
}

/// The character of a catalogued module as a signed sum of expressions.
pub fn simple_character(c: &CaseData, name: ModuleName) -> Result<Character> {
    use ModuleName::*;
    let ch = |e: CartanExpr| Character::from(e);
    let top = -(c.dim_x as i64);
    let s = ch(char_s(c));
    let e = ch(char_e(c));
    let sf = ch(char_sf(c));
    let df = ch(char_df(c));
    let out = match (name, c.is_case_a()) {
        (S, _) => s,
        (E, _) => e,
        (Sf, _) => sf,
        (DfR1p1, _) => df,
        (L41, _) => sf.shift(1),
        (L43, _) => sf.shift(3),
        (L4p, true) => df,
        (L1, true) => df.dual().shift(top),
        (L3, true) => sf.sub(&s)?.sub(&e)?,
        (L2, true) => {
            let l1 = df.dual().shift(top);
            sf.shift(2).sub(&df)?.sub(&l1)?
        }
        (L2p, true) => {
            return Err(Error::ModuleCaseMismatch {
                name: name.to_string(),
                m: c.m,
            })
        }
        (L3, false) => df.sub(&s)?,
        (L2p, false) => sf.sub(&df)?,
        (L1, false) => df.sub(&s)?.dual().shift(top),
        (L4p, false) => sf.sub(&df)?.dual().shift(top),
        (L2, false) => ch(char_l2_c3(c)?),
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subexc::case_data;

    fn zero(c: &CaseData) -> Weight {
        Weight::zero(c.rank())
    }

    #[test]
    fn module_names_parse() {
        assert_eq!("Df_r1p1".parse::<ModuleName>().unwrap(), ModuleName::DfR1p1);
        assert_eq!("l2p".parse::<ModuleName>().unwrap(), ModuleName::L2p);
        assert!("L5".parse::<ModuleName>().is_err());
    }

    #[test]
    fn first_coefficients_of_s() {
        let c = case_data(1).unwrap();
        let s = char_s(&c);
        assert_eq!(s.coeff(&c.x, 1).unwrap(), 1);
        assert_eq!(s.coeff(&zero(&c), 4).unwrap(), 1);
        assert_eq!(s.coeff(&zero(&c), 1).unwrap(), 0);
        let slice = s.weight_slice(&c.gprime).unwrap();
        assert_eq!(slice.coefficient(2), 1);
        assert_eq!(slice.coefficients(-5, 1), vec![0; 7]);
    }

    #[test]
    fn l2_numerator() {
        let c = case_data(1).unwrap();
        let l2 = simple_character(&c, ModuleName::L2).unwrap();
        assert_eq!(l2.coeff(&Weight::fundamental(3, 1), -7).unwrap(), 1);
        assert!(simple_character(&case_data(2).unwrap(), ModuleName::L2p).is_err());
    }

    #[test]
    fn localization_slices() {
        for m in [1, 2, 4, 8] {
            let c = case_data(m).unwrap();
            let sf = char_sf(&c);
            let s = sf.weight_slice(&zero(&c)).unwrap();
            assert_eq!(s.period, Some(4));
            assert_eq!(s.numerator.coeff(0), 1);
            assert_eq!(s.coefficients(-8, 8), vec![1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1]);
            let l41 = simple_character(&c, ModuleName::L41).unwrap();
            assert_eq!(l41.coeff(&zero(&c), 5).unwrap(), 1);
            assert_eq!(l41.coeff(&zero(&c), 4).unwrap(), 0);
        }
    }

    #[test]
    fn e_starts_at_the_top_degree() {
        let c = case_data(1).unwrap();
        let e = Character::from(char_e(&c));
        assert_eq!(e.coeff(&zero(&c), -14).unwrap(), 1);
        assert_eq!(e.coeff(&zero(&c), -13).unwrap(), 0);
        assert_eq!(e.dual().coeff(&zero(&c), 14).unwrap(), 1);
    }
}
