//! The almost trivial brace on the infinite dihedral group: `+` is the group
//! law and `∘` its opposite, so `λ_a(x) = a⁻¹xa`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;

use super::{Family, FamilyError, FamilyKind, NamedSet};

/// `a^shift b^flip` in `⟨a, b | b² = 1, bab = a⁻¹⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DInfElem {
    pub shift: BigInt,
    pub flip: bool,
}

impl DInfElem {
    pub fn new(shift: impl Into<BigInt>, flip: bool) -> Self {
        DInfElem {
            shift: shift.into(),
            flip,
        }
    }

    pub fn rotation(shift: impl Into<BigInt>) -> Self {
        Self::new(shift, false)
    }

    pub fn reflection(shift: impl Into<BigInt>) -> Self {
        Self::new(shift, true)
    }

    /// The group law of `D∞`.
    pub fn dot(&self, other: &DInfElem) -> DInfElem {
        let shift = if self.flip {
            &self.shift - &other.shift
        } else {
            &self.shift + &other.shift
        };
        DInfElem {
            shift,
            flip: self.flip ^ other.flip,
        }
    }

    pub fn inverse(&self) -> DInfElem {
        if self.flip {
            self.clone()
        } else {
            DInfElem::rotation(-&self.shift)
        }
    }
}

impl fmt::Display for DInfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shift.is_zero() && !self.flip {
            return f.write_str("e");
        }
        if !self.shift.is_zero() {
            write!(f, "a^{}", self.shift)?;
        }
        if self.flip {
            f.write_str("b")?;
        }
        Ok(())
    }
}

pub struct OpTrivDInf;

impl Family for OpTrivDInf {
    type Elem = DInfElem;

    const KIND: FamilyKind = FamilyKind::OpTrivDInf;

    fn zero() -> DInfElem {
        DInfElem::rotation(0)
    }

    fn add(g: &DInfElem, h: &DInfElem) -> DInfElem {
        g.dot(h)
    }

    fn neg(g: &DInfElem) -> DInfElem {
        g.inverse()
    }

    fn mul(g: &DInfElem, h: &DInfElem) -> DInfElem {
        h.dot(g)
    }

    fn bar(g: &DInfElem) -> DInfElem {
        g.inverse()
    }

    fn lambda(g: &DInfElem, x: &DInfElem) -> DInfElem {
        g.inverse().dot(x).dot(g)
    }

    fn theta(a: &DInfElem, b: &DInfElem, x: &DInfElem) -> DInfElem {
        let c = a.dot(&b.inverse());
        c.dot(x).dot(&c.inverse())
    }

    fn lambda_actors() -> Vec<DInfElem> {
        alloc::vec![DInfElem::rotation(1), DInfElem::rotation(-1), DInfElem::reflection(0)]
    }

    fn conjugators() -> Vec<DInfElem> {
        alloc::vec![DInfElem::rotation(1), DInfElem::reflection(0)]
    }

    fn member(set: NamedSet, x: &DInfElem) -> bool {
        let identity = !x.flip && x.shift.is_zero();
        match set {
            NamedSet::KerLambda | NamedSet::Fix | NamedSet::Soc | NamedSet::Ann => identity,
            NamedSet::LambdaF | NamedSet::ThetaF => !x.flip,
            NamedSet::TorsionMul => identity || x.flip,
        }
    }

    fn window(radius: u64) -> Vec<DInfElem> {
        let r = radius as i64;
        (-r..=r)
            .flat_map(|i| [DInfElem::rotation(i), DInfElem::reflection(i)])
            .collect()
    }

    fn magnitude(x: &DInfElem) -> u64 {
        x.shift.abs().to_u64().unwrap_or(u64::MAX)
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> DInfElem {
        DInfElem::new(rng.gen_range(-1000i64..=1000), rng.gen_bool(0.5))
    }

    /// Accepts `e`, `b`, `a`, `a^k`, `a^kb` (spaces and `·` ignored).
    fn parse(s: &str) -> Result<DInfElem, FamilyError> {
        let cleaned: alloc::string::String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '·' && *c != '*')
            .map(|c| if c == '−' { '-' } else { c })
            .collect();
        if cleaned == "e" || cleaned == "1" {
            return Ok(Self::zero());
        }
        let (body, flip) = match cleaned.strip_suffix('b') {
            Some(rest) => (rest, true),
            None => (cleaned.as_str(), false),
        };
        let shift = if body.is_empty() {
            BigInt::zero()
        } else if body == "a" {
            BigInt::from(1)
        } else if let Some(exp) = body.strip_prefix("a^") {
            let exp = exp.trim_start_matches('{').trim_end_matches('}');
            exp.parse().map_err(|_| FamilyError::parse(s, "bad exponent"))?
        } else {
            return Err(FamilyError::parse(s, "expected e, b, a^k or a^kb"));
        };
        Ok(DInfElem { shift, flip })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{theta_orbit, Orbit};

    #[test]
    fn dihedral_relations() {
        let a = DInfElem::rotation(1);
        let b = DInfElem::reflection(0);
        assert_eq!(b.dot(&b), OpTrivDInf::zero());
        assert_eq!(b.dot(&a).dot(&b), a.inverse());
        assert_eq!(a.dot(&b), DInfElem::reflection(1));
        assert_eq!(b.dot(&a), DInfElem::reflection(-1));
    }

    #[test]
    fn theta_orbits() {
        let a2 = DInfElem::rotation(2);
        assert_eq!(
            theta_orbit::<OpTrivDInf>(&a2, 10),
            Orbit::Finite(alloc::vec![DInfElem::rotation(-2), a2])
        );
        for cap in [3, 10, 100] {
            assert_eq!(
                theta_orbit::<OpTrivDInf>(&DInfElem::reflection(0), cap),
                Orbit::Overflow { cap }
            );
        }
    }

    #[test]
    fn parse_round_trip() {
        for x in OpTrivDInf::window(3) {
            assert_eq!(OpTrivDInf::parse(&alloc::format!("{x}")).unwrap(), x);
        }
        assert_eq!(OpTrivDInf::parse("a").unwrap(), DInfElem::rotation(1));
        assert_eq!(OpTrivDInf::parse("a^{-3} b").unwrap(), DInfElem::reflection(-3));
        assert!(OpTrivDInf::parse("ba").is_err());
    }
}
