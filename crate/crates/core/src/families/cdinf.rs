//! The brace on `ℤ` with `n∘m = n + m` for even `n` and `n − m` for odd `n`.
//! Its multiplicative group is infinite dihedral.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, RandBigInt};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;

use super::{Family, FamilyError, FamilyKind, NamedSet};

pub struct CdInf;

impl Family for CdInf {
    type Elem = BigInt;

    const KIND: FamilyKind = FamilyKind::CdInf;

    fn zero() -> BigInt {
        BigInt::zero()
    }

    fn add(g: &BigInt, h: &BigInt) -> BigInt {
        g + h
    }

    fn neg(g: &BigInt) -> BigInt {
        -g
    }

    fn mul(g: &BigInt, h: &BigInt) -> BigInt {
        if g.is_even() {
            g + h
        } else {
            g - h
        }
    }

    fn bar(g: &BigInt) -> BigInt {
        if g.is_even() {
            -g
        } else {
            g.clone()
        }
    }

    fn lambda(g: &BigInt, x: &BigInt) -> BigInt {
        if g.is_even() {
            x.clone()
        } else {
            -x
        }
    }

    fn theta(_a: &BigInt, b: &BigInt, x: &BigInt) -> BigInt {
        Self::lambda(b, x)
    }

    fn lambda_actors() -> Vec<BigInt> {
        vec![BigInt::from(1)]
    }

    fn conjugators() -> Vec<BigInt> {
        Vec::new()
    }

    fn member(set: NamedSet, x: &BigInt) -> bool {
        match set {
            NamedSet::KerLambda | NamedSet::Soc => x.is_even(),
            NamedSet::Fix | NamedSet::Ann => x.is_zero(),
            NamedSet::LambdaF | NamedSet::ThetaF => true,
            NamedSet::TorsionMul => x.is_zero() || x.is_odd(),
        }
    }

    fn window(radius: u64) -> Vec<BigInt> {
        let r = radius as i64;
        (-r..=r).map(BigInt::from).collect()
    }

    fn magnitude(x: &BigInt) -> u64 {
        x.abs().to_u64().unwrap_or(u64::MAX)
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> BigInt {
        if rng.gen_bool(0.5) {
            BigInt::from(rng.gen_range(-1000i64..=1000))
        } else {
            rng.gen_bigint(96)
        }
    }

    fn parse(s: &str) -> Result<BigInt, FamilyError> {
        s.trim()
            .replace('−', "-")
            .parse()
            .map_err(|_| FamilyError::parse(s, "expected an integer"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{lambda_orbit, theta_orbit, Orbit};

    fn z(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn products() {
        assert_eq!(CdInf::mul(&z(3), &z(5)), z(-2));
        assert_eq!(CdInf::mul(&z(2), &z(5)), z(7));
        for n in -5..5 {
            assert_eq!(CdInf::mul(&z(n), &CdInf::bar(&z(n))), z(0));
        }
    }

    #[test]
    fn lambda_values() {
        assert_eq!(CdInf::lambda(&z(3), &z(7)), z(-7));
        assert_eq!(CdInf::lambda(&z(2), &z(7)), z(7));
    }

    #[test]
    fn orbits() {
        assert_eq!(lambda_orbit::<CdInf>(&z(5), 10), Orbit::Finite(vec![z(-5), z(5)]));
        assert_eq!(theta_orbit::<CdInf>(&z(5), 10), Orbit::Finite(vec![z(-5), z(5)]));
        assert_eq!(lambda_orbit::<CdInf>(&z(0), 1), Orbit::Finite(vec![z(0)]));
        assert_eq!(lambda_orbit::<CdInf>(&z(5), 1), Orbit::Overflow { cap: 1 });
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(CdInf::parse(" -12 ").unwrap(), z(-12));
        assert_eq!(CdInf::parse("−3").unwrap(), z(-3));
        assert!(CdInf::parse("x").is_err());
    }
}
