//! The semidirect product of the trivial braces on `ℤ/3 × ℚ` and `ℤ`, with
//! `k` acting by `(a, x) ↦ ((−1)^k a, 2^k x)`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;

use super::{window_rationals, Family, FamilyError, FamilyKind, NamedSet};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RositaElem {
    /// Residue mod 3, in `0..3`.
    pub a: u8,
    pub x: BigRational,
    pub k: BigInt,
}

impl RositaElem {
    pub fn new(a: i64, x: BigRational, k: impl Into<BigInt>) -> Self {
        RositaElem {
            a: a.rem_euclid(3) as u8,
            x,
            k: k.into(),
        }
    }

    /// Convenience constructor with `x = num/den`.
    pub fn from_ints(a: i64, num: i64, den: i64, k: i64) -> Self {
        Self::new(a, BigRational::new(num.into(), den.into()), k)
    }
}

// Fractions are always kept in lowest terms with a positive denominator, so
// hashing the raw parts agrees with equality and avoids the much slower
// value-based rational hash.
impl Hash for RositaElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.x.numer().hash(state);
        self.x.denom().hash(state);
        self.k.hash(state);
    }
}

impl fmt::Display for RositaElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.x, self.k)
    }
}

fn exponent(k: &BigInt) -> i64 {
    k.to_i64().expect("exponent of 2 out of range")
}

fn sign_mod3(a: u8, k: &BigInt) -> u8 {
    if k.is_odd() {
        (3 - a) % 3
    } else {
        a
    }
}

/// `2^k x`, keeping the fraction reduced without a gcd.
fn scale_pow2(x: &BigRational, k: i64) -> BigRational {
    if x.is_zero() || k == 0 {
        return x.clone();
    }
    let (numer, denom) = (x.numer(), x.denom());
    if k > 0 {
        let cancel = denom.trailing_zeros().unwrap_or(0).min(k as u64);
        BigRational::new_raw(numer << (k as u64 - cancel), denom >> cancel)
    } else {
        let k = k.unsigned_abs();
        let cancel = numer.trailing_zeros().unwrap_or(0).min(k);
        BigRational::new_raw(numer >> cancel, denom << (k - cancel))
    }
}

pub struct Rosita;

impl Family for Rosita {
    type Elem = RositaElem;

    const KIND: FamilyKind = FamilyKind::Rosita;

    fn zero() -> RositaElem {
        RositaElem::new(0, BigRational::zero(), 0)
    }

    fn add(g: &RositaElem, h: &RositaElem) -> RositaElem {
        RositaElem {
            a: (g.a + h.a) % 3,
            x: &g.x + &h.x,
            k: &g.k + &h.k,
        }
    }

    fn neg(g: &RositaElem) -> RositaElem {
        RositaElem {
            a: (3 - g.a) % 3,
            x: -&g.x,
            k: -&g.k,
        }
    }

    fn mul(g: &RositaElem, h: &RositaElem) -> RositaElem {
        RositaElem {
            a: (g.a + sign_mod3(h.a, &g.k)) % 3,
            x: &g.x + scale_pow2(&h.x, exponent(&g.k)),
            k: &g.k + &h.k,
        }
    }

    /// `((−1)^{k+1} a, −2^{−k} x, −k)`.
    fn bar(g: &RositaElem) -> RositaElem {
        RositaElem {
            a: sign_mod3(g.a, &(&g.k + 1)),
            x: -scale_pow2(&g.x, -exponent(&g.k)),
            k: -&g.k,
        }
    }

    fn lambda(g: &RositaElem, x: &RositaElem) -> RositaElem {
        RositaElem {
            a: sign_mod3(x.a, &g.k),
            x: scale_pow2(&x.x, exponent(&g.k)),
            k: x.k.clone(),
        }
    }

    fn theta(_a: &RositaElem, b: &RositaElem, x: &RositaElem) -> RositaElem {
        Self::lambda(b, x)
    }

    fn lambda_actors() -> Vec<RositaElem> {
        alloc::vec![RositaElem::from_ints(0, 0, 1, 1), RositaElem::from_ints(0, 0, 1, -1)]
    }

    fn conjugators() -> Vec<RositaElem> {
        Vec::new()
    }

    fn member(set: NamedSet, e: &RositaElem) -> bool {
        match set {
            NamedSet::KerLambda | NamedSet::Soc => e.k.is_zero(),
            NamedSet::Fix => e.a == 0 && e.x.is_zero(),
            NamedSet::Ann => e.a == 0 && e.x.is_zero() && e.k.is_zero(),
            NamedSet::LambdaF | NamedSet::ThetaF => e.x.is_zero(),
            NamedSet::TorsionMul => e.x.is_zero() && e.k.is_zero(),
        }
    }

    fn window(radius: u64) -> Vec<RositaElem> {
        let r = radius as i64;
        let xs = window_rationals(radius);
        let mut out = Vec::with_capacity(3 * xs.len() * (2 * r as usize + 1));
        for a in 0..3 {
            for &(p, q) in &xs {
                for k in -r..=r {
                    out.push(RositaElem::from_ints(a, p, q, k));
                }
            }
        }
        out
    }

    fn magnitude(e: &RositaElem) -> u64 {
        let abs = |n: &BigInt| n.abs().to_u64().unwrap_or(u64::MAX);
        abs(e.x.numer()).max(abs(e.x.denom())).max(abs(&e.k))
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> RositaElem {
        let x = if rng.gen_bool(0.2) {
            BigRational::zero()
        } else {
            BigRational::new(rng.gen_range(-1000i64..=1000).into(), rng.gen_range(1i64..=1000).into())
        };
        RositaElem::new(rng.gen_range(0..3), x, rng.gen_range(-40i64..=40))
    }

    /// Accepts `(a,x,k)` with `x` an integer or `p/q`.
    fn parse(s: &str) -> Result<RositaElem, FamilyError> {
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '−' { '-' } else { c })
            .collect();
        let inner = cleaned
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| FamilyError::parse(s, "expected (a,x,k)"))?;
        let parts: Vec<&str> = inner.split(',').collect();
        let [a, x, k] = parts[..] else {
            return Err(FamilyError::parse(s, "expected three components"));
        };
        let a: BigInt = a.parse().map_err(|_| FamilyError::parse(s, "bad residue"))?;
        let x: BigRational = x.parse().map_err(|_| FamilyError::parse(s, "bad rational"))?;
        let k: BigInt = k.parse().map_err(|_| FamilyError::parse(s, "bad exponent"))?;
        let a = a.mod_floor(&BigInt::from(3)).to_u8().unwrap();
        Ok(RositaElem { a, x, k })
    }

    /// `λ` never changes `k`, so the orbit of `(a, x, k)` is that of
    /// `(a, x, 0)` with `k` restored.
    fn orbit_representative(e: &RositaElem) -> RositaElem {
        RositaElem {
            a: e.a,
            x: e.x.clone(),
            k: BigInt::zero(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{lambda_orbit, Orbit};

    fn r(a: i64, num: i64, den: i64, k: i64) -> RositaElem {
        RositaElem::from_ints(a, num, den, k)
    }

    #[test]
    fn inverse_of_sample() {
        let g = r(1, 1, 2, 1);
        assert_eq!(Rosita::bar(&g), r(1, -1, 4, -1));
        assert_eq!(Rosita::mul(&g, &Rosita::bar(&g)), Rosita::zero());
        assert_eq!(Rosita::mul(&Rosita::bar(&g), &g), Rosita::zero());
    }

    #[test]
    fn lambda_sample() {
        assert_eq!(Rosita::lambda(&r(0, 0, 1, 1), &r(1, 3, 1, 5)), r(2, 6, 1, 5));
    }

    #[test]
    fn scaling_keeps_lowest_terms() {
        let x = BigRational::new(3.into(), 8.into());
        assert_eq!(scale_pow2(&x, 2), BigRational::new(3.into(), 2.into()));
        assert_eq!(scale_pow2(&x, 5), BigRational::from_integer(12.into()));
        assert_eq!(scale_pow2(&scale_pow2(&x, 7), -7), x);
        let y = BigRational::new((-12).into(), 5.into());
        assert_eq!(scale_pow2(&y, -3), BigRational::new((-3).into(), 10.into()));
    }

    #[test]
    fn orbits() {
        assert_eq!(lambda_orbit::<Rosita>(&r(0, 1, 1, 0), 100), Orbit::Overflow { cap: 100 });
        assert_eq!(
            lambda_orbit::<Rosita>(&r(1, 0, 1, 5), 100),
            Orbit::Finite(alloc::vec![r(1, 0, 1, 5), r(2, 0, 1, 5)])
        );
    }

    #[test]
    fn parse_round_trip() {
        for x in Rosita::window(2) {
            assert_eq!(Rosita::parse(&alloc::format!("{x}")).unwrap(), x);
        }
        assert_eq!(Rosita::parse("(4, -2/4, 3)").unwrap(), r(1, -1, 2, 3));
        assert!(Rosita::parse("(1,2)").is_err());
    }
}
