//! The brace on the free group `F(a, b)` with `u∘v = u + λ^{ε(u)}(v)`, where
//! `λ` swaps `a` and `b` and `ε` is the exponent sum.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;

use super::{Family, FamilyError, FamilyKind, NamedSet};

/// A freely reduced word. Letters are `1 = a`, `-1 = a⁻¹`, `2 = b`, `-2 = b⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FreeWord(Vec<i8>);

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    /// Reduces an arbitrary letter sequence.
    pub fn from_letters<I: IntoIterator<Item = i8>>(letters: I) -> Self {
        let mut out: Vec<i8> = Vec::new();
        for l in letters {
            assert!(matches!(l, 1 | -1 | 2 | -2), "invalid letter {l}");
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeWord(out)
    }

    pub fn letters(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Exponent sum, with both generators weighted 1.
    pub fn epsilon(&self) -> i64 {
        self.0.iter().map(|&l| i64::from(l.signum())).sum()
    }

    /// The automorphism swapping `a` and `b`.
    pub fn swap(&self) -> FreeWord {
        FreeWord(self.0.iter().map(|&l| l.signum() * (3 - l.abs())).collect())
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        FreeWord::from_letters(self.0.iter().chain(&other.0).copied())
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|&l| -l).collect())
    }

    fn swap_power(&self, e: i64) -> FreeWord {
        if e.rem_euclid(2) == 1 {
            self.swap()
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for &l in &self.0 {
            f.write_str(match l {
                1 => "a",
                -1 => "A",
                2 => "b",
                _ => "B",
            })?;
        }
        Ok(())
    }
}

pub struct Free2;

impl Family for Free2 {
    type Elem = FreeWord;

    const KIND: FamilyKind = FamilyKind::Free2;

    fn zero() -> FreeWord {
        FreeWord::identity()
    }

    fn add(g: &FreeWord, h: &FreeWord) -> FreeWord {
        g.concat(h)
    }

    fn neg(g: &FreeWord) -> FreeWord {
        g.inverse()
    }

    fn mul(g: &FreeWord, h: &FreeWord) -> FreeWord {
        g.concat(&h.swap_power(g.epsilon()))
    }

    fn bar(g: &FreeWord) -> FreeWord {
        g.inverse().swap_power(g.epsilon())
    }

    fn lambda(g: &FreeWord, x: &FreeWord) -> FreeWord {
        x.swap_power(g.epsilon())
    }

    fn theta(a: &FreeWord, b: &FreeWord, x: &FreeWord) -> FreeWord {
        a.concat(&Self::lambda(b, x)).concat(&a.inverse())
    }

    fn lambda_actors() -> Vec<FreeWord> {
        alloc::vec![FreeWord(alloc::vec![1])]
    }

    fn conjugators() -> Vec<FreeWord> {
        alloc::vec![FreeWord(alloc::vec![1]), FreeWord(alloc::vec![2])]
    }

    fn member(set: NamedSet, x: &FreeWord) -> bool {
        match set {
            NamedSet::KerLambda => x.epsilon().rem_euclid(2) == 0,
            NamedSet::LambdaF => true,
            NamedSet::Fix | NamedSet::Soc | NamedSet::Ann | NamedSet::ThetaF | NamedSet::TorsionMul => x.is_empty(),
        }
    }

    /// Reduced words of length at most `radius`.
    fn window(radius: u64) -> Vec<FreeWord> {
        let mut out = alloc::vec![FreeWord::identity()];
        let mut layer = alloc::vec![FreeWord::identity()];
        for _ in 0..radius {
            let mut next = Vec::new();
            for w in &layer {
                for l in [1, -1, 2, -2] {
                    if w.0.last() != Some(&-l) {
                        let mut letters = w.0.clone();
                        letters.push(l);
                        next.push(FreeWord(letters));
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    fn magnitude(x: &FreeWord) -> u64 {
        x.len() as u64
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> FreeWord {
        let len = rng.gen_range(0..=12);
        FreeWord::from_letters((0..len).map(|_| [1, -1, 2, -2][rng.gen_range(0..4)]))
    }

    /// Accepts `e` or a string over `a`, `A`, `b`, `B` (inverses in capitals).
    fn parse(s: &str) -> Result<FreeWord, FamilyError> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned == "e" || cleaned.is_empty() {
            return Ok(FreeWord::identity());
        }
        let letters = cleaned
            .chars()
            .map(|c| match c {
                'a' => Ok(1),
                'A' => Ok(-1),
                'b' => Ok(2),
                'B' => Ok(-2),
                _ => Err(FamilyError::parse(s, "letters must be a, A, b or B")),
            })
            .collect::<Result<Vec<i8>, _>>()?;
        Ok(FreeWord::from_letters(letters))
    }
}
