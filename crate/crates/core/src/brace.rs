//! Finite skew braces: two group tables on one carrier tied by skew left
//! distributivity `a∘(b+c) = (a∘b) - a + (a∘c)`.
//!
//! Elements are indices `0..n`. The λ-map `λ_a(b) = -a + a∘b` is tabulated at
//! construction since nearly every invariant reads it.

use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{FiniteGroup, GroupError};
use crate::set::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraceError {
    #[error("additive table: {0}")]
    Additive(GroupError),
    #[error("multiplicative table: {0}")]
    Multiplicative(GroupError),
    #[error("tables have different orders ({add} and {mul})")]
    OrderMismatch { add: usize, mul: usize },
    #[error("neutral elements differ: {add} for + and {mul} for ∘")]
    IdentityMismatch { add: usize, mul: usize },
    #[error("skew distributivity fails at a={a}, b={b}, c={c}")]
    DistributivityFailure { a: usize, b: usize, c: usize },
    #[error("λ_{a} is not an automorphism of (B,+) (fails at b={b}, c={c})")]
    LambdaNotAutomorphism { a: usize, b: usize, c: usize },
    #[error("λ is not a homomorphism: λ_(a∘b) != λ_a λ_b at a={a}, b={b}, c={c}")]
    LambdaNotHomomorphism { a: usize, b: usize, c: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteSkewBrace {
    add: FiniteGroup,
    mul: FiniteGroup,
    lam: Vec<usize>,
}

impl FiniteSkewBrace {
    /// Validates a pair of tables as a skew brace. Every check is exhaustive.
    pub fn from_tables<R: AsRef<[usize]>>(add: &[R], mul: &[R]) -> Result<Self, BraceError> {
        let add = FiniteGroup::from_table(add).map_err(BraceError::Additive)?;
        let mul = FiniteGroup::from_table(mul).map_err(BraceError::Multiplicative)?;
        Self::from_groups(add, mul)
    }

    pub fn from_groups(add: FiniteGroup, mul: FiniteGroup) -> Result<Self, BraceError> {
        let n = add.order();
        if mul.order() != n {
            return Err(BraceError::OrderMismatch {
                add: n,
                mul: mul.order(),
            });
        }
        if add.identity() != mul.identity() {
            return Err(BraceError::IdentityMismatch {
                add: add.identity(),
                mul: mul.identity(),
            });
        }
        for a in 0..n {
            let neg_a = add.inv(a);
            for b in 0..n {
                let ab = mul.op(a, b);
                for c in 0..n {
                    let lhs = mul.op(a, add.op(b, c));
                    let rhs = add.op(add.op(ab, neg_a), mul.op(a, c));
                    if lhs != rhs {
                        return Err(BraceError::DistributivityFailure { a, b, c });
                    }
                }
            }
        }
        let mut lam = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                lam[a * n + b] = add.op(add.inv(a), mul.op(a, b));
            }
        }
        let brace = FiniteSkewBrace { add, mul, lam };
        brace.check_lambda()?;
        Ok(brace)
    }

    fn check_lambda(&self) -> Result<(), BraceError> {
        let n = self.order();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.lambda(a, self.add(b, c)) != self.add(self.lambda(a, b), self.lambda(a, c)) {
                        return Err(BraceError::LambdaNotAutomorphism { a, b, c });
                    }
                    if self.lambda(self.mul(a, b), c) != self.lambda(a, self.lambda(b, c)) {
                        return Err(BraceError::LambdaNotHomomorphism { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    /// The trivial brace `(G, ·, ·)`.
    pub fn trivial(group: &FiniteGroup) -> Self {
        Self::from_groups(group.clone(), group.clone()).expect("trivial brace")
    }

    /// The almost trivial brace `(G, ·, ·op)`, i.e. `a∘b = b + a`.
    pub fn almost_trivial(group: &FiniteGroup) -> Self {
        Self::from_groups(group.clone(), group.opposite()).expect("almost trivial brace")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.add.order()
    }

    /// The shared neutral element.
    #[inline]
    pub fn zero(&self) -> usize {
        self.add.identity()
    }

    pub fn additive(&self) -> &FiniteGroup {
        &self.add
    }

    pub fn multiplicative(&self) -> &FiniteGroup {
        &self.mul
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.op(a, b)
    }

    /// `a - b`, i.e. `a + (-b)`.
    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add.op(a, self.add.inv(b))
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.add.inv(a)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul.op(a, b)
    }

    /// Multiplicative inverse `ā`.
    #[inline]
    pub fn bar(&self, a: usize) -> usize {
        self.mul.inv(a)
    }

    /// `λ_a(b) = -a + a∘b`.
    #[inline]
    pub fn lambda(&self, a: usize, b: usize) -> usize {
        self.lam[a * self.order() + b]
    }

    /// Row `λ_a` of the λ table.
    pub fn lambda_map(&self, a: usize) -> &[usize] {
        let n = self.order();
        &self.lam[a * n..(a + 1) * n]
    }

    /// `θ_(a,b)(c) = a + λ_b(c) - a`.
    #[inline]
    pub fn theta(&self, a: usize, b: usize, c: usize) -> usize {
        self.sub(self.add(a, self.lambda(b, c)), a)
    }

    /// `a * b = λ_a(b) - b`.
    #[inline]
    pub fn star(&self, a: usize, b: usize) -> usize {
        self.sub(self.lambda(a, b), b)
    }

    /// The star operation of the opposite brace, written in the original
    /// addition: `-b + (a∘b) - a`.
    #[inline]
    pub fn star_op(&self, a: usize, b: usize) -> usize {
        self.sub(self.add(self.neg(b), self.mul(a, b)), a)
    }

    /// `(B, +op, ∘)`.
    pub fn opposite(&self) -> FiniteSkewBrace {
        Self::from_groups(self.add.opposite(), self.mul.clone()).expect("opposite of a skew brace")
    }

    /// Right distributivity `(c+b)∘a = c∘a - a + b∘a` on all triples.
    pub fn is_two_sided(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| {
                    self.mul(self.add(c, b), a) == self.add(self.sub(self.mul(c, a), a), self.mul(b, a))
                })
            })
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.add == self.mul
    }

    pub fn is_abelian_type(&self) -> bool {
        self.add.is_abelian()
    }

    pub fn lambda_orbit(&self, x: usize) -> ElementSet {
        let n = self.order();
        ElementSet::from_members(n, (0..n).map(|a| self.lambda(a, x)))
    }

    pub fn theta_orbit(&self, x: usize) -> ElementSet {
        let n = self.order();
        // θ_(a,b)(x) ranges over the additive conjugates of λ-images.
        let mut out = ElementSet::empty(n);
        for y in self.lambda_orbit(x).iter() {
            for a in 0..n {
                out.insert(self.sub(self.add(a, y), a));
            }
        }
        out
    }

    /// `Stab_λ(x) = {a : λ_a(x) = x}`, a subgroup of `(B,∘)`.
    pub fn stab_lambda(&self, x: usize) -> ElementSet {
        let n = self.order();
        ElementSet::from_members(n, (0..n).filter(|&a| self.lambda(a, x) == x))
    }

    /// Number of pairs `(a,b)` with `θ_(a,b)(x) = x`.
    pub fn stab_theta_size(&self, x: usize) -> usize {
        let n = self.order();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.theta(a, b, x) == x)
            .count()
    }

    pub fn ker_lambda(&self) -> ElementSet {
        let n = self.order();
        ElementSet::from_members(n, (0..n).filter(|&a| (0..n).all(|b| self.lambda(a, b) == b)))
    }

    /// Elements fixed by every `λ_x`.
    pub fn fix(&self) -> ElementSet {
        let n = self.order();
        ElementSet::from_members(n, (0..n).filter(|&a| (0..n).all(|x| self.lambda(x, a) == a)))
    }

    pub fn center_add(&self) -> ElementSet {
        self.add.center()
    }

    pub fn center_mul(&self) -> ElementSet {
        self.mul.center()
    }

    /// `Soc(B) = ker λ ∩ Z(B,+)`.
    pub fn soc(&self) -> ElementSet {
        self.ker_lambda().intersection(&self.center_add())
    }

    /// `Ann(B) = Soc(B) ∩ Z(B,∘)`.
    pub fn ann(&self) -> ElementSet {
        self.soc().intersection(&self.center_mul())
    }

    /// `B² = B*B`, the additive subgroup generated by all `a*b`.
    pub fn star_span(&self) -> ElementSet {
        let n = self.order();
        let stars = ElementSet::from_members(
            n,
            (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| self.star(a, b)),
        );
        self.add.closure(&stars)
    }

    /// `B²` of the opposite brace (as a subset of the same carrier).
    pub fn b2_op(&self) -> ElementSet {
        self.opposite().star_span()
    }

    /// `B'`, generated additively by `[B,B]_+` and `B²`.
    pub fn commutator_ideal(&self) -> ElementSet {
        let n = self.order();
        let mut gens = ElementSet::empty(n);
        for a in 0..n {
            for b in 0..n {
                gens.insert(self.add(self.add(self.neg(a), self.neg(b)), self.add(a, b)));
                gens.insert(self.star(a, b));
            }
        }
        self.add.closure(&gens)
    }

    /// `{x : |[x]_λ| <= cap}`; with `cap = n` this is the whole carrier.
    pub fn lambda_f(&self, cap: usize) -> ElementSet {
        let n = self.order();
        ElementSet::from_members(n, (0..n).filter(|&x| self.lambda_orbit(x).len() <= cap))
    }

    /// `{x : |[x]_θ| <= cap}`.
    pub fn theta_f(&self, cap: usize) -> ElementSet {
        let n = self.order();
        ElementSet::from_members(n, (0..n).filter(|&x| self.theta_orbit(x).len() <= cap))
    }

    /// Relabels along a bijection `perm` (old index -> new index).
    pub fn relabel(&self, perm: &[usize]) -> FiniteSkewBrace {
        Self::from_groups(self.add.relabel(perm), self.mul.relabel(perm)).expect("relabelled brace")
    }

    /// Multiplicative conjugation `x -> ḡ∘x∘g` as a table.
    pub fn mul_conjugation(&self, g: usize) -> Vec<usize> {
        (0..self.order())
            .map(|x| self.mul(self.mul(self.bar(g), x), g))
            .collect()
    }

    /// Whether a bijection of the carrier preserves both tables.
    pub fn is_automorphism(&self, map: &[usize]) -> bool {
        let n = self.order();
        (0..n).all(|a| {
            (0..n).all(|b| {
                map[self.add(a, b)] == self.add(map[a], map[b])
                    && map[self.mul(a, b)] == self.mul(map[a], map[b])
            })
        })
    }
}
