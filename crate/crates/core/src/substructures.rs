//! Sub skew braces, the ideal hierarchy, indices and the constructive
//! procedures behind the finite-index and finite-orbit results.
//!
//! Every procedure here works on an explicit finite brace, so each
//! postcondition of the underlying statement is checked directly rather than
//! assumed.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::brace::FiniteSkewBrace;
use crate::group::{subgroup_automorphisms, FiniteGroup};
use crate::set::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubstructureError {
    #[error("not a sub skew brace: {0:?}")]
    InvalidSubbrace(ElementSet),
    #[error("the brace is not two-sided")]
    NotTwoSided,
    #[error("the set does not generate the brace")]
    NotGenerating,
    #[error("the set does not generate (B,+)")]
    NotAdditivelyGenerating,
    #[error("not a subgroup of (B,+): {0:?}")]
    NotAddSubgroup(ElementSet),
}

/// A sub skew brace of a parent brace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubBrace<'a> {
    parent: &'a FiniteSkewBrace,
    members: ElementSet,
}

impl<'a> SubBrace<'a> {
    pub fn new(parent: &'a FiniteSkewBrace, members: ElementSet) -> Result<Self, SubstructureError> {
        if is_subbrace(parent, &members) {
            Ok(SubBrace { parent, members })
        } else {
            Err(SubstructureError::InvalidSubbrace(members))
        }
    }

    /// The whole brace as a sub skew brace of itself.
    pub fn whole(parent: &'a FiniteSkewBrace) -> Self {
        SubBrace {
            parent,
            members: ElementSet::full(parent.order()),
        }
    }

    pub fn parent(&self) -> &'a FiniteSkewBrace {
        self.parent
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn into_members(self) -> ElementSet {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// How coset representatives are picked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransversalRule {
    /// Least index in each coset.
    LeastIndex,
    /// A uniformly random member of each coset, from a seeded generator.
    Seeded(u64),
}

/// Representatives of the left cosets `g ⋆ sub` for the operation `op`.
pub fn left_transversal(
    n: usize,
    op: impl Fn(usize, usize) -> usize,
    sub: &ElementSet,
    rule: TransversalRule,
) -> Vec<usize> {
    let mut rng = match rule {
        TransversalRule::LeastIndex => None,
        TransversalRule::Seeded(seed) => Some(<rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed)),
    };
    let mut covered = ElementSet::empty(n);
    let mut reps = Vec::new();
    for g in 0..n {
        if covered.contains(g) {
            continue;
        }
        let coset = ElementSet::from_members(n, sub.iter().map(|h| op(g, h)));
        covered.union_with(&coset);
        let rep = match rng.as_mut() {
            None => g,
            Some(rng) => {
                let members = coset.to_vec();
                members[rng.gen_range(0..members.len())]
            }
        };
        reps.push(rep);
    }
    reps
}

/// Right-coset representatives `sub ⋆ g`.
pub fn right_transversal(
    n: usize,
    op: impl Fn(usize, usize) -> usize,
    sub: &ElementSet,
    rule: TransversalRule,
) -> Vec<usize> {
    left_transversal(n, |g, h| op(h, g), sub, rule)
}

/// Least subgroup of `(B,+)` containing `s`.
pub fn add_closure(b: &FiniteSkewBrace, s: &ElementSet) -> ElementSet {
    b.additive().closure(s)
}

/// Least subgroup of `(B,∘)` containing `s`.
pub fn mul_closure(b: &FiniteSkewBrace, s: &ElementSet) -> ElementSet {
    b.multiplicative().closure(s)
}

/// Least sub skew brace containing `s`: alternate the two group closures
/// until neither adds anything.
pub fn subbrace_closure<'a>(b: &'a FiniteSkewBrace, s: &ElementSet) -> SubBrace<'a> {
    let mut current = add_closure(b, s);
    loop {
        let next = add_closure(b, &mul_closure(b, &current));
        if next == current {
            break;
        }
        current = next;
    }
    SubBrace {
        parent: b,
        members: current,
    }
}

/// Subgroup of `(B,+)` that is also closed under `∘`.
pub fn is_subbrace(b: &FiniteSkewBrace, s: &ElementSet) -> bool {
    b.additive().is_subgroup(s) && b.multiplicative().is_subgroup(s)
}

/// Subgroup of `(B,+)` with `λ_x(S) ⊆ S` for every `x ∈ B`.
pub fn is_left_ideal(b: &FiniteSkewBrace, s: &ElementSet) -> bool {
    b.additive().is_subgroup(s) && (0..b.order()).all(|x| s.iter().all(|y| s.contains(b.lambda(x, y))))
}

/// Left ideal that is normal in `(B,+)`.
pub fn is_strong_left_ideal(b: &FiniteSkewBrace, s: &ElementSet) -> bool {
    is_left_ideal(b, s) && b.additive().is_normal(s)
}

/// Strong left ideal that is normal in `(B,∘)`.
pub fn is_ideal(b: &FiniteSkewBrace, s: &ElementSet) -> bool {
    is_strong_left_ideal(b, s) && b.multiplicative().is_normal(s)
}

/// `θ_(a,b)(S) ⊆ S` for all `a, b`.
pub fn is_theta_invariant(b: &FiniteSkewBrace, s: &ElementSet) -> bool {
    s.iter().all(|x| b.theta_orbit(x).is_subset(s))
}

/// Least strong left ideal containing `s`, computed as a fixpoint of the
/// defining closure conditions (additive subgroup, λ-images, additive
/// conjugates).
pub fn strong_left_ideal_closure(b: &FiniteSkewBrace, s: &ElementSet) -> ElementSet {
    let n = b.order();
    let mut current = add_closure(b, s);
    loop {
        let mut grown = current.clone();
        for y in current.iter() {
            for x in 0..n {
                grown.insert(b.lambda(x, y));
                grown.insert(b.sub(b.add(x, y), x));
            }
        }
        let closed = add_closure(b, &grown);
        if closed == current {
            return current;
        }
        current = closed;
    }
}

pub fn index_add(sub: &SubBrace<'_>) -> usize {
    sub.parent.additive().left_cosets(&sub.members).len()
}

pub fn index_mul(sub: &SubBrace<'_>) -> usize {
    sub.parent.multiplicative().left_cosets(&sub.members).len()
}

/// A strong left ideal of finite index inside the sub skew brace `a`:
/// intersect the λ-translates of `a` over a multiplicative transversal, then
/// intersect the additive conjugates of that over an additive transversal.
pub fn sli_in_subbrace(b: &FiniteSkewBrace, a: &ElementSet) -> Result<ElementSet, SubstructureError> {
    sli_in_subbrace_with(b, a, TransversalRule::LeastIndex)
}

pub fn sli_in_subbrace_with(
    b: &FiniteSkewBrace,
    a: &ElementSet,
    rule: TransversalRule,
) -> Result<ElementSet, SubstructureError> {
    if !is_subbrace(b, a) {
        return Err(SubstructureError::InvalidSubbrace(a.clone()));
    }
    let n = b.order();
    let mul_reps = left_transversal(n, |x, y| b.mul(x, y), a, rule);
    let mut l1 = ElementSet::full(n);
    for &t in &mul_reps {
        l1.intersect_with(&a.image(b.lambda_map(t)));
    }
    let add_reps = left_transversal(n, |x, y| b.add(x, y), &l1, rule);
    let mut l = ElementSet::full(n);
    for &s in &add_reps {
        l.intersect_with(&ElementSet::from_members(n, l1.iter().map(|y| b.sub(b.add(s, y), s))));
    }
    Ok(l)
}

/// In a two-sided brace, an ideal contained in the sub skew brace `a`:
/// intersect the multiplicative conjugates `t̄∘L∘t` of the strong left ideal
/// from [`sli_in_subbrace`] over right-coset representatives of `L`.
pub fn ideal_in_subbrace_two_sided(b: &FiniteSkewBrace, a: &ElementSet) -> Result<ElementSet, SubstructureError> {
    if !b.is_two_sided() {
        return Err(SubstructureError::NotTwoSided);
    }
    let n = b.order();
    let l = sli_in_subbrace(b, a)?;
    let reps = right_transversal(n, |x, y| b.mul(x, y), &l, TransversalRule::LeastIndex);
    let mut ideal = ElementSet::full(n);
    for &t in &reps {
        ideal.intersect_with(&l.image(&b.mul_conjugation(t)));
    }
    Ok(ideal)
}

/// θ-closure of `x` followed by additive closure.
pub fn dietzmann_closure(b: &FiniteSkewBrace, x: &ElementSet) -> ElementSet {
    let mut orbit_union = ElementSet::empty(b.order());
    for y in x.iter() {
        orbit_union.union_with(&b.theta_orbit(y));
    }
    add_closure(b, &orbit_union)
}

/// Turns brace generators `t` into a set `U = T' ∪ -T'`, with `T'` the union
/// of the λ-images of `t`, that generates both groups.
pub fn gens_to_group_gens(b: &FiniteSkewBrace, t: &ElementSet) -> Result<ElementSet, SubstructureError> {
    let n = b.order();
    if !subbrace_closure(b, t).members.is_full() {
        return Err(SubstructureError::NotGenerating);
    }
    let mut u = ElementSet::empty(n);
    for x in t.iter() {
        for y in b.lambda_orbit(x).iter() {
            u.insert(y);
            u.insert(b.neg(y));
        }
    }
    debug_assert!(add_closure(b, &u).is_full());
    debug_assert!(mul_closure(b, &u).is_full());
    Ok(u)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LamfBound {
    /// `|B : ker λ|`, counted with multiplicative cosets.
    pub index: usize,
    pub orbit_sizes: Vec<usize>,
    /// Product of the generators' λ-orbit sizes.
    pub product_bound: usize,
    /// `k^t`, `k` the largest generator orbit, `t` the number of generators.
    pub power_bound: usize,
    /// `ker λ` equals the intersection of the generators' stabilizers.
    pub kernel_is_stabilizer_meet: bool,
    pub holds: bool,
}

pub fn verify_lamf_bound(b: &FiniteSkewBrace, generators: &ElementSet) -> Result<LamfBound, SubstructureError> {
    let n = b.order();
    if !add_closure(b, generators).is_full() {
        return Err(SubstructureError::NotAdditivelyGenerating);
    }
    let ker = b.ker_lambda();
    let mut meet = ElementSet::full(n);
    let mut orbit_sizes = Vec::new();
    for x in generators.iter() {
        meet.intersect_with(&b.stab_lambda(x));
        orbit_sizes.push(b.lambda_orbit(x).len());
    }
    let index = b.multiplicative().left_cosets(&ker).len();
    let product_bound = orbit_sizes.iter().product();
    let k = orbit_sizes.iter().copied().max().unwrap_or(1);
    let power_bound = saturating_pow(k, orbit_sizes.len());
    let kernel_is_stabilizer_meet = meet == ker;
    Ok(LamfBound {
        index,
        holds: kernel_is_stabilizer_meet && index <= product_bound && product_bound <= power_bound,
        orbit_sizes,
        product_bound,
        power_bound,
        kernel_is_stabilizer_meet,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaFgBound {
    /// `|B : Soc(B)|`.
    pub soc_index: usize,
    pub orbit_sizes: Vec<usize>,
    pub product_bound: usize,
    pub power_bound: usize,
    pub holds: bool,
}

pub fn verify_thetafg_bound(b: &FiniteSkewBrace, generators: &ElementSet) -> Result<ThetaFgBound, SubstructureError> {
    if !add_closure(b, generators).is_full() {
        return Err(SubstructureError::NotAdditivelyGenerating);
    }
    let soc_index = b.additive().left_cosets(&b.soc()).len();
    let orbit_sizes: Vec<usize> = generators.iter().map(|x| b.theta_orbit(x).len()).collect();
    let product_bound = orbit_sizes.iter().product();
    let k = orbit_sizes.iter().copied().max().unwrap_or(1);
    let power_bound = saturating_pow(k, orbit_sizes.len());
    Ok(ThetaFgBound {
        soc_index,
        holds: soc_index <= product_bound && product_bound <= power_bound,
        orbit_sizes,
        product_bound,
        power_bound,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OversocBound {
    /// `|(B,∘) : ker λ|`.
    pub ker_index: usize,
    /// `|(B,+) : Z(B,+)|`.
    pub center_index: usize,
    pub max_theta_orbit: usize,
    pub holds: bool,
}

pub fn verify_oversoc_bound(b: &FiniteSkewBrace) -> OversocBound {
    let ker_index = b.multiplicative().left_cosets(&b.ker_lambda()).len();
    let center_index = b.additive().left_cosets(&b.center_add()).len();
    let max_theta_orbit = (0..b.order()).map(|c| b.theta_orbit(c).len()).max().unwrap_or(1);
    OversocBound {
        ker_index,
        center_index,
        max_theta_orbit,
        holds: max_theta_orbit <= ker_index * center_index,
    }
}

/// `{b : λ_b(H) = H}`.
pub fn stab_lambda_set(b: &FiniteSkewBrace, h: &ElementSet) -> Result<ElementSet, SubstructureError> {
    require_add_subgroup(b, h)?;
    let n = b.order();
    Ok(ElementSet::from_members(n, (0..n).filter(|&x| h.image(b.lambda_map(x)) == *h)))
}

/// `{b : λ_b(h) = h for all h ∈ H}`.
pub fn pstab(b: &FiniteSkewBrace, h: &ElementSet) -> Result<ElementSet, SubstructureError> {
    require_add_subgroup(b, h)?;
    let n = b.order();
    Ok(ElementSet::from_members(n, (0..n).filter(|&x| h.iter().all(|y| b.lambda(x, y) == y))))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientEmbedding {
    pub stab_size: usize,
    pub pstab_size: usize,
    pub stab_is_subgroup: bool,
    pub pstab_is_normal: bool,
    pub quotient_order: usize,
    /// `|Aut(H,+)|` by brute-force search.
    pub aut_order: usize,
    pub divides: bool,
}

impl QuotientEmbedding {
    pub fn holds(&self) -> bool {
        self.stab_is_subgroup && self.pstab_is_normal && self.divides
    }
}

pub fn quotient_embedding_check(b: &FiniteSkewBrace, h: &ElementSet) -> Result<QuotientEmbedding, SubstructureError> {
    let stab = stab_lambda_set(b, h)?;
    let ps = pstab(b, h)?;
    let mul = b.multiplicative();
    let stab_is_subgroup = mul.is_subgroup(&stab);
    let pstab_is_normal = ps.is_subset(&stab)
        && ps.iter().all(|x| stab.iter().all(|g| ps.contains(mul.op(mul.op(g, x), mul.inv(g)))));
    let quotient_order = stab.len() / ps.len();
    let aut_order = subgroup_automorphisms(b.additive(), h).len();
    Ok(QuotientEmbedding {
        stab_size: stab.len(),
        pstab_size: ps.len(),
        stab_is_subgroup,
        pstab_is_normal,
        quotient_order,
        aut_order,
        divides: stab.len() % ps.len() == 0 && aut_order.is_multiple_of(quotient_order),
    })
}

fn require_add_subgroup(b: &FiniteSkewBrace, h: &ElementSet) -> Result<(), SubstructureError> {
    if b.additive().is_subgroup(h) {
        Ok(())
    } else {
        Err(SubstructureError::NotAddSubgroup(h.clone()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct B2Generation {
    /// Coset representatives of `ker λ` in `(B,∘)`.
    pub mul_reps: Vec<usize>,
    /// Coset representatives of `Fix(B)` in `(B,+)`.
    pub add_reps: Vec<usize>,
    /// The products `x_i * y_j`.
    pub generators: ElementSet,
    pub span: ElementSet,
    pub star_span: ElementSet,
}

impl B2Generation {
    pub fn equal(&self) -> bool {
        self.span == self.star_span
    }
}

/// Checks that the stars `x_i * y_j` of coset representatives already span
/// `B²` additively.
pub fn b2_coset_generators(b: &FiniteSkewBrace) -> B2Generation {
    b2_coset_generators_with(b, TransversalRule::LeastIndex)
}

pub fn b2_coset_generators_with(b: &FiniteSkewBrace, rule: TransversalRule) -> B2Generation {
    let n = b.order();
    let mul_reps = left_transversal(n, |x, y| b.mul(x, y), &b.ker_lambda(), rule);
    let add_reps = left_transversal(n, |x, y| b.add(x, y), &b.fix(), rule);
    let generators = ElementSet::from_members(
        n,
        mul_reps.iter().flat_map(|&x| add_reps.iter().map(move |&y| b.star(x, y))),
    );
    B2Generation {
        span: add_closure(b, &generators),
        star_span: b.star_span(),
        mul_reps,
        add_reps,
        generators,
    }
}

/// All sub skew braces, found by extending known ones by a single element and
/// closing. Sorted by size, then by members.
pub fn enumerate_subbraces(b: &FiniteSkewBrace) -> Vec<SubBrace<'_>> {
    let n = b.order();
    let zero = ElementSet::singleton(n, b.zero());
    let mut seen: BTreeSet<ElementSet> = BTreeSet::new();
    seen.insert(zero.clone());
    let mut queue = VecDeque::from([zero]);
    while let Some(s) = queue.pop_front() {
        for g in 0..n {
            if s.contains(g) {
                continue;
            }
            let mut ext = s.clone();
            ext.insert(g);
            let closed = subbrace_closure(b, &ext).members;
            if seen.insert(closed.clone()) {
                queue.push_back(closed);
            }
        }
    }
    let mut out: Vec<SubBrace<'_>> = seen.into_iter().map(|members| SubBrace { parent: b, members }).collect();
    out.sort_by(|x, y| x.members.len().cmp(&y.members.len()).then_with(|| x.members.cmp(&y.members)));
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BfcExponent {
    /// Largest conjugacy class size.
    pub k: usize,
    /// Exponent of `G/Z(G)`.
    pub exponent: usize,
    pub k_factorial: u64,
    pub divides: bool,
}

/// For a finite group with conjugacy classes of size at most `k`, the
/// exponent of `G/Z(G)` divides `k!`.
pub fn check_bfc_exponent(g: &FiniteGroup) -> BfcExponent {
    let n = g.order();
    let k = (0..n).map(|x| g.conjugacy_class(x).len()).max().unwrap_or(1);
    let center = g.center();
    let exponent = (0..n)
        .map(|x| {
            // order of xZ in G/Z
            let mut y = x;
            let mut m = 1;
            while !center.contains(y) {
                y = g.op(y, x);
                m += 1;
            }
            m
        })
        .fold(1, lcm);
    let k_factorial = factorial(k);
    BfcExponent {
        k,
        exponent,
        k_factorial,
        divides: k_factorial.is_multiple_of(exponent as u64),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaOrderBound {
    /// Largest θ-orbit size.
    pub k: usize,
    pub max_lambda_order: usize,
    pub k_factorial: u64,
    pub holds: bool,
}

/// Each `λ_b` has order at most `k!`, `k` the largest θ-orbit.
pub fn check_lambda_order_bound(b: &FiniteSkewBrace) -> LambdaOrderBound {
    let n = b.order();
    let k = (0..n).map(|x| b.theta_orbit(x).len()).max().unwrap_or(1);
    let max_lambda_order = (0..n).map(|a| permutation_order(b.lambda_map(a))).max().unwrap_or(1);
    let k_factorial = factorial(k);
    LambdaOrderBound {
        k,
        max_lambda_order,
        k_factorial,
        holds: (max_lambda_order as u64) <= k_factorial && k_factorial.is_multiple_of(max_lambda_order as u64),
    }
}

/// Order of a permutation given as a table: lcm of its cycle lengths.
pub fn permutation_order(perm: &[usize]) -> usize {
    let mut seen = alloc::vec![false; perm.len()];
    let mut order = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        order = lcm(order, len);
    }
    order
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).fold(1u64, |acc, i| acc.saturating_mul(i))
}

fn lcm(a: usize, b: usize) -> usize {
    a / num_integer::gcd(a, b) * b
}

fn saturating_pow(base: usize, exp: usize) -> usize {
    (0..exp).fold(1usize, |acc, _| acc.saturating_mul(base))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named::*;
    use alloc::vec;

    fn set(n: usize, xs: &[usize]) -> ElementSet {
        ElementSet::from_members(n, xs.iter().copied())
    }

    #[test]
    fn closures_of_small_sets() {
        let z6 = FiniteSkewBrace::trivial(&cyclic(6));
        assert_eq!(add_closure(&z6, &ElementSet::empty(6)).to_vec(), vec![0]);
        assert_eq!(add_closure(&z6, &set(6, &[2])).to_vec(), vec![0, 2, 4]);
        assert_eq!(
            subbrace_closure(&z6, &set(6, &[2])).members(),
            &add_closure(&z6, &set(6, &[2]))
        );
        assert_eq!(subbrace_closure(&z6, &set(6, &[0])).members().to_vec(), vec![0]);
    }

    #[test]
    fn trivial_z4_subbraces() {
        let b = FiniteSkewBrace::trivial(&cyclic(4));
        let subs: Vec<Vec<usize>> = enumerate_subbraces(&b).iter().map(|s| s.members().to_vec()).collect();
        assert_eq!(subs, vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn prime_order_has_two_subbraces() {
        for p in [2, 3, 5, 7] {
            assert_eq!(enumerate_subbraces(&FiniteSkewBrace::trivial(&cyclic(p))).len(), 2);
        }
    }

    #[test]
    fn whole_brace_edge_cases() {
        let b = FiniteSkewBrace::almost_trivial(&symmetric(3));
        let whole = SubBrace::whole(&b);
        assert_eq!(index_add(&whole), 1);
        assert_eq!(index_mul(&whole), 1);
        assert!(sli_in_subbrace(&b, whole.members()).unwrap().is_full());
        assert!(ideal_in_subbrace_two_sided(&b, whole.members()).unwrap().is_full());
        let zero = set(6, &[0]);
        assert_eq!(strong_left_ideal_closure(&b, &zero), zero);
        assert_eq!(dietzmann_closure(&b, &zero), zero);
        for pred in [is_subbrace, is_left_ideal, is_strong_left_ideal, is_ideal] {
            assert!(pred(&b, &zero));
            assert!(pred(&b, &ElementSet::full(6)));
        }
    }

    #[test]
    fn invalid_subbrace_is_rejected() {
        let b = FiniteSkewBrace::trivial(&cyclic(4));
        assert!(matches!(
            sli_in_subbrace(&b, &set(4, &[0, 1])),
            Err(SubstructureError::InvalidSubbrace(_))
        ));
        assert!(SubBrace::new(&b, set(4, &[0, 1])).is_err());
        assert!(SubBrace::new(&b, set(4, &[0, 2])).is_ok());
    }

    #[test]
    fn trivial_brace_sli_is_normal_core() {
        let b = FiniteSkewBrace::trivial(&symmetric(3));
        let s3 = symmetric(3);
        for x in 0..6 {
            let a = s3.closure(&set(6, &[x]));
            let l = sli_in_subbrace(&b, &a).unwrap();
            let core = (0..6).fold(a.clone(), |acc, g| {
                acc.intersection(&ElementSet::from_members(6, a.iter().map(|h| s3.op(s3.op(g, h), s3.inv(g)))))
            });
            assert_eq!(l, core);
        }
    }

    #[test]
    fn trivial_z6_group_generators() {
        let b = FiniteSkewBrace::trivial(&cyclic(6));
        assert_eq!(gens_to_group_gens(&b, &set(6, &[1])).unwrap().to_vec(), vec![1, 5]);
        assert_eq!(
            gens_to_group_gens(&b, &set(6, &[2])),
            Err(SubstructureError::NotGenerating)
        );
    }

    #[test]
    fn trivial_bounds() {
        let b = FiniteSkewBrace::trivial(&cyclic(4));
        let report = verify_lamf_bound(&b, &set(4, &[1])).unwrap();
        assert_eq!((report.index, report.power_bound), (1, 1));
        assert!(report.holds);
        let theta = verify_thetafg_bound(&b, &set(4, &[1])).unwrap();
        assert_eq!((theta.soc_index, theta.power_bound), (1, 1));
        let oversoc = verify_oversoc_bound(&b);
        assert_eq!(oversoc.max_theta_orbit, 1);
        assert_eq!(
            verify_lamf_bound(&b, &set(4, &[2])),
            Err(SubstructureError::NotAdditivelyGenerating)
        );
    }

    #[test]
    fn quotient_check_on_extremes() {
        let b = FiniteSkewBrace::almost_trivial(&dihedral(4));
        let zero = set(8, &[0]);
        let q = quotient_embedding_check(&b, &zero).unwrap();
        assert_eq!((q.stab_size, q.pstab_size, q.quotient_order), (8, 8, 1));
        let full = ElementSet::full(8);
        let q = quotient_embedding_check(&b, &full).unwrap();
        assert_eq!(q.pstab_size, b.ker_lambda().len());
        assert!(q.holds());
        assert!(matches!(
            quotient_embedding_check(&b, &set(8, &[0, 1])),
            Err(SubstructureError::NotAddSubgroup(_))
        ));
    }

    #[test]
    fn permutation_orders() {
        assert_eq!(permutation_order(&[0, 1, 2]), 1);
        assert_eq!(permutation_order(&[1, 0, 3, 4, 2]), 6);
    }

    #[test]
    fn bfc_on_s3() {
        let r = check_bfc_exponent(&symmetric(3));
        // classes of size 1, 2, 3; S3/Z = S3 has exponent 6 which divides 3!.
        assert_eq!((r.k, r.exponent, r.k_factorial), (3, 6, 6));
        assert!(r.divides);
    }
}
