//! Finite groups given by Cayley tables over the indices `0..n`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::set::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("empty table")]
    Empty,
    #[error("row {row} has length {len}, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry {value} at ({row}, {col}) is outside 0..{order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("not a Latin square: repeated entry at ({row}, {col})")]
    NotLatinSquare { row: usize, col: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
}

/// A validated finite group. Immutable once constructed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a Cayley table `table[i][j] = i*j`.
    ///
    /// Checks run in the order shape, range, Latin square, identity,
    /// associativity; the first failure is reported.
    pub fn from_table<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        let mut table = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != n {
                return Err(GroupError::NotSquare {
                    row,
                    len: r.len(),
                    expected: n,
                });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(GroupError::EntryOutOfRange {
                        row,
                        col,
                        value,
                        order: n,
                    });
                }
            }
            table.extend_from_slice(r);
        }
        Self::from_flat(n, table)
    }

    /// Same as [`FiniteGroup::from_table`] on a row-major flat table.
    pub fn from_flat(n: usize, table: Vec<usize>) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::Empty);
        }
        assert_eq!(table.len(), n * n, "flat table has wrong length");
        if let Some(pos) = table.iter().position(|&v| v >= n) {
            return Err(GroupError::EntryOutOfRange {
                row: pos / n,
                col: pos % n,
                value: table[pos],
                order: n,
            });
        }
        check_latin(n, &table)?;

        let identity = (0..n)
            .find(|&e| (0..n).all(|j| table[e * n + j] == j && table[j * n + e] == j))
            .ok_or(GroupError::NoIdentity)?;

        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b];
                for c in 0..n {
                    if table[ab * n + c] != table[a * n + table[b * n + c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }

        let mut inv = vec![0; n];
        for (a, slot) in inv.iter_mut().enumerate() {
            // Latin rows guarantee exactly one solution.
            *slot = (0..n).find(|&b| table[a * n + b] == identity).unwrap();
        }
        Ok(FiniteGroup {
            order: n,
            table,
            identity,
            inv,
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inv
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    /// The opposite group `a *op b = b * a` (the transposed table).
    pub fn opposite(&self) -> FiniteGroup {
        let n = self.order;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.op(b, a);
            }
        }
        FiniteGroup {
            order: n,
            table,
            identity: self.identity,
            inv: self.inv.clone(),
        }
    }

    /// `a^k` for a non-negative exponent.
    pub fn pow(&self, a: usize, k: u64) -> usize {
        let mut result = self.identity;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = self.op(result, base);
            }
            base = self.op(base, base);
            k >>= 1;
        }
        result
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn center(&self) -> ElementSet {
        let n = self.order;
        ElementSet::from_members(
            n,
            (0..n).filter(|&z| (0..n).all(|g| self.op(z, g) == self.op(g, z))),
        )
    }

    /// Conjugacy class `{g x g^-1}` of `x`.
    pub fn conjugacy_class(&self, x: usize) -> ElementSet {
        ElementSet::from_members(
            self.order,
            (0..self.order).map(|g| self.op(self.op(g, x), self.inv(g))),
        )
    }

    /// Least subgroup containing `generators`.
    pub fn closure(&self, generators: &ElementSet) -> ElementSet {
        let mut out = ElementSet::singleton(self.order, self.identity);
        let mut queue = VecDeque::from([self.identity]);
        let gens = generators.to_vec();
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.op(x, g);
                if out.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        out
    }

    /// Whether `s` is a subgroup (contains the identity, closed under the
    /// operation; finiteness supplies inverses).
    pub fn is_subgroup(&self, s: &ElementSet) -> bool {
        s.contains(self.identity) && s.iter().all(|a| s.iter().all(|b| s.contains(self.op(a, b))))
    }

    pub fn is_normal(&self, s: &ElementSet) -> bool {
        s.iter().all(|x| {
            (0..self.order).all(|g| s.contains(self.op(self.op(g, x), self.inv(g))))
        })
    }

    /// Left cosets `g * sub`, as a list of (representative, coset) with
    /// representatives chosen by least index.
    pub fn left_cosets(&self, sub: &ElementSet) -> Vec<(usize, ElementSet)> {
        let mut covered = ElementSet::empty(self.order);
        let mut out = Vec::new();
        for g in 0..self.order {
            if covered.contains(g) {
                continue;
            }
            let coset = ElementSet::from_members(self.order, sub.iter().map(|h| self.op(g, h)));
            covered.union_with(&coset);
            out.push((g, coset));
        }
        out
    }

    /// All automorphisms of the group, each as a map `phi[x]`.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        subgroup_automorphisms(self, &ElementSet::full(self.order))
    }

    /// Relabels the group along a bijection `perm` (old index -> new index).
    pub fn relabel(&self, perm: &[usize]) -> FiniteGroup {
        let n = self.order;
        let mut table = vec![0; n * n];
        let mut inv = vec![0; n];
        for a in 0..n {
            inv[perm[a]] = perm[self.inv[a]];
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.op(a, b)];
            }
        }
        FiniteGroup {
            order: n,
            table,
            identity: perm[self.identity],
            inv,
        }
    }
}

fn check_latin(n: usize, table: &[usize]) -> Result<(), GroupError> {
    let mut seen = vec![false; n];
    for row in 0..n {
        seen.iter_mut().for_each(|s| *s = false);
        for col in 0..n {
            let v = table[row * n + col];
            if core::mem::replace(&mut seen[v], true) {
                return Err(GroupError::NotLatinSquare { row, col });
            }
        }
    }
    for col in 0..n {
        seen.iter_mut().for_each(|s| *s = false);
        for row in 0..n {
            let v = table[row * n + col];
            if core::mem::replace(&mut seen[v], true) {
                return Err(GroupError::NotLatinSquare { row, col });
            }
        }
    }
    Ok(())
}

/// Greedy generating set of a subgroup: scan members in index order and keep
/// those not yet generated.
pub fn greedy_generators(group: &FiniteGroup, sub: &ElementSet) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = ElementSet::singleton(group.order(), group.identity());
    for x in sub.iter() {
        if !span.contains(x) {
            gens.push(x);
            span = group.closure(&ElementSet::from_members(group.order(), gens.iter().copied()));
        }
    }
    gens
}

/// Automorphisms of a subgroup `sub`, found by backtracking over images of a
/// greedy generating set. Maps are returned over the whole carrier with
/// `phi[x] = x` outside `sub`.
pub fn subgroup_automorphisms(group: &FiniteGroup, sub: &ElementSet) -> Vec<Vec<usize>> {
    let gens = greedy_generators(group, sub);
    let orders: Vec<usize> = gens.iter().map(|&g| group.element_order(g)).collect();
    let candidates: Vec<Vec<usize>> = orders
        .iter()
        .map(|&o| sub.iter().filter(|&y| group.element_order(y) == o).collect())
        .collect();
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    backtrack_automorphisms(group, sub, &gens, &candidates, &mut images, &mut out);
    out
}

fn backtrack_automorphisms(
    group: &FiniteGroup,
    sub: &ElementSet,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let depth = images.len();
    if let Some(phi) = extend_to_homomorphism(group, &gens[..depth], images) {
        if depth == gens.len() {
            // Full generating set: phi is defined on all of `sub`.
            let mut full: Vec<usize> = (0..group.order()).collect();
            for x in sub.iter() {
                full[x] = phi[x];
            }
            out.push(full);
            return;
        }
    } else {
        return;
    }
    for &y in &candidates[depth] {
        images.push(y);
        backtrack_automorphisms(group, sub, gens, candidates, images, out);
        images.pop();
    }
}

/// Extends `gens[i] -> images[i]` to a map on the generated subgroup; returns
/// `None` unless it is an injective homomorphism.
fn extend_to_homomorphism(group: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = group.order();
    let unset = usize::MAX;
    let mut phi = vec![unset; n];
    phi[group.identity()] = group.identity();
    let mut members = vec![group.identity()];
    let mut queue = VecDeque::from([group.identity()]);
    while let Some(x) = queue.pop_front() {
        for (&g, &img) in gens.iter().zip(images) {
            let y = group.op(x, g);
            let fy = group.op(phi[x], img);
            if phi[y] == unset {
                phi[y] = fy;
                members.push(y);
                queue.push_back(y);
            } else if phi[y] != fy {
                return None;
            }
        }
    }
    let mut hit = vec![false; n];
    for &x in &members {
        if core::mem::replace(&mut hit[phi[x]], true) {
            return None;
        }
    }
    for &a in &members {
        for &b in &members {
            if phi[group.op(a, b)] != group.op(phi[a], phi[b]) {
                return None;
            }
        }
    }
    Some(phi)
}

/// Frequently used small groups. Identity is always index 0.
pub mod named {
    use super::*;

    /// Cyclic group `Z_n` with `i + j mod n`.
    pub fn cyclic(n: usize) -> FiniteGroup {
        let rows: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        FiniteGroup::from_table(&rows).expect("cyclic table is a group")
    }

    /// Direct product; element `(g, h)` has index `g * |H| + h`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
        let (m, k) = (g.order(), h.order());
        let n = m * k;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let (a1, a2) = (a / k, a % k);
                let (b1, b2) = (b / k, b % k);
                table[a * n + b] = g.op(a1, b1) * k + h.op(a2, b2);
            }
        }
        let out = FiniteGroup::from_flat(n, table).expect("direct product is a group");
        debug_assert_eq!(out.identity(), g.identity() * k + h.identity());
        out
    }

    pub fn klein() -> FiniteGroup {
        direct_product(&cyclic(2), &cyclic(2))
    }

    /// Permutations of `0..k` in lexicographic order (identity first), with
    /// `p * q = p ∘ q` (apply `q` first).
    pub fn symmetric_permutations(k: usize) -> Vec<Vec<usize>> {
        let mut perms = Vec::new();
        let mut current: Vec<usize> = (0..k).collect();
        loop {
            perms.push(current.clone());
            // next lexicographic permutation
            let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
                break;
            };
            let j = (i + 1..k).rev().find(|&j| current[j] > current[i]).unwrap();
            current.swap(i, j);
            current[i + 1..].reverse();
        }
        perms
    }

    /// The group generated by a list of permutations that is already closed
    /// under composition, indexed in the given order.
    pub fn from_permutations(perms: &[Vec<usize>]) -> FiniteGroup {
        let n = perms.len();
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed set");
        let mut table = vec![0; n * n];
        for (a, p) in perms.iter().enumerate() {
            for (b, q) in perms.iter().enumerate() {
                let pq: Vec<usize> = q.iter().map(|&x| p[x]).collect();
                table[a * n + b] = index(&pq);
            }
        }
        FiniteGroup::from_flat(n, table).expect("permutation group")
    }

    pub fn symmetric(k: usize) -> FiniteGroup {
        from_permutations(&symmetric_permutations(k))
    }

    /// Dihedral group of order `2m`: index `i + m*f` is `r^i s^f`.
    pub fn dihedral(m: usize) -> FiniteGroup {
        let n = 2 * m;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let (i, f) = (a % m, a / m);
                let (j, g) = (b % m, b / m);
                // r^i s^f r^j s^g = r^(i ± j) s^(f+g)
                let k = if f == 0 { (i + j) % m } else { (i + m - j) % m };
                table[a * n + b] = k + m * ((f + g) % 2);
            }
        }
        FiniteGroup::from_flat(n, table).expect("dihedral table is a group")
    }

    /// Quaternion group `Q8`: indices `0..4` are `1, i, -1, -i`, indices `4..8`
    /// are `j, k, -j, -k` (i.e. `i^a j^b` with index `a + 4b`).
    pub fn quaternion() -> FiniteGroup {
        // i^a j^b * i^c j^d = i^(a + (-1)^b c) j^(b + d), with j^2 = i^2.
        let n = 8;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let (a, b) = (x % 4, x / 4);
                let (c, d) = (y % 4, y / 4);
                let c = if b == 1 { (4 - c) % 4 } else { c };
                let mut e = (a + c) % 4;
                let mut f = b + d;
                if f == 2 {
                    f = 0;
                    e = (e + 2) % 4;
                }
                table[x * n + y] = e + 4 * f;
            }
        }
        FiniteGroup::from_flat(n, table).expect("quaternion table is a group")
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn z2_validates() {
        let g = FiniteGroup::from_table(&[[0, 1], [1, 0]]).unwrap();
        assert_eq!(g.identity(), 0);
        assert_eq!(g.inverses(), &[0, 1]);
    }

    #[test]
    fn repeated_entry_is_not_latin() {
        let err = FiniteGroup::from_table(&[[0, 1], [1, 1]]).unwrap_err();
        assert_eq!(err, GroupError::NotLatinSquare { row: 1, col: 1 });
    }

    #[test]
    fn shape_errors() {
        let rows: Vec<Vec<usize>> = vec![vec![0, 1], vec![1]];
        assert!(matches!(
            FiniteGroup::from_table(&rows),
            Err(GroupError::NotSquare { row: 1, .. })
        ));
        assert!(matches!(
            FiniteGroup::from_table(&[[0, 2], [1, 0]]),
            Err(GroupError::EntryOutOfRange { row: 0, col: 1, .. })
        ));
        let empty: [[usize; 0]; 0] = [];
        assert_eq!(FiniteGroup::from_table(&empty), Err(GroupError::Empty));
    }

    #[test]
    fn latin_without_identity() {
        // x*y = -x-y mod 3
        let err = FiniteGroup::from_table(&[[0, 2, 1], [2, 1, 0], [1, 0, 2]]).unwrap_err();
        assert_eq!(err, GroupError::NoIdentity);
    }

    #[test]
    fn latin_with_identity_but_not_associative() {
        // A loop of order 5 that is not a group.
        let rows = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_table(&rows),
            Err(GroupError::NotAssociative { .. })
        ));
    }

    #[test]
    fn named_groups_have_expected_shape() {
        assert_eq!(symmetric(3).order(), 6);
        assert!(!symmetric(3).is_abelian());
        assert_eq!(dihedral(4).center().len(), 2);
        assert_eq!(quaternion().center().len(), 2);
        assert_eq!(quaternion().element_order(1), 4);
        assert_eq!(quaternion().element_order(4), 4);
        assert_eq!((0..8).filter(|&x| quaternion().element_order(x) == 2).count(), 1);
        assert!(klein().is_abelian());
        assert_eq!(symmetric(3).identity(), 0);
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(cyclic(1).automorphisms().len(), 1);
        assert_eq!(cyclic(2).automorphisms().len(), 1);
        assert_eq!(cyclic(8).automorphisms().len(), 4);
        assert_eq!(klein().automorphisms().len(), 6);
        assert_eq!(symmetric(3).automorphisms().len(), 6);
        assert_eq!(dihedral(4).automorphisms().len(), 8);
        assert_eq!(quaternion().automorphisms().len(), 24);
        let z2cubed = direct_product(&klein(), &cyclic(2));
        assert_eq!(z2cubed.automorphisms().len(), 168);
    }

    #[test]
    fn subgroup_automorphisms_of_a3() {
        let s3 = symmetric(3);
        // The 3-cycles and the identity.
        let a3 = ElementSet::from_members(6, (0..6).filter(|&x| s3.element_order(x) != 2));
        assert_eq!(a3.len(), 3);
        assert_eq!(subgroup_automorphisms(&s3, &a3).len(), 2);
    }
}
