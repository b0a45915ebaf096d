//! Exhaustive generation of small groups and skew braces, with
//! deduplication up to isomorphism.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::brace::FiniteSkewBrace;
use crate::group::{greedy_generators, FiniteGroup};
use crate::report::AnalysisReport;
use crate::set::ElementSet;

/// Default largest order for enumeration.
pub const DEFAULT_MAX_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("order {order} exceeds the limit {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("order must be positive")]
    ZeroOrder,
    #[error("search strategies disagree: {mul_table} classes from table search, {lambda_map} from lambda search")]
    StrategyMismatch { mul_table: usize, lambda_map: usize },
}

fn check_order(n: usize, limit: usize) -> Result<(), EnumerationError> {
    if n == 0 {
        Err(EnumerationError::ZeroOrder)
    } else if n > limit {
        Err(EnumerationError::TooLarge { order: n, limit })
    } else {
        Ok(())
    }
}

/// One group per isomorphism class of order `n`, in canonical order.
pub fn enumerate_groups(n: usize) -> Result<Vec<FiniteGroup>, EnumerationError> {
    enumerate_groups_capped(n, DEFAULT_MAX_ORDER)
}

pub fn enumerate_groups_capped(n: usize, limit: usize) -> Result<Vec<FiniteGroup>, EnumerationError> {
    check_order(n, limit)?;
    let mut tables = Vec::new();
    TableSearch::new(n, None).run(&mut |flat| {
        if let Ok(g) = FiniteGroup::from_flat(n, flat.to_vec()) {
            tables.push(FiniteSkewBrace::trivial(&g));
        }
    });
    Ok(iso_classes(tables)
        .into_iter()
        .map(|b| b.additive().clone())
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Strategy {
    /// Backtracking over multiplication tables with distributivity and
    /// associativity forcing.
    MulTable,
    /// Backtracking over maps `λ: B → Aut(B,+)` subject to
    /// `λ_{a+λ_a(b)} = λ_a λ_b`.
    LambdaMap,
}

/// All skew braces with additive group `add`, one per isomorphism class,
/// found by both strategies, which must agree.
pub fn enumerate_braces_on_group(add: &FiniteGroup) -> Result<Vec<FiniteSkewBrace>, EnumerationError> {
    enumerate_braces_on_group_capped(add, DEFAULT_MAX_ORDER)
}

pub fn enumerate_braces_on_group_capped(
    add: &FiniteGroup,
    limit: usize,
) -> Result<Vec<FiniteSkewBrace>, EnumerationError> {
    check_order(add.order(), limit)?;
    let by_table = enumerate_braces_with(add, Strategy::MulTable);
    let by_lambda = enumerate_braces_with(add, Strategy::LambdaMap);
    let keys = |v: &[FiniteSkewBrace]| v.iter().map(canonical_key).collect::<Vec<_>>();
    if keys(&by_table) != keys(&by_lambda) {
        return Err(EnumerationError::StrategyMismatch {
            mul_table: by_table.len(),
            lambda_map: by_lambda.len(),
        });
    }
    Ok(by_lambda)
}

/// Braces with additive group `add` found by one strategy, deduplicated and
/// in canonical form, sorted by canonical key. The additive group must have
/// its identity at 0.
pub fn enumerate_braces_with(add: &FiniteGroup, strategy: Strategy) -> Vec<FiniteSkewBrace> {
    assert_eq!(add.identity(), 0, "additive identity must be 0");
    let n = add.order();
    let mut found = Vec::new();
    match strategy {
        Strategy::MulTable => TableSearch::new(n, Some(add)).run(&mut |flat| {
            if let Ok(mul) = FiniteGroup::from_flat(n, flat.to_vec()) {
                if let Ok(b) = FiniteSkewBrace::from_groups(add.clone(), mul) {
                    found.push(b);
                }
            }
        }),
        Strategy::LambdaMap => LambdaSearch::new(add).run(&mut |b| found.push(b)),
    }
    iso_classes(found)
}

/// Groups a list of braces into isomorphism classes and returns one
/// canonical representative per class, sorted by canonical key.
pub fn iso_classes(braces: Vec<FiniteSkewBrace>) -> Vec<FiniteSkewBrace> {
    let mut buckets: HashMap<Fingerprint, Vec<FiniteSkewBrace>> = HashMap::new();
    for b in braces {
        let bucket = buckets.entry(fingerprint(&b)).or_default();
        if !bucket.iter().any(|rep| brace_isomorphic(rep, &b)) {
            bucket.push(b);
        }
    }
    let mut reps: Vec<(Vec<u8>, FiniteSkewBrace)> = buckets
        .into_values()
        .flatten()
        .map(|b| canonical_form(&b))
        .collect();
    reps.sort_by(|x, y| x.0.cmp(&y.0));
    reps.into_iter().map(|(_, b)| b).collect()
}

const UNKNOWN: u8 = u8::MAX;

/// Cell-level search for Cayley tables on `0..n` with identity 0. With an
/// additive group, rows must also satisfy skew left distributivity.
struct TableSearch<'a> {
    n: usize,
    cells: Vec<u8>,
    row_used: Vec<u16>,
    col_used: Vec<u16>,
    /// `pos[r * n + v]` is the column holding `v` in row `r`.
    pos: Vec<u8>,
    add: Option<&'a FiniteGroup>,
    queue: Vec<(usize, usize)>,
}

impl Clone for TableSearch<'_> {
    fn clone(&self) -> Self {
        TableSearch {
            n: self.n,
            cells: self.cells.clone(),
            row_used: self.row_used.clone(),
            col_used: self.col_used.clone(),
            pos: self.pos.clone(),
            add: self.add,
            queue: Vec::new(),
        }
    }
}

impl<'a> TableSearch<'a> {
    fn new(n: usize, add: Option<&'a FiniteGroup>) -> Self {
        assert!(n <= 16, "table search supports at most 16 elements");
        let mut s = TableSearch {
            n,
            cells: vec![UNKNOWN; n * n],
            row_used: vec![0; n],
            col_used: vec![0; n],
            pos: vec![UNKNOWN; n * n],
            add,
            queue: Vec::new(),
        };
        for x in 0..n {
            s.set(0, x, x).expect("identity row");
            s.set(x, 0, x).expect("identity column");
        }
        s
    }

    #[inline]
    fn get(&self, a: usize, b: usize) -> Option<usize> {
        let v = self.cells[a * self.n + b];
        (v != UNKNOWN).then_some(v as usize)
    }

    #[inline]
    fn column_of(&self, row: usize, value: usize) -> Option<usize> {
        let v = self.pos[row * self.n + value];
        (v != UNKNOWN).then_some(v as usize)
    }

    fn set(&mut self, a: usize, b: usize, v: usize) -> Result<(), ()> {
        let n = self.n;
        if let Some(cur) = self.get(a, b) {
            return if cur == v { Ok(()) } else { Err(()) };
        }
        let bit = 1u16 << v;
        if self.row_used[a] & bit != 0 || self.col_used[b] & bit != 0 {
            return Err(());
        }
        self.row_used[a] |= bit;
        self.col_used[b] |= bit;
        self.cells[a * n + b] = v as u8;
        self.pos[a * n + v] = b as u8;
        self.queue.push((a, b));
        Ok(())
    }

    fn unify(&mut self, p: (usize, usize), q: (usize, usize)) -> Result<(), ()> {
        match (self.get(p.0, p.1), self.get(q.0, q.1)) {
            (Some(x), Some(y)) => {
                if x == y {
                    Ok(())
                } else {
                    Err(())
                }
            }
            (Some(x), None) => self.set(q.0, q.1, x),
            (None, Some(y)) => self.set(p.0, p.1, y),
            (None, None) => Ok(()),
        }
    }

    fn propagate(&mut self) -> Result<(), ()> {
        let n = self.n;
        while let Some((x, y)) = self.queue.pop() {
            let z = self.get(x, y).unwrap();
            // (a·b)·c = a·(b·c) with the new cell in each of the four roles.
            for c in 0..n {
                if let Some(e) = self.get(y, c) {
                    self.unify((x, e), (z, c))?;
                }
            }
            for a in 0..n {
                if let Some(d) = self.get(a, x) {
                    self.unify((a, z), (d, y))?;
                }
            }
            for b in 0..n {
                if let (Some(d), Some(c)) = (self.get(x, b), self.column_of(b, y)) {
                    self.set(d, c, z)?;
                }
            }
            for a in 0..n {
                if let Some(b) = self.column_of(a, x) {
                    if let Some(e) = self.get(b, y) {
                        self.set(a, e, z)?;
                    }
                }
            }
            if let Some(add) = self.add {
                // x∘(y+c) = x∘y − x + x∘c and its rearrangements.
                let neg_x = add.inv(x);
                let neg_z = add.inv(z);
                for c in 0..n {
                    if let Some(w) = self.get(x, c) {
                        self.set(x, add.op(y, c), add.op(add.op(z, neg_x), w))?;
                        self.set(x, add.op(c, y), add.op(add.op(w, neg_x), z))?;
                    }
                    if let Some(u) = self.get(x, add.op(y, c)) {
                        self.set(x, c, add.op(add.op(x, neg_z), u))?;
                    }
                    if let Some(u) = self.get(x, add.op(c, y)) {
                        self.set(x, c, add.op(add.op(u, neg_z), x))?;
                    }
                }
            }
        }
        Ok(())
    }

    fn run(self, emit: &mut dyn FnMut(&[usize])) {
        let mut stack = vec![self];
        while let Some(mut state) = stack.pop() {
            if state.propagate().is_err() {
                continue;
            }
            let n = state.n;
            let mut best: Option<(usize, usize, u16)> = None;
            for a in 1..n {
                for b in 1..n {
                    if state.get(a, b).is_none() {
                        let free = !(state.row_used[a] | state.col_used[b]) & ((1u16 << n) - 1);
                        if best.is_none_or(|(_, _, f)| free.count_ones() < f.count_ones()) {
                            best = Some((a, b, free));
                        }
                    }
                }
            }
            let Some((a, b, free)) = best else {
                let flat: Vec<usize> = state.cells.iter().map(|&v| v as usize).collect();
                emit(&flat);
                continue;
            };
            for v in (0..n).rev().filter(|&v| free & (1 << v) != 0) {
                let mut next = state.clone();
                if next.set(a, b, v).is_ok() {
                    stack.push(next);
                }
            }
        }
    }
}

/// Search over maps `λ: B → Aut(B,+)`, each `λ_a` an index into the
/// automorphism list.
struct LambdaSearch<'a> {
    add: &'a FiniteGroup,
    auts: Vec<Vec<usize>>,
    compose: Vec<usize>,
    identity: usize,
}

impl<'a> LambdaSearch<'a> {
    fn new(add: &'a FiniteGroup) -> Self {
        let auts = add.automorphisms();
        let index: HashMap<Vec<usize>, usize> = auts.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
        let m = auts.len();
        let mut compose = vec![0; m * m];
        for i in 0..m {
            for j in 0..m {
                let c: Vec<usize> = auts[j].iter().map(|&x| auts[i][x]).collect();
                compose[i * m + j] = index[&c];
            }
        }
        let id: Vec<usize> = (0..add.order()).collect();
        let identity = index[&id];
        LambdaSearch {
            add,
            auts,
            compose,
            identity,
        }
    }

    fn propagate(&self, lam: &mut [Option<usize>]) -> Result<(), ()> {
        let n = lam.len();
        let m = self.auts.len();
        loop {
            let mut changed = false;
            for a in 0..n {
                let Some(la) = lam[a] else { continue };
                for b in 0..n {
                    let Some(lb) = lam[b] else { continue };
                    let c = self.add.op(a, self.auts[la][b]);
                    let comp = self.compose[la * m + lb];
                    match lam[c] {
                        Some(lc) if lc != comp => return Err(()),
                        Some(_) => {}
                        None => {
                            lam[c] = Some(comp);
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                return Ok(());
            }
        }
    }

    fn run(&self, emit: &mut dyn FnMut(FiniteSkewBrace)) {
        let n = self.add.order();
        let mut start = vec![None; n];
        start[0] = Some(self.identity);
        let mut stack = vec![start];
        while let Some(mut lam) = stack.pop() {
            if self.propagate(&mut lam).is_err() {
                continue;
            }
            let Some(a) = lam.iter().position(|l| l.is_none()) else {
                let mut mul = vec![0; n * n];
                for a in 0..n {
                    let la = &self.auts[lam[a].unwrap()];
                    for b in 0..n {
                        mul[a * n + b] = self.add.op(a, la[b]);
                    }
                }
                if let Ok(mul) = FiniteGroup::from_flat(n, mul) {
                    if let Ok(b) = FiniteSkewBrace::from_groups(self.add.clone(), mul) {
                        emit(b);
                    }
                }
                continue;
            };
            for choice in (0..self.auts.len()).rev() {
                let mut next = lam.clone();
                next[a] = Some(choice);
                stack.push(next);
            }
        }
    }
}

/// Isomorphism-invariant data of one element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ElementInvariant {
    pub add_order: u16,
    pub mul_order: u16,
    pub lambda_orbit: u16,
    pub theta_orbit: u16,
    pub in_ker_lambda: bool,
    pub in_fix: bool,
    pub in_center_add: bool,
    pub in_center_mul: bool,
    pub lambda_order: u16,
    pub lambda_fixed_points: u16,
    pub add_commuting: u16,
    pub mul_commuting: u16,
}

pub fn element_invariants(b: &FiniteSkewBrace) -> Vec<ElementInvariant> {
    let n = b.order();
    let ker = b.ker_lambda();
    let fix = b.fix();
    let za = b.center_add();
    let zm = b.center_mul();
    (0..n)
        .map(|x| {
            let lam = b.lambda_map(x);
            ElementInvariant {
                add_order: b.additive().element_order(x) as u16,
                mul_order: b.multiplicative().element_order(x) as u16,
                lambda_orbit: b.lambda_orbit(x).len() as u16,
                theta_orbit: b.theta_orbit(x).len() as u16,
                in_ker_lambda: ker.contains(x),
                in_fix: fix.contains(x),
                in_center_add: za.contains(x),
                in_center_mul: zm.contains(x),
                lambda_order: crate::substructures::permutation_order(lam) as u16,
                lambda_fixed_points: (0..n).filter(|&y| lam[y] == y).count() as u16,
                add_commuting: (0..n).filter(|&y| b.add(x, y) == b.add(y, x)).count() as u16,
                mul_commuting: (0..n).filter(|&y| b.mul(x, y) == b.mul(y, x)).count() as u16,
            }
        })
        .collect()
}

type Fingerprint = (bool, Vec<ElementInvariant>);

fn fingerprint(b: &FiniteSkewBrace) -> Fingerprint {
    let mut inv = element_invariants(b);
    inv.sort();
    (b.is_two_sided(), inv)
}

/// Whether some bijection preserves both tables.
pub fn brace_isomorphic(b1: &FiniteSkewBrace, b2: &FiniteSkewBrace) -> bool {
    isomorphism(b1, b2).is_some()
}

/// A bijection `phi` (index in `b1` -> index in `b2`) preserving both
/// operations, found by backtracking over images of additive generators.
pub fn isomorphism(b1: &FiniteSkewBrace, b2: &FiniteSkewBrace) -> Option<Vec<usize>> {
    let n = b1.order();
    if b2.order() != n {
        return None;
    }
    let inv1 = element_invariants(b1);
    let inv2 = element_invariants(b2);
    let mut s1 = inv1.clone();
    let mut s2 = inv2.clone();
    s1.sort();
    s2.sort();
    if s1 != s2 || b1.is_two_sided() != b2.is_two_sided() {
        return None;
    }
    let gens = greedy_generators(b1.additive(), &ElementSet::full(n));
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| (0..n).filter(|&y| inv2[y] == inv1[g]).collect())
        .collect();
    let ctx = IsoContext {
        b1,
        b2,
        inv1: &inv1,
        inv2: &inv2,
        gens: &gens,
        candidates: &candidates,
    };
    let mut images = Vec::with_capacity(gens.len());
    ctx.search(&mut images)
}

struct IsoContext<'a> {
    b1: &'a FiniteSkewBrace,
    b2: &'a FiniteSkewBrace,
    inv1: &'a [ElementInvariant],
    inv2: &'a [ElementInvariant],
    gens: &'a [usize],
    candidates: &'a [Vec<usize>],
}

impl IsoContext<'_> {
    fn search(&self, images: &mut Vec<usize>) -> Option<Vec<usize>> {
        let phi = self.extend(images)?;
        if images.len() == self.gens.len() {
            return Some(phi);
        }
        for &y in &self.candidates[images.len()] {
            images.push(y);
            if let Some(found) = self.search(images) {
                return Some(found);
            }
            images.pop();
        }
        None
    }

    /// The additive homomorphism determined on the span of the assigned
    /// generators, if it is injective, invariant-preserving and respects
    /// `∘` wherever defined.
    fn extend(&self, images: &[usize]) -> Option<Vec<usize>> {
        let (b1, b2) = (self.b1, self.b2);
        let n = b1.order();
        let unset = usize::MAX;
        let mut phi = vec![unset; n];
        phi[0] = 0;
        let mut members = vec![0];
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for (&g, &img) in self.gens.iter().zip(images) {
                let y = b1.add(x, g);
                let fy = b2.add(phi[x], img);
                if phi[y] == unset {
                    if self.inv1[y] != self.inv2[fy] {
                        return None;
                    }
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
            for &c in &members {
                let p = phi[b1.mul(a, c)];
                if p != unset && p != b2.mul(phi[a], phi[c]) {
                    return None;
                }
                if phi[b1.add(a, c)] != b2.add(phi[a], phi[c]) {
                    return None;
                }
            }
        }
        Some(phi)
    }
}

/// Canonical key and the corresponding relabelled brace.
///
/// Elements are first sorted by their invariants; the key is the
/// lexicographically least `(order, add, mul)` byte string over all
/// relabellings fixing 0 that respect this order.
pub fn canonical_form(b: &FiniteSkewBrace) -> (Vec<u8>, FiniteSkewBrace) {
    let n = b.order();
    let inv = element_invariants(b);
    // Classes of equal invariants among the nonzero elements, in order.
    let mut classes: BTreeMap<&ElementInvariant, Vec<usize>> = BTreeMap::new();
    for x in 1..n {
        classes.entry(&inv[x]).or_default().push(x);
    }
    let classes: Vec<Vec<usize>> = classes.into_values().collect();
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    let mut order = vec![0usize];
    permute_classes(&classes, 0, &mut order, &mut |order| {
        // order[new] = old
        let mut perm = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new;
        }
        let key = key_under(b, order, &perm);
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            best = Some((key, perm));
        }
    });
    let (key, perm) = best.expect("at least one relabelling");
    (key, b.relabel(&perm))
}

pub fn canonical_key(b: &FiniteSkewBrace) -> Vec<u8> {
    canonical_form(b).0
}

fn key_under(b: &FiniteSkewBrace, order: &[usize], perm: &[usize]) -> Vec<u8> {
    let n = b.order();
    let mut key = Vec::with_capacity(1 + 2 * n * n);
    key.push(n as u8);
    for &old_a in order {
        for &old_c in order {
            key.push(perm[b.add(old_a, old_c)] as u8);
        }
    }
    for &old_a in order {
        for &old_c in order {
            key.push(perm[b.mul(old_a, old_c)] as u8);
        }
    }
    key
}

fn permute_classes(classes: &[Vec<usize>], depth: usize, order: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if depth == classes.len() {
        visit(order);
        return;
    }
    let mut class = classes[depth].clone();
    let len = class.len();
    heap_permutations(&mut class, len, &mut |perm| {
        let len = order.len();
        order.extend_from_slice(perm);
        permute_classes(classes, depth + 1, order, visit);
        order.truncate(len);
    });
}

fn heap_permutations(items: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        visit(items);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(items, k - 1, visit);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
    heap_permutations(items, k - 1, visit);
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraceCatalogEntry {
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub canonical_key: Vec<u8>,
    pub report: AnalysisReport,
}

impl BraceCatalogEntry {
    pub fn brace(&self) -> FiniteSkewBrace {
        FiniteSkewBrace::from_tables(&self.add, &self.mul).expect("catalog entries are valid")
    }
}

/// Every skew brace of order at most `max_order`, one per isomorphism
/// class, sorted by canonical key.
pub fn build_catalog(max_order: usize) -> Result<Vec<BraceCatalogEntry>, EnumerationError> {
    build_catalog_capped(max_order, DEFAULT_MAX_ORDER)
}

pub fn build_catalog_capped(max_order: usize, limit: usize) -> Result<Vec<BraceCatalogEntry>, EnumerationError> {
    if max_order > limit {
        return Err(EnumerationError::TooLarge { order: max_order, limit });
    }
    let mut entries = Vec::new();
    for n in 1..=max_order {
        for g in enumerate_groups_capped(n, limit)? {
            for b in enumerate_braces_on_group_capped(&g, limit)? {
                entries.push(catalog_entry(&b));
            }
        }
    }
    entries.sort_by(|x, y| x.canonical_key.cmp(&y.canonical_key));
    Ok(entries)
}

pub fn catalog_entry(b: &FiniteSkewBrace) -> BraceCatalogEntry {
    let (key, canon) = canonical_form(b);
    BraceCatalogEntry {
        order: canon.order(),
        add: canon.additive().rows(),
        mul: canon.multiplicative().rows(),
        canonical_key: key,
        report: AnalysisReport::of_brace(&canon),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named::*;

    #[test]
    fn small_group_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_groups(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 1, 2]);
    }

    #[test]
    fn limits() {
        assert_eq!(
            enumerate_groups(9).unwrap_err(),
            EnumerationError::TooLarge { order: 9, limit: 8 }
        );
        assert_eq!(enumerate_groups(0).unwrap_err(), EnumerationError::ZeroOrder);
        assert!(matches!(build_catalog(9), Err(EnumerationError::TooLarge { .. })));
    }

    #[test]
    fn prime_order_braces_are_trivial() {
        for p in [2, 3, 5, 7] {
            let braces = enumerate_braces_on_group(&cyclic(p)).unwrap();
            assert_eq!(braces.len(), 1);
            assert!(braces[0].is_trivial());
        }
    }

    #[test]
    fn isomorphism_examples() {
        let s3 = symmetric(3);
        let triv = FiniteSkewBrace::trivial(&s3);
        let optriv = FiniteSkewBrace::almost_trivial(&s3);
        assert!(brace_isomorphic(&triv, &triv));
        assert!(!brace_isomorphic(&triv, &optriv));
        assert!(!brace_isomorphic(
            &FiniteSkewBrace::trivial(&cyclic(4)),
            &FiniteSkewBrace::trivial(&klein())
        ));
        let relabelled = optriv.relabel(&[0, 3, 5, 1, 2, 4]);
        let phi = isomorphism(&optriv, &relabelled).unwrap();
        for a in 0..6 {
            for c in 0..6 {
                assert_eq!(phi[optriv.mul(a, c)], relabelled.mul(phi[a], phi[c]));
            }
        }
        assert_eq!(canonical_key(&optriv), canonical_key(&relabelled));
    }

    #[test]
    fn heap_visits_every_permutation() {
        let mut items = vec![0, 1, 2, 3];
        let mut seen = alloc::collections::BTreeSet::new();
        heap_permutations(&mut items, 4, &mut |p| {
            seen.insert(p.to_vec());
        });
        assert_eq!(seen.len(), 24);
    }
}
