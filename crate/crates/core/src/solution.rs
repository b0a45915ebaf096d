//! Finite non-degenerate set-theoretic solutions of the Yang–Baxter equation.
//!
//! Tables are row-indexed by the acting element: `lam[x][y] = λ_x(y)` and
//! `rho[x][y] = ρ_x(y)`, so that `r(x, y) = (lam[x][y], rho[y][x])`.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::brace::FiniteSkewBrace;
use crate::set::ElementSet;

/// Orbits above this size are not searched exhaustively by
/// [`minimal_factor`].
pub const EXACT_ORBIT_LIMIT: usize = 16;

/// Largest carrier accepted by [`brute_force_factors`].
pub const BRUTE_FORCE_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Table {
    Lambda,
    Rho,
}

impl core::fmt::Display for Table {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Table::Lambda => "lambda",
            Table::Rho => "rho",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolutionError {
    #[error("empty solution")]
    Empty,
    #[error("{table} table: row {row} has the wrong length or the table has the wrong number of rows")]
    NotSquare { table: Table, row: usize },
    #[error("{table} table: entry at ({row}, {col}) is out of range")]
    EntryOutOfRange { table: Table, row: usize, col: usize },
    #[error("degenerate: {table} row {row} is not a permutation")]
    Degenerate { table: Table, row: usize },
    #[error("r is not bijective: r({x1},{y1}) = r({x2},{y2})")]
    NotBijective { x1: usize, y1: usize, x2: usize, y2: usize },
    #[error("braid relation fails at ({x}, {y}, {z})")]
    BraidFailure { x: usize, y: usize, z: usize },
    #[error("retract tables ill-defined at representatives ({x}, {y})")]
    IllDefined { x: usize, y: usize },
    #[error("size {size} exceeds the limit {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("some minimal factors are only upper bounds")]
    PartialResult(Partition),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteSolution {
    size: usize,
    lam: Vec<usize>,
    rho: Vec<usize>,
}

impl FiniteSolution {
    /// Validates non-degeneracy, bijectivity and the braid relation, all
    /// exhaustively.
    pub fn from_tables<R: AsRef<[usize]>>(lam: &[R], rho: &[R]) -> Result<Self, SolutionError> {
        let n = lam.len();
        let flat = |rows: &[R], table: Table| -> Result<Vec<usize>, SolutionError> {
            if rows.len() != n {
                return Err(SolutionError::NotSquare { table, row: rows.len().min(n) });
            }
            let mut out = Vec::with_capacity(n * n);
            for (row, r) in rows.iter().enumerate() {
                let r = r.as_ref();
                if r.len() != n {
                    return Err(SolutionError::NotSquare { table, row });
                }
                if let Some(col) = r.iter().position(|&v| v >= n) {
                    return Err(SolutionError::EntryOutOfRange { table, row, col });
                }
                out.extend_from_slice(r);
            }
            Ok(out)
        };
        let lam_flat = flat(lam, Table::Lambda)?;
        let rho_flat = flat(rho, Table::Rho)?;
        Self::from_flat(n, lam_flat, rho_flat)
    }

    pub fn from_flat(n: usize, lam: Vec<usize>, rho: Vec<usize>) -> Result<Self, SolutionError> {
        if n == 0 {
            return Err(SolutionError::Empty);
        }
        assert_eq!(lam.len(), n * n);
        assert_eq!(rho.len(), n * n);
        for (table, data) in [(Table::Lambda, &lam), (Table::Rho, &rho)] {
            if let Some(pos) = data.iter().position(|&v| v >= n) {
                return Err(SolutionError::EntryOutOfRange {
                    table,
                    row: pos / n,
                    col: pos % n,
                });
            }
            for row in 0..n {
                if !is_permutation(&data[row * n..(row + 1) * n]) {
                    return Err(SolutionError::Degenerate { table, row });
                }
            }
        }
        let sol = FiniteSolution { size: n, lam, rho };
        sol.check_bijective()?;
        sol.check_braid()?;
        Ok(sol)
    }

    fn check_bijective(&self) -> Result<(), SolutionError> {
        let n = self.size;
        let mut preimage = vec![usize::MAX; n * n];
        for x in 0..n {
            for y in 0..n {
                let (u, v) = self.r(x, y);
                let slot = &mut preimage[u * n + v];
                if *slot != usize::MAX {
                    return Err(SolutionError::NotBijective {
                        x1: *slot / n,
                        y1: *slot % n,
                        x2: x,
                        y2: y,
                    });
                }
                *slot = x * n + y;
            }
        }
        Ok(())
    }

    fn check_braid(&self) -> Result<(), SolutionError> {
        let n = self.size;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.braid_lhs(x, y, z) != self.braid_rhs(x, y, z) {
                        return Err(SolutionError::BraidFailure { x, y, z });
                    }
                }
            }
        }
        Ok(())
    }

    /// `(r×id)(id×r)(r×id)` applied to `(x, y, z)`.
    pub fn braid_lhs(&self, x: usize, y: usize, z: usize) -> (usize, usize, usize) {
        let (a, b) = self.r(x, y);
        let (c, d) = self.r(b, z);
        let (e, f) = self.r(a, c);
        (e, f, d)
    }

    /// `(id×r)(r×id)(id×r)` applied to `(x, y, z)`.
    pub fn braid_rhs(&self, x: usize, y: usize, z: usize) -> (usize, usize, usize) {
        let (p, q) = self.r(y, z);
        let (s, t) = self.r(x, p);
        let (u, v) = self.r(t, q);
        (s, u, v)
    }

    /// The flip `r(x, y) = (y, x)` on `n` points.
    pub fn flip(n: usize) -> Self {
        Self::permutation(&(0..n).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>())
            .expect("flip is a solution")
    }

    /// `r(x, y) = (σ(y), τ(x))`; a solution exactly when `σ` and `τ` commute.
    pub fn permutation(sigma: &[usize], tau: &[usize]) -> Result<Self, SolutionError> {
        let n = sigma.len();
        let lam = (0..n).flat_map(|_| sigma.iter().copied()).collect();
        let rho = (0..n).flat_map(|_| tau.iter().copied()).collect();
        Self::from_flat(n, lam, rho)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn lambda(&self, x: usize, y: usize) -> usize {
        self.lam[x * self.size + y]
    }

    #[inline]
    pub fn rho(&self, x: usize, y: usize) -> usize {
        self.rho[x * self.size + y]
    }

    #[inline]
    pub fn r(&self, x: usize, y: usize) -> (usize, usize) {
        (self.lambda(x, y), self.rho(y, x))
    }

    pub fn lambda_row(&self, x: usize) -> &[usize] {
        &self.lam[x * self.size..(x + 1) * self.size]
    }

    pub fn rho_row(&self, x: usize) -> &[usize] {
        &self.rho[x * self.size..(x + 1) * self.size]
    }

    pub fn lambda_rows(&self) -> Vec<Vec<usize>> {
        self.lam.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn rho_rows(&self) -> Vec<Vec<usize>> {
        self.rho.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn is_involutive(&self) -> bool {
        let n = self.size;
        (0..n).all(|x| {
            (0..n).all(|y| {
                let (u, v) = self.r(x, y);
                self.r(u, v) == (x, y)
            })
        })
    }

    /// `r'(x, y) = (y, λ_y ρ_{λ_x^{-1}(y)}(x))`.
    pub fn derived(&self) -> FiniteSolution {
        let n = self.size;
        let lam_inv: Vec<Vec<usize>> = (0..n).map(|x| invert(self.lambda_row(x))).collect();
        let lam: Vec<usize> = (0..n).flat_map(|_| 0..n).collect();
        let mut rho = vec![0; n * n];
        for y in 0..n {
            for x in 0..n {
                rho[y * n + x] = self.lambda(y, self.rho(lam_inv[x][y], x));
            }
        }
        FiniteSolution::from_flat(n, lam, rho).expect("derived solution of a valid solution")
    }

    /// The retract: points with identical `(λ_x, ρ_x)` are merged. Returns
    /// the induced solution and the projection onto it.
    pub fn retract(&self) -> Result<(FiniteSolution, Vec<usize>), SolutionError> {
        let n = self.size;
        let mut classes: BTreeMap<(&[usize], &[usize]), usize> = BTreeMap::new();
        let mut proj = vec![0; n];
        let mut reps = Vec::new();
        for x in 0..n {
            let next = classes.len();
            let class = *classes.entry((self.lambda_row(x), self.rho_row(x))).or_insert(next);
            if class == reps.len() {
                reps.push(x);
            }
            proj[x] = class;
        }
        let m = reps.len();
        let unset = usize::MAX;
        let mut lam = vec![unset; m * m];
        let mut rho = vec![unset; m * m];
        for x in 0..n {
            for y in 0..n {
                let (i, j) = (proj[x], proj[y]);
                for (table, value) in [(&mut lam, proj[self.lambda(x, y)]), (&mut rho, proj[self.rho(x, y)])] {
                    let slot = &mut table[i * m + j];
                    if *slot == unset {
                        *slot = value;
                    } else if *slot != value {
                        return Err(SolutionError::IllDefined { x, y });
                    }
                }
            }
        }
        let ret = FiniteSolution::from_flat(m, lam, rho)?;
        Ok((ret, proj))
    }

    /// Sizes of the iterated retracts, starting with `self`, until the size
    /// stops changing or `max_steps` retractions have been taken.
    pub fn retract_tower(&self, max_steps: usize) -> Result<Vec<usize>, SolutionError> {
        let mut sizes = vec![self.size];
        let mut current = self.clone();
        for _ in 0..max_steps {
            let (next, _) = current.retract()?;
            if next.size == current.size {
                break;
            }
            sizes.push(next.size);
            current = next;
        }
        Ok(sizes)
    }

    /// `r_B(a, b) = (λ_a(b), \overline{λ_a(b)} ∘ a ∘ b)`.
    pub fn from_brace(b: &FiniteSkewBrace) -> FiniteSolution {
        let n = b.order();
        let mut lam = vec![0; n * n];
        let mut rho = vec![0; n * n];
        for a in 0..n {
            for c in 0..n {
                let l = b.lambda(a, c);
                lam[a * n + c] = l;
                rho[c * n + a] = b.mul(b.mul(b.bar(l), a), c);
            }
        }
        FiniteSolution::from_flat(n, lam, rho).expect("r_B is a solution")
    }

    /// Whether `y` and its complement are both closed under `r`.
    pub fn is_decomposition_factor(&self, y: &ElementSet) -> bool {
        let z = y.complement();
        self.is_closed(y) && self.is_closed(&z)
    }

    /// `r(Y×Y) ⊆ Y×Y`, plus bijectivity of the restricted `λ_a`, `ρ_a`.
    fn is_closed(&self, part: &ElementSet) -> bool {
        for a in part.iter() {
            for b in part.iter() {
                let (u, v) = self.r(a, b);
                if !part.contains(u) || !part.contains(v) {
                    return false;
                }
            }
        }
        // Finite closed parts give injective, hence bijective, restrictions.
        debug_assert!(part.iter().all(|a| part.image(self.lambda_row(a)) == *part
            && part.image(self.rho_row(a)) == *part));
        true
    }

    /// Orbit of `x` under the group generated by all `λ_y` and `ρ_y`.
    pub fn orbit(&self, x: usize) -> ElementSet {
        let n = self.size;
        let mut seen = ElementSet::singleton(n, x);
        let mut queue = VecDeque::from([x]);
        while let Some(u) = queue.pop_front() {
            for y in 0..n {
                for v in [self.lambda(y, u), self.rho(y, u)] {
                    if seen.insert(v) {
                        queue.push_back(v);
                    }
                }
            }
        }
        seen
    }

    /// The smallest decomposition factor containing `x`.
    ///
    /// The orbit of `x` is always a factor; inside it, each `y` is tested for
    /// separability (some valid bipartition puts `x` and `y` on different
    /// sides) by backtracking with unit propagation. Orbits larger than
    /// [`EXACT_ORBIT_LIMIT`] are returned unrefined with `exact = false`.
    pub fn minimal_factor(&self, x: usize) -> MinimalFactor {
        let orbit = self.orbit(x);
        if orbit.len() > EXACT_ORBIT_LIMIT {
            return MinimalFactor {
                members: orbit,
                exact: false,
            };
        }
        let n = self.size;
        let mut base = vec![Side::Unknown; n];
        for v in 0..n {
            if !orbit.contains(v) {
                base[v] = Side::Other;
            }
        }
        base[x] = Side::WithX;
        let mut separable = ElementSet::empty(n);
        for y in orbit.iter() {
            if y == x || separable.contains(y) {
                continue;
            }
            let mut start = base.clone();
            start[y] = Side::Other;
            if let Some(found) = self.search_bipartition(start) {
                for v in orbit.iter() {
                    if found[v] == Side::Other {
                        separable.insert(v);
                    }
                }
            }
        }
        MinimalFactor {
            members: orbit.difference(&separable),
            exact: true,
        }
    }

    fn search_bipartition(&self, mut sides: Vec<Side>) -> Option<Vec<Side>> {
        if !self.propagate(&mut sides) {
            return None;
        }
        let Some(v) = sides.iter().position(|&s| s == Side::Unknown) else {
            return Some(sides);
        };
        for choice in [Side::WithX, Side::Other] {
            let mut next = sides.clone();
            next[v] = choice;
            if let Some(found) = self.search_bipartition(next) {
                return Some(found);
            }
        }
        None
    }

    /// Unit propagation of the clauses "a, b on side P implies λ_a(b) and
    /// ρ_b(a) on side P". Returns `false` on conflict.
    fn propagate(&self, sides: &mut [Side]) -> bool {
        let n = self.size;
        loop {
            let mut changed = false;
            for a in 0..n {
                for b in 0..n {
                    let (u, v) = self.r(a, b);
                    for c in [u, v] {
                        let (sa, sb, sc) = (sides[a], sides[b], sides[c]);
                        if sa != Side::Unknown && sa == sb {
                            if sc == Side::Unknown {
                                sides[c] = sa;
                                changed = true;
                            } else if sc != sa {
                                return false;
                            }
                        } else if sc != Side::Unknown {
                            // a on side P with c off P forces b off P, and symmetrically.
                            if sa != Side::Unknown && sa != sc && sb == Side::Unknown {
                                sides[b] = sc;
                                changed = true;
                            } else if sb != Side::Unknown && sb != sc && sa == Side::Unknown {
                                sides[a] = sc;
                                changed = true;
                            }
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    /// Partition of the carrier into minimal decomposition factors.
    pub fn decomposition_atoms(&self) -> Result<Partition, SolutionError> {
        let n = self.size;
        let unset = usize::MAX;
        let mut block_id = vec![unset; n];
        let mut blocks = 0;
        let mut exact = true;
        for x in 0..n {
            if block_id[x] != unset {
                continue;
            }
            let factor = self.minimal_factor(x);
            exact &= factor.exact;
            for y in factor.members.iter() {
                debug_assert_eq!(block_id[y], unset);
                block_id[y] = blocks;
            }
            blocks += 1;
        }
        let partition = Partition { size: n, block_id };
        if exact {
            Ok(partition)
        } else {
            Err(SolutionError::PartialResult(partition))
        }
    }

    /// Elements lying in some finite decomposition factor. For a finite
    /// solution every element qualifies, since the carrier itself is one.
    pub fn delta_f(&self) -> ElementSet {
        let n = self.size;
        let mut out = ElementSet::empty(n);
        for x in 0..n {
            if !out.contains(x) {
                // The orbit is a finite factor containing x.
                out.union_with(&self.orbit(x));
            }
        }
        out
    }

    /// All decomposition factors by subset enumeration.
    pub fn brute_force_factors(&self) -> Result<Vec<ElementSet>, SolutionError> {
        let n = self.size;
        if n > BRUTE_FORCE_LIMIT {
            return Err(SolutionError::TooLarge {
                size: n,
                limit: BRUTE_FORCE_LIMIT,
            });
        }
        Ok((0u32..1 << n)
            .map(|mask| ElementSet::from_members(n, (0..n).filter(|&i| mask & (1 << i) != 0)))
            .filter(|y| self.is_decomposition_factor(y))
            .collect())
    }

    /// Atoms of the factor algebra, from the brute-force factor list.
    pub fn brute_force_atoms(&self) -> Result<Partition, SolutionError> {
        let n = self.size;
        let factors = self.brute_force_factors()?;
        let mut block_id = vec![usize::MAX; n];
        let mut blocks = 0;
        for x in 0..n {
            if block_id[x] != usize::MAX {
                continue;
            }
            let atom = factors
                .iter()
                .filter(|f| f.contains(x))
                .fold(ElementSet::full(n), |acc, f| acc.intersection(f));
            for y in atom.iter() {
                block_id[y] = blocks;
            }
            blocks += 1;
        }
        Ok(Partition { size: n, block_id })
    }

    /// Relabels along a bijection `perm` (old index -> new index).
    pub fn relabel(&self, perm: &[usize]) -> FiniteSolution {
        let n = self.size;
        let mut lam = vec![0; n * n];
        let mut rho = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                lam[perm[x] * n + perm[y]] = perm[self.lambda(x, y)];
                rho[perm[x] * n + perm[y]] = perm[self.rho(x, y)];
            }
        }
        FiniteSolution { size: n, lam, rho }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Unknown,
    WithX,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalFactor {
    pub members: ElementSet,
    /// `false` when `members` is only the orbit upper bound.
    pub exact: bool,
}

/// A partition of `0..size` into blocks numbered from 0 in order of their
/// least element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    size: usize,
    block_id: Vec<usize>,
}

impl Partition {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_id[x]
    }

    pub fn block_ids(&self) -> &[usize] {
        &self.block_id
    }

    pub fn num_blocks(&self) -> usize {
        self.block_id.iter().copied().max().map_or(0, |m| m + 1)
    }

    pub fn blocks(&self) -> Vec<ElementSet> {
        let mut out = vec![ElementSet::empty(self.size); self.num_blocks()];
        for (x, &b) in self.block_id.iter().enumerate() {
            out[b].insert(x);
        }
        out
    }
}

/// A permutation solution `r(x, y) = (σ(y), τ(x))` with `σ = π^i`, `τ = π^j`
/// for a seeded random permutation `π`, so that `σ` and `τ` commute.
pub fn random_solution(n: usize, seed: u64) -> FiniteSolution {
    assert!(n >= 1, "random_solution needs at least one point");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pi: Vec<usize> = (0..n).collect();
    pi.shuffle(&mut rng);
    let i = rng.gen_range(0..=n);
    let j = rng.gen_range(0..=n);
    let sigma = perm_power(&pi, i);
    let tau = perm_power(&pi, j);
    FiniteSolution::permutation(&sigma, &tau).expect("commuting permutations give a solution")
}

fn perm_power(p: &[usize], k: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (0..p.len()).collect();
    for _ in 0..k {
        out = out.iter().map(|&x| p[x]).collect();
    }
    out
}

fn is_permutation(row: &[usize]) -> bool {
    let mut seen = vec![false; row.len()];
    row.iter().all(|&v| v < row.len() && !core::mem::replace(&mut seen[v], true))
}

fn invert(perm: &[usize]) -> Vec<usize> {
    let mut out = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        out[p] = i;
    }
    out
}

/// Largest size accepted by [`enumerate_solutions`].
pub const ENUMERATION_LIMIT: usize = 4;

/// Every solution on `0..n` (labelled, not up to isomorphism), by
/// backtracking over table cells with the braid relation used as a
/// propagation rule.
pub fn enumerate_solutions(n: usize) -> Result<Vec<FiniteSolution>, SolutionError> {
    if n > ENUMERATION_LIMIT {
        return Err(SolutionError::TooLarge {
            size: n,
            limit: ENUMERATION_LIMIT,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let state = CellState::new(n);
    search_cells(state, &mut out);
    Ok(out)
}

const UNKNOWN: u8 = u8::MAX;

#[derive(Clone)]
struct CellState {
    n: usize,
    // lam cells then rho cells
    cells: Vec<u8>,
    used: Vec<u16>,
}

impl CellState {
    fn new(n: usize) -> Self {
        CellState {
            n,
            cells: vec![UNKNOWN; 2 * n * n],
            used: vec![0; 2 * n],
        }
    }

    #[inline]
    fn get(&self, table: usize, i: usize, j: usize) -> Option<usize> {
        let v = self.cells[table * self.n * self.n + i * self.n + j];
        (v != UNKNOWN).then_some(v as usize)
    }

    /// Sets a cell; `Err(())` on a permutation conflict, `Ok(true)` if new.
    fn set(&mut self, table: usize, i: usize, j: usize, v: usize) -> Result<bool, ()> {
        let idx = table * self.n * self.n + i * self.n + j;
        let current = self.cells[idx];
        if current != UNKNOWN {
            return if current as usize == v { Ok(false) } else { Err(()) };
        }
        let row = table * self.n + i;
        if self.used[row] & (1 << v) != 0 {
            return Err(());
        }
        self.used[row] |= 1 << v;
        self.cells[idx] = v as u8;
        Ok(true)
    }

    /// `r(x, y)` components when known.
    #[inline]
    fn r(&self, x: Option<usize>, y: Option<usize>) -> (Lookup, Lookup) {
        match (x, y) {
            (Some(x), Some(y)) => (
                Lookup::Cell(0, x, y, self.get(0, x, y)),
                Lookup::Cell(1, y, x, self.get(1, y, x)),
            ),
            _ => (Lookup::Blocked, Lookup::Blocked),
        }
    }

    fn propagate(&mut self) -> Result<(), ()> {
        let n = self.n;
        loop {
            let mut changed = false;
            // Rows with a single unknown cell.
            for table in 0..2 {
                for i in 0..n {
                    let row = table * n + i;
                    let free = n - self.used[row].count_ones() as usize;
                    if free == 1 {
                        let v = (0..n).find(|&v| self.used[row] & (1 << v) == 0).unwrap();
                        let j = (0..n).find(|&j| self.get(table, i, j).is_none()).unwrap();
                        changed |= self.set(table, i, j, v)?;
                    }
                }
            }
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let (a, b) = self.r(Some(x), Some(y));
                        let (c, d) = self.r(b.value(), Some(z));
                        let (e, f) = self.r(a.value(), c.value());
                        let (p, q) = self.r(Some(y), Some(z));
                        let (s, t) = self.r(Some(x), p.value());
                        let (u, v) = self.r(t.value(), q.value());
                        for (lhs, rhs) in [(e, s), (f, u), (d, v)] {
                            changed |= self.unify(lhs, rhs)?;
                        }
                    }
                }
            }
            if !changed {
                return Ok(());
            }
        }
    }

    fn unify(&mut self, lhs: Lookup, rhs: Lookup) -> Result<bool, ()> {
        match (lhs, rhs) {
            (Lookup::Cell(_, _, _, Some(a)), Lookup::Cell(_, _, _, Some(b))) => {
                if a == b {
                    Ok(false)
                } else {
                    Err(())
                }
            }
            (Lookup::Cell(_, _, _, Some(v)), Lookup::Cell(t, i, j, None))
            | (Lookup::Cell(t, i, j, None), Lookup::Cell(_, _, _, Some(v))) => self.set(t, i, j, v),
            _ => Ok(false),
        }
    }
}

#[derive(Clone, Copy)]
enum Lookup {
    Blocked,
    Cell(usize, usize, usize, Option<usize>),
}

impl Lookup {
    #[inline]
    fn value(self) -> Option<usize> {
        match self {
            Lookup::Cell(_, _, _, v) => v,
            Lookup::Blocked => None,
        }
    }
}

fn search_cells(mut state: CellState, out: &mut Vec<FiniteSolution>) {
    if state.propagate().is_err() {
        return;
    }
    let n = state.n;
    // Branch on the unknown cell whose row has the fewest free values.
    let mut best: Option<(usize, usize, usize, u32)> = None;
    for table in 0..2 {
        for i in 0..n {
            let free = n as u32 - state.used[table * n + i].count_ones();
            if free == 0 {
                continue;
            }
            if best.is_none_or(|(_, _, _, f)| free < f) {
                let j = (0..n).find(|&j| state.get(table, i, j).is_none()).unwrap();
                best = Some((table, i, j, free));
            }
        }
    }
    let Some((table, i, j, _)) = best else {
        let lam = state.cells[..n * n].iter().map(|&v| v as usize).collect();
        let rho = state.cells[n * n..].iter().map(|&v| v as usize).collect();
        if let Ok(sol) = FiniteSolution::from_flat(n, lam, rho) {
            out.push(sol);
        }
        return;
    };
    let row = table * n + i;
    for v in 0..n {
        if state.used[row] & (1 << v) != 0 {
            continue;
        }
        let mut next = state.clone();
        if next.set(table, i, j, v).is_ok() {
            search_cells(next, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shift(n: usize) -> FiniteSolution {
        let sigma: Vec<usize> = (0..n).collect();
        let tau: Vec<usize> = (0..n).map(|y| (y + 1) % n).collect();
        FiniteSolution::permutation(&sigma, &tau).unwrap()
    }

    #[test]
    fn flip_is_involutive() {
        let f = FiniteSolution::flip(3);
        assert!(f.is_involutive());
        assert_eq!(f.r(0, 2), (2, 0));
    }

    #[test]
    fn shift_is_valid_and_not_involutive() {
        for n in 1..8 {
            let s = shift(n);
            assert_eq!(s.r(0, 0), (0, 1 % n));
            assert_eq!(s.is_involutive(), n == 1);
        }
        // r²(x, y) = (x+1, y+1) on Z3.
        let s = shift(3);
        let (u, v) = s.r(0, 2);
        assert_eq!(s.r(u, v), (1, 0));
    }

    #[test]
    fn degenerate_row_is_named() {
        let lam = [[0, 1], [1, 1]];
        let rho = [[0, 1], [0, 1]];
        assert_eq!(
            FiniteSolution::from_tables(&lam, &rho).unwrap_err(),
            SolutionError::Degenerate {
                table: Table::Lambda,
                row: 1
            }
        );
    }

    #[test]
    fn non_commuting_permutations_fail_braid() {
        let sigma = [1, 0, 2];
        let tau = [0, 2, 1];
        assert!(matches!(
            FiniteSolution::permutation(&sigma, &tau),
            Err(SolutionError::BraidFailure { .. })
        ));
    }

    #[test]
    fn derived_of_shift() {
        let d = shift(3).derived();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(d.lambda(x, y), y);
                assert_eq!(d.rho(y, x), (x + 1) % 3);
            }
        }
        assert_eq!(FiniteSolution::flip(4).derived(), FiniteSolution::flip(4));
    }

    #[test]
    fn retract_examples() {
        assert_eq!(FiniteSolution::flip(5).retract_tower(10).unwrap(), vec![5, 1]);
        assert_eq!(FiniteSolution::flip(1).retract_tower(10).unwrap(), vec![1]);
        let (ret, proj) = shift(3).retract().unwrap();
        assert_eq!(ret.size(), 1);
        assert_eq!(proj, vec![0, 0, 0]);
    }

    #[test]
    fn factors_of_flip_and_shift() {
        let f = FiniteSolution::flip(3);
        assert_eq!(f.brute_force_factors().unwrap().len(), 8);
        assert!(f.is_decomposition_factor(&ElementSet::singleton(3, 0)));
        assert_eq!(f.minimal_factor(1).members.to_vec(), vec![1]);
        assert_eq!(FiniteSolution::flip(4).decomposition_atoms().unwrap().num_blocks(), 4);

        let s = shift(3);
        assert!(!s.is_decomposition_factor(&ElementSet::singleton(3, 0)));
        assert!(s.is_decomposition_factor(&ElementSet::empty(3)));
        assert!(s.is_decomposition_factor(&ElementSet::full(3)));
        assert_eq!(s.brute_force_factors().unwrap().len(), 2);
        assert!(s.minimal_factor(0).members.is_full());
        assert_eq!(s.decomposition_atoms().unwrap().num_blocks(), 1);
    }

    #[test]
    fn delta_f_is_everything() {
        let s = random_solution(7, 3);
        assert!(s.delta_f().is_full());
        assert!(s.is_decomposition_factor(&s.delta_f()));
    }

    #[test]
    fn brute_force_rejects_large() {
        assert!(matches!(
            FiniteSolution::flip(13).brute_force_factors(),
            Err(SolutionError::TooLarge { size: 13, limit: 12 })
        ));
    }

    #[test]
    fn large_orbits_are_flagged() {
        let s = shift(20);
        let mf = s.minimal_factor(0);
        assert!(!mf.exact);
        assert!(mf.members.is_full());
        assert!(matches!(s.decomposition_atoms(), Err(SolutionError::PartialResult(_))));
    }

    #[test]
    fn random_solution_is_deterministic() {
        assert_eq!(random_solution(6, 42), random_solution(6, 42));
        assert_eq!(random_solution(1, 0), FiniteSolution::flip(1));
    }

    #[test]
    fn cycle_solution_is_valid() {
        let cycle: Vec<usize> = (0..5).map(|i| (i + 1) % 5).collect();
        let s = FiniteSolution::permutation(&cycle, &cycle).unwrap();
        assert!(!s.is_involutive());
    }
}
