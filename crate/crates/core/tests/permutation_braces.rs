//! The trivial and almost trivial braces on S₃, checked against arithmetic
//! on permutations done here rather than in the library.

use skewlab_core::substructures::{
    add_closure, b2_coset_generators, dietzmann_closure, enumerate_subbraces, gens_to_group_gens,
    ideal_in_subbrace_two_sided, index_add, index_mul, is_ideal, is_left_ideal, is_subbrace,
    quotient_embedding_check, sli_in_subbrace, strong_left_ideal_closure, verify_lamf_bound, verify_oversoc_bound,
    SubBrace,
};
use skewlab_core::{ElementSet, FiniteSkewBrace, FiniteSolution};

type Perm = [usize; 3];

/// The six permutations of {0,1,2}, identity first.
fn perms() -> Vec<Perm> {
    let mut out = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                if a != b && b != c && a != c {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// `(p·q)(i) = p(q(i))`.
fn compose(p: Perm, q: Perm) -> Perm {
    [p[q[0]], p[q[1]], p[q[2]]]
}

fn inverse(p: Perm) -> Perm {
    let mut inv = [0; 3];
    for i in 0..3 {
        inv[p[i]] = i;
    }
    inv
}

fn idx(p: Perm) -> usize {
    perms().iter().position(|&q| q == p).unwrap()
}

fn table() -> Vec<Vec<usize>> {
    let ps = perms();
    ps.iter()
        .map(|&p| ps.iter().map(|&q| idx(compose(p, q))).collect())
        .collect()
}

fn transpose(t: &[Vec<usize>]) -> Vec<Vec<usize>> {
    (0..t.len()).map(|i| (0..t.len()).map(|j| t[j][i]).collect()).collect()
}

/// `(S₃, ·, ·op)`.
fn optriv() -> FiniteSkewBrace {
    let t = table();
    FiniteSkewBrace::from_tables(&t, &transpose(&t)).unwrap()
}

fn trivial() -> FiniteSkewBrace {
    let t = table();
    FiniteSkewBrace::from_tables(&t, &t).unwrap()
}

const E: Perm = [0, 1, 2];
const T01: Perm = [1, 0, 2];
const T12: Perm = [0, 2, 1];
const T02: Perm = [2, 1, 0];
const C: Perm = [1, 2, 0];
const C2: Perm = [2, 0, 1];

fn set(xs: &[Perm]) -> ElementSet {
    ElementSet::from_members(6, xs.iter().map(|&p| idx(p)))
}

/// Closure of a set of permutations under composition.
fn generated(xs: &[Perm]) -> ElementSet {
    let mut members: Vec<Perm> = vec![E];
    loop {
        let mut grew = false;
        for &a in members.clone().iter() {
            for &b in xs {
                let c = compose(a, b);
                if !members.contains(&c) {
                    members.push(c);
                    grew = true;
                }
            }
        }
        if !grew {
            return set(&members);
        }
    }
}

fn a3() -> ElementSet {
    set(&[E, C, C2])
}

#[test]
fn table_is_the_symmetric_group() {
    let b = optriv();
    assert_eq!(b.order(), 6);
    assert_eq!(b.zero(), 0);
    for p in perms() {
        assert_eq!(b.neg(idx(p)), idx(inverse(p)));
    }
}

#[test]
fn lambda_is_conjugation() {
    let b = optriv();
    for a in perms() {
        for x in perms() {
            let expected = compose(compose(inverse(a), x), a);
            assert_eq!(b.lambda(idx(a), idx(x)), idx(expected));
        }
    }
    assert_eq!(b.lambda(idx(T01), idx(C)), idx(C2));
    for a in 0..6 {
        assert_eq!(b.lambda(a, 0), 0);
    }
}

#[test]
fn theta_is_conjugation_by_a_b_inverse() {
    let b = optriv();
    for p in perms() {
        for q in perms() {
            let g = compose(p, inverse(q));
            for x in perms() {
                let expected = compose(compose(g, x), inverse(g));
                assert_eq!(b.theta(idx(p), idx(q), idx(x)), idx(expected));
            }
        }
    }
}

#[test]
fn star_is_a_commutator() {
    let b = optriv();
    for p in perms() {
        for q in perms() {
            // [x, y] = x⁻¹y⁻¹xy with x = p, y = q⁻¹.
            let y = inverse(q);
            let expected = compose(compose(inverse(p), inverse(y)), compose(p, y));
            assert_eq!(b.star(idx(p), idx(q)), idx(expected));
        }
    }
}

#[test]
fn opposites() {
    // The opposite of the trivial brace is almost trivial: a∘b = b + a.
    let op = trivial().opposite();
    for a in 0..6 {
        for c in 0..6 {
            assert_eq!(op.mul(a, c), op.add(c, a));
        }
    }
    assert!(skewlab_core::enumeration::brace_isomorphic(&op, &optriv()));
    assert_eq!(optriv().opposite().opposite(), optriv());
    assert!(optriv().is_two_sided());
}

#[test]
fn named_subsets() {
    let b = optriv();
    let e = set(&[E]);
    assert_eq!(b.ker_lambda(), e);
    assert_eq!(b.center_add(), e);
    assert_eq!(b.soc(), e);
    assert_eq!(b.ann(), e);
    // Commutator subgroup of S₃ from all commutators.
    let commutators: Vec<Perm> = perms()
        .iter()
        .flat_map(|&p| perms().into_iter().map(move |q| compose(compose(inverse(p), inverse(q)), compose(p, q))))
        .collect();
    assert_eq!(generated(&commutators), a3());
    assert_eq!(b.star_span(), a3());
    assert!(b.star_span().is_subset(&b.commutator_ideal()));
}

#[test]
fn theta_orbits_are_conjugacy_classes() {
    let b = optriv();
    assert_eq!(b.theta_orbit(idx(C)), set(&[C, C2]));
    assert_eq!(b.theta_orbit(idx(T01)), set(&[T01, T12, T02]));
    assert_eq!(b.theta_orbit(0), set(&[E]));
    for x in 0..6 {
        assert!(b.lambda_orbit(x).is_subset(&b.theta_orbit(x)));
        assert_eq!(b.lambda_orbit(x).len() * b.stab_lambda(x).len(), 6);
        assert_eq!(b.theta_orbit(x).len() * b.stab_theta_size(x), 36);
    }
}

#[test]
fn closures_and_ideals() {
    let b = optriv();
    assert_eq!(add_closure(&b, &set(&[T01, C])), ElementSet::full(6));
    assert_eq!(strong_left_ideal_closure(&b, &set(&[C])), a3());
    assert_eq!(strong_left_ideal_closure(&b, &set(&[T01])), ElementSet::full(6));
    assert!(is_ideal(&b, &a3()));
    let t = set(&[E, T01]);
    assert!(is_subbrace(&b, &t));
    assert!(!is_left_ideal(&b, &t));
    assert_eq!(dietzmann_closure(&b, &set(&[C])), a3());
}

#[test]
fn indices_and_ideals_inside_subbraces() {
    let b = optriv();
    let a = SubBrace::new(&b, a3()).unwrap();
    assert_eq!((index_add(&a), index_mul(&a)), (2, 2));
    let t = set(&[E, T01]);
    assert_eq!(sli_in_subbrace(&b, &t).unwrap(), set(&[E]));
    assert_eq!(ideal_in_subbrace_two_sided(&b, &t).unwrap(), set(&[E]));
    assert_eq!(enumerate_subbraces(&b).len(), 6);
}

#[test]
fn generators_closed_under_conjugation_and_inversion() {
    let b = optriv();
    let u = gens_to_group_gens(&b, &set(&[T01, C])).unwrap();
    assert_eq!(u, set(&[T01, T12, T02, C, C2]));
}

#[test]
fn bounds() {
    let b = optriv();
    let r = verify_lamf_bound(&b, &set(&[T01, C])).unwrap();
    assert_eq!(r.index, 6);
    let mut sizes = r.orbit_sizes.clone();
    sizes.sort();
    assert_eq!(sizes, vec![2, 3]);
    assert_eq!(r.product_bound, 6);
    assert!(r.holds);
    let o = verify_oversoc_bound(&b);
    assert_eq!((o.ker_index, o.center_index, o.max_theta_orbit), (6, 6, 3));
    assert!(o.holds);
}

#[test]
fn quotient_embedding_for_a3() {
    let b = optriv();
    let q = quotient_embedding_check(&b, &a3()).unwrap();
    assert_eq!((q.stab_size, q.pstab_size, q.quotient_order, q.aut_order), (6, 3, 2, 2));
    assert!(q.holds());
}

#[test]
fn b2_from_coset_representatives() {
    let g = b2_coset_generators(&optriv());
    assert_eq!(g.span, a3());
    assert!(g.equal());
}

#[test]
fn solution_of_trivial_brace() {
    let b = trivial();
    let r = FiniteSolution::from_brace(&b);
    for p in perms() {
        for q in perms() {
            let expected = (idx(q), idx(compose(compose(inverse(q), p), q)));
            assert_eq!(r.r(idx(p), idx(q)), expected);
        }
    }
    assert!(!r.is_involutive());
}

/// Retraction by merging points with equal rows, written independently of
/// the library.
fn naive_retract(lam: &[Vec<usize>], rho: &[Vec<usize>]) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let n = lam.len();
    let mut class = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for x in 0..n {
        match reps.iter().position(|&r| lam[r] == lam[x] && rho[r] == rho[x]) {
            Some(c) => class[x] = c,
            None => {
                class[x] = reps.len();
                reps.push(x);
            }
        }
    }
    let table = |t: &[Vec<usize>]| {
        reps.iter()
            .map(|&x| reps.iter().map(|&y| class[t[x][y]]).collect())
            .collect::<Vec<Vec<usize>>>()
    };
    (table(lam), table(rho))
}

#[test]
fn retract_tower_matches_naive_merging() {
    for b in [optriv(), trivial()] {
        let r = FiniteSolution::from_brace(&b);
        let mut sizes = vec![r.size()];
        let (mut lam, mut rho) = (r.lambda_rows(), r.rho_rows());
        loop {
            let (l, p) = naive_retract(&lam, &rho);
            if l.len() == lam.len() {
                break;
            }
            sizes.push(l.len());
            lam = l;
            rho = p;
        }
        assert_eq!(r.retract_tower(16).unwrap(), sizes);
        assert!(sizes.windows(2).all(|w| w[1] < w[0]));
    }
}

#[test]
fn distinct_rows_retract_to_a_copy() {
    let r = FiniteSolution::from_brace(&optriv());
    let (ret, proj) = r.retract().unwrap();
    assert_eq!(ret.size(), 6);
    let mut seen = proj.clone();
    seen.sort();
    assert_eq!(seen, vec![0, 1, 2, 3, 4, 5]);
}
