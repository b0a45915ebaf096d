//! Named acceptance suites. Each suite checks one family of statements
//! exhaustively over the brace catalog, the small solutions or the infinite
//! families, and reports a single pass/fail line.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use skewlab_core::enumeration::{
    brace_isomorphic, build_catalog, canonical_key, enumerate_braces_with, enumerate_groups, Strategy,
};
use skewlab_core::families::{self, closed_form_agreement, window_check_by_id, CdInf, Free2, OpTrivDInf, Rosita};
use skewlab_core::group::greedy_generators;
use skewlab_core::solution::{enumerate_solutions, random_solution};
use skewlab_core::substructures::{
    b2_coset_generators, b2_coset_generators_with, check_bfc_exponent, check_lambda_order_bound,
    dietzmann_closure, enumerate_subbraces, ideal_in_subbrace_two_sided, index_add, index_mul, is_ideal,
    is_strong_left_ideal, sli_in_subbrace, strong_left_ideal_closure, verify_lamf_bound, verify_oversoc_bound,
    verify_thetafg_bound,
};
use skewlab_core::{ElementSet, FiniteSkewBrace, FiniteSolution, TransversalRule};

/// Largest order in the acceptance catalog.
pub const CATALOG_ORDER: usize = 8;

const RANDOM_SOLUTIONS: u64 = 200;
const RANDOM_TRANSVERSALS: u64 = 5;
const AGREEMENT_SAMPLES: usize = 1000;
const MAX_FAILURES: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Axioms,
    OrbitStabilizer,
    Index,
    Sli,
    Dietzmann,
    Bounds,
    B2Generation,
    Solutions,
    Decomposition,
    Families,
    Enumeration,
    ClosedForms,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Axioms,
        Suite::OrbitStabilizer,
        Suite::Index,
        Suite::Sli,
        Suite::Dietzmann,
        Suite::Bounds,
        Suite::B2Generation,
        Suite::Solutions,
        Suite::Decomposition,
        Suite::Families,
        Suite::Enumeration,
        Suite::ClosedForms,
    ];

    pub fn number(self) -> usize {
        Suite::ALL.iter().position(|&s| s == self).unwrap() + 1
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::OrbitStabilizer => "orbit-stabilizer",
            Suite::Index => "index",
            Suite::Sli => "sli",
            Suite::Dietzmann => "dietzmann",
            Suite::Bounds => "bounds",
            Suite::B2Generation => "b2-generation",
            Suite::Solutions => "solutions",
            Suite::Decomposition => "decomposition",
            Suite::Families => "families",
            Suite::Enumeration => "enumeration",
            Suite::ClosedForms => "closed-forms",
        }
    }

    pub fn run(self) -> SuiteResult {
        let start = Instant::now();
        let mut log = Log::default();
        match self {
            Suite::Axioms => axioms(&mut log),
            Suite::OrbitStabilizer => orbit_stabilizer(&mut log),
            Suite::Index => index(&mut log),
            Suite::Sli => sli(&mut log),
            Suite::Dietzmann => dietzmann(&mut log),
            Suite::Bounds => bounds(&mut log),
            Suite::B2Generation => b2_generation(&mut log),
            Suite::Solutions => solutions(&mut log),
            Suite::Decomposition => decomposition(&mut log),
            Suite::Families => family_windows(&mut log),
            Suite::Enumeration => enumeration(&mut log),
            Suite::ClosedForms => closed_forms(&mut log),
        }
        SuiteResult {
            number: self.number(),
            name: self.name(),
            checks: log.checks,
            failures: log.failures,
            failure_examples: log.examples,
            elapsed: start.elapsed(),
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if let Ok(n) = s.parse::<usize>() {
            return Suite::ALL
                .get(n.wrapping_sub(1))
                .copied()
                .ok_or_else(|| format!("no suite number {n}"));
        }
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// Parses a suite name, a suite number, or `all`.
pub fn parse_selection(s: &str) -> Result<Vec<Suite>, String> {
    if s == "all" {
        Ok(Suite::ALL.to_vec())
    } else {
        s.parse().map(|suite| vec![suite])
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub number: usize,
    pub name: &'static str,
    pub checks: usize,
    pub failures: usize,
    pub failure_examples: Vec<String>,
    #[serde(serialize_with = "seconds")]
    pub elapsed: Duration,
}

fn seconds<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checks > 0
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:>2} {:<17} {}  checks={} failures={} time={:.2}s",
            self.number,
            self.name,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checks,
            self.failures,
            self.elapsed.as_secs_f64()
        )?;
        for e in &self.failure_examples {
            write!(f, "\n    {e}")?;
        }
        Ok(())
    }
}

/// Runs the suites on worker threads and returns results in input order.
pub fn run_suites(suites: &[Suite]) -> Vec<SuiteResult> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = suites.iter().map(|&s| scope.spawn(move || s.run())).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite worker panicked"))
            .collect()
    })
}

#[derive(Default)]
struct Log {
    checks: usize,
    failures: usize,
    examples: Vec<String>,
}

impl Log {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < MAX_FAILURES {
                self.examples.push(describe());
            }
        }
    }
}

/// Every brace of order at most [`CATALOG_ORDER`], one per isomorphism class.
pub fn catalog() -> &'static [FiniteSkewBrace] {
    static CATALOG: OnceLock<Vec<FiniteSkewBrace>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        build_catalog(CATALOG_ORDER)
            .expect("catalog order within the default cap")
            .iter()
            .map(|e| e.brace())
            .collect()
    })
}

fn label(i: usize, b: &FiniteSkewBrace) -> String {
    format!("catalog brace #{i} (order {})", b.order())
}

fn axioms(log: &mut Log) {
    for (i, b) in catalog().iter().enumerate() {
        let (add, mul) = (b.additive(), b.multiplicative());
        let n = b.order();
        // λ recomputed from the tables rather than read from the brace.
        let lam = |a: usize, x: usize| add.op(add.inv(a), mul.op(a, x));
        let mut ok = true;
        let mut first_failure = None;
        for a in 0..n {
            for x in 0..n {
                if mul.op(a, x) != add.op(a, lam(a, x)) || b.lambda(a, x) != lam(a, x) {
                    ok = false;
                    first_failure.get_or_insert((a, x, 0));
                }
                for y in 0..n {
                    let automorphism = lam(a, add.op(x, y)) == add.op(lam(a, x), lam(a, y));
                    let homomorphism = lam(mul.op(a, x), y) == lam(a, lam(x, y));
                    if !(automorphism && homomorphism) {
                        ok = false;
                        first_failure.get_or_insert((a, x, y));
                    }
                }
            }
            // Each λ_a is a bijection.
            let image = ElementSet::from_members(n, (0..n).map(|x| lam(a, x)));
            ok &= image.is_full();
        }
        log.check(ok, || format!("{}: identity fails at {:?}", label(i, b), first_failure));
    }
}

fn orbit_stabilizer(log: &mut Log) {
    for (i, b) in catalog().iter().enumerate() {
        let n = b.order();
        for x in 0..n {
            let lambda_ok = b.lambda_orbit(x).len() * b.stab_lambda(x).len() == n;
            log.check(lambda_ok, || format!("{}: λ at {x}", label(i, b)));
            let fixing_pairs = (0..n)
                .flat_map(|a| (0..n).map(move |c| (a, c)))
                .filter(|&(a, c)| b.sub(b.add(a, b.lambda(c, x)), a) == x)
                .count();
            let theta_ok = b.theta_orbit(x).len() * fixing_pairs == n * n && b.stab_theta_size(x) == fixing_pairs;
            log.check(theta_ok, || format!("{}: θ at {x}", label(i, b)));
        }
    }
}

fn index(log: &mut Log) {
    for (i, b) in catalog().iter().enumerate() {
        for sub in enumerate_subbraces(b) {
            let (ia, im) = (index_add(&sub), index_mul(&sub));
            log.check(ia == im && ia * sub.len() == b.order(), || {
                format!("{}: sub {:?} has indices {ia} and {im}", label(i, b), sub.members().to_vec())
            });
        }
    }
}

fn sli(log: &mut Log) {
    for (i, b) in catalog().iter().enumerate() {
        let two_sided = b.is_two_sided();
        for sub in enumerate_subbraces(b) {
            let a = sub.members();
            let describe = || format!("{}: sub {:?}", label(i, b), a.to_vec());
            let Ok(l) = sli_in_subbrace(b, a) else {
                log.check(false, describe);
                continue;
            };
            let again = sli_in_subbrace(b, &l).ok();
            log.check(
                is_strong_left_ideal(b, &l) && l.is_subset(a) && again.as_ref() == Some(&l),
                describe,
            );
            if two_sided {
                let ideal = ideal_in_subbrace_two_sided(b, a);
                log.check(matches!(&ideal, Ok(j) if is_ideal(b, j) && j.is_subset(a)), describe);
            }
        }
    }
}

fn dietzmann(log: &mut Log) {
    for (i, b) in catalog().iter().enumerate() {
        let n = b.order();
        for x in 0..n {
            let s = ElementSet::singleton(n, x);
            let d = dietzmann_closure(b, &s);
            log.check(d == strong_left_ideal_closure(b, &s) && is_strong_left_ideal(b, &d), || {
                format!("{}: element {x}", label(i, b))
            });
        }
    }
}

fn bounds(log: &mut Log) {
    for (i, b) in catalog().iter().enumerate() {
        let n = b.order();
        let gens = ElementSet::from_members(n, greedy_generators(b.additive(), &ElementSet::full(n)));
        let lamf = verify_lamf_bound(b, &gens);
        log.check(matches!(&lamf, Ok(r) if r.holds), || format!("{}: λ_f bound {lamf:?}", label(i, b)));
        let thetafg = verify_thetafg_bound(b, &gens);
        log.check(matches!(&thetafg, Ok(r) if r.holds), || {
            format!("{}: θ_f bound {thetafg:?}", label(i, b))
        });
        let oversoc = verify_oversoc_bound(b);
        log.check(oversoc.holds, || format!("{}: socle bound {oversoc:?}", label(i, b)));
        let order = check_lambda_order_bound(b);
        log.check(order.holds, || format!("{}: λ order bound {order:?}", label(i, b)));
        for g in [b.additive(), b.multiplicative()] {
            let bfc = check_bfc_exponent(g);
            log.check(bfc.divides, || format!("{}: exponent bound {bfc:?}", label(i, b)));
        }
    }
}

fn b2_generation(log: &mut Log) {
    for (i, b) in catalog().iter().enumerate() {
        log.check(b2_coset_generators(b).equal(), || format!("{}: least-index transversal", label(i, b)));
        for k in 0..RANDOM_TRANSVERSALS {
            let seed = (i as u64) * RANDOM_TRANSVERSALS + k;
            let g = b2_coset_generators_with(b, TransversalRule::Seeded(seed));
            log.check(g.equal(), || format!("{}: transversal seed {seed}", label(i, b)));
        }
    }
}

fn revalidate(x: &FiniteSolution) -> bool {
    FiniteSolution::from_tables(&x.lambda_rows(), &x.rho_rows()).is_ok()
}

fn solutions(log: &mut Log) {
    for (i, b) in catalog().iter().enumerate() {
        let n = b.order();
        let r = FiniteSolution::from_brace(b);
        // r_B(a, c) = (λ_a(c), \overline{λ_a(c)}∘a∘c), recomputed.
        let formula = (0..n).all(|a| {
            (0..n).all(|c| {
                let l = b.lambda(a, c);
                r.r(a, c) == (l, b.mul(b.mul(b.bar(l), a), c))
            })
        });
        log.check(formula && revalidate(&r), || format!("{}: r_B", label(i, b)));
        log.check(revalidate(&r.derived()), || format!("{}: derived solution", label(i, b)));
        match r.retract() {
            Ok((ret, proj)) => {
                let morphism = (0..n).all(|x| {
                    (0..n).all(|y| {
                        let (u, v) = r.r(x, y);
                        ret.r(proj[x], proj[y]) == (proj[u], proj[v])
                    })
                });
                log.check(revalidate(&ret) && morphism, || format!("{}: retract", label(i, b)));
            }
            Err(e) => log.check(false, || format!("{}: retract failed: {e}", label(i, b))),
        }
    }
}

fn check_decomposition(log: &mut Log, x: &FiniteSolution, what: &dyn Fn() -> String) {
    let brute = match x.brute_force_atoms() {
        Ok(p) => p,
        Err(e) => return log.check(false, || format!("{}: brute force failed: {e}", what())),
    };
    let atoms = x.decomposition_atoms();
    log.check(atoms.as_ref() == Ok(&brute), || format!("{}: atoms {atoms:?} vs {brute:?}", what()));
    let blocks = brute.blocks();
    for y in 0..x.size() {
        let mf = x.minimal_factor(y);
        log.check(mf.exact && mf.members == blocks[brute.block_of(y)], || {
            format!("{}: minimal factor of {y}", what())
        });
    }
}

fn decomposition(log: &mut Log) {
    for n in 1..=skewlab_core::solution::ENUMERATION_LIMIT {
        let all = enumerate_solutions(n).expect("within the enumeration limit");
        for (k, x) in all.iter().enumerate() {
            check_decomposition(log, x, &|| format!("size-{n} solution #{k}"));
        }
    }
    for seed in 0..RANDOM_SOLUTIONS {
        let n = 5 + (seed % 6) as usize;
        let x = random_solution(n, seed);
        check_decomposition(log, &x, &|| format!("random_solution({n}, {seed})"));
    }
}

/// `(claim, radius, orbit cap)` for each windowed family claim.
pub const FAMILY_CLAIMS: [(&str, u64, usize); 5] = [
    ("cdinf-soc", 1000, families::DEFAULT_CAP),
    ("cdinf-torsion", 1000, families::DEFAULT_CAP),
    ("free2-orbit", 8, families::DEFAULT_CAP),
    ("rosita-lambda-f", 20, 10_000),
    ("rosita-ann", 20, families::DEFAULT_CAP),
];

fn family_windows(log: &mut Log) {
    for (id, radius, cap) in FAMILY_CLAIMS {
        match window_check_by_id(id, radius, cap) {
            Ok(r) => log.check(r.verified() && r.checked > 0, || format!("{id}: {r:?}")),
            Err(e) => log.check(false, || format!("{id}: {e}")),
        }
    }
}

fn enumeration(log: &mut Log) {
    for n in 1..=CATALOG_ORDER {
        let groups = enumerate_groups(n).expect("within the default cap");
        let mut classes = 0;
        for (k, g) in groups.iter().enumerate() {
            let by_table = enumerate_braces_with(g, Strategy::MulTable);
            let by_lambda = enumerate_braces_with(g, Strategy::LambdaMap);
            let keys_t: Vec<_> = by_table.iter().map(canonical_key).collect();
            let keys_l: Vec<_> = by_lambda.iter().map(canonical_key).collect();
            // Matching keys must come from isomorphic braces, and distinct
            // representatives must not be isomorphic.
            let paired = by_table.len() == by_lambda.len()
                && by_table.iter().zip(&by_lambda).all(|(t, l)| brace_isomorphic(t, l));
            let distinct = by_lambda
                .iter()
                .enumerate()
                .all(|(p, x)| by_lambda[p + 1..].iter().all(|y| !brace_isomorphic(x, y)));
            log.check(keys_t == keys_l && paired && distinct, || {
                format!("order {n}, group #{k}: {} vs {} classes", by_table.len(), by_lambda.len())
            });
            classes += by_lambda.len();
        }
        if is_prime(n) {
            log.check(classes == 1, || format!("order {n}: {classes} classes"));
        }
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn closed_forms(log: &mut Log) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let reports = [
        closed_form_agreement::<CdInf, _>(&mut rng, AGREEMENT_SAMPLES),
        closed_form_agreement::<OpTrivDInf, _>(&mut rng, AGREEMENT_SAMPLES),
        closed_form_agreement::<Rosita, _>(&mut rng, AGREEMENT_SAMPLES),
        closed_form_agreement::<Free2, _>(&mut rng, AGREEMENT_SAMPLES),
    ];
    for r in reports {
        log.check(r.all_agree() && r.samples == AGREEMENT_SAMPLES, || format!("{r:?}"));
    }
}
