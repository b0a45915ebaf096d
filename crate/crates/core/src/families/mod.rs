//! Four infinite skew braces with closed-form operations, exact arithmetic,
//! bounded orbit computation and windowed verification of their invariant
//! sets.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{Debug, Display};
use core::hash::Hash;
use core::str::FromStr;

use hashbrown::{HashMap, HashSet};
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub mod cdinf;
pub mod dinf;
pub mod free2;
pub mod rosita;

pub use cdinf::CdInf;
pub use dinf::OpTrivDInf;
pub use free2::Free2;
pub use rosita::Rosita;

/// Default orbit cap for window checks that do not specify one.
pub const DEFAULT_CAP: usize = 64;

/// Probes for the defining properties of invariant sets are the window
/// elements of at most this radius.
pub const PROBE_RADIUS: u64 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    CdInf,
    OpTrivDInf,
    Rosita,
    Free2,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] = [
        FamilyKind::CdInf,
        FamilyKind::OpTrivDInf,
        FamilyKind::Rosita,
        FamilyKind::Free2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::CdInf => "cdinf",
            FamilyKind::OpTrivDInf => "optriv-dinf",
            FamilyKind::Rosita => "rosita",
            FamilyKind::Free2 => "free2",
        }
    }
}

impl Display for FamilyKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| FamilyError::UnknownFamily(s.into()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NamedSet {
    KerLambda,
    Fix,
    Soc,
    Ann,
    LambdaF,
    ThetaF,
    TorsionMul,
}

impl NamedSet {
    pub const ALL: [NamedSet; 7] = [
        NamedSet::KerLambda,
        NamedSet::Fix,
        NamedSet::Soc,
        NamedSet::Ann,
        NamedSet::LambdaF,
        NamedSet::ThetaF,
        NamedSet::TorsionMul,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedSet::KerLambda => "ker-lambda",
            NamedSet::Fix => "fix",
            NamedSet::Soc => "soc",
            NamedSet::Ann => "ann",
            NamedSet::LambdaF => "lambda-f",
            NamedSet::ThetaF => "theta-f",
            NamedSet::TorsionMul => "torsion",
        }
    }
}

impl FromStr for NamedSet {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let normalized = s.replace('_', "-");
        let normalized = match normalized.as_str() {
            "torsion-mul" => "torsion",
            other => other,
        };
        NamedSet::ALL
            .into_iter()
            .find(|n| n.name() == normalized)
            .ok_or_else(|| FamilyError::UnsupportedQuery(s.into()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("unsupported query `{0}`")]
    UnsupportedQuery(String),
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("cannot parse element `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("window radius must be at least 1")]
    ZeroRadius,
}

impl FamilyError {
    pub(crate) fn parse(input: &str, reason: &str) -> Self {
        FamilyError::Parse {
            input: input.into(),
            reason: reason.into(),
        }
    }
}

/// A skew brace on an infinite carrier with exact element arithmetic.
pub trait Family {
    type Elem: Clone + Eq + Hash + Ord + Debug + Display;

    const KIND: FamilyKind;

    fn zero() -> Self::Elem;
    fn add(g: &Self::Elem, h: &Self::Elem) -> Self::Elem;
    fn neg(g: &Self::Elem) -> Self::Elem;
    fn mul(g: &Self::Elem, h: &Self::Elem) -> Self::Elem;
    fn bar(g: &Self::Elem) -> Self::Elem;

    /// Closed-form `λ_g(x)`.
    fn lambda(g: &Self::Elem, x: &Self::Elem) -> Self::Elem;

    /// Closed-form `θ_(a,b)(x)`.
    fn theta(a: &Self::Elem, b: &Self::Elem, x: &Self::Elem) -> Self::Elem;

    /// Finitely many elements whose `λ`-maps generate the image of `λ`.
    fn lambda_actors() -> Vec<Self::Elem>;

    /// Generators of `(B,+)` up to its centre; conjugation by these together
    /// with the `λ`-actors generates the image of `θ`. Empty when `+` is
    /// abelian.
    fn conjugators() -> Vec<Self::Elem>;

    /// Closed-form membership in the named set.
    fn member(set: NamedSet, x: &Self::Elem) -> bool;

    /// All elements whose coordinates are bounded by `radius`.
    fn window(radius: u64) -> Vec<Self::Elem>;

    /// Largest coordinate (or word length) of `x`, saturating.
    fn magnitude(x: &Self::Elem) -> u64;

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self::Elem;

    fn parse(s: &str) -> Result<Self::Elem, FamilyError>;

    /// An element whose `λ`-orbit is finite exactly when that of `x` is.
    /// Used to share orbit computations across a window.
    fn orbit_representative(x: &Self::Elem) -> Self::Elem {
        x.clone()
    }
}

/// `λ_g(x) = -g + g∘x`.
pub fn generic_lambda<F: Family>(g: &F::Elem, x: &F::Elem) -> F::Elem {
    F::add(&F::neg(g), &F::mul(g, x))
}

/// `θ_(a,b)(x) = a + λ_b(x) - a`.
pub fn generic_theta<F: Family>(a: &F::Elem, b: &F::Elem, x: &F::Elem) -> F::Elem {
    F::add(&F::add(a, &generic_lambda::<F>(b, x)), &F::neg(a))
}

/// `g∘(h+k) = g∘h - g + g∘k`.
pub fn distributive<F: Family>(g: &F::Elem, h: &F::Elem, k: &F::Elem) -> bool {
    let lhs = F::mul(g, &F::add(h, k));
    let rhs = F::add(&F::add(&F::mul(g, h), &F::neg(g)), &F::mul(g, k));
    lhs == rhs
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Orbit<E> {
    /// The orbit, sorted.
    Finite(Vec<E>),
    /// More than `cap` elements were reached.
    Overflow { cap: usize },
}

impl<E> Orbit<E> {
    pub fn is_finite(&self) -> bool {
        matches!(self, Orbit::Finite(_))
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn len(&self) -> Option<usize> {
        match self {
            Orbit::Finite(v) => Some(v.len()),
            Orbit::Overflow { .. } => None,
        }
    }
}

fn bfs<E, M>(x: &E, maps: &[M], cap: usize) -> Orbit<E>
where
    E: Clone + Eq + Hash + Ord,
    M: Fn(&E) -> E,
{
    let mut seen: HashSet<E> = HashSet::new();
    seen.insert(x.clone());
    let mut queue = VecDeque::from([x.clone()]);
    while let Some(u) = queue.pop_front() {
        for map in maps {
            let v = map(&u);
            if seen.insert(v.clone()) {
                if seen.len() > cap {
                    return Orbit::Overflow { cap };
                }
                queue.push_back(v);
            }
        }
    }
    let mut out: Vec<E> = seen.into_iter().collect();
    out.sort();
    Orbit::Finite(out)
}

type ElemMap<F> = alloc::boxed::Box<dyn Fn(&<F as Family>::Elem) -> <F as Family>::Elem>;

fn lambda_maps<F: Family + 'static>() -> Vec<ElemMap<F>> {
    F::lambda_actors()
        .into_iter()
        .map(|g| alloc::boxed::Box::new(move |x: &F::Elem| F::lambda(&g, x)) as ElemMap<F>)
        .collect()
}

/// `{λ_g(x)}` by closure under the finitely many `λ`-actors.
pub fn lambda_orbit<F: Family + 'static>(x: &F::Elem, cap: usize) -> Orbit<F::Elem> {
    bfs(x, &lambda_maps::<F>(), cap)
}

/// `{θ_(a,b)(x)}` by closure under the `λ`-actors and additive conjugation.
pub fn theta_orbit<F: Family + 'static>(x: &F::Elem, cap: usize) -> Orbit<F::Elem> {
    let mut maps = lambda_maps::<F>();
    for s in F::conjugators() {
        for t in [s.clone(), F::neg(&s)] {
            maps.push(alloc::boxed::Box::new(move |x: &F::Elem| F::add(&F::add(&t, x), &F::neg(&t))));
        }
    }
    bfs(x, &maps, cap)
}

/// Membership judged from the definition of the set, with universal
/// quantifiers restricted to `probes` and orbits bounded by `cap`.
pub fn member_by_definition<F: Family + 'static>(
    set: NamedSet,
    x: &F::Elem,
    probes: &[F::Elem],
    cap: usize,
    radius: u64,
) -> bool {
    let in_ker = || probes.iter().all(|p| generic_lambda::<F>(x, p) == *p);
    let in_center_add = || probes.iter().all(|p| F::add(x, p) == F::add(p, x));
    let in_center_mul = || probes.iter().all(|p| F::mul(x, p) == F::mul(p, x));
    match set {
        NamedSet::KerLambda => in_ker(),
        NamedSet::Fix => probes.iter().all(|p| generic_lambda::<F>(p, x) == *x),
        NamedSet::Soc => in_ker() && in_center_add(),
        NamedSet::Ann => in_ker() && in_center_add() && in_center_mul(),
        NamedSet::LambdaF => lambda_orbit::<F>(x, cap).is_finite(),
        NamedSet::ThetaF => theta_orbit::<F>(x, cap).is_finite(),
        NamedSet::TorsionMul => has_finite_order::<F>(x, radius),
    }
}

/// Powers of `x` under `∘` return to zero before leaving four times the
/// window radius.
fn has_finite_order<F: Family>(x: &F::Elem, radius: u64) -> bool {
    let bound = radius.saturating_mul(4);
    let zero = F::zero();
    let mut power = x.clone();
    for _ in 0..=bound.saturating_mul(2).saturating_add(8) {
        if power == zero {
            return true;
        }
        if F::magnitude(&power) > bound {
            return false;
        }
        power = F::mul(&power, x);
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Claim {
    /// The closed form of a named set agrees with its definition.
    Set(NamedSet),
    /// Every `λ`-orbit has at most two elements.
    OrbitAtMostTwo,
}

impl Claim {
    pub fn id(self, family: FamilyKind) -> String {
        match self {
            Claim::Set(s) => format!("{}-{}", family.name(), s.name()),
            Claim::OrbitAtMostTwo => format!("{}-orbit", family.name()),
        }
    }

    /// Parses `<family>-<claim>`, e.g. `cdinf-soc` or `free2-orbit`.
    pub fn parse(id: &str) -> Result<(FamilyKind, Claim), FamilyError> {
        let unknown = || FamilyError::UnknownClaim(id.into());
        let family = FamilyKind::ALL
            .into_iter()
            .filter(|k| id.starts_with(k.name()) && id[k.name().len()..].starts_with('-'))
            .max_by_key(|k| k.name().len())
            .ok_or_else(unknown)?;
        let rest = &id[family.name().len() + 1..];
        if rest == "orbit" {
            return Ok((family, Claim::OrbitAtMostTwo));
        }
        let set = rest.parse::<NamedSet>().map_err(|_| unknown())?;
        Ok((family, Claim::Set(set)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowReport {
    pub claim: String,
    pub radius: u64,
    pub cap: usize,
    pub checked: usize,
    /// Window elements inside the claimed set.
    pub members: usize,
    pub counterexamples: usize,
    /// The first few counterexamples, rendered.
    pub examples: Vec<String>,
}

impl WindowReport {
    pub fn verified(&self) -> bool {
        self.counterexamples == 0
    }
}

const MAX_REPORTED: usize = 10;

/// Verifies a claim on every element of the window of the given radius.
pub fn window_check<F: Family + 'static>(claim: Claim, radius: u64, cap: usize) -> Result<WindowReport, FamilyError> {
    if radius == 0 {
        return Err(FamilyError::ZeroRadius);
    }
    let window = F::window(radius);
    let probes = F::window(radius.min(PROBE_RADIUS));
    let mut report = WindowReport {
        claim: claim.id(F::KIND),
        radius,
        cap,
        checked: window.len(),
        members: 0,
        counterexamples: 0,
        examples: Vec::new(),
    };
    let mut orbit_memo: HashMap<F::Elem, bool> = HashMap::new();
    for x in &window {
        let ok = match claim {
            Claim::Set(set) => {
                let closed = F::member(set, x);
                report.members += usize::from(closed);
                let defined = match set {
                    NamedSet::LambdaF | NamedSet::ThetaF => {
                        let key = F::orbit_representative(x);
                        *orbit_memo
                            .entry(key)
                            .or_insert_with(|| member_by_definition::<F>(set, x, &probes, cap, radius))
                    }
                    _ => member_by_definition::<F>(set, x, &probes, cap, radius),
                };
                closed == defined
            }
            Claim::OrbitAtMostTwo => match lambda_orbit::<F>(x, cap) {
                Orbit::Finite(orbit) => {
                    report.members += 1;
                    let expected: BTreeSet<F::Elem> = F::lambda_actors()
                        .iter()
                        .map(|g| F::lambda(g, x))
                        .chain([x.clone()])
                        .collect();
                    orbit.len() <= 2 && orbit.into_iter().collect::<BTreeSet<_>>() == expected
                }
                Orbit::Overflow { .. } => false,
            },
        };
        if !ok {
            report.counterexamples += 1;
            if report.examples.len() < MAX_REPORTED {
                report.examples.push(format!("{x}"));
            }
        }
    }
    Ok(report)
}

/// Runs [`window_check`] for a claim identifier such as `cdinf-soc`.
pub fn window_check_by_id(id: &str, radius: u64, cap: usize) -> Result<WindowReport, FamilyError> {
    let (family, claim) = Claim::parse(id)?;
    match family {
        FamilyKind::CdInf => window_check::<CdInf>(claim, radius, cap),
        FamilyKind::OpTrivDInf => window_check::<OpTrivDInf>(claim, radius, cap),
        FamilyKind::Rosita => window_check::<Rosita>(claim, radius, cap),
        FamilyKind::Free2 => window_check::<Free2>(claim, radius, cap),
    }
}

/// Counts of randomized samples on which closed forms and axioms hold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgreementReport {
    pub family: FamilyKind,
    pub samples: usize,
    pub lambda_agree: usize,
    pub theta_agree: usize,
    pub distributive: usize,
}

impl AgreementReport {
    pub fn all_agree(&self) -> bool {
        self.lambda_agree == self.samples && self.theta_agree == self.samples && self.distributive == self.samples
    }
}

/// Compares the closed-form `λ` and `θ` with their definitions, and checks
/// skew left distributivity, on `samples` random inputs.
pub fn closed_form_agreement<F: Family, R: Rng + ?Sized>(rng: &mut R, samples: usize) -> AgreementReport {
    let mut report = AgreementReport {
        family: F::KIND,
        samples,
        lambda_agree: 0,
        theta_agree: 0,
        distributive: 0,
    };
    for _ in 0..samples {
        let (a, b, c) = (F::random(rng), F::random(rng), F::random(rng));
        report.lambda_agree += usize::from(F::lambda(&a, &b) == generic_lambda::<F>(&a, &b));
        report.theta_agree += usize::from(F::theta(&a, &b, &c) == generic_theta::<F>(&a, &b, &c));
        report.distributive += usize::from(distributive::<F>(&a, &b, &c));
    }
    report
}

/// All rationals `p/q` in lowest terms with `|p| <= radius`, `1 <= q <= radius`.
pub(crate) fn window_rationals(radius: u64) -> Vec<(i64, i64)> {
    let r = radius as i64;
    let mut out = Vec::new();
    for q in 1..=r {
        for p in -r..=r {
            if num_integer::gcd(p, q) == 1 {
                out.push((p, q));
            }
        }
    }
    out
}
