//! The `skewlab` command line.

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use skewlab_core::enumeration::{build_catalog_capped, EnumerationError, DEFAULT_MAX_ORDER};
use skewlab_core::families::{
    generic_lambda, generic_theta, lambda_orbit, member_by_definition, theta_orbit, window_check_by_id, CdInf,
    Family, FamilyError, FamilyKind, Free2, NamedSet, OpTrivDInf, Orbit, Rosita, DEFAULT_CAP, PROBE_RADIUS,
};
use skewlab_core::substructures::{
    dietzmann_closure, enumerate_subbraces, ideal_in_subbrace_two_sided, index_add, index_mul, is_ideal,
    is_left_ideal, is_strong_left_ideal, is_subbrace, sli_in_subbrace, strong_left_ideal_closure, SubBrace,
};
use skewlab_core::{AnalysisReport, ElementSet, FiniteSolution, SolutionError};

use crate::io::{self, IoError, LoadedBrace};
use crate::report::{
    FactorReport, SolutionReport, CATALOG_SCHEMA, SUBBRACES_SCHEMA, SWEEP_SCHEMA, TOWER_STEPS, WINDOW_SCHEMA,
};
use crate::suites::{parse_selection, run_suites};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VALIDATION: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;

/// Environment variable overriding the order cap of the enumerators.
pub const MAX_ORDER_VAR: &str = "SKEWLAB_MAX_ORDER";

#[derive(Debug, Parser)]
#[command(name = "skewlab", version, about = "Finite skew braces and set-theoretic Yang-Baxter solutions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Kind {
    Brace,
    Solution,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SolutionOp {
    Derived,
    Retract,
    Tower,
    Decompose,
    Atoms,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a file holds a valid brace or solution.
    Validate { kind: Kind, file: PathBuf },
    /// Invariants of a brace.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// λ- and θ-orbits and stabilizers of one element.
    Orbits {
        file: PathBuf,
        #[arg(long)]
        element: String,
    },
    /// Every sub skew brace with its indices and ideal properties.
    Subbraces {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Additive and multiplicative index of a sub skew brace.
    Index {
        file: PathBuf,
        /// Comma-separated elements.
        #[arg(long)]
        sub: String,
    },
    /// Strong left ideal (and, for two-sided braces, ideal) inside a sub skew brace.
    Sli {
        file: PathBuf,
        #[arg(long)]
        sub: String,
    },
    /// Additive closure of the θ-orbits of a set of elements.
    Dietzmann {
        file: PathBuf,
        #[arg(long)]
        elements: String,
    },
    /// The solution `r_B` of a brace.
    ToSolution {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Operations on a solution file.
    Solution {
        op: SolutionOp,
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Where to write derived or retracted solutions.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = TOWER_STEPS)]
        max_steps: usize,
    },
    /// Write one file per isomorphism class of braces up to an order.
    Enumerate {
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Computations in an infinite family.
    Family {
        family: String,
        #[command(subcommand)]
        action: FamilyAction,
    },
    /// Run an acceptance suite by name or number, or `all`.
    Sweep {
        suite: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum FamilyAction {
    /// `λ_g(x)`, closed form and by definition.
    Lambda { g: String, x: String },
    /// `θ_(a,b)(x)`, closed form and by definition.
    Theta { a: String, b: String, x: String },
    /// The λ-orbit (or θ-orbit) of `x`, up to `cap` elements.
    Orbit {
        x: String,
        #[arg(long)]
        theta: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Membership of `x` in a named set.
    Member {
        set: String,
        x: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Windowed check of a claim such as `soc` or `orbit`.
    Check {
        claim: String,
        #[arg(long, default_value_t = 10)]
        radius: u64,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
}

/// A failed command: the message for stderr and the exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn validation(message: impl Display) -> Self {
        Failure {
            code: EXIT_VALIDATION,
            message: message.to_string(),
        }
    }

    fn parse(message: impl Display) -> Self {
        Failure {
            code: EXIT_PARSE,
            message: message.to_string(),
        }
    }

    fn resource(message: impl Display) -> Self {
        Failure {
            code: EXIT_RESOURCE,
            message: message.to_string(),
        }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Validation(_) => Failure::validation(e),
            IoError::Io { .. } | IoError::Parse { .. } => Failure::parse(e),
        }
    }
}

impl From<FamilyError> for Failure {
    fn from(e: FamilyError) -> Self {
        Failure::parse(e)
    }
}

impl From<SolutionError> for Failure {
    fn from(e: SolutionError) -> Self {
        match e {
            SolutionError::TooLarge { .. } | SolutionError::PartialResult(_) => Failure::resource(e),
            _ => Failure::validation(e),
        }
    }
}

/// The result of a command: text for stdout, or a failure. A failure may
/// still carry output, as for a sweep with failing suites.
pub type Outcome = Result<String, (Option<String>, Failure)>;

fn fail<T>(f: impl Into<Failure>) -> Result<T, (Option<String>, Failure)> {
    Err((None, f.into()))
}

impl From<Failure> for (Option<String>, Failure) {
    fn from(f: Failure) -> Self {
        (None, f)
    }
}

/// Runs a parsed command.
pub fn execute(cli: Cli) -> Outcome {
    match cli.command {
        Command::Validate { kind, file } => validate(kind, &file),
        Command::Analyze { file, json } => analyze(&file, json),
        Command::Orbits { file, element } => orbits(&file, &element),
        Command::Subbraces { file, json } => subbraces(&file, json),
        Command::Index { file, sub } => index(&file, &sub),
        Command::Sli { file, sub } => sli(&file, &sub),
        Command::Dietzmann { file, elements } => dietzmann(&file, &elements),
        Command::ToSolution { file, out } => {
            let loaded = io::load_brace(&file).map_err(Failure::from)?;
            emit_solution(&FiniteSolution::from_brace(&loaded.brace), out.as_deref())
        }
        Command::Solution {
            op,
            file,
            json,
            out,
            max_steps,
        } => solution(op, &file, json, out.as_deref(), max_steps),
        Command::Enumerate { max_order, out } => enumerate(max_order, &out),
        Command::Family { family, action } => family_command(&family, action),
        Command::Sweep { suite, json } => sweep(&suite, json),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// Element names as the user sees them: file names if present, otherwise the
/// file's indices.
struct Labels<'a> {
    loaded: &'a LoadedBrace,
    inverse: Vec<usize>,
}

impl<'a> Labels<'a> {
    fn new(loaded: &'a LoadedBrace) -> Self {
        let mut inverse = vec![0; loaded.relabel.len()];
        for (i, &j) in loaded.relabel.iter().enumerate() {
            inverse[j] = i;
        }
        Labels { loaded, inverse }
    }

    fn show(&self, x: usize) -> String {
        match &self.loaded.names {
            Some(names) => names[x].clone(),
            None => self.inverse[x].to_string(),
        }
    }

    fn show_set(&self, s: &ElementSet) -> String {
        let items: Vec<String> = s.iter().map(|x| self.show(x)).collect();
        format!("{{{}}}", items.join(", "))
    }

    fn file_indices(&self, s: &ElementSet) -> Vec<usize> {
        let mut v: Vec<usize> = s.iter().map(|x| self.inverse[x]).collect();
        v.sort_unstable();
        v
    }

    fn parse(&self, token: &str) -> Result<usize, Failure> {
        let n = self.loaded.relabel.len();
        if let Some(names) = &self.loaded.names {
            if let Some(x) = names.iter().position(|name| name == token) {
                return Ok(x);
            }
        }
        match token.parse::<usize>() {
            Ok(i) if i < n => Ok(self.loaded.relabel[i]),
            _ => Err(Failure::parse(format!("unknown element `{token}`"))),
        }
    }

    fn parse_set(&self, list: &str) -> Result<ElementSet, Failure> {
        let mut s = ElementSet::empty(self.loaded.relabel.len());
        for token in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            s.insert(self.parse(token)?);
        }
        Ok(s)
    }
}

fn validate(kind: Kind, file: &Path) -> Outcome {
    match kind {
        Kind::Brace => {
            let loaded = io::load_brace(file).map_err(Failure::from)?;
            Ok(format!("valid skew brace of order {}\n", loaded.brace.order()))
        }
        Kind::Solution => {
            let x = io::load_solution(file).map_err(Failure::from)?;
            Ok(format!("valid solution of size {}\n", x.size()))
        }
    }
}

fn analyze(file: &Path, json: bool) -> Outcome {
    let loaded = io::load_brace(file).map_err(Failure::from)?;
    let r = AnalysisReport::of_brace(&loaded.brace);
    if json {
        return Ok(to_json(&r));
    }
    let mut out = String::new();
    let mut line = |k: &str, v: String| out.push_str(&format!("{k:<24}{v}\n"));
    line("order", r.order.to_string());
    line("|ker λ|", r.ker_lambda.to_string());
    line("|Fix|", r.fix.to_string());
    line("|Z(B,+)|", r.center_add.to_string());
    line("|Z(B,∘)|", r.center_mul.to_string());
    line("|Soc|", r.soc.to_string());
    line("|Ann|", r.ann.to_string());
    line("|B²|", r.b2.to_string());
    line("|B² (opposite)|", r.b2_op.to_string());
    line("|B'|", r.commutator.to_string());
    line("two-sided", r.two_sided.to_string());
    line("trivial", r.trivial.to_string());
    line("abelian type", r.abelian_type.to_string());
    line("λ-orbit sizes", format!("{:?}", r.lambda_orbit_sizes));
    line("θ-orbit sizes", format!("{:?}", r.theta_orbit_sizes));
    line("sub skew braces", r.subbrace_count.to_string());
    line("index equality", r.index_equality_verified.to_string());
    Ok(out)
}

fn orbits(file: &Path, element: &str) -> Outcome {
    let loaded = io::load_brace(file).map_err(Failure::from)?;
    let labels = Labels::new(&loaded);
    let b = &loaded.brace;
    let x = labels.parse(element)?;
    let lo = b.lambda_orbit(x);
    let to = b.theta_orbit(x);
    Ok(format!(
        "λ-orbit ({}): {}\n|Stab_λ| = {}\nθ-orbit ({}): {}\n|Stab_θ| = {}\n",
        lo.len(),
        labels.show_set(&lo),
        b.stab_lambda(x).len(),
        to.len(),
        labels.show_set(&to),
        b.stab_theta_size(x),
    ))
}

#[derive(Serialize)]
struct SubbraceRow {
    members: Vec<usize>,
    index_add: usize,
    index_mul: usize,
    left_ideal: bool,
    strong_left_ideal: bool,
    ideal: bool,
}

#[derive(Serialize)]
struct SubbracesReport {
    schema: &'static str,
    order: usize,
    subbraces: Vec<SubbraceRow>,
}

fn subbraces(file: &Path, json: bool) -> Outcome {
    let loaded = io::load_brace(file).map_err(Failure::from)?;
    let labels = Labels::new(&loaded);
    let b = &loaded.brace;
    let subs = enumerate_subbraces(b);
    if json {
        let rows = subs
            .iter()
            .map(|s| SubbraceRow {
                members: labels.file_indices(s.members()),
                index_add: index_add(s),
                index_mul: index_mul(s),
                left_ideal: is_left_ideal(b, s.members()),
                strong_left_ideal: is_strong_left_ideal(b, s.members()),
                ideal: is_ideal(b, s.members()),
            })
            .collect();
        return Ok(to_json(&SubbracesReport {
            schema: SUBBRACES_SCHEMA,
            order: b.order(),
            subbraces: rows,
        }));
    }
    let mut out = String::new();
    for s in &subs {
        let m = s.members();
        let kind = if is_ideal(b, m) {
            "ideal"
        } else if is_strong_left_ideal(b, m) {
            "strong left ideal"
        } else if is_left_ideal(b, m) {
            "left ideal"
        } else {
            "sub skew brace"
        };
        out.push_str(&format!(
            "{} size={} index+={} index∘={} {kind}\n",
            labels.show_set(m),
            s.len(),
            index_add(s),
            index_mul(s)
        ));
    }
    Ok(out)
}

fn load_subbrace<'a>(loaded: &'a LoadedBrace, labels: &Labels<'_>, list: &str) -> Result<SubBrace<'a>, Failure> {
    let s = labels.parse_set(list)?;
    if !is_subbrace(&loaded.brace, &s) {
        return Err(Failure::validation(format!("{} is not a sub skew brace", labels.show_set(&s))));
    }
    SubBrace::new(&loaded.brace, s).map_err(Failure::validation)
}

fn index(file: &Path, list: &str) -> Outcome {
    let loaded = io::load_brace(file).map_err(Failure::from)?;
    let labels = Labels::new(&loaded);
    let sub = load_subbrace(&loaded, &labels, list)?;
    Ok(format!("index+ = {}\nindex∘ = {}\n", index_add(&sub), index_mul(&sub)))
}

fn sli(file: &Path, list: &str) -> Outcome {
    let loaded = io::load_brace(file).map_err(Failure::from)?;
    let labels = Labels::new(&loaded);
    let b = &loaded.brace;
    let sub = load_subbrace(&loaded, &labels, list)?;
    let l = sli_in_subbrace(b, sub.members()).map_err(Failure::validation)?;
    let mut out = format!("strong left ideal: {}\n", labels.show_set(&l));
    if b.is_two_sided() {
        let i = ideal_in_subbrace_two_sided(b, sub.members()).map_err(Failure::validation)?;
        out.push_str(&format!("ideal: {}\n", labels.show_set(&i)));
    }
    Ok(out)
}

fn dietzmann(file: &Path, list: &str) -> Outcome {
    let loaded = io::load_brace(file).map_err(Failure::from)?;
    let labels = Labels::new(&loaded);
    let b = &loaded.brace;
    let x = labels.parse_set(list)?;
    let d = dietzmann_closure(b, &x);
    let agrees = d == strong_left_ideal_closure(b, &x);
    Ok(format!(
        "closure ({}): {}\nequals strong left ideal closure: {agrees}\n",
        d.len(),
        labels.show_set(&d)
    ))
}

fn emit_solution(x: &FiniteSolution, out: Option<&Path>) -> Outcome {
    match out {
        Some(path) => {
            io::save_solution(x, path).map_err(Failure::from)?;
            Ok(String::new())
        }
        None => Ok(io::solution_to_json(x)),
    }
}

fn solution(op: SolutionOp, file: &Path, json: bool, out: Option<&Path>, max_steps: usize) -> Outcome {
    let x = io::load_solution(file).map_err(Failure::from)?;
    match op {
        SolutionOp::Derived => emit_solution(&x.derived(), out),
        SolutionOp::Retract => {
            let (ret, proj) = x.retract().map_err(Failure::from)?;
            eprintln!("projection: {proj:?}");
            emit_solution(&ret, out)
        }
        SolutionOp::Tower => {
            let sizes = x.retract_tower(max_steps).map_err(Failure::from)?;
            Ok(if json {
                to_json(&sizes)
            } else {
                format!("{sizes:?}\n")
            })
        }
        SolutionOp::Decompose => {
            let factors: Vec<FactorReport> =
                (0..x.size()).map(|y| FactorReport::new(y, &x.minimal_factor(y))).collect();
            let exact = factors.iter().all(|f| f.exact);
            let text = if json {
                to_json(&factors)
            } else {
                let mut s = String::new();
                for f in &factors {
                    let bound = if f.exact { "" } else { " (upper bound)" };
                    s.push_str(&format!("{}: {:?}{bound}\n", f.element, f.members));
                }
                s.push_str(&format!("Δ_f: {:?}\n", x.delta_f().to_vec()));
                s
            };
            if exact {
                Ok(text)
            } else {
                Err((Some(text), Failure::resource("some minimal factors exceed the exact search limit")))
            }
        }
        SolutionOp::Atoms => {
            let (partition, exact) = match x.decomposition_atoms() {
                Ok(p) => (p, true),
                Err(SolutionError::PartialResult(p)) => (p, false),
                Err(e) => return fail(e),
            };
            let blocks: Vec<Vec<usize>> = partition.blocks().iter().map(ElementSet::to_vec).collect();
            let text = if json {
                if exact {
                    SolutionReport::of_solution(&x).map(|r| to_json(&r)).map_err(Failure::from)?
                } else {
                    to_json(&blocks)
                }
            } else {
                blocks.iter().map(|b| format!("{b:?}\n")).collect()
            };
            if exact {
                Ok(text)
            } else {
                Err((Some(text), Failure::resource("some atoms are only upper bounds")))
            }
        }
    }
}

/// The enumeration cap: [`MAX_ORDER_VAR`] if set, else the library default.
pub fn max_order_cap() -> Result<usize, Failure> {
    match std::env::var(MAX_ORDER_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::parse(format!("{MAX_ORDER_VAR}={v} is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

#[derive(Serialize)]
struct CatalogIndexEntry {
    file: String,
    order: usize,
    report: AnalysisReport,
}

#[derive(Serialize)]
struct CatalogIndex {
    schema: &'static str,
    max_order: usize,
    entries: Vec<CatalogIndexEntry>,
}

fn enumerate(max_order: usize, out: &Path) -> Outcome {
    let cap = max_order_cap()?;
    let catalog = build_catalog_capped(max_order, cap).map_err(|e| match e {
        EnumerationError::TooLarge { .. } => Failure::resource(format!("{e}; raise {MAX_ORDER_VAR} to allow it")),
        _ => Failure::validation(e),
    })?;
    fs::create_dir_all(out).map_err(|e| Failure::parse(format!("{}: {e}", out.display())))?;
    let mut counts = vec![0usize; max_order + 1];
    let mut entries = Vec::new();
    // The catalog is sorted by canonical key, which starts with the order.
    for e in &catalog {
        counts[e.order] += 1;
        let name = format!("order{}-{:03}.json", e.order, counts[e.order]);
        io::save_brace(&e.brace(), out.join(&name)).map_err(Failure::from)?;
        entries.push(CatalogIndexEntry {
            file: name,
            order: e.order,
            report: e.report.clone(),
        });
    }
    let index = CatalogIndex {
        schema: CATALOG_SCHEMA,
        max_order,
        entries,
    };
    let index_path = out.join("catalog.json");
    fs::write(&index_path, to_json(&index)).map_err(|e| Failure::parse(format!("{}: {e}", index_path.display())))?;
    let summary: Vec<String> = (1..=max_order).map(|n| format!("order {n}: {}", counts[n])).collect();
    Ok(format!("{}\ntotal: {}\n", summary.join("\n"), catalog.len()))
}

fn family_command(name: &str, action: FamilyAction) -> Outcome {
    let kind: FamilyKind = name.parse().map_err(Failure::from)?;
    if let FamilyAction::Check {
        claim,
        radius,
        cap,
        json,
    } = &action
    {
        return family_check(kind, claim, *radius, *cap, *json);
    }
    match kind {
        FamilyKind::CdInf => family_query::<CdInf>(action),
        FamilyKind::OpTrivDInf => family_query::<OpTrivDInf>(action),
        FamilyKind::Rosita => family_query::<Rosita>(action),
        FamilyKind::Free2 => family_query::<Free2>(action),
    }
}

fn show_orbit<E: Display>(orbit: &Orbit<E>) -> String {
    match orbit {
        Orbit::Finite(v) => {
            let items: Vec<String> = v.iter().map(ToString::to_string).collect();
            format!("finite ({}): {{{}}}\n", v.len(), items.join(", "))
        }
        Orbit::Overflow { cap } => format!("overflow: more than {cap} elements\n"),
    }
}

fn family_query<F: Family + 'static>(action: FamilyAction) -> Outcome {
    match action {
        FamilyAction::Lambda { g, x } => {
            let (g, x) = (F::parse(&g).map_err(Failure::from)?, F::parse(&x).map_err(Failure::from)?);
            let closed = F::lambda(&g, &x);
            let defined = generic_lambda::<F>(&g, &x);
            Ok(format!("{closed}\nagrees with -g + g∘x: {}\n", closed == defined))
        }
        FamilyAction::Theta { a, b, x } => {
            let a = F::parse(&a).map_err(Failure::from)?;
            let b = F::parse(&b).map_err(Failure::from)?;
            let x = F::parse(&x).map_err(Failure::from)?;
            let closed = F::theta(&a, &b, &x);
            let defined = generic_theta::<F>(&a, &b, &x);
            Ok(format!("{closed}\nagrees with a + λ_b(x) - a: {}\n", closed == defined))
        }
        FamilyAction::Orbit { x, theta, cap } => {
            let x = F::parse(&x).map_err(Failure::from)?;
            let orbit = if theta {
                theta_orbit::<F>(&x, cap)
            } else {
                lambda_orbit::<F>(&x, cap)
            };
            Ok(show_orbit(&orbit))
        }
        FamilyAction::Member { set, x, cap } => {
            let set: NamedSet = set.parse().map_err(Failure::from)?;
            let x = F::parse(&x).map_err(Failure::from)?;
            let closed = F::member(set, &x);
            let probes = F::window(PROBE_RADIUS);
            let radius = F::magnitude(&x).max(1);
            let defined = member_by_definition::<F>(set, &x, &probes, cap, radius);
            Ok(format!("{closed}\nagrees with the windowed definition: {}\n", closed == defined))
        }
        FamilyAction::Check { .. } => unreachable!("handled before dispatch"),
    }
}

#[derive(Serialize)]
struct WindowOutput<'a> {
    schema: &'static str,
    #[serde(flatten)]
    report: &'a skewlab_core::families::WindowReport,
}

fn family_check(kind: FamilyKind, claim: &str, radius: u64, cap: usize, json: bool) -> Outcome {
    let id = format!("{}-{}", kind.name(), claim);
    let report = window_check_by_id(&id, radius, cap).map_err(Failure::from)?;
    let text = if json {
        to_json(&WindowOutput {
            schema: WINDOW_SCHEMA,
            report: &report,
        })
    } else {
        let mut s = format!(
            "{}: radius {} cap {}: {} checked, {} in the claimed set, {} counterexamples\n",
            report.claim, report.radius, report.cap, report.checked, report.members, report.counterexamples
        );
        for e in &report.examples {
            s.push_str(&format!("  counterexample: {e}\n"));
        }
        s
    };
    if report.verified() {
        Ok(text)
    } else {
        Err((Some(text), Failure::validation(format!("{id} has counterexamples"))))
    }
}

#[derive(Serialize)]
struct SweepOutput {
    schema: &'static str,
    passed: bool,
    suites: Vec<crate::suites::SuiteResult>,
}

fn sweep(selection: &str, json: bool) -> Outcome {
    let suites = parse_selection(selection).map_err(Failure::parse)?;
    let results = run_suites(&suites);
    let passed = results.iter().all(|r| r.passed());
    let text = if json {
        to_json(&SweepOutput {
            schema: SWEEP_SCHEMA,
            passed,
            suites: results,
        })
    } else {
        results.iter().map(|r| format!("{r}\n")).collect()
    };
    if passed {
        Ok(text)
    } else {
        Err((Some(text), Failure::validation("some criteria failed")))
    }
}
