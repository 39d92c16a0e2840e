//! The `nearalg` command line. Each verb loads its arguments from `.nat`
//! files, calls one library operation and renders a [`Report`].
//!
//! Structure arguments are written `file.nat:Name`, or just `file.nat` when
//! the file holds a single block. Exit codes: `0` when the property holds
//! or the command succeeded, `1` when the property fails (the report then
//! carries a witness or a reason), `2` for unreadable input or bad usage.

use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::andre::{check_andre, check_nvs, check_tfae, quasi_kernel, AndreError, Decomposer, MultiNearRing, NvsFailure};
use crate::enumerate::{enumerate_nearrings, EnumerationTask};
use crate::group::GroupError;
use crate::module::{enumerate_submodules, factorize, product, quotient, MModule, ModuleError, ModuleMorphism};
use crate::monoid::{check_scalar_group, FiniteMonoid, MonoidError};
use crate::nat::{BlockKind, NatBlock, NatDocument, NatError, Structure, ValidationError, Workspace};
use crate::nearring::{classify, NearRingError};
use crate::report::Report;
use crate::subset::ElementSubset;
use crate::verify::{enumerated_multinearring, run_all, run_suite, SuiteOptions};
use crate::ElementIndex;

#[derive(Debug, Parser)]
#[command(name = "nearalg", version, about = "Finite near-rings, monoid modules and Andre modules")]
pub struct Cli {
    /// Print JSON reports; `--json false` prints plain text.
    #[arg(long, global = true, default_value_t = true, action = ArgAction::Set)]
    pub json: bool,
    /// Seed for randomized verification suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Monoid,
    Group,
    Nearring,
    Module,
    ScalarGroup,
    Nvs,
    Andre,
    FaSa,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a structure or test one property of it.
    Check {
        what: CheckKind,
        target: String,
        /// The multi-near-ring for `check andre`.
        over: Option<String>,
    },
    /// The quasi-kernel of a module.
    Quasikernel { module: String },
    /// Enumerate structures on a monoid.
    Enumerate {
        #[command(subcommand)]
        what: EnumerateCmd,
    },
    /// Direct product of modules over one monoid.
    Product {
        #[arg(required = true, num_args = 1..)]
        modules: Vec<String>,
        /// Write the product as a `.nat` file.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Quotient by the submodule generated by the given elements.
    Quotient { module: String, generators: Vec<ElementIndex> },
    /// All submodules of a module.
    Submodules {
        module: String,
        #[arg(long, default_value_t = crate::module::DEFAULT_SUBMODULE_BOUND)]
        bound: usize,
    },
    /// Kernel, image and cokernel of a morphism.
    Factorize { morphism: String },
    /// Write an element as a sum of quasi-kernel elements.
    Decompose {
        module: String,
        element: ElementIndex,
        /// Designated additions; defaults to every near-ring on the monoid.
        #[arg(long)]
        over: Option<String>,
    },
    /// The three subspace conditions on a near-vector space.
    Tfae { module: String },
    /// Run a theorem suite, or `all` of them.
    Verify {
        suite: String,
        /// Extra near-rings and modules to include.
        file: Option<PathBuf>,
    },
    /// Maintain a directory index.
    Catalog {
        #[command(subcommand)]
        what: CatalogCmd,
    },
}

#[derive(Debug, Subcommand)]
pub enum EnumerateCmd {
    /// Every near-ring addition on a monoid.
    Nearrings {
        monoid: String,
        #[arg(long)]
        max: Option<usize>,
        /// Group results into orbits under monoid automorphisms.
        #[arg(long)]
        dedup_auto: bool,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCmd {
    /// Write `index.tsv` for every `.nat` file in a directory.
    Scan { dir: PathBuf },
}

/// What a finished invocation prints and returns.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
    pub report: Option<Report>,
}

/// An input or usage problem: exit code 2.
#[derive(Debug)]
struct InputError(String);

impl From<NatError> for InputError {
    fn from(e: NatError) -> Self {
        InputError(e.to_string())
    }
}

impl From<ModuleError> for InputError {
    fn from(e: ModuleError) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = Result<Report, InputError>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome {
                stdout,
                stderr,
                code,
                report: None,
            };
        }
    };
    run_cli(&cli)
}

pub fn run_cli(cli: &Cli) -> Outcome {
    let start = Instant::now();
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => return finish(cli, input_failure(&command_name(&cli.command), &e.to_string()), 2, start),
    };
    let name = command_name(&cli.command);
    let (report, code) = match pool.install(|| dispatch(cli)) {
        Ok(r) => {
            let code = if r.ok { 0 } else { 1 };
            (r, code)
        }
        Err(InputError(msg)) => (input_failure(&name, &msg), 2),
    };
    finish(cli, report, code, start)
}

fn finish(cli: &Cli, mut report: Report, code: i32, start: Instant) -> Outcome {
    report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let mut stdout = if cli.json { report.to_json() } else { report.to_text() };
    if !stdout.ends_with('\n') {
        stdout.push('\n');
    }
    Outcome {
        stdout,
        stderr: String::new(),
        code,
        report: Some(report),
    }
}

fn input_failure(command: &str, msg: &str) -> Report {
    let mut r = Report::new(command);
    r.detail("error", "input");
    r.fail(msg);
    r
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Check { what, .. } => format!(
            "check {}",
            what.to_possible_value().expect("no skipped variants").get_name()
        ),
        Command::Quasikernel { .. } => "quasikernel".into(),
        Command::Enumerate { .. } => "enumerate nearrings".into(),
        Command::Product { .. } => "product".into(),
        Command::Quotient { .. } => "quotient".into(),
        Command::Submodules { .. } => "submodules".into(),
        Command::Factorize { .. } => "factorize".into(),
        Command::Decompose { .. } => "decompose".into(),
        Command::Tfae { .. } => "tfae".into(),
        Command::Verify { suite, .. } => format!("verify {suite}"),
        Command::Catalog { .. } => "catalog scan".into(),
    }
}

fn dispatch(cli: &Cli) -> CmdResult {
    let mut ws = Workspace::new();
    let name = command_name(&cli.command);
    match &cli.command {
        Command::Check { what, target, over } => check(&mut ws, &name, *what, target, over.as_deref()),
        Command::Quasikernel { module } => {
            let v = load_module(&mut ws, module)?;
            let q = quasi_kernel(&v);
            let mut r = Report::new(name);
            r.detail("order", v.order());
            r.detail("quasi_kernel", q.qv.to_vec());
            r.detail("size", q.qv.len());
            r.detail("generates", v.group_closure(&q.qv).len() == v.order());
            Ok(r)
        }
        Command::Enumerate {
            what: EnumerateCmd::Nearrings { monoid, max, dedup_auto, emit },
        } => enumerate(&mut ws, &name, monoid, *max, *dedup_auto, emit.as_deref()),
        Command::Product { modules, emit } => product_cmd(&mut ws, &name, modules, emit.as_deref()),
        Command::Quotient { module, generators } => {
            let v = load_module(&mut ws, module)?;
            check_elements(&v, generators)?;
            let w = v.generated_submodule(&ElementSubset::from_elements(v.order(), generators.iter().copied()));
            let q = quotient(&v, &w)?;
            let mut r = Report::new(name);
            r.detail("submodule", w.carrier().to_vec());
            r.detail("order", q.module.order());
            r.detail("representatives", &q.representatives);
            r.detail("projection", q.projection.map());
            Ok(r)
        }
        Command::Submodules { module, bound } => {
            let v = load_module(&mut ws, module)?;
            let subs = enumerate_submodules(&v, *bound)?;
            let mut r = Report::new(name);
            r.detail("count", subs.len());
            r.detail("submodules", subs.iter().map(|w| w.carrier().to_vec()).collect::<Vec<_>>());
            Ok(r)
        }
        Command::Factorize { morphism } => {
            let f = load_morphism(&mut ws, morphism)?;
            let fac = factorize(&f)?;
            let mut r = Report::new(name);
            r.detail("kernel", fac.kernel.carrier().to_vec());
            r.detail("image", fac.image.carrier().to_vec());
            r.detail("cokernel_order", fac.cokernel.module.order());
            r.detail("cokernel_representatives", &fac.cokernel.representatives);
            let (d, k, i) = (f.dom().order(), fac.kernel.len(), fac.image.len());
            r.detail("orders", json!({"dom": d, "kernel": k, "image": i}));
            if d != k * i {
                r.fail(format!("|dom| = {d} but |ker|·|im| = {}", k * i));
            }
            Ok(r)
        }
        Command::Decompose { module, element, over } => decompose(&mut ws, &name, module, *element, over.as_deref()),
        Command::Tfae { module } => {
            let v = load_module(&mut ws, module)?;
            let mut r = Report::new(name);
            match check_tfae(&v) {
                Ok(t) => {
                    r.detail("submodules_generated", t.submodules_generated);
                    r.detail("orbit_form", t.orbit_form);
                    r.detail("direct_form", t.direct_form);
                    r.detail("closures_agree", t.closures_agree);
                    r.detail("submodules_checked", t.submodules_checked);
                    r.detail("elements_checked", t.elements_checked);
                    if !(t.submodules_generated && t.orbit_form && t.direct_form && t.closures_agree) {
                        r.fail("the conditions disagree");
                    }
                }
                Err(AndreError::Module(e)) => return Err(e.into()),
                Err(e) => r.fail(e.to_string()),
            }
            Ok(r)
        }
        Command::Verify { suite, file } => verify(&mut ws, &name, suite, file.as_deref(), cli.seed),
        Command::Catalog { what: CatalogCmd::Scan { dir } } => {
            let rows = crate::catalog::scan(dir)?;
            let mut r = Report::new(name);
            r.detail("index", dir.join(crate::catalog::INDEX_FILE).display().to_string());
            r.detail("rows", rows.len());
            r.detail("entries", &rows);
            Ok(r)
        }
    }
}

fn resolve(ws: &mut Workspace, spec: &str) -> Result<Structure, InputError> {
    Ok(ws.resolve(spec)?)
}

fn wrong_kind(spec: &str, s: &Structure, want: &str) -> InputError {
    InputError(format!("{spec} is a {}, expected {want}", s.kind()))
}

/// A module, or a near-ring regarded as a module over its own monoid.
fn load_module(ws: &mut Workspace, spec: &str) -> Result<MModule, InputError> {
    match resolve(ws, spec)? {
        Structure::Module(v) => Ok(v),
        Structure::NearRing(n) => Ok(n.as_module()),
        s => Err(wrong_kind(spec, &s, "a module")),
    }
}

/// The monoid of any structure that has one.
fn load_monoid(ws: &mut Workspace, spec: &str) -> Result<Arc<FiniteMonoid>, InputError> {
    match resolve(ws, spec)? {
        Structure::Monoid(m) => Ok(m),
        Structure::NearRing(n) => Ok(Arc::clone(n.monoid())),
        Structure::Module(v) => Ok(Arc::clone(v.monoid())),
        Structure::MultiNearRing(r) => Ok(Arc::clone(r.monoid())),
        s => Err(wrong_kind(spec, &s, "a monoid")),
    }
}

fn load_multinearring(ws: &mut Workspace, spec: &str) -> Result<MultiNearRing, InputError> {
    match resolve(ws, spec)? {
        Structure::MultiNearRing(r) => Ok(r),
        Structure::NearRing(n) => Ok(MultiNearRing::single(n)),
        s => Err(wrong_kind(spec, &s, "a multi-near-ring")),
    }
}

fn load_morphism(ws: &mut Workspace, spec: &str) -> Result<ModuleMorphism, InputError> {
    match resolve(ws, spec)? {
        Structure::Morphism(f) => Ok(f),
        s => Err(wrong_kind(spec, &s, "a morphism")),
    }
}

fn check_elements(v: &MModule, xs: &[ElementIndex]) -> Result<(), InputError> {
    match xs.iter().find(|&&x| x >= v.order()) {
        Some(x) => Err(InputError(format!("element {x} out of range for order {}", v.order()))),
        None => Ok(()),
    }
}

/// Element tuple carried by a validation failure, if any.
fn validation_witness(e: &ValidationError) -> Vec<ElementIndex> {
    match e {
        ValidationError::Monoid(MonoidError::NotAssociative(a, b, c))
        | ValidationError::Group(GroupError::NotAssociative(a, b, c))
        | ValidationError::Module(ModuleError::NotAction(a, b, c))
        | ValidationError::Module(ModuleError::NotEndomorphism(a, b, c))
        | ValidationError::NearRing(NearRingError::NotLeftDistributive(a, b, c)) => vec![*a, *b, *c],
        ValidationError::Group(GroupError::NotCommutative(a, b))
        | ValidationError::Module(ModuleError::NotAdditive(a, b))
        | ValidationError::Module(ModuleError::NotEquivariant(a, b))
        | ValidationError::NearRing(NearRingError::NotMultiplicativeAutomorphism(a, b)) => vec![*a, *b],
        ValidationError::Group(GroupError::NoInverse(a)) | ValidationError::Module(ModuleError::NotUnital(a)) => {
            vec![*a]
        }
        ValidationError::NearRing(NearRingError::NotAbelianGroup(g)) => {
            validation_witness(&ValidationError::Group(g.clone()))
        }
        ValidationError::NearRing(NearRingError::NotMonoid(m)) => {
            validation_witness(&ValidationError::Monoid(m.clone()))
        }
        ValidationError::Andre(AndreError::DuplicateAddition(i, j)) => vec![*i, *j],
        _ => Vec::new(),
    }
}

fn validation_tag(e: &ValidationError) -> &'static str {
    match e {
        ValidationError::Monoid(_) => "monoid",
        ValidationError::Group(_) => "group",
        ValidationError::NearRing(_) => "nearring",
        ValidationError::Module(_) => "module",
        ValidationError::Andre(_) => "multinearring",
        ValidationError::Shape(_) => "shape",
    }
}

fn check(ws: &mut Workspace, name: &str, what: CheckKind, target: &str, over: Option<&str>) -> CmdResult {
    let mut r = Report::new(name);
    if over.is_some() && what != CheckKind::Andre {
        return Err(InputError(format!("{name} takes one structure")));
    }
    let validate_kind = match what {
        CheckKind::Monoid => Some(BlockKind::Monoid),
        CheckKind::Group => Some(BlockKind::Group),
        CheckKind::Nearring => Some(BlockKind::NearRing),
        CheckKind::Module => Some(BlockKind::Module),
        _ => None,
    };
    if let Some(kind) = validate_kind {
        match ws.check(target)? {
            Ok(s) if s.kind() == kind => {
                r.detail("kind", kind.keyword());
                r.detail("order", structure_order(&s));
            }
            Ok(s) => return Err(wrong_kind(target, &s, kind.keyword())),
            Err(e) => {
                r.witness(validation_tag(&e), validation_witness(&e));
                r.fail(e.to_string());
            }
        }
        return Ok(r);
    }
    match what {
        CheckKind::ScalarGroup => {
            let m = load_monoid(ws, target)?;
            let s = check_scalar_group(&m);
            r.detail("zero", s.zero);
            r.detail("minus_one", s.minus_one);
            r.detail("eta_solutions", &s.eta_solutions);
            if let Some(f) = &s.failure_witness {
                let failure = NvsFailure::MonoidNotScalarGroup(f.clone());
                match f.element() {
                    Some(e) => r.witness(format!("[{}] {}", m.label(e), f.tag()), [e]),
                    None => r.witness(f.tag(), []),
                }
                r.fail(failure.describe(&m));
            }
        }
        CheckKind::Nvs => {
            let v = load_module(ws, target)?;
            let n = check_nvs(&v);
            r.detail("scalar_group", n.scalar_group.is_scalar_group);
            r.detail("fa", n.action.fa);
            r.detail("sa", n.action.sa.holds());
            r.detail("quasi_kernel_generates", n.qv_generates);
            if let Some(f) = &n.failure {
                let elements: Vec<ElementIndex> = match f {
                    NvsFailure::MonoidNotScalarGroup(g) => g.element().into_iter().collect(),
                    NvsFailure::FreeAction(a, b, x) => vec![*a, *b, *x],
                    NvsFailure::ScalarAction(x) => vec![*x],
                    NvsFailure::QuasiKernelDoesNotGenerate => Vec::new(),
                };
                r.witness(f.tag(), elements);
                r.fail(f.describe(v.monoid()));
            }
        }
        CheckKind::Andre => {
            let v = load_module(ws, target)?;
            let spec = over.ok_or_else(|| InputError("check andre needs a multi-near-ring".into()))?;
            let rr = load_multinearring(ws, spec)?;
            let a = check_andre(&v, &rr).map_err(|e| InputError(e.to_string()))?;
            r.detail("qstar", a.qstar.to_vec());
            r.detail("qstar_size", a.qstar.len());
            r.detail("nearring_witness", &a.nearring_witness);
            if let Some(x) = a.qk2_failure {
                r.witness("qk2-failure", [x]);
                r.fail(format!("QK2 fails at element {x} for the maximal QK1 set"));
            }
        }
        CheckKind::FaSa => match resolve(ws, target)? {
            Structure::NearRing(n) => {
                let c = classify(&n);
                r.detail("fa", c.fa);
                r.detail("sa", c.sa);
                r.detail("minus_one", c.minus_one);
                if let Some((a, b, x)) = c.witnesses.fa {
                    r.witness("fa", [a, b, x]);
                }
                if let Some(x) = c.witnesses.sa {
                    r.witness("sa", [x]);
                }
                if !(c.fa && c.sa) {
                    r.fail(format!("fa = {}, sa = {}", c.fa, c.sa));
                }
            }
            Structure::Module(v) => {
                let p = v.check_action_properties();
                r.detail("fa", p.fa);
                r.detail("sa", format!("{:?}", p.sa));
                if let Some((a, b, x)) = p.fa_witness {
                    r.witness("fa", [a, b, x]);
                }
                if let crate::module::ScalarAction::Fails(x) = p.sa {
                    r.witness("sa", [x]);
                }
                if !(p.fa && p.sa.holds()) {
                    r.fail(format!("fa = {}, sa = {:?}", p.fa, p.sa));
                }
            }
            s => return Err(wrong_kind(target, &s, "a near-ring or module")),
        },
        _ => unreachable!("validation kinds handled above"),
    }
    Ok(r)
}

fn structure_order(s: &Structure) -> usize {
    match s {
        Structure::Monoid(m) => m.order(),
        Structure::Group(g) => g.order(),
        Structure::NearRing(n) => n.order(),
        Structure::Module(v) => v.order(),
        Structure::MultiNearRing(r) => r.monoid().order(),
        Structure::Morphism(f) => f.dom().order(),
    }
}

fn write_document(path: &Path, doc: &NatDocument) -> Result<(), InputError> {
    std::fs::write(path, doc.emit()).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn enumerate(
    ws: &mut Workspace,
    name: &str,
    monoid: &str,
    max: Option<usize>,
    dedup: bool,
    emit: Option<&Path>,
) -> CmdResult {
    let m = load_monoid(ws, monoid)?;
    let task = EnumerationTask {
        monoid: Arc::clone(&m),
        max_results: max,
        dedup_by_automorphism: dedup,
    };
    let result = enumerate_nearrings(&task).map_err(|e| InputError(e.to_string()))?;
    let n = m.order();
    let mut r = Report::new(name);
    r.detail("count", result.additions.len());
    r.detail("complete", result.complete);
    r.detail(
        "additions",
        result
            .additions
            .iter()
            .map(|t| t.chunks(n).map(<[_]>::to_vec).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    );
    if let Some(orbits) = &result.orbits {
        r.detail(
            "orbits",
            orbits
                .iter()
                .map(|o| json!({"representative": o.representative, "members": o.members}))
                .collect::<Vec<_>>(),
        );
    }
    if let Some(path) = emit {
        let mut doc = NatDocument::default();
        doc.push(NatBlock::from_monoid("M", &m))?;
        let nearrings = result.nearrings();
        for (i, nr) in nearrings.iter().enumerate() {
            doc.push(NatBlock::from_nearring(&format!("N{i}"), "M", nr))?;
        }
        if !nearrings.is_empty() {
            let all = MultiNearRing::new(Arc::clone(&m), nearrings).map_err(|e| InputError(e.to_string()))?;
            doc.push(NatBlock::from_multinearring("R", "M", &all))?;
        }
        write_document(path, &doc)?;
        r.detail("emitted", path.display().to_string());
    }
    Ok(r)
}

fn product_cmd(ws: &mut Workspace, name: &str, specs: &[String], emit: Option<&Path>) -> CmdResult {
    let factors = specs
        .iter()
        .map(|s| load_module(ws, s))
        .collect::<Result<Vec<_>, _>>()?;
    let m = Arc::clone(factors[0].monoid());
    let p = product(&m, &factors)?;
    let mut r = Report::new(name);
    r.detail("order", p.module.order());
    r.detail("factor_orders", factors.iter().map(MModule::order).collect::<Vec<_>>());
    if let Some(path) = emit {
        let mut doc = NatDocument::default();
        doc.push(NatBlock::from_monoid("M", &m))?;
        doc.push(NatBlock::from_module("P", "M", &p.module))?;
        write_document(path, &doc)?;
        r.detail("emitted", path.display().to_string());
    }
    Ok(r)
}

fn decompose(ws: &mut Workspace, name: &str, module: &str, x: ElementIndex, over: Option<&str>) -> CmdResult {
    let v = load_module(ws, module)?;
    check_elements(&v, &[x])?;
    let rr = match over {
        Some(spec) => load_multinearring(ws, spec)?,
        None => enumerated_multinearring(v.monoid()),
    };
    let mut r = Report::new(name);
    r.detail("designated", rr.len());
    let cert = match Decomposer::new(&v, &rr).and_then(|d| d.decompose(x)) {
        Ok(c) => c,
        Err(AndreError::MixedMonoids) => return Err(InputError(AndreError::MixedMonoids.to_string())),
        Err(e) => {
            if let AndreError::NoPresentation(y) = e {
                r.witness("no-presentation", [y]);
            }
            r.fail(e.to_string());
            return Ok(r);
        }
    };
    r.detail("target", cert.target);
    r.detail("parts", &cert.parts);
    r.detail("m_v", cert.m_v);
    r.detail(
        "trail",
        cert.trail
            .iter()
            .map(|s| {
                json!({
                    "target": s.target, "q1": s.q1, "q2": s.q2, "alpha": s.alpha, "beta": s.beta,
                    "coefficient": s.coefficient, "r": s.r, "beta_prime": s.beta_prime,
                    "v_prime": s.v_prime, "v_double_prime": s.v_double_prime,
                })
            })
            .collect::<Vec<_>>(),
    );
    if let Err(m) = cert.validate(&v) {
        r.fail(format!("certificate does not re-validate: {m}"));
    }
    Ok(r)
}

fn verify(ws: &mut Workspace, name: &str, suite: &str, file: Option<&Path>, seed: u64) -> CmdResult {
    let mut opts = SuiteOptions {
        seed,
        ..SuiteOptions::default()
    };
    if let Some(path) = file {
        let loaded = ws.load_file(path)?;
        for (_, s) in &loaded.structures {
            match s {
                Structure::NearRing(n) => opts.extra_nearrings.push(n.clone()),
                Structure::Module(v) => opts.extra_modules.push(v.clone()),
                _ => {}
            }
        }
    }
    if suite != "all" {
        let report = run_suite(suite, &opts).map_err(|e| InputError(e.to_string()))?;
        return Ok(report.to_report(name));
    }
    let reports = run_all(&opts);
    let mut r = Report::new(name);
    for s in &reports {
        for v in s.violations.iter().chain(&s.refuted) {
            r.witness(format!("{}: {}: {}", s.name, v.subject, v.message), v.elements.iter().copied());
        }
    }
    r.detail(
        "suites",
        reports
            .iter()
            .map(|s| {
                json!({
                    "name": s.name, "passed": s.passed(), "checked": s.checked,
                    "violations": s.violations, "refuted": s.refuted, "notes": s.notes,
                    "elapsed_ms": s.elapsed_ms,
                })
            })
            .collect::<Vec<_>>(),
    );
    let failed: Vec<&str> = reports.iter().filter(|s| !s.passed()).map(|s| s.name.as_str()).collect();
    if !failed.is_empty() {
        r.fail(format!("suites with failures: {}", failed.join(", ")));
    }
    Ok(r)
}
