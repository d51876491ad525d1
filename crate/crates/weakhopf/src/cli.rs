//! Command-line front end. [`run`] is pure apart from reading input files,
//! so tests can drive it without spawning a process.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use weakhopf_core::category::{
    check_braiding, check_hexagons, check_module, check_truncated_tensor, check_unitors, HModule, ModuleCategory,
};
use weakhopf_core::qt::{
    canonical_r, check_drinfeld_element, check_quasitriangular, check_weak_cocycle, derived_r_identities,
    twisted_algebra, QTStructure,
};
use weakhopf_core::quantization::{quantize, verify_quantization};
use weakhopf_core::report::expect_eq;
use weakhopf_core::transmutation::{centralizer, check_morphism, self_transmute, transmute, verify_braided_hopf};
use weakhopf_core::twisting::{check_twist_element_identities, twisted_r, verify_isomorphism};
use weakhopf_core::weak_hopf::{check_counital_maps, check_quantum_groupoid, check_weak_bialgebra, solve_antipode};
use weakhopf_core::zoo::{all_fixtures, fixture_by_name, Fixture};
use weakhopf_core::{Error, QuantumGroupoid, VerificationReport, WeakBialgebra};

use crate::format::{write_document, write_documents, write_presentation, CocycleDoc, Document, QtDoc};
use crate::library::{Library, LoadError};
use crate::report::RunReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(
    name = "weakhopf",
    version,
    about = "Exact verification of weak Hopf algebras and their braided Hopf algebras"
)]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = ReportFormat::Text, global = true)]
    pub format: ReportFormat,
    /// Stop after the first failing suite.
    #[arg(long, global = true)]
    pub fail_fast: bool,
    /// Also check both hexagon identities on regular modules (slow).
    #[arg(long, global = true)]
    pub with_hexagons: bool,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the axiom suites for every object in the input files.
    Check {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Transmute along a morphism (or the identity) and verify the result.
    Transmute {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        qt: Option<String>,
        #[arg(long)]
        morphism: Option<String>,
    },
    /// Quantize a cocommutative quantum groupoid by a cocycle and verify the result.
    Quantize {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        cocycle: Option<String>,
    },
    /// Twist an algebra and its quasitriangular structure by a cocycle.
    Twist {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        qt: Option<String>,
        #[arg(long)]
        cocycle: Option<String>,
    },
    /// Compare the quantized and the twisted-then-transmuted presentations.
    VerifyIso {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        cocycle: Option<String>,
        /// A quasitriangular structure to validate against the canonical one.
        #[arg(long)]
        qt: Option<String>,
    },
    /// List or emit the builtin fixtures.
    Zoo {
        #[command(subcommand)]
        action: ZooAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum ZooAction {
    List,
    Emit { name: String },
}

/// What a run produced: the text for the report destination, diagnostics,
/// and the process exit code (0 pass, 1 failed check, 2 bad input or unmet
/// precondition).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
    pub diagnostics: String,
}

enum Failure {
    Load(LoadError),
    Core(Error),
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        Failure::Load(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn core_exit_code(e: &Error) -> i32 {
    match e {
        Error::TwistAxiomFailure(_)
        | Error::ClosureViolation { .. }
        | Error::CarrierMismatch
        | Error::UNotInvertible => 1,
        _ => 2,
    }
}

pub fn run(cli: &Cli) -> Outcome {
    if let Command::Zoo { action } = &cli.command {
        return zoo(action);
    }
    let mut report = RunReport::new(command_name(&cli.command), cli.fail_fast);
    let result = match &cli.command {
        Command::Check { files } => check(cli, files, &mut report),
        Command::Transmute { files, qt, morphism } => {
            run_transmute(files, qt.as_deref(), morphism.as_deref(), &mut report)
        }
        Command::Quantize { files, cocycle } => run_quantize(files, cocycle.as_deref(), &mut report),
        Command::Twist { files, qt, cocycle } => run_twist(files, qt.as_deref(), cocycle.as_deref(), &mut report),
        Command::VerifyIso { files, cocycle, qt } => {
            run_verify_iso(files, cocycle.as_deref(), qt.as_deref(), &mut report)
        }
        Command::Zoo { .. } => unreachable!("handled above"),
    };
    let render = |r: &RunReport| match cli.format {
        ReportFormat::Text => r.render_text(),
        ReportFormat::Structured => r.render_structured(),
    };
    match result {
        Ok(()) => {
            Outcome { code: if report.passes() { 0 } else { 1 }, output: render(&report), diagnostics: String::new() }
        }
        Err(Failure::Load(e)) => Outcome { code: 2, output: String::new(), diagnostics: format!("error: {e}\n") },
        Err(Failure::Core(e)) => {
            let code = core_exit_code(&e);
            let output = if code == 1 { render(&report) } else { String::new() };
            Outcome { code, output, diagnostics: format!("error: {e}\n") }
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check { .. } => "check",
        Command::Transmute { .. } => "transmute",
        Command::Quantize { .. } => "quantize",
        Command::Twist { .. } => "twist",
        Command::VerifyIso { .. } => "verify-iso",
        Command::Zoo { .. } => "zoo",
    }
}

/// The documents of a builtin fixture: the algebra, `<name>.R` and `<name>.F`.
pub fn fixture_documents(fx: &Fixture) -> Vec<Document> {
    let h = &fx.algebra;
    let n = h.dim();
    vec![
        Document::QuantumGroupoid(h.clone()),
        Document::QtStructure(QtDoc {
            name: format!("{}.R", fx.name),
            algebra: h.name().into(),
            dim: n,
            r: fx.qt.r().to_vec(),
            r_inv: Some(fx.qt.r_inv().to_vec()),
        }),
        Document::Cocycle(CocycleDoc {
            name: format!("{}.F", fx.name),
            algebra: h.name().into(),
            dim: n,
            f: fx.cocycle.f().to_vec(),
            f_inv: Some(fx.cocycle.f_inv().to_vec()),
        }),
    ]
}

fn zoo(action: &ZooAction) -> Outcome {
    match action {
        ZooAction::List => {
            let output = all_fixtures().iter().map(|fx| format!("{}\t{}\n", fx.name, fx.summary)).collect();
            Outcome { code: 0, output, diagnostics: String::new() }
        }
        ZooAction::Emit { name } => match fixture_by_name(name) {
            Some(fx) => {
                Outcome { code: 0, output: write_documents(&fixture_documents(&fx)), diagnostics: String::new() }
            }
            None => Outcome {
                code: 2,
                output: String::new(),
                diagnostics: format!("error: no builtin fixture named `{name}`\n"),
            },
        },
    }
}

fn load(files: &[PathBuf], report: &mut RunReport) -> Result<Library, Failure> {
    let lib = Library::load(files)?;
    report.objects = lib.names();
    Ok(lib)
}

/// The stored antipode against the one solved from the convolution equations.
fn antipode_oracle(h: &QuantumGroupoid) -> VerificationReport {
    let mut report = VerificationReport::new("antipode-solve");
    match solve_antipode(h.base()) {
        Ok(s) => {
            report.check("solved-equals-stored", || {
                for j in 0..h.dim() {
                    expect_eq(&[j], s.column(j), h.antipode().column(j))?;
                }
                Ok(())
            });
        }
        Err(_) => report.record("solved-equals-stored", false),
    }
    report
}

fn bialgebra_suites(name: &str, b: &WeakBialgebra, report: &mut RunReport) -> bool {
    report.run(name, || check_weak_bialgebra(b)) && report.run(name, || check_counital_maps(b))
}

fn category_suites(subject: &str, ctx: &ModuleCategory, m: &HModule, hexagons: bool, report: &mut RunReport) {
    report.run(subject, || check_truncated_tensor(ctx, m, m));
    report.run(subject, || check_unitors(ctx, m));
    report.run(subject, || check_braiding(ctx, m, m));
    if hexagons {
        report.run(subject, || check_hexagons(ctx, m, m, m));
    }
}

fn check(cli: &Cli, files: &[PathBuf], report: &mut RunReport) -> Result<(), Failure> {
    let lib = load(files, report)?;
    for doc in lib.documents() {
        if report.stopped() {
            break;
        }
        let name = doc.name();
        match doc {
            Document::WeakBialgebra(b) => {
                bialgebra_suites(name, b, report);
            }
            Document::QuantumGroupoid(h) => {
                if bialgebra_suites(name, h, report) {
                    report.run(name, || check_quantum_groupoid(h));
                    report.run(name, || antipode_oracle(h));
                }
            }
            Document::QtStructure(q) => {
                let (h, qt) = lib.resolve_qt(q)?;
                if report.run(name, || check_quasitriangular(&h, &qt)) {
                    report.run(name, || derived_r_identities(&h, &qt));
                    report.run(name, || check_drinfeld_element(&h, &qt));
                    let ctx = ModuleCategory::psi(&h, &qt);
                    category_suites(name, &ctx, &HModule::regular(&h), cli.with_hexagons, report);
                }
            }
            Document::Cocycle(c) => {
                let (h, wc) = lib.resolve_cocycle(c)?;
                if report.run(name, || check_weak_cocycle(&h, &wc)) {
                    report.run(name, || check_twist_element_identities(&h, &wc));
                    if h.is_cocommutative() {
                        let ctx = ModuleCategory::phi(&h, &wc)?;
                        let adj = HModule::adjoint(&h, &centralizer(&h))?;
                        category_suites(name, &ctx, &adj, cli.with_hexagons, report);
                    }
                }
            }
            Document::Morphism(m) => {
                let f = lib.resolve_morphism(m)?;
                report.run(name, || check_morphism(&f));
            }
            Document::Module(m) => {
                let h = lib.resolve_module(m)?;
                report.run(name, || check_module(&h, m));
            }
        }
    }
    Ok(())
}

fn run_transmute(
    files: &[PathBuf],
    qt: Option<&str>,
    morphism: Option<&str>,
    report: &mut RunReport,
) -> Result<(), Failure> {
    let lib = load(files, report)?;
    let q = lib.select_qt(qt)?;
    let (h, r) = lib.resolve_qt(q)?;
    let presentation = match lib.select_morphism(morphism)? {
        Some(m) => {
            let f = lib.resolve_morphism(m)?;
            if f.source != h {
                return Err(Error::PreconditionUnmet(format!(
                    "morphism `{}` does not start at `{}`",
                    m.name,
                    h.name()
                ))
                .into());
            }
            if !report.run(&m.name, || check_morphism(&f)) {
                return Ok(());
            }
            transmute(&h, &r, &f)?
        }
        None => self_transmute(&h, &r)?,
    };
    let ctx = ModuleCategory::psi(&h, &r);
    report.run("transmuted", || verify_braided_hopf(&presentation, &ctx));
    report.emit("transmuted", write_presentation(&presentation));
    Ok(())
}

fn run_quantize(files: &[PathBuf], cocycle: Option<&str>, report: &mut RunReport) -> Result<(), Failure> {
    let lib = load(files, report)?;
    let c = lib.select_cocycle(cocycle)?;
    let (h, wc) = lib.resolve_cocycle(c)?;
    let presentation = quantize(&h, &wc)?;
    report.run("quantized", || verify_quantization(&presentation, &h, &wc));
    report.emit("quantized", write_presentation(&presentation));
    Ok(())
}

fn run_twist(
    files: &[PathBuf],
    qt: Option<&str>,
    cocycle: Option<&str>,
    report: &mut RunReport,
) -> Result<(), Failure> {
    let lib = load(files, report)?;
    let q = lib.select_qt(qt)?;
    let c = lib.select_cocycle(cocycle)?;
    let (h, r) = lib.resolve_qt(q)?;
    let (h2, wc) = lib.resolve_cocycle(c)?;
    if h.name() != h2.name() {
        return Err(
            Error::PreconditionUnmet(format!("`{}` and `{}` live on different algebras", q.name, c.name)).into()
        );
    }
    let mut tilde = twisted_algebra(&h, &wc)?;
    let tilde_name = format!("{}-twisted", h.name());
    tilde.set_name(tilde_name.clone());
    let r_tilde = twisted_r(&h, &r, &wc);
    if bialgebra_suites(&tilde_name, &tilde, report) {
        report.run(&tilde_name, || check_quantum_groupoid(&tilde));
        let r_name = format!("{}-twisted", q.name);
        report.run(&r_name, || check_quasitriangular(&tilde, &r_tilde));
        report.run(&r_name, || derived_r_identities(&tilde, &r_tilde));
    }
    report.run(&c.name, || check_twist_element_identities(&h, &wc));
    let docs =
        [Document::QuantumGroupoid(tilde.clone()), qt_document(&format!("{}-twisted", q.name), &tilde, &r_tilde)];
    for d in &docs {
        report.emit(d.name().to_string(), write_document(d));
    }
    Ok(())
}

fn qt_document(name: &str, h: &QuantumGroupoid, qt: &QTStructure) -> Document {
    Document::QtStructure(QtDoc {
        name: name.into(),
        algebra: h.name().into(),
        dim: h.dim(),
        r: qt.r().to_vec(),
        r_inv: Some(qt.r_inv().to_vec()),
    })
}

fn run_verify_iso(
    files: &[PathBuf],
    cocycle: Option<&str>,
    qt: Option<&str>,
    report: &mut RunReport,
) -> Result<(), Failure> {
    let lib = load(files, report)?;
    let c = lib.select_cocycle(cocycle)?;
    let (h, wc) = lib.resolve_cocycle(c)?;
    let r = match (qt, lib.qt_docs().count()) {
        (None, 0) => {
            canonical_r(&h).map_err(|_| Error::PreconditionUnmet("the algebra is not cocommutative".into()))?
        }
        _ => {
            let q = lib.select_qt(qt)?;
            let (hq, r) = lib.resolve_qt(q)?;
            if hq.name() != h.name() {
                return Err(Error::PreconditionUnmet(format!(
                    "`{}` and `{}` live on different algebras",
                    q.name, c.name
                ))
                .into());
            }
            r
        }
    };
    let outcome = verify_isomorphism(&h, &r, &wc)?;
    report.run(&c.name, || outcome.report.clone());
    report.emit("quantized", write_presentation(&outcome.quantized));
    report.emit("transmuted", write_presentation(&outcome.transmuted));
    report.presentations_equal =
        Some(write_presentation(&outcome.quantized) == write_presentation(&outcome.transmuted));
    Ok(())
}
