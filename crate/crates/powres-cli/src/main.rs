//! Command-line interface over the library: build the lattice-point
//! complexes, verify resolution support, print bound tables, compute
//! multigraded Betti numbers, and work with the extremal ideals.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 bad input,
//! 3 computation infeasible within the configured budgets.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use powres::bounds::{self, TableFormat};
use powres::extremal;
use powres::field::FieldSpec;
use powres::homology::HomologyError;
use powres::monomial::{Monomial, MonomialError, MonomialIdeal, VariableSet};
use powres::power_complex::{self, LriComplex, LrqComplex, PowerComplexError, RepresentativePolicy};
use powres::resolution::{self, ResolutionError};
use powres::simplicial::SimplicialError;

#[derive(Parser)]
#[command(
    name = "powres",
    version,
    about = "Simplicial support complexes and exact Betti numbers for powers of square-free monomial ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the face-count bound table for the parameters (r, q) alone
    Bounds {
        /// Power of the ideal
        #[arg(long, short = 'r')]
        power: u64,
        /// Number of generators
        #[arg(long, short = 'q')]
        gens: u64,
        /// Largest homological degree t to tabulate (default 2)
        #[arg(long)]
        t_max: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
    },
    /// Print the bound table for a concrete ideal, optionally with the
    /// true Betti numbers of its power
    Table {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long, short = 'r')]
        power: u64,
        #[arg(long)]
        t_max: Option<u64>,
        /// Add a column with the true multigraded Betti totals
        #[arg(long)]
        betti: bool,
        /// Field for the Betti column: "rational" or a prime (e.g. 32003)
        #[arg(long)]
        field: Option<String>,
        #[arg(long, value_enum, default_value_t = Policy::Balanced)]
        policy: Policy,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
    },
    /// Build the complex on all degree-r lattice points for q generators
    BuildLrq {
        #[arg(long, short = 'r')]
        power: u64,
        #[arg(long, short = 'q')]
        gens: u64,
    },
    /// Build the trimmed complex for a concrete ideal: group lattice points
    /// by equal power products, keep one representative per class, drop
    /// points whose product another generator divides
    BuildLri {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long, short = 'r')]
        power: u64,
        #[arg(long, value_enum, default_value_t = Policy::Balanced)]
        policy: Policy,
    },
    /// Print the full simplex on the minimal generators of the r-th power
    Taylor {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long, short = 'r')]
        power: u64,
    },
    /// Verify that the labeled complex supports a free resolution of the
    /// r-th power (exit 0 when it does)
    Verify {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long, short = 'r')]
        power: u64,
        /// Which complex to check
        #[arg(long, value_enum, default_value_t = WhichComplex::Lri)]
        complex: WhichComplex,
        /// Which support criterion to run
        #[arg(long, value_enum, default_value_t = Criterion::Both)]
        criterion: Criterion,
        #[arg(long)]
        field: Option<String>,
        #[arg(long, value_enum, default_value_t = Policy::Balanced)]
        policy: Policy,
        /// Face budget for homology computations
        #[arg(long, default_value_t = resolution::DEFAULT_MAX_FACES)]
        max_faces: usize,
    },
    /// Exact multigraded Betti numbers of the r-th power
    Betti {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long, short = 'r')]
        power: u64,
        #[arg(long)]
        field: Option<String>,
        /// Computation route: independent strand homology, Gaussian
        /// minimization of the homogenized complex, or both (compared)
        #[arg(long, value_enum, default_value_t = Route::Strand)]
        route: Route,
        #[arg(long, value_enum, default_value_t = Policy::Balanced)]
        policy: Policy,
        #[arg(long, default_value_t = resolution::DEFAULT_MAX_FACES)]
        max_faces: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the extremal ideal for q generators (variables indexed by
    /// nonempty subsets), optionally with Betti numbers of its r-th power
    Extremal {
        #[arg(long, short = 'q')]
        gens: u64,
        /// Also compute the Betti table of this power
        #[arg(long, short = 'r')]
        power: Option<u64>,
        #[arg(long)]
        field: Option<String>,
    },
    /// Check that the extremal ideal's Betti numbers bound the given
    /// ideal's, degree by degree (exit 0 when they do)
    VerifyMaximality {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long, short = 'r')]
        power: u64,
        #[arg(long)]
        field: Option<String>,
    },
    /// Run the built-in acceptance checks (exit 0 when all pass)
    Selftest,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct IdealArgs {
    /// Path to an ideal JSON file: {"vars": [...], "generators": [...]}
    #[arg(long)]
    ideal_file: Option<PathBuf>,
    /// Ideal JSON given inline
    #[arg(long)]
    ideal_json: Option<String>,
    /// A named ideal: pathN, cycleN, starN, completeN, four-cycle, nine-gen
    #[arg(long)]
    corpus: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Markdown,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Policy {
    Balanced,
    First,
    Last,
}

impl Policy {
    fn to_lib(self) -> RepresentativePolicy {
        match self {
            Policy::Balanced => RepresentativePolicy::Balanced,
            Policy::First => RepresentativePolicy::First,
            Policy::Last => RepresentativePolicy::Last,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichComplex {
    /// The trimmed complex on class representatives
    Lri,
    /// The full lattice-point complex, labeled by power products
    Lrq,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Criterion {
    Homology,
    Connectivity,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Strand,
    Minimize,
    Both,
}

enum CliError {
    /// Malformed input: exit 2.
    Input(String),
    /// A verification ran and failed: exit 1.
    Check(String),
    /// The computation exceeded a configured budget: exit 3.
    Infeasible(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Check(_) => 1,
            CliError::Input(_) => 2,
            CliError::Infeasible(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Check(m) => write!(f, "check failed: {m}"),
            CliError::Infeasible(m) => write!(f, "infeasible: {m}"),
        }
    }
}

impl From<MonomialError> for CliError {
    fn from(e: MonomialError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<SimplicialError> for CliError {
    fn from(e: SimplicialError) -> Self {
        match e {
            SimplicialError::FaceBudgetExceeded { .. } | SimplicialError::TooManyFacets(_) => {
                CliError::Infeasible(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<HomologyError> for CliError {
    fn from(e: HomologyError) -> Self {
        match e {
            HomologyError::Infeasible(_) => CliError::Infeasible(e.to_string()),
            HomologyError::Simplicial(inner) => inner.into(),
        }
    }
}

impl From<ResolutionError> for CliError {
    fn from(e: ResolutionError) -> Self {
        match e {
            ResolutionError::LatticeTooLarge { .. }
            | ResolutionError::StrandTooWide { .. }
            | ResolutionError::StrandTooLarge { .. }
            | ResolutionError::PowerTooLarge { .. } => CliError::Infeasible(e.to_string()),
            ResolutionError::NotQuasiTree => CliError::Check(e.to_string()),
            ResolutionError::Simplicial(inner) => inner.into(),
            ResolutionError::Homology(inner) => inner.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<PowerComplexError> for CliError {
    fn from(e: PowerComplexError) -> Self {
        match e {
            PowerComplexError::TooLarge { .. } => CliError::Infeasible(e.to_string()),
            PowerComplexError::Simplicial(inner) => inner.into(),
            PowerComplexError::Resolution(inner) => inner.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<bounds::BoundsError> for CliError {
    fn from(e: bounds::BoundsError) -> Self {
        match e {
            bounds::BoundsError::Complex(inner) => inner.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<extremal::ExtremalError> for CliError {
    fn from(e: extremal::ExtremalError) -> Self {
        match e {
            extremal::ExtremalError::QTooLarge { .. } => CliError::Infeasible(e.to_string()),
            extremal::ExtremalError::Resolution(inner) => inner.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<powres::field::FieldError> for CliError {
    fn from(e: powres::field::FieldError) -> Self {
        CliError::Input(e.to_string())
    }
}

fn load_ideal(args: &IdealArgs) -> Result<MonomialIdeal, CliError> {
    let ideal = if let Some(path) = &args.ideal_file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        MonomialIdeal::from_json_str(&text)?
    } else if let Some(text) = &args.ideal_json {
        MonomialIdeal::from_json_str(text)?
    } else {
        let name = args
            .corpus
            .as_deref()
            .expect("clap enforces exactly one ideal source");
        corpus_ideal(name)?
    };
    // every subcommand assumes a square-free minimal generating set, so the
    // precondition is checked once here rather than in each construction
    ideal.require_square_free_minimal()?;
    Ok(ideal)
}

fn corpus_ideal(name: &str) -> Result<MonomialIdeal, CliError> {
    use powres::corpus;
    let parse_n = |prefix: &str, min: usize| -> Result<usize, CliError> {
        let n: usize = name[prefix.len()..]
            .parse()
            .map_err(|_| CliError::Input(format!("bad corpus name `{name}`")))?;
        if n < min {
            return Err(CliError::Input(format!(
                "corpus family `{prefix}` needs a parameter of at least {min}"
            )));
        }
        Ok(n)
    };
    match name {
        "four-cycle" => Ok(corpus::square_ideal()),
        "nine-gen" => Ok(corpus::nine_generator_ideal()),
        _ if name.starts_with("path") => Ok(corpus::path_ideal(parse_n("path", 2)?)),
        _ if name.starts_with("cycle") => Ok(corpus::cycle_ideal(parse_n("cycle", 3)?)),
        _ if name.starts_with("star") => Ok(corpus::star_ideal(parse_n("star", 1)?)),
        _ if name.starts_with("complete") => Ok(corpus::complete_ideal(parse_n("complete", 2)?)),
        _ => Err(CliError::Input(format!(
            "unknown corpus ideal `{name}` (try pathN, cycleN, starN, completeN, four-cycle, nine-gen)"
        ))),
    }
}

/// Field from --field, else the POWRES_FIELD environment variable, else the
/// rationals.
fn resolve_field(flag: &Option<String>) -> Result<FieldSpec, CliError> {
    if let Some(s) = flag {
        return Ok(FieldSpec::parse(s)?);
    }
    if let Ok(s) = std::env::var("POWRES_FIELD") {
        if !s.trim().is_empty() {
            return Ok(FieldSpec::parse(&s)?);
        }
    }
    Ok(FieldSpec::Rational)
}

fn table_format(format: Format) -> Result<TableFormat, CliError> {
    match format {
        Format::Markdown | Format::Text => Ok(TableFormat::Markdown),
        Format::Csv => Ok(TableFormat::Csv),
        Format::Json => Ok(TableFormat::Json),
    }
}

fn json_vertices(vs: &[u32]) -> serde_json::Value {
    serde_json::Value::Array(vs.iter().map(|v| serde_json::Value::from(*v)).collect())
}

fn json_facets(facets: &[Vec<u32>]) -> serde_json::Value {
    serde_json::Value::Array(facets.iter().map(|f| json_vertices(f)).collect())
}

fn json_fvector(complex: &powres::simplicial::SimplicialComplex) -> Result<serde_json::Value, CliError> {
    let fv = complex.f_vector()?;
    Ok(serde_json::Value::Array(
        fv.counts
            .iter()
            .map(|c| match u64::try_from(c.clone()) {
                Ok(n) => serde_json::Value::from(n),
                Err(_) => serde_json::Value::from(c.to_string()),
            })
            .collect(),
    ))
}

fn json_labels(labels: &BTreeMap<u32, Monomial>, vars: &VariableSet) -> serde_json::Value {
    serde_json::Value::Array(
        labels
            .iter()
            .map(|(v, m)| {
                serde_json::json!({ "vertex": v, "monomial": m.render(vars) })
            })
            .collect(),
    )
}

fn lrq_json(lrq: &LrqComplex) -> Result<serde_json::Value, CliError> {
    Ok(serde_json::json!({
        "schema": 1,
        "r": lrq.r,
        "q": lrq.q,
        "s": lrq.s,
        "points": lrq.points.iter().map(|p| p.to_json()).collect::<Vec<_>>(),
        "base": json_vertices(&lrq.base),
        "first_kind": json_facets(&lrq.first_kind),
        "second_kind": json_facets(&lrq.second_kind),
        "facets": json_facets(lrq.complex.facets()),
        "f_vector": json_fvector(&lrq.complex)?,
        "dim": lrq.complex.dim(),
        "quasi_tree": lrq.complex.is_quasi_tree(),
        "leaf_order": json_facets(&lrq.leaf_order()),
    }))
}

fn lri_json(lri: &LriComplex) -> Result<serde_json::Value, CliError> {
    let classes: Vec<serde_json::Value> = lri
        .classes
        .classes
        .iter()
        .enumerate()
        .map(|(k, members)| {
            serde_json::json!({
                "members": json_vertices(members),
                "representative": lri.classes.representatives[k],
                "monomial": lri.classes.monomials[k].render(&lri.vars),
            })
        })
        .collect();
    Ok(serde_json::json!({
        "schema": 1,
        "r": lri.lrq.r,
        "q": lri.lrq.q,
        "policy": lri.policy.label(),
        "points": lri.lrq.points.iter().map(|p| p.to_json()).collect::<Vec<_>>(),
        "classes": classes,
        "survivors": json_vertices(&lri.classes.survivors),
        "facets": json_facets(lri.complex.facets()),
        "labels": json_labels(&lri.labels, &lri.vars),
        "f_vector": json_fvector(&lri.complex)?,
        "dim": lri.complex.dim(),
    }))
}

/// Write to stdout, exiting quietly when the consumer closed the pipe.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let outcome = out.write_all(text.as_bytes()).and_then(|_| out.flush());
    if let Err(e) = outcome {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("failed writing to stdout: {e}");
        std::process::exit(2);
    }
}

fn emitln(text: &str) {
    emit(text);
    emit("\n");
}

fn print_json(value: &serde_json::Value) {
    emitln(&serde_json::to_string_pretty(value).expect("JSON output serializes"));
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Bounds {
            power,
            gens,
            t_max,
            format,
        } => {
            let table = bounds::parameter_table(power, gens, t_max)?;
            emit(&table.render(table_format(format)?));
            Ok(())
        }
        Command::Table {
            ideal,
            power,
            t_max,
            betti,
            field,
            policy,
            format,
        } => {
            let ideal = load_ideal(&ideal)?;
            let betti_field = if betti {
                Some(resolve_field(&field)?)
            } else {
                None
            };
            let table = bounds::ideal_table(&ideal, power, policy.to_lib(), t_max, betti_field)?;
            emit(&table.render(table_format(format)?));
            Ok(())
        }
        Command::BuildLrq { power, gens } => {
            let lrq = power_complex::build_lrq(power, gens)?;
            print_json(&lrq_json(&lrq)?);
            Ok(())
        }
        Command::BuildLri {
            ideal,
            power,
            policy,
        } => {
            let ideal = load_ideal(&ideal)?;
            let lri = power_complex::build_lri(&ideal, power, policy.to_lib())?;
            print_json(&lri_json(&lri)?);
            Ok(())
        }
        Command::Taylor { ideal, power } => {
            let ideal = load_ideal(&ideal)?;
            let gens = power_complex::minimal_power_generators(&ideal, power)?;
            let labeled = power_complex::taylor_complex(ideal.vars(), &gens)?;
            print_json(&serde_json::json!({
                "schema": 1,
                "vars": ideal.vars().names(),
                "generators": gens.iter().map(|g| g.render(ideal.vars())).collect::<Vec<_>>(),
                "facets": json_facets(labeled.complex().facets()),
            }));
            Ok(())
        }
        Command::Verify {
            ideal,
            power,
            complex,
            criterion,
            field,
            policy,
            max_faces,
        } => {
            let ideal = load_ideal(&ideal)?;
            let field = resolve_field(&field)?;
            let labeled = match complex {
                WhichComplex::Lri => power_complex::build_lri(&ideal, power, policy.to_lib())?
                    .labeled()?,
                WhichComplex::Lrq => {
                    let q = ideal.n_gens() as u64;
                    power_complex::build_lrq(power, q)?.labeled_by(&ideal)?
                }
            };
            let name = match complex {
                WhichComplex::Lri => format!("L^{power}(I)"),
                WhichComplex::Lrq => format!("L^{power}_{}", ideal.n_gens()),
            };
            emitln(&format!(
                "complex {name} on {} vertices, I = ({})",
                labeled.complex().vertices().len(),
                ideal.render_gens()
            ));
            let mut all_ok = true;
            if criterion != Criterion::Connectivity {
                let report = resolution::supports_resolution_bps(&labeled, field, max_faces)?;
                emitln(&format!("homology criterion over {field}: {}", report.describe(labeled.vars())));
                all_ok &= report.ok;
            }
            if criterion != Criterion::Homology {
                let report = resolution::supports_resolution_quasitree(&labeled)?;
                emitln(&format!("connectivity criterion: {}", report.describe(labeled.vars())));
                all_ok &= report.ok;
            }
            if all_ok {
                emitln(&format!("verdict: supports a free resolution of I^{power}"));
                Ok(())
            } else {
                Err(CliError::Check(format!(
                    "{name} does not support a free resolution of I^{power}"
                )))
            }
        }
        Command::Betti {
            ideal,
            power,
            field,
            route,
            policy,
            max_faces,
            format,
        } => {
            let ideal = load_ideal(&ideal)?;
            let field = resolve_field(&field)?;
            let strand = if route != Route::Minimize {
                Some(resolution::multigraded_betti(&ideal, power, field)?)
            } else {
                None
            };
            let minimized = if route != Route::Strand {
                let labeled =
                    power_complex::build_lri(&ideal, power, policy.to_lib())?.labeled()?;
                let res = resolution::homogenize(&labeled, max_faces)?;
                Some(resolution::minimize_resolution(&res, field)?)
            } else {
                None
            };
            if let (Some(a), Some(b)) = (&strand, &minimized) {
                if a != b {
                    return Err(CliError::Check(format!(
                        "the two Betti routes disagree: strand totals {:?}, minimization totals {:?}",
                        a.totals(),
                        b.totals()
                    )));
                }
            }
            let table = strand.or(minimized).expect("some route ran");
            match format {
                Format::Json => print_json(&table.to_json()),
                _ => emit(&table.render()),
            }
            Ok(())
        }
        Command::Extremal { gens, power, field } => {
            let ext = extremal::build_extremal(gens)?;
            let mut value = serde_json::json!({
                "schema": 1,
                "q": ext.q,
                "vars": ext.vars().names(),
                "generators": ext.ideal.gens().iter()
                    .map(|g| g.render(ext.vars()))
                    .collect::<Vec<_>>(),
                "subsets": ext.subsets,
            });
            if let Some(r) = power {
                let field = resolve_field(&field)?;
                let table = resolution::multigraded_betti(&ext.ideal, r, field)?;
                value["power"] = serde_json::Value::from(r);
                value["betti"] = table.to_json();
            }
            print_json(&value);
            Ok(())
        }
        Command::VerifyMaximality {
            ideal,
            power,
            field,
        } => {
            let ideal = load_ideal(&ideal)?;
            let field = resolve_field(&field)?;
            let report = extremal::verify_extremal_maximality(
                &ideal,
                power,
                field,
                extremal::MAXIMALITY_MAX_Q,
            )?;
            emitln(&format!(
                "I^{power} Betti totals:        {:?}",
                report.ideal_totals
            ));
            emitln(&format!(
                "extremal^{power} Betti totals: {:?}",
                report.extremal_totals
            ));
            if report.ok {
                emitln("verdict: the extremal ideal dominates degree by degree");
                Ok(())
            } else {
                Err(CliError::Check(
                    "the ideal exceeds the extremal Betti numbers".into(),
                ))
            }
        }
        Command::Selftest => {
            let outcomes = powres::acceptance::run_all();
            let mut ok = true;
            for o in &outcomes {
                emitln(&o.line());
                ok &= o.ok;
            }
            if ok {
                Ok(())
            } else {
                Err(CliError::Check("some acceptance criteria failed".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.code())
        }
    }
}
