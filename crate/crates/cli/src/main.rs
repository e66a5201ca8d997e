//! `liebialg`: command line front end for the Galilei bialgebra classifier.
//!
//! Exit status is 0 on success or a true verdict, 1 on a false verdict and 2
//! on malformed input.

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use liebialg::bialgebra::{
    cocycle_check, cocycle_residuals, cocycle_space, cojacobi_residuals, cybe_check, galilei_r_matrix,
    mcybe_check, normalize_constraints, parse_wedge_label, schouten, CocommutatorSpec, RMatrix,
};
use liebialg::exact_algebra::{Poly, Rational, Scalar};
use liebialg::galilei_orbits::{
    canonical_rep_with, classify, witness, ClassId, OrbitClassJson, SixTuple, Witness,
};
use liebialg::lie_core::{AlgebraSpec, LieAlgebra, Wedge2, Wedge3};
use liebialg::par::Execution;
use liebialg::poisson_group::{
    epsilon_remark, markdown_row, table2_row_with, BracketTable, EPS, TABLE2_HEADER,
};
use liebialg::{sampling, verify, ParseError};

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] liebialg::Error),
    #[error("cannot read `{path}`: {source}")]
    Io { path: String, source: io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Lib(e.into())
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(liebialg::Error::NotABialgebra { .. }) => 1,
            _ => 2,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser)]
#[command(name = "liebialg", version, about = "Lie bialgebras and Poisson-Lie structures on the 2D Galilei algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Markdown,
    Json,
}

#[derive(Args)]
struct AlgebraArg {
    /// Lie algebra as JSON (inline or a file path); defaults to the Galilei algebra.
    #[arg(long)]
    algebra: Option<String>,
}

impl AlgebraArg {
    fn load(&self) -> CliResult<LieAlgebra> {
        match &self.algebra {
            None => Ok(LieAlgebra::galilei()),
            Some(src) => {
                let spec: AlgebraSpec = serde_json::from_str(&read_source(src)?)?;
                Ok(spec.build()?)
            }
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check the cocycle and co-Jacobi conditions for a cocommutator.
    CheckBialgebra {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Galilei parameters `alpha,beta,gamma,rho,r,s`.
        #[arg(long, conflicts_with_all = ["delta", "algebra"], required_unless_present = "delta")]
        params: Option<String>,
        /// Cocommutator as JSON, e.g. `{"P": [["1", "K∧P"]]}`.
        #[arg(long)]
        delta: Option<String>,
    },
    /// Orbit class of a Galilei bialgebra under the automorphism group.
    Classify {
        /// Parameters `alpha,beta,gamma,rho,r,s`.
        #[arg(long, conflicts_with = "json", required_unless_present = "json")]
        params: Option<String>,
        /// Parameters as a JSON object with keys alpha..s.
        #[arg(long)]
        json: Option<String>,
        /// Also print an automorphism mapping the input to its canonical form.
        #[arg(long)]
        witness: bool,
    },
    /// Basis of the space of 1-cocycles L -> Λ²L.
    CocycleSpace {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Schouten bracket [[r,r]] of an r-matrix.
    Schouten {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// `a,b,c` for a·P∧H + b·P∧K + c·H∧K, or terms like `K^H=1,H^P=-2`.
        #[arg(long, allow_hyphen_values = true)]
        r: String,
    },
    /// Classical and modified classical Yang-Baxter checks of an r-matrix.
    Cybe {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
    },
    /// Canonical representatives of the nine nontrivial orbits.
    Table1 {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Coordinate Poisson brackets on the Galilei group.
    Table2 {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        class: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, allow_hyphen_values = true)]
        epsilon: Option<String>,
        /// Keep tau0 and v0 symbolic.
        #[arg(long, conflicts_with_all = ["tau0", "v0"])]
        symbolic: bool,
        /// Time scale; defaults to 1 unless --symbolic.
        #[arg(long, allow_hyphen_values = true)]
        tau0: Option<String>,
        /// Velocity scale; defaults to 1 unless --symbolic.
        #[arg(long, allow_hyphen_values = true)]
        v0: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the ten built-in consistency checks.
    VerifyAll {
        /// Seed for the random sweeps; overrides LIEBIALG_SEED.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        sequential: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// Inline JSON, `-` for stdin, or a file path.
fn read_source(src: &str) -> CliResult<String> {
    let t = src.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok(src.to_string());
    }
    let io_err = |source| CliError::Io { path: src.to_string(), source };
    if src == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).map_err(io_err)?;
        return Ok(buf);
    }
    fs::read_to_string(src).map_err(io_err)
}

fn print_json<T: Serialize>(value: &T) -> CliResult<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn verdict(ok: bool) -> u8 {
    if ok {
        0
    } else {
        1
    }
}

fn parse_tuple(params: Option<&str>, json: Option<&str>) -> CliResult<SixTuple<Rational>> {
    match (params, json) {
        (Some(p), _) => Ok(p.parse()?),
        (None, Some(j)) => Ok(serde_json::from_str(&read_source(j)?)?),
        (None, None) => Err(CliError::Usage("expected --params or --json".into())),
    }
}

fn parse_r_matrix(alg: &LieAlgebra, text: &str) -> CliResult<RMatrix<Rational>> {
    if !text.contains('=') {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 3 || alg.dim() != 3 {
            return Err(CliError::Usage(format!(
                "r-matrix `{text}`: use `a,b,c` on the Galilei algebra or `X^Y=c` terms"
            )));
        }
        let [a, b, c] = [parts[0], parts[1], parts[2]].map(|s| s.parse::<Rational>());
        return Ok(galilei_r_matrix(a?, b?, c?));
    }
    let mut r = Wedge2::zero(alg.dim());
    for term in text.split(',') {
        let (label, coeff) = term
            .split_once('=')
            .ok_or_else(|| ParseError::new(format!("r-matrix term `{term}` must look like X^Y=c")))?;
        let (i, j) = parse_wedge_label(alg, label)?;
        if i == j {
            return Err(ParseError::new(format!("degenerate wedge `{label}`")).into());
        }
        r.add_term(i, j, coeff.trim().parse::<Rational>()?);
    }
    Ok(r)
}

fn wedge3_text<S: Scalar + std::fmt::Display>(w: &Wedge3<S>, labels: &[String]) -> String {
    let parts: Vec<String> = w
        .terms()
        .filter(|(_, c)| !c.is_zero())
        .map(|(&(i, j, k), c)| format!("({c})·{}∧{}∧{}", labels[i], labels[j], labels[k]))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

#[derive(Serialize)]
struct BialgebraReport {
    cocycle: bool,
    cojacobi: bool,
    bialgebra: bool,
    /// Conditions on the free symbols (if any) that make it a bialgebra.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    constraints: Vec<String>,
}

fn check_bialgebra(algebra: &AlgebraArg, params: Option<&str>, delta: Option<&str>) -> CliResult<u8> {
    if let Some(p) = params {
        let tuple: SixTuple<Rational> = p.parse()?;
        tuple.check_bialgebra()?;
        print_json(&BialgebraReport { cocycle: true, cojacobi: true, bialgebra: true, constraints: vec![] })?;
        return Ok(0);
    }
    let alg = algebra.load()?;
    let src = delta.ok_or_else(|| CliError::Usage("expected --params or --delta".into()))?;
    let spec: CocommutatorSpec = serde_json::from_str(&read_source(src)?)?;
    let d = spec.build(&alg)?;
    let mut residuals: Vec<Poly> = cocycle_residuals(&alg, &d)
        .iter()
        .flat_map(|w| w.coeffs().to_vec())
        .collect();
    let cocycle = cocycle_check(&alg, &d);
    let cojacobi_polys = normalize_constraints(cojacobi_residuals(&d));
    let cojacobi = cojacobi_polys.is_empty();
    residuals.extend(cojacobi_polys);
    let constraints: Vec<String> = normalize_constraints(residuals).iter().map(ToString::to_string).collect();
    let ok = cocycle && cojacobi;
    print_json(&BialgebraReport { cocycle, cojacobi, bialgebra: ok, constraints })?;
    Ok(verdict(ok))
}

#[derive(Serialize)]
struct ClassifyOutput {
    #[serde(flatten)]
    class: OrbitClassJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    canonical: Option<SixTuple<Rational>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Witness>,
}

fn classify_cmd(params: Option<&str>, json: Option<&str>, want_witness: bool) -> CliResult<u8> {
    let p = parse_tuple(params, json)?;
    let class = classify(&p)?;
    let w = if want_witness { Some(witness(&p, &class)?) } else { None };
    print_json(&ClassifyOutput { class: OrbitClassJson::from(&class), canonical: class.canonical(), witness: w })?;
    Ok(0)
}

#[derive(Serialize, Deserialize)]
struct CocycleSpaceOutput {
    dimension: usize,
    basis: Vec<CocommutatorSpec>,
}

fn cocycle_space_cmd(algebra: &AlgebraArg, format: Format) -> CliResult<u8> {
    let alg = algebra.load()?;
    let basis = cocycle_space(&alg);
    match format {
        Format::Json => print_json(&CocycleSpaceOutput {
            dimension: basis.len(),
            basis: basis.iter().map(|d| CocommutatorSpec::from_cocommutator(&alg, d)).collect(),
        })?,
        Format::Markdown => {
            println!("dimension {}", basis.len());
            for (n, d) in basis.iter().enumerate() {
                let images: Vec<String> = alg
                    .basis()
                    .iter()
                    .zip(d.images())
                    .map(|(x, w)| format!("δ({x}) = {}", w.display_with(alg.basis())))
                    .collect();
                println!("{}. {}", n + 1, images.join(", "));
            }
        }
    }
    Ok(0)
}

fn schouten_cmd(algebra: &AlgebraArg, r: &str) -> CliResult<u8> {
    let alg = algebra.load()?;
    let rm = parse_r_matrix(&alg, r)?;
    println!("{}", wedge3_text(&schouten(&alg, &rm), alg.basis()));
    Ok(0)
}

#[derive(Serialize)]
struct CybeReport {
    cybe: bool,
    mcybe: bool,
}

fn cybe_cmd(algebra: &AlgebraArg, r: &str) -> CliResult<u8> {
    let alg = algebra.load()?;
    let rm = parse_r_matrix(&alg, r)?;
    let report = CybeReport { cybe: cybe_check(&alg, &rm), mcybe: mcybe_check(&alg, &rm) };
    print_json(&report)?;
    Ok(verdict(report.cybe))
}

#[derive(Serialize, Deserialize)]
struct Table1Row {
    class: ClassId,
    canonical: SixTuple<Poly>,
    coboundary: bool,
}

fn table1_cmd(format: Format) -> CliResult<u8> {
    let rows: Vec<Table1Row> = ClassId::ROWS
        .iter()
        .map(|&id| {
            let eps = if id.has_epsilon() { Poly::var(EPS) } else { Poly::zero() };
            Table1Row { class: id, canonical: canonical_rep_with(id, eps), coboundary: id.is_coboundary() }
        })
        .collect();
    match format {
        Format::Json => print_json(&rows)?,
        Format::Markdown => {
            println!("| class | alpha | beta | gamma | rho | r | s | coboundary |");
            println!("|---|---|---|---|---|---|---|---|");
            for row in &rows {
                let c = row.canonical.to_array().map(|p| p.to_string());
                println!("| {} | {} | {} |", row.class, c.join(" | "), row.coboundary);
            }
        }
    }
    Ok(0)
}

#[derive(Serialize, Deserialize)]
struct Table2Row {
    class: ClassId,
    #[serde(flatten)]
    brackets: BracketTable,
    remarks: String,
}

struct Table2Opts<'a> {
    class: Option<&'a str>,
    all: bool,
    epsilon: Option<&'a str>,
    symbolic: bool,
    tau0: Option<&'a str>,
    v0: Option<&'a str>,
    format: Format,
}

fn table2_cmd(o: Table2Opts) -> CliResult<u8> {
    let ids: Vec<ClassId> = match o.class {
        Some(c) if !o.all => vec![c.parse()?],
        _ => ClassId::ROWS.to_vec(),
    };
    let eps = o.epsilon.map(str::parse::<Rational>).transpose()?;
    let scale = |v: Option<&str>| -> CliResult<Option<Rational>> {
        match v {
            Some(s) => Ok(Some(s.parse()?)),
            None if o.symbolic => Ok(None),
            None => Ok(Some(Rational::one())),
        }
    };
    let (tau0, v0) = (scale(o.tau0)?, scale(o.v0)?);

    let mut rows = Vec::new();
    for id in ids {
        let e = match (&eps, id) {
            (Some(_), ClassId::Row(n)) if !id.has_epsilon() && !o.all => {
                return Err(liebialg::Error::UnexpectedEpsilon(n).into())
            }
            (Some(e), ClassId::Row(n @ 2..=4)) if e.is_negative() => {
                return Err(liebialg::Error::NegativeEpsilon { class: n, value: e.to_string() }.into())
            }
            (Some(e), _) if id.has_epsilon() => Some(e),
            _ => None,
        };
        let brackets = table2_row_with(id, e, tau0.as_ref(), v0.as_ref())?;
        rows.push(Table2Row { class: id, brackets, remarks: epsilon_remark(id).to_string() });
    }
    match o.format {
        Format::Json => print_json(&rows)?,
        Format::Markdown => {
            println!("{TABLE2_HEADER}");
            for row in &rows {
                println!("{}", markdown_row(row.class, &row.brackets, &row.remarks));
            }
        }
    }
    Ok(0)
}

fn verify_all_cmd(seed: Option<u64>, sequential: bool, format: Format) -> CliResult<u8> {
    let seed = seed.unwrap_or_else(sampling::seed_from_env);
    let exec = if sequential { Execution::Sequential } else { Execution::default() };
    let reports = verify::run_all(exec, seed);
    let passed = reports.iter().filter(|r| r.passed).count();
    match format {
        Format::Json => print_json(&reports)?,
        Format::Markdown => {
            for r in &reports {
                println!("{r}");
            }
            println!("seed {seed}: {passed}/{} passed", reports.len());
        }
    }
    Ok(verdict(passed == reports.len()))
}

fn run(cli: Cli) -> CliResult<u8> {
    match &cli.command {
        Command::CheckBialgebra { algebra, params, delta } => {
            check_bialgebra(algebra, params.as_deref(), delta.as_deref())
        }
        Command::Classify { params, json, witness } => classify_cmd(params.as_deref(), json.as_deref(), *witness),
        Command::CocycleSpace { algebra, format } => cocycle_space_cmd(algebra, *format),
        Command::Schouten { algebra, r } => schouten_cmd(algebra, r),
        Command::Cybe { algebra, r } => cybe_cmd(algebra, r),
        Command::Table1 { format } => table1_cmd(*format),
        Command::Table2 { class, all, epsilon, symbolic, tau0, v0, format } => table2_cmd(Table2Opts {
            class: class.as_deref(),
            all: *all,
            epsilon: epsilon.as_deref(),
            symbolic: *symbolic,
            tau0: tau0.as_deref(),
            v0: v0.as_deref(),
            format: *format,
        }),
        Command::VerifyAll { seed, sequential, format } => verify_all_cmd(*seed, *sequential, *format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
