//! The `onelap` command line, kept in the library so it can be driven from
//! tests with in-memory output streams.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cheeger::{cheeger_exact, cheeger_inequality_check, mu2_via_pi_min};
use crate::error::Error;
use crate::graph::{
    complete_graph, cycle_graph, parse_edge_list, path_graph, petersen_graph, serialize_edge_list,
    star_graph, Graph,
};
use crate::rational::Rat;
use crate::report::{
    fmt_float, round12, spectrum_csv, spectrum_json, spectrum_text, CertificateRecord, CompareRow,
    CutRecord,
};
use crate::spectrum::{enumerate_spectrum, second_eigenvalue, EnumConfig};
use crate::tv::{TernaryPattern, VertexFunction};
use crate::verify::{is_eigenvector, verify_eigenpair};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_TOO_LARGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_NOT_EIGEN: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "onelap",
    version,
    about = "Exact spectra of the graph 1-Laplacian"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate every eigenvalue with its normal eigenvectors and certificates.
    Spectrum(CommonArgs),
    /// Exact Cheeger constant and an optimal cut.
    Cheeger(CommonArgs),
    /// Second eigenvalue as the minimum energy over balanced patterns.
    Mu2(CommonArgs),
    /// Compare the second eigenvalue, the Cheeger constant and λ₂.
    Compare(CommonArgs),
    /// Check whether a vector is an eigenvector.
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        /// One rational or decimal per line.
        #[arg(long, value_name = "FILE")]
        vector: PathBuf,
        /// Eigenvalue to test; defaults to the energy of the normalized vector.
        #[arg(long)]
        mu: Option<Rat>,
    },
    /// Write the selected graph as an edge list.
    Gen(CommonArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Edge-list file.
    #[arg(long = "in", value_name = "FILE", conflicts_with = "gen")]
    pub input: Option<PathBuf>,
    /// path:N, cycle:N, complete:N, star:N or petersen.
    #[arg(long, value_name = "SPEC")]
    pub gen: Option<String>,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, env = "ONELAP_THREADS")]
    pub threads: Option<usize>,
    #[arg(long, default_value_t = 16)]
    pub max_n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSource {
    File(PathBuf),
    Generator(String),
}

/// Validated settings shared by every subcommand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub source: GraphSource,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub enumeration: EnumConfig,
}

impl RunConfig {
    pub fn from_args(args: &CommonArgs) -> Result<RunConfig, CliError> {
        let source = match (&args.input, &args.gen) {
            (Some(p), None) => GraphSource::File(p.clone()),
            (None, Some(s)) => GraphSource::Generator(s.clone()),
            _ => {
                return Err(CliError::Usage(
                    "exactly one of --in or --gen is required".into(),
                ))
            }
        };
        let mut enumeration = EnumConfig {
            max_n: args.max_n,
            ..EnumConfig::default()
        };
        if let Some(t) = args.threads {
            enumeration.threads = t;
        }
        enumeration.validate()?;
        Ok(RunConfig {
            source,
            format: args.format,
            out: args.out.clone(),
            enumeration,
        })
    }

    pub fn label(&self) -> String {
        match &self.source {
            GraphSource::File(p) => p.display().to_string(),
            GraphSource::Generator(s) => s.clone(),
        }
    }

    pub fn load_graph(&self) -> Result<Graph, CliError> {
        match &self.source {
            GraphSource::File(p) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| CliError::Io(format!("cannot read {}: {e}", p.display())))?;
                Ok(parse_edge_list(&text)?)
            }
            GraphSource::Generator(s) => Ok(generate(s)?),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Lib(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(Error::TooLarge { .. }) => EXIT_TOO_LARGE,
            _ => EXIT_ERROR,
        }
    }
}

/// Builds a graph from `path:N`, `cycle:N`, `complete:N`, `star:N` or `petersen`.
pub fn generate(spec: &str) -> Result<Graph, CliError> {
    if spec == "petersen" {
        return Ok(petersen_graph());
    }
    let bad = || CliError::Usage(format!("unknown generator '{spec}'"));
    let (family, n) = spec.split_once(':').ok_or_else(bad)?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    let g = match family {
        "path" => path_graph(n)?,
        "cycle" => cycle_graph(n)?,
        "complete" => complete_graph(n)?,
        "star" => star_graph(n)?,
        _ => return Err(bad()),
    };
    Ok(g)
}

/// Reads a vector file: one rational (`p/q`) or decimal per line, blank lines
/// and `#` comments ignored.
pub fn parse_vector(text: &str) -> Result<VertexFunction, CliError> {
    let mut values = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let v: Rat = line.parse().map_err(|e| {
            CliError::Lib(Error::Parse {
                line: k + 1,
                msg: format!("{e}"),
            })
        })?;
        values.push(v);
    }
    Ok(VertexFunction::new(values))
}

#[derive(Serialize)]
struct Mu2Record<'a> {
    mu2: Rat,
    mu2_float: f64,
    pattern: &'a TernaryPattern,
}

#[derive(Serialize)]
struct Verdict {
    verdict: &'static str,
}

#[derive(Serialize)]
struct GraphRecord<'a> {
    n: usize,
    m: usize,
    edges: &'a [(usize, usize)],
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

/// Output text plus the exit code it should be reported with.
struct Outcome {
    body: String,
    code: i32,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome {
            body,
            code: EXIT_OK,
        }
    }
}

fn spectrum_cmd(cfg: &RunConfig, g: &Graph) -> Result<Outcome, CliError> {
    let report = enumerate_spectrum(g, &cfg.enumeration)?;
    Ok(Outcome::ok(match cfg.format {
        Format::Json => spectrum_json(&report),
        Format::Csv => spectrum_csv(&report),
        Format::Text => spectrum_text(&report),
    }))
}

fn cheeger_cmd(cfg: &RunConfig, g: &Graph) -> Result<Outcome, CliError> {
    let (_, cut) = cfg.enumeration.install(|| cheeger_exact(g))??;
    let rec = CutRecord::from(&cut);
    let subset = rec.subset.iter().map(usize::to_string).collect::<Vec<_>>();
    Ok(Outcome::ok(match cfg.format {
        Format::Json => to_json(&rec),
        Format::Csv => format!(
            "h,subset,boundary,vol_s,vol_sbar\n{},{},{},{},{}\n",
            rec.h,
            subset.join(" "),
            rec.boundary,
            rec.vol[0],
            rec.vol[1]
        ),
        Format::Text => format!(
            "h = {} ({})\nsubset = {{{}}}\nboundary = {}\nvol = {} / {}\n",
            rec.h,
            fmt_float(rec.h.to_f64()),
            subset.join(", "),
            rec.boundary,
            rec.vol[0],
            rec.vol[1]
        ),
    }))
}

fn mu2_cmd(cfg: &RunConfig, g: &Graph) -> Result<Outcome, CliError> {
    let (mu2, pattern) = mu2_via_pi_min(g, &cfg.enumeration)?;
    Ok(Outcome::ok(match cfg.format {
        Format::Json => to_json(&Mu2Record {
            mu2,
            mu2_float: round12(mu2.to_f64()),
            pattern: &pattern,
        }),
        Format::Csv => format!(
            "mu2,mu2_float,pattern\n{mu2},{},{pattern}\n",
            fmt_float(mu2.to_f64())
        ),
        Format::Text => format!(
            "mu2 = {mu2} ({})\npattern = {pattern}\n",
            fmt_float(mu2.to_f64())
        ),
    }))
}

fn compare_cmd(cfg: &RunConfig, g: &Graph) -> Result<Outcome, CliError> {
    let report = enumerate_spectrum(g, &cfg.enumeration)?;
    let mu2 = second_eigenvalue(&report)?;
    let (lambda2, h, ok) = cfg.enumeration.install(|| cheeger_inequality_check(g))??;
    let row = CompareRow {
        graph: cfg.label(),
        n: g.n(),
        m: g.m(),
        mu2,
        h,
        lambda2: round12(lambda2),
        cheeger_ineq_ok: ok,
    };
    let body = match cfg.format {
        Format::Json => to_json(&row),
        Format::Csv => format!("{}\n{}\n", CompareRow::CSV_HEADER, row.csv_row()),
        Format::Text => format!(
            "mu2={}, h={}, lambda2≈{:.4}, {}\n",
            row.mu2,
            row.h,
            lambda2,
            if mu2 == h { "ok" } else { "MISMATCH" }
        ),
    };
    Ok(Outcome {
        body,
        code: if mu2 == h { EXIT_OK } else { EXIT_MISMATCH },
    })
}

fn verify_cmd(
    cfg: &RunConfig,
    g: &Graph,
    vector: &PathBuf,
    mu: Option<Rat>,
) -> Result<Outcome, CliError> {
    let text = std::fs::read_to_string(vector)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", vector.display())))?;
    let x = parse_vector(&text)?;
    let cert = match mu {
        Some(mu) => verify_eigenpair(g, mu, &x)?,
        None => is_eigenvector(g, &x)?,
    };
    let Some(cert) = cert else {
        let body = match cfg.format {
            Format::Json => to_json(&Verdict {
                verdict: "NOT-EIGEN",
            }),
            _ => "NOT-EIGEN\n".to_string(),
        };
        return Ok(Outcome {
            body,
            code: EXIT_NOT_EIGEN,
        });
    };
    let rec = CertificateRecord::new(&cert, g.edges());
    let body = match cfg.format {
        Format::Json => to_json(&rec),
        Format::Csv => {
            let mut s = String::from("u,v,z\n");
            for ev in &rec.z {
                let _ = writeln!(s, "{},{},{}", ev.edge[0], ev.edge[1], ev.value);
            }
            s
        }
        Format::Text => {
            let mut s = format!("EIGEN mu = {}\n", rec.mu);
            for ev in &rec.z {
                let _ = writeln!(s, "z({},{}) = {}", ev.edge[0], ev.edge[1], ev.value);
            }
            s
        }
    };
    Ok(Outcome::ok(body))
}

fn gen_cmd(cfg: &RunConfig, g: &Graph) -> Result<Outcome, CliError> {
    Ok(Outcome::ok(match cfg.format {
        Format::Json => to_json(&GraphRecord {
            n: g.n(),
            m: g.m(),
            edges: g.canonical().edges(),
        }),
        _ => serialize_edge_list(g),
    }))
}

fn execute(command: &Command) -> Result<(RunConfig, Outcome), CliError> {
    let common = match command {
        Command::Spectrum(c)
        | Command::Cheeger(c)
        | Command::Mu2(c)
        | Command::Compare(c)
        | Command::Gen(c) => c,
        Command::Verify { common, .. } => common,
    };
    let cfg = RunConfig::from_args(common)?;
    let g = cfg.load_graph()?;
    let outcome = match command {
        Command::Spectrum(_) => spectrum_cmd(&cfg, &g)?,
        Command::Cheeger(_) => cheeger_cmd(&cfg, &g)?,
        Command::Mu2(_) => mu2_cmd(&cfg, &g)?,
        Command::Compare(_) => compare_cmd(&cfg, &g)?,
        Command::Verify { vector, mu, .. } => verify_cmd(&cfg, &g, vector, *mu)?,
        Command::Gen(_) => gen_cmd(&cfg, &g)?,
    };
    Ok((cfg, outcome))
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                EXIT_ERROR
            } else {
                let _ = write!(stdout, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok((cfg, outcome)) => {
            let written = match &cfg.out {
                Some(path) => std::fs::write(path, &outcome.body)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => stdout
                    .write_all(outcome.body.as_bytes())
                    .map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => outcome.code,
                Err(msg) => {
                    let _ = writeln!(stderr, "error: {msg}");
                    EXIT_ERROR
                }
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
