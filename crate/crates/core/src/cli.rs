//! `gallai` command line front end.
//!
//! Exit codes: 0 when a definitive answer was printed, 1 when a search ran out of
//! budget, 2 for usage, parse and input errors.

use std::collections::BTreeMap;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{evaluate, FormulaId};
use crate::coloring::{read_coloring, BicliquePattern, BipartiteColoring};
use crate::construct::{block_coloring, random_coloring, star_avoiding_coloring};
use crate::detect::{find_any, path_profile, sample_rainbow};
use crate::error::Error;
use crate::euclid::{embed_coloring, verify_translation, write_points, DEFAULT_TOLERANCE};
use crate::search::{
    decode_model, exists_avoiding_with_budget, export_cnf, min_forcing_n2, parse_model, zarankiewicz_exact_with_budget,
    DEFAULT_BUDGET,
};

#[derive(Debug, Parser)]
#[command(name = "gallai", about = "Monochromatic and rainbow bicliques in edge-colored K_{n1,n2}")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
struct Patterns {
    /// Forbidden rainbow pattern, as `s,t` (s rows, t columns).
    #[arg(long, value_parser = parse_pattern)]
    rainbow: BicliquePattern,
    /// Forbidden monochromatic pattern, as `s,t`.
    #[arg(long, value_parser = parse_pattern)]
    mono: BicliquePattern,
}

fn parse_pattern(text: &str) -> Result<BicliquePattern, String> {
    text.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Look for a monochromatic or rainbow biclique in a coloring file (stdin if omitted).
    Verify {
        file: Option<PathBuf>,
        #[command(flatten)]
        patterns: Patterns,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Exhaustive search for avoiding colorings.
    Search {
        #[command(subcommand)]
        mode: SearchMode,
    },
    /// Evaluate a closed-form bound.
    Bounds {
        #[arg(value_parser = parse_formula)]
        id: FormulaId,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long)]
        t: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        d: Option<u64>,
        #[arg(long)]
        r: Option<u64>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        q: Option<u64>,
        /// For euclid-dims: simplex_pair, prism or product.
        #[arg(long)]
        kind: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Write a generated coloring.
    Construct {
        #[arg(long, value_enum)]
        kind: ConstructKind,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        n1: Option<usize>,
        #[arg(long)]
        n2: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact Zarankiewicz number next to its upper bound.
    Zarankiewicz {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Map a coloring onto the simplex product and write the colored points.
    Embed {
        file: Option<PathBuf>,
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Detect a biclique and check its image is a correctly colored simplex product.
    CheckTranslation {
        file: Option<PathBuf>,
        #[command(flatten)]
        patterns: Patterns,
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        #[arg(long, default_value_t = 1.0)]
        b: f64,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Write the avoidance problem as DIMACS CNF.
    ExportSat {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long)]
        r: u32,
        #[command(flatten)]
        patterns: Patterns,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Turn a solver model back into a coloring.
    DecodeSat {
        model: Option<PathBuf>,
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long)]
        r: u32,
    },
    /// Classify the paths between two rows.
    PathProfile {
        file: Option<PathBuf>,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// Randomly sample rainbow bicliques among low color-degree vertices.
    Sample {
        file: Option<PathBuf>,
        #[arg(long, value_parser = parse_pattern)]
        pattern: BicliquePattern,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
    },
}

fn parse_formula(text: &str) -> Result<FormulaId, String> {
    text.parse().map_err(|_| {
        let names: Vec<&str> = FormulaId::ALL.iter().map(FormulaId::name).collect();
        format!("unknown formula `{text}`; expected one of {}", names.join(", "))
    })
}

#[derive(Debug, Subcommand)]
enum SearchMode {
    /// Does an avoiding coloring of K_{n1,n2} exist?
    Exists {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long)]
        r: u32,
        #[command(flatten)]
        patterns: Patterns,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Smallest n2 at which every coloring contains a pattern.
    MinN2 {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        r: u32,
        #[command(flatten)]
        patterns: Patterns,
        #[arg(long)]
        n2_max: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ConstructKind {
    Block,
    Random,
    Star,
}

enum Failure {
    Budget(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_input(&mut self, file: &Option<PathBuf>) -> Result<String, Failure> {
        match file {
            Some(path) if path.as_os_str() != "-" => Ok(fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?),
            _ => {
                let mut text = String::new();
                self.stdin.read_to_string(&mut text)?;
                Ok(text)
            }
        }
    }

    fn read_coloring(&mut self, file: &Option<PathBuf>) -> Result<BipartiteColoring, Failure> {
        Ok(read_coloring(&self.read_input(file)?)?)
    }

    fn emit(&mut self, out: &Option<PathBuf>, text: &str) -> Outcome {
        match out {
            Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
            None => Ok(self.stdout.write_all(text.as_bytes())?),
        }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(rendered.as_bytes())
            } else {
                stderr.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let mut io = Io { stdin, stdout, stderr };
    match dispatch(cli.command, &mut io) {
        Ok(()) => 0,
        Err(Failure::Budget(msg)) => {
            let _ = writeln!(io.stderr, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(io.stderr, "error: {msg}");
            2
        }
    }
}

fn need<T>(value: Option<T>, flag: &str, kind: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("--kind {kind} needs --{flag}")))
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Outcome {
    match command {
        Command::Verify { file, patterns, format } => {
            let c = io.read_coloring(&file)?;
            let found = find_any(&c, patterns.rainbow, patterns.mono);
            match (found, format) {
                (None, Format::Text) => writeln!(io.stdout, "none")?,
                (None, Format::Json) => writeln!(io.stdout, "null")?,
                (Some(cert), Format::Text) => writeln!(io.stdout, "{cert}")?,
                (Some(cert), Format::Json) => writeln!(io.stdout, "{}", cert.to_document(&c).to_json())?,
            }
        }
        Command::Search { mode } => match mode {
            SearchMode::Exists {
                n1,
                n2,
                r,
                patterns,
                budget,
            } => {
                let res = exists_avoiding_with_budget(n1, n2, r, patterns.rainbow, patterns.mono, budget)?;
                writeln!(io.stdout, "{}", res.outcome)?;
                if let Some(w) = &res.witness {
                    write!(io.stdout, "{w}")?;
                }
                writeln!(
                    io.stderr,
                    "nodes_expanded={} canonical_prunes={}",
                    res.nodes_expanded, res.canonical_prunes
                )?;
            }
            SearchMode::MinN2 {
                n1,
                r,
                patterns,
                n2_max,
                budget,
            } => match min_forcing_n2(n1, r, patterns.rainbow, patterns.mono, n2_max, budget)? {
                Some(n2) => writeln!(io.stdout, "n2={n2}")?,
                None => writeln!(io.stdout, "none")?,
            },
        },
        Command::Bounds {
            id,
            m,
            n,
            s,
            t,
            k,
            d,
            r,
            p,
            q,
            kind,
            format,
        } => {
            let inputs: BTreeMap<String, u64> = [
                ("m", m),
                ("n", n),
                ("s", s),
                ("t", t),
                ("k", k),
                ("d", d),
                ("r", r),
                ("p", p),
                ("q", q),
            ]
            .into_iter()
            .filter_map(|(name, v)| v.map(|v| (name.to_string(), v)))
            .collect();
            let report = evaluate(id, &inputs, kind.as_deref())?;
            match format {
                Format::Text => writeln!(io.stdout, "{}", report.to_text())?,
                Format::Json => writeln!(io.stdout, "{}", report.to_json())?,
            }
        }
        Command::Construct {
            kind,
            t,
            r,
            n1,
            n2,
            p,
            q,
            seed,
            out,
        } => {
            let c = match kind {
                ConstructKind::Block => block_coloring(need(t, "t", "block")?, need(r, "r", "block")?)?,
                ConstructKind::Random => random_coloring(
                    need(n1, "n1", "random")?,
                    need(n2, "n2", "random")?,
                    need(r, "r", "random")?,
                    need(seed, "seed", "random")?,
                )?,
                ConstructKind::Star => star_avoiding_coloring(need(p, "p", "star")?, need(q, "q", "star")?)?,
            };
            io.emit(&out, &c.to_text())?;
        }
        Command::Zarankiewicz { m, n, s, t, budget } => {
            let exact = zarankiewicz_exact_with_budget(m, n, s, t, budget)?;
            let bound = crate::bounds::zarankiewicz_bound(m as u64, n as u64, s as u64, t as u64);
            let strict = crate::bounds::zarankiewicz_bound_exceeds(m as u64, n as u64, s as u64, t as u64, exact);
            writeln!(io.stdout, "exact={exact} bound={bound} strict={strict}")?;
        }
        Command::Embed { file, a, b, out } => {
            let c = io.read_coloring(&file)?;
            let e = embed_coloring(&c, a, b)?;
            io.emit(&out, &write_points(&e.config, Some(&e.colors)))?;
        }
        Command::CheckTranslation {
            file,
            patterns,
            a,
            b,
            tol,
        } => {
            let c = io.read_coloring(&file)?;
            let report = verify_translation(&c, patterns.rainbow, patterns.mono, a, b, tol)?;
            write!(io.stdout, "{}", report.to_text())?;
            if !report.passed() {
                return Err(Failure::Usage("translation check failed".into()));
            }
        }
        Command::ExportSat {
            n1,
            n2,
            r,
            patterns,
            out,
        } => {
            if n1 == 0 || n2 == 0 || r == 0 {
                return Err(Failure::Usage("n1, n2 and r must be positive".into()));
            }
            io.emit(&out, &export_cnf(n1, n2, r, patterns.rainbow, patterns.mono).to_dimacs())?;
        }
        Command::DecodeSat { model, n1, n2, r } => {
            let lits = parse_model(&io.read_input(&model)?)?;
            write!(io.stdout, "{}", decode_model(n1, n2, r, &lits)?)?;
        }
        Command::PathProfile { file, i, j } => {
            let c = io.read_coloring(&file)?;
            let p = path_profile(&c, i, j)?;
            let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            writeln!(
                io.stdout,
                "mono_count={} rainbow_cols={} pset={}",
                p.mono_count,
                join(&p.rainbow_cols),
                join(&p.pset)
            )?;
            if let Some(w) = p.degree_witness {
                writeln!(
                    io.stdout,
                    "row={} color={} degree={} bound={}",
                    w.row, w.color, w.degree, w.bound
                )?;
            }
        }
        Command::Sample {
            file,
            pattern,
            d,
            trials,
            seed,
        } => {
            let c = io.read_coloring(&file)?;
            match sample_rainbow(&c, pattern, d, trials, seed)? {
                Some(cert) => writeln!(io.stdout, "{cert}")?,
                None => writeln!(io.stdout, "none")?,
            }
        }
    }
    Ok(())
}
