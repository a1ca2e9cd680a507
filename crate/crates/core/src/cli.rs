//! Command-line front end.
//!
//! Every file written starts with a `#` line echoing the effective
//! configuration (SVG output carries it in an XML comment instead). Exit
//! codes: 0 on success, 1 on usage errors, 2 on data errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::Field;
use crate::clustering::{linear_grid, modularity, sweep, MclParams, Method, SelfLoop, WeightedGraph};
use crate::complex::{build_vr_filtration, count_vr_simplices, Filtration, VertexBirth, VrOptions};
use crate::error::Error;
use crate::ingest::{render_barcode_svg, AssociationCorpus, RenderOptions};
use crate::persistence::{reduce_with, Barcode, ReduceOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "wordtopo",
    version,
    about = "Persistent homology and clustering of word-association networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a Vietoris-Rips filtration and write it as TSV.
    Filtrate(FiltrateArgs),
    /// Compute barcodes (and optionally an SVG plot and representative cycles).
    Persist(PersistArgs),
    /// Print Betti numbers β_0..β_max-dim at one scale.
    Betti(BettiArgs),
    /// Cluster the association graph and report modularity.
    Cluster(ClusterArgs),
    /// Sweep a clustering parameter and tabulate modularity.
    Sweep(SweepArgs),
    /// Render a barcode TSV as SVG.
    Render(RenderArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    /// `word1 <TAB> word2 <TAB> strength`
    Edges,
    /// `stimulus <TAB> response <TAB> count <TAB> total`
    Counts,
    /// `birth <TAB> v0,v1,...` (a precomputed filtration or fixed complex)
    Filtration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BirthArg {
    Zero,
    FirstEdge,
}

impl From<BirthArg> for VertexBirth {
    fn from(b: BirthArg) -> Self {
        match b {
            BirthArg::Zero => VertexBirth::Zero,
            BirthArg::FirstEdge => VertexBirth::FirstEdge,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Threshold,
    Persistence,
    Mcl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LoopArg {
    Unit,
    ColumnMax,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Input file.
    #[arg(long = "in", value_name = "PATH")]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "edges")]
    format: Format,
}

#[derive(Debug, Args)]
struct ComplexArgs {
    /// Highest homology dimension of interest; simplices are built one
    /// dimension higher.
    #[arg(long, default_value_t = 2)]
    max_dim: usize,
    /// Largest scale included in the filtration.
    #[arg(long, default_value_t = 1.0)]
    max_eps: f64,
    #[arg(long, value_enum, default_value = "zero")]
    vertex_birth: BirthArg,
    /// Refuse to build more simplices than this.
    #[arg(long, default_value_t = 50_000_000)]
    budget: usize,
}

#[derive(Debug, Args)]
struct FiltrateArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    complex: ComplexArgs,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct PersistArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    complex: ComplexArgs,
    /// Prime field of coefficients.
    #[arg(long, default_value_t = 2)]
    field: u32,
    /// Barcode TSV (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write an SVG barcode plot.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Also write representative cycles of every interval of dimension ≥ 1.
    #[arg(long)]
    cycles: Option<PathBuf>,
    /// Keep intervals of zero length in the outputs.
    #[arg(long)]
    keep_zero_length: bool,
}

#[derive(Debug, Args)]
struct BettiArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Scale ε at which to evaluate.
    #[arg(long)]
    at: f64,
    #[arg(long, default_value_t = 2)]
    max_dim: usize,
    #[arg(long, value_enum, default_value = "zero")]
    vertex_birth: BirthArg,
    #[arg(long, default_value_t = 2)]
    field: u32,
    #[arg(long, default_value_t = 50_000_000)]
    budget: usize,
}

#[derive(Debug, Args)]
struct MclArgs {
    #[arg(long, default_value_t = 2)]
    expansion: u32,
    #[arg(long, default_value_t = 1e-5)]
    prune: f64,
    #[arg(long, default_value_t = 200)]
    max_iter: usize,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long, value_enum, default_value = "column-max")]
    self_loop: LoopArg,
}

impl MclArgs {
    fn params(&self, inflation: f64) -> MclParams {
        MclParams {
            inflation,
            expansion: self.expansion,
            prune: self.prune,
            max_iter: self.max_iter,
            tol: self.tol,
            self_loop: match self.self_loop {
                LoopArg::Unit => SelfLoop::Unit,
                LoopArg::ColumnMax => SelfLoop::ColumnMax,
            },
        }
    }
}

#[derive(Debug, Args)]
struct ClusterArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum)]
    method: MethodArg,
    /// Scale for threshold clustering.
    #[arg(long)]
    eps: Option<f64>,
    /// Persistence threshold.
    #[arg(long)]
    tau: Option<f64>,
    #[arg(long, default_value_t = 2.0)]
    inflation: f64,
    #[command(flatten)]
    mcl: MclArgs,
    /// Clustering TSV (stdout when omitted; the score then goes to stderr).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum)]
    method: MethodArg,
    /// `a,b,c` or `start:stop:step`. Defaults depend on the method.
    #[arg(long)]
    grid: Option<String>,
    #[command(flatten)]
    mcl: MclArgs,
    /// Worker threads for grid points.
    #[arg(long)]
    jobs: Option<usize>,
    /// Sweep TSV (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct RenderArgs {
    /// Barcode TSV.
    #[arg(long = "in", value_name = "PATH")]
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    max_eps: Option<f64>,
    #[arg(long)]
    keep_zero_length: bool,
    #[arg(long)]
    title: Option<String>,
}

enum Failure {
    Usage(String),
    Data(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonPrimeModulus(_) | Error::InvalidParameter(_) => Failure::Usage(e.to_string()),
            other => Failure::Data(other.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Runs the CLI with process stdout/stderr and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Like [`run`] but with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Filtrate(a) => filtrate(a, out),
        Command::Persist(a) => persist(a, out),
        Command::Betti(a) => betti(a, out),
        Command::Cluster(a) => cluster(a, out, err),
        Command::Sweep(a) => sweep_cmd(a, out),
        Command::Render(a) => render(a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Data(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_DATA
        }
    }
}

fn header(command: &str, fields: &[(&str, String)]) -> String {
    let mut h = format!("# wordtopo {} {command}", env!("CARGO_PKG_VERSION"));
    for (k, v) in fields {
        h.push_str(&format!(" {k}={v}"));
    }
    h.push('\n');
    h
}

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Edges => "edges",
        Format::Counts => "counts",
        Format::Filtration => "filtration",
    }
}

fn open(path: &Path) -> CliResult<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| Failure::Data(format!("cannot read {}: {e}", path.display())))
}

fn with_output<F>(path: Option<&Path>, out: &mut dyn Write, body: F) -> CliResult<()>
where
    F: FnOnce(&mut dyn Write) -> crate::Result<()>,
{
    let io_fail = |p: &Path, e: io::Error| Failure::Data(format!("cannot write {}: {e}", p.display()));
    match path {
        Some(p) => {
            let f = File::create(p).map_err(|e| io_fail(p, e))?;
            let mut w = BufWriter::new(f);
            body(&mut w)?;
            w.flush().map_err(|e| io_fail(p, e))
        }
        None => {
            body(out)?;
            out.flush().map_err(|e| Failure::Data(e.to_string()))
        }
    }
}

fn read_corpus(input: &InputArgs) -> CliResult<AssociationCorpus> {
    let r = open(&input.input)?;
    let corpus = match input.format {
        Format::Edges => AssociationCorpus::parse_edge_list(r),
        Format::Counts => AssociationCorpus::parse_stimulus_counts(r),
        Format::Filtration => {
            return Err(Failure::Usage(
                "this command needs an association graph (--format edges or counts)".into(),
            ))
        }
    };
    corpus.map_err(|e| Failure::Data(format!("{}: {e}", input.input.display())))
}

/// Loads a filtration either directly or by building it from a graph.
fn load_filtration(input: &InputArgs, opts: &VrOptions, budget: usize) -> CliResult<Filtration> {
    match input.format {
        Format::Filtration => {
            let f = Filtration::read_tsv(open(&input.input)?)
                .map_err(|e| Failure::Data(format!("{}: {e}", input.input.display())))?;
            if f.len() > budget {
                return Err(Error::SimplexBudget { budget }.into());
            }
            Ok(f)
        }
        _ => {
            let g = read_corpus(input)?.to_dissimilarity();
            count_vr_simplices(&g, opts, budget)?;
            Ok(build_vr_filtration(&g, opts))
        }
    }
}

fn check_eps(name: &str, eps: f64) -> CliResult<()> {
    if !(0.0..=1.0).contains(&eps) {
        return Err(Failure::Usage(format!("--{name} must be in [0, 1], got {eps}")));
    }
    Ok(())
}

fn field(p: u32) -> CliResult<Field> {
    Field::new(p).map_err(|e| Failure::Usage(e.to_string()))
}

fn vr_options(c: &ComplexArgs) -> CliResult<VrOptions> {
    check_eps("max-eps", c.max_eps)?;
    Ok(VrOptions {
        max_dim: c.max_dim + 1,
        max_eps: c.max_eps,
        vertex_birth: c.vertex_birth.into(),
    })
}

fn complex_fields(input: &InputArgs, c: &ComplexArgs) -> Vec<(&'static str, String)> {
    vec![
        ("in", input.input.display().to_string()),
        ("format", format_name(input.format).into()),
        ("max_dim", c.max_dim.to_string()),
        ("max_eps", c.max_eps.to_string()),
        ("vertex_birth", VertexBirth::from(c.vertex_birth).to_string()),
        ("budget", c.budget.to_string()),
    ]
}

fn filtrate(a: FiltrateArgs, out: &mut dyn Write) -> CliResult<()> {
    let opts = vr_options(&a.complex)?;
    let filt = load_filtration(&a.input, &opts, a.complex.budget)?;
    let h = header("filtrate", &complex_fields(&a.input, &a.complex));
    with_output(a.out.as_deref(), out, |w| {
        w.write_all(h.as_bytes())?;
        filt.write_tsv(w)
    })
}

fn persist(a: PersistArgs, out: &mut dyn Write) -> CliResult<()> {
    let field = field(a.field)?;
    let opts = vr_options(&a.complex)?;
    let filt = load_filtration(&a.input, &opts, a.complex.budget)?;
    let reduced = reduce_with(
        &filt,
        field,
        ReduceOptions {
            track_cycles: a.cycles.is_some(),
        },
    );
    let barcode = reduced.barcode(a.complex.max_dim);

    let mut fields = complex_fields(&a.input, &a.complex);
    fields.push(("field", a.field.to_string()));
    fields.push(("keep_zero_length", a.keep_zero_length.to_string()));
    let h = header("persist", &fields);

    with_output(a.out.as_deref(), out, |w| {
        w.write_all(h.as_bytes())?;
        barcode.write_tsv(w, a.keep_zero_length)
    })?;

    if let Some(path) = &a.svg {
        let svg = render_barcode_svg(
            &barcode,
            &RenderOptions {
                include_zero_length: a.keep_zero_length,
                ..Default::default()
            },
        );
        write_svg(path, &svg, &h)?;
    }

    if let Some(path) = &a.cycles {
        with_output(Some(path), out, |w| {
            w.write_all(h.as_bytes())?;
            for iv in barcode.intervals() {
                if iv.dim == 0 || (iv.is_zero_length() && !a.keep_zero_length) {
                    continue;
                }
                let z = reduced.representative_cycle(iv)?;
                writeln!(w, "# {iv}")?;
                for (s, c) in z.terms() {
                    write!(w, "{}\t{c}\t", iv.dim)?;
                    crate::complex::write_vertex_list(w, s.vertices())?;
                    writeln!(w)?;
                }
            }
            Ok(())
        })?;
    }
    Ok(())
}

/// Inserts the configuration header as an XML comment after the prolog.
fn write_svg(path: &Path, svg: &str, header: &str) -> CliResult<()> {
    let comment = format!("<!-- {} -->\n", header.trim_start_matches("# ").trim_end());
    let (prolog, rest) = svg.split_once('\n').unwrap_or(("", svg));
    let text = format!("{prolog}\n{comment}{rest}");
    std::fs::write(path, text).map_err(|e| Failure::Data(format!("cannot write {}: {e}", path.display())))
}

fn betti(a: BettiArgs, out: &mut dyn Write) -> CliResult<()> {
    let field = field(a.field)?;
    if a.at.is_nan() || a.at < 0.0 {
        return Err(Failure::Usage(format!("--at must be >= 0, got {}", a.at)));
    }
    let opts = VrOptions {
        max_dim: a.max_dim + 1,
        max_eps: a.at.min(1.0),
        vertex_birth: a.vertex_birth.into(),
    };
    let filt = load_filtration(&a.input, &opts, a.budget)?;
    let betti: Vec<String> = (0..=a.max_dim)
        .map(|k| crate::persistence::betti_at(&filt, a.at, k, field).to_string())
        .collect();
    writeln!(out, "{}", betti.join(" ")).map_err(|e| Failure::Data(e.to_string()))
}

fn method(m: MethodArg, mcl: &MclArgs, inflation: f64) -> Method {
    match m {
        MethodArg::Threshold => Method::Threshold,
        MethodArg::Persistence => Method::Persistence,
        MethodArg::Mcl => Method::Mcl(mcl.params(inflation)),
    }
}

fn mcl_fields(m: &MclArgs) -> Vec<(&'static str, String)> {
    vec![
        ("expansion", m.expansion.to_string()),
        ("prune", m.prune.to_string()),
        ("max_iter", m.max_iter.to_string()),
        ("tol", m.tol.to_string()),
        ("self_loop", format!("{:?}", m.self_loop).to_lowercase()),
    ]
}

fn cluster(a: ClusterArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    let (param, name, extra) = match a.method {
        MethodArg::Threshold => {
            let eps = a
                .eps
                .ok_or_else(|| Failure::Usage("--eps is required for threshold".into()))?;
            check_eps("eps", eps)?;
            (eps, "eps", vec![])
        }
        MethodArg::Persistence => {
            let tau = a
                .tau
                .ok_or_else(|| Failure::Usage("--tau is required for persistence".into()))?;
            if tau.is_nan() || tau < 0.0 {
                return Err(Failure::Usage(format!("--tau must be >= 0, got {tau}")));
            }
            (tau, "tau", vec![])
        }
        MethodArg::Mcl => (a.inflation, "inflation", mcl_fields(&a.mcl)),
    };
    let corpus = read_corpus(&a.input)?;
    let g: WeightedGraph = corpus.to_weighted_graph();
    let m = method(a.method, &a.mcl, a.inflation);
    let (c, converged) = m.cluster(&g, param)?;
    let q = modularity(&g, &c)?;

    let mut fields = vec![
        ("in", a.input.input.display().to_string()),
        ("format", format_name(a.input.format).into()),
        ("method", m.name().into()),
        (name, param.to_string()),
    ];
    fields.extend(extra);
    let h = header("cluster", &fields);
    let to_file = a.out.is_some();
    with_output(a.out.as_deref(), out, |w| {
        w.write_all(h.as_bytes())?;
        c.write_tsv(w, corpus.words())
    })?;

    let mut summary = format!("Q={q} clusters={}", c.cluster_count());
    if let MethodArg::Mcl = a.method {
        summary.push_str(&format!(" converged={converged}"));
    }
    let sink: &mut dyn Write = if to_file { out } else { err };
    writeln!(sink, "{summary}").map_err(|e| Failure::Data(e.to_string()))
}

/// Parses `a,b,c` or `start:stop:step`.
pub fn parse_grid(text: &str) -> crate::Result<Vec<f64>> {
    let bad = || Error::InvalidParameter(format!("bad grid `{text}`"));
    if text.contains(':') {
        let parts: Vec<f64> = text
            .split(':')
            .map(|p| p.trim().parse::<f64>().map_err(|_| bad()))
            .collect::<crate::Result<_>>()?;
        let [start, stop, step] = parts[..] else {
            return Err(bad());
        };
        return linear_grid(start, stop, step);
    }
    let grid: Vec<f64> = text
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(bad)
        })
        .collect::<crate::Result<_>>()?;
    if grid.is_empty() {
        return Err(bad());
    }
    Ok(grid)
}

fn sweep_cmd(a: SweepArgs, out: &mut dyn Write) -> CliResult<()> {
    let grid = a.grid.as_deref().map(parse_grid).transpose()?;
    let m = method(a.method, &a.mcl, 2.0);
    if let Some(grid) = &grid {
        let ok = match a.method {
            MethodArg::Threshold => grid.iter().all(|x| (0.0..=1.0).contains(x)),
            MethodArg::Persistence => grid.iter().all(|&x| x >= 0.0),
            MethodArg::Mcl => grid.iter().all(|&x| x > 1.0),
        };
        if !ok {
            return Err(Failure::Usage(format!(
                "grid values out of range for {}",
                m.name()
            )));
        }
    }
    if a.jobs == Some(0) {
        return Err(Failure::Usage("--jobs must be positive".into()));
    }
    let g = read_corpus(&a.input)?.to_weighted_graph();
    let grid = grid.unwrap_or_else(|| m.default_grid(&g));
    let table = sweep(&g, m, &grid, a.jobs)?;

    let mut fields = vec![
        ("in", a.input.input.display().to_string()),
        ("format", format_name(a.input.format).into()),
        ("method", m.name().into()),
        ("grid", a.grid.clone().unwrap_or_else(|| "default".into())),
        ("points", grid.len().to_string()),
    ];
    if let MethodArg::Mcl = a.method {
        fields.extend(mcl_fields(&a.mcl));
    }
    let h = header("sweep", &fields);
    with_output(a.out.as_deref(), out, |w| {
        w.write_all(h.as_bytes())?;
        writeln!(w, "# param\tQ\tclusters")?;
        table.write_tsv(w)
    })
}

fn render(a: RenderArgs, out: &mut dyn Write) -> CliResult<()> {
    let barcode = Barcode::read_tsv(open(&a.input)?)
        .map_err(|e| Failure::Data(format!("{}: {e}", a.input.display())))?;
    let opts = RenderOptions {
        max_eps: a.max_eps,
        include_zero_length: a.keep_zero_length,
        title: a.title.clone(),
        ..Default::default()
    };
    let svg = render_barcode_svg(&barcode, &opts);
    let h = header(
        "render",
        &[
            ("in", a.input.display().to_string()),
            ("max_eps", a.max_eps.map_or("auto".into(), |x| x.to_string())),
            ("keep_zero_length", a.keep_zero_length.to_string()),
        ],
    );
    match &a.out {
        Some(p) => write_svg(p, &svg, &h),
        None => out
            .write_all(svg.as_bytes())
            .map_err(|e| Failure::Data(e.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_specs() {
        assert_eq!(parse_grid("0.1, 0.2,0.5").unwrap(), vec![0.1, 0.2, 0.5]);
        assert_eq!(parse_grid("1.2:1.3:0.05").unwrap(), vec![1.2, 1.25, 1.3]);
        for bad in ["", "a,b", "1:2", "1:2:3:4", "2:1:0.1", "0:1:0", "nan"] {
            assert!(parse_grid(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn usage_errors_exit_one() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        assert_eq!(
            run_with(["wordtopo", "frobnicate"], &mut out, &mut err),
            EXIT_USAGE
        );
        assert_eq!(
            run_with(["wordtopo", "betti", "--bogus"], &mut out, &mut err),
            EXIT_USAGE
        );
        assert_eq!(run_with(["wordtopo", "--version"], &mut out, &mut err), EXIT_OK);
        assert!(String::from_utf8_lossy(&out).contains(env!("CARGO_PKG_VERSION")));
    }

    #[test]
    fn missing_input_is_data_error() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(
            ["wordtopo", "betti", "--in", "/nonexistent/x.tsv", "--at", "0.5"],
            &mut out,
            &mut err,
        );
        assert_eq!(code, EXIT_DATA);
        assert!(String::from_utf8_lossy(&err).contains("cannot read"));
    }
}
