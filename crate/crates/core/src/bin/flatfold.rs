//! Command-line interface: pattern generation, sampling, chain runs, mixing
//! diagnostics, flip-graph export, the Miura coloring bijection, global
//! foldability checks, and scripted figure scenarios.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rand::Rng;

use flatfold::chain::{self, ChainConfig};
use flatfold::coloring;
use flatfold::error::Error;
use flatfold::families::{self, PatternSpec, TwistMode};
use flatfold::flipgraph;
use flatfold::global;
use flatfold::io::{self, RunManifest};
use flatfold::pattern::{CreasePattern, MvAssignment};
use flatfold::svg::{render_svg, RenderOptions};
use flatfold::vertex;

#[derive(Parser)]
#[command(
    name = "flatfold",
    version,
    about = "Samplers and diagnostics for flat-foldable crease patterns"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    SquareGrid,
    SquareTwist,
    Miura,
    Triangle,
    Kite,
    SingleVertex,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Alternating,
    Uniform,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Hypercube,
    Quotient,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a crease pattern and write it as JSON and/or SVG.
    Gen(GenArgs),
    /// Single-vertex operations on the equal-angle vertex C_{2n}.
    Vertex {
        #[command(subcommand)]
        command: VertexCommand,
    },
    /// Run the face-flip Markov chain.
    Mcmc(McmcArgs),
    /// Exact mixing diagnostics as CSV rows.
    Mix(MixArgs),
    /// Draw exactly uniform samples (square grid only).
    SampleExact(SampleExactArgs),
    /// Enumerate the origami flip graph and optionally run structure checks.
    Ofg(OfgArgs),
    /// Convert between Miura assignments and pinned grid 3-colorings.
    MiuraColor(MiuraColorArgs),
    /// Global flat-foldability operations on square grids.
    Global {
        #[command(subcommand)]
        command: GlobalCommand,
    },
    /// Scripted figure scenarios.
    Figure {
        #[command(subcommand)]
        command: FigureCommand,
    },
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Dimensions: rows cols for grids, n for single-vertex.
    #[arg(long, num_args = 1..=2, required = true)]
    dims: Vec<usize>,
    /// Acute angle parameter in degrees (miura defaults to 60, kite to 30).
    #[arg(long)]
    theta: Option<f64>,
    /// Square-twist tiling mode.
    #[arg(long, value_enum, default_value = "alternating")]
    mode: ModeArg,
    /// Write the pattern JSON here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write an SVG rendering here.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Attach the family's reference assignment instead of "U" entries.
    #[arg(long)]
    with_reference: bool,
    /// Shade face parity in the SVG.
    #[arg(long)]
    shade: bool,
}

#[derive(Subcommand)]
enum VertexCommand {
    /// Draw exact uniform samples, one M/V string per line.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value = "1")]
        count: u64,
        /// Write samples here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the number of locally flat-foldable assignments of C_{2n}.
    Count {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
struct McmcArgs {
    #[arg(long)]
    pattern: PathBuf,
    #[arg(long)]
    steps: u64,
    #[arg(long)]
    seed: Option<u64>,
    /// "reference", "attached", or a path to an assignment file.
    #[arg(long, default_value = "reference")]
    start: String,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    report_every: Option<u64>,
}

#[derive(Args)]
struct MixArgs {
    #[arg(long)]
    pattern: PathBuf,
    /// Total-variation threshold, e.g. "1/4" or "0.01".
    #[arg(long, default_value = "1/4")]
    eps: String,
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct SampleExactArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, num_args = 2)]
    dims: Vec<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value = "1")]
    count: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OfgArgs {
    #[arg(long)]
    pattern: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    check: Option<CheckArg>,
}

#[derive(Args)]
struct MiuraColorArgs {
    #[arg(long)]
    pattern: PathBuf,
    /// Assignment file (M/V string or pattern JSON with assignments).
    #[arg(long, conflicts_with = "coloring")]
    assignment: Option<PathBuf>,
    /// Coloring JSON to invert back to an assignment.
    #[arg(long)]
    coloring: Option<PathBuf>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Subcommand)]
enum GlobalCommand {
    /// Decide global flat-foldability of one assignment.
    Check {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        assignment: PathBuf,
    },
    /// Estimate the probability that a uniform locally flat-foldable
    /// assignment folds globally.
    Prob {
        #[arg(long, num_args = 2)]
        dims: Vec<usize>,
        #[arg(long, default_value = "10000")]
        trials: u64,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Exhaustively count globally flat-foldable assignments.
    Count {
        #[arg(long, num_args = 2)]
        dims: Vec<usize>,
    },
}

#[derive(Subcommand)]
enum FigureCommand {
    /// Face-flip simulation on a triangle lattice, rendered after the run.
    Fig8 {
        #[arg(long, default_value = "50")]
        size: usize,
        /// Step budget; defaults to size^4.
        #[arg(long)]
        steps: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        svg: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn resolve_seed(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(|| rand::thread_rng().gen())
}

fn spec_from_args(
    family: FamilyArg,
    dims: &[usize],
    theta_deg: Option<f64>,
    mode: ModeArg,
) -> Result<PatternSpec, Error> {
    let two = |what: &str| -> Result<(usize, usize), Error> {
        if dims.len() != 2 {
            return Err(Error::InvalidSpec(format!("{what} takes --dims rows cols")));
        }
        Ok((dims[0], dims[1]))
    };
    let theta = |default_deg: f64| theta_deg.unwrap_or(default_deg).to_radians();
    Ok(match family {
        FamilyArg::SquareGrid => {
            let (rows, cols) = two("square-grid")?;
            PatternSpec::SquareGrid { rows, cols }
        }
        FamilyArg::SquareTwist => {
            let (rows, cols) = two("square-twist")?;
            PatternSpec::SquareTwist {
                rows,
                cols,
                mode: match mode {
                    ModeArg::Alternating => TwistMode::Alternating,
                    ModeArg::Uniform => TwistMode::Uniform,
                },
            }
        }
        FamilyArg::Miura => {
            let (rows, cols) = two("miura")?;
            PatternSpec::Miura { rows, cols, theta: theta(60.0) }
        }
        FamilyArg::Triangle => {
            let (rows, cols) = two("triangle")?;
            PatternSpec::Triangle { rows, cols }
        }
        FamilyArg::Kite => {
            let (rows, cols) = two("kite")?;
            PatternSpec::Kite { rows, cols, theta: theta(30.0) }
        }
        FamilyArg::SingleVertex => {
            if dims.len() != 1 {
                return Err(Error::InvalidSpec("single-vertex takes --dims n".into()));
            }
            PatternSpec::SingleVertex { n: dims[0] }
        }
    })
}

fn load_pattern_file(path: &Path) -> Result<(CreasePattern, Option<MvAssignment>), Error> {
    let json = std::fs::read_to_string(path)?;
    io::load_pattern(&json)
}

fn load_assignment(path: &Path, pattern: &CreasePattern) -> Result<MvAssignment, Error> {
    let text = std::fs::read_to_string(path)?;
    let trimmed = text.trim();
    let assignment = if trimmed.starts_with('{') {
        let (_, a) = io::load_pattern(trimmed)?;
        a.ok_or_else(|| Error::MalformedPattern("pattern file carries no assignment".into()))?
    } else {
        trimmed.parse::<MvAssignment>()?
    };
    pattern.assert_covers(&assignment)?;
    Ok(assignment)
}

fn write_output(
    path: &Path,
    contents: &str,
    manifest: Option<&mut RunManifest>,
) -> Result<(), Error> {
    std::fs::write(path, contents)?;
    if let Some(m) = manifest {
        m.record(&path.display().to_string(), contents.as_bytes());
    }
    Ok(())
}

fn finish_manifest(manifest: RunManifest, beside: Option<&Path>) -> Result<(), Error> {
    let json = serde_json::to_string_pretty(&manifest)?;
    match beside {
        Some(path) => {
            let mut m_path = path.as_os_str().to_owned();
            m_path.push(".manifest.json");
            std::fs::write(PathBuf::from(m_path), json)?;
        }
        None => eprintln!("{json}"),
    }
    Ok(())
}

fn parse_eps(text: &str) -> Result<BigRational, Error> {
    let parse_int = |s: &str| -> Result<num_bigint::BigInt, Error> {
        s.trim()
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("cannot parse {s:?} as an integer")))
    };
    if let Some((num, den)) = text.split_once('/') {
        return Ok(BigRational::new(parse_int(num)?, parse_int(den)?));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        let digits = frac.len() as u32;
        let scale = num_bigint::BigInt::from(10u32).pow(digits);
        let whole: num_bigint::BigInt = parse_int(if whole.is_empty() { "0" } else { whole })?;
        let frac: num_bigint::BigInt = parse_int(frac)?;
        return Ok(BigRational::new(whole * &scale + frac, scale));
    }
    Ok(BigRational::from_integer(parse_int(text)?))
}

fn run(cli: Cli) -> Result<(), Error> {
    let argv: Vec<String> = std::env::args().collect();
    match cli.command {
        Command::Gen(args) => {
            let spec = spec_from_args(args.family, &args.dims, args.theta, args.mode)?;
            let pattern = families::generate(spec)?;
            let assignment = if args.with_reference {
                Some(families::reference_assignment(&pattern)?)
            } else {
                None
            };
            let json = io::save_pattern(&pattern, assignment.as_ref());
            if args.out.is_none() && args.svg.is_none() {
                println!("{json}");
            }
            if let Some(path) = &args.out {
                write_output(path, &json, None)?;
            }
            if let Some(path) = &args.svg {
                let svg = render_svg(
                    &pattern,
                    assignment.as_ref(),
                    &RenderOptions { shade_parity: args.shade },
                );
                write_output(path, &svg, None)?;
            }
            Ok(())
        }
        Command::Vertex { command } => match command {
            VertexCommand::Sample { n, seed, count, out } => {
                let seed = resolve_seed(seed);
                let mut manifest = RunManifest::new("vertex sample", argv, seed);
                let mut rng = flatfold::rng::stream(seed, 0);
                let mut lines = String::new();
                for _ in 0..count {
                    let sample = vertex::exact_sample_single_vertex(n, &mut rng);
                    lines.push_str(&sample.to_string());
                    lines.push('\n');
                }
                match &out {
                    Some(path) => write_output(path, &lines, Some(&mut manifest))?,
                    None => print!("{lines}"),
                }
                finish_manifest(manifest, out.as_deref())
            }
            VertexCommand::Count { n } => {
                println!("{}", vertex::count_single_vertex_configs(n));
                Ok(())
            }
        },
        Command::Mcmc(args) => {
            let (pattern, attached) = load_pattern_file(&args.pattern)?;
            let initial = match args.start.as_str() {
                "reference" => families::reference_assignment(&pattern)?,
                "attached" => attached.ok_or_else(|| {
                    Error::MalformedPattern("pattern file carries no assignment".into())
                })?,
                path => load_assignment(Path::new(path), &pattern)?,
            };
            let seed = resolve_seed(args.seed);
            let mut manifest = RunManifest::new("mcmc", argv, seed);
            let trace = chain::run_chain(&ChainConfig {
                pattern: &pattern,
                initial,
                steps: args.steps,
                seed,
                stream: 0,
                report_every: args.report_every,
            })?;
            let json = io::save_pattern(&pattern, Some(&trace.final_state));
            write_output(&args.out, &json, Some(&mut manifest))?;
            println!(
                "steps {} accepted {} acceptance-rate {:.6}",
                args.steps,
                trace.accepted,
                trace.accepted as f64 / args.steps.max(1) as f64
            );
            for (t, accepted) in &trace.reports {
                println!("report step {t} accepted {accepted}");
            }
            finish_manifest(manifest, Some(&args.out))
        }
        Command::Mix(args) => {
            let (pattern, _) = load_pattern_file(&args.pattern)?;
            let eps = parse_eps(&args.eps)?;
            let label = pattern.family().tag().to_string();
            let rows = match chain::mix_row(&pattern, &label, &eps) {
                Ok(row) => vec![row],
                Err(Error::ReducibleChain) => {
                    println!(
                        "diagnostic: the face-flip chain on this pattern is reducible; \
                         no finite mixing time exists"
                    );
                    return Ok(());
                }
                Err(e) => return Err(e),
            };
            let csv = io::mix_rows_to_csv(&rows);
            match &args.csv {
                Some(path) => write_output(path, &csv, None)?,
                None => print!("{csv}"),
            }
            Ok(())
        }
        Command::SampleExact(args) => {
            if !matches!(args.family, FamilyArg::SquareGrid) {
                return Err(Error::InvalidSpec(
                    "exact sampling is available for the square grid only".into(),
                ));
            }
            let (rows, cols) = (args.dims[0], args.dims[1]);
            let seed = resolve_seed(args.seed);
            let mut manifest = RunManifest::new("sample-exact", argv, seed);
            let mut rng = flatfold::rng::stream(seed, 0);
            let mut lines = String::new();
            for _ in 0..args.count {
                let s = chain::exact_sample_square_grid(rows, cols, &mut rng)?;
                lines.push_str(&s.to_string());
                lines.push('\n');
            }
            match &args.out {
                Some(path) => write_output(path, &lines, Some(&mut manifest))?,
                None => print!("{lines}"),
            }
            finish_manifest(manifest, args.out.as_deref())
        }
        Command::Ofg(args) => {
            let (pattern, _) = load_pattern_file(&args.pattern)?;
            let graph = flipgraph::build_flip_graph(&pattern)?;
            let invariants = flipgraph::graph_invariants(&graph);
            println!(
                "states {} components {} connected {} diameter {} bipartite {}",
                invariants.states,
                invariants.components,
                invariants.connected,
                invariants.diameter,
                invariants.bipartite
            );
            if let Some(check) = args.check {
                match check {
                    CheckArg::Hypercube => {
                        let witness = flipgraph::check_hypercube_isomorphism(&graph, &pattern)?;
                        println!("hypercube check passed: d = {}", witness.coordinate_faces.len());
                    }
                    CheckArg::Quotient => {
                        flipgraph::check_quotient_hypercube(&graph, &pattern)?;
                        println!("quotient-hypercube check passed");
                    }
                }
            }
            if let Some(path) = &args.out {
                let json = serde_json::to_string_pretty(&io::graph_to_file(&graph))?;
                write_output(path, &json, None)?;
            }
            Ok(())
        }
        Command::MiuraColor(args) => {
            let (pattern, attached) = load_pattern_file(&args.pattern)?;
            match (&args.assignment, &args.coloring) {
                (_, None) => {
                    let assignment = match &args.assignment {
                        Some(path) => load_assignment(path, &pattern)?,
                        None => attached.ok_or_else(|| {
                            Error::InvalidSpec("provide --assignment or --coloring".into())
                        })?,
                    };
                    let coloring = coloring::mv_to_coloring(&pattern, &assignment)?;
                    let json = serde_json::to_string_pretty(&io::coloring_to_file(&coloring))?;
                    write_output(&args.out, &json, None)
                }
                (None, Some(path)) => {
                    let file: io::ColoringFile =
                        serde_json::from_str(&std::fs::read_to_string(path)?)?;
                    let coloring = io::coloring_from_file(&file)?;
                    let assignment = coloring::coloring_to_mv(&pattern, &coloring)?;
                    let json = io::save_pattern(&pattern, Some(&assignment));
                    write_output(&args.out, &json, None)
                }
                (Some(_), Some(_)) => {
                    Err(Error::InvalidSpec("provide --assignment or --coloring, not both".into()))
                }
            }
        }
        Command::Global { command } => match command {
            GlobalCommand::Check { pattern, assignment } => {
                let (p, _) = load_pattern_file(&pattern)?;
                let a = load_assignment(&assignment, &p)?;
                match global::is_globally_flat_foldable(&p, &a)? {
                    Some(witness) => {
                        let order: Vec<String> =
                            witness.order.iter().map(|f| f.to_string()).collect();
                        println!(
                            "globally flat-foldable; layers bottom to top: {}",
                            order.join(" ")
                        );
                    }
                    None => println!("NOT globally flat-foldable"),
                }
                Ok(())
            }
            GlobalCommand::Prob { dims, trials, seed, csv } => {
                let seed = resolve_seed(seed);
                let mut manifest = RunManifest::new("global prob", argv, seed);
                let mut rng = flatfold::rng::stream(seed, 0);
                let report =
                    global::estimate_global_probability(dims[0], dims[1], trials, &mut rng)?;
                let line = format!(
                    "rows,cols,probability,half_width,mode,trials\n{},{},{:.10},{:.10},{},{}\n",
                    report.rows,
                    report.cols,
                    report.probability,
                    report.half_width,
                    report.mode,
                    report.trials
                );
                match &csv {
                    Some(path) => write_output(path, &line, Some(&mut manifest))?,
                    None => print!("{line}"),
                }
                finish_manifest(manifest, csv.as_deref())
            }
            GlobalCommand::Count { dims } => {
                println!("{}", global::count_global(dims[0], dims[1])?);
                Ok(())
            }
        },
        Command::Figure { command } => match command {
            FigureCommand::Fig8 { size, steps, seed, svg } => {
                let steps = steps.unwrap_or((size as u64).pow(4));
                let seed = resolve_seed(seed);
                let mut manifest = RunManifest::new("figure fig8", argv, seed);
                let pattern =
                    families::generate(PatternSpec::Triangle { rows: size, cols: size })?;
                let initial = families::reference_assignment(&pattern)?;
                let trace = chain::run_chain(&ChainConfig {
                    pattern: &pattern,
                    initial,
                    steps,
                    seed,
                    stream: 0,
                    report_every: None,
                })?;
                let rendered =
                    render_svg(&pattern, Some(&trace.final_state), &RenderOptions::default());
                write_output(&svg, &rendered, Some(&mut manifest))?;
                println!("steps {} accepted {}", steps, trace.accepted);
                finish_manifest(manifest, Some(&svg))
            }
        },
    }
}
