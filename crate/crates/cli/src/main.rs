//! `slackkit`: slack matrices, slack ideals and realizability certificates
//! from the command line.

mod io;

use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use slackkit::geometry::gale_transform;
use slackkit::scale::{
    contains_flag, dehomogenized_ideal, forest_of, irrationality_certificate, reduced_slack_matrix,
    rehomogenize, set_ones, set_ones_forest, SlackInput,
};
use slackkit::slack::{
    canonical_cofacets, count_minors, graphic_ideal, slack_from_gale_circuits, slack_from_gale_plucker,
    slack_ideal, slack_matrix, specific_slack_matrix, BuiltinMatrix, Object, ScaledSlackMatrix, SlackMatrix,
    SymbolicSlackMatrix,
};
use slackkit::{PointConfiguration, Rational};

use io::{format_ideal, format_indices, format_matrix, format_pattern, format_scaled, format_symbolic, Format};

#[derive(Parser)]
#[command(name = "slackkit", version, about = "Slack matrices, slack ideals and realizability certificates")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Numeric slack matrix of a point configuration.
    SlackMatrix(PointsArgs),
    /// Symbolic slack matrix with one variable per nonzero entry.
    Symbolic(SourceArgs),
    /// Slack ideal: (d+2)-minors saturated by every variable.
    Ideal(IdealArgs),
    /// Gale transform of a point configuration.
    Gale(PointsArgs),
    /// Slack matrix rebuilt from the Gale transform.
    GaleSlack {
        #[command(flatten)]
        points: PointsArgs,
        #[arg(long, value_enum, default_value_t = GaleMethod::Circuits)]
        method: GaleMethod,
    },
    /// Symbolic slack matrix with a spanning forest (or the given variables) set to one.
    Scale(ScaledArgs),
    /// Slack ideal of the scaled matrix.
    Dehomogenize(ScaledIdealArgs),
    /// Slack ideal of the scaled matrix with the forest variables reintroduced.
    Rehomogenize(ScaledIdealArgs),
    /// Column submatrix on a flag plus every non-simplicial facet.
    Reduce {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(short = 'd')]
        d: Option<usize>,
        /// Columns forming the flag; searched for when omitted.
        #[arg(long, value_delimiter = ',')]
        flag_indices: Option<Vec<usize>>,
    },
    /// Whether the given facet columns contain a flag.
    ContainsFlag {
        #[command(flatten)]
        points: PointsArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        columns: Vec<usize>,
    },
    /// Toric ideal of the cycles of the non-incidence graph.
    GraphicIdeal(SourceArgs),
    /// Eliminates all but one variable of the scaled ideal and runs the rational root test.
    Certificate {
        #[command(flatten)]
        scaled: ScaledIdealArgs,
        /// Index of the variable to keep.
        #[arg(long)]
        variable: usize,
    },
    /// Prints a stored support pattern.
    Builtin {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(slackkit::slack::BUILTIN_NAMES))]
        name: String,
    },
    /// Number of (d+2)-minors of a rows × cols matrix.
    CountMinors {
        #[arg(short = 'd')]
        d: usize,
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GaleMethod {
    Circuits,
    Plucker,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectArg {
    Polytope,
    Matroid,
}

impl From<ObjectArg> for Object {
    fn from(o: ObjectArg) -> Self {
        match o {
            ObjectArg::Polytope => Object::Polytope,
            ObjectArg::Matroid => Object::Matroid,
        }
    }
}

#[derive(Args)]
struct PointsArgs {
    /// Point coordinates, one point per row; `-` reads standard input.
    #[arg(long, value_name = "FILE", default_value = "-")]
    vertices: PathBuf,
    #[arg(long, value_enum, default_value_t = ObjectArg::Polytope)]
    object: ObjectArg,
}

#[derive(Args)]
struct SourceArgs {
    /// Point coordinates, one point per row; `-` reads standard input.
    #[arg(long, value_name = "FILE", group = "input")]
    vertices: Option<PathBuf>,
    /// 0/1 support pattern of a slack matrix.
    #[arg(long, value_name = "FILE", group = "input")]
    pattern: Option<PathBuf>,
    /// A stored slack matrix.
    #[arg(long, value_name = "NAME", group = "input",
          value_parser = clap::builder::PossibleValuesParser::new(slackkit::slack::BUILTIN_NAMES))]
    builtin: Option<String>,
    #[arg(long, value_enum, default_value_t = ObjectArg::Polytope)]
    object: ObjectArg,
}

#[derive(Args)]
struct IdealArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Dimension; defaults to that of the points or the stored matrix.
    #[arg(short = 'd')]
    d: Option<usize>,
}

#[derive(Args)]
struct ScaledArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Variables to set to one; they must form a forest.
    #[arg(long, value_delimiter = ',')]
    ones: Option<Vec<usize>>,
}

#[derive(Args)]
struct ScaledIdealArgs {
    #[command(flatten)]
    scaled: ScaledArgs,
    #[arg(short = 'd')]
    d: Option<usize>,
}

/// Exit code 2 for unreadable input and usage errors, 1 for everything the
/// library rejects.
#[derive(Debug)]
enum Failure {
    Input(String),
    Domain(String),
}

impl Failure {
    fn domain(e: impl std::fmt::Display) -> Self {
        Failure::Domain(e.to_string())
    }

    fn input(e: impl std::fmt::Display) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin()).map_err(|e| Failure::Input(format!("stdin: {e}")))
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    }
}

fn read_points(path: &Path) -> Result<PointConfiguration<Rational>, Failure> {
    let text = read(path)?;
    let m = io::parse_matrix(&text, Format::detect(&text)).map_err(Failure::input)?;
    PointConfiguration::new(m).map_err(Failure::domain)
}

/// A slack matrix from any of the accepted sources.
struct Loaded {
    numeric: Option<SlackMatrix<Rational>>,
    symbolic: SymbolicSlackMatrix,
    dim: Option<usize>,
    ones: Option<BTreeSet<usize>>,
}

impl Loaded {
    fn dim(&self, given: Option<usize>) -> Result<usize, Failure> {
        given
            .or(self.dim)
            .ok_or_else(|| Failure::Input("-d is required for pattern input".into()))
    }
}

fn load(source: &SourceArgs) -> Result<Loaded, Failure> {
    if let Some(path) = &source.pattern {
        let text = read(path)?;
        let pattern = io::parse_pattern(&text, Format::detect(&text)).map_err(Failure::input)?;
        let symbolic = SymbolicSlackMatrix::from_pattern(&pattern).map_err(Failure::domain)?;
        return Ok(Loaded { numeric: None, symbolic, dim: None, ones: None });
    }
    if let Some(name) = &source.builtin {
        let b = specific_slack_matrix(name).map_err(Failure::domain)?;
        let ones = match &b.matrix {
            BuiltinMatrix::Scaled(s) => Some(s.ones().clone()),
            _ => None,
        };
        return Ok(Loaded {
            numeric: b.numeric().cloned(),
            symbolic: b.symbolic(),
            dim: Some(b.dim),
            ones,
        });
    }
    let path = source.vertices.clone().unwrap_or_else(|| PathBuf::from("-"));
    let config = read_points(&path)?;
    let s = slack_matrix(&config, source.object.into()).map_err(Failure::domain)?;
    let symbolic = SymbolicSlackMatrix::from_slack(&s).map_err(Failure::domain)?;
    Ok(Loaded {
        numeric: Some(s),
        symbolic,
        dim: Some(config.affine_dim().max(0) as usize),
        ones: None,
    })
}

fn scaled(args: &ScaledArgs) -> Result<(Loaded, ScaledSlackMatrix), Failure> {
    let loaded = load(&args.source)?;
    let ones = args
        .ones
        .as_ref()
        .map(|v| v.iter().copied().collect())
        .or_else(|| loaded.ones.clone());
    let y = match ones {
        Some(ones) => set_ones(&loaded.symbolic, &ones).map_err(Failure::domain)?,
        None => set_ones_forest(&loaded.symbolic).0,
    };
    Ok((loaded, y))
}

fn run(cli: Cli) -> Outcome {
    let format = cli.format;
    match cli.command {
        Command::SlackMatrix(p) => {
            let config = read_points(&p.vertices)?;
            let s = slack_matrix(&config, p.object.into()).map_err(Failure::domain)?;
            Ok(format_matrix(&s.entries, format))
        }
        Command::Symbolic(source) => Ok(format_symbolic(&load(&source)?.symbolic, format)),
        Command::Ideal(args) => {
            let loaded = load(&args.source)?;
            let d = loaded.dim(args.d)?;
            Ok(format_ideal(&slack_ideal(d, &loaded.symbolic), format))
        }
        Command::Gale(p) => {
            let config = read_points(&p.vertices)?;
            let g = gale_transform(&config).map_err(Failure::domain)?;
            Ok(format_matrix(&g.matrix, format))
        }
        Command::GaleSlack { points, method } => {
            let config = read_points(&points.vertices)?;
            let g = gale_transform(&config).map_err(Failure::domain)?;
            let s = match method {
                GaleMethod::Circuits => slack_from_gale_circuits(&g),
                GaleMethod::Plucker => slack_from_gale_plucker(&g, &canonical_cofacets(&g)),
            }
            .map_err(Failure::domain)?;
            Ok(format_matrix(&s.entries, format))
        }
        Command::Scale(args) => {
            let (_, y) = scaled(&args)?;
            let survivors = y.survivors();
            Ok(match format {
                Format::Text => format!(
                    "# ones {}\n# survivors {}\n{}",
                    format_indices(y.ones().iter().copied()),
                    format_indices(survivors),
                    format_scaled(&y, format)
                ),
                Format::Json => json!({
                    "ones": y.ones(),
                    "survivors": survivors,
                    "matrix": serde_json::from_str::<serde_json::Value>(&format_scaled(&y, format)).unwrap(),
                })
                .to_string(),
            })
        }
        Command::Dehomogenize(args) => {
            let (loaded, y) = scaled(&args.scaled)?;
            let d = loaded.dim(args.d)?;
            Ok(format_ideal(&dehomogenized_ideal(d, &y), format))
        }
        Command::Rehomogenize(args) => {
            let (loaded, y) = scaled(&args.scaled)?;
            let d = loaded.dim(args.d)?;
            let forest = forest_of(&y).map_err(Failure::domain)?;
            let de = dehomogenized_ideal(d, &y);
            Ok(format_ideal(&rehomogenize(&de, &y, &forest), format))
        }
        Command::Reduce { source, d, flag_indices } => {
            let loaded = load(&source)?;
            let d = loaded.dim(d)?;
            let input = match &loaded.numeric {
                Some(s) => SlackInput::Numeric(s),
                None => SlackInput::Symbolic(&loaded.symbolic),
            };
            let r = reduced_slack_matrix(d, input, flag_indices.as_deref()).map_err(Failure::domain)?;
            Ok(match format {
                Format::Text => format!(
                    "# columns {}\n# flag {}\n{}",
                    format_indices(r.columns.iter().copied()),
                    format_indices(r.flag.iter().copied()),
                    format_symbolic(&r.matrix, format)
                ),
                Format::Json => json!({
                    "columns": r.columns,
                    "flag": r.flag,
                    "matrix": serde_json::from_str::<serde_json::Value>(&format_symbolic(&r.matrix, format)).unwrap(),
                })
                .to_string(),
            })
        }
        Command::ContainsFlag { points, columns } => {
            let config = read_points(&points.vertices)?;
            let s = slack_matrix(&config, points.object.into()).map_err(Failure::domain)?;
            let found = contains_flag(&columns, &s).map_err(Failure::domain)?;
            Ok(match format {
                Format::Text => found.to_string(),
                Format::Json => json!(found).to_string(),
            })
        }
        Command::GraphicIdeal(source) => Ok(format_ideal(&graphic_ideal(&load(&source)?.symbolic), format)),
        Command::Certificate { scaled: args, variable } => {
            let (loaded, y) = scaled(&args.scaled)?;
            let d = loaded.dim(args.d)?;
            if variable >= y.nvars() {
                return Err(Failure::Domain(format!(
                    "variable x{variable} out of range for {} variables",
                    y.nvars()
                )));
            }
            let c = irrationality_certificate(&dehomogenized_ideal(d, &y), variable);
            Ok(c.to_json().to_string())
        }
        Command::Builtin { name } => {
            let b = specific_slack_matrix(&name).map_err(Failure::domain)?;
            Ok(match &b.matrix {
                BuiltinMatrix::Numeric(s) => format_matrix(&s.entries, format),
                BuiltinMatrix::Symbolic(s) => format_pattern(&pattern_of(s), format),
                BuiltinMatrix::Scaled(s) => format_pattern(&pattern_of(s.base()), format),
            })
        }
        Command::CountMinors { d, rows, cols } => Ok(count_minors(d, rows, cols).to_string()),
    }
}

fn pattern_of(s: &SymbolicSlackMatrix) -> Vec<Vec<bool>> {
    (0..s.rows())
        .map(|i| (0..s.cols()).map(|j| s.var_at(i, j).is_some()).collect())
        .collect()
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("SLACKKIT_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::Input(format!("SLACKKIT_THREADS must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(Failure::input)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli)) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            match writeln!(stdout, "{out}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
                _ => ExitCode::SUCCESS,
            }
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
