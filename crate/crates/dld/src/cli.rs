use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use disklink::construct::{
    draw_bandwidth, draw_complete_convex, exact_bandwidth_small, min_stretch_factors, rcm_ordering,
    stretch, BandwidthOrdering, StretchFactors,
};
use disklink::generate::{gen_complete, gen_cycle, gen_maximal_planar, gen_star};
use disklink::{draw_planar, draw_plane, verify_drawing, Graph, GridDrawing, PlaneGraph};

use crate::format::{
    parse_drawing, parse_graph, parse_order, parse_rotation, write_drawing, write_graph,
};
use crate::report::ReportDocument;
use crate::svg::render_svg;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "dld", version, about = "Disk-link grid drawings of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a drawing
    #[command(subcommand)]
    Draw(Draw),
    /// Scale a drawing until every vertex keeps distance 1 from non-incident edges
    Stretch {
        #[arg(short = 'i', long = "input")]
        graph: PathBuf,
        #[arg(short, long)]
        drawing: PathBuf,
        #[arg(short = 'x', long, requires = "phi_y")]
        phi_x: Option<i64>,
        #[arg(short = 'y', long, requires = "phi_x")]
        phi_y: Option<i64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Certify a drawing
    Verify {
        #[arg(short = 'i', long = "input")]
        graph: PathBuf,
        #[arg(short, long)]
        drawing: PathBuf,
        /// also check for crossings and overlapping edges
        #[arg(long)]
        planar: bool,
        #[arg(long)]
        json: bool,
    },
    /// Render a drawing as SVG
    Render {
        #[arg(short = 'i', long = "input")]
        graph: PathBuf,
        #[arg(short, long)]
        drawing: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..))]
        scale: u32,
    },
    /// Generate a graph
    Gen {
        kind: GenKind,
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Draw {
    /// Shift-method drawing of a connected planar graph
    Planar {
        #[arg(short = 'i', long = "input")]
        graph: PathBuf,
        /// rotation system to keep instead of computing one
        #[arg(short = 'e', long)]
        embedding: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Convex drawing of the complete graph
    Complete {
        #[arg(short)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Drawing from a bandwidth ordering
    Bandwidth {
        #[arg(short = 'i', long = "input")]
        graph: PathBuf,
        #[command(flatten)]
        method: OrderMethod,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
#[group(multiple = false)]
struct OrderMethod {
    /// file listing the vertices in order
    #[arg(long)]
    order: Option<PathBuf>,
    /// reverse Cuthill-McKee (the default)
    #[arg(long)]
    rcm: bool,
    /// exact minimum bandwidth, small graphs only
    #[arg(long)]
    exact: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GenKind {
    Star,
    Cycle,
    Complete,
    MaximalPlanar,
}

/// Failure carrying its exit code.
struct Failure(i32, String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn read_drawing(path: &Path) -> Result<GridDrawing, Failure> {
    parse_drawing(&read(path)?).map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => {
            fs::write(p, text).map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", p.display())))
        }
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn check_sizes(g: &Graph, d: &GridDrawing) -> Result<(), Failure> {
    if g.n() != d.n() {
        return Err(Failure(
            EXIT_USAGE,
            format!("graph has {} vertices but the drawing {}", g.n(), d.n()),
        ));
    }
    Ok(())
}

/// Drawings for graphs the planar pipeline does not handle.
fn trivial_drawing(n: usize) -> GridDrawing {
    GridDrawing::from_coords(&[(0, 0), (1, 0)][..n])
}

fn draw(cmd: Draw, out: &mut dyn Write) -> Outcome {
    let (d, path) = match cmd {
        Draw::Planar {
            graph,
            embedding,
            output,
        } => {
            let g = read_graph(&graph)?;
            let d = match embedding {
                _ if g.n() < 3 => {
                    if g.n() == 2 && g.m() == 0 {
                        return Err(Failure(
                            EXIT_USAGE,
                            disklink::Error::Disconnected.to_string(),
                        ));
                    }
                    trivial_drawing(g.n())
                }
                Some(e) => {
                    let rot = parse_rotation(&read(&e)?, &g)
                        .map_err(|err| Failure(EXIT_USAGE, format!("{}: {err}", e.display())))?;
                    draw_plane(&PlaneGraph::from_rotation(g, rot, None)?)?.drawing
                }
                None => draw_planar(&g)?.drawing,
            };
            (d, output)
        }
        Draw::Complete { n, output } => {
            let d = if n < 3 {
                trivial_drawing(n)
            } else {
                draw_complete_convex(n)?
            };
            (d, output)
        }
        Draw::Bandwidth {
            graph,
            method,
            output,
        } => {
            let g = read_graph(&graph)?;
            let ord = if let Some(p) = method.order {
                let order = parse_order(&read(&p)?, g.n())
                    .map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", p.display())))?;
                BandwidthOrdering::new(&g, order)?
            } else if method.exact {
                exact_bandwidth_small(&g)?
            } else {
                rcm_ordering(&g)
            };
            (draw_bandwidth(&g, &ord)?, output)
        }
    };
    emit(path.as_deref(), &write_drawing(&d), out)?;
    Ok(EXIT_OK)
}

fn run(cli: Cli, out: &mut dyn Write) -> Outcome {
    match cli.command {
        Command::Draw(cmd) => draw(cmd, out),
        Command::Stretch {
            graph,
            drawing,
            phi_x,
            phi_y,
            output,
        } => {
            let g = read_graph(&graph)?;
            let d = read_drawing(&drawing)?;
            check_sizes(&g, &d)?;
            let f = match (phi_x, phi_y) {
                (Some(phi_x), Some(phi_y)) => StretchFactors { phi_x, phi_y },
                _ => min_stretch_factors(&d, &g)?,
            };
            emit(output.as_deref(), &write_drawing(&stretch(&d, &g, f)?), out)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            graph,
            drawing,
            planar,
            json,
        } => {
            let g = read_graph(&graph)?;
            let d = read_drawing(&drawing)?;
            check_sizes(&g, &d)?;
            let r =
                verify_drawing(&g, &d, planar).map_err(|e| Failure(EXIT_INVALID, e.to_string()))?;
            let doc = ReportDocument::from_report(&r);
            let text = if json {
                doc.to_json() + "\n"
            } else {
                doc.to_text()
            };
            out.write_all(text.as_bytes())?;
            Ok(if doc.valid { EXIT_OK } else { EXIT_INVALID })
        }
        Command::Render {
            graph,
            drawing,
            output,
            scale,
        } => {
            let g = read_graph(&graph)?;
            let d = read_drawing(&drawing)?;
            check_sizes(&g, &d)?;
            emit(output.as_deref(), &render_svg(&g, &d, scale), out)?;
            Ok(EXIT_OK)
        }
        Command::Gen {
            kind,
            n,
            seed,
            output,
        } => {
            let g = match kind {
                GenKind::Star => gen_star(n)?,
                GenKind::Cycle => gen_cycle(n)?,
                GenKind::Complete => gen_complete(n)?,
                GenKind::MaximalPlanar => gen_maximal_planar(n, seed)?,
            };
            emit(output.as_deref(), &write_graph(&g), out)?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs the command line `argv` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the exit code: 0 on success, 1
/// when a drawing fails verification, 2 on usage, input or construction
/// errors.
pub fn cli_main_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match run(cli, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    cli_main_with(
        argv,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
