//! File formats, SVG output and the `dld` command line.

pub mod cli;
pub mod format;
pub mod report;
pub mod svg;

pub use cli::{cli_main, cli_main_with, EXIT_INVALID, EXIT_OK, EXIT_USAGE};
pub use format::{
    parse_drawing, parse_graph, parse_order, parse_rotation, write_drawing, write_graph,
    write_order, write_rotation, ParseError,
};
pub use report::{parse_report, ReportDocument, Witness};
pub use svg::render_svg;
