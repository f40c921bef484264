//! File formats, instance generation, SVG output and the `planepack`
//! command line on top of [`planepack_core`].

pub mod commands;
pub mod document;
pub mod generate;
pub mod pointfile;
pub mod svg;

pub use commands::{run, Cli, Command, EXIT_CHECK, EXIT_INPUT, EXIT_OK};
pub use document::{PackingDocument, Status};
pub use generate::generate;
pub use pointfile::PointFile;
pub use svg::{render_svg, Scene, SvgOptions};
