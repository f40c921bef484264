//! Subcommand implementations behind the `planepack` binary.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use planepack_core::oracle::{oracle_packing_recheck, oracle_region_agreement};
use planepack_core::{
    classify_dimension, compute_center_region, pack_spanning_trees, radial_order, verify_packing,
    ConvexRegion, Error, PackOptions, PointSet, Violation,
};

use crate::document::PackingDocument;
use crate::generate::{default_span, generate, to_points};
use crate::pointfile::PointFile;
use crate::svg::{render_svg, Scene, SvgOptions};

/// Everything went through.
pub const EXIT_OK: u8 = 0;
/// Bad input: unreadable or malformed files, bad arguments, or points not
/// in general position.
pub const EXIT_INPUT: u8 = 1;
/// A check failed on valid input.
pub const EXIT_CHECK: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "planepack",
    version,
    about = "Edge-disjoint plane spanning trees on planar point sets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Pack floor(n/3) plane spanning trees and print the packing document.
    Pack {
        input: PathBuf,
        /// Seed for centerpoint selection.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Skip verification; the document is marked "skipped".
        #[arg(long)]
        no_verify: bool,
        /// Also draw the packing to this SVG file.
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
    /// Report the center region of a point set.
    Center {
        input: PathBuf,
        /// Cross-check the region against brute-force depth probes.
        #[arg(long)]
        oracle: bool,
    },
    /// Print a reproducible random point file in general position.
    Gen {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Coordinates are drawn from [0, span]; at least n^2 [default: max(n^2, 1000000)].
        #[arg(long)]
        span: Option<u64>,
    },
    /// Re-run all checks on a packing document against its point file.
    Verify { input: PathBuf, document: PathBuf },
    /// Draw a packing document, or the center region when no document is given.
    Render {
        input: PathBuf,
        #[arg(long)]
        document: Option<PathBuf>,
        /// Output path; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Pack {
            input,
            seed,
            no_verify,
            svg,
        } => pack(&input, seed, !no_verify, svg.as_deref()),
        Command::Center { input, oracle } => center(&input, oracle),
        Command::Gen { n, seed, span } => gen(n, seed, span),
        Command::Verify { input, document } => verify(&input, &document),
        Command::Render {
            input,
            document,
            output,
        } => render(&input, document.as_deref(), output.as_deref()),
    };
    let (code, stdout, stderr) = match result {
        Ok(Output {
            code,
            stdout,
            stderr,
        }) => (code, stdout, stderr),
        Err(Failure { code, message }) => (code, String::new(), format!("error: {message}\n")),
    };
    let _ = out.write_all(stdout.as_bytes());
    let _ = err.write_all(stderr.as_bytes());
    code
}

struct Output {
    code: u8,
    stdout: String,
    stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<(PointFile, PointSet), Failure> {
    let file = PointFile::parse(&read(path)?)
        .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    let points = file.point_set();
    Ok((file, points))
}

fn describe_point(file: &PointFile, i: usize) -> String {
    let p = &file.points[i];
    format!("#{i} ({} {}, line {})", p.x, p.y, file.line_of(i))
}

/// Input problems exit with 1; anything else on valid input is a failed
/// check and exits with 2.
fn core_failure(file: &PointFile, e: Error) -> Failure {
    match e {
        Error::NotGeneralPosition(Violation::Collinear(a, b, c)) => input_error(format!(
            "points {}, {}, {} are collinear",
            describe_point(file, a),
            describe_point(file, b),
            describe_point(file, c)
        )),
        Error::NotGeneralPosition(Violation::Duplicate(a, b)) => input_error(format!(
            "points {} and {} coincide",
            describe_point(file, a),
            describe_point(file, b)
        )),
        Error::TooFewPoints { .. } => input_error(e.to_string()),
        other => Failure {
            code: EXIT_CHECK,
            message: other.to_string(),
        },
    }
}

fn pack(input: &Path, seed: u64, verify: bool, svg: Option<&Path>) -> Result<Output, Failure> {
    let (file, points) = load(input)?;
    let packing = pack_spanning_trees(&points, &PackOptions { seed, verify })
        .map_err(|e| core_failure(&file, e))?;
    if let Some(path) = svg {
        write(
            path,
            &render_svg(&points, Scene::Packing(&packing), &SvgOptions::default()),
        )?;
    }
    Ok(Output::ok(
        PackingDocument::from_packing(&packing, seed).emit(),
    ))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn center(input: &Path, oracle: bool) -> Result<Output, Failure> {
    let (file, points) = load(input)?;
    let region = compute_center_region(&points).map_err(|e| core_failure(&file, e))?;
    let report = classify_dimension(&region, &points).map_err(|e| core_failure(&file, e))?;
    let mut text = String::new();
    let mut line = |s: String| {
        text.push_str(&s);
        text.push('\n');
    };
    line(format!("n: {}", points.len()));
    line(format!("alpha: {}", region.alpha));
    line(format!("halfplanes: {}", region.halfplanes.len()));
    line(format!("dimension: {}", report.dimension));
    line(format!("n ≡ 1 (mod 3): {}", yes_no(report.n_is_3k_plus_1)));
    match &region.shape {
        ConvexRegion::Point(p) => {
            line(format!("point: {} {}", p.x, p.y));
            line(format!(
                "point in P: {}",
                yes_no(report.point_in_p == Some(true))
            ));
        }
        shape => {
            line("vertices:".to_string());
            for v in shape.vertices() {
                line(format!("  {} {}", v.x, v.y));
            }
        }
    }
    let mut code = EXIT_OK;
    if oracle {
        let agreement = oracle_region_agreement(&points, &region.shape);
        if agreement.agrees() {
            line(format!("oracle: agree ({} probes)", agreement.probes));
        } else {
            code = EXIT_CHECK;
            line(format!(
                "oracle: {} of {} probes disagree",
                agreement.disagreements.len(),
                agreement.probes
            ));
            for probe in &agreement.disagreements {
                line(format!(
                    "  {} {} expected {}",
                    probe.point.x,
                    probe.point.y,
                    if probe.expect_member {
                        "inside"
                    } else {
                        "outside"
                    }
                ));
            }
        }
    }
    Ok(Output {
        code,
        stdout: text,
        stderr: String::new(),
    })
}

fn gen(n: usize, seed: u64, span: Option<u64>) -> Result<Output, Failure> {
    let span = span.unwrap_or_else(|| default_span(n));
    let coords = generate(n, seed, span).map_err(|e| input_error(e.to_string()))?;
    let mut text = format!("# planepack gen n={n} seed={seed} span={span}\n");
    text.push_str(&PointFile::from_points(to_points(&coords)).emit());
    Ok(Output::ok(text))
}

fn verify(input: &Path, document: &Path) -> Result<Output, Failure> {
    let (file, points) = load(input)?;
    let doc = PackingDocument::parse(&read(document)?)
        .map_err(|e| input_error(format!("{}: {e}", document.display())))?;
    let packing = doc
        .to_packing()
        .map_err(|e| input_error(format!("{}: {e}", document.display())))?;
    points
        .require_general_position()
        .map_err(|e| core_failure(&file, e))?;

    let mut failures: Vec<String> = Vec::new();
    if doc.n != points.len() {
        failures.push(format!(
            "document has n = {}, point file has {}",
            doc.n,
            points.len()
        ));
    }
    let summary = verify_packing(&packing, &points);
    failures.extend(summary.failures.iter().map(ToString::to_string));
    let recheck = oracle_packing_recheck(&packing, &points);
    for (tree, e, f) in &recheck.crossings {
        failures.push(format!("recheck: tree {tree}: edges {e} and {f} cross"));
    }
    for (a, b, (i, j)) in &recheck.duplicates {
        failures.push(format!("recheck: trees {a} and {b} share segment {i}-{j}"));
    }
    if points.len() >= 3 {
        match compute_center_region(&points).and_then(|r| classify_dimension(&r, &points)) {
            Ok(report) if report.dimension != doc.center_dimension => failures.push(format!(
                "center dimension is {}, document says {}",
                report.dimension, doc.center_dimension
            )),
            Ok(_) => {}
            Err(e) => failures.push(e.to_string()),
        }
    }
    if let (Some(order), Some(center)) = (&packing.radial_order, &packing.centerpoint) {
        match radial_order(&points, center) {
            Ok(expected) if expected.order != order.order => {
                failures.push("radial order does not match the centerpoint".to_string())
            }
            Ok(_) => {}
            Err(e) => failures.push(e.to_string()),
        }
    }

    let mut text = format!(
        "trees: {} (expected {})\n",
        summary.tree_count, summary.expected_tree_count
    );
    let code = if failures.is_empty() {
        text.push_str("status: passed\n");
        EXIT_OK
    } else {
        text.push_str("status: failed\n");
        for f in &failures {
            writeln!(text, "  {f}").expect("write to string");
        }
        EXIT_CHECK
    };
    Ok(Output {
        code,
        stdout: text,
        stderr: String::new(),
    })
}

fn render(input: &Path, document: Option<&Path>, output: Option<&Path>) -> Result<Output, Failure> {
    let (file, points) = load(input)?;
    let options = SvgOptions::default();
    let svg = match document {
        Some(path) => {
            let packing = PackingDocument::parse(&read(path)?)
                .and_then(|d| d.to_packing())
                .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
            render_svg(&points, Scene::Packing(&packing), &options)
        }
        None => {
            let region = compute_center_region(&points).map_err(|e| core_failure(&file, e))?;
            render_svg(&points, Scene::Region(&region.shape), &options)
        }
    };
    match output {
        Some(path) => {
            write(path, &svg)?;
            Ok(Output::ok(String::new()))
        }
        None => Ok(Output::ok(svg)),
    }
}
