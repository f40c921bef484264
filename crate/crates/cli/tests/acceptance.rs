//! Acceptance run. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::Instant;

use planepack_cli::{generate::to_points, run, PackingDocument, PointFile, Status, EXIT_OK};
use planepack_core::geometry::{int, ratio};
use planepack_core::oracle::{oracle_min_halfplane_count, oracle_region_agreement, region_probes};
use planepack_core::{
    check_lemma1, classify_dimension, compute_center_region, depth_threshold, is_general_position,
    min_halfplane_count, Point2, PointSet, Scalar,
};
use tempfile::TempDir;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(problems: &[String], summary: String) -> Self {
        if problems.is_empty() {
            Self {
                pass: true,
                detail: summary,
            }
        } else {
            let mut detail = format!("{summary}; {} problem(s): ", problems.len());
            detail.push_str(
                &problems
                    .iter()
                    .take(5)
                    .cloned()
                    .collect::<Vec<_>>()
                    .join(" | "),
            );
            Self {
                pass: false,
                detail,
            }
        }
    }
}

fn cli(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("planepack").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("utf-8 stdout"),
        String::from_utf8(err).expect("utf-8 stderr"),
    )
}

fn binary(args: &[&str]) -> (Option<i32>, Vec<u8>) {
    let output = Command::new(env!("CARGO_BIN_EXE_planepack"))
        .args(args)
        .output()
        .expect("spawn planepack");
    (output.status.code(), output.stdout)
}

fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf-8 temp path")
}

fn centerpoint(doc: &PackingDocument) -> Option<Point2> {
    let c = doc.centerpoint.as_ref()?;
    Some(Point2::new(
        c.x.parse::<Scalar>().ok()?,
        c.y.parse::<Scalar>().ok()?,
    ))
}

struct Instance {
    n: usize,
    seed: u64,
    points: PointSet,
    doc: Option<PackingDocument>,
}

/// 100 instances per residue of n mod 3, n in 6..=60, three span regimes.
fn generated_instances(dir: &Path) -> (Vec<Instance>, Vec<String>) {
    let mut instances = Vec::new();
    let mut problems = Vec::new();
    for residue in 0..3 {
        let sizes: Vec<usize> = (6..=60).filter(|n| n % 3 == residue).collect();
        for j in 0..100 {
            let n = sizes[j % sizes.len()];
            let seed = (1000 * residue + j) as u64;
            let span = (n * n) as u64 * [1, 10, 1000][j % 3];
            let (code, text, err) = cli(&[
                "gen",
                &n.to_string(),
                "--seed",
                &seed.to_string(),
                "--span",
                &span.to_string(),
            ]);
            if code != EXIT_OK {
                problems.push(format!("gen n={n} seed={seed}: exit {code}: {err}"));
                continue;
            }
            let file: PathBuf = dir.join(format!("r{residue}-{j}.txt"));
            std::fs::write(&file, &text).expect("write instance");
            let points = PointFile::parse(&text)
                .expect("generated file parses")
                .point_set();
            let (code, out, err) = cli(&["pack", path_str(&file)]);
            let doc = if code == EXIT_OK {
                PackingDocument::parse(&out).ok()
            } else {
                problems.push(format!(
                    "pack n={n} seed={seed}: exit {code}: {}",
                    err.trim()
                ));
                None
            };
            instances.push(Instance {
                n,
                seed,
                points,
                doc,
            });
        }
    }
    (instances, problems)
}

fn criterion_packing_count(instances: &[Instance], setup: &[String]) -> Outcome {
    let mut problems = setup.to_vec();
    let mut per_residue = [0usize; 3];
    for inst in instances {
        let Some(doc) = &inst.doc else { continue };
        let v = &doc.verification;
        if doc.trees.len() != inst.n / 3 {
            problems.push(format!(
                "n={} seed={}: {} trees",
                inst.n,
                inst.seed,
                doc.trees.len()
            ));
        } else if v.status != Status::Passed || !v.failures.is_empty() || !v.centerpoint_checked {
            problems.push(format!(
                "n={} seed={}: verification {:?}",
                inst.n, inst.seed, v.status
            ));
        } else {
            per_residue[inst.n % 3] += 1;
        }
    }
    Outcome::new(
        &problems,
        format!(
            "{} instances packed and verified (residue 0/1/2: {}/{}/{})",
            per_residue.iter().sum::<usize>(),
            per_residue[0],
            per_residue[1],
            per_residue[2]
        ),
    )
}

fn criterion_line_counts(instances: &[Instance]) -> Outcome {
    let mut problems = Vec::new();
    let mut checked = 0;
    for inst in instances {
        let Some(c) = inst.doc.as_ref().and_then(centerpoint) else {
            problems.push(format!("n={} seed={}: no centerpoint", inst.n, inst.seed));
            continue;
        };
        match check_lemma1(&c, &inst.points) {
            Ok(()) => checked += 1,
            Err(w) => problems.push(format!("n={} seed={}: {w:?}", inst.n, inst.seed)),
        }
    }
    let mut hull_checked = 0;
    for j in 0..50 {
        let n = 90 + j;
        let coords =
            planepack_cli::generate(n, 7000 + j as u64, (n * n) as u64 * 100).expect("generator");
        let points = PointSet::from_ints(&coords);
        // The lexicographically smallest point is a hull vertex.
        let vertex = points.points().iter().min().expect("nonempty").clone();
        let depth = min_halfplane_count(&vertex, &points);
        if depth < depth_threshold(n) {
            hull_checked += 1;
        } else {
            problems.push(format!("hull vertex of n={n} has depth {depth}"));
        }
    }
    Outcome::new(
        &problems,
        format!("{checked} centerpoints pass check_lemma1; {hull_checked} hull vertices fall below ceil(n/3)"),
    )
}

fn pts(coords: &[(i64, i64)]) -> Vec<Point2> {
    to_points(coords)
}

/// Origin plus three clusters of `m` points around directions 90, 210 and
/// 330 degrees.
fn three_clusters(m: usize, jitter: i64) -> Vec<Point2> {
    let bases = [(0, 1000), (-866, -500), (866, -500)];
    let mut coords = vec![(0, 0)];
    for (j, &(bx, by)) in bases.iter().enumerate() {
        for t in 0..m as i64 {
            coords.push((bx + t * jitter, by + t * t + j as i64));
        }
    }
    pts(&coords)
}

/// General-position sets that come close to degeneracy: nearly collinear
/// runs, cocircular points, tight clusters, and single-point centers.
fn near_degenerate_fixtures() -> Vec<(String, Vec<Point2>)> {
    let mut out: Vec<(String, Vec<Point2>)> = Vec::new();
    out.push((
        "seven-point star".into(),
        pts(&[(0, 0), (5, 1), (6, -1), (-4, 4), (-6, 3), (-1, -5), (1, -6)]),
    ));
    out.push((
        "hexagon".into(),
        pts(&[(4, 0), (2, 3), (-2, 3), (-4, 0), (-2, -3), (2, -3)]),
    ));
    for n in [6i64, 7, 8, 13] {
        out.push((
            format!("flat parabola n={n}"),
            (0..n)
                .map(|i| Point2::new(int(i), ratio(i * i, 1_000_000)))
                .collect(),
        ));
    }
    for n in [9i64, 10] {
        out.push((
            format!("cubic n={n}"),
            (1..=n).map(|i| Point2::from_ints(i, i * i * i)).collect(),
        ));
    }
    out.push((
        "circle radius 5".into(),
        pts(&[
            (5, 0),
            (4, 3),
            (3, 4),
            (0, 5),
            (-3, 4),
            (-4, 3),
            (-5, 0),
            (-4, -3),
            (-3, -4),
            (0, -5),
            (3, -4),
            (4, -3),
        ]),
    ));
    for m in [2, 3, 4] {
        out.push((
            format!("three clusters n={}", 3 * m + 1),
            three_clusters(m, 1),
        ));
    }
    out.push(("three wide clusters n=10".into(), three_clusters(3, 40)));
    for n in [10i64, 11] {
        let half = n / 2;
        let mut p: Vec<Point2> = (0..half)
            .map(|i| Point2::new(int(i), ratio(i * i, 1_000_000_000)))
            .collect();
        p.extend((0..n - half).map(|i| {
            Point2::new(
                ratio(2 * i + 1, 2),
                Scalar::from_integer(1.into()) - ratio(i * i, 1_000_000_000),
            )
        }));
        out.push((format!("two flat parabolas n={n}"), p));
    }
    out.push((
        "sheared flat parabola n=9".into(),
        (0..9i64)
            .map(|i| Point2::new(int(i), int(i) + ratio(i * i, 1_000_000_000_000)))
            .collect(),
    ));
    out.push((
        "heptagon with hub n=8".into(),
        pts(&[
            (0, 0),
            (1000, 0),
            (623, 782),
            (-223, 975),
            (-901, 434),
            (-901, -434),
            (-223, -975),
            (623, -782),
        ]),
    ));
    out.push((
        "nonagon with hub n=10".into(),
        pts(&[
            (1, 1),
            (1000, 0),
            (766, 643),
            (174, 985),
            (-500, 866),
            (-940, 342),
            (-940, -342),
            (-500, -866),
            (174, -985),
            (766, -643),
        ]),
    ));
    out.push((
        "near-0-dim offset hub n=7".into(),
        pts(&[
            (1, 0),
            (5000, 1),
            (6000, -1),
            (-4000, 4000),
            (-6000, 3000),
            (-1000, -5000),
            (1000, -6000),
        ]),
    ));
    out.push((
        "large coordinates n=7".into(),
        pts(&[
            (0, 0),
            (5 << 40, 1),
            (6 << 40, -1),
            (-(4 << 40), 4 << 40),
            (-(6 << 40), 3 << 40),
            (-(1 << 40), -(5 << 40)),
            (1 << 40, -(6 << 40)),
        ]),
    ));
    out
}

fn criterion_dimension(instances: &[Instance]) -> Outcome {
    let mut problems = Vec::new();
    let mut dims: BTreeMap<u8, usize> = BTreeMap::new();
    let mut sets: Vec<(String, PointSet)> = instances
        .iter()
        .map(|i| {
            (
                format!("generated n={} seed={}", i.n, i.seed),
                i.points.clone(),
            )
        })
        .collect();
    let fixtures = near_degenerate_fixtures();
    let fixture_count = fixtures.len();
    for (name, p) in fixtures {
        let set = PointSet::new(p);
        if let Err(v) = is_general_position(&set) {
            problems.push(format!("fixture {name} is not in general position: {v}"));
            continue;
        }
        sets.push((name, set));
    }
    for (name, points) in &sets {
        let n = points.len();
        let outcome = compute_center_region(points)
            .and_then(|r| classify_dimension(&r, points).map(|d| (r, d)));
        match outcome {
            Ok((region, report)) => {
                *dims.entry(report.dimension).or_default() += 1;
                match report.dimension {
                    2 => {}
                    0 => {
                        let in_p = region
                            .shape
                            .vertices()
                            .first()
                            .is_some_and(|c| points.index_of(c).is_some());
                        if !in_p || n % 3 != 1 {
                            problems.push(format!(
                                "{name}: single-point center with in_p={in_p}, n={n}"
                            ));
                        }
                    }
                    d => problems.push(format!("{name}: dimension {d}")),
                }
            }
            Err(e) => problems.push(format!("{name}: {e}")),
        }
    }
    let summary = dims
        .iter()
        .map(|(d, c)| format!("dim {d}: {c}"))
        .collect::<Vec<_>>()
        .join(", ");
    Outcome::new(
        &problems,
        format!(
            "{} sets ({fixture_count} handcrafted); {summary}",
            sets.len()
        ),
    )
}

fn criterion_oracle(instances: &[Instance]) -> Outcome {
    let mut problems = Vec::new();
    let mut sets: Vec<(String, PointSet)> = (0..600u64)
        .map(|seed| {
            let n = 3 + (seed % 10) as usize;
            let span = (n * n) as u64 * if seed % 2 == 0 { 1 } else { 50 };
            let coords = planepack_cli::generate(n, 9000 + seed, span).expect("generator");
            (
                format!("n={n} seed={}", 9000 + seed),
                PointSet::from_ints(&coords),
            )
        })
        .collect();
    sets.extend(
        instances
            .iter()
            .filter(|i| i.n <= 12)
            .map(|i| (format!("n={} seed={}", i.n, i.seed), i.points.clone())),
    );
    sets.extend(
        near_degenerate_fixtures()
            .into_iter()
            .filter(|(_, p)| p.len() <= 12)
            .map(|(name, p)| (name, PointSet::new(p))),
    );
    let mut probes = 0;
    for (name, points) in &sets {
        let region = match compute_center_region(points) {
            Ok(r) => r,
            Err(e) => {
                problems.push(format!("{name}: {e}"));
                continue;
            }
        };
        let agreement = oracle_region_agreement(points, &region.shape);
        if !agreement.agrees() {
            problems.push(format!(
                "{name}: {} of {} probes disagree",
                agreement.disagreements.len(),
                agreement.probes
            ));
        }
        for probe in region_probes(&region.shape, points) {
            probes += 1;
            let fast = min_halfplane_count(&probe.point, points);
            let slow = oracle_min_halfplane_count(&probe.point, points);
            if fast != slow {
                problems.push(format!(
                    "{name}: depth at {} is {fast}, oracle says {slow}",
                    probe.point
                ));
            }
        }
    }
    Outcome::new(
        &problems,
        format!(
            "{} sets with n <= 12, {probes} probes compared with the oracle",
            sets.len()
        ),
    )
}

fn criterion_golden(dir: &Path) -> Outcome {
    let mut problems = Vec::new();

    let hexagon = dir.join("hexagon.txt");
    std::fs::write(&hexagon, "4 0\n2 3\n-2 3\n-4 0\n-2 -3\n2 -3\n").expect("write");
    let (code, out, err) = cli(&["pack", path_str(&hexagon)]);
    match (code, PackingDocument::parse(&out)) {
        (EXIT_OK, Ok(doc)) => {
            // Radial positions are 1-based.
            let expected: [&[(usize, usize)]; 2] = [
                &[(1, 2), (1, 3), (3, 4), (3, 5), (5, 6)],
                &[(2, 3), (2, 4), (4, 5), (4, 6), (6, 1)],
            ];
            let order = doc.radial_order.clone().unwrap_or_default();
            let matches = order.len() == 6
                && doc.trees.len() == 2
                && (0..6).any(|shift| {
                    let at = |pos: usize| order[(pos - 1 + shift) % 6];
                    doc.trees.iter().zip(expected).all(|(tree, schema)| {
                        let mut got = tree.edges.clone();
                        let mut want: Vec<[usize; 2]> =
                            schema.iter().map(|&(t, h)| [at(t), at(h)]).collect();
                        got.sort();
                        want.sort();
                        got == want
                    })
                });
            if !matches {
                problems.push(format!(
                    "hexagon trees {:?} with order {order:?} do not match the schema",
                    doc.trees
                ));
            }
        }
        (code, _) => problems.push(format!("hexagon: exit {code}: {}", err.trim())),
    }

    let triangle = dir.join("triangle.txt");
    std::fs::write(&triangle, "0 0\n4 0\n1 3\n").expect("write");
    let (code, out, err) = cli(&["pack", path_str(&triangle)]);
    match PackingDocument::parse(&out) {
        Ok(doc) if code == EXIT_OK && doc.trees.len() == 1 && doc.trees[0].edges.len() == 2 => {}
        _ => problems.push(format!("triangle: exit {code}: {}", err.trim())),
    }

    let seven =
        PointSet::from_ints(&[(0, 0), (5, 1), (6, -1), (-4, 4), (-6, 3), (-1, -5), (1, -6)]);
    let origin = Point2::from_ints(0, 0);
    let depth = min_halfplane_count(&origin, &seven);
    let oracle_depth = oracle_min_halfplane_count(&origin, &seven);
    if depth != 3 || oracle_depth != 3 || depth < depth_threshold(7) {
        problems.push(format!(
            "seven-point set: depth {depth}, oracle {oracle_depth}"
        ));
    }
    Outcome::new(
        &problems,
        "hexagon matches the residue-0 schema, triangle gives 1 tree, seven-point origin has depth 3".into(),
    )
}

fn criterion_determinism(dir: &Path) -> Outcome {
    let mut problems = Vec::new();
    let (c1, g1) = binary(&["gen", "40", "--seed", "11", "--span", "1600"]);
    let (c2, g2) = binary(&["gen", "40", "--seed", "11", "--span", "1600"]);
    if c1 != Some(0) || c2 != Some(0) || g1 != g2 {
        problems.push("gen output differs between runs".into());
    }
    let file = dir.join("det.txt");
    std::fs::write(&file, &g1).expect("write");
    for seed in ["0", "5"] {
        let (c1, d1) = binary(&["pack", path_str(&file), "--seed", seed]);
        let (c2, d2) = binary(&["pack", path_str(&file), "--seed", seed]);
        if c1 != Some(0) || c2 != Some(0) || d1 != d2 || d1.is_empty() {
            problems.push(format!("pack --seed {seed} output differs between runs"));
        }
    }
    Outcome::new(
        &problems,
        "gen and pack outputs are byte-identical across runs".into(),
    )
}

fn main() -> ExitCode {
    let dir = TempDir::new().expect("temp dir");
    let mut results: Vec<(&str, Outcome, f64)> = Vec::new();

    let start = Instant::now();
    let (instances, setup) = generated_instances(dir.path());
    let outcome = criterion_packing_count(&instances, &setup);
    results.push(("1 packing count", outcome, start.elapsed().as_secs_f64()));

    let timed = |f: &dyn Fn() -> Outcome| {
        let start = Instant::now();
        let outcome = f();
        (outcome, start.elapsed().as_secs_f64())
    };
    let (o, t) = timed(&|| criterion_line_counts(&instances));
    results.push(("2 line counts through centerpoints", o, t));
    let (o, t) = timed(&|| criterion_dimension(&instances));
    results.push(("3 center dimension 0 or 2", o, t));
    let (o, t) = timed(&|| criterion_oracle(&instances));
    results.push(("4 oracle equivalence", o, t));
    let (o, t) = timed(&|| criterion_golden(dir.path()));
    results.push(("5 golden fixtures", o, t));
    let (o, t) = timed(&|| criterion_determinism(dir.path()));
    results.push(("6 determinism", o, t));

    println!();
    let mut failed = 0;
    for (name, outcome, secs) in &results {
        let tag = if outcome.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!outcome.pass);
        println!("[{tag}] criterion {name}: {} ({secs:.1} s)", outcome.detail);
    }
    println!(
        "acceptance: {} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
