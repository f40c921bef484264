//! End-to-end runs of the `planepack` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use planepack_cli::{PackingDocument, PointFile, Status};
use tempfile::TempDir;

const HEXAGON: &str = "4 0\n2 3\n-2 3\n-4 0\n-2 -3\n2 -3\n";
const SEVEN: &str = "0 0\n5 1\n6 -1\n-4 4\n-6 3\n-1 -5\n1 -6\n";
const TRIANGLE: &str = "0 0\n4 0\n1 3\n";

fn planepack(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_planepack"))
        .args(args)
        .output()
        .expect("spawn planepack")
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn pack_hexagon() {
    let dir = TempDir::new().unwrap();
    let input = file(&dir, "hex.txt", HEXAGON);
    let out = planepack(&["pack", s(&input)]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc = PackingDocument::parse(&stdout(&out)).unwrap();
    assert_eq!(doc.n, 6);
    assert_eq!(doc.trees.len(), 2);
    assert_eq!(doc.center_dimension, 2);
    assert_eq!(doc.verification.status, Status::Passed);
}

#[test]
fn collinear_input_names_the_triple() {
    let dir = TempDir::new().unwrap();
    let input = file(&dir, "bad.txt", "# header\n0 0\n3 1\n1 1\n2 2\n");
    let out = planepack(&["pack", s(&input)]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("collinear"), "{err}");
    assert!(err.contains("#0 (0 0, line 2)"), "{err}");
    assert!(err.contains("#2 (1 1, line 4)"), "{err}");
    assert!(err.contains("#3 (2 2, line 5)"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn malformed_and_missing_input_exit_1() {
    let dir = TempDir::new().unwrap();
    let dup = file(&dir, "dup.txt", "0 0\n1 0\n0.0 0/5\n");
    let out = planepack(&["pack", s(&dup)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 3"));
    let out = planepack(&["pack", s(&dir.path().join("missing.txt"))]);
    assert_eq!(out.status.code(), Some(1));
    let two = file(&dir, "two.txt", "0 0\n1 0\n");
    assert_eq!(planepack(&["pack", s(&two)]).status.code(), Some(1));
    assert_eq!(planepack(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn no_verify_gives_same_trees_marked_skipped() {
    let dir = TempDir::new().unwrap();
    let input = file(&dir, "seven.txt", SEVEN);
    let checked = PackingDocument::parse(&stdout(&planepack(&["pack", s(&input)]))).unwrap();
    let out = planepack(&["pack", s(&input), "--no-verify"]);
    assert_eq!(out.status.code(), Some(0));
    let skipped = PackingDocument::parse(&stdout(&out)).unwrap();
    assert_eq!(skipped.trees, checked.trees);
    assert_eq!(skipped.verification.status, Status::Skipped);
}

#[test]
fn verify_accepts_own_output_and_rejects_tampering() {
    let dir = TempDir::new().unwrap();
    let gen = planepack(&["gen", "25", "--seed", "3", "--span", "625"]);
    let input = file(&dir, "pts.txt", &stdout(&gen));
    let doc_text = stdout(&planepack(&["pack", s(&input), "--seed", "2"]));
    let doc_path = file(&dir, "doc.json", &doc_text);
    let out = planepack(&["verify", s(&input), s(&doc_path)]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("status: passed"));

    // Give tree 1 an edge of tree 0.
    let mut doc = PackingDocument::parse(&doc_text).unwrap();
    let stolen = doc.trees[0].edges[0];
    doc.trees[1].edges[0] = stolen;
    let bad = file(&dir, "bad.json", &doc.emit());
    let out = planepack(&["verify", s(&input), s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("status: failed"));

    // Drop a tree.
    let mut doc = PackingDocument::parse(&doc_text).unwrap();
    doc.trees.pop();
    let short = file(&dir, "short.json", &doc.emit());
    assert_eq!(
        planepack(&["verify", s(&input), s(&short)]).status.code(),
        Some(2)
    );

    // Move the centerpoint far away.
    let mut doc = PackingDocument::parse(&doc_text).unwrap();
    doc.centerpoint.as_mut().unwrap().x = "100000".into();
    let moved = file(&dir, "moved.json", &doc.emit());
    assert_eq!(
        planepack(&["verify", s(&input), s(&moved)]).status.code(),
        Some(2)
    );

    let garbage = file(&dir, "garbage.json", "{\"format\": 1}");
    assert_eq!(
        planepack(&["verify", s(&input), s(&garbage)]).status.code(),
        Some(1)
    );
}

#[test]
fn center_reports() {
    let dir = TempDir::new().unwrap();
    let hex = stdout(&planepack(&[
        "center",
        s(&file(&dir, "hex.txt", HEXAGON)),
        "--oracle",
    ]));
    assert!(hex.contains("dimension: 2"), "{hex}");
    assert!(
        hex.contains("vertices:\n  -2 -1\n  0 -2\n  2 -1\n  2 1\n  0 2\n  -2 1\n"),
        "{hex}"
    );
    assert!(hex.contains("oracle: agree"));

    let seven = stdout(&planepack(&["center", s(&file(&dir, "seven.txt", SEVEN))]));
    assert!(seven.contains("dimension: 0"));
    assert!(seven.contains("point: 0 0"));
    assert!(seven.contains("point in P: yes"));
    assert!(seven.contains("n ≡ 1 (mod 3): yes"));
    assert!(!seven.contains("oracle"));

    let tri = stdout(&planepack(&["center", s(&file(&dir, "tri.txt", TRIANGLE))]));
    assert!(tri.contains("dimension: 2"));
    assert!(tri.contains("alpha: 1"));
    assert!(tri.contains("vertices:\n  0 0\n  4 0\n  1 3\n"), "{tri}");
}

#[test]
fn gen_output() {
    let out = planepack(&["gen", "6", "--seed", "1", "--span", "36"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("# planepack gen n=6 seed=1 span=36\n"));
    let points = PointFile::parse(&text).unwrap();
    assert_eq!(points.points.len(), 6);
    assert!(planepack_core::is_general_position(&points.point_set()).is_ok());
    assert_eq!(
        out.stdout,
        planepack(&["gen", "6", "--seed", "1", "--span", "36"]).stdout
    );
    assert_eq!(
        planepack(&["gen", "6", "--span", "35"]).status.code(),
        Some(1)
    );
    let three = PointFile::parse(&stdout(&planepack(&["gen", "3", "--seed", "77"]))).unwrap();
    assert!(planepack_core::is_general_position(&three.point_set()).is_ok());
}

fn count(svg: &str, needle: &str) -> usize {
    svg.matches(needle).count()
}

#[test]
fn svg_has_one_layer_per_tree_and_all_edges() {
    let dir = TempDir::new().unwrap();
    for (n, seed) in [(6, 0), (7, 1), (20, 2), (31, 3)] {
        let gen = planepack(&["gen", &n.to_string(), "--seed", &seed.to_string()]);
        let input = file(&dir, "pts.txt", &stdout(&gen));
        let svg_path = dir.path().join("out.svg");
        let out = planepack(&["pack", s(&input), "--svg", s(&svg_path)]);
        assert_eq!(out.status.code(), Some(0));
        let svg = std::fs::read_to_string(&svg_path).unwrap();
        let k = n / 3;
        assert_eq!(count(&svg, "<g class=\"tree\""), k);
        assert_eq!(count(&svg, "<line "), k * (n - 1));
        assert_eq!(count(&svg, "<text class=\"label\""), n);
        assert!(svg.contains("viewBox=\"0 0 600 600\""));

        let doc_path = file(&dir, "doc.json", &stdout(&out));
        let rendered = stdout(&planepack(&[
            "render",
            s(&input),
            "--document",
            s(&doc_path),
        ]));
        assert_eq!(rendered, svg);
    }
}

#[test]
fn render_region() {
    let dir = TempDir::new().unwrap();
    let seven = file(&dir, "seven.txt", SEVEN);
    let out_path = dir.path().join("region.svg");
    let out = planepack(&["render", s(&seven), "-o", s(&out_path)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let svg = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(count(&svg, "point highlight"), 1);
    let hex = stdout(&planepack(&["render", s(&file(&dir, "hex.txt", HEXAGON))]));
    assert_eq!(count(&hex, "<polygon class=\"center-region\""), 1);
}
