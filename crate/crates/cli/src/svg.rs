//! SVG drawings of packings and center regions.
//!
//! Coordinates become floating point here and nowhere else. The drawing is
//! fit into a square viewBox, y pointing up, keeping the aspect ratio.

use planepack_core::{ConvexRegion, Packing, Point2, PointSet};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SvgOptions {
    /// Side of the square viewBox.
    pub size: f64,
    /// Blank border on each side, as a fraction of `size`.
    pub margin: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        Self {
            size: 600.0,
            margin: 0.05,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum Scene<'a> {
    Packing(&'a Packing),
    Region(&'a ConvexRegion),
}

struct Frame {
    x0: f64,
    y0: f64,
    scale: f64,
    pad_x: f64,
    pad_y: f64,
    size: f64,
}

impl Frame {
    fn fit(points: &[(f64, f64)], options: &SvgOptions) -> Self {
        let (mut x0, mut y0) = (f64::INFINITY, f64::INFINITY);
        let (mut x1, mut y1) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
        for &(x, y) in points {
            x0 = x0.min(x);
            y0 = y0.min(y);
            x1 = x1.max(x);
            y1 = y1.max(y);
        }
        if points.is_empty() {
            (x0, y0, x1, y1) = (0.0, 0.0, 1.0, 1.0);
        }
        let inner = options.size * (1.0 - 2.0 * options.margin);
        let extent = (x1 - x0).max(y1 - y0);
        let scale = if extent > 0.0 { inner / extent } else { 1.0 };
        let margin = options.size * options.margin;
        Self {
            x0,
            y0,
            scale,
            pad_x: margin + (inner - (x1 - x0) * scale) / 2.0,
            pad_y: margin + (inner - (y1 - y0) * scale) / 2.0,
            size: options.size,
        }
    }

    fn map(&self, p: &Point2) -> (f64, f64) {
        let (x, y) = p.to_f64();
        (
            self.pad_x + (x - self.x0) * self.scale,
            self.size - (self.pad_y + (y - self.y0) * self.scale),
        )
    }
}

/// Evenly spaced hues, one per tree.
fn tree_color(i: usize, count: usize) -> String {
    format!("hsl({:.1},70%,40%)", 360.0 * i as f64 / count.max(1) as f64)
}

pub fn render_svg(points: &PointSet, scene: Scene<'_>, options: &SvgOptions) -> String {
    let mut extent: Vec<(f64, f64)> = points.points().iter().map(Point2::to_f64).collect();
    if let Scene::Region(region) = scene {
        extent.extend(region.vertices().iter().map(Point2::to_f64));
    }
    let frame = Frame::fit(&extent, options);
    let size = options.size;
    let mut svg = String::new();
    let mut w = |s: String| svg.push_str(&s);
    w(format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {size} {size}\" width=\"{size}\" height=\"{size}\">\n"
    ));
    w(format!(
        "<rect class=\"background\" width=\"{size}\" height=\"{size}\" fill=\"white\"/>\n"
    ));

    let mut labels: Vec<String> = (1..=points.len()).map(|i| format!("p_{i}")).collect();
    let mut highlight: Option<usize> = None;
    let mut marker: Option<&Point2> = None;

    match scene {
        Scene::Packing(packing) => {
            let count = packing.trees.len();
            for (t, tree) in packing.trees.iter().enumerate() {
                w(format!(
                    "<g class=\"tree\" id=\"tree-{}\" data-kind=\"{}\" stroke=\"{}\" stroke-width=\"2\" stroke-opacity=\"0.8\">\n",
                    t + 1,
                    tree.kind.name(),
                    tree_color(t, count)
                ));
                for e in &tree.edges {
                    let (x1, y1) = frame.map(points.point(e.tail));
                    let (x2, y2) = frame.map(points.point(e.head));
                    w(format!(
                        "<line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\"/>\n"
                    ));
                }
                w("</g>\n".to_string());
            }
            if let Some(order) = &packing.radial_order {
                for (pos, &i) in order.order.iter().enumerate() {
                    labels[i] = format!("p_{}", pos + 1);
                }
            }
            if let Some(c) = &packing.centerpoint {
                match points.index_of(&c.point) {
                    Some(i) => {
                        labels[i] = "c".to_string();
                        highlight = Some(i);
                    }
                    None => marker = Some(&c.point),
                }
            }
        }
        Scene::Region(region) => {
            let fill =
                "fill=\"#f4c542\" fill-opacity=\"0.5\" stroke=\"#b8860b\" stroke-width=\"1.5\"";
            match region {
                ConvexRegion::Polygon(poly) => {
                    let coords: Vec<String> = poly
                        .vertices()
                        .iter()
                        .map(|v| {
                            let (x, y) = frame.map(v);
                            format!("{x:.2},{y:.2}")
                        })
                        .collect();
                    w(format!(
                        "<polygon class=\"center-region\" points=\"{}\" {fill}/>\n",
                        coords.join(" ")
                    ));
                }
                ConvexRegion::Segment(seg) => {
                    let (x1, y1) = frame.map(seg.a());
                    let (x2, y2) = frame.map(seg.b());
                    w(format!(
                        "<polyline class=\"center-region\" points=\"{x1:.2},{y1:.2} {x2:.2},{y2:.2}\" {fill}/>\n"
                    ));
                }
                ConvexRegion::Point(p) => match points.index_of(p) {
                    Some(i) => highlight = Some(i),
                    None => marker = Some(p),
                },
                ConvexRegion::Empty => {}
            }
        }
    }

    w("<g class=\"points\" font-family=\"sans-serif\" font-size=\"12\">\n".to_string());
    for (i, p) in points.points().iter().enumerate() {
        let (x, y) = frame.map(p);
        let class = if highlight == Some(i) {
            "point highlight"
        } else {
            "point"
        };
        let (r, fill) = if highlight == Some(i) {
            (7, "#d62728")
        } else {
            (4, "black")
        };
        w(format!(
            "<circle class=\"{class}\" cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"{r}\" fill=\"{fill}\"/>\n"
        ));
        w(format!(
            "<text class=\"label\" x=\"{:.2}\" y=\"{:.2}\">{}</text>\n",
            x + 6.0,
            y - 6.0,
            labels[i]
        ));
    }
    w("</g>\n".to_string());
    if let Some(c) = marker {
        let (x, y) = frame.map(c);
        w(format!(
            "<circle class=\"centerpoint\" cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"6\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>\n"
        ));
    }
    w("</svg>\n".to_string());
    svg
}
