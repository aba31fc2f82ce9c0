//! Minimal deterministic SVG emission: fixed-precision coordinates, no
//! timestamps or generator metadata, elements in insertion order.

use std::fmt::Write as _;

#[derive(Debug, Clone, Copy)]
pub struct BBox {
    pub min_x: f64,
    pub min_y: f64,
    pub max_x: f64,
    pub max_y: f64,
}

impl BBox {
    pub fn of_points<I: IntoIterator<Item = (f64, f64)>>(points: I) -> Option<BBox> {
        let mut bbox: Option<BBox> = None;
        for (x, y) in points {
            bbox = Some(match bbox {
                None => BBox {
                    min_x: x,
                    min_y: y,
                    max_x: x,
                    max_y: y,
                },
                Some(b) => BBox {
                    min_x: b.min_x.min(x),
                    min_y: b.min_y.min(y),
                    max_x: b.max_x.max(x),
                    max_y: b.max_y.max(y),
                },
            });
        }
        bbox
    }

    /// Grow symmetrically by a fraction of the larger side.
    pub fn with_margin(self, fraction: f64) -> BBox {
        let pad = fraction
            * (self.max_x - self.min_x)
                .max(self.max_y - self.min_y)
                .max(1e-9);
        BBox {
            min_x: self.min_x - pad,
            min_y: self.min_y - pad,
            max_x: self.max_x + pad,
            max_y: self.max_y + pad,
        }
    }
}

/// An SVG document under construction. Geometry is given in model
/// coordinates; the viewBox flips the y axis so +y points up.
pub struct SvgCanvas {
    bbox: BBox,
    body: String,
}

fn c(v: f64) -> String {
    format!("{v:.6}")
}

impl SvgCanvas {
    pub fn new(bbox: BBox) -> Self {
        SvgCanvas {
            bbox,
            body: String::new(),
        }
    }

    fn map(&self, p: (f64, f64)) -> (f64, f64) {
        // flip y so the model's up is the image's up
        (p.0, self.bbox.max_y + self.bbox.min_y - p.1)
    }

    pub fn polyline(&mut self, points: &[(f64, f64)], stroke: &str, width: f64) {
        let mut d = String::new();
        for (i, &p) in points.iter().enumerate() {
            let (x, y) = self.map(p);
            let _ = write!(d, "{}{},{}", if i == 0 { "M" } else { " L" }, c(x), c(y));
        }
        let _ = writeln!(
            self.body,
            r#"  <path d="{d}" fill="none" stroke="{stroke}" stroke-width="{}"/>"#,
            c(width)
        );
    }

    pub fn line(&mut self, a: (f64, f64), b: (f64, f64), stroke: &str, width: f64) {
        let (x1, y1) = self.map(a);
        let (x2, y2) = self.map(b);
        let _ = writeln!(
            self.body,
            r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{stroke}" stroke-width="{}"/>"#,
            c(x1),
            c(y1),
            c(x2),
            c(y2),
            c(width)
        );
    }

    pub fn circle(&mut self, center: (f64, f64), r: f64, fill: &str) {
        let (cx, cy) = self.map(center);
        let _ = writeln!(
            self.body,
            r#"  <circle cx="{}" cy="{}" r="{}" fill="{fill}"/>"#,
            c(cx),
            c(cy),
            c(r)
        );
    }

    pub fn finish(self) -> String {
        let w = self.bbox.max_x - self.bbox.min_x;
        let h = self.bbox.max_y - self.bbox.min_y;
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\" width=\"640\" height=\"{}\">\n{}</svg>\n",
            c(self.bbox.min_x),
            c(self.bbox.min_y),
            c(w),
            c(h),
            c(640.0 * h / w),
            self.body
        )
    }
}
