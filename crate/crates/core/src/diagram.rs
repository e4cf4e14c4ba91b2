//! Scale-invariant `(P/√A, √A·h)` coordinates, admissible bands and export.

use std::f64::consts::PI;
use std::fmt::{self, Write as _};
use std::io::{Read, Write};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cheeger::{cheeger, f_n, regular_perimeter};
use crate::error::{Error, Result};
use crate::geom::ConvexPolygon;

fn sqrt_pi() -> f64 {
    PI.sqrt()
}

/// The disk's coordinate, `2√π`, on both axes.
pub fn disk_coordinate() -> f64 {
    2.0 * PI.sqrt()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagramPoint {
    pub source: String,
    pub x: f64,
    pub y: f64,
    pub cheeger_regular: Option<bool>,
}

impl DiagramPoint {
    pub fn new(source: impl Into<String>, x: f64, y: f64, cheeger_regular: Option<bool>) -> Self {
        Self { source: source.into(), x, y, cheeger_regular }
    }
}

pub fn diagram_point(p: &ConvexPolygon) -> DiagramPoint {
    diagram_point_with_source(p, "polygon")
}

pub fn diagram_point_with_source(p: &ConvexPolygon, source: &str) -> DiagramPoint {
    let r = cheeger(p);
    let sa = p.area().sqrt();
    DiagramPoint::new(source, p.perimeter() / sa, sa * r.h, Some(r.is_cheeger_regular))
}

/// Diagram points of many polygons, in input order.
pub fn diagram_points(polys: &[ConvexPolygon], source: &str) -> Vec<DiagramPoint> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        polys.par_iter().map(|p| diagram_point_with_source(p, source)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        polys.iter().map(|p| diagram_point_with_source(p, source)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BandClass {
    SimplyConnected,
    Convex,
    /// Convex polygons with at most `N` sides.
    NGon(usize),
}

impl FromStr for BandClass {
    type Err = Error;

    /// Accepts `convex`, `simply-connected` and `ngon:<N>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::InvalidParameter(format!(
                "unknown band `{s}` (expected convex, simply-connected or ngon:<N>)"
            ))
        };
        match s.trim() {
            "convex" => Ok(Self::Convex),
            "simply-connected" | "simply_connected" => Ok(Self::SimplyConnected),
            other => {
                let n = other.strip_prefix("ngon:").ok_or_else(bad)?;
                let n: usize = n.parse().map_err(|_| bad())?;
                if n < 3 {
                    return Err(bad());
                }
                Ok(Self::NGon(n))
            }
        }
    }
}

impl fmt::Display for BandClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::SimplyConnected => write!(f, "simply-connected"),
            Self::Convex => write!(f, "convex"),
            Self::NGon(n) => write!(f, "ngon:{n}"),
        }
    }
}

/// Admissible region `{lower(x) <= y <= upper(x), x >= x_min}` of a class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandSpec {
    pub class: BandClass,
    pub x_min: f64,
}

pub fn band(class: BandClass) -> BandSpec {
    let x_min = match class {
        BandClass::NGon(n) => regular_perimeter(n),
        _ => disk_coordinate(),
    };
    BandSpec { class, x_min }
}

impl BandSpec {
    pub fn lower(&self, x: f64) -> f64 {
        match self.class {
            BandClass::SimplyConnected => disk_coordinate(),
            _ => x / 2.0 + sqrt_pi(),
        }
    }

    pub fn upper(&self, x: f64) -> f64 {
        match self.class {
            BandClass::NGon(3) => x / 2.0 + sqrt_pi(),
            BandClass::NGon(n) => f_n(n, x),
            _ => x,
        }
    }

    /// Whether the lower curve itself belongs to the region.
    pub fn lower_is_closed(&self) -> bool {
        self.class != BandClass::SimplyConnected
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Classification {
    Inside,
    OnLower,
    OnUpper,
    /// Distance by which the point violates the band.
    Outside(f64),
}

impl Classification {
    pub fn is_outside(&self) -> bool {
        matches!(self, Self::Outside(_))
    }
}

/// Places `pt` relative to the band with absolute tolerance `tol`.
/// A point on both curves is reported as `OnLower`.
pub fn classify(pt: &DiagramPoint, spec: &BandSpec, tol: f64) -> Classification {
    let (x, y) = (pt.x, pt.y);
    if !(x.is_finite() && y.is_finite()) {
        return Classification::Outside(f64::INFINITY);
    }
    if x < spec.x_min - tol {
        return Classification::Outside(spec.x_min - x);
    }
    let dl = y - spec.lower(x);
    let du = spec.upper(x) - y;
    if du < -tol {
        return Classification::Outside(-du);
    }
    if !spec.lower_is_closed() {
        let d = disk_coordinate();
        let at_disk = (x - d).abs() <= tol && (y - d).abs() <= tol;
        return if at_disk {
            Classification::OnLower
        } else if dl > 0.0 {
            if du.abs() <= tol {
                Classification::OnUpper
            } else {
                Classification::Inside
            }
        } else {
            Classification::Outside(-dl)
        };
    }
    if dl < -tol {
        Classification::Outside(-dl)
    } else if dl <= tol {
        Classification::OnLower
    } else if du <= tol {
        Classification::OnUpper
    } else {
        Classification::Inside
    }
}

const CSV_HEADER: [&str; 4] = ["source", "x", "y", "cheeger_regular"];

/// Writes `source,x,y,cheeger_regular` rows with shortest round-trip floats.
pub fn write_csv<W: Write>(points: &[DiagramPoint], w: W) -> Result<()> {
    let mut wr = csv::WriterBuilder::new().has_headers(false).from_writer(w);
    wr.write_record(CSV_HEADER)?;
    for p in points {
        wr.serialize(p)?;
    }
    wr.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(r: R) -> Result<Vec<DiagramPoint>> {
    let mut rd = csv::Reader::from_reader(r);
    let headers = rd.headers()?.clone();
    if headers.iter().ne(CSV_HEADER) {
        return Err(Error::InvalidParameter(format!(
            "unexpected CSV header `{}`",
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }
    rd.deserialize().map(|row| row.map_err(Error::from)).collect()
}

pub fn export_csv(points: &[DiagramPoint], path: impl AsRef<Path>) -> Result<()> {
    write_csv(points, std::fs::File::create(path)?)
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SvgOptions {
    /// Plot `(2√π/x, 2√π/y)`, which maps the convex band into `[0,1]²`.
    pub unit_square_axes: bool,
}

const W: f64 = 720.0;
const H: f64 = 540.0;
const MARGIN: f64 = 60.0;

/// SVG 1.1 scatter of `points` over the curves `y = x`, `y = x/2 + √π` and,
/// for polygon classes, `y = f_N(x)`.
pub fn svg_scatter(points: &[DiagramPoint], spec: &BandSpec, opts: SvgOptions) -> String {
    let d = disk_coordinate();
    let mut x_hi = points.iter().map(|p| p.x).fold(spec.x_min + 1.0, f64::max);
    if !x_hi.is_finite() {
        x_hi = spec.x_min + 1.0;
    }
    let x_lo = spec.x_min.min(d);
    let map = |x: f64, y: f64| -> (f64, f64) {
        if opts.unit_square_axes {
            (d / x, d / y)
        } else {
            (x, y)
        }
    };

    // Curves sampled on [x_lo, x_hi]; the far ends of the convex band are
    // y = x and y = x/2 + √π evaluated at x_hi.
    let samples = 240;
    let xs: Vec<f64> = (0..=samples).map(|k| x_lo + (x_hi - x_lo) * k as f64 / samples as f64).collect();
    let mut curves: Vec<(&str, &str, Vec<(f64, f64)>)> = vec![
        ("y = x", "#1f77b4", xs.iter().map(|&x| map(x, x)).collect()),
        ("y = x/2 + √π", "#2ca02c", xs.iter().map(|&x| map(x, x / 2.0 + sqrt_pi())).collect()),
    ];
    if let BandClass::NGon(n) = spec.class {
        if n >= 4 {
            let fx: Vec<(f64, f64)> =
                xs.iter().filter(|&&x| x >= spec.x_min).map(|&x| map(x, f_n(n, x))).collect();
            curves.push(("y = f_N(x)", "#d62728", fx));
        }
    }

    let mut all: Vec<(f64, f64)> = curves.iter().flat_map(|c| c.2.iter().copied()).collect();
    all.extend(points.iter().filter(|p| p.x.is_finite() && p.y.is_finite()).map(|p| map(p.x, p.y)));
    let (mut bx0, mut bx1, mut by0, mut by1) =
        (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in &all {
        bx0 = bx0.min(x);
        bx1 = bx1.max(x);
        by0 = by0.min(y);
        by1 = by1.max(y);
    }
    let pad_x = 0.03 * (bx1 - bx0).max(1e-9);
    let pad_y = 0.03 * (by1 - by0).max(1e-9);
    let (bx0, bx1, by0, by1) = (bx0 - pad_x, bx1 + pad_x, by0 - pad_y, by1 + pad_y);
    let sx = |x: f64| MARGIN + (x - bx0) / (bx1 - bx0) * (W - 2.0 * MARGIN);
    let sy = |y: f64| H - MARGIN - (y - by0) / (by1 - by0) * (H - 2.0 * MARGIN);

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#
    );
    let _ = writeln!(s, r#"<rect width="{W}" height="{H}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<rect x="{MARGIN}" y="{MARGIN}" width="{}" height="{}" fill="none" stroke="black"/>"#,
        W - 2.0 * MARGIN,
        H - 2.0 * MARGIN
    );
    for k in 0..=5 {
        let fx = bx0 + (bx1 - bx0) * k as f64 / 5.0;
        let fy = by0 + (by1 - by0) * k as f64 / 5.0;
        let _ = writeln!(
            s,
            r#"<text x="{:.1}" y="{:.1}" font-size="11" text-anchor="middle">{:.3}</text>"#,
            sx(fx),
            H - MARGIN + 16.0,
            fx
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.1}" y="{:.1}" font-size="11" text-anchor="end">{:.3}</text>"#,
            MARGIN - 6.0,
            sy(fy) + 4.0,
            fy
        );
    }
    let (xl, yl) =
        if opts.unit_square_axes { ("2√π √A / P", "2√π / (√A h)") } else { ("P / √A", "√A h") };
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" font-size="13" text-anchor="middle">{xl}</text>"#,
        W / 2.0,
        H - 18.0
    );
    let _ = writeln!(
        s,
        r#"<text x="18" y="{}" font-size="13" text-anchor="middle" transform="rotate(-90 18 {})">{yl}</text>"#,
        H / 2.0,
        H / 2.0
    );

    let _ = writeln!(s, r#"<g fill-opacity="0.6">"#);
    for p in points.iter().filter(|p| p.x.is_finite() && p.y.is_finite()) {
        let (x, y) = map(p.x, p.y);
        let color = match p.cheeger_regular {
            Some(true) => "#444444",
            Some(false) => "#ff7f0e",
            None => "#9467bd",
        };
        let _ = writeln!(s, r#"<circle cx="{:.2}" cy="{:.2}" r="1.4" fill="{color}"/>"#, sx(x), sy(y));
    }
    let _ = writeln!(s, "</g>");

    for (i, (label, color, pts)) in curves.iter().enumerate() {
        if pts.is_empty() {
            continue;
        }
        let path: Vec<String> = pts.iter().map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y))).collect();
        let _ = writeln!(
            s,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"#,
            path.join(" ")
        );
        let ly = MARGIN + 16.0 + 16.0 * i as f64;
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{ly}" x2="{}" y2="{ly}" stroke="{color}" stroke-width="2"/><text x="{}" y="{}" font-size="12">{label}</text>"#,
            MARGIN + 10.0,
            MARGIN + 34.0,
            MARGIN + 40.0,
            ly + 4.0
        );
    }
    let _ = writeln!(s, "</svg>");
    s
}

pub fn export_svg_scatter(
    points: &[DiagramPoint],
    spec: &BandSpec,
    opts: SvgOptions,
    path: impl AsRef<Path>,
) -> Result<()> {
    std::fs::write(path, svg_scatter(points, spec, opts))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point2;
    use approx::assert_relative_eq;

    fn square() -> ConvexPolygon {
        let pts: Vec<Point2> = [(0., 0.), (1., 0.), (1., 1.), (0., 1.)].iter().map(|&p| p.into()).collect();
        ConvexPolygon::from_points(&pts).unwrap()
    }

    #[test]
    fn square_point_and_scale_invariance() {
        let p = diagram_point(&square());
        assert_relative_eq!(p.x, 4.0, epsilon = 1e-14);
        assert_relative_eq!(p.y, 2.0 + PI.sqrt(), epsilon = 1e-12);
        let q = diagram_point(&square().scale(7.3).unwrap());
        assert_relative_eq!(p.x, q.x, epsilon = 1e-10);
        assert_relative_eq!(p.y, q.y, epsilon = 1e-10);
    }

    #[test]
    fn band_values() {
        let c = band(BandClass::Convex);
        assert_relative_eq!(c.lower(4.0), 2.0 + PI.sqrt());
        assert_eq!(c.upper(4.0), 4.0);
        let q = band(BandClass::NGon(4));
        assert_relative_eq!(q.lower(4.0), q.upper(4.0), epsilon = 1e-14);
        let t = band(BandClass::NGon(3));
        for x in [4.6, 5.0, 9.0] {
            assert_eq!(t.lower(x), t.upper(x));
        }
    }

    #[test]
    fn classify_examples() {
        let sq = diagram_point(&square());
        assert_eq!(classify(&sq, &band(BandClass::NGon(4)), 1e-9), Classification::OnLower);
        let out = DiagramPoint::new("fake", 4.0, 4.5, None);
        match classify(&out, &band(BandClass::Convex), 1e-9) {
            Classification::Outside(m) => assert_relative_eq!(m, 0.5, epsilon = 1e-12),
            c => panic!("{c:?}"),
        }
        let inside = DiagramPoint::new("fake", 5.0, 4.5, None);
        assert_eq!(classify(&inside, &band(BandClass::Convex), 1e-9), Classification::Inside);
        let below = DiagramPoint::new("fake", 3.0, 3.0, None);
        assert!(classify(&below, &band(BandClass::Convex), 1e-9).is_outside());
    }

    #[test]
    fn simply_connected_band_is_open_below() {
        let spec = band(BandClass::SimplyConnected);
        let d = disk_coordinate();
        assert_eq!(classify(&DiagramPoint::new("disk", d, d, None), &spec, 1e-9), Classification::OnLower);
        assert!(classify(&DiagramPoint::new("p", 8.0, d, None), &spec, 1e-9).is_outside());
        assert_eq!(
            classify(&DiagramPoint::new("p", 8.0, d + 1e-3, None), &spec, 1e-9),
            Classification::Inside
        );
    }

    #[test]
    fn f_n_ordering_on_grid() {
        for n in 4..=64 {
            let x0 = regular_perimeter(n);
            for k in 0..50 {
                let x = x0 + 0.2 * k as f64;
                assert!(f_n(n - 1, x) <= f_n(n, x) + 1e-12, "n={n} x={x}");
                assert!(f_n(n, x) <= x + 1e-12);
            }
        }
    }

    #[test]
    fn band_parse_round_trip() {
        for s in ["convex", "simply-connected", "ngon:5"] {
            assert_eq!(s.parse::<BandClass>().unwrap().to_string(), s);
        }
        assert!("ngon:2".parse::<BandClass>().is_err());
        assert!("hexagon".parse::<BandClass>().is_err());
    }

    #[test]
    fn csv_header_only_when_empty() {
        let mut buf = Vec::new();
        write_csv(&[], &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "source,x,y,cheeger_regular\n");
    }

    #[test]
    fn csv_round_trip_is_exact() {
        let pts = vec![
            DiagramPoint::new("stadium:t=1", 3.65299051102735, 3.65299051102735, None),
            DiagramPoint::new("square", 4.0, 2.0 + PI.sqrt(), Some(true)),
            DiagramPoint::new("with,comma", 0.1 + 0.2, 1.0 / 3.0, Some(false)),
        ];
        let mut buf = Vec::new();
        write_csv(&pts, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert_eq!(text.lines().count(), 4);
        assert_eq!(read_csv(&buf[..]).unwrap(), pts);
    }

    #[test]
    fn svg_contains_curves_and_points() {
        let pts = vec![diagram_point(&square())];
        let s = svg_scatter(&pts, &band(BandClass::NGon(5)), SvgOptions::default());
        assert!(s.starts_with("<?xml"));
        assert_eq!(s.matches("<polyline").count(), 3);
        assert_eq!(s.matches("<circle").count(), 1);
        let u = svg_scatter(&pts, &band(BandClass::Convex), SvgOptions { unit_square_axes: true });
        assert_eq!(u.matches("<polyline").count(), 2);
    }
}
