//! Extremal shape families of the diagram.
//!
//! Smooth shapes (stadiums and cup bodies) carry exact diagram coordinates;
//! their polygonal discretizations place every vertex on the boundary.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::diagram::{diagram_point_with_source, disk_coordinate, DiagramPoint};
use crate::error::{Error, Result};
use crate::geom::{ConvexPolygon, HalfPlane, Point2};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SmoothShape {
    /// Convex hull of two unit disks whose centres are `t` apart.
    Stadium { t: f64 },
    /// Convex hull of the unit disk and the points `(±d/2, 0)`.
    CupBody { d: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmoothShapeDescriptor {
    pub kind: SmoothShape,
    /// Whether `polygon` rescales to unit area.
    pub normalized: bool,
}

impl SmoothShapeDescriptor {
    pub fn perimeter(&self) -> f64 {
        match self.kind {
            SmoothShape::Stadium { t } => 2.0 * PI + 2.0 * t,
            SmoothShape::CupBody { d } => 2.0 * (d * d - 4.0).max(0.0).sqrt() + 4.0 * (2.0 / d).asin(),
        }
    }

    pub fn area(&self) -> f64 {
        match self.kind {
            SmoothShape::Stadium { t } => PI + 2.0 * t,
            // The body is circumscribed about the unit disk.
            SmoothShape::CupBody { .. } => self.perimeter() / 2.0,
        }
    }

    /// Exact `(P/√A, √A·h)`.
    pub fn diagram_xy(&self) -> (f64, f64) {
        let x = self.perimeter() / self.area().sqrt();
        let y = match self.kind {
            SmoothShape::Stadium { .. } => x,
            SmoothShape::CupBody { .. } => x / 2.0 + PI.sqrt(),
        };
        (x, y)
    }

    /// Polygon with `resolution` vertices on the boundary, diameter along the
    /// x-axis, centred at the origin.
    pub fn polygon(&self, resolution: usize) -> Result<ConvexPolygon> {
        if resolution < 16 {
            return Err(Error::ResolutionTooLow(resolution));
        }
        let mut pts = Vec::with_capacity(resolution);
        match self.kind {
            SmoothShape::Stadium { t } => {
                let k = resolution / 2;
                for j in 0..k {
                    let a = -PI / 2.0 + PI * j as f64 / (k - 1) as f64;
                    pts.push(Point2::new(t / 2.0, 0.0) + Point2::from_angle(a));
                    pts.push(Point2::new(-t / 2.0, 0.0) - Point2::from_angle(a));
                }
            }
            SmoothShape::CupBody { d } => {
                let phi = (2.0 / d).min(1.0).acos();
                let k = (resolution - 2) / 2;
                for j in 0..k {
                    let a = phi + (PI - 2.0 * phi) * j as f64 / (k - 1) as f64;
                    pts.push(Point2::from_angle(a));
                    pts.push(-Point2::from_angle(a));
                }
                pts.push(Point2::new(d / 2.0, 0.0));
                pts.push(Point2::new(-d / 2.0, 0.0));
            }
        }
        let poly = ConvexPolygon::from_points(&pts)?;
        Ok(if self.normalized { poly.scale_unchecked(1.0 / self.area().sqrt()) } else { poly })
    }
}

/// Stadium with centre distance `t`; returns the descriptor and `(x, y)`.
pub fn stadium(t: f64) -> Result<(SmoothShapeDescriptor, f64, f64)> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::InvalidParameter(format!("stadium needs t >= 0, got {t}")));
    }
    let desc = SmoothShapeDescriptor { kind: SmoothShape::Stadium { t }, normalized: true };
    let (x, y) = desc.diagram_xy();
    Ok((desc, x, y))
}

/// Cup body with diameter `d`; returns the descriptor and `(x, y)`.
pub fn cup_body(d: f64) -> Result<(SmoothShapeDescriptor, f64, f64)> {
    if !(d >= 2.0) || !d.is_finite() {
        return Err(Error::InvalidParameter(format!("cup body needs d >= 2, got {d}")));
    }
    let desc = SmoothShapeDescriptor { kind: SmoothShape::CupBody { d }, normalized: true };
    let (x, y) = desc.diagram_xy();
    Ok((desc, x, y))
}

/// Root of an increasing `f` with `f(lo) <= target`, found after growing
/// `hi` until `f(hi) >= target`.
fn invert_increasing(f: impl Fn(f64) -> f64, target: f64, lo: f64, mut hi: f64) -> f64 {
    let mut lo = lo;
    while f(hi) < target {
        lo = hi;
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn check_scaled_perimeter(p: f64) -> Result<()> {
    if !(p >= disk_coordinate() * (1.0 - 1e-15)) || !p.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "scaled perimeter {p} is below the disk value {}",
            disk_coordinate()
        )));
    }
    Ok(())
}

/// Centre distance `t` of the stadium whose diagram abscissa is `p`.
pub fn stadium_for_perimeter(p: f64) -> Result<f64> {
    check_scaled_perimeter(p)?;
    Ok(invert_increasing(|t| 2.0 * (PI + t) / (PI + 2.0 * t).sqrt(), p, 0.0, 1.0))
}

/// Diameter `d` of the cup body whose diagram abscissa is `p`.
pub fn cup_body_for_perimeter(p: f64) -> Result<f64> {
    check_scaled_perimeter(p)?;
    let x = |d: f64| 2.0 * ((d * d - 4.0).max(0.0).sqrt() + 2.0 * (2.0 / d).min(1.0).asin()).sqrt();
    Ok(invert_increasing(x, p, 2.0, 4.0))
}

fn circumradius(n: usize) -> f64 {
    let n_f = n as f64;
    (2.0 / (n_f * (2.0 * PI / n_f).sin())).sqrt()
}

/// Regular `n`-gon of vertex radius `r` with vertices at angles
/// `phase + 2πk/n`.
fn regular_vertices(n: usize, r: f64, phase: f64, center: Point2) -> Vec<Point2> {
    (0..n).map(|k| center + Point2::from_angle(phase + 2.0 * PI * k as f64 / n as f64) * r).collect()
}

/// Unit-area regular `n`-gon centred at the origin, first vertex on the
/// positive x-axis.
pub fn regular_polygon(n: usize) -> Result<ConvexPolygon> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("regular polygon needs n >= 3, got {n}")));
    }
    ConvexPolygon::from_ccw_trusted(regular_vertices(n, circumradius(n), 0.0, Point2::new(0.0, 0.0)))
}

/// Diameter of the unit-area regular `n`-gon.
pub fn regular_diameter(n: usize) -> f64 {
    let r = circumradius(n);
    if n.is_multiple_of(2) {
        2.0 * r
    } else {
        2.0 * r * (PI / 2.0 - PI / (2.0 * n as f64)).sin()
    }
}

fn check_even(n: usize) -> Result<()> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::OddN(n));
    }
    Ok(())
}

fn check_odd(n: usize) -> Result<()> {
    if n < 5 || n.is_multiple_of(2) {
        return Err(Error::EvenN(n));
    }
    Ok(())
}

fn check_delta(n: usize, delta: f64) -> Result<f64> {
    let min = regular_diameter(n);
    if !(delta >= min * (1.0 - 1e-12)) || !delta.is_finite() {
        return Err(Error::DeltaTooSmall { delta, min });
    }
    Ok(min)
}

/// Unit-area `R_N` with two horizontal sides, lengthened along x until its
/// diameter is `delta`, then rescaled to unit area.
///
/// The vertices right of the y-axis are translated horizontally, so every
/// interior angle of `R_N` is kept; `N = 4` gives rectangles.
pub fn stretched_regular(n: usize, delta: f64) -> Result<ConvexPolygon> {
    check_even(n)?;
    let d0 = check_delta(n, delta)?;
    let base = regular_vertices(n, circumradius(n), PI / 2.0 - PI / n as f64, Point2::new(0.0, 0.0));
    let build = |w: f64| -> Vec<Point2> {
        base.iter().map(|&v| if v.x > 0.0 { v + Point2::new(w, 0.0) } else { v }).collect()
    };
    let diameter = |w: f64| {
        let v = build(w);
        let mut d = 0.0f64;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                d = d.max((v[i] - v[j]).norm());
            }
        }
        d
    };
    let w = if delta <= d0 { 0.0 } else { invert_increasing(diameter, delta, 0.0, delta) };
    Ok(ConvexPolygon::from_ccw_trusted(build(w))?.normalized())
}

/// `V_δ`: `R_N` with a diameter `[O, A]` on the x-axis, where the corner at
/// `A` is replaced by the two tangents from `A_δ = (δ, 0)` to the incircle.
/// The incircle is kept, so every side stays tangent to it.
pub fn circumscribed_extension(n: usize, delta: f64) -> Result<ConvexPolygon> {
    check_even(n)?;
    let d0 = check_delta(n, delta)?;
    let r_out = circumradius(n);
    let r_in = r_out * (PI / n as f64).cos();
    let c = Point2::new(d0 / 2.0, 0.0);
    let rn = ConvexPolygon::from_ccw_trusted(regular_vertices(n, r_out, 0.0, c))?;
    if delta <= d0 {
        return Ok(rn);
    }
    let apex = Point2::new(delta, 0.0);
    let dist = delta - d0 / 2.0;
    let beta = (r_in / dist).acos();
    let mut planes: Vec<HalfPlane> =
        rn.half_planes().into_iter().filter(|h| h.signed_distance(apex) <= 1e-12 * delta).collect();
    for sign in [1.0, -1.0] {
        let normal = Point2::from_angle(sign * beta);
        planes.push(HalfPlane { normal, offset: normal.dot(c) + r_in });
    }
    ConvexPolygon::from_half_planes(&planes)
}

/// `W_s`: the sides of `R_N` as tangents to its incircle, with the normals of
/// sides 0 and 1 rotated towards each other by `sπ/N`. At `s = 1` the two
/// sides merge and the result has `N − 1` sides.
pub fn merge_sides_family(n: usize, s: f64) -> Result<ConvexPolygon> {
    check_odd(n)?;
    if !(0.0..=1.0).contains(&s) {
        return Err(Error::InvalidParameter(format!("merge parameter s must lie in [0, 1], got {s}")));
    }
    let step = 2.0 * PI / n as f64;
    let r_in = circumradius(n) * (PI / n as f64).cos();
    let mut angles: Vec<f64> = (0..n).map(|i| step / 2.0 + step * i as f64).collect();
    angles[0] += s * step / 2.0;
    angles[1] -= s * step / 2.0;
    if angles[1] - angles[0] <= 1e-12 {
        angles.remove(1);
    }
    let planes: Vec<HalfPlane> =
        angles.iter().map(|&a| HalfPlane { normal: Point2::from_angle(a), offset: r_in }).collect();
    ConvexPolygon::from_half_planes(&planes)
}

/// Incircle radius of the unit-area regular `n`-gon, shared by `V_δ` and
/// `W_s`.
pub fn regular_inradius(n: usize) -> f64 {
    circumradius(n) * (PI / n as f64).cos()
}

/// Unit-area polygon `(t·S_p ⊕ (1−t)·L_p)/√|·|` joining the discretized cup
/// body (`t = 0`) and stadium (`t = 1`) of abscissa `p`.
pub fn minkowski_path_polygon(p: f64, t: f64, resolution: usize) -> Result<ConvexPolygon> {
    if resolution < 16 {
        return Err(Error::ResolutionTooLow(resolution));
    }
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::InvalidParameter(format!("path parameter t must lie in [0, 1], got {t}")));
    }
    let (s_desc, ..) = stadium(stadium_for_perimeter(p)?)?;
    let (l_desc, ..) = cup_body(cup_body_for_perimeter(p)?)?;
    let s = s_desc.polygon(resolution)?;
    let l = l_desc.polygon(resolution)?;
    let k = if t == 1.0 {
        s
    } else if t == 0.0 {
        l
    } else {
        s.scale_unchecked(t).minkowski_sum(&l.scale_unchecked(1.0 - t))
    };
    Ok(k.normalized())
}

pub fn minkowski_path(p: f64, t: f64, resolution: usize) -> Result<DiagramPoint> {
    let k = minkowski_path_polygon(p, t, resolution)?;
    Ok(diagram_point_with_source(&k, &format!("path:p={p},t={t}")))
}

/// Interior angles at the two ends of side `i`.
fn end_angles(p: &ConvexPolygon, i: usize) -> (f64, f64) {
    let a = p.angle_data().interior_angles;
    (a[i], a[(i + 1) % p.len()])
}

/// `min ℓ_i / (cot(α_i/2) + cot(α_{i+1}/2))`, the largest inset before a side
/// vanishes.
pub fn displacement_limit(p: &ConvexPolygon) -> f64 {
    let n = p.len();
    (0..n)
        .map(|i| p.edge(i).norm() / (p.half_angle_cot(i) + p.half_angle_cot((i + 1) % n)))
        .fold(f64::INFINITY, f64::min)
}

/// Side `i` moved by `eps` along its outward normal, neighbours extended or
/// trimmed. Interior angles are unchanged.
pub fn parallel_displacement(p: &ConvexPolygon, i: usize, eps: f64) -> Result<ConvexPolygon> {
    let n = p.len();
    if i >= n {
        return Err(Error::InvalidParameter(format!("side {i} out of range for a {n}-gon")));
    }
    let limit = displacement_limit(p);
    let too_large = || Error::EpsTooLarge { eps, limit };
    if !(eps.abs() < limit) {
        return Err(too_large());
    }
    if eps == 0.0 {
        return Ok(p.clone());
    }
    let planes = p.half_planes();
    let moved = HalfPlane { normal: planes[i].normal, offset: planes[i].offset + eps };
    let prev = &planes[(i + n - 1) % n];
    let next = &planes[(i + 1) % n];
    let mut v = p.vertices().to_vec();
    v[i] = prev.line_intersection(&moved).ok_or_else(too_large)?;
    v[(i + 1) % n] = moved.line_intersection(next).ok_or_else(too_large)?;
    let q = ConvexPolygon::from_cyclic(&v).map_err(|_| too_large())?;
    if q.len() != n {
        return Err(too_large());
    }
    Ok(q)
}

/// `Ψ_i = 2(cot a + cot b + 1/sin a + 1/sin b) − (P/A)·ℓ_i`, with `a`, `b` the
/// angles at the ends of side `i`.
pub fn psi_coefficient(p: &ConvexPolygon, i: usize) -> f64 {
    let (a, b) = end_angles(p, i);
    let dp = 1.0 / a.tan() + 1.0 / b.tan() + 1.0 / a.sin() + 1.0 / b.sin();
    2.0 * dp - p.perimeter() / p.area() * p.edge(i).norm()
}

/// Perimeter bound `2N·√tan((N−2)π/(2N))` for unit-area `N`-gons whose
/// angles all equal `(N−2)π/N`.
pub fn c_n_upper_bound(n: usize) -> Result<f64> {
    check_odd(n)?;
    let n_f = n as f64;
    Ok(2.0 * n_f * ((n_f - 2.0) * PI / (2.0 * n_f)).tan().sqrt())
}

/// A parsed family descriptor such as `stretch:N=6,delta=3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FamilyDescriptor {
    Stadium { t: f64 },
    Cup { d: f64 },
    Regular { n: usize },
    Stretch { n: usize, delta: f64 },
    VDelta { n: usize, delta: f64 },
    WMerge { n: usize, s: f64 },
    Path { p: f64, t: f64 },
}

/// One evaluated family member.
#[derive(Debug, Clone)]
pub struct FamilySample {
    pub point: DiagramPoint,
    /// The polygon, when the family produces one.
    pub polygon: Option<ConvexPolygon>,
}

/// Resolution used by descriptors that discretize smooth shapes.
pub const PATH_RESOLUTION: usize = 256;

impl FamilyDescriptor {
    pub fn evaluate(&self) -> Result<FamilySample> {
        let source = self.to_string();
        let from_poly = |p: ConvexPolygon| FamilySample {
            point: diagram_point_with_source(&p, &source),
            polygon: Some(p),
        };
        Ok(match *self {
            Self::Stadium { t } => {
                let (_, x, y) = stadium(t)?;
                FamilySample { point: DiagramPoint::new(source, x, y, None), polygon: None }
            }
            Self::Cup { d } => {
                let (_, x, y) = cup_body(d)?;
                FamilySample { point: DiagramPoint::new(source, x, y, None), polygon: None }
            }
            Self::Regular { n } => from_poly(regular_polygon(n)?),
            Self::Stretch { n, delta } => from_poly(stretched_regular(n, delta)?),
            Self::VDelta { n, delta } => from_poly(circumscribed_extension(n, delta)?),
            Self::WMerge { n, s } => from_poly(merge_sides_family(n, s)?),
            Self::Path { p, t } => from_poly(minkowski_path_polygon(p, t, PATH_RESOLUTION)?),
        })
    }
}

impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Stadium { t } => write!(f, "stadium:t={t}"),
            Self::Cup { d } => write!(f, "cup:d={d}"),
            Self::Regular { n } => write!(f, "regular:N={n}"),
            Self::Stretch { n, delta } => write!(f, "stretch:N={n},delta={delta}"),
            Self::VDelta { n, delta } => write!(f, "vdelta:N={n},delta={delta}"),
            Self::WMerge { n, s } => write!(f, "wmerge:N={n},s={s}"),
            Self::Path { p, t } => write!(f, "path:p={p},t={t}"),
        }
    }
}

impl FromStr for FamilyDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadDescriptor(s.to_string());
        let (kind, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        let mut args = Vec::new();
        for kv in rest.split(',') {
            let (k, v) = kv.split_once('=').ok_or_else(bad)?;
            args.push((k.trim(), v.trim()));
        }
        let real = |key: &str| -> Result<f64> {
            let v = args.iter().find(|(k, _)| *k == key).ok_or_else(bad)?.1;
            v.parse::<f64>().map_err(|_| bad())
        };
        let int = |key: &str| -> Result<usize> {
            let v = args.iter().find(|(k, _)| *k == key).ok_or_else(bad)?.1;
            v.parse::<usize>().map_err(|_| bad())
        };
        let expect = |keys: &[&str]| -> Result<()> {
            if args.len() != keys.len() || args.iter().any(|(k, _)| !keys.contains(k)) {
                return Err(bad());
            }
            Ok(())
        };
        let d = match kind {
            "stadium" => {
                expect(&["t"])?;
                Self::Stadium { t: real("t")? }
            }
            "cup" => {
                expect(&["d"])?;
                Self::Cup { d: real("d")? }
            }
            "regular" => {
                expect(&["N"])?;
                Self::Regular { n: int("N")? }
            }
            "stretch" => {
                expect(&["N", "delta"])?;
                Self::Stretch { n: int("N")?, delta: real("delta")? }
            }
            "vdelta" => {
                expect(&["N", "delta"])?;
                Self::VDelta { n: int("N")?, delta: real("delta")? }
            }
            "wmerge" => {
                expect(&["N", "s"])?;
                Self::WMerge { n: int("N")?, s: real("s")? }
            }
            "path" => {
                expect(&["p", "t"])?;
                Self::Path { p: real("p")?, t: real("t")? }
            }
            _ => return Err(bad()),
        };
        Ok(d)
    }
}
