//! Planar convex-polygon primitives.
//!
//! Every [`ConvexPolygon`] is stored counterclockwise with strictly convex
//! corners: collinear runs and duplicate points are merged at construction.
//! Side `i` runs from vertex `i` to vertex `i + 1`, and the interior angle
//! with index `i` sits at vertex `i`.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative tolerance for the collinearity test, applied to `scale²`.
pub const COLLINEAR_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Unit vector at angle `theta`.
    #[inline]
    pub fn from_angle(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self { x: c, y: s }
    }

    #[inline]
    pub fn dot(self, o: Self) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3-D cross product.
    #[inline]
    pub fn cross(self, o: Self) -> f64 {
        self.x * o.y - self.y * o.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    /// Counterclockwise quarter turn.
    #[inline]
    pub fn perp(self) -> Self {
        Self { x: -self.y, y: self.x }
    }

    #[inline]
    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl From<[f64; 2]> for Point2 {
    fn from([x, y]: [f64; 2]) -> Self {
        Self { x, y }
    }
}

impl From<Point2> for [f64; 2] {
    fn from(p: Point2) -> Self {
        [p.x, p.y]
    }
}

impl From<(f64, f64)> for Point2 {
    fn from((x, y): (f64, f64)) -> Self {
        Self { x, y }
    }
}

impl Add for Point2 {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y)
    }
}

impl AddAssign for Point2 {
    #[inline]
    fn add_assign(&mut self, o: Self) {
        self.x += o.x;
        self.y += o.y;
    }
}

impl Sub for Point2 {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Self;
    #[inline]
    fn mul(self, s: f64) -> Self {
        Self::new(self.x * s, self.y * s)
    }
}

impl Neg for Point2 {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

/// The closed half-plane `{ p : normal · p <= offset }` with a unit normal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlane {
    pub normal: Point2,
    pub offset: f64,
}

impl HalfPlane {
    /// Half-plane bounded by the line through `point` with outward `normal`.
    /// The normal does not need to be unit length.
    pub fn through(point: Point2, normal: Point2) -> Self {
        let n = normal * (1.0 / normal.norm());
        Self { normal: n, offset: n.dot(point) }
    }

    /// Signed distance, positive outside.
    #[inline]
    pub fn signed_distance(&self, p: Point2) -> f64 {
        self.normal.dot(p) - self.offset
    }

    /// The same half-plane moved inward by `t`.
    #[inline]
    pub fn inset(&self, t: f64) -> Self {
        Self { normal: self.normal, offset: self.offset - t }
    }

    /// Intersection point of the two boundary lines, if they are not parallel.
    pub fn line_intersection(&self, other: &HalfPlane) -> Option<Point2> {
        let det = self.normal.cross(other.normal);
        if det.abs() < 1e-300 {
            return None;
        }
        let x = (self.offset * other.normal.y - other.offset * self.normal.y) / det;
        let y = (self.normal.x * other.offset - other.normal.x * self.offset) / det;
        Some(Point2::new(x, y))
    }
}

/// Per-vertex and per-side angular data.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleData {
    /// Interior angle at each vertex, in `(0, π)`.
    pub interior_angles: Vec<f64>,
    /// Length of side `i` (vertex `i` to vertex `i + 1`).
    pub side_lengths: Vec<f64>,
    /// Outward unit normal of side `i`.
    pub outward_normals: Vec<Point2>,
}

/// `cot(α/2)` for the interior angle `α` between consecutive edge vectors
/// `d0` and `d1` of a counterclockwise polygon, computed as `tan(φ/2)` of the
/// turning angle `φ = π − α`.
#[inline]
pub(crate) fn half_angle_cot(d0: Point2, d1: Point2) -> f64 {
    let (len, dot, cross) = (d0.norm() * d1.norm(), d0.dot(d1), d0.cross(d1));
    // sin φ/(1 + cos φ) and (1 − cos φ)/sin φ, whichever has no cancellation.
    if dot >= 0.0 {
        cross / (len + dot)
    } else {
        (len - dot) / cross
    }
}

/// Strictly convex polygon, vertices counterclockwise.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PolygonJson")]
pub struct ConvexPolygon {
    vertices: Vec<Point2>,
}

/// Interchange form: `{"vertices": [[x, y], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolygonJson {
    pub vertices: Vec<[f64; 2]>,
}

impl TryFrom<PolygonJson> for ConvexPolygon {
    type Error = Error;
    fn try_from(j: PolygonJson) -> Result<Self> {
        let pts: Vec<Point2> = j.vertices.into_iter().map(Point2::from).collect();
        ConvexPolygon::from_cyclic(&pts).or_else(|_| ConvexPolygon::from_points(&pts))
    }
}

impl fmt::Debug for ConvexPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.vertices.iter().map(|p| (p.x, p.y))).finish()
    }
}

fn scale_of(points: &[Point2]) -> f64 {
    let (mut lo, mut hi) = (points[0], points[0]);
    for p in points {
        lo.x = lo.x.min(p.x);
        lo.y = lo.y.min(p.y);
        hi.x = hi.x.max(p.x);
        hi.y = hi.y.max(p.y);
    }
    (hi - lo).norm()
}

impl ConvexPolygon {
    /// Convex hull of `points`, counterclockwise, with interior and collinear
    /// points removed.
    pub fn from_points(points: &[Point2]) -> Result<Self> {
        if points.iter().any(|p| !p.is_finite()) {
            return Err(Error::DegenerateInput("non-finite coordinate".into()));
        }
        if points.len() < 3 {
            return Err(Error::DegenerateInput(format!("need at least 3 points, got {}", points.len())));
        }
        let mut pts = points.to_vec();
        pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
        pts.dedup();
        let scale = scale_of(&pts);
        if pts.len() < 3 || scale == 0.0 {
            return Err(Error::DegenerateInput("fewer than 3 distinct points".into()));
        }
        let tol = COLLINEAR_TOL * scale * scale;

        // Andrew's monotone chain; turns at or below `tol` are dropped.
        let mut hull: Vec<Point2> = Vec::with_capacity(2 * pts.len());
        for pass in 0..2 {
            let start = hull.len();
            let iter: Box<dyn Iterator<Item = &Point2>> =
                if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
            for &p in iter {
                while hull.len() >= start + 2 {
                    let a = hull[hull.len() - 2];
                    let b = hull[hull.len() - 1];
                    if (b - a).cross(p - a) <= tol {
                        hull.pop();
                    } else {
                        break;
                    }
                }
                hull.push(p);
            }
            hull.pop();
        }
        Self::finish(hull, tol)
    }

    /// Builds a polygon from vertices already in convex cyclic order.
    /// Clockwise input is reversed. Collinear and duplicate vertices are
    /// merged; a reflex corner is an error.
    pub fn from_cyclic(vertices: &[Point2]) -> Result<Self> {
        if vertices.len() < 3 || vertices.iter().any(|p| !p.is_finite()) {
            return Err(Error::DegenerateInput("need at least 3 finite vertices".into()));
        }
        let mut v = vertices.to_vec();
        if signed_area(&v) < 0.0 {
            v.reverse();
        }
        let scale = scale_of(&v);
        if scale == 0.0 {
            return Err(Error::DegenerateInput("all vertices coincide".into()));
        }
        let tol = COLLINEAR_TOL * scale * scale;
        let n = v.len();
        for i in 0..n {
            let a = v[(i + n - 1) % n];
            let b = v[i];
            let c = v[(i + 1) % n];
            if (b - a).cross(c - b) < -tol {
                return Err(Error::DegenerateInput(format!("reflex corner at vertex {i}")));
            }
        }
        Self::finish(merge_collinear(v, tol), tol)
    }

    /// Construction without validation, for vertex lists produced by this
    /// crate's own convex routines. Near-duplicate vertices are still merged.
    pub(crate) fn from_ccw_trusted(vertices: Vec<Point2>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::DegenerateInput("fewer than 3 vertices".into()));
        }
        let scale = scale_of(&vertices);
        let tol = COLLINEAR_TOL * scale * scale;
        Self::finish(merge_collinear(vertices, tol), tol)
    }

    fn finish(vertices: Vec<Point2>, tol: f64) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::DegenerateInput("hull has fewer than 3 vertices".into()));
        }
        let a = signed_area(&vertices);
        if a <= tol {
            return Err(Error::DegenerateInput(format!("zero or negative area {a}")));
        }
        Ok(Self { vertices })
    }

    /// Intersection of half-planes. Fails when the intersection is empty,
    /// unbounded or has zero area.
    pub fn from_half_planes(planes: &[HalfPlane]) -> Result<Self> {
        if planes.len() < 3 {
            return Err(Error::DegenerateInput("need at least 3 half-planes".into()));
        }
        let reach = planes.iter().map(|h| h.offset.abs()).fold(1.0, f64::max) * 1e3;
        // Each vertex carries the label of the edge leaving it.
        let mut poly: Vec<(Point2, Option<usize>)> = vec![
            (Point2::new(-reach, -reach), None),
            (Point2::new(reach, -reach), None),
            (Point2::new(reach, reach), None),
            (Point2::new(-reach, reach), None),
        ];
        for (label, hp) in planes.iter().enumerate() {
            poly = clip_labelled(&poly, hp, label);
            if poly.len() < 3 {
                return Err(Error::DegenerateInput("empty half-plane intersection".into()));
            }
        }
        if poly.iter().any(|(_, l)| l.is_none()) {
            return Err(Error::DegenerateInput("unbounded half-plane intersection".into()));
        }
        // Snap every vertex to the exact intersection of its two lines.
        let n = poly.len();
        let refined: Vec<Point2> = (0..n)
            .map(|i| {
                let prev = poly[(i + n - 1) % n].1.unwrap();
                let cur = poly[i].1.unwrap();
                if prev == cur {
                    return poly[i].0;
                }
                planes[prev].line_intersection(&planes[cur]).unwrap_or(poly[i].0)
            })
            .collect();
        Self::from_points(&refined)
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Point2> {
        self.vertices
    }

    /// Number of sides (equal to the number of vertices).
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    #[inline]
    pub fn vertex(&self, i: usize) -> Point2 {
        self.vertices[i % self.vertices.len()]
    }

    /// Edge vector of side `i`.
    #[inline]
    pub fn edge(&self, i: usize) -> Point2 {
        self.vertex(i + 1) - self.vertex(i)
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point2, Point2)> + '_ {
        (0..self.len()).map(move |i| (self.vertex(i), self.vertex(i + 1)))
    }

    /// Outward unit normal of side `i`.
    pub fn outward_normal(&self, i: usize) -> Point2 {
        let e = self.edge(i);
        Point2::new(e.y, -e.x) * (1.0 / e.norm())
    }

    /// Supporting half-plane of side `i`.
    pub fn side_half_plane(&self, i: usize) -> HalfPlane {
        HalfPlane::through(self.vertex(i), self.outward_normal(i))
    }

    pub fn half_planes(&self) -> Vec<HalfPlane> {
        (0..self.len()).map(|i| self.side_half_plane(i)).collect()
    }

    /// Shoelace area.
    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    pub fn perimeter(&self) -> f64 {
        (0..self.len()).map(|i| self.edge(i).norm()).sum()
    }

    pub fn centroid(&self) -> Point2 {
        let n = self.len();
        let mut c = Point2::ORIGIN;
        let mut a2 = 0.0;
        for i in 0..n {
            let p = self.vertices[i];
            let q = self.vertices[(i + 1) % n];
            let w = p.cross(q);
            a2 += w;
            c += (p + q) * w;
        }
        c * (1.0 / (3.0 * a2))
    }

    pub fn angle_data(&self) -> AngleData {
        let n = self.len();
        let interior_angles = (0..n)
            .map(|i| {
                let d0 = self.edge(i + n - 1);
                let d1 = self.edge(i);
                PI - d0.cross(d1).atan2(d0.dot(d1))
            })
            .collect();
        AngleData {
            interior_angles,
            side_lengths: (0..n).map(|i| self.edge(i).norm()).collect(),
            outward_normals: (0..n).map(|i| self.outward_normal(i)).collect(),
        }
    }

    /// `cot(α/2)` at vertex `i`.
    pub fn half_angle_cot(&self, i: usize) -> f64 {
        let n = self.len();
        half_angle_cot(self.edge(i + n - 1), self.edge(i))
    }

    /// `T(Ω) = Σ cot(α_i / 2)`.
    pub fn t_functional(&self) -> f64 {
        (0..self.len()).map(|i| self.half_angle_cot(i)).sum()
    }

    /// Support function in direction `(cos θ, sin θ)`.
    pub fn support(&self, theta: f64) -> f64 {
        self.support_dir(Point2::from_angle(theta))
    }

    pub fn support_dir(&self, u: Point2) -> f64 {
        self.vertices.iter().map(|v| v.dot(u)).fold(f64::NEG_INFINITY, f64::max)
    }

    fn support_vertex(&self, u: Point2) -> Point2 {
        *self.vertices.iter().max_by(|a, b| a.dot(u).total_cmp(&b.dot(u))).unwrap()
    }

    /// Radial function about `center`: the largest `λ` with
    /// `center + λ (cos θ, sin θ)` inside the polygon. `center` must be interior.
    pub fn radial(&self, center: Point2, theta: f64) -> f64 {
        let u = Point2::from_angle(theta);
        (0..self.len())
            .filter_map(|i| {
                let hp = self.side_half_plane(i);
                let du = hp.normal.dot(u);
                (du > 0.0).then(|| (hp.offset - hp.normal.dot(center)) / du)
            })
            .fold(f64::INFINITY, f64::min)
    }

    pub fn translate(&self, v: Point2) -> Self {
        Self { vertices: self.vertices.iter().map(|&p| p + v).collect() }
    }

    /// Dilation about the origin.
    pub fn scale(&self, t: f64) -> Result<Self> {
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::NonPositiveScale(t));
        }
        Ok(self.scale_unchecked(t))
    }

    pub(crate) fn scale_unchecked(&self, t: f64) -> Self {
        Self { vertices: self.vertices.iter().map(|&p| p * t).collect() }
    }

    /// Rescaled copy with unit area.
    pub fn normalized(&self) -> Self {
        self.scale_unchecked(1.0 / self.area().sqrt())
    }

    /// Rotation about the origin.
    pub fn rotate(&self, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self {
            vertices: self
                .vertices
                .iter()
                .map(|p| Point2::new(c * p.x - s * p.y, s * p.x + c * p.y))
                .collect(),
        }
    }

    /// Minkowski sum by merging the two edge sequences in angular order.
    pub fn minkowski_sum(&self, other: &Self) -> Self {
        let a = rotate_to_lowest(&self.vertices);
        let b = rotate_to_lowest(&other.vertices);
        let (n, m) = (a.len(), b.len());
        let mut out = Vec::with_capacity(n + m);
        let (mut i, mut j) = (0, 0);
        while i < n || j < m {
            out.push(a[i % n] + b[j % m]);
            let ea = a[(i + 1) % n] - a[i % n];
            let eb = b[(j + 1) % m] - b[j % m];
            let turn = ea.cross(eb);
            if j >= m || (i < n && turn > 0.0) {
                i += 1;
            } else if i >= n || turn < 0.0 {
                j += 1;
            } else {
                i += 1;
                j += 1;
            }
        }
        Self::from_points(&out).expect("Minkowski sum of two convex polygons has positive area")
    }

    /// Hausdorff distance, computed as the exact supremum of the
    /// support-function difference. On every angular cell between
    /// consecutive edge-normal angles of either polygon, both support
    /// functions are fixed sinusoids, so the extremum is closed-form.
    pub fn hausdorff_distance(&self, other: &Self) -> f64 {
        let mut angles: Vec<f64> = (0..self.len())
            .map(|i| self.outward_normal(i).angle().rem_euclid(TAU))
            .chain((0..other.len()).map(|i| other.outward_normal(i).angle().rem_euclid(TAU)))
            .collect();
        angles.sort_by(f64::total_cmp);
        angles.dedup();
        let k = angles.len();
        let mut best: f64 = 0.0;
        for c in 0..k {
            let lo = angles[c];
            let hi = if c + 1 < k { angles[c + 1] } else { angles[0] + TAU };
            if hi - lo <= 0.0 {
                continue;
            }
            let u = Point2::from_angle(0.5 * (lo + hi));
            let w = self.support_vertex(u) - other.support_vertex(u);
            let f = |th: f64| w.dot(Point2::from_angle(th)).abs();
            best = best.max(f(lo)).max(f(hi));
            let phi = w.angle();
            for cand in [phi, phi + PI] {
                // Shift the critical angle into [lo, lo + 2π).
                let t = lo + (cand - lo).rem_euclid(TAU);
                if t <= hi {
                    best = best.max(f(t));
                }
            }
        }
        best
    }

    /// Largest vertex-to-vertex distance.
    pub fn diameter(&self) -> f64 {
        let v = &self.vertices;
        let mut best: f64 = 0.0;
        for i in 0..v.len() {
            for j in (i + 1)..v.len() {
                best = best.max((v[i] - v[j]).norm_sq());
            }
        }
        best.sqrt()
    }

    /// Inradius, the largest `t` with a nonempty inner parallel set.
    pub fn inradius(&self) -> f64 {
        crate::inner::inner_parallel_profile(self).inradius
    }

    /// Distance from `p` to the line supporting side `i`.
    pub fn distance_to_side_line(&self, i: usize, p: Point2) -> f64 {
        -self.side_half_plane(i).signed_distance(p)
    }

    pub fn to_json(&self) -> PolygonJson {
        PolygonJson { vertices: self.vertices.iter().map(|&p| p.into()).collect() }
    }
}

/// Signed shoelace area, positive for counterclockwise order.
pub fn signed_area(v: &[Point2]) -> f64 {
    let n = v.len();
    let mut s = 0.0;
    for i in 0..n {
        s += v[i].cross(v[(i + 1) % n]);
    }
    0.5 * s
}

fn merge_collinear(mut v: Vec<Point2>, tol: f64) -> Vec<Point2> {
    loop {
        let n = v.len();
        if n < 3 {
            return v;
        }
        let drop = (0..n).find(|&i| {
            let a = v[(i + n - 1) % n];
            let b = v[i];
            let c = v[(i + 1) % n];
            (b - a).cross(c - b).abs() <= tol || (b - a).norm_sq() <= tol
        });
        match drop {
            Some(i) => {
                v.remove(i);
            }
            None => return v,
        }
    }
}

fn rotate_to_lowest(v: &[Point2]) -> Vec<Point2> {
    let start =
        (0..v.len()).min_by(|&i, &j| v[i].y.total_cmp(&v[j].y).then(v[i].x.total_cmp(&v[j].x))).unwrap();
    v[start..].iter().chain(&v[..start]).copied().collect()
}

fn clip_labelled(
    poly: &[(Point2, Option<usize>)],
    hp: &HalfPlane,
    label: usize,
) -> Vec<(Point2, Option<usize>)> {
    let n = poly.len();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..n {
        let (p, lp) = poly[i];
        let (q, _) = poly[(i + 1) % n];
        let dp = hp.signed_distance(p);
        let dq = hp.signed_distance(q);
        let p_in = dp <= 0.0;
        let q_in = dq <= 0.0;
        if p_in {
            out.push((p, lp));
        }
        if p_in != q_in {
            let s = dp / (dp - dq);
            let x = p + (q - p) * s;
            out.push((x, if p_in { Some(label) } else { lp }));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn sq() -> ConvexPolygon {
        ConvexPolygon::from_points(&[
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap()
    }

    fn pts(v: &[(f64, f64)]) -> Vec<Point2> {
        v.iter().map(|&p| p.into()).collect()
    }

    #[test]
    fn hull_drops_interior_and_collinear_points() {
        let p = ConvexPolygon::from_points(&pts(&[
            (0.0, 0.0),
            (0.5, 0.0),
            (1.0, 0.0),
            (1.0, 1.0),
            (0.0, 1.0),
            (0.5, 0.5),
        ]))
        .unwrap();
        assert_eq!(p.len(), 4);
        assert_relative_eq!(p.area(), 1.0);
    }

    #[test]
    fn triangle_construction() {
        let t = ConvexPolygon::from_points(&pts(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)])).unwrap();
        assert_eq!(t.len(), 3);
        assert_relative_eq!(t.area(), 0.5);
    }

    #[test]
    fn collinear_input_is_degenerate() {
        let r = ConvexPolygon::from_points(&pts(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]));
        assert!(matches!(r, Err(Error::DegenerateInput(_))));
        assert!(ConvexPolygon::from_points(&pts(&[(0.0, 0.0), (1.0, 0.0)])).is_err());
    }

    #[test]
    fn cyclic_input_keeps_order_and_reverses_clockwise() {
        let cw = pts(&[(0.0, 0.0), (0.0, 1.0), (1.0, 1.0), (1.0, 0.0)]);
        let p = ConvexPolygon::from_cyclic(&cw).unwrap();
        assert!(p.area() > 0.0);
        let reflex = pts(&[(0.0, 0.0), (2.0, 0.0), (1.0, 0.2), (2.0, 2.0), (0.0, 2.0)]);
        assert!(ConvexPolygon::from_cyclic(&reflex).is_err());
    }

    #[test]
    fn square_measurements() {
        let s = sq();
        assert_relative_eq!(s.perimeter(), 4.0);
        let a = s.angle_data();
        for (ang, len) in a.interior_angles.iter().zip(&a.side_lengths) {
            assert_relative_eq!(*ang, PI / 2.0, epsilon = 1e-15);
            assert_relative_eq!(*len, 1.0);
        }
        assert_relative_eq!(s.t_functional(), 4.0, epsilon = 1e-14);
        assert_relative_eq!(s.support(0.0), 1.0);
        assert_relative_eq!(s.support(PI / 4.0), 2f64.sqrt(), epsilon = 1e-15);
        assert_relative_eq!(s.diameter(), 2f64.sqrt());
    }

    #[test]
    fn right_triangle_angles() {
        let t = ConvexPolygon::from_points(&pts(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)])).unwrap();
        let mut a = t.angle_data().interior_angles;
        a.sort_by(f64::total_cmp);
        assert_relative_eq!(a[0], PI / 4.0, epsilon = 1e-14);
        assert_relative_eq!(a[1], PI / 4.0, epsilon = 1e-14);
        assert_relative_eq!(a[2], PI / 2.0, epsilon = 1e-14);
    }

    #[test]
    fn scale_errors_and_laws() {
        let s = sq();
        assert!(matches!(s.scale(0.0), Err(Error::NonPositiveScale(_))));
        assert!(s.scale(-1.0).is_err());
        let s2 = s.scale(2.0).unwrap();
        assert_relative_eq!(s2.area(), 4.0);
        assert_relative_eq!(s2.perimeter(), 8.0);
        assert_eq!(s.scale(1.0).unwrap(), s);
    }

    #[test]
    fn minkowski_of_squares_doubles_side() {
        let s = sq();
        let m = s.minkowski_sum(&s);
        assert_eq!(m.len(), 4);
        assert_relative_eq!(m.area(), 4.0, epsilon = 1e-12);
    }

    #[test]
    fn hausdorff_examples() {
        let s = sq();
        assert_eq!(s.hausdorff_distance(&s), 0.0);
        let t = s.translate(Point2::new(1.0, 0.0));
        assert_relative_eq!(s.hausdorff_distance(&t), 1.0, epsilon = 1e-14);
        let c1 = s.translate(Point2::new(-0.5, -0.5));
        let c2 = c1.scale(2.0).unwrap();
        assert_relative_eq!(c1.hausdorff_distance(&c2), 0.5f64.sqrt(), epsilon = 1e-14);
    }

    #[test]
    fn half_plane_intersection_recovers_square() {
        let s = sq();
        let back = ConvexPolygon::from_half_planes(&s.half_planes()).unwrap();
        assert_relative_eq!(back.area(), 1.0, epsilon = 1e-14);
        assert_eq!(back.len(), 4);
        let open = &s.half_planes()[..2];
        assert!(ConvexPolygon::from_half_planes(open).is_err());
    }

    #[test]
    fn json_interchange() {
        let j = serde_json::to_string(&sq()).unwrap();
        assert_eq!(j, r#"{"vertices":[[0.0,0.0],[1.0,0.0],[1.0,1.0],[0.0,1.0]]}"#);
        let back: ConvexPolygon = serde_json::from_str(r#"{"vertices":[[0,1],[1,1],[1,0],[0,0]]}"#).unwrap();
        assert_relative_eq!(back.area(), 1.0);
        let bad = serde_json::from_str::<ConvexPolygon>(r#"{"vertices":[[0,0],[1,0]]}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn radial_function_of_centered_square() {
        let c = sq().translate(Point2::new(-0.5, -0.5));
        assert_relative_eq!(c.radial(Point2::ORIGIN, 0.0), 0.5, epsilon = 1e-15);
        assert_relative_eq!(c.radial(Point2::ORIGIN, PI / 4.0), 0.5f64.sqrt(), epsilon = 1e-15);
    }
}
