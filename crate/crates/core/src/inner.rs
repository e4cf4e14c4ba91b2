//! Inner parallel sets of convex polygons.
//!
//! Insetting every side of a convex polygon by `t` moves its supporting line
//! inward; side `i` shrinks at the constant rate `cot(α_i/2) + cot(α_{i+1}/2)`
//! until it vanishes. Between two consecutive vanishing events the area and
//! perimeter follow the Steiner formulas exactly:
//!
//! ```text
//! A(t) = A_k − (t − t_k)·P_k + (t − t_k)²·T_k
//! P(t) = P_k − 2(t − t_k)·T_k
//! ```
//!
//! At each event the polygon is rebuilt as the intersection of the surviving
//! inset half-planes.

use crate::geom::{half_angle_cot, ConvexPolygon, HalfPlane, Point2};

/// Sides shorter than this fraction of the diameter at an event are dropped.
const EVENT_TOL: f64 = 1e-12;

/// One interval `[t_start, t_end)` on which the inset polygon keeps the same
/// set of sides.
#[derive(Debug, Clone)]
pub struct ProfileInterval {
    pub t_start: f64,
    pub t_end: f64,
    /// Number of sides on this interval.
    pub sides: usize,
    pub perimeter: f64,
    pub area: f64,
    pub t_functional: f64,
    /// The inset polygon at `t_start`; `None` only if it collapsed numerically.
    pub polygon: Option<ConvexPolygon>,
    /// Original side index of each surviving side, in counterclockwise order.
    pub(crate) labels: Vec<usize>,
}

impl ProfileInterval {
    /// Area of the inset polygon at absolute inset `t` (Steiner formula).
    pub fn area_at(&self, t: f64) -> f64 {
        let s = t - self.t_start;
        self.area - s * self.perimeter + s * s * self.t_functional
    }

    pub fn perimeter_at(&self, t: f64) -> f64 {
        self.perimeter - 2.0 * (t - self.t_start) * self.t_functional
    }
}

/// Event sequence of the inner parallel sets `Ω₋ₜ`, `0 <= t <= inradius`.
#[derive(Debug, Clone)]
pub struct InnerParallelProfile {
    pub intervals: Vec<ProfileInterval>,
    pub inradius: f64,
    planes: Vec<HalfPlane>,
}

/// Inset polygon at a given `t`, with the original side index of every edge.
#[derive(Debug, Clone)]
pub struct InsetPolygon {
    pub vertices: Vec<Point2>,
    pub labels: Vec<usize>,
}

impl InsetPolygon {
    pub fn side_length(&self, j: usize) -> f64 {
        let n = self.vertices.len();
        (self.vertices[(j + 1) % n] - self.vertices[j]).norm()
    }
}

impl InnerParallelProfile {
    /// Event times `t_0 = 0 < t_1 < … < t_K = inradius`.
    pub fn event_times(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.intervals.iter().map(|i| i.t_start).collect();
        v.push(self.inradius);
        v
    }

    /// Index of the interval containing `t` (clamped to the valid range).
    pub fn interval_index(&self, t: f64) -> usize {
        self.intervals.iter().position(|iv| t < iv.t_end).unwrap_or(self.intervals.len() - 1)
    }

    /// `|Ω₋ₜ|`, zero beyond the inradius.
    pub fn area_at(&self, t: f64) -> f64 {
        if t >= self.inradius {
            return 0.0;
        }
        self.intervals[self.interval_index(t)].area_at(t)
    }

    pub fn perimeter_at(&self, t: f64) -> f64 {
        if t >= self.inradius {
            return 0.0;
        }
        self.intervals[self.interval_index(t)].perimeter_at(t)
    }

    /// Vertices of `Ω₋ₜ` for `t` inside the profile, as the intersection of
    /// the half-planes that survive on the containing interval.
    pub fn inset_at(&self, t: f64) -> InsetPolygon {
        let iv = &self.intervals[self.interval_index(t)];
        let planes: Vec<HalfPlane> = iv.labels.iter().map(|&l| self.planes[l].inset(t)).collect();
        InsetPolygon { vertices: consecutive_intersections(&planes), labels: iv.labels.clone() }
    }

    /// Supporting half-plane of original side `i`.
    pub fn side_plane(&self, i: usize) -> HalfPlane {
        self.planes[i]
    }
}

fn consecutive_intersections(planes: &[HalfPlane]) -> Vec<Point2> {
    let n = planes.len();
    (0..n)
        .map(|j| {
            let a = &planes[(j + n - 1) % n];
            let b = &planes[j];
            a.line_intersection(b).unwrap_or_else(|| {
                // Parallel neighbours only occur in a collapsed strip.
                b.normal * b.offset
            })
        })
        .collect()
}

/// Runs the event sweep.
pub fn inner_parallel_profile(p: &ConvexPolygon) -> InnerParallelProfile {
    let planes = p.half_planes();
    let diam = p.diameter();
    let tol = EVENT_TOL * diam;
    let mut labels: Vec<usize> = (0..p.len()).collect();
    let mut t = 0.0;
    let mut intervals = Vec::new();
    let mut polygon = Some(p.clone());

    loop {
        let cur: Vec<HalfPlane> = labels.iter().map(|&l| planes[l].inset(t)).collect();
        let verts = match (&polygon, t == 0.0) {
            (Some(poly), true) => poly.vertices().to_vec(),
            _ => consecutive_intersections(&cur),
        };
        let n = cur.len();
        // cot(α/2) at vertex j, the corner between side j-1 and side j.
        let cots: Vec<f64> = (0..n)
            .map(|j| {
                let a = cur[(j + n - 1) % n].normal;
                let b = cur[j].normal;
                half_angle_cot(a.perp(), b.perp())
            })
            .collect();
        let lengths: Vec<f64> = (0..n)
            .map(|j| {
                let d = cur[j].normal.perp();
                d.dot(verts[(j + 1) % n] - verts[j])
            })
            .collect();
        let rates: Vec<f64> = (0..n).map(|j| cots[j] + cots[(j + 1) % n]).collect();
        let t_func: f64 = cots.iter().sum();
        let perim: f64 = lengths.iter().sum();
        let area = crate::geom::signed_area(&verts);

        let dt = (0..n)
            .filter(|&j| rates[j] > 0.0)
            .map(|j| (lengths[j] / rates[j]).max(0.0))
            .fold(f64::INFINITY, f64::min);
        let t_next = t + dt;

        let survivors: Vec<usize> = (0..n).filter(|&j| lengths[j] - dt * rates[j] > tol).collect();

        // A collapse happens when the remaining lines no longer bound a
        // region of positive area.
        let collapse = !dt.is_finite() || survivors.len() < 3 || !bounded(&survivors, &cur) || {
            let next: Vec<HalfPlane> = survivors.iter().map(|&j| planes[labels[j]].inset(t_next)).collect();
            let nv = consecutive_intersections(&next);
            crate::geom::signed_area(&nv) <= tol * tol
        };

        let t_end = if dt.is_finite() {
            t_next
        } else {
            // No shrinking side left; fall back to the Steiner root.
            t + smallest_root(t_func, -perim, area).unwrap_or(0.0)
        };

        intervals.push(ProfileInterval {
            t_start: t,
            t_end,
            sides: n,
            perimeter: perim,
            area,
            t_functional: t_func,
            polygon: polygon.take(),
            labels: labels.clone(),
        });

        if collapse {
            return InnerParallelProfile { intervals, inradius: t_end, planes };
        }

        labels = survivors.iter().map(|&j| labels[j]).collect();
        t = t_next;
        let next: Vec<HalfPlane> = labels.iter().map(|&l| planes[l].inset(t)).collect();
        polygon = ConvexPolygon::from_ccw_trusted(consecutive_intersections(&next)).ok();
    }
}

fn bounded(survivors: &[usize], cur: &[HalfPlane]) -> bool {
    let m = survivors.len();
    (0..m).all(|k| {
        let a = cur[survivors[k]].normal;
        let b = cur[survivors[(k + 1) % m]].normal;
        // Turning from one normal to the next must stay strictly below π.
        a.cross(b) > 0.0
    })
}

/// Smallest nonnegative root of `a s² + b s + c` with `c >= 0`, `b < 0`.
pub(crate) fn smallest_root(a: f64, b: f64, c: f64) -> Option<f64> {
    let disc = b * b - 4.0 * a * c;
    let q = -b + disc.max(0.0).sqrt();
    if q <= 0.0 {
        return None;
    }
    Some(2.0 * c / q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn poly(v: &[(f64, f64)]) -> ConvexPolygon {
        let pts: Vec<Point2> = v.iter().map(|&p| p.into()).collect();
        ConvexPolygon::from_points(&pts).unwrap()
    }

    #[test]
    fn unit_square_single_interval() {
        let prof = inner_parallel_profile(&poly(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]));
        assert_eq!(prof.intervals.len(), 1);
        assert_eq!(prof.intervals[0].sides, 4);
        assert_relative_eq!(prof.inradius, 0.5, epsilon = 1e-14);
    }

    #[test]
    fn long_rectangle_collapses_to_segment() {
        let prof = inner_parallel_profile(&poly(&[(0., 0.), (3., 0.), (3., 1.), (0., 1.)]));
        assert_eq!(prof.intervals.len(), 1);
        assert_eq!(prof.intervals[0].sides, 4);
        assert_relative_eq!(prof.inradius, 0.5, epsilon = 1e-14);
    }

    #[test]
    fn right_triangle_inradius() {
        let prof = inner_parallel_profile(&poly(&[(0., 0.), (4., 0.), (0., 3.)]));
        assert_eq!(prof.intervals.len(), 1);
        assert_relative_eq!(prof.inradius, 1.0, epsilon = 1e-13);
    }

    #[test]
    fn events_drop_sides_and_t_grows() {
        // A pentagon with one very short side: that side vanishes first.
        let p = poly(&[(0., 0.), (4., 0.), (4.2, 0.3), (3.0, 2.5), (0.0, 2.0)]);
        let prof = inner_parallel_profile(&p);
        assert!(prof.intervals.len() >= 2);
        for w in prof.intervals.windows(2) {
            assert!(w[0].t_start < w[1].t_start);
            assert!(w[0].sides > w[1].sides);
            assert!(w[0].t_functional < w[1].t_functional);
            // Steiner continuity across the event.
            assert_relative_eq!(w[0].area_at(w[1].t_start), w[1].area, epsilon = 1e-12);
            assert_relative_eq!(w[0].perimeter_at(w[1].t_start), w[1].perimeter, epsilon = 1e-12);
        }
        assert_relative_eq!(prof.area_at(prof.inradius - 1e-15), 0.0, epsilon = 1e-12);
    }
}
