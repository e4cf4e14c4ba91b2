//! Cheeger constant and Cheeger set of a convex polygon.
//!
//! For a planar convex body the Cheeger constant is `1/t*`, where `t*` is the
//! unique inset with `|Ω₋ₜ| = π t²`, and the Cheeger set is the inset polygon
//! at `t*` rounded by a disk of radius `t*`. The root is found interval by
//! interval on the inner parallel profile, where `|Ω₋ₜ| − π t²` is an exact
//! quadratic.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{ConvexPolygon, Point2};
use crate::inner::{inner_parallel_profile, smallest_root, InnerParallelProfile};

/// Relative length below which an inset side no longer counts as contact.
const CONTACT_TOL: f64 = 1e-12;

/// The part of side `side` that lies on the boundary of the Cheeger set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContactSegment {
    pub side: usize,
    pub start: Point2,
    pub end: Point2,
}

#[derive(Debug, Clone)]
pub struct CheegerResult {
    pub h: f64,
    pub t_star: f64,
    /// The inner parallel set at `t_star`.
    pub core: ConvexPolygon,
    pub rounding_radius: f64,
    /// Original side indices that touch the Cheeger set along a segment.
    pub contact_side_indices: Vec<usize>,
    pub contact_segments: Vec<ContactSegment>,
    pub is_cheeger_regular: bool,
    pub cheeger_area: f64,
    pub cheeger_perimeter: f64,
    /// Index of the profile interval holding `t_star`.
    pub interval: usize,
}

/// Machine-readable summary used by the CLI.
#[derive(Debug, Clone, Serialize)]
pub struct CheegerJson {
    pub h: f64,
    pub t_star: f64,
    pub cheeger_regular: bool,
    pub contact_sides: Vec<usize>,
    pub core_vertices: Vec<[f64; 2]>,
}

impl CheegerResult {
    pub fn to_json(&self) -> CheegerJson {
        CheegerJson {
            h: self.h,
            t_star: self.t_star,
            cheeger_regular: self.is_cheeger_regular,
            contact_sides: self.contact_side_indices.clone(),
            core_vertices: self.core.vertices().iter().map(|&p| p.into()).collect(),
        }
    }

    /// Boundary of the Cheeger set: core edges pushed out by `t*` joined by
    /// circular arcs, with `segments_per_turn` chords per full circle.
    pub fn boundary_polyline(&self, segments_per_turn: usize) -> Vec<Point2> {
        let core = self.core.vertices();
        let n = core.len();
        let r = self.rounding_radius;
        let mut out = Vec::new();
        for i in 0..n {
            let e_prev = core[i] - core[(i + n - 1) % n];
            let e_next = core[(i + 1) % n] - core[i];
            let a0 = Point2::new(e_prev.y, -e_prev.x).angle();
            let mut a1 = Point2::new(e_next.y, -e_next.x).angle();
            if a1 < a0 {
                a1 += 2.0 * PI;
            }
            let steps = (((a1 - a0) / (2.0 * PI)) * segments_per_turn as f64).ceil().max(1.0) as usize;
            for k in 0..=steps {
                let a = a0 + (a1 - a0) * k as f64 / steps as f64;
                out.push(core[i] + Point2::from_angle(a) * r);
            }
        }
        out
    }
}

/// Solves the Cheeger problem for `p`.
pub fn cheeger(p: &ConvexPolygon) -> CheegerResult {
    cheeger_with_profile(p).0
}

/// Solves the Cheeger problem and also returns the inner parallel profile.
pub fn cheeger_with_profile(p: &ConvexPolygon) -> (CheegerResult, InnerParallelProfile) {
    let prof = inner_parallel_profile(p);
    let last = prof.intervals.len() - 1;
    let mut found = None;
    for (k, iv) in prof.intervals.iter().enumerate() {
        let g_end = if k == last {
            -PI * prof.inradius * prof.inradius
        } else {
            iv.area_at(iv.t_end) - PI * iv.t_end * iv.t_end
        };
        if g_end <= 0.0 || k == last {
            let tk = iv.t_start;
            let a = iv.t_functional - PI;
            let b = -(iv.perimeter + 2.0 * PI * tk);
            let c = iv.area - PI * tk * tk;
            let s = smallest_root(a, b, c.max(0.0)).unwrap_or(0.0).clamp(0.0, iv.t_end - tk);
            found = Some((k, tk + s));
            break;
        }
    }
    let (k, t_star) = found.expect("profile has at least one interval");

    let inset = prof.inset_at(t_star);
    let tol = CONTACT_TOL * p.diameter();
    let m = inset.vertices.len();
    let mut contact_segments = Vec::new();
    for j in 0..m {
        if inset.side_length(j) > tol {
            let side = inset.labels[j];
            let push = prof.side_plane(side).normal * t_star;
            contact_segments.push(ContactSegment {
                side,
                start: inset.vertices[j] + push,
                end: inset.vertices[(j + 1) % m] + push,
            });
        }
    }
    let mut contact_side_indices: Vec<usize> = contact_segments.iter().map(|c| c.side).collect();
    contact_side_indices.sort_unstable();

    let core = ConvexPolygon::from_ccw_trusted(inset.vertices.clone())
        .or_else(|_| ConvexPolygon::from_points(&inset.vertices))
        .expect("Cheeger core has area π t*² > 0");
    let is_cheeger_regular = k == 0 && t_star < prof.intervals[0].t_end;
    let cheeger_area = core.area() + t_star * core.perimeter() + PI * t_star * t_star;
    let cheeger_perimeter = core.perimeter() + 2.0 * PI * t_star;

    let res = CheegerResult {
        h: 1.0 / t_star,
        t_star,
        core,
        rounding_radius: t_star,
        contact_side_indices,
        contact_segments,
        is_cheeger_regular,
        cheeger_area,
        cheeger_perimeter,
        interval: k,
    };
    (res, prof)
}

/// `(P + √(P² − 4(T − π)A)) / (2A)`: the Cheeger constant of a
/// Cheeger-regular polygon, and a strict upper bound otherwise.
pub fn cheeger_regular_closed_form(p: &ConvexPolygon) -> f64 {
    let (per, area, t) = (p.perimeter(), p.area(), p.t_functional());
    (per + (per * per - 4.0 * (t - PI) * area).max(0.0).sqrt()) / (2.0 * area)
}

/// Lower bound for convex sets, `(P + √(4πA)) / (2A)`.
pub fn lower_bound_convex(perimeter: f64, area: f64) -> f64 {
    (perimeter + (4.0 * PI * area).sqrt()) / (2.0 * area)
}

/// Upper bound for polygons with at most `n` sides,
/// `(P + √(P² + 4(π − n·tan(π/n))A)) / (2A)`.
pub fn upper_bound_ngon(perimeter: f64, area: f64, n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("polygon class needs n >= 3, got {n}")));
    }
    let min = regular_perimeter(n) * area.sqrt();
    if perimeter < min * (1.0 - 1e-12) {
        return Err(Error::NegativeDiscriminant { perimeter, sides: n });
    }
    let disc = perimeter * perimeter + 4.0 * (PI - n_tan(n)) * area;
    Ok((perimeter + disc.max(0.0).sqrt()) / (2.0 * area))
}

/// The even-`n` upper boundary `f_n(x)` of the unit-area diagram.
/// Evaluated without the domain check.
pub fn f_n(n: usize, x: f64) -> f64 {
    (x + (x * x + 4.0 * (PI - n_tan(n))).max(0.0).sqrt()) / 2.0
}

/// Brooks–Waksman bound `(√T + √π) / √A`.
pub fn brooks_waksman_bound(p: &ConvexPolygon) -> f64 {
    (p.t_functional().sqrt() + PI.sqrt()) / p.area().sqrt()
}

/// `n·tan(π/n)`, the minimum of `T` over `n`-gons.
pub fn n_tan(n: usize) -> f64 {
    let n = n as f64;
    n * (PI / n).tan()
}

/// Perimeter of the unit-area regular `n`-gon, `2√(n·tan(π/n))`.
pub fn regular_perimeter(n: usize) -> f64 {
    2.0 * n_tan(n).sqrt()
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
    fn unit_square() {
        // (1 − 2t)² = πt²  ⇒  t = 1/(2 + √π).
        let oracle_t = 1.0 / (2.0 + PI.sqrt());
        let r = cheeger(&poly(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]));
        assert_relative_eq!(r.t_star, oracle_t, epsilon = 1e-15);
        assert_relative_eq!(r.h, 3.772453850905516, epsilon = 1e-12);
        assert!(r.is_cheeger_regular);
        assert_eq!(r.contact_side_indices, vec![0, 1, 2, 3]);
        assert_relative_eq!(r.cheeger_perimeter / r.cheeger_area, r.h, max_relative = 1e-12);
        assert_relative_eq!(r.h * r.t_star, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn obtuse_triangle_is_still_regular() {
        let r = cheeger(&poly(&[(0., 0.), (10., 0.), (5.0, 0.4)]));
        assert!(r.is_cheeger_regular);
    }

    #[test]
    fn thin_trapezoid_loses_contact_with_short_top() {
        // The short top side disappears from the inset long before t*.
        let p = poly(&[(0., 0.), (6., 0.), (3.15, 2.0), (2.85, 2.0)]);
        let r = cheeger(&p);
        assert!(!r.is_cheeger_regular);
        assert!(!r.contact_side_indices.contains(&2));
        assert!(cheeger_regular_closed_form(&p) > r.h);
    }

    #[test]
    fn closed_form_matches_on_square() {
        let s = poly(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]);
        assert_relative_eq!(cheeger_regular_closed_form(&s), 2.0 + PI.sqrt(), epsilon = 1e-14);
        assert_relative_eq!(brooks_waksman_bound(&s), 2.0 + PI.sqrt(), epsilon = 1e-14);
    }

    #[test]
    fn bound_functions() {
        assert_relative_eq!(lower_bound_convex(4.0, 1.0), 2.0 + PI.sqrt());
        assert_relative_eq!(lower_bound_convex(2.0 * PI.sqrt(), 1.0), 2.0 * PI.sqrt());
        assert_relative_eq!(upper_bound_ngon(4.0, 1.0, 4).unwrap(), 2.0 + PI.sqrt(), epsilon = 1e-14);
        // 5·tan(π/5) = 3.6327126400268046.
        let f5 = (4.0 + (16.0 + 4.0 * (PI - 3.6327126400268046f64)).sqrt()) / 2.0;
        assert_relative_eq!(upper_bound_ngon(4.0, 1.0, 5).unwrap(), f5, epsilon = 1e-14);
        assert_relative_eq!(f5, 3.8732, epsilon = 1e-4);
        assert!(matches!(upper_bound_ngon(3.0, 1.0, 5), Err(Error::NegativeDiscriminant { .. })));
    }

    #[test]
    fn f_n_gap_to_trivial_bound_shrinks() {
        let x = 6.0;
        let mut prev = f64::INFINITY;
        for n in 3..=200 {
            let gap = (f_n(n, x) - x).abs();
            assert!(gap < prev, "n = {n}");
            prev = gap;
        }
    }

    #[test]
    fn cheeger_boundary_polyline_closes_around_core() {
        let r = cheeger(&poly(&[(0., 0.), (1., 0.), (1., 1.), (0., 1.)]));
        let pl = r.boundary_polyline(64);
        assert!(pl.len() >= 64);
        let inside = ConvexPolygon::from_points(&pl).unwrap();
        assert!((inside.area() - r.cheeger_area).abs() < 2e-3);
    }
}
