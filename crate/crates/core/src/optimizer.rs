//! Maximizing the Cheeger constant over `N`-gons of unit area and fixed
//! perimeter.
//!
//! A polygon is the flat vector `(x₁..x_N, y₁..y_N)`. The solver works with
//! the scale-invariant pair `J = √A·h` and `q = P/√A − p₀`: every iterate is
//! rescaled to unit area and pulled back onto `q = 0` by Newton steps along
//! `∇q`, and the ascent direction is the gradient tangent to that manifold.
//! Convexity `C_k ≤ 0` enters through an augmented Lagrangian with a small
//! margin, and steps that would make any `C_k` nonnegative are rejected.

use std::f64::consts::PI;

use serde::Serialize;

use crate::cheeger::{cheeger, f_n, regular_perimeter, CheegerResult};
use crate::diagram::DiagramPoint;
use crate::error::{Error, Result};
use crate::families::regular_polygon;
use crate::geom::{signed_area, ConvexPolygon, Point2};
use crate::random::{item_rng, valtr_polygon};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimizerOptions {
    /// Number of independent starts per solve.
    pub starts: usize,
    pub seed: u64,
    /// Ascent iterations per penalty round.
    pub max_iter: usize,
    pub rounds: usize,
    pub mu0: f64,
    pub mu_growth: f64,
    /// Iterates aim for `C_k ≤ −margin`.
    pub margin: f64,
    pub grad_tol: f64,
    pub feas_tol: f64,
}

impl Default for OptimizerOptions {
    fn default() -> Self {
        Self {
            starts: 8,
            seed: 0,
            max_iter: 400,
            rounds: 6,
            mu0: 10.0,
            mu_growth: 10.0,
            margin: 1e-9,
            grad_tol: 1e-6,
            feas_tol: 1e-8,
        }
    }
}

/// Analytic derivatives with respect to `(x₁..x_N, y₁..y_N)`.
#[derive(Debug, Clone)]
pub struct GradientBundle {
    pub dh: Vec<f64>,
    pub dp: Vec<f64>,
    pub da: Vec<f64>,
    /// Row `k` is `∇C_k`.
    pub dc: Vec<Vec<f64>>,
}

fn to_points(coords: &[f64]) -> Vec<Point2> {
    let n = coords.len() / 2;
    (0..n).map(|k| Point2::new(coords[k], coords[n + k])).collect()
}

fn to_coords(pts: &[Point2]) -> Vec<f64> {
    let mut z: Vec<f64> = pts.iter().map(|p| p.x).collect();
    z.extend(pts.iter().map(|p| p.y));
    z
}

/// `C_k = (x_{k−1}−x_k)(y_{k+1}−y_k) − (y_{k−1}−y_k)(x_{k+1}−x_k)`, cyclic.
pub fn convexity_constraints(coords: &[f64]) -> Vec<f64> {
    let v = to_points(coords);
    let n = v.len();
    (0..n).map(|k| (v[(k + n - 1) % n] - v[k]).cross(v[(k + 1) % n] - v[k])).collect()
}

pub fn convexity_jacobian(coords: &[f64]) -> Vec<Vec<f64>> {
    let v = to_points(coords);
    let n = v.len();
    (0..n)
        .map(|k| {
            let (a, b, c) = ((k + n - 1) % n, k, (k + 1) % n);
            let u = v[a] - v[b];
            let w = v[c] - v[b];
            let da = Point2::new(w.y, -w.x);
            let dcv = Point2::new(-u.y, u.x);
            let mut row = vec![0.0; 2 * n];
            for (i, g) in [(a, da), (c, dcv), (b, -(da + dcv))] {
                row[i] += g.x;
                row[n + i] += g.y;
            }
            row
        })
        .collect()
}

pub fn perimeter_gradient(coords: &[f64]) -> Vec<f64> {
    let v = to_points(coords);
    let n = v.len();
    let mut g = vec![0.0; 2 * n];
    for k in 0..n {
        let e = v[(k + 1) % n] - v[k];
        let len = e.norm();
        if len == 0.0 {
            continue;
        }
        let u = e * (1.0 / len);
        g[k] -= u.x;
        g[n + k] -= u.y;
        g[(k + 1) % n] += u.x;
        g[n + (k + 1) % n] += u.y;
    }
    g
}

/// `∂A/∂x_k = (y_{k+1} − y_{k−1})/2`, `∂A/∂y_k = (x_{k−1} − x_{k+1})/2`.
pub fn area_gradient(coords: &[f64]) -> Vec<f64> {
    let v = to_points(coords);
    let n = v.len();
    let mut g = vec![0.0; 2 * n];
    for k in 0..n {
        let prev = v[(k + n - 1) % n];
        let next = v[(k + 1) % n];
        g[k] = 0.5 * (next.y - prev.y);
        g[n + k] = 0.5 * (prev.x - next.x);
    }
    g
}

/// Shape derivative of `h` for vertex displacements of the raw vertex list
/// `pts`, given the Cheeger result of their hull.
fn cheeger_gradient_raw(pts: &[Point2], r: &CheegerResult) -> Result<Vec<f64>> {
    if r.contact_segments.is_empty() {
        return Err(Error::NoContact);
    }
    let n = pts.len();
    let scale = pts.iter().map(|p| p.norm()).fold(0.0, f64::max).max(1e-300);
    let tol = 1e-9 * scale;
    let coef = -r.h / r.cheeger_area;
    let mut g = vec![0.0; 2 * n];
    for j in 0..n {
        let a = pts[j];
        let d = pts[(j + 1) % n] - a;
        let len = d.norm();
        if len <= tol {
            continue;
        }
        let nrm = Point2::new(d.y, -d.x) * (1.0 / len);
        for c in &r.contact_segments {
            let on_line = |p: Point2| nrm.dot(p - a).abs() <= tol;
            if !on_line(c.start) || !on_line(c.end) {
                continue;
            }
            let s_of = |p: Point2| ((p - a).dot(d) / (len * len)).clamp(0.0, 1.0);
            let (s1, s2) = {
                let (u, w) = (s_of(c.start), s_of(c.end));
                (u.min(w), u.max(w))
            };
            if s2 <= s1 {
                continue;
            }
            let sq = 0.5 * (s2 * s2 - s1 * s1);
            let start_weight = coef * len * ((s2 - s1) - sq);
            let end_weight = coef * len * sq;
            let k = (j + 1) % n;
            g[j] += start_weight * nrm.x;
            g[n + j] += start_weight * nrm.y;
            g[k] += end_weight * nrm.x;
            g[n + k] += end_weight * nrm.y;
        }
    }
    Ok(g)
}

/// `∂h/∂(x_k, y_k)` from the shape derivative `−(h/|C|)∫⟨V, n⟩` over the
/// flat part of the Cheeger set's boundary, `V` the hat field of vertex `k`.
pub fn cheeger_gradient(p: &ConvexPolygon) -> Result<Vec<f64>> {
    cheeger_gradient_raw(p.vertices(), &cheeger(p))
}

pub fn gradient_bundle(coords: &[f64]) -> Result<GradientBundle> {
    let pts = to_points(coords);
    let poly = ConvexPolygon::from_cyclic(&pts)?;
    Ok(GradientBundle {
        dh: cheeger_gradient_raw(&pts, &cheeger(&poly))?,
        dp: perimeter_gradient(coords),
        da: area_gradient(coords),
        dc: convexity_jacobian(coords),
    })
}

/// Result of one constrained solve, vertices at unit area.
#[derive(Debug, Clone, Serialize)]
pub struct OptimizeResult {
    pub sides: usize,
    pub p0: f64,
    pub vertices: Vec<[f64; 2]>,
    pub h: f64,
    pub area_residual: f64,
    pub perimeter_residual: f64,
    /// Largest `C_k`; nonpositive for a convex output.
    pub max_convexity: f64,
    /// `f_N(p0)`, the closed-form upper bound at the target perimeter.
    pub f_n_reference: f64,
    pub cheeger_regular: bool,
    pub converged: bool,
    /// Sides left after merging vertices with `|C_k| ≤ 1e-6`.
    pub merged_sides: usize,
    pub gradient_norm: f64,
    pub iterations: usize,
    /// Which start produced the result.
    pub start: String,
}

impl OptimizeResult {
    pub fn polygon(&self) -> ConvexPolygon {
        let pts: Vec<Point2> = self.vertices.iter().map(|&v| v.into()).collect();
        ConvexPolygon::from_cyclic(&pts).expect("optimizer output is convex")
    }

    pub fn residual(&self) -> f64 {
        self.area_residual.max(self.perimeter_residual).max(self.max_convexity.max(0.0))
    }

    pub fn diagram_point(&self) -> DiagramPoint {
        let poly = self.polygon();
        let sa = poly.area().sqrt();
        DiagramPoint::new(
            format!("optimum:N={},p0={}", self.sides, self.p0),
            poly.perimeter() / sa,
            sa * self.h,
            Some(self.cheeger_regular),
        )
    }
}

/// Vertex mean at the origin and unit area.
fn normalize(z: &mut [f64]) {
    let n = z.len() / 2;
    let (mx, my) = (z[..n].iter().sum::<f64>() / n as f64, z[n..].iter().sum::<f64>() / n as f64);
    let a = signed_area(&to_points(z));
    let s = 1.0 / a.abs().sqrt();
    for k in 0..n {
        z[k] = (z[k] - mx) * s;
        z[n + k] = (z[n + k] - my) * s;
    }
}

fn strictly_convex(z: &[f64]) -> bool {
    convexity_constraints(z).iter().all(|&c| c < 0.0)
}

fn perimeter_of(z: &[f64]) -> f64 {
    let v = to_points(z);
    let n = v.len();
    (0..n).map(|k| (v[(k + 1) % n] - v[k]).norm()).sum()
}

/// `q = P/√A − p0` and its gradient.
fn q_and_grad(z: &[f64], p0: f64) -> (f64, Vec<f64>) {
    let a = signed_area(&to_points(z));
    let p = perimeter_of(z);
    let sa = a.sqrt();
    let dp = perimeter_gradient(z);
    let da = area_gradient(z);
    let g = dp.iter().zip(&da).map(|(&gp, &ga)| gp / sa - p * ga / (2.0 * a * sa)).collect();
    (p / sa - p0, g)
}

/// Newton projection onto `q = 0`, keeping strict convexity.
fn project(mut z: Vec<f64>, p0: f64) -> Option<Vec<f64>> {
    normalize(&mut z);
    for _ in 0..60 {
        if !strictly_convex(&z) {
            return None;
        }
        let (q, g) = q_and_grad(&z, p0);
        if q.abs() <= 1e-13 * p0 {
            return Some(z);
        }
        let g2: f64 = g.iter().map(|v| v * v).sum();
        if !(g2 > 1e-300) {
            return None;
        }
        // Limit the Newton step to a fraction of the polygon size.
        let step = q / g2;
        let len = step.abs() * g2.sqrt();
        let damp = if len > 0.2 { 0.2 / len } else { 1.0 };
        for (zi, gi) in z.iter_mut().zip(&g) {
            *zi -= damp * step * gi;
        }
        normalize(&mut z);
    }
    None
}

struct Eval {
    phi: f64,
    c: Vec<f64>,
    res: CheegerResult,
}

struct Penalty<'a> {
    lambda: &'a [f64],
    mu: f64,
    margin: f64,
}

impl Penalty<'_> {
    fn value(&self, c: &[f64]) -> f64 {
        c.iter()
            .zip(self.lambda)
            .map(|(&ck, &l)| {
                let m = (l + self.mu * (ck + self.margin)).max(0.0);
                (m * m - l * l) / (2.0 * self.mu)
            })
            .sum()
    }

    fn weights(&self, c: &[f64]) -> Vec<f64> {
        c.iter().zip(self.lambda).map(|(&ck, &l)| (l + self.mu * (ck + self.margin)).max(0.0)).collect()
    }
}

fn evaluate(z: &[f64], pen: &Penalty) -> Option<Eval> {
    let c = convexity_constraints(z);
    if c.iter().any(|&ck| ck >= 0.0) {
        return None;
    }
    let poly = ConvexPolygon::from_cyclic(&to_points(z)).ok()?;
    let res = cheeger(&poly);
    let phi = poly.area().sqrt() * res.h - pen.value(&c);
    Some(Eval { phi, c, res })
}

/// Tangent ascent direction of the penalized objective at `z`.
fn ascent_direction(z: &[f64], ev: &Eval, pen: &Penalty, p0: f64) -> Option<Vec<f64>> {
    let pts = to_points(z);
    let dh = cheeger_gradient_raw(&pts, &ev.res).ok()?;
    let a = signed_area(&pts);
    let sa = a.sqrt();
    let da = area_gradient(z);
    let h = ev.res.h;
    let mut g: Vec<f64> = dh.iter().zip(&da).map(|(&gh, &ga)| sa * gh + h * ga / (2.0 * sa)).collect();
    let w = pen.weights(&ev.c);
    let jac = convexity_jacobian(z);
    for (wk, row) in w.iter().zip(&jac) {
        if *wk > 0.0 {
            for (gi, ri) in g.iter_mut().zip(row) {
                *gi -= wk * ri;
            }
        }
    }
    let (_, dq) = q_and_grad(z, p0);
    let dq2: f64 = dq.iter().map(|v| v * v).sum();
    if dq2 > 1e-300 {
        let s = g.iter().zip(&dq).map(|(a, b)| a * b).sum::<f64>() / dq2;
        for (gi, qi) in g.iter_mut().zip(&dq) {
            *gi -= s * qi;
        }
    }
    Some(g)
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Projected ascent from a feasible `z`; returns the final iterate, its
/// projected-gradient norm and the number of iterations.
fn ascend(z0: Vec<f64>, p0: f64, opts: &OptimizerOptions) -> (Vec<f64>, f64, usize) {
    let n = z0.len() / 2;
    let mut z = z0;
    let mut lambda = vec![0.0; n];
    let mut mu = opts.mu0;
    let mut iterations = 0;
    let mut gnorm = f64::INFINITY;
    for _ in 0..opts.rounds {
        let pen = Penalty { lambda: &lambda, mu, margin: opts.margin };
        let Some(mut ev) = evaluate(&z, &pen) else {
            break;
        };
        let mut step: f64 = 0.05;
        for _ in 0..opts.max_iter {
            iterations += 1;
            let Some(g) = ascent_direction(&z, &ev, &pen, p0) else {
                break;
            };
            gnorm = norm(&g);
            if gnorm <= opts.grad_tol {
                break;
            }
            let mut alpha = (2.0 * step).min(0.5) / gnorm;
            let mut accepted = false;
            while alpha * gnorm > 1e-14 {
                let trial: Vec<f64> = z.iter().zip(&g).map(|(a, b)| a + alpha * b).collect();
                if let Some(zt) = project(trial, p0) {
                    if let Some(et) = evaluate(&zt, &pen) {
                        let gain = et.phi - ev.phi;
                        let armijo = gain >= 1e-4 * alpha * gnorm * gnorm;
                        if armijo || (alpha * gnorm < 1e-6 && gain > 0.0) {
                            z = zt;
                            ev = et;
                            step = alpha * gnorm;
                            accepted = true;
                            break;
                        }
                    }
                }
                alpha *= 0.5;
            }
            if !accepted {
                break;
            }
        }
        lambda = pen.weights(&ev.c);
        mu *= opts.mu_growth;
    }
    (z, gnorm, iterations)
}

fn x_stretch(p: &ConvexPolygon, lambda: f64) -> Vec<Point2> {
    p.vertices().iter().map(|v| Point2::new(v.x * lambda, v.y)).collect()
}

/// Scale-invariant perimeter of a vertex list.
fn iso_ratio(pts: &[Point2]) -> f64 {
    perimeter_of(&to_coords(pts)) / signed_area(pts).abs().sqrt()
}

/// Stretches `p` along x until `P/√A = p0`; needs `P/√A ≤ p0` at the start.
fn stretch_to(p: &ConvexPolygon, p0: f64) -> Option<Vec<f64>> {
    let f = |l: f64| iso_ratio(&x_stretch(p, l)) - p0;
    if f(1.0) > 0.0 {
        return None;
    }
    let (mut lo, mut hi) = (1.0, 2.0);
    while f(hi) < 0.0 {
        lo = hi;
        hi *= 2.0;
        if hi > 1e12 {
            return None;
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    project(to_coords(&x_stretch(p, 0.5 * (lo + hi))), p0)
}

/// Equiangular polygon with the normals of `R_N` and support offsets
/// `r(1 + ε|cos θ_i|)`.
fn equiangular(n: usize, eps: f64) -> Option<ConvexPolygon> {
    let r = regular_polygon(n).ok()?.inradius();
    let planes: Vec<crate::geom::HalfPlane> = (0..n)
        .map(|i| {
            let th = PI / n as f64 + 2.0 * PI * i as f64 / n as f64;
            crate::geom::HalfPlane {
                normal: Point2::from_angle(th),
                offset: r * (1.0 + eps * th.cos().abs()),
            }
        })
        .collect();
    let p = ConvexPolygon::from_half_planes(&planes).ok()?;
    (p.len() == n).then_some(p)
}

fn equiangular_start(n: usize, p0: f64) -> Option<Vec<f64>> {
    let f = |e: f64| equiangular(n, e).map(|p| iso_ratio(p.vertices()) - p0);
    let (mut lo, mut hi) = (0.0, 1.0);
    loop {
        match f(hi) {
            Some(v) if v >= 0.0 => break,
            Some(_) => {
                lo = hi;
                hi *= 2.0;
                if hi > 1e6 {
                    return None;
                }
            }
            None => {
                hi = 0.5 * (lo + hi);
                if hi - lo < 1e-12 {
                    return None;
                }
            }
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        match f(mid) {
            Some(v) if v < 0.0 => lo = mid,
            _ => hi = mid,
        }
    }
    project(to_coords(equiangular(n, lo)?.vertices()), p0)
}

/// `R_N` elongated with all angles kept, matched to `p0`.
fn elongated_start(n: usize, p0: f64) -> Option<Vec<f64>> {
    let d0 = crate::families::regular_diameter(n);
    let f = |d: f64| crate::families::stretched_regular(n, d).map(|p| p.perimeter() - p0);
    let (mut lo, mut hi) = (d0, 2.0 * d0);
    while f(hi).ok()? < 0.0 {
        lo = hi;
        hi *= 2.0;
        if hi > 1e9 {
            return None;
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid).ok()? < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let p = crate::families::stretched_regular(n, 0.5 * (lo + hi)).ok()?;
    project(to_coords(p.vertices()), p0)
}

/// Random start `k`: a Valtr polygon pulled onto the constraint, or failing
/// that a jittered `R_N` stretched to `p0`.
fn random_start(n: usize, p0: f64, seed: u64, k: u64) -> Option<Vec<f64>> {
    use rand::Rng;
    let mut rng = item_rng(seed, k);
    let q = valtr_polygon(n, &mut rng);
    if q.len() == n {
        if let Some(z) = project(to_coords(q.vertices()), p0) {
            return Some(z);
        }
    }
    let base = regular_polygon(n).ok()?.rotate(rng.random::<f64>() * 2.0 * PI);
    let noise: Vec<Point2> =
        (0..n).map(|_| Point2::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)).collect();
    let mut amp = 0.2;
    while amp > 1e-9 {
        let pts: Vec<Point2> = base.vertices().iter().zip(&noise).map(|(&v, &e)| v + e * amp).collect();
        if let Ok(p) = ConvexPolygon::from_cyclic(&pts) {
            if p.len() == n {
                if let Some(z) = stretch_to(&p, p0) {
                    return Some(z);
                }
            }
        }
        amp *= 0.5;
    }
    None
}

fn starts(n: usize, p0: f64, opts: &OptimizerOptions) -> Vec<(String, Vec<f64>)> {
    let mut out = Vec::new();
    if let Some(z) = regular_polygon(n).ok().and_then(|r| stretch_to(&r, p0)) {
        out.push(("affine".to_string(), z));
    }
    let shaped = if n.is_multiple_of(2) { elongated_start(n, p0) } else { equiangular_start(n, p0) };
    if let Some(z) = shaped {
        out.push(("equiangular".to_string(), z));
    }
    let mut k = 0;
    while out.len() < opts.starts && k < 4 * opts.starts as u64 + 4 {
        if let Some(z) = random_start(n, p0, opts.seed, k) {
            out.push((format!("random:{k}"), z));
        }
        k += 1;
    }
    out.truncate(opts.starts.max(1));
    out
}

fn finish(
    n: usize,
    p0: f64,
    z: Vec<f64>,
    gnorm: f64,
    iterations: usize,
    start: String,
    opts: &OptimizerOptions,
) -> Option<OptimizeResult> {
    let pts = to_points(&z);
    let poly = ConvexPolygon::from_cyclic(&pts).ok()?;
    let r = cheeger(&poly);
    let c = convexity_constraints(&z);
    let max_convexity = c.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let merged_sides = c.iter().filter(|&&ck| ck.abs() > 1e-6).count();
    let area_residual = (poly.area() - 1.0).abs();
    let perimeter_residual = (poly.perimeter() - p0).abs();
    let feasible =
        area_residual <= opts.feas_tol && perimeter_residual <= opts.feas_tol && max_convexity <= 1e-10;
    Some(OptimizeResult {
        sides: n,
        p0,
        vertices: pts.iter().map(|&p| p.into()).collect(),
        h: r.h,
        area_residual,
        perimeter_residual,
        max_convexity,
        f_n_reference: f_n(n, p0),
        cheeger_regular: r.is_cheeger_regular,
        converged: feasible && gnorm <= opts.grad_tol,
        merged_sides,
        gradient_norm: gnorm,
        iterations,
        start,
    })
}

/// Orders by `h` descending, then by residual ascending.
fn better(a: &OptimizeResult, b: &OptimizeResult) -> std::cmp::Ordering {
    b.h.total_cmp(&a.h).then(a.residual().total_cmp(&b.residual()))
}

fn check_target(n: usize, p0: f64) -> Result<f64> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("need at least 3 sides, got {n}")));
    }
    let min = regular_perimeter(n);
    if !(p0 >= min - 1e-9) || !p0.is_finite() {
        return Err(Error::InfeasibleTarget { p0, min, sides: n });
    }
    Ok(min)
}

fn solve(n: usize, p0: f64, opts: &OptimizerOptions, extra: Option<Vec<f64>>) -> Result<OptimizeResult> {
    let min = check_target(n, p0)?;
    if p0 <= min * (1.0 + 1e-12) {
        // Only R_N reaches the isoperimetric minimum.
        let z = to_coords(regular_polygon(n)?.vertices());
        return finish(n, min, z, 0.0, 0, "regular".into(), opts)
            .map(|mut r| {
                r.p0 = p0;
                r
            })
            .ok_or_else(|| Error::DegenerateInput("regular polygon".into()));
    }
    let mut list = starts(n, p0, opts);
    if let Some(z) = extra.and_then(|z| project(z, p0)) {
        list.push(("warm".to_string(), z));
    }
    let run = |(label, z): &(String, Vec<f64>)| {
        let (z, g, it) = ascend(z.clone(), p0, opts);
        finish(n, p0, z, g, it, label.clone(), opts)
    };
    #[cfg(feature = "parallel")]
    let results: Vec<Option<OptimizeResult>> = {
        use rayon::prelude::*;
        list.par_iter().map(run).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<Option<OptimizeResult>> = list.iter().map(run).collect();
    let mut results: Vec<OptimizeResult> = results.into_iter().flatten().collect();
    results.sort_by(better);
    results
        .into_iter()
        .next()
        .ok_or_else(|| Error::DegenerateInput(format!("no feasible start for N = {n}, p0 = {p0}")))
}

/// Best unit-area `N`-gon with perimeter `p0` found from the configured
/// starts.
pub fn maximize_h(n: usize, p0: f64, opts: &OptimizerOptions) -> Result<OptimizeResult> {
    solve(n, p0, opts, None)
}

/// Solves along `p_grid`, warm-starting each point from the previous optimum.
pub fn trace_upper_boundary_detailed(
    n: usize,
    p_grid: &[f64],
    opts: &OptimizerOptions,
) -> Result<Vec<OptimizeResult>> {
    let mut out: Vec<OptimizeResult> = Vec::with_capacity(p_grid.len());
    for &p0 in p_grid {
        let warm =
            out.last().map(|r| to_coords(&r.vertices.iter().map(|&v| v.into()).collect::<Vec<Point2>>()));
        out.push(solve(n, p0, opts, warm)?);
    }
    Ok(out)
}

pub fn trace_upper_boundary(n: usize, p_grid: &[f64], opts: &OptimizerOptions) -> Result<Vec<DiagramPoint>> {
    Ok(trace_upper_boundary_detailed(n, p_grid, opts)?.iter().map(OptimizeResult::diagram_point).collect())
}
