//! Browser bindings for the demo page in `www/`.
//!
//! Every export takes and returns plain numbers or JSON strings so the same
//! functions run under `cargo test` on the host.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use cheeger_core::cheeger::f_n;
use cheeger_core::diagram::{diagram_points, disk_coordinate};
use cheeger_core::{
    band, cheeger, sample_batch, BandClass, ConvexPolygon, FamilyDescriptor, Point2, SamplerConfig,
};

/// Largest batch the scatter view will draw.
const MAX_SAMPLES: usize = 20_000;

#[derive(Serialize)]
struct Failure {
    error: String,
}

fn fail(msg: impl ToString) -> String {
    serde_json::to_string(&Failure { error: msg.to_string() }).expect("serializable")
}

fn flat(points: &[Point2]) -> Vec<[f64; 2]> {
    points.iter().map(|p| [p.x, p.y]).collect()
}

#[derive(Serialize)]
struct CheegerView {
    hull: Vec<[f64; 2]>,
    h: f64,
    t_star: f64,
    cheeger_regular: bool,
    contact_sides: Vec<usize>,
    /// Closed outline of the Cheeger set.
    boundary: Vec<[f64; 2]>,
    x: f64,
    y: f64,
}

/// Cheeger set of the convex hull of `xy = [x0, y0, x1, y1, ...]`.
#[wasm_bindgen]
pub fn cheeger_view(xy: &[f64]) -> String {
    let pts: Vec<Point2> = xy.chunks_exact(2).map(|c| Point2::new(c[0], c[1])).collect();
    let poly = match ConvexPolygon::from_points(&pts) {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    let r = cheeger(&poly);
    let sa = poly.area().sqrt();
    let view = CheegerView {
        hull: flat(poly.vertices()),
        h: r.h,
        t_star: r.t_star,
        cheeger_regular: r.is_cheeger_regular,
        contact_sides: r.contact_side_indices.clone(),
        boundary: flat(&r.boundary_polyline(96)),
        x: poly.perimeter() / sa,
        y: sa * r.h,
    };
    serde_json::to_string(&view).expect("serializable")
}

/// Diagram coordinates `[x0, y0, x1, y1, ...]` of `count` random convex `sides`-gons.
#[wasm_bindgen]
pub fn random_scatter(sides: usize, count: usize, seed: u64) -> Vec<f64> {
    if sides < 3 {
        return Vec::new();
    }
    let cfg = SamplerConfig { n_sides: sides, seed, count: count.min(MAX_SAMPLES) };
    diagram_points(&sample_batch(&cfg), "random").iter().flat_map(|p| [p.x, p.y]).collect()
}

#[derive(Serialize)]
struct BandCurves {
    x_min: f64,
    disk: f64,
    xs: Vec<f64>,
    lower: Vec<f64>,
    upper: Vec<f64>,
    /// The convex upper curve `y = x`, drawn for comparison.
    convex_upper: Vec<f64>,
}

/// Band curves for `ngon:<sides>` sampled at `samples` abscissae up to `x_max`.
#[wasm_bindgen]
pub fn band_curves(sides: usize, x_max: f64, samples: usize) -> String {
    if sides < 3 {
        return fail(format!("a polygon needs at least 3 sides, got {sides}"));
    }
    let spec = band(BandClass::NGon(sides));
    if !(x_max > spec.x_min) || samples < 2 {
        return fail("need x_max above the band start and at least 2 samples");
    }
    let xs: Vec<f64> =
        (0..samples).map(|k| spec.x_min + (x_max - spec.x_min) * k as f64 / (samples - 1) as f64).collect();
    let curves = BandCurves {
        x_min: spec.x_min,
        disk: disk_coordinate(),
        lower: xs.iter().map(|&x| spec.lower(x)).collect(),
        upper: xs.iter().map(|&x| f_n(sides, x)).collect(),
        convex_upper: xs.clone(),
        xs,
    };
    serde_json::to_string(&curves).expect("serializable")
}

#[derive(Serialize)]
struct FamilyView {
    source: String,
    x: f64,
    y: f64,
    /// Empty for smooth shapes, which have no polygon.
    vertices: Vec<[f64; 2]>,
}

/// Evaluates a descriptor such as `stretch:N=6,delta=3`.
#[wasm_bindgen]
pub fn family_view(descriptor: &str) -> String {
    let sample = match descriptor.parse::<FamilyDescriptor>().and_then(|d| d.evaluate()) {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    let view = FamilyView {
        source: sample.point.source,
        x: sample.point.x,
        y: sample.point.y,
        vertices: sample.polygon.map(|p| flat(p.vertices())).unwrap_or_default(),
    };
    serde_json::to_string(&view).expect("serializable")
}
