//! Random convex polygons by Valtr's construction.
//!
//! Every item of a batch draws from its own ChaCha8 stream
//! (`seed_from_u64(seed)` with `set_stream(index)`), so serial and parallel
//! batches are bit-identical.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::{ConvexPolygon, Point2};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplerConfig {
    pub n_sides: usize,
    pub seed: u64,
    pub count: usize,
}

/// Generator for item `index` of a batch seeded with `seed`.
pub fn item_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Increments of two random monotone chains between the extremes of
/// `values` (sorted in place). They sum to zero.
fn chain_increments<R: Rng + ?Sized>(values: &mut [f64], rng: &mut R) -> Vec<f64> {
    values.sort_by(f64::total_cmp);
    let n = values.len();
    let (lo, hi) = (values[0], values[n - 1]);
    let mut out = Vec::with_capacity(n);
    let (mut last1, mut last2) = (lo, lo);
    for &v in &values[1..n - 1] {
        if rng.random_bool(0.5) {
            out.push(v - last1);
            last1 = v;
        } else {
            out.push(last2 - v);
            last2 = v;
        }
    }
    out.push(hi - last1);
    out.push(last2 - hi);
    out
}

/// A random convex polygon with `n` vertices inside `[0,1]²`.
///
/// Draws whose edge vectors repeat a direction are rejected and redrawn.
pub fn valtr_polygon<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ConvexPolygon {
    assert!(n >= 3, "a polygon needs at least 3 sides");
    loop {
        let mut xs: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
        let mut ys: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
        let dx = chain_increments(&mut xs, rng);
        let mut dy = chain_increments(&mut ys, rng);
        dy.shuffle(rng);

        let mut edges: Vec<Point2> = dx.iter().zip(&dy).map(|(&x, &y)| Point2::new(x, y)).collect();
        if edges.iter().any(|e| e.norm_sq() == 0.0) {
            continue;
        }
        edges.sort_by(|a, b| a.angle().total_cmp(&b.angle()));
        if edges.windows(2).any(|w| w[0].angle() >= w[1].angle()) {
            continue;
        }

        let mut verts = Vec::with_capacity(n);
        let mut p = Point2::new(0.0, 0.0);
        for e in &edges {
            verts.push(p);
            p += *e;
        }
        let min_x = verts.iter().map(|v| v.x).fold(f64::INFINITY, f64::min);
        let min_y = verts.iter().map(|v| v.y).fold(f64::INFINITY, f64::min);
        let shift = Point2::new(xs[0] - min_x, ys[0] - min_y);
        let verts: Vec<Point2> = verts.into_iter().map(|v| v + shift).collect();
        if let Ok(poly) = ConvexPolygon::from_cyclic(&verts) {
            return poly;
        }
    }
}

/// `cfg.count` unit-area polygons; item `i` uses [`item_rng`]`(cfg.seed, i)`.
pub fn sample_batch(cfg: &SamplerConfig) -> Vec<ConvexPolygon> {
    let one = |i: usize| valtr_polygon(cfg.n_sides, &mut item_rng(cfg.seed, i as u64)).normalized();
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..cfg.count).into_par_iter().map(one).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..cfg.count).map(one).collect()
    }
}
