//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use cheeger_core::cheeger::{
    brooks_waksman_bound, cheeger, cheeger_regular_closed_form, f_n, lower_bound_convex, regular_perimeter,
};
use cheeger_core::diagram::{
    band, classify, diagram_point, diagram_points, export_csv, export_svg_scatter, BandClass, SvgOptions,
};
use cheeger_core::families::{minkowski_path, regular_polygon};
use cheeger_core::geom::{ConvexPolygon, Point2};
use cheeger_core::optimizer::{
    cheeger_gradient, maximize_h, trace_upper_boundary_detailed, OptimizerOptions,
};
use cheeger_core::random::{item_rng, sample_batch, valtr_polygon, SamplerConfig};
use rand::Rng;

type Outcome = Result<String, String>;

fn sqrt_pi() -> f64 {
    PI.sqrt()
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn single_threaded<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap().install(f)
}

fn c1_square() -> Outcome {
    let sq = ConvexPolygon::from_points(&[
        Point2::new(0.0, 0.0),
        Point2::new(1.0, 0.0),
        Point2::new(1.0, 1.0),
        Point2::new(0.0, 1.0),
    ])
    .map_err(|e| e.to_string())?;
    // (1 − 2t)² = πt² has the root t = 1/(2 + √π).
    let oracle = 2.0 + sqrt_pi();
    let start = Instant::now();
    let r = cheeger(&sq);
    let elapsed = start.elapsed();
    ensure((r.h - 3.772453850905516).abs() <= 1e-9, format!("h = {}", r.h))?;
    ensure((r.h - oracle).abs() <= 1e-9, format!("h = {} vs {oracle}", r.h))?;
    ensure(elapsed < Duration::from_millis(1), format!("took {elapsed:?}"))?;
    Ok(format!("h = {:.15}, {elapsed:?}", r.h))
}

fn c2_regular() -> Outcome {
    let polys: Vec<ConvexPolygon> = (3..=12).map(|n| regular_polygon(n).unwrap()).collect();
    let start = Instant::now();
    let results: Vec<f64> = polys.iter().map(|p| cheeger(p).h).collect();
    let elapsed = start.elapsed();
    let mut worst = (0.0f64, 0.0f64);
    for (p, h) in polys.iter().zip(&results) {
        let n = p.len();
        let e1 = (h - (p.perimeter() / 2.0 + sqrt_pi())).abs();
        let e2 = (h - cheeger_regular_closed_form(p)).abs();
        ensure(e1 <= 1e-9, format!("N = {n}: |h − (P/2 + √π)| = {e1:e}"))?;
        ensure(e2 <= 1e-10, format!("N = {n}: |h − closed form| = {e2:e}"))?;
        worst = (worst.0.max(e1), worst.1.max(e2));
    }
    ensure(elapsed < Duration::from_millis(10), format!("took {elapsed:?}"))?;
    Ok(format!("max errors {:.1e} / {:.1e}, {elapsed:?}", worst.0, worst.1))
}

fn c3_triangles() -> Outcome {
    let tris = sample_batch(&SamplerConfig { n_sides: 3, seed: 3, count: 1000 });
    let mut worst = 0.0f64;
    for (i, pt) in diagram_points(&tris, "triangle").iter().enumerate() {
        let e = (pt.y - (pt.x / 2.0 + sqrt_pi())).abs();
        ensure(e <= 1e-9, format!("triangle {i}: deviation {e:e}"))?;
        worst = worst.max(e);
    }
    Ok(format!("1000 triangles, max deviation {worst:.1e}"))
}

fn c4_rectangles() -> Outcome {
    let mut worst = 0.0f64;
    for d in [1.0, 2.0, 5.0, 10.0, 50.0] {
        let r = ConvexPolygon::from_points(&[
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, d),
            Point2::new(0.0, d),
        ])
        .unwrap();
        let pt = diagram_point(&r);
        let e = (pt.y - f_n(4, pt.x)).abs();
        ensure(e <= 1e-8, format!("d = {d}: |y − f₄(x)| = {e:e}"))?;
        worst = worst.max(e);
    }
    Ok(format!("max |y − f₄(x)| = {worst:.1e}"))
}

struct PentagonRun {
    polys: Vec<ConvexPolygon>,
    elapsed: Duration,
}

fn pentagon_run() -> PentagonRun {
    let start = Instant::now();
    let polys = single_threaded(|| {
        let polys = sample_batch(&SamplerConfig { n_sides: 5, seed: 2024, count: 10_000 });
        polys.iter().for_each(|p| {
            cheeger(p);
        });
        polys
    });
    PentagonRun { polys, elapsed: start.elapsed() }
}

fn c5_pentagon_band(run: &PentagonRun) -> Outcome {
    let pts = diagram_points(&run.polys, "valtr:N=5");
    let spec = band(BandClass::NGon(5));
    for (i, pt) in pts.iter().enumerate() {
        let lo = pt.x / 2.0 + sqrt_pi() - 1e-9;
        let hi = f_n(5, pt.x) + 1e-9;
        ensure(lo <= pt.y && pt.y <= hi, format!("pentagon {i} at ({}, {}) leaves the band", pt.x, pt.y))?;
        ensure(!classify(pt, &spec, 1e-9).is_outside(), format!("pentagon {i} classified outside"))?;
    }
    let dir = std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let csv = dir.join("pentagons.csv");
    let svg = dir.join("pentagons.svg");
    export_csv(&pts, &csv).map_err(|e| e.to_string())?;
    export_svg_scatter(&pts, &spec, SvgOptions::default(), &svg).map_err(|e| e.to_string())?;
    let rows = std::fs::read_to_string(&csv).map_err(|e| e.to_string())?.lines().count();
    ensure(rows == 10_001, format!("CSV has {rows} lines"))?;
    ensure(run.elapsed < Duration::from_secs(60), format!("took {:?}", run.elapsed))?;
    Ok(format!("10000 pentagons inside, {:?} single-threaded, wrote {}", run.elapsed, svg.display()))
}

fn c6_strictness(run: &PentagonRun) -> Outcome {
    let (mut regular, mut irregular) = (0, 0);
    let mut min_gap = f64::INFINITY;
    for (i, p) in run.polys.iter().enumerate() {
        let r = cheeger(p);
        let cf = cheeger_regular_closed_form(p);
        if r.is_cheeger_regular {
            regular += 1;
            ensure((cf - r.h).abs() <= 1e-10, format!("regular pentagon {i}: gap {:e}", cf - r.h))?;
        } else {
            irregular += 1;
            ensure(cf - r.h > 0.0, format!("non-regular pentagon {i}: gap {:e}", cf - r.h))?;
            min_gap = min_gap.min(cf - r.h);
        }
    }
    ensure(irregular > 0, "no non-regular pentagon sampled")?;
    Ok(format!("{regular} regular, {irregular} non-regular, smallest positive gap {min_gap:.1e}"))
}

fn c7_brooks_waksman(run: &PentagonRun) -> Outcome {
    let mut count = 0;
    let extra: Vec<ConvexPolygon> = [3, 4, 6, 8]
        .iter()
        .flat_map(|&n| sample_batch(&SamplerConfig { n_sides: n, seed: 7, count: 1000 }))
        .collect();
    for (i, p) in run.polys.iter().chain(&extra).enumerate() {
        let bw = brooks_waksman_bound(p);
        let h = cheeger(p).h;
        let lb = lower_bound_convex(p.perimeter(), p.area());
        ensure(h >= bw - 1e-9, format!("polygon {i}: h = {h} < {bw}"))?;
        ensure(lb >= bw - 1e-9, format!("polygon {i}: lower bound {lb} < {bw}"))?;
        count += 1;
    }
    Ok(format!("{count} polygons"))
}

fn c8_faber_krahn() -> Outcome {
    let mut margins = Vec::new();
    for n in [3, 4, 5, 6] {
        let href = cheeger(&regular_polygon(n).unwrap()).h;
        let polys = sample_batch(&SamplerConfig { n_sides: n, seed: 8, count: 2000 });
        let mut margin = f64::INFINITY;
        for (i, p) in polys.iter().enumerate() {
            let h = cheeger(p).h;
            ensure(h >= href - 1e-9, format!("N = {n}, polygon {i}: h = {h} < h(R_N) = {href}"))?;
            margin = margin.min(h - href);
        }
        margins.push(format!("N={n}: {margin:.2e}"));
    }
    Ok(format!("2000 per class, min h − h(R_N): {}", margins.join(", ")))
}

fn to_coords(p: &ConvexPolygon) -> Vec<f64> {
    let mut z: Vec<f64> = p.vertices().iter().map(|v| v.x).collect();
    z.extend(p.vertices().iter().map(|v| v.y));
    z
}

fn h_of(z: &[f64]) -> f64 {
    let n = z.len() / 2;
    let pts: Vec<Point2> = (0..n).map(|k| Point2::new(z[k], z[n + k])).collect();
    cheeger(&ConvexPolygon::from_cyclic(&pts).unwrap()).h
}

fn c9_shape_derivative(run: &PentagonRun) -> Outcome {
    let step = 1e-5;
    let mut checked = 0;
    let mut worst = 0.0f64;
    for p in run.polys.iter().filter(|p| cheeger(p).is_cheeger_regular).take(50) {
        let g = cheeger_gradient(p).map_err(|e| e.to_string())?;
        let z = to_coords(p);
        let fd: Vec<f64> = (0..z.len())
            .map(|i| {
                let (mut a, mut b) = (z.clone(), z.clone());
                a[i] += step;
                b[i] -= step;
                (h_of(&a) - h_of(&b)) / (2.0 * step)
            })
            .collect();
        let diff = g.iter().zip(&fd).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt();
        let scale = fd.iter().map(|v| v * v).sum::<f64>().sqrt();
        let rel = diff / scale;
        ensure(rel <= 1e-4, format!("pentagon {checked}: relative error {rel:e}"))?;
        worst = worst.max(rel);
        checked += 1;
    }
    ensure(checked == 50, format!("only {checked} regular pentagons"))?;
    Ok(format!("50 pentagons, max relative error {worst:.1e}"))
}

fn c10_even_optimizer() -> Outcome {
    let opts = OptimizerOptions::default();
    let mut notes = Vec::new();
    for p0 in [4.2, 4.6, 5.0] {
        let start = Instant::now();
        let r = maximize_h(4, p0, &opts).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        let gap = (r.h - f_n(4, p0)).abs();
        ensure(gap <= 1e-4, format!("p0 = {p0}: |h − f₄| = {gap:e}"))?;
        ensure(
            r.area_residual <= 1e-8 && r.perimeter_residual <= 1e-8,
            format!("p0 = {p0}: residuals {:e}, {:e}", r.area_residual, r.perimeter_residual),
        )?;
        ensure(elapsed < Duration::from_secs(30), format!("p0 = {p0}: took {elapsed:?}"))?;
        notes.push(format!("{p0}: {gap:.1e} in {elapsed:.2?}"));
    }
    Ok(notes.join(", "))
}

fn c11_odd_trace() -> Outcome {
    let opts = OptimizerOptions::default();
    let p_min = regular_perimeter(5);
    let grid: Vec<f64> = (0..=20).map(|k| p_min + 0.02 * k as f64).collect();
    let trace = trace_upper_boundary_detailed(5, &grid, &opts).map_err(|e| e.to_string())?;
    for w in trace.windows(2) {
        ensure(w[1].h > w[0].h, format!("not increasing at p0 = {}", w[1].p0))?;
    }
    for r in &trace {
        ensure(r.h <= f_n(5, r.p0) + 1e-7, format!("p0 = {}: h above f₅ by {:e}", r.p0, r.h - f_n(5, r.p0)))?;
    }
    for r in &trace[..5] {
        let gap = (r.h - f_n(5, r.p0)).abs();
        ensure(gap <= 1e-4, format!("p0 = {}: |g₅ − f₅| = {gap:e}", r.p0))?;
    }
    let detach = trace.iter().find(|r| f_n(5, r.p0) - r.h > 1e-6).map(|r| r.p0);
    let far = maximize_h(5, 12.0, &opts).map_err(|e| e.to_string())?;
    let f12 = f_n(5, 12.0);
    ensure(far.h < f12, format!("p0 = 12: h = {} not below f₅ = {f12}", far.h))?;
    let b5 = detach.map_or("beyond the grid".to_string(), |p| format!("near {p:.3}"));
    Ok(format!("21 points increasing, detaches from f₅ {b5}; p0 = 12 gives {:.4} < {f12:.4}", far.h))
}

fn c12_continuity() -> Outcome {
    let mut rng = item_rng(12, 0);
    let mut worst_p = f64::NEG_INFINITY;
    for i in 0..1000 {
        let n1 = rng.random_range(3..9);
        let n2 = rng.random_range(3..9);
        let a = valtr_polygon(n1, &mut rng);
        let b = valtr_polygon(n2, &mut rng);
        let dp = (a.perimeter() - b.perimeter()).abs();
        let bound = 2.0 * PI * a.hausdorff_distance(&b);
        ensure(dp <= bound + 1e-9, format!("pair {i}: |ΔP| = {dp} > {bound}"))?;
        worst_p = worst_p.max(dp - bound);
    }
    let mut worst_h = f64::NEG_INFINITY;
    for i in 0..1000 {
        let n = rng.random_range(3..9);
        let a = valtr_polygon(n, &mut rng);
        let c = a.centroid();
        let amp = 0.02 * a.inradius();
        let pts: Vec<Point2> = a
            .vertices()
            .iter()
            .map(|&v| v + Point2::new(rng.random_range(-amp..amp), rng.random_range(-amp..amp)))
            .collect();
        let b = ConvexPolygon::from_points(&pts).map_err(|e| e.to_string())?;
        let r0 = (0..a.len())
            .map(|k| a.distance_to_side_line(k, c).abs())
            .chain((0..b.len()).map(|k| b.distance_to_side_line(k, c).abs()))
            .fold(f64::INFINITY, f64::min);
        let mut angles: Vec<f64> = (0..4096).map(|k| 2.0 * PI * k as f64 / 4096.0).collect();
        angles.extend(a.vertices().iter().chain(b.vertices()).map(|&v| (v - c).angle()));
        let gap = angles.iter().map(|&t| (a.radial(c, t) - b.radial(c, t)).abs()).fold(0.0, f64::max);
        let dh = (cheeger(&a).h - cheeger(&b).h).abs();
        let bound = 2.0 / (r0 * r0) * gap;
        ensure(dh <= bound + 1e-9, format!("pair {i}: |Δh| = {dh} > {bound}"))?;
        worst_h = worst_h.max(dh / bound);
    }
    Ok(format!("1000 + 1000 pairs, largest |Δh| / bound = {worst_h:.2}"))
}

fn c13_minkowski_path() -> Outcome {
    let spec = band(BandClass::Convex);
    let mut count = 0;
    for p in [4.0, 5.0, 7.0] {
        for k in 0..33 {
            let t = k as f64 / 32.0;
            let pt = minkowski_path(p, t, 256).map_err(|e| e.to_string())?;
            ensure(
                !classify(&pt, &spec, 1e-9).is_outside(),
                format!("p = {p}, t = {t}: ({}, {}) outside", pt.x, pt.y),
            )?;
            ensure(pt.x >= p / 2.0 - 1e-6, format!("p = {p}, t = {t}: x = {} < p/2", pt.x))?;
            count += 1;
        }
    }
    Ok(format!("{count} path points inside the convex band"))
}

fn main() {
    let run = pentagon_run();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("unit square", Box::new(c1_square)),
        ("regular polygons N = 3..12", Box::new(c2_regular)),
        ("random triangles on the lower boundary", Box::new(c3_triangles)),
        ("rectangles on f₄", Box::new(c4_rectangles)),
        ("pentagon band with CSV and SVG", Box::new(|| c5_pentagon_band(&run))),
        ("closed form strictness", Box::new(|| c6_strictness(&run))),
        ("Brooks–Waksman chain", Box::new(|| c7_brooks_waksman(&run))),
        ("regular polygons minimize h", Box::new(c8_faber_krahn)),
        ("shape derivative vs finite differences", Box::new(|| c9_shape_derivative(&run))),
        ("even-N optimizer", Box::new(c10_even_optimizer)),
        ("odd-N boundary trace", Box::new(c11_odd_trace)),
        ("continuity bounds", Box::new(c12_continuity)),
        ("Minkowski path containment", Box::new(c13_minkowski_path)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
