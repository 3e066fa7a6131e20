#![allow(dead_code)]

pub mod brute;

use arcknot_core::arc::{validate_arc, SpatialArc};
use arcknot_core::geom::{cross, Direction, Vec3};
use arcknot_core::trace::trace_circles;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn arc(pts: &[(i64, i64, i64)]) -> SpatialArc {
    validate_arc(pts.iter().map(|&(x, y, z)| Vec3::ints(x, y, z)).collect()).unwrap()
}

pub fn dir(x: i64, y: i64, z: i64) -> Direction {
    Direction::ints(x, y, z).unwrap()
}

pub fn a1() -> SpatialArc {
    arc(&[(0, 0, 0), (1, 1, 0), (2, 0, 0)])
}

pub fn a2() -> SpatialArc {
    arc(&[(0, 0, 0), (4, 0, 0), (4, 2, 1), (2, -2, 1)])
}

/// Random simple arc with 3 to `max_vertices` vertices and coordinates in [-10, 10].
pub fn random_arc(rng: &mut ChaCha8Rng, max_vertices: usize) -> SpatialArc {
    loop {
        let k = rng.gen_range(3..=max_vertices);
        let pts: Vec<Vec3> = (0..k)
            .map(|_| Vec3::ints(rng.gen_range(-10..=10), rng.gen_range(-10..=10), rng.gen_range(-10..=10)))
            .collect();
        if let Ok(a) = validate_arc(pts) {
            if !a.is_collinear() {
                return a;
            }
        }
    }
}

pub fn random_direction(rng: &mut ChaCha8Rng, bound: i64) -> Direction {
    loop {
        let v = Vec3::ints(
            rng.gen_range(-bound..=bound),
            rng.gen_range(-bound..=bound),
            rng.gen_range(-bound..=bound),
        );
        if let Ok(d) = Direction::new(&v) {
            return d;
        }
    }
}

/// Directions chosen to sit on or next to trace walls: edge directions,
/// wall intersections, points on circles and the frame axes.
pub fn adversarial_directions(a: &SpatialArc, rng: &mut ChaCha8Rng, count: usize) -> Vec<Direction> {
    let ts = trace_circles(a);
    let mut pool: Vec<Vec3> = Vec::new();
    for i in 0..a.edge_count() {
        pool.push(a.edge_vector(i));
    }
    pool.push(a.front_vector().vec().clone());
    if let Ok(f) = arcknot_core::arc::frame_of(a) {
        pool.push(f.e_z.clone());
        pool.push(f.e_y.clone());
    }
    for c in &ts.circles {
        let r = random_direction(rng, 5);
        pool.push(cross(c.vec(), r.vec()));
    }
    for _ in 0..count {
        if ts.circles.len() < 2 {
            break;
        }
        let i = rng.gen_range(0..ts.circles.len());
        let j = rng.gen_range(0..ts.circles.len());
        pool.push(cross(ts.circles[i].vec(), ts.circles[j].vec()));
    }
    let mut out: Vec<Direction> = pool.iter().filter_map(|v| Direction::new(v).ok()).collect();
    while out.len() > count {
        let i = rng.gen_range(0..out.len());
        out.swap_remove(i);
    }
    out
}

/// Directions clustered around a few centers so that several samples share a region.
pub fn clustered_directions(rng: &mut ChaCha8Rng, centers: usize, per_center: usize) -> Vec<Direction> {
    let mut out = Vec::new();
    for _ in 0..centers {
        let c = random_direction(rng, 30);
        let scale = 40;
        for _ in 0..per_center {
            let v = c.vec();
            let jitter = Vec3::ints(rng.gen_range(-1..=1), rng.gen_range(-1..=1), rng.gen_range(-1..=1));
            let w = &v.scale(&arcknot_core::geom::Rat::from_int(scale)) + &jitter;
            if let Ok(d) = Direction::new(&w) {
                out.push(d);
            }
        }
    }
    out
}

/// A chain of `n` kinks along the x axis; each kink contributes one crossing
/// when viewed from above.
pub fn curl_arc(n: usize) -> SpatialArc {
    if n == 0 {
        return a1();
    }
    let mut pts = vec![(0, 0, 0)];
    for i in 0..n as i64 {
        pts.extend([(4 * i + 3, 2, 1), (4 * i + 1, 2, 0), (4 * i + 4, 0, 0)]);
    }
    arc(&pts)
}
