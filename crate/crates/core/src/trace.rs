//! The trace set on the direction sphere, region fingerprints, genericity
//! checks and the deterministic choice of a canonical projection direction.
//!
//! The trace set holds two kinds of walls:
//!
//! * great circles, one per plane spanned by a vertex and a disjoint line
//!   (edge lines and the front line) or by a coplanar pair of distinct lines;
//! * triple-point cones, one per triple of pairwise non-adjacent edges on
//!   pairwise skew lines. Three skew lines have a one-parameter family of
//!   common transversals, so the directions producing a triple point form a
//!   quadratic cone, not a finite set.
//!
//! A direction off every wall projects the arc to an arc diagram, and the
//! diagram is a function of the wall signs.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::arc::{frame_of, SpatialArc};
use crate::geom::{
    classify_line_pair, cross, plane_normal_point_line, Direction, GreatCircleNormal, LinePair,
    LineR3, Rat, Vec3,
};
use crate::poly::{GapTester, Poly};
use crate::scene::scene_of;
use crate::seg::{intersect2, line_params2, on_segment2, SegHit};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TraceError {
    #[error("direction lies on trace wall {index}")]
    OnTraceSet { index: usize },
    #[error("collinear arc viewed along its own line")]
    CollinearDegenerate,
}

/// Quadratic form `F(u) = uᵀMu` stored as coprime integer coefficients of
/// `x², y², z², xy, xz, yz`, first nonzero coefficient positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TripleCone {
    coeffs: [BigInt; 6],
}

impl TripleCone {
    /// Directions along which the images of three pairwise skew lines are
    /// concurrent. `None` when the form vanishes identically.
    pub fn of_lines(lines: [&LineR3; 3]) -> Option<TripleCone> {
        // F(u) = Σ_cyc det(u, d_j, d_k) · det(a_i, u, d_i) = Σ (u·g_i)(u·h_i)
        let mut c: [Rat; 6] = std::array::from_fn(|_| Rat::zero());
        for i in 0..3 {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            let g = cross(lines[j].dir.vec(), lines[k].dir.vec());
            let h = cross(lines[i].dir.vec(), &lines[i].base);
            let (g, h) = (g.coords(), h.coords());
            c[0] = &c[0] + &(g[0] * h[0]);
            c[1] = &c[1] + &(g[1] * h[1]);
            c[2] = &c[2] + &(g[2] * h[2]);
            c[3] = &c[3] + &(&(g[0] * h[1]) + &(g[1] * h[0]));
            c[4] = &c[4] + &(&(g[0] * h[2]) + &(g[2] * h[0]));
            c[5] = &c[5] + &(&(g[1] * h[2]) + &(g[2] * h[1]));
        }
        if c.iter().all(Rat::is_zero) {
            return None;
        }
        let mut l = BigInt::from(1);
        for v in &c {
            l = l.lcm(v.denom());
        }
        let ints: Vec<BigInt> = c.iter().map(|v| v.numer() * (&l / v.denom())).collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        if ints.iter().find(|v| !v.is_zero()).unwrap().is_negative() {
            g = -g;
        }
        Some(TripleCone {
            coeffs: std::array::from_fn(|i| &ints[i] / &g),
        })
    }

    pub fn coeffs(&self) -> &[BigInt; 6] {
        &self.coeffs
    }

    pub fn eval(&self, u: &Vec3) -> Rat {
        self.bilinear(u, u)
    }

    /// Polarization `B(a, b)` with `B(u, u) = F(u)`.
    pub fn bilinear(&self, a: &Vec3, b: &Vec3) -> Rat {
        let k = |i: usize| Rat::from_bigint(self.coeffs[i].clone());
        let half = Rat::new(1, 2);
        let (a, b) = (a.coords(), b.coords());
        let mut acc = &k(0) * &(a[0] * b[0]) + &k(1) * &(a[1] * b[1]) + &k(2) * &(a[2] * b[2]);
        acc = acc + &(&k(3) * &half) * &(&(a[0] * b[1]) + &(a[1] * b[0]));
        acc = acc + &(&k(4) * &half) * &(&(a[0] * b[2]) + &(a[2] * b[0]));
        acc + &(&k(5) * &half) * &(&(a[1] * b[2]) + &(a[2] * b[1]))
    }
}

impl fmt::Debug for TripleCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cone{:?}", self.coeffs)
    }
}

impl fmt::Display for TripleCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.coeffs;
        write!(f, "{} {} {} {} {} {}", c[0], c[1], c[2], c[3], c[4], c[5])
    }
}

/// Canonically ordered walls of the direction sphere.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TraceSet {
    pub circles: Vec<GreatCircleNormal>,
    pub cones: Vec<TripleCone>,
}

impl TraceSet {
    pub fn wall_count(&self) -> usize {
        self.circles.len() + self.cones.len()
    }

    /// Upper bound on the number of regions cut out by the great circles alone.
    pub fn circle_region_bound(&self) -> usize {
        let m = self.circles.len();
        if m == 0 {
            1
        } else {
            m * m - m + 2
        }
    }

    /// Sign of `u` against every wall, circles first.
    pub fn signs(&self, u: &Vec3) -> Vec<i32> {
        self.circles
            .iter()
            .map(|c| c.side(u))
            .chain(self.cones.iter().map(|c| c.eval(u).signum()))
            .collect()
    }

    /// Indices of the walls containing `u`.
    pub fn walls_through(&self, u: &Vec3) -> Vec<usize> {
        self.signs(u)
            .into_iter()
            .enumerate()
            .filter(|(_, s)| *s == 0)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Lines used to generate the trace circles: distinct edge lines (as point
/// sets) followed by the front line if it is not already present.
fn generating_lines(arc: &SpatialArc) -> Vec<LineR3> {
    let mut lines: Vec<LineR3> = Vec::new();
    let candidates = (0..arc.edge_count())
        .map(|i| arc.edge_line(i))
        .chain(std::iter::once(arc.front_line()));
    for l in candidates {
        if !lines.iter().any(|o| o.same_points(&l)) {
            lines.push(l);
        }
    }
    lines
}

/// All trace walls of the arc, sorted and deduplicated.
pub fn trace_circles(arc: &SpatialArc) -> TraceSet {
    let lines = generating_lines(arc);
    let mut circles = BTreeSet::new();
    for v in arc.vertices() {
        for l in &lines {
            if let Ok(n) = plane_normal_point_line(v, l) {
                circles.insert(n);
            }
        }
    }
    for (i, l1) in lines.iter().enumerate() {
        for l2 in &lines[i + 1..] {
            let n = match classify_line_pair(l1, l2) {
                LinePair::ParallelDistinct => cross(l1.dir.vec(), &(&l2.base - &l1.base)),
                LinePair::Intersecting(_) => cross(l1.dir.vec(), l2.dir.vec()),
                LinePair::Equal | LinePair::Skew => continue,
            };
            circles.insert(GreatCircleNormal::new(&n).expect("distinct coplanar lines"));
        }
    }

    let m = arc.edge_count();
    let edge_lines: Vec<LineR3> = (0..m).map(|i| arc.edge_line(i)).collect();
    let skew = |i: usize, j: usize| classify_line_pair(&edge_lines[i], &edge_lines[j]) == LinePair::Skew;
    let mut cones = BTreeSet::new();
    for i in 0..m {
        for j in i + 2..m {
            if !skew(i, j) {
                continue;
            }
            for k in j + 2..m {
                if skew(i, k) && skew(j, k) {
                    if let Some(c) =
                        TripleCone::of_lines([&edge_lines[i], &edge_lines[j], &edge_lines[k]])
                    {
                        cones.insert(c);
                    }
                }
            }
        }
    }
    TraceSet {
        circles: circles.into_iter().collect(),
        cones: cones.into_iter().collect(),
    }
}

/// Sign pattern of a direction against all trace walls: one sign per
/// circle, then one per cone.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RegionFingerprint {
    pub signs: Vec<i8>,
    pub cone_signs: Vec<i8>,
}

impl RegionFingerprint {
    /// Fingerprint of the antipodal region. Cone forms are even, so only
    /// the circle signs flip.
    pub fn negated(&self) -> RegionFingerprint {
        RegionFingerprint {
            signs: self.signs.iter().map(|s| -s).collect(),
            cone_signs: self.cone_signs.clone(),
        }
    }
}

impl fmt::Display for RegionFingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = |s: &i8| if *s > 0 { '+' } else { '-' };
        let circles: String = self.signs.iter().map(sym).collect();
        f.write_str(&circles)?;
        if !self.cone_signs.is_empty() {
            let cones: String = self.cone_signs.iter().map(sym).collect();
            write!(f, " | {}", cones)?;
        }
        Ok(())
    }
}

pub fn sign_vector(ts: &TraceSet, u: &Direction) -> Result<RegionFingerprint, TraceError> {
    let signs = ts.signs(u.vec());
    if let Some(index) = signs.iter().position(|&s| s == 0) {
        return Err(TraceError::OnTraceSet { index });
    }
    let (c, k) = signs.split_at(ts.circles.len());
    Ok(RegionFingerprint {
        signs: c.iter().map(|&s| s as i8).collect(),
        cone_signs: k.iter().map(|&s| s as i8).collect(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenericFailure {
    EdgeParallel,
    VertexCollision,
    VertexOnEdge,
    TriplePoint,
    OverlappingEdges,
    EndpointOnDiagram,
}

impl fmt::Display for GenericFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericityReport {
    pub failure: Option<(GenericFailure, Vec<usize>)>,
}

impl GenericityReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn kind(&self) -> Option<GenericFailure> {
        self.failure.as_ref().map(|f| f.0)
    }

    fn fail(kind: GenericFailure, witness: Vec<usize>) -> Self {
        GenericityReport {
            failure: Some((kind, witness)),
        }
    }
}

impl fmt::Display for GenericityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => f.write_str("pass"),
            Some((k, w)) => write!(f, "fail {} {:?}", k, w),
        }
    }
}

/// Checks that projecting along `u` yields an arc diagram. Witness indices
/// are edge indices, except for vertex collisions (vertex indices) and
/// vertex-on-edge failures (`[vertex, edge]`).
pub fn validate_generic(arc: &SpatialArc, u: &Direction) -> GenericityReport {
    let sc = scene_of(arc, u);
    let p = &sc.points;
    let m = sc.edge_count();
    for i in 0..m {
        if p[i] == p[i + 1] {
            return GenericityReport::fail(GenericFailure::EdgeParallel, vec![i]);
        }
    }
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] == p[j] {
                return GenericityReport::fail(GenericFailure::VertexCollision, vec![i, j]);
            }
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            if intersect2(&p[i], &p[i + 1], &p[j], &p[j + 1]) == SegHit::Overlap {
                return GenericityReport::fail(GenericFailure::OverlappingEdges, vec![i, j]);
            }
        }
    }
    for v in 0..p.len() {
        for e in 0..m {
            if v == e || v == e + 1 {
                continue;
            }
            if on_segment2(&p[v], &p[e], &p[e + 1]) {
                let kind = if v == 0 || v == m {
                    GenericFailure::EndpointOnDiagram
                } else {
                    GenericFailure::VertexOnEdge
                };
                return GenericityReport::fail(kind, vec![v, e]);
            }
        }
    }
    // vertices are now off all non-incident edges, so every meeting of two
    // non-adjacent edge images is an interior transverse point
    let mut along: Vec<Vec<(Rat, usize)>> = vec![Vec::new(); m];
    for i in 0..m {
        for j in i + 2..m {
            if let SegHit::Point(_) = intersect2(&p[i], &p[i + 1], &p[j], &p[j + 1]) {
                let (s, t) = line_params2(&p[i], &p[i + 1], &p[j], &p[j + 1]).expect("transverse");
                along[i].push((s, j));
                along[j].push((t, i));
            }
        }
    }
    for (i, hits) in along.iter_mut().enumerate() {
        hits.sort();
        for w in hits.windows(2) {
            if w[0].0 == w[1].0 {
                let mut wit = vec![i, w[0].1, w[1].1];
                wit.sort();
                return GenericityReport::fail(GenericFailure::TriplePoint, wit);
            }
        }
    }
    GenericityReport { failure: None }
}

/// Off every trace wall and generic.
fn is_clear(arc: &SpatialArc, ts: &TraceSet, u: &Direction) -> bool {
    ts.signs(u.vec()).iter().all(|&s| s != 0) && validate_generic(arc, u).passed()
}

/// Exact rotation about `axis`, parametrized by `t = tan(φ/2)/|axis|`.
/// `numerator(t)` is the rotated vector times the positive factor `1 + |axis|² t²`.
struct RotationPath {
    v0: Vec3,
    v1: Vec3,
    v2: Vec3,
}

impl RotationPath {
    fn new(axis: &Vec3, w: &Vec3) -> Self {
        let s = axis.norm2();
        let two = Rat::from_int(2);
        let v1 = cross(axis, w).scale(&two);
        let v2 = &axis.scale(&(&two * &axis.dot(w))) - &w.scale(&s);
        RotationPath {
            v0: w.clone(),
            v1,
            v2,
        }
    }

    fn at(&self, t: &Rat) -> Vec3 {
        let t2 = t * t;
        &(&self.v0 + &self.v1.scale(t)) + &self.v2.scale(&t2)
    }

    fn circle_poly(&self, n: &GreatCircleNormal) -> Poly {
        let n = n.vec();
        Poly::new(vec![n.dot(&self.v0), n.dot(&self.v1), n.dot(&self.v2)])
    }

    fn cone_poly(&self, c: &TripleCone) -> Poly {
        let v = [&self.v0, &self.v1, &self.v2];
        let mut coeffs: Vec<Rat> = vec![Rat::zero(); 5];
        for p in 0..3 {
            for q in 0..3 {
                coeffs[p + q] = &coeffs[p + q] + &c.bilinear(v[p], v[q]);
            }
        }
        Poly::new(coeffs)
    }

    /// Wall polynomials along the path, dropping walls that contain the
    /// whole path.
    fn walls(&self, ts: &TraceSet) -> Vec<Poly> {
        ts.circles
            .iter()
            .map(|n| self.circle_poly(n))
            .chain(ts.cones.iter().map(|c| self.cone_poly(c)))
            .filter(|p| !p.is_zero())
            .collect()
    }
}

const MAX_HALVINGS: u32 = 256;

/// Largest `2^-k` (`k ≥ 0`) such that no wall vanishes on `(0, 2^-k]`.
fn first_gap(walls: &[Poly]) -> Rat {
    let testers: Vec<GapTester> = walls.iter().map(GapTester::new).collect();
    let mut x = Rat::one();
    for _ in 0..MAX_HALVINGS {
        if testers.iter().all(|g| !g.has_root_in(&x)) {
            return x;
        }
        x = x * Rat::new(1, 2);
    }
    unreachable!("walls have finitely many roots")
}

fn dir(v: &Vec3) -> Direction {
    Direction::new(v).expect("rotation preserves nonzero vectors")
}

/// Deterministic direction in the region selected for `u`: `u` itself when it
/// is already off the trace set and generic, otherwise a nearby direction
/// reached by exact rotations in the frame of the arc.
pub fn canonical_direction(arc: &SpatialArc, u: &Direction) -> Result<Direction, TraceError> {
    let ts = trace_circles(arc);
    canonical_direction_with(arc, &ts, u)
}

pub fn canonical_direction_with(
    arc: &SpatialArc,
    ts: &TraceSet,
    u: &Direction,
) -> Result<Direction, TraceError> {
    if arc.is_collinear() {
        if arc.front_vector().parallel_to(u.vec()) {
            return Err(TraceError::CollinearDegenerate);
        }
        return Ok(u.clone());
    }
    // a cone wall without an actual triple point leaves the projection generic
    let off_circles = ts.circles.iter().all(|c| c.side(u.vec()) != 0);
    if off_circles && validate_generic(arc, u).passed() {
        return Ok(u.clone());
    }
    let f = frame_of(arc).expect("non-collinear arc has a frame");
    let [x, y, z] = f.coords(u.vec());
    match z.signum() {
        // lower hemisphere: antipode of the upper-hemisphere choice
        -1 => Ok(canonical_direction_with(arc, ts, &u.neg())?.neg()),
        0 => {
            if !(y.signum() > 0 || (y.is_zero() && x.signum() > 0)) {
                return Ok(canonical_direction_with(arc, ts, &u.neg())?.neg());
            }
            // equator, θ ∈ [0, π): climb the meridian towards the pole
            let axis = cross(u.vec(), &f.e_z);
            let w = step_off(ts, &axis, u.vec());
            Ok(latitude_step(arc, ts, &f.e_z, w))
        }
        _ => {
            if x.is_zero() && y.is_zero() {
                // pole: descend along the θ = 0 meridian
                let w = step_off(ts, &f.e_y, &f.e_z);
                Ok(latitude_step(arc, ts, &f.e_z, w))
            } else {
                Ok(latitude_step(arc, ts, &f.e_z, u.vec().clone()))
            }
        }
    }
}

/// Rotate `w` about `axis` into the first gap of the walls that do not
/// contain the whole path.
fn step_off(ts: &TraceSet, axis: &Vec3, w: &Vec3) -> Vec3 {
    let path = RotationPath::new(axis, w);
    let t = first_gap(&path.walls(ts)) * Rat::new(1, 2);
    path.at(&t).primitive()
}

/// Move along the latitude circle through `w` (rotation about the frame
/// pole) in the direction of increasing longitude until clear of all walls.
fn latitude_step(arc: &SpatialArc, ts: &TraceSet, pole: &Vec3, mut w: Vec3) -> Direction {
    loop {
        let path = RotationPath::new(pole, &w);
        let mut t = first_gap(&path.walls(ts)) * Rat::new(1, 2);
        for _ in 0..64 {
            let cand = dir(&path.at(&t));
            if is_clear(arc, ts, &cand) {
                return cand;
            }
            t = t * Rat::new(1, 2);
        }
        // a wall contains this whole latitude circle; shift towards the pole
        let axis = cross(&w, pole);
        w = step_off(ts, &axis, &w);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::{front_pop, validate_arc};
    use proptest::prelude::*;

    fn arc(pts: &[(i64, i64, i64)]) -> SpatialArc {
        validate_arc(pts.iter().map(|&(x, y, z)| Vec3::ints(x, y, z)).collect()).unwrap()
    }

    fn a1() -> SpatialArc {
        arc(&[(0, 0, 0), (1, 1, 0), (2, 0, 0)])
    }

    fn a2() -> SpatialArc {
        arc(&[(0, 0, 0), (4, 0, 0), (4, 2, 1), (2, -2, 1)])
    }

    fn knotty() -> SpatialArc {
        arc(&[(0, 0, 0), (6, 1, 2), (2, 5, -1), (1, -2, 3), (5, 3, 4), (3, -1, -2), (7, 2, 1)])
    }

    fn d(x: i64, y: i64, z: i64) -> Direction {
        Direction::ints(x, y, z).unwrap()
    }

    fn n(x: i64, y: i64, z: i64) -> GreatCircleNormal {
        GreatCircleNormal::new(&Vec3::ints(x, y, z)).unwrap()
    }

    #[test]
    fn planar_arc_has_one_circle() {
        let ts = trace_circles(&a1());
        assert_eq!(ts.circles, vec![n(0, 0, 1)]);
        assert!(ts.cones.is_empty());
    }

    #[test]
    fn pop_plane_is_a_wall() {
        let ts = trace_circles(&a2());
        assert!(ts.circles.contains(&n(0, 1, 2)));
        for a in [a2(), knotty()] {
            let fp = front_pop(&a).unwrap();
            let ts = trace_circles(&a);
            assert!(ts.circles.contains(&GreatCircleNormal::new(fp.plane_s.vec()).unwrap()));
        }
    }

    #[test]
    fn collinear_arc_has_no_walls() {
        let ts = trace_circles(&arc(&[(0, 0, 0), (1, 0, 0), (2, 0, 0)]));
        assert_eq!(ts.wall_count(), 0);
    }

    #[test]
    fn fingerprints() {
        let ts = TraceSet {
            circles: vec![n(0, 0, 1)],
            cones: vec![],
        };
        assert_eq!(sign_vector(&ts, &d(0, 0, 1)).unwrap().signs, vec![1]);
        assert_eq!(sign_vector(&ts, &d(1, 0, 0)), Err(TraceError::OnTraceSet { index: 0 }));
        assert_eq!(sign_vector(&ts, &d(1, 1, -3)).unwrap().signs, vec![-1]);
    }

    #[test]
    fn genericity_examples() {
        assert!(validate_generic(&a2(), &d(0, 0, 1)).passed());
        assert_eq!(
            validate_generic(&a2(), &d(1, 0, 0)).failure,
            Some((GenericFailure::EdgeParallel, vec![0]))
        );
        // the colliding vertices (4,0,0) and (4,2,1) span edge 1
        assert_eq!(
            validate_generic(&a2(), &d(0, 2, 1)).failure,
            Some((GenericFailure::EdgeParallel, vec![1]))
        );
        assert_eq!(
            validate_generic(&a2(), &d(2, -2, 1)).failure,
            Some((GenericFailure::VertexCollision, vec![0, 3]))
        );
    }

    #[test]
    fn triple_point_is_reported() {
        // three edges through the z axis at heights 0, 2, 4
        let a = arc(&[
            (-1, 0, 0),
            (1, 0, 0),
            (3, -3, 1),
            (-1, -1, 2),
            (1, 1, 2),
            (3, 3, 3),
            (1, -1, 4),
            (-1, 1, 4),
        ]);
        let r = validate_generic(&a, &d(0, 0, 1));
        assert_eq!(r.kind(), Some(GenericFailure::TriplePoint));
        // the offending direction sits on a cone wall
        let ts = trace_circles(&a);
        let signs = ts.signs(&Vec3::ints(0, 0, 1));
        assert!(signs[ts.circles.len()..].contains(&0));
    }

    #[test]
    fn passthrough_when_clear() {
        assert_eq!(canonical_direction(&a1(), &d(0, 0, 1)).unwrap(), d(0, 0, 1));
        assert_eq!(canonical_direction(&a2(), &d(0, 0, 1)).unwrap(), d(0, 0, 1));
    }

    #[test]
    fn resolves_boundary_directions() {
        for (a, u) in [(a1(), d(1, 0, 0)), (a2(), d(0, 1, 2)), (a2(), d(1, 0, 0)), (a2(), d(0, 2, 1))] {
            let ts = trace_circles(&a);
            let c = canonical_direction(&a, &u).unwrap();
            assert!(sign_vector(&ts, &c).is_ok(), "{:?}", c);
            assert!(validate_generic(&a, &c).passed());
            assert_eq!(canonical_direction(&a, &u).unwrap(), c);
        }
    }

    #[test]
    fn collinear_along_line_is_degenerate() {
        let a = arc(&[(0, 0, 0), (1, 0, 0), (2, 0, 0)]);
        assert_eq!(canonical_direction(&a, &d(-3, 0, 0)), Err(TraceError::CollinearDegenerate));
        assert_eq!(canonical_direction(&a, &d(0, 1, 1)).unwrap(), d(0, 1, 1));
    }

    fn special_dirs(a: &SpatialArc) -> Vec<Direction> {
        let ts = trace_circles(a);
        let f = frame_of(a).unwrap();
        let mut out = vec![Direction::new(&f.e_z).unwrap(), Direction::new(&f.e_x).unwrap()];
        for i in 0..a.edge_count() {
            out.push(Direction::new(&a.edge_vector(i)).unwrap());
        }
        for (i, c1) in ts.circles.iter().enumerate() {
            for c2 in &ts.circles[i + 1..] {
                if let Ok(v) = Direction::new(&cross(c1.vec(), c2.vec())) {
                    out.push(v);
                }
            }
        }
        out
    }

    #[test]
    fn special_directions_resolve_antipodally() {
        for a in [a2(), knotty()] {
            let ts = trace_circles(&a);
            for u in special_dirs(&a).into_iter().take(60) {
                let c = canonical_direction_with(&a, &ts, &u).unwrap();
                let cn = canonical_direction_with(&a, &ts, &u.neg()).unwrap();
                let f = sign_vector(&ts, &c).unwrap();
                assert_eq!(sign_vector(&ts, &cn).unwrap(), f.negated());
                assert!(validate_generic(&a, &c).passed());
                assert_eq!(canonical_direction_with(&a, &ts, &c).unwrap(), c);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn idempotent_and_antipodal(x in -3i64..=3, y in -3i64..=3, z in -3i64..=3) {
            prop_assume!((x, y, z) != (0, 0, 0));
            let a = knotty();
            let ts = trace_circles(&a);
            let u = d(x, y, z);
            let c = canonical_direction_with(&a, &ts, &u).unwrap();
            prop_assert!(validate_generic(&a, &c).passed());
            prop_assert_eq!(canonical_direction_with(&a, &ts, &c).unwrap(), c.clone());
            let cn = canonical_direction_with(&a, &ts, &u.neg()).unwrap();
            prop_assert_eq!(
                sign_vector(&ts, &cn).unwrap(),
                sign_vector(&ts, &c).unwrap().negated()
            );
        }
    }
}
