//! The oriented polygonal arc, its front edge, front-pop lines and the
//! right-handed frame built from them.

use thiserror::Error;

use crate::geom::{cross, Direction, LineR3, Rat, Vec3};
use crate::seg::{intersect3, SegHit};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArcError {
    #[error("an arc needs at least two vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {index} repeats its predecessor")]
    RepeatedVertex { index: usize },
    #[error("first and last vertex coincide")]
    ClosedPath,
    #[error("edges {first} and {second} intersect")]
    SelfIntersection { first: usize, second: usize },
    #[error("all edges lie on the front line")]
    CollinearArc,
}

/// A simple oriented polygonal arc `p_0 → … → p_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpatialArc {
    vertices: Vec<Vec3>,
}

impl SpatialArc {
    pub fn new(vertices: Vec<Vec3>) -> Result<SpatialArc, ArcError> {
        validate_arc(vertices)
    }

    pub fn vertices(&self) -> &[Vec3] {
        &self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn start(&self) -> &Vec3 {
        &self.vertices[0]
    }

    pub fn end(&self) -> &Vec3 {
        self.vertices.last().unwrap()
    }

    pub fn edge(&self, i: usize) -> (&Vec3, &Vec3) {
        (&self.vertices[i], &self.vertices[i + 1])
    }

    pub fn edge_vector(&self, i: usize) -> Vec3 {
        &self.vertices[i + 1] - &self.vertices[i]
    }

    /// Oriented line extending edge `i`.
    pub fn edge_line(&self, i: usize) -> LineR3 {
        LineR3::through(&self.vertices[i], &self.vertices[i + 1]).expect("validated arc")
    }

    pub fn front_line(&self) -> LineR3 {
        LineR3::through(self.start(), self.end()).expect("validated arc")
    }

    /// `p_t - p_s`.
    pub fn front_vector(&self) -> Direction {
        self.front_line().dir
    }

    /// Every edge line coincides with the front line.
    pub fn is_collinear(&self) -> bool {
        let fl = self.front_line();
        (0..self.edge_count()).all(|i| self.edge_line(i).same_points(&fl))
    }
}

pub fn validate_arc(vertices: Vec<Vec3>) -> Result<SpatialArc, ArcError> {
    let n = vertices.len();
    if n < 2 {
        return Err(ArcError::TooFewVertices(n));
    }
    for i in 1..n {
        if vertices[i] == vertices[i - 1] {
            return Err(ArcError::RepeatedVertex { index: i });
        }
    }
    if vertices[0] == vertices[n - 1] {
        return Err(ArcError::ClosedPath);
    }
    let m = n - 1;
    for i in 0..m {
        for j in i + 1..m {
            let hit = intersect3(&vertices[i], &vertices[i + 1], &vertices[j], &vertices[j + 1]);
            let ok = if j == i + 1 {
                // adjacent edges may share only their common vertex
                matches!(hit, SegHit::Point(ref p) if *p == vertices[j])
            } else {
                hit == SegHit::Disjoint
            };
            if !ok {
                return Err(ArcError::SelfIntersection { first: i, second: j });
            }
        }
    }
    Ok(SpatialArc { vertices })
}

/// The first and last edge lines leaving the front line, with their
/// oriented front-pop planes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrontPopData {
    /// Index of the edge spanning `ell_s`.
    pub edge_s: usize,
    /// Index of the edge spanning `ell_t`.
    pub edge_t: usize,
    pub ell_s: LineR3,
    pub ell_t: LineR3,
    pub u_s: Direction,
    pub u_t: Direction,
    /// Oriented normal `u_γ × u_s`.
    pub plane_s: Direction,
    /// Oriented normal `u_γ × u_t`.
    pub plane_t: Direction,
}

pub fn front_pop(arc: &SpatialArc) -> Option<FrontPopData> {
    let fl = arc.front_line();
    let off: Vec<usize> = (0..arc.edge_count())
        .filter(|&i| !arc.edge_line(i).same_points(&fl))
        .collect();
    let (&edge_s, &edge_t) = (off.first()?, off.last()?);
    let ug = fl.dir.vec().clone();
    let ell_s = arc.edge_line(edge_s);
    let ell_t = arc.edge_line(edge_t);
    // both lines meet the front line, so neither is parallel to it
    let plane_s = Direction::new(&cross(&ug, ell_s.dir.vec())).expect("pop line crosses front line");
    let plane_t = Direction::new(&cross(&ug, ell_t.dir.vec())).expect("pop line crosses front line");
    Some(FrontPopData {
        edge_s,
        edge_t,
        u_s: ell_s.dir.clone(),
        u_t: ell_t.dir.clone(),
        ell_s,
        ell_t,
        plane_s,
        plane_t,
    })
}

/// Pairwise orthogonal right-handed axes (not unit length).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    pub e_x: Vec3,
    pub e_y: Vec3,
    pub e_z: Vec3,
}

impl Frame {
    /// Coordinates of `v` along the three axes, each scaled by the axis norm².
    pub fn coords(&self, v: &Vec3) -> [Rat; 3] {
        [v.dot(&self.e_x), v.dot(&self.e_y), v.dot(&self.e_z)]
    }
}

pub fn frame_of(arc: &SpatialArc) -> Result<Frame, ArcError> {
    let fp = front_pop(arc).ok_or(ArcError::CollinearArc)?;
    let e_x = arc.front_vector().vec().clone();
    let us = fp.u_s.vec();
    let k = us.dot(&e_x) / e_x.norm2();
    let e_y = (us - &e_x.scale(&k)).primitive();
    debug_assert!(e_y.dot(us).signum() > 0);
    let e_z = cross(&e_x, &e_y);
    Ok(Frame { e_x, e_y, e_z })
}

/// The open front edge misses the arc.
pub fn is_inbound_arc(arc: &SpatialArc) -> bool {
    let (ps, pt) = (arc.start(), arc.end());
    (0..arc.edge_count()).all(|i| {
        let (a, b) = arc.edge(i);
        match intersect3(ps, pt, a, b) {
            SegHit::Disjoint => true,
            SegHit::Overlap => false,
            SegHit::Point(p) => p == *ps || p == *pt,
        }
    })
}

/// The two front-pop planes coincide as point sets.
pub fn is_even_arc(arc: &SpatialArc) -> Result<bool, ArcError> {
    let fp = front_pop(arc).ok_or(ArcError::CollinearArc)?;
    Ok(fp.plane_s.parallel_to(fp.plane_t.vec()))
}

/// For an even arc, whether the two front-pop planes carry the same orientation.
pub fn pop_planes_agree(arc: &SpatialArc) -> Result<bool, ArcError> {
    let fp = front_pop(arc).ok_or(ArcError::CollinearArc)?;
    Ok(fp.plane_s == fp.plane_t)
}

pub fn reverse_arc(arc: &SpatialArc) -> SpatialArc {
    let mut v = arc.vertices.clone();
    v.reverse();
    SpatialArc { vertices: v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Rat;
    use proptest::prelude::*;

    fn arc(pts: &[(i64, i64, i64)]) -> Result<SpatialArc, ArcError> {
        validate_arc(pts.iter().map(|&(x, y, z)| Vec3::ints(x, y, z)).collect())
    }

    fn a1() -> SpatialArc {
        arc(&[(0, 0, 0), (1, 1, 0), (2, 0, 0)]).unwrap()
    }

    fn a2() -> SpatialArc {
        arc(&[(0, 0, 0), (4, 0, 0), (4, 2, 1), (2, -2, 1)]).unwrap()
    }

    fn collinear() -> SpatialArc {
        arc(&[(0, 0, 0), (1, 0, 0), (2, 0, 0)]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(arc(&[(0, 0, 0), (1, 1, 0), (2, 0, 0)]).is_ok());
        assert_eq!(arc(&[(0, 0, 0), (1, 0, 0), (0, 0, 0)]), Err(ArcError::ClosedPath));
        assert_eq!(
            arc(&[(0, 0, 0), (1, 0, 0), (1, 0, 0)]),
            Err(ArcError::RepeatedVertex { index: 2 })
        );
        assert_eq!(arc(&[(0, 0, 0)]), Err(ArcError::TooFewVertices(1)));
        // edges 0 and 2 cross at (1,1,0)
        assert_eq!(
            arc(&[(0, 0, 0), (2, 2, 0), (2, 0, 0), (0, 2, 0)]),
            Err(ArcError::SelfIntersection { first: 0, second: 2 })
        );
        // folding back along an edge
        assert_eq!(
            arc(&[(0, 0, 0), (2, 0, 0), (1, 0, 0), (1, 1, 0)]),
            Err(ArcError::SelfIntersection { first: 0, second: 1 })
        );
    }

    #[test]
    fn front_pop_examples() {
        let fp = front_pop(&a2()).unwrap();
        assert_eq!(fp.edge_s, 0);
        assert_eq!(fp.u_s, Direction::ints(1, 0, 0).unwrap());
        assert_eq!(fp.edge_t, 2);
        assert_eq!(fp.plane_s, Direction::ints(0, 1, 2).unwrap());
        assert!(front_pop(&collinear()).is_none());
        let fp1 = front_pop(&a1()).unwrap();
        assert_eq!((fp1.edge_s, fp1.edge_t), (0, 1));
    }

    #[test]
    fn pop_scan_skips_front_line_edges() {
        // first edge runs along the front line
        let a = arc(&[(0, 0, 0), (1, 0, 0), (2, 1, 0), (3, 0, 0), (4, 0, 0)]).unwrap();
        let fp = front_pop(&a).unwrap();
        assert_eq!((fp.edge_s, fp.edge_t), (1, 2));
    }

    #[test]
    fn frame_examples() {
        let f = frame_of(&a2()).unwrap();
        assert_eq!(f.e_x, Vec3::ints(2, -2, 1));
        assert_eq!(f.e_y, Vec3::ints(5, 4, -2));
        assert!(Direction::new(&f.e_z).unwrap() == Direction::ints(0, 1, 2).unwrap());
        assert_eq!(f.e_y.dot(&Vec3::ints(1, 0, 0)), Rat::from_int(5));
        // u_s orthogonal to u_γ: e_y is u_s itself
        let a = arc(&[(0, 0, 0), (0, 3, 0), (2, 3, 1), (2, 0, 0)]).unwrap();
        let f = frame_of(&a).unwrap();
        assert_eq!(Direction::new(&f.e_y).unwrap(), Direction::ints(0, 1, 0).unwrap());
        assert_eq!(frame_of(&collinear()), Err(ArcError::CollinearArc));
    }

    #[test]
    fn inbound_examples() {
        assert!(is_inbound_arc(&a2()));
        // edge 1 passes through (1,0,0), inside the front edge (0,0,0)→(2,0,0)
        let crossing = arc(&[(0, 0, 0), (1, 1, 0), (1, -1, 0), (2, 0, 0)]).unwrap();
        assert!(!is_inbound_arc(&crossing));
        assert!(!is_inbound_arc(&collinear()));
    }

    #[test]
    fn even_examples() {
        assert!(is_even_arc(&a1()).unwrap());
        assert!(!is_even_arc(&a2()).unwrap());
        // non-planar, but both pop lines lie in z = 0 with opposite orientations
        let a = arc(&[(0, 0, 0), (1, 1, 0), (2, 3, 4), (3, 1, 0), (4, 0, 0)]).unwrap();
        assert!(is_even_arc(&a).unwrap());
        assert!(!pop_planes_agree(&a).unwrap());
        assert_eq!(is_even_arc(&collinear()), Err(ArcError::CollinearArc));
    }

    #[test]
    fn reversal() {
        assert_eq!(reverse_arc(&reverse_arc(&a1())), a1());
        assert_eq!(reverse_arc(&a2()).vertices()[0], Vec3::ints(2, -2, 1));
        assert_eq!(reverse_arc(&a2()).front_vector(), a2().front_vector().neg());
    }

    fn arb_arc() -> impl Strategy<Value = SpatialArc> {
        prop::collection::vec((-6i64..6, -6i64..6, -6i64..6), 3..7).prop_filter_map(
            "invalid arc",
            |pts| arc(&pts).ok().filter(|a| !a.is_collinear()),
        )
    }

    proptest! {
        #[test]
        fn reverse_swaps_pop_lines(a in arb_arc()) {
            let f = front_pop(&a).unwrap();
            let r = front_pop(&reverse_arc(&a)).unwrap();
            prop_assert!(r.ell_s.same_points(&f.ell_t));
            prop_assert!(r.ell_t.same_points(&f.ell_s));
        }

        #[test]
        fn frame_is_orthogonal(a in arb_arc()) {
            let f = frame_of(&a).unwrap();
            prop_assert!(f.e_x.dot(&f.e_y).is_zero());
            prop_assert!(f.e_x.dot(&f.e_z).is_zero());
            prop_assert!(f.e_y.dot(&f.e_z).is_zero());
            prop_assert_eq!(f.e_z.clone(), cross(&f.e_x, &f.e_y));
            prop_assert!(crate::geom::det3(&f.e_x, &f.e_y, &f.e_z).signum() > 0);
        }

        #[test]
        fn evenness_and_inbound_ignore_orientation(a in arb_arc()) {
            let r = reverse_arc(&a);
            prop_assert_eq!(is_even_arc(&a).unwrap(), is_even_arc(&r).unwrap());
            prop_assert_eq!(is_inbound_arc(&a), is_inbound_arc(&r));
        }
    }
}
