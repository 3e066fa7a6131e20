//! Exact segment predicates in the plane and in space.

use crate::geom::{cross, Rat, Vec3};

/// A point of a projection plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vec2 {
    pub x: Rat,
    pub y: Rat,
}

impl Vec2 {
    pub fn new(x: Rat, y: Rat) -> Self {
        Vec2 { x, y }
    }

    pub fn ints(x: i64, y: i64) -> Self {
        Vec2::new(Rat::from_int(x), Rat::from_int(y))
    }

    pub fn sub(&self, o: &Vec2) -> Vec2 {
        Vec2::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn add(&self, o: &Vec2) -> Vec2 {
        Vec2::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn scale(&self, k: &Rat) -> Vec2 {
        Vec2::new(&self.x * k, &self.y * k)
    }

    pub fn dot(&self, o: &Vec2) -> Rat {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

/// `det(a, b)` for free vectors.
pub fn det2(a: &Vec2, b: &Vec2) -> Rat {
    &a.x * &b.y - &a.y * &b.x
}

/// Sign of the turn a → b → c (positive = counterclockwise).
pub fn orient2(a: &Vec2, b: &Vec2, c: &Vec2) -> i32 {
    det2(&b.sub(a), &c.sub(a)).signum()
}

/// `p` lies on the closed segment `[a, b]`.
pub fn on_segment2(p: &Vec2, a: &Vec2, b: &Vec2) -> bool {
    if orient2(a, b, p) != 0 {
        return false;
    }
    let ap = p.sub(a);
    let ab = b.sub(a);
    let t = ap.dot(&ab);
    t.signum() >= 0 && (&t - &ab.dot(&ab)).signum() <= 0
}

/// Strictly inside the open segment `(a, b)`.
pub fn in_open_segment2(p: &Vec2, a: &Vec2, b: &Vec2) -> bool {
    on_segment2(p, a, b) && p != a && p != b
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegHit<P> {
    Disjoint,
    /// A single common point.
    Point(P),
    /// Collinear with a common piece of positive length.
    Overlap,
}

/// Closed segment intersection in the plane.
pub fn intersect2(a: &Vec2, b: &Vec2, c: &Vec2, d: &Vec2) -> SegHit<Vec2> {
    let o1 = orient2(a, b, c);
    let o2 = orient2(a, b, d);
    let o3 = orient2(c, d, a);
    let o4 = orient2(c, d, b);
    if o1 == 0 && o2 == 0 {
        // collinear: compare parameters along the dominant axis
        let ab = b.sub(a);
        let key = |p: &Vec2| p.sub(a).dot(&ab);
        let (mut s0, mut s1) = (key(a), key(b));
        if s0 > s1 {
            std::mem::swap(&mut s0, &mut s1);
        }
        let (mut t0, mut t1) = (key(c), key(d));
        if t0 > t1 {
            std::mem::swap(&mut t0, &mut t1);
        }
        let lo = if s0 > t0 { s0 } else { t0 };
        let hi = if s1 < t1 { s1 } else { t1 };
        return match lo.cmp(&hi) {
            std::cmp::Ordering::Greater => SegHit::Disjoint,
            std::cmp::Ordering::Equal => {
                // touching at a single shared endpoint
                let p = [a, b, c, d]
                    .into_iter()
                    .find(|p| key(p) == lo)
                    .cloned()
                    .unwrap();
                SegHit::Point(p)
            }
            std::cmp::Ordering::Less => SegHit::Overlap,
        };
    }
    if o1 * o2 > 0 || o3 * o4 > 0 {
        return SegHit::Disjoint;
    }
    // proper or touching intersection: solve a + s (b - a) on line cd
    let r = b.sub(a);
    let q = d.sub(c);
    let den = det2(&r, &q);
    let s = det2(&c.sub(a), &q) / den;
    SegHit::Point(a.add(&r.scale(&s)))
}

/// Parameters `(s, t)` of the intersection of the lines `a + s(b-a)` and
/// `c + t(d-c)`, or `None` for parallel lines.
pub fn line_params2(a: &Vec2, b: &Vec2, c: &Vec2, d: &Vec2) -> Option<(Rat, Rat)> {
    let r = b.sub(a);
    let q = d.sub(c);
    let den = det2(&r, &q);
    if den.is_zero() {
        return None;
    }
    let w = c.sub(a);
    Some((det2(&w, &q) / &den, det2(&w, &r) / den))
}

/// Closed segment intersection in space.
pub fn intersect3(a: &Vec3, b: &Vec3, c: &Vec3, d: &Vec3) -> SegHit<Vec3> {
    let ab = b - a;
    let n = cross(&ab, &(c - a));
    let n = if n.is_zero() { cross(&ab, &(d - a)) } else { n };
    if n.is_zero() {
        // all four points collinear; use any plane containing the line
        let helper = [Vec3::ints(1, 0, 0), Vec3::ints(0, 1, 0), Vec3::ints(0, 0, 1)]
            .into_iter()
            .map(|e| cross(&ab, &e))
            .find(|m| !m.is_zero())
            .unwrap();
        return planar_hit(a, b, c, d, &helper);
    }
    if !n.dot(&(d - a)).is_zero() {
        return SegHit::Disjoint;
    }
    planar_hit(a, b, c, d, &n)
}

fn planar_hit(a: &Vec3, b: &Vec3, c: &Vec3, d: &Vec3, n: &Vec3) -> SegHit<Vec3> {
    // drop the coordinate where the plane normal is nonzero; the map is injective on the plane
    let drop = if !n.z.is_zero() {
        2
    } else if !n.y.is_zero() {
        1
    } else {
        0
    };
    let to2 = |p: &Vec3| match drop {
        2 => Vec2::new(p.x.clone(), p.y.clone()),
        1 => Vec2::new(p.x.clone(), p.z.clone()),
        _ => Vec2::new(p.y.clone(), p.z.clone()),
    };
    match intersect2(&to2(a), &to2(b), &to2(c), &to2(d)) {
        SegHit::Disjoint => SegHit::Disjoint,
        SegHit::Overlap => SegHit::Overlap,
        SegHit::Point(p2) => {
            // recover the 3D point on [a, b] (or on [c, d] if ab is degenerate in 2D)
            let (a2, b2) = (to2(a), to2(b));
            let ab2 = b2.sub(&a2);
            let pt = if !ab2.is_zero() {
                let s = p2.sub(&a2).dot(&ab2) / ab2.dot(&ab2);
                a + &(b - a).scale(&s)
            } else {
                a.clone()
            };
            SegHit::Point(pt)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Vec2 {
        Vec2::ints(x, y)
    }

    #[test]
    fn planar_cases() {
        assert_eq!(
            intersect2(&p(0, 0), &p(4, 0), &p(4, 2), &p(2, -2)),
            SegHit::Point(p(3, 0))
        );
        assert_eq!(intersect2(&p(0, 0), &p(1, 0), &p(2, 0), &p(3, 0)), SegHit::Disjoint);
        assert_eq!(intersect2(&p(0, 0), &p(2, 0), &p(1, 0), &p(3, 0)), SegHit::Overlap);
        assert_eq!(
            intersect2(&p(0, 0), &p(1, 0), &p(1, 0), &p(3, 0)),
            SegHit::Point(p(1, 0))
        );
        assert_eq!(intersect2(&p(0, 0), &p(1, 1), &p(0, 1), &p(1, 2)), SegHit::Disjoint);
        assert_eq!(
            intersect2(&p(0, 0), &p(2, 2), &p(1, 1), &p(5, 0)),
            SegHit::Point(p(1, 1))
        );
    }

    #[test]
    fn spatial_cases() {
        let v = Vec3::ints;
        assert_eq!(
            intersect3(&v(0, 0, 0), &v(2, 0, 0), &v(1, -1, 0), &v(1, 1, 0)),
            SegHit::Point(v(1, 0, 0))
        );
        assert_eq!(
            intersect3(&v(0, 0, 0), &v(2, 0, 0), &v(1, -1, 1), &v(1, 1, 1)),
            SegHit::Disjoint
        );
        assert_eq!(
            intersect3(&v(0, 0, 0), &v(2, 0, 0), &v(1, 0, 0), &v(5, 0, 0)),
            SegHit::Overlap
        );
        assert_eq!(
            intersect3(&v(0, 0, 0), &v(0, 0, 2), &v(0, 0, 1), &v(0, 1, 1)),
            SegHit::Point(v(0, 0, 1))
        );
    }
}
