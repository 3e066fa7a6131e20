//! Orthogonal projection of an arc to the oriented plane normal to a direction.

use crate::arc::SpatialArc;
use crate::geom::{cross, Direction, Rat, Vec3};
use crate::seg::Vec2;

/// Exact image of an arc in the plane `u⊥`, with depths along `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionScene {
    pub direction: Direction,
    /// `(b1, b2)` spanning `u⊥` with `det(b1, b2, u) > 0`.
    pub basis: (Vec3, Vec3),
    pub points: Vec<Vec2>,
    /// `u · p` per vertex; larger values are closer to the viewer.
    pub depths: Vec<Rat>,
}

/// Right-handed basis of the plane orthogonal to `u`. For a coordinate axis
/// direction the basis is the remaining pair of axes in cyclic order.
pub fn plane_basis(u: &Direction) -> (Vec3, Vec3) {
    let v = u.vec();
    let coords = v.coords();
    let k = (0..3).min_by_key(|&i| coords[i].abs()).unwrap();
    let mut e = [Rat::zero(), Rat::zero(), Rat::zero()];
    e[k] = Rat::one();
    let [ex, ey, ez] = e;
    let ek = Vec3::new(ex, ey, ez);
    let b1 = (&ek - &v.scale(&(v.dot(&ek) / v.norm2()))).primitive();
    let b2 = cross(v, &b1).primitive();
    (b1, b2)
}

pub fn scene_of(arc: &SpatialArc, u: &Direction) -> ProjectionScene {
    let basis = plane_basis(u);
    let points = arc
        .vertices()
        .iter()
        .map(|p| Vec2::new(p.dot(&basis.0), p.dot(&basis.1)))
        .collect();
    let depths = arc.vertices().iter().map(|p| p.dot(u.vec())).collect();
    ProjectionScene {
        direction: u.clone(),
        basis,
        points,
        depths,
    }
}

impl ProjectionScene {
    pub fn edge_count(&self) -> usize {
        self.points.len() - 1
    }

    /// Depth of edge `i` at parameter `s ∈ [0, 1]`.
    pub fn depth_at(&self, i: usize, s: &Rat) -> Rat {
        &self.depths[i] + &(s * &(&self.depths[i + 1] - &self.depths[i]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::det3;

    #[test]
    fn axis_basis() {
        let (b1, b2) = plane_basis(&Direction::ints(0, 0, 1).unwrap());
        assert_eq!(b1, Vec3::ints(1, 0, 0));
        assert_eq!(b2, Vec3::ints(0, 1, 0));
    }

    #[test]
    fn basis_is_right_handed() {
        for d in [(1, 2, 3), (-4, 1, 0), (0, 0, -1), (5, -5, 2), (0, 3, 0)] {
            let u = Direction::ints(d.0, d.1, d.2).unwrap();
            let (b1, b2) = plane_basis(&u);
            assert!(b1.dot(u.vec()).is_zero());
            assert!(b2.dot(u.vec()).is_zero());
            assert!(b1.dot(&b2).is_zero());
            assert!(det3(&b1, &b2, u.vec()).signum() > 0);
        }
    }
}
