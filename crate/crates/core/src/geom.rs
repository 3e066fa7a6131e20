//! Exact rational 3D geometry: vectors, directions, lines and great-circle normals.
//!
//! Nothing in this module rounds. Directions are never normalized to unit
//! length; they are kept as primitive integer vectors so that two directions
//! compare equal exactly when they describe the same ray.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("zero vector has no direction")]
    ZeroVector,
    #[error("point lies on the line")]
    PointOnLine,
    #[error("malformed rational {0:?}")]
    BadRational(String),
}

/// Arbitrary precision rational in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(v: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Rat(BigRational::from_integer(v))
    }

    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rat(BigRational::new(num, den))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        if self.0.is_zero() {
            0
        } else if self.0.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Rat {
        Rat(self.0.recip())
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    /// Rough magnitude, for presentation only (SVG output, logging).
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = GeomError;

    /// Accepts `p`, `p/q`, and finite decimals such as `-1.25`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GeomError::BadRational(s.to_string());
        let t = s.trim();
        if t.is_empty() {
            return Err(bad());
        }
        if let Some((p, q)) = t.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            return Ok(Rat(BigRational::new(p, q)));
        }
        if let Some((ip, fp)) = t.split_once('.') {
            let neg = ip.starts_with('-');
            let ip_digits = ip.trim_start_matches(['-', '+']);
            if fp.is_empty() || !fp.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            if !ip_digits.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            let digits = format!("{}{}", if ip_digits.is_empty() { "0" } else { ip_digits }, fp);
            let mut num: BigInt = digits.parse().map_err(|_| bad())?;
            if neg {
                num = -num;
            }
            let den = num_traits::pow(BigInt::from(10), fp.len());
            return Ok(Rat(BigRational::new(num, den)));
        }
        let p: BigInt = t.parse().map_err(|_| bad())?;
        Ok(Rat(BigRational::from_integer(p)))
    }
}

macro_rules! rat_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                Rat((self.0).$m(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: &'a Rat) -> Rat {
                Rat((self.0).$m(&rhs.0))
            }
        }
        impl<'a> $tr<&'a Rat> for &'a Rat {
            type Output = Rat;
            fn $m(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$m(&rhs.0))
            }
        }
        impl<'a> $tr<Rat> for &'a Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                Rat((&self.0).$m(rhs.0))
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);
rat_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0.clone())
    }
}

impl From<i64> for Rat {
    fn from(v: i64) -> Self {
        Rat::from_int(v)
    }
}

/// A point or free vector of rational 3-space.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vec3 {
    pub x: Rat,
    pub y: Rat,
    pub z: Rat,
}

impl fmt::Debug for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.x, self.y, self.z)
    }
}

impl Vec3 {
    pub fn new(x: Rat, y: Rat, z: Rat) -> Self {
        Vec3 { x, y, z }
    }

    pub fn ints(x: i64, y: i64, z: i64) -> Self {
        Vec3::new(Rat::from_int(x), Rat::from_int(y), Rat::from_int(z))
    }

    pub fn zero() -> Self {
        Vec3::ints(0, 0, 0)
    }

    pub fn coords(&self) -> [&Rat; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn dot(&self, o: &Vec3) -> Rat {
        &self.x * &o.x + &self.y * &o.y + &self.z * &o.z
    }

    pub fn cross(&self, o: &Vec3) -> Vec3 {
        cross(self, o)
    }

    pub fn scale(&self, k: &Rat) -> Vec3 {
        Vec3::new(&self.x * k, &self.y * k, &self.z * k)
    }

    pub fn norm2(&self) -> Rat {
        self.dot(self)
    }

    /// Positive rational multiple with coprime integer coordinates.
    /// The zero vector is returned unchanged.
    pub fn primitive(&self) -> Vec3 {
        if self.is_zero() {
            return self.clone();
        }
        let mut l = BigInt::one();
        for c in self.coords() {
            l = l.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coords()
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        let mut it = ints.into_iter().map(|v| Rat::from_bigint(v / &g));
        Vec3::new(it.next().unwrap(), it.next().unwrap(), it.next().unwrap())
    }

    /// True when `o` is a nonzero rational multiple (either sign) of `self`.
    pub fn parallel(&self, o: &Vec3) -> bool {
        !self.is_zero() && !o.is_zero() && cross(self, o).is_zero()
    }
}

impl Add for &Vec3 {
    type Output = Vec3;
    fn add(self, o: &Vec3) -> Vec3 {
        Vec3::new(&self.x + &o.x, &self.y + &o.y, &self.z + &o.z)
    }
}

impl Sub for &Vec3 {
    type Output = Vec3;
    fn sub(self, o: &Vec3) -> Vec3 {
        Vec3::new(&self.x - &o.x, &self.y - &o.y, &self.z - &o.z)
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        &self + &o
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        &self - &o
    }
}

impl Neg for &Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-&self.x, -&self.y, -&self.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        -&self
    }
}

/// Exterior product.
pub fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    Vec3::new(
        &a.y * &b.z - &a.z * &b.y,
        &a.z * &b.x - &a.x * &b.z,
        &a.x * &b.y - &a.y * &b.x,
    )
}

/// Scalar triple product `a · (b × c)`.
pub fn det3(a: &Vec3, b: &Vec3, c: &Vec3) -> Rat {
    a.dot(&cross(b, c))
}

/// A ray class of nonzero vectors under positive scaling, stored as the
/// primitive integer representative.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Direction(Vec3);

impl Direction {
    pub fn new(v: &Vec3) -> Result<Direction, GeomError> {
        if v.is_zero() {
            return Err(GeomError::ZeroVector);
        }
        Ok(Direction(v.primitive()))
    }

    pub fn ints(x: i64, y: i64, z: i64) -> Result<Direction, GeomError> {
        Direction::new(&Vec3::ints(x, y, z))
    }

    pub fn vec(&self) -> &Vec3 {
        &self.0
    }

    pub fn neg(&self) -> Direction {
        Direction(-&self.0)
    }

    /// Same line through the origin, either orientation.
    pub fn parallel_to(&self, v: &Vec3) -> bool {
        self.0.parallel(v)
    }
}

impl fmt::Debug for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Direction{:?}", self.0)
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// An oriented line `base + t·dir`.
#[derive(Clone, Debug)]
pub struct LineR3 {
    pub base: Vec3,
    pub dir: Direction,
}

impl LineR3 {
    pub fn new(base: Vec3, dir: Direction) -> Self {
        LineR3 { base, dir }
    }

    /// The line from `a` towards `b`.
    pub fn through(a: &Vec3, b: &Vec3) -> Result<LineR3, GeomError> {
        Ok(LineR3::new(a.clone(), Direction::new(&(b - a))?))
    }

    pub fn contains(&self, p: &Vec3) -> bool {
        cross(&(p - &self.base), self.dir.vec()).is_zero()
    }

    /// Equality of point sets, ignoring orientation.
    pub fn same_points(&self, o: &LineR3) -> bool {
        self.dir.parallel_to(o.dir.vec()) && self.contains(&o.base)
    }

    pub fn reversed(&self) -> LineR3 {
        LineR3::new(self.base.clone(), self.dir.neg())
    }
}

impl PartialEq for LineR3 {
    fn eq(&self, o: &LineR3) -> bool {
        self.dir == o.dir && self.contains(&o.base)
    }
}

impl Eq for LineR3 {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinePair {
    /// Same point set (orientation ignored).
    Equal,
    ParallelDistinct,
    Intersecting(Vec3),
    Skew,
}

pub fn classify_line_pair(l1: &LineR3, l2: &LineR3) -> LinePair {
    let d1 = l1.dir.vec();
    let d2 = l2.dir.vec();
    let w = &l2.base - &l1.base;
    let n = cross(d1, d2);
    if n.is_zero() {
        return if cross(&w, d1).is_zero() {
            LinePair::Equal
        } else {
            LinePair::ParallelDistinct
        };
    }
    if !w.dot(&n).is_zero() {
        return LinePair::Skew;
    }
    // base1 + s d1 = base2 + t d2  =>  s = ((w × d2) · n) / |n|^2
    let s = cross(&w, d2).dot(&n) / n.norm2();
    LinePair::Intersecting(&l1.base + &d1.scale(&s))
}

/// Normal of a plane through the origin, canonicalized so that `n` and `-n`
/// collapse to one representative: coprime integers, first nonzero
/// coordinate positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GreatCircleNormal(Vec3);

impl GreatCircleNormal {
    pub fn new(n: &Vec3) -> Result<GreatCircleNormal, GeomError> {
        if n.is_zero() {
            return Err(GeomError::ZeroVector);
        }
        let p = n.primitive();
        let first = p.coords().into_iter().find(|c| !c.is_zero()).unwrap().signum();
        Ok(GreatCircleNormal(if first < 0 { -p } else { p }))
    }

    pub fn vec(&self) -> &Vec3 {
        &self.0
    }

    /// Integer coordinates; always exact since the representative is primitive.
    pub fn int_coords(&self) -> [BigInt; 3] {
        [
            self.0.x.numer().clone(),
            self.0.y.numer().clone(),
            self.0.z.numer().clone(),
        ]
    }

    /// Sign of `n · u`.
    pub fn side(&self, u: &Vec3) -> i32 {
        self.0.dot(u).signum()
    }
}

impl fmt::Debug for GreatCircleNormal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Circle{:?}", self.0)
    }
}

impl fmt::Display for GreatCircleNormal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.int_coords();
        write!(f, "{} {} {}", a, b, c)
    }
}

/// Normal of the plane spanned by a point and a line not containing it.
pub fn plane_normal_point_line(p: &Vec3, l: &LineR3) -> Result<GreatCircleNormal, GeomError> {
    let n = cross(&(p - &l.base), l.dir.vec());
    if n.is_zero() {
        return Err(GeomError::PointOnLine);
    }
    GreatCircleNormal::new(&n)
}

/// Lexicographic comparison of two rationals pairs, used for 2D sweeps.
pub fn cmp_pair(a: (&Rat, &Rat), b: (&Rat, &Rat)) -> Ordering {
    a.0.cmp(b.0).then_with(|| a.1.cmp(b.1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(x: i64, y: i64, z: i64) -> Vec3 {
        Vec3::ints(x, y, z)
    }

    fn line(b: Vec3, d: Vec3) -> LineR3 {
        LineR3::new(b, Direction::new(&d).unwrap())
    }

    #[test]
    fn cross_examples() {
        assert_eq!(cross(&v(1, 0, 0), &v(0, 1, 0)), v(0, 0, 1));
        assert_eq!(cross(&v(2, -2, 1), &v(5, 4, -2)), v(0, 9, 18));
        assert!(cross(&v(3, -7, 2), &v(3, -7, 2)).is_zero());
    }

    #[test]
    fn cross_matches_component_oracle() {
        // Determinant cofactor expansion written out independently.
        let a = [2i64, -2, 1];
        let b = [5i64, 4, -2];
        let oracle = [
            a[1] * b[2] - a[2] * b[1],
            -(a[0] * b[2] - a[2] * b[0]),
            a[0] * b[1] - a[1] * b[0],
        ];
        assert_eq!(
            cross(&v(a[0], a[1], a[2]), &v(b[0], b[1], b[2])),
            v(oracle[0], oracle[1], oracle[2])
        );
    }

    #[test]
    fn line_pairs() {
        let xaxis = line(v(0, 0, 0), v(1, 0, 0));
        assert_eq!(classify_line_pair(&xaxis, &xaxis), LinePair::Equal);
        assert_eq!(
            classify_line_pair(&xaxis, &line(v(0, 1, 0), v(1, 0, 0))),
            LinePair::ParallelDistinct
        );
        assert_eq!(classify_line_pair(&xaxis, &line(v(0, 0, 1), v(0, 1, 0))), LinePair::Skew);
        assert_eq!(
            classify_line_pair(&xaxis, &line(v(3, 1, 0), v(0, 1, 0))),
            LinePair::Intersecting(v(3, 0, 0))
        );
        // reversed orientation is still the same point set
        assert_eq!(classify_line_pair(&xaxis, &xaxis.reversed()), LinePair::Equal);
        assert_ne!(xaxis, xaxis.reversed());
    }

    #[test]
    fn point_line_planes() {
        let xaxis = line(v(0, 0, 0), v(1, 0, 0));
        assert_eq!(
            plane_normal_point_line(&v(0, 0, 1), &xaxis).unwrap().vec(),
            &v(0, 1, 0)
        );
        let diag = line(v(0, 0, 0), v(1, 1, 0));
        assert_eq!(
            plane_normal_point_line(&v(2, 0, 0), &diag).unwrap().vec(),
            &v(0, 0, 1)
        );
        assert_eq!(
            plane_normal_point_line(&v(5, 0, 0), &xaxis),
            Err(GeomError::PointOnLine)
        );
    }

    #[test]
    fn circle_normal_canonical_form() {
        let a = GreatCircleNormal::new(&v(0, -2, -4)).unwrap();
        let b = GreatCircleNormal::new(&v(0, 3, 6)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.vec(), &v(0, 1, 2));
        let r = Vec3::new(Rat::new(1, 2), Rat::new(-1, 3), Rat::zero());
        assert_eq!(GreatCircleNormal::new(&r).unwrap().vec(), &v(3, -2, 0));
    }

    #[test]
    fn rational_text() {
        assert_eq!("3/6".parse::<Rat>().unwrap(), Rat::new(1, 2));
        assert_eq!("-1.25".parse::<Rat>().unwrap(), Rat::new(-5, 4));
        assert_eq!(Rat::new(4, 2).to_string(), "2");
        assert_eq!(Rat::new(-2, 6).to_string(), "-1/3");
        assert!("1/0".parse::<Rat>().is_err());
        assert!("abc".parse::<Rat>().is_err());
        assert!("".parse::<Rat>().is_err());
    }

    #[test]
    fn direction_equality() {
        let a = Direction::new(&v(2, 4, 6)).unwrap();
        let b = Direction::new(&Vec3::new(Rat::new(1, 3), Rat::new(2, 3), Rat::one())).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, a.neg());
        assert_eq!(Direction::new(&Vec3::zero()), Err(GeomError::ZeroVector));
    }

    fn small() -> impl Strategy<Value = Vec3> {
        (-20i64..20, -20i64..20, -20i64..20, 1i64..7)
            .prop_map(|(x, y, z, d)| Vec3::new(Rat::new(x, d), Rat::new(y, d + 1), Rat::new(z, 1)))
    }

    proptest! {
        #[test]
        fn cross_is_orthogonal(a in small(), b in small()) {
            let c = cross(&a, &b);
            prop_assert!(c.dot(&a).is_zero());
            prop_assert!(c.dot(&b).is_zero());
            prop_assert_eq!(cross(&b, &a), -c);
        }

        #[test]
        fn point_line_normal_contains_line(p in small(), b in small(), d in small(), t in -5i64..5) {
            prop_assume!(!d.is_zero());
            let l = LineR3::new(b.clone(), Direction::new(&d).unwrap());
            prop_assume!(!l.contains(&p));
            let n = plane_normal_point_line(&p, &l).unwrap();
            let q = &b + &d.scale(&Rat::from_int(t));
            prop_assert!(n.vec().dot(&(&q - &p)).is_zero());
        }

        #[test]
        fn negation_gives_distinct_direction(a in small()) {
            prop_assume!(!a.is_zero());
            let d = Direction::new(&a).unwrap();
            prop_assert_ne!(d.neg(), d.clone());
            prop_assert_eq!(d.neg().neg(), d);
        }
    }
}
