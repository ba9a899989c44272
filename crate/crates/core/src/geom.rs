//! Planar primitives: exact points, axis-parallel rectangles, squared
//! distances.

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2 {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point2 {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point2 { x, y }
    }

    pub fn dist_sq(&self, other: &Point2) -> Scalar {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        &dx * &dx + &dy * &dy
    }

    pub fn sub(&self, other: &Point2) -> Point2 {
        Point2::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn add(&self, other: &Point2) -> Point2 {
        Point2::new(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn scale(&self, c: &Scalar) -> Point2 {
        Point2::new(&self.x * c, &self.y * c)
    }

    /// Counterclockwise quarter turn.
    pub fn rot90(&self) -> Point2 {
        Point2::new(-self.y.clone(), self.x.clone())
    }

    pub fn dot(&self, other: &Point2) -> Scalar {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn cross(&self, other: &Point2) -> Scalar {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn norm_sq(&self) -> Scalar {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        use num_traits::Zero;
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn midpoint(&self, other: &Point2) -> Point2 {
        Point2::new(
            crate::scalar::mid(&self.x, &other.x),
            crate::scalar::mid(&self.y, &other.y),
        )
    }
}

/// Closed axis-parallel rectangle. Degenerate (zero width or height)
/// rectangles are allowed; `l == r` or `b == t` describe segments and points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rect {
    pub l: Scalar,
    pub r: Scalar,
    pub b: Scalar,
    pub t: Scalar,
}

impl Rect {
    pub fn new(l: Scalar, r: Scalar, b: Scalar, t: Scalar) -> Self {
        debug_assert!(l <= r && b <= t);
        Rect { l, r, b, t }
    }

    pub fn contains(&self, p: &Point2) -> bool {
        self.l <= p.x && p.x <= self.r && self.b <= p.y && p.y <= self.t
    }

    pub fn contains_strict(&self, p: &Point2) -> bool {
        self.l < p.x && p.x < self.r && self.b < p.y && p.y < self.t
    }

    /// True iff `inner` fits inside `self` (closed containment).
    pub fn contains_rect(&self, inner: &Rect) -> bool {
        self.l <= inner.l && inner.r <= self.r && self.b <= inner.b && inner.t <= self.t
    }

    pub fn center(&self) -> Point2 {
        Point2::new(
            crate::scalar::mid(&self.l, &self.r),
            crate::scalar::mid(&self.b, &self.t),
        )
    }

    pub fn width(&self) -> Scalar {
        &self.r - &self.l
    }

    pub fn height(&self) -> Scalar {
        &self.t - &self.b
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn pt(x: i64, y: i64) -> Point2 {
        Point2::new(int(x), int(y))
    }

    #[test]
    fn rect_membership() {
        let r = Rect::new(int(0), int(10), int(0), int(10));
        assert!(r.contains(&pt(0, 5)));
        assert!(!r.contains_strict(&pt(0, 5)));
        assert!(r.contains_strict(&pt(5, 5)));
        assert!(!r.contains(&pt(11, 5)));
    }

    #[test]
    fn degenerate_rect_is_a_segment() {
        let r = Rect::new(int(3), int(3), int(0), int(10));
        assert!(r.contains(&pt(3, 4)));
        assert!(!r.contains_strict(&pt(3, 4)));
    }

    #[test]
    fn rotation_and_cross() {
        let v = pt(2, 1);
        assert_eq!(v.rot90(), pt(-1, 2));
        assert_eq!(v.cross(&v.rot90()), int(5));
    }
}
