//! Annulus shapes and their coverage semantics.
//!
//! An annulus is the closed region between two nested boundaries: a pair of
//! ordered intervals on the line, two nested axis-parallel rectangles, or
//! two concentric circles. Each boundary element carries an `open` flag: a
//! flagged element excludes the points lying exactly on it, which encodes an
//! infinitesimal boundary shift symbolically instead of perturbing
//! coordinates. `Empty` is the annulus that covers nothing, the witness for
//! optima that cover no point at all.

use crate::geom::{Point2, Rect};
use crate::instance::{Color, Instance, PtRef};
use crate::scalar::Scalar;
use num_traits::Signed;
use thiserror::Error;

/// `a >= b`, or `a > b` when the boundary at `b` is open.
fn ge(a: &Scalar, b: &Scalar, open: bool) -> bool {
    if open {
        a > b
    } else {
        a >= b
    }
}

/// `a <= b`, or `a < b` when the boundary at `b` is open.
fn le(a: &Scalar, b: &Scalar, open: bool) -> bool {
    if open {
        a < b
    } else {
        a <= b
    }
}

/// `a > b`, relaxed to `a >= b` when the boundary at `b` is open. Used for
/// hole membership: an open inner boundary swallows its own boundary points.
fn gt_relaxed(a: &Scalar, b: &Scalar, open: bool) -> bool {
    if open {
        a >= b
    } else {
        a > b
    }
}

fn lt_relaxed(a: &Scalar, b: &Scalar, open: bool) -> bool {
    if open {
        a <= b
    } else {
        a < b
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IntervalEnd {
    LeftOuter,
    LeftInner,
    RightInner,
    RightOuter,
}

pub const INTERVAL_ENDS: [IntervalEnd; 4] = [
    IntervalEnd::LeftOuter,
    IntervalEnd::LeftInner,
    IntervalEnd::RightInner,
    IntervalEnd::RightOuter,
];

/// Two ordered, non-overlapping closed intervals `[l_o, l_i]` and
/// `[r_i, r_o]` on the line; the gap between them is the hole.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalPair {
    pub l_o: Scalar,
    pub l_i: Scalar,
    pub r_i: Scalar,
    pub r_o: Scalar,
    /// Open flags indexed by [`IntervalEnd`] order.
    pub endpoint_open: [bool; 4],
    pub defining_points: Vec<(PtRef, IntervalEnd)>,
}

impl IntervalPair {
    pub fn closed(l_o: Scalar, l_i: Scalar, r_i: Scalar, r_o: Scalar) -> Self {
        IntervalPair {
            l_o,
            l_i,
            r_i,
            r_o,
            endpoint_open: [false; 4],
            defining_points: Vec::new(),
        }
    }

    pub fn endpoint(&self, e: IntervalEnd) -> &Scalar {
        match e {
            IntervalEnd::LeftOuter => &self.l_o,
            IntervalEnd::LeftInner => &self.l_i,
            IntervalEnd::RightInner => &self.r_i,
            IntervalEnd::RightOuter => &self.r_o,
        }
    }

    fn open(&self, e: IntervalEnd) -> bool {
        self.endpoint_open[e as usize]
    }

    pub fn covers_x(&self, x: &Scalar) -> bool {
        let in_left = ge(x, &self.l_o, self.open(IntervalEnd::LeftOuter))
            && le(x, &self.l_i, self.open(IntervalEnd::LeftInner));
        let in_right = ge(x, &self.r_i, self.open(IntervalEnd::RightInner))
            && le(x, &self.r_o, self.open(IntervalEnd::RightOuter));
        in_left || in_right
    }

    /// Both intervals have the same length.
    pub fn is_uniform(&self) -> bool {
        &self.l_i - &self.l_o == &self.r_o - &self.r_i
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RectSide {
    OuterLeft,
    OuterRight,
    OuterBottom,
    OuterTop,
    InnerLeft,
    InnerRight,
    InnerBottom,
    InnerTop,
}

pub const RECT_SIDES: [RectSide; 8] = [
    RectSide::OuterLeft,
    RectSide::OuterRight,
    RectSide::OuterBottom,
    RectSide::OuterTop,
    RectSide::InnerLeft,
    RectSide::InnerRight,
    RectSide::InnerBottom,
    RectSide::InnerTop,
];

/// Two nested axis-parallel rectangles; the covered region is the closed
/// set between the outer boundary and the open interior of `inner`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectAnnulus {
    pub outer: Rect,
    pub inner: Rect,
    /// Open flags indexed by [`RectSide`] order.
    pub side_open: [bool; 8],
    pub defining_points: Vec<(PtRef, RectSide)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RectClass {
    Uniform,
    NonuniformConcentric,
    NonuniformNonconcentric,
}

impl RectAnnulus {
    pub fn closed(outer: Rect, inner: Rect) -> Self {
        RectAnnulus {
            outer,
            inner,
            side_open: [false; 8],
            defining_points: Vec::new(),
        }
    }

    fn open(&self, s: RectSide) -> bool {
        self.side_open[s as usize]
    }

    /// The four widths between corresponding outer and inner sides:
    /// `(left, right, bottom, top)`.
    pub fn widths(&self) -> (Scalar, Scalar, Scalar, Scalar) {
        (
            &self.inner.l - &self.outer.l,
            &self.outer.r - &self.inner.r,
            &self.inner.b - &self.outer.b,
            &self.outer.t - &self.inner.t,
        )
    }

    pub fn covers_pt(&self, p: &Point2) -> bool {
        let in_outer = ge(&p.x, &self.outer.l, self.open(RectSide::OuterLeft))
            && le(&p.x, &self.outer.r, self.open(RectSide::OuterRight))
            && ge(&p.y, &self.outer.b, self.open(RectSide::OuterBottom))
            && le(&p.y, &self.outer.t, self.open(RectSide::OuterTop));
        if !in_outer {
            return false;
        }
        let in_hole = gt_relaxed(&p.x, &self.inner.l, self.open(RectSide::InnerLeft))
            && lt_relaxed(&p.x, &self.inner.r, self.open(RectSide::InnerRight))
            && gt_relaxed(&p.y, &self.inner.b, self.open(RectSide::InnerBottom))
            && lt_relaxed(&p.y, &self.inner.t, self.open(RectSide::InnerTop));
        !in_hole
    }

    /// The coordinate of the line carrying a side.
    pub fn side_coord(&self, s: RectSide) -> &Scalar {
        match s {
            RectSide::OuterLeft => &self.outer.l,
            RectSide::OuterRight => &self.outer.r,
            RectSide::OuterBottom => &self.outer.b,
            RectSide::OuterTop => &self.outer.t,
            RectSide::InnerLeft => &self.inner.l,
            RectSide::InnerRight => &self.inner.r,
            RectSide::InnerBottom => &self.inner.b,
            RectSide::InnerTop => &self.inner.t,
        }
    }

    /// True iff `p` lies on the closed segment realizing side `s`.
    pub fn on_side(&self, s: RectSide, p: &Point2) -> bool {
        match s {
            RectSide::OuterLeft | RectSide::OuterRight => {
                &p.x == self.side_coord(s) && self.outer.b <= p.y && p.y <= self.outer.t
            }
            RectSide::OuterBottom | RectSide::OuterTop => {
                &p.y == self.side_coord(s) && self.outer.l <= p.x && p.x <= self.outer.r
            }
            RectSide::InnerLeft | RectSide::InnerRight => {
                &p.x == self.side_coord(s) && self.inner.b <= p.y && p.y <= self.inner.t
            }
            RectSide::InnerBottom | RectSide::InnerTop => {
                &p.y == self.side_coord(s) && self.inner.l <= p.x && p.x <= self.inner.r
            }
        }
    }
}

/// Shape class of a rectangular annulus by equality pattern of its widths.
pub fn classify_rect(a: &RectAnnulus) -> RectClass {
    let (wl, wr, wb, wt) = a.widths();
    if wl == wr && wt == wb {
        if wl == wt {
            debug_assert_eq!(a.outer.center(), a.inner.center());
            RectClass::Uniform
        } else {
            debug_assert_eq!(a.outer.center(), a.inner.center());
            RectClass::NonuniformConcentric
        }
    } else {
        RectClass::NonuniformNonconcentric
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Circle {
    Inner,
    Outer,
}

/// Two concentric circles stored by center and squared radii.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircAnnulus {
    pub center: Point2,
    pub r_in_sq: Scalar,
    pub r_out_sq: Scalar,
    /// Open flags: `[inner, outer]`.
    pub boundary_open: [bool; 2],
    pub defining_points: Vec<(PtRef, Circle)>,
}

impl CircAnnulus {
    pub fn closed(center: Point2, r_in_sq: Scalar, r_out_sq: Scalar) -> Self {
        CircAnnulus {
            center,
            r_in_sq,
            r_out_sq,
            boundary_open: [false; 2],
            defining_points: Vec::new(),
        }
    }

    pub fn covers_pt(&self, p: &Point2) -> bool {
        let d_sq = self.center.dist_sq(p);
        ge(&d_sq, &self.r_in_sq, self.boundary_open[Circle::Inner as usize])
            && le(&d_sq, &self.r_out_sq, self.boundary_open[Circle::Outer as usize])
    }

    pub fn radius_sq(&self, c: Circle) -> &Scalar {
        match c {
            Circle::Inner => &self.r_in_sq,
            Circle::Outer => &self.r_out_sq,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Annulus {
    Interval(IntervalPair),
    Rect(RectAnnulus),
    Circ(CircAnnulus),
    /// Covers nothing anywhere.
    Empty,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnnulusError {
    #[error("point has {got} coordinates, annulus expects {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("interval endpoints out of order")]
    IntervalOrder,
    #[error("inner rectangle not contained in outer")]
    NotNested,
    #[error("squared radii out of order or negative")]
    RadiiOrder,
    #[error("defining point {0:?} does not lie on its recorded boundary")]
    DefiningPointOffBoundary(PtRef),
    #[error("red defining point {0:?} recorded on an open boundary")]
    RedOnOpenBoundary(PtRef),
}

impl Annulus {
    pub fn dimension(&self) -> Option<usize> {
        match self {
            Annulus::Interval(_) => Some(1),
            Annulus::Rect(_) | Annulus::Circ(_) => Some(2),
            Annulus::Empty => None,
        }
    }

    /// Closed-region membership with open flags honored. A point exactly on
    /// an open boundary element is uncovered; a point strictly inside the
    /// hole is uncovered.
    pub fn covers(&self, coords: &[Scalar]) -> Result<bool, AnnulusError> {
        let check = |expected: usize| {
            if coords.len() == expected {
                Ok(())
            } else {
                Err(AnnulusError::DimensionMismatch { expected, got: coords.len() })
            }
        };
        match self {
            Annulus::Interval(iv) => {
                check(1)?;
                Ok(iv.covers_x(&coords[0]))
            }
            Annulus::Rect(r) => {
                check(2)?;
                Ok(r.covers_pt(&Point2::new(coords[0].clone(), coords[1].clone())))
            }
            Annulus::Circ(c) => {
                check(2)?;
                Ok(c.covers_pt(&Point2::new(coords[0].clone(), coords[1].clone())))
            }
            Annulus::Empty => Ok(false),
        }
    }

    /// Membership for an instance point (y ignored by interval pairs).
    pub fn covers_point(&self, p: &Point2) -> bool {
        match self {
            Annulus::Interval(iv) => iv.covers_x(&p.x),
            Annulus::Rect(r) => r.covers_pt(p),
            Annulus::Circ(c) => c.covers_pt(p),
            Annulus::Empty => false,
        }
    }

    /// Structural validity: boundary ordering, nesting, recorded defining
    /// points exactly on their boundaries, and no red defining point on an
    /// open boundary element.
    pub fn validate(&self, inst: &Instance) -> Result<(), AnnulusError> {
        match self {
            Annulus::Interval(iv) => {
                if !(iv.l_o <= iv.l_i && iv.l_i <= iv.r_i && iv.r_i <= iv.r_o) {
                    return Err(AnnulusError::IntervalOrder);
                }
                for (pr, end) in &iv.defining_points {
                    let p = inst.point(*pr);
                    if &p.pos.x != iv.endpoint(*end) {
                        return Err(AnnulusError::DefiningPointOffBoundary(*pr));
                    }
                    if pr.color == Color::Red && iv.endpoint_open[*end as usize] {
                        return Err(AnnulusError::RedOnOpenBoundary(*pr));
                    }
                }
                Ok(())
            }
            Annulus::Rect(r) => {
                if !(r.outer.l <= r.outer.r && r.outer.b <= r.outer.t) {
                    return Err(AnnulusError::NotNested);
                }
                if !(r.inner.l <= r.inner.r && r.inner.b <= r.inner.t) {
                    return Err(AnnulusError::NotNested);
                }
                if !r.outer.contains_rect(&r.inner) {
                    return Err(AnnulusError::NotNested);
                }
                for (pr, side) in &r.defining_points {
                    let p = inst.point(*pr);
                    if !r.on_side(*side, &p.pos) {
                        return Err(AnnulusError::DefiningPointOffBoundary(*pr));
                    }
                    if pr.color == Color::Red && r.side_open[*side as usize] {
                        return Err(AnnulusError::RedOnOpenBoundary(*pr));
                    }
                }
                Ok(())
            }
            Annulus::Circ(c) => {
                if c.r_in_sq.is_negative() || c.r_in_sq > c.r_out_sq {
                    return Err(AnnulusError::RadiiOrder);
                }
                for (pr, circ) in &c.defining_points {
                    let p = inst.point(*pr);
                    if &c.center.dist_sq(&p.pos) != c.radius_sq(*circ) {
                        return Err(AnnulusError::DefiningPointOffBoundary(*pr));
                    }
                    if pr.color == Color::Red && c.boundary_open[*circ as usize] {
                        return Err(AnnulusError::RedOnOpenBoundary(*pr));
                    }
                }
                Ok(())
            }
            Annulus::Empty => Ok(()),
        }
    }

    /// Deterministic ordering key: boundary coordinate tuple plus flag bits,
    /// with `Empty` sorting after every concrete annulus.
    pub fn canonical_key(&self) -> (u8, Vec<Scalar>, u16) {
        fn bits(flags: &[bool]) -> u16 {
            flags
                .iter()
                .enumerate()
                .map(|(i, &b)| if b { 1 << i } else { 0 })
                .sum()
        }
        match self {
            Annulus::Interval(iv) => (
                0,
                vec![iv.l_o.clone(), iv.l_i.clone(), iv.r_i.clone(), iv.r_o.clone()],
                bits(&iv.endpoint_open),
            ),
            Annulus::Rect(r) => (
                0,
                vec![
                    r.outer.l.clone(),
                    r.outer.r.clone(),
                    r.outer.b.clone(),
                    r.outer.t.clone(),
                    r.inner.l.clone(),
                    r.inner.r.clone(),
                    r.inner.b.clone(),
                    r.inner.t.clone(),
                ],
                bits(&r.side_open),
            ),
            Annulus::Circ(c) => (
                0,
                vec![
                    c.center.x.clone(),
                    c.center.y.clone(),
                    c.r_in_sq.clone(),
                    c.r_out_sq.clone(),
                ],
                bits(&c.boundary_open),
            ),
            Annulus::Empty => (1, Vec::new(), 0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn pt(x: i64, y: i64) -> Point2 {
        Point2::new(int(x), int(y))
    }

    fn rect(l: i64, r: i64, b: i64, t: i64) -> Rect {
        Rect::new(int(l), int(r), int(b), int(t))
    }

    #[test]
    fn rect_coverage_closed() {
        let a = RectAnnulus::closed(rect(0, 10, 0, 10), rect(3, 7, 3, 7));
        assert!(!a.covers_pt(&pt(5, 5)), "strictly inside the hole");
        assert!(a.covers_pt(&pt(0, 5)), "on the closed outer boundary");
        assert!(a.covers_pt(&pt(3, 5)), "on the closed inner boundary");
        assert!(a.covers_pt(&pt(1, 1)));
        assert!(!a.covers_pt(&pt(11, 5)));
    }

    #[test]
    fn open_outer_side_excludes_boundary() {
        let mut a = RectAnnulus::closed(rect(0, 10, 0, 10), rect(3, 7, 3, 7));
        a.side_open[RectSide::OuterLeft as usize] = true;
        assert!(!a.covers_pt(&pt(0, 5)));
        assert!(a.covers_pt(&pt(1, 5)));
    }

    #[test]
    fn open_inner_side_swallows_boundary() {
        let mut a = RectAnnulus::closed(rect(0, 10, 0, 10), rect(3, 7, 3, 7));
        a.side_open[RectSide::InnerLeft as usize] = true;
        assert!(!a.covers_pt(&pt(3, 5)), "open inner side joins the hole");
        assert!(a.covers_pt(&pt(3, 7)), "inner corner stays covered via the top side");
        assert!(a.covers_pt(&pt(3, 1)), "below the hole's y-range");
    }

    #[test]
    fn zero_width_hole_with_open_sides() {
        // A hole of zero width whose vertical sides are both open still
        // swallows points on the segment strictly between its y-bounds.
        let mut a = RectAnnulus::closed(rect(-1, 1, 0, 10), rect(0, 0, 4, 6));
        a.side_open[RectSide::InnerLeft as usize] = true;
        a.side_open[RectSide::InnerRight as usize] = true;
        assert!(!a.covers_pt(&pt(0, 5)));
        assert!(a.covers_pt(&pt(0, 4)));
        assert!(a.covers_pt(&pt(0, 0)));
    }

    #[test]
    fn classify_examples() {
        let u = RectAnnulus::closed(rect(0, 10, 0, 10), rect(2, 8, 2, 8));
        assert_eq!(classify_rect(&u), RectClass::Uniform);
        let nc = RectAnnulus::closed(rect(0, 10, 0, 10), rect(2, 8, 3, 7));
        assert_eq!(classify_rect(&nc), RectClass::NonuniformConcentric);
        let nnc = RectAnnulus::closed(rect(0, 10, 0, 10), rect(1, 8, 3, 7));
        assert_eq!(classify_rect(&nnc), RectClass::NonuniformNonconcentric);
    }

    #[test]
    fn interval_pair_coverage() {
        let iv = IntervalPair::closed(int(0), int(1), int(5), int(6));
        assert!(iv.covers_x(&int(0)));
        assert!(iv.covers_x(&int(1)));
        assert!(!iv.covers_x(&int(3)));
        assert!(iv.covers_x(&int(5)));
        assert!(!iv.covers_x(&int(7)));
    }

    #[test]
    fn degenerate_interval_covers_its_point() {
        let iv = IntervalPair::closed(int(0), int(0), int(10), int(10));
        assert!(iv.covers_x(&int(0)));
        assert!(iv.covers_x(&int(10)));
        assert!(!iv.covers_x(&int(5)));
    }

    #[test]
    fn circ_coverage_and_flags() {
        let mut a = CircAnnulus::closed(pt(0, 0), int(1), int(4));
        assert!(a.covers_pt(&pt(1, 0)), "on inner circle");
        assert!(a.covers_pt(&pt(2, 0)), "on outer circle");
        assert!(!a.covers_pt(&pt(0, 0)), "strictly inside hole");
        assert!(!a.covers_pt(&pt(3, 0)));
        a.boundary_open[Circle::Inner as usize] = true;
        assert!(!a.covers_pt(&pt(1, 0)), "open inner circle excludes it");
        a.boundary_open[Circle::Outer as usize] = true;
        assert!(!a.covers_pt(&pt(2, 0)));
    }

    #[test]
    fn empty_covers_nothing() {
        assert!(!Annulus::Empty.covers_point(&pt(0, 0)));
        assert_eq!(Annulus::Empty.covers(&[int(0)]), Ok(false));
    }

    #[test]
    fn covers_checks_dimension() {
        let a = Annulus::Rect(RectAnnulus::closed(rect(0, 1, 0, 1), rect(0, 1, 0, 1)));
        assert_eq!(
            a.covers(&[int(0)]),
            Err(AnnulusError::DimensionMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn canonical_order_puts_empty_last() {
        let iv = Annulus::Interval(IntervalPair::closed(int(0), int(0), int(0), int(0)));
        assert!(iv.canonical_key() < Annulus::Empty.canonical_key());
    }
}
