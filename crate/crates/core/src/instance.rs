//! Problem instances: two penalized point families on a line or in the
//! plane.
//!
//! Red points want to be covered, blue points want to be left out; a
//! solver's objective charges the penalty of every uncovered red and every
//! covered blue. Instances are validated on construction and immutable
//! afterwards.

use crate::geom::Point2;
use crate::scalar::{to_display, Scalar};
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl std::fmt::Display for Color {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Color::Red => write!(f, "red"),
            Color::Blue => write!(f, "blue"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dim {
    One,
    Two,
}

/// Reference to one input point: its color and its index within that
/// color's list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PtRef {
    pub color: Color,
    pub idx: usize,
}

impl PtRef {
    pub fn red(idx: usize) -> Self {
        PtRef { color: Color::Red, idx }
    }

    pub fn blue(idx: usize) -> Self {
        PtRef { color: Color::Blue, idx }
    }
}

/// One input point with its penalty. One-dimensional instances store `y = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedPoint {
    pub pos: Point2,
    pub penalty: Scalar,
}

impl WeightedPoint {
    pub fn new(pos: Point2, penalty: Scalar) -> Self {
        WeightedPoint { pos, penalty }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InstanceError {
    #[error("{color} point {idx} has non-positive penalty {penalty}")]
    NonPositivePenalty { color: Color, idx: usize, penalty: String },
    #[error("{color} points {first} and {second} share coordinates")]
    DuplicatePoint { color: Color, first: usize, second: usize },
    #[error("{color} point {idx} has nonzero y in a 1-dimensional instance")]
    NonZeroYIn1D { color: Color, idx: usize },
}

/// A validated bichromatic instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub id: String,
    pub dim: Dim,
    pub reds: Vec<WeightedPoint>,
    pub blues: Vec<WeightedPoint>,
}

impl Instance {
    /// Validates and builds an instance. Same-color points must have
    /// distinct coordinates and all penalties must be strictly positive; a
    /// red and a blue point may coincide.
    pub fn new(
        id: impl Into<String>,
        dim: Dim,
        reds: Vec<WeightedPoint>,
        blues: Vec<WeightedPoint>,
    ) -> Result<Self, InstanceError> {
        for (color, pts) in [(Color::Red, &reds), (Color::Blue, &blues)] {
            for (idx, p) in pts.iter().enumerate() {
                if !p.penalty.is_positive() {
                    return Err(InstanceError::NonPositivePenalty {
                        color,
                        idx,
                        penalty: to_display(&p.penalty),
                    });
                }
                if dim == Dim::One && !p.pos.y.is_zero() {
                    return Err(InstanceError::NonZeroYIn1D { color, idx });
                }
            }
            let mut seen: Vec<(&Point2, usize)> = pts.iter().map(|p| &p.pos).zip(0..).collect();
            seen.sort();
            for w in seen.windows(2) {
                if w[0].0 == w[1].0 {
                    let (a, b) = (w[0].1.min(w[1].1), w[0].1.max(w[1].1));
                    return Err(InstanceError::DuplicatePoint { color, first: a, second: b });
                }
            }
        }
        Ok(Instance { id: id.into(), dim, reds, blues })
    }

    pub fn n_reds(&self) -> usize {
        self.reds.len()
    }

    pub fn n_blues(&self) -> usize {
        self.blues.len()
    }

    pub fn point(&self, r: PtRef) -> &WeightedPoint {
        match r.color {
            Color::Red => &self.reds[r.idx],
            Color::Blue => &self.blues[r.idx],
        }
    }

    /// All points, reds first. The iteration order fixes the bit layout of
    /// coverage masks used by evaluators.
    pub fn all_points(&self) -> impl Iterator<Item = (PtRef, &WeightedPoint)> {
        self.reds
            .iter()
            .enumerate()
            .map(|(i, p)| (PtRef::red(i), p))
            .chain(self.blues.iter().enumerate().map(|(i, p)| (PtRef::blue(i), p)))
    }

    pub fn total_red_penalty(&self) -> Scalar {
        self.reds.iter().map(|p| p.penalty.clone()).sum()
    }

    pub fn total_blue_penalty(&self) -> Scalar {
        self.blues.iter().map(|p| p.penalty.clone()).sum()
    }

    /// Instance translated by `(dx, dy)`; used by invariance checks.
    pub fn translated(&self, dx: &Scalar, dy: &Scalar) -> Instance {
        let shift = |pts: &[WeightedPoint]| {
            pts.iter()
                .map(|p| {
                    WeightedPoint::new(
                        Point2::new(&p.pos.x + dx, &p.pos.y + dy),
                        p.penalty.clone(),
                    )
                })
                .collect()
        };
        Instance {
            id: self.id.clone(),
            dim: self.dim,
            reds: shift(&self.reds),
            blues: shift(&self.blues),
        }
    }

    /// Instance with every penalty multiplied by `c > 0`.
    pub fn penalties_scaled(&self, c: &Scalar) -> Instance {
        debug_assert!(c.is_positive());
        let scale = |pts: &[WeightedPoint]| {
            pts.iter()
                .map(|p| WeightedPoint::new(p.pos.clone(), &p.penalty * c))
                .collect()
        };
        Instance {
            id: self.id.clone(),
            dim: self.dim,
            reds: scale(&self.reds),
            blues: scale(&self.blues),
        }
    }
}
