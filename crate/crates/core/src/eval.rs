//! The penalty functional and the solution record shared by every solver
//! and oracle.
//!
//! In penalized mode the objective is the sum of penalties of uncovered red
//! points and covered blue points. In constraint mode every red must be
//! covered and the objective is the number of covered blues; an annulus
//! missing a red is infeasible.

use crate::annulus::{Annulus, AnnulusError};
use crate::instance::{Dim, Instance};
use crate::scalar::{int, Scalar};
use num_traits::Zero;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    Constraint,
    Penalized,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape1D {
    Nonuniform,
    Uniform,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RectShape {
    Nnc,
    Nc,
    Uniform,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RestrictedShape {
    Uniform,
    Nc,
    Nnc,
}

/// Which problem a solution answers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Geometry {
    OneD(Shape1D),
    Rect(RectShape),
    Restricted(RestrictedShape),
    Circular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VariantTag {
    pub geometry: Geometry,
    pub mode: Mode,
}

/// Outcome of evaluating one annulus against one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PenaltyOutcome {
    /// Penalized-mode objective.
    Penalty(Scalar),
    /// Constraint-mode objective: number of covered blues.
    BlueCount(usize),
    /// Constraint mode with at least one uncovered red.
    Infeasible,
}

impl PenaltyOutcome {
    /// Numeric view for cross-mode comparisons; `None` for infeasible.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self {
            PenaltyOutcome::Penalty(l) => Some(l.clone()),
            PenaltyOutcome::BlueCount(c) => Some(int(*c as i64)),
            PenaltyOutcome::Infeasible => None,
        }
    }
}

fn check_dim(inst: &Instance, ann: &Annulus) -> Result<(), AnnulusError> {
    let inst_dim = match inst.dim {
        Dim::One => 1,
        Dim::Two => 2,
    };
    match ann.dimension() {
        Some(d) if d != inst_dim => {
            Err(AnnulusError::DimensionMismatch { expected: inst_dim, got: d })
        }
        _ => Ok(()),
    }
}

/// Evaluates `ann` on `inst` under `mode`.
pub fn penalty_of(
    inst: &Instance,
    ann: &Annulus,
    mode: Mode,
) -> Result<PenaltyOutcome, AnnulusError> {
    check_dim(inst, ann)?;
    match mode {
        Mode::Penalized => {
            let mut lambda = Scalar::zero();
            for q in &inst.reds {
                if !ann.covers_point(&q.pos) {
                    lambda += &q.penalty;
                }
            }
            for p in &inst.blues {
                if ann.covers_point(&p.pos) {
                    lambda += &p.penalty;
                }
            }
            Ok(PenaltyOutcome::Penalty(lambda))
        }
        Mode::Constraint => {
            if inst.reds.iter().any(|q| !ann.covers_point(&q.pos)) {
                return Ok(PenaltyOutcome::Infeasible);
            }
            let count = inst.blues.iter().filter(|p| ann.covers_point(&p.pos)).count();
            Ok(PenaltyOutcome::BlueCount(count))
        }
    }
}

/// A solved variant: objective value, witness annulus, and the index sets
/// it induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub objective: PenaltyOutcome,
    pub annulus: Annulus,
    pub covered_blue_ids: Vec<usize>,
    pub uncovered_red_ids: Vec<usize>,
    pub variant: VariantTag,
}

impl Solution {
    /// Builds a solution from a witness annulus, recomputing the index sets
    /// and objective from coverage.
    pub fn from_annulus(
        inst: &Instance,
        annulus: Annulus,
        variant: VariantTag,
    ) -> Result<Solution, AnnulusError> {
        check_dim(inst, &annulus)?;
        let covered_blue_ids: Vec<usize> = inst
            .blues
            .iter()
            .enumerate()
            .filter(|(_, p)| annulus.covers_point(&p.pos))
            .map(|(i, _)| i)
            .collect();
        let uncovered_red_ids: Vec<usize> = inst
            .reds
            .iter()
            .enumerate()
            .filter(|(_, q)| !annulus.covers_point(&q.pos))
            .map(|(i, _)| i)
            .collect();
        let objective = match variant.mode {
            Mode::Penalized => {
                let mut lambda = Scalar::zero();
                for &i in &uncovered_red_ids {
                    lambda += &inst.reds[i].penalty;
                }
                for &i in &covered_blue_ids {
                    lambda += &inst.blues[i].penalty;
                }
                PenaltyOutcome::Penalty(lambda)
            }
            Mode::Constraint => {
                if uncovered_red_ids.is_empty() {
                    PenaltyOutcome::BlueCount(covered_blue_ids.len())
                } else {
                    PenaltyOutcome::Infeasible
                }
            }
        };
        Ok(Solution { objective, annulus, covered_blue_ids, uncovered_red_ids, variant })
    }

    /// Re-derives the objective and index sets from the witness and checks
    /// that they agree with the stored ones.
    pub fn check_consistent(&self, inst: &Instance) -> Result<(), String> {
        self.annulus
            .validate(inst)
            .map_err(|e| format!("invalid annulus: {e}"))?;
        let fresh = Solution::from_annulus(inst, self.annulus.clone(), self.variant)
            .map_err(|e| format!("evaluation failed: {e}"))?;
        if fresh.covered_blue_ids != self.covered_blue_ids {
            return Err("covered blue ids disagree with coverage".into());
        }
        if fresh.uncovered_red_ids != self.uncovered_red_ids {
            return Err("uncovered red ids disagree with coverage".into());
        }
        if fresh.objective != self.objective {
            return Err("objective disagrees with recount".into());
        }
        if self.variant.mode == Mode::Constraint && !self.uncovered_red_ids.is_empty() {
            return Err("constraint-mode solution leaves a red uncovered".into());
        }
        Ok(())
    }

    /// Objective as a scalar (blue counts as integers); None if infeasible.
    pub fn lambda(&self) -> Option<Scalar> {
        self.objective.as_scalar()
    }
}

/// Penalties laid out for mask evaluation: red bits `0..n`, blue bits
/// `n..n+m`. Only meaningful for instances small enough to index a `u64`.
pub struct PenaltyTable {
    penalties: Vec<Scalar>,
    n_reds: usize,
}

impl PenaltyTable {
    pub fn new(inst: &Instance) -> PenaltyTable {
        let total = inst.n_reds() + inst.n_blues();
        assert!(total <= 64, "mask evaluation supports at most 64 points");
        let penalties = inst.all_points().map(|(_, p)| p.penalty.clone()).collect();
        PenaltyTable { penalties, n_reds: inst.n_reds() }
    }

    pub fn len(&self) -> usize {
        self.penalties.len()
    }

    pub fn is_empty(&self) -> bool {
        self.penalties.is_empty()
    }

    pub fn red_mask(&self) -> u64 {
        if self.n_reds == 0 {
            0
        } else {
            (1u64 << self.n_reds) - 1
        }
    }

    /// Penalized objective of a coverage mask.
    pub fn lambda_of_mask(&self, covered: u64) -> Scalar {
        let mut lambda = Scalar::zero();
        for (i, pen) in self.penalties.iter().enumerate() {
            let is_red = i < self.n_reds;
            let bit = covered >> i & 1 == 1;
            if is_red != bit {
                // uncovered red or covered blue
                lambda += pen;
            }
        }
        lambda
    }

    /// Covered-blue count of a coverage mask; `None` if a red is uncovered.
    pub fn constraint_of_mask(&self, covered: u64) -> Option<usize> {
        if covered & self.red_mask() != self.red_mask() {
            return None;
        }
        Some((covered >> self.n_reds).count_ones() as usize)
    }
}

/// Coverage mask of an annulus over the instance's points, reds first.
pub fn coverage_mask(inst: &Instance, ann: &Annulus) -> u64 {
    let mut mask = 0u64;
    for (i, (_, p)) in inst.all_points().enumerate() {
        if ann.covers_point(&p.pos) {
            mask |= 1 << i;
        }
    }
    mask
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::annulus::RectAnnulus;
    use crate::geom::{Point2, Rect};
    use crate::instance::WeightedPoint;
    use crate::scalar::frac;

    fn wp(x: i64, y: i64, pen: i64) -> WeightedPoint {
        WeightedPoint::new(Point2::new(int(x), int(y)), int(pen))
    }

    fn two_reds_one_blue() -> Instance {
        Instance::new(
            "t",
            Dim::Two,
            vec![wp(0, 0, 1), wp(10, 10, 1)],
            vec![wp(5, 5, 3)],
        )
        .unwrap()
    }

    fn rect(l: i64, r: i64, b: i64, t: i64) -> Rect {
        Rect::new(int(l), int(r), int(b), int(t))
    }

    #[test]
    fn blue_in_hole_costs_nothing() {
        let inst = two_reds_one_blue();
        let ann = Annulus::Rect(RectAnnulus::closed(rect(0, 10, 0, 10), rect(4, 6, 4, 6)));
        assert_eq!(
            penalty_of(&inst, &ann, Mode::Penalized).unwrap(),
            PenaltyOutcome::Penalty(int(0))
        );
    }

    #[test]
    fn covered_blue_pays_its_penalty() {
        let inst = two_reds_one_blue();
        let inner = Rect::new(frac(9, 2), frac(11, 2), int(6), int(7));
        let ann = Annulus::Rect(RectAnnulus::closed(rect(0, 10, 0, 10), inner));
        assert_eq!(
            penalty_of(&inst, &ann, Mode::Penalized).unwrap(),
            PenaltyOutcome::Penalty(int(3))
        );
    }

    #[test]
    fn constraint_mode_detects_missed_red() {
        let inst = two_reds_one_blue();
        let ann = Annulus::Rect(RectAnnulus::closed(rect(0, 9, 0, 9), rect(4, 6, 4, 6)));
        assert_eq!(
            penalty_of(&inst, &ann, Mode::Constraint).unwrap(),
            PenaltyOutcome::Infeasible
        );
    }

    #[test]
    fn empty_annulus_pays_all_reds() {
        let inst = two_reds_one_blue();
        assert_eq!(
            penalty_of(&inst, &Annulus::Empty, Mode::Penalized).unwrap(),
            PenaltyOutcome::Penalty(int(2))
        );
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let inst = two_reds_one_blue();
        let ann = Annulus::Interval(crate::annulus::IntervalPair::closed(
            int(0),
            int(1),
            int(2),
            int(3),
        ));
        assert!(penalty_of(&inst, &ann, Mode::Penalized).is_err());
    }

    #[test]
    fn mask_lambda_matches_direct_evaluation() {
        let inst = two_reds_one_blue();
        let table = PenaltyTable::new(&inst);
        let ann = Annulus::Rect(RectAnnulus::closed(rect(0, 10, 0, 10), rect(4, 6, 4, 6)));
        let mask = coverage_mask(&inst, &ann);
        assert_eq!(
            PenaltyOutcome::Penalty(table.lambda_of_mask(mask)),
            penalty_of(&inst, &ann, Mode::Penalized).unwrap()
        );
        assert_eq!(table.constraint_of_mask(mask), Some(0));
    }
}
