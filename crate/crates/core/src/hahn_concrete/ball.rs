use std::cmp::Ordering;

use super::chain::Point;
use super::hahn::{HahnElement, Val};
use crate::error::Result;

/// `{g : v(center - g) ≥ radius}`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UltraBall {
    pub center: HahnElement,
    pub radius: Val<Point>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BallRelation {
    Disjoint,
    Equal,
    /// The first ball lies strictly inside the second.
    Inside,
    /// The second ball lies strictly inside the first.
    Contains,
}

impl UltraBall {
    /// `B(a, b)`. For `a = b` this is the singleton `{a}`.
    pub fn new(a: &HahnElement, b: &HahnElement) -> Result<Self> {
        Ok(Self { center: a.clone(), radius: a.sub(b)?.nat_valuation() })
    }

    pub fn contains(&self, x: &HahnElement) -> Result<bool> {
        Ok(self.center.sub(x)?.nat_valuation() >= self.radius)
    }

    pub fn relation(&self, other: &Self) -> Result<BallRelation> {
        let meet = self.contains(&other.center)? || other.contains(&self.center)?;
        if !meet {
            return Ok(BallRelation::Disjoint);
        }
        // Larger radius value means a smaller ball.
        Ok(match self.radius.cmp(&other.radius) {
            Ordering::Equal => BallRelation::Equal,
            Ordering::Greater => BallRelation::Inside,
            Ordering::Less => BallRelation::Contains,
        })
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        Ok(matches!(self.relation(other)?, BallRelation::Equal | BallRelation::Inside))
    }
}
