use super::schedule::CardinalSchedule;
use super::{LexSchedule, OrderTerm};
use crate::cardinals::Card;
use crate::error::{Error, Result};

/// Result of embedding an order into the schedule construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub term: OrderTerm,
    pub mu: Card,
    pub k0: Card,
    pub l0: Card,
    pub k1: Card,
    pub l1: Card,
    /// How the input order sits inside the result.
    pub embedding: &'static str,
}

/// [`extend_order_with`] using `κ₀ = λ₀ = ℵ₁`.
pub fn extend_order(base: &OrderTerm) -> Result<Extension> {
    extend_order_with(base, &Card::aleph(1), &Card::aleph(1))
}

/// Builds the schedule construction over `base` with the standard choice of
/// cardinals: `μ` the least successor cardinal above `κ₀`, `λ₀` and the
/// cardinality bound of `base`, then `κ_1 = μ`, `λ_1 = μ⁺`, double
/// successors, and `μ`, `μ⁺` again at limits.
pub fn extend_order_with(base: &OrderTerm, k0: &Card, l0: &Card) -> Result<Extension> {
    k0.require_reg_infinite()?;
    l0.require_reg_infinite()?;
    let card = base.card_bound().ok_or_else(|| Error::MissingBound(base.to_string()))?;
    let top = k0.clone().max(l0.clone()).max(card);
    let mu = top.succ()?;
    let schedule = CardinalSchedule::recipe(&mu)?;
    let (k1, l1) = (schedule.kappa.first.clone(), schedule.lambda.first.clone());
    let term = OrderTerm::lex_schedule(LexSchedule {
        mu: mu.clone(),
        base: base.clone(),
        k0: k0.clone(),
        l0: l0.clone(),
        schedule,
        card: None,
    })?;
    Ok(Extension {
        term,
        mu,
        k0: k0.clone(),
        l0: l0.clone(),
        k1,
        l1,
        embedding: "a -> any sequence with a at position 0",
    })
}
