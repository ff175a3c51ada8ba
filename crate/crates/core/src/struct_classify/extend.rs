use super::descriptor::{Components, FieldDescriptor, GroupDescriptor};
use crate::error::Result;
use crate::order_terms::extend_order;

/// Embeds `g` in the Hahn product with real components over the schedule
/// extension of its value set.
pub fn extend_group(g: &GroupDescriptor) -> Result<GroupDescriptor> {
    let j = extend_order(&g.vset)?;
    GroupDescriptor::new(j.term, Components::Reals, true, false, true)
}

/// Real closure, then `ℝ((H))` with `H` the extension of the divisible hull
/// of the value group.
pub fn extend_field(k: &FieldDescriptor) -> Result<FieldDescriptor> {
    let hull = GroupDescriptor { divisible: true, discrete: false, ..k.value_group.clone() };
    let h = extend_group(&hull)?;
    FieldDescriptor::power_series(h)
}
