//! Independent brute-force oracles and test-fixture generators: the
//! exponential cycle-enumeration program, vertex enumeration for small
//! linear programs, DFA-based hardness gadgets and seeded random instances.
//! Everything here exists to cross-check the main decision path, not to
//! scale.

mod cycle_enum;
mod gadgets;
mod lp_brute;
mod random;

pub use cycle_enum::cycle_enum_max_value;
pub use gadgets::{
    dfa_intersection_nonempty, dfa_union_universal, gadget_f, gadget_g, parse_dfa, Dfa,
};
pub use lp_brute::{brute_force_max, BruteOutcome};
pub use random::{random_instance, InstanceBounds, KindPolicy};
