//! Tree automorphisms given by wreath recursion.

mod action;
mod inflate;
mod machine;
mod ops;

pub use action::{Automorphism, TreeAction};
pub use inflate::{inflate, Inflated};
pub use machine::{Recursion, SelfSimilarMachine};
pub use ops::{
    apply, apply_level, equal_to_depth, equal_to_depth_across, find_moving_string,
    format_string, machine_orbit_type, orbit_type, parse_string, portrait, states,
    trivial_to_depth, OrbitType, Portrait, StateSet,
};
