//! The groups `G = (C_p x C_p) ⋊ Q` with `Q ≅ Q8` inside SL_2(p), and their
//! conjugacy classes.

mod classes;
mod element;
mod quaternion;

pub use classes::{conjugacy_classes, count_square_roots_of_identity, square_map, ClassTable};
pub use element::{enumerate_group, Group, GroupElement};
pub use quaternion::{QuaternionSubgroup, Q8_CLASS_COUNT, Q8_CLASS_NAMES};
