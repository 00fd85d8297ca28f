//! Irreducible characters of `V ⋊ Q` by Clifford theory, exact inner
//! products, Frobenius-Schur indicators and tensor squares.

mod class_function;
mod indicator;
mod label;
mod q8;
mod table;
mod tensor;
mod verify;

pub use class_function::{
    induce_by_averaging, induce_from_v, inflate_from_q, inner_product, ClassFunction,
};
pub use indicator::{fs_indicator, fs_indicator_direct};
pub use label::{label_action, label_orbit, label_orbits, stabilizer_in_q, CharLabel, RawLabel};
pub use q8::{q8_character_table, Q8Character, PSI, Q8_CLASS_SIZES};
pub use table::{
    character_table, character_table_for, induced_row_name, CharacterRow, CharacterTable, RowOrigin,
};
pub use tensor::{tensor_square_decompose, Multiplicity};
pub use verify::{
    default_label, verify_prime, verify_with_table, Checks, Claims, IndicatorBreakdown,
    QuaternionGenerators, Report, SquareLocus, SumRule, Timings,
};
