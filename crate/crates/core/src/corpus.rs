//! Bundled algebras used as golden inputs.

use crate::algebra::AlgebraSpec;
use crate::io::parse_spec;

/// Real dimension 8, non-HKT.
pub const EXAMPLE1: &str = include_str!("../corpus/example1.json");
/// The algebra of [`EXAMPLE1`] with a one-parameter family of structures, `t ∈ (0, 1)`.
pub const EXAMPLE2: &str = include_str!("../corpus/example2.json");
/// Real dimension 12, neither pure nor full.
pub const EXAMPLE3: &str = include_str!("../corpus/example3.json");
/// Abelian algebra of real dimension 8 with the standard structure.
pub const ABELIAN: &str = include_str!("../corpus/abelian.json");

/// `(file name, contents)` for every bundled document.
pub const ALL: [(&str, &str); 4] =
    [("example1.json", EXAMPLE1), ("example2.json", EXAMPLE2), ("example3.json", EXAMPLE3), ("abelian.json", ABELIAN)];

pub fn example1() -> AlgebraSpec {
    parse_spec(EXAMPLE1).expect("bundled document parses")
}

pub fn example2() -> AlgebraSpec {
    parse_spec(EXAMPLE2).expect("bundled document parses")
}

pub fn example3() -> AlgebraSpec {
    parse_spec(EXAMPLE3).expect("bundled document parses")
}

pub fn abelian() -> AlgebraSpec {
    parse_spec(ABELIAN).expect("bundled document parses")
}
