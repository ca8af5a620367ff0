//! Symmetric-group machinery for type A.

pub mod bridge;
pub mod characters;
pub mod partition;
pub mod ring;
pub mod typea;

pub use characters::{decompose, mn_character, mn_character_table, reconstruct, CharacterTable};
pub use partition::{cycle_type, partitions, Partition};
pub use ring::{induction_product, CycleTypeFunction, GradedSeries};
pub use typea::*;
