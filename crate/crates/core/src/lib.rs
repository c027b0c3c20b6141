//! Scaled Arndt compositions.
//!
//! A composition `(c_1, …, c_m)` is a *scaled Arndt composition* for coprime
//! `s, t` when `s·c_{2i-1} > t·c_{2i}` holds for every pair; an unpaired final
//! part is unconstrained. This crate
//!
//! * enumerates them (and the affine variant `s·c_{2i-1} > t·c_{2i} + k`),
//! * maps them bijectively onto compositions with parts in the residue
//!   classes `r + ⌈(r·t+1)/s⌉ (mod s+t)`, `0 ≤ r < s`,
//! * counts them exactly by brute force, by linear recurrence, and by
//!   power-series expansion of the generating function.
//!
//! ```
//! use scaled_arndt::{normalize, sequence_range, Method};
//!
//! let cons = normalize(2, 3, 0).unwrap();
//! let counts = sequence_range(&cons, 1, 7, Method::Recurrence).unwrap();
//! let counts: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
//! assert_eq!(counts, ["1", "1", "2", "3", "4", "7", "11"]);
//! ```

pub mod bijection;
pub mod composition;
pub mod constraint;
pub mod count;
pub mod enumerate;
pub mod error;
pub mod residue;
pub mod sequence;

pub use bijection::{backward, forward, map_pair, unmap_block, ArndtPair, OnesBlock};
pub use composition::Composition;
pub use constraint::{normalize, satisfies, ScaledConstraint};
pub use count::BigCount;
pub use enumerate::{
    all_compositions, arndt_compositions, congruence_compositions, count_brute, CompositionStream,
    Filter, BRUTE_FORCE_MAX_N,
};
pub use error::{Error, Result};
pub use residue::{decompose_part, residue_class_contains, residue_system, ResidueSystem};
pub use sequence::{
    build_gf, count_recurrence, count_recurrence_uncached, expand, export_bfile, sequence_range,
    Method, RationalGF, RecurrenceCache, SeriesExpansion,
};
