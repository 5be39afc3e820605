//! Covering criteria and Galois invariants for plane trees and unicellular
//! dessins d'enfants.
//!
//! Trees and dessins are combinatorial maps on darts `0..2n`. Labelling
//! the darts along the single face turns the edge reversal into a
//! fixed-point-free involution `phi`; covering a `d`-edged dessin, being a
//! chain or a star, and the invariants `d_c`/`d_s` are all arithmetic
//! conditions on `phi` mod `2d`. The same questions are also answered from
//! branch weights and from brute-force block-system oracles, and the
//! [`oracle`] module cross-checks every route on all small trees.

pub mod cli;
pub mod cover;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod invariants;
pub mod involution;
pub mod map;
pub mod oracle;
pub mod perm;
pub mod tree;

pub use cover::{CoverFailure, CoverReport};
pub use error::{Error, Result};
pub use format::{parse, Format, Parsed};
pub use invariants::CurveData;
pub use involution::{from_involution, to_involution, DartInvolution};
pub use map::CombinatorialMap;
pub use tree::{BranchPair, PlaneTree};
