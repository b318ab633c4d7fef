//! Interval basis sets, their reductions and saturations, the bijections to
//! shifted tableaux and two-row symbols, the `F_2` realisation with its
//! adjacency form, and tabulated exceptional family data.

pub mod basis_sets;
pub mod error;
pub mod exceptional;
pub mod intervals;
pub mod suites;
pub mod symplectic;
pub mod table;
pub mod tableaux;

pub use basis_sets::{Filter, IntervalSet, Verdict};
pub use error::{Error, Result};
pub use intervals::{Interval, Relation};
pub use symplectic::{F2Subspace, F2Vector, UnorderedSymbol};
pub use tableaux::{DistinguishedSymbol, DottedSet, PairTableau, ShiftedTableau};

/// Largest supported `D`: vectors of `V_D` are packed into a `u64`, and
/// symbols on `[0, D+1]` must fit as well.
pub const MAX_D: u32 = 60;
