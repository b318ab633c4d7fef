//! The three-column table `α ... β ... γ`: a half-size set, its reduction,
//! and the symbol of the reduction.

use std::fmt;

use serde::Serialize;

use crate::basis_sets::{enumerate, reduce_unchecked, saturate, Filter, IntervalSet};
use crate::error::{Error, Result};
use crate::tableaux::{
    dot, pairs_to_symbol, shift, tableau_to_pairs, DistinguishedSymbol, PairTableau,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub half: IntervalSet,
    pub reduced: IntervalSet,
    pub symbol: DistinguishedSymbol,
    #[serde(skip)]
    pairs: PairTableau,
}

impl TableRow {
    pub fn from_reduced(reduced: &IntervalSet) -> Result<Self> {
        let pairs = tableau_to_pairs(&shift(&dot(reduced)?));
        let half = saturate(reduced)?;
        if reduce_unchecked(&half) != *reduced {
            return Err(Error::InternalConsistency(format!(
                "saturation of {reduced:?} does not reduce back"
            )));
        }
        Ok(TableRow {
            half,
            reduced: reduced.clone(),
            symbol: pairs_to_symbol(&pairs),
            pairs,
        })
    }

    /// Rows with no excess come first, then by number of columns, excess,
    /// and top row.
    fn sort_key(&self) -> (bool, usize, u32, Vec<u32>) {
        let excess = self.pairs.excess();
        (
            excess > 0,
            self.pairs.len(),
            excess,
            self.pairs.top().to_vec(),
        )
    }
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ... {} ... {}",
            self.half,
            self.reduced,
            self.symbol.inline()
        )
    }
}

/// One row per reduced set, ordered as in the reference tables.
pub fn table(d: u32) -> Result<Vec<TableRow>> {
    let mut rows = enumerate(d, Filter::Reduced)?
        .iter()
        .map(TableRow::from_reduced)
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(TableRow::sort_key);
    Ok(rows)
}

/// The table as text, one newline-terminated line per row.
pub fn render(rows: &[TableRow]) -> String {
    rows.iter().map(|r| format!("{r}\n")).collect()
}
