//! Classification of all connected graphs on `n` vertices by the
//! corner-anchored pattern of their Lyubeznik table.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graphs::{enumerate_connected, Graph, MAX_ENUMERATION_N};
use crate::lytable::{complement_cycle_table, cycle_table, LyubeznikTable};
use crate::splitter::{split_table, SplitPolicy};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableType {
    Trivial,
    /// Same pattern as `C_m`, smallest such `m`.
    Cycle(usize),
    /// Same pattern as the complement of `C_m`, smallest such `m`.
    ComplementCycle(usize),
    Other,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub trivial: usize,
    pub cycle: usize,
    pub complement_cycle: usize,
    pub other: usize,
    pub total: usize,
}

/// Type of a table among graphs on at most `n` vertices. Cycle patterns
/// are tried before complement-cycle ones (`C_5` is its own complement).
pub fn classify(t: &LyubeznikTable, n: usize) -> Result<TableType> {
    if t.is_trivial() {
        return Ok(TableType::Trivial);
    }
    let pattern = t.pattern();
    for m in 3..=n {
        if cycle_table(m)?.pattern() == pattern {
            return Ok(TableType::Cycle(m));
        }
    }
    for m in 5..=n {
        if complement_cycle_table(m)?.pattern() == pattern {
            return Ok(TableType::ComplementCycle(m));
        }
    }
    Ok(TableType::Other)
}

pub fn classify_graph<F: Field>(g: &Graph) -> Result<TableType> {
    let t = split_table::<F>(g, SplitPolicy::default())?.table;
    classify(&t, g.n())
}

/// Counts connected graphs on `n` vertices by table type.
pub fn census<F: Field>(n: usize) -> Result<CensusRow> {
    if !(1..=MAX_ENUMERATION_N).contains(&n) {
        return Err(Error::VertexCount(n));
    }
    let graphs = enumerate_connected(n)?;
    let types: Vec<TableType> = graphs
        .par_iter()
        .filter(|g| g.edge_count() > 0)
        .map(classify_graph::<F>)
        .collect::<Result<_>>()?;
    let mut row = CensusRow { n, ..CensusRow::default() };
    for t in types {
        match t {
            TableType::Trivial => row.trivial += 1,
            TableType::Cycle(_) => row.cycle += 1,
            TableType::ComplementCycle(_) => row.complement_cycle += 1,
            TableType::Other => row.other += 1,
        }
        row.total += 1;
    }
    Ok(row)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    #[test]
    fn classifications() {
        let c7 = cycle_table(7).unwrap();
        // the pattern depends only on (m + 1) / 3; the smallest cycle is reported
        assert_eq!(classify(&c7, 7).unwrap(), TableType::Cycle(5));
        assert_eq!(classify(&c7.embed(2), 9).unwrap(), TableType::Cycle(5));
        let c9 = cycle_table(9).unwrap();
        assert_eq!(classify(&c9, 9).unwrap(), TableType::Cycle(8));
        assert_eq!(classify(&complement_cycle_table(6).unwrap(), 6).unwrap(), TableType::ComplementCycle(6));
        assert_eq!(classify(&cycle_table(5).unwrap(), 5).unwrap(), TableType::Cycle(5));
        assert_eq!(classify(&LyubeznikTable::trivial(4, 2), 4).unwrap(), TableType::Trivial);
    }

    #[test]
    fn small_census() {
        let row = census::<Fp<2>>(4).unwrap();
        assert_eq!((row.trivial, row.cycle, row.complement_cycle, row.other, row.total), (6, 0, 0, 0, 6));
        assert!(census::<Fp<2>>(9).is_err());
    }
}
