//! Lyubeznik tables, their corner-anchored patterns, closed-form tables for
//! the graph families with known answers, and the Thom–Sebastiani rule for
//! ideals in disjoint sets of variables.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper-triangular table `λ_{p,i}`, `0 <= p <= i <= d`, of `R/J` with `R`
/// a polynomial ring in `n` variables and `d = dim R/J`. Only nonzero
/// entries are stored.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "TableRepr", try_from = "TableRepr")]
pub struct LyubeznikTable {
    n: usize,
    d: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

/// Table read from its `(d, d)` corner: `(a, b) ↦ λ_{d-a, d-b}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TablePattern(pub BTreeMap<(usize, usize), u64>);

impl LyubeznikTable {
    /// Checks `0 <= p <= i <= d <= n` and `λ_{d,d} >= 1`; zero entries are
    /// dropped.
    pub fn new(n: usize, d: usize, entries: BTreeMap<(usize, usize), u64>) -> Result<Self> {
        if d > n {
            return Err(Error::IndexRange(d as i64, n));
        }
        for &(p, i) in entries.keys() {
            if p > i || i > d {
                return Err(Error::IndexRange(i.max(p) as i64, d));
            }
        }
        let entries: BTreeMap<_, _> = entries.into_iter().filter(|e| e.1 > 0).collect();
        if !entries.contains_key(&(d, d)) {
            return Err(Error::Shape(format!("λ_{{{d},{d}}} must be nonzero")));
        }
        Ok(LyubeznikTable { n, d, entries })
    }

    pub fn from_pairs(n: usize, d: usize, pairs: &[((usize, usize), u64)]) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for &(k, v) in pairs {
            *entries.entry(k).or_insert(0) += v;
        }
        Self::new(n, d, entries)
    }

    pub fn trivial(n: usize, d: usize) -> Self {
        LyubeznikTable {
            n,
            d,
            entries: [((d, d), 1)].into_iter().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `n - d`.
    pub fn height(&self) -> usize {
        self.n - self.d
    }

    pub fn get(&self, p: usize, i: usize) -> u64 {
        self.entries.get(&(p, i)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.entries
    }

    /// `λ_{d,d}`.
    pub fn highest(&self) -> u64 {
        self.get(self.d, self.d)
    }

    pub fn is_trivial(&self) -> bool {
        self.entries.len() == 1 && self.highest() == 1
    }

    pub fn pattern(&self) -> TablePattern {
        TablePattern(
            self.entries
                .iter()
                .map(|(&(p, i), &v)| ((self.d - p, self.d - i), v))
                .collect(),
        )
    }

    /// Places a pattern in a ring with `n` variables and dimension `d`.
    pub fn from_pattern(pattern: &TablePattern, n: usize, d: usize) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (&(a, b), &v) in &pattern.0 {
            if a > d || b > d {
                return Err(Error::NegativeTableIndex);
            }
            entries.insert((d - a, d - b), v);
        }
        Self::new(n, d, entries)
    }

    /// The same ideal read in a ring with `e` more variables.
    pub fn embed(&self, e: usize) -> Self {
        LyubeznikTable {
            n: self.n + e,
            d: self.d + e,
            entries: self
                .entries
                .iter()
                .map(|(&(p, i), &v)| ((p + e, i + e), v))
                .collect(),
        }
    }

    /// Smallest column `i` holding a nonzero entry.
    pub fn smallest_nonzero_index(&self) -> usize {
        self.entries.keys().map(|&(_, i)| i).min().unwrap_or(self.d)
    }

    /// `Σ_p (-1)^p λ_{p,i}`.
    pub fn column_euler(&self, i: usize) -> i64 {
        self.entries
            .iter()
            .filter(|e| e.0 .1 == i)
            .map(|(&(p, _), &v)| if p % 2 == 0 { v as i64 } else { -(v as i64) })
            .sum()
    }

    /// Upper-triangular matrix, rows `p`, columns `i`; cells below the
    /// diagonal are left blank.
    pub fn render_text(&self) -> String {
        let width = self
            .entries
            .values()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for p in 0..=self.d {
            let cells: Vec<String> = (0..=self.d)
                .map(|i| {
                    if i < p {
                        " ".repeat(width)
                    } else {
                        format!("{:>width$}", self.get(p, i))
                    }
                })
                .collect();
            out.push_str(cells.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for LyubeznikTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LyubeznikTable(n={}, d={}, {{", self.n, self.d)?;
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(&(p, i), &v)| format!("λ{p},{i}={v}"))
            .collect();
        write!(f, "{}}})", parts.join(", "))
    }
}

impl fmt::Display for LyubeznikTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    n: usize,
    d: usize,
    entries: Vec<EntryRepr>,
}

#[derive(Serialize, Deserialize)]
struct EntryRepr {
    p: usize,
    i: usize,
    v: u64,
}

impl From<LyubeznikTable> for TableRepr {
    fn from(t: LyubeznikTable) -> Self {
        TableRepr {
            n: t.n,
            d: t.d,
            entries: t
                .entries
                .iter()
                .map(|(&(p, i), &v)| EntryRepr { p, i, v })
                .collect(),
        }
    }
}

impl TryFrom<TableRepr> for LyubeznikTable {
    type Error = Error;
    fn try_from(r: TableRepr) -> Result<Self> {
        let pairs: Vec<_> = r.entries.iter().map(|e| ((e.p, e.i), e.v)).collect();
        LyubeznikTable::from_pairs(r.n, r.d, &pairs)
    }
}

/// Index parameter `k` in `n = 3k + ℓ`, `ℓ ∈ {-1, 0, 1}`.
pub fn cycle_k(n: usize) -> usize {
    (n + 1) / 3
}

/// `Λ(R/J(C_n))`.
pub fn cycle_table(n: usize) -> Result<LyubeznikTable> {
    if n < 3 {
        return Err(Error::InvalidGraph(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let k = cycle_k(n);
    let d = n - 2;
    let mut entries = BTreeMap::new();
    for i in 0..k - 1 {
        entries.insert((d - 3 * i, d - i), 1);
        entries.insert((d - 3 * i - 1, d - i), 1);
    }
    let i = k - 1;
    entries.insert((d - 3 * i, d - i), 1);
    LyubeznikTable::new(n, d, entries)
}

/// `Λ(R/J(C_n^c))` for `n >= 5`.
pub fn complement_cycle_table(n: usize) -> Result<LyubeznikTable> {
    if n < 5 {
        return Err(Error::InvalidGraph(format!(
            "complement of a cycle needs at least 5 vertices, got {n}"
        )));
    }
    let d = n - 2;
    LyubeznikTable::from_pairs(n, d, &[((0, d - 1), 1), ((2, d), 1), ((d, d), 1)])
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, j| acc * (n - j) / (j + 1))
}

/// Table of `c` height-two ideals with trivial tables in disjoint sets of
/// variables, each quotient of dimension `d`: `λ_{d-2k,d-k} = C(c, k+1)`.
pub fn disjoint_trivial_table(c: usize, d: usize) -> Result<LyubeznikTable> {
    if c == 0 {
        return Err(Error::Shape("need at least one component".into()));
    }
    if 2 * (c - 1) > d {
        return Err(Error::NegativeTableIndex);
    }
    let mut entries = BTreeMap::new();
    for k in 0..c {
        entries.insert((d - 2 * k, d - k), binomial(c as u64, k as u64 + 1));
    }
    LyubeznikTable::new(d + 2, d, entries)
}

/// `Λ(R/J(C_m ⊛ C_n))` on `total` vertices.
pub fn two_cycles_table(m: usize, n: usize, total: usize) -> Result<LyubeznikTable> {
    let (m, n) = (m.min(n), m.max(n));
    if m < 3 {
        return Err(Error::InvalidGraph("cycles need at least 3 vertices".into()));
    }
    if total + 2 < m + n {
        return Err(Error::VertexCount(total));
    }
    let (k1, k2) = (cycle_k(m) as i64, cycle_k(n) as i64);
    let d = total as i64 - 2;
    let mut entries = BTreeMap::new();
    let mut put = |p: i64, i: i64, v: i64| -> Result<()> {
        if v == 0 {
            return Ok(());
        }
        if p < 0 || i < 0 {
            return Err(Error::NegativeTableIndex);
        }
        entries.insert((p as usize, i as usize), v as u64);
        Ok(())
    };
    for i in 0..=k1 - 2 {
        put(d - 3 * i, d - i, i + 1)?;
        put(d - 3 * i - 1, d - i, i + 2)?;
    }
    for i in k1 - 1..=k2 - 2 {
        put(d - 3 * i, d - i, k1)?;
        put(d - 3 * i - 1, d - i, k1)?;
    }
    for i in k2 - 1..=k1 + k2 - 2 {
        put(d - 3 * i, d - i, k1 + k2 - i - 1)?;
        put(d - 3 * i - 1, d - i, k1 + k2 - i - 2)?;
    }
    LyubeznikTable::new(total, total - 2, entries)
}

/// Table of `R/(IT ∩ JT)` for ideals `I`, `J` in disjoint sets of
/// variables, from their tables in their own variables.
pub fn thom_sebastiani(a: &LyubeznikTable, b: &LyubeznikTable) -> LyubeznikTable {
    let n = a.n + b.n;
    let (ha, hb) = (a.height(), b.height());
    if ha == 1 || hb == 1 {
        let d = (a.d + b.n).max(b.d + a.n);
        return LyubeznikTable::trivial(n, d);
    }
    let d = n - ha.min(hb);
    let mut entries: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for (&(p, i), &v) in &a.entries {
        *entries.entry((p + b.n, i + b.n)).or_insert(0) += v;
    }
    for (&(p, i), &v) in &b.entries {
        *entries.entry((p + a.n, i + a.n)).or_insert(0) += v;
    }
    for (&(q, j), &va) in &a.entries {
        for (&(r, k), &vb) in &b.entries {
            *entries.entry((q + r, j + k + 1)).or_insert(0) += va * vb;
        }
    }
    LyubeznikTable::new(n, d, entries).expect("Thom–Sebastiani preserves the table shape")
}

/// [`thom_sebastiani`] with the variable sets checked for disjointness.
pub fn thom_sebastiani_on(
    a: &LyubeznikTable,
    vars_a: u64,
    b: &LyubeznikTable,
    vars_b: u64,
) -> Result<LyubeznikTable> {
    if vars_a & vars_b != 0 {
        return Err(Error::OverlappingVariables);
    }
    if vars_a.count_ones() as usize != a.n || vars_b.count_ones() as usize != b.n {
        return Err(Error::AmbientMismatch(a.n, vars_a.count_ones() as usize));
    }
    Ok(thom_sebastiani(a, b))
}

/// Smallest nonzero column for `c` components in disjoint variables whose
/// own smallest columns are `is`.
pub fn disjoint_top(is: &[usize]) -> usize {
    is.iter().sum::<usize>() + is.len().saturating_sub(1)
}
