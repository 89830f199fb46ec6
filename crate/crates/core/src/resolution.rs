//! Multigraded free resolutions of squarefree monomial ideals: the Taylor
//! complex, its minimalization by cancelling unit entries, Betti numbers,
//! linear strands, and the Lyubeznik table read off the strands of the
//! Alexander dual.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exactla::{ScalarMatrix, VSChainComplex};
use crate::field::Field;
use crate::graphs::bit_indices;
use crate::ideals::{alexander_dual, SqfreeIdeal};
use crate::lytable::LyubeznikTable;
use crate::simplicial::SimplicialComplex;

/// Largest generator count the Taylor complex is built for.
pub const TAYLOR_BUDGET: usize = 20;

/// Map between free modules with squarefree basis degrees. Column `c` is
/// the image of the `c`-th source basis element; an entry in row `r` stands
/// for the scalar times the monomial `x^(col_degree - row_degree)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMatrix<F> {
    row_degrees: Vec<u64>,
    col_degrees: Vec<u64>,
    columns: Vec<Vec<(usize, F)>>,
}

impl<F: Field> MonomialMatrix<F> {
    /// Checks that every nonzero entry sits where the row degree divides
    /// the column degree.
    pub fn new(
        row_degrees: Vec<u64>,
        col_degrees: Vec<u64>,
        columns: Vec<Vec<(usize, F)>>,
    ) -> Result<Self> {
        if columns.len() != col_degrees.len() {
            return Err(Error::Shape("one column per source basis element".into()));
        }
        for (c, col) in columns.iter().enumerate() {
            for &(r, v) in col {
                if r >= row_degrees.len() {
                    return Err(Error::Shape(format!("row {r} out of range")));
                }
                if !v.is_zero() && row_degrees[r] & !col_degrees[c] != 0 {
                    return Err(Error::Shape(format!(
                        "entry ({r},{c}) is not homogeneous"
                    )));
                }
            }
        }
        Ok(MonomialMatrix {
            row_degrees,
            col_degrees,
            columns,
        })
    }

    pub fn row_degrees(&self) -> &[u64] {
        &self.row_degrees
    }

    pub fn col_degrees(&self) -> &[u64] {
        &self.col_degrees
    }

    pub fn column(&self, c: usize) -> &[(usize, F)] {
        &self.columns[c]
    }

    pub fn get(&self, r: usize, c: usize) -> F {
        self.columns[c]
            .iter()
            .find(|e| e.0 == r)
            .map_or(F::zero(), |e| e.1)
    }

    /// Entries whose monomial part is 1.
    pub fn unit_entries(&self) -> usize {
        self.columns
            .iter()
            .enumerate()
            .map(|(c, col)| {
                col.iter()
                    .filter(|&&(r, v)| !v.is_zero() && self.row_degrees[r] == self.col_degrees[c])
                    .count()
            })
            .sum()
    }

    /// Mask differences `col_degree \ row_degree` of the nonzero entries.
    pub fn entry_differences(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                if !v.is_zero() {
                    out.push(self.col_degrees[c] & !self.row_degrees[r]);
                }
            }
        }
        out
    }
}

/// A graded free resolution `0 <- L_0 <- L_1 <- ...` of an ideal, with
/// `levels[j]` the basis degrees of `L_j` and `differentials[j - 1]` the map
/// `L_j -> L_{j-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedResolution<F> {
    n: usize,
    levels: Vec<Vec<u64>>,
    differentials: Vec<MonomialMatrix<F>>,
}

impl<F: Field> GradedResolution<F> {
    pub fn new(n: usize, levels: Vec<Vec<u64>>, differentials: Vec<MonomialMatrix<F>>) -> Result<Self> {
        if differentials.len() + 1 != levels.len().max(1) {
            return Err(Error::Shape("one differential between consecutive levels".into()));
        }
        for (j, d) in differentials.iter().enumerate() {
            if d.row_degrees != levels[j] || d.col_degrees != levels[j + 1] {
                return Err(Error::Shape(format!("differential {} has wrong degrees", j + 1)));
            }
        }
        let r = GradedResolution {
            n,
            levels,
            differentials,
        };
        r.check_complex()?;
        Ok(r)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn levels(&self) -> &[Vec<u64>] {
        &self.levels
    }

    /// `d_j : L_j -> L_{j-1}` for `j >= 1`.
    pub fn differential(&self, j: usize) -> Option<&MonomialMatrix<F>> {
        if j == 0 {
            None
        } else {
            self.differentials.get(j - 1)
        }
    }

    /// Largest level with a nonzero module.
    pub fn length(&self) -> Option<usize> {
        self.levels.iter().rposition(|l| !l.is_empty())
    }

    /// `d_{j} ∘ d_{j+1} = 0` for every `j`.
    pub fn check_complex(&self) -> Result<()> {
        for j in 1..self.differentials.len() {
            let (lo, hi) = (&self.differentials[j - 1], &self.differentials[j]);
            for col in &hi.columns {
                let mut acc: BTreeMap<usize, F> = BTreeMap::new();
                for &(mid, v) in col {
                    for &(r, w) in &lo.columns[mid] {
                        *acc.entry(r).or_insert(F::zero()) += v * w;
                    }
                }
                if acc.values().any(|v| !v.is_zero()) {
                    return Err(Error::NotAComplex(j));
                }
            }
        }
        Ok(())
    }

    /// No differential has an entry of degree zero.
    pub fn is_minimal(&self) -> bool {
        self.differentials.iter().all(|d| d.unit_entries() == 0)
    }

    /// Multigraded Betti numbers `β_{j,α}`, nonzero ones only.
    pub fn betti(&self) -> BTreeMap<(usize, u64), usize> {
        let mut out = BTreeMap::new();
        for (j, level) in self.levels.iter().enumerate() {
            for &a in level {
                *out.entry((j, a)).or_insert(0) += 1;
            }
        }
        out
    }

    /// `β_{j,ℓ}` summed over degrees of total degree `ℓ`.
    pub fn graded_betti(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for (j, level) in self.levels.iter().enumerate() {
            for &a in level {
                *out.entry((j, a.count_ones() as usize)).or_insert(0) += 1;
            }
        }
        out
    }

    /// Aligned text: one row per level `j`, one column per total degree.
    pub fn betti_table_text(&self) -> String {
        let graded = self.graded_betti();
        let max_deg = graded.keys().map(|k| k.1).max().unwrap_or(0);
        let width = graded
            .values()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            .max(max_deg.to_string().len());
        let mut out = String::new();
        let _ = write!(out, "{:>4}", "");
        for l in 0..=max_deg {
            let _ = write!(out, " {:>width$}", l);
        }
        out.push('\n');
        for j in 0..self.levels.len() {
            let _ = write!(out, "{:>3}:", j);
            for l in 0..=max_deg {
                match graded.get(&(j, l)) {
                    Some(v) => {
                        let _ = write!(out, " {:>width$}", v);
                    }
                    None => {
                        let _ = write!(out, " {:>width$}", ".");
                    }
                }
            }
            out.push('\n');
        }
        out
    }
}

fn check_gens(n: usize, gens: &[u64]) -> Result<()> {
    if gens.len() > TAYLOR_BUDGET {
        return Err(Error::TaylorBudget(gens.len(), TAYLOR_BUDGET));
    }
    if gens.is_empty() {
        return Err(Error::Shape("no generators".into()));
    }
    let full = crate::graphs::full_bits(n);
    for &g in gens {
        if g & !full != 0 {
            return Err(Error::MaskOutOfRange { mask: g, n });
        }
    }
    Ok(())
}

fn taylor_sign<F: Field>(s: u32, bit: u32) -> F {
    // position of generator `bit` among the members of `s`
    let pos = (s & ((1u32 << bit) - 1)).count_ones();
    if pos.is_multiple_of(2) {
        F::one()
    } else {
        -F::one()
    }
}

/// The Taylor resolution of the ideal generated by `gens`: level `j` has a
/// basis element for every `(j+1)`-subset of generators, of degree their
/// lcm.
pub fn taylor<F: Field>(n: usize, gens: &[u64]) -> Result<GradedResolution<F>> {
    check_gens(n, gens)?;
    let m = gens.len();
    let mut by_level: Vec<Vec<u32>> = vec![Vec::new(); m];
    for s in 1u32..1 << m {
        by_level[s.count_ones() as usize - 1].push(s);
    }
    let lcm = |s: u32| bit_indices(s as u64).fold(0u64, |acc, i| acc | gens[i]);
    let levels: Vec<Vec<u64>> = by_level
        .iter()
        .map(|l| l.iter().map(|&s| lcm(s)).collect())
        .collect();
    let mut differentials = Vec::new();
    for j in 1..m {
        let index: BTreeMap<u32, usize> = by_level[j - 1]
            .iter()
            .enumerate()
            .map(|(i, &s)| (s, i))
            .collect();
        let columns = by_level[j]
            .iter()
            .map(|&s| {
                let mut col: Vec<(usize, F)> = bit_indices(s as u64)
                    .map(|b| (index[&(s & !(1 << b))], taylor_sign::<F>(s, b as u32)))
                    .collect();
                col.sort_unstable_by_key(|e| e.0);
                col
            })
            .collect();
        differentials.push(MonomialMatrix::new(
            levels[j - 1].clone(),
            levels[j].clone(),
            columns,
        )?);
    }
    GradedResolution::new(n, levels, differentials)
}

/// Sparse complex under reduction. Element ids are dense `u32`s; `rows[x]`
/// is the boundary of `x` as sorted `(target, scalar)` pairs and `preds[y]`
/// lists (possibly stale) elements whose boundary mentions `y`.
struct Workspace<F> {
    n: usize,
    deg: Vec<u64>,
    level: Vec<u8>,
    rows: Vec<Vec<(u32, F)>>,
    preds: Vec<Vec<u32>>,
    alive: Vec<bool>,
}

impl<F: Field> Workspace<F> {
    fn from_taylor(n: usize, gens: &[u64]) -> Self {
        let m = gens.len();
        let size = 1usize << m;
        let mut deg = vec![0u64; size];
        let mut level = vec![0u8; size];
        let mut rows: Vec<Vec<(u32, F)>> = Vec::with_capacity(size);
        let mut pred_len = vec![0u32; size];
        rows.push(Vec::new());
        for s in 1..size {
            let low = s.trailing_zeros() as usize;
            deg[s] = deg[s & (s - 1)] | gens[low];
            level[s] = (s.count_ones() - 1) as u8;
            if s.count_ones() == 1 {
                rows.push(Vec::new());
                continue;
            }
            let s32 = s as u32;
            let row: Vec<(u32, F)> = bit_indices(s as u64)
                .map(|b| (s32 & !(1 << b), taylor_sign::<F>(s32, b as u32)))
                .collect::<Vec<_>>();
            let mut row = row;
            row.sort_unstable_by_key(|e| e.0);
            for &(t, _) in &row {
                pred_len[t as usize] += 1;
            }
            rows.push(row);
        }
        let mut preds: Vec<Vec<u32>> = pred_len
            .iter()
            .map(|&l| Vec::with_capacity(l as usize))
            .collect();
        for (s, row) in rows.iter().enumerate() {
            for &(t, _) in row {
                preds[t as usize].push(s as u32);
            }
        }
        let mut alive = vec![true; size];
        alive[0] = false;
        Workspace {
            n,
            deg,
            level,
            rows,
            preds,
            alive,
        }
    }

    fn from_resolution(r: &GradedResolution<F>) -> Self {
        let mut offset = Vec::new();
        let mut deg = Vec::new();
        let mut level = Vec::new();
        for (j, l) in r.levels.iter().enumerate() {
            offset.push(deg.len());
            deg.extend_from_slice(l);
            level.extend(std::iter::repeat_n(j as u8, l.len()));
        }
        let total = deg.len();
        let mut rows: Vec<Vec<(u32, F)>> = vec![Vec::new(); total];
        let mut preds: Vec<Vec<u32>> = vec![Vec::new(); total];
        for (j, d) in r.differentials.iter().enumerate() {
            for (c, col) in d.columns.iter().enumerate() {
                let x = offset[j + 1] + c;
                let mut row: Vec<(u32, F)> = col
                    .iter()
                    .filter(|e| !e.1.is_zero())
                    .map(|&(t, v)| ((offset[j] + t) as u32, v))
                    .collect();
                row.sort_unstable_by_key(|e| e.0);
                for &(t, _) in &row {
                    preds[t as usize].push(x as u32);
                }
                rows[x] = row;
            }
        }
        Workspace {
            n: r.n,
            deg,
            level,
            rows,
            preds,
            alive: vec![true; total],
        }
    }

    /// Cancels every unit entry, visiting sources in `order`. The order
    /// must list lower degrees (under containment) first.
    fn reduce(&mut self, order: &[u32]) {
        for &a in order {
            let a = a as usize;
            if !self.alive[a] {
                continue;
            }
            let da = self.deg[a];
            // pivot: alive target of the same degree, fewest predecessors first
            let pivot = self.rows[a]
                .iter()
                .filter(|&&(y, v)| {
                    self.alive[y as usize] && self.deg[y as usize] == da && !v.is_zero()
                })
                .min_by_key(|&&(y, _)| (self.preds[y as usize].len(), y))
                .copied();
            if let Some((b, u)) = pivot {
                self.cancel(a, b as usize, u);
            }
        }
    }

    fn cancel(&mut self, a: usize, b: usize, u: F) {
        let uinv = u.inv().expect("unit pivot");
        let row_a: Vec<(u32, F)> = std::mem::take(&mut self.rows[a])
            .into_iter()
            .filter(|&(y, _)| y as usize != b && self.alive[y as usize])
            .collect();
        self.alive[a] = false;
        self.alive[b] = false;
        let preds_b = std::mem::take(&mut self.preds[b]);
        for &x in &preds_b {
            let x = x as usize;
            if !self.alive[x] {
                continue;
            }
            let row_x = &self.rows[x];
            let Ok(pos) = row_x.binary_search_by_key(&(b as u32), |e| e.0) else {
                continue;
            };
            let factor = -(row_x[pos].1 * uinv);
            let mut merged = Vec::with_capacity(row_x.len() + row_a.len());
            let (mut i, mut j) = (0, 0);
            while i < row_x.len() || j < row_a.len() {
                if j == row_a.len() || (i < row_x.len() && row_x[i].0 < row_a[j].0) {
                    let e = row_x[i];
                    if e.0 as usize != b && self.alive[e.0 as usize] {
                        merged.push(e);
                    }
                    i += 1;
                } else if i == row_x.len() || row_a[j].0 < row_x[i].0 {
                    let (y, v) = row_a[j];
                    merged.push((y, factor * v));
                    self.preds[y as usize].push(x as u32);
                    j += 1;
                } else {
                    let v = row_x[i].1 + factor * row_a[j].1;
                    if !v.is_zero() {
                        merged.push((row_x[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            self.rows[x] = merged;
        }
    }

    fn into_resolution(self) -> GradedResolution<F> {
        let top = self.level.iter().copied().max().map_or(0, |l| l as usize + 1);
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); top];
        for x in 0..self.deg.len() {
            if self.alive[x] {
                members[self.level[x] as usize].push(x);
            }
        }
        while members.len() > 1 && members.last().is_some_and(|l| l.is_empty()) {
            members.pop();
        }
        let mut index = vec![usize::MAX; self.deg.len()];
        for l in &members {
            for (i, &x) in l.iter().enumerate() {
                index[x] = i;
            }
        }
        let levels: Vec<Vec<u64>> = members
            .iter()
            .map(|l| l.iter().map(|&x| self.deg[x]).collect())
            .collect();
        let mut differentials = Vec::new();
        for j in 1..members.len() {
            let columns = members[j]
                .iter()
                .map(|&x| {
                    self.rows[x]
                        .iter()
                        .filter(|&&(y, v)| self.alive[y as usize] && !v.is_zero())
                        .map(|&(y, v)| (index[y as usize], v))
                        .collect()
                })
                .collect();
            differentials.push(MonomialMatrix {
                row_degrees: levels[j - 1].clone(),
                col_degrees: levels[j].clone(),
                columns,
            });
        }
        GradedResolution {
            n: self.n,
            levels,
            differentials,
        }
    }

    /// Sources sorted by degree as an integer, then level, then id. Integer
    /// order on masks extends containment.
    fn canonical_order(&self) -> Vec<u32> {
        let mut order: Vec<u32> = (0..self.deg.len() as u32)
            .filter(|&x| self.alive[x as usize])
            .collect();
        order.sort_unstable_by_key(|&x| (self.deg[x as usize], self.level[x as usize], x));
        order
    }
}

/// Minimal resolution obtained from `r` by cancelling unit entries in the
/// canonical order.
pub fn minimalize<F: Field>(r: &GradedResolution<F>) -> GradedResolution<F> {
    let mut ws = Workspace::from_resolution(r);
    let order = ws.canonical_order();
    ws.reduce(&order);
    ws.into_resolution()
}

/// As [`minimalize`], visiting sources by increasing
/// `(|degree|, degree_rank(degree), tiebreak(level, index))`. Any such order
/// gives a minimal resolution.
pub fn minimalize_ordered<F: Field>(
    r: &GradedResolution<F>,
    degree_rank: impl Fn(u64) -> u64,
    tiebreak: impl Fn(usize, usize) -> u64,
) -> GradedResolution<F> {
    let mut ws = Workspace::from_resolution(r);
    let mut offsets = Vec::new();
    let mut acc = 0;
    for l in &r.levels {
        offsets.push(acc);
        acc += l.len();
    }
    let mut order: Vec<u32> = (0..ws.deg.len() as u32).collect();
    order.sort_by_cached_key(|&x| {
        let x = x as usize;
        let lv = ws.level[x] as usize;
        let d = ws.deg[x];
        (d.count_ones(), degree_rank(d), tiebreak(lv, x - offsets[lv]))
    });
    ws.reduce(&order);
    ws.into_resolution()
}

/// Minimal free resolution of the ideal generated by `gens`, reduced from
/// the Taylor complex without materializing it as matrices.
pub fn minimal_resolution<F: Field>(n: usize, gens: &[u64]) -> Result<GradedResolution<F>> {
    check_gens(n, gens)?;
    let mut ws = Workspace::from_taylor(n, gens);
    let order = ws.canonical_order();
    ws.reduce(&order);
    Ok(ws.into_resolution())
}

/// `β_{j,α}` as `dim H̃_{j-1}` of the upper Koszul complex
/// `{F ⊆ supp α : x^(α - F) ∈ I}`.
pub fn upper_koszul_betti<F: Field>(gens: &[u64], j: usize, alpha: u64) -> usize {
    upper_koszul_complex(gens, alpha).reduced_homology_at::<F>(j as i64 - 1)
}

/// Upper Koszul complex of the ideal generated by `gens` at degree `alpha`.
pub fn upper_koszul_complex(gens: &[u64], alpha: u64) -> SimplicialComplex {
    let inside: Vec<u64> = gens.iter().copied().filter(|&g| g & !alpha == 0).collect();
    let mut faces = Vec::new();
    // subsets of alpha
    let mut f = alpha;
    loop {
        let rest = alpha & !f;
        if inside.iter().any(|&g| g & !rest == 0) {
            faces.push(f);
        }
        if f == 0 {
            break;
        }
        f = (f - 1) & alpha;
    }
    if faces.is_empty() {
        SimplicialComplex::void()
    } else {
        SimplicialComplex::from_mask_faces(faces)
    }
}

/// Every nonzero `β_{j,α}` by the upper Koszul route, over all squarefree
/// `α` in `n` variables that are lcms of generators.
pub fn upper_koszul_betti_all<F: Field>(n: usize, gens: &[u64]) -> BTreeMap<(usize, u64), usize> {
    let mut out = BTreeMap::new();
    for alpha in 1..=crate::graphs::full_bits(n) {
        // β vanishes off the lcm lattice
        let lcm = gens
            .iter()
            .filter(|&&g| g & !alpha == 0)
            .fold(0u64, |a, &g| a | g);
        if lcm != alpha {
            continue;
        }
        let h = upper_koszul_complex(gens, alpha).reduced_homology::<F>();
        for (k, &dim) in h.iter().enumerate() {
            // H̃_{k-1} gives β_{k}
            if dim > 0 {
                out.insert((k, alpha), dim);
            }
        }
    }
    out
}

/// The `r`-linear strand: level `j` keeps basis elements of total degree
/// `j + r`, with the scalar parts of `d` between them.
#[derive(Clone, Debug)]
pub struct LinearStrand<F> {
    pub r: usize,
    /// Basis indices into the resolution's levels.
    pub levels: Vec<Vec<usize>>,
    /// `matrices[j - 1]`: level `j` to level `j - 1`, rows by columns.
    pub matrices: Vec<ScalarMatrix<F>>,
}

pub fn linear_strand<F: Field>(res: &GradedResolution<F>, r: usize) -> LinearStrand<F> {
    let levels: Vec<Vec<usize>> = res
        .levels
        .iter()
        .enumerate()
        .map(|(j, l)| {
            (0..l.len())
                .filter(|&k| l[k].count_ones() as usize == j + r)
                .collect()
        })
        .collect();
    let mut matrices = Vec::new();
    for j in 1..levels.len() {
        let d = &res.differentials[j - 1];
        let row_pos: BTreeMap<usize, usize> = levels[j - 1]
            .iter()
            .enumerate()
            .map(|(i, &k)| (k, i))
            .collect();
        let mut m = ScalarMatrix::zeros(levels[j - 1].len(), levels[j].len());
        for (c, &k) in levels[j].iter().enumerate() {
            for &(row, v) in &d.columns[k] {
                if let Some(&rpos) = row_pos.get(&row) {
                    m.set(rpos, c, v);
                }
            }
        }
        matrices.push(m);
    }
    LinearStrand { r, levels, matrices }
}

impl<F: Field> LinearStrand<F> {
    /// `Σ_j (-1)^j` (rank of level `j`).
    pub fn euler_characteristic(&self) -> i64 {
        self.levels
            .iter()
            .enumerate()
            .map(|(j, l)| if j % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) })
            .sum()
    }

    /// The dual strand arranged so that position `p` holds level
    /// `n - r - p`; its homology is `λ_{p, n-r}`.
    pub fn dual_complex(&self, n: usize) -> Result<VSChainComplex<F>> {
        if self.r > n {
            return Err(Error::IndexRange(self.r as i64, n));
        }
        let top = n - self.r;
        let level_dim = |j: usize| self.levels.get(j).map_or(0, Vec::len);
        let dims: Vec<usize> = (0..=top).map(|p| level_dim(top - p)).collect();
        let mut diffs = Vec::new();
        for p in 1..=top {
            // position p is level j = top - p; the map goes to level j + 1
            let j = top - p;
            let m = match self.matrices.get(j) {
                Some(d) => d.transpose(),
                None => ScalarMatrix::zeros(level_dim(j + 1), level_dim(j)),
            };
            diffs.push(m);
        }
        VSChainComplex::new(dims, diffs)
    }
}

/// `λ_{p, n-r}` for `p = 0..=n-r`, from the `r`-linear strand of a minimal
/// resolution of the Alexander dual.
pub fn strand_homology<F: Field>(res: &GradedResolution<F>, r: usize, n: usize) -> Result<Vec<usize>> {
    if r > n {
        return Err(Error::IndexRange(r as i64, n));
    }
    let strand = linear_strand(res, r);
    Ok(strand.dual_complex(n)?.homology_dims())
}

/// `pd(R/I) = 1 + length` of the minimal resolution of `I`.
pub fn projective_dimension<F: Field>(i: &SqfreeIdeal) -> Result<usize> {
    if i.is_unit() {
        return Ok(0);
    }
    let res = minimal_resolution::<F>(i.n(), i.gens())?;
    Ok(res.length().map_or(0, |l| l + 1))
}

/// The Lyubeznik table of `R/J` computed from the linear strands of the
/// minimal resolution of `J^∨`.
pub fn oracle_table<F: Field>(j: &SqfreeIdeal) -> Result<LyubeznikTable> {
    let h = j.height().ok_or(Error::Edgeless)?;
    let n = j.n();
    let dual = alexander_dual(j);
    let res = minimal_resolution::<F>(n, dual.gens())?;
    oracle_table_from_resolution(&res, n, h)
}

/// As [`oracle_table`], reusing a minimal resolution of `J^∨` for an ideal
/// `J` of height `h`.
pub fn oracle_table_from_resolution<F: Field>(
    res: &GradedResolution<F>,
    n: usize,
    h: usize,
) -> Result<LyubeznikTable> {
    let d = n - h;
    let mut entries = BTreeMap::new();
    for r in h..=n {
        let i = n - r;
        for (p, &v) in strand_homology(res, r, n)?.iter().enumerate() {
            if v > 0 {
                entries.insert((p, i), v as u64);
            }
        }
    }
    LyubeznikTable::new(n, d, entries)
}
