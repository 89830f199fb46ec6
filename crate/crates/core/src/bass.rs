//! Bass numbers of `H^r_{J(G)}(R)` at face ideals, injective-resolution
//! summaries, cohomological and projective dimension.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graphs::{full_bits, mask_string, Graph};
use crate::ideals::{cover_ideal, edge_ideal};
use crate::lytable::{cycle_k, LyubeznikTable};
use crate::resolution::{minimal_resolution, oracle_table, upper_koszul_betti_all, TAYLOR_BUDGET};
use crate::splitter::{split_table, SplitPolicy, StuckPolicy};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BassMethod {
    Oracle,
    Split,
    ClosedForm,
    Auto,
}

/// `μ_p(p_α, H^r_{J(G)}(R)) = mu`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BassEntry {
    pub r: usize,
    pub p: usize,
    pub alpha: u64,
    pub mu: u64,
}

impl BassEntry {
    /// Index of the linear strand holding this entry.
    pub fn strand(&self) -> usize {
        self.alpha.count_ones() as usize - self.p
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BassReport {
    pub n: usize,
    pub characteristic: u64,
    /// Nonzero entries sorted by `(r, p, α)`.
    pub entries: Vec<BassEntry>,
}

impl BassReport {
    pub fn degrees(&self) -> BTreeSet<usize> {
        self.entries.iter().map(|e| e.r).collect()
    }

    pub fn module(&self, r: usize) -> impl Iterator<Item = &BassEntry> {
        self.entries.iter().filter(move |e| e.r == r)
    }

    pub fn get(&self, r: usize, p: usize, alpha: u64) -> u64 {
        self.module(r)
            .find(|e| e.p == p && e.alpha == alpha)
            .map_or(0, |e| e.mu)
    }

    pub fn strands(&self, r: usize) -> BTreeSet<usize> {
        self.module(r).map(|e| e.strand()).collect()
    }

    /// `0 → H^r → I_0 → I_1 → … → 0`, one line per module. Terms with all
    /// supported faces of one size at multiplicity one collapse to
    /// `⊕|α|=s E_α`.
    pub fn render_text(&self, g: &Graph) -> String {
        let n = self.n;
        let mut supported: BTreeMap<usize, BTreeSet<u64>> = BTreeMap::new();
        for alpha in 1..=full_bits(n) {
            if g.induced_subgraph(alpha).is_ok_and(|s| s.edge_count() > 0) {
                supported.entry(alpha.count_ones() as usize).or_default().insert(alpha);
            }
        }
        let name = |alpha: u64, mu: u64| {
            let a = if alpha == full_bits(n) { "1".to_string() } else { mask_string(alpha, n) };
            if mu == 1 { format!("E_{a}") } else { format!("E_{a}^{mu}") }
        };
        let mut out = String::new();
        for r in self.degrees() {
            let mut by_p: BTreeMap<usize, BTreeMap<usize, Vec<&BassEntry>>> = BTreeMap::new();
            for e in self.module(r) {
                by_p.entry(e.p)
                    .or_default()
                    .entry(e.alpha.count_ones() as usize)
                    .or_default()
                    .push(e);
            }
            let mut line = format!("0 → H^{r}");
            for p in 0..=*by_p.keys().max().unwrap_or(&0) {
                let mut terms = Vec::new();
                for (s, es) in by_p.get(&p).into_iter().flatten() {
                    let faces: BTreeSet<u64> = es.iter().map(|e| e.alpha).collect();
                    let full = supported.get(s).is_some_and(|all| *all == faces);
                    if full && faces.len() > 1 {
                        let special: Vec<&&BassEntry> = es.iter().filter(|e| e.mu > 1).collect();
                        terms.extend(special.iter().map(|e| name(e.alpha, e.mu)));
                        let rest = if special.is_empty() { "" } else { " rest" };
                        terms.push(format!("⊕|α|={s}{rest} E_α"));
                    } else {
                        terms.extend(es.iter().map(|e| name(e.alpha, e.mu)));
                    }
                }
                let term = if terms.is_empty() { "0".to_string() } else { terms.join(" ⊕ ") };
                line.push_str(&format!(" → {term}"));
            }
            line.push_str(" → 0");
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

/// Caches tables of induced subgraphs keyed by face mask and method.
pub struct BassEngine<'g, F> {
    g: &'g Graph,
    method: BassMethod,
    tables: HashMap<(u64, BassMethod), LyubeznikTable>,
    assumptions: Option<bool>,
    _field: std::marker::PhantomData<F>,
}

impl<'g, F: Field> BassEngine<'g, F> {
    pub fn new(g: &'g Graph, method: BassMethod) -> Self {
        BassEngine {
            g,
            method,
            tables: HashMap::new(),
            assumptions: None,
            _field: std::marker::PhantomData,
        }
    }

    /// Intrinsic table of `G_α` on `|α|` variables.
    pub fn face_table(&mut self, alpha: u64, method: BassMethod) -> Result<LyubeznikTable> {
        if let Some(t) = self.tables.get(&(alpha, method)) {
            return Ok(t.clone());
        }
        let sub = face_graph(self.g, alpha)?;
        let t = match method {
            BassMethod::Oracle => {
                let iso = sub.edge_components().isolated;
                let core = sub.vertex_mask() & !sub.edge_components().isolated_mask();
                oracle_table::<F>(&cover_ideal(&sub.induced_subgraph(core)?)?)?.embed(iso)
            }
            BassMethod::Split => split_table::<F>(
                &sub,
                SplitPolicy {
                    on_stuck: StuckPolicy::Fail,
                    verify_with_oracle: false,
                    ..SplitPolicy::default()
                },
            )?
            .table,
            BassMethod::Auto | BassMethod::ClosedForm => {
                split_table::<F>(&sub, SplitPolicy::default())?.table
            }
        };
        self.tables.insert((alpha, method), t.clone());
        Ok(t)
    }

    /// Whether every component of every induced subgraph has a certified
    /// trivial table.
    pub fn assumptions_hold(&mut self) -> Result<bool> {
        if let Some(a) = self.assumptions {
            return Ok(a);
        }
        let mut comps = BTreeSet::new();
        for alpha in 1..=self.g.vertex_mask() {
            comps.extend(self.g.components_within(alpha).edge_components());
        }
        let mut ok = true;
        for c in comps {
            let r = split_table::<F>(&self.g.induced_subgraph(c)?, SplitPolicy::default())?;
            if !(r.certified && r.table.is_trivial()) {
                ok = false;
                break;
            }
        }
        self.assumptions = Some(ok);
        Ok(ok)
    }

    pub fn bass_numbers(&mut self, alpha: u64) -> Result<Vec<BassEntry>> {
        match self.method {
            BassMethod::ClosedForm => self.closed_form(alpha),
            m => {
                let t = self.face_table(alpha, m)?;
                let w = alpha.count_ones() as usize;
                let mut out: Vec<BassEntry> = t
                    .entries()
                    .iter()
                    .map(|(&(p, i), &mu)| BassEntry { r: w - i, p, alpha, mu })
                    .collect();
                out.sort();
                Ok(out)
            }
        }
    }

    fn closed_form(&mut self, alpha: u64) -> Result<Vec<BassEntry>> {
        let sub = face_graph(self.g, alpha)?;
        if !self.assumptions_hold()? {
            return Err(Error::NotApplicable(
                "some induced component has a nontrivial table".into(),
            ));
        }
        let c = sub.edge_components().c;
        let w = alpha.count_ones() as usize;
        let mut out: Vec<BassEntry> = (1..=c)
            .map(|k| BassEntry {
                r: k + 1,
                p: w - 2 * k,
                alpha,
                mu: binomial(c, k),
            })
            .collect();
        out.sort();
        Ok(out)
    }

    /// Every nonzero Bass number over all supported faces.
    pub fn report(&mut self) -> Result<BassReport> {
        let mut entries = Vec::new();
        for alpha in 1..=self.g.vertex_mask() {
            if face_graph(self.g, alpha).is_ok() {
                entries.extend(self.bass_numbers(alpha)?);
            }
        }
        entries.sort();
        Ok(BassReport {
            n: self.g.n(),
            characteristic: F::characteristic(),
            entries,
        })
    }
}

fn face_graph(g: &Graph, alpha: u64) -> Result<Graph> {
    if alpha == 0 || alpha & !g.vertex_mask() != 0 {
        return Err(Error::MaskOutOfRange { mask: alpha, n: g.n() });
    }
    let sub = g.induced_subgraph(alpha)?;
    if sub.edge_count() == 0 {
        return Err(Error::EdgelessFace(mask_string(alpha, g.n())));
    }
    Ok(sub)
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// `μ_p(p_α, H^r)` for every nonzero value at one face.
pub fn bass_numbers<F: Field>(g: &Graph, alpha: u64, method: BassMethod) -> Result<Vec<BassEntry>> {
    BassEngine::<F>::new(g, method).bass_numbers(alpha)
}

/// `μ_{|α|-2k}(p_α, H^{k+1}) = C(c_α, k)` when every induced component is
/// trivial.
pub fn bass_closed_form<F: Field>(g: &Graph, alpha: u64) -> Result<Vec<BassEntry>> {
    BassEngine::<F>::new(g, BassMethod::ClosedForm).bass_numbers(alpha)
}

/// `μ_q(P, H^r)` at a prime `P` whose largest face ideal is `p_α` with
/// `ht(P / p_α) = s`: the face value at position `q - s`.
pub fn bass_at_general_prime<F: Field>(
    g: &Graph,
    alpha: u64,
    s: usize,
    r: usize,
    q: usize,
    method: BassMethod,
) -> Result<u64> {
    if q < s {
        return Ok(0);
    }
    let at_face = bass_numbers::<F>(g, alpha, method)?;
    Ok(at_face
        .iter()
        .find(|e| e.r == r && e.p == q - s)
        .map_or(0, |e| e.mu))
}

/// The report restricted to `H^r`.
pub fn injective_resolution_summary<F: Field>(
    g: &Graph,
    r: usize,
    method: BassMethod,
) -> Result<BassReport> {
    if r < 2 {
        return Err(Error::IndexRange(r as i64, g.n()));
    }
    let mut report = BassEngine::<F>::new(g, method).report()?;
    report.entries.retain(|e| e.r == r);
    Ok(report)
}

/// Graded Betti numbers `β_{i,α}(I(G))`, from the minimal resolution when
/// the Taylor complex fits the budget and by upper Koszul complexes
/// otherwise.
pub fn edge_ideal_betti<F: Field>(g: &Graph) -> Result<BTreeMap<(usize, u64), usize>> {
    let i = edge_ideal(g)?;
    if i.gens().len() <= TAYLOR_BUDGET {
        Ok(minimal_resolution::<F>(g.n(), i.gens())?.betti())
    } else {
        Ok(upper_koszul_betti_all::<F>(g.n(), i.gens()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CdMethod {
    Exact,
    ClosedForm,
}

/// `cd(J(G), R)`. Exact: the largest `r` with `β_{|α|-r,α}(I(G)) ≠ 0`.
pub fn cohomological_dimension<F: Field>(g: &Graph, method: CdMethod) -> Result<usize> {
    match method {
        CdMethod::Exact => Ok(edge_ideal_betti::<F>(g)?
            .keys()
            .map(|&(i, alpha)| alpha.count_ones() as usize - i)
            .max()
            .unwrap_or(0)),
        CdMethod::ClosedForm => {
            let c = g.c_max()?;
            if g.is_cycle() {
                return Ok(if g.n() % 3 == 2 { c + 2 } else { c + 1 });
            }
            if BassEngine::<F>::new(g, BassMethod::Auto).assumptions_hold()? {
                Ok(c + 1)
            } else {
                Err(Error::NotApplicable("the closed form needs trivial induced components".into()))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdPdSummary {
    pub cd: usize,
    pub pd: usize,
    pub c_max: usize,
    /// Whether every induced component has a trivial table.
    pub assumptions_hold: bool,
    /// Number of faces `α` by component count `c_α`.
    pub profile: BTreeMap<usize, usize>,
    /// Disagreements with `c_max + 1`.
    pub flags: Vec<String>,
}

impl CdPdSummary {
    pub fn closed_form(&self) -> usize {
        self.c_max + 1
    }
}

/// Exact `cd(J(G))` and `pd(R/I(G))` next to `c_max + 1`.
pub fn projective_dimension_summary<F: Field>(g: &Graph) -> Result<CdPdSummary> {
    let betti = edge_ideal_betti::<F>(g)?;
    let pd = 1 + betti.keys().map(|&(i, _)| i).max().unwrap_or(0);
    let cd = betti
        .keys()
        .map(|&(i, alpha)| alpha.count_ones() as usize - i)
        .max()
        .unwrap_or(0);
    let c_max = g.c_max()?;
    let assumptions_hold = BassEngine::<F>::new(g, BassMethod::Auto).assumptions_hold()?;
    let mut profile = BTreeMap::new();
    for alpha in 1..=g.vertex_mask() {
        let c = g.components_within(alpha).c;
        if c > 0 {
            *profile.entry(c).or_insert(0) += 1;
        }
    }
    let mut flags = Vec::new();
    if pd != c_max + 1 {
        flags.push(format!("pd(R/I) = {pd} differs from c_max + 1 = {}", c_max + 1));
    }
    if assumptions_hold && cd != c_max + 1 {
        flags.push(format!("cd = {cd} differs from c_max + 1 = {}", c_max + 1));
    }
    Ok(CdPdSummary { cd, pd, c_max, assumptions_hold, profile, flags })
}

/// Components of a face: cycle-type components by vertex count and the
/// number of trivial ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedComponents {
    pub cycles: Vec<usize>,
    pub trivial: usize,
    pub alpha_size: usize,
}

/// Smallest `i` with `λ_{p,i} ≠ 0` for a face whose components are cycle
/// types `C_{3k_j+ℓ_j}` and `s` trivial ones:
/// `|α| - 2 - (Σ k_j + s) + 1`.
pub fn smallest_index_mixed(c: &MixedComponents) -> Result<usize> {
    let k: usize = c.cycles.iter().map(|&m| cycle_k(m)).sum::<usize>() + c.trivial;
    if k == 0 || c.alpha_size + 1 < k + 2 {
        return Err(Error::VertexCount(c.alpha_size));
    }
    Ok(c.alpha_size + 1 - 2 - k)
}
