//! Lyubeznik tables of cover ideals by Mayer–Vietoris splitting at
//! vertices, with a step-by-step trace and an exact fallback.

use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graphs::{bit_indices, emit_graph6, Graph, VertexClass};
use crate::ideals::{cover_ideal, ideal_intersection, SqfreeIdeal};
use crate::lytable::{
    cycle_table, disjoint_trivial_table, thom_sebastiani, two_cycles_table, LyubeznikTable,
};
use crate::resolution::{oracle_table, TAYLOR_BUDGET};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Disconnect,
    ThomSebastiani,
    Dominating,
    Whisker,
    HandleTriangle,
    HandleSquare,
    CycleFormula,
    TwoCyclesFormula,
    DegreeTwoCor,
    DegreeTwoProp,
    OracleFallback,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One applied rule. `vertex` is 1-based in the graph the rule was applied
/// to; `before` and `after` are vertex counts of that graph and of the
/// graph(s) it reduced to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub rule: Rule,
    pub vertex: Option<usize>,
    pub before: usize,
    pub after: Vec<usize>,
    pub note: String,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rule)?;
        if let Some(v) = self.vertex {
            write!(f, "@{v}")?;
        }
        let after: Vec<String> = self.after.iter().map(|a| a.to_string()).collect();
        let after = if after.is_empty() { "-".to_string() } else { after.join("+") };
        write!(f, ": {}→{}", self.before, after)?;
        if !self.note.is_empty() {
            write!(f, " ({})", self.note)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RuleTrace {
    pub steps: Vec<Step>,
}

impl RuleTrace {
    pub fn rules(&self) -> Vec<Rule> {
        self.steps.iter().map(|s| s.rule).collect()
    }

    pub fn uses(&self, rule: Rule) -> bool {
        self.steps.iter().any(|s| s.rule == rule)
    }

    pub fn render(&self) -> String {
        self.steps.iter().map(|s| format!("{s}\n")).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitResult {
    /// Table in the variables of the input graph.
    pub table: LyubeznikTable,
    pub trace: RuleTrace,
    /// False when some step relied on an unverified hypothesis.
    pub certified: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StuckPolicy {
    OracleFallback,
    Fail,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitPolicy {
    pub on_stuck: StuckPolicy,
    /// Allow the degree-two superposition when `Λ(G \ v)` is nontrivial.
    pub allow_degree_two_prop: bool,
    /// Check superposition steps against the resolution oracle when the
    /// graph has at most [`TAYLOR_BUDGET`] edges.
    pub verify_with_oracle: bool,
    /// Shortcut literal cycles and two L-joined cycles to their closed forms.
    pub recognize_families: bool,
}

impl Default for SplitPolicy {
    fn default() -> Self {
        SplitPolicy {
            on_stuck: StuckPolicy::OracleFallback,
            allow_degree_two_prop: true,
            verify_with_oracle: true,
            recognize_families: false,
        }
    }
}

impl SplitPolicy {
    /// Splitting rules only: no oracle anywhere.
    pub fn rules_only() -> Self {
        SplitPolicy {
            on_stuck: StuckPolicy::Fail,
            allow_degree_two_prop: true,
            verify_with_oracle: false,
            recognize_families: false,
        }
    }
}

/// Runs the splitting recursion on `g`.
pub fn split_table<F: Field>(g: &Graph, policy: SplitPolicy) -> Result<SplitResult> {
    let mut engine = Engine::<F> {
        policy,
        memo: HashMap::new(),
        _field: std::marker::PhantomData,
    };
    engine.table(g).map(|r| (*r).clone())
}

struct Engine<F> {
    policy: SplitPolicy,
    memo: HashMap<Graph, Rc<SplitResult>>,
    _field: std::marker::PhantomData<F>,
}

impl<F: Field> Engine<F> {
    fn table(&mut self, g: &Graph) -> Result<Rc<SplitResult>> {
        if let Some(r) = self.memo.get(g) {
            return Ok(r.clone());
        }
        let r = Rc::new(self.compute(g)?);
        self.memo.insert(g.clone(), r.clone());
        Ok(r)
    }

    fn compute(&mut self, g: &Graph) -> Result<SplitResult> {
        if g.edge_count() == 0 {
            return Err(Error::Edgeless);
        }
        let n = g.n();
        let comps = g.edge_components();

        if comps.isolated > 0 {
            let core = g.vertex_mask() & !comps.isolated_mask();
            let sub = self.table(&g.induced_subgraph(core)?)?;
            let mut trace = RuleTrace {
                steps: vec![Step {
                    rule: Rule::Disconnect,
                    vertex: None,
                    before: n,
                    after: vec![n - comps.isolated],
                    note: format!("{} isolated", comps.isolated),
                }],
            };
            trace.steps.extend(sub.trace.steps.iter().cloned());
            return Ok(SplitResult {
                table: sub.table.embed(comps.isolated),
                trace,
                certified: sub.certified,
            });
        }

        if comps.c > 1 {
            let mut steps = vec![Step {
                rule: Rule::ThomSebastiani,
                vertex: None,
                before: n,
                after: comps.edge_components().map(|c| c.count_ones() as usize).collect(),
                note: String::new(),
            }];
            let mut acc: Option<LyubeznikTable> = None;
            let mut certified = true;
            for c in comps.edge_components() {
                let sub = self.table(&g.induced_subgraph(c)?)?;
                steps.extend(sub.trace.steps.iter().cloned());
                certified &= sub.certified;
                acc = Some(match acc {
                    None => sub.table.clone(),
                    Some(t) => thom_sebastiani(&t, &sub.table),
                });
            }
            return Ok(SplitResult {
                table: acc.expect("at least two components"),
                trace: RuleTrace { steps },
                certified,
            });
        }

        let classes: Vec<VertexClass> = (0..n)
            .map(|v| g.classify_vertex(v))
            .collect::<Result<_>>()?;
        let first = |class: VertexClass| classes.iter().position(|&c| c == class);

        if let Some(v) = first(VertexClass::Dominating) {
            return Ok(SplitResult {
                table: LyubeznikTable::trivial(n, n - 2),
                trace: RuleTrace {
                    steps: vec![Step {
                        rule: Rule::Dominating,
                        vertex: Some(v + 1),
                        before: n,
                        after: vec![],
                        note: String::new(),
                    }],
                },
                certified: true,
            });
        }

        for (class, rule) in [
            (VertexClass::Whisker, Rule::Whisker),
            (VertexClass::HandleTriangle, Rule::HandleTriangle),
            (VertexClass::HandleSquare, Rule::HandleSquare),
        ] {
            if let Some(v) = first(class) {
                let sub = self.table(&g.remove_vertex(v)?)?;
                return Ok(self.pattern_step(rule, v, n, &sub));
            }
        }

        if self.policy.recognize_families {
            if g.is_cycle() {
                return Ok(SplitResult {
                    table: cycle_table(n)?,
                    trace: single(Rule::CycleFormula, n, format!("C_{n}")),
                    certified: true,
                });
            }
            if let Some((a, b)) = two_cycles_shape(g) {
                return Ok(SplitResult {
                    table: two_cycles_table(a, b, n)?,
                    trace: single(Rule::TwoCyclesFormula, n, format!("C_{a} ⊛ C_{b}")),
                    certified: true,
                });
            }
        }

        let free: Vec<usize> = (0..n)
            .filter(|&v| classes[v] == VertexClass::DegreeTwoFree)
            .collect();
        for &v in &free {
            let l = self.table(&g.remove_vertex(v)?)?;
            if l.certified && l.table.is_trivial() {
                return self.degree_two_step(g, v, &l, Rule::DegreeTwoCor);
            }
        }
        if self.policy.allow_degree_two_prop {
            if let Some(&v) = free.first() {
                let l = self.table(&g.remove_vertex(v)?)?;
                return self.degree_two_step(g, v, &l, Rule::DegreeTwoProp);
            }
        }

        match self.policy.on_stuck {
            StuckPolicy::Fail => Err(Error::NoRuleApplies(emit_graph6(g))),
            StuckPolicy::OracleFallback => {
                let table = self.oracle(g)?;
                Ok(SplitResult {
                    table,
                    trace: single(Rule::OracleFallback, n, emit_graph6(g)),
                    certified: true,
                })
            }
        }
    }

    fn oracle(&self, g: &Graph) -> Result<LyubeznikTable> {
        if g.edge_count() > TAYLOR_BUDGET {
            return Err(Error::Budget(format!(
                "{} edges exceed the oracle budget of {TAYLOR_BUDGET}",
                g.edge_count()
            )));
        }
        oracle_table::<F>(&cover_ideal(g)?)
    }

    /// Whisker and handle removal keep the corner-anchored pattern.
    fn pattern_step(&self, rule: Rule, v: usize, n: usize, sub: &SplitResult) -> SplitResult {
        let mut steps = vec![Step {
            rule,
            vertex: Some(v + 1),
            before: n,
            after: vec![n - 1],
            note: String::new(),
        }];
        steps.extend(sub.trace.steps.iter().cloned());
        SplitResult {
            table: sub.table.embed(1),
            trace: RuleTrace { steps },
            certified: sub.certified,
        }
    }

    fn degree_two_step(
        &mut self,
        g: &Graph,
        v: usize,
        l: &SplitResult,
        rule: Rule,
    ) -> Result<SplitResult> {
        let n = g.n();
        let h_graph = degree_two_graph(g, v)?;
        let h = self.table(&h_graph)?;
        let table = degree_two_table(&l.table.embed(1), &h.table)?;
        let mut steps = vec![Step {
            rule,
            vertex: Some(v + 1),
            before: n,
            after: vec![n - 1, n - 3],
            note: String::new(),
        }];
        steps.extend(l.trace.steps.iter().cloned());
        steps.extend(h.trace.steps.iter().cloned());
        let mut certified = l.certified && h.certified;
        if rule == Rule::DegreeTwoProp {
            certified = false;
            if self.policy.verify_with_oracle && g.edge_count() <= TAYLOR_BUDGET {
                let exact = self.oracle(g)?;
                if exact == table {
                    steps[0].note = "verified".into();
                    certified = l.certified && h.certified;
                } else {
                    steps.push(Step {
                        rule: Rule::OracleFallback,
                        vertex: Some(v + 1),
                        before: n,
                        after: vec![],
                        note: "superposition rejected".into(),
                    });
                    return Ok(SplitResult {
                        table: exact,
                        trace: RuleTrace { steps },
                        certified: true,
                    });
                }
            }
        }
        Ok(SplitResult {
            table,
            trace: RuleTrace { steps },
            certified,
        })
    }
}

fn single(rule: Rule, n: usize, note: String) -> RuleTrace {
    RuleTrace {
        steps: vec![Step {
            rule,
            vertex: None,
            before: n,
            after: vec![],
            note,
        }],
    }
}

/// The graph `H` attached to a degree-two vertex `v` with neighbors `u₁`,
/// `u₂`: `G \ {v, u₁, u₂}` together with every edge between
/// `N(u₁) \ {v}` and `N(u₂) \ {v}`, on the remaining `n - 3` vertices in
/// increasing label order.
pub fn degree_two_graph(g: &Graph, v: usize) -> Result<Graph> {
    if g.degree(v) != 2 {
        return Err(Error::NotApplicable(format!("vertex {} does not have degree two", v + 1)));
    }
    let mut nb = bit_indices(g.neighbors(v));
    let (u1, u2) = (nb.next().unwrap(), nb.next().unwrap());
    let removed = 1u64 << v | 1u64 << u1 | 1u64 << u2;
    let keep = g.vertex_mask() & !removed;
    if keep == 0 {
        return Err(Error::NotApplicable("nothing left after removing v and its neighbors".into()));
    }
    let a_side = g.neighbors(u1) & keep;
    let b_side = g.neighbors(u2) & keep;
    let mut adj: Vec<u64> = g.adjacency().iter().map(|&row| row & keep).collect();
    for a in bit_indices(a_side) {
        for b in bit_indices(b_side) {
            if a != b {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
    }
    for &r in &[v, u1, u2] {
        adj[r] = 0;
    }
    let full = Graph::from_adjacency(adj)?;
    full.induced_subgraph(keep)
}

/// Superposition for a degree-two splitting vertex: `λ(L)` plus the entries
/// of `Λ(H)` moved two columns right, `λ_{d-1,d}` raised by one and
/// `λ_{d,d} = 1`. `l` is read in the ring of `G`.
pub fn degree_two_table(l: &LyubeznikTable, h: &LyubeznikTable) -> Result<LyubeznikTable> {
    let (n, d) = (l.n(), l.d());
    if d < 1 || h.d() + 3 != d {
        return Err(Error::Shape(format!(
            "H has dimension {} but the split needs {}",
            h.d(),
            d as i64 - 3
        )));
    }
    let mut entries = l.entries().clone();
    for (&(p, i), &v) in h.entries() {
        *entries.entry((p, i + 2)).or_insert(0) += v;
    }
    *entries.entry((d - 1, d)).or_insert(0) += 1;
    entries.insert((d, d), 1);
    LyubeznikTable::new(n, d, entries)
}

/// `Λ(R/J(G))` for a forest: `c` trivial components in the ambient ring of
/// all vertices.
pub fn forest_table(g: &Graph) -> Result<LyubeznikTable> {
    if !g.is_acyclic() {
        return Err(Error::NotAForest);
    }
    let c = g.edge_components().c;
    if c == 0 {
        return Err(Error::Edgeless);
    }
    let t = disjoint_trivial_table(c, g.n() - 2)?;
    LyubeznikTable::new(g.n(), g.n() - 2, t.entries().clone())
}

/// `J(G) = L ∩ K` with `L` the cover ideal of `G \ v` in all `n`
/// variables (the unit ideal if no edge avoids `v`) and `K` the
/// intersection of the primes of the edges at `v`.
pub fn mv_split_at_vertex(g: &Graph, v: usize) -> Result<(SqfreeIdeal, SqfreeIdeal)> {
    if g.degree(v) == 0 {
        return Err(Error::IsolatedVertex(v + 1));
    }
    let n = g.n();
    let edges = g.edges();
    let mask = |(a, b): (usize, usize)| 1u64 << a | 1u64 << b;
    let l_primes: Vec<u64> = edges
        .iter()
        .copied()
        .filter(|&(a, b)| a != v && b != v)
        .map(mask)
        .collect();
    let k_primes: Vec<u64> = edges
        .iter()
        .copied()
        .filter(|&(a, b)| a == v || b == v)
        .map(mask)
        .collect();
    let l = if l_primes.is_empty() {
        SqfreeIdeal::unit(n)
    } else {
        SqfreeIdeal::from_primes(n, l_primes)?
    };
    let k = SqfreeIdeal::from_primes(n, k_primes)?;
    debug_assert_eq!(ideal_intersection(&l, &k)?, cover_ideal(g)?);
    Ok((l, k))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Combined {
    Table(LyubeznikTable),
    Undetermined,
}

/// Table of `R/J` for a splitting `J = L ∩ K` with `Λ(R/K)` trivial, from
/// the tables of `R/L` and `R/(L+K)`, in the cases where it is determined.
pub fn combine_mv(
    t_l: &LyubeznikTable,
    t_k: &LyubeznikTable,
    t_lk: &LyubeznikTable,
) -> Result<Combined> {
    if !t_k.is_trivial() {
        return Err(Error::NontrivialK);
    }
    let (n, d) = (t_l.n(), t_l.d());
    if t_lk.is_trivial() {
        return Ok(Combined::Table(t_l.clone()));
    }
    if t_l.is_trivial() {
        if t_lk.d() + 1 != d {
            return Err(Error::Shape("L + K must have dimension d - 1".into()));
        }
        let mut entries = std::collections::BTreeMap::new();
        for (&(p, i), &v) in t_lk.entries() {
            if (p, i) == (d - 1, d - 1) {
                if v > 1 {
                    entries.insert((d - 1, d), v - 1);
                }
            } else {
                entries.insert((p, i + 1), v);
            }
        }
        entries.insert((d, d), 1);
        return Ok(Combined::Table(LyubeznikTable::new(n, d, entries)?));
    }
    Ok(Combined::Undetermined)
}

/// `(m, n)` when `g` is two cycles sharing one edge, sharing one vertex, or
/// joined by a path.
pub fn two_cycles_shape(g: &Graph) -> Option<(usize, usize)> {
    let n = g.n();
    if !g.is_connected() || g.edge_count() != n + 1 || (0..n).any(|v| g.degree(v) < 2) {
        return None;
    }
    let high: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 2).collect();
    // walk from `start` along `first` until a vertex of degree > 2
    let walk = |start: usize, first: usize| -> (usize, usize) {
        let (mut prev, mut cur, mut len) = (start, first, 1);
        while g.degree(cur) == 2 {
            let next = bit_indices(g.neighbors(cur)).find(|&x| x != prev).unwrap();
            prev = cur;
            cur = next;
            len += 1;
        }
        (cur, len)
    };
    match high.as_slice() {
        [c] if g.degree(*c) == 4 => {
            let mut lens = Vec::new();
            let mut seen = 0u64;
            for first in bit_indices(g.neighbors(*c)) {
                if seen >> first & 1 == 1 {
                    continue;
                }
                let (_, len) = walk(*c, first);
                // mark both ends of the loop
                let (mut prev, mut cur) = (*c, first);
                seen |= 1 << first;
                while cur != *c {
                    let next = bit_indices(g.neighbors(cur)).find(|&x| x != prev).unwrap();
                    prev = cur;
                    cur = next;
                }
                seen |= 1 << prev;
                lens.push(len);
            }
            (lens.len() == 2).then(|| (lens[0].min(lens[1]), lens[0].max(lens[1])))
        }
        [a, b] if g.degree(*a) == 3 && g.degree(*b) == 3 => {
            let paths: Vec<(usize, usize)> =
                bit_indices(g.neighbors(*a)).map(|f| walk(*a, f)).collect();
            let to_b: Vec<usize> = paths.iter().filter(|p| p.0 == *b).map(|p| p.1).collect();
            if to_b.len() == 3 {
                let mut l = to_b;
                l.sort_unstable();
                if l[0] != 1 {
                    return None;
                }
                let (x, y) = (1 + l[1], 1 + l[2]);
                return Some((x.min(y), x.max(y)));
            }
            if to_b.len() == 1 {
                // a loop at a (counted from both ends) and a bridge to b
                let loop_a = paths.iter().find(|p| p.0 == *a).map(|p| p.1)?;
                let paths_b: Vec<(usize, usize)> =
                    bit_indices(g.neighbors(*b)).map(|f| walk(*b, f)).collect();
                let loop_b = paths_b.iter().find(|p| p.0 == *b).map(|p| p.1)?;
                return Some((loop_a.min(loop_b), loop_a.max(loop_b)));
            }
            None
        }
        _ => None,
    }
}
