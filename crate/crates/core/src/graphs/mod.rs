//! Simple graphs on labeled vertices, the vertex masks used throughout, and
//! the structural queries the splitting rules need.

mod enumerate;
mod formats;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use enumerate::{canonical_form, enumerate_all, enumerate_connected, MAX_ENUMERATION_N};
pub use formats::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};

/// Largest vertex count a [`Graph`] can hold (the graph6 short form bound).
pub const MAX_VERTICES: usize = 62;

/// Largest vertex count `c_max` scans exhaustively.
pub const C_MAX_SCAN_LIMIT: usize = 24;

/// A subset of the vertices of an `n`-vertex graph, equivalently a 0/1
/// exponent vector. Bit `i` is vertex `i + 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexMask {
    bits: u64,
    n: usize,
}

impl VertexMask {
    pub fn new(bits: u64, n: usize) -> Result<Self> {
        if n > 64 || (n < 64 && bits >> n != 0) {
            return Err(Error::MaskOutOfRange { mask: bits, n });
        }
        Ok(VertexMask { bits, n })
    }

    pub fn full(n: usize) -> Self {
        VertexMask {
            bits: full_bits(n),
            n,
        }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn n(self) -> usize {
        self.n
    }

    /// `|α|`.
    pub fn weight(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    /// 0-based vertex indices in the support.
    pub fn support(self) -> Vec<usize> {
        bit_indices(self.bits).collect()
    }

    /// Parses strings like `"11011"`, vertex 1 leftmost.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s.len() > 64 {
            return Err(Error::InvalidGraph(format!("bad mask literal {s:?}")));
        }
        let mut bits = 0u64;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '1' => bits |= 1 << i,
                '0' => {}
                _ => return Err(Error::InvalidGraph(format!("bad mask literal {s:?}"))),
            }
        }
        Ok(VertexMask { bits, n: s.len() })
    }
}

impl fmt::Display for VertexMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&mask_string(self.bits, self.n))
    }
}

impl fmt::Debug for VertexMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexMask({})", self)
    }
}

/// Mask rendered with vertex 1 leftmost.
pub fn mask_string(bits: u64, n: usize) -> String {
    (0..n)
        .map(|i| if bits >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

pub fn full_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn bit_indices(mut bits: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if bits == 0 {
            None
        } else {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        }
    })
}

/// How a vertex can serve as a splitting vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexClass {
    Whisker,
    HandleTriangle,
    HandleSquare,
    DegreeTwoFree,
    Dominating,
    Other,
}

/// How two cycles are glued by [`Graph::l_join`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LJoinMode {
    /// Share a path with this many edges; 0 shares a single vertex.
    Share { edges: usize },
    /// Connect the cycles by a path with this many edges.
    Bridge { length: usize },
}

/// Edge-containing components of a graph, with isolated vertices counted
/// separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSummary {
    /// Every connected component (isolated vertices as singletons), ordered
    /// by smallest vertex.
    pub components: Vec<u64>,
    /// Number of components with at least one edge.
    pub c: usize,
    /// Number of isolated vertices.
    pub isolated: usize,
}

impl ComponentSummary {
    pub fn edge_components(&self) -> impl Iterator<Item = u64> + '_ {
        self.components.iter().copied().filter(|m| m.count_ones() > 1)
    }

    pub fn isolated_mask(&self) -> u64 {
        self.components
            .iter()
            .copied()
            .filter(|m| m.count_ones() == 1)
            .fold(0, |a, b| a | b)
    }
}

/// Simple undirected graph on vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges_one_based())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from 1-based edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) outside 1..={n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at {u}")));
            }
            g.add_edge(u - 1, v - 1);
        }
        Ok(g)
    }

    /// Builds a graph from 0-based adjacency masks, checking symmetry.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        for (i, &row) in adj.iter().enumerate() {
            if row >> i & 1 == 1 {
                return Err(Error::InvalidGraph(format!("loop at {}", i + 1)));
            }
            if row >> n != 0 {
                return Err(Error::InvalidGraph("neighbor outside vertex set".into()));
            }
            for j in bit_indices(row) {
                if adj[j] >> i & 1 == 0 {
                    return Err(Error::InvalidGraph("asymmetric adjacency".into()));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Neighborhood of 0-based vertex `v` as a mask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// 0-based edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in bit_indices(self.adj[u] >> (u + 1) << (u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edges_one_based(&self) -> Vec<(usize, usize)> {
        self.edges().into_iter().map(|(u, v)| (u + 1, v + 1)).collect()
    }

    pub fn vertex_mask(&self) -> u64 {
        full_bits(self.n)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidGraph(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((1, n));
        Self::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    /// `K_{1,m}` with hub vertex 1.
    pub fn star(m: usize) -> Result<Self> {
        let edges: Vec<_> = (2..=m + 1).map(|i| (1, i)).collect();
        Self::from_edges(m + 1, &edges)
    }

    /// Cycle on vertices `1..n` plus hub `n` adjacent to all of them.
    pub fn wheel(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::InvalidGraph(format!("wheel needs at least 4 vertices, got {n}")));
        }
        let mut g = Self::empty(n)?;
        let rim = n - 1;
        for i in 0..rim {
            g.add_edge(i, (i + 1) % rim);
            g.add_edge(i, n - 1);
        }
        Ok(g)
    }

    pub fn complement(&self) -> Self {
        let full = self.vertex_mask();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Two cycles `C_m` and `C_n` glued along a shared path or joined by a
    /// bridge. `C_m` occupies vertices `1..=m`.
    pub fn l_join(m: usize, n: usize, mode: LJoinMode) -> Result<Self> {
        if m < 3 || n < 3 {
            return Err(Error::InvalidGraph("cycles need at least 3 vertices".into()));
        }
        let mut edges: Vec<(usize, usize)> = (1..m).map(|i| (i, i + 1)).collect();
        edges.push((1, m));
        match mode {
            LJoinMode::Share { edges: shared } => {
                if shared > 1 {
                    return Err(Error::InvalidGraph(
                        "an L-join shares at most one edge".into(),
                    ));
                }
                // C_n runs 1 (-> 2 if an edge is shared) then through fresh vertices back to 1
                let fresh = n - 1 - shared;
                let start = if shared == 1 { 2 } else { 1 };
                let total = m + fresh;
                let mut prev = start;
                for k in 0..fresh {
                    let v = m + 1 + k;
                    edges.push((prev.min(v), prev.max(v)));
                    prev = v;
                }
                edges.push((1, prev));
                Self::from_edges(total, &edges)
            }
            LJoinMode::Bridge { length } => {
                if length == 0 {
                    return Err(Error::InvalidGraph("bridge length must be at least 1".into()));
                }
                let mut prev = 1;
                for k in 0..length - 1 {
                    let v = m + 1 + k;
                    edges.push((prev, v));
                    prev = v;
                }
                let first = m + length;
                edges.push((prev, first));
                for i in 0..n - 1 {
                    edges.push((first + i, first + i + 1));
                }
                edges.push((first, first + n - 1));
                Self::from_edges(m + length - 1 + n, &edges)
            }
        }
    }

    /// Subgraph induced on the support of `mask`, relabeled in increasing
    /// order of the original labels.
    pub fn induced_subgraph(&self, mask: u64) -> Result<Self> {
        let mask = mask & self.vertex_mask();
        if mask == 0 {
            return Err(Error::VertexCount(0));
        }
        let verts: Vec<usize> = bit_indices(mask).collect();
        let adj = verts
            .iter()
            .map(|&v| compress_bits(self.adj[v] & mask, mask))
            .collect();
        Ok(Graph {
            n: verts.len(),
            adj,
        })
    }

    /// Deletes a 0-based vertex.
    pub fn remove_vertex(&self, v: usize) -> Result<Self> {
        self.induced_subgraph(self.vertex_mask() & !(1u64 << v))
    }

    /// Connected components with the edge-containing count `c`.
    pub fn edge_components(&self) -> ComponentSummary {
        self.components_within(self.vertex_mask())
    }

    /// Components of the subgraph induced on `mask`, without relabeling.
    pub fn components_within(&self, mask: u64) -> ComponentSummary {
        let mut remaining = mask & self.vertex_mask();
        let mut components = Vec::new();
        let mut c = 0;
        let mut isolated = 0;
        while remaining != 0 {
            let start = remaining & remaining.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0;
                for v in bit_indices(frontier) {
                    next |= self.adj[v] & mask;
                }
                frontier = next & !comp;
                comp |= next;
            }
            remaining &= !comp;
            if comp.count_ones() == 1 {
                isolated += 1;
            } else {
                c += 1;
            }
            components.push(comp);
        }
        ComponentSummary {
            components,
            c,
            isolated,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.edge_components().components.len() == 1
    }

    /// Maximum number of edge-containing components over all induced
    /// subgraphs.
    pub fn c_max(&self) -> Result<usize> {
        if self.edge_count() == 0 {
            return Err(Error::Edgeless);
        }
        if self.n > C_MAX_SCAN_LIMIT {
            return Err(Error::Budget(format!(
                "c_max scans at most {C_MAX_SCAN_LIMIT} vertices"
            )));
        }
        let mut best = 1;
        for mask in 1..=self.vertex_mask() {
            // each counted component needs two vertices
            if (mask.count_ones() as usize) / 2 <= best {
                continue;
            }
            let c = self.components_within(mask).c;
            best = best.max(c);
        }
        Ok(best)
    }

    pub fn classify_vertex(&self, v: usize) -> Result<VertexClass> {
        let deg = self.degree(v);
        if deg == 0 {
            return Err(Error::IsolatedVertex(v + 1));
        }
        if deg == self.n - 1 {
            return Ok(VertexClass::Dominating);
        }
        if deg == 1 {
            return Ok(VertexClass::Whisker);
        }
        if deg == 2 {
            let mut it = bit_indices(self.adj[v]);
            let a = it.next().unwrap();
            let b = it.next().unwrap();
            if self.has_edge(a, b) {
                return Ok(VertexClass::HandleTriangle);
            }
            let common = self.adj[a] & self.adj[b] & !(1u64 << v);
            if common != 0 {
                return Ok(VertexClass::HandleSquare);
            }
            return Ok(VertexClass::DegreeTwoFree);
        }
        Ok(VertexClass::Other)
    }

    pub fn is_acyclic(&self) -> bool {
        let s = self.edge_components();
        self.edge_count() + s.components.len() == self.n
    }

    /// Perfect elimination ordering test on the graph itself.
    pub fn is_chordal(&self) -> bool {
        // maximum cardinality search, ties by smallest label
        let n = self.n;
        let mut weight = vec![0usize; n];
        let mut numbered = 0u64;
        let mut visit = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| numbered >> v & 1 == 0)
                .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
                .unwrap();
            visit.push(v);
            numbered |= 1 << v;
            for u in bit_indices(self.adj[v] & !numbered) {
                weight[u] += 1;
            }
        }
        // elimination order is the reverse of the visit order
        let mut position = vec![0usize; n];
        for (i, &v) in visit.iter().rev().enumerate() {
            position[v] = i;
        }
        for &v in visit.iter() {
            let later: Vec<usize> = bit_indices(self.adj[v])
                .filter(|&u| position[u] > position[v])
                .collect();
            if let Some(&parent) = later.iter().min_by_key(|&&u| position[u]) {
                for &u in &later {
                    if u != parent && !self.has_edge(parent, u) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether the cover ideal is Cohen–Macaulay, i.e. the complement is
    /// chordal.
    pub fn is_cm_cover_ideal(&self) -> bool {
        self.complement().is_chordal()
    }

    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.is_connected() && (0..self.n).all(|v| self.degree(v) == 2)
    }

    pub fn triangle_count(&self) -> usize {
        let mut t = 0;
        for (u, v) in self.edges() {
            t += (self.adj[u] & self.adj[v]).count_ones() as usize;
        }
        t / 3
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Short human-readable description used in traces.
    pub fn summary(&self) -> String {
        format!("{}v/{}e", self.n, self.edge_count())
    }
}

/// Packs the bits of `value` selected by `mask` into the low bits.
pub fn compress_bits(value: u64, mask: u64) -> u64 {
    let mut out = 0;
    for (k, i) in bit_indices(mask).enumerate() {
        if value >> i & 1 == 1 {
            out |= 1 << k;
        }
    }
    out
}

/// Inverse of [`compress_bits`]: spreads low bits onto the support of `mask`.
pub fn expand_bits(value: u64, mask: u64) -> u64 {
    let mut out = 0;
    for (k, i) in bit_indices(mask).enumerate() {
        if value >> k & 1 == 1 {
            out |= 1 << i;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(s: &str) -> u64 {
        VertexMask::parse(s).unwrap().bits()
    }

    #[test]
    fn constructors() {
        assert_eq!(Graph::path(2).unwrap().edges_one_based(), vec![(1, 2)]);
        assert!(Graph::cycle(2).is_err());
        let w = Graph::wheel(7).unwrap();
        assert_eq!(w.degree(6), 6);
        assert!(w.remove_vertex(6).unwrap().is_cycle());
        assert_eq!(w.remove_vertex(6).unwrap().n(), 6);
        assert_eq!(Graph::star(3).unwrap().degree(0), 3);
        assert_eq!(Graph::complete(4).unwrap().edge_count(), 6);
    }

    #[test]
    fn complement_of_five_cycle_is_a_five_cycle() {
        let c = Graph::cycle(5).unwrap().complement();
        assert!(c.is_cycle());
        assert_eq!(c.n(), 5);
    }

    #[test]
    fn l_joins() {
        let g = Graph::l_join(6, 6, LJoinMode::Share { edges: 1 }).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 11);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 3);
        let b = Graph::l_join(3, 4, LJoinMode::Bridge { length: 2 }).unwrap();
        assert_eq!(b.n(), 8);
        assert_eq!(b.edge_count(), 9);
        assert!(b.is_connected());
        let v = Graph::l_join(3, 3, LJoinMode::Share { edges: 0 }).unwrap();
        assert_eq!(v.n(), 5);
        assert_eq!(v.degree(0), 4);
        assert!(Graph::l_join(5, 5, LJoinMode::Share { edges: 2 }).is_err());
        assert!(Graph::l_join(5, 5, LJoinMode::Bridge { length: 0 }).is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let p5 = Graph::path(5).unwrap();
        let sub = p5.induced_subgraph(m("11011")).unwrap();
        assert_eq!(sub.edges_one_based(), vec![(1, 2), (3, 4)]);
        assert_eq!(p5.induced_subgraph(p5.vertex_mask()).unwrap(), p5);
        let c6 = Graph::cycle(6).unwrap();
        let sub = c6.induced_subgraph(m("110110")).unwrap();
        assert_eq!(sub.edges_one_based(), vec![(1, 2), (3, 4)]);
    }

    #[test]
    fn components() {
        let two = Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(two.edge_components().c, 2);
        assert_eq!(Graph::cycle(5).unwrap().edge_components().c, 1);
        let iso = Graph::from_edges(3, &[(1, 2)]).unwrap();
        let s = iso.edge_components();
        assert_eq!((s.c, s.isolated), (1, 1));
        assert_eq!(s.isolated_mask(), 0b100);
    }

    #[test]
    fn c_max_examples() {
        assert_eq!(Graph::path(5).unwrap().c_max().unwrap(), 2);
        assert_eq!(Graph::cycle(6).unwrap().c_max().unwrap(), 2);
        assert_eq!(Graph::complete(4).unwrap().c_max().unwrap(), 1);
        assert_eq!(Graph::empty(3).unwrap().c_max(), Err(Error::Edgeless));
    }

    #[test]
    fn c_max_of_paths_and_cycles() {
        // exhaustive values: floor((n+1)/3) for paths, floor(n/3) for cycles
        for n in 2..=12 {
            assert_eq!(Graph::path(n).unwrap().c_max().unwrap(), (n + 1) / 3, "P_{n}");
        }
        for n in 3..=12 {
            assert_eq!(Graph::cycle(n).unwrap().c_max().unwrap(), (n / 3).max(1), "C_{n}");
        }
    }

    #[test]
    fn classification() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.classify_vertex(0).unwrap(), VertexClass::Whisker);
        let c3 = Graph::cycle(3).unwrap();
        assert_eq!(c3.classify_vertex(0).unwrap(), VertexClass::Dominating);
        let c4 = Graph::cycle(4).unwrap();
        for v in 0..4 {
            assert_eq!(c4.classify_vertex(v).unwrap(), VertexClass::HandleSquare);
        }
        for n in 5..=10 {
            let c = Graph::cycle(n).unwrap();
            for v in 0..n {
                assert_eq!(c.classify_vertex(v).unwrap(), VertexClass::DegreeTwoFree);
            }
        }
        // triangle with a pendant: vertex 3 has degree 2 with adjacent neighbors
        let g = Graph::from_edges(4, &[(1, 2), (1, 3), (2, 3), (1, 4)]).unwrap();
        assert_eq!(g.classify_vertex(2).unwrap(), VertexClass::HandleTriangle);
        assert_eq!(g.classify_vertex(0).unwrap(), VertexClass::Dominating);
        assert_eq!(g.classify_vertex(3).unwrap(), VertexClass::Whisker);
        let iso = Graph::from_edges(3, &[(1, 2)]).unwrap();
        assert_eq!(iso.classify_vertex(2), Err(Error::IsolatedVertex(3)));
        let k4 = Graph::complete(5).unwrap().remove_vertex(4).unwrap();
        assert_eq!(k4.classify_vertex(0).unwrap(), VertexClass::Dominating);
        let w = Graph::wheel(7).unwrap();
        assert_eq!(w.classify_vertex(0).unwrap(), VertexClass::Other);
    }

    #[test]
    fn cohen_macaulay_cover_ideals() {
        assert!(Graph::cycle(4).unwrap().is_cm_cover_ideal());
        assert!(!Graph::cycle(5).unwrap().is_cm_cover_ideal());
        assert!(Graph::complete(5).unwrap().is_cm_cover_ideal());
        assert!(Graph::star(4).unwrap().is_cm_cover_ideal());
        assert!(Graph::path(4).unwrap().is_cm_cover_ideal());
        assert!(!Graph::path(5).unwrap().is_cm_cover_ideal());
    }

    #[test]
    fn chordality() {
        assert!(!Graph::cycle(4).unwrap().is_chordal());
        assert!(Graph::cycle(3).unwrap().is_chordal());
        assert!(Graph::path(6).unwrap().is_chordal());
        assert!(!Graph::cycle(6).unwrap().is_chordal());
        // C_4 plus one chord
        let g = Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]).unwrap();
        assert!(g.is_chordal());
    }

    #[test]
    fn mask_strings() {
        let a = VertexMask::parse("11011").unwrap();
        assert_eq!(a.bits(), 0b11011);
        assert_eq!(a.weight(), 4);
        assert_eq!(a.to_string(), "11011");
        let b = VertexMask::parse("110").unwrap();
        assert_eq!(b.bits(), 0b011);
        assert_eq!(b.to_string(), "110");
        assert!(VertexMask::parse("10a").is_err());
        assert!(VertexMask::new(0b1000, 3).is_err());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (2usize..9).prop_flat_map(|n| {
            prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::empty(n).unwrap();
                let mut k = 0;
                for v in 1..n {
                    for u in 0..v {
                        if bits[k] {
                            g.add_edge(u, v);
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn restriction_is_functorial(g in arb_graph(), a in any::<u64>(), b in any::<u64>()) {
            let full = g.vertex_mask();
            let a = a & full;
            let b = b & full;
            prop_assume!(a & b != 0);
            let once = g.induced_subgraph(a & b).unwrap();
            let first = g.induced_subgraph(a).unwrap();
            let twice = first.induced_subgraph(compress_bits(b, a)).unwrap();
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn components_partition_vertices(g in arb_graph()) {
            let s = g.edge_components();
            let mut union = 0u64;
            for &c in &s.components {
                prop_assert_eq!(union & c, 0);
                union |= c;
            }
            prop_assert_eq!(union, g.vertex_mask());
            prop_assert!(s.c <= g.n() / 2);
            prop_assert_eq!(s.c + s.isolated, s.components.len());
        }

        #[test]
        fn compress_expand_round_trip(v in any::<u64>(), mask in any::<u64>()) {
            let packed = compress_bits(v, mask);
            prop_assert_eq!(expand_bits(packed, mask), v & mask);
        }
    }
}
