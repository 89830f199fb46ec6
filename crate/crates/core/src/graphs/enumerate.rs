//! Isomorphism-free enumeration of small graphs by brute-force
//! canonicalization.

use std::collections::BTreeSet;

use super::Graph;
use crate::error::{Error, Result};

/// Largest vertex count the factorial canonicalization accepts.
pub const MAX_ENUMERATION_N: usize = 7;

/// Canonical code: the upper-triangle adjacency bits in graph6 order
/// (column by column), read most significant first, minimized over all
/// vertex permutations. Returns the code and the relabeled graph.
pub fn canonical_form(g: &Graph) -> Result<(u64, Graph)> {
    let n = g.n();
    if n > MAX_ENUMERATION_N {
        return Err(Error::VertexCount(n));
    }
    let total_bits = n * (n - 1) / 2;
    let mut search = Search {
        g,
        n,
        total_bits,
        order: Vec::with_capacity(n),
        used: 0,
        best: u64::MAX,
        best_order: (0..n).collect(),
    };
    search.extend(0, 0);
    let mut adj = vec![0u64; n];
    for (pos_u, &u) in search.best_order.iter().enumerate() {
        for (pos_v, &v) in search.best_order.iter().enumerate() {
            if g.has_edge(u, v) {
                adj[pos_u] |= 1 << pos_v;
            }
        }
    }
    Ok((search.best, Graph::from_adjacency(adj)?))
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    total_bits: usize,
    order: Vec<usize>,
    used: u64,
    best: u64,
    best_order: Vec<usize>,
}

impl Search<'_> {
    // `code` holds the bits of columns 0..order.len(), `len` of them
    fn extend(&mut self, code: u64, len: usize) {
        let j = self.order.len();
        if j == self.n {
            if code < self.best {
                self.best = code;
                self.best_order = self.order.clone();
            }
            return;
        }
        for v in 0..self.n {
            if self.used >> v & 1 == 1 {
                continue;
            }
            let mut c = code;
            for &u in &self.order {
                c = c << 1 | self.g.has_edge(u, v) as u64;
            }
            let new_len = len + j;
            // compare against the same-length prefix of the best code
            if self.best != u64::MAX && c > self.best >> (self.total_bits - new_len) {
                continue;
            }
            self.order.push(v);
            self.used |= 1 << v;
            self.extend(c, new_len);
            self.used &= !(1 << v);
            self.order.pop();
        }
    }
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// sorted by canonical code.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_ENUMERATION_N {
        return Err(Error::VertexCount(n));
    }
    augment_closure(n, false)
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, sorted by canonical code.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_ENUMERATION_N {
        return Err(Error::VertexCount(n));
    }
    // every connected graph has a vertex whose removal keeps it connected
    augment_closure(n, true)
}

fn augment_closure(n: usize, connected: bool) -> Result<Vec<Graph>> {
    let mut level = vec![Graph::empty(1)?];
    for k in 2..=n {
        let mut seen = BTreeSet::new();
        for g in &level {
            for nbrs in 0u64..1 << (k - 1) {
                if connected && nbrs == 0 {
                    continue;
                }
                let mut adj = g.adjacency().to_vec();
                for (u, row) in adj.iter_mut().enumerate() {
                    if nbrs >> u & 1 == 1 {
                        *row |= 1 << (k - 1);
                    }
                }
                adj.push(nbrs);
                let h = Graph::from_adjacency(adj)?;
                seen.insert(canonical_form(&h)?);
            }
        }
        level = seen.into_iter().map(|(_, g)| g).collect();
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn class_counts() {
        let all = [1, 2, 4, 11, 34, 156];
        for (i, &c) in all.iter().enumerate() {
            assert_eq!(enumerate_all(i + 1).unwrap().len(), c, "n={}", i + 1);
        }
        let conn = [1, 1, 2, 6, 21, 112];
        for (i, &c) in conn.iter().enumerate() {
            let gs = enumerate_connected(i + 1).unwrap();
            assert_eq!(gs.len(), c, "n={}", i + 1);
            assert!(gs.iter().all(|g| g.is_connected()));
        }
    }

    #[test]
    fn rejects_large_n() {
        assert!(enumerate_connected(8).is_err());
        assert!(enumerate_connected(0).is_err());
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let a = Graph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let b = Graph::from_edges(5, &[(3, 5), (5, 1), (1, 4), (4, 2)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        let c = Graph::cycle(5).unwrap();
        assert_ne!(canonical_form(&a).unwrap().0, canonical_form(&c).unwrap().0);
    }

    #[test]
    fn representatives_have_distinct_invariants_where_forced() {
        // invariant vectors cannot prove non-isomorphism, but distinct codes
        // must come with canonical graphs that re-canonicalize to themselves
        for g in enumerate_connected(6).unwrap() {
            let (_, again) = canonical_form(&g).unwrap();
            assert_eq!(again, g);
        }
        let n5 = enumerate_connected(5).unwrap();
        let inv: HashSet<_> = n5
            .iter()
            .map(|g| (g.degree_sequence(), g.triangle_count(), g.edge_count()))
            .collect();
        assert!(inv.len() >= 19);
    }
}
