//! graph6 and plain edge-list text formats.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

/// Parses the short graph6 form (`n <= 62`).
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let s = s.trim_end_matches(['\n', '\r']);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty string".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b} outside 63..=126")));
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 {
        return Err(Error::Graph6("zero vertices".into()));
    }
    if n > MAX_VERTICES {
        return Err(Error::Graph6("only the short form (n <= 62) is supported".into()));
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() < nbytes {
        return Err(Error::Graph6(format!(
            "truncated: expected {nbytes} data bytes, got {}",
            body.len()
        )));
    }
    if body.len() > nbytes {
        return Err(Error::Graph6("trailing bytes".into()));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    for k in nbits..nbytes * 6 {
        if bit(k) {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = vec![(n + 63) as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses `"n m"` followed by `m` lines `"u v"` with 1-based vertices.
/// Blank lines and `#` comments are ignored.
pub fn parse_edge_list(s: &str) -> Result<Graph> {
    let mut lines = s
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::EdgeList("missing header".into()))?;
    let nums = parse_pair(header)?;
    let (n, m) = nums;
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::EdgeList(format!("vertex count {n} out of range")));
    }
    let mut g = Graph::empty(n)?;
    let mut seen = 0;
    for line in lines {
        let (u, v) = parse_pair(line)?;
        if u == 0 || v == 0 || u > n || v > n {
            return Err(Error::EdgeList(format!("edge {u} {v} outside 1..={n}")));
        }
        if u == v {
            return Err(Error::EdgeList(format!("loop at {u}")));
        }
        if g.has_edge(u - 1, v - 1) {
            return Err(Error::EdgeList(format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u - 1, v - 1);
        seen += 1;
    }
    if seen != m {
        return Err(Error::EdgeList(format!("header says {m} edges, found {seen}")));
    }
    Ok(g)
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(Error::EdgeList(format!("expected two integers in {line:?}")));
    }
    let a = parts[0]
        .parse()
        .map_err(|_| Error::EdgeList(format!("bad integer {:?}", parts[0])))?;
    let b = parts[1]
        .parse()
        .map_err(|_| Error::EdgeList(format!("bad integer {:?}", parts[1])))?;
    Ok((a, b))
}

pub fn emit_edge_list(g: &Graph) -> String {
    let edges = g.edges_one_based();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_strings() {
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.edges_one_based(), vec![(1, 2)]);
        let g = parse_graph6("A?").unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 0));
        // the triangle and the 5-cycle as printed by standard tools
        assert_eq!(emit_graph6(&Graph::complete(3).unwrap()), "Bw");
        assert_eq!(emit_graph6(&Graph::cycle(5).unwrap()), "Dhc");
        assert_eq!(parse_graph6("Dhc").unwrap(), Graph::cycle(5).unwrap());
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("?").is_err());
        assert!(parse_graph6("D").is_err());
        assert!(parse_graph6("Dhcc").is_err());
        assert!(parse_graph6("A`").is_err());
        assert!(parse_graph6("B\u{7f}").is_err());
        assert!(parse_graph6("~").is_err());
    }

    #[test]
    fn edge_lists() {
        let g = parse_edge_list("3 2\n1 2\n2 3\n").unwrap();
        assert_eq!(g, Graph::path(3).unwrap());
        assert_eq!(emit_edge_list(&g), "3 2\n1 2\n2 3\n");
        assert!(parse_edge_list("3 1\n1 4\n").is_err());
        assert!(parse_edge_list("3 2\n1 2\n").is_err());
        assert!(parse_edge_list("3 1\n1 1\n").is_err());
        assert!(parse_edge_list("3 2\n1 2\n2 1\n").is_err());
        assert!(parse_edge_list("").is_err());
        let c = parse_edge_list("# comment\n2 1\n\n1 2 # edge\n").unwrap();
        assert_eq!(c.edge_count(), 1);
    }

    proptest! {
        #[test]
        fn graph6_round_trip(n in 1usize..20, seed in any::<u64>()) {
            let mut g = Graph::empty(n).unwrap();
            let mut s = seed;
            for j in 1..n {
                for i in 0..j {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if s >> 63 == 1 {
                        g.add_edge(i, j);
                    }
                }
            }
            let text = emit_graph6(&g);
            prop_assert_eq!(parse_graph6(&text).unwrap(), g.clone());
            prop_assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
        }
    }
}
