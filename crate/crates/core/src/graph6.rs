//! graph6 encoding: `N(n)` header followed by the upper triangle of the
//! adjacency matrix in column order, six bits per printable byte (bias 63).

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

pub fn emit_graph6(g: &Graph) -> String {
    String::from_utf8(encode(g)).expect("graph6 is ASCII")
}

pub(crate) fn encode(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let bit_count = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(4 + bit_count.div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let col = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | ((col >> i) & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    out
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let err = |msg: &str| Error::Graph6(format!("{msg} in {line:?}"));
    if bytes.is_empty() {
        return Err(err("empty line"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(BIAS..=126).contains(&b)) {
        return Err(err(&format!("byte {b:#04x} outside the printable range")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - BIAS) as usize, &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
        if n <= 62 {
            return Err(err("long header used for a short graph"));
        }
        (n, &bytes[4..])
    } else {
        return Err(err("malformed header"));
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(err(&format!(
            "expected {expected} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
            if k == bit_count {
                break 'outer;
            }
        }
    }
    if bit_count % 6 != 0 {
        let last = body[expected - 1] - BIAS;
        let pad = 6 - bit_count % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err("nonzero padding bits"));
        }
    }
    Graph::from_rows(&rows)
}

/// Parses every non-blank line of a graph6 document.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(parse_graph6)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_encodings() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(emit_graph6(&k2), "A_");
        assert_eq!(parse_graph6("A_").unwrap(), k2);
        // P3 0-1-2: bits x(0,1)=1, x(0,2)=0, x(1,2)=1 -> 101000 -> 40+63.
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(emit_graph6(&p3), "Bg");
        assert_eq!(emit_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(emit_graph6(&Graph::empty(0).unwrap()), "?");
        // Petgraph's five-vertex reference: edges a-c, a-e, b-d, d-e.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
        assert_eq!(parse_graph6(">>graph6<<DQc\n").unwrap(), g);
    }

    #[test]
    fn long_header_for_large_graphs() {
        let e: Vec<_> = (1..64).map(|i| (i - 1, i)).collect();
        let p64 = Graph::from_edges(64, &e).unwrap();
        let s = emit_graph6(&p64);
        assert!(s.starts_with("~?@?"));
        assert_eq!(parse_graph6(&s).unwrap(), p64);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("A").is_err()); // missing data byte
        assert!(parse_graph6("A__").is_err()); // overlong
        assert!(parse_graph6("A`").is_err()); // padding bit set
        assert!(parse_graph6("A\x10").is_err());
        assert!(parse_graph6("~~").is_err());
        assert!(parse_graph6("~?@A").is_err()); // n=65
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=20).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::empty(n).unwrap();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            g.insert_edge(i, j);
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
        fn round_trip_preserves_labeling(g in arb_graph()) {
            let s = emit_graph6(&g);
            prop_assert_eq!(parse_graph6(&s).unwrap(), g);
            prop_assert_eq!(emit_graph6(&parse_graph6(&s).unwrap()), s);
        }
    }
}
