//! graph6 encoding: size header, then the upper triangle in column order
//! (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, each
//! byte offset by 63.

use super::Graph;
use crate::bitset::BitSet;
use crate::error::{Error, Result};

const HEADER: &[u8] = b">>graph6<<";

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn encode_graph6(g: &Graph) -> Vec<u8> {
    let n = g.v();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_size(&mut out, n);
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
    out
}

fn sextet(b: u8) -> Result<u8> {
    if !(63..=126).contains(&b) {
        return Err(Error::Graph6(format!("byte {b:#04x} outside 63..=126")));
    }
    Ok(b - 63)
}

/// Decodes one graph6 record; an optional `>>graph6<<` header and a
/// trailing newline are accepted.
pub fn decode_graph6(bytes: &[u8]) -> Result<Graph> {
    let mut data = bytes.strip_prefix(HEADER).unwrap_or(bytes);
    while let Some(rest) = data.strip_suffix(b"\n").or_else(|| data.strip_suffix(b"\r")) {
        data = rest;
    }
    let (n, body) = match data {
        [] => return Err(Error::Graph6("empty input".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Graph6("truncated 8-byte size header".into()));
            }
            let mut n = 0usize;
            for &b in &rest[..6] {
                n = n << 6 | sextet(b)? as usize;
            }
            if n <= 258_047 {
                return Err(Error::Graph6(format!("non-minimal size header for n = {n}")));
            }
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated 4-byte size header".into()));
            }
            let mut n = 0usize;
            for &b in &rest[..3] {
                n = n << 6 | sextet(b)? as usize;
            }
            if n <= 62 {
                return Err(Error::Graph6(format!("non-minimal size header for n = {n}")));
            }
            (n, &rest[3..])
        }
        [b, rest @ ..] => (sextet(*b)? as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return Err(Error::Graph6(format!(
            "expected {need} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut adj = vec![BitSet::new(n); n];
    let mut k = 0usize;
    let mut read = body.iter().map(|&b| sextet(b)).collect::<Result<Vec<u8>>>()?.into_iter();
    let mut cur = 0u8;
    'outer: for j in 1..n {
        for i in 0..j {
            if k.is_multiple_of(6) {
                cur = read.next().expect("length checked");
            }
            let bit = cur >> (5 - k % 6) & 1;
            k += 1;
            if bit == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            if k == bits {
                break 'outer;
            }
        }
    }
    if !k.is_multiple_of(6) {
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if cur & pad_mask != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(Graph { adj, labels: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn empty_graph_on_five() {
        let g = Graph::from_edges(5, []);
        assert_eq!(encode_graph6(&g), b"D??");
        assert_eq!(decode_graph6(b"D??").unwrap(), g);
    }

    #[test]
    fn known_small_graph() {
        // petgraph's five-vertex example
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(encode_graph6(&g), b"DQc");
    }

    #[test]
    fn extended_header() {
        let g = Graph::from_edges(63, [(0, 62)]);
        let enc = encode_graph6(&g);
        assert_eq!(&enc[..4], &[126, 63, 63, 63 + 63]);
        assert_eq!(decode_graph6(&enc).unwrap(), g);
    }

    #[test]
    fn header_and_newline_accepted() {
        assert_eq!(decode_graph6(b">>graph6<<D??\n").unwrap().v(), 5);
    }

    #[test]
    fn malformed_inputs() {
        assert!(decode_graph6(b"").is_err());
        assert!(decode_graph6(b"D?").is_err());
        assert!(decode_graph6(b"D???").is_err());
        assert!(decode_graph6(&[b'D', 0x07, b'?']).is_err());
        // 5 vertices = 10 bits; the last two bits of the second byte are padding
        assert!(decode_graph6(&[b'D', b'?', 63 + 1]).is_err());
        assert!(decode_graph6(&[126, 63, 63, 63 + 5]).is_err());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..80).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
                move |bits| {
                    let mut it = bits.into_iter();
                    Graph::from_fn(n, |_, _| it.next().unwrap())
                },
            )
        })
    }

    proptest! {
        #[test]
        fn round_trip(g in arb_graph()) {
            let enc = encode_graph6(&g);
            prop_assert!(enc.iter().all(|b| (63..=126).contains(b)));
            let back = decode_graph6(&enc).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(encode_graph6(&back), enc);
        }
    }
}
