//! graph6 for graphs of order at most 62 (single-byte order field).

use super::Graph;
use crate::error::ParseError;

pub const GRAPH6_MAX_ORDER: usize = 62;

/// Canonical minimal-length encoding; `None` when the order exceeds 62.
pub fn write_graph6(g: &Graph) -> Option<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return None;
    }
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Some(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(ParseError::at_byte(0, "empty input"));
    };
    if first == b'~' {
        return Err(ParseError::at_byte(
            0,
            "orders above 62 are not supported in graph6",
        ));
    }
    if !(63..=126).contains(&first) {
        return Err(ParseError::at_byte(
            0,
            format!("byte {first:#04x} outside the printable range 63..=126"),
        ));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = 1 + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(ParseError::at_byte(
            bytes.len().min(expected),
            format!(
                "length {} does not match order {n} (expected {expected} bytes)",
                bytes.len()
            ),
        ));
    }
    let mut g = Graph::empty(n);
    let (mut i, mut j) = (0usize, 1usize);
    for (pos, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(ParseError::at_byte(
                pos,
                format!("byte {b:#04x} outside the printable range 63..=126"),
            ));
        }
        let six = b - 63;
        for shift in (0..6).rev() {
            let bit = six >> shift & 1;
            let index = (pos - 1) * 6 + (5 - shift);
            if index >= bits {
                if bit != 0 {
                    return Err(ParseError::at_byte(pos, "nonzero padding bits"));
                }
                continue;
            }
            if bit == 1 {
                g.add_edge(i, j);
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, FamilySpec};
    use proptest::prelude::*;

    #[test]
    fn fixed_encodings() {
        assert_eq!(write_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(write_graph6(&Graph::empty(0)).unwrap(), "?");
        let k2 = build_family(&FamilySpec::complete(2)).unwrap();
        // 63+2 = 'A'; one edge bit padded to 100000 = 32, 63+32 = '_'.
        assert_eq!(write_graph6(&k2).unwrap(), "A_");
        assert_eq!(parse_graph6("A_").unwrap(), k2);
        // Five-vertex reference string from a widely used graph library.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g).unwrap(), "DQc");
    }

    #[test]
    fn petersen_round_trip() {
        let g = build_family(&FamilySpec::petersen()).unwrap();
        let s = write_graph6(&g).unwrap();
        assert_eq!(s.len(), 1 + 45usize.div_ceil(6));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        assert_eq!(parse_graph6("").unwrap_err().position, 0);
        assert_eq!(parse_graph6("A").unwrap_err().position, 1);
        assert_eq!(parse_graph6("A__").unwrap_err().position, 2);
        let e = parse_graph6("A`").unwrap_err();
        assert_eq!(e.position, 1);
        assert!(e.message.contains("padding"));
        assert_eq!(parse_graph6("B\x20").unwrap_err().position, 1);
        assert!(parse_graph6("~??").is_err());
        assert!(write_graph6(&Graph::empty(63)).is_none());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
                move |bits| {
                    let mut g = Graph::empty(n);
                    let mut it = bits.into_iter();
                    for j in 1..n {
                        for i in 0..j {
                            if it.next().unwrap() {
                                g.add_edge(i, j);
                            }
                        }
                    }
                    g
                },
            )
        })
    }

    proptest! {
        #[test]
        fn round_trip_identity(g in arb_graph(62)) {
            let s = write_graph6(&g).unwrap();
            prop_assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }
}
