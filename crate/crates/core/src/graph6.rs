//! graph6 encoding.
//!
//! Size `n <= 62` is the single byte `63 + n`; larger orders use `~`
//! followed by three bytes of six bits each. The body packs the upper
//! triangle column by column, `(0,1), (0,2), (1,2), (0,3), ...`, six bits
//! per byte, most significant first, zero padded, each offset by 63.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(OFFSET + n as u8);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|b| OFFSET + b as u8));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let bad = |msg: String| Err(Error::Graph6(msg));
    let Some(&first) = bytes.first() else {
        return bad("empty input".into());
    };
    for (pos, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return bad(format!(
                "byte {b:#04x} at position {pos} outside the graph6 range"
            ));
        }
    }
    let (n, body) = if first == 126 {
        if bytes.get(1) == Some(&126) {
            return bad("order exceeds the supported maximum of 64".into());
        }
        if bytes.len() < 4 {
            return bad("truncated long-form size".into());
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - OFFSET) as usize);
        (n, &bytes[4..])
    } else {
        ((first - OFFSET) as usize, &bytes[1..])
    };
    if n > MAX_ORDER {
        return bad(format!(
            "order {n} exceeds the supported maximum of {MAX_ORDER}"
        ));
    }
    if n == 0 {
        return bad("order 0 is not supported".into());
    }
    let need = (n * (n - 1) / 2).div_ceil(6);
    if body.len() != need {
        return bad(format!(
            "order {n} needs {need} body bytes, found {}",
            body.len()
        ));
    }
    let mut rows = vec![0u64; n];
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - OFFSET;
            if byte >> (5 - bit % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    Graph::from_rows(rows)
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&emit_graph6(self))
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_graph6(&s).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle};

    #[test]
    fn known_encodings() {
        assert_eq!(emit_graph6(&complete(3).unwrap()), "Bw");
        assert_eq!(parse_graph6("Bw").unwrap(), complete(3).unwrap());
        assert_eq!(emit_graph6(&Graph::empty(2).unwrap()), "A?");
        assert_eq!(emit_graph6(&Graph::empty(1).unwrap()), "@");
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc\n").unwrap(), g);
        assert_eq!(parse_graph6(">>graph6<<Bw").unwrap(), complete(3).unwrap());
    }

    #[test]
    fn length_checks() {
        // n = 5 has 10 pairs: exactly two body bytes.
        assert_eq!(parse_graph6("D??").unwrap(), Graph::empty(5).unwrap());
        assert!(parse_graph6("D?").is_err());
        assert!(parse_graph6("D???").is_err());
        assert!(parse_graph6("Bw ").is_err());
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("?").is_err());
    }

    #[test]
    fn long_form() {
        let g = cycle(63).unwrap();
        let s = emit_graph6(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let g = cycle(64).unwrap();
        assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
        // 65 vertices in long form.
        let body = "?".repeat((65 * 64 / 2usize).div_ceil(6));
        assert!(parse_graph6(&format!("~?@@{body}")).is_err());
        assert!(parse_graph6("~~??????").is_err());
    }

    #[test]
    fn serde_as_string() {
        let g = complete(3).unwrap();
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, "\"Bw\"");
        assert_eq!(serde_json::from_str::<Graph>(&json).unwrap(), g);
        assert!(serde_json::from_str::<Graph>("\"D?\"").is_err());
    }
}
