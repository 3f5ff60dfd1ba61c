//! Bit-exact graph6 encoding and decoding.
//!
//! One record per line; the optional `>>graph6<<` header is stripped.
//! The order prefix N(n) is a single byte 63+n for n <= 62 and a `~`
//! followed by three bytes (18 bits) up to the configured order cap.
//! Data bytes carry the upper triangle in column-major order, six bits
//! per byte, offset by 63, with zero padding bits.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_ORDER_CAP: usize = 100_000;

pub const HEADER: &str = ">>graph6<<";

pub fn decode(record: &str) -> Result<Graph> {
    decode_with_cap(record, DEFAULT_ORDER_CAP)
}

pub fn decode_with_cap(record: &str, cap: usize) -> Result<Graph> {
    let record = record.trim_end_matches(['\r', '\n']);
    let record = record.strip_prefix(HEADER).unwrap_or(record);
    let bytes = record.as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedRecord("empty record".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::MalformedRecord(format!(
                "byte {b} outside the printable range 63..126"
            )));
        }
    }
    let (n, data) = parse_order(bytes)?;
    if n > cap {
        return Err(Error::UnsupportedOrder(n, cap));
    }
    if n == 0 {
        return Err(Error::MalformedRecord("order 0 is not supported".into()));
    }
    let nbits = n * (n - 1) / 2;
    let expect = nbits.div_ceil(6);
    if data.len() != expect {
        return Err(Error::MalformedRecord(format!(
            "expected {expect} data bytes for order {n}, got {}",
            data.len()
        )));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for col in 1..n {
        for row in 0..col {
            let byte = data[bit / 6] - 63;
            if byte & (1 << (5 - bit % 6)) != 0 {
                edges.push((row, col));
            }
            bit += 1;
        }
    }
    // padding bits past the triangle must be zero
    while bit < expect * 6 {
        let byte = data[bit / 6] - 63;
        if byte & (1 << (5 - bit % 6)) != 0 {
            return Err(Error::MalformedRecord("nonzero padding bits".into()));
        }
        bit += 1;
    }
    Graph::from_edge_list(n, &edges)
}

fn parse_order(bytes: &[u8]) -> Result<(usize, &[u8])> {
    if bytes[0] != b'~' {
        return Ok(((bytes[0] - 63) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == b'~' {
        // 8-byte form encodes orders beyond any supported cap
        return Err(Error::MalformedRecord(
            "8-byte order prefix is not supported".into(),
        ));
    }
    if bytes.len() < 4 {
        return Err(Error::MalformedRecord("truncated order prefix".into()));
    }
    let n = ((bytes[1] - 63) as usize) << 12 | ((bytes[2] - 63) as usize) << 6
        | (bytes[3] - 63) as usize;
    if n <= 62 {
        return Err(Error::MalformedRecord(
            "non-canonical long prefix for small order".into(),
        ));
    }
    Ok((n, &bytes[4..]))
}

pub fn encode(g: &Graph) -> Result<String> {
    encode_with_cap(g, DEFAULT_ORDER_CAP)
}

pub fn encode_with_cap(g: &Graph, cap: usize) -> Result<String> {
    let n = g.order();
    if n > cap {
        return Err(Error::UnsupportedOrder(n, cap));
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(b'~');
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    }
    let mut acc = 0u8;
    let mut fill = 0u8;
    for col in 1..n {
        for row in 0..col {
            acc <<= 1;
            if g.has_edge(row, col) {
                acc |= 1;
            }
            fill += 1;
            if fill == 6 {
                out.push(63 + acc);
                acc = 0;
                fill = 0;
            }
        }
    }
    if fill > 0 {
        out.push(63 + (acc << (6 - fill)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    // K_2 by hand: N(2) = 'A'; one triangle bit set, padded to 100000 -> 32+63 = '_'.
    #[test]
    fn k2_is_a_underscore() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(encode(&k2).unwrap(), "A_");
        assert_eq!(decode("A_").unwrap(), k2);
    }

    #[test]
    fn singleton_is_at_sign() {
        let g = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!(encode(&g).unwrap(), "@");
        assert_eq!(decode("@").unwrap(), g);
    }

    #[test]
    fn c4_round_trip() {
        let c4 = cycle(4);
        assert_eq!(decode(&encode(&c4).unwrap()).unwrap(), c4);
    }

    #[test]
    fn header_is_stripped() {
        let c4 = cycle(4);
        let rec = format!(">>graph6<<{}", encode(&c4).unwrap());
        assert_eq!(decode(&rec).unwrap(), c4);
    }

    #[test]
    fn long_prefix_round_trip() {
        let g = cycle(100);
        let rec = encode(&g).unwrap();
        assert_eq!(rec.as_bytes()[0], b'~');
        assert_eq!(decode(&rec).unwrap(), g);
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(decode(""), Err(Error::MalformedRecord(_))));
        assert!(matches!(decode("A"), Err(Error::MalformedRecord(_))));
        assert!(matches!(decode("A\x1f"), Err(Error::MalformedRecord(_))));
        // K_2 data byte with a nonzero padding bit
        assert!(matches!(decode("A`"), Err(Error::MalformedRecord(_))));
    }

    #[test]
    fn rejects_order_above_cap() {
        let g = cycle(70);
        let rec = encode(&g).unwrap();
        assert_eq!(
            decode_with_cap(&rec, 64),
            Err(Error::UnsupportedOrder(70, 64))
        );
    }
}
