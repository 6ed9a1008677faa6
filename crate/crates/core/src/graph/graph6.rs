// graph6, short form only: https://users.cecs.anu.edu.au/~bdm/data/formats.txt

use super::Graph;
use crate::error::{Error, Result};

/// Largest vertex count expressible in the one-byte graph6 header.
pub const GRAPH6_MAX_VERTICES: usize = 62;

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Encodes `g` as graph6: header byte `n + 63`, then the upper triangle in
/// column order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`) packed six bits per byte.
pub fn write_graph6(g: &Graph) -> Result<Vec<u8>> {
    let n = g.n();
    if n > GRAPH6_MAX_VERTICES {
        return Err(Error::Size(format!(
            "graph6 short form holds at most {GRAPH6_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
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
    Ok(out)
}

/// Parses one short-form graph6 string. Surrounding ASCII whitespace is ignored.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let text = text.trim_ascii();
    let (&header, body) = text
        .split_first()
        .ok_or_else(|| Error::Format("empty graph6 string".into()))?;
    if !(63..=126).contains(&header) {
        return Err(Error::Format(format!("bad graph6 header byte {header}")));
    }
    let n = (header - 63) as usize;
    if n == 63 {
        return Err(Error::Format(
            "long-form graph6 headers (n > 62) are not supported".into(),
        ));
    }
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Error::Format(format!(
            "graph6 body for n={n} must have {expected} bytes, got {}",
            body.len()
        )));
    }
    if let Some(&b) = body.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::Format(format!("bad graph6 body byte {b}")));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if (k..expected * 6).any(bit) {
        return Err(Error::Format("nonzero graph6 padding bits".into()));
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family, FamilySpec};

    #[test]
    fn hand_encoded_values() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(write_graph6(&k2).unwrap(), b"A_");
        assert_eq!(write_graph6(&Graph::empty(1).unwrap()).unwrap(), b"@");
        assert_eq!(write_graph6(&Graph::empty(0).unwrap()).unwrap(), b"?");
        // the path 0-1-2: bits x01=1 x02=0 x12=1 -> 101000 -> 40+63
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(write_graph6(&p3).unwrap(), vec![b'B', 40 + 63]);
    }

    #[test]
    fn petersen_roundtrip() {
        let p = generate(&FamilySpec::new(Family::Kneser, vec![5, 2])).unwrap();
        let text = write_graph6(&p).unwrap();
        assert_eq!(parse_graph6(&text).unwrap(), p);
        assert_eq!(parse_graph6(b"A_\n").unwrap().edge_count(), 1);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_graph6(b""), Err(Error::Format(_))));
        // C5 needs two body bytes
        let c5 = generate(&FamilySpec::new(Family::Cycle, vec![5])).unwrap();
        let text = write_graph6(&c5).unwrap();
        assert!(matches!(parse_graph6(&text[..2]), Err(Error::Format(_))));
        assert!(matches!(parse_graph6(b"A"), Err(Error::Format(_))));
        assert!(matches!(parse_graph6(b"A_?"), Err(Error::Format(_))));
        assert!(matches!(parse_graph6(b"A\x20"), Err(Error::Format(_))));
        // K2 with a padding bit set
        assert!(matches!(parse_graph6(b"A`"), Err(Error::Format(_))));
        assert!(matches!(parse_graph6(b"~??~"), Err(Error::Format(_))));
    }

    #[test]
    fn oversize_write_rejected() {
        let g = Graph::empty(63).unwrap();
        assert!(matches!(write_graph6(&g), Err(Error::Size(_))));
    }
}
