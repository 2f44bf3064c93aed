//! graph6 codec.
//!
//! The upper triangle of the adjacency matrix is read column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits per byte, high bit
//! first, and offset by 63. The vertex count precedes it: one byte for
//! `n <= 62`, otherwise `~` followed by three bytes.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};
use std::io::BufRead;

/// Largest vertex count the graph6 format can express with the short headers.
pub const GRAPH6_FORMAT_LIMIT: usize = 258_047;

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
}

pub fn encode_graph6(g: &Graph) -> Result<Vec<u8>> {
    let n = g.n();
    if n > GRAPH6_FORMAT_LIMIT {
        return Err(Error::SizeLimit {
            n,
            limit: GRAPH6_FORMAT_LIMIT,
            what: "graph6",
        });
    }
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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

/// Convenience wrapper returning a `String`; graph6 is always printable ASCII.
pub fn to_graph6_string(g: &Graph) -> String {
    String::from_utf8(encode_graph6(g).expect("graph within format limit"))
        .expect("graph6 is ASCII")
}

fn sextet(s: &[u8], offset: usize) -> Result<u8> {
    match s.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(Error::MalformedGraph6 {
            offset,
            reason: format!("byte 0x{b:02x} outside the printable range 63..=126"),
        }),
        None => Err(Error::MalformedGraph6 {
            offset,
            reason: "unexpected end of input".into(),
        }),
    }
}

pub fn decode_graph6(s: &[u8]) -> Result<Graph> {
    let (n, mut pos) = match s.first() {
        None => {
            return Err(Error::MalformedGraph6 {
                offset: 0,
                reason: "empty input".into(),
            })
        }
        Some(b'~') => {
            if s.get(1) == Some(&b'~') {
                return Err(Error::MalformedGraph6 {
                    offset: 1,
                    reason: "8-byte size header not supported".into(),
                });
            }
            let n = ((sextet(s, 1)? as usize) << 12)
                | ((sextet(s, 2)? as usize) << 6)
                | sextet(s, 3)? as usize;
            (n, 4)
        }
        Some(_) => (sextet(s, 0)? as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(Error::SizeLimit {
            n,
            limit: MAX_VERTICES,
            what: "graph",
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let nbytes = bits.div_ceil(6);
    let mut g = Graph::empty(n);
    let mut k = 0;
    for _ in 0..nbytes {
        let val = sextet(s, pos)?;
        for b in (0..6).rev() {
            let bit = (val >> b) & 1;
            if k < bits {
                if bit == 1 {
                    // column-major position k -> (i, j)
                    let (i, j) = pair_from_index(k);
                    g.add_edge(i, j);
                }
            } else if bit == 1 {
                return Err(Error::MalformedGraph6 {
                    offset: pos,
                    reason: "non-zero padding bits".into(),
                });
            }
            k += 1;
        }
        pos += 1;
    }
    if pos != s.len() {
        return Err(Error::MalformedGraph6 {
            offset: pos,
            reason: "trailing bytes after graph".into(),
        });
    }
    Ok(g)
}

#[inline]
fn pair_from_index(k: usize) -> (usize, usize) {
    // largest j with j(j-1)/2 <= k
    let mut j = (((8 * k + 1) as f64).sqrt() as usize).div_ceil(2);
    while j * (j - 1) / 2 > k {
        j -= 1;
    }
    while (j + 1) * j / 2 <= k {
        j += 1;
    }
    (k - j * (j - 1) / 2, j)
}

/// Reads newline-delimited graph6. Blank lines are skipped; an optional
/// `>>graph6<<` header is accepted on each line.
pub fn read_graph6_lines<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim_end_matches(['\r', '\n']);
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        out.push(decode_graph6(line.as_bytes()).map_err(|e| match e {
            Error::MalformedGraph6 { offset, reason } => Error::MalformedGraph6 {
                offset,
                reason: format!("line {}: {reason}", lineno + 1),
            },
            other => other,
        })?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn k3_is_bw() {
        assert_eq!(encode_graph6(&Graph::complete(3)).unwrap(), b"Bw");
        assert_eq!(decode_graph6(b"Bw").unwrap(), Graph::complete(3));
    }

    #[test]
    fn single_vertex() {
        assert_eq!(encode_graph6(&Graph::empty(1)).unwrap(), b"@");
        assert_eq!(decode_graph6(b"@").unwrap(), Graph::empty(1));
    }

    #[test]
    fn empty_five() {
        let g = decode_graph6(b"D??").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn known_string() {
        // a-c, a-e, b-d, d-e
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(encode_graph6(&g).unwrap(), b"DQc");
    }

    #[test]
    fn long_header() {
        let mut g = Graph::empty(100);
        g.add_edge(3, 97);
        let s = encode_graph6(&g).unwrap();
        assert_eq!(&s[..4], &[b'~', 63, 64, 63 + 36]);
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejects_trailing_garbage() {
        let err = decode_graph6(b"Bwx").unwrap_err();
        assert!(matches!(err, Error::MalformedGraph6 { offset: 2, .. }));
    }

    #[test]
    fn rejects_truncation_and_bad_bytes() {
        assert!(matches!(
            decode_graph6(b"D?").unwrap_err(),
            Error::MalformedGraph6 { offset: 2, .. }
        ));
        assert!(matches!(
            decode_graph6(b"B\n").unwrap_err(),
            Error::MalformedGraph6 { offset: 1, .. }
        ));
        assert!(decode_graph6(b"").is_err());
    }

    #[test]
    fn rejects_padding_bits() {
        // n = 3 uses 3 of 6 bits; 'x' sets a padding bit
        assert!(decode_graph6(b"Bx").is_err());
    }

    #[test]
    fn reads_lines() {
        let data = b">>graph6<<Bw\n\n@\nD??\n";
        let gs = read_graph6_lines(&data[..]).unwrap();
        assert_eq!(gs.len(), 3);
        assert_eq!(gs[2].n(), 5);
    }

    #[test]
    fn pair_index_matches_order() {
        let mut k = 0;
        for j in 1..40 {
            for i in 0..j {
                assert_eq!(pair_from_index(k), (i, j));
                k += 1;
            }
        }
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..80, seed in any::<u64>(), density in 0.0f64..1.0) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(density) {
                        g.add_edge(u, v);
                    }
                }
            }
            let s = encode_graph6(&g).unwrap();
            prop_assert_eq!(decode_graph6(&s).unwrap(), g);
        }
    }
}
