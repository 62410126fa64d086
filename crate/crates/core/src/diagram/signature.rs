//! Canonical signatures for deduplication.
//!
//! Each connected piece is encoded from every starting slot and both
//! rotational senses by a breadth-first numbering of crossings; the
//! lexicographically least code wins. Walking the rotation clockwise encodes
//! the planar reflection, so a diagram and its reflection share a signature.
//! The reflection is a diagram of the mirror link, but it is usually not
//! the diagram obtained by flipping every crossing.

use super::{Endpoint, LinkDiagram};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinkSignature(pub Vec<u8>);

impl fmt::Display for LinkSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LinkSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinkSignature({self})")
    }
}

impl FromStr for LinkSignature {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if !s.len().is_multiple_of(2) {
            return Err("odd hex length".into());
        }
        (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&s[i..i + 2], 16).map_err(|e| e.to_string()))
            .collect::<Result<Vec<u8>, _>>()
            .map(LinkSignature)
    }
}

/// Canonical signature of a diagram (orientation is ignored).
///
/// Panics if a connected piece has more than 255 crossings.
pub fn signature(d: &LinkDiagram) -> LinkSignature {
    let mut pieces: Vec<Vec<u8>> = d.connected_pieces().iter().map(|p| piece_code(d, p)).collect();
    pieces.sort();
    let mut out = Vec::new();
    for p in pieces {
        out.extend(p);
    }
    out.push(0);
    out.extend(d.unknotted_extras().to_be_bytes());
    LinkSignature(out)
}

fn piece_code(d: &LinkDiagram, members: &[usize]) -> Vec<u8> {
    assert!(members.len() < 256, "signature supports at most 255 crossings per piece");
    let n = d.crossing_count();
    let mut best: Option<Vec<u8>> = None;
    let mut num = vec![u8::MAX; n];
    let mut entry = vec![0u8; n];
    let mut order = Vec::with_capacity(members.len());
    let mut code = Vec::with_capacity(1 + 9 * members.len());
    for &x in members {
        for s in 0..4u8 {
            for dir in [1i32, -1] {
                for &m in &order {
                    num[m] = u8::MAX;
                }
                order.clear();
                code.clear();
                code.push(members.len() as u8);
                num[x] = 0;
                entry[x] = s;
                order.push(x);
                let mut i = 0;
                let mut worse = false;
                while i < order.len() {
                    let c = order[i];
                    i += 1;
                    code.push(entry[c] % 2);
                    for k in 0..4i32 {
                        let slot = (entry[c] as i32 + dir * k).rem_euclid(4) as usize;
                        let p = d.opposite(Endpoint::new(c, slot));
                        let y = p.x();
                        if num[y] == u8::MAX {
                            num[y] = order.len() as u8;
                            entry[y] = p.slot;
                            order.push(y);
                        }
                        code.push(num[y]);
                        code.push(((p.slot as i32 - entry[y] as i32) * dir).rem_euclid(4) as u8);
                    }
                    if let Some(b) = &best {
                        let l = code.len();
                        match code[..].cmp(&b[..l]) {
                            std::cmp::Ordering::Greater => {
                                worse = true;
                                break;
                            }
                            std::cmp::Ordering::Less => break,
                            std::cmp::Ordering::Equal => {}
                        }
                    }
                }
                if worse {
                    continue;
                }
                // Finish the encoding without further pruning.
                while i < order.len() {
                    let c = order[i];
                    i += 1;
                    code.push(entry[c] % 2);
                    for k in 0..4i32 {
                        let slot = (entry[c] as i32 + dir * k).rem_euclid(4) as usize;
                        let p = d.opposite(Endpoint::new(c, slot));
                        let y = p.x();
                        if num[y] == u8::MAX {
                            num[y] = order.len() as u8;
                            entry[y] = p.slot;
                            order.push(y);
                        }
                        code.push(num[y]);
                        code.push(((p.slot as i32 - entry[y] as i32) * dir).rem_euclid(4) as u8);
                    }
                }
                if best.as_ref().is_none_or(|b| code < *b) {
                    best = Some(code.clone());
                }
            }
        }
    }
    best.expect("piece is non-empty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    #[test]
    fn permuted_crossings_agree() {
        let a = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]").unwrap();
        let b = parse_pd("PD[X[5,2,6,3],X[1,4,2,5],X[3,6,4,1]]").unwrap();
        assert_eq!(signature(&a), signature(&b));
        assert_eq!(signature(&a), signature(&a.mirror()));
    }

    #[test]
    fn hex_round_trip() {
        let a = signature(&parse_pd("PD[X[1,1,2,2], U[2]]").unwrap());
        assert_eq!(a.to_string().parse::<LinkSignature>().unwrap(), a);
    }

    #[test]
    fn different_diagrams_differ() {
        let tref = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]").unwrap();
        let eight = parse_pd("PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]").unwrap();
        assert_ne!(signature(&tref), signature(&eight));
        let kink = parse_pd("PD[X[1,1,2,2]]").unwrap();
        let kink2 = parse_pd("PD[X[1,2,2,1]]").unwrap();
        assert_eq!(signature(&kink), signature(&kink2));
    }
}
