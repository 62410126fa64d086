//! Vogel's algorithm: R2 moves on faces where two Seifert circles meet
//! with parallel boundary orientation until the circles are coherently
//! nested, then reading the closed braid off the nested circles.

use super::seifert::seifert_partition;
use super::BraidWord;
use crate::diagram::{Endpoint, LinkDiagram};
use crate::rewrite::{insert_twist, Side};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VogelError {
    #[error("diagram is not oriented")]
    NotOriented,
    #[error("Seifert circles not nested after {0} Vogel moves")]
    MoveBound(usize),
    #[error("nested diagram is not a closed braid: {0}")]
    NotBraided(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VogelResult {
    pub word: BraidWord,
    /// Number of R2 moves applied before reading the braid.
    pub vogel_moves: usize,
}

/// Converts an oriented diagram to a braid whose closure is isotopic to it.
/// Connected pieces are braided independently and placed side by side;
/// unknotted circles become idle strands.
pub fn vogel_traczyk(d: &LinkDiagram) -> Result<VogelResult, VogelError> {
    if !d.is_oriented() {
        return Err(VogelError::NotOriented);
    }
    let mut index = 0u32;
    let mut letters = Vec::new();
    let mut moves = 0;
    for piece in d.split_pieces() {
        let (braided, m) = vogel_moves(&piece)?;
        moves += m;
        let (n, w) = read_braid(&braided)?;
        letters.extend(w.iter().map(|&l| l.signum() * (l.abs() + index as i32)));
        index += n;
    }
    index += d.unknotted_extras();
    let index = index.max(1);
    Ok(VogelResult {
        word: BraidWord::new(index, letters).expect("letters within index"),
        vogel_moves: moves,
    })
}

/// First face (in face order) with two arcs of distinct Seifert circles
/// whose orientations agree with the boundary walk in the same way.
fn find_defect(d: &LinkDiagram) -> Option<(Endpoint, Endpoint)> {
    let circles = seifert_partition(d).circle;
    for f in d.faces() {
        let info: Vec<(usize, bool)> = f
            .corners
            .iter()
            .map(|c| {
                let tail = Endpoint::new(c.x(), c.s() + 1);
                (circles[d.label(tail) as usize - 1], !d.is_incoming(tail))
            })
            .collect();
        for i in 0..info.len() {
            for j in i + 1..info.len() {
                if info[i].0 != info[j].0 && info[i].1 == info[j].1 {
                    return Some((f.corners[i], f.corners[j]));
                }
            }
        }
    }
    None
}

fn vogel_moves(d: &LinkDiagram) -> Result<(LinkDiagram, usize), VogelError> {
    let n = d.crossing_count();
    let bound = 4 * n * n + 16;
    let mut cur = d.clone();
    for k in 0..=bound {
        match find_defect(&cur) {
            None => return Ok((cur, k)),
            Some((a, b)) => {
                cur = insert_twist(&cur, [Side::Arc(a), Side::Arc(b)], &[1, -1]);
            }
        }
    }
    Err(VogelError::MoveBound(bound))
}

/// Reads the braid of a connected diagram whose Seifert circles are
/// coherently nested. Returns the index and the letters.
fn read_braid(d: &LinkDiagram) -> Result<(u32, Vec<i32>), VogelError> {
    let part = seifert_partition(d);
    let m = part.count - d.unknotted_extras() as usize;
    let signs = d.signs().unwrap();
    // Adjacency of circles through crossings.
    let mut cross_circles = Vec::with_capacity(d.crossing_count());
    let mut adj = vec![Vec::new(); m];
    for (x, c) in d.crossings().iter().enumerate() {
        let a = part.circle[c.slots[0] as usize - 1];
        let over_in = if signs[x] > 0 { 3 } else { 1 };
        let b = part.circle[c.slots[over_in] as usize - 1];
        if a == b {
            return Err(VogelError::NotBraided(format!("crossing {x} joins a circle to itself")));
        }
        cross_circles.push((a, b));
        if !adj[a].contains(&b) {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    if m == 1 {
        return Ok((1, Vec::new()));
    }
    // The circle graph must be a path; start from the end holding the
    // smallest arc label.
    if adj.iter().any(|v| v.len() > 2) || adj.iter().filter(|v| v.len() == 1).count() != 2 {
        return Err(VogelError::NotBraided("Seifert graph is not a path".into()));
    }
    let first_end = (0..m).find(|&c| adj[c].len() == 1).unwrap();
    let mut order = vec![first_end];
    while order.len() < m {
        let last = *order.last().unwrap();
        let next = adj[last]
            .iter()
            .copied()
            .find(|c| !order.contains(c))
            .ok_or_else(|| VogelError::NotBraided("Seifert graph is not a path".into()))?;
        order.push(next);
    }
    let mut pos = vec![0usize; m];
    for (i, &c) in order.iter().enumerate() {
        pos[c] = i;
    }
    // Seam: one arc per circle along a ray from the innermost circle.
    let faces = d.faces();
    let arc_circle = |l: u32| pos[part.circle[l as usize - 1]];
    let mut seam = Vec::with_capacity(m);
    let mut e = (1..=d.arc_count() as u32)
        .find(|&l| arc_circle(l) == 0)
        .expect("first circle has arcs");
    seam.push(e);
    for i in 0..m - 1 {
        let face = faces
            .iter()
            .find(|f| {
                let labels: Vec<u32> = f.corners.iter().map(|c| d.label(Endpoint::new(c.x(), c.s() + 1))).collect();
                labels.contains(&e) && labels.iter().any(|&l| arc_circle(l) == i + 1)
            })
            .ok_or_else(|| VogelError::NotBraided(format!("no face joins circles {i} and {}", i + 1)))?;
        let labels: Vec<u32> = face.corners.iter().map(|c| d.label(Endpoint::new(c.x(), c.s() + 1))).collect();
        let at = labels.iter().position(|&l| l == e).unwrap();
        e = (1..=labels.len())
            .map(|k| labels[(at + k) % labels.len()])
            .find(|&l| arc_circle(l) == i + 1)
            .unwrap();
        seam.push(e);
    }
    // Crossing sequence met by each circle walking from its seam arc.
    let mut chains: Vec<Vec<usize>> = Vec::with_capacity(m);
    for &start in &seam {
        let mut chain = Vec::new();
        let [p, q] = d.ends(start);
        let mut head = if d.is_incoming(p) { p } else { q };
        loop {
            let x = head.x();
            chain.push(x);
            let out = match (head.slot, signs[x] > 0) {
                (0, true) => 1,
                (0, false) => 3,
                _ => 2,
            };
            let tail = Endpoint::new(x, out);
            if d.label(tail) == start {
                break;
            }
            head = d.opposite(tail);
            if chain.len() > d.crossing_count() {
                return Err(VogelError::NotBraided("circle walk does not close".into()));
            }
        }
        chains.push(chain);
    }
    // Merge the chains: each crossing lies on two consecutive circles.
    let n = d.crossing_count();
    let mut succ = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for chain in &chains {
        for w in chain.windows(2) {
            succ[w[0]].push(w[1]);
            indeg[w[1]] += 1;
        }
    }
    let mut ready: std::collections::BTreeSet<(usize, usize)> = (0..n)
        .filter(|&x| indeg[x] == 0)
        .map(|x| (level(&cross_circles, &pos, x), x))
        .collect();
    let mut letters = Vec::with_capacity(n);
    while let Some(&(lv, x)) = ready.iter().next() {
        ready.remove(&(lv, x));
        letters.push(signs[x] as i32 * (lv as i32 + 1));
        for &y in &succ[x] {
            indeg[y] -= 1;
            if indeg[y] == 0 {
                ready.insert((level(&cross_circles, &pos, y), y));
            }
        }
    }
    if letters.len() != n {
        return Err(VogelError::NotBraided("crossing orders are cyclic".into()));
    }
    Ok((m as u32, letters))
}

fn level(cross: &[(usize, usize)], pos: &[usize], x: usize) -> usize {
    let (a, b) = cross[x];
    pos[a].min(pos[b])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{braid_closure, parse_braid, seifert_circles};
    use crate::diagram::parse_pd;

    #[test]
    fn closed_braids_need_no_moves() {
        for s in ["n=2 1 1 1", "n=3 1 -2 1 -2", "n=5 2 -1 2 3 -4 2 -1 2 3 -4 2 -1 2 3 -4 2 -1 2 3 -4"] {
            let w = parse_braid(s).unwrap();
            let r = vogel_traczyk(&braid_closure(&w)).unwrap();
            assert_eq!(r.vogel_moves, 0, "{s}");
            assert_eq!(r.word.index(), w.index());
            assert_eq!(r.word.len(), w.len());
        }
    }

    #[test]
    fn trefoil_pd() {
        let d = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]").unwrap().oriented();
        let r = vogel_traczyk(&d).unwrap();
        assert_eq!(r.word.index(), 2);
        assert_eq!(r.word.letters(), &[-1, -1, -1]);
        assert_eq!(seifert_circles(&braid_closure(&r.word)), 2);
    }
}
