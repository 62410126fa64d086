//! Braid words, closures, Seifert circles and braid-level 3-moves.
//!
//! Letter `i > 0` is σ_i and `-i` is σ_i⁻¹. In a closure the strands run
//! upward and σ_i is the positive crossing whose over-strand goes from
//! position i to position i+1.

mod seifert;
mod vogel;

pub use seifert::{min_seifert_orientation, min_seifert_over_orientations, seifert_circles, seifert_partition, SeifertPartition};
pub use vogel::{vogel_traczyk, VogelError, VogelResult};

use crate::diagram::{Crossing, Label, LinkDiagram};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BraidError {
    #[error("missing header `n=<index>`")]
    MissingHeader,
    #[error("invalid braid index: {0}")]
    BadIndex(String),
    #[error("invalid letter `{0}`")]
    BadLetter(String),
    #[error("letter {letter} needs |i| < n = {index}")]
    OutOfRange { letter: i32, index: u32 },
    #[error("position {0} is outside the word")]
    BadPosition(usize),
    #[error("3-move direction must be +3 or -3, got {0}")]
    BadDirection(i32),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    index: u32,
    letters: Vec<i32>,
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_braid(self))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_braid(self))
    }
}

impl BraidWord {
    pub fn new(index: u32, letters: Vec<i32>) -> Result<Self, BraidError> {
        if index == 0 {
            return Err(BraidError::BadIndex("0".into()));
        }
        for &l in &letters {
            if l == 0 {
                return Err(BraidError::BadLetter("0".into()));
            }
            if l.unsigned_abs() >= index {
                return Err(BraidError::OutOfRange { letter: l, index });
            }
        }
        Ok(BraidWord { index, letters })
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            index: self.index,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.index, other.index, "braid indices differ");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord {
            index: self.index,
            letters,
        }
    }

    pub fn power(&self, k: usize) -> BraidWord {
        BraidWord {
            index: self.index,
            letters: self.letters.repeat(k),
        }
    }

    /// Cancels adjacent inverse pairs.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            index: self.index,
            letters: out,
        }
    }
}

/// Parses `n=<index>` followed by whitespace-separated signed letters.
pub fn parse_braid(text: &str) -> Result<BraidWord, BraidError> {
    let mut tokens = text.split_whitespace();
    let head = tokens.next().ok_or(BraidError::MissingHeader)?;
    let idx = head.strip_prefix("n=").ok_or(BraidError::MissingHeader)?;
    let index: u32 = idx.parse().map_err(|_| BraidError::BadIndex(idx.into()))?;
    let letters = tokens
        .map(|t| t.parse::<i32>().map_err(|_| BraidError::BadLetter(t.into())))
        .collect::<Result<Vec<_>, _>>()?;
    BraidWord::new(index, letters)
}

pub fn format_braid(w: &BraidWord) -> String {
    let mut s = format!("n={}", w.index);
    for l in &w.letters {
        s.push(' ');
        s.push_str(&l.to_string());
    }
    s
}

/// Every letter inverted in sign.
pub fn braid_mirror(w: &BraidWord) -> BraidWord {
    BraidWord {
        index: w.index,
        letters: w.letters.iter().map(|l| -l).collect(),
    }
}

/// A permutation of strand positions `0..n`: `map[p]` is where the strand
/// entering at the bottom of position `p` leaves at the top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    pub map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { map: (0..n).collect() }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            map: self.map.iter().map(|&p| other.map[p]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.map.len()];
        let mut cycles = 0;
        for s in 0..self.map.len() {
            if !seen[s] {
                cycles += 1;
                let mut p = s;
                while !seen[p] {
                    seen[p] = true;
                    p = self.map[p];
                }
            }
        }
        cycles
    }
}

/// Image of the word in the symmetric group, reading letters bottom to top.
pub fn braid_permutation(w: &BraidWord) -> Permutation {
    let n = w.index as usize;
    // pos[s] = current position of the strand that started at s.
    let mut at: Vec<usize> = (0..n).collect();
    for &l in &w.letters {
        let i = l.unsigned_abs() as usize - 1;
        at.swap(i, i + 1);
    }
    let mut map = vec![0; n];
    for (pos, &start) in at.iter().enumerate() {
        map[start] = pos;
    }
    Permutation { map }
}

/// PD diagram of the closure with the braid orientation. Idle strands become
/// unknotted circles; the crossing count equals the letter count.
pub fn braid_closure(w: &BraidWord) -> LinkDiagram {
    let n = w.index as usize;
    let mut next: Label = 1;
    let mut fresh = || {
        next += 1;
        next - 1
    };
    let init: Vec<Label> = (0..n).map(|_| fresh()).collect();
    let mut cur = init.clone();
    let mut raw = Vec::with_capacity(w.len());
    let mut signs = Vec::with_capacity(w.len());
    for &l in &w.letters {
        let i = l.unsigned_abs() as usize - 1;
        let (e0, e1) = (cur[i], cur[i + 1]);
        let (f0, f1) = (fresh(), fresh());
        if l > 0 {
            raw.push([e1, f1, f0, e0]);
        } else {
            raw.push([e0, e1, f1, f0]);
        }
        signs.push(l.signum() as i8);
        cur[i] = f0;
        cur[i + 1] = f1;
    }
    let total = next as usize;
    let mut alias: Vec<Label> = (0..total as Label).collect();
    let mut idle = 0;
    for p in 0..n {
        if cur[p] == init[p] {
            idle += 1;
        } else {
            alias[cur[p] as usize] = init[p];
        }
    }
    let mut map = vec![0 as Label; total];
    let mut count = 1;
    let crossings = raw
        .iter()
        .map(|c| Crossing {
            slots: c.map(|l| {
                let l = alias[l as usize] as usize;
                if map[l] == 0 {
                    map[l] = count;
                    count += 1;
                }
                map[l]
            }),
        })
        .collect();
    LinkDiagram::new_oriented(crossings, signs, idle).expect("braid closure is a valid oriented diagram")
}

/// Replaces the syllable σ_i^k containing `position` (the maximal run of
/// letters with generator `i`) by σ_i^(k + direction).
pub fn braid_three_move(w: &BraidWord, position: usize, direction: i32) -> Result<BraidWord, BraidError> {
    if direction != 3 && direction != -3 {
        return Err(BraidError::BadDirection(direction));
    }
    let gen = w.letters.get(position).ok_or(BraidError::BadPosition(position))?.abs();
    let mut lo = position;
    while lo > 0 && w.letters[lo - 1].abs() == gen {
        lo -= 1;
    }
    let mut hi = position + 1;
    while hi < w.letters.len() && w.letters[hi].abs() == gen {
        hi += 1;
    }
    let k: i32 = w.letters[lo..hi].iter().map(|l| l.signum()).sum::<i32>() + direction;
    let mut letters = w.letters[..lo].to_vec();
    letters.extend(std::iter::repeat_n(gen * k.signum(), k.unsigned_abs() as usize));
    letters.extend_from_slice(&w.letters[hi..]);
    Ok(BraidWord {
        index: w.index,
        letters,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{parse_pd, signature};

    #[test]
    fn parse_and_format() {
        let w = parse_braid("n=5 2 -1 2 3 -4 2 -1 2 3 -4 2 -1 2 3 -4 2 -1 2 3 -4").unwrap();
        assert_eq!(w.len(), 20);
        assert_eq!(parse_braid(&format_braid(&w)).unwrap(), w);
        assert!(parse_braid("n=2").unwrap().is_empty());
        assert_eq!(parse_braid("n=3 5"), Err(BraidError::OutOfRange { letter: 5, index: 3 }));
        assert!(parse_braid("n=3 0").is_err());
        assert!(parse_braid("2 1").is_err());
    }

    #[test]
    fn trefoil_closure() {
        let d = braid_closure(&parse_braid("n=2 1 1 1").unwrap());
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.writhe(), 3);
        let left = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]").unwrap();
        assert_eq!(signature(&d), signature(&left));
        assert_eq!(d.mirror().writhe(), -3);
    }

    #[test]
    fn closure_components() {
        let chen = parse_braid("n=5 2 -1 2 3 -4 2 -1 2 3 -4 2 -1 2 3 -4 2 -1 2 3 -4").unwrap();
        assert!(braid_permutation(&chen).is_identity());
        let d = braid_closure(&chen);
        assert_eq!(d.crossing_count(), 20);
        assert_eq!(d.component_count(), 5);
        assert_eq!(d.writhe(), 4);
        let u = braid_closure(&parse_braid("n=3").unwrap());
        assert_eq!(u.crossing_count(), 0);
        assert_eq!(u.component_count(), 3);
    }

    #[test]
    fn three_moves() {
        let w = parse_braid("n=2 1 1 1").unwrap();
        assert!(braid_three_move(&w, 1, -3).unwrap().is_empty());
        let w = parse_braid("n=3 2 1").unwrap();
        let v = braid_three_move(&w, 0, -3).unwrap();
        assert_eq!(v.letters(), &[-2, -2, 1]);
        let back = braid_three_move(&v, 0, 3).unwrap();
        assert_eq!(back.free_reduce(), w);
        assert_eq!(braid_three_move(&w, 5, 3), Err(BraidError::BadPosition(5)));
    }

    #[test]
    fn permutation_examples() {
        let p = braid_permutation(&parse_braid("n=2 1").unwrap());
        assert_eq!(p.map, vec![1, 0]);
    }
}
