//! Link diagrams as PD codes.
//!
//! A crossing `X[a, b, c, d]` lists its four arc labels counterclockwise,
//! starting from the incoming under-strand. Slots 0 and 2 carry the
//! under-strand, slots 1 and 3 the over-strand. When a diagram is oriented,
//! slot 0 is always the incoming under-strand and the sign of the crossing
//! records the direction of the over-strand: `+1` when it runs from slot 3 to
//! slot 1, `-1` when it runs from slot 1 to slot 3.

mod builder;
mod pd;
mod signature;

pub(crate) use builder::DiagramBuilder;
pub use pd::{format_pd, parse_pd, PdError};
pub use signature::{signature, LinkSignature};

use std::fmt;

/// Arc label, 1-based.
pub type Label = u32;

/// One end of an arc: a crossing index and a slot 0..4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Endpoint {
    pub crossing: u32,
    pub slot: u8,
}

impl Endpoint {
    pub fn new(crossing: usize, slot: usize) -> Self {
        Endpoint {
            crossing: crossing as u32,
            slot: (slot % 4) as u8,
        }
    }

    pub fn x(self) -> usize {
        self.crossing as usize
    }

    pub fn s(self) -> usize {
        self.slot as usize
    }

    /// The endpoint on the same strand at the far side of the crossing.
    pub fn across(self) -> Endpoint {
        Endpoint::new(self.x(), self.s() + 2)
    }

    pub fn is_over(self) -> bool {
        self.slot % 2 == 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub slots: [Label; 4],
}

impl Crossing {
    pub fn new(a: Label, b: Label, c: Label, d: Label) -> Self {
        Crossing { slots: [a, b, c, d] }
    }

    /// Same crossing with slots rotated so that `slots[k]` becomes slot 0.
    pub fn rotated(self, k: usize) -> Self {
        let s = self.slots;
        Crossing {
            slots: [s[k % 4], s[(k + 1) % 4], s[(k + 2) % 4], s[(k + 3) % 4]],
        }
    }
}

/// A face of the diagram, as the cyclic list of corners met while walking
/// its boundary with the face on the right. Corner `(x, s)` means the walk
/// arrives at crossing `x` through slot `s` and leaves through slot `s + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub corners: Vec<Endpoint>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }
}

/// A closed curve of the diagram: its arcs in traversal order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub arcs: Vec<Label>,
}

/// A link diagram. Immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    ends: Vec<[Endpoint; 2]>,
    unknots: u32,
    signs: Option<Vec<i8>>,
}

impl fmt::Debug for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_pd(self))?;
        if let Some(signs) = &self.signs {
            write!(f, " signs={signs:?}")?;
        }
        Ok(())
    }
}

impl LinkDiagram {
    /// Validates and builds an unoriented diagram.
    pub fn new(crossings: Vec<Crossing>, unknots: u32) -> Result<Self, PdError> {
        let ends = compute_ends(&crossings)?;
        Ok(LinkDiagram {
            crossings,
            ends,
            unknots,
            signs: None,
        })
    }

    /// The diagram of `k` disjoint unknotted circles.
    pub fn unlink(k: u32) -> Self {
        LinkDiagram {
            crossings: Vec::new(),
            ends: Vec::new(),
            unknots: k,
            signs: None,
        }
    }

    /// Builds an oriented diagram. Slot 0 of every crossing must be the
    /// incoming under-strand and `signs[x]` the crossing sign; the arcs must
    /// chain consistently (every arc enters exactly one crossing slot and
    /// leaves exactly one).
    pub fn new_oriented(crossings: Vec<Crossing>, signs: Vec<i8>, unknots: u32) -> Result<Self, PdError> {
        if signs.len() != crossings.len() || signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(PdError::Orientation("one sign of +1 or -1 per crossing required".into()));
        }
        let d = LinkDiagram {
            ends: compute_ends(&crossings)?,
            crossings,
            unknots,
            signs: Some(signs),
        };
        for (i, e) in d.ends.iter().enumerate() {
            let a = d.is_incoming(e[0]);
            let b = d.is_incoming(e[1]);
            if a == b {
                return Err(PdError::Orientation(format!("arc {} is not consistently directed", i + 1)));
            }
        }
        Ok(d)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        self.ends.len()
    }

    pub fn unknotted_extras(&self) -> u32 {
        self.unknots
    }

    pub fn is_oriented(&self) -> bool {
        self.signs.is_some()
    }

    pub fn signs(&self) -> Option<&[i8]> {
        self.signs.as_deref()
    }

    /// Arc label at an endpoint.
    pub fn label(&self, p: Endpoint) -> Label {
        self.crossings[p.x()].slots[p.s()]
    }

    /// Both endpoints of an arc.
    pub fn ends(&self, label: Label) -> [Endpoint; 2] {
        self.ends[label as usize - 1]
    }

    /// The other end of the arc leaving through `p`.
    pub fn opposite(&self, p: Endpoint) -> Endpoint {
        let e = self.ends(self.label(p));
        if e[0] == p {
            e[1]
        } else {
            e[0]
        }
    }

    /// For an oriented diagram: whether the strand enters the crossing at `p`.
    pub fn is_incoming(&self, p: Endpoint) -> bool {
        let sign = self.signs.as_ref().expect("diagram is not oriented")[p.x()];
        match p.slot {
            0 => true,
            2 => false,
            1 => sign < 0,
            _ => sign > 0,
        }
    }

    /// Drops orientation data.
    pub fn unoriented(&self) -> LinkDiagram {
        LinkDiagram {
            signs: None,
            ..self.clone()
        }
    }

    /// All faces, in a fixed order: corners are scanned by crossing then slot
    /// and each face is emitted when its first corner is met.
    pub fn faces(&self) -> Vec<Face> {
        let n = self.crossings.len();
        let mut seen = vec![false; 4 * n];
        let mut faces = Vec::new();
        for start in 0..4 * n {
            if seen[start] {
                continue;
            }
            let mut corners = Vec::new();
            let mut c = Endpoint::new(start / 4, start % 4);
            loop {
                let idx = c.x() * 4 + c.s();
                if seen[idx] {
                    break;
                }
                seen[idx] = true;
                corners.push(c);
                c = self.opposite(Endpoint::new(c.x(), c.s() + 1));
            }
            faces.push(Face { corners });
        }
        faces
    }

    /// Connected pieces of the underlying 4-valent graph, as sorted crossing
    /// index lists ordered by smallest member.
    pub fn connected_pieces(&self) -> Vec<Vec<usize>> {
        let n = self.crossings.len();
        let mut piece = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if piece[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            piece[s] = id;
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                i += 1;
                for k in 0..4 {
                    let y = self.opposite(Endpoint::new(x, k)).x();
                    if piece[y] == usize::MAX {
                        piece[y] = id;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// The connected pieces as separate diagrams (orientation kept, labels
    /// compacted). Unknotted extras are not included.
    pub fn split_pieces(&self) -> Vec<LinkDiagram> {
        self.connected_pieces()
            .iter()
            .map(|members| {
                let mut map = vec![0 as Label; self.arc_count() + 1];
                let mut next = 1;
                let crossings: Vec<Crossing> = members
                    .iter()
                    .map(|&x| Crossing {
                        slots: self.crossings[x].slots.map(|l| {
                            if map[l as usize] == 0 {
                                map[l as usize] = next;
                                next += 1;
                            }
                            map[l as usize]
                        }),
                    })
                    .collect();
                let ends = compute_ends(&crossings).expect("piece of a valid diagram");
                LinkDiagram {
                    crossings,
                    ends,
                    unknots: 0,
                    signs: self.signs.as_ref().map(|s| members.iter().map(|&x| s[x]).collect()),
                }
            })
            .collect()
    }

    /// Euler check on the sphere: every connected piece contributes
    /// `V - E + F = 2`, where E = 2V for a 4-valent graph.
    pub fn is_planar(&self) -> bool {
        if self.crossings.is_empty() {
            return true;
        }
        self.faces().len() == self.crossings.len() + 2 * self.connected_pieces().len()
    }

    /// Walks a strand from endpoint `from` (the strand enters the crossing
    /// at `from`), returning the sequence of entry endpoints until the walk
    /// closes up.
    pub fn walk(&self, from: Endpoint) -> Vec<Endpoint> {
        let mut out = Vec::new();
        let mut p = from;
        loop {
            out.push(p);
            p = self.opposite(p.across());
            if p == from {
                break;
            }
        }
        out
    }

    /// The closed curves through crossings, in order of smallest arc label,
    /// each traversed in its reference direction (see [`Self::reference_entries`]).
    /// Unknotted extras are not listed; [`Self::component_count`] includes them.
    pub fn components(&self) -> Vec<Component> {
        self.reference_entries()
            .into_iter()
            .map(|start| Component {
                arcs: self.walk(start).into_iter().map(|p| self.label(p)).collect(),
            })
            .collect()
    }

    pub fn component_count(&self) -> usize {
        self.reference_entries().len() + self.unknots as usize
    }

    /// For each component (ordered by smallest arc label) the entry endpoint
    /// of its smallest arc in the reference direction. For an oriented
    /// diagram the reference direction is the orientation. Otherwise it is
    /// the direction in which the component enters its under-crossings at
    /// slot 0, decided by the first under-crossing met; components that are
    /// never under follow increasing labels where possible.
    pub fn reference_entries(&self) -> Vec<Endpoint> {
        let mut comp_seen = vec![false; self.arc_count()];
        let mut out = Vec::new();
        for label in 1..=self.arc_count() as Label {
            if comp_seen[label as usize - 1] {
                continue;
            }
            let [p, q] = self.ends(label);
            // Walk with the arc arriving at `q` first.
            let walk = self.walk(q);
            for e in &walk {
                comp_seen[self.label(*e) as usize - 1] = true;
            }
            let forward = if self.signs.is_some() {
                self.is_incoming(q)
            } else {
                self.natural_direction(&walk, p)
            };
            out.push(if forward { q } else { p });
        }
        out
    }

    fn natural_direction(&self, walk: &[Endpoint], back: Endpoint) -> bool {
        for e in walk {
            match e.slot {
                0 => return true,
                2 => return false,
                _ => {}
            }
        }
        // Only over-crossings: prefer the direction whose second arc is the
        // successor label of the first.
        let first = self.label(walk[0]);
        let next_fwd = self.label(walk[0].across());
        let next_back = self.label(back.across());
        !(next_back == first + 1 && next_fwd != first + 1)
    }

    /// Orients the diagram: component `k` (in reference order) keeps its
    /// reference direction unless `flip[k]`. Crossings whose under-strand
    /// would enter at slot 2 are rotated by two slots.
    pub fn orient(&self, flip: &[bool]) -> LinkDiagram {
        let entries = self.reference_entries();
        assert_eq!(flip.len(), entries.len(), "one flag per component");
        let starts: Vec<Endpoint> = entries
            .iter()
            .zip(flip)
            .map(|(&p, &f)| if f { self.opposite(p) } else { p })
            .collect();
        self.orient_from_entries(&starts)
    }

    /// Orients the diagram so that each walk starting at one of `starts`
    /// follows the orientation; every component must be covered exactly once.
    pub(crate) fn orient_from_entries(&self, starts: &[Endpoint]) -> LinkDiagram {
        let n = self.crossings.len();
        let mut incoming = vec![[false; 4]; n];
        for &s in starts {
            for p in self.walk(s) {
                incoming[p.x()][p.s()] = true;
            }
        }
        let mut crossings = Vec::with_capacity(n);
        let mut signs = Vec::with_capacity(n);
        for (x, c) in self.crossings.iter().enumerate() {
            let inc = incoming[x];
            let (c, inc) = if inc[0] {
                (*c, inc)
            } else {
                (c.rotated(2), [inc[2], inc[3], inc[0], inc[1]])
            };
            debug_assert!(inc[0] && !inc[2] && inc[1] != inc[3]);
            crossings.push(c);
            signs.push(if inc[3] { 1 } else { -1 });
        }
        LinkDiagram::new_oriented(crossings, signs, self.unknots).expect("orientation walk is consistent")
    }

    /// The diagram oriented along reference directions.
    pub fn oriented(&self) -> LinkDiagram {
        if self.is_oriented() {
            return self.clone();
        }
        let k = self.reference_entries().len();
        self.orient(&vec![false; k])
    }

    /// All orientations up to global reversal: the first component keeps its
    /// reference direction, the others range over all flips, mask bit `k - 1`
    /// flipping component `k`. A diagram without crossings has one.
    pub fn enumerate_orientations(&self) -> Vec<LinkDiagram> {
        let k = self.reference_entries().len();
        if k == 0 {
            let mut d = self.clone();
            d.signs = Some(Vec::new());
            return vec![d];
        }
        (0..1u64 << (k - 1))
            .map(|mask| {
                let flip: Vec<bool> = (0..k).map(|c| c > 0 && mask >> (c - 1) & 1 == 1).collect();
                self.orient(&flip)
            })
            .collect()
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.signs
            .as_ref()
            .expect("writhe needs an oriented diagram")
            .iter()
            .map(|&s| s as i64)
            .sum()
    }

    /// Over- and under-strands swapped at every crossing.
    pub fn mirror(&self) -> LinkDiagram {
        match &self.signs {
            None => {
                let crossings = self.crossings.iter().map(|c| c.rotated(1)).collect();
                LinkDiagram::new(crossings, self.unknots).expect("rotation preserves validity")
            }
            Some(signs) => {
                let crossings = self
                    .crossings
                    .iter()
                    .zip(signs)
                    .map(|(c, &s)| if s > 0 { c.rotated(3) } else { c.rotated(1) })
                    .collect();
                let signs = signs.iter().map(|s| -s).collect();
                LinkDiagram::new_oriented(crossings, signs, self.unknots).expect("mirror preserves validity")
            }
        }
    }

    /// Relabels arcs consecutively along components (in reference direction),
    /// components taken in order of their first appearance in crossing order.
    pub fn relabeled(&self) -> LinkDiagram {
        let mut map = vec![0 as Label; self.arc_count()];
        let mut next = 1;
        let reference = self.reference_entries();
        let mut starts: Vec<(usize, Endpoint)> = reference
            .iter()
            .map(|&p| {
                let first = self
                    .walk(p)
                    .iter()
                    .flat_map(|q| [*q, q.across()])
                    .map(|q| q.x() * 4 + q.s())
                    .min()
                    .unwrap_or(0);
                (first, p)
            })
            .collect();
        starts.sort();
        for (_, p) in starts {
            for q in self.walk(p) {
                map[self.label(q) as usize - 1] = next;
                next += 1;
            }
        }
        self.with_labels(|l| map[l as usize - 1])
    }

    /// Applies a label permutation (must be a bijection onto 1..=arc_count).
    pub fn with_labels(&self, f: impl Fn(Label) -> Label) -> LinkDiagram {
        let crossings: Vec<Crossing> = self
            .crossings
            .iter()
            .map(|c| Crossing {
                slots: c.slots.map(&f),
            })
            .collect();
        let ends = compute_ends(&crossings).expect("label map must be a bijection");
        LinkDiagram {
            crossings,
            ends,
            unknots: self.unknots,
            signs: self.signs.clone(),
        }
    }

    /// Reorders crossings by a permutation: new crossing `i` is old `perm[i]`.
    pub fn with_crossing_order(&self, perm: &[usize]) -> LinkDiagram {
        let crossings: Vec<Crossing> = perm.iter().map(|&i| self.crossings[i]).collect();
        let signs = self.signs.as_ref().map(|s| perm.iter().map(|&i| s[i]).collect());
        LinkDiagram {
            ends: compute_ends(&crossings).expect("reordering preserves validity"),
            crossings,
            unknots: self.unknots,
            signs,
        }
    }

    /// Disjoint union; labels of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &LinkDiagram) -> LinkDiagram {
        let shift = self.arc_count() as Label;
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|c| Crossing {
            slots: c.slots.map(|l| l + shift),
        }));
        let signs = match (&self.signs, &other.signs) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        LinkDiagram {
            ends: compute_ends(&crossings).expect("union of valid diagrams"),
            crossings,
            unknots: self.unknots + other.unknots,
            signs,
        }
    }
}

fn compute_ends(crossings: &[Crossing]) -> Result<Vec<[Endpoint; 2]>, PdError> {
    let max = crossings.iter().flat_map(|c| c.slots).max().unwrap_or(0) as usize;
    if max > 4 * crossings.len() {
        return Err(PdError::Gap(max as Label));
    }
    let mut found: Vec<Vec<Endpoint>> = vec![Vec::new(); max];
    for (x, c) in crossings.iter().enumerate() {
        for (s, &l) in c.slots.iter().enumerate() {
            if l == 0 {
                return Err(PdError::ZeroLabel);
            }
            found[l as usize - 1].push(Endpoint::new(x, s));
        }
    }
    found
        .into_iter()
        .enumerate()
        .map(|(i, v)| match v.len() {
            2 => Ok([v[0], v[1]]),
            0 => Err(PdError::Gap(i as Label + 1)),
            n => Err(PdError::LabelCount {
                label: i as Label + 1,
                count: n,
            }),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> LinkDiagram {
        parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]").unwrap()
    }

    #[test]
    fn trefoil_faces_and_components() {
        let d = trefoil();
        assert_eq!(d.faces().len(), 5);
        assert!(d.is_planar());
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.components()[0].arcs, vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn natural_orientation_keeps_pd_slots() {
        let d = trefoil().oriented();
        assert_eq!(d.crossings(), trefoil().crossings());
        assert_eq!(d.signs().unwrap(), &[-1, -1, -1]);
        assert_eq!(d.writhe(), -3);
    }

    #[test]
    fn mirror_is_involution() {
        let d = trefoil();
        let m = d.mirror();
        assert_ne!(m, d);
        assert_eq!(signature(&m.mirror()), signature(&d));
        let o = d.oriented();
        assert_eq!(o.mirror().mirror(), o);
        assert_eq!(o.mirror().writhe(), 3);
    }

    #[test]
    fn kink_diagram_is_valid() {
        let d = parse_pd("PD[X[1,1,2,2]]").unwrap();
        assert_eq!(d.faces().len(), 3);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.enumerate_orientations().len(), 1);
    }

    #[test]
    fn hopf_orientations_flip_signs() {
        let d = parse_pd("PD[X[4,1,3,2],X[2,3,1,4]]").unwrap();
        let os = d.enumerate_orientations();
        assert_eq!(os.len(), 2);
        let w: Vec<i64> = os.iter().map(|o| o.writhe()).collect();
        assert_eq!(w[0], -w[1]);
        assert_eq!(w[0].abs(), 2);
    }
}
