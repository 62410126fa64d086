//! Local surgery on PD codes.
//!
//! Moves are expressed as edits to a copy of the crossing list: crossings are
//! removed or added, slot labels are replaced by fresh labels, and labels are
//! joined when the strands they carry are spliced together. `finish` resolves
//! the joins, turns closed spliced loops into unknotted circles, compacts
//! labels and, for oriented inputs, re-derives orientation from the direction
//! hints of slots whose strand direction is known.

use super::{Crossing, Endpoint, Label, LinkDiagram};

pub(crate) struct DiagramBuilder {
    slots: Vec<Option<[Label; 4]>>,
    hints: Vec<[Option<bool>; 4]>,
    next: Label,
    unknots: u32,
    joins: Vec<(Label, Label)>,
    oriented: bool,
}

impl DiagramBuilder {
    pub fn new(d: &LinkDiagram) -> Self {
        let hints = (0..d.crossing_count())
            .map(|x| {
                if d.is_oriented() {
                    [0, 1, 2, 3].map(|s| Some(d.is_incoming(Endpoint::new(x, s))))
                } else {
                    [None; 4]
                }
            })
            .collect();
        DiagramBuilder {
            slots: d.crossings().iter().map(|c| Some(c.slots)).collect(),
            hints,
            next: d.arc_count() as Label + 1,
            unknots: d.unknotted_extras(),
            joins: Vec::new(),
            oriented: d.is_oriented(),
        }
    }

    pub fn fresh(&mut self) -> Label {
        self.next += 1;
        self.next - 1
    }

    pub fn set(&mut self, p: Endpoint, label: Label) {
        self.slots[p.x()].as_mut().expect("crossing was removed")[p.s()] = label;
    }

    pub fn remove(&mut self, x: usize) {
        self.slots[x] = None;
    }

    pub fn add(&mut self, slots: [Label; 4]) -> usize {
        self.slots.push(Some(slots));
        self.hints.push([None; 4]);
        self.slots.len() - 1
    }

    /// Records whether the strand at slot `s` of crossing `x` is incoming.
    pub fn hint(&mut self, x: usize, s: usize, incoming: Option<bool>) {
        if let Some(v) = incoming {
            self.hints[x][s] = Some(v);
            self.hints[x][(s + 2) % 4] = Some(!v);
        }
    }

    pub fn join(&mut self, a: Label, b: Label) {
        self.joins.push((a, b));
    }

    pub fn take_unknot(&mut self) {
        self.unknots = self.unknots.checked_sub(1).expect("no unknotted circle to use");
    }

    pub fn finish(self) -> LinkDiagram {
        let n = self.next as usize;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in &self.joins {
            let ra = find(&mut parent, a as usize);
            let rb = find(&mut parent, b as usize);
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut occurs = vec![0u32; n];
        let mut kept = Vec::new();
        let mut kept_hints = Vec::new();
        for (c, h) in self.slots.iter().zip(&self.hints) {
            if let Some(c) = c {
                let c = c.map(|l| find(&mut parent, l as usize) as Label);
                for l in c {
                    occurs[l as usize] += 1;
                }
                kept.push(c);
                kept_hints.push(*h);
            }
        }
        let mut loops = 0;
        let mut counted = vec![false; n];
        for &(a, _) in &self.joins {
            let r = find(&mut parent, a as usize);
            if occurs[r] == 0 && !counted[r] {
                counted[r] = true;
                loops += 1;
            }
        }
        let mut map = vec![0 as Label; n];
        let mut next = 1;
        let crossings: Vec<Crossing> = kept
            .iter()
            .map(|c| Crossing {
                slots: c.map(|l| {
                    if map[l as usize] == 0 {
                        map[l as usize] = next;
                        next += 1;
                    }
                    map[l as usize]
                }),
            })
            .collect();
        let d = LinkDiagram::new(crossings, self.unknots + loops).expect("surgery produced an invalid PD code");
        debug_assert!(d.is_planar(), "surgery produced a non-planar diagram: {d:?}");
        if !self.oriented {
            return d.relabeled();
        }
        // Each component follows the first hint met along its reference walk;
        // components without hints keep the reference direction.
        let starts: Vec<Endpoint> = d
            .reference_entries()
            .into_iter()
            .map(|p| {
                let agrees = d.walk(p).iter().find_map(|q| kept_hints[q.x()][q.s()]);
                if agrees == Some(false) {
                    d.opposite(p)
                } else {
                    p
                }
            })
            .collect();
        d.orient_from_entries(&starts).relabeled()
    }
}
