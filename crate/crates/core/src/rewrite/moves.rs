//! Local moves on link diagrams.

use crate::diagram::{DiagramBuilder, Endpoint, Face, Label, LinkDiagram};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    R1Add,
    R1Remove,
    R2Add,
    R2Remove,
    R3,
    ThreeAdd,
    ThreeRemove,
    /// A 3-move on a twist of one or two half-twists, σ^k ↦ σ^(k∓3) on the
    /// same pair of strands (net +1 or -1 crossings).
    ThreeTwist,
}

impl MoveKind {
    pub const ALL: [MoveKind; 8] = [
        MoveKind::R1Add,
        MoveKind::R1Remove,
        MoveKind::R2Add,
        MoveKind::R2Remove,
        MoveKind::R3,
        MoveKind::ThreeAdd,
        MoveKind::ThreeRemove,
        MoveKind::ThreeTwist,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MoveKind::R1Add => "R1+",
            MoveKind::R1Remove => "R1-",
            MoveKind::R2Add => "R2+",
            MoveKind::R2Remove => "R2-",
            MoveKind::R3 => "R3",
            MoveKind::ThreeAdd => "THREE_ADD",
            MoveKind::ThreeRemove => "THREE_REMOVE",
            MoveKind::ThreeTwist => "THREE_TWIST",
        }
    }

    fn bit(self) -> u16 {
        1 << self as u16
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A set of move kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct MoveKinds(u16);

impl MoveKinds {
    pub const R3_ONLY: MoveKinds = MoveKinds(1 << MoveKind::R3 as u16);
    pub const REIDEMEISTER: MoveKinds = MoveKinds(0b11111);
    pub const ALL: MoveKinds = MoveKinds(0xff);

    pub fn of(kinds: &[MoveKind]) -> Self {
        MoveKinds(kinds.iter().fold(0, |m, k| m | k.bit()))
    }

    pub fn contains(self, k: MoveKind) -> bool {
        self.0 & k.bit() != 0
    }
}

/// An applicable move: its kind and the arcs it consumes, written with the
/// labels of the diagram it applies to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MoveSite {
    pub kind: MoveKind,
    pub location: String,
}

impl fmt::Display for MoveSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.kind, self.location)
    }
}

impl MoveSite {
    fn new(kind: MoveKind, location: String) -> Self {
        MoveSite { kind, location }
    }
}

/// Change in crossing count for a move, `None` where it depends on the site.
pub fn crossing_delta(kind: MoveKind) -> Option<i64> {
    match kind {
        MoveKind::R1Add => Some(1),
        MoveKind::R1Remove => Some(-1),
        MoveKind::R2Add => Some(2),
        MoveKind::R2Remove => Some(-2),
        MoveKind::R3 => Some(0),
        MoveKind::ThreeAdd => Some(3),
        MoveKind::ThreeRemove => Some(-3),
        MoveKind::ThreeTwist => None,
    }
}

/// Every applicable site of the requested kinds with the rewritten diagram.
pub fn enumerate_moves(d: &LinkDiagram, kinds: MoveKinds) -> Vec<(MoveSite, LinkDiagram)> {
    let faces = d.faces();
    let mut out = Vec::new();
    if kinds.contains(MoveKind::R1Remove) {
        r1_remove(d, &faces, &mut out);
    }
    if kinds.contains(MoveKind::R2Remove) {
        r2_remove(d, &faces, &mut out);
    }
    if kinds.contains(MoveKind::R3) {
        r3(d, &faces, &mut out);
    }
    if kinds.contains(MoveKind::ThreeRemove) {
        for w in twist_windows(d, 3) {
            let site = MoveSite::new(MoveKind::ThreeRemove, window_location(d, &w));
            out.push((site, replace_window(d, &w, 0)));
        }
    }
    if kinds.contains(MoveKind::ThreeTwist) {
        for j in 1..=2 {
            for w in twist_windows(d, j) {
                let site = MoveSite::new(MoveKind::ThreeTwist, window_location(d, &w));
                let k = w.sense * (j as i32 - 3);
                out.push((site, replace_window(d, &w, k)));
            }
        }
    }
    if kinds.contains(MoveKind::R1Add) {
        r1_add(d, &mut out);
    }
    if kinds.contains(MoveKind::R2Add) {
        for (sides, loc) in strand_pairs(d, &faces) {
            for signs in [[1, -1], [-1, 1]] {
                let site = MoveSite::new(MoveKind::R2Add, format!("{loc}/{}", if signs[0] > 0 { "L" } else { "R" }));
                out.push((site, insert_twist(d, sides, &signs)));
            }
        }
    }
    if kinds.contains(MoveKind::ThreeAdd) {
        for (sides, loc) in strand_pairs(d, &faces) {
            for sign in [1, -1] {
                let site = MoveSite::new(MoveKind::ThreeAdd, format!("{loc}/{}", if sign > 0 { "+" } else { "-" }));
                out.push((site, insert_twist(d, sides, &[sign; 3])));
            }
        }
    }
    if cfg!(debug_assertions) {
        for (site, r) in &out {
            debug_assert!(r.is_planar(), "{site} produced a non-planar diagram");
            if let Some(delta) = crossing_delta(site.kind) {
                debug_assert_eq!(
                    r.crossing_count() as i64,
                    d.crossing_count() as i64 + delta,
                    "{site} changed the crossing count unexpectedly"
                );
            }
        }
    }
    out
}

/// True iff the diagram has a monogon or bigon face.
pub fn has_reducing_face(d: &LinkDiagram) -> bool {
    d.faces().iter().any(|f| f.len() <= 2)
}

fn passages_removed(d: &LinkDiagram, xs: &[usize]) -> LinkDiagram {
    let mut b = DiagramBuilder::new(d);
    for &x in xs {
        let s = d.crossings()[x].slots;
        b.join(s[0], s[2]);
        b.join(s[1], s[3]);
        b.remove(x);
    }
    b.finish()
}

fn r1_remove(d: &LinkDiagram, faces: &[Face], out: &mut Vec<(MoveSite, LinkDiagram)>) {
    for f in faces.iter().filter(|f| f.len() == 1) {
        let c = f.corners[0];
        let site = MoveSite::new(MoveKind::R1Remove, d.label(c).to_string());
        out.push((site, passages_removed(d, &[c.x()])));
    }
}

fn r2_remove(d: &LinkDiagram, faces: &[Face], out: &mut Vec<(MoveSite, LinkDiagram)>) {
    for f in faces.iter().filter(|f| f.len() == 2) {
        let (u, v) = (f.corners[0], f.corners[1]);
        if u.x() == v.x() || (u.s() + 1) % 2 != v.s() % 2 {
            continue;
        }
        let site = MoveSite::new(MoveKind::R2Remove, format!("{},{}", d.label(u), d.label(v)));
        out.push((site, passages_removed(d, &[u.x(), v.x()])));
    }
}

fn r1_add(d: &LinkDiagram, out: &mut Vec<(MoveSite, LinkDiagram)>) {
    for e in 1..=d.arc_count() as Label {
        let [p, q] = d.ends(e);
        for v in 0..4 {
            let mut b = DiagramBuilder::new(d);
            let (n1, n2) = (b.fresh(), b.fresh());
            let (slots, e_slot) = match v {
                0 => ([n1, n1, e, n2], 2),
                1 => ([n1, n1, n2, e], 3),
                2 => ([e, n1, n1, n2], 0),
                _ => ([n2, n1, n1, e], 3),
            };
            b.set(q, n2);
            let x = b.add(slots);
            if d.is_oriented() {
                b.hint(x, e_slot, Some(!d.is_incoming(p)));
            }
            out.push((MoveSite::new(MoveKind::R1Add, format!("{e}/{v}")), b.finish()));
        }
    }
    if d.unknotted_extras() > 0 {
        for v in 0..2 {
            let mut b = DiagramBuilder::new(d);
            let (a, c) = (b.fresh(), b.fresh());
            b.take_unknot();
            b.add(if v == 0 { [a, a, c, c] } else { [c, a, a, c] });
            out.push((MoveSite::new(MoveKind::R1Add, format!("O/{v}")), b.finish()));
        }
    }
}

/// One strand of a two-strand insertion: either the arc leaving corner
/// `(x, s)` of a face (walked with the face on its right), an unknotted
/// circle, or (on both sides at once) two segments of the same circle.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Side {
    Arc(Endpoint),
    Circle,
    SameCircle,
}

/// Pairs of strands bounding a common face, plus pairings with circles.
fn strand_pairs(d: &LinkDiagram, faces: &[Face]) -> Vec<([Side; 2], String)> {
    let mut out = Vec::new();
    for f in faces {
        for i in 0..f.len() {
            for j in i + 1..f.len() {
                let (a, b) = (f.corners[i], f.corners[j]);
                let (la, lb) = (lbl(d, a), lbl(d, b));
                if la == lb {
                    continue;
                }
                out.push(([Side::Arc(a), Side::Arc(b)], format!("{la},{lb}")));
            }
        }
    }
    if d.unknotted_extras() > 0 {
        for f in faces {
            for &c in &f.corners {
                out.push(([Side::Arc(c), Side::Circle], format!("{},O", lbl(d, c))));
            }
        }
        if d.unknotted_extras() > 1 {
            out.push(([Side::Circle, Side::Circle], "O,O".into()));
        }
        out.push(([Side::SameCircle, Side::SameCircle], "O".into()));
    }
    out
}

fn lbl(d: &LinkDiagram, corner: Endpoint) -> Label {
    d.label(Endpoint::new(corner.x(), corner.s() + 1))
}

/// Inserts a braid on two strands between the given sides of a common face.
/// Crossing `k` is a positive or negative half-twist per `signs[k]`; the
/// left strand enters at bottom-left and the right strand at bottom-right.
pub(crate) fn insert_twist(d: &LinkDiagram, sides: [Side; 2], signs: &[i8]) -> LinkDiagram {
    let mut b = DiagramBuilder::new(d);
    let mut hints = [None, None];
    // Left side runs upward: its tail is at the bottom.
    let (sw, nw) = match sides[0] {
        Side::Arc(c) => {
            let tail = Endpoint::new(c.x(), c.s() + 1);
            let head = d.opposite(tail);
            let e = d.label(tail);
            let e2 = b.fresh();
            b.set(head, e2);
            if d.is_oriented() {
                hints[0] = Some(!d.is_incoming(tail));
            }
            (e, e2)
        }
        Side::Circle => {
            b.take_unknot();
            let c = b.fresh();
            (c, c)
        }
        Side::SameCircle => {
            // Two segments of one circle: caps join the strands below and above.
            b.take_unknot();
            let (lo, hi) = (b.fresh(), b.fresh());
            (lo, hi)
        }
    };
    // Right side runs downward: its tail is at the top.
    let (se, ne) = match sides[1] {
        Side::Arc(c) => {
            let tail = Endpoint::new(c.x(), c.s() + 1);
            let head = d.opposite(tail);
            let f = d.label(tail);
            let f2 = b.fresh();
            b.set(head, f2);
            if d.is_oriented() {
                hints[1] = Some(!d.is_incoming(head));
            }
            (f2, f)
        }
        Side::Circle => {
            b.take_unknot();
            let c = b.fresh();
            (c, c)
        }
        Side::SameCircle => (sw, nw),
    };
    build_chain(&mut b, [sw, se, ne, nw], signs, hints);
    b.finish()
}

/// Builds the two-strand braid `signs` with bottom labels `sw, se` and top
/// labels `ne, nw`. With no crossings the strands are joined straight up.
fn build_chain(b: &mut DiagramBuilder, [sw, se, ne, nw]: [Label; 4], signs: &[i8], hints: [Option<bool>; 2]) {
    if signs.is_empty() {
        b.join(sw, nw);
        b.join(se, ne);
        return;
    }
    let (mut bl, mut br) = (sw, se);
    for (k, &s) in signs.iter().enumerate() {
        let last = k + 1 == signs.len();
        let (tl, tr) = if last { (nw, ne) } else { (b.fresh(), b.fresh()) };
        let (slots, bl_slot, br_slot) = if s > 0 { ([br, tr, tl, bl], 3, 0) } else { ([bl, br, tr, tl], 0, 1) };
        let x = b.add(slots);
        if k == 0 {
            // Hints describe the strand direction at the bottom slots.
            b.hint(x, bl_slot, hints[0]);
            b.hint(x, br_slot, hints[1]);
        }
        bl = tl;
        br = tr;
    }
}

/// A run of `j` consecutive same-sense half-twists on two strands.
#[derive(Clone, Debug)]
pub(crate) struct TwistWindow {
    crossings: Vec<usize>,
    /// Slot of the bottom-left strand at each crossing.
    axes: Vec<usize>,
    sense: i32,
}

fn twist_windows(d: &LinkDiagram, j: usize) -> Vec<TwistWindow> {
    let mut out = Vec::new();
    for x in 0..d.crossing_count() {
        'axis: for s in 0..2usize {
            let sense = if s % 2 == 1 { 1 } else { -1 };
            let mut crossings = vec![x];
            let mut axes = vec![s];
            while crossings.len() < j {
                let (c, a) = (*crossings.last().unwrap(), *axes.last().unwrap());
                let ne = d.opposite(Endpoint::new(c, a + 2));
                let nw = d.opposite(Endpoint::new(c, a + 3));
                let y = ne.x();
                if nw.x() != y || ne.s() != (nw.s() + 1) % 4 || crossings.contains(&y) {
                    continue 'axis;
                }
                let ys = nw.s();
                if (if ys % 2 == 1 { 1 } else { -1 }) != sense {
                    continue 'axis;
                }
                crossings.push(y);
                axes.push(ys);
            }
            out.push(TwistWindow { crossings, axes, sense });
        }
    }
    out
}

fn window_location(d: &LinkDiagram, w: &TwistWindow) -> String {
    let x = w.crossings[0];
    let a = w.axes[0];
    format!(
        "{},{}x{}",
        d.label(Endpoint::new(x, a)),
        d.label(Endpoint::new(x, a + 1)),
        w.crossings.len()
    )
}

/// Replaces a twist window by `k` half-twists (sign of `k` gives the sense).
fn replace_window(d: &LinkDiagram, w: &TwistWindow, k: i32) -> LinkDiagram {
    let mut b = DiagramBuilder::new(d);
    let (x0, a0) = (w.crossings[0], w.axes[0]);
    let (x1, a1) = (*w.crossings.last().unwrap(), *w.axes.last().unwrap());
    let sw_p = Endpoint::new(x0, a0);
    let se_p = Endpoint::new(x0, a0 + 1);
    let ne_p = Endpoint::new(x1, a1 + 2);
    let nw_p = Endpoint::new(x1, a1 + 3);
    let labels = [d.label(sw_p), d.label(se_p), d.label(ne_p), d.label(nw_p)];
    let hints = if d.is_oriented() {
        [Some(d.is_incoming(sw_p)), Some(d.is_incoming(se_p))]
    } else {
        [None, None]
    };
    for &x in &w.crossings {
        b.remove(x);
    }
    let signs = vec![k.signum() as i8; k.unsigned_abs() as usize];
    build_chain(&mut b, labels, &signs, hints);
    b.finish()
}

fn r3(d: &LinkDiagram, faces: &[Face], out: &mut Vec<(MoveSite, LinkDiagram)>) {
    for f in faces.iter().filter(|f| f.len() == 3) {
        let [u, v, w] = [f.corners[0], f.corners[1], f.corners[2]];
        if u.x() == v.x() || v.x() == w.x() || u.x() == w.x() {
            continue;
        }
        if let Some(r) = r3_at(d, u, v, w) {
            let loc = format!("{},{},{}", lbl(d, u), lbl(d, v), lbl(d, w));
            out.push((MoveSite::new(MoveKind::R3, loc), r));
        }
    }
}

/// R3 on the triangle with corners `u, v, w` in face order, modelled as
/// σ1^a σ2^b σ1^c ↦ σ2^c σ1^b σ2^a with `u` the bottom σ1, `w` the σ2 and
/// `v` the top σ1.
pub(crate) fn r3_at(d: &LinkDiagram, u: Endpoint, v: Endpoint, w: Endpoint) -> Option<LinkDiagram> {
    let (c1, s) = (u.x(), u.s());
    let (c3, t) = (v.x(), v.s());
    let (c2, r) = (w.x(), w.s());
    let p = |x: usize, k: usize| Endpoint::new(x, k);
    // Braid roles of each slot.
    let c1_bl = p(c1, s + 2);
    let c1_br = p(c1, s + 3);
    let c3_bl = p(c3, t);
    let c3_tr = p(c3, t + 2);
    let c3_tl = p(c3, t + 3);
    let c2_bl = p(c2, r + 1);
    let c2_br = p(c2, r + 2);
    let c2_tr = p(c2, r + 3);
    let sign = |bl: Endpoint| if bl.is_over() { 1 } else { -1 };
    let (a, bb, c) = (sign(c1_bl), sign(c2_bl), sign(c3_bl));
    if a == c && bb == -a {
        return None;
    }
    let mut b = DiagramBuilder::new(d);
    let outer = [c1_bl, c1_br, c2_br, c3_tl, c3_tr, c2_tr];
    let labels = outer.map(|q| d.label(q));
    let hint = |q: Endpoint| if d.is_oriented() { Some(d.is_incoming(q)) } else { None };
    for x in [c1, c2, c3] {
        b.remove(x);
    }
    let (i1, i2, i3) = (b.fresh(), b.fresh(), b.fresh());
    let [bot1, bot2, bot3, top1, top2, top3] = labels;
    let mut put = |sg: i32, bl: Label, br: Label, tl: Label, tr: Label, hints: [(usize, Option<bool>); 2]| {
        let (slots, pos) = if sg > 0 {
            ([br, tr, tl, bl], [3, 0, 2, 1])
        } else {
            ([bl, br, tr, tl], [0, 1, 3, 2])
        };
        let x = b.add(slots);
        for (role, h) in hints {
            b.hint(x, pos[role], h);
        }
    };
    // Roles: 0 = BL, 1 = BR, 2 = TL, 3 = TR.
    put(c, bot2, bot3, i1, i2, [(0, hint(c1_br)), (1, hint(c2_br))]);
    put(bb, bot1, i1, top1, i3, [(0, hint(c1_bl)), (2, hint(c3_tl))]);
    put(a, i3, i2, top2, top3, [(2, hint(c3_tr)), (3, hint(c2_tr))]);
    Some(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{braid_closure, parse_braid};
    use crate::diagram::{parse_pd, signature};

    fn closure(s: &str) -> LinkDiagram {
        braid_closure(&parse_braid(s).unwrap())
    }

    fn kinds_of(moves: &[(MoveSite, LinkDiagram)]) -> Vec<MoveKind> {
        let mut k: Vec<MoveKind> = moves.iter().map(|(s, _)| s.kind).collect();
        k.sort();
        k.dedup();
        k
    }

    #[test]
    fn three_remove_on_trefoil_closure() {
        let d = closure("n=2 1 1 1");
        let moves = enumerate_moves(&d, MoveKinds::of(&[MoveKind::ThreeRemove]));
        assert!(!moves.is_empty());
        for (_, r) in &moves {
            assert_eq!(r.crossing_count(), 0);
            assert_eq!(r.unknotted_extras(), 2);
        }
    }

    #[test]
    fn unknot_has_only_additions() {
        let moves = enumerate_moves(&LinkDiagram::unlink(1), MoveKinds::ALL);
        assert_eq!(kinds_of(&moves), vec![MoveKind::R1Add, MoveKind::R2Add, MoveKind::ThreeAdd]);
    }

    #[test]
    fn r2_round_trip() {
        let d = closure("n=3 1 2 1");
        let sig = signature(&d);
        for (site, up) in enumerate_moves(&d, MoveKinds::of(&[MoveKind::R2Add])) {
            assert_eq!(up.crossing_count(), 5, "{site}");
            let downs = enumerate_moves(&up, MoveKinds::of(&[MoveKind::R2Remove]));
            assert!(downs.iter().any(|(_, r)| signature(r) == sig), "{site} cannot be undone");
        }
    }

    #[test]
    fn r2_add_keeps_component_orientations() {
        let pd = "PD[X[1,2,3,4],X[3,5,6,7],X[6,8,9,7],X[4,9,10,11],X[8,12,13,10],X[12,5,14,13],X[14,2,1,11]]";
        for d in parse_pd(pd).unwrap().enumerate_orientations() {
            let j = crate::invariants::jones(&d).unwrap();
            for (site, up) in enumerate_moves(&d, MoveKinds::of(&[MoveKind::R2Add])) {
                assert_eq!(up.writhe(), d.writhe(), "{site}");
                assert_eq!(crate::invariants::jones(&up).unwrap(), j, "{site}");
            }
        }
    }

    #[test]
    fn r1_round_trip() {
        let d = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]").unwrap();
        let sig = signature(&d);
        let ups = enumerate_moves(&d, MoveKinds::of(&[MoveKind::R1Add]));
        assert_eq!(ups.len(), 24);
        for (site, up) in ups {
            let downs = enumerate_moves(&up, MoveKinds::of(&[MoveKind::R1Remove]));
            assert!(downs.iter().any(|(_, r)| signature(r) == sig), "{site} cannot be undone");
        }
    }

    #[test]
    fn r3_is_an_involution_on_the_triangle() {
        let d = closure("n=3 1 2 1");
        let moves = enumerate_moves(&d, MoveKinds::R3_ONLY);
        assert!(!moves.is_empty());
        let sig = signature(&d);
        for (site, r) in moves {
            assert_eq!(r.crossing_count(), 3);
            let back = enumerate_moves(&r, MoveKinds::R3_ONLY);
            assert!(back.iter().any(|(_, b)| signature(b) == sig), "{site} cannot be undone");
        }
        // An alternating triangle admits no slide.
        let alt = closure("n=3 1 -2 1");
        assert!(enumerate_moves(&alt, MoveKinds::R3_ONLY).is_empty());
    }

    #[test]
    fn twist_moves_change_counts() {
        let d = closure("n=2 1 1");
        for (site, r) in enumerate_moves(&d, MoveKinds::of(&[MoveKind::ThreeTwist])) {
            assert!(r.crossing_count() == 1 || r.crossing_count() == 3, "{site}");
        }
    }

    #[test]
    fn reducing_faces() {
        assert!(has_reducing_face(&closure("n=2 1 1 1")));
        assert!(has_reducing_face(&parse_pd("PD[X[1,1,2,2]]").unwrap()));
        // Octahedral diagram: every face is a triangle.
        assert!(!has_reducing_face(&closure("n=3 1 -2 1 -2 1 -2")));
        assert!(has_reducing_face(&closure("n=3 1 -2 1 -2")));
    }
}
