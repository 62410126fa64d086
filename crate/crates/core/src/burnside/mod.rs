//! Core groups of diagrams, Fox 3-colorings and third Burnside groups.
//!
//! The core group has one generator per arc (over-passes do not break an
//! arc) and the relation `b a⁻¹ b c⁻¹` at each crossing with over-arc `b`
//! and under-arcs `a`, `c`. Its quotient by all cubes, after one arc is set
//! to the identity, is a quotient of `B(r,3)`; its order is found by graded
//! linear algebra over GF(3).

mod closure;
mod e3;

pub use closure::{normal_closure, EchelonBasis, GradedSubspace};
pub use e3::{e3_multiply, ExponentThreeElement, Layout};

use crate::diagram::LinkDiagram;
use crate::groups::{Presentation, Word};
use thiserror::Error;

/// Largest reduced rank accepted by [`burnside3_order`].
pub const MAX_BURNSIDE_RANK: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BurnsideError {
    #[error("elements of B(r,3) have ranks {0} and {1}")]
    RankMismatch(usize, usize),
    #[error("{0} generators exceed the limit of {MAX_BURNSIDE_RANK}")]
    RankTooLarge(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreGroupPresentation {
    pub presentation: Presentation,
    /// Generator of each arc label (`arc_of_label[label - 1]`), `None` for
    /// the arc removed in the reduced form.
    pub arc_of_label: Vec<Option<usize>>,
    pub reduced: bool,
}

/// Arc id of each PD label, numbered by smallest label; crossingless
/// components get ids after those.
fn arcs(d: &LinkDiagram) -> (Vec<usize>, usize) {
    let m = d.arc_count();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for c in d.crossings() {
        let (a, b) = (find(&mut parent, c.slots[1] as usize - 1), find(&mut parent, c.slots[3] as usize - 1));
        parent[a.max(b)] = a.min(b);
    }
    let mut id = vec![usize::MAX; m];
    let mut count = 0;
    let of: Vec<usize> = (0..m)
        .map(|l| {
            let r = find(&mut parent, l);
            if id[r] == usize::MAX {
                id[r] = count;
                count += 1;
            }
            id[r]
        })
        .collect();
    (of, count + d.unknotted_extras() as usize)
}

/// Core group presentation; the reduced form drops arc 0 (the arc with
/// the smallest label).
pub fn core_presentation(d: &LinkDiagram, reduced: bool) -> CoreGroupPresentation {
    let (of, count) = arcs(d);
    let shift = usize::from(reduced);
    let gen = |arc: usize| -> Option<usize> { (arc >= shift).then(|| arc - shift) };
    let letter = |label: u32, sign: i32| -> Option<i32> { gen(of[label as usize - 1]).map(|g| sign * (g as i32 + 1)) };
    let relators: Vec<Word> = d
        .crossings()
        .iter()
        .map(|c| {
            let [a, b, cc, _] = c.slots;
            [letter(b, 1), letter(a, -1), letter(b, 1), letter(cc, -1)]
                .into_iter()
                .flatten()
                .collect()
        })
        .collect();
    CoreGroupPresentation {
        presentation: Presentation::new(count.saturating_sub(shift), relators)
            .expect("letters index arcs"),
        arc_of_label: of.iter().map(|&a| gen(a)).collect(),
        reduced,
    }
}

/// Dimension over GF(3) of the Fox coloring space `{2b − a − c = 0}`.
pub fn fox_coloring_dim(d: &LinkDiagram) -> usize {
    let (of, count) = arcs(d);
    let mut basis = EchelonBasis::new(count);
    for c in d.crossings() {
        let [a, b, cc, _] = c.slots.map(|l| of[l as usize - 1]);
        let mut row = vec![0u8; count];
        row[b] = (row[b] + 2) % 3;
        row[a] = (row[a] + 2) % 3;
        row[cc] = (row[cc] + 2) % 3;
        basis.insert(row);
    }
    count - basis.dim()
}

/// `|𝓑₃(D)| = 3^exponent` with the layer dimensions of the quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BurnsideOrder {
    pub exponent: usize,
    pub layer_dims: [usize; 3],
}

pub fn burnside3_order(d: &LinkDiagram) -> Result<BurnsideOrder, BurnsideError> {
    let core = core_presentation(d, true);
    let r = core.presentation.generator_count();
    if r > MAX_BURNSIDE_RANK {
        return Err(BurnsideError::RankTooLarge(r));
    }
    let layout = Layout::new(r);
    let images: Vec<ExponentThreeElement> = core.presentation.relators().iter().map(|w| layout.evaluate(w)).collect();
    let n = normal_closure(r, &images);
    let full = [r, e3::pairs(r), e3::triples(r)];
    let nd = n.layer_dims();
    let layer_dims = [full[0] - nd[0], full[1] - nd[1], full[2] - nd[2]];
    Ok(BurnsideOrder {
        exponent: layer_dims.iter().sum(),
        layer_dims,
    })
}

/// `r + C(r,2) + C(r,3)`, the exponent of `|B(r,3)|`.
pub fn free_burnside_exponent(r: usize) -> usize {
    r + e3::pairs(r) + e3::triples(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{braid_closure, parse_braid};
    use crate::diagram::parse_pd;

    #[test]
    fn presentations() {
        let t = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]").unwrap();
        let p = core_presentation(&t, false);
        assert_eq!(p.presentation.generator_count(), 3);
        assert_eq!(p.presentation.relators().len(), 3);
        assert_eq!(core_presentation(&t, true).presentation.generator_count(), 2);
        let u = core_presentation(&LinkDiagram::unlink(1), false);
        assert_eq!((u.presentation.generator_count(), u.presentation.relators().len()), (1, 0));
        let chen = braid_closure(&parse_braid("n=5 2 -1 2 3 -4 2 -1 2 3 -4 2 -1 2 3 -4 2 -1 2 3 -4").unwrap());
        let c = core_presentation(&chen, true);
        assert_eq!((c.presentation.generator_count(), c.presentation.relators().len()), (19, 20));
    }

    #[test]
    fn colorings() {
        assert_eq!(fox_coloring_dim(&LinkDiagram::unlink(1)), 1);
        assert_eq!(fox_coloring_dim(&LinkDiagram::unlink(3)), 3);
        let t = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]").unwrap();
        assert_eq!(fox_coloring_dim(&t), 2);
        let fig8 = parse_pd("PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]").unwrap();
        assert_eq!(fox_coloring_dim(&fig8), 1);
    }

    #[test]
    fn small_orders() {
        for k in 1..=5 {
            let e = burnside3_order(&LinkDiagram::unlink(k)).unwrap().exponent;
            assert_eq!(e, free_burnside_exponent(k as usize - 1));
        }
        let t = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]").unwrap();
        assert_eq!(burnside3_order(&t).unwrap().exponent, 1);
    }
}
