use crate::diagram::LinkDiagram;

/// Seifert circles of an oriented diagram: `circle[label - 1]` is the circle
/// carrying each arc. Circles are numbered by smallest arc label; unknotted
/// extras are counted in `count` after the numbered ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertPartition {
    pub circle: Vec<usize>,
    pub count: usize,
}

/// Smooths every crossing along the orientation: the incoming under-strand
/// joins the outgoing over-strand and vice versa.
pub fn seifert_partition(d: &LinkDiagram) -> SeifertPartition {
    assert!(d.is_oriented(), "Seifert circles need an oriented diagram");
    let m = d.arc_count();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let signs = d.signs().unwrap();
    for (x, c) in d.crossings().iter().enumerate() {
        let (over_in, over_out) = if signs[x] > 0 { (3, 1) } else { (1, 3) };
        for (a, b) in [(0, over_out), (over_in, 2)] {
            let ra = find(&mut parent, c.slots[a] as usize - 1);
            let rb = find(&mut parent, c.slots[b] as usize - 1);
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut id = vec![usize::MAX; m];
    let mut count = 0;
    let circle: Vec<usize> = (0..m)
        .map(|i| {
            let r = find(&mut parent, i);
            if id[r] == usize::MAX {
                id[r] = count;
                count += 1;
            }
            id[r]
        })
        .collect();
    SeifertPartition {
        circle,
        count: count + d.unknotted_extras() as usize,
    }
}

/// Number of Seifert circles of an oriented diagram.
pub fn seifert_circles(d: &LinkDiagram) -> usize {
    seifert_partition(d).count
}

/// Minimum Seifert circle count over all orientations (up to global reversal).
pub fn min_seifert_over_orientations(d: &LinkDiagram) -> usize {
    d.enumerate_orientations()
        .iter()
        .map(seifert_circles)
        .min()
        .expect("at least one orientation")
}

/// The first orientation, in enumeration order, with the fewest Seifert
/// circles, and that count.
pub fn min_seifert_orientation(d: &LinkDiagram) -> (usize, LinkDiagram) {
    let mut best: Option<(usize, LinkDiagram)> = None;
    for o in d.enumerate_orientations() {
        let k = seifert_circles(&o);
        if best.as_ref().is_none_or(|(b, _)| k < *b) {
            best = Some((k, o));
        }
    }
    best.expect("at least one orientation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{braid_closure, parse_braid};
    use crate::diagram::parse_pd;

    #[test]
    fn closures_have_index_many_circles() {
        let d = braid_closure(&parse_braid("n=2 1 1 1").unwrap());
        assert_eq!(seifert_circles(&d), 2);
        let chen = parse_braid("n=5 2 -1 2 3 -4 2 -1 2 3 -4 2 -1 2 3 -4 2 -1 2 3 -4").unwrap();
        assert_eq!(seifert_circles(&braid_closure(&chen)), 5);
        assert_eq!(seifert_circles(&braid_closure(&parse_braid("n=4 1").unwrap())), 4);
    }

    #[test]
    fn minimum_over_orientations() {
        let tref = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]").unwrap();
        assert_eq!(min_seifert_over_orientations(&tref), 2);
        assert_eq!(min_seifert_over_orientations(&LinkDiagram::unlink(3)), 3);
        // Two circles pushed across each other by an R2 move.
        let clasp = braid_closure(&parse_braid("n=2 1 -1").unwrap()).unoriented();
        assert_eq!(min_seifert_over_orientations(&clasp), 2);
    }
}
