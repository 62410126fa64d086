use super::{CosetTable, GroupError, Word};

/// Conjugacy classes of a group given by its regular coset table.
#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    /// Class id of every element (coset).
    pub class_of: Vec<u32>,
    /// Smallest element of each class, in class id order.
    pub representatives: Vec<u32>,
    /// Breadth-first word reaching each representative from the identity.
    pub representative_words: Vec<Word>,
}

impl ConjugacyClasses {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut s = vec![0; self.count()];
        for &c in &self.class_of {
            s[c as usize] += 1;
        }
        s
    }
}

/// Spanning tree of the Cayley graph from the identity: parent coset and
/// the letter leading from it.
fn spanning_tree(t: &CosetTable) -> (Vec<u32>, Vec<(u32, i32)>) {
    let n = t.index();
    let mut parent = vec![(u32::MAX, 0i32); n];
    let mut order = vec![0u32];
    parent[0] = (0, 0);
    let mut k = 0;
    while k < order.len() {
        let c = order[k];
        for g in 1..=t.generator_count() as i32 {
            for l in [g, -g] {
                let d = t.act(c, l);
                if parent[d as usize].0 == u32::MAX {
                    parent[d as usize] = (c, l);
                    order.push(d);
                }
            }
        }
        k += 1;
    }
    (order, parent)
}

/// Left multiplication by the element `h` (given as a coset): `L_h(c)` is the
/// coset of `h·g_c`. It commutes with the right action, so it is determined
/// by `L_h(0) = h` along the spanning tree.
fn left_mult(t: &CosetTable, order: &[u32], parent: &[(u32, i32)], h: u32) -> Vec<u32> {
    let mut l = vec![0u32; t.index()];
    l[0] = h;
    for &c in &order[1..] {
        let (p, x) = parent[c as usize];
        l[c as usize] = t.act(l[p as usize], x);
    }
    l
}

fn word_to(parent: &[(u32, i32)], mut c: u32) -> Word {
    let mut w = Vec::new();
    while c != 0 {
        let (p, x) = parent[c as usize];
        w.push(x);
        c = p;
    }
    w.reverse();
    w
}

/// Orbits of the group acting on itself by conjugation.
pub fn conjugacy_classes(t: &CosetTable) -> Result<ConjugacyClasses, GroupError> {
    if !t.is_regular() {
        return Err(GroupError::NotRegular);
    }
    let n = t.index();
    let (order, parent) = spanning_tree(t);
    // Conjugation by a generator s: c ↦ s⁻¹ g_c s.
    let conj: Vec<Vec<u32>> = (1..=t.generator_count() as i32)
        .map(|s| {
            let l = left_mult(t, &order, &parent, t.act(0, -s));
            l.iter().map(|&c| t.act(c, s)).collect()
        })
        .collect();
    let mut class_of = vec![u32::MAX; n];
    let mut representatives = Vec::new();
    let mut stack = Vec::new();
    for start in 0..n as u32 {
        if class_of[start as usize] != u32::MAX {
            continue;
        }
        let id = representatives.len() as u32;
        representatives.push(start);
        class_of[start as usize] = id;
        stack.push(start);
        while let Some(c) = stack.pop() {
            for m in &conj {
                let d = m[c as usize];
                if class_of[d as usize] == u32::MAX {
                    class_of[d as usize] = id;
                    stack.push(d);
                }
            }
        }
    }
    let representative_words = representatives.iter().map(|&r| word_to(&parent, r)).collect();
    Ok(ConjugacyClasses {
        class_of,
        representatives,
        representative_words,
    })
}

/// Whether two words are conjugate, by breadth-first search over the
/// conjugation orbit of `u` with early exit on `v`.
pub fn are_conjugate(t: &CosetTable, u: &[i32], v: &[i32]) -> Result<bool, GroupError> {
    if !t.is_regular() {
        return Err(GroupError::NotRegular);
    }
    let (cu, cv) = (t.act_word(0, u), t.act_word(0, v));
    if cu == cv {
        return Ok(true);
    }
    let (order, parent) = spanning_tree(t);
    let conj: Vec<Vec<u32>> = (1..=t.generator_count() as i32)
        .map(|s| {
            let l = left_mult(t, &order, &parent, t.act(0, -s));
            l.iter().map(|&c| t.act(c, s)).collect()
        })
        .collect();
    let mut seen = vec![false; t.index()];
    seen[cu as usize] = true;
    let mut queue = std::collections::VecDeque::from([cu]);
    while let Some(c) = queue.pop_front() {
        for m in &conj {
            let d = m[c as usize];
            if d == cv {
                return Ok(true);
            }
            if !seen[d as usize] {
                seen[d as usize] = true;
                queue.push_back(d);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{braid_quotient_presentation, coset_enumeration, EnumerationLimits};

    fn table(n: usize) -> CosetTable {
        coset_enumeration(&braid_quotient_presentation(n), &[], &EnumerationLimits::default()).unwrap()
    }

    #[test]
    fn cyclic_of_order_three() {
        let c = conjugacy_classes(&table(2)).unwrap();
        assert_eq!(c.count(), 3);
    }

    #[test]
    fn c3_classes() {
        let t = table(3);
        let c = conjugacy_classes(&t).unwrap();
        assert_eq!(c.class_sizes().iter().sum::<usize>(), 24);
        for (w, &r) in c.representative_words.iter().zip(&c.representatives) {
            assert_eq!(t.act_word(0, w), r);
        }
        // σ1 and σ2 are conjugate by the braid relation; σ1 and σ1⁻¹ are not.
        assert!(are_conjugate(&t, &[1], &[2]).unwrap());
        assert!(!are_conjugate(&t, &[1], &[-1]).unwrap());
        assert_eq!(
            are_conjugate(&t, &[1, 2], &[2, 1]).unwrap(),
            c.class_of[t.act_word(0, &[1, 2]) as usize] == c.class_of[t.act_word(0, &[2, 1]) as usize]
        );
    }
}
