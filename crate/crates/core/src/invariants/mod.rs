//! Kauffman bracket and Jones polynomial.
//!
//! Polynomials are stored in the bracket variable `A`; the Jones variable is
//! `t = A^-4`, so Jones polynomials of links with an even number of
//! components have half-integer `t` exponents.

mod poly;

pub use poly::{LaurentPolynomial, PolyParseError};

use crate::diagram::LinkDiagram;
use crate::parallel::Exec;
use thiserror::Error;

/// Largest crossing count accepted by the state sum.
pub const MAX_BRACKET_CROSSINGS: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("{0} crossings exceed the state-sum bound of {MAX_BRACKET_CROSSINGS}")]
    TooManyCrossings(usize),
    #[error("diagram is not oriented")]
    NotOriented,
}

/// Kauffman bracket normalized so the crossingless unknot is 1.
pub fn kauffman_bracket(d: &LinkDiagram) -> Result<LaurentPolynomial, InvariantError> {
    kauffman_bracket_with(d, Exec::default())
}

/// State sum over all `2^n` smoothings. At a crossing `X[a,b,c,d]` the
/// A-smoothing joins `a` with `b` and `c` with `d`.
pub fn kauffman_bracket_with(d: &LinkDiagram, exec: Exec) -> Result<LaurentPolynomial, InvariantError> {
    let n = d.crossing_count();
    if n > MAX_BRACKET_CROSSINGS {
        return Err(InvariantError::TooManyCrossings(n));
    }
    let m = d.arc_count();
    let pairs: Vec<[u8; 4]> = d
        .crossings()
        .iter()
        .map(|c| c.slots.map(|l| (l - 1) as u8))
        .collect();
    // counts[a * width + loops]: states with `a` A-smoothings and that many loops.
    let width = m + 2;
    let chunk_bits = n.min(10);
    let chunks = 1usize << (n - chunk_bits);
    let counts = exec.map_reduce(
        chunks,
        || vec![0u64; (n + 1) * width],
        |acc, hi| {
            let mut parent = [0u8; 4 * MAX_BRACKET_CROSSINGS];
            for lo in 0..1usize << chunk_bits {
                let state = hi << chunk_bits | lo;
                for (i, p) in parent[..m].iter_mut().enumerate() {
                    *p = i as u8;
                }
                let mut loops = m;
                for (x, s) in pairs.iter().enumerate() {
                    let (j0, j1) = if state >> x & 1 == 0 { ((0, 1), (2, 3)) } else { ((0, 3), (1, 2)) };
                    for (u, v) in [j0, j1] {
                        if union(&mut parent, s[u], s[v]) {
                            loops -= 1;
                        }
                    }
                }
                let a = n - state.count_ones() as usize;
                acc[a * width + loops] += 1;
            }
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    );
    let extra = d.unknotted_extras() as usize;
    let delta = LaurentPolynomial::from_terms([(2, -1), (-2, -1)]);
    let mut delta_pow = vec![LaurentPolynomial::one()];
    for k in 1..=width + extra {
        delta_pow.push(&delta_pow[k - 1] * &delta);
    }
    let mut total = LaurentPolynomial::zero();
    for a in 0..=n {
        for loops in 0..width {
            let c = counts[a * width + loops];
            if c == 0 {
                continue;
            }
            let term = LaurentPolynomial::monomial(a as i32 - (n - a) as i32, c as i64);
            // The crossingless state of an empty diagram has no loops.
            let k = (loops + extra).max(1) - 1;
            total = &total + &(&term * &delta_pow[k]);
        }
    }
    Ok(total)
}

fn union(parent: &mut [u8], a: u8, b: u8) -> bool {
    let find = |p: &mut [u8], mut x: u8| {
        while p[x as usize] != x {
            p[x as usize] = p[p[x as usize] as usize];
            x = p[x as usize];
        }
        x
    };
    let ra = find(parent, a);
    let rb = find(parent, b);
    if ra == rb {
        return false;
    }
    parent[ra.max(rb) as usize] = ra.min(rb);
    true
}

/// Sum of crossing signs of an oriented diagram.
pub fn writhe(d: &LinkDiagram) -> Result<i64, InvariantError> {
    if !d.is_oriented() {
        return Err(InvariantError::NotOriented);
    }
    Ok(d.writhe())
}

/// Jones polynomial `(-A^3)^(-w) <D>`, stored in `A` (see [`LaurentPolynomial::t_terms`]).
pub fn jones(d: &LinkDiagram) -> Result<LaurentPolynomial, InvariantError> {
    jones_with(d, Exec::default())
}

pub fn jones_with(d: &LinkDiagram, exec: Exec) -> Result<LaurentPolynomial, InvariantError> {
    let w = writhe(d)?;
    let b = kauffman_bracket_with(d, exec)?;
    let sign = if w % 2 == 0 { 1 } else { -1 };
    Ok(&b * &LaurentPolynomial::monomial(-3 * w as i32, sign))
}

/// Whether the coefficient sequence reads the same in both directions.
pub fn palindromic(p: &LaurentPolynomial) -> bool {
    p.is_palindromic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{braid_closure, parse_braid};
    use crate::diagram::parse_pd;

    fn t(s: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse_t(s).unwrap()
    }

    #[test]
    fn small_brackets() {
        assert_eq!(kauffman_bracket(&LinkDiagram::unlink(1)).unwrap(), LaurentPolynomial::one());
        assert_eq!(
            kauffman_bracket(&LinkDiagram::unlink(2)).unwrap(),
            LaurentPolynomial::from_terms([(2, -1), (-2, -1)])
        );
        let kink = braid_closure(&parse_braid("n=2 1").unwrap());
        assert_eq!(kink.writhe(), 1);
        assert_eq!(kauffman_bracket(&kink).unwrap(), LaurentPolynomial::monomial(3, -1));
        assert_eq!(jones(&kink).unwrap(), LaurentPolynomial::one());
    }

    #[test]
    fn trefoils() {
        let right = braid_closure(&parse_braid("n=2 1 1 1").unwrap());
        assert_eq!(jones(&right).unwrap(), t("-t^4 + t^3 + t"));
        let left = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]").unwrap().oriented();
        assert_eq!(jones(&left).unwrap(), t("-t^-4 + t^-3 + t^-1"));
        assert!(!palindromic(&jones(&left).unwrap()));
    }

    #[test]
    fn sequential_matches_parallel() {
        let d = braid_closure(&parse_braid("n=4 1 -2 3 1 -2 3 2 2 -1 3 -2 -1 3").unwrap());
        assert_eq!(
            kauffman_bracket_with(&d, Exec::Sequential).unwrap(),
            kauffman_bracket_with(&d, Exec::Parallel).unwrap()
        );
    }

    #[test]
    fn split_kinks() {
        // A kinked unknot beside a separate kink: more loops than crossings + 1.
        let d = parse_pd("PD[X[1,1,2,6],X[7,8,8,7],X[2,5,3,6],X[3,4,4,5]]").unwrap();
        assert_eq!(kauffman_bracket(&d).unwrap(), LaurentPolynomial::from_terms([(-4, -1), (-8, -1)]));
    }

    #[test]
    fn hopf_has_half_integer_exponents() {
        let hopf = braid_closure(&parse_braid("n=2 1 1").unwrap());
        assert_eq!(jones(&hopf).unwrap().to_string(), "-t^(1/2) - t^(5/2)");
    }
}
